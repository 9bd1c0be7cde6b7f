use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Which side a generator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A group element stored as its ShortLex-least reduced word.
///
/// Values are only minted by [`Coxeter`](super::Coxeter), which guarantees
/// the word is reduced and canonical, so equality of elements is equality of
/// words. Ordering is length first, then lexicographic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(Arc<[u8]>);

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement(Arc::from(Vec::new()))
    }

    pub(crate) fn from_canonical(word: &[u8]) -> Self {
        GroupElement(Arc::from(word))
    }

    /// The canonical reduced word, 0-based generator indices.
    pub fn word(&self) -> &[u8] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// `(-1)^ℓ(w)`.
    pub fn sign(&self) -> i64 {
        if self.0.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders 1-based indices separated by spaces, `e` for the identity.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A set of generators as a bitmask (rank is at most 64).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn single(s: u8) -> Self {
        GenSet(1 << s)
    }

    pub fn pair(s: u8, t: u8) -> Self {
        GenSet((1 << s) | (1 << t))
    }

    pub fn contains(self, s: u8) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: u8) {
        self.0 |= 1 << s;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersect(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    /// Smallest member.
    pub fn first(self) -> Option<u8> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as u8)
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..64u8).filter(move |&s| self.contains(s))
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|s| s + 1)).finish()
    }
}

impl FromIterator<u8> for GenSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut set = GenSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}
