use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use super::{CoxeterGraph, GenSet, GroupElement, Side};
use crate::error::{Error, Result};

/// Default limit on the number of reduced words in one braid class.
pub const DEFAULT_CLOSURE_CAP: usize = 200_000;
/// Default limit on the number of elements an enumeration may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 50_000;

/// Which elements [`Coxeter::enumerate`] yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    FullyCommutative,
}

pub(crate) struct Info {
    pub(crate) elem: GroupElement,
    pub(crate) left: GenSet,
    pub(crate) right: GenSet,
    /// Every reduced word, sorted.
    pub(crate) words: Vec<Box<[u8]>>,
    pub(crate) fc: bool,
    lmul: Vec<OnceLock<GroupElement>>,
    rmul: Vec<OnceLock<GroupElement>>,
}

pub(crate) struct Interval {
    pub(crate) elems: Vec<GroupElement>,
    pub(crate) set: HashSet<GroupElement>,
}

/// A Coxeter group together with its word-problem caches.
///
/// Every [`GroupElement`] handled by the algebra layers is created here.
/// Caches only ever grow, and any two fills of the same entry agree, so the
/// context can be shared freely between threads.
pub struct Coxeter {
    graph: CoxeterGraph,
    closure_cap: usize,
    element_cap: usize,
    infos: RwLock<HashMap<Box<[u8]>, Arc<Info>>>,
    intervals: RwLock<HashMap<GroupElement, Arc<Interval>>>,
}

impl std::fmt::Debug for Coxeter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Coxeter").field("graph", &self.graph).finish_non_exhaustive()
    }
}

impl Coxeter {
    pub fn new(graph: CoxeterGraph) -> Self {
        Self::with_caps(graph, DEFAULT_CLOSURE_CAP, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_caps(graph: CoxeterGraph, closure_cap: usize, element_cap: usize) -> Self {
        Coxeter {
            graph,
            closure_cap,
            element_cap,
            infos: RwLock::new(HashMap::new()),
            intervals: RwLock::new(HashMap::new()),
        }
    }

    /// Shorthand for `Coxeter::new(CoxeterGraph::preset(name)?)`.
    pub fn preset(name: &str) -> Result<Self> {
        Ok(Self::new(CoxeterGraph::preset(name)?))
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn element_cap(&self) -> usize {
        self.element_cap
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity()
    }

    pub fn generator(&self, s: u8) -> Result<GroupElement> {
        self.normal_form(&[s])
    }

    /// Reduces an arbitrary word (0-based indices) to its canonical element.
    pub fn normal_form(&self, word: &[u8]) -> Result<GroupElement> {
        let mut w = GroupElement::identity();
        for &s in word {
            if s as usize >= self.rank() {
                return Err(Error::GeneratorOutOfRange { index: s as usize + 1, rank: self.rank() });
            }
            w = self.mul_gen(&w, s, Side::Right)?;
        }
        Ok(w)
    }

    /// Parses `e` or space-separated 1-based indices.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(GroupElement::identity());
        }
        let mut word = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator {tok:?} in {text:?}")))?;
            if i == 0 || i > self.rank() {
                return Err(Error::GeneratorOutOfRange { index: i, rank: self.rank() });
            }
            word.push((i - 1) as u8);
        }
        self.normal_form(&word)
    }

    /// `sw` or `ws`.
    pub fn mul_gen(&self, w: &GroupElement, s: u8, side: Side) -> Result<GroupElement> {
        let info = self.info(w)?;
        let cell = match side {
            Side::Left => &info.lmul[s as usize],
            Side::Right => &info.rmul[s as usize],
        };
        if let Some(x) = cell.get() {
            return Ok(x.clone());
        }
        let descends = match side {
            Side::Left => info.left.contains(s),
            Side::Right => info.right.contains(s),
        };
        let word: Vec<u8> = if descends {
            let found = info.words.iter().find(|u| match side {
                Side::Left => u[0] == s,
                Side::Right => u[u.len() - 1] == s,
            });
            let u = found.expect("descent letter occurs in some reduced word");
            match side {
                Side::Left => u[1..].to_vec(),
                Side::Right => u[..u.len() - 1].to_vec(),
            }
        } else {
            match side {
                Side::Left => std::iter::once(s).chain(w.word().iter().copied()).collect(),
                Side::Right => w.word().iter().copied().chain(std::iter::once(s)).collect(),
            }
        };
        let x = self.register(&word)?.elem.clone();
        let _ = cell.set(x.clone());
        Ok(x)
    }

    /// Product of two elements.
    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let mut w = x.clone();
        for &s in y.word() {
            w = self.mul_gen(&w, s, Side::Right)?;
        }
        Ok(w)
    }

    pub fn inverse(&self, w: &GroupElement) -> Result<GroupElement> {
        let rev: Vec<u8> = w.word().iter().rev().copied().collect();
        Ok(self.register(&rev)?.elem.clone())
    }

    pub fn descents(&self, w: &GroupElement, side: Side) -> GenSet {
        let info = self.info(w).expect("element registered");
        match side {
            Side::Left => info.left,
            Side::Right => info.right,
        }
    }

    /// All reduced words of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &GroupElement) -> Result<Vec<Vec<u8>>> {
        Ok(self.info(w)?.words.iter().map(|u| u.to_vec()).collect())
    }

    pub fn is_fully_commutative(&self, w: &GroupElement) -> bool {
        self.info(w).expect("element registered").fc
    }

    pub(crate) fn info(&self, w: &GroupElement) -> Result<Arc<Info>> {
        if let Some(info) = self.infos.read().unwrap().get(w.word()) {
            return Ok(info.clone());
        }
        self.register(w.word())
    }

    /// Looks up or inserts the class of a word known to be reduced.
    fn register(&self, word: &[u8]) -> Result<Arc<Info>> {
        if let Some(info) = self.infos.read().unwrap().get(word) {
            return Ok(info.clone());
        }
        let (words, fc) = self.braid_class(word)?;
        let mut left = GenSet::EMPTY;
        let mut right = GenSet::EMPTY;
        for u in &words {
            if let (Some(&a), Some(&b)) = (u.first(), u.last()) {
                left.insert(a);
                right.insert(b);
            }
        }
        let words: Vec<Box<[u8]>> = words.into_iter().map(Vec::into_boxed_slice).collect();
        let n = self.rank();
        let info = Arc::new(Info {
            elem: GroupElement::from_canonical(&words[0]),
            left,
            right,
            words,
            fc,
            lmul: (0..n).map(|_| OnceLock::new()).collect(),
            rmul: (0..n).map(|_| OnceLock::new()).collect(),
        });
        let mut map = self.infos.write().unwrap();
        if let Some(existing) = map.get(word) {
            return Ok(existing.clone());
        }
        for u in &info.words {
            map.insert(u.clone(), info.clone());
        }
        Ok(info)
    }

    /// All words reachable by braid moves, sorted, plus whether no move of
    /// length `m >= 3` ever applies (full commutativity).
    fn braid_class(&self, word: &[u8]) -> Result<(Vec<Vec<u8>>, bool)> {
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        let mut fc = true;
        while let Some(u) = queue.pop_front() {
            for i in 0..u.len().saturating_sub(1) {
                let (a, b) = (u[i], u[i + 1]);
                if a == b {
                    return Err(Error::Inconsistency(format!(
                        "word {u:?} registered as reduced but is not"
                    )));
                }
                let Some(m) = self.graph.m(a, b) else { continue };
                let m = m as usize;
                if i + m > u.len() {
                    continue;
                }
                let alternating = (0..m).all(|k| u[i + k] == if k % 2 == 0 { a } else { b });
                if !alternating {
                    continue;
                }
                if m >= 3 {
                    fc = false;
                }
                let mut next = u.clone();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { b } else { a };
                }
                if seen.insert(next.clone()) {
                    if seen.len() > self.closure_cap {
                        return Err(Error::ClosureCap { cap: self.closure_cap });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok((seen.into_iter().collect(), fc))
    }

    /// Every element (or fully commutative element) of length at most
    /// `bound`, in length-then-ShortLex order.
    pub fn enumerate(&self, bound: usize, filter: Filter) -> Result<Vec<GroupElement>> {
        let mut out = vec![GroupElement::identity()];
        let mut level = vec![GroupElement::identity()];
        for _ in 0..bound {
            let mut next = BTreeSet::new();
            for w in &level {
                let right = self.descents(w, Side::Right);
                for s in self.graph.generators() {
                    if right.contains(s) {
                        continue;
                    }
                    let ws = self.mul_gen(w, s, Side::Right)?;
                    if filter == Filter::FullyCommutative && !self.is_fully_commutative(&ws) {
                        continue;
                    }
                    next.insert(ws);
                }
            }
            if next.is_empty() {
                break;
            }
            if out.len() + next.len() > self.element_cap {
                return Err(Error::ElementCap { cap: self.element_cap });
            }
            level = next.into_iter().collect();
            out.extend(level.iter().cloned());
        }
        Ok(out)
    }

    /// The whole group (or `W_c`) when it is finite within the element cap.
    pub fn enumerate_all(&self, filter: Filter) -> Result<Vec<GroupElement>> {
        self.enumerate(usize::MAX, filter)
    }

    /// Length of the longest element, when the group is finite within the
    /// element cap.
    pub fn max_length(&self) -> Result<usize> {
        Ok(self.enumerate_all(Filter::All)?.last().map_or(0, GroupElement::length))
    }

    pub(crate) fn interval(&self, w: &GroupElement) -> Result<Arc<Interval>> {
        if let Some(iv) = self.intervals.read().unwrap().get(w) {
            return Ok(iv.clone());
        }
        let iv = if w.is_identity() {
            let e = GroupElement::identity();
            Interval { elems: vec![e.clone()], set: HashSet::from([e]) }
        } else {
            let word = w.word();
            let s = word[word.len() - 1];
            let prefix = self.register(&word[..word.len() - 1])?.elem.clone();
            let below = self.interval(&prefix)?;
            let mut set = below.set.clone();
            for u in &below.elems {
                set.insert(self.mul_gen(u, s, Side::Right)?);
            }
            let mut elems: Vec<GroupElement> = set.iter().cloned().collect();
            elems.sort();
            Interval { elems, set }
        };
        let iv = Arc::new(iv);
        self.intervals.write().unwrap().entry(w.clone()).or_insert_with(|| iv.clone());
        Ok(iv)
    }
}
