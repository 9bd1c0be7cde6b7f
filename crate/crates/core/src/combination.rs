//! Finitely supported linear combinations of group elements with Laurent
//! polynomial coefficients, and their text format.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt::Write as _;
use std::ops::{Add, Neg, Sub};

use crate::coxeter::{Coxeter, GroupElement};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// `Σ a_w · b_w` over a basis indexed by group elements. Zero coefficients
/// are never stored; iteration is in length-then-ShortLex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination {
    terms: BTreeMap<GroupElement, LaurentPoly>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: GroupElement) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: GroupElement, coeff: LaurentPoly) -> Self {
        let mut c = Self::zero();
        c.add_term(w, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, GroupElement, LaurentPoly> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms.keys()
    }

    pub fn get(&self, w: &GroupElement) -> Option<&LaurentPoly> {
        self.terms.get(w)
    }

    /// The coefficient of `w`, zero when absent.
    pub fn coeff(&self, w: &GroupElement) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The largest basis element in the support.
    pub fn leading(&self) -> Option<(&GroupElement, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: GroupElement, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Combination, k: &LaurentPoly) {
        if k.is_zero() {
            return;
        }
        for (w, c) in other.iter() {
            let p = if k.is_one() { c.clone() } else { c * k };
            self.add_term(w.clone(), p);
        }
    }

    pub fn scale(&self, k: &LaurentPoly) -> Combination {
        let mut out = Combination::zero();
        out.add_scaled(self, k);
        out
    }

    /// Applies the bar involution to the coefficients only.
    pub fn bar_coeffs(&self) -> Combination {
        Combination { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect() }
    }

    /// True when every coefficient satisfies `pred`.
    pub fn all_coeffs(&self, mut pred: impl FnMut(&GroupElement, &LaurentPoly) -> bool) -> bool {
        self.terms.iter().all(|(w, c)| pred(w, c))
    }

    /// Renders one `<coeff> * <label>[<word>]` line per term; `0` when empty.
    pub fn render(&self, label: &str) -> String {
        if self.is_zero() {
            return "0\n".to_owned();
        }
        let mut out = String::new();
        for (w, c) in self.iter() {
            if c.len() > 1 {
                let _ = writeln!(out, "({c}) * {label}[{w}]");
            } else {
                let _ = writeln!(out, "{c} * {label}[{w}]");
            }
        }
        out
    }

    /// Parses the output of [`render`](Self::render). Keys are reduced to
    /// canonical form through `cox`.
    pub fn parse(cox: &Coxeter, text: &str, label: &str) -> Result<Combination> {
        let mut out = Combination::zero();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if line == "0" {
                continue;
            }
            let bad = || Error::Parse(format!("bad term line {line:?}"));
            let (coeff, basis) = line.rsplit_once(" * ").ok_or_else(bad)?;
            let word = basis
                .strip_prefix(label)
                .and_then(|b| b.strip_prefix('['))
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(bad)?;
            let coeff = coeff.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coeff);
            out.add_term(cox.parse_element(word)?, coeff.parse()?);
        }
        Ok(out)
    }
}

impl FromIterator<(GroupElement, LaurentPoly)> for Combination {
    fn from_iter<I: IntoIterator<Item = (GroupElement, LaurentPoly)>>(iter: I) -> Self {
        let mut out = Combination::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl Add for &Combination {
    type Output = Combination;
    fn add(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl Sub for &Combination {
    type Output = Combination;
    fn sub(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::from(-1));
        out
    }
}

impl Neg for &Combination {
    type Output = Combination;
    fn neg(self) -> Combination {
        self.scale(&LaurentPoly::from(-1))
    }
}

impl<'a> IntoIterator for &'a Combination {
    type Item = (&'a GroupElement, &'a LaurentPoly);
    type IntoIter = btree_map::Iter<'a, GroupElement, LaurentPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
