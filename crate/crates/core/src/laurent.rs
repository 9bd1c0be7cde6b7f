//! Exact arithmetic in `Z[v, v^-1]`.
//!
//! [`LaurentPoly`] is a sparse exponent-to-coefficient map with
//! arbitrary-precision integer coefficients. Polynomials in `q = v^2` are
//! represented as Laurent polynomials supported on even exponents; there is
//! no separate type for them.
//!
//! The ring carries the bar involution `v <-> v^-1`. Its fixed points are
//! exactly `Z[δ]` for `δ = v + v^-1`, and [`LaurentPoly::to_delta_basis`]
//! recovers that expansion as a [`DeltaPoly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An element of `Z[v, v^-1]`.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `δ = v + v^-1`.
    pub fn delta() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    /// `v - v^-1`, the linear coefficient of the normalized quadratic relation.
    pub fn v_minus_v_inv() -> Self {
        Self::from_terms([(1, 1), (-1, -1)])
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `δ^k` as a Laurent polynomial.
    pub fn delta_pow(k: u32) -> Self {
        let mut binom = BigInt::one();
        let mut p = Self::zero();
        for j in 0..=k {
            p.add_term(k as i32 - 2 * j as i32, binom.clone());
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Coefficient of `v^n`, zero if absent.
    pub fn coeff(&self, n: i32) -> BigInt {
        self.terms.get(&n).cloned().unwrap_or_default()
    }

    /// Coefficient of `v^n` as a machine integer; panics if it does not fit.
    pub fn coeff_i64(&self, n: i32) -> i64 {
        i64::try_from(self.coeff(n)).expect("coefficient exceeds i64")
    }

    pub fn add_term(&mut self, exp: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += factor * other`, without materializing the product.
    pub fn add_mul(&mut self, factor: &LaurentPoly, other: &LaurentPoly) {
        for (e1, c1) in &factor.terms {
            for (e2, c2) in &other.terms {
                self.add_term(e1 + e2, c1 * c2);
            }
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// The bar involution `v^n -> v^-n`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Keeps the terms whose exponent has the given parity (0 or 1).
    pub fn homogenize(&self, parity: u8) -> Self {
        let parity = i32::from(parity & 1);
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.rem_euclid(2) == parity)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// True when every exponent has the given parity (the zero polynomial
    /// is homogeneous of both parities).
    pub fn is_homogeneous(&self, parity: u8) -> bool {
        let parity = i32::from(parity & 1);
        self.terms.keys().all(|e| e.rem_euclid(2) == parity)
    }

    /// Membership in `A^- = Z[v^-1]`.
    pub fn in_a_minus(&self) -> bool {
        self.max_exp().is_none_or(|e| e <= 0)
    }

    /// Membership in `v^-1 Z[v^-1]`.
    pub fn in_v_inv_a_minus(&self) -> bool {
        self.max_exp().is_none_or(|e| e <= -1)
    }

    /// All coefficients are nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The unique `Z[δ]`-expansion of a bar-invariant polynomial, or `None`
    /// when `self` is not bar-invariant.
    pub fn to_delta_basis(&self) -> Option<DeltaPoly> {
        if !self.is_bar_invariant() {
            return None;
        }
        let mut rest = self.clone();
        let mut coeffs: Vec<BigInt> = Vec::new();
        while let Some(top) = rest.max_exp() {
            if top < 0 {
                return None;
            }
            let c = rest.terms[&top].clone();
            let k = top as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] = c.clone();
            rest = rest - Self::delta_pow(top as u32).scale(&c);
            if !rest.is_bar_invariant() {
                return None;
            }
        }
        Some(DeltaPoly { coeffs })
    }

    /// Bar-invariant with every `δ`-coefficient nonnegative.
    pub fn is_nonneg_delta(&self) -> bool {
        self.to_delta_basis()
            .is_some_and(|d| d.coeffs.iter().all(|c| !c.is_negative()))
    }

    /// Renders as a polynomial in `q = v^2` in ascending degree, e.g.
    /// `1 + q`. Returns `None` if some exponent is odd.
    pub fn to_q_string(&self) -> Option<String> {
        if !self.is_homogeneous(0) {
            return None;
        }
        if self.is_zero() {
            return Some("0".to_owned());
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            write_term(&mut out, i == 0, c, e / 2, "q");
        }
        Some(out)
    }
}

fn write_term(out: &mut String, first: bool, c: &BigInt, exp: i32, var: &str) {
    use std::fmt::Write;
    let mag = c.abs();
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if exp == 0 {
        write!(out, "{mag}").unwrap();
        return;
    }
    if !mag.is_one() {
        write!(out, "{mag}").unwrap();
    }
    out.push_str(var);
    if exp != 1 {
        write!(out, "^{exp}").unwrap();
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending exponent order, e.g. `v^-1 + 3v^-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            write_term(&mut out, i == 0, c, *e, "v");
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the rendered grammar plus a few lenient forms: `3*v^2`,
    /// `v^1`, and arbitrary whitespace.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::Parse(format!("laurent polynomial {s:?}: {why}"));
        let glued = s
            .split_whitespace()
            .collect::<Vec<_>>()
            .windows(2)
            .any(|w| w[0].ends_with(|c: char| c.is_ascii_digit()) && w[1].starts_with(|c: char| c.is_ascii_digit()));
        if glued {
            return Err(bad("whitespace inside a number"));
        }
        let compact: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Self::zero();
        let mut i = 0;
        while i < compact.len() {
            let mut negative = false;
            if compact[i] == '+' || compact[i] == '-' {
                negative = compact[i] == '-';
                i += 1;
            } else if i != 0 {
                return Err(bad("expected sign between terms"));
            }
            let start = i;
            while i < compact.len() && compact[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = compact[start..i].iter().collect();
            let mut coeff = if digits.is_empty() {
                None
            } else {
                Some(digits.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?)
            };
            if i < compact.len() && compact[i] == '*' {
                if coeff.is_none() {
                    return Err(bad("'*' without coefficient"));
                }
                i += 1;
                if i >= compact.len() || compact[i] != 'v' {
                    return Err(bad("expected 'v' after '*'"));
                }
            }
            let exp = if i < compact.len() && compact[i] == 'v' {
                i += 1;
                if i < compact.len() && compact[i] == '^' {
                    i += 1;
                    let es = i;
                    if i < compact.len() && compact[i] == '-' {
                        i += 1;
                    }
                    while i < compact.len() && compact[i].is_ascii_digit() {
                        i += 1;
                    }
                    let e: String = compact[es..i].iter().collect();
                    e.parse::<i32>().map_err(|_| bad("bad exponent"))?
                } else {
                    1
                }
            } else {
                if coeff.is_none() {
                    return Err(bad("empty term"));
                }
                0
            };
            let c = coeff.take().unwrap_or_else(BigInt::one);
            out.add_term(exp, if negative { -c } else { c });
        }
        Ok(out)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

/// A polynomial in `δ = v + v^-1`; index `k` holds the coefficient of `δ^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaPoly {
    coeffs: Vec<BigInt>,
}

impl DeltaPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| i64::try_from(c).expect("coefficient exceeds i64"))
            .collect()
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += LaurentPoly::delta_pow(k as u32).scale(c);
            }
        }
        out
    }
}

impl fmt::Display for DeltaPoly {
    /// Descending powers, e.g. `δ^2 + 2δ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(&mut out, first, c, k as i32, "δ");
            first = false;
        }
        if first {
            out.push('0');
        }
        f.write_str(&out)
    }
}
