//! The generalized Temperley–Lieb algebra `TL(X)`: arithmetic in the
//! `t̃`-basis, the bar involution, the canonical `c`-basis and the
//! coefficient tables built from it.

mod canonical;
mod dihedral;
mod lattice;
mod tables;

use std::fmt;
use std::sync::Arc;

pub use canonical::Algorithm;
pub use dihedral::{chebyshev, dihedral_cbasis};
pub use lattice::Lattice;
pub use tables::{CoeffTables, StructureConstant};

use crate::combination::Combination;
use crate::coxeter::{Coxeter, GroupElement, Side};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::memo::Memo;

/// Which basis a [`TlElement`]'s coordinates refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TlBasis {
    T,
    C,
}

impl TlBasis {
    fn label(self) -> &'static str {
        match self {
            TlBasis::T => "t",
            TlBasis::C => "c",
        }
    }
}

/// An element of `TL(X)` in `t̃`- or `c`-coordinates, keyed by fully
/// commutative elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement {
    pub basis: TlBasis,
    pub coords: Combination,
}

impl TlElement {
    pub fn t(coords: Combination) -> Self {
        TlElement { basis: TlBasis::T, coords }
    }

    pub fn c(coords: Combination) -> Self {
        TlElement { basis: TlBasis::C, coords }
    }

    /// Parses lines `<coeff> * t[<word>]` or `<coeff> * c[<word>]`; the
    /// basis is taken from the first line.
    pub fn parse(cox: &Coxeter, text: &str) -> Result<Self> {
        let basis = if text.contains("* c[") { TlBasis::C } else { TlBasis::T };
        Ok(TlElement { basis, coords: Combination::parse(cox, text, basis.label())? })
    }
}

impl fmt::Display for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coords.render(self.basis.label()))
    }
}

/// `TL(X)` over a shared Coxeter context. All products are memoized per
/// pair of basis elements.
pub struct TlAlgebra {
    cox: Arc<Coxeter>,
    gen_left: Memo<(u8, GroupElement), Combination>,
    products: Memo<(GroupElement, GroupElement), Combination>,
    bars: Memo<GroupElement, Combination>,
    c_tri: Memo<GroupElement, Combination>,
    c_rec: Memo<GroupElement, Combination>,
}

impl TlAlgebra {
    pub fn new(cox: Arc<Coxeter>) -> Self {
        TlAlgebra {
            cox,
            gen_left: Memo::new(),
            products: Memo::new(),
            bars: Memo::new(),
            c_tri: Memo::new(),
            c_rec: Memo::new(),
        }
    }

    pub fn coxeter(&self) -> &Arc<Coxeter> {
        &self.cox
    }

    pub fn one(&self) -> Combination {
        Combination::basis(self.cox.identity())
    }

    /// `t̃_s · t̃_w` (or `t̃_w · t̃_s`) for fully commutative `w`.
    pub fn t_gen_basis(&self, s: u8, w: &GroupElement, side: Side) -> Result<Arc<Combination>> {
        match side {
            Side::Left => self.gen_left.get_or_try(&(s, w.clone()), || self.compute_gen_left(s, w)),
            Side::Right => {
                let inv = self.cox.inverse(w)?;
                let left = self.t_gen_basis(s, &inv, Side::Left)?;
                Ok(Arc::new(self.star_involution(&left)?))
            }
        }
    }

    fn compute_gen_left(&self, s: u8, w: &GroupElement) -> Result<Combination> {
        let cox = &self.cox;
        if !cox.is_fully_commutative(w) {
            return Err(Error::NotFullyCommutative(w.to_string()));
        }
        let sw = cox.mul_gen(w, s, Side::Left)?;
        if sw.length() < w.length() {
            let mut out = Combination::basis(sw);
            out.add_term(w.clone(), LaurentPoly::v_minus_v_inv());
            return Ok(out);
        }
        if cox.is_fully_commutative(&sw) {
            return Ok(Combination::basis(sw));
        }
        // sw = w1 · w_st · w3 with w_st the longest element of <s, t>;
        // substitute t̃_{w_st} = -Σ_{u < w_st} v^{ℓ(u)-m} t̃_u.
        let d = cox.decompose_fc_prefix(w, s)?;
        let m = cox
            .graph()
            .m(s, d.t)
            .ok_or_else(|| Error::Inconsistency(format!("rewrite at {w} needs an infinite bond")))?
            as i32;
        let mut out = Combination::zero();
        for u in self.dihedral_below_longest(s, d.t)? {
            let tail = self.mul_word_left(u.word(), &Combination::basis(d.w3.clone()))?;
            let full = self.mul_word_left(d.w1.word(), &tail)?;
            out.add_scaled(&full, &LaurentPoly::monomial(-1, u.length() as i32 - m));
        }
        Ok(out)
    }

    /// Elements of the finite parabolic `<s, t>` other than its longest.
    fn dihedral_below_longest(&self, s: u8, t: u8) -> Result<Vec<GroupElement>> {
        let m = self.cox.graph().m(s, t).expect("finite bond") as usize;
        let mut out = vec![self.cox.identity()];
        for len in 1..m {
            for first in [s, t] {
                let other = if first == s { t } else { s };
                let word: Vec<u8> = (0..len).map(|k| if k % 2 == 0 { first } else { other }).collect();
                out.push(self.cox.normal_form(&word)?);
            }
        }
        Ok(out)
    }

    /// `t̃_s · x` or `x · t̃_s`.
    pub fn t_mul_gen(&self, s: u8, x: &Combination, side: Side) -> Result<Combination> {
        let mut out = Combination::zero();
        for (w, c) in x {
            out.add_scaled(&*self.t_gen_basis(s, w, side)?, c);
        }
        Ok(out)
    }

    /// `t̃_{s_1} ⋯ t̃_{s_k} · x`, reducing the rightmost factor first.
    pub fn mul_word_left(&self, word: &[u8], x: &Combination) -> Result<Combination> {
        let mut y = x.clone();
        for &s in word.iter().rev() {
            y = self.t_mul_gen(s, &y, Side::Left)?;
        }
        Ok(y)
    }

    /// The image of `T̃_a` times `t̃_b`: the product of `t̃` along the
    /// canonical word of `a` (any element), applied to `t̃_b`.
    pub fn mul_basis(&self, a: &GroupElement, b: &GroupElement) -> Result<Arc<Combination>> {
        self.products.get_or_try(&(a.clone(), b.clone()), || {
            if a.is_identity() {
                return Ok(Combination::basis(b.clone()));
            }
            let s = a.word()[0];
            let rest = self.cox.mul_gen(a, s, Side::Left)?;
            self.t_mul_gen(s, &*self.mul_basis(&rest, b)?, Side::Left)
        })
    }

    /// The projection of `T̃_w` for any `w`, which is `t̃_w` when `w` is
    /// fully commutative.
    pub fn theta_basis(&self, w: &GroupElement) -> Result<Arc<Combination>> {
        self.mul_basis(w, &self.cox.identity())
    }

    pub fn t_mul(&self, x: &Combination, y: &Combination) -> Result<Combination> {
        let mut out = Combination::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&*self.mul_basis(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `bar(t̃_w)`, the product over the word of `w` of `t̃_s - (v - v⁻¹)`.
    pub fn bar_basis(&self, w: &GroupElement) -> Result<Arc<Combination>> {
        self.bars.get_or_try(w, || {
            if w.is_identity() {
                return Ok(self.one());
            }
            let s = w.word()[0];
            let rest = self.bar_basis(&self.cox.mul_gen(w, s, Side::Left)?)?;
            let mut out = self.t_mul_gen(s, &rest, Side::Left)?;
            out.add_scaled(&rest, &-LaurentPoly::v_minus_v_inv());
            Ok(out)
        })
    }

    pub fn bar(&self, x: &Combination) -> Result<Combination> {
        let mut out = Combination::zero();
        for (w, c) in x {
            out.add_scaled(&*self.bar_basis(w)?, &c.bar());
        }
        Ok(out)
    }

    /// The anti-involution `t̃_w ↦ t̃_{w⁻¹}`, coefficients untouched. It
    /// sends `c_w` to `c_{w⁻¹}` as well.
    pub fn star_involution(&self, x: &Combination) -> Result<Combination> {
        let mut out = Combination::zero();
        for (w, c) in x {
            out.add_term(self.cox.inverse(w)?, c.clone());
        }
        Ok(out)
    }

    /// Rewrites `t̃`-coordinates in the `c`-basis by peeling off the
    /// leading term.
    pub fn to_c_basis(&self, x: &Combination) -> Result<Combination> {
        let mut rest = x.clone();
        let mut out = Combination::zero();
        while let Some((z, a)) = rest.leading() {
            let (z, a) = (z.clone(), a.clone());
            let cz = self.canonical_basis(&z, Algorithm::Triangular)?;
            rest.add_scaled(&cz, &-a.clone());
            out.add_term(z, a);
        }
        Ok(out)
    }

    /// `c`-coordinates back to `t̃`-coordinates.
    pub fn from_c_basis(&self, x: &Combination) -> Result<Combination> {
        let mut out = Combination::zero();
        for (w, c) in x {
            out.add_scaled(&*self.canonical_basis(w, Algorithm::Triangular)?, c);
        }
        Ok(out)
    }

    /// `c_x · c_y` expanded in the `c`-basis.
    pub fn c_mul(&self, x: &GroupElement, y: &GroupElement) -> Result<Combination> {
        let cx = self.canonical_basis(x, Algorithm::Triangular)?;
        let cy = self.canonical_basis(y, Algorithm::Triangular)?;
        self.to_c_basis(&self.t_mul(&cx, &cy)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Filter;

    fn alg(name: &str) -> TlAlgebra {
        TlAlgebra::new(Arc::new(Coxeter::preset(name).unwrap()))
    }

    fn el(a: &TlAlgebra, w: &str) -> GroupElement {
        a.coxeter().parse_element(w).unwrap()
    }

    fn t(a: &TlAlgebra, w: &str) -> Combination {
        Combination::basis(el(a, w))
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let a = alg("A2");
        let got = a.t_mul(&t(&a, "1"), &t(&a, "1")).unwrap();
        let mut want = t(&a, "e");
        want.add_term(el(&a, "1"), p("v - v^-1"));
        assert_eq!(got, want);
    }

    #[test]
    fn rewrite_in_a2() {
        let a = alg("A2");
        let got = a.t_mul(&t(&a, "1"), &t(&a, "2 1")).unwrap();
        let want: Combination = [
            ("1 2", "-v^-1"),
            ("2 1", "-v^-1"),
            ("1", "-v^-2"),
            ("2", "-v^-2"),
            ("e", "-v^-3"),
        ]
        .into_iter()
        .map(|(w, c)| (el(&a, w), p(c)))
        .collect();
        assert_eq!(got, want);
        assert_eq!(a.t_mul(&t(&a, "1"), &t(&a, "2")).unwrap(), t(&a, "1 2"));
    }

    #[test]
    fn associativity_and_identity() {
        let a = alg("A2");
        let (s, tt) = (t(&a, "1"), t(&a, "2"));
        let lhs = a.t_mul(&a.t_mul(&s, &tt).unwrap(), &s).unwrap();
        let rhs = a.t_mul(&s, &a.t_mul(&tt, &s).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let x = a.t_mul(&t(&a, "1 2"), &t(&a, "2 1")).unwrap();
        assert!(x.support().all(|w| a.coxeter().is_fully_commutative(w)));
        assert_eq!(a.t_mul(&x, &a.one()).unwrap(), x);
    }

    #[test]
    fn bar_examples() {
        let a = alg("A3");
        assert_eq!(a.bar(&a.one()).unwrap(), a.one());
        let mut want = t(&a, "1");
        want.add_term(el(&a, "e"), p("-v + v^-1"));
        assert_eq!(a.bar(&t(&a, "1")).unwrap(), want);
        let y = t(&a, "2 1 3 2");
        assert_eq!(a.bar(&a.bar(&y).unwrap()).unwrap(), y);
    }

    #[test]
    fn star_examples() {
        let a = alg("A2");
        assert_eq!(a.star_involution(&t(&a, "1 2")).unwrap(), t(&a, "2 1"));
        let x = a.t_mul(&t(&a, "1 2"), &t(&a, "1")).unwrap();
        let y = a.t_mul(&t(&a, "1"), &t(&a, "2 1")).unwrap();
        assert_eq!(a.star_involution(&x).unwrap(), y);
    }

    #[test]
    fn c_products() {
        let a = alg("A2");
        let delta = LaurentPoly::delta();
        let s = el(&a, "1");
        assert_eq!(a.c_mul(&s, &s).unwrap(), Combination::term(s.clone(), delta));
        assert_eq!(a.c_mul(&s, &el(&a, "2")).unwrap(), Combination::basis(el(&a, "1 2")));
        assert_eq!(a.c_mul(&s, &el(&a, "2 1")).unwrap(), Combination::basis(s.clone()));
    }

    #[test]
    fn basis_conversion_round_trips() {
        let a = alg("B3");
        for w in a.coxeter().enumerate(5, Filter::FullyCommutative).unwrap() {
            let x = Combination::basis(w);
            assert_eq!(a.from_c_basis(&a.to_c_basis(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn element_text_round_trip() {
        let a = alg("A3");
        let c = a.canonical_basis(&el(&a, "2 1 3 2"), Algorithm::Triangular).unwrap();
        let e = TlElement::t((*c).clone());
        assert_eq!(TlElement::parse(a.coxeter(), &e.to_string()).unwrap(), e);
        let e = TlElement::c(Combination::basis(el(&a, "2")));
        assert_eq!(e.to_string(), "1 * c[2]\n");
        assert_eq!(TlElement::parse(a.coxeter(), &e.to_string()).unwrap(), e);
    }
}
