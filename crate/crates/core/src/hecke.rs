//! The full Hecke algebra on small groups: products in the `T̃`-basis, the
//! bar involution, the Kazhdan–Lusztig basis and the projection onto
//! `TL(X)`. Used as an independent check on the quotient computations.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::combination::Combination;
use crate::coxeter::{Coxeter, Filter, GroupElement, Side};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::memo::Memo;
use crate::tl::TlAlgebra;

pub type HeckeElement = Combination;

pub struct HeckeAlgebra {
    cox: Arc<Coxeter>,
    tl: TlAlgebra,
    products: Memo<(GroupElement, GroupElement), Combination>,
    bars: Memo<GroupElement, Combination>,
    kl: Memo<GroupElement, Combination>,
}

impl HeckeAlgebra {
    pub fn new(cox: Arc<Coxeter>) -> Self {
        HeckeAlgebra {
            tl: TlAlgebra::new(cox.clone()),
            cox,
            products: Memo::new(),
            bars: Memo::new(),
            kl: Memo::new(),
        }
    }

    pub fn coxeter(&self) -> &Arc<Coxeter> {
        &self.cox
    }

    pub fn tl(&self) -> &TlAlgebra {
        &self.tl
    }

    pub fn one(&self) -> HeckeElement {
        Combination::basis(self.cox.identity())
    }

    /// `T̃_s · x` or `x · T̃_s`.
    pub fn h_mul_gen(&self, s: u8, x: &HeckeElement, side: Side) -> Result<HeckeElement> {
        let mut out = Combination::zero();
        for (w, c) in x {
            let sw = self.cox.mul_gen(w, s, side)?;
            if sw.length() < w.length() {
                out.add_term(w.clone(), c * &LaurentPoly::v_minus_v_inv());
            }
            out.add_term(sw, c.clone());
        }
        Ok(out)
    }

    /// `T̃_a · T̃_b`.
    pub fn mul_basis(&self, a: &GroupElement, b: &GroupElement) -> Result<Arc<HeckeElement>> {
        self.products.get_or_try(&(a.clone(), b.clone()), || {
            if a.is_identity() {
                return Ok(Combination::basis(b.clone()));
            }
            let s = a.word()[0];
            let rest = self.cox.mul_gen(a, s, Side::Left)?;
            self.h_mul_gen(s, &*self.mul_basis(&rest, b)?, Side::Left)
        })
    }

    pub fn h_mul(&self, x: &HeckeElement, y: &HeckeElement) -> Result<HeckeElement> {
        let mut out = Combination::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&*self.mul_basis(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `bar(T̃_w) = T̃_{w⁻¹}⁻¹`.
    pub fn bar_basis(&self, w: &GroupElement) -> Result<Arc<HeckeElement>> {
        self.bars.get_or_try(w, || {
            if w.is_identity() {
                return Ok(self.one());
            }
            let s = w.word()[0];
            let rest = self.bar_basis(&self.cox.mul_gen(w, s, Side::Left)?)?;
            let mut out = self.h_mul_gen(s, &rest, Side::Left)?;
            out.add_scaled(&rest, &-LaurentPoly::v_minus_v_inv());
            Ok(out)
        })
    }

    pub fn bar(&self, x: &HeckeElement) -> Result<HeckeElement> {
        let mut out = Combination::zero();
        for (w, c) in x {
            out.add_scaled(&*self.bar_basis(w)?, &c.bar());
        }
        Ok(out)
    }

    /// `C'_w = Σ_{y ≤ w} P*_{y,w} T̃_y`, solved top-down over `[e, w]`.
    pub fn kl_basis(&self, w: &GroupElement) -> Result<Arc<HeckeElement>> {
        self.kl.get_or_try(w, || {
            let below = self.cox.lower_interval(w)?;
            let mut coeffs = Combination::basis(w.clone());
            let mut bars: Vec<(Arc<Combination>, LaurentPoly)> = vec![(self.bar_basis(w)?, LaurentPoly::one())];
            for x in below.iter().rev().skip(1) {
                let mut rhs = LaurentPoly::zero();
                for (bar_y, bar_py) in &bars {
                    if let Some(r) = bar_y.get(x) {
                        rhs.add_mul(bar_py, r);
                    }
                }
                if !(&rhs + &rhs.bar()).is_zero() {
                    return Err(Error::Inconsistency(format!("bar-solve for C'_{w} at {x}: {rhs}")));
                }
                let px = LaurentPoly::from_terms(rhs.terms().filter(|(e, _)| *e < 0).map(|(e, c)| (e, c.clone())));
                if !px.is_zero() {
                    bars.push((self.bar_basis(x)?, px.bar()));
                    coeffs.add_term(x.clone(), px);
                }
            }
            Ok(coeffs)
        })
    }

    /// KL tables for every element of length at most `bound`, solved in
    /// length-then-ShortLex order.
    pub fn kl_tables(&self, bound: usize) -> Result<KlTables> {
        let elems = self.cox.enumerate(bound, Filter::All)?;
        let mut p_star = HashMap::new();
        for w in &elems {
            for (y, p) in self.kl_basis(w)?.iter() {
                p_star.insert((y.clone(), w.clone()), p.clone());
            }
        }
        Ok(KlTables { elems, p_star })
    }

    /// Rewrites `T̃`-coordinates in the `C'`-basis by peeling off the
    /// leading term.
    pub fn to_kl_basis(&self, x: &HeckeElement) -> Result<Combination> {
        let mut rest = x.clone();
        let mut out = Combination::zero();
        while let Some((z, a)) = rest.leading() {
            let (z, a) = (z.clone(), a.clone());
            rest.add_scaled(&*self.kl_basis(&z)?, &-a.clone());
            out.add_term(z, a);
        }
        Ok(out)
    }

    /// The form with `T̃`-basis orthonormal.
    pub fn h_form(&self, x: &HeckeElement, y: &HeckeElement) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (w, c) in x {
            if let Some(d) = y.get(w) {
                out.add_mul(c, d);
            }
        }
        out
    }

    /// The projection onto `TL(X)` in `t̃`-coordinates.
    pub fn theta(&self, x: &HeckeElement) -> Result<Combination> {
        let mut out = Combination::zero();
        for (w, c) in x {
            out.add_scaled(&*self.tl.theta_basis(w)?, c);
        }
        Ok(out)
    }

    /// Membership in the kernel of the projection.
    pub fn in_j(&self, x: &HeckeElement) -> Result<bool> {
        Ok(self.theta(x)?.is_zero())
    }
}

/// `P*_{y,w}` for all `y ≤ w` with `w` up to a length bound.
#[derive(Clone, Debug)]
pub struct KlTables {
    pub elems: Vec<GroupElement>,
    p_star: HashMap<(GroupElement, GroupElement), LaurentPoly>,
}

impl KlTables {
    pub fn p_star(&self, y: &GroupElement, w: &GroupElement) -> LaurentPoly {
        self.p_star.get(&(y.clone(), w.clone())).cloned().unwrap_or_default()
    }

    /// `P_{y,w}` as a polynomial in `v`; only even powers occur.
    pub fn p(&self, y: &GroupElement, w: &GroupElement) -> LaurentPoly {
        self.p_star(y, w).shift(w.length() as i32 - y.length() as i32)
    }

    /// Zero unless `y < w`.
    pub fn mu(&self, y: &GroupElement, w: &GroupElement) -> i64 {
        if y == w {
            return 0;
        }
        self.p_star.get(&(y.clone(), w.clone())).map_or(0, |p| p.coeff_i64(-1))
    }

    pub fn mu_tilde(&self, x: &GroupElement, y: &GroupElement) -> i64 {
        self.mu(x, y) + self.mu(y, x)
    }

    /// TSV with columns `y, w, P, mu` over pairs with `P ≠ 0`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("y\tw\tP\tmu\n");
        for w in &self.elems {
            for y in &self.elems {
                let p = self.p(y, w);
                if p.is_zero() {
                    continue;
                }
                let q = p.to_q_string().unwrap_or_else(|| p.to_string());
                let _ = writeln!(out, "{y}\t{w}\t{q}\t{}", self.mu(y, w));
            }
        }
        out
    }
}
