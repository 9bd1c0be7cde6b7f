use std::collections::HashMap;
use std::sync::Arc;

use super::TlAlgebra;
use crate::combination::Combination;
use crate::coxeter::{GroupElement, Side};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// How to compute a canonical basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Unitriangular bar-solve over the Bruhat interval below `w`.
    Triangular,
    /// `c_w = c_s c_{sw} - Σ_{sy<y} M(y, sw) c_y` with `s` the smallest left
    /// descent. Requires Property W.
    Recursion,
}

impl TlAlgebra {
    /// The canonical basis element `c_w`, in `t̃`-coordinates.
    pub fn canonical_basis(&self, w: &GroupElement, algorithm: Algorithm) -> Result<Arc<Combination>> {
        if !self.cox.is_fully_commutative(w) {
            return Err(Error::NotFullyCommutative(w.to_string()));
        }
        match algorithm {
            Algorithm::Triangular => self.c_tri.get_or_try(w, || self.triangular(w)),
            Algorithm::Recursion => self.c_rec.get_or_try(w, || self.recursion(w)),
        }
    }

    fn triangular(&self, w: &GroupElement) -> Result<Combination> {
        let below: Vec<GroupElement> = self
            .cox
            .lower_interval(w)?
            .into_iter()
            .filter(|x| self.cox.is_fully_commutative(x))
            .collect();
        let mut coeffs: HashMap<GroupElement, LaurentPoly> = HashMap::new();
        coeffs.insert(w.clone(), LaurentPoly::one());
        // bar(c_w) = c_w read at t̃_x: p_x - bar(p_x) = Σ_{y > x} bar(p_y) r_{x,y}.
        let mut bars: Vec<(Arc<Combination>, LaurentPoly)> =
            vec![(self.bar_basis(w)?, LaurentPoly::one())];
        for x in below.iter().rev().skip(1) {
            let mut rhs = LaurentPoly::zero();
            for (bar_y, bar_py) in &bars {
                if let Some(r) = bar_y.get(x) {
                    rhs.add_mul(bar_py, r);
                }
            }
            if !(&rhs + &rhs.bar()).is_zero() {
                return Err(Error::Inconsistency(format!(
                    "bar-solve for c_{w} at {x}: {rhs} is not antisymmetric"
                )));
            }
            let px = LaurentPoly::from_terms(rhs.terms().filter(|(e, _)| *e < 0).map(|(e, c)| (e, c.clone())));
            if !px.is_zero() {
                bars.push((self.bar_basis(x)?, px.bar()));
                coeffs.insert(x.clone(), px);
            }
        }
        let c: Combination = coeffs.into_iter().collect();
        if self.bar(&c)? != c {
            return Err(Error::Inconsistency(format!("triangular c_{w} is not bar invariant")));
        }
        Ok(c)
    }

    fn recursion(&self, w: &GroupElement) -> Result<Combination> {
        let cox = &self.cox;
        if w.is_identity() {
            return Ok(self.one());
        }
        let s = cox.descents(w, Side::Left).first().expect("nonidentity has a descent");
        let rest = cox.mul_gen(w, s, Side::Left)?;
        if rest.is_identity() {
            let mut c = Combination::basis(w.clone());
            c.add_term(cox.identity(), LaurentPoly::monomial(1, -1));
            return Ok(c);
        }
        let cs = self.canonical_basis(&cox.generator(s)?, Algorithm::Recursion)?;
        let c_rest = self.canonical_basis(&rest, Algorithm::Recursion)?;
        let mut c = self.t_mul(&cs, &c_rest)?;
        for (y, p) in c_rest.iter() {
            let m = p.coeff(-1);
            if y == &rest || m == 0.into() || !cox.descents(y, Side::Left).contains(s) {
                continue;
            }
            let cy = self.canonical_basis(y, Algorithm::Recursion)?;
            c.add_scaled(&cy, &LaurentPoly::monomial(-m, 0));
        }
        let ok = c.all_coeffs(|y, p| if y == w { p.is_one() } else { p.in_v_inv_a_minus() });
        if !ok || c.get(w).is_none() {
            return Err(Error::PropertyW(w.to_string()));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{Coxeter, Filter};

    #[test]
    fn small_examples() {
        let a = TlAlgebra::new(Arc::new(Coxeter::preset("A3").unwrap()));
        let cox = a.coxeter().clone();
        for alg in [Algorithm::Triangular, Algorithm::Recursion] {
            assert_eq!(*a.canonical_basis(&cox.identity(), alg).unwrap(), a.one());
            let s = cox.parse_element("1").unwrap();
            let mut cs = Combination::basis(s.clone());
            cs.add_term(cox.identity(), LaurentPoly::monomial(1, -1));
            assert_eq!(*a.canonical_basis(&s, alg).unwrap(), cs);
            let y = cox.parse_element("2 1 3 2").unwrap();
            let cy = a.canonical_basis(&y, alg).unwrap();
            assert_eq!(cy.coeff(&cox.parse_element("2").unwrap()).coeff_i64(-1), 1);
        }
    }

    #[test]
    fn algorithms_agree() {
        for name in ["A3", "B3", "I2(5)", "D4"] {
            let a = TlAlgebra::new(Arc::new(Coxeter::preset(name).unwrap()));
            for w in a.coxeter().enumerate_all(Filter::FullyCommutative).unwrap() {
                let tri = a.canonical_basis(&w, Algorithm::Triangular).unwrap();
                let rec = a.canonical_basis(&w, Algorithm::Recursion).unwrap();
                assert_eq!(tri, rec, "{name} {w}");
            }
        }
    }

    #[test]
    fn rejects_non_fc() {
        let a = TlAlgebra::new(Arc::new(Coxeter::preset("A2").unwrap()));
        let sts = a.coxeter().parse_element("1 2 1").unwrap();
        assert!(matches!(a.canonical_basis(&sts, Algorithm::Triangular), Err(Error::NotFullyCommutative(_))));
    }
}
