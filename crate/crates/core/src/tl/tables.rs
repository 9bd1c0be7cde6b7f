use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Algorithm, TlAlgebra};
use crate::coxeter::{Filter, GroupElement, Side};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// The coefficients `p*(y, w)`, `q*(y, w)` and `M(y, w)` over all fully
/// commutative elements up to a length bound.
#[derive(Clone, Debug)]
pub struct CoeffTables {
    pub elems: Vec<GroupElement>,
    p_star: HashMap<(GroupElement, GroupElement), LaurentPoly>,
    q_star: HashMap<(GroupElement, GroupElement), LaurentPoly>,
}

impl CoeffTables {
    pub fn p_star(&self, y: &GroupElement, w: &GroupElement) -> LaurentPoly {
        self.p_star.get(&(y.clone(), w.clone())).cloned().unwrap_or_default()
    }

    pub fn q_star(&self, y: &GroupElement, w: &GroupElement) -> LaurentPoly {
        self.q_star.get(&(y.clone(), w.clone())).cloned().unwrap_or_default()
    }

    /// `p(y, w) = v^{ℓ(w)-ℓ(y)} p*(y, w)`.
    pub fn p(&self, y: &GroupElement, w: &GroupElement) -> LaurentPoly {
        self.p_star(y, w).shift(w.length() as i32 - y.length() as i32)
    }

    /// `q(y, w) = v^{ℓ(w)-ℓ(y)} q*(y, w)`.
    pub fn q(&self, y: &GroupElement, w: &GroupElement) -> LaurentPoly {
        self.q_star(y, w).shift(w.length() as i32 - y.length() as i32)
    }

    /// The coefficient of `v⁻¹` in `p*(y, w)`; zero for `y = w`.
    pub fn m(&self, y: &GroupElement, w: &GroupElement) -> i64 {
        self.p_star.get(&(y.clone(), w.clone())).map_or(0, |p| p.coeff_i64(-1))
    }

    /// `M̃(x, y)`: `M(x, y)` if `x ≤ y`, else `M(y, x)`.
    pub fn m_tilde(&self, x: &GroupElement, y: &GroupElement) -> i64 {
        if x == y {
            return 0;
        }
        self.m(x, y) + self.m(y, x)
    }

    /// TSV with columns `y, w, p*, q*, M` over pairs with `y <= w`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("y\tw\tp*\tq*\tM\n");
        for w in &self.elems {
            for y in &self.elems {
                let (p, q) = (self.p_star(y, w), self.q_star(y, w));
                if p.is_zero() && q.is_zero() {
                    continue;
                }
                let _ = writeln!(out, "{y}\t{w}\t{p}\t{q}\t{}", self.m(y, w));
            }
        }
        out
    }
}

/// The coefficient of `c_z` in `c_x c_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstant {
    pub x: GroupElement,
    pub y: GroupElement,
    pub z: GroupElement,
    pub coeff: LaurentPoly,
}

impl StructureConstant {
    pub fn is_positive(&self) -> bool {
        self.coeff.is_nonneg_delta()
    }
}

impl TlAlgebra {
    /// Every nonzero structure constant of the `c`-basis for `x, y` up to
    /// `bound`.
    pub fn structure_constants(&self, bound: usize) -> Result<Vec<StructureConstant>> {
        let elems = self.cox.enumerate(bound, Filter::FullyCommutative)?;
        let mut out = Vec::new();
        for x in &elems {
            for y in &elems {
                for (z, coeff) in self.c_mul(x, y)?.iter() {
                    out.push(StructureConstant { x: x.clone(), y: y.clone(), z: z.clone(), coeff: coeff.clone() });
                }
            }
        }
        Ok(out)
    }

    /// Builds the tables from the triangular canonical basis. `q*` is
    /// computed both by inverting the `p*` matrix and by the descent
    /// recurrence; any disagreement is an [`Error::Inconsistency`].
    pub fn coeff_tables(&self, bound: usize) -> Result<CoeffTables> {
        let cox = self.cox.clone();
        let elems = cox.enumerate(bound, Filter::FullyCommutative)?;
        let mut p_star = HashMap::new();
        for w in &elems {
            for (y, p) in self.canonical_basis(w, Algorithm::Triangular)?.iter() {
                p_star.insert((y.clone(), w.clone()), p.clone());
            }
        }
        let get_p = |y: &GroupElement, w: &GroupElement| p_star.get(&(y.clone(), w.clone()));

        // Inversion: Σ_z p*(x, z) Q(z, w) = δ_{x,w} with Q = ε_z ε_w q*.
        let mut q_inv: HashMap<(GroupElement, GroupElement), LaurentPoly> = HashMap::new();
        for w in &elems {
            let below = self.fc_below(w)?;
            let mut col: HashMap<GroupElement, LaurentPoly> = HashMap::new();
            col.insert(w.clone(), LaurentPoly::one());
            for x in below.iter().rev().skip(1) {
                let mut acc = LaurentPoly::zero();
                for (z, qz) in &col {
                    if let Some(p) = get_p(x, z) {
                        acc.add_mul(p, qz);
                    }
                }
                if !acc.is_zero() {
                    col.insert(x.clone(), -acc);
                }
            }
            for (x, qx) in col {
                let sign = x.sign() * w.sign();
                q_inv.insert((x, w.clone()), qx.scale(&sign.into()));
            }
        }

        let tables = CoeffTables { elems: elems.clone(), p_star, q_star: q_inv };

        // Recurrence on w = s·w' with s the smallest left descent.
        let mut q_rec: HashMap<(GroupElement, GroupElement), LaurentPoly> = HashMap::new();
        let q_of = |q: &HashMap<(GroupElement, GroupElement), LaurentPoly>, x: &GroupElement, w: &GroupElement| {
            q.get(&(x.clone(), w.clone())).cloned().unwrap_or_default()
        };
        for w in &elems {
            if w.is_identity() {
                q_rec.insert((w.clone(), w.clone()), LaurentPoly::one());
                continue;
            }
            let s = cox.descents(w, Side::Left).first().expect("descent");
            let wp = cox.mul_gen(w, s, Side::Left)?;
            let below_wp = self.fc_below(&wp)?;
            for x in self.fc_below(w)? {
                let q = if !cox.descents(&x, Side::Left).contains(s) {
                    q_of(&q_rec, &x, &wp)
                } else {
                    let sx = cox.mul_gen(&x, s, Side::Left)?;
                    let mut q = &q_of(&q_rec, &sx, &wp) - &q_of(&q_rec, &x, &wp).shift(2);
                    for y in &below_wp {
                        let m = tables.m(&x, y);
                        if m == 0 || cox.descents(y, Side::Left).contains(s) {
                            continue;
                        }
                        let k = y.length() as i32 + 1 - x.length() as i32;
                        q.add_mul(&LaurentPoly::monomial(m, k), &q_of(&q_rec, y, &wp));
                    }
                    q
                };
                if !q.is_zero() {
                    q_rec.insert((x, w.clone()), q);
                }
            }
        }
        for w in &elems {
            for x in self.fc_below(w)? {
                let via_rec = q_of(&q_rec, &x, w).shift(x.length() as i32 - w.length() as i32);
                let via_inv = tables.q_star(&x, w);
                if via_rec != via_inv {
                    return Err(Error::Inconsistency(format!(
                        "q*({x}, {w}): inversion gives {via_inv}, recurrence gives {via_rec}"
                    )));
                }
            }
        }
        Ok(tables)
    }

    /// Fully commutative elements of `[e, w]`, sorted.
    pub(crate) fn fc_below(&self, w: &GroupElement) -> Result<Vec<GroupElement>> {
        Ok(self
            .cox
            .lower_interval(w)?
            .into_iter()
            .filter(|x| self.cox.is_fully_commutative(x))
            .collect())
    }
}
