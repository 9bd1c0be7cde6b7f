use super::TlAlgebra;
use crate::combination::Combination;
use crate::coxeter::{Classification, Filter, Side};
use crate::error::Result;
use crate::report::Report;
use crate::star::graph_label;

/// The `Z[v⁻¹]`-lattices spanned by `t̃_w` for `w` in some subset of `W_c`
/// and by `v⁻¹ t̃_w` for the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// Every `t̃_w`.
    L,
    /// `t̃_w` with `sw < w`.
    LeftS(u8),
    /// `t̃_w` with `w = s·t·u` reduced.
    LeftSt(u8, u8),
}

impl TlAlgebra {
    pub fn lattice_membership(&self, x: &Combination, which: Lattice) -> Result<bool> {
        let cox = &self.cox;
        for (w, c) in x {
            if !c.in_a_minus() {
                return Ok(false);
            }
            let full = match which {
                Lattice::L => true,
                Lattice::LeftS(s) => cox.descents(w, Side::Left).contains(s),
                Lattice::LeftSt(s, t) => {
                    cox.descents(w, Side::Left).contains(s)
                        && cox.descents(&cox.mul_gen(w, s, Side::Left)?, Side::Left).contains(t)
                }
            };
            if !full && !c.in_v_inv_a_minus() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For every weakly complex `x` up to `bound`, the image of `T̃_x` lies
    /// in `v⁻¹ L`. Membership in `L_s` for the stripped descent is reported
    /// as a side note only.
    pub fn check_property_w(&self, bound: usize) -> Result<Report> {
        let cox = &self.cox;
        let mut report = Report::new("W", graph_label(cox.graph()), bound);
        let mut checked = 0;
        let mut side_failures = 0;
        for x in cox.enumerate(bound, Filter::All)? {
            if cox.classify(&x)? != Classification::WeaklyComplex {
                continue;
            }
            checked += 1;
            let tx = self.theta_basis(&x)?;
            if let Some((u, c)) = tx.iter().find(|(_, c)| !c.in_v_inv_a_minus()) {
                report.fail(&x, format!("coefficient of t[{u}] is {c}"));
            }
            for s in cox.descents(&x, Side::Left).iter() {
                let sx = cox.mul_gen(&x, s, Side::Left)?;
                if cox.is_fully_commutative(&sx) && !self.lattice_membership(&tx, Lattice::LeftS(s))? {
                    side_failures += 1;
                }
            }
        }
        report.note(format!("weakly complex elements checked: {checked}"));
        report.note(format!("left-descent lattice exceptions: {side_failures}"));
        Ok(report)
    }
}
