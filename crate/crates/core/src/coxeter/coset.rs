use super::{Coxeter, GenSet, GroupElement, Side};
use crate::error::{Error, Result};

/// Where `w` sits in its coset of the rank-2 parabolic `W_I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CosetCase {
    /// `w_I = 1`.
    Minimal,
    /// `w_I` is the longest element of `W_I`.
    Maximal,
    /// `w` lies in the string whose `w_I` ends with the given generator
    /// (on the side next to `w^I`).
    String(u8),
}

/// `w = w_I · w^I` (left) or `w = w^I · w_I` (right) with lengths adding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub w_i: GroupElement,
    pub w_sup_i: GroupElement,
    pub side: Side,
    pub pair: (u8, u8),
    pub case: CosetCase,
}

impl Coxeter {
    /// Coset decomposition with respect to a noncommuting pair `I = {s, t}`.
    pub fn coset_decompose(&self, w: &GroupElement, pair: (u8, u8), side: Side) -> Result<CosetDecomposition> {
        let (s, t) = pair;
        if s == t || !self.graph().adjacent(s, t) {
            return Err(Error::Precondition(format!("generators {} and {} commute", s + 1, t + 1)));
        }
        let i = GenSet::pair(s, t);
        let mut rest = w.clone();
        let mut stripped = Vec::new();
        while let Some(r) = self.descents(&rest, side).intersect(i).first() {
            stripped.push(r);
            rest = self.mul_gen(&rest, r, side)?;
        }
        if side == Side::Right {
            stripped.reverse();
        }
        let w_i = self.normal_form(&stripped)?;
        let m = self.graph().m(s, t);
        let case = if stripped.is_empty() {
            CosetCase::Minimal
        } else if m.is_some_and(|m| m as usize == stripped.len()) {
            CosetCase::Maximal
        } else {
            // w_I is alternating; the letter adjacent to w^I keys the string.
            let inner = match side {
                Side::Left => stripped[stripped.len() - 1],
                Side::Right => stripped[0],
            };
            CosetCase::String(inner)
        };
        Ok(CosetDecomposition { w_i, w_sup_i: rest, side, pair, case })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_examples() {
        let b2 = Coxeter::preset("B2").unwrap();
        let ts = b2.parse_element("2 1").unwrap();
        let d = b2.coset_decompose(&ts, (0, 1), Side::Left).unwrap();
        assert_eq!(d.w_i, ts);
        assert!(d.w_sup_i.is_identity());
        assert_eq!(d.case, CosetCase::String(0));

        let a3 = Coxeter::preset("A3").unwrap();
        let w = a3.parse_element("2 1 3 2").unwrap();
        let d = a3.coset_decompose(&w, (0, 1), Side::Left).unwrap();
        assert_eq!(d.w_i.to_string(), "2 1");
        assert_eq!(d.w_sup_i.to_string(), "3 2");

        let d = a3.coset_decompose(&w, (1, 2), Side::Left).unwrap();
        assert_eq!(d.w_i.to_string(), "2 3");

        let s3 = a3.parse_element("3").unwrap();
        let d = a3.coset_decompose(&s3, (0, 1), Side::Left).unwrap();
        assert_eq!(d.case, CosetCase::Minimal);
        assert_eq!(d.w_sup_i, s3);

        let w0 = b2.parse_element("1 2 1 2").unwrap();
        assert_eq!(b2.coset_decompose(&w0, (0, 1), Side::Right).unwrap().case, CosetCase::Maximal);
        assert!(a3.coset_decompose(&w, (0, 2), Side::Left).is_err());
    }
}
