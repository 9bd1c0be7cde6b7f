use super::{Coxeter, GroupElement, Side};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    FullyCommutative,
    /// Complex, but `sw` is fully commutative for some left descent `s`.
    WeaklyComplex,
    ComplexOther,
}

/// A factorization `w = w1 · w2 · w3` in which every letter of `w1`
/// commutes with `s` and `w2` is the alternating word `t s t ...` of length
/// `m(s, t) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FcPrefix {
    pub w1: GroupElement,
    pub w2: GroupElement,
    pub w3: GroupElement,
    pub t: u8,
}

impl Coxeter {
    pub fn classify(&self, w: &GroupElement) -> Result<Classification> {
        if self.is_fully_commutative(w) {
            return Ok(Classification::FullyCommutative);
        }
        for s in self.descents(w, Side::Left).iter() {
            if self.is_fully_commutative(&self.mul_gen(w, s, Side::Left)?) {
                return Ok(Classification::WeaklyComplex);
            }
        }
        Ok(Classification::ComplexOther)
    }

    /// Locates the alternating factor that makes `sw` complex.
    ///
    /// Requires `w` fully commutative, `sw > w` and `sw` not fully
    /// commutative.
    pub fn decompose_fc_prefix(&self, w: &GroupElement, s: u8) -> Result<FcPrefix> {
        if !self.is_fully_commutative(w) {
            return Err(Error::NotFullyCommutative(w.to_string()));
        }
        if self.descents(w, Side::Left).contains(s) {
            return Err(Error::Precondition(format!("generator {} is a left descent of {w}", s + 1)));
        }
        let g = self.graph();
        for word in self.info(w)?.words.iter() {
            for p in 0..word.len() {
                if p > 0 && !g.commute(word[p - 1], s) {
                    break;
                }
                let t = word[p];
                let Some(m) = g.m(s, t) else { continue };
                let len = m as usize - 1;
                if m < 3 || p + len > word.len() {
                    continue;
                }
                if (0..len).all(|k| word[p + k] == if k % 2 == 0 { t } else { s }) {
                    return Ok(FcPrefix {
                        w1: self.normal_form(&word[..p])?,
                        w2: self.normal_form(&word[p..p + len])?,
                        w3: self.normal_form(&word[p + len..])?,
                        t,
                    });
                }
            }
        }
        Err(Error::Precondition(format!("{}·{w} is fully commutative", s + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let a2 = Coxeter::preset("A2").unwrap();
        let sts = a2.parse_element("1 2 1").unwrap();
        assert!(!a2.is_fully_commutative(&sts));
        assert_eq!(a2.classify(&sts).unwrap(), Classification::WeaklyComplex);
        let a3 = Coxeter::preset("A3").unwrap();
        let y = a3.parse_element("2 1 3 2").unwrap();
        assert_eq!(a3.classify(&y).unwrap(), Classification::FullyCommutative);
        let w0 = a3.parse_element("1 2 1 3 2 1").unwrap();
        assert_eq!(a3.classify(&w0).unwrap(), Classification::ComplexOther);
        let b2 = Coxeter::preset("B2").unwrap();
        assert!(b2.is_fully_commutative(&b2.parse_element("2 1 2").unwrap()));
    }

    #[test]
    fn fc_prefix_examples() {
        let a2 = Coxeter::preset("A2").unwrap();
        let d = a2.decompose_fc_prefix(&a2.parse_element("2 1").unwrap(), 0).unwrap();
        assert!(d.w1.is_identity() && d.w3.is_identity());
        assert_eq!(d.w2.to_string(), "2 1");
        assert_eq!(d.t, 1);

        let b2 = Coxeter::preset("B2").unwrap();
        let d = b2.decompose_fc_prefix(&b2.parse_element("2 1 2").unwrap(), 0).unwrap();
        assert_eq!((d.w2.to_string(), d.t), ("2 1 2".to_string(), 1));

        let a3 = Coxeter::preset("A3").unwrap();
        let d = a3.decompose_fc_prefix(&a3.parse_element("3 2 1").unwrap(), 0).unwrap();
        assert_eq!(d.w1.to_string(), "3");
        assert_eq!(d.w2.to_string(), "2 1");
        assert!(d.w3.is_identity());
        assert_eq!(d.t, 1);

        assert!(a3.decompose_fc_prefix(&a3.parse_element("1 2").unwrap(), 2).is_err());
    }
}
