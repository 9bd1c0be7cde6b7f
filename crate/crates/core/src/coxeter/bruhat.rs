use super::{Coxeter, GroupElement};
use crate::error::Result;

impl Coxeter {
    /// Bruhat order, via the subword property.
    pub fn bruhat_leq(&self, x: &GroupElement, w: &GroupElement) -> Result<bool> {
        if x.length() > w.length() {
            return Ok(false);
        }
        if x.length() == w.length() {
            return Ok(x == w);
        }
        Ok(self.interval(w)?.set.contains(x))
    }

    /// The lower interval `[e, w]`, sorted length-then-ShortLex.
    pub fn lower_interval(&self, w: &GroupElement) -> Result<Vec<GroupElement>> {
        Ok(self.interval(w)?.elems.clone())
    }

    /// `[x, w]`, sorted.
    pub fn bruhat_interval(&self, x: &GroupElement, w: &GroupElement) -> Result<Vec<GroupElement>> {
        let mut out = Vec::new();
        for y in self.interval(w)?.elems.iter() {
            if self.bruhat_leq(x, y)? {
                out.push(y.clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::Filter;
    use super::*;

    #[test]
    fn bruhat_examples() {
        let a3 = Coxeter::preset("A3").unwrap();
        let s1 = a3.parse_element("1").unwrap();
        let s2 = a3.parse_element("2").unwrap();
        let y = a3.parse_element("2 1 3 2").unwrap();
        assert!(a3.bruhat_leq(&s2, &y).unwrap());
        assert!(a3.bruhat_leq(&y, &y).unwrap());
        assert!(!a3.bruhat_leq(&s1, &s2).unwrap());
        assert!(!a3.bruhat_leq(&y, &s2).unwrap());
    }

    #[test]
    fn interval_sizes() {
        let a3 = Coxeter::preset("A3").unwrap();
        let all = a3.enumerate_all(Filter::All).unwrap();
        let w0 = all.last().unwrap();
        assert_eq!(a3.lower_interval(w0).unwrap().len(), 24);
        let y = a3.parse_element("2 1 3 2").unwrap();
        let brute: Vec<_> = all
            .iter()
            .filter(|x| {
                a3.reduced_words(x).unwrap().iter().any(|u| is_subword(u, y.word()))
            })
            .cloned()
            .collect();
        assert_eq!(a3.lower_interval(&y).unwrap(), brute);
    }

    fn is_subword(x: &[u8], u: &[u8]) -> bool {
        let mut it = u.iter();
        x.iter().all(|a| it.any(|b| b == a))
    }
}
