use super::{Algorithm, TlAlgebra};
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Coefficients of the Chebyshev polynomial of the second kind `P_n`,
/// lowest degree first: `P_0 = 1`, `P_1 = x`, `P_n = x P_{n-1} - P_{n-2}`.
pub fn chebyshev(n: usize) -> Vec<i64> {
    let mut prev: Vec<i64> = vec![1];
    if n == 0 {
        return prev;
    }
    let mut cur: Vec<i64> = vec![0, 1];
    for _ in 1..n {
        let mut next = vec![0; cur.len() + 1];
        for (k, c) in cur.iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Evaluates `(x P_i)^{s,t}` in `TL`, where `x^k` maps to the alternating
/// product `c_s c_t c_s ⋯` of `k` factors. For `0 <= i <= m - 2` this is the
/// canonical basis element of the alternating word of length `i + 1`
/// starting with `s`.
pub fn dihedral_cbasis(tl: &TlAlgebra, pair: (u8, u8), i: usize) -> Result<Combination> {
    let (s, t) = pair;
    let cox = tl.coxeter();
    let m = cox
        .graph()
        .m(s, t)
        .filter(|&m| m >= 3)
        .ok_or_else(|| Error::Precondition("pair must have a finite bond m >= 3".into()))?
        as usize;
    if i > m - 2 {
        return Err(Error::Precondition(format!("index {i} out of range 0..={}", m - 2)));
    }
    let cs = tl.canonical_basis(&cox.generator(s)?, Algorithm::Triangular)?;
    let ct = tl.canonical_basis(&cox.generator(t)?, Algorithm::Triangular)?;
    let coeffs = chebyshev(i);
    let mut power = tl.one();
    let mut out = Combination::zero();
    // x·P_i has coefficient coeffs[k] at x^{k+1}.
    for (k, &a) in coeffs.iter().enumerate() {
        let factor = if k % 2 == 0 { &cs } else { &ct };
        power = tl.t_mul(&power, factor)?;
        out.add_scaled(&power, &LaurentPoly::from(a));
    }
    Ok(out)
}
