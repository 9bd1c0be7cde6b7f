use std::fmt;

use crate::error::{Error, Result};

/// A Temperley–Lieb diagram on `strands` strands together with the number
/// of closed loops removed so far.
///
/// Boundary points `0..n` are on the north edge and `n..2n` on the south
/// edge, left to right; `partner[p]` is the point joined to `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    strands: usize,
    partner: Vec<usize>,
    pub loops: u32,
}

impl PlanarDiagram {
    pub fn identity(strands: usize) -> Self {
        let partner = (0..2 * strands).map(|p| (p + strands) % (2 * strands)).collect();
        PlanarDiagram { strands, partner, loops: 0 }
    }

    /// `E_i` for `1 <= i < strands`: a cap joining north `i, i+1` and a cup
    /// joining south `i, i+1`.
    pub fn generator(i: usize, strands: usize) -> Result<Self> {
        if i == 0 || i >= strands {
            return Err(Error::Precondition(format!("E_{i} needs 1 <= i < {strands}")));
        }
        let mut d = Self::identity(strands);
        let (a, b) = (i - 1, i);
        let n = strands;
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[n + a] = n + b;
        d.partner[n + b] = n + a;
        Ok(d)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    /// `self` stacked on top of `other`.
    pub fn mul(&self, other: &PlanarDiagram) -> Result<PlanarDiagram> {
        let n = self.strands;
        if other.strands != n {
            return Err(Error::Precondition(format!("strand counts {n} and {} differ", other.strands)));
        }
        // Nodes 0..2n are self, 2n..4n are other; self's south k is glued
        // to other's north k.
        let matched = |p: usize| if p < 2 * n { self.partner[p] } else { 2 * n + other.partner[p - 2 * n] };
        let glued = |p: usize| if p < 2 * n { p + n } else { p - n };
        let outer = |p: usize| p < n || p >= 3 * n;
        let mut visited = vec![false; 4 * n];
        let mut partner = vec![0; 2 * n];
        let to_result = |p: usize| if p < n { p } else { p - 2 * n };
        for start in (0..n).chain(3 * n..4 * n) {
            if visited[start] {
                continue;
            }
            let mut p = start;
            loop {
                visited[p] = true;
                let q = matched(p);
                visited[q] = true;
                if outer(q) {
                    partner[to_result(start)] = to_result(q);
                    partner[to_result(q)] = to_result(start);
                    break;
                }
                p = glued(q);
            }
        }
        let mut loops = self.loops + other.loops;
        for start in n..3 * n {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                let q = matched(p);
                visited[q] = true;
                p = glued(q);
            }
        }
        Ok(PlanarDiagram { strands: n, partner, loops })
    }

    /// Closed loops formed by joining north `k` to south `k` for every `k`.
    pub fn closure_loops(&self) -> u32 {
        let n = self.strands;
        let mut visited = vec![false; 2 * n];
        let mut count = 0;
        for start in 0..2 * n {
            if visited[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                let q = self.partner[p];
                visited[q] = true;
                p = (q + n) % (2 * n);
            }
        }
        count
    }

    /// True when the pairing has no crossings.
    pub fn is_planar(&self) -> bool {
        // Read the boundary clockwise: north left to right, then south
        // right to left. A pairing is planar iff it is balanced there.
        let n = self.strands;
        let pos = |p: usize| if p < n { p } else { 3 * n - 1 - p };
        let mut stack = Vec::new();
        let mut order: Vec<usize> = (0..2 * n).collect();
        order.sort_by_key(|&p| pos(p));
        for p in order {
            let q = self.partner[p];
            if pos(q) > pos(p) {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.strands;
        let name = |p: usize| if p < n { format!("n{}", p + 1) } else { format!("s{}", p - n + 1) };
        let mut first = true;
        for p in 0..2 * n {
            let q = self.partner[p];
            if q > p {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}-{}", name(p), name(q))?;
            }
        }
        write!(f, " loops={}", self.loops)
    }
}
