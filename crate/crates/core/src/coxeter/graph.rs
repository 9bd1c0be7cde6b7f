//! Coxeter graphs, the standard presets, and the text format.
//!
//! The graph file format is line oriented (`;` also separates statements):
//!
//! ```text
//! # type B2
//! rank 2
//! edge 1 2 4
//! ```
//!
//! `edge i j m` takes 1-based node indices and a label `m >= 3` or `inf`;
//! unlisted pairs commute. `preset NAME` expands a named graph and cannot be
//! combined with `rank` or `edge`.

use std::fmt;

use crate::error::{Error, Result};

/// Order of the product of two generators; `None` encodes `m = ∞`.
pub type BondLabel = Option<u32>;

/// Rank plus the symmetric matrix of bond labels `m(s, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    rank: usize,
    labels: Vec<BondLabel>,
    name: Option<String>,
}

impl CoxeterGraph {
    /// A graph with every pair commuting.
    pub fn discrete(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Graph("rank must be positive".into()));
        }
        if rank > 64 {
            return Err(Error::Graph(format!("rank {rank} exceeds the supported maximum of 64")));
        }
        let mut labels = vec![Some(2); rank * rank];
        for i in 0..rank {
            labels[i * rank + i] = Some(1);
        }
        Ok(Self { rank, labels, name: None })
    }

    /// Builds a graph from 0-based edges. Labels below 3 are rejected.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, BondLabel)]) -> Result<Self> {
        let mut g = Self::discrete(rank)?;
        for &(i, j, m) in edges {
            g.set_edge(i, j, m)?;
        }
        Ok(g)
    }

    fn set_edge(&mut self, i: usize, j: usize, m: BondLabel) -> Result<()> {
        let n = self.rank;
        if i >= n || j >= n {
            return Err(Error::Graph(format!("edge {} {} outside rank {n}", i + 1, j + 1)));
        }
        if i == j {
            return Err(Error::Graph(format!("self-loop at node {}", i + 1)));
        }
        if let Some(m) = m {
            if m < 3 {
                return Err(Error::Graph(format!(
                    "edge {} {} has label {m}; explicit edges need m >= 3",
                    i + 1,
                    j + 1
                )));
            }
        }
        if self.labels[i * n + j] != Some(2) {
            return Err(Error::Graph(format!("duplicate edge {} {}", i + 1, j + 1)));
        }
        self.labels[i * n + j] = m;
        self.labels[j * n + i] = m;
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Preset name, when the graph came from one.
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// `m(s, t)`, with `None` for an infinite bond.
    pub fn m(&self, s: u8, t: u8) -> BondLabel {
        self.labels[s as usize * self.rank + t as usize]
    }

    pub fn commute(&self, s: u8, t: u8) -> bool {
        self.m(s, t) == Some(2)
    }

    /// Joined by a bond in the graph (`m >= 3`, including `∞`).
    pub fn adjacent(&self, s: u8, t: u8) -> bool {
        s != t && !self.commute(s, t)
    }

    pub fn generators(&self) -> impl Iterator<Item = u8> {
        0..self.rank as u8
    }

    /// Unordered noncommuting pairs `(s, t)` with `s < t`.
    pub fn noncommuting_pairs(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for s in self.generators() {
            for t in (s + 1)..self.rank as u8 {
                if self.adjacent(s, t) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, s: u8) -> impl Iterator<Item = u8> + '_ {
        self.generators().filter(move |&t| self.adjacent(s, t))
    }

    /// Expands a preset name: `A3`, `B3`, `D4`, `E6`, `F4`, `H3`, `I2(5)`,
    /// `I2(inf)`, `~A2`, `~C3`.
    pub fn preset(name: &str) -> Result<Self> {
        let bad = || Error::Graph(format!("unknown preset {name:?}"));
        let trimmed = name.trim();
        let mut g = if let Some(rest) = trimmed.strip_prefix('~') {
            let (family, n) = split_family(rest).ok_or_else(bad)?;
            match family {
                'A' => affine_a(n)?,
                'C' => affine_c(n)?,
                _ => return Err(bad()),
            }
        } else if let Some(inner) = trimmed.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m = parse_label(inner).ok_or_else(bad)?;
            Self::from_edges(2, &[(0, 1, m)])?
        } else {
            let (family, n) = split_family(trimmed).ok_or_else(bad)?;
            match family {
                'A' if n >= 1 => path(n, |_| 3)?,
                'B' if n >= 2 => path(n, |i| if i + 2 == n { 4 } else { 3 })?,
                'D' if n >= 4 => {
                    let mut g = path(n - 1, |_| 3)?.with_rank(n)?;
                    g.set_edge(n - 3, n - 1, Some(3))?;
                    g
                }
                'E' if n >= 6 => {
                    // Bourbaki numbering: 1-3-4-5-..., with 2 attached to 4.
                    let mut g = Self::discrete(n)?;
                    g.set_edge(0, 2, Some(3))?;
                    g.set_edge(1, 3, Some(3))?;
                    for i in 2..n - 1 {
                        g.set_edge(i, i + 1, Some(3))?;
                    }
                    g
                }
                'F' if n == 4 => path(4, |i| if i == 1 { 4 } else { 3 })?,
                'H' if n >= 3 => path(n, |i| if i == 0 { 5 } else { 3 })?,
                _ => return Err(bad()),
            }
        };
        g.name = Some(trimmed.to_owned());
        Ok(g)
    }

    fn with_rank(&self, rank: usize) -> Result<Self> {
        let mut g = Self::discrete(rank)?;
        for s in self.generators() {
            for t in (s + 1)..self.rank as u8 {
                if self.adjacent(s, t) {
                    g.set_edge(s as usize, t as usize, self.m(s, t))?;
                }
            }
        }
        Ok(g)
    }

    /// Whether the Coxeter group is finite, i.e. the matrix
    /// `-cos(π / m(s, t))` is positive definite.
    pub fn is_finite(&self) -> bool {
        let n = self.rank;
        let mut a = vec![vec![0.0f64; n]; n];
        for s in self.generators() {
            for t in self.generators() {
                a[s as usize][t as usize] = match self.m(s, t) {
                    None => return false,
                    Some(1) => 1.0,
                    Some(m) => -(std::f64::consts::PI / m as f64).cos(),
                };
            }
        }
        // Cholesky; a nonpositive pivot means not positive definite.
        for j in 0..n {
            let d = a[j][j] - (0..j).map(|k| a[j][k] * a[j][k]).sum::<f64>();
            if d <= 1e-9 {
                return false;
            }
            let d = d.sqrt();
            a[j][j] = d;
            for i in j + 1..n {
                a[i][j] = (a[i][j] - (0..j).map(|k| a[i][k] * a[j][k]).sum::<f64>()) / d;
            }
        }
        true
    }

    /// True when the graph is a path with all bonds 3, i.e. type `A_n`.
    /// Returns the generators in path order.
    pub fn type_a_order(&self) -> Option<Vec<u8>> {
        let n = self.rank;
        for s in self.generators() {
            for t in self.generators() {
                let m = self.m(s, t);
                if s != t && m != Some(2) && m != Some(3) {
                    return None;
                }
            }
        }
        if n == 1 {
            return Some(vec![0]);
        }
        let degree = |s: u8| self.neighbors(s).count();
        let start = self.generators().find(|&s| degree(s) == 1)?;
        let mut order = vec![start];
        let mut prev: Option<u8> = None;
        let mut cur = start;
        loop {
            let next = self.neighbors(cur).find(|&t| Some(t) != prev);
            match next {
                Some(t) if !order.contains(&t) => {
                    order.push(t);
                    prev = Some(cur);
                    cur = t;
                }
                Some(_) => return None,
                None => break,
            }
        }
        if order.len() != n || self.generators().any(|s| degree(s) > 2) {
            return None;
        }
        Some(order)
    }
}

fn split_family(s: &str) -> Option<(char, usize)> {
    let mut chars = s.chars();
    let family = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    Some((family, n))
}

fn parse_label(s: &str) -> Option<BondLabel> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") || s == "∞" {
        return Some(None);
    }
    let m: u32 = s.parse().ok()?;
    Some(Some(m))
}

fn path(n: usize, label: impl Fn(usize) -> u32) -> Result<CoxeterGraph> {
    let mut g = CoxeterGraph::discrete(n)?;
    for i in 0..n.saturating_sub(1) {
        g.set_edge(i, i + 1, Some(label(i)))?;
    }
    Ok(g)
}

fn affine_a(n: usize) -> Result<CoxeterGraph> {
    match n {
        0 => Err(Error::Graph("~A0 is not defined".into())),
        1 => CoxeterGraph::from_edges(2, &[(0, 1, None)]),
        _ => {
            let mut g = path(n + 1, |_| 3)?;
            g.set_edge(0, n, Some(3))?;
            Ok(g)
        }
    }
}

fn affine_c(n: usize) -> Result<CoxeterGraph> {
    match n {
        0 => Err(Error::Graph("~C0 is not defined".into())),
        1 => CoxeterGraph::from_edges(2, &[(0, 1, None)]),
        _ => path(n + 1, |i| if i == 0 || i + 1 == n { 4 } else { 3 }),
    }
}

impl std::str::FromStr for CoxeterGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut rank: Option<usize> = None;
        let mut preset: Option<CoxeterGraph> = None;
        let mut edges: Vec<(usize, usize, BondLabel)> = Vec::new();
        let statements = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(|l| l.split(';'))
            .map(str::trim)
            .filter(|l| !l.is_empty());
        for stmt in statements {
            let bad = || Error::Parse(format!("malformed graph statement {stmt:?}"));
            let mut toks = stmt.split_whitespace();
            match toks.next() {
                Some("rank") => {
                    let n: usize = toks.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    if toks.next().is_some() || rank.is_some() {
                        return Err(bad());
                    }
                    rank = Some(n);
                }
                Some("edge") => {
                    let i: usize = toks.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    let j: usize = toks.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    let m = toks.next().and_then(parse_label).ok_or_else(bad)?;
                    if toks.next().is_some() || i == 0 || j == 0 {
                        return Err(bad());
                    }
                    edges.push((i - 1, j - 1, m));
                }
                Some("preset") => {
                    let name: Vec<&str> = toks.collect();
                    if name.len() != 1 || preset.is_some() {
                        return Err(bad());
                    }
                    preset = Some(CoxeterGraph::preset(name[0])?);
                }
                _ => return Err(bad()),
            }
        }
        match (preset, rank) {
            (Some(_), Some(_)) => Err(Error::Parse("preset cannot be combined with rank/edge".into())),
            (Some(_), None) if !edges.is_empty() => {
                Err(Error::Parse("preset cannot be combined with rank/edge".into()))
            }
            (Some(g), None) => Ok(g),
            (None, Some(n)) => CoxeterGraph::from_edges(n, &edges),
            (None, None) => Err(Error::Parse("graph description needs `rank` or `preset`".into())),
        }
    }
}

impl fmt::Display for CoxeterGraph {
    /// Renders in the graph file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            return write!(f, "preset {name}");
        }
        write!(f, "rank {}", self.rank)?;
        for (s, t) in self.noncommuting_pairs() {
            match self.m(s, t) {
                Some(m) => write!(f, "\nedge {} {} {m}", s + 1, t + 1)?,
                None => write!(f, "\nedge {} {} inf", s + 1, t + 1)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {

    #[test]
    fn finiteness() {
        for name in ["A1", "A4", "B3", "D4", "E8", "F4", "H4", "I2(9)"] {
            assert!(CoxeterGraph::preset(name).unwrap().is_finite(), "{name}");
        }
        for name in ["~A1", "~A2", "~C3", "I2(inf)", "E9"] {
            assert!(!CoxeterGraph::preset(name).is_ok_and(|g| g.is_finite()), "{name}");
        }
        let h5: CoxeterGraph = "rank 5; edge 1 2 5; edge 2 3 3; edge 3 4 3; edge 4 5 3".parse().unwrap();
        assert!(!h5.is_finite());
    }

    use super::*;

    #[test]
    fn preset_a3_is_a_path() {
        let g = CoxeterGraph::preset("A3").unwrap();
        assert_eq!(g.m(0, 1), Some(3));
        assert_eq!(g.m(1, 2), Some(3));
        assert_eq!(g.m(0, 2), Some(2));
        assert_eq!(g.m(1, 1), Some(1));
    }

    #[test]
    fn explicit_b2_and_infinite_dihedral() {
        let b2: CoxeterGraph = "rank 2; edge 1 2 4".parse().unwrap();
        assert_eq!(b2.m(0, 1), Some(4));
        assert_eq!(b2, CoxeterGraph::preset("B2").unwrap().with_rank(2).unwrap());
        let inf: CoxeterGraph = "rank 2\nedge 1 2 inf # free".parse().unwrap();
        assert_eq!(inf.m(1, 0), None);
        assert!(inf.adjacent(0, 1));
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "rank 2; edge 1 2 2",
            "rank 2; edge 1 2 3; edge 2 1 4",
            "rank 2; edge 1 3 3",
            "rank x",
            "preset A3; rank 3",
            "edge 1 2 3",
            "rank 2; bond 1 2 3",
            "preset Z9",
        ] {
            assert!(bad.parse::<CoxeterGraph>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn presets_have_expected_bonds() {
        let d4 = CoxeterGraph::preset("D4").unwrap();
        assert_eq!(d4.neighbors(1).collect::<Vec<_>>(), vec![0, 2, 3]);
        let h3 = CoxeterGraph::preset("H3").unwrap();
        assert_eq!(h3.m(0, 1), Some(5));
        let f4 = CoxeterGraph::preset("F4").unwrap();
        assert_eq!(f4.m(1, 2), Some(4));
        let e6 = CoxeterGraph::preset("E6").unwrap();
        assert_eq!(e6.neighbors(3).collect::<Vec<_>>(), vec![1, 2, 4]);
        let at2 = CoxeterGraph::preset("~A2").unwrap();
        assert_eq!(at2.noncommuting_pairs().len(), 3);
        let ct3 = CoxeterGraph::preset("~C3").unwrap();
        assert_eq!((ct3.m(0, 1), ct3.m(1, 2), ct3.m(2, 3)), (Some(4), Some(3), Some(4)));
        assert_eq!(CoxeterGraph::preset("I2(inf)").unwrap().m(0, 1), None);
    }

    #[test]
    fn type_a_detection() {
        assert_eq!(CoxeterGraph::preset("A4").unwrap().type_a_order(), Some(vec![0, 1, 2, 3]));
        let shuffled: CoxeterGraph = "rank 3; edge 1 3 3; edge 3 2 3".parse().unwrap();
        assert_eq!(shuffled.type_a_order(), Some(vec![0, 2, 1]));
        assert!(CoxeterGraph::preset("B3").unwrap().type_a_order().is_none());
        assert!(CoxeterGraph::preset("~A2").unwrap().type_a_order().is_none());
        assert!(CoxeterGraph::preset("D4").unwrap().type_a_order().is_none());
    }
}
