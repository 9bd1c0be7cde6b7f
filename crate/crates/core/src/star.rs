//! Star operations along `{s, t}`-strings, the Property F and S checkers,
//! and the statistics `n(w)` and `k_ε(w)`.

use std::collections::{BTreeSet, HashMap};

use crate::coxeter::{CosetCase, Coxeter, CoxeterGraph, Filter, GenSet, GroupElement, Side};
use crate::error::{Error, Result};
use crate::report::Report;

/// A noncommuting pair and the side the star operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StarContext {
    pub pair: (u8, u8),
    pub side: Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// A proper 2-colouring `ε: S -> {0, 1}` of the Coxeter graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub eps: Vec<u8>,
}

impl Coloring {
    pub fn zeros(&self) -> GenSet {
        (0..self.eps.len() as u8).filter(|&s| self.eps[s as usize] == 0).collect()
    }
}

impl Coxeter {
    /// Moves one step along the `{s, t}`-string containing `w`; `None` when
    /// `w` is not in a string or the neighbour leaves it.
    pub fn star(&self, w: &GroupElement, ctx: StarContext, dir: Direction) -> Result<Option<GroupElement>> {
        let d = self.coset_decompose(w, ctx.pair, ctx.side)?;
        if !matches!(d.case, CosetCase::String(_)) {
            return Ok(None);
        }
        let word = d.w_i.word();
        let k = word.len();
        // The letter of w_I farthest from w^I.
        let outer = match ctx.side {
            Side::Left => word[0],
            Side::Right => word[k - 1],
        };
        match dir {
            Direction::Down if k >= 2 => Ok(Some(self.mul_gen(w, outer, ctx.side)?)),
            Direction::Down => Ok(None),
            Direction::Up => {
                let (s, t) = ctx.pair;
                let other = if outer == s { t } else { s };
                let fits = match self.graph().m(s, t) {
                    Some(m) => k + 1 < m as usize,
                    None => true,
                };
                if fits {
                    Ok(Some(self.mul_gen(w, other, ctx.side)?))
                } else {
                    Ok(None)
                }
            }
        }
    }

    /// Every element one left or right star-down move below `w`.
    pub fn star_reduction_paths(&self, w: &GroupElement) -> Result<BTreeSet<GroupElement>> {
        let mut out = BTreeSet::new();
        for pair in self.graph().noncommuting_pairs() {
            for side in [Side::Left, Side::Right] {
                if let Some(x) = self.star(w, StarContext { pair, side }, Direction::Down)? {
                    out.insert(x);
                }
            }
        }
        Ok(out)
    }

    /// True when `w` is a product of distinct pairwise commuting generators.
    pub fn is_commuting_product(&self, w: &GroupElement) -> bool {
        let word = w.word();
        let g = self.graph();
        word.iter()
            .enumerate()
            .all(|(i, &a)| word[i + 1..].iter().all(|&b| a != b && g.commute(a, b)))
    }

    /// Does the left or right descent set contain a noncommuting pair?
    pub fn has_noncommuting_descents(&self, w: &GroupElement) -> bool {
        [Side::Left, Side::Right].into_iter().any(|side| {
            let d = self.descents(w, side);
            d.iter().any(|s| d.iter().any(|t| self.graph().adjacent(s, t)))
        })
    }

    /// Every fully commutative element of length at most `bound` star
    /// reduces to a product of commuting generators.
    pub fn check_property_f(&self, bound: usize) -> Result<Report> {
        let mut report = Report::new("F", graph_label(self.graph()), bound);
        let elems = self.enumerate(bound, Filter::FullyCommutative)?;
        let good = self.star_closure(&elems, |w| self.is_commuting_product(w))?;
        for w in &elems {
            if !good[w] {
                report.fail(w, "no star reduction to a commuting product");
            }
        }
        Ok(report)
    }

    /// Every non fully commutative element of length at most `bound` star
    /// reduces to an element with a noncommuting pair in a descent set.
    pub fn check_property_s(&self, bound: usize) -> Result<Report> {
        let mut report = Report::new("S", graph_label(self.graph()), bound);
        let elems = self.enumerate(bound, Filter::All)?;
        let good = self.star_closure(&elems, |w| self.has_noncommuting_descents(w))?;
        for w in elems.iter().filter(|w| !self.is_fully_commutative(w)) {
            if !good[w] {
                report.fail(w, "no star reduction to a noncommuting descent pair");
            }
        }
        Ok(report)
    }

    /// For each element (in increasing length), whether it star reduces to
    /// one satisfying `target`. Star-down moves stay inside `elems` because
    /// they shorten and preserve the enumeration filter.
    fn star_closure(
        &self,
        elems: &[GroupElement],
        target: impl Fn(&GroupElement) -> bool,
    ) -> Result<HashMap<GroupElement, bool>> {
        let mut good: HashMap<GroupElement, bool> = HashMap::with_capacity(elems.len());
        for w in elems {
            let mut ok = target(w);
            if !ok {
                for x in self.star_reduction_paths(w)? {
                    if *good.get(&x).ok_or_else(|| {
                        Error::Inconsistency(format!("star move from {w} left the enumerated set"))
                    })? {
                        ok = true;
                        break;
                    }
                }
            }
            good.insert(w.clone(), ok);
        }
        Ok(good)
    }

    /// The largest number of pairwise commuting generators occurring as a
    /// contiguous factor of some reduced word of `w`.
    pub fn n_stat(&self, w: &GroupElement) -> Result<usize> {
        if !self.is_fully_commutative(w) {
            return Err(Error::NotFullyCommutative(w.to_string()));
        }
        let g = self.graph();
        let mut best = 0;
        for word in self.reduced_words(w)? {
            for i in 0..word.len() {
                let mut j = i;
                while j < word.len() && word[i..j].iter().all(|&a| a != word[j] && g.commute(a, word[j])) {
                    j += 1;
                }
                best = best.max(j - i);
            }
        }
        Ok(best)
    }

    /// `k_ε(w) = (-1)^{|L(w) ∩ ε⁻¹(0)|} · (-1)^{|R(w) ∩ ε⁻¹(0)|}`.
    pub fn k_epsilon(&self, w: &GroupElement, c: &Coloring) -> Result<i8> {
        if !self.is_fully_commutative(w) {
            return Err(Error::NotFullyCommutative(w.to_string()));
        }
        let zeros = c.zeros();
        let count = self.descents(w, Side::Left).intersect(zeros).len()
            + self.descents(w, Side::Right).intersect(zeros).len();
        Ok(if count.is_multiple_of(2) { 1 } else { -1 })
    }
}

/// Proper 2-colouring by breadth-first search from the lowest-index
/// generator of each component, which gets colour 0. `None` for graphs
/// with an odd cycle.
pub fn bipartite_coloring(graph: &CoxeterGraph) -> Option<Coloring> {
    let n = graph.rank();
    let mut eps: Vec<Option<u8>> = vec![None; n];
    for root in graph.generators() {
        if eps[root as usize].is_some() {
            continue;
        }
        eps[root as usize] = Some(0);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(s) = queue.pop_front() {
            let cs = eps[s as usize].unwrap();
            for t in graph.neighbors(s) {
                match eps[t as usize] {
                    None => {
                        eps[t as usize] = Some(1 - cs);
                        queue.push_back(t);
                    }
                    Some(ct) if ct == cs => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Coloring { eps: eps.into_iter().map(|c| c.unwrap()).collect() })
}

pub(crate) fn graph_label(g: &CoxeterGraph) -> String {
    match g.name() {
        Some(name) => name.to_owned(),
        None => g.to_string().replace('\n', "; "),
    }
}
