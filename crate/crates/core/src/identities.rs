//! Exhaustive checks of the combinatorial and recursive identities that
//! tie the `μ`, `M` and star-operation data together.

use crate::coxeter::{CosetCase, Coxeter, Filter, GenSet, GroupElement, Side};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::report::Report;
use crate::star::{bipartite_coloring, graph_label, Direction, StarContext};
use crate::tl::{Algorithm, TlAlgebra};

/// `f(_*x, w) + f(^*x, w) = f(x, _*w) + f(x, ^*w)` for `x, w` in left
/// `{s, t}`-strings with `L(x) ∩ I ≠ L(w) ∩ I`, undefined terms counting
/// as zero. Pairs whose star neighbours exceed `bound` are skipped.
pub fn check_string_identity(
    cox: &Coxeter,
    name: &str,
    elems: &[GroupElement],
    bound: usize,
    f: impl Fn(&GroupElement, &GroupElement) -> i64,
) -> Result<Report> {
    let mut report = Report::new(name, graph_label(cox.graph()), bound);
    let mut checked = 0;
    for pair in cox.graph().noncommuting_pairs() {
        let ctx = StarContext { pair, side: Side::Left };
        let i = GenSet::pair(pair.0, pair.1);
        let mut strings = Vec::new();
        for x in elems {
            if !matches!(cox.coset_decompose(x, pair, Side::Left)?.case, CosetCase::String(_)) {
                continue;
            }
            let down = cox.star(x, ctx, Direction::Down)?;
            let up = cox.star(x, ctx, Direction::Up)?;
            if up.as_ref().is_some_and(|u| u.length() > bound) {
                continue;
            }
            strings.push((x, down, up));
        }
        let g = |a: &Option<GroupElement>, b: &GroupElement| a.as_ref().map_or(0, |a| f(a, b));
        let h = |a: &GroupElement, b: &Option<GroupElement>| b.as_ref().map_or(0, |b| f(a, b));
        for (x, x_down, x_up) in &strings {
            for (w, w_down, w_up) in &strings {
                if cox.descents(x, Side::Left).intersect(i) == cox.descents(w, Side::Left).intersect(i) {
                    continue;
                }
                checked += 1;
                let lhs = g(x_down, w) + g(x_up, w);
                let rhs = h(x, w_down) + h(x, w_up);
                if lhs != rhs {
                    report.fail(format!("({x}, {w})"), format!("pair {{{}, {}}}: {lhs} vs {rhs}", pair.0 + 1, pair.1 + 1));
                }
            }
        }
    }
    report.note(format!("pairs checked: {checked}"));
    Ok(report)
}

/// `c_{w_I} c_{u w^I} = δ c_w` for every fully commutative `w` up to
/// `bound` and every noncommuting pair `I` with `w_I ≠ 1`, where `u` is
/// the right descent of `w_I`.
pub fn check_coset_factorization(tl: &TlAlgebra, bound: usize) -> Result<Report> {
    let cox = tl.coxeter();
    let mut report = Report::new("coset-factorization", graph_label(cox.graph()), bound);
    let mut checked = 0;
    for w in cox.enumerate(bound, Filter::FullyCommutative)? {
        let cw = tl.canonical_basis(&w, Algorithm::Triangular)?;
        for pair in cox.graph().noncommuting_pairs() {
            let d = cox.coset_decompose(&w, pair, Side::Left)?;
            let CosetCase::String(u) = d.case else { continue };
            checked += 1;
            let uw = cox.mul_gen(&d.w_sup_i, u, Side::Left)?;
            let lhs = tl.t_mul(
                &*tl.canonical_basis(&d.w_i, Algorithm::Triangular)?,
                &*tl.canonical_basis(&uw, Algorithm::Triangular)?,
            )?;
            if lhs != cw.scale(&LaurentPoly::delta()) {
                report.fail(&w, format!("pair {{{}, {}}}", pair.0 + 1, pair.1 + 1));
            }
        }
    }
    report.note(format!("cases checked: {checked}"));
    Ok(report)
}

/// The statistic `n(w)` is constant under star reductions; when
/// `|L(w)| = n(w)` (or `|R(w)| = n(w)`) a star reduction on that side flips
/// `k_ε`; and `L(w) = R(w)` of size `n(w)` forces `ℓ(w) ≡ n(w) mod 2`.
/// The last two need a bipartite graph and are skipped otherwise.
pub fn check_star_statistics(cox: &Coxeter, bound: usize) -> Result<Report> {
    let mut report = Report::new("star-statistics", graph_label(cox.graph()), bound);
    let coloring = bipartite_coloring(cox.graph());
    let mut counts = [0usize; 3];
    for w in cox.enumerate(bound, Filter::FullyCommutative)? {
        let n = cox.n_stat(&w)?;
        let left = cox.descents(&w, Side::Left);
        let right = cox.descents(&w, Side::Right);
        for pair in cox.graph().noncommuting_pairs() {
            for side in [Side::Left, Side::Right] {
                let Some(x) = cox.star(&w, StarContext { pair, side }, Direction::Down)? else { continue };
                counts[0] += 1;
                if cox.n_stat(&x)? != n {
                    report.fail(&w, format!("n changes along the star reduction to {x}"));
                }
                let descents = if side == Side::Left { left } else { right };
                if let Some(c) = &coloring {
                    if descents.len() == n {
                        counts[1] += 1;
                        if cox.k_epsilon(&w, c)? != -cox.k_epsilon(&x, c)? {
                            report.fail(&w, format!("k_eps does not flip along the star reduction to {x}"));
                        }
                    }
                }
            }
        }
        if coloring.is_some() && left == right && left.len() == n {
            counts[2] += 1;
            if w.length() % 2 != n % 2 {
                report.fail(&w, format!("length parity differs from n = {n}"));
            }
        }
    }
    report.note(format!("star reductions: {}", counts[0]));
    report.note(format!("sign-flip cases: {}", counts[1]));
    report.note(format!("parity cases: {}", counts[2]));
    Ok(report)
}

/// Numbers of fully commutative elements of even and odd length in the
/// Bruhat interval `[x, w]`.
pub fn fc_interval_parity(cox: &Coxeter, x: &GroupElement, w: &GroupElement) -> Result<(usize, usize)> {
    let mut counts = (0, 0);
    for y in cox.bruhat_interval(x, w)? {
        if !cox.is_fully_commutative(&y) {
            continue;
        }
        if y.length() % 2 == 0 {
            counts.0 += 1;
        } else {
            counts.1 += 1;
        }
    }
    Ok(counts)
}
