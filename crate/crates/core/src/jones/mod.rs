//! Traces on `TL(X)`: the type-A diagram trace, user tables, the induced
//! bilinear form and the checks built on it.

mod diagram;

use std::collections::BTreeMap;
use std::fmt::Write as _;

pub use diagram::PlanarDiagram;

use crate::combination::Combination;
use crate::coxeter::{Coxeter, Filter, GroupElement};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::memo::Memo;
use crate::report::Report;
use crate::star::{bipartite_coloring, graph_label};
use crate::tl::TlAlgebra;

/// Supplies `τ(c_w)` for fully commutative `w`.
pub trait TraceSource: Send + Sync {
    fn tau_c(&self, cox: &Coxeter, w: &GroupElement) -> Result<LaurentPoly>;
}

/// The Jones trace on `TL(A_n)`, normalized so that
/// `τ(c_w) = v^{-(n+1)} δ^k` with `k` the number of loops in the closure
/// of the diagram of `w`.
#[derive(Clone, Debug)]
pub struct TypeATrace {
    /// Strand position of each generator.
    position: Vec<usize>,
}

impl TypeATrace {
    pub fn new(cox: &Coxeter) -> Result<Self> {
        let order = cox.graph().type_a_order().ok_or(Error::NotTypeA)?;
        let mut position = vec![0; order.len()];
        for (k, s) in order.into_iter().enumerate() {
            position[s as usize] = k + 1;
        }
        Ok(TypeATrace { position })
    }

    pub fn strands(&self) -> usize {
        self.position.len() + 1
    }

    /// The diagram of `c_w`: the product of `E_i` along a reduced word.
    pub fn diagram(&self, w: &GroupElement) -> Result<PlanarDiagram> {
        let n = self.strands();
        let mut d = PlanarDiagram::identity(n);
        for &s in w.word() {
            d = d.mul(&PlanarDiagram::generator(self.position[s as usize], n)?)?;
        }
        Ok(d)
    }

    /// `τ` of a diagram.
    pub fn evaluate(&self, d: &PlanarDiagram) -> LaurentPoly {
        LaurentPoly::delta_pow(d.closure_loops() + d.loops).shift(-(self.strands() as i32))
    }

    /// The values on every fully commutative element up to `bound`.
    pub fn to_table(&self, cox: &Coxeter, bound: usize) -> Result<TraceTable> {
        let mut values = BTreeMap::new();
        for w in cox.enumerate(bound, Filter::FullyCommutative)? {
            let tau = self.tau_c(cox, &w)?;
            values.insert(w, tau);
        }
        Ok(TraceTable { values })
    }
}

impl TraceSource for TypeATrace {
    fn tau_c(&self, cox: &Coxeter, w: &GroupElement) -> Result<LaurentPoly> {
        if !cox.is_fully_commutative(w) {
            return Err(Error::NotFullyCommutative(w.to_string()));
        }
        Ok(self.evaluate(&self.diagram(w)?))
    }
}

/// Explicit values `τ(c_w)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceTable {
    pub values: BTreeMap<GroupElement, LaurentPoly>,
}

impl TraceTable {
    /// Parses lines `<word> : <poly>` (`e` for the identity) with `#`
    /// comments.
    pub fn parse(cox: &Coxeter, text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {}: expected `<word> : <poly>`", n + 1)))?;
            let w = cox.parse_element(key.trim())?;
            if !cox.is_fully_commutative(&w) {
                return Err(Error::NotFullyCommutative(w.to_string()));
            }
            let tau: LaurentPoly = value.trim().parse().map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))?;
            if values.insert(w.clone(), tau).is_some() {
                return Err(Error::Parse(format!("line {}: duplicate entry for {w}", n + 1)));
            }
        }
        Ok(TraceTable { values })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (w, tau) in &self.values {
            let _ = writeln!(out, "{w} : {tau}");
        }
        out
    }

    /// Drops the terms of `τ(c_w)` whose parity differs from `ℓ(w)`.
    /// Returns whether anything changed.
    pub fn homogenize(&mut self) -> bool {
        let mut changed = false;
        for (w, tau) in self.values.iter_mut() {
            let h = tau.homogenize((w.length() % 2) as u8);
            if h != *tau {
                *tau = h;
                changed = true;
            }
        }
        changed
    }
}

impl TraceSource for TraceTable {
    fn tau_c(&self, _: &Coxeter, w: &GroupElement) -> Result<LaurentPoly> {
        self.values.get(w).cloned().ok_or_else(|| Error::TableGap(w.to_string()))
    }
}

/// The trace extended linearly to `TL(X)` and the form
/// `⟨x, y⟩ = τ(x · y*)`.
pub struct JonesForm<'a> {
    tl: &'a TlAlgebra,
    source: &'a dyn TraceSource,
    tau_t: Memo<GroupElement, LaurentPoly>,
}

impl<'a> JonesForm<'a> {
    pub fn new(tl: &'a TlAlgebra, source: &'a dyn TraceSource) -> Self {
        JonesForm { tl, source, tau_t: Memo::new() }
    }

    pub fn tau_c(&self, w: &GroupElement) -> Result<LaurentPoly> {
        self.source.tau_c(self.tl.coxeter(), w)
    }

    fn tau_basis(&self, w: &GroupElement) -> Result<LaurentPoly> {
        let v = self.tau_t.get_or_try(w, || {
            let mut out = LaurentPoly::zero();
            for (y, a) in self.tl.to_c_basis(&Combination::basis(w.clone()))?.iter() {
                out.add_mul(a, &self.tau_c(y)?);
            }
            Ok::<_, Error>(out)
        })?;
        Ok((*v).clone())
    }

    /// `τ(x)` for `x` in `t̃`-coordinates.
    pub fn trace(&self, x: &Combination) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (w, a) in x {
            out.add_mul(a, &self.tau_basis(w)?);
        }
        Ok(out)
    }

    pub fn form(&self, x: &Combination, y: &Combination) -> Result<LaurentPoly> {
        self.trace(&self.tl.t_mul(x, &self.tl.star_involution(y)?)?)
    }

    /// `μ̃(x, y)` read off as the `v⁻¹` coefficient of `⟨c_x, c_y⟩`.
    /// Requires a bipartite graph.
    pub fn mu_from_trace(&self, x: &GroupElement, y: &GroupElement) -> Result<i64> {
        if bipartite_coloring(self.tl.coxeter().graph()).is_none() {
            return Err(Error::NotBipartite);
        }
        let cx = self.tl.canonical_basis(x, crate::tl::Algorithm::Triangular)?;
        let cy = self.tl.canonical_basis(y, crate::tl::Algorithm::Triangular)?;
        Ok(self.form(&cx, &cy)?.coeff_i64(-1))
    }

    /// Adjointness, almost orthonormality and symmetry of the form on the
    /// `t̃`-basis up to `bound` decide the verdict. Homogeneity, positivity
    /// and the sharpened off-diagonal bound are reported on separate lines.
    pub fn verify_property_b(&self, bound: usize) -> Result<Report> {
        let cox = self.tl.coxeter();
        let mut report = Report::new("B", graph_label(cox.graph()), bound);
        let elems = cox.enumerate(bound, Filter::FullyCommutative)?;
        let t = |w: &GroupElement| Combination::basis(w.clone());
        let pair = |x: &GroupElement, y: &GroupElement| format!("({x}, {y})");

        let mut forms = BTreeMap::new();
        for x in &elems {
            for y in &elems {
                forms.insert((x.clone(), y.clone()), self.form(&t(x), &t(y))?);
            }
        }

        let mut counts = [0usize; 6];
        for x in &elems {
            for y in &elems {
                let f = &forms[&(x.clone(), y.clone())];
                let off = if x == y { f - &LaurentPoly::one() } else { f.clone() };
                if !off.in_v_inv_a_minus() {
                    counts[1] += 1;
                    report.fail(pair(x, y), format!("almost-orthonormality: <t[{x}], t[{y}]> = {f}"));
                }
                if f != &forms[&(y.clone(), x.clone())] {
                    counts[2] += 1;
                    report.fail(pair(x, y), "symmetry: form is not symmetric".to_string());
                }
                if x != y && !f.shift(1).in_v_inv_a_minus() {
                    counts[5] += 1;
                }
            }
        }
        for s in cox.graph().generators() {
            for x in &elems {
                let sx = self.tl.t_mul_gen(s, &t(x), crate::coxeter::Side::Left)?;
                for y in &elems {
                    let sy = self.tl.t_mul_gen(s, &t(y), crate::coxeter::Side::Left)?;
                    let lhs = self.form(&sx, &t(y))?;
                    let rhs = self.form(&t(x), &sy)?;
                    if lhs != rhs {
                        counts[0] += 1;
                        report.fail(pair(x, y), format!("adjointness for generator {}: {lhs} vs {rhs}", s + 1));
                    }
                }
            }
        }
        for w in &elems {
            let tau = self.tau_c(w)?;
            if !tau.is_homogeneous((w.length() % 2) as u8) {
                counts[3] += 1;
            }
            if !tau.is_nonneg() {
                counts[4] += 1;
            }
        }
        let names = ["adjointness", "almost-orthonormality", "symmetry", "homogeneity", "positivity", "sharpened-bound"];
        for (name, n) in names.iter().zip(counts) {
            report.note(if n == 0 { format!("{name}: ok") } else { format!("{name}: {n} failures") });
        }
        report.failures.sort_by(|a, b| a.witness.cmp(&b.witness));
        Ok(report)
    }
}
