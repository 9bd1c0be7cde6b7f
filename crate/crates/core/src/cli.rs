//! The `gentl` command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::combination::Combination;
use crate::coxeter::{Coxeter, CoxeterGraph, Filter, DEFAULT_CLOSURE_CAP, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::jones::{JonesForm, TraceSource, TraceTable, TypeATrace};
use crate::report::Report;
use crate::tl::{Algorithm, TlAlgebra};

#[derive(Parser, Debug)]
#[command(name = "gentl", version, about = "Canonical bases and traces for generalized Temperley-Lieb algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the c-basis (both algorithms) and the C'-basis.
    Basis(Common),
    /// Tabulate mu over fully commutative pairs by several methods.
    Mu {
        #[command(flatten)]
        common: Common,
        /// Comma-separated subset of `m`, `oracle`, `trace`, or `all`.
        #[arg(long, default_value = "all")]
        methods: String,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check one of the properties F, S, W or B.
    Verify {
        property: Property,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Structure constants of the c-basis in the δ-basis.
    Structure {
        #[command(flatten)]
        common: Common,
        /// Also list the c-coefficients of products of C'-basis elements.
        #[arg(long)]
        hecke: bool,
    },
    /// Coefficient tables: `tl` gives p*, q* and M; `kl` gives P and mu.
    Tables {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "tl")]
        kind: TableKind,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    pub preset: Option<String>,
    /// A graph file: `rank N` and `edge I J M` lines, or `preset NAME`.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Length bound; defaults to the whole group when it is finite.
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Element cap for enumerations.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub cap: usize,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub closure_cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    #[value(name = "F")]
    F,
    #[value(name = "S")]
    S,
    #[value(name = "W")]
    W,
    #[value(name = "B")]
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Tl,
    Kl,
}

/// What a command produced and the exit code it implies.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Inconsistency(_) => 3,
        Error::PropertyW(_) => 1,
        _ => 2,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let (common, outcome) = match &cli.command {
        Command::Basis(c) => (c, cmd_basis(c)?),
        Command::Mu { common, methods, trace } => (common, cmd_mu(common, methods, trace.as_ref())?),
        Command::Verify { property, common, trace } => (common, cmd_verify(common, *property, trace.as_ref())?),
        Command::Structure { common, hecke } => (common, cmd_structure(common, *hecke)?),
        Command::Tables { common, kind } => (common, cmd_tables(common, *kind)?),
    };
    if let Some(path) = &common.out {
        std::fs::write(path, &outcome.text)?;
        return Ok(Outcome { text: String::new(), code: outcome.code });
    }
    Ok(outcome)
}

fn load(c: &Common) -> Result<(Arc<Coxeter>, usize)> {
    let graph = match (&c.preset, &c.graph) {
        (Some(name), _) => CoxeterGraph::preset(name)?,
        (None, Some(path)) => std::fs::read_to_string(path)?.parse()?,
        (None, None) => return Err(Error::Precondition("one of --preset or --graph is required".into())),
    };
    let cox = Arc::new(Coxeter::with_caps(graph, c.closure_cap, c.cap));
    let bound = match c.bound {
        Some(0) => return Err(Error::Precondition("--bound must be positive".into())),
        Some(b) => b,
        None if !cox.graph().is_finite() => {
            return Err(Error::Precondition("the group is infinite; pass --bound".into()))
        }
        None => cox.max_length()?,
    };
    Ok((cox, bound))
}

fn trace_source(cox: &Coxeter, path: Option<&PathBuf>, notes: &mut Vec<String>) -> Result<Box<dyn TraceSource>> {
    match path {
        Some(p) => {
            let mut table = TraceTable::parse(cox, &std::fs::read_to_string(p)?)?;
            let changed = table.homogenize();
            notes.push(format!("# trace table homogenized: {}", if changed { "changed" } else { "unchanged" }));
            Ok(Box::new(table))
        }
        None => Ok(Box::new(TypeATrace::new(cox)?)),
    }
}

fn cmd_basis(c: &Common) -> Result<Outcome> {
    let (cox, bound) = load(c)?;
    let tl = TlAlgebra::new(cox.clone());
    let mut out = String::new();
    let mut code = 0;
    if c.format == Format::Tsv {
        out.push_str("basis\tw\ty\tcoeff\tagree\n");
    }
    for w in cox.enumerate(bound, Filter::FullyCommutative)? {
        let tri = tl.canonical_basis(&w, Algorithm::Triangular)?;
        let agree = match tl.canonical_basis(&w, Algorithm::Recursion) {
            Ok(rec) => {
                if rec != tri {
                    code = 3;
                }
                (rec == tri).to_string()
            }
            Err(Error::PropertyW(at)) => format!("n/a (recursion stops at {at})"),
            Err(e) => return Err(e),
        };
        match c.format {
            Format::Text => {
                let _ = writeln!(out, "# c[{w}] agree={agree}");
                out.push_str(&tri.render("t"));
            }
            Format::Tsv => {
                for (y, p) in tri.iter() {
                    let _ = writeln!(out, "c\t{w}\t{y}\t{p}\t{agree}");
                }
            }
        }
    }
    match cox.enumerate(bound, Filter::All) {
        Ok(all) => {
            let h = HeckeAlgebra::new(cox.clone());
            for w in all {
                let kl = h.kl_basis(&w)?;
                match c.format {
                    Format::Text => {
                        let _ = writeln!(out, "# C'[{w}]");
                        out.push_str(&kl.render("T"));
                    }
                    Format::Tsv => {
                        for (y, p) in kl.iter() {
                            let _ = writeln!(out, "C'\t{w}\t{y}\t{p}\t-");
                        }
                    }
                }
            }
        }
        Err(Error::ElementCap { cap }) => {
            let _ = writeln!(out, "# C'-basis skipped: more than {cap} elements");
        }
        Err(e) => return Err(e),
    }
    Ok(Outcome { text: out, code })
}

fn cmd_mu(c: &Common, methods: &str, trace: Option<&PathBuf>) -> Result<Outcome> {
    let (cox, bound) = load(c)?;
    let mut want = [false; 3];
    for m in methods.split(',').map(str::trim) {
        match m {
            "m" => want[0] = true,
            "oracle" => want[1] = true,
            "trace" => want[2] = true,
            "all" => want = [true; 3],
            other => return Err(Error::Precondition(format!("unknown method {other:?}"))),
        }
    }
    let h = HeckeAlgebra::new(cox.clone());
    let tl = h.tl();
    let elems = cox.enumerate(bound, Filter::FullyCommutative)?;
    let m_tables = if want[0] { Some(tl.coeff_tables(bound)?) } else { None };
    let kl = if want[1] { Some(h.kl_tables(bound)?) } else { None };
    let mut notes = Vec::new();
    let source = if want[2] { Some(trace_source(&cox, trace, &mut notes)?) } else { None };
    let form = source.as_deref().map(|s| JonesForm::new(tl, s));

    let mut out = String::new();
    for n in notes {
        let _ = writeln!(out, "{n}");
    }
    out.push_str("x\ty\tmu_trace\tmu_oracle\tM_tl\tagree\n");
    let mut code = 0;
    for (i, x) in elems.iter().enumerate() {
        for y in &elems[i + 1..] {
            if !cox.bruhat_leq(x, y)? {
                continue;
            }
            let vals = [
                form.as_ref().map(|f| f.mu_from_trace(x, y)).transpose()?,
                kl.as_ref().map(|k| k.mu_tilde(x, y)),
                m_tables.as_ref().map(|m| m.m_tilde(x, y)),
            ];
            let present: Vec<i64> = vals.iter().flatten().copied().collect();
            let agree = present.windows(2).all(|w| w[0] == w[1]);
            if !agree {
                code = 3;
            }
            let show = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
            let _ = writeln!(out, "{x}\t{y}\t{}\t{}\t{}\t{agree}", show(vals[0]), show(vals[1]), show(vals[2]));
        }
    }
    Ok(Outcome { text: out, code })
}

fn cmd_verify(c: &Common, property: Property, trace: Option<&PathBuf>) -> Result<Outcome> {
    let (cox, bound) = load(c)?;
    let mut notes = Vec::new();
    let report = match property {
        Property::F => cox.check_property_f(bound)?,
        Property::S => cox.check_property_s(bound)?,
        Property::W => TlAlgebra::new(cox.clone()).check_property_w(bound)?,
        Property::B => {
            let tl = TlAlgebra::new(cox.clone());
            let source = trace_source(&cox, trace, &mut notes)?;
            let form = JonesForm::new(&tl, source.as_ref());
            let mut r = form.verify_property_b(bound)?;
            r.notes.extend(notes.iter().map(|n| n.trim_start_matches("# ").to_string()));
            r
        }
    };
    let code = if report.holds() { 0 } else { 1 };
    Ok(Outcome { text: render_report(&report, c.format), code })
}

fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => r.to_string(),
        Format::Tsv => {
            let mut out = String::from("property\tgraph\tbound\tverdict\twitness\tdetail\n");
            let verdict = if r.holds() { "HOLDS" } else { "FAILS" };
            if r.failures.is_empty() {
                let _ = writeln!(out, "{}\t{}\t{}\t{verdict}\t-\t-", r.property, r.graph, r.bound);
            }
            for f in &r.failures {
                let _ = writeln!(out, "{}\t{}\t{}\t{verdict}\t{}\t{}", r.property, r.graph, r.bound, f.witness, f.detail);
            }
            out
        }
    }
}

fn cmd_structure(c: &Common, hecke: bool) -> Result<Outcome> {
    let (cox, bound) = load(c)?;
    let h = HeckeAlgebra::new(cox.clone());
    let mut out = String::from("x\ty\tz\tcoeff\tpositive\n");
    let mut all_positive = true;
    for sc in h.tl().structure_constants(bound)? {
        let positive = sc.is_positive();
        all_positive &= positive;
        let shown = sc.coeff.to_delta_basis().map_or_else(|| sc.coeff.to_string(), |d| d.to_string());
        let _ = writeln!(out, "{}\t{}\t{}\t{shown}\t{positive}", sc.x, sc.y, sc.z);
    }
    if hecke {
        out.push_str("# C'_x C'_y in the c-basis\n");
        let elems = cox.enumerate(bound, Filter::All)?;
        for x in &elems {
            for y in &elems {
                let prod = h.h_mul(&*h.kl_basis(x)?, &*h.kl_basis(y)?)?;
                let coords: Combination = h.tl().to_c_basis(&h.theta(&prod)?)?;
                for (z, g) in coords.iter() {
                    let positive = g.is_nonneg_delta();
                    all_positive &= positive;
                    let shown = g.to_delta_basis().map_or_else(|| g.to_string(), |d| d.to_string());
                    let _ = writeln!(out, "{x}\t{y}\t{z}\t{shown}\t{positive}");
                }
            }
        }
    }
    let _ = writeln!(out, "# all positive: {all_positive}");
    Ok(Outcome::ok(out))
}

fn cmd_tables(c: &Common, kind: TableKind) -> Result<Outcome> {
    let (cox, bound) = load(c)?;
    let text = match kind {
        TableKind::Tl => TlAlgebra::new(cox).coeff_tables(bound)?.to_tsv(),
        TableKind::Kl => HeckeAlgebra::new(cox).kl_tables(bound)?.to_tsv(),
    };
    Ok(Outcome::ok(text))
}
