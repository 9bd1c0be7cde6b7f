use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use gentl::coxeter::Filter;
use gentl::hecke::HeckeAlgebra;
use gentl::identities::{check_coset_factorization, check_star_statistics, check_string_identity, fc_interval_parity};
use gentl::jones::{JonesForm, TraceTable, TypeATrace};
use gentl::star::bipartite_coloring;
use gentl::tl::{Algorithm, TlAlgebra};
use gentl::{Coxeter, Error, LaurentPoly};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn hecke(name: &str) -> HeckeAlgebra {
    HeckeAlgebra::new(Arc::new(Coxeter::preset(name).unwrap()))
}

fn full_bound(h: &HeckeAlgebra) -> usize {
    h.coxeter().max_length().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A passing report that checked at least one case of each kind.
fn exercised(name: &str, r: &gentl::report::Report) -> Check {
    ensure(r.holds(), || format!("{name}: {r}"))?;
    for line in &r.notes {
        let n: usize = line.rsplit(' ').next().and_then(|t| t.parse().ok()).unwrap_or(0);
        ensure(n > 0, || format!("{name}: nothing checked ({line})"))?;
    }
    Ok(())
}

fn err(e: Error) -> String {
    e.to_string()
}

fn worked_example() -> Check {
    let start = Instant::now();
    let h = hecke("A3");
    let tl = h.tl();
    let cox = h.coxeter();
    let trace = TypeATrace::new(cox).map_err(err)?;
    let form = JonesForm::new(tl, &trace);
    let x = cox.parse_element("2").map_err(err)?;
    let y = cox.parse_element("2 1 3 2").map_err(err)?;
    let cx = tl.canonical_basis(&x, Algorithm::Triangular).map_err(err)?;
    let cy = tl.canonical_basis(&cox.inverse(&y).map_err(err)?, Algorithm::Triangular).map_err(err)?;
    let tau = form.trace(&tl.t_mul(&cx, &cy).map_err(err)?).map_err(err)?;
    let want = LaurentPoly::delta_pow(3).shift(-4);
    ensure(tau == want, || format!("tau = {tau}, expected {want}"))?;
    let mu = form.mu_from_trace(&x, &y).map_err(err)?;
    ensure(mu == 1, || format!("mu from trace = {mu}"))?;
    let kl = h.kl_tables(4).map_err(err)?;
    let p = kl.p(&x, &y).to_q_string().unwrap_or_default();
    ensure(p == "1 + q", || format!("P = {p}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))
}

fn groups_with_bounds() -> Vec<(&'static str, Option<usize>)> {
    vec![
        ("A3", None),
        ("A4", None),
        ("B3", None),
        ("D4", None),
        ("H3", Some(10)),
        ("I2(5)", None),
        ("I2(6)", None),
        ("I2(7)", None),
    ]
}

fn m_equals_mu() -> Check {
    for (name, bound) in groups_with_bounds() {
        let h = hecke(name);
        let bound = bound.unwrap_or_else(|| full_bound(&h));
        let m = h.tl().coeff_tables(bound).map_err(err)?;
        let kl = h.kl_tables(bound).map_err(err)?;
        for x in &m.elems {
            for w in &m.elems {
                let (a, b) = (m.m(x, w), kl.mu(x, w));
                ensure(a == b, || format!("{name}: M({x}, {w}) = {a}, mu = {b}"))?;
            }
        }
    }
    Ok(())
}

fn three_way_mu() -> Check {
    for name in ["A2", "A3", "A4"] {
        let h = hecke(name);
        let bound = full_bound(&h);
        let trace = TypeATrace::new(h.coxeter()).map_err(err)?;
        let form = JonesForm::new(h.tl(), &trace);
        let m = h.tl().coeff_tables(bound).map_err(err)?;
        let kl = h.kl_tables(bound).map_err(err)?;
        for x in &m.elems {
            for y in &m.elems {
                let t = form.mu_from_trace(x, y).map_err(err)?;
                let (o, mm) = (kl.mu_tilde(x, y), m.m_tilde(x, y));
                ensure(t == o && o == mm, || format!("{name} ({x}, {y}): trace {t}, oracle {o}, M {mm}"))?;
            }
        }
    }
    Ok(())
}

fn positivity() -> Check {
    let cases = [("A4", None), ("B3", None), ("D4", None), ("H3", Some(8))];
    let dihedral: Vec<(String, Option<usize>)> = (3..=7).map(|m| (format!("I2({m})"), None)).collect();
    for (name, bound) in cases.iter().map(|(n, b)| (n.to_string(), *b)).chain(dihedral) {
        let h = hecke(&name);
        let bound = bound.unwrap_or_else(|| full_bound(&h));
        for sc in h.tl().structure_constants(bound).map_err(err)? {
            ensure(sc.is_positive(), || format!("{name}: c_{} c_{} at c_{} is {}", sc.x, sc.y, sc.z, sc.coeff))?;
        }
    }
    Ok(())
}

fn projection() -> Check {
    let mut names = vec!["A3".to_string(), "B3".to_string()];
    names.extend((3..=7).map(|m| format!("I2({m})")));
    names.push("D4".to_string());
    for name in &names {
        let h = hecke(name);
        let cox = h.coxeter();
        for w in cox.enumerate_all(Filter::All).map_err(err)? {
            let theta = h.theta(&*h.kl_basis(&w).map_err(err)?).map_err(err)?;
            if cox.is_fully_commutative(&w) {
                let c = h.tl().canonical_basis(&w, Algorithm::Triangular).map_err(err)?;
                ensure(theta == *c, || format!("{name}: theta(C'_{w}) differs from c_{w}"))?;
            } else if name != "D4" {
                ensure(theta.is_zero(), || format!("{name}: theta(C'_{w}) is nonzero"))?;
            }
        }
        let s = cox.check_property_s(cox.max_length().map_err(err)?).map_err(err)?;
        if name == "D4" {
            let want = cox.parse_element("1 3 4 2 1 3 4").map_err(err)?;
            let first = s.witness().ok_or("D4: Property S holds")?;
            let got = cox.parse_element(first).map_err(err)?;
            ensure(got == want, || format!("D4 witness {got}"))?;
        } else {
            ensure(s.holds(), || format!("{name}: Property S fails at {:?}", s.witness()))?;
        }
    }
    Ok(())
}

fn jones_form() -> Check {
    for name in ["A1", "A2", "A3", "A4"] {
        let h = hecke(name);
        let trace = TypeATrace::new(h.coxeter()).map_err(err)?;
        let report = JonesForm::new(h.tl(), &trace).verify_property_b(full_bound(&h)).map_err(err)?;
        ensure(report.holds(), || format!("{name}: {report}"))?;
        for line in &report.notes {
            ensure(line.ends_with(": ok"), || format!("{name}: {line}"))?;
        }
    }
    Ok(())
}

fn internal_consistency() -> Check {
    for (name, bound) in groups_with_bounds() {
        let h = hecke(name);
        let bound = bound.unwrap_or_else(|| full_bound(&h));
        let tl = h.tl();
        tl.coeff_tables(bound).map_err(|e| format!("{name}: {e}"))?;
        for w in h.coxeter().enumerate(bound, Filter::FullyCommutative).map_err(err)? {
            let tri = tl.canonical_basis(&w, Algorithm::Triangular).map_err(err)?;
            let rec = tl.canonical_basis(&w, Algorithm::Recursion).map_err(err)?;
            ensure(tri == rec, || format!("{name}: algorithms differ at c_{w}"))?;
        }
    }
    Ok(())
}

fn recurrences() -> Check {
    for name in ["A3", "B3", "I2(5)", "I2(6)", "I2(7)"] {
        let h = hecke(name);
        let cox = h.coxeter();
        let bound = full_bound(&h);
        let kl = h.kl_tables(bound).map_err(err)?;
        let r = check_string_identity(cox, "mu-strings", &kl.elems, bound, |a, b| kl.mu_tilde(a, b)).map_err(err)?;
        exercised(name, &r)?;
        let m = h.tl().coeff_tables(bound).map_err(err)?;
        let r = check_string_identity(cox, "M-strings", &m.elems, bound, |a, b| m.m_tilde(a, b)).map_err(err)?;
        exercised(name, &r)?;
        exercised(name, &check_coset_factorization(h.tl(), bound).map_err(err)?)?;
    }
    Ok(())
}

fn star_combinatorics() -> Check {
    for name in ["A3", "A4", "B3"] {
        let cox = Coxeter::preset(name).map_err(err)?;
        exercised(name, &check_star_statistics(&cox, cox.max_length().map_err(err)?).map_err(err)?)?;
    }
    let a3 = Coxeter::preset("A3").map_err(err)?;
    let x = a3.parse_element("2").map_err(err)?;
    let w = a3.parse_element("2 1 3 2").map_err(err)?;
    let (even, odd) = fc_interval_parity(&a3, &x, &w).map_err(err)?;
    ensure(even != odd, || format!("interval has {even} even and {odd} odd elements"))
}

fn negative_controls() -> Check {
    let affine = Arc::new(Coxeter::preset("~A2").map_err(err)?);
    ensure(bipartite_coloring(affine.graph()).is_none(), || "~A2 was 2-coloured".into())?;
    let tl = TlAlgebra::new(affine.clone());
    let table = TraceTable::parse(&affine, "e : v^-3 + 3v^-1 + 3v + v^3").map_err(err)?;
    let e = affine.identity();
    let refused = JonesForm::new(&tl, &table).mu_from_trace(&e, &e);
    ensure(matches!(refused, Err(Error::NotBipartite)), || format!("mu_from_trace gave {refused:?}"))?;

    let h = hecke("A3");
    let cox = h.coxeter();
    let mut corrupted = TypeATrace::new(cox).map_err(err)?.to_table(cox, 6).map_err(err)?;
    let w = cox.parse_element("1 2").map_err(err)?;
    corrupted.values.insert(w, LaurentPoly::delta_pow(2).shift(-2));
    let report = JonesForm::new(h.tl(), &corrupted).verify_property_b(6).map_err(err)?;
    ensure(!report.holds() && report.witness().is_some(), || format!("corrupted table passed: {report}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked A3 example: trace, mu and P", worked_example),
        ("M equals mu on all fully commutative pairs", m_equals_mu),
        ("mu from trace, oracle and M agree", three_way_mu),
        ("c-basis structure constants are positive in delta", positivity),
        ("projection of C' and the D4 Property S witness", projection),
        ("type A trace form: adjoint, orthonormal, homogeneous, positive", jones_form),
        ("q* two ways and both c-basis algorithms agree", internal_consistency),
        ("string recurrences and coset factorization", recurrences),
        ("star statistics and interval imbalance", star_combinatorics),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2} {name} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
