use std::sync::{Arc, OnceLock};

use gentl::combination::Combination;
use gentl::coxeter::{Filter, Side};
use gentl::hecke::HeckeAlgebra;
use gentl::jones::{JonesForm, PlanarDiagram, TypeATrace};
use gentl::tl::Algorithm;
use gentl::{Coxeter, GroupElement, LaurentPoly};
use proptest::prelude::*;
use proptest::sample::select;

struct Fixture {
    h: HeckeAlgebra,
    all: Vec<GroupElement>,
    fc: Vec<GroupElement>,
}

fn fixture(name: &'static str) -> &'static Fixture {
    static CACHE: OnceLock<std::sync::Mutex<Vec<(&'static str, &'static Fixture)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    if let Some((_, f)) = guard.iter().find(|(n, _)| *n == name) {
        return f;
    }
    let h = HeckeAlgebra::new(Arc::new(Coxeter::preset(name).unwrap()));
    let all = h.coxeter().enumerate_all(Filter::All).unwrap();
    let fc = h.coxeter().enumerate_all(Filter::FullyCommutative).unwrap();
    let f: &'static Fixture = Box::leak(Box::new(Fixture { h, all, fc }));
    guard.push((name, f));
    f
}

fn small_coeff() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, -3i64..=3), 0..3).prop_map(LaurentPoly::from_terms)
}

fn tl_element(name: &'static str) -> impl Strategy<Value = Combination> {
    let fc = fixture(name).fc.clone();
    prop::collection::vec((select(fc), small_coeff()), 0..4).prop_map(|terms| terms.into_iter().collect())
}

fn hecke_element(name: &'static str) -> impl Strategy<Value = Combination> {
    let all = fixture(name).all.clone();
    prop::collection::vec((select(all), small_coeff()), 0..3).prop_map(|terms| terms.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tl_product_is_associative(a in tl_element("B3"), b in tl_element("B3"), c in tl_element("B3")) {
        let tl = fixture("B3").h.tl();
        let left = tl.t_mul(&tl.t_mul(&a, &b).unwrap(), &c).unwrap();
        let right = tl.t_mul(&a, &tl.t_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in tl_element("A3"), b in tl_element("A3")) {
        let tl = fixture("A3").h.tl();
        prop_assert_eq!(tl.bar(&tl.bar(&a).unwrap()).unwrap(), a.clone());
        let lhs = tl.bar(&tl.t_mul(&a, &b).unwrap()).unwrap();
        let rhs = tl.t_mul(&tl.bar(&a).unwrap(), &tl.bar(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_reverses_products(a in tl_element("A4"), b in tl_element("A4")) {
        let tl = fixture("A4").h.tl();
        let lhs = tl.star_involution(&tl.t_mul(&a, &b).unwrap()).unwrap();
        let rhs = tl.t_mul(&tl.star_involution(&b).unwrap(), &tl.star_involution(&a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn c_basis_round_trip(a in tl_element("H3")) {
        let tl = fixture("H3").h.tl();
        let c = tl.to_c_basis(&a).unwrap();
        prop_assert_eq!(tl.from_c_basis(&c).unwrap(), a);
    }

    #[test]
    fn projection_is_multiplicative(x in hecke_element("B3"), y in hecke_element("B3")) {
        let h = &fixture("B3").h;
        let lhs = h.theta(&h.h_mul(&x, &y).unwrap()).unwrap();
        let rhs = h.tl().t_mul(&h.theta(&x).unwrap(), &h.theta(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hecke_generators_are_self_adjoint(s in 0u8..3, x in select(fixture("B3").all.clone()), y in select(fixture("B3").all.clone())) {
        let h = &fixture("B3").h;
        let (tx, ty) = (Combination::basis(x), Combination::basis(y));
        let lhs = h.h_form(&h.h_mul_gen(s, &tx, Side::Left).unwrap(), &ty);
        let rhs = h.h_form(&tx, &h.h_mul_gen(s, &ty, Side::Left).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_is_central_and_star_invariant(a in tl_element("A4"), b in tl_element("A4")) {
        let f = fixture("A4");
        let trace = TypeATrace::new(f.h.coxeter()).unwrap();
        let form = JonesForm::new(f.h.tl(), &trace);
        let tl = f.h.tl();
        let ab = form.trace(&tl.t_mul(&a, &b).unwrap()).unwrap();
        let ba = form.trace(&tl.t_mul(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert_eq!(form.trace(&tl.star_involution(&a).unwrap()).unwrap(), form.trace(&a).unwrap());
        prop_assert_eq!(form.form(&a, &b).unwrap(), form.form(&b, &a).unwrap());
    }

    #[test]
    fn diagram_is_independent_of_reduced_word(w in select(fixture("A4").fc.clone())) {
        let cox = fixture("A4").h.coxeter();
        let n = 5;
        let mut seen = None;
        for word in cox.reduced_words(&w).unwrap() {
            let mut d = PlanarDiagram::identity(n);
            for s in word {
                d = d.mul(&PlanarDiagram::generator(s as usize + 1, n).unwrap()).unwrap();
            }
            prop_assert!(d.is_planar());
            prop_assert_eq!(d.loops, 0);
            if let Some(prev) = &seen {
                prop_assert_eq!(prev, &d);
            }
            seen = Some(d);
        }
    }

    #[test]
    fn diagram_product_is_associative(
        a in prop::collection::vec(1usize..6, 0..6),
        b in prop::collection::vec(1usize..6, 0..6),
        c in prop::collection::vec(1usize..6, 0..6),
    ) {
        let build = |word: &[usize]| word.iter().fold(PlanarDiagram::identity(6), |d, &i| d.mul(&PlanarDiagram::generator(i, 6).unwrap()).unwrap());
        let (a, b, c) = (build(&a), build(&b), build(&c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }
}

#[test]
fn kl_left_multiplication_rule() {
    for name in ["A3", "B3", "H3"] {
        let f = fixture(name);
        let h = &f.h;
        let cox = h.coxeter();
        let bound = if name == "H3" { 8 } else { 100 };
        let kl = h.kl_tables(bound).unwrap();
        for w in f.all.iter().filter(|w| w.length() < bound) {
            for s in cox.graph().generators() {
                let lhs = h.h_mul(&h.kl_basis(&cox.generator(s).unwrap()).unwrap(), &h.kl_basis(w).unwrap()).unwrap();
                let sw = cox.mul_gen(w, s, Side::Left).unwrap();
                let mut rhs = Combination::zero();
                if sw.length() < w.length() {
                    rhs.add_scaled(&h.kl_basis(w).unwrap(), &LaurentPoly::delta());
                } else {
                    rhs.add_scaled(&h.kl_basis(&sw).unwrap(), &LaurentPoly::one());
                    for z in cox.lower_interval(w).unwrap() {
                        let mu = kl.mu(&z, w);
                        if mu != 0 && cox.descents(&z, Side::Left).contains(s) {
                            rhs.add_scaled(&h.kl_basis(&z).unwrap(), &LaurentPoly::from(mu));
                        }
                    }
                }
                assert_eq!(lhs, rhs, "{name}: C'_{} C'_{w}", s + 1);
            }
        }
    }
}

#[test]
fn kl_products_project_positively() {
    for name in ["A3", "B3"] {
        let f = fixture(name);
        let h = &f.h;
        for x in &f.all {
            for y in &f.all {
                let prod = h.h_mul(&h.kl_basis(x).unwrap(), &h.kl_basis(y).unwrap()).unwrap();
                let coords = h.tl().to_c_basis(&h.theta(&prod).unwrap()).unwrap();
                for (z, g) in coords.iter() {
                    assert!(g.is_nonneg_delta(), "{name}: g({x}, {y}, {z}) = {g}");
                }
            }
        }
    }
}

#[test]
fn almost_orthonormal_c_basis() {
    for name in ["A3", "A4"] {
        let f = fixture(name);
        let trace = TypeATrace::new(f.h.coxeter()).unwrap();
        let form = JonesForm::new(f.h.tl(), &trace);
        for x in &f.fc {
            let cx = f.h.tl().canonical_basis(x, Algorithm::Triangular).unwrap();
            for y in &f.fc {
                let cy = f.h.tl().canonical_basis(y, Algorithm::Triangular).unwrap();
                let mut p = form.form(&cx, &cy).unwrap();
                if x == y {
                    p = &p - &LaurentPoly::one();
                }
                assert!(p.in_v_inv_a_minus(), "{name}: <c_{x}, c_{y}> = {p}");
                if x != y {
                    let mu = p.coeff_i64(-1);
                    assert!(mu >= 0, "{name}: negative mu at ({x}, {y})");
                }
            }
        }
    }
}

#[test]
fn kl_solve_order_is_irrelevant() {
    let f = fixture("B3");
    let fresh = HeckeAlgebra::new(Arc::new(Coxeter::preset("B3").unwrap()));
    for w in f.all.iter().rev() {
        assert_eq!(fresh.kl_basis(w).unwrap(), f.h.kl_basis(w).unwrap());
    }
}

#[test]
fn longest_dihedral_elements_lie_in_the_kernel() {
    for name in ["A3", "B3", "H3", "I2(7)"] {
        let h = &fixture(name).h;
        let cox = h.coxeter();
        for (s, t) in cox.graph().noncommuting_pairs() {
            let m = cox.graph().m(s, t).unwrap() as usize;
            let word: Vec<u8> = (0..m).map(|k| if k % 2 == 0 { s } else { t }).collect();
            let w = cox.normal_form(&word).unwrap();
            assert!(h.in_j(&h.kl_basis(&w).unwrap()).unwrap(), "{name}: {w}");
        }
    }
}
