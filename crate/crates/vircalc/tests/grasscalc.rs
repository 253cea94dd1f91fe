use proptest::prelude::*;

use vircalc::grasscalc::{
    constraint_check, dual_convention, fock_to_symfunc, geometricity_check, gr_class_schur,
    gr_class_wallcross, gr_integral, gr_virasoro, hecke, integrals_by_recursion, reduce_cohomology,
    symfunc_to_fock, wallcross_steps, GrElem,
};
use vircalc::latticeva::{self, Lattice};
use vircalc::partition::Partition;
use vircalc::rational::{int, rat};
use vircalc::symfunc::{hall, involution, schur, SymFunc};

#[test]
fn lattice_virasoro_is_the_grassmannian_operator() {
    let lat = Lattice::grassmannian();
    for big_n in 0..=4i64 {
        for k in 0..=big_n {
            for lam in Partition::up_to(5) {
                let f = SymFunc::p_lambda(&lam);
                let x = symfunc_to_fock(&f, &[big_n, k]);
                for n in 0..=4i64 {
                    let got = fock_to_symfunc(&latticeva::virasoro(&lat, n, &x), &[big_n, k]).unwrap();
                    let want = gr_virasoro(n, &GrElem::new(big_n, k, f.clone())).f;
                    assert_eq!(got, want, "N={big_n} k={k} n={n} λ={lam}");
                }
            }
        }
    }
}

#[test]
fn subspace_convention_commutes_with_virasoro() {
    // L_n changes degree by -n, so the degree sign only rescales by (-1)^n
    let x = GrElem::new(5, 2, SymFunc::parse("p1^3*p2 - 2*p4*p1 + 3*p2^2").unwrap());
    for n in 1..=4i64 {
        let a = dual_convention(&gr_virasoro(n, &x).f);
        let b = gr_virasoro(n, &GrElem::new(5, 2, dual_convention(&x.f))).f;
        assert_eq!(a, b.scale(&int(if n % 2 == 0 { 1 } else { -1 })));
    }
}

#[test]
fn wallcross_matches_schur_in_small_cases() {
    for big_n in 0..=4 {
        for k in 0..=big_n {
            assert_eq!(gr_class_wallcross(k, big_n).unwrap(), gr_class_schur(k, big_n).unwrap());
        }
    }
}

#[test]
fn every_wallcross_step_is_a_symmetrized_hecke_operator() {
    for big_n in 1..=5 {
        for k in 1..=big_n {
            for step in wallcross_steps(k, big_n).unwrap() {
                let s = step.observed_sign.expect("proportional to H^sym");
                assert_eq!(s, if (big_n - step.j - 1) % 2 == 0 { 1 } else { -1 });
            }
        }
    }
}

#[test]
fn gr_elem_json() {
    let x = gr_class_schur(2, 4).unwrap();
    let v = x.to_json();
    assert_eq!(v["N"], 4);
    assert_eq!(v["k"], 2);
    assert_eq!(SymFunc::from_json(&v["f"]).unwrap(), x.f);
    assert_eq!(gr_class_schur(1, 2).unwrap().to_string(), "Q^2*q^1 * (-p1)");
}

#[test]
fn integrals_on_projective_spaces() {
    // ∫_{P^{N-1}} c_1(O(1))^{N-1} = 1 and p_1 = -c_1(O(1)) on the tautological line
    for big_n in 1..=6i64 {
        let d = (big_n - 1) as u32;
        let v = gr_integral(1, big_n, &SymFunc::p(1).pow(d)).unwrap();
        assert_eq!(v, int(if d.is_multiple_of(2) { 1 } else { -1 }));
    }
}

#[test]
fn integrals_on_gr_2_5() {
    // degree of Gr(2,5) in the Plücker embedding is 5
    let v = gr_integral(2, 5, &SymFunc::p(1).pow(6)).unwrap();
    assert_eq!(v, int(5));
    let t = integrals_by_recursion(2, 5, &int(5)).unwrap();
    for (lam, x) in &t {
        assert_eq!(*x, gr_integral(2, 5, &SymFunc::p_lambda(lam)).unwrap(), "{lam}");
    }
}

#[test]
fn reduction_kills_schur_outside_the_box() {
    for lam in Partition::up_to(6) {
        let r = reduce_cohomology(2, 5, &schur(&lam)).unwrap();
        assert_eq!(r.is_empty(), !lam.fits_in_box(2, 3), "{lam}");
    }
}

#[test]
fn geometricity_on_products() {
    let rep = geometricity_check(2, 5, 2, 6).unwrap();
    assert!(rep.passed());
    assert!(rep.cases.iter().any(|c| c.generator.contains('*')));
}

#[test]
fn constraints_include_the_degree_identity() {
    let rep = constraint_check(2, 5, 3).unwrap();
    assert_eq!(rep.residuals.len(), 4);
    assert!(rep.passed());
}

#[test]
fn invalid_grassmannians() {
    assert!(gr_class_schur(-1, 3).is_err());
    assert!(gr_class_wallcross(4, 3).is_err());
    assert!(integrals_by_recursion(3, 2, &int(1)).is_err());
}

fn arb_symfunc(max_deg: usize) -> impl Strategy<Value = SymFunc> {
    let parts = Partition::up_to(max_deg);
    prop::collection::vec((0..parts.len(), -9i64..=9, 1i64..=4), 0..5).prop_map(move |ts| {
        SymFunc::from_terms(ts.into_iter().map(|(i, n, d)| (parts[i].clone(), rat(n, d))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hecke_adjoint(f in arb_symfunc(4), g in arb_symfunc(6), n in -3i64..=3) {
        let lhs = hall(&hecke(n, &f), &g);
        let rhs = hall(&f, &involution(&hecke(-n, &involution(&g)))) * int(if n % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hecke_relation(f in arb_symfunc(4), n in -3i64..=3, m in -3i64..=3) {
        prop_assert_eq!(hecke(n, &hecke(m, &f)), -hecke(m - 1, &hecke(n + 1, &f)));
    }
}
