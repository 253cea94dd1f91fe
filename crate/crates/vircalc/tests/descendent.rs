use proptest::prelude::*;

use vircalc::descendent::{
    from_symfunc, monomials_up_to_weight, r_op, to_symfunc, DescendentPoly, Monomial, Virasoro,
};
use vircalc::quiver::{beilinson_p2, linear, DgQuiver, FramingVector};
use vircalc::rational::{int, rat};
use vircalc::SymFunc;

fn framed_bracket(q: &DgQuiver, f: Vec<i64>, weight: u32) {
    let vir = Virasoro::framed(q, FramingVector::new(f).unwrap()).unwrap();
    for m in monomials_up_to_weight(q.num_vertices(), weight) {
        let g = DescendentPoly::monomial(m);
        for n in 0..=3i64 {
            for k in (n + 1)..=3i64 {
                let lhs = &vir.l(n, &vir.l(k, &g)) - &vir.l(k, &vir.l(n, &g));
                assert_eq!(lhs, vir.l(n + k, &g).scale(&int(k - n)), "n={n} m={k} {}", g.to_text(q));
            }
        }
    }
}

#[test]
fn framed_brackets() {
    framed_bracket(&linear(1), vec![3], 6);
    framed_bracket(&beilinson_p2(), vec![1, 0, 2], 5);
}

#[test]
fn symfunc_dictionary_roundtrip() {
    let f = SymFunc::parse("p1^2*p3 - 2/3*p2 + 4").unwrap();
    assert_eq!(to_symfunc(&from_symfunc(&f), 7).unwrap(), f);
}

#[test]
fn weight_zero_operator_lands_in_kernel_of_r_minus_one() {
    for q in [linear(1), beilinson_p2()] {
        let vir = Virasoro::new(&q);
        for m in monomials_up_to_weight(q.num_vertices(), 4) {
            let g = DescendentPoly::monomial(m);
            assert!(r_op(-1, &vir.l_wt0(&g)).is_zero(), "{}", g.to_text(&q));
        }
    }
}

fn arb_poly(nv: usize) -> impl Strategy<Value = DescendentPoly> {
    let monos = monomials_up_to_weight(nv, 5);
    prop::collection::vec((0..monos.len(), -6i64..=6, 1i64..=3), 0..5).prop_map(move |ts| {
        let mut p = DescendentPoly::zero();
        for (i, n, d) in ts {
            p.add_term(monos[i].clone(), rat(n, d));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn r_n_is_a_derivation(f in arb_poly(3), g in arb_poly(3), n in -1i64..=4) {
        let lhs = r_op(n, &(&f * &g));
        let rhs = &(&r_op(n, &f) * &g) + &(&f * &r_op(n, &g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_roundtrip(f in arb_poly(3)) {
        let q = beilinson_p2();
        prop_assert_eq!(DescendentPoly::parse(&q, &f.to_text(&q)).unwrap(), f);
    }

    #[test]
    fn json_roundtrip(f in arb_poly(3)) {
        let q = beilinson_p2();
        prop_assert_eq!(DescendentPoly::from_json(&q, &f.to_json(&q)).unwrap(), f);
    }
}

#[test]
fn monomial_order_is_by_degree() {
    let a = Monomial::new(vec![(0, 2)]);
    let b = Monomial::new(vec![(0, 1), (0, 0)]);
    assert!(b < a);
}
