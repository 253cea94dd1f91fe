use num_traits::One;
use proptest::prelude::*;

use vircalc::checks::fock_monomials;
use vircalc::latticeva::{
    create, field_mode, field_mode_vector, mode, translate, virasoro, Lattice, VAElem,
};
use vircalc::partition::Partition;
use vircalc::rational::{int, rat, Rational};
use vircalc::symfunc::{annihilate, hall, SymFunc};

fn basis_elements(lat: &Lattice, alphas: &[Vec<i64>], d: u32) -> Vec<VAElem> {
    alphas
        .iter()
        .flat_map(|a| {
            fock_monomials(lat.rank(), d)
                .into_iter()
                .map(move |m| VAElem::term(a.clone(), m, Rational::one()))
        })
        .collect()
}

/// Degenerate rank-2 lattice `B = 2 (x, y)ᵀ(x, y)` with sign datum `[[x², 2xy], [0, y²]]`.
fn arb_degenerate_lattice() -> impl Strategy<Value = Lattice> {
    (-2i64..=2, -2i64..=2).prop_map(|(x, y)| {
        let pairing = vec![vec![2 * x * x, 2 * x * y], vec![2 * x * y, 2 * y * y]];
        let sign = vec![vec![x * x, 2 * x * y], vec![0, y * y]];
        Lattice::new(pairing, sign).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn virasoro_bracket_on_degenerate_lattices(lat in arb_degenerate_lattice()) {
        let alphas = [vec![0, 0], vec![1, 0], vec![1, -1], vec![2, 1]];
        for x in basis_elements(&lat, &alphas, 3) {
            for n in -1..=3i64 {
                for m in (n + 1)..=3i64 {
                    let lhs = &virasoro(&lat, n, &virasoro(&lat, m, &x)) - &virasoro(&lat, m, &virasoro(&lat, n, &x));
                    prop_assert_eq!(lhs, virasoro(&lat, n + m, &x).scale(&int(n - m)));
                }
            }
        }
    }

    #[test]
    fn json_roundtrip(
        terms in prop::collection::vec((-3i64..=3, -3i64..=3, 0usize..10, -5i64..=5, 1i64..=3), 0..5)
    ) {
        let lat = Lattice::grassmannian();
        let monos = fock_monomials(2, 2);
        let mut x = VAElem::zero();
        for (a, b, i, n, d) in terms {
            x.add_term(vec![a, b], monos[i % monos.len()].clone(), rat(n, d));
        }
        prop_assert_eq!(VAElem::from_json(&lat, &x.to_json()).unwrap(), x);
    }
}

#[test]
fn translation_covariance() {
    let lat = Lattice::grassmannian();
    let xs = basis_elements(&lat, &[vec![0, 0], vec![1, 0], vec![2, 1], vec![-1, 3]], 3);
    let fields: [Vec<i64>; 3] = [vec![0, 1], vec![1, 0], vec![1, 2]];
    for x in &xs {
        for u in &fields {
            for n in -3..=3i64 {
                let lhs = translate(&lat, &field_mode(&lat, u, n, x));
                let rhs = &field_mode(&lat, u, n, &translate(&lat, x))
                    - &field_mode(&lat, u, n - 1, x).scale(&int(n));
                assert_eq!(lhs, rhs, "e^{u:?} n={n} x={x}");

                let lhs = translate(&lat, &field_mode_vector(&lat, u, n, x));
                let rhs = &field_mode_vector(&lat, u, n, &translate(&lat, x))
                    - &field_mode_vector(&lat, u, n - 1, x).scale(&int(n));
                assert_eq!(lhs, rhs, "{u:?}_(-1) n={n} x={x}");
            }
        }
    }
}

#[test]
fn vacuum_field_modes() {
    let lat = Lattice::grassmannian();
    for x in basis_elements(&lat, &[vec![0, 0], vec![3, 1]], 3) {
        for n in -3..=3i64 {
            let got = field_mode(&lat, &[0, 0], n, &x);
            let want = if n == -1 { x.clone() } else { VAElem::zero() };
            assert_eq!(got, want, "n={n} x={x}");
        }
    }
}

fn to_fock(f: &SymFunc) -> VAElem {
    let mut x = VAElem::zero();
    for (l, c) in f.terms() {
        x.add_term(vec![0], l.parts().iter().map(|&p| (0, p as u32)).collect(), c.clone());
    }
    x
}

fn from_fock(x: &VAElem) -> SymFunc {
    SymFunc::from_terms(
        x.terms()
            .iter()
            .map(|((_, m), c)| (Partition::new(m.iter().map(|&(_, k)| k as usize).collect()), c.clone())),
    )
}

#[test]
fn modes_of_even_rank_one_lattice_match_hall_adjoints() {
    // v_{-n} ↔ p_n and v_{(n)} ↔ 2 n ∂/∂p_n when B(v, v) = 2
    let lat = Lattice::new(vec![vec![2]], vec![vec![1]]).unwrap();
    for n in 1..=4u32 {
        for lam in Partition::up_to(5) {
            let f = SymFunc::p_lambda(&lam);
            let x = to_fock(&f);
            assert_eq!(from_fock(&create(&lat, &[1], n, &x)), f.mul_p(n as usize));
            let lowered = from_fock(&mode(&lat, &[1], n as i64, &x));
            assert_eq!(lowered, annihilate(n as usize, &f).scale(&int(2)));
            for mu in Partition::all(lam.size() + n as usize) {
                let g = SymFunc::p_lambda(&mu);
                let up = hall(&from_fock(&create(&lat, &[1], n, &x)), &g);
                let down = hall(&f, &from_fock(&mode(&lat, &[1], n as i64, &to_fock(&g))));
                assert_eq!(up.clone() * int(2), down, "n={n} λ={lam} μ={mu}");
            }
        }
    }
}
