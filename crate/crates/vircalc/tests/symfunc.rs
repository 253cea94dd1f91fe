use num_traits::{One, Zero};
use proptest::prelude::*;

use vircalc::partition::Partition;
use vircalc::rational::{int, rat, Rational};
use vircalc::symfunc::{
    annihilate, complete, elementary, from_schur, hall, involution, jack, monomial, monomial_expand,
    schur, schur_expand, SymFunc,
};

/// Number of semistandard tableaux of shape `shape` and content `content`.
fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    fn fill(shape: &[usize], content: &[usize], letter: usize, rows: &mut Vec<Vec<usize>>) -> u64 {
        if letter == content.len() {
            return u64::from(rows.iter().zip(shape).all(|(r, &s)| r.len() == s));
        }
        // place content[letter] copies of `letter` as a horizontal strip
        let mut count = 0;
        fn strip(
            shape: &[usize],
            content: &[usize],
            letter: usize,
            row: usize,
            left: usize,
            rows: &mut Vec<Vec<usize>>,
            count: &mut u64,
        ) {
            if left == 0 {
                *count += fill(shape, content, letter + 1, rows);
                return;
            }
            if row == shape.len() {
                return;
            }
            let len = rows[row].len();
            // a new entry in `row` at column c needs the cell above filled with a smaller letter
            let above_limit = if row == 0 {
                shape[0]
            } else {
                rows[row - 1].iter().take_while(|&&x| x < letter).count()
            };
            let room = shape[row].min(above_limit).saturating_sub(len);
            for k in 0..=room.min(left) {
                rows[row].extend(std::iter::repeat_n(letter, k));
                strip(shape, content, letter, row + 1, left - k, rows, count);
                let l = rows[row].len();
                rows[row].truncate(l - k);
            }
        }
        strip(shape, content, letter, 0, content[letter], rows, &mut count);
        count
    }
    let mut rows = vec![Vec::new(); shape.len()];
    fill(shape, content, 0, &mut rows)
}

#[test]
fn schur_monomial_coefficients_are_kostka_numbers() {
    for n in 1..=6 {
        for lam in Partition::all(n) {
            let expansion = monomial_expand(&schur(&lam));
            for mu in Partition::all(n) {
                let want = kostka(lam.parts(), mu.parts());
                let got = expansion.get(&mu).cloned().unwrap_or_else(Rational::zero);
                assert_eq!(got, int(want as i64), "K_{lam},{mu}");
            }
        }
    }
}

#[test]
fn two_part_jack_closed_form() {
    // P_(2) = m_2 + 2/(1+α) m_11
    for (n, d) in [(1, 1), (2, 1), (1, 2), (3, 2), (7, 5)] {
        let a = rat(n, d);
        let want = &monomial(&Partition::new(vec![2]))
            + &monomial(&Partition::new(vec![1, 1])).scale(&(int(2) / (int(1) + &a)));
        assert_eq!(jack(&Partition::new(vec![2]), &a).unwrap(), want);
    }
}

#[test]
fn schur_orthonormal() {
    for n in 0..=8 {
        let parts = Partition::all(n);
        let s: Vec<SymFunc> = parts.iter().map(schur).collect();
        for (i, a) in s.iter().enumerate() {
            for (j, b) in s.iter().enumerate() {
                let want = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(hall(a, b), want, "{} {}", parts[i], parts[j]);
            }
        }
    }
}

#[test]
fn e_h_generating_series_are_inverse() {
    for d in 1..=10i64 {
        let mut total = SymFunc::zero();
        for j in 0..=d {
            let term = &elementary(j) * &complete(d - j);
            total += if j % 2 == 0 { term } else { -term };
        }
        assert!(total.is_zero(), "degree {d}");
    }
}

#[test]
fn involution_conjugates_schur() {
    for lam in Partition::up_to(8) {
        assert_eq!(involution(&schur(&lam)), schur(&lam.conjugate()), "{lam}");
    }
}

#[test]
fn schur_is_unitriangular_over_monomials() {
    for lam in Partition::up_to(7) {
        let diff = &schur(&lam) - &monomial(&lam);
        for mu in monomial_expand(&diff).keys() {
            assert!(mu.parts() < lam.parts(), "{lam}: {mu}");
        }
    }
}

#[test]
fn schur_roundtrip() {
    let f = SymFunc::parse("3*p1^3 - 1/2*p2*p1 + p3 + 5").unwrap();
    assert_eq!(from_schur(&schur_expand(&f)), f);
}

#[test]
fn display_is_canonical() {
    let s = schur(&Partition::new(vec![2, 2]));
    assert_eq!(s.to_string(), "1/12*p1^4 + 1/4*p2^2 - 1/3*p1*p3");
    assert_eq!(SymFunc::zero().to_string(), "0");
}

#[test]
fn parser_rejects_garbage() {
    for bad in ["p", "p0", "p1^", "2*", "s(2,", "q1", "1/0"] {
        assert!(SymFunc::parse(bad).is_err(), "{bad}");
    }
}

fn arb_symfunc(max_deg: usize) -> impl Strategy<Value = SymFunc> {
    let parts = Partition::up_to(max_deg);
    prop::collection::vec((0..parts.len(), -9i64..=9, 1i64..=4), 0..6).prop_map(move |ts| {
        SymFunc::from_terms(ts.into_iter().map(|(i, n, d)| (parts[i].clone(), rat(n, d))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_adjoint_to_annihilation(f in arb_symfunc(6), g in arb_symfunc(8), n in 1usize..=8) {
        prop_assert_eq!(hall(&f.mul_p(n), &g), hall(&f, &annihilate(n, &g)));
    }

    #[test]
    fn text_roundtrip(f in arb_symfunc(6)) {
        prop_assert_eq!(SymFunc::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn json_roundtrip(f in arb_symfunc(6)) {
        prop_assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn involution_is_an_isometric_involution(f in arb_symfunc(6), g in arb_symfunc(6)) {
        prop_assert_eq!(involution(&involution(&f)), f.clone());
        prop_assert_eq!(hall(&involution(&f), &involution(&g)), hall(&f, &g));
    }

    #[test]
    fn product_is_commutative_and_distributive(f in arb_symfunc(4), g in arb_symfunc(4), h in arb_symfunc(4)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }
}
