//! Dense exact linear algebra on small rational matrices.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` if singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..k).fold(Rational::zero(), |acc, l| acc + &a[i][l] * &b[l][j])
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(3), int(1)],
            vec![int(0), int(1), int(4)],
        ];
        let inv = invert(&m).unwrap();
        assert_eq!(mul(&m, &inv), identity(3));
    }

    #[test]
    fn singular_detected() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(invert(&m).is_none());
    }
}
