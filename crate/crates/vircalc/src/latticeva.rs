//! Lattice vertex algebras of possibly degenerate symmetric lattices.
//!
//! Elements of `V = Q[Λ] ⊗ Sym(Λ ⊗ t^{-1}Q[t^{-1}])` are sparse maps from
//! `(α, Fock monomial)` to rationals. A Fock monomial is a sorted multiset of
//! `(basis index, mode)` pairs standing for `(e_i)_{-mode}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, ParseError};
use crate::partition::Partition;
use crate::rational::{
    factorial_q, format_terms, int, rat, rational_from_json, rational_to_json, sign, Rational,
};

pub type LatticeVec = Vec<i64>;
pub type FockMonomial = Vec<(usize, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    rank: usize,
    pairing: Vec<Vec<i64>>,
    sign_datum: Vec<Vec<i64>>,
}

impl Lattice {
    /// `pairing` must be symmetric and equal to `sign_datum + sign_datumᵀ`.
    pub fn new(pairing: Vec<Vec<i64>>, sign_datum: Vec<Vec<i64>>) -> Result<Self, Error> {
        let rank = pairing.len();
        let square = |m: &Vec<Vec<i64>>| m.len() == rank && m.iter().all(|r| r.len() == rank);
        if rank == 0 || !square(&pairing) || !square(&sign_datum) {
            return Err(Error::InvalidArgument("lattice matrices must be square of equal size".into()));
        }
        for i in 0..rank {
            for j in 0..rank {
                if pairing[i][j] != pairing[j][i] {
                    return Err(Error::InvalidArgument("pairing is not symmetric".into()));
                }
                if sign_datum[i][j] + sign_datum[j][i] != pairing[i][j] {
                    return Err(Error::InvalidArgument("sign datum does not symmetrize to the pairing".into()));
                }
            }
        }
        Ok(Lattice {
            rank,
            pairing,
            sign_datum,
        })
    }

    /// Rank 2 in coordinates `(N, k)` with `B((N,k),(N',k')) = 2kk' - (Nk' + N'k)`
    /// and sign datum `b((N1,k1),(N2,k2)) = k2 (k1 - N1)`.
    pub fn grassmannian() -> Self {
        Lattice::new(vec![vec![0, -1], vec![-1, 2]], vec![vec![0, -1], vec![0, 1]])
            .expect("valid Grassmannian lattice")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pairing_matrix(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    pub fn sign_matrix(&self) -> &[Vec<i64>] {
        &self.sign_datum
    }

    fn bilinear(m: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                s += x * m[i][j] * y;
            }
        }
        s
    }

    /// `B(a, b)`.
    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        Lattice::bilinear(&self.pairing, a, b)
    }

    /// `ε_{a,b} = (-1)^{b(a,b)}`.
    pub fn epsilon(&self, a: &[i64], b: &[i64]) -> Rational {
        sign(Lattice::bilinear(&self.sign_datum, a, b))
    }

    fn basis(&self, i: usize) -> LatticeVec {
        (0..self.rank).map(|j| i64::from(i == j)).collect()
    }

    fn check(&self, v: &[i64]) -> Result<(), Error> {
        if v.len() != self.rank {
            return Err(Error::InvalidArgument(format!(
                "lattice vector has {} entries, rank is {}",
                v.len(),
                self.rank
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({ "rank": self.rank, "B": self.pairing, "b": self.sign_datum })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let bad = |m: &str| Error::from(ParseError::Json(format!("lattice: {m}")));
        let mat = |key: &str| -> Result<Vec<Vec<i64>>, Error> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| bad(key))?
                .iter()
                .map(|r| {
                    r.as_array()
                        .and_then(|r| r.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| bad(key))
        };
        let l = Lattice::new(mat("B")?, mat("b")?)?;
        if let Some(r) = v.get("rank") {
            if r.as_u64() != Some(l.rank as u64) {
                return Err(bad("rank does not match matrices"));
            }
        }
        Ok(l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VAElem {
    terms: BTreeMap<(LatticeVec, FockMonomial), Rational>,
}

fn fock_degree(m: &FockMonomial) -> u32 {
    m.iter().map(|x| x.1).sum()
}

fn with_factor(m: &FockMonomial, f: (usize, u32)) -> FockMonomial {
    let mut v = m.clone();
    let pos = v.partition_point(|x| *x < f);
    v.insert(pos, f);
    v
}

fn grouped(m: &FockMonomial) -> Vec<((usize, u32), usize)> {
    let mut out: Vec<((usize, u32), usize)> = Vec::new();
    for &s in m {
        match out.last_mut() {
            Some((t, c)) if *t == s => *c += 1,
            _ => out.push((s, 1)),
        }
    }
    out
}

fn without_one(m: &FockMonomial, f: (usize, u32)) -> FockMonomial {
    let mut v = m.clone();
    let pos = v.iter().position(|&x| x == f).expect("factor present");
    v.remove(pos);
    v
}

impl VAElem {
    pub fn zero() -> Self {
        VAElem::default()
    }

    /// `e^α ⊗ 1`.
    pub fn exp(alpha: LatticeVec) -> Self {
        VAElem::term(alpha, Vec::new(), Rational::one())
    }

    /// `|0> = e^0 ⊗ 1`.
    pub fn vacuum(rank: usize) -> Self {
        VAElem::exp(vec![0; rank])
    }

    pub fn term(alpha: LatticeVec, mut fock: FockMonomial, c: Rational) -> Self {
        fock.sort_unstable();
        let mut x = VAElem::zero();
        x.add_term(alpha, fock, c);
        x
    }

    pub fn add_term(&mut self, alpha: LatticeVec, fock: FockMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((alpha, fock)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(LatticeVec, FockMonomial), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return VAElem::zero();
        }
        VAElem {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Largest Fock degree among the terms.
    pub fn max_fock_degree(&self) -> u32 {
        self.terms.keys().map(|(_, m)| fock_degree(m)).max().unwrap_or(0)
    }

    /// `[[num, den], [α], [[i, mode], ...]]` per term.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((a, m), c)| {
                    json!([
                        rational_to_json(c),
                        a,
                        m.iter().map(|&(i, k)| json!([i, k])).collect::<Vec<_>>()
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(lat: &Lattice, v: &Value) -> Result<Self, Error> {
        let bad = || Error::from(ParseError::Json("vertex algebra element".into()));
        let mut x = VAElem::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let c = rational_from_json(&t[0])?;
            let alpha = t[1]
                .as_array()
                .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                .ok_or_else(bad)?;
            lat.check(&alpha)?;
            let mut fock = Vec::new();
            for f in t[2].as_array().ok_or_else(bad)? {
                let f = f.as_array().filter(|f| f.len() == 2).ok_or_else(bad)?;
                let i = f[0].as_u64().ok_or_else(bad)? as usize;
                let k = f[1].as_u64().ok_or_else(bad)? as u32;
                if i >= lat.rank || k == 0 {
                    return Err(bad());
                }
                fock.push((i, k));
            }
            fock.sort_unstable();
            x.add_term(alpha, fock, c);
        }
        Ok(x)
    }
}

impl fmt::Display for VAElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().map(|((a, m), c)| {
            let alpha: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            let mut body = format!("e^({})", alpha.join(","));
            for ((i, k), e) in grouped(m) {
                body.push_str(&format!("*v{i}(-{k})"));
                if e > 1 {
                    body.push_str(&format!("^{e}"));
                }
            }
            (c, body)
        })))
    }
}

impl AddAssign<&VAElem> for VAElem {
    fn add_assign(&mut self, rhs: &VAElem) {
        for ((a, m), c) in &rhs.terms {
            self.add_term(a.clone(), m.clone(), c.clone());
        }
    }
}

impl AddAssign<VAElem> for VAElem {
    fn add_assign(&mut self, rhs: VAElem) {
        for ((a, m), c) in rhs.terms {
            self.add_term(a, m, c);
        }
    }
}

impl SubAssign<&VAElem> for VAElem {
    fn sub_assign(&mut self, rhs: &VAElem) {
        for ((a, m), c) in &rhs.terms {
            self.add_term(a.clone(), m.clone(), -c.clone());
        }
    }
}

impl Add for &VAElem {
    type Output = VAElem;
    fn add(self, rhs: &VAElem) -> VAElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &VAElem {
    type Output = VAElem;
    fn sub(self, rhs: &VAElem) -> VAElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for VAElem {
    type Output = VAElem;
    fn neg(self) -> VAElem {
        VAElem {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

/// Multiplies by `v_{-k}`, `k >= 1`.
pub fn create(lat: &Lattice, v: &[i64], k: u32, x: &VAElem) -> VAElem {
    assert!(k >= 1, "creation modes are negative");
    assert_eq!(v.len(), lat.rank, "lattice vector length");
    let mut out = VAElem::zero();
    for ((a, m), c) in &x.terms {
        for (i, &vi) in v.iter().enumerate() {
            if vi != 0 {
                out.add_term(a.clone(), with_factor(m, (i, k)), c * int(vi));
            }
        }
    }
    out
}

/// Applies `v_{(k)}`, `k >= 0`: `v_{(0)} = B(v, α)`, and for `k > 0` each
/// factor `w_{-k}` is removed with weight `k B(v, w)`.
pub fn annihilate_mode(lat: &Lattice, v: &[i64], k: u32, x: &VAElem) -> VAElem {
    assert_eq!(v.len(), lat.rank, "lattice vector length");
    let mut out = VAElem::zero();
    for ((a, m), c) in &x.terms {
        if k == 0 {
            out.add_term(a.clone(), m.clone(), c * int(lat.pair(v, a)));
            continue;
        }
        for ((i, mode), mult) in grouped(m) {
            if mode != k {
                continue;
            }
            let b = lat.pair(v, &lat.basis(i));
            if b != 0 {
                let w = c * int(b * k as i64 * mult as i64);
                out.add_term(a.clone(), without_one(m, (i, mode)), w);
            }
        }
    }
    out
}

/// `v_{(n)}` for any integer `n`: creation for `n < 0`, annihilation otherwise.
pub fn mode(lat: &Lattice, v: &[i64], n: i64, x: &VAElem) -> VAElem {
    if n < 0 {
        create(lat, v, (-n) as u32, x)
    } else {
        annihilate_mode(lat, v, n as u32, x)
    }
}

/// Translation `T`.
pub fn translate(lat: &Lattice, x: &VAElem) -> VAElem {
    let mut out = VAElem::zero();
    for ((a, m), c) in &x.terms {
        let single = VAElem::term(a.clone(), m.clone(), c.clone());
        out += create(lat, a, 1, &single);
        for ((i, k), mult) in grouped(m) {
            let raised = with_factor(&without_one(m, (i, k)), (i, k + 1));
            out.add_term(a.clone(), raised, c * int(k as i64 * mult as i64));
        }
    }
    out
}

/// Product of modes `α_{(s·λ_1)} ... α_{(s·λ_l)}` applied to `x`.
fn apply_modes(lat: &Lattice, alpha: &[i64], lambda: &Partition, creation: bool, x: &VAElem) -> VAElem {
    let mut y = x.clone();
    for &p in lambda.parts() {
        if y.is_zero() {
            break;
        }
        y = if creation {
            create(lat, alpha, p as u32, &y)
        } else {
            annihilate_mode(lat, alpha, p as u32, &y)
        };
    }
    y
}

/// Coefficient of `z^{-1-n}` in `Y(e^α, z) x`.
pub fn field_mode(lat: &Lattice, alpha: &[i64], n: i64, x: &VAElem) -> VAElem {
    assert_eq!(alpha.len(), lat.rank, "lattice vector length");
    let mut out = VAElem::zero();
    for ((beta, m), c) in &x.terms {
        let w = VAElem::term(beta.clone(), m.clone(), c.clone());
        let shift = lat.pair(alpha, beta);
        let eps = lat.epsilon(alpha, beta);
        let target: LatticeVec = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
        for b in 0..=fock_degree(m) as i64 {
            // z^{shift + a - b} = z^{-1-n}
            let a = b - 1 - n - shift;
            if a < 0 {
                continue;
            }
            // annihilation part: sum over λ ⊢ b of (-1)^{ℓ(λ)} / z_λ prod α_{(λ_i)}
            let mut lowered = VAElem::zero();
            for lam in Partition::all(b as usize) {
                let coeff = sign(lam.len() as i64) / Rational::from_integer(lam.z());
                lowered += apply_modes(lat, alpha, &lam, false, &w).scale(&coeff);
            }
            if lowered.is_zero() {
                continue;
            }
            let mut raised = VAElem::zero();
            for mu in Partition::all(a as usize) {
                let coeff = Rational::one() / Rational::from_integer(mu.z());
                raised += apply_modes(lat, alpha, &mu, true, &lowered).scale(&coeff);
            }
            for ((_, fm), v) in raised.terms {
                out.add_term(target.clone(), fm, v * &eps);
            }
        }
    }
    out
}

/// Coefficient of `z^{-1-n}` in `Y(v_{-1}|0>, z) x`, i.e. `v_{(n)} x`.
pub fn field_mode_vector(lat: &Lattice, v: &[i64], n: i64, x: &VAElem) -> VAElem {
    mode(lat, v, n, x)
}

/// `[e^α, x] = (e^α)_{(0)} x` on representatives.
pub fn borcherds_bracket(lat: &Lattice, alpha: &[i64], x: &VAElem) -> VAElem {
    field_mode(lat, alpha, 0, x)
}

/// `L_n` for `n >= -1`, by commuting past the creation operators.
pub fn virasoro(lat: &Lattice, n: i64, x: &VAElem) -> VAElem {
    assert!(n >= -1, "L_n is defined for n >= -1");
    let mut out = VAElem::zero();
    for ((a, m), c) in &x.terms {
        // L_n(e^α)
        match n {
            -1 => out += create(lat, a, 1, &VAElem::term(a.clone(), m.clone(), c.clone())),
            0 => out.add_term(a.clone(), m.clone(), c * rat(lat.pair(a, a), 2)),
            _ => {}
        }
        // Factors in stored order; factor j acts on the factors after it.
        for j in 0..m.len() {
            let (i, k) = m[j];
            let left: FockMonomial = m[..j].to_vec();
            let right = VAElem::term(a.clone(), m[j + 1..].to_vec(), c * int(k as i64));
            let e_i = lat.basis(i);
            let hit = mode(lat, &e_i, n - k as i64, &right);
            for ((b, fm), v) in hit.terms {
                let mut full = fm;
                full.extend_from_slice(&left);
                full.sort_unstable();
                out.add_term(b, full, v);
            }
        }
    }
    out
}

/// Outcome of a primary-state test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryReport {
    pub l0_eigenvalue_ok: bool,
    pub eigenvalue: Option<Rational>,
    /// `(n, L_n x)` for each `1 <= n <= D` with `L_n x != 0`.
    pub failures: Vec<(i64, VAElem)>,
    /// `sum_{n>=-1} (-1)^n/(n+1)! T^{n+1} L_n x`.
    pub weight_zero_sum: VAElem,
}

impl PrimaryReport {
    pub fn is_primary(&self) -> bool {
        self.l0_eigenvalue_ok && self.failures.is_empty()
    }
}

/// Checks `L_0 x = h x` and `L_n x = 0` for `1 <= n <= D`, `D` the Fock degree.
pub fn is_primary(lat: &Lattice, x: &VAElem) -> Result<PrimaryReport, Error> {
    let mut degrees: Vec<u32> = x.terms.keys().map(|(_, m)| fock_degree(m)).collect();
    degrees.dedup();
    degrees.sort_unstable();
    degrees.dedup();
    let d = match degrees.as_slice() {
        [] => 0,
        [d] => *d,
        _ => {
            return Err(Error::InvalidArgument(
                "primary test needs an element of a single Fock degree".into(),
            ))
        }
    };
    let l0 = virasoro(lat, 0, x);
    let eigenvalue = x.terms.iter().next().map(|(k, c)| l0.terms.get(k).cloned().unwrap_or_default() / c);
    let l0_eigenvalue_ok = match &eigenvalue {
        Some(h) => l0 == x.scale(h),
        None => true,
    };
    let mut failures = Vec::new();
    for n in 1..=d as i64 {
        let y = virasoro(lat, n, x);
        if !y.is_zero() {
            failures.push((n, y));
        }
    }
    let mut weight_zero_sum = VAElem::zero();
    let mut n: i64 = -1;
    loop {
        let ln = virasoro(lat, n, x);
        if n > d as i64 && ln.is_zero() {
            break;
        }
        let mut t = ln;
        for _ in 0..n + 1 {
            t = translate(lat, &t);
        }
        weight_zero_sum += t.scale(&(sign(n) / factorial_q((n + 1) as u32)));
        n += 1;
    }
    Ok(PrimaryReport {
        l0_eigenvalue_ok,
        eigenvalue,
        failures,
        weight_zero_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr() -> Lattice {
        Lattice::grassmannian()
    }

    #[test]
    fn lattice_validation() {
        assert!(Lattice::new(vec![vec![0, 1], vec![2, 0]], vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Lattice::new(vec![vec![2]], vec![vec![2]]).is_err());
        let l = Lattice::new(vec![vec![2]], vec![vec![1]]).unwrap();
        assert_eq!(Lattice::from_json(&l.to_json()).unwrap(), l);
        let g = gr();
        assert_eq!(g.pair(&[4, 2], &[4, 2]), 2 * 2 * 2 - 2 * 4 * 2);
    }

    #[test]
    fn annihilation_against_creation() {
        let l = gr();
        let x = create(&l, &[0, 1], 1, &VAElem::vacuum(2));
        assert_eq!(annihilate_mode(&l, &[0, 1], 1, &x), VAElem::vacuum(2).scale(&int(2)));
        let y = create(&l, &[1, 0], 1, &VAElem::exp(vec![3, 1]));
        assert!(annihilate_mode(&l, &[0, 1], 3, &y).is_zero());
        assert_eq!(annihilate_mode(&l, &[0, 1], 0, &VAElem::exp(vec![3, 1])), VAElem::exp(vec![3, 1]).scale(&int(-1)));
    }

    #[test]
    fn translation_rules() {
        let l = gr();
        assert!(translate(&l, &VAElem::vacuum(2)).is_zero());
        let x = create(&l, &[0, 1], 1, &VAElem::vacuum(2));
        assert_eq!(translate(&l, &x), create(&l, &[0, 1], 2, &VAElem::vacuum(2)));
        let a = vec![2, 1];
        assert_eq!(translate(&l, &VAElem::exp(a.clone())), create(&l, &a, 1, &VAElem::exp(a.clone())));
    }

    #[test]
    fn l_minus_one_is_translation() {
        let l = gr();
        let x = create(&l, &[1, 1], 2, &create(&l, &[0, 1], 1, &VAElem::exp(vec![1, 2])));
        assert_eq!(virasoro(&l, -1, &x), translate(&l, &x));
    }

    #[test]
    fn virasoro_examples() {
        let l = gr();
        let a = vec![3, 1];
        assert_eq!(virasoro(&l, 0, &VAElem::exp(a.clone())), VAElem::exp(a.clone()).scale(&rat(l.pair(&a, &a), 2)));
        let v0 = create(&l, &[0, 1], 1, &VAElem::vacuum(2));
        assert!(virasoro(&l, 1, &v0).is_zero());
        let va = create(&l, &[1, 1], 1, &VAElem::exp(a));
        assert!(virasoro(&l, 2, &va).is_zero());
    }

    #[test]
    fn vacuum_field_is_identity() {
        let l = gr();
        let x = create(&l, &[0, 1], 2, &VAElem::exp(vec![1, 1]));
        for n in -3..3 {
            let y = field_mode(&l, &[0, 0], n, &x);
            if n == -1 {
                assert_eq!(y, x);
            } else {
                assert!(y.is_zero());
            }
        }
    }

    #[test]
    fn lowest_mode_of_exponential() {
        let l = gr();
        let (a, b) = (vec![0, 1], vec![3, 1]);
        let n = -1 - l.pair(&a, &b);
        let y = field_mode(&l, &a, n, &VAElem::exp(b.clone()));
        assert_eq!(y, VAElem::exp(vec![3, 2]).scale(&l.epsilon(&a, &b)));
    }

    #[test]
    fn primary_examples() {
        let l = gr();
        let r = is_primary(&l, &VAElem::vacuum(2)).unwrap();
        assert!(r.is_primary());
        assert_eq!(r.eigenvalue, Some(Rational::zero()));
        let a = vec![5, 1];
        let r = is_primary(&l, &VAElem::exp(a.clone())).unwrap();
        assert!(r.is_primary());
        assert_eq!(r.eigenvalue, Some(rat(l.pair(&a, &a), 2)));
        let mixed = &VAElem::exp(a.clone()) + &create(&l, &[0, 1], 1, &VAElem::exp(a));
        assert!(is_primary(&l, &mixed).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let l = gr();
        let x = create(&l, &[1, -2], 3, &VAElem::exp(vec![2, 1])).scale(&rat(3, 7));
        assert_eq!(VAElem::from_json(&l, &x.to_json()).unwrap(), x);
    }
}
