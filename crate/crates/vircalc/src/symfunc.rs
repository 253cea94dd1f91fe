//! Symmetric functions over the rationals, stored in the power-sum basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, ParseError, Result};
use crate::linalg;
use crate::partition::Partition;
use crate::rational::{
    format_rational, format_terms, int, parse_rational, rational_from_json, rational_to_json,
    split_terms, Rational,
};

/// Sparse linear combination of power-sum products `p_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SymFunc::monomial_term(Partition::empty(), c)
    }

    /// The power sum `p_n`, `n >= 1`.
    pub fn p(n: usize) -> Self {
        assert!(n > 0, "p_0 is not a power sum");
        SymFunc::monomial_term(Partition::new(vec![n]), Rational::one())
    }

    pub fn p_lambda(lambda: &Partition) -> Self {
        SymFunc::monomial_term(lambda.clone(), Rational::one())
    }

    pub fn monomial_term(lambda: Partition, c: Rational) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(it: I) -> Self {
        let mut f = SymFunc::zero();
        for (l, c) in it {
            f.add_term(l, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.size()).max()
    }

    pub fn homogeneous(&self, d: usize) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|l| l.size() == d)
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SymFunc {
        (0..e).fold(SymFunc::one(), |acc, _| &acc * self)
    }

    /// Multiplication by `p_n`.
    pub fn mul_p(&self, n: usize) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.with_part(n), c.clone()))
                .collect(),
        }
    }

    /// `∂/∂p_n`.
    pub fn partial(&self, n: usize) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, c) in &self.terms {
            let m = l.mult(n);
            if m > 0 {
                out.add_term(l.without_part(n).unwrap(), c * int(m as i64));
            }
        }
        out
    }

    /// Parses `1/12*p1^4 + 1/4*p2^2 - 1/3*p1*p3`.
    ///
    /// Factors may also be `e<n>`, `h<n>`, `s(λ)` or `m(λ)`.
    pub fn parse(s: &str) -> std::result::Result<SymFunc, ParseError> {
        let bad = || ParseError::Expression(s.to_string());
        if s.trim().is_empty() {
            return Err(bad());
        }
        let mut total = SymFunc::zero();
        for (neg, term) in split_terms(s) {
            if term.is_empty() {
                return Err(bad());
            }
            let mut acc = SymFunc::one();
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(bad());
                }
                acc = &acc * &parse_factor(factor).ok_or_else(bad)?;
            }
            total += if neg { -acc } else { acc };
        }
        Ok(total)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| {
                    Value::Array(vec![
                        rational_to_json(c),
                        Value::Array(l.parts().iter().map(|&p| Value::from(p)).collect()),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> std::result::Result<SymFunc, ParseError> {
        let bad = |m: &str| ParseError::Json(format!("symmetric function: {m}"));
        let arr = v.as_array().ok_or_else(|| bad("expected a list of terms"))?;
        let mut f = SymFunc::zero();
        for t in arr {
            let pair = t
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| bad("term must be [coeff, partition]"))?;
            let c = rational_from_json(&pair[0])?;
            let parts = pair[1]
                .as_array()
                .ok_or_else(|| bad("partition must be a list"))?
                .iter()
                .map(|x| x.as_u64().map(|p| p as usize))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| bad("parts must be non-negative integers"))?;
            f.add_term(Partition::try_from_parts(parts)?, c);
        }
        Ok(f)
    }
}

fn parse_index(s: &str) -> Option<usize> {
    s.trim_start_matches('{').trim_end_matches('}').parse().ok()
}

fn parse_factor(f: &str) -> Option<SymFunc> {
    let (base, exp) = match f.rsplit_once('^') {
        Some((b, e)) => (b.trim(), e.trim().parse::<u32>().ok()?),
        None => (f, 1),
    };
    let head = base.chars().next()?;
    let rest = &base[head.len_utf8()..];
    let value = match head {
        's' | 'm' if rest.starts_with(['(', '[']) => {
            let l = Partition::parse(rest).ok()?;
            if head == 's' {
                schur(&l)
            } else {
                monomial(&l)
            }
        }
        'p' => match parse_index(rest)? {
            0 => return None,
            n => SymFunc::p(n),
        },
        'e' => elementary(parse_index(rest)? as i64),
        'h' => complete(parse_index(rest)? as i64),
        _ => SymFunc::constant(parse_rational(base).ok()?),
    };
    Some(value.pow(exp))
}

/// `p1^2*p3` style body of a power-sum monomial.
pub(crate) fn p_monomial_body(l: &Partition) -> String {
    let mut m = l.mults();
    m.reverse();
    m.into_iter()
        .map(|(i, k)| {
            if k == 1 {
                format!("p{i}")
            } else {
                format!("p{i}^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(
            self.terms.iter().map(|(l, c)| (c, p_monomial_body(l))),
        ))
    }
}

/// Formats a coefficient table keyed by partitions as `c*x(λ) + ...`.
pub fn format_basis_expansion(table: &BTreeMap<Partition, Rational>, name: &str) -> String {
    format_terms(table.iter().map(|(l, c)| {
        let body = if l.is_empty() {
            String::new()
        } else {
            format!("{name}{l}")
        };
        (c, body)
    }))
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl AddAssign<SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: SymFunc) {
        for (l, c) in rhs.terms {
            self.add_term(l, c);
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c.clone());
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += rhs;
        self
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(mut self, rhs: SymFunc) -> SymFunc {
        self -= &rhs;
        self
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.into_iter().map(|(l, c)| (l, -c)).collect(),
        }
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -self.clone()
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut acc: HashMap<Partition, Rational> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *acc.entry(a.union(b)).or_insert_with(Rational::zero) += x * y;
            }
        }
        SymFunc {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

/// `z_λ = prod i^{m_i} m_i!`
pub fn z_factor(lambda: &Partition) -> BigInt {
    lambda.z()
}

/// Degree-`d` part of `exp(sum_j w_j p_j)`: `sum_λ prod_j w_j^{m_j}/m_j! p_λ`.
pub fn exp_series_coeff<F: Fn(usize) -> Rational>(weight: F, d: usize) -> SymFunc {
    let mut f = SymFunc::zero();
    for l in Partition::all(d) {
        let mut c = Rational::one();
        for (i, m) in l.mults() {
            let w = weight(i);
            for k in 1..=m {
                c = c * &w / int(k as i64);
            }
        }
        f.add_term(l, c);
    }
    f
}

/// Elementary symmetric function `e_j`; zero for `j < 0`.
pub fn elementary(j: i64) -> SymFunc {
    if j < 0 {
        return SymFunc::zero();
    }
    exp_series_coeff(
        |k| {
            let s = if k % 2 == 1 { 1 } else { -1 };
            Rational::new(BigInt::from(s), BigInt::from(k))
        },
        j as usize,
    )
}

/// Complete homogeneous symmetric function `h_j`; zero for `j < 0`.
pub fn complete(j: i64) -> SymFunc {
    if j < 0 {
        return SymFunc::zero();
    }
    exp_series_coeff(|k| Rational::new(BigInt::one(), BigInt::from(k)), j as usize)
}

/// Determinant of a square matrix of symmetric functions, by Laplace expansion
/// along rows with memoisation over column subsets.
fn det(entries: &[Vec<SymFunc>]) -> SymFunc {
    let n = entries.len();
    if n == 0 {
        return SymFunc::one();
    }
    let mut memo: HashMap<u32, SymFunc> = HashMap::new();
    det_rec(entries, 0, (1u32 << n) - 1, &mut memo)
}

fn det_rec(e: &[Vec<SymFunc>], row: usize, cols: u32, memo: &mut HashMap<u32, SymFunc>) -> SymFunc {
    if cols == 0 {
        return SymFunc::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = SymFunc::zero();
    let mut pos = 0;
    for c in 0..e.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        if !e[row][c].is_zero() {
            let minor = det_rec(e, row + 1, cols & !(1 << c), memo);
            let term = &e[row][c] * &minor;
            if pos % 2 == 0 {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Schur function via the Jacobi-Trudi determinant, using the `e` form when
/// the conjugate partition is shorter.
pub fn schur(lambda: &Partition) -> SymFunc {
    let conj = lambda.conjugate();
    let (rows, gen): (&Partition, fn(i64) -> SymFunc) = if conj.len() < lambda.len() {
        (&conj, elementary)
    } else {
        (lambda, complete)
    };
    let l = rows.len();
    let parts = rows.parts();
    let max_index = parts.first().copied().unwrap_or(0) + l;
    let table: Vec<SymFunc> = (0..=max_index as i64).map(gen).collect();
    let entry = |k: i64| -> SymFunc {
        if k < 0 {
            SymFunc::zero()
        } else {
            table[k as usize].clone()
        }
    };
    let m: Vec<Vec<SymFunc>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| entry(parts[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det(&m)
}

/// Hall inner product `<p_λ, p_μ> = δ z_λ`.
pub fn hall(f: &SymFunc, g: &SymFunc) -> Rational {
    let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    small.terms.iter().fold(Rational::zero(), |acc, (l, c)| match big.terms.get(l) {
        Some(d) => acc + c * d * Rational::from_integer(l.z()),
        None => acc,
    })
}

/// `n ∂/∂p_n`, the Hall adjoint of multiplication by `p_n`.
pub fn annihilate(n: usize, f: &SymFunc) -> SymFunc {
    f.partial(n).scale(&int(n as i64))
}

/// `g^⊥ f`, the Hall adjoint of multiplication by `g`, applied to `f`.
pub fn skew(g: &SymFunc, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in &f.terms {
        let mu_m = mu.mults();
        for (lam, d) in &g.terms {
            // p_λ^⊥ p_μ = prod_i i^{a_i} m_i!/(m_i-a_i)! p_{μ∖λ}
            let mut coeff = c * d;
            let mut rest: Vec<usize> = Vec::new();
            let mut ok = true;
            for &(i, m) in &mu_m {
                let a = lam.mult(i);
                if a > m {
                    ok = false;
                    break;
                }
                for t in 0..a {
                    coeff *= int((i * (m - t)) as i64);
                }
                rest.extend(std::iter::repeat_n(i, m - a));
            }
            if ok && lam.mults().iter().all(|&(i, _)| mu.mult(i) > 0) {
                out.add_term(Partition::new(rest), coeff);
            }
        }
    }
    out
}

/// `σ(p_j) = (-1)^{j-1} p_j`; sends `s_λ` to `s_{λ'}`.
pub fn involution(f: &SymFunc) -> SymFunc {
    SymFunc {
        terms: f
            .terms
            .iter()
            .map(|(l, c)| {
                let odd = (l.size() - l.len()) % 2 == 1;
                (l.clone(), if odd { -c.clone() } else { c.clone() })
            })
            .collect(),
    }
}

/// Schur functions grouped by degree, computed on demand.
#[derive(Default)]
pub struct SchurTable {
    by_degree: HashMap<usize, Vec<(Partition, SymFunc)>>,
}

impl SchurTable {
    pub fn new() -> Self {
        SchurTable::default()
    }

    pub fn degree(&mut self, d: usize) -> &[(Partition, SymFunc)] {
        self.by_degree
            .entry(d)
            .or_insert_with(|| Partition::all(d).into_iter().map(|l| (l.clone(), schur(&l))).collect())
    }

    /// Coefficients of `f` in the Schur basis.
    pub fn expand(&mut self, f: &SymFunc) -> BTreeMap<Partition, Rational> {
        let mut degrees: Vec<usize> = f.terms.keys().map(|l| l.size()).collect();
        degrees.dedup();
        let mut out = BTreeMap::new();
        for d in degrees {
            let fd = f.homogeneous(d);
            for (l, s) in self.degree(d) {
                let c = hall(&fd, s);
                if !c.is_zero() {
                    out.insert(l.clone(), c);
                }
            }
        }
        out
    }
}

/// Coefficients of `f` in the Schur basis.
pub fn schur_expand(f: &SymFunc) -> BTreeMap<Partition, Rational> {
    SchurTable::new().expand(f)
}

/// Rebuilds a symmetric function from Schur coefficients.
pub fn from_schur(table: &BTreeMap<Partition, Rational>) -> SymFunc {
    let mut out = SymFunc::zero();
    for (l, c) in table {
        out += schur(l).scale(c);
    }
    out
}

/// Coefficient of `x_1^{μ_1} x_2^{μ_2} ...` in `p_λ`.
fn p_to_m_entry(lambda: &Partition, mu: &Partition) -> BigInt {
    fn go(parts: &[usize], cap: &mut Vec<usize>) -> BigInt {
        match parts.split_first() {
            None => {
                if cap.iter().all(|&c| c == 0) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Some((&p, rest)) => {
                let mut acc = BigInt::zero();
                for i in 0..cap.len() {
                    if cap[i] >= p {
                        cap[i] -= p;
                        acc += go(rest, cap);
                        cap[i] += p;
                    }
                }
                acc
            }
        }
    }
    go(lambda.parts(), &mut mu.parts().to_vec())
}

/// Monomial coefficients of `f`: `f = sum_μ c_μ m_μ`.
pub fn monomial_expand(f: &SymFunc) -> BTreeMap<Partition, Rational> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (l, c) in &f.terms {
        for mu in Partition::all(l.size()) {
            let k = p_to_m_entry(l, &mu);
            if !k.is_zero() {
                *out.entry(mu).or_insert_with(Rational::zero) += c * Rational::from_integer(k);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Monomial symmetric function `m_λ` in the p-basis, by inverting the
/// p-to-m transition matrix in degree `|λ|`.
pub fn monomial(lambda: &Partition) -> SymFunc {
    let basis = Partition::all(lambda.size());
    let mat: linalg::Matrix = basis
        .iter()
        .map(|l| {
            basis
                .iter()
                .map(|mu| Rational::from_integer(p_to_m_entry(l, mu)))
                .collect()
        })
        .collect();
    let inv = linalg::invert(&mat).expect("p-to-m transition matrix is invertible");
    let row = basis.iter().position(|l| l == lambda).unwrap();
    SymFunc::from_terms(
        basis
            .iter()
            .enumerate()
            .map(|(j, l)| (l.clone(), inv[row][j].clone())),
    )
}

/// `<p_λ, p_μ>_α = δ z_λ α^{ℓ(λ)}`.
pub fn jack_pairing(f: &SymFunc, g: &SymFunc, alpha: &Rational) -> Rational {
    f.terms.iter().fold(Rational::zero(), |acc, (l, c)| match g.terms.get(l) {
        Some(d) => {
            let mut w = c * d * Rational::from_integer(l.z());
            for _ in 0..l.len() {
                w *= alpha;
            }
            acc + w
        }
        None => acc,
    })
}

/// Monic Jack function `P_λ^{(α)} = m_λ + lower terms`, by Gram-Schmidt in
/// increasing lexicographic order under the α-deformed pairing.
pub fn jack(lambda: &Partition, alpha: &Rational) -> Result<SymFunc> {
    let basis = Partition::all(lambda.size());
    let mut done: Vec<(SymFunc, Rational)> = Vec::new();
    for mu in &basis {
        let m = monomial(mu);
        let mut p = m.clone();
        for (q, norm) in &done {
            let c = jack_pairing(&m, q, alpha) / norm;
            p -= &q.scale(&c);
        }
        if mu == lambda {
            return Ok(p);
        }
        let norm = jack_pairing(&p, &p, alpha);
        if norm.is_zero() {
            return Err(Error::SingularGram(mu.to_string()));
        }
        done.push((p, norm));
    }
    unreachable!("λ is among the partitions of its size")
}

/// Writes a coefficient as used in reports.
pub fn coeff_string(c: &Rational) -> String {
    format_rational(c)
}

/// True when every coefficient is an integer.
pub fn is_integral(f: &SymFunc) -> bool {
    f.terms.values().all(|c| c.is_integer())
}

/// Largest absolute coefficient, for diagnostics.
pub fn max_abs_coeff(f: &SymFunc) -> Rational {
    f.terms
        .values()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn schur_22_expansion() {
        let s = schur(&part(&[2, 2]));
        let want = SymFunc::from_terms([
            (part(&[1, 1, 1, 1]), rat(1, 12)),
            (part(&[2, 2]), rat(1, 4)),
            (part(&[3, 1]), rat(-1, 3)),
        ]);
        assert_eq!(s, want);
        assert_eq!(s.to_string(), "1/12*p1^4 + 1/4*p2^2 - 1/3*p1*p3");
    }

    #[test]
    fn e3_and_h3() {
        assert_eq!(elementary(3).to_string(), "1/6*p1^3 - 1/2*p1*p2 + 1/3*p3");
        assert_eq!(complete(3).to_string(), "1/6*p1^3 + 1/2*p1*p2 + 1/3*p3");
        assert_eq!(elementary(0), SymFunc::one());
        assert!(complete(-2).is_zero());
    }

    #[test]
    fn hall_examples() {
        assert_eq!(hall(&SymFunc::p(2), &SymFunc::p(2)), int(2));
        let s = schur(&part(&[2, 1]));
        assert_eq!(hall(&s, &s), int(1));
    }

    #[test]
    fn jack_two_row() {
        let a = rat(3, 2);
        let j = jack(&part(&[2]), &a).unwrap();
        let want = &monomial(&part(&[2])) + &monomial(&part(&[1, 1])).scale(&(int(2) / (int(1) + &a)));
        assert_eq!(j, want);
        assert_eq!(jack(&part(&[2, 1]), &int(1)).unwrap(), schur(&part(&[2, 1])));
    }

    #[test]
    fn jack_singular_pairing() {
        assert!(matches!(jack(&part(&[2]), &int(0)), Err(Error::SingularGram(_))));
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial(&part(&[2])), SymFunc::p(2));
        // m_11 = (p1^2 - p2)/2
        assert_eq!(monomial(&part(&[1, 1])), elementary(2));
        let f = schur(&part(&[2, 1]));
        let m = monomial_expand(&f);
        assert_eq!(m.get(&part(&[2, 1])), Some(&int(1)));
        assert_eq!(m.get(&part(&[1, 1, 1])), Some(&int(2)));
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn parse_roundtrip_and_named_factors() {
        let s = "1/12*p1^4 + 1/4*p2^2 - 1/3*p1*p3";
        assert_eq!(SymFunc::parse(s).unwrap().to_string(), s);
        assert_eq!(SymFunc::parse("s(2,2)").unwrap(), schur(&part(&[2, 2])));
        assert_eq!(SymFunc::parse("-p1 + 2").unwrap().to_string(), "2 - p1");
        assert_eq!(SymFunc::parse("3 * p{2}*p{1}").unwrap().to_string(), "3*p1*p2");
        assert_eq!(SymFunc::parse("h2 - e2").unwrap(), SymFunc::p(1).pow(2) - elementary(2).scale(&int(2)));
        assert!(SymFunc::parse("p0").is_err());
        assert!(SymFunc::parse("p1 +").is_err());
        assert!(SymFunc::parse("").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = schur(&part(&[3, 1]));
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
        let v: Value = serde_json::from_str("[[[1,2],[2,1]]]").unwrap();
        assert_eq!(SymFunc::from_json(&v).unwrap().to_string(), "1/2*p1*p2");
        let bad: Value = serde_json::from_str("[[[1,2],[1,2]]]").unwrap();
        assert!(SymFunc::from_json(&bad).is_err());
    }

    #[test]
    fn skew_by_p_matches_annihilate() {
        let f = schur(&part(&[3, 2, 1]));
        for n in 1..=4 {
            assert_eq!(skew(&SymFunc::p(n), &f), annihilate(n, &f));
        }
    }

    #[test]
    fn involution_conjugates_schur() {
        for l in Partition::up_to(6) {
            assert_eq!(involution(&schur(&l)), schur(&l.conjugate()));
        }
    }
}
