//! Descendent algebras of dg quivers and their Virasoro operators.
//!
//! The algebra is `Q[ch_k(v) : k >= 0, v a vertex]`, stored as a sparse map
//! from monomials to rationals. Vertices are indices into the owning quiver.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{ParseError, QuiverError};
use crate::partition::Partition;
use crate::quiver::{euler_matrix, DgQuiver, DimVector, FramingVector};
use crate::rational::{
    factorial_q, format_terms, int, parse_rational, rational_from_json, rational_to_json, sign,
    split_terms, Rational,
};
use crate::symfunc::SymFunc;

/// `ch_k(v)` as `(vertex index, k)`.
pub type Symbol = (usize, u32);

/// Multiset of symbols, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Symbol>);

impl Monomial {
    pub fn new(mut symbols: Vec<Symbol>) -> Self {
        symbols.sort_unstable();
        Monomial(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// Sum of the `k` indices.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|s| s.1).sum()
    }

    /// Sum of `k + 1`; finitely many monomials have weight at most `w`.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|s| s.1 + 1).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial::new(v)
    }

    /// Distinct symbols with multiplicities.
    fn grouped(&self) -> Vec<(Symbol, usize)> {
        let mut out: Vec<(Symbol, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((t, m)) if *t == s => *m += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Replaces one copy of `old` with `new`.
    fn replace_one(&self, old: Symbol, new: Option<Symbol>) -> Monomial {
        let mut v = self.0.clone();
        let pos = v.iter().position(|&s| s == old).expect("symbol present");
        v.remove(pos);
        if let Some(n) = new {
            v.push(n);
        }
        Monomial::new(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DescendentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl DescendentPoly {
    pub fn zero() -> Self {
        DescendentPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = DescendentPoly::zero();
        f.add_term(Monomial::default(), c);
        f
    }

    pub fn one() -> Self {
        DescendentPoly::constant(Rational::one())
    }

    /// `ch_k(v)`.
    pub fn ch(v: usize, k: u32) -> Self {
        DescendentPoly::monomial(Monomial::new(vec![(v, k)]))
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut f = DescendentPoly::zero();
        f.add_term(m, Rational::one());
        f
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return DescendentPoly::zero();
        }
        DescendentPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Applies a map sending each symbol to a polynomial, extended as a derivation.
    fn derivation<F: Fn(Symbol) -> DescendentPoly>(&self, act: F) -> DescendentPoly {
        let mut out = DescendentPoly::zero();
        for (m, c) in &self.terms {
            for (s, mult) in m.grouped() {
                let image = act(s);
                if image.is_zero() {
                    continue;
                }
                let rest = DescendentPoly::monomial(m.replace_one(s, None));
                out += (&rest * &image).scale(&(c * int(mult as i64)));
            }
        }
        out
    }

    /// Substitutes `ch_0(v) = d_v`, the quotient map to the algebra of a fixed dimension vector.
    pub fn specialize_rank(&self, d: &DimVector) -> DescendentPoly {
        let mut out = DescendentPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, k) in m.symbols() {
                if k == 0 {
                    coeff *= int(d.0[v]);
                } else {
                    rest.push((v, k));
                }
            }
            out.add_term(Monomial::new(rest), coeff);
        }
        out
    }

    /// `2*ch2(1) + 2*ch0(1)*ch1(1)^2`.
    pub fn to_text(&self, q: &DgQuiver) -> String {
        format_terms(self.terms.iter().map(|(m, c)| {
            let body = m
                .grouped()
                .into_iter()
                .map(|((v, k), e)| {
                    let base = format!("ch{k}({})", q.vertices()[v]);
                    if e == 1 {
                        base
                    } else {
                        format!("{base}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            (c, body)
        }))
    }

    pub fn parse(q: &DgQuiver, s: &str) -> Result<DescendentPoly, crate::Error> {
        let bad = || ParseError::Expression(s.to_string());
        if s.trim().is_empty() {
            return Err(bad().into());
        }
        let mut total = DescendentPoly::zero();
        for (neg, term) in split_terms(s) {
            if term.is_empty() {
                return Err(bad().into());
            }
            let mut acc = DescendentPoly::one();
            for factor in term.split('*') {
                let factor = factor.trim();
                let (base, exp) = match factor.rsplit_once('^') {
                    Some((b, e)) if b.ends_with(')') || !b.contains('(') => {
                        (b.trim(), e.trim().parse::<u32>().map_err(|_| bad())?)
                    }
                    _ => (factor, 1),
                };
                let value = if let Some(rest) = base.strip_prefix("ch") {
                    let (k, v) = rest.split_once('(').ok_or_else(bad)?;
                    let k: u32 = k
                        .trim_start_matches('{')
                        .trim_end_matches('}')
                        .parse()
                        .map_err(|_| bad())?;
                    let v = v.strip_suffix(')').ok_or_else(bad)?.trim();
                    DescendentPoly::ch(q.vertex_index(v)?, k)
                } else {
                    DescendentPoly::constant(parse_rational(base).map_err(|_| bad())?)
                };
                for _ in 0..exp {
                    acc = &acc * &value;
                }
            }
            total += if neg { -acc } else { acc };
        }
        Ok(total)
    }

    /// List of `[[num, den], [[k, vertex], ...]]`.
    pub fn to_json(&self, q: &DgQuiver) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let syms = m
                        .symbols()
                        .iter()
                        .map(|&(v, k)| Value::Array(vec![Value::from(k), Value::from(q.vertices()[v].clone())]))
                        .collect();
                    Value::Array(vec![rational_to_json(c), Value::Array(syms)])
                })
                .collect(),
        )
    }

    pub fn from_json(q: &DgQuiver, v: &Value) -> Result<DescendentPoly, crate::Error> {
        let bad = || ParseError::Json("descendent polynomial".into());
        let mut f = DescendentPoly::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
            let c = rational_from_json(&pair[0])?;
            let mut syms = Vec::new();
            for s in pair[1].as_array().ok_or_else(bad)? {
                let s = s.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
                let k = s[0].as_u64().ok_or_else(bad)? as u32;
                let name = match &s[1] {
                    Value::String(x) => x.clone(),
                    Value::Number(n) => n.to_string(),
                    _ => return Err(bad().into()),
                };
                syms.push((q.vertex_index(&name)?, k));
            }
            f.add_term(Monomial::new(syms), c);
        }
        Ok(f)
    }
}

impl AddAssign<&DescendentPoly> for DescendentPoly {
    fn add_assign(&mut self, rhs: &DescendentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<DescendentPoly> for DescendentPoly {
    fn add_assign(&mut self, rhs: DescendentPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&DescendentPoly> for DescendentPoly {
    fn sub_assign(&mut self, rhs: &DescendentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &DescendentPoly {
    type Output = DescendentPoly;
    fn add(self, rhs: &DescendentPoly) -> DescendentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &DescendentPoly {
    type Output = DescendentPoly;
    fn sub(self, rhs: &DescendentPoly) -> DescendentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for DescendentPoly {
    type Output = DescendentPoly;
    fn neg(self) -> DescendentPoly {
        DescendentPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &DescendentPoly {
    type Output = DescendentPoly;
    fn mul(self, rhs: &DescendentPoly) -> DescendentPoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *acc.entry(a.times(b)).or_insert_with(Rational::zero) += x * y;
            }
        }
        DescendentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// `R_n` for `n >= -1`: `R_n(ch_k) = k(k+1)...(k+n) ch_{k+n}`, with
/// `R_{-1}(ch_k) = ch_{k-1}` and `ch_{-1} = 0`.
///
/// # Panics
/// If `n < -1`.
pub fn r_op(n: i64, f: &DescendentPoly) -> DescendentPoly {
    assert!(n >= -1, "R_n is defined for n >= -1");
    f.derivation(|(v, k)| {
        if n == -1 {
            return if k == 0 {
                DescendentPoly::zero()
            } else {
                DescendentPoly::ch(v, k - 1)
            };
        }
        let c: BigInt = (0..=n).map(|i| BigInt::from(k as i64 + i)).product();
        DescendentPoly::ch(v, k + n as u32).scale(&Rational::from_integer(c))
    })
}

/// Operators `R_n`, `T_n` and `L_n` on the descendent algebra of a quiver,
/// optionally framed.
pub struct Virasoro<'a> {
    quiver: &'a DgQuiver,
    chi: Vec<Vec<i64>>,
    framing: Option<FramingVector>,
}

impl<'a> Virasoro<'a> {
    pub fn new(quiver: &'a DgQuiver) -> Self {
        Virasoro {
            quiver,
            chi: euler_matrix(quiver),
            framing: None,
        }
    }

    pub fn framed(quiver: &'a DgQuiver, f: FramingVector) -> Result<Self, QuiverError> {
        if f.0.len() != quiver.num_vertices() {
            return Err(QuiverError::DimensionMismatch {
                expected: quiver.num_vertices(),
                got: f.0.len(),
            });
        }
        Ok(Virasoro {
            quiver,
            chi: euler_matrix(quiver),
            framing: Some(f),
        })
    }

    pub fn quiver(&self) -> &DgQuiver {
        self.quiver
    }

    /// `T_n = sum_{a+b=n} a! b! sum_{v,w} χ(v,w) ch_a(v) ch_b(w)`, minus
    /// `n! sum_v f_v ch_n(v)` when framed. `T_{-1} = 0`.
    pub fn t(&self, n: i64) -> DescendentPoly {
        let mut out = DescendentPoly::zero();
        if n < 0 {
            return out;
        }
        let n = n as u32;
        let nv = self.quiver.num_vertices();
        for a in 0..=n {
            let b = n - a;
            let w = factorial_q(a) * factorial_q(b);
            for v in 0..nv {
                for u in 0..nv {
                    let x = self.chi[v][u];
                    if x != 0 {
                        out.add_term(Monomial::new(vec![(v, a), (u, b)]), &w * int(x));
                    }
                }
            }
        }
        if let Some(f) = &self.framing {
            let nf = factorial_q(n);
            for (v, &k) in f.0.iter().enumerate() {
                out.add_term(Monomial::new(vec![(v, n)]), -(&nf * int(k)));
            }
        }
        out
    }

    /// `L_n = R_n + T_n`, `T_n` acting by multiplication.
    pub fn l(&self, n: i64, f: &DescendentPoly) -> DescendentPoly {
        &r_op(n, f) + &(&self.t(n) * f)
    }

    /// `sum_{n >= -1} (-1)^n / (n+1)! L_n R_{-1}^{n+1}`.
    pub fn l_wt0(&self, f: &DescendentPoly) -> DescendentPoly {
        let mut out = DescendentPoly::zero();
        let mut lowered = f.clone();
        let mut n: i64 = -1;
        while !lowered.is_zero() {
            let c = sign(n) / factorial_q((n + 1) as u32);
            out += self.l(n, &lowered).scale(&c);
            lowered = r_op(-1, &lowered);
            n += 1;
        }
        out
    }
}

/// `T_n` of an unframed quiver.
pub fn t_element(q: &DgQuiver, n: i64) -> DescendentPoly {
    Virasoro::new(q).t(n)
}

/// `L_n f` on an unframed quiver.
pub fn l_op(q: &DgQuiver, n: i64, f: &DescendentPoly) -> DescendentPoly {
    Virasoro::new(q).l(n, f)
}

/// `L_n f` with the framed `T_n`.
pub fn l_op_framed(q: &DgQuiver, fr: &FramingVector, n: i64, g: &DescendentPoly) -> Result<DescendentPoly, QuiverError> {
    Ok(Virasoro::framed(q, fr.clone())?.l(n, g))
}

/// Weight-zero operator on an unframed quiver.
pub fn l_wt0(q: &DgQuiver, f: &DescendentPoly) -> DescendentPoly {
    Virasoro::new(q).l_wt0(f)
}

/// Sends `ch_n` to `p_n / n!` for `n >= 1` and `ch_0` to `k`, on a one-vertex quiver.
pub fn to_symfunc(f: &DescendentPoly, k: i64) -> Result<SymFunc, crate::Error> {
    let mut out = SymFunc::zero();
    for (m, c) in f.terms() {
        let mut coeff = c.clone();
        let mut parts = Vec::new();
        for &(v, n) in m.symbols() {
            if v != 0 {
                return Err(crate::Error::InvalidArgument(
                    "conversion to symmetric functions needs a one-vertex quiver".into(),
                ));
            }
            if n == 0 {
                coeff *= int(k);
            } else {
                coeff /= factorial_q(n);
                parts.push(n as usize);
            }
        }
        out.add_term(Partition::new(parts), coeff);
    }
    Ok(out)
}

/// Inverse direction on the `ch_{>=1}` part: `p_n ↦ n! ch_n`.
pub fn from_symfunc(g: &SymFunc) -> DescendentPoly {
    let mut out = DescendentPoly::zero();
    for (l, c) in g.terms() {
        let mut coeff = c.clone();
        for &p in l.parts() {
            coeff *= factorial_q(p as u32);
        }
        let syms = l.parts().iter().map(|&p| (0usize, p as u32)).collect();
        out.add_term(Monomial::new(syms), coeff);
    }
    out
}

/// All monomials over `nv` vertices with `sum (k+1) <= w`.
pub fn monomials_up_to_weight(nv: usize, w: u32) -> Vec<Monomial> {
    let symbols: Vec<Symbol> = (0..nv)
        .flat_map(|v| (0..w).map(move |k| (v, k)))
        .collect();
    let mut out = Vec::new();
    fn go(symbols: &[Symbol], start: usize, left: u32, cur: &mut Vec<Symbol>, out: &mut Vec<Monomial>) {
        out.push(Monomial::new(cur.clone()));
        for i in start..symbols.len() {
            let cost = symbols[i].1 + 1;
            if cost <= left {
                cur.push(symbols[i]);
                go(symbols, i, left - cost, cur, out);
                cur.pop();
            }
        }
    }
    go(&symbols, 0, w, &mut Vec::new(), &mut out);
    out.sort();
    out
}
