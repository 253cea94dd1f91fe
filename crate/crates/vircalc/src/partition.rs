//! Integer partitions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::ParseError;
use crate::rational::factorial;

/// Weakly decreasing positive parts. The empty partition is allowed.
///
/// Ordered by size, then lexicographically on the parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only weakly decreasing positive parts.
    pub fn try_from_parts(parts: Vec<usize>) -> Result<Self, ParseError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(ParseError::Partition(format!("{parts:?}")))
        }
    }

    /// `m` repeated `k` times.
    pub fn rectangle(m: usize, k: usize) -> Self {
        if m == 0 {
            return Partition::empty();
        }
        Partition(vec![m; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of `i` as a part.
    pub fn mult(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` in decreasing part order.
    pub fn mults(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z = prod i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        self.mults().into_iter().fold(BigInt::one(), |acc, (i, m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m as u32)
        })
    }

    pub fn conjugate(&self) -> Self {
        let rows = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=rows)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Fits inside `k` rows of length `m`.
    pub fn fits_in_box(&self, k: usize, m: usize) -> bool {
        self.len() <= k && self.0.first().is_none_or(|&p| p <= m)
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Adds one part.
    pub fn with_part(&self, p: usize) -> Self {
        let mut v = self.0.clone();
        v.push(p);
        Partition::new(v)
    }

    /// Removes one copy of `p`, if present.
    pub fn without_part(&self, p: usize) -> Option<Self> {
        let pos = self.0.iter().position(|&q| q == p)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }

    /// `2,2,1`; the empty partition is written as an empty string.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ParseError::Partition(s.to_string()))?;
        Partition::try_from_parts(parts).map_err(|_| ParseError::Partition(s.to_string()))
    }

    /// All partitions of `n` in increasing order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of size at most `n`.
    pub fn up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }
}

fn gen_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_partition_numbers() {
        let p: Vec<usize> = (0..=12).map(|n| Partition::all(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn order_within_degree() {
        let ps = Partition::all(4);
        let shown: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
        assert!(Partition::new(vec![5]) < Partition::new(vec![1; 6]));
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).z(), BigInt::from(24));
        assert_eq!(Partition::new(vec![2, 2]).z(), BigInt::from(8));
        assert_eq!(Partition::new(vec![3, 1]).z(), BigInt::from(3));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
    }

    #[test]
    fn parsing() {
        assert_eq!(Partition::parse("2,2").unwrap(), Partition::new(vec![2, 2]));
        assert_eq!(Partition::parse("(3, 1)").unwrap(), Partition::new(vec![3, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("2,0").is_err());
        assert!(Partition::parse("a").is_err());
    }

    #[test]
    fn conjugate_and_box() {
        let l = Partition::new(vec![4, 2, 1]);
        assert_eq!(l.conjugate(), Partition::new(vec![3, 2, 1, 1]));
        assert_eq!(l.conjugate().conjugate(), l);
        assert!(l.fits_in_box(3, 4));
        assert!(!l.fits_in_box(2, 4));
        assert!(Partition::empty().fits_in_box(0, 0));
    }

    #[test]
    fn lex_extends_dominance() {
        for n in 0..=8 {
            let ps = Partition::all(n);
            for a in &ps {
                for b in &ps {
                    if a.dominates(b) {
                        assert!(a >= b, "{a} dominates {b}");
                    }
                }
            }
        }
    }
}
