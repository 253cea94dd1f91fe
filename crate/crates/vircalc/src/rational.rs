//! Exact rationals and small integer helpers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Number, Value};

use crate::error::ParseError;

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `(-1)^e` as a rational.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parses `a`, `-a`, `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Rational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// `n` or `n/d` in lowest terms.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn bigint_json(n: &BigInt) -> Value {
    // arbitrary_precision keeps big integers exact
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

/// `[num, den]`
pub fn rational_to_json(q: &Rational) -> Value {
    Value::Array(vec![bigint_json(q.numer()), bigint_json(q.denom())])
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt, ParseError> {
    let bad = || ParseError::Json(format!("expected integer, got {v}"));
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad()),
        Value::String(s) => BigInt::from_str(s).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

pub fn rational_from_json(v: &Value) -> Result<Rational, ParseError> {
    match v {
        Value::Array(a) if a.len() == 2 => {
            let n = bigint_from_json(&a[0])?;
            let d = bigint_from_json(&a[1])?;
            if d.is_zero() {
                return Err(ParseError::Json("zero denominator".into()));
            }
            Ok(Rational::new(n, d))
        }
        Value::Number(_) => Ok(Rational::from_integer(bigint_from_json(v)?)),
        Value::String(s) => parse_rational(s),
        _ => Err(ParseError::Json(format!("expected [num, den], got {v}"))),
    }
}

/// Writes `coeff * body` terms as `a*x + b*y - c*z`; `body` empty means a constant.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut out = String::new();
    for (c, body) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body.is_empty() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format_rational(&a));
            out.push('*');
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits `a*x + b*y - c*z` into signed terms. Signs inside parentheses are kept.
pub(crate) fn split_terms(s: &str) -> Vec<(bool, String)> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    let mut prev_significant: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        let unary_context = matches!(prev_significant, None | Some('*') | Some('^') | Some('/'));
        if depth == 0 && (ch == '+' || ch == '-') && !unary_context {
            terms.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
            prev_significant = None;
            continue;
        }
        if depth == 0 && ch == '-' && prev_significant.is_none() && cur.trim().is_empty() {
            neg = !neg;
            continue;
        }
        if !ch.is_whitespace() {
            prev_significant = Some(ch);
        }
        cur.push(ch);
    }
    terms.push((neg, cur));
    terms
        .into_iter()
        .map(|(n, t)| (n, t.trim().to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["0", "7", "-3/4", "12/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational(" 6/-4 ").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn json_roundtrip_big() {
        let q = Rational::new(factorial(40), BigInt::from(7));
        let v = rational_to_json(&q);
        assert_eq!(rational_from_json(&v).unwrap(), q);
    }

    #[test]
    fn small_combinatorics() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(sign(-3), int(-1));
    }

    #[test]
    fn term_splitting() {
        let t = split_terms("-1/2*p1^2 + p2 - 3");
        assert_eq!(
            t,
            vec![
                (true, "1/2*p1^2".to_string()),
                (false, "p2".to_string()),
                (true, "3".to_string())
            ]
        );
        assert_eq!(
            format_terms([(&rat(-1, 2), "x".into()), (&int(1), "y".into()), (&int(-3), String::new())]),
            "-1/2*x + y - 3"
        );
    }
}
