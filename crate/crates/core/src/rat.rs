//! Exact rational scalars.
//!
//! Every scalar in this crate is a [`Rat`] (arbitrary-precision rational);
//! nothing is ever rounded to floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rat = BigRational;

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn ratz(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse an exact rational written as `p`, `p/q` or a sum/difference of
/// such terms (`-3/2+1/3`). Whitespace is not allowed inside a term.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let mut total = Rat::zero();
    let mut term = String::new();
    let mut terms: Vec<String> = Vec::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut term));
            if ch == '-' {
                term.push('-');
            }
        } else {
            term.push(ch);
        }
    }
    terms.push(term);
    for t in terms {
        if t.is_empty() || t == "-" {
            return Err(format!("malformed rational `{s}`"));
        }
        let (num_s, den_s) = match t.split_once('/') {
            Some((a, b)) => (a, b),
            None => (t.as_str(), "1"),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| format!("bad integer `{num_s}` in `{s}`"))?;
        let den: BigInt = den_s
            .parse()
            .map_err(|_| format!("bad integer `{den_s}` in `{s}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        total += Rat::new(num, den);
    }
    Ok(total)
}

/// Render a rational as `p` or `p/q`, never as a decimal.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `r` as an `i64` if it is a small integer.
pub fn as_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    use num_traits::ToPrimitive;
    r.numer().to_i64()
}

/// Reduced numerator/denominator pair `(p, q)` with `q >= 1`.
pub fn num_den(r: &Rat) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

/// True when `r >= 0`.
pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), ratz(-7));
        assert_eq!(parse_rat("-3/2+1/3").unwrap(), rat(-7, 6));
        assert_eq!(parse_rat("1/2-3").unwrap(), rat(-5, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn format_round_trip() {
        for r in [rat(22, 5), ratz(-3), rat(-1, 6)] {
            assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
        }
    }
}
