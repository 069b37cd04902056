//! Exact rationals and the small amount of integer arithmetic the solvers need.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Least common multiple of the denominators of `row`.
pub(crate) fn denominator_lcm<'a>(row: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    row.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales a rational row by the lcm of its denominators, giving an integer row with the same span.
pub(crate) fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = denominator_lcm(row);
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Divides out the content so the gcd of all entries is 1. Returns false for an all-zero row.
pub(crate) fn make_primitive(row: &mut [BigInt]) -> bool {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return true;
            }
        }
    }
    if g.is_zero() {
        return false;
    }
    for x in row.iter_mut() {
        *x /= &g;
    }
    true
}

/// All positive divisors of `n` (n != 0), by trial division.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}
