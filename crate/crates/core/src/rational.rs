//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator (the `num` crate maintains both invariants).  All
//! counting and classification logic in this crate runs on these values;
//! nothing is ever rounded.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n` as a rational.
pub fn rat_i64(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Rational) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Serialize as `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_to_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p/q"` or `"p"`.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Binomial coefficient C(n, k) as a rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}

/// Exact integer square root test; `Some(r)` with `r*r == x` for `x >= 0`.
pub fn perfect_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root: `Some(r)` with `r*r == x`, `r >= 0`.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = perfect_sqrt(x.numer())?;
    let d = perfect_sqrt(x.denom())?;
    Some(BigRational::new(n, d))
}

/// Round `x` to the nearest fraction with denominator `2^bits`.
/// Used by the realization search to keep Newton iterates from growing
/// unbounded denominators; correctness is unaffected because every
/// candidate is re-verified exactly.
pub fn round_dyadic(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    let rounded = scaled.round();
    BigRational::new(rounded.to_integer(), scale)
}

/// The unique rational with smallest denominator in the closed interval
/// [lo, hi] (ties by smallest numerator), via the continued-fraction walk.
pub fn simplest_rational_in(lo: &Rational, hi: &Rational) -> Rational {
    if lo == hi {
        return lo.clone();
    }
    let (lo, hi) = if lo < hi {
        (lo.clone(), hi.clone())
    } else {
        (hi.clone(), lo.clone())
    };
    let c = lo.ceil();
    if c <= hi {
        return c;
    }
    // Both endpoints lie strictly between consecutive integers.
    let f = lo.floor();
    let inner = simplest_rational_in(
        &(Rational::one() / (&hi - &f)),
        &(Rational::one() / (&lo - &f)),
    );
    f + Rational::one() / inner
}
