//! Exact coefficient arithmetic: rationals, Laurent polynomials in `t`,
//! truncated power series in `h`, and dense matrices over either ring.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

mod laurent;
mod matrix;
mod series;

pub use laurent::LaurentPoly;
pub use matrix::RingMatrix;
pub use series::{t_to_hbar, t_to_one_plus_hbar, TruncSeries};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers over arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator (the underlying
/// `Ratio` reduces on construction).
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a rational from a `"p"` or `"p/q"` decimal string.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::Parse {
        position: 0,
        message: format!("invalid rational `{text}`: {msg}"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = match den {
        Some(d) => d.trim().parse().map_err(|_| bad("bad denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Generalized binomial coefficient `binom(x, m)` for rational `x`:
/// `x (x-1) ... (x-m+1) / m!`.
pub fn binom(x: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..m {
        acc *= (x - rat_int(j as i64)) / rat_int((j + 1) as i64);
    }
    acc
}

/// `binom(k, m)` for a (possibly negative) integer upper argument.
pub fn binom_int(k: i64, m: usize) -> Rational {
    binom(&rat_int(k), m)
}

/// Contract implemented by the coefficient rings that [`RingMatrix`] is
/// generic over. `zero_like`/`one_like` build constants carrying the same
/// context as `self` (the truncation order, for series).
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}
