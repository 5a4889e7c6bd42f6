//! Power series in `h` with rational coefficients, truncated at a fixed order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{binom_int, CoeffRing, LaurentPoly, Rational};

/// A truncated power series `c_0 + c_1 h + ... + c_N h^N`.
///
/// All arithmetic is closed at the truncation order: terms of degree `> N`
/// are discarded. Binary operations require both operands to carry the same
/// order (mixing orders is a programming error and panics).
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<Rational>, // length order + 1
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { order, coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The variable `h` (zero when `order == 0`).
    pub fn hbar(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Builds a series from the given coefficients, truncating or
    /// zero-padding to `order + 1` entries.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut out = Self::zero(order);
        for (k, c) in coeffs.into_iter().enumerate() {
            if k > order {
                break;
            }
            out.coeffs[k] = c;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `h^k` (zero beyond the truncation order).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `h^k` (shifting coefficients up, dropping overflow).
    pub fn mul_hbar_pow(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for i in 0..=self.order.saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Multiplicative inverse mod `h^{N+1}`; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let c0 = &self.coeffs[0];
        let mut inv = Self::zero(self.order);
        inv.coeffs[0] = Rational::one() / c0;
        for k in 1..=self.order {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv.coeffs[k - i];
            }
            inv.coeffs[k] = -acc / c0;
        }
        Ok(inv)
    }

    /// `(1 + h)^k` for any integer `k`, via the generalized binomial series.
    pub fn one_plus_hbar_pow(k: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        for j in 0..=order {
            s.coeffs[j] = binom_int(k, j);
        }
        s
    }

    /// Coefficients rendered as exact `"p/q"` strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order, rhs.order,
            "series truncation orders differ ({} vs {})",
            self.order, rhs.order
        );
    }
}

/// Substitutes `t = (1 + h)^{-1}` into a Laurent polynomial, expanded to the
/// given truncation order. A ring homomorphism mod `h^{N+1}`.
pub fn t_to_hbar(p: &LaurentPoly, order: usize) -> TruncSeries {
    let mut out = TruncSeries::zero(order);
    for (e, c) in p.terms() {
        out = &out + &TruncSeries::one_plus_hbar_pow(-e, order).scale(c);
    }
    out
}

/// Substitutes `t = 1 + h` into a Laurent polynomial, expanded to the given
/// truncation order.
pub fn t_to_one_plus_hbar(p: &LaurentPoly, order: usize) -> TruncSeries {
    let mut out = TruncSeries::zero(order);
    for (e, c) in p.terms() {
        out = &out + &TruncSeries::one_plus_hbar_pow(e, order).scale(c);
    }
    out
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if !wrote {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "h")?,
                (1, false) => write!(f, "{mag}*h")?,
                (_, true) => write!(f, "h^{k}")?,
                (_, false) => write!(f, "{mag}*h^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_same_order(rhs);
        TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_same_order(rhs);
        TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_same_order(rhs);
        let mut out = TruncSeries::zero(self.order);
        for i in 0..=self.order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(self.order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        out
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl CoeffRing for TruncSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.order)
    }
    fn one_like(&self) -> Self {
        Self::one(self.order)
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}
