//! Exact arithmetic kernel.
//!
//! Everything downstream is built from three value types:
//!
//! - [`Rational`], arbitrary precision and always reduced;
//! - [`LaurentPoly`], a univariate Laurent polynomial (used for `t` in
//!   symmetric-function coefficients and for `s` in characteristic polynomials);
//! - [`MultiPoly`], a sparse polynomial in `t` (Laurent), `s` and the edge-size
//!   markers `u_2, u_3, ...`;
//!
//! and [`TruncatedSeries`], an exponential generating series in `x` whose
//! coefficients are `MultiPoly`s. No floating point is used anywhere.

mod laurent;
mod multipoly;
mod series;

pub use laurent::LaurentPoly;
pub use multipoly::{Monomial, MultiPoly};
pub use series::{series_arith, SeriesOp, TruncatedSeries};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("{text:?}: zero denominator")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

/// A value known only up to some degree (`x`-order for series, total degree
/// for symmetric functions).
pub trait Truncated: Clone {
    fn order(&self) -> usize;

    /// Truncate to, or zero-extend up to, the given order.
    fn with_order(&self, order: usize) -> Self;

    /// Lowest degree at which `self` and `other` differ.
    fn first_difference(&self, other: &Self) -> Option<usize>;
}

/// Solve `F = update(F)` degree by degree.
///
/// `update` must be contractive in the graded sense: the degree-`n` output
/// may only depend on input degrees `< n`. Pass 1 builds the solution one
/// order at a time (so each pass only costs the work at its own truncation);
/// one extra application at full order then confirms the fixed point.
pub fn solve_fixpoint<T, F>(zero: T, update: F) -> Result<T>
where
    T: Truncated,
    F: Fn(&T) -> Result<T>,
{
    let order = zero.order();
    let mut current = zero.with_order(0);
    for d in 0..=order {
        current = update(&current.with_order(d))?;
        debug_assert_eq!(current.order(), d);
    }
    let check = update(&current)?;
    match current.first_difference(&check) {
        None => Ok(current),
        Some(degree) => Err(Error::NonContraction { degree }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for r in [rat(-3, 6), rat(0, 5), rat(7, 1), rat(22, -7)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&rat(2, -4)), "-1/2");
        assert_eq!(format_rational(&rat(0, -4)), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(8, 3), BigInt::from(56));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
