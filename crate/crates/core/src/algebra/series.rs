use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use super::{binomial, factorial, MultiPoly, Rational, Truncated};
use crate::error::{Error, Result};

/// Exponential generating series `Σ_{n ≤ N} c_n xⁿ/n!` with `MultiPoly`
/// coefficients. `coeffs` always has exactly `order + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<MultiPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; the operator impls panic on mismatched orders
/// instead.
pub fn series_arith(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    op: SeriesOp,
) -> Result<TruncatedSeries> {
    if a.order != b.order {
        return Err(Error::OrderMismatch { left: a.order, right: b.order });
    }
    Ok(match op {
        SeriesOp::Add => a + b,
        SeriesOp::Sub => a - b,
        SeriesOp::Mul => a * b,
    })
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { order, coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    pub fn constant(c: MultiPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MultiPoly::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = MultiPoly::one();
        }
        s
    }

    /// Build from EGF coefficients, truncating or zero-padding to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<MultiPoly>) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        Self { order, coeffs }
    }

    /// `exp(x)`, every coefficient 1.
    pub fn exp_x(order: usize) -> Self {
        Self::from_coeffs(order, vec![MultiPoly::one(); order + 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &MultiPoly) -> Self {
        self.map(|a| a * c)
    }

    pub fn eval_u_one(&self) -> Self {
        self.map(MultiPoly::eval_u_one)
    }

    pub fn eval_t(&self, at: &Rational) -> Self {
        self.map(|a| a.eval_t(at))
    }

    /// `x·f`; in EGF coefficients `c_n ↦ n·c_{n-1}`.
    pub fn mul_x(&self) -> Self {
        let mut out = Self::zero(self.order);
        for n in 1..=self.order {
            out.coeffs[n] = self.coeffs[n - 1].scale(&Rational::from_integer(n.into()));
        }
        out
    }

    /// `f/x`, one order lower. Requires a zero constant term.
    pub fn div_x(&self) -> Result<Self> {
        self.require_constant("div_x", &MultiPoly::zero())?;
        let coeffs = (0..self.order)
            .map(|n| self.coeffs[n + 1].scale(&Rational::new(BigInt::one(), (n + 1).into())))
            .collect();
        Ok(Self::from_coeffs(self.order.saturating_sub(1), coeffs))
    }

    /// `∂ₓ f`, one order lower.
    pub fn derivative(&self) -> Self {
        let order = self.order.saturating_sub(1);
        Self::from_coeffs(order, self.coeffs[1..].to_vec())
    }

    /// `x∂ₓ f` (pointing at a vertex): `c_n ↦ n·c_n`.
    pub fn pointing(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&Rational::from_integer(n.into())))
                .collect(),
        }
    }

    fn require_constant(&self, op: &'static str, expected: &MultiPoly) -> Result<()> {
        if &self.coeffs[0] != expected {
            return Err(Error::ConstantTerm {
                op,
                expected: expected.to_string(),
                found: self.coeffs[0].to_string(),
            });
        }
        Ok(())
    }

    /// `exp(f)` for `f` without constant term, via `g' = f'·g`.
    pub fn exp(&self) -> Result<Self> {
        self.require_constant("series_exp", &MultiPoly::zero())?;
        let mut g = Self::zero(self.order);
        g.coeffs[0] = MultiPoly::one();
        for n in 0..self.order {
            let mut acc = MultiPoly::zero();
            for k in 0..=n {
                let term = &self.coeffs[k + 1] * &g.coeffs[n - k];
                acc += &term.scale(&Rational::from_integer(binomial(n, k)));
            }
            g.coeffs[n + 1] = acc;
        }
        Ok(g)
    }

    /// `ln(g)` for `g` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        self.require_constant("series_log", &MultiPoly::one())?;
        let mut f = Self::zero(self.order);
        for n in 0..self.order {
            let mut acc = self.coeffs[n + 1].clone();
            for k in 0..n {
                let term = &f.coeffs[k + 1] * &self.coeffs[n - k];
                acc -= &term.scale(&Rational::from_integer(binomial(n, k)));
            }
            f.coeffs[n + 1] = acc;
        }
        Ok(f)
    }

    /// `Σ_{k≥1} a_k · fᵏ/k!` for `f` without constant term, where `outer(k)`
    /// supplies `a_k` (the EGF coefficients of the outer function).
    pub fn compose_outer(&self, outer: impl Fn(usize) -> MultiPoly) -> Result<Self> {
        self.require_constant("compose", &MultiPoly::zero())?;
        let mut out = Self::zero(self.order);
        // divided power fᵏ/k!
        let mut power = Self::one(self.order);
        for k in 1..=self.order {
            power = (&power * self).scale(&MultiPoly::constant(Rational::new(
                BigInt::one(),
                BigInt::from(k),
            )));
            let a = outer(k);
            if a.is_zero() {
                continue;
            }
            out = &out + &power.scale(&a);
        }
        Ok(out)
    }

    /// `Σ_{n≥1} u_{n+1} zⁿ/n!` (shift 0) or `Σ_{n≥1} u_{n+1} z^{n+1}/(n+1)!`
    /// (shift 1): an edge through a marked vertex, respectively an edge-pointed
    /// set of branches. Requires `z` without constant term.
    pub fn edge_sum_apply(&self, shift: usize) -> Result<Self> {
        match shift {
            0 => self.compose_outer(|k| MultiPoly::u(k + 1)),
            1 => self.compose_outer(|k| if k >= 2 { MultiPoly::u(k) } else { MultiPoly::zero() }),
            _ => Err(Error::OutOfRange { what: "edge_sum shift", value: shift, min: 0, max: 1 }),
        }
    }

    /// Ordinary coefficient `[xⁿ]`, i.e. `c_n / n!`.
    pub fn ordinary_coeff(&self, n: usize) -> MultiPoly {
        self.coeffs[n].scale(&Rational::new(BigInt::one(), factorial(n)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "order": self.order,
            "coeffs": self.coeffs.iter().map(MultiPoly::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let order = value["order"]
            .as_u64()
            .ok_or_else(|| Error::Parse("series: missing \"order\"".into()))? as usize;
        let coeffs = value["coeffs"]
            .as_array()
            .ok_or_else(|| Error::Parse("series: missing \"coeffs\"".into()))?;
        if coeffs.len() != order + 1 {
            return Err(Error::Parse(format!(
                "series: {} coefficients for order {order}",
                coeffs.len()
            )));
        }
        let coeffs = coeffs.iter().map(MultiPoly::from_json).collect::<Result<_>>()?;
        Ok(Self { order, coeffs })
    }
}

impl Truncated for TruncatedSeries {
    fn order(&self) -> usize {
        self.order
    }

    fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.clone())
    }

    fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.map(|c| -c)
    }
}

/// Binomial convolution: `(fg)_n = Σ C(n,k) f_k g_{n-k}`.
impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        let mut out = TruncatedSeries::zero(self.order);
        for n in 0..=self.order {
            let mut acc = MultiPoly::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || rhs.coeffs[n - k].is_zero() {
                    continue;
                }
                let term = &self.coeffs[k] * &rhs.coeffs[n - k];
                acc += &term.scale(&Rational::from_integer(binomial(n, k)));
            }
            out.coeffs[n] = acc;
        }
        out
    }
}
