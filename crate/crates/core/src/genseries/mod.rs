//! Generating series of hypertrees and cyclic hypertrees, and the
//! characteristic polynomials of hypertree posets derived from them.
//!
//! Weights: a hypertree with edges `a_1, ..., a_k` has weight
//! `t^{k-1} Π u_{|a_i|}`, so `t` marks the rank.

mod charpoly;

pub use charpoly::{chi, mobius_hat, tau, verify_inversion_system, CharPoly, ChiMethod};

use num_bigint::BigInt;

use crate::algebra::{factorial, solve_fixpoint, MultiPoly, Rational, Truncated, TruncatedSeries};
use crate::check::Check;
use crate::error::{Error, Result};

/// `HA` together with its vertex-, edge- and flag-pointed versions and the
/// auxiliary series `Y` (an edge through a root, root not counted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypertreeSeriesBundle {
    pub ha: TruncatedSeries,
    pub ha_p: TruncatedSeries,
    pub ha_a: TruncatedSeries,
    pub ha_pa: TruncatedSeries,
    pub y: TruncatedSeries,
}

/// The cyclic analogue of [`HypertreeSeriesBundle`]. With `weighted == false`
/// every `u_i` is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSeriesBundle {
    pub hac: TruncatedSeries,
    pub hac_p: TruncatedSeries,
    pub hac_a: TruncatedSeries,
    pub hac_pa: TruncatedSeries,
    pub yc: TruncatedSeries,
    pub weighted: bool,
}

fn require_order(order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::OutOfRange { what: "order", value: order, min: 2, max: usize::MAX });
    }
    Ok(())
}

fn t_pow(e: usize) -> MultiPoly {
    MultiPoly::t_pow(e as i32)
}

fn int_poly(n: BigInt) -> MultiPoly {
    MultiPoly::constant(Rational::from_integer(n))
}

/// `x + t·f`: a vertex, optionally carrying a rooted structure that adds one
/// to the edge count.
fn branch(f: &TruncatedSeries) -> TruncatedSeries {
    &TruncatedSeries::x(f.order()) + &f.scale(&MultiPoly::t())
}

/// Checks shared by both bundles.
fn structural_checks(
    label: &str,
    total: &TruncatedSeries,
    p: &TruncatedSeries,
    a: &TruncatedSeries,
    pa: &TruncatedSeries,
) -> Vec<Check> {
    let dissymmetry = &(pa + total) - &(p + a);
    let pointing = &total.pointing() - p;
    let first_nonzero = |s: &TruncatedSeries| (0..=s.order()).find(|&n| !s.coeff(n).is_zero());
    let to_check = |name: String, s: &TruncatedSeries| match first_nonzero(s) {
        None => Check::pass(name, "zero residual"),
        Some(d) => Check::fail(name, Some(d), format!("residual {}", s.coeff(d))),
    };
    vec![
        to_check(format!("{label}_dissymmetry"), &dissymmetry),
        to_check(format!("{label}_pointing"), &pointing),
    ]
}

impl HypertreeSeriesBundle {
    pub fn order(&self) -> usize {
        self.ha.order()
    }

    /// Dissymmetry and vertex-pointing relations.
    pub fn checks(&self) -> Vec<Check> {
        structural_checks("ha", &self.ha, &self.ha_p, &self.ha_a, &self.ha_pa)
    }

    /// Every series with `u_i = 1`.
    pub fn eval_u_one(&self) -> Self {
        Self {
            ha: self.ha.eval_u_one(),
            ha_p: self.ha_p.eval_u_one(),
            ha_a: self.ha_a.eval_u_one(),
            ha_pa: self.ha_pa.eval_u_one(),
            y: self.y.eval_u_one(),
        }
    }
}

impl CyclicSeriesBundle {
    pub fn order(&self) -> usize {
        self.hac.order()
    }

    pub fn checks(&self) -> Vec<Check> {
        structural_checks("hac", &self.hac, &self.hac_p, &self.hac_a, &self.hac_pa)
    }

    pub fn eval_u_one(&self) -> Self {
        Self {
            hac: self.hac.eval_u_one(),
            hac_p: self.hac_p.eval_u_one(),
            hac_a: self.hac_a.eval_u_one(),
            hac_pa: self.hac_pa.eval_u_one(),
            yc: self.yc.eval_u_one(),
            weighted: false,
        }
    }
}

/// Solve the hypertree system to order `order`:
/// `HAᵖ = (x/t)(exp(tY) − 1)`, `Y = Σ u_{n+1} (x + t HAᵖ)ⁿ/n!`,
/// `HAᵃ = Σ_{n≥2} u_n (x + t HAᵖ)ⁿ/n!`, `HAᵖᵃ = x Y exp(tY)`,
/// `HA = HAᵖ + HAᵃ − HAᵖᵃ`.
pub fn solve_hypertree_system(order: usize) -> Result<HypertreeSeriesBundle> {
    require_order(order)?;
    let ha_p = solve_fixpoint(TruncatedSeries::zero(order), |h| {
        let y = branch(h).edge_sum_apply(0)?;
        Ok(y.compose_outer(|k| t_pow(k - 1))?.mul_x())
    })?;
    let z = branch(&ha_p);
    let y = z.edge_sum_apply(0)?;
    let ha_a = z.edge_sum_apply(1)?;
    let ty = y.scale(&MultiPoly::t());
    let ha_pa = (&y * &ty.exp()?).mul_x();
    let ha = &(&ha_p + &ha_a) - &ha_pa;
    Ok(HypertreeSeriesBundle { ha, ha_p, ha_a, ha_pa, y })
}

/// Solve the cyclic-hypertree system to order `order`:
/// `HACᵖᵃ = x YC/(1 − t YC)`, `HACᵖ = −(x/t) ln(1 − t YC)`,
/// `HACᵃ = Σ_{n≥2} u_n (x + t HACᵖᵃ)ⁿ/n!`, `HAC = HACᵖ + HACᵃ − HACᵖᵃ`, where
/// `YC = Σ u_{n+1} (x + t HACᵖᵃ)ⁿ/n!`, or `exp(x + t HACᵖᵃ) − 1` when
/// `weighted` is false.
pub fn solve_cyclic_system(order: usize, weighted: bool) -> Result<CyclicSeriesBundle> {
    require_order(order)?;
    let edge = |z: &TruncatedSeries| -> Result<TruncatedSeries> {
        if weighted {
            z.edge_sum_apply(0)
        } else {
            Ok(&z.exp()? - &TruncatedSeries::one(z.order()))
        }
    };
    // Σ_k t^{k-1} YCᵏ, i.e. EGF outer coefficients k!·t^{k-1}
    let linear_orders = |k: usize| &int_poly(factorial(k)) * &t_pow(k - 1);
    let hac_pa = solve_fixpoint(TruncatedSeries::zero(order), |h| {
        Ok(edge(&branch(h))?.compose_outer(linear_orders)?.mul_x())
    })?;
    let z = branch(&hac_pa);
    let yc = edge(&z)?;
    let hac_a = if weighted {
        z.edge_sum_apply(1)?
    } else {
        &(&z.exp()? - &TruncatedSeries::one(order)) - &z
    };
    // cyclic orders on k edges: (k-1)!
    let hac_p = yc.compose_outer(|k| &int_poly(factorial(k - 1)) * &t_pow(k - 1))?.mul_x();
    let hac = &(&hac_p + &hac_a) - &hac_pa;
    Ok(CyclicSeriesBundle { hac, hac_p, hac_a, hac_pa, yc, weighted })
}

/// EGF coefficients `(−1)^{n−1} n^{n−1}` of the Lambert series `W` with
/// `W exp(W) = x`.
pub fn lambert_w(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                return MultiPoly::zero();
            }
            let mag = BigInt::from(n).pow(n as u32 - 1);
            int_poly(if n % 2 == 1 { mag } else { -mag })
        })
        .collect();
    TruncatedSeries::from_coeffs(order, coeffs)
}
