use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{lambert_w, solve_cyclic_system, solve_hypertree_system};
use crate::algebra::{format_rational, LaurentPoly, MultiPoly, Rational, Truncated, TruncatedSeries};
use crate::check::Check;
use crate::error::{Error, Result};

/// Largest `n` accepted by the polynomial pipeline.
pub const MAX_N: usize = 14;

/// Characteristic polynomial `χₙ(s)` of the hypertree poset on `n` vertices,
/// coefficients in ascending powers of `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub n: usize,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiMethod {
    /// `χₙ(s) = s^{n−2} τₙ(−1/s)`.
    ViaTau,
    /// Solve the interval relation degree by degree from the weighted `HA`.
    Triangular,
}

impl FromStr for ChiMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "via_tau" => Ok(ChiMethod::ViaTau),
            "triangular" => Ok(ChiMethod::Triangular),
            _ => Err(Error::Parse(format!("unknown method {s:?} (expected via_tau or triangular)"))),
        }
    }
}

impl CharPoly {
    fn from_laurent(n: usize, p: &LaurentPoly) -> Result<Self> {
        if p.low_exp().is_some_and(|e| e < 0) {
            return Err(Error::InvalidStructure(format!("χ_{n} has negative powers: {}", p.fmt_with("s"))));
        }
        let high = p.high_exp().unwrap_or(0);
        let coeffs = (0..=high).map(|e| p.coeff(e)).collect();
        Ok(Self { n, coeffs })
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, self.coeffs.clone())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        self.to_laurent().eval(s)
    }

    /// Coefficient of `s^{d−k}` has sign `(−1)^k` and is nonzero.
    pub fn alternates(&self) -> bool {
        let d = self.degree();
        self.coeffs.iter().enumerate().all(|(e, c)| {
            let k = d - e;
            !c.is_zero() && (c.is_positive() == k.is_multiple_of(2))
        })
    }

    /// `n<TAB>c0,c1,...` in ascending powers.
    pub fn tsv_row(&self) -> String {
        let cs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        format!("{}\t{}", self.n, cs.join(","))
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_laurent().fmt_with("s"))
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_N {
        return Err(Error::OutOfRange { what: "n", value: n, min, max: MAX_N });
    }
    Ok(())
}

/// `τₙ(t)`: cyclic hypertrees on `n` vertices counted by `t^{rank}`.
pub fn tau(n: usize) -> Result<LaurentPoly> {
    check_n(n, 2)?;
    let hac = solve_cyclic_system(n, false)?;
    hac.hac.coeff(n).to_laurent_t()
}

fn chi_via_tau(n: usize) -> Result<CharPoly> {
    // s^{n-2} τ(−1/s): the t^k coefficient lands on s^{n-2-k} with sign (−1)^k
    let t = tau(n)?;
    let p = t.compose_monomial(&-Rational::one(), -1).shift(n as i32 - 2);
    CharPoly::from_laurent(n, &p)
}

/// All `χ_2..χ_n` from `Σ_T χ_T = s^{n−3}` summed over `[xⁿ]HA` with
/// `u_i ↦ χ_i/s`, `t ↦ s`. The single-edge hypertree contributes `χ_n/s`.
fn chi_triangular_all(n: usize) -> Result<Vec<LaurentPoly>> {
    let ha = solve_hypertree_system(n.max(2))?.ha;
    let s = LaurentPoly::var();
    let s_inv = LaurentPoly::monomial(Rational::one(), -1);
    let mut chis: Vec<LaurentPoly> = vec![LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()];
    for m in 3..=n {
        let top = crate::algebra::Monomial::one().with_u(m, 1);
        let coeff = ha.coeff(m);
        if coeff.coeff(&top) != Rational::one() {
            return Err(Error::InvalidStructure(format!("u_{m} does not occur linearly in HA_{m}")));
        }
        let mut rest = LaurentPoly::zero();
        for (mono, c) in coeff.terms() {
            if *mono == top {
                continue;
            }
            let mut term = LaurentPoly::monomial(c.clone(), mono.t);
            for size in 2..m {
                let e = mono.u_exp(size);
                if e > 0 {
                    term = &term * &(&chis[size] * &s_inv).pow(e);
                }
            }
            rest += &term;
        }
        let target = LaurentPoly::monomial(Rational::one(), m as i32 - 3);
        chis.push(&(&target - &rest) * &s);
    }
    Ok(chis)
}

fn chi_triangular(n: usize) -> Result<CharPoly> {
    let chis = chi_triangular_all(n)?;
    CharPoly::from_laurent(n, &chis[n])
}

/// `χₙ(s)`. Both methods are always computed and must agree.
pub fn chi(n: usize, method: ChiMethod) -> Result<CharPoly> {
    check_n(n, 2)?;
    let via_tau = chi_via_tau(n)?;
    let triangular = chi_triangular(n)?;
    if via_tau != triangular {
        return Err(Error::MethodDisagreement {
            n,
            via_tau: via_tau.to_string(),
            triangular: triangular.to_string(),
        });
    }
    Ok(match method {
        ChiMethod::ViaTau => via_tau,
        ChiMethod::Triangular => triangular,
    })
}

/// `−χₙ(1)`, the Möbius number of the hypertree poset with a top added.
pub fn mobius_hat(n: usize) -> Result<Rational> {
    check_n(n, 3)?;
    Ok(-chi(n, ChiMethod::ViaTau)?.eval(&Rational::one()))
}

fn series_check(name: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Check {
    let order = lhs.order().min(rhs.order());
    match (0..=order).find(|&n| lhs.coeff(n) != rhs.coeff(n)) {
        None => Check::pass(name, format!("zero residual to order {order}")),
        Some(d) => Check::fail(
            name,
            Some(d),
            format!("residual {}", lhs.coeff(d) - rhs.coeff(d)),
        ),
    }
}

/// Substitute `A = ∂HAC`, `z = B + t·HACᵖᵃ` (with `B = x`, simplified cyclic
/// system) into `A = −(1/t) ln(B/z)`, `B = z − t z (exp(z) − 1)`, and check the
/// `t = −1` specialization `A = z = W(B)`.
pub fn verify_inversion_system(order: usize) -> Result<Vec<Check>> {
    let bundle = solve_cyclic_system(order + 1, false)?;
    let a = bundle.hac.derivative();
    let hac_pa = bundle.hac_pa.with_order(order);
    let b = TruncatedSeries::x(order);
    let t = MultiPoly::t();
    let z = &b + &hac_pa.scale(&t);

    let ez = &z.exp()? - &TruncatedSeries::one(order);
    let b_rebuilt = &z - &(&z * &ez).scale(&t);

    // (1/t) ln(1 + t v) with v = HACᵖᵃ/B
    let v = bundle.hac_pa.div_x()?;
    let a_rebuilt = v.compose_outer(|k| {
        let sign = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let c = Rational::from_integer(sign * crate::algebra::factorial(k - 1));
        &MultiPoly::constant(c) * &MultiPoly::t_pow(k as i32 - 1)
    })?;

    let minus_one = -Rational::one();
    let w = lambert_w(order);
    Ok(vec![
        series_check("inversion_b", &b_rebuilt, &b),
        series_check("inversion_a", &a_rebuilt, &a),
        series_check("lambert_z", &z.eval_t(&minus_one), &w),
        series_check("lambert_a", &a.eval_t(&minus_one), &w),
    ])
}
