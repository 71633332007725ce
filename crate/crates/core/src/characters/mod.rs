//! Equivariant refinements: symmetric functions whose exponential
//! specializations are the hypertree generating series.

mod conjecture;
mod equivariant;

pub use conjecture::{conjecture_report, ConjectureReport};
pub use equivariant::{equivariant_check, equivariant_characters, EquivariantBundle};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{int, LaurentPoly, Rational, Truncated};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::genseries::tau;
use crate::symfunc::{assoc, comm, lie, prelie, Partition, SymFunc};

/// The four series of the signed hypertree system, `t` formal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalBundle {
    pub hal_pa: SymFunc,
    pub hal_p: SymFunc,
    pub hal_a: SymFunc,
    pub hal: SymFunc,
}

impl HalBundle {
    pub fn order(&self) -> usize {
        self.hal.order()
    }

    pub fn eval_t_one(&self) -> Self {
        Self {
            hal_pa: self.hal_pa.eval_t_one(),
            hal_p: self.hal_p.eval_t_one(),
            hal_a: self.hal_a.eval_t_one(),
            hal: self.hal.eval_t_one(),
        }
    }
}

fn require_order(order: usize, min: usize) -> Result<()> {
    if order < min {
        return Err(Error::OutOfRange { what: "order", value: order, min, max: usize::MAX });
    }
    Ok(())
}

/// `p_1 − t·f`.
fn signed_branch(f: &SymFunc) -> SymFunc {
    &SymFunc::p(1, f.order()) - &f.scale(&LaurentPoly::var())
}

/// `HALᵖᵃ = p_1 (Σ_t Assoc ∘ C)` with `C = Comm ∘ (p_1 − t HALᵖᵃ)`, then
/// `HALᵖ = p_1 (Σ_t Lie ∘ C)`, `HALᵃ = (Comm − p_1) ∘ (p_1 − t HALᵖᵃ)` and
/// `HAL = HALᵖ + HALᵃ − HALᵖᵃ`.
pub fn hal(order: usize) -> Result<HalBundle> {
    require_order(order, 2)?;
    let hal_pa = crate::algebra::solve_fixpoint(SymFunc::zero(order), |f| {
        let o = f.order();
        let c = comm(o).plethysm(&signed_branch(f))?;
        Ok(assoc(o).suspension().plethysm(&c)?.mul_p1())
    })?;
    let branch = signed_branch(&hal_pa);
    let c = comm(order).plethysm(&branch)?;
    let hal_p = lie(order).suspension().plethysm(&c)?.mul_p1();
    let hal_a = (&comm(order) - &SymFunc::p(1, order)).plethysm(&branch)?;
    let hal = &(&hal_p + &hal_a) - &hal_pa;
    Ok(HalBundle { hal_pa, hal_p, hal_a, hal })
}

/// Pointing relation, and dimensions `τ_n(−t)` for `n ≤ min(order, max_n)`.
pub fn hal_checks(bundle: &HalBundle, max_n: usize) -> Result<Vec<Check>> {
    let mut checks = vec![Check::symfunc("hal_pointing", &bundle.hal_p, &bundle.hal.pointing())];
    let dims = bundle.hal.exp_specialize();
    let mut failures = Vec::new();
    for n in 2..=bundle.order().min(max_n) {
        let expected = tau(n)?.compose_monomial(&-Rational::one(), 1);
        let got = dims.coeff(n).to_laurent_t()?;
        if got != expected {
            failures.push(Check::fail(
                format!("hal_dimension_{n}"),
                Some(n),
                format!("got {got}, expected {expected}"),
            ));
        }
    }
    checks.push(match failures.into_iter().next() {
        None => Check::pass("hal_dimensions", format!("τ_n(−t) for n ≤ {}", bundle.order().min(max_n))),
        Some(f) => Check { name: "hal_dimensions".into(), ..f },
    });
    let dissymmetry = &(&bundle.hal_p + &bundle.hal_a) - &(&bundle.hal_pa + &bundle.hal);
    checks.push(Check::symfunc("hal_dissymmetry", &dissymmetry, &SymFunc::zero(bundle.order())));
    Ok(checks)
}

/// `Σ PreLie`, the suspension at `t = 1`.
fn sigma_prelie(order: usize) -> Result<SymFunc> {
    Ok(prelie(order)?.suspension_at_one())
}

/// The `t = 1` bundle from the closed forms in `ΣPreLie`:
/// `p_1 − ΣPreLie`, `p_1 ΣPreLie`, `Comm∘ΣPreLie − ΣPreLie`, and
/// `−p_1 + p_1 ΣPreLie + Comm∘ΣPreLie`.
pub fn hal_bar_closed(order: usize) -> Result<HalBundle> {
    require_order(order, 2)?;
    let p1 = SymFunc::p(1, order);
    let s = sigma_prelie(order)?;
    let c = comm(order).plethysm(&s)?;
    Ok(HalBundle {
        hal_pa: &p1 - &s,
        hal_p: s.mul_p1(),
        hal_a: &c - &s,
        hal: &(&s.mul_p1() + &c) - &p1,
    })
}

/// The anticyclic character `M`, with `M + 1 = p_1 + p_1 PreLie + p_1/PreLie`
/// and `p_1/PreLie = 1/(1 + Comm ∘ PreLie)`.
pub fn anticyclic_m(order: usize) -> Result<SymFunc> {
    require_order(order, 2)?;
    let pl = prelie(order)?;
    let one = SymFunc::one(order);
    let inverse = (&one + &comm(order).plethysm(&pl)?).invert_unit()?;
    let m = &(&(&SymFunc::p(1, order) + &pl.mul_p1()) + &inverse) - &one;
    Ok(m)
}

/// `hal(N)` at `t = 1` against the closed forms, and `HAL|₁ = −ΣM`.
pub fn hal_bar_checks(order: usize) -> Result<Vec<Check>> {
    let direct = hal(order)?.eval_t_one();
    let closed = hal_bar_closed(order)?;
    let m = anticyclic_m(order)?;
    Ok(vec![
        Check::symfunc("hal_bar_pa", &direct.hal_pa, &closed.hal_pa),
        Check::symfunc("hal_bar_p", &direct.hal_p, &closed.hal_p),
        Check::symfunc("hal_bar_a", &direct.hal_a, &closed.hal_a),
        Check::symfunc("hal_bar", &direct.hal, &closed.hal),
        Check::symfunc("hal_bar_anticyclic", &direct.hal, &-&m.suspension_at_one()),
    ])
}

/// `Comm ∘ Σ_t PreLie`: the Whitney character of pointed partitions.
pub fn wh_pp(order: usize) -> Result<SymFunc> {
    require_order(order, 1)?;
    comm(order).plethysm(&prelie(order)?.suspension())
}

/// `(m − t)^{e}` for an integer `m`, allowing `e = −1` when `m = 0`.
fn shifted_power(m: i64, t_pow: i32, e: i64) -> LaurentPoly {
    let base = &LaurentPoly::constant(int(m)) - &LaurentPoly::monomial(int(1), t_pow);
    if e >= 0 {
        base.pow(e as u32)
    } else {
        base.powi(e as i32).expect("negative powers only occur for a monomial base")
    }
}

/// The explicit class-function formula for `(Σ_t Comm) ∘ PreLie`:
/// at class `λ` with multiplicities `m_k` and `f_k = Σ_{d|k} d m_d`,
/// `(m_1 − t)^{m_1 − 1} Π_{k≥2, m_k>0} ((f_k − t^k)^{m_k} − k m_k (f_k − t^k)^{m_k − 1})`.
pub fn ce_formula(order: usize) -> Result<SymFunc> {
    require_order(order, 1)?;
    let mut out = SymFunc::zero(order);
    for n in 1..=order {
        let degree = SymFunc::from_class_function(n, order, |lambda: &Partition| {
            let m1 = lambda.multiplicity(1) as i64;
            let mut v = shifted_power(m1, 1, m1 - 1);
            for k in 2..=n as u32 {
                let mk = lambda.multiplicity(k) as i64;
                if mk > 0 {
                    let fk = lambda.fixed_points_of_power(k) as i64;
                    let a = shifted_power(fk, k as i32, mk);
                    let b = shifted_power(fk, k as i32, mk - 1).scale(&int(k as i64 * mk));
                    v = &v * &(&a - &b);
                }
            }
            v
        });
        out = &out + &degree;
    }
    Ok(out)
}

pub fn ce_check(order: usize) -> Result<Check> {
    let plethysm = comm(order).suspension().plethysm(&prelie(order)?)?;
    Ok(Check::symfunc("ce_formula", &ce_formula(order)?, &plethysm))
}

/// `Comm ∘ ΣPreLie`: the characters of the generators of a free pre-Lie
/// algebra as a free Lie algebra.
pub fn euler_generators(order: usize) -> Result<SymFunc> {
    require_order(order, 2)?;
    comm(order).plethysm(&sigma_prelie(order)?)
}

/// `Comm ∘ ΣPreLie = p_1 − (p_1 ∂_{p_1} HAL|₁ − HAL|₁)`.
pub fn generators_check(order: usize) -> Result<Check> {
    let hb = hal(order)?.eval_t_one().hal;
    let rhs = &SymFunc::p(1, order) - &(&hb.pointing() - &hb);
    Ok(Check::symfunc("generators_relation", &euler_generators(order)?, &rhs))
}

/// `C(n−1, i) n^i`, the dimensions of the Whitney homology of pointed
/// partitions, as `Σ_i C(n−1, i) n^i (−t)^i`.
pub fn pointed_whitney_dimensions(n: usize) -> LaurentPoly {
    let coeffs = (0..n)
        .map(|i| {
            let c = crate::algebra::binomial(n - 1, i) * BigInt::from(n).pow(i as u32);
            Rational::from_integer(if i % 2 == 0 { c } else { -c })
        })
        .collect();
    LaurentPoly::from_coeffs(0, coeffs)
}
