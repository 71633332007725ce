//! Characters of the symmetric group on hypertrees and cyclic hypertrees,
//! graded by rank with the unsigned weight `t^{#edges − 1}`.

use crate::algebra::{LaurentPoly, Truncated, TruncatedSeries};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::genseries::{solve_cyclic_system, solve_hypertree_system};
use crate::posetlab::{perm_character, CyclicHypertree, Hypertree};
use crate::symfunc::{assoc, comm, cyc, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantBundle {
    pub total: SymFunc,
    pub pointed: SymFunc,
    pub anti_pointed: SymFunc,
    pub pointed_anti: SymFunc,
}

impl EquivariantBundle {
    fn assemble(pointed: SymFunc, anti_pointed: SymFunc, pointed_anti: SymFunc) -> Self {
        let total = &(&pointed + &anti_pointed) - &pointed_anti;
        Self { total, pointed, anti_pointed, pointed_anti }
    }

    pub fn order(&self) -> usize {
        self.total.order()
    }
}

/// `p_1 + t·f`.
fn branch(f: &SymFunc) -> SymFunc {
    &SymFunc::p(1, f.order()) + &f.scale(&LaurentPoly::var())
}

fn comm_minus_p1(order: usize) -> SymFunc {
    &comm(order) - &SymFunc::p(1, order)
}

/// Hypertree characters and cyclic-hypertree characters, in that order.
///
/// Hypertrees: with `E = Comm ∘ (p_1 + t HAᵖ)`, the vertex-pointed series
/// solves `HAᵖ = p_1 (T Comm ∘ E)`, where `T` weights `p_λ` by `t^{|λ|−1}`.
/// Cyclic: with `E = Comm ∘ (p_1 + t HACᵖᵃ)`, `HACᵖᵃ = p_1 (T Assoc ∘ E)`
/// and `HACᵖ = p_1 (T Cyc ∘ E)`.
pub fn equivariant_characters(order: usize) -> Result<(EquivariantBundle, EquivariantBundle)> {
    if order < 2 {
        return Err(Error::OutOfRange { what: "order", value: order, min: 2, max: usize::MAX });
    }
    let ha_p = crate::algebra::solve_fixpoint(SymFunc::zero(order), |f| {
        let o = f.order();
        let e = comm(o).plethysm(&branch(f))?;
        Ok(comm(o).rank_weight().plethysm(&e)?.mul_p1())
    })?;
    let e = comm(order).plethysm(&branch(&ha_p))?;
    let t = LaurentPoly::var();
    let others = &SymFunc::one(order) + &comm(order).rank_weight().plethysm(&e)?.scale(&t);
    let ha_pa = (&e * &others).mul_p1();
    let ha_a = comm_minus_p1(order).plethysm(&branch(&ha_p))?;
    let ha = EquivariantBundle::assemble(ha_p, ha_a, ha_pa);

    let hac_pa = crate::algebra::solve_fixpoint(SymFunc::zero(order), |f| {
        let o = f.order();
        let e = comm(o).plethysm(&branch(f))?;
        Ok(assoc(o).rank_weight().plethysm(&e)?.mul_p1())
    })?;
    let e = comm(order).plethysm(&branch(&hac_pa))?;
    let hac_p = cyc(order).rank_weight().plethysm(&e)?.mul_p1();
    let hac_a = comm_minus_p1(order).plethysm(&branch(&hac_pa))?;
    let hac = EquivariantBundle::assemble(hac_p, hac_a, hac_pa);
    Ok((ha, hac))
}

fn series_check(name: &str, got: &TruncatedSeries, expected: &TruncatedSeries) -> Check {
    let order = got.order().min(expected.order());
    let (got, expected) = (got.with_order(order), expected.with_order(order));
    match got.first_difference(&expected) {
        None => Check::pass(name, format!("through degree {order}")),
        Some(d) => Check::fail(
            name,
            Some(d),
            format!("got {}, expected {}", got.coeff(d), expected.coeff(d)),
        ),
    }
}

/// Total characters against enumeration for `n ≤ max_n`, and exponential
/// specializations of all four series against the generating series at
/// `u = 1`.
pub fn equivariant_check(order: usize, max_n: usize) -> Result<Vec<Check>> {
    let (ha, hac) = equivariant_characters(order)?;
    let mut checks = Vec::new();
    for n in 2..=max_n.min(order) {
        checks.push(Check::symfunc(
            format!("hypertree_character_{n}"),
            &ha.total.homogeneous(n).with_order(n),
            &perm_character::<Hypertree>(n)?,
        ));
        checks.push(Check::symfunc(
            format!("cyclic_hypertree_character_{n}"),
            &hac.total.homogeneous(n).with_order(n),
            &perm_character::<CyclicHypertree>(n)?,
        ));
    }

    let series = solve_hypertree_system(order)?.eval_u_one();
    for (name, f, s) in [
        ("hypertree_series", &ha.total, &series.ha),
        ("hypertree_series_pointed", &ha.pointed, &series.ha_p),
        ("hypertree_series_anti_pointed", &ha.anti_pointed, &series.ha_a),
        ("hypertree_series_pointed_anti", &ha.pointed_anti, &series.ha_pa),
    ] {
        checks.push(series_check(name, &f.exp_specialize(), s));
    }
    let series = solve_cyclic_system(order, true)?.eval_u_one();
    for (name, f, s) in [
        ("cyclic_series", &hac.total, &series.hac),
        ("cyclic_series_pointed", &hac.pointed, &series.hac_p),
        ("cyclic_series_anti_pointed", &hac.anti_pointed, &series.hac_a),
        ("cyclic_series_pointed_anti", &hac.pointed_anti, &series.hac_pa),
    ] {
        checks.push(series_check(name, &f.exp_specialize(), s));
    }
    Ok(checks)
}
