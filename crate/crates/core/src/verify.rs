//! Named groups of checks, shared by the command line and the acceptance run.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::algebra::{int, LaurentPoly, Rational, Truncated};
use crate::characters::{
    ce_check, conjecture_report, equivariant_check, generators_check, hal, hal_bar_checks, hal_checks,
    pointed_whitney_dimensions, wh_pp,
};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::genseries::{
    chi, mobius_hat, solve_cyclic_system, solve_hypertree_system, tau, verify_inversion_system, ChiMethod,
};
use crate::posetlab::{
    boolean_interval_check, cyclic_order_character, enumerate, enumerate_hypertrees_by_filter, verify_phi,
    whitney_character, FinitePoset, CyclicHypertree, Hypertree, PointedPartition, Structure,
};
use crate::symfunc::{cyc, verify_identities, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Series,
    Identities,
    Posets,
    Characters,
    Annexe,
    Conjecture,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Series,
        Suite::Identities,
        Suite::Posets,
        Suite::Characters,
        Suite::Annexe,
        Suite::Conjecture,
        Suite::All,
    ];

    /// Largest `n` for enumeration-based oracles when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Series => 6,
            _ => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Series => "series",
            Suite::Identities => "identities",
            Suite::Posets => "posets",
            Suite::Characters => "characters",
            Suite::Annexe => "annexe",
            Suite::Conjecture => "conjecture",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Runs `suite` at truncation `order`; `max_n` bounds the enumeration
/// oracles and defaults per suite.
pub fn run_suite(suite: Suite, order: usize, max_n: Option<usize>) -> Result<Vec<Check>> {
    let m = max_n.unwrap_or(suite.default_max_n());
    match suite {
        Suite::Series => series(order, m),
        Suite::Identities => verify_identities(order),
        Suite::Posets => posets(m),
        Suite::Characters => characters(order, m),
        Suite::Annexe => equivariant_check(order, m),
        Suite::Conjecture => conjecture(m),
        Suite::All => {
            let mut out = Vec::new();
            for s in &Suite::ALL[..6] {
                out.extend(run_suite(*s, order, max_n)?);
            }
            Ok(out)
        }
    }
}

fn rank_polynomial<S: Structure>(elements: &[S]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for e in elements {
        p += LaurentPoly::monomial(int(1), e.rank() as i32);
    }
    p
}

/// `(−1)^{n−1} (n−1)^{n−2}`.
pub fn expected_mobius(n: usize) -> Rational {
    let v: BigInt = Pow::pow(BigInt::from(n - 1), (n - 2) as u32);
    Rational::from_integer(if n.is_multiple_of(2) { -v } else { v })
}

fn series(order: usize, max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let ha = solve_hypertree_system(order)?;
    checks.extend(ha.checks());
    checks.extend(solve_cyclic_system(order, true)?.checks());
    let simplified = solve_cyclic_system(order, false)?;
    checks.extend(simplified.checks());
    let weighted = solve_cyclic_system(order, true)?.eval_u_one();
    checks.push(Check::from_bool(
        "cyclic_weighted_vs_simplified",
        weighted.hac == simplified.hac && weighted.hac_pa == simplified.hac_pa,
        "the two cyclic systems differ at u = 1",
    ));

    let ha = ha.eval_u_one();
    for n in 2..=max_n.min(order) {
        let from_series = ha.ha.coeff(n).eval_t(&int(1)).constant_term();
        let enumerated = enumerate::<Hypertree>(n)?;
        checks.push(Check::from_bool(
            format!("hypertree_count_{n}"),
            from_series == int(enumerated.len() as i64),
            format!("series {from_series}, enumeration {}", enumerated.len()),
        ));
        let tau_n = tau(n)?;
        let cyclic = rank_polynomial(&enumerate::<CyclicHypertree>(n)?);
        checks.push(Check::from_bool(
            format!("tau_vs_cyclic_enumeration_{n}"),
            tau_n == cyclic,
            format!("tau {tau_n}, enumeration {cyclic}"),
        ));
    }
    for n in 3..=order {
        let name = format!("chi_{n}");
        match chi(n, ChiMethod::ViaTau) {
            Ok(c) => checks.push(Check::from_bool(name, c.alternates(), format!("{c} does not alternate"))),
            Err(e) => checks.push(Check::fail(name, Some(n), e.to_string())),
        }
        let mu = mobius_hat(n)?;
        let expected = expected_mobius(n);
        checks.push(Check::from_bool(
            format!("mobius_hat_{n}"),
            mu == expected,
            format!("got {mu}, expected {expected}"),
        ));
    }
    checks.extend(verify_inversion_system(order)?);
    Ok(checks)
}

fn posets(max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=max_n {
        checks.extend(verify_phi(n)?);
        checks.push(boolean_interval_check(n)?);
        checks.push(Check::from_bool(
            format!("hypertree_enumeration_{n}"),
            enumerate::<Hypertree>(n)? == enumerate_hypertrees_by_filter(n),
            "augmentation and filtering disagree",
        ));
        if n >= 3 {
            let poset = FinitePoset::new(enumerate::<Hypertree>(n)?)?;
            let from_poset = poset.char_poly();
            let from_series = chi(n, ChiMethod::ViaTau)?.to_laurent();
            checks.push(Check::from_bool(
                format!("hypertree_char_poly_{n}"),
                from_poset == from_series,
                format!("poset {}, series {}", from_poset.fmt_with("s"), from_series.fmt_with("s")),
            ));
        }
    }
    let c = cyc(max_n.max(1));
    for n in 1..=max_n {
        checks.push(Check::symfunc(
            format!("cyclic_orders_{n}"),
            &cyclic_order_character(n),
            &c.homogeneous(n).with_order(n),
        ));
    }
    Ok(checks)
}

fn characters(order: usize, max_n: usize) -> Result<Vec<Check>> {
    let mut checks = hal_checks(&hal(order)?, 6)?;
    checks.extend(hal_bar_checks(order)?);
    let w = wh_pp(order)?;
    for n in 1..=max_n.min(order) {
        checks.push(Check::symfunc(
            format!("wh_pp_lefschetz_{n}"),
            &w.homogeneous(n).with_order(n),
            &whitney_character::<PointedPartition>(n)?,
        ));
    }
    let dims_ok = (1..=order).all(|n| w.class_value(&Partition::rectangle(1, n)) == pointed_whitney_dimensions(n));
    checks.push(Check::from_bool("wh_pp_dimensions", dims_ok, "dimensions differ from C(n−1, i) n^i"));
    checks.push(ce_check(order)?);
    checks.push(generators_check(order)?);
    Ok(checks)
}

fn conjecture(max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=max_n {
        let r = conjecture_report(n)?;
        checks.push(Check::from_bool(
            format!("conjecture_dimensions_{n}"),
            r.dimension_check,
            "dimension specializations differ from τ_n(−t)",
        ));
        // a finding, not a requirement
        let finding = if r.equal { "equal" } else { "differ" };
        checks.push(Check::pass(format!("conjecture_characters_{n}_{finding}"), format!("equal={}", r.equal)));
    }
    Ok(checks)
}
