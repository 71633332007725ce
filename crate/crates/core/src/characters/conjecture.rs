//! Whitney character of the hypertree poset, by enumeration, against the
//! degree-`n` part of the signed hypertree system.

use num_traits::One;
use serde_json::json;

use super::hal;
use crate::algebra::{LaurentPoly, Rational, Truncated};
use crate::error::{Error, Result};
use crate::genseries::tau;
use crate::posetlab::{whitney_character, Hypertree};
use crate::symfunc::{Partition, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub equal: bool,
    /// Both sides have dimension `τ_n(−t)`.
    pub dimension_check: bool,
    pub whitney: SymFunc,
    pub hal: SymFunc,
    pub difference: SymFunc,
}

impl ConjectureReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "equal": self.equal,
            "dimension_check": self.dimension_check,
            "difference": self.difference.degree_to_json(self.n),
        })
    }
}

/// Compares `n ≤ 6` (hypertree enumeration bound). The Whitney side is the
/// Lefschetz character of the fixed subposets, which equals the Whitney
/// homology character when the poset is Cohen–Macaulay.
pub fn conjecture_report(n: usize) -> Result<ConjectureReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, min: 2, max: 6 });
    }
    let whitney = whitney_character::<Hypertree>(n)?;
    let hal = hal(n)?.hal.homogeneous(n).with_order(n);
    let difference = &whitney - &hal;
    let expected = tau(n)?.compose_monomial(&-Rational::one(), 1);
    let identity = Partition::rectangle(1, n);
    let dimension = |f: &SymFunc| -> LaurentPoly { f.class_value(&identity) };
    let dimension_check = dimension(&whitney) == expected && dimension(&hal) == expected;
    Ok(ConjectureReport { n, equal: difference.is_zero(), dimension_check, whitney, hal, difference })
}
