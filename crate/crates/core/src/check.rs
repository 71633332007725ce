//! Named pass/fail results shared by every verification routine.

use std::fmt;

use crate::algebra::Truncated;
use crate::symfunc::SymFunc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Lowest degree (or size) at which the check failed.
    pub degree: Option<usize>,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, degree: None, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, degree: Option<usize>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, degree, detail: detail.into() }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, None, detail)
        }
    }

    /// Compare two symmetric functions up to the smaller of their orders.
    pub fn symfunc(name: impl Into<String>, lhs: &SymFunc, rhs: &SymFunc) -> Self {
        let order = lhs.order().min(rhs.order());
        let (l, r) = (lhs.with_order(order), rhs.with_order(order));
        match l.first_difference(&r) {
            None => Self::pass(name, format!("equal to degree {order}")),
            Some(d) => {
                let diff = &l.homogeneous(d) - &r.homogeneous(d);
                Self::fail(name, Some(d), format!("difference {}", diff.pretty()))
            }
        }
    }

    /// Fold a list of results into one, failing at the first failed item.
    pub fn all(name: impl Into<String>, parts: &[Check]) -> Self {
        match parts.iter().find(|c| !c.passed) {
            None => Self::pass(name, format!("{} sub-checks", parts.len())),
            Some(c) => Self::fail(name, c.degree, format!("{}: {}", c.name, c.detail)),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "{}\tPASS", self.name)
        } else {
            write!(f, "{}\tFAIL", self.name)?;
            if let Some(d) = self.degree {
                write!(f, "\tdegree {d}")?;
            }
            write!(f, "\t{}", self.detail)
        }
    }
}
