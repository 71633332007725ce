//! Characters of the classical operads and actions used throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{Partition, SymFunc};
use crate::algebra::{solve_fixpoint, LaurentPoly, Rational, Truncated};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operad {
    Comm,
    Assoc,
    Lie,
    Cyc,
    Perm,
    PreLie,
}

impl Operad {
    pub const ALL: [Operad; 6] =
        [Operad::Comm, Operad::Assoc, Operad::Lie, Operad::Cyc, Operad::Perm, Operad::PreLie];
}

impl fmt::Display for Operad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operad::Comm => "Comm",
            Operad::Assoc => "Assoc",
            Operad::Lie => "Lie",
            Operad::Cyc => "Cyc",
            Operad::Perm => "Perm",
            Operad::PreLie => "PreLie",
        })
    }
}

impl FromStr for Operad {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Operad::ALL
            .into_iter()
            .find(|o| o.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown operad {s:?}")))
    }
}

pub fn operad(which: Operad, order: usize) -> Result<SymFunc> {
    if order == 0 {
        return Err(Error::OutOfRange { what: "order", value: 0, min: 1, max: usize::MAX });
    }
    Ok(match which {
        Operad::Comm => comm(order),
        Operad::Assoc => assoc(order),
        Operad::Lie => lie(order),
        Operad::Cyc => cyc(order),
        Operad::Perm => perm(order),
        Operad::PreLie => prelie(order)?,
    })
}

/// `Σ_{n≥1} h_n = exp(Σ p_k/k) − 1`.
pub fn comm(order: usize) -> SymFunc {
    let mut f = SymFunc::zero(order);
    for n in 1..=order {
        f = &f + &SymFunc::from_class_function(n, order, |_| LaurentPoly::one());
    }
    f
}

/// `p_1/(1 − p_1)`.
pub fn assoc(order: usize) -> SymFunc {
    let mut f = SymFunc::zero(order);
    for n in 1..=order {
        f.add_term(Partition::rectangle(1, n), LaurentPoly::one());
    }
    f
}

/// `Σ_n (1/n) Σ_{d|n} w(d) p_d^{n/d}`.
fn necklace(order: usize, weight: impl Fn(u64) -> i64) -> SymFunc {
    let mut f = SymFunc::zero(order);
    for n in 1..=order as u64 {
        for d in (1..=n).filter(|d| n % d == 0) {
            let w = weight(d);
            if w != 0 {
                let c = Rational::new(BigInt::from(w), BigInt::from(n));
                f.add_term(Partition::rectangle(d as u32, (n / d) as usize), LaurentPoly::constant(c));
            }
        }
    }
    f
}

/// Free Lie algebra: `Lie_n = (1/n) Σ_{d|n} μ(d) p_d^{n/d}`.
pub fn lie(order: usize) -> SymFunc {
    necklace(order, moebius)
}

/// Cyclic orders: `Cyc_n = (1/n) Σ_{d|n} φ(d) p_d^{n/d}`.
pub fn cyc(order: usize) -> SymFunc {
    necklace(order, totient)
}

/// Pointed sets: `p_1 (1 + Comm)`.
pub fn perm(order: usize) -> SymFunc {
    let one = SymFunc::one(order);
    (&one + &comm(order)).mul_p1()
}

/// Rooted trees: the fixed point of `T = p_1 (1 + Comm ∘ T)`.
pub fn prelie(order: usize) -> Result<SymFunc> {
    solve_fixpoint(SymFunc::zero(order), |t| {
        let order = t.order();
        let inner = comm(order).plethysm(t)?;
        Ok((&SymFunc::one(order) + &inner).mul_p1())
    })
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn totient(n: u64) -> i64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as i64
}
