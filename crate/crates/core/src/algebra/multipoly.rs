use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Exponent vector `t^t · s^s · u_2^u[0] · u_3^u[1] · ...`.
///
/// `u` never has trailing zeros, so derived ordering is lexicographic on the
/// zero-padded vector `(t, s, u_2, u_3, ...)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub t: i32,
    pub s: u32,
    pub u: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Exponent of `u_size` (`size >= 2`).
    pub fn u_exp(&self, size: usize) -> u32 {
        size.checked_sub(2)
            .and_then(|i| self.u.get(i).copied())
            .unwrap_or(0)
    }

    pub fn with_u(mut self, size: usize, exp: u32) -> Self {
        assert!(size >= 2, "edge markers start at u_2");
        let i = size - 2;
        if self.u.len() <= i {
            self.u.resize(i + 1, 0);
        }
        self.u[i] = exp;
        self.trim();
        self
    }

    fn trim(&mut self) {
        while self.u.last() == Some(&0) {
            self.u.pop();
        }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.u.len().max(other.u.len());
        let u = (0..len)
            .map(|i| self.u.get(i).unwrap_or(&0) + other.u.get(i).unwrap_or(&0))
            .collect();
        Monomial {
            t: self.t + other.t,
            s: self.s + other.s,
            u,
        }
    }

    fn fmt_factors(&self) -> String {
        let mut parts = Vec::new();
        let mut push = |name: String, e: i64| match e {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{e}")),
        };
        push("t".into(), self.t as i64);
        push("s".into(), self.s as i64);
        for (i, &e) in self.u.iter().enumerate() {
            push(format!("u{}", i + 2), e as i64);
        }
        parts.join("*")
    }
}

/// Sparse polynomial in `t` (negative exponents allowed), `s` and the edge
/// markers `u_i`, with exact rational coefficients. No zero coefficient is
/// ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn t_pow(e: i32) -> Self {
        Self::term(Monomial { t: e, ..Monomial::one() }, Rational::one())
    }

    pub fn s() -> Self {
        Self::term(Monomial { s: 1, ..Monomial::one() }, Rational::one())
    }

    /// Edge-size marker `u_size`.
    pub fn u(size: usize) -> Self {
        Self::term(Monomial::one().with_u(size, 1), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Replace every `u_i` by 1.
    pub fn eval_u_one(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial { t: m.t, s: m.s, u: Vec::new() }, c.clone());
        }
        out
    }

    /// Substitute a rational value for `t`.
    pub fn eval_t(&self, at: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let factor = if m.t >= 0 {
                num_traits::pow(at.clone(), m.t as usize)
            } else {
                num_traits::pow(at.recip(), (-m.t) as usize)
            };
            out.add_term(Monomial { t: 0, ..m.clone() }, c * factor);
        }
        out
    }

    /// Substitute `t ↦ c·t^k`.
    pub fn compose_t(&self, c: &Rational, k: i32) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            let factor = if m.t >= 0 {
                num_traits::pow(c.clone(), m.t as usize)
            } else {
                num_traits::pow(c.recip(), (-m.t) as usize)
            };
            out.add_term(Monomial { t: m.t * k, ..m.clone() }, a * factor);
        }
        out
    }

    /// View as a Laurent polynomial in `t`; fails if `s` or any `u_i` occurs.
    pub fn to_laurent_t(&self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            if m.s != 0 || !m.u.is_empty() {
                return Err(Error::InvalidStructure(format!(
                    "{self} is not a polynomial in t alone"
                )));
            }
            out += LaurentPoly::monomial(c.clone(), m.t);
        }
        Ok(out)
    }

    pub fn from_laurent_t(p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(Monomial { t: e, ..Monomial::one() }, c.clone());
        }
        out
    }

    /// Constant term (coefficient of the empty monomial).
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(
            self.terms
                .iter()
                .map(|(m, c)| JsonTerm { exp: m.clone(), coef: format_rational(c) })
                .collect::<Vec<_>>(),
        )
        .expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: Vec<JsonTerm> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero();
        for JsonTerm { mut exp, coef } in raw {
            exp.trim();
            out.add_term(exp, parse_rational(&coef)?);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: Monomial,
    coef: String,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors = m.fmt_factors();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors)?;
            } else {
                write!(f, "{abs}*{factors}")?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.mul(mb), a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn arithmetic_cancels_to_zero() {
        let a = &MultiPoly::u(2) + &MultiPoly::t();
        let b = &a - &a;
        assert!(b.is_zero());
        let sq = &a * &a;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&Monomial { t: 1, s: 0, u: vec![1] }), int(2));
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let p = &(&MultiPoly::u(3) + &MultiPoly::u(2)) + &(&MultiPoly::t() + &MultiPoly::one());
        let order: Vec<String> = p.terms().map(|(m, _)| m.fmt_factors()).collect();
        assert_eq!(order, ["", "u3", "u2", "t"]);
    }

    #[test]
    fn substitutions() {
        // 3 t u2^2 + u3 with u = 1, then t = -1/2
        let p = &MultiPoly::term(Monomial { t: 1, s: 0, u: vec![2] }, int(3)) + &MultiPoly::u(3);
        let q = p.eval_u_one();
        assert_eq!(q.to_laurent_t().unwrap().to_string(), "3*t + 1");
        assert_eq!(q.eval_t(&rat(-1, 2)).constant_term(), rat(-1, 2));
        assert!(p.to_laurent_t().is_err());
        let inv = MultiPoly::t().compose_t(&int(-1), -1);
        assert_eq!(inv, MultiPoly::t_pow(-1).scale(&int(-1)));
    }

    #[test]
    fn json_round_trip_and_schema() {
        let p = &MultiPoly::term(Monomial { t: -1, s: 2, u: vec![0, 1] }, rat(-3, 4))
            + &MultiPoly::one();
        let json = p.to_json();
        assert_eq!(
            json.to_string(),
            r#"[{"exp":{"t":-1,"s":2,"u":[0,1]},"coef":"-3/4"},{"exp":{"t":0,"s":0,"u":[]},"coef":"1"}]"#
        );
        assert_eq!(MultiPoly::from_json(&json).unwrap(), p);
    }

    #[test]
    fn display() {
        let p = &MultiPoly::term(Monomial { t: 1, s: 0, u: vec![2] }, int(3)) + &MultiPoly::u(3);
        assert_eq!(p.to_string(), "u3 + 3*t*u2^2");
    }
}
