//! Symmetric functions in the power-sum basis with coefficients in `Q[t, t⁻¹]`.
//!
//! The variable `t` is formal throughout. Under plethysm it behaves as a
//! rank-one element (`p_k ∘ t = t^k`) when it sits in the inner argument, while
//! the coefficients of the outer argument are carried through unchanged.

mod identities;
mod operads;
mod partition;

pub use identities::verify_identities;
pub use operads::{assoc, comm, cyc, lie, operad, perm, prelie, Operad};
pub use partition::Partition;

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::algebra::{
    format_rational, parse_rational, LaurentPoly, MultiPoly, Rational, Truncated, TruncatedSeries,
};
use crate::error::{Error, Result};

/// Graded symmetric function truncated at degree `order`.
///
/// `graded[n]` maps partitions of `n` to their nonzero coefficient; degree 0
/// holds the scalar term under the empty partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    order: usize,
    graded: Vec<BTreeMap<Partition, LaurentPoly>>,
}

impl SymFunc {
    pub fn zero(order: usize) -> Self {
        Self { order, graded: vec![BTreeMap::new(); order + 1] }
    }

    pub fn constant(c: LaurentPoly, order: usize) -> Self {
        let mut f = Self::zero(order);
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LaurentPoly::one(), order)
    }

    /// `c · p_λ` (dropped if `|λ| > order`).
    pub fn term(lambda: Partition, c: LaurentPoly, order: usize) -> Self {
        let mut f = Self::zero(order);
        f.add_term(lambda, c);
        f
    }

    /// Power sum `p_k`.
    pub fn p(k: u32, order: usize) -> Self {
        Self::term(Partition::new(vec![k]), LaurentPoly::one(), order)
    }

    /// `Σ_{λ ⊢ n} value(λ) p_λ / z_λ`: the Frobenius characteristic of a class
    /// function on `S_n`.
    pub fn from_class_function(
        n: usize,
        order: usize,
        mut value: impl FnMut(&Partition) -> LaurentPoly,
    ) -> Self {
        let mut f = Self::zero(order);
        for lambda in Partition::all(n) {
            let v = value(&lambda);
            let z = Rational::from_integer(lambda.z());
            f.add_term(lambda, v.scale(&z.recip()));
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: LaurentPoly) {
        let n = lambda.size();
        if n > self.order || c.is_zero() {
            return;
        }
        let slot = self.graded[n].entry(lambda);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.graded.iter().all(BTreeMap::is_empty)
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.graded
            .get(lambda.size())
            .and_then(|d| d.get(lambda))
            .cloned()
            .unwrap_or_default()
    }

    /// Character value at the class `λ`: `z_λ · [p_λ]`.
    pub fn class_value(&self, lambda: &Partition) -> LaurentPoly {
        self.coeff(lambda).scale(&Rational::from_integer(lambda.z()))
    }

    /// Terms of degree `n`, in lexicographic partition order.
    pub fn degree(&self, n: usize) -> &BTreeMap<Partition, LaurentPoly> {
        &self.graded[n]
    }

    /// All terms, by degree then partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.graded.iter().flat_map(|d| d.iter())
    }

    /// The homogeneous component of degree `n`, same truncation.
    pub fn homogeneous(&self, n: usize) -> Self {
        let mut f = Self::zero(self.order);
        if n <= self.order {
            f.graded[n] = self.graded[n].clone();
        }
        f
    }

    /// Lowest degree with a nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.graded.iter().position(|d| !d.is_empty())
    }

    pub fn scalar_term(&self) -> LaurentPoly {
        self.coeff(&Partition::empty())
    }

    fn map_terms(&self, order: usize, mut f: impl FnMut(&Partition, &LaurentPoly) -> Option<(Partition, LaurentPoly)>) -> Self {
        let mut out = Self::zero(order);
        for (lambda, c) in self.terms() {
            if let Some((mu, d)) = f(lambda, c) {
                out.add_term(mu, d);
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_terms(self.order, |l, a| Some((l.clone(), a * c)))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&LaurentPoly::constant(c.clone()))
    }

    /// Coefficient-wise map of the `t`-polynomials.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        self.map_terms(self.order, |l, a| Some((l.clone(), f(a))))
    }

    /// Substitute a value for `t`.
    pub fn eval_t(&self, at: &Rational) -> Self {
        self.map_coeffs(|a| LaurentPoly::constant(a.eval(at)))
    }

    pub fn eval_t_one(&self) -> Self {
        self.eval_t(&Rational::one())
    }

    /// Multiplication by `p_1`, keeping the truncation order.
    pub fn mul_p1(&self) -> Self {
        self.map_terms(self.order, |l, a| Some((l.union(&Partition::new(vec![1])), a.clone())))
    }

    /// `∂/∂p_1`. The result is exact up to `order - 1`.
    pub fn d_p1(&self) -> Self {
        self.map_terms(self.order.saturating_sub(1), |l, a| {
            let m = l.multiplicity(1);
            (m > 0).then(|| {
                (
                    l.without_part(1).expect("part 1 present"),
                    a.scale(&Rational::from_integer(m.into())),
                )
            })
        })
    }

    /// `p_1 ∂_{p_1}`, which keeps the order.
    pub fn pointing(&self) -> Self {
        self.map_terms(self.order, |l, a| {
            let m = l.multiplicity(1);
            (m > 0).then(|| (l.clone(), a.scale(&Rational::from_integer(m.into()))))
        })
    }

    /// `Σ_t f = -(1/t) f(-t p_1, -t² p_2, ...)`: the term `c p_λ` becomes
    /// `(-1)^{ℓ(λ)+1} t^{|λ|-1} c p_λ`.
    pub fn suspension(&self) -> Self {
        self.map_terms(self.order, |l, a| {
            let sign = if l.len() % 2 == 0 { -1 } else { 1 };
            let shifted = a.shift(l.size() as i32 - 1);
            Some((l.clone(), if sign < 0 { -&shifted } else { shifted }))
        })
    }

    /// `Σ = Σ_t` evaluated at `t = 1`.
    pub fn suspension_at_one(&self) -> Self {
        self.suspension().eval_t_one()
    }

    /// `(1/t) f(t p_1, t² p_2, ...)`: the term `c p_λ` becomes `t^{|λ|-1} c p_λ`.
    /// This is the sign-free rank weighting (one `t` per block, minus one).
    pub fn rank_weight(&self) -> Self {
        self.map_terms(self.order, |l, a| Some((l.clone(), a.shift(l.size() as i32 - 1))))
    }

    /// Adams operation `ψ^k`: `p_i ↦ p_{ki}`, `t ↦ t^k`, truncated at `order`.
    pub fn adams(&self, k: u32, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (lambda, c) in self.terms() {
            if lambda.size() * k as usize <= order {
                out.add_term(lambda.scaled(k), c.adams(k));
            }
        }
        out
    }

    /// Plethysm `f ∘ g`. `g` must have no scalar term. The result is exact up
    /// to `min(f.order, g.order)`.
    pub fn plethysm(&self, g: &SymFunc) -> Result<SymFunc> {
        if !g.scalar_term().is_zero() {
            return Err(Error::ConstantTerm {
                op: "plethysm",
                expected: "0".into(),
                found: g.scalar_term().to_string(),
            });
        }
        let order = self.order.min(g.order);
        let Some(val) = g.with_order(order).valuation() else {
            // g = 0: only the scalar term of f survives
            return Ok(SymFunc::constant(self.scalar_term(), order));
        };
        let adams: Vec<SymFunc> = (0..=order as u32)
            .map(|k| if k == 0 { SymFunc::zero(order) } else { g.adams(k, order) })
            .collect();
        let mut memo: HashMap<Partition, SymFunc> = HashMap::new();
        memo.insert(Partition::empty(), SymFunc::one(order));
        let mut out = SymFunc::zero(order);
        for (lambda, c) in self.terms() {
            if lambda.size() * val > order {
                continue;
            }
            let value = power_plethysm(lambda, &adams, &mut memo);
            out = &out + &value.scale(c);
        }
        Ok(out)
    }

    /// `1/f` for `f` with scalar term exactly 1 (geometric series).
    pub fn invert_unit(&self) -> Result<SymFunc> {
        if !self.scalar_term().is_one() {
            return Err(Error::ConstantTerm {
                op: "invert_unit",
                expected: "1".into(),
                found: self.scalar_term().to_string(),
            });
        }
        let h = self - &SymFunc::one(self.order);
        let minus_h = -&h;
        let mut out = SymFunc::one(self.order);
        let mut power = SymFunc::one(self.order);
        for _ in 0..self.order {
            power = &power * &minus_h;
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }

    /// `exp(f)` for `f` without scalar term.
    pub fn exp(&self) -> Result<SymFunc> {
        if !self.scalar_term().is_zero() {
            return Err(Error::ConstantTerm {
                op: "symfunc exp",
                expected: "0".into(),
                found: self.scalar_term().to_string(),
            });
        }
        let mut out = SymFunc::one(self.order);
        let mut power = SymFunc::one(self.order);
        for k in 1..=self.order {
            power = (&power * self).scale_rational(&Rational::new(BigInt::one(), k.into()));
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }

    /// Exponential specialization `p_1 ↦ x`, `p_k ↦ 0` (k ≥ 2): the EGF of
    /// dimensions, with `t` kept in the coefficients.
    pub fn exp_specialize(&self) -> TruncatedSeries {
        let coeffs = (0..=self.order)
            .map(|n| {
                let c = self.coeff(&Partition::rectangle(1, n));
                MultiPoly::from_laurent_t(&c.scale(&Rational::from_integer(crate::algebra::factorial(n))))
            })
            .collect();
        TruncatedSeries::from_coeffs(self.order, coeffs)
    }

    /// JSON for one homogeneous degree:
    /// `{"degree": n, "terms": [{"partition": [...], "coef": {"t^e": "p/q"}}]}`.
    pub fn degree_to_json(&self, n: usize) -> serde_json::Value {
        let terms: Vec<_> = self
            .graded
            .get(n)
            .into_iter()
            .flatten()
            .map(|(lambda, c)| {
                let coef: serde_json::Map<String, serde_json::Value> = c
                    .terms()
                    .map(|(e, r)| (format!("t^{e}"), json!(format_rational(r))))
                    .collect();
                json!({ "partition": lambda.parts(), "coef": coef })
            })
            .collect();
        json!({ "degree": n, "terms": terms })
    }

    /// All degrees `0..=order`, as a list of [`Self::degree_to_json`] objects.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array((0..=self.order).map(|n| self.degree_to_json(n)).collect())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SymFunc> {
        let degrees = value
            .as_array()
            .ok_or_else(|| Error::Parse("symfunc: expected a list of degrees".into()))?;
        let order = degrees.len().saturating_sub(1);
        let mut out = SymFunc::zero(order);
        for d in degrees {
            let n = d["degree"].as_u64().ok_or_else(|| Error::Parse("symfunc: missing degree".into()))?;
            for term in d["terms"].as_array().into_iter().flatten() {
                let parts: Vec<u32> = serde_json::from_value(term["partition"].clone())
                    .map_err(|e| Error::Parse(e.to_string()))?;
                let lambda = Partition::new(parts);
                if lambda.size() as u64 != n {
                    return Err(Error::Parse(format!("symfunc: partition {lambda} in degree {n}")));
                }
                let mut c = LaurentPoly::zero();
                for (key, r) in term["coef"].as_object().into_iter().flatten() {
                    let e: i32 = key
                        .strip_prefix("t^")
                        .and_then(|e| e.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("symfunc: bad exponent key {key:?}")))?;
                    let r = r.as_str().ok_or_else(|| Error::Parse("symfunc: coefficient must be a string".into()))?;
                    c += LaurentPoly::monomial(parse_rational(r)?, e);
                }
                out.add_term(lambda, c);
            }
        }
        Ok(out)
    }

    /// Human-readable form, e.g. `1/2*p1^2 + 1/2*p2 + (-t)*p1^2`.
    pub fn pretty(&self) -> String {
        let mut parts = Vec::new();
        for (lambda, c) in self.terms() {
            let mono = if lambda.is_empty() {
                String::new()
            } else {
                let mut factors = Vec::new();
                let mut k = 0;
                while k < lambda.len() {
                    let part = lambda.parts()[k];
                    let m = lambda.multiplicity(part);
                    factors.push(if m == 1 { format!("p{part}") } else { format!("p{part}^{m}") });
                    k += m;
                }
                factors.join("*")
            };
            let coef = if c.terms().count() == 1 && c.low_exp() == Some(0) {
                c.to_string()
            } else {
                format!("({c})")
            };
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => coef,
                (false, true) => mono,
                (false, false) => format!("{coef}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `p_λ ∘ g = Π_parts ψ^k(g)`, built by peeling off the smallest part and
/// memoizing every prefix.
fn power_plethysm(
    lambda: &Partition,
    adams: &[SymFunc],
    memo: &mut HashMap<Partition, SymFunc>,
) -> SymFunc {
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let k = lambda.smallest_part().expect("empty partition is memoized");
    let rest = lambda.without_part(k).expect("smallest part present");
    let head = power_plethysm(&rest, adams, memo);
    let value = &head * &adams[k as usize];
    memo.insert(lambda.clone(), value.clone());
    value
}

impl Truncated for SymFunc {
    fn order(&self) -> usize {
        self.order
    }

    fn with_order(&self, order: usize) -> Self {
        let mut graded = self.graded.clone();
        graded.resize(order + 1, BTreeMap::new());
        Self { order, graded }
    }

    fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&d| self.graded[d] != other.graded[d])
    }
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let order = self.order.min(rhs.order);
        let mut out = self.with_order(order);
        for (lambda, c) in rhs.terms() {
            out.add_term(lambda.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &-rhs
    }
}

/// Product truncated at the smaller of the two orders.
impl<'a> Mul<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let order = self.order.min(rhs.order);
        let mut out = SymFunc::zero(order);
        for i in 0..=order {
            if self.graded[i].is_empty() {
                continue;
            }
            for j in 0..=order - i {
                for (a, ca) in &rhs.graded[j] {
                    for (b, cb) in &self.graded[i] {
                        out.add_term(b.union(a), cb * ca);
                    }
                }
            }
        }
        out
    }
}

impl Zero for SymFunc {
    fn zero() -> Self {
        SymFunc::zero(0)
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests;
