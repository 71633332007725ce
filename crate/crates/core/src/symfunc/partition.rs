use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::factorial;

/// Integer partition, parts stored in weakly decreasing order.
///
/// The derived ordering is lexicographic on that part sequence, which is the
/// order used for every serialized listing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(k, k, ..., k)` with `count` parts.
    pub fn rectangle(k: u32, count: usize) -> Self {
        Self(vec![k; count])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn smallest_part(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// `z_λ = Π_k k^{m_k} m_k!`, the centralizer order of a permutation of
    /// cycle type `λ`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let m = self.0[i..].iter().take_while(|&&p| p == k).count();
            z *= BigInt::from(k).pow(m as u32) * factorial(m);
            i += m;
        }
        z
    }

    /// Multiset union `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }

    /// Every part multiplied by `k` (`p_λ ↦ p_{kλ}`).
    pub fn scaled(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// Remove one part equal to `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.0.iter().rposition(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Number of fixed points of `σᵏ` for `σ` of cycle type `λ`:
    /// `Σ_{d | k} d·m_d(λ)`.
    pub fn fixed_points_of_power(&self, k: u32) -> usize {
        (1..=k)
            .filter(|d| k.is_multiple_of(*d))
            .map(|d| d as usize * self.multiplicity(d))
            .sum()
    }

    /// A permutation of `{0, ..., n-1}` with cycle type `λ`: consecutive
    /// blocks, each cycled forward.
    pub fn representative_permutation(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.size());
        let mut start = 0;
        for &k in &self.0 {
            let k = k as usize;
            for i in 0..k {
                perm.push(start + (i + 1) % k);
            }
            start += k;
        }
        perm
    }

    /// Cycle type of a permutation given as an image vector.
    pub fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    /// All partitions of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=max.min(remaining)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n as u32, n as u32, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let four: Vec<String> = Partition::all(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
    }

    #[test]
    fn z_lambda_sums_to_one_over_classes() {
        // Σ_λ n!/z_λ = n!
        for n in 1..=7 {
            let total: BigInt = Partition::all(n).iter().map(|l| factorial(n) / l.z()).sum();
            assert_eq!(total, factorial(n));
        }
        assert_eq!(Partition::new(vec![2, 2, 1]).z(), BigInt::from(8));
    }

    #[test]
    fn union_and_removal() {
        let a = Partition::new(vec![3, 1]);
        let b = Partition::new(vec![2, 1]);
        assert_eq!(a.union(&b), Partition::new(vec![3, 2, 1, 1]));
        assert_eq!(a.without_part(1), Some(Partition::new(vec![3])));
        assert_eq!(a.without_part(2), None);
        assert_eq!(b.scaled(3), Partition::new(vec![6, 3]));
    }

    #[test]
    fn fixed_points_and_representatives() {
        let l = Partition::new(vec![2, 1, 1]);
        assert_eq!(l.fixed_points_of_power(1), 2);
        assert_eq!(l.fixed_points_of_power(2), 4);
        assert_eq!(l.fixed_points_of_power(3), 2);
        for n in 1..=6 {
            for l in Partition::all(n) {
                assert_eq!(Partition::cycle_type(&l.representative_permutation()), l);
            }
        }
    }
}
