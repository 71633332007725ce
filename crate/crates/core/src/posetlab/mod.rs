//! Explicit structures on `{1..n}`: hypertrees, cyclic hypertrees, pointed
//! partitions and rooted forests, with finite-poset machinery on top.
//!
//! Vertices are 0-based internally and printed 1-based. Vertex sets are `u32`
//! bitmasks.

mod cache;
mod character;
mod cyclic;
mod forest;
mod hypertree;
mod pointed;
mod poset;

pub use cache::{dump, load, parse_header, CacheHeader};
pub use character::{
    cyclic_order_character, fixed_subposet, perm_character, whitney_character, whitney_character_of,
};
pub use cyclic::CyclicHypertree;
pub use forest::{boolean_interval_check, phi, verify_phi, RootedForest};
pub use hypertree::{enumerate_hypertrees_by_filter, Hypertree};
pub use pointed::PointedPartition;
pub use poset::FinitePoset;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A combinatorial structure on the vertex set `{0..n}` with a symmetric-group
/// action and a rank.
pub trait Structure: Clone + Eq + Hash + Ord + fmt::Display + Send + Sync + Sized {
    const FAMILY: Family;

    fn n(&self) -> usize;

    fn rank(&self) -> usize;

    /// Image under the vertex permutation `v ↦ perm[v]`, in canonical form.
    fn relabel(&self, perm: &[usize]) -> Self;

    /// Every structure on `n` vertices, canonical and sorted. Callers go
    /// through [`enumerate`], which applies the bounds.
    fn enumerate_unchecked(n: usize) -> Vec<Self>;

    /// Parse the cache-file line format, e.g. `3|12,13`.
    fn parse_line(line: &str) -> Result<Self>;
}

/// Structures carrying a partial order.
pub trait Ordered: Structure {
    /// `self ≤ other`. Both must live on the same vertex set.
    fn leq(&self, other: &Self) -> Result<bool>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Hypertree,
    CyclicHypertree,
    PointedPartition,
    Forest,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::Hypertree, Family::CyclicHypertree, Family::PointedPartition, Family::Forest];

    pub fn min_n(self) -> usize {
        match self {
            Family::Hypertree | Family::CyclicHypertree => 2,
            Family::PointedPartition | Family::Forest => 1,
        }
    }

    /// Hard safety limit on `n` for explicit enumeration.
    pub fn max_n(self) -> usize {
        match self {
            Family::Hypertree => 7,
            Family::CyclicHypertree => 6,
            Family::PointedPartition => 7,
            Family::Forest => 6,
        }
    }

    pub fn check_n(self, n: usize) -> Result<()> {
        if n < self.min_n() {
            return Err(Error::OutOfRange { what: "n", value: n, min: self.min_n(), max: self.max_n() });
        }
        if n > self.max_n() {
            return Err(Error::BoundExceeded { what: "n", value: n, limit: self.max_n() });
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Hypertree => "hypertree",
            Family::CyclicHypertree => "cyclic_hypertree",
            Family::PointedPartition => "pointed_partition",
            Family::Forest => "forest",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// All structures of a family on `n` vertices, within the safety bounds.
pub fn enumerate<S: Structure>(n: usize) -> Result<Vec<S>> {
    S::FAMILY.check_n(n)?;
    Ok(S::enumerate_unchecked(n))
}

/// Enumeration rendered as cache lines, for callers that only know the family
/// at run time.
pub fn enumerate_lines(family: Family, n: usize) -> Result<Vec<String>> {
    fn lines<S: Structure>(n: usize) -> Result<Vec<String>> {
        Ok(enumerate::<S>(n)?.iter().map(|s| s.to_string()).collect())
    }
    match family {
        Family::Hypertree => lines::<Hypertree>(n),
        Family::CyclicHypertree => lines::<CyclicHypertree>(n),
        Family::PointedPartition => lines::<PointedPartition>(n),
        Family::Forest => lines::<RootedForest>(n),
    }
}

/// Image of a vertex set under `perm`.
pub(crate) fn map_mask(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out |= 1 << perm[v];
        m &= m - 1;
    }
    out
}

pub(crate) fn vertices(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |v| mask >> v & 1 == 1)
}

/// `1-based digits`, e.g. `{0,1,3}` ↦ `"124"`.
pub(crate) fn mask_digits(mask: u32) -> String {
    vertices(mask).map(|v| char::from_digit(v as u32 + 1, 10).expect("n ≤ 9")).collect()
}

pub(crate) fn parse_vertex(c: char, n: usize) -> Result<usize> {
    let d = c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad vertex {c:?}")))? as usize;
    if d == 0 || d > n {
        return Err(Error::Parse(format!("vertex {d} outside 1..{n}")));
    }
    Ok(d - 1)
}

pub(crate) fn parse_digits(s: &str, n: usize) -> Result<u32> {
    let mut mask = 0;
    for c in s.chars() {
        let v = parse_vertex(c, n)?;
        if mask >> v & 1 == 1 {
            return Err(Error::Parse(format!("repeated vertex in {s:?}")));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

/// Split `n|rest` and parse `n`.
pub(crate) fn split_n(line: &str) -> Result<(usize, &str)> {
    let (n, rest) = line
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("missing '|' in {line:?}")))?;
    let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad vertex count in {line:?}")))?;
    if n == 0 || n > 9 {
        return Err(Error::Parse(format!("vertex count {n} outside 1..9")));
    }
    Ok((n, rest))
}

/// The permutations `(0 1)` and `(0 1 ... n-1)`, which generate `S_n`.
pub(crate) fn generators(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        out.push(swap);
        out.push((0..n).map(|i| (i + 1) % n).collect());
    }
    out
}

#[cfg(test)]
mod tests;
