use std::fmt;

use super::{map_mask, mask_digits, parse_digits, parse_vertex, split_n, vertices, Family, Ordered, Structure};
use crate::error::{Error, Result};

/// Set partition of `{0..n}` with one marked element per block. Blocks are
/// kept sorted by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedPartition {
    n: usize,
    blocks: Vec<(u32, usize)>,
}

impl PointedPartition {
    pub fn new(n: usize, mut blocks: Vec<(u32, usize)>) -> Result<Self> {
        let full = (1u32 << n) - 1;
        let mut seen = 0u32;
        for &(b, p) in &blocks {
            if b == 0 || b & seen != 0 || b & !full != 0 || b >> p & 1 == 0 {
                return Err(Error::InvalidStructure("blocks must be disjoint, nonempty and contain their point".into()));
            }
            seen |= b;
        }
        if seen != full {
            return Err(Error::InvalidStructure("blocks must cover {1..n}".into()));
        }
        blocks.sort_by_key(|&(b, _)| b.trailing_zeros());
        Ok(Self { n, blocks })
    }

    /// All singletons: the minimum.
    pub fn bottom(n: usize) -> Self {
        Self { n, blocks: (0..n).map(|v| (1 << v, v)).collect() }
    }

    pub fn blocks(&self) -> &[(u32, usize)] {
        &self.blocks
    }

    fn pointed_mask(&self) -> u32 {
        self.blocks.iter().fold(0, |a, &(_, p)| a | 1 << p)
    }
}

/// Set partitions of `{0..n}` as block masks (restricted growth strings).
pub(crate) fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn rec(v: usize, n: usize, blocks: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i] |= 1 << v;
            rec(v + 1, n, blocks, out);
            blocks[i] &= !(1 << v);
        }
        blocks.push(1 << v);
        rec(v + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for PointedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|&(b, p)| format!("{}:{}", mask_digits(b), p + 1))
            .collect();
        write!(f, "{}|{}", self.n, blocks.join(","))
    }
}

impl Structure for PointedPartition {
    const FAMILY: Family = Family::PointedPartition;

    fn n(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    fn relabel(&self, perm: &[usize]) -> Self {
        let mut blocks: Vec<(u32, usize)> =
            self.blocks.iter().map(|&(b, p)| (map_mask(b, perm), perm[p])).collect();
        blocks.sort_by_key(|&(b, _)| b.trailing_zeros());
        Self { n: self.n, blocks }
    }

    fn enumerate_unchecked(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for partition in set_partitions(n) {
            let mut choices: Vec<Vec<(u32, usize)>> = vec![Vec::new()];
            for &b in &partition {
                choices = choices
                    .into_iter()
                    .flat_map(|prefix| {
                        vertices(b).map(move |p| {
                            let mut c = prefix.clone();
                            c.push((b, p));
                            c
                        })
                    })
                    .collect();
            }
            out.extend(choices.into_iter().map(|blocks| Self::new(n, blocks).expect("valid by construction")));
        }
        out.sort();
        out
    }

    fn parse_line(line: &str) -> Result<Self> {
        let (n, rest) = split_n(line)?;
        let blocks = rest
            .split(',')
            .map(|b| {
                let (set, point) = b
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("block {b:?} lacks ':point'")))?;
                let mut chars = point.trim().chars();
                let p = match (chars.next(), chars.next()) {
                    (Some(c), None) => parse_vertex(c, n)?,
                    _ => return Err(Error::Parse(format!("bad point in {b:?}"))),
                };
                Ok((parse_digits(set.trim(), n)?, p))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, blocks)
    }
}

impl Ordered for PointedPartition {
    /// `self ≤ other` iff `self` refines `other` and every point of `other` is
    /// a point of `self`.
    fn leq(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::VertexMismatch { left: self.n, right: other.n });
        }
        let refines = self
            .blocks
            .iter()
            .all(|&(b, _)| other.blocks.iter().any(|&(c, _)| b & !c == 0));
        Ok(refines && other.pointed_mask() & !self.pointed_mask() == 0)
    }
}
