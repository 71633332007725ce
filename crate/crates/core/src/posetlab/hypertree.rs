use std::cmp::Ordering;
use std::fmt;

use super::{map_mask, mask_digits, parse_digits, split_n, vertices, Family, Ordered, Structure};
use crate::error::{Error, Result};

/// Hypertree on `{0..n}`: edges of size ≥ 2, connected, with
/// `Σ (|a| − 1) = n − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypertree {
    n: usize,
    edges: Vec<u32>,
}

/// Edge order: smallest vertex, then size, then the sorted vertex lists.
pub(crate) fn edge_cmp(a: &u32, b: &u32) -> Ordering {
    a.trailing_zeros()
        .cmp(&b.trailing_zeros())
        .then(a.count_ones().cmp(&b.count_ones()))
        .then_with(|| vertices(*a).cmp(vertices(*b)))
}

impl Hypertree {
    /// Validate and canonicalize.
    pub fn new(n: usize, mut edges: Vec<u32>) -> Result<Self> {
        let full = full_mask(n);
        if edges.iter().any(|&e| e.count_ones() < 2 || e & !full != 0) {
            return Err(Error::InvalidStructure("edges must have size ≥ 2 inside {1..n}".into()));
        }
        edges.sort_by(edge_cmp);
        edges.dedup();
        let weight: usize = edges.iter().map(|e| e.count_ones() as usize - 1).sum();
        if n < 2 || weight != n - 1 || connected_span(&edges) != full {
            return Err(Error::InvalidStructure(format!("not a hypertree on {n} vertices")));
        }
        Ok(Self { n, edges })
    }

    fn from_canonical_parts(n: usize, mut edges: Vec<u32>) -> Self {
        edges.sort_by(edge_cmp);
        Self { n, edges }
    }

    pub fn edges(&self) -> &[u32] {
        &self.edges
    }

    /// The single-edge hypertree, the minimum of the poset.
    pub fn bottom(n: usize) -> Self {
        Self { n, edges: vec![full_mask(n)] }
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&e| e >> v & 1 == 1).count()
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Vertices reachable from the lowest vertex of the first edge.
fn connected_span(edges: &[u32]) -> u32 {
    let Some(&first) = edges.first() else { return 0 };
    let mut reach = first;
    loop {
        let next = edges.iter().filter(|&&e| e & reach != 0).fold(reach, |a, &e| a | e);
        if next == reach {
            return reach;
        }
        reach = next;
    }
}

impl Ord for Hypertree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let mut a = self.edges.iter();
            let mut b = other.edges.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some(x), Some(y)) => match edge_cmp(x, y) {
                        Ordering::Equal => continue,
                        o => return o,
                    },
                }
            }
        })
    }
}

impl PartialOrd for Hypertree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Hypertree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|&e| mask_digits(e)).collect();
        write!(f, "{}|{}", self.n, edges.join(","))
    }
}

/// Edges `e` of `edges` whose private vertices could be removed: `e` meets the
/// other edges in exactly one vertex and its private part avoids vertex 0.
fn removable(edges: &[u32], i: usize) -> bool {
    let others = edges
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .fold(0u32, |a, (_, &e)| a | e);
    let e = edges[i];
    (e & others).count_ones() == 1 && (e & !others) & 1 == 0
}

/// Canonical augmentation. States are hypertrees on vertex sets containing
/// vertex 0; a child adds one edge meeting the current set in one vertex and
/// is accepted only if that edge is the largest removable edge (by bitmask)
/// of the child, so each hypertree has exactly one generation path.
fn grow(n: usize, edges: &mut Vec<u32>, span: u32, out: &mut Vec<Hypertree>) {
    let full = full_mask(n);
    if span == full {
        out.push(Hypertree::from_canonical_parts(n, edges.clone()));
        return;
    }
    let outside = full & !span;
    for v in vertices(span) {
        // nonempty subsets of the outside vertices
        let mut p = outside;
        while p != 0 {
            let e = p | 1 << v;
            edges.push(e);
            let last = edges.len() - 1;
            let canonical = (0..last).all(|i| !(removable(edges, i) && edges[i] > e));
            if canonical {
                grow(n, edges, span | p, out);
            }
            edges.pop();
            p = (p - 1) & outside;
        }
    }
}

impl Structure for Hypertree {
    const FAMILY: Family = Family::Hypertree;

    fn n(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.edges.len() - 1
    }

    fn relabel(&self, perm: &[usize]) -> Self {
        Self::from_canonical_parts(self.n, self.edges.iter().map(|&e| map_mask(e, perm)).collect())
    }

    fn enumerate_unchecked(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        if n < 2 {
            return out;
        }
        let rest = full_mask(n) & !1;
        let mut p = rest;
        while p != 0 {
            let mut edges = vec![p | 1];
            grow(n, &mut edges, p | 1, &mut out);
            p = (p - 1) & rest;
        }
        out.sort();
        out
    }

    fn parse_line(line: &str) -> Result<Self> {
        let (n, rest) = split_n(line)?;
        let edges = rest
            .split(',')
            .map(|e| parse_digits(e.trim(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }
}

impl Ordered for Hypertree {
    /// `self ≤ other` iff every edge of `other` lies inside an edge of
    /// `self`. Each edge of `self` is then the union of the edges of `other`
    /// it contains.
    fn leq(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::VertexMismatch { left: self.n, right: other.n });
        }
        Ok(other.edges.iter().all(|&b| self.edges.iter().any(|&a| b & !a == 0)))
    }
}

/// Slow oracle: every set of edges with the right total weight, filtered by
/// connectivity.
pub fn enumerate_hypertrees_by_filter(n: usize) -> Vec<Hypertree> {
    let full = full_mask(n);
    let candidates: Vec<u32> = (1..=full).filter(|m| m.count_ones() >= 2).collect();
    let mut out = Vec::new();
    fn rec(n: usize, cands: &[u32], start: usize, budget: usize, chosen: &mut Vec<u32>, out: &mut Vec<Hypertree>) {
        if budget == 0 {
            if let Ok(h) = Hypertree::new(n, chosen.clone()) {
                out.push(h);
            }
            return;
        }
        for i in start..cands.len() {
            let w = cands[i].count_ones() as usize - 1;
            if w <= budget {
                chosen.push(cands[i]);
                rec(n, cands, i + 1, budget - w, chosen, out);
                chosen.pop();
            }
        }
    }
    if n >= 2 {
        rec(n, &candidates, 0, n - 1, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}
