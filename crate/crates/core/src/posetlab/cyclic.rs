use std::fmt;

use super::{split_n, Family, Hypertree, Structure};
use crate::error::{Error, Result};

/// Hypertree with a cyclic order on the edges at each vertex.
///
/// `orders[v]` lists indices into `base.edges()`, rotated so that the smallest
/// index comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicHypertree {
    base: Hypertree,
    orders: Vec<Vec<usize>>,
}

fn normalize(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|&(_, &e)| e).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
    cycle
}

fn incident(base: &Hypertree, v: usize) -> Vec<usize> {
    base.edges()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e >> v & 1 == 1)
        .map(|(i, _)| i)
        .collect()
}

/// All cyclic orders of `items` with `items[0]` fixed in front.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    fn perms(rest: &mut Vec<usize>, k: usize, head: usize, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            let mut c = vec![head];
            c.extend_from_slice(rest);
            out.push(c);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            perms(rest, k + 1, head, out);
            rest.swap(k, i);
        }
    }
    let mut out = Vec::new();
    if let Some((&head, tail)) = items.split_first() {
        perms(&mut tail.to_vec(), 0, head, &mut out);
    }
    out.sort();
    out
}

impl CyclicHypertree {
    pub fn new(base: Hypertree, orders: Vec<Vec<usize>>) -> Result<Self> {
        if orders.len() != base.n() {
            return Err(Error::InvalidStructure("one cyclic order per vertex expected".into()));
        }
        let mut normalized = Vec::with_capacity(orders.len());
        for (v, order) in orders.into_iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != incident(&base, v) {
                return Err(Error::InvalidStructure(format!(
                    "cyclic order at vertex {} is not a permutation of its edges",
                    v + 1
                )));
            }
            normalized.push(normalize(order));
        }
        Ok(Self { base, orders: normalized })
    }

    pub fn base(&self) -> &Hypertree {
        &self.base
    }

    pub fn orders(&self) -> &[Vec<usize>] {
        &self.orders
    }

    /// All cyclic structures on one base: `Π_v (deg v − 1)!` of them.
    pub fn over(base: &Hypertree) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for v in 0..base.n() {
            let choices = cyclic_orders(&incident(base, v));
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Vec<usize>>| {
                    choices.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|orders| Self { base: base.clone(), orders }).collect()
    }
}

impl fmt::Display for CyclicHypertree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self
            .orders
            .iter()
            .map(|o| o.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}|{}", self.base, orders.join(";"))
    }
}

impl Structure for CyclicHypertree {
    const FAMILY: Family = Family::CyclicHypertree;

    fn n(&self) -> usize {
        self.base.n()
    }

    fn rank(&self) -> usize {
        self.base.rank()
    }

    fn relabel(&self, perm: &[usize]) -> Self {
        let base = self.base.relabel(perm);
        // old edge index -> new edge index
        let index: Vec<usize> = self
            .base
            .edges()
            .iter()
            .map(|&e| {
                let img = super::map_mask(e, perm);
                base.edges().iter().position(|&f| f == img).expect("relabeled edge present")
            })
            .collect();
        let mut orders = vec![Vec::new(); self.n()];
        for (v, order) in self.orders.iter().enumerate() {
            orders[perm[v]] = normalize(order.iter().map(|&i| index[i]).collect());
        }
        Self { base, orders }
    }

    fn enumerate_unchecked(n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = Hypertree::enumerate_unchecked(n).iter().flat_map(Self::over).collect();
        out.sort();
        out
    }

    fn parse_line(line: &str) -> Result<Self> {
        let (n, rest) = split_n(line)?;
        let (edges, orders) = rest
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("missing cyclic orders in {line:?}")))?;
        let base = Hypertree::parse_line(&format!("{n}|{edges}"))?;
        let orders = orders
            .split(';')
            .map(|o| {
                o.split(',')
                    .filter(|s| !s.is_empty())
                    .map(|i| i.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad edge index {i:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let parsed = Self::new(base, orders)?;
        if parsed.to_string() != line.trim() {
            return Err(Error::Parse(format!("{line:?} is not in canonical form")));
        }
        Ok(parsed)
    }
}
