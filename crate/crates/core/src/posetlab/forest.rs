use std::collections::HashSet;
use std::fmt;

use super::{generators, parse_vertex, split_n, Family, FinitePoset, Ordered, PointedPartition, Structure};
use crate::algebra::{int, LaurentPoly};
use crate::check::Check;
use crate::error::{Error, Result};

/// Rooted forest on `{0..n}`, stored as a parent array (edges point from
/// child to parent).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
}

impl RootedForest {
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if parent.iter().flatten().any(|&p| p >= n) {
            return Err(Error::InvalidStructure("parent outside the vertex set".into()));
        }
        let f = Self { parent };
        if (0..n).any(|v| f.root_of(v).is_none()) {
            return Err(Error::InvalidStructure("parent array has a cycle".into()));
        }
        Ok(f)
    }

    pub fn empty(n: usize) -> Self {
        Self { parent: vec![None; n] }
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Root of the tree containing `v`, or None on a cycle.
    fn root_of(&self, v: usize) -> Option<usize> {
        let mut v = v;
        for _ in 0..=self.parent.len() {
            match self.parent[v] {
                None => return Some(v),
                Some(p) => v = p,
            }
        }
        None
    }

    pub fn edge_count(&self) -> usize {
        self.parent.iter().flatten().count()
    }
}

impl fmt::Display for RootedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| format!("{}>{}", c + 1, p + 1)))
            .collect();
        write!(f, "{}|{}", self.parent.len(), edges.join(","))
    }
}

impl Structure for RootedForest {
    const FAMILY: Family = Family::Forest;

    fn n(&self) -> usize {
        self.parent.len()
    }

    fn rank(&self) -> usize {
        self.edge_count()
    }

    fn relabel(&self, perm: &[usize]) -> Self {
        let mut parent = vec![None; self.n()];
        for (c, p) in self.parent.iter().enumerate() {
            parent[perm[c]] = p.map(|p| perm[p]);
        }
        Self { parent }
    }

    fn enumerate_unchecked(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut parent = vec![None; n];
        fn rec(v: usize, parent: &mut Vec<Option<usize>>, out: &mut Vec<RootedForest>) {
            let n = parent.len();
            if v == n {
                if let Ok(f) = RootedForest::new(parent.clone()) {
                    out.push(f);
                }
                return;
            }
            for choice in std::iter::once(None).chain((0..n).filter(|&p| p != v).map(Some)) {
                parent[v] = choice;
                rec(v + 1, parent, out);
            }
            parent[v] = None;
        }
        rec(0, &mut parent, &mut out);
        out.sort();
        out
    }

    fn parse_line(line: &str) -> Result<Self> {
        let (n, rest) = split_n(line)?;
        let mut parent = vec![None; n];
        for edge in rest.split(',').filter(|e| !e.trim().is_empty()) {
            let (c, p) = edge
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("edge {edge:?} lacks '>'")))?;
            let one = |s: &str| -> Result<usize> {
                let mut chars = s.trim().chars();
                match (chars.next(), chars.next()) {
                    (Some(ch), None) => parse_vertex(ch, n),
                    _ => Err(Error::Parse(format!("bad vertex {s:?}"))),
                }
            };
            let c = one(c)?;
            if parent[c].is_some() {
                return Err(Error::Parse(format!("vertex {} has two parents", c + 1)));
            }
            parent[c] = Some(one(p)?);
        }
        Self::new(parent)
    }
}

impl Ordered for RootedForest {
    /// Edge-set inclusion.
    fn leq(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::VertexMismatch { left: self.n(), right: other.n() });
        }
        Ok(self.parent.iter().zip(&other.parent).all(|(a, b)| a.is_none() || a == b))
    }
}

/// Trees become blocks, roots become the marked elements.
pub fn phi(f: &RootedForest) -> PointedPartition {
    let n = f.n();
    let mut blocks: Vec<(u32, usize)> = Vec::new();
    for v in 0..n {
        let r = f.root_of(v).expect("forest is acyclic");
        match blocks.iter_mut().find(|(_, root)| *root == r) {
            Some((b, _)) => *b |= 1 << v,
            None => blocks.push((1 << v, r)),
        }
    }
    for b in &mut blocks {
        b.0 |= 1 << b.1;
    }
    PointedPartition::new(n, blocks).expect("components partition the vertices")
}

/// `(s − n)^{n−1}`.
fn expected_char_poly(n: usize) -> LaurentPoly {
    let base = &LaurentPoly::var() - &LaurentPoly::constant(int(n as i64));
    base.pow(n as u32 - 1)
}

/// Monotone, surjective, rank-preserving and equivariant, plus equal
/// characteristic polynomials `(s − n)^{n−1}` on both sides.
pub fn verify_phi(n: usize) -> Result<Vec<Check>> {
    let forests = FinitePoset::new(super::enumerate::<RootedForest>(n)?)?;
    let partitions = FinitePoset::new(super::enumerate::<PointedPartition>(n)?)?;
    let images: Vec<PointedPartition> = forests.elements().iter().map(phi).collect();

    let mut monotone = true;
    for j in 0..forests.len() {
        for &i in forests.strictly_below(j) {
            if !images[i].leq(&images[j])? {
                monotone = false;
            }
        }
    }
    let hit: HashSet<&PointedPartition> = images.iter().collect();
    let surjective = partitions.elements().iter().all(|p| hit.contains(p));
    let rank_preserving = forests.elements().iter().zip(&images).all(|(f, p)| f.rank() == p.rank());
    let equivariant = generators(n).iter().all(|g| {
        forests.elements().iter().zip(&images).all(|(f, p)| phi(&f.relabel(g)) == p.relabel(g))
    });
    let expected = expected_char_poly(n);
    let (cf, cp) = (forests.char_poly(), partitions.char_poly());
    Ok(vec![
        Check::from_bool(format!("phi_monotone_{n}"), monotone, "order not preserved"),
        Check::from_bool(format!("phi_surjective_{n}"), surjective, "some pointed partition missed"),
        Check::from_bool(format!("phi_rank_{n}"), rank_preserving, "rank changed"),
        Check::from_bool(format!("phi_equivariant_{n}"), equivariant, "does not commute with relabeling"),
        Check::from_bool(
            format!("char_poly_forest_{n}"),
            cf == expected,
            format!("got {}", cf.fmt_with("s")),
        ),
        Check::from_bool(
            format!("char_poly_pointed_{n}"),
            cp == expected,
            format!("got {}", cp.fmt_with("s")),
        ),
    ])
}

/// Every interval `[a, b]` of the forest poset has `2^{rank}` elements and
/// `μ(a, b) = (−1)^{rank}`.
pub fn boolean_interval_check(n: usize) -> Result<Check> {
    let poset = FinitePoset::new(super::enumerate::<RootedForest>(n)?)?;
    let name = format!("forest_boolean_intervals_{n}");
    for a in 0..poset.len() {
        let row = poset.mobius_row(a);
        let mut up = vec![false; poset.len()];
        up[a] = true;
        for &x in poset.strictly_above(a) {
            up[x] = true;
        }
        for b in std::iter::once(a).chain(poset.strictly_above(a).iter().copied()) {
            let k = poset.rank(b) - poset.rank(a);
            let size = 1 + poset.strictly_below(b).iter().filter(|&&y| up[y]).count();
            let mu = row[b].expect("a ≤ b");
            let sign = if k % 2 == 0 { 1 } else { -1 };
            if size != 1 << k || mu != sign {
                return Ok(Check::fail(
                    name,
                    Some(k),
                    format!(
                        "[{}, {}] has {size} elements and μ = {mu}",
                        poset.elements()[a],
                        poset.elements()[b]
                    ),
                ));
            }
        }
    }
    Ok(Check::pass(name, format!("{} elements", poset.len())))
}
