use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::{Ordered, Structure};
use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Explicit finite graded poset with a unique minimum.
///
/// Elements are stored by increasing rank; `below[i]` and `above[i]` are the
/// strict down- and up-sets as sorted index lists.
#[derive(Debug)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    ranks: Vec<usize>,
    below: Vec<Vec<usize>>,
    above: Vec<Vec<usize>>,
    index: HashMap<T, usize>,
    bottom: usize,
    bottom_mobius: OnceLock<Vec<Option<i64>>>,
}

impl<T: Ordered> FinitePoset<T> {
    /// Build from a duplicate-free element list using the structure order.
    pub fn new(elements: Vec<T>) -> Result<Self> {
        let mut elements = elements;
        elements.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cmp(b)));
        let n = elements.len();
        let ranks: Vec<usize> = elements.iter().map(Structure::rank).collect();
        let below: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|j| {
                let mut out = Vec::new();
                for i in 0..n {
                    if i == j || ranks[i] > ranks[j] {
                        continue;
                    }
                    if elements[i].leq(&elements[j])? {
                        if ranks[i] == ranks[j] {
                            return Err(Error::InvalidStructure(format!(
                                "{} < {} without a rank increase",
                                elements[i], elements[j]
                            )));
                        }
                        out.push(i);
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Self::from_relation(elements, ranks, below)
    }

    /// Induced subposet on `keep` (indices into `self`).
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        let mut position = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let elements = keep.iter().map(|&i| self.elements[i].clone()).collect();
        let ranks = keep.iter().map(|&i| self.ranks[i]).collect();
        let below = keep
            .iter()
            .map(|&i| {
                self.below[i]
                    .iter()
                    .filter(|&&j| position[j] != usize::MAX)
                    .map(|&j| position[j])
                    .collect()
            })
            .collect();
        Self::from_relation(elements, ranks, below)
    }

    fn from_relation(elements: Vec<T>, ranks: Vec<usize>, below: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        let mut above = vec![Vec::new(); n];
        for (j, down) in below.iter().enumerate() {
            for &i in down {
                above[i].push(j);
            }
        }
        let minima: Vec<usize> = (0..n).filter(|&i| below[i].is_empty()).collect();
        let bottom = match minima.as_slice() {
            [b] if above[*b].len() == n - 1 => *b,
            _ => return Err(Error::InvalidStructure("poset has no unique minimum".into())),
        };
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(Self { elements, ranks, below, above, index, bottom, bottom_mobius: OnceLock::new() })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn max_rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn leq_index(&self, i: usize, j: usize) -> bool {
        i == j || self.below[j].binary_search(&i).is_ok()
    }

    pub fn strictly_below(&self, i: usize) -> &[usize] {
        &self.below[i]
    }

    pub fn strictly_above(&self, i: usize) -> &[usize] {
        &self.above[i]
    }

    /// `μ(a, x)` for every `x` (None when `a ≰ x`).
    pub fn mobius_row(&self, a: usize) -> Vec<Option<i64>> {
        let mut row = vec![None; self.len()];
        row[a] = Some(1);
        // indices are sorted by rank, so the up-set is processed bottom-up
        for &x in &self.above[a] {
            let s: i64 = self.below[x].iter().filter_map(|&y| row[y]).sum();
            row[x] = Some(-s);
        }
        row
    }

    fn bottom_row(&self) -> &[Option<i64>] {
        self.bottom_mobius.get_or_init(|| self.mobius_row(self.bottom))
    }

    /// `μ(0̂, x)`.
    pub fn mobius_from_bottom(&self, x: usize) -> i64 {
        self.bottom_row()[x].expect("every element lies above the minimum")
    }

    /// `μ(a, b)`; fails unless `a ≤ b`.
    pub fn mobius(&self, a: &T, b: &T) -> Result<i64> {
        let (i, j) = (self.lookup(a)?, self.lookup(b)?);
        if !self.leq_index(i, j) {
            return Err(Error::NotComparable(format!("{a} ≰ {b}")));
        }
        if i == self.bottom {
            return Ok(self.mobius_from_bottom(j));
        }
        Ok(self.mobius_row(i)[j].expect("a ≤ b"))
    }

    fn lookup(&self, x: &T) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::InvalidStructure(format!("{x} is not an element of the poset")))
    }

    /// `χ(s) = Σ_x μ(0̂, x) s^{r − rank x}`, `r` the maximal rank.
    pub fn char_poly(&self) -> LaurentPoly {
        let r = self.max_rank();
        let mut p = LaurentPoly::zero();
        for x in 0..self.len() {
            let mu = self.mobius_from_bottom(x);
            p += LaurentPoly::monomial(Rational::from_integer(mu.into()), (r - self.ranks[x]) as i32);
        }
        p
    }

    /// `Σ_x μ(0̂, x) t^{rank x}`.
    pub fn rank_mobius_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for x in 0..self.len() {
            let mu = self.mobius_from_bottom(x);
            p += LaurentPoly::monomial(Rational::from_integer(mu.into()), self.ranks[x] as i32);
        }
        p
    }
}
