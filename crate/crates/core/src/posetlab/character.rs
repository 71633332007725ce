use rayon::prelude::*;

use super::{enumerate, FinitePoset, Ordered, Structure};
use crate::algebra::{int, LaurentPoly};
use crate::error::Result;
use crate::symfunc::{Partition, SymFunc};

fn fixed_by<S: Structure>(x: &S, perm: &[usize]) -> bool {
    x.relabel(perm) == *x
}

/// `Σ_λ (Σ_{x fixed by σ_λ} t^{rank x}) p_λ/z_λ` over the whole family.
pub fn perm_character<S: Structure>(n: usize) -> Result<SymFunc> {
    let elements = enumerate::<S>(n)?;
    let values = class_values(n, |perm| {
        let mut v = LaurentPoly::zero();
        for x in elements.iter().filter(|x| fixed_by(*x, perm)) {
            v += LaurentPoly::monomial(int(1), x.rank() as i32);
        }
        v
    });
    Ok(from_values(n, values))
}

/// Subposet of elements fixed by `perm`, with the induced order.
pub fn fixed_subposet<S: Ordered>(poset: &FinitePoset<S>, perm: &[usize]) -> Result<FinitePoset<S>> {
    let keep: Vec<usize> = (0..poset.len()).filter(|&i| fixed_by(&poset.elements()[i], perm)).collect();
    poset.induced(&keep)
}

/// Lefschetz character `Σ_λ (Σ_{x ∈ P^σ} μ_{P^σ}(0̂, x) t^{rank x}) p_λ/z_λ`.
/// For a Cohen–Macaulay poset this is `Σ_i ch(WH_i) (−t)^i`.
pub fn whitney_character_of<S: Ordered>(poset: &FinitePoset<S>, n: usize) -> Result<SymFunc> {
    let values: Vec<Result<LaurentPoly>> =
        class_values(n, |perm| Ok(fixed_subposet(poset, perm)?.rank_mobius_poly()));
    let values = values.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(from_values(n, values))
}

pub fn whitney_character<S: Ordered>(n: usize) -> Result<SymFunc> {
    let poset = FinitePoset::new(enumerate::<S>(n)?)?;
    whitney_character_of(&poset, n)
}

/// Fixed-point character of the cyclic orders on `n` symbols, by enumeration.
pub fn cyclic_order_character(n: usize) -> SymFunc {
    // a cyclic order as a successor map; fix symbol 0 first, permute the rest
    let mut orders: Vec<Vec<usize>> = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut sequences = Vec::new();
    permute(&mut rest, 0, &mut sequences);
    for seq in sequences {
        let mut cycle = vec![0];
        cycle.extend(seq);
        let mut succ = vec![0; n];
        for i in 0..n {
            succ[cycle[i]] = cycle[(i + 1) % n];
        }
        orders.push(succ);
    }
    let values = class_values(n, |perm| {
        let fixed = orders
            .iter()
            .filter(|succ| (0..n).all(|i| succ[perm[i]] == perm[succ[i]]))
            .count();
        LaurentPoly::constant(int(fixed as i64))
    });
    from_values(n, values)
}

/// `value(σ_λ)` for every partition `λ ⊢ n`, in partition order.
fn class_values<V: Send>(n: usize, value: impl Fn(&[usize]) -> V + Sync) -> Vec<V> {
    Partition::all(n)
        .par_iter()
        .map(|lambda| value(&lambda.representative_permutation()))
        .collect()
}

fn from_values(n: usize, values: Vec<LaurentPoly>) -> SymFunc {
    let mut it = values.into_iter();
    SymFunc::from_class_function(n, n, |_| it.next().expect("one value per class"))
}
