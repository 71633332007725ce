use std::collections::BTreeSet;

use super::*;
use crate::algebra::{int, rat, LaurentPoly, Truncated};
use crate::symfunc::{cyc, Partition, SymFunc};

fn lp(coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, coeffs.iter().map(|&c| int(c)).collect())
}

fn h(line: &str) -> Hypertree {
    Hypertree::parse_line(line).unwrap()
}

fn half_comm2() -> SymFunc {
    let mut f = SymFunc::zero(2);
    f.add_term(Partition::new(vec![1, 1]), LaurentPoly::constant(rat(1, 2)));
    f.add_term(Partition::new(vec![2]), LaurentPoly::constant(rat(1, 2)));
    f
}

#[test]
fn hypertree_counts_and_fallback() {
    let counts: Vec<usize> = (2..=6).map(|n| enumerate::<Hypertree>(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 4, 29, 311, 4447]);
    for n in 2..=5 {
        assert_eq!(enumerate::<Hypertree>(n).unwrap(), enumerate_hypertrees_by_filter(n), "n = {n}");
    }
    assert!(matches!(enumerate::<Hypertree>(1), Err(Error::OutOfRange { .. })));
    assert!(matches!(enumerate::<Hypertree>(8), Err(Error::BoundExceeded { .. })));
}

#[test]
fn other_family_counts() {
    let pp: Vec<usize> = (1..=5).map(|n| enumerate::<PointedPartition>(n).unwrap().len()).collect();
    assert_eq!(pp, [1, 3, 10, 41, 196]);
    for n in 1..=5usize {
        let expected = (n + 1).pow(n as u32 - 1);
        assert_eq!(enumerate::<RootedForest>(n).unwrap().len(), expected);
    }
    let cyc: Vec<usize> = (2..=4).map(|n| enumerate::<CyclicHypertree>(n).unwrap().len()).collect();
    // τ_n(1): 1, 1 + 3, 1 + 12 + 20
    assert_eq!(cyc, [1, 4, 33]);
}

#[test]
fn line_formats_round_trip() {
    assert_eq!(h("3|12,13").to_string(), "3|12,13");
    assert_eq!(h("3|13,12").to_string(), "3|12,13");
    assert!(Hypertree::parse_line("3|12,23,13").is_err());
    assert!(Hypertree::parse_line("3|12").is_err());
    for n in 2..=4 {
        for x in enumerate::<CyclicHypertree>(n).unwrap() {
            assert_eq!(CyclicHypertree::parse_line(&x.to_string()).unwrap(), x);
        }
        for x in enumerate::<PointedPartition>(n).unwrap() {
            assert_eq!(PointedPartition::parse_line(&x.to_string()).unwrap(), x);
        }
        for x in enumerate::<RootedForest>(n).unwrap() {
            assert_eq!(RootedForest::parse_line(&x.to_string()).unwrap(), x);
        }
    }
    assert_eq!(PointedPartition::bottom(3).to_string(), "3|1:1,2:2,3:3");
    assert_eq!(RootedForest::parse_line("3|2>1").unwrap().to_string(), "3|2>1");
    assert!(RootedForest::parse_line("2|1>2,2>1").is_err());
}

#[test]
fn relabeling_preserves_families() {
    for n in 2..=4 {
        for g in generators(n) {
            let all: BTreeSet<_> = enumerate::<Hypertree>(n).unwrap().into_iter().collect();
            let moved: BTreeSet<_> = all.iter().map(|x| x.relabel(&g)).collect();
            assert_eq!(all, moved);
            let all: BTreeSet<_> = enumerate::<CyclicHypertree>(n).unwrap().into_iter().collect();
            let moved: BTreeSet<_> = all.iter().map(|x| x.relabel(&g)).collect();
            assert_eq!(all, moved);
            // leq commutes with relabeling
            let hs = enumerate::<Hypertree>(n).unwrap();
            for a in &hs {
                for b in &hs {
                    assert_eq!(a.leq(b).unwrap(), a.relabel(&g).leq(&b.relabel(&g)).unwrap());
                }
            }
        }
    }
}

#[test]
fn order_relations() {
    let bottom = Hypertree::bottom(3);
    for x in enumerate::<Hypertree>(3).unwrap() {
        assert!(bottom.leq(&x).unwrap());
    }
    let (a, b) = (h("3|12,13"), h("3|12,23"));
    assert!(!a.leq(&b).unwrap() && !b.leq(&a).unwrap());
    // each coarse edge is covered, but 35 straddles both
    assert!(!h("5|1234,15").leq(&h("5|12,15,34,35")).unwrap());
    assert!(matches!(a.leq(&Hypertree::bottom(4)), Err(Error::VertexMismatch { .. })));

    let empty = RootedForest::empty(3);
    for f in enumerate::<RootedForest>(3).unwrap() {
        assert!(empty.leq(&f).unwrap());
    }
    assert_eq!(enumerate::<RootedForest>(2).unwrap().len(), 3);
}

#[test]
fn mobius_and_char_polys() {
    let pp3 = FinitePoset::new(enumerate::<PointedPartition>(3).unwrap()).unwrap();
    let top = PointedPartition::parse_line("3|123:1").unwrap();
    assert_eq!(pp3.mobius(&PointedPartition::bottom(3), &top).unwrap(), 3);
    assert_eq!(pp3.char_poly(), lp(&[9, -6, 1]));
    let other = PointedPartition::parse_line("3|123:2").unwrap();
    assert!(matches!(pp3.mobius(&top, &other), Err(Error::NotComparable(_))));

    let ha4 = FinitePoset::new(enumerate::<Hypertree>(4).unwrap()).unwrap();
    assert_eq!(ha4.char_poly(), lp(&[20, -12, 1]));
    let ha3 = FinitePoset::new(enumerate::<Hypertree>(3).unwrap()).unwrap();
    assert_eq!(ha3.char_poly(), lp(&[-3, 1]));
    let ha5 = FinitePoset::new(enumerate::<Hypertree>(5).unwrap()).unwrap();
    assert_eq!(ha5.char_poly(), lp(&[-210, 180, -35, 1]));
}

#[test]
fn fixed_subposets() {
    let swap = [1, 0];
    let pp2 = FinitePoset::new(enumerate::<PointedPartition>(2).unwrap()).unwrap();
    assert_eq!(fixed_subposet(&pp2, &swap).unwrap().len(), 1);
    assert_eq!(fixed_subposet(&pp2, &[0, 1]).unwrap().len(), 3);
    let ha3 = FinitePoset::new(enumerate::<Hypertree>(3).unwrap()).unwrap();
    let fixed = fixed_subposet(&ha3, &[1, 0, 2]).unwrap();
    assert_eq!(fixed.len(), 2);
    assert!(fixed.elements().contains(&h("3|13,23")));
}

#[test]
fn permutation_characters() {
    assert_eq!(perm_character::<Hypertree>(2).unwrap(), half_comm2());
    let c3 = perm_character::<CyclicHypertree>(3).unwrap();
    assert_eq!(c3.class_value(&Partition::new(vec![1, 1, 1])), lp(&[1, 3]));
    let f1 = perm_character::<RootedForest>(1).unwrap();
    assert_eq!(f1, SymFunc::p(1, 1));
}

#[test]
fn whitney_characters_in_degree_two() {
    let mut expected = half_comm2();
    expected.add_term(Partition::new(vec![1, 1]), lp(&[0, -1]));
    assert_eq!(whitney_character::<PointedPartition>(2).unwrap(), expected);
    assert_eq!(whitney_character::<RootedForest>(2).unwrap(), expected);
    assert_eq!(whitney_character::<Hypertree>(2).unwrap(), half_comm2());
}

#[test]
fn identity_column_is_reversed_char_poly() {
    for n in 2..=4 {
        let poset = FinitePoset::new(enumerate::<PointedPartition>(n).unwrap()).unwrap();
        let w = whitney_character_of(&poset, n).unwrap();
        let r = poset.max_rank() as i32;
        let reversed = poset.char_poly().compose_monomial(&int(1), -1).shift(r);
        assert_eq!(w.class_value(&Partition::rectangle(1, n)), reversed);
    }
}

#[test]
fn phi_on_small_forests() {
    let f = RootedForest::parse_line("2|2>1").unwrap();
    assert_eq!(phi(&f).to_string(), "2|12:1");
    for c in verify_phi(3).unwrap() {
        assert!(c.passed, "{c}");
    }
    assert!(boolean_interval_check(3).unwrap().passed);
}

#[test]
fn cyclic_orders_match_cyc() {
    let c = cyc(6);
    for n in 1..=6 {
        assert_eq!(cyclic_order_character(n), c.homogeneous(n).with_order(n), "n = {n}");
    }
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("hyperposet-cache-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hypertree_4.txt");
    let all = enumerate::<Hypertree>(4).unwrap();
    dump(&path, 4, &all).unwrap();
    assert_eq!(load::<Hypertree>(&path, 4).unwrap(), all);
    assert!(load::<Hypertree>(&path, 5).is_err());
    assert!(load::<RootedForest>(&path, 4).is_err());

    let text = std::fs::read_to_string(&path).unwrap();
    let truncated: String = text.lines().take(10).map(|l| format!("{l}\n")).collect();
    std::fs::write(&path, truncated).unwrap();
    assert!(matches!(load::<Hypertree>(&path, 4), Err(Error::Cache { .. })));
    std::fs::remove_dir_all(&dir).unwrap();
}
