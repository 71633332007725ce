use super::*;
use crate::algebra::{factorial, int, rat};

fn lp(coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, coeffs.iter().map(|&c| int(c)).collect())
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn p1n(n: usize, order: usize) -> SymFunc {
    SymFunc::term(Partition::rectangle(1, n), LaurentPoly::one(), order)
}

#[test]
fn plethysm_of_p2_into_t_p1() {
    let order = 4;
    let g = SymFunc::term(part(&[1]), LaurentPoly::var(), order);
    let f = SymFunc::p(2, order);
    let expected = SymFunc::term(part(&[2]), lp(&[0, 0, 1]), order);
    assert_eq!(f.plethysm(&g).unwrap(), expected);
}

#[test]
fn plethysm_identity_and_errors() {
    let order = 5;
    let g = &comm(order) - &SymFunc::p(2, order).scale(&LaurentPoly::var());
    assert_eq!(SymFunc::p(1, order).plethysm(&g).unwrap(), g);
    assert_eq!(g.plethysm(&SymFunc::p(1, order)).unwrap(), g);
    let bad = &g + &SymFunc::one(order);
    assert!(matches!(comm(order).plethysm(&bad), Err(Error::ConstantTerm { .. })));
}

#[test]
fn outer_coefficients_are_not_transformed() {
    // (t p_2) ∘ p_1 keeps its coefficient t
    let order = 3;
    let f = SymFunc::term(part(&[2]), LaurentPoly::var(), order);
    assert_eq!(f.plethysm(&SymFunc::p(1, order)).unwrap(), f);
}

#[test]
fn comm_of_lie_is_assoc() {
    let order = 7;
    assert_eq!(comm(order).plethysm(&lie(order)).unwrap(), assoc(order));
}

#[test]
fn comm_low_degrees() {
    let c = comm(3);
    assert_eq!(c.coeff(&part(&[1, 1])), LaurentPoly::constant(rat(1, 2)));
    assert_eq!(c.coeff(&part(&[2])), LaurentPoly::constant(rat(1, 2)));
    assert_eq!(c.coeff(&part(&[2, 1])), LaurentPoly::constant(rat(1, 2)));
    assert_eq!(c.coeff(&part(&[3])), LaurentPoly::constant(rat(1, 3)));
    assert_eq!(c.coeff(&part(&[1, 1, 1])), LaurentPoly::constant(rat(1, 6)));
}

#[test]
fn lie_and_prelie_low_degrees() {
    let l = lie(3);
    assert_eq!(l.degree(3).len(), 2);
    assert_eq!(l.coeff(&part(&[1, 1, 1])), LaurentPoly::constant(rat(1, 3)));
    assert_eq!(l.coeff(&part(&[3])), LaurentPoly::constant(rat(-1, 3)));

    let pl = prelie(3).unwrap();
    assert_eq!(pl.degree(3).len(), 2);
    assert_eq!(pl.coeff(&part(&[1, 1, 1])), LaurentPoly::constant(rat(3, 2)));
    assert_eq!(pl.coeff(&part(&[2, 1])), LaurentPoly::constant(rat(1, 2)));
    // class values: 9 rooted trees on 3 labels, 1 fixed by a transposition, 0 by a 3-cycle
    assert_eq!(pl.class_value(&part(&[1, 1, 1])), lp(&[9]));
    assert_eq!(pl.class_value(&part(&[2, 1])), lp(&[1]));
    assert_eq!(pl.class_value(&part(&[3])), LaurentPoly::zero());
}

/// Brute force: number of rooted trees on `{0..n}` fixed by `perm`.
fn fixed_rooted_trees(perm: &[usize]) -> usize {
    let n = perm.len();
    // parent[i] == n marks the root
    let mut count = 0;
    let total = (n + 1).pow(n as u32);
    for code in 0..total {
        let mut parent = vec![0; n];
        let mut c = code;
        for p in parent.iter_mut() {
            *p = c % (n + 1);
            c /= n + 1;
        }
        if parent.iter().filter(|&&p| p == n).count() != 1 {
            continue;
        }
        let acyclic = (0..n).all(|start| {
            let mut v = start;
            for _ in 0..=n {
                if parent[v] == n {
                    return true;
                }
                v = parent[v];
            }
            false
        });
        if !acyclic {
            continue;
        }
        let fixed = (0..n).all(|i| {
            let img = if parent[i] == n { n } else { perm[parent[i]] };
            parent[perm[i]] == img
        });
        if fixed {
            count += 1;
        }
    }
    count
}

#[test]
fn prelie_matches_fixed_rooted_trees() {
    let pl = prelie(5).unwrap();
    for n in 1..=5 {
        for lambda in Partition::all(n) {
            let expected = fixed_rooted_trees(&lambda.representative_permutation());
            assert_eq!(pl.class_value(&lambda), lp(&[expected as i64]), "class {lambda}");
        }
    }
}

/// Brute force: cyclic orders on `n` symbols fixed by `perm` (as successor maps
/// forming a single cycle).
fn fixed_cyclic_orders(perm: &[usize]) -> usize {
    let n = perm.len();
    if n == 1 {
        return 1;
    }
    let mut count = 0;
    let mut rest: Vec<usize> = (1..n).collect();
    permute_all(&mut rest, 0, &mut |order| {
        let mut succ = vec![0; n];
        let mut cycle = vec![0];
        cycle.extend_from_slice(order);
        for i in 0..n {
            succ[cycle[i]] = cycle[(i + 1) % n];
        }
        if (0..n).all(|i| succ[perm[i]] == perm[succ[i]]) {
            count += 1;
        }
    });
    count
}

fn permute_all(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[test]
fn cyc_matches_fixed_cyclic_orders() {
    let c = cyc(6);
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            let expected = fixed_cyclic_orders(&lambda.representative_permutation());
            assert_eq!(c.class_value(&lambda), lp(&[expected as i64]), "class {lambda}");
        }
    }
}

#[test]
fn suspension_examples() {
    let order = 3;
    assert_eq!(SymFunc::p(1, order).suspension(), SymFunc::p(1, order));
    let expected = SymFunc::term(part(&[1, 1]), lp(&[0, -1]), order);
    assert_eq!(p1n(2, order).suspension(), expected);

    let c2 = comm(2).homogeneous(2);
    let s = c2.suspension_at_one();
    let half = LaurentPoly::constant(rat(1, 2));
    let mut expected = SymFunc::zero(2);
    expected.add_term(part(&[1, 1]), -&half);
    expected.add_term(part(&[2]), half);
    assert_eq!(s, expected);
    assert_eq!(s.suspension_at_one(), c2);
    assert_eq!(SymFunc::one(2).suspension(), SymFunc::constant(LaurentPoly::monomial(int(-1), -1), 2));
}

#[test]
fn p1_derivative_and_suspension_commute_up_to_minus_t() {
    let order = 6;
    let f = prelie(order).unwrap();
    let lhs = f.suspension().d_p1();
    let rhs = f.d_p1().suspension().scale(&lp(&[0, -1]));
    assert_eq!(lhs, rhs);

    let half_p1_sq = p1n(2, 3).scale_rational(&rat(1, 2));
    assert_eq!(half_p1_sq.d_p1(), SymFunc::p(1, 2));
}

#[test]
fn invert_unit_is_geometric_series() {
    let order = 5;
    let f = &SymFunc::one(order) + &SymFunc::p(1, order);
    let inv = f.invert_unit().unwrap();
    for n in 0..=order {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(inv.coeff(&Partition::rectangle(1, n)), lp(&[sign]));
    }
    assert_eq!(&f * &inv, SymFunc::one(order));
    assert!(matches!(SymFunc::p(1, order).invert_unit(), Err(Error::ConstantTerm { .. })));
}

#[test]
fn exp_of_power_sums_is_comm() {
    let order = 6;
    let mut s = SymFunc::zero(order);
    for k in 1..=order as u32 {
        s = &s + &SymFunc::p(k, order).scale_rational(&rat(1, k as i64));
    }
    assert_eq!(&s.exp().unwrap() - &SymFunc::one(order), comm(order));
}

fn egf_counts(f: &SymFunc) -> Vec<LaurentPoly> {
    let e = f.exp_specialize();
    (0..=f.order()).map(|n| e.coeff(n).to_laurent_t().unwrap()).collect()
}

#[test]
fn specializations() {
    let order = 7;
    let comm_counts = egf_counts(&comm(order));
    assert_eq!(comm_counts[0], LaurentPoly::zero());
    assert!(comm_counts[1..].iter().all(|c| c.is_one()));

    let counts = egf_counts(&prelie(order).unwrap());
    for n in 1..=order {
        assert_eq!(counts[n], lp(&[(n as i64).pow(n as u32 - 1)]));
    }

    // Lie: -ln(1 - p_1) gives (n-1)!
    let counts = egf_counts(&lie(order));
    for n in 1..=order {
        assert_eq!(counts[n], LaurentPoly::constant(Rational::from_integer(factorial(n - 1))));
    }

    let f = &comm(2).homogeneous(2) - &p1n(2, 2).scale(&LaurentPoly::var());
    assert_eq!(egf_counts(&f)[2], lp(&[1, -2]));
}

#[test]
fn json_round_trip_and_schema() {
    let f = &prelie(4).unwrap().suspension() + &SymFunc::one(4);
    let j = f.to_json();
    assert_eq!(SymFunc::from_json(&j).unwrap(), f);
    let d2 = f.degree_to_json(2);
    assert_eq!(
        d2.to_string(),
        r#"{"degree":2,"terms":[{"partition":[1,1],"coef":{"t^1":"-1"}}]}"#
    );
}

#[test]
fn truncation_rules() {
    let a = comm(3);
    let b = comm(5);
    assert_eq!((&a * &b).order(), 3);
    assert_eq!((&a + &b).order(), 3);
    assert_eq!(b.d_p1().order(), 4);
    assert_eq!(b.plethysm(&a).unwrap().order(), 3);
    assert_eq!(b.first_difference(&a.with_order(5)), Some(4));
}

#[test]
fn operad_identities_hold_to_degree_six() {
    let checks = verify_identities(6).unwrap();
    assert_eq!(checks.len(), 7);
    for c in &checks {
        assert!(c.passed, "{c}");
    }
    assert!(verify_identities(2).is_err());
}

#[test]
fn vertebres_degree_two_by_hand() {
    let pl = prelie(2).unwrap();
    assert_eq!(pl.pointing().homogeneous(2), p1n(2, 2).scale_rational(&rat(2, 1)));
}
