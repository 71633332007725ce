use hyperposet::algebra::{int, LaurentPoly, Truncated};
use hyperposet::symfunc::{Partition, SymFunc};
use proptest::prelude::*;

const ORDER: usize = 5;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-3i64..=3, 1..3), 0i32..2)
        .prop_map(|(cs, low)| LaurentPoly::from_coeffs(low, cs.into_iter().map(int).collect()))
}

/// Up to four random terms of degrees `min_deg..=max_deg`.
fn symfunc(min_deg: usize, max_deg: usize) -> impl Strategy<Value = SymFunc> {
    let term = (min_deg..=max_deg)
        .prop_flat_map(|n| (0..Partition::all(n).len(), Just(n)))
        .prop_map(|(i, n)| Partition::all(n)[i].clone());
    prop::collection::vec((term, laurent()), 0..4).prop_map(|terms| {
        let mut f = SymFunc::zero(ORDER);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    })
}

fn homogeneous(n: usize) -> impl Strategy<Value = SymFunc> {
    symfunc(n, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn plethysm_is_associative(f in symfunc(1, 3), g in symfunc(1, 2), h in symfunc(1, 2)) {
        let left = f.plethysm(&g).unwrap().plethysm(&h).unwrap();
        let right = f.plethysm(&g.plethysm(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn plethysm_is_linear_in_the_outer_argument(f in symfunc(1, 3), g in symfunc(1, 3), h in symfunc(1, 2)) {
        let lhs = (&f + &g).plethysm(&h).unwrap();
        let rhs = &f.plethysm(&h).unwrap() + &g.plethysm(&h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_specialization_is_a_ring_map(f in symfunc(0, 3), g in symfunc(0, 3)) {
        let lhs = (&f * &g).exp_specialize();
        let rhs = &f.exp_specialize() * &g.exp_specialize();
        prop_assert_eq!(lhs, rhs);
        let sum = (&f + &g).exp_specialize();
        prop_assert_eq!(sum, &f.exp_specialize() + &g.exp_specialize());
    }

    #[test]
    fn suspension_at_one_is_an_involution(f in symfunc(1, 5)) {
        let f = f.eval_t_one();
        prop_assert_eq!(f.suspension_at_one().suspension_at_one(), f);
    }

    #[test]
    fn suspension_is_anti_multiplicative(
        (a, b) in (1usize..=2, 1usize..=3).prop_flat_map(|(a, b)| (homogeneous(a), homogeneous(b)))
    ) {
        let (f, g) = (a.eval_t_one(), b.eval_t_one());
        let lhs = (&f * &g).suspension_at_one();
        let rhs = -&(&f.suspension_at_one() * &g.suspension_at_one());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(f in symfunc(0, 5)) {
        let back = SymFunc::from_json(&f.to_json()).unwrap();
        prop_assert_eq!(back.order(), f.order());
        prop_assert_eq!(back, f);
    }
}
