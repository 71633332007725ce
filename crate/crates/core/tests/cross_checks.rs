use hyperposet::algebra::{int, LaurentPoly};
use hyperposet::genseries::{chi, mobius_hat, solve_hypertree_system, ChiMethod};
use hyperposet::posetlab::{enumerate, FinitePoset, Hypertree, Structure};

#[test]
fn hypertree_poset_matches_series() {
    let series = solve_hypertree_system(6).unwrap().eval_u_one();
    for n in 3..=6 {
        let elements = enumerate::<Hypertree>(n).unwrap();
        let mut ranks = LaurentPoly::zero();
        for h in &elements {
            ranks += LaurentPoly::monomial(int(1), h.rank() as i32);
        }
        assert_eq!(series.ha.coeff(n).to_laurent_t().unwrap(), ranks, "n = {n}");

        let poset = FinitePoset::new(elements).unwrap();
        let expected = chi(n, ChiMethod::ViaTau).unwrap();
        assert_eq!(poset.char_poly(), expected.to_laurent(), "n = {n}");
        // adding a top: μ̂ = −Σ_x μ(0̂, x)
        let total: i64 = (0..poset.len()).map(|x| poset.mobius_from_bottom(x)).sum();
        assert_eq!(mobius_hat(n).unwrap(), int(-total), "n = {n}");
    }
}
