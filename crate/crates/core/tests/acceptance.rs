//! Twelve acceptance criteria, one line each. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use hyperposet::algebra::{int, LaurentPoly, Truncated};
use hyperposet::characters::{
    ce_check, conjecture_report, equivariant_check, hal, hal_bar_checks, hal_checks, pointed_whitney_dimensions,
    wh_pp,
};
use hyperposet::genseries::{chi, mobius_hat, solve_hypertree_system, tau, verify_inversion_system, ChiMethod};
use hyperposet::posetlab::{
    boolean_interval_check, enumerate, verify_phi, whitney_character, CyclicHypertree, FinitePoset, Hypertree,
    PointedPartition, RootedForest, Structure,
};
use hyperposet::symfunc::{verify_identities, Partition};
use hyperposet::{Check, Result};

const ORDER: usize = 8;

fn lp(coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, coeffs.iter().map(|&c| int(c)).collect())
}

fn failures(checks: &[Check]) -> Option<String> {
    let bad: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    (!bad.is_empty()).then(|| bad.join("; "))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

type Outcome = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Result<Outcome>);

fn lift(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(|e| Err(e.to_string()))
}

fn hypertree_counts() -> Result<Outcome> {
    let expected = [1, 4, 29, 311, 4447];
    let series = solve_hypertree_system(ORDER)?.eval_u_one();
    for (n, &count) in (2..=6).zip(&expected) {
        let from_series = series.ha.coeff(n).eval_t(&int(1)).constant_term();
        let enumerated = enumerate::<Hypertree>(n)?.len();
        if from_series != int(count) || enumerated != count as usize {
            return Ok(Err(format!("n = {n}: series {from_series}, enumeration {enumerated}, expected {count}")));
        }
    }
    Ok(Ok(()))
}

fn characteristic_polynomials() -> Result<Outcome> {
    let c3 = chi(3, ChiMethod::ViaTau)?;
    let c4 = chi(4, ChiMethod::Triangular)?;
    if c3.to_string() != "s - 3" || c4.to_string() != "s^2 - 12*s + 20" {
        return Ok(Err(format!("chi(3) = {c3}, chi(4) = {c4}")));
    }
    for n in 2..=ORDER {
        let a = chi(n, ChiMethod::ViaTau)?;
        let b = chi(n, ChiMethod::Triangular)?;
        if a != b || !a.alternates() {
            return Ok(Err(format!("n = {n}: {a} vs {b}")));
        }
    }
    Ok(Ok(()))
}

fn mobius_numbers() -> Result<Outcome> {
    for n in 3..=ORDER {
        let m = (n - 1) as i64;
        let magnitude = m.pow(n as u32 - 2);
        let expected = if n % 2 == 1 { magnitude } else { -magnitude };
        let got = mobius_hat(n)?;
        if got != int(expected) {
            return Ok(Err(format!("n = {n}: got {got}, expected {expected}")));
        }
    }
    Ok(Ok(()))
}

fn tau_and_cyclic_enumeration() -> Result<Outcome> {
    if tau(4)? != lp(&[1, 12, 20]) {
        return Ok(Err(format!("tau(4) = {}", tau(4)?)));
    }
    for n in 2..=6 {
        let mut enumerated = LaurentPoly::zero();
        for x in enumerate::<CyclicHypertree>(n)? {
            enumerated += LaurentPoly::monomial(int(1), x.rank() as i32);
        }
        if tau(n)? != enumerated {
            return Ok(Err(format!("n = {n}: tau {}, enumeration {enumerated}", tau(n)?)));
        }
    }
    Ok(Ok(()))
}

fn inversion_system() -> Result<Outcome> {
    Ok(failures(&verify_inversion_system(ORDER)?).map_or(Ok(()), Err))
}

fn identities() -> Result<Outcome> {
    let checks = verify_identities(ORDER)?;
    if checks.len() != 7 {
        return Ok(Err(format!("{} checks", checks.len())));
    }
    Ok(failures(&checks).map_or(Ok(()), Err))
}

fn hal_consistency() -> Result<Outcome> {
    Ok(failures(&hal_checks(&hal(7)?, 6)?).map_or(Ok(()), Err))
}

fn t_one_chain() -> Result<Outcome> {
    Ok(failures(&hal_bar_checks(7)?).map_or(Ok(()), Err))
}

fn pointed_partitions_and_forests() -> Result<Outcome> {
    let mut checks = Vec::new();
    for n in 1..=5 {
        let expected = (&LaurentPoly::var() - &LaurentPoly::constant(int(n as i64))).pow(n as u32 - 1);
        let pp = FinitePoset::new(enumerate::<PointedPartition>(n)?)?.char_poly();
        let forest = FinitePoset::new(enumerate::<RootedForest>(n)?)?.char_poly();
        checks.push(Check::from_bool(format!("char_polys_{n}"), pp == expected && forest == expected, "differ"));
        checks.push(boolean_interval_check(n)?);
        checks.extend(verify_phi(n)?);
    }
    Ok(failures(&checks).map_or(Ok(()), Err))
}

fn whitney_characters() -> Result<Outcome> {
    let w = wh_pp(7)?;
    for n in 1..=5 {
        if w.homogeneous(n).with_order(n) != whitney_character::<PointedPartition>(n)? {
            return Ok(Err(format!("degree {n} differs from the fixed-point oracle")));
        }
    }
    for n in 1..=7 {
        if w.class_value(&Partition::rectangle(1, n)) != pointed_whitney_dimensions(n) {
            return Ok(Err(format!("dimensions differ in degree {n}")));
        }
    }
    let ce = ce_check(7)?;
    Ok(ensure(ce.passed, || ce.to_string()))
}

fn equivariant_characters() -> Result<Outcome> {
    Ok(failures(&equivariant_check(ORDER, 5)?).map_or(Ok(()), Err))
}

fn conjecture_harness() -> Result<Outcome> {
    let mut findings = Vec::new();
    for n in 2..=5 {
        let r = conjecture_report(n)?;
        if !r.dimension_check {
            return Ok(Err(format!("dimension check fails at n = {n}")));
        }
        findings.push(format!("n={n} equal={}", r.equal));
    }
    println!("    findings: {}", findings.join(", "));
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("hypertree_counts", hypertree_counts),
        ("characteristic_polynomials", characteristic_polynomials),
        ("mobius_numbers", mobius_numbers),
        ("tau_cyclic_enumeration", tau_and_cyclic_enumeration),
        ("inversion_system", inversion_system),
        ("symmetric_function_identities", identities),
        ("hal_consistency", hal_consistency),
        ("t_one_specializations", t_one_chain),
        ("pointed_partitions_and_forests", pointed_partitions_and_forests),
        ("whitney_characters", whitney_characters),
        ("hypertree_characters", equivariant_characters),
        ("conjecture_harness", conjecture_harness),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match lift(run()) {
            Ok(()) => println!("{:>2} {name}\tPASS", i + 1),
            Err(msg) => {
                failed += 1;
                println!("{:>2} {name}\tFAIL\t{msg}", i + 1);
            }
        }
    }
    println!("{} of 12 passed in {:.1?}", 12 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
