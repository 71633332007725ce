//! Classical identities between the operad characters.

use super::{assoc, comm, lie, perm, prelie, SymFunc};
use crate::algebra::Truncated;
use crate::check::Check;
use crate::error::{Error, Result};

/// Check the Koszul, Poisson and rooted-tree identities to degree `order`.
pub fn verify_identities(order: usize) -> Result<Vec<Check>> {
    if order < 3 {
        return Err(Error::OutOfRange { what: "order", value: order, min: 3, max: usize::MAX });
    }
    let p1 = SymFunc::p(1, order);
    let one = SymFunc::one(order);
    let comm = comm(order);
    let lie = lie(order);
    let perm = perm(order);
    let prelie = prelie(order)?;
    let sigma_prelie = prelie.suspension_at_one();
    let comm_of_sigma = comm.plethysm(&sigma_prelie)?;

    let mut checks = vec![
        Check::symfunc("koszul_comm", &lie.suspension_at_one().plethysm(&comm)?, &p1),
        Check::symfunc("poisson", &comm.plethysm(&lie)?, &assoc(order)),
        Check::symfunc("koszul_perm_left", &sigma_prelie.plethysm(&perm)?, &p1),
        Check::symfunc("koszul_perm_right", &perm.plethysm(&sigma_prelie)?, &p1),
        Check::symfunc("vertebres", &prelie.pointing(), &assoc(order).plethysm(&prelie)?),
        Check::symfunc("prelie_unit_relation", &(&sigma_prelie * &comm_of_sigma), &(&p1 - &sigma_prelie)),
    ];
    let somme = &sigma_prelie.pointing() + &comm_of_sigma.d_p1();
    checks.push(Check::symfunc("somme1", &somme, &one.with_order(order - 1)));
    Ok(checks)
}
