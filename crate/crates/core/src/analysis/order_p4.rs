//! For non-abelian groups of order `p⁴`: `(G, Z(G))` is a generalized Camina
//! pair iff the nilpotency class is 2.

use super::{is_gcp, Analysis, Check, TheoremReport};
use crate::error::{Error, Result};
use crate::modp::prime_factors;

pub const THEOREM: &str = "order-p4-camina";

/// `Some(p)` when `n = p⁴`.
fn fourth_root_prime(n: usize) -> Option<u64> {
    let f = prime_factors(n as u64);
    match f.as_slice() {
        [p] if (*p).pow(4) == n as u64 => Some(*p),
        _ => None,
    }
}

pub fn verify_order_p4_criterion(a: &Analysis) -> Result<TheoremReport> {
    let g = a.group();
    let Some(p) = fourth_root_prime(g.order()) else {
        return Err(Error::HypothesisNotMet(format!("|G| = {} is not p^4 for a prime p", g.order())));
    };
    if !a.is_nonabelian() {
        return Err(Error::HypothesisNotMet(format!("{} is abelian", g.name())));
    }
    let mut report = TheoremReport::new(THEOREM, g.name(), format!("non-abelian of order {p}^4"));
    let gcp = is_gcp(a, a.centre())?;
    let class = g.nilpotency_class()?;
    let mut check = Check::new(
        "(G, Z(G)) is a generalized Camina pair iff class 2",
        gcp.holds,
        class == 2,
        gcp.holds == (class == 2),
    )
    .with_note(format!("nilpotency class {class}"));
    if let Some(w) = gcp.witness {
        check = check.with_witness(w);
    }
    report.push(check);
    Ok(report)
}
