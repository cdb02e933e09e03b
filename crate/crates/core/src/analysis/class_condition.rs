//! For a two-degree group: GVZ iff `x[Z(χ),G] = Cl_G(x)` for every `χ` and
//! every `x ∈ Z(χ)` outside the centres of the other nonlinear characters.

use super::{Analysis, Check, Status, TheoremReport};
use crate::error::{Error, Result};
use crate::group::Subgroup;

pub const THEOREM: &str = "class-condition";

/// Whether the coset `x[Z(χ),G]` equals the conjugacy class of `x` as a set.
/// For linear `χ` this is `xG'`, since `Z(χ) = G`.
pub fn class_condition(a: &Analysis, i: usize, x: usize) -> bool {
    let classes = a.table().classes();
    a.data(i).centre_commutator.coset(x).as_slice() == classes.members(classes.class_of(x))
}

/// Classes `k` whose members lie in `Z(χ)` but in no `Z(φ) ≠ Z(χ)`, `φ` nonlinear.
fn admissible_classes(a: &Analysis, zc: &Subgroup) -> Vec<usize> {
    let others: Vec<&Subgroup> = a.nonlinear().into_iter().map(|j| &a.data(j).centre).filter(|z| *z != zc).collect();
    let classes = a.table().classes();
    (0..classes.len())
        .filter(|&k| {
            let x = classes.representative(k);
            zc.contains(x) && !others.iter().any(|z| z.contains(x))
        })
        .collect()
}

pub fn verify_class_condition(a: &Analysis) -> Result<TheoremReport> {
    let g = a.group();
    if !a.is_nonabelian() {
        return Err(Error::HypothesisNotMet(format!("{} is abelian", g.name())));
    }
    if !a.is_two_degree() {
        return Err(Error::HypothesisNotMet(format!("cd(G) = {} does not have two elements", a.degree_set_string())));
    }
    let gvz = a.all_vanish_off_centres();
    let mut report = TheoremReport::new(THEOREM, g.name(), "non-abelian group with two character degrees");
    report.push(Check::note("GVZ", gvz, true, "decides which direction is tested"));

    // one representative per distinct centre, linear characters included
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..a.irreducibles().len() {
        if !reps.iter().any(|&r| a.data(r).centre == a.data(i).centre) {
            reps.push(i);
        }
    }
    let classes = a.table().classes();
    let mut failures = Vec::new();
    for &i in &reps {
        let d = a.data(i);
        let admissible = admissible_classes(a, &d.centre);
        let mut held = 0;
        for &k in &admissible {
            let x = classes.representative(k);
            if class_condition(a, i, x) {
                held += 1;
            } else {
                failures.push(format!(
                    "{} with x = {}: |x[Z(chi),G]| = {}, |Cl(x)| = {}",
                    a.char_name(i),
                    g.label(x),
                    d.centre_commutator.order(),
                    classes.size(k)
                ));
            }
        }
        let mut check = Check::new(
            format!("x[Z(chi),G] = Cl(x) for admissible x, chi = {}, Z(chi) = {}", a.char_name(i), d.centre.describe()),
            held,
            admissible.len(),
            held == admissible.len(),
        );
        if !gvz {
            check.status = Status::Note;
        }
        report.push(check);
    }
    if gvz {
        report.push(
            Check::new("GVZ implies the class condition", failures.len(), 0, failures.is_empty())
                .with_witnesses(failures),
        );
        report.push(Check::skipped("not GVZ implies the class condition fails", "the group is GVZ"));
    } else {
        report.push(Check::skipped("GVZ implies the class condition", "the group is not GVZ"));
        let found = !failures.is_empty();
        report.push(
            Check::new("not GVZ implies the class condition fails", failures.len(), "> 0", found)
                .with_witnesses(failures.into_iter().take(1)),
        );
    }
    Ok(report)
}
