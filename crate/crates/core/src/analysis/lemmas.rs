//! The supporting statements about character centres, kernels and quotients,
//! each evaluated exhaustively over `Irr(G)`; statements whose hypotheses do
//! not hold on the group are reported as skipped.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{is_gcp, ratio, set_string, Analysis, Check, TheoremReport};
use crate::character::exact_sqrt;
use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::group::Subgroup;

pub const THEOREM: &str = "lemma-suite";

/// Tallies per-item outcomes into one check.
struct Tally {
    label: String,
    held: usize,
    total: usize,
    witnesses: Vec<String>,
}

impl Tally {
    fn new(label: &str) -> Self {
        Tally { label: label.to_string(), held: 0, total: 0, witnesses: Vec::new() }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.held += 1;
        } else {
            self.witnesses.push(witness());
        }
    }

    fn finish(self) -> Check {
        let ok = self.held == self.total;
        Check::new(self.label, self.held, self.total, ok).with_witnesses(self.witnesses)
    }
}

/// Distinct subgroups in first-seen order.
fn distinct(subgroups: impl IntoIterator<Item = Subgroup>) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    for s in subgroups {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// `|A| − |A/G'|`, with `|A/G'|` read as `|A|/|G'|`.
fn nonlinear_count_formula(a: &Analysis, order: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(order)) - ratio(order, a.derived().order())
}

pub fn verify_lemma_suite(a: &Analysis) -> Result<TheoremReport> {
    let g = a.group();
    let n = a.irreducibles().len();
    let classes = a.table().classes();
    let mut report = TheoremReport::new(THEOREM, g.name(), "per statement");

    // linear iff [Z(χ),G] = G'
    let mut t = Tally::new("chi is linear iff [Z(chi),G] = G'");
    for (i, chi) in a.irreducibles().iter().enumerate() {
        let eq = a.data(i).centre_commutator == *a.derived();
        t.record(chi.is_linear() == eq, || {
            format!("{}: linear {}, [Z(chi),G] = G' {eq}", a.char_name(i), chi.is_linear())
        });
    }
    report.push(t.finish());

    // Z(G/[Z(χ),G]) = Z(χ)/[Z(χ),G]
    let mut t = Tally::new("Z(G/[Z(chi),G]) = Z(chi)/[Z(chi),G]");
    let mut seen: Vec<(Subgroup, Subgroup)> = Vec::new();
    for i in 0..n {
        let d = a.data(i);
        let key = (d.centre.clone(), d.centre_commutator.clone());
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let qt = a.quotient_table(&d.centre_commutator)?;
        let image = qt.map.image(&d.centre);
        let centre = qt.map.target().center();
        t.record(image == centre, || {
            format!("{}: |Z(quotient)| = {}, |Z(chi)/[Z(chi),G]| = {}", a.char_name(i), centre.order(), image.order())
        });
    }
    report.push(t.finish());

    // restriction to H = Z(χ): [χ_H, χ_H] <= [G:H], equality iff χ vanishes off H
    let mut t = Tally::new("[chi_H,chi_H] <= [G:H] for H = Z(chi), with equality iff chi vanishes off H");
    for (i, chi) in a.irreducibles().iter().enumerate() {
        let h = &a.data(i).centre;
        let mut acc = Cyclotomic::zero(g.exponent() as u32)?;
        for k in 0..classes.len() {
            if h.contains(classes.representative(k)) {
                acc = &acc + &chi.value(k).abs_squared().scale_int(classes.size(k) as i64);
            }
        }
        let norm = acc.as_rational().map(|r| r / BigRational::from_integer(h.order().into()));
        let index = BigRational::from_integer(h.index().into());
        let ok = match &norm {
            Some(r) => *r <= index && (*r == index) == chi.vanishes_off(h),
            None => false,
        };
        t.record(ok, || {
            format!(
                "{}: [chi_H,chi_H] = {}, [G:H] = {index}, vanishes off H {}",
                a.char_name(i),
                norm.map(|r| r.to_string()).unwrap_or_else(|| acc.to_string()),
                chi.vanishes_off(h)
            )
        });
    }
    report.push(t.finish());

    // χ(1)² <= |G/Z(χ)|, equality iff χ vanishes off Z(χ)
    let mut t = Tally::new("chi(1)^2 <= |G/Z(chi)|, with equality iff chi vanishes off Z(chi)");
    for (i, chi) in a.irreducibles().iter().enumerate() {
        let sq = (chi.degree() * chi.degree()) as usize;
        let idx = a.data(i).centre.index();
        let vanishes = chi.vanishes_off(&a.data(i).centre);
        t.record(sq <= idx && (sq == idx) == vanishes, || {
            format!("{}: chi(1)^2 = {sq}, |G/Z(chi)| = {idx}, vanishes {vanishes}", a.char_name(i))
        });
    }
    report.push(t.finish());

    // G/Z(χ) abelian ⇒ χ(1)² = |G/Z(χ)|
    let mut t = Tally::new("G/Z(chi) abelian implies chi(1)^2 = |G/Z(chi)|");
    for (i, chi) in a.irreducibles().iter().enumerate() {
        let zc = &a.data(i).centre;
        if !a.derived().is_subset_of(zc) {
            continue;
        }
        let sq = (chi.degree() * chi.degree()) as usize;
        t.record(sq == zc.index(), || format!("{}: chi(1)^2 = {sq}, |G/Z(chi)| = {}", a.char_name(i), zc.index()));
    }
    report.push(t.finish());

    // Z(χ)/ker χ = Z(G/ker χ)
    let mut t = Tally::new("Z(chi)/ker chi = Z(G/ker chi)");
    let mut seen: Vec<(Subgroup, Subgroup)> = Vec::new();
    for i in 0..n {
        let d = a.data(i);
        let key = (d.kernel.clone(), d.centre.clone());
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let qt = a.quotient_table(&d.kernel)?;
        let image = qt.map.image(&d.centre);
        let centre = qt.map.target().center();
        t.record(image == centre, || {
            format!("{}: |Z(chi)/ker chi| = {}, |Z(G/ker chi)| = {}", a.char_name(i), image.order(), centre.order())
        });
    }
    report.push(t.finish());

    // #{χ : N ⊆ ker χ} = |Irr(G/N)|, realised by deflation
    let mut normals = vec![Subgroup::trivial(g), a.centre().clone(), a.derived().clone()];
    normals.extend((0..n).map(|i| a.data(i).kernel.clone()));
    normals.extend((0..n).map(|i| a.data(i).centre_commutator.clone()));
    let normals = distinct(normals);
    let mut t = Tally::new("#{chi : N <= ker chi} = |Irr(G/N)| via deflation");
    for nsub in &normals {
        let qt = a.quotient_table(nsub)?;
        let mut hits = Vec::new();
        let mut consistent = true;
        for (i, chi) in a.irreducibles().iter().enumerate() {
            let above = nsub.is_subset_of(&a.data(i).kernel);
            match chi.deflate(&qt.map, qt.table.classes())? {
                Some(bar) if above => match qt.table.position(&bar) {
                    Some(p) => hits.push(p),
                    None => consistent = false,
                },
                None if !above => {}
                _ => consistent = false,
            }
        }
        hits.sort_unstable();
        hits.dedup();
        t.record(consistent && hits.len() == qt.table.len(), || {
            format!("N = {}: {} deflations for {} characters of G/N", nsub.describe(), hits.len(), qt.table.len())
        });
    }
    report.push(t.finish());

    // [Z(χ),G] <= ker χ
    let mut t = Tally::new("[Z(chi),G] <= ker chi");
    for i in 0..n {
        let d = a.data(i);
        t.record(d.centre_commutator.is_subset_of(&d.kernel), || a.char_name(i));
    }
    report.push(t.finish());

    // for χ nonlinear and φ ∈ Irr(G): Z(χ) <= Z(φ) iff φ ∈ Irr(G/[Z(χ),G])
    let mut t = Tally::new("Z(chi) <= Z(phi) iff phi in Irr(G/[Z(chi),G]), chi nonlinear");
    for (zc, members) in a.nonlinear_centres() {
        let i = members[0];
        let qt = a.quotient_table(&a.data(i).centre_commutator)?;
        for (j, phi) in a.irreducibles().iter().enumerate() {
            let contained = zc.is_subset_of(&a.data(j).centre);
            let deflates = match phi.deflate(&qt.map, qt.table.classes())? {
                Some(bar) => qt.table.position(&bar).is_some(),
                None => false,
            };
            t.record(contained == deflates, || {
                format!(
                    "chi = {}, phi = {}: contained {contained}, deflates {deflates}",
                    a.char_name(i),
                    a.char_name(j)
                )
            });
        }
    }
    report.push(t.finish());

    let gap = a.two_degree_gvz_gap();
    let centres = a.nonlinear_centres();

    // two-degree GVZ: Z(χ) = Z(φ) iff φ ∈ nl(G/[Z(χ),G]), χ, φ nonlinear
    let label = "Z(chi) = Z(phi) iff phi in nl(G/[Z(chi),G]), chi, phi nonlinear";
    match &gap {
        Some(reason) => report.push(Check::skipped(label, reason.clone())),
        None => {
            let mut t = Tally::new(label);
            for (zc, members) in &centres {
                let i = members[0];
                let qt = a.quotient_table(&a.data(i).centre_commutator)?;
                for j in a.nonlinear() {
                    let same = a.data(j).centre == *zc;
                    let lands = match a.irreducibles()[j].deflate(&qt.map, qt.table.classes())? {
                        Some(bar) => !bar.is_linear() && qt.table.position(&bar).is_some(),
                        None => false,
                    };
                    t.record(same == lands, || {
                        format!(
                            "chi = {}, phi = {}: equal centres {same}, in nl(quotient) {lands}",
                            a.char_name(i),
                            a.char_name(j)
                        )
                    });
                }
            }
            report.push(t.finish());
        }
    }

    // two-degree GVZ: G' <= Z(χ) for every nonlinear χ
    let label = "G' <= Z(chi) for every nonlinear chi";
    match &gap {
        Some(reason) => report.push(Check::skipped(label, reason.clone())),
        None => {
            let mut t = Tally::new(label);
            for (zc, members) in &centres {
                t.record(a.derived().is_subset_of(zc), || {
                    format!("{}: Z(chi) = {}", a.char_name(members[0]), zc.describe())
                });
            }
            report.push(t.finish());
        }
    }

    // two-degree GVZ with a single nonlinear centre: |nl(G)| = |Z(G)| − |Z(G)/G'|
    let label = "|nl(G)| = |Z(G)| - |Z(G)/G'| when all nonlinear centres agree";
    match (&gap, centres.len()) {
        (Some(reason), _) => report.push(Check::skipped(label, reason.clone())),
        (None, c) if c != 1 => report.push(Check::skipped(label, format!("{c} distinct nonlinear centres"))),
        (None, _) => {
            let formula = nonlinear_count_formula(a, a.centre().order());
            let count = a.nonlinear().len();
            report.push(Check::new(label, count, &formula, formula == BigRational::from_integer(count.into())));
        }
    }

    // two-degree GVZ: cd(G) = {1, |G/Z(χ)|^{1/2}} and |nl(G)| = |Z(χ)| − |Z(χ)/G'|
    match &gap {
        Some(reason) => {
            report.push(Check::skipped("cd(G) = {1, |G/Z(chi)|^(1/2)} for nonlinear chi", reason.clone()));
            report.push(Check::skipped("|nl(G)| = |Z(chi)| - |Z(chi)/G'| for nonlinear chi", reason.clone()));
        }
        None => {
            let mut cd = Tally::new("cd(G) = {1, |G/Z(chi)|^(1/2)} for nonlinear chi");
            let mut count = Tally::new("|nl(G)| = |Z(chi)| - |Z(chi)/G'| for nonlinear chi");
            let t_count = a.nonlinear().len();
            for (zc, members) in &centres {
                let i = members[0];
                let expected = exact_sqrt(zc.index() as u64).map(|r| vec![1, r]);
                let actual = a.table().degree_set();
                cd.record(expected.as_ref() == Some(&actual), || {
                    format!("{}: cd(G) = {}, |G/Z(chi)| = {}", a.char_name(i), set_string(&actual), zc.index())
                });
                let formula = nonlinear_count_formula(a, zc.order());
                count.record(formula == BigRational::from_integer(t_count.into()), || {
                    format!("{}: |nl(G)| = {t_count}, formula {formula}", a.char_name(i))
                });
            }
            report.push(cd.finish());
            report.push(count.finish());
        }
    }

    // (G, Z(G)) a generalized Camina pair: cd(G) = {1, |G/Z(G)|^{1/2}}, |nl(G)| = |Z(G)| − |Z(G)/G'|
    let cd_label = "cd(G) = {1, |G/Z(G)|^(1/2)} when (G, Z(G)) is a generalized Camina pair";
    let count_label = "|nl(G)| = |Z(G)| - |Z(G)/G'| when (G, Z(G)) is a generalized Camina pair";
    let gcp = if a.is_nonabelian() { Some(is_gcp(a, a.centre())?) } else { None };
    match gcp {
        None => {
            report.push(Check::skipped(cd_label, "the group is abelian"));
            report.push(Check::skipped(count_label, "the group is abelian"));
        }
        Some(r) if !r.holds => {
            let why = format!("(G, Z(G)) is not a generalized Camina pair: {}", r.witness.unwrap_or_default());
            report.push(Check::skipped(cd_label, why.clone()));
            report.push(Check::skipped(count_label, why));
        }
        Some(_) => {
            let idx = a.centre().index();
            let expected =
                exact_sqrt(idx as u64).map(|r| set_string([1, r])).unwrap_or_else(|| format!("non-square index {idx}"));
            report.push(Check::eq(cd_label, a.degree_set_string(), expected));
            let formula = nonlinear_count_formula(a, a.centre().order());
            let count = a.nonlinear().len();
            report.push(Check::new(count_label, count, &formula, formula == BigRational::from_integer(count.into())));
        }
    }
    Ok(report)
}
