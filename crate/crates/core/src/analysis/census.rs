//! Distinct centres of the nonlinear irreducible characters, with
//! multiplicities, compared with the listed family for the `G_n` groups.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{ratio, Analysis, Check, TheoremReport};
use crate::constructions::gn_listed_centres;
use crate::error::{Error, Result};

pub const THEOREM: &str = "centre-census";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub centre: String,
    pub order: usize,
    pub characters: Vec<usize>,
    pub count: usize,
    /// Membership in the listed family, when the group has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub listed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentreCensus {
    pub group: String,
    pub entries: Vec<CensusEntry>,
    pub total: usize,
    /// Listed subgroups (for `G_n`) paired with their census count.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub listed: Option<Vec<(String, usize)>>,
    /// Whether centres outside the listed family occur (for `G_n`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_centres: Option<bool>,
}

/// Computed centres in order of their element sets.
pub fn centre_census(a: &Analysis) -> CentreCensus {
    let listed = gn_listed_centres(a.group());
    let mut entries = Vec::new();
    for (zc, members) in a.nonlinear_centres() {
        entries.push(CensusEntry {
            centre: zc.describe(),
            order: zc.order(),
            count: members.len(),
            characters: members,
            listed: listed.as_ref().map(|l| l.contains(&zc)),
        });
    }
    let total = entries.iter().map(|e| e.count).sum();
    let listed_counts = listed.as_ref().map(|l| {
        l.iter()
            .map(|s| {
                let count = a.nonlinear().into_iter().filter(|&j| a.data(j).centre == *s).count();
                (s.describe(), count)
            })
            .collect()
    });
    let extra_centres = listed.as_ref().map(|_| entries.iter().any(|e| e.listed == Some(false)));
    CentreCensus { group: a.group().name().to_string(), entries, total, listed: listed_counts, extra_centres }
}

pub fn verify_centre_census(a: &Analysis) -> Result<TheoremReport> {
    let g = a.group();
    if !a.is_nonabelian() {
        return Err(Error::HypothesisNotMet(format!("{} is abelian", g.name())));
    }
    let census = centre_census(a);
    let mut report = TheoremReport::new(THEOREM, g.name(), "non-abelian group");
    report.push(Check::eq("census total equals |nl(G)|", census.total, a.nonlinear().len()));

    let gvz2 = a.is_two_degree_gvz();
    for ((zc, members), entry) in a.nonlinear_centres().into_iter().zip(&census.entries) {
        let label = format!("characters with centre {}", entry.centre);
        if gvz2 {
            let d = a.data(members[0]);
            let formula = ratio(zc.order(), d.centre_commutator.order()) - ratio(zc.order(), a.derived().order());
            report.push(
                Check::new(
                    format!("{label} match |Z(chi)|(1/|[Z(chi),G]| - 1/|G'|)"),
                    entry.count,
                    &formula,
                    formula == BigRational::from_integer(entry.count.into()),
                )
                .with_witnesses(members.iter().map(|&j| a.char_name(j))),
            );
        } else {
            report.push(Check::note(label, entry.count, "", "fiber formula not claimed: not a two-degree GVZ group"));
        }
    }

    if let (Some(listed), Some(extra)) = (&census.listed, census.extra_centres) {
        for (name, count) in listed {
            report.push(Check::new(format!("listed centre {name} occurs"), count, "> 0", *count > 0));
        }
        let outside: Vec<String> = census
            .entries
            .iter()
            .filter(|e| e.listed == Some(false))
            .map(|e| format!("{} ({} characters)", e.centre, e.count))
            .collect();
        let note = if extra {
            "centres outside the listed family occur"
        } else {
            "every computed centre is in the listed family"
        };
        report.push(Check::note("centres outside the listed family", outside.len(), 0, note).with_witnesses(outside));
    }
    Ok(report)
}
