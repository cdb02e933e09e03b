use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Analysis;
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// Both GVZ criteria for one irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub character: usize,
    pub degree: u64,
    pub centre_order: usize,
    /// `|G : Z(χ)|`.
    pub centre_index: usize,
    pub degree_square_is_index: bool,
    pub vanishes_off_centre: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GvzReport {
    pub group: String,
    pub nonabelian: bool,
    pub degree_set: Vec<u64>,
    pub is_gvz: bool,
    pub characters: Vec<CharacterRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Evaluates the GVZ property by pointwise vanishing and, independently, by
/// `χ(1)² = |G : Z(χ)|`, character by character.
pub fn is_gvz(a: &Analysis) -> Result<GvzReport> {
    let g = a.group();
    if !a.is_nonabelian() {
        return Err(Error::NotApplicable(format!("{} is abelian; GVZ is defined for non-abelian groups", g.name())));
    }
    let classes = a.table().classes();
    let mut characters = Vec::new();
    let mut witness = None;
    for (i, chi) in a.irreducibles().iter().enumerate() {
        let zc = &a.data(i).centre;
        let degree = chi.degree();
        let index = zc.index();
        let record = CharacterRecord {
            character: i,
            degree,
            centre_order: zc.order(),
            centre_index: index,
            degree_square_is_index: (degree * degree) as usize == index,
            vanishes_off_centre: chi.vanishes_off(zc),
        };
        if record.degree_square_is_index != record.vanishes_off_centre {
            return Err(Error::TheoremViolation(format!(
                "{}: degree-square test gives {} but vanishing test gives {}",
                a.char_name(i),
                record.degree_square_is_index,
                record.vanishes_off_centre
            )));
        }
        if !record.vanishes_off_centre && witness.is_none() {
            let k = chi.nonvanishing_class_off(zc).expect("some class off the centre is nonzero");
            witness = Some(format!(
                "{} of degree {degree}: {degree}^2 = {} != {index} = |G:Z(chi)|; value {} on {} outside Z(chi)",
                a.char_name(i),
                degree * degree,
                chi.value(k),
                a.class_name(k)
            ));
        }
        characters.push(record);
    }
    debug_assert_eq!(classes.len(), characters.len());
    Ok(GvzReport {
        group: g.name().to_string(),
        nonabelian: true,
        degree_set: a.table().degree_set(),
        is_gvz: witness.is_none(),
        characters,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GcpReport {
    pub group: String,
    pub normal: String,
    pub normal_order: usize,
    pub holds: bool,
    /// Every nonlinear irreducible vanishes outside `N`.
    pub vanishing: bool,
    /// `Cl_G(g) = gG'` for every `g ∉ N`.
    pub class_criterion: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Generalized Camina pair test for `(G, N)`, evaluated by both criteria.
pub fn is_gcp(a: &Analysis, n: &Subgroup) -> Result<GcpReport> {
    let g = a.group();
    if !Arc::ptr_eq(n.parent(), g) {
        return Err(Error::Input("subgroup belongs to a different group".into()));
    }
    if let Some((s, x)) = n.normality_witness() {
        return Err(Error::Input(format!(
            "{} is not normal: conjugating {} by {} leaves it",
            n.describe(),
            g.label(x),
            g.label(s)
        )));
    }
    let classes = a.table().classes();
    let outside: Vec<usize> = (0..classes.len()).filter(|&k| !n.contains(classes.representative(k))).collect();

    let mut vanish_witness = None;
    'outer: for (i, chi) in a.table().nonlinear() {
        for &k in &outside {
            if !chi.value(k).is_zero() {
                vanish_witness =
                    Some(format!("{} takes value {} on {} outside N", a.char_name(i), chi.value(k), a.class_name(k)));
                break 'outer;
            }
        }
    }
    let mut class_witness = None;
    for &k in &outside {
        let coset = a.derived().coset(classes.representative(k));
        if coset.as_slice() != classes.members(k) {
            class_witness =
                Some(format!("{} has size {} but gG' has size {}", a.class_name(k), classes.size(k), coset.len()));
            break;
        }
    }
    let vanishing = vanish_witness.is_none();
    let class_criterion = class_witness.is_none();
    if vanishing != class_criterion {
        return Err(Error::Internal(format!(
            "Camina criteria disagree on {} with N = {}: {}",
            g.name(),
            n.describe(),
            vanish_witness.or(class_witness).unwrap_or_default()
        )));
    }
    Ok(GcpReport {
        group: g.name().to_string(),
        normal: n.describe(),
        normal_order: n.order(),
        holds: vanishing,
        vanishing,
        class_criterion,
        witness: vanish_witness.map(|v| format!("{v}; {}", class_witness.unwrap_or_default())),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoDegreeReport {
    pub group: String,
    pub degree_set: Vec<u64>,
    pub holds: bool,
}

/// `|cd(G)| = 2`.
pub fn two_degree(a: &Analysis) -> TwoDegreeReport {
    let degree_set = a.table().degree_set();
    TwoDegreeReport { group: a.group().name().to_string(), holds: degree_set.len() == 2, degree_set }
}
