//! GVZ and generalized-Camina-pair predicates, and extensional checks of the
//! statements about two-degree GVZ groups on a concrete character table.

mod bijections;
mod census;
mod class_condition;
mod lemmas;
mod order_p4;
mod predicates;
mod report;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::character::{Character, CharacterTable, DixonOptions};
use crate::error::Result;
use crate::group::{Group, QuotientMap, Subgroup, SubgroupView};

pub use bijections::{
    fiber_count, irr_star, unique_nonlinear_constituent, verify_fiber_bijections, Constituent, FiberCount,
};
pub use census::{centre_census, verify_centre_census, CensusEntry, CentreCensus};
pub use class_condition::{class_condition, verify_class_condition};
pub use lemmas::verify_lemma_suite;
pub use order_p4::verify_order_p4_criterion;
pub use predicates::{is_gcp, is_gvz, two_degree, CharacterRecord, GcpReport, GvzReport, TwoDegreeReport};
pub use report::{Check, Hypothesis, Status, TheoremReport};

/// Report ids, one per verifier.
pub mod ids {
    pub use super::bijections::THEOREM as FIBER_BIJECTIONS;
    pub use super::census::THEOREM as CENTRE_CENSUS;
    pub use super::class_condition::THEOREM as CLASS_CONDITION;
    pub use super::lemmas::THEOREM as LEMMA_SUITE;
    pub use super::order_p4::THEOREM as ORDER_P4_CAMINA;
}

/// Subgroups attached to one irreducible character.
#[derive(Clone, Debug)]
pub struct CharacterData {
    pub kernel: Subgroup,
    pub centre: Subgroup,
    /// `[Z(χ), G]`.
    pub centre_commutator: Subgroup,
}

/// A quotient together with its character table.
pub struct QuotientTable {
    pub map: QuotientMap,
    pub table: CharacterTable,
}

/// A subgroup, regarded as a group, together with its character table.
pub struct SubgroupTable {
    pub view: SubgroupView,
    pub table: CharacterTable,
}

/// A character table plus the derived data every verifier needs, with caches
/// for the tables of quotients and subgroups built along the way.
pub struct Analysis {
    table: Arc<CharacterTable>,
    options: DixonOptions,
    derived: Subgroup,
    centre: Subgroup,
    chars: Vec<CharacterData>,
    quotients: Mutex<HashMap<Vec<usize>, Arc<QuotientTable>>>,
    subtables: Mutex<HashMap<Vec<usize>, Arc<SubgroupTable>>>,
}

impl Analysis {
    pub fn new(table: CharacterTable) -> Result<Self> {
        Self::with_options(Arc::new(table), DixonOptions::default())
    }

    /// `options` are used for every auxiliary table (quotients, subgroups).
    pub fn with_options(table: Arc<CharacterTable>, options: DixonOptions) -> Result<Self> {
        let g = table.group().clone();
        let derived = g.derived_subgroup();
        let centre = g.center();
        let whole = Subgroup::whole(&g);
        let mut commutators: HashMap<Vec<usize>, Subgroup> = HashMap::new();
        let mut chars = Vec::with_capacity(table.len());
        for chi in table.irreducibles() {
            let kernel = chi.kernel();
            let zc = chi.centre();
            let cc = match commutators.get(zc.members()) {
                Some(s) => s.clone(),
                None => {
                    let s = g.commutator_subgroup(&zc, &whole)?;
                    commutators.insert(zc.members().to_vec(), s.clone());
                    s
                }
            };
            chars.push(CharacterData { kernel, centre: zc, centre_commutator: cc });
        }
        Ok(Analysis {
            table,
            options,
            derived,
            centre,
            chars,
            quotients: Mutex::new(HashMap::new()),
            subtables: Mutex::new(HashMap::new()),
        })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &Arc<Group> {
        self.table.group()
    }

    pub fn irreducibles(&self) -> &[Character] {
        self.table.irreducibles()
    }

    pub fn derived(&self) -> &Subgroup {
        &self.derived
    }

    pub fn centre(&self) -> &Subgroup {
        &self.centre
    }

    pub fn data(&self, i: usize) -> &CharacterData {
        &self.chars[i]
    }

    pub fn is_nonabelian(&self) -> bool {
        self.derived.order() > 1
    }

    pub fn nonlinear(&self) -> Vec<usize> {
        self.table.nonlinear().map(|(i, _)| i).collect()
    }

    /// Every irreducible vanishes off its centre (meaningful for non-abelian groups).
    pub fn all_vanish_off_centres(&self) -> bool {
        self.irreducibles().iter().zip(&self.chars).all(|(chi, d)| chi.vanishes_off(&d.centre))
    }

    pub fn is_two_degree(&self) -> bool {
        self.table.degree_set().len() == 2
    }

    /// Non-abelian, every irreducible vanishes off its centre, and two degrees.
    pub fn is_two_degree_gvz(&self) -> bool {
        self.is_nonabelian() && self.is_two_degree() && self.all_vanish_off_centres()
    }

    /// Why the two-degree GVZ hypothesis fails, if it does.
    pub(crate) fn two_degree_gvz_gap(&self) -> Option<String> {
        if !self.is_nonabelian() {
            Some(format!("{} is abelian", self.group().name()))
        } else if !self.is_two_degree() {
            Some(format!("cd(G) = {} does not have two elements", self.degree_set_string()))
        } else if !self.all_vanish_off_centres() {
            Some(format!("{} is not GVZ", self.group().name()))
        } else {
            None
        }
    }

    pub(crate) fn degree_set_string(&self) -> String {
        set_string(self.table.degree_set())
    }

    /// Distinct centres of the nonlinear irreducibles, ordered by element set,
    /// each with the characters having it.
    pub fn nonlinear_centres(&self) -> Vec<(Subgroup, Vec<usize>)> {
        let mut out: Vec<(Subgroup, Vec<usize>)> = Vec::new();
        for i in self.nonlinear() {
            let zc = &self.chars[i].centre;
            match out.iter_mut().find(|(s, _)| s == zc) {
                Some((_, v)) => v.push(i),
                None => out.push((zc.clone(), vec![i])),
            }
        }
        out.sort_by(|a, b| a.0.members().cmp(b.0.members()));
        out
    }

    /// `G/N` with its table, built once per normal subgroup.
    pub fn quotient_table(&self, n: &Subgroup) -> Result<Arc<QuotientTable>> {
        if let Some(q) = self.quotients.lock().expect("cache lock").get(n.members()) {
            return Ok(q.clone());
        }
        let map = self.group().quotient(n)?;
        let table = CharacterTable::compute_with(map.target(), &self.options)?;
        let entry = Arc::new(QuotientTable { map, table });
        self.quotients.lock().expect("cache lock").insert(n.members().to_vec(), entry.clone());
        Ok(entry)
    }

    /// `H` as a group with its table, built once per subgroup.
    pub fn subgroup_table(&self, h: &Subgroup) -> Result<Arc<SubgroupTable>> {
        if let Some(s) = self.subtables.lock().expect("cache lock").get(h.members()) {
            return Ok(s.clone());
        }
        let view = h.view();
        let table = CharacterTable::compute_with(view.group(), &self.options)?;
        let entry = Arc::new(SubgroupTable { view, table });
        self.subtables.lock().expect("cache lock").insert(h.members().to_vec(), entry.clone());
        Ok(entry)
    }

    pub(crate) fn char_name(&self, i: usize) -> String {
        format!("chi{i}")
    }

    pub(crate) fn class_name(&self, k: usize) -> String {
        let g = self.group();
        format!("class {k} ({})", g.label(self.table.classes().representative(k)))
    }
}

pub(crate) fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

pub(crate) fn set_string<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
