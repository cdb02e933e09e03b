//! Exact character theory for concrete finite groups.
//!
//! The crate enumerates groups (permutation groups, the polycyclic family
//! `G_n`, products), computes exact irreducible character tables by the
//! Dixon–Schneider method with values in cyclotomic fields, and checks
//! statements about GVZ-groups and generalized Camina pairs on them.

pub mod analysis;
pub mod character;
pub mod constructions;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod modp;

pub use character::{Character, CharacterTable, DixonOptions, SplitStrategy};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{ConjugacyClasses, Group, Permutation, QuotientMap, Subgroup, SubgroupView};
pub use groupspec::GroupSpec;
