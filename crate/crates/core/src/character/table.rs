use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{dixon, Character, DixonOptions};
use crate::error::Result;
use crate::group::{ConjugacyClasses, Group};

/// The irreducible characters of a group together with its class data.
#[derive(Debug)]
pub struct CharacterTable {
    pub(super) classes: Arc<ConjugacyClasses>,
    pub(super) power_maps: Vec<Vec<usize>>,
    pub(super) irreducibles: Vec<Character>,
    pub(super) field_prime: u64,
}

impl CharacterTable {
    /// Exact table with the default deterministic options.
    pub fn compute(group: &Arc<Group>) -> Result<Self> {
        Self::compute_with(group, &DixonOptions::default())
    }

    pub fn compute_with(group: &Arc<Group>, options: &DixonOptions) -> Result<Self> {
        let classes = Arc::new(group.conjugacy_classes());
        dixon::build(classes, options)
    }

    /// Table for an already computed class structure (shared with other code).
    pub fn for_classes(classes: &Arc<ConjugacyClasses>, options: &DixonOptions) -> Result<Self> {
        dixon::build(classes.clone(), options)
    }

    pub fn group(&self) -> &Arc<Group> {
        self.classes.group()
    }

    pub fn classes(&self) -> &Arc<ConjugacyClasses> {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn exponent(&self) -> u64 {
        self.group().exponent()
    }

    /// The prime used by the modular eigenvector stage.
    pub fn field_prime(&self) -> u64 {
        self.field_prime
    }

    /// Class of `g^j` for a representative `g` of class `k`, `0 <= j < e`.
    pub fn power_map(&self, k: usize, j: usize) -> usize {
        self.power_maps[k][j]
    }

    /// `cd(G)`, ascending.
    pub fn degree_set(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.irreducibles.iter().map(Character::degree).collect();
        set.into_iter().collect()
    }

    pub fn linear(&self) -> impl Iterator<Item = (usize, &Character)> {
        self.irreducibles.iter().enumerate().filter(|(_, c)| c.is_linear())
    }

    pub fn nonlinear(&self) -> impl Iterator<Item = (usize, &Character)> {
        self.irreducibles.iter().enumerate().filter(|(_, c)| !c.is_linear())
    }

    /// Index of a character equal to `chi` in this table.
    pub fn position(&self, chi: &Character) -> Option<usize> {
        self.irreducibles.iter().position(|c| c == chi)
    }

    /// `⟨χ_i, χ_j⟩ = δ_ij` for all pairs.
    pub fn check_row_orthogonality(&self) -> Result<bool> {
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let expected = if i == j { BigRational::one() } else { BigRational::zero() };
                if ip != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Σ_χ χ(g) conj(χ(h)) = |C_G(g)| δ_{g~h}` for all class pairs.
    pub fn check_column_orthogonality(&self) -> Result<bool> {
        let n = self.classes.len();
        let conj: Vec<Character> = self.irreducibles.iter().map(Character::conj).collect();
        for a in 0..n {
            for b in a..n {
                let mut acc = crate::Cyclotomic::zero(self.exponent() as u32)?;
                for (chi, chibar) in self.irreducibles.iter().zip(&conj) {
                    acc = &acc + &(chi.value(a) * chibar.value(b));
                }
                let expected = if a == b { self.classes.centralizer_order(a) as i64 } else { 0 };
                if acc.as_rational() != Some(BigRational::from_integer(expected.into())) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
