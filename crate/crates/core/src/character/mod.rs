//! Class functions, character tables, and the operations between groups
//! (restriction, induction, inflation along quotients).

mod dixon;
mod table;

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::cyclotomic::Cyclotomic;
use crate::error::{input, internal, Result};
use crate::group::{ConjugacyClasses, QuotientMap, Subgroup, SubgroupView};

pub use dixon::{DixonOptions, SplitStrategy};
pub use table::CharacterTable;

/// A class function with values in `ℚ(ζ_e)`, `e` the group exponent.
#[derive(Clone)]
pub struct Character {
    classes: Arc<ConjugacyClasses>,
    values: Vec<Cyclotomic>,
    irreducible: bool,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Character").field("degree", &self.values[0]).field("values", &self.values).finish()
    }
}

/// Same group classes and identical values.
impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes) && self.values == other.values
    }
}

impl Character {
    /// Builds a class function from per-class values, re-embedding them at
    /// the group exponent.
    pub fn new(classes: &Arc<ConjugacyClasses>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != classes.len() {
            return input(format!("{} values for {} classes", values.len(), classes.len()));
        }
        let e = classes.group().exponent() as u32;
        let values = values.iter().map(|v| v.embed(e)).collect::<Result<_>>()?;
        Ok(Character { classes: classes.clone(), values, irreducible: false })
    }

    pub(crate) fn mark_irreducible(mut self) -> Self {
        self.irreducible = true;
        self
    }

    pub fn trivial(classes: &Arc<ConjugacyClasses>) -> Self {
        let one = Cyclotomic::integer(1);
        Character::new(classes, vec![one; classes.len()]).expect("valid").mark_irreducible()
    }

    /// `|G|` at the identity, zero elsewhere.
    pub fn regular(classes: &Arc<ConjugacyClasses>) -> Self {
        let mut values = vec![Cyclotomic::integer(0); classes.len()];
        values[0] = Cyclotomic::integer(classes.group().order() as i64);
        Character::new(classes, values).expect("valid")
    }

    pub fn classes(&self) -> &Arc<ConjugacyClasses> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Value on class `k`.
    pub fn value(&self, k: usize) -> &Cyclotomic {
        &self.values[k]
    }

    /// Value at an element.
    pub fn at(&self, x: usize) -> &Cyclotomic {
        &self.values[self.classes.class_of(x)]
    }

    /// `χ(1)` as a rational (a positive integer for genuine characters).
    pub fn degree_rational(&self) -> BigRational {
        self.values[0].as_rational().expect("value at identity is rational")
    }

    /// `χ(1)`; panics if the identity value is not a nonnegative integer.
    pub fn degree(&self) -> u64 {
        let d = self.degree_rational();
        assert!(d.is_integer(), "non-integral degree {d}");
        d.to_integer().to_u64().expect("nonnegative degree")
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn is_linear(&self) -> bool {
        self.degree_rational().is_one()
    }

    fn same_group(&self, other: &Character) -> Result<()> {
        if !Arc::ptr_eq(&self.classes, &other.classes) {
            return input("characters belong to different class structures");
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Character) -> Result<Character> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Character { classes: self.classes.clone(), values, irreducible: false })
    }

    pub fn scale(&self, r: &BigRational) -> Character {
        Character {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
            irreducible: false,
        }
    }

    /// Pointwise product (tensor product of representations).
    pub fn try_mul(&self, other: &Character) -> Result<Character> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(Character { classes: self.classes.clone(), values, irreducible: false })
    }

    pub fn conj(&self) -> Character {
        Character {
            classes: self.classes.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
            irreducible: self.irreducible,
        }
    }

    /// `⟨χ, ψ⟩ = |G|⁻¹ Σ_g χ(g) conj(ψ(g))`.
    pub fn inner_product(&self, other: &Character) -> Result<BigRational> {
        self.same_group(other)?;
        let e = self.classes.group().exponent() as u32;
        let mut acc = Cyclotomic::zero(e)?;
        for k in 0..self.classes.len() {
            let term = &self.values[k] * &other.values[k].conj();
            acc = &acc + &term.scale_int(self.classes.size(k) as i64);
        }
        match acc.as_rational() {
            Some(r) => Ok(r / BigRational::from_integer(self.classes.group().order().into())),
            None => internal(format!("inner product is not rational: {acc}")),
        }
    }

    /// Elements where the value equals the degree.
    pub fn kernel(&self) -> Subgroup {
        let deg = &self.values[0];
        let members = self.members_where(|v| v == deg);
        Subgroup::new(self.classes.group(), members).expect("kernel is a subgroup")
    }

    /// `Z(χ) = {g : |χ(g)| = χ(1)}`.
    pub fn centre(&self) -> Subgroup {
        let d2 = self.values[0].abs_squared();
        let members = self.members_where(|v| v.abs_squared() == d2);
        Subgroup::new(self.classes.group(), members).expect("character centre is a subgroup")
    }

    fn members_where(&self, pred: impl Fn(&Cyclotomic) -> bool) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.classes.len())
            .filter(|&k| pred(&self.values[k]))
            .flat_map(|k| self.classes.members(k).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether every value outside `h` is zero.
    pub fn vanishes_off(&self, h: &Subgroup) -> bool {
        (0..self.classes.len())
            .filter(|&k| !h.contains(self.classes.representative(k)))
            .all(|k| self.values[k].is_zero())
    }

    /// First class outside `h` with a nonzero value.
    pub fn nonvanishing_class_off(&self, h: &Subgroup) -> Option<usize> {
        (0..self.classes.len()).find(|&k| !h.contains(self.classes.representative(k)) && !self.values[k].is_zero())
    }

    /// Restriction to a subgroup; `sub_classes` must be the classes of `view.group()`.
    pub fn restrict(&self, view: &SubgroupView, sub_classes: &Arc<ConjugacyClasses>) -> Result<Character> {
        if !Arc::ptr_eq(view.parent(), self.classes.group()) {
            return input("restriction to a subgroup of a different group");
        }
        if !Arc::ptr_eq(sub_classes.group(), view.group()) {
            return input("class data does not belong to the subgroup");
        }
        let e = view.group().exponent() as u32;
        let values = (0..sub_classes.len())
            .map(|k| {
                let v = self.at(view.embed(sub_classes.representative(k)));
                v.descend(e)?.ok_or_else(|| crate::Error::Internal(format!("restricted value {v} outside Q(zeta_{e})")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Character { classes: sub_classes.clone(), values, irreducible: false })
    }

    /// Induction from a subgroup over a right transversal:
    /// `λ^G(g) = Σ_{t∈T} λ°(t g t⁻¹)`.
    pub fn induce(&self, view: &SubgroupView, target: &Arc<ConjugacyClasses>) -> Result<Character> {
        if !Arc::ptr_eq(self.classes.group(), view.group()) {
            return input("character does not live on the given subgroup");
        }
        if !Arc::ptr_eq(target.group(), view.parent()) {
            return input("target classes do not belong to the parent group");
        }
        let g = view.parent();
        let h = view.subgroup();
        // right transversal: one representative per coset Hx
        let mut seen = vec![false; g.order()];
        let mut transversal = Vec::with_capacity(h.index());
        for x in 0..g.order() {
            if !seen[x] {
                transversal.push(x);
                for &m in h.members() {
                    seen[g.mul(m, x)] = true;
                }
            }
        }
        let e = g.exponent() as u32;
        let lifted: Vec<Cyclotomic> = self.values.iter().map(|v| v.embed(e)).collect::<Result<_>>()?;
        let mut values = Vec::with_capacity(target.len());
        for k in 0..target.len() {
            let rep = target.representative(k);
            let mut acc = Cyclotomic::zero(e)?;
            for &t in &transversal {
                // t g t⁻¹ = conjugate(g, t⁻¹)
                let y = g.conjugate(rep, g.inv(t));
                if let Some(inner) = view.locate(y) {
                    acc = &acc + &lifted[self.classes.class_of(inner)];
                }
            }
            values.push(acc);
        }
        Ok(Character { classes: target.clone(), values, irreducible: false })
    }

    /// Inflation of a character of `G/N` to `G`.
    pub fn lift(&self, qm: &QuotientMap, source: &Arc<ConjugacyClasses>) -> Result<Character> {
        if !Arc::ptr_eq(self.classes.group(), qm.target()) {
            return input("character does not live on the quotient");
        }
        if !Arc::ptr_eq(source.group(), qm.source()) {
            return input("class data does not belong to the source group");
        }
        let e = source.group().exponent() as u32;
        let values =
            (0..source.len()).map(|k| self.at(qm.project(source.representative(k))).embed(e)).collect::<Result<_>>()?;
        Ok(Character { classes: source.clone(), values, irreducible: self.irreducible })
    }

    /// The character of `G/N` this one inflates from, if `N ⊆ ker χ`.
    pub fn deflate(&self, qm: &QuotientMap, target: &Arc<ConjugacyClasses>) -> Result<Option<Character>> {
        if !Arc::ptr_eq(self.classes.group(), qm.source()) {
            return input("character does not live on the quotient's source");
        }
        if !Arc::ptr_eq(target.group(), qm.target()) {
            return input("class data does not belong to the quotient");
        }
        let deg = &self.values[0];
        if !qm.kernel().members().iter().all(|&n| self.at(n) == deg) {
            return Ok(None);
        }
        let e = target.group().exponent() as u32;
        let values = (0..target.len())
            .map(|k| {
                let v = self.at(qm.preimage(target.representative(k)));
                v.descend(e)?.ok_or_else(|| crate::Error::Internal(format!("deflated value {v} outside Q(zeta_{e})")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(Character { classes: target.clone(), values, irreducible: self.irreducible }))
    }

    /// Multiplicities of the given irreducibles in this character.
    pub fn decompose(&self, irreducibles: &[Character]) -> Result<Vec<BigRational>> {
        irreducibles.iter().map(|chi| self.inner_product(chi)).collect()
    }

    /// Whether the character is the zero class function.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }
}

/// Exact `√n` for perfect squares.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}
