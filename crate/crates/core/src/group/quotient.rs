use std::sync::Arc;

use super::{Group, Subgroup, DEFAULT_ORDER_CAP};
use crate::error::{input, Result};

/// The natural projection `G → G/N`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Arc<Group>,
    kernel: Subgroup,
    target: Arc<Group>,
    projection: Vec<usize>,
    /// Smallest source element of each target coset.
    section: Vec<usize>,
}

impl QuotientMap {
    pub fn source(&self) -> &Arc<Group> {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    /// A fixed preimage of a target element.
    pub fn preimage(&self, y: usize) -> usize {
        self.section[y]
    }

    /// Image of a source subgroup.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let mut mask = vec![false; self.target.order()];
        let mut members = Vec::new();
        for &x in h.members() {
            let y = self.projection[x];
            if !mask[y] {
                mask[y] = true;
                members.push(y);
            }
        }
        Subgroup::new(&self.target, members).expect("homomorphic image is a subgroup")
    }

    /// Full preimage of a target subgroup.
    pub fn preimage_of(&self, h: &Subgroup) -> Subgroup {
        let members = (0..self.source.order()).filter(|&x| h.contains(self.projection[x]));
        Subgroup::new(&self.source, members).expect("preimage is a subgroup")
    }
}

impl Group {
    /// `G/N` on cosets, multiplying via coset representatives.
    pub fn quotient(self: &Arc<Self>, normal: &Subgroup) -> Result<QuotientMap> {
        if !Arc::ptr_eq(normal.parent(), self) {
            return input("quotient by a subgroup of a different group");
        }
        if let Some((g, n)) = normal.normality_witness() {
            return input(format!(
                "subgroup {} is not normal: {}^-1 * {} * {} leaves it",
                normal.describe(),
                self.label(g),
                self.label(n),
                self.label(g)
            ));
        }
        let n = self.order();
        let mut coset_min = vec![usize::MAX; n];
        for x in 0..n {
            if coset_min[x] == usize::MAX {
                for &k in normal.members() {
                    coset_min[self.mul(x, k)] = x;
                }
            }
        }
        let src = self.clone();
        let lookup = Arc::new(coset_min.clone());
        let lookup2 = lookup.clone();
        let gens: Vec<(String, usize)> = self
            .generators()
            .iter()
            .zip(self.generator_names())
            .map(|(&g, name)| (name.clone(), coset_min[g]))
            .collect();
        let src2 = self.clone();
        let target = Group::enumerate(
            format!("{}/{}", self.name(), normal.describe()),
            0usize,
            gens,
            move |a: &usize, b: &usize| lookup[src.mul(*a, *b)],
            move |a: &usize| format!("{}N", src2.label(lookup2[*a])),
            DEFAULT_ORDER_CAP,
        )?;
        // Recover which coset each target index stands for by replaying words.
        let mut section = vec![0usize; target.order()];
        let mut rep_to_target = vec![usize::MAX; n];
        rep_to_target[0] = 0;
        for y in 1..target.order() {
            let (parent, slot) = target.tree[y];
            let g = self.generators()[slot as usize];
            section[y] = coset_min[self.mul(section[parent as usize], g)];
            rep_to_target[section[y]] = y;
        }
        let projection = (0..n).map(|x| rep_to_target[coset_min[x]]).collect();
        Ok(QuotientMap { source: self.clone(), kernel: normal.clone(), target, projection, section })
    }
}
