use std::fmt;
use std::sync::Arc;

use super::{ConjugacyClasses, Group, DEFAULT_ORDER_CAP};
use crate::error::{input, Error, Result};

/// A subgroup of a parent group, stored as a sorted list of element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.order(), self.parent.name())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_mask(parent: &Arc<Group>, mask: Vec<bool>) -> Self {
        let members = mask.iter().enumerate().filter_map(|(i, &m)| m.then_some(i)).collect();
        Subgroup { parent: parent.clone(), members, mask }
    }

    /// Wraps a member set, checking that it really is a subgroup.
    pub fn new(parent: &Arc<Group>, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; parent.order()];
        for m in members {
            if m >= parent.order() {
                return input(format!("element {m} outside group of order {}", parent.order()));
            }
            mask[m] = true;
        }
        let sub = Subgroup::from_mask(parent, mask);
        if !sub.contains(0) {
            return input("subset does not contain the identity");
        }
        for &a in &sub.members {
            if !sub.contains(parent.inv(a)) {
                return input(format!("subset not closed under inverse at {}", parent.label(a)));
            }
            for &b in &sub.members {
                if !sub.contains(parent.mul(a, b)) {
                    return input(format!(
                        "subset not closed under products: {} * {}",
                        parent.label(a),
                        parent.label(b)
                    ));
                }
            }
        }
        Ok(sub)
    }

    pub fn trivial(parent: &Arc<Group>) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Subgroup::from_mask(parent, mask)
    }

    pub fn whole(parent: &Arc<Group>) -> Self {
        Subgroup::from_mask(parent, vec![true; parent.order()])
    }

    /// Smallest subgroup containing `elements`.
    pub fn generated_by(parent: &Arc<Group>, elements: &[usize]) -> Self {
        let mut sub = Subgroup::trivial(parent);
        let mut gens: Vec<usize> = Vec::new();
        for &s in elements {
            if sub.contains(s) {
                continue;
            }
            gens.push(s);
            sub.close_under(&gens);
        }
        sub
    }

    /// Extends the member set to the closure under right multiplication by `gens`.
    fn close_under(&mut self, gens: &[usize]) {
        let g = self.parent.clone();
        let mut queue = self.members.clone();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens {
                let y = g.mul(x, s);
                if !self.mask[y] {
                    self.mask[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        self.members = queue;
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// `[parent : self]`.
    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = (0..self.parent.order()).map(|i| self.mask[i] && other.mask[i]).collect();
        Subgroup::from_mask(&self.parent, mask)
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.small_generating_set();
        gens.extend(other.small_generating_set());
        Subgroup::generated_by(&self.parent, &gens)
    }

    /// A generating set chosen greedily in element-index order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut sub = Subgroup::trivial(&self.parent);
        let mut gens = Vec::new();
        for &x in &self.members {
            if !sub.contains(x) {
                gens.push(x);
                sub.close_under(&gens);
            }
        }
        gens
    }

    /// `⟨w1, w2, …⟩` using generator-word labels.
    pub fn describe(&self) -> String {
        let gens = self.small_generating_set();
        let words: Vec<String> = gens.iter().map(|&g| self.parent.label(g)).collect();
        format!("<{}>", words.join(", "))
    }

    /// Returns a pair `(g, n)` with `g⁻¹ n g ∉ self` if the subgroup is not normal.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let g = &self.parent;
        for &s in g.generators() {
            for &n in &self.members {
                if !self.contains(g.conjugate(n, s)) {
                    return Some((s, n));
                }
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    /// The left coset `x·self` as a sorted element list.
    pub fn coset(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.members.iter().map(|&n| self.parent.mul(x, n)).collect();
        out.sort_unstable();
        out
    }

    /// The subgroup as a group in its own right, with the embedding into the parent.
    pub fn view(&self) -> SubgroupView {
        let parent = self.parent.clone();
        let gens = self.small_generating_set();
        let named: Vec<(String, usize)> = gens.iter().map(|&g| (parent.label(g), g)).collect();
        let p = parent.clone();
        let p2 = parent.clone();
        let group = Group::enumerate(
            format!("{} in {}", self.describe(), parent.name()),
            0usize,
            named,
            move |a: &usize, b: &usize| p.mul(*a, *b),
            move |a: &usize| p2.label(*a),
            DEFAULT_ORDER_CAP,
        )
        .expect("subgroup closure is bounded by the parent order");
        // Replay the breadth-first construction to recover parent indices.
        let mut embedding = vec![0usize; group.order()];
        let mut locate = vec![usize::MAX; parent.order()];
        for i in 1..group.order() {
            let (parent_idx, slot) = group.tree[i];
            embedding[i] = parent.mul(embedding[parent_idx as usize], gens[slot as usize]);
        }
        for (i, &e) in embedding.iter().enumerate() {
            locate[e] = i;
        }
        SubgroupView { subgroup: self.clone(), group, embedding, locate }
    }
}

/// A subgroup materialised as its own [`Group`], with index maps both ways.
#[derive(Clone, Debug)]
pub struct SubgroupView {
    subgroup: Subgroup,
    group: Arc<Group>,
    embedding: Vec<usize>,
    locate: Vec<usize>,
}

impl SubgroupView {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn parent(&self) -> &Arc<Group> {
        self.subgroup.parent()
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    /// Parent index of a subgroup element.
    pub fn embed(&self, x: usize) -> usize {
        self.embedding[x]
    }

    /// Subgroup index of a parent element, if it is a member.
    pub fn locate(&self, x: usize) -> Option<usize> {
        match self.locate[x] {
            usize::MAX => None,
            i => Some(i),
        }
    }
}

impl Group {
    pub fn center(self: &Arc<Self>) -> Subgroup {
        let mask =
            (0..self.order()).map(|z| self.generators().iter().all(|&g| self.mul(z, g) == self.mul(g, z))).collect();
        Subgroup::from_mask(self, mask)
    }

    pub fn centralizer(self: &Arc<Self>, x: usize) -> Subgroup {
        let mask = (0..self.order()).map(|g| self.mul(g, x) == self.mul(x, g)).collect();
        Subgroup::from_mask(self, mask)
    }

    /// `[H, K]`, the subgroup generated by all `[h, k]`.
    pub fn commutator_subgroup(self: &Arc<Self>, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(h.parent(), self) || !Arc::ptr_eq(k.parent(), self) {
            return input("commutator subgroup of subgroups from different groups");
        }
        let mut sub = Subgroup::trivial(self);
        let mut gens = Vec::new();
        for &a in h.members() {
            for &b in k.members() {
                let c = self.commutator(a, b);
                if !sub.contains(c) {
                    gens.push(c);
                    sub.close_under(&gens);
                }
            }
        }
        Ok(sub)
    }

    /// `G' = [G, G]`.
    pub fn derived_subgroup(self: &Arc<Self>) -> Subgroup {
        let whole = Subgroup::whole(self);
        self.commutator_subgroup(&whole, &whole).expect("same parent by construction")
    }

    /// Lower central series `G = γ₁ ⊇ γ₂ ⊇ …`, stopped when it stabilises.
    pub fn lower_central_series(self: &Arc<Self>) -> Vec<Subgroup> {
        let whole = Subgroup::whole(self);
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_subgroup(last, &whole).expect("same parent by construction");
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    /// Length of the lower central series down to the trivial subgroup.
    pub fn nilpotency_class(self: &Arc<Self>) -> Result<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().is_trivial() {
            Ok(series.len() - 1)
        } else {
            Err(Error::NotNilpotent)
        }
    }

    pub fn conjugacy_classes(self: &Arc<Self>) -> ConjugacyClasses {
        ConjugacyClasses::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    fn s3() -> Arc<Group> {
        Group::from_permutations(
            "S3",
            3,
            &[
                Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
                Permutation::from_cycles(3, &[vec![1, 2]]).unwrap(),
            ],
            DEFAULT_ORDER_CAP,
        )
        .unwrap()
    }

    #[test]
    fn s3_structure() {
        let g = s3();
        assert!(g.center().is_trivial());
        assert_eq!(g.derived_subgroup().order(), 3);
        assert!(g.derived_subgroup().is_normal());
        assert_eq!(g.nilpotency_class(), Err(Error::NotNilpotent));
        let transposition = g.generators()[1];
        assert_eq!(g.centralizer(transposition).order(), 2);
        assert_eq!(g.centralizer(0).order(), 6);
    }

    #[test]
    fn non_normal_subgroup_has_witness() {
        let g = s3();
        let h = Subgroup::generated_by(&g, &[g.generators()[1]]);
        assert_eq!(h.order(), 2);
        let (s, n) = h.normality_witness().unwrap();
        assert!(!h.contains(g.conjugate(n, s)));
    }

    #[test]
    fn new_rejects_non_subgroups() {
        let g = s3();
        assert!(Subgroup::new(&g, [0, 1]).is_err());
        assert!(Subgroup::new(&g, [1]).is_err());
        assert!(Subgroup::new(&g, [0]).is_ok());
    }

    #[test]
    fn commutator_of_foreign_subgroups_is_an_error() {
        let g = s3();
        let other = s3();
        let r = g.commutator_subgroup(&Subgroup::whole(&g), &Subgroup::whole(&other));
        assert!(matches!(r, Err(Error::Input(_))));
    }

    #[test]
    fn view_embeds_faithfully() {
        let g = s3();
        let a3 = g.derived_subgroup();
        let v = a3.view();
        assert_eq!(v.group().order(), 3);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(v.embed(v.group().mul(x, y)), g.mul(v.embed(x), v.embed(y)));
            }
            assert_eq!(v.locate(v.embed(x)), Some(x));
        }
        assert_eq!(v.locate(g.generators()[1]), None);
    }

    #[test]
    fn coset_has_subgroup_size() {
        let g = s3();
        let a3 = g.derived_subgroup();
        let t = g.generators()[1];
        let c = a3.coset(t);
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|&x| !a3.contains(x)));
    }
}
