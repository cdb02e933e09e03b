use std::sync::Arc;

use super::Group;

/// Conjugacy classes of a group, ordered by smallest member (identity first).
#[derive(Debug)]
pub struct ConjugacyClasses {
    group: Arc<Group>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    inverse_class: Vec<usize>,
}

impl ConjugacyClasses {
    /// Orbits under conjugation by the generators.
    pub fn new(group: &Arc<Group>) -> Self {
        let n = group.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &g in group.generators() {
                    let y = group.conjugate(x, g);
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let inverse_class = classes.iter().map(|c| class_of[group.inv(c[0])] as usize).collect();
        ConjugacyClasses { group: group.clone(), classes, class_of, inverse_class }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Sorted members of class `k`.
    pub fn members(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.classes.iter().map(|c| c.as_slice())
    }

    /// Smallest element index in class `k`.
    pub fn representative(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    pub fn size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Index of the class containing inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    pub fn centralizer_order(&self, k: usize) -> usize {
        self.group.order() / self.size(k)
    }

    /// Classes whose members all satisfy `pred` on the representative.
    pub fn classes_where(&self, mut pred: impl FnMut(usize) -> bool) -> Vec<usize> {
        (0..self.len()).filter(|&k| pred(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Permutation, DEFAULT_ORDER_CAP};

    #[test]
    fn s3_classes() {
        let g = Group::from_permutations(
            "S3",
            3,
            &[
                Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
                Permutation::from_cycles(3, &[vec![1, 2]]).unwrap(),
            ],
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        let cc = g.conjugacy_classes();
        assert_eq!(cc.len(), 3);
        assert_eq!(cc.members(0), &[0]);
        let sizes: Vec<usize> = (0..3).map(|k| cc.size(k)).collect();
        // (1 2 3) is discovered before (1 2)
        assert_eq!(sizes, vec![1, 2, 3]);
        for k in 0..3 {
            assert_eq!(cc.centralizer_order(k), g.centralizer(cc.representative(k)).order());
            assert_eq!(cc.inverse_class(k), k);
        }
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = Group::enumerate(
            "C6",
            0u32,
            vec![("c".into(), 1)],
            |a, b| (a + b) % 6,
            |a| a.to_string(),
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        let cc = g.conjugacy_classes();
        assert_eq!(cc.len(), 6);
        assert_eq!(cc.inverse_class(1), cc.class_of(5));
    }
}
