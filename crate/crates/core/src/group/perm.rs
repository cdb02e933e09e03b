use std::fmt;
use std::sync::Arc;

use super::Group;
use crate::error::{input, Result};

/// A permutation of `{0, …, degree-1}` stored as its image list.
///
/// Products compose left to right: `(x * y)(i) = y(x(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return input(format!("images {images:?} do not form a bijection")),
            }
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles written on points `1..=degree`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point as usize > degree {
                    return input(format!("point {point} outside 1..={degree}"));
                }
                let p = point as usize - 1;
                if touched[p] {
                    return input(format!("point {point} appears twice; cycles must be disjoint"));
                }
                touched[p] = true;
                let next = cycle[(k + 1) % cycle.len()] as usize - 1;
                if next >= degree {
                    return input(format!("point {} outside 1..={degree}", next + 1));
                }
                images[p] = next as u32;
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// Disjoint cycles on points `1..=degree`, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.0[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl Group {
    /// Closes a set of permutations of `{1..degree}` under composition.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Arc<Group>> {
        if degree == 0 {
            return input("permutation degree must be positive");
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return input(format!("generator {bad} has degree {} not {degree}", bad.degree()));
        }
        let gens = generators.iter().enumerate().map(|(i, g)| (format!("g{}", i + 1), g.clone())).collect();
        Group::enumerate(
            name,
            Permutation::identity(degree),
            gens,
            |a: &Permutation, b: &Permutation| a.compose(b),
            |p| p.to_string(),
            cap,
        )
    }
}
