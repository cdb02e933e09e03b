//! Concrete finite groups given by full element enumeration.
//!
//! Every group is a set of element indices `0..order` with index 0 the
//! identity. Elements are discovered breadth-first from the generators, so
//! the index order is deterministic for a given generator list. Products are
//! served from a dense table for small groups and computed from the
//! underlying representation otherwise.

mod classes;
mod perm;
mod quotient;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use classes::ConjugacyClasses;
pub use perm::Permutation;
pub use quotient::QuotientMap;
pub use subgroup::{Subgroup, SubgroupView};

/// Largest order for which the full multiplication table is stored.
pub const DENSE_TABLE_LIMIT: usize = 4096;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

type MulFn = dyn Fn(usize, usize) -> usize + Send + Sync;

enum MulOracle {
    Dense(Vec<u32>),
    OnDemand(Box<MulFn>),
}

/// A finite group with enumerated elements.
pub struct Group {
    name: String,
    order: usize,
    mul: MulOracle,
    inverse: Vec<u32>,
    element_orders: Vec<u32>,
    exponent: u64,
    generators: Vec<usize>,
    generator_names: Vec<String>,
    /// Breadth-first spanning tree: (parent element, generator slot).
    tree: Vec<(u32, u16)>,
    descriptions: Vec<String>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("generators", &self.generator_names)
            .finish()
    }
}

impl Group {
    /// Enumerates the group generated by `generators` under `op`.
    ///
    /// Elements are discovered breadth-first, right-multiplying by the
    /// generators in input order; the identity comes first.
    pub fn enumerate<T, F, D>(
        name: impl Into<String>,
        identity: T,
        generators: Vec<(String, T)>,
        op: F,
        describe: D,
        cap: usize,
    ) -> Result<Arc<Group>>
    where
        T: Clone + Eq + Hash + Send + Sync + 'static,
        F: Fn(&T, &T) -> T + Send + Sync + 'static,
        D: Fn(&T) -> String,
    {
        if generators.len() > u16::MAX as usize {
            return Err(Error::Input("too many generators".into()));
        }
        let ngens = generators.len();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut tree = vec![(0u32, 0u16)];
        let mut right_gen: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for (slot, (_, g)) in generators.iter().enumerate() {
                let prod = op(&elements[head], g);
                let idx = match index.get(&prod) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::Resource(format!("group closure exceeds the cap of {cap} elements")));
                        }
                        let i = elements.len() as u32;
                        index.insert(prod.clone(), i);
                        elements.push(prod);
                        tree.push((head as u32, slot as u16));
                        i
                    }
                };
                right_gen.push(idx);
            }
            head += 1;
        }
        let order = elements.len();
        let generator_indices: Vec<usize> = generators.iter().map(|(_, g)| index[g] as usize).collect();
        let generator_names = generators.into_iter().map(|(n, _)| n).collect();
        let descriptions = elements.iter().map(describe).collect();

        let mul = if order <= DENSE_TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for x in 0..order {
                let row = x * order;
                table[row] = x as u32;
                for y in 1..order {
                    let (parent, slot) = tree[y];
                    let partial = table[row + parent as usize] as usize;
                    table[row + y] = right_gen[partial * ngens + slot as usize];
                }
            }
            MulOracle::Dense(table)
        } else {
            MulOracle::OnDemand(Box::new(move |a, b| index[&op(&elements[a], &elements[b])] as usize))
        };

        let mut group = Group {
            name: name.into(),
            order,
            mul,
            inverse: Vec::new(),
            element_orders: Vec::new(),
            exponent: 1,
            generators: generator_indices,
            generator_names,
            tree,
            descriptions,
        };
        group.fill_orders();
        Ok(Arc::new(group))
    }

    fn fill_orders(&mut self) {
        let mut inverse = vec![0u32; self.order];
        let mut orders = vec![1u32; self.order];
        let mut exponent = 1u64;
        for x in 1..self.order {
            let mut prev = x;
            let mut power = x;
            let mut k = 1u32;
            while power != 0 {
                prev = power;
                power = self.mul(power, x);
                k += 1;
            }
            orders[x] = k;
            inverse[x] = prev as u32;
            exponent = exponent.lcm(&(k as u64));
        }
        self.inverse = inverse;
        self.element_orders = orders;
        self.exponent = exponent;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            MulOracle::Dense(t) => t[a * self.order + b] as usize,
            MulOracle::OnDemand(f) => f(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let k = k % self.element_orders[x] as u64;
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> u32 {
        self.element_orders[x]
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.mul, MulOracle::Dense(_))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Representation-level description of an element (permutation cycles,
    /// exponent vector, ...).
    pub fn describe(&self, x: usize) -> &str {
        &self.descriptions[x]
    }

    /// A word in the generators evaluating to `x`, with runs collapsed to powers.
    pub fn label(&self, x: usize) -> String {
        if x == 0 {
            return "1".to_string();
        }
        let mut slots = Vec::new();
        let mut cur = x;
        while cur != 0 {
            let (parent, slot) = self.tree[cur];
            slots.push(slot as usize);
            cur = parent as usize;
        }
        slots.reverse();
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < slots.len() {
            let mut j = i;
            while j < slots.len() && slots[j] == slots[i] {
                j += 1;
            }
            let name = &self.generator_names[slots[i]];
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }

    /// Exhaustive associativity check for small groups; seeded sampling otherwise.
    pub fn check_associativity(&self, samples: usize) -> bool {
        let n = self.order;
        if n <= 200 {
            return (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = self.mul(a, b);
                    (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
                })
            });
        }
        use rand::{RngExt, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        (0..samples).all(|_| {
            let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }
}
