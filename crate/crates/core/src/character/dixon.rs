//! Dixon–Schneider: common eigenvectors of the class matrices over `F_q`,
//! lifted to exact cyclotomic values through eigenvalue multiplicities.

use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rayon::prelude::*;

use super::{Character, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{internal, Error, Result};
use crate::group::ConjugacyClasses;
use crate::modp::{dixon_prime, PrimeField};

/// How common eigenspaces are refined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitStrategy {
    /// Class matrices one at a time, in index order or the given order.
    Sequential { order: Option<Vec<usize>> },
    /// A few seeded random combinations of class matrices first, then the
    /// sequential pass for whatever is left unsplit.
    RandomCombination { seed: u64, rounds: usize },
}

#[derive(Clone, Debug)]
pub struct DixonOptions {
    pub strategy: SplitStrategy,
    /// Worker threads for the class-coefficient stage; 1 runs inline.
    pub parallel: usize,
    /// Exclusive upper bound for the modular prime search.
    pub prime_bound: u64,
}

impl Default for DixonOptions {
    fn default() -> Self {
        DixonOptions { strategy: SplitStrategy::Sequential { order: None }, parallel: 1, prime_bound: 1 << 31 }
    }
}

/// `a_ijk = #{(x, y) ∈ C_i × C_j : xy = z_k}` for a fixed `z_k ∈ C_k`.
struct ClassCoefficients {
    r: usize,
    /// Indexed `[k][i][j]`.
    data: Vec<u32>,
}

impl ClassCoefficients {
    fn compute(classes: &ConjugacyClasses, parallel: usize) -> Result<Self> {
        let g = classes.group();
        let r = classes.len();
        let column = |k: usize| {
            let z = classes.representative(k);
            let mut block = vec![0u32; r * r];
            for x in 0..g.order() {
                let y = g.mul(g.inv(x), z);
                block[classes.class_of(x) * r + classes.class_of(y)] += 1;
            }
            block
        };
        let blocks: Vec<Vec<u32>> = if parallel > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(parallel)
                .build()
                .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
            pool.install(|| (0..r).into_par_iter().map(column).collect())
        } else {
            (0..r).map(column).collect()
        };
        Ok(ClassCoefficients { r, data: blocks.concat() })
    }

    #[inline]
    fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(k * self.r + i) * self.r + j]
    }

    /// `(M_i v)_j = Σ_k a_ijk v_k`.
    fn apply(&self, f: &PrimeField, i: usize, v: &[u64]) -> Vec<u64> {
        (0..self.r)
            .map(|j| (0..self.r).fold(0u64, |acc, k| f.add(acc, f.mul(self.get(i, j, k) as u64 % f.modulus(), v[k]))))
            .collect()
    }
}

/// A common eigenspace, stored as reduced row-echelon basis rows.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Splits `w` into eigenspaces of the operator `apply`.
fn split(f: &PrimeField, w: Space, apply: &dyn Fn(&[u64]) -> Vec<u64>) -> Result<Vec<Space>> {
    let k = w.dim();
    // matrix of the restricted operator in the basis of w
    let images: Vec<Vec<u64>> = w.basis.iter().map(|b| apply(b)).collect();
    let mut a = vec![0u64; k * k];
    for (l, img) in images.iter().enumerate() {
        for (m, &p) in w.pivots.iter().enumerate() {
            a[m * k + l] = img[p];
        }
    }
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..f.modulus() {
        if found == k {
            break;
        }
        let mut shifted = a.clone();
        for d in 0..k {
            shifted[d * k + d] = f.sub(shifted[d * k + d], lambda);
        }
        let ns = f.nullspace(&shifted, k, k);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        let vectors: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                let mut v = vec![0u64; w.basis[0].len()];
                for (cl, b) in c.iter().zip(&w.basis) {
                    if *cl != 0 {
                        for (vi, bi) in v.iter_mut().zip(b) {
                            *vi = f.add(*vi, f.mul(*cl, *bi));
                        }
                    }
                }
                v
            })
            .collect();
        let (basis, pivots) = f.row_reduce(vectors);
        parts.push(Space { basis, pivots });
    }
    if found != k {
        return internal(format!(
            "class matrix not diagonalisable on a {k}-dimensional eigenspace over F_{}",
            f.modulus()
        ));
    }
    Ok(parts)
}

fn refine(f: &PrimeField, spaces: Vec<Space>, apply: &dyn Fn(&[u64]) -> Vec<u64>) -> Result<Vec<Space>> {
    let mut out = Vec::with_capacity(spaces.len());
    for s in spaces {
        if s.dim() == 1 {
            out.push(s);
        } else {
            out.extend(split(f, s, apply)?);
        }
    }
    Ok(out)
}

pub(super) fn build(classes: Arc<ConjugacyClasses>, options: &DixonOptions) -> Result<CharacterTable> {
    let group = classes.group().clone();
    let n = group.order() as u64;
    let e = group.exponent();
    let r = classes.len();
    let q = dixon_prime(e, n, options.prime_bound).ok_or_else(|| {
        Error::Resource(format!("no prime q ≡ 1 (mod {e}) with q > 2·sqrt({n}) below {}", options.prime_bound))
    })?;
    let f = PrimeField::new(q);
    let coeffs = ClassCoefficients::compute(&classes, options.parallel.max(1))?;

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces = vec![Space { basis: identity, pivots: (0..r).collect() }];

    let mut order: Vec<usize> = (1..r).collect();
    match &options.strategy {
        SplitStrategy::Sequential { order: Some(custom) } => {
            if custom.iter().any(|&i| i >= r) {
                return Err(Error::Input(format!("split order mentions a class >= {r}")));
            }
            order = custom.clone();
        }
        SplitStrategy::Sequential { order: None } => {}
        SplitStrategy::RandomCombination { seed, rounds } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            for _ in 0..*rounds {
                if spaces.iter().all(|s| s.dim() == 1) {
                    break;
                }
                let weights: Vec<u64> = (0..r).map(|_| rng.random_range(0..q)).collect();
                let apply = |v: &[u64]| {
                    let mut acc = vec![0u64; r];
                    for (i, &w) in weights.iter().enumerate().skip(1) {
                        if w == 0 {
                            continue;
                        }
                        for (a, x) in acc.iter_mut().zip(coeffs.apply(&f, i, v)) {
                            *a = f.add(*a, f.mul(w, x));
                        }
                    }
                    acc
                };
                spaces = refine(&f, spaces, &apply)?;
            }
        }
    }
    for &i in &order {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        spaces = refine(&f, spaces, &|v: &[u64]| coeffs.apply(&f, i, v))?;
    }
    if spaces.iter().any(|s| s.dim() > 1) {
        return internal("class matrices did not split the class algebra completely");
    }
    if spaces.len() != r {
        return internal(format!("found {} central characters for {r} classes", spaces.len()));
    }

    let power_maps: Vec<Vec<usize>> = (0..r)
        .map(|k| {
            let g = classes.representative(k);
            let mut out = Vec::with_capacity(e as usize);
            let mut x = 0;
            for _ in 0..e {
                out.push(classes.class_of(x));
                x = group.mul(x, g);
            }
            out
        })
        .collect();

    let z = f.root_of_unity(e).expect("q ≡ 1 mod e");
    let z_inv = f.inv(z).expect("unit");
    let e_inv = f.inv(e % q).expect("q does not divide e");
    let sizes: Vec<u64> = (0..r).map(|k| classes.size(k) as u64 % q).collect();

    let mut characters = Vec::with_capacity(r);
    for space in &spaces {
        let v = &space.basis[0];
        let Some(v0_inv) = f.inv(v[0]) else {
            return internal("central character vanishes at the identity class");
        };
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, v0_inv)).collect();
        let mut s = 0u64;
        for k in 0..r {
            let term = f.mul(omega[k], omega[classes.inverse_class(k)]);
            s = f.add(s, f.mul(term, f.inv(sizes[k]).expect("q does not divide class sizes")));
        }
        let Some(s_inv) = f.inv(s) else {
            return internal("degenerate degree equation");
        };
        let d_sq = f.mul(n % q, s_inv);
        let max_d = (n as f64).sqrt() as u64 + 1;
        let Some(degree) = (1..=max_d).find(|&d| n.is_multiple_of(d) && f.mul(d % q, d % q) == d_sq) else {
            return internal(format!("no degree with square ≡ {d_sq} mod {q}"));
        };
        let theta: Vec<u64> = (0..r)
            .map(|k| {
                let inv_size = f.inv(sizes[k]).expect("unit");
                f.mul(f.mul(omega[k], degree % q), inv_size)
            })
            .collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let mut mult = vec![0i64; e as usize];
            let mut total = 0u64;
            for (t, m) in mult.iter_mut().enumerate() {
                let step = f.pow(z_inv, t as u64);
                let mut zpow = 1u64;
                let mut acc = 0u64;
                for j in 0..e as usize {
                    acc = f.add(acc, f.mul(theta[power_maps[k][j]], zpow));
                    zpow = f.mul(zpow, step);
                }
                let mt = f.mul(acc, e_inv);
                if mt > degree {
                    return internal(format!("eigenvalue multiplicity {mt} exceeds degree {degree}"));
                }
                total += mt;
                *m = mt as i64;
            }
            if total != degree {
                return internal("eigenvalue multiplicities do not sum to the degree");
            }
            values.push(Cyclotomic::from_exponent_multiplicities(e as u32, &mult)?);
        }
        characters.push(Character { classes: classes.clone(), values, irreducible: true });
    }
    characters.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.values.cmp(&b.values)));
    let sum_sq: u64 = characters.iter().map(|c| c.degree() * c.degree()).sum();
    if sum_sq != n {
        return internal(format!("sum of squared degrees {sum_sq} differs from |G| = {n}"));
    }
    Ok(CharacterTable { classes, power_maps, irreducibles: characters, field_prime: q })
}
