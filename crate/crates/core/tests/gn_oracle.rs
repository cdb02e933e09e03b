//! G_n against an independent model: unipotent matrices over F_p of the form
//!
//! ```text
//! [1 a z]
//! [0 1 x]
//! [0 0 I]
//! ```
//!
//! with a in F_p and x, z in F_p^n. The generators go to a = 1, x = e_i and
//! z = -e_i; the product rule is the usual matrix product.

use std::collections::HashMap;

use gvz_core::constructions::gn;

type Matrix = Vec<Vec<u32>>;

fn identity(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect()
}

fn mul(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum::<u32>() % p).collect()).collect()
}

fn inverse(a: &Matrix, p: u32) -> Matrix {
    // unipotent of exponent p: a^{-1} = a^{p-1}
    (1..p).fold(identity(a.len()), |acc, _| mul(&acc, a, p))
}

fn commutator(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    mul(&mul(&inverse(a, p), &inverse(b, p), p), &mul(a, b, p), p)
}

fn generator_images(p: u32, n: usize) -> Vec<Matrix> {
    let d = n + 2;
    let mut alpha = identity(d);
    alpha[0][1] = 1;
    let mut out = vec![alpha];
    for i in 0..n {
        let mut m = identity(d);
        m[1][2 + i] = 1;
        out.push(m);
    }
    for i in 0..n {
        let mut m = identity(d);
        m[0][2 + i] = p - 1;
        out.push(m);
    }
    out
}

#[test]
fn model_satisfies_the_presentation() {
    for (p, n) in [(3u32, 1usize), (3, 2), (5, 2)] {
        let gens = generator_images(p, n);
        let (alpha, alphas, betas) = (&gens[0], &gens[1..=n], &gens[n + 1..]);
        for i in 0..n {
            assert_eq!(commutator(&alphas[i], alpha, p), betas[i]);
        }
        for m in &gens {
            let pth = (0..p).fold(identity(n + 2), |acc, _| mul(&acc, m, p));
            assert_eq!(pth, identity(n + 2));
        }
    }
}

/// Walks the Cayley graph of G_n and the matrix model in lockstep. Every edge
/// must land on a consistent matrix, so the walk defines a homomorphism; it
/// is injective when the matrices are pairwise distinct.
#[test]
fn gn_is_isomorphic_to_the_matrix_model() {
    for (p, n) in [(3u32, 1usize), (3, 2), (5, 1), (5, 2), (7, 1)] {
        let g = gn(p, n).unwrap();
        let images = generator_images(p, n);
        assert_eq!(g.generators().len(), images.len());
        let mut image: Vec<Option<Matrix>> = vec![None; g.order()];
        image[0] = Some(identity(n + 2));
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let mx = image[x].clone().unwrap();
            for (&s, ms) in g.generators().iter().zip(&images) {
                let y = g.mul(x, s);
                let my = mul(&mx, ms, p);
                match &image[y] {
                    Some(existing) => assert_eq!(*existing, my, "{}: inconsistent at {}", g.name(), g.label(y)),
                    None => {
                        image[y] = Some(my);
                        queue.push(y);
                    }
                }
            }
        }
        assert_eq!(queue.len(), g.order(), "{}: generators do not reach every element", g.name());
        let mut seen: HashMap<Matrix, usize> = HashMap::new();
        for (x, m) in image.into_iter().enumerate() {
            if let Some(other) = seen.insert(m.unwrap(), x) {
                panic!("{}: elements {other} and {x} share a matrix", g.name());
            }
        }
        assert_eq!(seen.len(), (p as usize).pow(2 * n as u32 + 1));
    }
}
