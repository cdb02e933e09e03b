//! Arithmetic and linear algebra over a prime field `F_q` with `q < 2^32`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Self {
        debug_assert!(is_prime(q) && q < (1 << 32));
        PrimeField { q }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.q as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn pow(&self, mut a: u64, mut k: u64) -> u64 {
        let mut acc = 1 % self.q;
        a %= self.q;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.q;
        (a != 0).then(|| self.pow(a, self.q - 2))
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let order = self.q - 1;
        let factors = prime_factors(order);
        (2..self.q).find(|&g| factors.iter().all(|&f| self.pow(g, order / f) != 1)).unwrap_or(1)
    }

    /// An element of exact multiplicative order `e`; requires `e | q - 1`.
    pub fn root_of_unity(&self, e: u64) -> Option<u64> {
        (self.q - 1).is_multiple_of(e).then(|| self.pow(self.primitive_root(), (self.q - 1) / e))
    }

    /// Basis of the right nullspace of a `rows × cols` row-major matrix.
    pub fn nullspace(&self, mat: &[u64], rows: usize, cols: usize) -> Vec<Vec<u64>> {
        let mut m = mat.to_vec();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| m[i * cols + c] != 0) else { continue };
            if p != r {
                for j in 0..cols {
                    m.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.inv(m[r * cols + c]).expect("nonzero pivot");
            for j in c..cols {
                m[r * cols + j] = self.mul(m[r * cols + j], inv);
            }
            for i in 0..rows {
                let f = m[i * cols + c];
                if i != r && f != 0 {
                    for j in c..cols {
                        let d = self.mul(f, m[r * cols + j]);
                        m[i * cols + j] = self.sub(m[i * cols + j], d);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        let mut is_pivot = vec![false; cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1;
                for (i, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = self.sub(0, m[i * cols + free]);
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form of the given row vectors; returns (rows, pivot columns).
    pub fn row_reduce(&self, vectors: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut rows = vectors;
        let cols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, p);
            let inv = self.inv(rows[r][c]).expect("nonzero pivot");
            for v in rows[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let f = row[c];
                if i != r && f != 0 {
                    for (v, &q) in row.iter_mut().zip(&pivot) {
                        *v = self.sub(*v, self.mul(f, q));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `q ≡ 1 (mod e)` with `q² > 4·order`, searched below `bound`.
pub fn dixon_prime(exponent: u64, order: u64, bound: u64) -> Option<u64> {
    let mut q = exponent + 1;
    loop {
        if q >= bound {
            return None;
        }
        if q * q > 4 * order && is_prime(q) {
            return Some(q);
        }
        q += exponent;
    }
}
