//! Exact arithmetic in cyclotomic fields `ℚ(ζ_e)`.
//!
//! An element is a rational coefficient vector over the power basis
//! `1, ζ, …, ζ^(φ(e)-1)`, reduced modulo the cyclotomic polynomial `Φ_e`.
//! The reduced form is unique, so equality is coefficient-wise.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{input, Result};

/// Precomputed reduction data for one conductor.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    /// Coefficients of `Φ_e`, lowest degree first.
    polynomial: Vec<i64>,
    /// `reduced[k]` is `x^k mod Φ_e` for `0 <= k < e`.
    reduced: Vec<Vec<i64>>,
}

impl CyclotomicField {
    /// Shared field data for conductor `e`, built once per process.
    pub fn get(conductor: u32) -> Result<Arc<CyclotomicField>> {
        if conductor == 0 {
            return input("cyclotomic conductor must be positive");
        }
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut map = cache.lock().expect("cyclotomic cache poisoned");
        Ok(map.entry(conductor).or_insert_with(|| Arc::new(CyclotomicField::build(conductor))).clone())
    }

    fn build(e: u32) -> Self {
        let polynomial = cyclotomic_polynomial(e);
        let phi = polynomial.len() - 1;
        let mut reduced = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            reduced.push(cur.clone());
            // multiply by x, then eliminate x^phi using the monic relation
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (c, p) in cur.iter_mut().zip(&polynomial) {
                    *c = c.checked_sub(top.checked_mul(*p).expect("overflow")).expect("overflow");
                }
            }
        }
        CyclotomicField { conductor: e, polynomial, reduced }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Euler's totient of the conductor, the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.polynomial.len() - 1
    }

    pub fn polynomial(&self) -> &[i64] {
        &self.polynomial
    }

    /// Reduces an exponent-indexed coefficient array (length `e`) into the power basis.
    fn reduce(self: &Arc<Self>, by_exponent: Vec<BigRational>) -> Cyclotomic {
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        for (k, c) in by_exponent.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dst, &r) in coeffs.iter_mut().zip(&self.reduced[k]) {
                if r != 0 {
                    *dst += &c * BigInt::from(r);
                }
            }
        }
        Cyclotomic { field: self.clone(), coeffs }
    }
}

/// `Φ_e` by dividing `x^e - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    let mut poly = vec![0i64; e as usize + 1];
    poly[0] = -1;
    poly[e as usize] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            poly = divide_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An exact element of `ℚ(ζ_e)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [e={}]", self, self.conductor())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Conductor first, then coefficients lexicographically. Only used for canonical ordering.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor().cmp(&other.conductor()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Result<Self> {
        let field = CyclotomicField::get(conductor)?;
        let coeffs = vec![BigRational::zero(); field.degree()];
        Ok(Cyclotomic { field, coeffs })
    }

    /// A rational as an element of conductor 1.
    pub fn rational(r: BigRational) -> Self {
        Cyclotomic { field: CyclotomicField::get(1).expect("conductor 1"), coeffs: vec![r] }
    }

    pub fn integer(n: i64) -> Self {
        Cyclotomic::rational(BigRational::from_integer(n.into()))
    }

    /// `ζ_e^k`.
    pub fn root_of_unity(k: i64, conductor: u32) -> Result<Self> {
        let field = CyclotomicField::get(conductor)?;
        let e = conductor as i64;
        let k = k.rem_euclid(e) as usize;
        let coeffs = field.reduced[k].iter().map(|&c| BigRational::from_integer(c.into())).collect();
        Ok(Cyclotomic { field, coeffs })
    }

    /// `Σ m_k ζ_e^k` for an integer multiplicity vector of length `e`.
    pub fn from_exponent_multiplicities(conductor: u32, mult: &[i64]) -> Result<Self> {
        let field = CyclotomicField::get(conductor)?;
        if mult.len() != conductor as usize {
            return input(format!("expected {conductor} multiplicities, got {}", mult.len()));
        }
        let by_exp = mult.iter().map(|&m| BigRational::from_integer(m.into())).collect();
        Ok(field.reduce(by_exp))
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.conductor() != other.conductor() {
            return input(format!("conductor mismatch: {} vs {}", self.conductor(), other.conductor()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let e = self.conductor() as usize;
        let mut by_exp = vec![BigRational::zero(); e];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    by_exp[(i + j) % e] += a * b;
                }
            }
        }
        Ok(self.field.reduce(by_exp))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(n.into()))
    }

    /// Complex conjugation, `ζ ↦ ζ^(e-1)`.
    pub fn conj(&self) -> Self {
        let e = self.conductor() as usize;
        let mut by_exp = vec![BigRational::zero(); e];
        for (i, c) in self.coeffs.iter().enumerate() {
            by_exp[(e - i) % e] += c;
        }
        self.field.reduce(by_exp)
    }

    /// The Galois automorphism `ζ ↦ ζ^k` for `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let e = self.conductor() as i64;
        if num_integer::gcd(k.rem_euclid(e), e) != 1 && e > 1 {
            return input(format!("{k} is not a unit modulo {e}"));
        }
        let mut by_exp = vec![BigRational::zero(); e as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            by_exp[((i as i64) * k).rem_euclid(e) as usize] += c;
        }
        Ok(self.field.reduce(by_exp))
    }

    /// `z · conj(z)`.
    pub fn abs_squared(&self) -> Self {
        self.try_mul(&self.conj()).expect("same conductor")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-embeds into `ℚ(ζ_e)` for a multiple `e` of the current conductor.
    pub fn embed(&self, conductor: u32) -> Result<Self> {
        let d = self.conductor();
        if !conductor.is_multiple_of(d) {
            return input(format!("cannot embed conductor {d} into {conductor}"));
        }
        let field = CyclotomicField::get(conductor)?;
        let step = (conductor / d) as usize;
        let mut by_exp = vec![BigRational::zero(); conductor as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            by_exp[i * step] += c;
        }
        Ok(field.reduce(by_exp))
    }

    /// Rewrites the value at conductor `d` dividing the current one, if it
    /// lies in that subfield.
    pub fn descend(&self, conductor: u32) -> Result<Option<Self>> {
        let e = self.conductor();
        if !e.is_multiple_of(conductor) {
            return input(format!("{conductor} does not divide conductor {e}"));
        }
        if conductor == e {
            return Ok(Some(self.clone()));
        }
        let sub = CyclotomicField::get(conductor)?;
        // Columns: images of the subfield's basis vectors ζ_d^j in ℚ(ζ_e).
        let columns: Vec<Cyclotomic> = (0..sub.degree())
            .map(|j| Cyclotomic::root_of_unity(j as i64, conductor).and_then(|z| z.embed(e)))
            .collect::<Result<_>>()?;
        let solution = solve_rational(&columns, &self.coeffs);
        Ok(solution.map(|coeffs| Cyclotomic { field: sub, coeffs }))
    }

    /// Approximate complex value, for display only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let e = self.conductor() as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * k as f64 / e;
            (re + c * angle.cos(), im + c * angle.sin())
        })
    }
}

/// Solves `Σ x_j columns[j] = target` over ℚ; `None` when inconsistent.
fn solve_rational(columns: &[Cyclotomic], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let cols = columns.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c.coeffs[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, q) in row.iter_mut().zip(&pivot) {
                    *v -= q * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            /// Panics on a conductor mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders `a0 + a1*z^1 + …` with `z` a primitive root of unity of the conductor.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match (k, mag.is_one()) {
                (0, _) => fmt_rational(&mag),
                (_, true) => format!("z^{k}"),
                (_, false) => format!("{}*z^{k}", fmt_rational(&mag)),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
