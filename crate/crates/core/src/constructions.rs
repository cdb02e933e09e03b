//! Builders for the groups under study and the test zoo.

use std::sync::Arc;

use crate::error::{input, internal, Error, Result};
use crate::group::{Group, Permutation, Subgroup, DEFAULT_ORDER_CAP};
use crate::modp::is_prime;

/// Normal form `(Π α_i^{x_i}) · α^a · (Π β_i^{y_i})` of an element of `G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PcElement {
    pub x: Vec<u8>,
    pub a: u8,
    pub y: Vec<u8>,
}

impl PcElement {
    pub fn identity(n: usize) -> Self {
        PcElement { x: vec![0; n], a: 0, y: vec![0; n] }
    }

    /// Collected product. Moving `α^a` right past `α_i^{x'_i}` contributes
    /// `β_i^{-a x'_i}`, since `α α_i = α_i α β_i⁻¹` when `[α_i, α] = β_i`.
    pub fn mul(&self, other: &PcElement, p: u8) -> PcElement {
        let p16 = p as u16;
        let x = self.x.iter().zip(&other.x).map(|(&u, &v)| ((u as u16 + v as u16) % p16) as u8).collect();
        let a = ((self.a as u16 + other.a as u16) % p16) as u8;
        let y = self
            .y
            .iter()
            .zip(&other.y)
            .zip(&other.x)
            .map(|((&u, &v), &xv)| {
                let corr = (self.a as u16 * xv as u16) % p16;
                ((u as u16 + v as u16 + p16 - corr) % p16) as u8
            })
            .collect();
        PcElement { x, a, y }
    }
}

impl std::fmt::Display for PcElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let xs: Vec<String> = self.x.iter().map(u8::to_string).collect();
        let ys: Vec<String> = self.y.iter().map(u8::to_string).collect();
        write!(f, "[{}|{}|{}]", xs.join(","), self.a, ys.join(","))
    }
}

/// Element indices of the presentation generators of `G_n`.
#[derive(Clone, Debug)]
pub struct GnGenerators {
    pub alpha: usize,
    pub alphas: Vec<usize>,
    pub betas: Vec<usize>,
}

impl GnGenerators {
    /// Reads the handles off a group built by [`gn`].
    pub fn of(group: &Group) -> Result<Self> {
        let gens = group.generators();
        if gens.is_empty() || gens.len().is_multiple_of(2) {
            return input("not a G_n group: expected 2n+1 generators");
        }
        let n = (gens.len() - 1) / 2;
        Ok(GnGenerators { alpha: gens[0], alphas: gens[1..=n].to_vec(), betas: gens[n + 1..].to_vec() })
    }
}

/// `(p, n)` if the group was built by [`gn`].
pub fn gn_parameters(group: &Group) -> Option<(u32, usize)> {
    let rest = group.name().strip_prefix("G_")?;
    let (n, p) = rest.strip_suffix(')')?.split_once('(')?;
    let (n, p): (usize, u32) = (n.parse().ok()?, p.parse().ok()?);
    let mut expected = vec!["a".to_string()];
    expected.extend((1..=n).map(|i| format!("a{i}")));
    expected.extend((1..=n).map(|i| format!("b{i}")));
    let order = (p as u128).checked_pow(2 * n as u32 + 1)?;
    (group.generator_names() == expected.as_slice() && group.order() as u128 == order).then_some((p, n))
}

/// The subgroups `⟨α_{i_1}, …, α_{i_{n−1}}, β_1, …, β_n⟩` over all
/// `(n−1)`-subsets of the `α_i`, for a group built by [`gn`].
pub fn gn_listed_centres(group: &Arc<Group>) -> Option<Vec<Subgroup>> {
    let (_, n) = gn_parameters(group)?;
    let h = GnGenerators::of(group).ok()?;
    let out = (0..n)
        .map(|skip| {
            let mut gens: Vec<usize> =
                h.alphas.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
            gens.extend(&h.betas);
            Subgroup::generated_by(group, &gens)
        })
        .collect();
    Some(out)
}

/// `G_n = ⟨α, α_1..α_n, β_1..β_n | [α_i, α] = β_i, α^p = α_i^p = β_i^p = 1⟩`
/// with `β_i` central and the `α_i` commuting, of order `p^(2n+1)`.
pub fn gn(p: u32, n: usize) -> Result<Arc<Group>> {
    gn_with_cap(p, n, DEFAULT_ORDER_CAP)
}

pub fn gn_with_cap(p: u32, n: usize, cap: usize) -> Result<Arc<Group>> {
    if p == 2 || !is_prime(p as u64) {
        return input(format!("G_n needs an odd prime, got p = {p}"));
    }
    if p > u8::MAX as u32 {
        return input(format!("p = {p} is too large for this representation"));
    }
    if n == 0 {
        return input("G_n needs n >= 1");
    }
    let order = (p as u128).checked_pow(2 * n as u32 + 1);
    if order.is_none_or(|o| o > cap as u128) {
        return Err(Error::Resource(format!("|G_{n}| = {p}^{} exceeds the cap of {cap}", 2 * n + 1)));
    }
    let p8 = p as u8;
    let unit = |which: usize| {
        let mut e = PcElement::identity(n);
        match which {
            0 => e.a = 1,
            i if i <= n => e.x[i - 1] = 1,
            i => e.y[i - n - 1] = 1,
        }
        e
    };
    let mut gens = vec![("a".to_string(), unit(0))];
    gens.extend((1..=n).map(|i| (format!("a{i}"), unit(i))));
    gens.extend((1..=n).map(|i| (format!("b{i}"), unit(n + i))));
    let group = Group::enumerate(
        format!("G_{n}({p})"),
        PcElement::identity(n),
        gens,
        move |u, v| u.mul(v, p8),
        |e| e.to_string(),
        cap,
    )?;
    check_gn_relations(&group, p, n)?;
    Ok(group)
}

fn check_gn_relations(g: &Group, p: u32, n: usize) -> Result<()> {
    let h = GnGenerators::of(g)?;
    if g.order() as u128 != (p as u128).pow(2 * n as u32 + 1) {
        return internal(format!("G_n has order {}", g.order()));
    }
    for i in 0..n {
        if g.commutator(h.alphas[i], h.alpha) != h.betas[i] {
            return internal(format!("[a{}, a] != b{}", i + 1, i + 1));
        }
        for j in 0..n {
            if g.commutator(h.alphas[i], h.alphas[j]) != 0 {
                return internal("alpha generators do not commute");
            }
        }
    }
    for &x in g.generators() {
        if g.element_order(x) != p {
            return internal(format!("generator {} has order {}", g.label(x), g.element_order(x)));
        }
    }
    if g.exponent() != p as u64 {
        return internal(format!("G_n has exponent {}", g.exponent()));
    }
    Ok(())
}

/// Alias for `G_1`, the Heisenberg group of order `p³`.
pub fn heisenberg(p: u32) -> Result<Arc<Group>> {
    gn(p, 1)
}

pub fn cyclic(m: u32) -> Result<Arc<Group>> {
    cyclic_with_cap(m, DEFAULT_ORDER_CAP)
}

pub fn cyclic_with_cap(m: u32, cap: usize) -> Result<Arc<Group>> {
    if m == 0 {
        return input("cyclic group order must be positive");
    }
    if m as usize > cap {
        return Err(Error::Resource(format!("C_{m} exceeds the cap of {cap}")));
    }
    Group::enumerate(
        format!("C{m}"),
        0u32,
        vec![("c".to_string(), 1 % m)],
        move |a, b| (a + b) % m,
        |a| a.to_string(),
        cap,
    )
}

/// `(C_p)^k`.
pub fn elementary_abelian(p: u32, k: usize) -> Result<Arc<Group>> {
    if !is_prime(p as u64) || p > u8::MAX as u32 {
        return input(format!("elementary abelian group needs a small prime, got {p}"));
    }
    let p8 = p as u8;
    let gens = (0..k)
        .map(|i| {
            let mut v = vec![0u8; k];
            v[i] = 1;
            (format!("e{}", i + 1), v)
        })
        .collect();
    Group::enumerate(
        format!("C{p}^{k}"),
        vec![0u8; k],
        gens,
        move |a: &Vec<u8>, b: &Vec<u8>| {
            a.iter().zip(b).map(|(&x, &y)| ((x as u16 + y as u16) % p8 as u16) as u8).collect()
        },
        |v| format!("{v:?}"),
        DEFAULT_ORDER_CAP,
    )
}

/// Componentwise product on index pairs.
pub fn direct_product(a: &Arc<Group>, b: &Arc<Group>) -> Result<Arc<Group>> {
    direct_product_with_cap(a, b, DEFAULT_ORDER_CAP)
}

pub fn direct_product_with_cap(a: &Arc<Group>, b: &Arc<Group>, cap: usize) -> Result<Arc<Group>> {
    if (a.order() as u128) * (b.order() as u128) > cap as u128 {
        return Err(Error::Resource(format!("{} x {} exceeds the cap of {cap}", a.name(), b.name())));
    }
    let clash = a.generator_names().iter().any(|n| b.generator_names().contains(n));
    let rename = |name: &str, side: usize| if clash { format!("{name}_{side}") } else { name.to_string() };
    let mut gens: Vec<(String, (u32, u32))> =
        a.generators().iter().zip(a.generator_names()).map(|(&g, n)| (rename(n, 1), (g as u32, 0))).collect();
    gens.extend(b.generators().iter().zip(b.generator_names()).map(|(&g, n)| (rename(n, 2), (0, g as u32))));
    let (a1, b1) = (a.clone(), b.clone());
    let (a2, b2) = (a.clone(), b.clone());
    Group::enumerate(
        format!("{} x {}", a.name(), b.name()),
        (0u32, 0u32),
        gens,
        move |x: &(u32, u32), y: &(u32, u32)| {
            (a1.mul(x.0 as usize, y.0 as usize) as u32, b1.mul(x.1 as usize, y.1 as usize) as u32)
        },
        move |x| format!("({}, {})", a2.describe(x.0 as usize), b2.describe(x.1 as usize)),
        cap,
    )
}

/// Catalogue of named witnesses.
pub const NAMED_GROUPS: &[&str] = &["s3", "d4", "q8", "d5", "c3wrc3", "heis3", "heis5", "phi4_15_p3"];

fn perms(degree: usize, gens: &[&[&[u32]]]) -> Result<Vec<Permutation>> {
    gens.iter()
        .map(|cycles| {
            let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
            Permutation::from_cycles(degree, &cycles)
        })
        .collect()
}

pub fn named(name: &str) -> Result<Arc<Group>> {
    let cap = DEFAULT_ORDER_CAP;
    match name {
        // symmetric group of degree 3
        "s3" => Group::from_permutations("S3", 3, &perms(3, &[&[&[1, 2, 3]], &[&[1, 2]]])?, cap),
        // dihedral of order 8, symmetries of a square
        "d4" => Group::from_permutations("D4", 4, &perms(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]])?, cap),
        // quaternion group in its regular representation: 1,i,-1,-i,j,k,-j,-k ↦ 1..8
        "q8" => Group::from_permutations(
            "Q8",
            8,
            &perms(8, &[&[&[1, 2, 3, 4], &[5, 6, 7, 8]], &[&[1, 5, 3, 7], &[2, 8, 4, 6]]])?,
            cap,
        ),
        // dihedral of order 10
        "d5" => Group::from_permutations("D5", 5, &perms(5, &[&[&[1, 2, 3, 4, 5]], &[&[2, 5], &[3, 4]]])?, cap),
        // C3 wr C3, a Sylow 3-subgroup of S9
        "c3wrc3" => Group::from_permutations(
            "C3wrC3",
            9,
            &perms(9, &[&[&[1, 2, 3]], &[&[4, 5, 6]], &[&[7, 8, 9]], &[&[1, 4, 7], &[2, 5, 8], &[3, 6, 9]]])?,
            cap,
        ),
        "heis3" => heisenberg(3),
        "heis5" => heisenberg(5),
        "phi4_15_p3" => gn(3, 2),
        other => input(format!("unknown group '{other}'; known: {}", NAMED_GROUPS.join(", "))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gn_rejects_bad_parameters() {
        assert!(matches!(gn(2, 1), Err(Error::Input(_))));
        assert!(matches!(gn(9, 1), Err(Error::Input(_))));
        assert!(matches!(gn(3, 0), Err(Error::Input(_))));
        assert!(matches!(gn_with_cap(3, 2, 100), Err(Error::Resource(_))));
    }

    #[test]
    fn heisenberg_is_gn_1() {
        let a = heisenberg(3).unwrap();
        let b = gn(3, 1).unwrap();
        assert_eq!(a.order(), 27);
        for x in 0..27 {
            assert_eq!(a.describe(x), b.describe(x));
            for y in 0..27 {
                assert_eq!(a.mul(x, y), b.mul(x, y));
            }
        }
    }

    #[test]
    fn product_with_trivial() {
        let a = named("s3").unwrap();
        let t = cyclic(1).unwrap();
        let p = direct_product(&a, &t).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.conjugacy_classes().len(), 3);
    }

    #[test]
    fn product_generator_names_are_disambiguated() {
        let c = cyclic(3).unwrap();
        let p = direct_product(&c, &c).unwrap();
        assert_eq!(p.generator_names(), &["c_1".to_string(), "c_2".to_string()]);
    }

    #[test]
    fn unknown_name_lists_catalogue() {
        let err = named("a5").unwrap_err();
        assert!(err.to_string().contains("phi4_15_p3"));
    }

    #[test]
    fn elementary_abelian_basics() {
        let g = elementary_abelian(3, 2).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.exponent(), 3);
        assert!(g.is_abelian());
    }
}
