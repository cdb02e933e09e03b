use std::sync::Arc;

use gvz_core::constructions::{cyclic, direct_product, elementary_abelian, gn, heisenberg, named};
use gvz_core::{Error, Group, Subgroup};

fn zoo() -> Vec<Arc<Group>> {
    let mut out: Vec<Arc<Group>> = (1..=6).map(|m| cyclic(m).unwrap()).collect();
    out.push(elementary_abelian(3, 2).unwrap());
    for name in ["s3", "d4", "q8", "d5", "heis3", "c3wrc3"] {
        out.push(named(name).unwrap());
    }
    out.push(gn(3, 2).unwrap());
    out.push(direct_product(&named("d4").unwrap(), &cyclic(2).unwrap()).unwrap());
    out
}

fn brute_class(g: &Group, x: usize) -> Vec<usize> {
    let mut c: Vec<usize> = (0..g.order()).map(|h| g.conjugate(x, h)).collect();
    c.sort();
    c.dedup();
    c
}

#[test]
fn classes_match_brute_force_conjugation() {
    for g in zoo() {
        let cc = g.conjugacy_classes();
        let total: usize = (0..cc.len()).map(|k| cc.size(k)).sum();
        assert_eq!(total, g.order(), "{}", g.name());
        assert_eq!(cc.members(0), &[0]);
        for x in 0..g.order() {
            let k = cc.class_of(x);
            assert_eq!(cc.members(k), brute_class(&g, x).as_slice(), "{} element {x}", g.name());
            assert_eq!(cc.representative(k), cc.members(k)[0]);
            assert_eq!(cc.centralizer_order(k) * cc.size(k), g.order());
            assert_eq!(g.centralizer(x).order(), cc.centralizer_order(k));
            assert_eq!(cc.class_of(g.inv(x)), cc.inverse_class(k));
        }
    }
}

#[test]
fn centre_is_the_common_centralizer() {
    for g in zoo() {
        let brute: Vec<usize> =
            (0..g.order()).filter(|&z| (0..g.order()).all(|h| g.mul(z, h) == g.mul(h, z))).collect();
        assert_eq!(g.center().members(), brute.as_slice(), "{}", g.name());
        let meet = g.generators().iter().fold(Subgroup::whole(&g), |acc, &s| acc.intersection(&g.centralizer(s)));
        assert_eq!(meet, g.center());
    }
}

#[test]
fn group_axioms_hold() {
    for g in zoo() {
        assert!(g.check_associativity(500), "{}", g.name());
        for x in 0..g.order() {
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.pow(x, g.element_order(x) as u64), 0);
            assert_eq!(g.exponent() % g.element_order(x) as u64, 0);
        }
    }
}

#[test]
fn subgroup_orders_divide_the_group_order() {
    for g in zoo() {
        for x in 0..g.order() {
            let h = Subgroup::generated_by(&g, &[x]);
            assert_eq!(h.order(), g.element_order(x) as usize);
            assert_eq!(g.order() % h.order(), 0);
            assert_eq!(h.index() * h.order(), g.order());
        }
        let d = g.derived_subgroup();
        assert!(d.is_normal() && g.order() % d.order() == 0);
    }
}

#[test]
fn quotient_projection_is_a_homomorphism() {
    for g in zoo() {
        for n in [g.center(), g.derived_subgroup(), Subgroup::trivial(&g), Subgroup::whole(&g)] {
            let q = g.quotient(&n).unwrap();
            let t = q.target();
            assert_eq!(t.order() * n.order(), g.order(), "{}", g.name());
            for x in 0..g.order() {
                for &s in g.generators() {
                    assert_eq!(q.project(g.mul(x, s)), t.mul(q.project(x), q.project(s)));
                }
                assert_eq!(q.project(x) == 0, n.contains(x));
            }
            for y in 0..t.order() {
                assert_eq!(q.project(q.preimage(y)), y);
            }
        }
    }
}

#[test]
fn nilpotency_classes() {
    for (g, class) in [
        (cyclic(6).unwrap(), 1),
        (elementary_abelian(3, 2).unwrap(), 1),
        (named("d4").unwrap(), 2),
        (named("q8").unwrap(), 2),
        (heisenberg(3).unwrap(), 2),
        (gn(3, 2).unwrap(), 2),
        (named("c3wrc3").unwrap(), 3),
    ] {
        assert_eq!(g.nilpotency_class().unwrap(), class, "{}", g.name());
    }
    for name in ["s3", "d5"] {
        assert!(matches!(named(name).unwrap().nilpotency_class(), Err(Error::NotNilpotent)));
    }
}
