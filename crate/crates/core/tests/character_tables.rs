use std::sync::Arc;

use gvz_core::constructions::{cyclic, direct_product, elementary_abelian, gn, heisenberg, named};
use gvz_core::{Character, CharacterTable, Cyclotomic, DixonOptions, Group, SplitStrategy, Subgroup};
use num_rational::BigRational;

fn zoo() -> Vec<Arc<Group>> {
    let mut out = vec![cyclic(1).unwrap()];
    out.extend((2..=6).map(|m| cyclic(m).unwrap()));
    out.push(elementary_abelian(3, 2).unwrap());
    for name in ["s3", "d4", "q8", "d5", "heis3", "heis5", "phi4_15_p3", "c3wrc3"] {
        out.push(named(name).unwrap());
    }
    out.push(direct_product(&heisenberg(3).unwrap(), &cyclic(3).unwrap()).unwrap());
    out
}

fn int(n: i64, e: u32) -> Cyclotomic {
    Cyclotomic::integer(n).embed(e).unwrap()
}

#[test]
fn zoo_tables_satisfy_orthogonality() {
    for g in zoo() {
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.len(), t.classes().len(), "{}", g.name());
        assert!(t.check_row_orthogonality().unwrap(), "rows {}", g.name());
        assert!(t.check_column_orthogonality().unwrap(), "columns {}", g.name());
        let sum: u64 = t.irreducibles().iter().map(|c| c.degree().pow(2)).sum();
        assert_eq!(sum as usize, g.order());
        let derived = g.derived_subgroup();
        assert_eq!(t.linear().count(), g.order() / derived.order(), "{}", g.name());
        for chi in t.irreducibles() {
            assert_eq!(g.order() as u64 % chi.degree(), 0);
            for v in chi.values() {
                let a = v.abs_squared();
                assert_eq!(a, a.conj(), "{}", g.name());
            }
        }
    }
}

/// Class counts, centre and derived orders frozen from an independent
/// permutation-group computation.
#[test]
fn zoo_class_data_matches_reference() {
    let expected = [
        ("s3", 6, 3, 1, 3),
        ("d4", 8, 5, 2, 2),
        ("q8", 8, 5, 2, 2),
        ("d5", 10, 4, 1, 5),
        ("c3wrc3", 81, 17, 3, 9),
        ("heis3", 27, 11, 3, 3),
        ("heis5", 125, 29, 5, 5),
        ("phi4_15_p3", 243, 51, 9, 9),
    ];
    for (name, order, classes, centre, derived) in expected {
        let g = named(name).unwrap();
        assert_eq!(g.order(), order, "{name}");
        assert_eq!(g.conjugacy_classes().len(), classes, "{name}");
        assert_eq!(g.center().order(), centre, "{name}");
        assert_eq!(g.derived_subgroup().order(), derived, "{name}");
    }
}

#[test]
fn trivial_group_table() {
    let t = CharacterTable::compute(&cyclic(1).unwrap()).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.irreducibles()[0].degree(), 1);
}

#[test]
fn s3_matches_permutation_character() {
    let g = named("s3").unwrap();
    let t = CharacterTable::compute(&g).unwrap();
    assert_eq!(t.degree_set(), vec![1, 2]);
    let cc = t.classes();
    // fixed points of the natural action, minus the trivial character
    let values: Vec<Cyclotomic> = (0..cc.len())
        .map(|k| {
            let perm = g.describe(cc.representative(k));
            let moved: usize = perm.split(')').filter(|s| s.len() > 1).map(|s| s.matches(',').count() + 1).sum();
            Cyclotomic::integer(3 - moved as i64 - 1)
        })
        .collect();
    let oracle = Character::new(cc, values).unwrap();
    assert_eq!(t.irreducibles()[2], oracle);
    assert_eq!(oracle.inner_product(&oracle).unwrap(), BigRational::from_integer(1.into()));
}

#[test]
fn cyclic_six_values_are_sixth_roots() {
    let g = cyclic(6).unwrap();
    let t = CharacterTable::compute(&g).unwrap();
    assert_eq!(t.len(), 6);
    for chi in t.irreducibles() {
        assert!(chi.is_linear());
        for x in 0..6 {
            let v = chi.at(x);
            let mut w = int(1, 6);
            for _ in 0..6 {
                w = &w * v;
            }
            assert_eq!(w, int(1, 6));
        }
    }
}

/// Traces of the Schrödinger representation: `p·ζ^(s·y)` on central
/// `β^y`, zero elsewhere, for each nonzero `s`.
#[test]
fn heisenberg_nonlinear_characters_match_schrodinger_traces() {
    for p in [3u32, 5] {
        let g = heisenberg(p).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let beta = g.generators()[2];
        let nonlinear: Vec<&Character> = t.nonlinear().map(|(_, c)| c).collect();
        assert_eq!(nonlinear.len(), p as usize - 1);
        assert_eq!(t.linear().count(), (p * p) as usize);
        let mut seen = Vec::new();
        for chi in nonlinear {
            assert_eq!(chi.degree(), p as u64);
            let s = (1..p as i64)
                .find(|&s| {
                    (0..p as u64).all(|y| {
                        let expect = Cyclotomic::root_of_unity(s * y as i64, p).unwrap().scale_int(p as i64);
                        chi.at(g.pow(beta, y)) == &expect
                    })
                })
                .expect("matches a Schrödinger trace");
            seen.push(s);
            let centre = g.center();
            assert!(chi.vanishes_off(&centre));
        }
        seen.sort_unstable();
        assert_eq!(seen, (1..p as i64).collect::<Vec<_>>());
    }
}

#[test]
fn split_order_does_not_change_the_table() {
    for name in ["s3", "heis3"] {
        let g = named(name).unwrap();
        let base = CharacterTable::compute(&g).unwrap();
        let r = base.classes().len();
        let reversed: Vec<usize> = (1..r).rev().collect();
        let rotated: Vec<usize> = (1..r).cycle().skip(r / 2).take(r - 1).collect();
        for order in [reversed, rotated] {
            let opts =
                DixonOptions { strategy: SplitStrategy::Sequential { order: Some(order) }, ..Default::default() };
            let other = CharacterTable::for_classes(base.classes(), &opts).unwrap();
            assert_eq!(base.irreducibles(), other.irreducibles(), "{name}");
        }
        let opts = DixonOptions {
            strategy: SplitStrategy::RandomCombination { seed: 7, rounds: 2 },
            parallel: 2,
            ..Default::default()
        };
        let other = CharacterTable::for_classes(base.classes(), &opts).unwrap();
        assert_eq!(base.irreducibles(), other.irreducibles(), "{name}");
    }
}

#[test]
fn prime_bound_is_a_resource_error() {
    let g = named("s3").unwrap();
    let opts = DixonOptions { prime_bound: 5, ..Default::default() };
    assert!(matches!(CharacterTable::compute_with(&g, &opts), Err(gvz_core::Error::Resource(_))));
}

#[test]
fn induction_restriction_and_reciprocity() {
    let g = heisenberg(3).unwrap();
    let t = CharacterTable::compute(&g).unwrap();
    let z = g.center();
    let view = z.view();
    let zt = CharacterTable::compute(view.group()).unwrap();
    // regular character from the trivial subgroup
    let triv = Subgroup::trivial(&g).view();
    let tt = CharacterTable::compute(triv.group()).unwrap();
    let reg = tt.irreducibles()[0].induce(&triv, t.classes()).unwrap();
    assert_eq!(reg, Character::regular(t.classes()));

    for lambda in zt.irreducibles().iter().skip(1) {
        let induced = lambda.induce(&view, t.classes()).unwrap();
        assert_eq!(induced.degree(), 9);
        assert_eq!(induced.inner_product(&induced).unwrap(), BigRational::from_integer(9.into()));
        for x in 0..g.order() {
            if z.contains(x) {
                assert_eq!(induced.at(x), &lambda.at(view.locate(x).unwrap()).embed(3).unwrap().scale_int(9));
            } else {
                assert!(induced.at(x).is_zero());
            }
        }
        for chi in t.irreducibles() {
            let lhs = induced.inner_product(chi).unwrap();
            let rhs = lambda.inner_product(&chi.restrict(&view, zt.classes()).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    for (_, chi) in t.nonlinear() {
        let res = chi.restrict(&view, zt.classes()).unwrap();
        let three = BigRational::from_integer(3.into());
        let lambda = res.scale(&three.recip());
        assert!(
            zt.position(&lambda.clone()).is_some() || zt.irreducibles().iter().any(|l| l.values() == lambda.values())
        );
        assert!(chi.kernel().is_trivial());
        assert_eq!(chi.centre(), z);
    }
    // restriction to the whole group is the identity
    let whole = Subgroup::whole(&g).view();
    let wt = CharacterTable::compute(whole.group()).unwrap();
    for chi in t.irreducibles() {
        let r = chi.restrict(&whole, wt.classes()).unwrap();
        assert_eq!(r.degree(), chi.degree());
        assert_eq!(r.inner_product(&r).unwrap(), BigRational::from_integer(1.into()));
    }
}

#[test]
fn lift_and_deflate_count_characters_over_normal_subgroups() {
    let g = heisenberg(3).unwrap();
    let t = CharacterTable::compute(&g).unwrap();
    // normal subgroups are the intersections of kernels
    let mut normals: Vec<Subgroup> = Vec::new();
    for k in t.irreducibles().iter().map(Character::kernel) {
        if !normals.contains(&k) {
            normals.push(k);
        }
    }
    loop {
        let mut added = false;
        for i in 0..normals.len() {
            for j in 0..normals.len() {
                let n = normals[i].intersection(&normals[j]);
                if !normals.contains(&n) {
                    normals.push(n);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    assert_eq!(normals.len(), 7);
    for n in &normals {
        let qm = g.quotient(n).unwrap();
        let qt = CharacterTable::compute(qm.target()).unwrap();
        let above = t.irreducibles().iter().filter(|c| n.is_subset_of(&c.kernel())).count();
        assert_eq!(above, qt.len());
        for chi in t.irreducibles() {
            match chi.deflate(&qm, qt.classes()).unwrap() {
                Some(d) => {
                    assert!(qt.position(&d).is_some());
                    assert_eq!(&d.lift(&qm, t.classes()).unwrap(), chi);
                }
                None => assert!(!n.is_subset_of(&chi.kernel())),
            }
        }
    }
}

#[test]
fn gn_3_2_table_shape() {
    let g = gn(3, 2).unwrap();
    let t = CharacterTable::compute(&g).unwrap();
    assert_eq!(t.len(), 51);
    assert_eq!(t.field_prime(), 37);
    assert_eq!(t.degree_set(), vec![1, 3]);
    assert_eq!(t.nonlinear().count(), 24);
}
