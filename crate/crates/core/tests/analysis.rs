use std::sync::Arc;

use gvz_core::analysis::{
    centre_census, class_condition, fiber_count, irr_star, is_gcp, is_gvz, two_degree, unique_nonlinear_constituent,
    verify_centre_census, verify_class_condition, verify_fiber_bijections, verify_lemma_suite,
    verify_order_p4_criterion, Analysis, Status, TheoremReport,
};
use gvz_core::constructions::{cyclic, direct_product, elementary_abelian, gn, gn_listed_centres, heisenberg, named};
use gvz_core::{CharacterTable, Error, Group, Subgroup};

fn analysis(g: &Arc<Group>) -> Analysis {
    Analysis::new(CharacterTable::compute(g).unwrap()).unwrap()
}

fn assert_passes(r: &TheoremReport) {
    let failures: Vec<_> = r.failures().collect();
    assert!(r.pass, "{} on {}: {failures:#?}", r.theorem, r.group);
}

#[test]
fn gvz_verdicts() {
    for name in ["d4", "q8", "heis3", "heis5", "phi4_15_p3"] {
        let r = is_gvz(&analysis(&named(name).unwrap())).unwrap();
        assert!(r.is_gvz, "{name}");
        assert!(r.witness.is_none());
        assert!(r.characters.iter().all(|c| c.degree_square_is_index && c.vanishes_off_centre));
    }
    for name in ["s3", "d5", "c3wrc3"] {
        let r = is_gvz(&analysis(&named(name).unwrap())).unwrap();
        assert!(!r.is_gvz, "{name}");
        assert!(r.witness.is_some());
        for c in &r.characters {
            assert_eq!(c.degree_square_is_index, c.vanishes_off_centre);
        }
    }
    let s3 = is_gvz(&analysis(&named("s3").unwrap())).unwrap();
    let bad = s3.characters.iter().find(|c| !c.vanishes_off_centre).unwrap();
    assert_eq!((bad.degree, bad.centre_index), (2, 6));
    assert!(s3.witness.unwrap().contains("2^2 = 4 != 6"));
}

#[test]
fn gvz_rejects_abelian_groups() {
    for g in [cyclic(1).unwrap(), cyclic(6).unwrap(), elementary_abelian(3, 2).unwrap()] {
        assert!(matches!(is_gvz(&analysis(&g)), Err(Error::NotApplicable(_))));
    }
}

#[test]
fn camina_pairs() {
    let h = analysis(&heisenberg(3).unwrap());
    assert!(is_gcp(&h, h.centre()).unwrap().holds);
    let whole = Subgroup::whole(h.group());
    assert!(is_gcp(&h, &whole).unwrap().holds);

    let w = analysis(&named("c3wrc3").unwrap());
    let r = is_gcp(&w, w.centre()).unwrap();
    assert!(!r.holds && !r.vanishing && !r.class_criterion);
    assert!(r.witness.is_some());

    let s3 = analysis(&named("s3").unwrap());
    let transposition = (0..6).find(|&x| s3.group().element_order(x) == 2).unwrap();
    let not_normal = Subgroup::generated_by(s3.group(), &[transposition]);
    assert!(matches!(is_gcp(&s3, &not_normal), Err(Error::Input(_))));
    // (S3, A3): the transpositions form the coset of A3
    assert!(is_gcp(&s3, s3.derived()).unwrap().holds);
}

#[test]
fn camina_criteria_agree_on_normal_subgroups_of_the_zoo() {
    for name in ["s3", "d4", "q8", "d5", "heis3", "c3wrc3"] {
        let a = analysis(&named(name).unwrap());
        let mut normals = vec![a.centre().clone(), a.derived().clone(), Subgroup::trivial(a.group())];
        normals.extend((0..a.irreducibles().len()).map(|i| a.data(i).kernel.clone()));
        for n in normals {
            let r = is_gcp(&a, &n).unwrap();
            assert_eq!(r.vanishing, r.class_criterion, "{name} {}", n.describe());
        }
    }
}

#[test]
fn two_degree_detection() {
    assert!(two_degree(&analysis(&named("s3").unwrap())).holds);
    assert!(!two_degree(&analysis(&cyclic(4).unwrap())).holds);
    let w = two_degree(&analysis(&named("c3wrc3").unwrap()));
    assert_eq!(w.degree_set, vec![1, 3]);
}

/// Census counts: 2 for heis3, 6 per centre for G_2(3), 4 for heis5.
#[test]
fn fiber_counts_match_the_formula() {
    for (g, expected) in [(gn(3, 1).unwrap(), 2), (gn(3, 2).unwrap(), 6), (gn(5, 1).unwrap(), 4)] {
        let a = analysis(&g);
        for i in a.nonlinear() {
            let fc = fiber_count(&a, i).unwrap();
            assert!(fc.asserted && fc.matches);
            assert_eq!(fc.census, expected, "{}", g.name());
            assert_eq!(fc.formula, expected.to_string());
        }
    }
}

#[test]
fn fiber_count_flags_unasserted_formula() {
    let a = analysis(&named("s3").unwrap());
    let i = a.nonlinear()[0];
    let fc = fiber_count(&a, i).unwrap();
    assert!(!fc.asserted);
    assert!(matches!(fiber_count(&a, 0), Err(Error::Input(_))));
}

#[test]
fn irr_star_sizes() {
    let h = analysis(&heisenberg(3).unwrap());
    let i = h.nonlinear()[0];
    let (st, star) = irr_star(&h, i).unwrap();
    assert_eq!(st.table.len(), 3);
    assert_eq!(star.len(), 2);
    for &l in &star {
        let c = unique_nonlinear_constituent(&h, i, &st, l).unwrap();
        assert_eq!(c.multiplicity, "3");
        assert_eq!(c.expected_multiplicity, "3");
        assert!(c.value_formula_holds && c.centre_matches);
    }

    let g2 = analysis(&gn(3, 2).unwrap());
    for i in g2.nonlinear() {
        let (st, star) = irr_star(&g2, i).unwrap();
        assert_eq!(st.table.len(), 27);
        assert_eq!(star.len(), 6);
    }
    assert!(matches!(irr_star(&analysis(&named("s3").unwrap()), 2), Err(Error::HypothesisNotMet(_))));
}

#[test]
fn fiber_bijections_hold_on_gn() {
    for g in [gn(3, 1).unwrap(), gn(3, 2).unwrap(), gn(5, 1).unwrap(), named("d4").unwrap(), named("q8").unwrap()] {
        let r = verify_fiber_bijections(&analysis(&g)).unwrap();
        assert_passes(&r);
        assert!(r.count(Status::Pass) > 0);
    }
    let s3 = analysis(&named("s3").unwrap());
    assert!(matches!(verify_fiber_bijections(&s3), Err(Error::HypothesisNotMet(_))));
}

#[test]
fn class_condition_both_directions() {
    for g in [gn(3, 1).unwrap(), gn(3, 2).unwrap(), named("d4").unwrap()] {
        let r = verify_class_condition(&analysis(&g)).unwrap();
        assert_passes(&r);
        let forward = r.checks.iter().find(|c| c.label == "GVZ implies the class condition").unwrap();
        assert_eq!(forward.status, Status::Pass);
    }
    for name in ["s3", "d5", "c3wrc3"] {
        let r = verify_class_condition(&analysis(&named(name).unwrap())).unwrap();
        assert_passes(&r);
        let reverse = r.checks.iter().find(|c| c.label == "not GVZ implies the class condition fails").unwrap();
        assert_eq!(reverse.status, Status::Pass, "{name}");
        assert_eq!(reverse.witnesses.len(), 1);
    }
    assert!(matches!(verify_class_condition(&analysis(&cyclic(3).unwrap())), Err(Error::HypothesisNotMet(_))));
}

/// S3, linear χ: for a 3-cycle x, xA3 = A3 has three elements but Cl(x) two.
#[test]
fn class_condition_witness_in_s3() {
    let a = analysis(&named("s3").unwrap());
    let three_cycle = (0..6).find(|&x| a.group().element_order(x) == 3).unwrap();
    let transposition = (0..6).find(|&x| a.group().element_order(x) == 2).unwrap();
    assert!(!class_condition(&a, 0, three_cycle));
    assert!(class_condition(&a, 0, transposition));
}

/// Heisenberg(3), linear χ: outside every nonlinear centre, xG' is the class.
#[test]
fn class_condition_in_heisenberg() {
    let a = analysis(&heisenberg(3).unwrap());
    for x in 0..27 {
        if !a.centre().contains(x) {
            assert!(class_condition(&a, 0, x));
            assert_eq!(a.table().classes().size(a.table().classes().class_of(x)), 3);
        }
    }
}

#[test]
fn lemma_suite_on_the_zoo() {
    let mut zoo = vec![cyclic(1).unwrap(), elementary_abelian(3, 2).unwrap()];
    zoo.extend((2..=6).map(|m| cyclic(m).unwrap()));
    for name in ["s3", "d4", "q8", "d5", "heis3", "heis5", "phi4_15_p3", "c3wrc3"] {
        zoo.push(named(name).unwrap());
    }
    zoo.push(direct_product(&heisenberg(3).unwrap(), &cyclic(3).unwrap()).unwrap());
    for g in zoo {
        let r = verify_lemma_suite(&analysis(&g)).unwrap();
        assert_passes(&r);
    }
}

#[test]
fn lemma_suite_counts() {
    let a = analysis(&gn(3, 2).unwrap());
    let r = verify_lemma_suite(&a).unwrap();
    let count = r.checks.iter().find(|c| c.label == "|nl(G)| = |Z(chi)| - |Z(chi)/G'| for nonlinear chi").unwrap();
    assert_eq!(count.status, Status::Pass);
    assert_eq!(a.nonlinear().len(), 24);
    assert_eq!(a.data(a.nonlinear()[0]).centre.order(), 27);
    // several centres: the single-centre count is skipped
    let single = r.checks.iter().find(|c| c.label.starts_with("|nl(G)| = |Z(G)| - |Z(G)/G'| when all")).unwrap();
    assert_eq!(single.status, Status::Skip);

    let h = analysis(&heisenberg(3).unwrap());
    let r = verify_lemma_suite(&h).unwrap();
    for label in [
        "|nl(G)| = |Z(G)| - |Z(G)/G'| when all nonlinear centres agree",
        "cd(G) = {1, |G/Z(G)|^(1/2)} when (G, Z(G)) is a generalized Camina pair",
        "|nl(G)| = |Z(G)| - |Z(G)/G'| when (G, Z(G)) is a generalized Camina pair",
    ] {
        let c = r.checks.iter().find(|c| c.label == label).unwrap();
        assert_eq!(c.status, Status::Pass, "{label}");
    }
    let gcp_count =
        r.checks.iter().find(|c| c.label.starts_with("|nl(G)| = |Z(G)|") && c.label.contains("Camina")).unwrap();
    assert_eq!((gcp_count.lhs.as_str(), gcp_count.rhs.as_str()), ("2", "2"));
}

#[test]
fn order_p4_criterion() {
    let hc = direct_product(&heisenberg(3).unwrap(), &cyclic(3).unwrap()).unwrap();
    let r = verify_order_p4_criterion(&analysis(&hc)).unwrap();
    assert_passes(&r);
    assert_eq!(r.checks[0].lhs, "true");

    let w = verify_order_p4_criterion(&analysis(&named("c3wrc3").unwrap())).unwrap();
    assert_passes(&w);
    assert_eq!(w.checks[0].lhs, "false");

    let d4c2 = direct_product(&named("d4").unwrap(), &cyclic(2).unwrap()).unwrap();
    assert_passes(&verify_order_p4_criterion(&analysis(&d4c2)).unwrap());

    assert!(matches!(verify_order_p4_criterion(&analysis(&heisenberg(3).unwrap())), Err(Error::HypothesisNotMet(_))));
    assert!(matches!(verify_order_p4_criterion(&analysis(&cyclic(16).unwrap())), Err(Error::HypothesisNotMet(_))));
}

/// Hand count for G_2(3): the nonlinear centres are the preimages of the
/// four lines through the origin in the α_i plane, each with 6 characters.
#[test]
fn centre_census_on_g2() {
    let g = gn(3, 2).unwrap();
    let a = analysis(&g);
    let census = centre_census(&a);
    assert_eq!(census.total, 24);
    assert_eq!(census.entries.len(), 4);
    assert!(census.entries.iter().all(|e| e.count == 6 && e.order == 27));
    let listed = census.listed.clone().unwrap();
    assert_eq!(listed.len(), 2);
    assert!(listed.iter().all(|(_, c)| *c == 6));
    assert_eq!(census.extra_centres, Some(true));

    let listed_groups = gn_listed_centres(&g).unwrap();
    let centres: Vec<Subgroup> = a.nonlinear_centres().into_iter().map(|(s, _)| s).collect();
    for s in &listed_groups {
        assert!(centres.contains(s));
    }
    let r = verify_centre_census(&a).unwrap();
    assert_passes(&r);
    let note = r.checks.iter().find(|c| c.status == Status::Note && c.label.contains("outside")).unwrap();
    assert_eq!(note.lhs, "2");
}

#[test]
fn centre_census_on_heisenberg() {
    let a = analysis(&heisenberg(3).unwrap());
    let census = centre_census(&a);
    assert_eq!(census.entries.len(), 1);
    assert_eq!(census.entries[0].count, 2);
    assert_eq!(census.entries[0].order, 3);
    assert_eq!(census.extra_centres, Some(false));
    assert_passes(&verify_centre_census(&a).unwrap());
}

/// G_n for n = 1, 2 and p = 3, 5: GVZ with cd = {1, p}, G' = Z(G) = ⟨β_i⟩ of order p^n.
#[test]
fn gn_family_properties() {
    for (p, n) in [(3u32, 1usize), (3, 2), (5, 1)] {
        let g = gn(p, n).unwrap();
        let a = analysis(&g);
        assert_eq!(g.order(), (p as usize).pow(2 * n as u32 + 1));
        assert!(is_gvz(&a).unwrap().is_gvz);
        assert_eq!(a.table().degree_set(), vec![1, p as u64]);
        let betas = Subgroup::generated_by(&g, &g.generators()[n + 1..]);
        assert_eq!(*a.derived(), betas);
        assert_eq!(*a.centre(), betas);
        assert_eq!(betas.order(), (p as usize).pow(n as u32));
        assert_eq!(g.nilpotency_class().unwrap(), 2);
    }
}

/// Every nonlinear character of G_2(3) with β_1 in its kernel deflates to a
/// nonlinear character of G_2/⟨β_1⟩, a group of order 81 with centre of order 9.
#[test]
fn g2_quotient_by_beta1() {
    let g = gn(3, 2).unwrap();
    let a = analysis(&g);
    let beta1 = g.generators()[3];
    let k1 = Subgroup::generated_by(&g, &[beta1]);
    let qt = a.quotient_table(&k1).unwrap();
    assert_eq!(qt.map.target().order(), 81);
    assert_eq!(qt.map.target().center().order(), 9);
    let mut hits = 0;
    for i in a.nonlinear() {
        if a.data(i).kernel.contains(beta1) {
            let bar = a.irreducibles()[i].deflate(&qt.map, qt.table.classes()).unwrap().unwrap();
            assert!(!bar.is_linear());
            hits += 1;
        }
    }
    assert_eq!(hits, 6);
}
