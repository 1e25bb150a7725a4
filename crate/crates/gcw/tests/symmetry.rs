use std::collections::BTreeSet;
use std::sync::Arc;

use gcw::algebra::{Perm, PermGroup};
use gcw::codecore::{min_distance, Code, DistancePartition};
use gcw::constructions::*;
use gcw::graphs::{build_pg3, build_w3, Graph};
use gcw::symmetry::*;
use gcw::{Budget, Error};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn budget() -> Budget {
    Budget::default()
}

/// Orbit of a Hamming vertex by applying every group element as a wreath
/// element to the tuple.
fn wreath_orbit_oracle(c: &Code, g: &PermGroup, v: usize) -> BTreeSet<usize> {
    let h = c.graph().as_hamming().unwrap();
    let t = h.digits(v);
    g.elements(&budget())
        .unwrap()
        .iter()
        .map(|x| h.from_digits(&WreathElement::from_perm(h.n, h.q, x).unwrap().apply_tuple(&t)))
        .collect()
}

fn cycle_aut(n: usize) -> AutRepresentation {
    let m = 2 * n;
    AutRepresentation::Vertex(
        PermGroup::new(m, vec![Perm::from_fn(m, |i| (i + n) % m), Perm::from_fn(m, |i| (m - i) % m)]).unwrap(),
    )
}

/// `Sym(U) × Sym(V∖U)` on the underlying set `0..v`.
fn split_symmetric(v: usize, u: &[usize]) -> PermGroup {
    let rest: Vec<usize> = (0..v).filter(|x| !u.contains(x)).collect();
    let mut gens = Vec::new();
    for part in [u.to_vec(), rest] {
        if part.len() >= 2 {
            let cycle = |x: usize| part.iter().position(|&y| y == x).map_or(x, |i| part[(i + 1) % part.len()]);
            gens.push(Perm::from_fn(v, cycle));
            gens.push(Perm::from_fn(v, |x| if x == part[0] { part[1] } else if x == part[1] { part[0] } else { x }));
        }
    }
    PermGroup::new(v, gens).unwrap()
}

/// `AGL_3(2) × S_5` on `0..13`: affine maps on the bit labels `0..8` and
/// all permutations of `8..13`.
fn tetrahedron_group() -> PermGroup {
    let affine = agl(2, 3).unwrap();
    let mut gens: Vec<Perm> = affine.gens().iter().map(|g| g.extend(13)).collect();
    gens.push(Perm::from_fn(13, |x| if x >= 8 { 8 + (x - 7) % 5 } else { x }));
    gens.push(Perm::from_fn(13, |x| match x {
        8 => 9,
        9 => 8,
        _ => x,
    }));
    PermGroup::new(13, gens).unwrap()
}

#[test]
fn cycle_codes_are_completely_transitive() {
    for n in 2..=8 {
        let c = cycle_code(n).unwrap();
        let r = is_s_nt(&c, &cycle_aut(n), n / 2, &budget()).unwrap();
        assert!(r.s_nt, "n = {n}");
        assert_eq!(r.completely_transitive, Some(true), "n = {n}");
        assert_eq!(r.covering_radius, Some(n / 2));
        for (i, &size) in r.level_sizes.iter().enumerate().skip(1) {
            let want = if 2 * i == n { 2 } else { 4 };
            assert_eq!(size, want, "n = {n}, level {i}");
        }
        assert!(is_completely_transitive(&c, &cycle_aut(n), &budget()).unwrap());
    }
}

#[test]
fn reed_muller_is_two_neighbour_transitive() {
    let c = grm(2, 1, 3).unwrap();
    let g = affine_code_group(&c, 2, 3).unwrap();
    let rep = AutRepresentation::wreath(g.clone(), 2);
    let r = is_s_nt(&c, &rep, 2, &budget()).unwrap();
    assert!(r.s_nt);
    assert_eq!(r.orbit_counts, vec![1, 1, 1]);
    assert!(check_entry_homogeneity(&c, &rep, 2, &budget()).unwrap());
    // the entry group is AGL_3(2), 2-homogeneous on the 8 points
    let entries = entry_action(&g, 2).unwrap();
    assert_eq!(entries.order(), 1344);
    assert!(entries.is_k_homogeneous(2, &budget()).unwrap());
}

#[test]
fn repetition_with_one_translation_is_not_neighbour_transitive() {
    let c = rep_nq(4, 2).unwrap();
    let f = gcw::algebra::FiniteField::of_order(2).unwrap();
    let g = translation_group(&f, &[vec![1, 1, 1, 1]]).unwrap();
    let r = is_s_nt(&c, &AutRepresentation::wreath(g.clone(), 2), 1, &budget()).unwrap();
    assert!(!r.s_nt);
    assert_eq!(r.orbit_counts[0], 1);
    assert_eq!(r.orbit_counts[1], 4);
    let w = r.witness.unwrap();
    assert_eq!((w.level, w.orbit_size, w.level_size), (1, 2, 8));
    let h = c.graph().as_hamming().unwrap();
    let first = h.parse_label(&w.representative).unwrap();
    assert_eq!(wreath_orbit_oracle(&c, &g, first).len(), 2);
    assert_eq!(r.completely_transitive, Some(false));
}

#[test]
fn preservation_failure_names_a_codeword() {
    let c = rep_nq(4, 2).unwrap();
    let f = gcw::algebra::FiniteField::of_order(2).unwrap();
    let g = translation_group(&f, &[vec![1, 0, 0, 0]]).unwrap();
    let err = is_s_nt(&c, &AutRepresentation::wreath(g, 2), 1, &budget()).unwrap_err();
    assert!(matches!(err, Error::Precondition(ref m) if m.contains("outside the code")), "{err}");
    let bad = AutRepresentation::Vertex(PermGroup::new(8, vec![Perm::from_cycles(8, "(0 1)").unwrap()]).unwrap());
    let cyc = cycle_code(4).unwrap();
    assert!(check_edge_preservation(cyc.graph(), &bad, 0).is_err());
    assert!(check_edge_preservation(cyc.graph(), &cycle_aut(4), 0).is_ok());
}

#[test]
fn golay_local_equivalence() {
    let c = classical_code("golay23").unwrap();
    let rep = AutRepresentation::wreath(golay23_aut().unwrap(), 2);
    let eq = check_local_equivalence(&c, &rep, 2, &budget()).unwrap();
    assert!(eq.level_transitive && eq.stabilizer_transitive && eq.pair_transitive);
    assert_eq!(eq.error_capacity, 3);
}

#[test]
fn trivial_group_fails_all_local_conditions() {
    let c = rep_nq(3, 2).unwrap();
    let rep = AutRepresentation::wreath(PermGroup::trivial(6), 2);
    let eq = check_local_equivalence(&c, &rep, 1, &budget()).unwrap();
    assert!(!eq.level_transitive && !eq.stabilizer_transitive && !eq.pair_transitive);
    assert!(check_local_equivalence(&c, &rep, 2, &budget()).is_err());
}

#[test]
fn alternating_permutation_code_local_equivalence() {
    let a4 = PermGroup::alternating(4);
    let c = permutation_code(&a4.elements(&budget()).unwrap()).unwrap();
    let g = holomorph_autos(&a4, None, &budget()).unwrap();
    let rep = AutRepresentation::wreath(g.clone(), 4);
    let eq = check_local_equivalence(&c, &rep, 1, &budget()).unwrap();
    assert!(eq.agree());
    // oracle: orbits of C and C_1 by applying every element to every tuple
    let p = DistancePartition::best(&c, &budget()).unwrap();
    let level1 = p.level_set(1, &budget()).unwrap();
    let oracle = wreath_orbit_oracle(&c, &g, level1[0]);
    assert_eq!(eq.level_transitive, oracle.len() == level1.len() && wreath_orbit_oracle(&c, &g, c.words()[0]).len() == c.len());
}

#[test]
fn classification_tags() {
    let b = budget();
    let rep8 = rep_nq(8, 2).unwrap();
    let full = classify_pair(&rep8, &AutRepresentation::wreath(rep_full(8).unwrap(), 2), &b).unwrap();
    assert_eq!(full.tag, ClassificationTag::AlphabetAffine);
    assert_eq!(full.kernel_order, 2);
    let top = classify_pair(&rep8, &AutRepresentation::wreath(rep_top_only(8).unwrap(), 2), &b).unwrap();
    assert_eq!(top.tag, ClassificationTag::EntryFaithful);
    assert_eq!(top.kernel_order, 1);
    for q in [5, 6] {
        let c = rep_nq(3, q).unwrap();
        let g = diag_subgroup(&PermGroup::symmetric(q), 3).unwrap().join(&top_subgroup(&PermGroup::symmetric(3), q).unwrap());
        let r = classify_pair(&c, &AutRepresentation::wreath(g, q), &b).unwrap();
        assert_eq!(r.tag, ClassificationTag::AlphabetAlmostSimple, "q = {q}");
        assert!(r.two_transitivity_forced);
        assert_eq!(r.alphabet_two_transitive, Some(true));
    }
    let c = rep_nq(3, 4).unwrap();
    let g = diag_subgroup(&PermGroup::symmetric(4), 3).unwrap().join(&top_subgroup(&PermGroup::symmetric(3), 4).unwrap());
    assert_eq!(classify_pair(&c, &AutRepresentation::wreath(g, 4), &b).unwrap().tag, ClassificationTag::AlphabetAffine);
}

#[test]
fn entry_and_alphabet_actions() {
    let g = rep_full(5).unwrap();
    assert_eq!(entry_action(&g, 2).unwrap().order(), 120);
    assert_eq!(alphabet_action(&g, 2, 3, &budget()).unwrap().order(), 2);
    let top = rep_top_only(5).unwrap();
    assert_eq!(alphabet_action(&top, 2, 0, &budget()).unwrap().order(), 1);
    assert!(alphabet_action(&top, 2, 5, &budget()).is_err());
}

#[test]
fn golay_entry_homogeneity() {
    let c = classical_code("golay23").unwrap();
    let rep = AutRepresentation::wreath(golay23_aut().unwrap(), 2);
    assert!(check_entry_homogeneity(&c, &rep, 3, &budget()).unwrap());
    // oracle: M_23 is 4-transitive on the 23 entries
    assert!(mathieu23().is_k_transitive(4).unwrap());
    let cyc = cycle_code(3).unwrap();
    assert!(matches!(check_entry_homogeneity(&cyc, &cycle_aut(3), 1, &budget()), Err(Error::Precondition(_))));
}

#[test]
fn permcode_criterion_on_subgroups_of_s4() {
    let b = budget();
    let p = |s: &str| Perm::from_cycles(4, s).unwrap();
    let c4 = PermGroup::new(4, vec![p("(0 1 2 3)")]).unwrap();
    let v4 = PermGroup::new(4, vec![p("(0 1)(2 3)"), p("(0 2)(1 3)")]).unwrap();
    let a4 = PermGroup::alternating(4);
    let got: Vec<PermcodeCriterion> = [c4, v4, a4].iter().map(|t| verify_permcode_criterion(t, None, &b).unwrap()).collect();
    assert_eq!(got[0], PermcodeCriterion { diagonal_nt: false, normalizer_two_transitive: false });
    assert_eq!(got[1], PermcodeCriterion { diagonal_nt: true, normalizer_two_transitive: true });
    assert_eq!(got[2], PermcodeCriterion { diagonal_nt: true, normalizer_two_transitive: true });
}

#[test]
fn permcode_criterion_all_classes() {
    let b = budget();
    let expected_classes = [(3, 4), (4, 11), (5, 19)];
    for (q, count) in expected_classes {
        let classes = subgroup_classes(q).unwrap();
        assert_eq!(classes.len(), count);
        for t in &classes {
            let r = verify_permcode_criterion(t, None, &b).unwrap();
            assert_eq!(r.diagonal_nt, r.normalizer_two_transitive);
        }
    }
}

#[test]
fn permcode_criterion_sampled_larger_degrees() {
    use rand::seq::SliceRandom;
    let b = budget();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for q in [6usize, 7] {
        for _ in 0..3 {
            let mut random_perm = || {
                let mut images: Vec<u32> = (0..q as u32).collect();
                images.shuffle(&mut rng);
                Perm::from_images(images).unwrap()
            };
            let t = PermGroup::new(q, vec![random_perm(), random_perm()]).unwrap();
            if t.order() > 720 {
                continue;
            }
            let r = verify_permcode_criterion(&t, None, &b).unwrap();
            assert_eq!(r.diagonal_nt, r.normalizer_two_transitive);
        }
    }
}

#[test]
fn johnson_type_constancy() {
    let u = [0, 1, 2, 3];
    let c = johnson_subset_code(5, 2, &u, SubsetMode::Within).unwrap();
    let rep = AutRepresentation::UnderlyingSet(split_symmetric(5, &u));
    let iota = InvariantMap::SubsetIntersection(u.to_vec());
    let r = check_invariant(&c, &rep, 1, &iota, &budget()).unwrap();
    assert!(r.s_nt);
    assert!(r.level_constancy && r.ball_bound && r.sphere_constancy);
    assert_eq!(r.level_types[0], vec![vec![2]]);
    assert_eq!(r.level_types[1], vec![vec![1]]);

    let trivial = AutRepresentation::UnderlyingSet(PermGroup::trivial(5));
    let r = check_invariant(&c, &trivial, 1, &iota, &budget()).unwrap();
    assert!(!r.s_nt);
    assert_eq!(r.level_types[0], vec![vec![2]]);

    let moving = AutRepresentation::UnderlyingSet(PermGroup::symmetric(5));
    let full = Code::new(c.graph().clone(), 0..10).unwrap();
    assert!(matches!(check_invariant(&full, &moving, 0, &iota, &budget()), Err(Error::Precondition(_))));
}

#[test]
fn tetrahedron_code_types_and_transitivity() {
    let c = tetrahedron_code().unwrap();
    let rep = AutRepresentation::UnderlyingSet(tetrahedron_group());
    assert_eq!(rep.group().order(), 1344 * 120);
    let r = is_s_nt(&c, &rep, 1, &budget()).unwrap();
    assert!(r.s_nt, "{r:?}");
    let iota = InvariantMap::IntersectionProfile(vec![(0..8).collect(), (8..13).collect()]);
    let inv = check_invariant(&c, &rep, 1, &iota, &budget()).unwrap();
    assert_eq!(inv.level_types[0], vec![vec![4, 2]]);
    assert_eq!(inv.level_types[1].len(), 1);
}

#[test]
fn trichotomy_cases() {
    let b = budget();
    let ham = hamming_code(2, 3).unwrap();
    let g = projective_code_group(&ham, 3, 1).unwrap();
    let t = covering_radius_trichotomy(&ham, &AutRepresentation::wreath(g, 2), &b).unwrap();
    assert_eq!(t.case, TrichotomyCase::Case2PerfectDelta3);

    let rep2 = rep_nq(2, 2).unwrap();
    let t = covering_radius_trichotomy(&rep2, &AutRepresentation::wreath(rep_full(2).unwrap(), 2), &b).unwrap();
    assert_eq!(t.case, TrichotomyCase::Case3aBipartitePart);

    let golay = classical_code("golay23").unwrap();
    let t = covering_radius_trichotomy(&golay, &AutRepresentation::wreath(golay23_aut().unwrap(), 2), &b).unwrap();
    assert_eq!((t.case, t.covering_radius), (TrichotomyCase::Case1RhoGe2, 3));

    let weak = AutRepresentation::wreath(rep_top_only(4).unwrap(), 2);
    assert!(matches!(covering_radius_trichotomy(&rep_nq(4, 2).unwrap(), &weak, &b), Err(Error::Precondition(_))));
}

#[test]
fn spread_transfers_to_collinearity_graph() {
    let b = budget();
    let s = build_pg3(2).unwrap();
    let c = regular_spread_code(2).unwrap();
    let rep = AutRepresentation::Vertex(spread_group(2).unwrap());
    let t = incidence_to_collinearity(&c, &rep, &s, 2, &b).unwrap();
    assert!(t.dual && t.incidence_s_nt && t.collinearity_nt);
    let t0 = incidence_to_collinearity(&c, &rep, &s, 1, &b).unwrap();
    assert!(t0.collinearity_nt);
}

#[test]
fn partial_ovoid_transfers_at_level_zero() {
    let b = budget();
    let s = build_w3(2).unwrap();
    let gens = shipped_sl2_subgroup(2).unwrap();
    let c = w3_partial_ovoid(2).unwrap();
    let rep = AutRepresentation::Vertex(partial_ovoid_group(2, &gens).unwrap());
    let t = incidence_to_collinearity(&c, &rep, &s, 1, &b).unwrap();
    assert!(t.incidence_s_nt && t.collinearity_nt);
}

#[test]
fn brute_force_automorphism_groups() {
    let b = budget();
    let c = cycle_code(4).unwrap();
    let aut = aut_bruteforce(&c, None, &b).unwrap();
    assert_eq!(aut.group().order(), 4);
    assert!(aut.group().gens().iter().all(|g| g.order() <= 2));

    let rep2 = rep_nq(2, 2).unwrap();
    let aut = aut_bruteforce(&rep2, None, &b).unwrap();
    assert_eq!(aut.group().order(), 4);
    assert_eq!(ambient_group(rep2.graph()).unwrap().group().order(), 8);

    let all = Code::new(Arc::new(Graph::hamming(2, 3).unwrap()), 0..9).unwrap();
    let aut = aut_bruteforce(&all, None, &b).unwrap();
    assert_eq!(aut.group().order(), 72);
}

#[test]
fn group_files() {
    let text = r#"{"representation":"wreath","n":3,"q":2,
        "generators":[{"base":[[1,0],[1,0],[1,0]],"top":[0,1,2]},{"base":[[0,1],[0,1],[0,1]],"top":[1,2,0]}]}"#;
    let rep = parse_group_json(text).unwrap();
    assert_eq!(rep.group().order(), 6);
    assert!(is_s_nt(&rep_nq(3, 2).unwrap(), &rep, 1, &budget()).unwrap().s_nt);
    let set = parse_group_json(r#"{"representation":"set","degree":4,"generators":[[1,0,2,3]]}"#).unwrap();
    assert_eq!(set.tag(), "set");
    let matrix = r#"{"representation":"matrix","geometry":"pg3","q":2,
        "generators":[{"entries":[[0,1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]]}]}"#;
    let rep = parse_group_json(matrix).unwrap();
    assert_eq!(rep.group().order(), 2);
    assert!(parse_group_json(r#"{"representation":"vertex","degree":3,"generators":[[0,0,1]]}"#).is_err());
}

fn small_instances() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=8, 0usize..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn s_nt_is_monotone((n, which) in small_instances()) {
        let c = cycle_code(n).unwrap();
        let g = cycle_aut(n);
        let g = match which {
            0 => g,
            1 => AutRepresentation::Vertex(PermGroup::new(2 * n, vec![g.group().gens()[0].clone()]).unwrap()),
            2 => AutRepresentation::Vertex(PermGroup::new(2 * n, vec![g.group().gens()[1].clone()]).unwrap()),
            _ => AutRepresentation::Vertex(PermGroup::trivial(2 * n)),
        };
        let rho = n / 2;
        let verdicts: Vec<bool> = (0..=rho).map(|s| is_s_nt(&c, &g, s, &budget()).unwrap().s_nt).collect();
        for s in 1..verdicts.len() {
            prop_assert!(!verdicts[s] || verdicts[s - 1]);
        }
    }

    #[test]
    fn reports_are_invariant_under_ambient_conjugation(seed in 0u64..1000, n in 3usize..=6) {
        let c = rep_nq(n, 2).unwrap();
        let g = rep_full(n).unwrap();
        let ambient = hamming_automorphisms(n, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = ambient.random_element(&mut rng);
        let action = OnHamming::new(c.graph().as_hamming().unwrap());
        let image = Code::new(c.graph().clone(), c.words().iter().map(|&w| action.apply(w, &x))).unwrap();
        let conj = PermGroup::new(2 * n, g.gens().iter().map(|y| y.conjugate_by(&x)).collect()).unwrap();
        let before = is_s_nt(&c, &AutRepresentation::wreath(g, 2), 2, &budget()).unwrap();
        let after = is_s_nt(&image, &AutRepresentation::wreath(conj, 2), 2, &budget()).unwrap();
        prop_assert_eq!(before.orbit_counts, after.orbit_counts);
        prop_assert_eq!(before.s_nt, after.s_nt);
        prop_assert_eq!(before.completely_transitive, after.completely_transitive);
    }

    #[test]
    fn s_nt_implies_entry_homogeneity(n in 3usize..=7, use_full in any::<bool>()) {
        let c = rep_nq(n, 2).unwrap();
        let g = if use_full { rep_full(n).unwrap() } else { rep_top_only(n).unwrap() };
        let rep = AutRepresentation::wreath(g, 2);
        let e = (n - 1) / 2;
        for s in 1..=e.max(1) {
            if e >= 1 && is_s_nt(&c, &rep, s, &budget()).unwrap().s_nt {
                prop_assert!(check_entry_homogeneity(&c, &rep, s, &budget()).unwrap());
            }
        }
    }

    #[test]
    fn classification_is_exclusive(n in 2usize..=6, use_full in any::<bool>()) {
        let c = rep_nq(n, 2).unwrap();
        let g = if use_full { rep_full(n).unwrap() } else { rep_top_only(n).unwrap() };
        let r = classify_pair(&c, &AutRepresentation::wreath(g, 2), &budget()).unwrap();
        prop_assert_eq!(r.kernel_order == 1, r.tag == ClassificationTag::EntryFaithful);
    }
}

#[test]
fn local_equivalence_over_small_codes() {
    let b = budget();
    let cases: Vec<(Code, AutRepresentation)> = vec![
        (rep_nq(5, 2).unwrap(), AutRepresentation::wreath(rep_full(5).unwrap(), 2)),
        (rep_nq(5, 2).unwrap(), AutRepresentation::wreath(rep_top_only(5).unwrap(), 2)),
        (cycle_code(6).unwrap(), cycle_aut(6)),
        (hamming_code(2, 3).unwrap(), {
            let c = hamming_code(2, 3).unwrap();
            AutRepresentation::wreath(projective_code_group(&c, 3, 1).unwrap(), 2)
        }),
    ];
    for (c, rep) in cases {
        let e = (min_distance(&c, &b).unwrap() - 1) / 2;
        for s in 1..=e {
            assert!(check_local_equivalence(&c, &rep, s, &b).unwrap().agree());
        }
    }
}
