use std::collections::BTreeSet;
use std::sync::Arc;

use gcw::algebra::{FiniteField, Perm, PermGroup};
use gcw::codecore::{min_distance, Code};
use gcw::constructions::*;
use gcw::graphs::Graph;
use gcw::structure::*;
use gcw::symmetry::AutRepresentation;
use gcw::{Budget, Error};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn budget() -> Budget {
    Budget::default()
}

fn h42() -> Arc<Graph> {
    Arc::new(Graph::hamming(4, 2).unwrap())
}

fn code(graph: &Arc<Graph>, labels: &[&str]) -> Code {
    Code::new(graph.clone(), labels.iter().map(|l| graph.parse_label(l).unwrap())).unwrap()
}

/// Direct oracle: the non-codewords within distance one of `C`.
fn neighbours_oracle(c: &Code) -> BTreeSet<usize> {
    let g = c.graph();
    (0..g.vertex_count()).filter(|&v| !c.contains(v) && c.words().iter().any(|&w| g.distance(v, w) == Some(1))).collect()
}

fn translation(rows: &[Vec<u32>]) -> AutRepresentation {
    let f = FiniteField::of_order(2).unwrap();
    AutRepresentation::wreath(translation_group(&f, rows).unwrap(), 2)
}

#[test]
fn elusive_pair_in_h42() {
    let g = h42();
    let c = code(&g, &["0000", "1111"]);
    let c2 = code(&g, &["0000", "1010", "0101", "1111"]);
    let x = code(&g, &["0001", "0010", "1101", "1110", "0100", "1000", "0111", "1011"]);
    assert_eq!(neighbour_set(&c).members(), x.words());
    assert_eq!(neighbour_set(&c2).members(), x.words());
    assert_eq!(neighbour_set(&c).members().iter().copied().collect::<BTreeSet<_>>(), neighbours_oracle(&c));
    assert_eq!((min_distance(&c, &budget()).unwrap(), min_distance(&c2, &budget()).unwrap()), (4, 2));

    let search = translation(&[vec![1, 0, 1, 0]]);
    let ElusiveVerdict::Elusive(w) = is_elusive(&c, ElusiveSearch::Generators(&search), &budget()).unwrap() else {
        panic!("expected a witness")
    };
    let image = code(&g, &w.image.iter().map(String::as_str).collect::<Vec<_>>());
    assert!(image.words().iter().all(|&v| c2.contains(v)));
    assert!(!image.same_set(&c));
    assert_eq!(w.spherical_bitrade, Some(true));
    assert!(is_spherical_bitrade(&c, &image).unwrap().holds);
    assert!(is_s_elusive_pair(&c, &image, 1, &budget()).unwrap());

    let ElusiveVerdict::Elusive(w) = is_elusive(&c, ElusiveSearch::Ambient(None), &budget()).unwrap() else {
        panic!("expected a witness from the ambient search")
    };
    let image = code(&g, &w.image.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(neighbour_set(&image).members(), x.words());

    // below δ = 5 the reconstruction keeps both codes
    let back = reconstruct(&neighbour_set(&c), &budget()).unwrap();
    assert!(c.words().iter().all(|&v| back.contains(v)));
    assert!(c2.words().iter().all(|&v| back.contains(v)));
    assert!(back.len() > c.len());
}

#[test]
fn generators_must_fix_the_neighbour_set() {
    let g = h42();
    let c = code(&g, &["0000", "1111"]);
    let bad = translation(&[vec![1, 0, 0, 0]]);
    assert!(matches!(is_elusive(&c, ElusiveSearch::Generators(&bad), &budget()), Err(Error::Precondition(_))));
}

#[test]
fn golay_reconstruction_and_not_elusive() {
    let b = budget();
    let golay = classical_code("golay23").unwrap();
    let ns = neighbour_set(&golay);
    assert_eq!(ns.len(), 4096 * 23);
    assert!(reconstruct(&ns, &b).unwrap().same_set(&golay));
    let rep = AutRepresentation::wreath(golay23_aut().unwrap(), 2);
    let verdict = is_elusive(&golay, ElusiveSearch::Generators(&rep), &b).unwrap();
    assert!(matches!(verdict, ElusiveVerdict::NotFound { determined: true, .. }), "{verdict:?}");
}

#[test]
fn catalog_round_trips() {
    let b = budget();
    for entry in catalog() {
        let c = classical_code(entry.name).unwrap();
        assert!(entry.min_distance >= 5);
        assert!(check_round_trip(&c, &b).unwrap(), "{}", entry.name);
    }
}

#[test]
fn trivial_reconstructions() {
    let b = budget();
    let g = Arc::new(Graph::hamming(3, 2).unwrap());
    let single = code(&g, &["101"]);
    assert!(reconstruct(&neighbour_set(&single), &b).unwrap().same_set(&single));

    let all = Code::new(g.clone(), 0..8).unwrap();
    assert!(neighbour_set(&all).is_empty());
    let verdict = is_elusive(&all, ElusiveSearch::Ambient(None), &b).unwrap();
    assert!(matches!(verdict, ElusiveVerdict::NotFound { .. }));

    let square = Arc::new(Graph::cycle(4).unwrap());
    let c = Code::new(square, [0]).unwrap();
    assert!(matches!(reconstruct(&neighbour_set(&c), &b), Err(Error::Precondition(_))));
}

#[test]
fn bitrade_checks() {
    let g = h42();
    let c = code(&g, &["0000", "1111"]);
    assert!(is_spherical_bitrade(&c, &c).unwrap().holds);
    let r = is_spherical_bitrade(&code(&g, &["0000"]), &code(&g, &["0011"])).unwrap();
    assert!(!r.holds);
    let cx = r.counterexample.unwrap();
    // direct count oracle at the reported vertex
    let v = g.parse_label(&cx.vertex).unwrap();
    let count = |w: &str| usize::from(g.distance(v, g.parse_label(w).unwrap()) == Some(1));
    assert_eq!((cx.first, cx.second), (count("0000"), count("0011")));
    assert_ne!(cx.first, cx.second);
    assert_eq!(cx.vertex, "0100");

    let other = Code::new(Arc::new(Graph::hamming(5, 2).unwrap()), [0]).unwrap();
    assert!(is_spherical_bitrade(&c, &other).is_err());
}

fn cycle_rep(m: usize, gens: &[Perm]) -> AutRepresentation {
    AutRepresentation::Vertex(PermGroup::new(m, gens.to_vec()).unwrap())
}

#[test]
fn cycle_quotients() {
    let b = budget();
    let square = Arc::new(Graph::cycle(4).unwrap());
    let half = Perm::from_fn(4, |i| (i + 2) % 4);
    let q = quotient(&square, &cycle_rep(4, &[half.clone()]), &b).unwrap();
    assert_eq!(q.blocks, vec![vec![0, 2], vec![1, 3]]);
    assert_eq!(q.graph.neighbors(0), vec![1]);
    let dihedral = cycle_rep(4, &[Perm::from_fn(4, |i| (i + 1) % 4), Perm::from_fn(4, |i| (4 - i) % 4)]);
    let r = verify_quotient_prop(&square, &dihedral, &[half], 0, 1, &b).unwrap();
    assert!(r.quotient.holds && r.hypotheses());

    let octagon = Arc::new(Graph::cycle(8).unwrap());
    let quarter = Perm::from_fn(8, |i| (i + 4) % 8);
    let dihedral = cycle_rep(8, &[Perm::from_fn(8, |i| (i + 1) % 8), Perm::from_fn(8, |i| (8 - i) % 8)]);
    let r = verify_quotient_prop(&octagon, &dihedral, &[quarter.clone()], 0, 1, &b).unwrap();
    assert_eq!(r.blocks, 4);
    assert!(r.quotient.holds);
    let q = quotient(&octagon, &cycle_rep(8, &[quarter]), &b).unwrap();
    assert!((0..4).all(|v| q.graph.degree(v) == 2));
    assert_eq!(q.graph.diameter(&b).unwrap(), 2);

    // a reflection is not normal in the dihedral group
    let reflection = Perm::from_fn(8, |i| (8 - i) % 8);
    assert!(matches!(verify_quotient_prop(&octagon, &dihedral, &[reflection], 0, 1, &b), Err(Error::Precondition(_))));
    let rotation = Perm::from_fn(8, |i| (i + 1) % 8);
    assert!(quotient(&octagon, &cycle_rep(8, &[rotation]), &b).is_err());
}

#[test]
fn reed_muller_coset_graph() {
    let b = budget();
    let rm = grm(2, 1, 3).unwrap();
    let f = FiniteField::of_order(2).unwrap();
    let units: Vec<Vec<u32>> = (0..8).map(|i| (0..8).map(|j| u32::from(i == j)).collect()).collect();
    let g = affine_code_group(&rm, 2, 3).unwrap().join(&translation_group(&f, &units).unwrap());
    assert_eq!(g.order(), 256 * 1344);
    let n = translation_group(&f, &rm.linear_descriptor().unwrap().generator).unwrap();
    let graph = rm.graph().clone();
    let r = verify_quotient_prop(&graph, &AutRepresentation::wreath(g.clone(), 2), n.gens(), 0, 2, &b).unwrap();
    assert_eq!((r.blocks, r.code_size), (16, 16));
    assert!(r.hypotheses() && r.quotient.holds);
    assert_eq!(r.quotient.pair_transitive, vec![true, true]);

    // oracle: the 16 cosets, with the quotient pair orbits counted directly
    let rep = AutRepresentation::wreath(n, 2);
    let q = quotient(&graph, &rep, &b).unwrap();
    let h = graph.as_hamming().unwrap();
    let coset_of = |v: usize| rm.words().iter().map(|&w| h.from_digits(&add(&h.digits(v), &h.digits(w)))).min().unwrap();
    let cosets: BTreeSet<usize> = (0..256).map(coset_of).collect();
    assert_eq!(cosets.len(), q.block_count());
    for (k, block) in q.blocks.iter().enumerate() {
        assert!(block.iter().all(|&v| q.block_of[v] as usize == k && coset_of(v) == block[0]));
    }
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

#[test]
fn distance_transitivity_of_small_graphs() {
    let b = budget();
    let cube = Graph::hamming(3, 2).unwrap();
    let aut = hamming_automorphisms(3, 2).unwrap();
    let action_rep = AutRepresentation::wreath(aut, 2);
    let action = action_rep.vertex_action(&cube).unwrap();
    let vertex_group = PermGroup::new(8, action_rep.group().gens().iter().map(|g| Perm::from_fn(8, |v| action.apply(v, g))).collect()).unwrap();
    let r = is_s_distance_transitive(&cube, &vertex_group, 3, &b).unwrap();
    assert!(r.holds);
    let rotation = PermGroup::new(8, vec![Perm::from_fn(8, |v| v ^ 1), Perm::from_fn(8, |v| v ^ 2), Perm::from_fn(8, |v| v ^ 4)]).unwrap();
    let r = is_s_distance_transitive(&cube, &rotation, 2, &b).unwrap();
    assert!(r.vertex_transitive && !r.holds);
}

/// A random binary code with minimum distance at least 5, built greedily.
fn greedy_code(n: usize, seed: u64) -> Code {
    let graph = Arc::new(Graph::hamming(n, 2).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words: Vec<usize> = Vec::new();
    for _ in 0..200 {
        let v = rng.gen_range(0..1usize << n);
        if words.iter().all(|&w| (v ^ w).count_ones() >= 5) {
            words.push(v);
        }
    }
    Code::new(graph, words).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reconstruction_inverts_neighbour_sets(n in 6usize..=10, seed in any::<u64>()) {
        let c = greedy_code(n, seed);
        let ns = neighbour_set(&c);
        prop_assert_eq!(ns.members().iter().copied().collect::<BTreeSet<_>>(), neighbours_oracle(&c));
        prop_assert!(reconstruct(&ns, &budget()).unwrap().same_set(&c));
    }

    #[test]
    fn elusive_witnesses_are_sound(seed in any::<u64>(), size in 1usize..=4) {
        let graph = Arc::new(Graph::hamming(4, 2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = Code::new(graph.clone(), (0..size).map(|_| rng.gen_range(0..16))).unwrap();
        if let ElusiveVerdict::Elusive(w) = is_elusive(&c, ElusiveSearch::Ambient(None), &budget()).unwrap() {
            let image = Code::new(graph.clone(), w.image.iter().map(|l| graph.parse_label(l).unwrap())).unwrap();
            prop_assert!(!image.same_set(&c));
            prop_assert_eq!(neighbours_oracle(&image), neighbours_oracle(&c));
            if c.len() < 2 || min_distance(&c, &budget()).unwrap() >= 3 {
                prop_assert!(is_spherical_bitrade(&c, &image).unwrap().holds);
            }
        }
    }

    #[test]
    fn quotient_blocks_are_translation_cosets(mask in 1u32..255) {
        let rows: Vec<Vec<u32>> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| (0..8).map(|j| u32::from(i == j)).collect()).collect();
        let graph = Arc::new(Graph::hamming(8, 2).unwrap());
        let q = quotient(&graph, &translation(&rows), &budget()).unwrap();
        prop_assert_eq!(q.block_count(), 1usize << (8 - rows.len()));
        prop_assert!(q.blocks.iter().all(|b| b.len() == 1 << rows.len()));
    }
}
