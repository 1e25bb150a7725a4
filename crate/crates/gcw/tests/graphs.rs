use gcw::graphs::*;
use gcw::Budget;
use proptest::prelude::*;

fn budget() -> Budget {
    Budget::default()
}

#[test]
fn hamming_4_2_adjacency_matches_coordinate_oracle() {
    let g = Graph::hamming(4, 2).unwrap();
    assert_eq!(g.vertex_count(), 16);
    for u in 0..16 {
        let mut nb = g.neighbors(u);
        nb.sort();
        let oracle: Vec<usize> = (0..16).filter(|&v| (u ^ v as usize).count_ones() == 1).collect();
        assert_eq!(nb, oracle);
        assert_eq!(g.degree(u), 4);
    }
    assert_eq!(g.sphere(0, 2).len(), 6);
    assert!(g.sphere(0, 2).iter().all(|&v| v.count_ones() == 2));
    assert_eq!(g.ball(5, 0), vec![5]);
}

#[test]
fn hamming_distance_counts_differing_entries() {
    let g = Graph::hamming(3, 5).unwrap();
    let Graph::Hamming(h) = &g else { unreachable!() };
    for u in 0..125 {
        let dist = bfs_distances(&g, &[u]);
        for v in 0..125 {
            let du = h.digits(u);
            let dv = h.digits(v);
            let diff = du.iter().zip(&dv).filter(|(a, b)| a != b).count();
            assert_eq!(g.distance(u, v), Some(diff));
            assert_eq!(dist[v] as usize, diff);
        }
        for i in 0..=3 {
            let s = g.sphere(u, i);
            let oracle: Vec<usize> = (0..125).filter(|&v| dist[v] as usize == i).collect();
            assert_eq!(s, oracle);
        }
    }
}

#[test]
fn kneser_5_2_is_petersen() {
    let g = Graph::kneser(5, 2).unwrap();
    assert_eq!(g.vertex_count(), 10);
    assert!((0..10).all(|v| g.degree(v) == 3));
    assert_eq!(g.diameter(&budget()).unwrap(), 2);
    let ia = is_distance_regular(&g, &budget()).unwrap().unwrap();
    assert_eq!(ia.to_string(), "{3,2;1,1}");
    assert_eq!(girth(&g), Some(5));
}

#[test]
fn cube_intersection_array() {
    let g = Graph::hamming(3, 2).unwrap();
    assert_eq!(is_distance_regular(&g, &budget()).unwrap().unwrap().to_string(), "{3,2,1;1,2,3}");
}

#[test]
fn irregular_structure_is_not_distance_regular() {
    // a path of three lines glued at points
    let s = IncidenceStructure::new("path", 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
    let g = s.incidence_graph();
    assert_eq!(is_distance_regular(&g, &budget()).unwrap(), None);
}

#[test]
fn single_flag_incidence_graph_is_an_edge() {
    let s = IncidenceStructure::new("flag", 1, vec![vec![0]]).unwrap();
    let g = s.incidence_graph();
    assert_eq!(g.vertex_count(), 2);
    assert_eq!(g.neighbors(0), vec![1]);
    assert_eq!(g.neighbors(1), vec![0]);
}

#[test]
fn johnson_distance_is_k_minus_intersection() {
    let g = Graph::johnson(7, 3).unwrap();
    let Graph::Johnson(s) = &g else { unreachable!() };
    for u in 0..g.vertex_count() {
        let dist = bfs_distances(&g, &[u]);
        for v in 0..g.vertex_count() {
            let a = s.unrank(u);
            let b = s.unrank(v);
            let inter = a.iter().filter(|x| b.contains(x)).count();
            assert_eq!(dist[v] as usize, 3 - inter);
            assert_eq!(g.distance(u, v), Some(3 - inter));
        }
    }
    assert_eq!(is_distance_regular(&g, &budget()).unwrap().unwrap().to_string(), "{12,6,2;1,4,9}");
}

#[test]
fn cycle_metric() {
    let g = Graph::cycle(8).unwrap();
    assert_eq!(g.distance(0, 5), Some(3));
    assert_eq!(bfs_distances(&g, &[0])[5], 3);
}

#[test]
fn symplectic_quadrangles() {
    for (q, n) in [(2u32, 15usize), (3, 40)] {
        let w = build_w3(q).unwrap();
        assert_eq!(w.points, n);
        assert_eq!(w.num_lines(), n);
        w.check_gq_axioms(q as usize, q as usize).unwrap();
        let g = w.incidence_graph();
        assert_eq!(g.diameter(&budget()).unwrap(), 4);
        assert_eq!(girth(&g), Some(8));
        assert!((0..g.vertex_count()).all(|v| g.degree(v) == q as usize + 1));
    }
}

#[test]
fn pg3_counts_and_dual_collinearity_is_grassmann() {
    let pg = build_pg3(2).unwrap();
    assert_eq!(pg.points, 15);
    assert_eq!(pg.num_lines(), 35);
    assert_eq!(pg.incidence_graph().vertex_count(), 50);
    assert_eq!(build_pg3(3).unwrap().num_lines(), 130);
    // PG(3,q) is not a GQ: two lines in a plane meet
    assert!(pg.check_gq_axioms(2, 6).is_err());

    let dual = pg.dualize();
    let col = dual.collinearity_graph();
    let j = grassmann(2, 4, 2, 100_000).unwrap();
    assert_eq!(col.vertex_count(), j.vertex_count());
    // both are sorted by the same echelon bases, so ids coincide
    for v in 0..col.vertex_count() {
        let mut a = col.neighbors(v);
        a.sort();
        let mut b = j.neighbors(v);
        b.sort();
        assert_eq!(a, b);
    }
    assert_eq!(is_distance_regular(&j, &budget()).unwrap().unwrap().to_string(), "{18,8;1,9}");
}

#[test]
fn forms_graph_rank_metric() {
    let g = GraphSpec::parse("forms:m=2,n=3,q=2").unwrap().build(&budget()).unwrap();
    assert_eq!(g.vertex_count(), 64);
    assert_eq!(g.degree(0), 21);
    for u in 0..64 {
        let d = bfs_distances(&g, &[u]);
        for v in 0..64 {
            assert_eq!(g.distance(u, v), Some(d[v] as usize));
        }
    }
    assert!(is_distance_regular(&g, &budget()).unwrap().is_some());
}

#[test]
fn reducedness() {
    let b = budget();
    assert!(!Graph::hamming(2, 2).unwrap().is_reduced(&b).unwrap());
    assert!(Graph::hamming(4, 2).unwrap().is_reduced(&b).unwrap());
    assert!(!Graph::johnson(4, 2).unwrap().is_reduced(&b).unwrap());
    assert!(Graph::johnson(5, 2).unwrap().is_reduced(&b).unwrap());
    assert!(Graph::hamming(23, 2).unwrap().is_reduced(&b).unwrap());
}

#[test]
fn spec_strings() {
    for s in ["hamming:n=8,q=2", "kneser:v=13,k=6", "w3:q=2", "pg3:q=2", "cycle:m=8", "johnson:v=5,k=2", "forms:m=3,n=3,q=2"] {
        let spec = GraphSpec::parse(s).unwrap();
        assert_eq!(spec.to_string(), s);
        let g = spec.build(&budget()).unwrap();
        assert!(g.vertex_count() > 0);
    }
    assert_eq!(GraphSpec::parse(" Hamming : q=2, n=8").unwrap().to_string(), "hamming:n=8,q=2");
    assert!(GraphSpec::parse("hamming:n=8").is_err());
    assert!(GraphSpec::parse("torus:n=3").is_err());
    assert!(GraphSpec::parse("cycle:m=8,x=1").is_err());
    assert!(Graph::kneser(5, 3).is_err());
    assert!(Graph::johnson(5, 1).is_err());
}

#[test]
fn labels_round_trip() {
    let b = budget();
    for s in ["hamming:n=3,q=12", "hamming:n=5,q=2", "johnson:v=6,k=3", "kneser:v=7,k=3", "forms:m=2,n=2,q=3", "w3:q=2", "cycle:m=9"] {
        let g = GraphSpec::parse(s).unwrap().build(&b).unwrap();
        for v in 0..g.vertex_count() {
            assert_eq!(g.parse_label(&g.label(v)).unwrap(), v, "{s} vertex {v}");
        }
    }
}

fn families() -> Vec<Graph> {
    let b = budget();
    ["hamming:n=5,q=3", "johnson:v=8,k=3", "kneser:v=9,k=3", "cycle:m=11", "forms:m=2,n=2,q=3", "w3:q=3", "grassmann:d=4,k=2,q=2"]
        .iter()
        .map(|s| GraphSpec::parse(s).unwrap().build(&b).unwrap())
        .collect()
}

#[test]
fn adjacency_symmetric_irreflexive_duplicate_free() {
    for g in families() {
        for v in 0..g.vertex_count() {
            let nb = g.neighbors(v);
            let mut s = nb.clone();
            s.sort();
            s.dedup();
            assert_eq!(s.len(), nb.len(), "{}", g.spec());
            assert!(!nb.contains(&v));
            for w in nb {
                assert!(g.neighbors(w).contains(&v));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn metric_axioms(fam in 0usize..7, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let gs = families();
        let g = &gs[fam];
        let n = g.vertex_count() as u64;
        let (u, v, w) = ((a % n) as usize, (b % n) as usize, (c % n) as usize);
        let duv = g.distance(u, v).unwrap();
        prop_assert_eq!(duv, g.distance(v, u).unwrap());
        prop_assert!(duv <= g.distance(u, w).unwrap() + g.distance(w, v).unwrap());
        prop_assert_eq!(duv, bfs_distances(g, &[u])[v] as usize);
    }
}
