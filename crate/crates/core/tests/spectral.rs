mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectree::graph::{enumerate_graphs, make_snk, make_snk_plus};
use spectree::spectral::{
    b_column_sums, eq1_identity_check, eq2_bound_check, exact_radius_snk, exact_radius_snk_plus,
    lemma21_check, link_column_sum, spectral_radius, Lemma21Verdict, DEFAULT_TOL, EQUALITY_TOL,
};
use spectree::Graph;

#[test]
fn radius_matches_dense_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let n = rng.gen_range(2..=30);
        let p = rng.gen_range(0.0..0.7);
        let g = common::random_connected(&mut rng, n, p);
        let mu = spectral_radius(&g, DEFAULT_TOL).unwrap().radius;
        let dense = common::dense_radius(&g);
        assert!((mu - dense).abs() < 1e-8, "n={n}: {mu} vs {dense}");
    }
}

#[test]
fn radius_of_disconnected_and_bipartite_graphs() {
    // K4 + P3: the larger component wins.
    let mut g = Graph::empty(7);
    for u in 0..4 {
        for v in u + 1..4 {
            g.add_edge(u, v);
        }
    }
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    assert!((spectral_radius(&g, DEFAULT_TOL).unwrap().radius - 3.0).abs() < 1e-9);
    let c8 = Graph::cycle(8);
    assert!((spectral_radius(&c8, DEFAULT_TOL).unwrap().radius - 2.0).abs() < 1e-9);
}

#[test]
fn column_sums_match_explicit_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(1..=12);
        let g = common::random_connected(&mut rng, n, 0.3);
        let a = rng.gen_range(0..6);
        let b = rng.gen_range(0..20);
        assert_eq!(b_column_sums(&g, a, b).sums, common::b_sums_dense(&g, a, b));
    }
}

#[test]
fn lemma21_random_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut applied = 0;
    for i in 0..400 {
        let n = rng.gen_range(2..=30);
        let p = rng.gen_range(0.05..0.8);
        let g = common::random_connected(&mut rng, n, p);
        let a: u64 = rng.gen_range(1..=10);
        // Half the cases use the smallest b that meets the hypothesis, so
        // the criterion is actually exercised.
        let b: u64 = if i % 2 == 0 {
            rng.gen_range(1..=10)
        } else {
            let raw = b_column_sums(&g, a as i64, 0)
                .sums
                .into_iter()
                .max()
                .unwrap();
            raw.max(1) as u64
        };
        let v = lemma21_check(&g, a, b, EQUALITY_TOL).unwrap();
        assert!(!v.is_violation(), "violation on n={n} a={a} b={b}: {v:?}");
        if !matches!(v, Lemma21Verdict::HypothesisNotMet(_)) {
            applied += 1;
            assert!(v.margin().unwrap() <= EQUALITY_TOL);
        }
    }
    assert!(applied >= 150, "criterion applied only {applied} times");
}

#[test]
fn lemma21_equality_on_regular_graphs() {
    // For a d-regular graph B_u = d^2 - a d - b vanishes with b = d^2 - a d.
    for (g, d) in [
        (Graph::cycle(9), 2u64),
        (Graph::complete(6), 5),
        (petersen(), 3),
    ] {
        let v = lemma21_check(&g, 1, d * d - d, EQUALITY_TOL).unwrap();
        assert!(matches!(v, Lemma21Verdict::EqualityCase { .. }), "{v:?}");
    }
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

#[test]
fn eq1_and_eq2_exhaustive_small_orders() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap().iter() {
            for k in 1..=4usize {
                let ki = k as i64;
                let ni = n as i64;
                let dense = common::b_sums_dense(g, ki - 1, ki * (ni - ki));
                for (v, &bv) in dense.iter().enumerate() {
                    assert_eq!(bv, common::link_rhs(g, v, ki));
                    assert_eq!(link_column_sum(g, v, ki), bv);
                    assert!(bv <= (g.degree(v) as i64 - ki) * (ni - ki));
                }
                assert!(eq1_identity_check(g, k));
                assert!(eq2_bound_check(g, k));
            }
        }
    }
}

#[test]
fn closed_forms_on_a_grid() {
    for n in [10usize, 100, 1000] {
        for k in 1..=5 {
            let exact = exact_radius_snk(n, k).unwrap();
            let a = (k - 1) as f64;
            let b = (k * (n - k)) as f64;
            let f = exact * exact - a * exact - b;
            assert!(f.abs() <= 1e-12 * (exact * exact).max(1.0));
            let numeric = spectral_radius(&make_snk(n, k).unwrap(), DEFAULT_TOL)
                .unwrap()
                .radius;
            assert!((numeric - exact).abs() <= 1e-8, "S({n},{k})");
            let plus = exact_radius_snk_plus(n, k).unwrap();
            let numeric = spectral_radius(&make_snk_plus(n, k).unwrap(), DEFAULT_TOL)
                .unwrap()
                .radius;
            assert!((numeric - plus).abs() <= 1e-8, "S+({n},{k})");
            assert!(plus > exact);
        }
    }
}

#[test]
fn snk_plus_quotient_matches_dense() {
    for n in 4..=14 {
        for k in 1..=(n - 2).min(6) {
            let g = make_snk_plus(n, k).unwrap();
            let q = exact_radius_snk_plus(n, k).unwrap();
            assert!((q - common::dense_radius(&g)).abs() < 1e-9, "S+({n},{k})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adding_an_edge_never_lowers_the_radius(seed in any::<u64>(), n in 3usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, 0.2);
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[rng.gen_range(0..non_edges.len())];
        let before = spectral_radius(&g, DEFAULT_TOL).unwrap().radius;
        let after = spectral_radius(&g.with_edge(u, v), DEFAULT_TOL).unwrap().radius;
        prop_assert!(after >= before - 1e-9);
    }

    #[test]
    fn radius_lies_between_average_and_max_degree(seed in any::<u64>(), n in 1usize..25) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, 0.3);
        let mu = spectral_radius(&g, DEFAULT_TOL).unwrap().radius;
        let avg = 2.0 * g.size() as f64 / n as f64;
        prop_assert!(mu >= avg - 1e-9);
        prop_assert!(mu <= g.max_degree() as f64 + 1e-9);
    }
}
