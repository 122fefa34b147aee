use proptest::prelude::*;

use equimax::certificate::Certificate;
use equimax::forest::{conflict_set, forest_fk};
use equimax::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use equimax::lowdeg::equate_deg2;
use equimax::oracle::brute_fk;
use equimax::{degree_view, diff_upper_bound, exact_f, random, verify_certificate, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn forest() -> impl Strategy<Value = Graph> {
    (1usize..300, any::<u64>(), any::<bool>()).prop_map(|(n, seed, pref)| {
        if pref {
            random::preferential_forest(n, 0.05, seed)
        } else {
            random::random_forest(n, seed)
        }
    })
}

fn deletion_set(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::btree_set(0..n.max(1), 0..=n)
        .prop_map(move |s| s.into_iter().filter(|&v| v < n).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edge_list_round_trip(g in graph(40)) {
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn degree_sum_is_twice_edges(g in graph(40)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert!(g.validate().is_ok());
    }

    #[test]
    fn deletion_induces_the_remaining_edges((g, del) in graph(25).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), deletion_set(n))
    })) {
        let h = g.delete_vertices(&del).unwrap();
        prop_assert_eq!(h.graph.n(), g.n() - del.len());
        for (a, b) in h.graph.edges() {
            prop_assert!(g.has_edge(h.original[a], h.original[b]));
        }
        let kept_edges = g.edges().filter(|&(u, v)| !del.contains(&u) && !del.contains(&v)).count();
        prop_assert_eq!(h.graph.edge_count(), kept_edges);
        prop_assert!(h.original.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn exact_f_is_certified_and_below_diff(g in graph(60)) {
        let r = exact_f(&g);
        prop_assert!(verify_certificate(&g, &r.certificate));
        prop_assert_eq!(r.certificate.size(), r.value);
        if g.n() >= 2 {
            let d = diff_upper_bound(&g).unwrap();
            prop_assert!(r.value <= d.bound);
            let c = Certificate::evaluate(&g, 2, d.witness.iter().copied());
            prop_assert!(c.achieves_target());
        }
        // the trace minimum is attained at jstar and nowhere earlier
        let terms: Vec<usize> = r.trace.steps.iter().map(|s| s.diff + s.j).collect();
        if let Some(&min) = terms.iter().min() {
            prop_assert_eq!(min, r.value);
            prop_assert_eq!(terms.iter().position(|&t| t == min), Some(r.trace.jstar));
        }
    }

    #[test]
    fn exact_f_matches_oracle(g in graph(10)) {
        prop_assert_eq!(exact_f(&g).value, brute_fk(&g, 2, 16).unwrap().value);
    }

    #[test]
    fn oracle_certificates_verify(g in graph(9), k in 2usize..5) {
        let r = brute_fk(&g, k, 16).unwrap();
        prop_assert!(verify_certificate(&g, &r.certificate));
        prop_assert!(r.value <= g.n().saturating_sub(k - 1));
    }

    #[test]
    fn degree_view_orders_degrees(g in graph(30)) {
        let view = degree_view(&g);
        prop_assert_eq!(view.d1, g.max_degree());
        if let (Some(d1), Some(d2)) = (view.d1, view.d2) {
            prop_assert!(d1 >= d2);
        }
    }

    #[test]
    fn conflict_set_is_smaller_than_a((f, picks) in forest().prop_flat_map(|f| {
        let n = f.n();
        (Just(f), proptest::collection::btree_set(0..n, 0..=n.min(12)))
    })) {
        let a: Vec<usize> = picks.into_iter().collect();
        if a.len() >= 2 {
            let m = conflict_set(&f, &a).unwrap();
            prop_assert!(m.len() < a.len());
            for &x in &m {
                prop_assert!(!a.contains(&x));
                prop_assert!(f.neighbors(x).iter().filter(|y| a.contains(y)).count() >= 2);
            }
        } else {
            prop_assert!(conflict_set(&f, &a).is_err());
        }
    }

    #[test]
    fn forest_certificates_stay_in_budget(n in 27usize..400, seed in any::<u64>(), pref in any::<bool>()) {
        let f = if pref { random::preferential_forest(n, 0.02, seed) } else { random::random_forest(n, seed) };
        let w = (1..).take_while(|x: &usize| x * x * x <= n).last().unwrap();
        for k in (2..).take_while(|k| 2 * k - 1 <= w) {
            let c = forest_fk(&f, k).unwrap();
            prop_assert!(verify_certificate(&f, &c));
            prop_assert!(c.size() <= (2 * k - 1) * w);
        }
    }

    #[test]
    fn deg2_certificates(n in 0usize..40, p in 0.0f64..1.0, seed in any::<u64>(), k in 2usize..9) {
        let g = random::random_bounded_degree(n, 2, p, seed);
        let c = equate_deg2(&g, k).unwrap();
        prop_assert!(verify_certificate(&g, &c));
        prop_assert!(c.size() < k);
    }

    #[test]
    fn generators_are_seeded(n in 0usize..80, p in 0.0f64..=1.0, seed in any::<u64>()) {
        prop_assert_eq!(random::random_graph(n, p, seed), random::random_graph(n, p, seed));
        let f = random::random_forest(n, seed);
        prop_assert!(f.is_forest());
        let b = random::random_bounded_degree(n, 2, p, seed);
        prop_assert!(b.max_degree().unwrap_or(0) <= 2);
    }
}
