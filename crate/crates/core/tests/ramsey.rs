//! R(3,3) = 6 by exhaustion, the only diagonal Ramsey value small enough
//! to check here.

use equimax::bounds::h_ramsey_cap;
use equimax::graph::named;
use equimax::{random, Graph};

fn has_triangle_or_independent_triple(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)];
                if e.iter().all(|&x| x) || e.iter().all(|&x| !x) {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn every_graph_on_six_vertices_is_forced() {
    assert!((0..1u64 << 15)
        .all(|code| has_triangle_or_independent_triple(&random::labeled_graph(6, code))));
}

#[test]
fn five_cycle_avoids_both() {
    assert!(!has_triangle_or_independent_triple(&named::cycle(5)));
    assert_eq!(h_ramsey_cap(3).unwrap(), 5);
}

#[test]
fn ramsey_cap_is_known_only_for_small_k() {
    assert_eq!(h_ramsey_cap(2).unwrap(), 1);
    assert_eq!(h_ramsey_cap(4).unwrap(), 17);
    assert!(matches!(h_ramsey_cap(5), Err(equimax::Error::Unknown(_))));
}
