//! Seeded generators.
//!
//! ```text
//! cargo run --example random_graphs
//! ```

use equimax::{exact_f, random};

fn main() {
    let g = random::random_graph(50, 0.1, 3);
    println!(
        "G(50, 0.1): {} edges, f = {}",
        g.edge_count(),
        exact_f(&g).value
    );

    let f = random::random_forest(50, 3);
    println!(
        "random forest: {} edges, forest = {}",
        f.edge_count(),
        f.is_forest()
    );

    let p = random::preferential_forest(50, 0.02, 3);
    println!("preferential forest: Δ = {:?}", p.max_degree());

    let d = random::random_bounded_degree(20, 2, 0.8, 3);
    println!("Δ ≤ 2 graph: {} components", d.components().len());

    let m = random::random_graph_with_edges(12, 18, 3);
    println!("exactly 18 edges: {}", m.edge_count());

    // Same seed, same graph.
    assert_eq!(random::random_graph(50, 0.1, 3), g);
}
