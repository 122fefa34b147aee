//! Closed-form bounds, tabulated.
//!
//! ```text
//! cargo run --example bounds_table
//! ```

use equimax::bounds::{
    a_seq, bound_f_delta, bound_f_n, g_exact, h_exact, h_ramsey_cap, lemma_bound, sparse_bound,
};

fn main() {
    println!("a_j: {:?}", (1..=8).map(a_seq).collect::<Vec<_>>());

    println!("\nlargest f by maximum degree");
    for delta in [1, 2, 3, 4, 6, 7, 10, 11, 100, 10_000] {
        println!("  Δ = {delta:>6}: {}", bound_f_delta(delta));
    }
    println!("\nlargest f by order");
    for n in [4, 6, 7, 10, 11, 100, 1_000_000] {
        println!("  n = {n:>7}: {}", bound_f_n(n).unwrap());
    }

    println!("\n   k  g(1,k) g(2,k) h(0,k) h(1,k) h(2,k) (k-1)Δ@Δ=3");
    for k in 2..=7 {
        let cell = |r: equimax::Result<usize>| r.map_or("?".to_string(), |v| v.to_string());
        println!(
            "{k:>4}  {:>6} {:>6} {:>6} {:>6} {:>6} {:>10}",
            cell(g_exact(1, k)),
            cell(g_exact(2, k)),
            cell(h_exact(0, k)),
            cell(h_exact(1, k)),
            cell(h_exact(2, k)),
            lemma_bound(k, 3)
        );
    }

    for k in 2..=5 {
        match h_ramsey_cap(k) {
            Ok(v) => println!("R({k},{k}) - 1 = {v}"),
            Err(e) => println!("R({k},{k}): {e}"),
        }
    }
    for (n, c) in [(100, 1.0), (10_000, 2.0)] {
        println!(
            "sparse bound n={n}, c={c}, k=3: {:.2}",
            sparse_bound(n, c, 0.0, 3).unwrap()
        );
    }
}
