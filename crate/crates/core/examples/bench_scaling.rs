//! Scaling of the exact algorithm on sparse random graphs.
//!
//! ```text
//! cargo run --release --example bench_scaling
//! ```

use equimax::bench::{bench_ladder, Density};

fn main() {
    let ns = [1000, 2000, 4000, 8000, 16000];
    let report = bench_ladder(&ns, Density::AverageDegree(4.0), 0, 5);
    for r in &report.runs {
        println!(
            "n={:>6} e={:>6} f={:>3} {:>10.3} ms",
            r.n,
            r.edges,
            r.value,
            r.seconds * 1e3
        );
    }
    if let Some(x) = report.exponent {
        println!("fitted exponent: {x:.2}");
    }
}
