//! Graphs of maximum degree at most 2: decomposition and the k-1 bound.
//!
//! ```text
//! cargo run --example low_degree
//! ```

use equimax::graph::named;
use equimax::lowdeg::{decompose_deg2, equate_deg2_run, min_dominating_paths_cycles};
use equimax::{brute_fk, verify_certificate};

fn main() -> equimax::Result<()> {
    let g = named::union(&[
        named::path(6),
        named::star(2),
        named::star(2),
        named::star(2),
        named::path(2),
        named::path(2),
        named::path(1),
    ]);
    let d = decompose_deg2(&g)?;
    println!(
        "components: {} small, {} cherries, {} other",
        d.small.len(),
        d.cherries.len(),
        d.other.len()
    );
    println!("degree counts (0, 1, 2): {:?}", d.counts);
    println!(
        "core has {} vertices, dominated by {:?}",
        d.core.graph.n(),
        d.dominating
    );

    for k in 2..=10 {
        let run = equate_deg2_run(&g, k)?;
        assert!(verify_certificate(&g, &run.certificate));
        println!(
            "k={k}: {} deletions via {:?}, {} vertices of degree {:?}",
            run.certificate.size(),
            run.branch,
            run.certificate.realizing.len(),
            run.certificate.result_max_degree
        );
    }

    // The dominating set of a path or cycle takes every third vertex.
    let c9 = named::cycle(9);
    println!(
        "C_9 dominating set: {:?}",
        min_dominating_paths_cycles(&c9)?
    );

    // Sharpness: (k-1) K_{1,2}.
    let k = 4;
    let sharp = named::copies(&named::star(2), k - 1);
    let run = equate_deg2_run(&sharp, k)?;
    println!(
        "3K_{{1,2}}, k=4: procedure {} = oracle {}",
        run.certificate.size(),
        brute_fk(&sharp, k, 16)?.value
    );
    Ok(())
}
