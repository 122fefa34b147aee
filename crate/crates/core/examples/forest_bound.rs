//! The forest procedure: at most (2k-1)·⌊n^(1/3)⌋ deletions.
//!
//! ```text
//! cargo run --example forest_bound [-- N K SEED]
//! ```

use equimax::forest::{forest_fk_run, interval_partition, ForestOutcome};
use equimax::{random, verify_certificate};

fn main() -> equimax::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("numeric argument"));
    let n = args.next().unwrap_or(900) as usize;
    let k = args.next().unwrap_or(3) as usize;
    let seed = args.next().unwrap_or(5);

    let f = random::preferential_forest(n, 0.05, seed);
    let part = interval_partition(&f);
    println!(
        "forest: n={n}, {} edges, Δ={}",
        f.edge_count(),
        f.max_degree().unwrap_or(0)
    );
    println!("w = ⌊n^(1/3)⌋ = {}, |A_L| = {}", part.w, part.top.len());
    for (j, b) in part
        .buckets
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_empty())
    {
        println!("  A_{j}: {} vertices", b.len());
    }

    let run = forest_fk_run(&f, k)?;
    println!(
        "k={k}: {} deletions (budget {}), A_L removed {}, peeled {}",
        run.certificate.size(),
        run.budget(),
        run.top_size,
        run.peeled
    );
    match &run.outcome {
        ForestOutcome::Greedy => println!("finished greedily in A_0"),
        ForestOutcome::Equalized { interval, plan } => {
            println!("equalized in A_{interval}: chosen {:?}", plan.chosen);
            println!("  degrees {:?}, excess {:?}", plan.degrees, plan.excess);
            println!("  conflict set M(A) = {:?}", plan.conflict);
        }
    }
    println!(
        "result: Δ(H) = {:?}, realized by {:?}",
        run.certificate.result_max_degree, run.certificate.realizing
    );
    assert!(verify_certificate(&f, &run.certificate));
    Ok(())
}
