//! Exhaustive f_k and k-feasibility on small graphs.
//!
//! ```text
//! cargo run --example oracle
//! ```

use equimax::graph::named;
use equimax::oracle::{DEFAULT_FEASIBLE_GUARD, DEFAULT_FK_GUARD};
use equimax::{brute_feasible, brute_fk, exact_f, random};

fn main() -> equimax::Result<()> {
    let p4 = named::path(4);
    for k in 2..=4 {
        let r = brute_fk(&p4, k, DEFAULT_FK_GUARD)?;
        let feas = brute_feasible(&p4, k, DEFAULT_FEASIBLE_GUARD)?;
        println!(
            "P_4 k={k}: f_k = {} via {:?}, feasible = {} {:?}",
            r.value, r.certificate.deleted, feas.feasible, feas.witness
        );
    }

    // (k-1) copies of K_{1,2} need k-1 deletions.
    for k in 2..=5 {
        let g = named::copies(&named::star(2), k - 1);
        println!(
            "{}K_{{1,2}}: f_{k} = {}",
            k - 1,
            brute_fk(&g, k, DEFAULT_FK_GUARD)?.value
        );
    }

    // Spot-check the exact algorithm against the oracle.
    let mut agree = 0;
    for seed in 0..200 {
        let g = random::random_graph(9, 0.4, seed);
        if exact_f(&g).value == brute_fk(&g, 2, DEFAULT_FK_GUARD)?.value {
            agree += 1;
        }
    }
    println!("exact_f agrees with the oracle on {agree}/200 random graphs");

    // Oversized inputs are refused rather than enumerated.
    let big = named::path(40);
    println!("P_40: {}", brute_fk(&big, 2, DEFAULT_FK_GUARD).unwrap_err());
    Ok(())
}
