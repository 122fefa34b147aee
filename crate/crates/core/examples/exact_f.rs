//! f(G) exactly, with the deletion trace and a certificate.
//!
//! ```text
//! cargo run --example exact_f
//! ```

use equimax::graph::named;
use equimax::{diff_upper_bound, exact_f, verify_certificate, Graph};

fn show(name: &str, g: &Graph) {
    let r = exact_f(g);
    let diff = diff_upper_bound(g).map(|d| d.bound).unwrap_or(0);
    println!(
        "{name:<22} n={:<3} Δ={:<3} diff={diff:<3} f={}  delete {:?}",
        g.n(),
        g.max_degree().unwrap_or(0),
        r.value,
        r.certificate.deleted,
    );
    assert!(verify_certificate(g, &r.certificate));
}

fn main() {
    show("K_{1,2}", &named::star(2));
    show("C_5", &named::cycle(5));
    show(
        "K_{1,4} ∪ K_{1,7}",
        &named::union(&[named::star(4), named::star(7)]),
    );
    show("S_{5,8}", &named::double_star(5, 8));
    let stars = named::union(&[2, 4, 7, 13].map(named::star));
    show("stars 2,4,7,13", &stars);

    // The trace lists diff(G_j) + j for every prefix of greedy deletions.
    let r = exact_f(&stars);
    println!(
        "\ntrace for stars 2,4,7,13 (minimum at j = {}):",
        r.trace.jstar
    );
    println!("  j  deleted  d1  d2  diff  diff+j");
    for s in r.trace.steps.iter().take(6) {
        let del = s.deleted_vertex.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:>3}  {del:>7}  {:>2}  {:>2}  {:>4}  {:>6}",
            s.j,
            s.d1,
            s.d2,
            s.diff,
            s.diff + s.j
        );
    }
}
