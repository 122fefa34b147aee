//! Edge-list and graph6 round trips.
//!
//! ```text
//! cargo run --example formats
//! ```

use equimax::graph::named;
use equimax::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};

fn main() -> Result<(), equimax::io::ParseError> {
    let text = "# a 4-cycle with a pendant\n5 5\n0 1\n1 2\n2 3\n3 0\n3 4\n";
    let g = parse_edge_list(text)?;
    let g6 = emit_graph6(&g);
    println!("edge list:\n{}", emit_edge_list(&g));
    println!("graph6: {}", String::from_utf8_lossy(&g6));
    assert_eq!(parse_graph6(&g6)?, g);

    for g in [named::complete(2), named::path(100)] {
        let g6 = emit_graph6(&g);
        let head: Vec<u8> = g6.iter().take(4).copied().collect();
        println!("n={:<4} {} bytes, header {head:?}", g.n(), g6.len());
        assert_eq!(parse_graph6(&g6)?, g);
    }

    match parse_edge_list("3 1\n0 0\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
