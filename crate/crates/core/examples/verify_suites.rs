//! Run verification suites from code.
//!
//! ```text
//! cargo run --release --example verify_suites [-- SUITE...]
//! ```

use equimax::harness::{run_suite, Suite, SuiteConfig};

fn main() -> equimax::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let suites: Vec<Suite> = if names.is_empty() {
        vec![
            Suite::SharpnessDelta,
            Suite::SharpnessN,
            Suite::Trees,
            Suite::ForestBound,
        ]
    } else {
        names
            .iter()
            .map(|s| s.parse())
            .collect::<equimax::Result<_>>()?
    };
    let cfg = SuiteConfig {
        seed: 1,
        ..SuiteConfig::default()
    };
    for suite in suites {
        let r = run_suite(suite, &cfg)?;
        println!(
            "{:<20} {:>6} cases  {} failures",
            suite.name(),
            r.cases,
            r.failures.len()
        );
        for f in r.failures.iter().take(5) {
            println!("    {}: {}", f.case, f.detail);
        }
    }
    Ok(())
}
