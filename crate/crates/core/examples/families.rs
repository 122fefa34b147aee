//! Gallery of the extremal constructions and their claims.
//!
//! ```text
//! cargo run --example families
//! ```

use equimax::families::{Claim, FamilySpec};
use equimax::harness::{check_family, SuiteConfig};

fn main() -> equimax::Result<()> {
    let specs = [
        FamilySpec::StarsDelta { delta: 13 },
        FamilySpec::Gn { n: 23 },
        FamilySpec::TreeT { t: 2 },
        FamilySpec::TreeT { t: 3 },
        FamilySpec::G1Extremal { k: 5, m: 3 },
        FamilySpec::G2Extremal { k: 4 },
        FamilySpec::StarLadder { delta: 4, k: 2 },
        FamilySpec::H1Extremal { k: 5 },
        FamilySpec::H2Extremal { k: 4 },
    ];
    let cfg = SuiteConfig::default();
    println!(
        "{:<28} {:>4} {:>4}  {:<24} check",
        "instance", "n", "e", "claim"
    );
    for spec in specs {
        let inst = spec.build()?;
        let claim = match inst.claim {
            Claim::F { value } => format!("f = {value}"),
            Claim::Fk { k, value } => format!("f_{k} = {value}"),
            Claim::FkAtLeast { k, value } => format!("f_{k} >= {value}"),
            Claim::NotFeasible { k } => format!("not {k}-feasible"),
        };
        let verdict = match check_family(&inst, &cfg) {
            Ok(()) => "ok".to_string(),
            Err(e) => format!("FAILED: {e}"),
        };
        println!(
            "{:<28} {:>4} {:>4}  {claim:<24} {verdict}",
            spec.to_string(),
            inst.graph.n(),
            inst.graph.edge_count()
        );
    }
    Ok(())
}
