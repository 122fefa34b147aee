//! Sharp extremal constructions, each paired with its claimed value.
//!
//! Vertex layout is fixed so generated files are byte-stable: components
//! appear in the order they are listed, stars put the center before the
//! leaves, and paths are numbered along the path.

use std::fmt;

use serde::Serialize;

use crate::bounds::{a_seq, bound_f_delta, bound_f_n, g_lower_even};
use crate::error::{Error, Result};
use crate::graph::{named, Graph, Vertex};

/// What a family instance is supposed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Claim {
    /// `f(G) = value`.
    F { value: usize },
    /// `f_k(G) = value`.
    Fk { k: usize, value: usize },
    /// `f_k(G) >= value`.
    FkAtLeast { k: usize, value: usize },
    /// `G` is not k-feasible.
    NotFeasible { k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `K_{1,a_1} ∪ ... ∪ K_{1,a_{t-1}} ∪ K_{1,Δ}`.
    StarsDelta { delta: usize },
    /// The graph `G_n` attaining the bound in terms of `n`.
    Gn { n: usize },
    /// The caterpillar `T_t`.
    TreeT { t: usize },
    /// `⌊(k-1)/2⌋ K_2 ∪ m K_1`.
    G1Extremal { k: usize, m: usize },
    /// `(k-1) K_{1,2}`.
    G2Extremal { k: usize },
    /// `k-1` copies of the big star, `k/2` copies of each smaller one.
    #[serde(rename = "prop44")]
    StarLadder { delta: usize, k: usize },
    /// `⌊k/2⌋ K_1 ∪ ⌊(k-1)/2⌋ K_2`.
    H1Extremal { k: usize },
    /// `(k-1)/2 P_4` for odd `k`, `(k-2)/2 P_4 ∪ K_1` for even `k`.
    H2Extremal { k: usize },
}

pub const FAMILY_NAMES: [&str; 8] = [
    "stars-delta",
    "gn",
    "tree-t",
    "g1-extremal",
    "g2-extremal",
    "prop44",
    "h1-extremal",
    "h2-extremal",
];

/// Loose parameter bag, as collected from a command line.
#[derive(Clone, Copy, Debug, Default)]
pub struct FamilyParams {
    pub delta: Option<usize>,
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::StarsDelta { .. } => "stars-delta",
            FamilySpec::Gn { .. } => "gn",
            FamilySpec::TreeT { .. } => "tree-t",
            FamilySpec::G1Extremal { .. } => "g1-extremal",
            FamilySpec::G2Extremal { .. } => "g2-extremal",
            FamilySpec::StarLadder { .. } => "prop44",
            FamilySpec::H1Extremal { .. } => "h1-extremal",
            FamilySpec::H2Extremal { .. } => "h2-extremal",
        }
    }

    pub fn from_name(name: &str, p: FamilyParams) -> Result<Self> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::InvalidParameter(format!("family {name} needs --{flag}")))
        };
        Ok(match name {
            "stars-delta" => FamilySpec::StarsDelta {
                delta: need(p.delta, "delta")?,
            },
            "gn" => FamilySpec::Gn { n: need(p.n, "n")? },
            "tree-t" => FamilySpec::TreeT { t: need(p.t, "t")? },
            "g1-extremal" => {
                let k = need(p.k, "k")?;
                FamilySpec::G1Extremal {
                    k,
                    m: p.m.unwrap_or(k),
                }
            }
            "g2-extremal" => FamilySpec::G2Extremal { k: need(p.k, "k")? },
            "prop44" => FamilySpec::StarLadder {
                delta: need(p.delta, "delta")?,
                k: need(p.k, "k")?,
            },
            "h1-extremal" => FamilySpec::H1Extremal { k: need(p.k, "k")? },
            "h2-extremal" => FamilySpec::H2Extremal { k: need(p.k, "k")? },
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {other:?}; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }

    pub fn build(&self) -> Result<FamilyInstance> {
        match *self {
            FamilySpec::StarsDelta { delta } => star_union_delta(delta),
            FamilySpec::Gn { n } => extremal_gn(n),
            FamilySpec::TreeT { t } => Ok(caterpillar_t(t)),
            FamilySpec::G1Extremal { k, m } => g1_extremal(k, m),
            FamilySpec::G2Extremal { k } => g2_extremal(k),
            FamilySpec::StarLadder { delta, k } => star_ladder(delta, k),
            FamilySpec::H1Extremal { k } => h1_extremal(k),
            FamilySpec::H2Extremal { k } => h2_extremal(k),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::StarsDelta { delta } => write!(f, "stars-delta(delta={delta})"),
            FamilySpec::Gn { n } => write!(f, "gn(n={n})"),
            FamilySpec::TreeT { t } => write!(f, "tree-t(t={t})"),
            FamilySpec::G1Extremal { k, m } => write!(f, "g1-extremal(k={k},m={m})"),
            FamilySpec::G2Extremal { k } => write!(f, "g2-extremal(k={k})"),
            FamilySpec::StarLadder { delta, k } => write!(f, "prop44(delta={delta},k={k})"),
            FamilySpec::H1Extremal { k } => write!(f, "h1-extremal(k={k})"),
            FamilySpec::H2Extremal { k } => write!(f, "h2-extremal(k={k})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyInstance {
    pub spec: FamilySpec,
    #[serde(skip)]
    pub graph: Graph,
    pub claim: Claim,
    /// Order the construction is supposed to have, where one is stated.
    pub claimed_order: Option<usize>,
}

/// `b_t = (t³ + 6t² + 17t + 18) / 6`, the order of `T_t`.
pub fn caterpillar_order(t: usize) -> usize {
    (t.pow(3) + 6 * t.pow(2) + 17 * t + 18) / 6
}

fn stars(sizes: &[usize]) -> Graph {
    let parts: Vec<Graph> = sizes.iter().map(|&s| named::star(s)).collect();
    named::union(&parts)
}

fn param(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn star_union_delta(delta: usize) -> Result<FamilyInstance> {
    param(delta >= 2, || {
        format!("stars-delta needs delta >= 2, got {delta}")
    })?;
    let t = bound_f_delta(delta);
    let mut sizes: Vec<usize> = (1..t).map(a_seq).collect();
    sizes.push(delta);
    Ok(FamilyInstance {
        spec: FamilySpec::StarsDelta { delta },
        graph: stars(&sizes),
        claim: Claim::F { value: t },
        claimed_order: None,
    })
}

pub fn extremal_gn(n: usize) -> Result<FamilyInstance> {
    param(n >= 4, || format!("gn needs n >= 4, got {n}"))?;
    let t = bound_f_n(n)?;
    let top = (t + 2) * (t + 1) / 2 + 2;
    let core_n = if n == top { n - 1 } else { n };
    // A = v_1..v_t at ids 0..t, B = u_1.. at ids t..core_n
    let hub = t - 1;
    let mut edges: Vec<(Vertex, Vertex)> = (0..core_n)
        .filter(|&x| x != hub)
        .map(|x| (hub, x))
        .collect();
    for q in 1..t {
        edges.extend((0..a_seq(q)).map(|i| (q - 1, t + i)));
    }
    Ok(FamilyInstance {
        spec: FamilySpec::Gn { n },
        graph: Graph::from_edges_unchecked(n, edges),
        claim: Claim::F { value: t },
        claimed_order: Some(n),
    })
}

pub fn caterpillar_t(t: usize) -> FamilyInstance {
    let spine = 2 * t + 3;
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for j in 1..=t + 1 {
        // v_{2j} is id 2j - 1
        for _ in 0..a_seq(j) - 2 {
            edges.push((2 * j - 1, next));
            next += 1;
        }
    }
    FamilyInstance {
        spec: FamilySpec::TreeT { t },
        graph: Graph::from_edges_unchecked(next, edges),
        claim: Claim::F { value: t + 1 },
        claimed_order: Some(caterpillar_order(t)),
    }
}

/// Requires `m >= k - ⌊(k-1)/2⌋ - 1`, so that fewer deletions than the
/// claim cannot shrink the graph below `k` vertices.
pub fn g1_extremal(k: usize, m: usize) -> Result<FamilyInstance> {
    param(k >= 3, || format!("g1-extremal needs k >= 3, got {k}"))?;
    let t = (k - 1) / 2;
    param(m + t + 1 >= k, || {
        format!("g1-extremal with k = {k} needs m >= {}, got {m}", k - t - 1)
    })?;
    let graph = named::copies(&named::complete(2), t).disjoint_union(&Graph::empty(m));
    Ok(FamilyInstance {
        spec: FamilySpec::G1Extremal { k, m },
        graph,
        claim: Claim::Fk { k, value: t },
        claimed_order: Some(2 * t + m),
    })
}

pub fn g2_extremal(k: usize) -> Result<FamilyInstance> {
    param(k >= 2, || format!("g2-extremal needs k >= 2, got {k}"))?;
    Ok(FamilyInstance {
        spec: FamilySpec::G2Extremal { k },
        graph: named::copies(&named::star(2), k - 1),
        claim: Claim::Fk { k, value: k - 1 },
        claimed_order: Some(3 * (k - 1)),
    })
}

pub fn star_ladder(delta: usize, k: usize) -> Result<FamilyInstance> {
    param(delta >= 2, || {
        format!("star ladder needs delta >= 2, got {delta}")
    })?;
    param(k >= 2 && k.is_multiple_of(2), || {
        format!("star ladder needs even k >= 2, got {k}")
    })?;
    // a_t <= Δ < a_{t+1}
    let t = bound_f_delta(delta);
    let mut sizes = vec![delta; k - 1];
    for j in 1..t {
        sizes.extend(std::iter::repeat_n(a_seq(j), k / 2));
    }
    Ok(FamilyInstance {
        spec: FamilySpec::StarLadder { delta, k },
        graph: stars(&sizes),
        claim: Claim::FkAtLeast {
            k,
            value: g_lower_even(delta, k)?,
        },
        claimed_order: None,
    })
}

pub fn h1_extremal(k: usize) -> Result<FamilyInstance> {
    param(k >= 2, || format!("h1-extremal needs k >= 2, got {k}"))?;
    let graph =
        Graph::empty(k / 2).disjoint_union(&named::copies(&named::complete(2), (k - 1) / 2));
    Ok(FamilyInstance {
        spec: FamilySpec::H1Extremal { k },
        graph,
        claim: Claim::NotFeasible { k },
        claimed_order: Some(k / 2 + 2 * ((k - 1) / 2)),
    })
}

pub fn h2_extremal(k: usize) -> Result<FamilyInstance> {
    param(k >= 2, || format!("h2-extremal needs k >= 2, got {k}"))?;
    let p4 = named::path(4);
    let (graph, order) = if k % 2 == 1 {
        (named::copies(&p4, (k - 1) / 2), 2 * k - 2)
    } else {
        (
            named::copies(&p4, (k - 2) / 2).disjoint_union(&Graph::empty(1)),
            2 * k - 3,
        )
    };
    Ok(FamilyInstance {
        spec: FamilySpec::H2Extremal { k },
        graph,
        claim: Claim::NotFeasible { k },
        claimed_order: Some(order),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_view;

    #[test]
    fn stars_delta_examples() {
        let inst = star_union_delta(13).unwrap();
        assert_eq!(inst.graph.n(), 30);
        assert_eq!(inst.claim, Claim::F { value: 4 });
        assert_eq!(degree_view(&inst.graph).sorted[..4], [13, 7, 4, 2]);
        let inst = star_union_delta(2).unwrap();
        assert_eq!(inst.graph, named::star(2));
        assert_eq!(inst.claim, Claim::F { value: 1 });
        let inst = star_union_delta(7).unwrap();
        assert_eq!(inst.graph.n(), 3 + 5 + 8);
        assert_eq!(inst.claim, Claim::F { value: 3 });
        assert!(star_union_delta(1).is_err());
    }

    #[test]
    fn gn_examples() {
        let inst = extremal_gn(9).unwrap();
        assert_eq!(inst.claim, Claim::F { value: 3 });
        assert_eq!(inst.graph.n(), 9);
        // hub v_3 sees everyone; v_1, v_2 have degrees a_1 + 1, a_2 + 1
        assert_eq!(inst.graph.degree(2), 8);
        assert_eq!(inst.graph.degree(0), 3);
        assert_eq!(inst.graph.degree(1), 5);

        let inst = extremal_gn(4).unwrap();
        assert_eq!(inst.graph, named::star(3));
        assert_eq!(inst.claim, Claim::F { value: 1 });

        let inst = extremal_gn(12).unwrap();
        assert_eq!(inst.claim, Claim::F { value: 3 });
        assert_eq!(inst.graph.degree(11), 0);
        assert_eq!(inst.graph.degree(2), 10);
        assert!(extremal_gn(3).is_err());
    }

    #[test]
    fn caterpillars() {
        assert_eq!(caterpillar_t(0).graph, named::path(3));
        let t2 = caterpillar_t(2);
        assert_eq!(t2.graph.n(), 14);
        assert!(t2.graph.is_forest());
        let mut sorted = degree_view(&t2.graph).sorted;
        sorted.dedup();
        assert_eq!(sorted, vec![7, 4, 2, 1]);
        assert_eq!(
            degree_view(&t2.graph).sorted,
            vec![7, 4, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1]
        );
        assert_eq!(t2.claim, Claim::F { value: 3 });
        assert_eq!(caterpillar_t(1).graph.n(), 7);
        for t in 0..=10 {
            assert_eq!(caterpillar_t(t).graph.n(), caterpillar_order(t));
        }
    }

    #[test]
    fn g_families() {
        let inst = g1_extremal(5, 3).unwrap();
        assert_eq!(inst.graph.n(), 7);
        assert_eq!(inst.graph.edge_count(), 2);
        assert_eq!(inst.claim, Claim::Fk { k: 5, value: 2 });
        assert!(g1_extremal(5, 1).is_err());
        assert!(g1_extremal(2, 3).is_err());

        let inst = g2_extremal(4).unwrap();
        assert_eq!(inst.graph.n(), 9);
        assert_eq!(inst.claim, Claim::Fk { k: 4, value: 3 });
    }

    #[test]
    fn star_ladder_examples() {
        let inst = star_ladder(4, 2).unwrap();
        assert_eq!(inst.graph.n(), 5 + 3);
        assert_eq!(inst.claim, Claim::FkAtLeast { k: 2, value: 2 });
        let inst = star_ladder(7, 4).unwrap();
        assert_eq!(inst.graph.n(), 3 * 8 + 2 * 3 + 2 * 5);
        assert_eq!(inst.claim, Claim::FkAtLeast { k: 4, value: 7 });
        let inst = star_ladder(2, 2).unwrap();
        assert_eq!(inst.graph, named::star(2));
        assert!(star_ladder(7, 3).is_err());
    }

    #[test]
    fn h_families() {
        assert_eq!(h1_extremal(3).unwrap().graph.n(), 3);
        assert_eq!(h1_extremal(2).unwrap().graph, Graph::empty(1));
        assert_eq!(h1_extremal(6).unwrap().graph.n(), 7);
        assert_eq!(h2_extremal(3).unwrap().graph, named::path(4));
        assert_eq!(h2_extremal(5).unwrap().graph.n(), 8);
        let inst = h2_extremal(4).unwrap();
        assert_eq!(inst.graph.n(), 5);
        assert_eq!(inst.claimed_order, Some(5));
        assert_eq!(h2_extremal(2).unwrap().graph, Graph::empty(1));
    }

    #[test]
    fn names_round_trip() {
        let p = FamilyParams {
            delta: Some(7),
            n: Some(9),
            t: Some(2),
            k: Some(4),
            m: None,
        };
        for name in FAMILY_NAMES {
            let spec = FamilySpec::from_name(name, p).unwrap();
            assert_eq!(spec.name(), name);
            spec.build().unwrap();
        }
        assert!(FamilySpec::from_name("nope", p).is_err());
        assert!(FamilySpec::from_name("gn", FamilyParams::default()).is_err());
    }
}
