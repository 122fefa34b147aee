//! Deletion certificates and their independent checker.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

/// A deletion set `B` together with the claimed outcome on `H = G \ B`.
///
/// All ids refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub k: usize,
    /// Sorted deleted vertices.
    pub deleted: Vec<Vertex>,
    /// `Δ(H)`, or `None` when `H` has no vertices.
    pub result_max_degree: Option<usize>,
    /// Vertices of `H` of degree `Δ(H)`, sorted.
    pub realizing: Vec<Vertex>,
    /// `|H| < k`.
    pub small_h: bool,
}

impl Certificate {
    /// Evaluates `deleted` on `g` and records the outcome, without
    /// judging whether it succeeds.
    pub fn evaluate(g: &Graph, k: usize, deleted: impl IntoIterator<Item = Vertex>) -> Self {
        let mut deleted: Vec<Vertex> = deleted.into_iter().collect();
        deleted.sort_unstable();
        deleted.dedup();
        let mut alive = vec![true; g.n()];
        for &v in &deleted {
            alive[v] = false;
        }
        let outcome = Outcome::of(g, &alive);
        Certificate {
            k,
            deleted,
            result_max_degree: outcome.max_degree,
            realizing: outcome.realizing,
            small_h: outcome.size < k,
        }
    }

    /// Whether the recorded outcome meets the target: `|H| < k` or at
    /// least `k` vertices realize `Δ(H)`.
    pub fn achieves_target(&self) -> bool {
        self.small_h || self.realizing.len() >= self.k
    }

    pub fn size(&self) -> usize {
        self.deleted.len()
    }
}

struct Outcome {
    size: usize,
    max_degree: Option<usize>,
    realizing: Vec<Vertex>,
}

impl Outcome {
    fn of(g: &Graph, alive: &[bool]) -> Self {
        let degree = |v: Vertex| g.neighbors(v).iter().filter(|&&u| alive[u]).count();
        let live: Vec<Vertex> = g.vertices().filter(|&v| alive[v]).collect();
        let max_degree = live.iter().map(|&v| degree(v)).max();
        let realizing = match max_degree {
            Some(d) => live.iter().copied().filter(|&v| degree(v) == d).collect(),
            None => Vec::new(),
        };
        Outcome {
            size: live.len(),
            max_degree,
            realizing,
        }
    }
}

/// Recomputes `H = g \ cert.deleted` from scratch and checks every field
/// of the certificate against it. Never panics; any mismatch is `false`.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    for &v in &cert.deleted {
        if v >= n || !alive[v] {
            return false;
        }
        alive[v] = false;
    }
    let outcome = Outcome::of(g, &alive);
    if (outcome.size < cert.k) != cert.small_h {
        return false;
    }
    let mut realizing = cert.realizing.clone();
    realizing.sort_unstable();
    if outcome.max_degree != cert.result_max_degree || outcome.realizing != realizing {
        return false;
    }
    cert.small_h || realizing.len() >= cert.k
}
