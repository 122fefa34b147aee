//! Exact computation of `f(G) = f_2(G)`.
//!
//! With `G_0 = G` and `G_{j+1} = G_j - v_{1,j}` (the unique maximum-degree
//! vertex of `G_j`), the value is `min_j diff(G_j) + j`. The sequence is
//! cut at the first `j` with `diff(G_j) = 0`: every later term is at least
//! `j + 1`. Degrees live in buckets so one step costs `O(n + deg(v))`.

use serde::Serialize;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One term `diff(G_j) + j` of the minimization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub j: usize,
    /// Vertex removed from `G_{j-1}` to obtain `G_j`; `None` for `j = 0`.
    pub deleted_vertex: Option<Vertex>,
    pub d1: usize,
    pub d2: usize,
    pub diff: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionTrace {
    pub steps: Vec<TraceStep>,
    /// First index attaining the minimum.
    pub jstar: usize,
    pub value: usize,
}

#[derive(Clone, Debug)]
pub struct ExactF {
    pub value: usize,
    pub trace: DeletionTrace,
    pub certificate: Certificate,
}

/// `diff(G)` together with a 2-equating set of that size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffBound {
    pub bound: usize,
    pub witness: Vec<Vertex>,
}

/// Degrees of the surviving vertices, grouped by value.
struct DegreeBuckets<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    buckets: Vec<Vec<Vertex>>,
    slot: Vec<usize>,
    top: usize,
    second_hint: usize,
}

impl<'g> DegreeBuckets<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let degree = g.degrees();
        let mut buckets = vec![Vec::new(); n.max(1)];
        let mut slot = vec![0; n];
        for v in 0..n {
            slot[v] = buckets[degree[v]].len();
            buckets[degree[v]].push(v);
        }
        let top = degree.iter().copied().max().unwrap_or(0);
        DegreeBuckets {
            g,
            alive: vec![true; n],
            degree,
            buckets,
            slot,
            top,
            second_hint: top,
        }
    }

    fn detach(&mut self, v: Vertex) {
        let d = self.degree[v];
        let i = self.slot[v];
        let bucket = &mut self.buckets[d];
        bucket.swap_remove(i);
        if let Some(&moved) = bucket.get(i) {
            self.slot[moved] = i;
        }
    }

    fn attach(&mut self, v: Vertex) {
        let d = self.degree[v];
        self.slot[v] = self.buckets[d].len();
        self.buckets[d].push(v);
    }

    fn remove(&mut self, v: Vertex) {
        self.detach(v);
        self.alive[v] = false;
        for &u in self.g.neighbors(v) {
            if self.alive[u] {
                self.detach(u);
                self.degree[u] -= 1;
                self.attach(u);
            }
        }
    }

    /// `(d1, d2)` of the surviving graph; needs at least two survivors.
    /// Both only ever decrease, so the scan pointers move monotonically.
    fn top_two(&mut self) -> (usize, usize) {
        while self.buckets[self.top].is_empty() {
            self.top -= 1;
        }
        if self.buckets[self.top].len() >= 2 {
            self.second_hint = self.top;
            return (self.top, self.top);
        }
        let mut d = self.second_hint.min(self.top - 1);
        while self.buckets[d].is_empty() {
            d -= 1;
        }
        self.second_hint = d;
        (self.top, d)
    }

    fn unique_max(&self) -> Vertex {
        debug_assert_eq!(self.buckets[self.top].len(), 1);
        self.buckets[self.top][0]
    }
}

/// Smallest-id choice of `u` (degree `d2`) and of the deleted neighbors
/// of `v`, restricted to the vertices flagged in `alive`.
fn diff_witness(g: &Graph, alive: &[bool]) -> DiffBound {
    let degree = |v: Vertex| g.neighbors(v).iter().filter(|&&u| alive[u]).count();
    let live: Vec<(Vertex, usize)> = g
        .vertices()
        .filter(|&v| alive[v])
        .map(|v| (v, degree(v)))
        .collect();
    debug_assert!(live.len() >= 2);
    let d1 = live.iter().map(|&(_, d)| d).max().unwrap();
    // smallest id among maximum-degree vertices
    let v = live.iter().find(|&&(_, d)| d == d1).unwrap().0;
    let (u, d2) = live
        .iter()
        .filter(|&&(w, _)| w != v)
        .fold(None, |best: Option<(Vertex, usize)>, &(w, d)| match best {
            Some((_, bd)) if bd >= d => best,
            _ => Some((w, d)),
        })
        .unwrap();
    let bound = d1 - d2;
    let witness = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&x| alive[x] && x != u && !g.has_edge(u, x))
        .take(bound)
        .collect::<Vec<_>>();
    debug_assert_eq!(witness.len(), bound);
    DiffBound { bound, witness }
}

/// `f(G) <= diff(G)`, with a witness set of neighbors of a maximum-degree
/// vertex `v` that avoid a second-degree vertex `u` and its neighborhood.
pub fn diff_upper_bound(g: &Graph) -> Result<DiffBound> {
    if g.n() < 2 {
        return Err(Error::Precondition(format!(
            "diff needs at least two vertices, graph has {}",
            g.n()
        )));
    }
    Ok(diff_witness(g, &vec![true; g.n()]))
}

/// Computes `f(G)` exactly, in `O(n^2)` time.
///
/// Graphs with fewer than two vertices have value 0 and a certificate on
/// the `|H| < k` branch.
pub fn exact_f(g: &Graph) -> ExactF {
    let n = g.n();
    if n < 2 {
        return ExactF {
            value: 0,
            trace: DeletionTrace {
                steps: Vec::new(),
                jstar: 0,
                value: 0,
            },
            certificate: Certificate::evaluate(g, 2, []),
        };
    }

    let mut buckets = DegreeBuckets::new(g);
    let mut steps = Vec::new();
    let mut removed = Vec::new();
    let (mut value, mut jstar) = (usize::MAX, 0);
    for j in 0..=n - 2 {
        let (d1, d2) = buckets.top_two();
        let diff = d1 - d2;
        steps.push(TraceStep {
            j,
            deleted_vertex: removed.last().copied(),
            d1,
            d2,
            diff,
        });
        if diff + j < value {
            value = diff + j;
            jstar = j;
        }
        if diff == 0 {
            break;
        }
        let v = buckets.unique_max();
        buckets.remove(v);
        removed.push(v);
    }

    let mut alive = vec![true; n];
    for &v in &removed[..jstar] {
        alive[v] = false;
    }
    let witness = diff_witness(g, &alive);
    debug_assert_eq!(witness.bound, steps[jstar].diff);
    let certificate = Certificate::evaluate(
        g,
        2,
        removed[..jstar].iter().copied().chain(witness.witness),
    );
    debug_assert_eq!(certificate.size(), value);
    debug_assert!(certificate.achieves_target());

    ExactF {
        value,
        trace: DeletionTrace {
            steps,
            jstar,
            value,
        },
        certificate,
    }
}
