//! Constructive upper bounds on `f_k`: the greedy `(k-1)Δ` procedure for
//! arbitrary graphs and the `(2k-1)⌊n^{1/3}⌋` procedure for forests.

use serde::Serialize;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    Ok(())
}

fn live_degree(g: &Graph, alive: &[bool], v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&u| alive[u]).count()
}

/// Repeatedly deletes every maximum-degree vertex while fewer than `k`
/// of them exist. Each round removes at most `k-1` vertices and lowers
/// `Δ` by at least one, so at most `(k-1)·Δ` vertices go.
fn greedy_in_place(g: &Graph, k: usize, alive: &mut [bool], deleted: &mut Vec<Vertex>) {
    loop {
        let live: Vec<(Vertex, usize)> = g
            .vertices()
            .filter(|&v| alive[v])
            .map(|v| (v, live_degree(g, alive, v)))
            .collect();
        if live.len() < k {
            return;
        }
        let top = live.iter().map(|&(_, d)| d).max().unwrap();
        let tops: Vec<Vertex> = live
            .iter()
            .filter(|&&(_, d)| d == top)
            .map(|&(v, _)| v)
            .collect();
        if tops.len() >= k {
            return;
        }
        for v in tops {
            alive[v] = false;
            deleted.push(v);
        }
    }
}

/// Greedy equalization of `k` maximum degrees; valid for every graph.
pub fn greedy_fk(g: &Graph, k: usize) -> Result<Certificate> {
    check_k(k)?;
    let mut alive = vec![true; g.n()];
    let mut deleted = Vec::new();
    greedy_in_place(g, k, &mut alive, &mut deleted);
    Ok(Certificate::evaluate(g, k, deleted))
}

/// `M(A)`: vertices outside `A` with at least two neighbors in `A`.
/// In a forest `|M(A)| < |A|`.
pub fn conflict_set(g: &Graph, a: &[Vertex]) -> Result<Vec<Vertex>> {
    if !g.is_forest() {
        return Err(Error::NotForest);
    }
    if a.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "conflict sets need |A| >= 2, got {}",
            a.len()
        )));
    }
    let mut in_a = vec![false; g.n()];
    for &v in a {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        in_a[v] = true;
    }
    Ok(conflict_set_unchecked(g, &in_a, &vec![true; g.n()]))
}

fn conflict_set_unchecked(g: &Graph, in_a: &[bool], alive: &[bool]) -> Vec<Vertex> {
    g.vertices()
        .filter(|&x| alive[x] && !in_a[x])
        .filter(|&x| g.neighbors(x).iter().filter(|&&u| in_a[u]).count() >= 2)
        .collect()
}

/// Where a degree falls among the intervals `[j·n^{1/3}, (j+1)·n^{1/3})`,
/// `j = 0..w`, the last one capped at `n^{2/3}`, and the top interval
/// `[n^{2/3}, n)`. All comparisons are made on cubes, in integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bucket {
    Interval(usize),
    Top,
}

/// `⌊n^{1/3}⌋`.
pub fn icbrt(n: usize) -> usize {
    let n = n as u128;
    let mut w = (n as f64).cbrt() as u128;
    while w * w * w > n {
        w -= 1;
    }
    while (w + 1) * (w + 1) * (w + 1) <= n {
        w += 1;
    }
    w as usize
}

/// Classifies a degree for a forest on `n` vertices with `w = ⌊n^{1/3}⌋`.
pub fn bucket_of(degree: usize, n: usize, w: usize) -> Bucket {
    let (d3, n) = ((degree as u128).pow(3), n as u128);
    if d3 >= n * n {
        return Bucket::Top;
    }
    // largest j <= w with j^3·n <= d^3
    let mut j = 0u128;
    while j < w as u128 && (j + 1).pow(3) * n <= d3 {
        j += 1;
    }
    Bucket::Interval(j as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    pub n: usize,
    pub w: usize,
    /// `buckets[j]` holds the vertices of `A_j`, `j = 0..=w`.
    pub buckets: Vec<Vec<Vertex>>,
    /// `A_L`.
    pub top: Vec<Vertex>,
}

impl IntervalPartition {
    fn build(g: &Graph, n: usize, alive: &[bool]) -> Self {
        let w = icbrt(n);
        let mut buckets = vec![Vec::new(); w + 1];
        let mut top = Vec::new();
        for v in g.vertices().filter(|&v| alive[v]) {
            match bucket_of(live_degree(g, alive, v), n, w) {
                Bucket::Top => top.push(v),
                Bucket::Interval(j) => buckets[j].push(v),
            }
        }
        IntervalPartition { n, w, buckets, top }
    }

    /// Highest non-empty interval with index at least 1.
    fn highest_positive(&self) -> Option<usize> {
        (1..=self.w).rev().find(|&j| !self.buckets[j].is_empty())
    }
}

pub fn interval_partition(g: &Graph) -> IntervalPartition {
    IntervalPartition::build(g, g.n(), &vec![true; g.n()])
}

/// The equalization step applied to `k` vertices sharing an interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualizationPlan {
    /// `v_1..v_k` by non-increasing degree, ties by id.
    pub chosen: Vec<Vertex>,
    pub degrees: Vec<usize>,
    /// `M(A)` in the forest the plan was built on.
    pub conflict: Vec<Vertex>,
    /// `B(v_i)`: neighbors of `v_i` outside `A ∪ M(A)`.
    pub private: Vec<Vec<Vertex>>,
    /// `t_i = d_i - d_k`.
    pub excess: Vec<usize>,
}

impl EqualizationPlan {
    /// Builds the plan on the live part of `g`. `chosen` must have at
    /// least two members and `g` restricted to `alive` must be a forest.
    pub(crate) fn build(g: &Graph, alive: &[bool], chosen: Vec<Vertex>) -> Self {
        let mut in_a = vec![false; g.n()];
        for &v in &chosen {
            in_a[v] = true;
        }
        let conflict = conflict_set_unchecked(g, &in_a, alive);
        let mut in_m = vec![false; g.n()];
        for &x in &conflict {
            in_m[x] = true;
        }
        let degrees: Vec<usize> = chosen.iter().map(|&v| live_degree(g, alive, v)).collect();
        let floor = *degrees.last().unwrap();
        let private = chosen
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&x| alive[x] && !in_a[x] && !in_m[x])
                    .collect()
            })
            .collect();
        let excess = degrees.iter().map(|&d| d - floor).collect();
        EqualizationPlan {
            chosen,
            degrees,
            conflict,
            private,
            excess,
        }
    }

    /// `t_i` smallest-id members of each `B(v_i)`; `None` if some `B(v_i)`
    /// is too small.
    pub fn deletions(&self) -> Option<Vec<Vertex>> {
        let mut out = Vec::new();
        for (b, &t) in self.private.iter().zip(&self.excess) {
            if b.len() < t {
                return None;
            }
            out.extend_from_slice(&b[..t]);
        }
        Some(out)
    }
}

/// How the forest procedure finished.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ForestOutcome {
    /// Only `A_0` survived; the greedy procedure finished the job.
    Greedy,
    /// Interval `j >= 1` held at least `k` vertices and was equalized.
    Equalized {
        interval: usize,
        plan: EqualizationPlan,
    },
}

#[derive(Clone, Debug)]
pub struct ForestRun {
    pub certificate: Certificate,
    pub w: usize,
    /// `|A_L|` in the input forest.
    pub top_size: usize,
    /// Vertices deleted while peeling intervals, after `A_L`.
    pub peeled: usize,
    pub outcome: ForestOutcome,
}

impl ForestRun {
    /// `(2k-1)·⌊n^{1/3}⌋`.
    pub fn budget(&self) -> usize {
        (2 * self.certificate.k - 1) * self.w
    }
}

/// Equalizes `k` maximum degrees in a forest with at most
/// `(2k-1)⌊n^{1/3}⌋` deletions, provided `⌊n^{1/3}⌋ >= 2k-1`.
///
/// 1. delete `A_L`;
/// 2. walk the intervals downward: stop at the first `A_j` (`j >= 1`) with
///    at least `k` members, otherwise delete its members and repartition;
/// 3. if only `A_0` is left, finish greedily (`Δ <= ⌊n^{1/3}⌋` by now);
/// 4. otherwise equalize the `k` largest degrees of `A_j` through their
///    private neighbors.
pub fn forest_fk_run(f: &Graph, k: usize) -> Result<ForestRun> {
    check_k(k)?;
    if !f.is_forest() {
        return Err(Error::NotForest);
    }
    let n = f.n();
    let w = icbrt(n);
    if w < 2 * k - 1 {
        return Err(Error::Precondition(format!(
            "need floor(n^(1/3)) >= 2k-1 = {}, but n = {n} gives {w}",
            2 * k - 1
        )));
    }

    let mut alive = vec![true; n];
    let mut deleted = Vec::new();
    let initial = IntervalPartition::build(f, n, &alive);
    let top_size = initial.top.len();
    for &v in &initial.top {
        alive[v] = false;
        deleted.push(v);
    }

    let mut partition = IntervalPartition::build(f, n, &alive);
    let mut ceiling = w;
    let mut peeled = 0;
    let outcome = loop {
        match partition.highest_positive() {
            None => {
                greedy_in_place(f, k, &mut alive, &mut deleted);
                break ForestOutcome::Greedy;
            }
            Some(j) => {
                // degrees only fall, so the active interval strictly descends
                debug_assert!(j <= ceiling);
                ceiling = j - 1;
                let members = &partition.buckets[j];
                if members.len() >= k {
                    let mut ranked: Vec<(usize, Vertex)> = members
                        .iter()
                        .map(|&v| (live_degree(f, &alive, v), v))
                        .collect();
                    ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
                    let chosen = ranked[..k].iter().map(|&(_, v)| v).collect();
                    let plan = EqualizationPlan::build(f, &alive, chosen);
                    let cut = plan.deletions().ok_or_else(|| {
                        Error::Precondition("private neighborhood smaller than its excess".into())
                    })?;
                    for &x in &cut {
                        alive[x] = false;
                        deleted.push(x);
                    }
                    break ForestOutcome::Equalized { interval: j, plan };
                }
                peeled += members.len();
                for &v in members {
                    alive[v] = false;
                    deleted.push(v);
                }
                partition = IntervalPartition::build(f, n, &alive);
            }
        }
    };

    Ok(ForestRun {
        certificate: Certificate::evaluate(f, k, deleted),
        w,
        top_size,
        peeled,
        outcome,
    })
}

/// Certificate-only form of [`forest_fk_run`].
pub fn forest_fk(f: &Graph, k: usize) -> Result<Certificate> {
    forest_fk_run(f, k).map(|run| run.certificate)
}
