//! Wall-clock scaling of [`exact_f`] on sparse random graphs.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::exactf::exact_f;
use crate::random::random_graph;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRun {
    pub n: usize,
    pub edges: usize,
    pub value: usize,
    /// Best of the repetitions, in seconds.
    pub seconds: f64,
    /// Every repetition, in seconds.
    pub samples: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub runs: Vec<BenchRun>,
    /// Least-squares slope of `ln t` against `ln n`; `None` for fewer than
    /// two ladder rungs.
    pub exponent: Option<f64>,
}

/// Edge probability for a given `n`: either fixed or `avg_degree / n`.
#[derive(Clone, Copy, Debug)]
pub enum Density {
    Fixed(f64),
    AverageDegree(f64),
}

impl Density {
    fn at(self, n: usize) -> f64 {
        match self {
            Density::Fixed(p) => p,
            Density::AverageDegree(d) => (d / n.max(1) as f64).min(1.0),
        }
    }
}

pub fn time_exact_f(n: usize, density: Density, seed: u64, reps: usize) -> BenchRun {
    let g = random_graph(n, density.at(n), seed);
    let mut samples = Vec::with_capacity(reps.max(1));
    let mut value = 0;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        value = std::hint::black_box(exact_f(std::hint::black_box(&g))).value;
        samples.push(start.elapsed().as_secs_f64());
    }
    let seconds = samples.iter().copied().fold(f64::INFINITY, f64::min);
    BenchRun {
        n,
        edges: g.edge_count(),
        value,
        seconds: seconds.max(Duration::from_nanos(1).as_secs_f64()),
        samples,
    }
}

/// Least-squares slope through `(ln x, ln y)`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn bench_ladder(ns: &[usize], density: Density, seed: u64, reps: usize) -> BenchReport {
    let runs: Vec<BenchRun> = ns
        .iter()
        .map(|&n| time_exact_f(n, density, seed, reps))
        .collect();
    let points: Vec<(f64, f64)> = runs.iter().map(|r| (r.n as f64, r.seconds)).collect();
    BenchReport {
        exponent: fit_exponent(&points),
        runs,
    }
}
