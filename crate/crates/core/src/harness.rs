//! Verification suites.
//!
//! A suite is a list of independent cases; each case either passes or
//! produces a [`Failure`]. Cases run in parallel, but every case is
//! seeded from `(suite seed, case index)` and failures are sorted by case
//! id, so reports are identical across runs and thread counts.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_f_delta, bound_f_n, h_exact, lemma_bound, sparse_bound};
use crate::certificate::verify_certificate;
use crate::error::{Error, Result};
use crate::exactf::{diff_upper_bound, exact_f};
use crate::families::{Claim, FamilyInstance, FamilySpec};
use crate::forest::forest_fk_run;
use crate::graph::{named, Graph};
use crate::lowdeg::equate_deg2;
use crate::oracle::{brute_feasible, brute_fk, DEFAULT_FEASIBLE_GUARD, DEFAULT_FK_GUARD};
use crate::random;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OracleEquivalence,
    SharpnessDelta,
    SharpnessN,
    Trees,
    ForestBound,
    #[serde(rename = "prop32")]
    SmallForests,
    Lowdeg,
    Feasibility,
    Sparse,
    LemmaBound,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::OracleEquivalence,
        Suite::SharpnessDelta,
        Suite::SharpnessN,
        Suite::Trees,
        Suite::ForestBound,
        Suite::SmallForests,
        Suite::Lowdeg,
        Suite::Feasibility,
        Suite::Sparse,
        Suite::LemmaBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::SharpnessDelta => "sharpness-delta",
            Suite::SharpnessN => "sharpness-n",
            Suite::Trees => "trees",
            Suite::ForestBound => "forest-bound",
            Suite::SmallForests => "prop32",
            Suite::Lowdeg => "lowdeg",
            Suite::Feasibility => "feasibility",
            Suite::Sparse => "sparse",
            Suite::LemmaBound => "lemma-bound",
        }
    }

    /// Number of random samples drawn when none is requested.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::OracleEquivalence => 0,
            Suite::ForestBound => 100,
            Suite::SmallForests => 10_000,
            Suite::Lowdeg => 1_000,
            Suite::Feasibility => 500,
            Suite::Sparse => 300,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides [`Suite::default_samples`].
    pub samples: Option<usize>,
    /// Enumeration guard for `brute_fk`.
    pub fk_guard: usize,
    /// Enumeration guard for `brute_feasible`.
    pub feasible_guard: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: None,
            fk_guard: DEFAULT_FK_GUARD,
            feasible_guard: DEFAULT_FEASIBLE_GUARD,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type CaseResult = std::result::Result<(), String>;

/// A case: an id and a check that runs on its own.
struct Case {
    id: String,
    check: Box<dyn Fn() -> CaseResult + Send + Sync>,
}

impl Case {
    fn new(id: impl Into<String>, check: impl Fn() -> CaseResult + Send + Sync + 'static) -> Self {
        Case {
            id: id.into(),
            check: Box::new(check),
        }
    }
}

fn run_cases(suite: Suite, cases: Vec<Case>) -> SuiteReport {
    let mut failures: Vec<Failure> = cases
        .par_iter()
        .filter_map(|c| {
            (c.check)().err().map(|detail| Failure {
                case: c.id.clone(),
                detail,
            })
        })
        .collect();
    failures.sort_by(|a, b| a.case.cmp(&b.case));
    SuiteReport {
        suite,
        cases: cases.len(),
        failures,
    }
}

/// Seed for case `i` of a suite.
fn case_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (i as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CaseResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let samples = cfg.samples.unwrap_or(suite.default_samples());
    let cases = match suite {
        Suite::OracleEquivalence => oracle_equivalence_cases(cfg, samples),
        Suite::SharpnessDelta => {
            family_cases((2..=45).map(|delta| FamilySpec::StarsDelta { delta }), cfg)
        }
        Suite::SharpnessN => family_cases((4..=23).map(|n| FamilySpec::Gn { n }), cfg),
        Suite::Trees => family_cases((0..=6).map(|t| FamilySpec::TreeT { t }), cfg),
        Suite::ForestBound => forest_bound_cases(cfg, samples),
        Suite::SmallForests => small_forest_cases(cfg, samples),
        Suite::Lowdeg => lowdeg_cases(cfg, samples),
        Suite::Feasibility => feasibility_cases(cfg, samples),
        Suite::Sparse => sparse_cases(cfg, samples),
        Suite::LemmaBound => lemma_cases(cfg),
    };
    Ok(run_cases(suite, cases))
}

/// `exact_f` against the oracle, plus every bound `exact_f` must respect.
pub fn check_exact_against_oracle(g: &Graph, guard: usize) -> CaseResult {
    let exact = exact_f(g);
    let oracle = brute_fk(g, 2, guard).map_err(err)?;
    ensure(exact.value == oracle.value, || {
        format!("exact_f = {} but brute_fk = {}", exact.value, oracle.value)
    })?;
    ensure(verify_certificate(g, &exact.certificate), || {
        "exact_f certificate rejected".into()
    })?;
    ensure(exact.certificate.size() == exact.value, || {
        "certificate size differs from value".into()
    })?;
    if g.n() >= 2 {
        let diff = diff_upper_bound(g).map_err(err)?.bound;
        ensure(exact.value <= diff, || {
            format!("value {} above diff {diff}", exact.value)
        })?;
    }
    let delta = g.max_degree().unwrap_or(0);
    ensure(exact.value <= bound_f_delta(delta), || {
        format!("value {} above the Δ = {delta} bound", exact.value)
    })?;
    if g.n() >= 4 {
        let bn = bound_f_n(g.n()).map_err(err)?;
        ensure(exact.value <= bn, || {
            format!("value {} above the n bound {bn}", exact.value)
        })?;
    }
    Ok(())
}

fn oracle_equivalence_cases(cfg: &SuiteConfig, samples: usize) -> Vec<Case> {
    let guard = cfg.fk_guard;
    let mut cases: Vec<Case> = (0..1u64 << 15)
        .map(|code| {
            Case::new(format!("n6/{code}"), move || {
                check_exact_against_oracle(&random::labeled_graph(6, code), guard)
            })
        })
        .collect();
    let seed = cfg.seed;
    cases.extend((0..samples).map(|i| {
        let s = case_seed(seed, i);
        Case::new(format!("random/{i}"), move || {
            let mut rng = random::rng(s);
            let n = rng.gen_range(7..=10);
            let p = rng.gen_range(0.05..0.95);
            check_exact_against_oracle(&random::random_graph(n, p, rng.gen()), guard)
        })
    }));
    cases
}

/// Checks a family instance against its own claim and stated order.
pub fn check_family(inst: &FamilyInstance, cfg: &SuiteConfig) -> CaseResult {
    let g = &inst.graph;
    g.validate().map_err(err)?;
    if let Some(order) = inst.claimed_order {
        ensure(g.n() == order, || {
            format!("order {} but claimed {order}", g.n())
        })?;
    }
    match inst.spec {
        FamilySpec::StarsDelta { delta } => {
            ensure(g.max_degree() == Some(delta), || {
                "maximum degree differs from Δ".into()
            })?;
            let bound = bound_f_delta(delta);
            ensure(inst.claim == Claim::F { value: bound }, || {
                format!("claim {:?} is not the bound {bound}", inst.claim)
            })?;
        }
        FamilySpec::Gn { n } => {
            let bound = bound_f_n(n).map_err(err)?;
            ensure(inst.claim == Claim::F { value: bound }, || {
                format!("claim {:?} is not the bound {bound}", inst.claim)
            })?;
        }
        FamilySpec::TreeT { .. } => ensure(g.is_forest(), || "T_t is not a tree".into())?,
        _ => {}
    }
    match inst.claim {
        Claim::F { value } => {
            let r = exact_f(g);
            ensure(r.value == value, || {
                format!("exact_f = {}, claimed {value}", r.value)
            })?;
            ensure(verify_certificate(g, &r.certificate), || {
                "certificate rejected".into()
            })
        }
        Claim::Fk { k, value } => {
            let r = brute_fk(g, k, cfg.fk_guard).map_err(err)?;
            ensure(r.value == value, || {
                format!("brute_fk = {}, claimed {value}", r.value)
            })
        }
        Claim::FkAtLeast { k, value } => {
            let r = brute_fk(g, k, cfg.fk_guard).map_err(err)?;
            ensure(r.value >= value, || {
                format!("brute_fk = {} < claimed {value}", r.value)
            })
        }
        Claim::NotFeasible { k } => {
            let r = brute_feasible(g, k, cfg.feasible_guard).map_err(err)?;
            ensure(!r.feasible, || format!("feasible via {:?}", r.witness))
        }
    }
}

fn family_cases(specs: impl Iterator<Item = FamilySpec>, cfg: &SuiteConfig) -> Vec<Case> {
    let cfg = *cfg;
    specs
        .map(|spec| {
            Case::new(spec.to_string(), move || {
                let inst = spec.build().map_err(err)?;
                check_family(&inst, &cfg)
            })
        })
        .collect()
}

fn sample_forest(n: usize, seed: u64) -> Graph {
    let mut rng = random::rng(seed);
    if rng.gen_bool(0.5) {
        random::random_forest(n, rng.gen())
    } else {
        let root_prob = rng.gen_range(0.0..0.3);
        random::preferential_forest(n, root_prob, rng.gen())
    }
}

pub fn check_forest_bound(f: &Graph, k: usize) -> CaseResult {
    let run = forest_fk_run(f, k).map_err(err)?;
    ensure(verify_certificate(f, &run.certificate), || {
        "certificate rejected".into()
    })?;
    ensure(run.certificate.size() <= run.budget(), || {
        format!(
            "{} deletions exceed (2k-1)·w = {}",
            run.certificate.size(),
            run.budget()
        )
    })
}

fn forest_bound_cases(cfg: &SuiteConfig, samples: usize) -> Vec<Case> {
    let seed = cfg.seed;
    let mut cases = Vec::new();
    for (k, lo, hi) in [(2usize, 27usize, 500usize), (3, 125, 1000)] {
        cases.extend((0..samples).map(|i| {
            let s = case_seed(seed, k * 1_000_000 + i);
            Case::new(format!("k{k}/{i}"), move || {
                let mut rng = random::rng(s);
                let n = rng.gen_range(lo..=hi);
                check_forest_bound(&sample_forest(n, rng.gen()), k)
            })
        }));
    }
    cases
}

fn small_forest_cases(cfg: &SuiteConfig, samples: usize) -> Vec<Case> {
    let guard = cfg.fk_guard;
    let mut cases = vec![
        Case::new("K_{1,4} ∪ K_{1,7}", move || {
            let g = named::union(&[named::star(4), named::star(7)]);
            let v = brute_fk(&g, 2, guard).map_err(err)?.value;
            ensure(v == 2, || format!("f = {v}, expected 2"))
        }),
        Case::new("S_{5,8}", move || {
            let v = brute_fk(&named::double_star(5, 8), 2, guard)
                .map_err(err)?
                .value;
            ensure(v == 2, || format!("f = {v}, expected 2"))
        }),
    ];
    let seed = cfg.seed;
    cases.extend((0..samples).map(|i| {
        let s = case_seed(seed, i);
        Case::new(format!("forest/{i}"), move || {
            let mut rng = random::rng(s);
            // weighted toward 13 vertices, the extremal order
            let n = if rng.gen_bool(0.5) {
                13
            } else {
                rng.gen_range(1..=13)
            };
            let f = sample_forest(n, rng.gen());
            let v = brute_fk(&f, 2, guard).map_err(err)?.value;
            ensure(v <= 2, || {
                format!("f = {v} on {:?}", f.edges().collect::<Vec<_>>())
            })
        })
    }));
    cases
}

pub fn check_deg2(g: &Graph, k: usize, guard: usize) -> CaseResult {
    let cert = equate_deg2(g, k).map_err(err)?;
    ensure(verify_certificate(g, &cert), || {
        "certificate rejected".into()
    })?;
    ensure(cert.size() < k, || {
        format!("{} deletions, budget {}", cert.size(), k - 1)
    })?;
    if g.max_degree().unwrap_or(0) <= 1 {
        ensure(cert.size() <= (k - 1) / 2, || {
            format!(
                "{} deletions on a Δ <= 1 graph, budget {}",
                cert.size(),
                (k - 1) / 2
            )
        })?;
    }
    let exact = brute_fk(g, k, guard).map_err(err)?.value;
    ensure(cert.size() >= exact, || {
        format!(
            "certificate of size {} beats the oracle's {exact}",
            cert.size()
        )
    })
}

fn lowdeg_cases(cfg: &SuiteConfig, samples: usize) -> Vec<Case> {
    let guard = cfg.fk_guard;
    let mut cases: Vec<Case> = (2..=5)
        .map(|k| {
            Case::new(format!("({})K_{{1,2}}/k{k}", k - 1), move || {
                let g = named::copies(&named::star(2), k - 1);
                let v = brute_fk(&g, k, guard).map_err(err)?.value;
                ensure(v == k - 1, || format!("f_k = {v}, expected {}", k - 1))?;
                check_deg2(&g, k, guard)
            })
        })
        .collect();
    let seed = cfg.seed;
    cases.extend((0..samples).map(|i| {
        let s = case_seed(seed, i);
        Case::new(format!("random/{i}"), move || {
            let mut rng = random::rng(s);
            let n = rng.gen_range(1..=16);
            let k = rng.gen_range(2..=6);
            let max_degree = if rng.gen_bool(0.2) { 1 } else { 2 };
            let p = rng.gen_range(0.1..1.0);
            let g = random::random_bounded_degree(n, max_degree, p, rng.gen());
            check_deg2(&g, k, guard)
        })
    }));
    cases
}

fn feasibility_cases(cfg: &SuiteConfig, samples: usize) -> Vec<Case> {
    let mut cases = family_cases(
        (2..=6)
            .map(|k| FamilySpec::H1Extremal { k })
            .chain((2..=6).map(|k| FamilySpec::H2Extremal { k })),
        cfg,
    );
    let (seed, guard) = (cfg.seed, cfg.feasible_guard);
    for k in 2..=5usize {
        cases.extend((0..samples).map(|i| {
            let s = case_seed(seed, k * 1_000_000 + i);
            Case::new(format!("above-h/k{k}/{i}"), move || {
                let mut rng = random::rng(s);
                let n = h_exact(2, k).map_err(err)? + 1;
                let p = rng.gen_range(0.1..1.0);
                let g = random::random_bounded_degree(n, 2, p, rng.gen());
                let r = brute_feasible(&g, k, guard).map_err(err)?;
                ensure(r.feasible, || {
                    format!("not {k}-feasible: {:?}", g.edges().collect::<Vec<_>>())
                })
            })
        }));
    }
    cases
}

fn sparse_cases(cfg: &SuiteConfig, samples: usize) -> Vec<Case> {
    let (seed, guard) = (cfg.seed, cfg.fk_guard);
    (0..samples)
        .map(|i| {
            let s = case_seed(seed, i);
            Case::new(format!("random/{i}"), move || {
                let mut rng = random::rng(s);
                let n = rng.gen_range(4..=guard.min(14));
                let c = [0.5, 1.0, 1.5][rng.gen_range(0..3)];
                let k = rng.gen_range(2..=4);
                let m = (c * n as f64).floor() as usize;
                let g = random::random_graph_with_edges(n, m, rng.gen());
                let v = brute_fk(&g, k, guard).map_err(err)?.value;
                let bound = sparse_bound(n, c, 0.0, k).map_err(err)?;
                ensure(v as f64 <= bound, || {
                    format!("f_{k} = {v} above {bound:.3}")
                })
            })
        })
        .collect()
}

fn lemma_cases(cfg: &SuiteConfig) -> Vec<Case> {
    let guard = cfg.fk_guard;
    (0..1u64 << 15)
        .map(|code| {
            Case::new(format!("n6/{code}"), move || {
                let g = random::labeled_graph(6, code);
                let delta = g.max_degree().unwrap_or(0);
                for k in 2..=4 {
                    let r = brute_fk(&g, k, guard).map_err(err)?;
                    ensure(r.value <= lemma_bound(k, delta), || {
                        format!(
                            "f_{k} = {} above (k-1)Δ = {}",
                            r.value,
                            lemma_bound(k, delta)
                        )
                    })?;
                    ensure(verify_certificate(&g, &r.certificate), || {
                        "oracle certificate rejected".into()
                    })?;
                }
                Ok(())
            })
        })
        .collect()
}
