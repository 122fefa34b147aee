//! Command-line front end. Every command prints one JSON document on stdout.
//!
//! Exit codes: 0 success, 1 operational error, 2 verification failure.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use equimax::bench::{bench_ladder, Density};
use equimax::bounds;
use equimax::families::{FamilyParams, FamilySpec};
use equimax::forest::{forest_fk_run, greedy_fk};
use equimax::harness::{run_suite, Suite, SuiteConfig};
use equimax::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use equimax::lowdeg::equate_deg2_run;
use equimax::oracle::{DEFAULT_FEASIBLE_GUARD, DEFAULT_FK_GUARD};
use equimax::{brute_feasible, brute_fk, exact_f, verify_certificate, Certificate, Graph};

/// Overrides both oracle guards when `--max-n` is absent.
const MAX_N_ENV: &str = "EQUIMAX_MAX_N";

#[derive(Parser)]
#[command(
    name = "equimax",
    version,
    about = "Equalize maximum degrees by vertex deletion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute f or f_k of a graph file.
    #[command(subcommand)]
    Compute(Compute),
    /// Decide properties of a graph file.
    #[command(subcommand)]
    Check(Check),
    /// Write an extremal family instance.
    Gen(GenArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Time the exact algorithm.
    #[command(subcommand)]
    Bench(Bench),
    /// Evaluate a closed-form bound.
    #[command(subcommand)]
    Bound(Bound),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for stdin.
    file: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Greedy,
    Forest,
    Deg2,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Greedy => "greedy",
            Method::Forest => "forest",
            Method::Deg2 => "deg2",
        }
    }
}

#[derive(Subcommand)]
enum Compute {
    /// f(G) = f_2(G), exactly.
    F {
        #[command(flatten)]
        input: Input,
        /// Include the deletion trace.
        #[arg(long)]
        trace: bool,
    },
    /// f_k(G): exact with `oracle`, an upper bound otherwise.
    Fk {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "oracle")]
        method: Method,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Whether some induced subgraph has k vertices of maximum degree.
    Feasible {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Args)]
struct GenArgs {
    family: String,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Output file; `FILE.json` receives the claim.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Bench {
    Exactf {
        /// Ladder of orders; repeat or comma-separate.
        #[arg(long, value_delimiter = ',', default_values_t = [1000usize, 2000, 4000, 8000])]
        n: Vec<usize>,
        /// Fixed edge probability; defaults to `avg-degree / n`.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 4.0)]
        avg_degree: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
}

#[derive(Subcommand)]
enum Bound {
    /// Largest f over graphs of maximum degree Δ.
    FDelta {
        #[arg(long)]
        delta: usize,
    },
    /// Largest f over graphs on n vertices.
    FN {
        #[arg(long)]
        n: usize,
    },
    /// g(Δ, k).
    G {
        #[arg(long)]
        delta: usize,
        #[arg(short)]
        k: usize,
    },
    /// h(Δ, k).
    H {
        #[arg(long)]
        delta: usize,
        #[arg(short)]
        k: usize,
    },
    /// R(k,k) - 1 for the known diagonal Ramsey numbers.
    Ramsey {
        #[arg(short)]
        k: usize,
    },
    /// (k-1)Δ.
    Lemma {
        #[arg(long)]
        delta: usize,
        #[arg(short)]
        k: usize,
    },
    /// Upper bound for graphs with at most c·n^(1+β) edges.
    Sparse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(short)]
        k: usize,
    },
}

type CliResult<T> = Result<T, String>;

fn guard(flag: Option<usize>, default: usize) -> CliResult<usize> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(MAX_N_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_N_ENV}={s:?} is not a vertex count")),
        Err(_) => Ok(default),
    }
}

fn read_graph(input: &Input) -> CliResult<Graph> {
    let bytes = if input.file.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        fs::read(&input.file).map_err(|e| format!("{}: {e}", input.file.display()))?
    };
    let parsed = match input.format {
        Format::Edgelist => {
            let text = String::from_utf8(bytes).map_err(|_| "input is not UTF-8".to_string())?;
            parse_edge_list(&text)
        }
        Format::Graph6 => parse_graph6(&bytes),
    };
    parsed.map_err(|e| format!("{}: {e}", input.file.display()))
}

fn certificate_json(g: &Graph, cert: &Certificate) -> CliResult<Value> {
    if !verify_certificate(g, cert) {
        return Err("internal error: produced certificate does not verify".into());
    }
    Ok(json!({
        "deleted": cert.deleted,
        "result_max_degree": cert.result_max_degree,
        "realizing": cert.realizing,
        "small_h": cert.small_h,
    }))
}

fn report(
    input: &Input,
    operation: &str,
    params: Value,
    value: Value,
    certificate: Value,
) -> Value {
    json!({
        "input": input.file.display().to_string(),
        "operation": operation,
        "params": params,
        "value": value,
        "certificate": certificate,
    })
}

fn compute(cmd: Compute) -> CliResult<Value> {
    match cmd {
        Compute::F { input, trace } => {
            let g = read_graph(&input)?;
            let r = exact_f(&g);
            let cert = certificate_json(&g, &r.certificate)?;
            let mut out = report(&input, "f", json!({}), json!(r.value), cert);
            if trace {
                out["trace"] = serde_json::to_value(&r.trace).map_err(|e| e.to_string())?;
            }
            Ok(out)
        }
        Compute::Fk {
            input,
            k,
            method,
            max_n,
        } => {
            let g = read_graph(&input)?;
            let max_n = guard(max_n, DEFAULT_FK_GUARD)?;
            let mut params = json!({ "k": k, "method": method.name() });
            let cert = match method {
                Method::Oracle => {
                    params["max_n"] = json!(max_n);
                    brute_fk(&g, k, max_n)
                        .map_err(|e| e.to_string())?
                        .certificate
                }
                Method::Greedy => greedy_fk(&g, k).map_err(|e| e.to_string())?,
                Method::Forest => {
                    let run = forest_fk_run(&g, k).map_err(|e| e.to_string())?;
                    params["budget"] = json!(run.budget());
                    run.certificate
                }
                Method::Deg2 => {
                    let run = equate_deg2_run(&g, k).map_err(|e| e.to_string())?;
                    params["branch"] =
                        serde_json::to_value(run.branch).map_err(|e| e.to_string())?;
                    run.certificate
                }
            };
            let cj = certificate_json(&g, &cert)?;
            Ok(report(&input, "fk", params, json!(cert.size()), cj))
        }
    }
}

fn check(cmd: Check) -> CliResult<Value> {
    let Check::Feasible { input, k, max_n } = cmd;
    let g = read_graph(&input)?;
    let max_n = guard(max_n, DEFAULT_FEASIBLE_GUARD)?;
    let r = brute_feasible(&g, k, max_n).map_err(|e| e.to_string())?;
    let cert = match &r.witness {
        Some(keep) => {
            let mut kept = vec![false; g.n()];
            keep.iter().for_each(|&v| kept[v] = true);
            let deleted = g.vertices().filter(|&v| !kept[v]);
            certificate_json(&g, &Certificate::evaluate(&g, k, deleted))?
        }
        None => Value::Null,
    };
    Ok(report(
        &input,
        "feasible",
        json!({ "k": k, "max_n": max_n }),
        json!(r.feasible),
        cert,
    ))
}

fn write_out(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display()))
}

fn gen(args: GenArgs) -> CliResult<Value> {
    let params = FamilyParams {
        delta: args.delta,
        n: args.n,
        t: args.t,
        k: args.k,
        m: args.m,
    };
    let spec = FamilySpec::from_name(&args.family, params).map_err(|e| e.to_string())?;
    let inst = spec.build().map_err(|e| e.to_string())?;
    let body = match args.format {
        Format::Edgelist => emit_edge_list(&inst.graph).into_bytes(),
        Format::Graph6 => {
            let mut b = emit_graph6(&inst.graph);
            b.push(b'\n');
            b
        }
    };
    let mut meta = serde_json::to_value(&inst).map_err(|e| e.to_string())?;
    meta["n"] = json!(inst.graph.n());
    meta["edges"] = json!(inst.graph.edge_count());
    match &args.output {
        Some(path) => {
            write_out(path, &body)?;
            let mut sidecar = path.clone().into_os_string();
            sidecar.push(".json");
            let text = serde_json::to_string_pretty(&meta).map_err(|e| e.to_string())?;
            write_out(Path::new(&sidecar), format!("{text}\n").as_bytes())?;
            meta["file"] = json!(path.display().to_string());
            Ok(meta)
        }
        None => {
            // graph on stdout, claim on stderr
            io::stdout().write_all(&body).map_err(|e| e.to_string())?;
            eprintln!("{meta}");
            Ok(Value::Null)
        }
    }
}

fn verify(args: VerifyArgs) -> CliResult<(Value, bool)> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: equimax::Error| e.to_string())?;
    let cfg = SuiteConfig {
        seed: args.seed,
        samples: args.samples,
        fk_guard: guard(args.max_n, DEFAULT_FK_GUARD)?,
        feasible_guard: guard(args.max_n, DEFAULT_FEASIBLE_GUARD)?,
    };
    let r = run_suite(suite, &cfg).map_err(|e| e.to_string())?;
    let passed = r.passed();
    Ok((serde_json::to_value(&r).map_err(|e| e.to_string())?, passed))
}

fn bench(cmd: Bench) -> CliResult<Value> {
    let Bench::Exactf {
        n,
        p,
        avg_degree,
        seed,
        reps,
    } = cmd;
    let density = match p {
        Some(p) if (0.0..=1.0).contains(&p) => Density::Fixed(p),
        Some(p) => return Err(format!("--p {p} is not a probability")),
        None => Density::AverageDegree(avg_degree),
    };
    serde_json::to_value(bench_ladder(&n, density, seed, reps)).map_err(|e| e.to_string())
}

fn bound(cmd: Bound) -> CliResult<Value> {
    let e = |e: equimax::Error| e.to_string();
    Ok(match cmd {
        Bound::FDelta { delta } => {
            json!({ "bound": "f-delta", "delta": delta, "value": bounds::bound_f_delta(delta) })
        }
        Bound::FN { n } => {
            json!({ "bound": "f-n", "n": n, "value": bounds::bound_f_n(n).map_err(e)? })
        }
        Bound::G { delta, k } => {
            json!({ "bound": "g", "delta": delta, "k": k, "value": bounds::g_exact(delta, k).map_err(e)? })
        }
        Bound::H { delta, k } => {
            json!({ "bound": "h", "delta": delta, "k": k, "value": bounds::h_exact(delta, k).map_err(e)? })
        }
        Bound::Ramsey { k } => {
            json!({ "bound": "ramsey", "k": k, "value": bounds::h_ramsey_cap(k).map_err(e)? })
        }
        Bound::Lemma { delta, k } => {
            json!({ "bound": "lemma", "delta": delta, "k": k, "value": bounds::lemma_bound(k, delta) })
        }
        Bound::Sparse { n, c, beta, k } => json!({
            "bound": "sparse", "n": n, "c": c, "beta": beta, "k": k,
            "value": bounds::sparse_bound(n, c, beta, k).map_err(e)?,
        }),
    })
}

fn print(v: &Value) {
    if !v.is_null() {
        let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
        // a closed pipe downstream is not our failure
        let _ = writeln!(io::stdout(), "{text}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(c) => compute(c).map(|v| (v, true)),
        Command::Check(c) => check(c).map(|v| (v, true)),
        Command::Gen(a) => gen(a).map(|v| (v, true)),
        Command::Verify(a) => verify(a),
        Command::Bench(b) => bench(b).map(|v| (v, true)),
        Command::Bound(b) => bound(b).map(|v| (v, true)),
    };
    match result {
        Ok((v, ok)) => {
            print(&v);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(msg) => {
            eprintln!("equimax: {msg}");
            ExitCode::from(1)
        }
    }
}
