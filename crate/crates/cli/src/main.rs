//! `orbitcrystal`: build, verify and branch fixed-point crystals.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use orbitcrystal::branching::{branch_hat, expected_branching, multiplicity_free_gate};
use orbitcrystal::crystal::{is_perfect, is_simple, verify_crystal_axioms, verify_regularity, CrystalGraph, RegularityMode};
use orbitcrystal::export::{branching_json, branching_text, graph_dot, graph_json, graph_text, report_json};
use orbitcrystal::fixedpoint::{
    build_hat, check_hat_energy, hat_energy, hat_r_matrix, verify_lemmas, verify_main_theorem, FixedPointCrystal,
};
use orbitcrystal::intertwiner::{
    build_tilde_crystal, compute_energy, compute_r_matrix, compute_r_matrix_with, verify_intertwiner, verify_omega_action,
    verify_tilde_intertwiners, Order,
};
use orbitcrystal::kr::build_kr;
use orbitcrystal::scope::{check_scope, verification_instances, Instance};
use orbitcrystal::{Case, Error, Report, Stage};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "orbitcrystal", version, about = "Fixed-point KR crystals for twisted affine types")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a crystal graph.
    Build(Job),
    /// Verify the perfectness of a crystal and its intertwiners.
    Verify(Job),
    /// Decompose under `Î_0` and compare with the closed formulas.
    Branch(Job),
    /// Combinatorial R-matrix `B^{i,s} ⊗ B^{i2,s2} → B^{i2,s2} ⊗ B^{i,s}`.
    Rmatrix(Job),
    /// Energy function on `B ⊗ B`.
    Energy(Job),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Kr,
    Tilde,
    Hat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args, Clone)]
struct Job {
    #[arg(long, value_parser = parse_case)]
    case: Option<Case>,
    /// Rank parameter; defaults to the smallest admissible one.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    i: usize,
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Second factor for `rmatrix`.
    #[arg(long)]
    i2: Option<usize>,
    #[arg(long)]
    s2: Option<usize>,
    #[arg(long, value_enum, default_value_t = Target::Hat)]
    target: Target,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run over every instance of the verification list.
    #[arg(long)]
    all_scope: bool,
    /// Check regularity on every proper subset instead of those of size ≤ 2.
    #[arg(long)]
    full_regularity: bool,
    #[arg(long, hide = true)]
    inject_corrupt_edge: bool,
}

fn parse_case(s: &str) -> Result<Case, String> {
    s.parse::<Case>().map_err(|e| e.to_string())
}

/// Error carrying its exit code.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OutOfScope(_) | Error::RankTooSmall { .. } | Error::OutOfRange { .. } | Error::NoFormula(_) => {
                EXIT_INVALID
            }
            _ => EXIT_MISMATCH,
        };
        Fail { code, msg: e.to_string() }
    }
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail { code: EXIT_INVALID, msg: msg.into() }
}

type Outcome = Result<(String, bool), Fail>;

impl Job {
    fn instance(&self) -> Result<Instance, Fail> {
        let case = self.case.ok_or_else(|| invalid("--case is required"))?;
        let n = self.n.unwrap_or(case.min_rank());
        Ok(Instance::new(case, n, self.i, self.s))
    }

    fn mode(&self) -> RegularityMode {
        if self.full_regularity {
            RegularityMode::Full
        } else {
            RegularityMode::RankTwo
        }
    }

    fn checked(&self) -> Result<Instance, Fail> {
        let x = self.instance()?;
        if self.target != Target::Kr {
            check_scope(x.case, x.n, x.i, x.s)?;
        }
        Ok(x)
    }
}

fn render_graph(g: &CrystalGraph, format: Format) -> String {
    match format {
        Format::Json => pretty(&graph_json(g)),
        Format::Dot => graph_dot(g),
        Format::Text => graph_text(g),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn render_report(title: &str, r: &Report, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({ "instance": title, "report": report_json(r) })),
        _ => format!("{title}\n{r}"),
    }
}

fn cmd_build(job: &Job) -> Outcome {
    let x = job.checked()?;
    let g = match job.target {
        Target::Kr => build_kr(x.case, x.n, x.i, x.s)?,
        Target::Tilde => build_tilde_crystal(x.case, x.n, x.i, x.s)?.graph,
        Target::Hat => build_hat(x.case, x.n, x.i, x.s)?.1.graph,
    };
    let g = if job.inject_corrupt_edge { g.with_corrupted_edge() } else { g };
    Ok((render_graph(&g, job.format), true))
}

fn verify_graph(g: &CrystalGraph, s: usize, mode: RegularityMode) -> Report {
    let mut rep = verify_crystal_axioms(g);
    rep.push(verify_regularity(g, mode));
    rep.extend(is_simple(g));
    rep.extend(is_perfect(g, s as i64));
    rep
}

fn verify_instance(x: Instance, target: Target, mode: RegularityMode, corrupt: bool) -> Result<Report, Fail> {
    match target {
        Target::Kr => {
            let g = build_kr(x.case, x.n, x.i, x.s)?;
            let g = if corrupt { g.with_corrupted_edge() } else { g };
            Ok(verify_graph(&g, x.s, mode))
        }
        Target::Tilde => {
            let t = build_tilde_crystal(x.case, x.n, x.i, x.s)?;
            let mut rep = verify_crystal_axioms(&if corrupt { t.graph.with_corrupted_edge() } else { t.graph.clone() });
            rep.extend(verify_tilde_intertwiners(&t));
            rep.extend(verify_omega_action(&t));
            Ok(rep)
        }
        Target::Hat => {
            let (t, fp) = build_hat(x.case, x.n, x.i, x.s)?;
            let fp = if corrupt { FixedPointCrystal { graph: fp.graph.with_corrupted_edge(), ..fp } } else { fp };
            let mut rep = verify_main_theorem(&fp, x.s as i64, mode);
            rep.extend(verify_lemmas(&fp));
            rep.extend(verify_tilde_intertwiners(&t));
            rep.extend(verify_omega_action(&t));
            Ok(rep)
        }
    }
}

fn cmd_verify(job: &Job) -> Outcome {
    if job.all_scope {
        let results: Vec<(Instance, Result<Report, Fail>)> = verification_instances()
            .into_par_iter()
            .map(|x| (x, verify_instance(x, job.target, job.mode(), job.inject_corrupt_edge)))
            .collect();
        let mut ok = true;
        let mut rows = Vec::new();
        let mut text = String::new();
        for (x, r) in results {
            let (pass, detail) = match r {
                Ok(rep) => (rep.passed(), rep.first_failure().map(|s| s.name.clone()).unwrap_or_default()),
                Err(f) => (false, f.msg),
            };
            ok &= pass;
            let line = format!("{:<28} {}  {}", x.to_string(), if pass { "pass" } else { "FAIL" }, detail);
            text.push_str(line.trim_end());
            text.push('\n');
            rows.push(json!({ "instance": x.to_string(), "pass": pass, "detail": detail }));
        }
        let out = match job.format {
            Format::Json => pretty(&json!({ "pass": ok, "instances": rows })),
            _ => text,
        };
        return Ok((out, ok));
    }
    let x = job.checked()?;
    let rep = verify_instance(x, job.target, job.mode(), job.inject_corrupt_edge)?;
    Ok((render_report(&x.to_string(), &rep, job.format), rep.passed()))
}

fn branch_instance(x: Instance) -> Result<(Value, String, bool), Fail> {
    check_scope(x.case, x.n, x.i, x.s)?;
    let (t, fp) = build_hat(x.case, x.n, x.i, x.s)?;
    let got = branch_hat(&fp)?;
    let gate = multiplicity_free_gate(&t, &fp)?;
    let identity = got.weighted_dim() == fp.len() as u128;
    let (status, ok) = match expected_branching(x.case, x.n, x.i, x.s) {
        Ok(expect) if expect == got.multiset() => ("matches closed formula".to_string(), true),
        Ok(expect) => (format!("MISMATCH, expected {:?}", expect.keys().collect::<Vec<_>>()), false),
        Err(Error::NoFormula(m)) => (format!("no closed formula ({m})"), true),
        Err(e) => return Err(e.into()),
    };
    let ok = ok && identity && gate.fixed_weight_agrees != Some(false);
    let mut text = format!("{x}\n{}", branching_text(&got));
    text.push_str(&format!("multiplicity-free parent: {}\n{status}\n", gate.multiplicity_free));
    let mut v = branching_json(&got);
    v["instance"] = json!(x.to_string());
    v["formula"] = json!(status);
    v["multiplicity_free"] = json!(gate.multiplicity_free);
    v["cardinality_identity"] = json!(identity);
    Ok((v, text, ok))
}

fn cmd_branch(job: &Job) -> Outcome {
    let xs = if job.all_scope { verification_instances() } else { vec![job.instance()?] };
    let results: Vec<Result<(Value, String, bool), Fail>> = xs.into_par_iter().map(branch_instance).collect();
    let mut ok = true;
    let mut vals = Vec::new();
    let mut text = String::new();
    for r in results {
        let (v, t, pass) = r?;
        ok &= pass;
        vals.push(v);
        text.push_str(&t);
        text.push('\n');
    }
    let out = match job.format {
        Format::Json if job.all_scope => pretty(&Value::Array(vals)),
        Format::Json => pretty(&vals[0]),
        _ => text,
    };
    Ok((out, ok))
}

fn cmd_rmatrix(job: &Job) -> Outcome {
    let x = job.checked()?;
    let y = Instance::new(x.case, x.n, job.i2.unwrap_or(x.i), job.s2.unwrap_or(x.s));
    let (v, rep) = match job.target {
        Target::Kr | Target::Tilde => {
            let (b1, b2) = if job.target == Target::Kr {
                (build_kr(x.case, x.n, x.i, x.s)?, build_kr(y.case, y.n, y.i, y.s)?)
            } else {
                check_scope(y.case, y.n, y.i, y.s)?;
                (build_tilde_crystal(x.case, x.n, x.i, x.s)?.graph, build_tilde_crystal(y.case, y.n, y.i, y.s)?.graph)
            };
            let r = compute_r_matrix(&b1, &b2)?;
            let mut rep = verify_intertwiner(&r.b12, &r.b21, &r.map);
            let other = compute_r_matrix_with(&b1, &b2, Order::Dfs)?;
            rep.push(if other.map == r.map {
                Stage::pass("rmatrix:unique")
            } else {
                Stage::fail("rmatrix:unique", "BFS and DFS tables differ")
            });
            (r.map.to_json(), rep)
        }
        Target::Hat => {
            check_scope(y.case, y.n, y.i, y.s)?;
            let (t1, f1) = build_hat(x.case, x.n, x.i, x.s)?;
            let (t2, f2) = build_hat(y.case, y.n, y.i, y.s)?;
            let (p1, p2, map) = hat_r_matrix(&t1, &f1, &t2, &f2)?;
            (map.to_json(), verify_intertwiner(&p1.hat_tensor, &p2.hat_tensor, &map))
        }
    };
    let out = match job.format {
        Format::Json => pretty(&json!({ "intertwiner": v, "report": report_json(&rep) })),
        _ => format!("R: {x} ⊗ {y}\n{rep}"),
    };
    Ok((out, rep.passed()))
}

fn cmd_energy(job: &Job) -> Outcome {
    let x = job.checked()?;
    let (v, stage) = match job.target {
        Target::Kr | Target::Tilde => {
            let b = if job.target == Target::Kr {
                build_kr(x.case, x.n, x.i, x.s)?
            } else {
                build_tilde_crystal(x.case, x.n, x.i, x.s)?.graph
            };
            let h = compute_energy(&b)?;
            (h.to_json(), Stage::pass("energy"))
        }
        Target::Hat => {
            let (t, fp) = build_hat(x.case, x.n, x.i, x.s)?;
            let he = hat_energy(&t, &fp)?;
            let rows: Vec<(usize, i64)> = he.values.iter().copied().enumerate().collect();
            (json!(rows), check_hat_energy(&fp, &he))
        }
    };
    let out = match job.format {
        Format::Json => pretty(&v),
        _ => {
            let mut s = format!("H on B ⊗ B for {x}: {}\n", if stage.pass { "consistent" } else { "INCONSISTENT" });
            for row in v.as_array().into_iter().flatten() {
                s.push_str(&format!("{:>8} {:>4}\n", row[0], row[1]));
            }
            s
        }
    };
    Ok((out, stage.pass))
}

fn emit(job: &Job, body: &str) -> Result<(), Fail> {
    match &job.out {
        Some(path) => fs::write(path, body).map_err(|e| invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).map_err(|e| invalid(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (job, result) = match &cli.command {
        Command::Build(j) => (j, cmd_build(j)),
        Command::Verify(j) => (j, cmd_verify(j)),
        Command::Branch(j) => (j, cmd_branch(j)),
        Command::Rmatrix(j) => (j, cmd_rmatrix(j)),
        Command::Energy(j) => (j, cmd_energy(j)),
    };
    let result = result.and_then(|(body, ok)| emit(job, &body).map(|()| ok));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
