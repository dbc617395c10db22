//! The `rainbow` command line: `solve`, `generate`, `verify`, `crosscheck`.
//!
//! Exit codes are 0 for yes (or success), 1 for no (or a rejected witness,
//! or a disagreement), 2 for errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::detour::solve_detour_with;
use crate::error::SolveError;
use crate::graph::{bfs_path, dist_to_target, ColoredDigraph, LengthMode, Query, Witness};
use crate::instances::{
    format_witness, gen_3sat_instance, gen_phs_instance, gen_random, parse_instance,
    parse_phs_sets, parse_witness, write_instance, Cnf, PhsInput,
};
use crate::oracle::{oracle_3sat, oracle_path, oracle_phs, oracle_walk_with_ceiling};
use crate::path::{solve_path_with, solve_r2_symmetric};
use crate::repfam::Backend;
use crate::stats::{Solution, SolveOptions, SolveStats};
use crate::verify::verify_witness;
use crate::walk::{any_length_witness, solve_r1, solve_walk_with, AnyLengthBackend};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rainbow",
    version,
    about = "Locally rainbow s-t walks and paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an instance file.
    Solve(SolveArgs),
    /// Write a generated instance.
    Generate(GenerateArgs),
    /// Replay a witness file against an instance.
    Verify(VerifyArgs),
    /// Run every applicable solver and compare answers.
    Crosscheck(CrosscheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverChoice {
    Auto,
    Walk,
    Path,
    Detour,
    Oracle,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    #[default]
    Walk,
    Path,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Algebraic,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AnyBackendArg {
    Cap,
    Product,
}

#[derive(Args, Debug)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    solver: SolverChoice,
    #[arg(long, value_enum, default_value = "algebraic")]
    backend: BackendArg,
    /// Whether `auto` and `oracle` look for walks or paths; the other
    /// solvers fix it themselves.
    #[arg(long, value_enum, default_value = "walk")]
    problem: Problem,
    /// Backend for any-length walk queries.
    #[arg(long, value_enum, default_value = "cap")]
    any_backend: AnyBackendArg,
    /// Largest detour `auto` hands to the detour solver.
    #[arg(long, default_value_t = 3)]
    detour_max_k: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Generator {
    /// Permutation hitting set: K and a file with one set of `i,j` cells per line.
    #[arg(long, num_args = 2, value_names = ["K", "SETSFILE"])]
    phs: Option<Vec<String>>,
    /// 3-SAT in minimal DIMACS form, each variable twice positive and twice negative.
    #[arg(long, value_name = "CNFFILE")]
    sat: Option<PathBuf>,
    /// Random instance.
    #[arg(long, num_args = 6, value_names = ["N", "P", "C", "R", "ELL", "SEED"])]
    random: Option<Vec<String>>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    generator: Generator,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    instance: PathBuf,
    witness: PathBuf,
    /// Also require distinct vertices.
    #[arg(long)]
    path: bool,
}

#[derive(Args, Debug)]
struct CrosscheckArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "algebraic")]
    backend: BackendArg,
}

/// How `solve` should run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    pub solver: SolverChoice,
    pub problem: Problem,
    pub any_backend: AnyLengthBackend,
    pub detour_max_k: usize,
    pub options: SolveOptions,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            solver: SolverChoice::Auto,
            problem: Problem::Walk,
            any_backend: AnyLengthBackend::Cap,
            detour_max_k: 3,
            options: SolveOptions::default(),
        }
    }
}

/// What `solve --json` prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub report_version: u32,
    pub answer: String,
    pub witness: Option<Vec<usize>>,
    pub solver: String,
    pub problem: Problem,
    pub elapsed_ms: f64,
    pub stats: SolveStats,
}

impl RunReport {
    pub fn is_yes(&self) -> bool {
        self.answer == "yes"
    }

    pub fn witness(&self) -> Option<Witness> {
        self.witness.clone().map(Witness::new)
    }
}

/// The problem a solver choice answers.
pub fn problem_of(config: &SolveConfig) -> Problem {
    match config.solver {
        SolverChoice::Walk => Problem::Walk,
        SolverChoice::Path | SolverChoice::Detour => Problem::Path,
        SolverChoice::Auto | SolverChoice::Oracle => config.problem,
    }
}

/// The solver `auto` picks, by name.
pub fn auto_choice(
    g: &ColoredDigraph,
    q: Query,
    problem: Problem,
    detour_max_k: usize,
) -> &'static str {
    let ds = dist_to_target(g)[g.source()];
    let shortest = q.mode != LengthMode::AnyLength && ds == Some(q.ell);
    let at_most = q.mode == LengthMode::AtMost;
    if q.r == 0 && at_most {
        return "bfs";
    }
    if q.r == 1 && at_most {
        return "r1-bfs";
    }
    if q.r == 2 && shortest && g.is_symmetric() && !g.has_monochromatic_arc() {
        return "r2-symmetric";
    }
    if shortest {
        return "walk";
    }
    match problem {
        Problem::Walk => "walk",
        Problem::Path => match (q.mode, ds) {
            (LengthMode::AnyLength, _) => "path",
            (_, Some(d)) if q.ell >= d && q.ell - d <= detour_max_k => "detour",
            _ => "path",
        },
    }
}

/// Runs the configured solver. The witness, if any, has been replayed
/// with [`verify_witness`].
pub fn solve_instance(
    g: &ColoredDigraph,
    q: Query,
    config: &SolveConfig,
) -> Result<RunReport, SolveError> {
    let problem = problem_of(config);
    let opts = &config.options;
    let start = Instant::now();
    let name: &'static str = match config.solver {
        SolverChoice::Auto => auto_choice(g, q, problem, config.detour_max_k),
        SolverChoice::Walk => "walk",
        SolverChoice::Path => "path",
        SolverChoice::Detour => "detour",
        SolverChoice::Oracle => "oracle",
    };
    let plain = |witness: Option<Witness>| Solution {
        witness,
        stats: SolveStats::default(),
    };
    let solution = match name {
        "bfs" => plain(bfs_path(g, |_, _| true).filter(|w| w.len() <= q.ell)),
        "r1-bfs" => plain(solve_r1(g, q.ell)),
        "r2-symmetric" => plain(solve_r2_symmetric(g, q.ell)?),
        "walk" => match q.mode {
            LengthMode::AnyLength => plain(any_length_witness(g, q.r, config.any_backend, opts)?),
            _ => solve_walk_with(g, q, opts)?,
        },
        "path" => solve_path_with(g, q, opts)?,
        "detour" => {
            let ds = dist_to_target(g)[g.source()];
            match ds {
                None => Solution::default(),
                Some(d) => {
                    let k = q.ell as i64 - d as i64;
                    solve_detour_with(g, q.r, k, q.mode, opts)?
                }
            }
        }
        "oracle" => plain(match problem {
            Problem::Walk => oracle_walk_with_ceiling(g, q, opts.state_ceiling)?,
            Problem::Path => oracle_path(g, q),
        }),
        other => unreachable!("unknown solver {other}"),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    if let Some(w) = &solution.witness {
        verify_witness(g, q, w, problem == Problem::Path).map_err(|e| {
            SolveError::Precondition(format!(
                "internal error: {name} produced an invalid witness: {e}"
            ))
        })?;
    }
    Ok(RunReport {
        report_version: 1,
        answer: if solution.found() { "yes" } else { "no" }.to_string(),
        witness: solution.witness.map(|w| w.vertices),
        solver: name.to_string(),
        problem,
        elapsed_ms,
        stats: solution.stats,
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Generate(a) => cmd_generate(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Crosscheck(a) => cmd_crosscheck(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<(ColoredDigraph, Query), String> {
    parse_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn backend(b: BackendArg) -> Backend {
    match b {
        BackendArg::Algebraic => Backend::Algebraic,
        BackendArg::Exhaustive => Backend::Exhaustive,
    }
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let (g, q) = load(&a.instance)?;
    let config = SolveConfig {
        solver: a.solver,
        problem: a.problem,
        any_backend: match a.any_backend {
            AnyBackendArg::Cap => AnyLengthBackend::Cap,
            AnyBackendArg::Product => AnyLengthBackend::Product,
        },
        detour_max_k: a.detour_max_k,
        options: SolveOptions::with_backend(backend(a.backend)),
    };
    let report = solve_instance(&g, q, &config).map_err(|e| e.to_string())?;
    if a.json {
        let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        let _ = writeln!(out, "{text}");
    } else {
        let _ = writeln!(out, "{}", format_witness(report.witness().as_ref()));
        let _ = writeln!(
            err,
            "solver: {} ({:.2} ms)",
            report.solver, report.elapsed_ms
        );
    }
    Ok(if report.is_yes() { EXIT_YES } else { EXIT_NO })
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let gen = &a.generator;
    let (g, q, expected, how) = if let Some(p) = &gen.phs {
        let k: usize = p[0].parse().map_err(|_| format!("bad K '{}'", p[0]))?;
        let sets =
            parse_phs_sets(&read(Path::new(&p[1]))?).map_err(|e| format!("{}: {e}", p[1]))?;
        let input = PhsInput::new(k, sets);
        let (g, q) = gen_phs_instance(&input).map_err(|e| e.to_string())?;
        let expected = (k <= 8).then(|| oracle_phs(k, &input.sets).is_some());
        (g, q, expected, "hitting permutation")
    } else if let Some(path) = &gen.sat {
        let cnf =
            Cnf::parse_dimacs(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
        let (g, q) = gen_3sat_instance(&cnf).map_err(|e| e.to_string())?;
        let expected = (cnf.num_vars <= 20).then(|| oracle_3sat(&cnf).is_some());
        (g, q, expected, "satisfiability; solve with --problem path")
    } else if let Some(p) = &gen.random {
        fn num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, String> {
            s.parse().map_err(|_| format!("bad {what} '{s}'"))
        }
        let (g, q) = gen_random(
            num(&p[0], "N")?,
            num(&p[1], "P")?,
            num(&p[2], "C")?,
            num(&p[3], "R")?,
            num(&p[4], "ELL")?,
            num(&p[5], "SEED")?,
        )
        .map_err(|e| e.to_string())?;
        let expected = oracle_walk_with_ceiling(&g, q, 1_000_000)
            .ok()
            .map(|w| w.is_some());
        (g, q, expected, "walk oracle")
    } else {
        return Err("choose one of --phs, --sat, --random".into());
    };

    let mut text = String::new();
    if let Some(yes) = expected {
        let answer = if yes { "yes" } else { "no" };
        text.push_str(&format!("# expected: {answer} ({how})\n"));
        let _ = writeln!(err, "expected: {answer}");
    }
    text.push_str(&write_instance(&g, &q));
    match &a.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => {
            let _ = write!(out, "{text}");
        }
    }
    Ok(EXIT_YES)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let (g, q) = load(&a.instance)?;
    let witness =
        parse_witness(&read(&a.witness)?).map_err(|e| format!("{}: {e}", a.witness.display()))?;
    let Some(w) = witness else {
        let _ = writeln!(err, "witness file says NO; nothing to verify");
        return Ok(EXIT_NO);
    };
    match verify_witness(&g, q, &w, a.path) {
        Ok(()) => {
            let _ = writeln!(out, "valid");
            Ok(EXIT_YES)
        }
        Err(e) => {
            let _ = writeln!(out, "invalid: {e}");
            Ok(EXIT_NO)
        }
    }
}

fn cmd_crosscheck(
    a: &CrosscheckArgs,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<i32, String> {
    let (g, q) = load(&a.instance)?;
    let options = SolveOptions::with_backend(backend(a.backend));
    let mut runs: Vec<(Problem, SolverChoice)> = vec![
        (Problem::Walk, SolverChoice::Oracle),
        (Problem::Walk, SolverChoice::Walk),
        (Problem::Walk, SolverChoice::Auto),
        (Problem::Path, SolverChoice::Oracle),
        (Problem::Path, SolverChoice::Path),
        (Problem::Path, SolverChoice::Auto),
    ];
    if q.mode != LengthMode::AnyLength && q.r > 0 {
        runs.push((Problem::Path, SolverChoice::Detour));
    }
    let mut answers: Vec<(Problem, bool)> = Vec::new();
    for (problem, solver) in runs {
        let config = SolveConfig {
            solver,
            problem,
            options,
            ..SolveConfig::default()
        };
        match solve_instance(&g, q, &config) {
            Ok(rep) => {
                let _ = writeln!(
                    out,
                    "{:<5} {:<13} {:<3} {:>9.2} ms",
                    format!("{problem:?}").to_lowercase(),
                    rep.solver,
                    rep.answer,
                    rep.elapsed_ms
                );
                answers.push((problem, rep.is_yes()));
            }
            Err(e) => {
                let _ = writeln!(
                    out,
                    "{:<5} {:<13} skipped: {e}",
                    format!("{problem:?}").to_lowercase(),
                    format!("{solver:?}").to_lowercase()
                );
            }
        }
    }
    let agree = [Problem::Walk, Problem::Path].iter().all(|p| {
        let mut it = answers.iter().filter(|(q, _)| q == p).map(|(_, a)| *a);
        match it.next() {
            Some(first) => it.all(|a| a == first),
            None => true,
        }
    });
    let _ = writeln!(out, "{}", if agree { "agree" } else { "DISAGREE" });
    Ok(if agree { EXIT_YES } else { EXIT_NO })
}
