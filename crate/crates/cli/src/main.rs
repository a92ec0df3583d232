mod input;
mod verify;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use rayon::prelude::*;

use clawsquare::coloring::{
    chromatic_exact, clique_number, greedy_trivial_square_coloring, main_square_coloring, strong_edge_coloring,
    trivial_bound, verify_coloring, BaseEngine, Budget, StepCase, StrongMode,
};
use clawsquare::corpus::{full_corpus, Instance};
use clawsquare::generators::{
    c5_blowup, complete_bipartite, compose_strips, cycle_power, named_instance, random_circular_rep, random_multigraph,
    random_regular_multigraph, random_scheme, random_strip, rng_from_seed, wheel, NAMED_INSTANCES,
};
use clawsquare::io::{write_coloring, write_graph, write_interval_rep, write_multigraph, write_scheme};
use clawsquare::recognition::{
    find_claw, find_homogeneous_pair, krausz_partition, quasi_line_violation, HOMOGENEOUS_PAIR_MAX_N,
};
use clawsquare::selector::{select_nonquasiline, select_quasiline};
use clawsquare::verifier::{check_lemma_cliquesecond, to_csv, CheckRow, Relation, Q};
use clawsquare::{Error, SimpleGraph};

use crate::input::{load_graph, load_multigraph};
use crate::verify::VerifyCmd;

#[derive(Parser, Debug)]
#[command(
    name = "clawsquare",
    version,
    about = "Colour squares of claw-free graphs and check the bounds behind them"
)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an instance: c5_blowup D | complete_bipartite A B | random_multigraph N D M |
    /// random_regular N D | wheel K | cycle_power N K | circular N P ARCS | strip N |
    /// scheme K MAXSTRIP | composition K MAXSTRIP | a named instance.
    #[command(alias = "gen")]
    Generate { family: String, params: Vec<String> },
    /// Print square(G) in graph format.
    Square {
        input: String,
        #[arg(long)]
        line: bool,
    },
    /// Colour square(G), or strongly colour the edges of a multigraph.
    Color {
        input: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Main)]
        method: MethodArg,
        #[arg(long, default_value = "1/36")]
        eps: Ratio<i64>,
        #[arg(long)]
        line: bool,
    },
    /// Find the removable vertex in a connected claw-free graph.
    Select {
        input: String,
        #[arg(long)]
        line: bool,
    },
    /// Claw, quasi-line, line-graph and homogeneous-pair structure.
    Recognize {
        input: String,
        #[arg(long)]
        line: bool,
    },
    /// Exact checks; prints CSV rows.
    Verify {
        #[command(subcommand)]
        check: VerifyCmd,
    },
    /// Run the colouring engines and checks over the seeded corpus; prints CSV rows.
    Bench,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Exact,
    Greedy,
    Main,
    StrongExact,
    StrongGreedy,
}

#[derive(Debug)]
pub enum Failure {
    /// Bad input or arguments; exit status 2.
    Usage(String),
    /// A check or computation failed; exit status 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidParameters(_)
            | Error::MalformedRep(_)
            | Error::InvalidScheme(_)
            | Error::UnknownInstance(_)
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::DuplicateEdge(..)
            | Error::ZeroMultiplicity(..) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    ok: bool,
}

fn pass(text: String) -> Result<Output, Failure> {
    Ok(Output { text, ok: true })
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, name: &str) -> Result<T, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| Failure::Usage(format!("missing parameter {name}")))?;
    raw.parse()
        .map_err(|_| Failure::Usage(format!("parameter {name}: cannot parse `{raw}`")))
}

fn generate(family: &str, p: &[String], seed: u64) -> Result<Output, Failure> {
    let mut rng = rng_from_seed(seed);
    let text = match family {
        "c5_blowup" => write_multigraph(&c5_blowup(param(p, 0, "D")?)?),
        "complete_bipartite" => write_multigraph(&complete_bipartite(param(p, 0, "A")?, param(p, 1, "B")?)?),
        "random_multigraph" => write_multigraph(&random_multigraph(
            param(p, 0, "N")?,
            param(p, 1, "D")?,
            param(p, 2, "M")?,
            seed,
        )?),
        "random_regular" => write_multigraph(&random_regular_multigraph(param(p, 0, "N")?, param(p, 1, "D")?, seed)?),
        "wheel" => write_graph(&wheel(param(p, 0, "K")?)),
        "cycle_power" => write_graph(&cycle_power(param(p, 0, "N")?, param(p, 1, "K")?)?),
        "circular" => write_interval_rep(&random_circular_rep(
            &mut rng,
            param(p, 0, "N")?,
            param(p, 1, "P")?,
            param(p, 2, "ARCS")?,
        )?),
        "strip" => write_interval_rep(&random_strip(&mut rng, param(p, 0, "N")?)?.rep),
        "scheme" => write_scheme(&random_scheme(&mut rng, param(p, 0, "K")?, param(p, 1, "MAXSTRIP")?)?),
        "composition" => {
            let scheme = random_scheme(&mut rng, param(p, 0, "K")?, param(p, 1, "MAXSTRIP")?)?;
            write_graph(&compose_strips(&scheme)?.graph)
        }
        name if NAMED_INSTANCES.contains(&name) => write_graph(&named_instance(name)?),
        other => return Err(Failure::Usage(format!("unknown family `{other}`"))),
    };
    pass(text)
}

fn component_notes(g: &SimpleGraph, out: &mut String) {
    let comps = g.components();
    if comps.len() > 1 {
        for (i, c) in comps.iter().enumerate() {
            let vs: Vec<String> = c.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "# component {i}: {}", vs.join(" "));
        }
    }
}

fn color(input: &str, method: MethodArg, eps: Ratio<i64>, line: bool) -> Result<Output, Failure> {
    let mut out = String::new();
    if let MethodArg::StrongExact | MethodArg::StrongGreedy = method {
        let f = load_multigraph(input)?;
        let mode = if let MethodArg::StrongExact = method {
            StrongMode::Exact
        } else {
            StrongMode::Greedy
        };
        let (res, labels) = strong_edge_coloring(&f, mode)?;
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "# edge {i} = {} {} copy {}", l.u, l.v, l.copy);
        }
        let _ = writeln!(out, "# bound {}", res.bound_certificate);
        out.push_str(&write_coloring(&res.coloring, &res.method.to_string()));
        let sq = f.line_graph().graph.square();
        let ok = verify_coloring(&sq, &res.coloring)?.is_none() && res.colors_used <= res.bound_certificate;
        return Ok(Output { text: out, ok });
    }
    let g = load_graph(input, line)?;
    component_notes(&g, &mut out);
    let res = match method {
        MethodArg::Exact => {
            let res = chromatic_exact(&g.square(), None, Budget::default())?;
            let _ = writeln!(out, "# omega {}", clique_number(&g).0);
            res
        }
        MethodArg::Greedy => {
            let res = greedy_trivial_square_coloring(&g)?;
            let _ = writeln!(out, "# bound {}", res.bound_certificate);
            res
        }
        _ => {
            let outcome = main_square_coloring(&g, eps)?;
            for step in &outcome.trace {
                let case = match &step.case {
                    StepCase::LineGraph { engine, colors } => {
                        let engine = if *engine == BaseEngine::Exact {
                            "exact"
                        } else {
                            "greedy_trivial"
                        };
                        format!("case=a engine={engine} colors={colors}")
                    }
                    StepCase::QuasiLine { v, s } => {
                        let s: Vec<String> = s.iter().map(ToString::to_string).collect();
                        format!("case=b v={v} s={}", s.join(","))
                    }
                    StepCase::NonQuasiLine { v } => format!("case=c v={v}"),
                };
                let _ = writeln!(
                    out,
                    "# step depth={} n={} omega={} {case}",
                    step.depth, step.n, step.omega
                );
            }
            let _ = writeln!(
                out,
                "# omega {} palette {} target {} eps {}",
                outcome.omega, outcome.palette, outcome.target, outcome.eps
            );
            outcome.result
        }
    };
    out.push_str(&write_coloring(&res.coloring, &res.method.to_string()));
    let ok = verify_coloring(&g.square(), &res.coloring)?.is_none();
    Ok(Output { text: out, ok })
}

fn list(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn select(input: &str, line: bool) -> Result<Output, Failure> {
    let g = load_graph(input, line)?;
    let nonquasiline = quasi_line_violation(&g).is_some();
    let witness = if nonquasiline {
        select_nonquasiline(&g)?
    } else {
        select_quasiline(&g)?
    };
    let mut out = String::new();
    let variant = if nonquasiline { "nonquasiline" } else { "quasiline" };
    let _ = writeln!(out, "variant {variant}");
    let _ = writeln!(out, "v {}", witness.v());
    let _ = writeln!(out, "s {}", list(witness.s()));
    let _ = writeln!(out, "omega {}", witness.omega);
    let _ = writeln!(out, "square_degree {}", witness.square_degree);
    let _ = writeln!(out, "s_square_degrees {}", list(&witness.s_square_degrees));
    let _ = writeln!(out, "clique_set {}", list(&witness.clique_set));
    let _ = writeln!(out, "scanned {}", witness.scanned);
    let ok = witness.revalidate(&g).is_ok();
    let _ = writeln!(out, "revalidated {ok}");
    Ok(Output { text: out, ok })
}

fn recognize(input: &str, line: bool) -> Result<Output, Failure> {
    let g = load_graph(input, line)?;
    let mut out = String::new();
    component_notes(&g, &mut out);
    let _ = writeln!(out, "n {} m {} omega {}", g.n(), g.edge_count(), clique_number(&g).0);
    match find_claw(&g) {
        Some((c, l)) => {
            let _ = writeln!(out, "claw center {c} leaves {}", list(&l));
        }
        None => out.push_str("claw none\n"),
    }
    match quasi_line_violation(&g) {
        Some(v) => {
            let _ = writeln!(out, "quasi_line no (vertex {v})");
        }
        None => out.push_str("quasi_line yes\n"),
    }
    match krausz_partition(&g) {
        Some(cert) => {
            out.push_str("line_graph yes\n");
            for l in write_multigraph(&cert.root).lines() {
                let _ = writeln!(out, "root {l}");
            }
        }
        None => out.push_str("line_graph no\n"),
    }
    if g.n() <= HOMOGENEOUS_PAIR_MAX_N {
        match find_homogeneous_pair(&g, true) {
            Some(hp) => {
                let _ = writeln!(out, "homogeneous_pair a {} b {}", list(&hp.a), list(&hp.b));
            }
            None => out.push_str("homogeneous_pair none\n"),
        }
    }
    pass(out)
}

fn bench_rows(inst: &Instance) -> Vec<CheckRow> {
    let id = inst.id.as_str();
    let g = &inst.graph;
    let int = |x: usize| Q::from_integer(x as i128);
    let mut rows = Vec::new();
    let omega = clique_number(g).0;
    let sq = g.square();
    let proper = |c: &clawsquare::Coloring| verify_coloring(&sq, c).map_or(1, |r| r.is_some() as usize);
    match greedy_trivial_square_coloring(g) {
        Ok(r) => {
            rows.push(CheckRow::new(
                id,
                "greedy_colors",
                int(r.colors_used),
                Relation::Le,
                int(trivial_bound(omega)),
            ));
            rows.push(CheckRow::new(
                id,
                "greedy_conflicts",
                int(proper(&r.coloring)),
                Relation::Eq,
                int(0),
            ));
        }
        Err(_) => rows.push(CheckRow::new(id, "greedy_ran", int(0), Relation::Eq, int(1))),
    }
    match main_square_coloring(g, Ratio::new(1, 36)) {
        Ok(o) => {
            rows.push(CheckRow::new(
                id,
                "main_colors",
                int(o.result.colors_used),
                Relation::Le,
                int(o.palette),
            ));
            rows.push(CheckRow::new(
                id,
                "main_conflicts",
                int(proper(&o.result.coloring)),
                Relation::Eq,
                int(0),
            ));
            let bad = o.recolor_checks.iter().filter(|c| !c.holds()).count();
            rows.push(CheckRow::new(
                id,
                "main_recolor_failures",
                int(bad),
                Relation::Eq,
                int(0),
            ));
        }
        Err(_) => rows.push(CheckRow::new(id, "main_ran", int(0), Relation::Eq, int(1))),
    }
    match check_lemma_cliquesecond(g) {
        Ok(r) => {
            rows.push(CheckRow::new(
                id,
                "cliquesecond_max",
                int(r.max_size),
                Relation::Le,
                int(omega.saturating_sub(1)),
            ));
            rows.push(CheckRow::new(
                id,
                "cliquesecond_violations",
                int(r.violation.is_some() as usize),
                Relation::Eq,
                int(0),
            ));
        }
        Err(_) => rows.push(CheckRow::new(id, "cliquesecond_ran", int(0), Relation::Eq, int(1))),
    }
    rows
}

fn csv_output(rows: Vec<CheckRow>, notes: Vec<String>) -> Result<Output, Failure> {
    for n in notes {
        eprintln!("# {n}");
    }
    let failed = rows.iter().filter(|r| !r.pass()).count();
    eprintln!("# {} rows, {failed} failed", rows.len());
    Ok(Output {
        text: to_csv(&rows),
        ok: failed == 0,
    })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Generate { family, params } => generate(&family, &params, cli.seed),
        Command::Square { input, line } => pass(write_graph(&load_graph(&input, line)?.square())),
        Command::Color {
            input,
            method,
            eps,
            line,
        } => color(&input, method, eps, line),
        Command::Select { input, line } => select(&input, line),
        Command::Recognize { input, line } => recognize(&input, line),
        Command::Verify { check } => {
            let (rows, notes) = verify::run(check)?;
            csv_output(rows, notes)
        }
        Command::Bench => {
            let corpus = full_corpus(cli.seed)?;
            let rows: Vec<CheckRow> = corpus.par_iter().map(bench_rows).collect::<Vec<_>>().concat();
            csv_output(rows, vec![format!("{} instances, seed {}", corpus.len(), cli.seed)])
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(output) => {
            let written = match &out_path {
                Some(path) => fs::write(path, &output.text),
                None => {
                    print!("{}", output.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
