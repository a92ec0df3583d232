use clap::Subcommand;
use num_rational::Ratio;

use clawsquare::coloring::Budget;
use clawsquare::generators::{IntervalKind, Strip};
use clawsquare::io::parse_interval_rep;
use clawsquare::verifier::{
    check_cgtt, check_circular_bound, check_conjecture_and_diameter2, check_lemma_cliquesecond, check_strip_bound,
    enumerate_small_multigraphs, f_table_rows, CheckRow, Config, IntervalBoundReport, Relation, SparsityCase,
    SparsityContext, Q,
};
use clawsquare::Multigraph;

use crate::input::{load_graph, load_multigraph, load_text};
use crate::Failure;

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Degree of every edge in L(F)² against the counting formula.
    Identity { input: String },
    /// Case split and exact inequalities for every edge of a regular multigraph.
    Sparsity {
        input: String,
        #[arg(long, default_value = "1/30")]
        eps1: Ratio<i64>,
        #[arg(long, default_value = "1/9")]
        eps2: Ratio<i64>,
        #[arg(long, default_value = "2/3")]
        eps3: Ratio<i64>,
    },
    /// Square degrees of an interval representation (circular: 4ω−4, linear strip: 3ω−3 on N(a)).
    Interval { input: String },
    /// Edge count against Δ² or f(Δ); `--exhaustive n=6 dmax=4 mmax=3` sweeps all small multigraphs.
    Cgtt {
        #[arg(long)]
        exhaustive: bool,
        args: Vec<String>,
    },
    /// χ(G²) against the conjectured bound, and |V| when G² is complete.
    Conjecture {
        input: String,
        #[arg(long)]
        line: bool,
    },
    /// N(u) ∩ N²(v) is a clique of size at most ω−1 for every v and u ∈ N(v).
    Cliquesecond {
        input: String,
        #[arg(long)]
        line: bool,
    },
    /// Edge counts of C5(Δ) against f(Δ).
    Ftable {
        #[arg(long, default_value_t = 40)]
        built: usize,
        #[arg(long, default_value_t = 1000)]
        closed: usize,
    },
    /// Feasibility of the sparsity constants.
    Config {
        #[arg(long, default_value = "1/36")]
        eps: Ratio<i64>,
        #[arg(long, default_value = "1/30")]
        eps1: Ratio<i64>,
        #[arg(long, default_value = "1/9")]
        eps2: Ratio<i64>,
        #[arg(long, default_value = "2/3")]
        eps3: Ratio<i64>,
    },
}

fn int(x: usize) -> Q {
    Q::from_integer(x as i128)
}

fn interval_row(id: &str, name: &str, r: &IntervalBoundReport) -> CheckRow {
    CheckRow::new(id, name, int(r.max_square_degree), Relation::Le, int(r.bound))
}

/// Rows plus `#`-prefixed notes for stderr.
pub fn run(cmd: VerifyCmd) -> Result<(Vec<CheckRow>, Vec<String>), Failure> {
    let mut notes = Vec::new();
    let rows = match cmd {
        VerifyCmd::Identity { input } => {
            let f = load_multigraph(&input)?;
            let ctx = SparsityContext::new(&f);
            let labels = f.edge_labels();
            (0..ctx.edge_count())
                .map(|e| {
                    let (formula, direct) = ctx.degree_identity(e)?;
                    let l = labels[e];
                    Ok(CheckRow::new(
                        format!("{}-{}#{}", l.u, l.v, l.copy),
                        "degree_identity",
                        int(formula),
                        Relation::Eq,
                        int(direct),
                    ))
                })
                .collect::<Result<Vec<_>, Failure>>()?
        }
        VerifyCmd::Sparsity {
            input,
            eps1,
            eps2,
            eps3,
        } => {
            let config = Config {
                eps1,
                eps2,
                eps3,
                ..Config::default()
            };
            config.validate()?;
            let f = load_multigraph(&input)?;
            let ctx = SparsityContext::new(&f);
            if !ctx.is_regular() {
                notes.push("multigraph is not regular; case inequalities are not asserted".to_string());
            }
            let mut cases = [0usize; 3];
            let mut max_ratio: Option<Q> = None;
            let mut rows = Vec::new();
            for e in 0..ctx.edge_count() {
                let r = ctx.report(e, &config)?;
                cases[match r.case {
                    SparsityCase::One => 0,
                    SparsityCase::Two => 1,
                    SparsityCase::Three => 2,
                }] += 1;
                if let Some(x) = r.ratio {
                    max_ratio = Some(max_ratio.map_or(x, |m: Q| m.max(x)));
                }
                rows.extend(r.checks);
            }
            notes.push(format!("cases 1/2/3: {} {} {}", cases[0], cases[1], cases[2]));
            if let Some(m) = max_ratio {
                notes.push(format!(
                    "max induced ratio {m} (Δ = {}, threshold Δ₀ = {})",
                    f.max_degree(),
                    config.delta0
                ));
            }
            rows
        }
        VerifyCmd::Interval { input } => {
            let rep = parse_interval_rep(&load_text(&input)?)?;
            match rep.kind() {
                IntervalKind::Circular { .. } => vec![interval_row(
                    &input,
                    "circular_4w_minus_4",
                    &check_circular_bound(&rep)?,
                )],
                IntervalKind::Linear => {
                    let strip = Strip::from_rep(rep)?;
                    vec![interval_row(&input, "strip_3w_minus_3", &check_strip_bound(&strip)?)]
                }
            }
        }
        VerifyCmd::Cgtt { exhaustive, args } => {
            let instances: Vec<(String, Multigraph)> = if exhaustive {
                let (mut n, mut dmax, mut mmax) = (6, 4, 3);
                for a in &args {
                    let (k, v) = a
                        .split_once('=')
                        .ok_or_else(|| Failure::Usage(format!("expected key=value, got `{a}`")))?;
                    let v: usize = v.parse().map_err(|_| Failure::Usage(format!("bad number in `{a}`")))?;
                    match k {
                        "n" => n = v,
                        "dmax" => dmax = v,
                        "mmax" => mmax = v,
                        _ => return Err(Failure::Usage(format!("unknown key `{k}`"))),
                    }
                }
                let all = enumerate_small_multigraphs(n, dmax, mmax)?;
                notes.push(format!(
                    "{} multigraphs (n <= {n}, Δ <= {dmax}, multiplicity <= {mmax})",
                    all.len()
                ));
                all.into_iter()
                    .enumerate()
                    .map(|(i, f)| (format!("n{}-{i}", f.n()), f))
                    .collect()
            } else {
                let [input] = args.as_slice() else {
                    return Err(Failure::Usage("cgtt takes one input file or --exhaustive".into()));
                };
                vec![(input.clone(), load_multigraph(input)?)]
            };
            let mut rows = Vec::new();
            let mut equality = 0;
            for (id, f) in instances {
                let v = check_cgtt(&f)?;
                let rel = if v.extremal.is_some() {
                    Relation::Le
                } else {
                    Relation::Lt
                };
                rows.push(CheckRow::new(
                    id.clone(),
                    format!("{:?}_edges", v.branch),
                    int(v.edges),
                    rel,
                    int(v.bound),
                ));
                if let Some(iso) = v.extremal {
                    rows.push(CheckRow::new(
                        id,
                        "equality_iff_extremal",
                        int(v.equality as usize),
                        Relation::Eq,
                        int(iso as usize),
                    ));
                }
                equality += v.equality as usize;
            }
            notes.push(format!("{equality} equality cases"));
            rows
        }
        VerifyCmd::Conjecture { input, line } => {
            let g = load_graph(&input, line)?;
            let r = check_conjecture_and_diameter2(&g, Budget::default())?;
            notes.push(format!(
                "ω = {}, χ(G²) = {}, square complete: {}",
                r.omega, r.chi_square, r.square_complete
            ));
            let mut rows = vec![CheckRow::new(
                &input,
                "chi_square_vs_conjecture",
                int(r.chi_square),
                Relation::Le,
                int(r.bound),
            )];
            if r.diameter_two.is_some() {
                rows.push(CheckRow::new(
                    &input,
                    "diameter_two_order",
                    int(g.n()),
                    Relation::Le,
                    int(r.bound),
                ));
            }
            rows
        }
        VerifyCmd::Cliquesecond { input, line } => {
            let g = load_graph(&input, line)?;
            let r = check_lemma_cliquesecond(&g)?;
            notes.push(format!("{} (v, u) pairs", r.pairs_checked));
            vec![
                CheckRow::new(
                    &input,
                    "max_size",
                    int(r.max_size),
                    Relation::Le,
                    int(r.omega.saturating_sub(1)),
                ),
                CheckRow::new(
                    &input,
                    "violations",
                    int(r.violation.is_some() as usize),
                    Relation::Eq,
                    int(0),
                ),
            ]
        }
        VerifyCmd::Ftable { built, closed } => f_table_rows(2..=built, 2..=closed)?,
        VerifyCmd::Config { eps, eps1, eps2, eps3 } => {
            let config = Config {
                eps,
                eps1,
                eps2,
                eps3,
                ..Config::default()
            };
            config.feasibility_rows()
        }
    };
    Ok((rows, notes))
}
