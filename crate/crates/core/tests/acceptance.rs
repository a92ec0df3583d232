//! Acceptance run: one line per criterion, `PASS` or `FAIL`, with the time
//! budget each criterion must meet. Exits non-zero when a criterion fails
//! for a reason other than the documented one.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clawsquare::coloring::{
    greedy_trivial_square_coloring, main_square_coloring, strong_edge_coloring, trivial_bound, verify_coloring,
    StepCase, StrongMode,
};
use clawsquare::corpus::{
    clique_substitutions, full_corpus, nonquasiline_substitutions, random_corpus, regular_multigraphs,
    squared_cycle_substitutions,
};
use clawsquare::generators::{
    c5_blowup, f_of_delta, random_circular_rep, random_strip, rng_from_seed, IntervalRep, Strip,
};
use clawsquare::recognition::{is_quasi_line, krausz_partition};
use clawsquare::selector::{select_nonquasiline, select_quasiline};
use clawsquare::verifier::{
    check_cgtt, check_circular_bound, check_lemma_cliquesecond, check_strip_bound, enumerate_small_multigraphs,
    multigraphs_isomorphic, CgttBranch, Config, SparsityCase, SparsityContext, Q,
};
use clawsquare::{Error, Multigraph, SimpleGraph};
use num_rational::Ratio;
use rand::Rng;

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
    /// Set when the failure is the analysed, expected one.
    accounted: bool,
}

fn ok(pass: bool, detail: String) -> Outcome {
    Outcome {
        pass,
        detail,
        accounted: false,
    }
}

fn c01() -> Outcome {
    let bad: Vec<usize> = (2..=40)
        .filter(|&d| {
            let e = c5_blowup(d).unwrap().edge_count();
            e != common::f_closed(d) || e != f_of_delta(d)
        })
        .collect();
    ok(bad.is_empty(), format!("Δ in 2..=40, mismatches {bad:?}"))
}

fn c02() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for d in 2..=10 {
        let f = c5_blowup(d).unwrap();
        let m = f.edge_count();
        let sq = f.line_graph().graph.square();
        let complete = sq.edge_count() == m * (m - 1) / 2 && (0..m).all(|e| common::line_square_degree(&f, e) == m - 1);
        pass &= complete && m == f_of_delta(d);
    }
    for (d, want) in [(2, 5), (3, 10)] {
        let chi = strong_edge_coloring(&c5_blowup(d).unwrap(), StrongMode::Exact)
            .unwrap()
            .0
            .colors_used;
        notes.push(format!("χ′ₛ(C5({d})) = {chi}"));
        pass &= chi == want;
    }
    ok(pass, format!("squares complete for Δ in 2..=10; {}", notes.join(", ")))
}

fn c03() -> Outcome {
    let corpus = random_corpus(SEED).unwrap();
    let mut worst = 0i64;
    let mut failures = Vec::new();
    for inst in &corpus {
        let omega = common::clique_number(&inst.graph);
        let res = greedy_trivial_square_coloring(&inst.graph);
        let good = match &res {
            Ok(r) => {
                let colors = r.coloring.to_vec().unwrap();
                r.colors_used <= trivial_bound(omega)
                    && verify_coloring(&inst.graph.square(), &r.coloring) == Ok(None)
                    && common::is_proper_square_coloring(&inst.graph, &colors)
            }
            Err(_) => false,
        };
        if let Ok(r) = &res {
            worst = worst.max(r.colors_used as i64 - trivial_bound(omega) as i64);
        }
        if !good {
            failures.push(inst.id.clone());
        }
    }
    ok(
        failures.is_empty() && corpus.len() == 200,
        format!(
            "{} instances, max colours − (2ω²−2ω+1) = {worst}, failures {failures:?}",
            corpus.len()
        ),
    )
}

fn c04() -> Outcome {
    // Non-quasi-line side.
    let mut nonql = vec![clawsquare::generators::wheel(5), clawsquare::generators::icosahedron()];
    nonql.extend(
        nonquasiline_substitutions(100, SEED)
            .unwrap()
            .into_iter()
            .map(|(_, g)| g),
    );
    let nonql_passed = nonql
        .iter()
        .filter(|g| {
            !common::has_claw(g) && !is_quasi_line(g) && select_nonquasiline(g).is_ok_and(|w| w.revalidate(g).is_ok())
        })
        .count();
    let nonql_ok = nonql_passed == nonql.len();

    // Quasi-line side as stated: clique substitutions of C5 with a bag of
    // size at least 2 that are not line graphs.
    let c5 = SimpleGraph::cycle(5);
    let mut subs = vec![(
        vec![2, 1, 1, 1, 1],
        clawsquare::generators::substitute(&c5, &[2, 1, 1, 1, 1], clawsquare::generators::BagMode::Clique).unwrap(),
    )];
    subs.extend(clique_substitutions(&c5, 100, 4, SEED).unwrap());
    let rejected = subs.iter().filter(|(_, g)| krausz_partition(g).is_none()).count();
    let selected = subs.iter().filter(|(_, g)| select_quasiline(g).is_ok()).count();

    // Analysis: every such graph is the line graph of C5 with edge i taken
    // `sizes[i]` times, so the quasi-line selector's precondition fails.
    let analysis = subs.iter().all(|(sizes, g)| {
        let root = Multigraph::from_multiplicities(5, (0..5).map(|i| (i, (i + 1) % 5, sizes[i]))).unwrap();
        let line = Multigraph::from_simple(&root.line_graph().graph);
        is_quasi_line(g)
            && multigraphs_isomorphic(&Multigraph::from_simple(g), &line)
            && krausz_partition(g).is_some_and(|c| c.validate(g))
            && matches!(select_quasiline(g), Err(Error::Precondition(_)))
    });

    // The same selector on quasi-line graphs that are not line graphs.
    let sq = squared_cycle_substitutions(100, SEED).unwrap();
    let sq_ok = sq.iter().all(|(_, _, g)| {
        is_quasi_line(g) && krausz_partition(g).is_none() && select_quasiline(g).is_ok_and(|w| w.revalidate(g).is_ok())
    });

    let pass = nonql_ok && rejected == subs.len() && selected == subs.len();
    Outcome {
        pass,
        detail: format!(
            "non-quasi-line {}/{} ok; C5 clique substitutions: {rejected}/{} Krausz-rejected, {selected} selected \
             (every one is L(C5 with parallel edges): {analysis}); C_n² substitutions: {} ok = {sq_ok}",
            nonql_passed,
            nonql.len(),
            subs.len(),
            sq.len()
        ),
        accounted: !pass && nonql_ok && analysis && rejected == 0 && sq_ok,
    }
}

fn c05() -> Outcome {
    let corpus = full_corpus(SEED).unwrap();
    let eps = Ratio::new(1, 36);
    let mut failures = Vec::new();
    let (mut steps, mut recolorings, mut within_target) = ([0usize; 3], 0, 0);
    for inst in &corpus {
        match main_square_coloring(&inst.graph, eps) {
            Ok(out) => {
                let colors = out.result.coloring.to_vec().unwrap();
                let omega = common::clique_number(&inst.graph);
                let good = common::is_proper_square_coloring(&inst.graph, &colors)
                    && out.palette == trivial_bound(omega)
                    && colors.iter().all(|&c| c < out.palette)
                    && out.recolor_checks.iter().all(|c| c.holds());
                for step in &out.trace {
                    steps[match step.case {
                        StepCase::LineGraph { .. } => 0,
                        StepCase::QuasiLine { .. } => 1,
                        StepCase::NonQuasiLine { .. } => 2,
                    }] += 1;
                }
                recolorings += out.recolor_checks.len();
                within_target += out.within_target() as usize;
                if !good {
                    failures.push(inst.id.clone());
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inst.id)),
        }
    }
    ok(
        failures.is_empty(),
        format!(
            "{} instances; steps (a,b,c) = {steps:?}; {recolorings} recolouring checks; {within_target} within ⌊(2−ε)ω²⌋; failures {failures:?}",
            corpus.len()
        ),
    )
}

fn c06() -> Outcome {
    let corpus = full_corpus(SEED).unwrap();
    let mut pairs = 0;
    let failures: Vec<String> = corpus
        .iter()
        .filter(|inst| match check_lemma_cliquesecond(&inst.graph) {
            Ok(r) => {
                pairs += r.pairs_checked;
                !(r.holds() && r.pairs_checked == 2 * inst.graph.edge_count())
            }
            Err(_) => true,
        })
        .map(|inst| inst.id.clone())
        .collect();
    ok(
        failures.is_empty(),
        format!("{} instances, {pairs} (v,u) pairs, failures {failures:?}", corpus.len()),
    )
}

fn c07() -> Outcome {
    let mut rng = rng_from_seed(SEED);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=24);
        let period = rng.gen_range(4..=48);
        let arcs = rng.gen_range(1..=10);
        let rep = random_circular_rep(&mut rng, n, period, arcs).unwrap();
        let r = check_circular_bound(&rep).unwrap();
        let g = rep.realize();
        let adj = common::adjacency(&g);
        let max = (0..n).map(|v| common::square_degree(&adj, v)).max().unwrap_or(0);
        let omega = common::clique_number(&g);
        if !(r.holds && r.max_square_degree == max && r.omega == omega && max + 4 <= 4 * omega.max(1)) {
            bad += 1;
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(2..=24);
        let strip = random_strip(&mut rng, n).unwrap();
        let r = check_strip_bound(&strip).unwrap();
        let adj = common::adjacency(&strip.graph);
        let max = strip
            .graph
            .neighbors(strip.a)
            .iter()
            .map(|&v| common::square_degree(&adj, v))
            .max()
            .unwrap_or(0);
        let omega = common::clique_number(&strip.graph);
        if !(r.holds && r.max_square_degree == max && max + 3 <= 3 * omega.max(1)) {
            bad += 1;
        }
    }
    let c5 = IntervalRep::circular(5, (0..5).collect(), (0..5).map(|i| (i, (i + 1) % 5)).collect()).unwrap();
    let c5r = check_circular_bound(&c5).unwrap();
    let p4 = Strip::from_rep(IntervalRep::linear(vec![0, 1, 2, 3], vec![(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
    let p4r = check_strip_bound(&p4).unwrap();
    let tight = (c5r.max_square_degree, c5r.bound, p4r.max_square_degree, p4r.bound) == (4, 4, 3, 3);
    ok(
        bad == 0 && tight,
        format!("2000 representations, {bad} violations; C5 4 = 4·2−4, P4 strip 3 = 3·2−3: {tight}"),
    )
}

fn c08() -> Outcome {
    let graphs = regular_multigraphs(500, 2..=10, 3, SEED).unwrap();
    let (mut edges, mut bad) = (0, 0);
    for (_, f) in &graphs {
        let ctx = SparsityContext::new(f);
        for e in 0..ctx.edge_count() {
            edges += 1;
            match ctx.degree_identity(e) {
                Ok((formula, direct)) if formula == direct && direct == common::line_square_degree(f, e) => {}
                _ => bad += 1,
            }
        }
    }
    ok(
        bad == 0,
        format!("{} multigraphs, {edges} edges, {bad} mismatches", graphs.len()),
    )
}

fn c09() -> Outcome {
    let cfg = Config::default();
    let graphs = regular_multigraphs(100, 8..=14, 16, SEED).unwrap();
    let (eps1, eps2) = (Q::new(1, 30), Q::new(1, 9));
    let mut per_delta: BTreeMap<usize, (Q, [usize; 3])> = BTreeMap::new();
    let (mut edges, mut bad) = (0, 0);
    for (delta, f) in &graphs {
        let ctx = SparsityContext::new(f);
        let d = Q::from_integer(*delta as i128);
        for e in 0..ctx.edge_count() {
            edges += 1;
            let r = ctx.report(e, &cfg).unwrap();
            let one = Q::from_integer(r.deficiency as i128) > eps1 * d * d;
            let two = Q::from_integer(r.second_ring_sum as i128) > eps2 * d * d * d;
            let expected = if one {
                SparsityCase::One
            } else if two {
                SparsityCase::Two
            } else {
                SparsityCase::Three
            };
            let direct = common::line_square_degree(f, e);
            let consistent = r.case == expected
                && r.square_degree == direct
                && r.deficiency + direct == 2 * delta * (delta - 1)
                && !r.checks.is_empty();
            if !(consistent && r.all_pass()) {
                bad += 1;
            }
            let slot = per_delta.entry(*delta).or_insert((Q::from_integer(0), [0; 3]));
            slot.0 = slot.0.max(r.ratio.unwrap());
            slot.1[r.case.number() as usize - 1] += 1;
        }
    }
    let table: Vec<String> = per_delta
        .iter()
        .map(|(d, (ratio, cases))| {
            format!(
                "Δ={d}: max ratio {:.4} cases {cases:?}",
                *ratio.numer() as f64 / *ratio.denom() as f64
            )
        })
        .collect();
    ok(
        bad == 0,
        format!(
            "{} multigraphs, {edges} edges, {bad} failing; 1−1/36 ≈ 0.9722; {}",
            graphs.len(),
            table.join("; ")
        ),
    )
}

fn c10() -> Outcome {
    let all = enumerate_small_multigraphs(6, 4, 3).unwrap();
    let mut bad = 0;
    let mut equality = Vec::new();
    let mut branches: BTreeMap<CgttBranch, usize> = BTreeMap::new();
    for f in &all {
        match check_cgtt(f) {
            Ok(v) => {
                *branches.entry(v.branch).or_default() += 1;
                if !v.holds {
                    bad += 1;
                }
                if v.equality {
                    equality.push((v.branch, v.delta, f.n()));
                }
            }
            Err(_) => bad += 1,
        }
    }
    equality.sort();
    let expected = vec![
        (CgttBranch::Bipartite, 2, 4),
        (CgttBranch::Bipartite, 3, 6),
        (CgttBranch::TriangleFree, 2, 5),
    ];
    ok(
        bad == 0 && equality == expected,
        format!(
            "{} multigraphs, {bad} failing, branches {branches:?}, equality cases (branch, Δ, n) {equality:?}",
            all.len()
        ),
    )
}

fn c11() -> Outcome {
    let cfg = Config::default();
    let rows = cfg.feasibility_rows();
    let e1 = Q::new(1, 30);
    let first = -Q::from_integer(2) * e1 + e1 * e1 / Q::from_integer(2);
    let second = Q::from_integer(1) - e1 - Q::new(1, 9) / (Q::from_integer(2) * (Q::from_integer(1) - Q::new(2, 3)));
    let pass = cfg.validate().is_ok()
        && rows.iter().all(|r| r.pass())
        && rows[0].lhs == first
        && rows[1].lhs == second
        && first < Q::from_integer(0)
        && second > Q::from_integer(0);
    ok(pass, format!("−2ε₁+ε₁²/2 = {first}, 1−ε₁−ε₂/(2(1−ε₃)) = {second}"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 11] = [
        (1, "f(Δ) table", 1, c01),
        (2, "extremal squares", 10, c02),
        (3, "trivial greedy bound", 60, c03),
        (4, "selector realization", 120, c04),
        (5, "main procedure", 120, c05),
        (6, "clique in second neighbourhood", 60, c06),
        (7, "interval bounds", 60, c07),
        (8, "degree identity", 60, c08),
        (9, "sparsity cases", 300, c09),
        (10, "small multigraph extremal counts", 600, c10),
        (11, "config feasibility", 1, c11),
    ];
    let mut unexpected = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let pass = out.pass && in_time;
        println!(
            "criterion {id:>2} {} {name} [{:.2}s / {budget}s]: {}{}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            out.detail,
            if !pass && out.accounted {
                " (known failure: no clique substitution of C5 fails Krausz recognition)"
            } else {
                ""
            }
        );
        if !pass && !(out.accounted && in_time) {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
