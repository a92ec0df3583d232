use crate::coloring::{chromatic_exact, clique_number, Budget};
use crate::error::{Error, Result};
use crate::generators::{c5_blowup, c5_blowup_bags, f_of_delta};
use crate::graph::{SimpleGraph, Vertex};
use crate::recognition::find_claw;
use crate::verifier::report::{q, CheckRow, Relation};

fn require_claw_free(g: &SimpleGraph) -> Result<()> {
    match find_claw(g) {
        Some((center, leaves)) => Err(Error::ClawPresent { center, leaves }),
        None => Ok(()),
    }
}

/// `5ω²/4` for even `ω`, `(5ω² − 2ω + 1)/4` for odd `ω`.
pub fn conjectured_bound(omega: usize) -> usize {
    f_of_delta(omega)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub omega: usize,
    pub chi_square: usize,
    pub bound: usize,
    pub within_bound: bool,
    pub square_complete: bool,
    /// `|V| <= bound` when the square is complete and `ω >= 6`.
    pub diameter_two: Option<bool>,
}

pub fn check_conjecture_and_diameter2(g: &SimpleGraph, budget: Budget) -> Result<ConjectureReport> {
    require_claw_free(g)?;
    let omega = clique_number(g).0;
    let sq = g.square();
    let chi_square = chromatic_exact(&sq, None, budget)?.colors_used;
    let bound = conjectured_bound(omega);
    let n = g.n();
    let square_complete = sq.edge_count() == n * n.saturating_sub(1) / 2;
    let diameter_two = (square_complete && omega >= 6).then_some(n <= bound);
    Ok(ConjectureReport {
        omega,
        chi_square,
        bound,
        within_bound: chi_square <= bound,
        square_complete,
        diameter_two,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSecondReport {
    pub omega: usize,
    pub pairs_checked: usize,
    pub max_size: usize,
    /// First `(v, u)` where `N(u) ∩ N²(v)` is not a clique or exceeds
    /// `ω − 1`.
    pub violation: Option<(Vertex, Vertex)>,
}

impl CliqueSecondReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// For every `v` and `u ∈ N(v)`: `N(u) ∩ N²(v)` is a clique of size at most
/// `ω − 1`, where `N²(v)` is the set at distance exactly two.
pub fn check_lemma_cliquesecond(g: &SimpleGraph) -> Result<CliqueSecondReport> {
    require_claw_free(g)?;
    let omega = clique_number(g).0;
    let mut report = CliqueSecondReport {
        omega,
        pairs_checked: 0,
        max_size: 0,
        violation: None,
    };
    for v in 0..g.n() {
        let dist = g.distances_from(v);
        for &u in g.neighbors(v) {
            let set: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| dist[w] == Some(2)).collect();
            report.pairs_checked += 1;
            report.max_size = report.max_size.max(set.len());
            if report.violation.is_none() && (!g.is_clique(&set) || set.len() + 1 > omega) {
                report.violation = Some((v, u));
            }
        }
    }
    Ok(report)
}

/// `|E(C5(Δ))| = f(Δ)` on built graphs for `Δ ∈ built`, and the bag-product
/// count `Σ bagᵢ·bagᵢ₊₁` against `f(Δ)` for `Δ ∈ closed`.
pub fn f_table_rows(
    built: std::ops::RangeInclusive<usize>,
    closed: std::ops::RangeInclusive<usize>,
) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for d in built {
        let edges = c5_blowup(d)?.edge_count();
        rows.push(CheckRow::new(
            format!("c5_blowup_{d}"),
            "f_edge_count",
            q(edges as i128),
            Relation::Eq,
            q(f_of_delta(d) as i128),
        ));
    }
    for d in closed {
        let bags = c5_blowup_bags(d)?;
        let product: usize = (0..5).map(|i| bags[i] * bags[(i + 1) % 5]).sum();
        rows.push(CheckRow::new(
            format!("c5_bags_{d}"),
            "f_closed_form",
            q(product as i128),
            Relation::Eq,
            q(f_of_delta(d) as i128),
        ));
    }
    Ok(rows)
}
