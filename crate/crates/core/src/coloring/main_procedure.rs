//! The recursive square colouring: multigraph line graphs are coloured
//! directly, other quasi-line graphs lose the selected `v` and have `S`
//! recoloured, and non-quasi-line graphs lose the selected `v`.

use num_rational::Ratio;

use crate::coloring::exact::{chromatic_exact, Budget};
use crate::coloring::greedy::first_free_color;
use crate::coloring::{clique_number, greedy_trivial_square_coloring, trivial_bound, ColoringResult, Method};
use crate::error::{Error, Result};
use crate::graph::{Coloring, SimpleGraph, Vertex};
use crate::recognition::{find_claw, is_quasi_line, krausz_partition};
use crate::selector::{select_nonquasiline_unchecked, select_quasiline_unchecked};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseEngine {
    Exact,
    GreedyTrivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepCase {
    /// Case (a): the component is a multigraph line graph.
    LineGraph { engine: BaseEngine, colors: usize },
    /// Case (b): quasi-line, `v` removed and `S` recoloured.
    QuasiLine { v: Vertex, s: Vec<Vertex> },
    /// Case (c): not quasi-line, `v` removed.
    NonQuasiLine { v: Vertex },
}

/// One recursion step; vertex ids refer to the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub n: usize,
    pub omega: usize,
    pub case: StepCase,
}

/// Counting check at one recolouring of `u ∈ S`: with all of `S`
/// uncoloured, `available >= |K| − (ω² + ω) + |S| >= |S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecolorCheck {
    pub u: Vertex,
    pub available: usize,
    pub required: usize,
    pub s_len: usize,
}

impl RecolorCheck {
    pub fn holds(&self) -> bool {
        self.available >= self.required && self.required >= self.s_len
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainOutcome {
    pub result: ColoringResult,
    pub omega: usize,
    pub eps: Ratio<i64>,
    /// `|K| = 2ω² − 2ω + 1`, the palette every step must fit in.
    pub palette: usize,
    /// `⌊(2 − ε)ω²⌋`, reported for comparison.
    pub target: usize,
    pub trace: Vec<TraceStep>,
    pub recolor_checks: Vec<RecolorCheck>,
}

impl MainOutcome {
    pub fn within_target(&self) -> bool {
        self.result.colors_used <= self.target
    }
}

/// `⌊(2 − ε)ω²⌋`.
pub fn target_palette(omega: usize, eps: Ratio<i64>) -> usize {
    let w2 = Ratio::from_integer((omega * omega) as i64);
    ((Ratio::from_integer(2) - eps) * w2).floor().to_integer() as usize
}

struct Run {
    palette: usize,
    budget: Budget,
    trace: Vec<TraceStep>,
    checks: Vec<RecolorCheck>,
}

/// Colours `square(G)` of a claw-free `G` by the three-case recursion,
/// asserting at every step that the `2ω² − 2ω + 1` palette has room.
pub fn main_square_coloring(g: &SimpleGraph, eps: Ratio<i64>) -> Result<MainOutcome> {
    main_square_coloring_with_budget(g, eps, Budget::default())
}

pub fn main_square_coloring_with_budget(g: &SimpleGraph, eps: Ratio<i64>, budget: Budget) -> Result<MainOutcome> {
    if eps <= Ratio::from_integer(0) || eps > Ratio::new(3, 4) {
        return Err(Error::InvalidParameters(format!("ε = {eps} outside (0, 3/4]")));
    }
    if let Some((center, leaves)) = find_claw(g) {
        return Err(Error::ClawPresent { center, leaves });
    }
    let omega = clique_number(g).0;
    let palette = trivial_bound(omega);
    let mut run = Run {
        palette,
        budget,
        trace: Vec::new(),
        checks: Vec::new(),
    };
    let labels: Vec<Vertex> = (0..g.n()).collect();
    let coloring = run.graph(g, &labels, 0)?;
    let colors_used = coloring.colors_used();
    Ok(MainOutcome {
        result: ColoringResult {
            coloring,
            colors_used,
            method: Method::MainProcedure,
            bound_certificate: palette,
        },
        omega,
        eps,
        palette,
        target: target_palette(omega, eps),
        trace: run.trace,
        recolor_checks: run.checks,
    })
}

impl Run {
    /// Colours `square(g)` component by component; `labels` maps `g`'s
    /// vertices to the input graph for the trace.
    fn graph(&mut self, g: &SimpleGraph, labels: &[Vertex], depth: usize) -> Result<Coloring> {
        let mut out = Coloring::uncolored(g.n());
        for comp in g.components() {
            let (h, map) = g.induced(&comp)?;
            let comp_labels: Vec<Vertex> = map.iter().map(|&x| labels[x]).collect();
            let local = self.component(&h, &comp_labels, depth)?;
            for (i, &x) in map.iter().enumerate() {
                out.set(x, local.get(i).expect("component coloured"));
            }
        }
        Ok(out)
    }

    fn free_color(&self, sq: &SimpleGraph, coloring: &Coloring, v: Vertex, label: Vertex) -> Result<usize> {
        let c = first_free_color(sq, coloring, v);
        if c >= self.palette {
            return Err(Error::NoFreeColor {
                vertex: label,
                palette: self.palette,
            });
        }
        Ok(c)
    }

    fn component(&mut self, h: &SimpleGraph, labels: &[Vertex], depth: usize) -> Result<Coloring> {
        let omega = clique_number(h).0;
        let step = |case| TraceStep {
            depth,
            n: h.n(),
            omega,
            case,
        };

        if krausz_partition(h).is_some() {
            let sq = h.square();
            let (coloring, engine) = match chromatic_exact(&sq, None, self.budget) {
                Ok(res) => (res.coloring, BaseEngine::Exact),
                Err(Error::BudgetExceeded(_)) => {
                    (greedy_trivial_square_coloring(h)?.coloring, BaseEngine::GreedyTrivial)
                }
                Err(e) => return Err(e),
            };
            if let Some(v) = (0..h.n()).find(|&v| coloring.get(v).unwrap() >= self.palette) {
                return Err(Error::NoFreeColor {
                    vertex: labels[v],
                    palette: self.palette,
                });
            }
            self.trace.push(step(StepCase::LineGraph {
                engine,
                colors: coloring.colors_used(),
            }));
            return Ok(coloring);
        }

        let sq = h.square();
        if is_quasi_line(h) {
            let witness = select_quasiline_unchecked(h)?;
            let (v, s) = (witness.v(), witness.s().to_vec());
            self.trace.push(step(StepCase::QuasiLine {
                v: labels[v],
                s: s.iter().map(|&u| labels[u]).collect(),
            }));
            let mut coloring = self.without(h, labels, v, depth)?;
            for &u in &s {
                coloring.clear(u);
            }
            let required = (self.palette + s.len()).saturating_sub(omega * omega + omega);
            for &u in &s {
                let mut taken = vec![false; self.palette];
                for &w in sq.neighbors(u) {
                    if let Some(c) = coloring.get(w) {
                        taken[c] = true;
                    }
                }
                let check = RecolorCheck {
                    u: labels[u],
                    available: taken.iter().filter(|&&t| !t).count(),
                    required,
                    s_len: s.len(),
                };
                if !check.holds() {
                    return Err(Error::RecolorCount {
                        vertex: labels[u],
                        available: check.available,
                        required,
                    });
                }
                self.checks.push(check);
            }
            // Greedy recolouring in ascending order; earlier members of S
            // are coloured by then and so avoided.
            for &u in &s {
                let c = self.free_color(&sq, &coloring, u, labels[u])?;
                coloring.set(u, c);
            }
            let c = self.free_color(&sq, &coloring, v, labels[v])?;
            coloring.set(v, c);
            return Ok(coloring);
        }

        let v = select_nonquasiline_unchecked(h)?.v();
        self.trace.push(step(StepCase::NonQuasiLine { v: labels[v] }));
        let mut coloring = self.without(h, labels, v, depth)?;
        let c = self.free_color(&sq, &coloring, v, labels[v])?;
        coloring.set(v, c);
        Ok(coloring)
    }

    /// Colours `square(h \ v)` recursively and returns it on `h`'s indices
    /// with `v` uncoloured.
    fn without(&mut self, h: &SimpleGraph, labels: &[Vertex], v: Vertex, depth: usize) -> Result<Coloring> {
        let (minus, map) = h.delete_vertex(v)?;
        let minus_labels: Vec<Vertex> = map.iter().map(|&x| labels[x]).collect();
        let sub = self.graph(&minus, &minus_labels, depth + 1)?;
        let mut coloring = Coloring::uncolored(h.n());
        for (i, &x) in map.iter().enumerate() {
            coloring.set(x, sub.get(i).expect("coloured"));
        }
        Ok(coloring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::generators::{c5_blowup, substitute, wheel, BagMode};

    fn eps() -> Ratio<i64> {
        Ratio::new(1, 36)
    }

    #[test]
    fn wheel_takes_case_c() {
        let out = main_square_coloring(&wheel(5), eps()).unwrap();
        assert_eq!(out.result.colors_used, 6);
        assert_eq!(out.trace[0].case, StepCase::NonQuasiLine { v: 0 });
        assert!(matches!(out.trace[1].case, StepCase::LineGraph { .. }));
        assert_eq!(verify_coloring(&wheel(5).square(), &out.result.coloring), Ok(None));
    }

    #[test]
    fn blown_up_c5_is_a_line_graph_case() {
        let l = c5_blowup(2).unwrap().line_graph().graph;
        let out = main_square_coloring(&l, eps()).unwrap();
        assert_eq!(out.result.colors_used, 5);
        assert_eq!(out.trace.len(), 1);
        assert!(matches!(
            out.trace[0].case,
            StepCase::LineGraph {
                engine: BaseEngine::Exact,
                colors: 5
            }
        ));
    }

    #[test]
    fn clique_substituted_c5_is_also_a_line_graph_case() {
        let g = substitute(&SimpleGraph::cycle(5), &[2, 1, 1, 1, 1], BagMode::Clique).unwrap();
        let out = main_square_coloring(&g, eps()).unwrap();
        assert_eq!(out.result.colors_used, 6);
        assert!(matches!(out.trace[0].case, StepCase::LineGraph { .. }));
    }

    #[test]
    fn squared_cycle_takes_case_b() {
        let g = crate::generators::cycle_power(8, 2).unwrap();
        let out = main_square_coloring(&g, eps()).unwrap();
        assert!(matches!(out.trace[0].case, StepCase::QuasiLine { .. }));
        assert!(out.recolor_checks.iter().all(RecolorCheck::holds));
        assert_eq!(verify_coloring(&g.square(), &out.result.coloring), Ok(None));
    }

    #[test]
    fn parameter_checks() {
        assert!(main_square_coloring(&wheel(5), Ratio::new(4, 5)).is_err());
        assert!(main_square_coloring(&wheel(5), Ratio::from_integer(0)).is_err());
        assert_eq!(target_palette(6, Ratio::new(1, 36)), 71);
        assert_eq!(target_palette(2, Ratio::new(3, 4)), 5);
    }
}
