use crate::coloring::clique::clique_number;
use crate::coloring::greedy::dsatur_greedy;
use crate::coloring::{verify_coloring, ColoringResult, Method};
use crate::error::{Error, Result};
use crate::graph::{Coloring, SimpleGraph, Vertex};

/// Limits for the exact search. The vertex limit only applies once the
/// clique bound and the incumbent disagree; a graph whose clique number
/// meets its best known colouring is settled at any size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 60,
            max_nodes: 2_000_000,
        }
    }
}

/// Chromatic number with a witness, by DSATUR branch and bound seeded with
/// a maximum clique. `incumbent`, when proper and total, is used as the
/// initial upper bound.
pub fn chromatic_exact(h: &SimpleGraph, incumbent: Option<&Coloring>, budget: Budget) -> Result<ColoringResult> {
    let n = h.n();
    let (omega, clique) = clique_number(h);
    let mut best = dsatur_greedy(h);
    if let Some(inc) = incumbent {
        if inc.len() == n && matches!(verify_coloring(h, inc), Ok(None)) && inc.colors_used() < best.colors_used() {
            best = inc.clone();
        }
    }
    if best.colors_used() > omega {
        if n > budget.max_vertices {
            return Err(Error::BudgetExceeded(format!(
                "{n} vertices exceed the exact limit of {} (bounds {omega}..{})",
                budget.max_vertices,
                best.colors_used()
            )));
        }
        let mut search = Search::new(h, best.colors_used(), budget.max_nodes);
        for (c, &v) in clique.iter().enumerate() {
            search.assign(v, c);
        }
        search.used = omega;
        search.run(omega)?;
        if let Some(found) = search.best {
            best = Coloring::from_colors(found);
        }
    }
    let k = best.colors_used();
    Ok(ColoringResult {
        colors_used: k,
        coloring: best,
        method: Method::Exact,
        bound_certificate: k,
    })
}

struct Search<'a> {
    h: &'a SimpleGraph,
    colors: Vec<Option<usize>>,
    /// `forbid[v][c]`: coloured neighbours of `v` holding colour `c`.
    forbid: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    used: usize,
    upper: usize,
    best: Option<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> Search<'a> {
    fn new(h: &'a SimpleGraph, upper: usize, max_nodes: u64) -> Self {
        let n = h.n();
        Search {
            h,
            colors: vec![None; n],
            forbid: vec![vec![0; upper]; n],
            saturation: vec![0; n],
            used: 0,
            upper,
            best: None,
            nodes: 0,
            max_nodes,
        }
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.colors[v] = Some(c);
        for &w in self.h.neighbors(v) {
            if self.forbid[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.forbid[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: Vertex, c: usize) {
        self.colors[v] = None;
        for &w in self.h.neighbors(v) {
            self.forbid[w][c] -= 1;
            if self.forbid[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncoloured vertex of maximum saturation, then maximum degree, then
    /// lowest index.
    fn pick(&self) -> Option<Vertex> {
        (0..self.h.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.h.degree(v), std::cmp::Reverse(v)))
    }

    fn run(&mut self, lower: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded(format!(
                "more than {} search nodes",
                self.max_nodes
            )));
        }
        let Some(v) = self.pick() else {
            self.upper = self.used;
            self.best = Some(self.colors.iter().map(|c| c.unwrap()).collect());
            return Ok(());
        };
        // Colours stay below `upper - 1` so any completion beats the
        // incumbent, and never skip past the next unused colour.
        let mut c = 0;
        while c < (self.used + 1).min(self.upper - 1) {
            if self.forbid[v][c] == 0 {
                let opened = c == self.used;
                if opened {
                    self.used += 1;
                }
                self.assign(v, c);
                self.run(lower)?;
                self.unassign(v, c);
                if opened {
                    self.used -= 1;
                }
                if self.upper <= lower {
                    return Ok(());
                }
            }
            c += 1;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{c5_blowup, wheel};

    fn chi(h: &SimpleGraph) -> usize {
        chromatic_exact(h, None, Budget::default()).unwrap().colors_used
    }

    #[test]
    fn known_values() {
        assert_eq!(chi(&SimpleGraph::cycle(5).square()), 5);
        assert_eq!(chi(&SimpleGraph::cycle(5)), 3);
        assert_eq!(chi(&SimpleGraph::cycle(7)), 3);
        assert_eq!(chi(&SimpleGraph::empty(4)), 1);
        assert_eq!(chi(&SimpleGraph::empty(0)), 0);
        assert_eq!(chi(&wheel(5)), 4);
        assert_eq!(chi(&c5_blowup(2).unwrap().line_graph().graph.square()), 5);
        assert_eq!(chi(&c5_blowup(3).unwrap().line_graph().graph.square()), 10);
    }

    #[test]
    fn mycielski_grotzsch_needs_four() {
        // Triangle-free, so the clique bound (2) is far from the answer.
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, (i + 1) % 5));
            edges.push((5 + i, (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        let g = SimpleGraph::from_edges(11, edges).unwrap();
        let res = chromatic_exact(&g, None, Budget::default()).unwrap();
        assert_eq!(res.colors_used, 4);
        assert_eq!(verify_coloring(&g, &res.coloring), Ok(None));
    }

    #[test]
    fn budget_is_reported() {
        let g = SimpleGraph::cycle(61);
        assert!(matches!(
            chromatic_exact(&g, None, Budget::default()),
            Err(Error::BudgetExceeded(_))
        ));
        let tiny = Budget {
            max_vertices: 60,
            max_nodes: 1,
        };
        let mut edges = vec![];
        for i in 0..5 {
            edges.extend([
                (i, (i + 1) % 5),
                (5 + i, (i + 1) % 5),
                (5 + i, (i + 4) % 5),
                (5 + i, 10),
            ]);
        }
        let g = SimpleGraph::from_edges(11, edges).unwrap();
        assert!(matches!(chromatic_exact(&g, None, tiny), Err(Error::BudgetExceeded(_))));
    }
}
