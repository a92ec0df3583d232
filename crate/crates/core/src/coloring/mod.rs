//! Colouring engines for squares: maximum clique, exact chromatic number,
//! the trivial greedy bound, the recursive reduction procedure and strong
//! edge colouring.

mod clique;
mod exact;
mod greedy;
mod main_procedure;
mod strong;

use std::fmt;

pub use clique::clique_number;
pub use exact::{chromatic_exact, Budget};
pub use greedy::{dsatur_greedy, first_free_color, greedy_in_order, smallest_last_order};
pub use main_procedure::{main_square_coloring, BaseEngine, MainOutcome, RecolorCheck, StepCase, TraceStep};
pub use strong::{strong_edge_coloring, StrongMode};

use crate::error::{Error, Result};
use crate::graph::{Coloring, SimpleGraph, Vertex};
use crate::recognition::{find_claw, is_quasi_line};
use crate::selector::select_nonquasiline_unchecked;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exact,
    GreedyTrivial,
    MainProcedure,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::GreedyTrivial => "greedy_trivial",
            Method::MainProcedure => "main_procedure",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub coloring: Coloring,
    pub colors_used: usize,
    pub method: Method,
    /// Number of colours this run is guaranteed not to exceed.
    pub bound_certificate: usize,
}

/// `Ok(None)` when no edge of `h` is monochromatic, `Ok(Some((u, v)))` for
/// the first offending edge. Partial colourings are an error.
pub fn verify_coloring(h: &SimpleGraph, coloring: &Coloring) -> Result<Option<(Vertex, Vertex)>> {
    if coloring.len() != h.n() {
        return Err(Error::InvalidParameters(format!(
            "colouring covers {} vertices, graph has {}",
            coloring.len(),
            h.n()
        )));
    }
    if let Some(v) = (0..h.n()).find(|&v| coloring.get(v).is_none()) {
        return Err(Error::PartialColoring(v));
    }
    Ok(h.edges().find(|&(u, v)| coloring.get(u) == coloring.get(v)))
}

/// `2ω² − 2ω + 1`, the colour bound for squares of claw-free graphs.
pub fn trivial_bound(omega: usize) -> usize {
    if omega == 0 {
        0
    } else {
        2 * omega * omega - 2 * omega + 1
    }
}

/// Colours `square(G)` of a claw-free `G` with at most `2ω² − 2ω + 1`
/// colours. Quasi-line components are coloured greedily (their squares have
/// maximum degree at most `2ω² − 2ω`); otherwise the selected vertex is
/// removed, the rest coloured recursively and the vertex coloured last.
pub fn greedy_trivial_square_coloring(g: &SimpleGraph) -> Result<ColoringResult> {
    if let Some((center, leaves)) = find_claw(g) {
        return Err(Error::ClawPresent { center, leaves });
    }
    let bound = trivial_bound(clique_number(g).0);
    let mut coloring = Coloring::uncolored(g.n());
    let labels: Vec<Vertex> = (0..g.n()).collect();
    trivial_rec(g, &labels, bound, &mut coloring)?;
    let colors_used = coloring.colors_used();
    Ok(ColoringResult {
        coloring,
        colors_used,
        method: Method::GreedyTrivial,
        bound_certificate: bound,
    })
}

fn trivial_rec(g: &SimpleGraph, labels: &[Vertex], palette: usize, out: &mut Coloring) -> Result<()> {
    for comp in g.components() {
        let (h, map) = g.induced(&comp)?;
        let comp_labels: Vec<Vertex> = map.iter().map(|&x| labels[x]).collect();
        let local = trivial_component(&h, palette)?;
        for (i, &orig) in comp_labels.iter().enumerate() {
            out.set(orig, local.get(i).expect("component coloured"));
        }
    }
    Ok(())
}

fn trivial_component(h: &SimpleGraph, palette: usize) -> Result<Coloring> {
    let sq = h.square();
    if is_quasi_line(h) {
        let c = greedy_in_order(&sq, &smallest_last_order(&sq));
        if let Some(v) = (0..h.n()).find(|&v| c.get(v).unwrap() >= palette) {
            return Err(Error::NoFreeColor { vertex: v, palette });
        }
        return Ok(c);
    }
    let v = select_nonquasiline_unchecked(h)?.v();
    let (minus, map) = h.delete_vertex(v)?;
    let mut coloring = Coloring::uncolored(h.n());
    trivial_rec(&minus, &map, palette, &mut coloring)?;
    let c = first_free_color(&sq, &coloring, v);
    if c >= palette {
        return Err(Error::NoFreeColor { vertex: v, palette });
    }
    coloring.set(v, c);
    Ok(coloring)
}
