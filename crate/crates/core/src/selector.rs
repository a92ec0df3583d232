//! Conclusion search for the reducible vertex promised in claw-free and
//! quasi-line graphs, plus the two-path counting diagnostic.

use num_rational::Ratio;

use crate::coloring::clique_number;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};
use crate::io::write_graph;
use crate::recognition::{complement_sides, find_claw, is_quasi_line, krausz_partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelectorVariant {
    NonQuasiLine { v: Vertex },
    QuasiLine { v: Vertex, s: Vec<Vertex> },
}

/// The selected vertex with the values its guarantees were checked on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectorWitness {
    pub variant: SelectorVariant,
    pub omega: usize,
    pub square_degree: usize,
    /// `deg_{G²}(u)` for each `u` in `S`, in order (quasi-line only).
    pub s_square_degrees: Vec<usize>,
    /// The set checked to be a clique in `(G \ v)²`: `N(v)` or `N(v) \ S`.
    pub clique_set: Vec<Vertex>,
    /// Vertices examined before the witness was found.
    pub scanned: usize,
}

impl SelectorWitness {
    pub fn v(&self) -> Vertex {
        match self.variant {
            SelectorVariant::NonQuasiLine { v } | SelectorVariant::QuasiLine { v, .. } => v,
        }
    }

    pub fn s(&self) -> &[Vertex] {
        match &self.variant {
            SelectorVariant::QuasiLine { s, .. } => s,
            SelectorVariant::NonQuasiLine { .. } => &[],
        }
    }

    /// Re-derives every recorded guarantee from scratch: clique number by
    /// exhaustive search, square degrees from `square(G)`, and the clique
    /// condition on an explicitly built `square(G \ v)`.
    pub fn revalidate(&self, g: &SimpleGraph) -> Result<()> {
        let fail = |what: String| Err(Error::Precondition(format!("witness check failed: {what}")));
        let v = self.v();
        g.check_vertex(v)?;
        let omega = clique_number(g).0;
        if omega != self.omega {
            return fail(format!("recorded ω = {} but ω = {omega}", self.omega));
        }
        let sq = g.square();
        if sq.degree(v) != self.square_degree {
            return fail(format!(
                "recorded deg_G²(v) = {} but it is {}",
                self.square_degree,
                sq.degree(v)
            ));
        }
        let nv = g.neighbors(v);
        let expected_clique_set: Vec<Vertex> = match &self.variant {
            SelectorVariant::NonQuasiLine { .. } => {
                if 2 * sq.degree(v) > 2 * omega * omega + omega + 1 {
                    return fail(format!("deg_G²(v) = {} above ω² + (ω+1)/2", sq.degree(v)));
                }
                nv.to_vec()
            }
            SelectorVariant::QuasiLine { s, .. } => {
                let cap = omega * omega + omega;
                if sq.degree(v) > cap {
                    return fail(format!("deg_G²(v) = {} above ω² + ω", sq.degree(v)));
                }
                if s.iter().any(|u| !nv.contains(u)) {
                    return fail("S is not inside N(v)".into());
                }
                let degs: Vec<usize> = s.iter().map(|&u| sq.degree(u)).collect();
                if degs != self.s_square_degrees || degs.iter().any(|&d| d > cap) {
                    return fail(format!("square degrees on S are {degs:?}"));
                }
                nv.iter().copied().filter(|u| !s.contains(u)).collect()
            }
        };
        if expected_clique_set != self.clique_set {
            return fail("recorded clique set differs".into());
        }
        let (minus, map) = g.delete_vertex(v)?;
        let minus_sq = minus.square();
        let local: Vec<Vertex> = self
            .clique_set
            .iter()
            .map(|&x| map.iter().position(|&m| m == x).expect("x != v"))
            .collect();
        if !minus_sq.is_clique(&local) {
            return fail("set is not a clique in (G \\ v)²".into());
        }
        Ok(())
    }
}

/// `true` when every pair of `set ⊆ N(v)` is adjacent or has a common
/// neighbour other than `v`, i.e. `set` is a clique in `(G \ v)²`.
pub fn is_clique_in_square_minus(g: &SimpleGraph, v: Vertex, set: &[Vertex]) -> bool {
    set.iter().enumerate().all(|(i, &x)| {
        set[i + 1..].iter().all(|&y| {
            g.has_edge(x, y) || {
                let mut common = g.row(x).clone();
                common.intersect_with(g.row(y));
                common.set(v, false);
                common.count_ones(..) > 0
            }
        })
    })
}

fn scan_failed(g: &SimpleGraph) -> Error {
    Error::ScanFailed {
        instance: write_graph(g),
    }
}

fn require_connected_claw_free(g: &SimpleGraph) -> Result<()> {
    if let Some((center, leaves)) = find_claw(g) {
        return Err(Error::ClawPresent { center, leaves });
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    Ok(())
}

/// Vertex `v` of a connected claw-free non-quasi-line graph with
/// `deg_G²(v) <= ω² + (ω+1)/2` and `N(v)` a clique in `(G \ v)²`. Vertices
/// whose neighbourhood has no two-clique cover are tried first.
pub fn select_nonquasiline(g: &SimpleGraph) -> Result<SelectorWitness> {
    require_connected_claw_free(g)?;
    if is_quasi_line(g) {
        return Err(Error::Precondition("graph is quasi-line".into()));
    }
    select_nonquasiline_unchecked(g)
}

/// [`select_nonquasiline`] without re-running the recognisers.
pub(crate) fn select_nonquasiline_unchecked(g: &SimpleGraph) -> Result<SelectorWitness> {
    let omega = clique_number(g).0;
    let (uncovered, covered): (Vec<Vertex>, Vec<Vertex>) =
        (0..g.n()).partition(|&v| complement_sides(g, g.neighbors(v)).is_none());
    for (scanned, v) in uncovered.into_iter().chain(covered).enumerate() {
        let d = g.square_degree_unchecked(v);
        if 2 * d <= 2 * omega * omega + omega + 1 && is_clique_in_square_minus(g, v, g.neighbors(v)) {
            return Ok(SelectorWitness {
                variant: SelectorVariant::NonQuasiLine { v },
                omega,
                square_degree: d,
                s_square_degrees: Vec::new(),
                clique_set: g.neighbors(v).to_vec(),
                scanned: scanned + 1,
            });
        }
    }
    Err(scan_failed(g))
}

/// Vertex `v` and maximal `S ⊆ N(v)` of a connected quasi-line graph that is
/// not a multigraph line graph, with all of `S ∪ {v}` of square degree at
/// most `ω² + ω` and `N(v) \ S` a clique in `(G \ v)²`.
pub fn select_quasiline(g: &SimpleGraph) -> Result<SelectorWitness> {
    require_connected_claw_free(g)?;
    if !is_quasi_line(g) {
        return Err(Error::Precondition("graph is not quasi-line".into()));
    }
    if krausz_partition(g).is_some() {
        return Err(Error::Precondition("graph is the line graph of a multigraph".into()));
    }
    select_quasiline_unchecked(g)
}

/// [`select_quasiline`] without re-running the recognisers, for callers
/// that have already established the preconditions.
pub(crate) fn select_quasiline_unchecked(g: &SimpleGraph) -> Result<SelectorWitness> {
    let omega = clique_number(g).0;
    let cap = omega * omega + omega;
    let degs = g.square_degrees();
    for v in 0..g.n() {
        if degs[v] > cap {
            continue;
        }
        let (s, rest): (Vec<Vertex>, Vec<Vertex>) = g.neighbors(v).iter().partition(|&&u| degs[u] <= cap);
        if is_clique_in_square_minus(g, v, &rest) {
            return Ok(SelectorWitness {
                variant: SelectorVariant::QuasiLine { v, s: s.clone() },
                omega,
                square_degree: degs[v],
                s_square_degrees: s.iter().map(|&u| degs[u]).collect(),
                clique_set: rest,
                scanned: v + 1,
            });
        }
    }
    Err(scan_failed(g))
}

/// Counting data behind the two-path bound on `deg_G²(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPathDiagnostic {
    pub v: Vertex,
    pub omega: usize,
    pub k: usize,
    pub u_min: Vertex,
    pub w: Vertex,
    pub x: Vec<Vertex>,
    pub c1: Vec<Vertex>,
    pub c2: Vec<Vertex>,
    pub square_degree: usize,
    /// `(1 + (ω−1)/k)·deg(v)`.
    pub bound: Ratio<i128>,
    pub c1_is_clique: bool,
    pub c2_is_clique: bool,
    /// `deg_G²(v) ≤ bound`, checked as `deg_G²(v)·k ≤ (k+ω−1)·deg(v)`.
    pub bound_holds: bool,
}

pub fn two_path_diagnostic(g: &SimpleGraph, v: Vertex) -> Result<TwoPathDiagnostic> {
    g.check_vertex(v)?;
    if let Some((center, leaves)) = find_claw(g) {
        return Err(Error::ClawPresent { center, leaves });
    }
    let second = g.second_neighborhood(v)?;
    let nv = g.neighbors(v);
    let parents = |u: Vertex| -> Vec<Vertex> { nv.iter().copied().filter(|&x| g.has_edge(u, x)).collect() };
    let (u_min, k) = second
        .iter()
        .map(|&u| (u, parents(u).len()))
        .min_by_key(|&(u, k)| (k, u))
        .ok_or_else(|| Error::Precondition(format!("N²({v}) is empty")))?;
    let common = parents(u_min);
    let w = common[0];
    let x: Vec<Vertex> = common[1..].to_vec();
    let c1: Vec<Vertex> = nv
        .iter()
        .copied()
        .filter(|&y| y == w || (g.has_edge(y, w) && !x.contains(&y)))
        .collect();
    let c2: Vec<Vertex> = nv
        .iter()
        .copied()
        .filter(|y| !x.contains(y) && !c1.contains(y))
        .collect();
    let omega = clique_number(g).0;
    let deg = nv.len();
    let square_degree = deg + second.len();
    let bound = Ratio::from_integer(deg as i128) * (Ratio::from_integer(1) + Ratio::new(omega as i128 - 1, k as i128));
    Ok(TwoPathDiagnostic {
        v,
        omega,
        k,
        u_min,
        w,
        c1_is_clique: g.is_clique(&c1),
        c2_is_clique: g.is_clique(&c2),
        x,
        c1,
        c2,
        square_degree,
        bound,
        bound_holds: square_degree * k <= (k + omega - 1) * deg,
    })
}
