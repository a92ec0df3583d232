//! Edge counts of multigraphs whose underlying graph is connected and has
//! no induced `2K₂`, against `Δ²` and `f(Δ)`, with an exhaustive sweep over
//! small multigraphs.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::coloring::clique_number;
use crate::error::{Error, Result};
use crate::generators::{c5_blowup, complete_bipartite, f_of_delta};
use crate::graph::{Multigraph, SimpleGraph, Vertex};

/// An induced `2K₂`: two disjoint edges with no edge between them.
pub fn find_induced_2k2(g: &SimpleGraph) -> Option<((Vertex, Vertex), (Vertex, Vertex))> {
    let edges: Vec<_> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if [c, d].iter().any(|&x| x == a || x == b) {
                continue;
            }
            if [(a, c), (a, d), (b, c), (b, d)].iter().all(|&(x, y)| !g.has_edge(x, y)) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &SimpleGraph) -> bool {
    find_induced_2k2(g).is_none()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CgttBranch {
    /// (i) bipartite: `|E| <= Δ²`, equality iff `K_{Δ,Δ}`.
    Bipartite,
    /// (ii) `ω = 2`, not bipartite: `|E| <= f(Δ)`, equality iff `C5(Δ)`.
    TriangleFree,
    /// (iii) `ω >= 5`.
    OmegaAtLeast5,
    /// (iv) `ω = 4`.
    Omega4,
    /// (v) `ω = 3`.
    Omega3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgttVerdict {
    pub branch: CgttBranch,
    /// `max(Δ(F), 2)`.
    pub delta: usize,
    pub omega: usize,
    pub edges: usize,
    pub bound: usize,
    pub equality: bool,
    /// Whether `F` is isomorphic to the branch's extremal graph; only
    /// computed for branches (i) and (ii).
    pub extremal: Option<bool>,
    pub holds: bool,
}

/// Classifies `F` and checks its branch. The precondition failure (not
/// connected, or an induced `2K₂`) is an error the caller may skip.
pub fn check_cgtt(f: &Multigraph) -> Result<CgttVerdict> {
    let f0 = f.underlying_simple();
    if !f0.is_connected() {
        return Err(Error::Precondition("underlying graph is not connected".into()));
    }
    if let Some((e1, e2)) = find_induced_2k2(&f0) {
        return Err(Error::Precondition(format!("induced 2K2 on {e1:?} and {e2:?}")));
    }
    let delta = f.max_degree().max(2);
    let omega = clique_number(&f0).0;
    let edges = f.edge_count();
    let branch = if f0.is_bipartite() {
        CgttBranch::Bipartite
    } else {
        match omega {
            2 => CgttBranch::TriangleFree,
            3 => CgttBranch::Omega3,
            4 => CgttBranch::Omega4,
            _ => CgttBranch::OmegaAtLeast5,
        }
    };
    let (bound, extremal) = match branch {
        CgttBranch::Bipartite => {
            let k = complete_bipartite(delta, delta)?;
            (delta * delta, Some(multigraphs_isomorphic(f, &k)))
        }
        CgttBranch::TriangleFree => (f_of_delta(delta), Some(multigraphs_isomorphic(f, &c5_blowup(delta)?))),
        _ => (f_of_delta(delta), None),
    };
    let equality = edges == bound;
    let holds = match extremal {
        Some(iso) => edges <= bound && equality == iso,
        None => edges < bound,
    };
    Ok(CgttVerdict {
        branch,
        delta,
        omega,
        edges,
        bound,
        equality,
        extremal,
        holds,
    })
}

/// Backtracking isomorphism test matching vertices of equal degree and
/// consistent multiplicities.
pub fn multigraphs_isomorphic(f: &Multigraph, g: &Multigraph) -> bool {
    if f.n() != g.n() || f.edge_count() != g.edge_count() || f.pair_count() != g.pair_count() {
        return false;
    }
    let (df, dg) = (f.degrees(), g.degrees());
    if df.iter().sorted().ne(dg.iter().sorted()) {
        return false;
    }
    let mut map = vec![usize::MAX; f.n()];
    let mut used = vec![false; g.n()];
    extend(f, g, &df, &dg, 0, &mut map, &mut used)
}

fn extend(
    f: &Multigraph,
    g: &Multigraph,
    df: &[usize],
    dg: &[usize],
    v: Vertex,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == f.n() {
        return true;
    }
    for w in 0..g.n() {
        if used[w] || dg[w] != df[v] {
            continue;
        }
        if (0..v).any(|u| f.multiplicity(u, v) != g.multiplicity(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(f, g, df, dg, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Canonical code of a multigraph on at most 6 vertices with
/// multiplicities below 16: the least upper-triangle encoding over all
/// relabellings.
fn canonical_code(n: usize, mult: &[Vec<usize>]) -> u64 {
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut code = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    code = code * 16 + mult[p[i]][p[j]] as u64;
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}

/// Every connected multigraph on `2..=max_n` vertices, up to isomorphism,
/// with maximum degree at most `max_degree`, multiplicities at most
/// `max_mult` and a `2K₂`-free underlying graph.
pub fn enumerate_small_multigraphs(max_n: usize, max_degree: usize, max_mult: usize) -> Result<Vec<Multigraph>> {
    if max_n > 6 || max_mult >= 16 {
        return Err(Error::InvalidParameters(
            "enumeration supports n <= 6 and multiplicity < 16".into(),
        ));
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs: Vec<(Vertex, Vertex)> = (0..n).tuple_combinations().collect();
        let mut skeletons = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let chosen: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = SimpleGraph::from_edges(n, chosen.iter().copied())?;
            if g.max_degree() > max_degree || !g.is_connected() || !is_2k2_free(&g) {
                continue;
            }
            let mut m = vec![vec![0; n]; n];
            for &(u, v) in &chosen {
                m[u][v] = 1;
                m[v][u] = 1;
            }
            if skeletons.insert(canonical_code(n, &m)) {
                let mut seen = BTreeSet::new();
                let mut deg = vec![0; n];
                assign(
                    n, &chosen, 0, &mut m, &mut deg, max_degree, max_mult, &mut seen, &mut out,
                )?;
            }
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    n: usize,
    pairs: &[(Vertex, Vertex)],
    i: usize,
    m: &mut Vec<Vec<usize>>,
    deg: &mut Vec<usize>,
    max_degree: usize,
    max_mult: usize,
    seen: &mut BTreeSet<u64>,
    out: &mut Vec<Multigraph>,
) -> Result<()> {
    if i == pairs.len() {
        if seen.insert(canonical_code(n, m)) {
            out.push(Multigraph::from_multiplicities(
                n,
                pairs.iter().map(|&(u, v)| (u, v, m[u][v])),
            )?);
        }
        return Ok(());
    }
    let (u, v) = pairs[i];
    for k in 1..=max_mult {
        if deg[u] + k > max_degree || deg[v] + k > max_degree {
            break;
        }
        m[u][v] = k;
        m[v][u] = k;
        deg[u] += k;
        deg[v] += k;
        assign(n, pairs, i + 1, m, deg, max_degree, max_mult, seen, out)?;
        deg[u] -= k;
        deg[v] -= k;
    }
    m[u][v] = 1;
    m[v][u] = 1;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_matchings() {
        assert!(is_2k2_free(&SimpleGraph::path(4)));
        assert!(is_2k2_free(&SimpleGraph::cycle(5)));
        let two = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_induced_2k2(&two), Some(((0, 1), (2, 3))));
        assert!(!is_2k2_free(&SimpleGraph::cycle(6)));
    }

    #[test]
    fn branch_examples() {
        let v = check_cgtt(&complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(
            (v.branch, v.edges, v.bound, v.equality, v.extremal, v.holds),
            (CgttBranch::Bipartite, 9, 9, true, Some(true), true)
        );

        let v = check_cgtt(&c5_blowup(4).unwrap()).unwrap();
        assert_eq!(
            (v.branch, v.edges, v.equality, v.extremal),
            (CgttBranch::TriangleFree, 20, true, Some(true))
        );

        let doubled =
            Multigraph::from_multiplicities(5, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 1)]).unwrap();
        let v = check_cgtt(&doubled).unwrap();
        assert_eq!(
            (v.branch, v.delta, v.edges, v.bound, v.holds),
            (CgttBranch::TriangleFree, 3, 6, 10, true)
        );

        let k4 = Multigraph::from_simple(&SimpleGraph::complete(4));
        assert_eq!(check_cgtt(&k4).unwrap().branch, CgttBranch::Omega4);
        assert!(check_cgtt(&Multigraph::from_simple(&SimpleGraph::cycle(6))).is_err());
    }

    #[test]
    fn isomorphism() {
        let a = c5_blowup(3).unwrap();
        let b = Multigraph::from_simple(
            &crate::generators::substitute(
                &SimpleGraph::cycle(5),
                &[1, 2, 2, 1, 1],
                crate::generators::BagMode::Stable,
            )
            .unwrap(),
        );
        assert!(multigraphs_isomorphic(&a, &b));
        let c = Multigraph::from_simple(
            &crate::generators::substitute(
                &SimpleGraph::cycle(5),
                &[2, 1, 2, 1, 1],
                crate::generators::BagMode::Stable,
            )
            .unwrap(),
        );
        assert!(!multigraphs_isomorphic(&a, &c));
    }

    #[test]
    fn small_enumeration() {
        // Connected 2K2-free graphs on 3 vertices: P3 and K3.
        let three: Vec<_> = enumerate_small_multigraphs(3, 2, 1)
            .unwrap()
            .into_iter()
            .filter(|f| f.n() == 3)
            .collect();
        assert_eq!(three.len(), 2);
        // Two vertices, Δ <= 4, multiplicity <= 3: one, two or three parallel edges.
        assert_eq!(enumerate_small_multigraphs(2, 4, 3).unwrap().len(), 3);
    }
}
