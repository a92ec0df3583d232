//! Recognition of line graphs of loopless multigraphs.
//!
//! Vertices with equal closed neighbourhoods are collapsed first. `G` is the
//! line graph of a multigraph iff its twin quotient is, and a twin-free line
//! graph has a simple root, so on the quotient we look for an edge-disjoint
//! clique cover with every vertex in at most two cliques. Fixing the two
//! cliques at one vertex forces all others, so the search is a loop over the
//! splits of a single neighbourhood.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::graph::{Multigraph, SimpleGraph, Vertex};
use crate::recognition::cover::{complement_components, complement_sides};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrauszCertificate {
    /// Sorted cliques, singleton paddings included.
    pub cliques: Vec<Vec<Vertex>>,
    /// The two cliques holding each vertex, ascending.
    pub membership: Vec<[usize; 2]>,
    /// One vertex per clique, one edge per vertex of `G`.
    pub root: Multigraph,
    /// Vertex of `line_graph(root)` that each vertex of `G` maps to.
    pub line_vertex: Vec<Vertex>,
}

impl KrauszCertificate {
    /// Checks the certificate against `g` from scratch: cliques are cliques,
    /// membership is exact, every edge is covered and `line_graph(root)`
    /// equals `g` under `line_vertex`.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let n = g.n();
        if self.membership.len() != n || self.line_vertex.len() != n {
            return false;
        }
        let mut counts = vec![Vec::new(); n];
        for (i, clique) in self.cliques.iter().enumerate() {
            if clique.iter().any(|&v| v >= n) || !g.is_clique(clique) {
                return false;
            }
            clique.iter().for_each(|&v| counts[v].push(i));
        }
        if counts
            .iter()
            .zip(&self.membership)
            .any(|(c, m)| c.as_slice() != m.as_slice())
        {
            return false;
        }
        if g.edges().any(|(u, v)| {
            let [a, b] = self.membership[u];
            !self.membership[v].contains(&a) && !self.membership[v].contains(&b)
        }) {
            return false;
        }
        let line = self.root.line_graph();
        if line.graph.n() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &x in &self.line_vertex {
            if x >= n || std::mem::replace(&mut hit[x], true) {
                return false;
            }
        }
        for v in 0..n {
            let label = line.labels[self.line_vertex[v]];
            let [a, b] = self.membership[v];
            if (label.u, label.v) != (a, b) {
                return false;
            }
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| g.has_edge(u, v) == line.graph.has_edge(self.line_vertex[u], self.line_vertex[v]))
        })
    }
}

/// Twin classes under equal closed neighbourhoods, ordered by least member.
fn twin_classes(g: &SimpleGraph) -> Vec<Vec<Vertex>> {
    let mut by_row: BTreeMap<Vec<usize>, Vec<Vertex>> = BTreeMap::new();
    for v in 0..g.n() {
        let mut closed = g.row(v).clone();
        closed.insert(v);
        by_row.entry(closed.ones().collect()).or_default().push(v);
    }
    let mut classes: Vec<Vec<Vertex>> = by_row.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    classes
}

/// Tries to extend the cliques `p` and `q` at `start` to a cover of the
/// component. Returns the cliques of size at least two.
fn propagate(
    h: &SimpleGraph,
    comp: &[Vertex],
    start: Vertex,
    p: Vec<Vertex>,
    q: Vec<Vertex>,
) -> Option<Vec<Vec<Vertex>>> {
    let n = h.n();
    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut queue: Vec<Vertex> = Vec::new();

    let add = |clique: Vec<Vertex>,
               cliques: &mut Vec<Vec<Vertex>>,
               member: &mut Vec<Vec<usize>>,
               queue: &mut Vec<Vertex>|
     -> bool {
        if !h.is_clique(&clique) {
            return false;
        }
        let mut set = FixedBitSet::with_capacity(n);
        clique.iter().for_each(|&v| set.insert(v));
        for &v in &clique {
            // Edge-disjointness: no other clique of v may meet this one
            // outside v.
            if member[v].len() >= 2
                || member[v]
                    .iter()
                    .any(|&c| cliques[c].iter().any(|&w| w != v && set.contains(w)))
            {
                return false;
            }
        }
        let id = cliques.len();
        for &v in &clique {
            member[v].push(id);
            if member[v].len() == 1 {
                queue.push(v);
            }
        }
        cliques.push(clique);
        true
    };

    for clique in [p, q] {
        if clique.len() >= 2 && !add(clique, &mut cliques, &mut member, &mut queue) {
            return None;
        }
    }
    if member[start].is_empty() {
        return None;
    }
    while let Some(x) = queue.pop() {
        match member[x].len() {
            1 => {
                let k = &cliques[member[x][0]];
                let rest: Vec<Vertex> = h.neighbors(x).iter().copied().filter(|w| !k.contains(w)).collect();
                if !rest.is_empty() {
                    let mut second = rest;
                    second.push(x);
                    second.sort_unstable();
                    if !add(second, &mut cliques, &mut member, &mut queue) {
                        return None;
                    }
                }
            }
            2 => {
                let covered = h
                    .neighbors(x)
                    .iter()
                    .all(|w| member[x].iter().any(|&c| cliques[c].contains(w)));
                if !covered {
                    return None;
                }
            }
            _ => return None,
        }
    }
    // Every vertex of a connected component is reached; recheck coverage.
    for &x in comp {
        if member[x].is_empty() && h.degree(x) > 0 {
            return None;
        }
        if !h
            .neighbors(x)
            .iter()
            .all(|w| member[x].iter().any(|&c| cliques[c].contains(w)))
        {
            return None;
        }
    }
    Some(cliques)
}

/// Cover of one component of a twin-free graph, cliques of size >= 2 only.
fn cover_component(h: &SimpleGraph, comp: &[Vertex]) -> Option<Vec<Vec<Vertex>>> {
    if comp.len() == 1 {
        return Some(Vec::new());
    }
    // Start where the neighbourhood split has the fewest choices.
    let mut best: Option<(usize, Vertex, Vec<Vec<usize>>, Vec<bool>)> = None;
    for &u in comp {
        let nbrs = h.neighbors(u);
        let sides = complement_sides(h, nbrs)?;
        let comps = complement_components(h, nbrs);
        if best.as_ref().is_none_or(|b| comps.len() < b.0) {
            best = Some((comps.len(), u, comps, sides));
        }
    }
    let (c, u, comps, sides) = best?;
    let nbrs = h.neighbors(u);
    if c > 24 {
        return None;
    }
    for mask in 0u32..(1u32 << (c - 1)) {
        let mut p = vec![u];
        let mut q = vec![u];
        for (ci, comp_idx) in comps.iter().enumerate() {
            let flip = ci > 0 && mask >> (ci - 1) & 1 == 1;
            for &i in comp_idx {
                if sides[i] ^ flip {
                    q.push(nbrs[i]);
                } else {
                    p.push(nbrs[i]);
                }
            }
        }
        p.sort_unstable();
        q.sort_unstable();
        if let Some(cover) = propagate(h, comp, u, p, q) {
            return Some(cover);
        }
    }
    None
}

/// A Krausz certificate for `g`, or `None` when `g` is not the line graph of
/// a loopless multigraph.
pub fn krausz_partition(g: &SimpleGraph) -> Option<KrauszCertificate> {
    let n = g.n();
    let classes = twin_classes(g);
    let reps: Vec<Vertex> = classes.iter().map(|c| c[0]).collect();
    let (h, _) = g.induced(&reps).expect("representatives are in range");

    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    let mut real = vec![0usize; n];
    for comp in h.components() {
        let cover = cover_component(&h, &comp)?;
        if comp.len() == 1 && classes[comp[0]].len() > 1 {
            // A clique component: one clique plus a padding per vertex.
            let class = classes[comp[0]].clone();
            class.iter().for_each(|&v| real[v] += 1);
            cliques.push(class);
            continue;
        }
        for clique in cover {
            let expanded: Vec<Vertex> = clique.iter().flat_map(|&c| classes[c].iter().copied()).collect();
            expanded.iter().for_each(|&v| real[v] += 1);
            cliques.push(expanded);
        }
    }
    for v in 0..n {
        for _ in real[v]..2 {
            cliques.push(vec![v]);
        }
    }
    for clique in &mut cliques {
        clique.sort_unstable();
    }
    cliques.sort_unstable();

    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, clique) in cliques.iter().enumerate() {
        clique.iter().for_each(|&v| membership[v].push(i));
    }
    let membership: Vec<[usize; 2]> = membership
        .into_iter()
        .map(|m| <[usize; 2]>::try_from(m.as_slice()).ok())
        .collect::<Option<_>>()?;
    let root = Multigraph::from_edge_list(cliques.len(), membership.iter().map(|&[a, b]| (a, b))).ok()?;

    // Line graph vertices come in pair order, copies in ascending G order.
    let line = root.line_graph();
    let mut index: BTreeMap<(usize, usize, usize), Vertex> = BTreeMap::new();
    for (i, l) in line.labels.iter().enumerate() {
        index.insert((l.u, l.v, l.copy), i);
    }
    let mut copies: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let line_vertex = membership
        .iter()
        .map(|&[a, b]| {
            let c = copies.entry((a, b)).or_insert(0);
            *c += 1;
            index[&(a, b, *c - 1)]
        })
        .collect();

    let cert = KrauszCertificate {
        cliques,
        membership,
        root,
        line_vertex,
    };
    cert.validate(g).then_some(cert)
}
