//! Simple graphs, loopless multigraphs and colourings.
//!
//! Vertices are dense indices `0..n`. Every structure is immutable once
//! built; operations that remove vertices return a fresh graph together with
//! the map from new indices back to the originals.

use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Undirected loopless simple graph with sorted adjacency lists and a bitset
/// row per vertex for constant-time adjacency tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
    rows: Vec<FixedBitSet>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list. Repeated pairs are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    pub(crate) fn from_rows(rows: Vec<FixedBitSet>) -> Self {
        let adj = rows.iter().map(|r| r.ones().collect()).collect();
        SimpleGraph { adj, rows }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("indices in range")
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("indices in range")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("indices in range")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Adjacency row of `v` as a bitset over `0..n`.
    pub fn row(&self, v: Vertex) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        check_vertex(v, self.n())
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].clone();
                r.toggle_range(..);
                r.set(v, false);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// The square: same vertices, `u ~ w` iff their distance is 1 or 2.
    pub fn square(&self) -> Self {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].clone();
                for &u in &self.adj[v] {
                    r.union_with(&self.rows[u]);
                }
                r.set(v, false);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Bitset of the vertices at distance exactly two from `v`.
    pub(crate) fn second_row(&self, v: Vertex) -> FixedBitSet {
        let mut r = FixedBitSet::with_capacity(self.n());
        for &u in &self.adj[v] {
            r.union_with(&self.rows[u]);
        }
        r.difference_with(&self.rows[v]);
        r.set(v, false);
        r
    }

    /// `N²(v)`: vertices at distance exactly two from `v`, ascending.
    pub fn second_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        Ok(self.second_row(v).ones().collect())
    }

    /// `deg(v) + |N²(v)|`, the degree of `v` in the square.
    pub fn square_degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.square_degree_unchecked(v))
    }

    pub(crate) fn square_degree_unchecked(&self, v: Vertex) -> usize {
        self.degree(v) + self.second_row(v).count_ones(..)
    }

    /// Square degrees of every vertex.
    pub fn square_degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.square_degree_unchecked(v)).collect()
    }

    /// Induced subgraph on `keep` (in the given order). The returned vector
    /// maps each new index to its original vertex.
    pub fn induced(&self, keep: &[Vertex]) -> Result<(SimpleGraph, Vec<Vertex>)> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            check_vertex(v, n)?;
            if index[v] != usize::MAX {
                return Err(Error::InvalidParameters(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let mut rows = vec![FixedBitSet::with_capacity(keep.len()); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for &u in &self.adj[v] {
                if index[u] != usize::MAX {
                    rows[i].insert(index[u]);
                }
            }
        }
        Ok((Self::from_rows(rows), keep.to_vec()))
    }

    /// `G \ v` with the reindexing map.
    pub fn delete_vertex(&self, v: Vertex) -> Result<(SimpleGraph, Vec<Vertex>)> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&w| self.has_edge(u, w)))
    }

    pub fn is_stable(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&w| !self.has_edge(u, w)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// BFS distances from `s`; unreachable vertices get `None`.
    pub fn distances_from(&self, s: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// A proper 2-colouring (side of each vertex) or `None` when the graph
    /// has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &u in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Sorted degree sequence, a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// Loopless multigraph: multiplicity per unordered vertex pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: BTreeMap<(Vertex, Vertex), usize>,
}

/// Identity of one edge instance: its endpoint pair (`u < v`) and which
/// parallel copy it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel {
    pub u: Vertex,
    pub v: Vertex,
    pub copy: usize,
}

/// A line graph together with the edge instance behind each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: SimpleGraph,
    pub labels: Vec<EdgeLabel>,
}

impl Multigraph {
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            mult: BTreeMap::new(),
        }
    }

    /// Builds from `(u, v, k)` triples with distinct pairs, as in the file
    /// format.
    pub fn from_multiplicities<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, usize)>,
    {
        let mut mult = BTreeMap::new();
        for (u, v, k) in triples {
            let key = pair_key(u, v, n)?;
            if k == 0 {
                return Err(Error::ZeroMultiplicity(key.0, key.1));
            }
            if mult.insert(key, k).is_some() {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(Multigraph { n, mult })
    }

    /// Builds from a list of edge instances; repeated pairs accumulate
    /// multiplicity.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut mult = BTreeMap::new();
        for (u, v) in edges {
            *mult.entry(pair_key(u, v, n)?).or_insert(0) += 1;
        }
        Ok(Multigraph { n, mult })
    }

    /// The simple graph viewed as a multigraph with unit multiplicities.
    pub fn from_simple(g: &SimpleGraph) -> Self {
        Multigraph {
            n: g.n(),
            mult: g.edges().map(|e| (e, 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        let key = if u < v { (u, v) } else { (v, u) };
        self.mult.get(&key).copied().unwrap_or(0)
    }

    /// Distinct pairs with their multiplicities, lexicographic.
    pub fn pairs(&self) -> impl Iterator<Item = ((Vertex, Vertex), usize)> + '_ {
        self.mult.iter().map(|(&p, &k)| (p, k))
    }

    pub fn pair_count(&self) -> usize {
        self.mult.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.mult.values().sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for (&(u, v), &k) in &self.mult {
            d[u] += k;
            d[v] += k;
        }
        d
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.mult
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &k)| k)
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().into_iter().all(|x| x == d)
    }

    /// `(neighbour, multiplicity)` lists per vertex, neighbours ascending.
    pub fn weighted_adjacency(&self) -> Vec<Vec<(Vertex, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (&(u, v), &k) in &self.mult {
            adj[u].push((v, k));
            adj[v].push((u, k));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Adjacency iff multiplicity is at least one.
    pub fn underlying_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.n, self.mult.keys().copied()).expect("validated pairs")
    }

    /// Edge instances in canonical order: pairs lexicographic, copies
    /// ascending. This is the vertex order of [`Multigraph::line_graph`].
    pub fn edge_labels(&self) -> Vec<EdgeLabel> {
        self.mult
            .iter()
            .flat_map(|(&(u, v), &k)| (0..k).map(move |copy| EdgeLabel { u, v, copy }))
            .collect()
    }

    /// `L(F)`: one vertex per edge instance, adjacent iff the instances share
    /// an endpoint. Parallel copies are therefore adjacent.
    pub fn line_graph(&self) -> LineGraph {
        let labels = self.edge_labels();
        let m = labels.len();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, l) in labels.iter().enumerate() {
            incident[l.u].push(i);
            incident[l.v].push(i);
        }
        let mut rows = vec![FixedBitSet::with_capacity(m); m];
        for list in &incident {
            for &a in list {
                for &b in list {
                    if a != b {
                        rows[a].insert(b);
                    }
                }
            }
        }
        LineGraph {
            graph: SimpleGraph::from_rows(rows),
            labels,
        }
    }

    /// Removes vertices, reindexing the rest in ascending order.
    pub fn induced(&self, keep: &[Vertex]) -> Result<(Multigraph, Vec<Vertex>)> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            check_vertex(v, self.n)?;
            index[v] = i;
        }
        let mut mult = BTreeMap::new();
        for (&(u, v), &k) in &self.mult {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                let (a, b) = (index[u].min(index[v]), index[u].max(index[v]));
                mult.insert((a, b), k);
            }
        }
        Ok((Multigraph { n: keep.len(), mult }, keep.to_vec()))
    }
}

fn pair_key(u: Vertex, v: Vertex, n: usize) -> Result<(Vertex, Vertex)> {
    check_vertex(u, n)?;
    check_vertex(v, n)?;
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok((u.min(v), u.max(v)))
}

/// Partial vertex colouring. Colours are `0..palette_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<usize>>,
    palette_size: usize,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
            palette_size: 0,
        }
    }

    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette_size = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
            palette_size,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.colors[v]
    }

    pub fn set(&mut self, v: Vertex, c: usize) {
        self.colors[v] = Some(c);
        self.palette_size = self.palette_size.max(c + 1);
    }

    pub fn clear(&mut self, v: Vertex) {
        self.colors[v] = None;
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colours in use.
    pub fn colors_used(&self) -> usize {
        let mut seen = FixedBitSet::with_capacity(self.palette_size);
        for c in self.colors.iter().flatten() {
            seen.insert(*c);
        }
        seen.count_ones(..)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Option<usize>)> + '_ {
        self.colors.iter().copied().enumerate()
    }

    /// Total colouring as a plain vector.
    pub fn to_vec(&self) -> Result<Vec<usize>> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::PartialColoring(v)))
            .collect()
    }
}
