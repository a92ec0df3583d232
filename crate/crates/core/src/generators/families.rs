//! Fixed graph families: the balanced 5-cycle blow-up, complete bipartite
//! graphs, bag substitution and the named test instances.

use crate::error::{Error, Result};
use crate::graph::{Multigraph, SimpleGraph, Vertex};

/// Edge count of `C5(Δ)`: `5Δ²/4` for even `Δ`, `(5Δ²−2Δ+1)/4` for odd `Δ`.
pub fn f_of_delta(delta: usize) -> usize {
    if delta.is_multiple_of(2) {
        5 * delta * delta / 4
    } else {
        (5 * delta * delta + 1 - 2 * delta) / 4
    }
}

/// Bag sizes of `C5(Δ)` around the cycle. Odd `Δ` puts the two larger bags
/// on consecutive vertices.
pub fn c5_blowup_bags(delta: usize) -> Result<[usize; 5]> {
    if delta < 2 {
        return Err(Error::InvalidParameters(format!(
            "C5 blow-up needs Δ >= 2, got {delta}"
        )));
    }
    let (hi, lo) = (delta.div_ceil(2), delta / 2);
    Ok([hi, hi, lo, lo, lo])
}

/// `C5(Δ)`: each vertex of the 5-cycle replaced by a stable set.
pub fn c5_blowup(delta: usize) -> Result<Multigraph> {
    let sizes = c5_blowup_bags(delta)?;
    let g = substitute(&SimpleGraph::cycle(5), &sizes, BagMode::Stable)?;
    Ok(Multigraph::from_simple(&g))
}

/// Simple `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Multigraph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameters(format!(
            "K_{{{a},{b}}} needs both parts non-empty"
        )));
    }
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Multigraph::from_edge_list(a + b, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BagMode {
    Stable,
    Clique,
}

/// Replaces vertex `v` by a bag of `sizes[v]` vertices. Bags are contiguous
/// and in vertex order, so vertex `v`'s bag starts at `sizes[..v].sum()`.
pub fn substitute(g: &SimpleGraph, sizes: &[usize], mode: BagMode) -> Result<SimpleGraph> {
    if sizes.len() != g.n() {
        return Err(Error::InvalidParameters(format!(
            "{} bag sizes for a graph on {} vertices",
            sizes.len(),
            g.n()
        )));
    }
    if let Some(v) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidParameters(format!("bag of vertex {v} is empty")));
    }
    let bags = bag_ranges(sizes);
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        for x in bags[u].clone() {
            for y in bags[v].clone() {
                edges.push((x, y));
            }
        }
    }
    if mode == BagMode::Clique {
        for bag in &bags {
            for x in bag.clone() {
                for y in x + 1..bag.end {
                    edges.push((x, y));
                }
            }
        }
    }
    SimpleGraph::from_edges(sizes.iter().sum(), edges)
}

/// Vertex ranges of the bags produced by [`substitute`].
pub fn bag_ranges(sizes: &[usize]) -> Vec<std::ops::Range<Vertex>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = start..start + s;
            start += s;
            r
        })
        .collect()
}

/// Wheel: hub `0` joined to the cycle `1..=rim`.
pub fn wheel(rim: usize) -> SimpleGraph {
    let mut edges: Vec<(Vertex, Vertex)> = (1..=rim).map(|i| (0, i)).collect();
    edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    SimpleGraph::from_edges(rim + 1, edges).expect("indices in range")
}

/// Icosahedron: apex `0`, upper ring `1..=5`, lower ring `6..=10`, apex `11`.
/// Upper `u_i` meets lower `l_i` and `l_{i+1}`.
pub fn icosahedron() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (u, un) = (1 + i, 1 + (i + 1) % 5);
        let (l, ln) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, u), (u, un), (l, ln), (l, 11), (u, l), (u, ln)]);
    }
    SimpleGraph::from_edges(12, edges).expect("indices in range")
}

/// Petersen graph: outer cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (i, 5 + i), (5 + i, 5 + (i + 2) % 5)]);
    }
    SimpleGraph::from_edges(10, edges).expect("indices in range")
}

/// `k`-th power of the cycle `C_n`: `i ~ j` iff their cyclic distance is at
/// most `k`.
pub fn cycle_power(n: usize, k: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("cycle power needs n >= 3, got {n}")));
    }
    let edges = (0..n).flat_map(|i| (1..=k.min(n / 2)).map(move |d| (i, (i + d) % n)));
    SimpleGraph::from_edges(n, edges)
}

pub const NAMED_INSTANCES: [&str; 6] = ["wheel5", "icosahedron", "petersen_line", "c5", "paw", "diamond"];

pub fn named_instance(name: &str) -> Result<SimpleGraph> {
    Ok(match name {
        "wheel5" => wheel(5),
        "icosahedron" => icosahedron(),
        "petersen_line" => Multigraph::from_simple(&petersen()).line_graph().graph,
        "c5" => SimpleGraph::cycle(5),
        "paw" => SimpleGraph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])?,
        "diamond" => SimpleGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])?,
        _ => return Err(Error::UnknownInstance(name.to_string())),
    })
}

/// Replaces the adjacent vertices `p`, `q` of `base` by cliques `A` (size
/// `a`) and `B` (size `b`), linked only by the pairs in `links` (indices
/// into `A` and `B`). Outside vertices see `A` as they saw `p` and `B` as they
/// saw `q`, so `(A, B)` is a homogeneous pair. Returns the graph, `A` and `B`.
pub fn homogeneous_pair_gadget(
    base: &SimpleGraph,
    p: Vertex,
    q: Vertex,
    a: usize,
    b: usize,
    links: &[(usize, usize)],
) -> Result<(SimpleGraph, Vec<Vertex>, Vec<Vertex>)> {
    base.check_vertex(p)?;
    base.check_vertex(q)?;
    if p == q || a == 0 || b == 0 || a + b < 3 {
        return Err(Error::InvalidParameters(
            "gadget needs distinct p, q and clique sizes with a + b >= 3".into(),
        ));
    }
    if let Some(l) = links.iter().find(|&&(i, j)| i >= a || j >= b) {
        return Err(Error::InvalidParameters(format!("link {l:?} out of range")));
    }
    let rest: Vec<Vertex> = (0..base.n()).filter(|&v| v != p && v != q).collect();
    let m = rest.len();
    let mut idx = vec![usize::MAX; base.n()];
    rest.iter().enumerate().for_each(|(i, &v)| idx[v] = i);
    let set_a: Vec<Vertex> = (m..m + a).collect();
    let set_b: Vec<Vertex> = (m + a..m + a + b).collect();
    let mut edges: Vec<(Vertex, Vertex)> = base
        .edges()
        .filter(|&(u, v)| idx[u] != usize::MAX && idx[v] != usize::MAX)
        .map(|(u, v)| (idx[u], idx[v]))
        .collect();
    for (end, set) in [(p, &set_a), (q, &set_b)] {
        for (i, &x) in set.iter().enumerate() {
            edges.extend(set[i + 1..].iter().map(|&y| (x, y)));
            edges.extend(
                base.neighbors(end)
                    .iter()
                    .filter(|&&w| idx[w] != usize::MAX)
                    .map(|&w| (idx[w], x)),
            );
        }
    }
    edges.extend(links.iter().map(|&(i, j)| (set_a[i], set_b[j])));
    Ok((SimpleGraph::from_edges(m + a + b, edges)?, set_a, set_b))
}
