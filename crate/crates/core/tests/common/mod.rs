//! Brute-force oracles written against plain adjacency lists, kept apart
//! from the library's bitset code paths.

#![allow(dead_code)]

use clawsquare::{Multigraph, SimpleGraph};

pub fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.n();
    (0..n)
        .map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect())
        .collect()
}

/// `u ~ v` in the square: adjacent or with a common neighbour.
pub fn square_adjacent(adj: &[Vec<bool>], u: usize, v: usize) -> bool {
    u != v && (adj[u][v] || (0..adj.len()).any(|w| adj[u][w] && adj[w][v]))
}

pub fn square_degree(adj: &[Vec<bool>], v: usize) -> usize {
    (0..adj.len()).filter(|&u| square_adjacent(adj, v, u)).count()
}

pub fn is_proper_square_coloring(g: &SimpleGraph, colors: &[usize]) -> bool {
    let adj = adjacency(g);
    let n = g.n();
    colors.len() == n && (0..n).all(|u| (u + 1..n).all(|v| !square_adjacent(&adj, u, v) || colors[u] != colors[v]))
}

/// Clique number by Bron–Kerbosch with pivoting.
pub fn clique_number(g: &SimpleGraph) -> usize {
    let adj = adjacency(g);
    let mut best = 0;
    bron_kerbosch(&adj, 0, (0..g.n()).collect(), Vec::new(), &mut best);
    best
}

fn bron_kerbosch(adj: &[Vec<bool>], size: usize, p: Vec<usize>, mut x: Vec<usize>, best: &mut usize) {
    if p.is_empty() && x.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + p.len() <= *best {
        return;
    }
    let pivot = *p
        .iter()
        .chain(&x)
        .max_by_key(|&&u| p.iter().filter(|&&w| adj[u][w]).count())
        .unwrap();
    let mut p = p;
    for v in p.clone() {
        if adj[pivot][v] {
            continue;
        }
        let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
        bron_kerbosch(adj, size + 1, np, nx, best);
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Degree of the `e`-th edge instance (canonical order) in `L(F)²`, from
/// endpoint lists alone.
pub fn line_square_degree(f: &Multigraph, e: usize) -> usize {
    let mut edges = Vec::new();
    for ((u, v), k) in f.pairs() {
        for _ in 0..k {
            edges.push((u, v));
        }
    }
    let (a, b) = edges[e];
    let touches = |x: usize, (p, q): (usize, usize)| x == p || x == q;
    let joined = |(p, q): (usize, usize)| {
        [a, b]
            .iter()
            .any(|&x| [p, q].iter().any(|&y| x == y || f.multiplicity(x, y) > 0))
    };
    edges
        .iter()
        .enumerate()
        .filter(|&(i, &g)| i != e && (touches(a, g) || touches(b, g) || joined(g)))
        .count()
}

/// `5Δ²/4` or `(5Δ² − 2Δ + 1)/4`.
pub fn f_closed(delta: usize) -> usize {
    let d = delta as f64;
    let v = if delta.is_multiple_of(2) {
        5.0 * d * d / 4.0
    } else {
        (5.0 * d * d - 2.0 * d + 1.0) / 4.0
    };
    v as usize
}

pub fn has_claw(g: &SimpleGraph) -> bool {
    let adj = adjacency(g);
    let n = g.n();
    (0..n).any(|c| {
        let nb: Vec<usize> = (0..n).filter(|&x| adj[c][x]).collect();
        nb.iter().enumerate().any(|(i, &x)| {
            nb[i + 1..]
                .iter()
                .enumerate()
                .any(|(j, &y)| !adj[x][y] && nb[i + 1 + j + 1..].iter().any(|&z| !adj[x][z] && !adj[y][z]))
        })
    })
}
