use crate::graph::{Coloring, SimpleGraph, Vertex};

/// Lowest colour not used by any coloured neighbour of `v` in `h`.
pub fn first_free_color(h: &SimpleGraph, coloring: &Coloring, v: Vertex) -> usize {
    let mut taken = vec![false; h.degree(v) + 1];
    for &w in h.neighbors(v) {
        if let Some(c) = coloring.get(w) {
            if c < taken.len() {
                taken[c] = true;
            }
        }
    }
    taken.iter().position(|&t| !t).unwrap()
}

/// First-fit colouring in the given order.
pub fn greedy_in_order(h: &SimpleGraph, order: &[Vertex]) -> Coloring {
    let mut coloring = Coloring::uncolored(h.n());
    for &v in order {
        let c = first_free_color(h, &coloring, v);
        coloring.set(v, c);
    }
    coloring
}

/// Smallest-last order: repeatedly remove a vertex of minimum remaining
/// degree (lowest index on ties), then reverse.
pub fn smallest_last_order(h: &SimpleGraph) -> Vec<Vertex> {
    let n = h.n();
    let mut deg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        removed[v] = true;
        order.push(v);
        for &w in h.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order.reverse();
    order
}

/// DSATUR heuristic: colour the vertex with the most distinct neighbour
/// colours next (then highest degree, then lowest index).
pub fn dsatur_greedy(h: &SimpleGraph) -> Coloring {
    let n = h.n();
    let mut coloring = Coloring::uncolored(n);
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| coloring.get(v).is_none())
            .max_by_key(|&v| (sat[v], h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = first_free_color(h, &coloring, v);
        coloring.set(v, c);
        for &w in h.neighbors(v) {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    coloring
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;

    #[test]
    fn heuristics_are_proper() {
        let g = SimpleGraph::cycle(7).square();
        for c in [dsatur_greedy(&g), greedy_in_order(&g, &smallest_last_order(&g))] {
            assert_eq!(verify_coloring(&g, &c), Ok(None));
            assert!(c.colors_used() <= 5);
        }
        assert_eq!(dsatur_greedy(&SimpleGraph::complete(4)).colors_used(), 4);
        assert_eq!(dsatur_greedy(&SimpleGraph::cycle(6)).colors_used(), 2);
    }
}
