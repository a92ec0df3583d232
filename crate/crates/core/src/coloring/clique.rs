use fixedbitset::FixedBitSet;

use crate::graph::{SimpleGraph, Vertex};

/// Exact maximum clique with a witness, by branch and bound with greedy
/// colouring bounds on bitset candidate sets.
pub fn clique_number(g: &SimpleGraph) -> (usize, Vec<Vertex>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut best: Vec<Vertex> = vec![0];
    let mut current = Vec::new();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    expand(g, &mut current, all, &mut best);
    best.sort_unstable();
    (best.len(), best)
}

/// Colours `p` greedily, returning vertices in colour order with the colour
/// count reached at each (a bound on the clique inside the prefix).
fn colour_sort(g: &SimpleGraph, p: &FixedBitSet) -> Vec<(Vertex, usize)> {
    let mut uncoloured = p.clone();
    let mut order = Vec::with_capacity(p.count_ones(..));
    let mut colour = 0;
    while uncoloured.count_ones(..) > 0 {
        colour += 1;
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.ones().next() {
            avail.set(v, false);
            avail.difference_with(g.row(v));
            uncoloured.set(v, false);
            order.push((v, colour));
        }
    }
    order
}

fn expand(g: &SimpleGraph, current: &mut Vec<Vertex>, mut p: FixedBitSet, best: &mut Vec<Vertex>) {
    let order = colour_sort(g, &p);
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let mut next = p.clone();
        next.intersect_with(g.row(v));
        if next.count_ones(..) == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        p.set(v, false);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{c5_blowup, complete_bipartite, wheel};

    fn brute_force(g: &SimpleGraph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&m| {
                let set: Vec<Vertex> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                g.is_clique(&set)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        assert_eq!(clique_number(&SimpleGraph::empty(0)).0, 0);
        assert_eq!(clique_number(&SimpleGraph::empty(3)).0, 1);
        let (w, witness) = clique_number(&wheel(5));
        assert_eq!(w, 3);
        assert!(wheel(5).is_clique(&witness));
        assert_eq!(
            clique_number(&complete_bipartite(3, 3).unwrap().underlying_simple()).0,
            2
        );
    }

    #[test]
    fn line_graph_of_c5_blowup() {
        let l = c5_blowup(4).unwrap().line_graph().graph;
        assert_eq!(clique_number(&l).0, brute_force(&l));
        assert_eq!(clique_number(&l).0, 4);
    }
}
