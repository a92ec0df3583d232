use std::collections::VecDeque;

use crate::graph::{SimpleGraph, Vertex};

/// Two-colours the complement of `g[set]`, returning the side of each member
/// of `set` (in order), or `None` if the complement has an odd cycle.
pub(crate) fn complement_sides(g: &SimpleGraph, set: &[Vertex]) -> Option<Vec<bool>> {
    let k = set.len();
    let mut side: Vec<Option<bool>> = vec![None; k];
    for s in 0..k {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let si = side[i].unwrap();
            for j in (0..k).filter(|&j| j != i && !g.has_edge(set[i], set[j])) {
                match side[j] {
                    None => {
                        side[j] = Some(!si);
                        queue.push_back(j);
                    }
                    Some(sj) if sj == si => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Components of the complement of `g[set]`, as index lists into `set`.
pub(crate) fn complement_components(g: &SimpleGraph, set: &[Vertex]) -> Vec<Vec<usize>> {
    let k = set.len();
    let mut seen = vec![false; k];
    let mut comps = Vec::new();
    for s in 0..k {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for j in 0..k {
                if !seen[j] && j != x && !g.has_edge(set[x], set[j]) {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Partition of `V(h)` into two cliques, or `None` when the complement of
/// `h` is not bipartite.
pub fn two_clique_cover(h: &SimpleGraph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let all: Vec<Vertex> = (0..h.n()).collect();
    let sides = complement_sides(h, &all)?;
    let (k1, k2): (Vec<Vertex>, Vec<Vertex>) = all.into_iter().partition(|&v| !sides[v]);
    Some((k1, k2))
}

/// First vertex whose neighbourhood cannot be covered by two cliques.
pub fn quasi_line_violation(g: &SimpleGraph) -> Option<Vertex> {
    (0..g.n()).find(|&v| complement_sides(g, g.neighbors(v)).is_none())
}

pub fn is_quasi_line(g: &SimpleGraph) -> bool {
    quasi_line_violation(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::wheel;

    #[test]
    fn covers() {
        let (a, b) = two_clique_cover(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(a.len() + b.len(), 2);
        assert!(two_clique_cover(&SimpleGraph::cycle(5)).is_none());
        let p4 = SimpleGraph::path(4);
        let (a, b) = two_clique_cover(&p4).unwrap();
        assert!(p4.is_clique(&a) && p4.is_clique(&b));
        assert_eq!((a.len(), b.len()), (2, 2));
    }

    #[test]
    fn quasi_line() {
        assert_eq!(quasi_line_violation(&wheel(5)), Some(0));
        assert!(is_quasi_line(&SimpleGraph::cycle(5)));
        assert!(is_quasi_line(&SimpleGraph::complete(6)));
    }

    #[test]
    fn complement_components_of_p4() {
        // Complement of P4 is P4, so it is connected.
        let comps = complement_components(&SimpleGraph::path(4), &[0, 1, 2, 3]);
        assert_eq!(comps, vec![vec![0, 1, 2, 3]]);
        let comps = complement_components(&SimpleGraph::complete(3), &[0, 1, 2]);
        assert_eq!(comps.len(), 3);
    }
}
