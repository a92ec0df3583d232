use fixedbitset::FixedBitSet;

use crate::graph::{SimpleGraph, Vertex};

/// Induced `K_{1,3}` as `(center, leaves)`, lexicographically first.
pub fn find_claw(g: &SimpleGraph) -> Option<(Vertex, [Vertex; 3])> {
    (0..g.n()).find_map(|v| stable_triple_in(g, g.row(v)).map(|leaves| (v, leaves)))
}

/// Three pairwise non-adjacent vertices, lexicographically first.
pub fn find_stable_triple(g: &SimpleGraph) -> Option<[Vertex; 3]> {
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    stable_triple_in(g, &all)
}

fn stable_triple_in(g: &SimpleGraph, within: &FixedBitSet) -> Option<[Vertex; 3]> {
    for x in within.ones() {
        let mut free_x = within.clone();
        free_x.difference_with(g.row(x));
        for y in free_x.ones().filter(|&y| y > x) {
            let mut free_xy = free_x.clone();
            free_xy.difference_with(g.row(y));
            if let Some(z) = free_xy.ones().find(|&z| z > y) {
                return Some([x, y, z]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::petersen;

    #[test]
    fn claws() {
        let star = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_claw(&star), Some((0, [1, 2, 3])));
        assert_eq!(find_claw(&SimpleGraph::cycle(5)), None);
        let (c, leaves) = find_claw(&petersen()).unwrap();
        assert_eq!(c, 0);
        assert_eq!(leaves.to_vec(), petersen().neighbors(0).to_vec());
    }

    #[test]
    fn stable_triples() {
        assert_eq!(find_stable_triple(&SimpleGraph::complete(5)), None);
        assert_eq!(find_stable_triple(&SimpleGraph::cycle(5)), None);
        let t = find_stable_triple(&SimpleGraph::cycle(7)).unwrap();
        assert!(SimpleGraph::cycle(7).is_stable(&t));
    }
}
