use fixedbitset::FixedBitSet;

use crate::graph::{SimpleGraph, Vertex};

/// Largest graph the brute-force search accepts.
pub const HOMOGENEOUS_PAIR_MAX_N: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPair {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    /// `(a1, a2, b)` with `a1 b` an edge and `a2 b` a non-edge.
    pub witness: Option<(Vertex, Vertex, Vertex)>,
}

impl HomogeneousPair {
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let n = g.n();
        let (a, b) = (&self.a, &self.b);
        if a.is_empty() || b.is_empty() || a.len() + b.len() < 3 {
            return false;
        }
        if a.iter().chain(b).any(|&v| v >= n) || a.iter().any(|v| b.contains(v)) {
            return false;
        }
        if !g.is_clique(a) || !g.is_clique(b) {
            return false;
        }
        let uniform = |x: Vertex, set: &[Vertex]| {
            let hits = set.iter().filter(|&&y| g.has_edge(x, y)).count();
            hits == 0 || hits == set.len()
        };
        let outside_ok = (0..n)
            .filter(|x| !a.contains(x) && !b.contains(x))
            .all(|x| uniform(x, a) && uniform(x, b));
        let witness_ok = self.witness.is_none_or(|(a1, a2, w)| {
            a.contains(&a1) && a.contains(&a2) && b.contains(&w) && g.has_edge(a1, w) && !g.has_edge(a2, w)
        });
        outside_ok && witness_ok
    }
}

fn mixed(g: &SimpleGraph, x: Vertex, set: &FixedBitSet) -> bool {
    let hits = g.row(x).intersection(set).count();
    hits != 0 && hits != set.count_ones(..)
}

/// Grows `(a, b)` until no outside vertex is mixed on either side, branching
/// on which side absorbs a mixed vertex.
fn close(g: &SimpleGraph, a: FixedBitSet, b: FixedBitSet) -> Option<(FixedBitSet, FixedBitSet)> {
    let x = (0..g.n()).find(|&x| !a.contains(x) && !b.contains(x) && (mixed(g, x, &a) || mixed(g, x, &b)));
    let Some(x) = x else {
        return Some((a, b));
    };
    let fits = |set: &FixedBitSet| set.ones().all(|y| g.has_edge(x, y));
    if fits(&a) {
        let mut a2 = a.clone();
        a2.insert(x);
        if let Some(found) = close(g, a2, b.clone()) {
            return Some(found);
        }
    }
    if fits(&b) {
        let mut b2 = b;
        b2.insert(x);
        return close(g, a, b2);
    }
    None
}

/// A homogeneous pair of non-empty cliques, or `None`. With
/// `require_refinement` the pair also carries `a1, a2 ∈ A`, `b ∈ B` with
/// `a1 b ∈ E` and `a2 b ∉ E`. Returns `None` above
/// [`HOMOGENEOUS_PAIR_MAX_N`] vertices.
pub fn find_homogeneous_pair(g: &SimpleGraph, require_refinement: bool) -> Option<HomogeneousPair> {
    let n = g.n();
    if n > HOMOGENEOUS_PAIR_MAX_N {
        return None;
    }
    let bits = |vs: &[Vertex]| {
        let mut s = FixedBitSet::with_capacity(n);
        vs.iter().for_each(|&v| s.insert(v));
        s
    };
    for (x, y) in g.edges() {
        for z in (0..n).filter(|&z| z != x && z != y) {
            // Orient the seed so that x is the endpoint adjacent to z.
            let seeds: Vec<(Vertex, Vertex)> = if require_refinement {
                match (g.has_edge(x, z), g.has_edge(y, z)) {
                    (true, false) => vec![(x, y)],
                    (false, true) => vec![(y, x)],
                    _ => continue,
                }
            } else {
                vec![(x, y)]
            };
            for (a1, a2) in seeds {
                if let Some((a, b)) = close(g, bits(&[a1, a2]), bits(&[z])) {
                    let pair = HomogeneousPair {
                        a: a.ones().collect(),
                        b: b.ones().collect(),
                        witness: require_refinement.then_some((a1, a2, z)),
                    };
                    debug_assert!(pair.validate(g));
                    return Some(pair);
                }
            }
        }
    }
    None
}
