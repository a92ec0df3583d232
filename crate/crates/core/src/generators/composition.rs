//! Compositions of strips over a disjoint union of cliques.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::generators::interval::Strip;
use crate::graph::{SimpleGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndSide {
    A,
    B,
}

/// One of the `2k` end symbols `a_i` / `b_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndSymbol {
    pub strip: usize,
    pub side: EndSide,
}

impl EndSymbol {
    pub fn a(strip: usize) -> Self {
        EndSymbol {
            strip,
            side: EndSide::A,
        }
    }

    pub fn b(strip: usize) -> Self {
        EndSymbol {
            strip,
            side: EndSide::B,
        }
    }

    fn node(self) -> usize {
        2 * self.strip + usize::from(self.side == EndSide::B)
    }
}

/// Base cliques partitioning the end symbols, plus one strip per index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionScheme {
    pub base_cliques: Vec<Vec<EndSymbol>>,
    pub strips: Vec<Strip>,
}

impl CompositionScheme {
    pub fn k(&self) -> usize {
        self.strips.len()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        if k < 3 {
            return Err(Error::InvalidScheme(format!("need at least 3 strips, got {k}")));
        }
        let mut seen = vec![false; 2 * k];
        for sym in self.base_cliques.iter().flatten() {
            if sym.strip >= k {
                return Err(Error::InvalidScheme(format!(
                    "end symbol for missing strip {}",
                    sym.strip
                )));
            }
            if std::mem::replace(&mut seen[sym.node()], true) {
                return Err(Error::InvalidScheme(format!("end symbol {sym:?} used twice")));
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidScheme(format!(
                "end symbol node {missing} not in any base clique"
            )));
        }
        for strip in &self.strips {
            strip.validate()?;
        }
        Ok(())
    }

    /// Index of the base clique holding `sym`.
    pub fn clique_of(&self, sym: EndSymbol) -> usize {
        self.base_cliques
            .iter()
            .position(|c| c.contains(&sym))
            .expect("validated scheme covers every end symbol")
    }
}

/// Result of composing a scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub graph: SimpleGraph,
    /// `(strip index, vertex of that strip)` for every vertex of `graph`.
    pub origin: Vec<(usize, Vertex)>,
    /// The glued clique `C'_j` for each base clique `C_j`, in `graph` indices.
    pub glued: Vec<Vec<Vertex>>,
}

impl Composition {
    /// Vertex of the composition that came from `(strip, local)`.
    pub fn vertex_of(&self, strip: usize, local: Vertex) -> Option<Vertex> {
        self.origin.iter().position(|&o| o == (strip, local))
    }
}

/// Composes two strips given as `(graph, a, b)`: the ends are deleted and
/// `N(a1) \ b1` is joined to `N(a2) \ b2`, `N(b1) \ a1` to `N(b2) \ a2`.
/// Vertices of the first graph keep their relative order and come first.
pub fn compose_pair(
    first: (&SimpleGraph, Vertex, Vertex),
    second: (&SimpleGraph, Vertex, Vertex),
) -> Result<(SimpleGraph, Vec<Vertex>, Vec<Vertex>)> {
    let (g1, a1, b1) = first;
    let (g2, a2, b2) = second;
    for (g, a, b) in [first, second] {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if a == b {
            return Err(Error::InvalidScheme(format!("strip ends coincide at {a}")));
        }
    }
    let keep1: Vec<Vertex> = (0..g1.n()).filter(|&v| v != a1 && v != b1).collect();
    let keep2: Vec<Vertex> = (0..g2.n()).filter(|&v| v != a2 && v != b2).collect();
    let off = keep1.len();
    let mut idx1 = vec![usize::MAX; g1.n()];
    let mut idx2 = vec![usize::MAX; g2.n()];
    keep1.iter().enumerate().for_each(|(i, &v)| idx1[v] = i);
    keep2.iter().enumerate().for_each(|(i, &v)| idx2[v] = off + i);
    let mut edges: Vec<(Vertex, Vertex)> = g1
        .edges()
        .filter(|&(u, v)| idx1[u] != usize::MAX && idx1[v] != usize::MAX)
        .map(|(u, v)| (idx1[u], idx1[v]))
        .collect();
    edges.extend(
        g2.edges()
            .filter(|&(u, v)| idx2[u] != usize::MAX && idx2[v] != usize::MAX)
            .map(|(u, v)| (idx2[u], idx2[v])),
    );
    let side = |g: &SimpleGraph, end: Vertex, other: Vertex| -> Vec<Vertex> {
        g.neighbors(end).iter().copied().filter(|&v| v != other).collect()
    };
    for (x1, x2) in [
        (side(g1, a1, b1), side(g2, a2, b2)),
        (side(g1, b1, a1), side(g2, b2, a2)),
    ] {
        for &u in &x1 {
            for &w in &x2 {
                edges.push((idx1[u], idx2[w]));
            }
        }
    }
    let graph = SimpleGraph::from_edges(off + keep2.len(), edges)?;
    Ok((graph, keep1, keep2))
}

/// Composes all strips of a scheme by iterating the two-strip composition,
/// starting from the disjoint union of the base cliques on the end symbols.
pub fn compose_strips(scheme: &CompositionScheme) -> Result<Composition> {
    scheme.validate()?;
    let k = scheme.k();
    // Current graph and, for every vertex, either an end symbol node or an
    // interior origin.
    #[derive(Clone, Copy, PartialEq)]
    enum Tag {
        End(usize),
        Interior(usize, Vertex),
    }
    let mut tags: Vec<Tag> = (0..2 * k).map(Tag::End).collect();
    let mut base_edges = Vec::new();
    for clique in &scheme.base_cliques {
        for (i, s) in clique.iter().enumerate() {
            for t in &clique[i + 1..] {
                base_edges.push((s.node(), t.node()));
            }
        }
    }
    let mut current = SimpleGraph::from_edges(2 * k, base_edges)?;

    for (i, strip) in scheme.strips.iter().enumerate() {
        let find = |node: usize| {
            tags.iter()
                .position(|&t| t == Tag::End(node))
                .expect("end still present")
        };
        let (a, b) = (find(EndSymbol::a(i).node()), find(EndSymbol::b(i).node()));
        let (next, keep1, keep2) = compose_pair((&current, a, b), (&strip.graph, strip.a, strip.b))?;
        let mut next_tags: Vec<Tag> = keep1.iter().map(|&v| tags[v]).collect();
        next_tags.extend(keep2.iter().map(|&v| Tag::Interior(i, v)));
        tags = next_tags;
        current = next;
    }

    let origin: Vec<(usize, Vertex)> = tags
        .iter()
        .map(|t| match *t {
            Tag::Interior(s, v) => (s, v),
            Tag::End(_) => unreachable!("every end symbol is consumed"),
        })
        .collect();
    let lookup = |s: usize, v: Vertex| origin.iter().position(|&o| o == (s, v));
    let glued = scheme
        .base_cliques
        .iter()
        .map(|clique| {
            let mut set = BTreeSet::new();
            for sym in clique {
                let strip = &scheme.strips[sym.strip];
                let (end, other) = match sym.side {
                    EndSide::A => (strip.a, strip.b),
                    EndSide::B => (strip.b, strip.a),
                };
                for &u in strip.graph.neighbors(end) {
                    if u != other {
                        set.insert(lookup(sym.strip, u).expect("interior vertex present"));
                    }
                }
            }
            set.into_iter().collect()
        })
        .collect();
    Ok(Composition {
        graph: current,
        origin,
        glued,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::interval::IntervalRep;
    use crate::recognition::find_claw;

    fn path_strip(len: usize) -> Strip {
        let positions: Vec<i64> = (0..len as i64).collect();
        let intervals = (1..len as i64).map(|i| (i - 1, i)).collect();
        Strip::from_rep(IntervalRep::linear(positions, intervals).unwrap()).unwrap()
    }

    fn cyclic_scheme(strips: Vec<Strip>) -> CompositionScheme {
        let k = strips.len();
        let base_cliques = (0..k)
            .map(|i| vec![EndSymbol::b(i), EndSymbol::a((i + 1) % k)])
            .collect();
        CompositionScheme { base_cliques, strips }
    }

    #[test]
    fn three_short_strips_glue_into_a_triangle() {
        // Hand-built: interiors x0, x1, x2; b_i and a_{i+1} share a base
        // clique so x_i ~ x_{i+1}.
        let comp = compose_strips(&cyclic_scheme(vec![path_strip(3); 3])).unwrap();
        assert_eq!(comp.graph, SimpleGraph::complete(3));
        assert_eq!(comp.origin, vec![(0, 1), (1, 1), (2, 1)]);
        for glued in &comp.glued {
            assert_eq!(glued.len(), 2);
            assert!(comp.graph.is_clique(glued));
        }
    }

    #[test]
    fn four_vertex_paths_compose_into_a_six_cycle() {
        let comp = compose_strips(&cyclic_scheme(vec![path_strip(4); 3])).unwrap();
        assert_eq!(comp.graph.n(), 6);
        assert_eq!(comp.graph.degree_sequence(), vec![2; 6]);
        assert!(comp.graph.is_connected());
        // x = local 1 of strip 0 is adjacent to a but not b, so it lies in the
        // clique glued at a_0 and not in the one glued at b_0.
        let x = comp.vertex_of(0, 1).unwrap();
        let at_b = scheme_clique(&comp, EndSymbol::b(0), 3);
        let at_a = scheme_clique(&comp, EndSymbol::a(0), 3);
        assert!(!at_b.contains(&x));
        assert!(at_a.contains(&x));
    }

    fn scheme_clique(comp: &Composition, sym: EndSymbol, k: usize) -> Vec<Vertex> {
        let scheme = cyclic_scheme(vec![path_strip(4); k]);
        comp.glued[scheme.clique_of(sym)].clone()
    }

    #[test]
    fn composition_of_paths_is_claw_free() {
        let comp = compose_strips(&CompositionScheme {
            base_cliques: vec![
                vec![EndSymbol::a(0), EndSymbol::a(1), EndSymbol::a(2)],
                vec![EndSymbol::b(0), EndSymbol::b(1)],
                vec![EndSymbol::b(2)],
            ],
            strips: vec![path_strip(4), path_strip(5), path_strip(3)],
        })
        .unwrap();
        assert!(find_claw(&comp.graph).is_none());
    }

    #[test]
    fn invalid_schemes() {
        let two = CompositionScheme {
            base_cliques: vec![
                vec![EndSymbol::a(0), EndSymbol::a(1)],
                vec![EndSymbol::b(0), EndSymbol::b(1)],
            ],
            strips: vec![path_strip(3); 2],
        };
        assert!(matches!(compose_strips(&two), Err(Error::InvalidScheme(_))));
        let mut dup = cyclic_scheme(vec![path_strip(3); 3]);
        dup.base_cliques[0].push(EndSymbol::a(1));
        assert!(compose_strips(&dup).is_err());
        let mut bad = cyclic_scheme(vec![path_strip(3); 3]);
        bad.strips[1].b = bad.strips[1].a;
        assert!(compose_strips(&bad).is_err());
        let g = SimpleGraph::path(3);
        assert!(compose_pair((&g, 0, 0), (&g, 0, 2)).is_err());
    }
}
