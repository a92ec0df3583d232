//! Seeded instance families used for batch runs: a mixed claw-free corpus,
//! clique substitutions and regular multigraphs.

use rand::Rng;

use crate::error::Result;
use crate::generators::{
    compose_strips, cycle_power, icosahedron, named_instance, random_circular_rep, random_multigraph,
    random_regular_multigraph, random_scheme, random_strip, rng_from_seed, substitute, wheel, BagMode, NAMED_INSTANCES,
};
use crate::graph::{Multigraph, SimpleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Named,
    LineGraph,
    CircularInterval,
    Strip,
    Composition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub family: Family,
    pub graph: SimpleGraph,
}

pub const LINE_GRAPHS: usize = 100;
pub const CIRCULAR: usize = 50;
pub const STRIPS: usize = 20;
pub const COMPOSITIONS: usize = 30;

/// `LINE_GRAPHS + CIRCULAR + STRIPS + COMPOSITIONS` seeded claw-free graphs:
/// line graphs of random multigraphs (`n <= 30`, `Δ <= 6`), circular interval
/// graphs, linear interval strips and strip compositions.
pub fn random_corpus(seed: u64) -> Result<Vec<Instance>> {
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::new();
    for i in 0..LINE_GRAPHS {
        let n = rng.gen_range(4..=30);
        let delta = rng.gen_range(2..=6);
        let mmax = rng.gen_range(1..=3);
        let f = random_multigraph(n, delta, mmax, rng.gen())?;
        let id = format!("line-{i}-n{n}-d{delta}-m{mmax}");
        out.push(Instance {
            id,
            family: Family::LineGraph,
            graph: f.line_graph().graph,
        });
    }
    for i in 0..CIRCULAR {
        let n = rng.gen_range(5..=30);
        let period = rng.gen_range(8..=40);
        let arcs = rng.gen_range(3..=12);
        let rep = random_circular_rep(&mut rng, n, period, arcs)?;
        out.push(Instance {
            id: format!("circular-{i}-n{n}"),
            family: Family::CircularInterval,
            graph: rep.realize(),
        });
    }
    for i in 0..STRIPS {
        let n = rng.gen_range(4..=30);
        let strip = random_strip(&mut rng, n)?;
        out.push(Instance {
            id: format!("strip-{i}-n{n}"),
            family: Family::Strip,
            graph: strip.graph,
        });
    }
    for i in 0..COMPOSITIONS {
        let k = rng.gen_range(3..=6);
        let scheme = random_scheme(&mut rng, k, 6)?;
        let comp = compose_strips(&scheme)?;
        out.push(Instance {
            id: format!("composition-{i}-k{k}"),
            family: Family::Composition,
            graph: comp.graph,
        });
    }
    Ok(out)
}

/// The named instances followed by [`random_corpus`].
pub fn full_corpus(seed: u64) -> Result<Vec<Instance>> {
    let mut out: Vec<Instance> = NAMED_INSTANCES
        .iter()
        .map(|&name| {
            Ok(Instance {
                id: name.to_string(),
                family: Family::Named,
                graph: named_instance(name)?,
            })
        })
        .collect::<Result<_>>()?;
    out.extend(random_corpus(seed)?);
    Ok(out)
}

/// Random bag sizes in `1..=max_bag`, at least one of them at least 2.
pub fn random_bags<R: Rng>(rng: &mut R, len: usize, max_bag: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=max_bag)).collect();
    if sizes.iter().all(|&s| s < 2) && max_bag >= 2 {
        let i = rng.gen_range(0..len);
        sizes[i] = rng.gen_range(2..=max_bag);
    }
    sizes
}

/// Clique substitutions of `wheel(5)` and the icosahedron, alternating.
pub fn nonquasiline_substitutions(count: usize, seed: u64) -> Result<Vec<(Vec<usize>, SimpleGraph)>> {
    let mut rng = rng_from_seed(seed);
    let bases = [wheel(5), icosahedron()];
    (0..count)
        .map(|i| {
            let base = &bases[i % 2];
            let sizes = random_bags(&mut rng, base.n(), 3);
            let g = substitute(base, &sizes, BagMode::Clique)?;
            Ok((sizes, g))
        })
        .collect()
}

/// Clique substitutions of `base` with at least one bag of size 2 or more.
pub fn clique_substitutions(
    base: &SimpleGraph,
    count: usize,
    max_bag: usize,
    seed: u64,
) -> Result<Vec<(Vec<usize>, SimpleGraph)>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let sizes = random_bags(&mut rng, base.n(), max_bag);
            let g = substitute(base, &sizes, BagMode::Clique)?;
            Ok((sizes, g))
        })
        .collect()
}

/// Clique substitutions of `C_n²` for `n` in 7..=9; these are quasi-line
/// and not line graphs of multigraphs.
pub fn squared_cycle_substitutions(count: usize, seed: u64) -> Result<Vec<(usize, Vec<usize>, SimpleGraph)>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(7..=9);
            let sizes = random_bags(&mut rng, n, 2);
            let g = substitute(&cycle_power(n, 2)?, &sizes, BagMode::Clique)?;
            Ok((n, sizes, g))
        })
        .collect()
}

/// Random `Δ`-regular multigraphs with `Δ` drawn from `deltas` and an even
/// number of vertices between `Δ + 2` and `spread·Δ + 2`.
pub fn regular_multigraphs(
    count: usize,
    deltas: std::ops::RangeInclusive<usize>,
    spread: usize,
    seed: u64,
) -> Result<Vec<(usize, Multigraph)>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let delta = rng.gen_range(deltas.clone());
            let half = rng.gen_range(delta / 2 + 1..=(spread.max(1) * delta) / 2 + 1);
            let f = random_regular_multigraph(2 * half, delta, rng.gen())?;
            Ok((delta, f))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::find_claw;

    #[test]
    fn corpus_is_claw_free_and_deterministic() {
        let a = random_corpus(7).unwrap();
        assert_eq!(a.len(), LINE_GRAPHS + CIRCULAR + STRIPS + COMPOSITIONS);
        assert_eq!(a, random_corpus(7).unwrap());
        assert!(a.iter().all(|inst| find_claw(&inst.graph).is_none()));
    }

    #[test]
    fn regular_family() {
        for (d, f) in regular_multigraphs(10, 2..=5, 3, 1).unwrap() {
            assert!(f.is_regular(d));
            assert_eq!(f.n() % 2, 0);
        }
    }
}
