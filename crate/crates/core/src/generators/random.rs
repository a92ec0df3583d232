//! Seeded random families: multigraphs, interval representations, strips
//! and composition schemes.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generators::composition::{CompositionScheme, EndSymbol};
use crate::generators::interval::{IntervalRep, Strip};
use crate::graph::{Multigraph, Vertex};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random loopless multigraph with maximum degree at most `delta` and
/// multiplicities at most `mmax`. Pairs are drawn uniformly and kept when
/// both degree and multiplicity caps allow it.
pub fn random_multigraph(n: usize, delta: usize, mmax: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 || mmax == 0 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2 and mmax >= 1 (n={n}, mmax={mmax})"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut deg = vec![0usize; n];
    let mut mult: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for _ in 0..n * delta * 4 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || deg[u] >= delta || deg[v] >= delta {
            continue;
        }
        let m = mult.entry((u.min(v), u.max(v))).or_insert(0);
        if *m < mmax {
            *m += 1;
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Multigraph::from_multiplicities(n, mult.into_iter().map(|((u, v), k)| (u, v, k)))
}

/// Random `delta`-regular loopless multigraph. Even `n`: union of `delta`
/// random perfect matchings. Odd `n` with even `delta`: union of `delta/2`
/// random Hamiltonian cycles.
pub fn random_regular_multigraph(n: usize, delta: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("need n >= 2, got {n}")));
    }
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    let mut edges = Vec::with_capacity(n * delta / 2);
    if n.is_multiple_of(2) {
        for _ in 0..delta {
            order.shuffle(&mut rng);
            edges.extend(order.chunks(2).map(|p| (p[0], p[1])));
        }
    } else if delta.is_multiple_of(2) && n >= 3 {
        for _ in 0..delta / 2 {
            order.shuffle(&mut rng);
            edges.extend((0..n).map(|i| (order[i], order[(i + 1) % n])));
        }
    } else {
        return Err(Error::InvalidParameters(format!(
            "no {delta}-regular multigraph on {n} vertices"
        )));
    }
    Multigraph::from_edge_list(n, edges)
}

/// Random circular representation of `n` points on a circle of length
/// `period`, with `arcs` arcs of length below `period / 2`.
pub fn random_circular_rep<R: Rng>(rng: &mut R, n: usize, period: i64, arcs: usize) -> Result<IntervalRep> {
    if period < 2 {
        return Err(Error::InvalidParameters(format!("period {period} too small")));
    }
    let positions = (0..n).map(|_| rng.gen_range(0..period)).collect();
    let intervals = (0..arcs)
        .map(|_| {
            let s = rng.gen_range(0..period);
            let len = rng.gen_range(0..(period / 2).max(1));
            (s, (s + len) % period)
        })
        .collect();
    IntervalRep::circular(period, positions, intervals)
}

/// Random linear representation on `0..=span`.
pub fn random_linear_rep<R: Rng>(rng: &mut R, n: usize, span: i64, intervals: usize) -> Result<IntervalRep> {
    if span < 1 {
        return Err(Error::InvalidParameters(format!("span {span} too small")));
    }
    let positions = (0..n).map(|_| rng.gen_range(0..=span)).collect();
    let ivs = (0..intervals)
        .map(|_| {
            let s = rng.gen_range(0..=span);
            let e = rng.gen_range(s..=(s + span / 2).min(span));
            (s, e)
        })
        .collect();
    IntervalRep::linear(positions, ivs)
}

/// Random linear interval strip on `n >= 2` vertices.
pub fn random_strip<R: Rng>(rng: &mut R, n: usize) -> Result<Strip> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("a strip needs 2 vertices, got {n}")));
    }
    let span = 2 * n as i64;
    let rep = random_linear_rep(rng, n, span, n)?;
    Strip::from_rep(rep)
}

/// Random composition scheme with `k` strips of `2..=max_strip` vertices
/// each; end symbols are dealt into at most `k` base cliques.
pub fn random_scheme<R: Rng>(rng: &mut R, k: usize, max_strip: usize) -> Result<CompositionScheme> {
    if k < 3 || max_strip < 2 {
        return Err(Error::InvalidParameters(format!(
            "need k >= 3 and strips of >= 2 vertices (k={k})"
        )));
    }
    let strips = (0..k)
        .map(|_| {
            let n = rng.gen_range(2..=max_strip);
            random_strip(rng, n)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut symbols: Vec<EndSymbol> = (0..k).flat_map(|i| [EndSymbol::a(i), EndSymbol::b(i)]).collect();
    symbols.shuffle(rng);
    let mut base_cliques = vec![Vec::new(); k];
    for sym in symbols {
        base_cliques[rng.gen_range(0..k)].push(sym);
    }
    base_cliques.retain(|c: &Vec<EndSymbol>| !c.is_empty());
    Ok(CompositionScheme { base_cliques, strips })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertex_cubic_is_a_triple_edge() {
        let f = random_regular_multigraph(2, 3, 7).unwrap();
        assert_eq!(f.multiplicity(0, 1), 3);
        assert_eq!(f.pair_count(), 1);
    }

    #[test]
    fn regular_degrees_are_exact() {
        for seed in 0..20 {
            assert!(random_regular_multigraph(6, 2, seed).unwrap().is_regular(2));
            assert!(random_regular_multigraph(7, 4, seed).unwrap().is_regular(4));
            assert!(random_regular_multigraph(10, 9, seed).unwrap().is_regular(9));
        }
        assert!(random_regular_multigraph(7, 3, 0).is_err());
        assert!(random_regular_multigraph(1, 2, 0).is_err());
    }

    #[test]
    fn capped_multigraphs() {
        for seed in 0..20 {
            let f = random_multigraph(10, 5, 2, seed).unwrap();
            assert!(f.max_degree() <= 5);
            assert!(f.pairs().all(|(_, k)| k <= 2));
        }
        assert_eq!(
            random_multigraph(10, 5, 2, 3).unwrap(),
            random_multigraph(10, 5, 2, 3).unwrap()
        );
    }

    #[test]
    fn random_schemes_validate() {
        let mut rng = rng_from_seed(11);
        for _ in 0..50 {
            let s = random_scheme(&mut rng, 4, 5).unwrap();
            s.validate().unwrap();
        }
    }
}
