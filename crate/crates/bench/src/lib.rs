//! Fixed inputs shared by the benchmarks.

use clawsquare::corpus::{random_corpus, Family};
use clawsquare::generators::{random_multigraph, random_regular_multigraph};
use clawsquare::{Multigraph, SimpleGraph};

pub const SEED: u64 = 7;

/// Line graph of a random multigraph with `n` vertices and `Δ <= 6`.
pub fn line_graph(n: usize) -> SimpleGraph {
    random_multigraph(n, 6, 2, SEED)
        .expect("valid parameters")
        .line_graph()
        .graph
}

pub fn regular(n: usize, delta: usize) -> Multigraph {
    random_regular_multigraph(n, delta, SEED).expect("even n")
}

/// The first `count` corpus graphs of one family.
pub fn corpus_family(family: Family, count: usize) -> Vec<SimpleGraph> {
    random_corpus(SEED)
        .expect("corpus builds")
        .into_iter()
        .filter(|i| i.family == family)
        .take(count)
        .map(|i| i.graph)
        .collect()
}
