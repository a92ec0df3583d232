//! Structural predicates: claws, two-clique covers, line graphs of
//! multigraphs and homogeneous pairs of cliques.

mod claw;
mod cover;
mod homogeneous;
mod krausz;

pub use claw::{find_claw, find_stable_triple};
pub(crate) use cover::complement_sides;
pub use cover::{is_quasi_line, quasi_line_violation, two_clique_cover};
pub use homogeneous::{find_homogeneous_pair, HomogeneousPair, HOMOGENEOUS_PAIR_MAX_N};
pub use krausz::{krausz_partition, KrauszCertificate};
