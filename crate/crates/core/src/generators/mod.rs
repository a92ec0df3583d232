//! Graph families, each carrying the certificate it was built from.

pub mod composition;
pub mod families;
pub mod interval;
pub mod random;

pub use composition::{compose_pair, compose_strips, Composition, CompositionScheme, EndSide, EndSymbol};
pub use families::{
    bag_ranges, c5_blowup, c5_blowup_bags, complete_bipartite, cycle_power, f_of_delta, homogeneous_pair_gadget,
    icosahedron, named_instance, petersen, substitute, wheel, BagMode, NAMED_INSTANCES,
};
pub use interval::{realize_interval, IntervalKind, IntervalRep, Strip};
pub use random::{
    random_circular_rep, random_linear_rep, random_multigraph, random_regular_multigraph, random_scheme, random_strip,
    rng_from_seed,
};
