//! Exact checks of the quantitative statements behind the colouring bounds.
//! Every comparison is done on integers or `Ratio<i128>`.

mod cgtt;
mod config;
mod conjecture;
mod interval_bounds;
mod report;
mod sparsity;

pub use cgtt::{
    check_cgtt, enumerate_small_multigraphs, find_induced_2k2, is_2k2_free, multigraphs_isomorphic, CgttBranch,
    CgttVerdict,
};
pub use config::Config;
pub use conjecture::{
    check_conjecture_and_diameter2, check_lemma_cliquesecond, conjectured_bound, f_table_rows, CliqueSecondReport,
    ConjectureReport,
};
pub use interval_bounds::{check_circular_bound, check_strip_bound, IntervalBoundReport};
pub use report::{render, to_csv, CheckRow, Relation, CSV_HEADER, Q};
pub use sparsity::{edge_square_degree_identity, sparsity_report, SparsityCase, SparsityContext, SparsityReport};
