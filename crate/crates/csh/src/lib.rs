//! Degree-0 chromatic symmetric homology of small graphs.
//!
//! The library computes `H_{i,0}(G; C)` as an explicit table of Specht-module
//! multiplicities, using a chain complex built from tabloid bases of
//! permutation modules and isotypic-projection rank computations in exact or
//! multi-modular arithmetic. Closed-form multiplicity formulas for star
//! graphs are provided alongside the generic oracle so the two routes can be
//! cross-validated.

pub mod chain;
pub mod character;
pub mod comb;
pub mod csf;
pub mod graph;
pub mod partition;
pub mod sparse;
pub mod star;
pub mod tableau;
pub mod tabloid;

pub use chain::{
    boundary_matrix, chain_layer, chain_multiplicity, homology_multiplicities, ChainLayer,
    HomologyOutput, MultiplicityTable, OracleConfig, OracleError,
};
pub use character::{character, class_size, ClassLabel};
pub use graph::{Graph, GraphError, SpanningSubgraph};
pub use partition::{partitions_of, Partition, PartitionError};
pub use sparse::{RankMode, SparseMatrix};
pub use star::{
    check_conjecture, mult_general, mult_hook_case, mult_two_column, predict_h10_star,
    reference_h10_table, ConjectureReport, Prediction, StarError, StarShape, Violation,
};
pub use tableau::{enumerate_ssyt, enumerate_syt, f_syt, hook_lengths, kostka, Tableau};
pub use tabloid::Tabloid;
