//! Conflict-free connection colorings of graphs.
//!
//! An edge-colored graph is conflict-free connected when every two vertices
//! are joined by a path on which some color occurs exactly once; `cfc(G)` is
//! the fewest colors achieving this. The crate provides block and cut-edge
//! structure, the explicit two-coloring for graphs whose cut edges are
//! sufficiently sparse, exhaustive verification and exact search for small
//! graphs, generators for the extremal families, and executable checks of
//! the degree-condition theorems.

pub mod coloring;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod linkage;
pub mod solver;
pub mod theorems;

pub use coloring::{
    cfc_path_formula, construct_two_coloring, is_conflict_free_path, normalize_coloring,
    two_coloring, verify_conflict_free_connected, verify_with, CfcVerdict, Color, EdgeColoring,
    VerifyStrategy,
};
pub use decomposition::{
    block_decomposition, count_cut_edges, cut_edge_profile, find_cut_edges, select_block_matching,
    Block, BlockCutTree, BlockDecomposition, BlockMatching, CutEdgeComponent, CutEdgeProfile,
};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{canonical, Edge, Graph, VertexDegreeView};
pub use linkage::verify_conflict_free_connected_linkage;
pub use solver::{
    cfc_bracket, exact_cfc, exact_cfc_with, exists_two_coloring, exists_two_coloring_with, Budget,
    CfcResult, Method, SearchStats, SolverOptions, TwoColoringOutcome,
};
pub use theorems::{TheoremCheck, TheoremId, TheoremReport};
