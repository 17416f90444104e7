//! Abstract multigraphs and their chromatic polynomial, computed both by
//! deletion-contraction (with memoization on a canonical form) and by the
//! rank-sum expansion over edge subsets. Also the chromatic polynomial of
//! the planar dual of an embedded graph.

mod canon;
mod chromatic;
mod multigraph;

pub use canon::canonical_form;
pub use chromatic::{
    brute_force_colorings, chromatic_delcon, chromatic_ranksum, dual_chromatic, ChromaticCache,
    GraphPolyError,
};
pub use multigraph::Multigraph;
