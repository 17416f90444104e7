//! Embedded planar graphs as combinatorial maps: darts, an edge involution
//! `alpha`, and a counterclockwise rotation `sigma` at each vertex. Graphs
//! live either in a rectangle with marked boundary points (bottom points
//! left to right, then top points right to left, forming one cyclic order)
//! or in the sphere (no boundary).
//!
//! Isotopy classes are exactly map-isomorphism classes, so no coordinates
//! are stored. Components that are plain circles carry no darts and are
//! tracked by a counter, as are isolated vertices.

mod builder;
mod canon;
mod io;
mod map;
pub mod random;

pub use builder::MapBuilder;
pub use canon::CanonKey;
pub use io::{parse_graph, render_graph, GraphParseError};
pub use map::{EmbeddedGraph, Face, MapError};
