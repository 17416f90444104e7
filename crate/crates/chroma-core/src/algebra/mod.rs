//! The chromatic algebra on `n` strands: planar-partition basis diagrams,
//! reduction of embedded graphs by the contraction-deletion relations, the
//! edge-subset state sum, multiplication by stacking, the Markov trace whose
//! value is a chromatic polynomial of a dual graph, and the trace pairing.

mod element;
mod gram;
mod ops;
mod partition;
mod psi;
mod reduce;
mod trivalent;

pub use element::ChromaticElement;
pub use gram::{gram_eigenvalues, gram_matrix, inner_product_table};
pub use ops::{close_rightmost, inner_product, multiply, reflect, trace};
pub use partition::{enumerate_basis, PlanarPartition};
pub use psi::{psi_expansion, PSI_EDGE_LIMIT};
pub use reduce::Reducer;
pub use trivalent::{verify_trivalent_relations, RelationCheck, RelationReport};
