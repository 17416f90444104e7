//! The Temperley-Lieb algebra in its planar presentation: noncrossing
//! perfect matchings with loop weight `d`, the Markov trace, the doubling
//! homomorphism from the chromatic algebra, and the Potts transfer matrix.

mod diagram;
mod ops;
mod phi;
mod rank;
mod transfer;

pub use diagram::{enumerate_diagrams, TLDiagram, TLElement};
pub use ops::{generator_e, jones_wenzl_p2, tl_identity, tl_multiply, tl_trace};
pub use phi::{phi, phi_element, PhiError, PHI_EDGE_LIMIT};
pub use rank::phi_rank;
pub use transfer::{potts_tl_partition, transfer_matrix};
