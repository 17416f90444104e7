//! Exact computations in the planar diagram algebras that tie the chromatic
//! polynomial to link invariants: the chromatic algebra on planar partitions,
//! the Temperley-Lieb algebra, the SO(3) skein algebra of tangles, and the
//! Potts-model partition function they both shadow.
//!
//! All algebraic identities are computed over exact rationals; floating point
//! appears only in the spectral analysis of Gram matrices.

pub mod arith;
pub mod planar;
pub mod graphs;
pub mod algebra;
pub mod tl;
pub mod bmw;
pub mod potts;
