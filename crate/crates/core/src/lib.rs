//! Decision procedures for degree-one maps between closed oriented
//! 4-manifolds with cyclic fundamental group.
//!
//! The crate is layered bottom-up:
//!
//! - [`intforms`]: unimodular integer forms, classification and split-off.
//! - [`modtwo`]: nondegenerate symmetric forms over GF(2).
//! - [`laurent`]: hermitian forms over `Z[t, t⁻¹]`.
//! - [`manifolds`]: manifold descriptors, connected sums and decompositions.
//! - [`domination`]: three-valued 1-domination decisions and enumerations.
//! - [`wire`]: the JSON wire format and built-in names.

pub mod domination;
pub mod intforms;
pub mod laurent;
pub mod manifolds;
pub mod modtwo;
pub mod wire;
