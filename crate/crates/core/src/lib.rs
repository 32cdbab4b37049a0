//! Constructive realization of odd-degree branch data as Hurwitz certificates for
//! indecomposable branched coverings over the projective plane, and over the sphere
//! when one branch point has type `[d−2,1,1]`.
//!
//! Every construction is checked by direct permutation arithmetic before it is returned,
//! and [`realize::verify_certificate`] re-derives all claims from the certificate alone.

pub mod datum;
pub mod eks;
pub mod error;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod realize;
mod search;

pub use error::{Error, Gate, Result};
pub use perm::{Partition, Permutation, PointSubset};
