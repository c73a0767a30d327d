//! Exact arithmetic for Paley graphs of square order.
//!
//! The crate builds GF(q) and GF(q^2) with canonical defining data, models
//! the affine plane AG(2,q) sitting inside GF(q^2), constructs maximal
//! cliques and independent sets of size (q + (q mod 4)) / 2, verifies the
//! linear-fractional correspondences between them, and classifies all
//! target-size maximal cliques up to automorphism.

pub mod affine_plane;
pub mod census;
pub mod cli;
pub mod constructions;
pub mod display;
pub mod error;
pub mod gf_base;
pub mod gf_ext;
pub mod moebius;
pub mod paley;
pub mod verify;

pub use error::{Error, Result};
pub use gf_base::{BaseElement, BaseField};
pub use gf_ext::{ExtElement, ExtField};
pub use paley::{PaleyGraph, SetKind, VertexSet};
