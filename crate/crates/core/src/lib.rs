//! Exact lattice-polytope toolkit for multifold symplectic cuts.
//!
//! The crate works entirely in exact arithmetic: arbitrary precision
//! integers and rationals, no floating point. It provides
//!
//! * [`lattice`]: Hermite normal form, primitivity, saturation and
//!   direct-sum tests for sublattices of `Z^k`,
//! * [`polytope`]: compact rational polytopes with double-description
//!   conversion between halfspaces and vertices, and face queries,
//! * [`delzant`]: smooth-vertex and Delzant checks,
//! * [`cut`]: cutting data `(xi_i, eps_i)`, the induced subdivision of a
//!   polytope and the two quasi-regularity criteria,
//! * [`degeneration`]: the lifted polytope between the graph of
//!   `-min_i L_i` and the hyperplane `u = a`, its normal fan and the
//!   projection to the fan of `P^1`,
//! * [`toric2d`]: self-intersection numbers of edges of smooth polygons and
//!   a small classifier for toric surfaces.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cut;
pub mod degeneration;
pub mod delzant;
pub mod lattice;
mod linalg;
pub mod num;
pub mod polytope;
pub mod toric2d;

pub use cut::{CutData, CutDatum, Subdivision};
pub use num::{Int, IntVector, Rat, RatVector};
pub use polytope::{Face, HalfSpace, Polytope};

/// Default cap on the ambient rank accepted by front ends.
pub const DEFAULT_MAX_RANK: usize = 8;
