//! Point counting and constant verification for the Cayley ruled cubic
//! surface `t0*t1*t2 - t0^2*t3 - t1^3 = 0`.
//!
//! The crate is organised by capability:
//!
//! * [`geometry`] — exact algebra of the surface, its resolution, the ruling
//!   by lines and the additive group acting on it;
//! * [`heights`] — exact anticanonical heights;
//! * [`enumeration`] — exact counts of points of bounded height, by direct
//!   search and line by line;
//! * [`constants`] — the leading constant as a lattice series and as a sum of
//!   Tamagawa volumes;
//! * [`local_zeta`] — local Fourier transforms of the height and the
//!   Poisson-summation form of the constant;
//! * [`report`] — machine-readable reports and the verification harness.
//!
//! See the `examples/` directory for one runnable program per capability.

// `!(x > 0.0)` guards are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arith;
pub mod constants;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod heights;
pub mod local_zeta;
pub mod quadrature;
pub mod report;

pub use error::{Error, Result};
pub use geometry::{GroupPoint, LineIndex, LineParam, ProjPoint, ScrollPoint};
pub use heights::HeightBound;
pub use local_zeta::CharIndex;
