//! Local Fourier transforms of the height on `G ≅ G_a^2` and the
//! Poisson-summation form of the leading constant.

pub mod archimedean;
pub mod padic;
pub mod poisson;

use crate::arith::valuation_i64;

pub use archimedean::{hhat_inf, hhat_inf_2d, hhat_inf_reduced, i_integral, ArchValue};
pub use padic::{
    hhat_p_annulus, hhat_p_closed, hhat_p_components, hhat_p_grid_oracle, t_h_integral, unit_integral, AnnulusValue,
    GridParams, PadicComponents, PadicTruncation,
};
pub use poisson::{
    e_m, lattice_ordering_identity, poisson_constant, poisson_identity_check, sigma_minus2, EmValue, IdentityCheck,
    LatticeOrdering, PoissonConstant, SigmaMinus2,
};

/// A character index `a = (a1, a2)` of `G_a^2(Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CharIndex {
    pub a1: i64,
    pub a2: i64,
}

impl CharIndex {
    pub fn new(a1: i64, a2: i64) -> Self {
        CharIndex { a1, a2 }
    }

    /// `v_p(a1)`, `None` when `a1 = 0`.
    pub fn v1(&self, p: u64) -> Option<u32> {
        valuation_i64(self.a1, p)
    }

    /// `α = v_p(a2)`, `None` (infinite) when `a2 = 0`.
    pub fn alpha(&self, p: u64) -> Option<u32> {
        valuation_i64(self.a2, p)
    }
}
