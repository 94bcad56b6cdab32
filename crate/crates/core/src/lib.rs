//! Exact GIT stability for double-sided rank-2 torus actions on the affine
//! closure `M̄ = {(z, w) ∈ ℂ³ × ℂ³ : Σ zᵢwᵢ = 0}` of `SL(3,ℂ)/U`.
//!
//! * [`cone`]: exact cones in ℝ² with integer generators.
//! * [`stability`]: weight data, the Hilbert–Mumford weight, the two stability
//!   classifiers, and the fan conditions.
//! * [`graded`]: dimensions of the graded pieces of the invariant ring.
//! * [`harness`]: cross-checks between independent routes and the moment map.
//! * [`cli`]: the `torus-git` command line.

pub mod cli;
pub mod cone;
pub mod graded;
pub mod harness;
pub mod stability;
pub mod vec2;

pub use cone::{strictly_separates, Cone2, ConeError, Shape};
pub use graded::{dim_graded_piece, find_invariant_monomial, hilbert_table, GradedError, Monomial};
pub use stability::{
    check_star, check_star_prime, classify_cone, classify_hm, in_apex_regime, mu_chi,
    r0_is_trivial, sigma_cone, weights_from_biquotient, DatumError, OnePS, StabilityClass,
    SupportPattern, WeightDatum,
};
pub use vec2::IntVec2;
