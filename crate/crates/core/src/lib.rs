//! Numerical toolkit for 3-dimensional Sasakian space forms `M^3(c)`.
//!
//! The ambient space is modelled by a left-invariant orthonormal frame on a
//! Lie group ([`spaceform`]). Curves live in frame coordinates
//! ([`curves`]); mean-curvature operators along curves are in
//! [`operators`] and on Hopf cylinders in [`hopf`]. [`classify`] runs corpora
//! of curves and cylinders through those operators and reports eigenvalue
//! verdicts.

pub mod classify;
pub mod curves;
pub mod error;
pub mod frame;
pub mod hopf;
pub mod operators;
pub mod profile;
pub mod spaceform;
pub mod stencil;

pub use curves::{
    covariant_derivative, covariant_derivative_field, curvature_profile, extract_frenet, horizontal_lift,
    synthesize_frenet_curve, synthesize_legendre_curve, FrenetData, SampledCurve,
};
pub use error::{GeometryError, Result};
pub use frame::{FrameField, FrameVector};
pub use operators::{eigen_residual, ComponentSamples, EigenFit, OperatorValue};
pub use profile::Profile;
pub use spaceform::SpaceForm;

/// Curvature below which a sample counts as geodesic.
pub const KAPPA_FLOOR: f64 = 1e-7;

/// Residual tolerance for eigen verdicts on a grid of step `h`:
/// `max(1e-6, 50 h^2)`, tied to the second-order stencils.
pub fn default_tolerance(h: f64) -> f64 {
    (50.0 * h * h).max(1e-6)
}
