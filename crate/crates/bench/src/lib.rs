//! Shared fixtures for the criterion benchmarks.

use sasaki_core::{FrameVector, SpaceForm};

/// A right-handed frame that is neither Legendre nor aligned with the fibre.
pub fn generic_frame() -> [FrameVector; 3] {
    let (a, b) = (0.7_f64, 0.45_f64);
    let p1 = FrameVector::new(a.cos() * b.cos(), a.sin() * b.cos(), b.sin());
    let p2 = FrameVector::new(-a.sin(), a.cos(), 0.0);
    [p1, p2, p1.cross(&p2)]
}

/// Sample count covering `[0, length]` with step `h`.
pub fn samples(length: f64, h: f64) -> usize {
    (length / h).round() as usize + 1
}

pub fn berger_sphere() -> SpaceForm {
    SpaceForm::new(5.0)
}
