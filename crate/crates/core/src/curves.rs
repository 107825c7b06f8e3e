//! Unit-speed curves in frame coordinates.
//!
//! A curve is carried by its velocity coefficients on a uniform arclength
//! grid; positions are never needed because every operator is expressed
//! through the covariant derivative
//!
//! ```text
//! (nabla_{gamma'} V)^k = dV^k/ds + sum_ij u^i V^j Gamma^k_ij,   u = gamma'
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::frame::{FrameField, FrameVector};
use crate::spaceform::SpaceForm;
use crate::stencil::{first_derivative_o4, midpoint_cubic, second_derivative_o4};
use crate::KAPPA_FLOOR;

/// Minimum number of grid samples for any curve.
pub const MIN_SAMPLES: usize = 5;

const UNIT_SPEED_TOL: f64 = 1e-9;
const ORTHONORMAL_TOL: f64 = 1e-8;

/// A unit-speed curve sampled at `s_i = i h`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledCurve {
    h: f64,
    velocity: Vec<FrameVector>,
    legendre: bool,
}

impl SampledCurve {
    /// Validates unit speed and, for Legendre curves, `eta(gamma') = 0`.
    pub fn new(h: f64, velocity: Vec<FrameVector>, legendre: bool) -> Result<Self> {
        check_grid(h, velocity.len())?;
        for (i, v) in velocity.iter().enumerate() {
            let speed = v.norm();
            if !((speed - 1.0).abs() <= UNIT_SPEED_TOL) {
                return Err(GeometryError::NotUnitSpeed { index: i, speed });
            }
            if legendre && v[2].abs() > UNIT_SPEED_TOL {
                return Err(GeometryError::NotHorizontal { index: i, eta: v[2] });
            }
        }
        Ok(SampledCurve { h, velocity, legendre })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n(&self) -> usize {
        self.velocity.len()
    }

    pub fn velocity(&self) -> &[FrameVector] {
        &self.velocity
    }

    pub fn is_legendre(&self) -> bool {
        self.legendre
    }

    pub fn arclength(&self, i: usize) -> f64 {
        i as f64 * self.h
    }

    pub fn velocity_field(&self) -> FrameField {
        FrameField::full(self.velocity.clone())
    }
}

/// Curvature, torsion and Frenet frame sampled along a curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrenetData {
    pub h: f64,
    pub kappa: Vec<f64>,
    /// `None` for extracted geodesics, where `p2` is not determined by the curve.
    pub tau: Option<Vec<f64>>,
    pub p1: Vec<FrameVector>,
    pub p2: Vec<FrameVector>,
    pub p3: Vec<FrameVector>,
    /// Set when an extracted torsion sample is negative.
    pub negative_torsion: bool,
}

impl FrenetData {
    pub fn n(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_geodesic(&self) -> bool {
        self.kappa.iter().all(|k| k.abs() < KAPPA_FLOOR)
    }

    /// Torsion samples, with zero standing in for the undefined torsion of a geodesic.
    pub fn tau_or_zero(&self) -> Vec<f64> {
        self.tau.clone().unwrap_or_else(|| vec![0.0; self.n()])
    }

    pub fn frame(&self, i: usize) -> [FrameVector; 3] {
        [self.p1[i], self.p2[i], self.p3[i]]
    }

    /// Largest deviation of `(p1, p2, p3)` from a right-handed orthonormal frame.
    pub fn orthonormality_residual(&self) -> f64 {
        (0..self.n()).map(|i| gram_residual(&self.frame(i))).fold(0.0, f64::max)
    }

    /// Largest Frenet-Serret residual at interior samples, measured with
    /// the second-order covariant derivative.
    pub fn frenet_serret_residual(&self, sf: &SpaceForm, curve: &SampledCurve) -> Result<f64> {
        let tau = self.tau_or_zero();
        let fields = [
            FrameField::full(self.p1.clone()),
            FrameField::full(self.p2.clone()),
            FrameField::full(self.p3.clone()),
        ];
        let mut worst = 0.0_f64;
        for i in 1..self.n() - 1 {
            let d1 = covariant_derivative(sf, curve, &fields[0], i)?;
            let d2 = covariant_derivative(sf, curve, &fields[1], i)?;
            let d3 = covariant_derivative(sf, curve, &fields[2], i)?;
            let (k, t) = (self.kappa[i], tau[i]);
            let r1 = d1 - k * self.p2[i];
            let r2 = d2 + k * self.p1[i] - t * self.p3[i];
            let r3 = d3 + t * self.p2[i];
            worst = worst.max(r1.norm()).max(r2.norm()).max(r3.norm());
        }
        Ok(worst)
    }
}

fn check_grid(h: f64, n: usize) -> Result<()> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(GeometryError::InvalidStep(h));
    }
    if n < MIN_SAMPLES {
        return Err(GeometryError::TooFewSamples { n, min: MIN_SAMPLES });
    }
    Ok(())
}

/// Deviation of a frame from right-handed orthonormality: max over the
/// Gram matrix entries and the orientation `p3 = p1 x p2`.
pub fn gram_residual(frame: &[FrameVector; 3]) -> f64 {
    let mut worst = 0.0_f64;
    for a in 0..3 {
        for b in 0..3 {
            let target = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((frame[a].dot(&frame[b]) - target).abs());
        }
    }
    let orient = frame[0].cross(&frame[1]) - frame[2];
    if !worst.is_finite() {
        return f64::INFINITY;
    }
    worst.max(orient.max_abs())
}

fn gram_schmidt(frame: &mut [FrameVector; 3]) {
    let p1 = frame[0] * (1.0 / frame[0].norm());
    let p2 = frame[1] - p1.dot(&frame[1]) * p1;
    let p2 = p2 * (1.0 / p2.norm());
    frame[0] = p1;
    frame[1] = p2;
    frame[2] = p1.cross(&p2);
}

/// Second-order covariant derivative `nabla_{gamma'} V` at interior sample `i`.
pub fn covariant_derivative(
    sf: &SpaceForm,
    curve: &SampledCurve,
    field: &FrameField,
    i: usize,
) -> Result<FrameVector> {
    let n = curve.n();
    let interior = i >= 1 && i + 1 < n;
    let (prev, here, next) = match (interior, i.checked_sub(1).and_then(|p| field.at(p)), field.at(i), field.at(i + 1)) {
        (true, Some(a), Some(b), Some(c)) => (a, b, c),
        _ => {
            return Err(GeometryError::NeedsInteriorSample {
                index: i,
                first: field.first.max(1),
                end: field.end().min(n.saturating_sub(1)),
            })
        }
    };
    let u = curve.velocity[i];
    Ok((next - prev) * (0.5 / curve.h) + sf.contract(&u, &here))
}

/// [`covariant_derivative`] at every sample where the stencil fits.
pub fn covariant_derivative_field(sf: &SpaceForm, curve: &SampledCurve, field: &FrameField) -> Result<FrameField> {
    let lo = (field.first + 1).max(1);
    let hi = field.end().saturating_sub(1).min(curve.n().saturating_sub(1));
    if lo >= hi {
        return Err(GeometryError::TooFewSamples { n: field.len(), min: 3 });
    }
    let values = (lo..hi)
        .map(|i| covariant_derivative(sf, curve, field, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(FrameField::new(lo, values))
}

/// Fourth-order covariant derivative of a full-grid field, defined at every sample.
fn covariant_derivative_o4(sf: &SpaceForm, curve: &SampledCurve, values: &[FrameVector]) -> Vec<FrameVector> {
    (0..values.len())
        .map(|i| first_derivative_o4(values, curve.h, i) + sf.contract(&curve.velocity[i], &values[i]))
        .collect()
}

type FrameState = [FrameVector; 3];

fn frenet_rhs(sf: &SpaceForm, p: &FrameState, kappa: f64, tau: f64) -> FrameState {
    let u = p[0];
    [
        kappa * p[1] - sf.contract(&u, &p[0]),
        -kappa * p[0] + tau * p[2] - sf.contract(&u, &p[1]),
        -tau * p[1] - sf.contract(&u, &p[2]),
    ]
}

fn axpy(p: &FrameState, k: &FrameState, a: f64) -> FrameState {
    [p[0] + a * k[0], p[1] + a * k[1], p[2] + a * k[2]]
}

/// Integrates the Frenet-Serret system with classic RK4 and Gram-Schmidt
/// re-orthonormalisation after every step.
///
/// `nodes(i)` returns `(kappa, tau)` at `s_i`, `s_i + h/2` and `s_i + h`.
fn integrate_frenet<F>(sf: &SpaceForm, initial: FrameState, h: f64, n: usize, nodes: F) -> Vec<FrameState>
where
    F: Fn(usize) -> [(f64, f64); 3],
{
    let mut frames = Vec::with_capacity(n);
    let mut p = initial;
    gram_schmidt(&mut p);
    frames.push(p);
    for i in 0..n - 1 {
        let [(k0, t0), (km, tm), (k1, t1)] = nodes(i);
        let a = frenet_rhs(sf, &p, k0, t0);
        let b = frenet_rhs(sf, &axpy(&p, &a, 0.5 * h), km, tm);
        let c = frenet_rhs(sf, &axpy(&p, &b, 0.5 * h), km, tm);
        let d = frenet_rhs(sf, &axpy(&p, &c, h), k1, t1);
        for j in 0..3 {
            p[j] += (h / 6.0) * (a[j] + 2.0 * b[j] + 2.0 * c[j] + d[j]);
        }
        gram_schmidt(&mut p);
        frames.push(p);
    }
    frames
}

/// Synthesises a Frenet curve with prescribed curvature and torsion by
/// integrating the frame ODE
/// `dp_i/ds = (Frenet terms) - Gamma(p1, p_i)` from `initial_frame`.
///
/// The returned [`FrenetData`] carries the prescribed `kappa`, `tau`
/// samples and the integrated frame.
pub fn synthesize_frenet_curve<K, T>(
    sf: &SpaceForm,
    kappa: K,
    tau: T,
    initial_frame: [FrameVector; 3],
    h: f64,
    n: usize,
) -> Result<(SampledCurve, FrenetData)>
where
    K: Fn(f64) -> f64,
    T: Fn(f64) -> f64,
{
    check_grid(h, n)?;
    let residual = gram_residual(&initial_frame);
    if !(residual <= ORTHONORMAL_TOL) {
        return Err(GeometryError::NonOrthonormalFrame { residual });
    }
    let kappa_s: Vec<f64> = (0..n).map(|i| kappa(i as f64 * h)).collect();
    let tau_s: Vec<f64> = (0..n).map(|i| tau(i as f64 * h)).collect();
    if let Some((index, &value)) = kappa_s.iter().enumerate().find(|(_, k)| **k < 0.0) {
        return Err(GeometryError::NegativeCurvature { index, value });
    }
    let frames = integrate_frenet(sf, initial_frame, h, n, |i| {
        let s = i as f64 * h;
        let mid = s + 0.5 * h;
        [(kappa_s[i], tau_s[i]), (kappa(mid), tau(mid)), (kappa_s[i + 1], tau_s[i + 1])]
    });
    let legendre = frames.iter().all(|f| f[0][2].abs() <= UNIT_SPEED_TOL);
    let velocity: Vec<FrameVector> = frames.iter().map(|f| f[0]).collect();
    let curve = SampledCurve { h, velocity, legendre };
    let fd = FrenetData {
        h,
        kappa: kappa_s,
        tau: Some(tau_s),
        p1: frames.iter().map(|f| f[0]).collect(),
        p2: frames.iter().map(|f| f[1]).collect(),
        p3: frames.iter().map(|f| f[2]).collect(),
        negative_torsion: false,
    };
    Ok((curve, fd))
}

/// Integrates `dp1/ds = kappa phi(p1) - Gamma(p1, p1)` for a horizontal unit
/// `p1`, re-projecting onto the contact distribution after each step.
/// `kappa` may be signed.
fn integrate_horizontal<F>(sf: &SpaceForm, h: f64, n: usize, nodes: F) -> Vec<FrameVector>
where
    F: Fn(usize) -> [f64; 3],
{
    let rhs = |p: FrameVector, k: f64| k * sf.phi(&p) - sf.contract(&p, &p);
    let project = |p: FrameVector| {
        let q = FrameVector::new(p[0], p[1], 0.0);
        q * (1.0 / q.norm())
    };
    let mut out = Vec::with_capacity(n);
    let mut p = FrameVector::e1();
    out.push(p);
    for i in 0..n - 1 {
        let [k0, km, k1] = nodes(i);
        let a = rhs(p, k0);
        let b = rhs(p + (0.5 * h) * a, km);
        let c = rhs(p + (0.5 * h) * b, km);
        let d = rhs(p + h * c, k1);
        p = project(p + (h / 6.0) * (a + 2.0 * b + 2.0 * c + d));
        out.push(p);
    }
    out
}

fn legendre_frenet(sf: &SpaceForm, h: f64, kappa: Vec<f64>, p1: Vec<FrameVector>) -> FrenetData {
    let n = kappa.len();
    FrenetData {
        h,
        tau: Some(vec![1.0; n]),
        p2: p1.iter().map(|p| sf.phi(p)).collect(),
        p3: vec![sf.xi(); n],
        p1,
        kappa,
        negative_torsion: false,
    }
}

/// Synthesises a Legendre curve starting tangent to `e1` with `p2 = phi p1`
/// and `p3 = xi`; its torsion is identically 1.
pub fn synthesize_legendre_curve<K>(sf: &SpaceForm, kappa: K, h: f64, n: usize) -> Result<(SampledCurve, FrenetData)>
where
    K: Fn(f64) -> f64,
{
    check_grid(h, n)?;
    let kappa_s: Vec<f64> = (0..n).map(|i| kappa(i as f64 * h)).collect();
    if let Some((index, &value)) = kappa_s.iter().enumerate().find(|(_, k)| **k < 0.0) {
        return Err(GeometryError::NegativeCurvature { index, value });
    }
    let p1 = integrate_horizontal(sf, h, n, |i| {
        [kappa_s[i], kappa((i as f64 + 0.5) * h), kappa_s[i + 1]]
    });
    let curve = SampledCurve { h, velocity: p1.clone(), legendre: true };
    Ok((curve, legendre_frenet(sf, h, kappa_s, p1)))
}

/// Horizontal lift of a base curve with signed curvature samples
/// `kappa_bar`; midpoint values come from cubic interpolation.
pub fn horizontal_lift(sf: &SpaceForm, kappa_bar: &[f64], h: f64) -> Result<(SampledCurve, FrenetData)> {
    check_grid(h, kappa_bar.len())?;
    let p1 = integrate_horizontal(sf, h, kappa_bar.len(), |i| {
        [kappa_bar[i], midpoint_cubic(kappa_bar, i), kappa_bar[i + 1]]
    });
    let curve = SampledCurve { h, velocity: p1.clone(), legendre: true };
    Ok((curve, legendre_frenet(sf, h, kappa_bar.to_vec(), p1)))
}

/// `|nabla_{gamma'} gamma'|` at every sample (fourth-order stencils).
/// Unlike [`extract_frenet`] this never needs the normal direction.
pub fn curvature_profile(sf: &SpaceForm, curve: &SampledCurve) -> Vec<f64> {
    covariant_derivative_o4(sf, curve, &curve.velocity)
        .iter()
        .map(FrameVector::norm)
        .collect()
}

/// Recovers curvature, torsion and Frenet frame from a sampled curve.
///
/// Derivatives use fourth-order stencils, so the round trip with
/// [`synthesize_frenet_curve`] is fourth-order accurate. Curves whose
/// curvature drops below [`KAPPA_FLOOR`] at some but not all samples are
/// rejected and must be split by the caller.
pub fn extract_frenet(sf: &SpaceForm, curve: &SampledCurve) -> Result<FrenetData> {
    let n = curve.n();
    let p1 = curve.velocity.clone();
    let accel = covariant_derivative_o4(sf, curve, &p1);
    let kappa: Vec<f64> = accel.iter().map(FrameVector::norm).collect();

    let flat: Vec<usize> = (0..n).filter(|&i| kappa[i] < KAPPA_FLOOR).collect();
    if flat.len() == n {
        // Geodesic: complete p1 to some orthonormal frame; torsion stays undefined.
        let (p2, p3): (Vec<_>, Vec<_>) = p1.iter().map(complete_frame).unzip();
        return Ok(FrenetData {
            h: curve.h,
            kappa: vec![0.0; n],
            tau: None,
            p1,
            p2,
            p3,
            negative_torsion: false,
        });
    }
    if let Some(&index) = flat.first() {
        return Err(GeometryError::FrenetDegenerate { index });
    }

    let p2: Vec<FrameVector> = accel.iter().zip(&kappa).map(|(a, k)| *a * (1.0 / k)).collect();
    let p3: Vec<FrameVector> = p1.iter().zip(&p2).map(|(a, b)| a.cross(b)).collect();
    // <nabla a, p3> = kappa tau, with nabla a expanded in u, u', u'' so that
    // every sample uses a single fourth-order stencil.
    let tau: Vec<f64> = (0..n)
        .map(|i| {
            let u = p1[i];
            let du = first_derivative_o4(&p1, curve.h, i);
            let ddu = second_derivative_o4(&p1, curve.h, i);
            let da = ddu + sf.contract(&du, &u) + sf.contract(&u, &du) + sf.contract(&u, &accel[i]);
            da.dot(&p3[i]) / kappa[i]
        })
        .collect();
    let negative_torsion = tau.iter().any(|t| *t < -KAPPA_FLOOR);
    Ok(FrenetData { h: curve.h, kappa, tau: Some(tau), p1, p2, p3, negative_torsion })
}

fn complete_frame(p1: &FrameVector) -> (FrameVector, FrameVector) {
    // Pick the frame axis least aligned with p1.
    let axis = (0..3)
        .min_by(|&a, &b| p1[a].abs().total_cmp(&p1[b].abs()))
        .map(FrameVector::basis)
        .unwrap_or_else(FrameVector::e1);
    let p2 = axis - p1.dot(&axis) * *p1;
    let p2 = p2 * (1.0 / p2.norm());
    (p2, p1.cross(&p2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic_frame() -> [FrameVector; 3] {
        let (a, b) = (0.4_f64, 0.9_f64);
        let p1 = FrameVector::new(a.cos() * b.cos(), a.sin() * b.cos(), b.sin());
        let p2 = FrameVector::new(-a.sin(), a.cos(), 0.0);
        [p1, p2, p1.cross(&p2)]
    }

    fn legendre_frame() -> [FrameVector; 3] {
        [FrameVector::e1(), FrameVector::e2(), FrameVector::xi()]
    }

    #[test]
    fn rejects_bad_grids_and_frames() {
        let sf = SpaceForm::new(1.0);
        let one = |_: f64| 1.0;
        assert!(matches!(
            synthesize_frenet_curve(&sf, one, one, legendre_frame(), 0.0, 10),
            Err(GeometryError::InvalidStep(_))
        ));
        assert!(matches!(
            synthesize_frenet_curve(&sf, one, one, legendre_frame(), 0.1, 4),
            Err(GeometryError::TooFewSamples { .. })
        ));
        let skew = [FrameVector::e1(), FrameVector::new(0.1, 1.0, 0.0), FrameVector::xi()];
        assert!(matches!(
            synthesize_frenet_curve(&sf, one, one, skew, 0.1, 10),
            Err(GeometryError::NonOrthonormalFrame { .. })
        ));
        let left_handed = [FrameVector::e1(), FrameVector::e2(), -FrameVector::xi()];
        assert!(synthesize_frenet_curve(&sf, one, one, left_handed, 0.1, 10).is_err());
        assert!(matches!(
            synthesize_legendre_curve(&sf, |s| s - 0.5, 0.1, 10),
            Err(GeometryError::NegativeCurvature { .. })
        ));
    }

    #[test]
    fn covariant_derivative_needs_interior() {
        let sf = SpaceForm::new(0.0);
        let (curve, _) = synthesize_legendre_curve(&sf, |_| 1.0, 0.01, 20).unwrap();
        let v = curve.velocity_field();
        assert!(matches!(
            covariant_derivative(&sf, &curve, &v, 0),
            Err(GeometryError::NeedsInteriorSample { .. })
        ));
        assert!(covariant_derivative(&sf, &curve, &v, 19).is_err());
        assert!(covariant_derivative(&sf, &curve, &v, 18).is_ok());
        let short = FrameField::new(5, curve.velocity()[5..8].to_vec());
        assert!(covariant_derivative(&sf, &curve, &short, 5).is_err());
        assert!(covariant_derivative(&sf, &curve, &short, 6).is_ok());
    }

    #[test]
    fn derivative_of_xi_is_minus_phi_velocity() {
        for c in [-7.0, -3.0, 1.0, 5.0] {
            let sf = SpaceForm::new(c);
            let (curve, _) =
                synthesize_frenet_curve(&sf, |s| 1.0 + s, |_| 0.5, generic_frame(), 0.01, 50).unwrap();
            let xi = FrameField::full(vec![FrameVector::xi(); 50]);
            for i in 1..49 {
                let d = covariant_derivative(&sf, &curve, &xi, i).unwrap();
                let expected = -sf.phi(&curve.velocity()[i]);
                assert!((d - expected).max_abs() < 1e-14);
            }
        }
    }

    #[test]
    fn geodesic_velocity_is_parallel() {
        let sf = SpaceForm::new(-7.0);
        let h = 1e-3;
        let (curve, fd) =
            synthesize_frenet_curve(&sf, |_| 0.0, |_| 0.0, generic_frame(), h, 400).unwrap();
        let accel = covariant_derivative_field(&sf, &curve, &curve.velocity_field()).unwrap();
        let worst = accel.values.iter().map(FrameVector::norm).fold(0.0, f64::max);
        assert!(worst < 50.0 * h * h, "{worst}");
        assert!(fd.is_geodesic());
    }

    #[test]
    fn helix_p1_derivative_is_kappa_p2() {
        let sf = SpaceForm::new(2.0);
        let h = 1e-3;
        let (curve, fd) = synthesize_frenet_curve(&sf, |_| 2.0, |_| 0.7, generic_frame(), h, 300).unwrap();
        let d = covariant_derivative_field(&sf, &curve, &FrameField::full(fd.p1.clone())).unwrap();
        for i in d.indices() {
            let diff = d.at(i).unwrap() - 2.0 * fd.p2[i];
            assert!(diff.norm() < 50.0 * h * h);
        }
        assert!(fd.frenet_serret_residual(&sf, &curve).unwrap() < 50.0 * h * h);
        assert!(fd.orthonormality_residual() < 1e-12);
    }

    #[test]
    fn legendre_helix_from_frenet_integration() {
        let sf = SpaceForm::new(2.0);
        let (curve, _) = synthesize_frenet_curve(&sf, |_| 1.0, |_| 1.0, legendre_frame(), 1e-3, 1001).unwrap();
        assert!(curve.is_legendre());
        let fd = extract_frenet(&sf, &curve).unwrap();
        let tau = fd.tau.as_ref().unwrap();
        for i in 0..curve.n() {
            assert!((fd.kappa[i] - 1.0).abs() < 1e-6);
            assert!((tau[i] - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn constant_helix_round_trip() {
        let sf = SpaceForm::new(-3.0);
        let (curve, _) = synthesize_frenet_curve(&sf, |_| 3.0, |_| 2.0, generic_frame(), 1e-3, 801).unwrap();
        let fd = extract_frenet(&sf, &curve).unwrap();
        let tau = fd.tau.unwrap();
        for i in 0..curve.n() {
            assert!((fd.kappa[i] - 3.0).abs() < 1e-6, "kappa[{i}]={}", fd.kappa[i]);
            assert!((tau[i] - 2.0).abs() < 1e-6, "tau[{i}]={}", tau[i]);
        }
        assert!(!fd.negative_torsion);
    }

    #[test]
    fn linear_curvature_profile_matches_arclength() {
        let sf = SpaceForm::new(1.0);
        let h = 1e-3;
        let (curve, _) = synthesize_frenet_curve(&sf, |s| s, |_| 1.0, generic_frame(), h, 1001).unwrap();
        for (i, k) in curvature_profile(&sf, &curve).iter().enumerate() {
            assert!((k - i as f64 * h).abs() < 1e-5);
        }
        // kappa touches zero at s = 0 only, so the Frenet frame degenerates there.
        assert_eq!(extract_frenet(&sf, &curve), Err(GeometryError::FrenetDegenerate { index: 0 }));
    }

    #[test]
    fn extracted_geodesic_has_no_torsion() {
        let sf = SpaceForm::new(5.0);
        let (curve, _) = synthesize_frenet_curve(&sf, |_| 0.0, |_| 0.0, generic_frame(), 1e-2, 100).unwrap();
        let fd = extract_frenet(&sf, &curve).unwrap();
        assert!(fd.tau.is_none());
        assert!(fd.kappa.iter().all(|k| *k == 0.0));
        assert!(fd.orthonormality_residual() < 1e-12);
    }

    #[test]
    fn legendre_synthesis_pins_frame() {
        let sf = SpaceForm::new(5.0);
        let (curve, fd) = synthesize_legendre_curve(&sf, |s| 2.0 + s.sin(), 1e-3, 500).unwrap();
        assert!(curve.is_legendre());
        for i in 0..curve.n() {
            assert_eq!(sf.eta(&fd.p2[i]), 0.0);
            assert_eq!(sf.eta(&fd.p3[i]), 1.0);
            assert!((curve.velocity()[i].norm() - 1.0).abs() < 1e-12);
        }
        assert!(fd.frenet_serret_residual(&sf, &curve).unwrap() < 50.0 * 1e-6);
    }

    #[test]
    fn legendre_geodesic_has_torsion_one() {
        let sf = SpaceForm::new(-7.0);
        let h = 1e-3;
        let (curve, fd) = synthesize_legendre_curve(&sf, |_| 0.0, h, 200).unwrap();
        assert!(fd.tau.as_ref().unwrap().iter().all(|t| *t == 1.0));
        // Pinned frame satisfies nabla p2 = p3 with kappa = 0.
        assert!(fd.frenet_serret_residual(&sf, &curve).unwrap() < 50.0 * h * h);
    }

    #[test]
    fn sampled_curve_validation() {
        assert!(SampledCurve::new(0.1, vec![FrameVector::e1(); 6], true).is_ok());
        assert!(SampledCurve::new(0.1, vec![FrameVector::xi(); 6], true).is_err());
        assert!(SampledCurve::new(0.1, vec![FrameVector::new(1.0, 1.0, 0.0); 6], false).is_err());
        assert!(SampledCurve::new(0.1, vec![FrameVector::e1(); 4], false).is_err());
    }
}
