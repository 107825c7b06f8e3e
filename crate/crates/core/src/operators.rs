//! Mean-curvature operators along curves.
//!
//! Each operator has a closed form in Frenet components (with `kappa'`,
//! `kappa''`, `tau'` from second-order differences) and a finite-difference
//! oracle that applies the covariant derivative to the sampled fields.
//! The Laplacian is the geometer's one, `Delta = -nabla_{gamma'} nabla_{gamma'}`.

use serde::{Deserialize, Serialize};

use crate::curves::{covariant_derivative_field, FrenetData, SampledCurve, MIN_SAMPLES};
use crate::error::{GeometryError, Result};
use crate::frame::FrameField;
use crate::spaceform::SpaceForm;
use crate::stencil::{first_derivative, second_derivative};
use crate::KAPPA_FLOOR;

/// Samples of a vector field given by three components in some orthonormal
/// moving frame, on grid indices `first..first + len`.
pub trait ComponentSamples {
    fn first(&self) -> usize;
    fn len(&self) -> usize;
    fn components(&self, k: usize) -> [f64; 3];

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Component triple at grid index `i`, if covered.
    fn at(&self, i: usize) -> Option<[f64; 3]> {
        (i >= self.first() && i < self.first() + self.len()).then(|| self.components(i - self.first()))
    }

    /// Largest pointwise Euclidean norm.
    fn max_norm(&self) -> f64 {
        (0..self.len())
            .map(|k| {
                let [a, b, c] = self.components(k);
                (a * a + b * b + c * c).sqrt()
            })
            .fold(0.0, f64::max)
    }
}

/// Samples within `BOUNDARY_LAYER` of either end of an operator computed
/// from extracted Frenet data involve one-sided stencils.
pub const BOUNDARY_LAYER: usize = 3;

/// View of an operator with `layer` samples dropped from each end.
#[derive(Debug, Clone, Copy)]
pub struct Interior<'a, T: ?Sized> {
    inner: &'a T,
    layer: usize,
}

pub fn interior<T: ComponentSamples + ?Sized>(inner: &T, layer: usize) -> Interior<'_, T> {
    Interior { inner, layer }
}

impl<T: ComponentSamples + ?Sized> ComponentSamples for Interior<'_, T> {
    fn first(&self) -> usize {
        self.inner.first() + self.layer
    }

    fn len(&self) -> usize {
        self.inner.len().saturating_sub(2 * self.layer)
    }

    fn components(&self, k: usize) -> [f64; 3] {
        self.inner.components(k + self.layer)
    }
}

/// Operator value along a curve in Frenet components, together with the
/// same field in ambient frame coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorValue {
    pub first: usize,
    pub along_p1: Vec<f64>,
    pub along_p2: Vec<f64>,
    pub along_p3: Vec<f64>,
    pub as_vectors: FrameField,
}

impl OperatorValue {
    fn from_components(first: usize, comps: Vec<[f64; 3]>, fd: &FrenetData) -> Self {
        let vectors = comps
            .iter()
            .enumerate()
            .map(|(k, [a, b, c])| {
                let [p1, p2, p3] = fd.frame(first + k);
                *a * p1 + *b * p2 + *c * p3
            })
            .collect();
        OperatorValue {
            first,
            along_p1: comps.iter().map(|c| c[0]).collect(),
            along_p2: comps.iter().map(|c| c[1]).collect(),
            along_p3: comps.iter().map(|c| c[2]).collect(),
            as_vectors: FrameField::new(first, vectors),
        }
    }

    fn from_field(field: FrameField, fd: &FrenetData) -> Self {
        let first = field.first;
        let comps: Vec<[f64; 3]> = field
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let [p1, p2, p3] = fd.frame(first + k);
                [v.dot(&p1), v.dot(&p2), v.dot(&p3)]
            })
            .collect();
        OperatorValue {
            first,
            along_p1: comps.iter().map(|c| c[0]).collect(),
            along_p2: comps.iter().map(|c| c[1]).collect(),
            along_p3: comps.iter().map(|c| c[2]).collect(),
            as_vectors: field,
        }
    }

    /// Largest disagreement between the component and ambient representations.
    pub fn representation_mismatch(&self, fd: &FrenetData) -> f64 {
        (0..self.len())
            .map(|k| {
                let [p1, p2, p3] = fd.frame(self.first + k);
                let v = self.along_p1[k] * p1 + self.along_p2[k] * p2 + self.along_p3[k] * p3;
                (v - self.as_vectors.values[k]).max_abs()
            })
            .fold(0.0, f64::max)
    }
}

impl ComponentSamples for OperatorValue {
    fn first(&self) -> usize {
        self.first
    }

    fn len(&self) -> usize {
        self.along_p1.len()
    }

    fn components(&self, k: usize) -> [f64; 3] {
        [self.along_p1[k], self.along_p2[k], self.along_p3[k]]
    }
}

/// Least-squares eigenvalue estimate and its normalised max-norm residual.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenFit {
    pub lambda: f64,
    pub residual: f64,
}

/// Fits `op ~ lambda * mean_curvature` over the common samples.
///
/// `lambda` minimises the L2 misfit on the grid; the residual is
/// `max |op - lambda H| / max |H|`.
pub fn eigen_residual<A, B>(op: &A, mean_curvature: &B) -> Result<EigenFit>
where
    A: ComponentSamples + ?Sized,
    B: ComponentSamples + ?Sized,
{
    let lo = op.first().max(mean_curvature.first());
    let hi = (op.first() + op.len()).min(mean_curvature.first() + mean_curvature.len());
    if lo >= hi {
        return Err(GeometryError::DisjointSamples);
    }
    let pairs: Vec<([f64; 3], [f64; 3])> = (lo..hi)
        .filter_map(|i| Some((op.at(i)?, mean_curvature.at(i)?)))
        .collect();
    let dot = |a: &[f64; 3], b: &[f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let h_max = pairs.iter().map(|(_, h)| dot(h, h).sqrt()).fold(0.0, f64::max);
    if h_max < KAPPA_FLOOR {
        return Err(GeometryError::VacuousEigenRelation);
    }
    let num: f64 = pairs.iter().map(|(o, h)| dot(o, h)).sum();
    let den: f64 = pairs.iter().map(|(_, h)| dot(h, h)).sum();
    let lambda = num / den;
    let misfit = pairs
        .iter()
        .map(|(o, h)| {
            let r = [o[0] - lambda * h[0], o[1] - lambda * h[1], o[2] - lambda * h[2]];
            dot(&r, &r).sqrt()
        })
        .fold(0.0, f64::max);
    Ok(EigenFit { lambda, residual: misfit / h_max })
}

/// Largest pointwise difference between two sampled operators on their
/// common samples.
pub fn max_difference<A, B>(a: &A, b: &B) -> f64
where
    A: ComponentSamples + ?Sized,
    B: ComponentSamples + ?Sized,
{
    let lo = a.first().max(b.first());
    let hi = (a.first() + a.len()).min(b.first() + b.len());
    (lo..hi)
        .filter_map(|i| {
            let (x, y) = (a.at(i)?, b.at(i)?);
            Some(((x[0] - y[0]).powi(2) + (x[1] - y[1]).powi(2) + (x[2] - y[2]).powi(2)).sqrt())
        })
        .fold(0.0, f64::max)
}

/// `H = nabla_{gamma'} gamma' = kappa p2`.
pub fn mean_curvature_vector(fd: &FrenetData) -> OperatorValue {
    let comps = fd.kappa.iter().map(|k| [0.0, *k, 0.0]).collect();
    OperatorValue::from_components(0, comps, fd)
}

struct Derivatives {
    kappa: Vec<f64>,
    tau: Vec<f64>,
    dkappa: Vec<f64>,
    ddkappa: Vec<f64>,
    dtau: Vec<f64>,
}

fn derivatives(fd: &FrenetData) -> Derivatives {
    let tau = fd.tau_or_zero();
    Derivatives {
        dkappa: first_derivative(&fd.kappa, fd.h),
        ddkappa: second_derivative(&fd.kappa, fd.h),
        dtau: first_derivative(&tau, fd.h),
        kappa: fd.kappa.clone(),
        tau,
    }
}

fn laplacian_components(d: &Derivatives, i: usize) -> [f64; 3] {
    let (k, t, dk, ddk, dt) = (d.kappa[i], d.tau[i], d.dkappa[i], d.ddkappa[i], d.dtau[i]);
    [3.0 * k * dk, -ddk + k * k * k + k * t * t, -2.0 * dk * t - k * dt]
}

/// Closed-form `Delta H = 3 k k' p1 + (-k'' + k^3 + k t^2) p2 - (2 k' t + k t') p3`.
pub fn laplacian_h_closed(fd: &FrenetData) -> OperatorValue {
    let d = derivatives(fd);
    let comps = (0..fd.n()).map(|i| laplacian_components(&d, i)).collect();
    OperatorValue::from_components(0, comps, fd)
}

fn mean_curvature_field(fd: &FrenetData) -> FrameField {
    FrameField::full(fd.kappa.iter().zip(&fd.p2).map(|(k, p)| *k * *p).collect())
}

fn check_samples(n: usize) -> Result<()> {
    if n < MIN_SAMPLES {
        return Err(GeometryError::TooFewSamples { n, min: MIN_SAMPLES });
    }
    Ok(())
}

/// `nabla_{gamma'} nabla_{gamma'} H` by two central-difference covariant
/// derivatives; defined on samples `2..n-2`.
fn second_covariant_derivative_of_h(sf: &SpaceForm, curve: &SampledCurve, fd: &FrenetData) -> Result<FrameField> {
    check_samples(curve.n().min(fd.n()))?;
    let h = mean_curvature_field(fd);
    let dh = covariant_derivative_field(sf, curve, &h)?;
    covariant_derivative_field(sf, curve, &dh)
}

/// Finite-difference oracle for `Delta H = -nabla nabla H`.
pub fn laplacian_h_oracle(sf: &SpaceForm, curve: &SampledCurve, fd: &FrenetData) -> Result<OperatorValue> {
    let mut ddh = second_covariant_derivative_of_h(sf, curve, fd)?;
    for v in &mut ddh.values {
        *v = -*v;
    }
    Ok(OperatorValue::from_field(ddh, fd))
}

/// Closed-form normal Laplacian `Delta^perp H = (k t^2 - k'') p2 - (2 k' t + k t') p3`.
pub fn normal_laplacian_h(fd: &FrenetData) -> OperatorValue {
    let d = derivatives(fd);
    let comps = (0..fd.n())
        .map(|i| {
            let (k, t, dk, ddk, dt) = (d.kappa[i], d.tau[i], d.dkappa[i], d.ddkappa[i], d.dtau[i]);
            [0.0, k * t * t - ddk, -2.0 * dk * t - k * dt]
        })
        .collect();
    OperatorValue::from_components(0, comps, fd)
}

/// Finite-difference oracle for the normal Laplacian: each covariant
/// derivative is followed by removal of the `p1` component.
pub fn normal_laplacian_h_oracle(sf: &SpaceForm, curve: &SampledCurve, fd: &FrenetData) -> Result<OperatorValue> {
    check_samples(curve.n().min(fd.n()))?;
    let normal_part = |field: FrameField| {
        let first = field.first;
        let values = field
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let p1 = fd.p1[first + k];
                *v - v.dot(&p1) * p1
            })
            .collect();
        FrameField::new(first, values)
    };
    let h = mean_curvature_field(fd);
    let dh = normal_part(covariant_derivative_field(sf, curve, &h)?);
    let mut ddh = normal_part(covariant_derivative_field(sf, curve, &dh)?);
    for v in &mut ddh.values {
        *v = -*v;
    }
    Ok(OperatorValue::from_field(ddh, fd))
}

/// Bitension field `T2 = -Delta H + kappa R(p2, p1) p1` with the curvature
/// term from the closed-form Sasakian space form tensor.
pub fn bitension_curve(sf: &SpaceForm, fd: &FrenetData) -> OperatorValue {
    let d = derivatives(fd);
    let comps = (0..fd.n())
        .map(|i| {
            let [a, b, c] = laplacian_components(&d, i);
            let [p1, p2, p3] = fd.frame(i);
            let r = fd.kappa[i] * sf.curvature_formula(&p2, &p1, &p1);
            [-a + r.dot(&p1), -b + r.dot(&p2), -c + r.dot(&p3)]
        })
        .collect();
    OperatorValue::from_components(0, comps, fd)
}

/// Oracle for the bitension field: `nabla nabla H` by finite differences
/// plus the curvature term evaluated from the connection table.
pub fn bitension_curve_oracle(sf: &SpaceForm, curve: &SampledCurve, fd: &FrenetData) -> Result<OperatorValue> {
    let mut ddh = second_covariant_derivative_of_h(sf, curve, fd)?;
    let first = ddh.first;
    for (k, v) in ddh.values.iter_mut().enumerate() {
        let i = first + k;
        let (p1, p2) = (fd.p1[i], fd.p2[i]);
        *v += fd.kappa[i] * sf.curvature_from_frame_applied(&p2, &p1, &p1);
    }
    Ok(OperatorValue::from_field(ddh, fd))
}
