//! Hopf cylinders: preimages of base curves under the Reeb fibration.
//!
//! A cylinder over a unit-speed base curve of signed curvature `kappa_bar`
//! is flat, carries the orthonormal frame `(t, xi)` with unit normal
//! `n = phi t`, and has mean curvature `H = kappa_bar / 2`. Every surface
//! operator below depends only on `H(s)` and `c`, so the cylinder is held
//! as scalar samples.
//!
//! The frame oracle realises `t` along the horizontal lift of the base
//! curve, differentiates along `t` by finite differences, and along the
//! fibre algebraically: for fields invariant under the Reeb flow,
//! `nabla_xi V = Gamma(xi, V) - [xi, V]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::curves::{covariant_derivative_field, horizontal_lift, SampledCurve, MIN_SAMPLES};
use crate::error::{GeometryError, Result};
use crate::frame::{FrameField, FrameVector};
use crate::operators::ComponentSamples;
use crate::spaceform::SpaceForm;
use crate::stencil::{first_derivative, second_derivative};

/// Horizontality tolerance for [`horizontal_lift_check`].
const HORIZONTAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfCylinder {
    pub sf: SpaceForm,
    pub h: f64,
    /// Signed curvature of the base curve.
    pub kappa_bar: Vec<f64>,
    /// Mean curvature `kappa_bar / 2`.
    pub mean_curvature: Vec<f64>,
}

impl HopfCylinder {
    pub fn from_samples(sf: &SpaceForm, kappa_bar: Vec<f64>, h: f64) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(GeometryError::InvalidStep(h));
        }
        if kappa_bar.len() < MIN_SAMPLES {
            return Err(GeometryError::TooFewSamples { n: kappa_bar.len(), min: MIN_SAMPLES });
        }
        let mean_curvature = kappa_bar.iter().map(|k| k / 2.0).collect();
        Ok(HopfCylinder { sf: sf.clone(), h, kappa_bar, mean_curvature })
    }

    pub fn n(&self) -> usize {
        self.kappa_bar.len()
    }

    pub fn is_minimal(&self) -> bool {
        self.mean_curvature.iter().all(|h| h.abs() < crate::KAPPA_FLOOR)
    }
}

/// Builds the cylinder over a base curve with curvature `kappa_bar(s)`.
pub fn build_cylinder<K>(sf: &SpaceForm, kappa_bar: K, h: f64, n: usize) -> Result<HopfCylinder>
where
    K: Fn(f64) -> f64,
{
    HopfCylinder::from_samples(sf, (0..n).map(|i| kappa_bar(i as f64 * h)).collect(), h)
}

/// A surface operator value in the frame `(t, n, xi)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceOperatorValue {
    pub first: usize,
    pub along_t: Vec<f64>,
    pub along_n: Vec<f64>,
    pub along_xi: Vec<f64>,
}

impl SurfaceOperatorValue {
    fn from_components(first: usize, comps: impl IntoIterator<Item = [f64; 3]>) -> Self {
        let mut out = SurfaceOperatorValue { first, along_t: vec![], along_n: vec![], along_xi: vec![] };
        for [a, b, c] in comps {
            out.along_t.push(a);
            out.along_n.push(b);
            out.along_xi.push(c);
        }
        out
    }

    fn scaled(mut self, factor: f64) -> Self {
        for v in self.along_t.iter_mut().chain(&mut self.along_n).chain(&mut self.along_xi) {
            *v *= factor;
        }
        self
    }
}

impl ComponentSamples for SurfaceOperatorValue {
    fn first(&self) -> usize {
        self.first
    }

    fn len(&self) -> usize {
        self.along_t.len()
    }

    fn components(&self, k: usize) -> [f64; 3] {
        [self.along_t[k], self.along_n[k], self.along_xi[k]]
    }
}

/// Mean curvature vector `H n`.
pub fn cylinder_mean_curvature(cyl: &HopfCylinder) -> SurfaceOperatorValue {
    SurfaceOperatorValue::from_components(0, cyl.mean_curvature.iter().map(|h| [0.0, *h, 0.0]))
}

struct Profile {
    h: Vec<f64>,
    dh: Vec<f64>,
    ddh: Vec<f64>,
}

fn profile(cyl: &HopfCylinder) -> Profile {
    Profile {
        dh: first_derivative(&cyl.mean_curvature, cyl.h),
        ddh: second_derivative(&cyl.mean_curvature, cyl.h),
        h: cyl.mean_curvature.clone(),
    }
}

/// `Delta H = 6 H H' t + (-H'' + 4 H^3 + 2 H) n - 2 H' xi`.
pub fn cylinder_laplacian_h(cyl: &HopfCylinder) -> SurfaceOperatorValue {
    let p = profile(cyl);
    SurfaceOperatorValue::from_components(
        0,
        (0..cyl.n()).map(|i| {
            let (h, dh, ddh) = (p.h[i], p.dh[i], p.ddh[i]);
            [6.0 * h * dh, -ddh + 4.0 * h * h * h + 2.0 * h, -2.0 * dh]
        }),
    )
}

/// `Delta^perp H = -H'' n`.
pub fn cylinder_normal_laplacian_h(cyl: &HopfCylinder) -> SurfaceOperatorValue {
    let p = profile(cyl);
    SurfaceOperatorValue::from_components(0, p.ddh.iter().map(|ddh| [0.0, -ddh, 0.0]))
}

/// Jacobi operator of the inclusion applied to `H`:
/// `J(H) = 6 H H' t - (H'' - 4 H^3 + (c - 1) H) n - 2 H' xi`.
pub fn cylinder_jacobi_h(cyl: &HopfCylinder) -> SurfaceOperatorValue {
    let p = profile(cyl);
    let c = cyl.sf.c;
    SurfaceOperatorValue::from_components(
        0,
        (0..cyl.n()).map(|i| {
            let (h, dh, ddh) = (p.h[i], p.dh[i], p.ddh[i]);
            [6.0 * h * dh, -(ddh - 4.0 * h * h * h + (c - 1.0) * h), -2.0 * dh]
        }),
    )
}

/// Bitension field of the inclusion, `T2 = -2 J(H)`.
pub fn cylinder_bitension(cyl: &HopfCylinder) -> SurfaceOperatorValue {
    cylinder_jacobi_h(cyl).scaled(-2.0)
}

/// Which surface operator [`cylinder_frame_oracle`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceOperator {
    Laplacian,
    NormalLaplacian,
    Jacobi,
}

impl fmt::Display for SurfaceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceOperator::Laplacian => "laplacian",
            SurfaceOperator::NormalLaplacian => "normal-laplacian",
            SurfaceOperator::Jacobi => "jacobi",
        })
    }
}

impl FromStr for SurfaceOperator {
    type Err = GeometryError;

    fn from_str(tag: &str) -> Result<Self> {
        match tag {
            "laplacian" => Ok(SurfaceOperator::Laplacian),
            "normal-laplacian" => Ok(SurfaceOperator::NormalLaplacian),
            "jacobi" => Ok(SurfaceOperator::Jacobi),
            other => Err(GeometryError::UnknownOperator(other.to_string())),
        }
    }
}

/// The cylinder realised in frame coordinates along the horizontal lift
/// of its base curve.
struct LiftedFrame {
    curve: SampledCurve,
    t: Vec<FrameVector>,
    n: Vec<FrameVector>,
}

fn lift(cyl: &HopfCylinder) -> Result<LiftedFrame> {
    let (curve, _) = horizontal_lift(&cyl.sf, &cyl.kappa_bar, cyl.h)?;
    let t = curve.velocity().to_vec();
    let n = t.iter().map(|v| cyl.sf.phi(v)).collect();
    Ok(LiftedFrame { curve, t, n })
}

impl LiftedFrame {
    fn project_normal(&self, field: FrameField) -> FrameField {
        let first = field.first;
        let values = field
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let n = self.n[first + k];
                v.dot(&n) * n
            })
            .collect();
        FrameField::new(first, values)
    }

    fn components(&self, sf: &SpaceForm, field: &FrameField) -> SurfaceOperatorValue {
        let xi = sf.xi();
        SurfaceOperatorValue::from_components(
            field.first,
            field.values.iter().enumerate().map(|(k, v)| {
                let i = field.first + k;
                [v.dot(&self.t[i]), v.dot(&self.n[i]), v.dot(&xi)]
            }),
        )
    }
}

fn along_fiber(sf: &SpaceForm, field: &FrameField) -> FrameField {
    FrameField::new(field.first, field.values.iter().map(|v| sf.fiber_derivative(v)).collect())
}

fn restrict(field: &FrameField, range: std::ops::Range<usize>) -> FrameField {
    FrameField::new(range.start, range.clone().filter_map(|i| field.at(i)).collect())
}

/// Independent evaluation of a surface operator from the frame relations.
/// Defined on samples `2..n-2`; the curvature term of the Jacobi operator
/// comes from the connection table.
pub fn cylinder_frame_oracle(cyl: &HopfCylinder, which: SurfaceOperator) -> Result<SurfaceOperatorValue> {
    let sf = &cyl.sf;
    let frame = lift(cyl)?;
    let mean = FrameField::full(cyl.mean_curvature.iter().zip(&frame.n).map(|(h, n)| *h * *n).collect());

    let (tt, ff) = match which {
        SurfaceOperator::Laplacian | SurfaceOperator::Jacobi => {
            let d = covariant_derivative_field(sf, &frame.curve, &mean)?;
            let tt = covariant_derivative_field(sf, &frame.curve, &d)?;
            let ff = along_fiber(sf, &along_fiber(sf, &mean));
            (tt, ff)
        }
        SurfaceOperator::NormalLaplacian => {
            let d = frame.project_normal(covariant_derivative_field(sf, &frame.curve, &mean)?);
            let tt = frame.project_normal(covariant_derivative_field(sf, &frame.curve, &d)?);
            let d = frame.project_normal(along_fiber(sf, &mean));
            let ff = frame.project_normal(along_fiber(sf, &d));
            (tt, ff)
        }
    };
    let ff = restrict(&ff, tt.indices());
    let mut values: Vec<FrameVector> = tt.values.iter().zip(&ff.values).map(|(a, b)| -(*a + *b)).collect();

    if which == SurfaceOperator::Jacobi {
        let xi = sf.xi();
        for (k, v) in values.iter_mut().enumerate() {
            let i = tt.first + k;
            let hv = mean.values[i];
            let t = frame.t[i];
            *v = *v - sf.curvature_from_frame_applied(&hv, &t, &t) - sf.curvature_from_frame_applied(&hv, &xi, &xi);
        }
    }
    Ok(frame.components(sf, &FrameField::new(tt.first, values)))
}

/// Curvature term `R(H, t) t + R(H, xi) xi` of the Jacobi operator,
/// from the connection table along the horizontal lift.
pub fn jacobi_curvature_term(cyl: &HopfCylinder) -> Result<SurfaceOperatorValue> {
    let sf = &cyl.sf;
    let frame = lift(cyl)?;
    let xi = sf.xi();
    let values = (0..cyl.n())
        .map(|i| {
            let hv = cyl.mean_curvature[i] * frame.n[i];
            let t = frame.t[i];
            sf.curvature_from_frame_applied(&hv, &t, &t) + sf.curvature_from_frame_applied(&hv, &xi, &xi)
        })
        .collect();
    Ok(frame.components(sf, &FrameField::full(values)))
}

/// Second fundamental form with respect to `n`, recovered from the lift.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SecondFundamentalForm {
    pub first: usize,
    /// `II(t, t)`
    pub tt: Vec<f64>,
    /// `II(t, xi)`
    pub t_xi: Vec<f64>,
    /// `II(xi, xi)`
    pub xi_xi: Vec<f64>,
    /// Largest tangential component of `nabla_t t`, `nabla_t xi`,
    /// `nabla_xi xi`; zero for a flat frame.
    pub flatness_residual: f64,
}

pub fn second_fundamental_form(cyl: &HopfCylinder) -> Result<SecondFundamentalForm> {
    let sf = &cyl.sf;
    let frame = lift(cyl)?;
    let xi = sf.xi();
    let tt_field = covariant_derivative_field(sf, &frame.curve, &FrameField::full(frame.t.clone()))?;
    let txi_field = covariant_derivative_field(sf, &frame.curve, &FrameField::full(vec![xi; cyl.n()]))?;
    let xixi = sf.fiber_derivative(&xi);

    let mut out = SecondFundamentalForm {
        first: tt_field.first,
        tt: vec![],
        t_xi: vec![],
        xi_xi: vec![],
        flatness_residual: 0.0,
    };
    for (k, (a, b)) in tt_field.values.iter().zip(&txi_field.values).enumerate() {
        let i = tt_field.first + k;
        let (t, n) = (frame.t[i], frame.n[i]);
        out.tt.push(a.dot(&n));
        out.t_xi.push(b.dot(&n));
        out.xi_xi.push(xixi.dot(&n));
        let tangential = [a.dot(&t), a.dot(&xi), b.dot(&t), b.dot(&xi), xixi.dot(&t), xixi.dot(&xi)];
        let worst = tangential.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        out.flatness_residual = out.flatness_residual.max(worst);
    }
    Ok(out)
}

/// Closed-form solution of `kappa'' + lambda kappa = 0` on the grid:
/// `a s + b` for `lambda = 0`, `a cos(sqrt(lambda) s) + b sin(sqrt(lambda) s)`
/// for `lambda > 0`, `a exp(sqrt(-lambda) s) + b exp(-sqrt(-lambda) s)` for `lambda < 0`.
pub fn solve_natural_equation(lambda: f64, a: f64, b: f64, h: f64, n: usize) -> Vec<f64> {
    let w = lambda.abs().sqrt();
    (0..n)
        .map(|i| {
            let s = i as f64 * h;
            if lambda == 0.0 {
                a * s + b
            } else if lambda > 0.0 {
                a * (w * s).cos() + b * (w * s).sin()
            } else {
                a * (w * s).exp() + b * (-w * s).exp()
            }
        })
        .collect()
}

/// Holomorphic sectional curvature of the orbit space from the O'Neill
/// relation `K_base = K(e1, e2) + 3/4 |[e1, e2]^vertical|^2`.
pub fn oneill_base_curvature(sf: &SpaceForm) -> f64 {
    let (e1, e2) = (FrameVector::e1(), FrameVector::e2());
    let vertical = sf.eta(&sf.bracket(0, 1));
    sf.sectional_curvature(&e1, &e2) + 0.75 * vertical * vertical
}

/// Checks the submersion identity
/// `nabla_{X*} Y* = (nabla_X Y)* - g(X*, phi Y*) xi` on a horizontal curve
/// through its vertical parts, for `Y* = gamma'` and `Y* = phi gamma'`.
/// Returns the largest deviation.
pub fn horizontal_lift_check(sf: &SpaceForm, curve: &SampledCurve) -> Result<f64> {
    if let Some((index, v)) = curve.velocity().iter().enumerate().find(|(_, v)| sf.eta(v).abs() > HORIZONTAL_TOL) {
        return Err(GeometryError::NotHorizontal { index, eta: sf.eta(v) });
    }
    let u = curve.velocity();
    let phi_u: Vec<FrameVector> = u.iter().map(|v| sf.phi(v)).collect();
    let acc = covariant_derivative_field(sf, curve, &curve.velocity_field())?;
    let dphi = covariant_derivative_field(sf, curve, &FrameField::full(phi_u.clone()))?;
    let mut worst = 0.0_f64;
    for i in acc.indices() {
        let expected_tt = -sf.metric(&u[i], &sf.phi(&u[i]));
        let expected_tn = -sf.metric(&u[i], &sf.phi(&phi_u[i]));
        let got_tt = sf.eta(&acc.at(i).unwrap_or_default());
        let got_tn = sf.eta(&dphi.at(i).unwrap_or_default());
        worst = worst.max((got_tt - expected_tt).abs()).max((got_tn - expected_tn).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::synthesize_legendre_curve;
    use crate::operators::{eigen_residual, max_difference};

    const H: f64 = 1e-3;

    fn tol() -> f64 {
        crate::default_tolerance(H)
    }

    fn cylinder(c: f64, kappa_bar: impl Fn(f64) -> f64) -> HopfCylinder {
        build_cylinder(&SpaceForm::new(c), kappa_bar, H, 1001).unwrap()
    }

    #[test]
    fn mean_curvature_is_half_base_curvature() {
        let cyl = cylinder(1.0, |_| 1.0);
        assert!(cyl.mean_curvature.iter().all(|h| *h == 0.5));
        let hv = cylinder_mean_curvature(&cyl);
        assert_eq!(hv.at(3), Some([0.0, 0.5, 0.0]));
        assert!(cylinder(1.0, |_| 0.0).is_minimal());
    }

    #[test]
    fn round_cylinder_laplacian_eigenvalue() {
        let cyl = cylinder(1.0, |_| 1.0);
        let fit = eigen_residual(&cylinder_laplacian_h(&cyl), &cylinder_mean_curvature(&cyl)).unwrap();
        assert!((fit.lambda - 3.0).abs() < 1e-12 && fit.residual < 1e-12);
        assert_eq!(cylinder_laplacian_h(&cylinder(2.0, |_| 0.0)).max_norm(), 0.0);
    }

    #[test]
    fn linear_mean_curvature_not_eigen() {
        let cyl = cylinder(0.0, |s| 2.0 * s);
        let lap = cylinder_laplacian_h(&cyl);
        for i in 0..cyl.n() {
            assert!((lap.along_t[i] - 6.0 * i as f64 * H).abs() < 1e-9);
        }
        let oracle = cylinder_frame_oracle(&cyl, SurfaceOperator::Laplacian).unwrap();
        assert!(max_difference(&lap, &oracle) < tol());
    }

    #[test]
    fn natural_equation_families() {
        let clothoid = cylinder(-3.0, |s| 0.7 * s + 0.2);
        assert!(cylinder_normal_laplacian_h(&clothoid).max_norm() < 1e-9);

        let trig = cylinder(1.0, |s| (2.0 * s).cos());
        let fit = eigen_residual(&cylinder_normal_laplacian_h(&trig), &cylinder_mean_curvature(&trig)).unwrap();
        assert!((fit.lambda - 4.0).abs() < tol() && fit.residual < tol(), "{fit:?}");

        let growth = cylinder(1.0, f64::exp);
        let fit = eigen_residual(&cylinder_normal_laplacian_h(&growth), &cylinder_mean_curvature(&growth)).unwrap();
        assert!((fit.lambda + 1.0).abs() < tol() && fit.residual < tol(), "{fit:?}");
    }

    #[test]
    fn solve_natural_equation_branches() {
        let h = 0.1;
        let lin = solve_natural_equation(0.0, 1.0, 0.0, h, 11);
        let cos = solve_natural_equation(4.0, 1.0, 0.0, h, 11);
        let exp = solve_natural_equation(-1.0, 0.0, 1.0, h, 11);
        for i in 0..11 {
            let s = i as f64 * h;
            assert_eq!(lin[i], s);
            assert_eq!(cos[i], (2.0 * s).cos());
            assert_eq!(exp[i], (-s).exp());
        }
    }

    #[test]
    fn polyharmonic_cylinders() {
        assert!(cylinder_jacobi_h(&cylinder(5.0, |_| 2.0)).max_norm() < 1e-12);
        assert_eq!(cylinder_jacobi_h(&cylinder(5.0, |_| 0.0)).max_norm(), 0.0);
        let sphere = cylinder(1.0, |_| 1.0);
        let fit = eigen_residual(&cylinder_jacobi_h(&sphere), &cylinder_mean_curvature(&sphere)).unwrap();
        assert!((fit.lambda - 1.0).abs() < 1e-12);
        assert!(cylinder_bitension(&sphere).max_norm() > 0.5);
    }

    #[test]
    fn oracle_matches_closed_forms() {
        for c in [-7.0, -3.0, 1.0, 5.0] {
            let cyl = cylinder(c, |s| 1.0 + s * s);
            let pairs = [
                (cylinder_laplacian_h(&cyl), SurfaceOperator::Laplacian),
                (cylinder_normal_laplacian_h(&cyl), SurfaceOperator::NormalLaplacian),
                (cylinder_jacobi_h(&cyl), SurfaceOperator::Jacobi),
            ];
            for (closed, tag) in pairs {
                let oracle = cylinder_frame_oracle(&cyl, tag).unwrap();
                let diff = max_difference(&closed, &oracle);
                assert!(diff < tol(), "c={c} {tag}: {diff}");
            }
        }
    }

    #[test]
    fn oracle_vanishes_on_minimal_cylinder() {
        let cyl = cylinder(2.0, |_| 0.0);
        for tag in [SurfaceOperator::Laplacian, SurfaceOperator::NormalLaplacian, SurfaceOperator::Jacobi] {
            assert_eq!(cylinder_frame_oracle(&cyl, tag).unwrap().max_norm(), 0.0);
        }
    }

    #[test]
    fn fiber_derivative_of_mean_curvature_is_h_t() {
        for c in [-7.0, 1.0, 5.0] {
            let cyl = cylinder(c, |s| 1.0 + s);
            let frame = lift(&cyl).unwrap();
            for i in (0..cyl.n()).step_by(50) {
                let hv = cyl.mean_curvature[i] * frame.n[i];
                let expected = cyl.mean_curvature[i] * frame.t[i];
                assert!((cyl.sf.fiber_derivative(&hv) - expected).max_abs() < 1e-12);
            }
        }
    }

    #[test]
    fn curvature_term_is_c_plus_one_h() {
        for c in [-3.0, 1.0, 5.0] {
            let cyl = cylinder(c, |s| 1.0 + s.sin());
            let r = jacobi_curvature_term(&cyl).unwrap();
            for i in 0..cyl.n() {
                let expected = (c + 1.0) * cyl.mean_curvature[i];
                assert!((r.along_n[i] - expected).abs() < 1e-12);
                assert!(r.along_t[i].abs() < 1e-12 && r.along_xi[i].abs() < 1e-12);
            }
        }
    }

    #[test]
    fn second_fundamental_form_and_flatness() {
        let cyl = cylinder(2.0, |s| 1.0 + 0.5 * s);
        let ii = second_fundamental_form(&cyl).unwrap();
        for (k, tt) in ii.tt.iter().enumerate() {
            assert!((tt - cyl.kappa_bar[ii.first + k]).abs() < tol());
        }
        assert!(ii.t_xi.iter().all(|v| (v + 1.0).abs() < 1e-12));
        assert!(ii.xi_xi.iter().all(|v| v.abs() < 1e-15));
        assert!(ii.flatness_residual < tol());
    }

    #[test]
    fn oneill_identity() {
        assert_eq!(oneill_base_curvature(&SpaceForm::new(1.0)), 4.0);
        assert_eq!(oneill_base_curvature(&SpaceForm::new(-3.0)), 0.0);
        assert_eq!(oneill_base_curvature(&SpaceForm::new(5.0)), 8.0);
    }

    #[test]
    fn lift_identity_on_legendre_curves() {
        let sf = SpaceForm::new(1.0);
        let (geo, _) = synthesize_legendre_curve(&sf, |_| 0.0, H, 300).unwrap();
        assert!(horizontal_lift_check(&sf, &geo).unwrap() < tol());
        let (helix, _) = synthesize_legendre_curve(&sf, |_| 1.0, H, 300).unwrap();
        assert!(horizontal_lift_check(&sf, &helix).unwrap() < tol());
    }

    #[test]
    fn lift_check_rejects_vertical_curves() {
        let sf = SpaceForm::new(1.0);
        let frame = [FrameVector::xi(), FrameVector::e1(), FrameVector::e2()];
        let (curve, _) = crate::curves::synthesize_frenet_curve(&sf, |_| 0.0, |_| 0.0, frame, H, 20).unwrap();
        assert!(matches!(horizontal_lift_check(&sf, &curve), Err(GeometryError::NotHorizontal { .. })));
    }

    #[test]
    fn operator_tags() {
        assert_eq!("jacobi".parse::<SurfaceOperator>().unwrap(), SurfaceOperator::Jacobi);
        assert_eq!(SurfaceOperator::NormalLaplacian.to_string(), "normal-laplacian");
        assert!(matches!("bilaplacian".parse::<SurfaceOperator>(), Err(GeometryError::UnknownOperator(_))));
    }
}
