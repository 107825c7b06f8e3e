//! Verification harness: runs corpora of curves and Hopf cylinders through
//! the operators and compares the resulting verdicts with the expected
//! classification.
//!
//! Each report records one (subject, operator) pair measured at `h` and at
//! `h / 2`. An "iff" statement is exercised from both sides: witnesses must
//! satisfy the relation, counterexamples must not.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curves::{extract_frenet, synthesize_frenet_curve, synthesize_legendre_curve, MIN_SAMPLES};
use crate::error::{GeometryError, Result};
use crate::frame::FrameVector;
use crate::hopf::{
    build_cylinder, cylinder_frame_oracle, cylinder_jacobi_h, cylinder_laplacian_h, cylinder_mean_curvature,
    cylinder_normal_laplacian_h, SurfaceOperator,
};
use crate::operators::{
    bitension_curve, bitension_curve_oracle, eigen_residual, interior, laplacian_h_closed, laplacian_h_oracle,
    max_difference, mean_curvature_vector, normal_laplacian_h, normal_laplacian_h_oracle, ComponentSamples,
    BOUNDARY_LAYER,
};
use crate::profile::Profile;
use crate::spaceform::SpaceForm;
use crate::KAPPA_FLOOR;

/// Closed forms and finite-difference oracles must agree within
/// `ORACLE_CONSTANT * h^2` over the default corpus.
pub const ORACLE_CONSTANT: f64 = 1500.0;

/// Space forms of the default corpus.
pub const DEFAULT_C: [f64; 6] = [-7.0, -3.0, 0.0, 1.0, 2.0, 5.0];

/// Grid and tolerance for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub h: f64,
    pub length: f64,
    pub tol: f64,
}

impl SuiteConfig {
    /// Arclength interval `[0, length]` sampled with step `h`, tolerance
    /// [`crate::default_tolerance`].
    pub fn new(h: f64, length: f64) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(GeometryError::InvalidStep(h));
        }
        let config = SuiteConfig { h, length, tol: crate::default_tolerance(h) };
        let n = config.n();
        if !(length.is_finite() && n >= MIN_SAMPLES) {
            return Err(GeometryError::TooFewSamples { n, min: MIN_SAMPLES });
        }
        Ok(config)
    }

    pub fn with_tol(self, tol: f64) -> Self {
        SuiteConfig { tol, ..self }
    }

    pub fn n(&self) -> usize {
        if self.length > 0.0 {
            (self.length / self.h).round() as usize + 1
        } else {
            0
        }
    }

    fn refined(&self) -> (f64, usize) {
        (self.h / 2.0, 2 * self.n() - 1)
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { h: 1e-3, length: 2.0, tol: crate::default_tolerance(1e-3) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorTag {
    Laplacian,
    NormalLaplacian,
    Bitension,
    Jacobi,
}

impl OperatorTag {
    /// Operators whose vanishing is the polyharmonic condition.
    pub fn detects_polyharmonic(self) -> bool {
        matches!(self, OperatorTag::Bitension | OperatorTag::Jacobi)
    }
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorTag::Laplacian => "laplacian",
            OperatorTag::NormalLaplacian => "normal-laplacian",
            OperatorTag::Bitension => "bitension",
            OperatorTag::Jacobi => "jacobi",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "eigen")]
    Eigen,
    #[serde(rename = "polyharmonic")]
    Polyharmonic,
    #[serde(rename = "non-eigen")]
    NonEigen,
    #[serde(rename = "geodesic/minimal")]
    GeodesicOrMinimal,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Eigen => "eigen",
            Verdict::Polyharmonic => "polyharmonic",
            Verdict::NonEigen => "non-eigen",
            Verdict::GeodesicOrMinimal => "geodesic/minimal",
        })
    }
}

/// Classification statement exercised by a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremTag {
    /// Curves with `Delta H = lambda H` are geodesics or helices, `lambda = kappa^2 + tau^2`.
    CurveEigen,
    /// Legendre helices: `Delta H = (kappa^2 + 1) H`.
    LegendreLaplacian,
    /// Legendre helices: `Delta^perp H = H`.
    LegendreNormalLaplacian,
    /// Polyharmonic Legendre curves are geodesics or helices with `kappa = sqrt(c - 1)`.
    LegendrePolyharmonic,
    /// Hopf cylinders with `Delta H = lambda H` have constant `H` and `lambda = 4 H^2 + 2`.
    HopfLaplacian,
    /// `Delta^perp H = lambda H` iff `kappa_bar'' + lambda kappa_bar = 0`.
    HopfNormalLaplacian,
    /// `J(H) = lambda H` for constant `H`, `lambda = 4 H^2 + 1 - c`.
    HopfJacobi,
    /// Nonminimal polyharmonic Hopf cylinders need `c > 1` and `kappa_bar = sqrt(c - 1)`.
    HopfPolyharmonic,
}

impl TheoremTag {
    pub fn statement(self) -> &'static str {
        match self {
            TheoremTag::CurveEigen => "Delta H = lambda H iff geodesic or helix, lambda = kappa^2 + tau^2",
            TheoremTag::LegendreLaplacian => "Legendre helix: Delta H = (kappa^2 + 1) H",
            TheoremTag::LegendreNormalLaplacian => "Legendre helix: Delta^perp H = H",
            TheoremTag::LegendrePolyharmonic => "polyharmonic Legendre: geodesic or helix with kappa = sqrt(c - 1)",
            TheoremTag::HopfLaplacian => "Hopf cylinder: Delta H = lambda H iff H constant, lambda = 4 H^2 + 2",
            TheoremTag::HopfNormalLaplacian => "Hopf cylinder: Delta^perp H = lambda H iff kappa_bar'' + lambda kappa_bar = 0",
            TheoremTag::HopfJacobi => "Hopf cylinder: J(H) = (4 H^2 + 1 - c) H for constant H",
            TheoremTag::HopfPolyharmonic => "nonminimal polyharmonic Hopf cylinder iff c > 1 and kappa_bar = sqrt(c - 1)",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl TheoremTag {
    pub fn tag(self) -> &'static str {
        match self {
            TheoremTag::CurveEigen => "curve-eigen",
            TheoremTag::LegendreLaplacian => "legendre-laplacian",
            TheoremTag::LegendreNormalLaplacian => "legendre-normal-laplacian",
            TheoremTag::LegendrePolyharmonic => "legendre-polyharmonic",
            TheoremTag::HopfLaplacian => "hopf-laplacian",
            TheoremTag::HopfNormalLaplacian => "hopf-normal-laplacian",
            TheoremTag::HopfJacobi => "hopf-jacobi",
            TheoremTag::HopfPolyharmonic => "hopf-polyharmonic",
        }
    }
}

/// Which side of a statement an instance exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Witness,
    Counterexample,
}

/// A curve with prescribed curvature and torsion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub kappa: Profile,
    pub tau: Profile,
}

impl CurveSpec {
    pub fn new(kappa: Profile, tau: Profile) -> Self {
        CurveSpec { kappa, tau }
    }

    pub fn helix(kappa: f64, tau: f64) -> Self {
        CurveSpec::new(Profile::constant(kappa), Profile::constant(tau))
    }

    fn is_geodesic(&self) -> bool {
        self.kappa == Profile::constant(0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    Curve { c: f64, kappa: Profile, tau: Profile },
    Legendre { c: f64, kappa: Profile },
    Cylinder { c: f64, kappa_bar: Profile },
}

impl Subject {
    pub fn c(&self) -> f64 {
        match *self {
            Subject::Curve { c, .. } | Subject::Legendre { c, .. } | Subject::Cylinder { c, .. } => c,
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Curve { c, kappa, tau } => write!(f, "curve c={c} kappa={kappa} tau={tau}"),
            Subject::Legendre { c, kappa } => write!(f, "legendre c={c} kappa={kappa}"),
            Subject::Cylinder { c, kappa_bar } => write!(f, "cylinder c={c} kappa_bar={kappa_bar}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenReport {
    pub subject: Subject,
    pub operator: OperatorTag,
    /// Least-squares eigenvalue; `None` when the relation is vacuous and
    /// the operator does not vanish.
    pub lambda_est: Option<f64>,
    /// Eigen-fit residual, or the operator norm for polyharmonic and
    /// geodesic/minimal verdicts.
    pub residual: f64,
    /// Same quantity at `h / 2`.
    pub residual_refined: f64,
    /// `max |op|` at `h`.
    pub operator_norm: f64,
    pub verdict: Verdict,
    pub verdict_refined: Verdict,
    pub expected_verdict: Verdict,
    pub expected_lambda: Option<f64>,
    pub theorem: TheoremTag,
    pub direction: Direction,
    /// `max |closed form - oracle|` at `h`.
    pub oracle_agreement: f64,
    pub tol: f64,
    pub holds: bool,
}

impl EigenReport {
    /// One-line difference between observed and expected outcome.
    pub fn mismatch(&self) -> Option<String> {
        if self.holds {
            return None;
        }
        let lambda = |l: Option<f64>| l.map_or("-".to_string(), |l| format!("{l:.6}"));
        Some(format!(
            "{} [{}]: got {} (lambda {}, refined {}), expected {} (lambda {}), oracle {:.2e}",
            self.subject,
            self.operator,
            self.verdict,
            lambda(self.lambda_est),
            self.verdict_refined,
            self.expected_verdict,
            lambda(self.expected_lambda),
            self.oracle_agreement,
        ))
    }
}

/// Expected outcome of one (subject, operator) pair.
#[derive(Debug, Clone, Copy)]
struct Expectation {
    operator: OperatorTag,
    verdict: Verdict,
    lambda: Option<f64>,
    theorem: TheoremTag,
    direction: Direction,
}

impl Expectation {
    fn new(operator: OperatorTag, theorem: TheoremTag, direction: Direction, verdict: Verdict) -> Self {
        Expectation { operator, verdict, lambda: None, theorem, direction }
    }

    fn eigen(operator: OperatorTag, theorem: TheoremTag, lambda: f64) -> Self {
        Expectation { lambda: Some(lambda), ..Expectation::new(operator, theorem, Direction::Witness, Verdict::Eigen) }
    }

    fn with_verdict(self, verdict: Verdict) -> Self {
        Expectation { verdict, ..self }
    }
}

/// Raw numbers for one operator at one resolution.
#[derive(Debug, Clone, Copy)]
struct Measurement {
    operator_norm: f64,
    mean_norm: f64,
    fit: Option<(f64, f64)>,
    oracle: f64,
}

impl Measurement {
    fn new<A, B, C>(op: &A, mean: &B, oracle: &C) -> Result<Self>
    where
        A: ComponentSamples,
        B: ComponentSamples,
        C: ComponentSamples,
    {
        let op = interior(op, BOUNDARY_LAYER);
        let fit = match eigen_residual(&op, mean) {
            Ok(fit) => Some((fit.lambda, fit.residual)),
            Err(GeometryError::VacuousEigenRelation) => None,
            Err(e) => return Err(e),
        };
        Ok(Measurement { operator_norm: op.max_norm(), mean_norm: mean.max_norm(), fit, oracle: max_difference(&op, oracle) })
    }

    /// Verdict, eigenvalue and the residual that decided the verdict.
    fn classify(&self, operator: OperatorTag, tol: f64) -> (Verdict, Option<f64>, f64) {
        match self.fit {
            _ if self.mean_norm < KAPPA_FLOOR => {
                let lambda = (self.operator_norm <= tol).then_some(0.0);
                (Verdict::GeodesicOrMinimal, lambda, self.operator_norm)
            }
            Some((lambda, _)) if operator.detects_polyharmonic() && self.operator_norm <= tol => {
                (Verdict::Polyharmonic, Some(lambda), self.operator_norm)
            }
            Some((lambda, residual)) if residual <= tol => (Verdict::Eigen, Some(lambda), residual),
            Some((lambda, residual)) => (Verdict::NonEigen, Some(lambda), residual),
            None => (Verdict::GeodesicOrMinimal, None, self.operator_norm),
        }
    }
}

fn report(
    subject: Subject,
    expected: Expectation,
    coarse: Measurement,
    fine: Measurement,
    config: &SuiteConfig,
) -> EigenReport {
    let tol = config.tol;
    let (verdict, lambda_est, residual) = coarse.classify(expected.operator, tol);
    let (verdict_refined, _, residual_refined) = fine.classify(expected.operator, tol);
    let lambda_ok = match (verdict, expected.lambda, lambda_est) {
        (Verdict::Eigen, Some(want), Some(got)) => (got - want).abs() <= 10.0 * tol,
        _ => true,
    };
    let holds = verdict == expected.verdict && verdict_refined == verdict && lambda_ok && coarse.oracle <= ORACLE_CONSTANT * config.h * config.h;
    EigenReport {
        subject,
        operator: expected.operator,
        lambda_est,
        residual,
        residual_refined,
        operator_norm: coarse.operator_norm,
        verdict,
        verdict_refined,
        expected_verdict: expected.verdict,
        expected_lambda: expected.lambda,
        theorem: expected.theorem,
        direction: expected.direction,
        oracle_agreement: coarse.oracle,
        tol,
        holds,
    }
}

const IDENTITY_FRAME: [FrameVector; 3] = [FrameVector([1.0, 0.0, 0.0]), FrameVector([0.0, 1.0, 0.0]), FrameVector([0.0, 0.0, 1.0])];

/// Measures the requested operators on a curve through extraction of its
/// Frenet data from the sampled velocity.
fn measure_curve(
    sf: &SpaceForm,
    subject: &Subject,
    ops: &[OperatorTag],
    h: f64,
    n: usize,
) -> Result<Vec<Measurement>> {
    let (curve, _) = match *subject {
        Subject::Curve { kappa, tau, .. } => {
            synthesize_frenet_curve(sf, |s| kappa.eval(s), |s| tau.eval(s), IDENTITY_FRAME, h, n)?
        }
        Subject::Legendre { kappa, .. } => synthesize_legendre_curve(sf, |s| kappa.eval(s), h, n)?,
        Subject::Cylinder { .. } => unreachable!("cylinders are measured by measure_cylinder"),
    };
    let fd = extract_frenet(sf, &curve)?;
    let mean = mean_curvature_vector(&fd);
    ops.iter()
        .map(|op| match op {
            OperatorTag::Laplacian => {
                Measurement::new(&laplacian_h_closed(&fd), &mean, &laplacian_h_oracle(sf, &curve, &fd)?)
            }
            OperatorTag::NormalLaplacian => {
                Measurement::new(&normal_laplacian_h(&fd), &mean, &normal_laplacian_h_oracle(sf, &curve, &fd)?)
            }
            OperatorTag::Bitension | OperatorTag::Jacobi => {
                Measurement::new(&bitension_curve(sf, &fd), &mean, &bitension_curve_oracle(sf, &curve, &fd)?)
            }
        })
        .collect()
}

fn measure_cylinder(sf: &SpaceForm, kappa_bar: Profile, ops: &[OperatorTag], h: f64, n: usize) -> Result<Vec<Measurement>> {
    let cyl = build_cylinder(sf, |s| kappa_bar.eval(s), h, n)?;
    let mean = cylinder_mean_curvature(&cyl);
    ops.iter()
        .map(|op| {
            let (closed, which) = match op {
                OperatorTag::Laplacian => (cylinder_laplacian_h(&cyl), SurfaceOperator::Laplacian),
                OperatorTag::NormalLaplacian => (cylinder_normal_laplacian_h(&cyl), SurfaceOperator::NormalLaplacian),
                OperatorTag::Bitension | OperatorTag::Jacobi => (cylinder_jacobi_h(&cyl), SurfaceOperator::Jacobi),
            };
            Measurement::new(&closed, &mean, &cylinder_frame_oracle(&cyl, which)?)
        })
        .collect()
}

fn run_subject(
    sf: &SpaceForm,
    subject: Subject,
    expectations: &[Expectation],
    config: &SuiteConfig,
) -> Result<Vec<EigenReport>> {
    let ops: Vec<OperatorTag> = expectations.iter().map(|e| e.operator).collect();
    let (h2, n2) = config.refined();
    let (coarse, fine) = match subject {
        Subject::Cylinder { kappa_bar, .. } => (
            measure_cylinder(sf, kappa_bar, &ops, config.h, config.n())?,
            measure_cylinder(sf, kappa_bar, &ops, h2, n2)?,
        ),
        _ => (measure_curve(sf, &subject, &ops, config.h, config.n())?, measure_curve(sf, &subject, &ops, h2, n2)?),
    };
    Ok(expectations
        .iter()
        .zip(coarse.into_iter().zip(fine))
        .map(|(e, (a, b))| report(subject, *e, a, b, config))
        .collect())
}

/// Outcome of one operator on one subject, without an expectation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub lambda_est: Option<f64>,
    pub residual: f64,
    pub residual_refined: f64,
    pub operator_norm: f64,
    pub verdict: Verdict,
    pub verdict_refined: Verdict,
    pub oracle_agreement: f64,
}

/// Measures `operator` on `subject` at `h` and `h / 2` and classifies the
/// result. Cylinders evaluate `Bitension` as the Jacobi operator.
pub fn observe(subject: Subject, operator: OperatorTag, config: &SuiteConfig) -> Result<Observation> {
    let sf = SpaceForm::new(subject.c());
    let ops = [operator];
    let (h2, n2) = config.refined();
    let (coarse, fine) = match subject {
        Subject::Cylinder { kappa_bar, .. } => (
            measure_cylinder(&sf, kappa_bar, &ops, config.h, config.n())?[0],
            measure_cylinder(&sf, kappa_bar, &ops, h2, n2)?[0],
        ),
        _ => (measure_curve(&sf, &subject, &ops, config.h, config.n())?[0], measure_curve(&sf, &subject, &ops, h2, n2)?[0]),
    };
    let (verdict, lambda_est, residual) = coarse.classify(operator, config.tol);
    let (verdict_refined, _, residual_refined) = fine.classify(operator, config.tol);
    Ok(Observation {
        lambda_est,
        residual,
        residual_refined,
        operator_norm: coarse.operator_norm,
        verdict,
        verdict_refined,
        oracle_agreement: coarse.oracle,
    })
}

/// Curvature values `{0, 1/2, 1, 2}` plus `sqrt(c - 1)` when `c > 1`.
pub fn constant_grid(c: f64) -> Vec<f64> {
    let mut grid = vec![0.0, 0.5, 1.0, 2.0];
    if c > 1.0 {
        let k = (c - 1.0).sqrt();
        if !grid.contains(&k) {
            grid.push(k);
        }
    }
    grid
}

/// Default (kappa, tau) corpus: helices and geodesics from the constant
/// grid, then non-constant counterexamples.
pub fn default_curve_corpus(c: f64) -> Vec<CurveSpec> {
    let mut corpus = Vec::new();
    for kappa in constant_grid(c) {
        for tau in [0.0, 1.0, 2.0] {
            corpus.push(CurveSpec::helix(kappa, tau));
        }
    }
    corpus.extend([
        CurveSpec::new(Profile::affine(1.0, 1.0), Profile::constant(1.0)),
        CurveSpec::new(Profile::affine(0.5, 0.2), Profile::constant(0.0)),
        CurveSpec::new(Profile::Quadratic { a: 1.0, b: 0.0, c: 0.5 }, Profile::constant(1.0)),
        CurveSpec::new(Profile::Cosine { amplitude: 0.5, frequency: 2.0, offset: 1.0 }, Profile::constant(0.5)),
        CurveSpec::new(Profile::Exp { a: 1.0, b: 0.0, rate: 0.5 }, Profile::constant(1.0)),
        CurveSpec::new(Profile::constant(1.0), Profile::affine(1.0, 0.0)),
    ]);
    corpus
}

/// Checks that `Delta H = lambda H` holds exactly for geodesics and helices,
/// with `lambda = kappa^2 + tau^2`, and fails for every other curve.
pub fn verify_curve_eigen_theorem(sf: &SpaceForm, corpus: &[CurveSpec], config: &SuiteConfig) -> Result<Vec<EigenReport>> {
    if corpus.is_empty() {
        return Err(GeometryError::EmptyCorpus);
    }
    let mut out = Vec::new();
    for spec in corpus {
        let subject = Subject::Curve { c: sf.c, kappa: spec.kappa, tau: spec.tau };
        let expected = if spec.is_geodesic() {
            Expectation::eigen(OperatorTag::Laplacian, TheoremTag::CurveEigen, 0.0)
                .with_verdict(Verdict::GeodesicOrMinimal)
        } else if spec.kappa.is_constant() && spec.tau.is_constant() {
            let (k, t) = (spec.kappa.eval(0.0), spec.tau.eval(0.0));
            Expectation::eigen(OperatorTag::Laplacian, TheoremTag::CurveEigen, k * k + t * t)
        } else {
            Expectation::new(OperatorTag::Laplacian, TheoremTag::CurveEigen, Direction::Counterexample, Verdict::NonEigen)
        };
        out.extend(run_subject(sf, subject, &[expected], config)?);
    }
    Ok(out)
}

/// Legendre helices and geodesics over the constant grid plus one
/// non-constant Legendre curve, for each `c`.
pub fn verify_legendre_theorems(c_list: &[f64], config: &SuiteConfig) -> Result<Vec<EigenReport>> {
    use OperatorTag::*;
    use TheoremTag::*;
    let mut out = Vec::new();
    for &c in c_list {
        let sf = SpaceForm::new(c);
        for kappa in constant_grid(c) {
            let subject = Subject::Legendre { c, kappa: Profile::constant(kappa) };
            let expectations = if kappa == 0.0 {
                let geodesic = |op, tag| Expectation::new(op, tag, Direction::Witness, Verdict::GeodesicOrMinimal);
                [
                    geodesic(Laplacian, LegendreLaplacian),
                    geodesic(NormalLaplacian, LegendreNormalLaplacian),
                    geodesic(Bitension, LegendrePolyharmonic),
                ]
            } else {
                let poly = c > 1.0 && kappa == (c - 1.0).sqrt();
                let bitension = if poly {
                    Expectation::new(Bitension, LegendrePolyharmonic, Direction::Witness, Verdict::Polyharmonic)
                } else {
                    Expectation {
                        direction: Direction::Counterexample,
                        ..Expectation::eigen(Bitension, LegendrePolyharmonic, c - 1.0 - kappa * kappa)
                    }
                };
                [
                    Expectation::eigen(Laplacian, LegendreLaplacian, kappa * kappa + 1.0),
                    Expectation::eigen(NormalLaplacian, LegendreNormalLaplacian, 1.0),
                    bitension,
                ]
            };
            out.extend(run_subject(&sf, subject, &expectations, config)?);
        }
        let subject = Subject::Legendre { c, kappa: Profile::affine(0.5, 1.0) };
        let counter = |op, tag| Expectation::new(op, tag, Direction::Counterexample, Verdict::NonEigen);
        let expectations = [
            counter(Laplacian, LegendreLaplacian),
            counter(NormalLaplacian, LegendreNormalLaplacian),
            counter(Bitension, LegendrePolyharmonic),
        ];
        out.extend(run_subject(&sf, subject, &expectations, config)?);
    }
    Ok(out)
}

/// Hopf cylinders over circles, clothoids, solutions of the natural
/// equation and a non-affine base curve, for each `c`.
pub fn verify_hopf_theorems(c_list: &[f64], config: &SuiteConfig) -> Result<Vec<EigenReport>> {
    use OperatorTag::*;
    use TheoremTag::*;
    let counter = |op, tag| Expectation::new(op, tag, Direction::Counterexample, Verdict::NonEigen);
    let mut out = Vec::new();
    for &c in c_list {
        let sf = SpaceForm::new(c);
        for kappa_bar in constant_grid(c) {
            let subject = Subject::Cylinder { c, kappa_bar: Profile::constant(kappa_bar) };
            let expectations = if kappa_bar == 0.0 {
                let minimal = |op, tag| Expectation::new(op, tag, Direction::Witness, Verdict::GeodesicOrMinimal);
                [minimal(Laplacian, HopfLaplacian), minimal(NormalLaplacian, HopfNormalLaplacian), minimal(Jacobi, HopfPolyharmonic)]
            } else {
                let lambda_j = kappa_bar * kappa_bar + 1.0 - c;
                let jacobi = if c > 1.0 && kappa_bar == (c - 1.0).sqrt() {
                    Expectation::new(Jacobi, HopfPolyharmonic, Direction::Witness, Verdict::Polyharmonic)
                } else {
                    Expectation::eigen(Jacobi, HopfJacobi, lambda_j)
                };
                [
                    Expectation::eigen(Laplacian, HopfLaplacian, kappa_bar * kappa_bar + 2.0),
                    Expectation::eigen(NormalLaplacian, HopfNormalLaplacian, 0.0),
                    jacobi,
                ]
            };
            out.extend(run_subject(&sf, subject, &expectations, config)?);
        }
        for kappa_bar in [Profile::affine(1.0, 0.0), Profile::affine(0.5, 1.0)] {
            let expectations = [
                counter(Laplacian, HopfLaplacian),
                Expectation::eigen(NormalLaplacian, HopfNormalLaplacian, 0.0),
                counter(Jacobi, HopfJacobi),
            ];
            out.extend(run_subject(&sf, Subject::Cylinder { c, kappa_bar }, &expectations, config)?);
        }
        for (kappa_bar, lambda) in [
            (Profile::Trig { a: 1.0, b: 0.0, frequency: 2.0 }, 4.0),
            (Profile::Exp { a: 0.0, b: 1.0, rate: 1.0 }, -1.0),
        ] {
            let expectations = [counter(Laplacian, HopfLaplacian), Expectation::eigen(NormalLaplacian, HopfNormalLaplacian, lambda)];
            out.extend(run_subject(&sf, Subject::Cylinder { c, kappa_bar }, &expectations, config)?);
        }
        let quad = Profile::Quadratic { a: 1.0, b: 0.0, c: 1.0 };
        let expectations = [counter(Laplacian, HopfLaplacian), counter(NormalLaplacian, HopfNormalLaplacian)];
        out.extend(run_subject(&sf, Subject::Cylinder { c, kappa_bar: quad }, &expectations, config)?);
    }
    Ok(out)
}

/// Reports whose observed outcome differs from the expected one.
pub fn failures(reports: &[EigenReport]) -> Vec<&EigenReport> {
    reports.iter().filter(|r| !r.holds).collect()
}
