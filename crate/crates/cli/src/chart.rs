//! Matrix charts for positions in `M^3(c)`.
//!
//! A curve with frame velocity `u(s)` is traced by integrating
//! `G' = G (u^1 E_1 + u^2 E_2 + u^3 E_3)` where the `E_i` realise the
//! bracket relations of the frame as matrices:
//!
//! * `c > -3`: unit quaternions, `E = (a i, a j, b k)` with `b = mu/2`,
//!   `a = sqrt(b)` (the round SU(2) when `c = 1`), plotted by stereographic
//!   projection from a pole chosen away from the data;
//! * `c = -3`: unipotent upper-triangular 3x3 matrices (Heisenberg group);
//! * `c < -3`: SL(2,R) with `E = (a H, a X, b J)`, `b = -mu/2`, `a = sqrt(b)`.

use std::f64::consts::{PI, TAU};
use std::fmt;

use anyhow::{bail, Result};
use clap::ValueEnum;
use nalgebra::{Matrix2, Matrix3, Quaternion};
use sasaki_core::stencil::midpoint_cubic;
use sasaki_core::{FrameVector, SampledCurve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChartKind {
    /// Pick the chart matching `c`.
    Auto,
    /// Round unit quaternions, `c = 1` only.
    Su2,
    /// Quaternions with Berger scaling, `c > -3`.
    Berger,
    /// Heisenberg group, `c = -3`.
    Heisenberg,
    /// SL(2,R), `c < -3`.
    Sl2r,
}

impl ChartKind {
    const CONCRETE: [ChartKind; 4] = [ChartKind::Su2, ChartKind::Berger, ChartKind::Heisenberg, ChartKind::Sl2r];

    fn supports(self, c: f64) -> bool {
        match self {
            ChartKind::Auto => c.is_finite(),
            ChartKind::Su2 => c == 1.0,
            ChartKind::Berger => c > -3.0 && c.is_finite(),
            ChartKind::Heisenberg => c == -3.0,
            ChartKind::Sl2r => c < -3.0 && c.is_finite(),
        }
    }

    fn range(self) -> &'static str {
        match self {
            ChartKind::Auto => "any finite c",
            ChartKind::Su2 => "c = 1",
            ChartKind::Berger => "c > -3",
            ChartKind::Heisenberg => "c = -3",
            ChartKind::Sl2r => "c < -3",
        }
    }
}

impl fmt::Display for ChartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        f.write_str(&name)
    }
}

/// Group element in one of the charts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Element {
    Quat(Quaternion<f64>),
    Heis(Matrix3<f64>),
    Sl2(Matrix2<f64>),
}

impl Element {
    fn axpy(&self, k: f64, d: &Element) -> Element {
        match (self, d) {
            (Element::Quat(g), Element::Quat(d)) => Element::Quat(g + d * k),
            (Element::Heis(g), Element::Heis(d)) => Element::Heis(g + d * k),
            (Element::Sl2(g), Element::Sl2(d)) => Element::Sl2(g + d * k),
            _ => unreachable!("mixed charts"),
        }
    }

    fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Quat(a), Element::Quat(b)) => Element::Quat(a * b),
            (Element::Heis(a), Element::Heis(b)) => Element::Heis(a * b),
            (Element::Sl2(a), Element::Sl2(b)) => Element::Sl2(a * b),
            _ => unreachable!("mixed charts"),
        }
    }

    /// Largest entry of `self - other`.
    #[cfg(test)]
    pub fn distance(&self, other: &Element) -> f64 {
        let d = self.axpy(-1.0, other);
        match d {
            Element::Quat(q) => q.coords.amax(),
            Element::Heis(m) => m.amax(),
            Element::Sl2(m) => m.amax(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Chart {
    Berger { a: f64, b: f64, pole: Quaternion<f64> },
    Heisenberg,
    Sl2r { a: f64, b: f64 },
}

impl Chart {
    pub fn select(kind: ChartKind, c: f64) -> Result<Chart> {
        if !kind.supports(c) {
            let list: Vec<String> = ChartKind::CONCRETE.iter().map(|k| format!("{k} ({})", k.range())).collect();
            bail!("chart `{kind}` is unavailable for c={c}; supported charts: {}", list.join(", "));
        }
        let mu = (c + 3.0) / 2.0;
        Ok(if c > -3.0 {
            let b = mu / 2.0;
            Chart::Berger { a: b.sqrt(), b, pole: -Quaternion::identity() }
        } else if c == -3.0 {
            Chart::Heisenberg
        } else {
            let b = -mu / 2.0;
            Chart::Sl2r { a: b.sqrt(), b }
        })
    }

    /// Header text naming the chart and the meaning of `x, y, z`.
    pub fn describe(&self) -> String {
        match *self {
            Chart::Berger { a, b, pole } => format!(
                "berger-su2 unit quaternions q, frame (a i, a j, b k) with a={a} b={b}; \
                 x,y,z = stereographic projection from pole p=({},{},{},{}) of r = -conj(p) q, (r1,r2,r3)/(1+r0)",
                pole.w, pole.i, pole.j, pole.k
            ),
            Chart::Heisenberg => {
                "heisenberg upper-triangular [[1,x,z],[0,1,y],[0,0,1]], frame (E12, E23, E13/2); x,y,z = matrix entries"
                    .to_string()
            }
            Chart::Sl2r { a, b } => format!(
                "sl2r matrices G, frame (a H, a X, b J) with a={a} b={b}; \
                 x + i y = G.i in the upper half plane, z = unwrapped fibre angle atan2(-G10, G11)"
            ),
        }
    }

    /// Period of the fibre flow when fibres close in the chart.
    pub fn fiber_period(&self) -> Option<f64> {
        match *self {
            Chart::Berger { b, .. } => Some(TAU / b),
            _ => None,
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            Chart::Berger { .. } => Element::Quat(Quaternion::identity()),
            Chart::Heisenberg => Element::Heis(Matrix3::identity()),
            Chart::Sl2r { .. } => Element::Sl2(Matrix2::identity()),
        }
    }

    /// Matrix of the frame vector `u` in the Lie algebra.
    pub fn algebra(&self, u: &FrameVector) -> Element {
        let [u1, u2, u3] = u.0;
        match *self {
            Chart::Berger { a, b, .. } => Element::Quat(Quaternion::new(0.0, a * u1, a * u2, b * u3)),
            Chart::Heisenberg => Element::Heis(Matrix3::new(0.0, u1, 0.5 * u3, 0.0, 0.0, u2, 0.0, 0.0, 0.0)),
            Chart::Sl2r { a, b } => Element::Sl2(Matrix2::new(a * u1, a * u2 + b * u3, a * u2 - b * u3, -a * u1)),
        }
    }

    /// Projects back onto the group after a step.
    fn renormalize(&self, g: Element) -> Element {
        match g {
            Element::Quat(q) => Element::Quat(q.normalize()),
            Element::Heis(mut m) => {
                for i in 0..3 {
                    m[(i, i)] = 1.0;
                    for j in 0..i {
                        m[(i, j)] = 0.0;
                    }
                }
                Element::Heis(m)
            }
            Element::Sl2(m) => {
                let det = m.determinant();
                Element::Sl2(m / det.abs().sqrt())
            }
        }
    }

    /// Group elements along `curve`, starting at the identity.
    pub fn trace(&self, curve: &SampledCurve) -> Vec<Element> {
        let h = curve.h();
        let velocity = curve.velocity();
        let components: [Vec<f64>; 3] = [0, 1, 2].map(|k| velocity.iter().map(|v| v[k]).collect());
        let mut g = self.identity();
        let mut out = Vec::with_capacity(velocity.len());
        out.push(g);
        for i in 0..velocity.len().saturating_sub(1) {
            let mid = FrameVector([0, 1, 2].map(|k| midpoint_cubic(&components[k], i)));
            let (a0, am, a1) = (self.algebra(&velocity[i]), self.algebra(&mid), self.algebra(&velocity[i + 1]));
            let k1 = g.mul(&a0);
            let k2 = g.axpy(0.5 * h, &k1).mul(&am);
            let k3 = g.axpy(0.5 * h, &k2).mul(&am);
            let k4 = g.axpy(h, &k3).mul(&a1);
            let step = k1.axpy(2.0, &k2).axpy(2.0, &k3).axpy(1.0, &k4);
            g = self.renormalize(g.axpy(h / 6.0, &step));
            out.push(g);
        }
        out
    }

    /// `g exp(t E_3)`: the point reached by flowing `t` along the fibre.
    pub fn fiber(&self, g: &Element, t: f64) -> Element {
        let flow = match *self {
            Chart::Berger { b, .. } => Element::Quat(Quaternion::new((b * t).cos(), 0.0, 0.0, (b * t).sin())),
            Chart::Heisenberg => Element::Heis(Matrix3::new(1.0, 0.0, 0.5 * t, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0)),
            Chart::Sl2r { b, .. } => {
                let (s, c) = (b * t).sin_cos();
                Element::Sl2(Matrix2::new(c, s, -s, c))
            }
        };
        g.mul(&flow)
    }

    /// Plot coordinates. `near` fixes the branch of the SL(2,R) fibre angle.
    pub fn coords(&self, g: &Element, near: Option<[f64; 3]>) -> [f64; 3] {
        match g {
            Element::Quat(q) => {
                let pole = match self {
                    Chart::Berger { pole, .. } => *pole,
                    _ => unreachable!("mixed charts"),
                };
                let r = -(pole.conjugate() * q);
                let d = 1.0 + r.w;
                [r.i / d, r.j / d, r.k / d]
            }
            Element::Heis(m) => [m[(0, 1)], m[(1, 2)], m[(0, 2)]],
            Element::Sl2(m) => {
                let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
                let denom = c * c + d * d;
                let x = (a * c + b * d) / denom;
                let y = 1.0 / denom;
                let mut theta = (-c).atan2(d);
                if let Some(prev) = near {
                    theta += TAU * ((prev[2] - theta + PI) / TAU).floor();
                }
                [x, y, theta]
            }
        }
    }

    /// Moves the stereographic pole to the unit Hurwitz quaternion farthest
    /// from every element. Other charts are returned unchanged.
    pub fn with_pole_avoiding<'a>(&self, elements: impl IntoIterator<Item = &'a Element> + Clone) -> Chart {
        let Chart::Berger { a, b, .. } = *self else { return *self };
        let mut candidates = Vec::with_capacity(24);
        for k in 0..4 {
            for sign in [-1.0, 1.0] {
                let mut v = [0.0; 4];
                v[k] = sign;
                candidates.push(Quaternion::new(v[0], v[1], v[2], v[3]));
            }
        }
        for bits in 0..16u32 {
            let sign = |k: u32| if bits & (1 << k) == 0 { 0.5 } else { -0.5 };
            candidates.push(Quaternion::new(sign(0), sign(1), sign(2), sign(3)));
        }
        let clearance = |p: &Quaternion<f64>| {
            elements
                .clone()
                .into_iter()
                .map(|g| match g {
                    Element::Quat(q) => (q - p).norm(),
                    _ => f64::INFINITY,
                })
                .fold(f64::INFINITY, f64::min)
        };
        let mut best = (candidates[0], clearance(&candidates[0]));
        for p in &candidates[1..] {
            let d = clearance(p);
            if d > best.1 {
                best = (*p, d);
            }
        }
        Chart::Berger { a, b, pole: best.0 }
    }

    /// Coordinates along a traced curve, with continuous fibre angle.
    pub fn polyline(&self, elements: &[Element]) -> Vec<[f64; 3]> {
        let mut out: Vec<[f64; 3]> = Vec::with_capacity(elements.len());
        for g in elements {
            let p = self.coords(g, out.last().copied());
            out.push(p);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sasaki_core::{synthesize_frenet_curve, SpaceForm};

    fn bracket(chart: &Chart, x: &FrameVector, y: &FrameVector) -> Element {
        let (a, b) = (chart.algebra(x), chart.algebra(y));
        a.mul(&b).axpy(-1.0, &b.mul(&a))
    }

    #[test]
    fn generators_satisfy_frame_brackets() {
        for c in [-9.0, -5.0, -3.0, -1.0, 1.0, 2.0, 5.0] {
            let chart = Chart::select(ChartKind::Auto, c).unwrap();
            let sf = SpaceForm::new(c);
            for i in 0..3 {
                for j in 0..3 {
                    let got = bracket(&chart, &FrameVector::basis(i), &FrameVector::basis(j));
                    let want = chart.algebra(&sf.bracket(i, j));
                    assert!(got.distance(&want) < 1e-14, "c={c} [e{i}, e{j}]");
                }
            }
        }
    }

    #[test]
    fn selection_and_errors() {
        assert!(matches!(Chart::select(ChartKind::Auto, 5.0).unwrap(), Chart::Berger { .. }));
        assert!(matches!(Chart::select(ChartKind::Su2, 1.0).unwrap(), Chart::Berger { a: 1.0, b: 1.0, .. }));
        assert_eq!(Chart::select(ChartKind::Auto, -3.0).unwrap(), Chart::Heisenberg);
        assert!(matches!(Chart::select(ChartKind::Sl2r, -7.0).unwrap(), Chart::Sl2r { .. }));
        let err = Chart::select(ChartKind::Heisenberg, 5.0).unwrap_err().to_string();
        assert!(err.contains("supported charts") && err.contains("berger (c > -3)"), "{err}");
        assert!(Chart::select(ChartKind::Auto, f64::NAN).is_err());
        assert!(Chart::select(ChartKind::Su2, 2.0).is_err());
    }

    #[test]
    fn berger_fibres_close() {
        for c in [-1.0, 1.0, 5.0] {
            let chart = Chart::select(ChartKind::Auto, c).unwrap();
            let g = Element::Quat(Quaternion::new(0.5, 0.5, -0.5, 0.5));
            let period = chart.fiber_period().unwrap();
            assert!(chart.fiber(&g, period).distance(&g) < 1e-12);
            assert!(chart.fiber(&g, 0.5 * period).distance(&g) > 0.5);
        }
    }

    #[test]
    fn unit_speed_on_the_round_sphere() {
        let sf = SpaceForm::new(1.0);
        let frame = [FrameVector::e1(), FrameVector::e2(), FrameVector::xi()];
        let h = 1e-3;
        let (curve, _) = synthesize_frenet_curve(&sf, |s| 1.0 + 0.5 * s, |_| 0.7, frame, h, 1001).unwrap();
        let chart = Chart::select(ChartKind::Su2, 1.0).unwrap();
        let path = chart.trace(&curve);
        for w in path.windows(2) {
            let (Element::Quat(a), Element::Quat(b)) = (w[0], w[1]) else { unreachable!() };
            assert!(((b - a).norm() / h - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn constraints_are_kept() {
        let frame = [FrameVector::e1(), FrameVector::e2(), FrameVector::xi()];
        for c in [-7.0, -3.0, 2.0] {
            let sf = SpaceForm::new(c);
            let (curve, _) = synthesize_frenet_curve(&sf, |_| 1.5, |_| 0.3, frame, 1e-2, 500).unwrap();
            let chart = Chart::select(ChartKind::Auto, c).unwrap();
            for g in chart.trace(&curve) {
                match g {
                    Element::Quat(q) => assert!((q.norm() - 1.0).abs() < 1e-14),
                    Element::Heis(m) => assert_eq!((m[(0, 0)], m[(1, 0)], m[(2, 2)]), (1.0, 0.0, 1.0)),
                    Element::Sl2(m) => assert!((m.determinant() - 1.0).abs() < 1e-12),
                }
            }
        }
    }

    #[test]
    fn pole_avoids_the_data() {
        let chart = Chart::select(ChartKind::Su2, 1.0).unwrap();
        let g = chart.identity();
        let ring: Vec<Element> = (0..64).map(|j| chart.fiber(&g, j as f64 * TAU / 64.0)).collect();
        let chart = chart.with_pole_avoiding(&ring);
        for p in ring.iter().map(|g| chart.coords(g, None)) {
            assert!(p.iter().all(|x| x.is_finite() && x.abs() < 10.0), "{p:?}");
        }
        let Chart::Berger { pole, .. } = chart else { unreachable!() };
        assert_eq!(chart.coords(&Element::Quat(-pole), None), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn sl2_angle_is_continuous() {
        let chart = Chart::select(ChartKind::Auto, -7.0).unwrap();
        let g = chart.identity();
        let ring: Vec<Element> = (0..=40).map(|j| chart.fiber(&g, j as f64 * 0.1)).collect();
        let pts = chart.polyline(&ring);
        for w in pts.windows(2) {
            assert!((w[1][2] - w[0][2]).abs() < 1.0);
        }
        // c = -7: b = 1
        assert!((pts[40][2] - 4.0).abs() < 1e-12);
    }
}
