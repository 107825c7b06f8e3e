use proptest::prelude::*;
use sasaki_core::hopf::{build_cylinder, cylinder_frame_oracle, cylinder_laplacian_h, SurfaceOperator};
use sasaki_core::operators::{eigen_residual, laplacian_h_closed, mean_curvature_vector, max_difference};
use sasaki_core::{extract_frenet, synthesize_frenet_curve, synthesize_legendre_curve, FrameVector, GeometryError, Profile, SpaceForm};

fn generic_frame(a: f64, b: f64) -> [FrameVector; 3] {
    let p1 = FrameVector::new(a.cos() * b.cos(), a.sin() * b.cos(), b.sin());
    let p2 = FrameVector::new(-a.sin(), a.cos(), 0.0);
    [p1, p2, p1.cross(&p2)]
}

fn round_trip_error(c: f64, h: f64) -> f64 {
    let length = 1.0;
    let n = (length / h).round() as usize + 1;
    let sf = SpaceForm::new(c);
    let kappa = |s: f64| 1.0 + 0.3 * s.sin();
    let tau = |s: f64| 0.5 + 0.2 * s;
    let (curve, _) = synthesize_frenet_curve(&sf, kappa, tau, generic_frame(0.3, 0.2), h, n).unwrap();
    let fd = extract_frenet(&sf, &curve).unwrap();
    let tau_x = fd.tau.unwrap();
    (0..n)
        .map(|i| {
            let s = i as f64 * h;
            (fd.kappa[i] - kappa(s)).abs().max((tau_x[i] - tau(s)).abs())
        })
        .fold(0.0, f64::max)
}

#[test]
fn frenet_round_trip_is_fourth_order() {
    for c in [-3.0, 1.0, 5.0] {
        let (coarse, fine) = (round_trip_error(c, 0.02), round_trip_error(c, 0.01));
        let ratio = coarse / fine;
        assert!((12.0..=20.0).contains(&ratio), "c={c}: {coarse:e} / {fine:e} = {ratio}");
    }
}

#[test]
fn degenerate_curvature_is_reported() {
    let sf = SpaceForm::new(1.0);
    let (curve, _) = synthesize_frenet_curve(&sf, |s| s, |_| 1.0, generic_frame(0.1, 0.1), 1e-3, 500).unwrap();
    assert_eq!(extract_frenet(&sf, &curve).unwrap_err(), GeometryError::FrenetDegenerate { index: 0 });
}

#[test]
fn cylinder_oracle_second_order() {
    let err = |h: f64| {
        let n = (1.0 / h).round() as usize + 1;
        let cyl = build_cylinder(&SpaceForm::new(2.0), |s| 1.0 + s * s, h, n).unwrap();
        max_difference(&cylinder_laplacian_h(&cyl), &cylinder_frame_oracle(&cyl, SurfaceOperator::Laplacian).unwrap())
    };
    let ratio = err(0.02) / err(0.01);
    assert!((3.0..=5.0).contains(&ratio), "{ratio}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn legendre_curves_stay_horizontal(c in -8.0..8.0f64, kappa in 0.0..3.0f64) {
        let sf = SpaceForm::new(c);
        let (curve, fd) = synthesize_legendre_curve(&sf, |_| kappa, 1e-3, 10_001).unwrap();
        prop_assert!(curve.is_legendre());
        for v in curve.velocity() {
            prop_assert!(sf.eta(v).abs() <= 1e-8);
            prop_assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
        prop_assert!(fd.orthonormality_residual() < 1e-12);
    }

    #[test]
    fn synthesized_frames_stay_orthonormal(
        c in -8.0..8.0f64,
        k in 0.1..3.0f64,
        t in -2.0..2.0f64,
        a in 0.0..3.0f64,
        b in -1.0..1.0f64,
    ) {
        let sf = SpaceForm::new(c);
        let (curve, fd) = synthesize_frenet_curve(&sf, |s| k + 0.1 * s, |_| t, generic_frame(a, b), 1e-3, 2001).unwrap();
        prop_assert!(fd.orthonormality_residual() < 1e-12);
        for v in curve.velocity() {
            prop_assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn helix_eigenvalue_is_kappa_squared_plus_tau_squared(
        c in -8.0..8.0f64,
        k in 0.2..2.5f64,
        t in -2.0..2.0f64,
    ) {
        let sf = SpaceForm::new(c);
        let (curve, _) = synthesize_frenet_curve(&sf, |_| k, |_| t, generic_frame(0.4, -0.3), 1e-3, 1001).unwrap();
        let fd = extract_frenet(&sf, &curve).unwrap();
        let fit = eigen_residual(&laplacian_h_closed(&fd), &mean_curvature_vector(&fd)).unwrap();
        prop_assert!((fit.lambda - (k * k + t * t)).abs() < 1e-4, "{:?}", fit);
    }

    #[test]
    fn profile_text_round_trip(a in -5.0..5.0f64, b in -5.0..5.0f64, w in 0.0..4.0f64, kind in 0usize..6) {
        let profile = match kind {
            0 => Profile::constant(a),
            1 => Profile::affine(a, b),
            2 => Profile::Quadratic { a, b, c: w },
            3 => Profile::Cosine { amplitude: a, frequency: w, offset: b },
            4 => Profile::Trig { a, b, frequency: w },
            _ => Profile::Exp { a, b, rate: w },
        };
        let parsed: Profile = profile.to_string().parse().unwrap();
        prop_assert_eq!(parsed, profile);
    }
}
