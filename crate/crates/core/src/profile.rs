//! Scalar arclength profiles used to prescribe curvature and torsion.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// A scalar function of arclength from a small closed family.
///
/// Text form (used on the command line): `const:a`, `affine:a,b` for
/// `a s + b`, `quad:a,b,c` for `a s^2 + b s + c`, `cos:a,w,b` for
/// `a cos(w s) + b`, `trig:a,b,w` for `a cos(w s) + b sin(w s)`,
/// `exp:a,b,w` for `a exp(w s) + b exp(-w s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Profile {
    Constant { value: f64 },
    Affine { slope: f64, offset: f64 },
    Quadratic { a: f64, b: f64, c: f64 },
    Cosine { amplitude: f64, frequency: f64, offset: f64 },
    Trig { a: f64, b: f64, frequency: f64 },
    Exp { a: f64, b: f64, rate: f64 },
}

impl Profile {
    pub fn constant(value: f64) -> Self {
        Profile::Constant { value }
    }

    pub fn affine(slope: f64, offset: f64) -> Self {
        Profile::Affine { slope, offset }
    }

    pub fn eval(&self, s: f64) -> f64 {
        match *self {
            Profile::Constant { value } => value,
            Profile::Affine { slope, offset } => slope * s + offset,
            Profile::Quadratic { a, b, c } => (a * s + b) * s + c,
            Profile::Cosine { amplitude, frequency, offset } => amplitude * (frequency * s).cos() + offset,
            Profile::Trig { a, b, frequency } => a * (frequency * s).cos() + b * (frequency * s).sin(),
            Profile::Exp { a, b, rate } => a * (rate * s).exp() + b * (-rate * s).exp(),
        }
    }

    /// True when the profile is constant in `s` for every parameter value.
    pub fn is_constant(&self) -> bool {
        match *self {
            Profile::Constant { .. } => true,
            Profile::Affine { slope, .. } => slope == 0.0,
            Profile::Quadratic { a, b, .. } => a == 0.0 && b == 0.0,
            Profile::Cosine { amplitude, frequency, .. } => amplitude == 0.0 || frequency == 0.0,
            Profile::Trig { a, b, frequency } => (a == 0.0 && b == 0.0) || (frequency == 0.0 && b == 0.0),
            Profile::Exp { a, b, rate } => rate == 0.0 || (a == 0.0 && b == 0.0),
        }
    }

    /// True when the profile is affine in `s`.
    pub fn is_affine(&self) -> bool {
        match *self {
            Profile::Affine { .. } => true,
            Profile::Quadratic { a, .. } => a == 0.0,
            _ => self.is_constant(),
        }
    }

    pub fn samples(&self, h: f64, n: usize) -> Vec<f64> {
        (0..n).map(|i| self.eval(i as f64 * h)).collect()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Profile::Constant { value } => write!(f, "const:{value}"),
            Profile::Affine { slope, offset } => write!(f, "affine:{slope},{offset}"),
            Profile::Quadratic { a, b, c } => write!(f, "quad:{a},{b},{c}"),
            Profile::Cosine { amplitude, frequency, offset } => write!(f, "cos:{amplitude},{frequency},{offset}"),
            Profile::Trig { a, b, frequency } => write!(f, "trig:{a},{b},{frequency}"),
            Profile::Exp { a, b, rate } => write!(f, "exp:{a},{b},{rate}"),
        }
    }
}

impl FromStr for Profile {
    type Err = GeometryError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || GeometryError::InvalidProfile(text.to_string());
        let (kind, args) = text.split_once(':').ok_or_else(bad)?;
        let args: Vec<f64> = args
            .split(',')
            .map(|a| a.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        if args.iter().any(|a| !a.is_finite()) {
            return Err(bad());
        }
        let profile = match (kind.trim(), args.as_slice()) {
            ("const", [value]) => Profile::Constant { value: *value },
            ("affine", [slope, offset]) => Profile::Affine { slope: *slope, offset: *offset },
            ("quad", [a, b, c]) => Profile::Quadratic { a: *a, b: *b, c: *c },
            ("cos", [amplitude, frequency, offset]) => Profile::Cosine {
                amplitude: *amplitude,
                frequency: *frequency,
                offset: *offset,
            },
            ("trig", [a, b, frequency]) => Profile::Trig { a: *a, b: *b, frequency: *frequency },
            ("exp", [a, b, rate]) => Profile::Exp { a: *a, b: *b, rate: *rate },
            _ => return Err(bad()),
        };
        Ok(profile)
    }
}
