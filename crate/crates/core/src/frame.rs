//! Tangent vectors and vector fields expressed in the global left-invariant
//! orthonormal frame `{e1, e2, e3 = xi}`.

use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Coefficients of a tangent vector along `e1`, `e2` and `xi`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FrameVector(pub [f64; 3]);

impl FrameVector {
    pub const ZERO: FrameVector = FrameVector([0.0, 0.0, 0.0]);

    pub const fn new(a1: f64, a2: f64, a3: f64) -> Self {
        FrameVector([a1, a2, a3])
    }

    /// The `k`-th frame vector, `k` in `0..3`.
    pub fn basis(k: usize) -> Self {
        let mut v = [0.0; 3];
        v[k] = 1.0;
        FrameVector(v)
    }

    pub fn e1() -> Self {
        Self::basis(0)
    }

    pub fn e2() -> Self {
        Self::basis(1)
    }

    /// The Reeb field.
    pub fn xi() -> Self {
        Self::basis(2)
    }

    pub fn dot(&self, other: &FrameVector) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, a| m.max(a.abs()))
    }

    /// Frame cross product, oriented so that `e1 x e2 = xi`.
    pub fn cross(&self, other: &FrameVector) -> FrameVector {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = other.0;
        FrameVector([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    /// Returns `None` for vectors shorter than `floor`.
    pub fn normalized(&self, floor: f64) -> Option<FrameVector> {
        let n = self.norm();
        (n >= floor).then(|| *self * (1.0 / n))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|a| a.is_finite())
    }
}

impl Index<usize> for FrameVector {
    type Output = f64;

    fn index(&self, k: usize) -> &f64 {
        &self.0[k]
    }
}

impl Add for FrameVector {
    type Output = FrameVector;

    fn add(self, rhs: FrameVector) -> FrameVector {
        FrameVector([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl AddAssign for FrameVector {
    fn add_assign(&mut self, rhs: FrameVector) {
        *self = *self + rhs;
    }
}

impl Sub for FrameVector {
    type Output = FrameVector;

    fn sub(self, rhs: FrameVector) -> FrameVector {
        FrameVector([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for FrameVector {
    type Output = FrameVector;

    fn neg(self) -> FrameVector {
        FrameVector([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<f64> for FrameVector {
    type Output = FrameVector;

    fn mul(self, s: f64) -> FrameVector {
        FrameVector([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

impl Mul<FrameVector> for f64 {
    type Output = FrameVector;

    fn mul(self, v: FrameVector) -> FrameVector {
        v * self
    }
}

/// A vector field sampled on a contiguous run of grid indices
/// `first..first + values.len()` of some curve.
///
/// Stencil operations shrink the run, so fields carry their own offset.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FrameField {
    pub first: usize,
    pub values: Vec<FrameVector>,
}

impl FrameField {
    pub fn new(first: usize, values: Vec<FrameVector>) -> Self {
        FrameField { first, values }
    }

    /// A field covering the whole grid starting at sample 0.
    pub fn full(values: Vec<FrameVector>) -> Self {
        FrameField { first: 0, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// One past the last covered grid index.
    pub fn end(&self) -> usize {
        self.first + self.values.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= self.first && i < self.end()
    }

    /// Value at grid index `i`.
    pub fn at(&self, i: usize) -> Option<FrameVector> {
        if self.contains(i) {
            Some(self.values[i - self.first])
        } else {
            None
        }
    }

    /// Grid indices covered by the field.
    pub fn indices(&self) -> std::ops::Range<usize> {
        self.first..self.end()
    }
}
