//! Finite-difference stencils on uniform arclength grids.

use std::ops::{Add, Mul, Sub};

/// First derivative: central differences in the interior, second-order
/// one-sided differences at the two end samples. `values.len() >= 3`.
pub fn first_derivative(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    debug_assert!(n >= 3);
    (0..n)
        .map(|i| {
            if i == 0 {
                (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h)
            } else if i == n - 1 {
                (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h)
            } else {
                (values[i + 1] - values[i - 1]) / (2.0 * h)
            }
        })
        .collect()
}

/// Second derivative, second-order accurate everywhere. `values.len() >= 4`.
pub fn second_derivative(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    debug_assert!(n >= 4);
    let h2 = h * h;
    (0..n)
        .map(|i| {
            if i == 0 {
                (2.0 * values[0] - 5.0 * values[1] + 4.0 * values[2] - values[3]) / h2
            } else if i == n - 1 {
                (2.0 * values[n - 1] - 5.0 * values[n - 2] + 4.0 * values[n - 3] - values[n - 4]) / h2
            } else {
                (values[i + 1] - 2.0 * values[i] + values[i - 1]) / h2
            }
        })
        .collect()
}

/// Fourth-order first derivative at sample `i` of a grid with at least five
/// samples; five-point central in the interior, five-point one-sided near the ends.
pub fn first_derivative_o4<T>(values: &[T], h: f64, i: usize) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    const EDGE: [f64; 5] = [-25.0, 48.0, -36.0, 16.0, -3.0];
    const NEAR_EDGE: [f64; 5] = [-3.0, -10.0, 18.0, -6.0, 1.0];
    const CENTRAL: [f64; 5] = [1.0, -8.0, 0.0, 8.0, -1.0];
    apply_stencil(values, i, h * 12.0, -1.0, &CENTRAL, &EDGE, &NEAR_EDGE)
}

/// Fourth-order second derivative at sample `i`: five-point central in the
/// interior, six-point one-sided near the ends (third order on five-sample grids).
pub fn second_derivative_o4<T>(values: &[T], h: f64, i: usize) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    const CENTRAL: [f64; 5] = [-1.0, 16.0, -30.0, 16.0, -1.0];
    let scale = 12.0 * h * h;
    if values.len() >= 6 {
        const EDGE: [f64; 6] = [45.0, -154.0, 214.0, -156.0, 61.0, -10.0];
        const NEAR_EDGE: [f64; 6] = [10.0, -15.0, -4.0, 14.0, -6.0, 1.0];
        apply_stencil(values, i, scale, 1.0, &CENTRAL, &EDGE, &NEAR_EDGE)
    } else {
        const EDGE: [f64; 5] = [35.0, -104.0, 114.0, -56.0, 11.0];
        const NEAR_EDGE: [f64; 5] = [11.0, -20.0, 6.0, 4.0, -1.0];
        apply_stencil(values, i, scale, 1.0, &CENTRAL, &EDGE, &NEAR_EDGE)
    }
}

/// Weighted sum over a central stencil `i-2..=i+2`, or over nodes running
/// inward from the nearest end for the two samples at each end.
/// `mirror` is the sign picked up by the one-sided weights at the far end.
fn apply_stencil<T>(values: &[T], i: usize, scale: f64, mirror: f64, central: &[f64], edge: &[f64], near_edge: &[f64]) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    let n = values.len();
    debug_assert!(n >= 5);
    let weighted = |node: &dyn Fn(usize) -> T, weights: &[f64], sign: f64| {
        let mut acc = node(0) * (sign * weights[0]);
        for (k, w) in weights.iter().enumerate().skip(1) {
            acc = acc + node(k) * (sign * w);
        }
        acc * (1.0 / scale)
    };
    if i >= 2 && i + 2 < n {
        weighted(&|k| values[i - 2 + k], central, 1.0)
    } else if i < 2 {
        weighted(&|k| values[k], if i == 0 { edge } else { near_edge }, 1.0)
    } else {
        weighted(&|k| values[n - 1 - k], if i == n - 1 { edge } else { near_edge }, mirror)
    }
}

/// Midpoint value between samples `i` and `i + 1` by cubic interpolation
/// (four-point Lagrange, shifted inward at the ends).
pub fn midpoint_cubic(values: &[f64], i: usize) -> f64 {
    let n = values.len();
    debug_assert!(i + 1 < n);
    if n < 4 {
        return 0.5 * (values[i] + values[i + 1]);
    }
    if i == 0 {
        // nodes 0,1,2,3 at t = 0.5
        (5.0 * values[0] + 15.0 * values[1] - 5.0 * values[2] + values[3]) / 16.0
    } else if i + 2 >= n {
        // nodes n-4..n-1 at t = n - 1.5
        (values[n - 4] - 5.0 * values[n - 3] + 15.0 * values[n - 2] + 5.0 * values[n - 1]) / 16.0
    } else {
        (-values[i - 1] + 9.0 * values[i] + 9.0 * values[i + 1] - values[i + 2]) / 16.0
    }
}
