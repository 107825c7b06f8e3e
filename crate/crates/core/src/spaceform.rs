//! The 3-dimensional Sasakian space form `M^3(c)` realised as a Lie group
//! with a left-invariant orthonormal frame `{e1, e2, e3 = xi}`.
//!
//! Brackets are the unimodular family
//!
//! ```text
//! [e1, e2] = 2 e3,   [e2, e3] = mu e1,   [e3, e1] = mu e2,   mu = (c + 3) / 2
//! ```
//!
//! which gives SU(2) with a Berger metric for `c > -3`, the Heisenberg group
//! for `c = -3` and the universal cover of SL(2, R) for `c < -3`.
//!
//! The Levi-Civita connection is computed from the brackets with the Koszul
//! formula. The curvature tensor is available both as the closed-form
//! Sasakian space form expression and directly from the connection table;
//! the two are independent and are cross-checked in the tests.

use serde::{Deserialize, Serialize};

use crate::frame::FrameVector;

/// Ambient model `M^3(c)`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceForm {
    /// Constant holomorphic sectional curvature.
    pub c: f64,
    /// Structure constant of `[e2, e3]` and `[e3, e1]`.
    pub mu: f64,
    /// Structure constant of `[e1, e2]`.
    pub lambda3: f64,
    /// `brackets[i][j] = [e_i, e_j]`.
    brackets: [[FrameVector; 3]; 3],
    /// `gamma[i][j][k]` is the `e_k` coefficient of `nabla_{e_i} e_j`.
    gamma: [[[f64; 3]; 3]; 3],
}

impl SpaceForm {
    /// Builds `M^3(c)`.
    ///
    /// # Panics
    ///
    /// If `c` is not finite.
    pub fn new(c: f64) -> Self {
        assert!(c.is_finite(), "holomorphic sectional curvature must be finite");
        let mu = (c + 3.0) / 2.0;
        let lambda3 = 2.0;

        let mut brackets = [[FrameVector::ZERO; 3]; 3];
        brackets[0][1] = FrameVector::new(0.0, 0.0, lambda3);
        brackets[1][0] = -brackets[0][1];
        brackets[1][2] = FrameVector::new(mu, 0.0, 0.0);
        brackets[2][1] = -brackets[1][2];
        brackets[2][0] = FrameVector::new(0.0, mu, 0.0);
        brackets[0][2] = -brackets[2][0];

        // Koszul for left-invariant orthonormal frames:
        // g(nabla_i e_j, e_k) = 1/2 (g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j))
        let mut gamma = [[[0.0; 3]; 3]; 3];
        for (i, row) in gamma.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                for (k, g) in entry.iter_mut().enumerate() {
                    *g = 0.5 * (brackets[i][j][k] - brackets[j][k][i] + brackets[k][i][j]);
                }
            }
        }

        SpaceForm { c, mu, lambda3, brackets, gamma }
    }

    /// `[e_i, e_j]`, indices in `0..3`.
    pub fn bracket(&self, i: usize, j: usize) -> FrameVector {
        self.brackets[i][j]
    }

    /// Lie bracket of two left-invariant fields with constant coefficients.
    pub fn bracket_of(&self, x: &FrameVector, y: &FrameVector) -> FrameVector {
        let mut out = FrameVector::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                out += (x[i] * y[j]) * self.brackets[i][j];
            }
        }
        out
    }

    /// Connection coefficient: the `e_k` component of `nabla_{e_i} e_j`.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> f64 {
        self.gamma[i][j][k]
    }

    /// `nabla_{e_i} e_j`.
    pub fn connection(&self, i: usize, j: usize) -> FrameVector {
        FrameVector(self.gamma[i][j])
    }

    /// The connection contraction `sum_ij x^i y^j Gamma^k_ij`, i.e.
    /// `nabla_X Y` for left-invariant fields with constant coefficients.
    pub fn contract(&self, x: &FrameVector, y: &FrameVector) -> FrameVector {
        let mut out = [0.0; 3];
        for i in 0..3 {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..3 {
                let w = x[i] * y[j];
                if w == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += w * self.gamma[i][j][k];
                }
            }
        }
        FrameVector(out)
    }

    /// Contact form: the `xi` coefficient.
    pub fn eta(&self, v: &FrameVector) -> f64 {
        v[2]
    }

    pub fn xi(&self) -> FrameVector {
        FrameVector::xi()
    }

    /// `phi e1 = e2`, `phi e2 = -e1`, `phi xi = 0`.
    pub fn phi(&self, v: &FrameVector) -> FrameVector {
        FrameVector::new(-v[1], v[0], 0.0)
    }

    /// The associated metric; the frame is orthonormal.
    pub fn metric(&self, v: &FrameVector, w: &FrameVector) -> f64 {
        v.dot(w)
    }

    /// `d eta(e_i, e_j) = -eta([e_i, e_j])` with the convention
    /// `d eta(X, Y) = X eta(Y) - Y eta(X) - eta([X, Y])`.
    pub fn d_eta(&self, i: usize, j: usize) -> f64 {
        -self.eta(&self.brackets[i][j])
    }

    /// `(nabla_X phi) Y = nabla_X (phi Y) - phi(nabla_X Y)` for left-invariant `X`, `Y`.
    pub fn nabla_phi(&self, x: &FrameVector, y: &FrameVector) -> FrameVector {
        self.contract(x, &self.phi(y)) - self.phi(&self.contract(x, y))
    }

    /// Covariant derivative along the Reeb flow of a field invariant under
    /// that flow: `nabla_xi V = nabla_V xi + [xi, V]` with `L_xi V = 0`,
    /// written in frame coordinates as `Gamma(xi, V) - [xi, V]`.
    pub fn fiber_derivative(&self, v: &FrameVector) -> FrameVector {
        let xi = self.xi();
        self.contract(&xi, v) - self.bracket_of(&xi, v)
    }

    /// Closed-form curvature tensor of a Sasakian space form of constant
    /// holomorphic sectional curvature `c`.
    pub fn curvature_formula(&self, x: &FrameVector, y: &FrameVector, z: &FrameVector) -> FrameVector {
        let g = |a: &FrameVector, b: &FrameVector| self.metric(a, b);
        let eta = |a: &FrameVector| self.eta(a);
        let xi = self.xi();
        let (phi_x, phi_y, phi_z) = (self.phi(x), self.phi(y), self.phi(z));

        let round = g(y, z) * *x - g(z, x) * *y;
        let contact = eta(z) * eta(x) * *y - eta(y) * eta(z) * *x + g(z, x) * eta(y) * xi
            - g(y, z) * eta(x) * xi
            - g(y, &phi_z) * phi_x
            - g(z, &phi_x) * phi_y
            + 2.0 * g(x, &phi_y) * phi_z;

        ((self.c + 3.0) / 4.0) * round + ((self.c - 1.0) / 4.0) * contact
    }

    /// `R(e_i, e_j) e_k = nabla_i nabla_j e_k - nabla_j nabla_i e_k - nabla_[e_i,e_j] e_k`,
    /// evaluated only from the connection table and the brackets.
    pub fn curvature_from_frame(&self, i: usize, j: usize, k: usize) -> FrameVector {
        let nabla_j_k = self.connection(j, k);
        let nabla_i_k = self.connection(i, k);
        let first = self.contract(&FrameVector::basis(i), &nabla_j_k);
        let second = self.contract(&FrameVector::basis(j), &nabla_i_k);
        let third = self.contract(&self.brackets[i][j], &FrameVector::basis(k));
        first - second - third
    }

    /// Trilinear extension of [`SpaceForm::curvature_from_frame`].
    pub fn curvature_from_frame_applied(
        &self,
        x: &FrameVector,
        y: &FrameVector,
        z: &FrameVector,
    ) -> FrameVector {
        let mut out = FrameVector::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                if i == j || x[i] * y[j] == 0.0 {
                    continue;
                }
                for k in 0..3 {
                    let w = x[i] * y[j] * z[k];
                    if w != 0.0 {
                        out += w * self.curvature_from_frame(i, j, k);
                    }
                }
            }
        }
        out
    }

    /// Sectional curvature of the plane spanned by orthonormal `x`, `y`,
    /// computed from the connection table.
    pub fn sectional_curvature(&self, x: &FrameVector, y: &FrameVector) -> f64 {
        self.metric(&self.curvature_from_frame_applied(x, y, y), x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CS: [f64; 6] = [-7.0, -3.0, 0.0, 1.0, 2.0, 5.0];

    fn frame() -> [FrameVector; 3] {
        [FrameVector::e1(), FrameVector::e2(), FrameVector::xi()]
    }

    #[test]
    fn connection_table_matches_hand_derivation() {
        for c in CS {
            let sf = SpaceForm::new(c);
            let mu = sf.mu;
            assert_eq!(sf.connection(0, 1), FrameVector::new(0.0, 0.0, 1.0));
            assert_eq!(sf.connection(1, 0), FrameVector::new(0.0, 0.0, -1.0));
            assert_eq!(sf.connection(0, 2), FrameVector::new(0.0, -1.0, 0.0));
            assert_eq!(sf.connection(1, 2), FrameVector::new(1.0, 0.0, 0.0));
            assert_eq!(sf.connection(2, 0), FrameVector::new(0.0, mu - 1.0, 0.0));
            assert_eq!(sf.connection(2, 1), FrameVector::new(1.0 - mu, 0.0, 0.0));
            for i in 0..3 {
                assert_eq!(sf.connection(i, i), FrameVector::ZERO);
            }
        }
    }

    #[test]
    fn heisenberg_and_sphere_constants() {
        assert_eq!(SpaceForm::new(-3.0).mu, 0.0);
        assert_eq!(SpaceForm::new(1.0).mu, 2.0);
        for c in CS {
            let sf = SpaceForm::new(c);
            for k in 0..3 {
                assert_eq!(sf.gamma(2, 2, k), 0.0);
            }
        }
    }

    #[test]
    fn metric_compatible_and_torsion_free() {
        for c in CS {
            let sf = SpaceForm::new(c);
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        assert_eq!(sf.gamma(i, k, j), -sf.gamma(i, j, k));
                        let torsion = sf.gamma(i, j, k) - sf.gamma(j, i, k);
                        assert_eq!(torsion, sf.bracket(i, j)[k]);
                    }
                }
            }
        }
    }

    #[test]
    fn structure_equations_hold_on_frame() {
        for c in CS {
            let sf = SpaceForm::new(c);
            let xi = sf.xi();
            for v in frame() {
                // phi^2 = -I + eta (x) xi
                assert_eq!(sf.phi(&sf.phi(&v)), -v + sf.eta(&v) * xi);
                // nabla_v xi = -phi v
                assert_eq!(sf.contract(&v, &xi), -sf.phi(&v));
                for w in frame() {
                    let expected = sf.metric(&v, &w) * xi - sf.eta(&w) * v;
                    assert_eq!(sf.nabla_phi(&v, &w), expected);
                    let compat = sf.metric(&sf.phi(&v), &sf.phi(&w));
                    assert_eq!(compat, sf.metric(&v, &w) - sf.eta(&v) * sf.eta(&w));
                }
            }
            for i in 0..3 {
                for j in 0..3 {
                    let rhs = 2.0 * sf.metric(&FrameVector::basis(i), &sf.phi(&FrameVector::basis(j)));
                    assert_eq!(sf.d_eta(i, j), rhs);
                }
            }
        }
    }

    #[test]
    fn opposite_phi_orientation_breaks_killing_identity() {
        let sf = SpaceForm::new(2.0);
        let flipped = |v: &FrameVector| FrameVector::new(v[1], -v[0], 0.0);
        let v = FrameVector::e1();
        assert_ne!(sf.contract(&v, &sf.xi()), -flipped(&v));
    }

    #[test]
    fn curvature_formula_examples() {
        for c in CS {
            let sf = SpaceForm::new(c);
            let r = sf.curvature_formula(&FrameVector::e1(), &FrameVector::xi(), &FrameVector::xi());
            assert_eq!(r, FrameVector::e1());
            let x = FrameVector::new(0.3, -1.2, 0.7);
            let z = FrameVector::new(-0.4, 0.1, 2.0);
            assert!(sf.curvature_formula(&x, &x, &z).max_abs() < 1e-15);
        }
        let sf = SpaceForm::new(1.0);
        let (x, y, z) = (
            FrameVector::new(0.3, -1.2, 0.7),
            FrameVector::new(1.0, 0.5, -0.2),
            FrameVector::new(-0.4, 0.1, 2.0),
        );
        let expected = y.dot(&z) * x - z.dot(&x) * y;
        assert!((sf.curvature_formula(&x, &y, &z) - expected).max_abs() < 1e-15);
    }

    #[test]
    fn curvature_from_frame_examples() {
        let sf = SpaceForm::new(1.0);
        assert_eq!(sf.curvature_from_frame(0, 1, 1), FrameVector::e1());
        for c in CS {
            assert_eq!(SpaceForm::new(c).curvature_from_frame(0, 2, 2), FrameVector::e1());
        }
        assert_eq!(SpaceForm::new(5.0).curvature_from_frame(0, 1, 1), FrameVector::new(5.0, 0.0, 0.0));
    }

    #[test]
    fn curvature_two_routes_agree() {
        for c in [-7.0, -3.0, 0.0, 1.0, 5.0] {
            let sf = SpaceForm::new(c);
            let f = frame();
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        let a = sf.curvature_from_frame(i, j, k);
                        let b = sf.curvature_formula(&f[i], &f[j], &f[k]);
                        assert!((a - b).max_abs() <= 1e-12, "c={c} ({i},{j},{k}): {a:?} vs {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_derivative_is_minus_phi() {
        // For xi-invariant fields nabla_xi V = nabla_V xi = -phi V.
        for c in CS {
            let sf = SpaceForm::new(c);
            let v = FrameVector::new(0.6, -0.8, 0.25);
            assert!((sf.fiber_derivative(&v) + sf.phi(&v)).max_abs() < 1e-15);
        }
    }
}
