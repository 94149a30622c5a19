//! Curvature of diagonal metrics from component derivatives.
//!
//! The engine builds Christoffel symbols, their derivatives and the full
//! Riemann tensor from the metric components and their first and second
//! partial derivatives. It makes no use of conformal flatness, which is what
//! lets it act as an independent check on closed-form curvature expressions.
//!
//! Everything is generic over [`Scalar`]: with `f64` it evaluates at a point,
//! with [`crate::jet::Jet`] it carries whole Taylor series so that further
//! derivatives of the curvature (needed for `□R`) come for free.

use crate::jet::Scalar;

/// Which of the two common Riemann sign conventions to use. Both contract to
/// Ricci as `R_μν = R^α_{μαν}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiemannSign {
    /// `R^α_{βγδ} = ∂_δ Γ^α_{βγ} − ∂_γ Γ^α_{βδ} + …`
    DeltaFirst,
    /// `R^α_{βγδ} = ∂_γ Γ^α_{βδ} − ∂_δ Γ^α_{βγ} + …`; reproduces the
    /// printed FLRW forms and `R = −12H²` on de Sitter with signature (+−−−).
    GammaFirst,
}

impl RiemannSign {
    fn factor(self) -> f64 {
        match self {
            RiemannSign::DeltaFirst => -1.0,
            RiemannSign::GammaFirst => 1.0,
        }
    }
}

/// Diagonal metric `g = diag(g_0, …, g_{N−1})` with derivatives.
///
/// `first[μ][λ] = ∂_λ g_μ`, `second[μ][λ][κ] = ∂_κ ∂_λ g_μ`.
#[derive(Debug, Clone, Copy)]
pub struct DiagonalMetric<S, const N: usize> {
    pub components: [S; N],
    pub first: [[S; N]; N],
    pub second: [[[S; N]; N]; N],
}

pub type Christoffel<S, const N: usize> = [[[S; N]; N]; N];
pub type Riemann<S, const N: usize> = [[[[S; N]; N]; N]; N];

fn kron<S: Scalar>(i: usize, j: usize, value: S) -> S {
    if i == j {
        value
    } else {
        S::zero()
    }
}

impl<S: Scalar, const N: usize> DiagonalMetric<S, N> {
    pub fn inverse(&self) -> [S; N] {
        let mut inv = [S::zero(); N];
        for (i, g) in self.components.iter().enumerate() {
            inv[i] = S::from_f64(1.0) / *g;
        }
        inv
    }

    /// `Γ^α_{βγ}` indexed `[α][β][γ]`.
    pub fn christoffel(&self) -> Christoffel<S, N> {
        let inv = self.inverse();
        let mut gamma = [[[S::zero(); N]; N]; N];
        for (al, row) in gamma.iter_mut().enumerate() {
            for (b, col) in row.iter_mut().enumerate() {
                for (c, slot) in col.iter_mut().enumerate() {
                    let x =
                        kron(al, b, self.first[al][c]) + kron(al, c, self.first[al][b]) - kron(b, c, self.first[b][al]);
                    *slot = (inv[al] * x).scale(0.5);
                }
            }
        }
        gamma
    }

    /// `∂_δ Γ^α_{βγ}` indexed `[δ][α][β][γ]`.
    pub fn christoffel_derivative(&self) -> Riemann<S, N> {
        let inv = self.inverse();
        let mut out = [[[[S::zero(); N]; N]; N]; N];
        for (d, block) in out.iter_mut().enumerate() {
            for al in 0..N {
                let dinv = -(self.first[al][d] * inv[al] * inv[al]);
                for b in 0..N {
                    for c in 0..N {
                        let x = kron(al, b, self.first[al][c]) + kron(al, c, self.first[al][b])
                            - kron(b, c, self.first[b][al]);
                        let dx = kron(al, b, self.second[al][c][d]) + kron(al, c, self.second[al][b][d])
                            - kron(b, c, self.second[b][al][d]);
                        block[al][b][c] = (dinv * x + inv[al] * dx).scale(0.5);
                    }
                }
            }
        }
        out
    }

    /// `R^α_{βγδ}` indexed `[α][β][γ][δ]`.
    pub fn riemann(&self, sign: RiemannSign) -> Riemann<S, N> {
        let g = self.christoffel();
        let dg = self.christoffel_derivative();
        let s = sign.factor();
        let mut out = [[[[S::zero(); N]; N]; N]; N];
        for al in 0..N {
            for b in 0..N {
                for c in 0..N {
                    for d in 0..N {
                        let mut r = dg[c][al][b][d] - dg[d][al][b][c];
                        for m in 0..N {
                            r += g[al][m][c] * g[m][b][d] - g[al][m][d] * g[m][b][c];
                        }
                        out[al][b][c][d] = r.scale(s);
                    }
                }
            }
        }
        out
    }
}

/// `R_μν = R^α_{μαν}`.
pub fn ricci<S: Scalar, const N: usize>(riemann: &Riemann<S, N>) -> [[S; N]; N] {
    let mut out = [[S::zero(); N]; N];
    for (m, row) in out.iter_mut().enumerate() {
        for (n, slot) in row.iter_mut().enumerate() {
            let mut acc = S::zero();
            for (al, block) in riemann.iter().enumerate() {
                acc += block[m][al][n];
            }
            *slot = acc;
        }
    }
    out
}

pub fn ricci_scalar<S: Scalar, const N: usize>(ricci: &[[S; N]; N], inverse: &[S; N]) -> S {
    let mut acc = S::zero();
    for i in 0..N {
        acc += inverse[i] * ricci[i][i];
    }
    acc
}

/// `R_μν R^μν` for a diagonal metric.
pub fn ricci_square<S: Scalar, const N: usize>(ricci: &[[S; N]; N], inverse: &[S; N]) -> S {
    let mut acc = S::zero();
    for i in 0..N {
        for j in 0..N {
            acc += inverse[i] * inverse[j] * ricci[i][j] * ricci[i][j];
        }
    }
    acc
}

/// `R_{αβγδ} R^{αβγδ}` for a diagonal metric.
pub fn riemann_square<S: Scalar, const N: usize>(riemann: &Riemann<S, N>, components: &[S; N], inverse: &[S; N]) -> S {
    let mut acc = S::zero();
    for al in 0..N {
        for b in 0..N {
            for c in 0..N {
                for d in 0..N {
                    let r = riemann[al][b][c][d];
                    acc += components[al] * inverse[b] * inverse[c] * inverse[d] * r * r;
                }
            }
        }
    }
    acc
}

/// Weyl square `C_{αβγδ}C^{αβγδ}` in dimension `N ≥ 3`.
pub fn weyl_square<S: Scalar>(riemann_sq: S, ricci_sq: S, scalar: S, dim: usize) -> S {
    let n = dim as f64;
    riemann_sq - ricci_sq.scale(4.0 / (n - 2.0)) + (scalar * scalar).scale(2.0 / ((n - 1.0) * (n - 2.0)))
}

/// Covariant Hessian `∇_μ∇_ν f = ∂_μ∂_ν f − Γ^λ_{μν} ∂_λ f`.
pub fn covariant_hessian<S: Scalar, const N: usize>(
    gradient: &[S; N],
    hessian: &[[S; N]; N],
    christoffel: &Christoffel<S, N>,
) -> [[S; N]; N] {
    let mut out = *hessian;
    for (m, row) in out.iter_mut().enumerate() {
        for (n, slot) in row.iter_mut().enumerate() {
            for (l, g) in gradient.iter().enumerate() {
                *slot = *slot - christoffel[l][m][n] * *g;
            }
        }
    }
    out
}

/// `∇^μ T_μν` for a diagonal symmetric tensor with diagonal metric.
///
/// `derivative[μ][λ] = ∂_λ T_μμ`.
pub fn divergence_of_diagonal<S: Scalar, const N: usize>(
    tensor: &[S; N],
    derivative: &[[S; N]; N],
    inverse: &[S; N],
    christoffel: &Christoffel<S, N>,
) -> [S; N] {
    let mut out = [S::zero(); N];
    for (nu, slot) in out.iter_mut().enumerate() {
        let mut acc = S::zero();
        for m in 0..N {
            // ∂_μ T_μν
            let mut term = kron(m, nu, derivative[m][m]);
            // −Γ^λ_{μμ} T_λν − Γ^λ_{μν} T_μλ
            term = term - christoffel[nu][m][m] * tensor[nu] - christoffel[m][m][nu] * tensor[m];
            acc += inverse[m] * term;
        }
        *slot = acc;
    }
    out
}

/// Metric `e^{2σ} η` in two dimensions from a σ jet (value, gradient,
/// Hessian in the flat coordinates), `η = diag(1, −1)`.
pub fn conformal_metric_2d(sigma: f64, grad: [f64; 2], hess: [[f64; 2]; 2]) -> DiagonalMetric<f64, 2> {
    let conformal = libm::exp(2.0 * sigma);
    let components = [conformal, -conformal];
    let mut first = [[0.0; 2]; 2];
    let mut second = [[[0.0; 2]; 2]; 2];
    for m in 0..2 {
        for l in 0..2 {
            first[m][l] = 2.0 * grad[l] * components[m];
            for k in 0..2 {
                second[m][l][k] = (2.0 * hess[l][k] + 4.0 * grad[l] * grad[k]) * components[m];
            }
        }
    }
    DiagonalMetric { components, first, second }
}
