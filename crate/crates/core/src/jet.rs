//! Truncated univariate Taylor series.
//!
//! A `Jet<N>` holds the first `N` normalized Taylor coefficients
//! `c_k = f^{(k)}(x₀) / k!` of a function around an expansion point.
//! Arithmetic propagates the coefficients exactly up to truncation order,
//! which is how scale-factor families produce their derivative jets and how
//! the generic curvature engine differentiates metric components.

use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// Field operations shared by `f64` and [`Jet`], so the curvature engine can
/// run either on point values or on whole Taylor series.
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
{
    fn from_f64(value: f64) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn scale(self, factor: f64) -> Self {
        self * Self::from_f64(factor)
    }
}

impl Scalar for f64 {
    fn from_f64(value: f64) -> Self {
        value
    }

    fn scale(self, factor: f64) -> Self {
        self * factor
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<const N: usize> {
    coeffs: [f64; N],
}

impl<const N: usize> Jet<N> {
    pub const fn constant(value: f64) -> Self {
        let mut coeffs = [0.0; N];
        if N > 0 {
            coeffs[0] = value;
        }
        Jet { coeffs }
    }

    /// The identity function expanded around `x0`.
    pub const fn variable(x0: f64) -> Self {
        let mut coeffs = [0.0; N];
        if N > 0 {
            coeffs[0] = x0;
        }
        if N > 1 {
            coeffs[1] = 1.0;
        }
        Jet { coeffs }
    }

    pub const fn from_coeffs(coeffs: [f64; N]) -> Self {
        Jet { coeffs }
    }

    /// Builds a jet from plain derivatives `f, f', f'', ...` (missing orders
    /// are zero, extra entries are ignored).
    pub fn from_derivatives(derivs: &[f64]) -> Self {
        let mut coeffs = [0.0; N];
        let mut factorial = 1.0;
        for (k, slot) in coeffs.iter_mut().enumerate() {
            if k > 0 {
                factorial *= k as f64;
            }
            if let Some(d) = derivs.get(k) {
                *slot = d / factorial;
            }
        }
        Jet { coeffs }
    }

    pub fn coeffs(&self) -> &[f64; N] {
        &self.coeffs
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// `k`-th derivative at the expansion point.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut factorial = 1.0;
        for j in 2..=k {
            factorial *= j as f64;
        }
        self.coeffs[k] * factorial
    }

    /// Series of `f'`. The top coefficient becomes zero, so one order of
    /// validity is lost per differentiation.
    pub fn differentiate(&self) -> Self {
        let mut coeffs = [0.0; N];
        for k in 1..N {
            coeffs[k - 1] = k as f64 * self.coeffs[k];
        }
        Jet { coeffs }
    }

    pub fn recip(&self) -> Self {
        Jet::constant(1.0) / *self
    }

    pub fn exp(&self) -> Self {
        let mut out = [0.0; N];
        out[0] = libm::exp(self.coeffs[0]);
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * self.coeffs[j] * out[k - j];
            }
            out[k] = acc / k as f64;
        }
        Jet { coeffs: out }
    }

    /// Natural logarithm; the value must be positive.
    pub fn ln(&self) -> Self {
        let a0 = self.coeffs[0];
        let mut out = [0.0; N];
        out[0] = libm::log(a0);
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..k {
                acc += j as f64 * out[j] * self.coeffs[k - j];
            }
            out[k] = (self.coeffs[k] - acc / k as f64) / a0;
        }
        Jet { coeffs: out }
    }

    /// Real power `f^r`; the value must be positive.
    pub fn powf(&self, r: f64) -> Self {
        let a0 = self.coeffs[0];
        let mut out = [0.0; N];
        out[0] = libm::pow(a0, r);
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += ((r + 1.0) * j as f64 - k as f64) * self.coeffs[j] * out[k - j];
            }
            out[k] = acc / (k as f64 * a0);
        }
        Jet { coeffs: out }
    }

    pub fn tanh(&self) -> Self {
        // t' = (1 - t²) u'
        let mut t = [0.0; N];
        let mut s = [0.0; N];
        t[0] = libm::tanh(self.coeffs[0]);
        s[0] = 1.0 - t[0] * t[0];
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * self.coeffs[j] * s[k - j];
            }
            t[k] = acc / k as f64;
            let mut sq = 0.0;
            for i in 0..=k {
                sq += t[i] * t[k - i];
            }
            s[k] = -sq;
        }
        Jet { coeffs: t }
    }
}

impl<const N: usize> Scalar for Jet<N> {
    fn from_f64(value: f64) -> Self {
        Jet::constant(value)
    }

    fn scale(self, factor: f64) -> Self {
        let mut coeffs = self.coeffs;
        for c in &mut coeffs {
            *c *= factor;
        }
        Jet { coeffs }
    }
}

impl<const N: usize> Add for Jet<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c += r;
        }
        Jet { coeffs }
    }
}

impl<const N: usize> AddAssign for Jet<N> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const N: usize> Sub for Jet<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c -= r;
        }
        Jet { coeffs }
    }
}

impl<const N: usize> Neg for Jet<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl<const N: usize> Mul for Jet<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut coeffs = [0.0; N];
        for (k, slot) in coeffs.iter_mut().enumerate() {
            let mut acc = 0.0;
            for j in 0..=k {
                acc += self.coeffs[j] * rhs.coeffs[k - j];
            }
            *slot = acc;
        }
        Jet { coeffs }
    }
}

impl<const N: usize> Div for Jet<N> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let b0 = rhs.coeffs[0];
        let mut coeffs = [0.0; N];
        for k in 0..N {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= rhs.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / b0;
        }
        Jet { coeffs }
    }
}

impl<const N: usize> Add<f64> for Jet<N> {
    type Output = Self;
    fn add(mut self, rhs: f64) -> Self {
        self.coeffs[0] += rhs;
        self
    }
}

impl<const N: usize> Sub<f64> for Jet<N> {
    type Output = Self;
    fn sub(mut self, rhs: f64) -> Self {
        self.coeffs[0] -= rhs;
        self
    }
}

impl<const N: usize> Mul<f64> for Jet<N> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl<const N: usize> Div<f64> for Jet<N> {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self.scale(1.0 / rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type J = Jet<6>;

    #[test]
    fn exp_of_variable_is_exponential_series() {
        let e = J::variable(0.0).exp();
        let mut fact = 1.0;
        for k in 0..6 {
            if k > 0 {
                fact *= k as f64;
            }
            assert_relative_eq!(e.coeffs()[k], 1.0 / fact, epsilon = 1e-15);
        }
    }

    #[test]
    fn ln_inverts_exp() {
        let x = J::variable(0.7) * 1.3 + 0.2;
        let back = x.exp().ln();
        for k in 0..6 {
            assert_relative_eq!(back.coeffs()[k], x.coeffs()[k], epsilon = 1e-13);
        }
    }

    #[test]
    fn recip_derivatives_match_closed_form() {
        // d^k/dx^k x^{-1} = (-1)^k k! x^{-k-1}
        let x0 = 1.7;
        let r = J::variable(x0).recip();
        let mut fact = 1.0;
        for k in 0..6 {
            if k > 0 {
                fact *= k as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let expected = sign * fact / libm::pow(x0, k as f64 + 1.0);
            assert_relative_eq!(r.derivative(k), expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn powf_matches_falling_factorials() {
        let x0 = 2.3;
        let p = 2.5;
        let j = J::variable(x0).powf(p);
        let mut falling = 1.0;
        for k in 0..6 {
            let expected = falling * libm::pow(x0, p - k as f64);
            assert_relative_eq!(j.derivative(k), expected, max_relative = 1e-12);
            falling *= p - k as f64;
        }
    }

    #[test]
    fn tanh_derivatives_match_closed_forms() {
        let u = 0.4;
        let t = libm::tanh(u);
        let j = J::variable(u).tanh();
        let s = 1.0 - t * t;
        assert_relative_eq!(j.derivative(1), s, max_relative = 1e-14);
        assert_relative_eq!(j.derivative(2), -2.0 * t * s, max_relative = 1e-13);
        assert_relative_eq!(j.derivative(3), -2.0 * s * (1.0 - 3.0 * t * t), max_relative = 1e-13);
        assert_relative_eq!(j.derivative(4), 8.0 * t * s * (2.0 - 3.0 * t * t), max_relative = 1e-12);
    }

    #[test]
    fn differentiate_shifts_coefficients() {
        let j = J::from_derivatives(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let d = j.differentiate();
        for k in 0..5 {
            assert_relative_eq!(d.derivative(k), j.derivative(k + 1), max_relative = 1e-15);
        }
        assert_eq!(d.coeffs()[5], 0.0);
    }

    #[test]
    fn division_round_trips_multiplication() {
        let a = J::variable(0.3).exp() + 2.0;
        let b = J::variable(0.3).tanh() + 1.5;
        let q = (a * b) / b;
        for k in 0..6 {
            assert_relative_eq!(q.coeffs()[k], a.coeffs()[k], epsilon = 1e-13);
        }
    }
}
