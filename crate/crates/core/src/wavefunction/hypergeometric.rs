//! Terminating Gauss hypergeometric series `₂F₁(A, −n; C; ρ)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Rising factorial `(x)_k = x (x+1) ⋯ (x+k−1)`.
pub fn pochhammer(x: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (x + f64::from(j)))
}

fn is_bad_c(c: f64) -> bool {
    c <= 0.0 && c == libm::floor(c)
}

/// The degree-`n` polynomial `Σ_{k=0}^{n} (A)_k (−n)_k / ((C)_k k!) ρ^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TerminatingSeries {
    a: f64,
    n: u32,
    c: f64,
    coeffs: Vec<f64>,
}

impl TerminatingSeries {
    pub fn new(a: f64, n: u32, c: f64) -> Result<Self> {
        if is_bad_c(c) {
            return Err(Error::BadC { c });
        }
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut term = 1.0;
        coeffs.push(term);
        let minus_n = -f64::from(n);
        for k in 0..n {
            let kf = f64::from(k);
            term *= (a + kf) * (minus_n + kf) / ((c + kf) * (kf + 1.0));
            coeffs.push(term);
        }
        Ok(TerminatingSeries { a, n, c, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// The coefficient of `ρ^{n+1}` obtained by continuing the Pochhammer
    /// recursion one more step; the `(−n)_{n+1}` factor makes it exactly 0.
    pub fn next_coefficient(&self) -> f64 {
        let k = f64::from(self.n);
        let last = *self.coeffs.last().expect("at least one coefficient");
        last * (self.a + k) * (-f64::from(self.n) + k) / ((self.c + k) * (k + 1.0))
    }

    pub fn eval(&self, rho: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * rho + c)
    }

    pub fn derivative(&self, rho: f64) -> f64 {
        self.coeffs.iter().enumerate().skip(1).rev().fold(0.0, |acc, (k, &c)| acc * rho + k as f64 * c)
    }

    pub fn second_derivative(&self, rho: f64) -> f64 {
        self.coeffs.iter().enumerate().skip(2).rev().fold(0.0, |acc, (k, &c)| acc * rho + (k * (k - 1)) as f64 * c)
    }
}

/// Evaluates `₂F₁(A, −n; C; ρ)` for `0 ≤ ρ < 1`, returning the value and
/// the term coefficients.
pub fn gauss2f1_terminating(a: f64, n: u32, c: f64, rho: f64) -> Result<(f64, Vec<f64>)> {
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::InvalidArgument("rho must lie in [0, 1)"));
    }
    let series = TerminatingSeries::new(a, n, c)?;
    Ok((series.eval(rho), series.coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_is_one() {
        for &(a, c, rho) in &[(3.2, 1.5, 0.4), (-2.0, 0.7, 0.99), (10.0, 2.5, 0.0)] {
            assert_eq!(gauss2f1_terminating(a, 0, c, rho).unwrap().0, 1.0);
        }
    }

    #[test]
    fn value_at_origin_is_one() {
        for n in 0..6 {
            assert_eq!(gauss2f1_terminating(7.3, n, 1.5, 0.0).unwrap().0, 1.0);
        }
    }

    #[test]
    fn two_term_series() {
        let (a, c, rho) = (4.0, 1.5, 0.3);
        let (v, coeffs) = gauss2f1_terminating(a, 1, c, rho).unwrap();
        assert!((v - (1.0 - a / c * rho)).abs() < 1e-15);
        assert_eq!(coeffs.len(), 2);
    }

    #[test]
    fn bad_c_rejected() {
        for c in [0.0, -1.0, -4.0] {
            assert!(matches!(TerminatingSeries::new(1.0, 2, c), Err(Error::BadC { .. })));
        }
        assert!(TerminatingSeries::new(1.0, 2, -0.5).is_ok());
        assert!(matches!(gauss2f1_terminating(1.0, 1, 1.5, 1.0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn termination_coefficient_is_exactly_zero() {
        for n in 0..8 {
            let s = TerminatingSeries::new(12.7, n, 2.5).unwrap();
            assert_eq!(s.next_coefficient(), 0.0);
            assert_eq!(pochhammer(-f64::from(n), n + 1), 0.0);
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let s = TerminatingSeries::new(11.2, 4, 1.5).unwrap();
        let (x, h) = (0.37, 1e-5);
        let d1 = (s.eval(x + h) - s.eval(x - h)) / (2.0 * h);
        let d2 = (s.eval(x + h) - 2.0 * s.eval(x) + s.eval(x - h)) / (h * h);
        assert!((s.derivative(x) - d1).abs() < 1e-6 * d1.abs().max(1.0));
        assert!((s.second_derivative(x) - d2).abs() < 1e-4 * d2.abs().max(1.0));
    }

    #[test]
    fn satisfies_hypergeometric_equation() {
        // ρ(1−ρ)y'' + (C − (1+A+B)ρ)y' − AB y = 0 with B = −n.
        let (a, n, c) = (9.4, 3u32, 2.5);
        let b = -f64::from(n);
        let s = TerminatingSeries::new(a, n, c).unwrap();
        for i in 1..20 {
            let x = f64::from(i) / 20.0;
            let r =
                x * (1.0 - x) * s.second_derivative(x) + (c - (1.0 + a + b) * x) * s.derivative(x) - a * b * s.eval(x);
            assert!(r.abs() < 1e-10, "{r}");
        }
    }
}
