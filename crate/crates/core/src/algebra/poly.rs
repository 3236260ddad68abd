//! Multivariate polynomials in `(x, y, z)` and the function class
//! `Σ_k s^k p_k(x, y, z)` with `s = √(1 − α r²)`.
//!
//! That class is closed under `X_i = x_i / s` and `P_i = −i s ∂_i`, because
//! `∂_i s^k = −k α x_i s^{k−2}`. Operators therefore act symbolically and
//! only the final evaluation touches floating point.

use alloc::collections::BTreeMap;

use num_complex::Complex64;

use crate::math::sqrt;

pub type Exponents = [u8; 3];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Poly {
    terms: BTreeMap<Exponents, Complex64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(exps: Exponents, coeff: Complex64) -> Self {
        let mut p = Poly::zero();
        p.add_term(exps, coeff);
        p
    }

    /// `x`, `y` or `z` for `axis = 0, 1, 2`.
    pub fn coordinate(axis: usize) -> Self {
        let mut e = [0u8; 3];
        e[axis] = 1;
        Poly::monomial(e, Complex64::new(1.0, 0.0))
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: Complex64) {
        if coeff == Complex64::new(0.0, 0.0) {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(Complex64::new(0.0, 0.0));
        *entry += coeff;
        if *entry == Complex64::new(0.0, 0.0) {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&d| u32::from(d)).sum()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Complex64)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn scale(&self, k: Complex64) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, *c * k);
        }
        out
    }

    pub fn mul_coordinate(&self, axis: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[axis] += 1;
            out.add_term(e2, *c);
        }
        out
    }

    pub fn partial(&self, axis: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[axis] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[axis] -= 1;
            out.add_term(e2, *c * f64::from(e[axis]));
        }
        out
    }

    pub fn eval(&self, point: [f64; 3]) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: f64 = (0..3).map(|i| powi(point[i], e[i])).product();
                *c * mono
            })
            .sum()
    }
}

fn powi(x: f64, k: u8) -> f64 {
    (0..k).fold(1.0, |acc, _| acc * x)
}

/// `Σ_k s^k p_k` for integer `k` (negative powers allowed).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SFunction {
    parts: BTreeMap<i32, Poly>,
}

impl SFunction {
    pub fn zero() -> Self {
        SFunction::default()
    }

    pub fn from_poly(p: Poly) -> Self {
        let mut f = SFunction::zero();
        f.add_part(0, p);
        f
    }

    fn add_part(&mut self, power: i32, p: Poly) {
        if p.is_zero() {
            return;
        }
        let merged = match self.parts.remove(&power) {
            Some(existing) => existing.add(&p),
            None => p,
        };
        if !merged.is_zero() {
            self.parts.insert(power, merged);
        }
    }

    /// True when the symbolic representation is empty.
    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add(&self, other: &SFunction) -> SFunction {
        let mut out = self.clone();
        for (k, p) in &other.parts {
            out.add_part(*k, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &SFunction) -> SFunction {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, k: Complex64) -> SFunction {
        let mut out = SFunction::zero();
        for (pow, p) in &self.parts {
            out.add_part(*pow, p.scale(k));
        }
        out
    }

    pub fn mul_coordinate(&self, axis: usize) -> SFunction {
        let mut out = SFunction::zero();
        for (pow, p) in &self.parts {
            out.add_part(*pow, p.mul_coordinate(axis));
        }
        out
    }

    pub fn mul_s_power(&self, k: i32) -> SFunction {
        let mut out = SFunction::zero();
        for (pow, p) in &self.parts {
            out.add_part(pow + k, p.clone());
        }
        out
    }

    /// `∂_axis` using `∂_i s^k = −k α x_i s^{k−2}`.
    pub fn partial(&self, axis: usize, alpha: f64) -> SFunction {
        let mut out = SFunction::zero();
        for (&pow, p) in &self.parts {
            out.add_part(pow, p.partial(axis));
            if pow != 0 {
                let chain = p.mul_coordinate(axis).scale(Complex64::new(-f64::from(pow) * alpha, 0.0));
                out.add_part(pow - 2, chain);
            }
        }
        out
    }

    pub fn eval(&self, point: [f64; 3], alpha: f64) -> Complex64 {
        let r2: f64 = point.iter().map(|c| c * c).sum();
        let s = sqrt(1.0 - alpha * r2);
        self.parts.iter().map(|(&pow, p)| p.eval(point) * libm::pow(s, f64::from(pow))).sum()
    }
}

/// The deformed position and momentum operators at fixed `α`.
#[derive(Debug, Clone, Copy)]
pub struct DeformedOperators {
    pub alpha: f64,
}

impl DeformedOperators {
    /// `X_i f = x_i f / √(1 − αr²)`.
    pub fn position(&self, axis: usize, f: &SFunction) -> SFunction {
        f.mul_coordinate(axis).mul_s_power(-1)
    }

    /// `P_i f = −i √(1 − αr²) ∂_i f`.
    pub fn momentum(&self, axis: usize, f: &SFunction) -> SFunction {
        f.partial(axis, self.alpha).mul_s_power(1).scale(Complex64::new(0.0, -1.0))
    }

    /// Undeformed `p_i f = −i ∂_i f`.
    pub fn canonical_momentum(&self, axis: usize, f: &SFunction) -> SFunction {
        f.partial(axis, self.alpha).scale(Complex64::new(0.0, -1.0))
    }

    /// `L_ij f = (x_i p_j − x_j p_i) f`.
    pub fn angular_momentum(&self, i: usize, j: usize, f: &SFunction) -> SFunction {
        let a = self.canonical_momentum(j, f).mul_coordinate(i);
        let b = self.canonical_momentum(i, f).mul_coordinate(j);
        a.sub(&b)
    }
}
