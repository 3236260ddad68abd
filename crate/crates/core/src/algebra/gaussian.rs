//! Gaussian integers and small square matrices over them.

use core::ops::{Add, Mul, Neg, Sub};

/// `re + i·im` with integer parts. Matrix identities are checked in this
/// ring so that "holds" means bit-exact equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: i64,
    pub im: i64,
}

impl Gaussian {
    pub const ZERO: Gaussian = Gaussian { re: 0, im: 0 };
    pub const ONE: Gaussian = Gaussian { re: 1, im: 0 };
    pub const I: Gaussian = Gaussian { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        Gaussian { re, im }
    }

    pub const fn from_int(re: i64) -> Self {
        Gaussian { re, im: 0 }
    }

    pub fn conj(self) -> Self {
        Gaussian { re: self.re, im: -self.im }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// True for `0, ±1, ±i`.
    pub fn is_unit_or_zero(self) -> bool {
        self.re.abs() + self.im.abs() <= 1
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        Gaussian { re: self.re * rhs.re - self.im * rhs.im, im: self.re * rhs.im + self.im * rhs.re }
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl core::fmt::Display for Gaussian {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => f.write_str("i"),
            (0, -1) => f.write_str("-i"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", -im),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

/// Dense `N×N` matrix over [`Gaussian`], row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GMatrix<const N: usize>(pub [[Gaussian; N]; N]);

impl<const N: usize> GMatrix<N> {
    pub fn zero() -> Self {
        GMatrix([[Gaussian::ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = Gaussian::ONE;
        }
        m
    }

    pub fn diagonal(entries: [i64; N]) -> Self {
        let mut m = Self::zero();
        for (i, &e) in entries.iter().enumerate() {
            m.0[i][i] = Gaussian::from_int(e);
        }
        m
    }

    pub fn get(&self, row: usize, col: usize) -> Gaussian {
        self.0[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Gaussian) {
        self.0[row][col] = value;
    }

    pub fn scale(&self, k: Gaussian) -> Self {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e = *e * k;
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..N {
            for j in 0..N {
                out.0[j][i] = self.0[i][j].conj();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|row| row.iter().all(|e| e.is_zero()))
    }

    pub fn trace(&self) -> Gaussian {
        (0..N).fold(Gaussian::ZERO, |acc, i| acc + self.0[i][i])
    }

    /// First entry (row, col) where `self` and `other` differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, usize)> {
        for i in 0..N {
            for j in 0..N {
                if self.0[i][j] != other.0[i][j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn entries(&self) -> impl Iterator<Item = Gaussian> + '_ {
        self.0.iter().flat_map(|row| row.iter().copied())
    }
}

impl<const N: usize> Add for GMatrix<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..N {
            for j in 0..N {
                out.0[i][j] = self.0[i][j] + rhs.0[i][j];
            }
        }
        out
    }
}

impl<const N: usize> Sub for GMatrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..N {
            for j in 0..N {
                out.0[i][j] = self.0[i][j] - rhs.0[i][j];
            }
        }
        out
    }
}

impl<const N: usize> Neg for GMatrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-Gaussian::ONE)
    }
}

impl<const N: usize> Mul for GMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..N {
                    out.0[i][j] = out.0[i][j] + a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Gaussian::I * Gaussian::I, -Gaussian::ONE);
        assert_eq!(Gaussian::new(2, 3).conj(), Gaussian::new(2, -3));
        assert_eq!(Gaussian::new(1, 1) * Gaussian::new(1, -1), Gaussian::from_int(2));
    }

    #[test]
    fn identity_is_neutral() {
        let mut m = GMatrix::<3>::zero();
        m.set(0, 1, Gaussian::I);
        m.set(2, 0, Gaussian::new(-1, 0));
        assert_eq!(m * GMatrix::identity(), m);
        assert_eq!(GMatrix::identity() * m, m);
        assert_eq!(m.adjoint().adjoint(), m);
        assert_eq!(m.first_mismatch(&m), None);
        assert_eq!(m.first_mismatch(&GMatrix::zero()), Some((0, 1)));
    }
}
