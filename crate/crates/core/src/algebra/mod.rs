//! The spin-one DKP representation and the deformed position/momentum
//! algebra.
//!
//! Component layout of the 10-spinor is `(iφ, F⃗, G⃗, H⃗)`: index 0 is the
//! scalar, 1..=3 is `F⃗`, 4..=6 is `G⃗`, 7..=9 is `H⃗`.

mod commutator;
mod gaussian;
pub mod poly;

use alloc::vec::Vec;
use core::fmt;

pub use commutator::{ball_grid, check_deformed_commutators, monomial_basis, CommutatorReport};
pub use gaussian::{GMatrix, Gaussian};

use crate::error::{Error, Result};

pub type Matrix10 = GMatrix<10>;
pub type Matrix3 = GMatrix<3>;

/// Minkowski metric `diag(1, −1, −1, −1)`.
pub const METRIC: [i64; 4] = [1, -1, -1, -1];

const F_BLOCK: usize = 1;
const G_BLOCK: usize = 4;
const H_BLOCK: usize = 7;

/// The four DKP matrices together with the spin-one matrices they are
/// built from.
#[derive(Debug, Clone, PartialEq)]
pub struct DkpMatrixSet {
    pub beta: [Matrix10; 4],
    pub spin: [Matrix3; 3],
}

impl DkpMatrixSet {
    pub fn beta0(&self) -> &Matrix10 {
        &self.beta[0]
    }

    /// Every entry of every β lies in `{0, ±1, ±i}`.
    pub fn entries_are_units(&self) -> bool {
        self.beta.iter().all(|b| b.entries().all(Gaussian::is_unit_or_zero))
    }

    /// `β⁰` Hermitian and `β^k` anti-Hermitian.
    pub fn has_expected_hermiticity(&self) -> bool {
        let b0 = &self.beta[0];
        b0.adjoint() == *b0 && self.beta[1..].iter().all(|b| b.adjoint() == -*b)
    }
}

/// The usual spin-one matrices `(S^j)_{kl} = -i ε_{jkl}`.
pub fn spin_matrices() -> [Matrix3; 3] {
    let mut s = [Matrix3::zero(); 3];
    let i = Gaussian::I;
    // S¹ = i [[0,0,0],[0,0,-1],[0,1,0]]
    s[0].set(1, 2, -i);
    s[0].set(2, 1, i);
    // S² = i [[0,0,1],[0,0,0],[-1,0,0]]
    s[1].set(0, 2, i);
    s[1].set(2, 0, -i);
    // S³ = i [[0,-1,0],[1,0,0],[0,0,0]]
    s[2].set(0, 1, -i);
    s[2].set(1, 0, i);
    s
}

/// Builds the 10×10 block representation of `β^σ`.
pub fn build_matrices() -> DkpMatrixSet {
    let spin = spin_matrices();
    let one = Gaussian::ONE;
    let minus_i = -Gaussian::I;

    let mut beta0 = Matrix10::zero();
    for k in 0..3 {
        beta0.set(F_BLOCK + k, G_BLOCK + k, one);
        beta0.set(G_BLOCK + k, F_BLOCK + k, one);
    }

    let mut beta = [beta0, Matrix10::zero(), Matrix10::zero(), Matrix10::zero()];
    for j in 0..3 {
        let b = &mut beta[j + 1];
        // u^j in the scalar row, -u^j^T in the scalar column.
        b.set(0, G_BLOCK + j, one);
        b.set(G_BLOCK + j, 0, -one);
        for r in 0..3 {
            for c in 0..3 {
                let e = minus_i * spin[j].get(r, c);
                b.set(F_BLOCK + r, H_BLOCK + c, e);
                b.set(H_BLOCK + r, F_BLOCK + c, e);
            }
        }
    }
    DkpMatrixSet { beta, spin }
}

/// A triple `(σ, κ, λ)` for which the trilinear relation fails, with the
/// first differing entry (1-indexed).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleViolation {
    pub sigma: usize,
    pub kappa: usize,
    pub lambda: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    pub triples_checked: usize,
    pub violations: Vec<TripleViolation>,
}

impl AlgebraReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One line per violating triple; an empty rendering means pass.
impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "triple ({},{},{}) violated at entry ({},{})", v.sigma, v.kappa, v.lambda, v.row, v.col)?;
        }
        Ok(())
    }
}

fn trilinear_lhs_rhs(set: &DkpMatrixSet, s: usize, k: usize, l: usize) -> (Matrix10, Matrix10) {
    let b = &set.beta;
    let lhs = b[s] * b[k] * b[l] + b[l] * b[k] * b[s];
    let g = |a: usize, c: usize| if a == c { METRIC[a] } else { 0 };
    let rhs = b[l].scale(Gaussian::from_int(g(s, k))) + b[s].scale(Gaussian::from_int(g(k, l)));
    (lhs, rhs)
}

/// Checks `β^σβ^κβ^λ + β^λβ^κβ^σ = g^{σκ}β^λ + g^{κλ}β^σ` for all 64
/// index triples in exact arithmetic.
pub fn verify_algebra(set: &DkpMatrixSet) -> AlgebraReport {
    let mut report = AlgebraReport::default();
    for s in 0..4 {
        for k in 0..4 {
            for l in 0..4 {
                report.triples_checked += 1;
                let (lhs, rhs) = trilinear_lhs_rhs(set, s, k, l);
                if let Some((row, col)) = lhs.first_mismatch(&rhs) {
                    report.violations.push(TripleViolation {
                        sigma: s,
                        kappa: k,
                        lambda: l,
                        row: row + 1,
                        col: col + 1,
                    });
                }
            }
        }
    }
    report
}

/// The projector `P = β^μβ_μ − 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectorMatrix(pub Matrix10);

impl ProjectorMatrix {
    pub fn matrix(&self) -> &Matrix10 {
        &self.0
    }

    pub fn is_idempotent(&self) -> bool {
        self.0 * self.0 == self.0
    }

    pub fn is_hermitian(&self) -> bool {
        self.0.adjoint() == self.0
    }
}

pub fn build_projector(set: &DkpMatrixSet) -> Result<ProjectorMatrix> {
    let mut contracted = Matrix10::zero();
    for (mu, b) in set.beta.iter().enumerate() {
        contracted = contracted + (*b * *b).scale(Gaussian::from_int(METRIC[mu]));
    }
    let p = ProjectorMatrix(contracted - Matrix10::identity().scale(Gaussian::from_int(2)));
    if !p.is_idempotent() {
        return Err(Error::AlgebraInconsistent);
    }
    Ok(p)
}

/// Matrices `U^μ = i[P, β^μ]`; the nonminimal vector coupling is
/// `U = U^μ A_μ`.
pub fn coupling_matrices(set: &DkpMatrixSet, projector: &ProjectorMatrix) -> [Matrix10; 4] {
    let p = projector.0;
    core::array::from_fn(|mu| {
        let b = set.beta[mu];
        (p * b - b * p).scale(Gaussian::I)
    })
}

/// `η⁰ = 2(β⁰)² − 1`, the metric of the DKP adjoint `Ψ̄ = Ψ†η⁰`.
pub fn eta0(set: &DkpMatrixSet) -> Matrix10 {
    let b0 = set.beta[0];
    (b0 * b0).scale(Gaussian::from_int(2)) - Matrix10::identity()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_entries() {
        let set = build_matrices();
        assert_eq!(set.beta[0].get(1, 4), Gaussian::ONE);
        assert_eq!(set.beta[1].get(0, 4), Gaussian::ONE);
        assert_eq!(set.beta[1].get(4, 0), -Gaussian::ONE);
        assert_eq!(set.spin[2].get(0, 1), -Gaussian::I);
        assert!(set.entries_are_units());
        assert!(set.has_expected_hermiticity());
    }

    #[test]
    fn cubes() {
        let set = build_matrices();
        let b0 = set.beta[0];
        assert_eq!(b0 * b0 * b0, b0);
        for k in 1..4 {
            let b = set.beta[k];
            assert_eq!(b * b * b, -b);
        }
    }

    #[test]
    fn all_triples_hold() {
        let report = verify_algebra(&build_matrices());
        assert_eq!(report.triples_checked, 64);
        assert!(report.is_pass(), "{report}");
        assert_eq!(alloc::format!("{report}"), "");
    }

    #[test]
    fn corrupted_matrix_is_caught() {
        let mut set = build_matrices();
        set.beta[2].set(0, 5, Gaussian::I);
        let report = verify_algebra(&set);
        assert!(!report.is_pass());
        let text = alloc::format!("{report}");
        assert_eq!(text.lines().count(), report.violations.len());
        assert!(report.violations.iter().all(|v| v.sigma == 2 || v.kappa == 2 || v.lambda == 2));
    }

    #[test]
    fn spin_commutators() {
        // [S^1, S^2] = i S^3 and cyclic.
        let s = spin_matrices();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            assert_eq!(s[a] * s[b] - s[b] * s[a], s[c].scale(Gaussian::I));
        }
    }

    #[test]
    fn projector_is_printed_diagonal() {
        let p = build_projector(&build_matrices()).unwrap();
        assert_eq!(p.0, Matrix10::diagonal([1, 1, 1, 1, 0, 0, 0, 0, 0, 0]));
        assert!(p.is_idempotent());
        assert!(p.is_hermitian());
        assert_eq!(p.0.trace(), Gaussian::from_int(4));
    }

    #[test]
    fn coupling_matrices_are_eta0_hermitian() {
        let set = build_matrices();
        let p = build_projector(&set).unwrap();
        let eta = eta0(&set);
        assert_eq!(eta, Matrix10::diagonal([-1, 1, 1, 1, 1, 1, 1, -1, -1, -1]));
        let u = coupling_matrices(&set, &p);
        assert_eq!(u[0].adjoint(), u[0]);
        for m in u {
            assert_eq!(eta * m.adjoint() * eta, m);
            assert!(!m.is_zero());
        }
    }
}
