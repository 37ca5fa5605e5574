//! Diagonal calculus of the Dirichlet Laplacian `A = d²/dξ²` on (0,1):
//! eigenpairs, fractional powers, the analytic semigroup and mode truncation.
//!
//! Everything here is exact: eigenvalues come from the closed form
//! `λ_k = π²(k+1)²`, never from a numerical eigensolver, so these routines can
//! serve as oracles for the discrete operators.

use std::f64::consts::PI;

/// `λ_k = π²(k+1)²`, the k-th eigenvalue of `-A` (zero-based).
pub fn eigenvalue(k: usize) -> f64 {
    let m = (k + 1) as f64;
    PI * PI * m * m
}

/// One eigenpair of `-A`: the eigenvalue and the eigenfunction
/// `e_k(ξ) = √2 sin((k+1)πξ)`.
#[derive(Clone, Copy, Debug)]
pub struct EigenPair {
    pub index: usize,
    pub lambda: f64,
}

/// Eigenpair for mode `k`.
pub fn eigen_pair(k: usize) -> EigenPair {
    EigenPair {
        index: k,
        lambda: eigenvalue(k),
    }
}

impl EigenPair {
    /// Pointwise value of the (L²-normalized) eigenfunction.
    pub fn evaluate_at(&self, xi: f64) -> f64 {
        eigenfunction(self.index, xi)
    }
}

/// `e_k(ξ) = √2 sin((k+1)πξ)`.
pub fn eigenfunction(k: usize, xi: f64) -> f64 {
    (2.0f64).sqrt() * ((k + 1) as f64 * PI * xi).sin()
}

/// An element of the truncated space `H_M = span{e_0, …, e_{M}}`, stored as
/// its coefficients in the sine eigenbasis. `mode_count = M + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralField {
    coeffs: Vec<f64>,
}

impl SpectralField {
    /// Wraps a coefficient vector. Panics on empty or non-finite input.
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "spectral field needs at least one mode");
        assert!(
            coeffs.iter().all(|c| c.is_finite()),
            "spectral coefficients must be finite"
        );
        SpectralField { coeffs }
    }

    pub fn zeros(mode_count: usize) -> Self {
        Self::new(vec![0.0; mode_count])
    }

    /// Unit coefficient on mode `k`, zero elsewhere.
    pub fn unit_mode(mode_count: usize, k: usize) -> Self {
        assert!(k < mode_count);
        let mut coeffs = vec![0.0; mode_count];
        coeffs[k] = 1.0;
        Self::new(coeffs)
    }

    pub fn mode_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of mode `k`; zero beyond the truncation.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// `|x|_H = (Σ x_k²)^{1/2}` (Parseval).
    pub fn norm_h(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `|(-A)^α x|_H = (Σ λ_k^{2α} x_k²)^{1/2}`.
    pub fn sobolev_norm(&self, alpha: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| eigenvalue(k).powf(2.0 * alpha) * c * c)
            .sum::<f64>()
            .sqrt()
    }

    /// `(-A)^α x`, coefficientwise `λ_k^α x_k`. Well-defined for any α since
    /// every `λ_k > 0`; callers stay within α ∈ [-1, 1].
    pub fn frac_power(&self, alpha: f64) -> Self {
        debug_assert!((-1.0..=1.0).contains(&alpha));
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| eigenvalue(k).powf(alpha) * c)
            .collect();
        Self::new(coeffs)
    }

    /// `e^{tA} x`, coefficientwise `e^{-λ_k t} x_k`, for `t ≥ 0`.
    pub fn semigroup(&self, t: f64) -> Self {
        assert!(t >= 0.0, "semigroup defined for t >= 0");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (-eigenvalue(k) * t).exp() * c)
            .collect();
        Self::new(coeffs)
    }

    /// Orthogonal projection onto the first `mode_count` modes. A projection
    /// onto at least as many modes as stored leaves the field unchanged.
    pub fn project(&self, mode_count: usize) -> Self {
        assert!(mode_count >= 1);
        if mode_count >= self.coeffs.len() {
            self.clone()
        } else {
            Self::new(self.coeffs[..mode_count].to_vec())
        }
    }

    /// Pointwise synthesis `x(ξ) = Σ x_k e_k(ξ)`.
    pub fn evaluate_at(&self, xi: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * eigenfunction(k, xi))
            .sum()
    }

    /// `|x - y|_H`, treating missing high modes as zero.
    pub fn distance(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| {
                let d = self.coeff(k) - other.coeff(k);
                d * d
            })
            .sum::<f64>()
            .sqrt()
    }
}
