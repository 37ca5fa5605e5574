use super::FemError;

/// Dense storage of a tridiagonal matrix. `sub` and `sup` have length
/// `size - 1`; symmetric instances (mass, stiffness) keep `sub == sup`.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalMatrix {
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>) -> Self {
        assert!(!diag.is_empty());
        assert_eq!(sub.len(), diag.len() - 1);
        assert_eq!(sup.len(), diag.len() - 1);
        TridiagonalMatrix { sub, diag, sup }
    }

    pub fn symmetric(diag: Vec<f64>, off: Vec<f64>) -> Self {
        Self::new(off.clone(), diag, off)
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub == self.sup
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size();
        assert_eq!(x.len(), n);
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v += self.sub[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                v += self.sup[i] * x[i + 1];
            }
            y[i] = v;
        }
        y
    }

    /// `self + factor * other`, entrywise.
    pub fn add_scaled(&self, other: &TridiagonalMatrix, factor: f64) -> Self {
        assert_eq!(self.size(), other.size());
        let combine = |a: &[f64], b: &[f64]| {
            a.iter()
                .zip(b)
                .map(|(x, y)| x + factor * y)
                .collect::<Vec<f64>>()
        };
        TridiagonalMatrix {
            sub: combine(&self.sub, &other.sub),
            diag: combine(&self.diag, &other.diag),
            sup: combine(&self.sup, &other.sup),
        }
    }

    /// Thomas algorithm. No pivoting; the matrices solved here (mass, and
    /// `M_h + τK_h`) are symmetric positive definite, so breakdown signals a
    /// bug rather than an admissible input.
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>, FemError> {
        let n = self.size();
        assert_eq!(rhs.len(), n);
        let mut c = vec![0.0; n.saturating_sub(1)];
        let mut d = vec![0.0; n];
        let mut pivot = self.diag[0];
        if pivot.abs() < f64::MIN_POSITIVE {
            return Err(FemError::SolverBreakdown { row: 0 });
        }
        if n > 1 {
            c[0] = self.sup[0] / pivot;
        }
        d[0] = rhs[0] / pivot;
        for i in 1..n {
            pivot = self.diag[i] - self.sub[i - 1] * c[i - 1];
            if pivot.abs() < f64::MIN_POSITIVE {
                return Err(FemError::SolverBreakdown { row: i });
            }
            if i + 1 < n {
                c[i] = self.sup[i] / pivot;
            }
            d[i] = (rhs[i] - self.sub[i - 1] * d[i - 1]) / pivot;
        }
        for i in (0..n - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        Ok(d)
    }

    /// Cholesky factor `L` (lower bidiagonal) of a symmetric positive
    /// definite tridiagonal matrix: `self = L Lᵀ`.
    pub fn cholesky(&self) -> Result<BidiagonalCholesky, FemError> {
        assert!(self.is_symmetric(), "cholesky requires a symmetric matrix");
        let n = self.size();
        let mut diag = vec![0.0; n];
        let mut sub = vec![0.0; n.saturating_sub(1)];
        let mut carry = 0.0;
        for i in 0..n {
            let radicand = self.diag[i] - carry;
            if radicand <= 0.0 {
                return Err(FemError::CholeskyFailure { row: i });
            }
            diag[i] = radicand.sqrt();
            if i + 1 < n {
                sub[i] = self.sub[i] / diag[i];
                carry = sub[i] * sub[i];
            }
        }
        Ok(BidiagonalCholesky { diag, sub })
    }
}

/// Lower bidiagonal Cholesky factor of a tridiagonal SPD matrix.
#[derive(Clone, Debug)]
pub struct BidiagonalCholesky {
    diag: Vec<f64>,
    sub: Vec<f64>,
}

impl BidiagonalCholesky {
    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// `L x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size();
        assert_eq!(x.len(), n);
        let mut y = vec![0.0; n];
        y[0] = self.diag[0] * x[0];
        for i in 1..n {
            y[i] = self.sub[i - 1] * x[i - 1] + self.diag[i] * x[i];
        }
        y
    }

    /// Solves `L y = b` (forward substitution).
    pub fn solve_lower(&self, b: &[f64]) -> Vec<f64> {
        let n = self.size();
        assert_eq!(b.len(), n);
        let mut y = vec![0.0; n];
        y[0] = b[0] / self.diag[0];
        for i in 1..n {
            y[i] = (b[i] - self.sub[i - 1] * y[i - 1]) / self.diag[i];
        }
        y
    }

    /// Solves `Lᵀ y = b` (backward substitution).
    pub fn solve_upper(&self, b: &[f64]) -> Vec<f64> {
        let n = self.size();
        assert_eq!(b.len(), n);
        let mut y = vec![0.0; n];
        y[n - 1] = b[n - 1] / self.diag[n - 1];
        for i in (0..n - 1).rev() {
            y[i] = (b[i] - self.sub[i] * y[i + 1]) / self.diag[i];
        }
        y
    }
}
