use std::sync::{Arc, OnceLock};

use nalgebra::{DMatrix, SymmetricEigen};

use super::{BidiagonalCholesky, FemError, Mesh, TridiagonalMatrix};
use crate::spectral::eigenfunction;

/// P1 function on a mesh, stored as its values at the interior nodes
/// (Dirichlet boundary values are identically zero).
#[derive(Clone, Debug, PartialEq)]
pub struct NodalField {
    values: Vec<f64>,
    mesh: Arc<Mesh>,
}

impl NodalField {
    pub fn new(values: Vec<f64>, mesh: Arc<Mesh>) -> Self {
        assert_eq!(values.len(), mesh.interior_count());
        assert!(values.iter().all(|v| v.is_finite()));
        NodalField { values, mesh }
    }

    pub fn zeros(mesh: Arc<Mesh>) -> Self {
        let n = mesh.interior_count();
        Self::new(vec![0.0; n], mesh)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mesh(&self) -> &Arc<Mesh> {
        &self.mesh
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Piecewise-linear evaluation; zero at and outside the boundary nodes.
    pub fn evaluate_at(&self, xi: f64) -> f64 {
        let nodes = self.mesh.nodes();
        if xi <= 0.0 || xi >= 1.0 {
            return 0.0;
        }
        // index of the first node strictly greater than xi
        let hi = nodes.partition_point(|&x| x <= xi).min(nodes.len() - 1);
        let lo = hi - 1;
        let (a, b) = (nodes[lo], nodes[hi]);
        let t = (xi - a) / (b - a);
        let va = self.node_value(lo);
        let vb = self.node_value(hi);
        va + t * (vb - va)
    }

    // value at a global node index (boundaries are zero)
    fn node_value(&self, global: usize) -> f64 {
        if global == 0 || global == self.mesh.nodes().len() - 1 {
            0.0
        } else {
            self.values[global - 1]
        }
    }
}

/// Generalized eigenpairs of the pencil `K_h v = λ M_h v`, ascending, with
/// `M_h`-orthonormal vectors. These are the eigenpairs of `-A_h`.
#[derive(Clone, Debug)]
pub struct GeneralizedEigen {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
}

impl GeneralizedEigen {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vector(&self, j: usize) -> &[f64] {
        &self.vectors[j]
    }
}

/// Assembled discrete operator on `V_h`: mass and stiffness matrices, the
/// mass Cholesky factor, and (lazily) the generalized eigenpairs of `A_h`.
/// Immutable after assembly; concurrent reads are safe.
#[derive(Debug)]
pub struct FemOperator {
    mesh: Arc<Mesh>,
    mass: TridiagonalMatrix,
    stiffness: TridiagonalMatrix,
    mass_cholesky: BidiagonalCholesky,
    eigen: OnceLock<GeneralizedEigen>,
}

impl FemOperator {
    /// Assembles `M_h` and `K_h` from exact element integrals of P1 hat
    /// functions and factors the mass matrix.
    pub fn assemble(mesh: Mesh) -> Result<Self, FemError> {
        let mesh = Arc::new(mesh);
        let n = mesh.interior_count();
        let nodes = mesh.nodes();
        let mut m_diag = vec![0.0; n];
        let mut m_off = vec![0.0; n.saturating_sub(1)];
        let mut k_diag = vec![0.0; n];
        let mut k_off = vec![0.0; n.saturating_sub(1)];
        for i in 0..n {
            let left = nodes[i + 1] - nodes[i];
            let right = nodes[i + 2] - nodes[i + 1];
            m_diag[i] = (left + right) / 3.0;
            k_diag[i] = 1.0 / left + 1.0 / right;
            if i + 1 < n {
                m_off[i] = right / 6.0;
                k_off[i] = -1.0 / right;
            }
        }
        let mass = TridiagonalMatrix::symmetric(m_diag, m_off);
        let stiffness = TridiagonalMatrix::symmetric(k_diag, k_off);
        let mass_cholesky = mass.cholesky()?;
        // stiffness must be SPD as well
        stiffness.cholesky()?;
        Ok(FemOperator {
            mesh,
            mass,
            stiffness,
            mass_cholesky,
            eigen: OnceLock::new(),
        })
    }

    pub fn mesh(&self) -> &Arc<Mesh> {
        &self.mesh
    }

    pub fn dim(&self) -> usize {
        self.mesh.interior_count()
    }

    pub fn mass(&self) -> &TridiagonalMatrix {
        &self.mass
    }

    pub fn stiffness(&self) -> &TridiagonalMatrix {
        &self.stiffness
    }

    pub fn mass_cholesky(&self) -> &BidiagonalCholesky {
        &self.mass_cholesky
    }

    /// `⟨x, y⟩_H = xᵀ M_h y` for P1 functions in nodal coordinates.
    pub fn inner_h(&self, x: &[f64], y: &[f64]) -> f64 {
        self.mass
            .matvec(y)
            .iter()
            .zip(x)
            .map(|(my, xi)| my * xi)
            .sum()
    }

    pub fn norm_h(&self, x: &[f64]) -> f64 {
        self.inner_h(x, x).max(0.0).sqrt()
    }

    /// Energy norm `|x_h|_{1/2} = (xᵀ K_h x)^{1/2}`; equals `|(-A)^{1/2}x_h|_H`
    /// because `⟨A_h x_h, y_h⟩ = ⟨A x_h, y_h⟩` on `V_h`.
    pub fn norm_energy(&self, x: &[f64]) -> f64 {
        self.stiffness
            .matvec(x)
            .iter()
            .zip(x)
            .map(|(kx, xi)| kx * xi)
            .sum::<f64>()
            .max(0.0)
            .sqrt()
    }

    /// Generalized eigenpairs of `K_h v = λ M_h v`, computed once on first
    /// use by reduction with the mass Cholesky factor to a dense symmetric
    /// eigenproblem.
    pub fn eigen(&self) -> Result<&GeneralizedEigen, FemError> {
        if let Some(e) = self.eigen.get() {
            return Ok(e);
        }
        let computed = self.compute_eigen()?;
        let _ = self.eigen.set(computed);
        Ok(self.eigen.get().expect("eigen just initialized"))
    }

    fn compute_eigen(&self) -> Result<GeneralizedEigen, FemError> {
        let n = self.dim();
        let l = &self.mass_cholesky;
        // columns of B = L⁻¹ K
        let mut b_cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut col = vec![0.0; n];
            col[j] = self.stiffness.diag()[j];
            if j > 0 {
                col[j - 1] = self.stiffness.sup()[j - 1];
            }
            if j + 1 < n {
                col[j + 1] = self.stiffness.sub()[j];
            }
            b_cols.push(l.solve_lower(&col));
        }
        // Cᵀ = L⁻¹ Bᵀ, i.e. forward-substitute the rows of B
        let mut c = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            let row: Vec<f64> = (0..n).map(|j| b_cols[j][i]).collect();
            let ct_col = l.solve_lower(&row);
            for j in 0..n {
                // store symmetrized later; here Cᵀ[j, i] = C[i, j]
                c[(i, j)] = ct_col[j];
            }
        }
        // symmetrize roundoff
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = 0.5 * (c[(i, j)] + c[(j, i)]);
                c[(i, j)] = avg;
                c[(j, i)] = avg;
            }
        }
        let decomposition = SymmetricEigen::new(c);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            decomposition.eigenvalues[a]
                .partial_cmp(&decomposition.eigenvalues[b])
                .expect("finite eigenvalues")
        });
        let mut values = Vec::with_capacity(n);
        let mut vectors = Vec::with_capacity(n);
        for &j in &order {
            let u: Vec<f64> = decomposition.eigenvectors.column(j).iter().copied().collect();
            let v = l.solve_upper(&u);
            values.push(decomposition.eigenvalues[j]);
            vectors.push(v);
        }
        let eigen = GeneralizedEigen { values, vectors };
        self.validate_eigen(&eigen)?;
        Ok(eigen)
    }

    fn validate_eigen(&self, eigen: &GeneralizedEigen) -> Result<(), FemError> {
        for j in 0..eigen.len() {
            let lambda = eigen.values[j];
            if !(lambda.is_finite() && lambda > 0.0) {
                return Err(FemError::ConvergenceFailure(format!(
                    "eigenvalue {j} is {lambda}"
                )));
            }
            let v = eigen.vector(j);
            let kv = self.stiffness.matvec(v);
            let mv = self.mass.matvec(v);
            let residual = kv
                .iter()
                .zip(&mv)
                .map(|(k, m)| (k - lambda * m).abs())
                .fold(0.0, f64::max);
            if residual > 1e-8 * lambda {
                return Err(FemError::ConvergenceFailure(format!(
                    "residual {residual:.3e} exceeds 1e-8*lambda for pair {j}"
                )));
            }
        }
        Ok(())
    }

    /// Coordinates of a nodal vector in the `A_h` eigenbasis: `a_j = v_jᵀ M x`.
    pub fn eigen_coords(&self, x: &[f64]) -> Result<Vec<f64>, FemError> {
        let eigen = self.eigen()?;
        let mx = self.mass.matvec(x);
        Ok((0..eigen.len())
            .map(|j| eigen.vector(j).iter().zip(&mx).map(|(v, m)| v * m).sum())
            .collect())
    }

    /// `|(-A_h)^α x|_H` through the eigendecomposition (diagnostics only).
    pub fn frac_power_norm(&self, x: &[f64], alpha: f64) -> Result<f64, FemError> {
        let eigen = self.eigen()?;
        let coords = self.eigen_coords(x)?;
        Ok(coords
            .iter()
            .zip(eigen.values())
            .map(|(a, lambda)| lambda.powf(2.0 * alpha) * a * a)
            .sum::<f64>()
            .sqrt())
    }

    /// `Tr((-A_h)^{-1/2-κ}) = Σ_j (λ_j^h)^{-1/2-κ}` for κ ∈ (0, 1/2).
    pub fn trace_neg_half_power(&self, kappa: f64) -> Result<f64, FemError> {
        debug_assert!(kappa > 0.0 && kappa < 0.5);
        let eigen = self.eigen()?;
        Ok(eigen
            .values()
            .iter()
            .map(|l| l.powf(-0.5 - kappa))
            .sum())
    }

    /// L² projection `P_h f`: solves `M_h c = b`, `b_j = ∫ f φ_j` by
    /// composite 2-point Gauss per element (exact through cubics).
    pub fn l2_project(&self, f: impl Fn(f64) -> f64) -> NodalField {
        let b = self.load_vector(&f);
        let c = self.mass.solve(&b).expect("mass matrix is SPD");
        NodalField::new(c, self.mesh.clone())
    }

    /// Ritz projection `R_h f = (-A_h)^{-1} P_h (-A) f`: solves `K_h c = b`
    /// with `b_j = ∫ f′ φ_j′`, reduced exactly to node differences of `f`
    /// since `φ_j′` is constant per element.
    pub fn ritz_project(&self, f: impl Fn(f64) -> f64) -> NodalField {
        let n = self.dim();
        let nodes = self.mesh.nodes();
        let mut b = vec![0.0; n];
        for (i, bi) in b.iter_mut().enumerate() {
            let (xl, xm, xr) = (nodes[i], nodes[i + 1], nodes[i + 2]);
            *bi = (f(xm) - f(xl)) / (xm - xl) - (f(xr) - f(xm)) / (xr - xm);
        }
        let c = self.stiffness.solve(&b).expect("stiffness matrix is SPD");
        NodalField::new(c, self.mesh.clone())
    }

    /// Load vector `b_j = ∫ f φ_j` by composite 2-point Gauss.
    pub fn load_vector(&self, f: &impl Fn(f64) -> f64) -> Vec<f64> {
        let n = self.dim();
        let nodes = self.mesh.nodes();
        let mut b = vec![0.0; n];
        for e in 0..self.mesh.element_count() {
            let (a, bb) = (nodes[e], nodes[e + 1]);
            let half = 0.5 * (bb - a);
            let mid = 0.5 * (a + bb);
            let offset = half / 3.0f64.sqrt();
            for &x in &[mid - offset, mid + offset] {
                let weight = half;
                let fv = f(x) * weight;
                let t = (x - a) / (bb - a);
                // left hat (node e) falls 1 → 0, right hat (node e+1) rises
                if e > 0 {
                    b[e - 1] += fv * (1.0 - t);
                }
                if e < n {
                    b[e] += fv * t;
                }
            }
        }
        b
    }

    /// Exact `ℓ_i = ∫ φ_i e_mode dξ` for the continuous eigenfunction
    /// `e_mode(ξ) = √2 sin((mode+1)πξ)` (closed-form element integrals).
    pub fn sine_load(&self, mode: usize) -> Vec<f64> {
        let n = self.dim();
        let nodes = self.mesh.nodes();
        let c = (mode + 1) as f64 * std::f64::consts::PI;
        let sqrt2 = 2.0f64.sqrt();
        let mut b = vec![0.0; n];
        for e in 0..self.mesh.element_count() {
            let (a, bb) = (nodes[e], nodes[e + 1]);
            let len = bb - a;
            let j0 = ((c * a).cos() - (c * bb).cos()) / c;
            let j1 = ((c * bb).sin() - (c * a).sin()) / (c * c) - len * (c * bb).cos() / c;
            if e > 0 {
                b[e - 1] += sqrt2 * (j0 - j1 / len);
            }
            if e < n {
                b[e] += sqrt2 * j1 / len;
            }
        }
        b
    }

    /// `⟨x_h, e_mode⟩_H`, exact for the P1 representative.
    pub fn sine_inner(&self, x: &[f64], mode: usize) -> f64 {
        self.sine_load(mode).iter().zip(x).map(|(l, v)| l * v).sum()
    }

    /// One semi-implicit resolvent application: solves `(M_h + τ K_h) x = rhs`
    /// by the Thomas algorithm. In operator terms `x = S_{τ,h} M_h⁻¹ rhs`.
    pub fn semi_implicit_solve(&self, tau: f64, rhs: &[f64]) -> Result<NodalField, FemError> {
        assert!(tau >= 0.0);
        let system = self.mass.add_scaled(&self.stiffness, tau);
        let x = system.solve(rhs)?;
        Ok(NodalField::new(x, self.mesh.clone()))
    }
}
