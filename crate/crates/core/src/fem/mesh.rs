use serde::{Deserialize, Serialize};

use super::FemError;

/// Partition of [0,1] for the P1 space `V_h`. Endpoints 0 and 1 are always
/// nodes (homogeneous Dirichlet conditions); `h` is the largest subinterval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Mesh {
    nodes: Vec<f64>,
    h: f64,
}

impl Mesh {
    /// Mesh from its full node list `[0, …, 1]`.
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self, FemError> {
        if nodes.len() < 3 {
            return Err(FemError::EmptyPartition);
        }
        if nodes[0] != 0.0 || *nodes.last().unwrap() != 1.0 {
            return Err(FemError::NonMonotonePartition(
                "first node must be 0 and last node must be 1".into(),
            ));
        }
        for w in nodes.windows(2) {
            if !(w[1].is_finite() && w[1] > w[0]) {
                return Err(FemError::NonMonotonePartition(format!(
                    "{} does not increase past {}",
                    w[1], w[0]
                )));
            }
        }
        let h = nodes.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        Ok(Mesh { nodes, h })
    }

    /// Mesh from the interior nodes only; 0 and 1 are added.
    pub fn from_interior(interior: &[f64]) -> Result<Self, FemError> {
        if interior.is_empty() {
            return Err(FemError::EmptyPartition);
        }
        let mut nodes = Vec::with_capacity(interior.len() + 2);
        nodes.push(0.0);
        nodes.extend_from_slice(interior);
        nodes.push(1.0);
        Self::from_nodes(nodes)
    }

    /// Uniform mesh with `n ≥ 1` interior nodes, spacing `1/(n+1)`.
    pub fn uniform(n: usize) -> Result<Self, FemError> {
        if n == 0 {
            return Err(FemError::EmptyPartition);
        }
        let delta = 1.0 / (n + 1) as f64;
        let mut nodes: Vec<f64> = (0..=n + 1).map(|i| i as f64 * delta).collect();
        *nodes.last_mut().unwrap() = 1.0;
        Self::from_nodes(nodes)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Largest subinterval length.
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Number of interior nodes `N_h` (the dimension of `V_h`).
    pub fn interior_count(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Number of elements (subintervals).
    pub fn element_count(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Endpoints of element `e`.
    pub fn element(&self, e: usize) -> (f64, f64) {
        (self.nodes[e], self.nodes[e + 1])
    }
}

impl TryFrom<Vec<f64>> for Mesh {
    type Error = FemError;
    fn try_from(nodes: Vec<f64>) -> Result<Self, Self::Error> {
        Mesh::from_nodes(nodes)
    }
}

impl From<Mesh> for Vec<f64> {
    fn from(mesh: Mesh) -> Self {
        mesh.nodes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn uniform_mesh_nodes_and_h() {
        let mesh = Mesh::uniform(3).unwrap();
        assert_eq!(mesh.nodes(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_abs_diff_eq!(mesh.h(), 0.25, epsilon = 1e-15);
        assert_eq!(mesh.interior_count(), 3);
    }

    #[test]
    fn max_gap_from_interior_nodes() {
        let mesh = Mesh::from_interior(&[0.1, 0.5]).unwrap();
        assert_abs_diff_eq!(mesh.h(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn rejects_non_monotone_and_empty() {
        assert!(matches!(
            Mesh::from_interior(&[0.5, 0.2]),
            Err(FemError::NonMonotonePartition(_))
        ));
        assert!(matches!(
            Mesh::from_interior(&[]),
            Err(FemError::EmptyPartition)
        ));
        assert!(matches!(
            Mesh::from_interior(&[1.2]),
            Err(FemError::NonMonotonePartition(_))
        ));
        assert!(matches!(Mesh::uniform(0), Err(FemError::EmptyPartition)));
    }

    #[test]
    fn json_round_trip_is_a_bare_array() {
        let mesh = Mesh::from_interior(&[0.25, 0.6]).unwrap();
        let json = serde_json::to_string(&mesh).unwrap();
        assert_eq!(json, "[0.0,0.25,0.6,1.0]");
        let back: Mesh = serde_json::from_str(&json).unwrap();
        assert_eq!(back, mesh);
        assert!(serde_json::from_str::<Mesh>("[0.0,0.5,0.2,1.0]").is_err());
    }
}
