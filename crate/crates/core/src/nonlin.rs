//! Nemytskii nonlinearities `F(x)(ξ) = g(ξ, x(ξ))` with declared bounds.
//!
//! The drift of the scheme only needs `g`; the first-variation flow used by
//! the gradient estimator also needs `∂g/∂u`. Declared bounds are metadata
//! checked by sampling, not enforced pointwise.

use std::fmt;
use std::sync::Arc;

type PointFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub struct Nonlinearity {
    g: PointFn,
    g_u: PointFn,
    g_bound: f64,
    lipschitz: f64,
    second_bound: f64,
    eta: f64,
}

impl Nonlinearity {
    /// Wraps `g` and its partial derivative in `u` together with the declared
    /// bounds `sup|g|`, `sup|∂g/∂u|` (the Lipschitz constant `L_F`) and
    /// `sup|∂²g/∂u²|`.
    pub fn new(
        g: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        g_u: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        g_bound: f64,
        lipschitz: f64,
        second_bound: f64,
    ) -> Self {
        assert!(g_bound >= 0.0 && lipschitz >= 0.0 && second_bound >= 0.0);
        Nonlinearity {
            g: Arc::new(g),
            g_u: Arc::new(g_u),
            g_bound,
            lipschitz,
            second_bound,
            // Sobolev-embedding exponent of the Nemytskii framework; any
            // value in (1/4, 1/2] is admissible. Metadata only.
            eta: 0.5,
        }
    }

    /// `g(ξ, u) = scale·sin(u)`, the standard bounded dissipative example;
    /// `L_F = scale`.
    pub fn sine(scale: f64) -> Self {
        assert!(scale > 0.0);
        Self::new(
            move |_xi, u| scale * u.sin(),
            move |_xi, u| scale * u.cos(),
            scale,
            scale,
            scale,
        )
    }

    /// `g ≡ c`; zero drift derivative.
    pub fn constant(c: f64) -> Self {
        Self::new(move |_, _| c, |_, _| 0.0, c.abs(), 0.0, 0.0)
    }

    pub fn eval(&self, xi: f64, u: f64) -> f64 {
        (self.g)(xi, u)
    }

    /// `∂g/∂u(ξ, u)`, the integrand of `DF(x).h`.
    pub fn derivative(&self, xi: f64, u: f64) -> f64 {
        (self.g_u)(xi, u)
    }

    pub fn g_bound(&self) -> f64 {
        self.g_bound
    }

    /// Lipschitz constant `L_F`.
    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    pub fn second_bound(&self) -> f64 {
        self.second_bound
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Best-effort check of the declared bounds on the grid
    /// (ξ, u) ∈ [0,1] × [-50, 50], with 1e-9 slack. The second-derivative
    /// bound is sampled through central differences of `∂g/∂u`.
    pub fn validate_bounds(&self, samples_per_axis: usize) -> Result<(), String> {
        let radius = 50.0;
        let slack = 1e-9;
        let fd = 1e-4;
        let steps = samples_per_axis.max(2);
        for i in 0..steps {
            let xi = i as f64 / (steps - 1) as f64;
            for j in 0..steps {
                let u = -radius + 2.0 * radius * j as f64 / (steps - 1) as f64;
                let value = self.eval(xi, u).abs();
                if value > self.g_bound + slack {
                    return Err(format!("|g({xi},{u})| = {value} exceeds bound {}", self.g_bound));
                }
                let d1 = self.derivative(xi, u).abs();
                if d1 > self.lipschitz + slack {
                    return Err(format!(
                        "|g_u({xi},{u})| = {d1} exceeds Lipschitz bound {}",
                        self.lipschitz
                    ));
                }
                let d2 =
                    ((self.derivative(xi, u + fd) - self.derivative(xi, u - fd)) / (2.0 * fd)).abs();
                if d2 > self.second_bound + 1e-6 {
                    return Err(format!(
                        "|g_uu({xi},{u})| ≈ {d2} exceeds bound {}",
                        self.second_bound
                    ));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Nonlinearity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Nonlinearity")
            .field("g_bound", &self.g_bound)
            .field("lipschitz", &self.lipschitz)
            .field("second_bound", &self.second_bound)
            .field("eta", &self.eta)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_bounds_validate() {
        Nonlinearity::sine(1.0).validate_bounds(101).unwrap();
        Nonlinearity::sine(0.5).validate_bounds(51).unwrap();
        Nonlinearity::constant(2.0).validate_bounds(21).unwrap();
    }

    #[test]
    fn understated_bound_is_caught() {
        let lying = Nonlinearity::new(|_, u| u.sin(), |_, u| u.cos(), 0.5, 1.0, 1.0);
        assert!(lying.validate_bounds(101).is_err());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let nl = Nonlinearity::sine(1.3);
        for &u in &[-2.0, -0.3, 0.0, 1.7] {
            let fd = (nl.eval(0.2, u + 1e-6) - nl.eval(0.2, u - 1e-6)) / 2e-6;
            assert!((nl.derivative(0.2, u) - fd).abs() < 1e-8);
        }
    }
}
