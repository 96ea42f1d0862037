//! Engine configuration.

use crate::roots::RootSettings;

/// Numerical parameters shared across branch solving, sampling, and
/// verification.
#[derive(Debug, Clone)]
pub struct AdjointConfig {
    /// Truncation order N of extracted series.
    pub n_terms: usize,
    /// Sample count M per circle; must be a power of two.
    pub samples: usize,
    /// Default sampling radius r in (0, 1).
    pub radius: f64,
    /// Relative residual target for polynomial roots.
    pub eps_root: f64,
    /// Branch certification tolerance: |phi~(s_j) z - 1| <= eps_branch |z|.
    pub eps_branch: f64,
    /// Exclusion distance from branch points of the companion map.
    pub branch_exclusion: f64,
    /// Relative tolerance for numerator/denominator common-root deflation.
    pub tol_coprime: f64,
    /// Seed for every randomized choice (root-finder starts, verification
    /// draws); fixed seed gives bit-identical runs.
    pub seed: u64,
}

impl Default for AdjointConfig {
    fn default() -> Self {
        AdjointConfig {
            n_terms: 64,
            samples: 512,
            radius: 0.5,
            eps_root: 1e-12,
            eps_branch: 1e-9,
            branch_exclusion: 1e-6,
            tol_coprime: 1e-9,
            seed: 0x5EED,
        }
    }
}

impl AdjointConfig {
    pub fn root_settings(&self) -> RootSettings {
        RootSettings {
            eps_residual: self.eps_root,
            cluster_radius: 1e-7,
            max_iterations: 500,
            seed: self.seed,
        }
    }

    /// Panics on structurally invalid parameters; called at engine entry
    /// points so misconfiguration fails loudly rather than numerically.
    pub fn validate(&self) {
        assert!(self.n_terms >= 1, "n_terms must be positive");
        assert!(
            self.samples >= 2 && self.samples.is_power_of_two(),
            "samples must be a power of two"
        );
        assert!(self.samples >= self.n_terms, "need at least n_terms samples");
        assert!(self.radius > 0.0 && self.radius < 1.0, "radius must lie in (0, 1)");
        assert!(self.eps_root > 0.0 && self.eps_branch > 0.0, "tolerances must be positive");
        assert!(self.branch_exclusion > 0.0, "branch exclusion must be positive");
        assert!(self.tol_coprime > 0.0, "coprimality tolerance must be positive");
    }
}
