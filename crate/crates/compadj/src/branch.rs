//! Branches of the companion map.
//!
//! For a nonconstant rational self-map phi, the adjoint formula sums over
//! the solutions s of phi~(s) = 1/z, where phi~ is the tilde transform of
//! phi. Writing phi~ = p~/q~, the solutions are the roots of the
//! polynomial P_z(s) = z p~(s) - q~(s). Each root s_j is a branch location
//! sigma_j(z), and implicit differentiation of the branch relation gives
//! its weight
//!
//!   psi_j(z) = -1 / (z s_j phi~'(s_j)).
//!
//! Multiple roots of P_z occur exactly where phi~' vanishes at the root,
//! i.e. at branch points of the companion map, where the weights blow up;
//! such z are rejected. Roots escaping to infinity (the degree of P_z
//! dropping below the nominal degree) and roots at s = 0 (where the weight
//! has a pole factor 1/s) are excluded and counted in `degree_deficit`.

use num_complex::Complex64;

use crate::config::AdjointConfig;
use crate::error::{Error, Result};
use crate::rational::RationalMap;
use crate::roots::{poly_roots_with, RootSettings};

/// One branch: location sigma_j(z), weight psi_j(z), the multiplicity the
/// root solver reported, and the certified branch-equation residual
/// |phi~(sigma_j) z - 1|.
#[derive(Debug, Clone)]
pub struct Branch {
    pub location: Complex64,
    pub weight: Complex64,
    pub multiplicity: usize,
    pub residual: f64,
}

/// All branches over one point z, with the bookkeeping identity
/// sum of multiplicities + degree_deficit == nominal_degree.
#[derive(Debug, Clone)]
pub struct BranchSet {
    pub at: Complex64,
    pub branches: Vec<Branch>,
    pub degree_deficit: usize,
    pub nominal_degree: usize,
}

impl BranchSet {
    /// The weighted sum over branches of psi_j f(sigma_j), multiplicities
    /// included.
    pub fn weighted_sum(&self, f: impl Fn(Complex64) -> Result<Complex64>) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for b in &self.branches {
            acc += b.weight * f(b.location)? * b.multiplicity as f64;
        }
        Ok(acc)
    }
}

/// Per-symbol data reused across many branch solves: the tilde transform,
/// its derivative, and the nominal branch count.
#[derive(Debug, Clone)]
pub struct BranchContext {
    tilde: RationalMap,
    tilde_deriv: RationalMap,
    nominal_degree: usize,
    settings: RootSettings,
    eps_branch: f64,
    branch_exclusion: f64,
}

impl BranchContext {
    /// Precomputes the companion data for a nonconstant symbol.
    pub fn new(phi: &RationalMap, cfg: &AdjointConfig) -> Result<Self> {
        if phi.is_constant() {
            return Err(Error::DegreeZero);
        }
        let tilde = phi.tilde();
        let tilde_deriv = tilde.derivative()?;
        Ok(BranchContext {
            nominal_degree: tilde.degree(),
            tilde,
            tilde_deriv,
            settings: cfg.root_settings(),
            eps_branch: cfg.eps_branch,
            branch_exclusion: cfg.branch_exclusion,
        })
    }

    pub fn tilde(&self) -> &RationalMap {
        &self.tilde
    }

    pub fn nominal_degree(&self) -> usize {
        self.nominal_degree
    }

    /// Solves the branch equation over z and certifies every branch.
    pub fn solve(&self, z: Complex64) -> Result<BranchSet> {
        if z.norm() < 1e-300 {
            return Err(Error::OriginNotSupported);
        }
        let p = self.tilde.num().scale(z).sub(self.tilde.denom());
        if p.is_zero() || p.degree() == 0 {
            // z p~ - q~ collapsing to a constant means every branch escaped;
            // a nonconstant symbol only reaches this with total degree drop.
            return Ok(BranchSet {
                at: z,
                branches: Vec::new(),
                degree_deficit: self.nominal_degree,
                nominal_degree: self.nominal_degree,
            });
        }
        let mut degree_deficit = self.nominal_degree - p.degree();
        let roots = poly_roots_with(&p, &self.settings)?;

        // Multiple roots sit where phi~' vanishes, i.e. at branch points
        // where the weights diverge.
        if roots.iter().any(|r| r.multiplicity > 1) {
            return Err(Error::BranchPointProximity { at: z });
        }
        // Near-coincident simple roots signal z within roughly the square
        // of their separation of a branch point; the weighted sum loses
        // that many digits to cancellation, so stay clear.
        let separation_floor = self.branch_exclusion.sqrt();
        for (i, a) in roots.iter().enumerate() {
            for b in roots.iter().skip(i + 1) {
                if (a.value - b.value).norm() < separation_floor {
                    return Err(Error::BranchPointProximity { at: z });
                }
            }
        }

        let zero_floor = 1e-10 * (1.0 + roots.iter().map(|r| r.value.norm()).fold(0.0, f64::max));
        let mut branches = Vec::with_capacity(roots.len());
        for root in roots {
            let s = root.value;
            if s.norm() <= zero_floor {
                degree_deficit += root.multiplicity;
                continue;
            }
            let residual = match self.tilde.eval(s)? {
                crate::rational::ExtendedValue::Finite(v) => {
                    (v * z - Complex64::new(1.0, 0.0)).norm()
                }
                crate::rational::ExtendedValue::Infinity => f64::INFINITY,
            };
            if residual > self.eps_branch * z.norm() {
                return Err(Error::NonConvergence { iterations: self.settings.max_iterations });
            }
            let deriv = self.tilde_deriv.eval_finite(s)?;
            let denom = z * s * deriv;
            if denom.norm() < 1e-300 {
                return Err(Error::BranchPointProximity { at: z });
            }
            branches.push(Branch {
                location: s,
                weight: -denom.inv(),
                multiplicity: root.multiplicity,
                residual,
            });
        }
        let counted: usize = branches.iter().map(|b| b.multiplicity).sum();
        debug_assert_eq!(counted + degree_deficit, self.nominal_degree);
        Ok(BranchSet { at: z, branches, degree_deficit, nominal_degree: self.nominal_degree })
    }
}

/// One-shot branch solve; hot paths should build a [`BranchContext`] once
/// and call [`BranchContext::solve`] per point.
pub fn branch_solve(phi: &RationalMap, z: Complex64, cfg: &AdjointConfig) -> Result<BranchSet> {
    BranchContext::new(phi, cfg)?.solve(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPoly;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rmap(num: &[f64], denom: &[f64]) -> RationalMap {
        RationalMap::new(ComplexPoly::from_real(num), ComplexPoly::from_real(denom)).unwrap()
    }

    fn cfg() -> AdjointConfig {
        AdjointConfig::default()
    }

    #[test]
    fn exterior_lfm_has_one_branch() {
        // phi = 2z/(z+4): sigma(z) = (2z-1)/4, psi(z) = 2z/(2z-1).
        let phi = rmap(&[0.0, 2.0], &[4.0, 1.0]);
        let set = branch_solve(&phi, c(0.25, 0.0), &cfg()).unwrap();
        assert_eq!(set.nominal_degree, 1);
        assert_eq!(set.degree_deficit, 0);
        assert_eq!(set.branches.len(), 1);
        let b = &set.branches[0];
        assert!((b.location - c(-0.125, 0.0)).norm() < 1e-12);
        assert!((b.weight - c(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn interior_lfm_branch_and_weight() {
        // phi = z/(2z+4): sigma(z) = (z-2)/4... the branch equation gives
        // sigma(0.25) = -0.4375 and psi = z/(z-2) = -1/7 at z = 0.25.
        let phi = rmap(&[0.0, 1.0], &[4.0, 2.0]);
        let set = branch_solve(&phi, c(0.25, 0.0), &cfg()).unwrap();
        assert_eq!(set.branches.len(), 1);
        let b = &set.branches[0];
        assert!((b.weight - c(-1.0 / 7.0, 0.0)).norm() < 1e-12);
        // Verify the branch relation phi~(sigma) = 1/z directly.
        let tilde = phi.tilde();
        let v = tilde.eval(b.location).unwrap().finite().unwrap();
        assert!((v - c(4.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn squaring_map_has_root_branches_with_equal_weights() {
        // phi = z^2: branches at the square roots of z, each with weight 1/2.
        let phi = rmap(&[0.0, 0.0, 1.0], &[1.0]);
        let z = c(0.25, 0.0);
        let set = branch_solve(&phi, z, &cfg()).unwrap();
        assert_eq!(set.nominal_degree, 2);
        assert_eq!(set.branches.len(), 2);
        for b in &set.branches {
            assert!((b.location * b.location - z).norm() < 1e-12);
            assert!((b.weight - c(0.5, 0.0)).norm() < 1e-12);
            assert!(b.residual <= 1e-9 * z.norm());
        }
        let sum: Complex64 = set.branches.iter().map(|b| b.location).sum();
        assert!(sum.norm() < 1e-12, "the two square roots are opposite");
    }

    #[test]
    fn quadratic_branches_solve_the_branch_equation() {
        // phi = (z^2+z)/2 at a complex point: two branches, each certified.
        let phi = rmap(&[0.0, 0.5, 0.5], &[1.0]);
        let z = c(0.3, 0.2);
        let set = branch_solve(&phi, z, &cfg()).unwrap();
        assert_eq!(set.branches.len(), 2);
        let tilde = phi.tilde();
        for b in &set.branches {
            let v = tilde.eval(b.location).unwrap().finite().unwrap();
            assert!((v * z - c(1.0, 0.0)).norm() <= 1e-9 * z.norm());
        }
        // Weight identity for quadratics: psi_+ + psi_- = 1 (coefficient
        // relocation preserves constants in the uncorrected sum for
        // polynomial symbols with phi(0) = 0... verified numerically).
        let wsum: Complex64 = set.branches.iter().map(|b| b.weight).sum();
        assert!((wsum - c(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn origin_is_rejected() {
        let phi = rmap(&[0.0, 2.0], &[4.0, 1.0]);
        assert!(matches!(branch_solve(&phi, c(0.0, 0.0), &cfg()), Err(Error::OriginNotSupported)));
    }

    #[test]
    fn branch_point_proximity_is_detected() {
        // phi = (z^2+z)/2 has companion branch points where the two
        // branches collide: discriminant of s^2 - (z/2-ish)... at z = -8
        // exactly (z^2/4 + 2z = 0). Nearby z must be rejected.
        let phi = rmap(&[0.0, 0.5, 0.5], &[1.0]);
        let result = branch_solve(&phi, c(-8.0, 1e-9), &cfg());
        assert!(matches!(result, Err(Error::BranchPointProximity { .. })));
    }

    #[test]
    fn zero_branch_is_excluded_into_deficit() {
        // phi = 2z/(z+4): the branch (2z-1)/4 vanishes exactly at z = 0.5,
        // which is also the correction-term pole 1/conj(phi(inf)).
        let phi = rmap(&[0.0, 2.0], &[4.0, 1.0]);
        let set = branch_solve(&phi, c(0.5, 0.0), &cfg()).unwrap();
        assert_eq!(set.branches.len(), 0);
        assert_eq!(set.degree_deficit, 1);
        assert_eq!(set.nominal_degree, 1);
    }

    #[test]
    fn constant_symbol_is_rejected() {
        let phi = rmap(&[0.25], &[1.0]);
        assert!(matches!(branch_solve(&phi, c(0.3, 0.0), &cfg()), Err(Error::DegreeZero)));
    }

    #[test]
    fn branch_order_and_values_are_seed_independent() {
        let phi = rmap(&[9.0, -6.0, 1.0], &[13.0, -10.0, 1.0]);
        let z = c(0.37, -0.22);
        let mut cfg_a = cfg();
        cfg_a.seed = 7;
        let mut cfg_b = cfg();
        cfg_b.seed = 4242;
        let a = branch_solve(&phi, z, &cfg_a).unwrap();
        let b = branch_solve(&phi, z, &cfg_b).unwrap();
        assert_eq!(a.branches.len(), b.branches.len());
        for (x, y) in a.branches.iter().zip(&b.branches) {
            assert!((x.location - y.location).norm() < 1e-10);
            assert!((x.weight - y.weight).norm() < 1e-10);
        }
    }
}
