//! The corrected adjoint formula.
//!
//! For a nonconstant rational self-map phi of the disk and a test function
//! f analytic on the closed disk,
//!
//!   (C*_phi f)(z) = sum_j psi_j(z) f(sigma_j(z)) + f(0)/(1 - conj(phi(inf)) z),
//!
//! where the sum runs over the branches of the companion map and the
//! correction term is understood as 0 when phi(inf) = inf. The uncorrected
//! historical formula (backward shift applied to the weighted branch sum
//! with weights z psi_j) reduces algebraically to the bare branch sum: the
//! weighted sum is z S(z) with S analytic at the origin, so shifting
//! removes exactly the prepended factor z. Both evaluations are exposed;
//! their difference is precisely the correction term, which vanishes only
//! for polynomial symbols.
//!
//! Constant symbols phi = c act as rank-one operators, with adjoint
//! f -> f(0) K_c, handled without any branch machinery.

use num_complex::Complex64;

use crate::branch::{BranchContext, BranchSet};
use crate::config::AdjointConfig;
use crate::error::{Error, Result};
use crate::hardy::{series_from_samples, BoundarySamples, TruncatedSeries};
use crate::rational::{ExtendedValue, RationalMap};

/// Radius multipliers for coefficient extraction, at most 1% from the
/// configured radius, tried in order until a circle avoids every
/// singularity of the integrand.
const JITTER_SCHEDULE: [f64; 8] = [1.0, 1.0025, 0.9975, 1.005, 0.995, 1.0075, 0.9925, 1.01];

/// Distance below which z counts as sitting on the correction-term pole
/// 1/conj(phi(inf)); branch weights degenerate in the same neighborhood.
const CORRECTION_POLE_TOL: f64 = 1e-6;

/// Rejects test functions with a pole on the closed unit disk.
pub fn check_test_function(f: &RationalMap) -> Result<()> {
    for pole in f.poles()? {
        if pole.value.norm() <= 1.0 {
            return Err(Error::PoleInDisk { pole: pole.value });
        }
    }
    Ok(())
}

/// Reusable evaluator for one symbol: the tilde data is computed once and
/// shared across every point and every test function.
#[derive(Debug, Clone)]
pub struct AdjointEngine {
    phi: RationalMap,
    ctx: Option<BranchContext>,
    constant_value: Option<Complex64>,
    phi_at_infinity: ExtendedValue,
    cfg: AdjointConfig,
}

impl AdjointEngine {
    /// Prepares the companion-map data. The symbol is assumed to be a
    /// disk self-map; see `classify_map` for validation.
    pub fn new(phi: &RationalMap, cfg: &AdjointConfig) -> Result<Self> {
        cfg.validate();
        let constant_value =
            if phi.is_constant() { Some(phi.eval_finite(Complex64::new(0.0, 0.0))?) } else { None };
        let ctx = if constant_value.is_none() { Some(BranchContext::new(phi, cfg)?) } else { None };
        Ok(AdjointEngine {
            phi: phi.clone(),
            ctx,
            constant_value,
            phi_at_infinity: phi.map_at_infinity(),
            cfg: cfg.clone(),
        })
    }

    pub fn phi(&self) -> &RationalMap {
        &self.phi
    }

    pub fn config(&self) -> &AdjointConfig {
        &self.cfg
    }

    /// Branch set over z (errors immediately for constant symbols, whose
    /// branch equation degenerates).
    pub fn branch_set(&self, z: Complex64) -> Result<BranchSet> {
        match &self.ctx {
            Some(ctx) => ctx.solve(z),
            None => Err(Error::DegreeZero),
        }
    }

    /// (C*_phi f)(z) for 0 < |z| < 1.
    pub fn eval(&self, f: &RationalMap, z: Complex64) -> Result<Complex64> {
        check_test_function(f)?;
        self.eval_unchecked(f, z)
    }

    /// The branch sum without the correction term: the uncorrected
    /// historical formula. Sampling it on the unit circle exposes the
    /// negative-frequency defect for non-polynomial symbols, so |z| = 1 is
    /// allowed here.
    pub fn uncorrected_eval(&self, f: &RationalMap, z: Complex64) -> Result<Complex64> {
        check_test_function(f)?;
        if self.constant_value.is_some() {
            // The uncorrected formula has no branches to sum for a constant
            // symbol; its value is identically 0.
            return Ok(Complex64::new(0.0, 0.0));
        }
        if z.norm() > 1.0 + 1e-12 {
            return Err(Error::PoleCollision { at: z });
        }
        self.branch_sum(f, z)
    }

    /// First n_terms Taylor coefficients of C*_phi f by circle sampling
    /// with radius jitter: any failed sample (branch point, correction
    /// pole, escaped branch) moves the whole circle and retries.
    pub fn coeffs(&self, f: &RationalMap) -> Result<TruncatedSeries> {
        check_test_function(f)?;
        let m = self.cfg.samples;
        for factor in JITTER_SCHEDULE {
            let r = self.cfg.radius * factor;
            if !(0.0..1.0).contains(&r) {
                continue;
            }
            let mut values = Vec::with_capacity(m);
            let mut failed = false;
            for k in 0..m {
                let theta = std::f64::consts::TAU * k as f64 / m as f64;
                let z = r * Complex64::new(theta.cos(), theta.sin());
                match self.eval_unchecked(f, z) {
                    Ok(v) if v.re.is_finite() && v.im.is_finite() => values.push(v),
                    _ => {
                        failed = true;
                        break;
                    }
                }
            }
            if !failed {
                let samples = BoundarySamples::from_values(values, r, 0.0)?;
                return Ok(series_from_samples(&samples, self.cfg.n_terms));
            }
        }
        Err(Error::JitterExhausted { attempts: JITTER_SCHEDULE.len() })
    }

    fn eval_unchecked(&self, f: &RationalMap, z: Complex64) -> Result<Complex64> {
        if z.norm() >= 1.0 {
            return Err(Error::PoleCollision { at: z });
        }
        if let Some(c) = self.constant_value {
            let denom = Complex64::new(1.0, 0.0) - c.conj() * z;
            if denom.norm() <= CORRECTION_POLE_TOL {
                return Err(Error::CorrectionPole { at: z });
            }
            return Ok(f.eval_finite(Complex64::new(0.0, 0.0))? / denom);
        }
        let sum = self.branch_sum(f, z)?;
        Ok(sum + self.correction(f, z)?)
    }

    fn branch_sum(&self, f: &RationalMap, z: Complex64) -> Result<Complex64> {
        let ctx = self.ctx.as_ref().expect("nonconstant symbols carry branch context");
        let set = ctx.solve(z)?;
        if set.degree_deficit > 0 {
            // Escaped branches contribute 0 only when f is bounded at
            // infinity; the correction-pole guard below makes the zero-
            // branch case unreachable, so this triggers on exact degree
            // drop with polynomial f.
            if f.num().degree() > f.denom().degree() {
                return Err(Error::EscapedBranch);
            }
        }
        if matches!(self.phi_at_infinity, ExtendedValue::Finite(v) if
            (Complex64::new(1.0, 0.0) - v.conj() * z).norm() <= CORRECTION_POLE_TOL)
        {
            // Weights blow up at the correction pole even when the
            // correction term itself is not requested.
            return Err(Error::CorrectionPole { at: z });
        }
        set.weighted_sum(|s| f.eval_finite(s))
    }

    fn correction(&self, f: &RationalMap, z: Complex64) -> Result<Complex64> {
        match self.phi_at_infinity {
            ExtendedValue::Infinity => Ok(Complex64::new(0.0, 0.0)),
            ExtendedValue::Finite(v) => {
                let denom = Complex64::new(1.0, 0.0) - v.conj() * z;
                if denom.norm() <= CORRECTION_POLE_TOL {
                    return Err(Error::CorrectionPole { at: z });
                }
                Ok(f.eval_finite(Complex64::new(0.0, 0.0))? / denom)
            }
        }
    }
}

/// (C*_phi f)(z) by the corrected branch-sum formula.
pub fn adjoint_eval(
    phi: &RationalMap,
    f: &RationalMap,
    z: Complex64,
    cfg: &AdjointConfig,
) -> Result<Complex64> {
    AdjointEngine::new(phi, cfg)?.eval(f, z)
}

/// First n_terms Taylor coefficients of C*_phi f.
pub fn adjoint_coeffs(
    phi: &RationalMap,
    f: &RationalMap,
    cfg: &AdjointConfig,
) -> Result<TruncatedSeries> {
    AdjointEngine::new(phi, cfg)?.coeffs(f)
}

/// The uncorrected branch sum (the historical formula with the correction
/// term missing). Deviates from the true adjoint by exactly
/// f(0)/(1 - conj(phi(inf)) z) for non-polynomial symbols.
pub fn uncorrected_adjoint_eval(
    phi: &RationalMap,
    f: &RationalMap,
    z: Complex64,
    cfg: &AdjointConfig,
) -> Result<Complex64> {
    AdjointEngine::new(phi, cfg)?.uncorrected_eval(f, z)
}
