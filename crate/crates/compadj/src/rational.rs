//! Rational maps p(z)/q(z) in canonical form.
//!
//! Canonical means: numerator and denominator numerically coprime (common
//! roots deflated at construction), denominator monic, and the zero map
//! stored as 0/1. Two equal maps therefore have bitwise-comparable
//! coefficient lists up to floating-point noise.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::roots::{poly_roots, PolyRoot};

/// Default relative tolerance for deciding that numerator and denominator
/// share a root during reduction.
pub const COPRIME_TOL: f64 = 1e-9;

/// A point of the Riemann sphere: rational maps take the value Infinity at
/// their poles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedValue {
    Finite(Complex64),
    Infinity,
}

impl ExtendedValue {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            ExtendedValue::Finite(v) => Some(v),
            ExtendedValue::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedValue::Infinity)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RationalMap {
    num: ComplexPoly,
    denom: ComplexPoly,
}

/// Disk self-map diagnostics from boundary sampling and pole location.
#[derive(Debug, Clone)]
pub struct SelfMapReport {
    pub is_self_map: bool,
    pub max_boundary_modulus: f64,
    pub min_pole_modulus: Option<f64>,
}

impl RationalMap {
    /// Builds the canonical form of num/denom under the default coprimality
    /// tolerance.
    pub fn new(num: ComplexPoly, denom: ComplexPoly) -> Result<Self> {
        Self::new_with_tol(num, denom, COPRIME_TOL)
    }

    /// Builds the canonical form, deflating common roots whose numerator
    /// residual is below `tol * (1 + l1_norm)` at the denominator root.
    pub fn new_with_tol(num: ComplexPoly, denom: ComplexPoly, tol: f64) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalMap { num: ComplexPoly::zero(), denom: ComplexPoly::one() });
        }
        let mut num = num;
        let mut denom = denom;
        if denom.degree() >= 1 && num.degree() >= 1 {
            let num_scale = 1.0 + num.l1_norm();
            for root in poly_roots(&denom)? {
                let mut remaining = root.multiplicity;
                while remaining > 0 && !num.is_zero() {
                    let growth = (1.0 + root.value.norm()).powi(num.degree() as i32);
                    if num.eval(root.value).norm() > tol * num_scale * growth {
                        break;
                    }
                    num = num.deflate(root.value);
                    denom = denom.deflate(root.value);
                    remaining -= 1;
                }
            }
        }
        if num.is_zero() {
            return Ok(RationalMap { num: ComplexPoly::zero(), denom: ComplexPoly::one() });
        }
        let lead = denom.leading();
        Ok(RationalMap { num: num.div_scale(lead), denom: denom.div_scale(lead) })
    }

    pub fn from_poly(p: ComplexPoly) -> Self {
        if p.is_zero() {
            return RationalMap { num: ComplexPoly::zero(), denom: ComplexPoly::one() };
        }
        RationalMap { num: p, denom: ComplexPoly::one() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_poly(ComplexPoly::constant(c))
    }

    pub fn identity() -> Self {
        Self::from_poly(ComplexPoly::monomial(Complex64::new(1.0, 0.0), 1))
    }

    pub fn num(&self) -> &ComplexPoly {
        &self.num
    }

    pub fn denom(&self) -> &ComplexPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Max of numerator and denominator degree after reduction.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.denom.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.degree() == 0
    }

    /// Evaluates on the Riemann sphere. Near-vanishing of the denominator
    /// alone gives Infinity; simultaneous near-vanishing of both parts is
    /// indeterminate (not reachable for maps reduced at construction).
    pub fn eval(&self, z: Complex64) -> Result<ExtendedValue> {
        let n = self.num.eval(z);
        let d = self.denom.eval(z);
        let zgrow = 1.0f64.max(z.norm());
        let d_floor = 1e-14 * (1.0 + self.denom.l1_norm()) * zgrow.powi(self.denom.degree() as i32);
        if d.norm() > d_floor {
            return Ok(ExtendedValue::Finite(n / d));
        }
        let n_floor = 1e-14 * (1.0 + self.num.l1_norm()) * zgrow.powi(self.num.degree() as i32);
        if n.norm() > n_floor {
            Ok(ExtendedValue::Infinity)
        } else {
            Err(Error::Indeterminate { at: z })
        }
    }

    /// Evaluates expecting a finite value; a pole is a PoleCollision error.
    pub fn eval_finite(&self, z: Complex64) -> Result<Complex64> {
        match self.eval(z)? {
            ExtendedValue::Finite(v) => Ok(v),
            ExtendedValue::Infinity => Err(Error::PoleCollision { at: z }),
        }
    }

    /// Sum, reduced to canonical form.
    pub fn add(&self, other: &RationalMap) -> Result<RationalMap> {
        RationalMap::new(
            self.num.mul(&other.denom).add(&other.num.mul(&self.denom)),
            self.denom.mul(&other.denom),
        )
    }

    /// Difference, reduced to canonical form.
    pub fn sub(&self, other: &RationalMap) -> Result<RationalMap> {
        RationalMap::new(
            self.num.mul(&other.denom).sub(&other.num.mul(&self.denom)),
            self.denom.mul(&other.denom),
        )
    }

    /// Product, reduced to canonical form.
    pub fn mul(&self, other: &RationalMap) -> Result<RationalMap> {
        RationalMap::new(self.num.mul(&other.num), self.denom.mul(&other.denom))
    }

    /// Quotient, reduced to canonical form; dividing by the zero map is a
    /// ZeroDenominator error.
    pub fn div(&self, other: &RationalMap) -> Result<RationalMap> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalMap::new(self.num.mul(&other.denom), self.denom.mul(&other.num))
    }

    /// Negation; canonical form is preserved exactly.
    pub fn neg(&self) -> RationalMap {
        RationalMap { num: self.num.scale(Complex64::new(-1.0, 0.0)), denom: self.denom.clone() }
    }

    /// Nonnegative integer power by repeated multiplication; the zeroth
    /// power is the constant 1.
    pub fn pow(&self, k: u32) -> Result<RationalMap> {
        let mut acc = RationalMap::from_poly(ComplexPoly::one());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Quotient-rule derivative, reduced to canonical form.
    pub fn derivative(&self) -> Result<RationalMap> {
        if self.is_polynomial() {
            return Ok(RationalMap::from_poly(self.num.derivative()));
        }
        let dn = self.num.derivative();
        let dd = self.denom.derivative();
        let raw_num = dn.mul(&self.denom).sub(&self.num.mul(&dd));
        RationalMap::new(raw_num, self.denom.mul(&self.denom))
    }

    /// The transform R~(z) = conj(R(1 / conj(z))): both parts are padded to
    /// a common length, conjugated, and reversed.
    pub fn tilde(&self) -> RationalMap {
        if self.num.is_zero() {
            return RationalMap::from_poly(ComplexPoly::zero());
        }
        let len = self.degree() + 1;
        RationalMap::new(self.num.conj_reversed(len), self.denom.conj_reversed(len))
            .expect("conjugate-reversal of a nonzero denominator stays nonzero")
    }

    /// Value at infinity by degree comparison: leading-coefficient ratio for
    /// equal degrees, 0 when the denominator dominates, Infinity otherwise.
    pub fn map_at_infinity(&self) -> ExtendedValue {
        if self.num.is_zero() {
            return ExtendedValue::Finite(Complex64::new(0.0, 0.0));
        }
        let dn = self.num.degree();
        let dd = self.denom.degree();
        if dn > dd {
            ExtendedValue::Infinity
        } else if dn < dd {
            ExtendedValue::Finite(Complex64::new(0.0, 0.0))
        } else {
            ExtendedValue::Finite(self.num.leading() / self.denom.leading())
        }
    }

    /// Inverse of a linear fractional map (az+b)/(cz+d), namely
    /// (dz-b)/(-cz+a). Degree above 1 is rejected, and so are maps with
    /// near-vanishing determinant ad-bc (constants reduce to that case).
    pub fn invert_lfm(&self) -> Result<RationalMap> {
        if self.num.degree() > 1 || self.denom.degree() > 1 {
            return Err(Error::NotLfm);
        }
        let a = self.num.coeff(1);
        let b = self.num.coeff(0);
        let c = self.denom.coeff(1);
        let d = self.denom.coeff(0);
        let det = a * d - b * c;
        let scale = (a.norm() + b.norm()) * (c.norm() + d.norm());
        if det.norm() <= 1e-12 * (1.0 + scale) {
            return Err(Error::Degenerate);
        }
        RationalMap::new(ComplexPoly::new(vec![-b, d]), ComplexPoly::new(vec![a, -c]))
    }

    /// Roots of the denominator (empty for polynomials).
    pub fn poles(&self) -> Result<Vec<PolyRoot>> {
        if self.denom.degree() == 0 {
            return Ok(Vec::new());
        }
        poly_roots(&self.denom)
    }

    /// Checks that all poles lie outside the closed disk and that the
    /// modulus on `n_samples` equispaced boundary points stays within
    /// 1 + tol.
    pub fn is_self_map_of_disk(&self, n_samples: usize, tol: f64) -> Result<SelfMapReport> {
        assert!(n_samples >= 256, "boundary sampling needs at least 256 points");
        let poles = self.poles()?;
        let min_pole_modulus = poles
            .iter()
            .map(|p| p.value.norm())
            .min_by(|a, b| a.partial_cmp(b).expect("pole moduli are finite"));
        let mut max_boundary_modulus = 0.0f64;
        for k in 0..n_samples {
            let theta = std::f64::consts::TAU * k as f64 / n_samples as f64;
            let z = Complex64::new(theta.cos(), theta.sin());
            let m = match self.eval(z)? {
                ExtendedValue::Finite(v) => v.norm(),
                ExtendedValue::Infinity => f64::INFINITY,
            };
            max_boundary_modulus = max_boundary_modulus.max(m);
        }
        let poles_clear = min_pole_modulus.is_none_or(|m| m > 1.0 + tol);
        Ok(SelfMapReport {
            is_self_map: poles_clear && max_boundary_modulus <= 1.0 + tol,
            max_boundary_modulus,
            min_pole_modulus,
        })
    }
}
