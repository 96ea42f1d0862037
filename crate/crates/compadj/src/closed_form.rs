//! Closed-form adjoints for special symbol families.
//!
//! These are independent of the branch solver: they evaluate explicit
//! algebraic expressions, so agreement with the engine on these families is
//! a genuine cross-check rather than a tautology.

use num_complex::Complex64;

use crate::adjoint::check_test_function;
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::rational::RationalMap;

fn guard_denominator(d: Complex64, at: Complex64) -> Result<Complex64> {
    if d.norm() <= 1e-12 {
        Err(Error::PoleCollision { at })
    } else {
        Ok(d)
    }
}

/// Adjoint of a nonconstant linear fractional symbol (az+b)/(cz+d):
///
///   (C* f)(z) = conj(ad - bc) z / ((conj(a) z - conj(c)) (-conj(b) z + conj(d))) f(sigma(z))
///             + conj(c) f(0) / (conj(c) - conj(a) z),
///
/// with sigma(z) = (conj(a) z - conj(c)) / (-conj(b) z + conj(d)). For
/// polynomial symbols (c = 0) the singular prefactor cancels algebraically
/// and the correction term vanishes.
pub fn lfm_adjoint_eval(phi: &RationalMap, f: &RationalMap, z: Complex64) -> Result<Complex64> {
    if phi.degree() != 1 {
        return Err(Error::NotLfm);
    }
    check_test_function(f)?;
    let a = phi.num().coeff(1).conj();
    let b = phi.num().coeff(0).conj();
    let c = phi.denom().coeff(1).conj();
    let d = phi.denom().coeff(0).conj();
    let f0 = f.eval_finite(Complex64::new(0.0, 0.0))?;
    let lower = guard_denominator(-b * z + d, z)?;
    let sigma = (a * z - c) / lower;
    let fs = f.eval_finite(sigma)?;
    if c.norm() == 0.0 {
        // det = ad here, and (az - c) = az cancels against the z upstairs.
        return Ok(d / lower * fs);
    }
    let upper = guard_denominator(a * z - c, z)?;
    let det = a * d - b * c;
    Ok(det * z / (upper * lower) * fs + c * f0 / (c - a * z))
}

/// Adjoint of the monomial symbol z^m: the average of f over the m-th
/// roots of z,
///
///   (C* f)(z) = (1/m) sum_j f(omega^j z^(1/m)).
pub fn monomial_adjoint_eval(m: u32, f: &RationalMap, z: Complex64) -> Result<Complex64> {
    assert!(m >= 1, "monomial degree must be at least 1");
    check_test_function(f)?;
    let root = z.powf(1.0 / m as f64);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let turn = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / m as f64);
        acc += f.eval_finite(root * turn)?;
    }
    Ok(acc / m as f64)
}

/// Adjoint of the quadratic symbol a z^2 + b z (a nonzero):
///
///   sigma_pm(z) = (conj(b) z pm sqrt(conj(b)^2 z^2 + 4 conj(a) z)) / 2,
///   psi_pm = (conj(b) sigma_pm + conj(a)) / (conj(b) sigma_pm + 2 conj(a)),
///
/// summed over both square-root signs; no correction term since
/// phi(inf) = inf.
pub fn quadratic_adjoint_eval(
    a: Complex64,
    b: Complex64,
    f: &RationalMap,
    z: Complex64,
) -> Result<Complex64> {
    assert!(a.norm() > 0.0, "quadratic coefficient must be nonzero");
    check_test_function(f)?;
    let ab = a.conj();
    let bb = b.conj();
    let disc = (bb * bb * z * z + 4.0 * ab * z).sqrt();
    let mut acc = Complex64::new(0.0, 0.0);
    for sign in [1.0, -1.0] {
        let sigma = (bb * z + sign * disc) / 2.0;
        let weight_denom = guard_denominator(bb * sigma + 2.0 * ab, z)?;
        let weight = (bb * sigma + ab) / weight_denom;
        acc += weight * f.eval_finite(sigma)?;
    }
    Ok(acc)
}

/// The fixed boundary-class quadratic-fractional reference symbol
/// (z^2 - 6z + 9)/(z^2 - 10z + 13).
pub fn quadratic_fractional_map() -> RationalMap {
    RationalMap::new(
        ComplexPoly::from_real(&[9.0, -6.0, 1.0]),
        ComplexPoly::from_real(&[13.0, -10.0, 1.0]),
    )
    .expect("fixed reference symbol is well formed")
}

/// Closed-form adjoint for [`quadratic_fractional_map`]:
///
///   sigma_j(z) = (3z - 5 + (-1)^j 2 sqrt(3 - 2z)) / (9z - 13),
///   psi_j(z)   = (-1)^j 2z / (sqrt(3 - 2z) (3z - 4 + (-1)^j sqrt(3 - 2z))),
///
/// summed over j = 1, 2, plus the boundary correction f(0)/(1 - z). The
/// principal square root is used consistently; the sum is symmetric in the
/// branch choice.
pub fn quadratic_fractional_adjoint_eval(f: &RationalMap, z: Complex64) -> Result<Complex64> {
    check_test_function(f)?;
    let root = guard_denominator((Complex64::new(3.0, 0.0) - 2.0 * z).sqrt(), z)?;
    let lower = guard_denominator(9.0 * z - 13.0, z)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for sign in [-1.0, 1.0] {
        let sigma = (3.0 * z - 5.0 + sign * 2.0 * root) / lower;
        let weight_denom = guard_denominator(root * (3.0 * z - 4.0 + sign * root), z)?;
        let weight = sign * 2.0 * z / weight_denom;
        acc += weight * f.eval_finite(sigma)?;
    }
    let correction_denom = guard_denominator(Complex64::new(1.0, 0.0) - z, z)?;
    Ok(acc + f.eval_finite(Complex64::new(0.0, 0.0))? / correction_denom)
}
