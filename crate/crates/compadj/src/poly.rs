//! Dense complex polynomials in one variable.
//!
//! Coefficients are stored low degree first. The canonical form keeps the
//! trailing (leading-degree) coefficient nonzero; the zero polynomial is the
//! empty coefficient list with degree 0 by convention.

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    /// Builds a polynomial from coefficients (constant term first), trimming
    /// exactly-zero leading coefficients.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.re == 0.0 && c.im == 0.0) {
            coeffs.pop();
        }
        ComplexPoly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero() -> Self {
        ComplexPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c z^k.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Builds lead * (z - r_1) * ... * (z - r_n) from its roots.
    pub fn from_roots(lead: Complex64, roots: &[Complex64]) -> Self {
        let mut p = Self::constant(lead);
        for &r in roots {
            p = p.mul(&Self::new(vec![-r, Complex64::new(1.0, 0.0)]));
        }
        p
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of z^k (0 beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with both constants and the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> ComplexPoly {
        if self.coeffs.len() <= 1 {
            return ComplexPoly::zero();
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect();
        ComplexPoly::new(coeffs)
    }

    pub fn add(&self, other: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        ComplexPoly::new(coeffs)
    }

    pub fn sub(&self, other: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        ComplexPoly::new(coeffs)
    }

    pub fn mul(&self, other: &ComplexPoly) -> ComplexPoly {
        if self.is_zero() || other.is_zero() {
            return ComplexPoly::zero();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ComplexPoly::new(coeffs)
    }

    pub fn scale(&self, c: Complex64) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Divides every coefficient by `c`. Dividing a polynomial by its own
    /// leading coefficient yields an exactly monic result.
    pub fn div_scale(&self, c: Complex64) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|&a| a / c).collect())
    }

    pub fn conj(&self) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|a| a.conj()).collect())
    }

    /// Synthetic division by (z - r); the remainder p(r) is discarded.
    /// Used to deflate a known root out of the polynomial.
    pub fn deflate(&self, r: Complex64) -> ComplexPoly {
        if self.coeffs.len() <= 1 {
            return ComplexPoly::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n - 1];
        let mut acc = self.coeffs[n - 1];
        for k in (1..n).rev() {
            out[k - 1] = acc;
            acc = self.coeffs[k - 1] + acc * r;
        }
        ComplexPoly::new(out)
    }

    /// Conjugates coefficients and reverses their order after padding to
    /// `len` entries. This is the polynomial half of the transform
    /// p(z) -> z^(len-1) * conj(p(1/conj(z))).
    pub fn conj_reversed(&self, len: usize) -> ComplexPoly {
        assert!(len >= self.coeffs.len(), "padding length below degree");
        let mut coeffs: Vec<Complex64> = (0..len).map(|k| self.coeff(k).conj()).collect();
        coeffs.reverse();
        ComplexPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(re: &[f64]) -> ComplexPoly {
        ComplexPoly::from_real(re)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = poly(&[1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeffs().len(), 2);
        assert!(poly(&[0.0, 0.0]).is_zero());
    }

    #[test]
    fn horner_matches_expansion() {
        // (z - 0.3)^2 (z + 2) = z^3 + 1.4 z^2 - 1.11 z + 0.18
        let p = poly(&[0.18, -1.11, 1.4, 1.0]);
        let z = c(0.7, -0.2);
        let direct = (z - 0.3) * (z - 0.3) * (z + 2.0);
        assert!((p.eval(z) - direct).norm() < 1e-14);
    }

    #[test]
    fn derivative_of_cubic() {
        let p = poly(&[0.18, -1.11, 1.4, 1.0]);
        let dp = p.derivative();
        assert_eq!(dp.coeffs(), &[c(-1.11, 0.0), c(2.8, 0.0), c(3.0, 0.0)]);
        assert!(poly(&[5.0]).derivative().is_zero());
    }

    #[test]
    fn product_and_deflation_are_inverse() {
        let p = ComplexPoly::from_roots(c(2.0, 0.0), &[c(0.3, 0.0), c(-1.0, 0.5)]);
        let q = p.deflate(c(0.3, 0.0));
        let expected = ComplexPoly::from_roots(c(2.0, 0.0), &[c(-1.0, 0.5)]);
        for (a, b) in q.coeffs().iter().zip(expected.coeffs()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn conj_reversed_swaps_ends() {
        // 2z + 0 padded to length 2: coefficients [0, 2] -> [2, 0] -> constant 2.
        let p = poly(&[0.0, 2.0]);
        let q = p.conj_reversed(2);
        assert_eq!(q.coeffs(), &[c(2.0, 0.0)]);
        // z + 4 -> 4z + 1 (conjugate-reverse with complex entries).
        let r = ComplexPoly::new(vec![c(4.0, 1.0), c(1.0, 0.0)]);
        let s = r.conj_reversed(2);
        assert_eq!(s.coeffs(), &[c(1.0, 0.0), c(4.0, -1.0)]);
    }

    #[test]
    fn from_roots_expands_double_root() {
        let p = ComplexPoly::from_roots(c(1.0, 0.0), &[c(0.3, 0.0), c(0.3, 0.0), c(-2.0, 0.0)]);
        let expected = poly(&[0.18, -1.11, 1.4, 1.0]);
        for (a, b) in p.coeffs().iter().zip(expected.coeffs()) {
            assert!((a - b).norm() < 1e-14);
        }
    }
}
