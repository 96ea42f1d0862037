//! Truncated H^2 power series and boundary sampling.
//!
//! A function analytic on a neighborhood of the closed sampling circle is
//! recovered from M equispaced samples by the discrete Cauchy integral: the
//! forward DFT bin n, divided by M r^n, approximates the Taylor coefficient
//! a_n up to aliasing of order a_(n+M) r^M. Sampling on the unit circle
//! additionally exposes the negative-frequency part of non-analytic data,
//! which the Riesz projection drops.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::rational::RationalMap;

/// Functions that can be sampled on a circle. `poles` lists known finite
/// poles so the sampler can shift its grid away from them; an empty list
/// means no pole information, not necessarily no poles.
pub trait Analytic {
    fn eval_at(&self, z: Complex64) -> Result<Complex64>;

    fn poles(&self) -> Vec<Complex64> {
        Vec::new()
    }
}

impl Analytic for ComplexPoly {
    fn eval_at(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.eval(z))
    }
}

impl Analytic for RationalMap {
    fn eval_at(&self, z: Complex64) -> Result<Complex64> {
        self.eval_finite(z)
    }

    fn poles(&self) -> Vec<Complex64> {
        self.poles().map(|v| v.into_iter().map(|r| r.value).collect()).unwrap_or_default()
    }
}

/// The composite z -> f(phi(z)). Known poles are those of phi; preimages of
/// f's poles under phi are not enumerated (for disk self-maps phi and test
/// functions with poles outside the closed disk they cannot meet the grid).
pub struct Composed<'a> {
    pub f: &'a dyn Analytic,
    pub phi: &'a RationalMap,
}

impl Analytic for Composed<'_> {
    fn eval_at(&self, z: Complex64) -> Result<Complex64> {
        let w = self.phi.eval_finite(z)?;
        self.f.eval_at(w)
    }

    fn poles(&self) -> Vec<Complex64> {
        Analytic::poles(self.phi)
    }
}

/// Power-series coefficients a_0 .. a_(N-1); the length is the truncation
/// order N.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zeros(n: usize) -> Self {
        TruncatedSeries { coeffs: vec![Complex64::new(0.0, 0.0); n] }
    }

    /// First n coefficients of a polynomial (padding with zeros).
    pub fn from_poly(p: &ComplexPoly, n: usize) -> Self {
        TruncatedSeries { coeffs: (0..n).map(|k| p.coeff(k)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// H^2 pairing sum a_n conj(b_n); the shorter series is zero-padded.
    pub fn inner_product(&self, other: &TruncatedSeries) -> Complex64 {
        self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a * b.conj()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl Analytic for TruncatedSeries {
    fn eval_at(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.eval(z))
    }
}

/// A point w of the open unit disk, the parameter of the reproducing kernel
/// K_w(z) = 1/(1 - conj(w) z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint(Complex64);

impl KernelPoint {
    pub fn new(w: Complex64) -> Result<Self> {
        if w.norm() < 1.0 {
            Ok(KernelPoint(w))
        } else {
            Err(Error::PoleInDisk { pole: w.inv().conj() })
        }
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    /// K_w as a rational map 1/(1 - conj(w) z); its pole 1/conj(w) lies
    /// outside the closed disk.
    pub fn as_rational(self) -> RationalMap {
        RationalMap::new(
            ComplexPoly::one(),
            ComplexPoly::new(vec![Complex64::new(1.0, 0.0), -self.0.conj()]),
        )
        .expect("kernel denominator is nonzero")
    }
}

/// First n kernel coefficients: K_w has a_k = conj(w)^k.
pub fn kernel_at(w: KernelPoint, n: usize) -> TruncatedSeries {
    let wb = w.value().conj();
    let mut coeffs = Vec::with_capacity(n);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        coeffs.push(acc);
        acc *= wb;
    }
    TruncatedSeries::new(coeffs)
}

/// M equispaced samples on the circle of the given radius, taken at angles
/// 2 pi k / M + offset. A nonzero offset records a half-step grid shift.
#[derive(Debug, Clone)]
pub struct BoundarySamples {
    values: Vec<Complex64>,
    radius: f64,
    offset: f64,
}

impl BoundarySamples {
    pub fn from_values(values: Vec<Complex64>, radius: f64, offset: f64) -> Result<Self> {
        if !(radius > 0.0 && radius <= 1.0) {
            return Err(Error::RadiusInvalid);
        }
        assert!(
            values.len() >= 2 && values.len().is_power_of_two(),
            "sample count must be a power of two"
        );
        Ok(BoundarySamples { values, radius, offset })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// The k-th grid point r e^(i (2 pi k / M + offset)).
    pub fn point(&self, k: usize) -> Complex64 {
        let theta = std::f64::consts::TAU * k as f64 / self.values.len() as f64 + self.offset;
        self.radius * Complex64::new(theta.cos(), theta.sin())
    }
}

fn dft_forward(values: &[Complex64]) -> Vec<Complex64> {
    let mut buf = values.to_vec();
    FftPlanner::new().plan_fft_forward(buf.len()).process(&mut buf);
    buf
}

/// Samples f on a circle, shifting the grid by half a step if a grid point
/// fails to evaluate or sits within 1e-6 of a known pole. Failures on both
/// grids propagate the second grid's error.
pub fn sample_analytic(f: &dyn Analytic, radius: f64, m: usize) -> Result<BoundarySamples> {
    if !(radius > 0.0 && radius <= 1.0) {
        return Err(Error::RadiusInvalid);
    }
    assert!(m >= 2 && m.is_power_of_two(), "sample count must be a power of two");
    let poles = f.poles();
    let mut last_err = None;
    for shift in 0..2 {
        let offset = shift as f64 * std::f64::consts::PI / m as f64;
        let mut values = Vec::with_capacity(m);
        let mut failed = false;
        for k in 0..m {
            let theta = std::f64::consts::TAU * k as f64 / m as f64 + offset;
            let z = radius * Complex64::new(theta.cos(), theta.sin());
            if poles.iter().any(|p| (z - p).norm() < 1e-6) {
                last_err = Some(Error::PoleCollision { at: z });
                failed = true;
                break;
            }
            match f.eval_at(z) {
                Ok(v) if v.re.is_finite() && v.im.is_finite() => values.push(v),
                Ok(_) => {
                    last_err = Some(Error::PoleCollision { at: z });
                    failed = true;
                    break;
                }
                Err(e) => {
                    last_err = Some(e);
                    failed = true;
                    break;
                }
            }
        }
        if !failed {
            return BoundarySamples::from_values(values, radius, offset);
        }
    }
    Err(last_err.expect("a failed sampling pass records its error"))
}

/// Taylor coefficients a_0 .. a_(n-1) from circle samples: bin n of the
/// forward DFT, rotated by the grid offset and scaled by 1/(M r^n).
/// Requires n <= M; coefficients beyond M/2 alias severely and the caller
/// is expected to keep n well below M.
pub fn series_from_samples(samples: &BoundarySamples, n: usize) -> TruncatedSeries {
    let m = samples.len();
    assert!(n <= m, "cannot extract more coefficients than samples");
    let bins = dft_forward(samples.values());
    let mut coeffs = Vec::with_capacity(n);
    let mut r_pow = 1.0;
    for (k, bin) in bins.iter().take(n).enumerate() {
        let rotation = Complex64::from_polar(1.0, -(k as f64) * samples.offset());
        coeffs.push(bin * rotation / (m as f64 * r_pow));
        r_pow *= samples.radius();
    }
    TruncatedSeries::new(coeffs)
}

/// Analytic (nonnegative-frequency) part of unit-circle samples: Fourier
/// bins 0..n-1 capped at M/2, with bins in (M/2, M) dropped.
pub fn riesz_project(samples: &BoundarySamples, n: usize) -> TruncatedSeries {
    assert!(samples.radius() == 1.0, "the Riesz projection reads Fourier data on the unit circle");
    let m = samples.len();
    let bins = dft_forward(samples.values());
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
    for (k, c) in coeffs.iter_mut().enumerate().take(n.min(m / 2 + 1)) {
        let rotation = Complex64::from_polar(1.0, -(k as f64) * samples.offset());
        *c = bins[k] * rotation / m as f64;
    }
    TruncatedSeries::new(coeffs)
}

/// Negative Fourier coefficients c_(-1) .. c_(-n_max) of unit-circle
/// samples, read from the top DFT bins.
pub fn negative_fourier_coeffs(samples: &BoundarySamples, n_max: usize) -> Vec<Complex64> {
    assert!(
        samples.radius() == 1.0,
        "negative Fourier coefficients are defined on the unit circle"
    );
    let m = samples.len();
    assert!(n_max < m / 2, "requested negative range reaches aliased bins");
    let bins = dft_forward(samples.values());
    (1..=n_max)
        .map(|n| {
            let rotation = Complex64::from_polar(1.0, n as f64 * samples.offset());
            bins[m - n] * rotation / m as f64
        })
        .collect()
}

/// First n Taylor coefficients of f(phi(z)) by circle sampling at radius r
/// with m points.
pub fn compose_series(
    f: &dyn Analytic,
    phi: &RationalMap,
    n: usize,
    r: f64,
    m: usize,
) -> Result<TruncatedSeries> {
    let composed = Composed { f, phi };
    let samples = sample_analytic(&composed, r, m)?;
    Ok(series_from_samples(&samples, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn monomials_are_orthonormal() {
        let e2 = TruncatedSeries::from_poly(&ComplexPoly::monomial(c(1.0, 0.0), 2), 8);
        let e5 = TruncatedSeries::from_poly(&ComplexPoly::monomial(c(1.0, 0.0), 5), 8);
        assert_eq!(e2.inner_product(&e2), c(1.0, 0.0));
        assert_eq!(e2.inner_product(&e5), c(0.0, 0.0));
        assert_eq!(e2.norm(), 1.0);
    }

    #[test]
    fn kernel_reproduces_polynomial_values() {
        let f = ComplexPoly::new(vec![c(2.0, 0.0), c(3.0, -1.0), c(0.0, 0.0), c(-1.0, 0.5)]);
        let fs = TruncatedSeries::from_poly(&f, 64);
        let w = KernelPoint::new(c(0.3, -0.4)).unwrap();
        let k = kernel_at(w, 64);
        let reproduced = fs.inner_product(&k);
        assert!((reproduced - f.eval(w.value())).norm() < 1e-12);
    }

    #[test]
    fn kernel_pairing_matches_geometric_sum() {
        // <K_w, K_v> = K_w(v) = 1/(1 - conj(w) v), up to the truncation
        // tail |w v|^N / (1 - |w v|).
        let w = c(0.8, 0.0);
        let v = c(0.0, 0.8);
        let kw = kernel_at(KernelPoint::new(w).unwrap(), 64);
        let kv = kernel_at(KernelPoint::new(v).unwrap(), 64);
        let got = kw.inner_product(&kv);
        let expect = (c(1.0, 0.0) - w.conj() * v).inv();
        let tail = 0.64f64.powi(64) / (1.0 - 0.64);
        assert!((got - expect).norm() < tail + 1e-13);
    }

    #[test]
    fn kernel_point_rejects_boundary() {
        assert!(KernelPoint::new(c(1.0, 0.0)).is_err());
        assert!(KernelPoint::new(c(0.999, 0.0)).is_ok());
    }

    #[test]
    fn sampling_recovers_polynomial_coefficients() {
        let p = ComplexPoly::new(vec![c(1.0, 0.5), c(0.0, -2.0), c(3.0, 0.0), c(0.25, 0.25)]);
        let samples = sample_analytic(&p, 0.5, 64).unwrap();
        let series = series_from_samples(&samples, 8);
        for k in 0..8 {
            assert!((series.coeff(k) - p.coeff(k)).norm() < 1e-13);
        }
    }

    #[test]
    fn sampling_recovers_rational_taylor_series() {
        // 2z/(z+4) = z/2 - z^2/8 + z^3/32 - z^4/128 + ...
        let r = RationalMap::new(
            ComplexPoly::from_real(&[0.0, 2.0]),
            ComplexPoly::from_real(&[4.0, 1.0]),
        )
        .unwrap();
        let samples = sample_analytic(&r, 0.5, 512).unwrap();
        let series = series_from_samples(&samples, 8);
        let expected = [0.0, 0.5, -0.125, 0.03125, -0.0078125];
        for (k, &e) in expected.iter().enumerate() {
            assert!((series.coeff(k) - c(e, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn composition_squares_the_quadratic() {
        // (z^2 + z)/2 squared: coefficients (0, 0, 1/4, 1/2, 1/4).
        let phi =
            RationalMap::new(ComplexPoly::from_real(&[0.0, 0.5, 0.5]), ComplexPoly::one()).unwrap();
        let f = ComplexPoly::monomial(c(1.0, 0.0), 2);
        let series = compose_series(&f, &phi, 8, 0.5, 512).unwrap();
        let expected = [0.0, 0.0, 0.25, 0.5, 0.25, 0.0, 0.0, 0.0];
        for (k, &e) in expected.iter().enumerate() {
            assert!((series.coeff(k) - c(e, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn riesz_projection_keeps_analytic_part() {
        // 2z/(2z-1) on the unit circle has analytic part identically 1 and
        // negative coefficients 2^(-n).
        let g = RationalMap::new(
            ComplexPoly::from_real(&[0.0, 2.0]),
            ComplexPoly::from_real(&[-1.0, 2.0]),
        )
        .unwrap();
        let samples = sample_analytic(&g, 1.0, 512).unwrap();
        let analytic = riesz_project(&samples, 8);
        assert!((analytic.coeff(0) - c(1.0, 0.0)).norm() < 1e-12);
        for k in 1..8 {
            assert!(analytic.coeff(k).norm() < 1e-12);
        }
        let neg = negative_fourier_coeffs(&samples, 10);
        for (i, &cn) in neg.iter().enumerate() {
            let expect = 0.5f64.powi(i as i32 + 1);
            assert!((cn - c(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn riesz_projection_is_idempotent_on_polynomials() {
        let p = ComplexPoly::new(vec![c(0.3, 0.1), c(-1.0, 0.0), c(0.0, 0.7)]);
        let samples = sample_analytic(&p, 1.0, 64).unwrap();
        let proj = riesz_project(&samples, 8);
        for k in 0..8 {
            assert!((proj.coeff(k) - p.coeff(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn grid_shifts_off_a_boundary_pole() {
        // z/(z-1) has its pole exactly on the k = 0 grid point of the unit
        // circle; the sampler must fall back to the half-step grid.
        let g = RationalMap::new(
            ComplexPoly::from_real(&[0.0, 1.0]),
            ComplexPoly::from_real(&[-1.0, 1.0]),
        )
        .unwrap();
        let samples = sample_analytic(&g, 1.0, 64).unwrap();
        assert!(samples.offset() > 0.0);
        assert!(samples.values().iter().all(|v| v.re.is_finite() && v.im.is_finite()));
    }

    #[test]
    fn shifted_grid_extraction_is_consistent() {
        // Coefficients extracted from the shifted grid match the unshifted
        // ones on a benign integrand.
        let p = ComplexPoly::new(vec![c(0.2, 0.0), c(1.0, -0.5), c(0.0, 0.3)]);
        let plain = sample_analytic(&p, 0.5, 64).unwrap();
        let shifted_values: Vec<Complex64> = (0..64)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / 64.0 + std::f64::consts::PI / 64.0;
                p.eval(0.5 * Complex64::new(theta.cos(), theta.sin()))
            })
            .collect();
        let shifted =
            BoundarySamples::from_values(shifted_values, 0.5, std::f64::consts::PI / 64.0).unwrap();
        let a = series_from_samples(&plain, 6);
        let b = series_from_samples(&shifted, 6);
        for k in 0..6 {
            assert!((a.coeff(k) - b.coeff(k)).norm() < 1e-13);
        }
    }

    #[test]
    fn aliasing_folds_high_frequencies() {
        // Sampling z^(M+1) on M points aliases onto bin 1 with weight r^M.
        let m = 16;
        let p = ComplexPoly::monomial(c(1.0, 0.0), m + 1);
        let samples = sample_analytic(&p, 0.5, m).unwrap();
        let series = series_from_samples(&samples, 4);
        let expect = 0.5f64.powi(m as i32);
        assert!((series.coeff(1) - c(expect, 0.0)).norm() < 1e-15);
    }
}
