//! Truncated composition-operator matrices.
//!
//! The N x N matrix of C_phi on the monomial basis has column j equal to
//! the first N Taylor coefficients of phi^j. Its conjugate transpose acts
//! as an adjoint oracle that is independent of any branch-sum formula:
//! <C_phi f, g> = <f, M* g> holds exactly for truncated series by
//! construction, so disagreement with the formula-based adjoint localizes a
//! defect on the formula side (or, for non-contractive symbols, in the
//! truncation).

use num_complex::Complex64;

use crate::error::Result;
use crate::hardy::{sample_analytic, series_from_samples, BoundarySamples, TruncatedSeries};
use crate::rational::RationalMap;

/// Dense row-major N x N matrix; entry (i, j) is the i-th Taylor
/// coefficient of phi^j.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    /// Applies the truncated C_phi: (M f)_i = sum_j M(i,j) f_j.
    pub fn apply(&self, f: &TruncatedSeries) -> TruncatedSeries {
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..self.n.min(f.len()) {
                *o += self.get(i, j) * f.coeff(j);
            }
        }
        TruncatedSeries::new(out)
    }

    /// Applies the conjugate transpose: (M* g)_j = sum_i conj(M(i,j)) g_i.
    pub fn adjoint_apply(&self, g: &TruncatedSeries) -> TruncatedSeries {
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        for (j, o) in out.iter_mut().enumerate() {
            for i in 0..self.n.min(g.len()) {
                *o += self.get(i, j).conj() * g.coeff(i);
            }
        }
        TruncatedSeries::new(out)
    }
}

/// Builds the truncated matrix of C_phi by sampling phi once and extracting
/// the coefficients of its powers incrementally.
pub fn comp_op_matrix(phi: &RationalMap, n: usize, r: f64, m: usize) -> Result<OperatorMatrix> {
    let phi_samples = sample_analytic(phi, r, m)?;
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    // Column 0 is the constant function 1.
    entries[0] = Complex64::new(1.0, 0.0);
    let mut power: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); m];
    for j in 1..n {
        for (p, v) in power.iter_mut().zip(phi_samples.values()) {
            *p *= v;
        }
        let samples = BoundarySamples::from_values(
            power.clone(),
            phi_samples.radius(),
            phi_samples.offset(),
        )?;
        let column = series_from_samples(&samples, n);
        for i in 0..n {
            entries[i * n + j] = column.coeff(i);
        }
    }
    Ok(OperatorMatrix { n, entries })
}

/// Oracle adjoint: builds the truncated matrix and applies its conjugate
/// transpose to g.
pub fn oracle_adjoint_apply(
    phi: &RationalMap,
    g: &TruncatedSeries,
    n: usize,
    r: f64,
    m: usize,
) -> Result<TruncatedSeries> {
    Ok(comp_op_matrix(phi, n, r, m)?.adjoint_apply(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPoly;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn exterior_lfm() -> RationalMap {
        RationalMap::new(ComplexPoly::from_real(&[0.0, 2.0]), ComplexPoly::from_real(&[4.0, 1.0]))
            .unwrap()
    }

    #[test]
    fn column_one_is_the_symbol_series() {
        let m = comp_op_matrix(&exterior_lfm(), 16, 0.5, 512).unwrap();
        let expected = [0.0, 0.5, -0.125, 0.03125, -0.0078125];
        for (i, &e) in expected.iter().enumerate() {
            assert!((m.get(i, 1) - c(e, 0.0)).norm() < 1e-13);
        }
        assert_eq!(m.get(0, 0), c(1.0, 0.0));
        assert!(m.get(3, 0).norm() == 0.0);
    }

    #[test]
    fn squaring_symbol_relocates_coefficients() {
        // For phi = z^2 the adjoint picks every second coefficient:
        // (M* g)_j = g_(2j).
        let phi =
            RationalMap::new(ComplexPoly::monomial(c(1.0, 0.0), 2), ComplexPoly::one()).unwrap();
        let m = comp_op_matrix(&phi, 16, 0.5, 512).unwrap();
        let g = TruncatedSeries::new((0..16).map(|k| c(k as f64 + 1.0, -(k as f64))).collect());
        let out = m.adjoint_apply(&g);
        // Extraction noise in entry (i, j) grows like eps / r^i, so the top
        // rows sit near 1e-12 at r = 0.5 with 16 rows; 1e-10 leaves margin
        // while still catching any indexing defect.
        for j in 0..8 {
            assert!((out.coeff(j) - g.coeff(2 * j)).norm() < 1e-10);
        }
        for j in 8..16 {
            assert!(out.coeff(j).norm() < 1e-10);
        }
    }

    #[test]
    fn matrix_adjoint_pairing_is_exact() {
        // <M f, g> = <f, M* g> up to rounding, by construction.
        let m = comp_op_matrix(&exterior_lfm(), 24, 0.5, 512).unwrap();
        let f = TruncatedSeries::new((0..24).map(|k| c((k as f64 * 0.37).sin(), 0.2)).collect());
        let g = TruncatedSeries::new((0..24).map(|k| c(0.1, (k as f64 * 0.71).cos())).collect());
        let lhs = m.apply(&f).inner_product(&g);
        let rhs = f.inner_product(&m.adjoint_apply(&g));
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn oracle_adjoint_of_kernel_is_kernel_at_image() {
        // C*_phi K_w = K_phi(w): the oracle reproduces the kernel identity
        // for a truncation-friendly symbol.
        use crate::hardy::{kernel_at, KernelPoint};
        let phi = exterior_lfm();
        let w = KernelPoint::new(c(0.4, 0.2)).unwrap();
        let kw = kernel_at(w, 64);
        let out = oracle_adjoint_apply(&phi, &kw, 64, 0.5, 512).unwrap();
        let image = phi.eval(w.value()).unwrap().finite().unwrap();
        let expect = kernel_at(KernelPoint::new(image).unwrap(), 64);
        for k in 0..32 {
            assert!((out.coeff(k) - expect.coeff(k)).norm() < 1e-8, "coefficient {k} differs");
        }
    }
}
