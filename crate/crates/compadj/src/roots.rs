//! Polynomial root finding.
//!
//! Simultaneous (Aberth-Ehrlich) iteration from randomly perturbed initial
//! guesses on a circle, followed by multiplicity detection via root
//! clustering and a Newton polish. Multiple roots of multiplicity m are
//! polished as simple roots of the (m-1)st derivative.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;

#[derive(Debug, Clone)]
pub struct RootSettings {
    /// Relative residual target for the certification bound.
    pub eps_residual: f64,
    /// Roots closer than this (scaled by 1 + max |root|) merge into one
    /// cluster whose size is the reported multiplicity.
    pub cluster_radius: f64,
    /// Iteration cap for the simultaneous phase.
    pub max_iterations: usize,
    /// Seed for the initial-guess perturbation; fixed seed gives
    /// bit-identical results.
    pub seed: u64,
}

impl Default for RootSettings {
    fn default() -> Self {
        RootSettings {
            eps_residual: 1e-12,
            cluster_radius: 1e-7,
            max_iterations: 500,
            seed: 0x5EED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyRoot {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// All roots of `p` with multiplicities, under default settings.
pub fn poly_roots(p: &ComplexPoly) -> Result<Vec<PolyRoot>> {
    poly_roots_with(p, &RootSettings::default())
}

/// All roots of `p` with multiplicities. Exact zero roots (bit-zero low
/// coefficients) are split off first; the rest go through the simultaneous
/// iteration. Roots are returned sorted by real part, then imaginary part.
pub fn poly_roots_with(p: &ComplexPoly, settings: &RootSettings) -> Result<Vec<PolyRoot>> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::DegreeZero);
    }

    let zero = Complex64::new(0.0, 0.0);
    let mut zero_mult = 0;
    while p.coeff(zero_mult) == zero {
        zero_mult += 1;
    }
    let mut roots: Vec<PolyRoot> = Vec::new();
    if zero_mult > 0 {
        roots.push(PolyRoot { value: zero, multiplicity: zero_mult });
    }

    let reduced = ComplexPoly::new(p.coeffs()[zero_mult..].to_vec());
    if reduced.degree() >= 1 {
        let monic = reduced.scale(reduced.leading().inv());
        let raw = aberth(&monic, settings)?;
        let clusters = cluster(&raw, settings.cluster_radius);
        for (mut value, multiplicity) in clusters {
            value = polish(&monic, value, multiplicity);
            if !certified(&monic, value, multiplicity, settings.eps_residual) {
                return Err(Error::NonConvergence { iterations: settings.max_iterations });
            }
            roots.push(PolyRoot { value, multiplicity });
        }
    }

    roots.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .expect("root coordinates are finite")
    });
    Ok(roots)
}

/// Simultaneous iteration on a monic polynomial with nonzero constant term.
fn aberth(p: &ComplexPoly, settings: &RootSettings) -> Result<Vec<Complex64>> {
    let n = p.degree();
    if n == 1 {
        return Ok(vec![-p.coeff(0)]);
    }

    let dp = p.derivative();
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);

    // Cauchy-style radius bound for a monic polynomial; guesses sit well
    // inside it with randomized angles so symmetric configurations cannot
    // stall the iteration.
    let bound = 1.0 + p.coeffs().iter().take(n).map(|c| c.norm()).fold(0.0, f64::max);
    let theta0: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let mut w: Vec<Complex64> = (0..n)
        .map(|j| {
            let jitter: f64 = rng.gen_range(-0.05..0.05);
            let angle = theta0 + std::f64::consts::TAU * j as f64 / n as f64 + jitter;
            0.5 * bound * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    for _ in 0..settings.max_iterations {
        let mut max_step = 0.0f64;
        let snapshot = w.clone();
        for j in 0..n {
            let wj = snapshot[j];
            let pv = p.eval(wj);
            let dv = dp.eval(wj);
            if pv.norm() == 0.0 {
                continue;
            }
            let newton = if dv.norm() > 0.0 {
                pv / dv
            } else {
                // Stationary point: nudge off it and retry next sweep.
                let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                w[j] = wj + 1e-6 * (1.0 + wj.norm()) * Complex64::new(angle.cos(), angle.sin());
                max_step = f64::MAX;
                continue;
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            let mut collided = false;
            for (k, &wk) in snapshot.iter().enumerate() {
                if k == j {
                    continue;
                }
                let d = wj - wk;
                if d.norm() < 1e-300 {
                    collided = true;
                    break;
                }
                repulsion += d.inv();
            }
            if collided {
                let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                w[j] = wj + 1e-6 * (1.0 + wj.norm()) * Complex64::new(angle.cos(), angle.sin());
                max_step = f64::MAX;
                continue;
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            w[j] = wj - step;
            max_step = max_step.max(step.norm() / (1.0 + w[j].norm()));
        }
        if max_step < 1e-14 {
            return Ok(w);
        }
    }
    // The polish-and-certify stage decides whether the final sweep is good
    // enough; hitting the cap alone is not a failure.
    Ok(w)
}

/// Greedy transitive clustering with radius scaled by the largest root.
fn cluster(roots: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let scale = 1.0 + roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let delta = radius * scale;
    let mut assigned = vec![false; roots.len()];
    let mut out = Vec::new();
    for i in 0..roots.len() {
        if assigned[i] {
            continue;
        }
        let mut members = vec![roots[i]];
        assigned[i] = true;
        let mut frontier = vec![roots[i]];
        while let Some(c) = frontier.pop() {
            for (j, &r) in roots.iter().enumerate() {
                if !assigned[j] && (r - c).norm() <= delta {
                    assigned[j] = true;
                    members.push(r);
                    frontier.push(r);
                }
            }
        }
        let centroid = members.iter().sum::<Complex64>() / members.len() as f64;
        out.push((centroid, members.len()));
    }
    out
}

/// Newton polish. A multiplicity-m cluster centroid is a simple root of the
/// (m-1)st derivative, where Newton converges quadratically again.
fn polish(p: &ComplexPoly, start: Complex64, multiplicity: usize) -> Complex64 {
    let mut target = p.clone();
    for _ in 1..multiplicity {
        target = target.derivative();
    }
    let dtarget = target.derivative();
    let mut w = start;
    for _ in 0..40 {
        let dv = dtarget.eval(w);
        if dv.norm() < 1e-300 {
            break;
        }
        let step = target.eval(w) / dv;
        let next = w - step;
        if !next.re.is_finite() || !next.im.is_finite() {
            break;
        }
        w = next;
        if step.norm() <= 1e-16 * (1.0 + w.norm()) {
            break;
        }
    }
    w
}

/// Residual certificate: |p^(k)(r)| small relative to coefficient size for
/// every k below the multiplicity, with growth allowance for large roots.
fn certified(p: &ComplexPoly, r: Complex64, multiplicity: usize, eps: f64) -> bool {
    let growth = (1.0 + r.norm()).powi(p.degree() as i32);
    let mut q = p.clone();
    for _ in 0..multiplicity {
        let bound = eps.max(1e-12) * 100.0 * (1.0 + q.l1_norm()) * growth;
        if q.eval(r).norm() > bound {
            return false;
        }
        q = q.derivative();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_values(roots: &[PolyRoot]) -> Vec<Complex64> {
        roots.iter().map(|r| r.value).collect()
    }

    #[test]
    fn quadratic_with_known_roots() {
        // (z - 0.5)(z + 0.25i) = z^2 + (-0.5 + 0.25i) z - 0.125i
        let p = ComplexPoly::new(vec![c(0.0, -0.125), c(-0.5, 0.25), c(1.0, 0.0)]);
        let roots = poly_roots(&p).unwrap();
        let vals = sorted_values(&roots);
        assert_eq!(roots.len(), 2);
        assert!((vals[0] - c(0.0, -0.25)).norm() < 1e-12);
        assert!((vals[1] - c(0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn double_root_is_clustered() {
        // (z - 0.3)^2 (z + 2) = z^3 + 1.4 z^2 - 1.11 z + 0.18
        let p = ComplexPoly::from_real(&[0.18, -1.11, 1.4, 1.0]);
        let roots = poly_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        let double = roots.iter().find(|r| r.multiplicity == 2).unwrap();
        let simple = roots.iter().find(|r| r.multiplicity == 1).unwrap();
        assert!((double.value - c(0.3, 0.0)).norm() < 1e-6);
        assert!((simple.value - c(-2.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn exact_zero_roots_split_off() {
        // z^2 (z - 0.7)
        let p = ComplexPoly::from_real(&[0.0, 0.0, -0.7, 1.0]);
        let roots = poly_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].value, c(0.0, 0.0));
        assert_eq!(roots[0].multiplicity, 2);
        assert!((roots[1].value - c(0.7, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn degree_zero_is_rejected() {
        assert!(matches!(poly_roots(&ComplexPoly::from_real(&[3.0])), Err(Error::DegreeZero)));
        assert!(matches!(poly_roots(&ComplexPoly::zero()), Err(Error::DegreeZero)));
    }

    #[test]
    fn residuals_meet_certificate() {
        let p = ComplexPoly::from_roots(
            c(2.0, -1.0),
            &[c(0.5, 0.5), c(-0.8, 0.1), c(1.5, -2.0), c(0.0, 3.0)],
        );
        let roots = poly_roots(&p).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &roots {
            assert!(p.eval(r.value).norm() <= 1e-10 * (1.0 + p.l1_norm()));
        }
    }

    #[test]
    fn seed_changes_results_only_marginally() {
        let p = ComplexPoly::from_roots(
            c(1.0, 0.0),
            &[c(0.4, 0.1), c(-0.3, -0.9), c(2.0, 0.0), c(-1.1, 1.3), c(0.05, -0.4)],
        );
        let a = poly_roots_with(&p, &RootSettings { seed: 1, ..Default::default() }).unwrap();
        let b = poly_roots_with(&p, &RootSettings { seed: 99, ..Default::default() }).unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            assert!((ra.value - rb.value).norm() < 1e-10);
        }
    }

    #[test]
    fn high_degree_random_coefficients() {
        let mut coeffs = Vec::new();
        for k in 0..13 {
            let t = k as f64;
            coeffs.push(c((0.37 * t).sin() + 0.2, (0.91 * t).cos() * 0.8));
        }
        let p = ComplexPoly::new(coeffs);
        let roots = poly_roots(&p).unwrap();
        let total: usize = roots.iter().map(|r| r.multiplicity).sum();
        assert_eq!(total, p.degree());
        for r in &roots {
            assert!(p.eval(r.value).norm() <= 1e-10 * (1.0 + p.l1_norm()));
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_c64(lo: f64, hi: f64) -> impl Strategy<Value = Complex64> {
            (lo..hi, lo..hi).prop_map(|(re, im)| Complex64::new(re, im))
        }

        fn arb_poly(max_deg: usize) -> impl Strategy<Value = ComplexPoly> {
            (1..=max_deg, proptest::collection::vec(arb_c64(-1.0, 1.0), max_deg))
                .prop_flat_map(|(deg, coeffs)| {
                    (Just(deg), Just(coeffs), 0.5..1.5f64, 0.0..std::f64::consts::TAU)
                })
                .prop_map(|(deg, coeffs, mag, arg)| {
                    let mut v: Vec<Complex64> = coeffs.into_iter().take(deg).collect();
                    v.push(Complex64::from_polar(mag, arg));
                    ComplexPoly::new(v)
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            // The roots of a product are the union of factor roots; every
            // product root must land near some factor root, and total
            // multiplicity must equal the product degree.
            #[test]
            fn product_roots_are_union_of_factor_roots(
                p in arb_poly(4),
                q in arb_poly(4),
            ) {
                let pq = p.mul(&q);
                let mut union = poly_roots(&p).unwrap();
                union.extend(poly_roots(&q).unwrap());
                let product_roots = poly_roots(&pq).unwrap();
                let scale = 1.0 + union.iter().map(|r| r.value.norm()).fold(0.0, f64::max);
                let total: usize = product_roots.iter().map(|r| r.multiplicity).sum();
                prop_assert_eq!(total, pq.degree());
                for r in &product_roots {
                    let nearest = union
                        .iter()
                        .map(|u| (u.value - r.value).norm())
                        .fold(f64::MAX, f64::min);
                    prop_assert!(
                        nearest <= 1e-6 * scale,
                        "product root {} is {} away from the factor union",
                        r.value,
                        nearest
                    );
                }
            }
        }
    }
}
