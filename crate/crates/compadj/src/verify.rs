//! Verification suites binding the adjoint computation to independent
//! oracles and frozen reference values.
//!
//! Each suite produces a machine-readable [`VerifyReport`]. A case passes
//! iff its measured error is at most its tolerance, so aggregates never
//! hide an individual failure; an evaluation error surfaces as an infinite
//! measured error. All randomness comes from a ChaCha stream seeded by the
//! configuration, making every report reproducible.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::adjoint::{adjoint_eval, uncorrected_adjoint_eval, AdjointEngine};
use crate::branch::{branch_solve, BranchSet};
use crate::catalog::{catalog, find, TestMap};
use crate::classify::{classify_map, MapClass};
use crate::closed_form::{
    lfm_adjoint_eval, monomial_adjoint_eval, quadratic_adjoint_eval,
    quadratic_fractional_adjoint_eval,
};
use crate::config::AdjointConfig;
use crate::error::Result;
use crate::hardy::{
    compose_series, negative_fourier_coeffs, sample_analytic, Analytic, KernelPoint,
    TruncatedSeries,
};
use crate::oracle::comp_op_matrix;
use crate::poly::ComplexPoly;
use crate::rational::RationalMap;

/// Names accepted by [`run_suite`], in the order [`run_all`] executes them.
pub const SUITE_NAMES: [&str; 6] =
    ["adjoint-identity", "kernel", "oracle", "closed-forms", "counterexamples", "negative-fourier"];

/// The operations a complete verification run must exercise at least once;
/// see the coverage test at the bottom of this module.
pub const ENGINE_OPS: [&str; 9] = [
    "classify_map",
    "branch_solve",
    "adjoint_eval",
    "adjoint_coeffs",
    "uncorrected_adjoint_eval",
    "lfm_adjoint_eval",
    "monomial_adjoint_eval",
    "quadratic_adjoint_eval",
    "quadratic_fractional_adjoint_eval",
];

/// One measured comparison. `pass` holds iff `error <= tolerance`; a case
/// whose computation failed outright carries an infinite error.
#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub label: String,
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// The outcome of one suite (or of one suite restricted to one map).
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<CaseRecord>,
    pub max_error: f64,
    pub passed: bool,
    pub ops_exercised: Vec<String>,
    pub maps_exercised: Vec<String>,
}

struct SuiteRun {
    suite: String,
    seed: u64,
    cases: Vec<CaseRecord>,
    ops: BTreeSet<String>,
    maps: BTreeSet<String>,
}

impl SuiteRun {
    fn new(suite: &str, seed: u64) -> Self {
        SuiteRun {
            suite: suite.to_string(),
            seed,
            cases: Vec::new(),
            ops: BTreeSet::new(),
            maps: BTreeSet::new(),
        }
    }

    fn op(&mut self, name: &str) {
        self.ops.insert(name.to_string());
    }

    fn map(&mut self, name: &str) {
        self.maps.insert(name.to_string());
    }

    fn case(&mut self, label: String, error: f64, tolerance: f64) {
        let pass = error <= tolerance;
        self.cases.push(CaseRecord { label, error, tolerance, pass });
    }

    fn finish(self) -> VerifyReport {
        let max_error = self.cases.iter().map(|c| c.error).fold(0.0, fold_max);
        let passed = self.cases.iter().all(|c| c.pass);
        VerifyReport {
            suite: self.suite,
            seed: self.seed,
            cases: self.cases,
            max_error,
            passed,
            ops_exercised: self.ops.into_iter().collect(),
            maps_exercised: self.maps.into_iter().collect(),
        }
    }
}

/// NaN-sticky maximum, so a poisoned measurement cannot hide behind a
/// smaller finite one.
fn fold_max(acc: f64, e: f64) -> f64 {
    if e.is_nan() || acc.is_nan() {
        f64::NAN
    } else {
        acc.max(e)
    }
}

fn deviation(got: Result<Complex64>, expect: Complex64) -> f64 {
    match got {
        Ok(v) => (v - expect).norm(),
        Err(_) => f64::INFINITY,
    }
}

fn unit_disk_sample(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let re = rng.gen_range(-1.0..=1.0);
        let im = rng.gen_range(-1.0..=1.0);
        if re * re + im * im <= 1.0 {
            return Complex64::new(re, im);
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> ComplexPoly {
    ComplexPoly::new((0..=max_deg).map(|_| unit_disk_sample(rng)).collect())
}

fn one() -> RationalMap {
    RationalMap::from_poly(ComplexPoly::one())
}

/// Extra (non-catalog) entry for the identity symbol, whose adjoint is the
/// identity operator.
fn identity_entry() -> TestMap {
    TestMap {
        name: "identity",
        map: RationalMap::identity(),
        expected_class: MapClass::Infinity,
        provenance: "identity symbol; C* is the identity operator",
    }
}

/// Extra (non-catalog) entry for a constant symbol, whose adjoint is the
/// rank-one operator f -> f(0) K_c.
fn constant_entry() -> TestMap {
    TestMap {
        name: "constant",
        map: RationalMap::constant(Complex64::new(0.3, -0.2)),
        expected_class: MapClass::Constant,
        provenance: "constant symbol; rank-one adjoint without branch machinery",
    }
}

fn is_boundary(entry: &TestMap) -> bool {
    entry.expected_class == MapClass::Boundary
}

/// Pairing tolerance: 1e-8 normally, loosened to 1e-6 for Boundary-class
/// symbols (whose correction pole sits on the unit circle, degrading
/// interior extraction), tightened to 1e-13 for the identity.
fn pairing_tolerance(entry: &TestMap) -> f64 {
    if entry.map == RationalMap::identity() {
        1e-13
    } else if is_boundary(entry) {
        1e-6
    } else {
        1e-8
    }
}

/// Checks <C_phi f, g> = <f, C*_phi g> for random polynomial pairs with
/// unit-disk coefficients. The left side composes and extracts
/// coefficients by circle sampling; the right side runs the corrected
/// branch-sum formula through `adjoint_coeffs`. The reported error is
/// |lhs - rhs| / (1 + ||f|| ||g||).
pub fn check_adjoint_identity(
    entry: &TestMap,
    trials: usize,
    max_deg: usize,
    cfg: &AdjointConfig,
) -> VerifyReport {
    let mut run = SuiteRun::new("adjoint-identity", cfg.seed);
    run.map(entry.name);
    run.op("classify_map");
    run.op("adjoint_coeffs");
    let tol = pairing_tolerance(entry);

    match classify_map(&entry.map, cfg) {
        Ok(cl) if cl.class == entry.expected_class => {
            run.case(format!("{}/classified as {:?}", entry.name, cl.class), 0.0, 0.0);
        }
        Ok(cl) => {
            run.case(
                format!(
                    "{}/classified as {:?}, expected {:?}",
                    entry.name, cl.class, entry.expected_class
                ),
                f64::INFINITY,
                0.0,
            );
        }
        Err(_) => {
            run.case(format!("{}/classification failed", entry.name), f64::INFINITY, 0.0);
        }
    }

    let engine = AdjointEngine::new(&entry.map, cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for t in 0..trials {
        let f = random_poly(&mut rng, max_deg);
        let g = random_poly(&mut rng, max_deg);
        let error = match &engine {
            Ok(engine) => pairing_error(engine, &entry.map, &f, &g, cfg),
            Err(_) => f64::INFINITY,
        };
        run.case(format!("{}/pair {:03}", entry.name, t), error, tol);
    }
    run.finish()
}

fn pairing_error(
    engine: &AdjointEngine,
    phi: &RationalMap,
    f: &ComplexPoly,
    g: &ComplexPoly,
    cfg: &AdjointConfig,
) -> f64 {
    let f_series = TruncatedSeries::from_poly(f, cfg.n_terms);
    let g_series = TruncatedSeries::from_poly(g, cfg.n_terms);
    let lhs = match compose_series(f, phi, cfg.n_terms, cfg.radius, cfg.samples) {
        Ok(series) => series.inner_product(&g_series),
        Err(_) => return f64::INFINITY,
    };
    let rhs = match engine.coeffs(&RationalMap::from_poly(g.clone())) {
        Ok(series) => f_series.inner_product(&series),
        Err(_) => return f64::INFINITY,
    };
    (lhs - rhs).norm() / (1.0 + f_series.norm() * g_series.norm())
}

/// Checks the reproducing-kernel relocation C*_phi K_w = K_phi(w) at
/// random w and z drawn from the disk of radius 0.9. Each case records the
/// worst error over the z draws for one w.
pub fn check_kernel_identity(
    entry: &TestMap,
    n_w: usize,
    n_z: usize,
    cfg: &AdjointConfig,
) -> VerifyReport {
    let mut run = SuiteRun::new("kernel", cfg.seed);
    run.map(entry.name);
    run.op("adjoint_eval");
    let engine = AdjointEngine::new(&entry.map, cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..n_w {
        let w = 0.9 * unit_disk_sample(&mut rng);
        let mut worst = 0.0f64;
        for _ in 0..n_z {
            let z = 0.9 * unit_disk_sample(&mut rng);
            worst = fold_max(worst, kernel_case_error(&engine, &entry.map, w, z));
        }
        run.case(
            format!("{}/w {:02} = {:.6}{:+.6}i, max over {} z", entry.name, i, w.re, w.im, n_z),
            worst,
            1e-8,
        );
    }
    run.finish()
}

fn kernel_case_error(
    engine: &Result<AdjointEngine>,
    phi: &RationalMap,
    w: Complex64,
    z: Complex64,
) -> f64 {
    let engine = match engine {
        Ok(e) => e,
        Err(_) => return f64::INFINITY,
    };
    let kernel = match KernelPoint::new(w) {
        Ok(k) => k.as_rational(),
        Err(_) => return f64::INFINITY,
    };
    let image = match phi.eval_finite(w) {
        Ok(v) => v,
        Err(_) => return f64::INFINITY,
    };
    let expect = (Complex64::new(1.0, 0.0) - image.conj() * z).inv();
    deviation(engine.eval(&kernel, z), expect)
}

/// Checks `adjoint_coeffs` against the truncated-matrix oracle on the
/// monomials g = z^j, j <= max_deg, comparing the first max_deg + 1
/// coefficients (the well-conditioned window of the truncation).
pub fn check_against_oracle(entry: &TestMap, max_deg: usize, cfg: &AdjointConfig) -> VerifyReport {
    assert!(
        max_deg * 4 <= cfg.n_terms,
        "the comparison window must stay in the first quarter of the truncation"
    );
    let mut run = SuiteRun::new("oracle", cfg.seed);
    run.map(entry.name);
    run.op("adjoint_coeffs");
    let engine = AdjointEngine::new(&entry.map, cfg);
    let matrix = comp_op_matrix(&entry.map, cfg.n_terms, cfg.radius, cfg.samples);
    for j in 0..=max_deg {
        let g = ComplexPoly::monomial(Complex64::new(1.0, 0.0), j);
        let error = match (&engine, &matrix) {
            (Ok(engine), Ok(matrix)) => {
                let via_oracle = matrix.adjoint_apply(&TruncatedSeries::from_poly(&g, cfg.n_terms));
                match engine.coeffs(&RationalMap::from_poly(g)) {
                    Ok(via_engine) => (0..=max_deg)
                        .map(|k| (via_oracle.coeff(k) - via_engine.coeff(k)).norm())
                        .fold(0.0, fold_max),
                    Err(_) => f64::INFINITY,
                }
            }
            _ => f64::INFINITY,
        };
        run.case(
            format!("{}/g = z^{}, first {} coefficients", entry.name, j, max_deg + 1),
            error,
            1e-7,
        );
    }
    run.finish()
}

fn closed_form_test_functions() -> Vec<(&'static str, RationalMap)> {
    vec![
        ("1", one()),
        (
            "1 + z/2 - z^3/4",
            RationalMap::from_poly(ComplexPoly::from_real(&[1.0, 0.5, 0.0, -0.25])),
        ),
        (
            "K_(0.4-0.2i)",
            KernelPoint::new(Complex64::new(0.4, -0.2))
                .expect("kernel point lies in the disk")
                .as_rational(),
        ),
    ]
}

/// Interior sample points with moduli in [0.1, 0.85], away from the origin
/// and the boundary.
fn interior_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|_| {
            let radius = rng.gen_range(0.1..=0.85);
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(radius, angle)
        })
        .collect()
}

/// Compares the branch-sum engine against every closed form: the
/// linear-fractional formula, the monomial root-relocation formula for
/// m = 2, 3, 4, the explicit quadratic branch data for both catalog
/// quadratics, and the quadratic-fractional reference; plus direct
/// branch-set comparisons against closed-form branch data.
pub fn check_closed_forms(cfg: &AdjointConfig) -> VerifyReport {
    let mut run = SuiteRun::new("closed-forms", cfg.seed);
    for op in [
        "adjoint_eval",
        "branch_solve",
        "lfm_adjoint_eval",
        "monomial_adjoint_eval",
        "quadratic_adjoint_eval",
        "quadratic_fractional_adjoint_eval",
    ] {
        run.op(op);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let points = interior_points(&mut rng, 50);
    let funcs = closed_form_test_functions();

    let mut entries = catalog();
    entries.push(TestMap {
        name: "monomial-4",
        map: RationalMap::from_poly(ComplexPoly::monomial(Complex64::new(1.0, 0.0), 4)),
        expected_class: MapClass::Infinity,
        provenance: "quartic power map, outside the catalog; exercises four branches",
    });

    for entry in &entries {
        run.map(entry.name);
        let engine = AdjointEngine::new(&entry.map, cfg);
        type Reference<'a> = Box<dyn Fn(&RationalMap, Complex64) -> Result<Complex64> + 'a>;
        let (reference, tol): (Reference<'_>, f64) = match entry.name {
            "lfm-exterior" | "lfm-interior" | "lfm-boundary" => {
                (Box::new(|f, z| lfm_adjoint_eval(&entry.map, f, z)), 1e-10)
            }
            "monomial-2" | "monomial-3" | "monomial-4" => {
                let m = entry.map.degree() as u32;
                (Box::new(move |f, z| monomial_adjoint_eval(m, f, z)), 1e-12)
            }
            "quadratic-symmetric" | "quadratic-complex" => {
                let a = entry.map.num().coeff(2);
                let b = entry.map.num().coeff(1);
                (Box::new(move |f, z| quadratic_adjoint_eval(a, b, f, z)), 1e-9)
            }
            "quadratic-fractional" => (Box::new(quadratic_fractional_adjoint_eval), 1e-6),
            other => unreachable!("no closed form for {other}"),
        };
        for (flabel, f) in &funcs {
            let mut worst = 0.0f64;
            for &z in &points {
                let err = match (&engine, reference(f, z)) {
                    (Ok(engine), Ok(expect)) => deviation(engine.eval(f, z), expect),
                    _ => f64::INFINITY,
                };
                worst = fold_max(worst, err);
            }
            run.case(
                format!("{}/f = {}, max over {} points", entry.name, flabel, points.len()),
                worst,
                tol,
            );
        }
    }

    // Branch data directly against closed forms: the squaring map has the
    // two square roots with weights 1/2; the symmetric quadratic has the
    // explicit sigma/psi pair from the quadratic formula.
    let z0 = Complex64::new(0.37, 0.22);
    let squaring = find("monomial-2").expect("catalog entry");
    let root = z0.sqrt();
    let half = Complex64::new(0.5, 0.0);
    let expect = [(root, half), (-root, half)];
    let error = match branch_solve(&squaring.map, z0, cfg) {
        Ok(set) => branch_set_error(&set, &expect),
        Err(_) => f64::INFINITY,
    };
    run.case("monomial-2/branch set at z0 is the square-root pair".to_string(), error, 1e-12);

    let quad = find("quadratic-symmetric").expect("catalog entry");
    let (ab, bb) = (quad.map.num().coeff(2).conj(), quad.map.num().coeff(1).conj());
    let disc = (bb * bb * z0 * z0 + 4.0 * ab * z0).sqrt();
    let expect: Vec<(Complex64, Complex64)> = [1.0, -1.0]
        .iter()
        .map(|&sign| {
            let sigma = (bb * z0 + sign * disc) / 2.0;
            (sigma, (bb * sigma + ab) / (bb * sigma + 2.0 * ab))
        })
        .collect();
    let error = match branch_solve(&quad.map, z0, cfg) {
        Ok(set) => branch_set_error(&set, &expect),
        Err(_) => f64::INFINITY,
    };
    run.case(
        "quadratic-symmetric/branch set at z0 matches the quadratic formula".to_string(),
        error,
        1e-10,
    );

    run.finish()
}

/// Worst mismatch between a computed branch set and closed-form branch
/// data, matching each expected branch to its nearest computed location.
fn branch_set_error(set: &BranchSet, expect: &[(Complex64, Complex64)]) -> f64 {
    if set.branches.len() != expect.len() || set.degree_deficit != 0 {
        return f64::INFINITY;
    }
    let mut worst = 0.0f64;
    for &(sigma, psi) in expect {
        let nearest = set
            .branches
            .iter()
            .min_by(|a, b| {
                let da = (a.location - sigma).norm();
                let db = (b.location - sigma).norm();
                da.partial_cmp(&db).expect("branch distances are finite")
            })
            .expect("branch set is nonempty");
        worst = fold_max(worst, (nearest.location - sigma).norm());
        worst = fold_max(worst, (nearest.weight - psi).norm());
    }
    worst
}

/// Reproduces the frozen counterexamples to the uncorrected formula: the
/// branch sum alone evaluates to -1 instead of 1 for the exterior symbol
/// at z = 1/4 (deviation exactly 2) and to -1/7 for the interior symbol,
/// while the corrected formula restores the constant; and for a linear
/// polynomial symbol, where the correction vanishes, uncorrected,
/// corrected, and linear-fractional closed form all agree.
pub fn demo_counterexamples(cfg: &AdjointConfig) -> VerifyReport {
    let mut run = SuiteRun::new("counterexamples", cfg.seed);
    for op in ["uncorrected_adjoint_eval", "adjoint_eval", "lfm_adjoint_eval"] {
        run.op(op);
    }
    let constant_one = one();
    let z = Complex64::new(0.25, 0.0);
    let truth = Complex64::new(1.0, 0.0);

    let exterior = find("lfm-exterior").expect("catalog entry");
    run.map(exterior.name);
    let u = uncorrected_adjoint_eval(&exterior.map, &constant_one, z, cfg).ok();
    run.case(
        "lfm-exterior/uncorrected value at z = 1/4 equals -1".to_string(),
        match u {
            Some(v) => (v - Complex64::new(-1.0, 0.0)).norm(),
            None => f64::INFINITY,
        },
        1e-10,
    );
    run.case(
        "lfm-exterior/uncorrected deviation from the true value 1 equals 2".to_string(),
        match u {
            Some(v) => ((v - truth).norm() - 2.0).abs(),
            None => f64::INFINITY,
        },
        1e-10,
    );
    run.case(
        "lfm-exterior/corrected evaluation restores the constant".to_string(),
        deviation(adjoint_eval(&exterior.map, &constant_one, z, cfg), truth),
        1e-10,
    );

    let interior = find("lfm-interior").expect("catalog entry");
    run.map(interior.name);
    let u = uncorrected_adjoint_eval(&interior.map, &constant_one, z, cfg).ok();
    run.case(
        "lfm-interior/uncorrected value at z = 1/4 equals -1/7".to_string(),
        match u {
            Some(v) => (v - Complex64::new(-1.0 / 7.0, 0.0)).norm(),
            None => f64::INFINITY,
        },
        1e-10,
    );
    run.case(
        "lfm-interior/uncorrected deviation from the true value 1 equals 8/7".to_string(),
        match u {
            Some(v) => ((v - truth).norm() - 8.0 / 7.0).abs(),
            None => f64::INFINITY,
        },
        1e-10,
    );
    run.case(
        "lfm-interior/corrected evaluation restores the constant".to_string(),
        deviation(adjoint_eval(&interior.map, &constant_one, z, cfg), truth),
        1e-10,
    );

    // For a linear polynomial symbol the correction term vanishes, so the
    // uncorrected formula is already right; the linear-fractional closed
    // form must agree as well.
    let linear = RationalMap::new(ComplexPoly::from_real(&[0.25, 0.5]), ComplexPoly::one())
        .expect("linear symbol is well formed");
    run.map("linear");
    let probes = [
        Complex64::new(0.3, 0.1),
        Complex64::new(-0.2, 0.4),
        Complex64::new(0.5, -0.3),
        Complex64::new(-0.45, -0.1),
        Complex64::new(0.1, 0.6),
    ];
    let f = RationalMap::from_poly(ComplexPoly::from_real(&[1.0, -0.5, 0.0, 2.0]));
    let mut worst_pair = 0.0f64;
    let mut worst_lfm = 0.0f64;
    for &zp in &probes {
        let corrected = adjoint_eval(&linear, &f, zp, cfg);
        let plain = uncorrected_adjoint_eval(&linear, &f, zp, cfg);
        let closed = lfm_adjoint_eval(&linear, &f, zp);
        worst_pair = fold_max(
            worst_pair,
            match (&corrected, plain) {
                (Ok(a), Ok(b)) => (a - b).norm(),
                _ => f64::INFINITY,
            },
        );
        worst_lfm = fold_max(
            worst_lfm,
            match (corrected, closed) {
                (Ok(a), Ok(b)) => (a - b).norm(),
                _ => f64::INFINITY,
            },
        );
    }
    run.case("linear/uncorrected equals corrected for z/2 + 1/4".to_string(), worst_pair, 1e-10);
    run.case(
        "linear/linear-fractional closed form agrees for z/2 + 1/4".to_string(),
        worst_lfm,
        1e-10,
    );

    run.finish()
}

/// The raw branch sum sampled on the unit circle, for Fourier analysis of
/// its negative-frequency content.
struct UncorrectedOnCircle<'a> {
    engine: &'a AdjointEngine,
    g: &'a RationalMap,
}

impl Analytic for UncorrectedOnCircle<'_> {
    fn eval_at(&self, z: Complex64) -> Result<Complex64> {
        self.engine.uncorrected_eval(self.g, z)
    }
}

/// Checks the negative-Fourier law of the raw branch sum on the unit
/// circle: for an Exterior symbol the (-n)th coefficient equals
/// g(0)/conj(phi(inf))^n (exactly what the correction term cancels), and
/// for Interior and polynomial symbols it vanishes. Boundary symbols are
/// excluded (their correction pole sits on the sampling circle).
pub fn check_negative_fourier_suite(cfg: &AdjointConfig) -> VerifyReport {
    let mut run = SuiteRun::new("negative-fourier", cfg.seed);
    run.op("classify_map");
    run.op("uncorrected_adjoint_eval");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let test_functions = vec![
        ("g = 1".to_string(), one()),
        ("g = random polynomial".to_string(), RationalMap::from_poly(random_poly(&mut rng, 4))),
    ];
    let n_max = 10;
    let m = 1024;

    for entry in catalog() {
        let class = match classify_map(&entry.map, cfg) {
            Ok(cl) => cl,
            Err(_) => {
                run.map(entry.name);
                run.case(format!("{}/classification failed", entry.name), f64::INFINITY, 0.0);
                continue;
            }
        };
        if class.class == MapClass::Boundary {
            continue;
        }
        run.map(entry.name);
        let engine = AdjointEngine::new(&entry.map, cfg);
        for (glabel, g) in &test_functions {
            let error = match &engine {
                Ok(engine) => {
                    negative_fourier_error(engine, g, &class.value_at_infinity.finite(), n_max, m)
                }
                Err(_) => f64::INFINITY,
            };
            run.case(format!("{}/{}, c_(-n) for n <= {}", entry.name, glabel, n_max), error, 1e-7);
        }
    }
    run.finish()
}

fn negative_fourier_error(
    engine: &AdjointEngine,
    g: &RationalMap,
    value_at_infinity: &Option<Complex64>,
    n_max: usize,
    m: usize,
) -> f64 {
    let sampler = UncorrectedOnCircle { engine, g };
    let samples = match sample_analytic(&sampler, 1.0, m) {
        Ok(s) => s,
        Err(_) => return f64::INFINITY,
    };
    let neg = negative_fourier_coeffs(&samples, n_max);
    let g0 = match g.eval_finite(Complex64::new(0.0, 0.0)) {
        Ok(v) => v,
        Err(_) => return f64::INFINITY,
    };
    let mut worst = 0.0f64;
    for n in 1..=n_max {
        let expect = match value_at_infinity {
            Some(v) if v.norm() > 1.0 => g0 / v.conj().powu(n as u32),
            _ => Complex64::new(0.0, 0.0),
        };
        worst = fold_max(worst, (neg[n - 1] - expect).norm());
    }
    worst
}

fn merged(suite: &str, seed: u64, parts: Vec<VerifyReport>) -> VerifyReport {
    let mut cases = Vec::new();
    let mut ops = BTreeSet::new();
    let mut maps = BTreeSet::new();
    for part in parts {
        cases.extend(part.cases);
        ops.extend(part.ops_exercised);
        maps.extend(part.maps_exercised);
    }
    let max_error = cases.iter().map(|c| c.error).fold(0.0, fold_max);
    let passed = cases.iter().all(|c| c.pass);
    VerifyReport {
        suite: suite.to_string(),
        seed,
        cases,
        max_error,
        passed,
        ops_exercised: ops.into_iter().collect(),
        maps_exercised: maps.into_iter().collect(),
    }
}

/// Runs one named suite over the whole catalog (plus the identity and
/// constant extras where meaningful). Returns None for an unknown name.
pub fn run_suite(name: &str, cfg: &AdjointConfig) -> Option<VerifyReport> {
    run_suite_sized(name, cfg, 100)
}

fn run_suite_sized(name: &str, cfg: &AdjointConfig, trials: usize) -> Option<VerifyReport> {
    match name {
        "adjoint-identity" => {
            let mut parts: Vec<VerifyReport> = catalog()
                .iter()
                .map(|entry| check_adjoint_identity(entry, trials, 8, cfg))
                .collect();
            parts.push(check_adjoint_identity(&identity_entry(), trials, 8, cfg));
            Some(merged("adjoint-identity", cfg.seed, parts))
        }
        "kernel" => {
            let mut parts: Vec<VerifyReport> =
                catalog().iter().map(|entry| check_kernel_identity(entry, 20, 20, cfg)).collect();
            parts.push(check_kernel_identity(&constant_entry(), 20, 20, cfg));
            Some(merged("kernel", cfg.seed, parts))
        }
        "oracle" => {
            let parts: Vec<VerifyReport> =
                catalog().iter().map(|entry| check_against_oracle(entry, 16, cfg)).collect();
            Some(merged("oracle", cfg.seed, parts))
        }
        "closed-forms" => Some(check_closed_forms(cfg)),
        "counterexamples" => Some(demo_counterexamples(cfg)),
        "negative-fourier" => Some(check_negative_fourier_suite(cfg)),
        _ => None,
    }
}

/// Runs every suite in [`SUITE_NAMES`] order.
pub fn run_all(cfg: &AdjointConfig) -> Vec<VerifyReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, cfg).expect("every listed suite is known"))
        .collect()
}
