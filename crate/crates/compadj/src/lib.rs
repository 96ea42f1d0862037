//! Adjoints of composition operators with rational symbol on the Hardy
//! space H^2.
//!
//! For an analytic self-map phi of the unit disk, the composition operator
//! C_phi sends f to f(phi(z)). When phi is rational, the adjoint C*_phi
//! acts by a finite sum over the branches of a companion multivalued map
//! plus an explicit rational correction term. This crate computes that
//! action numerically and cross-checks it against independent oracles:
//! truncated-matrix adjoints, the reproducing-kernel identity, and closed
//! forms for special families of symbols.
//!
//! Layering, bottom up:
//!
//! - [`poly`], [`roots`], [`rational`]: complex polynomials, a
//!   simultaneous-iteration root finder with multiplicity clustering, and
//!   canonical rational maps with the tilde transform.
//! - [`hardy`], [`oracle`]: truncated power series, boundary sampling with
//!   FFT coefficient extraction, and the truncated composition matrix.
//! - [`config`], [`classify`], [`branch`], [`adjoint`], [`closed_form`]:
//!   the branch solver and the corrected adjoint formula, with closed-form
//!   references for special symbol families.
//! - [`mod@catalog`], [`verify`]: the built-in test maps and the
//!   verification suites.
//! - [`parse`]: the expression grammar shared by the command-line front end.

pub mod adjoint;
pub mod branch;
pub mod catalog;
pub mod classify;
pub mod closed_form;
pub mod config;
pub mod error;
pub mod hardy;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod verify;

pub use adjoint::{
    adjoint_coeffs, adjoint_eval, check_test_function, uncorrected_adjoint_eval, AdjointEngine,
};
pub use branch::{branch_solve, Branch, BranchContext, BranchSet};
pub use catalog::{catalog, find, TestMap};
pub use classify::{classify_map, Classification, MapClass};
pub use closed_form::{
    lfm_adjoint_eval, monomial_adjoint_eval, quadratic_adjoint_eval,
    quadratic_fractional_adjoint_eval, quadratic_fractional_map,
};
pub use config::AdjointConfig;
pub use error::{Error, Result};
pub use hardy::{
    compose_series, kernel_at, negative_fourier_coeffs, riesz_project, sample_analytic,
    series_from_samples, Analytic, BoundarySamples, KernelPoint, TruncatedSeries,
};
pub use oracle::{comp_op_matrix, oracle_adjoint_apply, OperatorMatrix};
pub use parse::{format_map, parse_complex, parse_map};
pub use poly::ComplexPoly;
pub use rational::{ExtendedValue, RationalMap, SelfMapReport};
pub use roots::{poly_roots, poly_roots_with, PolyRoot, RootSettings};
pub use verify::{
    check_adjoint_identity, check_against_oracle, check_closed_forms, check_kernel_identity,
    check_negative_fourier_suite, demo_counterexamples, run_all, run_suite, CaseRecord,
    VerifyReport, ENGINE_OPS, SUITE_NAMES,
};
