//! Symbol classification by the value at infinity.
//!
//! The correction term in the adjoint formula is f(0)/(1 - conj(phi(inf)) z),
//! so the location of phi(inf) relative to the unit circle governs where
//! that term has its pole: inside the disk spectrum for exterior values, on
//! the circle for boundary values, absent entirely when phi(inf) = inf.

use serde::Serialize;

use crate::config::AdjointConfig;
use crate::error::{Error, Result};
use crate::rational::{ExtendedValue, RationalMap, SelfMapReport};

/// Tolerance around the unit circle for calling phi(inf) a boundary value.
pub const BOUNDARY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MapClass {
    /// |phi(inf)| < 1.
    Interior,
    /// |phi(inf)| = 1 within BOUNDARY_TOL.
    Boundary,
    /// |phi(inf)| > 1.
    Exterior,
    /// phi(inf) = inf (polynomial-dominated symbol).
    Infinity,
    /// phi is a constant map.
    Constant,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub class: MapClass,
    pub value_at_infinity: ExtendedValue,
    pub self_map: SelfMapReport,
}

/// Validates that phi maps the disk into itself, then classifies it by its
/// value at infinity. Non-self-maps are rejected.
pub fn classify_map(phi: &RationalMap, cfg: &AdjointConfig) -> Result<Classification> {
    cfg.validate();
    let self_map = phi.is_self_map_of_disk(256.max(cfg.samples), 1e-9)?;
    if !self_map.is_self_map {
        return Err(Error::NotSelfMap { max_modulus: self_map.max_boundary_modulus });
    }
    let value_at_infinity = phi.map_at_infinity();
    let class = if phi.is_constant() {
        MapClass::Constant
    } else {
        match value_at_infinity {
            ExtendedValue::Infinity => MapClass::Infinity,
            ExtendedValue::Finite(v) => {
                let modulus = v.norm();
                if (modulus - 1.0).abs() <= BOUNDARY_TOL {
                    MapClass::Boundary
                } else if modulus < 1.0 {
                    MapClass::Interior
                } else {
                    MapClass::Exterior
                }
            }
        }
    };
    Ok(Classification { class, value_at_infinity, self_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ComplexPoly;
    use num_complex::Complex64;

    fn rmap(num: &[f64], denom: &[f64]) -> RationalMap {
        RationalMap::new(ComplexPoly::from_real(num), ComplexPoly::from_real(denom)).unwrap()
    }

    #[test]
    fn catalog_style_maps_classify_by_value_at_infinity() {
        let cfg = AdjointConfig::default();
        let cases: [(&[f64], &[f64], MapClass); 5] = [
            (&[0.0, 2.0], &[4.0, 1.0], MapClass::Exterior),
            (&[0.0, 1.0], &[4.0, 2.0], MapClass::Interior),
            (&[0.0, 1.0], &[4.0, 1.0], MapClass::Boundary),
            (&[0.0, 0.5, 0.5], &[1.0], MapClass::Infinity),
            (&[0.25], &[1.0], MapClass::Constant),
        ];
        for (num, denom, expect) in cases {
            let got = classify_map(&rmap(num, denom), &cfg).unwrap();
            assert_eq!(got.class, expect, "map {num:?}/{denom:?}");
        }
    }

    #[test]
    fn non_self_map_is_rejected() {
        let cfg = AdjointConfig::default();
        let doubling = rmap(&[0.0, 2.0], &[1.0]);
        assert!(matches!(classify_map(&doubling, &cfg), Err(Error::NotSelfMap { .. })));
    }

    #[test]
    fn quadratic_fractional_boundary_map() {
        let cfg = AdjointConfig::default();
        let phi = rmap(&[9.0, -6.0, 1.0], &[13.0, -10.0, 1.0]);
        let got = classify_map(&phi, &cfg).unwrap();
        assert_eq!(got.class, MapClass::Boundary);
        let v = got.value_at_infinity.finite().unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    }
}
