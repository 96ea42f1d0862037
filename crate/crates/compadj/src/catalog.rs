//! Built-in symbol catalog.
//!
//! Eight rational disk self-maps covering every classification the adjoint
//! formula distinguishes: the correction-term pole inside the disk
//! (exterior), outside (interior), on the circle (boundary), and absent
//! (polynomial symbols). The two quadratic polynomials and the
//! quadratic-fractional map exercise genuinely multivalued branch sets.

use num_complex::Complex64;

use crate::classify::MapClass;
use crate::closed_form::quadratic_fractional_map;
use crate::poly::ComplexPoly;
use crate::rational::RationalMap;

#[derive(Debug, Clone)]
pub struct TestMap {
    pub name: &'static str,
    pub map: RationalMap,
    pub expected_class: MapClass,
    /// What the map contributes to the test set, in mathematical terms.
    pub provenance: &'static str,
}

pub fn catalog() -> Vec<TestMap> {
    let c = Complex64::new;
    let real = |coeffs: &[f64]| ComplexPoly::from_real(coeffs);
    let rational = |num: &[f64], denom: &[f64]| {
        RationalMap::new(real(num), real(denom)).expect("catalog maps are well formed")
    };
    vec![
        TestMap {
            name: "lfm-exterior",
            map: rational(&[0.0, 2.0], &[4.0, 1.0]),
            expected_class: MapClass::Exterior,
            provenance: "linear fractional, phi(inf) = 2; correction pole at z = 1/2 \
                         inside the disk, the sharpest counterexample to the \
                         uncorrected formula",
        },
        TestMap {
            name: "lfm-interior",
            map: rational(&[0.0, 1.0], &[4.0, 2.0]),
            expected_class: MapClass::Interior,
            provenance: "linear fractional, phi(inf) = 1/2; correction analytic on \
                         the closed disk yet still nonzero",
        },
        TestMap {
            name: "lfm-boundary",
            map: rational(&[0.0, 1.0], &[4.0, 1.0]),
            expected_class: MapClass::Boundary,
            provenance: "linear fractional, phi(inf) = 1; correction pole sits on \
                         the unit circle",
        },
        TestMap {
            name: "monomial-2",
            map: RationalMap::from_poly(ComplexPoly::monomial(c(1.0, 0.0), 2)),
            expected_class: MapClass::Infinity,
            provenance: "squaring map; branch set is the two square roots with \
                         equal weights 1/2",
        },
        TestMap {
            name: "monomial-3",
            map: RationalMap::from_poly(ComplexPoly::monomial(c(1.0, 0.0), 3)),
            expected_class: MapClass::Infinity,
            provenance: "cubing map; three branches with equal weights 1/3",
        },
        TestMap {
            name: "quadratic-symmetric",
            map: RationalMap::from_poly(real(&[0.0, 0.5, 0.5])),
            expected_class: MapClass::Infinity,
            provenance: "real quadratic polynomial (z^2 + z)/2; two asymmetric \
                         branches, no correction term",
        },
        TestMap {
            name: "quadratic-complex",
            map: RationalMap::from_poly(ComplexPoly::new(vec![
                c(0.0, 0.0),
                c(1.0 / 3.0, 0.2),
                c(0.25, 0.0),
            ])),
            expected_class: MapClass::Infinity,
            provenance: "quadratic polynomial with complex coefficients; breaks \
                         accidental real-axis symmetries",
        },
        TestMap {
            name: "quadratic-fractional",
            map: quadratic_fractional_map(),
            expected_class: MapClass::Boundary,
            provenance: "(z^2-6z+9)/(z^2-10z+13): degree-two numerator and \
                         denominator, boundary class, two branches plus a \
                         boundary correction pole",
        },
    ]
}

/// Looks a catalog map up by name.
pub fn find(name: &str) -> Option<TestMap> {
    catalog().into_iter().find(|m| m.name == name)
}
