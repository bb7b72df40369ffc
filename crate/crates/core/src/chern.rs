//! Total Chern class of the complexified isotropy representation, truncated
//! at polynomial degree 4, and the Pontryagin classes extracted from it.

use std::fmt;

use crate::groups::{isotropy_data, GroupSpec, Weight};
use crate::{QPoly, q};

/// Truncated total Chern class ∏(1 + w) over a weight multiset, in the
/// pre-relation ring. Cohomological degree of component k is 2k.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernClass {
    pub arity: usize,
    pub truncated_total: QPoly,
}

impl ChernClass {
    /// c_k as a homogeneous polynomial (polynomial degree k).
    pub fn component(&self, k: u32) -> QPoly {
        self.truncated_total.graded_component(k)
    }
}

/// ∏ over the weights of (1 + w), accumulated left to right with truncated
/// multiplication. Zero weights contribute the factor 1. With a
/// negation-closed multiset this equals ∏(1 − w), so the sign convention of
/// the transgression is immaterial.
pub fn total_chern(weights: &[Weight], arity: usize, max_deg: u32) -> ChernClass {
    let mut acc = QPoly::one(arity);
    for w in weights {
        assert_eq!(w.arity(), arity, "weight arity mismatch");
        let factor = QPoly::one(arity).add(&w.linear_form());
        acc = acc.mul_truncated(&factor, max_deg);
    }
    ChernClass { arity, truncated_total: acc }
}

/// p₁ = −c₂ and p₂ = c₄ of the complexified isotropy representation, with
/// the ring relations substituted (canonical reduced form).
#[derive(Debug, Clone, PartialEq)]
pub struct PontryaginPair {
    pub p1: QPoly,
    pub p2: QPoly,
}

/// Raised for complex groups, which classify by the complex-group rule and
/// have no isotropy Chern data here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexGroupError(pub GroupSpec);

impl fmt::Display for ComplexGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is a complex group: use the complex short-circuit instead of Chern data",
            self.0
        )
    }
}

impl std::error::Error for ComplexGroupError {}

pub fn pontryagin_classes(spec: GroupSpec) -> Result<PontryaginPair, ComplexGroupError> {
    if spec.is_complex() {
        return Err(ComplexGroupError(spec));
    }
    let data = isotropy_data(spec);
    Ok(pontryagin_from_data(&data))
}

/// Same as [`pontryagin_classes`] but reusing already-built isotropy data.
pub fn pontryagin_from_data(data: &crate::groups::IsotropyData) -> PontryaginPair {
    let chern = total_chern(&data.weights, data.arity(), 4);
    PontryaginPair {
        p1: data.reduce(&chern.component(2).neg()),
        p2: data.reduce(&chern.component(4)),
    }
}

/// ½ Σ w² over the reduced weights: an independent route to p₁, used as an
/// invariant check against the Chern-product route.
pub fn half_sum_of_weight_squares(data: &crate::groups::IsotropyData) -> QPoly {
    let arity = data.reduced_arity();
    let mut acc = QPoly::zero(arity);
    for w in data.reduced_weights() {
        let f = w.linear_form();
        acc = acc.add(&f.mul(&f));
    }
    acc.scale(&crate::qr(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{catalog, CatalogBounds};
    use crate::poly::{render, Monomial};

    #[test]
    fn empty_weight_multiset_gives_one() {
        let c = total_chern(&[], 2, 4);
        assert_eq!(c.truncated_total, QPoly::one(2));
    }

    #[test]
    fn g2_pontryagin_p1() {
        let p = pontryagin_classes(GroupSpec::G2_2).unwrap();
        let want = QPoly::from_terms(2, [(Monomial(vec![2, 0]), q(20)), (Monomial(vec![0, 2]), q(4))]);
        assert_eq!(p.p1, want);
        assert_eq!(render(&p.p1, &["y1", "y2"]), "20*y1^2 + 4*y2^2");
    }

    #[test]
    fn su11_pre_relation_total_chern() {
        let data = isotropy_data(GroupSpec::SuPq(1, 1));
        let c = total_chern(&data.weights, 2, 4);
        // 1 − (y1 − z1)^2
        let y = QPoly::variable(2, 0, q(1));
        let z = QPoly::variable(2, 1, q(1));
        let w = y.sub(&z);
        assert_eq!(c.truncated_total, QPoly::one(2).sub(&w.mul(&w)));
    }

    #[test]
    fn complex_groups_are_refused() {
        let spec = GroupSpec::Complex(crate::groups::ComplexFamily::SlC(3));
        assert!(pontryagin_classes(spec).is_err());
    }

    #[test]
    fn odd_components_vanish_and_p1_is_half_weight_square_sum() {
        for spec in catalog(CatalogBounds { max_pq: 6, max_n: 4 }) {
            if spec.is_complex() {
                continue;
            }
            let data = isotropy_data(spec);
            let chern = total_chern(&data.weights, data.arity(), 4);
            assert_eq!(chern.component(0), QPoly::one(data.arity()), "c0 for {spec:?}");
            for k in [1, 3] {
                assert!(
                    data.reduce(&chern.component(k)).is_zero(),
                    "c{k} should vanish for {spec:?}"
                );
            }
            let pair = pontryagin_from_data(&data);
            assert_eq!(pair.p1, half_sum_of_weight_squares(&data), "p1 route for {spec:?}");
        }
    }

    #[test]
    fn symmetries_fix_p1_p2() {
        for spec in catalog(CatalogBounds { max_pq: 6, max_n: 4 }) {
            if spec.is_complex() {
                continue;
            }
            let data = isotropy_data(spec);
            let chern = total_chern(&data.weights, data.arity(), 4);
            let (c2, c4) = (chern.component(2), chern.component(4));
            for sym in &data.symmetries {
                assert_eq!(data.reduce(&sym.apply_poly(&c2)), data.reduce(&c2), "{spec:?}");
                assert_eq!(data.reduce(&sym.apply_poly(&c4)), data.reduce(&c4), "{spec:?}");
            }
        }
    }
}
