//! The decision procedure: p_i(Γ\G/K) ≠ 0 iff p_i(ι) is outside the
//! complexification-kernel ideal, with the complex-group short-circuit and
//! the componentwise product rule.
//!
//! Verdicts are always computed algebraically; the published classification
//! list is used only as a cross-check column, never as a code path.

use serde::Serialize;

use crate::chern::pontryagin_from_data;
use crate::groups::{isotropy_data, GroupSpec};
use crate::ideal::{is_in_ideal, MembershipProblem, MembershipResult};
use crate::QPoly;

pub use crate::groups::CatalogBounds;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Route {
    ComplexRule,
    IdealTest,
}

/// Verdict for one group.
#[derive(Debug, Clone)]
pub struct VanishingReport {
    pub spec: GroupSpec,
    pub dim_m: u32,
    /// p₁ and p₂ of the isotropy representation in the post-relation ring;
    /// `None` on the complex route, where the pullback vanishes identically.
    pub p1_poly: Option<QPoly>,
    pub p2_poly: Option<QPoly>,
    pub p1_vanishes: bool,
    pub p2_vanishes: bool,
    pub in_theorem_1_1_list: bool,
    pub route: Route,
    /// Membership runs for (p₁, p₂) on the ideal-test route.
    pub certificates: Option<(MembershipResult, MembershipResult)>,
}

impl VanishingReport {
    pub fn all_vanish(&self) -> bool {
        self.p1_vanishes && self.p2_vanishes
    }

    /// The algebraic verdict agrees with the published classification.
    pub fn agrees_with_theorem(&self) -> bool {
        self.all_vanish() == self.in_theorem_1_1_list
    }
}

pub fn classify(spec: GroupSpec) -> VanishingReport {
    if spec.is_complex() {
        return VanishingReport {
            spec,
            dim_m: spec.dim_symmetric_space(),
            p1_poly: None,
            p2_poly: None,
            p1_vanishes: true,
            p2_vanishes: true,
            in_theorem_1_1_list: spec.theorem_1_1_member(),
            route: Route::ComplexRule,
            certificates: None,
        };
    }
    let data = isotropy_data(spec);
    let pair = pontryagin_from_data(&data);
    let gens = data.reduced_kernel_gens();
    let m1 = is_in_ideal(&MembershipProblem {
        generators: gens.clone(),
        target: pair.p1.clone(),
        degree: 2,
    });
    let m2 = is_in_ideal(&MembershipProblem {
        generators: gens,
        target: pair.p2.clone(),
        degree: 4,
    });
    VanishingReport {
        spec,
        dim_m: spec.dim_symmetric_space(),
        p1_vanishes: m1.in_ideal,
        p2_vanishes: m2.in_ideal,
        p1_poly: Some(pair.p1),
        p2_poly: Some(pair.p2),
        in_theorem_1_1_list: spec.theorem_1_1_member(),
        route: Route::IdealTest,
        certificates: Some((m1, m2)),
    }
}

/// Componentwise rule for a semisimple product: all Pontryagin classes of
/// Γ\G/K vanish iff they vanish for every factor.
#[derive(Debug, Clone)]
pub struct ProductReport {
    pub factors: Vec<VanishingReport>,
    pub all_vanish: bool,
}

pub fn classify_product(specs: &[GroupSpec]) -> Result<ProductReport, EmptyProduct> {
    if specs.is_empty() {
        return Err(EmptyProduct);
    }
    let factors: Vec<VanishingReport> = specs.iter().map(|s| classify(*s)).collect();
    let all_vanish = factors.iter().all(VanishingReport::all_vanish);
    Ok(ProductReport { factors, all_vanish })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmptyProduct;

impl std::fmt::Display for EmptyProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "a product needs at least one factor")
    }
}

impl std::error::Error for EmptyProduct {}

/// Classify every catalog entry within the bounds, in catalog order.
pub fn theorem_table(bounds: CatalogBounds) -> Vec<VanishingReport> {
    crate::groups::catalog(bounds).into_iter().map(classify).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::ComplexFamily;

    #[test]
    fn headline_verdicts() {
        let cases = [
            (GroupSpec::SoPq(5, 3), false, true),
            (GroupSpec::SoPq(3, 3), true, true),
            (GroupSpec::E7_7, true, false),
            (GroupSpec::SlR(5), true, true),
            (GroupSpec::E6M26, true, true),
            (GroupSpec::SoStar(4), false, false),
        ];
        for (spec, p1v, p2v) in cases {
            let r = classify(spec);
            assert_eq!(r.p1_vanishes, p1v, "p1 for {spec:?}");
            assert_eq!(r.p2_vanishes, p2v, "p2 for {spec:?}");
        }
    }

    #[test]
    fn complex_groups_take_the_short_circuit() {
        let r = classify(GroupSpec::Complex(ComplexFamily::SlC(3)));
        assert_eq!(r.route, Route::ComplexRule);
        assert!(r.all_vanish());
        assert!(r.in_theorem_1_1_list);
    }

    #[test]
    fn product_rule() {
        let ok = classify_product(&[GroupSpec::SlR(3), GroupSpec::E6M26]).unwrap();
        assert!(ok.all_vanish);
        let bad = classify_product(&[GroupSpec::SlR(3), GroupSpec::G2_2]).unwrap();
        assert!(!bad.all_vanish);
        let e8 = classify_product(&[GroupSpec::E8_8]).unwrap();
        assert!(!e8.all_vanish);
        assert!(classify_product(&[]).is_err());
    }

    #[test]
    fn isogenous_pairs_agree() {
        let su11 = classify(GroupSpec::SuPq(1, 1));
        let so21 = classify(GroupSpec::SoPq(2, 1));
        assert!(su11.all_vanish() && so21.all_vanish());
        let sp11 = classify(GroupSpec::SpPq(1, 1));
        let so41 = classify(GroupSpec::SoPq(4, 1));
        assert_eq!(sp11.all_vanish(), so41.all_vanish());
        assert!(sp11.all_vanish());
    }

    #[test]
    fn scaling_a_generator_changes_no_verdict() {
        use crate::qr;
        let data = isotropy_data(GroupSpec::F4M20);
        let pair = pontryagin_from_data(&data);
        let gens = data.reduced_kernel_gens();
        let scaled: Vec<QPoly> = gens.iter().map(|g| g.scale(&qr(-7, 3))).collect();
        for (target, d) in [(pair.p1.clone(), 2), (pair.p2.clone(), 4)] {
            let a = is_in_ideal(&MembershipProblem {
                generators: gens.clone(),
                target: target.clone(),
                degree: d,
            });
            let b = is_in_ideal(&MembershipProblem { generators: scaled.clone(), target, degree: d });
            assert_eq!(a.in_ideal, b.in_ideal);
        }
    }
}
