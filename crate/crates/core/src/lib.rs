//! Exact symbolic computation of rational Pontryagin classes for closed
//! locally symmetric manifolds Γ\G/K.
//!
//! The pipeline, per simple Lie group G:
//!   1. [`groups`] supplies the isotropy weight multiset of the complexified
//!      isotropy representation, in the torus variables of K, together with
//!      the degree-≤4 generators of the complexification-kernel ideal.
//!   2. [`chern`] expands the truncated total Chern class ∏(1+w) over the
//!      weights and extracts p₁ = −c₂ and p₂ = c₄.
//!   3. [`ideal`] decides membership of p₁, p₂ in the kernel ideal (graded
//!      exact linear algebra over ℚ), with a constructive certificate.
//!   4. [`classify`] combines the verdicts: p_i(Γ\G/K) ≠ 0 iff p_i(ι) is not
//!      in the ideal, with the complex-group short-circuit.
//!   5. [`oracle`] independently recomputes the ideal generators from
//!      fundamental-representation power sums and cross-checks everything.
//!
//! All cohomological degrees are even; the polynomial ring grades by half
//! the cohomological degree (variables sit in H²(BS)).

pub mod chern;
pub mod classify;
pub mod groups;
pub mod ideal;
pub mod oracle;
pub mod poly;

pub use chern::{total_chern, ChernClass, PontryaginPair};
pub use classify::{classify, classify_product, theorem_table, CatalogBounds, Route, VanishingReport};
pub use groups::{catalog, isotropy_data, GroupSpec, IsotropyData, Weight};
pub use ideal::{is_in_ideal, MembershipProblem, MembershipResult};
pub use poly::{monomials_of_degree, Monomial, MultiPoly};

/// Exact rational scalar used throughout the crate.
pub type Q = num_rational::BigRational;

/// Sparse multivariate polynomial over ℚ — the concrete instantiation every
/// module downstream of [`poly`] works with.
pub type QPoly = MultiPoly<Q>;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand for the rational n/d.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
