//! Sparse multivariate polynomial arithmetic with degree truncation.
//!
//! Polynomials are stored as a map from exponent vectors to nonzero
//! coefficients, so equality of canonical forms is structural equality.
//! The term order everywhere (storage, bases, rendering) is graded
//! lexicographic with variable 1 highest: lower total degree first, and
//! within a degree the exponent vector that is lexicographically larger
//! comes first (y₁² before y₁y₂ before y₂²).
//!
//! The grading is polynomial degree; the cohomological degree of a term is
//! twice that, since every variable lives in H²(BS).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Coefficient scalar: a commutative ring with exact equality. Satisfied by
/// `BigRational` (the instantiation used by the rest of the crate) and by
/// the primitive floats, though nothing downstream uses an inexact scalar.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// Exponent vector of a single monomial. Length equals the arity of the
/// owning ring; polynomial degree is the sum of the entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index {index} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len(), "monomial arity mismatch");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            // within a degree, larger exponent vector (lex) first
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given polynomial degree, in graded-lex order.
/// Count is C(d + arity − 1, arity − 1).
pub fn monomials_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
    assert!(arity >= 1, "arity must be at least 1");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(arity);
    fn rec(prefix: &mut Vec<u32>, rem: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(rem);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=rem).rev() {
            prefix.push(e);
            rec(prefix, rem - e, slots - 1, out);
            prefix.pop();
        }
    }
    rec(&mut prefix, d, arity, &mut out);
    out
}

/// Sparse polynomial in `arity` variables. Zero coefficients are never
/// stored, so `==` compares canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<C: Scalar> {
    arity: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: C) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::constant(arity), c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, C::one())
    }

    /// The monomial c·x_index.
    pub fn variable(arity: usize, index: usize, c: C) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::variable(arity, index), c);
        p
    }

    /// Build from (monomial, coefficient) pairs; like terms are merged.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Largest polynomial degree among the terms (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True if every term has polynomial degree exactly `d` (the zero
    /// polynomial is homogeneous of every degree).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        assert_eq!(m.arity(), self.arity, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch in add");
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    /// Full distributive product.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_impl(other, None)
    }

    /// Product with every term of polynomial degree > `max_deg` discarded
    /// during accumulation (equal to truncating the full product, without
    /// ever materializing the high-degree terms).
    pub fn mul_truncated(&self, other: &Self, max_deg: u32) -> Self {
        self.mul_impl(other, Some(max_deg))
    }

    fn mul_impl(&self, other: &Self, max_deg: Option<u32>) -> Self {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch in mul");
        let mut r = Self::zero(self.arity);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if let Some(cap) = max_deg {
                if d1 > cap {
                    continue;
                }
            }
            for (m2, c2) in &other.terms {
                if let Some(cap) = max_deg {
                    if d1 + m2.degree() > cap {
                        continue;
                    }
                }
                r.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        r
    }

    /// Discard every term of polynomial degree > `max_deg`.
    pub fn truncate(&self, max_deg: u32) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The sum of terms of polynomial degree exactly `d`.
    pub fn graded_component(&self, d: u32) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Eliminate one variable: substitute `replacement` (a homogeneous linear
    /// polynomial not involving `var`) for x_var, then drop the slot,
    /// reindexing the ring to arity − 1.
    pub fn substitute_linear(&self, var: usize, replacement: &Self) -> Self {
        assert!(var < self.arity, "variable index out of range");
        assert_eq!(replacement.arity, self.arity, "replacement arity mismatch");
        assert!(
            replacement.is_homogeneous_of(1),
            "replacement must be homogeneous linear"
        );
        assert!(
            replacement.terms.keys().all(|m| m.0[var] == 0),
            "replacement must not involve the eliminated variable"
        );
        let drop_slot = |m: &Monomial| -> Monomial {
            Monomial(
                m.0.iter()
                    .enumerate()
                    .filter(|(i, _)| *i != var)
                    .map(|(_, e)| *e)
                    .collect(),
            )
        };
        let repl_small: Vec<(Monomial, C)> = replacement
            .terms
            .iter()
            .map(|(m, c)| (drop_slot(m), c.clone()))
            .collect();
        let small_arity = self.arity - 1;
        let mut out = Self::zero(small_arity);
        for (m, c) in &self.terms {
            let k = m.0[var];
            let mut rest = m.clone();
            rest.0[var] = 0;
            // rest * replacement^k, accumulated in the smaller ring
            let mut acc = Self::from_terms(small_arity, [(drop_slot(&rest), c.clone())]);
            for _ in 0..k {
                let mut next = Self::zero(small_arity);
                for (ma, ca) in &acc.terms {
                    for (mr, cr) in &repl_small {
                        next.add_term(ma.mul(mr), ca.clone() * cr.clone());
                    }
                }
                acc = next;
            }
            out = out.add(&acc);
        }
        out
    }

    /// Coefficients of a homogeneous polynomial of degree `d` in the
    /// `monomials_of_degree` ordering. The zero polynomial gives the zero
    /// vector.
    pub fn coeff_vector(&self, d: u32) -> Vec<C> {
        assert!(
            self.is_homogeneous_of(d),
            "coeff_vector requires a polynomial homogeneous of degree {d}"
        );
        monomials_of_degree(self.arity, d)
            .into_iter()
            .map(|m| self.coefficient(&m))
            .collect()
    }

    /// Apply a ring endomorphism given by the images of the variables
    /// (polynomials in a possibly different ring, all of the same arity).
    pub fn substitute_all(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.arity, "one image per variable required");
        let target_arity = images.first().map_or(self.arity, MultiPoly::arity);
        assert!(images.iter().all(|p| p.arity() == target_arity));
        let mut out = Self::zero(target_arity);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(target_arity, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    acc = acc.mul(&images[i]);
                }
            }
            out = out.add(&acc);
        }
        out
    }
}

/// Canonical text rendering: terms in graded-lex order, rational
/// coefficients as `a/b` with `/1` omitted, `^` for powers and `*` between
/// factors. This rendering is the golden-file format.
pub fn render<C>(p: &MultiPoly<C>, names: &[&str]) -> String
where
    C: Scalar + fmt::Display + num_traits::Signed,
{
    assert_eq!(names.len(), p.arity(), "one name per variable required");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        for (j, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[j].to_string()),
                _ => factors.push(format!("{}^{}", names[j], e)),
            }
        }
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

impl<C: Scalar> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::sub(self, rhs)
    }
}

impl<C: Scalar> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::mul(self, rhs)
    }
}

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qr, QPoly};

    fn var(arity: usize, i: usize) -> QPoly {
        QPoly::variable(arity, i, q(1))
    }

    #[test]
    fn additive_inverse_cancels() {
        let y1 = var(2, 0);
        assert!(y1.add(&y1.neg()).is_zero());
    }

    #[test]
    fn like_terms_merge() {
        // (1 + y1^2) + (y1^2) = 1 + 2 y1^2
        let one = QPoly::one(1);
        let y1sq = var(1, 0).mul(&var(1, 0));
        let got = one.add(&y1sq).add(&y1sq);
        let want = one.add(&y1sq.scale(&q(2)));
        assert_eq!(got, want);
    }

    #[test]
    fn rational_coefficients_normalize() {
        // 1/2 y1 y2 + 1/2 y1 y2 = y1 y2
        let half = var(2, 0).mul(&var(2, 1)).scale(&qr(1, 2));
        let got = half.add(&half);
        assert_eq!(got, var(2, 0).mul(&var(2, 1)));
    }

    #[test]
    fn difference_of_squares() {
        let one = QPoly::one(1);
        let y = var(1, 0);
        let got = one.add(&y).mul(&one.sub(&y));
        assert_eq!(got, one.sub(&y.mul(&y)));
    }

    #[test]
    fn zero_absorbs() {
        let g = QPoly::from_terms(2, [(Monomial(vec![2, 1]), q(3)), (Monomial(vec![0, 0]), q(-1))]);
        assert!(g.mul(&QPoly::zero(2)).is_zero());
    }

    #[test]
    fn two_variable_difference_of_squares() {
        let y = var(2, 0);
        let z = var(2, 1);
        let got = y.add(&z).mul(&y.sub(&z));
        assert_eq!(got, y.mul(&y).sub(&z.mul(&z)));
    }

    #[test]
    fn truncated_product_drops_high_degree() {
        // trunc((1+y1)^2, 1) = 1 + 2 y1
        let f = QPoly::one(1).add(&var(1, 0));
        let got = f.mul_truncated(&f, 1);
        assert_eq!(got, QPoly::one(1).add(&var(1, 0).scale(&q(2))));
    }

    #[test]
    fn truncated_product_matches_full_expansion() {
        // (1-(y1+y2)^2)(1-(y1-y2)^2) truncated to degree 4
        let y1 = var(2, 0);
        let y2 = var(2, 1);
        let s = y1.add(&y2);
        let d = y1.sub(&y2);
        let f = QPoly::one(2).sub(&s.mul(&s));
        let g = QPoly::one(2).sub(&d.mul(&d));
        let got = f.mul_truncated(&g, 4);
        let want = f.mul(&g).truncate(4);
        assert_eq!(got, want);
        // frozen expansion: 1 - 2y1^2 - 2y2^2 + y1^4 - 2y1^2y2^2 + y2^4
        let names = ["y1", "y2"];
        assert_eq!(
            render(&got, &names),
            "1 - 2*y1^2 - 2*y2^2 + y1^4 - 2*y1^2*y2^2 + y2^4"
        );
    }

    #[test]
    fn substitute_su11_weight_square() {
        // z1 := -y1 into (y1 - z1)^2 gives 4 y1^2
        let y1 = var(2, 0);
        let z1 = var(2, 1);
        let w = y1.sub(&z1);
        let sq = w.mul(&w);
        let repl = QPoly::variable(2, 0, q(-1));
        let got = sq.substitute_linear(1, &repl);
        assert_eq!(got, QPoly::from_terms(1, [(Monomial(vec![2]), q(4))]));
    }

    #[test]
    fn substitute_kills_the_relation_itself() {
        // y8 := -(y1+...+y7) into y1+...+y8 gives 0
        let sum8 = (0..8).fold(QPoly::zero(8), |acc, i| acc.add(&var(8, i)));
        let repl = (0..7).fold(QPoly::zero(8), |acc, i| acc.add(&QPoly::variable(8, i, q(-1))));
        assert!(sum8.substitute_linear(7, &repl).is_zero());
    }

    #[test]
    fn substitute_leaves_unrelated_polynomials_alone() {
        let p = QPoly::from_terms(3, [(Monomial(vec![2, 1, 0]), q(5))]);
        let repl = QPoly::variable(3, 0, q(-1));
        let got = p.substitute_linear(2, &repl);
        assert_eq!(got, QPoly::from_terms(2, [(Monomial(vec![2, 1]), q(5))]));
    }

    #[test]
    fn graded_component_extracts_degree() {
        let p = QPoly::from_terms(
            1,
            [
                (Monomial(vec![0]), q(1)),
                (Monomial(vec![2]), q(-2)),
                (Monomial(vec![4]), q(1)),
            ],
        );
        assert_eq!(
            p.graded_component(2),
            QPoly::from_terms(1, [(Monomial(vec![2]), q(-2))])
        );
        assert!(p.graded_component(1).is_zero());
        // components sum back to p
        let resum = (0..=4).fold(QPoly::zero(1), |acc, d| acc.add(&p.graded_component(d)));
        assert_eq!(resum, p);
    }

    #[test]
    fn monomial_basis_order_and_count() {
        let basis = monomials_of_degree(2, 2);
        assert_eq!(
            basis,
            vec![Monomial(vec![2, 0]), Monomial(vec![1, 1]), Monomial(vec![0, 2])]
        );
        assert_eq!(monomials_of_degree(8, 4).len(), 330);
        assert_eq!(monomials_of_degree(5, 0), vec![Monomial::constant(5)]);
    }

    #[test]
    fn coeff_vector_round_trip() {
        // y1^2 - y2^2 in arity 2, degree 2 -> (1, 0, -1)
        let p = QPoly::from_terms(2, [(Monomial(vec![2, 0]), q(1)), (Monomial(vec![0, 2]), q(-1))]);
        assert_eq!(p.coeff_vector(2), vec![q(1), q(0), q(-1)]);
        assert_eq!(QPoly::zero(2).coeff_vector(2), vec![q(0), q(0), q(0)]);
        let rebuilt = QPoly::from_terms(
            2,
            monomials_of_degree(2, 2).into_iter().zip(p.coeff_vector(2)),
        );
        assert_eq!(rebuilt, p);
    }

    #[test]
    #[should_panic(expected = "arity mismatch")]
    fn arity_mismatch_panics() {
        let _ = var(2, 0).add(&var(3, 0));
    }

    #[test]
    fn rendering_examples() {
        let names = ["y1", "z1"];
        let p = QPoly::from_terms(
            2,
            [
                (Monomial(vec![0, 0]), qr(-1, 2)),
                (Monomial(vec![1, 1]), q(3)),
                (Monomial(vec![2, 0]), q(-1)),
            ],
        );
        assert_eq!(render(&p, &names), "-1/2 - y1^2 + 3*y1*z1");
        assert_eq!(render(&QPoly::zero(2), &names), "0");
    }
}
