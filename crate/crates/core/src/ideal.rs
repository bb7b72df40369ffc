//! Graded ideal membership over ℚ by exact linear algebra.
//!
//! To decide whether a homogeneous target of polynomial degree d lies in
//! the ideal generated by homogeneous generators g, assemble the matrix
//! whose columns are the coefficient vectors of m·g for every generator g
//! and every monomial m of degree d − deg g, and test whether the target's
//! coefficient vector lies in the column space. Membership in the full
//! polynomial ring equals membership in the Weyl-invariant subring:
//! averaging a full-ring certificate over the finite Weyl group retracts it
//! onto an invariant one, the generators being invariant.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::poly::{monomials_of_degree, Monomial};
use crate::{Q, QPoly};

/// A membership question: is `target` (homogeneous of polynomial degree
/// `degree`) in the ideal generated by `generators`, in that graded piece?
#[derive(Debug, Clone)]
pub struct MembershipProblem {
    pub generators: Vec<QPoly>,
    pub target: QPoly,
    pub degree: u32,
}

/// One term of a membership certificate: coefficient · multiplier ·
/// generators[generator] summed over the terms reproduces the target.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateTerm {
    pub generator: usize,
    #[serde(serialize_with = "serialize_monomial")]
    pub multiplier: Monomial,
    #[serde(serialize_with = "serialize_q")]
    pub coefficient: Q,
}

fn serialize_monomial<S: serde::Serializer>(m: &Monomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(m.0.iter())
}

fn serialize_q<S: serde::Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipResult {
    pub in_ideal: bool,
    /// Present exactly when `in_ideal`; empty for a zero target.
    pub certificate: Option<Vec<CertificateTerm>>,
}

impl MembershipResult {
    /// Recombine the certificate through polynomial arithmetic; must equal
    /// the target exactly.
    pub fn recombined(&self, generators: &[QPoly], arity: usize) -> Option<QPoly> {
        let cert = self.certificate.as_ref()?;
        let mut acc = QPoly::zero(arity);
        for t in cert {
            let mono = QPoly::from_terms(arity, [(t.multiplier.clone(), t.coefficient.clone())]);
            acc = acc.add(&mono.mul(&generators[t.generator]));
        }
        Some(acc)
    }
}

/// Column labels alongside the matrix: which generator and multiplier
/// monomial each column came from.
pub struct SpanMatrix {
    /// columns[k] is the coefficient vector (over the degree-d monomial
    /// basis) of labels[k].1 · generators[labels[k].0]
    pub columns: Vec<Vec<Q>>,
    pub labels: Vec<(usize, Monomial)>,
    pub basis_size: usize,
}

/// Assemble the degree-d span matrix of the generators: one column per
/// (generator, multiplier monomial) pair, columns ordered by generator then
/// graded-lex multiplier. Generators of degree > d contribute nothing.
pub fn degree_span_matrix(generators: &[QPoly], degree: u32, arity: usize) -> SpanMatrix {
    let basis = monomials_of_degree(arity, degree);
    let mut columns = Vec::new();
    let mut labels = Vec::new();
    for (gi, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let dg = g.degree();
        debug_assert!(g.is_homogeneous_of(dg), "generators must be homogeneous");
        if dg > degree {
            continue;
        }
        for m in monomials_of_degree(arity, degree - dg) {
            let col = QPoly::from_terms(arity, [(m.clone(), Q::one())]).mul(g);
            columns.push(basis.iter().map(|b| col.coefficient(b)).collect());
            labels.push((gi, m));
        }
    }
    SpanMatrix { columns, labels, basis_size: basis.len() }
}

/// Decide membership and, on success, extract a certificate by exact
/// Gauss-Jordan elimination on the augmented system. Pivots prefer entries
/// of small height (|numerator| + denominator) to keep intermediate
/// rationals modest.
pub fn is_in_ideal(problem: &MembershipProblem) -> MembershipResult {
    let arity = problem.target.arity();
    let d = problem.degree;
    assert!(
        problem.target.is_homogeneous_of(d),
        "membership target must be homogeneous of the stated degree"
    );
    if problem.target.is_zero() {
        return MembershipResult { in_ideal: true, certificate: Some(vec![]) };
    }
    let span = degree_span_matrix(&problem.generators, d, arity);
    let t = problem.target.coeff_vector(d);
    if span.columns.is_empty() {
        return MembershipResult { in_ideal: false, certificate: None };
    }

    let rows = span.basis_size;
    let ncols = span.columns.len();
    // augmented matrix [A | t], row major
    let mut a: Vec<Vec<Q>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Q> = span.columns.iter().map(|c| c[i].clone()).collect();
            row.push(t[i].clone());
            row
        })
        .collect();

    let height = |x: &Q| -> num_bigint::BigInt { x.numer().abs() + x.denom() };

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        // choose the nonzero entry of smallest height as pivot
        let mut best: Option<usize> = None;
        for (i, row) in a.iter().enumerate().skip(rank) {
            if !row[col].is_zero()
                && best.is_none_or(|b| height(&row[col]) < height(&a[b][col]))
            {
                best = Some(i);
            }
        }
        let Some(p) = best else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for x in a[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != rank && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let (head, tail) = a.split_at_mut(i.max(rank));
                let (ri, rr) = if i < rank {
                    (&mut head[i], &tail[0])
                } else {
                    (&mut tail[0], &head[rank])
                };
                for (x, y) in ri.iter_mut().zip(rr.iter()) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // inconsistent iff some zero row has nonzero augmented entry
    for row in a.iter().skip(rank) {
        if !row[ncols].is_zero() {
            return MembershipResult { in_ideal: false, certificate: None };
        }
    }

    // particular solution: free columns 0, pivot column k takes the
    // augmented entry of its pivot row
    let mut cert = Vec::new();
    for (r, &col) in pivot_cols.iter().enumerate() {
        let coeff = a[r][ncols].clone();
        if !coeff.is_zero() {
            let (gi, m) = span.labels[col].clone();
            cert.push(CertificateTerm { generator: gi, multiplier: m, coefficient: coeff });
        }
    }
    MembershipResult { in_ideal: true, certificate: Some(cert) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn mono(e: Vec<u32>) -> Monomial {
        Monomial(e)
    }

    fn poly(arity: usize, terms: Vec<(Vec<u32>, i64)>) -> QPoly {
        QPoly::from_terms(arity, terms.into_iter().map(|(e, c)| (mono(e), q(c))))
    }

    #[test]
    fn span_matrix_single_generator() {
        // gens [y1^2 + z1^2] in 2 vars at degree 2: single column (1,0,1)
        let g = poly(2, vec![(vec![2, 0], 1), (vec![0, 2], 1)]);
        let span = degree_span_matrix(&[g], 2, 2);
        assert_eq!(span.columns, vec![vec![q(1), q(0), q(1)]]);
        assert_eq!(span.labels, vec![(0, mono(vec![0, 0]))]);
    }

    #[test]
    fn span_matrix_empty_when_degree_too_low() {
        let g = poly(2, vec![(vec![2, 0], 1), (vec![0, 2], 1)]);
        let span = degree_span_matrix(&[g], 1, 2);
        assert!(span.columns.is_empty());
    }

    #[test]
    fn span_matrix_column_count() {
        // column count = sum over generators of C(d - deg g + arity - 1, arity - 1)
        let g1 = poly(3, vec![(vec![2, 0, 0], 1)]);
        let g2 = poly(3, vec![(vec![1, 1, 1], 1)]);
        let span = degree_span_matrix(&[g1, g2], 4, 3);
        assert_eq!(span.columns.len(), 6 + 3);
    }

    #[test]
    fn so22_y1_fourth_membership_with_certificate() {
        // y1^4 = y1^2 (y1^2 + z1^2) - 1 (y1^2 z1^2)
        let gens = vec![
            poly(2, vec![(vec![2, 0], 1), (vec![0, 2], 1)]),
            poly(2, vec![(vec![2, 2], 1)]),
        ];
        let target = poly(2, vec![(vec![4, 0], 1)]);
        let res = is_in_ideal(&MembershipProblem { generators: gens.clone(), target: target.clone(), degree: 4 });
        assert!(res.in_ideal);
        assert_eq!(res.recombined(&gens, 2).unwrap(), target);
    }

    #[test]
    fn e8_sum_of_fourth_powers_not_in_ideal() {
        let gen = QPoly::from_terms(8, (0..8).map(|i| {
            let mut e = vec![0; 8];
            e[i] = 2;
            (mono(e), q(1))
        }));
        let target = QPoly::from_terms(8, (0..8).map(|i| {
            let mut e = vec![0; 8];
            e[i] = 4;
            (mono(e), q(1))
        }));
        let res = is_in_ideal(&MembershipProblem { generators: vec![gen], target, degree: 4 });
        assert!(!res.in_ideal);
        assert!(res.certificate.is_none());
    }

    #[test]
    fn zero_target_is_member_with_empty_certificate() {
        let res = is_in_ideal(&MembershipProblem {
            generators: vec![],
            target: QPoly::zero(2),
            degree: 4,
        });
        assert!(res.in_ideal);
        assert_eq!(res.certificate.as_deref(), Some(&[][..]));
    }

    #[test]
    fn generator_is_member_of_own_ideal() {
        let g = poly(2, vec![(vec![2, 0], 1), (vec![0, 2], 3)]);
        let res = is_in_ideal(&MembershipProblem {
            generators: vec![g.clone()],
            target: g.clone(),
            degree: 2,
        });
        assert!(res.in_ideal);
        assert_eq!(res.recombined(&[g.clone()], 2).unwrap(), g);
    }

    #[test]
    fn order_independence_and_monotonicity() {
        let g1 = poly(2, vec![(vec![2, 0], 1), (vec![0, 2], 1)]);
        let g2 = poly(2, vec![(vec![2, 2], 1)]);
        let target = poly(2, vec![(vec![4, 0], 1), (vec![0, 4], 2)]);
        let forward = is_in_ideal(&MembershipProblem {
            generators: vec![g1.clone(), g2.clone()],
            target: target.clone(),
            degree: 4,
        });
        let reversed = is_in_ideal(&MembershipProblem {
            generators: vec![g2.clone(), g1.clone()],
            target: target.clone(),
            degree: 4,
        });
        assert_eq!(forward.in_ideal, reversed.in_ideal);
        // adding a generator never flips membership to false
        if forward.in_ideal {
            let extra = poly(2, vec![(vec![1, 1], 1)]);
            let bigger = is_in_ideal(&MembershipProblem {
                generators: vec![g1, g2, extra],
                target,
                degree: 4,
            });
            assert!(bigger.in_ideal);
        }
    }

    #[test]
    #[should_panic(expected = "homogeneous")]
    fn inhomogeneous_target_panics() {
        let target = poly(2, vec![(vec![2, 0], 1), (vec![1, 0], 1)]);
        let _ = is_in_ideal(&MembershipProblem { generators: vec![], target, degree: 2 });
    }
}
