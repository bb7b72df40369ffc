//! Independent verification layer.
//!
//! Recomputes the kernel-ideal generators from fundamental-representation
//! power sums (the invariant-ring generators of the exceptional groups)
//! pushed through the complexification substitutions, provides untruncated
//! product baselines for the truncated Chern computation, and cross-checks
//! the sign-parity conventions of the spin-type weight families.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::chern::{pontryagin_from_data, total_chern, PontryaginPair};
use crate::groups::{catalog, isotropy_data, CatalogBounds, GroupSpec, IsotropyData, Weight};
use crate::{q, qr, Q, QPoly};

/// Fundamental representations whose weight power sums generate the
/// Weyl-invariant rings of the exceptional compact groups. E7 and E6 each
/// come in two torus bases, matching the two embeddings used by the
/// complexification computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FundamentalRep {
    /// adjoint root system of E8 (240 roots)
    E8Roots,
    /// 56-dim rep of E7, basis ⟨J₁..J₆, J₇+J₈⟩
    E7Basis1,
    /// 56-dim rep of E7, basis orthogonal to J₁+…+J₈
    E7Basis2,
    /// 27-dim rep of E6, basis ⟨J₁..J₅, J₆+J₇+J₈⟩
    E6Basis1,
    /// 27-dim rep of E6, basis orthogonal to the su₃ roots
    E6Basis2,
    /// 26-dim rep of F4 (24 nonzero weights, the short roots)
    F4,
    /// 7-dim rep of G2 (6 nonzero weights)
    G2,
}

#[derive(Debug, Clone)]
pub struct FundamentalRepData {
    pub rep: FundamentalRep,
    pub arity: usize,
    pub weights: Vec<Weight>,
}

fn w(coords: Vec<Q>) -> Weight {
    Weight(coords)
}

fn sign_tuples(len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(1 << len);
    for bits in 0..(1u32 << len) {
        out.push((0..len).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect());
    }
    out
}

fn minus_count(signs: &[i64]) -> usize {
    signs.iter().filter(|&&s| s < 0).count()
}

pub fn fundamental_rep(rep: FundamentalRep) -> FundamentalRepData {
    use FundamentalRep::*;
    let weights = match rep {
        E8Roots => {
            let mut ws = Vec::new();
            for i in 0..8 {
                for j in i + 1..8 {
                    for (si, sj) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Q::zero(); 8];
                        v[i] = q(si);
                        v[j] = q(sj);
                        ws.push(w(v));
                    }
                }
            }
            for signs in sign_tuples(8) {
                if minus_count(&signs) % 2 == 0 {
                    ws.push(w(signs.iter().map(|&s| qr(s, 2)).collect()));
                }
            }
            ws
        }
        E7Basis1 => {
            let mut ws = Vec::new();
            for i in 0..6 {
                for (si, s7) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![Q::zero(); 7];
                    v[i] = q(si);
                    v[6] = qr(s7, 2);
                    ws.push(w(v));
                }
            }
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == 1 {
                    let mut v: Vec<Q> = signs.iter().map(|&s| qr(s, 2)).collect();
                    v.push(Q::zero());
                    ws.push(w(v));
                }
            }
            ws
        }
        E7Basis2 => {
            let mut ws = Vec::new();
            for i in 0..8 {
                for j in i + 1..8 {
                    let mut v = vec![qr(-1, 4); 8];
                    v[i] += q(1);
                    v[j] += q(1);
                    let neg = Weight(v.clone()).negated();
                    ws.push(w(v));
                    ws.push(neg);
                }
            }
            ws
        }
        E6Basis1 => {
            let mut ws = Vec::new();
            for i in 0..5 {
                for s in [1i64, -1] {
                    let mut v = vec![Q::zero(); 6];
                    v[i] = q(s);
                    v[5] = qr(1, 3);
                    ws.push(w(v));
                }
            }
            for signs in sign_tuples(5) {
                if minus_count(&signs) % 2 == 0 {
                    let mut v: Vec<Q> = signs.iter().map(|&s| qr(s, 2)).collect();
                    v.push(qr(-1, 6));
                    ws.push(w(v));
                }
            }
            let mut last = vec![Q::zero(); 6];
            last[5] = qr(-2, 3);
            ws.push(w(last));
            ws
        }
        E6Basis2 => {
            let mut ws = Vec::new();
            for i in 0..6 {
                for j in i + 1..6 {
                    let mut v = vec![qr(-1, 3); 6];
                    v[i] += q(1);
                    v[j] += q(1);
                    v.push(Q::zero());
                    ws.push(w(v));
                }
            }
            for i in 0..6 {
                for s in [1i64, -1] {
                    let mut v = vec![qr(-5, 6); 6];
                    v[i] += q(1);
                    v.push(qr(s, 2));
                    ws.push(w(v));
                }
            }
            ws
        }
        F4 => {
            let mut ws = Vec::new();
            for i in 0..4 {
                for s in [1i64, -1] {
                    let mut v = vec![Q::zero(); 4];
                    v[i] = q(s);
                    ws.push(w(v));
                }
            }
            for signs in sign_tuples(4) {
                ws.push(w(signs.iter().map(|&s| qr(s, 2)).collect()));
            }
            ws
        }
        G2 => {
            let mut ws = Vec::new();
            for (c1, c2) in [(1i64, 0i64), (1, 1), (2, 1)] {
                ws.push(w(vec![q(c1), q(c2)]));
                ws.push(w(vec![q(-c1), q(-c2)]));
            }
            ws
        }
    };
    let arity = weights[0].arity();
    FundamentalRepData { rep, arity, weights }
}

fn is_negation_closed(weights: &[Weight]) -> bool {
    let mut counts: BTreeMap<&Weight, i64> = BTreeMap::new();
    for w in weights {
        *counts.entry(w).or_insert(0) += 1;
    }
    weights.iter().all(|w| {
        let n = w.negated();
        counts.get(&n).copied().unwrap_or(0) == counts[w]
    })
}

/// Mehta power sum I_k = Σ τ(λ)^k over the representation's weights, with
/// each ±pair counted once when the weight list is closed under negation
/// (the normalization the invariant-ring tables use).
pub fn power_sum_invariant(data: &FundamentalRepData, k: u32) -> QPoly {
    let mut acc = QPoly::zero(data.arity);
    for w in &data.weights {
        let f = w.linear_form();
        let mut t = QPoly::one(data.arity);
        for _ in 0..k {
            t = t.mul(&f);
        }
        acc = acc.add(&t);
    }
    if is_negation_closed(&data.weights) {
        acc = acc.scale(&qr(1, 2));
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The group is not exceptional, so no substitution data is stored.
    NoSubstitutionData(GroupSpec),
    /// The group has no sign-parity-constrained weight family.
    NoParityFamily(GroupSpec),
    /// untruncated_chern refuses weight systems past the blowup guard.
    TooManyWeights { spec: GroupSpec, count: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NoSubstitutionData(s) => {
                write!(f, "{s} has no stored complexification substitution")
            }
            OracleError::NoParityFamily(s) => {
                write!(f, "{s} has no sign-parity-constrained weight family")
            }
            OracleError::TooManyWeights { spec, count } => {
                write!(f, "{spec} has {count} weights; untruncated product refused above 32")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// The substitution z_i ↦ (linear form in the real form's variables) from
/// the section-5 complexification computations, exactly as printed.
fn substitution(spec: GroupSpec) -> Option<(FundamentalRep, Vec<QPoly>)> {
    use FundamentalRep::*;
    use GroupSpec::*;
    let lin = |arity: usize, parts: &[(usize, Q)]| -> QPoly {
        QPoly::from_terms(
            arity,
            parts
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (crate::poly::Monomial::variable(arity, *i), c.clone())),
        )
    };
    let ident = |n: usize| -> Vec<QPoly> { (0..n).map(|i| lin(n, &[(i, q(1))])).collect() };
    Some(match spec {
        E8_8 => (E8Roots, ident(8)),
        E8M24 => {
            let mut img = ident(8);
            img.truncate(6);
            img.push(lin(8, &[(6, qr(1, 2)), (7, qr(1, 2))]));
            img.push(lin(8, &[(6, qr(1, 2)), (7, qr(-1, 2))]));
            (E8Roots, img)
        }
        E7_7 => (E7Basis2, ident(8)),
        E7M5 => {
            let mut img = ident(7);
            img.truncate(6);
            img.push(lin(7, &[(6, q(2))]));
            (E7Basis1, img)
        }
        E7M25 => {
            let mut img = ident(7);
            img.truncate(5);
            img.push(lin(7, &[(5, qr(1, 3)), (6, qr(-1, 3))]));
            img.push(lin(7, &[(5, qr(2, 3)), (6, qr(1, 3))]));
            (E7Basis1, img)
        }
        E6_6 => {
            let mut img: Vec<QPoly> = (0..3).map(|i| lin(4, &[(i, q(1))])).collect();
            img.extend((0..3).map(|i| lin(4, &[(i, q(-1))])));
            img.push(lin(4, &[(3, q(2))]));
            (E6Basis2, img)
        }
        E6_2 => {
            let mut img = ident(7);
            img.truncate(6);
            img.push(lin(7, &[(6, q(2))]));
            (E6Basis2, img)
        }
        E6M14 => {
            let mut img = ident(6);
            img.truncate(5);
            img.push(lin(6, &[(5, q(1))]));
            (E6Basis1, img)
        }
        E6M26 => {
            let mut img: Vec<QPoly> = (0..4).map(|i| lin(4, &[(i, q(1))])).collect();
            img.push(QPoly::zero(4));
            img.push(QPoly::zero(4));
            (E6Basis1, img)
        }
        F4_4 => {
            let img = vec![
                lin(4, &[(0, q(1)), (1, q(1))]),
                lin(4, &[(0, q(-1)), (1, q(1))]),
                lin(4, &[(2, q(1)), (3, q(1))]),
                lin(4, &[(2, q(1)), (3, q(-1))]),
            ];
            (F4, img)
        }
        F4M20 => (F4, ident(4)),
        G2_2 => {
            let img = vec![lin(2, &[(0, q(2))]), lin(2, &[(0, q(-3)), (1, q(1))])];
            (G2, img)
        }
        _ => return None,
    })
}

/// Recompute the degree-2 kernel generator of an exceptional group: I₂ of
/// the complexification's invariant ring, pushed through the stored
/// substitution and reduced by the target ring's relations. Must agree with
/// the curated generator up to a nonzero rational scalar.
pub fn recompute_kernel_generator(spec: GroupSpec) -> Result<QPoly, OracleError> {
    let (rep, images) = substitution(spec).ok_or(OracleError::NoSubstitutionData(spec))?;
    let data = fundamental_rep(rep);
    let i2 = power_sum_invariant(&data, 2);
    let pushed = i2.substitute_all(&images);
    Ok(isotropy_data(spec).reduce(&pushed))
}

/// a = c·b for some nonzero rational c (with 0 ∝ 0 only).
pub fn proportional(a: &QPoly, b: &QPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let (m, ca) = a.terms().next().expect("nonzero");
    let cb = b.coefficient(m);
    if cb.is_zero() {
        return false;
    }
    let ratio = ca.clone() / cb;
    *a == b.scale(&ratio)
}

/// Full product ∏(1 + w) with no truncation. Guarded: refuses weight
/// systems with more than 32 weights.
pub fn untruncated_chern(spec: GroupSpec) -> Result<QPoly, OracleError> {
    let data = isotropy_data(spec);
    untruncated_chern_of(&data, spec)
}

fn untruncated_chern_of(data: &IsotropyData, spec: GroupSpec) -> Result<QPoly, OracleError> {
    if data.weights.len() > 32 {
        return Err(OracleError::TooManyWeights { spec, count: data.weights.len() });
    }
    let arity = data.arity();
    let mut acc = QPoly::one(arity);
    for w in &data.weights {
        let factor = QPoly::one(arity).add(&w.linear_form());
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Upper bound on the monomial count of the full product: C(N + arity, arity)
/// for N weights. Used to skip resource-infeasible untruncated baselines.
pub fn full_product_size_bound(num_weights: usize, arity: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..=arity as u128 {
        acc = acc.saturating_mul(num_weights as u128 + i) / i;
        if acc > u128::MAX / 64 {
            return u128::MAX;
        }
    }
    acc
}

/// The parity-constrained weight families: rebuild the multiset with the
/// opposite sign-parity convention. `None` marks families whose spin part
/// runs over all sign tuples, where the flip is the identity.
fn parity_flipped_weights(spec: GroupSpec) -> Result<Vec<Weight>, OracleError> {
    use GroupSpec::*;
    let flip = match spec {
        E8_8 | E8M24 | E7M5 | E6M14 => true,
        F4M20 => false,
        _ => return Err(OracleError::NoParityFamily(spec)),
    };
    if !flip {
        return Ok(isotropy_data(spec).weights);
    }
    let want = 1usize; // odd number of minus signs instead of even
    let mut ws = Vec::new();
    match spec {
        E8_8 => {
            for signs in sign_tuples(8) {
                if minus_count(&signs) % 2 == want {
                    ws.push(w(signs.iter().map(|&s| qr(s, 2)).collect()));
                }
            }
        }
        E8M24 => {
            for i in 0..6 {
                for s in sign_tuples(3) {
                    let mut v = vec![Q::zero(); 8];
                    v[i] = q(s[0]);
                    v[6] = qr(s[1], 2);
                    v[7] = qr(s[2], 2);
                    ws.push(w(v));
                }
            }
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == want {
                    for s8 in [1i64, -1] {
                        let mut v: Vec<Q> = signs.iter().map(|&s| qr(s, 2)).collect();
                        v.push(Q::zero());
                        v.push(qr(s8, 2));
                        ws.push(w(v));
                    }
                }
            }
        }
        E7M5 => {
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == want {
                    for s7 in [1i64, -1] {
                        let mut v: Vec<Q> = signs.iter().map(|&s| qr(s, 2)).collect();
                        v.push(qr(s7, 2));
                        ws.push(w(v));
                    }
                }
            }
        }
        E6M14 => {
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == want {
                    let mut v: Vec<Q> = signs[..5].iter().map(|&s| qr(s, 2)).collect();
                    v.push(q(3 * signs[5]));
                    ws.push(w(v));
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(ws)
}

/// True iff flipping the even/odd parity convention of the spin-type weight
/// family yields identical p₁ and p₂.
pub fn parity_variant_check(spec: GroupSpec) -> Result<bool, OracleError> {
    let flipped = parity_flipped_weights(spec)?;
    let data = isotropy_data(spec);
    let original = pontryagin_from_data(&data);
    let variant_chern = total_chern(&flipped, data.arity(), 4);
    let variant = PontryaginPair {
        p1: data.reduce(&variant_chern.component(2).neg()),
        p2: data.reduce(&variant_chern.component(4)),
    };
    Ok(original == variant)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Resource-bounded untruncated baselines past the size cap.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl OracleCheck {
    fn pass(name: impl Into<String>) -> Self {
        OracleCheck { name: name.into(), status: CheckStatus::Pass, detail: String::new() }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        OracleCheck { name: name.into(), status: CheckStatus::Fail, detail: detail.into() }
    }

    fn of(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail())
        }
    }
}

/// Cap on the a-priori monomial bound above which the untruncated-product
/// baseline is skipped (the full expansion would need gigabytes; truncation
/// correctness is additionally covered by the randomized property suite).
pub const UNTRUNCATED_SIZE_CAP: u128 = 200_000;

/// Compare the recomputed kernel generator of `spec` against `data`'s
/// curated one, up to a nonzero scalar. Exposed separately so tests can
/// tamper with the curated data and watch the check fail.
pub fn kernel_generator_check(spec: GroupSpec, data: &IsotropyData) -> OracleCheck {
    let name = format!("kernel generator of {spec}");
    match recompute_kernel_generator(spec) {
        Err(e) => OracleCheck::fail(name, e.to_string()),
        Ok(rec) => {
            let curated: Vec<QPoly> = data.reduced_kernel_gens();
            // the degree-2 curated generator
            let cur = curated.iter().find(|g| g.degree() == 2);
            match cur {
                None => OracleCheck::fail(name, "no degree-2 curated generator".into()),
                Some(cur) => OracleCheck::of(name, proportional(&rec, cur), || {
                    let names = data.reduced_names();
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    format!(
                        "recomputed {} vs curated {}",
                        crate::poly::render(&rec, &refs),
                        crate::poly::render(cur, &refs)
                    )
                }),
            }
        }
    }
}

/// Run the whole verification pass. Exit-code contract for the CLI: success
/// iff no check fails.
pub fn run_checks(bounds: CatalogBounds) -> Vec<OracleCheck> {
    let mut checks = Vec::new();

    // power-sum pins from the invariant-ring tables
    let pins: Vec<(&str, FundamentalRep, u32, QPoly)> = vec![
        ("E8 I2", FundamentalRep::E8Roots, 2, sq_sum(8, &[30; 8])),
        ("F4 I2", FundamentalRep::F4, 2, sq_sum(4, &[3; 4])),
        (
            "G2 I2",
            FundamentalRep::G2,
            2,
            QPoly::from_terms(
                2,
                [
                    (crate::poly::Monomial(vec![2, 0]), q(6)),
                    (crate::poly::Monomial(vec![1, 1]), q(6)),
                    (crate::poly::Monomial(vec![0, 2]), q(2)),
                ],
            ),
        ),
        ("E7 (basis 1) I2", FundamentalRep::E7Basis1, 2, {
            sq_sum(7, &[6, 6, 6, 6, 6, 6, 3])
        }),
        ("E6 (basis 1) I2", FundamentalRep::E6Basis1, 2, sq_sum(6, &[6, 6, 6, 6, 6, 2])),
    ];
    for (name, rep, k, want) in pins {
        let got = power_sum_invariant(&fundamental_rep(rep), k);
        checks.push(OracleCheck::of(name, got == want, || format!("got {got:?}")));
    }
    let e6 = fundamental_rep(FundamentalRep::E6Basis1);
    checks.push(OracleCheck::of(
        "E6 (basis 1) I1 = I3 = 0",
        power_sum_invariant(&e6, 1).is_zero() && power_sum_invariant(&e6, 3).is_zero(),
        || "odd power sums nonzero".into(),
    ));
    let i2 = power_sum_invariant(&e6, 2);
    let i4 = power_sum_invariant(&e6, 4);
    checks.push(OracleCheck::of(
        "E6 (basis 1) I4 = I2^2 / 12",
        i4 == i2.mul(&i2).scale(&qr(1, 12)),
        || "identity fails".into(),
    ));

    // kernel-generator recomputation for every exceptional group
    for spec in exceptional_specs() {
        checks.push(kernel_generator_check(spec, &isotropy_data(spec)));
    }

    // parity conventions
    for spec in [
        GroupSpec::E8_8,
        GroupSpec::E8M24,
        GroupSpec::E7M5,
        GroupSpec::E6M14,
        GroupSpec::F4M20,
    ] {
        let name = format!("parity variant of {spec}");
        match parity_variant_check(spec) {
            Ok(ok) => checks.push(OracleCheck::of(name, ok, || "variant p1/p2 differ".into())),
            Err(e) => checks.push(OracleCheck::fail(name, e.to_string())),
        }
    }

    // untruncated baselines and per-group structural invariants
    for spec in catalog(bounds) {
        if spec.is_complex() {
            continue;
        }
        let data = isotropy_data(spec);
        checks.push(structural_check(spec, &data));
        if data.weights.len() <= 32 {
            let bound = full_product_size_bound(data.weights.len(), data.arity());
            if bound > UNTRUNCATED_SIZE_CAP {
                checks.push(OracleCheck {
                    name: format!("untruncated product of {spec}"),
                    status: CheckStatus::Skipped,
                    detail: format!("full-expansion bound {bound} exceeds cap {UNTRUNCATED_SIZE_CAP}"),
                });
                continue;
            }
            let full = untruncated_chern_of(&data, spec).expect("guarded");
            let truncated = total_chern(&data.weights, data.arity(), 4).truncated_total;
            checks.push(OracleCheck::of(
                format!("untruncated product of {spec}"),
                full.truncate(4) == truncated,
                || "truncated product disagrees with full expansion".into(),
            ));
        }
    }

    checks
}

fn structural_check(spec: GroupSpec, data: &IsotropyData) -> OracleCheck {
    let name = format!("weight system of {spec}");
    if data.weights.len() + data.zero_weight_count != data.dim_p {
        return OracleCheck::fail(name, "weight count plus zeros misses dim G/K".into());
    }
    let red = data.reduced_weights();
    if !is_negation_closed(&red) {
        return OracleCheck::fail(name, "weight multiset not closed under negation".into());
    }
    let chern = total_chern(&data.weights, data.arity(), 4);
    if !data.reduce(&chern.component(1)).is_zero() || !data.reduce(&chern.component(3)).is_zero() {
        return OracleCheck::fail(name, "odd Chern components do not vanish".into());
    }
    let pair = pontryagin_from_data(data);
    if pair.p1 != crate::chern::half_sum_of_weight_squares(data) {
        return OracleCheck::fail(name, "p1 disagrees with half the weight-square sum".into());
    }
    OracleCheck::pass(name)
}

fn sq_sum(arity: usize, coefs: &[i64]) -> QPoly {
    QPoly::from_terms(
        arity,
        coefs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| {
            let mut e = vec![0u32; arity];
            e[i] = 2;
            (crate::poly::Monomial(e), q(*c))
        }),
    )
}

fn exceptional_specs() -> [GroupSpec; 12] {
    use GroupSpec::*;
    [E6_6, E6_2, E6M14, E6M26, E7_7, E7M5, E7M25, E8_8, E8M24, F4_4, F4M20, G2_2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep_weight_counts() {
        use FundamentalRep::*;
        for (rep, count) in [
            (E8Roots, 240),
            (E7Basis1, 56),
            (E7Basis2, 56),
            (E6Basis1, 27),
            (E6Basis2, 27),
            (F4, 24),
            (G2, 6),
        ] {
            assert_eq!(fundamental_rep(rep).weights.len(), count, "{rep:?}");
        }
    }

    #[test]
    fn power_sum_pins() {
        let e8 = fundamental_rep(FundamentalRep::E8Roots);
        assert_eq!(power_sum_invariant(&e8, 2), sq_sum(8, &[30; 8]));
        let f4 = fundamental_rep(FundamentalRep::F4);
        assert_eq!(power_sum_invariant(&f4, 2), sq_sum(4, &[3; 4]));
    }

    #[test]
    fn recompute_matches_curated_for_all_exceptional_groups() {
        for spec in exceptional_specs() {
            let check = kernel_generator_check(spec, &isotropy_data(spec));
            assert_eq!(check.status, CheckStatus::Pass, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn recompute_pins() {
        // E8(-24): 30(y1^2+...+y6^2) + 15(y7^2 + y8^2)
        let got = recompute_kernel_generator(GroupSpec::E8M24).unwrap();
        assert_eq!(got, sq_sum(8, &[30, 30, 30, 30, 30, 30, 15, 15]));
        // E6(6): 12(y1^2+...+y4^2)
        let got = recompute_kernel_generator(GroupSpec::E6_6).unwrap();
        assert_eq!(got, sq_sum(4, &[12; 4]));
        // F4(4): 6(y1^2+...+y4^2)
        let got = recompute_kernel_generator(GroupSpec::F4_4).unwrap();
        assert_eq!(got, sq_sum(4, &[6; 4]));
    }

    #[test]
    fn classical_groups_have_no_substitution() {
        assert!(matches!(
            recompute_kernel_generator(GroupSpec::SlR(3)),
            Err(OracleError::NoSubstitutionData(_))
        ));
    }

    #[test]
    fn untruncated_matches_truncated_for_g2() {
        let full = untruncated_chern(GroupSpec::G2_2).unwrap();
        let data = isotropy_data(GroupSpec::G2_2);
        let trunc = total_chern(&data.weights, 2, 4).truncated_total;
        assert_eq!(full.truncate(4), trunc);
        assert_eq!(full.degree(), 8);
    }

    #[test]
    fn untruncated_so22_is_the_printed_product() {
        // (1 - (y1+z1)^2)(1 - (y1-z1)^2)
        let full = untruncated_chern(GroupSpec::SoPq(2, 2)).unwrap();
        let y = QPoly::variable(2, 0, q(1));
        let z = QPoly::variable(2, 1, q(1));
        let a = y.add(&z);
        let b = y.sub(&z);
        let want = QPoly::one(2)
            .sub(&a.mul(&a))
            .mul(&QPoly::one(2).sub(&b.mul(&b)));
        assert_eq!(full, want);
    }

    #[test]
    fn untruncated_refuses_large_weight_systems() {
        assert!(matches!(
            untruncated_chern(GroupSpec::E8_8),
            Err(OracleError::TooManyWeights { .. })
        ));
    }

    #[test]
    fn parity_variants_agree() {
        for spec in [
            GroupSpec::E8_8,
            GroupSpec::E8M24,
            GroupSpec::E7M5,
            GroupSpec::E6M14,
            GroupSpec::F4M20,
        ] {
            assert_eq!(parity_variant_check(spec), Ok(true), "{spec}");
        }
        assert!(parity_variant_check(GroupSpec::G2_2).is_err());
    }

    #[test]
    fn corrupting_a_curated_generator_fails_the_check() {
        let mut data = isotropy_data(GroupSpec::G2_2);
        data.kernel_gens = vec![sq_sum(2, &[5, 1])];
        let check = kernel_generator_check(GroupSpec::G2_2, &data);
        assert_eq!(check.status, CheckStatus::Fail);
        assert!(check.name.contains("G2(2)"));
    }

    #[test]
    fn full_verification_pass_is_clean() {
        let checks = run_checks(CatalogBounds { max_pq: 5, max_n: 3 });
        for c in &checks {
            assert_ne!(c.status, CheckStatus::Fail, "{}: {}", c.name, c.detail);
        }
        assert!(checks.iter().any(|c| c.status == CheckStatus::Pass));
    }
}
