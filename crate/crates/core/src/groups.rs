//! Static catalog of the noncompact simple Lie groups: torus variables,
//! isotropy weight multisets, linear relations, kernel-ideal generators in
//! polynomial degree ≤ 4, and weight-multiset symmetries.
//!
//! Weight multisets are stored extensionally (expanded lists). Kernel
//! generators are stored in the pre-relation ring and pushed through the
//! same substitution pipeline as the Chern classes.

use std::fmt;

use serde::Serialize;

use crate::poly::Monomial;
use crate::{q, qr, Q, QPoly};

/// One row of the classification tables: a simple real Lie group, or a
/// complex simple group viewed as a real group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupSpec {
    /// SL_n(ℝ), n ≥ 2
    SlR(u32),
    /// SU*_{2n}, n ≥ 2
    SuStar(u32),
    /// SU_{p,q}, p ≥ q ≥ 1
    SuPq(u32, u32),
    /// SO_{p,q}, p ≥ q ≥ 1, p + q ≥ 3
    SoPq(u32, u32),
    /// SO*_{2n}, n ≥ 3
    SoStar(u32),
    /// Sp_{2n}(ℝ), n ≥ 2
    SpR(u32),
    /// Sp_{p,q}, p ≥ q ≥ 1
    SpPq(u32, u32),
    E6_6,
    E6_2,
    E6M14,
    E6M26,
    E7_7,
    E7M5,
    E7M25,
    E8_8,
    E8M24,
    F4_4,
    F4M20,
    G2_2,
    Complex(ComplexFamily),
}

/// The complex simple groups (Table 1), viewed as real groups. All of them
/// classify by the complex-group rule, with no weight data needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ComplexFamily {
    SlC(u32),
    SoC(u32),
    /// Sp_{2n}(ℂ) with parameter n
    SpC(u32),
    E6C,
    E7C,
    E8C,
    F4C,
    G2C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseGroupError(pub String);

impl fmt::Display for ParseGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseGroupError {}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl GroupSpec {
    /// Canonical token, the same grammar `parse` accepts.
    pub fn token(&self) -> String {
        use GroupSpec::*;
        match self {
            SlR(n) => format!("SL:{n}"),
            SuStar(n) => format!("SU*:{}", 2 * n),
            SuPq(p, q) => format!("SU:{p},{q}"),
            SoPq(p, q) => format!("SO:{p},{q}"),
            SoStar(n) => format!("SO*:{}", 2 * n),
            SpR(n) => format!("Sp:{}", 2 * n),
            SpPq(p, q) => format!("Sp:{p},{q}"),
            E6_6 => "E6(6)".into(),
            E6_2 => "E6(2)".into(),
            E6M14 => "E6(-14)".into(),
            E6M26 => "E6(-26)".into(),
            E7_7 => "E7(7)".into(),
            E7M5 => "E7(-5)".into(),
            E7M25 => "E7(-25)".into(),
            E8_8 => "E8(8)".into(),
            E8M24 => "E8(-24)".into(),
            F4_4 => "F4(4)".into(),
            F4M20 => "F4(-20)".into(),
            G2_2 => "G2(2)".into(),
            Complex(c) => c.token(),
        }
    }

    /// Parse a group token. Grammar:
    ///
    /// ```text
    /// SL:n        SL_n(R), n >= 2          SLC:n   SL_n(C), n >= 2
    /// SU*:2n      SU*_2n, 2n >= 4          SOC:n   SO_n(C), n >= 3
    /// SU:p,q      SU_pq, p >= q >= 1       SPC:2n  Sp_2n(C), 2n >= 2
    /// SO:p,q      SO_pq, p >= q >= 1, p+q >= 3
    /// SO*:2n      SO*_2n, 2n >= 6          E6C E7C E8C F4C G2C
    /// Sp:2n       Sp_2n(R), 2n >= 4
    /// Sp:p,q      Sp_pq, p >= q >= 1
    /// E6(6) E6(2) E6(-14) E6(-26) E7(7) E7(-5) E7(-25)
    /// E8(8) E8(-24) F4(4) F4(-20) G2(2)
    /// ```
    pub fn parse(token: &str) -> Result<GroupSpec, ParseGroupError> {
        use GroupSpec::*;
        let fixed = [
            ("E6(6)", E6_6),
            ("E6(2)", E6_2),
            ("E6(-14)", E6M14),
            ("E6(-26)", E6M26),
            ("E7(7)", E7_7),
            ("E7(-5)", E7M5),
            ("E7(-25)", E7M25),
            ("E8(8)", E8_8),
            ("E8(-24)", E8M24),
            ("F4(4)", F4_4),
            ("F4(-20)", F4M20),
            ("G2(2)", G2_2),
            ("E6C", Complex(ComplexFamily::E6C)),
            ("E7C", Complex(ComplexFamily::E7C)),
            ("E8C", Complex(ComplexFamily::E8C)),
            ("F4C", Complex(ComplexFamily::F4C)),
            ("G2C", Complex(ComplexFamily::G2C)),
        ];
        for (t, g) in fixed {
            if token == t {
                return Ok(g);
            }
        }
        let (head, args) = token
            .split_once(':')
            .ok_or_else(|| ParseGroupError(format!("unknown group token `{token}`")))?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| ParseGroupError(format!("bad parameter `{s}` in `{token}`")))
            })
            .collect::<Result<_, _>>()?;
        let err = |msg: &str| Err(ParseGroupError(format!("{msg} (in `{token}`)")));
        let two = |f: fn(u32, u32) -> GroupSpec| -> Result<GroupSpec, ParseGroupError> {
            if nums.len() != 2 {
                return err("expected two parameters p,q");
            }
            let (p, qq) = (nums[0], nums[1]);
            if qq < 1 || p < qq {
                return err("parameters must satisfy p >= q >= 1");
            }
            Ok(f(p, qq))
        };
        let even = |label: &str| -> Result<u32, ParseGroupError> {
            if nums.len() != 1 {
                return err(&format!("{label} takes a single even parameter")).map(|_: GroupSpec| 0);
            }
            if nums[0] % 2 != 0 {
                return err(&format!("{label} parameter must be even")).map(|_: GroupSpec| 0);
            }
            Ok(nums[0] / 2)
        };
        let spec = match head {
            "SL" => {
                if nums.len() != 1 || nums[0] < 2 {
                    return err("SL:n requires n >= 2");
                }
                SlR(nums[0])
            }
            "SU" => two(SuPq)?,
            "SU*" => {
                let n = even("SU*")?;
                if n < 2 {
                    return err("SU*:2n requires 2n >= 4");
                }
                SuStar(n)
            }
            "SO" => {
                let g = two(SoPq)?;
                if let SoPq(p, qq) = g {
                    if p + qq < 3 {
                        return err("SO:p,q requires p+q >= 3");
                    }
                }
                g
            }
            "SO*" => {
                let n = even("SO*")?;
                if n < 3 {
                    return err("SO*:2n requires 2n >= 6");
                }
                SoStar(n)
            }
            "Sp" => {
                if nums.len() == 1 {
                    let n = even("Sp")?;
                    if n < 2 {
                        return err("Sp:2n requires 2n >= 4");
                    }
                    SpR(n)
                } else {
                    two(SpPq)?
                }
            }
            "SLC" => {
                if nums.len() != 1 || nums[0] < 2 {
                    return err("SLC:n requires n >= 2");
                }
                Complex(ComplexFamily::SlC(nums[0]))
            }
            "SOC" => {
                if nums.len() != 1 || nums[0] < 3 {
                    return err("SOC:n requires n >= 3");
                }
                Complex(ComplexFamily::SoC(nums[0]))
            }
            "SPC" => {
                let n = even("SPC")?;
                if n < 1 {
                    return err("SPC:2n requires 2n >= 2");
                }
                Complex(ComplexFamily::SpC(n))
            }
            _ => return Err(ParseGroupError(format!("unknown group token `{token}`"))),
        };
        Ok(spec)
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, GroupSpec::Complex(_))
    }

    /// dim G/K via the closed-form family formulas.
    pub fn dim_symmetric_space(&self) -> u32 {
        use GroupSpec::*;
        match *self {
            SlR(n) => n * (n + 1) / 2 - 1,
            SuStar(n) => (n - 1) * (2 * n + 1),
            SuPq(p, qq) => 2 * p * qq,
            SoPq(p, qq) => p * qq,
            SoStar(n) => n * (n - 1),
            SpR(n) => n * (n + 1),
            SpPq(p, qq) => 4 * p * qq,
            E8_8 => 128,
            E8M24 => 112,
            E7_7 => 70,
            E7M5 => 64,
            E7M25 => 54,
            E6_6 => 42,
            E6_2 => 40,
            E6M14 => 32,
            E6M26 => 26,
            F4_4 => 28,
            F4M20 => 16,
            G2_2 => 8,
            Complex(c) => c.dim_symmetric_space(),
        }
    }

    /// Membership in the Theorem 1.1 vanishing list: Table 1 groups,
    /// SL_n(ℝ), SU*_{2n}, SO_{p,1}, SO_{2,2}, SO_{3,3}, E6(−26). SU_{1,1}
    /// and Sp_{1,1} count as members through the isogenies SU_{1,1} ≅
    /// SO_{2,1} and Sp_{1,1} ≅ SO_{4,1}.
    pub fn theorem_1_1_member(&self) -> bool {
        use GroupSpec::*;
        match *self {
            Complex(_) | SlR(_) | SuStar(_) | E6M26 => true,
            SoPq(_, 1) => true,
            SoPq(2, 2) | SoPq(3, 3) => true,
            SuPq(1, 1) | SpPq(1, 1) => true,
            _ => false,
        }
    }

    /// Integer parameters of the family, for reports.
    pub fn params(&self) -> Vec<u32> {
        use GroupSpec::*;
        match *self {
            SlR(n) | SuStar(n) | SoStar(n) | SpR(n) => vec![n],
            SuPq(p, qq) | SoPq(p, qq) | SpPq(p, qq) => vec![p, qq],
            Complex(ComplexFamily::SlC(n))
            | Complex(ComplexFamily::SoC(n))
            | Complex(ComplexFamily::SpC(n)) => vec![n],
            _ => vec![],
        }
    }
}

impl ComplexFamily {
    pub fn token(&self) -> String {
        use ComplexFamily::*;
        match self {
            SlC(n) => format!("SLC:{n}"),
            SoC(n) => format!("SOC:{n}"),
            SpC(n) => format!("SPC:{}", 2 * n),
            E6C => "E6C".into(),
            E7C => "E7C".into(),
            E8C => "E8C".into(),
            F4C => "F4C".into(),
            G2C => "G2C".into(),
        }
    }

    /// dim G/K for the complex group = dim of the compact form.
    pub fn dim_symmetric_space(&self) -> u32 {
        use ComplexFamily::*;
        match *self {
            SlC(n) => n * n - 1,
            SoC(n) => n * (n - 1) / 2,
            SpC(n) => n * (2 * n + 1),
            E6C => 78,
            E7C => 133,
            E8C => 248,
            F4C => 52,
            G2C => 14,
        }
    }
}

/// Parameter bounds for a catalog sweep.
#[derive(Debug, Clone, Copy)]
pub struct CatalogBounds {
    /// cap on p + q for the two-parameter families
    pub max_pq: u32,
    /// cap on n for the one-parameter families
    pub max_n: u32,
}

impl Default for CatalogBounds {
    fn default() -> Self {
        CatalogBounds { max_pq: 10, max_n: 6 }
    }
}

/// Every valid group within the bounds, each exactly once, in a fixed
/// deterministic order: classical families, then the twelve exceptional
/// real forms, then the complex groups.
pub fn catalog(bounds: CatalogBounds) -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut out = Vec::new();
    for n in 2..=bounds.max_n {
        out.push(SlR(n));
    }
    for n in 2..=bounds.max_n {
        out.push(SuStar(n));
    }
    for p in 1..bounds.max_pq {
        for qq in 1..=p {
            if p + qq <= bounds.max_pq {
                out.push(SuPq(p, qq));
            }
        }
    }
    for p in 2..bounds.max_pq {
        for qq in 1..=p {
            if p + qq <= bounds.max_pq && p + qq >= 3 {
                out.push(SoPq(p, qq));
            }
        }
    }
    for n in 3..=bounds.max_n {
        out.push(SoStar(n));
    }
    for n in 2..=bounds.max_n {
        out.push(SpR(n));
    }
    for p in 1..bounds.max_pq {
        for qq in 1..=p {
            if p + qq <= bounds.max_pq {
                out.push(SpPq(p, qq));
            }
        }
    }
    out.extend([E6_6, E6_2, E6M14, E6M26, E7_7, E7M5, E7M25, E8_8, E8M24, F4_4, F4M20, G2_2]);
    for n in 2..=bounds.max_n {
        out.push(Complex(ComplexFamily::SlC(n)));
    }
    for n in 3..=bounds.max_pq {
        out.push(Complex(ComplexFamily::SoC(n)));
    }
    for n in 1..=bounds.max_n {
        out.push(Complex(ComplexFamily::SpC(n)));
    }
    out.extend([
        Complex(ComplexFamily::E6C),
        Complex(ComplexFamily::E7C),
        Complex(ComplexFamily::E8C),
        Complex(ComplexFamily::F4C),
        Complex(ComplexFamily::G2C),
    ]);
    out
}

/// A weight of the complexified isotropy representation: a rational vector
/// over the torus variables of the pre-relation ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn negated(&self) -> Weight {
        Weight(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// The weight as a homogeneous linear polynomial.
    pub fn linear_form(&self) -> QPoly {
        QPoly::from_terms(
            self.0.len(),
            self.0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::variable(self.0.len(), i), c.clone())),
        )
    }
}

use num_traits::Zero;

/// Variable elimination: x_var := replacement (homogeneous linear, in the
/// ring before this elimination).
#[derive(Debug, Clone)]
pub struct Relation {
    pub var: usize,
    pub replacement: QPoly,
}

/// A signed permutation of the torus variables: variable i maps to
/// sign(i) · variable target(i).
#[derive(Debug, Clone)]
pub struct SignedPerm {
    /// images[i] = (target index, sign)
    pub images: Vec<(usize, i8)>,
}

impl SignedPerm {
    pub fn identity(arity: usize) -> Self {
        SignedPerm { images: (0..arity).map(|i| (i, 1)).collect() }
    }

    pub fn transposition(arity: usize, a: usize, b: usize) -> Self {
        let mut s = Self::identity(arity);
        s.images[a] = (b, 1);
        s.images[b] = (a, 1);
        s
    }

    /// Flip the signs of the listed variables.
    pub fn flips(arity: usize, vars: &[usize]) -> Self {
        let mut s = Self::identity(arity);
        for &v in vars {
            s.images[v] = (v, -1);
        }
        s
    }

    pub fn apply_weight(&self, w: &Weight) -> Weight {
        let mut out = vec![Q::zero(); w.0.len()];
        for (i, c) in w.0.iter().enumerate() {
            let (j, s) = self.images[i];
            out[j] = if s < 0 { -c.clone() } else { c.clone() };
        }
        Weight(out)
    }

    pub fn apply_poly(&self, p: &QPoly) -> QPoly {
        QPoly::from_terms(
            p.arity(),
            p.terms().map(|(m, c)| {
                let mut e = vec![0u32; m.0.len()];
                let mut coeff = c.clone();
                for (i, &exp) in m.0.iter().enumerate() {
                    let (j, s) = self.images[i];
                    e[j] += exp;
                    if s < 0 && exp % 2 == 1 {
                        coeff = -coeff;
                    }
                }
                (Monomial(e), coeff)
            }),
        )
    }
}

/// Everything the pipeline needs about one group: the weight multiset of
/// the complexified isotropy representation, the torus ring, its relations,
/// and the degree-≤4 kernel-ideal generators (pre-relation).
#[derive(Debug, Clone)]
pub struct IsotropyData {
    pub variable_names: Vec<String>,
    pub weights: Vec<Weight>,
    pub zero_weight_count: usize,
    pub relations: Vec<Relation>,
    pub kernel_gens: Vec<QPoly>,
    pub symmetries: Vec<SignedPerm>,
    pub dim_p: usize,
}

impl IsotropyData {
    pub fn arity(&self) -> usize {
        self.variable_names.len()
    }

    pub fn reduced_arity(&self) -> usize {
        self.arity() - self.relations.len()
    }

    /// Apply the ring relations, eliminating one variable per relation.
    pub fn reduce(&self, p: &QPoly) -> QPoly {
        let mut p = p.clone();
        for r in &self.relations {
            p = p.substitute_linear(r.var, &r.replacement);
        }
        p
    }

    /// Variable names of the post-relation ring.
    pub fn reduced_names(&self) -> Vec<String> {
        let mut names = self.variable_names.clone();
        for r in &self.relations {
            names.remove(r.var);
        }
        names
    }

    /// The weights with relations substituted, as vectors in the reduced ring.
    pub fn reduced_weights(&self) -> Vec<Weight> {
        self.weights
            .iter()
            .map(|w| {
                let p = self.reduce(&w.linear_form());
                let n = self.reduced_arity();
                let mut coords = vec![Q::zero(); n];
                for (m, c) in p.terms() {
                    let i = m.0.iter().position(|&e| e == 1).expect("linear form");
                    coords[i] = c.clone();
                }
                Weight(coords)
            })
            .collect()
    }

    /// Kernel generators with relations substituted; zero generators (which
    /// the relation may create) are dropped.
    pub fn reduced_kernel_gens(&self) -> Vec<QPoly> {
        self.kernel_gens
            .iter()
            .map(|g| self.reduce(g))
            .filter(|g| !g.is_zero())
            .collect()
    }
}

fn names(prefix: &str, count: u32) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

fn yz_names(p: u32, qq: u32) -> Vec<String> {
    let mut v = names("y", p);
    v.extend(names("z", qq));
    v
}

/// e_k of the given polynomials.
fn elem_sym(polys: &[QPoly], k: usize, arity: usize) -> QPoly {
    fn rec(polys: &[QPoly], k: usize, start: usize, acc: &QPoly, out: &mut QPoly) {
        if k == 0 {
            *out = out.add(acc);
            return;
        }
        for i in start..=polys.len().saturating_sub(k) {
            rec(polys, k - 1, i + 1, &acc.mul(&polys[i]), out);
        }
    }
    let mut out = QPoly::zero(arity);
    rec(polys, k, 0, &QPoly::one(arity), &mut out);
    out
}

fn var_poly(arity: usize, i: usize) -> QPoly {
    QPoly::variable(arity, i, q(1))
}

fn sq_poly(arity: usize, i: usize) -> QPoly {
    QPoly::from_terms(arity, [(sq_mono(arity, i), q(1))])
}

fn sq_mono(arity: usize, i: usize) -> Monomial {
    let mut e = vec![0u32; arity];
    e[i] = 2;
    Monomial(e)
}

/// sum of c_j · x_{idx_j}²
fn weighted_sq_sum(arity: usize, parts: &[(usize, i64)]) -> QPoly {
    QPoly::from_terms(arity, parts.iter().map(|&(i, c)| (sq_mono(arity, i), q(c))))
}

fn sym_sq_gens(arity: usize, count: usize) -> Vec<QPoly> {
    let sqs: Vec<QPoly> = (0..count).map(|i| sq_poly(arity, i)).collect();
    [elem_sym(&sqs, 1, arity), elem_sym(&sqs, 2, arity)]
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect()
}

fn weight(coords: Vec<Q>) -> Weight {
    Weight(coords)
}

fn basis_weight(arity: usize, parts: &[(usize, Q)]) -> Weight {
    let mut v = vec![Q::zero(); arity];
    for (i, c) in parts {
        v[*i] = c.clone();
    }
    Weight(v)
}

/// All sign tuples of the given length.
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

/// Weight multiset of V_p ⊗ V_q for the orthogonal factors: all sums u + v
/// with u a weight of V_p and v a weight of V_q.
fn so_tensor_weights(p: u32, qq: u32) -> (usize, Vec<Weight>, usize) {
    let a = (p / 2) as usize;
    let b = (qq / 2) as usize;
    let n = a + b;
    let mut left: Vec<Vec<Q>> = Vec::new();
    for i in 0..a {
        for s in [1i64, -1] {
            let mut v = vec![Q::zero(); n];
            v[i] = q(s);
            left.push(v);
        }
    }
    if p % 2 == 1 {
        left.push(vec![Q::zero(); n]);
    }
    let mut right: Vec<Vec<Q>> = Vec::new();
    for j in 0..b {
        for s in [1i64, -1] {
            let mut v = vec![Q::zero(); n];
            v[a + j] = q(s);
            right.push(v);
        }
    }
    if qq % 2 == 1 {
        right.push(vec![Q::zero(); n]);
    }
    let mut ws = Vec::new();
    let mut zeros = 0;
    for u in &left {
        for v in &right {
            let w: Vec<Q> = u.iter().zip(v).map(|(x, y)| x.clone() + y.clone()).collect();
            if w.iter().all(Q::is_zero) {
                zeros += 1;
            } else {
                ws.push(weight(w));
            }
        }
    }
    (n, ws, zeros)
}

// Symmetry generator sets. Transpositions generate the permutations; sign
// flips follow the Weyl-group pattern of each factor (single flips for odd
// orthogonal/symplectic factors, pair flips where only even sign changes
// preserve the weight multiset).

fn transpositions(arity: usize, range: std::ops::Range<usize>) -> Vec<SignedPerm> {
    range
        .clone()
        .zip(range.skip(1))
        .map(|(a, b)| SignedPerm::transposition(arity, a, b))
        .collect()
}

fn so_pq_symmetries(p: u32, qq: u32) -> Vec<SignedPerm> {
    let a = (p / 2) as usize;
    let b = (qq / 2) as usize;
    let n = a + b;
    let mut sym = Vec::new();
    sym.extend(transpositions(n, 0..a));
    sym.extend(transpositions(n, a..n));
    if a >= 1 && p % 2 == 1 {
        sym.push(SignedPerm::flips(n, &[0]));
    }
    if a >= 2 && p % 2 == 0 {
        sym.push(SignedPerm::flips(n, &[0, 1]));
    }
    if b >= 1 && qq % 2 == 1 {
        sym.push(SignedPerm::flips(n, &[a]));
    }
    if b >= 2 && qq % 2 == 0 {
        sym.push(SignedPerm::flips(n, &[a, a + 1]));
    }
    sym
}

fn perms_and_single_flips(arity: usize, count: usize) -> Vec<SignedPerm> {
    let mut sym = transpositions(arity, 0..count);
    if count >= 1 {
        sym.push(SignedPerm::flips(arity, &[0]));
    }
    sym
}

/// The full isotropy package for a group. Complex groups return a marker
/// with no weights; classification short-circuits before using it.
pub fn isotropy_data(spec: GroupSpec) -> IsotropyData {
    use GroupSpec::*;
    match spec {
        Complex(_) => IsotropyData {
            variable_names: vec![],
            weights: vec![],
            zero_weight_count: 0,
            relations: vec![],
            kernel_gens: vec![],
            symmetries: vec![],
            dim_p: spec.dim_symmetric_space() as usize,
        },
        SlR(n) => {
            let k = (n / 2) as usize;
            let mut ws = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        ws.push(basis_weight(k, &[(i, q(si)), (j, q(sj))]));
                    }
                }
            }
            for i in 0..k {
                ws.push(basis_weight(k, &[(i, q(2))]));
                ws.push(basis_weight(k, &[(i, q(-2))]));
            }
            let mut zeros = k - 1;
            if n % 2 == 1 {
                for i in 0..k {
                    ws.push(basis_weight(k, &[(i, q(1))]));
                    ws.push(basis_weight(k, &[(i, q(-1))]));
                }
                zeros = k;
            }
            let mut sym = transpositions(k, 0..k);
            if n % 2 == 1 {
                sym.push(SignedPerm::flips(k, &[0]));
            } else if k >= 2 {
                sym.push(SignedPerm::flips(k, &[0, 1]));
            }
            IsotropyData {
                variable_names: names("y", k as u32),
                weights: ws,
                zero_weight_count: zeros,
                relations: vec![],
                kernel_gens: sym_sq_gens(k, k),
                symmetries: sym,
                dim_p: spec.dim_symmetric_space() as usize,
            }
        }
        SuStar(n) => {
            let n = n as usize;
            let mut ws = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        ws.push(basis_weight(n, &[(i, q(si)), (j, q(sj))]));
                    }
                }
            }
            IsotropyData {
                variable_names: names("y", n as u32),
                weights: ws,
                zero_weight_count: n - 1,
                relations: vec![],
                kernel_gens: sym_sq_gens(n, n),
                symmetries: perms_and_single_flips(n, n),
                dim_p: spec.dim_symmetric_space() as usize,
            }
        }
        SuPq(p, qq) => {
            let n = (p + qq) as usize;
            let mut ws = Vec::new();
            for i in 0..p as usize {
                for j in 0..qq as usize {
                    let w = basis_weight(n, &[(i, q(1)), (p as usize + j, q(-1))]);
                    ws.push(w.negated());
                    ws.push(w);
                }
            }
            let vars: Vec<QPoly> = (0..n).map(|i| var_poly(n, i)).collect();
            let gens = [2, 3, 4]
                .into_iter()
                .map(|k| elem_sym(&vars, k, n))
                .filter(|g| !g.is_zero())
                .collect();
            // sigma_1 = 0: eliminate the last z variable
            let replacement = QPoly::from_terms(
                n,
                (0..n - 1).map(|i| (Monomial::variable(n, i), q(-1))),
            );
            let mut sym = transpositions(n, 0..p as usize);
            sym.extend(transpositions(n, p as usize..n));
            IsotropyData {
                variable_names: yz_names(p, qq),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![Relation { var: n - 1, replacement }],
                kernel_gens: gens,
                symmetries: sym,
                dim_p: spec.dim_symmetric_space() as usize,
            }
        }
        SoPq(p, qq) => {
            let (n, ws, zeros) = so_tensor_weights(p, qq);
            let a = (p / 2) as usize;
            let b = (qq / 2) as usize;
            let mut gens = sym_sq_gens(n, n);
            if p % 2 == 0 && qq % 2 == 0 && n <= 4 {
                // Euler class of V_p ⊕ V_q: y1…ya · z1…zb
                gens.push(QPoly::from_terms(n, [(Monomial(vec![1; n]), q(1))]));
            }
            IsotropyData {
                variable_names: {
                    let mut v = names("y", a as u32);
                    v.extend(names("z", b as u32));
                    v
                },
                weights: ws,
                zero_weight_count: zeros,
                relations: vec![],
                kernel_gens: gens,
                symmetries: so_pq_symmetries(p, qq),
                dim_p: spec.dim_symmetric_space() as usize,
            }
        }
        SoStar(n) => {
            let n = n as usize;
            let mut ws = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let w = basis_weight(n, &[(i, q(1)), (j, q(1))]);
                    ws.push(w.negated());
                    ws.push(w);
                }
            }
            let mut gens = sym_sq_gens(n, n);
            if n <= 4 {
                gens.push(QPoly::from_terms(n, [(Monomial(vec![1; n]), q(1))]));
            }
            IsotropyData {
                variable_names: names("y", n as u32),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: gens,
                symmetries: transpositions(n, 0..n),
                dim_p: spec.dim_symmetric_space() as usize,
            }
        }
        SpR(n) => {
            let n = n as usize;
            let mut ws = Vec::new();
            for i in 0..n {
                for j in i..n {
                    let w = if i == j {
                        basis_weight(n, &[(i, q(2))])
                    } else {
                        basis_weight(n, &[(i, q(1)), (j, q(1))])
                    };
                    ws.push(w.negated());
                    ws.push(w);
                }
            }
            IsotropyData {
                variable_names: names("y", n as u32),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: sym_sq_gens(n, n),
                symmetries: transpositions(n, 0..n),
                dim_p: spec.dim_symmetric_space() as usize,
            }
        }
        SpPq(p, qq) => {
            let n = (p + qq) as usize;
            let mut ws = Vec::new();
            for i in 0..p as usize {
                for j in 0..qq as usize {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        ws.push(basis_weight(n, &[(i, q(si)), (p as usize + j, q(sj))]));
                    }
                }
            }
            let mut sym = transpositions(n, 0..p as usize);
            sym.extend(transpositions(n, p as usize..n));
            sym.push(SignedPerm::flips(n, &[0]));
            sym.push(SignedPerm::flips(n, &[p as usize]));
            IsotropyData {
                variable_names: yz_names(p, qq),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: sym_sq_gens(n, n),
                symmetries: sym,
                dim_p: spec.dim_symmetric_space() as usize,
            }
        }
        E8_8 => {
            // half-spin weights: (±y1 ± … ± y8)/2, even number of minus signs
            let mut ws = Vec::new();
            for signs in sign_tuples(8) {
                if minus_count(&signs) % 2 == 0 {
                    ws.push(weight(signs.iter().map(|&s| qr(s, 2)).collect()));
                }
            }
            let mut sym = transpositions(8, 0..8);
            sym.push(SignedPerm::flips(8, &[0, 1]));
            IsotropyData {
                variable_names: names("y", 8),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(8, &(0..8).map(|i| (i, 1)).collect::<Vec<_>>())],
                symmetries: sym,
                dim_p: 128,
            }
        }
        E8M24 => {
            let mut ws = Vec::new();
            for i in 0..6 {
                for s in sign_tuples(3) {
                    ws.push(basis_weight(
                        8,
                        &[(i, q(s[0])), (6, qr(s[1], 2)), (7, qr(s[2], 2))],
                    ));
                }
            }
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == 0 {
                    for s8 in [1i64, -1] {
                        let mut v: Vec<Q> = signs.iter().map(|&s| qr(s, 2)).collect();
                        v.push(Q::zero());
                        v.push(qr(s8, 2));
                        ws.push(weight(v));
                    }
                }
            }
            let mut sym = transpositions(8, 0..6);
            sym.push(SignedPerm::flips(8, &[0, 1]));
            sym.push(SignedPerm::flips(8, &[6]));
            sym.push(SignedPerm::flips(8, &[7]));
            let mut gen = (0..6).map(|i| (i, 30i64)).collect::<Vec<_>>();
            gen.extend([(6, 15), (7, 15)]);
            IsotropyData {
                variable_names: names("y", 8),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(8, &gen)],
                symmetries: sym,
                dim_p: 112,
            }
        }
        E7_7 => {
            let mut ws = Vec::new();
            for a in 0..8usize {
                for b in a + 1..8 {
                    for c in b + 1..8 {
                        for d in c + 1..8 {
                            ws.push(basis_weight(8, &[(a, q(1)), (b, q(1)), (c, q(1)), (d, q(1))]));
                        }
                    }
                }
            }
            // 7 sum(y^2) + 2 sum(y_i y_j), pre-relation (I2 up to scalar)
            let vars: Vec<QPoly> = (0..8).map(|i| var_poly(8, i)).collect();
            let gen = weighted_sq_sum(8, &(0..8).map(|i| (i, 7)).collect::<Vec<_>>())
                .add(&elem_sym(&vars, 2, 8).scale(&q(2)));
            let replacement =
                QPoly::from_terms(8, (0..7).map(|i| (Monomial::variable(8, i), q(-1))));
            IsotropyData {
                variable_names: names("y", 8),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![Relation { var: 7, replacement }],
                kernel_gens: vec![gen],
                symmetries: transpositions(8, 0..8),
                dim_p: 70,
            }
        }
        E7M5 => {
            // (±y1 ± … ± y6 ± y7)/2, even number of minus signs among the
            // first six
            let mut ws = Vec::new();
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == 0 {
                    for s7 in [1i64, -1] {
                        let mut v: Vec<Q> = signs.iter().map(|&s| qr(s, 2)).collect();
                        v.push(qr(s7, 2));
                        ws.push(weight(v));
                    }
                }
            }
            let mut sym = transpositions(7, 0..6);
            sym.push(SignedPerm::flips(7, &[0, 1]));
            sym.push(SignedPerm::flips(7, &[6]));
            let mut gen = (0..6).map(|i| (i, 1i64)).collect::<Vec<_>>();
            gen.push((6, 2));
            IsotropyData {
                variable_names: names("y", 7),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(7, &gen)],
                symmetries: sym,
                dim_p: 64,
            }
        }
        E7M25 => {
            let mut ws = Vec::new();
            for s in [1i64, -1] {
                ws.push(basis_weight(7, &[(5, qr(2 * s, 3)), (6, qr(s, 3))]));
            }
            for i in 0..5 {
                for (si, sd) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    ws.push(basis_weight(7, &[(i, q(si)), (5, qr(sd, 3)), (6, qr(-sd, 3))]));
                }
            }
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == 0 {
                    let mut v: Vec<Q> = signs[..5].iter().map(|&s| qr(s, 2)).collect();
                    v.push(qr(-signs[5], 6));
                    v.push(qr(-signs[5], 3));
                    ws.push(weight(v));
                }
            }
            let mut sym = transpositions(7, 0..5);
            sym.push(SignedPerm::flips(7, &[0, 1]));
            let mut gen = (0..5).map(|i| (i, 6i64)).collect::<Vec<_>>();
            gen.extend([(5, 2), (6, 1)]);
            IsotropyData {
                variable_names: names("y", 7),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(7, &gen)],
                symmetries: sym,
                dim_p: 54,
            }
        }
        E6_6 => {
            let mut ws = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        ws.push(basis_weight(4, &[(i, q(si)), (j, q(sj))]));
                    }
                }
            }
            for signs in sign_tuples(4) {
                ws.push(weight(signs.iter().map(|&s| q(s)).collect()));
            }
            IsotropyData {
                variable_names: names("y", 4),
                weights: ws,
                zero_weight_count: 2,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(4, &[(0, 1), (1, 1), (2, 1), (3, 1)])],
                symmetries: perms_and_single_flips(4, 4),
                dim_p: 42,
            }
        }
        E6_2 => {
            let mut ws = Vec::new();
            for a in 0..6usize {
                for b in a + 1..6 {
                    for c in b + 1..6 {
                        for s7 in [1i64, -1] {
                            ws.push(basis_weight(
                                7,
                                &[(a, q(1)), (b, q(1)), (c, q(1)), (6, q(s7))],
                            ));
                        }
                    }
                }
            }
            // 5 sum_{1..6}(y^2) + 12 y7^2 − 2 sum_{i<j<=6}(y_i y_j), pre-relation
            let vars: Vec<QPoly> = (0..6).map(|i| var_poly(7, i)).collect();
            let gen = weighted_sq_sum(7, &[(0, 5), (1, 5), (2, 5), (3, 5), (4, 5), (5, 5), (6, 12)])
                .add(&elem_sym(&vars, 2, 7).scale(&q(-2)));
            let replacement =
                QPoly::from_terms(7, (0..5).map(|i| (Monomial::variable(7, i), q(-1))));
            let mut sym = transpositions(7, 0..6);
            sym.push(SignedPerm::flips(7, &[6]));
            IsotropyData {
                variable_names: names("y", 7),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![Relation { var: 5, replacement }],
                kernel_gens: vec![gen],
                symmetries: sym,
                dim_p: 40,
            }
        }
        E6M14 => {
            // (±y1 ± … ± y5)/2 + 3(±y6), even number of minus signs overall
            let mut ws = Vec::new();
            for signs in sign_tuples(6) {
                if minus_count(&signs) % 2 == 0 {
                    let mut v: Vec<Q> = signs[..5].iter().map(|&s| qr(s, 2)).collect();
                    v.push(q(3 * signs[5]));
                    ws.push(weight(v));
                }
            }
            let mut sym = transpositions(6, 0..5);
            sym.push(SignedPerm::flips(6, &[0, 1]));
            sym.push(SignedPerm::flips(6, &[4, 5]));
            IsotropyData {
                variable_names: names("y", 6),
                weights: ws,
                zero_weight_count: 0,
                // j*(I2)/2 with I2 = 6(z1^2+…+z5^2) + 2 z6^2 and the printed
                // substitution; the section-6 form of the generator
                kernel_gens: vec![weighted_sq_sum(6, &[(0, 3), (1, 3), (2, 3), (3, 3), (4, 3), (5, 1)])],
                symmetries: sym,
                dim_p: 32,
            }
        }
        E6M26 => {
            let mut ws = Vec::new();
            for i in 0..4 {
                ws.push(basis_weight(4, &[(i, q(1))]));
                ws.push(basis_weight(4, &[(i, q(-1))]));
            }
            for signs in sign_tuples(4) {
                ws.push(weight(signs.iter().map(|&s| qr(s, 2)).collect()));
            }
            IsotropyData {
                variable_names: names("y", 4),
                weights: ws,
                zero_weight_count: 2,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(4, &[(0, 3), (1, 3), (2, 3), (3, 3)])],
                symmetries: perms_and_single_flips(4, 4),
                dim_p: 26,
            }
        }
        F4_4 => {
            let mut ws = Vec::new();
            for i in 1..4 {
                for (s1, si) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    ws.push(basis_weight(4, &[(0, q(s1)), (i, q(si))]));
                }
            }
            for signs in sign_tuples(4) {
                ws.push(weight(signs.iter().map(|&s| q(s)).collect()));
            }
            let mut sym = transpositions(4, 1..4);
            sym.push(SignedPerm::flips(4, &[0]));
            sym.push(SignedPerm::flips(4, &[1]));
            IsotropyData {
                variable_names: names("y", 4),
                weights: ws,
                zero_weight_count: 0,
                kernel_gens: vec![weighted_sq_sum(4, &[(0, 1), (1, 1), (2, 1), (3, 1)])],
                relations: vec![],
                symmetries: sym,
                dim_p: 28,
            }
        }
        F4M20 => {
            let mut ws = Vec::new();
            for signs in sign_tuples(4) {
                ws.push(weight(signs.iter().map(|&s| qr(s, 2)).collect()));
            }
            IsotropyData {
                variable_names: names("y", 4),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(4, &[(0, 3), (1, 3), (2, 3), (3, 3)])],
                symmetries: perms_and_single_flips(4, 4),
                dim_p: 16,
            }
        }
        G2_2 => {
            let mut ws = Vec::new();
            for c1 in [3i64, 1, -1, -3] {
                ws.push(basis_weight(2, &[(0, q(c1)), (1, q(1))]));
                ws.push(basis_weight(2, &[(0, q(-c1)), (1, q(-1))]));
            }
            IsotropyData {
                variable_names: names("y", 2),
                weights: ws,
                zero_weight_count: 0,
                relations: vec![],
                kernel_gens: vec![weighted_sq_sum(2, &[(0, 3), (1, 1)])],
                symmetries: vec![SignedPerm::flips(2, &[0]), SignedPerm::flips(2, &[1])],
                dim_p: 8,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn weight_multiset(ws: &[Weight]) -> BTreeMap<Weight, usize> {
        let mut m = BTreeMap::new();
        for w in ws {
            *m.entry(w.clone()).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn catalog_contains_expected_small_groups() {
        let specs = catalog(CatalogBounds { max_pq: 4, max_n: 2 });
        for g in [
            GroupSpec::SoPq(2, 2),
            GroupSpec::SoPq(3, 1),
            GroupSpec::SuPq(2, 1),
            GroupSpec::SuPq(2, 2),
            GroupSpec::SlR(2),
            GroupSpec::E8_8,
        ] {
            assert!(specs.contains(&g), "missing {g:?}");
        }
    }

    #[test]
    fn catalog_entries_unique_and_e8_once() {
        for bounds in [CatalogBounds::default(), CatalogBounds { max_pq: 4, max_n: 2 }] {
            let specs = catalog(bounds);
            let mut seen = std::collections::HashSet::new();
            for s in &specs {
                assert!(seen.insert(*s), "duplicate {s:?}");
            }
            assert_eq!(specs.iter().filter(|s| **s == GroupSpec::E8_8).count(), 1);
        }
    }

    #[test]
    fn catalog_covers_all_complex_families() {
        let specs = catalog(CatalogBounds::default());
        use ComplexFamily::*;
        let want: [fn(&ComplexFamily) -> bool; 8] = [
            |c| matches!(c, SlC(_)),
            |c| matches!(c, SoC(_)),
            |c| matches!(c, SpC(_)),
            |c| matches!(c, E6C),
            |c| matches!(c, E7C),
            |c| matches!(c, E8C),
            |c| matches!(c, F4C),
            |c| matches!(c, G2C),
        ];
        for (i, pred) in want.iter().enumerate() {
            assert!(
                specs.iter().any(|s| matches!(s, GroupSpec::Complex(c) if pred(c))),
                "complex family {i} missing"
            );
        }
    }

    #[test]
    fn token_round_trip() {
        let specs = catalog(CatalogBounds::default());
        for s in specs {
            let t = s.token();
            assert_eq!(GroupSpec::parse(&t).unwrap(), s, "token {t}");
        }
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        for t in ["XX:3", "SO:1,2", "SO:1,1", "SU:0,0", "SU*:5", "SO*:4", "Sp:3", "E6(5)", "SL:1", ""] {
            assert!(GroupSpec::parse(t).is_err(), "token {t} should fail");
        }
    }

    #[test]
    fn dims_match_paper_examples() {
        assert_eq!(GroupSpec::SoPq(2, 2).dim_symmetric_space(), 4);
        assert_eq!(GroupSpec::SoPq(3, 3).dim_symmetric_space(), 9);
        assert_eq!(GroupSpec::E7_7.dim_symmetric_space(), 70);
    }

    #[test]
    fn e8_has_128_spin_weights() {
        let d = isotropy_data(GroupSpec::E8_8);
        assert_eq!(d.weights.len(), 128);
        assert_eq!(d.zero_weight_count, 0);
        assert_eq!(d.dim_p, 128);
    }

    #[test]
    fn su_star_3_weight_budget() {
        let d = isotropy_data(GroupSpec::SuStar(3));
        assert_eq!(d.weights.len(), 12);
        assert_eq!(d.zero_weight_count, 2);
        assert_eq!(d.dim_p, 14);
    }

    #[test]
    fn so_31_weights() {
        let d = isotropy_data(GroupSpec::SoPq(3, 1));
        assert_eq!(d.weights.len(), 2);
        assert_eq!(d.zero_weight_count, 1);
        assert_eq!(d.dim_p, 3);
    }

    #[test]
    fn weight_budget_and_negation_closure_over_sweep() {
        for spec in catalog(CatalogBounds { max_pq: 7, max_n: 4 }) {
            if spec.is_complex() {
                continue;
            }
            let d = isotropy_data(spec);
            assert_eq!(
                d.weights.len() + d.zero_weight_count,
                d.dim_p,
                "weight budget for {spec:?}"
            );
            assert_eq!(d.dim_p as u32, spec.dim_symmetric_space());
            let red = d.reduced_weights();
            let ms = weight_multiset(&red);
            for (w, &count) in &ms {
                assert_eq!(
                    ms.get(&w.negated()).copied().unwrap_or(0),
                    count,
                    "negation closure for {spec:?}"
                );
            }
        }
    }

    #[test]
    fn symmetries_fix_weight_multisets() {
        for spec in catalog(CatalogBounds { max_pq: 7, max_n: 4 }) {
            if spec.is_complex() {
                continue;
            }
            let d = isotropy_data(spec);
            let ms = weight_multiset(&d.weights);
            for (k, sym) in d.symmetries.iter().enumerate() {
                let mapped: Vec<Weight> = d.weights.iter().map(|w| sym.apply_weight(w)).collect();
                assert_eq!(weight_multiset(&mapped), ms, "symmetry {k} of {spec:?}");
            }
        }
    }

    #[test]
    fn kernel_gens_homogeneous_low_degree_and_symmetric() {
        for spec in catalog(CatalogBounds { max_pq: 7, max_n: 4 }) {
            if spec.is_complex() {
                continue;
            }
            let d = isotropy_data(spec);
            for g in &d.kernel_gens {
                let deg = g.degree();
                assert!(deg >= 1 && deg <= 4, "generator degree for {spec:?}");
                assert!(g.is_homogeneous_of(deg), "homogeneity for {spec:?}");
                for sym in &d.symmetries {
                    assert_eq!(
                        d.reduce(&sym.apply_poly(g)),
                        d.reduce(g),
                        "Weyl symmetry of kernel generator for {spec:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn relation_kills_su_sigma1() {
        let d = isotropy_data(GroupSpec::SuPq(2, 1));
        let n = 3;
        let sigma1 = QPoly::from_terms(n, (0..n).map(|i| (Monomial::variable(n, i), q(1))));
        assert!(d.reduce(&sigma1).is_zero());
    }
}
