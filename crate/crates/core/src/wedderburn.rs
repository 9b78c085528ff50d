//! Non-primary Wedderburn ideal generators of almost-commutative
//! Terwilliger algebras.
//!
//! Frobenius groups get one rational generator per nontrivial class, zero
//! outside the class-diagonal block. Camina p-groups get character-sum
//! projections over the central basis classes with entries in `Q(zeta_p)`
//! (rational for p = 2); class-3 groups additionally get the X and Y
//! families over the classes outside the derived subgroup. Every generator
//! is verified, never assumed: membership in the closed algebra, the
//! one-dimensional two-sided ideal property, idempotency (reported per
//! generator; the Frobenius blocks are genuinely not idempotent), and
//! pairwise orthogonality.

use crate::group::{
    classify_family, conjugacy_classes, dimension_formula, subgroup_closure, subgroup_series,
    ClassPartition, FamilyLabel, FiniteGroup, GroupError,
};
use crate::linalg::{rat, Cyc, LinalgError, Mat, MatrixSpan, Rat, Scalar, Span};
use crate::scheme::{group_scheme, SchemeError};
use crate::terwilliger::{block_closure, center_dimension, dual_idempotents, BlockClosure};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WedderburnError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("operation needs family {expected}, group classifies as {found}")]
    WrongFamily { expected: String, found: String },
    #[error("family unavailable: no Camina class-3 fixture is loaded")]
    FamilyUnavailable,
    #[error("could not select {0} independent central basis classes")]
    NoCentralBasis(usize),
    #[error("generator is the zero matrix")]
    ZeroGenerator,
}

/// Labels for the constructed one-dimensional ideal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorLabel {
    /// Frobenius block generator on class `class`.
    FrobeniusB { class: usize },
    /// Character-sum projection `W_class(alpha)`.
    CaminaW { class: usize, alpha: Vec<u32> },
    /// Class-3 projection `X_class(beta)` on a class outside `G'`.
    CaminaX { class: usize, beta: Vec<u32> },
    /// Class-3 mixed projection `Y_class(gamma)`.
    CaminaY { class: usize, gamma: Vec<u32> },
}

impl std::fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeneratorLabel::FrobeniusB { class } => write!(f, "B[{class}]"),
            GeneratorLabel::CaminaW { class, alpha } => write!(f, "W[{class}]({alpha:?})"),
            GeneratorLabel::CaminaX { class, beta } => write!(f, "X[{class}]({beta:?})"),
            GeneratorLabel::CaminaY { class, gamma } => write!(f, "Y[{class}]({gamma:?})"),
        }
    }
}

/// A candidate generator of a one-dimensional two-sided ideal: a matrix
/// over `Q(zeta_p)` supported on one class-diagonal block.
#[derive(Debug, Clone)]
pub struct IdealGenerator {
    pub label: GeneratorLabel,
    /// Class index whose block carries the matrix.
    pub class: usize,
    /// Elements of that class (row/column indices of the block).
    pub support: Vec<usize>,
    pub block: Mat<Cyc>,
    pub prime: u32,
}

impl IdealGenerator {
    pub fn is_idempotent(&self) -> bool {
        self.block.mul(&self.block) == self.block
    }

    /// Embeds the block into a full `n x n` matrix.
    pub fn to_full(&self, n: usize) -> Mat<Cyc> {
        let zero = Cyc::zero(self.prime);
        let mut m = Mat::from_fn(n, n, |_, _| zero.clone());
        for (a, &u) in self.support.iter().enumerate() {
            for (b, &v) in self.support.iter().enumerate() {
                m.set(u, v, self.block.get(a, b).clone());
            }
        }
        m
    }
}

/// Block generators for `Z_p^r x| Z_{p^r-1}`: one matrix per nontrivial
/// class, zero outside the class-diagonal block, with block
/// `-1/(|C|-1) J + (1 + 1/(|C|-1)) I`.
pub fn frobenius_idempotents(g: &FiniteGroup) -> Result<Vec<IdealGenerator>, WedderburnError> {
    let family = classify_family(g);
    if !matches!(family, FamilyLabel::FrobeniusPR { .. }) {
        return Err(WedderburnError::WrongFamily {
            expected: "FrobeniusPR".into(),
            found: family.to_string(),
        });
    }
    let classes = conjugacy_classes(g);
    let mut out = Vec::new();
    for i in 1..classes.len() {
        let support = classes.class(i).to_vec();
        let c = support.len();
        let off = Rat::new((-1).into(), (c as i64 - 1).into());
        let one = rat(1);
        let block = Mat::from_fn(c, c, |a, b| {
            Cyc::from_rat(2, if a == b { one.clone() } else { off.clone() })
        });
        out.push(IdealGenerator {
            label: GeneratorLabel::FrobeniusB { class: i },
            class: i,
            support,
            block,
            prime: 2,
        });
    }
    Ok(out)
}

/// Greedy selection of `k` central non-identity classes whose (singleton)
/// elements independently generate `Z(G) = Z_p^k`, by class index.
fn central_basis_classes(
    g: &FiniteGroup,
    classes: &ClassPartition,
    k: usize,
) -> Result<Vec<usize>, WedderburnError> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut gens: Vec<usize> = Vec::new();
    let mut closure = vec![g.identity()];
    for i in 1..classes.len() {
        if chosen.len() == k {
            break;
        }
        let cl = classes.class(i);
        if cl.len() != 1 {
            continue;
        }
        let z = cl[0];
        if closure.binary_search(&z).is_ok() {
            continue;
        }
        gens.push(z);
        closure = subgroup_closure(g, &gens);
        chosen.push(i);
    }
    if chosen.len() != k {
        return Err(WedderburnError::NoCentralBasis(k));
    }
    Ok(chosen)
}

/// The character-sum projection
/// `(1/p^k) sum_a zeta^(alpha . a) prod_j (E* A_(b_j) E*)^(a_j)`
/// on the block of `support`, where `b_j` are singleton central classes
/// with elements `z_j` and `(X)^0` is the block identity.
fn character_sum_block(
    g: &FiniteGroup,
    support: &[usize],
    central: &[usize],
    p: u32,
    alpha: &[u32],
) -> Mat<Cyc> {
    let c = support.len();
    let pos: std::collections::HashMap<usize, usize> =
        support.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let zero = Cyc::zero(p);
    let mut acc = Mat::from_fn(c, c, |_, _| zero.clone());
    let k = central.len();
    let mut tuple = vec![0u32; k];
    let weight = Rat::new(1.into(), (p as i64).pow(k as u32).into());
    loop {
        // zeta^(alpha . a), and the product element z_1^(a_1) ... z_k^(a_k).
        let mut exp: i64 = 0;
        let mut w = g.identity();
        for (j, &aj) in tuple.iter().enumerate() {
            exp += i64::from(alpha[j]) * i64::from(aj);
            for _ in 0..aj {
                w = g.mul(central[j], w);
            }
        }
        let coeff = Cyc::zeta_pow(p, exp).scale(&weight);
        // The product of block permutations is the block permutation by w:
        // entry (a, b) contributes when support[b] = w * support[a].
        for (a, &u) in support.iter().enumerate() {
            let v = g.mul(w, u);
            let b = pos[&v];
            acc.set(a, b, acc.get(a, b).add(&coeff));
        }
        // Advance the mixed-radix tuple.
        let mut done = true;
        for t in tuple.iter_mut() {
            *t += 1;
            if *t < p {
                done = false;
                break;
            }
            *t = 0;
        }
        if done {
            return acc;
        }
    }
}

/// Projection generators `W_i(alpha)` for a Camina p-group of class 2: one per
/// non-central class `i` and nonzero `alpha` in `{0..p-1}^k`.
pub fn cam2_idempotents(g: &FiniteGroup) -> Result<Vec<IdealGenerator>, WedderburnError> {
    let family = classify_family(g);
    let (p, k) = match family {
        FamilyLabel::CaminaP2 { p, k, .. } => (p as u32, k as usize),
        _ => {
            return Err(WedderburnError::WrongFamily {
                expected: "CaminaP2".into(),
                found: family.to_string(),
            })
        }
    };
    let classes = conjugacy_classes(g);
    let basis = central_basis_classes(g, &classes, k)?;
    let central: Vec<usize> = basis.iter().map(|&i| classes.class(i)[0]).collect();
    let mut out = Vec::new();
    for i in 0..classes.len() {
        if classes.class(i).len() == 1 {
            continue; // central classes carry the primary block only
        }
        for alpha in nonzero_tuples(p, k) {
            let block = character_sum_block(g, classes.class(i), &central, p, &alpha);
            out.push(IdealGenerator {
                label: GeneratorLabel::CaminaW {
                    class: i,
                    alpha: alpha.clone(),
                },
                class: i,
                support: classes.class(i).to_vec(),
                block,
                prime: p,
            });
        }
    }
    Ok(out)
}

fn nonzero_tuples(p: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut tuple = vec![0u32; k];
    loop {
        if tuple.iter().any(|&t| t != 0) {
            out.push(tuple.clone());
        }
        let mut done = true;
        for t in tuple.iter_mut() {
            *t += 1;
            if *t < p {
                done = false;
                break;
            }
            *t = 0;
        }
        if done {
            return out;
        }
    }
}

/// The class-3 `Y_s(gamma)` block on a class outside `G'`:
/// `(1/p^(n+k)) ( sum over central classes of E* A_j E* + sum over nonzero
/// tuples a of p^k prod_j zeta^(gamma_j a_j) p^(-a_j k) (E* A_(basis_j)
/// E*)^(a_j) )`, with the all-zero tuple excluded from the second sum
/// (including it would add the block identity and break idempotency).
fn cam3_y_block(
    g: &FiniteGroup,
    support: &[usize],
    center: &[usize],
    basis_cosets: &[Vec<usize>],
    p: u32,
    k: usize,
    gamma: &[u32],
) -> Mat<Cyc> {
    let c = support.len();
    let pos: std::collections::HashMap<usize, usize> =
        support.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let zero = Cyc::zero(p);
    let n = basis_cosets.len();
    let pk = (p as i64).pow(k as u32);
    let norm = Rat::new(1.into(), (pk * (p as i64).pow(n as u32)).into());

    // First sum: permutations by every central element.
    let mut first = Mat::from_fn(c, c, |_, _| zero.clone());
    let one = Cyc::one(p);
    for &z in center {
        for (a, &u) in support.iter().enumerate() {
            let b = pos[&g.mul(z, u)];
            first.set(a, b, first.get(a, b).add(&one));
        }
    }

    // Block matrix of one coset class, as integers over Q(zeta_p).
    let coset_block = |coset: &[usize]| -> Mat<Cyc> {
        let members: std::collections::HashSet<usize> = coset.iter().copied().collect();
        Mat::from_fn(c, c, |a, b| {
            let diff = g.mul(support[b], g.inv(support[a]));
            if members.contains(&diff) {
                one.clone()
            } else {
                zero.clone()
            }
        })
    };
    let blocks: Vec<Mat<Cyc>> = basis_cosets.iter().map(|cs| coset_block(cs)).collect();

    let mut acc = first;
    let mut tuple = vec![0u32; n];
    loop {
        let mut done = true;
        for t in tuple.iter_mut() {
            *t += 1;
            if *t < p {
                done = false;
                break;
            }
            *t = 0;
        }
        if done {
            break;
        }
        // prod_j (block_j)^(a_j), factors with a_j = 0 omitted.
        let mut prod: Option<Mat<Cyc>> = None;
        let mut scale_pow: u32 = 0;
        let mut exp: i64 = 0;
        for (j, &aj) in tuple.iter().enumerate() {
            exp += i64::from(gamma[j]) * i64::from(aj);
            scale_pow += aj * k as u32;
            for _ in 0..aj {
                prod = Some(match prod {
                    None => blocks[j].clone(),
                    Some(m) => m.mul(&blocks[j]),
                });
            }
        }
        let m = prod.expect("tuple is nonzero");
        // p^k * zeta^(gamma . a) / p^(k sum a_j)
        let coeff =
            Cyc::zeta_pow(p, exp).scale(&Rat::new(pk.into(), (p as i64).pow(scale_pow).into()));
        acc = acc.add(&m.scale(&coeff));
    }
    acc.scale(&Cyc::from_rat(p, norm))
}

/// All class-3 generators: `W_i(alpha)` on the classes in `G' \ Z`,
/// `X_t(beta)` and `Y_s(gamma)` on the classes outside `G'`.
pub fn cam3_generators(g: &FiniteGroup) -> Result<Vec<IdealGenerator>, WedderburnError> {
    let family = classify_family(g);
    let (p, k, n) = match family {
        FamilyLabel::CaminaP3 { p, k, n } => (p as u32, k as usize, n as usize),
        _ => {
            return Err(WedderburnError::WrongFamily {
                expected: "CaminaP3".into(),
                found: family.to_string(),
            })
        }
    };
    let classes = conjugacy_classes(g);
    let series = subgroup_series(g);
    let basis = central_basis_classes(g, &classes, k)?;
    let central: Vec<usize> = basis.iter().map(|&i| classes.class(i)[0]).collect();
    let center_all = series.center.clone();
    let in_derived = {
        let mut f = vec![false; g.order()];
        for &x in &series.derived {
            f[x] = true;
        }
        f
    };
    // Basis classes of G'/Z among the classes in G' \ Z (cosets of Z).
    let mut coset_basis: Vec<usize> = Vec::new();
    {
        let mut gens = center_all.clone();
        let mut closure = subgroup_closure(g, &gens);
        for i in 0..classes.len() {
            if coset_basis.len() == n {
                break;
            }
            let cl = classes.class(i);
            if cl.len() != center_all.len() || !in_derived[cl[0]] {
                continue;
            }
            if closure.binary_search(&cl[0]).is_ok() {
                continue;
            }
            gens.push(cl[0]);
            closure = subgroup_closure(g, &gens);
            coset_basis.push(i);
        }
        if coset_basis.len() != n {
            return Err(WedderburnError::NoCentralBasis(n));
        }
    }
    let basis_cosets: Vec<Vec<usize>> = coset_basis
        .iter()
        .map(|&i| classes.class(i).to_vec())
        .collect();

    let mut out = Vec::new();
    for i in 0..classes.len() {
        let cl = classes.class(i);
        if cl.len() == 1 {
            continue;
        }
        if in_derived[cl[0]] {
            // W family on G' \ Z.
            for alpha in nonzero_tuples(p, k) {
                let block = character_sum_block(g, cl, &central, p, &alpha);
                out.push(IdealGenerator {
                    label: GeneratorLabel::CaminaW {
                        class: i,
                        alpha: alpha.clone(),
                    },
                    class: i,
                    support: cl.to_vec(),
                    block,
                    prime: p,
                });
            }
        } else {
            // X and Y families outside G'.
            for beta in nonzero_tuples(p, k) {
                let block = character_sum_block(g, cl, &central, p, &beta);
                out.push(IdealGenerator {
                    label: GeneratorLabel::CaminaX {
                        class: i,
                        beta: beta.clone(),
                    },
                    class: i,
                    support: cl.to_vec(),
                    block,
                    prime: p,
                });
            }
            for gamma in nonzero_tuples(p, n) {
                let block = cam3_y_block(g, cl, &center_all, &basis_cosets, p, k, &gamma);
                out.push(IdealGenerator {
                    label: GeneratorLabel::CaminaY {
                        class: i,
                        gamma: gamma.clone(),
                    },
                    class: i,
                    support: cl.to_vec(),
                    block,
                    prime: p,
                });
            }
        }
    }
    Ok(out)
}

/// Reduces a cyclotomic vector against a rational echelon span; true when
/// the remainder vanishes, i.e. the vector lies in the scalar extension of
/// the span.
fn cyc_in_rat_span(span: &Span<Rat>, v: &[Cyc]) -> bool {
    let mut w = v.to_vec();
    for (row, &pc) in span.rows().iter().zip(span.pivots()) {
        if Scalar::is_zero(&w[pc]) {
            continue;
        }
        let f = w[pc].clone();
        for (x, r) in w.iter_mut().zip(row) {
            if !Scalar::is_zero(r) {
                *x = x.sub(&f.scale(r));
            }
        }
    }
    w.iter().all(Scalar::is_zero)
}

/// True when `a = lambda * m` for some scalar; the scalar is read off the
/// first nonzero coordinate of `m` and checked across all coordinates.
fn is_scalar_multiple(a: &Mat<Cyc>, m: &Mat<Cyc>) -> bool {
    if a.is_zero() {
        return true;
    }
    let (fa, fm) = (a.flatten(), m.flatten());
    let pivot = match fm.iter().position(|x| !Scalar::is_zero(x)) {
        Some(p) => p,
        None => return false,
    };
    let lambda = match fa[pivot].checked_mul(&fm[pivot].inv()) {
        Ok(l) => l,
        Err(_) => return false,
    };
    fa.iter().zip(&fm).all(|(x, y)| *x == y.mul(&lambda))
}

/// Verifies that `m` lies in the closed algebra and spans a one-dimensional
/// two-sided ideal: for every block basis element `t`, both `t m` and `m t`
/// are scalar multiples of `m` (in particular zero for off-block rows).
pub fn verify_one_dim_ideal(
    closure: &BlockClosure,
    gen: &IdealGenerator,
) -> Result<bool, WedderburnError> {
    if gen.block.is_zero() {
        return Err(WedderburnError::ZeroGenerator);
    }
    let ci = gen.class;
    let p = gen.prime;
    // Membership after extending scalars from Q to Q(zeta_p).
    if !cyc_in_rat_span(closure.span(ci, ci), &gen.block.flatten()) {
        return Ok(false);
    }
    let classes = closure.classes();
    for u in 0..classes {
        for t in closure.block_basis(u, ci) {
            let prod = t.promote(p).mul(&gen.block);
            if u == ci {
                if !is_scalar_multiple(&prod, &gen.block) {
                    return Ok(false);
                }
            } else if !prod.is_zero() {
                return Ok(false);
            }
        }
    }
    for v in 0..classes {
        for t in closure.block_basis(ci, v) {
            let prod = gen.block.mul(&t.promote(p));
            if v == ci {
                if !is_scalar_multiple(&prod, &gen.block) {
                    return Ok(false);
                }
            } else if !prod.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dense variant against a full closure span of `n x n` matrices; used to
/// cross-check the block route on small fixtures.
pub fn verify_one_dim_ideal_dense(
    t_basis: &MatrixSpan<Rat>,
    m: &Mat<Cyc>,
    prime: u32,
) -> Result<bool, WedderburnError> {
    if m.is_zero() {
        return Err(WedderburnError::ZeroGenerator);
    }
    if !cyc_in_rat_span(t_basis.span(), &m.flatten()) {
        return Ok(false);
    }
    for r in 0..t_basis.rank() {
        let t = t_basis.basis_matrix(r).promote(prime);
        if !is_scalar_multiple(&t.mul(m), m) || !is_scalar_multiple(&m.mul(&t), m) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All distinct pairs multiply to zero. Generators on different classes are
/// orthogonal by disjoint support; same-class pairs are multiplied out.
pub fn pairwise_orthogonal(gens: &[IdealGenerator]) -> bool {
    for (i, a) in gens.iter().enumerate() {
        for b in gens.iter().skip(i + 1) {
            if a.class != b.class {
                continue;
            }
            if !a.block.mul(&b.block).is_zero() || !b.block.mul(&a.block).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Loads a Camina class-3 fixture from an optional Cayley table path and
/// builds its generators. The paper exhibits no class-3 group, so without a
/// user-supplied table the family is unavailable.
pub fn cam3_fixture(
    path: Option<&std::path::Path>,
) -> Result<(FiniteGroup, Vec<IdealGenerator>), WedderburnError> {
    let path = path.ok_or(WedderburnError::FamilyUnavailable)?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| WedderburnError::Group(GroupError::BadCayley(e.to_string())))?;
    let g = crate::group::group_from_cayley_text(&text)?;
    let gens = cam3_generators(&g)?;
    Ok((g, gens))
}

/// Component counts of the class-3 decomposition for parameters `(p, k, n)`:
/// `(d+1)^2` and the W/X/Y family sizes.
pub fn cam3_component_counts(p: u64, k: u32, n: u32) -> (u128, u128, u128, u128) {
    let p = p as u128;
    let classes = p.pow(k) + p.pow(n) + p.pow(2 * n) - 2;
    let primary = classes * classes;
    let w = (p.pow(n) - 1) * (p.pow(k) - 1);
    let x = (p.pow(2 * n) - 1) * (p.pow(k) - 1);
    let y = (p.pow(2 * n) - 1) * (p.pow(n) - 1);
    (primary, w, x, y)
}

/// The accounting identity `(d+1)^2 + #W + #X + #Y = dim T` as a polynomial
/// identity in `(p, k, n)`.
pub fn cam3_identity_holds(p: u64, k: u32, n: u32) -> bool {
    let (primary, w, x, y) = cam3_component_counts(p, k, n);
    primary + w + x + y == crate::group::camina3_dimension(p, k, n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub label: String,
    pub verified: bool,
    pub idempotent: bool,
}

/// Wedderburn decomposition summary, serialized for the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub family: String,
    #[serde(rename = "dim_T")]
    pub dim_t: usize,
    pub primary_dim: usize,
    pub generators: Vec<GeneratorReport>,
    pub center_dim: usize,
    pub accounting_ok: bool,
    pub pairwise_orthogonal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Builds, verifies and accounts for the non-primary components of `T(G)`.
pub fn decomposition_report(g: &FiniteGroup) -> Result<DecompositionReport, WedderburnError> {
    let family = classify_family(g);
    let classes = conjugacy_classes(g);
    let scheme = group_scheme(g, &classes);
    let duals = dual_idempotents(&scheme, g.identity())?;
    let closure = block_closure(&scheme, &duals);
    let dim_t = closure.dim();
    let primary_dim = scheme.classes() * scheme.classes();
    let center_dim = center_dimension(&scheme, &closure);

    let gens = match family {
        FamilyLabel::Abelian => Vec::new(),
        FamilyLabel::FrobeniusPR { .. } => frobenius_idempotents(g)?,
        FamilyLabel::CaminaP2 { .. } => cam2_idempotents(g)?,
        FamilyLabel::CaminaP3 { .. } => cam3_generators(g)?,
        FamilyLabel::Z3sqQ8 => Vec::new(),
        FamilyLabel::NotAC => {
            return Err(WedderburnError::WrongFamily {
                expected: "an almost-commutative family".into(),
                found: "NotAC".into(),
            })
        }
    };
    let reports: Vec<GeneratorReport> = gens
        .iter()
        .map(|gen| {
            Ok(GeneratorReport {
                label: gen.label.to_string(),
                verified: verify_one_dim_ideal(&closure, gen)?,
                idempotent: gen.is_idempotent(),
            })
        })
        .collect::<Result<_, WedderburnError>>()?;
    let orthogonal = pairwise_orthogonal(&gens);
    let (accounting_ok, note) = match family {
        FamilyLabel::Abelian => (
            dim_t == g.order() * g.order() && center_dim == 1,
            Some("primary only".to_string()),
        ),
        FamilyLabel::Z3sqQ8 => {
            // No closed-form generators; certify the component structure by
            // the center dimension and the accounting 36 + 8 = 44.
            let ok = dim_t == 44
                && primary_dim == 36
                && center_dim == 9
                && primary_dim + (center_dim - 1) == dim_t;
            (
                ok,
                Some("component structure certified by center dimension".to_string()),
            )
        }
        _ => (
            dim_t == primary_dim + reports.len()
                && center_dim == 1 + reports.len()
                && reports.iter().all(|r| r.verified),
            None,
        ),
    };
    // Sanity: predicted dimension formula agrees with the closure.
    let predicted = dimension_formula(&family, g.order())?;
    let accounting_ok = accounting_ok && predicted == dim_t as u128;
    Ok(DecompositionReport {
        family: family.to_string(),
        dim_t,
        primary_dim,
        generators: reports,
        center_dim,
        accounting_ok,
        pairwise_orthogonal: orthogonal,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::linalg::rat_frac;
    use crate::terwilliger::{adjacency_matrix, algebra_closure};

    fn closure_of(g: &FiniteGroup) -> BlockClosure {
        let classes = conjugacy_classes(g);
        let scheme = group_scheme(g, &classes);
        let duals = dual_idempotents(&scheme, g.identity()).unwrap();
        block_closure(&scheme, &duals)
    }

    #[test]
    fn s3_frobenius_blocks_have_the_closed_form() {
        let g = build_group("frobenius:3:1").unwrap();
        let classes = conjugacy_classes(&g);
        let gens = frobenius_idempotents(&g).unwrap();
        assert_eq!(gens.len(), 2);
        for gen in &gens {
            let c = gen.support.len();
            let expect_off = if c == 2 { rat(-1) } else { rat_frac(-1, 2) };
            for a in 0..c {
                for b in 0..c {
                    let want = if a == b { rat(1) } else { expect_off.clone() };
                    assert_eq!(gen.block.get(a, b).as_rat().unwrap(), want);
                }
            }
            assert_eq!(classes.class(gen.class).len(), c);
        }
        let closure = closure_of(&g);
        for gen in &gens {
            assert!(verify_one_dim_ideal(&closure, gen).unwrap());
            // The Frobenius blocks square to a multiple of themselves but
            // are not idempotent.
            assert!(!gen.is_idempotent());
        }
        assert!(pairwise_orthogonal(&gens));
    }

    #[test]
    fn identity_matrix_is_not_a_one_dim_ideal() {
        let g = build_group("frobenius:3:1").unwrap();
        let classes = conjugacy_classes(&g);
        let scheme = group_scheme(&g, &classes);
        let duals = dual_idempotents(&scheme, 0).unwrap();
        let mut gens: Vec<Mat<Rat>> = (0..scheme.classes())
            .map(|i| adjacency_matrix(&scheme, i))
            .collect();
        gens.extend((0..scheme.classes()).map(|i| duals.matrix(i, scheme.size())));
        let (_, span) = algebra_closure(&gens).unwrap();
        let identity = Mat::identity_like(6, &rat(0)).promote(2);
        assert_eq!(verify_one_dim_ideal_dense(&span, &identity, 2), Ok(false));
    }

    #[test]
    fn q8_w_generators() {
        let g = build_group("q8").unwrap();
        let gens = cam2_idempotents(&g).unwrap();
        // (p^(n-k) - 1)(p^k - 1) = 3.
        assert_eq!(gens.len(), 3);
        let closure = closure_of(&g);
        for gen in &gens {
            assert!(gen.is_idempotent());
            assert!(verify_one_dim_ideal(&closure, gen).unwrap());
            // Block is 1/2 [[1,-1],[-1,1]] on each coset class.
            assert_eq!(gen.block.get(0, 0).as_rat().unwrap(), rat_frac(1, 2));
            assert_eq!(gen.block.get(0, 1).as_rat().unwrap(), rat_frac(-1, 2));
        }
        assert!(pairwise_orthogonal(&gens));
    }

    #[test]
    fn q8_generators_cross_check_against_dense_closure() {
        let g = build_group("q8").unwrap();
        let classes = conjugacy_classes(&g);
        let scheme = group_scheme(&g, &classes);
        let duals = dual_idempotents(&scheme, 0).unwrap();
        let mut mats: Vec<Mat<Rat>> = (0..scheme.classes())
            .map(|i| adjacency_matrix(&scheme, i))
            .collect();
        mats.extend((0..scheme.classes()).map(|i| duals.matrix(i, scheme.size())));
        let (_, span) = algebra_closure(&mats).unwrap();
        for gen in cam2_idempotents(&g).unwrap() {
            let full = gen.to_full(8);
            assert!(verify_one_dim_ideal_dense(&span, &full, gen.prime).unwrap());
        }
    }

    #[test]
    fn heisenberg_w_generators_are_cyclotomic_idempotents() {
        let g = build_group("heisenberg:3").unwrap();
        let gens = cam2_idempotents(&g).unwrap();
        assert_eq!(gens.len(), 16);
        let closure = closure_of(&g);
        for gen in &gens {
            assert!(gen.is_idempotent());
            assert!(verify_one_dim_ideal(&closure, gen).unwrap());
        }
        assert!(pairwise_orthogonal(&gens));
        // 121 + 16 = 137 against the class-2 dimension formula.
        assert_eq!(closure.dim(), 137);
    }

    #[test]
    fn cam3_counts_and_identity() {
        for (p, k, n) in [(2u64, 1u32, 2u32), (3, 1, 2), (2, 2, 2)] {
            assert!(cam3_identity_holds(p, k, n));
        }
        let (primary, w, x, y) = cam3_component_counts(2, 1, 2);
        assert_eq!(primary + w + x + y, 463);
    }

    #[test]
    fn cam3_requires_a_fixture() {
        let g = build_group("q8").unwrap();
        assert!(matches!(
            cam3_generators(&g),
            Err(WedderburnError::WrongFamily { .. })
        ));
        assert!(matches!(
            cam3_fixture(None),
            Err(WedderburnError::FamilyUnavailable)
        ));
    }

    #[test]
    fn y_block_formula_is_idempotent_on_a_model() {
        // Model block algebra: the regular representation of H = Z_2^3 with
        // central subgroup Z = <(0,0,1)>; H/Z = Z_2^2 matches (p,k,n) =
        // (2,1,2). This is the same algebra the Y formula acts on inside a
        // genuine class-3 block, so it pins the summation conventions.
        let h = build_group("prod:cyclic:2,cyclic:2,cyclic:2").unwrap();
        let support: Vec<usize> = (0..8).collect();
        let center = vec![0usize, 1];
        let basis_cosets = vec![vec![4usize, 5], vec![2usize, 3]];
        for gamma in [vec![0u32, 1], vec![1, 0], vec![1, 1]] {
            let y = cam3_y_block(&h, &support, &center, &basis_cosets, 2, 1, &gamma);
            assert_eq!(y.mul(&y), y, "Y({gamma:?}) not idempotent");
            // Central permutations act on Y by scalars.
            let perm = Mat::from_fn(8, 8, |a, b| {
                if h.mul(1, a) == b {
                    Cyc::one(2)
                } else {
                    Cyc::zero(2)
                }
            });
            assert!(is_scalar_multiple(&perm.mul(&y), &y));
        }
    }

    #[test]
    fn decomposition_reports() {
        let s3 = build_group("frobenius:3:1").unwrap();
        let r = decomposition_report(&s3).unwrap();
        assert_eq!(r.dim_t, 11);
        assert_eq!(r.primary_dim, 9);
        assert_eq!(r.generators.len(), 2);
        assert!(r.accounting_ok);
        assert!(r.pairwise_orthogonal);

        let q8 = build_group("q8").unwrap();
        let r = decomposition_report(&q8).unwrap();
        assert_eq!((r.dim_t, r.primary_dim, r.generators.len()), (28, 25, 3));
        assert!(r.accounting_ok);

        let z6 = build_group("cyclic:6").unwrap();
        let r = decomposition_report(&z6).unwrap();
        assert_eq!(r.dim_t, 36);
        assert!(r.accounting_ok);
        assert_eq!(r.note.as_deref(), Some("primary only"));

        let s4 = crate::group::symmetric_group(4);
        assert!(decomposition_report(&s4).is_err());
    }
}
