//! The almost-commutative family classifier and its dimension formulas.
//!
//! Families: abelian groups; the Frobenius groups `Z_p^r x| Z_{p^r-1}`;
//! Camina p-groups of nilpotency class 2 or 3; and the exceptional group
//! `Z_3^2 x| Q8` of order 72. Everything else is labelled `NotAC`. The
//! classifier works from invariants only (orders, class data, Camina
//! structure) and never does general isomorphism testing; the catalog tests
//! pin it against the independent class-product criterion.

use super::structure::{conjugacy_classes, is_camina, log_exact, p_group_prime, subgroup_series};
use super::{is_prime, FiniteGroup, GroupError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyLabel {
    Abelian,
    /// `Z_p^r x| Z_{p^r - 1}`.
    FrobeniusPR {
        p: u64,
        r: u32,
    },
    /// Camina p-group of class 2 with `|G| = p^n`, `|Z(G)| = p^k`.
    CaminaP2 {
        p: u64,
        n: u32,
        k: u32,
    },
    /// Camina p-group of class 3 with `|Z(G)| = p^k`, `|G' : Z(G)| = p^n`.
    CaminaP3 {
        p: u64,
        n: u32,
        k: u32,
    },
    /// The order-72 group `Z_3^2 x| Q8`.
    Z3sqQ8,
    NotAC,
}

impl std::fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyLabel::Abelian => write!(f, "Abelian"),
            FamilyLabel::FrobeniusPR { p, r } => write!(f, "FrobeniusPR({p},{r})"),
            FamilyLabel::CaminaP2 { p, n, k } => write!(f, "CaminaP2({p},{n},{k})"),
            FamilyLabel::CaminaP3 { p, n, k } => write!(f, "CaminaP3({p},{n},{k})"),
            FamilyLabel::Z3sqQ8 => write!(f, "Z3sqQ8"),
            FamilyLabel::NotAC => write!(f, "NotAC"),
        }
    }
}

pub fn classify_family(g: &FiniteGroup) -> FamilyLabel {
    if g.is_abelian() {
        return FamilyLabel::Abelian;
    }
    if !is_camina(g) {
        return FamilyLabel::NotAC;
    }
    let series = subgroup_series(g);
    if let Some(p) = p_group_prime(g) {
        let n = log_exact(g.order() as u64, p).expect("p-group order");
        let k = log_exact(series.center.len() as u64, p).expect("center of a p-group");
        match series.nilpotency_class {
            Some(2) => return FamilyLabel::CaminaP2 { p, n, k },
            Some(3) => {
                let gp = series.derived.len() as u64;
                let n3 = match log_exact(gp / series.center.len() as u64, p) {
                    Some(v) => v,
                    None => return FamilyLabel::NotAC,
                };
                // Macdonald: |G:G'| = p^(2n) with n even.
                if n3 % 2 != 0 || g.order() as u64 / gp != p.pow(2 * n3) {
                    return FamilyLabel::NotAC;
                }
                return FamilyLabel::CaminaP3 { p, n: n3, k };
            }
            _ => return FamilyLabel::NotAC,
        }
    }
    let classes = conjugacy_classes(g);
    // Frobenius fingerprint: |G| = q(q-1) with q = |G'| = p^r, G' elementary
    // abelian, and exactly q conjugacy classes.
    let q = series.derived.len() as u64;
    if let Some((p, r)) = prime_power(q) {
        if (g.order() as u64) == q * (q - 1)
            && classes.len() as u64 == q
            && series
                .derived
                .iter()
                .all(|&x| x == g.identity() || g.element_order(x) == p as usize)
        {
            return FamilyLabel::FrobeniusPR { p, r };
        }
    }
    // Order-72 fingerprint for Z_3^2 x| Q8: 6 classes of sizes 1,8,9,18,18,18.
    if g.order() == 72 {
        let mut sizes = classes.sizes();
        sizes.sort_unstable();
        if sizes == vec![1, 8, 9, 18, 18, 18] {
            return FamilyLabel::Z3sqQ8;
        }
    }
    FamilyLabel::NotAC
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    let p = if p * p > q { q } else { p };
    if !is_prime(p) {
        return None;
    }
    log_exact(q, p).map(|r| (p, r))
}

/// The exact Terwilliger dimension predicted for each family.
pub fn dimension_formula(label: &FamilyLabel, order: usize) -> Result<u128, GroupError> {
    let val = match label {
        FamilyLabel::Abelian => (order as u128) * (order as u128),
        FamilyLabel::FrobeniusPR { p, r } => {
            let q = (*p as u128).pow(*r);
            q * q + q - 1
        }
        FamilyLabel::CaminaP2 { p, n, k } => {
            let p = *p as u128;
            let a = p.pow(n - k) + p.pow(*k) - 1;
            a * (a - 1) + p.pow(*n)
        }
        FamilyLabel::CaminaP3 { p, n, k } => camina3_dimension(*p, *k, *n),
        FamilyLabel::Z3sqQ8 => 44,
        FamilyLabel::NotAC => {
            return Err(GroupError::WrongKind {
                expected: "an almost-commutative family".into(),
                found: "NotAC".into(),
            })
        }
    };
    Ok(val)
}

/// Class-3 dimension polynomial in `(p, k, n)`:
/// `3p^(k+n) + 3p^(k+2n) + p^(2k) - 6p^k + p^(4n) + 3p^(3n) - 5p^(2n) - 6p^n + 7`.
pub fn camina3_dimension(p: u64, k: u32, n: u32) -> u128 {
    let p = p as i128;
    let v = 3 * p.pow(k + n) + 3 * p.pow(k + 2 * n) + p.pow(2 * k) - 6 * p.pow(k)
        + p.pow(4 * n)
        + 3 * p.pow(3 * n)
        - 5 * p.pow(2 * n)
        - 6 * p.pow(n)
        + 7;
    v as u128
}
