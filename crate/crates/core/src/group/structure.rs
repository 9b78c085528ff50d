//! Conjugacy classes, characteristic subgroups and Camina predicates.

use super::sub::subgroup_closure;
use super::{FiniteGroup, GroupError};

/// The conjugacy classes of a group in a fixed deterministic order.
///
/// Ordering: the identity class first, then classes inside the center, then
/// the remaining classes inside the derived subgroup, then everything else;
/// ties broken by least element. For a Camina p-group this puts the central
/// singletons first, then the classes in `G' \ Z(G)`, then the coset
/// classes, which is the order the Wedderburn constructions index by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    star: Vec<usize>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Index of the class of inverses of class `i`.
    pub fn star(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ClassPartition {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        let mut seen = vec![false; n];
        for t in 0..n {
            let c = g.conj(x, t);
            if !seen[c] {
                seen[c] = true;
                members.push(c);
            }
        }
        members.sort_unstable();
        let idx = raw.len();
        for &m in &members {
            class_of[m] = idx;
        }
        raw.push(members);
    }

    let center = center_elements(g);
    let derived = derived_subgroup(g);
    let in_center: Vec<bool> = flag_set(n, &center);
    let in_derived: Vec<bool> = flag_set(n, &derived);
    let tier = |class: &Vec<usize>| -> u8 {
        let rep = class[0];
        if rep == g.identity() {
            0
        } else if class.iter().all(|&x| in_center[x]) {
            1
        } else if class.iter().all(|&x| in_derived[x]) {
            2
        } else {
            3
        }
    };
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&i| (tier(&raw[i]), raw[i][0]));
    let classes: Vec<Vec<usize>> = order.iter().map(|&i| raw[i].clone()).collect();
    let mut class_of = vec![usize::MAX; n];
    for (i, c) in classes.iter().enumerate() {
        for &m in c {
            class_of[m] = i;
        }
    }
    let star: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c[0])]).collect();
    ClassPartition {
        classes,
        class_of,
        star,
    }
}

fn flag_set(n: usize, set: &[usize]) -> Vec<bool> {
    let mut f = vec![false; n];
    for &x in set {
        f[x] = true;
    }
    f
}

pub fn center_elements(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order())
        .filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect()
}

pub fn derived_subgroup(g: &FiniteGroup) -> Vec<usize> {
    let comms: Vec<usize> = (0..g.order())
        .flat_map(|a| (0..g.order()).map(move |b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    subgroup_closure(g, &comms)
}

/// Center, derived subgroup, lower central series and nilpotency class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSeries {
    pub center: Vec<usize>,
    pub derived: Vec<usize>,
    /// `gamma_1 = G, gamma_2 = [G,G], ...` until stabilization.
    pub lower_central: Vec<Vec<usize>>,
    /// `Some(c)` when `gamma_{c+1}` is trivial; `None` when the series
    /// stabilizes above the identity.
    pub nilpotency_class: Option<usize>,
}

pub fn subgroup_series(g: &FiniteGroup) -> SubgroupSeries {
    let center = center_elements(g);
    let derived = derived_subgroup(g);
    let mut lower_central: Vec<Vec<usize>> = vec![(0..g.order()).collect()];
    loop {
        let prev = lower_central.last().unwrap();
        let comms: Vec<usize> = prev
            .iter()
            .flat_map(|&a| (0..g.order()).map(move |b| (a, b)))
            .map(|(a, b)| g.commutator(a, b))
            .collect();
        let next = subgroup_closure(g, &comms);
        if &next == prev {
            break;
        }
        let stop = next.len() == 1;
        lower_central.push(next);
        if stop {
            break;
        }
    }
    let nilpotency_class = if lower_central.last().unwrap().len() == 1 {
        Some(lower_central.len() - 1)
    } else {
        None
    };
    SubgroupSeries {
        center,
        derived,
        lower_central,
        nilpotency_class,
    }
}

/// Camina predicate with the convention `{e} != G' != G`, so abelian groups
/// are not Camina. True iff every class outside `G'` is a full coset of `G'`.
pub fn is_camina(g: &FiniteGroup) -> bool {
    let derived = derived_subgroup(g);
    if derived.len() == 1 || derived.len() == g.order() {
        return false;
    }
    let in_derived = flag_set(g.order(), &derived);
    let classes = conjugacy_classes(g);
    for class in classes.classes() {
        if in_derived[class[0]] {
            continue;
        }
        // The class of x outside G' must equal the coset x G'.
        let x = class[0];
        let mut coset: Vec<usize> = derived.iter().map(|&d| g.mul(x, d)).collect();
        coset.sort_unstable();
        if &coset != class {
            return false;
        }
    }
    true
}

/// Whether `g` is a p-group, returning the prime.
pub fn p_group_prime(g: &FiniteGroup) -> Option<u64> {
    let n = g.order() as u64;
    if n == 1 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    let p = if p * p > n { n } else { p };
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Checks the full class structure of a Camina p-group:
/// classes are cosets of `gamma_2` outside `gamma_2`, cosets of `gamma_3` on
/// `gamma_2 \ gamma_3`, and singletons on `gamma_3`; the center is
/// elementary abelian; and in class 3 the index data is `|G:G'| = p^(2n)`,
/// `|G':Z| = p^n` with `n` even.
pub fn camina_class_structure_check(g: &FiniteGroup) -> Result<bool, GroupError> {
    let prime = p_group_prime(g).ok_or_else(|| GroupError::WrongKind {
        expected: "a Camina p-group".into(),
        found: "not a p-group".into(),
    })?;
    if !is_camina(g) {
        return Err(GroupError::WrongKind {
            expected: "a Camina p-group".into(),
            found: "not a Camina group".into(),
        });
    }
    let series = subgroup_series(g);
    let gamma2 = series.lower_central.get(1).cloned().unwrap_or_default();
    let gamma3 = if series.lower_central.len() > 2 {
        series.lower_central[2].clone()
    } else {
        vec![g.identity()]
    };
    let in_g2 = flag_set(g.order(), &gamma2);
    let in_g3 = flag_set(g.order(), &gamma3);
    let classes = conjugacy_classes(g);
    for class in classes.classes() {
        let x = class[0];
        let expected: Vec<usize> = if !in_g2[x] {
            let mut c: Vec<usize> = gamma2.iter().map(|&d| g.mul(x, d)).collect();
            c.sort_unstable();
            c
        } else if !in_g3[x] {
            let mut c: Vec<usize> = gamma3.iter().map(|&d| g.mul(x, d)).collect();
            c.sort_unstable();
            c
        } else {
            vec![x]
        };
        if class != &expected {
            return Ok(false);
        }
    }
    // Z(G) elementary abelian.
    if !series
        .center
        .iter()
        .all(|&z| z == g.identity() || g.element_order(z) == prime as usize)
    {
        return Ok(false);
    }
    if series.nilpotency_class == Some(3) {
        let z = series.center.len() as u64;
        let gp = gamma2.len() as u64;
        let idx_g_gp = g.order() as u64 / gp;
        let idx_gp_z = gp / z;
        // |G':Z| = p^n with n even and |G:G'| = p^(2n).
        let n = log_exact(idx_gp_z, prime);
        match n {
            Some(n) if n % 2 == 0 && idx_g_gp == prime.pow(2 * n) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

pub(crate) fn log_exact(mut value: u64, base: u64) -> Option<u32> {
    let mut e = 0;
    while value > 1 {
        if !value.is_multiple_of(base) {
            return None;
        }
        value /= base;
        e += 1;
    }
    Some(e)
}
