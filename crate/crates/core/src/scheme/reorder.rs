//! Coset reorderings and scheme equality under an explicit bijection.

use super::{AssociationScheme, SchemeError};
use crate::group::{cosets_of, is_normal, is_subgroup, FiniteGroup, GroupError};

/// Orders the elements of `g` so that `N_1`-cosets are contiguous inside
/// `N_2`-cosets, and so on up the chain. Returns the ordering as a list
/// `position -> element`.
///
/// The chain is a tower `N_1 <= N_2 <= ...` of normal subgroups. The default
/// transversal is deterministic: cosets at each level are ordered by least
/// element, and each coset is the translate (by its least element) of the
/// recursively ordered level below.
pub fn coset_reorder(g: &FiniteGroup, chain: &[Vec<usize>]) -> Result<Vec<usize>, GroupError> {
    for (idx, sub) in chain.iter().enumerate() {
        if !is_subgroup(g, sub) {
            return Err(GroupError::NotSubgroup(format!("chain member {idx}")));
        }
        if !is_normal(g, sub) {
            return Err(GroupError::NotNormal(format!("chain member {idx}")));
        }
        if idx > 0 {
            let prev: std::collections::HashSet<usize> = chain[idx - 1].iter().copied().collect();
            if !prev.iter().all(|x| sub.contains(x)) {
                return Err(GroupError::NotSubgroup(format!(
                    "chain member {} is not contained in member {idx}",
                    idx - 1
                )));
            }
        }
    }
    let blocks = order_levels(g, chain, chain.len());
    Ok(blocks)
}

/// Recursive elaboration of the coset ordering: at level `k` the elements
/// are grouped by `chain[k-1]`-cosets; level 0 lists raw elements.
fn order_levels(g: &FiniteGroup, chain: &[Vec<usize>], level: usize) -> Vec<usize> {
    if level == 0 {
        return vec![g.identity()];
    }
    let sub = &chain[level - 1];
    let inner = order_levels_within(g, chain, level - 1, sub);
    let cosets = cosets_of(g, sub);
    let mut out = Vec::with_capacity(g.order());
    for coset in cosets {
        let rep = coset[0];
        out.extend(inner.iter().map(|&x| g.mul(rep, x)));
    }
    out
}

/// Orders the member list of `sub` by grouping its own `chain[..level]`
/// cosets; the base level lists members ascending with the identity first.
fn order_levels_within(
    g: &FiniteGroup,
    chain: &[Vec<usize>],
    level: usize,
    sub: &[usize],
) -> Vec<usize> {
    if level == 0 {
        let mut members = sub.to_vec();
        members.sort_unstable();
        members.retain(|&x| x != g.identity());
        members.insert(0, g.identity());
        return members;
    }
    let inner = order_levels_within(g, chain, level - 1, &chain[level - 1]);
    let member_set: std::collections::HashSet<usize> = sub.iter().copied().collect();
    let mut seen: std::collections::HashSet<usize> = std::collections::HashSet::new();
    let mut reps: Vec<usize> = Vec::new();
    let mut sorted = sub.to_vec();
    sorted.sort_unstable();
    for &x in &sorted {
        if seen.contains(&x) {
            continue;
        }
        reps.push(x);
        for &s in &chain[level - 1] {
            seen.insert(g.mul(x, s));
        }
    }
    // Identity coset first (its least element may not be globally least).
    if let Some(pos) = reps.iter().position(|&r| {
        chain[level - 1]
            .iter()
            .any(|&s| g.mul(r, s) == g.identity())
    }) {
        let r = reps.remove(pos);
        reps.insert(0, r);
    }
    let mut out = Vec::with_capacity(sub.len());
    for rep in reps {
        for &x in &inner {
            let y = g.mul(rep, x);
            debug_assert!(member_set.contains(&y));
            out.push(y);
        }
    }
    out
}

/// Scheme equality under an explicit point bijection `map: a -> b`, up to a
/// relabeling of colors: true iff the color partitions agree as sets of 0/1
/// matrices after transport.
pub fn schemes_equal(
    a: &AssociationScheme,
    b: &AssociationScheme,
    map: &[usize],
) -> Result<bool, SchemeError> {
    if a.size() != b.size() {
        return Err(SchemeError::SizeMismatch(a.size(), b.size()));
    }
    let n = a.size();
    if map.len() != n {
        return Err(SchemeError::BadBijection(n));
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || seen[m] {
            return Err(SchemeError::BadBijection(n));
        }
        seen[m] = true;
    }
    if a.d() != b.d() {
        return Ok(false);
    }
    let mut relabel = vec![u32::MAX; a.d() + 1];
    for x in 0..n {
        for y in 0..n {
            let ca = a.color(x, y);
            let cb = b.color(map[x], map[y]) as u32;
            if relabel[ca] == u32::MAX {
                relabel[ca] = cb;
            } else if relabel[ca] != cb {
                return Ok(false);
            }
        }
    }
    // Well-defined and, since both sides have d+1 colors on the same point
    // count, automatically bijective.
    Ok(true)
}
