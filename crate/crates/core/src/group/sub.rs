//! Subgroups, quotients and small-group isomorphism search.

use super::{FiniteGroup, GroupError};

/// Smallest subgroup containing `seed`, as a sorted element list.
pub fn subgroup_closure(g: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut in_set = vec![false; n];
    in_set[g.identity()] = true;
    let mut members = vec![g.identity()];
    let mut queue: Vec<usize> = Vec::new();
    for &s in seed {
        if !in_set[s] {
            in_set[s] = true;
            members.push(s);
            queue.push(s);
        }
    }
    while let Some(x) = queue.pop() {
        let snapshot: Vec<usize> = members.clone();
        for &y in &snapshot {
            for z in [g.mul(x, y), g.mul(y, x), g.inv(x)] {
                if !in_set[z] {
                    in_set[z] = true;
                    members.push(z);
                    queue.push(z);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

pub fn is_subgroup(g: &FiniteGroup, set: &[usize]) -> bool {
    let mut in_set = vec![false; g.order()];
    for &x in set {
        in_set[x] = true;
    }
    in_set[g.identity()]
        && set
            .iter()
            .all(|&a| in_set[g.inv(a)] && set.iter().all(|&b| in_set[g.mul(a, b)]))
}

pub fn is_normal(g: &FiniteGroup, set: &[usize]) -> bool {
    let mut in_set = vec![false; g.order()];
    for &x in set {
        in_set[x] = true;
    }
    set.iter()
        .all(|&a| (0..g.order()).all(|t| in_set[g.conj(a, t)]))
}

/// Left cosets of a subgroup, ordered by least element (so the identity
/// coset comes first), each coset sorted.
pub fn cosets_of(g: &FiniteGroup, sub: &[usize]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut coset: Vec<usize> = sub.iter().map(|&s| g.mul(x, s)).collect();
        coset.sort_unstable();
        for &c in &coset {
            seen[c] = true;
        }
        cosets.push(coset);
    }
    cosets.sort_by_key(|c| c[0]);
    cosets
}

/// A quotient group together with its coset bookkeeping.
#[derive(Debug, Clone)]
pub struct QuotientData {
    pub group: FiniteGroup,
    /// Cosets in quotient-element order.
    pub cosets: Vec<Vec<usize>>,
    /// Quotient element of each original element.
    pub coset_of: Vec<usize>,
}

pub fn quotient_group(g: &FiniteGroup, sub: &[usize]) -> Result<QuotientData, GroupError> {
    if !is_subgroup(g, sub) {
        return Err(GroupError::NotSubgroup(format!("{sub:?}")));
    }
    if !is_normal(g, sub) {
        return Err(GroupError::NotNormal(format!("{sub:?}")));
    }
    let cosets = cosets_of(g, sub);
    let m = cosets.len();
    let mut coset_of = vec![usize::MAX; g.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c {
            coset_of[x] = i;
        }
    }
    let mut table = vec![0u32; m * m];
    for (i, ci) in cosets.iter().enumerate() {
        for (j, cj) in cosets.iter().enumerate() {
            table[i * m + j] = coset_of[g.mul(ci[0], cj[0])] as u32;
        }
    }
    let identity = coset_of[g.identity()];
    Ok(QuotientData {
        group: FiniteGroup::from_table_trusted(m, table, identity),
        cosets,
        coset_of,
    })
}

/// A subgroup reindexed as a group of its own; returns the group and the
/// member list in the new element order (identity first, then ascending).
pub fn subgroup_as_group(
    g: &FiniteGroup,
    sub: &[usize],
) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    if !is_subgroup(g, sub) {
        return Err(GroupError::NotSubgroup(format!("{sub:?}")));
    }
    let mut members: Vec<usize> = sub.to_vec();
    members.sort_unstable();
    members.retain(|&x| x != g.identity());
    members.insert(0, g.identity());
    let pos: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let m = members.len();
    let mut table = vec![0u32; m * m];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            table[i * m + j] = pos[&g.mul(a, b)] as u32;
        }
    }
    Ok((FiniteGroup::from_table_trusted(m, table, 0), members))
}

/// Preimage in `g` of the center of `g / sub`. Used to build the normal
/// chain of the order-72 group.
pub fn centralizing_preimage(g: &FiniteGroup, sub: &[usize]) -> Result<Vec<usize>, GroupError> {
    let q = quotient_group(g, sub)?;
    let central = super::structure::center_elements(&q.group);
    let mut out = Vec::new();
    for &c in &central {
        out.extend_from_slice(&q.cosets[c]);
    }
    out.sort_unstable();
    Ok(out)
}

/// Greedy small generating set: repeatedly adjoin the least element outside
/// the closure so far.
fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = vec![g.identity()];
    while closure.len() < g.order() {
        let next = (0..g.order())
            .find(|x| closure.binary_search(x).is_err())
            .unwrap();
        gens.push(next);
        closure = subgroup_closure(g, &gens);
    }
    gens
}

/// Brute-force isomorphism search for small groups.
///
/// Assigns images of a greedy generating set among order-matching elements
/// and extends multiplicatively; returns the element bijection `a -> b` on
/// success. Exponential in the generator count, which stays at 1-2 for the
/// abelian quotients this is used on.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    if n == 1 {
        return Some(vec![b.identity()]);
    }
    let gens = generating_set(a);
    // Express every element of `a` as parent * generator for rebuilding maps.
    let mut expr: Vec<Option<(usize, usize)>> = vec![None; n]; // (parent, gen index)
    let mut reached = vec![false; n];
    reached[a.identity()] = true;
    let mut frontier = vec![a.identity()];
    while let Some(x) = frontier.pop() {
        for (gi, &gen) in gens.iter().enumerate() {
            let y = a.mul(x, gen);
            if !reached[y] {
                reached[y] = true;
                expr[y] = Some((x, gi));
                frontier.push(y);
            }
        }
    }
    debug_assert!(reached.iter().all(|&r| r));

    let orders_b: Vec<usize> = (0..n).map(|x| b.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&gen| {
            let o = a.element_order(gen);
            (0..n).filter(|&x| orders_b[x] == o).collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }

    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let images: Vec<usize> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| candidates[i][c])
            .collect();
        if let Some(map) = try_extend(a, b, &expr, &images) {
            return Some(map);
        }
        // Advance the mixed-radix counter over candidate tuples.
        for i in 0..choice.len() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        return None;
    }
}

fn try_extend(
    a: &FiniteGroup,
    b: &FiniteGroup,
    expr: &[Option<(usize, usize)>],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[a.identity()] = b.identity();
    // Elements in BFS order have parents already mapped; resolve by depth.
    let mut pending: Vec<usize> = (0..n).filter(|&x| x != a.identity()).collect();
    while !pending.is_empty() {
        let before = pending.len();
        pending.retain(|&x| {
            let (parent, gi) = expr[x].expect("all elements reached");
            if map[parent] == usize::MAX {
                return true;
            }
            map[x] = b.mul(map[parent], images[gi]);
            false
        });
        if pending.len() == before {
            unreachable!("expression dag is acyclic");
        }
    }
    let mut seen = vec![false; n];
    for &y in map.iter() {
        if seen[y] {
            return None;
        }
        seen[y] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}
