//! Checking that a group scheme equals a wreath product of factor schemes
//! along a normal subgroup chain.
//!
//! For a chain `N_1 <= N_2 <= ... <= N_r` of normal subgroups, the candidate
//! factorization is `S_0 wr S_1 wr ... wr S_r` where `S_0` lives on `N_1`,
//! `S_k` on `N_{k+1}/N_k`, and `S_r` on `G/N_r`. Each factor is either the
//! trivial scheme, the group scheme of the actual subquotient, or the group
//! scheme of an abstract comparison group (aligned by an explicit
//! isomorphism found by search).

use super::reorder::{coset_reorder, schemes_equal};
use super::wreath::wreath_all;
use super::{group_scheme, trivial_scheme, AssociationScheme, SchemeError};
use crate::group::{
    conjugacy_classes, find_isomorphism, quotient_group, subgroup_as_group, FiniteGroup, GroupError,
};

/// What to compare each wreath slot against.
#[derive(Debug, Clone)]
pub enum WreathFactor {
    /// The trivial scheme `K_m` on the subquotient's points.
    Trivial,
    /// The group scheme of the subquotient itself.
    Subquotient,
    /// The group scheme of an explicitly built comparison group; an
    /// isomorphism onto the subquotient must exist and is searched for.
    Abstract(FiniteGroup),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WreathEqError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("factor {0}: comparison group of order {1} is not isomorphic to the subquotient of order {2}")]
    NoIsomorphism(usize, usize, usize),
    #[error("expected {0} factors for a chain of length {1}")]
    FactorCount(usize, usize),
}

/// The subquotient tower of a chain: `N_1`, `N_2/N_1`, ..., `G/N_r`,
/// each as a group in the deterministic element order used by
/// [`coset_reorder`].
pub fn subquotient_tower(
    g: &FiniteGroup,
    chain: &[Vec<usize>],
) -> Result<Vec<FiniteGroup>, GroupError> {
    assert!(!chain.is_empty());
    let mut tower = Vec::with_capacity(chain.len() + 1);
    let (first, _) = subgroup_as_group(g, &chain[0])?;
    tower.push(first);
    for k in 1..chain.len() {
        let (big, members) = subgroup_as_group(g, &chain[k])?;
        let image: Vec<usize> = chain[k - 1]
            .iter()
            .map(|x| members.iter().position(|m| m == x).unwrap())
            .collect();
        tower.push(quotient_group(&big, &image)?.group);
    }
    let top = quotient_group(g, chain.last().unwrap())?;
    tower.push(top.group);
    Ok(tower)
}

/// Verifies `G(g) = S_0 wr ... wr S_r` along the chain. Returns the built
/// wreath scheme and the verdict.
pub fn check_wreath_factorization(
    g: &FiniteGroup,
    scheme: &AssociationScheme,
    chain: &[Vec<usize>],
    factors: &[WreathFactor],
) -> Result<(bool, AssociationScheme), WreathEqError> {
    if factors.len() != chain.len() + 1 {
        return Err(WreathEqError::FactorCount(factors.len(), chain.len()));
    }
    let tower = subquotient_tower(g, chain)?;
    let mut factor_schemes = Vec::with_capacity(factors.len());
    let mut position_maps: Vec<Vec<usize>> = Vec::with_capacity(factors.len());
    for (idx, (factor, sq)) in factors.iter().zip(&tower).enumerate() {
        match factor {
            WreathFactor::Trivial => {
                factor_schemes.push(trivial_scheme(sq.order())?);
                position_maps.push((0..sq.order()).collect());
            }
            WreathFactor::Subquotient => {
                factor_schemes.push(group_scheme(sq, &conjugacy_classes(sq)));
                position_maps.push((0..sq.order()).collect());
            }
            WreathFactor::Abstract(a) => {
                let iso = find_isomorphism(a, sq).ok_or(WreathEqError::NoIsomorphism(
                    idx,
                    a.order(),
                    sq.order(),
                ))?;
                factor_schemes.push(group_scheme(a, &conjugacy_classes(a)));
                position_maps.push(iso);
            }
        }
    }
    let w = wreath_all(&factor_schemes);
    let order = coset_reorder(g, chain)?;
    // Transport a wreath point (mixed radix, innermost digit first) through
    // the per-level isomorphisms into a position of the coset ordering.
    let sizes: Vec<usize> = tower.iter().map(|t| t.order()).collect();
    let n = g.order();
    let mut bijection = vec![0usize; n];
    for p in 0..n {
        let mut rest = p;
        let mut q = 0usize;
        let mut stride = 1usize;
        for (size, map) in sizes.iter().zip(&position_maps) {
            let digit = rest % size;
            rest /= size;
            q += map[digit] * stride;
            stride *= size;
        }
        bijection[p] = order[q];
    }
    let holds = schemes_equal(&w, scheme, &bijection)?;
    Ok((holds, w))
}
