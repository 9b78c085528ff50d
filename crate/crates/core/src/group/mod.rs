//! Finite group construction and structural analysis.
//!
//! Groups are plain multiplication tables over element indices `0..n-1`.
//! Constructors cover the families needed for the almost-commutative
//! classification (cyclic groups and products, dihedral groups, Q8, the
//! Heisenberg groups, the Frobenius groups `GF(p^r) x| GF(p^r)^*`, the
//! order-72 group `Z3^2 x| Q8`, and explicit semidirect products); anything
//! else arrives as an ingested Cayley table.

mod build;
mod cayley;
mod family;
mod gf;
mod structure;
mod sub;

pub use build::{
    build_group, build_parsed, cyclic, dihedral, frobenius_field_group, heisenberg, parse_spec,
    product, quaternion, semidirect, symmetric_group, z3sq_q8, GroupSpec,
};
pub use cayley::{group_from_cayley_text, group_to_cayley_text};
pub use family::{camina3_dimension, classify_family, dimension_formula, FamilyLabel};
pub use structure::{
    camina_class_structure_check, center_elements, conjugacy_classes, derived_subgroup, is_camina,
    p_group_prime, subgroup_series, ClassPartition, SubgroupSeries,
};
pub use sub::{
    centralizing_preimage, cosets_of, find_isomorphism, is_normal, is_subgroup, quotient_group,
    subgroup_as_group, subgroup_closure, QuotientData,
};

/// Errors from group construction and ingestion.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("malformed group spec: {0}")]
    MalformedSpec(String),
    #[error("not a group: row {0} is not a permutation of the elements")]
    NotLatinRow(usize),
    #[error("not a group: column {0} is not a permutation of the elements")]
    NotLatinColumn(usize),
    #[error("not a group: no two-sided identity element")]
    NoIdentity,
    #[error("not associative at (i,j,k)=({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("heisenberg:{0} rejected: p must be an odd prime")]
    HeisenbergEven(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("frobenius:{0}:{1} rejected: the multiplicative complement is trivial")]
    TrivialComplement(u64, u32),
    #[error("semidirect action of element {0} is not an automorphism")]
    NotAutomorphism(usize),
    #[error("semidirect action is not a homomorphism at ({0},{1})")]
    ActionNotHomomorphism(usize, usize),
    #[error("bad cayley table: {0}")]
    BadCayley(String),
    #[error("{0} is not a subgroup")]
    NotSubgroup(String),
    #[error("{0} is not a normal subgroup")]
    NotNormal(String),
    #[error("group of order {0} exceeds the order cap {1}")]
    OrderCap(usize, usize),
    #[error("operation requires {expected}, got {found}")]
    WrongKind { expected: String, found: String },
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major table: entry `(i, j)` is the product `i * j`.
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

impl FiniteGroup {
    /// Builds from a table assumed correct (internal constructors only).
    pub(crate) fn from_table_trusted(order: usize, table: Vec<u32>, identity: usize) -> Self {
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| table[a * order + b] as usize == identity)
                .expect("constructed table must have inverses");
            inverse[a] = inv as u32;
        }
        FiniteGroup {
            order,
            table,
            identity,
            inverse,
        }
    }

    /// Validates a candidate table: Latin square, two-sided identity,
    /// inverses, and full associativity.
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        assert_eq!(table.len(), order * order);
        let n = order;
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = table[i * n + j] as usize;
                let c = table[j * n + i] as usize;
                if r >= n || seen_row[r] {
                    return Err(GroupError::NotLatinRow(i));
                }
                if c >= n || seen_col[c] {
                    return Err(GroupError::NotLatinColumn(i));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x)
            })
            .ok_or(GroupError::NoIdentity)?;
        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j] as usize;
                for k in 0..n {
                    let jk = table[j * n + k] as usize;
                    if table[ij * n + k] != table[i * n + jk] {
                        return Err(GroupError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        // Latin + identity + associativity already force inverses; recover them.
        Ok(Self::from_table_trusted(order, table, identity))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Conjugate `g^x = x * g * x^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    /// Commutator `[a, b] = a * b * a^-1 * b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_table_rejects_broken_tables() {
        // 2x2 with a repeated entry in a row.
        let t = vec![0, 0, 1, 0];
        assert_eq!(
            FiniteGroup::from_table(2, t).unwrap_err(),
            GroupError::NotLatinRow(0)
        );
    }

    #[test]
    fn from_table_detects_non_associativity() {
        // A Latin square with identity that is not a group: order 5 loop.
        // Rows form a quasigroup with identity 0 but x*(y*z) != (x*y)*z.
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        match FiniteGroup::from_table(5, t) {
            Err(GroupError::NotAssociative(_, _, _)) => {}
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn constructed_groups_validate() {
        for spec in ["cyclic:6", "dihedral:4", "q8", "frobenius:2:2"] {
            let g = build_group(spec).unwrap();
            let revalidated = FiniteGroup::from_table(g.order(), g.table.clone()).unwrap();
            assert_eq!(revalidated, g);
        }
    }
}
