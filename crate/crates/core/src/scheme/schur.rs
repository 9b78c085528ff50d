//! Schur ring validation by convolution counting.

use crate::group::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurViolation {
    #[error("cells do not partition the group")]
    NotAPartition,
    #[error("the identity is not a singleton cell")]
    IdentityNotACell,
    #[error("cell {0} of inverses is not a cell")]
    NotStarClosed(usize),
    #[error("product of cells {i} and {j} is not constant on cell {k}")]
    ProductNotConstant { i: usize, j: usize, k: usize },
}

/// Checks the Schur ring axioms for a partition of `G`: the identity is a
/// cell, cells are closed under inversion, and every product of cell sums
/// is an integer combination of cell sums.
pub fn schur_ring_validate(g: &FiniteGroup, cells: &[Vec<usize>]) -> Result<(), SchurViolation> {
    let n = g.order();
    let mut cell_of = vec![usize::MAX; n];
    for (i, cell) in cells.iter().enumerate() {
        for &x in cell {
            if x >= n || cell_of[x] != usize::MAX {
                return Err(SchurViolation::NotAPartition);
            }
            cell_of[x] = i;
        }
    }
    if cell_of.contains(&usize::MAX) {
        return Err(SchurViolation::NotAPartition);
    }
    let id_cell = cell_of[g.identity()];
    if cells[id_cell].len() != 1 {
        return Err(SchurViolation::IdentityNotACell);
    }
    for (i, cell) in cells.iter().enumerate() {
        let star_cell = cell_of[g.inv(cell[0])];
        if cell.iter().any(|&x| cell_of[g.inv(x)] != star_cell) {
            return Err(SchurViolation::NotStarClosed(i));
        }
    }
    // Convolution: count how many (a, b) in C_i x C_j land on each element;
    // the count must be constant on every cell.
    for (i, ci) in cells.iter().enumerate() {
        for (j, cj) in cells.iter().enumerate() {
            let mut count = vec![0u64; n];
            for &a in ci {
                for &b in cj {
                    count[g.mul(a, b)] += 1;
                }
            }
            for (k, ck) in cells.iter().enumerate() {
                let first = count[ck[0]];
                if ck.iter().any(|&x| count[x] != first) {
                    return Err(SchurViolation::ProductNotConstant { i, j, k });
                }
            }
        }
    }
    Ok(())
}
