//! Association schemes: axioms, the group scheme, Schur rings,
//! intersection numbers, wreath products and reordering-based equality.

mod io;
mod reorder;
mod schur;
mod structure;
mod tensor;
mod wreath;
mod wreath_eq;

pub use io::{parse_scheme_text, scheme_to_text};
pub use reorder::{coset_reorder, schemes_equal};
pub use schur::{schur_ring_validate, SchurViolation};
pub use structure::{check_cam2_block_lemma, check_frobenius_a1, check_frobenius_shift_form};
pub use tensor::IntersectionTensor;
pub use wreath::{wreath, wreath_all};
pub use wreath_eq::{check_wreath_factorization, subquotient_tower, WreathEqError, WreathFactor};

use crate::group::{ClassPartition, FiniteGroup};

/// Errors and axiom violations from scheme construction and validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemeError {
    #[error("color {found} at ({x},{y}) out of range 0..={d}")]
    ColorOutOfRange {
        x: usize,
        y: usize,
        found: u32,
        d: usize,
    },
    #[error("axiom 1 fails: color({x},{y}) = 0 does not match the diagonal")]
    Axiom1 { x: usize, y: usize },
    #[error("axiom 2 fails: transpose of color {i} is not a single color (witness ({x},{y}))")]
    Axiom2 { i: usize, x: usize, y: usize },
    #[error(
        "axiom 3 fails: p_({i},{j})^{k} differs between witness pairs ({x1},{y1}) and ({x2},{y2})"
    )]
    Axiom3 {
        i: usize,
        j: usize,
        k: usize,
        x1: usize,
        y1: usize,
        x2: usize,
        y2: usize,
    },
    #[error("axiom 4 fails: color {i} never occurs")]
    Axiom4 { i: usize },
    #[error("schemes have different sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("bijection is not a permutation of 0..{0}")]
    BadBijection(usize),
    #[error("trivial scheme needs at least one point")]
    EmptyScheme,
    #[error("base point {0} out of range 0..{1}")]
    BadBasePoint(usize, usize),
    #[error("scheme file: {0}")]
    BadFile(String),
    #[error("scheme is not commutative: A_{0} A_{1} != A_{1} A_{0}")]
    NotCommutative(usize, usize),
}

/// An association scheme stored as a color table on `Omega x Omega`.
///
/// Color 0 is the identity relation; `star` pairs each color with the color
/// of its transpose. The adjacency matrix of a color is recovered on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    size: usize,
    d: usize,
    color: Vec<u32>,
    star: Vec<u32>,
}

impl AssociationScheme {
    /// Wraps a color table, checking only cheap structural facts (entries in
    /// range, diagonal color 0, transpose pairing well defined). Use
    /// [`AssociationScheme::validate`] for the full axiom check.
    pub fn from_color_table(size: usize, d: usize, color: Vec<u32>) -> Result<Self, SchemeError> {
        assert_eq!(color.len(), size * size);
        for x in 0..size {
            for y in 0..size {
                let c = color[x * size + y];
                if c as usize > d {
                    return Err(SchemeError::ColorOutOfRange { x, y, found: c, d });
                }
            }
        }
        for x in 0..size {
            if color[x * size + x] != 0 {
                return Err(SchemeError::Axiom1 { x, y: x });
            }
        }
        let mut star = vec![u32::MAX; d + 1];
        for x in 0..size {
            for y in 0..size {
                let c = color[x * size + y] as usize;
                let t = color[y * size + x];
                if star[c] == u32::MAX {
                    star[c] = t;
                } else if star[c] != t {
                    return Err(SchemeError::Axiom2 { i: c, x, y });
                }
            }
        }
        for (i, &s) in star.iter().enumerate() {
            if s == u32::MAX {
                return Err(SchemeError::Axiom4 { i });
            }
        }
        Ok(AssociationScheme {
            size,
            d,
            color,
            star,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of non-identity colors.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn classes(&self) -> usize {
        self.d + 1
    }

    #[inline]
    pub fn color(&self, x: usize, y: usize) -> usize {
        self.color[x * self.size + y] as usize
    }

    pub fn star(&self, i: usize) -> usize {
        self.star[i] as usize
    }

    pub fn color_table(&self) -> &[u32] {
        &self.color
    }

    /// Number of points in relation `i` from any fixed point (row sums of `A_i`).
    pub fn valency(&self, i: usize) -> usize {
        (0..self.size).filter(|&y| self.color(0, y) == i).count()
    }

    pub fn valencies(&self) -> Vec<usize> {
        (0..=self.d).map(|i| self.valency(i)).collect()
    }

    /// Full axiom check. Axiom 3 is verified by counting, for every ordered
    /// pair `(x, y)`, the vector of path counts through each `(i, j)` and
    /// comparing against the first witness of the pair's color.
    pub fn validate(&self) -> Result<(), SchemeError> {
        let n = self.size;
        // Axiom 1: color 0 is exactly the diagonal.
        for x in 0..n {
            for y in 0..n {
                if (self.color(x, y) == 0) != (x == y) {
                    return Err(SchemeError::Axiom1 { x, y });
                }
            }
        }
        // Axiom 2 and 4 hold by construction; re-check star involutivity.
        for i in 0..=self.d {
            if self.star(self.star(i)) != i {
                return Err(SchemeError::Axiom2 { i, x: 0, y: 0 });
            }
        }
        // Axiom 3.
        let m = self.d + 1;
        let mut reference: Vec<Option<(Vec<u64>, usize, usize)>> = vec![None; m];
        for x in 0..n {
            for y in 0..n {
                let k = self.color(x, y);
                let mut counts = vec![0u64; m * m];
                for z in 0..n {
                    counts[self.color(x, z) * m + self.color(z, y)] += 1;
                }
                match &reference[k] {
                    None => reference[k] = Some((counts, x, y)),
                    Some((expected, x1, y1)) => {
                        if &counts != expected {
                            let bad = (0..m * m).find(|&t| counts[t] != expected[t]).unwrap();
                            return Err(SchemeError::Axiom3 {
                                i: bad / m,
                                j: bad % m,
                                k,
                                x1: *x1,
                                y1: *y1,
                                x2: x,
                                y2: y,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Fast validation: axiom 3 checked on one witness pair per color only.
    pub fn validate_fast(&self) -> Result<(), SchemeError> {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                if (self.color(x, y) == 0) != (x == y) {
                    return Err(SchemeError::Axiom1 { x, y });
                }
            }
        }
        self.intersection_numbers().map(|_| ())
    }

    /// Structure constants `p_ij^k`, computed from one witness pair per
    /// color and verified on a second witness when one exists.
    pub fn intersection_numbers(&self) -> Result<IntersectionTensor, SchemeError> {
        tensor::intersection_numbers(self)
    }

    /// Whether all `A_i` commute, via `p_ij^k = p_ji^k`.
    pub fn is_commutative(&self) -> Result<bool, SchemeError> {
        Ok(self.intersection_numbers()?.is_commutative())
    }
}

/// The trivial scheme `K_n`: identity plus one relation joining everything.
pub fn trivial_scheme(n: usize) -> Result<AssociationScheme, SchemeError> {
    if n == 0 {
        return Err(SchemeError::EmptyScheme);
    }
    let d = if n == 1 { 0 } else { 1 };
    let color: Vec<u32> = (0..n * n)
        .map(|t| if t / n == t % n { 0 } else { 1 })
        .collect();
    AssociationScheme::from_color_table(n, d, color)
}

/// The group association scheme: `color(x, y)` is the conjugacy class of
/// `y x^-1`, with rows and columns indexed by group elements in group order.
pub fn group_scheme(g: &FiniteGroup, classes: &ClassPartition) -> AssociationScheme {
    translation_scheme(g, classes.classes()).expect("conjugacy classes form a Schur ring")
}

/// The translation scheme of any partition of `G` whose cells form a Schur
/// ring: `color(x, y)` is the cell of `y x^-1`. Cell 0 must be `{e}`; cells
/// are renumbered so the identity cell is color 0.
pub fn translation_scheme(
    g: &FiniteGroup,
    cells: &[Vec<usize>],
) -> Result<AssociationScheme, SchemeError> {
    let n = g.order();
    let mut cell_of = vec![usize::MAX; n];
    // Identity cell first.
    let id_cell = cells
        .iter()
        .position(|c| c.contains(&g.identity()))
        .expect("partition must cover the identity");
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.swap(0, id_cell);
    for (new_idx, &old_idx) in order.iter().enumerate() {
        for &x in &cells[old_idx] {
            cell_of[x] = new_idx;
        }
    }
    let mut color = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            color[x * n + y] = cell_of[g.mul(y, g.inv(x))] as u32;
        }
    }
    AssociationScheme::from_color_table(n, cells.len() - 1, color)
}
