//! Intersection numbers `p_ij^k` of a scheme.

use super::{AssociationScheme, SchemeError};

/// The full `(d+1)^3` table of intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    d: usize,
    p: Vec<u64>,
    valencies: Vec<u64>,
    star: Vec<usize>,
}

impl IntersectionTensor {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn classes(&self) -> usize {
        self.d + 1
    }

    #[inline]
    pub fn p(&self, i: usize, j: usize, k: usize) -> u64 {
        let m = self.d + 1;
        self.p[(i * m + j) * m + k]
    }

    pub fn valency(&self, i: usize) -> u64 {
        self.valencies[i]
    }

    pub fn star(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.d + 1;
        (0..m).all(|i| (0..m).all(|j| (0..m).all(|k| self.p(i, j, k) == self.p(j, i, k))))
    }

    /// Number of nonzero entries; this is `dim T_0` for the scheme.
    pub fn nonzero_triples(&self) -> usize {
        self.p.iter().filter(|&&v| v != 0).count()
    }
}

pub(super) fn intersection_numbers(
    s: &AssociationScheme,
) -> Result<IntersectionTensor, SchemeError> {
    let n = s.size();
    let m = s.d() + 1;
    // First and second witness pair for each color.
    let mut witness: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut second: Vec<Option<(usize, usize)>> = vec![None; m];
    for x in 0..n {
        for y in 0..n {
            let k = s.color(x, y);
            if witness[k].is_none() {
                witness[k] = Some((x, y));
            } else if second[k].is_none() && witness[k] != Some((x, y)) {
                second[k] = Some((x, y));
            }
        }
    }
    let counts_for = |x: usize, y: usize| -> Vec<u64> {
        let mut counts = vec![0u64; m * m];
        for z in 0..n {
            counts[s.color(x, z) * m + s.color(z, y)] += 1;
        }
        counts
    };
    let mut p = vec![0u64; m * m * m];
    for k in 0..m {
        let (x, y) = witness[k].ok_or(SchemeError::Axiom4 { i: k })?;
        let counts = counts_for(x, y);
        if let Some((x2, y2)) = second[k] {
            let verify = counts_for(x2, y2);
            if verify != counts {
                let bad = (0..m * m).find(|&t| counts[t] != verify[t]).unwrap();
                return Err(SchemeError::Axiom3 {
                    i: bad / m,
                    j: bad % m,
                    k,
                    x1: x,
                    y1: y,
                    x2,
                    y2,
                });
            }
        }
        for i in 0..m {
            for j in 0..m {
                p[(i * m + j) * m + k] = counts[i * m + j];
            }
        }
    }
    let valencies: Vec<u64> = (0..m).map(|i| s.valency(i) as u64).collect();
    let star: Vec<usize> = (0..m).map(|i| s.star(i)).collect();
    Ok(IntersectionTensor {
        d: s.d(),
        p,
        valencies,
        star,
    })
}
