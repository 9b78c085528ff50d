//! The finite field `GF(p^r)` as polynomial residues.
//!
//! Elements are coefficient vectors of length `r` over `F_p`, encoded as the
//! integer `c_0 + c_1*p + ... + c_{r-1}*p^{r-1}`. The modulus is the first
//! monic irreducible polynomial of degree `r` in this encoding order, so the
//! field (and every group built from it) is reproducible.

pub struct Gf {
    pub p: u64,
    pub r: u32,
    pub size: usize,
    /// Non-leading coefficients of the monic modulus, length `r`.
    modulus: Vec<u64>,
}

impl Gf {
    pub fn new(p: u64, r: u32) -> Gf {
        assert!(r >= 1);
        let size = (p as usize).pow(r);
        let modulus = first_irreducible(p, r);
        Gf {
            p,
            r,
            size,
            modulus,
        }
    }

    fn decode(&self, mut x: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.r as usize];
        for c in v.iter_mut() {
            *c = (x as u64) % self.p;
            x /= self.p as usize;
        }
        v
    }

    fn encode(&self, v: &[u64]) -> usize {
        let mut x = 0usize;
        for &c in v.iter().rev() {
            x = x * self.p as usize + c as usize;
        }
        x
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (va, vb) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (va, vb) = (self.decode(a), self.decode(b));
        let r = self.r as usize;
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &x) in va.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in vb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce by the monic modulus: x^r = -modulus.
        for d in (r..2 * r - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (k, &m) in self.modulus.iter().enumerate() {
                let idx = d - r + k;
                prod[idx] = (prod[idx] + c * (self.p - m) % self.p) % self.p;
            }
        }
        self.encode(&prod[..r])
    }
}

/// Coefficients (length r, non-leading) of the first monic irreducible
/// degree-r polynomial over `F_p` in integer-encoding order.
fn first_irreducible(p: u64, r: u32) -> Vec<u64> {
    if r == 1 {
        // x itself: modulus coefficients [0], i.e. x = 0 in the field of size p.
        return vec![0];
    }
    let size = (p as usize).pow(r);
    'cand: for enc in 0..size {
        let mut coeffs = Vec::with_capacity(r as usize);
        let mut x = enc;
        for _ in 0..r {
            coeffs.push((x as u64) % p);
            x /= p as usize;
        }
        // Constant term 0 means divisible by x.
        if coeffs[0] == 0 {
            continue;
        }
        if !is_irreducible(p, &coeffs) {
            continue 'cand;
        }
        return coeffs;
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Trial division of the monic polynomial `x^r + sum coeffs[i] x^i` by all
/// monic polynomials of degree 1..=r/2.
fn is_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let r = coeffs.len();
    for d in 1..=r / 2 {
        let count = (p as usize).pow(d as u32);
        for enc in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut x = enc;
            for _ in 0..d {
                div.push((x as u64) % p);
                x /= p as usize;
            }
            div.push(1); // monic
            if poly_divides(p, &div, coeffs, r) {
                return false;
            }
        }
    }
    true
}

/// Whether `div` (monic, degree d) divides `x^r + sum coeffs[i] x^i` over F_p.
fn poly_divides(p: u64, div: &[u64], coeffs: &[u64], r: usize) -> bool {
    let mut rem: Vec<u64> = coeffs.to_vec();
    rem.push(1);
    let d = div.len() - 1;
    for lead in (d..=r).rev() {
        let c = rem[lead];
        if c == 0 {
            continue;
        }
        for (k, &m) in div.iter().enumerate() {
            let idx = lead - d + k;
            rem[idx] = (rem[idx] + c * (p - m % p) % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}
