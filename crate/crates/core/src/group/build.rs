//! Group constructors and the spec-string parser.
//!
//! Recognized specs:
//!   cyclic:n            cyclic group Z_n
//!   prod:a,b[,c...]     direct product of non-product specs
//!   dihedral:n          dihedral group of order 2n
//!   q8                  quaternion group of order 8
//!   heisenberg:p        unitriangular 3x3 matrices over F_p, odd prime p
//!   frobenius:p:r       GF(p^r) x| GF(p^r)^* with multiplicative action
//!   z3sq_q8             Z_3^2 x| Q8 acting through SL_2(3)
//!   cayley:path         ingest a Cayley table file
//!   semidirect:path     explicit semidirect product from an action file

use super::cayley::group_from_cayley_text;
use super::gf::Gf;
use super::{is_prime, FiniteGroup, GroupError};

/// Parsed form of a group spec string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Prod(Vec<GroupSpec>),
    Dihedral(usize),
    Q8,
    Heisenberg(u64),
    Frobenius(u64, u32),
    Z3sqQ8,
    Cayley(String),
    Semidirect(String),
}

pub fn parse_spec(spec: &str) -> Result<GroupSpec, GroupError> {
    let bad = |msg: &str| GroupError::MalformedSpec(format!("{spec}: {msg}"));
    let spec = spec.trim();
    if spec == "q8" {
        return Ok(GroupSpec::Q8);
    }
    if spec == "z3sq_q8" {
        return Ok(GroupSpec::Z3sqQ8);
    }
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        let n: usize = rest.parse().map_err(|_| bad("order must be an integer"))?;
        if n == 0 {
            return Err(bad("order must be positive"));
        }
        return Ok(GroupSpec::Cyclic(n));
    }
    if let Some(rest) = spec.strip_prefix("prod:") {
        let mut factors = Vec::new();
        for part in rest.split(',') {
            let f = parse_spec(part)?;
            if matches!(f, GroupSpec::Prod(_)) {
                return Err(bad("nested prod: flatten the factor list instead"));
            }
            factors.push(f);
        }
        if factors.len() < 2 {
            return Err(bad("prod needs at least two factors"));
        }
        return Ok(GroupSpec::Prod(factors));
    }
    if let Some(rest) = spec.strip_prefix("dihedral:") {
        let n: usize = rest.parse().map_err(|_| bad("order must be an integer"))?;
        if n < 2 {
            return Err(bad("dihedral:n needs n >= 2"));
        }
        return Ok(GroupSpec::Dihedral(n));
    }
    if let Some(rest) = spec.strip_prefix("heisenberg:") {
        let p: u64 = rest.parse().map_err(|_| bad("p must be an integer"))?;
        return Ok(GroupSpec::Heisenberg(p));
    }
    if let Some(rest) = spec.strip_prefix("frobenius:") {
        let (p, r) = rest
            .split_once(':')
            .ok_or_else(|| bad("expected frobenius:p:r"))?;
        let p: u64 = p.parse().map_err(|_| bad("p must be an integer"))?;
        let r: u32 = r.parse().map_err(|_| bad("r must be an integer"))?;
        if r == 0 {
            return Err(bad("r must be positive"));
        }
        return Ok(GroupSpec::Frobenius(p, r));
    }
    if let Some(path) = spec.strip_prefix("cayley:") {
        return Ok(GroupSpec::Cayley(path.to_string()));
    }
    if let Some(path) = spec.strip_prefix("semidirect:") {
        return Ok(GroupSpec::Semidirect(path.to_string()));
    }
    Err(bad("unknown spec"))
}

/// Builds a validated group from a spec string.
pub fn build_group(spec: &str) -> Result<FiniteGroup, GroupError> {
    build_parsed(&parse_spec(spec)?)
}

pub fn build_parsed(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::Cyclic(n) => Ok(cyclic(*n)),
        GroupSpec::Prod(fs) => {
            let groups = fs.iter().map(build_parsed).collect::<Result<Vec<_>, _>>()?;
            Ok(groups.into_iter().reduce(|a, b| product(&a, &b)).unwrap())
        }
        GroupSpec::Dihedral(n) => Ok(dihedral(*n)),
        GroupSpec::Q8 => Ok(quaternion()),
        GroupSpec::Heisenberg(p) => heisenberg(*p),
        GroupSpec::Frobenius(p, r) => frobenius_field_group(*p, *r),
        GroupSpec::Z3sqQ8 => Ok(z3sq_q8()),
        GroupSpec::Cayley(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| GroupError::BadCayley(format!("{path}: {e}")))?;
            group_from_cayley_text(&text)
        }
        GroupSpec::Semidirect(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| GroupError::MalformedSpec(format!("{path}: {e}")))?;
            semidirect_from_text(&text)
        }
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as u32;
        }
    }
    FiniteGroup::from_table_trusted(n, table, 0)
}

/// Direct product; the first factor varies slowest in the element index.
pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0u32; n * n];
    for xa in 0..na {
        for xb in 0..nb {
            let x = xa * nb + xb;
            for ya in 0..na {
                for yb in 0..nb {
                    let y = ya * nb + yb;
                    table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
                }
            }
        }
    }
    FiniteGroup::from_table_trusted(n, table, a.identity() * nb + b.identity())
}

/// Dihedral group of order `2n`: rotations `r^i` at indices `0..n`,
/// reflections `s r^i` at indices `n..2n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let mut table = vec![0u32; order * order];
    let idx = |flip: bool, i: usize| if flip { n + i } else { i };
    for a in 0..order {
        let (fa, ia) = (a >= n, a % n);
        for b in 0..order {
            let (fb, ib) = (b >= n, b % n);
            // (s^fa r^ia)(s^fb r^ib) with r s = s r^-1.
            let prod = if !fb {
                idx(fa, (ia + ib) % n)
            } else if !fa {
                // r^ia * s r^ib = s r^(ib - ia)
                idx(true, (n + ib - ia) % n)
            } else {
                // s r^ia * s r^ib = r^(ib - ia)
                idx(false, (n + ib - ia) % n)
            };
            table[a * order + b] = prod as u32;
        }
    }
    FiniteGroup::from_table_trusted(order, table, 0)
}

/// Quaternion group; elements ordered 1, -1, i, -i, j, -j, k, -k so the
/// center occupies indices {0, 1}.
pub fn quaternion() -> FiniteGroup {
    // Encode +/- u with u in {1, i, j, k}; unit products carry a sign.
    // units: 0=1, 1=i, 2=j, 3=k
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let n = 8;
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        let (ua, sa) = (a / 2, a % 2 == 1);
        for b in 0..n {
            let (ub, sb) = (b / 2, b % 2 == 1);
            let (uc, flip) = UNIT[ua][ub];
            let sc = (sa ^ sb) ^ flip;
            table[a * n + b] = (uc * 2 + sc as usize) as u32;
        }
    }
    FiniteGroup::from_table_trusted(n, table, 0)
}

/// Heisenberg group of order `p^3` for odd prime `p`: upper unitriangular
/// 3x3 matrices over `F_p`, with `(a, b, c)` standing for rows
/// `[1 a c; 0 1 b; 0 0 1]` and index `a*p^2 + b*p + c`.
pub fn heisenberg(p: u64) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p == 2 {
        return Err(GroupError::HeisenbergEven(p));
    }
    let p = p as usize;
    let n = p * p * p;
    let enc = |a: usize, b: usize, c: usize| a * p * p + b * p + c;
    let mut table = vec![0u32; n * n];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                let x = enc(a1, b1, c1);
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let y = enc(a2, b2, c2);
                            let prod = enc((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
                            table[x * n + y] = prod as u32;
                        }
                    }
                }
            }
        }
    }
    Ok(FiniteGroup::from_table_trusted(n, table, 0))
}

/// The Frobenius group `GF(p^r) x| GF(p^r)^*`.
///
/// Elements are pairs (additive, multiplicative); `(a, m)(b, n) = (a + m b, m n)`.
/// Index is additive-major with the field unit listed first among the
/// multiplicative parts, so the identity `(0, 1)` has index 0.
pub fn frobenius_field_group(p: u64, r: u32) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let f = Gf::new(p, r);
    let q = f.size;
    if q <= 2 {
        return Err(GroupError::TrivialComplement(p, r));
    }
    // Multiplicative parts: 1 first, then the other nonzero elements ascending.
    let mult: Vec<usize> = std::iter::once(1)
        .chain((2..q).filter(|&m| m != 1))
        .collect();
    let mult_pos: Vec<usize> = {
        let mut pos = vec![usize::MAX; q];
        for (i, &m) in mult.iter().enumerate() {
            pos[m] = i;
        }
        pos
    };
    let k = q - 1;
    let n = q * k;
    let enc = |a: usize, m: usize| a * k + mult_pos[m];
    let mut table = vec![0u32; n * n];
    for a in 0..q {
        for (mi, &m) in mult.iter().enumerate() {
            let x = a * k + mi;
            for b in 0..q {
                for &mb in mult.iter() {
                    let y = enc(b, mb);
                    let prod = enc(f.add(a, f.mul(m, b)), f.mul(m, mb));
                    table[x * n + y] = prod as u32;
                }
            }
        }
    }
    Ok(FiniteGroup::from_table_trusted(n, table, 0))
}

/// `Z_3^2 x| Q8` of order 72, with Q8 acting through the SL_2(3) matrices
/// `i -> [[0,-1],[1,0]]` and `j -> [[1,1],[1,-1]]`.
pub fn z3sq_q8() -> FiniteGroup {
    let h = quaternion();
    // 2x2 matrices over F_3 for 1, i, j, k (signs negate entrywise).
    let base: [[i64; 4]; 4] = [
        [1, 0, 0, 1],  // 1
        [0, -1, 1, 0], // i
        [1, 1, 1, -1], // j
        [-1, 1, 1, 1], // k = i*j
    ];
    let mat_for = |q: usize| -> [u64; 4] {
        let (u, s) = (q / 2, q % 2 == 1);
        let mut m = [0u64; 4];
        for (t, v) in base[u].iter().enumerate() {
            let v = if s { -v } else { *v };
            m[t] = v.rem_euclid(3) as u64;
        }
        m
    };
    // Action of q on (a, b) encoded as 3a + b.
    let mut action = Vec::with_capacity(8);
    for q in 0..8 {
        let m = mat_for(q);
        let mut perm = vec![0usize; 9];
        for a in 0..3u64 {
            for b in 0..3u64 {
                let na = (m[0] * a + m[1] * b) % 3;
                let nb = (m[2] * a + m[3] * b) % 3;
                perm[(3 * a + b) as usize] = (3 * na + nb) as usize;
            }
        }
        action.push(perm);
    }
    let nrm = cyclic_squared(3);
    semidirect(&nrm, &h, &action).expect("SL_2(3) action is by automorphisms")
}

fn cyclic_squared(p: usize) -> FiniteGroup {
    let zp = cyclic(p);
    product(&zp, &zp)
}

/// Semidirect product `N x| H` from an explicit action `H -> Aut(N)`.
///
/// Element `(a, h)` has index `h*|N| + a`, so N-cosets are contiguous.
pub fn semidirect(
    nrm: &FiniteGroup,
    h: &FiniteGroup,
    action: &[Vec<usize>],
) -> Result<FiniteGroup, GroupError> {
    let (nn, nh) = (nrm.order(), h.order());
    assert_eq!(action.len(), nh);
    for (hi, perm) in action.iter().enumerate() {
        if perm.len() != nn {
            return Err(GroupError::NotAutomorphism(hi));
        }
        let mut seen = vec![false; nn];
        for &img in perm {
            if img >= nn || seen[img] {
                return Err(GroupError::NotAutomorphism(hi));
            }
            seen[img] = true;
        }
        for a in 0..nn {
            for b in 0..nn {
                if perm[nrm.mul(a, b)] != nrm.mul(perm[a], perm[b]) {
                    return Err(GroupError::NotAutomorphism(hi));
                }
            }
        }
    }
    for h1 in 0..nh {
        for h2 in 0..nh {
            let composed: Vec<usize> = (0..nn).map(|a| action[h1][action[h2][a]]).collect();
            if composed != action[h.mul(h1, h2)] {
                return Err(GroupError::ActionNotHomomorphism(h1, h2));
            }
        }
    }
    let n = nn * nh;
    let mut table = vec![0u32; n * n];
    for ha in 0..nh {
        for a in 0..nn {
            let x = ha * nn + a;
            for hb in 0..nh {
                for b in 0..nn {
                    let y = hb * nn + b;
                    // (a, ha)(b, hb) = (a * ha(b), ha hb)
                    let prod = h.mul(ha, hb) * nn + nrm.mul(a, action[ha][b]);
                    table[x * n + y] = prod as u32;
                }
            }
        }
    }
    Ok(FiniteGroup::from_table_trusted(
        n,
        table,
        h.identity() * nn + nrm.identity(),
    ))
}

/// Semidirect action file: two spec lines (N, then H), then `|H|` rows of
/// `|N|` 1-based indices giving each automorphism in H's element order.
fn semidirect_from_text(text: &str) -> Result<FiniteGroup, GroupError> {
    let bad = |msg: String| GroupError::MalformedSpec(format!("semidirect file: {msg}"));
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let nspec = lines.next().ok_or_else(|| bad("missing N spec".into()))?;
    let hspec = lines.next().ok_or_else(|| bad("missing H spec".into()))?;
    let nrm = build_group(nspec.trim())?;
    let h = build_group(hspec.trim())?;
    let mut action = Vec::with_capacity(h.order());
    for hi in 0..h.order() {
        let line = lines
            .next()
            .ok_or_else(|| bad(format!("missing action row for element {hi}")))?;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(format!("bad index in action row {hi}")))?;
        if row.len() != nrm.order() || row.iter().any(|&v| v == 0 || v > nrm.order()) {
            return Err(bad(format!("action row {hi} is not a 1-based permutation")));
        }
        action.push(row.into_iter().map(|v| v - 1).collect());
    }
    semidirect(&nrm, &h, &action)
}

/// The symmetric group on `n` letters from its permutation action,
/// with permutations listed lexicographically. Used by the built-in catalog.
pub fn symmetric_group(n: usize) -> FiniteGroup {
    assert!(
        (1..=6).contains(&n),
        "symmetric_group is for small fixtures"
    );
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let order = perms.len();
    let index: std::collections::HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut table = vec![0u32; order * order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // Composition (p then-apply q): (p*q)(x) = p(q(x)).
            let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            table[i * order + j] = index[&comp] as u32;
        }
    }
    FiniteGroup::from_table_trusted(order, table, 0)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_six_is_abelian() {
        let g = build_group("cyclic:6").unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn quaternion_relations() {
        let g = quaternion();
        let (minus1, i, j, k) = (1, 2, 4, 6);
        assert_eq!(g.mul(i, i), minus1);
        assert_eq!(g.mul(j, j), minus1);
        assert_eq!(g.mul(i, j), k);
        assert_eq!(g.mul(j, i), g.mul(minus1, k));
        assert_eq!(g.element_order(i), 4);
    }

    #[test]
    fn heisenberg_two_is_rejected() {
        assert_eq!(heisenberg(2).unwrap_err(), GroupError::HeisenbergEven(2));
        assert_eq!(heisenberg(4).unwrap_err(), GroupError::NotPrime(4));
    }

    #[test]
    fn frobenius_requires_nontrivial_complement() {
        assert_eq!(
            frobenius_field_group(2, 1).unwrap_err(),
            GroupError::TrivialComplement(2, 1)
        );
    }

    #[test]
    fn frobenius_orders() {
        assert_eq!(frobenius_field_group(3, 1).unwrap().order(), 6);
        assert_eq!(frobenius_field_group(2, 2).unwrap().order(), 12);
        assert_eq!(frobenius_field_group(5, 1).unwrap().order(), 20);
    }

    #[test]
    fn z3sq_q8_has_order_72() {
        let g = z3sq_q8();
        assert_eq!(g.order(), 72);
    }

    #[test]
    fn symmetric_four() {
        let g = symmetric_group(4);
        assert_eq!(g.order(), 24);
        assert!(!g.is_abelian());
    }

    #[test]
    fn nested_prod_is_rejected() {
        assert!(matches!(
            parse_spec("prod:prod:cyclic:2,cyclic:2,cyclic:3"),
            Err(GroupError::MalformedSpec(_))
        ));
    }
}
