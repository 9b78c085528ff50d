//! The built-in group catalog used by the test suites and the CLI: all
//! abelian groups up to order 16 (as products of cyclic prime-power
//! factors), the dihedral groups of orders 6..16, Q8, the Heisenberg group
//! of order 27, three Frobenius fixtures, the order-72 group, and S4 from
//! its permutation table.

use crate::group::{build_group, symmetric_group, FiniteGroup};

/// Spec strings for every abelian group of order `2..=max` (one per
/// isomorphism class), plus the trivial group.
pub fn abelian_specs_up_to(max: usize) -> Vec<String> {
    let mut out = vec!["cyclic:1".to_string()];
    for n in 2..=max {
        for parts in abelian_types(n) {
            if parts.len() == 1 {
                out.push(format!("cyclic:{}", parts[0]));
            } else {
                let factors: Vec<String> = parts.iter().map(|p| format!("cyclic:{p}")).collect();
                out.push(format!("prod:{}", factors.join(",")));
            }
        }
    }
    out
}

/// The cyclic prime-power factor multisets of each abelian group of order n.
fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    let mut factorization = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factorization.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        factorization.push((m, 1));
    }
    // One abelian type per choice of partition of each exponent.
    let mut types: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factorization {
        let mut next = Vec::new();
        for partition in partitions(e) {
            for t in &types {
                let mut t = t.clone();
                for part in &partition {
                    t.push(p.pow(*part as u32));
                }
                next.push(t);
            }
        }
        types = next;
    }
    for t in types.iter_mut() {
        t.sort_unstable_by(|a, b| b.cmp(a));
    }
    types.sort();
    types.dedup();
    types
}

fn partitions(e: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

/// The full catalog: `(name, group)` pairs. Names are build specs except
/// for `s4`, which is assembled from its permutation table.
pub fn catalog() -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    for spec in abelian_specs_up_to(16) {
        out.push((spec.clone(), build_group(&spec).expect("catalog spec")));
    }
    for n in 3..=8 {
        let spec = format!("dihedral:{n}");
        out.push((spec.clone(), build_group(&spec).expect("catalog spec")));
    }
    for spec in [
        "q8",
        "heisenberg:3",
        "frobenius:2:2",
        "frobenius:3:1",
        "frobenius:5:1",
        "z3sq_q8",
    ] {
        out.push((spec.to_string(), build_group(spec).expect("catalog spec")));
    }
    out.push(("s4".to_string(), symmetric_group(4)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_counts_match_the_partition_numbers() {
        // Numbers of abelian groups of orders 1..16:
        // 1 1 1 2 1 1 1 3 2 1 1 2 1 1 1 5.
        let counts: Vec<usize> = (1..=16)
            .map(|n| if n == 1 { 1 } else { abelian_types(n).len() })
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
    }

    #[test]
    fn catalog_builds_and_sizes_are_sane() {
        let cat = catalog();
        assert!(cat.len() > 30);
        let z72 = cat.iter().find(|(n, _)| n == "z3sq_q8").unwrap();
        assert_eq!(z72.1.order(), 72);
        let s4 = cat.iter().find(|(n, _)| n == "s4").unwrap();
        assert_eq!(s4.1.order(), 24);
    }
}
