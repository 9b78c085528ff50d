//! Block-structure checks for the adjacency matrices of group schemes of
//! Camina-type groups: the derived-class matrix of a Frobenius group, the
//! cyclic-shift Kronecker form of its coset classes, and the constant-block
//! property of coset classes in a Camina p-group.

use super::AssociationScheme;
use crate::group::{
    conjugacy_classes, derived_subgroup, quotient_group, ClassPartition, FiniteGroup,
};

/// For `G = Z_p^r x| Z_{p^r-1}`: the adjacency matrix of the class
/// `G' \ {e}` restricted to any class-diagonal block is `J - I`; its
/// `C_0,C_1` and `C_1,C_0` blocks are all ones; and all other off-diagonal
/// class blocks vanish.
pub fn check_frobenius_a1(
    g: &FiniteGroup,
    classes: &ClassPartition,
    scheme: &AssociationScheme,
) -> Result<(), String> {
    let derived = derived_subgroup(g);
    let c1 = derived_class(g, classes, &derived)?;
    for (i, ci) in classes.classes().iter().enumerate() {
        for (j, cj) in classes.classes().iter().enumerate() {
            for &u in ci {
                for &v in cj {
                    let is_a1 = scheme.color(u, v) == c1;
                    let expected = if i == j {
                        u != v
                    } else {
                        (i == 0 && j == c1) || (i == c1 && j == 0)
                    };
                    if is_a1 != expected {
                        return Err(format!("A1 block ({i},{j}) wrong at elements ({u},{v})"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn derived_class(
    g: &FiniteGroup,
    classes: &ClassPartition,
    derived: &[usize],
) -> Result<usize, String> {
    let rep = *derived
        .iter()
        .find(|&&x| x != g.identity())
        .ok_or("derived subgroup is trivial")?;
    let c1 = classes.class_of(rep);
    let mut expected: Vec<usize> = derived
        .iter()
        .copied()
        .filter(|&x| x != g.identity())
        .collect();
    expected.sort_unstable();
    if classes.class(c1) != expected.as_slice() {
        return Err("G' \\ {e} is not a single conjugacy class".into());
    }
    Ok(c1)
}

/// For `G = Z_p^r x| Z_{p^r-1}` with cosets of `G'` ordered by powers of a
/// generator of the cyclic quotient: the adjacency matrix of the class
/// `z^t G'` equals the t-th power of the cyclic shift tensored with the
/// all-ones block, and the derived class gives `I (x) (J - I)`.
pub fn check_frobenius_shift_form(
    g: &FiniteGroup,
    classes: &ClassPartition,
    scheme: &AssociationScheme,
) -> Result<(), String> {
    let derived = derived_subgroup(g);
    let c1 = derived_class(g, classes, &derived)?;
    let q = quotient_group(g, &derived).map_err(|e| e.to_string())?;
    let m = q.group.order();
    let gen = (0..m)
        .find(|&x| q.group.element_order(x) == m)
        .ok_or("quotient is not cyclic")?;
    // Cosets by generator power; elements within a coset translated from
    // the sorted subgroup.
    let mut sub = derived.clone();
    sub.sort_unstable();
    let qsize = sub.len();
    let mut order = Vec::with_capacity(g.order());
    let mut quotient_elem = q.group.identity();
    for _ in 0..m {
        let rep = q.cosets[quotient_elem][0];
        order.extend(sub.iter().map(|&x| g.mul(rep, x)));
        quotient_elem = q.group.mul(quotient_elem, gen);
    }
    // Power t of the shift: block (a, b) is all ones iff b - a = t mod m.
    for t in 1..m {
        let rep_block = {
            let mut e = q.group.identity();
            for _ in 0..t {
                e = q.group.mul(e, gen);
            }
            e
        };
        let class_t = classes.class_of(q.cosets[rep_block][0]);
        {
            let mut coset = q.cosets[rep_block].clone();
            coset.sort_unstable();
            if classes.class(class_t) != coset.as_slice() {
                return Err(format!("class of z^{t} G' is not the full coset"));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let expect_ones = (b + m - a) % m == t;
                for x in 0..qsize {
                    for y in 0..qsize {
                        let u = order[a * qsize + x];
                        let v = order[b * qsize + y];
                        if (scheme.color(u, v) == class_t) != expect_ones {
                            return Err(format!(
                                "A_(z^{t}) fails the shift form at block ({a},{b})"
                            ));
                        }
                    }
                }
            }
        }
    }
    // Derived class: I (x) (J - I).
    for a in 0..m {
        for b in 0..m {
            for x in 0..qsize {
                for y in 0..qsize {
                    let u = order[a * qsize + x];
                    let v = order[b * qsize + y];
                    let expect = a == b && x != y;
                    if (scheme.color(u, v) == c1) != expect {
                        return Err(format!("A1 fails I (x) (J-I) at block ({a},{b})"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Constant-block property for Camina p-groups: for every class `C_k`
/// outside `G'`, each
/// class block of `A_k` is constant, and the `(C_i, C_j)` block is all ones
/// exactly when `C_j` is contained in the set product `C_i C_k`.
pub fn check_cam2_block_lemma(g: &FiniteGroup, scheme: &AssociationScheme) -> Result<(), String> {
    let classes = conjugacy_classes(g);
    let derived = derived_subgroup(g);
    let in_derived: Vec<bool> = {
        let mut f = vec![false; g.order()];
        for &x in &derived {
            f[x] = true;
        }
        f
    };
    for k in 0..classes.len() {
        if in_derived[classes.class(k)[0]] {
            continue;
        }
        for (i, ci) in classes.classes().iter().enumerate() {
            // Set product C_i C_k.
            let mut in_product = vec![false; g.order()];
            for &a in ci {
                for &b in classes.class(k) {
                    in_product[g.mul(a, b)] = true;
                }
            }
            for (j, cj) in classes.classes().iter().enumerate() {
                let contained = cj.iter().all(|&x| in_product[x]);
                for &u in ci {
                    for &v in cj {
                        if (scheme.color(u, v) == k) != contained {
                            return Err(format!(
                                "A_{k} block ({i},{j}) is not constant {}",
                                u8::from(contained)
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
