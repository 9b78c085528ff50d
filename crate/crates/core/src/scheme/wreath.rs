//! Wreath products of association schemes.

use super::AssociationScheme;

/// The wreath product of an inner scheme on `X` (m points, c classes) and an
/// outer scheme on `Y` (n points, e classes), on the point set `X x Y`.
///
/// Point `(x, y)` is linearized as `y*m + x`, which makes the relations
/// literal Kronecker products: `D_0 = I_n (x) A_0`, `D_k = I_n (x) A_k` for
/// `1 <= k <= c`, and `D_{c+k} = B_k (x) J_m` for `1 <= k <= e`. The result
/// has `c + e` non-identity classes.
pub fn wreath(inner: &AssociationScheme, outer: &AssociationScheme) -> AssociationScheme {
    let m = inner.size();
    let n = outer.size();
    let c = inner.d();
    let size = m * n;
    let d = c + outer.d();
    let mut color = vec![0u32; size * size];
    for yy in 0..n {
        for xx in 0..m {
            let p = yy * m + xx;
            for yy2 in 0..n {
                for xx2 in 0..m {
                    let q = yy2 * m + xx2;
                    let col = if yy == yy2 {
                        inner.color(xx, xx2)
                    } else {
                        c + outer.color(yy, yy2)
                    };
                    color[p * size + q] = col as u32;
                }
            }
        }
    }
    AssociationScheme::from_color_table(size, d, color)
        .expect("wreath of valid schemes is structurally sound")
}

/// Convenience left fold for iterated wreath products.
pub fn wreath_all(factors: &[AssociationScheme]) -> AssociationScheme {
    assert!(!factors.is_empty());
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = wreath(&acc, f);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, conjugacy_classes};
    use crate::scheme::{group_scheme, schemes_equal, trivial_scheme};

    #[test]
    fn one_point_outer_factor_is_neutral() {
        let g = build_group("dihedral:3").unwrap();
        let a = group_scheme(&g, &conjugacy_classes(&g));
        let w = wreath(&a, &trivial_scheme(1).unwrap());
        let id: Vec<usize> = (0..a.size()).collect();
        assert!(schemes_equal(&a, &w, &id).unwrap());
    }

    #[test]
    fn k4_wreath_cyclic3() {
        let z3 = build_group("cyclic:3").unwrap();
        let w = wreath(
            &trivial_scheme(4).unwrap(),
            &group_scheme(&z3, &conjugacy_classes(&z3)),
        );
        assert_eq!(w.size(), 12);
        assert_eq!(w.classes(), 4);
        w.validate().unwrap();
    }

    #[test]
    fn wreath_is_associative_on_a_fixture() {
        let z2 = build_group("cyclic:2").unwrap();
        let z2sq = build_group("prod:cyclic:2,cyclic:2").unwrap();
        let k9 = trivial_scheme(9).unwrap();
        let gz2 = group_scheme(&z2, &conjugacy_classes(&z2));
        let gz2sq = group_scheme(&z2sq, &conjugacy_classes(&z2sq));
        let left = wreath(&wreath(&k9, &gz2), &gz2sq);
        let right = wreath(&k9, &wreath(&gz2, &gz2sq));
        assert_eq!(left, right);
    }

    #[test]
    fn wreath_of_valid_schemes_validates() {
        let z3 = build_group("cyclic:3").unwrap();
        let gz3 = group_scheme(&z3, &conjugacy_classes(&z3));
        let w = wreath(&gz3, &trivial_scheme(5).unwrap());
        w.validate().unwrap();
    }
}
