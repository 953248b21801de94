//! Halfspace domains: explicit shapes, projective-axis membership, route
//! agreement, and the exceptional-set structure of cone decompositions.

use num_traits::Zero;
use quiver_stability::domains::{
    dbeta_cone_decomposition, dbeta_contains, dbeta_contains_via_split, is_quiver_exceptional_set,
};
use quiver_stability::homext::{HomExt, RootClass};
use quiver_stability::quiver::Quiver;
use quiver_stability::vector::{enumerate_box, IntVector};

fn v(entries: &[i64]) -> IntVector {
    IntVector::from_i64(entries)
}

fn triangle() -> Quiver {
    Quiver::from_indices(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
}

/// Both signs of the projective root at vertex `i` lie in `D(b)` exactly
/// when `b(i) = 0`: the pairing `<g_i, b> = b(i)` must vanish, and then
/// every subrepresentation inequality is an equality.
#[test]
fn projective_axes_lie_in_domains_off_the_support() {
    for q in [Quiver::path(3), triangle(), Quiver::kronecker(2)] {
        let e = HomExt::new(&q);
        for beta in enumerate_box(q.len(), 0, 3) {
            if beta.is_zero() {
                continue;
            }
            for i in 0..q.len() {
                let expected = beta.get(i).is_zero();
                let g = q.projective_root(i).clone();
                assert_eq!(
                    dbeta_contains(&e, &beta, &g).unwrap(),
                    expected,
                    "beta ({beta}), +g_{i}"
                );
                assert_eq!(
                    dbeta_contains(&e, &beta, &g.neg()).unwrap(),
                    expected,
                    "beta ({beta}), -g_{i}"
                );
            }
        }
    }
}

#[test]
fn explicit_domains_on_the_two_vertex_path() {
    let q = Quiver::path(2);
    let e = HomExt::new(&q);
    for alpha in enumerate_box(2, -3, 3) {
        let a0 = i64::try_from(alpha.get(0)).unwrap();
        let a1 = i64::try_from(alpha.get(1)).unwrap();
        assert_eq!(
            dbeta_contains(&e, &v(&[0, 1]), &alpha).unwrap(),
            a0 == a1,
            "D((0,1)) at ({alpha})"
        );
        assert_eq!(
            dbeta_contains(&e, &v(&[1, 0]), &alpha).unwrap(),
            a0 == 0,
            "D((1,0)) at ({alpha})"
        );
        assert_eq!(
            dbeta_contains(&e, &v(&[1, 1]), &alpha).unwrap(),
            a1 == 0 && a0 >= 0,
            "D((1,1)) at ({alpha})"
        );
    }
}

#[test]
fn both_membership_routes_agree_off_the_path_quivers() {
    let k2 = Quiver::kronecker(2);
    let ek = HomExt::new(&k2);
    let k2_betas = [
        v(&[1, 0]),
        v(&[0, 1]),
        v(&[1, 1]),
        v(&[1, 2]),
        v(&[2, 1]),
        v(&[2, 3]),
    ];
    for alpha in enumerate_box(2, -4, 4) {
        for beta in &k2_betas {
            assert_eq!(
                dbeta_contains(&ek, beta, &alpha).unwrap(),
                dbeta_contains_via_split(&ek, beta, &alpha).unwrap(),
                "K2 beta ({beta}) alpha ({alpha})"
            );
        }
    }
    let tri = triangle();
    let et = HomExt::new(&tri);
    for alpha in enumerate_box(3, -2, 2) {
        for beta in enumerate_box(3, 0, 2) {
            if beta.is_zero() {
                continue;
            }
            assert_eq!(
                dbeta_contains(&et, &beta, &alpha).unwrap(),
                dbeta_contains_via_split(&et, &beta, &alpha).unwrap(),
                "triangle beta ({beta}) alpha ({alpha})"
            );
        }
    }
}

#[test]
fn cone_decomposition_members_are_exceptional_sets_inside_the_domain() {
    for q in [Quiver::path(3), Quiver::kronecker(2)] {
        let e = HomExt::new(&q);
        for beta in enumerate_box(q.len(), 0, 3) {
            if beta.is_zero() || e.root_class(&beta).unwrap() != RootClass::RealSchur {
                continue;
            }
            let dec = dbeta_cone_decomposition(&e, &beta, 6, true).unwrap();
            let all = dec.all_sets.as_ref().unwrap();
            for member in &dec.members {
                assert!(
                    is_quiver_exceptional_set(&e, &member.roots, &member.negatives).unwrap(),
                    "beta ({beta})"
                );
                assert!(all.contains(member), "beta ({beta})");
                for r in &member.roots {
                    assert!(
                        dbeta_contains(&e, &beta, r).unwrap(),
                        "beta ({beta}), generator ({r})"
                    );
                }
                for &i in &member.negatives {
                    assert!(
                        dbeta_contains(&e, &beta, &q.projective_root(i).neg()).unwrap(),
                        "beta ({beta}), negative vertex {i}"
                    );
                }
            }
        }
    }
}
