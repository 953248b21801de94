//! Cross-checks between the exact engine and the finite-field oracle beyond
//! the grids the acceptance battery already covers.

use std::collections::BTreeSet;

use num_traits::Zero;
use quiver_stability::homext::HomExt;
use quiver_stability::oracle::{self, BruteOptions, FpMat, Rep};
use quiver_stability::quiver::Quiver;
use quiver_stability::vector::{enumerate_box, IntVector};

fn v(entries: &[i64]) -> IntVector {
    IntVector::from_i64(entries)
}

#[test]
fn engine_matches_oracle_on_spot_pairs_beyond_the_grid() {
    let cases: [(Quiver, Vec<i64>, Vec<i64>); 4] = [
        (Quiver::path(2), vec![3, 2], vec![2, 3]),
        (Quiver::path(3), vec![3, 0, 3], vec![1, 1, 1]),
        (Quiver::kronecker(2), vec![1, 3], vec![3, 1]),
        (Quiver::kronecker(2), vec![3, 2], vec![2, 3]),
    ];
    let opts = BruteOptions::default();
    for (q, a, b) in cases {
        let e = HomExt::new(&q);
        let a = v(&a);
        let b = v(&b);
        let (hom, ext) = e.homext(&a, &b).unwrap();
        let brute = oracle::brute_generic_homext(&q, &a, &b, &opts).unwrap();
        assert_eq!(
            (hom, ext),
            (brute.hom, brute.ext),
            "({a}) x ({b}) disagrees with the oracle"
        );
    }
}

/// On path quivers every representation decomposes into interval modules
/// over any field, so a dimension vector embeds generically exactly when it
/// embeds in every single F_2 representation.
#[test]
fn generic_embedding_matches_universal_rational_subreps_on_paths() {
    for q in [Quiver::path(2), Quiver::path(3)] {
        let e = HomExt::new(&q);
        let n = q.len();
        for beta in enumerate_box(n, 0, 2) {
            let dims: Vec<usize> = beta
                .to_i64()
                .unwrap()
                .into_iter()
                .map(|x| x as usize)
                .collect();
            let entries = Rep::entry_count(&q, &dims) as u32;
            let mut common: Option<BTreeSet<IntVector>> = None;
            for idx in 0..1u64 << entries {
                let rep = Rep::from_index(&q, &dims, 2, idx);
                let set = oracle::subrep_dim_vectors(&q, &rep, 1_000_000).unwrap();
                common = Some(match common {
                    None => set,
                    Some(c) => c.intersection(&set).cloned().collect(),
                });
            }
            let common = common.unwrap();
            for alpha in enumerate_box(n, 0, 2) {
                let engine = e.embeds(&alpha, &beta).unwrap();
                let universal = common.contains(&alpha);
                assert_eq!(
                    engine, universal,
                    "({alpha}) in ({beta}): engine {engine}, universal {universal}"
                );
            }
        }
    }
}

/// On the double arrow the equivalence above breaks: (1,1) embeds in the
/// generic (2,2), yet the pair (identity, companion matrix of an
/// irreducible quadratic) has no rational subrepresentation of that
/// dimension over any of the supported fields, because such a
/// subrepresentation is exactly a rational eigenline.
#[test]
fn double_arrow_universal_subreps_diverge_from_generic_embedding() {
    let q = Quiver::kronecker(2);
    let e = HomExt::new(&q);
    let alpha = v(&[1, 1]);
    let beta = v(&[2, 2]);
    assert!(e.embeds(&alpha, &beta).unwrap());
    for (p, c0, c1) in [(2u64, 1u64, 1u64), (3, 2, 0), (5, 3, 0)] {
        let mut id = FpMat::zero(p, 2, 2);
        id.set(0, 0, 1);
        id.set(1, 1, 1);
        let mut comp = FpMat::zero(p, 2, 2);
        comp.set(0, 1, c0);
        comp.set(1, 0, 1);
        comp.set(1, 1, c1);
        let rep = Rep {
            p,
            dims: vec![2, 2],
            mats: vec![id, comp],
        };
        let subs = oracle::subrep_dim_vectors(&q, &rep, 1_000_000).unwrap();
        assert!(
            !subs.contains(&alpha),
            "companion pair over F_{p} has a rational (1,1)-subrepresentation"
        );
        assert!(subs.contains(&v(&[1, 2])));
        assert!(subs.contains(&beta));
    }
}

/// Over F_2 every invertible matrix has determinant 1, so the defect
/// determinant is basis-independent and multiplies along any
/// subrepresentation on which the pairing also vanishes.
#[test]
fn defect_determinant_multiplies_along_orthogonal_subrepresentations() {
    let q = Quiver::path(3);
    let a = v(&[1, 2, 1]);
    let b = v(&[1, 1, 2]);
    assert!(q.euler_form(&a, &b).is_zero());
    let dims_a = [1usize, 2, 1];
    let dims_b = [1usize, 1, 2];
    let ea = Rep::entry_count(&q, &dims_a) as u32;
    let eb = Rep::entry_count(&q, &dims_b) as u32;
    let mut checked = 0u64;
    for wi in 0..1u64 << eb {
        let w = Rep::from_index(&q, &dims_b, 2, wi);
        for sub in oracle::subrep_subspaces(&q, &w, 1_000_000).unwrap() {
            let du = v(&sub.iter().map(|s| s.dim() as i64).collect::<Vec<_>>());
            if !q.euler_form(&a, &du).is_zero() {
                continue;
            }
            let u = oracle::restrict_to(&q, &w, &sub);
            let wq = oracle::quotient_by(&q, &w, &sub);
            for vi in 0..1u64 << ea {
                let vr = Rep::from_index(&q, &dims_a, 2, vi);
                let whole = oracle::schofield_det(&q, &vr, &w).unwrap();
                let part = oracle::schofield_det(&q, &vr, &u).unwrap();
                let quot = oracle::schofield_det(&q, &vr, &wq).unwrap();
                assert_eq!(
                    whole,
                    part * quot % 2,
                    "rep {wi} of ({b}), sub ({du}), rep {vi} of ({a})"
                );
                assert_eq!(
                    whole != 0,
                    oracle::hom_dim(&q, &vr, &w) == 0,
                    "determinant vanishing must match a nonzero hom space"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

/// Force sampling on a pair small enough to also enumerate, and check both
/// routes land on the same generic values.
#[test]
fn sampled_and_exhaustive_oracle_routes_agree() {
    let q = Quiver::path(2);
    let a = v(&[2, 2]);
    let b = v(&[2, 2]);
    let exhaustive = oracle::brute_generic_homext(&q, &a, &b, &BruteOptions::default()).unwrap();
    assert!(!exhaustive.sampled);
    let forced = BruteOptions {
        budget: 1,
        sample_size: 4_000,
        ..BruteOptions::default()
    };
    let sampled = oracle::brute_generic_homext(&q, &a, &b, &forced).unwrap();
    assert!(sampled.sampled);
    assert_eq!((exhaustive.hom, exhaustive.ext), (sampled.hom, sampled.ext));
}
