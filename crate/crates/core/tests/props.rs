//! Randomized structural properties over a fixed stable of small quivers.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use quiver_stability::domains::{decompose_weight_vector, reconstruct};
use quiver_stability::homext::HomExt;
use quiver_stability::quiver::Quiver;
use quiver_stability::stability::{stability_status, StabilityStatus};
use quiver_stability::vector::IntVector;

fn nth_quiver(i: usize) -> Quiver {
    match i {
        0 => Quiver::path(2),
        1 => Quiver::path(3),
        2 => Quiver::kronecker(2),
        _ => Quiver::from_indices(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
    }
}

fn fit(q: &Quiver, entries: &[i64]) -> IntVector {
    IntVector::from_i64(&entries[..q.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hom_minus_ext_equals_the_euler_form(
        qi in 0usize..4,
        a in proptest::collection::vec(0i64..=3, 3),
        b in proptest::collection::vec(0i64..=3, 3),
    ) {
        let q = nth_quiver(qi);
        let e = HomExt::new(&q);
        let a = fit(&q, &a);
        let b = fit(&q, &b);
        let (hom, ext) = e.homext(&a, &b).unwrap();
        prop_assert!(hom >= 0);
        prop_assert!(ext >= 0);
        prop_assert_eq!(BigInt::from(hom - ext), q.euler_form(&a, &b));
    }

    #[test]
    fn ext_routes_agree(
        qi in 0usize..4,
        a in proptest::collection::vec(0i64..=3, 3),
        b in proptest::collection::vec(0i64..=3, 3),
    ) {
        let q = nth_quiver(qi);
        let e = HomExt::new(&q);
        let a = fit(&q, &a);
        let b = fit(&q, &b);
        prop_assert_eq!(e.ext(&a, &b).unwrap(), e.ext_via_subs(&a, &b).unwrap());
    }

    #[test]
    fn canonical_decomposition_reassembles(
        qi in 0usize..4,
        a in proptest::collection::vec(0i64..=4, 3),
    ) {
        let q = nth_quiver(qi);
        let e = HomExt::new(&q);
        let a = fit(&q, &a);
        prop_assume!(!a.is_zero());
        let canon = e.canonical_decomposition(&a).unwrap();
        let mut sum = IntVector::zero(q.len());
        for (c, m) in &canon {
            sum = sum.add(&c.scale(&BigInt::from(*m)));
        }
        prop_assert_eq!(sum, a);
        for (i, (x, _)) in canon.iter().enumerate() {
            for (y, _) in canon.iter().skip(i + 1) {
                prop_assert_eq!(e.ext(x, y).unwrap(), 0);
                prop_assert_eq!(e.ext(y, x).unwrap(), 0);
            }
        }
    }

    #[test]
    fn weight_split_round_trips(
        qi in 0usize..4,
        a in proptest::collection::vec(-6i64..=6, 3),
    ) {
        let q = nth_quiver(qi);
        let a = fit(&q, &a);
        let split = decompose_weight_vector(&q, &a).unwrap();
        prop_assert!(split.alpha_plus.is_nonnegative());
        prop_assert!(split.delta.is_nonnegative());
        prop_assert_eq!(reconstruct(&q, &split), a);
        for i in split.alpha_plus.support() {
            prop_assert!(split.delta.get(i).is_zero());
        }
    }

    #[test]
    fn embedding_is_componentwise_monotone(
        qi in 0usize..4,
        a in proptest::collection::vec(0i64..=3, 3),
        b in proptest::collection::vec(0i64..=3, 3),
    ) {
        let q = nth_quiver(qi);
        let e = HomExt::new(&q);
        let a = fit(&q, &a);
        let b = fit(&q, &b);
        if e.embeds(&a, &b).unwrap() {
            prop_assert!(a.le(&b));
        }
    }

    #[test]
    fn every_reported_subvector_embeds(
        qi in 0usize..4,
        b in proptest::collection::vec(0i64..=3, 3),
    ) {
        let q = nth_quiver(qi);
        let e = HomExt::new(&q);
        let b = fit(&q, &b);
        for s in e.embedded_subvectors(&b).unwrap() {
            prop_assert!(e.embeds(&s, &b).unwrap());
        }
    }

    #[test]
    fn nonvanishing_weight_means_unstable(
        qi in 0usize..4,
        sigma in proptest::collection::vec(-3i64..=3, 3),
        b in proptest::collection::vec(0i64..=3, 3),
    ) {
        let q = nth_quiver(qi);
        let e = HomExt::new(&q);
        let sigma = fit(&q, &sigma);
        let b = fit(&q, &b);
        prop_assume!(!b.is_zero());
        if !sigma.dot(&b).is_zero() {
            prop_assert_eq!(
                stability_status(&e, &sigma, &b).unwrap(),
                StabilityStatus::Unstable
            );
        }
    }
}
