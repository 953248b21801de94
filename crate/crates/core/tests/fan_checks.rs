//! Compatible-set fans, the finite stability cone, and cone refinement.

use quiver_stability::fan::{
    compatibility_degree, enumerate_compatible_sets, in_finite_stability_cone,
    refine_exceptional_cone, AlmostPositiveRoot,
};
use quiver_stability::homext::HomExt;
use quiver_stability::quiver::Quiver;
use quiver_stability::stability::stable_dims;
use quiver_stability::vector::{enumerate_box, IntVector};

fn v(entries: &[i64]) -> IntVector {
    IntVector::from_i64(entries)
}

#[test]
fn three_vertex_path_fan_structure() {
    let q = Quiver::path(3);
    let e = HomExt::new(&q);
    let report = enumerate_compatible_sets(&e, 2, 3).unwrap();
    assert!(report.ground_complete);
    assert_eq!(report.maximal().count(), 14);
    for set in report.maximal() {
        assert_eq!(set.members.len(), 3);
        for (i, x) in set.members.iter().enumerate() {
            for y in set.members.iter().skip(i + 1) {
                assert_eq!(compatibility_degree(&e, x, y).unwrap(), 0);
            }
        }
    }
}

/// Vanishing of the compatibility degree is symmetric, even though the
/// degree itself is not.
#[test]
fn compatibility_vanishing_is_symmetric() {
    for q in [Quiver::path(3), Quiver::kronecker(2)] {
        let e = HomExt::new(&q);
        let ground = enumerate_compatible_sets(&e, 2, 1).unwrap().ground;
        for x in &ground {
            for y in &ground {
                let xy = compatibility_degree(&e, x, y).unwrap();
                let yx = compatibility_degree(&e, y, x).unwrap();
                assert_eq!(
                    xy == 0,
                    yx == 0,
                    "{} vs {}",
                    x.describe(&q),
                    y.describe(&q)
                );
            }
        }
    }
}

/// A weight whose witness uses all |Q_0| ground elements spans no wall, so
/// membership is not effective and no stable dimension vector exists.
#[test]
fn full_dimensional_witness_is_not_effective() {
    let q = Quiver::path(2);
    let e = HomExt::new(&q);
    let alpha = v(&[1, -1]);
    let report = in_finite_stability_cone(&e, &alpha).unwrap();
    assert!(report.member);
    assert!(!report.effective);
    assert_eq!(report.witness.as_ref().unwrap().len(), 2);
    let sigma = q.weight_map(&alpha);
    assert!(stable_dims(&e, &sigma, 4).unwrap().vectors.is_empty());
}

/// Effective membership comes with stable dimension vectors.
#[test]
fn effective_members_have_stable_dims() {
    for q in [Quiver::path(2), Quiver::path(3)] {
        let e = HomExt::new(&q);
        for alpha in enumerate_box(q.len(), -2, 2) {
            let report = in_finite_stability_cone(&e, &alpha).unwrap();
            if !report.member {
                continue;
            }
            let stables = stable_dims(&e, &q.weight_map(&alpha), 4).unwrap();
            assert_eq!(
                report.effective,
                !stables.vectors.is_empty(),
                "alpha ({alpha})"
            );
        }
    }
}

#[test]
fn refinement_maps_local_summands_through_the_embedding() {
    let q = Quiver::from_indices(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let e = HomExt::new(&q);
    let roots = [v(&[0, 0, 1]), v(&[0, 1, 0])];

    let refined = refine_exceptional_cone(&e, &roots, &[], &v(&[1, 1])).unwrap();
    assert_eq!(refined.ext_quiver.len(), 2);
    assert_eq!(refined.members, vec![AlmostPositiveRoot::Root(v(&[0, 1, 1]))]);

    let refined = refine_exceptional_cone(&e, &roots, &[], &v(&[1, 2])).unwrap();
    assert_eq!(
        refined.members,
        vec![
            AlmostPositiveRoot::Root(v(&[0, 1, 0])),
            AlmostPositiveRoot::Root(v(&[0, 1, 1])),
        ]
    );
}
