//! Semi-invariant domains of dimension vectors and their cone structure.
//!
//! For a nonzero `b`, the domain `D(b)` consists of the lattice vectors `a`
//! with `<a, b> = 0` and `<a, b'> <= 0` for every generic subrepresentation
//! dimension `b'` of `b`. Membership can be decided either directly from
//! that halfspace description or through the split of `a` into a
//! nonnegative part and a negative-projective part; the two routes agree
//! and are kept separate so they can be played against each other in tests.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homext::{HomExt, RootClass};
use crate::linalg;
use crate::quiver::Quiver;
use crate::stability::{order_exceptional_sequence, stable_dims, StableDims};
use crate::vector::IntVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSplit {
    pub alpha_plus: IntVector,
    /// Multiplicities of the negated projective roots: the split satisfies
    /// `alpha = alpha_plus - sum_i delta(i) gamma_i` with disjoint supports.
    pub delta: IntVector,
}

/// Split an arbitrary lattice vector as a nonnegative vector minus a
/// nonnegative combination of projective roots, with disjoint supports.
///
/// Scanning in topological order keeps the choice canonical: at each vertex
/// the accumulated value either stays in `alpha_plus` (when nonnegative) or
/// is pushed onto the projective at that vertex.
pub fn decompose_weight_vector(q: &Quiver, alpha: &IntVector) -> Result<WeightSplit> {
    if alpha.len() != q.len() {
        return Err(Error::LengthMismatch {
            got: alpha.len(),
            want: q.len(),
        });
    }
    let n = q.len();
    let mut plus = vec![BigInt::zero(); n];
    let mut delta = vec![BigInt::zero(); n];
    for &i in q.topo_order() {
        let mut t = alpha.get(i).clone();
        for j in 0..n {
            if !delta[j].is_zero() {
                t += &delta[j] * q.projective_root(j).get(i);
            }
        }
        if t >= BigInt::zero() {
            plus[i] = t;
        } else {
            delta[i] = -t;
        }
    }
    let split = WeightSplit {
        alpha_plus: IntVector::new(plus),
        delta: IntVector::new(delta),
    };
    debug_assert!(reconstruct(q, &split) == *alpha);
    debug_assert!(split
        .alpha_plus
        .support()
        .iter()
        .all(|i| split.delta.get(*i).is_zero()));
    Ok(split)
}

/// `alpha_plus - sum_i delta(i) gamma_i`, the vector a split stands for.
pub fn reconstruct(q: &Quiver, split: &WeightSplit) -> IntVector {
    let mut out = split.alpha_plus.clone();
    for i in 0..q.len() {
        let d = split.delta.get(i);
        if !d.is_zero() {
            out = out.sub(&q.projective_root(i).scale(d));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HalfspaceSystem {
    /// Pair to zero against this vector.
    pub equality: IntVector,
    /// Pair nonpositively against each of these, ascending.
    pub inequalities: Vec<IntVector>,
}

/// Halfspace description of `D(b)`: one equality against `b` itself and
/// one inequality per proper nonzero generic subrepresentation dimension.
pub fn dbeta_inequalities(e: &HomExt, beta: &IntVector) -> Result<HalfspaceSystem> {
    if beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    let inequalities = e
        .embedded_subvectors(beta)?
        .into_iter()
        .filter(|s| !s.is_zero() && s != beta)
        .collect();
    Ok(HalfspaceSystem {
        equality: beta.clone(),
        inequalities,
    })
}

/// Direct membership test of `alpha` in `D(beta)` from the halfspace
/// description. `alpha` may have entries of any sign.
pub fn dbeta_contains(e: &HomExt, beta: &IntVector, alpha: &IntVector) -> Result<bool> {
    let q = e.quiver();
    if alpha.len() != q.len() {
        return Err(Error::LengthMismatch {
            got: alpha.len(),
            want: q.len(),
        });
    }
    let sys = dbeta_inequalities(e, beta)?;
    if !q.euler_form(alpha, &sys.equality).is_zero() {
        return Ok(false);
    }
    Ok(sys
        .inequalities
        .iter()
        .all(|s| q.euler_form(alpha, s) <= BigInt::zero()))
}

/// Membership in `D(beta)` through the weight split: the negative part
/// must avoid the support of `beta` and the nonnegative part must have no
/// generic hom or ext to it.
pub fn dbeta_contains_via_split(e: &HomExt, beta: &IntVector, alpha: &IntVector) -> Result<bool> {
    if beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    let split = decompose_weight_vector(e.quiver(), alpha)?;
    let beta_support: BTreeSet<usize> = beta.support().into_iter().collect();
    if split
        .delta
        .support()
        .iter()
        .any(|i| beta_support.contains(i))
    {
        return Ok(false);
    }
    Ok(e.homext(&split.alpha_plus, beta)? == (0, 0))
}

/// Whether the given roots together with the given "negative" vertices form
/// a quiver exceptional set: every root a real Schur root vanishing on the
/// negative vertices, some ordering of the roots an exceptional sequence,
/// and the roots plus the projectives at those vertices independent.
///
/// A root that is not real Schur is an error (the caller picked it, so it
/// is a contract violation, not a "no" answer).
pub fn is_quiver_exceptional_set(
    e: &HomExt,
    roots: &[IntVector],
    negatives: &[usize],
) -> Result<bool> {
    let q = e.quiver();
    for &i in negatives {
        if i >= q.len() {
            return Err(Error::UnknownVertex(format!("#{i}")));
        }
    }
    for r in roots {
        if e.root_class(r)? != RootClass::RealSchur {
            return Err(Error::InvalidRoot(format!("{r} is not a real Schur root")));
        }
    }
    if roots
        .iter()
        .any(|r| negatives.iter().any(|&i| !r.get(i).is_zero()))
    {
        return Ok(false);
    }
    let mut gens: Vec<IntVector> = roots.to_vec();
    gens.extend(negatives.iter().map(|&i| q.projective_root(i).clone()));
    if !linalg::independent(&gens) {
        return Ok(false);
    }
    if order_exceptional_sequence(e, roots)?.is_none() {
        return Ok(false);
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExceptionalSet {
    pub roots: Vec<IntVector>,
    pub negatives: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeDecomposition {
    /// The weight `-<e_i, beta>` per vertex, whose stables generate the
    /// walls of `D(beta)`.
    pub sigma: IntVector,
    /// Stable dimension vectors found within the scan bound.
    pub stable_roots: StableDims,
    /// Vertices outside the support of `beta`.
    pub negative_vertices: Vec<usize>,
    /// Maximal quiver exceptional sets among the scanned generators; the
    /// cone spanned by a member's roots and negated projectives lies in
    /// `D(beta)`. Roots are stored in exceptional-sequence order.
    pub members: Vec<ExceptionalSet>,
    /// Every passing set, maximal or not, when requested.
    pub all_sets: Option<Vec<ExceptionalSet>>,
}

/// Decompose `D(beta)` (for a real Schur root `beta`) into the cones of
/// maximal quiver exceptional sets drawn from the stable roots of its
/// associated weight and the vertices missing from its support.
pub fn dbeta_cone_decomposition(
    e: &HomExt,
    beta: &IntVector,
    root_bound: i64,
    include_all: bool,
) -> Result<ConeDecomposition> {
    let q = e.quiver();
    if e.root_class(beta)? != RootClass::RealSchur {
        return Err(Error::InvalidRoot(format!(
            "cone decomposition needs a real Schur root, got {beta}"
        )));
    }
    let n = q.len();
    let sigma_entries: Vec<BigInt> = (0..n)
        .map(|i| -q.euler_form(&IntVector::unit(n, i), beta))
        .collect();
    let sigma = IntVector::new(sigma_entries);
    let all_stables = stable_dims(e, &sigma, root_bound)?;
    let mut stables = Vec::new();
    for s in &all_stables.vectors {
        if e.root_class(s)? == RootClass::RealSchur {
            stables.push(s.clone());
        }
    }
    let negative_vertices: Vec<usize> = {
        let supp: BTreeSet<usize> = beta.support().into_iter().collect();
        (0..n).filter(|i| !supp.contains(i)).collect()
    };
    if stables.len() + negative_vertices.len() > 20 {
        return Err(Error::Resource(
            "too many cone generators to scan all subsets".into(),
        ));
    }
    let mut passing: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for rmask in 0u32..(1 << stables.len()) {
        let rsel: Vec<usize> = (0..stables.len()).filter(|i| rmask >> i & 1 == 1).collect();
        let roots: Vec<IntVector> = rsel.iter().map(|&i| stables[i].clone()).collect();
        for nmask in 0u32..(1 << negative_vertices.len()) {
            let nsel: Vec<usize> = (0..negative_vertices.len())
                .filter(|i| nmask >> i & 1 == 1)
                .collect();
            let negs: Vec<usize> = nsel.iter().map(|&i| negative_vertices[i]).collect();
            if is_quiver_exceptional_set(e, &roots, &negs)? {
                passing.push((rsel.clone(), nsel));
            }
        }
    }
    let mut members = Vec::new();
    let mut all_sets = include_all.then(Vec::new);
    for (i, (r, ng)) in passing.iter().enumerate() {
        let picked: Vec<IntVector> = r.iter().map(|&k| stables[k].clone()).collect();
        let ordered = order_exceptional_sequence(e, &picked)?.ok_or_else(|| {
            Error::Consistency("a passing set lost its sequence ordering".into())
        })?;
        let set = ExceptionalSet {
            roots: ordered,
            negatives: ng.iter().map(|&k| negative_vertices[k]).collect(),
        };
        if set.roots.len() + set.negatives.len() >= n && n > 0 {
            return Err(Error::Consistency(format!(
                "exceptional set with {} members on {} vertices",
                set.roots.len() + set.negatives.len(),
                n
            )));
        }
        if let Some(all) = all_sets.as_mut() {
            all.push(set.clone());
        }
        let rset: BTreeSet<usize> = r.iter().copied().collect();
        let nset: BTreeSet<usize> = ng.iter().copied().collect();
        let dominated = passing.iter().enumerate().any(|(j, (r2, n2))| {
            if i == j {
                return false;
            }
            let rs2: BTreeSet<usize> = r2.iter().copied().collect();
            let ns2: BTreeSet<usize> = n2.iter().copied().collect();
            rset.is_subset(&rs2)
                && nset.is_subset(&ns2)
                && (rset.len() < rs2.len() || nset.len() < ns2.len())
        });
        if !dominated {
            members.push(set);
        }
    }
    members.sort();
    if let Some(all) = all_sets.as_mut() {
        all.sort();
    }
    Ok(ConeDecomposition {
        sigma,
        stable_roots: all_stables,
        negative_vertices,
        members,
        all_sets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::enumerate_box;

    fn v(entries: &[i64]) -> IntVector {
        IntVector::from_i64(entries)
    }

    #[test]
    fn split_examples() {
        let a2 = Quiver::path(2);
        let s = decompose_weight_vector(&a2, &v(&[-1, 2])).unwrap();
        assert_eq!(s.alpha_plus, v(&[0, 3]));
        assert_eq!(s.delta, v(&[1, 0]));
        let t = decompose_weight_vector(&a2, &v(&[2, 1])).unwrap();
        assert_eq!(t.alpha_plus, v(&[2, 1]));
        assert_eq!(t.delta, v(&[0, 0]));
        assert_eq!(reconstruct(&a2, &s), v(&[-1, 2]));
    }

    #[test]
    fn split_round_trip_on_a_box() {
        let q = Quiver::from_indices(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        for alpha in enumerate_box(3, -3, 3) {
            let s = decompose_weight_vector(&q, &alpha).unwrap();
            assert!(s.alpha_plus.is_nonnegative());
            assert!(s.delta.is_nonnegative());
            assert_eq!(reconstruct(&q, &s), alpha, "at {alpha}");
            for i in s.delta.support() {
                assert!(s.alpha_plus.get(i).is_zero());
            }
        }
    }

    #[test]
    fn domain_of_the_path_root() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        let sys = dbeta_inequalities(&e, &v(&[1, 1])).unwrap();
        assert_eq!(sys.equality, v(&[1, 1]));
        assert_eq!(sys.inequalities, vec![v(&[0, 1])]);
        // D((1,1)) is the ray through (1,0).
        assert!(dbeta_contains(&e, &v(&[1, 1]), &v(&[1, 0])).unwrap());
        assert!(dbeta_contains(&e, &v(&[1, 1]), &v(&[3, 0])).unwrap());
        assert!(dbeta_contains(&e, &v(&[1, 1]), &v(&[0, 0])).unwrap());
        assert!(!dbeta_contains(&e, &v(&[1, 1]), &v(&[-1, 0])).unwrap());
        assert!(!dbeta_contains(&e, &v(&[1, 1]), &v(&[1, 1])).unwrap());
    }

    #[test]
    fn both_membership_routes_agree() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        for beta in [v(&[1, 0]), v(&[0, 1]), v(&[1, 1]), v(&[2, 1])] {
            for alpha in enumerate_box(2, -3, 3) {
                assert_eq!(
                    dbeta_contains(&e, &beta, &alpha).unwrap(),
                    dbeta_contains_via_split(&e, &beta, &alpha).unwrap(),
                    "at beta {beta}, alpha {alpha}"
                );
            }
        }
    }

    #[test]
    fn exceptional_set_checks() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        assert!(is_quiver_exceptional_set(&e, &[v(&[1, 1])], &[]).unwrap());
        // (0,1) does not vanish at vertex 1.
        assert!(!is_quiver_exceptional_set(&e, &[v(&[0, 1])], &[1]).unwrap());
        assert!(!is_quiver_exceptional_set(&e, &[v(&[1, 1])], &[1]).unwrap());
        assert!(matches!(
            is_quiver_exceptional_set(&e, &[v(&[1, 1])], &[2]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(is_quiver_exceptional_set(&e, &[v(&[0, 1]), v(&[1, 0])], &[]).unwrap());
        assert!(matches!(
            is_quiver_exceptional_set(&e, &[v(&[2, 2])], &[]),
            Err(Error::InvalidRoot(_))
        ));
    }

    #[test]
    fn cone_decomposition_of_path_domains() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        let d = dbeta_cone_decomposition(&e, &v(&[1, 1]), 3, false).unwrap();
        // sigma(i) = -<e_i, (1,1)>: <e_0, b> = b_0 - b_1 = 0, <e_1, b> = 1.
        assert_eq!(d.sigma, v(&[0, -1]));
        assert_eq!(
            d.members,
            vec![ExceptionalSet {
                roots: vec![v(&[1, 0])],
                negatives: vec![],
            }]
        );
        let d2 = dbeta_cone_decomposition(&e, &v(&[0, 1]), 3, false).unwrap();
        assert_eq!(
            d2.members,
            vec![
                ExceptionalSet {
                    roots: vec![],
                    negatives: vec![0],
                },
                ExceptionalSet {
                    roots: vec![v(&[1, 1])],
                    negatives: vec![],
                },
            ]
        );
    }
}
