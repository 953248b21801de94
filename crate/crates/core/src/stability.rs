//! King stability of dimension vectors and weight-stable decompositions.
//!
//! A weight `sigma` makes a nonzero dimension vector `b` semistable when
//! `sigma . b = 0` and every generic subrepresentation dimension pairs
//! nonpositively; it is stable when every proper nonzero one pairs strictly
//! negatively. Everything is decided through the engine's generic
//! subrepresentation tables, so a single engine instance amortizes work
//! across calls.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::dynkin;
use crate::error::{Error, Result};
use crate::homext::{HomExt, RootClass};
use crate::linalg;
use crate::quiver::Quiver;
use crate::rng::Lcg;
use crate::vector::{enumerate_box, IntVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilityStatus {
    Stable,
    StrictlySemistable,
    Unstable,
}

fn check_weight(e: &HomExt, sigma: &IntVector) -> Result<()> {
    if sigma.len() != e.quiver().len() {
        return Err(Error::LengthMismatch {
            got: sigma.len(),
            want: e.quiver().len(),
        });
    }
    Ok(())
}

/// King stability of the generic representation of `beta` at weight `sigma`.
pub fn stability_status(
    e: &HomExt,
    sigma: &IntVector,
    beta: &IntVector,
) -> Result<StabilityStatus> {
    check_weight(e, sigma)?;
    if beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !sigma.dot(beta).is_zero() {
        return Ok(StabilityStatus::Unstable);
    }
    let mut strict = true;
    for s in e.embedded_subvectors(beta)? {
        if s.is_zero() || &s == beta {
            continue;
        }
        let pairing = sigma.dot(&s);
        if pairing > BigInt::zero() {
            return Ok(StabilityStatus::Unstable);
        }
        if pairing.is_zero() {
            strict = false;
        }
    }
    if strict {
        Ok(StabilityStatus::Stable)
    } else {
        Ok(StabilityStatus::StrictlySemistable)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StableDims {
    pub vectors: Vec<IntVector>,
    /// True when the box scan provably saw every stable dimension vector:
    /// the quiver is representation-finite and the bound covers the largest
    /// root entry.
    pub complete: bool,
    pub bound: i64,
}

/// All stable dimension vectors with entries in `[0, bound]`, ascending.
pub fn stable_dims(e: &HomExt, sigma: &IntVector, bound: i64) -> Result<StableDims> {
    check_weight(e, sigma)?;
    if bound < 0 {
        return Err(Error::Invalid("negative scan bound".into()));
    }
    let n = e.quiver().len();
    let mut vectors = Vec::new();
    for b in enumerate_box(n, 0, bound) {
        if b.is_zero() {
            continue;
        }
        if stability_status(e, sigma, &b)? == StabilityStatus::Stable {
            vectors.push(b);
        }
    }
    let complete = dynkin::underlying_dynkin(e.quiver())
        .map(|types| types.iter().all(|t| t.max_root_entry() <= bound))
        .unwrap_or(false);
    Ok(StableDims {
        vectors,
        complete,
        bound,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StableDecomposition {
    /// Stable summands with multiplicities, ordered so that whenever
    /// `ext(x, y) > 0` the summand `y` comes before `x`.
    pub parts: Vec<(IntVector, usize)>,
}

/// Decomposition of a semistable `beta` into stable dimension vectors.
///
/// Summands are peeled greedily: the smallest stable generic
/// subrepresentation dimension (by total, then lexicographically) is
/// removed until nothing is left; the remainder must stay semistable at
/// every step. The grouped summands are then ordered by the ext condition
/// above, smallest first among incomparable ones.
pub fn sigma_stable_decomposition(
    e: &HomExt,
    sigma: &IntVector,
    beta: &IntVector,
) -> Result<StableDecomposition> {
    if stability_status(e, sigma, beta)? == StabilityStatus::Unstable {
        return Err(Error::Unstable(format!(
            "{beta} is unstable for weight {sigma}"
        )));
    }
    let mut rem = beta.clone();
    let mut counts: BTreeMap<IntVector, usize> = BTreeMap::new();
    while !rem.is_zero() {
        let mut pick: Option<IntVector> = None;
        for s in e.embedded_subvectors(&rem)? {
            if s.is_zero() {
                continue;
            }
            if stability_status(e, sigma, &s)? != StabilityStatus::Stable {
                continue;
            }
            let better = match &pick {
                None => true,
                Some(cur) => (s.total(), &s) < (cur.total(), cur),
            };
            if better {
                pick = Some(s);
            }
        }
        let Some(part) = pick else {
            return Err(Error::Consistency(format!(
                "semistable remainder {rem} has no stable subdimension"
            )));
        };
        rem = rem.sub(&part);
        *counts.entry(part).or_insert(0) += 1;
        if !rem.is_zero() && stability_status(e, sigma, &rem)? == StabilityStatus::Unstable {
            return Err(Error::Consistency(format!(
                "remainder {rem} became unstable while decomposing {beta}"
            )));
        }
    }
    let parts = order_by_ext(e, counts)?;
    Ok(StableDecomposition { parts })
}

/// Order distinct summands so that `ext(x, y) > 0` forces `y` before `x`;
/// ties are broken ascending. A cycle in the constraints is an error.
fn order_by_ext(
    e: &HomExt,
    counts: BTreeMap<IntVector, usize>,
) -> Result<Vec<(IntVector, usize)>> {
    let items: Vec<(IntVector, usize)> = counts.into_iter().collect();
    let l = items.len();
    let mut must_precede = vec![vec![false; l]; l]; // [y][x]: y before x
    for x in 0..l {
        for y in 0..l {
            if x != y && e.ext(&items[x].0, &items[y].0)? > 0 {
                must_precede[y][x] = true;
            }
        }
    }
    let mut placed = vec![false; l];
    let mut out = Vec::with_capacity(l);
    for _ in 0..l {
        let next = (0..l).find(|&x| {
            !placed[x] && (0..l).all(|y| placed[y] || !must_precede[y][x])
        });
        let Some(x) = next else {
            return Err(Error::Consistency(
                "cyclic ext constraints among stable summands".into(),
            ));
        };
        placed[x] = true;
        out.push(items[x].clone());
    }
    Ok(out)
}

/// Check that `roots` is an exceptional sequence: each entry a real Schur
/// root, no hom or ext from earlier to later entries, nonpositive Euler
/// pairing from later to earlier, and linear independence.
pub fn validate_exceptional_sequence(e: &HomExt, roots: &[IntVector]) -> Result<()> {
    for r in roots {
        if e.root_class(r)? != RootClass::RealSchur {
            return Err(Error::InvalidRoot(format!("{r} is not a real Schur root")));
        }
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let (hom, ext) = e.homext(&roots[i], &roots[j])?;
            if hom != 0 || ext != 0 {
                return Err(Error::InvalidCollection(format!(
                    "positions {} and {}: hom {hom}, ext {ext} must both vanish",
                    i + 1,
                    j + 1
                )));
            }
            let back = e.quiver().euler_form(&roots[j], &roots[i]);
            if back > BigInt::zero() {
                return Err(Error::InvalidCollection(format!(
                    "positions {} back to {}: Euler pairing {back} is positive",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    if !linalg::independent(roots) {
        return Err(Error::InvalidCollection(
            "roots are linearly dependent".into(),
        ));
    }
    Ok(())
}

/// Search for an ordering of `roots` that forms an exceptional sequence.
/// Returns the reordered roots, or None when no ordering works. Every root
/// must be real Schur; anything else is the caller's contract violation.
pub fn order_exceptional_sequence(
    e: &HomExt,
    roots: &[IntVector],
) -> Result<Option<Vec<IntVector>>> {
    for r in roots {
        if e.root_class(r)? != RootClass::RealSchur {
            return Err(Error::InvalidRoot(format!("{r} is not a real Schur root")));
        }
    }
    let l = roots.len();
    let mut ok = vec![vec![false; l]; l];
    for i in 0..l {
        for j in 0..l {
            if i != j {
                ok[i][j] = e.homext(&roots[i], &roots[j])? == (0, 0)
                    && e.quiver().euler_form(&roots[j], &roots[i]) <= BigInt::zero();
            }
        }
    }

    fn extend(ok: &[Vec<bool>], used: &mut [bool], seq: &mut Vec<usize>, l: usize) -> bool {
        if seq.len() == l {
            return true;
        }
        for c in 0..l {
            if used[c] || !seq.iter().all(|&p| ok[p][c]) {
                continue;
            }
            used[c] = true;
            seq.push(c);
            if extend(ok, used, seq, l) {
                return true;
            }
            seq.pop();
            used[c] = false;
        }
        false
    }

    let mut used = vec![false; l];
    let mut seq = Vec::new();
    if !extend(&ok, &mut used, &mut seq, l) {
        return Ok(None);
    }
    let ordered: Vec<IntVector> = seq.into_iter().map(|i| roots[i].clone()).collect();
    validate_exceptional_sequence(e, &ordered)?;
    Ok(Some(ordered))
}

/// The quiver induced by an exceptional sequence: one vertex per root
/// (named "1", "2", ... in sequence order) and `-<r_j, r_i>` arrows from
/// `j` to `i` for `i < j`. Acyclic by construction.
pub fn ext_quiver(e: &HomExt, roots: &[IntVector]) -> Result<Quiver> {
    validate_exceptional_sequence(e, roots)?;
    let l = roots.len();
    let mut arrows = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let pairing = e.quiver().euler_form(&roots[j], &roots[i]);
            let mult = i64::try_from(-pairing).map_err(|_| {
                Error::Resource("arrow multiplicity exceeds the representable range".into())
            })?;
            let (hom, ext) = e.homext(&roots[j], &roots[i])?;
            if hom != 0 || ext != mult {
                return Err(Error::Consistency(format!(
                    "pair ({}, {}): hom {hom}, ext {ext} disagree with pairing {mult}",
                    j + 1,
                    i + 1
                )));
            }
            for _ in 0..mult {
                arrows.push((j, i));
            }
        }
    }
    Quiver::from_indices(l, &arrows)
}

#[derive(Clone, Debug, Serialize)]
pub struct IsometryReport {
    pub samples: u64,
    pub ok: bool,
    pub counterexample: Option<(IntVector, IntVector)>,
}

/// Check on random pairs that the linear map sending the unit vectors of
/// the induced quiver to the roots carries its Euler form to the ambient
/// one. Entries are drawn in `0..=10` from the documented generator; the
/// scan stops at the first counterexample.
pub fn verify_embedding_isometry(
    e: &HomExt,
    roots: &[IntVector],
    samples: u64,
    seed: u64,
) -> Result<IsometryReport> {
    let eq = ext_quiver(e, roots)?;
    let q = e.quiver();
    let l = roots.len();
    let mut rng = Lcg::new(seed);
    let draw = |rng: &mut Lcg| {
        let entries: Vec<i64> = (0..l).map(|_| rng.below(11) as i64).collect();
        IntVector::from_i64(&entries)
    };
    let embed = |v: &IntVector| {
        let mut out = IntVector::zero(q.len());
        for (i, r) in roots.iter().enumerate() {
            out = out.add(&r.scale(v.get(i)));
        }
        out
    };
    for k in 0..samples {
        let eta = draw(&mut rng);
        let gamma = draw(&mut rng);
        let inner = eq.euler_form(&eta, &gamma);
        let outer = q.euler_form(&embed(&eta), &embed(&gamma));
        if inner != outer {
            return Ok(IsometryReport {
                samples: k + 1,
                ok: false,
                counterexample: Some((eta, gamma)),
            });
        }
    }
    Ok(IsometryReport {
        samples,
        ok: true,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[i64]) -> IntVector {
        IntVector::from_i64(entries)
    }

    #[test]
    fn kronecker_stability_cases() {
        let q = Quiver::kronecker(2);
        let e = HomExt::new(&q);
        let sigma = v(&[1, -1]);
        assert_eq!(
            stability_status(&e, &sigma, &v(&[1, 1])).unwrap(),
            StabilityStatus::Stable
        );
        assert_eq!(
            stability_status(&e, &sigma, &v(&[2, 2])).unwrap(),
            StabilityStatus::StrictlySemistable
        );
        assert_eq!(
            stability_status(&e, &sigma, &v(&[1, 2])).unwrap(),
            StabilityStatus::Unstable
        );
        assert_eq!(
            stability_status(&e, &v(&[2, -1]), &v(&[1, 2])).unwrap(),
            StabilityStatus::Stable
        );
        // The sign flip pays the subvector (0,1) positively.
        assert_eq!(
            stability_status(&e, &v(&[-2, 1]), &v(&[1, 2])).unwrap(),
            StabilityStatus::Unstable
        );
        assert!(matches!(
            stability_status(&e, &sigma, &v(&[0, 0])),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn kronecker_stable_scan() {
        let q = Quiver::kronecker(2);
        let e = HomExt::new(&q);
        let got = stable_dims(&e, &v(&[1, -1]), 6).unwrap();
        assert_eq!(got.vectors, vec![v(&[1, 1])]);
        assert!(!got.complete);
    }

    #[test]
    fn path_stable_scan_is_complete() {
        let q = Quiver::path(2);
        let e = HomExt::new(&q);
        let got = stable_dims(&e, &v(&[1, -1]), 3).unwrap();
        assert_eq!(got.vectors, vec![v(&[1, 1])]);
        assert!(got.complete);
        let zero = stable_dims(&e, &v(&[0, 0]), 2).unwrap();
        assert_eq!(zero.vectors, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn stable_decomposition_orders_by_ext() {
        let q = Quiver::path(2);
        let e = HomExt::new(&q);
        let got = sigma_stable_decomposition(&e, &v(&[0, 0]), &v(&[1, 1])).unwrap();
        assert_eq!(got.parts, vec![(v(&[0, 1]), 1), (v(&[1, 0]), 1)]);
        let stable = sigma_stable_decomposition(&e, &v(&[1, -1]), &v(&[2, 2])).unwrap();
        assert_eq!(stable.parts, vec![(v(&[1, 1]), 2)]);
        assert!(matches!(
            sigma_stable_decomposition(&e, &v(&[1, -1]), &v(&[2, 1])),
            Err(Error::Unstable(_))
        ));
    }

    #[test]
    fn exceptional_sequence_checks() {
        let q = Quiver::path(2);
        let e = HomExt::new(&q);
        let seq = [v(&[0, 1]), v(&[1, 0])];
        validate_exceptional_sequence(&e, &seq).unwrap();
        assert!(validate_exceptional_sequence(&e, &[v(&[1, 0]), v(&[0, 1])]).is_err());
        assert!(validate_exceptional_sequence(&e, &[v(&[1, 1]), v(&[1, 1])]).is_err());
        let k2 = Quiver::kronecker(2);
        let ek = HomExt::new(&k2);
        assert!(matches!(
            validate_exceptional_sequence(&ek, &[v(&[1, 1])]),
            Err(Error::InvalidRoot(_))
        ));
    }

    #[test]
    fn ordering_search_finds_valid_sequences() {
        let q = Quiver::path(2);
        let e = HomExt::new(&q);
        let ordered = order_exceptional_sequence(&e, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(ordered, Some(vec![v(&[0, 1]), v(&[1, 0])]));
        assert_eq!(
            order_exceptional_sequence(&e, &[v(&[1, 1]), v(&[1, 1])]).unwrap(),
            None
        );
        let k2 = Quiver::kronecker(2);
        let ek = HomExt::new(&k2);
        assert!(matches!(
            order_exceptional_sequence(&ek, &[v(&[1, 1])]),
            Err(Error::InvalidRoot(_))
        ));
    }

    #[test]
    fn ext_quiver_of_a_path_sequence() {
        let q = Quiver::path(2);
        let e = HomExt::new(&q);
        let eq = ext_quiver(&e, &[v(&[0, 1]), v(&[1, 0])]).unwrap();
        assert_eq!(eq.len(), 2);
        assert_eq!(eq.arrow_mult(1, 0), 1);
        assert_eq!(eq.arrow_list(), &[(1, 0)]);
        assert_eq!(eq.names(), &["1".to_string(), "2".to_string()]);
    }

    #[test]
    fn isometry_holds_for_valid_sequences() {
        let q = Quiver::path(3);
        let e = HomExt::new(&q);
        let seq = [v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])];
        let report = verify_embedding_isometry(&e, &seq, 100, 7).unwrap();
        assert!(report.ok);
        assert_eq!(report.samples, 100);
    }
}
