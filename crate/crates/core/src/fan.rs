//! Cone structures built from almost positive roots.
//!
//! The ground set pairs the real Schur roots (up to an entry bound) with one
//! formal negative per projective. Compatibility degree zero cuts out
//! simplicial cones from this set; the fan they sweep is compared against
//! the union of the halfspace domains `D(b)` and against the cone of
//! weights whose nonnegative part is prehomogeneous.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::domains::{
    dbeta_inequalities, decompose_weight_vector, is_quiver_exceptional_set, HalfspaceSystem,
    WeightSplit,
};
use crate::dynkin;
use crate::error::{Error, Result};
use crate::homext::HomExt;
use crate::homext::RootClass;
use crate::linalg;
use crate::quiver::Quiver;
use crate::stability::{ext_quiver, validate_exceptional_sequence};
use crate::vector::{enumerate_box, IntVector};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlmostPositiveRoot {
    Root(IntVector),
    NegativeProjective(usize),
}

impl AlmostPositiveRoot {
    /// The lattice vector the element stands for: the root itself, or the
    /// negated projective root at the vertex.
    pub fn vector(&self, q: &Quiver) -> IntVector {
        match self {
            AlmostPositiveRoot::Root(v) => v.clone(),
            AlmostPositiveRoot::NegativeProjective(i) => q.projective_root(*i).neg(),
        }
    }

    pub fn describe(&self, q: &Quiver) -> String {
        match self {
            AlmostPositiveRoot::Root(v) => v.to_string(),
            AlmostPositiveRoot::NegativeProjective(i) => format!("-P({})", q.name(*i)),
        }
    }
}

/// Symmetric compatibility degree: for two roots the two generic ext
/// dimensions added, for a root against a negative projective the root's
/// entry at that vertex, and zero between two negatives.
pub fn compatibility_degree(
    e: &HomExt,
    a: &AlmostPositiveRoot,
    b: &AlmostPositiveRoot,
) -> Result<i64> {
    use AlmostPositiveRoot::*;
    match (a, b) {
        (Root(x), Root(y)) => Ok(e.ext(x, y)? + e.ext(y, x)?),
        (Root(x), NegativeProjective(i)) | (NegativeProjective(i), Root(x)) => {
            i64::try_from(x.get(*i))
                .map_err(|_| Error::Resource(format!("entry of {x} at #{i} overflows")))
        }
        (NegativeProjective(_), NegativeProjective(_)) => Ok(0),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompatibleSet {
    pub members: Vec<AlmostPositiveRoot>,
    /// No ground element extends this set, whatever the size bound was.
    pub maximal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompatibleSetsReport {
    pub ground: Vec<AlmostPositiveRoot>,
    /// Whether the entry bound provably captured every real Schur root.
    pub ground_complete: bool,
    /// Every nonempty compatible set with at most `size_bound` members.
    pub sets: Vec<CompatibleSet>,
}

impl CompatibleSetsReport {
    pub fn maximal(&self) -> impl Iterator<Item = &CompatibleSet> {
        self.sets.iter().filter(|s| s.maximal)
    }
}

/// Enumerate the compatible sets of size at most `size_bound` over the
/// ground set of real Schur roots with entries in `[0, root_bound]` plus
/// the negative projectives. A set is compatible when its members are
/// pairwise of degree zero and their vectors are linearly independent;
/// maximality is judged against the whole ground set even when the size
/// bound stops the enumeration earlier.
pub fn enumerate_compatible_sets(
    e: &HomExt,
    root_bound: i64,
    size_bound: usize,
) -> Result<CompatibleSetsReport> {
    let q = e.quiver();
    let n = q.len();
    if root_bound < 0 {
        return Err(Error::Invalid("root bound must be nonnegative".into()));
    }
    let mut ground = Vec::new();
    for v in enumerate_box(n, 0, root_bound) {
        if v.is_zero() {
            continue;
        }
        if e.root_class(&v)? == RootClass::RealSchur {
            ground.push(AlmostPositiveRoot::Root(v));
        }
    }
    for i in 0..n {
        ground.push(AlmostPositiveRoot::NegativeProjective(i));
    }
    let g = ground.len();
    if g > 64 {
        return Err(Error::Resource(format!(
            "{g} ground elements is too many to scan for compatible sets"
        )));
    }
    let ground_complete = match dynkin::underlying_dynkin(q) {
        Some(components) => components
            .iter()
            .all(|c| c.max_root_entry() <= root_bound),
        None => false,
    };
    let mut compat = vec![vec![false; g]; g];
    for i in 0..g {
        for j in i + 1..g {
            let d = compatibility_degree(e, &ground[i], &ground[j])?;
            compat[i][j] = d == 0;
            compat[j][i] = compat[i][j];
        }
    }
    let vectors: Vec<IntVector> = ground.iter().map(|r| r.vector(q)).collect();

    fn extendable_by(
        compat: &[Vec<bool>],
        vectors: &[IntVector],
        set: &[usize],
        c: usize,
    ) -> bool {
        if !set.iter().all(|&i| compat[i][c]) {
            return false;
        }
        let mut vs: Vec<IntVector> = set.iter().map(|&i| vectors[i].clone()).collect();
        vs.push(vectors[c].clone());
        linalg::independent(&vs)
    }

    fn dfs(
        start: usize,
        set: &mut Vec<usize>,
        g: usize,
        size_bound: usize,
        compat: &[Vec<bool>],
        vectors: &[IntVector],
        found: &mut Vec<(Vec<usize>, bool)>,
    ) {
        if !set.is_empty() {
            let extendable =
                (0..g).any(|c| !set.contains(&c) && extendable_by(compat, vectors, set, c));
            found.push((set.clone(), !extendable));
        }
        if set.len() == size_bound {
            return;
        }
        for c in start..g {
            if extendable_by(compat, vectors, set, c) {
                set.push(c);
                dfs(c + 1, set, g, size_bound, compat, vectors, found);
                set.pop();
            }
        }
    }

    let mut found = Vec::new();
    let mut set = Vec::new();
    dfs(0, &mut set, g, size_bound, &compat, &vectors, &mut found);
    let sets = found
        .into_iter()
        .map(|(idxs, maximal)| CompatibleSet {
            members: idxs.into_iter().map(|i| ground[i].clone()).collect(),
            maximal,
        })
        .collect();
    Ok(CompatibleSetsReport {
        ground,
        ground_complete,
        sets,
    })
}

/// Simplicial rational cone spanned by independent integer generators.
#[derive(Clone, Debug, Serialize)]
pub struct PolyCone {
    generators: Vec<IntVector>,
}

impl PolyCone {
    pub fn new(generators: Vec<IntVector>) -> Result<Self> {
        if !linalg::independent(&generators) {
            return Err(Error::DependentGenerators(format!(
                "{} generators do not span a simplicial cone",
                generators.len()
            )));
        }
        Ok(PolyCone { generators })
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// The unique expression of `v` in the generators, if `v` lies in
    /// their linear span.
    pub fn coefficients(&self, v: &IntVector) -> Option<Vec<BigRational>> {
        if let Some(g) = self.generators.first() {
            if g.len() != v.len() {
                return None;
            }
        }
        linalg::solve_columns(&self.generators, v)
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        match self.coefficients(v) {
            Some(cs) => cs.iter().all(|c| !c.is_negative()),
            None => v.is_zero(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteStabilityReport {
    /// Whether the nonnegative part of the split is prehomogeneous.
    pub member: bool,
    pub split: WeightSplit,
    /// For members, the distinct summands of the nonnegative part together
    /// with the negatives for the split's projective support.
    pub witness: Option<Vec<AlmostPositiveRoot>>,
    /// Whether the witness has fewer elements than the quiver has vertices.
    pub effective: bool,
}

/// Test whether a weight lies in the cone of weights with finitely many
/// stable dimension vectors: split off the negative projective part and ask
/// the canonical decomposition of the rest to consist of real roots.
pub fn in_finite_stability_cone(e: &HomExt, alpha: &IntVector) -> Result<FiniteStabilityReport> {
    let q = e.quiver();
    let split = decompose_weight_vector(q, alpha)?;
    let canon = if split.alpha_plus.is_zero() {
        Vec::new()
    } else {
        e.canonical_decomposition(&split.alpha_plus)?
    };
    let member = canon.iter().all(|(v, _)| q.tits_form(v) == BigInt::one());
    let witness = if member {
        let mut w: Vec<AlmostPositiveRoot> = canon
            .iter()
            .map(|(v, _)| AlmostPositiveRoot::Root(v.clone()))
            .collect();
        w.extend(
            split
                .delta
                .support()
                .into_iter()
                .map(AlmostPositiveRoot::NegativeProjective),
        );
        w.sort();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if compatibility_degree(e, &w[i], &w[j])? != 0 {
                    return Err(Error::Consistency(format!(
                        "witness members {} and {} are incompatible",
                        w[i].describe(q),
                        w[j].describe(q)
                    )));
                }
            }
        }
        let cone = PolyCone::new(w.iter().map(|r| r.vector(q)).collect()).map_err(|_| {
            Error::Consistency("witness vectors are linearly dependent".into())
        })?;
        if !cone.contains(alpha) {
            return Err(Error::Consistency(format!(
                "witness cone misses the weight {alpha}"
            )));
        }
        Some(w)
    } else {
        None
    };
    let effective = member && witness.as_ref().is_some_and(|w| w.len() < q.len());
    Ok(FiniteStabilityReport {
        member,
        split,
        witness,
        effective,
    })
}

/// Refinement of the cone of an exceptional set: decompose `eta` over the
/// sequence's ext quiver and push the summands back through the embedding
/// `eta -> sum_i eta(i) r_i`.
#[derive(Clone, Debug)]
pub struct RefinedCone {
    pub ext_quiver: Quiver,
    /// Canonical decomposition of `eta` over the ext quiver.
    pub local: Vec<(IntVector, usize)>,
    /// The same summands expressed in the ambient lattice.
    pub mapped: Vec<(IntVector, usize)>,
    /// The compatible set the refined weight lands in: the distinct mapped
    /// summands together with the set's negative vertices.
    pub members: Vec<AlmostPositiveRoot>,
}

pub fn refine_exceptional_cone(
    e: &HomExt,
    roots: &[IntVector],
    negatives: &[usize],
    eta: &IntVector,
) -> Result<RefinedCone> {
    validate_exceptional_sequence(e, roots)?;
    if !is_quiver_exceptional_set(e, roots, negatives)? {
        return Err(Error::Invalid(
            "roots and negative vertices do not form an exceptional set".into(),
        ));
    }
    if eta.len() != roots.len() {
        return Err(Error::LengthMismatch {
            got: eta.len(),
            want: roots.len(),
        });
    }
    let eq = ext_quiver(e, roots)?;
    if !dynkin::is_representation_finite(&eq) {
        return Err(Error::Invalid(
            "refinement needs a representation-finite ext quiver".into(),
        ));
    }
    let q = e.quiver();
    let embed = |v: &IntVector| {
        let mut img = IntVector::zero(q.len());
        for (k, root) in roots.iter().enumerate() {
            if !v.get(k).is_zero() {
                img = img.add(&root.scale(v.get(k)));
            }
        }
        img
    };
    let inner = HomExt::new(&eq);
    let local = if eta.is_zero() {
        Vec::new()
    } else {
        inner.canonical_decomposition(eta)?
    };
    let mut mapped = Vec::new();
    for (v, m) in &local {
        let img = embed(v);
        if eq.tits_form(v) != q.tits_form(&img) {
            return Err(Error::Consistency(format!(
                "embedding is not an isometry at {v}"
            )));
        }
        if inner.root_class(v)? != e.root_class(&img)? {
            return Err(Error::Consistency(format!(
                "summand {v} maps to {img} of a different class"
            )));
        }
        mapped.push((img, *m));
    }
    let mut members: Vec<AlmostPositiveRoot> = mapped
        .iter()
        .map(|(v, _)| AlmostPositiveRoot::Root(v.clone()))
        .collect();
    members.extend(negatives.iter().map(|&i| AlmostPositiveRoot::NegativeProjective(i)));
    members.sort();
    members.dedup();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if compatibility_degree(e, &members[i], &members[j])? != 0 {
                return Err(Error::Consistency(format!(
                    "refined members {} and {} are incompatible",
                    members[i].describe(q),
                    members[j].describe(q)
                )));
            }
        }
    }
    let cone = PolyCone::new(members.iter().map(|r| r.vector(q)).collect())
        .map_err(|_| Error::Consistency("refined members are linearly dependent".into()))?;
    let image = embed(eta);
    if !cone.contains(&image) {
        return Err(Error::Consistency(format!(
            "refined cone misses the embedded weight {image}"
        )));
    }
    Ok(RefinedCone {
        ext_quiver: eq,
        local,
        mapped,
        members,
    })
}

/// A domain point outside every cone: the first one with nonpositive Tits
/// form when any exists, otherwise the first one found.
#[derive(Clone, Debug, Serialize)]
pub struct DichotomyWitness {
    pub alpha: IntVector,
    pub tits: i64,
    /// A vector whose halfspace domain contains `alpha`.
    pub beta: IntVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct DichotomyReport {
    /// True when every point of a halfspace domain lies in a compatible cone.
    pub agree: bool,
    pub both: usize,
    pub neither: usize,
    pub halfspace_only: usize,
    pub cone_only: usize,
    pub witness: Option<DichotomyWitness>,
}

fn in_system(q: &Quiver, alpha: &IntVector, sys: &HalfspaceSystem) -> bool {
    if !q.euler_form(alpha, &sys.equality).is_zero() {
        return false;
    }
    sys.inequalities
        .iter()
        .all(|s| q.euler_form(alpha, s) <= BigInt::zero())
}

/// Sweep the box `[-alpha_bound, alpha_bound]^n` and compare two
/// descriptions of each point: membership in some domain `D(b)` for a real
/// Schur root `b` in `[0, root_bound]^n`, against membership in the cone
/// of some compatible set with fewer elements than there are vertices. The
/// first route is a union of halfspace systems, the second a union of
/// simplicial cones; `agree` records whether the first is covered by the
/// second on the box.
pub fn check_domains_vs_clusters(
    e: &HomExt,
    root_bound: i64,
    alpha_bound: i64,
) -> Result<DichotomyReport> {
    let q = e.quiver();
    let n = q.len();
    if alpha_bound < 0 || root_bound < 0 {
        return Err(Error::Invalid("bounds must be nonnegative".into()));
    }
    let mut systems = Vec::new();
    for beta in enumerate_box(n, 0, root_bound) {
        if beta.is_zero() || e.root_class(&beta)? != RootClass::RealSchur {
            continue;
        }
        let sys = dbeta_inequalities(e, &beta)?;
        systems.push((beta, sys));
    }
    let sets = enumerate_compatible_sets(e, root_bound, n.saturating_sub(1))?;
    let mut cones = Vec::new();
    for s in &sets.sets {
        cones.push(PolyCone::new(
            s.members.iter().map(|r| r.vector(q)).collect(),
        )?);
    }
    let mut both = 0;
    let mut neither = 0;
    let mut halfspace_only = 0;
    let mut cone_only = 0;
    let mut witness: Option<DichotomyWitness> = None;
    for alpha in enumerate_box(n, -alpha_bound, alpha_bound) {
        let in_domain = systems
            .iter()
            .find(|(_, sys)| in_system(q, &alpha, sys))
            .map(|(beta, _)| beta.clone());
        let in_cone = cones.iter().any(|c| c.contains(&alpha));
        match (&in_domain, in_cone) {
            (Some(_), true) => both += 1,
            (None, false) => neither += 1,
            (Some(beta), false) => {
                halfspace_only += 1;
                let tits = i64::try_from(&q.tits_form(&alpha)).unwrap_or(i64::MAX);
                let replace = match &witness {
                    None => true,
                    Some(w) => w.tits > 0 && tits <= 0,
                };
                if replace {
                    witness = Some(DichotomyWitness {
                        alpha: alpha.clone(),
                        tits,
                        beta: beta.clone(),
                    });
                }
            }
            (None, true) => cone_only += 1,
        }
    }
    Ok(DichotomyReport {
        agree: halfspace_only == 0,
        both,
        neither,
        halfspace_only,
        cone_only,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[i64]) -> IntVector {
        IntVector::from_i64(entries)
    }

    #[test]
    fn path_compatibility_degrees() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        use AlmostPositiveRoot::*;
        let d = |a: &AlmostPositiveRoot, b: &AlmostPositiveRoot| {
            compatibility_degree(&e, a, b).unwrap()
        };
        assert_eq!(d(&Root(v(&[0, 1])), &Root(v(&[1, 0]))), 1);
        assert_eq!(d(&Root(v(&[0, 1])), &Root(v(&[1, 1]))), 0);
        assert_eq!(d(&Root(v(&[1, 0])), &Root(v(&[1, 1]))), 0);
        assert_eq!(d(&Root(v(&[1, 1])), &NegativeProjective(0)), 1);
        assert_eq!(d(&Root(v(&[0, 1])), &NegativeProjective(0)), 0);
        assert_eq!(d(&NegativeProjective(0), &NegativeProjective(1)), 0);
    }

    #[test]
    fn path_clusters() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        let report = enumerate_compatible_sets(&e, 2, 2).unwrap();
        assert_eq!(report.ground.len(), 5);
        assert!(report.ground_complete);
        assert_eq!(report.sets.len(), 10);
        assert_eq!(report.maximal().count(), 5);
        assert!(report.maximal().all(|s| s.members.len() == 2));
        let capped = enumerate_compatible_sets(&e, 2, 1).unwrap();
        assert_eq!(capped.sets.len(), 5);
        assert!(capped.maximal().count() == 0);
    }

    #[test]
    fn cone_membership() {
        let c = PolyCone::new(vec![v(&[1, 0]), v(&[1, 1])]).unwrap();
        assert!(c.contains(&v(&[2, 1])));
        assert!(c.contains(&v(&[0, 0])));
        assert!(!c.contains(&v(&[1, 2])));
        assert!(!c.contains(&v(&[-1, 0])));
        assert!(matches!(
            PolyCone::new(vec![v(&[1, 1]), v(&[2, 2])]),
            Err(Error::DependentGenerators(_))
        ));
    }

    #[test]
    fn finite_stability_on_kronecker() {
        let k2 = Quiver::kronecker(2);
        let e = HomExt::new(&k2);
        let iso = in_finite_stability_cone(&e, &v(&[1, 1])).unwrap();
        assert!(!iso.member);
        assert!(iso.witness.is_none());
        let pre = in_finite_stability_cone(&e, &v(&[2, 1])).unwrap();
        assert!(pre.member);
        assert_eq!(
            pre.witness.as_deref(),
            Some(&[AlmostPositiveRoot::Root(v(&[2, 1]))][..])
        );
        assert!(pre.effective);
        let neg = in_finite_stability_cone(&e, &v(&[-1, -1])).unwrap();
        assert!(neg.member);
        assert_eq!(neg.split.alpha_plus, v(&[0, 1]));
        assert_eq!(neg.split.delta, v(&[1, 0]));
        assert_eq!(
            neg.witness.as_deref(),
            Some(
                &[
                    AlmostPositiveRoot::Root(v(&[0, 1])),
                    AlmostPositiveRoot::NegativeProjective(0),
                ][..]
            )
        );
        assert!(!neg.effective);
    }

    #[test]
    fn refine_along_a_path_sequence() {
        let a3 = Quiver::path(3);
        let e = HomExt::new(&a3);
        let roots = [v(&[0, 0, 1]), v(&[0, 1, 0])];
        let r = refine_exceptional_cone(&e, &roots, &[], &v(&[1, 1])).unwrap();
        assert_eq!(r.ext_quiver.len(), 2);
        assert_eq!(r.local, vec![(v(&[1, 1]), 1)]);
        assert_eq!(r.mapped, vec![(v(&[0, 1, 1]), 1)]);
        assert_eq!(r.members, vec![AlmostPositiveRoot::Root(v(&[0, 1, 1]))]);
        let with_neg = refine_exceptional_cone(&e, &roots, &[0], &v(&[1, 0])).unwrap();
        assert_eq!(
            with_neg.members,
            vec![
                AlmostPositiveRoot::Root(v(&[0, 0, 1])),
                AlmostPositiveRoot::NegativeProjective(0),
            ]
        );
    }

    #[test]
    fn path_dichotomy_agrees() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        let report = check_domains_vs_clusters(&e, 2, 2).unwrap();
        assert!(report.agree);
        assert_eq!(report.halfspace_only, 0);
        assert_eq!(report.cone_only, 0);
        assert_eq!(report.both, 11);
        assert_eq!(report.neither, 14);
        assert!(report.witness.is_none());
    }
}
