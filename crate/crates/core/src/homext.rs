//! Generic hom and ext dimensions for pairs of dimension vectors.
//!
//! The engine keeps one table per dimension vector: the list of its generic
//! quotient dimensions. A vector `z` is the dimension of a generic
//! subrepresentation of `y` exactly when `ext(z, y - z) = 0`, while
//!
//! ```text
//! ext(a, b) = max { -<a, q> : q a generic quotient dimension of b },
//! ```
//!
//! so the two notions are built together by recursion on total dimension
//! (the base cases `z = 0` and `z = y` embed trivially). `hom` follows from
//! `hom - ext = <a, b>`. Interned vectors and cached weight rows keep the
//! inner loops on machine integers; the `Limits` cap turns runaway inputs
//! into a resource error instead of an allocation storm.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::vector::IntVector;

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest entry allowed in any vector the engine interns.
    pub max_entry: i64,
    /// Cap on interned entries plus quotient-table slots.
    pub max_cells: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_entry: 64,
            max_cells: 32_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootClass {
    RealSchur,
    ImaginarySchur,
    NotSchur,
}

struct EngineState {
    ids: HashMap<Vec<i64>, u32>,
    vecs: Vec<Vec<i64>>,
    /// Weight row of each vector: `w[j] = v[j] - sum_t mult(t, j) v[t]`, so
    /// that `<v, u> = w . u`.
    weights: Vec<Vec<i128>>,
    quots: Vec<Option<Arc<[u32]>>>,
    cells: u64,
}

/// Shared per-quiver engine; all methods take `&self` and are safe to call
/// from multiple threads.
pub struct HomExt<'q> {
    quiver: &'q Quiver,
    limits: Limits,
    state: Mutex<EngineState>,
}

fn dot_row(w: &[i128], v: &[i64]) -> i128 {
    w.iter().zip(v).map(|(a, &b)| a * b as i128).sum()
}

fn next_below(z: &mut [i64], bound: &[i64]) -> bool {
    let mut i = z.len();
    while i > 0 {
        i -= 1;
        if z[i] < bound[i] {
            z[i] += 1;
            for e in &mut z[i + 1..] {
                *e = 0;
            }
            return true;
        }
    }
    false
}

impl<'q> HomExt<'q> {
    pub fn new(quiver: &'q Quiver) -> Self {
        Self::with_limits(quiver, Limits::default())
    }

    pub fn with_limits(quiver: &'q Quiver, limits: Limits) -> Self {
        HomExt {
            quiver,
            limits,
            state: Mutex::new(EngineState {
                ids: HashMap::new(),
                vecs: Vec::new(),
                weights: Vec::new(),
                quots: Vec::new(),
                cells: 0,
            }),
        }
    }

    pub fn quiver(&self) -> &'q Quiver {
        self.quiver
    }

    fn check_dim_vector(&self, v: &IntVector) -> Result<Vec<i64>> {
        if v.len() != self.quiver.len() {
            return Err(Error::LengthMismatch {
                got: v.len(),
                want: self.quiver.len(),
            });
        }
        if let Some(i) = v.first_negative() {
            return Err(Error::NegativeEntry(i));
        }
        let entries = v.to_i64().ok_or_else(|| {
            Error::Resource(format!(
                "entry exceeds the engine bound {}",
                self.limits.max_entry
            ))
        })?;
        if entries.iter().any(|&e| e > self.limits.max_entry) {
            return Err(Error::Resource(format!(
                "entry exceeds the engine bound {}",
                self.limits.max_entry
            )));
        }
        Ok(entries)
    }

    fn intern(&self, st: &mut EngineState, v: Vec<i64>) -> Result<u32> {
        if let Some(&id) = st.ids.get(&v) {
            return Ok(id);
        }
        let n = v.len();
        let mut weight = vec![0i128; n];
        for j in 0..n {
            let mut w = v[j] as i128;
            for t in 0..n {
                let m = self.quiver.arrow_mult(t, j);
                if m != 0 {
                    w -= m as i128 * v[t] as i128;
                }
            }
            weight[j] = w;
        }
        st.cells += n as u64;
        if st.cells > self.limits.max_cells {
            return Err(Error::Resource(format!(
                "engine table exceeds {} cells",
                self.limits.max_cells
            )));
        }
        let id = u32::try_from(st.vecs.len())
            .map_err(|_| Error::Resource("too many interned vectors".into()))?;
        st.ids.insert(v.clone(), id);
        st.vecs.push(v);
        st.weights.push(weight);
        st.quots.push(None);
        Ok(id)
    }

    /// Build (or fetch) the generic quotient table of `y`.
    fn ensure_quots(&self, st: &mut EngineState, y: u32) -> Result<Arc<[u32]>> {
        if let Some(q) = &st.quots[y as usize] {
            return Ok(q.clone());
        }
        let bound = st.vecs[y as usize].clone();
        let n = bound.len();
        let mut list: Vec<u32> = Vec::new();
        let mut z = vec![0i64; n];
        loop {
            let is_zero = z.iter().all(|&e| e == 0);
            let is_full = z == bound;
            let accept = if is_zero || is_full {
                true
            } else {
                let w: Vec<i64> = bound.iter().zip(&z).map(|(b, s)| b - s).collect();
                let zi = self.intern(st, z.clone())?;
                let wi = self.intern(st, w)?;
                self.ext_is_zero(st, zi, wi)?
            };
            if accept {
                let q: Vec<i64> = bound.iter().zip(&z).map(|(b, s)| b - s).collect();
                let qi = self.intern(st, q)?;
                list.push(qi);
            }
            if !next_below(&mut z, &bound) {
                break;
            }
        }
        st.cells += list.len() as u64;
        if st.cells > self.limits.max_cells {
            return Err(Error::Resource(format!(
                "engine table exceeds {} cells",
                self.limits.max_cells
            )));
        }
        let arc: Arc<[u32]> = list.into();
        st.quots[y as usize] = Some(arc.clone());
        Ok(arc)
    }

    /// `ext(a, b) == 0`, with an early exit on the first witness against.
    fn ext_is_zero(&self, st: &mut EngineState, a: u32, b: u32) -> Result<bool> {
        let quots = self.ensure_quots(st, b)?;
        for &q in quots.iter() {
            if dot_row(&st.weights[a as usize], &st.vecs[q as usize]) < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn ext_ids(&self, st: &mut EngineState, a: u32, b: u32) -> Result<i64> {
        let quots = self.ensure_quots(st, b)?;
        let mut best: i128 = 0;
        for &q in quots.iter() {
            let val = -dot_row(&st.weights[a as usize], &st.vecs[q as usize]);
            best = best.max(val);
        }
        Ok(best as i64)
    }

    /// Generic ext dimension of the pair `(a, b)`.
    pub fn ext(&self, a: &IntVector, b: &IntVector) -> Result<i64> {
        let av = self.check_dim_vector(a)?;
        let bv = self.check_dim_vector(b)?;
        let mut st = self.state.lock().unwrap();
        let ai = self.intern(&mut st, av)?;
        let bi = self.intern(&mut st, bv)?;
        self.ext_ids(&mut st, ai, bi)
    }

    /// Same value computed through the subvectors of the first argument:
    /// `max { -<s, b> : s a generic subrepresentation dimension of a }`.
    /// Useful as an internal cross-check of the quotient-side recursion.
    pub fn ext_via_subs(&self, a: &IntVector, b: &IntVector) -> Result<i64> {
        let av = self.check_dim_vector(a)?;
        let bv = self.check_dim_vector(b)?;
        let mut st = self.state.lock().unwrap();
        let ai = self.intern(&mut st, av)?;
        let bi = self.intern(&mut st, bv)?;
        let quots = self.ensure_quots(&mut st, ai)?;
        let full = dot_row(&st.weights[ai as usize], &st.vecs[bi as usize]);
        let mut best: i128 = 0;
        for &q in quots.iter() {
            // -<a - q, b> = <q, b> - <a, b>
            let val = dot_row(&st.weights[q as usize], &st.vecs[bi as usize]) - full;
            best = best.max(val);
        }
        Ok(best as i64)
    }

    /// Generic hom dimension, from `hom - ext = <a, b>`.
    pub fn hom(&self, a: &IntVector, b: &IntVector) -> Result<i64> {
        self.homext(a, b).map(|(h, _)| h)
    }

    /// Generic `(hom, ext)` of the pair.
    pub fn homext(&self, a: &IntVector, b: &IntVector) -> Result<(i64, i64)> {
        let av = self.check_dim_vector(a)?;
        let bv = self.check_dim_vector(b)?;
        let mut st = self.state.lock().unwrap();
        let ai = self.intern(&mut st, av)?;
        let bi = self.intern(&mut st, bv)?;
        let ext = self.ext_ids(&mut st, ai, bi)?;
        let euler = dot_row(&st.weights[ai as usize], &st.vecs[bi as usize]);
        let hom = euler + ext as i128;
        debug_assert!(hom >= 0);
        Ok((hom as i64, ext))
    }

    /// Whether `a` is the dimension vector of a generic subrepresentation
    /// of `b`.
    pub fn embeds(&self, a: &IntVector, b: &IntVector) -> Result<bool> {
        let _ = self.check_dim_vector(a)?;
        let _ = self.check_dim_vector(b)?;
        if !a.le(b) {
            return Ok(false);
        }
        Ok(self.ext(a, &b.sub(a))? == 0)
    }

    /// All generic subrepresentation dimensions of `b`, ascending. Contains
    /// the zero vector and `b` itself.
    pub fn embedded_subvectors(&self, b: &IntVector) -> Result<Vec<IntVector>> {
        let bv = self.check_dim_vector(b)?;
        let mut st = self.state.lock().unwrap();
        let bi = self.intern(&mut st, bv)?;
        let quots = self.ensure_quots(&mut st, bi)?;
        let mut out: Vec<IntVector> = quots
            .iter()
            .map(|&q| {
                let qv = &st.vecs[q as usize];
                let sv: Vec<i64> = st.vecs[bi as usize]
                    .iter()
                    .zip(qv)
                    .map(|(b, q)| b - q)
                    .collect();
                IntVector::from_i64(&sv)
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// All generic quotient dimensions of `b`, ascending. Contains the zero
    /// vector and `b` itself.
    pub fn generic_quotients(&self, b: &IntVector) -> Result<Vec<IntVector>> {
        let bv = self.check_dim_vector(b)?;
        let mut st = self.state.lock().unwrap();
        let bi = self.intern(&mut st, bv)?;
        let quots = self.ensure_quots(&mut st, bi)?;
        let mut out: Vec<IntVector> = quots
            .iter()
            .map(|&q| IntVector::from_i64(&st.vecs[q as usize]))
            .collect();
        out.sort();
        Ok(out)
    }

    /// First decomposition `y = z + w` with `ext(z, w) = ext(w, z) = 0` and
    /// both parts nonzero, scanning `z` in ascending lexicographic order.
    fn find_split(&self, st: &mut EngineState, y: u32) -> Result<Option<(u32, u32)>> {
        let bound = st.vecs[y as usize].clone();
        let mut z = vec![0i64; bound.len()];
        if !next_below(&mut z, &bound) {
            return Ok(None);
        }
        loop {
            let w: Vec<i64> = bound.iter().zip(&z).map(|(b, s)| b - s).collect();
            if w.iter().all(|&e| e == 0) {
                return Ok(None);
            }
            // The condition is symmetric in (z, w), so only visit each
            // unordered pair once.
            if z <= w {
                let zi = self.intern(st, z.clone())?;
                let wi = self.intern(st, w)?;
                if self.ext_is_zero(st, zi, wi)? && self.ext_is_zero(st, wi, zi)? {
                    return Ok(Some((zi, wi)));
                }
            }
            if !next_below(&mut z, &bound) {
                return Ok(None);
            }
        }
    }

    fn decompose(&self, st: &mut EngineState, y: u32, out: &mut Vec<u32>) -> Result<()> {
        if st.vecs[y as usize].iter().all(|&e| e == 0) {
            return Ok(());
        }
        match self.find_split(st, y)? {
            Some((z, w)) => {
                self.decompose(st, z, out)?;
                self.decompose(st, w, out)?;
            }
            None => out.push(y),
        }
        Ok(())
    }

    /// Decomposition of `a` into Schur root summands with multiplicities,
    /// sorted ascending by summand. The empty list is returned for zero.
    pub fn canonical_decomposition(&self, a: &IntVector) -> Result<Vec<(IntVector, usize)>> {
        let av = self.check_dim_vector(a)?;
        let mut st = self.state.lock().unwrap();
        let ai = self.intern(&mut st, av)?;
        let mut parts = Vec::new();
        self.decompose(&mut st, ai, &mut parts)?;
        let mut counts: BTreeMap<IntVector, usize> = BTreeMap::new();
        for id in parts {
            *counts
                .entry(IntVector::from_i64(&st.vecs[id as usize]))
                .or_insert(0) += 1;
        }
        Ok(counts.into_iter().collect())
    }

    /// Classify a nonzero dimension vector: a Schur root (real or
    /// imaginary) or a vector that decomposes.
    pub fn root_class(&self, a: &IntVector) -> Result<RootClass> {
        if a.is_zero() {
            return Err(Error::ZeroVector);
        }
        let av = self.check_dim_vector(a)?;
        let mut st = self.state.lock().unwrap();
        let ai = self.intern(&mut st, av)?;
        if self.find_split(&mut st, ai)?.is_some() {
            return Ok(RootClass::NotSchur);
        }
        let tits = dot_row(&st.weights[ai as usize], &st.vecs[ai as usize]);
        if tits == 1 {
            Ok(RootClass::RealSchur)
        } else if tits <= 0 {
            Ok(RootClass::ImaginarySchur)
        } else {
            Err(Error::Consistency(format!(
                "vector {a} admits no decomposition but has Tits form {tits}"
            )))
        }
    }

    /// Whether the generic representation of `a` has a dense orbit, i.e.
    /// every summand of the canonical decomposition is a real Schur root.
    pub fn is_prehomogeneous(&self, a: &IntVector) -> Result<bool> {
        let parts = self.canonical_decomposition(a)?;
        Ok(parts
            .iter()
            .all(|(v, _)| self.quiver.tits_form(v) == BigInt::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[i64]) -> IntVector {
        IntVector::from_i64(entries)
    }

    #[test]
    fn a2_ext_values() {
        let q = Quiver::path(2);
        let e = HomExt::new(&q);
        assert_eq!(e.ext(&v(&[1, 0]), &v(&[0, 1])).unwrap(), 1);
        assert_eq!(e.ext(&v(&[0, 1]), &v(&[1, 0])).unwrap(), 0);
        assert_eq!(e.homext(&v(&[1, 1]), &v(&[1, 0])).unwrap(), (1, 0));
        assert_eq!(e.homext(&v(&[1, 1]), &v(&[1, 1])).unwrap(), (1, 0));
    }

    #[test]
    fn kronecker_isotropic_pairs() {
        let q = Quiver::kronecker(2);
        let e = HomExt::new(&q);
        assert_eq!(e.homext(&v(&[1, 1]), &v(&[1, 1])).unwrap(), (0, 0));
        assert_eq!(e.ext(&v(&[1, 0]), &v(&[0, 1])).unwrap(), 2);
        assert_eq!(e.homext(&v(&[1, 2]), &v(&[1, 2])).unwrap(), (1, 0));
    }

    #[test]
    fn embeds_and_subvectors() {
        let q = Quiver::path(2);
        let e = HomExt::new(&q);
        assert!(e.embeds(&v(&[0, 1]), &v(&[1, 1])).unwrap());
        assert!(!e.embeds(&v(&[1, 0]), &v(&[1, 1])).unwrap());
        assert!(e.embeds(&v(&[1, 1]), &v(&[1, 1])).unwrap());
        assert!(e.embeds(&v(&[0, 0]), &v(&[1, 1])).unwrap());
        let k2 = Quiver::kronecker(2);
        let ek = HomExt::new(&k2);
        let subs = ek.embedded_subvectors(&v(&[2, 2])).unwrap();
        assert_eq!(
            subs,
            vec![
                v(&[0, 0]),
                v(&[0, 1]),
                v(&[0, 2]),
                v(&[1, 1]),
                v(&[1, 2]),
                v(&[2, 2]),
            ]
        );
    }

    #[test]
    fn quotients_mirror_subvectors() {
        let q = Quiver::path(3);
        let e = HomExt::new(&q);
        let b = v(&[1, 2, 1]);
        let subs = e.embedded_subvectors(&b).unwrap();
        let mut from_quots: Vec<IntVector> = e
            .generic_quotients(&b)
            .unwrap()
            .into_iter()
            .map(|qv| b.sub(&qv))
            .collect();
        from_quots.sort();
        assert_eq!(subs, from_quots);
    }

    #[test]
    fn canonical_decompositions() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        assert_eq!(
            e.canonical_decomposition(&v(&[2, 1])).unwrap(),
            vec![(v(&[1, 0]), 1), (v(&[1, 1]), 1)]
        );
        assert_eq!(
            e.canonical_decomposition(&v(&[2, 2])).unwrap(),
            vec![(v(&[1, 1]), 2)]
        );
        assert_eq!(e.canonical_decomposition(&v(&[0, 0])).unwrap(), vec![]);
        let k2 = Quiver::kronecker(2);
        let ek = HomExt::new(&k2);
        assert_eq!(
            ek.canonical_decomposition(&v(&[2, 2])).unwrap(),
            vec![(v(&[1, 1]), 2)]
        );
        assert_eq!(
            ek.canonical_decomposition(&v(&[1, 2])).unwrap(),
            vec![(v(&[1, 2]), 1)]
        );
    }

    #[test]
    fn root_classes() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        assert_eq!(e.root_class(&v(&[1, 1])).unwrap(), RootClass::RealSchur);
        assert_eq!(e.root_class(&v(&[2, 2])).unwrap(), RootClass::NotSchur);
        assert!(matches!(
            e.root_class(&v(&[0, 0])).unwrap_err(),
            Error::ZeroVector
        ));
        let k2 = Quiver::kronecker(2);
        let ek = HomExt::new(&k2);
        assert_eq!(ek.root_class(&v(&[1, 1])).unwrap(), RootClass::ImaginarySchur);
        assert_eq!(ek.root_class(&v(&[1, 2])).unwrap(), RootClass::RealSchur);
        let k3 = Quiver::kronecker(3);
        let ek3 = HomExt::new(&k3);
        assert_eq!(ek3.root_class(&v(&[1, 1])).unwrap(), RootClass::ImaginarySchur);
    }

    #[test]
    fn prehomogeneous_examples() {
        let a2 = Quiver::path(2);
        let e = HomExt::new(&a2);
        assert!(e.is_prehomogeneous(&v(&[1, 1])).unwrap());
        assert!(e.is_prehomogeneous(&v(&[2, 1])).unwrap());
        let k2 = Quiver::kronecker(2);
        let ek = HomExt::new(&k2);
        assert!(!ek.is_prehomogeneous(&v(&[1, 1])).unwrap());
        assert!(ek.is_prehomogeneous(&v(&[2, 4])).unwrap());
    }

    #[test]
    fn dual_route_agrees_on_a_grid() {
        for q in [Quiver::path(2), Quiver::kronecker(2)] {
            let e = HomExt::new(&q);
            for a in crate::vector::enumerate_box(2, 0, 3) {
                for b in crate::vector::enumerate_box(2, 0, 3) {
                    assert_eq!(
                        e.ext(&a, &b).unwrap(),
                        e.ext_via_subs(&a, &b).unwrap(),
                        "ext mismatch at {a}, {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn resource_limits_bite() {
        let q = Quiver::kronecker(2);
        let e = HomExt::with_limits(
            &q,
            Limits {
                max_entry: 4,
                max_cells: 1_000_000,
            },
        );
        assert!(matches!(
            e.ext(&v(&[5, 5]), &v(&[1, 1])).unwrap_err(),
            Error::Resource(_)
        ));
        let tiny = HomExt::with_limits(
            &q,
            Limits {
                max_entry: 64,
                max_cells: 10,
            },
        );
        assert!(matches!(
            tiny.ext(&v(&[3, 3]), &v(&[3, 3])).unwrap_err(),
            Error::Resource(_)
        ));
    }
}
