//! Brute-force finite-field checks, independent of the generic-dimension
//! engine.
//!
//! Representations are explicit matrices over a small prime field. Hom
//! spaces are kernels of the defect map of a pair of representations,
//! subrepresentations are enumerated as tuples of subspaces closed under
//! the arrow maps, and stability is evaluated literally from those tuples.
//! Nothing in this module consults the recursive routines elsewhere in the
//! crate, so agreement between the two paths is genuine evidence.
//!
//! Generic values are approached from above: semicontinuity gives
//! `dim Hom(V, W) >= hom(a, b)` for every pair with the right dimension
//! vectors, so the minimum over many pairs (and over several primes, since
//! a single small field can miss the generic locus) is an upper bound that
//! is exact whenever some enumerated pair is generic enough.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rng::Lcg;
use crate::stability::StabilityStatus;
use crate::vector::IntVector;

/// Largest per-vertex dimension the oracle will materialize.
const MAX_ORACLE_DIM: usize = 10_000;

/// Chunk size for parallel minimum scans.
const CHUNK: u64 = 4096;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn field_check(p: u64) -> Result<()> {
    if !is_prime(p) || p > (1 << 31) {
        return Err(Error::BadField(p));
    }
    Ok(())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Dense matrix over the prime field F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMat {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

struct Elim {
    rank: usize,
    pivots: Vec<usize>,
    swaps: usize,
}

impl FpMat {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u64; self.rows];
        for r in 0..self.rows {
            let mut acc = 0u64;
            for c in 0..self.cols {
                acc = (acc + self.get(r, c) * v[c]) % self.p;
            }
            out[r] = acc;
        }
        out
    }

    /// Forward elimination in place; pivot rows are not rescaled.
    fn eliminate(&mut self) -> Elim {
        let mut rank = 0;
        let mut pivots = Vec::new();
        let mut swaps = 0;
        for col in 0..self.cols {
            if rank >= self.rows {
                break;
            }
            let Some(pr) = (rank..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != rank {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, rank * self.cols + c);
                }
                swaps += 1;
            }
            let inv = inv_mod(self.get(rank, col), self.p);
            for r in rank + 1..self.rows {
                let lead = self.get(r, col);
                if lead == 0 {
                    continue;
                }
                let f = lead * inv % self.p;
                for c in col..self.cols {
                    let sub = f * self.get(rank, c) % self.p;
                    let cur = self.get(r, c);
                    self.set(r, c, cur + self.p - sub);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Elim { rank, pivots, swaps }
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().rank
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn det(&self) -> Result<u64> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let e = m.eliminate();
        if e.rank < m.rows {
            return Ok(0);
        }
        let mut d = 1u64;
        for (r, &c) in e.pivots.iter().enumerate() {
            d = d * m.get(r, c) % m.p;
        }
        if e.swaps % 2 == 1 {
            d = (m.p - d) % m.p;
        }
        Ok(d)
    }
}

/// A subspace of F_p^d given by a reduced-row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: FpMat,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Subtracts the unique span element agreeing on the pivot coordinates;
    /// the result is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.basis.modulus();
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let coeff = out[pc];
            if coeff == 0 {
                continue;
            }
            for c in 0..out.len() {
                let sub = coeff * self.basis.get(r, c) % p;
                out[c] = (out[c] + p - sub) % p;
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }
}

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, k, cur, out);
            cur.pop();
        }
    }
    rec(0, d, k, &mut cur, &mut out);
    out
}

/// All `k`-dimensional subspaces of F_p^d, each as an echelon basis. The
/// order is deterministic: pivot sets lexicographically, then free entries
/// counted in base `p`.
pub fn subspaces_of_dim(p: u64, d: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in combinations(d, k) {
        let in_pivots = |c: usize| pivots.binary_search(&c).is_ok();
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..d {
                if !in_pivots(c) {
                    free.push((r, c));
                }
            }
        }
        let total = (p as u128).pow(free.len() as u32);
        let mut idx: u128 = 0;
        while idx < total {
            let mut basis = FpMat::zero(p, k, d);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(r, pc, 1);
            }
            let mut rest = idx;
            for &(r, c) in &free {
                basis.set(r, c, (rest % p as u128) as u64);
                rest /= p as u128;
            }
            out.push(Subspace {
                basis,
                pivots: pivots.clone(),
            });
            idx += 1;
        }
    }
    out
}

pub fn all_subspaces(p: u64, d: usize) -> Vec<Subspace> {
    (0..=d).flat_map(|k| subspaces_of_dim(p, d, k)).collect()
}

fn gaussian_binomial(p: u128, d: usize, k: usize) -> u128 {
    // Product form ((p^d - 1)...(p^(d-k+1) - 1)) / ((p^k - 1)...(p - 1)),
    // computed as an exact integer by interleaving the factors.
    let mut num = 1u128;
    for i in 0..k {
        num = num.saturating_mul(p.saturating_pow((d - i) as u32) - 1);
    }
    let mut den = 1u128;
    for i in 0..k {
        den *= p.saturating_pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Number of subspaces of F_p^d of all dimensions (saturating).
pub fn subspace_count(p: u64, d: usize) -> u128 {
    (0..=d)
        .map(|k| gaussian_binomial(p as u128, d, k))
        .fold(0u128, u128::saturating_add)
}

/// A representation over F_p: one matrix per arrow of the expanded arrow
/// list, where an arrow `t -> h` carries a `dims[h] x dims[t]` matrix.
#[derive(Clone, Debug)]
pub struct Rep {
    pub p: u64,
    pub dims: Vec<usize>,
    pub mats: Vec<FpMat>,
}

impl Rep {
    /// Total number of matrix entries for a representation of this shape.
    pub fn entry_count(q: &Quiver, dims: &[usize]) -> u128 {
        q.arrow_list()
            .iter()
            .map(|&(t, h)| dims[t] as u128 * dims[h] as u128)
            .sum()
    }

    /// Decode `index` into matrix entries, base `p`, little-endian, filling
    /// arrows in list order and each matrix in row-major order.
    pub fn from_index(q: &Quiver, dims: &[usize], p: u64, index: u64) -> Rep {
        let mut rest = index;
        let mats = q
            .arrow_list()
            .iter()
            .map(|&(t, h)| {
                let mut m = FpMat::zero(p, dims[h], dims[t]);
                for r in 0..dims[h] {
                    for c in 0..dims[t] {
                        m.set(r, c, rest % p);
                        rest /= p;
                    }
                }
                m
            })
            .collect();
        Rep {
            p,
            dims: dims.to_vec(),
            mats,
        }
    }

    /// Fill every entry from the generator, in the same order as
    /// [`Rep::from_index`].
    pub fn sample(q: &Quiver, dims: &[usize], p: u64, rng: &mut Lcg) -> Rep {
        let mats = q
            .arrow_list()
            .iter()
            .map(|&(t, h)| {
                let mut m = FpMat::zero(p, dims[h], dims[t]);
                for r in 0..dims[h] {
                    for c in 0..dims[t] {
                        m.set(r, c, rng.below(p));
                    }
                }
                m
            })
            .collect();
        Rep {
            p,
            dims: dims.to_vec(),
            mats,
        }
    }

    pub fn dim_vector(&self) -> IntVector {
        IntVector::from_i64(&self.dims.iter().map(|&d| d as i64).collect::<Vec<_>>())
    }
}

/// Matrix of the defect map `phi -> (phi(h) V(a) - W(a) phi(t))_a` whose
/// kernel is Hom(V, W). Columns are the entries of the `phi(i)`, vertex by
/// vertex and row-major within each block; rows are indexed the same way by
/// arrow and result entry.
fn defect_matrix(q: &Quiver, v: &Rep, w: &Rep) -> FpMat {
    assert_eq!(v.p, w.p, "representations over different fields");
    let p = v.p;
    let n = q.len();
    let mut colbase = vec![0usize; n + 1];
    for i in 0..n {
        colbase[i + 1] = colbase[i] + v.dims[i] * w.dims[i];
    }
    let cols = colbase[n];
    let rows: usize = q
        .arrow_list()
        .iter()
        .map(|&(t, h)| v.dims[t] * w.dims[h])
        .sum();
    let mut m = FpMat::zero(p, rows, cols);
    let mut rowbase = 0usize;
    for (a, &(t, h)) in q.arrow_list().iter().enumerate() {
        let va = &v.mats[a];
        let wa = &w.mats[a];
        for r in 0..w.dims[h] {
            for c in 0..v.dims[t] {
                let row = rowbase + r * v.dims[t] + c;
                // + phi(h)[r][j] * V(a)[j][c]
                for j in 0..v.dims[h] {
                    let col = colbase[h] + r * v.dims[h] + j;
                    let cur = m.get(row, col);
                    m.set(row, col, cur + va.get(j, c));
                }
                // - W(a)[r][s] * phi(t)[s][c]
                for s in 0..w.dims[t] {
                    let col = colbase[t] + s * v.dims[t] + c;
                    let cur = m.get(row, col);
                    m.set(row, col, cur + p - wa.get(r, s) % p);
                }
            }
        }
        rowbase += v.dims[t] * w.dims[h];
    }
    m
}

/// Dimension of Hom(V, W) over F_p, from the kernel of the defect map.
pub fn hom_dim(q: &Quiver, v: &Rep, w: &Rep) -> usize {
    defect_matrix(q, v, w).kernel_dim()
}

/// Determinant of the defect map; defined only when the matrix is square,
/// i.e. when `<dim V, dim W> = 0`.
pub fn schofield_det(q: &Quiver, v: &Rep, w: &Rep) -> Result<u64> {
    if v.p != w.p {
        return Err(Error::FieldMismatch);
    }
    defect_matrix(q, v, w).det()
}

#[derive(Clone, Debug)]
pub struct BruteOptions {
    /// Primes to take minima over. One small field can miss the generic
    /// locus (e.g. when genericity needs an irreducible characteristic
    /// polynomial that does not exist over F_2), so use several.
    pub fields: Vec<u64>,
    /// Exhaustive enumeration is used when `p^(entries)` is at most this.
    pub budget: u64,
    /// Number of random pairs per field otherwise.
    pub sample_size: u64,
    pub seed: u64,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            fields: vec![2, 3, 5],
            budget: 1_000_000,
            sample_size: 20_000,
            seed: 1,
        }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct FieldOutcome {
    pub p: u64,
    pub hom_min: i64,
    pub exhaustive: bool,
    pub pairs_checked: u64,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct BruteHomExt {
    pub hom: i64,
    pub ext: i64,
    pub euler: i64,
    /// True when no contributing field could be enumerated exhaustively.
    pub sampled: bool,
    pub fields: Vec<FieldOutcome>,
}

fn checked_dims(q: &Quiver, a: &IntVector) -> Result<Vec<usize>> {
    if a.len() != q.len() {
        return Err(Error::LengthMismatch {
            got: a.len(),
            want: q.len(),
        });
    }
    if let Some(i) = a.first_negative() {
        return Err(Error::NegativeEntry(i));
    }
    let mut dims = Vec::with_capacity(a.len());
    for e in a.entries() {
        let d = usize::try_from(e).map_err(|_| {
            Error::Resource("dimension vector too large for the finite-field oracle".into())
        })?;
        if d > MAX_ORACLE_DIM {
            return Err(Error::Resource(
                "dimension vector too large for the finite-field oracle".into(),
            ));
        }
        dims.push(d);
    }
    Ok(dims)
}

/// Upper bound for the generic hom dimension of the pair `(a, b)`, as the
/// minimum of `dim Hom(V, W)` over enumerated or sampled pairs and over the
/// requested fields; `ext` is recovered as `hom - <a, b>`.
pub fn brute_generic_homext(
    q: &Quiver,
    a: &IntVector,
    b: &IntVector,
    opts: &BruteOptions,
) -> Result<BruteHomExt> {
    let av = checked_dims(q, a)?;
    let bv = checked_dims(q, b)?;
    if opts.fields.is_empty() {
        return Err(Error::Invalid("no fields requested".into()));
    }
    for &p in &opts.fields {
        field_check(p)?;
    }
    let euler = i64::try_from(&q.euler_form(a, b))
        .map_err(|_| Error::Resource("Euler form exceeds the oracle's integer range".into()))?;
    // Both hom >= 0 and hom >= <a, b> hold for every single pair, so the
    // minimum can stop as soon as it reaches this floor.
    let lower = euler.max(0) as u64;
    let mut fields = Vec::new();
    for &p in &opts.fields {
        fields.push(field_min_hom(q, &av, &bv, p, opts, lower));
    }
    let hom = fields.iter().map(|f| f.hom_min).min().expect("nonempty");
    let contributing: Vec<&FieldOutcome> = fields.iter().filter(|f| f.hom_min == hom).collect();
    let sampled = contributing.iter().all(|f| !f.exhaustive);
    let ext = hom - euler;
    debug_assert!(ext >= 0);
    Ok(BruteHomExt {
        hom,
        ext,
        euler,
        sampled,
        fields,
    })
}

fn field_min_hom(
    q: &Quiver,
    av: &[usize],
    bv: &[usize],
    p: u64,
    opts: &BruteOptions,
    lower: u64,
) -> FieldOutcome {
    let entries = Rep::entry_count(q, av) + Rep::entry_count(q, bv);
    let mut total = 1u128;
    let mut exhaustive = true;
    for _ in 0..entries {
        total = total.saturating_mul(p as u128);
        if total > opts.budget as u128 {
            exhaustive = false;
            break;
        }
    }
    let mut best: Option<u64> = None;
    let mut checked = 0u64;
    if exhaustive {
        let count = total as u64;
        let wexp = Rep::entry_count(q, bv) as u32;
        let wcount = (p as u64).pow(wexp);
        let mut start = 0u64;
        while start < count {
            let end = (start + CHUNK).min(count);
            let m = (start..end)
                .into_par_iter()
                .map(|idx| {
                    let v = Rep::from_index(q, av, p, idx / wcount);
                    let w = Rep::from_index(q, bv, p, idx % wcount);
                    hom_dim(q, &v, &w) as u64
                })
                .min()
                .expect("nonempty chunk");
            best = Some(best.map_or(m, |b| b.min(m)));
            checked += end - start;
            if best == Some(lower) {
                break;
            }
            start = end;
        }
    } else {
        let mut rng = Lcg::new(opts.seed.wrapping_add(p));
        let wanted = opts.sample_size.max(1);
        while checked < wanted {
            let n = CHUNK.min(wanted - checked);
            let pairs: Vec<(Rep, Rep)> = (0..n)
                .map(|_| {
                    (
                        Rep::sample(q, av, p, &mut rng),
                        Rep::sample(q, bv, p, &mut rng),
                    )
                })
                .collect();
            let m = pairs
                .par_iter()
                .map(|(v, w)| hom_dim(q, v, w) as u64)
                .min()
                .expect("nonempty chunk");
            best = Some(best.map_or(m, |b| b.min(m)));
            checked += n;
            if best == Some(lower) {
                break;
            }
        }
    }
    FieldOutcome {
        p,
        hom_min: best.expect("at least one pair evaluated") as i64,
        exhaustive,
        pairs_checked: checked,
    }
}

/// Total number of subspace tuples that a subrepresentation scan of `dims`
/// must consider (saturating).
pub fn subrep_tuple_count(p: u64, dims: &[usize]) -> u128 {
    dims.iter()
        .map(|&d| subspace_count(p, d))
        .fold(1u128, u128::saturating_mul)
}

fn visit_subreps<F: FnMut(&[usize], &[Vec<Subspace>])>(
    q: &Quiver,
    rep: &Rep,
    budget: u64,
    mut visit: F,
) -> Result<()> {
    let count = subrep_tuple_count(rep.p, &rep.dims);
    if count > budget as u128 {
        return Err(Error::Resource(format!(
            "subrepresentation scan needs {count} subspace tuples (budget {budget})"
        )));
    }
    let lists: Vec<Vec<Subspace>> = rep
        .dims
        .iter()
        .map(|&d| all_subspaces(rep.p, d))
        .collect();
    let n = lists.len();
    let mut idx = vec![0usize; n];
    loop {
        let closed = q.arrow_list().iter().enumerate().all(|(a, &(t, h))| {
            let st = &lists[t][idx[t]];
            let sh = &lists[h][idx[h]];
            (0..st.dim()).all(|r| {
                let vec: Vec<u64> = (0..st.ambient_dim()).map(|c| st.basis.get(r, c)).collect();
                sh.contains(&rep.mats[a].apply(&vec))
            })
        });
        if closed {
            visit(&idx, &lists);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Dimension vectors of all subrepresentations of `rep`, by exhaustive
/// subspace-tuple enumeration. Includes the zero and full vectors.
pub fn subrep_dim_vectors(q: &Quiver, rep: &Rep, budget: u64) -> Result<BTreeSet<IntVector>> {
    let mut dims = BTreeSet::new();
    visit_subreps(q, rep, budget, |idx, lists| {
        let d: Vec<i64> = idx
            .iter()
            .zip(lists)
            .map(|(&i, list)| list[i].dim() as i64)
            .collect();
        dims.insert(IntVector::from_i64(&d));
    })?;
    Ok(dims)
}

/// All subrepresentations of `rep` as subspace tuples (one per vertex).
pub fn subrep_subspaces(q: &Quiver, rep: &Rep, budget: u64) -> Result<Vec<Vec<Subspace>>> {
    let mut out = Vec::new();
    visit_subreps(q, rep, budget, |idx, lists| {
        out.push(
            idx.iter()
                .zip(lists)
                .map(|(&i, list)| list[i].clone())
                .collect(),
        );
    })?;
    Ok(out)
}

/// Restriction of `rep` to a subspace tuple that is closed under its maps.
pub fn restrict_to(q: &Quiver, rep: &Rep, sub: &[Subspace]) -> Rep {
    let dims: Vec<usize> = sub.iter().map(Subspace::dim).collect();
    let mats = q
        .arrow_list()
        .iter()
        .enumerate()
        .map(|(a, &(t, h))| {
            let mut m = FpMat::zero(rep.p, dims[h], dims[t]);
            for c in 0..dims[t] {
                let vec: Vec<u64> = (0..sub[t].ambient_dim())
                    .map(|j| sub[t].basis.get(c, j))
                    .collect();
                let image = rep.mats[a].apply(&vec);
                let coords = sub[h]
                    .coords(&image)
                    .expect("subspace tuple not closed under the representation maps");
                for (r, val) in coords.into_iter().enumerate() {
                    m.set(r, c, val);
                }
            }
            m
        })
        .collect();
    Rep {
        p: rep.p,
        dims,
        mats,
    }
}

/// Quotient of `rep` by a subspace tuple that is closed under its maps. The
/// quotient basis at each vertex is the image of the non-pivot coordinates.
pub fn quotient_by(q: &Quiver, rep: &Rep, sub: &[Subspace]) -> Rep {
    let nonpivots: Vec<Vec<usize>> = sub
        .iter()
        .map(|s| {
            (0..s.ambient_dim())
                .filter(|c| !s.pivots.contains(c))
                .collect()
        })
        .collect();
    let dims: Vec<usize> = nonpivots.iter().map(Vec::len).collect();
    let mats = q
        .arrow_list()
        .iter()
        .enumerate()
        .map(|(a, &(t, h))| {
            let mut m = FpMat::zero(rep.p, dims[h], dims[t]);
            for (c, &src) in nonpivots[t].iter().enumerate() {
                let mut vec = vec![0u64; sub[t].ambient_dim()];
                vec[src] = 1;
                let reduced = sub[h].reduce(&rep.mats[a].apply(&vec));
                for (r, &dst) in nonpivots[h].iter().enumerate() {
                    m.set(r, c, reduced[dst]);
                }
            }
            m
        })
        .collect();
    Rep {
        p: rep.p,
        dims,
        mats,
    }
}

/// Stability of a representation whose set of subrepresentation dimension
/// vectors is already known: the weight must vanish on the total dimension,
/// every proper subrepresentation must pair nonpositively (negatively for
/// stable).
pub fn stability_from_subrep_dims(
    sigma: &IntVector,
    total: &IntVector,
    sub_dims: &BTreeSet<IntVector>,
) -> StabilityStatus {
    use num_traits::Zero;
    if !sigma.dot(total).is_zero() {
        return StabilityStatus::Unstable;
    }
    let mut strict = true;
    for d in sub_dims {
        if d.is_zero() || d == total {
            continue;
        }
        let pairing = sigma.dot(d);
        if pairing > num_bigint::BigInt::zero() {
            return StabilityStatus::Unstable;
        }
        if pairing.is_zero() {
            strict = false;
        }
    }
    if strict {
        StabilityStatus::Stable
    } else {
        StabilityStatus::StrictlySemistable
    }
}

/// King stability of a single representation, evaluated literally from its
/// enumerated subrepresentations.
pub fn rep_stability(
    q: &Quiver,
    rep: &Rep,
    sigma: &IntVector,
    budget: u64,
) -> Result<StabilityStatus> {
    let total = rep.dim_vector();
    if total.is_zero() {
        return Err(Error::ZeroVector);
    }
    let dims = subrep_dim_vectors(q, rep, budget)?;
    Ok(stability_from_subrep_dims(sigma, &total, &dims))
}
