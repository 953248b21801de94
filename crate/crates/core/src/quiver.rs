//! Finite acyclic quivers and the Euler form.
//!
//! A quiver is stored as a vertex list in declared order plus an arrow
//! multiplicity matrix. Construction rejects anything with an oriented cycle
//! (self-loops included), so a topological order always exists and is fixed
//! once at build time. All derived data (projective roots, weight maps) is
//! taken with respect to the declared vertex order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::IntVector;

#[derive(Clone)]
pub struct Quiver {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    /// `mult[t][h]` = number of arrows from vertex `t` to vertex `h`.
    mult: Vec<Vec<i64>>,
    /// Expanded arrow list `(tail, head)` sorted by index pair, one entry
    /// per arrow (so a double arrow appears twice).
    arrows: Vec<(usize, usize)>,
    /// Topological order of vertex indices, tails before heads.
    topo: Vec<usize>,
    /// `gammas[i](j)` = number of paths from `i` to `j` (dimension vector of
    /// the projective attached to `i`).
    gammas: Vec<IntVector>,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
}

impl Quiver {
    pub fn new(names: Vec<String>, arrows: &[(String, String)]) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Parse("empty vertex name".into()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(arrows.len());
        for (t, h) in arrows {
            let &ti = index
                .get(t)
                .ok_or_else(|| Error::UnknownVertex(t.clone()))?;
            let &hi = index
                .get(h)
                .ok_or_else(|| Error::UnknownVertex(h.clone()))?;
            pairs.push((ti, hi));
        }
        Self::from_index_pairs(names, index, &pairs)
    }

    /// Build from numeric arrow pairs; vertices are named `"1"`, `"2"`, ...
    pub fn from_indices(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Self::from_index_pairs(names, index, arrows)
    }

    fn from_index_pairs(
        names: Vec<String>,
        index: BTreeMap<String, usize>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let n = names.len();
        let mut mult = vec![vec![0i64; n]; n];
        for &(t, h) in pairs {
            if t >= n || h >= n {
                return Err(Error::UnknownVertex(format!("#{}", t.max(h))));
            }
            if t == h {
                return Err(Error::Cycle);
            }
            mult[t][h] += 1;
        }
        let topo = topological_order(&mult)?;
        let mut arrows: Vec<(usize, usize)> = pairs.to_vec();
        arrows.sort_unstable();
        let mut q = Quiver {
            names,
            index,
            mult,
            arrows,
            topo,
            gammas: Vec::new(),
        };
        q.gammas = q.compute_path_counts();
        Ok(q)
    }

    /// The equioriented type A quiver `1 -> 2 -> ... -> n`.
    pub fn path(n: usize) -> Self {
        let arrows: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Self::from_indices(n, &arrows).expect("path quiver is acyclic")
    }

    /// The quiver with two vertices and `m` parallel arrows `1 -> 2`.
    pub fn kronecker(m: usize) -> Self {
        let arrows: Vec<(usize, usize)> = (0..m).map(|_| (0, 1)).collect();
        Self::from_indices(2, &arrows).expect("kronecker quiver is acyclic")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("quiver file: {e}")))?;
        Self::new(file.vertices, &file.arrows)
    }

    pub fn to_json_string(&self) -> String {
        let file = QuiverFile {
            vertices: self.names.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|&(t, h)| (self.names[t].clone(), self.names[h].clone()))
                .collect(),
        };
        serde_json::to_string(&file).expect("quiver serialization")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_mult(&self, tail: usize, head: usize) -> i64 {
        self.mult[tail][head]
    }

    /// Expanded arrow list, one `(tail, head)` entry per arrow, sorted.
    pub fn arrow_list(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertex indices in a topological order (arrow tails first).
    pub fn topo_order(&self) -> &[usize] {
        &self.topo
    }

    /// Euler form `<a, b> = sum_i a(i) b(i) - sum_{arrows t->h} a(t) b(h)`.
    pub fn euler_form(&self, a: &IntVector, b: &IntVector) -> BigInt {
        assert_eq!(a.len(), self.len());
        assert_eq!(b.len(), self.len());
        let mut acc = BigInt::zero();
        for i in 0..self.len() {
            acc += a.entries()[i].clone() * &b.entries()[i];
        }
        for (t, row) in self.mult.iter().enumerate() {
            for (h, &m) in row.iter().enumerate() {
                if m != 0 {
                    acc -= BigInt::from(m) * &a.entries()[t] * &b.entries()[h];
                }
            }
        }
        acc
    }

    /// The Tits form `q(a) = <a, a>`.
    pub fn tits_form(&self, a: &IntVector) -> BigInt {
        self.euler_form(a, a)
    }

    /// The weight `sigma(j) = <a, e_j>` of a dimension vector, i.e.
    /// `sigma(j) = a(j) - sum_{arrows t->j} a(t)`.
    pub fn weight_map(&self, a: &IntVector) -> IntVector {
        assert_eq!(a.len(), self.len());
        let mut out = Vec::with_capacity(self.len());
        for j in 0..self.len() {
            let mut s = a.entries()[j].clone();
            for t in 0..self.len() {
                let m = self.mult[t][j];
                if m != 0 {
                    s -= BigInt::from(m) * &a.entries()[t];
                }
            }
            out.push(s);
        }
        IntVector::new(out)
    }

    /// Inverse of [`weight_map`]: the unique `a` with `<a, e_j> = sigma(j)`
    /// for all `j`, obtained by forward substitution along a topological
    /// order. Always integral because the transition matrix is unitriangular.
    pub fn inverse_weight_map(&self, sigma: &IntVector) -> IntVector {
        assert_eq!(sigma.len(), self.len());
        let mut a = vec![BigInt::zero(); self.len()];
        for &j in &self.topo {
            let mut s = sigma.entries()[j].clone();
            for t in 0..self.len() {
                let m = self.mult[t][j];
                if m != 0 {
                    s += BigInt::from(m) * &a[t];
                }
            }
            a[j] = s;
        }
        IntVector::new(a)
    }

    /// Dimension vector of the projective at `i`: entry `j` counts the paths
    /// from `i` to `j`. Satisfies `<gamma_i, b> = b(i)` for every `b`.
    pub fn projective_root(&self, i: usize) -> &IntVector {
        &self.gammas[i]
    }

    pub fn projective_roots(&self) -> &[IntVector] {
        &self.gammas
    }

    fn compute_path_counts(&self) -> Vec<IntVector> {
        let n = self.len();
        let mut counts = vec![vec![BigInt::zero(); n]; n];
        // gamma_i = e_i + sum over arrows i -> h of mult * gamma_h, so fill
        // in reverse topological order (sinks first).
        for &i in self.topo.iter().rev() {
            counts[i][i] = BigInt::from(1);
            for h in 0..n {
                let m = self.mult[i][h];
                if m != 0 {
                    let gh = counts[h].clone();
                    for (j, val) in gh.into_iter().enumerate() {
                        if !val.is_zero() {
                            counts[i][j] += BigInt::from(m) * val;
                        }
                    }
                }
            }
        }
        counts.into_iter().map(IntVector::new).collect()
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver({} vertices, {} arrows)", self.len(), self.arrows.len())
    }
}

fn topological_order(mult: &[Vec<i64>]) -> Result<Vec<usize>> {
    let n = mult.len();
    let mut indeg = vec![0usize; n];
    for row in mult {
        for (h, &m) in row.iter().enumerate() {
            if m != 0 {
                indeg[h] += 1;
            }
        }
    }
    // Take the smallest available index each round so the order is stable.
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    for _ in 0..n {
        let Some(v) = (0..n).find(|&v| !done[v] && indeg[v] == 0) else {
            return Err(Error::Cycle);
        };
        done[v] = true;
        order.push(v);
        for (h, &m) in mult[v].iter().enumerate() {
            if m != 0 {
                indeg[h] -= 1;
            }
        }
    }
    Ok(order)
}
