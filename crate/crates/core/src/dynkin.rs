//! Recognition of simply laced Dynkin diagrams.
//!
//! A quiver has finite representation type exactly when every connected
//! component of its underlying graph is one of A_n, D_n, E6, E7, E8. The
//! classification here looks only at the undirected simple graph; a pair of
//! parallel arrows already rules the component out.

use num_traits::One;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::vector::{enumerate_box, IntVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    /// Largest entry occurring in a root of this type, which bounds the box
    /// that a complete root search must cover.
    pub fn max_root_entry(self) -> i64 {
        match self {
            DynkinType::A(_) => 1,
            DynkinType::D(_) => 2,
            DynkinType::E6 => 3,
            DynkinType::E7 => 4,
            DynkinType::E8 => 6,
        }
    }

    pub fn positive_root_count(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E6 => 36,
            DynkinType::E7 => 63,
            DynkinType::E8 => 120,
        }
    }
}

/// Classify the underlying graph. Returns one type per connected component,
/// or `None` if any component is not a Dynkin diagram.
pub fn underlying_dynkin(q: &Quiver) -> Option<Vec<DynkinType>> {
    let n = q.len();
    // Undirected adjacency; parallel arrows in either orientation disqualify.
    let mut adj = vec![vec![false; n]; n];
    let mut edges = 0usize;
    for t in 0..n {
        for h in 0..n {
            let m = q.arrow_mult(t, h);
            if m == 0 {
                continue;
            }
            if m > 1 || adj[t][h] {
                return None;
            }
            adj[t][h] = true;
            adj[h][t] = true;
            edges += 1;
        }
    }
    let mut seen = vec![false; n];
    let mut types = Vec::new();
    let mut seen_edges = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for u in 0..n {
                if adj[v][u] && !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        let degs: Vec<usize> = comp
            .iter()
            .map(|&v| (0..n).filter(|&u| adj[v][u]).count())
            .collect();
        let comp_edges = degs.iter().sum::<usize>() / 2;
        seen_edges += comp_edges;
        if comp_edges + 1 != comp.len() {
            return None; // a cycle in the underlying graph
        }
        types.push(classify_tree(&comp, &degs, &adj)?);
    }
    debug_assert_eq!(seen_edges, edges);
    Some(types)
}

fn classify_tree(comp: &[usize], degs: &[usize], adj: &[Vec<bool>]) -> Option<DynkinType> {
    if degs.iter().any(|&d| d > 3) {
        return None;
    }
    let branch: Vec<usize> = (0..comp.len()).filter(|&i| degs[i] == 3).collect();
    match branch.len() {
        0 => Some(DynkinType::A(comp.len())),
        1 => {
            let center = comp[branch[0]];
            let mut arms: Vec<usize> = (0..adj.len())
                .filter(|&u| adj[center][u])
                .map(|u| arm_length(center, u, adj))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Some(DynkinType::D(k + 3)),
                [1, 2, 2] => Some(DynkinType::E6),
                [1, 2, 3] => Some(DynkinType::E7),
                [1, 2, 4] => Some(DynkinType::E8),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Number of edges when walking away from `center` starting along `first`.
fn arm_length(center: usize, first: usize, adj: &[Vec<bool>]) -> usize {
    let mut len = 1;
    let (mut prev, mut cur) = (center, first);
    loop {
        let next = (0..adj.len()).find(|&u| adj[cur][u] && u != prev);
        match next {
            Some(u) => {
                len += 1;
                prev = cur;
                cur = u;
            }
            None => return len,
        }
    }
}

pub fn is_representation_finite(q: &Quiver) -> bool {
    underlying_dynkin(q).is_some()
}

/// All positive roots (`b > 0` with Tits form 1) of a representation-finite
/// quiver, found by scanning the box bounded by the largest root entry.
pub fn positive_roots(q: &Quiver) -> Result<Vec<IntVector>> {
    let types = underlying_dynkin(q).ok_or_else(|| {
        Error::Invalid("positive root enumeration needs a representation-finite quiver".into())
    })?;
    let bound = types
        .iter()
        .map(|t| t.max_root_entry())
        .max()
        .unwrap_or(1);
    let mut roots = Vec::new();
    for b in enumerate_box(q.len(), 0, bound) {
        if !b.is_zero() && q.tits_form(&b).is_one() {
            roots.push(b);
        }
    }
    Ok(roots)
}
