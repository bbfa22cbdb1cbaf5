//! Bipartite graphs of presentations and deterministic maximum matchings.
//!
//! Left vertices are ground-set elements (matrix rows), right vertices are
//! sets (columns). Matchings drive every rank computation in the crate.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(
        left: usize,
        right: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); left];
        for (u, v) in edges {
            if u >= left || v >= right {
                return Err(Error::IndexOutOfRange(format!(
                    "edge ({u}, {v}) in a {left}x{right} bipartite graph"
                )));
            }
            adj[u].push(v);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Ok(BipartiteGraph { left, right, adj })
    }

    pub fn left_count(&self) -> usize {
        self.left
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u, v)))
    }
}

/// The incidence graph of a matrix: an edge `(i, j)` wherever `x_ij = 1`.
pub fn graph_of(x: &BinaryMatrix) -> BipartiteGraph {
    let mut adj = vec![Vec::new(); x.nrows()];
    for (i, nbrs) in adj.iter_mut().enumerate() {
        for j in 0..x.ncols() {
            if x.get(i, j) == 1 {
                nbrs.push(j);
            }
        }
    }
    BipartiteGraph { left: x.nrows(), right: x.ncols(), adj }
}

/// A set of edges with pairwise distinct left and right endpoints, kept
/// sorted by left vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn left_vertices(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(u, _)| u).collect()
    }

    pub fn right_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pairs.iter().map(|&(_, w)| w).collect();
        v.sort_unstable();
        v
    }
}

/// Maximum-cardinality matching via Hopcroft-Karp (BFS layering plus layered
/// DFS augmentation). Vertices are scanned in ascending order, so the result
/// is deterministic for a fixed input.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let n = g.left_count();
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    let mut match_right: Vec<Option<usize>> = vec![None; g.right_count()];

    loop {
        // BFS phase: layer left vertices by alternating-path distance from
        // the free ones.
        let mut dist = vec![usize::MAX; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for u in 0..n {
            if match_left[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            }
        }
        let mut reachable_free_right = false;
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                match match_right[v] {
                    None => reachable_free_right = true,
                    Some(u2) => {
                        if dist[u2] == usize::MAX {
                            dist[u2] = dist[u] + 1;
                            queue.push_back(u2);
                        }
                    }
                }
            }
        }
        if !reachable_free_right {
            break;
        }
        // DFS phase: augment along layered paths.
        let mut augmented = false;
        for u in 0..n {
            if match_left[u].is_none()
                && augment(g, u, &mut dist, &mut match_left, &mut match_right)
            {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }

    Matching {
        pairs: (0..n).filter_map(|u| match_left[u].map(|v| (u, v))).collect(),
    }
}

fn augment(
    g: &BipartiteGraph,
    u: usize,
    dist: &mut [usize],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &v in g.neighbors(u) {
        let advance = match match_right[v] {
            None => true,
            Some(u2) => {
                dist[u2] == dist[u].wrapping_add(1)
                    && augment(g, u2, dist, match_left, match_right)
            }
        };
        if advance {
            match_left[u] = Some(v);
            match_right[v] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX; // dead end for the rest of this phase
    false
}

/// Size of a maximum matching of the incidence graph; this is the rank of
/// the presented matroid.
pub fn matching_number(x: &BinaryMatrix) -> usize {
    max_matching(&graph_of(x)).len()
}

/// Whether some matching covers every row in `rows`, i.e. whether `rows` is
/// a partial transversal of the column family.
pub fn saturates(x: &BinaryMatrix, rows: &[usize]) -> Result<bool> {
    let set: BTreeSet<usize> = rows.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&i| i >= x.nrows()) {
        return Err(Error::IndexOutOfRange(format!(
            "element {bad} of a ground set with {} elements",
            x.nrows()
        )));
    }
    let picked: Vec<usize> = set.into_iter().collect();
    let mut adj = vec![Vec::new(); picked.len()];
    for (u, &i) in picked.iter().enumerate() {
        for j in 0..x.ncols() {
            if x.get(i, j) == 1 {
                adj[u].push(j);
            }
        }
    }
    let g = BipartiteGraph { left: picked.len(), right: x.ncols(), adj };
    Ok(max_matching(&g).len() == picked.len())
}

/// Whether element `e` lies in every maximum matching's left set, computed
/// as a rank drop: deleting the row must shrink the matching number.
pub fn is_coloop(x: &BinaryMatrix, e: usize) -> Result<bool> {
    if e >= x.nrows() {
        return Err(Error::IndexOutOfRange(format!(
            "element {e} of a ground set with {} elements",
            x.nrows()
        )));
    }
    Ok(matching_number(&x.deleting_row(e)) < matching_number(x))
}
