//! The transversal matroid presented by a binary matrix: rank, independence,
//! bases, loops, and reduction to a presentation with rank-many columns.

use itertools::Itertools;

use crate::bipartite::{self, graph_of, max_matching};
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Basis enumeration walks subsets of the ground set; refused past this.
pub const MAX_BASES_GROUND_SIZE: usize = 24;

/// Rank of the presented matroid: the maximum matching size.
pub fn rank(x: &BinaryMatrix) -> usize {
    bipartite::matching_number(x)
}

/// Whether `rows` is independent, i.e. a partial transversal of the columns.
pub fn is_independent(x: &BinaryMatrix, rows: &[usize]) -> Result<bool> {
    bipartite::saturates(x, rows)
}

/// Loops of the matroid: the all-zero rows.
pub fn loops(x: &BinaryMatrix) -> Vec<usize> {
    (0..x.nrows()).filter(|&i| x.is_zero_row(i)).collect()
}

/// All bases (maximal independent sets), each sorted, in ascending
/// lexicographic order. Rank zero yields the single empty basis.
pub fn bases(x: &BinaryMatrix) -> Result<Vec<Vec<usize>>> {
    if x.nrows() > MAX_BASES_GROUND_SIZE {
        return Err(Error::SizeGuard(format!(
            "basis enumeration over {} ground elements refused (limit {MAX_BASES_GROUND_SIZE})",
            x.nrows()
        )));
    }
    let rk = rank(x);
    let mut out = Vec::new();
    for cand in (0..x.nrows()).combinations(rk) {
        if bipartite::saturates(x, &cand)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Restrict to the columns matched by one maximum matching. The result has
/// `rank(x)` columns (kept in ascending original order) and presents the same
/// matroid on the same ground set.
pub fn reduce_to_r_presentation(x: &BinaryMatrix) -> BinaryMatrix {
    let matched_cols = max_matching(&graph_of(x)).right_vertices();
    x.selecting_columns(&matched_cols)
}

/// A presentation with its rank cached at construction.
#[derive(Clone, Debug)]
pub struct TransversalMatroid {
    rep: BinaryMatrix,
    rank: usize,
}

impl TransversalMatroid {
    pub fn new(rep: BinaryMatrix) -> Self {
        let rank = rank(&rep);
        TransversalMatroid { rep, rank }
    }

    pub fn representation(&self) -> &BinaryMatrix {
        &self.rep
    }

    pub fn ground_size(&self) -> usize {
        self.rep.nrows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_independent(&self, rows: &[usize]) -> Result<bool> {
        is_independent(&self.rep, rows)
    }

    pub fn bases(&self) -> Result<Vec<Vec<usize>>> {
        bases(&self.rep)
    }

    pub fn loops(&self) -> Vec<usize> {
        loops(&self.rep)
    }
}
