//! Viability, maximalization, and maximality testing with per-column
//! diagnostics.
//!
//! A viable matrix (matching number equal to the column count) presents its
//! matroid with rank-many sets. Among all such matrices presenting the same
//! labeled matroid there is a unique entrywise-greatest one; [`maximalize`]
//! reaches it by scanning the columns and, for each column's block, adding
//! every element that lies in all of the block's bases (adding an element to
//! a set preserves the matroid exactly when it is a coloop of the deletion).
//!
//! [`is_maximal`] offers two routes. The fixpoint route reruns
//! [`maximalize`] and compares; it is exact. The conditions route checks,
//! per column, that a rank-`k` block has at least `k + 1` distinct bases.
//! That count bound is implied by having no coloops but does not imply it: a
//! block can keep a coloop in every one of `k + 1` bases (see the pinned
//! test), so the conditions route is a necessary certificate only. The two
//! routes agree on small instances and diverge rarely; when they disagree,
//! the fixpoint route is the correct one.

use crate::bipartite;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::matroid;

/// Per-column report entries stop counting bases/minors past this many
/// surviving block rows; the counts become `None` rather than stalling.
const REPORT_COUNT_ROW_LIMIT: usize = 16;
/// Minor counting is skipped when the number of (row set, column set) pairs
/// exceeds this.
const REPORT_MINOR_PAIR_LIMIT: u128 = 200_000;

/// Whether the matching number equals the column count.
pub fn is_viable(x: &BinaryMatrix) -> bool {
    matroid::rank(x) == x.ncols()
}

/// Diagnostics for one column's block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnDiagnostics {
    pub column: usize,
    /// Rank of the block (matching number after deleting the column and its
    /// adjacent rows).
    pub block_rank: usize,
    /// Number of distinct bases of the block; `None` when the block was too
    /// large to enumerate for a report.
    pub basis_count: Option<u64>,
    /// Number of (row set, column set) pairs of block-rank size admitting a
    /// perfect matching; the raw minor count, for comparison with the basis
    /// count. `None` when too large to enumerate.
    pub minor_count: Option<u64>,
    /// Original row labels of the block's coloops (elements in every basis
    /// of the block).
    pub coloops: Vec<usize>,
}

/// Outcome of a maximality analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub viable: bool,
    /// The verdict of the route that produced this report.
    pub verdict: bool,
    pub columns: Vec<ColumnDiagnostics>,
    /// Cells switched on by [`maximalize`], in processing order; empty for
    /// pure tests.
    pub added: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaximalityMethod {
    /// Rerun the maximalization and compare with the input. Exact.
    Fixpoint,
    /// Per-column basis counting: every rank-`k` block needs at least `k + 1`
    /// distinct bases. Necessary, not sufficient.
    Conditions,
}

/// Maximalize with columns processed in ascending order.
pub fn maximalize(x: &BinaryMatrix) -> Result<(BinaryMatrix, MaximalityReport)> {
    let order: Vec<usize> = (0..x.ncols()).collect();
    maximalize_with_order(x, &order)
}

/// One pass over the columns in the given order. For each column the block
/// of the current matrix is formed, its coloops are found by the rank-drop
/// test, and the corresponding cells are switched on before the next column
/// is processed. The output is viable, entrywise above the input, presents
/// the same matroid, and does not depend on the column order.
pub fn maximalize_with_order(
    x: &BinaryMatrix,
    order: &[usize],
) -> Result<(BinaryMatrix, MaximalityReport)> {
    {
        let mut seen = vec![false; x.ncols()];
        for &j in order {
            if j >= x.ncols() || seen[j] {
                return Err(Error::Dimension(format!(
                    "column order {order:?} is not a permutation of 0..{}",
                    x.ncols()
                )));
            }
            seen[j] = true;
        }
        if order.len() != x.ncols() {
            return Err(Error::Dimension(format!(
                "column order {order:?} is not a permutation of 0..{}",
                x.ncols()
            )));
        }
    }
    let rank = matroid::rank(x);
    if rank != x.ncols() {
        return Err(Error::NotViable { rank, columns: x.ncols() });
    }

    let mut cur = x.clone();
    let mut added = Vec::new();
    let mut columns = Vec::with_capacity(x.ncols());
    for &j in order {
        let block = cur.block(j)?;
        let block_rank = matroid::rank(&block.matrix);
        let mut coloops = Vec::new();
        for (local, &original) in block.rows.iter().enumerate() {
            if bipartite::is_coloop(&block.matrix, local)? {
                coloops.push(original);
            }
        }
        let (basis_count, minor_count) = report_counts(&block.matrix, block_rank);
        for &e in &coloops {
            cur.set(e, j, 1);
            added.push((e, j));
        }
        columns.push(ColumnDiagnostics { column: j, block_rank, basis_count, minor_count, coloops });
    }
    columns.sort_by_key(|c| c.column);
    let verdict = added.is_empty();
    Ok((cur, MaximalityReport { viable: true, verdict, columns, added }))
}

/// Test maximality by the chosen route. Non-viable input is simply not
/// maximal (no error); the report then carries no per-column entries.
pub fn is_maximal(
    x: &BinaryMatrix,
    method: MaximalityMethod,
) -> Result<(bool, MaximalityReport)> {
    if !is_viable(x) {
        return Ok((
            false,
            MaximalityReport { viable: false, verdict: false, columns: Vec::new(), added: Vec::new() },
        ));
    }
    match method {
        MaximalityMethod::Fixpoint => {
            let (_, report) = maximalize(x)?;
            Ok((report.verdict, report))
        }
        MaximalityMethod::Conditions => {
            let mut verdict = true;
            let mut columns = Vec::with_capacity(x.ncols());
            for j in 0..x.ncols() {
                let (count, block_rank) = count_bases_of_block(x, j)?;
                if count < block_rank as u64 + 1 {
                    verdict = false;
                }
                let block = x.block(j)?;
                let mut coloops = Vec::new();
                for (local, &original) in block.rows.iter().enumerate() {
                    if bipartite::is_coloop(&block.matrix, local)? {
                        coloops.push(original);
                    }
                }
                let minor_count = count_nonvanishing_minors(&block.matrix, block_rank);
                columns.push(ColumnDiagnostics {
                    column: j,
                    block_rank,
                    basis_count: Some(count),
                    minor_count,
                    coloops,
                });
            }
            Ok((
                verdict,
                MaximalityReport { viable: true, verdict, columns, added: Vec::new() },
            ))
        }
    }
}

/// Number of distinct bases of the block of column `j` (row sets of
/// block-rank size matchable into the block's columns), together with that
/// rank. Rank zero has exactly the empty basis.
pub fn count_bases_of_block(x: &BinaryMatrix, j: usize) -> Result<(u64, usize)> {
    let block = x.block(j)?;
    let bases = matroid::bases(&block.matrix)?;
    let rank = bases.first().map_or(0, Vec::len);
    Ok((bases.len() as u64, rank))
}

/// Number of nonvanishing `k x k` minors of a block: (row set, column set)
/// pairs whose square submatrix admits a perfect matching. `None` when the
/// enumeration would be too large for a report.
pub fn count_nonvanishing_minors(block: &BinaryMatrix, k: usize) -> Option<u64> {
    use itertools::Itertools;

    if k == 0 {
        return Some(1);
    }
    if block.nrows() > REPORT_COUNT_ROW_LIMIT {
        return None;
    }
    let pairs = binomial(block.nrows(), k) * binomial(block.ncols(), k);
    if pairs > REPORT_MINOR_PAIR_LIMIT {
        return None;
    }
    let mut count = 0u64;
    for rows in (0..block.nrows()).combinations(k) {
        for cols in (0..block.ncols()).combinations(k) {
            let sub = block.selecting_rows(&rows).selecting_columns(&cols);
            if bipartite::matching_number(&sub) == k {
                count += 1;
            }
        }
    }
    Some(count)
}

fn report_counts(block: &BinaryMatrix, block_rank: usize) -> (Option<u64>, Option<u64>) {
    let basis_count = if block.nrows() <= REPORT_COUNT_ROW_LIMIT {
        matroid::bases(block).ok().map(|b| b.len() as u64)
    } else {
        None
    };
    (basis_count, count_nonvanishing_minors(block, block_rank))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}
