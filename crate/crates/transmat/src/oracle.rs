//! Brute-force reference implementations of every computed quantity.
//!
//! These are the ground truth behind the crate's property tests and the
//! CLI's cross-check mode, so they deliberately share no code with the fast
//! paths: independence is tested by direct backtracking over injections, not
//! by the matching engine, and determinants enumerate without pruning.
//! Nothing here is cleverer than nested loops; size guards are hard errors.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::tropical::{DetResult, TropMatrix, TropValue, WITNESS_CAP};

/// Plain injection enumeration bound for [`brute_gen_det`].
pub const MAX_BRUTE_INJECTIONS: u128 = 1_000_000;
/// Minor dimension bound for [`brute_trop_rank`].
pub const MAX_BRUTE_RANK_DIM: usize = 6;
/// Ground-set bound for subset enumeration.
pub const MAX_BRUTE_GROUND_SIZE: usize = 16;
/// Row bound for [`brute_maximalize`].
pub const MAX_BRUTE_MAXIMALIZE_ROWS: usize = 10;
/// Column bound for [`brute_maximalize`].
pub const MAX_BRUTE_MAXIMALIZE_COLS: usize = 4;

/// All `2^(n*r)` matrices of the given shape, in ascending bit-pattern order
/// (entry `(i, j)` is bit `i*r + j`).
pub fn all_binary_matrices(n: usize, r: usize) -> impl Iterator<Item = BinaryMatrix> {
    assert!(n * r <= 30, "universe of 2^{} matrices is too large", n * r);
    (0u64..1 << (n * r)).map(move |code| {
        let mut x = BinaryMatrix::zeros(n, r);
        for p in 0..n * r {
            if code >> p & 1 == 1 {
                x.set(p / r, p % r, 1);
            }
        }
        x
    })
}

/// Can every row in `rows` be assigned a distinct column holding a 1?
/// Backtracking over the rows in the order given.
fn has_transversal(x: &BinaryMatrix, rows: &[usize]) -> bool {
    fn place(x: &BinaryMatrix, rows: &[usize], idx: usize, used: &mut [bool]) -> bool {
        if idx == rows.len() {
            return true;
        }
        for j in 0..x.ncols() {
            if !used[j] && x.get(rows[idx], j) == 1 {
                used[j] = true;
                if place(x, rows, idx + 1, used) {
                    used[j] = false;
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    place(x, rows, 0, &mut vec![false; x.ncols()])
}

fn guard_ground(x: &BinaryMatrix, what: &str) -> Result<()> {
    if x.nrows() > MAX_BRUTE_GROUND_SIZE {
        return Err(Error::SizeGuard(format!(
            "{what} over {} ground elements refused (limit {MAX_BRUTE_GROUND_SIZE})",
            x.nrows()
        )));
    }
    Ok(())
}

/// Largest size of a subset admitting a transversal, by descending-size scan
/// over all subsets.
pub fn brute_rank(x: &BinaryMatrix) -> Result<usize> {
    guard_ground(x, "brute rank")?;
    let cap = x.nrows().min(x.ncols());
    for size in (1..=cap).rev() {
        for cand in (0..x.nrows()).combinations(size) {
            if has_transversal(x, &cand) {
                return Ok(size);
            }
        }
    }
    Ok(0)
}

/// Every subset tested for the transversal property; the independent sets of
/// maximum size are the bases, in ascending lexicographic order.
pub fn brute_bases(x: &BinaryMatrix) -> Result<Vec<Vec<usize>>> {
    guard_ground(x, "basis enumeration")?;
    let rk = brute_rank(x)?;
    Ok((0..x.nrows())
        .combinations(rk)
        .filter(|cand| has_transversal(x, cand))
        .collect())
}

/// Labeled-matroid equality: every subset of the common ground set gets the
/// same independence verdict from both matrices.
pub fn matroid_equal(x: &BinaryMatrix, y: &BinaryMatrix) -> Result<bool> {
    if x.nrows() != y.nrows() {
        return Err(Error::GroundSetMismatch { left: x.nrows(), right: y.nrows() });
    }
    guard_ground(x, "matroid comparison")?;
    let n = x.nrows();
    for mask in 0u32..1 << n {
        let rows: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if has_transversal(x, &rows) != has_transversal(y, &rows) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generalized tropical determinant by plain nested-loop enumeration of all
/// injections, no pruning.
pub fn brute_gen_det(a: &TropMatrix) -> Result<DetResult> {
    if a.nrows() < a.ncols() {
        return Ok(DetResult {
            value: TropValue::BOTTOM,
            multiplicity: 0,
            witnesses: Vec::new(),
        });
    }
    let mut work: u128 = 1;
    for i in 0..a.ncols() {
        work = work.saturating_mul((a.nrows() - i) as u128);
    }
    if work > MAX_BRUTE_INJECTIONS {
        return Err(Error::SizeGuard(format!(
            "{work} injections from {} columns into {} rows (limit {MAX_BRUTE_INJECTIONS})",
            a.ncols(),
            a.nrows()
        )));
    }

    struct Accum {
        seen: bool,
        best: f64,
        count: u64,
        witnesses: Vec<Vec<usize>>,
    }

    fn walk(a: &TropMatrix, col: usize, sum: f64, used: &mut [bool], pick: &mut Vec<usize>, acc: &mut Accum) {
        if col == a.ncols() {
            if !acc.seen || sum > acc.best {
                acc.seen = true;
                acc.best = sum;
                acc.count = 1;
                acc.witnesses.clear();
                acc.witnesses.push(pick.clone());
            } else if sum == acc.best {
                acc.count += 1;
                if acc.witnesses.len() < WITNESS_CAP {
                    acc.witnesses.push(pick.clone());
                }
            }
            return;
        }
        for i in 0..a.nrows() {
            if used[i] {
                continue;
            }
            used[i] = true;
            pick.push(i);
            walk(a, col + 1, sum + a.get(i, col).as_f64(), used, pick, acc);
            pick.pop();
            used[i] = false;
        }
    }

    let mut acc = Accum { seen: false, best: f64::NEG_INFINITY, count: 0, witnesses: Vec::new() };
    let mut pick: Vec<usize> = Vec::with_capacity(a.ncols());
    let mut used = vec![false; a.nrows()];
    walk(a, 0, 0.0, &mut used, &mut pick, &mut acc);

    Ok(DetResult {
        value: if acc.seen && acc.best > f64::NEG_INFINITY {
            TropValue::finite(acc.best)
        } else {
            TropValue::BOTTOM
        },
        multiplicity: acc.count,
        witnesses: acc.witnesses,
    })
}

/// Tropical rank by scanning all square submatrices in decreasing size and
/// returning the first nonsingular one.
pub fn brute_trop_rank(a: &TropMatrix) -> Result<usize> {
    let k_max = a.nrows().min(a.ncols());
    if k_max > MAX_BRUTE_RANK_DIM {
        return Err(Error::SizeGuard(format!(
            "brute tropical rank with minors up to {k_max}x{k_max} refused (limit {MAX_BRUTE_RANK_DIM})"
        )));
    }
    for k in (1..=k_max).rev() {
        for rows in (0..a.nrows()).combinations(k) {
            for cols in (0..a.ncols()).combinations(k) {
                let det = brute_gen_det(&a.submatrix(&rows, &cols))?;
                if !det.value.is_bottom() && det.multiplicity == 1 {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// The unique entrywise-greatest matrix presenting the same labeled matroid,
/// found by flipping zero cells one at a time and keeping exactly the flips
/// that leave the matroid unchanged, repeated to a fixpoint.
pub fn brute_maximalize(x: &BinaryMatrix) -> Result<BinaryMatrix> {
    let cells: Vec<(usize, usize)> = (0..x.nrows())
        .flat_map(|i| (0..x.ncols()).map(move |j| (i, j)))
        .collect();
    brute_maximalize_with_order(x, &cells)
}

/// Same as [`brute_maximalize`] with an explicit cell-visit priority; the
/// result does not depend on it (checked by tests).
pub fn brute_maximalize_with_order(
    x: &BinaryMatrix,
    cell_order: &[(usize, usize)],
) -> Result<BinaryMatrix> {
    if x.nrows() > MAX_BRUTE_MAXIMALIZE_ROWS || x.ncols() > MAX_BRUTE_MAXIMALIZE_COLS {
        return Err(Error::SizeGuard(format!(
            "brute maximalization of a {}x{} matrix refused (limits {MAX_BRUTE_MAXIMALIZE_ROWS} rows, {MAX_BRUTE_MAXIMALIZE_COLS} columns)",
            x.nrows(),
            x.ncols()
        )));
    }
    let rank = brute_rank(x)?;
    if rank != x.ncols() {
        return Err(Error::NotViable { rank, columns: x.ncols() });
    }

    let mut cur = x.clone();
    loop {
        let mut changed = false;
        for &(i, j) in cell_order {
            if cur.get(i, j) == 1 {
                continue;
            }
            let mut cand = cur.clone();
            cand.set(i, j, 1);
            if matroid_equal(&cur, &cand)? {
                cur = cand;
                changed = true;
            }
        }
        if !changed {
            return Ok(cur);
        }
    }
}
