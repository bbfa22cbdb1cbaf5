//! Max-plus tropical linear algebra: matrix product, (generalized) tropical
//! determinant with maximizer multiplicity, singularity, and tropical rank.
//!
//! The semiring is `(R u {-inf}, max, +)` with additive identity `-inf` and
//! multiplicative identity `0`. Binary matrices embed with literal 0/1 real
//! entries, never with 0 mapped to `-inf`; the bottom element exists only for
//! general tropical matrices. Comparisons use exact `f64` equality: integer
//! and dyadic inputs are exact throughout, callers wanting tolerance on wild
//! reals must quantize first.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Determinant enumeration is factorial; refused past this dimension.
pub const MAX_DET_DIM: usize = 12;
/// Generalized determinant enumerates falling-factorial many injections.
pub const MAX_GEN_DET_INJECTIONS: u128 = 10_000_000;
/// Tropical rank scans all square minors; refused past this minor dimension.
pub const MAX_RANK_DIM: usize = 7;
/// Upper bound on total injections enumerated during a rank computation.
pub const MAX_RANK_WORK: u128 = 50_000_000;
/// Viability-loop reduction is kept at tropical-rank scale.
pub const MAX_VIABILITY_COLS: usize = 7;
/// Attaining injections stored on a [`DetResult`].
pub const WITNESS_CAP: usize = 16;

/// An element of the max-plus semiring: a finite real or bottom (`-inf`).
#[derive(Clone, Copy)]
pub struct TropValue(f64);

impl TropValue {
    /// Additive identity; annihilates under `times`.
    pub const BOTTOM: TropValue = TropValue(f64::NEG_INFINITY);
    /// Multiplicative identity.
    pub const IDENTITY: TropValue = TropValue(0.0);

    /// Wrap a finite real. Panics on NaN or infinities; use [`BOTTOM`]
    /// explicitly for the bottom element.
    ///
    /// [`BOTTOM`]: TropValue::BOTTOM
    pub fn finite(v: f64) -> TropValue {
        assert!(v.is_finite(), "tropical entries are finite reals or -inf");
        TropValue(v + 0.0) // collapses -0.0 so ordering is total
    }

    pub fn is_bottom(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// Underlying value; `-inf` for bottom.
    pub fn as_f64(self) -> f64 {
        self.0
    }

    /// Tropical addition: max.
    pub fn plus(self, other: TropValue) -> TropValue {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }

    /// Tropical multiplication: real addition; bottom absorbs.
    pub fn times(self, other: TropValue) -> TropValue {
        TropValue(self.0 + other.0)
    }
}

impl PartialEq for TropValue {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for TropValue {}

impl PartialOrd for TropValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // entries are never NaN and -0.0 is normalized away
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Debug for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            write!(f, "-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for TropValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: f64 = s.parse().map_err(|_| Error::Parse {
            line: 0,
            reason: format!("token '{s}' is not a real number or -inf"),
        })?;
        if v.is_nan() || v == f64::INFINITY {
            return Err(Error::Parse {
                line: 0,
                reason: format!("token '{s}' is not a real number or -inf"),
            });
        }
        Ok(if v == f64::NEG_INFINITY { TropValue::BOTTOM } else { TropValue::finite(v) })
    }
}

/// A rectangular matrix over the max-plus semiring.
#[derive(Clone, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropValue>,
}

impl TropMatrix {
    pub fn from_rows(rows: &[Vec<TropValue>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    cols
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(TropMatrix { rows: rows.len(), cols, entries })
    }

    pub fn filled(rows: usize, cols: usize, v: TropValue) -> Self {
        TropMatrix { rows, cols, entries: vec![v; rows * cols] }
    }

    /// Tropical identity: 0 on the diagonal, bottom elsewhere.
    pub fn identity(dim: usize) -> Self {
        let mut m = TropMatrix::filled(dim, dim, TropValue::BOTTOM);
        for i in 0..dim {
            m.entries[i * dim + i] = TropValue::IDENTITY;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> TropValue {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> TropMatrix {
        let mut t = TropMatrix::filled(self.cols, self.rows, TropValue::BOTTOM);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> TropMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j));
            }
        }
        TropMatrix { rows: rows.len(), cols: cols.len(), entries }
    }
}

impl From<&BinaryMatrix> for TropMatrix {
    fn from(x: &BinaryMatrix) -> Self {
        let entries = (0..x.nrows())
            .flat_map(|i| (0..x.ncols()).map(move |j| TropValue::finite(x.get(i, j) as f64)))
            .collect();
        TropMatrix { rows: x.nrows(), cols: x.ncols(), entries }
    }
}

impl fmt::Debug for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TropMatrix({}x{}:", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = (0..self.cols).map(|j| self.get(i, j).to_string()).join(" ");
            write!(f, " [{row}]")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = (0..self.cols).map(|j| self.get(i, j).to_string()).join(" ");
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Same line format as binary matrices, with real-number tokens and `-inf`
/// for the bottom element.
impl FromStr for TropMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows: Vec<Vec<TropValue>> = Vec::new();
        let mut width: Option<usize> = None;
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let v: TropValue = tok.parse().map_err(|e| match e {
                    Error::Parse { reason, .. } => Error::Parse { line: lineno + 1, reason },
                    other => other,
                })?;
                row.push(v);
            }
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        reason: format!("row has {} entries, expected {}", row.len(), w),
                    })
                }
                Some(_) => {}
            }
            rows.push(row);
        }
        TropMatrix::from_rows(&rows)
    }
}

/// Max-plus matrix product: `(A (x) B)_ij = max_k (a_ik + b_kj)`.
pub fn trop_matmul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    if a.ncols() != b.nrows() {
        return Err(Error::Dimension(format!(
            "inner dimensions {} and {} do not match",
            a.ncols(),
            b.nrows()
        )));
    }
    let mut out = TropMatrix::filled(a.nrows(), b.ncols(), TropValue::BOTTOM);
    for i in 0..a.nrows() {
        for j in 0..b.ncols() {
            let mut acc = TropValue::BOTTOM;
            for k in 0..a.ncols() {
                acc = acc.plus(a.get(i, k).times(b.get(k, j)));
            }
            out.entries[i * b.ncols() + j] = acc;
        }
    }
    Ok(out)
}

/// Outcome of a (generalized) tropical determinant: the maximum entry sum
/// over injections of columns into rows, how many injections attain it, and
/// up to [`WITNESS_CAP`] attaining injections (`witnesses[w][j]` is the row
/// assigned to column `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetResult {
    pub value: TropValue,
    pub multiplicity: u64,
    pub witnesses: Vec<Vec<usize>>,
}

impl DetResult {
    /// Distinct supports among the stored witnesses, a support being the
    /// sorted list of selected cells holding a finite nonzero entry. When the
    /// witness cap truncated the enumeration this is a lower bound.
    pub fn distinct_witness_supports(&self, m: &TropMatrix) -> Vec<Vec<(usize, usize)>> {
        let mut set = BTreeSet::new();
        for w in &self.witnesses {
            let mut support: Vec<(usize, usize)> = w
                .iter()
                .enumerate()
                .filter(|&(j, &i)| {
                    let v = m.get(i, j);
                    !v.is_bottom() && v != TropValue::finite(0.0)
                })
                .map(|(j, &i)| (i, j))
                .collect();
            support.sort_unstable();
            set.insert(support);
        }
        set.into_iter().collect()
    }
}

struct DetAccum {
    seen: bool,
    best: f64,
    count: u64,
    witnesses: Vec<Vec<usize>>,
    cap: usize,
}

impl DetAccum {
    fn new(cap: usize) -> Self {
        DetAccum {
            seen: false,
            best: f64::NEG_INFINITY,
            count: 0,
            witnesses: Vec::new(),
            cap,
        }
    }

    fn record(&mut self, sum: f64, pick: &[usize]) {
        if !self.seen || sum > self.best {
            self.seen = true;
            self.best = sum;
            self.count = 1;
            self.witnesses.clear();
            if self.cap > 0 {
                self.witnesses.push(pick.to_vec());
            }
        } else if sum == self.best {
            self.count += 1;
            if self.witnesses.len() < self.cap {
                self.witnesses.push(pick.to_vec());
            }
        }
    }

    fn finish(self) -> DetResult {
        DetResult {
            value: if self.seen && self.best > f64::NEG_INFINITY {
                TropValue::finite(self.best)
            } else {
                TropValue::BOTTOM
            },
            multiplicity: self.count,
            witnesses: self.witnesses,
        }
    }
}

/// Depth-first sweep over injections of columns into rows, in lexicographic
/// order, abandoning branches whose optimistic bound falls strictly below the
/// best sum found so far (ties are kept so multiplicities stay exact).
fn enumerate_injections(m: &TropMatrix, cap: usize) -> DetResult {
    debug_assert!(m.nrows() >= m.ncols());
    let r = m.ncols();
    if r == 0 {
        let mut acc = DetAccum::new(cap);
        acc.record(0.0, &[]);
        return acc.finish();
    }
    // suffix[j] = sum over columns >= j of the columnwise maximum
    let mut suffix = vec![0.0f64; r + 1];
    for j in (0..r).rev() {
        let colmax = (0..m.nrows())
            .map(|i| m.get(i, j).as_f64())
            .fold(f64::NEG_INFINITY, f64::max);
        suffix[j] = suffix[j + 1] + colmax;
    }
    let mut acc = DetAccum::new(cap);
    let mut used = vec![false; m.nrows()];
    let mut pick = Vec::with_capacity(r);
    descend(m, 0, 0.0, &suffix, &mut used, &mut pick, &mut acc);
    acc.finish()
}

fn descend(
    m: &TropMatrix,
    col: usize,
    partial: f64,
    suffix: &[f64],
    used: &mut [bool],
    pick: &mut Vec<usize>,
    acc: &mut DetAccum,
) {
    if col == m.ncols() {
        acc.record(partial, pick);
        return;
    }
    if acc.seen && partial + suffix[col] < acc.best {
        return;
    }
    for i in 0..m.nrows() {
        if used[i] {
            continue;
        }
        used[i] = true;
        pick.push(i);
        descend(m, col + 1, partial + m.get(i, col).as_f64(), suffix, used, pick, acc);
        pick.pop();
        used[i] = false;
    }
}

/// Tropical determinant of a square matrix: the maximum over permutations of
/// the selected-entry sum, with its multiplicity.
pub fn trop_det(a: &TropMatrix) -> Result<DetResult> {
    if a.nrows() != a.ncols() {
        return Err(Error::Dimension(format!(
            "tropical determinant requires a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    if a.nrows() > MAX_DET_DIM {
        return Err(Error::SizeGuard(format!(
            "determinant of a {0}x{0} matrix enumerates {0}! permutations (limit {MAX_DET_DIM})",
            a.nrows()
        )));
    }
    Ok(enumerate_injections(a, WITNESS_CAP))
}

/// Generalized tropical determinant: the maximum over injections of the
/// column set into the row set. Agrees with [`trop_det`] on square matrices.
/// With fewer rows than columns no injection exists: the result is bottom
/// with multiplicity zero.
pub fn gen_trop_det(a: &TropMatrix) -> Result<DetResult> {
    if a.nrows() < a.ncols() {
        return Ok(DetResult {
            value: TropValue::BOTTOM,
            multiplicity: 0,
            witnesses: Vec::new(),
        });
    }
    let work = falling_factorial(a.nrows(), a.ncols());
    if work > MAX_GEN_DET_INJECTIONS {
        return Err(Error::SizeGuard(format!(
            "{work} injections from {} columns into {} rows (limit {MAX_GEN_DET_INJECTIONS})",
            a.ncols(),
            a.nrows()
        )));
    }
    Ok(enumerate_injections(a, WITNESS_CAP))
}

/// Whether the determinant's maximum is attained at least twice (or never
/// finitely attained at all).
pub fn is_trop_singular(a: &TropMatrix) -> Result<bool> {
    let det = trop_det(a)?;
    Ok(det.value.is_bottom() || det.multiplicity >= 2)
}

/// Tropical rank: the largest `k` such that some `k x k` submatrix is
/// tropically nonsingular; 0 for empty or all-bottom matrices.
pub fn trop_rank(a: &TropMatrix) -> Result<usize> {
    let k_max = a.nrows().min(a.ncols());
    if k_max > MAX_RANK_DIM {
        return Err(Error::SizeGuard(format!(
            "tropical rank with minors up to {k_max}x{k_max} refused (limit {MAX_RANK_DIM})"
        )));
    }
    let work: u128 = (1..=k_max)
        .map(|k| binomial(a.nrows(), k) * binomial(a.ncols(), k) * factorial(k))
        .sum();
    if work > MAX_RANK_WORK {
        return Err(Error::SizeGuard(format!(
            "tropical rank would enumerate {work} injections (limit {MAX_RANK_WORK})"
        )));
    }
    for k in (1..=k_max).rev() {
        for rows in (0..a.nrows()).combinations(k) {
            for cols in (0..a.ncols()).combinations(k) {
                let sub = a.submatrix(&rows, &cols);
                let det = enumerate_injections(&sub, 0);
                if !det.value.is_bottom() && det.multiplicity == 1 {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// Trace of the viability-loop rank reduction: `verdicts[i]` is the
/// viability verdict with `i` all-ones rows appended; the last one is true.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrankTrace {
    pub appends: usize,
    pub verdicts: Vec<bool>,
}

/// Rank via repeated viability tests: if the matrix is viable the result is
/// the column count `r`; otherwise all-ones rows are appended until viability
/// holds after `i` of them, and the result is `r - i`. Viability itself is a
/// matching test, so at most `r` appends are ever needed.
pub fn trank_via_viability(x: &BinaryMatrix) -> Result<(usize, TrankTrace)> {
    let r = x.ncols();
    if r > MAX_VIABILITY_COLS {
        return Err(Error::SizeGuard(format!(
            "viability-loop reduction on {r} columns refused (limit {MAX_VIABILITY_COLS})"
        )));
    }
    let mut cur = x.clone();
    let mut verdicts = Vec::new();
    for appended in 0..=r {
        let viable = crate::maximal::is_viable(&cur);
        verdicts.push(viable);
        if viable {
            return Ok((r - appended, TrankTrace { appends: appended, verdicts }));
        }
        cur = cur.appending_row(&vec![1u8; r]).expect("row width matches");
    }
    unreachable!("r appended all-ones rows always admit a full column matching")
}

fn falling_factorial(n: usize, r: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul((n - i) as u128);
    }
    acc
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

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}
