//! Binary matrices as presentations: construction, parsing, permutation
//! equivalence, and the per-column block operations.
//!
//! Rows index ground-set elements, columns index the sets of the family;
//! entry `(i, j)` is 1 exactly when element `i` belongs to set `j`. All
//! indices are 0-based in the API; the CLI renders them 1-based.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Equivalence testing sweeps all `r!` column permutations; refused past this.
pub const MAX_EQUIVALENCE_COLS: usize = 8;

/// An `n x r` 0/1 matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<u8>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix { rows, cols, bits: vec![0; rows * cols] }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        BinaryMatrix { rows, cols, bits: vec![1; rows * cols] }
    }

    /// Build from row vectors; all rows must share one length and hold 0/1.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut bits = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    cols
                )));
            }
            for &b in row {
                if b > 1 {
                    return Err(Error::Dimension(format!("entry {b} is not 0/1")));
                }
                bits.push(b);
            }
        }
        Ok(BinaryMatrix { rows: rows.len(), cols, bits })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of bounds");
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of bounds");
        assert!(v <= 1, "entry {v} is not 0/1");
        self.bits[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.bits[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(|i| self.row(i))
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Rows carrying a 1 in column `j`, ascending.
    pub fn column_support(&self, j: usize) -> Vec<usize> {
        (0..self.rows).filter(|&i| self.get(i, j) == 1).collect()
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(|&b| b == 0)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn deleting_row(&self, i: usize) -> BinaryMatrix {
        assert!(i < self.rows, "row {i} out of bounds");
        let mut bits = Vec::with_capacity((self.rows - 1) * self.cols);
        for (k, row) in self.rows_iter().enumerate() {
            if k != i {
                bits.extend_from_slice(row);
            }
        }
        BinaryMatrix { rows: self.rows - 1, cols: self.cols, bits }
    }

    pub fn appending_row(&self, row: &[u8]) -> Result<BinaryMatrix> {
        if row.len() != self.cols {
            return Err(Error::Dimension(format!(
                "appended row has {} entries, expected {}",
                row.len(),
                self.cols
            )));
        }
        if let Some(&b) = row.iter().find(|&&b| b > 1) {
            return Err(Error::Dimension(format!("entry {b} is not 0/1")));
        }
        let mut bits = self.bits.clone();
        bits.extend_from_slice(row);
        Ok(BinaryMatrix { rows: self.rows + 1, cols: self.cols, bits })
    }

    /// Keep only the given columns, in the order given.
    pub fn selecting_columns(&self, cols: &[usize]) -> BinaryMatrix {
        let mut bits = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                bits.push(self.get(i, j));
            }
        }
        BinaryMatrix { rows: self.rows, cols: cols.len(), bits }
    }

    /// Keep only the given rows, in the order given.
    pub fn selecting_rows(&self, rows: &[usize]) -> BinaryMatrix {
        let mut bits = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            bits.extend_from_slice(self.row(i));
        }
        BinaryMatrix { rows: rows.len(), cols: self.cols, bits }
    }

    pub fn to_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entrywise `self <= other`; false when shapes differ.
    pub fn entrywise_le(&self, other: &BinaryMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.bits.iter().zip(&other.bits).all(|(a, b)| a <= b)
    }

    /// The set family read off the columns: set `j` holds the rows with a 1
    /// in column `j`.
    pub fn to_presentation(&self) -> Presentation {
        Presentation {
            ground_size: self.rows,
            sets: (0..self.cols).map(|j| self.column_support(j)).collect(),
        }
    }

    /// The block of column `j`: delete column `j` together with every row
    /// adjacent to it. Surviving original row indices are kept for label
    /// tracking.
    pub fn block(&self, j: usize) -> Result<Block> {
        self.check_col(j)?;
        let keep_cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        let rows: Vec<usize> = (0..self.rows).filter(|&i| self.get(i, j) == 0).collect();
        let mut bits = Vec::with_capacity(rows.len() * keep_cols.len());
        for &i in &rows {
            for &c in &keep_cols {
                bits.push(self.get(i, c));
            }
        }
        Ok(Block {
            matrix: BinaryMatrix { rows: rows.len(), cols: keep_cols.len(), bits },
            rows,
        })
    }

    /// The masked form of the block of column `k`: same shape as `self`,
    /// entry `(i, j)` becomes `(1 - x_ik) * x_ij`, so rows adjacent to `k`
    /// (and column `k` itself) are zeroed while original indices survive.
    pub fn block_masked(&self, k: usize) -> Result<BinaryMatrix> {
        self.check_col(k)?;
        let mut out = self.clone();
        for i in 0..self.rows {
            let mask = 1 - self.get(i, k);
            for j in 0..self.cols {
                out.set(i, j, mask * self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Apply a row and column permutation: entry `(i, j)` of the result is
    /// entry `(rows^-1(i), cols^-1(j))` of `self`.
    pub fn permute(&self, p: &PermPair) -> Result<BinaryMatrix> {
        if p.rows.len() != self.rows || p.cols.len() != self.cols {
            return Err(Error::Dimension(format!(
                "permutation sizes {}x{} do not match matrix {}x{}",
                p.rows.len(),
                p.cols.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = BinaryMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(p.rows.apply(i), p.cols.apply(j), self.get(i, j));
            }
        }
        Ok(out)
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j >= self.cols {
            return Err(Error::IndexOutOfRange(format!(
                "column {} of a matrix with {} columns",
                j, self.cols
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{}:", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " {}", self.row(i).iter().map(|b| b.to_string()).join(""))?;
        }
        write!(f, ")")
    }
}

/// Text form: one row per line, entries separated by single spaces. A matrix
/// with zero columns prints as blank lines and therefore does not survive a
/// round trip through [`FromStr`]; that degeneracy is inherent to the format.
impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i).iter().map(|b| b.to_string()).join(" "))?;
        }
        Ok(())
    }
}

/// Lines of whitespace-separated `0`/`1` tokens. Blank lines and lines whose
/// first non-space character is `#` are skipped.
impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        let mut width: Option<usize> = None;
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                match tok {
                    "0" => row.push(0),
                    "1" => row.push(1),
                    other => {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            reason: format!("token '{other}' is not 0 or 1"),
                        })
                    }
                }
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
        BinaryMatrix::from_rows(&rows)
    }
}

/// A block `X(c_j)` together with the original index of each surviving row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub matrix: BinaryMatrix,
    pub rows: Vec<usize>,
}

/// An ordered family of subsets of `{0, .., ground_size-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    ground_size: usize,
    sets: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn new(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut cleaned = Vec::with_capacity(sets.len());
        for (j, set) in sets.into_iter().enumerate() {
            if let Some(&e) = set.iter().find(|&&e| e >= ground_size) {
                return Err(Error::IndexOutOfRange(format!(
                    "element {e} in set {j} exceeds ground set of size {ground_size}"
                )));
            }
            let mut set = set;
            set.sort_unstable();
            set.dedup();
            cleaned.push(set);
        }
        Ok(Presentation { ground_size, sets: cleaned })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn to_matrix(&self) -> BinaryMatrix {
        let mut x = BinaryMatrix::zeros(self.ground_size, self.sets.len());
        for (j, set) in self.sets.iter().enumerate() {
            for &i in set {
                x.set(i, j, 1);
            }
        }
        x
    }
}

/// A bijection of `{0, .., k-1}` stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || seen[v] {
                return Err(Error::Dimension(format!(
                    "image table {image:?} is not a bijection"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(image))
    }

    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&v| next.apply(v)).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// A row permutation together with a column permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermPair {
    pub rows: Permutation,
    pub cols: Permutation,
}

impl PermPair {
    pub fn identity(rows: usize, cols: usize) -> Self {
        PermPair {
            rows: Permutation::identity(rows),
            cols: Permutation::identity(cols),
        }
    }

    pub fn inverse(&self) -> PermPair {
        PermPair { rows: self.rows.inverse(), cols: self.cols.inverse() }
    }

    pub fn then(&self, next: &PermPair) -> PermPair {
        PermPair { rows: self.rows.then(&next.rows), cols: self.cols.then(&next.cols) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceMode {
    RowsAndColumns,
    ColumnsOnly,
}

/// Canonical form under simultaneous row and column permutation: for each of
/// the `r!` column orders, sort rows lexicographically descending; the
/// lexicographically greatest matrix over all column orders is canonical.
/// Also returns a witness mapping the input onto the canonical form.
pub fn canonical_form(x: &BinaryMatrix) -> Result<(BinaryMatrix, PermPair)> {
    guard_cols(x.ncols())?;
    let mut best: Option<(BinaryMatrix, PermPair)> = None;
    for image in (0..x.ncols()).permutations(x.ncols()) {
        let cols = Permutation::new(image).expect("permutations() yields bijections");
        let cols_only = PermPair { rows: Permutation::identity(x.nrows()), cols };
        let shuffled = x.permute(&cols_only)?;
        let mut order: Vec<usize> = (0..x.nrows()).collect();
        order.sort_by(|&a, &b| shuffled.row(b).cmp(shuffled.row(a)));
        let mut row_image = vec![0; x.nrows()];
        for (pos, &orig) in order.iter().enumerate() {
            row_image[orig] = pos;
        }
        let pair = PermPair {
            rows: Permutation::new(row_image).expect("sort order is a bijection"),
            cols: cols_only.cols,
        };
        let candidate = x.permute(&pair)?;
        let better = match &best {
            None => true,
            Some((b, _)) => candidate.bits > b.bits,
        };
        if better {
            best = Some((candidate, pair));
        }
    }
    // r! >= 1 even for empty matrices, so a candidate always exists.
    Ok(best.expect("at least one column permutation"))
}

/// Search for a permutation pair carrying `x` onto `y`. Shape mismatch means
/// inequivalent (`None`); more than [`MAX_EQUIVALENCE_COLS`] columns is a
/// guard error because the search is factorial in the column count.
pub fn equivalent(
    x: &BinaryMatrix,
    y: &BinaryMatrix,
    mode: EquivalenceMode,
) -> Result<Option<PermPair>> {
    if x.nrows() != y.nrows() || x.ncols() != y.ncols() {
        return Ok(None);
    }
    guard_cols(x.ncols())?;
    match mode {
        EquivalenceMode::ColumnsOnly => {
            for image in (0..x.ncols()).permutations(x.ncols()) {
                let pair = PermPair {
                    rows: Permutation::identity(x.nrows()),
                    cols: Permutation::new(image).expect("bijection"),
                };
                if x.permute(&pair)? == *y {
                    return Ok(Some(pair));
                }
            }
            Ok(None)
        }
        EquivalenceMode::RowsAndColumns => {
            let (cx, px) = canonical_form(x)?;
            let (cy, py) = canonical_form(y)?;
            if cx == cy {
                Ok(Some(px.then(&py.inverse())))
            } else {
                Ok(None)
            }
        }
    }
}

fn guard_cols(cols: usize) -> Result<()> {
    if cols > MAX_EQUIVALENCE_COLS {
        return Err(Error::SizeGuard(format!(
            "equivalence search over {cols}! column permutations refused (limit {MAX_EQUIVALENCE_COLS} columns)"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> BinaryMatrix {
        s.parse().unwrap()
    }

    // Six-element, three-set worked example used across the crate's tests.
    const SIX_BY_THREE: &str = "1 1 1\n0 1 1\n0 0 1\n0 0 1\n1 0 1\n1 1 1";

    #[test]
    fn parse_basic() {
        let x = m("1 1\n0 1\n");
        assert_eq!(x.to_vecs(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn parse_empty_is_0x0() {
        let x = m("");
        assert_eq!((x.nrows(), x.ncols()), (0, 0));
    }

    #[test]
    fn parse_skips_blanks_and_comments() {
        let x = m("# header\n\n1 0\n   \n# mid\n0 1\n");
        assert_eq!(x.to_vecs(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn parse_ragged_row_names_line() {
        let err = "1 1 1\n0 1\n".parse::<BinaryMatrix>().unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_non_binary_token() {
        let err = "1 2\n".parse::<BinaryMatrix>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn display_round_trip() {
        let x = m("1 0 1\n0 1 1\n");
        let again: BinaryMatrix = x.to_string().parse().unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn presentation_from_columns() {
        let x = m("1 1\n0 1");
        let p = x.to_presentation();
        assert_eq!(p.sets(), &[vec![0], vec![0, 1]]);

        let z = BinaryMatrix::zeros(3, 2);
        assert_eq!(z.to_presentation().sets(), &[vec![], vec![]]);

        let s = m(SIX_BY_THREE);
        let p = s.to_presentation();
        assert_eq!(p.sets(), &[vec![0, 4, 5], vec![0, 1, 5], vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn presentation_round_trip() {
        let x = m("1 0\n0 1\n0 0");
        assert_eq!(x.to_presentation().to_matrix(), x);
        let p = Presentation::new(3, vec![vec![2, 0, 2], vec![]]).unwrap();
        assert_eq!(p.to_matrix().to_presentation(), p);
    }

    #[test]
    fn presentation_rejects_out_of_range() {
        let err = Presentation::new(2, vec![vec![2]]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange(_)));
    }

    #[test]
    fn block_of_first_column() {
        let b = m(SIX_BY_THREE).block(0).unwrap();
        assert_eq!(b.matrix, m("1 1\n0 1\n0 1"));
        assert_eq!(b.rows, vec![1, 2, 3]);
    }

    #[test]
    fn block_of_all_ones_column_is_empty() {
        let b = m(SIX_BY_THREE).block(2).unwrap();
        assert_eq!((b.matrix.nrows(), b.matrix.ncols()), (0, 2));
        assert!(b.rows.is_empty());
    }

    #[test]
    fn block_of_zero_column_keeps_all_rows() {
        let x = m("0 1\n0 0\n0 1");
        let b = x.block(0).unwrap();
        assert_eq!(b.matrix, m("1\n0\n1"));
        assert_eq!(b.rows, vec![0, 1, 2]);
    }

    #[test]
    fn block_index_error() {
        assert!(matches!(m("1").block(1), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn masked_block_matches_display() {
        let got = m(SIX_BY_THREE).block_masked(0).unwrap();
        assert_eq!(got, m("0 0 0\n0 1 1\n0 0 1\n0 0 1\n0 0 0\n0 0 0"));
    }

    #[test]
    fn masked_block_of_zero_matrix() {
        let x = BinaryMatrix::zeros(2, 2);
        assert_eq!(x.block_masked(1).unwrap(), x);
    }

    // Deleting the rows the mask zeroed, plus the masked column itself,
    // recovers the deleted-form block exactly.
    #[test]
    fn masked_and_deleted_blocks_agree() {
        for code in 0u32..1 << 9 {
            let mut x = BinaryMatrix::zeros(3, 3);
            for p in 0..9 {
                x.set(p / 3, p % 3, ((code >> p) & 1) as u8);
            }
            for j in 0..3 {
                let masked = x.block_masked(j).unwrap();
                let block = x.block(j).unwrap();
                let survivors: Vec<Vec<u8>> = (0..3)
                    .filter(|&i| x.get(i, j) == 0)
                    .map(|i| {
                        (0..3).filter(|&c| c != j).map(|c| masked.get(i, c)).collect()
                    })
                    .collect();
                assert_eq!(survivors, block.matrix.to_vecs());
            }
        }
    }

    #[test]
    fn permute_identity_and_swap() {
        let x = m("1 0\n0 1");
        assert_eq!(x.permute(&PermPair::identity(2, 2)).unwrap(), x);

        let swap = PermPair {
            rows: Permutation::identity(2),
            cols: Permutation::new(vec![1, 0]).unwrap(),
        };
        assert_eq!(x.permute(&swap).unwrap(), m("0 1\n1 0"));
    }

    #[test]
    fn permute_then_inverse_is_identity() {
        let x = m("1 1 0\n0 1 0");
        let p = PermPair {
            rows: Permutation::new(vec![1, 0]).unwrap(),
            cols: Permutation::new(vec![2, 0, 1]).unwrap(),
        };
        assert_eq!(x.permute(&p).unwrap().permute(&p.inverse()).unwrap(), x);
    }

    #[test]
    fn permute_dimension_error() {
        let x = m("1 0\n0 1");
        assert!(matches!(
            x.permute(&PermPair::identity(3, 2)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
    }

    #[test]
    fn equivalent_to_itself() {
        let x = m("1 0\n1 1");
        let pair = equivalent(&x, &x, EquivalenceMode::RowsAndColumns).unwrap().unwrap();
        assert_eq!(x.permute(&pair).unwrap(), x);
    }

    #[test]
    fn equivalent_columns_only_swap() {
        let x = m("1 0\n0 1");
        let y = m("0 1\n1 0");
        let pair = equivalent(&x, &y, EquivalenceMode::ColumnsOnly).unwrap().unwrap();
        assert_eq!(pair.cols.as_slice(), &[1, 0]);
        assert_eq!(x.permute(&pair).unwrap(), y);
    }

    #[test]
    fn equivalent_rows_and_columns_example() {
        let x = m("1 1\n1 0\n0 0");
        let y = m("0 0\n0 1\n1 1");
        let pair = equivalent(&x, &y, EquivalenceMode::RowsAndColumns).unwrap().unwrap();
        assert_eq!(x.permute(&pair).unwrap(), y);
        assert!(equivalent(&x, &m("1 1\n1 1\n0 0"), EquivalenceMode::RowsAndColumns)
            .unwrap()
            .is_none());
    }

    #[test]
    fn equivalent_shape_mismatch_is_absent() {
        let x = m("1");
        let y = m("1 0");
        assert!(equivalent(&x, &y, EquivalenceMode::RowsAndColumns).unwrap().is_none());
    }

    #[test]
    fn equivalent_size_guard() {
        let x = BinaryMatrix::zeros(2, 9);
        assert!(matches!(
            equivalent(&x, &x, EquivalenceMode::ColumnsOnly),
            Err(Error::SizeGuard(_))
        ));
    }

    // Equivalence is an equivalence relation; checked on all 3x2 matrices.
    #[test]
    fn equivalence_relation_on_3x2_universe() {
        let universe: Vec<BinaryMatrix> = (0u32..1 << 6)
            .map(|code| {
                let mut x = BinaryMatrix::zeros(3, 2);
                for p in 0..6 {
                    x.set(p / 2, p % 2, ((code >> p) & 1) as u8);
                }
                x
            })
            .collect();
        let canon: Vec<BinaryMatrix> =
            universe.iter().map(|x| canonical_form(x).unwrap().0).collect();
        for (i, x) in universe.iter().enumerate() {
            // reflexive, with a valid witness
            let p = equivalent(x, x, EquivalenceMode::RowsAndColumns).unwrap().unwrap();
            assert_eq!(x.permute(&p).unwrap(), *x);
            for (k, y) in universe.iter().enumerate() {
                let xy = equivalent(x, y, EquivalenceMode::RowsAndColumns).unwrap();
                // symmetric, and consistent with canonical forms (which makes
                // transitivity immediate)
                assert_eq!(xy.is_some(), canon[i] == canon[k]);
                if let Some(p) = xy {
                    assert_eq!(x.permute(&p).unwrap(), *y);
                }
            }
        }
    }

    #[test]
    fn block_shape_invariants() {
        for code in 0u32..1 << 8 {
            let mut x = BinaryMatrix::zeros(4, 2);
            for p in 0..8 {
                x.set(p / 2, p % 2, ((code >> p) & 1) as u8);
            }
            for j in 0..2 {
                let b = x.block(j).unwrap();
                assert_eq!(b.matrix.ncols(), 1);
                assert_eq!(b.matrix.nrows(), 4 - x.column_support(j).len());
            }
        }
    }
}
