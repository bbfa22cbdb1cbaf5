//! Complete classification of maximal two-column matrices.
//!
//! With two columns every row is one of four types, so the whole analysis
//! reduces to the type counts `(both, first-only, second-only, neither)`.
//! Maximality is a constant-time test on those counts: the matrix must have
//! a two-matching and neither single-column count may equal exactly one.
//! Maximal matrices then fall into three families, decided after swapping
//! columns so that the first-only count dominates:
//! every non-loop row is `[1 1]` (AllPairs); one column contains the other
//! with at least two `[1 0]` rows (MixedColumn); or both split types occur
//! at least twice (SplitColumns). Loop rows are allowed in every family.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, PermPair, Permutation};

/// Enumeration bound on the ground-set size.
pub const MAX_ENUM_ROWS: usize = 64;

/// Row-type counts of a two-column matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowTypeCounts {
    /// Rows equal to `[1 1]`.
    pub both: usize,
    /// Rows equal to `[1 0]`.
    pub first_only: usize,
    /// Rows equal to `[0 1]`.
    pub second_only: usize,
    /// Rows equal to `[0 0]` (loops).
    pub neither: usize,
}

impl RowTypeCounts {
    pub fn total(&self) -> usize {
        self.both + self.first_only + self.second_only + self.neither
    }

    fn swapped(self) -> RowTypeCounts {
        RowTypeCounts {
            both: self.both,
            first_only: self.second_only,
            second_only: self.first_only,
            neither: self.neither,
        }
    }

    fn has_rank_two(&self) -> bool {
        self.both >= 2
            || (self.both >= 1 && self.first_only + self.second_only >= 1)
            || (self.first_only >= 1 && self.second_only >= 1)
    }

    fn is_maximal(&self) -> bool {
        self.has_rank_two() && self.first_only != 1 && self.second_only != 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank2Family {
    /// Every non-loop row is `[1 1]` (at least two of them).
    AllPairs,
    /// After normalization: `[1 1]` rows plus at least two `[1 0]` rows and
    /// no `[0 1]` rows.
    MixedColumn,
    /// After normalization: at least two `[1 0]` and at least two `[0 1]`
    /// rows.
    SplitColumns,
    NotMaximal,
    NotRank2,
}

impl fmt::Display for Rank2Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rank2Family::AllPairs => "AllPairs",
            Rank2Family::MixedColumn => "MixedColumn",
            Rank2Family::SplitColumns => "SplitColumns",
            Rank2Family::NotMaximal => "NotMaximal",
            Rank2Family::NotRank2 => "NotRank2",
        };
        f.write_str(s)
    }
}

/// Classification outcome: family tag, type counts in the normalized
/// (first-only >= second-only) orientation, and a permutation pair carrying
/// the input onto its normal form (rows sorted by type, loops last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Classification {
    pub family: Rank2Family,
    pub counts: RowTypeCounts,
    pub perm: PermPair,
}

fn require_two_columns(x: &BinaryMatrix) -> Result<()> {
    if x.ncols() != 2 {
        return Err(Error::Dimension(format!(
            "rank-2 analysis requires exactly 2 columns, got {}",
            x.ncols()
        )));
    }
    Ok(())
}

/// Count the four row types of a two-column matrix.
pub fn row_type_counts(x: &BinaryMatrix) -> Result<RowTypeCounts> {
    require_two_columns(x)?;
    let mut counts = RowTypeCounts { both: 0, first_only: 0, second_only: 0, neither: 0 };
    for i in 0..x.nrows() {
        match (x.get(i, 0), x.get(i, 1)) {
            (1, 1) => counts.both += 1,
            (1, 0) => counts.first_only += 1,
            (0, 1) => counts.second_only += 1,
            _ => counts.neither += 1,
        }
    }
    Ok(counts)
}

/// Constant-time maximality test for two-column matrices: a two-matching
/// exists and neither single-column row count equals one. The two sums
/// `sum_i x_i2 (1 - x_i1)` and `sum_i x_i1 (1 - x_i2)` are exactly the
/// second-only and first-only counts.
pub fn is_maximal_rank2(x: &BinaryMatrix) -> Result<bool> {
    Ok(row_type_counts(x)?.is_maximal())
}

/// Classify a two-column matrix. Maximal matrices get one of the three
/// family tags, decided on the normalized counts in the order the case
/// split demands: no `[1 0]` rows at all means AllPairs, a second-only
/// count of at least two means SplitColumns, otherwise MixedColumn.
pub fn classify(x: &BinaryMatrix) -> Result<Rank2Classification> {
    let raw = row_type_counts(x)?;
    let swap = raw.first_only < raw.second_only;
    let counts = if swap { raw.swapped() } else { raw };

    let family = if !counts.has_rank_two() {
        Rank2Family::NotRank2
    } else if !counts.is_maximal() {
        Rank2Family::NotMaximal
    } else if counts.first_only == 0 {
        Rank2Family::AllPairs
    } else if counts.second_only >= 2 {
        Rank2Family::SplitColumns
    } else {
        debug_assert_eq!(counts.second_only, 0);
        Rank2Family::MixedColumn
    };

    let cols = if swap {
        Permutation::new(vec![1, 0]).expect("swap is a bijection")
    } else {
        Permutation::identity(2)
    };
    // stable sort of rows by normalized type keeps the form canonical with
    // loops last
    let type_of = |i: usize| -> usize {
        let (a, b) = (x.get(i, 0), x.get(i, 1));
        let (a, b) = if swap { (b, a) } else { (a, b) };
        match (a, b) {
            (1, 1) => 0,
            (1, 0) => 1,
            (0, 1) => 2,
            _ => 3,
        }
    };
    let mut order: Vec<usize> = (0..x.nrows()).collect();
    order.sort_by_key(|&i| type_of(i));
    let mut row_image = vec![0; x.nrows()];
    for (pos, &orig) in order.iter().enumerate() {
        row_image[orig] = pos;
    }
    let perm = PermPair { rows: Permutation::new(row_image).expect("bijection"), cols };

    Ok(Rank2Classification { family, counts, perm })
}

/// The sorted-row matrix realizing a count vector: `[1 1]` rows first, then
/// `[1 0]`, then `[0 1]`, loops last.
pub fn matrix_from_counts(counts: &RowTypeCounts) -> BinaryMatrix {
    let mut rows = Vec::with_capacity(counts.total());
    rows.extend(std::iter::repeat_n(vec![1, 1], counts.both));
    rows.extend(std::iter::repeat_n(vec![1, 0], counts.first_only));
    rows.extend(std::iter::repeat_n(vec![0, 1], counts.second_only));
    rows.extend(std::iter::repeat_n(vec![0, 0], counts.neither));
    BinaryMatrix::from_rows(&rows).expect("rows are rectangular 0/1")
}

/// One canonical representative per row-and-column-permutation class of
/// maximal `n x 2` matrices: every count vector summing to `n` with
/// `first_only >= second_only` that passes the maximality test, emitted as
/// its sorted-row matrix, ascending by (both, first_only, second_only).
pub fn enumerate_maximal_rank2(n: usize) -> Result<Vec<BinaryMatrix>> {
    if n > MAX_ENUM_ROWS {
        return Err(Error::SizeGuard(format!(
            "enumeration for {n} rows refused (limit {MAX_ENUM_ROWS})"
        )));
    }
    let mut out = Vec::new();
    for both in 0..=n {
        for first_only in 0..=n - both {
            for second_only in 0..=(n - both - first_only).min(first_only) {
                let counts = RowTypeCounts {
                    both,
                    first_only,
                    second_only,
                    neither: n - both - first_only - second_only,
                };
                if counts.is_maximal() {
                    out.push(matrix_from_counts(&counts));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{canonical_form, equivalent, EquivalenceMode};
    use crate::maximal::{self, MaximalityMethod};
    use crate::oracle;

    fn m(s: &str) -> BinaryMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn counts_examples() {
        let c = row_type_counts(&m("1 1\n1 0\n0 1\n0 0")).unwrap();
        assert_eq!(c, RowTypeCounts { both: 1, first_only: 1, second_only: 1, neither: 1 });

        let c = row_type_counts(&BinaryMatrix::ones(5, 2)).unwrap();
        assert_eq!((c.both, c.total()), (5, 5));

        let c = row_type_counts(&BinaryMatrix::zeros(0, 2)).unwrap();
        assert_eq!(c.total(), 0);

        assert!(matches!(
            row_type_counts(&BinaryMatrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn maximality_examples() {
        assert!(is_maximal_rank2(&m("1 1\n1 1")).unwrap());
        assert!(!is_maximal_rank2(&m("1 0\n0 1\n0 1")).unwrap());
        assert!(is_maximal_rank2(&m("1 0\n1 0\n0 1\n0 1")).unwrap());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&m("1 1\n1 1\n0 0")).unwrap();
        assert_eq!(c.family, Rank2Family::AllPairs);
        assert_eq!(c.counts.neither, 1);

        let c = classify(&m("1 1\n1 0\n1 0")).unwrap();
        assert_eq!(c.family, Rank2Family::MixedColumn);

        let c = classify(&m("0 1\n0 1\n1 0\n1 0")).unwrap();
        assert_eq!(c.family, Rank2Family::SplitColumns);
        assert_eq!(
            c.counts,
            RowTypeCounts { both: 0, first_only: 2, second_only: 2, neither: 0 }
        );

        assert_eq!(classify(&m("1 0\n1 0")).unwrap().family, Rank2Family::NotRank2);
        assert_eq!(classify(&m("1 1\n1 0")).unwrap().family, Rank2Family::NotMaximal);
    }

    #[test]
    fn classify_witness_maps_to_normal_form() {
        for code in 0u32..1 << 10 {
            let mut x = BinaryMatrix::zeros(5, 2);
            for p in 0..10 {
                x.set(p / 2, p % 2, ((code >> p) & 1) as u8);
            }
            let c = classify(&x).unwrap();
            let normal = x.permute(&c.perm).unwrap();
            assert_eq!(normal, matrix_from_counts(&c.counts), "{x:?}");
        }
    }

    #[test]
    fn classify_is_permutation_invariant() {
        use itertools::Itertools;
        for code in 0u32..1 << 8 {
            let mut x = BinaryMatrix::zeros(4, 2);
            for p in 0..8 {
                x.set(p / 2, p % 2, ((code >> p) & 1) as u8);
            }
            let tag = classify(&x).unwrap().family;
            for rows in (0..4usize).permutations(4) {
                for cols in [vec![0, 1], vec![1, 0]] {
                    let pair = PermPair {
                        rows: Permutation::new(rows.clone()).unwrap(),
                        cols: Permutation::new(cols).unwrap(),
                    };
                    let y = x.permute(&pair).unwrap();
                    assert_eq!(classify(&y).unwrap().family, tag, "{x:?} {y:?}");
                }
            }
        }
    }

    // The two lemma sums are exactly the single-column row counts.
    #[test]
    fn lemma_sums_are_counts() {
        for code in 0u32..1 << 12 {
            let mut x = BinaryMatrix::zeros(6, 2);
            for p in 0..12 {
                x.set(p / 2, p % 2, ((code >> p) & 1) as u8);
            }
            let c = row_type_counts(&x).unwrap();
            let sum_second: usize =
                (0..6).map(|i| (x.get(i, 1) * (1 - x.get(i, 0))) as usize).sum();
            let sum_first: usize =
                (0..6).map(|i| (x.get(i, 0) * (1 - x.get(i, 1))) as usize).sum();
            assert_eq!(sum_second, c.second_only);
            assert_eq!(sum_first, c.first_only);
        }
    }

    #[test]
    fn agreement_with_general_machinery() {
        for n in 0..=5usize {
            for x in oracle::all_binary_matrices(n, 2) {
                let quick = is_maximal_rank2(&x).unwrap();
                let (general, _) = maximal::is_maximal(&x, MaximalityMethod::Fixpoint).unwrap();
                assert_eq!(quick, general, "{x:?}");
            }
        }
    }

    #[test]
    fn enumerate_base_cases() {
        assert_eq!(enumerate_maximal_rank2(2).unwrap(), vec![m("1 1\n1 1")]);

        let four = enumerate_maximal_rank2(4).unwrap();
        assert!(four.contains(&m("1 0\n1 0\n0 1\n0 1")));
        // the split family needs at least four rows
        assert!(enumerate_maximal_rank2(3)
            .unwrap()
            .iter()
            .all(|x| classify(x).unwrap().family != Rank2Family::SplitColumns));

        assert!(matches!(
            enumerate_maximal_rank2(MAX_ENUM_ROWS + 1),
            Err(Error::SizeGuard(_))
        ));
    }

    // Completeness and non-redundancy against the exhaustive sweep.
    #[test]
    fn enumerate_is_complete_and_non_redundant() {
        for n in 0..=5usize {
            let reps = enumerate_maximal_rank2(n).unwrap();
            for rep in &reps {
                assert!(is_maximal_rank2(rep).unwrap());
            }
            let rep_canon: Vec<BinaryMatrix> =
                reps.iter().map(|x| canonical_form(x).unwrap().0).collect();
            for (a, ca) in rep_canon.iter().enumerate() {
                for cb in rep_canon.iter().skip(a + 1) {
                    assert_ne!(ca, cb, "duplicate representatives at n={n}");
                }
            }
            for x in oracle::all_binary_matrices(n, 2) {
                if !is_maximal_rank2(&x).unwrap() {
                    continue;
                }
                let cx = canonical_form(&x).unwrap().0;
                let hits = rep_canon.iter().filter(|&c| *c == cx).count();
                assert_eq!(hits, 1, "{x:?} matches {hits} representatives");
            }
        }
    }

    // Appending loops always preserves maximality; appending an even number
    // of identical single-column rows preserves it; appending exactly one
    // breaks an AllPairs matrix.
    #[test]
    fn closure_under_row_appends() {
        for n in 2..=4usize {
            for x in oracle::all_binary_matrices(n, 2) {
                if !is_maximal_rank2(&x).unwrap() {
                    continue;
                }
                let with_loop = x.appending_row(&[0, 0]).unwrap();
                assert!(is_maximal_rank2(&with_loop).unwrap());

                for row in [[1u8, 0u8], [0u8, 1u8]] {
                    let twice = x.appending_row(&row).unwrap().appending_row(&row).unwrap();
                    assert!(is_maximal_rank2(&twice).unwrap(), "{x:?} + 2x{row:?}");
                }

                if classify(&x).unwrap().family == Rank2Family::AllPairs {
                    let once = x.appending_row(&[1, 0]).unwrap();
                    assert!(!is_maximal_rank2(&once).unwrap());
                }
            }
        }
    }

    #[test]
    fn representatives_are_equivalent_to_their_class() {
        let x = m("0 1\n1 0\n0 1\n1 0");
        let rep = matrix_from_counts(&classify(&x).unwrap().counts);
        assert!(equivalent(&x, &rep, EquivalenceMode::RowsAndColumns).unwrap().is_some());
    }
}
