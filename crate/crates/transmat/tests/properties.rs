//! Randomized invariants over the library surface.

use proptest::prelude::*;

use transmat::matrix::{BinaryMatrix, PermPair, Permutation};
use transmat::maximal::{self, MaximalityMethod};
use transmat::oracle;
use transmat::tropical::{self, TropMatrix, TropValue};

fn binary_matrix(max_n: usize, max_r: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max_n, 1..=max_r).prop_flat_map(|(n, r)| {
        proptest::collection::vec(0u8..=1, n * r).prop_map(move |bits| {
            let rows: Vec<Vec<u8>> = bits.chunks(r).map(<[u8]>::to_vec).collect();
            BinaryMatrix::from_rows(&rows).unwrap()
        })
    })
}

/// Quantized reals (multiples of 1/2) keep every sum exact in f64, plus an
/// occasional bottom entry.
fn trop_matrix(n: usize, r: usize) -> impl Strategy<Value = TropMatrix> {
    proptest::collection::vec(
        prop_oneof![
            9 => (-16i32..=16).prop_map(|v| TropValue::finite(v as f64 * 0.5)),
            1 => Just(TropValue::BOTTOM),
        ],
        n * r,
    )
    .prop_map(move |entries| {
        let rows: Vec<Vec<TropValue>> = entries.chunks(r).map(<[TropValue]>::to_vec).collect();
        TropMatrix::from_rows(&rows).unwrap()
    })
}

fn perm_pair(x: &BinaryMatrix) -> impl Strategy<Value = PermPair> {
    let rows: Vec<usize> = (0..x.nrows()).collect();
    let cols: Vec<usize> = (0..x.ncols()).collect();
    (Just(rows).prop_shuffle(), Just(cols).prop_shuffle()).prop_map(|(r, c)| PermPair {
        rows: Permutation::new(r).unwrap(),
        cols: Permutation::new(c).unwrap(),
    })
}

proptest! {
    #[test]
    fn parse_display_round_trip(x in binary_matrix(6, 5)) {
        let again: BinaryMatrix = x.to_string().parse().unwrap();
        prop_assert_eq!(x, again);
    }

    #[test]
    fn masked_block_agrees_with_deleted_block(x in binary_matrix(6, 3)) {
        for j in 0..x.ncols() {
            let masked = x.block_masked(j).unwrap();
            let block = x.block(j).unwrap();
            let keep_cols: Vec<usize> = (0..x.ncols()).filter(|&c| c != j).collect();
            let rebuilt = masked.selecting_rows(&block.rows).selecting_columns(&keep_cols);
            prop_assert_eq!(rebuilt, block.matrix);
        }
    }

    #[test]
    fn saturation_is_monotone(x in binary_matrix(6, 4), mask in 0usize..64) {
        let t: Vec<usize> = (0..x.nrows()).filter(|&i| mask >> i & 1 == 1).collect();
        if transmat::bipartite::saturates(&x, &t).unwrap() {
            for drop in 0..t.len() {
                let s: Vec<usize> =
                    t.iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, &v)| v).collect();
                prop_assert!(transmat::bipartite::saturates(&x, &s).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Viability and maximality are properties of the matroid, not of the
    // labeling, so permutations cannot change the verdicts.
    #[test]
    fn permutation_preserves_viability_and_maximality(
        (x, p) in binary_matrix(6, 3).prop_flat_map(|x| {
            let pp = perm_pair(&x);
            (Just(x), pp)
        })
    ) {
        let y = x.permute(&p).unwrap();
        prop_assert_eq!(maximal::is_viable(&x), maximal::is_viable(&y));
        let (vx, _) = maximal::is_maximal(&x, MaximalityMethod::Fixpoint).unwrap();
        let (vy, _) = maximal::is_maximal(&y, MaximalityMethod::Fixpoint).unwrap();
        prop_assert_eq!(vx, vy);
    }

    #[test]
    fn gen_det_matches_oracle_on_reals(t in trop_matrix(4, 3)) {
        let fast = tropical::gen_trop_det(&t).unwrap();
        let brute = oracle::brute_gen_det(&t).unwrap();
        prop_assert_eq!(fast.value, brute.value);
        prop_assert_eq!(fast.multiplicity, brute.multiplicity);
        prop_assert_eq!(fast.witnesses, brute.witnesses);
    }

    #[test]
    fn trop_rank_transpose_invariant_on_reals(t in trop_matrix(4, 4)) {
        prop_assert_eq!(
            tropical::trop_rank(&t).unwrap(),
            tropical::trop_rank(&t.transpose()).unwrap()
        );
    }

    #[test]
    fn maximalize_monotone_and_idempotent(x in binary_matrix(7, 3)) {
        if maximal::is_viable(&x) {
            let (once, _) = maximal::maximalize(&x).unwrap();
            prop_assert!(x.entrywise_le(&once));
            prop_assert!(maximal::is_viable(&once));
            let (twice, _) = maximal::maximalize(&once).unwrap();
            prop_assert_eq!(once, twice);
        }
    }
}
