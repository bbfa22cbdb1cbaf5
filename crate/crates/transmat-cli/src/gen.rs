//! Seeded random matrix generation for the `random` verb.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use transmat::BinaryMatrix;

/// Each entry is independently 1 with probability `density`; entries are
/// drawn row-major from a ChaCha stream, so a fixed seed reproduces the
/// matrix across runs and platforms.
pub fn random_matrix(n: usize, r: usize, seed: u64, density: f64) -> BinaryMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = BinaryMatrix::zeros(n, r);
    for i in 0..n {
        for j in 0..r {
            if rng.random::<f64>() < density {
                x.set(i, j, 1);
            }
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_densities() {
        assert_eq!(random_matrix(3, 2, 1, 0.0), BinaryMatrix::zeros(3, 2));
        assert_eq!(random_matrix(3, 2, 1, 1.0), BinaryMatrix::ones(3, 2));
    }

    #[test]
    fn fixed_seed_reproduces() {
        assert_eq!(random_matrix(5, 4, 99, 0.5), random_matrix(5, 4, 99, 0.5));
    }
}
