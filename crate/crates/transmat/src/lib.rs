//! Transversal matroids given as binary matrices.
//!
//! A family `(A_1, .., A_r)` of subsets of `{0, .., n-1}` is stored as the
//! n-by-r biadjacency matrix of its bipartite incidence graph. Partial
//! transversals of the family are exactly the independent sets of the
//! transversal matroid it presents, so rank and independence reduce to
//! maximum bipartite matchings. On top of that kernel the crate computes the
//! unique entrywise-greatest matrix presenting the same matroid
//! ([`maximal::maximalize`]), per-column maximality diagnostics, the complete
//! two-column classification ([`rank2`]), and a max-plus tropical toolbox
//! ([`tropical`]) that ties viability to tropical rank.
//!
//! Every operation is a pure function over immutable values; everything can
//! be called from parallel sweeps without synchronization. Exhaustive
//! brute-force counterparts of the fast paths live in [`oracle`].

pub mod bipartite;
pub mod error;
pub mod matrix;
pub mod matroid;
pub mod maximal;
pub mod oracle;
pub mod rank2;
pub mod tropical;

pub use error::{Error, Result};
pub use matrix::{BinaryMatrix, Block, EquivalenceMode, PermPair, Permutation, Presentation};
pub use maximal::{MaximalityMethod, MaximalityReport};
pub use tropical::{DetResult, TropMatrix, TropValue};
