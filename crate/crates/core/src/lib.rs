//! Exact combinatorics of periodic generalized Dyck (`[g-1,-1]`) and Motzkin
//! (`[g-1,0,-1]`) lattice paths.
//!
//! The crate ties together four views of the same numbers:
//!
//! - [`compositions`]: g-compositions and (1,g)-compositions that label path profiles,
//! - [`coefficients`]: the multiplicities `c_g` and `c_{1,g}` and per-floor path counts,
//! - [`paths`]: a brute-force bridge enumerator used as the ground-truth oracle,
//! - [`exclusion`]: banded exclusion matrices, their secular determinants, partition
//!   functions, cluster coefficients and traces,
//!
//! plus [`hofstadter`], which counts closed square-lattice walks by algebraic area
//! three independent ways. All arithmetic is exact; see [`symbolic`].

pub mod cli;
pub mod coefficients;
pub mod compositions;
mod error;
pub mod exclusion;
pub mod hofstadter;
pub mod json;
pub mod limits;
pub mod paths;
pub mod symbolic;
pub mod verify;

pub use coefficients::{FloorCount, FloorCountTable};
pub use compositions::{GComposition, MixedComposition};
pub use error::{Error, Result};
pub use exclusion::{ExclusionMatrix, SpectralData};
pub use limits::Limits;
pub use paths::{LatticePath, PathKind, PathProfile, Step};
pub use symbolic::{LaurentPolynomial, Ring, TruncatedPowerSeries};
