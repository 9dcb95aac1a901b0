//! Exact counting of `k`-edge paths and `m`-set `k`-packings.
//!
//! Both problems split a structure into two halves with disjoint supports
//! and join the halves with a disjoint sum, evaluated by inclusion–exclusion
//! over trimmed superset sums ([`disjoint_sum`]). Each problem ships several
//! interchangeable backends plus brute-force oracles:
//!
//! * [`paths`]: subset dynamic programming, inclusion–exclusion over walks,
//!   meet-in-the-middle, and a polynomial-space meet-in-the-middle.
//! * [`packings`]: the same four backends for uniform set families, with
//!   matchings as the `m = 2` special case.
//!
//! All arithmetic is exact ([`CountValue`] is an arbitrary-precision
//! integer).
//!
//! ```
//! use pathpack::{count_packings, count_paths, Graph, PackingAlgo, PathAlgo, UniformSetFamily};
//!
//! let g = Graph::complete(6)?;
//! assert_eq!(count_paths(&g, 4, PathAlgo::Mitm)?.count, 360.into());
//!
//! let k4 = UniformSetFamily::complete(4, 2)?;
//! assert_eq!(count_packings(&k4, 2, PackingAlgo::MitmLowmem)?.count, 3.into());
//! # Ok::<(), pathpack::CountError>(())
//! ```

pub mod binomial;
pub mod cli;
pub mod disjoint_sum;
pub mod error;
pub mod lower_set;
pub mod oracles;
pub mod packings;
pub mod par;
pub mod paths;
mod reversed;
pub mod subset;
pub mod weighted;

pub use binomial::{binom, binsum};
pub use disjoint_sum::{
    disjoint_sum, disjoint_sum_counted, disjoint_sum_naive, superset_sum_trimmed, OpCounter,
    TrimmedTransform,
};
pub use error::{CountError, Result};
pub use lower_set::{enumerate_lower_set, LowerSetIndex};
pub use packings::{count_packings, PackingAlgo, UniformSetFamily};
pub use paths::{count_paths, Graph, PathAlgo};
pub use subset::{SubsetMask, Universe};
pub use weighted::WeightedFamily;

/// Exact signed integer used for every count.
pub type CountValue = num_bigint::BigInt;

/// A count together with the work it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measured {
    pub count: CountValue,
    pub ops: OpCounter,
    /// Largest number of ring elements held in tables at one time by a
    /// single worker.
    pub peak_table_entries: u64,
}

impl Measured {
    pub(crate) fn plain(count: CountValue) -> Self {
        Measured {
            count,
            ops: OpCounter::new(),
            peak_table_entries: 0,
        }
    }
}
