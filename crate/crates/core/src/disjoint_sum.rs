//! Sums of `α(A)·β(B)` over disjoint pairs `(A, B)`.
//!
//! For lower-set members `X` the superset sums `α̂(X) = Σ_{A ⊇ X} α(A)` are
//! built one element at a time with
//!
//! ```text
//! α̂_{i-1}(X) = [a_i ∉ X]·α̂_i(X) + [X ∪ {a_i} ∈ ↓A]·α̂_i(X ∪ {a_i})
//! ```
//!
//! starting from `α̂_n = α`, and the disjoint sum is then
//! `Σ_X (-1)^{|X|} α̂(X)·β̂(X)` over the common lower set.
//!
//! Operation accounting: one transform over the lower set `{X : |X| <= r}`
//! of an `n`-element universe performs at most `n·binsum(n, r)` additions,
//! and the final alternating sum performs two ring operations per common
//! lower-set member. A full [`disjoint_sum`] therefore stays within
//! `n·(binsum(n, rA) + binsum(n, rB)) + 2·binsum(n, min(rA, rB))` ring
//! operations, i.e. within the constant `c = 2` of the bound
//! `c·n·(binsum(n, rA) + binsum(n, rB))` whenever `n >= 1`.

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{CountError, Result};
use crate::lower_set::LowerSetIndex;
use crate::subset::{FixedSizeSubsets, SubsetMask};
use crate::weighted::WeightedFamily;
use crate::CountValue;

/// The documented constant in the operation bound of [`disjoint_sum`].
pub const RING_OP_CONSTANT: u64 = 2;

/// Ring and set operation tallies for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub ring_ops: u64,
    pub set_ops: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn ring(&mut self, n: u64) {
        self.ring_ops += n;
    }

    #[inline]
    pub fn set(&mut self, n: u64) {
        self.set_ops += n;
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: OpCounter) {
        self.ring_ops += rhs.ring_ops;
        self.set_ops += rhs.set_ops;
    }
}

/// Superset sums of a weighted family over a lower set, stored by rank.
#[derive(Debug, Clone)]
pub struct TrimmedTransform {
    index: LowerSetIndex,
    values: Vec<CountValue>,
}

impl TrimmedTransform {
    pub fn index(&self) -> &LowerSetIndex {
        &self.index
    }

    pub fn values(&self) -> &[CountValue] {
        &self.values
    }

    /// `α̂(x)`; zero when `x` lies outside the lower set.
    pub fn get(&self, x: SubsetMask) -> CountValue {
        match self.index.rank(x) {
            Ok(r) => self.values[r].clone(),
            Err(_) => BigInt::zero(),
        }
    }
}

/// Computes `α̂(X)` for every `X` with `|X| <= r`, in place over one
/// rank-indexed buffer.
///
/// Each element pass only reads entries of strictly larger cardinality than
/// the ones it writes, so the sweep order within a pass does not matter.
/// Elements are processed from the highest index down, following the
/// recurrence from `i = n` to `i = 1`.
pub fn superset_sum_trimmed(
    alpha: &WeightedFamily,
    r: usize,
    counter: &mut OpCounter,
) -> Result<TrimmedTransform> {
    let index = LowerSetIndex::new(alpha.universe(), r)?;
    let r = index.max_size();
    let mut values = vec![BigInt::zero(); index.len()];
    for (s, w) in alpha.iter() {
        if s.len() > r {
            return Err(CountError::SetTooLarge { size: s.len(), max: r });
        }
        values[index.rank_unchecked(s)] = w.clone();
    }
    let n = index.universe().len();
    for element in (0..n).rev() {
        for size in 0..r {
            let start = index.class_offset(size);
            let split = index.class_offset(size + 1);
            let (lo, hi) = values.split_at_mut(split);
            for (local, x) in FixedSizeSubsets::new(n, size).enumerate() {
                if x.contains(element) {
                    continue;
                }
                let up = index.rank_unchecked(x.with(element)) - split;
                lo[start + local] += &hi[up];
                counter.ring(1);
                counter.set(1);
            }
        }
    }
    Ok(TrimmedTransform { index, values })
}

/// `Σ_X (-1)^{|X|} α̂(X)·β̂(X)` over the common prefix of two transforms.
pub(crate) fn alternating_join(
    a: &TrimmedTransform,
    b: &TrimmedTransform,
    counter: &mut OpCounter,
) -> CountValue {
    let common = a.index.max_size().min(b.index.max_size());
    let mut total = BigInt::zero();
    for size in 0..=common {
        let lo = a.index.class_offset(size);
        let hi = a.index.class_offset(size + 1);
        let mut class = BigInt::zero();
        for rank in lo..hi {
            class += &a.values[rank] * &b.values[rank];
        }
        counter.ring(2 * (hi - lo) as u64);
        if size % 2 == 0 {
            total += class;
        } else {
            total -= class;
        }
    }
    total
}

/// The disjoint sum `Σ_{A ∩ B = ∅} α(A)·β(B)`, together with the largest
/// number of ring elements held at once.
pub fn disjoint_sum_counted(
    alpha: &WeightedFamily,
    beta: &WeightedFamily,
    r_alpha: usize,
    r_beta: usize,
    counter: &mut OpCounter,
) -> Result<(CountValue, u64)> {
    if alpha.universe() != beta.universe() {
        return Err(CountError::UniverseMismatch {
            left: alpha.universe().len(),
            right: beta.universe().len(),
        });
    }
    let a = superset_sum_trimmed(alpha, r_alpha, counter)?;
    let b = superset_sum_trimmed(beta, r_beta, counter)?;
    let peak = (a.values.len() + b.values.len()) as u64;
    Ok((alternating_join(&a, &b, counter), peak))
}

/// The disjoint sum `Σ_{A ∩ B = ∅} α(A)·β(B)`, where every member of `alpha`
/// has at most `r_alpha` elements and every member of `beta` at most
/// `r_beta`.
pub fn disjoint_sum(
    alpha: &WeightedFamily,
    beta: &WeightedFamily,
    r_alpha: usize,
    r_beta: usize,
) -> Result<CountValue> {
    let mut counter = OpCounter::new();
    disjoint_sum_counted(alpha, beta, r_alpha, r_beta, &mut counter).map(|(v, _)| v)
}

/// Quadratic reference: every pair is tested for disjointness.
pub fn disjoint_sum_naive(alpha: &WeightedFamily, beta: &WeightedFamily) -> CountValue {
    let mut total = BigInt::zero();
    for (a, wa) in alpha.iter() {
        for (b, wb) in beta.iter() {
            if a.is_disjoint(b) {
                total += wa * wb;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Universe;

    fn fam(n: usize, entries: &[(&[usize], i64)]) -> WeightedFamily {
        WeightedFamily::from_entries(
            Universe::new(n).unwrap(),
            entries
                .iter()
                .map(|(s, w)| (SubsetMask::from_elements(s.iter().copied()), BigInt::from(*w))),
        )
        .unwrap()
    }

    #[test]
    fn transform_of_empty_set_only() {
        let alpha = fam(1, &[(&[], 5)]);
        let t = superset_sum_trimmed(&alpha, 0, &mut OpCounter::new()).unwrap();
        assert_eq!(t.values(), &[BigInt::from(5)]);
    }

    #[test]
    fn transform_of_two_singletons() {
        let alpha = fam(2, &[(&[0], 1), (&[1], 1)]);
        let t = superset_sum_trimmed(&alpha, 1, &mut OpCounter::new()).unwrap();
        assert_eq!(t.get(SubsetMask::EMPTY), BigInt::from(2));
        assert_eq!(t.get(SubsetMask::singleton(0)), BigInt::from(1));
        assert_eq!(t.get(SubsetMask::singleton(1)), BigInt::from(1));
    }

    #[test]
    fn transform_rejects_large_members() {
        let alpha = fam(3, &[(&[0, 1], 1)]);
        assert_eq!(
            superset_sum_trimmed(&alpha, 1, &mut OpCounter::new()).unwrap_err(),
            CountError::SetTooLarge { size: 2, max: 1 }
        );
    }

    #[test]
    fn small_disjoint_sums() {
        let e = fam(1, &[(&[], 1)]);
        assert_eq!(disjoint_sum(&e, &e, 0, 0).unwrap(), BigInt::from(1));
        assert_eq!(disjoint_sum_naive(&e, &e), BigInt::from(1));

        let s = fam(2, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(disjoint_sum(&s, &s, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(disjoint_sum_naive(&s, &s), BigInt::from(2));

        let p = fam(2, &[(&[0, 1], 3)]);
        assert_eq!(disjoint_sum(&p, &p, 2, 2).unwrap(), BigInt::zero());
        assert_eq!(disjoint_sum_naive(&p, &p), BigInt::zero());

        let empty = fam(2, &[]);
        assert_eq!(disjoint_sum_naive(&empty, &s), BigInt::zero());
        assert_eq!(disjoint_sum(&empty, &s, 0, 1).unwrap(), BigInt::zero());
    }

    #[test]
    fn mismatched_universes_rejected() {
        let a = fam(2, &[(&[0], 1)]);
        let b = fam(3, &[(&[0], 1)]);
        assert_eq!(
            disjoint_sum(&a, &b, 1, 1).unwrap_err(),
            CountError::UniverseMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn unequal_radii() {
        let a = fam(4, &[(&[0, 1, 2], 2), (&[3], 1)]);
        let b = fam(4, &[(&[3], 5), (&[0], 7)]);
        // {0,1,2}×{3} -> 10 ; {3}×{0} -> 7
        assert_eq!(disjoint_sum(&a, &b, 3, 1).unwrap(), BigInt::from(17));
        assert_eq!(disjoint_sum(&b, &a, 1, 3).unwrap(), BigInt::from(17));
    }

    #[test]
    fn ring_ops_within_bound() {
        let n = 8;
        let u = Universe::new(n).unwrap();
        let alpha = WeightedFamily::from_entries(
            u,
            FixedSizeSubsets::new(n, 3).map(|s| (s, BigInt::from(1))),
        )
        .unwrap();
        let mut c = OpCounter::new();
        disjoint_sum_counted(&alpha, &alpha, 3, 3, &mut c).unwrap();
        let b = crate::binomial::binsum_small(n, 3) as u64;
        assert!(c.ring_ops <= RING_OP_CONSTANT * n as u64 * 2 * b);
        assert!(c.ring_ops > 0);
    }
}
