//! Dense ranking of the lower set `{S : |S| <= r}`.
//!
//! Sets are ordered by cardinality first and colexicographically within a
//! cardinality class. The colex rank of `{e_0 < e_1 < ... < e_{s-1}}` inside
//! its class is `C(e_0, 1) + C(e_1, 2) + ... + C(e_{s-1}, s)`, so ranking
//! costs one table lookup per element.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::{binom_small, binsum_small};
use crate::disjoint_sum::OpCounter;
use crate::error::{CountError, Result};
use crate::subset::{FixedSizeSubsets, SubsetMask, Universe};
use crate::CountValue;

/// Rank of `s` among the subsets of the same size, in colex order.
#[inline]
pub fn colex_rank(s: SubsetMask) -> usize {
    s.elements()
        .enumerate()
        .map(|(i, e)| binom_small(e, i + 1) as usize)
        .sum()
}

/// Inverse of [`colex_rank`] for `size`-element subsets of an `n`-element
/// universe.
pub fn colex_unrank(n: usize, size: usize, mut rank: usize) -> SubsetMask {
    let mut out = 0u64;
    let mut hi = n;
    for i in (1..=size).rev() {
        // Largest e < hi with C(e, i) <= rank.
        let mut e = hi - 1;
        while binom_small(e, i) as usize > rank {
            e -= 1;
        }
        out |= 1u64 << e;
        rank -= binom_small(e, i) as usize;
        hi = e;
    }
    SubsetMask(out)
}

/// Bijection between `{S ⊆ U : |S| <= max_size}` and `0..len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerSetIndex {
    universe: Universe,
    max_size: usize,
    /// `offsets[s]` is the rank of the first `s`-element set; the final entry
    /// is the total length.
    offsets: Vec<usize>,
}

impl LowerSetIndex {
    pub fn new(universe: Universe, max_size: usize) -> Result<Self> {
        let n = universe.len();
        let max_size = max_size.min(n);
        let total = binsum_small(n, max_size);
        if total > (isize::MAX as u128) {
            return Err(CountError::OverBudget {
                required: total,
                budget: isize::MAX as u128,
            });
        }
        let mut offsets = Vec::with_capacity(max_size + 2);
        let mut acc = 0usize;
        for s in 0..=max_size {
            offsets.push(acc);
            acc += binom_small(n, s) as usize;
        }
        offsets.push(acc);
        Ok(LowerSetIndex {
            universe,
            max_size,
            offsets,
        })
    }

    #[inline]
    pub fn universe(&self) -> Universe {
        self.universe
    }

    #[inline]
    pub fn max_size(&self) -> usize {
        self.max_size
    }

    /// Number of sets in the lower set, `binsum(n, max_size)`.
    #[inline]
    pub fn len(&self) -> usize {
        self.offsets[self.max_size + 1]
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// First rank of the `size`-element class.
    #[inline]
    pub fn class_offset(&self, size: usize) -> usize {
        self.offsets[size]
    }

    pub fn rank(&self, s: SubsetMask) -> Result<usize> {
        self.universe.check(s)?;
        if s.len() > self.max_size {
            return Err(CountError::SetTooLarge {
                size: s.len(),
                max: self.max_size,
            });
        }
        Ok(self.rank_unchecked(s))
    }

    /// Rank without validation; `s` must be in the lower set.
    #[inline]
    pub fn rank_unchecked(&self, s: SubsetMask) -> usize {
        self.offsets[s.len()] + colex_rank(s)
    }

    pub fn unrank(&self, rank: usize) -> SubsetMask {
        assert!(rank < self.len(), "rank {rank} outside lower set");
        let size = self.offsets.partition_point(|&o| o <= rank) - 1;
        colex_unrank(self.universe.len(), size, rank - self.offsets[size])
    }

    /// Members of the lower set in rank order.
    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        let n = self.universe.len();
        (0..=self.max_size).flat_map(move |s| FixedSizeSubsets::new(n, s))
    }
}

/// Every subset of size at most `r`, each once, in rank order.
pub fn enumerate_lower_set(universe: Universe, r: usize) -> Vec<SubsetMask> {
    let n = universe.len();
    (0..=r.min(n)).flat_map(|s| FixedSizeSubsets::new(n, s)).collect()
}

/// `Σ_{Y ⊆ S} (-1)^{|S \ Y|} table[Y]` for `S = {elems}`, with ranks built
/// incrementally while the subsets are enumerated.
pub(crate) fn signed_subset_sum(
    elems: &[usize],
    index: &LowerSetIndex,
    table: &[CountValue],
    counter: &mut OpCounter,
) -> CountValue {
    fn walk(
        elems: &[usize],
        pos: usize,
        chosen: usize,
        local: usize,
        index: &LowerSetIndex,
        table: &[CountValue],
        acc: &mut CountValue,
    ) {
        if pos == elems.len() {
            let w = &table[index.class_offset(chosen) + local];
            if (elems.len() - chosen).is_multiple_of(2) {
                *acc += w;
            } else {
                *acc -= w;
            }
            return;
        }
        walk(elems, pos + 1, chosen, local, index, table, acc);
        let local = local + binom_small(elems[pos], chosen + 1) as usize;
        walk(elems, pos + 1, chosen + 1, local, index, table, acc);
    }
    let mut acc = BigInt::zero();
    walk(elems, 0, 0, 0, index, table, &mut acc);
    counter.ring(1u64 << elems.len());
    counter.set(1u64 << elems.len());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: usize) -> Universe {
        Universe::new(n).unwrap()
    }

    #[test]
    fn empty_set_ranks_first() {
        let idx = LowerSetIndex::new(u(5), 3).unwrap();
        assert_eq!(idx.rank(SubsetMask::EMPTY).unwrap(), 0);
        assert_eq!(idx.len(), 1 + 5 + 10 + 10);
    }

    #[test]
    fn tiny_enumerations() {
        let got = enumerate_lower_set(u(3), 1);
        let want: Vec<_> = [0u64, 0b001, 0b010, 0b100].map(SubsetMask).to_vec();
        assert_eq!(got, want);
        assert_eq!(enumerate_lower_set(u(3), 3).len(), 8);
    }

    #[test]
    fn exhaustive_bijection_up_to_12() {
        for n in 0..=12 {
            for r in 0..=n {
                let idx = LowerSetIndex::new(u(n), r).unwrap();
                let sets = enumerate_lower_set(u(n), r);
                assert_eq!(sets.len() as u128, binsum_small(n, r));
                assert_eq!(sets.len(), idx.len());
                let mut seen = vec![false; idx.len()];
                for (i, &s) in sets.iter().enumerate() {
                    let rank = idx.rank(s).unwrap();
                    // enumeration is in rank order
                    assert_eq!(rank, i);
                    assert!(!seen[rank]);
                    seen[rank] = true;
                    assert_eq!(idx.unrank(rank), s);
                }
                assert!(seen.into_iter().all(|b| b));
            }
        }
    }

    #[test]
    fn colex_within_class() {
        // colex: compare the largest differing element
        let idx = LowerSetIndex::new(u(4), 2).unwrap();
        let a = SubsetMask::from_elements([0, 3]);
        let b = SubsetMask::from_elements([1, 2]);
        assert!(idx.rank(b).unwrap() < idx.rank(a).unwrap());
    }

    #[test]
    fn rejects_oversized_and_foreign_sets() {
        let idx = LowerSetIndex::new(u(6), 2).unwrap();
        assert_eq!(
            idx.rank(SubsetMask::from_elements([0, 1, 2])),
            Err(CountError::SetTooLarge { size: 3, max: 2 })
        );
        assert!(matches!(
            idx.rank(SubsetMask::singleton(7)),
            Err(CountError::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn unrank_at_full_width() {
        let idx = LowerSetIndex::new(u(64), 2).unwrap();
        let last = idx.unrank(idx.len() - 1);
        assert_eq!(last, SubsetMask::from_elements([62, 63]));
    }
}
