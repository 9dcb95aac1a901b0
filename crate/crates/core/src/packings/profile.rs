//! Packing profiles `π_j(S)`: the number of ordered `j`-packings with
//! support `S`, stored densely over the `(m·j)`-element subsets in colex
//! order.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::UniformSetFamily;
use crate::disjoint_sum::OpCounter;
use crate::error::{CountError, Result};
use crate::lower_set::{colex_rank, signed_subset_sum, LowerSetIndex};
use crate::subset::{FixedSizeSubsets, SubsetMask, Universe};
use crate::weighted::WeightedFamily;
use crate::CountValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingProfile {
    universe: Universe,
    support_size: usize,
    packs: usize,
    values: Vec<CountValue>,
}

impl PackingProfile {
    pub fn pack_count(&self) -> usize {
        self.packs
    }

    /// `m·j`, the size of every support.
    pub fn support_size(&self) -> usize {
        self.support_size
    }

    pub fn values(&self) -> &[CountValue] {
        &self.values
    }

    /// `π_j(s)`; zero unless `|s| = m·j`.
    pub fn get(&self, s: SubsetMask) -> CountValue {
        if s.len() != self.support_size || self.universe.check(s).is_err() {
            return BigInt::zero();
        }
        self.values[colex_rank(s)].clone()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &CountValue)> + '_ {
        FixedSizeSubsets::new(self.universe.len(), self.support_size).zip(self.values.iter())
    }

    /// Number of ordered `j`-packings.
    pub fn total(&self) -> CountValue {
        self.values.iter().sum()
    }

    pub fn to_family(&self) -> WeightedFamily {
        WeightedFamily::from_entries(self.universe, self.iter().map(|(s, w)| (s, w.clone())))
            .expect("profile keys are in range")
    }
}

pub(crate) fn check_fits(fam: &UniformSetFamily, j: usize) -> Result<()> {
    let n = fam.universe().len();
    let m = fam.member_size();
    if m.checked_mul(j).is_none_or(|s| s > n) {
        return Err(CountError::PackingTooLarge { k: j, m, n });
    }
    Ok(())
}

/// Number of members of `fam` contained in `y`.
pub(crate) fn contained(fam: &UniformSetFamily, y: SubsetMask) -> u64 {
    fam.members().iter().filter(|f| f.is_subset_of(y)).count() as u64
}

/// `Σ_{F ⊆ y} [F ∈ fam]`.
pub fn subfamily_count(fam: &UniformSetFamily, y: SubsetMask) -> CountValue {
    BigInt::from(contained(fam, y))
}

pub(crate) fn packing_profile_dp_counted(
    fam: &UniformSetFamily,
    j: usize,
    counter: &mut OpCounter,
) -> Result<(PackingProfile, u64)> {
    check_fits(fam, j)?;
    let n = fam.universe().len();
    let m = fam.member_size();
    let mut layer = vec![BigInt::one()];
    let mut peak = 1u64;
    for packs in 1..=j {
        let next: Vec<CountValue> = FixedSizeSubsets::new(n, m * packs)
            .map(|s| {
                let mut acc = BigInt::zero();
                for &f in fam.members() {
                    counter.set(1);
                    if f.is_subset_of(s) {
                        acc += &layer[colex_rank(s.difference(f))];
                        counter.ring(1);
                    }
                }
                acc
            })
            .collect();
        peak = peak.max((layer.len() + next.len()) as u64);
        layer = next;
    }
    Ok((
        PackingProfile {
            universe: fam.universe(),
            support_size: m * j,
            packs: j,
            values: layer,
        },
        peak,
    ))
}

/// `π_j` by the recurrence `π_j(S) = Σ_{F ⊆ S, F ∈ fam} π_{j-1}(S \ F)`.
pub fn packing_profile_dp(fam: &UniformSetFamily, j: usize) -> Result<PackingProfile> {
    packing_profile_dp_counted(fam, j, &mut OpCounter::new()).map(|(p, _)| p)
}

pub(crate) fn packing_profile_ie_counted(
    fam: &UniformSetFamily,
    j: usize,
    counter: &mut OpCounter,
) -> Result<(PackingProfile, u64)> {
    check_fits(fam, j)?;
    let n = fam.universe().len();
    let support = fam.member_size() * j;
    let index = LowerSetIndex::new(fam.universe(), support)?;
    let table: Vec<CountValue> = index
        .iter()
        .map(|y| {
            counter.set(fam.len() as u64);
            counter.ring(j as u64);
            Pow::pow(BigInt::from(contained(fam, y)), j)
        })
        .collect();
    let mut elems = Vec::with_capacity(support);
    let values: Vec<CountValue> = FixedSizeSubsets::new(n, support)
        .map(|s| {
            elems.clear();
            elems.extend(s.elements());
            signed_subset_sum(&elems, &index, &table, counter)
        })
        .collect();
    let peak = (table.len() + values.len()) as u64;
    Ok((
        PackingProfile {
            universe: fam.universe(),
            support_size: support,
            packs: j,
            values,
        },
        peak,
    ))
}

/// `π_j` by inclusion–exclusion, `π_j(S) = Σ_{Y ⊆ S} (-1)^{|S \ Y|} c(Y)^j`
/// with `c(Y)` the number of members inside `Y`. Uniform member size is what
/// makes this exact.
pub fn packing_profile_ie(fam: &UniformSetFamily, j: usize) -> Result<PackingProfile> {
    packing_profile_ie_counted(fam, j, &mut OpCounter::new()).map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(e.iter().copied())
    }

    #[test]
    fn zero_packs() {
        let fam = UniformSetFamily::complete(4, 2).unwrap();
        for p in [packing_profile_dp(&fam, 0).unwrap(), packing_profile_ie(&fam, 0).unwrap()] {
            assert_eq!(p.values(), &[BigInt::one()]);
            assert_eq!(p.get(SubsetMask::EMPTY), BigInt::one());
        }
    }

    #[test]
    fn k4_pairs() {
        let fam = UniformSetFamily::complete(4, 2).unwrap();
        for p in [packing_profile_dp(&fam, 1).unwrap(), packing_profile_ie(&fam, 1).unwrap()] {
            assert_eq!(p.values().len(), 6);
            assert!(p.values().iter().all(|v| *v == BigInt::one()));
        }
        for p in [packing_profile_dp(&fam, 2).unwrap(), packing_profile_ie(&fam, 2).unwrap()] {
            // three perfect matchings, two orders each
            assert_eq!(p.get(s(&[0, 1, 2, 3])), BigInt::from(6));
        }
    }

    #[test]
    fn single_member_ie() {
        let fam = UniformSetFamily::new(Universe::new(3).unwrap(), 2, vec![s(&[0, 1])]).unwrap();
        let p = packing_profile_ie(&fam, 1).unwrap();
        assert_eq!(p.get(s(&[0, 1])), BigInt::one());
        assert_eq!(p.get(s(&[1, 2])), BigInt::zero());
    }

    #[test]
    fn subfamily_counts() {
        let fam = UniformSetFamily::complete(4, 2).unwrap();
        assert_eq!(subfamily_count(&fam, s(&[0, 1, 2, 3])), BigInt::from(6));
        assert_eq!(subfamily_count(&fam, SubsetMask::EMPTY), BigInt::zero());
        assert_eq!(subfamily_count(&fam, s(&[0, 2, 3])), BigInt::from(3));
    }

    #[test]
    fn oversized_packing_rejected() {
        let fam = UniformSetFamily::complete(5, 2).unwrap();
        assert_eq!(
            packing_profile_dp(&fam, 3).unwrap_err(),
            CountError::PackingTooLarge { k: 3, m: 2, n: 5 }
        );
        assert!(packing_profile_ie(&fam, 3).is_err());
    }
}
