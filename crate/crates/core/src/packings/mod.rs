//! Counting `k`-packings in families of `m`-element sets.

mod count;
mod profile;

pub use count::{
    count_matchings, count_packings, count_packings_dp, count_packings_ie, count_packings_mitm,
    count_packings_mitm_lowmem, lowmem_run, lowmem_triplet_count, LowmemRun, PackingAlgo,
};
pub use profile::{packing_profile_dp, packing_profile_ie, subfamily_count, PackingProfile};

use std::collections::HashSet;

use crate::error::{CountError, Result};
use crate::subset::{FixedSizeSubsets, SubsetMask, Universe};

/// A family of distinct `m`-element subsets of a universe, `m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformSetFamily {
    universe: Universe,
    member_size: usize,
    members: Vec<SubsetMask>,
}

impl UniformSetFamily {
    pub fn new(universe: Universe, member_size: usize, members: Vec<SubsetMask>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(members.len());
        for (index, &f) in members.iter().enumerate() {
            universe.check(f)?;
            if f.len() != member_size || member_size == 0 {
                return Err(CountError::NonUniformMember {
                    index,
                    size: f.len(),
                    expected: member_size,
                });
            }
            if !seen.insert(f) {
                return Err(CountError::DuplicateMember { index });
            }
        }
        Ok(UniformSetFamily {
            universe,
            member_size,
            members,
        })
    }

    /// Every `m`-subset of an `n`-element universe.
    pub fn complete(n: usize, m: usize) -> Result<Self> {
        UniformSetFamily::new(Universe::new(n)?, m, FixedSizeSubsets::new(n, m).collect())
    }

    #[inline]
    pub fn universe(&self) -> Universe {
        self.universe
    }

    #[inline]
    pub fn member_size(&self) -> usize {
        self.member_size
    }

    #[inline]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The family with element `e` renamed to `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let members = self
            .members
            .iter()
            .map(|f| SubsetMask::from_elements(f.elements().map(|e| perm[e])))
            .collect();
        UniformSetFamily::new(self.universe, self.member_size, members)
    }
}
