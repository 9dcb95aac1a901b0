use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{CountError, Result};
use crate::subset::{SubsetMask, Universe};
use crate::CountValue;

/// A map from subsets of a universe to integer weights. Sets that are not
/// present weigh zero; explicitly stored zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedFamily {
    universe: Universe,
    entries: BTreeMap<SubsetMask, CountValue>,
}

impl WeightedFamily {
    pub fn new(universe: Universe) -> Self {
        WeightedFamily {
            universe,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(universe: Universe, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetMask, CountValue)>,
    {
        let mut fam = WeightedFamily::new(universe);
        for (s, w) in entries {
            fam.add(s, w)?;
        }
        Ok(fam)
    }

    #[inline]
    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Overwrites the weight of `s`.
    pub fn set(&mut self, s: SubsetMask, w: CountValue) -> Result<()> {
        self.universe.check(s)?;
        self.entries.insert(s, w);
        Ok(())
    }

    /// Adds `w` to the weight of `s`.
    pub fn add(&mut self, s: SubsetMask, w: CountValue) -> Result<()> {
        self.universe.check(s)?;
        *self.entries.entry(s).or_insert_with(BigInt::zero) += w;
        Ok(())
    }

    pub fn get(&self, s: SubsetMask) -> CountValue {
        self.entries.get(&s).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &CountValue)> + '_ {
        self.entries.iter().map(|(s, w)| (*s, w))
    }

    /// Number of stored entries, zeros included.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Size of the largest stored set, zero for an empty family.
    pub fn max_member_size(&self) -> usize {
        self.entries.keys().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Pointwise sum of two families on the same universe.
    pub fn plus(&self, other: &WeightedFamily) -> Result<WeightedFamily> {
        if self.universe != other.universe {
            return Err(CountError::UniverseMismatch {
                left: self.universe.len(),
                right: other.universe.len(),
            });
        }
        let mut out = self.clone();
        for (s, w) in other.iter() {
            *out.entries.entry(s).or_insert_with(BigInt::zero) += w;
        }
        Ok(out)
    }
}
