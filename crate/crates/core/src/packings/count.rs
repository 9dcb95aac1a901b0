use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::profile::{check_fits, contained, packing_profile_dp_counted, packing_profile_ie_counted};
use super::UniformSetFamily;
use crate::binomial::{binom_small, factorial};
use crate::disjoint_sum::{disjoint_sum_counted, OpCounter};
use crate::error::{CountError, Result};
use crate::lower_set::LowerSetIndex;
use crate::par::map_indices;
use crate::reversed::superset_sum_reversed;
use crate::{oracles, CountValue, Measured};

/// Backend selector for [`count_packings`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PackingAlgo {
    Dp,
    Ie,
    Mitm,
    MitmLowmem,
    Brute,
}

impl PackingAlgo {
    pub const ALL: [PackingAlgo; 5] = [
        PackingAlgo::Dp,
        PackingAlgo::Ie,
        PackingAlgo::Mitm,
        PackingAlgo::MitmLowmem,
        PackingAlgo::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PackingAlgo::Dp => "dp",
            PackingAlgo::Ie => "ie",
            PackingAlgo::Mitm => "mitm",
            PackingAlgo::MitmLowmem => "mitm-lowmem",
            PackingAlgo::Brute => "brute",
        }
    }
}

impl fmt::Display for PackingAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PackingAlgo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        PackingAlgo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm '{s}'"))
    }
}

/// Ordered packings to unordered ones.
fn unorder(ordered: CountValue, k: usize) -> CountValue {
    let kf = factorial(k as u64);
    assert!(
        (&ordered % &kf).is_zero(),
        "ordered packing count {ordered} is not divisible by {k}!"
    );
    ordered / kf
}

fn from_profile(
    fam: &UniformSetFamily,
    k: usize,
    build: fn(&UniformSetFamily, usize, &mut OpCounter) -> Result<(super::PackingProfile, u64)>,
) -> Result<Measured> {
    check_fits(fam, k)?;
    let mut ops = OpCounter::new();
    let (p, peak) = build(fam, k, &mut ops)?;
    Ok(Measured {
        count: unorder(p.total(), k),
        ops,
        peak_table_entries: peak,
    })
}

/// Counts `k`-packings as `Σ_S π_k(S) / k!` with dynamic-programming
/// profiles.
pub fn count_packings_dp(fam: &UniformSetFamily, k: usize) -> Result<CountValue> {
    from_profile(fam, k, packing_profile_dp_counted).map(|m| m.count)
}

/// Counts `k`-packings as `Σ_S π_k(S) / k!` with inclusion–exclusion
/// profiles.
pub fn count_packings_ie(fam: &UniformSetFamily, k: usize) -> Result<CountValue> {
    from_profile(fam, k, packing_profile_ie_counted).map(|m| m.count)
}

fn mitm_measured(fam: &UniformSetFamily, k: usize) -> Result<Measured> {
    check_fits(fam, k)?;
    if k == 0 {
        return Ok(Measured::plain(BigInt::one()));
    }
    let m = fam.member_size();
    let (major, minor) = (k.div_ceil(2), k / 2);
    let mut ops = OpCounter::new();
    let (p_major, peak_major) = packing_profile_dp_counted(fam, major, &mut ops)?;
    let alpha = p_major.to_family();
    drop(p_major);
    let (beta, peak_minor) = if minor == major {
        (alpha.clone(), 0)
    } else {
        let (p, peak) = packing_profile_dp_counted(fam, minor, &mut ops)?;
        (p.to_family(), peak)
    };
    // Ordered pairs of ordered halves with disjoint supports are exactly the
    // ordered k-packings.
    let (ordered, join_peak) = disjoint_sum_counted(&alpha, &beta, m * major, m * minor, &mut ops)?;
    let held = (alpha.len() + beta.len()) as u64;
    Ok(Measured {
        count: unorder(ordered, k),
        ops,
        peak_table_entries: peak_major.max(peak_minor + alpha.len() as u64).max(held + join_peak),
    })
}

/// Counts `k`-packings by joining the ordered `⌈k/2⌉`- and `⌊k/2⌋`-packing
/// profiles with one disjoint sum.
pub fn count_packings_mitm(fam: &UniformSetFamily, k: usize) -> Result<CountValue> {
    mitm_measured(fam, k).map(|m| m.count)
}

/// `Σ_{S ⊇ x, |S| = m·packs} π_packs(S)` with member counts recomputed for
/// every `Y`.
fn profile_superset_sum(
    fam: &UniformSetFamily,
    packs: usize,
    x: crate::SubsetMask,
    ops: &mut OpCounter,
    pairs: &mut u64,
    triplets: &mut u64,
) -> CountValue {
    let n = fam.universe().len();
    let r = fam.member_size() * packs;
    let mut scans = 0u64;
    let value = superset_sum_reversed(
        n,
        r,
        x,
        |y| {
            if packs == 0 {
                return BigInt::one();
            }
            scans += fam.len() as u64;
            let c = contained(fam, y);
            *triplets += c;
            if c == 0 {
                BigInt::zero()
            } else {
                Pow::pow(BigInt::from(c), packs)
            }
        },
        ops,
        pairs,
    );
    ops.set(scans);
    value
}

/// Number of `(X, Y, F)` triplets with `|X ∪ Y| <= r = m·k/2` and
/// `F ⊆ Y`, `|F| = m`, when the family holds every `m`-subset:
/// `Σ_{s=m}^{r} C(n, s)·C(s, m)·2^m·3^{s-m}`.
pub fn lowmem_triplet_count(n: usize, m: usize, k: usize) -> u128 {
    let r = m * (k / 2);
    (m..=r.min(n))
        .map(|s| {
            binom_small(n, s) as u128
                * binom_small(s, m) as u128
                * 2u128.pow(m as u32)
                * 3u128.pow((s - m) as u32)
        })
        .sum()
}

/// A polynomial-space packing run with its enumeration tallies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowmemRun {
    pub measured: Measured,
    /// `(X, Y)` pairs visited while evaluating superset sums.
    pub pairs: u64,
    /// `(X, Y, F)` triplets with `F ⊆ Y` touched while counting members.
    pub triplets: u64,
}

/// Polynomial-space packing count, keeping the enumeration tallies.
pub fn lowmem_run(fam: &UniformSetFamily, k: usize) -> Result<LowmemRun> {
    check_fits(fam, k)?;
    let n = fam.universe().len();
    let m = fam.member_size();
    let (major, minor) = (k.div_ceil(2), k / 2);
    // The alternating sum runs over the lower set of the smaller half.
    let outer = LowerSetIndex::new(fam.universe(), m * minor)?;
    let blocks = n.max(1).min(outer.len());
    let per_block = outer.len().div_ceil(blocks);
    let outer = &outer;
    let parts = map_indices(blocks, |b| {
        let mut ops = OpCounter::new();
        let (mut pairs, mut triplets) = (0u64, 0u64);
        let mut total = BigInt::zero();
        let lo = b * per_block;
        let hi = ((b + 1) * per_block).min(outer.len());
        for rank in lo..hi {
            let x = outer.unrank(rank);
            let a = profile_superset_sum(fam, major, x, &mut ops, &mut pairs, &mut triplets);
            let prod = if major == minor {
                &a * &a
            } else {
                let b = profile_superset_sum(fam, minor, x, &mut ops, &mut pairs, &mut triplets);
                a * b
            };
            ops.ring(2);
            if x.len() % 2 == 0 {
                total += prod;
            } else {
                total -= prod;
            }
        }
        (total, ops, pairs, triplets)
    });
    let mut ordered = BigInt::zero();
    let mut ops = OpCounter::new();
    let (mut pairs, mut triplets) = (0, 0);
    for (t, o, p, q) in parts {
        ordered += t;
        ops += o;
        pairs += p;
        triplets += q;
    }
    Ok(LowmemRun {
        measured: Measured {
            count: unorder(ordered, k),
            ops,
            // one partial total per block plus the running accumulators
            peak_table_entries: blocks as u64 + 3,
        },
        pairs,
        triplets,
    })
}

/// Meet-in-the-middle counting in polynomial space: superset sums of the
/// half-packing profiles are evaluated on demand from member counts.
pub fn count_packings_mitm_lowmem(fam: &UniformSetFamily, k: usize) -> Result<CountValue> {
    lowmem_run(fam, k).map(|r| r.measured.count)
}

/// Number of `t`-matchings in a family of 2-element sets (edges).
///
/// For fixed `m` the enumeration cost is `O*(3^{mt/2}·C(n, mt/2))`, so with
/// `m = 2` the polynomial-space evaluation runs in `O*(3^t·C(n, t))`.
pub fn count_matchings(fam: &UniformSetFamily, t: usize) -> Result<CountValue> {
    if fam.member_size() != 2 {
        return Err(CountError::NotPairs(fam.member_size()));
    }
    count_packings_mitm_lowmem(fam, t)
}

/// Counts `k`-packings with the selected backend, reporting work done.
pub fn count_packings(fam: &UniformSetFamily, k: usize, algo: PackingAlgo) -> Result<Measured> {
    match algo {
        PackingAlgo::Dp => from_profile(fam, k, packing_profile_dp_counted),
        PackingAlgo::Ie => from_profile(fam, k, packing_profile_ie_counted),
        PackingAlgo::Mitm => mitm_measured(fam, k),
        PackingAlgo::MitmLowmem => lowmem_run(fam, k).map(|r| r.measured),
        PackingAlgo::Brute => {
            check_fits(fam, k)?;
            oracles::count_packings_brute(fam, k).map(|c| Measured {
                count: c,
                ops: OpCounter::new(),
                peak_table_entries: k as u64,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::{SubsetMask, Universe};

    fn s(e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(e.iter().copied())
    }

    fn every(fam: &UniformSetFamily, k: usize) -> Vec<CountValue> {
        PackingAlgo::ALL
            .iter()
            .map(|&a| count_packings(fam, k, a).unwrap().count)
            .collect()
    }

    #[test]
    fn small_known_counts() {
        let k4 = UniformSetFamily::complete(4, 2).unwrap();
        assert_eq!(count_packings_mitm(&k4, 2).unwrap(), BigInt::from(3));
        assert_eq!(count_packings_mitm_lowmem(&k4, 2).unwrap(), BigInt::from(3));
        assert_eq!(count_matchings(&k4, 2).unwrap(), BigInt::from(3));
        let k6 = UniformSetFamily::complete(6, 2).unwrap();
        assert_eq!(count_packings_mitm_lowmem(&k6, 3).unwrap(), BigInt::from(15));
        assert_eq!(count_matchings(&k6, 3).unwrap(), BigInt::from(15));
        let u = Universe::new(4).unwrap();
        let overlap = UniformSetFamily::new(u, 2, vec![s(&[0, 1]), s(&[0, 2])]).unwrap();
        assert!(every(&overlap, 2).iter().all(Zero::is_zero));
        let star = UniformSetFamily::new(u, 2, vec![s(&[0, 1]), s(&[0, 2]), s(&[0, 3])]).unwrap();
        assert_eq!(count_matchings(&star, 2).unwrap(), BigInt::zero());
    }

    #[test]
    fn single_packs_are_members() {
        let fam = UniformSetFamily::complete(7, 3).unwrap();
        assert!(every(&fam, 1).iter().all(|c| *c == BigInt::from(35)));
        assert!(every(&fam, 0).iter().all(|c| *c == BigInt::one()));
    }

    #[test]
    fn matchings_need_pairs() {
        let fam = UniformSetFamily::complete(6, 3).unwrap();
        assert_eq!(count_matchings(&fam, 1).unwrap_err(), CountError::NotPairs(3));
    }

    #[test]
    fn rejects_oversized_packings() {
        let fam = UniformSetFamily::complete(5, 2).unwrap();
        for a in PackingAlgo::ALL {
            assert_eq!(
                count_packings(&fam, 3, a).unwrap_err(),
                CountError::PackingTooLarge { k: 3, m: 2, n: 5 }
            );
        }
    }

    #[test]
    fn triplets_match_enumeration_bound() {
        for (n, m, k) in [(6, 2, 2), (8, 2, 4), (8, 1, 4), (9, 3, 2)] {
            let fam = UniformSetFamily::complete(n, m).unwrap();
            let run = lowmem_run(&fam, k).unwrap();
            let want = lowmem_triplet_count(n, m, k);
            assert_eq!(run.triplets as u128, want, "n={n} m={m} k={k}");
            let r = m * k / 2;
            let crude = 1.5
                * binom_small(n, r) as f64
                * binom_small(r, m) as f64
                * 2f64.powi(m as i32)
                * 3f64.powi((r - m) as i32);
            assert!((want as f64) < crude);
            assert!((want as f64) <= 1.5 * binom_small(n, r) as f64 * 5f64.powi(r as i32));
            assert_eq!(run.pairs as u128, crate::reversed::pair_count(n, r));
        }
    }
}
