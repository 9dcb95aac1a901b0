use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::profile::{count_walks, path_profile_ie_counted, path_profiles_dp_counted};
use super::Graph;
use crate::binomial::binom_small;
use crate::disjoint_sum::{disjoint_sum_counted, OpCounter};
use crate::error::{CountError, Result};
use crate::par::map_indices;
use crate::reversed::{pair_count, superset_sum_reversed};
use crate::subset::FixedSizeSubsets;
use crate::{oracles, CountValue, Measured};

/// Backend selector for [`count_paths`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathAlgo {
    Dp,
    Ie,
    Mitm,
    MitmLowmem,
    Brute,
}

impl PathAlgo {
    pub const ALL: [PathAlgo; 5] = [
        PathAlgo::Dp,
        PathAlgo::Ie,
        PathAlgo::Mitm,
        PathAlgo::MitmLowmem,
        PathAlgo::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PathAlgo::Dp => "dp",
            PathAlgo::Ie => "ie",
            PathAlgo::Mitm => "mitm",
            PathAlgo::MitmLowmem => "mitm-lowmem",
            PathAlgo::Brute => "brute",
        }
    }
}

impl fmt::Display for PathAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PathAlgo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        PathAlgo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm '{s}'"))
    }
}

fn check_length(g: &Graph, k: usize) -> Result<()> {
    if k >= g.n() {
        return Err(CountError::PathLengthOutOfRange { k, n: g.n() });
    }
    Ok(())
}

/// Every undirected path is counted once per orientation.
fn halve(directed: CountValue) -> CountValue {
    assert!((&directed % 2u32).is_zero(), "directed path count {directed} is odd");
    directed / 2u32
}

/// Sums per-item results in item order.
fn combine(parts: Vec<Result<(CountValue, OpCounter, u64)>>) -> Result<Measured> {
    let mut count = BigInt::zero();
    let mut ops = OpCounter::new();
    let mut peak = 0;
    for part in parts {
        let (c, o, p) = part?;
        count += c;
        ops += o;
        peak = peak.max(p);
    }
    Ok(Measured {
        count,
        ops,
        peak_table_entries: peak,
    })
}

fn trivial(g: &Graph, k: usize) -> Option<Measured> {
    match k {
        0 => Some(Measured::plain(BigInt::from(g.n()))),
        1 => Some(Measured::plain(BigInt::from(g.edge_count()))),
        _ => None,
    }
}

/// Peak number of table entries the layered dynamic program holds when
/// counting `k`-edge paths on `n` vertices: two consecutive layers of
/// `n·C(n-1, j)` entries.
pub fn dp_peak_entries(n: usize, k: usize) -> u128 {
    let n1 = n.saturating_sub(1);
    (1..=k)
        .map(|j| n as u128 * (binom_small(n1, j - 1) as u128 + binom_small(n1, j) as u128))
        .fold(n as u128, u128::max)
}

/// Number of `(X, Y)` pairs the low-memory backend visits for an even `k`:
/// `n · Σ_{s <= k/2} C(n-1, s)·3^s`.
pub fn lowmem_pair_count(n: usize, k: usize) -> u128 {
    n as u128 * pair_count(n.saturating_sub(1), k / 2)
}

fn dp_measured(g: &Graph, k: usize) -> Result<Measured> {
    check_length(g, k)?;
    if k == 0 {
        return Ok(Measured::plain(BigInt::from(g.n())));
    }
    let mut ops = OpCounter::new();
    let (profiles, peak) = path_profiles_dp_counted(g, k, &mut ops)?;
    let directed: CountValue = profiles.iter().map(|p| p.total()).sum();
    Ok(Measured {
        count: halve(directed),
        ops,
        peak_table_entries: peak,
    })
}

/// Counts `k`-edge paths from the layered profiles `p_k(·, v)`.
pub fn count_paths_dp(g: &Graph, k: usize) -> Result<CountValue> {
    dp_measured(g, k).map(|m| m.count)
}

/// Like [`count_paths_dp`] but refuses to start when the dynamic program
/// would hold more than `budget` table entries.
pub fn count_paths_dp_within(g: &Graph, k: usize, budget: u128) -> Result<Measured> {
    check_length(g, k)?;
    let required = dp_peak_entries(g.n(), k);
    if required > budget {
        return Err(CountError::OverBudget { required, budget });
    }
    dp_measured(g, k)
}

fn ie_measured(g: &Graph, k: usize) -> Result<Measured> {
    check_length(g, k)?;
    if k == 0 {
        return Ok(Measured::plain(BigInt::from(g.n())));
    }
    let parts = map_indices(g.n(), |v| {
        let mut ops = OpCounter::new();
        let (p, peak) = path_profile_ie_counted(g, v, k, &mut ops)?;
        Ok((p.total(), ops, peak))
    });
    let mut m = combine(parts)?;
    m.count = halve(m.count);
    Ok(m)
}

/// Counts `k`-edge paths from inclusion–exclusion profiles `p_k(·, v)`.
pub fn count_paths_ie(g: &Graph, k: usize) -> Result<CountValue> {
    ie_measured(g, k).map(|m| m.count)
}

fn mitm_measured(g: &Graph, k: usize) -> Result<Measured> {
    check_length(g, k)?;
    if let Some(m) = trivial(g, k) {
        return Ok(m);
    }
    let half = k / 2;
    let parts = if k.is_multiple_of(2) {
        // Split at the middle vertex v: both halves are half-edge paths
        // ending at v with disjoint supports in V \ {v}.
        map_indices(g.n(), |v| {
            let mut ops = OpCounter::new();
            let (profile, build_peak) = path_profile_ie_counted(g, v, half, &mut ops)?;
            let fam = profile.to_compressed_family();
            drop(profile);
            let (ds, join_peak) = disjoint_sum_counted(&fam, &fam, half, half, &mut ops)?;
            Ok((ds, ops, build_peak.max(fam.len() as u64 + join_peak)))
        })
    } else {
        // Split at the middle edge uw: the halves are half-edge paths ending
        // at u and at w, keyed by their full supports so that disjointness
        // also separates the two ends.
        let built = map_indices(g.n(), |w| {
            let mut ops = OpCounter::new();
            let (p, peak) = path_profile_ie_counted(g, w, half, &mut ops)?;
            Ok((p.to_support_family(), ops, peak))
        });
        let mut families = Vec::with_capacity(g.n());
        let mut build_ops = OpCounter::new();
        let mut build_peak = 0;
        for b in built {
            let (f, o, p) = b?;
            families.push(f);
            build_ops += o;
            build_peak = build_peak.max(p);
        }
        let stored: u64 = families.iter().map(|f| f.len() as u64).sum();
        let families = &families;
        let mut parts = map_indices(g.n(), |u| {
            let mut ops = OpCounter::new();
            let mut beta = crate::WeightedFamily::new(g.universe());
            for w in g.neighbors(u).elements() {
                beta = beta.plus(&families[w])?;
            }
            let (ds, join_peak) =
                disjoint_sum_counted(&families[u], &beta, half + 1, half + 1, &mut ops)?;
            Ok((ds, ops, stored + beta.len() as u64 + join_peak))
        });
        parts.push(Ok((BigInt::zero(), build_ops, build_peak)));
        parts
    };
    let mut m = combine(parts)?;
    m.count = halve(m.count);
    Ok(m)
}

/// Counts `k`-edge paths by joining two half-length path profiles with a
/// disjoint sum at every middle vertex (even `k`) or middle edge (odd `k`).
pub fn count_paths_mitm(g: &Graph, k: usize) -> Result<CountValue> {
    mitm_measured(g, k).map(|m| m.count)
}

/// `Σ_{S ⊇ x, |S| = half} p_half(S, v)` for `x ⊆ V \ {v}` given in full
/// coordinates, without any profile table.
fn profile_superset_sum(
    g: &Graph,
    v: usize,
    half: usize,
    x: crate::SubsetMask,
    ops: &mut OpCounter,
    pairs: &mut u64,
) -> CountValue {
    let n1 = g.n() - 1;
    let mut walk_ops = 0u64;
    let value = superset_sum_reversed(
        n1,
        half,
        x.compress(v),
        |y| {
            walk_ops += (half * y.len() * y.len()) as u64;
            count_walks(g, v, y.decompress(v), half)
        },
        ops,
        pairs,
    );
    ops.ring(walk_ops);
    value
}

pub(crate) fn lowmem_measured_with_pairs(g: &Graph, k: usize) -> Result<(Measured, u64)> {
    check_length(g, k)?;
    if let Some(m) = trivial(g, k) {
        return Ok((m, 0));
    }
    let n = g.n();
    let half = k / 2;
    // Walk buffers: two vectors over the vertices.
    let working = 2 * n as u64;
    let parts: Vec<Result<(CountValue, OpCounter, u64, u64)>> = if k.is_multiple_of(2) {
        map_indices(n, |v| {
            let mut ops = OpCounter::new();
            let mut pairs = 0u64;
            let mut total = BigInt::zero();
            for size in 0..=half {
                for x in FixedSizeSubsets::new(n - 1, size) {
                    let a = profile_superset_sum(g, v, half, x.decompress(v), &mut ops, &mut pairs);
                    let sq = &a * &a;
                    ops.ring(2);
                    if size % 2 == 0 {
                        total += sq;
                    } else {
                        total -= sq;
                    }
                }
            }
            Ok((total, ops, working, pairs))
        })
    } else {
        // α̂_u(X) = Σ_{S ⊇ X \ {u}} p_half(S, u) for supports that include u.
        let hat = |u: usize, x: crate::SubsetMask, ops: &mut OpCounter, pairs: &mut u64| {
            let rest = x.without(u);
            if rest.len() > half {
                BigInt::zero()
            } else {
                profile_superset_sum(g, u, half, rest, ops, pairs)
            }
        };
        map_indices(n, |u| {
            let mut ops = OpCounter::new();
            let mut pairs = 0u64;
            let mut total = BigInt::zero();
            for size in 0..=half + 1 {
                for x in FixedSizeSubsets::new(n, size) {
                    let a = hat(u, x, &mut ops, &mut pairs);
                    if a.is_zero() {
                        continue;
                    }
                    let mut b = BigInt::zero();
                    for w in g.neighbors(u).elements() {
                        b += hat(w, x, &mut ops, &mut pairs);
                        ops.ring(1);
                    }
                    let prod = a * b;
                    ops.ring(2);
                    if size % 2 == 0 {
                        total += prod;
                    } else {
                        total -= prod;
                    }
                }
            }
            Ok((total, ops, working + 2, pairs))
        })
    };
    let mut count = BigInt::zero();
    let mut ops = OpCounter::new();
    let mut peak = 0;
    let mut pairs = 0;
    for part in parts {
        let (c, o, p, q) = part?;
        count += c;
        ops += o;
        peak = peak.max(p);
        pairs += q;
    }
    Ok((
        Measured {
            count: halve(count),
            ops,
            peak_table_entries: peak,
        },
        pairs,
    ))
}

/// Meet-in-the-middle counting in polynomial space: the superset sums of
/// each half-length profile are evaluated on demand from walk counts.
pub fn count_paths_mitm_lowmem(g: &Graph, k: usize) -> Result<CountValue> {
    lowmem_measured_with_pairs(g, k).map(|(m, _)| m.count)
}

/// Counts `k`-edge paths with the selected backend, reporting work done.
pub fn count_paths(g: &Graph, k: usize, algo: PathAlgo) -> Result<Measured> {
    match algo {
        PathAlgo::Dp => dp_measured(g, k),
        PathAlgo::Ie => ie_measured(g, k),
        PathAlgo::Mitm => mitm_measured(g, k),
        PathAlgo::MitmLowmem => lowmem_measured_with_pairs(g, k).map(|(m, _)| m),
        PathAlgo::Brute => {
            check_length(g, k)?;
            oracles::count_paths_brute(g, k).map(|c| Measured {
                count: c,
                ops: OpCounter::new(),
                peak_table_entries: g.n() as u64,
            })
        }
    }
}
