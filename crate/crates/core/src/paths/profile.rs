//! Path profiles `p_j(S, v)`: the number of `j`-edge paths with an end at
//! `v` and support `S ∪ {v}`, for `S ⊆ V \ {v}` with `|S| = j`.
//!
//! Profiles are stored densely in colex order over the universe `V \ {v}`,
//! relabelled to `0..n-1` by [`SubsetMask::compress`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Graph;
use crate::disjoint_sum::OpCounter;
use crate::error::{CountError, Result};
use crate::lower_set::{colex_rank, signed_subset_sum, LowerSetIndex};
use crate::par::map_indices;
use crate::subset::{FixedSizeSubsets, SubsetMask};
use crate::weighted::WeightedFamily;
use crate::CountValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProfile {
    end: usize,
    edges: usize,
    n: usize,
    values: Vec<CountValue>,
}

impl PathProfile {
    pub fn end_vertex(&self) -> usize {
        self.end
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Entries in colex order of the compressed supports.
    pub fn values(&self) -> &[CountValue] {
        &self.values
    }

    /// `p_j(s, v)`; zero unless `s` avoids `v` and has exactly `j` elements.
    pub fn get(&self, s: SubsetMask) -> CountValue {
        if s.contains(self.end) || s.len() != self.edges || s.bits() >> self.n != 0 {
            return BigInt::zero();
        }
        self.values[colex_rank(s.compress(self.end))].clone()
    }

    /// `(S, p_j(S, v))` over every `j`-subset `S` of `V \ {v}`.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &CountValue)> + '_ {
        FixedSizeSubsets::new(self.n.saturating_sub(1), self.edges)
            .zip(self.values.iter())
            .map(move |(s, w)| (s.decompress(self.end), w))
    }

    /// Number of `j`-edge paths ending at `v`.
    pub fn total(&self) -> CountValue {
        self.values.iter().sum()
    }

    /// The profile as a family over the compressed universe `V \ {v}`.
    pub fn to_compressed_family(&self) -> WeightedFamily {
        let universe = crate::Universe::new(self.n.saturating_sub(1)).expect("n <= 64");
        let entries = FixedSizeSubsets::new(universe.len(), self.edges).zip(self.values.iter().cloned());
        WeightedFamily::from_entries(universe, entries).expect("profile keys are in range")
    }

    /// The profile re-keyed to full supports `S ∪ {v}` over `V`.
    pub fn to_support_family(&self) -> WeightedFamily {
        let universe = crate::Universe::new(self.n).expect("n <= 64");
        let entries = self.iter().map(|(s, w)| (s.with(self.end), w.clone()));
        WeightedFamily::from_entries(universe, entries).expect("profile keys are in range")
    }
}

fn check_length(g: &Graph, j: usize) -> Result<()> {
    if j >= g.n() {
        return Err(CountError::PathLengthOutOfRange { k: j, n: g.n() });
    }
    Ok(())
}

fn walks_fast(g: &Graph, v: usize, y: SubsetMask, j: usize) -> Option<u128> {
    let mut cur = [0u128; 64];
    cur[v] = 1;
    let mut support = SubsetMask::singleton(v);
    for _ in 0..j {
        let mut next = [0u128; 64];
        for x in y.elements() {
            let mut s = 0u128;
            for u in g.neighbors(x).intersection(support).elements() {
                s = s.checked_add(cur[u])?;
            }
            next[x] = s;
        }
        cur = next;
        support = y;
    }
    support
        .elements()
        .try_fold(0u128, |acc, x| acc.checked_add(cur[x]))
}

fn walks_exact(g: &Graph, v: usize, y: SubsetMask, j: usize) -> CountValue {
    let mut cur = vec![BigInt::zero(); g.n()];
    cur[v] = BigInt::one();
    let mut support = SubsetMask::singleton(v);
    for _ in 0..j {
        let mut next = vec![BigInt::zero(); g.n()];
        for x in y.elements() {
            for u in g.neighbors(x).intersection(support).elements() {
                next[x] += &cur[u];
            }
        }
        cur = next;
        support = y;
    }
    support.elements().map(|x| &cur[x]).sum()
}

/// `w_j(y, v)`: the number of `j`-edge walks `u_0 u_1 ... u_j` with `u_0 = v`
/// and `u_1, ..., u_j ∈ y`.
pub fn count_walks(g: &Graph, v: usize, y: SubsetMask, j: usize) -> CountValue {
    match walks_fast(g, v, y, j) {
        Some(w) => BigInt::from(w),
        None => walks_exact(g, v, y, j),
    }
}

/// Walk counts `w_j(Y, v)` for every `Y ⊆ V \ {v}` with `|Y| <= j`, by rank
/// over the compressed universe.
fn walk_table(g: &Graph, v: usize, j: usize, counter: &mut OpCounter) -> (LowerSetIndex, Vec<CountValue>) {
    let universe = g.universe().without_one();
    let index = LowerSetIndex::new(universe, j).expect("lower set fits in memory");
    let values = index
        .iter()
        .map(|y| {
            counter.ring((j * y.len() * y.len()) as u64);
            counter.set(1);
            count_walks(g, v, y.decompress(v), j)
        })
        .collect();
    (index, values)
}

/// Inclusion–exclusion profile with its peak table footprint.
pub(crate) fn path_profile_ie_counted(
    g: &Graph,
    v: usize,
    j: usize,
    counter: &mut OpCounter,
) -> Result<(PathProfile, u64)> {
    g.check_vertex(v)?;
    check_length(g, j)?;
    let (index, table) = walk_table(g, v, j, counter);
    let n1 = g.n() - 1;
    let mut elems = Vec::with_capacity(j);
    let values: Vec<CountValue> = FixedSizeSubsets::new(n1, j)
        .map(|s| {
            elems.clear();
            elems.extend(s.elements());
            signed_subset_sum(&elems, &index, &table, counter)
        })
        .collect();
    let peak = (table.len() + values.len()) as u64;
    Ok((
        PathProfile {
            end: v,
            edges: j,
            n: g.n(),
            values,
        },
        peak,
    ))
}

/// `p_j(·, v)` by inclusion–exclusion over walks:
/// `p_j(S, v) = Σ_{Y ⊆ S} (-1)^{|S \ Y|} w_j(Y, v)`.
pub fn path_profile_ie(g: &Graph, v: usize, j: usize) -> Result<PathProfile> {
    path_profile_ie_counted(g, v, j, &mut OpCounter::new()).map(|(p, _)| p)
}

/// Layered profiles `p_j(·, v)` for every end vertex `v`, returned in vertex
/// order.
pub(crate) fn path_profiles_dp_counted(
    g: &Graph,
    j: usize,
    counter: &mut OpCounter,
) -> Result<(Vec<PathProfile>, u64)> {
    check_length(g, j)?;
    let n = g.n();
    let n1 = n - 1;
    let mut layer: Vec<Vec<CountValue>> = vec![vec![BigInt::one()]; n];
    let mut peak = n as u64;
    for edges in 1..=j {
        let prev = &layer;
        let next: Vec<(Vec<CountValue>, OpCounter)> = map_indices(n, |v| {
            let mut ops = OpCounter::new();
            let nbrs = g.neighbors(v);
            let table = FixedSizeSubsets::new(n1, edges)
                .map(|s| {
                    let full = s.decompress(v);
                    let mut acc = BigInt::zero();
                    for u in full.intersection(nbrs).elements() {
                        acc += &prev[u][colex_rank(full.without(u).compress(u))];
                        ops.ring(1);
                        ops.set(1);
                    }
                    acc
                })
                .collect();
            (table, ops)
        });
        let prev_len: usize = layer.iter().map(Vec::len).sum();
        let mut next_len = 0;
        layer = next
            .into_iter()
            .map(|(t, ops)| {
                *counter += ops;
                next_len += t.len();
                t
            })
            .collect();
        peak = peak.max((prev_len + next_len) as u64);
    }
    let profiles = layer
        .into_iter()
        .enumerate()
        .map(|(v, values)| PathProfile {
            end: v,
            edges: j,
            n,
            values,
        })
        .collect();
    Ok((profiles, peak))
}

/// `p_j(·, v)` for every end vertex, by the recurrence
/// `p_j(S, v) = Σ_{u ∈ S, uv ∈ E} p_{j-1}(S \ {u}, u)`.
pub fn path_profiles_dp(g: &Graph, j: usize) -> Result<Vec<PathProfile>> {
    path_profiles_dp_counted(g, j, &mut OpCounter::new()).map(|(p, _)| p)
}

/// `p_j(·, v)` by subset dynamic programming. The layers for all end vertices
/// are computed along the way.
pub fn path_profile_dp(g: &Graph, v: usize, j: usize) -> Result<PathProfile> {
    g.check_vertex(v)?;
    let mut all = path_profiles_dp(g, j)?;
    Ok(all.swap_remove(v))
}
