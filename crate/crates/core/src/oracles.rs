//! Brute-force reference implementations.
//!
//! Nothing here shares code with the counting backends beyond the basic
//! graph, family and mask types. Instance sizes are capped by hard guards.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{CountError, Result};
use crate::packings::UniformSetFamily;
use crate::paths::Graph;
use crate::subset::SubsetMask;
use crate::weighted::WeightedFamily;
use crate::CountValue;

/// Largest graph the path enumerators accept.
pub const MAX_BRUTE_VERTICES: usize = 16;
/// Member-count guard for the packing enumerators (alternatively the
/// universe may have at most [`MAX_BRUTE_VERTICES`] elements).
pub const MAX_BRUTE_MEMBERS: usize = 24;

/// `Σ_{A ⊇ x} α(A)` by scanning every entry.
pub fn superset_sum_naive(alpha: &WeightedFamily, x: SubsetMask) -> CountValue {
    alpha
        .iter()
        .filter(|(a, _)| x.is_subset_of(*a))
        .map(|(_, w)| w)
        .sum()
}

fn path_guard(g: &Graph) -> Result<()> {
    if g.n() > MAX_BRUTE_VERTICES {
        return Err(CountError::GuardExceeded(format!(
            "path enumeration is limited to {MAX_BRUTE_VERTICES} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(())
}

fn packing_guard(fam: &UniformSetFamily) -> Result<()> {
    if fam.len() > MAX_BRUTE_MEMBERS && fam.universe().len() > MAX_BRUTE_VERTICES {
        return Err(CountError::GuardExceeded(format!(
            "packing enumeration needs at most {MAX_BRUTE_MEMBERS} members or at most \
             {MAX_BRUTE_VERTICES} elements, family has {} members over {} elements",
            fam.len(),
            fam.universe().len()
        )));
    }
    Ok(())
}

fn extend_paths(g: &Graph, k: usize, seq: &mut Vec<usize>, seen: u64, visit: &mut dyn FnMut(&[usize])) {
    if seq.len() == k + 1 {
        visit(seq);
        return;
    }
    let last = *seq.last().expect("non-empty");
    let mut next = g.neighbors(last).bits() & !seen;
    while next != 0 {
        let u = next.trailing_zeros() as usize;
        next &= next - 1;
        seq.push(u);
        extend_paths(g, k, seq, seen | (1 << u), visit);
        seq.pop();
    }
}

fn for_each_directed_path(g: &Graph, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut seq = Vec::with_capacity(k + 1);
    for v in 0..g.n() {
        seq.push(v);
        extend_paths(g, k, &mut seq, 1 << v, &mut visit);
        seq.pop();
    }
}

/// Every directed `k`-edge path as a vertex sequence, in lexicographic
/// order.
pub fn enumerate_paths(g: &Graph, k: usize) -> Result<Vec<Vec<usize>>> {
    path_guard(g)?;
    let mut out = Vec::new();
    for_each_directed_path(g, k, |p| out.push(p.to_vec()));
    Ok(out)
}

/// Number of undirected `k`-edge paths by depth-first enumeration.
pub fn count_paths_brute(g: &Graph, k: usize) -> Result<CountValue> {
    path_guard(g)?;
    let mut directed = 0u64;
    for_each_directed_path(g, k, |_| directed += 1);
    if k == 0 {
        return Ok(BigInt::from(directed));
    }
    assert!(directed.is_multiple_of(2));
    Ok(BigInt::from(directed / 2))
}

/// Number of `k`-edge paths with an end at `v`, per support `S ∪ {v}`
/// listed as `(S, count)`.
pub fn paths_ending_at(g: &Graph, v: usize, k: usize) -> Result<Vec<(SubsetMask, u64)>> {
    path_guard(g)?;
    let mut by_support = std::collections::BTreeMap::new();
    let mut seq = vec![v];
    extend_paths(g, k, &mut seq, 1 << v, &mut |p: &[usize]| {
        let s = SubsetMask::from_elements(p[1..].iter().copied());
        *by_support.entry(s).or_insert(0u64) += 1;
    });
    Ok(by_support.into_iter().collect())
}

fn extend_packings(
    members: &[SubsetMask],
    start: usize,
    k: usize,
    used: SubsetMask,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    for i in start..members.len() {
        if members[i].is_disjoint(used) {
            chosen.push(i);
            extend_packings(members, i + 1, k, used.union(members[i]), chosen, visit);
            chosen.pop();
        }
    }
}

/// Every unordered `k`-packing as an increasing list of member indices.
pub fn enumerate_packings(fam: &UniformSetFamily, k: usize) -> Result<Vec<Vec<usize>>> {
    packing_guard(fam)?;
    let mut out = Vec::new();
    extend_packings(fam.members(), 0, k, SubsetMask::EMPTY, &mut Vec::new(), &mut |p| {
        out.push(p.to_vec())
    });
    Ok(out)
}

/// Number of unordered `k`-packings by recursion over members in index
/// order.
pub fn count_packings_brute(fam: &UniformSetFamily, k: usize) -> Result<CountValue> {
    packing_guard(fam)?;
    let mut count = 0u64;
    extend_packings(fam.members(), 0, k, SubsetMask::EMPTY, &mut Vec::new(), &mut |_| count += 1);
    Ok(BigInt::from(count))
}

/// Ordered packings with a given support, by enumeration.
pub fn ordered_packings_with_support(fam: &UniformSetFamily, k: usize, s: SubsetMask) -> Result<CountValue> {
    let mut total = BigInt::zero();
    for p in enumerate_packings(fam, k)? {
        let support = p.iter().fold(SubsetMask::EMPTY, |acc, &i| acc.union(fam.members()[i]));
        if support == s {
            total += crate::binomial::factorial(k as u64);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Universe;
    use std::collections::HashSet;

    #[test]
    fn triangle_paths() {
        let g = Graph::complete(3).unwrap();
        let p = enumerate_paths(&g, 2).unwrap();
        assert_eq!(p.len(), 6);
        let uniq: HashSet<_> = p.iter().cloned().collect();
        assert_eq!(uniq.len(), 6);
        assert_eq!(enumerate_paths(&g, 0).unwrap().len(), 3);
        assert!(enumerate_paths(&Graph::empty(4).unwrap(), 1).unwrap().is_empty());
    }

    #[test]
    fn brute_path_counts() {
        assert_eq!(count_paths_brute(&Graph::complete(4).unwrap(), 3).unwrap(), BigInt::from(12));
        assert_eq!(count_paths_brute(&Graph::complete(4).unwrap(), 0).unwrap(), BigInt::from(4));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(count_paths_brute(&two_edges, 2).unwrap(), BigInt::zero());
        assert!(matches!(
            count_paths_brute(&Graph::empty(17).unwrap(), 1),
            Err(CountError::GuardExceeded(_))
        ));
    }

    #[test]
    fn brute_packings() {
        let k4 = UniformSetFamily::complete(4, 2).unwrap();
        let p = enumerate_packings(&k4, 2).unwrap();
        assert_eq!(p.len(), 3);
        let uniq: HashSet<_> = p.iter().cloned().collect();
        assert_eq!(uniq.len(), 3);
        assert_eq!(enumerate_packings(&k4, 0).unwrap(), vec![Vec::<usize>::new()]);
        let u = Universe::new(3).unwrap();
        let overlap = UniformSetFamily::new(
            u,
            2,
            vec![SubsetMask::from_elements([0, 1]), SubsetMask::from_elements([1, 2])],
        )
        .unwrap();
        assert!(enumerate_packings(&overlap, 2).unwrap().is_empty());
        let one = UniformSetFamily::new(u, 2, vec![SubsetMask::from_elements([0, 1])]).unwrap();
        assert_eq!(count_packings_brute(&one, 2).unwrap(), BigInt::zero());
        assert_eq!(count_packings_brute(&k4, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn packing_guard_needs_both_limits_broken() {
        // 25 singletons over 25 elements: both limits exceeded
        let big = UniformSetFamily::complete(25, 1).unwrap();
        assert!(matches!(count_packings_brute(&big, 1), Err(CountError::GuardExceeded(_))));
        // many members on a small universe is fine
        let dense = UniformSetFamily::complete(16, 2).unwrap();
        assert_eq!(count_packings_brute(&dense, 1).unwrap(), BigInt::from(120));
    }

    #[test]
    fn naive_superset_sums() {
        let u = Universe::new(3).unwrap();
        let alpha = WeightedFamily::from_entries(
            u,
            [
                (SubsetMask::from_elements([0, 1]), BigInt::from(2)),
                (SubsetMask::from_elements([1]), BigInt::from(-7)),
            ],
        )
        .unwrap();
        assert_eq!(superset_sum_naive(&alpha, SubsetMask::EMPTY), BigInt::from(-5));
        assert_eq!(superset_sum_naive(&alpha, SubsetMask::singleton(2)), BigInt::zero());
        assert_eq!(superset_sum_naive(&alpha, SubsetMask::singleton(0)), BigInt::from(2));
    }
}
