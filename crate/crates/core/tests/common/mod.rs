#![allow(dead_code)]

use num_bigint::BigInt;
use pathpack::{Graph, SubsetMask, UniformSetFamily, Universe, WeightedFamily};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> SubsetMask {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    SubsetMask::from_elements(all[..size].iter().copied())
}

/// Up to `max_members` distinct `m`-subsets of `0..n`.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, m: usize, max_members: usize) -> UniformSetFamily {
    let target = rng.gen_range(0..=max_members);
    let mut members = Vec::new();
    for _ in 0..4 * target {
        if members.len() == target {
            break;
        }
        let s = random_subset(rng, n, m);
        if !members.contains(&s) {
            members.push(s);
        }
    }
    UniformSetFamily::new(Universe::new(n).unwrap(), m, members).unwrap()
}

/// Random weights in `[-w, w]` on up to `entries` sets of size at most `r`.
pub fn random_weighted<R: Rng>(rng: &mut R, n: usize, r: usize, entries: usize, w: i64) -> WeightedFamily {
    let mut fam = WeightedFamily::new(Universe::new(n).unwrap());
    for _ in 0..entries {
        let size = rng.gen_range(0..=r.min(n));
        let s = random_subset(rng, n, size);
        fam.set(s, BigInt::from(rng.gen_range(-w..=w))).unwrap();
    }
    fam
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(r) * factorial(n - r))
}
