//! Superset sums of an inclusion–exclusion profile evaluated without tables.
//!
//! If `f(S) = Σ_{Y ⊆ S} (-1)^{|S \ Y|} g(Y)` for `|S| = r`, then swapping the
//! order of summation gives
//!
//! ```text
//! Σ_{S ⊇ X, |S| = r} f(S) = Σ_{Y : |X ∪ Y| <= r} g(Y) · (-1)^{r - |Y|} · C(n - |X ∪ Y|, r - |X ∪ Y|)
//! ```
//!
//! over an `n`-element universe. Pairs `(X, Y)` are produced by writing
//! `Y = B ∪ Z` with `B ⊆ X` and `Z` disjoint from `X`, which is the 3-way split
//! of the union `U = X ∪ Z` into X-only, Y-only, and shared elements.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::binom_small;
use crate::disjoint_sum::OpCounter;
use crate::subset::{low_bits, FixedSizeSubsets, SubsetMask};
use crate::CountValue;

/// Scatters the low bits of `bits` onto the elements of `mask`, lowest first.
#[inline]
fn deposit(mut bits: u64, mask: SubsetMask) -> SubsetMask {
    let mut out = 0u64;
    for e in mask.elements() {
        if bits == 0 {
            break;
        }
        if bits & 1 == 1 {
            out |= 1u64 << e;
        }
        bits >>= 1;
    }
    SubsetMask(out)
}

/// Evaluates `Σ_{S ⊇ x, |S| = r} f(S)` for the profile `f` generated by
/// `weight`, over the universe `0..n`. `pairs` is advanced once per `(X, Y)`
/// pair visited.
pub(crate) fn superset_sum_reversed<W>(
    n: usize,
    r: usize,
    x: SubsetMask,
    mut weight: W,
    counter: &mut OpCounter,
    pairs: &mut u64,
) -> CountValue
where
    W: FnMut(SubsetMask) -> CountValue,
{
    let mut acc = BigInt::zero();
    if x.len() > r || r > n {
        return acc;
    }
    let complement = SubsetMask(low_bits(n)).difference(x);
    let free = complement.len();
    for extra in 0..=(r - x.len()) {
        let union_size = x.len() + extra;
        let coef = binom_small(n - union_size, r - union_size);
        for z in FixedSizeSubsets::new(free, extra) {
            let z = deposit(z.bits(), complement);
            for b in x.subsets() {
                let y = b.union(z);
                *pairs += 1;
                counter.set(1);
                let w = weight(y);
                if w.is_zero() {
                    continue;
                }
                let term = w * coef;
                counter.ring(2);
                if (r - y.len()).is_multiple_of(2) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
    }
    acc
}

/// Number of `(X, Y)` pairs with `|X ∪ Y| <= r` over an `n`-element
/// universe: `Σ_{s <= r} C(n, s)·3^s`.
pub(crate) fn pair_count(n: usize, r: usize) -> u128 {
    (0..=r.min(n))
        .map(|s| binom_small(n, s) as u128 * 3u128.pow(s as u32))
        .sum()
}
