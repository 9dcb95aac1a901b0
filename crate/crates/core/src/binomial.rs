//! Binomial coefficients and their partial row sums.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::CountValue;

const ROWS: usize = 65;

fn pascal() -> &'static [[u64; ROWS]; ROWS] {
    static TABLE: OnceLock<Box<[[u64; ROWS]; ROWS]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Box::new([[0u64; ROWS]; ROWS]);
        for q in 0..ROWS {
            t[q][0] = 1;
            for r in 1..=q {
                t[q][r] = t[q - 1][r - 1] + t[q - 1][r];
            }
        }
        t
    })
}

/// `C(q, r)` for `q <= 64`; zero outside `0 <= r <= q`.
///
/// Every entry of Pascal's triangle up to row 64 fits in a `u64`.
#[inline]
pub fn binom_small(q: usize, r: usize) -> u64 {
    if r > q {
        return 0;
    }
    pascal()[q][r]
}

/// Signed-argument variant of [`binom_small`].
#[inline]
pub fn binom_small_signed(q: i64, r: i64) -> u64 {
    if q < 0 || r < 0 {
        return 0;
    }
    binom_small(q as usize, r as usize)
}

/// `C(q,0) + C(q,1) + ... + C(q,r)` for `q <= 64`, as a `u128`.
pub fn binsum_small(q: usize, r: usize) -> u128 {
    (0..=r.min(q)).map(|i| binom_small(q, i) as u128).sum()
}

/// `C(q, r)`, zero when `r < 0` or `r > q`.
pub fn binom(q: u64, r: i64) -> CountValue {
    if r < 0 || r as u64 > q {
        return BigInt::zero();
    }
    if q < ROWS as u64 {
        return BigInt::from(binom_small(q as usize, r as usize));
    }
    let r = (r as u64).min(q - r as u64);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc *= q - i;
        acc /= i + 1;
    }
    acc
}

/// `C(q,0) + C(q,1) + ... + C(q,r)`.
pub fn binsum(q: u64, r: u64) -> CountValue {
    let top = r.min(q);
    if q < ROWS as u64 {
        return BigInt::from(binsum_small(q as usize, top as usize));
    }
    let mut term = BigInt::one();
    let mut acc = BigInt::one();
    for i in 0..top {
        term *= q - i;
        term /= i + 1;
        acc += &term;
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> CountValue {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(4, 5), BigInt::zero());
        assert_eq!(binom(7, 0), BigInt::one());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn binsum_values() {
        assert_eq!(binsum(4, 2), BigInt::from(11));
        for q in 0..20 {
            assert_eq!(binsum(q, 0), BigInt::one());
        }
        assert_eq!(binsum(5, 5), BigInt::from(32));
        assert_eq!(binsum(5, 9), BigInt::from(32));
        assert_eq!(binsum(64, 64), BigInt::from(1u128 << 64));
    }

    #[test]
    fn pascal_rule_up_to_30() {
        for q in 1..=30u64 {
            for r in 0..=(q as i64 + 1) {
                assert_eq!(binom(q, r), binom(q - 1, r - 1) + binom(q - 1, r));
            }
        }
    }

    #[test]
    fn large_rows_agree_with_table() {
        assert_eq!(binom(64, 32), BigInt::from(1_832_624_140_942_590_534u64));
        // 100 choose 50, beyond the table.
        let expect: BigInt = "100891344545564193334812497256".parse().unwrap();
        assert_eq!(binom(100, 50), expect);
        assert_eq!(binom(70, 3), BigInt::from(54740));
        assert_eq!(binsum(70, 1), BigInt::from(71));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(21), "51090942171709440000".parse::<BigInt>().unwrap());
    }
}
