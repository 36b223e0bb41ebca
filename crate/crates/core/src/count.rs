//! Exact class counts by necklace counting.
//!
//! The number of cyclically reduced words of length `d` is the trace of the
//! `d`-th power of the 4×4 no-cancellation transfer matrix, whose
//! eigenvalues are 3, 1, 1, −1. Burnside (all classes) and Möbius inversion
//! (aperiodic classes) then give the counts.

use crate::error::{Error, Result};

/// Largest length for which the counts fit comfortably in 128 bits.
pub const MAX_COUNT_LENGTH: usize = 64;

/// Cyclically reduced words of length `d`: `3^d + 2 + (−1)^d`.
pub fn cyclically_reduced_words(d: usize) -> u128 {
    assert!((1..=MAX_COUNT_LENGTH).contains(&d));
    let sign: i128 = if d % 2 == 0 { 1 } else { -1 };
    (3i128.pow(d as u32) + 2 + sign) as u128
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn mobius(mut n: usize) -> i8 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Number of conjugacy classes of combinatorial length `n`, optionally
/// restricted to non-power classes.
pub fn count_classes(n: usize, primitive_only: bool) -> Result<u128> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    assert!(n <= MAX_COUNT_LENGTH, "lengths above {MAX_COUNT_LENGTH} overflow the count");
    let total: i128 = divisors(n)
        .map(|d| {
            let r = cyclically_reduced_words(d) as i128;
            let weight = if primitive_only {
                mobius(n / d) as i128
            } else {
                euler_phi(n / d) as i128
            };
            weight * r
        })
        .sum();
    debug_assert!(total >= 0 && total % n as i128 == 0);
    Ok((total / n as i128) as u128)
}
