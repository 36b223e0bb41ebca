//! Christoffel words: the simple closed curves of the punctured torus.

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::word::{canonical_rotation, CyclicWord};

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// Lower Christoffel word of slope `p/q`: the lattice path from `(0, 0)` to
/// `(q, p)` hugging the segment from below, with `a` for a horizontal step
/// and `b` for a vertical one. The `*_inverted` flags substitute `A` / `B`.
pub fn christoffel(p: u64, q: u64, a_inverted: bool, b_inverted: bool) -> Result<CyclicWord> {
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let n = p + q;
    let horizontal = Letter::new(0, a_inverted);
    let vertical = Letter::new(1, b_inverted);
    let letters: Vec<Letter> = (0..n)
        .map(|k| if (k + 1) * p / n > k * p / n { vertical } else { horizontal })
        .collect();
    canonical_rotation(&letters)
}

/// All Christoffel classes of length `n`, over every sign choice.
pub fn christoffel_classes(n: u64) -> Vec<CyclicWord> {
    let mut out: Vec<CyclicWord> = (0..=n)
        .filter(|&p| gcd(p, n - p) == 1)
        .flat_map(|p| {
            [(false, false), (false, true), (true, false), (true, true)]
                .into_iter()
                .map(move |(sa, sb)| christoffel(p, n - p, sa, sb).expect("coprime"))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
