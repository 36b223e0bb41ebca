//! Reduced and cyclically reduced words.
//!
//! A free homotopy class of curves on the punctured torus is a conjugacy
//! class of the free group on `a`, `b`; each class has a unique cyclically
//! reduced representative up to rotation. [`CyclicWord`] stores the least
//! rotation under `a < b < A < B`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::letter::Letter;

/// Parses text over `{a, b, A, B}` without any reduction.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.chars()
        .enumerate()
        .map(|(i, c)| Letter::from_char(c).ok_or(Error::Parse { position: i + 1, found: c }))
        .collect()
}

pub fn letters_to_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_char()).collect()
}

/// True if no adjacent pair cancels.
pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| !w[0].cancels(w[1]))
}

/// Reduced, and the last letter does not cancel the first.
pub fn is_cyclically_reduced(letters: &[Letter]) -> bool {
    is_reduced(letters)
        && match (letters.first(), letters.last()) {
            (Some(&first), Some(&last)) => !last.cancels(first),
            _ => true,
        }
}

/// An element of the free group in reduced form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn empty() -> ReducedWord {
        ReducedWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Product in the free group.
    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        free_reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&letters_to_string(&self.0))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord({self})")
    }
}

impl FromStr for ReducedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(free_reduce(parse_letters(s)?))
    }
}

/// Free reduction with a stack; the result is the unique reduced word equal
/// to the input.
pub fn free_reduce(seq: impl IntoIterator<Item = Letter>) -> ReducedWord {
    let mut stack: Vec<Letter> = Vec::new();
    for x in seq {
        match stack.last() {
            Some(&top) if top.cancels(x) => {
                stack.pop();
            }
            _ => stack.push(x),
        }
    }
    ReducedWord(stack)
}

/// Splits a reduced word as `conjugator · core · conjugator⁻¹` with `core`
/// cyclically reduced and canonically rotated.
pub fn cyclic_reduce(w: &ReducedWord) -> (ReducedWord, CyclicWord) {
    let letters = w.letters();
    let (mut lo, mut hi) = (0, letters.len());
    while hi - lo >= 2 && letters[hi - 1].cancels(letters[lo]) {
        lo += 1;
        hi -= 1;
    }
    let conjugator = ReducedWord(letters[..lo].to_vec());
    let core = canonical_rotation(&letters[lo..hi]).expect("core of a reduced word is cyclically reduced");
    (conjugator, core)
}

/// Index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation(letters: &[Letter]) -> usize {
    let n = letters.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| letters[i % n].rank();
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != usize::MAX && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = i.wrapping_add(1);
        }
    }
    k % n
}

/// Canonical representative of the rotation class of a cyclically reduced
/// sequence.
pub fn canonical_rotation(letters: &[Letter]) -> Result<CyclicWord> {
    if !is_cyclically_reduced(letters) {
        return Err(Error::NotCyclicallyReduced(letters_to_string(letters)));
    }
    let k = least_rotation(letters);
    let mut canon = Vec::with_capacity(letters.len());
    canon.extend_from_slice(&letters[k..]);
    canon.extend_from_slice(&letters[..k]);
    let primitive = smallest_period(&canon) == canon.len() && !canon.is_empty();
    Ok(CyclicWord { letters: canon, primitive })
}

/// Smallest `p` such that the sequence is its length-`p` prefix repeated
/// `n / p` times; `n` if there is none. Uses the prefix failure function.
pub fn smallest_period(letters: &[Letter]) -> usize {
    let n = letters.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && letters[i] != letters[k] {
            k = fail[k - 1];
        }
        if letters[i] == letters[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

/// A conjugacy class of the free group, i.e. a free homotopy class of
/// oriented closed curves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    letters: Vec<Letter>,
    primitive: bool,
}

impl CyclicWord {
    /// Canonicalizes any cyclically reduced rotation.
    pub fn new(letters: &[Letter]) -> Result<CyclicWord> {
        canonical_rotation(letters)
    }

    /// Cyclically reduces an arbitrary letter sequence first.
    pub fn from_any(seq: impl IntoIterator<Item = Letter>) -> CyclicWord {
        cyclic_reduce(&free_reduce(seq)).1
    }

    /// Trusts the caller that `letters` is already canonical.
    pub(crate) fn from_canonical_unchecked(letters: Vec<Letter>, primitive: bool) -> CyclicWord {
        debug_assert!(is_cyclically_reduced(&letters));
        debug_assert_eq!(least_rotation(&letters), 0);
        CyclicWord { letters, primitive }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Combinatorial length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cached primitivity; `false` for the trivial class.
    pub fn primitive(&self) -> bool {
        self.primitive
    }

    /// Class of the reversed curve.
    pub fn inverse(&self) -> CyclicWord {
        let rev: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverse()).collect();
        canonical_rotation(&rev).expect("inverse of a cyclically reduced word is cyclically reduced")
    }

    /// The shortest `r` with `self = r^k`.
    pub fn primitive_root(&self) -> Result<CyclicWord> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let p = smallest_period(&self.letters);
        canonical_rotation(&self.letters[..p])
    }
}

/// Whether a cyclic word is not a proper power.
pub fn is_primitive(w: &CyclicWord) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(smallest_period(w.letters()) == w.len())
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&letters_to_string(&self.letters))
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}

/// Parses and canonicalizes; rejects text that is not cyclically reduced.
impl FromStr for CyclicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        canonical_rotation(&parse_letters(s)?)
    }
}
