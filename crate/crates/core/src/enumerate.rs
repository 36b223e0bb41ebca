//! Enumeration of conjugacy classes of a fixed length.
//!
//! Canonical representatives of primitive classes are exactly the Lyndon
//! words over `a < b < A < B` that are cyclically reduced. They are produced
//! by an iterative Fredricksen–Kessler–Maiorana walk over prenecklaces,
//! pruned at every letter that would cancel its predecessor. Since the
//! no-cancellation condition is prefix-closed the pruning never hides a
//! valid prenecklace; the wrap-around condition is checked at emission.
//!
//! The walk state at an emitted word is a function of the word alone, which
//! is what makes [`ClassIter::resume_after`] possible.

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::word::{is_reduced, letters_to_string, CyclicWord};

/// Streams canonical cyclic words of one length in lexicographic order.
#[derive(Clone, Debug)]
pub struct ClassIter {
    n: usize,
    /// Fixed leading ranks (the shard key).
    prefix: Vec<u8>,
    include_powers: bool,
    /// Ranks of the current prenecklace.
    word: Vec<u8>,
    /// `period[t]`: length of the longest Lyndon prefix of `word[..t]`.
    period: Vec<usize>,
    /// Next candidate rank at each depth.
    next: Vec<u8>,
    depth: usize,
    done: bool,
}

/// Primitive classes of length `n` whose canonical word starts with `prefix`.
pub fn enumerate_classes(n: usize, prefix: &[Letter]) -> Result<ClassIter> {
    ClassIter::new(n, prefix, false)
}

impl ClassIter {
    pub fn new(n: usize, prefix: &[Letter], include_powers: bool) -> Result<ClassIter> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        if prefix.len() > n {
            return Err(Error::InvalidPrefix {
                prefix: letters_to_string(prefix),
                reason: "longer than the word length",
            });
        }
        if !is_reduced(prefix) {
            return Err(Error::InvalidPrefix { prefix: letters_to_string(prefix), reason: "not reduced" });
        }
        let mut it = ClassIter {
            n,
            prefix: prefix.iter().map(|l| l.rank()).collect(),
            include_powers,
            word: vec![0; n],
            period: vec![1; n + 1],
            next: vec![0; n + 1],
            depth: 0,
            done: false,
        };
        it.next[0] = it.low(0);
        Ok(it)
    }

    /// Continues the stream strictly after `cursor`, which must be a word
    /// this iterator would emit.
    pub fn resume_after(mut self, cursor: &CyclicWord) -> Result<ClassIter> {
        let ranks: Vec<u8> = cursor.letters().iter().map(|l| l.rank()).collect();
        let belongs = ranks.len() == self.n
            && ranks.starts_with(&self.prefix)
            && (self.include_powers || cursor.primitive());
        if !belongs {
            return Err(Error::CheckpointMismatch(format!(
                "cursor {cursor} is not a class of this stream"
            )));
        }
        for (t, &r) in ranks.iter().enumerate() {
            self.word[t] = r;
            self.period[t + 1] = self.period_after(t, r);
            self.next[t] = r + 1;
        }
        self.depth = self.n - 1;
        self.done = false;
        Ok(self)
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// Smallest rank that keeps `word[..=t]` a prenecklace.
    fn floor(&self, t: usize) -> u8 {
        if t == 0 {
            0
        } else {
            self.word[t - self.period[t]]
        }
    }

    fn low(&self, t: usize) -> u8 {
        if t < self.prefix.len() {
            self.prefix[t]
        } else {
            self.floor(t)
        }
    }

    fn high(&self, t: usize) -> u8 {
        if t < self.prefix.len() {
            self.prefix[t]
        } else {
            3
        }
    }

    fn period_after(&self, t: usize, r: u8) -> usize {
        if t == 0 || r == self.word[t - self.period[t]] {
            self.period[t]
        } else {
            t + 1
        }
    }

    fn emit(&self) -> Option<CyclicWord> {
        let n = self.n;
        let p = self.period[n];
        let necklace = n % p == 0;
        let primitive = p == n;
        let first = Letter::from_rank(self.word[0]);
        let last = Letter::from_rank(self.word[n - 1]);
        if !necklace || last.cancels(first) || !(primitive || self.include_powers) {
            return None;
        }
        let letters = self.word.iter().map(|&r| Letter::from_rank(r)).collect();
        Some(CyclicWord::from_canonical_unchecked(letters, primitive))
    }
}

impl Iterator for ClassIter {
    type Item = CyclicWord;

    fn next(&mut self) -> Option<CyclicWord> {
        if self.done {
            return None;
        }
        loop {
            let t = self.depth;
            if t == self.n {
                self.depth -= 1;
                if let Some(w) = self.emit() {
                    return Some(w);
                }
                continue;
            }
            let r = self.next[t];
            if r > self.high(t) {
                if t == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.next[t] = r + 1;
            // a prefix letter below the FKM floor means no prenecklace has this prefix
            if r < self.floor(t) {
                continue;
            }
            if t > 0 && Letter::from_rank(self.word[t - 1]).cancels(Letter::from_rank(r)) {
                continue;
            }
            self.word[t] = r;
            self.period[t + 1] = self.period_after(t, r);
            self.depth = t + 1;
            if self.depth < self.n {
                self.next[self.depth] = self.low(self.depth);
            }
        }
    }
}

/// All reduced sequences of length `k`, in lexicographic order. These are
/// the shard keys: the streams for each key partition the full stream.
pub fn reduced_prefixes(k: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Letter>| {
                Letter::ALL.into_iter().filter_map(move |x| match p.last() {
                    Some(last) if last.cancels(x) => None,
                    _ => {
                        let mut q = p.clone();
                        q.push(x);
                        Some(q)
                    }
                })
            })
            .collect();
    }
    out
}
