use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of classes of one combinatorial length per self-intersection count.
///
/// Zero-valued bins are never stored, so two histograms with the same counts
/// compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    length: usize,
    bins: BTreeMap<u32, u64>,
}

impl Histogram {
    pub fn new(length: usize) -> Histogram {
        Histogram { length, bins: BTreeMap::new() }
    }

    pub fn from_bins(length: usize, bins: impl IntoIterator<Item = (u32, u64)>) -> Histogram {
        let mut h = Histogram::new(length);
        for (k, c) in bins {
            h.add(k, c);
        }
        h
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn add(&mut self, k: u32, count: u64) {
        if count > 0 {
            *self.bins.entry(k).or_insert(0) += count;
        }
    }

    #[inline]
    pub fn record(&mut self, k: u32) {
        *self.bins.entry(k).or_insert(0) += 1;
    }

    pub fn get(&self, k: u32) -> u64 {
        self.bins.get(&k).copied().unwrap_or(0)
    }

    /// Nonzero bins in ascending `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.bins.iter().map(|(&k, &c)| (k, c))
    }

    pub fn nonzero_bins(&self) -> usize {
        self.bins.len()
    }

    pub fn total(&self) -> u128 {
        self.bins.values().map(|&c| c as u128).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn max_k(&self) -> Option<u32> {
        self.bins.keys().next_back().copied()
    }

    /// Pointwise sum.
    pub fn merge(&self, other: &Histogram) -> Result<Histogram> {
        let mut out = self.clone();
        out.absorb(other)?;
        Ok(out)
    }

    pub fn absorb(&mut self, other: &Histogram) -> Result<()> {
        if self.length != other.length {
            return Err(Error::LengthMismatch { left: self.length, right: other.length });
        }
        for (k, c) in other.iter() {
            self.add(k, c);
        }
        Ok(())
    }

    /// Counts over `0..=max_k` with gaps filled by zeros.
    pub fn dense(&self) -> Vec<u64> {
        match self.max_k() {
            None => Vec::new(),
            Some(m) => (0..=m).map(|k| self.get(k)).collect(),
        }
    }

    /// Counts rise to a single peak and then fall, zero bins included.
    pub fn is_unimodal(&self) -> bool {
        let d = self.dense();
        let mut i = 0;
        while i + 1 < d.len() && d[i] <= d[i + 1] {
            i += 1;
        }
        while i + 1 < d.len() && d[i] >= d[i + 1] {
            i += 1;
        }
        i + 1 >= d.len()
    }
}

/// Free-function form of [`Histogram::merge`].
pub fn merge(h1: &Histogram, h2: &Histogram) -> Result<Histogram> {
    h1.merge(h2)
}
