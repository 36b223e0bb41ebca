//! Census output formats.
//!
//! * CSV: header `sic,count`, one line per nonzero bin in ascending `k`,
//!   LF endings. The CSV does not carry the length.
//! * JSON report: `{length, order, engine_version, bins: [[k, count], ...],
//!   diagnostics: {...}}`.
//!
//! Both are byte-stable for a fixed histogram.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::census::ENGINE_VERSION;
use crate::diagnostics::{diagnostics, DistributionDiagnostics};
use crate::error::{Error, Result};
use crate::histogram::Histogram;
use crate::intersection::SurfaceOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}, expected csv or json"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub length: usize,
    pub order: SurfaceOrder,
    pub engine_version: String,
    pub bins: Vec<(u32, u64)>,
    pub diagnostics: DistributionDiagnostics,
}

impl Report {
    pub fn new(h: &Histogram, order: &SurfaceOrder) -> Result<Report> {
        Ok(Report::with_diagnostics(h, diagnostics(h)?, order))
    }

    pub fn with_diagnostics(h: &Histogram, d: DistributionDiagnostics, order: &SurfaceOrder) -> Report {
        Report {
            length: h.length(),
            order: *order,
            engine_version: ENGINE_VERSION.to_owned(),
            bins: h.iter().collect(),
            diagnostics: d,
        }
    }

    pub fn histogram(&self) -> Histogram {
        Histogram::from_bins(self.length, self.bins.iter().copied())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report> {
        let r: Report = serde_json::from_str(text)?;
        if r.bins.windows(2).any(|w| w[0].0 >= w[1].0) || r.bins.iter().any(|&(_, c)| c == 0) {
            return Err(Error::Format("bins must be nonzero and strictly ascending".into()));
        }
        Ok(r)
    }
}

pub fn to_csv(h: &Histogram) -> String {
    let mut out = String::from("sic,count\n");
    for (k, c) in h.iter() {
        writeln!(out, "{k},{c}").expect("writing to a String");
    }
    out
}

/// Reads the two-column CSV. Bins must be strictly ascending and nonzero.
pub fn from_csv(text: &str, length: usize) -> Result<Histogram> {
    let mut lines = text.lines();
    match lines.next() {
        Some("sic,count") => {}
        other => return Err(Error::Format(format!("expected header `sic,count`, found {other:?}"))),
    }
    let mut h = Histogram::new(length);
    let mut last: Option<u32> = None;
    for (i, line) in lines.enumerate() {
        let bad = |what: &str| Error::Format(format!("line {}: {what}: {line:?}", i + 2));
        let (k, c) = line.split_once(',').ok_or_else(|| bad("expected two columns"))?;
        let k: u32 = k.parse().map_err(|_| bad("bad self-intersection count"))?;
        let c: u64 = c.parse().map_err(|_| bad("bad class count"))?;
        if c == 0 || last.is_some_and(|l| l >= k) {
            return Err(bad("bins must be nonzero and strictly ascending"));
        }
        last = Some(k);
        h.add(k, c);
    }
    Ok(h)
}

/// Serialized census output.
pub fn export(h: &Histogram, d: &DistributionDiagnostics, order: &SurfaceOrder, format: Format) -> Vec<u8> {
    match format {
        Format::Csv => to_csv(h).into_bytes(),
        Format::Json => Report::with_diagnostics(h, d.clone(), order).to_json().into_bytes(),
    }
}

/// Reads either format, guessing from the first non-blank character.
/// CSV input has no length and yields a histogram of length 0.
pub fn import(text: &str) -> Result<Histogram> {
    if text.trim_start().starts_with('{') {
        Ok(Report::from_json(text)?.histogram())
    } else {
        from_csv(text, 0)
    }
}
