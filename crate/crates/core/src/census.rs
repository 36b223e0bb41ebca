//! Exhaustive per-length census of self-intersection numbers.
//!
//! The class stream is split into shards by canonical prefix. Shards run on a
//! fixed pool of worker threads, each with its own [`Engine`], and their
//! histograms are merged by the calling thread. Every shard can persist a
//! [`Checkpoint`] (resume cursor plus partial histogram) so an interrupted
//! run picks up where it stopped and produces the same result.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::count::count_classes;
use crate::enumerate::{enumerate_classes, reduced_prefixes};
use crate::error::{Error, Result};
use crate::histogram::Histogram;
use crate::intersection::{Engine, SurfaceOrder};
use crate::letter::Letter;
use crate::word::{letters_to_string, parse_letters, CyclicWord};

/// Identifies the counting rule. Checkpoints from another engine are refused.
pub const ENGINE_VERSION: &str = "sicgram-engine/1";

pub const DEFAULT_PREFIX_LEN: usize = 3;

/// Classes between checkpoint writes.
pub const CHECKPOINT_EVERY: u64 = 1 << 20;

/// The classes of one length whose canonical word starts with `prefix`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShardSpecRepr", into = "ShardSpecRepr")]
pub struct ShardSpec {
    length: usize,
    prefix: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct ShardSpecRepr {
    length: usize,
    prefix: String,
    prefix_len: usize,
}

impl TryFrom<ShardSpecRepr> for ShardSpec {
    type Error = Error;

    fn try_from(r: ShardSpecRepr) -> Result<Self> {
        let prefix = parse_letters(&r.prefix)?;
        if prefix.len() != r.prefix_len {
            return Err(Error::CheckpointMismatch(format!(
                "prefix {:?} does not have length {}",
                r.prefix, r.prefix_len
            )));
        }
        ShardSpec::new(r.length, prefix)
    }
}

impl From<ShardSpec> for ShardSpecRepr {
    fn from(s: ShardSpec) -> Self {
        ShardSpecRepr { length: s.length, prefix: letters_to_string(&s.prefix), prefix_len: s.prefix.len() }
    }
}

impl ShardSpec {
    pub fn new(length: usize, prefix: Vec<Letter>) -> Result<ShardSpec> {
        // validates length and prefix
        enumerate_classes(length, &prefix)?;
        Ok(ShardSpec { length, prefix })
    }

    /// The whole class set as one shard.
    pub fn whole(length: usize) -> Result<ShardSpec> {
        ShardSpec::new(length, Vec::new())
    }

    /// All shards keyed by reduced prefixes of length `prefix_len`, clamped
    /// to `length`. Together they partition the class set.
    pub fn partition(length: usize, prefix_len: usize) -> Result<Vec<ShardSpec>> {
        if length == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(reduced_prefixes(prefix_len.min(length))
            .into_iter()
            .map(|prefix| ShardSpec { length, prefix })
            .collect())
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn checkpoint_file_name(&self) -> String {
        format!("shard-{}.ckpt.json", letters_to_string(&self.prefix))
    }
}

/// Persisted progress of one shard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub shard: ShardSpec,
    /// Canonical text of the last class already counted in `partial`.
    pub last_emitted: Option<String>,
    pub partial: Histogram,
    pub engine_version: String,
    pub order: SurfaceOrder,
    pub complete: bool,
}

impl Checkpoint {
    pub fn fresh(shard: ShardSpec, order: SurfaceOrder) -> Checkpoint {
        let partial = Histogram::new(shard.length);
        Checkpoint {
            shard,
            last_emitted: None,
            partial,
            engine_version: ENGINE_VERSION.to_owned(),
            order,
            complete: false,
        }
    }

    fn check(&self, spec: &ShardSpec, order: &SurfaceOrder) -> Result<()> {
        if self.engine_version != ENGINE_VERSION {
            return Err(Error::EngineVersion {
                expected: ENGINE_VERSION.to_owned(),
                found: self.engine_version.clone(),
            });
        }
        if &self.shard != spec {
            return Err(Error::CheckpointMismatch(format!(
                "checkpoint is for length {} prefix {:?}, run is length {} prefix {:?}",
                self.shard.length,
                letters_to_string(&self.shard.prefix),
                spec.length,
                letters_to_string(&spec.prefix)
            )));
        }
        if &self.order != order {
            return Err(Error::CheckpointMismatch(format!(
                "checkpoint used surface order {}, run uses {}",
                self.order, order
            )));
        }
        if self.partial.length() != spec.length {
            return Err(Error::CheckpointMismatch("partial histogram has the wrong length".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("checkpoint serializes");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Checkpoint> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Writes `<dir>/shard-<prefix>.ckpt.json` via a temporary file and rename.
    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join(self.shard.checkpoint_file_name());
        let tmp = dir.join(format!(".{}.tmp", self.shard.checkpoint_file_name()));
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.to_json().as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, &path)
        };
        write().map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

/// Knobs for one shard run.
#[derive(Clone, Copy, Debug)]
pub struct ShardRun<'a> {
    pub checkpoint_dir: Option<&'a Path>,
    pub checkpoint_every: u64,
    pub cancel: Option<&'a AtomicBool>,
    /// Stop (as if cancelled) after this many classes in this invocation.
    pub stop_after: Option<u64>,
}

impl Default for ShardRun<'_> {
    fn default() -> Self {
        ShardRun { checkpoint_dir: None, checkpoint_every: CHECKPOINT_EVERY, cancel: None, stop_after: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShardOutcome {
    Complete(Histogram),
    Interrupted(Checkpoint),
}

/// Histogram of one shard, resuming from `checkpoint` when given.
pub fn run_shard(spec: &ShardSpec, order: &SurfaceOrder, checkpoint: Option<Checkpoint>) -> Result<Histogram> {
    match run_shard_with(spec, order, checkpoint, &ShardRun::default())? {
        ShardOutcome::Complete(h) => Ok(h),
        ShardOutcome::Interrupted(_) => Err(Error::Interrupted),
    }
}

pub fn run_shard_with(
    spec: &ShardSpec,
    order: &SurfaceOrder,
    checkpoint: Option<Checkpoint>,
    run: &ShardRun<'_>,
) -> Result<ShardOutcome> {
    let mut state = match checkpoint {
        Some(c) => {
            c.check(spec, order)?;
            c
        }
        None => Checkpoint::fresh(spec.clone(), *order),
    };
    if state.complete {
        return Ok(ShardOutcome::Complete(state.partial));
    }
    let mut classes = enumerate_classes(spec.length, &spec.prefix)?;
    let mut cursor: Option<CyclicWord> = None;
    if let Some(text) = &state.last_emitted {
        let w: CyclicWord = text.parse()?;
        classes = classes.resume_after(&w)?;
        cursor = Some(w);
    }

    let save = |c: &Checkpoint| -> Result<()> {
        if let Some(dir) = run.checkpoint_dir {
            c.save(dir)?;
        }
        Ok(())
    };
    let every = run.checkpoint_every.max(1);
    let mut engine = Engine::new(*order);
    let mut done = 0u64;
    let mut interrupted = false;
    for w in classes {
        let cancelled = run.cancel.is_some_and(|c| c.load(Ordering::Relaxed));
        if cancelled || run.stop_after.is_some_and(|s| done >= s) {
            interrupted = true;
            break;
        }
        state.partial.record(engine.count_unchecked(w.letters()).value());
        cursor = Some(w);
        done += 1;
        if done % every == 0 {
            state.last_emitted = cursor.as_ref().map(|c| c.to_string());
            save(&state)?;
        }
    }
    state.last_emitted = cursor.map(|c| c.to_string());
    state.complete = !interrupted;
    save(&state)?;
    Ok(if interrupted {
        ShardOutcome::Interrupted(state)
    } else {
        ShardOutcome::Complete(state.partial)
    })
}

/// Everything a full census needs.
#[derive(Clone, Debug)]
pub struct CensusConfig<'a> {
    pub length: usize,
    pub order: SurfaceOrder,
    pub workers: usize,
    pub prefix_len: usize,
    pub checkpoint_dir: Option<PathBuf>,
    pub checkpoint_every: u64,
    pub cancel: Option<&'a AtomicBool>,
}

impl<'a> CensusConfig<'a> {
    pub fn new(length: usize) -> CensusConfig<'a> {
        CensusConfig {
            length,
            order: SurfaceOrder::default(),
            workers: 1,
            prefix_len: DEFAULT_PREFIX_LEN,
            checkpoint_dir: None,
            checkpoint_every: CHECKPOINT_EVERY,
            cancel: None,
        }
    }

    pub fn run(&self) -> Result<Histogram> {
        self.run_with_progress(|_, _| {})
    }

    /// Runs the census; `progress` is called on the calling thread after each
    /// shard finishes, with the shard and the number of shards finished.
    pub fn run_with_progress(&self, mut progress: impl FnMut(&ShardSpec, usize)) -> Result<Histogram> {
        if self.workers == 0 {
            return Err(Error::InvalidArgument("worker count must be positive".into()));
        }
        let expected = count_classes(self.length, true)?;
        let shards = ShardSpec::partition(self.length, self.prefix_len)?;

        let dir = self.checkpoint_dir.as_deref();
        if let Some(d) = dir {
            fs::create_dir_all(d).map_err(|e| Error::io(d, e))?;
        }
        let mut resume = Vec::with_capacity(shards.len());
        for s in &shards {
            let ckpt = match dir.map(|d| d.join(s.checkpoint_file_name())) {
                Some(p) if p.exists() => Some(Checkpoint::load(&p)?),
                _ => None,
            };
            resume.push(ckpt);
        }

        let run = ShardRun {
            checkpoint_dir: dir,
            checkpoint_every: self.checkpoint_every,
            cancel: self.cancel,
            stop_after: None,
        };
        let next = AtomicUsize::new(0);
        let resume: Vec<std::sync::Mutex<Option<Checkpoint>>> =
            resume.into_iter().map(std::sync::Mutex::new).collect();
        let (tx, rx) = mpsc::channel();

        let mut total = Histogram::new(self.length);
        let mut first_error: Option<(usize, Error)> = None;
        let mut interrupted = false;
        thread::scope(|scope| {
            for _ in 0..self.workers.min(shards.len()) {
                let tx = tx.clone();
                let (shards, resume, next, order) = (&shards, &resume, &next, &self.order);
                scope.spawn(move || loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(spec) = shards.get(i) else { break };
                    let ckpt = resume[i].lock().expect("poisoned").take();
                    let result = run_shard_with(spec, order, ckpt, &run);
                    if tx.send((i, result)).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            let mut finished = 0;
            for (i, result) in rx {
                match result {
                    Ok(ShardOutcome::Complete(h)) => {
                        total.absorb(&h).expect("shards share the census length");
                        finished += 1;
                        progress(&shards[i], finished);
                    }
                    Ok(ShardOutcome::Interrupted(_)) => interrupted = true,
                    Err(e) => {
                        if first_error.as_ref().is_none_or(|(j, _)| i < *j) {
                            first_error = Some((i, e));
                        }
                    }
                }
            }
        });

        if let Some((_, e)) = first_error {
            return Err(e);
        }
        if interrupted {
            return Err(Error::Interrupted);
        }
        if total.total() != expected {
            return Err(Error::MassCheck { length: self.length, expected, found: total.total() });
        }
        Ok(total)
    }
}

/// Full census of length `n`; the result does not depend on `workers` or
/// `prefix_len`.
pub fn census(
    n: usize,
    order: &SurfaceOrder,
    workers: usize,
    prefix_len: usize,
    checkpoint_dir: Option<&Path>,
) -> Result<Histogram> {
    CensusConfig {
        order: *order,
        workers,
        prefix_len,
        checkpoint_dir: checkpoint_dir.map(Path::to_path_buf),
        ..CensusConfig::new(n)
    }
    .run()
}
