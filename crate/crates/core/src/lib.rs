//! Self-intersection census of curves on the punctured torus.
//!
//! Free homotopy classes of closed curves on the punctured torus are
//! conjugacy classes of the free group on `a` and `b`, written as cyclically
//! reduced words over `a`, `b`, `A = a⁻¹`, `B = b⁻¹`. This crate enumerates
//! the non-power classes of a given length, computes the self-intersection
//! number of each by counting linked strand pairs at the circle at infinity,
//! and aggregates the counts into a histogram with distribution diagnostics.
//!
//! ```
//! use sicgram::{self_intersection, CyclicWord, PUNCTURED_TORUS};
//!
//! let w: CyclicWord = "aabb".parse().unwrap();
//! assert_eq!(self_intersection(&w, &PUNCTURED_TORUS).unwrap().value(), 1);
//! ```

pub mod automorphism;
pub mod census;
pub mod christoffel;
pub mod count;
pub mod diagnostics;
pub mod enumerate;
pub mod error;
pub mod histogram;
pub mod intersection;
pub mod letter;
pub mod report;
pub mod word;

pub use automorphism::Substitution;
pub use census::{
    census, run_shard, run_shard_with, CensusConfig, Checkpoint, ShardOutcome, ShardRun, ShardSpec,
    CHECKPOINT_EVERY, DEFAULT_PREFIX_LEN, ENGINE_VERSION,
};
pub use christoffel::{christoffel, christoffel_classes};
pub use count::{count_classes, cyclically_reduced_words};
pub use diagnostics::{diagnostics, DistributionDiagnostics};
pub use enumerate::{enumerate_classes, reduced_prefixes, ClassIter};
pub use error::{Error, Result};
pub use histogram::{merge, Histogram};
pub use intersection::{
    compare_rays, linked, ray_letter, self_intersection, Direction, Engine, Ray, SelfIntersectionCount, Strand,
    SurfaceOrder, PUNCTURED_TORUS,
};
pub use letter::Letter;
pub use report::{export, Format, Report};
pub use word::{
    canonical_rotation, cyclic_reduce, free_reduce, is_primitive, parse_letters, CyclicWord, ReducedWord,
};
