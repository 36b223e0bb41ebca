//! Criterion benchmarks for `sicgram`; see `benches/`.
