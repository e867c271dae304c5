//! Criterion benchmarks for `acaa-core`; see `benches/core.rs`.
