//! Criterion benchmarks for `seec-core`; see `benches/`.
