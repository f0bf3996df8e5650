//! Criterion benchmarks for the `dsiht` crate; see `benches/`.
