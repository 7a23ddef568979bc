//! Criterion benchmarks for sincpow-core; see `benches/`.
