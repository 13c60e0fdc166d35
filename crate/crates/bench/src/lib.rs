//! Criterion benchmarks for elimkit live under `benches/`.
