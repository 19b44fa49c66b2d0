//! Criterion benchmarks for the kernel live in `benches/`.
