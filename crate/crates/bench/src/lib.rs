//! Benchmarks for `schubloc` live in `benches/`.
