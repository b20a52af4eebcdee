//! Criterion benchmarks for the expansion and oracle kernels live in
//! `benches/`; this crate has no library code of its own.
