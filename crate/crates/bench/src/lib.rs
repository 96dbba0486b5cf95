//! Benchmarks for the exact invariant computations live in `benches/`.

/// Genera exercised by the benchmarks.
pub const GENERA: [u32; 3] = [3, 5, 8];
