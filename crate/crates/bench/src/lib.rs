//! Benchmark fixtures.

/// q-orders swept by the expansion benchmarks.
pub const EXPANSION_ORDERS: [u32; 3] = [4, 8, 12];

/// Dirichlet term counts swept by the L-function benchmarks.
pub const DIRICHLET_TERMS: [usize; 2] = [10_000, 100_000];
