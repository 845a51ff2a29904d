//! Benchmark-only crate; see `benches/complexes.rs`. The library surface
//! just re-exports the fixtures the benchmarks draw from.

pub use pathhom::fixtures::builtin_fixture;
