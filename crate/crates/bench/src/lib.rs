//! Benchmark-only crate; the measurements live in `benches/laboratory.rs`.
//! Run with `cargo bench -p fixlab-bench`.
