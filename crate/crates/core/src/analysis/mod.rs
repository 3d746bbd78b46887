//! Exhaustive and sampled verification over finite truncations of `S`.
//!
//! The truncation at `p` is the set of `2^p` vectors with support inside
//! `{1..p}`. It is closed under every operation of `S`, so each axiom can be
//! checked on it by brute force.

mod axioms;
mod counting;
mod parallelogram;

pub use axioms::{
    verify_norm_axioms, verify_norm_axioms_with, verify_vector_space_axioms,
    verify_vector_space_axioms_with, Arithmetic, Axiom, AxiomReport, AxiomResult, Counterexample,
    Fault, Faulty, ScanConfig, Standard, Suite,
};
pub use counting::{
    binomial, dense_subset_check, enumerate_smp, verify_countability, AnalysisError,
};
pub use parallelogram::{
    parallelogram, parallelogram_scan, parallelogram_summary, ClassTally, PairClass,
    ParallelogramSummary, ParallelogramVerdict,
};

/// Seed used by every sampled scan unless overridden.
pub const DEFAULT_SEED: u64 = 0x5eed_6f32;
