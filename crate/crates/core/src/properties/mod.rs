//! Checkers for the strength and structural properties of translations,
//! the table of proven claims, and the sweeps that check them.

mod checks;
mod claims;
pub mod counterexamples;
mod structural;
mod sweep;

pub use checks::{
    check_covering, check_embedding, check_exact, check_faithful, check_monotone_pair,
    check_modular_pair, check_weakly_exact, check_weakly_faithful, Verdicts,
};
pub use claims::{all_claims, claim_matrix, find_claim, supplementary_claims, Claim, Strength, Structural};
pub use structural::{
    non_modular_witness, run_structural, sample_pair, StructuralConfig,
};
pub use sweep::{
    explore, run_claims, run_sweep, semantics_laws, CheckReport, ExploreReport, Failure,
    SweepConfig, SweepResult,
};

#[cfg(test)]
mod tests;
