//! Resolution quivers of connected Nakayama algebras.
//!
//! An algebra is given by its admissible sequence (Kupisch series). From it
//! the crate builds the resolution quiver, finds its cycles with their sizes
//! and weights, and recomputes the same cycle data through a chain of left
//! retractions ending at a self-injective algebra. Uniserial module arithmetic
//! (syzygies, cosyzygies, the Auslander-Reiten translate) supplies projective
//! and injective dimensions of simples. [`verify`] sweeps bounded families of
//! sequences and cross-checks everything.

pub mod cli;
pub mod error;
pub mod quiver;
pub mod retraction;
pub mod sequence;
pub mod uniserial;
pub mod verify;

pub use error::{Error, Result};
pub use quiver::{cycle_weight, cycles, ComponentDecomposition, Cycle, ResolutionQuiver};
pub use retraction::{
    chain_cycle_summary, check_commuting_square, left_retract, normalize, pi_map, retraction_chain,
    selfinjective_cycle_data, CycleSummary, RetractionChain, RetractionStep, StepKind,
};
pub use sequence::{wrap, AdmissibleSequence, Kind};
pub use uniserial::{HomDim, Module};
pub use verify::{enumerate_admissible, run_suite, Claim, VerificationReport};
