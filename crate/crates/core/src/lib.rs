//! Generic ("inherently private") labeling algorithms for the LOCAL model.
//!
//! Each algorithm computes, per vertex or edge, a set of labels such that any
//! joint choice of one label per entity is a valid solution. The final choice
//! is left to a private uniform draw by the entity itself.

pub mod coverfree;
pub mod decomposition;
pub mod edge;
mod error;
pub mod sim;
pub mod vertex;

pub use crate::coverfree::{
    is_prime, residual_elements, smallest_prime_geq, verify_cover_free, CheckMode, CoverFreeVerdict, FieldError,
    PolyFamily, PrimeField, Word,
};
pub use crate::error::{Error, Result};
pub use crate::sim::{
    derive_seed, derive_stream, run_sync, NodeContext, NodeProgram, Outbox, RandomnessStream, RunReport, RunStats,
    SimError, Status,
};

pub type PrimeField64 = PrimeField<u64>;
pub type PrimeField32 = PrimeField<u32>;
pub type PolyFamily64 = PolyFamily<u64>;
pub type PolyFamily32 = PolyFamily<u32>;
