//! Teleportation of a qubit through the resource family
//! `(1+α)/2 |Ψ⁻⟩⟨Ψ⁻| + (1−α)/2 |Ψ⁺⟩⟨Ψ⁺|`, α ∈ [0, 1].
//!
//! At α = 1 this is ideal teleportation; at α = 0 the resource is a classical
//! anti-correlated bit pair and the protocol reduces to a one-time pad. In
//! between, the teleported state keeps its populations and has its coherences
//! scaled by α.

pub mod classical_otp;
pub mod cli;
pub mod densemat;
pub mod error;
pub mod experiment;
pub mod qstate;
pub mod rng;
pub mod teleport;

pub use error::{Error, Result};
