//! Exact combinatorics for affine Schubert calculus.
//!
//! The crate is organized bottom-up:
//!
//! * [`affine_weyl`]: the affine symmetric group in window notation.
//! * [`cores`]: partitions, `n`-cores, ribbons, strong covers and the maps
//!   `𝔞` and `𝔠`.
//! * [`strips`]: strong strips, horizontal strong strips, `ψ`/`φ` and
//!   ribbon strong strips.
//! * [`abc`]: affine Bruhat countertableaux and `n`-cocharge.
//! * [`symfun`]: symmetric functions over `ℤ[t]` and the dual k-Schur /
//!   k-Schur bases.
//! * [`schubert`]: Pieri rules, structure constants, quantum Monk and the
//!   conjecture checkers.
//!
//! Batch sweeps run on rayon when the `parallel` feature is on (the default);
//! see [`par::Exec`].

pub mod abc;
pub mod affine_weyl;
pub mod cores;
pub mod error;
mod memo;
pub mod par;
pub mod schubert;
pub mod strips;
pub mod sweeps;
pub mod symfun;

pub use affine_weyl::{AffinePermutation, FinitePermutation, Word};
pub use cores::{NCore, Partition, Ribbon};
pub use error::{Error, Result};
