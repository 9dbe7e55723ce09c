//! Product-state energy problems for 2-local Hamiltonians.
//!
//! A 2-qubit Hermitian term decomposes over the Pauli basis as
//!
//! ```text
//! H = Σ M_ij σ_i⊗σ_j + Σ_k (v_k σ_k⊗I + w_k I⊗σ_k) + c I⊗I
//! ```
//!
//! and the expectation of a pure product state factors through the Bloch
//! vectors of its qubits, so minimizing energy over product states is a
//! constrained optimization over unit 3-vectors. This crate provides:
//!
//! - [`pauli`] — exact decomposition, SWAP symmetry tests, local-rotation
//!   conjugation, and symmetric/antisymmetric normal forms;
//! - [`classify`] — decision procedures placing a term set's ground-state
//!   and product-state problems into P / NP / StoqMA / QMA classes;
//! - [`hamiltonian`] — weighted 2-local Hamiltonians, Bloch-vector energy
//!   evaluation, and dense matrices for exact cross-checks;
//! - [`gadgets`] — reductions between Max-Cut, 3-Coloring, stretched linear
//!   Vector Max-Cut, and product-state Hamiltonian instances, with forward
//!   encoders and rounding decoders;
//! - [`solvers`] — coordinate ascent and projected subgradient heuristics
//!   with multi-restart orchestration;
//! - [`oracle`] — brute-force Max-Cut / 3-coloring and spherical grid
//!   search for desk-scale ground truth;
//! - [`geometry`] — inscribed-simplex bounds (maximal perimeters, near-
//!   regularity, shared-vertex rigidity) as sampled numerical checks.
//!
//! All numeric defaults live in [`consts`]. Every operation is a pure
//! function over immutable values, so everything is safe to share across
//! threads; stochastic routines take explicit seeds and fixed seeds give
//! identical results on any platform.

// Indexed loops over parallel small arrays read better than zipped
// iterators in the numeric kernels here.
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod consts;
pub mod error;
pub mod gadgets;
pub mod geometry;
pub mod graph;
pub mod hamiltonian;
pub mod oracle;
pub mod pauli;
pub mod rng;
pub mod solvers;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
