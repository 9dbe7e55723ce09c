//! Default tolerances and size caps, collected in one table.
//!
//! | constant | value | used by |
//! |---|---|---|
//! | [`TOL_HERM`] | 1e-9 | Hermiticity residual accepted by `Hermitian4` |
//! | [`TOL_ROTATION`] | 1e-9 | orthogonality / determinant residual of `Rotation3` |
//! | [`TOL_UNITARY`] | 1e-9 | unitarity residual of `LocalUnitary` |
//! | [`TOL_CLASSIFY`] | 1e-8 | rank-1/parallelism tests in `classify` |
//! | [`TOL_SYMMETRY`] | 1e-9 | SWAP symmetry test default |
//! | [`TOL_BLOCH_NORM`] | 1e-12 | unit-norm check on Bloch vectors and assignments |
//! | [`DENSE_LIMIT`] | 12 | qubit cap for dense matrix construction |
//! | [`BRUTE_MAXCUT_LIMIT`] | 24 | vertex cap for exhaustive Max-Cut |
//! | [`BRUTE_COLORING_LIMIT`] | 20 | vertex cap for exhaustive 3-coloring |
//! | [`WEIGHT_CAP`] | 1e9 | default bound on Hamiltonian term weights |
//! | [`SOLVER_TOL`] | 1e-10 | per-sweep objective-change stopping threshold |
//! | [`SOLVER_MAX_ITERS`] | 10_000 | sweep/step cap per restart |
//! | [`SUBGRADIENT_ETA0`] | 0.5 | initial step of the η0/√(t+1) schedule |
//! | [`ZERO_FIELD_TOL`] | 1e-12 | effective-field / neighbor-sum cutoff in solvers |
//! | [`SOUNDNESS_GAP_C`] | 1e-3 | c in the default soundness gap ε = c/m² |
//! | [`GRID_RESOLUTION_DEG`] | 5 | default spherical grid resolution |
//! | [`GRID_TIME_LIMIT_SECS`] | 300 | default grid-search time budget |

/// Hermiticity residual tolerance (Frobenius norm of `H - H†`).
pub const TOL_HERM: f64 = 1e-9;

/// Orthogonality and determinant tolerance for 3×3 rotations.
pub const TOL_ROTATION: f64 = 1e-9;

/// Unitarity tolerance for 2×2 local unitaries.
pub const TOL_UNITARY: f64 = 1e-9;

/// Default tolerance for the classification decision procedures.
pub const TOL_CLASSIFY: f64 = 1e-8;

/// Default tolerance for SWAP symmetry classification.
pub const TOL_SYMMETRY: f64 = 1e-9;

/// Unit-norm tolerance for Bloch vectors and vector assignments.
pub const TOL_BLOCH_NORM: f64 = 1e-12;

/// Largest qubit count for which dense 2^n matrices are constructed.
pub const DENSE_LIMIT: usize = 12;

/// Largest vertex count for exhaustive Max-Cut.
pub const BRUTE_MAXCUT_LIMIT: usize = 24;

/// Largest vertex count for exhaustive 3-coloring.
pub const BRUTE_COLORING_LIMIT: usize = 20;

/// Default cap on the magnitude of Hamiltonian term weights.
pub const WEIGHT_CAP: f64 = 1e9;

/// Default absolute objective-change threshold ending a solver run.
pub const SOLVER_TOL: f64 = 1e-10;

/// Default iteration cap per solver restart.
pub const SOLVER_MAX_ITERS: usize = 10_000;

/// Initial step size of the default subgradient schedule η_t = η0/√(t+1).
pub const SUBGRADIENT_ETA0: f64 = 0.5;

/// Below this norm an effective field or neighbor sum is treated as zero
/// and the corresponding vector is left unchanged.
pub const ZERO_FIELD_TOL: f64 = 1e-12;

/// Constant c in the default reduction soundness gap ε = c/m².
pub const SOUNDNESS_GAP_C: f64 = 1e-3;

/// Default spherical grid resolution in degrees.
pub const GRID_RESOLUTION_DEG: u32 = 5;

/// Default grid-search time budget in seconds.
pub const GRID_TIME_LIMIT_SECS: u64 = 300;
