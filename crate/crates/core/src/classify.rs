//! Complexity classification of 2-qubit term sets.
//!
//! For a fixed set S of 2-qubit terms, the minimum product-state energy
//! problem is in P exactly when every term is 1-local and NP-complete
//! otherwise. The general ground-state problem refines further: NP-complete
//! when a single local basis change makes every term diagonal, StoqMA-complete
//! when it at least aligns every correlation matrix with one axis
//! (`α Z⊗Z + A⊗I + I⊗B` form), and QMA-complete otherwise.
//!
//! The existence conditions are decided by enumerating candidate axes from
//! dominant eigenvectors and 1-local coefficient directions: a correlation
//! matrix that is rank-1 within tolerance determines its axis uniquely, so
//! the enumeration is complete up to tolerance.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::consts::TOL_CLASSIFY;
use crate::pauli::{decompose, Hermitian4, PauliDecomposition, Rotation3, TermSet};

/// Dichotomy for the product-state problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProdComplexity {
    InP,
    NPComplete,
}

/// Tetrachotomy for the ground-state problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LhClass {
    InP,
    NPComplete,
    StoqMAComplete,
    QMAComplete,
}

/// Ground-state classification with the witness rotation, when one exists.
///
/// The witness maps the common axis to `e₃`; it is present exactly for the
/// NP-complete and StoqMA-complete cases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LHComplexity {
    pub class: LhClass,
    pub witness: Option<Rotation3>,
}

/// Whether the correlation matrix vanishes: `‖M‖_F ≤ tol`.
pub fn is_one_local(h: &Hermitian4, tol: f64) -> bool {
    decompose(h).m.norm() <= tol
}

/// In P iff every term is 1-local; NP-complete otherwise.
pub fn classify_prod(s: &TermSet, tol: f64) -> ProdComplexity {
    if s.terms().iter().all(|h| is_one_local(h, tol)) {
        ProdComplexity::InP
    } else {
        ProdComplexity::NPComplete
    }
}

/// Which vectors, besides the correlation matrices, constrain the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisMode {
    CorrelationOnly,
    CorrelationAndLocals,
}

fn rank_one_on_axis(m: &Matrix3<f64>, u: &Vector3<f64>, tol: f64) -> bool {
    let alpha = (m * u).dot(u);
    (m - alpha * u * u.transpose()).norm() <= tol * m.norm().max(1.0)
}

fn parallel_to_axis(v: &Vector3<f64>, u: &Vector3<f64>, tol: f64) -> bool {
    (v - v.dot(u) * u).norm() <= tol * v.norm().max(1.0)
}

/// Searches for a unit axis `u` with every `M_k = α_k uuᵀ` within `tol`
/// and, in [`AxisMode::CorrelationAndLocals`], every listed vector parallel
/// to `u`.
pub fn find_common_axis(
    ms: &[Matrix3<f64>],
    vs: &[Vector3<f64>],
    mode: AxisMode,
    tol: f64,
) -> Option<Vector3<f64>> {
    let mut candidates: Vec<Vector3<f64>> = Vec::new();
    for m in ms {
        if m.norm() <= tol {
            continue;
        }
        let sym = (m + m.transpose()) * 0.5;
        let eig = nalgebra::SymmetricEigen::new(sym);
        let lead = (0..3)
            .max_by(|&a, &b| {
                eig.eigenvalues[a]
                    .abs()
                    .partial_cmp(&eig.eigenvalues[b].abs())
                    .unwrap()
            })
            .unwrap();
        candidates.push(eig.eigenvectors.column(lead).clone_owned());
    }
    if mode == AxisMode::CorrelationAndLocals {
        for v in vs {
            if v.norm() > tol {
                candidates.push(v / v.norm());
            }
        }
    }
    if candidates.is_empty() {
        // Every matrix (and vector, if constrained) is numerically zero, so
        // any axis works.
        candidates.push(Vector3::z());
    }

    candidates.into_iter().find(|u| {
        ms.iter().all(|m| rank_one_on_axis(m, u, tol))
            && (mode == AxisMode::CorrelationOnly || vs.iter().all(|v| parallel_to_axis(v, u, tol)))
    })
}

fn witness_rotation(axis: &Vector3<f64>) -> Rotation3 {
    Rotation3::taking(*axis, Vector3::z())
}

/// Full ground-state classification of a term set.
pub fn classify_lh(s: &TermSet, tol: f64) -> LHComplexity {
    let decs: Vec<PauliDecomposition> = s.terms().iter().map(decompose).collect();

    if decs.iter().all(|d| d.m.norm() <= tol) {
        return LHComplexity {
            class: LhClass::InP,
            witness: None,
        };
    }

    // A nonzero skew correlation matrix can never be α·uuᵀ.
    let skew_blocked = decs
        .iter()
        .any(|d| d.m.norm() > tol && (d.m + d.m.transpose()).norm() <= tol * d.m.norm());

    let ms: Vec<Matrix3<f64>> = decs.iter().map(|d| d.m).collect();
    if !skew_blocked {
        let locals: Vec<Vector3<f64>> = decs.iter().flat_map(|d| [d.v, d.w]).collect();
        if let Some(u) = find_common_axis(&ms, &locals, AxisMode::CorrelationAndLocals, tol) {
            return LHComplexity {
                class: LhClass::NPComplete,
                witness: Some(witness_rotation(&u)),
            };
        }
        if let Some(u) = find_common_axis(&ms, &[], AxisMode::CorrelationOnly, tol) {
            return LHComplexity {
                class: LhClass::StoqMAComplete,
                witness: Some(witness_rotation(&u)),
            };
        }
    }
    LHComplexity {
        class: LhClass::QMAComplete,
        witness: None,
    }
}

/// [`classify_lh`] at the default tolerance.
pub fn classify_lh_default(s: &TermSet) -> LHComplexity {
    classify_lh(s, TOL_CLASSIFY)
}

/// [`classify_prod`] at the default tolerance.
pub fn classify_prod_default(s: &TermSet) -> ProdComplexity {
    classify_prod(s, TOL_CLASSIFY)
}
