//! Reduction compiler: graph reductions between Max-Cut / 3-Coloring and
//! stretched linear Vector Max-Cut, and Hamiltonian gadgets that embed a
//! stretched cut objective into product-state energies.
//!
//! Every compiler emits a [`ReductionArtifact`]: the output graph or
//! Hamiltonian, decision thresholds, a total provenance map from output
//! vertices/qubits to their roles, and the gadget parameters used. Ancillas
//! are appended after original vertices in deterministic edge order, so
//! artifacts are reproducible byte for byte.

mod codec;
mod graphs;
mod ham;

pub use codec::{decode_coloring, decode_cut, encode_coloring, encode_cut, objective_value};
pub use graphs::{
    maxcut_to_wmc, threecolor_to_mc3, threecolor_to_wmc_equal, threecolor_to_wmc_twomax,
};
pub use ham::{antisym_gadget_hamiltonian, sym_gadget_hamiltonian};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::hamiltonian::LocalHamiltonian;
use crate::pauli::TermSet;
use crate::Result;

/// Canonical diagonal stretch `W = λ·diag(α,β,γ)` with `1 = α ≥ β ≥ γ ≥ 0`.
///
/// Construction sorts the entries descending and factors out the largest as
/// `scale`; the objective value of an instance is invariant under both
/// operations (sorting permutes assignments, scaling multiplies values).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightMatrix {
    diag: [f64; 3],
    scale: f64,
}

impl WeightMatrix {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a < 0.0 || b < 0.0 || c < 0.0 {
            return Err(Error::DomainError(
                "stretch entries must be finite and non-negative".into(),
            ));
        }
        let mut d = [a, b, c];
        d.sort_by(|x, y| y.partial_cmp(x).unwrap());
        if d[0] <= 0.0 {
            return Err(Error::DomainError(
                "stretch must have at least one nonzero entry".into(),
            ));
        }
        let scale = d[0];
        Ok(Self {
            diag: [1.0, d[1] / scale, d[2] / scale],
            scale,
        })
    }

    pub fn identity() -> Self {
        Self {
            diag: [1.0, 1.0, 1.0],
            scale: 1.0,
        }
    }

    /// Canonical entries, `1 = α ≥ β ≥ γ ≥ 0`.
    pub fn diag(&self) -> [f64; 3] {
        self.diag
    }

    /// The factored-out largest raw entry λ.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Whether `α` strictly dominates (`1 > β`).
    pub fn has_unique_max(&self) -> bool {
        self.diag[1] < 1.0
    }

    /// `‖W u‖` with the canonical diagonal.
    pub fn stretched_norm(&self, u: &nalgebra::Vector3<f64>) -> f64 {
        let d = self.diag;
        ((d[0] * u.x).powi(2) + (d[1] * u.y).powi(2) + (d[2] * u.z).powi(2)).sqrt()
    }
}

/// Role of an output vertex or qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    /// A vertex of the source graph (same index).
    Original { v: usize },
    /// Ancilla completing the clique gadget of a source edge; for the
    /// Hamiltonian gadgets, one of the two ancilla qubits of an edge gadget.
    CliqueAncilla { edge: (usize, usize) },
    /// Apex of a triangle adjoined to the given edge (source-graph edge for
    /// the triangle reduction, output-graph edge for adjoined triangles).
    TriangleAncilla { edge: (usize, usize) },
    /// Leaf `i` of the star centered on output vertex `v`.
    StarLeaf { v: usize, i: usize },
    /// Clique vertex carrying the edge to the sink.
    SinkLink { edge: (usize, usize) },
    /// The shared sink vertex.
    Sink,
}

/// Which reduction produced an artifact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionKind {
    MaxCutToWmc,
    ThreeColorToWmcEqual,
    ThreeColorToWmcTwoMax,
    ThreeColorToMc3,
    AntisymGadget,
    SymGadget,
}

/// Compiled instance: a graph or a Hamiltonian.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ReductionOutput {
    Graph(Graph),
    Hamiltonian {
        hamiltonian: LocalHamiltonian,
        terms: TermSet,
    },
}

/// Gadget parameters recorded with an artifact.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct GadgetParams {
    /// Star size K, when stars are inserted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Soundness gap ε between the YES and NO thresholds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    /// Stretch the output graph is to be cut under (graph reductions), or
    /// the stretch realized by the gadget (Hamiltonian gadgets).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<WeightMatrix>,
    /// Max-Cut decision target C.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut_target: Option<u64>,
    /// For Hamiltonian gadgets: minimum product energy equals
    /// `−energy_per_cut_value ×` the (½-normalized) stretched cut value of
    /// the source graph under `weight`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy_per_cut_value: Option<f64>,
}

/// A compiled reduction instance with thresholds, provenance, and parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionArtifact {
    pub kind: ReductionKind,
    /// The source graph the reduction was compiled from.
    pub source: Graph,
    pub output: ReductionOutput,
    /// Objective value reached by every honest forward encoding (graph
    /// reductions), or the energy magnitude `|min product energy|` promised
    /// in the complete case (Hamiltonian gadgets, when source thresholds
    /// were supplied).
    pub threshold_yes: Option<f64>,
    /// Soundness cutoff: values strictly above it certify the YES case.
    pub threshold_no: Option<f64>,
    /// Role of each output vertex (or qubit), indexed by output id.
    pub provenance: Vec<Role>,
    pub params: GadgetParams,
}

impl ReductionArtifact {
    /// The output graph, or an error for Hamiltonian artifacts.
    pub fn output_graph(&self) -> Result<&Graph> {
        match &self.output {
            ReductionOutput::Graph(g) => Ok(g),
            ReductionOutput::Hamiltonian { .. } => {
                Err(Error::WrongArtifact("expected a graph output".into()))
            }
        }
    }

    /// The output Hamiltonian, or an error for graph artifacts.
    pub fn output_hamiltonian(&self) -> Result<(&LocalHamiltonian, &TermSet)> {
        match &self.output {
            ReductionOutput::Hamiltonian { hamiltonian, terms } => Ok((hamiltonian, terms)),
            ReductionOutput::Graph(_) => {
                Err(Error::WrongArtifact("expected a Hamiltonian output".into()))
            }
        }
    }

    /// Output size (vertices or qubits); equals the provenance length.
    pub fn output_size(&self) -> usize {
        match &self.output {
            ReductionOutput::Graph(g) => g.n,
            ReductionOutput::Hamiltonian { hamiltonian, .. } => hamiltonian.n,
        }
    }
}

/// Default soundness gap ε = c/m² (zero for edgeless sources).
pub fn default_gap(m: usize) -> f64 {
    if m == 0 {
        0.0
    } else {
        crate::consts::SOUNDNESS_GAP_C / (m * m) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_matrix_canonicalizes() {
        let w = WeightMatrix::new(0.5, 2.0, 1.0).unwrap();
        assert_eq!(w.diag(), [1.0, 0.5, 0.25]);
        assert_eq!(w.scale(), 2.0);
        assert!(w.has_unique_max());

        let i = WeightMatrix::new(1.0, 1.0, 1.0).unwrap();
        assert!(!i.has_unique_max());

        assert!(WeightMatrix::new(0.0, 0.0, 0.0).is_err());
        assert!(WeightMatrix::new(-1.0, 1.0, 0.0).is_err());
    }
}
