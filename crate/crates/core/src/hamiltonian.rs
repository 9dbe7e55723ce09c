//! Weighted 2-local Hamiltonians and product-state energies.
//!
//! A placement `(t, a, b, w)` applies term `t` of a [`TermSet`] to the
//! ordered qubit pair `(a, b)` with weight `w`; qubit 0 is the leftmost
//! tensor factor. The energy of a pure product state with Bloch vectors
//! `r_q` is
//!
//! ```text
//! Σ w · (r_aᵀ M r_b + v·r_a + w·r_b + c)
//! ```
//!
//! summed over placements, which equals `⟨ψ|H|ψ⟩`. Dense 2ⁿ matrices are
//! available below [`crate::consts::DENSE_LIMIT`] qubits for exact
//! cross-checks.

use nalgebra::{DMatrix, DVector, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::consts::{DENSE_LIMIT, TOL_BLOCH_NORM, WEIGHT_CAP};
use crate::error::Error;
use crate::pauli::{decompose, Hermitian4, PauliDecomposition, TermSet};
use crate::Result;

type C = Complex64;

/// One weighted, ordered application of a term to a qubit pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Placement {
    /// Index into the accompanying [`TermSet`].
    pub t: usize,
    pub a: usize,
    pub b: usize,
    pub w: f64,
}

/// A 2-local Hamiltonian given as a weighted interaction list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalHamiltonian {
    pub n: usize,
    pub placements: Vec<Placement>,
}

impl LocalHamiltonian {
    /// Validates indices and weights against `weight_cap`.
    pub fn new_with_cap(
        n: usize,
        placements: Vec<Placement>,
        n_terms: usize,
        weight_cap: f64,
    ) -> Result<Self> {
        for p in &placements {
            if p.a == p.b {
                return Err(Error::InvalidInput(format!(
                    "placement touches qubit {} twice",
                    p.a
                )));
            }
            if p.a >= n || p.b >= n {
                return Err(Error::InvalidInput(format!(
                    "placement ({},{}) out of range for n={n}",
                    p.a, p.b
                )));
            }
            if p.t >= n_terms {
                return Err(Error::InvalidInput(format!(
                    "term index {} out of range for {} terms",
                    p.t, n_terms
                )));
            }
            if !p.w.is_finite() || p.w.abs() > weight_cap {
                return Err(Error::InvalidInput(format!(
                    "weight {} exceeds cap {weight_cap}",
                    p.w
                )));
            }
        }
        Ok(Self { n, placements })
    }

    pub fn new(n: usize, placements: Vec<Placement>, n_terms: usize) -> Result<Self> {
        Self::new_with_cap(n, placements, n_terms, WEIGHT_CAP)
    }

    /// Scales every weight in place.
    pub fn scale_weights(&mut self, factor: f64) {
        for p in &mut self.placements {
            p.w *= factor;
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ProductStateJson {
    bloch: Vec<[f64; 3]>,
}

/// One unit Bloch vector per qubit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ProductStateJson", into = "ProductStateJson")]
pub struct ProductState {
    bloch: Vec<Vector3<f64>>,
}

impl ProductState {
    pub fn new(bloch: Vec<Vector3<f64>>) -> Result<Self> {
        for (q, r) in bloch.iter().enumerate() {
            if (r.norm() - 1.0).abs() > TOL_BLOCH_NORM {
                return Err(Error::InvalidInput(format!(
                    "Bloch vector {q} has norm {} (must be 1 within {TOL_BLOCH_NORM:e})",
                    r.norm()
                )));
            }
        }
        Ok(Self { bloch })
    }

    /// Normalizes each vector before wrapping; rejects near-zero vectors.
    pub fn normalized(bloch: Vec<Vector3<f64>>) -> Result<Self> {
        let mut out = Vec::with_capacity(bloch.len());
        for (q, r) in bloch.into_iter().enumerate() {
            let n = r.norm();
            if n < 1e-9 {
                return Err(Error::InvalidInput(format!(
                    "Bloch vector {q} is numerically zero"
                )));
            }
            out.push(r / n);
        }
        Ok(Self { bloch: out })
    }

    /// All qubits in |0⟩ (Bloch vector +z).
    pub fn all_up(n: usize) -> Self {
        Self {
            bloch: vec![Vector3::z(); n],
        }
    }

    pub fn bloch(&self) -> &[Vector3<f64>] {
        &self.bloch
    }

    /// Unvalidated constructor for off-sphere multilinearity probes in tests.
    #[doc(hidden)]
    pub fn raw_unchecked(bloch: Vec<Vector3<f64>>) -> Self {
        Self { bloch }
    }

    pub fn len(&self) -> usize {
        self.bloch.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bloch.is_empty()
    }

    pub fn set(&mut self, q: usize, r: Vector3<f64>) {
        self.bloch[q] = r;
    }
}

impl TryFrom<ProductStateJson> for ProductState {
    type Error = Error;

    fn try_from(j: ProductStateJson) -> Result<Self> {
        Self::new(
            j.bloch
                .into_iter()
                .map(|[x, y, z]| Vector3::new(x, y, z))
                .collect(),
        )
    }
}

impl From<ProductState> for ProductStateJson {
    fn from(s: ProductState) -> Self {
        ProductStateJson {
            bloch: s.bloch.iter().map(|r| [r.x, r.y, r.z]).collect(),
        }
    }
}

/// On-disk Hamiltonian format: terms and placements in one document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianFile {
    pub n: usize,
    pub terms: Vec<Hermitian4>,
    pub placements: Vec<Placement>,
}

impl HamiltonianFile {
    pub fn from_parts(h: &LocalHamiltonian, terms: &TermSet) -> Self {
        Self {
            n: h.n,
            terms: terms.terms().to_vec(),
            placements: h.placements.clone(),
        }
    }

    pub fn split(self) -> Result<(LocalHamiltonian, TermSet)> {
        let n_terms = self.terms.len();
        let terms = TermSet::new(self.terms)?;
        let h = LocalHamiltonian::new(self.n, self.placements, n_terms)?;
        Ok((h, terms))
    }
}

/// A Hamiltonian together with decision thresholds `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub hamiltonian: LocalHamiltonian,
    pub a: f64,
    pub b: f64,
}

impl ProblemInstance {
    pub fn new(hamiltonian: LocalHamiltonian, a: f64, b: f64) -> Result<Self> {
        if b < a {
            return Err(Error::InvalidInput(format!(
                "thresholds must satisfy b ≥ a, got a={a}, b={b}"
            )));
        }
        Ok(Self { hamiltonian, a, b })
    }
}

/// Pre-decomposed terms, for repeated energy evaluation.
pub struct DecomposedTerms {
    decs: Vec<PauliDecomposition>,
}

impl DecomposedTerms {
    pub fn new(terms: &TermSet) -> Self {
        Self {
            decs: terms.terms().iter().map(decompose).collect(),
        }
    }

    pub fn get(&self, idx: usize) -> &PauliDecomposition {
        &self.decs[idx]
    }
}

// ---------------------------------------------------------------------------
// Energy evaluation
// ---------------------------------------------------------------------------

fn check_state_len(h: &LocalHamiltonian, s: &ProductState) -> Result<()> {
    if s.len() != h.n {
        return Err(Error::DimensionMismatch(format!(
            "state has {} Bloch vectors, Hamiltonian has {} qubits",
            s.len(),
            h.n
        )));
    }
    Ok(())
}

/// Product-state energy from pre-decomposed terms.
pub fn product_energy_decomposed(
    h: &LocalHamiltonian,
    decs: &DecomposedTerms,
    s: &ProductState,
) -> Result<f64> {
    check_state_len(h, s)?;
    let bloch = s.bloch();
    let mut total = 0.0;
    for p in &h.placements {
        let d = decs.get(p.t);
        let (ra, rb) = (&bloch[p.a], &bloch[p.b]);
        total += p.w * ((d.m * rb).dot(ra) + d.v.dot(ra) + d.w.dot(rb) + d.c);
    }
    Ok(total)
}

/// `⟨ψ|H|ψ⟩` for the product state with the given Bloch vectors, evaluated
/// term-by-term through the Pauli decomposition.
pub fn product_energy(h: &LocalHamiltonian, terms: &TermSet, s: &ProductState) -> Result<f64> {
    product_energy_decomposed(h, &DecomposedTerms::new(terms), s)
}

// ---------------------------------------------------------------------------
// Dense construction
// ---------------------------------------------------------------------------

fn check_dense_limit(n: usize) -> Result<()> {
    if n > DENSE_LIMIT {
        return Err(Error::TooLarge(format!(
            "n={n} exceeds dense limit {DENSE_LIMIT}"
        )));
    }
    Ok(())
}

/// [`dense_matrix`] with an explicit qubit cap instead of the default.
pub fn dense_matrix_with_limit(
    h: &LocalHamiltonian,
    terms: &TermSet,
    limit: usize,
) -> Result<DMatrix<C>> {
    if h.n > limit {
        return Err(Error::TooLarge(format!("n={} exceeds limit {limit}", h.n)));
    }
    let dim = 1usize << h.n;
    let mut out = DMatrix::<C>::zeros(dim, dim);
    for p in &h.placements {
        let t = terms
            .get(p.t)
            .ok_or_else(|| Error::InvalidInput(format!("term index {} out of range", p.t)))?;
        embed_term(&mut out, t, p.a, p.b, p.w, h.n);
    }
    Ok(out)
}

/// Bit of qubit `q` in basis-state index `idx` (qubit 0 = leftmost factor).
#[inline]
fn qubit_bit(idx: usize, q: usize, n: usize) -> usize {
    (idx >> (n - 1 - q)) & 1
}

/// Dense 2ⁿ×2ⁿ matrix: sum of each placement's term embedded on its ordered
/// qubit pair, identity elsewhere.
pub fn dense_matrix(h: &LocalHamiltonian, terms: &TermSet) -> Result<DMatrix<C>> {
    dense_matrix_with_limit(h, terms, DENSE_LIMIT)
}

fn embed_term(out: &mut DMatrix<C>, term: &Hermitian4, a: usize, b: usize, w: f64, n: usize) {
    let dim = 1usize << n;
    let tm = term.matrix();
    let wa = C::new(w, 0.0);
    let bit_a = 1usize << (n - 1 - a);
    let bit_b = 1usize << (n - 1 - b);
    for col in 0..dim {
        let ca = qubit_bit(col, a, n);
        let cb = qubit_bit(col, b, n);
        let col_sub = (ca << 1) | cb;
        let base = col & !(bit_a | bit_b);
        for ra in 0..2 {
            for rb in 0..2 {
                let row = base | (ra * bit_a) | (rb * bit_b);
                let row_sub = (ra << 1) | rb;
                let entry = tm[(row_sub, col_sub)];
                if entry != C::new(0.0, 0.0) {
                    out[(row, col)] += wa * entry;
                }
            }
        }
    }
}

/// Minimum eigenvalue of the dense matrix.
pub fn exact_min_energy(h: &LocalHamiltonian, terms: &TermSet) -> Result<f64> {
    let m = dense_matrix(h, terms)?;
    if m.nrows() == 0 {
        return Ok(0.0);
    }
    let eigs = m.symmetric_eigenvalues();
    Ok(eigs.iter().cloned().fold(f64::INFINITY, f64::min))
}

/// Single-qubit state vector for a unit Bloch vector: the +1 eigenvector of
/// `r·σ`, phase fixed so the first nonzero amplitude is real positive.
pub fn bloch_to_state(r: &Vector3<f64>) -> [C; 2] {
    let (x, y, z) = (r.x, r.y, r.z);
    if z > 0.0 {
        // (1+z, x+iy) / √(2(1+z)); first amplitude already real positive.
        let norm = (2.0 * (1.0 + z)).sqrt();
        [C::new((1.0 + z) / norm, 0.0), C::new(x / norm, y / norm)]
    } else {
        // (x−iy, 1−z) / √(2(1−z)), then rotate the global phase.
        let norm = (2.0 * (1.0 - z)).sqrt();
        let first = C::new(x / norm, -y / norm);
        let second = C::new((1.0 - z) / norm, 0.0);
        if first.norm() > 1e-15 {
            let phase = first / first.norm();
            [first / phase, second / phase]
        } else {
            [first, second]
        }
    }
}

/// Full 2ⁿ state vector of the product state.
pub fn product_state_vector(s: &ProductState) -> Result<DVector<C>> {
    check_dense_limit(s.len())?;
    let mut psi = DVector::from_element(1, C::new(1.0, 0.0));
    for r in s.bloch() {
        let q = bloch_to_state(r);
        let mut next = DVector::zeros(psi.len() * 2);
        for (i, amp) in psi.iter().enumerate() {
            next[2 * i] = amp * q[0];
            next[2 * i + 1] = amp * q[1];
        }
        psi = next;
    }
    Ok(psi)
}

/// `⟨ψ|H|ψ⟩` computed through the dense matrix; the cross-check oracle for
/// [`product_energy`].
pub fn expectation_via_dense(
    h: &LocalHamiltonian,
    terms: &TermSet,
    s: &ProductState,
) -> Result<f64> {
    check_state_len(h, s)?;
    let m = dense_matrix(h, terms)?;
    let psi = product_state_vector(s)?;
    let hpsi = &m * &psi;
    Ok(psi.dotc(&hpsi).re)
}
