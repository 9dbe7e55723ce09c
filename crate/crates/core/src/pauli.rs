//! Exact algebra of 2-qubit Hermitian terms.
//!
//! Every 2-qubit Hermitian matrix expands in the Pauli basis as
//!
//! ```text
//! H = Σ_{ij} M_ij σ_i⊗σ_j + Σ_k (v_k σ_k⊗I + w_k I⊗σ_k) + c I⊗I
//! ```
//!
//! with real coefficients; the 3×3 block `M` is the correlation matrix.
//! Simultaneous conjugation by a single-qubit unitary `U` acts on the
//! coefficients as `(M, v, w) → (R M Rᵀ, R v, R w)` for the `R ∈ SO(3)`
//! whose Bloch-sphere action corresponds to `U`, which is what makes the
//! normal forms here possible: symmetric `M` diagonalizes, and nonzero
//! skew-symmetric `M` reduces to a single `a(σ₁σ₃ − σ₃σ₁)` pair.

use nalgebra::{Matrix2, Matrix3, Matrix4, Vector3};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::consts::{TOL_HERM, TOL_ROTATION, TOL_SYMMETRY, TOL_UNITARY};
use crate::error::Error;
use crate::Result;

type C = Complex64;

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// Pauli matrix σ_k for k ∈ {1,2,3} = {X,Y,Z}.
pub fn sigma(k: usize) -> Matrix2<C> {
    match k {
        1 => Matrix2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)),
        2 => Matrix2::new(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)),
        3 => Matrix2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)),
        _ => panic!("Pauli index must be 1, 2, or 3"),
    }
}

/// 2×2 identity.
pub fn id2() -> Matrix2<C> {
    Matrix2::identity()
}

/// σ_i ⊗ σ_j with index 0 meaning the identity.
pub fn pauli_pair(i: usize, j: usize) -> Matrix4<C> {
    let a = if i == 0 { id2() } else { sigma(i) };
    let b = if j == 0 { id2() } else { sigma(j) };
    a.kronecker(&b)
}

/// The SWAP operator on two qubits.
pub fn swap_matrix() -> Matrix4<C> {
    let mut m = Matrix4::zeros();
    m[(0, 0)] = c(1.0, 0.0);
    m[(1, 2)] = c(1.0, 0.0);
    m[(2, 1)] = c(1.0, 0.0);
    m[(3, 3)] = c(1.0, 0.0);
    m
}

fn hermitian_residual(m: &Matrix4<C>) -> f64 {
    (m - m.adjoint()).norm()
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct Hermitian4Json {
    matrix: [[[f64; 2]; 4]; 4],
}

/// A 2-qubit Hermitian term, validated at construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Hermitian4Json", into = "Hermitian4Json")]
pub struct Hermitian4 {
    entries: Matrix4<C>,
}

impl Hermitian4 {
    /// Validates `‖m − m†‖_F ≤ tol` and wraps the matrix.
    pub fn new_with_tol(m: Matrix4<C>, tol: f64) -> Result<Self> {
        let residual = hermitian_residual(&m);
        if residual > tol {
            return Err(Error::NotHermitian { residual, tol });
        }
        Ok(Self { entries: m })
    }

    pub fn new(m: Matrix4<C>) -> Result<Self> {
        Self::new_with_tol(m, TOL_HERM)
    }

    pub fn matrix(&self) -> &Matrix4<C> {
        &self.entries
    }

    pub fn zero() -> Self {
        Self {
            entries: Matrix4::zeros(),
        }
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.entries.norm()
    }
}

impl TryFrom<Hermitian4Json> for Hermitian4 {
    type Error = Error;

    fn try_from(j: Hermitian4Json) -> Result<Self> {
        let mut m = Matrix4::zeros();
        for (i, row) in j.matrix.iter().enumerate() {
            for (k, &[re, im]) in row.iter().enumerate() {
                m[(i, k)] = c(re, im);
            }
        }
        Hermitian4::new(m)
    }
}

impl From<Hermitian4> for Hermitian4Json {
    fn from(h: Hermitian4) -> Self {
        let mut matrix = [[[0.0; 2]; 4]; 4];
        for i in 0..4 {
            for k in 0..4 {
                let e = h.entries[(i, k)];
                matrix[i][k] = [e.re, e.im];
            }
        }
        Hermitian4Json { matrix }
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    #[serde(rename = "M")]
    m: [[f64; 3]; 3],
    v: [f64; 3],
    w: [f64; 3],
    c: f64,
}

/// Pauli-basis coefficients of a 2-qubit Hermitian term.
///
/// The identity coefficient is named `c` here; the 1-local coefficient
/// vectors keep their names `v` (first qubit) and `w` (second qubit).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "DecompositionJson", into = "DecompositionJson")]
pub struct PauliDecomposition {
    pub m: Matrix3<f64>,
    pub v: Vector3<f64>,
    pub w: Vector3<f64>,
    pub c: f64,
}

impl From<DecompositionJson> for PauliDecomposition {
    fn from(j: DecompositionJson) -> Self {
        Self {
            m: Matrix3::from_fn(|r, cix| j.m[r][cix]),
            v: Vector3::new(j.v[0], j.v[1], j.v[2]),
            w: Vector3::new(j.w[0], j.w[1], j.w[2]),
            c: j.c,
        }
    }
}

impl From<PauliDecomposition> for DecompositionJson {
    fn from(d: PauliDecomposition) -> Self {
        DecompositionJson {
            m: [
                [d.m[(0, 0)], d.m[(0, 1)], d.m[(0, 2)]],
                [d.m[(1, 0)], d.m[(1, 1)], d.m[(1, 2)]],
                [d.m[(2, 0)], d.m[(2, 1)], d.m[(2, 2)]],
            ],
            v: [d.v[0], d.v[1], d.v[2]],
            w: [d.w[0], d.w[1], d.w[2]],
            c: d.c,
        }
    }
}

/// A proper rotation in SO(3), validated at construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[[f64; 3]; 3]", into = "[[f64; 3]; 3]")]
pub struct Rotation3 {
    r: Matrix3<f64>,
}

impl Rotation3 {
    pub fn new(r: Matrix3<f64>) -> Result<Self> {
        Self::new_with_tol(r, TOL_ROTATION)
    }

    pub fn new_with_tol(r: Matrix3<f64>, tol: f64) -> Result<Self> {
        let ortho = (r * r.transpose() - Matrix3::identity()).norm();
        let det = (r.determinant() - 1.0).abs();
        let residual = ortho.max(det);
        if residual > tol {
            return Err(Error::InvalidRotation { residual });
        }
        Ok(Self { r })
    }

    pub fn identity() -> Self {
        Self {
            r: Matrix3::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.r
    }

    pub fn inverse(&self) -> Self {
        Self {
            r: self.r.transpose(),
        }
    }

    /// Rotation about `axis` (normalized internally) by `angle` radians.
    pub fn from_axis_angle(axis: Vector3<f64>, angle: f64) -> Self {
        let r = nalgebra::Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(axis), angle);
        Self { r: r.into_inner() }
    }

    /// Some proper rotation sending `from` to `to` (both assumed unit).
    pub fn taking(from: Vector3<f64>, to: Vector3<f64>) -> Self {
        if let Some(r) = nalgebra::Rotation3::rotation_between(&from, &to) {
            return Self { r: r.into_inner() };
        }
        // Antiparallel: rotate by π about any axis orthogonal to `from`.
        let helper = if from.x.abs() < 0.9 {
            Vector3::x()
        } else {
            Vector3::y()
        };
        let axis = from.cross(&helper).normalize();
        Self::from_axis_angle(axis, std::f64::consts::PI)
    }
}

impl TryFrom<[[f64; 3]; 3]> for Rotation3 {
    type Error = Error;

    fn try_from(rows: [[f64; 3]; 3]) -> Result<Self> {
        Rotation3::new(Matrix3::from_fn(|r, c| rows[r][c]))
    }
}

impl From<Rotation3> for [[f64; 3]; 3] {
    fn from(r: Rotation3) -> Self {
        let m = r.r;
        [
            [m[(0, 0)], m[(0, 1)], m[(0, 2)]],
            [m[(1, 0)], m[(1, 1)], m[(1, 2)]],
            [m[(2, 0)], m[(2, 1)], m[(2, 2)]],
        ]
    }
}

/// A single-qubit unitary, validated at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalUnitary {
    u: Matrix2<C>,
}

impl LocalUnitary {
    pub fn new(u: Matrix2<C>) -> Result<Self> {
        let residual = (u * u.adjoint() - Matrix2::identity()).norm();
        if residual > TOL_UNITARY {
            return Err(Error::InvalidUnitary { residual });
        }
        Ok(Self { u })
    }

    pub fn matrix(&self) -> &Matrix2<C> {
        &self.u
    }

    /// U ⊗ U as a 4×4 matrix.
    pub fn two_fold(&self) -> Matrix4<C> {
        self.u.kronecker(&self.u)
    }
}

/// A nonempty, validated list of 2-qubit Hermitian terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermSet {
    terms: Vec<Hermitian4>,
}

impl TermSet {
    pub fn new(terms: Vec<Hermitian4>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("term set must be nonempty".into()));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[Hermitian4] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, idx: usize) -> Option<&Hermitian4> {
        self.terms.get(idx)
    }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Expands a term in the Pauli basis.
///
/// `M_ij = Tr(h σ_i⊗σ_j)/4`, `v_k = Tr(h σ_k⊗I)/4`, `w_k = Tr(h I⊗σ_k)/4`,
/// `c = Tr(h)/4`. Imaginary residues (below the Hermiticity tolerance by
/// construction) are dropped.
pub fn decompose(h: &Hermitian4) -> PauliDecomposition {
    let trace_quarter = |basis: Matrix4<C>| -> f64 {
        let prod = h.matrix() * basis;
        (prod.trace() / c(4.0, 0.0)).re
    };
    let m = Matrix3::from_fn(|i, j| trace_quarter(pauli_pair(i + 1, j + 1)));
    let v = Vector3::from_fn(|k, _| trace_quarter(pauli_pair(k + 1, 0)));
    let w = Vector3::from_fn(|k, _| trace_quarter(pauli_pair(0, k + 1)));
    let c = trace_quarter(Matrix4::identity());
    PauliDecomposition { m, v, w, c }
}

/// Rebuilds the dense 4×4 matrix from Pauli coefficients; exact inverse of
/// [`decompose`].
pub fn recompose(d: &PauliDecomposition) -> Hermitian4 {
    let mut m: Matrix4<C> = Matrix4::identity() * c(d.c, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            m += pauli_pair(i + 1, j + 1) * c(d.m[(i, j)], 0.0);
        }
        m += pauli_pair(i + 1, 0) * c(d.v[i], 0.0);
        m += pauli_pair(0, i + 1) * c(d.w[i], 0.0);
    }
    Hermitian4 { entries: m }
}

/// Conjugates by SWAP; on decompositions this transposes `M` and exchanges
/// `v ↔ w`.
pub fn swap_conjugate(h: &Hermitian4) -> Hermitian4 {
    let s = swap_matrix();
    Hermitian4 {
        entries: s * h.matrix() * s,
    }
}

/// SWAP symmetry class of a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryKind {
    Symmetric,
    Antisymmetric,
    Neither,
}

/// Classifies `h` by comparing against its SWAP conjugate. The zero matrix
/// reports `Symmetric`.
pub fn symmetry_kind(h: &Hermitian4, tol: f64) -> SymmetryKind {
    let s = swap_conjugate(h);
    if (h.matrix() - s.matrix()).norm() <= tol {
        SymmetryKind::Symmetric
    } else if (h.matrix() + s.matrix()).norm() <= tol {
        SymmetryKind::Antisymmetric
    } else {
        SymmetryKind::Neither
    }
}

/// Default-tolerance variant of [`symmetry_kind`].
pub fn symmetry_kind_default(h: &Hermitian4) -> SymmetryKind {
    symmetry_kind(h, TOL_SYMMETRY)
}

/// `h + SWAP h SWAP`, always symmetric.
pub fn symmetrize(h: &Hermitian4) -> Hermitian4 {
    let s = swap_conjugate(h);
    Hermitian4 {
        entries: h.matrix() + s.matrix(),
    }
}

/// Applies a Bloch-frame rotation: `(M, v, w, c) → (R M Rᵀ, R v, R w, c)`.
pub fn rotate_decomposition(d: &PauliDecomposition, rot: &Rotation3) -> PauliDecomposition {
    let r = rot.matrix();
    PauliDecomposition {
        m: r * d.m * r.transpose(),
        v: r * d.v,
        w: r * d.w,
        c: d.c,
    }
}

/// A unit-determinant 2×2 unitary whose adjoint action on the Bloch sphere
/// equals `rot`: `U (x·σ) U† = (R x)·σ`. Either sheet of the SU(2) double
/// cover may be returned.
pub fn unitary_from_rotation(rot: &Rotation3) -> LocalUnitary {
    let na_rot = nalgebra::Rotation3::from_matrix_unchecked(*rot.matrix());
    let q = nalgebra::UnitQuaternion::from_rotation_matrix(&na_rot);
    // q = cos(θ/2) + sin(θ/2)(n·ijk)  ↦  U = cos(θ/2) I − i sin(θ/2)(n·σ)
    let (w, x, y, z) = (q.w, q.i, q.j, q.k);
    let u = Matrix2::new(c(w, -z), c(-y, -x), c(y, -x), c(w, z));
    LocalUnitary { u }
}

/// Diagonalizes a symmetric correlation matrix.
///
/// Returns `(R, d')` with `d' = rotate_decomposition(d, R)` and `M'`
/// diagonal, diagonal entries sorted by descending absolute value (ties by
/// descending signed value).
pub fn normal_form_symmetric(d: &PauliDecomposition) -> Result<(Rotation3, PauliDecomposition)> {
    normal_form_symmetric_with_tol(d, TOL_SYMMETRY)
}

/// [`normal_form_symmetric`] with an explicit symmetry tolerance.
pub fn normal_form_symmetric_with_tol(
    d: &PauliDecomposition,
    tol: f64,
) -> Result<(Rotation3, PauliDecomposition)> {
    let residual = (d.m - d.m.transpose()).norm();
    if residual > tol {
        return Err(Error::NotSymmetricCorrelation { residual });
    }
    let sym = (d.m + d.m.transpose()) * 0.5;
    let eig = nalgebra::SymmetricEigen::new(sym);

    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| {
        let (la, lb) = (eig.eigenvalues[a], eig.eigenvalues[b]);
        lb.abs()
            .partial_cmp(&la.abs())
            .unwrap()
            .then(lb.partial_cmp(&la).unwrap())
    });

    let mut r = Matrix3::zeros();
    for (row, &idx) in order.iter().enumerate() {
        let mut col = eig.eigenvectors.column(idx).clone_owned();
        // Canonical sign: largest-magnitude component positive.
        let lead = (0..3).max_by(|&a, &b| col[a].abs().partial_cmp(&col[b].abs()).unwrap());
        if let Some(k) = lead {
            if col[k] < 0.0 {
                col = -col;
            }
        }
        r.set_row(row, &col.transpose());
    }
    if r.determinant() < 0.0 {
        let flipped = -r.row(2).clone_owned();
        r.set_row(2, &flipped);
    }
    let rot = Rotation3::new(r)?;
    let rotated = rotate_decomposition(d, &rot);
    Ok((rot, rotated))
}

/// Reduces a nonzero skew-symmetric correlation matrix to the single pair
/// `a(σ₁σ₃ − σ₃σ₁)` with `a > 0`.
///
/// Returns `(R, a, v')` such that the rotated term reads
/// `a(σ₁σ₃ − σ₃σ₁) + Σ_k v'_k (σ_k I − I σ_k)` — i.e. `R M Rᵀ` has the skew
/// pair in positions (1,3)/(3,1) with magnitude `a`, and `v' = R v`.
pub fn normal_form_antisymmetric(d: &PauliDecomposition) -> Result<(Rotation3, f64, Vector3<f64>)> {
    normal_form_antisymmetric_with_tol(d, TOL_SYMMETRY)
}

/// [`normal_form_antisymmetric`] with an explicit skewness tolerance.
pub fn normal_form_antisymmetric_with_tol(
    d: &PauliDecomposition,
    tol: f64,
) -> Result<(Rotation3, f64, Vector3<f64>)> {
    let residual = (d.m + d.m.transpose()).norm();
    if residual > tol {
        return Err(Error::NotSkewSymmetric { residual });
    }
    if d.m.norm() <= tol {
        return Err(Error::ZeroCorrelation);
    }
    let skew = (d.m - d.m.transpose()) * 0.5;
    // Axial vector of the skew matrix: M x = m × x.
    let axial = Vector3::new(skew[(2, 1)], skew[(0, 2)], skew[(1, 0)]);
    let a = axial.norm();
    let rot = Rotation3::taking(axial / a, Vector3::y());
    let vprime = rot.matrix() * d.v;
    Ok((rot, a, vprime))
}

/// Ready-made terms used across tests and examples.
pub mod standard {
    use super::*;

    /// XX + YY + ZZ (the Heisenberg / Quantum Max-Cut interaction).
    pub fn heisenberg() -> Hermitian4 {
        Hermitian4::new(pauli_pair(1, 1) + pauli_pair(2, 2) + pauli_pair(3, 3)).unwrap()
    }

    /// XZ − ZX, the canonical antisymmetric term.
    pub fn xz_minus_zx() -> Hermitian4 {
        Hermitian4::new(pauli_pair(1, 3) - pauli_pair(3, 1)).unwrap()
    }

    /// Z ⊗ Z.
    pub fn zz() -> Hermitian4 {
        Hermitian4::new(pauli_pair(3, 3)).unwrap()
    }

    /// Z ⊗ I.
    pub fn z_i() -> Hermitian4 {
        Hermitian4::new(pauli_pair(3, 0)).unwrap()
    }

    /// Z⊗Z + X⊗I.
    pub fn zz_plus_xi() -> Hermitian4 {
        Hermitian4::new(pauli_pair(3, 3) + pauli_pair(1, 0)).unwrap()
    }
}
