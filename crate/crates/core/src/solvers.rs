//! Heuristic maximizers for vector cut objectives and the closed-form
//! coordinate-descent minimizer for product-state energy.
//!
//! These are completeness-side search tools: every value they report is
//! achieved by a concrete assignment, so reported values lower-bound the
//! true optimum of a maximization problem (and upper-bound a minimization).
//! They carry no approximation guarantee.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::consts::{
    SOLVER_MAX_ITERS, SOLVER_TOL, SUBGRADIENT_ETA0, TOL_BLOCH_NORM, ZERO_FIELD_TOL,
};
use crate::error::Error;
use crate::gadgets::WeightMatrix;
use crate::graph::Graph;
use crate::hamiltonian::{
    product_energy_decomposed, DecomposedTerms, LocalHamiltonian, ProductState,
};
use crate::pauli::TermSet;
use crate::rng::{seeded, unit_vector};
use crate::Result;

/// One unit k-vector per graph vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorAssignment {
    pub dim: usize,
    pub vectors: Vec<Vec<f64>>,
}

impl VectorAssignment {
    pub fn new(dim: usize, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "vector {i} has {} entries, expected {dim}",
                    v.len()
                )));
            }
            let norm = norm(v);
            if (norm - 1.0).abs() > TOL_BLOCH_NORM {
                return Err(Error::InvalidInput(format!(
                    "vector {i} has norm {norm} (must be 1 within {TOL_BLOCH_NORM:e})"
                )));
            }
        }
        Ok(Self { dim, vectors })
    }

    /// Uniformly random unit vectors.
    pub fn random(rng: &mut rand_chacha::ChaCha8Rng, n: usize, dim: usize) -> Self {
        Self {
            dim,
            vectors: (0..n).map(|_| unit_vector(rng, dim)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Vector `i` as a 3-vector (dim must be 3).
    pub fn vec3(&self, i: usize) -> Vector3<f64> {
        Vector3::new(self.vectors[i][0], self.vectors[i][1], self.vectors[i][2])
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_cover(g: &Graph, s: &VectorAssignment) -> Result<()> {
    if s.len() != g.n {
        return Err(Error::DimensionMismatch(format!(
            "assignment covers {} vertices, graph has {}",
            s.len(),
            g.n
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Objectives
// ---------------------------------------------------------------------------

/// Stretched linear cut value `½ Σ_{ij∈E} ‖Wî − Wĵ‖` with the canonical
/// (max-entry-1) diagonal of `w`.
pub fn wmc_value(g: &Graph, w: &WeightMatrix, s: &VectorAssignment) -> Result<f64> {
    check_cover(g, s)?;
    if s.dim != 3 {
        return Err(Error::DimensionMismatch(format!(
            "stretched objective needs 3-vectors, got dim {}",
            s.dim
        )));
    }
    let d = w.diag();
    let mut total = 0.0;
    for &(i, j) in &g.edges {
        let (a, b) = (&s.vectors[i], &s.vectors[j]);
        let mut sq = 0.0;
        for k in 0..3 {
            let t = d[k] * (a[k] - b[k]);
            sq += t * t;
        }
        total += sq.sqrt();
    }
    Ok(0.5 * total)
}

/// Vector cut value `½ Σ_{ij∈E} (1 − î·ĵ)` in any dimension.
pub fn mck_value(g: &Graph, s: &VectorAssignment) -> Result<f64> {
    check_cover(g, s)?;
    let mut total = 0.0;
    for &(i, j) in &g.edges {
        total += 1.0 - dot(&s.vectors[i], &s.vectors[j]);
    }
    Ok(0.5 * total)
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// What a solver run produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Assignment {
    Vectors(VectorAssignment),
    Bloch(ProductState),
}

/// Outcome of one solver invocation (possibly multi-restart).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub best_value: f64,
    pub best_assignment: Assignment,
    pub restarts: usize,
    pub iterations_per_restart: usize,
    pub seed: u64,
    /// Final objective value of each restart, in seed order.
    pub trajectory: Vec<f64>,
}

// ---------------------------------------------------------------------------
// Vector Max-Cut coordinate ascent
// ---------------------------------------------------------------------------

/// One full sweep of exact per-vertex maximization of the `mck` objective:
/// `î ← −(Σ_{j∈N(i)} ĵ) / ‖Σ ĵ‖`, skipping vertices whose neighbor sum is
/// numerically zero (any unit vector is then optimal).
fn mck_sweep(adj: &[Vec<usize>], s: &mut VectorAssignment) {
    for i in 0..s.len() {
        let mut sum = vec![0.0; s.dim];
        for &j in &adj[i] {
            for k in 0..s.dim {
                sum[k] += s.vectors[j][k];
            }
        }
        let n = norm(&sum);
        if n > ZERO_FIELD_TOL {
            for k in 0..s.dim {
                s.vectors[i][k] = -sum[k] / n;
            }
        }
    }
}

/// Coordinate ascent on the `mck` objective from a given start.
pub fn coordinate_ascent_mck_from(
    g: &Graph,
    start: VectorAssignment,
    max_iters: usize,
    tol: f64,
) -> Result<(f64, VectorAssignment, usize)> {
    check_cover(g, &start)?;
    let adj = g.adjacency();
    let mut s = start;
    let mut value = mck_value(g, &s)?;
    let mut iters = 0;
    for _ in 0..max_iters {
        mck_sweep(&adj, &mut s);
        let next = mck_value(g, &s)?;
        assert!(
            next >= value - 1e-9 * value.abs().max(1.0),
            "coordinate ascent objective decreased: {value} -> {next}"
        );
        iters += 1;
        let gain = next - value;
        value = next;
        if gain < tol {
            break;
        }
    }
    Ok((value, s, iters))
}

/// Single-restart coordinate ascent for `mck` with random initialization.
pub fn coordinate_ascent_mck(
    g: &Graph,
    k: usize,
    seed: u64,
    max_iters: usize,
    tol: f64,
) -> Result<SolveReport> {
    let mut rng = seeded(seed);
    let start = VectorAssignment::random(&mut rng, g.n, k);
    let (value, s, _) = coordinate_ascent_mck_from(g, start, max_iters, tol)?;
    Ok(SolveReport {
        best_value: value,
        best_assignment: Assignment::Vectors(s),
        restarts: 1,
        iterations_per_restart: max_iters,
        seed,
        trajectory: vec![value],
    })
}

// ---------------------------------------------------------------------------
// Stretched linear Max-Cut subgradient ascent
// ---------------------------------------------------------------------------

/// Step-size rule for [`subgradient_ascent_wmc`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum StepSchedule {
    /// `η_t = η0 / √(t+1)`; the objective is not guaranteed monotone, the
    /// best iterate is tracked.
    InvSqrt { eta0: f64 },
    /// Backtracking: accept a step only if the objective improves, halving
    /// on rejection and growing 1.2× on acceptance. Monotone; suited to
    /// polishing in the smooth region.
    Adaptive { eta0: f64 },
}

impl Default for StepSchedule {
    fn default() -> Self {
        StepSchedule::InvSqrt {
            eta0: SUBGRADIENT_ETA0,
        }
    }
}

/// Euclidean subgradient of the `wmc` objective at `s`, one 3-vector per
/// vertex. The contribution of a coincident stretched pair
/// (`‖Wî−Wĵ‖ < 1e−12`) is zero, a valid subgradient element.
pub fn wmc_subgradient(g: &Graph, w: &WeightMatrix, s: &VectorAssignment) -> Vec<Vector3<f64>> {
    let d = w.diag();
    let dm = Vector3::new(d[0], d[1], d[2]);
    let mut grad = vec![Vector3::zeros(); s.len()];
    for &(i, j) in &g.edges {
        let wi = dm.component_mul(&s.vec3(i));
        let wj = dm.component_mul(&s.vec3(j));
        let diff = wi - wj;
        let len = diff.norm();
        if len < ZERO_FIELD_TOL {
            continue;
        }
        let g_edge = dm.component_mul(&diff) / len * 0.5;
        grad[i] += g_edge;
        grad[j] -= g_edge;
    }
    grad
}

fn apply_step(s: &VectorAssignment, grad: &[Vector3<f64>], eta: f64) -> VectorAssignment {
    let mut out = s.clone();
    for i in 0..s.len() {
        let stepped = s.vec3(i) + eta * grad[i];
        let n = stepped.norm();
        let unit = if n > ZERO_FIELD_TOL {
            stepped / n
        } else {
            s.vec3(i)
        };
        out.vectors[i] = vec![unit.x, unit.y, unit.z];
    }
    out
}

/// Projected (sub)gradient ascent on the product of unit spheres from a
/// given start; returns the best iterate seen.
pub fn subgradient_ascent_wmc_from(
    g: &Graph,
    w: &WeightMatrix,
    start: VectorAssignment,
    schedule: StepSchedule,
    max_iters: usize,
) -> Result<(f64, VectorAssignment, usize)> {
    check_cover(g, &start)?;
    let mut s = start;
    let mut best = wmc_value(g, w, &s)?;
    let mut best_s = s.clone();
    let mut current = best;
    let mut eta_adaptive = match schedule {
        StepSchedule::Adaptive { eta0 } => eta0,
        StepSchedule::InvSqrt { eta0 } => eta0,
    };
    let mut iters = 0;
    for t in 0..max_iters {
        let grad = wmc_subgradient(g, w, &s);
        match schedule {
            StepSchedule::InvSqrt { eta0 } => {
                let eta = eta0 / ((t + 1) as f64).sqrt();
                s = apply_step(&s, &grad, eta);
                current = wmc_value(g, w, &s)?;
            }
            StepSchedule::Adaptive { .. } => {
                let mut accepted = false;
                for _ in 0..50 {
                    let trial = apply_step(&s, &grad, eta_adaptive);
                    let val = wmc_value(g, w, &trial)?;
                    if val > current {
                        s = trial;
                        current = val;
                        eta_adaptive *= 1.2;
                        accepted = true;
                        break;
                    }
                    eta_adaptive *= 0.5;
                }
                if !accepted {
                    iters = t + 1;
                    break;
                }
            }
        }
        iters = t + 1;
        if current > best {
            best = current;
            best_s = s.clone();
        }
    }
    Ok((best, best_s, iters))
}

/// Single-restart subgradient ascent for `wmc` with random initialization.
pub fn subgradient_ascent_wmc(
    g: &Graph,
    w: &WeightMatrix,
    seed: u64,
    schedule: StepSchedule,
    max_iters: usize,
) -> Result<SolveReport> {
    let mut rng = seeded(seed);
    let start = VectorAssignment::random(&mut rng, g.n, 3);
    let (value, s, _) = subgradient_ascent_wmc_from(g, w, start, schedule, max_iters)?;
    Ok(SolveReport {
        best_value: value,
        best_assignment: Assignment::Vectors(s),
        restarts: 1,
        iterations_per_restart: max_iters,
        seed,
        trajectory: vec![value],
    })
}

// ---------------------------------------------------------------------------
// Product-state coordinate descent
// ---------------------------------------------------------------------------

/// Effective field on qubit `q`: the energy is `g_q · r_q + const` with all
/// other Bloch vectors held fixed.
pub fn effective_field(
    h: &LocalHamiltonian,
    decs: &DecomposedTerms,
    s: &ProductState,
    q: usize,
) -> Vector3<f64> {
    let bloch = s.bloch();
    let mut field = Vector3::zeros();
    for p in &h.placements {
        let d = decs.get(p.t);
        if p.a == q {
            field += p.w * (d.m * bloch[p.b] + d.v);
        } else if p.b == q {
            field += p.w * (d.m.transpose() * bloch[p.a] + d.w);
        }
    }
    field
}

/// Coordinate descent on Bloch vectors from a given start. Each qubit update
/// sets `r_q ← −g_q/‖g_q‖`, the exact minimizer of the energy with the other
/// qubits fixed; energy is monotonically nonincreasing.
pub fn solve_prod_state_from(
    h: &LocalHamiltonian,
    decs: &DecomposedTerms,
    start: ProductState,
    max_iters: usize,
    tol: f64,
) -> Result<(f64, ProductState, usize)> {
    let mut s = start;
    let mut energy = product_energy_decomposed(h, decs, &s)?;
    let mut iters = 0;
    for _ in 0..max_iters {
        for q in 0..h.n {
            let g = effective_field(h, decs, &s, q);
            let n = g.norm();
            if n > ZERO_FIELD_TOL {
                s.set(q, -g / n);
            }
        }
        let next = product_energy_decomposed(h, decs, &s)?;
        assert!(
            next <= energy + 1e-9 * energy.abs().max(1.0),
            "coordinate descent energy increased: {energy} -> {next}"
        );
        iters += 1;
        let drop = energy - next;
        energy = next;
        if drop < tol {
            break;
        }
    }
    Ok((energy, s, iters))
}

/// Single-restart product-state energy minimization with random init.
pub fn solve_prod_state(
    h: &LocalHamiltonian,
    terms: &TermSet,
    seed: u64,
    max_iters: usize,
    tol: f64,
) -> Result<SolveReport> {
    let decs = DecomposedTerms::new(terms);
    let mut rng = seeded(seed);
    let start = ProductState::new(
        (0..h.n)
            .map(|_| crate::rng::unit_vector3(&mut rng))
            .collect(),
    )?;
    let (energy, s, _) = solve_prod_state_from(h, &decs, start, max_iters, tol)?;
    Ok(SolveReport {
        best_value: energy,
        best_assignment: Assignment::Bloch(s),
        restarts: 1,
        iterations_per_restart: max_iters,
        seed,
        trajectory: vec![energy],
    })
}

// ---------------------------------------------------------------------------
// Restart orchestration
// ---------------------------------------------------------------------------

/// Runs `run(seed + 0..restarts)` and keeps the best report. `maximize`
/// selects the comparison direction; ties keep the earliest seed, so
/// parallel and serial execution agree.
pub fn multi_restart(
    restarts: usize,
    base_seed: u64,
    maximize: bool,
    mut run: impl FnMut(u64) -> Result<SolveReport>,
) -> Result<SolveReport> {
    if restarts == 0 {
        return Err(Error::InvalidInput("restarts must be ≥ 1".into()));
    }
    let mut best: Option<SolveReport> = None;
    let mut trajectory = Vec::with_capacity(restarts);
    for i in 0..restarts {
        let rep = run(base_seed + i as u64)?;
        trajectory.push(rep.best_value);
        let better = match &best {
            None => true,
            Some(b) => {
                if maximize {
                    rep.best_value > b.best_value
                } else {
                    rep.best_value < b.best_value
                }
            }
        };
        if better {
            best = Some(rep);
        }
    }
    let mut out = best.unwrap();
    out.restarts = restarts;
    out.seed = base_seed;
    out.trajectory = trajectory;
    Ok(out)
}

/// Solver knobs shared by the multi-restart entry points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub seed: u64,
    pub restarts: usize,
    pub max_iters: usize,
    pub tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            restarts: 1,
            max_iters: SOLVER_MAX_ITERS,
            tol: SOLVER_TOL,
        }
    }
}

pub fn multi_restart_mck(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<SolveReport> {
    multi_restart(cfg.restarts, cfg.seed, true, |seed| {
        coordinate_ascent_mck(g, k, seed, cfg.max_iters, cfg.tol)
    })
}

pub fn multi_restart_wmc(
    g: &Graph,
    w: &WeightMatrix,
    schedule: StepSchedule,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    multi_restart(cfg.restarts, cfg.seed, true, |seed| {
        subgradient_ascent_wmc(g, w, seed, schedule, cfg.max_iters)
    })
}

pub fn multi_restart_prod(
    h: &LocalHamiltonian,
    terms: &TermSet,
    cfg: &SolverConfig,
) -> Result<SolveReport> {
    multi_restart(cfg.restarts, cfg.seed, false, |seed| {
        solve_prod_state(h, terms, seed, cfg.max_iters, cfg.tol)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small;
    use crate::hamiltonian::Placement;
    use crate::pauli::standard;
    use crate::rng::unit_vector3;
    use rand::Rng;

    #[test]
    fn mck_value_examples() {
        let g = small::single_edge();
        let s = VectorAssignment::new(3, vec![vec![0.0, 0.0, 1.0], vec![0.0, 0.0, -1.0]]).unwrap();
        assert!((mck_value(&g, &s).unwrap() - 1.0).abs() < 1e-12);
        let same =
            VectorAssignment::new(3, vec![vec![0.0, 0.0, 1.0], vec![0.0, 0.0, 1.0]]).unwrap();
        assert!(mck_value(&g, &same).unwrap().abs() < 1e-12);
    }

    #[test]
    fn mck_value_regular_tetrahedron_is_four() {
        let g = small::complete(4);
        let s = VectorAssignment::new(3, regular_tetrahedron()).unwrap();
        assert!((mck_value(&g, &s).unwrap() - 4.0).abs() < 1e-9);
    }

    pub(crate) fn regular_tetrahedron() -> Vec<Vec<f64>> {
        let r89 = (8.0f64 / 9.0).sqrt();
        let r29 = (2.0f64 / 9.0).sqrt();
        let r23 = (2.0f64 / 3.0).sqrt();
        vec![
            vec![r89, 0.0, -1.0 / 3.0],
            vec![-r29, r23, -1.0 / 3.0],
            vec![-r29, -r23, -1.0 / 3.0],
            vec![0.0, 0.0, 1.0],
        ]
    }

    #[test]
    fn wmc_value_examples() {
        let g = small::single_edge();
        let w = WeightMatrix::new(1.0, 1.0, 1.0).unwrap();
        let s = VectorAssignment::new(3, vec![vec![1.0, 0.0, 0.0], vec![-1.0, 0.0, 0.0]]).unwrap();
        assert!((wmc_value(&g, &w, &s).unwrap() - 1.0).abs() < 1e-12);

        // Regular tetrahedron on K4: ½·6·(4/√6) = 2√6.
        let g = small::complete(4);
        let s = VectorAssignment::new(3, regular_tetrahedron()).unwrap();
        let want = 2.0 * 6.0f64.sqrt();
        assert!((wmc_value(&g, &w, &s).unwrap() - want).abs() < 1e-9);

        // Equilateral triangle in the xy-plane under diag(1,1,0): 3√3/2.
        let g = small::complete(3);
        let w = WeightMatrix::new(1.0, 1.0, 0.0).unwrap();
        let s = VectorAssignment::new(3, equilateral_triangle_xy()).unwrap();
        let want = 1.5 * 3.0f64.sqrt();
        assert!((wmc_value(&g, &w, &s).unwrap() - want).abs() < 1e-9);
    }

    pub(crate) fn equilateral_triangle_xy() -> Vec<Vec<f64>> {
        (0..3)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * i as f64 / 3.0;
                vec![th.cos(), th.sin(), 0.0]
            })
            .collect()
    }

    #[test]
    fn single_edge_ascent_reaches_one_in_one_sweep() {
        let g = small::single_edge();
        let rep = coordinate_ascent_mck(&g, 3, 5, 100, 1e-12).unwrap();
        assert!((rep.best_value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn k4_ascent_reaches_tetrahedron_value() {
        let g = small::complete(4);
        let cfg = SolverConfig {
            seed: 1,
            restarts: 50,
            ..Default::default()
        };
        let rep = multi_restart_mck(&g, 3, &cfg).unwrap();
        assert!(
            (rep.best_value - 4.0).abs() < 1e-6,
            "got {}",
            rep.best_value
        );
    }

    #[test]
    fn c4_ascent_matches_bipartite_cut() {
        let g = small::cycle(4);
        let cfg = SolverConfig {
            seed: 3,
            restarts: 20,
            ..Default::default()
        };
        let rep = multi_restart_mck(&g, 3, &cfg).unwrap();
        assert!(
            (rep.best_value - 4.0).abs() < 1e-8,
            "got {}",
            rep.best_value
        );
    }

    #[test]
    fn per_vertex_update_is_locally_optimal() {
        let g = small::complete(4);
        let mut rng = seeded(9);
        let mut s = VectorAssignment::random(&mut rng, 4, 3);
        let adj = g.adjacency();
        mck_sweep(&adj, &mut s);
        // Re-apply the closed-form update to vertex i, then perturb along
        // random tangent directions; the local objective may not increase.
        for i in 0..4 {
            let mut sum = vec![0.0; 3];
            for &j in &adj[i] {
                for k in 0..3 {
                    sum[k] += s.vectors[j][k];
                }
            }
            let n = norm(&sum);
            if n > ZERO_FIELD_TOL {
                for k in 0..3 {
                    s.vectors[i][k] = -sum[k] / n;
                }
            }
            let local = |s: &VectorAssignment| -> f64 {
                adj[i]
                    .iter()
                    .map(|&j| 0.5 * (1.0 - dot(&s.vectors[i], &s.vectors[j])))
                    .sum()
            };
            let base = local(&s);
            let vi = s.vec3(i);
            for _ in 0..100 {
                let t = unit_vector3(&mut rng);
                let tangent = t - vi * t.dot(&vi);
                if tangent.norm() < 1e-9 {
                    continue;
                }
                let moved = (vi + 1e-4 * tangent.normalize()).normalize();
                let mut s2 = s.clone();
                s2.vectors[i] = vec![moved.x, moved.y, moved.z];
                assert!(local(&s2) <= base + 1e-9);
            }
        }
    }

    #[test]
    fn wmc_single_edge_converges() {
        let g = small::single_edge();
        let w = WeightMatrix::new(1.0, 1.0, 1.0).unwrap();
        let cfg = SolverConfig {
            seed: 7,
            restarts: 100,
            max_iters: 2000,
            ..Default::default()
        };
        let rep = multi_restart_wmc(&g, &w, StepSchedule::default(), &cfg).unwrap();
        assert!(
            (rep.best_value - 1.0).abs() < 1e-4,
            "got {}",
            rep.best_value
        );
    }

    #[test]
    fn wmc_k4_reaches_tetrahedron_perimeter() {
        let g = small::complete(4);
        let w = WeightMatrix::new(1.0, 1.0, 1.0).unwrap();
        let cfg = SolverConfig {
            seed: 11,
            restarts: 60,
            max_iters: 3000,
            ..Default::default()
        };
        let rep = multi_restart_wmc(&g, &w, StepSchedule::default(), &cfg).unwrap();
        let want = 2.0 * 6.0f64.sqrt();
        assert!(
            (rep.best_value - want).abs() < 1e-3,
            "got {}",
            rep.best_value
        );
    }

    #[test]
    fn wmc_star_with_half_weight() {
        // Star S5 under diag(1, ½, 0): center on ±x, leaves antipodal → 5.
        let g = small::star(5);
        let w = WeightMatrix::new(1.0, 0.5, 0.0).unwrap();
        let cfg = SolverConfig {
            seed: 13,
            restarts: 40,
            max_iters: 3000,
            ..Default::default()
        };
        let rep = multi_restart_wmc(&g, &w, StepSchedule::default(), &cfg).unwrap();
        assert!(
            (rep.best_value - 5.0).abs() < 1e-3,
            "got {}",
            rep.best_value
        );
    }

    #[test]
    fn subgradient_matches_finite_differences_at_smooth_points() {
        let g = small::complete(4);
        let w = WeightMatrix::new(1.0, 0.7, 0.3).unwrap();
        let mut rng = seeded(17);
        'outer: for _ in 0..20 {
            let s = VectorAssignment::random(&mut rng, 4, 3);
            // Smoothness guard: all stretched pairwise distances bounded away
            // from zero.
            for &(i, j) in &g.edges {
                let d = w.diag();
                let dm = Vector3::new(d[0], d[1], d[2]);
                if (dm.component_mul(&s.vec3(i)) - dm.component_mul(&s.vec3(j))).norm() < 1e-3 {
                    continue 'outer;
                }
            }
            let grad = wmc_subgradient(&g, &w, &s);
            let h = 1e-5;
            for i in 0..4 {
                for k in 0..3 {
                    let mut plus = s.clone();
                    let mut minus = s.clone();
                    plus.vectors[i][k] += h;
                    minus.vectors[i][k] -= h;
                    // Off-sphere evaluation is fine: the objective extends
                    // smoothly and the Euclidean gradient is what we check.
                    let fp = wmc_raw(&g, &w, &plus);
                    let fm = wmc_raw(&g, &w, &minus);
                    let fd = (fp - fm) / (2.0 * h);
                    assert!(
                        (grad[i][k] - fd).abs() < 1e-6,
                        "vertex {i} coord {k}: analytic {} vs fd {fd}",
                        grad[i][k]
                    );
                }
            }
        }
    }

    fn wmc_raw(g: &Graph, w: &WeightMatrix, s: &VectorAssignment) -> f64 {
        let d = w.diag();
        let mut total = 0.0;
        for &(i, j) in &g.edges {
            let mut sq = 0.0;
            for k in 0..3 {
                let t = d[k] * (s.vectors[i][k] - s.vectors[j][k]);
                sq += t * t;
            }
            total += sq.sqrt();
        }
        0.5 * total
    }

    #[test]
    fn effective_field_matches_finite_differences() {
        let terms = TermSet::new(vec![standard::heisenberg(), standard::zz_plus_xi()]).unwrap();
        let decs = DecomposedTerms::new(&terms);
        let h = LocalHamiltonian::new(
            4,
            vec![
                Placement {
                    t: 0,
                    a: 0,
                    b: 1,
                    w: 1.3,
                },
                Placement {
                    t: 1,
                    a: 2,
                    b: 1,
                    w: -0.8,
                },
                Placement {
                    t: 0,
                    a: 3,
                    b: 2,
                    w: 0.5,
                },
            ],
            2,
        )
        .unwrap();
        let mut rng = seeded(19);
        for _ in 0..20 {
            let s = ProductState::new((0..4).map(|_| unit_vector3(&mut rng)).collect()).unwrap();
            let q = rng.gen::<usize>() % 4;
            let field = effective_field(&h, &decs, &s, q);
            let step = 1e-5;
            for k in 0..3 {
                let mut dir = Vector3::zeros();
                dir[k] = step;
                // Off-sphere probe: the energy is affine in r_q.
                let energy_at = |r: Vector3<f64>| {
                    let mut bloch = s.bloch().to_vec();
                    bloch[q] = r;
                    let st = ProductState::raw_unchecked(bloch);
                    product_energy_decomposed(&h, &decs, &st).unwrap()
                };
                let fp = energy_at(s.bloch()[q] + dir);
                let fm = energy_at(s.bloch()[q] - dir);
                let fd = (fp - fm) / (2.0 * step);
                assert!((field[k] - fd).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn prod_state_single_edge_heisenberg() {
        let terms = TermSet::new(vec![standard::heisenberg()]).unwrap();
        let h = LocalHamiltonian::new(
            2,
            vec![Placement {
                t: 0,
                a: 0,
                b: 1,
                w: 1.0,
            }],
            1,
        )
        .unwrap();
        let rep = solve_prod_state(&h, &terms, 3, 100, 1e-12).unwrap();
        assert!(
            (rep.best_value + 1.0).abs() < 1e-9,
            "got {}",
            rep.best_value
        );
    }

    #[test]
    fn prod_state_zero_hamiltonian_keeps_state() {
        let terms = TermSet::new(vec![standard::zz()]).unwrap();
        let h = LocalHamiltonian::new(3, vec![], 1).unwrap();
        let rep = solve_prod_state(&h, &terms, 5, 50, 1e-12).unwrap();
        assert!(rep.best_value.abs() < 1e-12);
        // Zero field everywhere: the initial random state survives.
        let mut rng = seeded(5);
        let want = ProductState::new((0..3).map(|_| unit_vector3(&mut rng)).collect()).unwrap();
        match rep.best_assignment {
            Assignment::Bloch(s) => assert_eq!(s, want),
            _ => panic!("expected Bloch assignment"),
        }
    }

    #[test]
    fn multi_restart_determinism_and_monotonicity() {
        let g = small::complete(4);
        let cfg = SolverConfig {
            seed: 21,
            restarts: 10,
            ..Default::default()
        };
        let a = multi_restart_mck(&g, 3, &cfg).unwrap();
        let b = multi_restart_mck(&g, 3, &cfg).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );

        let single = SolverConfig {
            seed: 21,
            restarts: 1,
            ..Default::default()
        };
        let one = multi_restart_mck(&g, 3, &single).unwrap();
        assert!(a.best_value >= one.best_value - 1e-12);
        assert_eq!(one.trajectory.len(), 1);
        assert_eq!(a.trajectory.len(), 10);
    }

    #[test]
    fn restarts_one_equals_single_run() {
        let g = small::cycle(5);
        let cfg = SolverConfig {
            seed: 33,
            restarts: 1,
            ..Default::default()
        };
        let multi = multi_restart_mck(&g, 3, &cfg).unwrap();
        let single = coordinate_ascent_mck(&g, 3, 33, cfg.max_iters, cfg.tol).unwrap();
        assert_eq!(multi.best_value, single.best_value);
        assert_eq!(multi.best_assignment, single.best_assignment);
    }

    #[test]
    fn report_value_matches_assignment() {
        let g = small::petersen();
        let cfg = SolverConfig {
            seed: 2,
            restarts: 5,
            ..Default::default()
        };
        let rep = multi_restart_mck(&g, 3, &cfg).unwrap();
        match &rep.best_assignment {
            Assignment::Vectors(s) => {
                let val = mck_value(&g, s).unwrap();
                assert!((val - rep.best_value).abs() < 1e-9);
            }
            _ => panic!("expected vector assignment"),
        }
    }
}
