//! Brute-force ground truth at desk scale.
//!
//! Exhaustive Max-Cut and 3-coloring, and a spherical product-grid search
//! for the vector cut objectives with optional local polish. Everything is
//! capped by explicit budgets; these routines mint expected values for
//! tests and verify solver output, they are not scalable algorithms.

use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::consts::{
    BRUTE_COLORING_LIMIT, BRUTE_MAXCUT_LIMIT, GRID_RESOLUTION_DEG, GRID_TIME_LIMIT_SECS,
};
use crate::error::Error;
use crate::gadgets::WeightMatrix;
use crate::graph::Graph;
use crate::solvers::{
    coordinate_ascent_mck_from, mck_value, subgradient_ascent_wmc_from, wmc_value, StepSchedule,
    VectorAssignment,
};
use crate::Result;

/// Size caps for the grid oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Grid spacing in degrees; must divide 360.
    pub grid_resolution: u32,
    pub time_limit_secs: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_vertices: 5,
            grid_resolution: GRID_RESOLUTION_DEG,
            time_limit_secs: GRID_TIME_LIMIT_SECS,
        }
    }
}

impl OracleBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 || self.grid_resolution == 0 || self.time_limit_secs == 0 {
            return Err(Error::DomainError("budget entries must be positive".into()));
        }
        if 360 % self.grid_resolution != 0 {
            return Err(Error::DomainError(format!(
                "grid resolution {}° must divide 360",
                self.grid_resolution
            )));
        }
        Ok(())
    }
}

/// Exhaustive Max-Cut. Ties broken by the smallest labeling bitmask
/// (bit v set ⇔ vertex v on the −1 side).
pub fn brute_maxcut(g: &Graph) -> Result<(u64, Vec<i8>)> {
    if g.n > BRUTE_MAXCUT_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds exhaustive Max-Cut cap {BRUTE_MAXCUT_LIMIT}",
            g.n
        )));
    }
    if g.n == 0 {
        return Ok((0, Vec::new()));
    }
    // Complementary masks cut identically; restricting the top vertex to the
    // +1 side keeps exactly the smaller mask of each pair.
    let masks = 1u64 << (g.n - 1);
    let mut best_mask = 0u64;
    let mut best = 0u64;
    for mask in 0..masks {
        let cut = g
            .edges
            .iter()
            .filter(|&&(u, v)| ((mask >> u) ^ (mask >> v)) & 1 == 1)
            .count() as u64;
        if cut > best {
            best = cut;
            best_mask = mask;
        }
    }
    let labeling = (0..g.n)
        .map(|v| if (best_mask >> v) & 1 == 1 { -1 } else { 1 })
        .collect();
    Ok((best, labeling))
}

/// Lexicographically smallest proper 3-coloring, or `None`.
pub fn brute_3coloring(g: &Graph) -> Result<Option<Vec<u8>>> {
    if g.n > BRUTE_COLORING_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds exhaustive 3-coloring cap {BRUTE_COLORING_LIMIT}",
            g.n
        )));
    }
    let adj = g.adjacency();
    let mut coloring = vec![0u8; g.n];
    if backtrack(&adj, &mut coloring, 0) {
        Ok(Some(coloring))
    } else {
        Ok(None)
    }
}

fn backtrack(adj: &[Vec<usize>], coloring: &mut [u8], v: usize) -> bool {
    if v == coloring.len() {
        return true;
    }
    'colors: for c in 0..3u8 {
        for &u in &adj[v] {
            if u < v && coloring[u] == c {
                continue 'colors;
            }
        }
        coloring[v] = c;
        if backtrack(adj, coloring, v + 1) {
            return true;
        }
    }
    false
}

/// Objective searched by [`grid_search_vectors`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GridObjective {
    Mck { k: usize },
    Wmc { w: WeightMatrix },
}

/// Grid search outcome: the raw grid optimum and its solver-polished
/// refinement (the polish counts as oracle output because it starts from,
/// and can only improve on, the certified grid point).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSearchResult {
    pub grid_value: f64,
    pub grid_assignment: VectorAssignment,
    pub polished_value: f64,
    pub polished_assignment: VectorAssignment,
}

struct SphereGrid {
    /// Full point set.
    all: Vec<Vec<f64>>,
    /// Gauge-restricted candidate lists for the first vertices; vertices
    /// beyond the list use `all`.
    fixed: Vec<Vec<Vec<f64>>>,
}

fn circle_points(res: u32, max_deg: u32) -> Vec<Vec<f64>> {
    (0..=max_deg)
        .step_by(res as usize)
        .map(|d| {
            let t = (d as f64).to_radians();
            vec![t.cos(), t.sin()]
        })
        .collect()
}

fn sphere_points(res: u32, max_azimuth: u32) -> Vec<Vec<f64>> {
    let mut pts = Vec::new();
    for incl in (0..=180).step_by(res as usize) {
        let theta = (incl as f64).to_radians();
        if incl == 0 || incl == 180 {
            pts.push(vec![0.0, 0.0, theta.cos().round()]);
            continue;
        }
        for az in (0..=max_azimuth).step_by(res as usize) {
            if az == 360 {
                continue;
            }
            let phi = (az as f64).to_radians();
            pts.push(vec![
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            ]);
        }
    }
    pts
}

/// Meridian (azimuth 0) points only.
fn meridian_points(res: u32) -> Vec<Vec<f64>> {
    (0..=180)
        .step_by(res as usize)
        .map(|incl| {
            let theta = (incl as f64).to_radians();
            vec![theta.sin(), 0.0, theta.cos()]
        })
        .collect()
}

fn build_grid(obj: &GridObjective, res: u32) -> Result<SphereGrid> {
    match obj {
        GridObjective::Mck { k: 1 } => Ok(SphereGrid {
            all: vec![vec![1.0], vec![-1.0]],
            fixed: vec![vec![vec![1.0]]],
        }),
        GridObjective::Mck { k: 2 } => Ok(SphereGrid {
            // Rotation fixes v0; reflection halves v1.
            all: circle_points(res, 359),
            fixed: vec![vec![vec![1.0, 0.0]], circle_points(res, 180)],
        }),
        GridObjective::Mck { k: 3 } => Ok(SphereGrid {
            // Rotations fix v0 at the pole and put v1 on the zero meridian;
            // the residual reflection halves v2's azimuth range.
            all: sphere_points(res, 359),
            fixed: vec![
                vec![vec![0.0, 0.0, 1.0]],
                meridian_points(res),
                sphere_points(res, 180),
            ],
        }),
        GridObjective::Mck { k } => Err(Error::DomainError(format!(
            "grid search supports k ≤ 3, got {k}"
        ))),
        GridObjective::Wmc { w } => {
            let d = w.diag();
            let fixed = if d[2] >= 1.0 {
                // Isotropic: same gauge as mck(3).
                vec![
                    vec![vec![0.0, 0.0, 1.0]],
                    meridian_points(res),
                    sphere_points(res, 180),
                ]
            } else if d[1] >= 1.0 {
                // diag(1,1,γ): rotations about z fix v0's azimuth, the
                // reflection y→−y halves v1's.
                vec![meridian_points(res), sphere_points(res, 180)]
            } else {
                // Distinct entries: axis reflections confine v0 to a closed
                // octant.
                let octant: Vec<Vec<f64>> = sphere_points(res, 90)
                    .into_iter()
                    .filter(|p| p[2] >= -1e-12)
                    .collect();
                vec![octant]
            };
            Ok(SphereGrid {
                all: sphere_points(res, 359),
                fixed,
            })
        }
    }
}

/// Exhaustive search over the product of per-vertex grids (symmetry-reduced
/// for the leading vertices), optionally polished by the matching solver
/// from the best grid point.
pub fn grid_search_vectors(
    g: &Graph,
    objective: &GridObjective,
    budget: &OracleBudget,
) -> Result<GridSearchResult> {
    budget.validate()?;
    if g.n > budget.max_vertices {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the grid budget's cap {}",
            g.n, budget.max_vertices
        )));
    }
    let grid = build_grid(objective, budget.grid_resolution)?;
    let dim = grid.all.first().map(|p| p.len()).unwrap_or(3);

    let value_of = |s: &VectorAssignment| -> Result<f64> {
        match objective {
            GridObjective::Mck { .. } => mck_value(g, s),
            GridObjective::Wmc { w } => wmc_value(g, w, s),
        }
    };

    if g.n == 0 {
        let empty = VectorAssignment {
            dim,
            vectors: Vec::new(),
        };
        return Ok(GridSearchResult {
            grid_value: 0.0,
            grid_assignment: empty.clone(),
            polished_value: 0.0,
            polished_assignment: empty,
        });
    }

    let candidates: Vec<&Vec<Vec<f64>>> = (0..g.n)
        .map(|v| grid.fixed.get(v).unwrap_or(&grid.all))
        .collect();

    // Odometer over the product space.
    let start = Instant::now();
    let mut idx = vec![0usize; g.n];
    let mut best_value = f64::NEG_INFINITY;
    let mut best_idx = idx.clone();
    let mut current = VectorAssignment {
        dim,
        vectors: idx
            .iter()
            .enumerate()
            .map(|(v, &i)| candidates[v][i].clone())
            .collect(),
    };
    let mut counter: u64 = 0;
    loop {
        let val = value_of(&current)?;
        if val > best_value {
            best_value = val;
            best_idx = idx.clone();
        }
        counter += 1;
        if counter.is_multiple_of(65_536) && start.elapsed().as_secs() > budget.time_limit_secs {
            return Err(Error::Timeout(budget.time_limit_secs));
        }
        // Advance the odometer; full wrap-around means we are done.
        let mut advanced = false;
        let mut v = g.n;
        while v > 0 {
            v -= 1;
            idx[v] += 1;
            if idx[v] < candidates[v].len() {
                current.vectors[v] = candidates[v][idx[v]].clone();
                advanced = true;
                break;
            }
            idx[v] = 0;
            current.vectors[v] = candidates[v][0].clone();
        }
        if !advanced {
            break;
        }
    }

    let grid_assignment = VectorAssignment {
        dim,
        vectors: best_idx
            .iter()
            .enumerate()
            .map(|(v, &i)| candidates[v][i].clone())
            .collect(),
    };

    let (polished_value, polished_assignment) = polish(g, objective, grid_assignment.clone())?;
    Ok(GridSearchResult {
        grid_value: best_value,
        grid_assignment,
        polished_value: polished_value.max(best_value),
        polished_assignment,
    })
}

fn polish(
    g: &Graph,
    objective: &GridObjective,
    start: VectorAssignment,
) -> Result<(f64, VectorAssignment)> {
    match objective {
        GridObjective::Mck { .. } => {
            let (v, s, _) = coordinate_ascent_mck_from(g, start, 20_000, 1e-14)?;
            Ok((v, s))
        }
        GridObjective::Wmc { w } => {
            let (v, s, _) = subgradient_ascent_wmc_from(
                g,
                w,
                start,
                StepSchedule::Adaptive { eta0: 0.1 },
                20_000,
            )?;
            Ok((v, s))
        }
    }
}
