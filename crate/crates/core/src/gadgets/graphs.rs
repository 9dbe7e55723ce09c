//! Graph-to-graph reductions.
//!
//! Vertex layout is deterministic: source vertices keep their ids, gadget
//! ancillas follow in sorted edge order, star leaves after those, the sink
//! last. Thresholds are stated for the ½-normalized objectives.

use super::{
    default_gap, GadgetParams, ReductionArtifact, ReductionKind, ReductionOutput, Role,
    WeightMatrix,
};
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::brute_maxcut;
use crate::Result;

const SQRT6: f64 = 2.449489742783178;
const SQRT3: f64 = 1.7320508075688772;

/// Max-Cut → stretched linear cut under a uniquely-stretched `W`
/// (`1 > β ≥ γ`): a `K`-star is planted on every source vertex, forcing
/// near-optimal assignments onto the heaviest axis. `K` defaults to `m³·n`.
///
/// The decision target `C` defaults to the brute-forced Max-Cut value of the
/// source (desk scale only); the YES threshold is `C + Kn` and the NO cutoff
/// `C + Kn − ½`.
pub fn maxcut_to_wmc(
    g: &Graph,
    w: &WeightMatrix,
    k_override: Option<usize>,
    cut_target: Option<u64>,
) -> Result<ReductionArtifact> {
    if !w.has_unique_max() {
        return Err(Error::DegenerateWeights);
    }
    let (n, m) = (g.n, g.m());
    let k = k_override.unwrap_or(m * m * m * n);
    let c = match cut_target {
        Some(c) => c,
        None => brute_maxcut(g)?.0,
    };

    let mut edges = g.edges.clone();
    let mut provenance: Vec<Role> = (0..n).map(|v| Role::Original { v }).collect();
    let mut next = n;
    for v in 0..n {
        for i in 0..k {
            edges.push((v, next));
            provenance.push(Role::StarLeaf { v, i });
            next += 1;
        }
    }
    let output = Graph::new(next, edges)?;

    let yes = c as f64 + (k * n) as f64;
    Ok(ReductionArtifact {
        kind: ReductionKind::MaxCutToWmc,
        source: g.clone(),
        output: ReductionOutput::Graph(output),
        threshold_yes: Some(yes),
        threshold_no: Some(yes - 0.5),
        provenance,
        params: GadgetParams {
            k: Some(k),
            weight: Some(*w),
            cut_target: Some(c),
            ..Default::default()
        },
    })
}

/// 3-Coloring → stretched linear cut under `W = I`: every source edge grows
/// into a 4-clique via two fresh vertices, and a single sink hangs off each
/// clique. YES threshold `m·2√6 + m`, NO cutoff `ε = c/m²` below it.
pub fn threecolor_to_wmc_equal(g: &Graph) -> Result<ReductionArtifact> {
    let (n, m) = (g.n, g.m());
    let mut edges = g.edges.clone();
    let mut provenance: Vec<Role> = (0..n).map(|v| Role::Original { v }).collect();

    // Per edge (i,j): k_ij = n + 2e, t_ij = n + 2e + 1.
    for (e, &(i, j)) in g.edges.iter().enumerate() {
        let k_ij = n + 2 * e;
        let t_ij = n + 2 * e + 1;
        edges.extend([(i, k_ij), (i, t_ij), (j, k_ij), (j, t_ij), (k_ij, t_ij)]);
        provenance.push(Role::CliqueAncilla { edge: (i, j) });
        provenance.push(Role::SinkLink { edge: (i, j) });
    }
    let sink = n + 2 * m;
    provenance.push(Role::Sink);
    for (e, &(i, j)) in g.edges.iter().enumerate() {
        let _ = (i, j);
        edges.push((n + 2 * e + 1, sink));
    }
    let output = Graph::new(sink + 1, edges)?;

    let yes = m as f64 * (2.0 * SQRT6) + m as f64;
    let eps = default_gap(m);
    Ok(ReductionArtifact {
        kind: ReductionKind::ThreeColorToWmcEqual,
        source: g.clone(),
        output: ReductionOutput::Graph(output),
        threshold_yes: Some(yes),
        threshold_no: Some(yes - eps),
        provenance,
        params: GadgetParams {
            epsilon: Some(eps),
            weight: Some(WeightMatrix::identity()),
            ..Default::default()
        },
    })
}

/// 3-Coloring → stretched linear cut under `W = diag(1,1,γ)`, `γ < 1`:
/// every source edge grows into a triangle via one fresh apex, then a
/// `K`-star is planted on every vertex of that intermediate graph, pushing
/// solutions into the xy-plane. `K` defaults to `m⁶`. YES threshold
/// `K(n+m) + (3√3/2)m`.
pub fn threecolor_to_wmc_twomax(
    g: &Graph,
    k_override: Option<usize>,
    gamma: f64,
) -> Result<ReductionArtifact> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::DomainError(format!(
            "two-max reduction needs 0 ≤ γ < 1, got {gamma}"
        )));
    }
    let (n, m) = (g.n, g.m());
    let k = k_override.unwrap_or_else(|| m.pow(6));

    let mut edges = g.edges.clone();
    let mut provenance: Vec<Role> = (0..n).map(|v| Role::Original { v }).collect();
    // Triangle apexes: k_ij = n + e.
    for (e, &(i, j)) in g.edges.iter().enumerate() {
        let apex = n + e;
        edges.extend([(i, apex), (j, apex)]);
        provenance.push(Role::TriangleAncilla { edge: (i, j) });
    }
    // K-star on every intermediate vertex.
    let inter = n + m;
    let mut next = inter;
    for v in 0..inter {
        for i in 0..k {
            edges.push((v, next));
            provenance.push(Role::StarLeaf { v, i });
            next += 1;
        }
    }
    let output = Graph::new(next, edges)?;

    let yes = (k * inter) as f64 + 1.5 * SQRT3 * m as f64;
    let eps = default_gap(m);
    Ok(ReductionArtifact {
        kind: ReductionKind::ThreeColorToWmcTwoMax,
        source: g.clone(),
        output: ReductionOutput::Graph(output),
        threshold_yes: Some(yes),
        threshold_no: Some(yes - eps),
        provenance,
        params: GadgetParams {
            k: Some(k),
            epsilon: Some(eps),
            weight: Some(WeightMatrix::new(1.0, 1.0, gamma)?),
            ..Default::default()
        },
    })
}

/// Order of the six clique edges of a source edge `(i,j)` with clique
/// vertices `q` and `t`: the adjoined-triangle apexes follow this order.
pub(crate) fn mc3_clique_edges(i: usize, j: usize, q: usize, t: usize) -> [(usize, usize); 6] {
    [(i, j), (i, q), (i, t), (j, q), (j, t), (q, t)]
}

/// 3-Coloring → Vector Max-Cut in 3 dimensions (squared distances): every
/// source edge grows into a 4-clique, every clique edge gets an adjoined
/// triangle apex, and a sink hangs off each clique. YES threshold
/// `m(10+2√3) + m`.
pub fn threecolor_to_mc3(g: &Graph) -> Result<ReductionArtifact> {
    let (n, m) = (g.n, g.m());
    let mut edges = g.edges.clone();
    let mut provenance: Vec<Role> = (0..n).map(|v| Role::Original { v }).collect();

    // q_ij = n + 2e, t_ij = n + 2e + 1, apexes at n + 2m + 6e + {0..5},
    // sink last.
    let apex_base = n + 2 * m;
    let sink = n + 8 * m;
    for (e, &(i, j)) in g.edges.iter().enumerate() {
        let q = n + 2 * e;
        let t = n + 2 * e + 1;
        edges.extend([(i, q), (i, t), (j, q), (j, t), (q, t)]);
        provenance.push(Role::CliqueAncilla { edge: (i, j) });
        provenance.push(Role::SinkLink { edge: (i, j) });
    }
    for (e, &(i, j)) in g.edges.iter().enumerate() {
        let q = n + 2 * e;
        let t = n + 2 * e + 1;
        for (a_idx, (u, v)) in mc3_clique_edges(i, j, q, t).into_iter().enumerate() {
            let apex = apex_base + 6 * e + a_idx;
            edges.extend([(u, apex), (v, apex)]);
        }
    }
    for (e, &(i, j)) in g.edges.iter().enumerate() {
        let q = n + 2 * e;
        let t = n + 2 * e + 1;
        for (u, v) in mc3_clique_edges(i, j, q, t) {
            provenance.push(Role::TriangleAncilla { edge: (u, v) });
        }
        edges.push((t, sink));
    }
    provenance.push(Role::Sink);
    let output = Graph::new(sink + 1, edges)?;

    let yes = m as f64 * (10.0 + 2.0 * SQRT3) + m as f64;
    let eps = default_gap(m);
    Ok(ReductionArtifact {
        kind: ReductionKind::ThreeColorToMc3,
        source: g.clone(),
        output: ReductionOutput::Graph(output),
        threshold_yes: Some(yes),
        threshold_no: Some(yes - eps),
        provenance,
        params: GadgetParams {
            epsilon: Some(eps),
            ..Default::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small;

    #[test]
    fn maxcut_single_edge_with_small_star() {
        let g = small::single_edge();
        let w = WeightMatrix::new(1.0, 0.5, 0.25).unwrap();
        let art = maxcut_to_wmc(&g, &w, Some(2), None).unwrap();
        let out = art.output_graph().unwrap();
        assert_eq!(out.n, 2 + 2 * 2);
        assert_eq!(out.m(), 1 + 4);
        // MC(edge) = 1, K·n = 4 → YES at 5.
        assert_eq!(art.threshold_yes, Some(5.0));
        assert_eq!(art.threshold_no, Some(4.5));
    }

    #[test]
    fn maxcut_empty_graph_is_fixed_point() {
        let g = small::empty(3);
        let w = WeightMatrix::new(1.0, 0.0, 0.0).unwrap();
        let art = maxcut_to_wmc(&g, &w, None, None).unwrap();
        assert_eq!(art.output_graph().unwrap(), &g);
    }

    #[test]
    fn maxcut_rejects_degenerate_weights() {
        let g = small::single_edge();
        let w = WeightMatrix::identity();
        assert!(matches!(
            maxcut_to_wmc(&g, &w, None, None),
            Err(Error::DegenerateWeights)
        ));
    }

    #[test]
    fn eq_reduction_shape() {
        let g = small::single_edge();
        let art = threecolor_to_wmc_equal(&g).unwrap();
        let out = art.output_graph().unwrap();
        assert_eq!(out.n, 5);
        assert_eq!(out.m(), 7);
        let yes = art.threshold_yes.unwrap();
        assert!((yes - (2.0 * SQRT6 + 1.0)).abs() < 1e-12);

        // 4-clique ancilla counting: 2 per edge + 1 sink.
        let g = small::cycle(5);
        let art = threecolor_to_wmc_equal(&g).unwrap();
        assert_eq!(art.output_graph().unwrap().n, 5 + 2 * 5 + 1);
        assert_eq!(art.provenance.len(), art.output_size());
    }

    #[test]
    fn eq_reduction_empty_graph_has_only_sink() {
        let g = small::empty(0);
        let art = threecolor_to_wmc_equal(&g).unwrap();
        let out = art.output_graph().unwrap();
        assert_eq!(out.n, 1);
        assert_eq!(out.m(), 0);
        assert_eq!(art.provenance, vec![Role::Sink]);
        assert_eq!(art.threshold_yes, Some(0.0));
    }

    #[test]
    fn twomax_reduction_shape() {
        let g = small::single_edge();
        let art = threecolor_to_wmc_twomax(&g, Some(2), 0.5).unwrap();
        let out = art.output_graph().unwrap();
        // 2 originals + 1 apex + K(n+m)=2·3 leaves.
        assert_eq!(out.n, 3 + 6);
        assert_eq!(out.m(), 3 + 6);
        let yes = art.threshold_yes.unwrap();
        assert!((yes - (6.0 + 1.5 * SQRT3)).abs() < 1e-12);
        assert!(matches!(
            threecolor_to_wmc_twomax(&g, Some(2), 1.0),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn mc3_reduction_shape() {
        let g = small::single_edge();
        let art = threecolor_to_mc3(&g).unwrap();
        let out = art.output_graph().unwrap();
        // 2 originals + q + t + 6 apexes + sink.
        assert_eq!(out.n, 2 + 2 + 6 + 1);
        // 6 clique edges + 12 apex edges + 1 sink edge.
        assert_eq!(out.m(), 19);
        let yes = art.threshold_yes.unwrap();
        assert!((yes - (10.0 + 2.0 * SQRT3 + 1.0)).abs() < 1e-12);

        let g = small::complete(4);
        let art = threecolor_to_mc3(&g).unwrap();
        assert_eq!(art.output_graph().unwrap().n, 4 + 8 * 6 + 1);
        assert_eq!(art.provenance.len(), art.output_size());
    }

    #[test]
    fn maxcut_triangle_with_heavy_axis() {
        // MC(K3) = 2; with K = 4 stars the compiled optimum sits at 2 + 12.
        let g = small::complete(3);
        let w = WeightMatrix::new(1.0, 0.0, 0.0).unwrap();
        let art = maxcut_to_wmc(&g, &w, Some(4), None).unwrap();
        assert_eq!(art.params.cut_target, Some(2));
        assert_eq!(art.threshold_yes, Some(14.0));

        let (_, labeling) = crate::oracle::brute_maxcut(&g).unwrap();
        let encoded = crate::gadgets::encode_cut(&art, &labeling).unwrap();
        let value = crate::gadgets::objective_value(&art, &encoded).unwrap();
        assert!((value - 14.0).abs() < 1e-9);

        // The solver never beats the compiled optimum and gets close to it.
        let cfg = crate::solvers::SolverConfig {
            seed: 5,
            restarts: 60,
            max_iters: 2000,
            ..Default::default()
        };
        let rep = crate::solvers::multi_restart_wmc(
            art.output_graph().unwrap(),
            &w,
            crate::solvers::StepSchedule::default(),
            &cfg,
        )
        .unwrap();
        assert!(rep.best_value <= 14.0 + 1e-6, "got {}", rep.best_value);
        assert!(rep.best_value >= 14.0 - 1e-3, "got {}", rep.best_value);
    }

    #[test]
    fn provenance_is_total_and_consistent() {
        let g = small::cycle(4);
        for art in [
            threecolor_to_wmc_equal(&g).unwrap(),
            threecolor_to_wmc_twomax(&g, Some(3), 0.5).unwrap(),
            threecolor_to_mc3(&g).unwrap(),
            maxcut_to_wmc(
                &g,
                &WeightMatrix::new(1.0, 0.5, 0.0).unwrap(),
                Some(2),
                None,
            )
            .unwrap(),
        ] {
            assert_eq!(art.provenance.len(), art.output_size());
            for v in 0..g.n {
                assert_eq!(art.provenance[v], Role::Original { v });
            }
        }
    }
}
