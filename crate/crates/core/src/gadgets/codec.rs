//! Forward encoders and rounding decoders for the graph reductions.
//!
//! Encoders turn an exact witness (a proper 3-coloring or a cut labeling)
//! into the vector assignment from the corresponding completeness argument;
//! its objective value meets `threshold_yes` exactly. Decoders round an
//! arbitrary assignment back to a witness and verify it, reporting `None`
//! on failure.

use nalgebra::Vector3;

use super::{ReductionArtifact, ReductionKind, Role};
use crate::error::Error;
use crate::graph::Graph;
use crate::solvers::{mck_value, wmc_value, VectorAssignment};
use crate::Result;

/// Unit base vectors of the regular tetrahedron used for 3-coloring
/// encodings: colors 0,1,2 plus the apex (0,0,1).
pub fn tetrahedron_colors() -> [Vector3<f64>; 3] {
    [
        Vector3::new((8.0f64 / 9.0).sqrt(), 0.0, -1.0 / 3.0),
        Vector3::new(-(2.0f64 / 9.0).sqrt(), (2.0f64 / 3.0).sqrt(), -1.0 / 3.0),
        Vector3::new(-(2.0f64 / 9.0).sqrt(), -(2.0f64 / 3.0).sqrt(), -1.0 / 3.0),
    ]
}

/// Unit xy-plane color vectors (equilateral) for the two-max reduction.
pub fn planar_colors() -> [Vector3<f64>; 3] {
    [0, 1, 2].map(|i| {
        let th = 2.0 * std::f64::consts::PI * i as f64 / 3.0;
        Vector3::new(th.cos(), th.sin(), 0.0)
    })
}

fn check_proper(g: &Graph, coloring: &[u8]) -> Result<()> {
    if coloring.len() != g.n {
        return Err(Error::DimensionMismatch(format!(
            "coloring covers {} vertices, graph has {}",
            coloring.len(),
            g.n
        )));
    }
    if coloring.iter().any(|&c| c > 2) {
        return Err(Error::ImproperColoring);
    }
    for &(u, v) in &g.edges {
        if coloring[u] == coloring[v] {
            return Err(Error::ImproperColoring);
        }
    }
    Ok(())
}

fn missing_color(a: u8, b: u8) -> u8 {
    3 - a - b
}

fn to_assignment(vectors: Vec<Vector3<f64>>) -> VectorAssignment {
    VectorAssignment {
        dim: 3,
        vectors: vectors.into_iter().map(|v| vec![v.x, v.y, v.z]).collect(),
    }
}

/// The objective the artifact's output graph is cut under: `mck` for the
/// 3-dimensional Vector Max-Cut reduction, the recorded stretch otherwise.
pub fn objective_value(art: &ReductionArtifact, s: &VectorAssignment) -> Result<f64> {
    let g = art.output_graph()?;
    match art.kind {
        ReductionKind::ThreeColorToMc3 => mck_value(g, s),
        ReductionKind::MaxCutToWmc
        | ReductionKind::ThreeColorToWmcEqual
        | ReductionKind::ThreeColorToWmcTwoMax => {
            let w = art
                .params
                .weight
                .ok_or_else(|| Error::WrongArtifact("graph artifact missing its stretch".into()))?;
            wmc_value(g, &w, s)
        }
        _ => Err(Error::WrongArtifact(
            "Hamiltonian artifacts have no vector objective".into(),
        )),
    }
}

/// Emits the completeness-side assignment for a proper 3-coloring of the
/// source graph; it achieves `threshold_yes` exactly.
pub fn encode_coloring(art: &ReductionArtifact, coloring: &[u8]) -> Result<VectorAssignment> {
    check_proper(&art.source, coloring)?;
    let out_n = art.output_size();
    match art.kind {
        ReductionKind::ThreeColorToWmcEqual => {
            let colors = tetrahedron_colors();
            let apex = Vector3::new(0.0, 0.0, 1.0);
            let mut vecs = vec![Vector3::zeros(); out_n];
            for (idx, role) in art.provenance.iter().enumerate() {
                vecs[idx] = match *role {
                    Role::Original { v } => colors[coloring[v] as usize],
                    Role::CliqueAncilla { edge: (i, j) } => {
                        colors[missing_color(coloring[i], coloring[j]) as usize]
                    }
                    Role::SinkLink { .. } => apex,
                    Role::Sink => -apex,
                    _ => unreachable!("no such role in this reduction"),
                };
            }
            Ok(to_assignment(vecs))
        }
        ReductionKind::ThreeColorToWmcTwoMax => {
            let colors = planar_colors();
            let mut vecs = vec![Vector3::zeros(); out_n];
            // Star leaves point opposite their centers; fill centers first.
            for (idx, role) in art.provenance.iter().enumerate() {
                match *role {
                    Role::Original { v } => vecs[idx] = colors[coloring[v] as usize],
                    Role::TriangleAncilla { edge: (i, j) } => {
                        vecs[idx] = colors[missing_color(coloring[i], coloring[j]) as usize]
                    }
                    _ => {}
                }
            }
            for (idx, role) in art.provenance.iter().enumerate() {
                if let Role::StarLeaf { v, .. } = *role {
                    vecs[idx] = -vecs[v];
                }
            }
            Ok(to_assignment(vecs))
        }
        ReductionKind::ThreeColorToMc3 => {
            let colors = tetrahedron_colors();
            let apex = Vector3::new(0.0, 0.0, 1.0);
            let mut vecs = vec![Vector3::zeros(); out_n];
            for (idx, role) in art.provenance.iter().enumerate() {
                match *role {
                    Role::Original { v } => vecs[idx] = colors[coloring[v] as usize],
                    Role::CliqueAncilla { edge: (i, j) } => {
                        vecs[idx] = colors[missing_color(coloring[i], coloring[j]) as usize]
                    }
                    Role::SinkLink { .. } => vecs[idx] = apex,
                    Role::Sink => vecs[idx] = -apex,
                    _ => {}
                }
            }
            // Adjoined-triangle apexes: antiparallel to the midpoint of their
            // edge's endpoints.
            for (idx, role) in art.provenance.iter().enumerate() {
                if let Role::TriangleAncilla { edge: (u, v) } = *role {
                    let mid = vecs[u] + vecs[v];
                    vecs[idx] = -mid / mid.norm();
                }
            }
            Ok(to_assignment(vecs))
        }
        _ => Err(Error::WrongArtifact(
            "encode_coloring needs a 3-coloring reduction artifact".into(),
        )),
    }
}

/// Emits the completeness-side assignment for a ±1 cut labeling of the
/// source graph of a Max-Cut reduction: labels map to `(±1,0,0)`, star
/// leaves sit opposite their centers.
pub fn encode_cut(art: &ReductionArtifact, labeling: &[i8]) -> Result<VectorAssignment> {
    if art.kind != ReductionKind::MaxCutToWmc {
        return Err(Error::WrongArtifact(
            "encode_cut needs a Max-Cut reduction artifact".into(),
        ));
    }
    if labeling.len() != art.source.n {
        return Err(Error::DimensionMismatch(format!(
            "labeling covers {} vertices, source has {}",
            labeling.len(),
            art.source.n
        )));
    }
    if labeling.iter().any(|&l| l != 1 && l != -1) {
        return Err(Error::InvalidInput("labels must be ±1".into()));
    }
    let mut vecs = vec![Vector3::zeros(); art.output_size()];
    for (idx, role) in art.provenance.iter().enumerate() {
        vecs[idx] = match *role {
            Role::Original { v } => Vector3::new(labeling[v] as f64, 0.0, 0.0),
            Role::StarLeaf { v, .. } => Vector3::new(-(labeling[v] as f64), 0.0, 0.0),
            _ => unreachable!("no such role in this reduction"),
        };
    }
    Ok(to_assignment(vecs))
}

fn check_covers(art: &ReductionArtifact, s: &VectorAssignment) -> Result<()> {
    if s.len() != art.output_size() || s.dim != 3 {
        return Err(Error::DimensionMismatch(format!(
            "assignment ({} vectors, dim {}) does not cover the output ({} vertices, dim 3)",
            s.len(),
            s.dim,
            art.output_size()
        )));
    }
    Ok(())
}

/// Rounds an assignment on a 3-coloring reduction back to a coloring.
///
/// Per source component the anchor clique of the lowest-index source edge
/// supplies the color set; every source vertex takes its nearest color, and
/// the result is checked for properness. `None` means the assignment does
/// not encode a proper 3-coloring.
pub fn decode_coloring(art: &ReductionArtifact, s: &VectorAssignment) -> Result<Option<Vec<u8>>> {
    check_covers(art, s)?;
    let src = &art.source;
    let comp = src.components();
    let n = src.n;

    // Anchor edge per component: edges are sorted, take the first seen.
    let mut anchor: Vec<Option<usize>> = vec![None; n];
    for (e, &(i, _)) in src.edges.iter().enumerate() {
        let c = comp[i];
        if anchor[c].is_none() {
            anchor[c] = Some(e);
        }
    }

    let mut coloring = vec![0u8; n];
    for v in 0..n {
        let Some(e) = anchor[comp[v]] else {
            // Isolated vertex: any color is proper.
            coloring[v] = 0;
            continue;
        };
        let palette = anchor_palette(art, s, e)?;
        let target = s.vec3(v);
        let nearest = palette
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                (target - **a)
                    .norm()
                    .partial_cmp(&(target - **b).norm())
                    .unwrap()
            })
            .map(|(k, _)| k)
            .unwrap();
        // A 4-vector palette reserves its last entry for the sink-linked
        // vertex; a source vertex rounding there cannot be 3-colored.
        if nearest > 2 {
            return Ok(None);
        }
        coloring[v] = nearest as u8;
    }

    if check_proper(src, &coloring).is_ok() {
        Ok(Some(coloring))
    } else {
        Ok(None)
    }
}

/// Color palette read off the anchor clique of source edge `e`. A 4-entry
/// palette keeps the sink-linked vertex's color last, as the reserved slot.
fn anchor_palette(
    art: &ReductionArtifact,
    s: &VectorAssignment,
    e: usize,
) -> Result<Vec<Vector3<f64>>> {
    let (i, j) = art.source.edges[e];
    let n = art.source.n;
    let m = art.source.m();
    let ids = match art.kind {
        ReductionKind::ThreeColorToWmcEqual => {
            // Clique {i, j, k_ij, t_ij}.
            vec![i, j, n + 2 * e, n + 2 * e + 1]
        }
        ReductionKind::ThreeColorToWmcTwoMax => vec![i, j, n + e],
        // Vectors of i, j, and the apex adjoined to the clique edge (i,j).
        ReductionKind::ThreeColorToMc3 => vec![i, j, n + 2 * m + 6 * e],
        _ => {
            return Err(Error::WrongArtifact(
                "decode_coloring needs a 3-coloring reduction artifact".into(),
            ))
        }
    };
    Ok(ids.into_iter().map(|v| s.vec3(v)).collect())
}

/// Rounds an assignment on a Max-Cut reduction to the ±1 labeling given by
/// the sign of each original vertex's first coordinate (0 rounds to +1),
/// and reports the labeling with its cut value on the source graph.
pub fn decode_cut(art: &ReductionArtifact, s: &VectorAssignment) -> Result<(Vec<i8>, u64)> {
    if art.kind != ReductionKind::MaxCutToWmc {
        return Err(Error::WrongArtifact(
            "decode_cut needs a Max-Cut reduction artifact".into(),
        ));
    }
    check_covers(art, s)?;
    let labeling: Vec<i8> = (0..art.source.n)
        .map(|v| if s.vectors[v][0] >= 0.0 { 1 } else { -1 })
        .collect();
    let value = art
        .source
        .edges
        .iter()
        .filter(|&&(u, v)| labeling[u] != labeling[v])
        .count() as u64;
    Ok((labeling, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{
        maxcut_to_wmc, threecolor_to_mc3, threecolor_to_wmc_equal, threecolor_to_wmc_twomax,
        WeightMatrix,
    };
    use crate::graph::small;
    use crate::rng::{seeded, unit_vector3};

    const SQRT6: f64 = 2.449489742783178;
    const SQRT3: f64 = 1.7320508075688772;

    #[test]
    fn eq_encode_single_edge_meets_threshold() {
        let g = small::single_edge();
        let art = threecolor_to_wmc_equal(&g).unwrap();
        let s = encode_coloring(&art, &[0, 1]).unwrap();
        let v = objective_value(&art, &s).unwrap();
        assert!((v - (2.0 * SQRT6 + 1.0)).abs() < 1e-9, "got {v}");
        assert!((v - art.threshold_yes.unwrap()).abs() < 1e-9);
    }

    #[test]
    fn eq_encode_path_meets_threshold() {
        let g = small::path(3);
        let art = threecolor_to_wmc_equal(&g).unwrap();
        let s = encode_coloring(&art, &[0, 1, 0]).unwrap();
        let v = objective_value(&art, &s).unwrap();
        assert!((v - (2.0 * (2.0 * SQRT6) + 2.0)).abs() < 1e-9);
    }

    #[test]
    fn twomax_encode_values() {
        let g = small::single_edge();
        let art = threecolor_to_wmc_twomax(&g, Some(2), 0.5).unwrap();
        let s = encode_coloring(&art, &[0, 2]).unwrap();
        let v = objective_value(&art, &s).unwrap();
        assert!((v - (2.0 * 3.0 + 1.5 * SQRT3)).abs() < 1e-9, "got {v}");

        let g = small::complete(3);
        let art = threecolor_to_wmc_twomax(&g, Some(4), 0.5).unwrap();
        let s = encode_coloring(&art, &[0, 1, 2]).unwrap();
        let v = objective_value(&art, &s).unwrap();
        assert!(
            (v - (4.0 * 6.0 + 3.0 * 1.5 * SQRT3)).abs() < 1e-9,
            "got {v}"
        );
    }

    #[test]
    fn mc3_encode_single_edge() {
        let g = small::single_edge();
        let art = threecolor_to_mc3(&g).unwrap();
        let s = encode_coloring(&art, &[1, 2]).unwrap();
        let v = objective_value(&art, &s).unwrap();
        assert!((v - (11.0 + 2.0 * SQRT3)).abs() < 1e-9, "got {v}");
        assert!((v - art.threshold_yes.unwrap()).abs() < 1e-9);
    }

    #[test]
    fn encode_rejects_improper_coloring() {
        let g = small::single_edge();
        let art = threecolor_to_wmc_equal(&g).unwrap();
        assert!(matches!(
            encode_coloring(&art, &[1, 1]),
            Err(Error::ImproperColoring)
        ));
    }

    #[test]
    fn encode_empty_graph() {
        let art = threecolor_to_wmc_equal(&small::empty(0)).unwrap();
        let s = encode_coloring(&art, &[]).unwrap();
        assert_eq!(s.len(), 1); // just the sink
        assert!(objective_value(&art, &s).unwrap().abs() < 1e-12);
    }

    #[test]
    fn decode_roundtrips_up_to_permutation() {
        let colorings: Vec<(Graph, Vec<u8>)> = vec![
            (small::complete(3), vec![0, 1, 2]),
            (small::cycle(5), vec![0, 1, 0, 1, 2]),
            (small::path(4), vec![2, 0, 2, 1]),
            (small::star(4), vec![1, 0, 0, 0, 0]),
        ];
        for (g, coloring) in colorings {
            for art in [
                threecolor_to_wmc_equal(&g).unwrap(),
                threecolor_to_wmc_twomax(&g, Some(2), 0.5).unwrap(),
                threecolor_to_mc3(&g).unwrap(),
            ] {
                let s = encode_coloring(&art, &coloring).unwrap();
                let decoded = decode_coloring(&art, &s)
                    .unwrap()
                    .expect("roundtrip must decode");
                // Proper, and identical to the input up to color permutation
                // (per component; these graphs are connected).
                check_proper(&g, &decoded).unwrap();
                for &(u, v) in &g.edges {
                    assert_eq!(coloring[u] == coloring[v], decoded[u] == decoded[v]);
                }
            }
        }
    }

    #[test]
    fn decode_survives_small_perturbations() {
        let g = small::cycle(5);
        let mut rng = seeded(77);
        for art in [
            threecolor_to_wmc_equal(&g).unwrap(),
            threecolor_to_mc3(&g).unwrap(),
        ] {
            let s = encode_coloring(&art, &[0, 1, 0, 1, 2]).unwrap();
            let clean = decode_coloring(&art, &s).unwrap().unwrap();
            let mut noisy = s.clone();
            for v in noisy.vectors.iter_mut() {
                let dir = unit_vector3(&mut rng);
                let p = (Vector3::new(v[0], v[1], v[2]) + 0.01 * dir).normalize();
                *v = vec![p.x, p.y, p.z];
            }
            let decoded = decode_coloring(&art, &noisy)
                .unwrap()
                .expect("perturbed encoding still decodes");
            check_proper(&g, &decoded).unwrap();
            assert_eq!(decoded, clean, "perturbation must not move any color");
        }
    }

    #[test]
    fn decode_fails_on_k4() {
        // K4 is not 3-colorable; any assignment decodes to Failure.
        let g = small::complete(4);
        let art = threecolor_to_mc3(&g).unwrap();
        let mut rng = seeded(5);
        let s = VectorAssignment::random(&mut rng, art.output_size(), 3);
        assert!(decode_coloring(&art, &s).unwrap().is_none());
    }

    #[test]
    fn decode_disconnected_components_independently() {
        let g = Graph::new(5, [(0, 1), (2, 3)]).unwrap();
        let art = threecolor_to_wmc_equal(&g).unwrap();
        let s = encode_coloring(&art, &[0, 1, 1, 2, 0]).unwrap();
        let decoded = decode_coloring(&art, &s).unwrap().expect("decodes");
        check_proper(&g, &decoded).unwrap();
    }

    #[test]
    fn cut_encode_decode() {
        let g = small::cycle(4);
        let w = WeightMatrix::new(1.0, 0.5, 0.25).unwrap();
        let art = maxcut_to_wmc(&g, &w, Some(2), None).unwrap();
        assert_eq!(art.params.cut_target, Some(4));

        let labeling = [1, -1, 1, -1];
        let s = encode_cut(&art, &labeling).unwrap();
        let v = objective_value(&art, &s).unwrap();
        // C + Kn = 4 + 2·4.
        assert!((v - 12.0).abs() < 1e-9, "got {v}");
        assert!((v - art.threshold_yes.unwrap()).abs() < 1e-9);

        let (decoded, cut) = decode_cut(&art, &s).unwrap();
        assert_eq!(cut, 4);
        assert_eq!(decoded, labeling.to_vec());
    }

    #[test]
    fn decode_cut_rounds_zero_up() {
        let g = small::single_edge();
        let w = WeightMatrix::new(1.0, 0.0, 0.0).unwrap();
        let art = maxcut_to_wmc(&g, &w, Some(1), None).unwrap();
        let mut s = encode_cut(&art, &[1, -1]).unwrap();
        s.vectors[0] = vec![0.0, 1.0, 0.0]; // x = 0 rounds to +1
        s.vectors[1] = vec![-0.8, 0.6, 0.0];
        let (labels, cut) = decode_cut(&art, &s).unwrap();
        assert_eq!(labels, vec![1, -1]);
        assert_eq!(cut, 1);

        // All vectors equal: cut 0.
        let g = small::cycle(4);
        let art = maxcut_to_wmc(&g, &w, Some(1), None).unwrap();
        let same = VectorAssignment::new(3, vec![vec![1.0, 0.0, 0.0]; art.output_size()]).unwrap();
        let (_, cut) = decode_cut(&art, &same).unwrap();
        assert_eq!(cut, 0);
    }

    #[test]
    fn wrong_artifact_kinds_are_rejected() {
        let g = small::single_edge();
        let eq = threecolor_to_wmc_equal(&g).unwrap();
        assert!(matches!(
            encode_cut(&eq, &[1, -1]),
            Err(Error::WrongArtifact(_))
        ));
        let w = WeightMatrix::new(1.0, 0.5, 0.0).unwrap();
        let mc = maxcut_to_wmc(&g, &w, Some(1), None).unwrap();
        assert!(matches!(
            encode_coloring(&mc, &[0, 1]),
            Err(Error::WrongArtifact(_))
        ));
        let s = encode_cut(&mc, &[1, -1]).unwrap();
        assert!(matches!(
            decode_coloring(&mc, &s),
            Err(Error::WrongArtifact(_))
        ));
    }
}
