//! Property-based invariants.

use nalgebra::{Matrix4, Vector3};
use num_complex::Complex64;
use proptest::prelude::*;

use prodstate::graph::Graph;
use prodstate::hamiltonian::{product_energy, LocalHamiltonian, Placement, ProductState};
use prodstate::pauli::{
    decompose, recompose, swap_conjugate, symmetrize, symmetry_kind_default, Hermitian4,
    SymmetryKind, TermSet,
};
use prodstate::solvers::{mck_value, VectorAssignment};

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

prop_compose! {
    fn hermitian4()(entries in proptest::collection::vec(complex(), 16)) -> Hermitian4 {
        let raw = Matrix4::from_fn(|i, j| entries[4 * i + j]);
        Hermitian4::new((raw + raw.adjoint()) * Complex64::new(0.5, 0.0)).unwrap()
    }
}

prop_compose! {
    fn unit3()(x in -1.0f64..1.0, y in -1.0f64..1.0, z in -1.0f64..1.0) -> Vector3<f64> {
        let v = Vector3::new(x, y, z);
        if v.norm() < 1e-3 { Vector3::z() } else { v.normalize() }
    }
}

proptest! {
    #[test]
    fn decompose_recompose_roundtrip(h in hermitian4()) {
        let back = recompose(&decompose(&h));
        prop_assert!((h.matrix() - back.matrix()).norm() < 1e-12);
    }

    #[test]
    fn decomposition_json_roundtrip(h in hermitian4()) {
        let d = decompose(&h);
        let text = serde_json::to_string(&d).unwrap();
        let back: prodstate::pauli::PauliDecomposition = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(d, back);
    }

    #[test]
    fn symmetrize_is_swap_invariant(h in hermitian4()) {
        let s = symmetrize(&h);
        prop_assert_eq!(symmetry_kind_default(&s), SymmetryKind::Symmetric);
        let d = decompose(&s);
        prop_assert!((d.m - d.m.transpose()).norm() < 1e-12);
        prop_assert!((d.v - d.w).norm() < 1e-12);
    }

    #[test]
    fn swap_conjugation_is_an_involution(h in hermitian4()) {
        let twice = swap_conjugate(&swap_conjugate(&h));
        prop_assert!((h.matrix() - twice.matrix()).norm() < 1e-13);
    }

    #[test]
    fn energy_scales_linearly_in_weights(
        h in hermitian4(),
        vs in proptest::collection::vec(unit3(), 3),
        weight in -3.0f64..3.0,
        factor in -2.0f64..2.0,
    ) {
        let terms = TermSet::new(vec![h]).unwrap();
        let mut ham = LocalHamiltonian::new(
            3,
            vec![
                Placement { t: 0, a: 0, b: 1, w: weight },
                Placement { t: 0, a: 2, b: 1, w: -0.5 * weight },
            ],
            1,
        )
        .unwrap();
        let s = ProductState::new(vs).unwrap();
        let before = product_energy(&ham, &terms, &s).unwrap();
        ham.scale_weights(factor);
        let after = product_energy(&ham, &terms, &s).unwrap();
        prop_assert!((after - factor * before).abs() < 1e-10 * before.abs().max(1.0));
    }

    #[test]
    fn mck_value_is_rotation_invariant(
        vs in proptest::collection::vec(unit3(), 4),
        axis in unit3(),
        angle in 0.0f64..std::f64::consts::TAU,
    ) {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let assignment = VectorAssignment::new(
            3,
            vs.iter().map(|v| vec![v.x, v.y, v.z]).collect(),
        )
        .unwrap();
        let rot = nalgebra::Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(axis), angle);
        let rotated = VectorAssignment::new(
            3,
            vs.iter()
                .map(|v| {
                    let r = rot * v;
                    vec![r.x, r.y, r.z]
                })
                .collect(),
        )
        .unwrap();
        let a = mck_value(&g, &assignment).unwrap();
        let b = mck_value(&g, &rotated).unwrap();
        prop_assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn graph_text_roundtrip(
        n in 2usize..10,
        edge_bits in proptest::collection::vec(any::<bool>(), 45),
    ) {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if edge_bits[k % edge_bits.len()] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let back = Graph::parse(&g.to_text()).unwrap();
        prop_assert_eq!(g, back);
    }
}
