//! Seeded, portable random sampling.
//!
//! All stochastic code in this crate draws from `ChaCha8Rng` seeded with a
//! caller-supplied `u64`, and unit vectors are produced by normalizing
//! Box-Muller Gaussian coordinates. Both steps are fixed algorithms with no
//! platform-dependent state, so identical seeds give identical runs.

use nalgebra::Vector3;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One standard normal via the Box-Muller transform.
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u1: f64 = rng.gen::<f64>();
        if u1 <= f64::MIN_POSITIVE {
            continue;
        }
        let u2: f64 = rng.gen::<f64>();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        return r * theta.cos();
    }
}

/// Uniform unit vector in `dim` dimensions (normalized Gaussians).
pub fn unit_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| standard_normal(rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.iter().map(|x| x / norm).collect();
        }
    }
}

/// Uniform unit 3-vector.
pub fn unit_vector3(rng: &mut ChaCha8Rng) -> Vector3<f64> {
    let v = unit_vector(rng, 3);
    Vector3::new(v[0], v[1], v[2])
}
