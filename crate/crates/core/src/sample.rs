//! Deterministic seeded sampling.
//!
//! All randomized pipelines draw from one splittable ChaCha generator:
//! the user-facing seed selects the key and each sampling purpose gets
//! its own stream, so every report is reproducible from (seed, stream).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::configuration::ProjectiveConfiguration;
use crate::matrix::RationalMatrix;
use crate::point::ProjectivePoint;
use crate::rational::Rational;

/// Stream identifiers, one per sampling purpose.
pub mod streams {
    pub const KAPPA_BASIS: u64 = 0x10; // + attempt index
    pub const KAPPA_RELATION_CHECK: u64 = 0x20;
    pub const SEGRE_SAMPLES: u64 = 0x30;
    pub const SEGRE_HOLDOUT: u64 = 0x31;
    pub const SEGRE_SMOOTHNESS: u64 = 0x32;
    pub const IGUSA_SAMPLES: u64 = 0x40;
    pub const IGUSA_HOLDOUT: u64 = 0x41;
    pub const BIDUALITY: u64 = 0x42;
    pub const PGL_ACTION: u64 = 0x50;
}

/// Seed-keyed source of independent deterministic generators.
#[derive(Clone, Copy, Debug)]
pub struct Sampler {
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// An independent generator for the given purpose stream.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

fn random_point(rng: &mut impl Rng, ambient_dim: usize) -> ProjectivePoint {
    loop {
        let coords: Vec<Rational> = (0..=ambient_dim)
            .map(|_| Rational::from_int(rng.gen_range(-9..=9)))
            .collect();
        if let Ok(p) = ProjectivePoint::new(coords) {
            return p;
        }
    }
}

/// n independent points of P^d with small integer coordinates.
pub fn random_configuration(
    rng: &mut impl Rng,
    ambient_dim: usize,
    n: usize,
) -> ProjectiveConfiguration {
    let points = (0..n).map(|_| random_point(rng, ambient_dim)).collect();
    ProjectiveConfiguration::new(ambient_dim, points).expect("points share the ambient dimension")
}

/// Six points (1 : t) of the line with pairwise distinct parameters.
pub fn random_p1_sixtuple(rng: &mut impl Rng) -> ProjectiveConfiguration {
    let mut ts: Vec<i64> = Vec::with_capacity(6);
    while ts.len() < 6 {
        let t = rng.gen_range(-20..=20);
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    let points = ts
        .iter()
        .map(|&t| ProjectivePoint::from_ints(&[1, t]).expect("nonzero"))
        .collect();
    ProjectiveConfiguration::new(1, points).expect("six points of the line")
}

/// Stability test case generator: mixes generic configurations with
/// coincidence clusters and rank-deficient families so every verdict
/// arises.
pub fn random_stability_case(
    rng: &mut impl Rng,
    ambient_dim: usize,
    n: usize,
) -> ProjectiveConfiguration {
    match rng.gen_range(0..5) {
        0 | 1 => random_configuration(rng, ambient_dim, n),
        2 | 3 => {
            // draw from a small alphabet of directions, possibly rescaled
            let alphabet_size = rng.gen_range(1..=n.min(4));
            let alphabet: Vec<ProjectivePoint> = (0..alphabet_size)
                .map(|_| random_point(rng, ambient_dim))
                .collect();
            let points = (0..n)
                .map(|_| {
                    let p = &alphabet[rng.gen_range(0..alphabet_size)];
                    let scale = Rational::from_int(*[1, 1, 2, -3].get(rng.gen_range(0..4)).unwrap());
                    ProjectivePoint::new(p.coords().iter().map(|c| c * &scale).collect())
                        .expect("scaled point stays nonzero")
                })
                .collect();
            ProjectiveConfiguration::new(ambient_dim, points).expect("shared dimension")
        }
        _ => {
            // confined to a proper coordinate subspace (always unstable)
            let sub = rng.gen_range(1..=ambient_dim.max(1));
            let points = (0..n)
                .map(|_| loop {
                    let mut coords = vec![Rational::zero(); ambient_dim + 1];
                    for c in coords.iter_mut().take(sub) {
                        *c = Rational::from_int(rng.gen_range(-9..=9));
                    }
                    if let Ok(p) = ProjectivePoint::new(coords) {
                        break p;
                    }
                })
                .collect();
            ProjectiveConfiguration::new(ambient_dim, points).expect("shared dimension")
        }
    }
}

/// A random invertible matrix with small integer entries.
pub fn random_invertible_matrix(rng: &mut impl Rng, size: usize) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..size)
            .map(|_| {
                (0..size)
                    .map(|_| Rational::from_int(rng.gen_range(-9..=9)))
                    .collect()
            })
            .collect();
        let m = RationalMatrix::from_rows(rows).expect("square literal rows");
        if m.rank() == size {
            return m;
        }
    }
}
