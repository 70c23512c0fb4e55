//! The Gale transform (association) of point configurations, and the
//! smooth-conic membership test for six points of the plane.
//!
//! For γ = r + s + 2 points of P^r with full-rank γ×(r+1) coordinate
//! matrix G, the transform returns γ points of P^s whose γ×(s+1) matrix
//! G' spans the kernel of G^T, so G^T·G' = 0 holds bit-exactly. A
//! nonsingular diagonal factor between G^T and G' only rescales rows,
//! which moves no projective point, so it is fixed to the identity; the
//! output is well defined up to projective equivalence either way.

use crate::configuration::ProjectiveConfiguration;
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::point::ProjectivePoint;
use crate::poly;

/// Gale transform of a configuration of γ = r + s + 2 points in P^r,
/// yielding γ points in P^s (s derived from the point count).
pub fn gale(config: &ProjectiveConfiguration) -> Result<ProjectiveConfiguration> {
    let r = config.ambient_dim();
    let gamma = config.len();
    if gamma < r + 2 {
        return Err(Error::DimensionMismatch {
            detail: format!(
                "need at least {} points in P^{} for a Gale transform, got {gamma}",
                r + 2,
                r
            ),
        });
    }
    let s = gamma - r - 2;
    let g = config.coordinate_matrix();
    if g.rank() < r + 1 {
        return Err(Error::DegenerateConfiguration {
            detail: format!("coordinate matrix has rank {} < {}", g.rank(), r + 1),
        });
    }
    // Columns of the kernel basis of G^T are the new coordinate columns;
    // its rows are the transformed points.
    let kernel = g.transpose().nullspace_basis();
    debug_assert_eq!(kernel.cols(), s + 1);
    let mut points = Vec::with_capacity(gamma);
    for i in 0..gamma {
        match ProjectivePoint::new(kernel.row(i).to_vec()) {
            Ok(p) => points.push(p),
            Err(Error::ZeroPoint) => return Err(Error::RowDegenerate { label: i + 1 }),
            Err(e) => return Err(e),
        }
    }
    ProjectiveConfiguration::new(s, points)
}

/// True when the six points of P² lie on a conic, i.e. when the 6×6
/// matrix of degree-2 monomials (x², xy, xz, y², yz, z²) is singular.
pub fn lies_on_conic(config: &ProjectiveConfiguration) -> Result<bool> {
    if config.ambient_dim() != 2 || config.len() != 6 {
        return Err(Error::DimensionMismatch {
            detail: format!(
                "conic test needs 6 points of P^2, got {} points of P^{}",
                config.len(),
                config.ambient_dim()
            ),
        });
    }
    let monomials = poly::monomials_of_degree(3, 2);
    let rows = config
        .points()
        .iter()
        .map(|p| {
            monomials
                .iter()
                .map(|m| m.evaluate(p.coords()))
                .collect::<Vec<_>>()
        })
        .collect();
    let m = RationalMatrix::from_rows(rows)?;
    Ok(m.rank() < 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configuration::projective_equivalent;
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn conic_points(ts: &[i64]) -> ProjectiveConfiguration {
        let rows: Vec<Vec<i64>> = ts.iter().map(|&t| vec![1, t, t * t]).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        ProjectiveConfiguration::from_int_rows(2, &refs).unwrap()
    }

    #[test]
    fn conic_configuration_is_self_associated() {
        let c = conic_points(&[0, 1, 2, 3, 4, 5]);
        let transformed = gale(&c).unwrap();
        assert_eq!(transformed.ambient_dim(), 2);
        assert!(projective_equivalent(&c, &transformed).unwrap().is_some());
    }

    #[test]
    fn kernel_condition_holds_bit_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let c = sample::random_configuration(&mut rng, 2, 6);
            let g = c.coordinate_matrix();
            if g.rank() < 3 {
                continue;
            }
            let transformed = gale(&c).unwrap();
            let gp = transformed.coordinate_matrix();
            let product = g.transpose().mul(&gp.clone()).unwrap();
            assert!(product.is_zero());
        }
    }

    #[test]
    fn collinear_input_is_rejected() {
        let c = ProjectiveConfiguration::from_int_rows(
            2,
            &[
                &[1, 0, 0],
                &[1, 1, 0],
                &[1, 2, 0],
                &[1, 3, 0],
                &[1, 4, 0],
                &[1, 5, 0],
            ],
        )
        .unwrap();
        assert!(matches!(
            gale(&c),
            Err(Error::DegenerateConfiguration { .. })
        ));
    }

    #[test]
    fn five_collinear_points_make_the_sixth_row_degenerate() {
        // Points 1–5 on the line z = 0 and point 6 off it: the linear form
        // z shows e₆ lies in the column span of G, so every kernel vector
        // has sixth coordinate zero.
        let c = ProjectiveConfiguration::from_int_rows(
            2,
            &[
                &[1, 0, 0],
                &[1, 1, 0],
                &[1, 2, 0],
                &[1, 3, 0],
                &[1, 4, 0],
                &[0, 0, 1],
            ],
        )
        .unwrap();
        assert_eq!(gale(&c), Err(Error::RowDegenerate { label: 6 }));
    }

    #[test]
    fn involution_up_to_projective_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut checked = 0;
        while checked < 8 {
            let c = sample::random_configuration(&mut rng, 2, 6);
            if c.coordinate_matrix().rank() < 3 {
                continue;
            }
            let twice = gale(&gale(&c).unwrap()).unwrap();
            assert!(projective_equivalent(&c, &twice).unwrap().is_some());
            checked += 1;
        }
    }

    #[test]
    fn conic_membership_examples() {
        assert!(lies_on_conic(&conic_points(&[0, 1, 2, 3, 4, 5])).unwrap());

        // five conic points plus a generic off-conic point
        let off = ProjectiveConfiguration::from_int_rows(
            2,
            &[
                &[1, 0, 0],
                &[1, 1, 1],
                &[1, 2, 4],
                &[1, 3, 9],
                &[1, 4, 16],
                &[1, 1, 2],
            ],
        )
        .unwrap();
        assert!(!lies_on_conic(&off).unwrap());

        // repeated point: some conic always passes through ≤ 5 distinct points
        let repeated = ProjectiveConfiguration::from_int_rows(
            2,
            &[
                &[1, 0, 0],
                &[1, 1, 1],
                &[1, 2, 4],
                &[1, 3, 9],
                &[1, 5, 7],
                &[1, 5, 7],
            ],
        )
        .unwrap();
        assert!(lies_on_conic(&repeated).unwrap());
    }
}
