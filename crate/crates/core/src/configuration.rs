//! Labeled point configurations in projective space.
//!
//! A configuration is an ordered list of points of P^d; labels are the
//! 1-based positions. Projective equivalence of two configurations is
//! decided by frame normalization: find the lexicographically first label
//! subset of size d+2 in general position in both configurations, map both
//! frames to the standard frame, and compare the remaining points up to
//! scale.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::point::ProjectivePoint;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigRepr", into = "ConfigRepr")]
pub struct ProjectiveConfiguration {
    ambient_dim: usize,
    points: Vec<ProjectivePoint>,
}

#[derive(Serialize, Deserialize)]
struct ConfigRepr {
    ambient_dim: usize,
    points: Vec<ProjectivePoint>,
}

impl TryFrom<ConfigRepr> for ProjectiveConfiguration {
    type Error = Error;
    fn try_from(repr: ConfigRepr) -> Result<Self> {
        ProjectiveConfiguration::new(repr.ambient_dim, repr.points)
    }
}

impl From<ProjectiveConfiguration> for ConfigRepr {
    fn from(c: ProjectiveConfiguration) -> Self {
        ConfigRepr {
            ambient_dim: c.ambient_dim,
            points: c.points,
        }
    }
}

impl ProjectiveConfiguration {
    pub fn new(ambient_dim: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::DimensionMismatch {
                detail: "configuration needs at least one point".into(),
            });
        }
        if let Some(p) = points.iter().find(|p| p.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "point with {} coordinates in a configuration of ambient dimension {}",
                    p.dim() + 1,
                    ambient_dim
                ),
            });
        }
        Ok(ProjectiveConfiguration {
            ambient_dim,
            points,
        })
    }

    /// Build from integer coordinate rows, mostly for tests.
    pub fn from_int_rows(ambient_dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let points = rows
            .iter()
            .map(|r| ProjectivePoint::from_ints(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient_dim, points)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point at 0-based index. Labels in reports are `index + 1`.
    pub fn point(&self, index: usize) -> &ProjectivePoint {
        &self.points[index]
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// The n×(d+1) matrix whose rows are the point coordinates.
    pub fn coordinate_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.points.iter().map(|p| p.coords().to_vec()).collect())
            .expect("configuration is nonempty and rectangular")
    }

    /// Apply one invertible linear map to every point.
    pub fn apply_matrix(&self, m: &RationalMatrix) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|p| p.apply(m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.ambient_dim, points)
    }

    /// Reorder points by `perm`, where `perm[i]` is the 0-based source
    /// index for the new position `i`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.points.len() {
            return Err(Error::DimensionMismatch {
                detail: "permutation length differs from point count".into(),
            });
        }
        let points = perm.iter().map(|&i| self.points[i].clone()).collect();
        Self::new(self.ambient_dim, points)
    }

    /// Rescale each point by a nonzero scalar (projectively a no-op).
    pub fn rescaled(&self, scales: &[Rational]) -> Result<Self> {
        if scales.len() != self.points.len() || scales.iter().any(|s| s.is_zero()) {
            return Err(Error::DimensionMismatch {
                detail: "need one nonzero scale per point".into(),
            });
        }
        let points = self
            .points
            .iter()
            .zip(scales)
            .map(|(p, s)| {
                ProjectivePoint::new(p.coords().iter().map(|c| c * s).collect())
                    .expect("scaled point stays nonzero")
            })
            .collect();
        Self::new(self.ambient_dim, points)
    }
}

/// The projective map sending the frame labeled by `subset` (0-based,
/// size d+2, in order) to the standard frame e_1, …, e_{d+1}, (1,…,1).
/// Returns `None` when the subset is not in general position.
fn frame_normalizer(
    config: &ProjectiveConfiguration,
    subset: &[usize],
) -> Option<RationalMatrix> {
    let d = config.ambient_dim();
    debug_assert_eq!(subset.len(), d + 2);
    // Columns of A are the first d+1 frame points.
    let mut a = RationalMatrix::zeros(d + 1, d + 1);
    for (col, &idx) in subset[..d + 1].iter().enumerate() {
        for (row, coord) in config.point(idx).coords().iter().enumerate() {
            a.set(row, col, coord.clone());
        }
    }
    let a_inv = a.inverse()?;
    // Barycentric coordinates of the last frame point; all must be nonzero.
    let c = a_inv.apply(config.point(subset[d + 1]).coords()).ok()?;
    if c.iter().any(|x| x.is_zero()) {
        return None;
    }
    // M = diag(c)^{-1} · A^{-1} sends point_i to e_i and the last to (1,…,1).
    let mut m = RationalMatrix::zeros(d + 1, d + 1);
    for row in 0..d + 1 {
        let inv = c[row].recip();
        for col in 0..d + 1 {
            m.set(row, col, a_inv.at(row, col) * &inv);
        }
    }
    Some(m)
}

/// Decide projective equivalence of two like-labeled configurations.
///
/// On success returns `Some(witness)`, an invertible matrix carrying each
/// point of `a` to the like-labeled point of `b` up to scale; `None` means
/// the configurations are inequivalent. Errors with
/// [`Error::InsufficientGeneralPosition`] when no label subset of size
/// d+2 is a frame in both configurations.
pub fn projective_equivalent(
    a: &ProjectiveConfiguration,
    b: &ProjectiveConfiguration,
) -> Result<Option<RationalMatrix>> {
    if a.ambient_dim() != b.ambient_dim() || a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            detail: "configurations must share label set and ambient dimension".into(),
        });
    }
    let d = a.ambient_dim();
    let n = a.len();
    if n < d + 2 {
        return Err(Error::InsufficientGeneralPosition);
    }
    for subset in (0..n).combinations(d + 2) {
        let Some(na) = frame_normalizer(a, &subset) else {
            continue;
        };
        let Some(nb) = frame_normalizer(b, &subset) else {
            continue;
        };
        // The first common frame decides: any equivalence must match the
        // frame-normalized coordinates point by point.
        for i in 0..n {
            let pa = a.point(i).apply(&na)?;
            let pb = b.point(i).apply(&nb)?;
            if !pa.proportional_to(&pb) {
                return Ok(None);
            }
        }
        let witness = nb
            .inverse()
            .expect("frame normalizers are invertible")
            .mul(&na)?;
        return Ok(Some(witness));
    }
    Err(Error::InsufficientGeneralPosition)
}
