//! Numerical (semi)stability of point configurations.
//!
//! A configuration of n = rg points in P^(r-1) is semistable when every
//! nonempty label subset S with vector-space span dimension s satisfies
//! |S| ≤ g·s, and stable when the inequality is strict for every S whose
//! span is a proper subspace (s < r). Subsets spanning everything impose
//! nothing: |S| ≤ n = g·r always holds.
//!
//! Two independent implementations are provided and must agree:
//!
//! * [`git_verdict_brute_force`] walks all 2^n − 1 subsets with an
//!   incremental echelon basis;
//! * [`git_verdict_optimized`] checks, for each s < r, the maximum number
//!   of points lying in an s-dimensional subspace, enumerating subspaces
//!   as spans of independent point subsets.
//!
//! Both report the same canonical witness: among proper-span subsets the
//! one maximizing |S|/s, preferring smaller span dimension and then the
//! lexicographically smallest label list. A maximizing subset always
//! contains every configuration point inside its own span, so the witness
//! is well defined across the two enumeration orders.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::configuration::ProjectiveConfiguration;
use crate::error::{Error, Result};
use crate::matrix::Echelon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StabilityStatus {
    #[serde(rename = "stable")]
    Stable,
    #[serde(rename = "strictly-semistable")]
    StrictlySemistable,
    #[serde(rename = "unstable")]
    Unstable,
}

/// A label subset achieving the tightest ratio |S| / (g·s).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// 1-based labels, ascending.
    pub subset: Vec<usize>,
    /// Vector-space dimension of the span of the subset's points.
    pub span_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    /// Absent only when no subset spans a proper subspace (r = 1).
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug)]
struct Candidate {
    size: usize,
    span_dim: usize,
    labels: Vec<usize>,
}

/// True when `a` is tighter than `b`: larger |S|/s, then smaller span,
/// then lexicographically smaller labels.
fn tighter(a: &Candidate, b: &Candidate) -> bool {
    let ra = a.size * b.span_dim;
    let rb = b.size * a.span_dim;
    if ra != rb {
        return ra > rb;
    }
    if a.span_dim != b.span_dim {
        return a.span_dim < b.span_dim;
    }
    a.labels < b.labels
}

fn consider(best: &mut Option<Candidate>, cand: Candidate) {
    match best {
        Some(cur) if !tighter(&cand, cur) => {}
        _ => *best = Some(cand),
    }
}

fn verdict_from_best(best: Option<Candidate>, g: usize) -> StabilityVerdict {
    match best {
        None => StabilityVerdict {
            status: StabilityStatus::Stable,
            witness: None,
        },
        Some(c) => {
            let bound = g * c.span_dim;
            let status = if c.size > bound {
                StabilityStatus::Unstable
            } else if c.size == bound {
                StabilityStatus::StrictlySemistable
            } else {
                StabilityStatus::Stable
            };
            StabilityVerdict {
                status,
                witness: Some(Witness {
                    subset: c.labels,
                    span_dim: c.span_dim,
                }),
            }
        }
    }
}

fn validate(config: &ProjectiveConfiguration, genus: usize) -> Result<usize> {
    let r = config.ambient_dim() + 1;
    if genus < 2 {
        return Err(Error::DimensionMismatch {
            detail: format!("genus parameter must be at least 2, got {genus}"),
        });
    }
    if config.len() != r * genus {
        return Err(Error::DimensionMismatch {
            detail: format!(
                "expected {}·{} = {} points in P^{}, got {}",
                r,
                genus,
                r * genus,
                r - 1,
                config.len()
            ),
        });
    }
    Ok(r)
}

/// Subset oracle: every nonempty subset is visited once, with the span
/// dimension maintained incrementally along the enumeration tree.
pub fn git_verdict_brute_force(
    config: &ProjectiveConfiguration,
    genus: usize,
) -> Result<StabilityVerdict> {
    let r = validate(config, genus)?;
    let mut best: Option<Candidate> = None;
    let mut labels = Vec::new();
    dfs(config, r, 0, &Echelon::new(), &mut labels, &mut best);
    Ok(verdict_from_best(best, genus))
}

fn dfs(
    config: &ProjectiveConfiguration,
    r: usize,
    start: usize,
    echelon: &Echelon,
    labels: &mut Vec<usize>,
    best: &mut Option<Candidate>,
) {
    for i in start..config.len() {
        let mut extended = echelon.clone();
        extended.insert(config.point(i).coords());
        labels.push(i + 1);
        if extended.dim() < r {
            consider(
                best,
                Candidate {
                    size: labels.len(),
                    span_dim: extended.dim(),
                    labels: labels.clone(),
                },
            );
        }
        dfs(config, r, i + 1, &extended, labels, best);
        labels.pop();
    }
}

/// Per-dimension test: for each s in 1..r, enumerate spans of independent
/// point subsets of size s and count the configuration points they contain.
pub fn git_verdict_optimized(
    config: &ProjectiveConfiguration,
    genus: usize,
) -> Result<StabilityVerdict> {
    let r = validate(config, genus)?;
    let n = config.len();
    let mut best: Option<Candidate> = None;
    for size in 1..r {
        for subset in (0..n).combinations(size) {
            let mut span = Echelon::new();
            for &i in &subset {
                span.insert(config.point(i).coords());
            }
            if span.dim() < size {
                // dependent generators; the same subspace arises from a
                // smaller subset
                continue;
            }
            let members: Vec<usize> = (0..n)
                .filter(|&i| span.contains(config.point(i).coords()))
                .collect();
            // The members may span less than the generating subspace
            // (e.g. repeated points); record the honest dimension.
            let mut member_span = Echelon::new();
            for &i in &members {
                member_span.insert(config.point(i).coords());
            }
            consider(
                &mut best,
                Candidate {
                    size: members.len(),
                    span_dim: member_span.dim(),
                    labels: members.iter().map(|&i| i + 1).collect(),
                },
            );
        }
    }
    Ok(verdict_from_best(best, genus))
}

/// Stability verdict for a configuration of rg points in P^(r-1).
///
/// This entry point runs the optimized per-dimension test;
/// [`git_verdict_brute_force`] is the independent subset oracle.
pub fn git_verdict(config: &ProjectiveConfiguration, genus: usize) -> Result<StabilityVerdict> {
    git_verdict_optimized(config, genus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configuration::projective_equivalent;
    use crate::matrix::RationalMatrix;
    use crate::sample;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p1_config(ts: &[(i64, i64)]) -> ProjectiveConfiguration {
        ProjectiveConfiguration::new(
            1,
            ts.iter()
                .map(|&(u, w)| crate::point::ProjectivePoint::from_ints(&[u, w]).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn six_distinct_points_on_line_are_stable() {
        let c = p1_config(&[(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (1, 4)]);
        let v = git_verdict_brute_force(&c, 3).unwrap();
        assert_eq!(v.status, StabilityStatus::Stable);
        assert_eq!(v, git_verdict_optimized(&c, 3).unwrap());
    }

    #[test]
    fn three_and_three_is_strictly_semistable_with_first_triple_witness() {
        let c = p1_config(&[(1, 0), (1, 0), (1, 0), (0, 1), (0, 1), (0, 1)]);
        let v = git_verdict(&c, 3).unwrap();
        assert_eq!(v.status, StabilityStatus::StrictlySemistable);
        let w = v.witness.unwrap();
        assert_eq!(w.subset, vec![1, 2, 3]);
        assert_eq!(w.span_dim, 1);
    }

    #[test]
    fn all_points_equal_is_unstable() {
        let c = p1_config(&[(1, 1); 6]);
        let v = git_verdict(&c, 3).unwrap();
        assert_eq!(v.status, StabilityStatus::Unstable);
        let w = v.witness.unwrap();
        assert_eq!(w.subset, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(w.span_dim, 1);
        assert_eq!(v, git_verdict_brute_force(&c, 3).unwrap());
    }

    #[test]
    fn point_count_must_match_rank_times_genus() {
        let c = p1_config(&[(1, 0), (0, 1), (1, 1), (1, 2), (1, 3)]);
        assert!(matches!(
            git_verdict(&c, 3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn verdict_invariant_under_projective_transform() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let c = sample::random_configuration(&mut rng, 2, 6);
            let m = sample::random_invertible_matrix(&mut rng, 3);
            let moved = c.apply_matrix(&m).unwrap();
            assert_eq!(git_verdict(&c, 2).unwrap(), git_verdict(&moved, 2).unwrap());
        }
    }

    #[test]
    fn status_invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..25 {
            let c = sample::random_configuration(&mut rng, 1, 6);
            let mut perm: Vec<usize> = (0..6).collect();
            for i in (1..6).rev() {
                let j = rng.gen_range(0..=i);
                perm.swap(i, j);
            }
            let relabeled = c.permuted(&perm).unwrap();
            assert_eq!(
                git_verdict(&c, 3).unwrap().status,
                git_verdict(&relabeled, 3).unwrap().status
            );
        }
    }

    #[test]
    fn oracle_and_optimized_agree_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for case in 0..60 {
            let (d, g) = if case % 2 == 0 { (1, 3) } else { (2, 2) };
            let c = sample::random_stability_case(&mut rng, d, (d + 1) * g);
            assert_eq!(
                git_verdict_brute_force(&c, g).unwrap(),
                git_verdict_optimized(&c, g).unwrap(),
                "disagreement on {c:?}"
            );
        }
    }

    #[test]
    fn transformed_configuration_stays_equivalent_and_equistable() {
        // a transformed configuration is projectively equivalent to the
        // original and gets the identical verdict
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let c = sample::random_configuration(&mut rng, 2, 6);
        let m = sample::random_invertible_matrix(&mut rng, 3);
        let moved = c.apply_matrix(&m).unwrap();
        assert!(projective_equivalent(&c, &moved).unwrap().is_some());
        assert_eq!(git_verdict(&c, 2).unwrap(), git_verdict(&moved, 2).unwrap());
        let id: RationalMatrix = RationalMatrix::identity(3);
        assert_eq!(c.apply_matrix(&id).unwrap(), c);
    }
}
