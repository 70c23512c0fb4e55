//! Projective hypersurfaces: polar (gradient) maps, Hessian ranks, line
//! restrictions, and interpolation of hypersurfaces through point samples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::point::ProjectivePoint;
use crate::poly::{monomials_of_degree, SparsePolynomial};
use crate::rational::Rational;

/// A hypersurface of P^d cut out by one nonzero homogeneous equation in
/// d+1 variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypersurfaceRepr", into = "HypersurfaceRepr")]
pub struct Hypersurface {
    ambient_dim: usize,
    equation: SparsePolynomial,
}

#[derive(Serialize, Deserialize)]
struct HypersurfaceRepr {
    ambient_dim: usize,
    equation: SparsePolynomial,
}

impl TryFrom<HypersurfaceRepr> for Hypersurface {
    type Error = Error;
    fn try_from(r: HypersurfaceRepr) -> Result<Self> {
        Hypersurface::new(r.ambient_dim, r.equation)
    }
}

impl From<Hypersurface> for HypersurfaceRepr {
    fn from(h: Hypersurface) -> Self {
        HypersurfaceRepr {
            ambient_dim: h.ambient_dim,
            equation: h.equation,
        }
    }
}

impl Hypersurface {
    pub fn new(ambient_dim: usize, equation: SparsePolynomial) -> Result<Self> {
        if equation.num_vars() != ambient_dim + 1 {
            return Err(Error::ArityMismatch {
                expected: ambient_dim + 1,
                found: equation.num_vars(),
            });
        }
        if equation.is_zero() {
            return Err(Error::DegenerateConfiguration {
                detail: "hypersurface equation is zero".into(),
            });
        }
        if !equation.is_homogeneous() {
            return Err(Error::DegenerateConfiguration {
                detail: "hypersurface equation is not homogeneous".into(),
            });
        }
        Ok(Hypersurface {
            ambient_dim,
            equation,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn equation(&self) -> &SparsePolynomial {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.equation.total_degree().expect("equation is nonzero")
    }

    pub fn contains(&self, p: &ProjectivePoint) -> Result<bool> {
        Ok(self.equation.evaluate(p.coords())?.is_zero())
    }
}

/// The polar map x ↦ (∂F/∂x_0(p), …, ∂F/∂x_d(p)) into the dual space.
///
/// Errors with [`Error::SingularPoint`] when every partial vanishes at
/// `p`, which is exactly the singularity test for points on the
/// hypersurface.
pub fn gradient_map(h: &Hypersurface, p: &ProjectivePoint) -> Result<ProjectivePoint> {
    if p.dim() != h.ambient_dim() {
        return Err(Error::ArityMismatch {
            expected: h.ambient_dim() + 1,
            found: p.dim() + 1,
        });
    }
    let values = h
        .equation
        .gradient()
        .iter()
        .map(|g| g.evaluate(p.coords()))
        .collect::<Result<Vec<_>>>()?;
    ProjectivePoint::new(values).map_err(|_| Error::SingularPoint)
}

/// Rank of the matrix of second partials of the equation at `p`.
pub fn hessian_rank_at(h: &Hypersurface, p: &ProjectivePoint) -> Result<usize> {
    if p.dim() != h.ambient_dim() {
        return Err(Error::ArityMismatch {
            expected: h.ambient_dim() + 1,
            found: p.dim() + 1,
        });
    }
    let n = h.ambient_dim() + 1;
    let partials = h.equation.gradient();
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        // second partials ∂²/∂x_i∂x_j for j ≤ i; the matrix is symmetric
        for j in 0..=i {
            let value = partials[i].partial(j).evaluate(p.coords())?;
            m.set(i, j, value.clone());
            m.set(j, i, value);
        }
    }
    Ok(m.rank())
}

/// Restrict `f` to the line through `p` and `q`: the exact binary form
/// f(s·p + t·q) in the parameters (s, t).
pub fn restrict_to_line(
    f: &SparsePolynomial,
    p: &ProjectivePoint,
    q: &ProjectivePoint,
) -> Result<SparsePolynomial> {
    if p.dim() + 1 != f.num_vars() || q.dim() + 1 != f.num_vars() {
        return Err(Error::ArityMismatch {
            expected: f.num_vars(),
            found: p.dim() + 1,
        });
    }
    if p.proportional_to(q) {
        return Err(Error::DegenerateConfiguration {
            detail: "line endpoints coincide projectively".into(),
        });
    }
    // x_i ↦ p_i·s + q_i·t
    let lines: Vec<SparsePolynomial> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(pi, qi)| {
            SparsePolynomial::var(2, 0)
                .scale(pi)
                .add(&SparsePolynomial::var(2, 1).scale(qi))
        })
        .collect();
    let mut result = SparsePolynomial::zero(2);
    for (m, c) in f.terms_desc() {
        let mut term = SparsePolynomial::constant(2, c.clone());
        for (var, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&lines[var]);
            }
        }
        result = result.add(&term);
    }
    Ok(result)
}

/// Basis of the space of degree-`degree` homogeneous polynomials vanishing
/// at every sample: the exact kernel of the samples × monomials evaluation
/// matrix. Each basis element is scaled so that its first nonzero
/// coefficient in the canonical monomial sequence is 1. An empty basis is
/// a valid result.
pub fn interpolate_hypersurface(
    samples: &[ProjectivePoint],
    degree: u32,
) -> Result<Vec<SparsePolynomial>> {
    let Some(first) = samples.first() else {
        return Err(Error::DimensionMismatch {
            detail: "interpolation needs at least one sample".into(),
        });
    };
    let num_vars = first.dim() + 1;
    if let Some(p) = samples.iter().find(|p| p.dim() + 1 != num_vars) {
        return Err(Error::ArityMismatch {
            expected: num_vars,
            found: p.dim() + 1,
        });
    }
    let monomials = monomials_of_degree(num_vars, degree);
    let rows: Vec<Vec<Rational>> = samples
        .iter()
        .map(|p| {
            // a primitive representative keeps the integer entries small;
            // rescaling a sample rescales its whole row (the monomials all
            // have the same degree), which leaves the kernel unchanged
            let prim = p.primitive();
            monomials
                .iter()
                .map(|m| m.evaluate(prim.coords()))
                .collect()
        })
        .collect();
    let matrix = RationalMatrix::from_rows(rows)?;
    let kernel = matrix.nullspace_basis();
    let mut basis = Vec::with_capacity(kernel.cols());
    for k in 0..kernel.cols() {
        let poly = SparsePolynomial::from_terms(
            num_vars,
            monomials
                .iter()
                .cloned()
                .zip(kernel.column(k))
                .filter(|(_, c)| !c.is_zero()),
        )?;
        basis.push(poly.normalize_leading());
    }
    Ok(basis)
}
