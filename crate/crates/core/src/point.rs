//! Points of projective space with exact homogeneous coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

/// A point of P^d, stored as a nonzero coordinate vector of length d+1.
///
/// Note that derived equality is coordinate-wise; use [`proportional_to`]
/// for projective comparison, or [`canonical`] / [`primitive`] to pick a
/// distinguished representative first.
///
/// [`proportional_to`]: ProjectivePoint::proportional_to
/// [`canonical`]: ProjectivePoint::canonical
/// [`primitive`]: ProjectivePoint::primitive
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() || coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Dimension of the ambient projective space (one less than the
    /// coordinate count).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// True when the two coordinate vectors differ by a nonzero scalar.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let pivot = self
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("point is nonzero");
        if other.coords[pivot].is_zero() {
            return false;
        }
        // cross-multiply against the pivot coordinate
        self.coords.iter().zip(&other.coords).all(|(a, b)| {
            &(a * &other.coords[pivot]) - &(b * &self.coords[pivot]) == Rational::zero()
        })
    }

    /// The representative with first nonzero coordinate equal to 1.
    pub fn canonical(&self) -> Self {
        let pivot = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("point is nonzero")
            .clone();
        ProjectivePoint {
            coords: self.coords.iter().map(|c| c / &pivot).collect(),
        }
    }

    /// The representative with coprime integer coordinates whose first
    /// nonzero entry is positive. Keeps downstream arithmetic small.
    pub fn primitive(&self) -> Self {
        let mut denom_lcm = BigInt::one();
        for c in &self.coords {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for n in &ints {
            gcd = gcd.gcd(n);
        }
        if !gcd.is_one() {
            for n in &mut ints {
                *n = &*n / &gcd;
            }
        }
        if ints
            .iter()
            .find(|n| !n.is_zero())
            .map(|n| n.is_negative())
            .unwrap_or(false)
        {
            for n in &mut ints {
                *n = -&*n;
            }
        }
        ProjectivePoint {
            coords: ints
                .into_iter()
                .map(|n| Rational::new(n, BigInt::one()))
                .collect(),
        }
    }

    /// Image under an invertible linear map.
    pub fn apply(&self, m: &RationalMatrix) -> Result<Self> {
        ProjectivePoint::new(m.apply(&self.coords)?)
    }
}

impl TryFrom<Vec<Rational>> for ProjectivePoint {
    type Error = Error;
    fn try_from(coords: Vec<Rational>) -> Result<Self> {
        Self::new(coords)
    }
}

impl From<ProjectivePoint> for Vec<Rational> {
    fn from(p: ProjectivePoint) -> Self {
        p.coords
    }
}
