//! Dense matrices over the rationals.
//!
//! Row reduction uses partial pivoting on the magnitude `|numer|·denom` of
//! the candidate pivots, which keeps intermediate entries small; every
//! arithmetic step reduces to lowest terms (that is automatic for
//! [`Rational`]). Rank, right-kernel bases, and inverses are all exact.
//!
//! Matrices serialize as row-major arrays of `"p/q"` strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Rational>>", into = "Vec<Vec<Rational>>")]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>, // row-major
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(r)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::DimensionMismatch {
                detail: "matrix needs at least one row and one column".into(),
            });
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                detail: "rows have unequal lengths".into(),
            });
        }
        let nrows = rows.len();
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "cannot multiply {}x{} by {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    let a = self.at(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a * other.at(k, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Apply the matrix to a coordinate vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Pick the nonzero candidate with the smallest |numer|·denom.
            let mut chosen: Option<(usize, num_bigint::BigInt)> = None;
            for r in pivot_row..self.rows {
                let entry = self.at(r, col);
                if entry.is_zero() {
                    continue;
                }
                let mag = entry.magnitude();
                match &chosen {
                    Some((_, best)) if *best <= mag => {}
                    _ => chosen = Some((r, mag)),
                }
            }
            let Some((r, _)) = chosen else { continue };
            self.swap_rows(pivot_row, r);
            let inv = self.at(pivot_row, col).recip();
            self.scale_row(pivot_row, &inv);
            for other in 0..self.rows {
                if other == pivot_row || self.at(other, col).is_zero() {
                    continue;
                }
                let factor = self.at(other, col).clone();
                self.row_sub_scaled(other, pivot_row, &factor, col);
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * factor;
            }
        }
    }

    /// row[dst] -= factor * row[src], starting from column `from`.
    fn row_sub_scaled(&mut self, dst: usize, src: usize, factor: &Rational, from: usize) {
        for c in from..self.cols {
            let s = self.at(src, c);
            if s.is_zero() {
                continue;
            }
            let val = self.at(dst, c) - &(factor * s);
            self.set(dst, c, val);
        }
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel: a matrix `B` with `self · B = 0` whose
    /// columns are independent; the column count is `cols − rank`. Each
    /// basis column is scaled so its first nonzero entry is 1.
    pub fn nullspace_basis(&self) -> Self {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -rref.at(row, f);
            }
            let lead = v
                .iter()
                .find(|x| !x.is_zero())
                .expect("kernel vector has a unit entry")
                .clone();
            for (r, entry) in v.into_iter().enumerate() {
                if !entry.is_zero() {
                    out.set(r, k, &entry / &lead);
                }
            }
        }
        out
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.at(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

impl TryFrom<Vec<Vec<Rational>>> for RationalMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<RationalMatrix> for Vec<Vec<Rational>> {
    fn from(m: RationalMatrix) -> Self {
        m.to_rows()
    }
}

/// Incremental row-echelon accumulator for span-dimension queries.
///
/// Rows are kept reduced with strictly increasing leading columns, so
/// inserting or membership-testing a vector costs one reduction pass.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<Vec<Rational>>,
    leads: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &lead) in self.rows.iter().zip(&self.leads) {
            if v[lead].is_zero() {
                continue;
            }
            let factor = v[lead].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns `true` when it enlarges the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let reduced = self.reduce(v);
        let Some(lead) = reduced.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = reduced[lead].recip();
        let normalized: Vec<Rational> = reduced
            .iter()
            .map(|x| if x.is_zero() { Rational::zero() } else { x * &inv })
            .collect();
        let pos = self.leads.partition_point(|&l| l < lead);
        self.rows.insert(pos, normalized);
        self.leads.insert(pos, lead);
        true
    }
}

/// Dimension of the linear span of a family of coordinate vectors.
pub(crate) fn span_dimension<'a, I>(vectors: I) -> usize
where
    I: IntoIterator<Item = &'a [Rational]>,
{
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.dim()
}
