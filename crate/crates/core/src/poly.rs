//! Sparse exact multivariate polynomials.
//!
//! Terms are keyed by exponent vectors under the graded lexicographic
//! order: higher total degree first, ties broken lexicographically on the
//! exponent vector. The canonical term sequence (used by serialization
//! and by interpolation matrix columns) lists monomials in descending
//! graded-lex order, so for degree 2 in three variables it reads
//! x², xy, xz, y², yz, z².

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn evaluate(&self, coords: &[Rational]) -> Rational {
        debug_assert_eq!(coords.len(), self.exps.len());
        let mut acc = Rational::one();
        for (c, &e) in coords.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if c.is_zero() {
                return Rational::zero();
            }
            acc = acc * c.pow(e);
        }
        acc
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given total degree in `num_vars` variables, in
/// descending graded-lex order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(num_vars);
    fill(num_vars, degree, &mut current, &mut out);
    out
}

fn fill(num_vars: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if current.len() + 1 == num_vars {
        current.push(remaining);
        out.push(Monomial::new(current.clone()));
        current.pop();
        return;
    }
    for e in (0..=remaining).rev() {
        current.push(e);
        fill(num_vars, remaining - e, current, out);
        current.pop();
    }
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct SparsePolynomial {
    num_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: usize,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coef: Rational,
}

impl TryFrom<PolyRepr> for SparsePolynomial {
    type Error = Error;
    fn try_from(repr: PolyRepr) -> Result<Self> {
        SparsePolynomial::from_terms(
            repr.vars,
            repr.terms
                .into_iter()
                .map(|t| (Monomial::new(t.exp), t.coef)),
        )
    }
}

impl From<SparsePolynomial> for PolyRepr {
    fn from(p: SparsePolynomial) -> Self {
        PolyRepr {
            vars: p.num_vars,
            terms: p
                .terms_desc()
                .map(|(m, c)| TermRepr {
                    exp: m.exps().to_vec(),
                    coef: c.clone(),
                })
                .collect(),
        }
    }
}

impl std::fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "·x{i}")?,
                    _ => write!(f, "·x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl SparsePolynomial {
    pub fn zero(num_vars: usize) -> Self {
        SparsePolynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, value: Rational) -> Self {
        let mut p = Self::zero(num_vars);
        if !value.is_zero() {
            p.terms.insert(Monomial::new(vec![0; num_vars]), value);
        }
        p
    }

    /// The variable x_i as a polynomial.
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(exps), Rational::one());
        SparsePolynomial { num_vars, terms }
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::ArityMismatch {
                    expected: num_vars,
                    found: m.num_vars(),
                });
            }
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry = &*entry + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SparsePolynomial {
            num_vars,
            terms: map,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in descending graded-lex order (the canonical sequence).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// Maximum exponent sum over the support; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry = &*entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePolynomial {
            num_vars: self.num_vars,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.num_vars);
        }
        SparsePolynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.times(mb);
                let entry = terms.entry(m).or_insert_with(Rational::zero);
                *entry = &*entry + &(ca * cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePolynomial {
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            terms.insert(Monomial::new(exps), c * &Rational::from_int(e as i64));
        }
        SparsePolynomial {
            num_vars: self.num_vars,
            terms,
        }
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.num_vars).map(|v| self.partial(v)).collect()
    }

    pub fn evaluate(&self, coords: &[Rational]) -> Result<Rational> {
        if coords.len() != self.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                found: coords.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| c * &m.evaluate(coords))
            .sum())
    }

    /// Canonical representative up to scale: the coefficient of the first
    /// monomial in the canonical (descending graded-lex) sequence becomes 1.
    pub fn normalize_leading(&self) -> Self {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, lead)) => self.scale(&lead.recip()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn canonical_degree_two_order_in_three_vars() {
        let ms = monomials_of_degree(3, 2);
        let exps: Vec<&[u32]> = ms.iter().map(|m| m.exps()).collect();
        assert_eq!(
            exps,
            vec![
                &[2, 0, 0][..],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 2, 0],
                &[0, 1, 1],
                &[0, 0, 2]
            ]
        );
    }

    #[test]
    fn monomial_counts_for_interpolation_spaces() {
        assert_eq!(monomials_of_degree(5, 3).len(), 35);
        assert_eq!(monomials_of_degree(5, 4).len(), 70);
    }

    #[test]
    fn evaluate_monomial_cube() {
        // x0³ at (1:0:0:0:0)
        let f = SparsePolynomial::from_terms(
            5,
            [(Monomial::new(vec![3, 0, 0, 0, 0]), Rational::one())],
        )
        .unwrap();
        let coords = vec![rat(1), rat(0), rat(0), rat(0), rat(0)];
        assert_eq!(f.evaluate(&coords).unwrap(), Rational::one());
    }

    fn random_homogeneous(rng: &mut ChaCha8Rng, num_vars: usize, degree: u32) -> SparsePolynomial {
        let monomials = monomials_of_degree(num_vars, degree);
        let terms: Vec<(Monomial, Rational)> = monomials
            .into_iter()
            .filter(|_| rng.gen_bool(0.4))
            .map(|m| (m, Rational::from_int(rng.gen_range(-9..=9))))
            .collect();
        SparsePolynomial::from_terms(num_vars, terms).unwrap()
    }

    #[test]
    fn homogeneous_scaling_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let f = random_homogeneous(&mut rng, 3, 4);
            let p: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-5..=5))).collect();
            let doubled: Vec<Rational> = p.iter().map(|c| c * &rat(2)).collect();
            let lhs = f.evaluate(&doubled).unwrap();
            let rhs = rat(2).pow(4) * f.evaluate(&p).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn euler_identity_as_polynomial_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..20 {
            let nv = rng.gen_range(2..=4);
            let deg = rng.gen_range(1..=5u32);
            let f = random_homogeneous(&mut rng, nv, deg);
            let mut sum = SparsePolynomial::zero(nv);
            for v in 0..nv {
                sum = sum.add(&SparsePolynomial::var(nv, v).mul(&f.partial(v)));
            }
            assert_eq!(sum, f.scale(&rat(deg as i64)));
        }
    }

    #[test]
    fn symmetric_difference_quotient_matches_gradient_on_quadrics() {
        // smoke test only; the Euler identity above is the authoritative
        // derivative check. For degree ≤ 2 the symmetric quotient is exact.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let f = random_homogeneous(&mut rng, 3, 2);
            let p: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-5..=5))).collect();
            let h = Rational::from_frac(1, 7);
            for v in 0..3 {
                let mut plus = p.clone();
                plus[v] = &plus[v] + &h;
                let mut minus = p.clone();
                minus[v] = &minus[v] - &h;
                let quotient = (f.evaluate(&plus).unwrap() - f.evaluate(&minus).unwrap())
                    / (&h + &h);
                assert_eq!(quotient, f.partial(v).evaluate(&p).unwrap());
            }
        }
    }

    #[test]
    fn serde_terms_sorted_in_descending_graded_lex() {
        let f = SparsePolynomial::from_terms(
            3,
            [
                (Monomial::new(vec![0, 0, 2]), rat(5)),
                (Monomial::new(vec![2, 0, 0]), rat(1)),
                (Monomial::new(vec![0, 1, 1]), rat(-2)),
            ],
        )
        .unwrap();
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(
            js,
            r#"{"vars":3,"terms":[{"exp":[2,0,0],"coef":"1"},{"exp":[0,1,1],"coef":"-2"},{"exp":[0,0,2],"coef":"5"}]}"#
        );
        let back: SparsePolynomial = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn normalize_sets_first_canonical_coefficient_to_one() {
        let f = SparsePolynomial::from_terms(
            2,
            [
                (Monomial::new(vec![2, 0]), rat(4)),
                (Monomial::new(vec![0, 2]), rat(6)),
            ],
        )
        .unwrap();
        let n = f.normalize_leading();
        assert_eq!(n.coefficient(&Monomial::new(vec![2, 0])), Rational::one());
        assert_eq!(
            n.coefficient(&Monomial::new(vec![0, 2])),
            Rational::from_frac(3, 2)
        );
    }
}
