use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_integer::Integer;

use super::Scalar;

/// Finite Laurent polynomial `sum c_m q^m` with integer exponents, stored
/// sparsely. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPolynomial<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, T::one())
    }

    pub fn monomial(exponent: i64, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i64) -> T {
        self.terms.get(&exponent).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `coeff(m) == coeff(-m)` for every `m`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(m, c)| self.coeff(-m) == *c)
    }

    /// Substitute `q -> q^k`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k != 0, "dilation by zero collapses the grading");
        Self {
            terms: self.terms.iter().map(|(m, c)| (m * k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x.clone() * c.clone())))
    }
}

impl<T: Scalar + Integer> LaurentPolynomial<T> {
    /// Divide every coefficient by `d`, or `None` if some coefficient is not
    /// a multiple of `d`.
    pub fn div_exact(&self, d: &T) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*m, q);
        }
        Some(Self { terms })
    }
}

impl<T: Scalar> Add for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;
    fn add(self, rhs: Self) -> LaurentPolynomial<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;
    fn mul(self, rhs: Self) -> LaurentPolynomial<T> {
        let mut out = LaurentPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut p = LaurentPolynomial::<i64>::monomial(3, 2);
        p.add_term(3, -2);
        assert!(p.is_zero());
    }

    #[test]
    fn dilate_and_symmetry() {
        let p = LaurentPolynomial::<i64>::from_terms([(1, 1), (-1, 1)]);
        assert!(p.is_symmetric());
        let d = p.dilate(3);
        assert_eq!(d.coeff(3), 1);
        assert_eq!(d.coeff(-3), 1);
        assert!(!LaurentPolynomial::<i64>::monomial(1, 1).is_symmetric());
    }

    #[test]
    fn exact_division() {
        let p = LaurentPolynomial::<i64>::from_terms([(0, 4), (2, 6)]);
        assert_eq!(p.div_exact(&2).unwrap().coeff(2), 3);
        assert!(p.div_exact(&4).is_none());
    }
}
