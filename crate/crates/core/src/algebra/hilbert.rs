use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};


use thiserror::Error;

use super::{Polynomial, PowerSeries, Scalar};

/// Coefficients held back from solving and used only to verify a
/// reconstructed closed form.
pub const DEFAULT_GUARD: usize = 4;

/// Rational function `numerator / prod_e (1 - t^e)`.
///
/// Construction reduces greedily: while the numerator is divisible by some
/// denominator factor `1 - t^e`, that factor is cancelled. The denominator is
/// kept sorted ascending. Equality compares the underlying rational
/// functions, not the stored representation.
#[derive(Clone, Debug)]
pub struct RationalSeries<T> {
    numerator: Polynomial<T>,
    denominator: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("guard must be at least 1")]
    InvalidGuard,
    #[error("series known to degree {have}, reconstruction needs degree {need}")]
    TooShort { have: usize, need: usize },
    #[error("no numerator of degree <= {max_numerator_degree} matches; coefficient {degree} of series x denominator is nonzero")]
    NoMatch {
        max_numerator_degree: usize,
        degree: usize,
    },
}

impl<T: Scalar> RationalSeries<T> {
    pub fn new(numerator: Polynomial<T>, mut denominator: Vec<usize>) -> Self {
        assert!(
            denominator.iter().all(|&e| e >= 1),
            "denominator exponents must be positive"
        );
        denominator.sort_unstable();
        let mut h = Self {
            numerator,
            denominator,
        };
        h.reduce();
        h
    }

    pub fn polynomial(p: Polynomial<T>) -> Self {
        Self::new(p, Vec::new())
    }

    pub fn one() -> Self {
        Self::polynomial(Polynomial::one())
    }

    /// `1 / (1 - t)^k`
    pub fn free(k: usize) -> Self {
        Self::new(Polynomial::one(), vec![1; k])
    }

    fn reduce(&mut self) {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return;
        }
        let mut distinct: Vec<usize> = self.denominator.clone();
        distinct.dedup();
        for &e in distinct.iter().rev() {
            while let Some(pos) = self.denominator.iter().position(|&x| x == e) {
                match self.numerator.div_one_minus_t_pow(e) {
                    Some(q) => {
                        self.numerator = q;
                        self.denominator.remove(pos);
                    }
                    None => break,
                }
            }
        }
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.numerator
    }

    pub fn denominator(&self) -> &[usize] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn denominator_degree(&self) -> usize {
        self.denominator.iter().sum()
    }

    /// Order of the pole at `t = 1` (negative for a zero there).
    pub fn pole_order_at_one(&self) -> i64 {
        assert!(!self.is_zero(), "zero series has no pole order");
        self.denominator.len() as i64 - self.numerator.root_multiplicity_at_one() as i64
    }

    /// `deg(numerator) - sum(e)`, the degree of the rational function.
    pub fn rational_degree(&self) -> i64 {
        let deg = self.numerator.degree().expect("zero series has no degree");
        deg as i64 - self.denominator_degree() as i64
    }

    /// `prod (1 - t^e)` over the denominator.
    pub fn denominator_polynomial(&self) -> Polynomial<T> {
        product_of_factors(&self.denominator)
    }

    /// Multiply by `1 / (1 - t^e)` for each listed exponent.
    pub fn divide_by_factors(&self, extra: &[usize]) -> Self {
        let mut den = self.denominator.clone();
        den.extend_from_slice(extra);
        Self::new(self.numerator.clone(), den)
    }

    /// Multiply by `(1 - t^e)` for each listed exponent.
    pub fn multiply_by_factors(&self, extra: &[usize]) -> Self {
        let num = extra
            .iter()
            .fold(self.numerator.clone(), |acc, &e| acc.mul_one_minus_t_pow(e));
        Self::new(num, self.denominator.clone())
    }

    /// Rewrite over a common denominator that contains every factor of both.
    fn common_denominator(&self, other: &Self) -> (Vec<usize>, Polynomial<T>, Polynomial<T>) {
        let a = multiset(&self.denominator);
        let b = multiset(&other.denominator);
        let mut common = Vec::new();
        let mut extra_a = Vec::new();
        let mut extra_b = Vec::new();
        for e in a.keys().chain(b.keys()).copied().collect::<std::collections::BTreeSet<_>>() {
            let ka = a.get(&e).copied().unwrap_or(0);
            let kb = b.get(&e).copied().unwrap_or(0);
            let k = ka.max(kb);
            common.extend(std::iter::repeat_n(e, k));
            extra_a.extend(std::iter::repeat_n(e, k - ka));
            extra_b.extend(std::iter::repeat_n(e, k - kb));
        }
        let na = &self.numerator * &product_of_factors(&extra_a);
        let nb = &other.numerator * &product_of_factors(&extra_b);
        (common, na, nb)
    }
}

fn multiset(values: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &v in values {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

fn product_of_factors<T: Scalar>(exponents: &[usize]) -> Polynomial<T> {
    exponents
        .iter()
        .fold(Polynomial::one(), |acc, &e| acc.mul_one_minus_t_pow(e))
}

impl<T: Scalar> PartialEq for RationalSeries<T> {
    fn eq(&self, other: &Self) -> bool {
        let (_, a, b) = self.common_denominator(other);
        a == b
    }
}

impl<T: Scalar + Eq> Eq for RationalSeries<T> {}

impl<T: Scalar> Add for &RationalSeries<T> {
    type Output = RationalSeries<T>;
    fn add(self, rhs: Self) -> RationalSeries<T> {
        let (den, a, b) = self.common_denominator(rhs);
        RationalSeries::new(&a + &b, den)
    }
}

impl<T: Scalar> Mul for &RationalSeries<T> {
    type Output = RationalSeries<T>;
    fn mul(self, rhs: Self) -> RationalSeries<T> {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&rhs.denominator);
        RationalSeries::new(&self.numerator * &rhs.numerator, den)
    }
}

/// `(1 + 4t^2 + 4t^4 + t^6) / (1-t^2)^6`; the denominator factors are grouped
/// and listed in ascending exponent order.
impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for RationalSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let single_term = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        if single_term {
            write!(f, "{} / ", self.numerator)?;
        } else {
            write!(f, "({}) / ", self.numerator)?;
        }
        let groups = multiset(&self.denominator);
        let wrap = groups.len() > 1;
        if wrap {
            write!(f, "(")?;
        }
        for (i, (e, k)) in groups.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "(1-t)")?;
            } else {
                write!(f, "(1-t^{e})")?;
            }
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Coefficients `0..=bound` of `H`.
pub fn expand<T: Scalar>(h: &RationalSeries<T>, bound: usize) -> PowerSeries<T> {
    let mut s = PowerSeries::from_polynomial(&h.numerator, bound);
    for &e in &h.denominator {
        s = s.div_one_minus_t_pow(e);
    }
    s
}

/// Recover a closed form with the given denominator from a truncated series.
///
/// The candidate numerator is `s * prod (1 - t^e)` truncated to degree
/// `bound - guard`; the remaining `guard` coefficients of that product must
/// vanish. On success the returned series expands to all of `s`.
pub fn reconstruct<T: Scalar>(
    s: &PowerSeries<T>,
    denominator: &[usize],
    guard: usize,
) -> Result<RationalSeries<T>, ReconstructError> {
    if guard == 0 {
        return Err(ReconstructError::InvalidGuard);
    }
    assert!(
        denominator.iter().all(|&e| e >= 1),
        "denominator exponents must be positive"
    );
    let need = denominator.iter().sum::<usize>() + guard;
    if s.bound() < need {
        return Err(ReconstructError::TooShort {
            have: s.bound(),
            need,
        });
    }
    let cleared = denominator
        .iter()
        .fold(s.clone(), |acc, &e| acc.mul_one_minus_t_pow(e));
    let cutoff = s.bound() - guard;
    if let Some(k) = (cutoff + 1..=s.bound()).find(|&k| !cleared.coeff(k).is_zero()) {
        return Err(ReconstructError::NoMatch {
            max_numerator_degree: cutoff,
            degree: k,
        });
    }
    let numerator = Polynomial::new(cleared.coeffs()[..=cutoff].to_vec());
    Ok(RationalSeries::new(numerator, denominator.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type H = RationalSeries<BigInt>;

    fn poly(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn ints(s: &PowerSeries<BigInt>) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    fn adjoint_plus_standard() -> H {
        H::new(poly(&[1, 0, 2, 3, 2, 2, 3, 2, 0, 1]), vec![2, 2, 3, 6])
    }

    #[test]
    fn expand_geometric() {
        // (1 - t^2) / (1 - t)^2 held as (1 + t) / (1 - t)
        let h = H::new(poly(&[1, 1]), vec![1]);
        assert_eq!(ints(&expand(&h, 3)), vec![1, 2, 2, 2]);
    }

    #[test]
    fn expand_r2_plus_r1_closed_form() {
        // Degree 2 and 3 invariant counts of the R2+R1 quotient.
        assert_eq!(ints(&expand(&adjoint_plus_standard(), 3)), vec![1, 0, 4, 4]);
    }

    #[test]
    fn expand_constant() {
        assert_eq!(ints(&expand(&H::one(), 5)), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn canonical_reduction_cancels_factors() {
        let h = H::new(poly(&[1, 0, -1]), vec![1, 1]);
        assert_eq!(h.denominator(), &[1]);
        assert_eq!(h.numerator(), &poly(&[1, 1]));
        let shell = H::new(Polynomial::one_minus_t_pow(2).pow(3), vec![1; 10]);
        assert_eq!(shell.denominator().len(), 7);
        assert_eq!(shell.rational_degree(), -4);
    }

    #[test]
    fn equality_is_semantic() {
        let a = H::new(poly(&[1]), vec![1]);
        let b = H::new(poly(&[1, 1]), vec![2]);
        assert_eq!(a, b);
        assert_ne!(a, H::new(poly(&[1]), vec![2]));
    }

    #[test]
    fn addition_over_common_denominator() {
        let a = H::new(poly(&[1]), vec![2]);
        let b = H::new(poly(&[0, 1]), vec![2]);
        assert_eq!(&a + &b, H::free(1));
    }

    #[test]
    fn reconstruct_round_trip() {
        let h = H::new(poly(&[1, 0, 1]), vec![2, 2]);
        let s = expand(&h, 10);
        let r = reconstruct(&s, &[2, 2], DEFAULT_GUARD).unwrap();
        assert_eq!(r.numerator(), &poly(&[1, 0, 1]));
        assert_eq!(r.denominator(), &[2, 2]);
    }

    #[test]
    fn reconstruct_r2_plus_r1() {
        let s = expand(&adjoint_plus_standard(), 30);
        let r = reconstruct(&s, &[2, 2, 3, 6], DEFAULT_GUARD).unwrap();
        assert_eq!(r.numerator(), &poly(&[1, 0, 2, 3, 2, 2, 3, 2, 0, 1]));
    }

    #[test]
    fn reconstruct_even_denominator_for_geometric_series() {
        // 1/(1-t) = (1+t)/(1-t^2): an even-only denominator still fits.
        let s = expand(&H::free(1), 6);
        let r = reconstruct(&s, &[2], DEFAULT_GUARD).unwrap();
        assert_eq!(r, H::free(1));
        // 1/(1-t)^2 has a double pole at 1 and cannot be written over (1-t^2).
        let s = expand(&H::free(2), 6);
        assert!(matches!(
            reconstruct(&s, &[2], DEFAULT_GUARD),
            Err(ReconstructError::NoMatch { .. })
        ));
    }

    #[test]
    fn reconstruct_rejects_short_input() {
        let s = expand(&H::free(1), 4);
        assert_eq!(
            reconstruct(&s, &[2], DEFAULT_GUARD),
            Err(ReconstructError::TooShort { have: 4, need: 6 })
        );
        assert_eq!(reconstruct(&s, &[2], 0), Err(ReconstructError::InvalidGuard));
    }

    #[test]
    fn display_groups_factors() {
        let h = H::new(poly(&[1, 0, 4, 0, 4, 0, 1]), vec![2; 6]);
        assert_eq!(h.to_string(), "(1 + 4t^2 + 4t^4 + t^6) / (1-t^2)^6");
        assert_eq!(
            adjoint_plus_standard().to_string(),
            "(1 + 2t^2 + 3t^3 + 2t^4 + 2t^5 + 3t^6 + 2t^7 + t^9) / ((1-t^2)^2 (1-t^3) (1-t^6))"
        );
        assert_eq!(H::one().to_string(), "1");
        assert_eq!(H::free(2).to_string(), "1 / (1-t)^2");
    }
}
