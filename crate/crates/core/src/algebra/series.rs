use std::ops::{Add, Mul, Sub};


use super::{Polynomial, Scalar};

/// Power series known exactly up to and including degree `bound`.
///
/// The coefficient vector always has length `bound + 1`; arithmetic between
/// series of different bounds truncates to the smaller one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    /// Takes `coeffs[0..=bound]`; panics on an empty vector.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least degree 0");
        Self { coeffs }
    }

    pub fn zero(bound: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); bound + 1],
        }
    }

    pub fn one(bound: usize) -> Self {
        let mut s = Self::zero(bound);
        s.coeffs[0] = T::one();
        s
    }

    pub fn from_polynomial(p: &Polynomial<T>, bound: usize) -> Self {
        Self {
            coeffs: (0..=bound).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn truncate(&self, bound: usize) -> Self {
        assert!(bound <= self.bound(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=bound].to_vec(),
        }
    }

    /// Multiply by `t^k`, keeping the bound.
    pub fn shift(&self, k: usize) -> Self {
        let bound = self.bound();
        let coeffs = (0..=bound)
            .map(|i| {
                if i >= k {
                    self.coeffs[i - k].clone()
                } else {
                    T::zero()
                }
            })
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn mul_polynomial(&self, p: &Polynomial<T>) -> Self {
        self * &Self::from_polynomial(p, self.bound())
    }

    pub fn mul_one_minus_t_pow(&self, e: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for k in (e..coeffs.len()).rev() {
            coeffs[k] = coeffs[k].clone() - self.coeffs[k - e].clone();
        }
        Self { coeffs }
    }

    /// Multiply by the geometric series `1 / (1 - t^e)`.
    pub fn div_one_minus_t_pow(&self, e: usize) -> Self {
        assert!(e >= 1, "exponent must be positive");
        let mut coeffs = self.coeffs.clone();
        for k in e..coeffs.len() {
            coeffs[k] = coeffs[k].clone() + coeffs[k - e].clone();
        }
        Self { coeffs }
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drop coefficients to a polynomial (exact when the series is known to
    /// terminate below the bound).
    pub fn to_polynomial(&self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.clone())
    }
}

impl<T: Scalar> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: Self) -> PowerSeries<T> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        PowerSeries {
            coeffs: (0..n)
                .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: Self) -> PowerSeries<T> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        PowerSeries {
            coeffs: (0..n)
                .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
                .collect(),
        }
    }
}

/// Truncated convolution.
impl<T: Scalar> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: Self) -> PowerSeries<T> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_division_and_back() {
        let one = PowerSeries::<i64>::one(6);
        let g = one.div_one_minus_t_pow(2);
        assert_eq!(g.coeffs(), &[1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(g.mul_one_minus_t_pow(2), one);
    }

    #[test]
    fn product_truncates_to_smaller_bound() {
        let a = PowerSeries::new(vec![1i64, 1, 1, 1]);
        let b = PowerSeries::new(vec![1i64, -1]);
        assert_eq!((&a * &b).coeffs(), &[1, 0]);
    }

    #[test]
    fn shift_keeps_bound() {
        let a = PowerSeries::new(vec![1i64, 2, 3]);
        assert_eq!(a.shift(2).coeffs(), &[0, 0, 1]);
    }
}
