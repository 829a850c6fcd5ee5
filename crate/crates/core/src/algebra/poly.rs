use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Scalar;

/// Dense univariate polynomial in `t`. The coefficient vector never has a
/// trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 - t^e` for `e >= 1`.
    pub fn one_minus_t_pow(e: usize) -> Self {
        assert!(e >= 1, "exponent must be positive");
        let mut coeffs = vec![T::zero(); e + 1];
        coeffs[0] = T::one();
        coeffs[e] = -T::one();
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Value at `t = 1`.
    pub fn sum_of_coeffs(&self) -> T {
        self.coeffs.iter().cloned().fold(T::zero(), |acc, c| acc + c)
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// `t^deg * p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn mul_one_minus_t_pow(&self, e: usize) -> Self {
        assert!(e >= 1, "exponent must be positive");
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len() + e, T::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + e] = coeffs[k + e].clone() - c.clone();
        }
        Self::new(coeffs)
    }

    /// Exact quotient by `1 - t^e`, or `None` when it does not divide.
    pub fn div_one_minus_t_pow(&self, e: usize) -> Option<Self> {
        assert!(e >= 1, "exponent must be positive");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // p = q (1 - t^e)  <=>  q_k = p_k + q_{k-e}, and q has degree deg p - e.
        let n = self.coeffs.len();
        if n <= e {
            return None;
        }
        let mut q: Vec<T> = Vec::with_capacity(n - e);
        for k in 0..n - e {
            let mut c = self.coeffs[k].clone();
            if k >= e {
                c = c + q[k - e].clone();
            }
            q.push(c);
        }
        // The top e coefficients must equal -q_{k-e}.
        for k in n - e..n {
            let expected = if k >= e { -q[k - e].clone() } else { T::zero() };
            if expected != self.coeffs[k] {
                return None;
            }
        }
        Some(Self::new(q))
    }

    /// Multiplicity of `t = 1` as a root.
    pub fn root_multiplicity_at_one(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.div_one_minus_t_pow(1) {
            p = q;
            m += 1;
        }
        m
    }
}

impl<T: Scalar> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        &self * &rhs
    }
}

/// Writes `1 + 4t^2 - t^3`; the zero polynomial prints as `0`.
impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{magnitude}t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{magnitude}t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial<i64> {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn exact_division_by_one_minus_t_pow() {
        let q = p(&[1, 3, -2]);
        let prod = q.mul_one_minus_t_pow(3);
        assert_eq!(prod.div_one_minus_t_pow(3), Some(q));
        assert_eq!(p(&[1, 1]).div_one_minus_t_pow(1), None);
        assert_eq!(p(&[1, 0, -1]).div_one_minus_t_pow(1), Some(p(&[1, 1])));
        assert_eq!(p(&[1]).div_one_minus_t_pow(2), None);
    }

    #[test]
    fn root_multiplicity() {
        // (1 - t^2)^3 = (1-t)^3 (1+t)^3
        let shell = Polynomial::<i64>::one_minus_t_pow(2).pow(3);
        assert_eq!(shell.root_multiplicity_at_one(), 3);
        assert_eq!(p(&[1, 4, 4, 1]).root_multiplicity_at_one(), 0);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, 4, -1]).to_string(), "1 + 4t^2 - t^3");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
