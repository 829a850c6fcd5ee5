//! Sparse quadratic forms, by default on the coordinates `(z, w)` of `V + V*`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Scalar;

/// Coordinate index, zero-based. `Z(i)` is the i-th coordinate of `V`,
/// `W(i)` the i-th coordinate of `V*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Z(usize),
    W(usize),
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Z(i) => write!(f, "z{}", i + 1),
            Coord::W(i) => write!(f, "w{}", i + 1),
        }
    }
}

/// `sum c * x * y` over unordered coordinate pairs. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm<T, V = Coord> {
    terms: BTreeMap<(V, V), T>,
}

impl<T: Scalar, V: Copy + Ord> Default for QuadraticForm<T, V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar, V: Copy + Ord> QuadraticForm<T, V> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (V, V, T)>) -> Self {
        let mut q = Self::zero();
        for (x, y, c) in terms {
            q.add_term(x, y, c);
        }
        q
    }

    pub fn add_term(&mut self, x: V, y: V, c: T) {
        if c.is_zero() {
            return;
        }
        let key = if x <= y { (x, y) } else { (y, x) };
        let v = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn coeff(&self, x: V, y: V) -> T {
        let key = if x <= y { (x, y) } else { (y, x) };
        self.terms.get(&key).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (V, V, &T)> {
        self.terms.iter().map(|((x, y), c)| (*x, *y, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms().map(|(x, y, v)| (x, y, v.clone() * c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut q = self.clone();
        for (x, y, c) in other.terms() {
            q.add_term(x, y, c.clone());
        }
        q
    }

    /// Value at the point with coordinates given by `value`.
    pub fn eval(&self, value: impl Fn(V) -> T) -> T {
        self.terms().fold(T::zero(), |acc, (x, y, c)| {
            acc + c.clone() * value(x) * value(y)
        })
    }

    /// Partial derivative with respect to `var` evaluated at a point.
    pub fn partial(&self, var: V, value: impl Fn(V) -> T) -> T {
        let two = T::one() + T::one();
        self.terms().fold(T::zero(), |acc, (x, y, c)| {
            let mut d = T::zero();
            if x == var && y == var {
                d = two.clone() * c.clone() * value(x);
            } else if x == var {
                d = c.clone() * value(y);
            } else if y == var {
                d = c.clone() * value(x);
            }
            acc + d
        })
    }
}

/// `z1w1 - 2z2w2`; the zero form prints as `0`.
impl<T, V> fmt::Display for QuadraticForm<T, V>
where
    T: Scalar + fmt::Display + PartialOrd,
    V: Copy + Ord + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (x, y, c)) in self.terms().enumerate() {
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if x == y {
                write!(f, "{x}^2")?;
            } else {
                write!(f, "{x}{y}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Coord::{W, Z};

    #[test]
    fn terms_combine_and_cancel() {
        let mut q = QuadraticForm::<i64>::zero();
        q.add_term(W(0), Z(0), 2);
        q.add_term(Z(0), W(0), -1);
        assert_eq!(q.coeff(Z(0), W(0)), 1);
        q.add_term(Z(0), W(0), -1);
        assert!(q.is_zero());
    }

    #[test]
    fn display_and_calculus() {
        let q = QuadraticForm::from_terms([(Z(0), W(0), 1i64), (Z(1), W(1), -1), (Z(2), Z(2), 3)]);
        assert_eq!(q.to_string(), "z1w1 - z2w2 + 3z3^2");
        let at = |c: Coord| match c {
            Z(i) => i as i64 + 1,
            W(i) => 10 * (i as i64 + 1),
        };
        assert_eq!(q.eval(at), 10 - 40 + 27);
        assert_eq!(q.partial(Z(0), at), 10);
        assert_eq!(q.partial(Z(2), at), 18);
    }
}
