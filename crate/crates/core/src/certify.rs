//! Gorenstein certification from Hilbert series via Stanley's functional
//! equation `H(1/t) = (-1)^d t^{-a} H(t)`.

use std::fmt;

use crate::algebra::{Polynomial, RationalSeries, Scalar};
use crate::{Error, Result};

/// Where the Cohen-Macaulay domain hypothesis behind the functional-equation
/// criterion comes from. A series alone cannot decide it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// Supplied by a structural result about the input, with the reason.
    Established(String),
    /// The ring in question may fail to be Cohen-Macaulay.
    NotGuaranteed(String),
    /// No information from the caller.
    Unverified,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Established(why) => write!(f, "established ({why})"),
            Hypothesis::NotGuaranteed(why) => write!(f, "not guaranteed ({why})"),
            Hypothesis::Unverified => write!(f, "unverified"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinVerdict {
    /// Order of the pole at `t = 1`.
    pub dimension: u64,
    /// Present only when the functional equation holds.
    pub a_invariant: Option<i64>,
    pub functional_equation_holds: bool,
    pub graded_gorenstein: bool,
    pub hypothesis: Hypothesis,
}

impl GorensteinVerdict {
    pub fn with_hypothesis(mut self, hypothesis: Hypothesis) -> Self {
        self.hypothesis = hypothesis;
        self
    }

    /// Gorenstein claim is backed by a structural hypothesis, not only the series.
    pub fn certified(&self) -> bool {
        self.graded_gorenstein && matches!(self.hypothesis, Hypothesis::Established(_))
    }
}

fn lowest_degree<T: Scalar>(p: &Polynomial<T>) -> usize {
    p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0)
}

/// Check the functional equation exactly on the reduced rational function.
pub fn stanley_check<T: Scalar>(h: &RationalSeries<T>) -> Result<GorensteinVerdict> {
    if h.is_zero() {
        return Err(Error::InvalidInput("zero series has no dimension".into()));
    }
    let pole = h.pole_order_at_one();
    if pole < 0 {
        return Err(Error::Precondition(format!(
            "series vanishes to order {} at t = 1",
            -pole
        )));
    }
    let num = h.numerator();
    let k = h.denominator().len();
    let d = pole as usize;
    let deg = num.degree().unwrap();
    let low = lowest_degree(num);
    // t^deg N(1/t) = rev; H(1/t) = (-1)^k t^(sum e - deg) rev / den.
    // Matching (-1)^d t^(-a) N forces a = deg - sum e + low.
    let rev = num.reversed();
    let lhs = if k.is_multiple_of(2) { rev } else { -rev };
    let shifted = num.coeffs()[low..].to_vec();
    let core = Polynomial::new(shifted);
    let rhs = if d.is_multiple_of(2) { core } else { -core };
    let holds = lhs == rhs;
    let a = (deg + low) as i64 - h.denominator_degree() as i64;
    let a_invariant = holds.then_some(a);
    Ok(GorensteinVerdict {
        dimension: d as u64,
        a_invariant,
        functional_equation_holds: holds,
        graded_gorenstein: holds && a == -(d as i64),
        hypothesis: Hypothesis::Unverified,
    })
}

/// a-invariant `2l - 2n` of the shell of an `n`-dimensional module whose
/// `l` moment components form a regular sequence.
pub fn shell_a_invariant(l: u64, n: u64) -> i64 {
    2 * l as i64 - 2 * n as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShellSign {
    /// Negative: rational singularities are possible.
    Candidate,
    /// Zero or positive: the shell cannot have rational singularities.
    Obstruction,
}

pub fn shell_sign(a: i64) -> ShellSign {
    if a < 0 {
        ShellSign::Candidate
    } else {
        ShellSign::Obstruction
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = RationalSeries<i64>;

    fn h(num: &[i64], den: &[usize]) -> H {
        H::new(Polynomial::new(num.to_vec()), den.to_vec())
    }

    #[test]
    fn two_copies_of_adjoint() {
        let v = stanley_check(&h(&[1, 0, 4, 0, 4, 0, 1], &[2; 6])).unwrap();
        assert_eq!(v.dimension, 6);
        assert_eq!(v.a_invariant, Some(-6));
        assert!(v.graded_gorenstein);
    }

    #[test]
    fn polynomial_ring() {
        let v = stanley_check(&h(&[1], &[1])).unwrap();
        assert_eq!((v.dimension, v.a_invariant, v.graded_gorenstein), (1, Some(-1), true));
    }

    #[test]
    fn non_palindromic() {
        let v = stanley_check(&h(&[1, 2], &[1, 1])).unwrap();
        assert!(!v.functional_equation_holds);
        assert!(!v.graded_gorenstein);
        assert_eq!(v.a_invariant, None);
    }

    #[test]
    fn gorenstein_but_not_graded() {
        // A hypersurface of degree 4 in three variables: a = 4 - 3 = 1.
        let v = stanley_check(&h(&[1], &[1, 1, 1]).multiply_by_factors(&[4])).unwrap();
        assert!(v.functional_equation_holds);
        assert_eq!(v.a_invariant, Some(1));
        assert!(!v.graded_gorenstein);
    }

    #[test]
    fn zero_rejected() {
        assert!(stanley_check(&h(&[], &[1])).is_err());
    }

    #[test]
    fn shell() {
        assert_eq!(shell_a_invariant(3, 5), -4);
        assert_eq!(shell_a_invariant(4, 4), 0);
        assert_eq!(shell_a_invariant(0, 3), -6);
        assert_eq!(shell_sign(-4), ShellSign::Candidate);
        assert_eq!(shell_sign(0), ShellSign::Obstruction);
    }
}
