use num_bigint::BigInt;
use num_traits::Zero;

use super::SL2Module;
use crate::{Error, LaurentCharacter, Result, TruncatedSeries};

/// `q^d + q^(d-2) + ... + q^-d`.
pub fn character(d: i64) -> Result<LaurentCharacter> {
    if d < 0 {
        return Err(Error::InvalidInput(format!("irrep label {d} is negative")));
    }
    Ok(LaurentCharacter::from_terms(
        (0..=d).map(|i| (d - 2 * i, BigInt::from(1))),
    ))
}

/// Characters of `Sym^k(V + V*)` for `k = 0..=bound`, using `V* = V`.
///
/// Newton's recursion `k h_k = sum_{j=1..k} p_j h_(k-j)` where `p_j` is the
/// character of `V + V*` with `q -> q^j`.
pub fn sym_power_characters(v: &SL2Module, bound: usize) -> Vec<LaurentCharacter> {
    let chi = v.character().scale(&BigInt::from(2));
    let powers: Vec<LaurentCharacter> = (1..=bound).map(|j| chi.dilate(j as i64)).collect();
    let mut h = vec![LaurentCharacter::one()];
    for k in 1..=bound {
        let mut acc = LaurentCharacter::zero();
        for j in 1..=k {
            acc = &acc + &(&powers[j - 1] * &h[k - j]);
        }
        let hk = acc
            .div_exact(&BigInt::from(k))
            .expect("Newton recursion divides exactly");
        h.push(hk);
    }
    h
}

/// Number of summands `R_m` in a module with character `chi`.
pub fn multiplicity(chi: &LaurentCharacter, m: i64) -> Result<BigInt> {
    if m < 0 {
        return Err(Error::InvalidInput(format!("highest weight {m} is negative")));
    }
    if !chi.is_symmetric() {
        return Err(Error::InvalidInput("character is not symmetric under q -> 1/q".into()));
    }
    Ok(chi.coeff(m) - chi.coeff(m + 2))
}

/// Multiplicities of the trivial module (`a`) and the adjoint module (`b`)
/// in each degree of the coordinate ring of `V + V*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABSeries {
    pub a: TruncatedSeries,
    pub b: TruncatedSeries,
}

pub fn ab_series(v: &SL2Module, bound: usize) -> ABSeries {
    let mut a = Vec::with_capacity(bound + 1);
    let mut b = Vec::with_capacity(bound + 1);
    for h in sym_power_characters(v, bound) {
        a.push(h.coeff(0) - h.coeff(2));
        b.push(h.coeff(2) - h.coeff(4));
    }
    debug_assert!(a.iter().chain(&b).all(|c| !(c < &BigInt::zero())));
    ABSeries {
        a: TruncatedSeries::new(a),
        b: TruncatedSeries::new(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(d: &[u32]) -> SL2Module {
        SL2Module::from_labels(d)
    }

    #[test]
    fn irreducible_characters() {
        assert_eq!(character(0).unwrap(), LaurentCharacter::one());
        let c1 = character(1).unwrap();
        assert_eq!(c1.coeff(1), 1.into());
        assert_eq!(c1.coeff(-1), 1.into());
        assert_eq!(c1.coeff(0), 0.into());
        assert!(character(-1).is_err());
    }

    #[test]
    fn clebsch_gordan_for_adjoint_square() {
        let c2 = character(2).unwrap();
        let sq = &c2 * &c2;
        assert_eq!(multiplicity(&sq, 0).unwrap(), 1.into());
        assert_eq!(multiplicity(&sq, 2).unwrap(), 1.into());
        assert_eq!(multiplicity(&sq, 3).unwrap(), 0.into());
        assert_eq!(multiplicity(&sq, 4).unwrap(), 1.into());
        assert!(multiplicity(&LaurentCharacter::monomial(1, 1.into()), 0).is_err());
    }

    #[test]
    fn low_symmetric_powers() {
        let h = sym_power_characters(&module(&[2]), 1);
        assert_eq!(h[0], LaurentCharacter::one());
        assert_eq!(h[1], character(2).unwrap().scale(&2.into()));
    }

    #[test]
    fn quadratic_invariants_of_two_copies_of_r1() {
        let ab = ab_series(&module(&[1, 1]), 4);
        assert_eq!(ab.a.coeff(2), &6.into());
        assert_eq!(ab.a.coeff(0), &1.into());
        assert_eq!(ab.b.coeff(0), &0.into());
    }

    #[test]
    fn adjoint_plus_standard() {
        let ab = ab_series(&module(&[2, 1]), 3);
        let a: Vec<BigInt> = [1, 0, 4, 6].map(BigInt::from).to_vec();
        let b: Vec<BigInt> = [0, 2, 4, 14].map(BigInt::from).to_vec();
        assert_eq!(ab.a.coeffs(), &a[..]);
        assert_eq!(ab.b.coeffs(), &b[..]);
    }
}
