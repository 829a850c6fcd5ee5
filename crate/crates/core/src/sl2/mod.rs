//! SL2 modules: characters of symmetric powers, multiplicities of the
//! trivial and adjoint modules, the Koszul alternating sum for the quotient
//! series, the largeness classification and explicit moment components.

mod character;
mod classify;
mod koszul;
mod moment;

use std::fmt;

use crate::{Error, Result};

pub use character::{ab_series, character, multiplicity, sym_power_characters, ABSeries};
pub use classify::{classify_largeness, Sl2Classification, NOT_TWO_LARGE};
pub use koszul::{
    koszul_quotient_series, koszul_quotient_series_with, Caveat, GateEvidence, Sl2Options,
    Sl2Quotient,
};
pub use moment::{
    jacobian_rank_probe, lemma_components, moment_components_sl2, rep_matrices, to_weight_coordinates,
    weight_coordinate, JacobianProbe, RepMatrices, WeightCoord,
};

/// Direct sum of irreducibles `R_d`, one entry per copy, kept in
/// non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SL2Module {
    irreps: Vec<u32>,
}

impl SL2Module {
    pub fn new(irreps: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut out = Vec::new();
        for d in irreps {
            let d = u32::try_from(d)
                .map_err(|_| Error::InvalidInput(format!("irrep label {d} is not a non-negative integer")))?;
            out.push(d);
        }
        Ok(Self::from_labels(&out))
    }

    pub fn from_labels(irreps: &[u32]) -> Self {
        let mut irreps = irreps.to_vec();
        irreps.sort_unstable_by(|a, b| b.cmp(a));
        Self { irreps }
    }

    pub fn irreps(&self) -> &[u32] {
        &self.irreps
    }

    /// Complex dimension of the module.
    pub fn dimension(&self) -> usize {
        self.irreps.iter().map(|&d| d as usize + 1).sum()
    }

    pub fn trivial_count(&self) -> usize {
        self.irreps.iter().filter(|&&d| d == 0).count()
    }

    /// The module with its trivial summands removed.
    pub fn nontrivial_part(&self) -> Self {
        Self {
            irreps: self.irreps.iter().copied().filter(|&d| d > 0).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.irreps.iter().all(|&d| d == 0)
    }

    /// Character of the module.
    pub fn character(&self) -> crate::LaurentCharacter {
        let mut chi = crate::LaurentCharacter::zero();
        for &d in &self.irreps {
            chi = &chi + &character(d as i64).expect("label is non-negative");
        }
        chi
    }
}

/// `2R2+R1`; the zero module prints as `0`.
impl fmt::Display for SL2Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irreps.is_empty() {
            return write!(f, "0");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.irreps.len() {
            let d = self.irreps[i];
            let k = self.irreps[i..].iter().take_while(|&&x| x == d).count();
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if k > 1 {
                write!(f, "{k}")?;
            }
            write!(f, "R{d}")?;
            i += k;
        }
        Ok(())
    }
}
