use super::SL2Module;
use crate::{Error, Result};

/// Nontrivial modules that are not 2-large, as irrep labels in
/// non-increasing order.
pub const NOT_TWO_LARGE: [&[u32]; 8] = [
    &[1],
    &[1, 1],
    &[1, 1, 1],
    &[2],
    &[2, 2],
    &[2, 1],
    &[3],
    &[4],
];

const NOT_ONE_LARGE: [&[u32]; 3] = [&[1], &[1, 1], &[2]];

const NOT_ZERO_MODULAR: [&[u32]; 2] = [&[1], &[2]];

/// Quotients isomorphic to a linear symplectic orbifold.
const ORBIFOLD: [&[u32]; 5] = [&[1], &[1, 1], &[2], &[3], &[4]];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sl2Classification {
    pub two_large: bool,
    pub one_large: bool,
    /// Moment components form a regular sequence.
    pub zero_modular: bool,
    pub orbifold: bool,
}

/// Classify the nontrivial part of `v`. Trivial summands do not change any
/// of the flags.
pub fn classify_largeness(v: &SL2Module) -> Result<Sl2Classification> {
    let core = v.nontrivial_part();
    if core.irreps().is_empty() {
        return Err(Error::InvalidInput("module has no nontrivial summand".into()));
    }
    let labels = core.irreps();
    let member = |list: &[&[u32]]| list.contains(&labels);
    Ok(Sl2Classification {
        two_large: !member(&NOT_TWO_LARGE),
        one_large: !member(&NOT_ONE_LARGE),
        zero_modular: !member(&NOT_ZERO_MODULAR),
        orbifold: member(&ORBIFOLD),
    })
}
