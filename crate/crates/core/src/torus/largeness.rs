use num_bigint::BigInt;
use num_traits::One;

use super::reduction::lineality_columns;
use super::WeightMatrix;
use crate::linalg;
use crate::{Error, Result};

/// Support enumeration visits all `2^n` column subsets.
pub const MAX_SUPPORT_COLUMNS: usize = 16;

/// Points with isotropy of dimension `r`: the largest support with
/// `l - rank(A_S) = r` has `|S| = dimension`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub isotropy_dimension: usize,
    pub dimension: usize,
    pub codimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusLargenessReport {
    /// `rank(A) = l`.
    pub faithful_up_to_finite: bool,
    /// Order of the kernel of the action when it is finite.
    pub finite_kernel_order: Option<BigInt>,
    pub stable: bool,
    pub fpig: bool,
    /// Largest `k` with `codim V_(r) >= r + k` for `1 <= r <= l`, clamped at
    /// `-1`. `None` when no such stratum exists (`l = 0`).
    pub max_k_modular: Option<i64>,
    pub one_large: bool,
    /// `l + k <= n - dim V^G` for `k = max_k_modular >= 0`.
    pub dim_bound_ok: bool,
    /// Nonempty strata with `r >= 1`, by increasing `r`.
    pub strata: Vec<Stratum>,
}

impl TorusLargenessReport {
    pub fn is_k_modular(&self, k: i64) -> bool {
        self.max_k_modular.is_none_or(|m| m >= k)
    }
}

pub(crate) fn check_support_capacity(a: &WeightMatrix) -> Result<()> {
    if a.dimension() > MAX_SUPPORT_COLUMNS {
        return Err(Error::Capacity(format!(
            "support enumeration over {} columns exceeds the limit of {MAX_SUPPORT_COLUMNS}",
            a.dimension()
        )));
    }
    Ok(())
}

/// `rank(A_S)` for every column subset `S`, indexed by bitmask.
pub(crate) fn subset_ranks(a: &WeightMatrix) -> Result<Vec<usize>> {
    check_support_capacity(a)?;
    let n = a.dimension();
    let cols: Vec<Vec<BigInt>> = (0..n).map(|j| a.column(j)).collect();
    let mut ranks = vec![0usize; 1 << n];
    for mask in 1usize..1 << n {
        // rank(A_S) = rank(A_{S-j}) or that plus one; avoid recomputation when
        // the smaller set is already at full row rank.
        let prev = ranks[mask & (mask - 1)];
        if prev == a.torus_rank() {
            ranks[mask] = prev;
            continue;
        }
        let chosen: Vec<Vec<BigInt>> = (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| cols[j].clone())
            .collect();
        let r = linalg::rank(&chosen);
        debug_assert!(r == prev || r == prev + 1);
        ranks[mask] = r;
    }
    Ok(ranks)
}

pub fn largeness_report(a: &WeightMatrix) -> Result<TorusLargenessReport> {
    let ranks = subset_ranks(a)?;
    let l = a.torus_rank();
    let n = a.dimension();
    let rank = ranks[(1 << n) - 1];
    let faithful = rank == l;

    let mut best: Vec<Option<usize>> = vec![None; l + 1];
    for (mask, &r) in ranks.iter().enumerate() {
        let iso = l - r;
        let size = mask.count_ones() as usize;
        if best[iso].is_none_or(|b| size > b) {
            best[iso] = Some(size);
        }
    }
    let strata: Vec<Stratum> = (1..=l)
        .filter_map(|r| {
            best[r].map(|dim| Stratum {
                isotropy_dimension: r,
                dimension: dim,
                codimension: n - dim,
            })
        })
        .collect();
    let max_k_modular = strata
        .iter()
        .map(|s| s.codimension as i64 - s.isotropy_dimension as i64)
        .min()
        .map(|k| k.max(-1));

    let stable = lineality_columns(a).iter().all(|&b| b);
    let fpig = stable && faithful;
    let trivial = (0..n).filter(|&j| a.is_zero_column(j)).count();
    let dim_bound_ok = match max_k_modular {
        Some(k) if l > 0 && k >= 0 => l as i64 + k <= (n - trivial) as i64,
        _ => true,
    };
    let finite_kernel_order = faithful.then(|| {
        linalg::smith_invariants(a.rows(), n)
            .into_iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    });
    Ok(TorusLargenessReport {
        faithful_up_to_finite: faithful,
        finite_kernel_order,
        stable,
        fpig,
        max_k_modular,
        one_large: stable && faithful,
        dim_bound_ok,
        strata,
    })
}
