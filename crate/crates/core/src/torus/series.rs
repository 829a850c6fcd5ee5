use std::collections::HashMap;

use num_bigint::BigInt;

use super::largeness::largeness_report;
use super::WeightMatrix;
use crate::algebra::Polynomial;
use crate::{Error, HilbertSeries, Result, TruncatedSeries};

/// Default bound on the number of live weight-vector states in the DP.
pub const DEFAULT_STATE_CAP: usize = 250_000;

/// `(1 - t^2)^l / (1 - t)^(2n)`, the series of a complete intersection cut
/// out by `l` quadrics in `2n` variables.
pub fn shell_series(l: usize, n: usize) -> HilbertSeries {
    HilbertSeries::new(Polynomial::one_minus_t_pow(2).pow(l), vec![1; 2 * n])
}

/// Shell series of the raw module; requires the moment components to form a
/// regular sequence, which holds exactly when the module is 0-modular.
pub fn shell_hilbert(a: &WeightMatrix) -> Result<HilbertSeries> {
    let report = largeness_report(a)?;
    if !report.is_k_modular(0) {
        return Err(Error::Precondition(
            "module is not 0-modular; the moment components are not a regular sequence".into(),
        ));
    }
    Ok(shell_series(a.torus_rank(), a.dimension()))
}

/// Lattice points `p` of `ker A` counted by `|p|_1`, up to degree `bound`.
pub(crate) fn theta_dp(a: &[Vec<i64>], n: usize, bound: usize, cap: usize) -> Result<Vec<u128>> {
    let l = a.len();
    let overflow = || Error::Capacity("lattice point count overflows 128 bits".into());
    // reach[j][i]: largest |a_ik| over columns k >= j.
    let mut reach = vec![vec![0i64; l]; n + 1];
    for j in (0..n).rev() {
        for i in 0..l {
            reach[j][i] = reach[j + 1][i].max(a[i][j].abs());
        }
    }
    let d = bound as i64;
    let admissible = |w: &[i64], deg: usize, next: usize| {
        let budget = d - deg as i64;
        w.iter().zip(&reach[next]).all(|(x, r)| x.abs() <= budget * r)
    };
    let mut states: HashMap<Vec<i64>, Vec<u128>> = HashMap::new();
    let mut start = vec![0u128; bound + 1];
    start[0] = 1;
    states.insert(vec![0; l], start);
    for j in 0..n {
        let mut next: HashMap<Vec<i64>, Vec<u128>> = HashMap::new();
        for (w, series) in &states {
            let low = series.iter().position(|&c| c != 0).unwrap_or(bound);
            for p in -(bound as i64 - low as i64)..=(bound as i64 - low as i64) {
                let step = p.unsigned_abs() as usize;
                let moved: Vec<i64> = w.iter().enumerate().map(|(i, x)| x + p * a[i][j]).collect();
                if !admissible(&moved, low + step, j + 1) {
                    continue;
                }
                let mut touched = false;
                let entry = next
                    .entry(moved.clone())
                    .or_insert_with(|| vec![0u128; bound + 1]);
                for deg in low..=bound - step {
                    let c = series[deg];
                    if c == 0 || !admissible(&moved, deg + step, j + 1) {
                        continue;
                    }
                    let slot = &mut entry[deg + step];
                    *slot = slot.checked_add(c).ok_or_else(overflow)?;
                    touched = true;
                }
                if !touched && entry.iter().all(|&c| c == 0) {
                    next.remove(&moved);
                }
                if next.len() > cap {
                    return Err(Error::Capacity(format!(
                        "invariant enumeration needs more than {cap} weight states"
                    )));
                }
            }
        }
        states = next;
    }
    Ok(states.remove(&vec![0; l]).unwrap_or_else(|| vec![0; bound + 1]))
}

/// Hilbert function of `C[V + V*]^T` up to degree `bound`: the number of
/// monomials `z^u w^v` of each degree with `A (u - v) = 0`.
pub fn invariant_series_dp(a: &WeightMatrix, bound: usize) -> Result<TruncatedSeries> {
    invariant_series_dp_with_cap(a, bound, DEFAULT_STATE_CAP)
}

pub fn invariant_series_dp_with_cap(
    a: &WeightMatrix,
    bound: usize,
    cap: usize,
) -> Result<TruncatedSeries> {
    let theta = theta_dp(&a.to_i64()?, a.dimension(), bound, cap)?;
    let mut s = TruncatedSeries::new(theta.into_iter().map(BigInt::from).collect());
    for _ in 0..a.dimension() {
        s = s.div_one_minus_t_pow(2);
    }
    Ok(s)
}
