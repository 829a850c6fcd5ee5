//! Brute-force cross-checks by direct monomial enumeration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use symquot::sl2::{ab_series, SL2Module};
use symquot::torus::{invariant_series_dp, WeightMatrix};

use crate::report::Oracle;

pub const TORUS_MAX_DIMENSION: usize = 3;
pub const TORUS_DEGREE: usize = 8;
pub const SL2_MAX_DIMENSION: usize = 12;
pub const SL2_DEGREE: usize = 4;

/// Invariant monomial counts per degree for the torus with weight columns
/// `cols`, acting on `z` by the column and on `w` by its negative.
fn torus_counts(cols: &[Vec<i64>], bound: usize) -> Vec<u64> {
    let mut vars: Vec<Vec<i64>> = Vec::new();
    for c in cols {
        vars.push(c.clone());
        vars.push(c.iter().map(|x| -x).collect());
    }
    let l = cols.first().map_or(0, Vec::len);
    let mut table: HashMap<(usize, Vec<i64>), u64> = HashMap::new();
    table.insert((0, vec![0; l]), 1);
    for v in &vars {
        let mut next: HashMap<(usize, Vec<i64>), u64> = HashMap::new();
        for ((deg, w), count) in &table {
            let mut w = w.clone();
            for e in 0..=bound - deg {
                *next.entry((deg + e, w.clone())).or_insert(0) += count;
                for (x, y) in w.iter_mut().zip(v) {
                    *x += y;
                }
            }
        }
        table = next;
    }
    let mut out = vec![0; bound + 1];
    for ((deg, w), count) in table {
        if w.iter().all(|&x| x == 0) {
            out[deg] += count;
        }
    }
    out
}

pub fn torus(a: &WeightMatrix, degree: usize) -> Oracle {
    let method = "monomial enumeration".to_string();
    if a.dimension() > TORUS_MAX_DIMENSION {
        return Oracle {
            method,
            degree: None,
            agrees: None,
            note: Some(format!("skipped: dimension above {TORUS_MAX_DIMENSION}")),
        };
    }
    let bound = degree.min(TORUS_DEGREE);
    let cols: Option<Vec<Vec<i64>>> = (0..a.dimension())
        .map(|j| a.column(j).iter().map(ToPrimitive::to_i64).collect())
        .collect();
    let Some(cols) = cols else {
        return Oracle {
            method,
            degree: None,
            agrees: None,
            note: Some("skipped: weights exceed 64 bits".into()),
        };
    };
    let brute: Vec<BigInt> = torus_counts(&cols, bound).into_iter().map(BigInt::from).collect();
    let agrees = invariant_series_dp(a, bound).ok().map(|s| s.coeffs() == &brute[..]);
    Oracle {
        method,
        degree: Some(bound),
        agrees,
        note: None,
    }
}

pub fn sl2(v: &SL2Module, degree: usize) -> Oracle {
    let method = "weight-monomial enumeration".to_string();
    if v.dimension() > SL2_MAX_DIMENSION {
        return Oracle {
            method,
            degree: None,
            agrees: None,
            note: Some(format!("skipped: dimension above {SL2_MAX_DIMENSION}")),
        };
    }
    let bound = degree.min(SL2_DEGREE);
    let weights: Vec<Vec<i64>> = v
        .irreps()
        .iter()
        .flat_map(|&d| (0..=d as i64).map(move |i| vec![d as i64 - 2 * i]))
        .collect();
    // V and V* have the same weights.
    let doubled: Vec<Vec<i64>> = weights.iter().flat_map(|w| [w.clone(), w.clone()]).collect();
    let mut table: HashMap<(usize, i64), i64> = HashMap::new();
    table.insert((0, 0), 1);
    for w in &doubled {
        let mut next: HashMap<(usize, i64), i64> = HashMap::new();
        for (&(deg, wt), &count) in &table {
            for e in 0..=bound - deg {
                *next.entry((deg + e, wt + e as i64 * w[0])).or_insert(0) += count;
            }
        }
        table = next;
    }
    let at = |d: usize, w: i64| *table.get(&(d, w)).unwrap_or(&0);
    let ab = ab_series(v, bound);
    let agrees = (0..=bound).all(|d| {
        *ab.a.coeff(d) == BigInt::from(at(d, 0) - at(d, 2)) && *ab.b.coeff(d) == BigInt::from(at(d, 2) - at(d, 4))
    });
    Oracle {
        method,
        degree: Some(bound),
        agrees: Some(agrees),
        note: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_counts_of_opposite_weights() {
        // Invariants of z1 w1 z2 w2 under weights (1, -1): generated by
        // z1w1, z2w2, z1z2, w1w2.
        assert_eq!(torus_counts(&[vec![1], vec![-1]], 4), vec![1, 0, 4, 0, 9]);
    }

    #[test]
    fn oracles_agree_on_small_inputs() {
        let a = WeightMatrix::from_rows(&[vec![1, 2, -3]]).unwrap();
        assert_eq!(torus(&a, 20).agrees, Some(true));
        let v = SL2Module::from_labels(&[2, 1]);
        assert_eq!(sl2(&v, 20).agrees, Some(true));
        assert!(sl2(&SL2Module::from_labels(&[12]), 8).agrees.is_none());
    }
}
