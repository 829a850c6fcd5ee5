//! Brute-force counters used as independent references.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;

/// Number of monomials of each degree `0..=bound` in `z_j, w_j` whose torus
/// weight `sum_j (alpha_j - beta_j) a_j` vanishes.
pub fn torus_invariant_counts(a: &[Vec<i64>], bound: usize) -> Vec<u64> {
    let l = a.len();
    let n = if l == 0 { 0 } else { a[0].len() };
    let mut vars: Vec<Vec<i64>> = Vec::new();
    for j in 0..n {
        vars.push((0..l).map(|i| a[i][j]).collect());
        vars.push((0..l).map(|i| -a[i][j]).collect());
    }
    let mut counts = vec![0u64; bound + 1];
    let mut weight = vec![0i64; l];
    fn go(vars: &[Vec<i64>], k: usize, deg: usize, bound: usize, weight: &mut Vec<i64>, counts: &mut Vec<u64>) {
        if k == vars.len() {
            if weight.iter().all(|&x| x == 0) {
                counts[deg] += 1;
            }
            return;
        }
        let mut e = 0;
        loop {
            go(vars, k + 1, deg + e, bound, weight, counts);
            if deg + e == bound {
                break;
            }
            e += 1;
            for (w, v) in weight.iter_mut().zip(&vars[k]) {
                *w += v;
            }
        }
        for (w, v) in weight.iter_mut().zip(&vars[k]) {
            *w -= v * e as i64;
        }
    }
    go(&vars, 0, 0, bound, &mut weight, &mut counts);
    counts
}

/// Torus weight of every coordinate of `V + V*` for the SL2 module with the
/// given irrep labels.
fn sl2_coordinate_weights(irreps: &[u32]) -> Vec<i64> {
    let mut out = Vec::new();
    for &d in irreps {
        for i in 0..=d as i64 {
            out.push(d as i64 - 2 * i);
            out.push(d as i64 - 2 * i);
        }
    }
    out
}

/// Monomial counts by degree and weight, by direct enumeration of
/// exponent vectors.
pub fn sl2_weight_counts(irreps: &[u32], bound: usize) -> Vec<HashMap<i64, u64>> {
    let ws = sl2_coordinate_weights(irreps);
    let mut out = vec![HashMap::new(); bound + 1];
    fn go(ws: &[i64], k: usize, deg: usize, weight: i64, bound: usize, out: &mut Vec<HashMap<i64, u64>>) {
        if k == ws.len() {
            *out[deg].entry(weight).or_insert(0) += 1;
            return;
        }
        for e in 0..=bound - deg {
            go(ws, k + 1, deg + e, weight + e as i64 * ws[k], bound, out);
        }
    }
    go(&ws, 0, 0, 0, bound, &mut out);
    out
}

/// Multiplicities of the trivial and adjoint modules in each degree.
pub fn sl2_ab_counts(irreps: &[u32], bound: usize) -> (Vec<i64>, Vec<i64>) {
    let counts = sl2_weight_counts(irreps, bound);
    let at = |d: usize, w: i64| *counts[d].get(&w).unwrap_or(&0) as i64;
    let a = (0..=bound).map(|d| at(d, 0) - at(d, 2)).collect();
    let b = (0..=bound).map(|d| at(d, 2) - at(d, 4)).collect();
    (a, b)
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn big_u(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
