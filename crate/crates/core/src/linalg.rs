//! Exact integer linear algebra: rank, determinant, Hermite and Smith normal
//! forms, integer kernels and rational inverses.
//!
//! Matrices are row-major `Vec<Vec<T>>`. Functions that may receive a matrix
//! with no rows take the column count explicitly.

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Integer ring used by the exact kernels (`BigInt`, `i64`, ...).
pub trait Int: Integer + Signed + Clone + Debug {}

impl<T> Int for T where T: Integer + Signed + Clone + Debug {}

pub fn transpose<T: Clone>(m: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Rank via fraction-free (Bareiss) elimination.
pub fn rank<T: Int>(m: &[Vec<T>]) -> usize {
    let mut a: Vec<Vec<T>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].clone() * a[i][j].clone() - a[i][c].clone() * a[r][j].clone();
                a[i][j] = v / prev.clone();
            }
            a[i][c] = T::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square matrix (Bareiss).
pub fn determinant<T: Int>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut prev = T::one();
    let mut sign = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].clone() * a[i][j].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// `U * M = H` with `U` unimodular and `H` in row Hermite normal form:
/// pivots are positive, strictly increasing in column, and entries above a
/// pivot are reduced into `[0, pivot)`. Rows `rank..` of `H` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowHermite<T> {
    pub h: Vec<Vec<T>>,
    pub u: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
}

impl<T> RowHermite<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn row_axpy<T: Int>(rows: &mut [Vec<T>], target: usize, source: usize, q: &T) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x = x.clone() - q.clone() * y.clone();
    }
}

pub fn row_hermite<T: Int>(m: &[Vec<T>], ncols: usize) -> RowHermite<T> {
    let rows = m.len();
    let mut h: Vec<Vec<T>> = m.to_vec();
    let mut u: Vec<Vec<T>> = identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..rows).filter(|&i| !h[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| h[i][c].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let q = h[i][c].div_floor(&h[p][c]);
                    row_axpy(&mut h, i, p, &q);
                    row_axpy(&mut u, i, p, &q);
                }
            }
        }
        let Some(p) = (r..rows).find(|&i| !h[i][c].is_zero()) else {
            continue;
        };
        h.swap(r, p);
        u.swap(r, p);
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            row_axpy(&mut h, i, r, &q);
            row_axpy(&mut u, i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    RowHermite { h, u, pivots }
}

pub fn identity<T: Int>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

/// Basis of the lattice `{x in Z^ncols : M x = 0}`; the basis is saturated
/// (it spans every integer kernel vector, not a sublattice).
pub fn kernel_basis<T: Int>(m: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mt = transpose(m, ncols);
    let rh = row_hermite(&mt, m.len());
    let r = rh.rank();
    rh.u.into_iter().skip(r).collect()
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of the Smith normal form.
pub fn smith_invariants<T: Int>(m: &[Vec<T>], ncols: usize) -> Vec<T> {
    let mut a: Vec<Vec<T>> = m.to_vec();
    let rows = a.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(ncols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..ncols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&a[t][t]);
            row_axpy(&mut a, i, t, &q);
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..ncols {
            let q = a[t][j].div_floor(&a[t][t]);
            for row in a.iter_mut() {
                let v = row[j].clone() - q.clone() * row[t].clone();
                row[j] = v;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        let offender = (t + 1..rows)
            .find(|&i| (t + 1..ncols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
        if let Some(i) = offender {
            let minus_one = -T::one();
            row_axpy(&mut a, t, i, &minus_one);
            continue;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Inverse over the rationals, or `None` for a singular matrix.
pub fn inverse<T: Int>(m: &[Vec<T>]) -> Option<Vec<Vec<Ratio<T>>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<T>>> = m
        .iter()
        .map(|row| row.iter().map(|x| Ratio::from_integer(x.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let pivot = a[c][c].clone();
        for j in 0..n {
            a[c][j] = a[c][j].clone() / pivot.clone();
            inv[c][j] = inv[c][j].clone() / pivot.clone();
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..n {
                a[i][j] = a[i][j].clone() - f.clone() * a[c][j].clone();
                inv[i][j] = inv[i][j].clone() - f.clone() * inv[c][j].clone();
            }
        }
    }
    Some(inv)
}

/// Matrix-vector product.
pub fn mul_vec<T: Int>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

pub fn mul<T: Int>(a: &[Vec<T>], b: &[Vec<T>], bcols: usize) -> Vec<Vec<T>> {
    a.iter()
        .map(|row| {
            (0..bcols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(T::zero(), |acc, (x, brow)| acc + x.clone() * brow[j].clone())
                })
                .collect()
        })
        .collect()
}
