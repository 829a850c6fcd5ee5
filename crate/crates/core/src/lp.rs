//! Exact feasibility of `A x = b, x >= 0` by phase-one simplex over the
//! rationals with Bland's anti-cycling rule.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::linalg::Int;

pub(crate) fn feasible_nonneg<T: Int>(a: &[Vec<T>], b: &[T], ncols: usize) -> bool {
    let m = a.len();
    let width = ncols + m;
    let mut tab: Vec<Vec<Ratio<T>>> = Vec::with_capacity(m);
    let mut rhs: Vec<Ratio<T>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<Ratio<T>> = row
            .iter()
            .map(|x| Ratio::from_integer(if flip { -x.clone() } else { x.clone() }))
            .collect();
        r.resize(width, Ratio::zero());
        r[ncols + i] = Ratio::one();
        tab.push(r);
        rhs.push(Ratio::from_integer(b[i].abs()));
    }
    let mut basis: Vec<usize> = (ncols..width).collect();
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost: Vec<Ratio<T>> = (0..width)
        .map(|j| {
            if j < ncols {
                -tab.iter().fold(Ratio::zero(), |acc, r| acc + r[j].clone())
            } else {
                Ratio::zero()
            }
        })
        .collect();
    let mut value: Ratio<T> = -rhs.iter().fold(Ratio::zero(), |acc, x| acc + x.clone());

    while let Some(c) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !tab[i][c].is_positive() {
                continue;
            }
            let ratio = rhs[i].clone() / tab[i][c].clone();
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = rhs[l].clone() / tab[l][c].clone();
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        // Unbounded direction cannot occur for a bounded-below objective.
        let r = leave.expect("phase-one objective is bounded");
        let p = tab[r][c].clone();
        for x in tab[r].iter_mut() {
            *x = x.clone() / p.clone();
        }
        rhs[r] = rhs[r].clone() / p;
        for i in 0..m {
            if i == r || tab[i][c].is_zero() {
                continue;
            }
            let f = tab[i][c].clone();
            for j in 0..width {
                let v = tab[i][j].clone() - f.clone() * tab[r][j].clone();
                tab[i][j] = v;
            }
            rhs[i] = rhs[i].clone() - f * rhs[r].clone();
        }
        let f = cost[c].clone();
        for j in 0..width {
            cost[j] = cost[j].clone() - f.clone() * tab[r][j].clone();
        }
        value = value - f * rhs[r].clone();
        basis[r] = c;
    }
    value.is_zero()
}
