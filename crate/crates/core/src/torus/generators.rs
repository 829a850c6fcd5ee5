use std::fmt;

use super::WeightMatrix;
use crate::{Error, Result};

/// Enumeration limit on lattice points visited while searching for
/// generators.
const POINT_CAP: usize = 2_000_000;

/// Invariant monomial `z^z w^w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub degree: usize,
    pub z: Vec<u32>,
    pub w: Vec<u32>,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (name, exps) in [("z", &self.z), ("w", &self.w)] {
            for (j, &e) in exps.iter().enumerate() {
                match e {
                    0 => continue,
                    1 => write!(f, "{name}{}", j + 1)?,
                    _ => write!(f, "{name}{}^{e}", j + 1)?,
                }
                any = true;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All nonzero `p` in `ker A` with `|p|_1 <= bound`, sorted by norm.
pub(crate) fn kernel_points(a: &[Vec<i64>], n: usize, bound: usize) -> Result<Vec<Vec<i64>>> {
    let l = a.len();
    let mut reach = vec![vec![0i64; l]; n + 1];
    for j in (0..n).rev() {
        for i in 0..l {
            reach[j][i] = reach[j + 1][i].max(a[i][j].abs());
        }
    }
    struct Walk<'a> {
        a: &'a [Vec<i64>],
        reach: Vec<Vec<i64>>,
        bound: i64,
        point: Vec<i64>,
        out: Vec<Vec<i64>>,
    }
    fn go(s: &mut Walk, j: usize, w: &[i64], used: i64) -> Result<()> {
        let n = s.point.len();
        if j == n {
            if used > 0 && w.iter().all(|&x| x == 0) {
                if s.out.len() >= POINT_CAP {
                    return Err(Error::Capacity(format!(
                        "more than {POINT_CAP} invariant monomials below the degree bound"
                    )));
                }
                s.out.push(s.point.clone());
            }
            return Ok(());
        }
        let rem = s.bound - used;
        for p in -rem..=rem {
            let moved: Vec<i64> = w.iter().enumerate().map(|(i, x)| x + p * s.a[i][j]).collect();
            let budget = rem - p.abs();
            if moved
                .iter()
                .zip(&s.reach[j + 1])
                .any(|(x, r)| x.abs() > budget * r)
            {
                continue;
            }
            s.point[j] = p;
            go(s, j + 1, &moved, used + p.abs())?;
        }
        s.point[j] = 0;
        Ok(())
    }
    let mut walk = Walk {
        a,
        reach,
        bound: bound as i64,
        point: vec![0; n],
        out: Vec::new(),
    };
    go(&mut walk, 0, &vec![0; l], 0)?;
    let mut out = walk.out;
    out.sort_by_key(|p| p.iter().map(|x| x.unsigned_abs()).sum::<u64>());
    Ok(out)
}

fn conformally_below(g: &[i64], p: &[i64]) -> bool {
    g.iter()
        .zip(p)
        .all(|(&x, &y)| x * y >= 0 && x.abs() <= y.abs())
}

/// Conformally minimal nonzero kernel vectors of norm at most `bound`.
pub(crate) fn graver_elements(a: &[Vec<i64>], n: usize, bound: usize) -> Result<Vec<Vec<i64>>> {
    let points = kernel_points(a, n, bound)?;
    let mut graver: Vec<Vec<i64>> = Vec::new();
    for p in points {
        if !graver.iter().any(|g| conformally_below(g, &p)) {
            graver.push(p);
        }
    }
    Ok(graver)
}

/// Minimal generators of the invariant monomial algebra of `V + V*` up to
/// degree `bound`, sorted by degree.
///
/// An invariant monomial is indecomposable exactly when it is `z_j w_j` for
/// a nonzero weight, or corresponds to a conformally minimal kernel vector
/// `p = u - v` with `u`, `v` of disjoint support.
pub fn minimal_generators(a: &WeightMatrix, bound: usize) -> Result<Vec<Generator>> {
    if bound < 2 {
        return Err(Error::InvalidInput("generator search needs degree bound >= 2".into()));
    }
    let n = a.dimension();
    let graver = graver_elements(&a.to_i64()?, n, bound)?;
    let mut out: Vec<Generator> = graver
        .iter()
        .map(|p| Generator {
            degree: p.iter().map(|x| x.unsigned_abs() as usize).sum(),
            z: p.iter().map(|&x| x.max(0) as u32).collect(),
            w: p.iter().map(|&x| (-x).max(0) as u32).collect(),
        })
        .collect();
    for j in 0..n {
        if !a.is_zero_column(j) {
            let mut unit = vec![0u32; n];
            unit[j] = 1;
            out.push(Generator {
                degree: 2,
                z: unit.clone(),
                w: unit,
            });
        }
    }
    out.sort();
    Ok(out)
}
