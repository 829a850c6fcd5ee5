//! Exact generating function of `ker A` graded by the l1 norm.
//!
//! `ker_R A` is covered by the cones `K_s = ker_R A ∩ O_s` over the closed
//! orthants `O_s`. The rays of `K_s` are the circuits of `A` conformal to
//! `s`, and the 1-norm is linear on `K_s`. Each cone is split by a pulling
//! triangulation with a global ray order, so the cells form a complete
//! simplicial fan; making each cell half-open towards a generic direction `q`
//! counts every lattice point exactly once. A half-open simplicial cell with
//! rays `r_i` contributes `sum_{x in box} t^|x| / prod (1 - t^|r_i|)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::WeightMatrix;
use crate::algebra::Polynomial;
use crate::linalg;
use crate::{Error, HilbertSeries, Result};

/// Limits for the cone decomposition.
const MAX_CELLS: usize = 200_000;
const MAX_BOX_POINTS: u64 = 20_000_000;

type Ray = Vec<i64>;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rank_of(rays: &[Ray], idx: &[usize]) -> usize {
    let m: Vec<Vec<BigInt>> = idx.iter().map(|&i| big(&rays[i])).collect();
    linalg::rank(&m)
}

/// Primitive kernel vectors with minimal support, both signs, sorted.
fn circuits(a: &[Vec<i64>], n: usize, rank: usize) -> Result<Vec<Ray>> {
    let cols: Vec<Vec<BigInt>> = (0..n).map(|j| a.iter().map(|r| BigInt::from(r[j])).collect()).collect();
    let mut out = BTreeSet::new();
    for mask in 1usize..1 << n {
        let size = mask.count_ones() as usize;
        if size > rank + 1 {
            continue;
        }
        let support: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        // Columns of A_S as rows of its transpose.
        let rows: Vec<Vec<BigInt>> = (0..a.len())
            .map(|i| support.iter().map(|&j| cols[j][i].clone()).collect())
            .collect();
        let kernel = linalg::kernel_basis(&rows, size);
        if kernel.len() != 1 || kernel[0].iter().any(Zero::is_zero) {
            continue;
        }
        let mut ray = vec![0i64; n];
        for (x, &j) in kernel[0].iter().zip(&support) {
            ray[j] = x
                .to_i64()
                .ok_or_else(|| Error::Capacity("circuit entries exceed 64 bits".into()))?;
        }
        let neg: Ray = ray.iter().map(|x| -x).collect();
        out.insert(ray);
        out.insert(neg);
    }
    Ok(out.into_iter().collect())
}

struct Triangulator<'a> {
    rays: &'a [Ray],
    memo: HashMap<Vec<usize>, Vec<Vec<usize>>>,
    cells: usize,
}

impl Triangulator<'_> {
    /// Pulling triangulation of the face spanned by `idx` (sorted) of
    /// dimension `dim`, pulling the smallest ray first.
    fn run(&mut self, idx: &[usize], dim: usize) -> Result<Vec<Vec<usize>>> {
        if dim == 0 {
            return Ok(vec![Vec::new()]);
        }
        if idx.len() == dim {
            return Ok(vec![idx.to_vec()]);
        }
        if let Some(hit) = self.memo.get(idx) {
            return Ok(hit.clone());
        }
        let v = idx[0];
        let mut facets = BTreeSet::new();
        for j in 0..self.rays[v].len() {
            if self.rays[v][j] == 0 {
                continue;
            }
            let sub: Vec<usize> = idx.iter().copied().filter(|&i| self.rays[i][j] == 0).collect();
            if rank_of(self.rays, &sub) == dim - 1 {
                facets.insert(sub);
            }
        }
        let mut cells = Vec::new();
        for facet in facets {
            for mut cell in self.run(&facet, dim - 1)? {
                cell.insert(0, v);
                cells.push(cell);
            }
        }
        self.cells += cells.len();
        if self.cells > MAX_CELLS {
            return Err(Error::Capacity(format!(
                "cone decomposition exceeds {MAX_CELLS} cells"
            )));
        }
        self.memo.insert(idx.to_vec(), cells.clone());
        Ok(cells)
    }
}

/// Simplicial cell in lattice coordinates.
struct Cell {
    /// Columns are ray coordinates in the kernel basis.
    matrix: Vec<Vec<BigInt>>,
    degrees: Vec<usize>,
}

/// `sum_{p in ker A ∩ Z^n} t^|p|_1` as a rational function.
pub fn theta_closed_form(a: &WeightMatrix) -> Result<HilbertSeries> {
    let n = a.dimension();
    if n > super::MAX_SUPPORT_COLUMNS {
        return Err(Error::Capacity(format!(
            "cone decomposition over {n} columns exceeds the limit of {}",
            super::MAX_SUPPORT_COLUMNS
        )));
    }
    let entries = a.to_i64()?;
    let rank = a.rank();
    let k = n - rank;
    if k == 0 {
        return Ok(HilbertSeries::one());
    }
    let rays = circuits(&entries, n, rank)?;
    let live: Vec<usize> = (0..n).filter(|&j| rays.iter().any(|r| r[j] != 0)).collect();

    let mut tri = Triangulator {
        rays: &rays,
        memo: HashMap::new(),
        cells: 0,
    };
    let basis = linalg::kernel_basis(a.rows(), n);
    let (pivot_rows, basis_inv) = coordinate_chart(&basis, n, k);
    let mut cells = Vec::new();
    for signs in 0u64..1 << live.len() {
        let mut sigma = vec![1i64; n];
        for (b, &j) in live.iter().enumerate() {
            if signs >> b & 1 == 1 {
                sigma[j] = -1;
            }
        }
        let idx: Vec<usize> = (0..rays.len())
            .filter(|&i| rays[i].iter().zip(&sigma).all(|(x, s)| x * s >= 0))
            .collect();
        if idx.len() < k || rank_of(&rays, &idx) < k {
            continue;
        }
        for cell in tri.run(&idx, k)? {
            let mut columns = Vec::with_capacity(k);
            let mut degrees = Vec::with_capacity(k);
            for &r in &cell {
                let ray = &rays[r];
                degrees.push(ray.iter().map(|x| x.unsigned_abs() as usize).sum());
                let coords: Vec<BigInt> = basis_inv
                    .iter()
                    .map(|row| {
                        let v = row
                            .iter()
                            .zip(&pivot_rows)
                            .fold(Ratio::zero(), |acc: Ratio<BigInt>, (c, &p)| {
                                acc + c.clone() * BigInt::from(ray[p])
                            });
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect();
                columns.push(coords);
            }
            cells.push(Cell {
                matrix: linalg::transpose(&columns, k),
                degrees,
            });
        }
    }
    sum_cells(&cells, k)
}

/// Rows of the `n x k` basis matrix forming an invertible `k x k` block,
/// together with that block's inverse.
fn coordinate_chart(basis: &[Vec<BigInt>], n: usize, k: usize) -> (Vec<usize>, Vec<Vec<Ratio<BigInt>>>) {
    let mut chosen: Vec<usize> = Vec::new();
    let mut block: Vec<Vec<BigInt>> = Vec::new();
    for row in 0..n {
        let candidate: Vec<BigInt> = basis.iter().map(|b| b[row].clone()).collect();
        block.push(candidate);
        if linalg::rank(&block) == block.len() {
            chosen.push(row);
        } else {
            block.pop();
        }
        if chosen.len() == k {
            break;
        }
    }
    let inv = linalg::inverse(&block).expect("kernel basis has full rank");
    (chosen, inv)
}

fn sum_cells(cells: &[Cell], k: usize) -> Result<HilbertSeries> {
    let total: u64 = cells
        .iter()
        .map(|c| linalg::determinant(&c.matrix).abs().to_u64().unwrap_or(u64::MAX))
        .fold(0u64, |acc, d| acc.saturating_add(d));
    if total > MAX_BOX_POINTS {
        return Err(Error::Capacity(format!(
            "cone decomposition needs {total} fundamental-box points, limit {MAX_BOX_POINTS}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let prepared = loop {
        let q: Vec<BigInt> = (0..k)
            .map(|_| BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000)))
            .collect();
        if let Some(p) = prepare(cells, &q) {
            break p;
        }
    };
    let mut groups: BTreeMap<Vec<usize>, Vec<u64>> = BTreeMap::new();
    for (cell, prep) in cells.iter().zip(&prepared) {
        let mut key = cell.degrees.clone();
        key.sort_unstable();
        let counts = groups.entry(key).or_default();
        enumerate_box(cell, prep, counts)?;
    }
    let mut total = HilbertSeries::new(Polynomial::zero(), Vec::new());
    for (den, counts) in groups {
        let num = Polynomial::new(counts.into_iter().map(BigInt::from).collect());
        total = &total + &HilbertSeries::new(num, den);
    }
    Ok(total)
}

struct Prepared {
    /// `det(M) * M^-1` as machine integers.
    adjugate: Vec<Vec<i128>>,
    det: i128,
    /// Coordinates where `q` points outward; there the half-open cell excludes
    /// the facet `theta_i = 0` and includes `theta_i = 1`.
    open_low: Vec<bool>,
    /// Diagonal of the lower-triangular Hermite form of `M`.
    box_sides: Vec<u64>,
}

fn prepare(cells: &[Cell], q: &[BigInt]) -> Option<Vec<Prepared>> {
    let mut out = Vec::with_capacity(cells.len());
    for cell in cells {
        let k = q.len();
        let inv = linalg::inverse(&cell.matrix).expect("cell rays are independent");
        let mut open_low = Vec::with_capacity(k);
        for row in &inv {
            let mu = row
                .iter()
                .zip(q)
                .fold(Ratio::zero(), |acc: Ratio<BigInt>, (c, x)| acc + c.clone() * x.clone());
            if mu.is_zero() {
                return None;
            }
            open_low.push(mu.is_negative());
        }
        let det = linalg::determinant(&cell.matrix);
        let adjugate = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        let v = c.clone() * Ratio::from_integer(det.clone());
                        v.to_integer().to_i128().expect("adjugate fits 128 bits")
                    })
                    .collect()
            })
            .collect();
        let hermite = linalg::row_hermite(&linalg::transpose(&cell.matrix, k), k);
        let box_sides = (0..k)
            .map(|i| hermite.h[i][i].to_u64().expect("box side fits 64 bits"))
            .collect();
        out.push(Prepared {
            adjugate,
            det: det.to_i128().expect("determinant fits 128 bits"),
            open_low,
            box_sides,
        });
    }
    Some(out)
}

/// Add `t^|x|` for each lattice point `x` of the half-open parallelepiped.
fn enumerate_box(cell: &Cell, prep: &Prepared, counts: &mut Vec<u64>) -> Result<()> {
    let k = cell.degrees.len();
    let size = prep.det.unsigned_abs() as i128;
    let sign = prep.det.signum();
    let mut y = vec![0u64; k];
    loop {
        let mut weighted: i128 = 0;
        for i in 0..k {
            let num: i128 = prep.adjugate[i]
                .iter()
                .zip(&y)
                .map(|(c, &v)| c * v as i128)
                .sum::<i128>()
                * sign;
            let mut rem = num.rem_euclid(size);
            if rem == 0 && prep.open_low[i] {
                rem = size;
            }
            weighted += rem * cell.degrees[i] as i128;
        }
        debug_assert_eq!(weighted % size, 0);
        let deg = (weighted / size) as usize;
        if counts.len() <= deg {
            counts.resize(deg + 1, 0);
        }
        counts[deg] += 1;
        // Next residue in the box.
        let mut i = 0;
        loop {
            if i == k {
                return Ok(());
            }
            y[i] += 1;
            if y[i] < prep.box_sides[i] {
                break;
            }
            y[i] = 0;
            i += 1;
        }
    }
}
