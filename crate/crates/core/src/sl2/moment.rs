use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SL2Module;
use crate::linalg;
use crate::quadratic::{Coord, QuadraticForm};

/// The triple `(e, f, h)` acting on `R_d` in the basis `v_0..v_d`, where
/// `v_i = x^(d-i) y^i` has weight `d - 2i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrices {
    pub e: Vec<Vec<i64>>,
    pub f: Vec<Vec<i64>>,
    pub h: Vec<Vec<i64>>,
}

impl RepMatrices {
    pub fn as_array(&self) -> [&Vec<Vec<i64>>; 3] {
        [&self.e, &self.f, &self.h]
    }
}

pub fn rep_matrices(d: u32) -> RepMatrices {
    let n = d as usize + 1;
    let d = d as i64;
    let mut e = vec![vec![0; n]; n];
    let mut f = vec![vec![0; n]; n];
    let mut h = vec![vec![0; n]; n];
    for i in 0..n {
        let k = i as i64;
        h[i][i] = d - 2 * k;
        if i > 0 {
            e[i - 1][i] = k;
        }
        if i + 1 < n {
            f[i + 1][i] = d - k;
        }
    }
    RepMatrices { e, f, h }
}

/// `mu^A(z, w) = w(A z)` for `A = e, f, h`, in that order. Coordinates are
/// numbered block by block following the module's irrep order.
pub fn moment_components_sl2(v: &SL2Module) -> [QuadraticForm<BigInt>; 3] {
    let mut out: [QuadraticForm<BigInt>; 3] = Default::default();
    let mut offset = 0;
    for &d in v.irreps() {
        let r = rep_matrices(d);
        for (q, a) in out.iter_mut().zip(r.as_array()) {
            for (i, row) in a.iter().enumerate() {
                for (k, c) in row.iter().enumerate() {
                    q.add_term(Coord::W(offset + i), Coord::Z(offset + k), BigInt::from(*c));
                }
            }
        }
        offset += d as usize + 1;
    }
    out
}

/// Coordinate labelled by summand and weight subscript. Unprimed
/// coordinates are those of `V`; primed ones (`dual`) those of `V*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightCoord {
    pub summand: usize,
    pub weight: i64,
    pub dual: bool,
}

/// `z1_-2`, `z2'_1`; summands are numbered from 1.
impl fmt::Display for WeightCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = if self.dual { "'" } else { "" };
        write!(f, "z{}{}_{}", self.summand + 1, prime, self.weight)
    }
}

/// Expresses a basis coordinate as a multiple of a weight coordinate.
///
/// `z_i` of the block `R_d` becomes the unprimed coordinate of weight
/// `2i - d`; `w_i` becomes `(-1)^i / C(d, i)` times the primed coordinate
/// with subscript `d - 2i`.
pub fn weight_coordinate(v: &SL2Module, c: Coord) -> Option<(BigRational, WeightCoord)> {
    let (idx, dual) = match c {
        Coord::Z(i) => (i, false),
        Coord::W(i) => (i, true),
    };
    let mut offset = 0;
    for (s, &d) in v.irreps().iter().enumerate() {
        let n = d as usize + 1;
        if idx < offset + n {
            let i = idx - offset;
            let (d, k) = (d as i64, i as i64);
            if !dual {
                let wc = WeightCoord { summand: s, weight: 2 * k - d, dual };
                return Some((BigRational::one(), wc));
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let coeff = BigRational::new(sign.into(), binomial(BigInt::from(d), BigInt::from(k)));
            let wc = WeightCoord { summand: s, weight: d - 2 * k, dual };
            return Some((coeff, wc));
        }
        offset += n;
    }
    None
}

pub fn to_weight_coordinates(
    v: &SL2Module,
    q: &QuadraticForm<BigInt>,
) -> QuadraticForm<BigRational, WeightCoord> {
    let mut out = QuadraticForm::zero();
    for (x, y, c) in q.terms() {
        let (cx, wx) = weight_coordinate(v, x).expect("coordinate inside the module");
        let (cy, wy) = weight_coordinate(v, y).expect("coordinate inside the module");
        out.add_term(wx, wy, BigRational::from_integer(c.clone()) * cx * cy);
    }
    out
}

/// Moment components in weight coordinates, arranged as
/// `(mu^e, mu^h, -mu^f)`.
pub fn lemma_components(v: &SL2Module) -> [QuadraticForm<BigRational, WeightCoord>; 3] {
    let [e, f, h] = moment_components_sl2(v);
    [
        to_weight_coordinates(v, &e),
        to_weight_coordinates(v, &h),
        to_weight_coordinates(v, &f).scale(&-BigRational::one()),
    ]
}

/// Ranks of the Jacobian of the moment map at pseudo-random integer points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianProbe {
    pub trials: usize,
    pub seed: u64,
    /// Largest rank seen at points off the shell.
    pub generic_rank: usize,
    /// Largest rank seen at points on the shell.
    pub shell_rank: usize,
    /// `2n - generic_rank`.
    pub shell_dimension_estimate: usize,
    /// Always true: ranks are exact but the points are sampled.
    pub probabilistic: bool,
}

impl JacobianProbe {
    pub fn full_rank_on_shell(&self) -> bool {
        self.shell_rank == self.generic_rank
    }
}

struct Blocks {
    mats: [Vec<Vec<BigInt>>; 3],
    n: usize,
}

impl Blocks {
    fn new(v: &SL2Module) -> Self {
        let n = v.dimension();
        let mut mats: [Vec<Vec<BigInt>>; 3] = std::array::from_fn(|_| vec![vec![BigInt::zero(); n]; n]);
        let mut offset = 0;
        for &d in v.irreps() {
            let r = rep_matrices(d);
            for (m, a) in mats.iter_mut().zip(r.as_array()) {
                for (i, row) in a.iter().enumerate() {
                    for (k, c) in row.iter().enumerate() {
                        m[offset + i][offset + k] = BigInt::from(*c);
                    }
                }
            }
            offset += d as usize + 1;
        }
        Self { mats, n }
    }

    /// Rows `(A z)^T`, so that `xi` lies on the shell over `z` iff it is in
    /// their kernel.
    fn images(&self, z: &[BigInt]) -> Vec<Vec<BigInt>> {
        self.mats.iter().map(|m| linalg::mul_vec(m, z)).collect()
    }

    /// Rows `xi^T A`.
    fn coimages(&self, xi: &[BigInt]) -> Vec<Vec<BigInt>> {
        self.mats
            .iter()
            .map(|m| {
                (0..self.n)
                    .map(|k| (0..self.n).fold(BigInt::zero(), |acc, i| acc + &xi[i] * &m[i][k]))
                    .collect()
            })
            .collect()
    }

    /// Rank of `d mu` at `(z, xi)`: the row for `A` is `(xi^T A, (A z)^T)`.
    fn jacobian_rank(&self, z: &[BigInt], xi: &[BigInt]) -> usize {
        let rows: Vec<Vec<BigInt>> = self
            .coimages(xi)
            .into_iter()
            .zip(self.images(z))
            .map(|(a, b)| a.into_iter().chain(b).collect())
            .collect();
        linalg::rank(&rows)
    }
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigInt> {
    (0..n).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect()
}

fn random_kernel_point(rng: &mut ChaCha8Rng, rows: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    let basis = linalg::kernel_basis(rows, n);
    let mut out = vec![BigInt::zero(); n];
    for b in &basis {
        let c = BigInt::from(rng.gen_range(-6i64..=6));
        for (o, x) in out.iter_mut().zip(b) {
            *o += &c * x;
        }
    }
    out
}

/// Exact ranks of `d mu` at seeded random points. Shell points alternate
/// between a random `z` with `xi` drawn from the solutions of `mu(z, .) = 0`
/// and the mirror construction.
pub fn jacobian_rank_probe(v: &SL2Module, trials: usize, seed: u64) -> JacobianProbe {
    let trials = trials.max(1);
    let blocks = Blocks::new(v);
    let n = blocks.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut generic_rank = 0;
    let mut shell_rank = 0;
    for t in 0..trials {
        let z = random_vec(&mut rng, n);
        let xi = random_vec(&mut rng, n);
        generic_rank = generic_rank.max(blocks.jacobian_rank(&z, &xi));
        let (z, xi) = if t % 2 == 0 {
            let xi = random_kernel_point(&mut rng, &blocks.images(&z), n);
            (z, xi)
        } else {
            let z = random_kernel_point(&mut rng, &blocks.coimages(&xi), n);
            (z, xi)
        };
        shell_rank = shell_rank.max(blocks.jacobian_rank(&z, &xi));
    }
    JacobianProbe {
        trials,
        seed,
        generic_rank,
        shell_rank,
        shell_dimension_estimate: 2 * n - generic_rank,
        probabilistic: true,
    }
}
