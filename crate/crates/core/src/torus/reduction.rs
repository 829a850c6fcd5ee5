use num_bigint::BigInt;
use num_traits::Zero;

use super::WeightMatrix;
use crate::linalg;
use crate::lp::feasible_nonneg;

/// Record of the passage from a weight matrix to a stable module of full
/// row rank with no zero weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    /// Zero-based indices of the columns that survive, in original order.
    pub kept_columns: Vec<usize>,
    /// Zero columns, split off as trivial summands.
    pub removed_trivial_columns: usize,
    /// Nonzero columns outside the lineality space of the weight cone.
    pub removed_unstable_columns: Vec<usize>,
    /// Stable, full row rank, no zero columns.
    pub reduced_matrix: WeightMatrix,
    /// Unimodular `U` with `U * A[:, kept]` equal to the reduced matrix
    /// stacked over zero rows.
    pub row_basis_change: Vec<Vec<BigInt>>,
}

impl ReductionTrace {
    /// Recompute the reduced matrix from the original.
    pub fn apply(&self, original: &WeightMatrix) -> WeightMatrix {
        let restricted = original.select_columns(&self.kept_columns);
        let rows = self.reduced_matrix.torus_rank();
        let product = linalg::mul(&self.row_basis_change, restricted.rows(), restricted.dimension());
        WeightMatrix::new(rows, restricted.dimension(), product.into_iter().take(rows).collect())
            .expect("shape is preserved")
    }

    /// Nothing but trivial summands remain; the reduced quotient is a point.
    pub fn is_empty(&self) -> bool {
        self.kept_columns.is_empty()
    }

    pub fn reduced_dimension(&self) -> usize {
        self.kept_columns.len()
    }

    pub fn reduced_rank(&self) -> usize {
        self.reduced_matrix.torus_rank()
    }
}

/// Column `j` lies in the lineality space of the weight cone: some
/// `c >= 0` with `c_j > 0` has `A c = 0`.
pub(crate) fn in_lineality(a: &WeightMatrix, j: usize) -> bool {
    // Scale so that c_j >= 1 and substitute c_j = 1 + c'_j.
    let rhs: Vec<BigInt> = a.column(j).into_iter().map(|x| -x).collect();
    feasible_nonneg(a.rows(), &rhs, a.dimension())
}

pub(crate) fn lineality_columns(a: &WeightMatrix) -> Vec<bool> {
    (0..a.dimension())
        .map(|j| a.is_zero_column(j) || in_lineality(a, j))
        .collect()
}

pub fn stable_reduction(a: &WeightMatrix) -> ReductionTrace {
    let lineal = lineality_columns(a);
    let mut kept = Vec::new();
    let mut trivial = 0;
    let mut unstable = Vec::new();
    for j in 0..a.dimension() {
        if a.is_zero_column(j) {
            trivial += 1;
        } else if lineal[j] {
            kept.push(j);
        } else {
            unstable.push(j);
        }
    }
    let restricted = a.select_columns(&kept);
    let rh = linalg::row_hermite(restricted.rows(), restricted.dimension());
    let r = rh.rank();
    let reduced = WeightMatrix::new(
        r,
        kept.len(),
        rh.h.into_iter().take(r).collect(),
    )
    .expect("shape is preserved");
    debug_assert!(reduced.rows().iter().all(|row| row.iter().any(|x| !x.is_zero())));
    ReductionTrace {
        kept_columns: kept,
        removed_trivial_columns: trivial,
        removed_unstable_columns: unstable,
        reduced_matrix: reduced,
        row_basis_change: rh.u,
    }
}
