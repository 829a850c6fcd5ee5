//! Torus modules given by an integer weight matrix.
//!
//! Column `j` of the `l x n` matrix is the weight of coordinate `z_j`; the
//! dual coordinate `w_j` carries the negated weight.

mod cones;
mod diagnostics;
mod generators;
mod largeness;
mod quotient;
mod reduction;
mod series;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg;
use crate::quadratic::{Coord, QuadraticForm};
use crate::{Error, Result};

pub use cones::theta_closed_form;
pub use diagnostics::{shell_diagnostics, ShellDiagnostics, Verdict};
pub use generators::{minimal_generators, Generator};
pub use largeness::{largeness_report, Stratum, TorusLargenessReport, MAX_SUPPORT_COLUMNS};
pub use quotient::{quotient_series, quotient_series_with, QuotientOptions, TorusQuotient};
pub use reduction::{stable_reduction, ReductionTrace};
pub use series::{
    invariant_series_dp, invariant_series_dp_with_cap, shell_hilbert, shell_series,
    DEFAULT_STATE_CAP,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigInt>>,
}

impl WeightMatrix {
    /// `rows x cols` matrix from row vectors. With `rows == 0` the entry list
    /// is empty and `cols` alone fixes the module dimension.
    pub fn new(rows: usize, cols: usize, entries: Vec<Vec<BigInt>>) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::InvalidInput(format!(
                "expected {rows} rows, got {}",
                entries.len()
            )));
        }
        if let Some(i) = entries.iter().position(|r| r.len() != cols) {
            return Err(Error::InvalidInput(format!(
                "row {} has {} entries, expected {cols}",
                i + 1,
                entries[i].len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Matrix with at least one row; the column count is read from the rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let entries = rows
            .iter()
            .map(|r| r.iter().cloned().map(Into::into).collect())
            .collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            entries: linalg::identity(n),
        }
    }

    /// Torus rank `l`.
    pub fn torus_rank(&self) -> usize {
        self.rows
    }

    /// Complex dimension `n` of the module.
    pub fn dimension(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        self.entries.iter().all(|r| r[j].is_zero())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self {
            rows: self.rows,
            cols: cols.len(),
            entries: self
                .entries
                .iter()
                .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
                .collect(),
        }
    }

    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        self.select_columns(perm)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or_default()
    }

    /// Entries as machine integers for the enumeration kernels.
    pub(crate) fn to_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        x.to_i64()
                            .filter(|v| v.unsigned_abs() < 1 << 31)
                            .ok_or_else(|| {
                                Error::Capacity(format!("weight {x} too large for enumeration"))
                            })
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightMatrix({}x{}, {})", self.rows, self.cols, self)
    }
}

/// `[[1, -1], [0, 2]]`
impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Complex moment map components `mu_i = sum_j a_ij z_j w_j`, one per row.
pub fn moment_components(a: &WeightMatrix) -> Vec<QuadraticForm<BigInt>> {
    a.rows()
        .iter()
        .map(|row| {
            QuadraticForm::from_terms(
                row.iter()
                    .enumerate()
                    .map(|(j, c)| (Coord::Z(j), Coord::W(j), c.clone())),
            )
        })
        .collect()
}
