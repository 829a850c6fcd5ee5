use std::collections::BTreeSet;

use super::cones::theta_closed_form;
use super::generators::minimal_generators;
use super::reduction::{stable_reduction, ReductionTrace};
use super::series::{invariant_series_dp_with_cap, DEFAULT_STATE_CAP};
use super::WeightMatrix;
use crate::certify::{stanley_check, GorensteinVerdict, Hypothesis};
use crate::guess::first_fit;
use crate::{expand, reconstruct, Error, HilbertSeries, ReconstructError, Result, TruncatedSeries};
use crate::{ClosedFormSource, DEFAULT_GUARD};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientOptions {
    pub degree: usize,
    /// Denominator exponents for the reduced module, before the free factor
    /// of the trivial summands is restored.
    pub denominators: Option<Vec<usize>>,
    pub guard: usize,
    pub state_cap: usize,
    /// Also compute the exact closed form by cone decomposition.
    pub exact: bool,
}

impl Default for QuotientOptions {
    fn default() -> Self {
        Self {
            degree: 24,
            denominators: None,
            guard: DEFAULT_GUARD,
            state_cap: DEFAULT_STATE_CAP,
            exact: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusQuotient {
    pub trace: ReductionTrace,
    /// Quotient series of the reduced module up to the requested degree.
    pub reduced_truncation: TruncatedSeries,
    /// Same, with the trivial summands restored.
    pub truncated: TruncatedSeries,
    pub series: HilbertSeries,
    pub source: ClosedFormSource,
    /// Denominator handed to reconstruction, if it succeeded.
    pub denominator: Option<Vec<usize>>,
    /// Whether `series` agrees with the exact cone decomposition; `None` if
    /// that was skipped or out of capacity.
    pub exact_agrees: Option<bool>,
    pub verdict: GorensteinVerdict,
    pub notes: Vec<String>,
}

/// Quotient series with default options apart from degree and denominator.
pub fn quotient_series(
    a: &WeightMatrix,
    degree: usize,
    denominators: Option<&[usize]>,
) -> Result<TorusQuotient> {
    quotient_series_with(
        a,
        &QuotientOptions {
            degree,
            denominators: denominators.map(<[usize]>::to_vec),
            ..QuotientOptions::default()
        },
    )
}

fn guess(
    reduced: &WeightMatrix,
    s: &TruncatedSeries,
    size: usize,
    guard: usize,
) -> std::result::Result<HilbertSeries, ReconstructError> {
    let bound = s.bound();
    let need = 2 * size + guard;
    let too_short = ReconstructError::TooShort { have: bound, need };
    if bound < need {
        return Err(too_short);
    }
    let Ok(gens) = minimal_generators(reduced, bound.max(2)) else {
        return Err(too_short);
    };
    let degrees: BTreeSet<usize> = gens.iter().map(|g| g.degree).collect();
    first_fit(s, &degrees, size, guard)
}

pub fn quotient_series_with(a: &WeightMatrix, opts: &QuotientOptions) -> Result<TorusQuotient> {
    let trace = stable_reduction(a);
    let reduced = &trace.reduced_matrix;
    let (l, n) = (reduced.torus_rank(), reduced.dimension());
    let m = trace.removed_trivial_columns;
    let bound = opts.degree;

    let mut reduced_truncation = invariant_series_dp_with_cap(reduced, bound, opts.state_cap)?;
    for _ in 0..l {
        reduced_truncation = reduced_truncation.mul_one_minus_t_pow(2);
    }
    let mut truncated = reduced_truncation.clone();
    for _ in 0..2 * m {
        truncated = truncated.div_one_minus_t_pow(1);
    }
    let fail = |source: ReconstructError| Error::Reconstruction {
        source,
        truncated: truncated.clone(),
    };

    let mut notes = Vec::new();
    let exact = if trace.is_empty() {
        Some(HilbertSeries::one())
    } else if opts.exact {
        match theta_closed_form(reduced) {
            Ok(theta) => Some(theta.divide_by_factors(&vec![2; n - l])),
            Err(Error::Capacity(why)) => {
                notes.push(format!("exact closed form skipped: {why}"));
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    if let Some(x) = &exact {
        if expand(x, bound) != reduced_truncation {
            return Err(Error::Precondition(
                "exact closed form disagrees with the lattice-point count".into(),
            ));
        }
    }

    let (reduced_series, source, denominator) = if let Some(den) = &opts.denominators {
        let h = reconstruct(&reduced_truncation, den, opts.guard).map_err(fail)?;
        (h, ClosedFormSource::Supplied, Some(den.clone()))
    } else if trace.is_empty() {
        (HilbertSeries::one(), ClosedFormSource::Exact, None)
    } else {
        match guess(reduced, &reduced_truncation, 2 * (n - l), opts.guard) {
            Ok(h) if exact.as_ref().is_none_or(|x| *x == h) => {
                let den = h.denominator().to_vec();
                (h, ClosedFormSource::Guessed, Some(den))
            }
            Ok(h) => {
                notes.push(format!(
                    "guessed form {h} matches the truncation but not the exact series"
                ));
                (exact.clone().unwrap(), ClosedFormSource::Exact, None)
            }
            Err(e) => match &exact {
                Some(x) => {
                    notes.push("no denominator from generator degrees fits the truncation".into());
                    (x.clone(), ClosedFormSource::Exact, None)
                }
                None => return Err(fail(e)),
            },
        }
    };
    let exact_agrees = exact.as_ref().map(|x| *x == reduced_series);
    let series = reduced_series.divide_by_factors(&vec![1; 2 * m]);
    let verdict = stanley_check(&series)?.with_hypothesis(Hypothesis::Established(
        "stable reduction is a stable faithful torus module; its quotient has rational singularities".into(),
    ));
    Ok(TorusQuotient {
        trace,
        reduced_truncation,
        truncated,
        series,
        source,
        denominator,
        exact_agrees,
        verdict,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    fn wm(rows: &[Vec<i64>]) -> WeightMatrix {
        WeightMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn opposite_weights() {
        let q = quotient_series(&wm(&[vec![1, -1]]), 20, None).unwrap();
        let expected = HilbertSeries::new(
            Polynomial::new(vec![1.into(), 0.into(), 1.into()]),
            vec![2, 2],
        );
        assert_eq!(q.series, expected);
        assert_eq!(q.source, ClosedFormSource::Guessed);
        assert_eq!(q.exact_agrees, Some(true));
        assert!(q.verdict.graded_gorenstein);
        assert_eq!(q.verdict.a_invariant, Some(-2));
    }

    #[test]
    fn point_quotient() {
        let q = quotient_series(&wm(&[vec![1]]), 10, None).unwrap();
        assert_eq!(q.series, HilbertSeries::one());
        assert!(q.trace.is_empty());
    }

    #[test]
    fn trivial_summand_restored() {
        let q = quotient_series(&wm(&[vec![1, -1, 0]]), 16, None).unwrap();
        assert_eq!(q.series.pole_order_at_one(), 4);
        assert!(q.verdict.graded_gorenstein);
    }

    #[test]
    fn supplied_denominator_failure_keeps_truncation() {
        let err = quotient_series(&wm(&[vec![1, -1]]), 12, Some(&[3, 3])).unwrap_err();
        match err {
            Error::Reconstruction { truncated, .. } => assert_eq!(truncated.bound(), 12),
            other => panic!("unexpected {other:?}"),
        }
    }
}
