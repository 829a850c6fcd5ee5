use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ab_series, classify_largeness, jacobian_rank_probe, ABSeries, JacobianProbe, SL2Module, Sl2Classification};
use crate::certify::{stanley_check, GorensteinVerdict, Hypothesis};
use crate::guess::first_fit;
use crate::{reconstruct, ClosedFormSource, Error, HilbertSeries, Result, TruncatedSeries, DEFAULT_GUARD};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Options {
    pub degree: usize,
    /// Denominator exponents for the nontrivial part of the module.
    pub denominators: Option<Vec<usize>>,
    pub guard: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for Sl2Options {
    fn default() -> Self {
        Self {
            degree: 24,
            denominators: None,
            guard: DEFAULT_GUARD,
            trials: 8,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Caveat {
    /// The module is not 1-large; the series is that of the invariants of
    /// the shell's coordinate ring, which may differ from the coordinate
    /// ring of the symplectic quotient and need not be Cohen-Macaulay.
    NotOneLarge,
    /// The Jacobian probe found no point of the shell where `d mu` has full
    /// rank.
    ProbeRankDeficient { generic: usize, shell: usize },
}

impl fmt::Display for Caveat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Caveat::NotOneLarge => write!(
                f,
                "not 1-large: series of the invariants of the shell ring, which may differ from the symplectic quotient and may fail to be Cohen-Macaulay"
            ),
            Caveat::ProbeRankDeficient { generic, shell } => write!(
                f,
                "Jacobian rank {shell} on sampled shell points is below the generic rank {generic}"
            ),
        }
    }
}

/// Evidence behind the complete-intersection gate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateEvidence {
    /// From the classification list; exact.
    pub zero_modular: bool,
    /// Sampled; present for nontrivial modules.
    pub probe: Option<JacobianProbe>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Quotient {
    pub module: SL2Module,
    /// `None` when the module is trivial.
    pub classification: Option<Sl2Classification>,
    pub gate: GateEvidence,
    /// Multiplicities for the nontrivial part.
    pub ab: ABSeries,
    /// Alternating sum for the nontrivial part.
    pub reduced_truncation: TruncatedSeries,
    /// Same, with the trivial summands restored.
    pub truncated: TruncatedSeries,
    pub series: HilbertSeries,
    pub source: ClosedFormSource,
    pub denominator: Option<Vec<usize>>,
    pub verdict: GorensteinVerdict,
    pub caveats: Vec<Caveat>,
}

pub fn koszul_quotient_series(
    v: &SL2Module,
    degree: usize,
    denominators: Option<&[usize]>,
) -> Result<Sl2Quotient> {
    koszul_quotient_series_with(
        v,
        &Sl2Options {
            degree,
            denominators: denominators.map(<[usize]>::to_vec),
            ..Sl2Options::default()
        },
    )
}

/// `a - t^2 b + t^4 b - t^6 a`, the Koszul complex on the three moment
/// components tensored down to invariants.
fn alternating_sum(ab: &ABSeries) -> TruncatedSeries {
    let mut h = &ab.a - &ab.b.shift(2);
    h = &h + &ab.b.shift(4);
    &h - &ab.a.shift(6)
}

/// Degrees `d >= 1` with `a_d > 0`, up to `max`.
fn invariant_degrees(a: &TruncatedSeries, max: usize) -> BTreeSet<usize> {
    (1..=max.min(a.bound()))
        .filter(|&d| *a.coeff(d) > BigInt::zero())
        .collect()
}

pub fn koszul_quotient_series_with(v: &SL2Module, opts: &Sl2Options) -> Result<Sl2Quotient> {
    let core = v.nontrivial_part();
    let m = v.trivial_count();
    let bound = opts.degree;
    let n = core.dimension();

    let classification = if core.irreps().is_empty() {
        None
    } else {
        Some(classify_largeness(&core)?)
    };
    let gate = GateEvidence {
        zero_modular: classification.is_none_or(|c| c.zero_modular),
        probe: classification.map(|_| jacobian_rank_probe(&core, opts.trials, opts.seed)),
    };
    if !gate.zero_modular {
        return Err(Error::Precondition(format!(
            "moment components of {core} do not form a regular sequence"
        )));
    }
    let mut caveats = Vec::new();
    if let Some(p) = &gate.probe {
        if !p.full_rank_on_shell() {
            caveats.push(Caveat::ProbeRankDeficient {
                generic: p.generic_rank,
                shell: p.shell_rank,
            });
        }
    }
    let one_large = classification.is_none_or(|c| c.one_large);
    if !one_large {
        caveats.push(Caveat::NotOneLarge);
    }

    let ab = ab_series(&core, bound);
    let reduced_truncation = if classification.is_some() {
        alternating_sum(&ab)
    } else {
        TruncatedSeries::one(bound)
    };
    let mut truncated = reduced_truncation.clone();
    for _ in 0..2 * m {
        truncated = truncated.div_one_minus_t_pow(1);
    }
    let fail = |source| Error::Reconstruction {
        source,
        truncated: truncated.clone(),
    };

    let (reduced_series, source) = if let Some(den) = &opts.denominators {
        let h = reconstruct(&reduced_truncation, den, opts.guard).map_err(fail)?;
        (h, ClosedFormSource::Supplied)
    } else if classification.is_none() {
        (HilbertSeries::one(), ClosedFormSource::Exact)
    } else {
        let size = 2 * n - 6;
        let degrees = invariant_degrees(&ab.a, bound.saturating_sub(opts.guard));
        let h = first_fit(&reduced_truncation, &degrees, size, opts.guard).map_err(fail)?;
        (h, ClosedFormSource::Guessed)
    };
    let denominator = (source != ClosedFormSource::Exact).then(|| reduced_series.denominator().to_vec());
    let series = reduced_series.divide_by_factors(&vec![1; 2 * m]);
    let hypothesis = if one_large {
        Hypothesis::Established(
            "1-large module: the quotient has symplectic, hence rational, singularities".into(),
        )
    } else {
        Hypothesis::NotGuaranteed(
            "not 1-large: the invariants of the shell ring may fail to be Cohen-Macaulay".into(),
        )
    };
    let verdict = stanley_check(&series)?.with_hypothesis(hypothesis);
    Ok(Sl2Quotient {
        module: v.clone(),
        classification,
        gate,
        ab,
        reduced_truncation,
        truncated,
        series,
        source,
        denominator,
        verdict,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    fn module(d: &[u32]) -> SL2Module {
        SL2Module::from_labels(d)
    }

    fn poly(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn two_adjoints() {
        let q = koszul_quotient_series(&module(&[2, 2]), 24, None).unwrap();
        assert_eq!(q.series, HilbertSeries::new(poly(&[1, 0, 4, 0, 4, 0, 1]), vec![2; 6]));
        assert_eq!(q.verdict.a_invariant, Some(-6));
        assert!(q.verdict.certified());
        assert!(q.caveats.is_empty());
    }

    #[test]
    fn two_standard_modules() {
        let q = koszul_quotient_series(&module(&[1, 1]), 16, None).unwrap();
        assert_eq!(q.truncated.coeff(2), &6.into());
        assert_eq!(q.series, HilbertSeries::new(poly(&[1, 0, 4, 0, -1]), vec![2, 2]));
        assert!(q.caveats.contains(&Caveat::NotOneLarge));
        assert!(matches!(q.verdict.hypothesis, Hypothesis::NotGuaranteed(_)));
        assert!(!q.verdict.graded_gorenstein);
    }

    #[test]
    fn gate_rejects_small_modules() {
        assert!(matches!(
            koszul_quotient_series(&module(&[1]), 12, None),
            Err(Error::Precondition(_))
        ));
        assert!(koszul_quotient_series(&module(&[2, 0]), 12, None).is_err());
    }

    #[test]
    fn trivial_summands_are_free() {
        let q = koszul_quotient_series(&module(&[0]), 8, None).unwrap();
        assert_eq!(q.series, HilbertSeries::free(2));
        assert!(q.classification.is_none());
        let with = koszul_quotient_series(&module(&[2, 2, 0]), 24, None).unwrap();
        let without = koszul_quotient_series(&module(&[2, 2]), 24, None).unwrap();
        assert_eq!(with.series, without.series.divide_by_factors(&[1, 1]));
    }

    #[test]
    fn supplied_denominator_failure_keeps_truncation() {
        match koszul_quotient_series(&module(&[2, 2]), 24, Some(&[2, 2])) {
            Err(Error::Reconstruction { truncated, .. }) => {
                assert_eq!(truncated.coeff(2), &10.into());
            }
            other => panic!("expected reconstruction failure, got {other:?}"),
        }
    }
}
