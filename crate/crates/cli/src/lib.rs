//! Batch front end for the torus and SL2 analyzers: request parsing, report
//! assembly and brute-force cross-checks.

pub mod oracle;
pub mod report;
pub mod request;

use symquot::certify::stanley_check;
use symquot::sl2::{
    classify_largeness, jacobian_rank_probe, koszul_quotient_series_with, moment_components_sl2,
    SL2Module, Sl2Options,
};
use symquot::torus::{
    largeness_report, moment_components, quotient_series_with, shell_diagnostics, shell_hilbert,
    shell_series, QuotientOptions, WeightMatrix,
};
use symquot::Error;

pub use report::AnalysisReport;
pub use request::{parse_requests, AnalysisRequest, Kind, Overrides, Payload, SchemaError};

use report::{
    coefficients, int, source_name, Classification, Gate, Gorenstein, Largeness, Probe, Quotient,
    Reduction, Shell, Singularities, Status,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCHEMA: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_RECONSTRUCTION: i32 = 3;

/// Jacobian probe trials for SL2 requests.
pub const PROBE_TRIALS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    Schema(String),
    Capacity(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Schema(_) => EXIT_SCHEMA,
            RunError::Capacity(_) => EXIT_CAPACITY,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Schema(m) => write!(f, "invalid request: {m}"),
            RunError::Capacity(m) => write!(f, "capacity exceeded: {m}"),
        }
    }
}

impl std::error::Error for RunError {}

/// Errors that abort the whole request. Reconstruction and precondition
/// failures are reported inside the document instead.
fn fatal(e: Error) -> RunError {
    match e {
        Error::Capacity(m) => RunError::Capacity(m),
        other => RunError::Schema(other.to_string()),
    }
}

impl AnalysisReport {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::ReconstructionFailed => EXIT_RECONSTRUCTION,
            _ => EXIT_OK,
        }
    }
}

pub fn run(req: &AnalysisRequest) -> Result<AnalysisReport, RunError> {
    match &req.payload {
        Payload::Torus(a) => run_torus(req, a),
        Payload::Sl2(v) => run_sl2(req, v),
    }
}

/// Quotient section for a failed computation, with the truncation when one
/// is available.
fn failed_quotient(e: Error) -> Result<(Status, Quotient), RunError> {
    match e {
        Error::Reconstruction { source, truncated } => Ok((
            Status::ReconstructionFailed,
            Quotient {
                closed_form: None,
                source: None,
                truncated: coefficients(&truncated),
                exact_agrees: None,
                error: Some(source.to_string()),
            },
        )),
        Error::Precondition(m) => Ok((
            Status::PreconditionFailed,
            Quotient {
                closed_form: None,
                source: None,
                truncated: Vec::new(),
                exact_agrees: None,
                error: Some(m),
            },
        )),
        other => Err(fatal(other)),
    }
}

/// Column numbers in reports match the 1-based coordinate names `z1, w1, ...`.
fn one_based(cols: &[usize]) -> Vec<usize> {
    cols.iter().map(|j| j + 1).collect()
}

fn run_torus(req: &AnalysisRequest, a: &WeightMatrix) -> Result<AnalysisReport, RunError> {
    let large = largeness_report(a).map_err(fatal)?;
    let diag = shell_diagnostics(a).map_err(fatal)?;
    let opts = QuotientOptions {
        degree: req.degree,
        denominators: req.denominators.clone(),
        ..QuotientOptions::default()
    };
    let mut caveats = Vec::new();
    let mut reduction = None;
    let mut gorenstein = None;
    let (status, quotient) = match quotient_series_with(a, &opts) {
        Ok(q) => {
            reduction = Some(Reduction {
                kept_columns: one_based(&q.trace.kept_columns),
                removed_trivial_columns: q.trace.removed_trivial_columns,
                removed_unstable_columns: one_based(&q.trace.removed_unstable_columns),
                reduced_weights: q.trace.reduced_matrix.rows().iter().map(|r| r.iter().map(int).collect()).collect(),
            });
            gorenstein = Some(Gorenstein::from(&q.verdict));
            caveats.extend(q.notes.iter().cloned());
            (
                Status::Ok,
                Quotient {
                    closed_form: Some((&q.series).into()),
                    source: Some(source_name(q.source)),
                    truncated: coefficients(&q.truncated),
                    exact_agrees: q.exact_agrees,
                    error: None,
                },
            )
        }
        Err(e) => failed_quotient(e)?,
    };
    let shell = Shell {
        dimension: Some(diag.shell_dimension),
        complete_intersection: Some(diag.complete_intersection),
        series: shell_hilbert(a).ok().map(|h| (&h).into()),
        a_invariant: diag.shell_a_invariant,
    };
    let oracle = req.oracle.then(|| oracle::torus(a, req.degree));
    if let Some(Some(false)) = oracle.as_ref().map(|o| o.agrees) {
        caveats.push("invariant counts disagree with monomial enumeration".into());
    }
    Ok(AnalysisReport {
        kind: Kind::Torus,
        module: a.to_string(),
        dimension: a.dimension(),
        degree: req.degree,
        seed: req.seed,
        status,
        moment_map: moment_components(a).iter().map(ToString::to_string).collect(),
        reduction,
        largeness: Some(Largeness {
            faithful_up_to_finite: large.faithful_up_to_finite,
            finite_kernel_order: large.finite_kernel_order.as_ref().map(int),
            stable: large.stable,
            fpig: large.fpig,
            max_k_modular: large.max_k_modular,
            one_large: large.one_large,
            dim_bound_ok: large.dim_bound_ok,
        }),
        classification: None,
        gate: None,
        shell,
        quotient,
        gorenstein,
        singularities: Some(Singularities {
            shell_normal: diag.shell_normal.to_string(),
            shell_normal_reason: diag.shell_normal_reason.clone(),
            shell_rational: diag.shell_rational.to_string(),
            shell_rational_reason: diag.shell_rational_reason.clone(),
            quotient_normal: diag.quotient_normal.to_string(),
            quotient_rational: diag.quotient_rational.to_string(),
        }),
        caveats,
        oracle,
    })
}

fn run_sl2(req: &AnalysisRequest, v: &SL2Module) -> Result<AnalysisReport, RunError> {
    let core = v.nontrivial_part();
    let n = v.dimension();
    let classification = if core.irreps().is_empty() {
        None
    } else {
        Some(classify_largeness(&core).map_err(fatal)?)
    };
    let probe = classification.map(|_| jacobian_rank_probe(&core, PROBE_TRIALS, req.seed));
    let zero_modular = classification.is_none_or(|c| c.zero_modular);
    let shell = if zero_modular {
        let l = if classification.is_some() { 3 } else { 0 };
        let h = shell_series(l, n);
        let a_invariant = stanley_check(&h).ok().and_then(|v| v.a_invariant);
        Shell {
            dimension: Some(2 * n - l),
            complete_intersection: Some(true),
            series: Some((&h).into()),
            a_invariant,
        }
    } else {
        Shell {
            dimension: None,
            complete_intersection: Some(false),
            series: None,
            a_invariant: None,
        }
    };
    let opts = Sl2Options {
        degree: req.degree,
        denominators: req.denominators.clone(),
        trials: PROBE_TRIALS,
        seed: req.seed,
        ..Sl2Options::default()
    };
    let mut caveats = Vec::new();
    let mut gorenstein = None;
    let (status, quotient) = match koszul_quotient_series_with(v, &opts) {
        Ok(q) => {
            gorenstein = Some(Gorenstein::from(&q.verdict));
            caveats.extend(q.caveats.iter().map(ToString::to_string));
            (
                Status::Ok,
                Quotient {
                    closed_form: Some((&q.series).into()),
                    source: Some(source_name(q.source)),
                    truncated: coefficients(&q.truncated),
                    exact_agrees: None,
                    error: None,
                },
            )
        }
        Err(e) => failed_quotient(e)?,
    };
    let oracle = req.oracle.then(|| oracle::sl2(&core, req.degree));
    if let Some(Some(false)) = oracle.as_ref().map(|o| o.agrees) {
        caveats.push("multiplicities disagree with weight-monomial enumeration".into());
    }
    Ok(AnalysisReport {
        kind: Kind::Sl2,
        module: v.to_string(),
        dimension: n,
        degree: req.degree,
        seed: req.seed,
        status,
        moment_map: moment_components_sl2(v).iter().map(ToString::to_string).collect(),
        reduction: None,
        largeness: None,
        classification: classification.map(|c| Classification {
            two_large: c.two_large,
            one_large: c.one_large,
            zero_modular: c.zero_modular,
            orbifold: c.orbifold,
        }),
        gate: Some(Gate {
            zero_modular,
            probe: probe.map(|p| Probe {
                trials: p.trials,
                seed: p.seed,
                generic_rank: p.generic_rank,
                shell_rank: p.shell_rank,
                shell_dimension_estimate: p.shell_dimension_estimate,
                probabilistic: p.probabilistic,
            }),
        }),
        shell,
        quotient,
        gorenstein,
        singularities: None,
        caveats,
        oracle,
    })
}
