use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;
use symquot::certify::GorensteinVerdict;
use symquot::{ClosedFormSource, HilbertSeries, TruncatedSeries};

use crate::request::Kind;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    PreconditionFailed,
    ReconstructionFailed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Series {
    pub text: String,
    pub numerator: Vec<Value>,
    pub denominator: Vec<usize>,
}

impl From<&HilbertSeries> for Series {
    fn from(h: &HilbertSeries) -> Self {
        Self {
            text: h.to_string(),
            numerator: h.numerator().coeffs().iter().map(int).collect(),
            denominator: h.denominator().to_vec(),
        }
    }
}

pub fn coefficients(s: &TruncatedSeries) -> Vec<Value> {
    s.coeffs().iter().map(int).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reduction {
    pub kept_columns: Vec<usize>,
    pub removed_trivial_columns: usize,
    pub removed_unstable_columns: Vec<usize>,
    pub reduced_weights: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Largeness {
    pub faithful_up_to_finite: bool,
    pub finite_kernel_order: Option<Value>,
    pub stable: bool,
    pub fpig: bool,
    pub max_k_modular: Option<i64>,
    pub one_large: bool,
    pub dim_bound_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub two_large: bool,
    pub one_large: bool,
    pub zero_modular: bool,
    pub orbifold: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Probe {
    pub trials: usize,
    pub seed: u64,
    pub generic_rank: usize,
    pub shell_rank: usize,
    pub shell_dimension_estimate: usize,
    pub probabilistic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Gate {
    pub zero_modular: bool,
    pub probe: Option<Probe>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Shell {
    pub dimension: Option<usize>,
    pub complete_intersection: Option<bool>,
    pub series: Option<Series>,
    pub a_invariant: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quotient {
    pub closed_form: Option<Series>,
    pub source: Option<&'static str>,
    pub truncated: Vec<Value>,
    pub exact_agrees: Option<bool>,
    pub error: Option<String>,
}

pub fn source_name(s: ClosedFormSource) -> &'static str {
    match s {
        ClosedFormSource::Supplied => "supplied",
        ClosedFormSource::Guessed => "guessed",
        ClosedFormSource::Exact => "exact",
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Gorenstein {
    pub dimension: u64,
    pub a_invariant: Option<i64>,
    pub functional_equation_holds: bool,
    pub graded_gorenstein: bool,
    pub hypothesis: String,
    pub certified: bool,
}

impl From<&GorensteinVerdict> for Gorenstein {
    fn from(v: &GorensteinVerdict) -> Self {
        Self {
            dimension: v.dimension,
            a_invariant: v.a_invariant,
            functional_equation_holds: v.functional_equation_holds,
            graded_gorenstein: v.graded_gorenstein,
            hypothesis: v.hypothesis.to_string(),
            certified: v.certified(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Singularities {
    pub shell_normal: String,
    pub shell_normal_reason: String,
    pub shell_rational: String,
    pub shell_rational_reason: String,
    pub quotient_normal: String,
    pub quotient_rational: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Oracle {
    pub method: String,
    pub degree: Option<usize>,
    pub agrees: Option<bool>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub kind: Kind,
    pub module: String,
    pub dimension: usize,
    pub degree: usize,
    pub seed: u64,
    pub status: Status,
    pub moment_map: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<Reduction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub largeness: Option<Largeness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gate: Option<Gate>,
    pub shell: Shell,
    pub quotient: Quotient,
    pub gorenstein: Option<Gorenstein>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singularities: Option<Singularities>,
    pub caveats: Vec<String>,
    pub oracle: Option<Oracle>,
}

fn opt<T: std::fmt::Display>(x: &Option<T>) -> String {
    match x {
        Some(v) => v.to_string(),
        None => "n/a".into(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn values(v: &[Value]) -> String {
    v.iter()
        .map(|x| match x {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

impl AnalysisReport {
    pub fn to_machine(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Sectioned plain-text rendering of the same content.
    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let mut line = |s: String| {
            o.push_str(&s);
            o.push('\n');
        };
        let kind = match self.kind {
            Kind::Torus => "torus",
            Kind::Sl2 => "sl2",
        };
        line(format!("== {kind} {} ==", self.module));
        line(format!("dimension: {}", self.dimension));
        line(format!("degree: {}", self.degree));
        line(format!("seed: {}", self.seed));
        line(format!("status: {}", serde_json::to_value(self.status).unwrap().as_str().unwrap()));
        line("moment map".into());
        for (i, m) in self.moment_map.iter().enumerate() {
            line(format!("  mu{}: {m}", i + 1));
        }
        if let Some(r) = &self.reduction {
            line("reduction".into());
            line(format!("  kept columns: {:?}", r.kept_columns));
            line(format!("  removed trivial columns: {}", r.removed_trivial_columns));
            line(format!("  removed unstable columns: {:?}", r.removed_unstable_columns));
            let rows: Vec<String> = r.reduced_weights.iter().map(|row| format!("[{}]", values(row))).collect();
            line(format!("  reduced weights: [{}]", rows.join(", ")));
        }
        if let Some(l) = &self.largeness {
            line("largeness".into());
            line(format!("  faithful up to finite kernel: {}", yes_no(l.faithful_up_to_finite)));
            line(format!(
                "  finite kernel order: {}",
                l.finite_kernel_order.as_ref().map_or("n/a".into(), |v| values(std::slice::from_ref(v)))
            ));
            line(format!("  stable: {}", yes_no(l.stable)));
            line(format!("  fpig: {}", yes_no(l.fpig)));
            line(format!("  max k-modular: {}", opt(&l.max_k_modular)));
            line(format!("  1-large: {}", yes_no(l.one_large)));
            line(format!("  dimension bound: {}", yes_no(l.dim_bound_ok)));
        }
        if let Some(c) = &self.classification {
            line("classification".into());
            line(format!("  2-large: {}", yes_no(c.two_large)));
            line(format!("  1-large: {}", yes_no(c.one_large)));
            line(format!("  0-modular: {}", yes_no(c.zero_modular)));
            line(format!("  orbifold: {}", yes_no(c.orbifold)));
        }
        if let Some(g) = &self.gate {
            line("complete intersection gate".into());
            line(format!("  0-modular: {}", yes_no(g.zero_modular)));
            if let Some(p) = &g.probe {
                line(format!(
                    "  jacobian probe (probabilistic, {} trials, seed {}): generic rank {}, shell rank {}, shell dimension {}",
                    p.trials, p.seed, p.generic_rank, p.shell_rank, p.shell_dimension_estimate
                ));
            }
        }
        line("shell".into());
        line(format!("  dimension: {}", opt(&self.shell.dimension)));
        line(format!(
            "  complete intersection: {}",
            self.shell.complete_intersection.map_or("n/a", yes_no)
        ));
        line(format!("  series: {}", self.shell.series.as_ref().map_or("n/a", |s| s.text.as_str())));
        line(format!("  a-invariant: {}", opt(&self.shell.a_invariant)));
        line("quotient".into());
        match &self.quotient.closed_form {
            Some(s) => line(format!("  series: {} [{}]", s.text, self.quotient.source.unwrap_or("?"))),
            None => line("  series: n/a".into()),
        }
        line(format!("  truncated: {}", values(&self.quotient.truncated)));
        if let Some(x) = self.quotient.exact_agrees {
            line(format!("  agrees with exact cone decomposition: {}", yes_no(x)));
        }
        if let Some(e) = &self.quotient.error {
            line(format!("  error: {e}"));
        }
        if let Some(g) = &self.gorenstein {
            line("gorenstein".into());
            line(format!("  krull dimension: {}", g.dimension));
            line(format!("  a-invariant: {}", opt(&g.a_invariant)));
            line(format!("  functional equation: {}", yes_no(g.functional_equation_holds)));
            line(format!("  graded gorenstein: {}", yes_no(g.graded_gorenstein)));
            line(format!("  hypothesis: {}", g.hypothesis));
            line(format!("  certified: {}", yes_no(g.certified)));
        }
        if let Some(s) = &self.singularities {
            line("singularities".into());
            line(format!("  shell normal: {} ({})", s.shell_normal, s.shell_normal_reason));
            line(format!("  shell rational: {} ({})", s.shell_rational, s.shell_rational_reason));
            line(format!("  quotient normal: {}", s.quotient_normal));
            line(format!("  quotient rational: {}", s.quotient_rational));
        }
        if !self.caveats.is_empty() {
            line("caveats".into());
            for c in &self.caveats {
                line(format!("  - {c}"));
            }
        }
        if let Some(or) = &self.oracle {
            line("oracle".into());
            line(format!("  method: {}", or.method));
            line(format!("  degree: {}", opt(&or.degree)));
            line(format!("  agrees: {}", or.agrees.map_or("n/a", yes_no)));
            if let Some(n) = &or.note {
                line(format!("  note: {n}"));
            }
        }
        o
    }
}
