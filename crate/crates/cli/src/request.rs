use serde::Deserialize;
use symquot::sl2::SL2Module;
use symquot::torus::WeightMatrix;

pub const DEFAULT_DEGREE: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Torus,
    Sl2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Torus(WeightMatrix),
    Sl2(SL2Module),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub payload: Payload,
    pub degree: usize,
    pub denominators: Option<Vec<usize>>,
    pub oracle: bool,
    pub seed: u64,
}

impl AnalysisRequest {
    pub fn kind(&self) -> Kind {
        match self.payload {
            Payload::Torus(_) => Kind::Torus,
            Payload::Sl2(_) => Kind::Sl2,
        }
    }
}

/// Values given on the command line take precedence over the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub degree: Option<usize>,
    pub denominators: Option<Vec<usize>>,
    pub oracle: bool,
    pub seed: Option<u64>,
}

impl Overrides {
    pub fn apply(&self, r: &mut AnalysisRequest) {
        if let Some(d) = self.degree {
            r.degree = d;
        }
        if let Some(den) = &self.denominators {
            r.denominators = Some(den.clone());
        }
        r.oracle |= self.oracle;
        if let Some(s) = self.seed {
            r.seed = s;
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRequest {
    kind: String,
    weights: Option<Vec<Vec<i64>>>,
    irreps: Option<Vec<i64>>,
    degree: Option<i64>,
    denominators: Option<Vec<i64>>,
    #[serde(default)]
    oracle: bool,
    #[serde(default)]
    seed: u64,
}

/// Malformed input, located by line (1-based) where known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError {
    pub line: Option<usize>,
    pub message: String,
}

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for SchemaError {}

fn field(name: &str, msg: impl std::fmt::Display) -> String {
    format!("field `{name}`: {msg}")
}

fn validate(raw: RawRequest) -> Result<AnalysisRequest, String> {
    let degree = match raw.degree {
        None => DEFAULT_DEGREE,
        Some(d) if d >= 0 => d as usize,
        Some(d) => return Err(field("degree", format!("{d} is negative"))),
    };
    let denominators = match raw.denominators {
        None => None,
        Some(den) => {
            if let Some(e) = den.iter().find(|&&e| e < 1) {
                return Err(field("denominators", format!("exponent {e} is not positive")));
            }
            Some(den.into_iter().map(|e| e as usize).collect())
        }
    };
    let payload = match raw.kind.as_str() {
        "torus" => {
            if raw.irreps.is_some() {
                return Err(field("irreps", "not allowed for kind \"torus\""));
            }
            let rows = raw.weights.ok_or_else(|| field("weights", "missing"))?;
            if rows.is_empty() || rows[0].is_empty() {
                return Err(field("weights", "matrix must have at least one row and one column"));
            }
            if rows.iter().any(|r| r.len() != rows[0].len()) {
                return Err(field("weights", "rows have different lengths"));
            }
            Payload::Torus(WeightMatrix::from_rows(&rows).map_err(|e| field("weights", e))?)
        }
        "sl2" => {
            if raw.weights.is_some() {
                return Err(field("weights", "not allowed for kind \"sl2\""));
            }
            let irreps = raw.irreps.ok_or_else(|| field("irreps", "missing"))?;
            Payload::Sl2(SL2Module::new(irreps).map_err(|e| field("irreps", e))?)
        }
        other => return Err(field("kind", format!("expected \"torus\" or \"sl2\", found {other:?}"))),
    };
    Ok(AnalysisRequest {
        payload,
        degree,
        denominators,
        oracle: raw.oracle,
        seed: raw.seed,
    })
}

fn parse_value(v: serde_json::Value, line: Option<usize>) -> Result<AnalysisRequest, SchemaError> {
    let err = |message| SchemaError { line, message };
    let raw: RawRequest = serde_json::from_value(v).map_err(|e| err(e.to_string()))?;
    validate(raw).map_err(err)
}

/// Parse a request file: a single JSON object, a JSON array of objects, or
/// one object per line. Blank lines and lines starting with `#` are skipped
/// in the line-oriented form.
pub fn parse_requests(text: &str) -> Result<Vec<AnalysisRequest>, SchemaError> {
    if let Ok(v) = serde_json::from_str::<serde_json::Value>(text) {
        return match v {
            serde_json::Value::Array(items) => items.into_iter().map(|x| parse_value(x, None)).collect(),
            other => Ok(vec![parse_value(other, None)?]),
        };
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| SchemaError {
            line: Some(i + 1),
            message: e.to_string(),
        })?;
        out.push(parse_value(v, Some(i + 1))?);
    }
    if out.is_empty() {
        return Err(SchemaError {
            line: None,
            message: "no requests found".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_object_and_lines() {
        let r = parse_requests(r#"{"kind":"sl2","irreps":[2,2],"degree":24}"#).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].kind(), Kind::Sl2);
        let text = "# fixtures\n{\"kind\":\"torus\",\"weights\":[[1,-1]]}\n\n{\"kind\":\"sl2\",\"irreps\":[1]}\n";
        let r = parse_requests(text).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].degree, DEFAULT_DEGREE);
    }

    #[test]
    fn schema_errors_name_line_and_field() {
        let text = "{\"kind\":\"torus\",\"weights\":[[1,-1]]}\n{\"kind\":\"torus\",\"irreps\":[1]}\n";
        let e = parse_requests(text).unwrap_err();
        assert_eq!(e.line, Some(2));
        assert!(e.message.contains("irreps"), "{e}");
        let e = parse_requests(r#"{"kind":"sl2","irreps":[1],"degree":-1}"#).unwrap_err();
        assert!(e.message.contains("degree"));
        let e = parse_requests(r#"{"kind":"cube","irreps":[1]}"#).unwrap_err();
        assert!(e.message.contains("kind"));
        let e = parse_requests(r#"{"kind":"torus","weights":[[1,2],[1]]}"#).unwrap_err();
        assert!(e.message.contains("weights"));
        assert!(parse_requests(r#"{"kind":"sl2","irreps":[1],"extra":1}"#).is_err());
        assert!(parse_requests(r#"{"kind":"sl2","irreps":[2],"denominators":[0]}"#).is_err());
    }
}
