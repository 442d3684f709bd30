//! Rendering of computation results: the human-readable listing and the
//! machine-readable JSON document.
//!
//! JSON schema (`format: 1`):
//!
//! ```json
//! {
//!   "format": 1,
//!   "mode": "degree-bound 10 multigraded",
//!   "vars": ["x", "y", "z"],
//!   "orbit_size": 7,
//!   "max_word_length": 3,
//!   "heuristic": true,
//!   "series": {
//!     "kind": "rational",
//!     "numerator": [["1", 0, 0, 0], ["1", 0, 1, 1], ...],
//!     "denominator": [["1", 0, 0, 0], ...]
//!   },
//!   "schur": [{"partition": [2, 1], "mult": "1"}, ...],
//!   "oracle": [{"degree": [0, 0, 0], "count": 1}, ...]
//! }
//! ```
//!
//! Terms are `[coefficient, e1, ..., en]` in ascending graded-lex order,
//! with coefficients as decimal strings so consumers never face integer
//! width questions. `denominator` is absent for polynomial series, `schur`
//! and `oracle` are present only when requested.

use std::str::FromStr;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::polyring::{MPoly, Mono, RatFun};
use crate::series::{ComputationRequest, ComputationResult, Grading, Mode, SeriesOutput};

pub fn mode_string(req: &ComputationRequest) -> String {
    let mut parts: Vec<String> = Vec::new();
    parts.push(match req.mode {
        Mode::Exact => "exact".to_string(),
        Mode::Truncate(d) => format!("truncate {d}"),
        Mode::DegreeBound(d) => format!("degree-bound {d}"),
    });
    parts.push(
        match req.grading {
            Grading::Graded => "graded",
            Grading::Multigraded => "multigraded",
        }
        .to_string(),
    );
    if req.affine {
        parts.push("affine".to_string());
    }
    parts.join(" ")
}

/// The human-readable listing; identical invocations produce byte-identical
/// output.
pub fn render_text(req: &ComputationRequest, res: &ComputationResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("mode: {}\n", mode_string(req)));
    out.push_str(&format!("vars: {}\n", req.alphabet.names().join(" ")));
    out.push_str(&format!("orbit size: {}\n", res.orbit_size));
    out.push_str(&format!("max word length: {}\n", res.max_word_length));
    if res.heuristic {
        out.push_str("HEURISTIC\n");
    }
    match &res.series {
        SeriesOutput::Polynomial(p) => {
            out.push_str("series: polynomial\n");
            out.push_str(&format!("P: {p}\n"));
        }
        SeriesOutput::Rational(r) => {
            out.push_str("series: rational\n");
            out.push_str(&format!("N: {}\n", r.num()));
            out.push_str(&format!("D: {}\n", r.den()));
        }
    }
    if let Some(schur) = &res.schur {
        out.push_str("schur:\n");
        for (partition, mult) in schur.sorted_entries() {
            let parts: Vec<String> = partition.iter().map(u32::to_string).collect();
            out.push_str(&format!("  [{}] {}\n", parts.join(","), mult));
        }
    }
    if let Some(oracle) = &res.oracle {
        out.push_str("oracle:\n");
        let mut rows: Vec<_> = oracle.iter().collect();
        rows.sort_by_key(|(md, _)| (md.iter().sum::<u32>(), (*md).clone()));
        for (md, count) in rows {
            let parts: Vec<String> = md.iter().map(u32::to_string).collect();
            out.push_str(&format!("  [{}] {}\n", parts.join(","), count));
        }
    }
    out
}

fn poly_terms_json(p: &MPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(mono, coeff)| {
            let mut arr = vec![Value::String(coeff.to_string())];
            arr.extend(mono.0.iter().map(|&e| json!(e)));
            Value::Array(arr)
        })
        .collect();
    Value::Array(terms)
}

pub fn render_json(req: &ComputationRequest, res: &ComputationResult) -> String {
    let mut series = Map::new();
    match &res.series {
        SeriesOutput::Polynomial(p) => {
            series.insert("kind".into(), json!("polynomial"));
            series.insert("numerator".into(), poly_terms_json(p));
        }
        SeriesOutput::Rational(r) => {
            series.insert("kind".into(), json!("rational"));
            series.insert("numerator".into(), poly_terms_json(r.num()));
            series.insert("denominator".into(), poly_terms_json(r.den()));
        }
    }
    let mut root = Map::new();
    root.insert("format".into(), json!(1));
    root.insert("mode".into(), json!(mode_string(req)));
    root.insert(
        "vars".into(),
        Value::Array(req.alphabet.names().iter().map(|n| json!(n)).collect()),
    );
    root.insert("orbit_size".into(), json!(res.orbit_size));
    root.insert("max_word_length".into(), json!(res.max_word_length));
    root.insert("heuristic".into(), json!(res.heuristic));
    root.insert("series".into(), Value::Object(series));
    if let Some(schur) = &res.schur {
        let rows: Vec<Value> = schur
            .sorted_entries()
            .into_iter()
            .map(|(partition, mult)| {
                json!({
                    "partition": partition,
                    "mult": mult.to_string(),
                })
            })
            .collect();
        root.insert("schur".into(), Value::Array(rows));
    }
    if let Some(oracle) = &res.oracle {
        let mut rows: Vec<_> = oracle.iter().collect();
        rows.sort_by_key(|(md, _)| (md.iter().sum::<u32>(), (*md).clone()));
        let rows: Vec<Value> = rows
            .into_iter()
            .map(|(md, count)| json!({ "degree": md, "count": count }))
            .collect();
        root.insert("oracle".into(), Value::Array(rows));
    }
    serde_json::to_string(&Value::Object(root)).expect("report serializes")
}

/// Rebuild a polynomial from the JSON term list (the round-trip direction).
pub fn poly_from_json(terms: &Value, nvars: usize) -> Option<MPoly> {
    let mut out = MPoly::zero(nvars);
    for term in terms.as_array()? {
        let arr = term.as_array()?;
        let coeff = BigRational::from_str(arr.first()?.as_str()?).ok()?;
        let exps: Option<Vec<u32>> = arr[1..]
            .iter()
            .map(|v| v.as_u64().map(|x| x as u32))
            .collect();
        let exps = exps?;
        if exps.len() != nvars {
            return None;
        }
        out.add_term(Mono(exps), coeff);
    }
    Some(out)
}

/// Rebuild the series of a JSON report produced by [`render_json`].
pub fn series_from_json(doc: &Value, nvars: usize) -> Option<SeriesOutput> {
    let series = doc.get("series")?;
    let num = poly_from_json(series.get("numerator")?, nvars)?;
    match series.get("kind")?.as_str()? {
        "polynomial" => Some(SeriesOutput::Polynomial(num)),
        "rational" => {
            let den = poly_from_json(series.get("denominator")?, nvars)?;
            Some(SeriesOutput::Rational(RatFun::new(num, den).ok()?))
        }
        _ => None,
    }
}
