//! Browser bindings for the Hilbert series engine: a thin wasm-bindgen
//! layer over `nchilbert` plus a static demo page in `www/`.
//!
//! Three operations are exposed: `compute` (full report as JSON),
//! `growth` (graded dimensions up to a degree, for plotting), and
//! `oracle_growth` (the same numbers by brute-force enumeration, so the
//! page can diff the two). Inputs use the same text format as the CLI.

use wasm_bindgen::prelude::*;

use nchilbert::input::parse_input;
use nchilbert::report::render_json;
use nchilbert::series::{
    graded_totals, hilbert_series, normal_words_oracle, ComputationRequest, Grading, Mode,
    SeriesOutput,
};

fn build_request(
    input: &str,
    multigraded: bool,
    mode: &str,
    degree: u32,
    affine: bool,
    schur: bool,
    max_orbit: u32,
) -> Result<ComputationRequest, String> {
    let parsed = parse_input(input).map_err(|e| e.to_string())?;
    let mut req = ComputationRequest::new(parsed.alphabet, parsed.generators, parsed.kind);
    req.grading = if multigraded {
        Grading::Multigraded
    } else {
        Grading::Graded
    };
    req.mode = match mode {
        "exact" => Mode::Exact,
        "truncate" => Mode::Truncate(degree),
        "degree-bound" => Mode::DegreeBound(degree),
        other => return Err(format!("unknown mode `{other}`")),
    };
    req.affine = affine;
    req.schur = schur;
    req.max_orbit = max_orbit as usize;
    Ok(req)
}

pub fn compute_json(
    input: &str,
    multigraded: bool,
    mode: &str,
    degree: u32,
    affine: bool,
    schur: bool,
    max_orbit: u32,
) -> Result<String, String> {
    let req = build_request(input, multigraded, mode, degree, affine, schur, max_orbit)?;
    let res = hilbert_series(&req).map_err(|e| e.to_string())?;
    Ok(render_json(&req, &res))
}

pub fn growth_json(input: &str, degree: u32, max_orbit: u32) -> Result<String, String> {
    let req = build_request(input, false, "truncate", degree, false, false, max_orbit)?;
    let res = hilbert_series(&req).map_err(|e| e.to_string())?;
    let poly = match res.series {
        SeriesOutput::Polynomial(p) => p,
        SeriesOutput::Rational(_) => unreachable!("truncated series are polynomials"),
    };
    let dims: Vec<String> = (0..=degree)
        .map(|d| poly.coeff(&nchilbert::polyring::Mono(vec![d])).to_string())
        .collect();
    serde_json::to_string(&dims).map_err(|e| e.to_string())
}

pub fn oracle_growth_json(input: &str, degree: u32) -> Result<String, String> {
    let req = build_request(input, false, "truncate", degree, false, false, 1)?;
    let table = normal_words_oracle(&req).map_err(|e| e.to_string())?;
    let totals = graded_totals(&table);
    let dims: Vec<String> = (0..=degree)
        .map(|d| totals.get(&d).copied().unwrap_or(0).to_string())
        .collect();
    serde_json::to_string(&dims).map_err(|e| e.to_string())
}

pub fn preset_text(name: &str) -> String {
    match name {
        "grassmann" => nchilbert::fixtures::grassmann_input_text(10),
        "fibonacci" => nchilbert::fixtures::fibonacci_input_text(),
        "right-module" => {
            "# cyclic right module F/<xy, yyx>\nvars x y\nkind right\nx*y\ny*y*x\n".to_string()
        }
        "commutator" => {
            "# words without xy or yx factors: two one-letter runs survive\nvars x y\nx*y\ny*x\n"
                .to_string()
        }
        _ => nchilbert::fixtures::fibonacci_input_text(),
    }
}

#[wasm_bindgen]
pub fn compute(
    input: &str,
    multigraded: bool,
    mode: &str,
    degree: u32,
    affine: bool,
    schur: bool,
    max_orbit: u32,
) -> Result<String, JsValue> {
    compute_json(input, multigraded, mode, degree, affine, schur, max_orbit)
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn growth(input: &str, degree: u32, max_orbit: u32) -> Result<String, JsValue> {
    growth_json(input, degree, max_orbit).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn oracle_growth(input: &str, degree: u32) -> Result<String, JsValue> {
    oracle_growth_json(input, degree).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn preset(name: &str) -> String {
    preset_text(name)
}
