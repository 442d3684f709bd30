//! Command-line front end.
//!
//! ```text
//! nchilbert [FLAGS] <input-file>
//! ```
//!
//! Flags: `--multigraded`, `--truncate <d>`, `--degree-bound <D>`,
//! `--affine`, `--schur`, `--oracle <d>`, `--json`, `--max-orbit <N>`.
//! `-` reads the input from stdin.
//!
//! Exit codes: 0 success, 2 parse error, 3 orbit limit exceeded, 4 degree
//! or enumeration budget exhausted, 5 invalid flag combination.

use std::io::{Read, Write};

use crate::input::parse_input;
use crate::report::{render_json, render_text};
use crate::series::{
    hilbert_series, normal_words_oracle, ComputationRequest, ComputeError, Grading, Mode,
    DEFAULT_MAX_ORBIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_ORBIT_LIMIT: i32 = 3;
pub const EXIT_DEGREE_BUDGET: i32 = 4;
pub const EXIT_INVALID_FLAGS: i32 = 5;

const USAGE: &str = "\
usage: nchilbert [FLAGS] <input-file>

Compute the Hilbert series of the monomial algebra (or right module)
presented by the input file; `-` reads from stdin.

flags:
  --multigraded       multivariate series in t1..tn (default: single t)
  --truncate <d>      series of the truncation at total degree d
  --degree-bound <D>  guess mode: generators are complete up to degree D
  --affine            affine (growth) series; graded output only
  --schur             Schur decomposition of a multigraded polynomial series
  --oracle <d>        also enumerate normal words up to degree d
  --json              machine-readable output (format 1)
  --max-orbit <N>     abort if the orbit exceeds N elements (default 10000)
  --help              this text

input format:
  vars x y z          variable declaration (first line)
  kind twosided       or `right`; default twosided
  x*x*y               one *-separated generator per line; `1` is the
                      empty word; `#` starts a comment
";

struct Flags {
    multigraded: bool,
    truncate: Option<u32>,
    degree_bound: Option<u32>,
    affine: bool,
    schur: bool,
    oracle: Option<u32>,
    json: bool,
    max_orbit: usize,
    input: Option<String>,
    help: bool,
}

fn parse_flags(args: &[String]) -> Result<Flags, String> {
    let mut flags = Flags {
        multigraded: false,
        truncate: None,
        degree_bound: None,
        affine: false,
        schur: false,
        oracle: None,
        json: false,
        max_orbit: DEFAULT_MAX_ORBIT,
        input: None,
        help: false,
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut numeric = |name: &str| -> Result<u64, String> {
            it.next()
                .ok_or_else(|| format!("{name} needs a value"))?
                .parse::<u64>()
                .map_err(|_| format!("{name} needs a nonnegative integer"))
        };
        match arg.as_str() {
            "--multigraded" => flags.multigraded = true,
            "--affine" => flags.affine = true,
            "--schur" => flags.schur = true,
            "--json" => flags.json = true,
            "--help" | "-h" => flags.help = true,
            "--truncate" => flags.truncate = Some(numeric("--truncate")? as u32),
            "--degree-bound" => flags.degree_bound = Some(numeric("--degree-bound")? as u32),
            "--oracle" => flags.oracle = Some(numeric("--oracle")? as u32),
            "--max-orbit" => {
                let v = numeric("--max-orbit")?;
                flags.max_orbit = usize::try_from(v).map_err(|_| "--max-orbit too large")?;
            }
            other if other.starts_with('-') && other != "-" => {
                return Err(format!("unknown flag `{other}`"));
            }
            _ => {
                if flags.input.is_some() {
                    return Err("more than one input file".into());
                }
                flags.input = Some(arg.clone());
            }
        }
    }
    Ok(flags)
}

fn exit_code_for(e: &ComputeError) -> i32 {
    match e {
        ComputeError::OrbitLimitExceeded { .. } => EXIT_ORBIT_LIMIT,
        ComputeError::DegreeBudgetExhausted => EXIT_DEGREE_BUDGET,
        ComputeError::EnumerationBudgetExceeded { .. } => EXIT_DEGREE_BUDGET,
        ComputeError::InvalidRequest(_) => EXIT_INVALID_FLAGS,
    }
}

/// Run the CLI against `args` (without the program name), writing to the
/// given streams; returns the exit code.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> i32 {
    let flags = match parse_flags(args) {
        Ok(f) => f,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INVALID_FLAGS;
        }
    };
    if flags.help {
        let _ = out.write_all(USAGE.as_bytes());
        return EXIT_OK;
    }
    if flags.truncate.is_some() && flags.degree_bound.is_some() {
        let _ = writeln!(
            err,
            "error: --truncate and --degree-bound are mutually exclusive"
        );
        return EXIT_INVALID_FLAGS;
    }
    if flags.oracle.is_some() && flags.degree_bound.is_some() {
        let _ = writeln!(err, "error: the oracle needs a fully known generator list");
        return EXIT_INVALID_FLAGS;
    }

    let path = match &flags.input {
        Some(p) => p.clone(),
        None => {
            let _ = writeln!(err, "error: no input file (see --help)");
            return EXIT_INVALID_FLAGS;
        }
    };
    let text = if path == "-" {
        let mut buf = String::new();
        match std::io::stdin().read_to_string(&mut buf) {
            Ok(_) => buf,
            Err(e) => {
                let _ = writeln!(err, "error: reading stdin: {e}");
                return EXIT_PARSE;
            }
        }
    } else {
        match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(err, "error: reading {path}: {e}");
                return EXIT_PARSE;
            }
        }
    };

    let parsed = match parse_input(&text) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {path}: {e}");
            return EXIT_PARSE;
        }
    };

    let mut req = ComputationRequest::new(parsed.alphabet, parsed.generators, parsed.kind);
    req.grading = if flags.multigraded {
        Grading::Multigraded
    } else {
        Grading::Graded
    };
    req.mode = match (flags.truncate, flags.degree_bound) {
        (Some(d), None) => Mode::Truncate(d),
        (None, Some(d)) => Mode::DegreeBound(d),
        (None, None) => Mode::Exact,
        (Some(_), Some(_)) => unreachable!("rejected above"),
    };
    req.affine = flags.affine;
    req.schur = flags.schur;
    req.max_orbit = flags.max_orbit;

    let mut result = match hilbert_series(&req) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };

    if let Some(d) = flags.oracle {
        let mut oracle_req = req.clone();
        oracle_req.mode = Mode::Truncate(d);
        match normal_words_oracle(&oracle_req) {
            Ok(table) => result.oracle = Some(table),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return exit_code_for(&e);
            }
        }
    }

    let rendered = if flags.json {
        let mut s = render_json(&req, &result);
        s.push('\n');
        s
    } else {
        render_text(&req, &result)
    };
    let _ = out.write_all(rendered.as_bytes());
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn write_temp(name: &str, content: &str) -> String {
        let path =
            std::env::temp_dir().join(format!("nchilbert-test-{name}-{}", std::process::id()));
        std::fs::write(&path, content).unwrap();
        path.to_string_lossy().into_owned()
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("usage"));
    }

    #[test]
    fn invalid_flag_combinations_exit_5() {
        let path = write_temp("combo", &crate::fixtures::fibonacci_input_text());
        let (code, _, err) = run_args(&["--affine", "--multigraded", &path]);
        assert_eq!(code, EXIT_INVALID_FLAGS);
        assert!(!err.is_empty());
        let (code, _, _) = run_args(&["--truncate", "3", "--degree-bound", "5", &path]);
        assert_eq!(code, EXIT_INVALID_FLAGS);
        let (code, _, _) = run_args(&["--bogus", &path]);
        assert_eq!(code, EXIT_INVALID_FLAGS);
        let (code, _, _) = run_args(&["--schur", &path]);
        assert_eq!(code, EXIT_INVALID_FLAGS);
        let (code, _, _) = run_args(&["--oracle", "4", "--degree-bound", "3", &path]);
        assert_eq!(code, EXIT_INVALID_FLAGS);
    }

    #[test]
    fn parse_errors_exit_2() {
        let path = write_temp("bad", "vars x y\nz*x\n");
        let (code, _, err) = run_args(&[&path]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("unknown variable"));
        let (code, _, _) = run_args(&["/nonexistent/nchilbert-input"]);
        assert_eq!(code, EXIT_PARSE);
    }

    #[test]
    fn orbit_limit_exits_3() {
        let path = write_temp("limit", &crate::fixtures::grassmann_input_text(10));
        let (code, _, err) = run_args(&["--max-orbit", "3", &path]);
        assert_eq!(code, EXIT_ORBIT_LIMIT);
        assert!(err.contains("orbit"));
    }

    #[test]
    fn budget_errors_exit_4() {
        // the enumeration oracle refuses degree bounds past its word cap
        let path = write_temp("budget", &crate::fixtures::fibonacci_input_text());
        let (code, _, err) = run_args(&["--oracle", "60", &path]);
        assert_eq!(code, EXIT_DEGREE_BUDGET);
        assert!(err.contains("cap"));
    }

    #[test]
    fn fibonacci_text_output() {
        let path = write_temp("fib", &crate::fixtures::fibonacci_input_text());
        let (code, out, _) = run_args(&[&path]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("series: rational"));
        assert!(out.contains("N: 1 + t\n"));
        assert!(out.contains("D: 1 - t - t^2\n"));
    }

    #[test]
    fn grassmann_json_output() {
        let path = write_temp("grass", &crate::fixtures::grassmann_input_text(10));
        let (code, out, _) = run_args(&["--multigraded", "--degree-bound", "10", "--json", &path]);
        assert_eq!(code, EXIT_OK);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["orbit_size"], serde_json::json!(7));
        assert_eq!(doc["heuristic"], serde_json::json!(true));
        assert_eq!(doc["series"]["kind"], serde_json::json!("rational"));
    }

    #[test]
    fn oracle_flag_adds_table() {
        let path = write_temp("oracle", &crate::fixtures::fibonacci_input_text());
        let (code, out, _) = run_args(&["--oracle", "4", &path]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("oracle:\n"));
        assert!(out.contains("  [0,0] 1\n"));
    }

    #[test]
    fn output_is_deterministic() {
        let path = write_temp("det", &crate::fixtures::grassmann_input_text(10));
        let args = [
            "--multigraded",
            "--truncate",
            "8",
            "--schur",
            "--json",
            &path,
        ];
        let (c1, o1, _) = run_args(&args);
        let (c2, o2, _) = run_args(&args);
        assert_eq!(c1, EXIT_OK);
        assert_eq!(c1, c2);
        assert_eq!(o1, o2);
    }
}
