//! The text input format: a `vars` header, an optional `kind` directive,
//! and one `*`-separated generator per line.
//!
//! ```text
//! # comment
//! vars x y z
//! kind twosided
//! x*x*y
//! y*z*y*x*y
//! ```
//!
//! `kind` is `twosided` (default) or `right`; `#` starts a comment; blank
//! lines are ignored; the literal `1` denotes the empty word (making the
//! ideal the unit ideal). Parsing either succeeds completely or fails with
//! a line/column diagnostic.

use std::fmt;

use crate::series::IdealKind;
use crate::words::{Alphabet, Var, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct InputFile {
    pub alphabet: Alphabet,
    pub generators: Vec<Word>,
    pub kind: IdealKind,
}

const RESERVED: [&str; 3] = ["vars", "kind", "1"];

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn column_of(line: &str, byte_offset: usize) -> usize {
    line[..byte_offset].chars().count() + 1
}

pub fn parse_input(text: &str) -> Result<InputFile, ParseError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut kind: Option<IdealKind> = None;
    let mut generators: Vec<Word> = Vec::new();
    let mut line_count = 0;

    for (idx, raw_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        line_count = lineno;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let first_token = line.split_whitespace().next().unwrap();

        if first_token == "vars" {
            if alphabet.is_some() {
                return Err(err(lineno, 1, "duplicate `vars` line"));
            }
            let mut names = Vec::new();
            let body_start = line.find("vars").unwrap() + 4;
            let mut offset = body_start;
            for token in line[body_start..].split_whitespace() {
                let pos = line[offset..].find(token).unwrap() + offset;
                offset = pos + token.len();
                if RESERVED.contains(&token) {
                    return Err(err(
                        lineno,
                        column_of(line, pos),
                        format!("`{token}` is reserved and cannot name a variable"),
                    ));
                }
                names.push(token.to_string());
            }
            if names.is_empty() {
                return Err(err(lineno, 1, "`vars` must declare at least one variable"));
            }
            alphabet = Some(Alphabet::new(names).map_err(|e| err(lineno, 1, e.to_string()))?);
            continue;
        }

        let alphabet = match &alphabet {
            Some(a) => a,
            None => return Err(err(lineno, 1, "expected a `vars` line before this one")),
        };

        if first_token == "kind" {
            if kind.is_some() {
                return Err(err(lineno, 1, "duplicate `kind` line"));
            }
            let rest: Vec<&str> = line.split_whitespace().skip(1).collect();
            match rest.as_slice() {
                ["twosided"] => kind = Some(IdealKind::TwoSided),
                ["right"] => kind = Some(IdealKind::Right),
                _ => {
                    return Err(err(lineno, 1, "`kind` must be `twosided` or `right`"));
                }
            }
            continue;
        }

        // generator line: name (* name)* or the literal 1
        let trimmed = line.trim();
        let start = line.len() - line.trim_start().len();
        if trimmed == "1" {
            generators.push(Word::empty());
            continue;
        }
        let mut letters: Vec<Var> = Vec::new();
        let mut search_from = start;
        for piece in trimmed.split('*') {
            let name = piece.trim();
            if name.is_empty() {
                return Err(err(
                    lineno,
                    column_of(line, search_from),
                    "empty factor in generator",
                ));
            }
            let pos = line[search_from..].find(name).unwrap() + search_from;
            search_from = pos + name.len();
            match alphabet.index_of(name) {
                Some(i) => letters.push(i),
                None => {
                    return Err(err(
                        lineno,
                        column_of(line, pos),
                        format!("unknown variable `{name}`"),
                    ))
                }
            }
        }
        generators.push(Word::from_letters(letters));
    }

    let alphabet = alphabet.ok_or_else(|| err(line_count.max(1), 1, "missing `vars` line"))?;
    if generators.is_empty() {
        return Err(err(line_count.max(1), 1, "empty generator list"));
    }
    Ok(InputFile {
        alphabet,
        generators,
        kind: kind.unwrap_or(IdealKind::TwoSided),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_input("vars x y\nx*x\n").unwrap();
        assert_eq!(f.alphabet.n(), 2);
        assert_eq!(f.kind, IdealKind::TwoSided);
        assert_eq!(f.generators, vec![Word::from_letters(vec![0, 0])]);
    }

    #[test]
    fn grassmann_fixture_parses() {
        let f = parse_input(&crate::fixtures::grassmann_input_text(10)).unwrap();
        assert_eq!(f.alphabet.n(), 3);
        assert_eq!(f.generators.len(), 27);
        assert_eq!(f.generators, crate::fixtures::grassmann_generators(10));
    }

    #[test]
    fn unknown_variable_is_located() {
        let e = parse_input("vars x y z\nz*w\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("`w`"), "{}", e.message);
        assert_eq!(e.column, 3);
    }

    #[test]
    fn directives_and_comments() {
        let f = parse_input("# leading comment\n\nvars a b # trailing\nkind right\na*b # gen\n")
            .unwrap();
        assert_eq!(f.kind, IdealKind::Right);
        assert_eq!(f.generators, vec![Word::from_letters(vec![0, 1])]);
    }

    #[test]
    fn unit_generator_literal() {
        let f = parse_input("vars x y\n1\nx*y\n").unwrap();
        assert_eq!(f.generators[0], Word::empty());
    }

    #[test]
    fn error_cases() {
        assert!(parse_input("").is_err()); // missing vars
        assert!(parse_input("vars x\n").is_err()); // no generators
        assert!(parse_input("x*x\nvars x\n").is_err()); // generator before vars
        assert!(parse_input("vars x\nvars y\nx\n").is_err()); // duplicate vars
        assert!(parse_input("vars x x\nx\n").is_err()); // duplicate name
        assert!(parse_input("vars x\nkind weird\nx\n").is_err());
        assert!(parse_input("vars x\nkind right\nkind right\nx\n").is_err());
        assert!(parse_input("vars x 1\nx\n").is_err()); // reserved name
        assert!(parse_input("vars x\nx**x\n").is_err()); // empty factor
    }
}
