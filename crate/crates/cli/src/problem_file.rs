//! `key = value` problem files.
//!
//! ```text
//! # Lane-Emden, n = 5
//! alpha  = 1
//! lambda = 2
//! s = 1
//! g = "u^5"
//! h = 0
//! a = 1
//! b = 0
//! N = 6
//! exact = "(1 + x^2/3)^(-0.5)"
//! ```
//!
//! Expressions are double-quoted; a bare number is accepted wherever an
//! expression is. `#` starts a comment outside quotes. LF or CRLF.

use std::path::Path;

use boubaker::expr::Expression;
use boubaker::solver::{EmdenFowlerProblem, SolveOptions, U_VARS, X_VARS};

use crate::error::{CliError, Result};

const REQUIRED: [&str; 8] = ["alpha", "lambda", "s", "g", "h", "a", "b", "N"];
const OPTIONAL: [&str; 3] = ["exact", "tol", "max_iters"];

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub problem: EmdenFowlerProblem,
    pub n: usize,
    pub options: SolveOptions,
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Number(f64),
    Quoted(String),
}

#[derive(Debug)]
struct Entry {
    line: usize,
    value: Value,
}

struct Parser<'a> {
    path: &'a Path,
}

impl Parser<'_> {
    fn err(&self, line: usize, message: impl Into<String>) -> CliError {
        CliError::ProblemFile {
            path: self.path.to_path_buf(),
            line,
            message: message.into(),
        }
    }

    fn value(&self, line: usize, raw: &str) -> Result<Value> {
        if let Some(rest) = raw.strip_prefix('"') {
            let Some(end) = rest.find('"') else {
                return Err(self.err(line, "unterminated string"));
            };
            let tail = rest[end + 1..].trim();
            if !tail.is_empty() && !tail.starts_with('#') {
                return Err(self.err(line, format!("unexpected text after closing quote: '{tail}'")));
            }
            return Ok(Value::Quoted(rest[..end].to_string()));
        }
        let raw = raw.split('#').next().unwrap_or("").trim();
        if raw.is_empty() {
            return Err(self.err(line, "missing value"));
        }
        raw.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(Value::Number)
            .ok_or_else(|| self.err(line, format!("expected a number or a quoted expression, found '{raw}'")))
    }

    fn entries(&self, text: &str) -> Result<Vec<(String, Entry)>> {
        let mut out: Vec<(String, Entry)> = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let raw_line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
            let trimmed = raw_line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((key, value)) = trimmed.split_once('=') else {
                return Err(self.err(line, "expected 'key = value'"));
            };
            let key = key.trim();
            if !REQUIRED.contains(&key) && !OPTIONAL.contains(&key) {
                return Err(self.err(line, format!("unknown key '{key}'")));
            }
            if let Some((_, first)) = out.iter().find(|(k, _)| k == key) {
                return Err(self.err(line, format!("duplicate key '{key}' (first set on line {})", first.line)));
            }
            let value = self.value(line, value.trim())?;
            out.push((key.to_string(), Entry { line, value }));
        }
        Ok(out)
    }
}

struct Fields<'a> {
    parser: &'a Parser<'a>,
    entries: Vec<(String, Entry)>,
}

impl Fields<'_> {
    fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, e)| e)
    }

    fn number(&self, key: &'static str) -> Result<Option<f64>> {
        match self.get(key) {
            None => Ok(None),
            Some(Entry { value: Value::Number(v), .. }) => Ok(Some(*v)),
            Some(Entry { line, .. }) => Err(self.parser.err(*line, format!("'{key}' must be a number"))),
        }
    }

    fn integer(&self, key: &'static str) -> Result<Option<usize>> {
        let Some(v) = self.number(key)? else {
            return Ok(None);
        };
        if v.fract() != 0.0 || v < 0.0 || v > u32::MAX as f64 {
            let line = self.get(key).map_or(0, |e| e.line);
            return Err(self.parser.err(line, format!("'{key}' must be a non-negative integer, got {v}")));
        }
        Ok(Some(v as usize))
    }

    /// Source text of an expression-valued key, checked against `vars`.
    fn expression(&self, key: &'static str, vars: &[&str]) -> Result<Option<String>> {
        let Some(entry) = self.get(key) else {
            return Ok(None);
        };
        let src = match &entry.value {
            Value::Number(v) => format!("{v}"),
            Value::Quoted(s) => s.clone(),
        };
        Expression::parse(&src, vars).map_err(|e| self.parser.err(entry.line, format!("in '{key}': {e}")))?;
        Ok(Some(src))
    }
}

pub fn parse(path: &Path, text: &str) -> Result<ProblemFile> {
    let parser = Parser { path };
    let fields = Fields {
        parser: &parser,
        entries: parser.entries(text)?,
    };
    for key in REQUIRED {
        if fields.get(key).is_none() {
            return Err(CliError::MissingKey {
                path: path.to_path_buf(),
                key,
            });
        }
    }
    let required = |v: Option<f64>| v.expect("presence checked above");
    let alpha = required(fields.number("alpha")?);
    let lambda = required(fields.number("lambda")?);
    let mut builder = EmdenFowlerProblem::builder(alpha, lambda)
        .s(&fields.expression("s", &X_VARS)?.unwrap_or_default())
        .g(&fields.expression("g", &U_VARS)?.unwrap_or_default())
        .h(&fields.expression("h", &X_VARS)?.unwrap_or_default())
        .initial_values(required(fields.number("a")?), required(fields.number("b")?));
    if let Some(exact) = fields.expression("exact", &X_VARS)? {
        builder = builder.exact(&exact);
    }
    let problem = builder.build().map_err(|e| {
        let key = match e {
            boubaker::solver::SolveError::Alpha(_) => "alpha",
            boubaker::solver::SolveError::Lambda(_) => "lambda",
            _ => "a",
        };
        parser.err(fields.get(key).map_or(0, |e| e.line), e.to_string())
    })?;

    let n = fields.integer("N")?.expect("presence checked above");
    if n < 2 {
        let line = fields.get("N").map_or(0, |e| e.line);
        return Err(parser.err(line, format!("N must be at least 2, got {n}")));
    }
    let mut options = SolveOptions::default();
    if let Some(tol) = fields.number("tol")? {
        if !(tol > 0.0) {
            let line = fields.get("tol").map_or(0, |e| e.line);
            return Err(parser.err(line, format!("tol must be positive, got {tol}")));
        }
        options.tol = tol;
    }
    if let Some(iters) = fields.integer("max_iters")? {
        options.max_iters = iters;
    }
    Ok(ProblemFile { problem, n, options })
}

pub fn read(path: &Path) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse(path, &text)
}
