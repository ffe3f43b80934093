//! Regenerates the published tables and compares them cell by cell.

pub mod problems;
pub mod published;
mod targets;

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use boubaker::projection::ProjectionScheme;
use boubaker::solver::SolveOptions;

use crate::error::{CliError, Result};
use crate::output::{create_dir, csv_string, sci, write_file};

pub use targets::{Fig3Data, Table1, Table2, Table3, Unknowns};

/// Shared inputs for every target.
#[derive(Clone)]
pub struct Context {
    pub scheme: Arc<dyn ProjectionScheme>,
    pub options: SolveOptions,
}

/// Agreement rule for one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rule {
    /// `computed <= bound`
    AtMost(f64),
    /// `|computed - published| <= tol`
    Within(f64),
    /// `published / k <= computed <= published * k`
    Factor(f64),
    /// `computed <= published * k`
    NoWorseThan(f64),
}

impl Rule {
    fn describe(self) -> String {
        match self {
            Rule::AtMost(b) => format!("<= {b:e}"),
            Rule::Within(t) => format!("within {t:e}"),
            Rule::Factor(k) => format!("factor {k}"),
            Rule::NoWorseThan(k) => format!("<= {k} x published"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub row: String,
    pub column: String,
    pub computed: f64,
    pub published: Option<f64>,
    pub rule: Rule,
}

impl Cell {
    pub fn agrees(&self) -> bool {
        let c = self.computed;
        match (self.rule, self.published) {
            (Rule::AtMost(b), _) => c <= b,
            (Rule::Within(t), Some(p)) => (c - p).abs() <= t,
            (Rule::Factor(k), Some(p)) => c >= p / k && c <= p * k,
            (Rule::NoWorseThan(k), Some(p)) => c <= p * k,
            (_, None) => false,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub target: &'static str,
    /// `(file name, contents)`
    pub files: Vec<(String, String)>,
    pub cells: Vec<Cell>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn agreeing(&self) -> usize {
        self.cells.iter().filter(|c| c.agrees()).count()
    }

    pub fn comparison_csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|c| {
                vec![
                    c.row.clone(),
                    c.column.clone(),
                    sci(c.computed),
                    c.published.map(sci).unwrap_or_default(),
                    if c.published.is_some() { published::PROVENANCE.to_string() } else { String::new() },
                    c.rule.describe(),
                    if c.agrees() { "agree" } else { "disagree" }.to_string(),
                ]
            })
            .collect();
        csv_string(
            &["row", "column", "computed", "published", "provenance", "rule", "verdict"],
            &rows,
        )
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: {}/{} cells agree\n",
            self.target,
            self.agreeing(),
            self.cells.len()
        );
        for c in self.cells.iter().filter(|c| !c.agrees()) {
            let published = c.published.map(|p| format!("{p:e}")).unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "  disagree {} / {}: computed {:e}, published {published}, rule {}",
                c.row,
                c.column,
                c.computed,
                c.rule.describe()
            )
            .unwrap();
        }
        for n in &self.notes {
            writeln!(out, "  note: {n}").unwrap();
        }
        out
    }
}

pub trait ReproductionTarget: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, ctx: &Context) -> Result<Outcome>;
}

/// Targets in registration order; `all` runs them in that order.
pub struct TargetRegistry {
    targets: Vec<Box<dyn ReproductionTarget>>,
}

impl TargetRegistry {
    pub fn new() -> Self {
        Self { targets: Vec::new() }
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::new();
        r.register(Box::new(Table1));
        r.register(Box::new(Table2));
        r.register(Box::new(Unknowns));
        r.register(Box::new(Table3));
        r.register(Box::new(Fig3Data));
        r
    }

    /// Replaces any target with the same name.
    pub fn register(&mut self, target: Box<dyn ReproductionTarget>) {
        self.targets.retain(|t| t.name() != target.name());
        self.targets.push(target);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.targets.iter().map(|t| t.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn ReproductionTarget> {
        self.targets.iter().find(|t| t.name() == name).map(|t| t.as_ref())
    }

    /// `name` or `all`.
    pub fn select(&self, name: &str) -> Result<Vec<&dyn ReproductionTarget>> {
        if name == "all" {
            return Ok(self.targets.iter().map(|t| t.as_ref()).collect());
        }
        self.get(name).map(|t| vec![t]).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown target '{name}' (available: {}, all)",
                self.names().join(", ")
            ))
        })
    }
}

impl Default for TargetRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

/// Runs the selected targets and writes `<file>` plus
/// `<target>_comparison.csv` for each into `out_dir`.
pub fn reproduce(registry: &TargetRegistry, name: &str, ctx: &Context, out_dir: &Path) -> Result<Vec<Outcome>> {
    let selected = registry.select(name)?;
    create_dir(out_dir)?;
    // Targets share nothing mutable; run them side by side, write in order.
    let results: Vec<Result<Outcome>> = std::thread::scope(|s| {
        let handles: Vec<_> = selected.iter().map(|t| s.spawn(move || t.run(ctx))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("reproduction target panicked"))
            .collect()
    });
    let mut outcomes = Vec::with_capacity(results.len());
    for outcome in results {
        let outcome = outcome?;
        for (file, contents) in &outcome.files {
            write_file(&out_dir.join(file), contents)?;
        }
        if !outcome.cells.is_empty() {
            let path = out_dir.join(format!("{}_comparison.csv", outcome.target.replace('-', "_")));
            write_file(&path, &outcome.comparison_csv()?)?;
        }
        outcomes.push(outcome);
    }
    Ok(outcomes)
}
