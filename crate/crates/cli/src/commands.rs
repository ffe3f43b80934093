use std::fmt::Write as _;
use std::path::Path;

use boubaker::approx::QuadratureRule;
use boubaker::fraccalc::operational::build_d_with;
use boubaker::fraccalc::{build_e, caputo_polynomial, ceil_order, check_order};
use boubaker::linalg::{condition_estimate, gram};
use boubaker::projection::ProjectionScheme;
use boubaker::solver::{solve_with, SolveReport};
use boubaker::BoubakerBasis;

use crate::error::{CliError, Result};
use crate::output::{create_dir, csv_string, sci, write_file};
use crate::problem_file::{self, ProblemFile};

/// Largest `N` printed without `--force`.
pub const MAX_SAFE_DEGREE: usize = 15;

fn basis(n: usize) -> Result<BoubakerBasis> {
    BoubakerBasis::new(n).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn basis_report(n: usize, force: bool) -> Result<String> {
    if n > MAX_SAFE_DEGREE && !force {
        return Err(CliError::Usage(format!(
            "N = {n} exceeds {MAX_SAFE_DEGREE}: the Gram matrix condition number is beyond 1e29 \
             and double precision results are unreliable (use --force to print anyway)"
        )));
    }
    let basis = basis(n)?;
    let mut out = String::new();
    writeln!(out, "N = {n}").unwrap();
    writeln!(out, "M =").unwrap();
    let width = basis
        .m_exact()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in basis.m_exact() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(out, "  [{}]", cells.join(" ")).unwrap();
    }
    for (k, p) in basis.polys().iter().enumerate() {
        writeln!(out, "B_{k} = {p}").unwrap();
    }
    writeln!(out, "cond_1(Q) = {:.3e}", condition_estimate(&gram(&basis))).unwrap();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Text,
    Csv,
}

fn check_alpha(alpha: f64) -> Result<()> {
    check_order(alpha).map_err(|e| CliError::Usage(e.to_string()))
}

fn check_degree(alpha: f64, n: usize) -> Result<()> {
    if n < ceil_order(alpha) {
        return Err(CliError::Usage(format!(
            "order {alpha} needs N >= {}, got {n}",
            ceil_order(alpha)
        )));
    }
    Ok(())
}

pub fn opmatrix_report(
    alpha: f64,
    n: usize,
    format: MatrixFormat,
    scheme: &dyn ProjectionScheme,
) -> Result<String> {
    check_alpha(alpha)?;
    let basis = basis(n)?;
    check_degree(alpha, n)?;
    let d = build_d_with(alpha, &basis, scheme).map_err(|e| CliError::Numerical(e.to_string()))?;
    match format {
        MatrixFormat::Text => {
            let mut out = format!("D^({alpha}), N = {n}, projection = {}\n", scheme.name());
            for row in d.rows() {
                let cells: Vec<String> = row.iter().map(|v| format!("{:>14.8}", clean(*v))).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
            Ok(out)
        }
        MatrixFormat::Csv => {
            let mut header = vec!["row".to_string()];
            header.extend((0..=n).map(|j| format!("c{j}")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<String>> = d
                .rows()
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    std::iter::once(i.to_string())
                        .chain(row.iter().map(|v| sci(*v)))
                        .collect()
                })
                .collect();
            csv_string(&header, &rows)
        }
    }
}

/// `-0.0` prints as `0.0`.
fn clean(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

pub struct SolveRun {
    pub file: ProblemFile,
    pub report: SolveReport,
    pub summary: String,
}

pub fn solve_file(path: &Path, out_dir: &Path, scheme: &dyn ProjectionScheme) -> Result<SolveRun> {
    let file = problem_file::read(path)?;
    let report = solve_with(&file.problem, file.n, &file.options, scheme).map_err(|e| CliError::Numerical(format!("solve failed: {e}")))?;
    create_dir(out_dir)?;

    let grid: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    let mut rows = Vec::with_capacity(grid.len());
    for &x in &grid {
        let u = report.eval(x);
        let (exact, err) = match file.problem.exact_at(x) {
            None => (String::new(), String::new()),
            Some(Ok(e)) => (sci(e), sci((u - e).abs())),
            // e.g. sin(x)/x at 0: leave the cell empty
            Some(Err(_)) => (String::new(), String::new()),
        };
        rows.push(vec![sci(x), sci(u), exact, err]);
    }
    write_file(&out_dir.join("solution.csv"), &csv_string(&["x", "u_N", "exact", "abs_error"], &rows)?)?;

    let coeffs: Vec<Vec<String>> = report
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, c)| vec![i.to_string(), sci(*c)])
        .collect();
    write_file(&out_dir.join("coefficients.csv"), &csv_string(&["index", "c_i"], &coeffs)?)?;

    let text = report_text(&file, &report, scheme.name());
    write_file(&out_dir.join("report.txt"), &text)?;
    Ok(SolveRun {
        file,
        report,
        summary: text,
    })
}

fn report_text(file: &ProblemFile, report: &SolveReport, scheme: &str) -> String {
    let p = &file.problem;
    let mut out = String::new();
    writeln!(out, "alpha = {}", p.alpha).unwrap();
    writeln!(out, "lambda = {}", p.lambda).unwrap();
    writeln!(out, "s(x) = {}", p.s).unwrap();
    writeln!(out, "g(u) = {}", p.g).unwrap();
    writeln!(out, "h(x) = {}", p.h).unwrap();
    writeln!(out, "u(0) = {}, D^alpha u(0) = {}", p.a, p.b).unwrap();
    writeln!(out, "N = {}", file.n).unwrap();
    writeln!(out, "projection = {scheme}").unwrap();
    writeln!(out, "newton_iterations = {}", report.newton_iters).unwrap();
    writeln!(out, "residual_inf = {}", sci(report.residual_inf)).unwrap();
    writeln!(out, "cond_Q = {}", sci(report.cond_q)).unwrap();
    let pts: Vec<String> = report.points.iter().map(|x| sci(*x)).collect();
    writeln!(out, "collocation_points = {}", pts.join(", ")).unwrap();
    for (i, c) in report.coefficients.iter().enumerate() {
        writeln!(out, "c_{i} = {}", sci(*c)).unwrap();
    }
    for w in &report.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    if let Some(table) = &report.error_table {
        writeln!(out, "x, u_N, exact, abs_error").unwrap();
        for r in table {
            writeln!(out, "{}, {}, {}, {}", sci(r.x), sci(r.approx), sci(r.exact), sci(r.abs_error)).unwrap();
        }
        writeln!(out, "max_abs_error = {}", sci(report.max_abs_error().unwrap_or(0.0))).unwrap();
    }
    out
}

pub struct OracleCheck {
    pub passed: bool,
    pub text: String,
}

/// Zero rows, integer-order exactness and projection-residual orthogonality
/// of `D^(alpha)`.
pub fn oracle_check(alpha: f64, n: usize, scheme: &dyn ProjectionScheme) -> Result<OracleCheck> {
    check_alpha(alpha)?;
    let basis = basis(n)?;
    check_degree(alpha, n)?;
    let numerical = |e: boubaker::fraccalc::FracError| CliError::Numerical(e.to_string());
    let d = build_d_with(alpha, &basis, scheme).map_err(numerical)?;
    let mut out = format!("oracle-check alpha = {alpha}, N = {n}, projection = {}\n", scheme.name());
    let mut passed = true;
    let mut line = |out: &mut String, ok: bool, what: String| {
        passed &= ok;
        writeln!(out, "{} {what}", if ok { "PASS" } else { "FAIL" }).unwrap();
    };

    let zero_rows = (0..ceil_order(alpha)).all(|r| d.matrix().row(r).iter().all(|&v| v == 0.0));
    line(&mut out, zero_rows, format!("rows 0..{} are exactly zero", ceil_order(alpha)));

    if alpha.fract() == 0.0 {
        let mut worst: f64 = 0.0;
        for (row, b) in basis.polys().iter().enumerate() {
            let exact = caputo_polynomial(b, alpha).map_err(numerical)?;
            let mut mono = vec![0.0; basis.len()];
            for &(c, e) in exact.terms() {
                mono[e as usize] += c;
            }
            let want = basis.from_monomial(&mono).map_err(|e| CliError::Numerical(e.to_string()))?;
            for (j, w) in want.iter().enumerate() {
                worst = worst.max((d.matrix()[(row, j)] - w).abs());
            }
        }
        line(&mut out, worst <= 1e-9, format!("integer-order exactness: max entry error {worst:.3e} <= 1e-9"));
    }

    let rule = QuadratureRule::graded(128, 10);
    let e = build_e(alpha, &basis, scheme).map_err(numerical)?;
    let mut worst: f64 = 0.0;
    for i in ceil_order(alpha)..=n {
        let p = i as f64 - alpha;
        let coeffs: Vec<f64> = e.row(i).iter().copied().collect();
        let mut norm2 = 0.0;
        for bj in basis.polys() {
            let r = rule.integrate(|x| (x.powf(p) - basis.eval_series(&coeffs, x).unwrap_or(f64::NAN)) * bj.eval(x));
            worst = worst.max(r.abs());
            norm2 += r * r;
        }
        writeln!(out, "  residual norm for x^{p:.4}: {:.3e}", norm2.sqrt()).unwrap();
    }
    line(&mut out, worst <= 1e-8, format!("projection residual orthogonality: max {worst:.3e} <= 1e-8"));
    Ok(OracleCheck { passed, text: out })
}
