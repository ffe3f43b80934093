use boubaker::solver::{solve_with, EmdenFowlerProblem, SolveReport};

use super::problems::{example1, example2, example3, example4, EXAMPLE4_NOTE};
use super::published::{
    ODD_GRID, TABLE1, TABLE2, TABLE2_DEGREE, TABLE3, TABLE3_ALPHAS, UNKNOWNS, UNKNOWNS_DEGREE,
};
use super::{Cell, Context, Outcome, ReproductionTarget, Rule};
use crate::error::{CliError, Result};
use crate::output::{csv_string, sci};

fn run(ctx: &Context, problem: &EmdenFowlerProblem, n: usize) -> Result<SolveReport> {
    solve_with(problem, n, &ctx.options, ctx.scheme.as_ref())
        .map_err(|e| CliError::Numerical(format!("alpha = {}, N = {n}: {e}", problem.alpha)))
}

fn abs_error(problem: &EmdenFowlerProblem, report: &SolveReport, x: f64) -> Result<f64> {
    let exact = problem
        .exact_at(x)
        .expect("built-in problems have exact solutions")
        .map_err(|e| CliError::Numerical(e.to_string()))?;
    Ok((report.eval(x) - exact).abs())
}

fn cell(row: String, column: String, computed: f64, published: Option<f64>, rule: Rule) -> Cell {
    Cell {
        row,
        column,
        computed,
        published,
        rule,
    }
}

/// Example 1 with `g(u) = u` at `N = 3, 6`.
pub struct Table1;

impl ReproductionTarget for Table1 {
    fn name(&self) -> &'static str {
        "table1"
    }

    fn description(&self) -> &'static str {
        "absolute error of the sin(x)/x problem for N = 3 and N = 6"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let problem = example1(1);
        let mut out = Outcome {
            target: self.name(),
            ..Outcome::default()
        };
        let mut columns = Vec::new();
        for (n, published) in TABLE1 {
            let report = run(ctx, &problem, n)?;
            let bound = if n == 3 { 5e-4 } else { 5e-7 };
            let mut errs = Vec::new();
            for (&x, &p) in ODD_GRID.iter().zip(&published) {
                let e = abs_error(&problem, &report, x)?;
                out.cells.push(cell(format!("N={n}"), format!("x={x}"), e, Some(p), Rule::AtMost(bound)));
                errs.push(e);
            }
            columns.push(errs);
        }
        let rows: Vec<Vec<String>> = ODD_GRID
            .iter()
            .enumerate()
            .map(|(i, &x)| vec![sci(x), sci(columns[0][i]), sci(columns[1][i])])
            .collect();
        out.files.push(("table1.csv".into(), csv_string(&["x", "N=3", "N=6"], &rows)?));
        Ok(out)
    }
}

/// Example 2 at `N = 2` for `alpha = 1, 0.85, 0.75`.
pub struct Table2;

impl ReproductionTarget for Table2 {
    fn name(&self) -> &'static str {
        "table2"
    }

    fn description(&self) -> &'static str {
        "absolute error of the 3 + x^(2 alpha) problem at N = 2"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let mut out = Outcome {
            target: self.name(),
            ..Outcome::default()
        };
        let mut columns = Vec::new();
        for (alpha, published) in TABLE2 {
            let problem = example2(alpha);
            let report = run(ctx, &problem, TABLE2_DEGREE)?;
            let rule = if alpha == 1.0 { Rule::Within(1e-12) } else { Rule::Factor(5.0) };
            let mut errs = Vec::new();
            for (&x, &p) in ODD_GRID.iter().zip(&published) {
                let e = abs_error(&problem, &report, x)?;
                out.cells.push(cell(format!("alpha={alpha}"), format!("x={x}"), e, Some(p), rule));
                errs.push(e);
            }
            columns.push(errs);
        }
        out.notes.push(
            "fractional rows are order-of-magnitude checks: the published digits depend on an \
             unstated rounding of the fractional expansion"
                .into(),
        );
        let rows: Vec<Vec<String>> = ODD_GRID
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                std::iter::once(sci(x))
                    .chain(columns.iter().map(|c| sci(c[i])))
                    .collect()
            })
            .collect();
        out.files.push((
            "table2.csv".into(),
            csv_string(&["x", "alpha=1", "alpha=0.85", "alpha=0.75"], &rows)?,
        ));
        Ok(out)
    }
}

/// Example 4 coefficient vectors at `N = 4`.
pub struct Unknowns;

impl ReproductionTarget for Unknowns {
    fn name(&self) -> &'static str {
        "unknowns"
    }

    fn description(&self) -> &'static str {
        "coefficient vectors of the 1 + x^(2 alpha) + x^(3 alpha) problem at N = 4"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let mut out = Outcome {
            target: self.name(),
            ..Outcome::default()
        };
        let mut rows = Vec::new();
        for (alpha, published) in UNKNOWNS {
            let report = run(ctx, &example4(alpha), UNKNOWNS_DEGREE)?;
            let rule = if alpha == 1.0 { Rule::Within(5e-3) } else { Rule::Within(5e-2) };
            for (j, (&c, &p)) in report.coefficients.iter().zip(&published).enumerate() {
                out.cells.push(cell(format!("alpha={alpha}"), format!("c{j}"), c, Some(p), rule));
            }
            rows.push(
                std::iter::once(format!("{alpha}"))
                    .chain(report.coefficients.iter().map(|c| sci(*c)))
                    .collect::<Vec<_>>(),
            );
        }
        out.notes.push(EXAMPLE4_NOTE.into());
        out.files.push((
            "unknowns.csv".into(),
            csv_string(&["alpha", "c0", "c1", "c2", "c3", "c4"], &rows)?,
        ));
        Ok(out)
    }
}

/// Example 4 absolute errors on `0.1, ..., 1.0`, run at both `N = 4` and
/// `N = 5`.
pub struct Table3;

impl ReproductionTarget for Table3 {
    fn name(&self) -> &'static str {
        "table3"
    }

    fn description(&self) -> &'static str {
        "absolute error of the 1 + x^(2 alpha) + x^(3 alpha) problem at N = 4 and N = 5"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let mut out = Outcome {
            target: self.name(),
            ..Outcome::default()
        };
        let grid: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
        let mut rows = Vec::new();
        for n in [4, 5] {
            let mut columns = Vec::new();
            for (a, &alpha) in TABLE3_ALPHAS.iter().enumerate() {
                let problem = example4(alpha);
                let report = run(ctx, &problem, n)?;
                let rule = if alpha == 1.0 { Rule::NoWorseThan(5.0) } else { Rule::Factor(5.0) };
                let mut errs = Vec::new();
                for (i, &x) in grid.iter().enumerate() {
                    let e = abs_error(&problem, &report, x)?;
                    out.cells.push(cell(
                        format!("N={n} alpha={alpha}"),
                        format!("x={x}"),
                        e,
                        Some(TABLE3[i][a]),
                        rule,
                    ));
                    errs.push(e);
                }
                columns.push(errs);
            }
            for (i, &x) in grid.iter().enumerate() {
                rows.push(vec![
                    n.to_string(),
                    sci(x),
                    sci(columns[0][i]),
                    sci(columns[1][i]),
                    sci(columns[2][i]),
                ]);
            }
        }
        out.notes.push(
            "the published caption says N = 5 and the text N = 4; both are run against the same column".into(),
        );
        out.notes.push(EXAMPLE4_NOTE.into());
        out.files.push((
            "table3.csv".into(),
            csv_string(&["N", "x", "alpha=0.7", "alpha=0.8", "alpha=1"], &rows)?,
        ));
        Ok(out)
    }
}

/// Example 3 solution samples for `N = 4, 6` on 101 points.
pub struct Fig3Data;

impl ReproductionTarget for Fig3Data {
    fn name(&self) -> &'static str {
        "fig3-data"
    }

    fn description(&self) -> &'static str {
        "exp(x^2) problem: (x, u_4, u_6, exact) on 101 uniform points"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let problem = example3();
        let r4 = run(ctx, &problem, 4)?;
        let r6 = run(ctx, &problem, 6)?;
        let mut rows = Vec::new();
        let (mut e4, mut e6) = (0.0f64, 0.0f64);
        for k in 0..=100 {
            let x = k as f64 / 100.0;
            let exact = (x * x).exp();
            let (u4, u6) = (r4.eval(x), r6.eval(x));
            e4 = e4.max((u4 - exact).abs());
            e6 = e6.max((u6 - exact).abs());
            rows.push(vec![
                sci(x),
                sci(u4),
                sci(u6),
                sci(exact),
                sci((u4 - exact).abs()),
                sci((u6 - exact).abs()),
            ]);
        }
        let mut out = Outcome {
            target: self.name(),
            ..Outcome::default()
        };
        out.cells.push(cell("max_abs_error".into(), "N=6".into(), e6, None, Rule::AtMost(1e-3)));
        out.cells.push(cell("max_abs_error".into(), "N=6 / N=4".into(), e6 / e4, None, Rule::AtMost(1.0)));
        out.notes.push(format!("max abs error: N=4 {e4:.3e}, N=6 {e6:.3e}"));
        out.files.push((
            "fig3_data.csv".into(),
            csv_string(&["x", "u_4", "u_6", "exact", "abs_error_4", "abs_error_6"], &rows)?,
        ));
        Ok(out)
    }
}
