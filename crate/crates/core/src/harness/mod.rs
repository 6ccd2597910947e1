//! Certification harness: evaluates each inequality chain over a grid and
//! records the smallest scaled margin at every point.

mod checks;
pub mod figures;
pub mod grid;
pub mod record;
mod registry;
mod suites;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::Mutation;
use crate::config::EvalConfig;
use crate::error::{Error, Result};

pub use figures::{emit_figure, figure_grid, figure_table, FigureTable};
pub use grid::{Axis, GridSpec};
pub use record::{chain_margin, write_records, CheckRecord, OutputFormat, SuiteReport, Verdict};
pub use registry::{check_ids, suite_ids, CheckKind};

/// Default slack for strict inequalities, relative to `max(1, |sides|)`.
pub const DEFAULT_SLACK: f64 = 1e-11;

/// Relative error allowed between a derivative formula and its finite difference.
pub const FD_TOLERANCE: f64 = 1e-5;

/// Mutual agreement required between alternative printed forms of a derivative.
pub const FORMS_TOLERANCE: f64 = 1e-9;

/// Step selection for finite differences: `h = rel_step · ℓ`, where `ℓ` is
/// `min(r, 1 − r)` for radii and the variable itself for `K` and `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPolicy {
    pub rel_step: f64,
}

impl Default for HPolicy {
    fn default() -> Self {
        Self { rel_step: 5e-3 }
    }
}

/// Everything a check needs to evaluate its points.
pub(crate) struct Ctx<'a> {
    pub grid: &'a GridSpec,
    pub cfg: &'a EvalConfig,
    pub mutation: Mutation,
    pub h: HPolicy,
}

/// One evaluated point before it is turned into a [`CheckRecord`].
pub(crate) struct Row {
    pub inputs: Vec<(&'static str, f64)>,
    pub sides: Result<Vec<f64>>,
    pub note: Option<String>,
}

impl Row {
    pub fn new(inputs: Vec<(&'static str, f64)>, sides: Result<Vec<f64>>) -> Self {
        Self {
            inputs,
            sides,
            note: None,
        }
    }
}

#[derive(Default)]
pub(crate) struct CheckOutput {
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
}

impl From<Vec<Row>> for CheckOutput {
    fn from(rows: Vec<Row>) -> Self {
        Self {
            rows,
            notes: Vec::new(),
        }
    }
}

/// Evaluate `f` over `points` in parallel, keeping the input order.
pub(crate) fn par_rows<T, F>(points: &[T], f: F) -> Vec<Row>
where
    T: Sync,
    F: Fn(&T) -> Row + Sync + Send,
{
    points.par_iter().map(f).collect()
}

/// Like [`par_rows`] for arbitrary results.
pub(crate) fn par_map<T, U, F>(points: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    points.par_iter().map(f).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub slack: f64,
    pub mutation: Mutation,
    pub h: HPolicy,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            slack: DEFAULT_SLACK,
            mutation: Mutation::None,
            h: HPolicy::default(),
        }
    }
}

/// Run a registered suite, or a single `suite_check` of one.
pub fn run_suite(
    suite_id: &str,
    grid: &GridSpec,
    slack: f64,
    cfg: &EvalConfig,
) -> Result<SuiteReport> {
    run_suite_with(
        suite_id,
        grid,
        cfg,
        RunOptions {
            slack,
            ..RunOptions::default()
        },
    )
}

pub fn run_suite_with(
    suite_id: &str,
    grid: &GridSpec,
    cfg: &EvalConfig,
    opts: RunOptions,
) -> Result<SuiteReport> {
    let (suite, checks) = registry::resolve(suite_id)?;
    run_checks(suite_id, suite, &checks, grid, cfg, opts)
}

/// Run every registered suite in registry order.
pub fn run_all(grid: &GridSpec, cfg: &EvalConfig, opts: RunOptions) -> Result<Vec<SuiteReport>> {
    suite_ids()
        .into_iter()
        .map(|id| run_suite_with(id, grid, cfg, opts))
        .collect()
}

/// Compare one derivative formula against central differences.
pub fn finite_difference_check(
    formula_id: &str,
    grid: &GridSpec,
    h: HPolicy,
    cfg: &EvalConfig,
) -> Result<SuiteReport> {
    let check = registry::fd_check_name(formula_id)?;
    let id = format!("{}_{check}", registry::FD_SUITE);
    run_suite_with(
        &id,
        grid,
        cfg,
        RunOptions {
            h,
            ..RunOptions::default()
        },
    )
}

/// Run one registered monotonicity, convexity or limit property.
pub fn shape_check(property_id: &str, grid: &GridSpec, cfg: &EvalConfig) -> Result<SuiteReport> {
    let (_, checks) = registry::resolve(property_id)?;
    if checks.len() != 1 || checks[0].kind != CheckKind::Shape {
        return Err(Error::Unknown(format!("shape property {property_id}")));
    }
    run_suite(property_id, grid, DEFAULT_SLACK, cfg)
}

fn run_checks(
    requested: &str,
    suite: &str,
    checks: &[&registry::CheckDef],
    grid: &GridSpec,
    cfg: &EvalConfig,
    opts: RunOptions,
) -> Result<SuiteReport> {
    grid.validate()?;
    cfg.validate()?;
    if !(opts.slack >= 0.0) {
        return Err(Error::Domain(format!(
            "slack must be non-negative, got {}",
            opts.slack
        )));
    }
    let ctx = Ctx {
        grid,
        cfg,
        mutation: opts.mutation,
        h: opts.h,
    };
    let start = Instant::now();
    let mut records = Vec::new();
    let mut notes = Vec::new();
    for def in checks {
        let out = (def.run)(&ctx);
        for n in out.notes {
            notes.push(format!("{suite}/{}: {n}", def.name));
        }
        records.extend(out.rows.into_iter().map(|row| {
            let inputs: BTreeMap<String, f64> = row
                .inputs
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect();
            CheckRecord::evaluate(suite, def.name, inputs, row.sides, opts.slack, row.note)
        }));
    }
    Ok(SuiteReport::from_records(
        requested,
        records,
        notes,
        start.elapsed(),
    ))
}
