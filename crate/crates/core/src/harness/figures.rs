//! Data behind the two comparison plots, and the suites that certify what
//! the plots are meant to show.

use serde::Serialize;

use crate::bounds::{
    artanh_bounds_k_with, artanh_log_chain, moebius_bound, power_addition_bounds, Mutation,
};
use crate::config::EvalConfig;
use crate::elliptic::{ell_k, OrderParam, Radius};
use crate::error::{Error, Result};
use crate::harness::checks::{sign_changes, within};
use crate::harness::grid::{Axis, GridSpec};
use crate::harness::record::{fmt_real, OutputFormat};
use crate::harness::registry::CheckDef;
use crate::harness::suites::sides;
use crate::harness::{par_map, CheckOutput, Ctx, Row};

pub(crate) const FIG_1: &[CheckDef] = &[
    CheckDef::ineq("dominance", dominance),
    CheckDef::ineq("aq_bracket", aq_bracket),
];

pub(crate) const FIG_2: &[CheckDef] = &[
    CheckDef::ineq("caption", caption),
    CheckDef::shape("single_crossing", single_crossing),
];

/// Parameters of the second plot.
pub const FIG2_A: f64 = 0.2;
pub const FIG2_K: f64 = 1.5;
pub const FIG2_P: f64 = 1.3;
pub const FIG2_S: f64 = 0.5;

/// Left end of the range where the power-root bound is claimed to win.
const FIG2_CLAIM_FROM: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Figure {
    One,
    Two,
}

fn parse_id(id: &str) -> Result<Figure> {
    match id.trim().to_ascii_lowercase().as_str() {
        "1" | "fig1" | "fig_1" | "fig_1_dominance" => Ok(Figure::One),
        "2" | "fig2" | "fig_2" | "fig_2_crossover" => Ok(Figure::Two),
        other => Err(Error::Unknown(format!("figure {other}"))),
    }
}

/// Default sampling of a figure: only the `r` axis is used.
pub fn figure_grid(id: &str) -> Result<GridSpec> {
    let r = match parse_id(id)? {
        Figure::One => Axis::linear(0.01, 0.999, 100),
        Figure::Two => Axis::linear(0.005, 0.995, 199),
    };
    Ok(GridSpec {
        r,
        ..GridSpec::default()
    })
}

/// Columns of an emitted figure, one row per `r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureTable {
    pub figure: u8,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

/// Upper end of the `K_{1/p}` chain at `p = 2`.
fn thm17_upper(r: Radius, cfg: &EvalConfig) -> Result<f64> {
    Ok(artanh_log_chain(2.0, r, cfg)?.upper)
}

fn fig1_row(r: f64, cfg: &EvalConfig) -> Result<Vec<f64>> {
    let rad = Radius::new(r)?;
    let aq = artanh_bounds_k_with(r, Mutation::None)?;
    Ok(vec![
        r,
        thm17_upper(rad, cfg)?,
        aq.upper,
        ell_k(OrderParam::new(0.5)?, rad, cfg)?,
    ])
}

/// `g`: lower side of the power-root bracket; `h`: the hyperbolic addition bound.
fn fig2_pair(r: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    let a = OrderParam::new(FIG2_A)?;
    let (rr, sr) = (Radius::new(r)?, Radius::new(FIG2_S)?);
    let g = power_addition_bounds(a, FIG2_K, FIG2_P, rr, sr, cfg)?.lower;
    let h = moebius_bound(a, FIG2_K, rr, sr, cfg)?;
    Ok((g, h))
}

pub fn figure_table(id: &str, grid: &GridSpec, cfg: &EvalConfig) -> Result<FigureTable> {
    cfg.validate()?;
    grid.validate()?;
    let fig = parse_id(id)?;
    let rs = grid.r_values();
    let rows: Result<Vec<Vec<f64>>> = par_map(&rs, |&r| match fig {
        Figure::One => fig1_row(r, cfg),
        Figure::Two => fig2_pair(r, cfg).map(|(g, h)| vec![r, g, h]),
    })
    .into_iter()
    .collect();
    let (figure, columns) = match fig {
        Figure::One => (1, vec!["r", "thm17_upper", "aq_upper", "ell_k"]),
        Figure::Two => (2, vec!["r", "g", "h"]),
    };
    Ok(FigureTable {
        figure,
        columns,
        rows: rows?,
    })
}

/// CSV with a header row, or JSON as one object per row keyed by column.
pub fn emit_figure(
    id: &str,
    grid: &GridSpec,
    format: OutputFormat,
    cfg: &EvalConfig,
) -> Result<String> {
    let table = figure_table(id, grid, cfg)?;
    let err = |e: &dyn std::fmt::Display| Error::Domain(format!("output error: {e}"));
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.columns).map_err(|e| err(&e))?;
            for row in &table.rows {
                w.write_record(row.iter().map(|v| fmt_real(*v)))
                    .map_err(|e| err(&e))?;
            }
            let bytes = w.into_inner().map_err(|e| err(&e))?;
            String::from_utf8(bytes).map_err(|e| err(&e))
        }
        OutputFormat::Json => {
            // keys in column order, which a JSON map would not keep
            let mut s = String::from("[");
            for (i, row) in table.rows.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let fields: Vec<String> = table
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| format!("\"{c}\":{}", serde_json::json!(v)))
                    .collect();
                s.push('{');
                s.push_str(&fields.join(","));
                s.push('}');
            }
            s.push_str("]\n");
            Ok(s)
        }
    }
}

fn fig_rs(id: &str) -> Vec<f64> {
    figure_grid(id).map(|g| g.r_values()).unwrap_or_default()
}

/// `K(r) ≤ thm17_upper(r) ≤ aq_upper(r)`
fn dominance(ctx: &Ctx) -> CheckOutput {
    let rs = fig_rs("1");
    crate::harness::par_rows(&rs, |&r| {
        Row::new(
            vec![("r", r)],
            fig1_row(r, ctx.cfg).map(|v| vec![v[3], v[1], v[2]]),
        )
    })
    .into()
}

/// `(π/2)(artanh r/r)^{3/4} < K(r) < (π/2)(artanh r/r)`
fn aq_bracket(ctx: &Ctx) -> CheckOutput {
    let rs = fig_rs("1");
    crate::harness::par_rows(&rs, |&r| {
        Row::new(
            vec![("r", r)],
            sides(|| {
                let bs = artanh_bounds_k_with(r, ctx.mutation)?;
                Ok(bs.chain_above_lower(ell_k(OrderParam::new(0.5)?, Radius::new(r)?, ctx.cfg)?))
            }),
        )
    })
    .into()
}

/// `h ≤ g` over the plotted range right of the claimed crossover.
fn caption(ctx: &Ctx) -> CheckOutput {
    let rs: Vec<f64> = fig_rs("2")
        .into_iter()
        .filter(|&r| r > FIG2_CLAIM_FROM)
        .collect();
    crate::harness::par_rows(&rs, |&r| {
        Row::new(
            vec![("r", r)],
            fig2_pair(r, ctx.cfg).map(|(g, h)| vec![h, g]),
        )
    })
    .into()
}

/// First grid interval on which `g − h` changes sign.
pub fn fig2_crossing(rs: &[f64], diffs: &[f64]) -> Option<(f64, f64)> {
    (0..diffs.len().saturating_sub(1))
        .find(|&i| {
            diffs[i] != 0.0 && diffs[i + 1] != 0.0 && (diffs[i] > 0.0) != (diffs[i + 1] > 0.0)
        })
        .map(|i| (rs[i], rs[i + 1]))
}

fn single_crossing(ctx: &Ctx) -> CheckOutput {
    let rs = fig_rs("2");
    let diffs: Result<Vec<f64>> = par_map(&rs, |&r| fig2_pair(r, ctx.cfg).map(|(g, h)| g - h))
        .into_iter()
        .collect();
    let mut notes = Vec::new();
    let sides = diffs.map(|d| {
        match fig2_crossing(&rs, &d) {
            Some((lo, hi)) => notes.push(format!("g - h changes sign in r = ({lo:.4}, {hi:.4})")),
            None => notes.push("g - h does not change sign on the plotted grid".to_string()),
        }
        within(sign_changes(&d) as f64 - 1.0, 0.5)
    });
    CheckOutput {
        rows: vec![Row::new(
            vec![("a", FIG2_A), ("K", FIG2_K), ("p", FIG2_P), ("s", FIG2_S)],
            sides,
        )],
        notes,
    }
}
