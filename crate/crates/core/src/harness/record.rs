//! Per-point check records, suite reports and their serialized forms.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one chain `sides[0] ≤ sides[1] ≤ …` at one grid point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite_id: String,
    pub check: String,
    pub inputs: BTreeMap<String, f64>,
    pub sides: Vec<f64>,
    /// Smallest scaled adjacent gap; negative when the chain is violated.
    pub margin: f64,
    pub verdict: Verdict,
    pub slack: f64,
    pub diagnostic: Option<String>,
    #[serde(skip)]
    pub error: Option<Error>,
}

/// Smallest adjacent gap `(x_{i+1} − x_i)/max(1, |x_i|, |x_{i+1}|)`.
///
/// A gap touching `−∞` on the left or `+∞` on the right always holds; any
/// NaN makes the chain fail.
pub fn chain_margin(sides: &[f64]) -> f64 {
    let mut m = f64::INFINITY;
    for w in sides.windows(2) {
        let (x, y) = (w[0], w[1]);
        if x.is_nan() || y.is_nan() {
            return f64::NAN;
        }
        if x == f64::NEG_INFINITY || y == f64::INFINITY {
            continue;
        }
        if x == f64::INFINITY || y == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        let scale = 1f64.max(x.abs()).max(y.abs());
        m = m.min((y - x) / scale);
    }
    m
}

impl CheckRecord {
    pub fn evaluate(
        suite_id: &str,
        check: &str,
        inputs: BTreeMap<String, f64>,
        sides: Result<Vec<f64>>,
        slack: f64,
        diagnostic: Option<String>,
    ) -> Self {
        let (sides, margin, error) = match sides {
            Ok(s) => {
                let m = chain_margin(&s);
                (s, m, None)
            }
            Err(e) => (Vec::new(), f64::NEG_INFINITY, Some(e)),
        };
        let verdict = if margin >= -slack {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let diagnostic = match (&error, diagnostic) {
            (Some(e), _) => Some(e.to_string()),
            (None, d) if verdict == Verdict::Fail && d.is_none() && margin.is_nan() => {
                Some("non-finite side".to_string())
            }
            (None, d) => d,
        };
        Self {
            suite_id: suite_id.to_string(),
            check: check.to_string(),
            inputs,
            sides,
            margin,
            verdict,
            slack,
            diagnostic,
            error,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    /// The suite or `suite_check` identifier that was requested.
    pub suite_id: String,
    pub total: usize,
    pub failures: Vec<CheckRecord>,
    pub min_margin: f64,
    #[serde(serialize_with = "secs")]
    pub wall_time: Duration,
    /// Findings that are reported but not asserted.
    pub notes: Vec<String>,
    #[serde(skip)]
    pub records: Vec<CheckRecord>,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn from_records(
        suite_id: &str,
        records: Vec<CheckRecord>,
        notes: Vec<String>,
        wall_time: Duration,
    ) -> Self {
        let failures: Vec<CheckRecord> = records.iter().filter(|r| !r.passed()).cloned().collect();
        let min_margin = records
            .iter()
            .map(|r| r.margin)
            .fold(
                f64::INFINITY,
                |a, b| if b.is_nan() { f64::NAN } else { a.min(b) },
            );
        Self {
            suite_id: suite_id.to_string(),
            total: records.len(),
            failures,
            min_margin,
            wall_time,
            notes,
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Contribution to the process exit code: 0 pass, 1 inequality failure,
    /// 3 when a failure stems from a solver that did not converge.
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else if self
            .failures
            .iter()
            .any(|f| matches!(f.error, Some(Error::NonConvergence(_))))
        {
            3
        } else {
            1
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{:<24} {:>7} points {:>5} failures  min margin {:>11.3e}  {:>8.3}s",
            self.suite_id,
            self.total,
            self.failures.len(),
            self.min_margin,
            self.wall_time.as_secs_f64()
        )
    }
}

/// 17 significant digits.
pub fn fmt_real(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".to_string()
    } else if v > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Unknown(format!("format {other}"))),
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Domain(format!("output error: {e}"))
}

pub const RECORD_COLUMNS: [&str; 8] = [
    "suite_id",
    "check",
    "inputs",
    "sides",
    "margin",
    "verdict",
    "slack",
    "diagnostic",
];

/// Write every record of every report.
pub fn write_records<W: Write>(
    out: W,
    reports: &[SuiteReport],
    format: OutputFormat,
) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(RECORD_COLUMNS).map_err(io_err)?;
            for rec in reports.iter().flat_map(|r| r.records.iter()) {
                let inputs = rec
                    .inputs
                    .iter()
                    .map(|(k, v)| format!("{k}={}", fmt_real(*v)))
                    .collect::<Vec<_>>()
                    .join(";");
                let sides = rec
                    .sides
                    .iter()
                    .map(|v| fmt_real(*v))
                    .collect::<Vec<_>>()
                    .join(";");
                let verdict = match rec.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "fail",
                };
                w.write_record([
                    rec.suite_id.as_str(),
                    rec.check.as_str(),
                    &inputs,
                    &sides,
                    &fmt_real(rec.margin),
                    verdict,
                    &fmt_real(rec.slack),
                    rec.diagnostic.as_deref().unwrap_or(""),
                ])
                .map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
        OutputFormat::Json => {
            let all: Vec<&CheckRecord> = reports.iter().flat_map(|r| r.records.iter()).collect();
            let mut out = out;
            serde_json::to_writer(&mut out, &all).map_err(io_err)?;
            writeln!(out).map_err(io_err)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn margins() {
        assert_eq!(chain_margin(&[1.0, 2.0, 4.0]), 0.5);
        assert!((chain_margin(&[0.1, 0.3]) - 0.2).abs() < 1e-15);
        assert_eq!(chain_margin(&[2.0, 1.0]), -0.5);
        assert_eq!(
            chain_margin(&[f64::NEG_INFINITY, 0.0, f64::INFINITY]),
            f64::INFINITY
        );
        assert_eq!(chain_margin(&[0.0, f64::NEG_INFINITY]), f64::NEG_INFINITY);
        assert!(chain_margin(&[0.0, f64::NAN]).is_nan());
    }

    #[test]
    fn verdict_follows_slack() {
        let rec = |sides: Vec<f64>| {
            CheckRecord::evaluate("s", "c", BTreeMap::new(), Ok(sides), 1e-11, None)
        };
        assert!(rec(vec![1.0, 1.0 - 1e-13]).passed());
        assert!(!rec(vec![1.0, 1.0 - 1e-9]).passed());
        assert!(!rec(vec![f64::NAN, 1.0]).passed());
        let err = CheckRecord::evaluate(
            "s",
            "c",
            BTreeMap::new(),
            Err(Error::NonConvergence("x".into())),
            1e-11,
            None,
        );
        assert!(!err.passed());
        let rep = SuiteReport::from_records("s", vec![err], vec![], Duration::ZERO);
        assert_eq!(rep.exit_code(), 3);
    }

    #[test]
    fn csv_shape() {
        let mut inputs = BTreeMap::new();
        inputs.insert("r".to_string(), 0.5);
        let rec = CheckRecord::evaluate("s", "c", inputs, Ok(vec![0.25, 1.0 / 3.0]), 1e-11, None);
        let rep = SuiteReport::from_records("s", vec![rec], vec![], Duration::ZERO);
        let mut buf = Vec::new();
        write_records(&mut buf, &[rep], OutputFormat::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), RECORD_COLUMNS.join(","));
        assert_eq!(
            lines.next().unwrap(),
            "s,c,r=5.0000000000000000e-1,2.5000000000000000e-1;3.3333333333333331e-1,8.3333333333333315e-2,pass,9.9999999999999994e-12,"
        );
    }
}
