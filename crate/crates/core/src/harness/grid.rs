//! Rectangular sampling grids for the certification suites.

use std::f64::consts::FRAC_1_SQRT_2;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sample points along one variable.
#[derive(Debug, Clone, PartialEq)]
pub enum Axis {
    Values(Vec<f64>),
    Range {
        lo: f64,
        hi: f64,
        count: usize,
        log: bool,
    },
}

impl Axis {
    pub fn linear(lo: f64, hi: f64, count: usize) -> Self {
        Self::Range {
            lo,
            hi,
            count,
            log: false,
        }
    }

    pub fn geometric(lo: f64, hi: f64, count: usize) -> Self {
        Self::Range {
            lo,
            hi,
            count,
            log: true,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        match self {
            Self::Values(v) => v.clone(),
            Self::Range { lo, hi, count, log } => {
                let n = *count;
                if n == 1 {
                    return vec![*lo];
                }
                (0..n)
                    .map(|i| {
                        if i + 1 == n {
                            return *hi;
                        }
                        let t = i as f64 / (n - 1) as f64;
                        if *log {
                            (lo.ln() + t * (hi.ln() - lo.ln())).exp()
                        } else {
                            lo + t * (hi - lo)
                        }
                    })
                    .collect()
            }
        }
    }

    fn validate(&self, name: &str) -> Result<()> {
        match self {
            Self::Values(v) if v.is_empty() => {
                Err(Error::InvalidGrid(format!("axis {name} has no values")))
            }
            Self::Values(v) if v.iter().any(|x| !x.is_finite()) => Err(Error::InvalidGrid(
                format!("axis {name} has a non-finite value"),
            )),
            Self::Range { count, .. } if *count < 2 => Err(Error::InvalidGrid(format!(
                "axis {name} needs at least 2 points, got {count}"
            ))),
            Self::Range { lo, hi, log, .. } => {
                if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                    Err(Error::InvalidGrid(format!(
                        "axis {name} needs finite lo < hi, got {lo}:{hi}"
                    )))
                } else if *log && *lo <= 0.0 {
                    Err(Error::InvalidGrid(format!(
                        "geometric axis {name} needs lo > 0, got {lo}"
                    )))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

/// Sampling description over `(a, K, r, s, x, p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub a: Axis,
    /// Distortion values; suites that need `K < 1` add the reciprocals.
    pub k: Axis,
    pub r: Axis,
    pub s: Axis,
    pub x: Axis,
    pub p: Axis,
    /// Distance kept from the endpoints of open domains.
    pub margin: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            a: Axis::Values(vec![0.05, 0.1, 0.2, 1.0 / 3.0, 0.5]),
            k: Axis::Values(vec![1.1, 1.5, 2.0, 4.0, 10.0]),
            r: Axis::geometric(1e-3, 1.0 - 1e-3, 41),
            s: Axis::geometric(1e-3, 1.0 - 1e-3, 11),
            x: Axis::geometric(1e-3, 1e3, 25),
            p: Axis::Values(vec![2.0, 2.5, 3.0, 5.0]),
            margin: 1e-3,
        }
    }
}

/// Tolerance for points placed exactly on a margin.
const EDGE: f64 = 1e-12;

impl GridSpec {
    /// Apply a `var=lo:hi:count[:log]` or `var=v1,v2,…` clause.
    pub fn apply_clause(&mut self, clause: &str) -> Result<()> {
        let (var, spec) = clause
            .split_once('=')
            .ok_or_else(|| Error::InvalidGrid(format!("expected var=spec, got {clause:?}")))?;
        if var.trim() == "margin" {
            self.margin = parse_num(spec)?;
            return Ok(());
        }
        let axis = parse_axis(spec)?;
        match var.trim() {
            "a" => self.a = axis,
            "K" | "k" => self.k = axis,
            "r" => self.r = axis,
            "s" => self.s = axis,
            "x" | "y" => self.x = axis,
            "p" => self.p = axis,
            other => {
                return Err(Error::InvalidGrid(format!(
                    "unknown grid variable {other:?}"
                )))
            }
        }
        Ok(())
    }

    pub fn with_clauses<'a>(mut self, clauses: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        for c in clauses {
            for part in c.split(';').filter(|p| !p.trim().is_empty()) {
                self.apply_clause(part.trim())?;
            }
        }
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.margin >= 0.0 && self.margin < 0.5) {
            return Err(Error::InvalidGrid(format!(
                "margin must lie in [0, 1/2), got {}",
                self.margin
            )));
        }
        for (name, axis) in [
            ("a", &self.a),
            ("K", &self.k),
            ("r", &self.r),
            ("s", &self.s),
            ("x", &self.x),
            ("p", &self.p),
        ] {
            axis.validate(name)?;
        }
        for (name, pts) in [
            ("a", self.a_values()),
            ("K", self.k_values()),
            ("r", self.r_values()),
            ("s", self.s_values()),
            ("x", self.x_values()),
            ("p", self.p_values()),
        ] {
            if pts.is_empty() {
                return Err(Error::InvalidGrid(format!(
                    "axis {name} is empty after applying domain margins"
                )));
            }
        }
        Ok(())
    }

    fn unit_interval(&self, axis: &Axis) -> Vec<f64> {
        let m = self.margin;
        axis.points()
            .into_iter()
            .filter(|&v| v > 0.0 && v < 1.0 && v >= m * (1.0 - EDGE) && v <= 1.0 - m + EDGE)
            .collect()
    }

    /// Order parameters in `(0, 1/2]`.
    pub fn a_values(&self) -> Vec<f64> {
        self.a
            .points()
            .into_iter()
            .filter(|&a| a > 0.0 && a <= 0.5)
            .collect()
    }

    /// Distortions as given (positive, excluding 1).
    pub fn k_values(&self) -> Vec<f64> {
        self.k
            .points()
            .into_iter()
            .filter(|&k| k > 0.0 && k.is_finite() && k != 1.0)
            .collect()
    }

    /// Distortions above 1.
    pub fn k_above_one(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .k_values()
            .into_iter()
            .map(|k| if k < 1.0 { 1.0 / k } else { k })
            .collect();
        sort_dedup(&mut v);
        v
    }

    /// Distortions above 1 together with their reciprocals, ascending.
    pub fn k_with_reciprocals(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .k_above_one()
            .into_iter()
            .flat_map(|k| [k, 1.0 / k])
            .collect();
        sort_dedup(&mut v);
        v
    }

    pub fn r_values(&self) -> Vec<f64> {
        self.unit_interval(&self.r)
    }

    /// Radii below `1/√2`.
    pub fn r_below_center(&self) -> Vec<f64> {
        self.r_values()
            .into_iter()
            .filter(|&r| r < FRAC_1_SQRT_2)
            .collect()
    }

    pub fn s_values(&self) -> Vec<f64> {
        self.unit_interval(&self.s)
    }

    pub fn x_values(&self) -> Vec<f64> {
        self.x
            .points()
            .into_iter()
            .filter(|&x| x > 0.0 && x.is_finite())
            .collect()
    }

    /// Exponents `p ≥ 1`.
    pub fn p_values(&self) -> Vec<f64> {
        self.p
            .points()
            .into_iter()
            .filter(|&p| p >= 1.0 && p.is_finite())
            .collect()
    }
}

fn sort_dedup(v: &mut Vec<f64>) {
    v.sort_by(f64::total_cmp);
    v.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * b.abs());
}

fn parse_num(s: &str) -> Result<f64> {
    let t = s.trim();
    let v = match t {
        "1/3" => 1.0 / 3.0,
        "2/3" => 2.0 / 3.0,
        "1/sqrt2" => FRAC_1_SQRT_2,
        _ => f64::from_str(t).map_err(|_| Error::InvalidGrid(format!("not a number: {t:?}")))?,
    };
    Ok(v)
}

fn parse_axis(spec: &str) -> Result<Axis> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [single] => {
            let vals = single
                .split(',')
                .map(parse_num)
                .collect::<Result<Vec<_>>>()?;
            Ok(Axis::Values(vals))
        }
        [lo, hi, count] | [lo, hi, count, _] => {
            let log = match parts.get(3).map(|s| s.trim()) {
                None | Some("lin") => false,
                Some("log") => true,
                Some(other) => {
                    return Err(Error::InvalidGrid(format!("unknown spacing {other:?}")))
                }
            };
            let count = count
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidGrid(format!("bad count {count:?}")))?;
            let axis = Axis::Range {
                lo: parse_num(lo)?,
                hi: parse_num(hi)?,
                count,
                log,
            };
            axis.validate("clause")?;
            Ok(axis)
        }
        _ => Err(Error::InvalidGrid(format!(
            "expected lo:hi:count[:log], got {spec:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_axes() {
        let g = GridSpec::default();
        g.validate().unwrap();
        let r = g.r_values();
        assert_eq!(r.len(), 41);
        assert!((r[0] - 1e-3).abs() < 1e-18 && r[40] == 0.999);
        assert!(r.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.s_values().len(), 11);
        assert_eq!(g.x_values().len(), 25);
        assert_eq!(g.k_with_reciprocals().len(), 10);
        assert_eq!(g.k_above_one(), vec![1.1, 1.5, 2.0, 4.0, 10.0]);
    }

    #[test]
    fn clauses() {
        let g = GridSpec::default()
            .with_clauses(["r=0.1:0.9:5", "a=0.5", "x=0.01:100:5:log;K=2,3"])
            .unwrap();
        assert_eq!(
            g.r_values(),
            vec![0.1, 0.30000000000000004, 0.5, 0.7000000000000001, 0.9]
        );
        assert_eq!(g.a_values(), vec![0.5]);
        let x = g.x_values();
        assert!((x[2] - 1.0).abs() < 1e-14);
        assert_eq!(g.k_values(), vec![2.0, 3.0]);
        assert!(GridSpec::default().with_clauses(["q=1:2:3"]).is_err());
        assert!(GridSpec::default().with_clauses(["r=0.1:0.9:1"]).is_err());
        assert!(GridSpec::default().with_clauses(["r=0.9:0.1:4"]).is_err());
        assert!(GridSpec::default().with_clauses(["r=0.1:0.9"]).is_err());
    }

    #[test]
    fn empty_after_margins() {
        let g = GridSpec::default()
            .with_clauses(["r=0.9995:0.9999:4"])
            .unwrap();
        assert!(matches!(g.validate(), Err(Error::InvalidGrid(_))));
        let g = GridSpec::default().with_clauses(["a=0.6,0.7"]).unwrap();
        assert!(g.validate().is_err());
    }
}
