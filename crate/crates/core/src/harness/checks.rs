//! Chain builders shared by the suites.

use crate::elliptic::Radius;
use crate::error::{Error, Result};
use crate::modular::ModularSolution;

/// `[−tol, dev, tol]`, which holds iff `|dev| ≤ tol`.
pub fn within(dev: f64, tol: f64) -> Vec<f64> {
    vec![-tol, dev, tol]
}

/// `(x − y)/|y|`
pub fn rel_dev(x: f64, y: f64) -> f64 {
    (x - y) / y.abs()
}

/// Values sampled on an ascending axis that must be non-decreasing,
/// framed by the infimum and supremum of the range.
pub fn onto_increasing(inf: f64, vals: &[f64], sup: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity(vals.len() + 2);
    v.push(inf);
    v.extend_from_slice(vals);
    v.push(sup);
    v
}

/// Values sampled on an ascending axis that must be non-increasing.
pub fn onto_decreasing(inf: f64, vals: &[f64], sup: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity(vals.len() + 2);
    v.push(inf);
    v.extend(vals.iter().rev());
    v.push(sup);
    v
}

pub fn decreasing(vals: &[f64]) -> Vec<f64> {
    vals.iter().rev().copied().collect()
}

/// Divided differences of `ys` over `xs`.
pub fn slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    xs.windows(2)
        .zip(ys.windows(2))
        .map(|(x, y)| (y[1] - y[0]) / (x[1] - x[0]))
        .collect()
}

/// Slopes in the order they must be non-decreasing for a convex function.
pub fn convex(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    slopes(xs, ys)
}

pub fn concave(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    decreasing(&slopes(xs, ys))
}

/// Number of sign changes in `vals`, ignoring exact zeros.
pub fn sign_changes(vals: &[f64]) -> usize {
    let signs: Vec<bool> = vals
        .iter()
        .filter(|v| **v != 0.0)
        .map(|v| *v > 0.0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `artanh x` from `ln x`, accurate when `x` is close to 1.
pub fn atanh_from_ln(ln_x: f64) -> f64 {
    let x = ln_x.exp();
    let ln_one_minus = if x < 0.5 {
        (-x).ln_1p()
    } else {
        (-ln_x.exp_m1()).ln()
    };
    0.5 * (x.ln_1p() - ln_one_minus)
}

/// `artanh s = log(1 + s) − log s′`
pub fn atanh_of(sol: &ModularSolution) -> f64 {
    sol.s.ln_1p() - sol.log_s_complement
}

pub fn log_add_exp(x: f64, y: f64) -> f64 {
    let m = x.max(y);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + ((x - m).exp() + (y - m).exp()).ln()
}

/// `r = 1/cosh x` with accurate logarithms of `r` and `r′ = tanh x`.
pub fn sech_radius(x: f64) -> Result<Radius> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let ln_cosh = if x > 1.0 {
        x + (-2.0 * x).exp().ln_1p() - std::f64::consts::LN_2
    } else {
        (2.0 * (x / 2.0).sinh().powi(2)).ln_1p()
    };
    Radius::from_ln(-ln_cosh)
}

/// Ascending pairs `(v[i], v[j])`, `i < j`.
pub fn pairs(v: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for (i, &x) in v.iter().enumerate() {
        for &y in &v[i + 1..] {
            out.push((x, y));
        }
    }
    out
}

pub fn product2(a: &[f64], b: &[f64]) -> Vec<(f64, f64)> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect()
}

pub fn product3(a: &[f64], b: &[f64], c: &[f64]) -> Vec<(f64, f64, f64)> {
    a.iter()
        .flat_map(|&x| {
            b.iter()
                .flat_map(move |&y| c.iter().map(move |&z| (x, y, z)))
        })
        .collect()
}

pub fn collect<I: IntoIterator<Item = Result<f64>>>(it: I) -> Result<Vec<f64>> {
    it.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let xs = [0.0, 1.0, 3.0];
        let sq = [0.0, 1.0, 9.0];
        assert_eq!(convex(&xs, &sq), vec![1.0, 4.0]);
        assert_eq!(concave(&xs, &sq), vec![4.0, 1.0]);
        assert_eq!(
            onto_decreasing(0.0, &[3.0, 2.0], 5.0),
            vec![0.0, 2.0, 3.0, 5.0]
        );
        assert_eq!(sign_changes(&[1.0, 0.0, 2.0, -1.0, -3.0, 4.0]), 2);
    }

    #[test]
    fn artanh_helpers() {
        for x in [1e-8_f64, 0.3, 0.9, 1.0 - 1e-12] {
            let want = x.atanh();
            assert!(
                (atanh_from_ln(f64::ln(x)) - want).abs() <= 1e-9 * want.abs().max(1e-300),
                "{x}"
            );
        }
        assert!((log_add_exp(1000.0, 1000.0) - (1000.0 + 2f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn sech() {
        for x in [1e-3, 0.5, 1.0, 3.0, 50.0, 1000.0] {
            let r = sech_radius(x).unwrap();
            let want = if x < 0.01 {
                let x2 = x * x;
                -(x2 / 2.0 - x2 * x2 / 12.0 + x2 * x2 * x2 / 45.0)
            } else {
                -(x.cosh().ln())
            };
            if x < 700.0 {
                assert!((r.ln() - want).abs() <= 1e-13 * want.abs(), "{x}");
            }
            assert!((r.complement_value() - x.tanh()).abs() < 1e-15);
        }
    }
}
