//! Scalar special functions: Γ, B, ψ, the rising factorial, the Ramanujan
//! constant `R(a)`, the `p`-generalized inverse hyperbolic tangent and `π_p`.
//!
//! Γ, ln Γ and ψ are backed by `statrs`; this module adds domain checks and
//! keeps `Γ` accurate up to the overflow threshold.

use std::f64::consts::PI;

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::hypergeometric::{gauss_2f1, HypArgs};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest argument for which Γ(x) is finite in `f64`.
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

/// Exponent `p > 1` of the generalized hyperbolic functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PExponent(f64);

impl PExponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p > 1.0 {
            Ok(Self(p))
        } else {
            Err(Error::domain(format!("exponent p must exceed 1, got {p}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Rising factorial `a(a+1)···(a+n−1)`; equals 1 for `n = 0`.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (a + f64::from(k)))
}

fn require_positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{name} requires a positive finite argument, got {x}"
        )))
    }
}

/// Γ(x) for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    require_positive("gamma", x)?;
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow(format!("gamma({x}) exceeds f64 range")));
    }
    Ok(libm::tgamma(x))
}

/// ln Γ(x) for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    require_positive("ln_gamma", x)?;
    Ok(libm::lgamma(x))
}

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y).
pub fn beta(x: f64, y: f64) -> Result<f64> {
    require_positive("beta", x)?;
    require_positive("beta", y)?;
    if x + y < GAMMA_MAX_ARG {
        return Ok(gamma(x)? * gamma(y)? / gamma(x + y)?);
    }
    Ok(ln_beta(x, y)?.exp())
}

pub fn ln_beta(x: f64, y: f64) -> Result<f64> {
    Ok(ln_gamma(x)? + ln_gamma(y)? - ln_gamma(x + y)?)
}

/// ψ(x) = Γ′(x)/Γ(x) for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    require_positive("digamma", x)?;
    Ok(statrs::function::gamma::digamma(x))
}

/// `R(a, b) = −2γ − ψ(a) − ψ(b)`, the constant term of the logarithmic
/// expansion of `F(a, b; a+b; x)` at `x = 1`.
pub fn ramanujan_r2(a: f64, b: f64) -> Result<f64> {
    Ok(-2.0 * EULER_GAMMA - digamma(a)? - digamma(b)?)
}

/// Ramanujan constant `R(a) = −2γ − ψ(a) − ψ(1−a)` for `a ∈ (0, 1)`.
///
/// Evaluated with the smaller of `a`, `1−a` first so that `R(a)` and
/// `R(1−a)` are bit-identical.
pub fn ramanujan_r(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain(format!("R(a) requires a in (0, 1), got {a}")));
    }
    let (lo, hi) = if a <= 0.5 { (a, 1.0 - a) } else { (1.0 - a, a) };
    Ok(-2.0 * EULER_GAMMA - digamma(lo)? - digamma(hi)?)
}

/// `π_p = 2π / (p sin(π/p))`.
pub fn pi_p(p: PExponent) -> f64 {
    let p = p.value();
    2.0 * PI / (p * (PI / p).sin())
}

/// `artanh_p(x) = ∫₀ˣ (1 − tᵖ)⁻¹ dt` for `x ∈ [0, 1)`.
///
/// Uses `x·F(1, 1/p; 1+1/p; xᵖ)` while `xᵖ` stays at or below the near-one
/// switch. Beyond it the logarithmic singularity at `t = 1` is subtracted
/// analytically and the bounded remainder is integrated numerically.
pub fn artanh_p(p: PExponent, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!(
            "artanh_p requires x in [0, 1), got {x}"
        )));
    }
    let pv = p.value();
    let series = |x: f64| -> Result<f64> {
        let args = HypArgs::new(1.0, 1.0 / pv, 1.0 + 1.0 / pv, x.powf(pv))?;
        Ok(x * gauss_2f1(&args, cfg)?)
    };
    if x.powf(pv) <= cfg.near_one_switch {
        return series(x);
    }
    let x0 = cfg.near_one_switch.powf(1.0 / pv);
    let head = series(x0)?;
    // 1/(1 − tᵖ) − 1/(p(1 − t)) with 1 − tᵖ formed from 1 − t.
    let remainder = |t: f64| {
        let u = 1.0 - t;
        let one_minus_tp = -(pv * (-u).ln_1p()).exp_m1();
        1.0 / one_minus_tp - 1.0 / (pv * u)
    };
    let quad = quadrature::integrate(remainder, x0, x, 1e-15);
    if !quad.integral.is_finite() {
        return Err(Error::NonConvergence(format!(
            "artanh_p quadrature failed at x = {x}"
        )));
    }
    let log_part = ((1.0 - x0).ln() - (1.0 - x).ln()) / pv;
    Ok(head + quad.integral + log_part)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(0.3, 0), 1.0);
        assert_eq!(pochhammer(1.0, 4), 24.0);
        assert_eq!(pochhammer(0.5, 2), 0.75);
        for n in 0..50 {
            let a = -2.7 + 0.13 * f64::from(n);
            let lhs = pochhammer(a, n + 1);
            let rhs = pochhammer(a, n) * (a + f64::from(n));
            assert!((lhs - rhs).abs() <= 1e-14 * rhs.abs().max(1e-300), "n={n}");
        }
    }

    #[test]
    fn gamma_values() {
        assert!(rel(gamma(5.0).unwrap(), 24.0) < 1e-14);
        assert!(rel(gamma(1.0).unwrap(), 1.0) < 1e-14);
        assert!(rel(gamma(0.5).unwrap(), PI.sqrt()) < 1e-14);
        // reflection oracle Γ(z)Γ(1−z) = π / sin(πz)
        for &z in &[0.1, 0.25, 1.0 / 3.0, 0.4] {
            let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
            assert!(rel(lhs, PI / (PI * z).sin()) < 1e-14, "z={z}");
        }
    }

    #[test]
    fn gamma_factorials_up_to_170() {
        let mut fact = 1.0_f64;
        for n in 1..=170u32 {
            // Γ(n) = (n−1)!
            assert!(rel(gamma(f64::from(n)).unwrap(), fact) < 1e-14, "n={n}");
            fact *= f64::from(n);
        }
    }

    #[test]
    fn gamma_rejects_bad_arguments() {
        assert!(matches!(gamma(0.0), Err(Error::Domain(_))));
        assert!(matches!(gamma(-1.5), Err(Error::Domain(_))));
        assert!(matches!(gamma(172.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn beta_values() {
        assert!(rel(beta(0.5, 0.5).unwrap(), PI) < 1e-13);
        assert!(rel(beta(1.0, 1.0).unwrap(), 1.0) < 1e-13);
        assert!(rel(beta(1.0 / 3.0, 2.0 / 3.0).unwrap(), 2.0 * PI / 3f64.sqrt()) < 1e-13);
        for &x in &[0.05, 0.7, 3.0, 40.0, 200.0] {
            assert!(rel(beta(x, 1.0).unwrap(), 1.0 / x) < 1e-13, "x={x}");
            assert_eq!(beta(x, 2.5).unwrap(), beta(2.5, x).unwrap());
        }
        assert!(beta(0.0, 1.0).is_err());
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-12);
        assert!((digamma(0.5).unwrap() + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-12);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-12);
        let mut x = 0.1;
        while x <= 50.0 {
            let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
            assert!((d - 1.0 / x).abs() < 1e-11, "x={x}");
            x += 0.37;
        }
        assert!(digamma(-0.5).is_err());
    }

    #[test]
    fn ramanujan_constant() {
        assert!(rel(ramanujan_r(0.5).unwrap(), 16f64.ln()) < 1e-13);
        assert_eq!(ramanujan_r(0.3).unwrap(), ramanujan_r(0.7).unwrap());
        let third = ramanujan_r(1.0 / 3.0).unwrap();
        let direct = -2.0 * EULER_GAMMA - digamma(1.0 / 3.0).unwrap() - digamma(2.0 / 3.0).unwrap();
        assert!(rel(third, direct) < 1e-14);
        assert!(ramanujan_r(1.0).is_err());
        assert!(ramanujan_r(0.0).is_err());
    }

    #[test]
    fn pi_p_values() {
        let p = |v| PExponent::new(v).unwrap();
        assert!(rel(pi_p(p(2.0)), PI) < 1e-15);
        assert!(rel(pi_p(p(4.0)), PI / 2f64.sqrt()) < 1e-15);
        assert!(rel(pi_p(p(3.0)), 2.418_399_152_312_290_5) < 1e-14);
        assert!(PExponent::new(1.0).is_err());
    }

    #[test]
    fn artanh_p_values() {
        let cfg = EvalConfig::default();
        let two = PExponent::new(2.0).unwrap();
        for &x in &[0.0, 0.1, 0.5, 0.9, 0.97, 0.999] {
            let v = artanh_p(two, x, &cfg).unwrap();
            assert!(
                (v - x.atanh()).abs() <= 1e-13 * x.atanh().max(1e-300),
                "x={x}"
            );
        }
        let three = PExponent::new(3.0).unwrap();
        assert_eq!(artanh_p(three, 0.0, &cfg).unwrap(), 0.0);
        assert!(artanh_p(three, 1.0, &cfg).is_err());
        assert!(artanh_p(three, -0.1, &cfg).is_err());
    }

    #[test]
    fn artanh_p_is_increasing_with_correct_slope() {
        let cfg = EvalConfig::default();
        for &pv in &[1.5, 2.0, 3.0, 5.0] {
            let p = PExponent::new(pv).unwrap();
            let mut prev = -1.0;
            for i in 0..200 {
                let x = f64::from(i) / 200.0 * 0.9995;
                let v = artanh_p(p, x, &cfg).unwrap();
                assert!(v > prev, "p={pv} x={x}");
                prev = v;
            }
            for i in 0..18 {
                let x = 0.05 + 0.05 * f64::from(i);
                let h = 1e-5;
                let fd = (artanh_p(p, x + h, &cfg).unwrap() - artanh_p(p, x - h, &cfg).unwrap())
                    / (2.0 * h);
                let exact = 1.0 / (1.0 - x.powf(pv));
                assert!(rel(fd, exact) < 1e-6, "p={pv} x={x}");
            }
        }
    }

    #[test]
    fn artanh_p_continuous_across_switch() {
        let cfg = EvalConfig::default();
        let p = PExponent::new(3.0).unwrap();
        let x0 = cfg.near_one_switch.powf(1.0 / 3.0);
        let below = artanh_p(p, x0, &cfg).unwrap();
        let above = artanh_p(p, x0 * (1.0 + 1e-12), &cfg).unwrap();
        assert!((above - below).abs() < 1e-9);
    }
}
