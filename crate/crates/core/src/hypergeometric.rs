//! Gaussian hypergeometric function `F(l, m; n; z)` on `[0, 1)`.
//!
//! Three evaluation routes:
//!
//! * the power series, for `z ≤ near_one_switch`;
//! * the logarithmic expansion in `w = 1 − z` when the parameters are
//!   zero-balanced (`n = l + m`), for `z` closer to one;
//! * the contiguous relation `F(a−1, b; a+b; z) = w·F + z·(w F′)/b`, which
//!   lowers the first parameter of a zero-balanced triple and is what the
//!   second-kind integrals need near one.
//!
//! Every route carries `w` and `ln w` alongside `z` so that callers holding
//! an accurate complement (`w = r′²`) never form `1 − z` themselves.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::special::{beta, digamma, EULER_GAMMA};

/// Relative tolerance for deciding that `n = l + m`.
const BALANCE_TOL: f64 = 1e-13;

/// Parameters and argument of `F(l, m; n; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypArgs {
    pub(crate) l: f64,
    pub(crate) m: f64,
    pub(crate) n: f64,
    pub(crate) z: f64,
    /// `1 − z`
    pub(crate) w: f64,
    /// `ln(1 − z)`
    pub(crate) ln_w: f64,
}

fn check_lower(n: f64) -> Result<()> {
    if !n.is_finite() || (n <= 0.0 && n == n.round()) {
        return Err(Error::domain(format!(
            "lower parameter must not be zero or a negative integer, got {n}"
        )));
    }
    Ok(())
}

impl HypArgs {
    pub fn new(l: f64, m: f64, n: f64, z: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&z) {
            return Err(Error::domain(format!(
                "argument must lie in [0, 1), got {z}"
            )));
        }
        check_lower(n)?;
        Ok(Self {
            l,
            m,
            n,
            z,
            w: 1.0 - z,
            ln_w: (-z).ln_1p(),
        })
    }

    /// Builds the argument from its complement `w = 1 − z`, which keeps full
    /// relative precision in `w` when `z` is close to one.
    pub fn with_complement(l: f64, m: f64, n: f64, w: f64) -> Result<Self> {
        if !(w > 0.0 && w <= 1.0) {
            return Err(Error::domain(format!(
                "complement must lie in (0, 1], got {w}"
            )));
        }
        check_lower(n)?;
        Ok(Self {
            l,
            m,
            n,
            z: 1.0 - w,
            w,
            ln_w: w.ln(),
        })
    }

    /// Unchecked constructor for callers that already hold `z`, `1 − z` and
    /// `ln(1 − z)` to full precision. `w` may underflow to zero as long as
    /// `ln_w` is finite.
    pub(crate) fn from_parts(l: f64, m: f64, n: f64, z: f64, w: f64, ln_w: f64) -> Self {
        Self {
            l,
            m,
            n,
            z,
            w,
            ln_w,
        }
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn is_zero_balanced(&self) -> bool {
        is_balanced(self.l, self.m, self.n)
    }
}

pub(crate) fn is_balanced(l: f64, m: f64, n: f64) -> bool {
    (n - l - m).abs() <= BALANCE_TOL * n.abs().max(1.0)
}

/// Direct power series, summed with the term-ratio recurrence.
pub(crate) fn power_series(l: f64, m: f64, n: f64, z: f64, cfg: &EvalConfig) -> Result<f64> {
    series_sum(l, m, n, z, 1.0, cfg)
}

/// `F(l, m; n; z) − 1` without the cancellation of subtracting the leading term.
pub(crate) fn power_series_minus_one(
    l: f64,
    m: f64,
    n: f64,
    z: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    series_sum(l, m, n, z, 0.0, cfg)
}

fn series_sum(l: f64, m: f64, n: f64, z: f64, head: f64, cfg: &EvalConfig) -> Result<f64> {
    if z == 0.0 {
        return Ok(head);
    }
    let mut term = 1.0_f64;
    let mut sum = head;
    let mut comp = 0.0_f64;
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        let ratio = (l + kf) * (m + kf) / ((n + kf) * (kf + 1.0)) * z;
        term *= ratio;
        if term == 0.0 {
            return Ok(sum + comp);
        }
        // Neumaier summation
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        // The term ratio tends to z; bound the geometric tail by the larger
        // of the current ratio and z.
        let q = ratio.abs().max(z);
        if q < 1.0 && kf > (l.abs() + m.abs()) {
            let tail = term.abs() * q / (1.0 - q);
            if tail <= cfg.series_tol * (sum + comp).abs() {
                return Ok(sum + comp);
            }
        }
    }
    Err(Error::NonConvergence(format!(
        "F({l}, {m}; {n}; {z}) needs more than {} terms",
        cfg.max_terms
    )))
}

/// Zero-balanced `F(a, b; a+b; z)` near `z = 1` together with `w·F′(z)`.
///
/// `F = (1/B) Σ cₙ wⁿ (kₙ − ln w)` with `cₙ = (a)ₙ(b)ₙ/(n!)²` and
/// `kₙ = 2ψ(n+1) − ψ(a+n) − ψ(b+n)`; `k₀ = R(a, b)`.
pub(crate) fn zero_balanced_near_one(
    a: f64,
    b: f64,
    w: f64,
    ln_w: f64,
    cfg: &EvalConfig,
) -> Result<(f64, f64)> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::UnsupportedRegime(format!(
            "logarithmic expansion needs positive parameters, got ({a}, {b})"
        )));
    }
    let inv_beta = 1.0 / beta(a, b)?;
    let mut psi_a = digamma(a)?;
    let mut psi_b = digamma(b)?;
    let mut psi_1 = -EULER_GAMMA;
    let mut coeff = 1.0_f64; // cₙ wⁿ
    let mut value = 0.0_f64;
    let mut wderiv = 0.0_f64;
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        let kn = 2.0 * psi_1 - psi_a - psi_b;
        let v_term = coeff * (kn - ln_w);
        let d_term = coeff * (1.0 + kf * (ln_w - kn));
        value += v_term;
        wderiv += d_term;
        if k > 0
            && v_term.abs() <= cfg.series_tol * value.abs()
            && d_term.abs() <= cfg.series_tol * wderiv.abs()
        {
            return Ok((inv_beta * value, inv_beta * wderiv));
        }
        if coeff == 0.0 {
            return Ok((inv_beta * value, inv_beta * wderiv));
        }
        coeff *= (a + kf) * (b + kf) / ((kf + 1.0) * (kf + 1.0)) * w;
        psi_a += 1.0 / (a + kf);
        psi_b += 1.0 / (b + kf);
        psi_1 += 1.0 / (kf + 1.0);
    }
    Err(Error::NonConvergence(format!(
        "logarithmic expansion of F({a}, {b}; {}; 1 − {w}) needs more than {} terms",
        a + b,
        cfg.max_terms
    )))
}

/// `F(l, m; n; z)` for `z ∈ [0, 1)`.
pub fn gauss_2f1(args: &HypArgs, cfg: &EvalConfig) -> Result<f64> {
    let HypArgs {
        l,
        m,
        n,
        z,
        w,
        ln_w,
    } = *args;
    if z <= cfg.near_one_switch {
        return power_series(l, m, n, z, cfg);
    }
    if is_balanced(l, m, n) && l > 0.0 && m > 0.0 {
        return Ok(zero_balanced_near_one(l, m, w, ln_w, cfg)?.0);
    }
    // F(a−1, b; a+b; z) from the zero-balanced pair (F, wF′), either slot.
    if is_balanced(l + 1.0, m, n) && l + 1.0 > 0.0 && m > 0.0 {
        let (f, wdf) = zero_balanced_near_one(l + 1.0, m, w, ln_w, cfg)?;
        return Ok(w * f + z * wdf / m);
    }
    if is_balanced(l, m + 1.0, n) && l > 0.0 && m + 1.0 > 0.0 {
        let (f, wdf) = zero_balanced_near_one(l, m + 1.0, w, ln_w, cfg)?;
        return Ok(w * f + z * wdf / l);
    }
    Err(Error::UnsupportedRegime(format!(
        "F({l}, {m}; {n}; {z}) above the near-one switch is only available for zero-balanced parameters"
    )))
}

/// `dF/dz = (lm/n)·F(1+l, 1+m; 1+n; z)`.
pub fn gauss_2f1_derivative(args: &HypArgs, cfg: &EvalConfig) -> Result<f64> {
    let HypArgs {
        l,
        m,
        n,
        z,
        w,
        ln_w,
    } = *args;
    if z <= cfg.near_one_switch {
        return Ok(l * m / n * power_series(1.0 + l, 1.0 + m, 1.0 + n, z, cfg)?);
    }
    if is_balanced(l, m, n) && l > 0.0 && m > 0.0 {
        let (_, wdf) = zero_balanced_near_one(l, m, w, ln_w, cfg)?;
        return Ok(wdf / w);
    }
    Err(Error::UnsupportedRegime(format!(
        "derivative of F({l}, {m}; {n}; z) at z = {z} needs zero-balanced parameters"
    )))
}

/// `w·F′(z)` for zero-balanced parameters; finite as `z → 1`.
pub(crate) fn zero_balanced_scaled_derivative(args: &HypArgs, cfg: &EvalConfig) -> Result<f64> {
    let HypArgs {
        l,
        m,
        n,
        z,
        w,
        ln_w,
    } = *args;
    if z <= cfg.near_one_switch {
        return Ok(w * l * m / n * power_series(1.0 + l, 1.0 + m, 1.0 + n, z, cfg)?);
    }
    if !is_balanced(l, m, n) {
        return Err(Error::UnsupportedRegime(format!(
            "scaled derivative of F({l}, {m}; {n}; z) at z = {z} needs zero-balanced parameters"
        )));
    }
    Ok(zero_balanced_near_one(l, m, w, ln_w, cfg)?.1)
}

/// `(F(a, b; a+b; x) − 1) / log(1/(1−x))`, increasing from `ab/(a+b)` to
/// `1/B(a, b)` on `(0, 1)`.
pub fn zero_balanced_ratio(a: f64, b: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::domain(format!(
            "parameters must be positive, got ({a}, {b})"
        )));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("x must lie in (0, 1), got {x}")));
    }
    let args = HypArgs::new(a, b, a + b, x)?;
    let f_minus_one = if x <= cfg.near_one_switch {
        power_series_minus_one(a, b, a + b, x, cfg)?
    } else {
        gauss_2f1(&args, cfg)? - 1.0
    };
    Ok(f_minus_one / -args.ln_w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::beta;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn series_closed_forms() {
        let c = cfg();
        assert_eq!(
            gauss_2f1(&HypArgs::new(0.3, 0.4, 0.5, 0.0).unwrap(), &c).unwrap(),
            1.0
        );
        let v = gauss_2f1(&HypArgs::new(1.0, 1.0, 2.0, 0.5).unwrap(), &c).unwrap();
        assert!(rel(v, 2.0 * 2f64.ln()) < 1e-14);
        // F(1/2, 1/2; 1; 1/2), 40-digit oracle
        let v = gauss_2f1(&HypArgs::new(0.5, 0.5, 1.0, 0.5).unwrap(), &c).unwrap();
        assert!(rel(v, 1.180_340_599_016_096_2) < 1e-14);
        // terminating series: F(−2, b; c; z) is a quadratic
        let (b, cc, z) = (0.7, 1.3, 0.8);
        let exact = 1.0 - 2.0 * b / cc * z + b * (b + 1.0) / (cc * (cc + 1.0)) * z * z;
        let v = gauss_2f1(&HypArgs::new(-2.0, b, cc, z).unwrap(), &c).unwrap();
        assert!(rel(v, exact) < 1e-14);
    }

    #[test]
    fn log_closed_form_near_one() {
        // −ln(1−z)/z = F(1, 1; 2; z) is not zero-balanced, but F(1, 1; 2)
        // has  c − a − b = 0: it is.
        let c = cfg();
        for &w in &[0.04, 1e-3, 1e-6, 1e-8, 1e-12] {
            let args = HypArgs::with_complement(1.0, 1.0, 2.0, w).unwrap();
            let z = 1.0 - w;
            let exact = -w.ln() / z;
            assert!(rel(gauss_2f1(&args, &c).unwrap(), exact) < 1e-13, "w={w}");
        }
    }

    #[test]
    fn unsupported_and_invalid() {
        let c = cfg();
        let args = HypArgs::new(0.5, 0.5, 1.7, 0.99).unwrap();
        assert!(matches!(
            gauss_2f1(&args, &c),
            Err(Error::UnsupportedRegime(_))
        ));
        assert!(HypArgs::new(0.5, 0.5, -1.0, 0.3).is_err());
        assert!(HypArgs::new(0.5, 0.5, 0.0, 0.3).is_err());
        assert!(HypArgs::new(0.5, 0.5, 1.0, 1.0).is_err());
        let tight = EvalConfig {
            max_terms: 5,
            ..cfg()
        };
        let args = HypArgs::new(0.5, 0.5, 1.0, 0.9).unwrap();
        assert!(matches!(
            gauss_2f1(&args, &tight),
            Err(Error::NonConvergence(_))
        ));
    }

    #[test]
    fn switch_point_continuity() {
        let c = cfg();
        for &(a, b) in &[
            (0.5, 0.5),
            (0.1, 0.9),
            (1.0 / 3.0, 2.0 / 3.0),
            (0.3, 0.9),
            (1.0, 2.0),
        ] {
            let z = c.near_one_switch;
            let series = power_series(a, b, a + b, z, &c).unwrap();
            let (near, _) = zero_balanced_near_one(a, b, 1.0 - z, (-z).ln_1p(), &c).unwrap();
            assert!(rel(series, near) < 1e-12, "({a},{b})");
        }
    }

    #[test]
    fn lowered_parameter_matches_series_at_switch() {
        let c = cfg();
        for &a in &[0.05, 0.2, 0.5] {
            let z = c.near_one_switch;
            let series = power_series(a - 1.0, 1.0 - a, 1.0, z, &c).unwrap();
            let hi = EvalConfig {
                near_one_switch: 0.5,
                ..c
            };
            let lowered = gauss_2f1(&HypArgs::new(a - 1.0, 1.0 - a, 1.0, z).unwrap(), &hi).unwrap();
            assert!(rel(series, lowered) < 1e-12, "a={a}");
        }
    }

    #[test]
    fn derivative_examples() {
        let c = cfg();
        // d/dz (−ln(1−z)/z) at 0.3
        let z: f64 = 0.3;
        let exact = 1.0 / (z * (1.0 - z)) + (-z).ln_1p() / (z * z);
        let d = gauss_2f1_derivative(&HypArgs::new(1.0, 1.0, 2.0, z).unwrap(), &c).unwrap();
        assert!(rel(d, exact) < 1e-13);
        assert!(rel(d, 0.798_849_829_252_179) < 1e-13);
        let d0 = gauss_2f1_derivative(&HypArgs::new(0.4, 0.7, 1.9, 0.0).unwrap(), &c).unwrap();
        assert!(rel(d0, 0.4 * 0.7 / 1.9) < 1e-15);
        let h = 1e-5;
        let f = |z| gauss_2f1(&HypArgs::new(0.5, 0.5, 1.0, z).unwrap(), &c).unwrap();
        let fd = (f(0.25 + h) - f(0.25 - h)) / (2.0 * h);
        let d = gauss_2f1_derivative(&HypArgs::new(0.5, 0.5, 1.0, 0.25).unwrap(), &c).unwrap();
        assert!(rel(d, fd) < 1e-7);
    }

    #[test]
    fn derivative_matches_finite_differences_on_elliptic_family() {
        let c = cfg();
        for &a in &[0.05, 0.1, 0.2, 1.0 / 3.0, 0.5] {
            for &(l, m, n) in &[(a, 1.0 - a, 1.0), (a - 1.0, 1.0 - a, 1.0)] {
                for i in 0..18 {
                    let z = 0.05 + 0.05 * f64::from(i);
                    let h = 1e-5;
                    let f = |z| gauss_2f1(&HypArgs::new(l, m, n, z).unwrap(), &c).unwrap();
                    let fd = (f(z + h) - f(z - h)) / (2.0 * h);
                    let d = gauss_2f1_derivative(&HypArgs::new(l, m, n, z).unwrap(), &c).unwrap();
                    assert!(rel(d, fd) < 1e-6, "a={a} ({l},{m},{n}) z={z}");
                }
            }
        }
    }

    #[test]
    fn near_one_derivative_matches_finite_differences() {
        let c = cfg();
        for &w in &[0.03, 1e-3, 1e-5] {
            let h = w * 1e-4;
            let f =
                |w| gauss_2f1(&HypArgs::with_complement(0.2, 0.8, 1.0, w).unwrap(), &c).unwrap();
            // dF/dz = −dF/dw
            let fd = -(f(w + h) - f(w - h)) / (2.0 * h);
            let d = gauss_2f1_derivative(&HypArgs::with_complement(0.2, 0.8, 1.0, w).unwrap(), &c)
                .unwrap();
            assert!(rel(d, fd) < 1e-6, "w={w}");
        }
    }

    #[test]
    fn zero_balanced_ratio_range() {
        let c = cfg();
        let small = zero_balanced_ratio(0.5, 0.5, 1e-9, &c).unwrap();
        assert!((small - 0.25).abs() < 1e-8);
        let big = zero_balanced_ratio(0.5, 0.5, 1.0 - 1e-12, &c).unwrap();
        assert!(big < 1.0 / std::f64::consts::PI && big > 0.3);
        let mid = zero_balanced_ratio(1.0 / 3.0, 2.0 / 3.0, 0.5, &c).unwrap();
        let hi = 1.0 / beta(1.0 / 3.0, 2.0 / 3.0).unwrap();
        assert!(mid > 2.0 / 9.0 && mid < hi);
        assert!((hi - 3f64.sqrt() / (2.0 * std::f64::consts::PI)).abs() < 1e-14);
        assert!(zero_balanced_ratio(0.5, 0.5, 0.0, &c).is_err());
        assert!(zero_balanced_ratio(0.5, 0.5, 1.0, &c).is_err());
    }

    #[test]
    fn zero_balanced_ratio_monotone_and_bounded() {
        let c = cfg();
        for &(a, b) in &[
            (0.5, 0.5),
            (0.05, 0.95),
            (1.0 / 3.0, 2.0 / 3.0),
            (0.3, 0.9),
            (1.0, 2.0),
        ] {
            let lo = a * b / (a + b);
            let hi = 1.0 / beta(a, b).unwrap();
            let mut prev = lo;
            for i in 1..200 {
                let x = f64::from(i) / 200.0;
                let v = zero_balanced_ratio(a, b, x, &c).unwrap();
                assert!(v > prev && v < hi, "({a},{b}) x={x}");
                prev = v;
            }
        }
    }
}
