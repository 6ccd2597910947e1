//! Generalized complete elliptic integrals.
//!
//! `K_a(r) = (π/2) F(a, 1−a; 1; r²)` and `E_a(r) = (π/2) F(a−1, 1−a; 1; r²)`
//! for `a ∈ (0, 1/2]`, their derivatives, and the three-parameter integrals
//! `K_{a,b,c}`, `E_{a,b,c}` normalized by `B(a, b)/2`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::hypergeometric::{gauss_2f1, is_balanced, HypArgs};
use crate::special::beta;

/// Order parameter `a ∈ (0, 1/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderParam(f64);

impl OrderParam {
    pub fn new(a: f64) -> Result<Self> {
        if a > 0.0 && a <= 0.5 {
            Ok(Self(a))
        } else {
            Err(Error::domain(format!(
                "order parameter must lie in (0, 1/2], got {a}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn sin_pi(self) -> f64 {
        (PI * self.0).sin()
    }

    /// `π / (2 sin πa)`, the value of `μ_a` at `1/√2`.
    pub fn mu_scale(self) -> f64 {
        PI / (2.0 * self.sin_pi())
    }

    /// The equivalent three-parameter triple `(a, 1−a, 1)`.
    pub fn tri(self) -> TriParam {
        TriParam {
            a: self.0,
            b: 1.0 - self.0,
            c: 1.0,
        }
    }
}

/// Parameter triple `(a, b, c)` of the three-parameter theory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriParam {
    a: f64,
    b: f64,
    c: f64,
}

impl TriParam {
    /// Triple admissible for `K_{a,b,c}`, `E_{a,b,c}`:
    /// `0 < a < min{c, 1}` and `0 < b < c ≤ a + b`.
    pub fn for_integrals(a: f64, b: f64, c: f64) -> Result<Self> {
        let ok = a > 0.0 && a < c.min(1.0) && b > 0.0 && b < c && c <= a + b + 1e-15;
        if ok {
            Ok(Self { a, b, c })
        } else {
            Err(Error::domain(format!(
                "({a}, {b}, {c}) violates 0 < a < min(c, 1), 0 < b < c <= a + b"
            )))
        }
    }

    /// Triple admissible for `μ_{a,b,c}`: positive entries with `a + b ≥ c`.
    pub fn for_modulus(a: f64, b: f64, c: f64) -> Result<Self> {
        if a > 0.0 && b > 0.0 && c > 0.0 && a + b + 1e-15 >= c {
            Ok(Self { a, b, c })
        } else {
            Err(Error::domain(format!(
                "({a}, {b}, {c}) violates a, b, c > 0 and a + b >= c"
            )))
        }
    }

    /// Two-parameter shorthand `(a, c) ↦ (a, c−a, c)` with `0 < a < c ≤ 1`.
    pub fn two_param(a: f64, c: f64) -> Result<Self> {
        if a > 0.0 && a < c && c <= 1.0 {
            Ok(Self { a, b: c - a, c })
        } else {
            Err(Error::domain(format!(
                "shorthand (a, c) requires 0 < a < c <= 1, got ({a}, {c})"
            )))
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn is_zero_balanced(&self) -> bool {
        is_balanced(self.a, self.b, self.c)
    }

    /// `B(a, b)/2`
    pub fn half_beta(&self) -> Result<f64> {
        Ok(0.5 * beta(self.a, self.b)?)
    }
}

/// Radius `r ∈ [0, 1]` stored together with `r′ = √(1 − r²)` and both
/// logarithms, so that either side keeps full relative precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Radius {
    r: f64,
    rc: f64,
    ln_r: f64,
    ln_rc: f64,
}

impl Radius {
    pub fn new(r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::domain(format!("radius must lie in [0, 1], got {r}")));
        }
        let rc = ((1.0 - r) * (1.0 + r)).sqrt();
        Ok(Self {
            r,
            rc,
            ln_r: r.ln(),
            ln_rc: 0.5 * (-r).ln_1p() + 0.5 * r.ln_1p(),
        })
    }

    /// Radius given by its complement `r′`.
    pub fn from_complement(rc: f64) -> Result<Self> {
        Ok(Self::new(rc)?.complement())
    }

    /// Radius `e^{ln_r}`; `ln_r ≤ 0`. Exact for radii too small to represent.
    pub fn from_ln(ln_r: f64) -> Result<Self> {
        if !(ln_r <= 0.0) {
            return Err(Error::domain(format!(
                "log-radius must be non-positive, got {ln_r}"
            )));
        }
        let r2 = (2.0 * ln_r).exp();
        let rc2 = -(2.0 * ln_r).exp_m1();
        Ok(Self {
            r: ln_r.exp(),
            rc: rc2.sqrt(),
            ln_r,
            ln_rc: 0.5 * (-r2).ln_1p(),
        })
    }

    /// Radius from a pair `(r, r′)` already known to satisfy `r² + r′² = 1`.
    pub(crate) fn from_pair(r: f64, rc: f64) -> Self {
        Self {
            r,
            rc,
            ln_r: r.ln(),
            ln_rc: rc.ln(),
        }
    }

    pub(crate) fn from_parts(r: f64, rc: f64, ln_r: f64, ln_rc: f64) -> Self {
        Self { r, rc, ln_r, ln_rc }
    }

    /// Radius of `x/(1+x)` under the square root, the η-substitution.
    pub fn from_ratio(x: f64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::domain(format!("ratio must be positive, got {x}")));
        }
        let ln_rc = -0.5 * x.ln_1p();
        let ln_r = 0.5 * x.ln() + ln_rc;
        Ok(Self {
            r: ln_r.exp(),
            rc: ln_rc.exp(),
            ln_r,
            ln_rc,
        })
    }

    pub fn value(&self) -> f64 {
        self.r
    }
    pub fn complement_value(&self) -> f64 {
        self.rc
    }
    pub fn ln(&self) -> f64 {
        self.ln_r
    }
    pub fn ln_complement(&self) -> f64 {
        self.ln_rc
    }

    /// The radius `r′`.
    pub fn complement(&self) -> Self {
        Self {
            r: self.rc,
            rc: self.r,
            ln_r: self.ln_rc,
            ln_rc: self.ln_r,
        }
    }

    /// True for `r ∈ (0, 1)`, including radii only representable by their logarithm.
    pub fn is_interior(&self) -> bool {
        self.ln_r.is_finite() && self.ln_rc.is_finite()
    }

    /// Hypergeometric argument `r²` with its complement kept exact.
    pub(crate) fn squared_args(&self, l: f64, m: f64, n: f64) -> HypArgs {
        HypArgs::from_parts(
            l,
            m,
            n,
            self.r * self.r,
            self.rc * self.rc,
            2.0 * self.ln_rc,
        )
    }
}

fn require_interior(r: &Radius, what: &str) -> Result<()> {
    if r.r > 0.0 && r.rc > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{what} requires r in (0, 1), got {}",
            r.value()
        )))
    }
}

/// `K_a(r)`; `K_a(0) = π/2`, `K_a(1) = +∞`.
pub fn ell_k(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    if r.rc == 0.0 {
        return Ok(f64::INFINITY);
    }
    if r.r == 0.0 {
        return Ok(FRAC_PI_2);
    }
    let a = a.value();
    Ok(FRAC_PI_2 * gauss_2f1(&r.squared_args(a, 1.0 - a, 1.0), cfg)?)
}

/// `K′_a(r) = K_a(r′)`.
pub fn ell_kc(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    ell_k(a, r.complement(), cfg)
}

/// `E_a(r)`; `E_a(0) = π/2`, `E_a(1) = sin(πa)/(2(1−a))`.
pub fn ell_e(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    let av = a.value();
    if r.rc == 0.0 {
        return Ok(a.sin_pi() / (2.0 * (1.0 - av)));
    }
    if r.r == 0.0 {
        return Ok(FRAC_PI_2);
    }
    Ok(FRAC_PI_2 * gauss_2f1(&r.squared_args(av - 1.0, 1.0 - av, 1.0), cfg)?)
}

/// `E′_a(r) = E_a(r′)`.
pub fn ell_ec(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    ell_e(a, r.complement(), cfg)
}

/// `dK_a/dr = 2(1−a)(E_a − r′²K_a)/(r r′²)`.
pub fn dk_dr(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    require_interior(&r, "dK/dr")?;
    let k = ell_k(a, r, cfg)?;
    let e = ell_e(a, r, cfg)?;
    let rc2 = r.rc * r.rc;
    Ok(2.0 * (1.0 - a.value()) * (e - rc2 * k) / (r.r * rc2))
}

/// `dE_a/dr = 2(a−1)(K_a − E_a)/r`.
pub fn de_dr(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    require_interior(&r, "dE/dr")?;
    let k = ell_k(a, r, cfg)?;
    let e = ell_e(a, r, cfg)?;
    Ok(2.0 * (a.value() - 1.0) * (k - e) / r.r)
}

/// `K_{a,b,c}(r) = (B(a,b)/2) F(a, b; c; r²)`.
pub fn ell_k3(t: &TriParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    if r.rc == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(t.half_beta()? * gauss_2f1(&r.squared_args(t.a, t.b, t.c), cfg)?)
}

/// `E_{a,b,c}(r) = (B(a,b)/2) F(a−1, b; c; r²)`; `E_{a,b,a+b}(1) = 1/(2b)`.
pub fn ell_e3(t: &TriParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    if r.rc == 0.0 {
        if t.is_zero_balanced() {
            return Ok(0.5 / t.b);
        }
        return Err(Error::UnsupportedRegime(format!(
            "E_(a,b,c)(1) requires c = a + b, got ({}, {}, {})",
            t.a, t.b, t.c
        )));
    }
    Ok(t.half_beta()? * gauss_2f1(&r.squared_args(t.a - 1.0, t.b, t.c), cfg)?)
}

/// Legendre M-function
/// `M(r²) = (2/B(a,b))² b (K E′ + K′ E − K K′)` for the shorthand `(a, c)`.
pub fn legendre_m(t: &TriParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    require_interior(&r, "legendre_m")?;
    if !(t.c <= 1.0 && t.is_zero_balanced()) {
        return Err(Error::domain(
            "legendre_m needs a two-parameter triple (a, c−a, c) with c <= 1",
        ));
    }
    let rp = r.complement();
    let k = ell_k3(t, r, cfg)?;
    let kp = ell_k3(t, rp, cfg)?;
    let e = ell_e3(t, r, cfg)?;
    let ep = ell_e3(t, rp, cfg)?;
    let scale = 1.0 / t.half_beta()?;
    Ok(scale * scale * t.b * (k * ep + kp * e - k * kp))
}
