//! Closed-form two-sided bounds for elliptic integrals, moduli and the
//! distortion functions.
//!
//! Each evaluator returns only the sides of its inequality; the quantity
//! being bounded is computed separately by the caller.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::config::EvalConfig;
use crate::elliptic::{ell_e, ell_k, OrderParam, Radius};
use crate::error::{Error, Result};
use crate::hypergeometric::{gauss_2f1, HypArgs};
use crate::modular::phi_solution;
use crate::special::{artanh_p, pi_p, ramanujan_r, PExponent};

/// Sides of an inequality chain `lower ≤ middles… ≤ upper`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSides {
    pub lower: f64,
    pub middles: Vec<f64>,
    pub upper: f64,
}

impl BoundSides {
    pub fn pair(lower: f64, upper: f64) -> Self {
        Self {
            lower,
            middles: Vec::new(),
            upper,
        }
    }

    pub fn chain(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.middles.len() + 2);
        v.push(self.lower);
        v.extend_from_slice(&self.middles);
        v.push(self.upper);
        v
    }

    /// `[lower, middles…, value, upper]`
    pub fn chain_below_upper(&self, value: f64) -> Vec<f64> {
        let mut v = self.chain();
        v.insert(v.len() - 1, value);
        v
    }

    /// `[lower, value, middles…, upper]`
    pub fn chain_above_lower(&self, value: f64) -> Vec<f64> {
        let mut v = self.chain();
        v.insert(1, value);
        v
    }
}

/// Deliberate corruption of a single constant, used to show that the
/// certification suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// `π_p` replaced by `π` in the `K_{1/p}` and `μ_{1/p}` bounds.
    PiPAsPi,
    /// Exponent `3/4` of the artanh lower bound for `K` replaced.
    ArtanhExponent(f64),
    /// `R(a)` scaled in the Hölder bound of `φ_K`.
    HolderConstant(f64),
    /// Rate `t` of the exponential `λ_a` bounds scaled.
    LambdaRate(f64),
    /// `l_p` of the two-sided `μ_{1/p}` bound scaled.
    MuLowerScale(f64),
    /// Sign flip in the closed form of `dK_a/dr`.
    DkDrSignFlip,
}

fn p_exponent(p: f64, min: f64) -> Result<PExponent> {
    if !(p >= min) {
        return Err(Error::domain(format!(
            "exponent p must be at least {min}, got {p}"
        )));
    }
    PExponent::new(p.max(1.0 + f64::EPSILON))
}

fn pi_p_used(p: PExponent, m: Mutation) -> f64 {
    match m {
        Mutation::PiPAsPi => PI,
        _ => pi_p(p),
    }
}

/// Which integral the power-mean chain refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PowerChain {
    /// `F(a, b; c; r^p)^{1/p} ≤ F(a, b; c; r) ≤ F(a, b; c; r^{1/p})^p`
    Hypergeometric { a: f64, b: f64, c: f64 },
    /// `(π/2)^{1−1/p} K_a(r^p)^{1/p} ≤ K_a(r) ≤ (π/2)^{1−p} K_a(r^{1/p})^p`
    FirstKind(OrderParam),
    /// `(π/2)^{1−p} E_a(r^{1/p})^p ≤ E_a(r) ≤ (π/2)^{1−1/p} E_a(r^p)^{1/p}`
    SecondKind(OrderParam),
}

/// Power-mean bounds for `F`, `K_a` or `E_a` at `r`, with `p ≥ 1`.
pub fn power_mean_chain(
    which: PowerChain,
    r: Radius,
    p: f64,
    cfg: &EvalConfig,
) -> Result<BoundSides> {
    if !(p >= 1.0) {
        return Err(Error::domain(format!("p must be at least 1, got {p}")));
    }
    let up = Radius::from_ln(p * r.ln())?;
    let down = Radius::from_ln(r.ln() / p)?;
    let half_pi = FRAC_PI_2;
    match which {
        PowerChain::Hypergeometric { a, b, c } => {
            // the argument of F is r itself here, not r²
            let f = |x: &Radius| -> Result<f64> {
                let args = HypArgs::with_complement(a, b, c, 1.0 - x.value())?;
                gauss_2f1(&args, cfg)
            };
            Ok(BoundSides::pair(f(&up)?.powf(1.0 / p), f(&down)?.powf(p)))
        }
        PowerChain::FirstKind(a) => Ok(BoundSides::pair(
            half_pi.powf(1.0 - 1.0 / p) * ell_k(a, up, cfg)?.powf(1.0 / p),
            half_pi.powf(1.0 - p) * ell_k(a, down, cfg)?.powf(p),
        )),
        PowerChain::SecondKind(a) => Ok(BoundSides::pair(
            half_pi.powf(1.0 - p) * ell_e(a, down, cfg)?.powf(p),
            half_pi.powf(1.0 - 1.0 / p) * ell_e(a, up, cfg)?.powf(1.0 / p),
        )),
    }
}

/// Bounds for `K_{1/p}(r)`, `p ≥ 2`: the artanh_p lower bound, the logarithmic
/// lower bound as the single middle, and the logarithmic upper bound.
pub fn artanh_log_chain(p: f64, r: Radius, cfg: &EvalConfig) -> Result<BoundSides> {
    artanh_log_chain_with(p, r, cfg, Mutation::None)
}

pub(crate) fn artanh_log_chain_with(
    p: f64,
    r: Radius,
    cfg: &EvalConfig,
    m: Mutation,
) -> Result<BoundSides> {
    let pe = p_exponent(p, 2.0)?;
    let x = r.value();
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("r must lie in (0, 1), got {x}")));
    }
    let log_rc2 = 2.0 * r.ln_complement();
    let lower = FRAC_PI_2 * (artanh_p(pe, x, cfg)? / x).sqrt();
    let middle = FRAC_PI_2 * (1.0 - (p - 1.0) / (p * p) * log_rc2);
    let upper = FRAC_PI_2 * (1.0 - 2.0 / (p * pi_p_used(pe, m)) * log_rc2);
    Ok(BoundSides {
        lower,
        middles: vec![middle],
        upper,
    })
}

/// Classical bounds `(π/2)(artanh r/r)^{3/4} < K(r) < (π/2)(artanh r/r)`.
pub fn artanh_bounds_k(r: f64) -> Result<BoundSides> {
    artanh_bounds_k_with(r, Mutation::None)
}

pub(crate) fn artanh_bounds_k_with(r: f64, m: Mutation) -> Result<BoundSides> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::domain(format!("r must lie in (0, 1), got {r}")));
    }
    let q = r.atanh() / r;
    let e = match m {
        Mutation::ArtanhExponent(e) => e,
        _ => 0.75,
    };
    Ok(BoundSides::pair(FRAC_PI_2 * q.powf(e), FRAC_PI_2 * q))
}

/// `l_p(r) < μ_{1/p}(r) < u_p(r)` for `p ≥ 2`.
pub fn mu_log_bounds(p: f64, r: Radius) -> Result<BoundSides> {
    mu_log_bounds_with(p, r, Mutation::None)
}

pub(crate) fn mu_log_bounds_with(p: f64, r: Radius, m: Mutation) -> Result<BoundSides> {
    let pe = p_exponent(p, 2.0)?;
    let pp = pi_p_used(pe, m);
    let log_r2 = 2.0 * r.ln();
    let log_rc2 = 2.0 * r.ln_complement();
    let mut lower = (pp / 2.0).powi(2) * (p * p - (p - 1.0) * log_r2) / (p * pp - 2.0 * log_rc2);
    if let Mutation::MuLowerScale(f) = m {
        lower *= f;
    }
    let upper = (p / 2.0).powi(2) * (p * pp - 2.0 * log_r2) / (p * p - (p - 1.0) * log_rc2);
    Ok(BoundSides::pair(lower, upper))
}

/// Bounds for `μ_{1/p}(r′)` in terms of `K_{1/p}(r)`, `p ≥ 2`:
/// `(pπ_p/(2π)) K/(1 − (2/(pπ_p)) log r²) ≤ μ(r′) ≤ (pπ_p/(2π)) K/(1 − ((p−1)/p²) log r²)`.
pub fn mu_complement_bounds(p: f64, r: Radius, cfg: &EvalConfig) -> Result<BoundSides> {
    mu_complement_bounds_with(p, r, cfg, Mutation::None)
}

pub(crate) fn mu_complement_bounds_with(
    p: f64,
    r: Radius,
    cfg: &EvalConfig,
    m: Mutation,
) -> Result<BoundSides> {
    let pe = p_exponent(p, 2.0)?;
    let pp = pi_p_used(pe, m);
    let k = ell_k(OrderParam::new(1.0 / p)?, r, cfg)?;
    let log_r2 = 2.0 * r.ln();
    let scale = p * pp / (2.0 * PI);
    Ok(BoundSides::pair(
        scale * k / (1.0 - 2.0 / (p * pp) * log_r2),
        scale * k / (1.0 - (p - 1.0) / (p * p) * log_r2),
    ))
}

/// Upper side of [`mu_complement_bounds`] with denominator `1 − ((p−1)/p) log r²`.
/// Kept for comparison; it falls below `μ(r′)`.
pub fn mu_complement_upper_single_p(p: f64, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    let pe = p_exponent(p, 2.0)?;
    let k = ell_k(OrderParam::new(1.0 / p)?, r, cfg)?;
    let log_r2 = 2.0 * r.ln();
    Ok(p * pi_p(pe) / (2.0 * PI) * k / (1.0 - (p - 1.0) / p * log_r2))
}

/// `r ⊕ s = rs/(1 + r′s′)`, the radius of `1/cosh(x+y)` for `r = 1/cosh x`, `s = 1/cosh y`.
pub fn cosh_sum(r: Radius, s: Radius) -> Radius {
    let d = 1.0 + r.complement_value() * s.complement_value();
    let v = r.value() * s.value() / d;
    let c = (r.complement_value() + s.complement_value()) / d;
    Radius::from_parts(v, c, r.ln() + s.ln() - d.ln(), c.ln())
}

/// `√(2rs/(1 + rs + r′s′))`, the radius of `1/cosh((x+y)/2)`.
pub fn cosh_midpoint(r: Radius, s: Radius) -> Radius {
    let (rv, sv, rc, sc) = (
        r.value(),
        s.value(),
        r.complement_value(),
        s.complement_value(),
    );
    let d = 1.0 + rv * sv + rc * sc;
    // 1 − rs = (r′² + s′² − r′²s′²)/(1 + rs)
    let one_minus = (rc * rc + sc * sc - rc * rc * sc * sc) / (1.0 + rv * sv);
    let c2 = (one_minus + rc * sc) / d;
    let ln_v = 0.5 * (2f64.ln() + r.ln() + s.ln() - d.ln());
    Radius::from_parts(ln_v.exp(), c2.sqrt(), ln_v, 0.5 * c2.ln())
}

/// `√(rs)`
pub fn geometric_mean_radius(r: Radius, s: Radius) -> Result<Radius> {
    Radius::from_ln(0.5 * (r.ln() + s.ln()))
}

/// Bounds around `K_a(r) + K_a(s)`: lower `K(r)K(s)/K(r ⊕ s)`, middle
/// `2K(r)K(s)/K(√(2rs/(1+rs+r′s′)))`, upper `2K(r)K(s)/K(rs)`.
pub fn k_addition_chain(
    a: OrderParam,
    r: Radius,
    s: Radius,
    cfg: &EvalConfig,
) -> Result<BoundSides> {
    let kr = ell_k(a, r, cfg)?;
    let ks = ell_k(a, s, cfg)?;
    let prod = kr * ks;
    let rs = Radius::from_ln(r.ln() + s.ln())?;
    Ok(BoundSides {
        lower: prod / ell_k(a, cosh_sum(r, s), cfg)?,
        middles: vec![2.0 * prod / ell_k(a, cosh_midpoint(r, s), cfg)?],
        upper: 2.0 * prod / ell_k(a, rs, cfg)?,
    })
}

/// Middle side of [`k_addition_chain`] with argument `√(rs)/(1 + rs + r′s′)`.
pub fn k_addition_middle_variant(
    a: OrderParam,
    r: Radius,
    s: Radius,
    cfg: &EvalConfig,
) -> Result<f64> {
    let (rv, sv) = (r.value(), s.value());
    let d = 1.0 + rv * sv + r.complement_value() * s.complement_value();
    let arg = Radius::new((rv * sv).sqrt() / d)?;
    Ok(2.0 * ell_k(a, r, cfg)? * ell_k(a, s, cfg)? / ell_k(a, arg, cfg)?)
}

/// `t = 4K_a(1/√2)²/(π sin πa)`
pub fn lambda_rate(a: OrderParam, cfg: &EvalConfig) -> Result<f64> {
    let k = ell_k(a, Radius::new(FRAC_1_SQRT_2)?, cfg)?;
    Ok(4.0 * k * k / (PI * a.sin_pi()))
}

/// `max{e^{π(K−1)/sin πa}, 1 + t(K−1) sin²πa} < λ_a(K) < e^{t(K−1)}`, `K > 1`.
pub fn lambda_bounds(a: OrderParam, k: f64, cfg: &EvalConfig) -> Result<BoundSides> {
    let b = lambda_log_bounds(a, k, cfg)?;
    Ok(BoundSides::pair(b.lower.exp(), b.upper.exp()))
}

/// Logarithms of the sides of [`lambda_bounds`].
pub fn lambda_log_bounds(a: OrderParam, k: f64, cfg: &EvalConfig) -> Result<BoundSides> {
    lambda_log_bounds_with(a, k, cfg, Mutation::None)
}

pub(crate) fn lambda_log_bounds_with(
    a: OrderParam,
    k: f64,
    cfg: &EvalConfig,
    m: Mutation,
) -> Result<BoundSides> {
    if !(k > 1.0 && k.is_finite()) {
        return Err(Error::domain(format!("K must exceed 1, got {k}")));
    }
    let mut t = lambda_rate(a, cfg)?;
    if let Mutation::LambdaRate(f) = m {
        t *= f;
    }
    let sin = a.sin_pi();
    let exp_side = PI * (k - 1.0) / sin;
    let lin_side = (t * (k - 1.0) * sin * sin).ln_1p();
    Ok(BoundSides::pair(exp_side.max(lin_side), t * (k - 1.0)))
}

/// `t = π²/(2K_a(1/√2)²)`
pub fn mu_difference_rate(a: OrderParam, cfg: &EvalConfig) -> Result<f64> {
    let k = ell_k(a, Radius::new(FRAC_1_SQRT_2)?, cfg)?;
    Ok(PI * PI / (2.0 * k * k))
}

/// Bounds valid for `0 < r < 1/√2`, with `g = log(r′/r)`:
/// `g < μ_a(r) − μ_a(r′) < t g` (`difference`) and
/// `g + √((π/sin πa)² + g²) < 2μ_a(r) < t g + √((π/sin πa)² + t²g²)` (`doubled`).
#[derive(Debug, Clone, PartialEq)]
pub struct MuSymmetricBounds {
    pub difference: BoundSides,
    pub doubled: BoundSides,
}

pub fn mu_symmetric_bounds(
    a: OrderParam,
    r: Radius,
    cfg: &EvalConfig,
) -> Result<MuSymmetricBounds> {
    if !(r.value() > 0.0 && r.value() < FRAC_1_SQRT_2) {
        return Err(Error::domain(format!(
            "r must lie in (0, 1/√2), got {}",
            r.value()
        )));
    }
    let t = mu_difference_rate(a, cfg)?;
    let g = r.ln_complement() - r.ln();
    let q = PI / a.sin_pi();
    Ok(MuSymmetricBounds {
        difference: BoundSides::pair(g, t * g),
        doubled: BoundSides::pair(g + q.hypot(g), t * g + q.hypot(t * g)),
    })
}

/// `tanh(K artanh r)`, a lower bound for `φ_K^{a,c}(r)` when `K > 1`.
pub fn tanh_lower_bound(k: f64, r: f64) -> Result<f64> {
    if !(k > 0.0 && r > 0.0 && r < 1.0) {
        return Err(Error::domain(format!(
            "need K > 0 and r in (0, 1), got K={k}, r={r}"
        )));
    }
    if k == 1.0 {
        return Ok(r);
    }
    Ok((k * r.atanh()).tanh())
}

/// `e^{(1−1/K)R(a)/2} d^{1/K}`, the Hölder bound for `φ_K^a(d)`.
pub fn holder_bound(a: OrderParam, k: f64, d: f64) -> Result<f64> {
    holder_bound_with(a, k, d, Mutation::None)
}

pub(crate) fn holder_bound_with(a: OrderParam, k: f64, d: f64, m: Mutation) -> Result<f64> {
    if !(k > 0.0 && d > 0.0) {
        return Err(Error::domain(format!(
            "need K > 0 and d > 0, got K={k}, d={d}"
        )));
    }
    let mut rc = ramanujan_r(a.value())?;
    if let Mutation::HolderConstant(f) = m {
        rc *= f;
    }
    Ok(((1.0 - 1.0 / k) * rc / 2.0 + d.ln() / k).exp())
}

/// `(x + y)/(1 + xy)`
pub fn tanh_sum(x: f64, y: f64) -> f64 {
    (x + y) / (1.0 + x * y)
}

/// Bounds around `(φ(r) + φ(s))/(1 + φ(r)φ(s))` with `φ = φ_K^a`, `K, p ≥ 1`:
/// the `p`-th power and `p`-th root transforms of the same sum.
pub fn power_addition_bounds(
    a: OrderParam,
    k: f64,
    p: f64,
    r: Radius,
    s: Radius,
    cfg: &EvalConfig,
) -> Result<BoundSides> {
    if !(p >= 1.0) {
        return Err(Error::domain(format!("p must be at least 1, got {p}")));
    }
    let root = |x: &Radius| -> Result<f64> {
        let sol = phi_solution(a, k, Radius::from_ln(p * x.ln())?, cfg)?;
        Ok((sol.log_s / p).exp())
    };
    let power = |x: &Radius| -> Result<f64> {
        let sol = phi_solution(a, k, Radius::from_ln(x.ln() / p)?, cfg)?;
        Ok((sol.log_s * p).exp())
    };
    let (lr, ls) = (root(&r)?, root(&s)?);
    let (ur, us) = (power(&r)?, power(&s)?);
    Ok(BoundSides::pair(tanh_sum(lr, ls), tanh_sum(ur, us)))
}

/// `φ_K^a((r+s)/(1+rs))`, the lower bound of the same sum from the
/// hyperbolic addition law.
pub fn moebius_bound(a: OrderParam, k: f64, r: Radius, s: Radius, cfg: &EvalConfig) -> Result<f64> {
    let (rv, sv) = (r.value(), s.value());
    let d = 1.0 + rv * sv;
    let arg = Radius::from_parts(
        (rv + sv) / d,
        r.complement_value() * s.complement_value() / d,
        ((rv + sv) / d).ln(),
        r.ln_complement() + s.ln_complement() - d.ln(),
    );
    Ok(phi_solution(a, k, arg, cfg)?.s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{lambda, mu};

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn rad(r: f64) -> Radius {
        Radius::new(r).unwrap()
    }

    fn op(a: f64) -> OrderParam {
        OrderParam::new(a).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        ((a - b) / b).abs() < tol
    }

    fn increasing(v: &[f64]) -> bool {
        v.windows(2).all(|w| w[0] < w[1])
    }

    #[test]
    fn artanh_log_chain_desk_check() {
        let c = cfg();
        let b = artanh_log_chain(2.0, rad(0.5), &c).unwrap();
        let k = ell_k(op(0.5), rad(0.5), &c).unwrap();
        let chain = b.chain_below_upper(k);
        let expect = [
            1.646_425_573_730_075,
            1.683_768_812_467_897,
            1.685_750_354_812_596,
            1.714_637_363_020_787_1,
        ];
        for (x, e) in chain.iter().zip(expect) {
            assert!(close(*x, e, 1e-13), "{chain:?}");
        }
        assert!(increasing(&chain));
        let b = artanh_log_chain(3.0, rad(0.7), &c).unwrap();
        assert!(increasing(
            &b.chain_below_upper(ell_k(op(1.0 / 3.0), rad(0.7), &c).unwrap())
        ));
        let b = artanh_log_chain(2.0, rad(1e-9), &c).unwrap();
        assert!(b.chain().iter().all(|x| close(*x, FRAC_PI_2, 1e-12)));
        assert!(artanh_log_chain(1.5, rad(0.5), &c).is_err());
    }

    #[test]
    fn artanh_bounds_values() {
        let b = artanh_bounds_k(0.5).unwrap();
        assert!(close(b.lower, 1.685_594_930_555_740_4, 1e-14));
        assert!(close(b.upper, 1.725_696_147_611_601_6, 1e-14));
        let b = artanh_bounds_k(0.9).unwrap();
        assert!(close(b.upper, 2.569_507_740_525_755_6, 1e-14));
        let b = artanh_bounds_k(1e-8).unwrap();
        assert!(close(b.lower, FRAC_PI_2, 1e-14) && close(b.upper, FRAC_PI_2, 1e-14));
    }

    #[test]
    fn mu_log_bounds_values() {
        let c = cfg();
        let b = mu_log_bounds(2.0, rad(0.5)).unwrap();
        assert!((b.lower - 1.9378).abs() < 1e-4, "{b:?}");
        assert!((b.upper - 2.1120).abs() < 1e-4, "{b:?}");
        let m = mu(op(0.5), rad(0.5), &c).unwrap();
        assert!(b.lower < m && m < b.upper);
        let b = mu_log_bounds(2.0, rad(FRAC_1_SQRT_2)).unwrap();
        assert!(b.lower < FRAC_PI_2 && FRAC_PI_2 < b.upper);
        for i in 1..100 {
            let b = mu_log_bounds(2.0, rad(f64::from(i) / 100.0)).unwrap();
            assert!(b.upper < 4.0 / PI * b.lower);
        }
    }

    #[test]
    fn mu_complement_bounds_bracket() {
        let c = cfg();
        for &(p, r) in &[(2.0, FRAC_1_SQRT_2), (2.0, 0.3), (4.0, 0.6)] {
            let b = mu_complement_bounds(p, rad(r), &c).unwrap();
            let m = mu(op(1.0 / p), rad(r).complement(), &c).unwrap();
            assert!(b.lower <= m && m <= b.upper, "p={p} r={r} {b:?} {m}");
            let printed = mu_complement_upper_single_p(p, rad(r), &c).unwrap();
            assert!(printed < m);
        }
    }

    #[test]
    fn cosh_radii() {
        let (x, y) = (0.7_f64, 1.9_f64);
        let r = rad(1.0 / x.cosh());
        let s = rad(1.0 / y.cosh());
        let sum = cosh_sum(r, s);
        assert!(close(sum.value(), 1.0 / (x + y).cosh(), 1e-14));
        assert!(close(sum.complement_value(), (x + y).tanh(), 1e-14));
        let mid = cosh_midpoint(r, s);
        assert!(close(mid.value(), 1.0 / ((x + y) / 2.0).cosh(), 1e-14));
        assert!(close(mid.complement_value(), ((x + y) / 2.0).tanh(), 1e-14));
    }

    #[test]
    fn k_addition_chain_ordered_with_equality_on_diagonal() {
        let c = cfg();
        for &(r, s) in &[(0.2, 0.7), (0.9, 0.05), (0.5, 0.5)] {
            let b = k_addition_chain(op(0.3), rad(r), rad(s), &c).unwrap();
            let v = ell_k(op(0.3), rad(r), &c).unwrap() + ell_k(op(0.3), rad(s), &c).unwrap();
            let chain = b.chain_above_lower(v);
            assert!(
                chain.windows(2).all(|w| w[0] <= w[1] * (1.0 + 1e-14)),
                "{chain:?}"
            );
            if r == s {
                assert!(close(chain[1], chain[2], 1e-14));
                assert!(chain[3] > chain[2]);
            }
        }
    }

    #[test]
    fn lambda_bounds_bracket() {
        let c = cfg();
        let t = lambda_rate(op(0.5), &c).unwrap();
        assert!((t - 4.3768).abs() < 1e-3, "t={t}");
        let b = lambda_bounds(op(0.5), 2.0, &c).unwrap();
        assert!(close(b.lower, PI.exp(), 1e-14));
        assert!(close(b.upper, t.exp(), 1e-14));
        let l = lambda(op(0.5), 2.0, &c).unwrap();
        assert!(b.lower < l && l < b.upper);
        let b = lambda_bounds(op(1.0 / 3.0), 1.5, &c).unwrap();
        let l = lambda(op(1.0 / 3.0), 1.5, &c).unwrap();
        assert!(b.lower < l && l < b.upper);
        let b = lambda_bounds(op(0.2), 1.0 + 1e-9, &c).unwrap();
        assert!(close(b.lower, 1.0, 1e-7) && close(b.upper, 1.0, 1e-7));
        assert!(lambda_bounds(op(0.2), 1.0, &c).is_err());
    }

    #[test]
    fn mu_symmetric_bounds_bracket() {
        let c = cfg();
        let r = rad(0.3);
        let b = mu_symmetric_bounds(op(0.5), r, &c).unwrap();
        let m = mu(op(0.5), r, &c).unwrap();
        assert!(b.doubled.lower < 2.0 * m && 2.0 * m < b.doubled.upper);
        let r = rad(0.5);
        let b = mu_symmetric_bounds(op(1.0 / 3.0), r, &c).unwrap();
        let d = mu(op(1.0 / 3.0), r, &c).unwrap() - mu(op(1.0 / 3.0), r.complement(), &c).unwrap();
        assert!(b.difference.lower < d && d < b.difference.upper);
        let b = mu_symmetric_bounds(op(0.2), rad(FRAC_1_SQRT_2 - 1e-12), &c).unwrap();
        assert!(b.difference.upper.abs() < 1e-10);
        let q = PI / op(0.2).sin_pi();
        assert!(close(b.doubled.lower, q, 1e-10));
        assert!(mu_symmetric_bounds(op(0.2), rad(0.8), &c).is_err());
    }

    #[test]
    fn tanh_bound_values() {
        assert!(close(tanh_lower_bound(2.0, 0.5).unwrap(), 0.8, 1e-15));
        assert!(close(tanh_lower_bound(3.0, 1e-9).unwrap(), 3e-9, 1e-9));
        assert_eq!(tanh_lower_bound(1.0, 0.42).unwrap(), 0.42);
    }

    #[test]
    fn holder_bound_reduces_at_unit_distortion() {
        assert!(close(holder_bound(op(0.3), 1.0, 0.4).unwrap(), 0.4, 1e-15));
        let m = holder_bound_with(op(0.3), 2.0, 0.4, Mutation::HolderConstant(0.5)).unwrap();
        assert!(m < holder_bound(op(0.3), 2.0, 0.4).unwrap());
    }

    #[test]
    fn pi_p_mutation_changes_only_general_p() {
        let c = cfg();
        let base = artanh_log_chain(2.0, rad(0.5), &c).unwrap();
        let mutated = artanh_log_chain_with(2.0, rad(0.5), &c, Mutation::PiPAsPi).unwrap();
        assert_eq!(base, mutated);
        let base = artanh_log_chain(3.0, rad(0.5), &c).unwrap();
        let mutated = artanh_log_chain_with(3.0, rad(0.5), &c, Mutation::PiPAsPi).unwrap();
        assert!(mutated.upper < base.upper);
    }
}
