//! The modulus `μ_a`, its inverse, and the distortion functions built on it:
//! `φ_K^a`, `η_K^a`, `λ_a`, plus the three-parameter `μ_{a,b,c}`, `φ_K^{a,b,c}`.
//!
//! Inversion works in the variable `v = −ln r` on the branch `r ≤ 1/√2`,
//! where `μ` grows almost linearly in `v`. The other branch is reached
//! through `μ(r)·μ(r′) = μ(1/√2)²`.

use std::f64::consts::{FRAC_1_SQRT_2, LN_2, PI};

use crate::config::{EvalConfig, ModularSolveConfig};
use crate::elliptic::{ell_k, ell_kc, OrderParam, Radius, TriParam};
use crate::error::{Error, Result};
use crate::hypergeometric::{gauss_2f1, gauss_2f1_derivative, zero_balanced_scaled_derivative};
use crate::special::ramanujan_r2;

/// Root of a modular equation together with solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularSolution {
    pub s: f64,
    pub s_complement: f64,
    pub log_s: f64,
    pub log_s_complement: f64,
    /// `|μ(s) − target|`
    pub residual: f64,
    pub iterations: usize,
}

impl ModularSolution {
    pub fn radius(&self) -> Radius {
        Radius::from_parts(self.s, self.s_complement, self.log_s, self.log_s_complement)
    }
}

/// Parameters of `μ_{a,b,c}` with the normalization `B(a, b)/2`.
#[derive(Debug, Clone, Copy)]
struct Family {
    a: f64,
    b: f64,
    c: f64,
    half_beta: f64,
}

impl Family {
    fn order(a: OrderParam) -> Self {
        // B(a, 1−a)/2 = π/(2 sin πa), taken in closed form
        Self {
            a: a.value(),
            b: 1.0 - a.value(),
            c: 1.0,
            half_beta: a.mu_scale(),
        }
    }

    fn tri(t: &TriParam) -> Result<Self> {
        Ok(Self {
            a: t.a(),
            b: t.b(),
            c: t.c(),
            half_beta: t.half_beta()?,
        })
    }

    /// `μ(1/√2)`
    fn center(&self) -> f64 {
        self.half_beta
    }

    fn value(&self, r: &Radius, cfg: &EvalConfig) -> Result<f64> {
        require_open(r)?;
        let f = gauss_2f1(&r.squared_args(self.a, self.b, self.c), cfg)?;
        let fc = gauss_2f1(&r.complement().squared_args(self.a, self.b, self.c), cfg)?;
        Ok(self.half_beta * fc / f)
    }

    /// `dμ/dv` with `v = −ln r`; positive.
    fn d_dv(&self, r: &Radius, cfg: &EvalConfig) -> Result<f64> {
        let (a, b, c) = (self.a, self.b, self.c);
        let args = r.squared_args(a, b, c);
        let cargs = r.complement().squared_args(a, b, c);
        let f = gauss_2f1(&args, cfg)?;
        let fc = gauss_2f1(&cargs, cfg)?;
        // r²·F′(r′²) stays finite as r → 0
        let wdfc = zero_balanced_scaled_derivative(&cargs, cfg)?;
        let zdf = args.z() * gauss_2f1_derivative(&args, cfg)?;
        Ok(self.half_beta * 2.0 * (wdfc * f + fc * zdf) / (f * f))
    }

    /// Solve `μ(s) = y` for `y > 0`.
    fn solve(&self, y: f64, cfg: &EvalConfig, sc: &ModularSolveConfig) -> Result<ModularSolution> {
        if !(y > 0.0 && y.is_finite()) {
            return Err(Error::domain(format!(
                "modulus value must be positive and finite, got {y}"
            )));
        }
        let c0 = self.center();
        let target = if y >= c0 { y } else { c0 * (c0 / y) };
        let (t, iterations) = self.solve_small_branch(target, cfg, sc)?;
        let s = if y >= c0 { t } else { t.complement() };
        let residual = (self.value(&s, cfg)? - y).abs();
        Ok(ModularSolution {
            s: s.value(),
            s_complement: s.complement_value(),
            log_s: s.ln(),
            log_s_complement: s.ln_complement(),
            residual,
            iterations,
        })
    }

    /// Newton on `v = −ln r` for `y ≥ μ(1/√2)`, kept inside a bracket and
    /// falling back to bisection when a step leaves it.
    fn solve_small_branch(
        &self,
        y: f64,
        cfg: &EvalConfig,
        sc: &ModularSolveConfig,
    ) -> Result<(Radius, usize)> {
        let v_min = 0.5 * LN_2;
        let at = |v: f64| -> Result<Radius> {
            if v == v_min {
                Ok(Radius::from_pair(FRAC_1_SQRT_2, FRAC_1_SQRT_2))
            } else {
                Radius::from_ln(-v)
            }
        };
        let g = |v: f64| -> Result<f64> { Ok(self.value(&at(v)?, cfg)? - y) };
        // μ ≈ R(a, b)/2 + v for small r
        let r_const = ramanujan_r2(self.a, self.b)?;
        let mut lo = v_min;
        let mut hi = (-sc.bracket_floor.ln()).max(v_min + 1.0);
        if g(lo)? >= 0.0 {
            return Ok((at(lo)?, 0));
        }
        let mut grow = 1.0;
        while g(hi)? < 0.0 {
            lo = hi;
            hi += grow * hi.max(1.0);
            grow *= 2.0;
            if !hi.is_finite() {
                return Err(Error::NonConvergence(format!(
                    "no bracket for modulus value {y}"
                )));
            }
        }
        let mut v = (y - 0.5 * r_const).clamp(lo, hi);
        for it in 1..=sc.max_iters {
            let r = at(v)?;
            let gv = self.value(&r, cfg)? - y;
            if gv == 0.0 {
                return Ok((r, it));
            }
            if gv < 0.0 {
                lo = lo.max(v);
            } else {
                hi = hi.min(v);
            }
            let slope = self.d_dv(&r, cfg)?;
            let mut next = v - gv / slope;
            if !(next > lo && next < hi) || !next.is_finite() {
                next = 0.5 * (lo + hi);
            }
            let step = (next - v).abs();
            v = next;
            if step <= sc.abs_tol * 1e-2 * v.max(1.0) || hi - lo <= 4.0 * f64::EPSILON * v.max(1.0)
            {
                return Ok((at(v)?, it));
            }
        }
        Err(Error::NonConvergence(format!(
            "modulus inversion for {y} did not converge in {} iterations",
            sc.max_iters
        )))
    }
}

fn require_open(r: &Radius) -> Result<()> {
    if r.is_interior() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "r must lie in (0, 1), got {}",
            r.value()
        )))
    }
}

fn require_positive(name: &str, k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{name} must be positive and finite, got {k}"
        )))
    }
}

/// `μ_a(r) = (π/(2 sin πa))·K_a(r′)/K_a(r)`.
pub fn mu(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    Family::order(a).value(&r, cfg)
}

/// `dμ_a/dr = −π²/(4 r r′² K_a(r)²)`.
pub fn dmu_dr(a: OrderParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    require_open(&r)?;
    let k = ell_k(a, r, cfg)?;
    let rc = r.complement_value();
    Ok(-PI * PI / (4.0 * r.value() * rc * rc * k * k))
}

/// `μ_a⁻¹(y)` for `y > 0`.
pub fn mu_inv(
    a: OrderParam,
    y: f64,
    cfg: &EvalConfig,
    sc: &ModularSolveConfig,
) -> Result<ModularSolution> {
    sc.validate()?;
    Family::order(a).solve(y, cfg, sc)
}

/// Solution `s = φ_K^a(r) = μ_a⁻¹(μ_a(r)/K)` with diagnostics.
pub fn phi_solution(a: OrderParam, k: f64, r: Radius, cfg: &EvalConfig) -> Result<ModularSolution> {
    require_positive("K", k)?;
    let fam = Family::order(a);
    if k == 1.0 {
        require_open(&r)?;
        return Ok(identity_solution(&r));
    }
    let y = fam.value(&r, cfg)? / k;
    fam.solve(y, cfg, &cfg.solver())
}

fn identity_solution(r: &Radius) -> ModularSolution {
    ModularSolution {
        s: r.value(),
        s_complement: r.complement_value(),
        log_s: r.ln(),
        log_s_complement: r.ln_complement(),
        residual: 0.0,
        iterations: 0,
    }
}

/// `φ_K^a(r)`.
pub fn phi(a: OrderParam, k: f64, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    Ok(phi_solution(a, k, r, cfg)?.s)
}

/// The three printed forms of `dφ_K^a/dr`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiSlopeForms {
    pub first_kind: f64,
    pub mixed: f64,
    pub complementary: f64,
}

/// `dφ_K^a/dr` in its three equivalent forms; `s = φ_K^a(r)`.
pub fn dphi_dr_forms(a: OrderParam, k: f64, r: Radius, cfg: &EvalConfig) -> Result<PhiSlopeForms> {
    let s = phi_solution(a, k, r, cfg)?.radius();
    let (ks, kcs) = (ell_k(a, s, cfg)?, ell_kc(a, s, cfg)?);
    let (kr, kcr) = (ell_k(a, r, cfg)?, ell_kc(a, r, cfg)?);
    let num = s.value() * s.complement_value().powi(2);
    let den = r.value() * r.complement_value().powi(2);
    let q = num / den;
    Ok(PhiSlopeForms {
        first_kind: q * (ks / kr).powi(2) / k,
        mixed: q * (ks * kcs) / (kr * kcr),
        complementary: k * q * (kcs / kcr).powi(2),
    })
}

/// `dφ_K^a/dr`.
pub fn dphi_dr(a: OrderParam, k: f64, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    Ok(dphi_dr_forms(a, k, r, cfg)?.mixed)
}

/// `dφ_K^a/dK = 4 s s′² K_a(s)² μ_a(r)/(π² K²)`.
pub fn dphi_dk(a: OrderParam, k: f64, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    let s = phi_solution(a, k, r, cfg)?.radius();
    let ks = ell_k(a, s, cfg)?;
    let m = mu(a, r, cfg)?;
    let sc = s.complement_value();
    Ok(4.0 * s.value() * sc * sc * ks * ks * m / (PI * PI * k * k))
}

/// `ln η_K^a(x) = 2 ln(s/s′)` with `s = φ_K^a(√(x/(1+x)))`.
pub fn log_eta(a: OrderParam, k: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let r = Radius::from_ratio(x)?;
    let s = phi_solution(a, k, r, cfg)?;
    if k == 1.0 {
        return Ok(x.ln());
    }
    Ok(2.0 * (s.log_s - s.log_s_complement))
}

/// `η_K^a(x) = (s/s′)²`.
pub fn eta(a: OrderParam, k: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if k == 1.0 {
        require_positive("x", x)?;
        return Ok(x);
    }
    Ok(log_eta(a, k, x, cfg)?.exp())
}

/// The three printed forms of `dη_K^a/dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaSlopeForms {
    pub first_kind: f64,
    pub complementary: f64,
    pub mixed: f64,
}

/// `dη_K^a/dx` in its three equivalent forms.
pub fn deta_dx_forms(a: OrderParam, k: f64, x: f64, cfg: &EvalConfig) -> Result<EtaSlopeForms> {
    let r = Radius::from_ratio(x)?;
    let s = phi_solution(a, k, r, cfg)?.radius();
    let (ks, kcs) = (ell_k(a, s, cfg)?, ell_kc(a, s, cfg)?);
    let (kr, kcr) = (ell_k(a, r, cfg)?, ell_kc(a, r, cfg)?);
    // (r′s/(r s′))² in logs
    let q = (2.0 * (r.ln_complement() + s.ln() - r.ln() - s.ln_complement())).exp();
    Ok(EtaSlopeForms {
        first_kind: q * (ks / kr).powi(2) / k,
        complementary: k * q * (kcs / kcr).powi(2),
        mixed: q * (ks * kcs) / (kr * kcr),
    })
}

/// `dη_K^a/dx`.
pub fn deta_dx(a: OrderParam, k: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(deta_dx_forms(a, k, x, cfg)?.mixed)
}

/// `dη_K^a/dK = 8 η μ_a(r) K_a(s)²/(π² K²)`.
pub fn deta_dk(a: OrderParam, k: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let r = Radius::from_ratio(x)?;
    let sol = phi_solution(a, k, r, cfg)?;
    let s = sol.radius();
    let ks = ell_k(a, s, cfg)?;
    let m = mu(a, r, cfg)?;
    let eta = (2.0 * (sol.log_s - sol.log_s_complement)).exp();
    Ok(8.0 * eta * m * ks * ks / (PI * PI * k * k))
}

/// `ln λ_a(K) = 2 ln(φ_K^a(1/√2)/φ_{1/K}^a(1/√2))`.
pub fn log_lambda(a: OrderParam, k: f64, cfg: &EvalConfig) -> Result<f64> {
    require_positive("K", k)?;
    let center = Radius::from_pair(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    let s = phi_solution(a, k, center, cfg)?;
    let t = phi_solution(a, 1.0 / k, center, cfg)?;
    Ok(2.0 * (s.log_s - t.log_s))
}

/// `λ_a(K)` from the ratio form.
pub fn lambda(a: OrderParam, k: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(log_lambda(a, k, cfg)?.exp())
}

/// `λ_a(K)` from the form `η_K^a(1)`.
pub fn lambda_via_eta(a: OrderParam, k: f64, cfg: &EvalConfig) -> Result<f64> {
    eta(a, k, 1.0, cfg)
}

/// `μ_{a,b,c}(r) = B(a, b) F(a, b; c; r′²) / (2 F(a, b; c; r²))`.
pub fn mu3(t: &TriParam, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    Family::tri(t)?.value(&r, cfg)
}

fn zero_balanced_family(t: &TriParam) -> Result<Family> {
    if !t.is_zero_balanced() {
        return Err(Error::UnsupportedRegime(format!(
            "inverting mu_(a,b,c) needs c = a + b, got ({}, {}, {})",
            t.a(),
            t.b(),
            t.c()
        )));
    }
    Family::tri(t)
}

/// `μ_{a,b,c}⁻¹(y)`, zero-balanced triples only.
pub fn mu3_inv(
    t: &TriParam,
    y: f64,
    cfg: &EvalConfig,
    sc: &ModularSolveConfig,
) -> Result<ModularSolution> {
    sc.validate()?;
    zero_balanced_family(t)?.solve(y, cfg, sc)
}

/// `φ_K^{a,b,c}(r)` with diagnostics, zero-balanced triples only.
pub fn phi3_solution(t: &TriParam, k: f64, r: Radius, cfg: &EvalConfig) -> Result<ModularSolution> {
    require_positive("K", k)?;
    let fam = zero_balanced_family(t)?;
    if k == 1.0 {
        require_open(&r)?;
        return Ok(identity_solution(&r));
    }
    let y = fam.value(&r, cfg)? / k;
    fam.solve(y, cfg, &cfg.solver())
}

/// `φ_K^{a,b,c}(r) = μ_{a,b,c}⁻¹(μ_{a,b,c}(r)/K)`.
pub fn phi3(t: &TriParam, k: f64, r: Radius, cfg: &EvalConfig) -> Result<f64> {
    Ok(phi3_solution(t, k, r, cfg)?.s)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_GRID: [f64; 5] = [0.05, 0.1, 0.2, 1.0 / 3.0, 0.5];

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn op(a: f64) -> OrderParam {
        OrderParam::new(a).unwrap()
    }

    fn rad(r: f64) -> Radius {
        Radius::new(r).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn center() -> Radius {
        Radius::from_pair(FRAC_1_SQRT_2, FRAC_1_SQRT_2)
    }

    #[test]
    fn mu_at_center_and_oracle() {
        let c = cfg();
        for &a in &A_GRID {
            let v = mu(op(a), center(), &c).unwrap();
            assert!(rel(v, PI / (2.0 * (PI * a).sin())) < 1e-15);
        }
        let v = mu(op(0.5), rad(0.5), &c).unwrap();
        assert!(rel(v, 2.009_459_377_005_285_2) < 1e-14);
        assert!(v > 1.9378 && v < 2.1120);
        assert!(mu(op(0.5), rad(0.0), &c).is_err());
        assert!(mu(op(0.5), rad(1.0), &c).is_err());
    }

    #[test]
    fn mu_decreasing_and_functional_identity() {
        let c = cfg();
        for &a in &A_GRID {
            let c0 = op(a).mu_scale();
            let mut prev = f64::INFINITY;
            for i in 1..100 {
                let r = rad(f64::from(i) / 100.0);
                let m = mu(op(a), r, &c).unwrap();
                assert!(m < prev);
                prev = m;
                let mc = mu(op(a), r.complement(), &c).unwrap();
                assert!(rel(m * mc, c0 * c0) < 1e-13, "a={a} r={}", r.value());
            }
        }
    }

    #[test]
    fn dmu_dr_matches_general_slope_and_differences() {
        let c = cfg();
        for &a in &A_GRID {
            let fam = Family::order(op(a));
            for &r in &[1e-3_f64, 0.05, 0.3, 0.5, 0.9, 0.999] {
                let closed = dmu_dr(op(a), rad(r), &c).unwrap();
                let general = -fam.d_dv(&rad(r), &c).unwrap() / r;
                assert!(rel(closed, general) < 1e-12, "a={a} r={r}");
                let h = 1e-6 * r.min(1.0 - r);
                let fd = (mu(op(a), rad(r + h), &c).unwrap() - mu(op(a), rad(r - h), &c).unwrap())
                    / (2.0 * h);
                assert!(rel(closed, fd) < 1e-6, "a={a} r={r}");
                assert!(closed < 0.0);
            }
        }
    }

    #[test]
    fn mu_inverse_round_trip() {
        let c = cfg();
        let sc = ModularSolveConfig::default();
        for &a in &A_GRID {
            for &r in &[1e-3, 0.01, 0.3, FRAC_1_SQRT_2, 0.9, 0.999] {
                let y = mu(op(a), rad(r), &c).unwrap();
                let sol = mu_inv(op(a), y, &c, &sc).unwrap();
                assert!((sol.s - r).abs() <= 1e-12, "a={a} r={r} got {}", sol.s);
                assert!(sol.residual <= sc.abs_tol * y.max(1.0));
            }
            let sol = mu_inv(op(a), op(a).mu_scale(), &c, &sc).unwrap();
            assert!((sol.s - FRAC_1_SQRT_2).abs() < 1e-15);
        }
    }

    #[test]
    fn mu_inverse_extremes() {
        let c = cfg();
        let sc = ModularSolveConfig::default();
        for &a in &A_GRID {
            for &y in &[1e-6, 1e-3, 0.5, 3.0, 40.0, 1e3, 1e6] {
                let sol = mu_inv(op(a), y, &c, &sc).unwrap();
                assert!(
                    sol.residual <= sc.abs_tol * y.max(1.0),
                    "a={a} y={y} res={}",
                    sol.residual
                );
                assert!((sol.log_s.exp() - sol.s).abs() <= 1e-15);
            }
        }
        // μ(r) = π gives μ(r′) = π/4 through the functional identity
        let sol = mu_inv(op(0.5), PI, &c, &sc).unwrap();
        let m = mu(op(0.5), sol.radius().complement(), &c).unwrap();
        assert!(rel(m, PI / 4.0) < 1e-12);
        assert!(mu_inv(op(0.5), 0.0, &c, &sc).is_err());
        assert!(mu_inv(op(0.5), -1.0, &c, &sc).is_err());
    }

    #[test]
    fn mu_inverse_reports_non_convergence() {
        let c = cfg();
        let sc = ModularSolveConfig {
            max_iters: 1,
            ..Default::default()
        };
        assert!(matches!(
            mu_inv(op(0.3), 2.5, &c, &sc),
            Err(Error::NonConvergence(_))
        ));
    }

    #[test]
    fn landen_values() {
        let c = cfg();
        let s = phi(op(0.5), 2.0, center(), &c).unwrap();
        let exact = 2f64.powf(1.25) / (1.0 + 2f64.sqrt());
        assert!(rel(s, exact) < 1e-13);
        assert!(rel(s, 0.985_171_431_009_416) < 1e-14);
        // degree-two equation μ(s) = 2μ(r) at r = 1/√2
        let t = phi(op(0.5), 0.5, center(), &c).unwrap();
        assert!(rel(t, (1.0 - exact * exact).sqrt()) < 1e-12);
        assert!(rel(t, 3.0 - 2.0 * 2f64.sqrt()) < 1e-12);
        // φ_2(r) = 2√r/(1+r)
        for &r in &[0.01, 0.3, 0.8] {
            let v = phi(op(0.5), 2.0, rad(r), &c).unwrap();
            assert!(rel(v, 2.0 * r.sqrt() / (1.0 + r)) < 1e-13);
        }
        let lam = 16.0 + 12.0 * 2f64.sqrt();
        assert!(rel(lambda(op(0.5), 2.0, &c).unwrap(), lam) < 1e-12);
        assert!(rel(lambda_via_eta(op(0.5), 2.0, &c).unwrap(), lam) < 1e-12);
        assert!(rel(eta(op(0.5), 2.0, 1.0, &c).unwrap(), lam) < 1e-12);
    }

    #[test]
    fn phi_identities() {
        let c = cfg();
        for &a in &A_GRID {
            for &k in &[0.1, 0.5, 1.1, 2.0, 10.0] {
                for &r in &[1e-3, 0.2, 0.6, 0.95, 0.999] {
                    let r = rad(r);
                    let s = phi_solution(op(a), k, r, &c).unwrap();
                    let t = phi(op(a), 1.0 / k, r.complement(), &c).unwrap();
                    assert!((s.s * s.s + t * t - 1.0).abs() < 1e-12, "a={a} k={k}");
                    let back = phi(op(a), 1.0 / k, s.radius(), &c).unwrap();
                    assert!((back - r.value()).abs() < 1e-11);
                    let two = phi(op(a), 2.0, s.radius(), &c).unwrap();
                    assert!((two - phi(op(a), 2.0 * k, r, &c).unwrap()).abs() < 1e-11);
                }
            }
            assert_eq!(phi(op(a), 1.0, rad(0.37), &c).unwrap(), 0.37);
            assert_eq!(eta(op(a), 1.0, 2.5, &c).unwrap(), 2.5);
            assert_eq!(lambda(op(a), 1.0, &c).unwrap(), 1.0);
            let l = lambda(op(a), 3.0, &c).unwrap();
            assert!(rel(lambda(op(a), 1.0 / 3.0, &c).unwrap(), 1.0 / l) < 1e-12);
            assert!(rel(lambda_via_eta(op(a), 3.0, &c).unwrap(), l) < 1e-9);
        }
        assert!(phi(op(0.5), 0.0, rad(0.5), &c).is_err());
        assert!(eta(op(0.5), 2.0, 0.0, &c).is_err());
    }

    /// Central difference of `s`, taken on `s′` when `s` is close to one.
    fn central(f: impl Fn(f64) -> ModularSolution, x: f64, h: f64) -> f64 {
        let (lo, mid, hi) = (f(x - h), f(x), f(x + h));
        if mid.s <= FRAC_1_SQRT_2 {
            (hi.s - lo.s) / (2.0 * h)
        } else {
            -(mid.s_complement / mid.s) * (hi.s_complement - lo.s_complement) / (2.0 * h)
        }
    }

    #[test]
    fn phi_slope_forms_agree_and_match_differences() {
        let c = cfg();
        for &a in &A_GRID {
            for &k in &[0.5, 1.0, 2.0, 4.0] {
                for &r in &[0.05f64, 0.5, 0.9] {
                    let f = dphi_dr_forms(op(a), k, rad(r), &c).unwrap();
                    assert!(
                        rel(f.first_kind, f.mixed) < 1e-9 && rel(f.complementary, f.mixed) < 1e-9
                    );
                    let h = 1e-5 * r.min(1.0 - r);
                    let fd = central(|x| phi_solution(op(a), k, rad(x), &c).unwrap(), r, h);
                    assert!(rel(f.mixed, fd) < 1e-5, "a={a} k={k} r={r} {f:?} {fd}");
                    let h = 1e-5 * k;
                    let fd = central(|kk| phi_solution(op(a), kk, rad(r), &c).unwrap(), k, h);
                    assert!(
                        rel(dphi_dk(op(a), k, rad(r), &c).unwrap(), fd) < 1e-5,
                        "a={a} k={k} r={r}"
                    );
                }
            }
        }
        assert!(rel(dphi_dr(op(0.3), 1.0, rad(0.4), &c).unwrap(), 1.0) < 1e-14);
    }

    #[test]
    fn eta_slopes() {
        let c = cfg();
        for &a in &[0.1, 0.5] {
            for &k in &[0.5, 2.0] {
                for &x in &[0.01, 1.0, 50.0] {
                    let f = deta_dx_forms(op(a), k, x, &c).unwrap();
                    assert!(
                        rel(f.first_kind, f.mixed) < 1e-9 && rel(f.complementary, f.mixed) < 1e-9
                    );
                    let h = 1e-5 * x;
                    let fd = (eta(op(a), k, x + h, &c).unwrap()
                        - eta(op(a), k, x - h, &c).unwrap())
                        / (2.0 * h);
                    assert!(rel(f.mixed, fd) < 1e-6);
                    let h = 1e-5 * k;
                    let fd = (eta(op(a), k + h, x, &c).unwrap()
                        - eta(op(a), k - h, x, &c).unwrap())
                        / (2.0 * h);
                    assert!(rel(deta_dk(op(a), k, x, &c).unwrap(), fd) < 1e-6);
                }
            }
        }
    }

    #[test]
    fn three_parameter_modulus() {
        let c = cfg();
        let sc = ModularSolveConfig::default();
        let classical = TriParam::for_modulus(0.5, 0.5, 1.0).unwrap();
        for &r in &[0.01, 0.4, 0.9] {
            assert!(
                rel(
                    mu3(&classical, rad(r), &c).unwrap(),
                    mu(op(0.5), rad(r), &c).unwrap()
                ) < 1e-14
            );
        }
        for &(a, cc) in &[(0.25, 0.5), (0.3, 0.8), (0.1, 1.0)] {
            let t = TriParam::two_param(a, cc).unwrap();
            let hb = t.half_beta().unwrap();
            assert!(rel(mu3(&t, center(), &c).unwrap(), hb) < 1e-14);
            assert_eq!(phi3(&t, 1.0, rad(0.3), &c).unwrap(), 0.3);
            let mut prev = f64::INFINITY;
            for i in 1..40 {
                let r = rad(f64::from(i) / 40.0);
                let m = mu3(&t, r, &c).unwrap();
                assert!(m < prev);
                prev = m;
                let sol = mu3_inv(&t, m, &c, &sc).unwrap();
                assert!((sol.s - r.value()).abs() < 1e-12);
            }
            let fam = Family::tri(&t).unwrap();
            let r = 0.4;
            let h = 1e-6;
            let dv = fam.d_dv(&rad(r), &c).unwrap();
            let fd =
                (mu3(&t, rad(r + h), &c).unwrap() - mu3(&t, rad(r - h), &c).unwrap()) / (2.0 * h);
            assert!(rel(-dv / r, fd) < 1e-7);
            let s = phi3(&t, 2.0, rad(0.4), &c).unwrap();
            assert!(
                rel(
                    mu3(&t, rad(s), &c).unwrap(),
                    mu3(&t, rad(0.4), &c).unwrap() / 2.0
                ) < 1e-12
            );
        }
        let unbalanced = TriParam::for_modulus(0.5, 0.7, 1.0).unwrap();
        assert!(mu3(&unbalanced, rad(0.5), &c).is_ok());
        assert!(matches!(
            mu3_inv(&unbalanced, 1.0, &c, &sc),
            Err(Error::UnsupportedRegime(_))
        ));
        assert!(matches!(
            phi3(&unbalanced, 2.0, rad(0.5), &c),
            Err(Error::UnsupportedRegime(_))
        ));
    }
}
