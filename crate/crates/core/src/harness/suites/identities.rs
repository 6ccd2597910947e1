//! Exact identities of the modulus and the distortion function.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::sides;
use crate::elliptic::{OrderParam, Radius};
use crate::harness::checks::{product2, product3, within};
use crate::harness::registry::CheckDef;
use crate::harness::{par_rows, CheckOutput, Ctx, Row};
use crate::modular::{mu, phi_solution};

pub(crate) const IDENTITY_TOL: f64 = 1e-9;

pub(crate) const IDENTITY_1_3: &[CheckDef] = &[CheckDef::identity("complement", complement)];

pub(crate) const MU_FUNCTIONAL: &[CheckDef] = &[
    CheckDef::identity("product", mu_product),
    CheckDef::identity("symmetric_point", mu_symmetric),
];

pub(crate) const PHI_COMPOSITION: &[CheckDef] = &[
    CheckDef::identity("composition", composition),
    CheckDef::identity("defining_equation", defining_equation),
];

/// `φ_K(r)² + φ_{1/K}(r′)² = 1`
fn complement(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let pts = product3(&g.a_values(), &g.k_with_reciprocals(), &g.r_values());
    par_rows(&pts, |&(a, k, r)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let s = phi_solution(ap, k, rad, ctx.cfg)?.s;
                let t = phi_solution(ap, 1.0 / k, rad.complement(), ctx.cfg)?.s;
                Ok(within(s * s + t * t - 1.0, IDENTITY_TOL))
            }),
        )
    })
    .into()
}

/// `μ(r)μ(r′) = (π/(2 sin πa))²`, relative.
fn mu_product(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let pts = product2(&g.a_values(), &g.r_values());
    par_rows(&pts, |&(a, r)| {
        Row::new(
            vec![("a", a), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let c = PI / (2.0 * ap.sin_pi());
                let lhs = mu(ap, rad, ctx.cfg)? * mu(ap, rad.complement(), ctx.cfg)?;
                Ok(within(lhs / (c * c) - 1.0, IDENTITY_TOL))
            }),
        )
    })
    .into()
}

/// `μ(1/√2) = π/(2 sin πa)`
fn mu_symmetric(ctx: &Ctx) -> CheckOutput {
    let pts = ctx.grid.a_values();
    par_rows(&pts, |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let c = PI / (2.0 * ap.sin_pi());
                Ok(within(
                    mu(ap, Radius::new(FRAC_1_SQRT_2)?, ctx.cfg)? / c - 1.0,
                    IDENTITY_TOL,
                ))
            }),
        )
    })
    .into()
}

/// `φ_A(φ_B(r)) = φ_{AB}(r)`, compared through `log s` and `log s′`.
fn composition(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let ks = g.k_with_reciprocals();
    let mut pts = Vec::new();
    for a in g.a_values() {
        for (ka, kb) in product2(&ks, &ks) {
            for r in g.r_values() {
                pts.push((a, ka, kb, r));
            }
        }
    }
    par_rows(&pts, |&(a, ka, kb, r)| {
        Row::new(
            vec![("a", a), ("A", ka), ("B", kb), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let inner = phi_solution(ap, kb, Radius::new(r)?, ctx.cfg)?;
                let twice = phi_solution(ap, ka, inner.radius(), ctx.cfg)?;
                let once = phi_solution(ap, ka * kb, Radius::new(r)?, ctx.cfg)?;
                let dev = (twice.log_s - once.log_s)
                    .abs()
                    .max((twice.log_s_complement - once.log_s_complement).abs());
                Ok(within(dev, IDENTITY_TOL))
            }),
        )
    })
    .into()
}

/// `K·μ(φ_K(r)) = μ(r)`, relative.
fn defining_equation(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let pts = product3(&g.a_values(), &g.k_with_reciprocals(), &g.r_values());
    par_rows(&pts, |&(a, k, r)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let s = phi_solution(ap, k, rad, ctx.cfg)?;
                let lhs = k * mu(ap, s.radius(), ctx.cfg)?;
                Ok(within(lhs / mu(ap, rad, ctx.cfg)? - 1.0, IDENTITY_TOL))
            }),
        )
    })
    .into()
}
