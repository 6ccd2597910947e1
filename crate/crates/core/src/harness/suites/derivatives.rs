//! Closed-form derivatives against central finite differences.

use std::f64::consts::FRAC_1_SQRT_2;

use super::sides;
use crate::bounds::Mutation;
use crate::elliptic::{de_dr, dk_dr, ell_e, ell_k, OrderParam, Radius};
use crate::error::Result;
use crate::harness::checks::{product2, product3, rel_dev, within};
use crate::harness::registry::CheckDef;
use crate::harness::{par_rows, CheckOutput, Ctx, Row, FD_TOLERANCE, FORMS_TOLERANCE};
use crate::modular::{
    deta_dk, deta_dx, deta_dx_forms, dmu_dr, dphi_dk, dphi_dr, dphi_dr_forms, log_eta, mu,
    phi_solution,
};

pub(crate) const LEMMA_2_4: &[CheckDef] = &[
    CheckDef::deriv("2", fd_dk_dr),
    CheckDef::deriv("3", fd_de_dr),
    CheckDef::deriv("4", fd_dmu_dr),
    CheckDef::deriv("5", fd_dphi_dr),
    CheckDef::deriv("5_forms", phi_forms),
    CheckDef::deriv("6", fd_dphi_dk),
    CheckDef::deriv("7", fd_deta_dx),
    CheckDef::deriv("7_forms", eta_forms),
    CheckDef::deriv("8", fd_deta_dk),
];

/// Central difference with one Richardson step.
fn richardson(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let d = |h: f64| -> Result<f64> { Ok((f(x + h)? - f(x - h)?) / (2.0 * h)) };
    let (d1, d2) = (d(h)?, d(h / 2.0)?);
    Ok((4.0 * d2 - d1) / 3.0)
}

fn radius_step(ctx: &Ctx, r: f64) -> f64 {
    ctx.h.rel_step * r.min(1.0 - r)
}

fn fd_row(inputs: Vec<(&'static str, f64)>, closed: impl FnOnce() -> Result<(f64, f64)>) -> Row {
    Row::new(
        inputs,
        sides(|| {
            let (exact, fd) = closed()?;
            Ok(within(rel_dev(fd, exact), FD_TOLERANCE))
        }),
    )
}

fn ar(ctx: &Ctx) -> Vec<(f64, f64)> {
    product2(&ctx.grid.a_values(), &ctx.grid.r_values())
}

fn fd_dk_dr(ctx: &Ctx) -> CheckOutput {
    let flip = if ctx.mutation == Mutation::DkDrSignFlip {
        -1.0
    } else {
        1.0
    };
    par_rows(&ar(ctx), |&(a, r)| {
        fd_row(vec![("a", a), ("r", r)], || {
            let ap = OrderParam::new(a)?;
            let exact = flip * dk_dr(ap, Radius::new(r)?, ctx.cfg)?;
            let fd = richardson(
                |x| ell_k(ap, Radius::new(x)?, ctx.cfg),
                r,
                radius_step(ctx, r),
            )?;
            Ok((exact, fd))
        })
    })
    .into()
}

fn fd_de_dr(ctx: &Ctx) -> CheckOutput {
    par_rows(&ar(ctx), |&(a, r)| {
        fd_row(vec![("a", a), ("r", r)], || {
            let ap = OrderParam::new(a)?;
            let exact = de_dr(ap, Radius::new(r)?, ctx.cfg)?;
            let fd = richardson(
                |x| ell_e(ap, Radius::new(x)?, ctx.cfg),
                r,
                radius_step(ctx, r),
            )?;
            Ok((exact, fd))
        })
    })
    .into()
}

fn fd_dmu_dr(ctx: &Ctx) -> CheckOutput {
    par_rows(&ar(ctx), |&(a, r)| {
        fd_row(vec![("a", a), ("r", r)], || {
            let ap = OrderParam::new(a)?;
            let exact = dmu_dr(ap, Radius::new(r)?, ctx.cfg)?;
            let fd = richardson(|x| mu(ap, Radius::new(x)?, ctx.cfg), r, radius_step(ctx, r))?;
            Ok((exact, fd))
        })
    })
    .into()
}

fn akr(ctx: &Ctx) -> Vec<(f64, f64, f64)> {
    let g = ctx.grid;
    product3(&g.a_values(), &g.k_with_reciprocals(), &g.r_values())
}

/// Derivative of `φ` along one variable. `log s` is differenced, which stays
/// smooth where `s` itself varies exponentially; close to `s = 1` it is
/// `log s′` instead, converted with `ds = −(s′²/s) d log s′`.
fn phi_fd(ap: OrderParam, base: Radius, k: f64, ctx: &Ctx, along_k: bool) -> Result<f64> {
    let s = phi_solution(ap, k, base, ctx.cfg)?;
    let eval = |v: f64| -> Result<(f64, f64)> {
        let sol = if along_k {
            phi_solution(ap, v, base, ctx.cfg)?
        } else {
            phi_solution(ap, k, Radius::new(v)?, ctx.cfg)?
        };
        Ok((sol.log_s, sol.log_s_complement))
    };
    let (x, h) = if along_k {
        (k, ctx.h.rel_step * k)
    } else {
        (base.value(), radius_step(ctx, base.value()))
    };
    if s.s > FRAC_1_SQRT_2 {
        let dlc = richardson(|v| Ok(eval(v)?.1), x, h)?;
        Ok(-(s.s_complement * s.s_complement / s.s) * dlc)
    } else {
        Ok(s.s * richardson(|v| Ok(eval(v)?.0), x, h)?)
    }
}

fn fd_dphi_dr(ctx: &Ctx) -> CheckOutput {
    par_rows(&akr(ctx), |&(a, k, r)| {
        fd_row(vec![("a", a), ("K", k), ("r", r)], || {
            let ap = OrderParam::new(a)?;
            let rad = Radius::new(r)?;
            Ok((
                dphi_dr(ap, k, rad, ctx.cfg)?,
                phi_fd(ap, rad, k, ctx, false)?,
            ))
        })
    })
    .into()
}

fn fd_dphi_dk(ctx: &Ctx) -> CheckOutput {
    par_rows(&akr(ctx), |&(a, k, r)| {
        fd_row(vec![("a", a), ("K", k), ("r", r)], || {
            let ap = OrderParam::new(a)?;
            let rad = Radius::new(r)?;
            Ok((
                dphi_dk(ap, k, rad, ctx.cfg)?,
                phi_fd(ap, rad, k, ctx, true)?,
            ))
        })
    })
    .into()
}

fn max_pair_dev(v: [f64; 3]) -> f64 {
    let d = |x: f64, y: f64| rel_dev(x, y).abs();
    d(v[0], v[1]).max(d(v[1], v[2])).max(d(v[0], v[2]))
}

fn phi_forms(ctx: &Ctx) -> CheckOutput {
    par_rows(&akr(ctx), |&(a, k, r)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r)],
            sides(|| {
                let f = dphi_dr_forms(OrderParam::new(a)?, k, Radius::new(r)?, ctx.cfg)?;
                Ok(within(
                    max_pair_dev([f.first_kind, f.mixed, f.complementary]),
                    FORMS_TOLERANCE,
                ))
            }),
        )
    })
    .into()
}

fn akx(ctx: &Ctx) -> Vec<(f64, f64, f64)> {
    let g = ctx.grid;
    product3(&g.a_values(), &g.k_with_reciprocals(), &g.x_values())
}

/// `dη/dv = η · d(ln η)/dv`, differencing the logarithm.
fn fd_deta_dx(ctx: &Ctx) -> CheckOutput {
    par_rows(&akx(ctx), |&(a, k, x)| {
        fd_row(vec![("a", a), ("K", k), ("x", x)], || {
            let ap = OrderParam::new(a)?;
            let le = log_eta(ap, k, x, ctx.cfg)?;
            let dl = richardson(|v| log_eta(ap, k, v, ctx.cfg), x, ctx.h.rel_step * x)?;
            Ok((deta_dx(ap, k, x, ctx.cfg)?, le.exp() * dl))
        })
    })
    .into()
}

fn fd_deta_dk(ctx: &Ctx) -> CheckOutput {
    par_rows(&akx(ctx), |&(a, k, x)| {
        fd_row(vec![("a", a), ("K", k), ("x", x)], || {
            let ap = OrderParam::new(a)?;
            let le = log_eta(ap, k, x, ctx.cfg)?;
            let dl = richardson(|v| log_eta(ap, v, x, ctx.cfg), k, ctx.h.rel_step * k)?;
            Ok((deta_dk(ap, k, x, ctx.cfg)?, le.exp() * dl))
        })
    })
    .into()
}

fn eta_forms(ctx: &Ctx) -> CheckOutput {
    par_rows(&akx(ctx), |&(a, k, x)| {
        Row::new(
            vec![("a", a), ("K", k), ("x", x)],
            sides(|| {
                let f = deta_dx_forms(OrderParam::new(a)?, k, x, ctx.cfg)?;
                Ok(within(
                    max_pair_dev([f.first_kind, f.complementary, f.mixed]),
                    FORMS_TOLERANCE,
                ))
            }),
        )
    })
    .into()
}
