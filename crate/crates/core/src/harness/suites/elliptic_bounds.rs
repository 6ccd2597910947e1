//! Bounds for the generalized elliptic integrals and the modulus `μ_a`.

use std::f64::consts::{FRAC_PI_2, PI};

use super::sides;
use crate::bounds::{
    artanh_log_chain_with, cosh_midpoint, geometric_mean_radius, k_addition_chain,
    k_addition_middle_variant, mu_complement_bounds, mu_complement_upper_single_p,
    mu_log_bounds_with, power_mean_chain, PowerChain,
};
use crate::elliptic::{ell_e, ell_k, ell_kc, OrderParam, Radius};
use crate::error::Result;
use crate::harness::checks::{
    collect, concave, onto_decreasing, onto_increasing, product2, product3, rel_dev, sech_radius,
    within,
};
use crate::harness::registry::CheckDef;
use crate::harness::{par_rows, CheckOutput, Ctx, Row};
use crate::hypergeometric::{gauss_2f1, is_balanced, zero_balanced_ratio, HypArgs};
use crate::modular::{mu, phi_solution};
use crate::special::beta;

pub(crate) const THM_1_5: &[CheckDef] = &[
    CheckDef::ineq("1", power_mean_f),
    CheckDef::ineq("2", power_mean_k),
    CheckDef::ineq("3", power_mean_e),
    CheckDef::shape("decreasing_in_p", power_mean_monotone),
];

pub(crate) const THM_1_7: &[CheckDef] = &[CheckDef::ineq("chain", thm17_chain)];

pub(crate) const THM_1_8: &[CheckDef] = &[
    CheckDef::ineq("chain", k_addition),
    CheckDef::ineq("geometric_upper", k_addition_geometric),
    CheckDef::identity("equality", k_addition_equality),
    CheckDef::shape("f_shape", sech_reciprocal_shape),
];

pub(crate) const THM_1_9: &[CheckDef] = &[
    CheckDef::ineq("1", mu_two_sided),
    CheckDef::ineq("2", mu_bound_ratio),
];

pub(crate) const POST_2_9: &[CheckDef] = &[CheckDef::ineq("bracket", mu_complement_bracket)];

pub(crate) const LEMMA_2_3: &[CheckDef] = &[
    CheckDef::shape("1", ratio_first_kind),
    CheckDef::shape("2", ratio_complementary),
    CheckDef::shape("3", weighted_k_decreasing),
    CheckDef::shape("3_necessity", weighted_k_not_monotone),
];

pub(crate) const LEMMA_2_5: &[CheckDef] = &[CheckDef::shape("monotone", zero_balanced_ratio_shape)];

pub(crate) const LEMMA_2_10: &[CheckDef] = &[
    CheckDef::ineq("1", product_k),
    CheckDef::ineq("2", product_e),
];

struct Triple {
    a: f64,
    b: f64,
    c: f64,
}

const EXTRA_TRIPLES: [Triple; 7] = [
    Triple {
        a: 0.3,
        b: 0.9,
        c: 1.2,
    },
    Triple {
        a: 1.0,
        b: 2.0,
        c: 3.0,
    },
    Triple {
        a: 2.5,
        b: 0.5,
        c: 3.0,
    },
    Triple {
        a: 0.5,
        b: 0.5,
        c: 1.5,
    },
    Triple {
        a: 1.0,
        b: 1.5,
        c: 4.0,
    },
    Triple {
        a: 0.5,
        b: 0.5,
        c: 0.75,
    },
    Triple {
        a: 1.5,
        b: 1.5,
        c: 2.0,
    },
];

fn triples(ctx: &Ctx) -> Vec<(f64, f64, f64)> {
    let mut v: Vec<(f64, f64, f64)> = ctx
        .grid
        .a_values()
        .into_iter()
        .map(|a| (a, 1.0 - a, 1.0))
        .collect();
    v.extend(EXTRA_TRIPLES.iter().map(|t| (t.a, t.b, t.c)));
    v
}

fn hyp(a: f64, b: f64, c: f64, x: &Radius, ctx: &Ctx) -> Result<f64> {
    gauss_2f1(
        &HypArgs::with_complement(a, b, c, 1.0 - x.value())?,
        ctx.cfg,
    )
}

/// Away from zero balance `F` is only summed below the near-one switch.
fn usable(a: f64, b: f64, c: f64, x: f64, ctx: &Ctx) -> bool {
    is_balanced(a, b, c) || x <= ctx.cfg.near_one_switch
}

fn power_mean_f(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let mut pts = Vec::new();
    for (a, b, c) in triples(ctx) {
        for (p, r) in product2(&g.p_values(), &g.r_values()) {
            if usable(a, b, c, r.powf(1.0 / p), ctx) {
                pts.push((a, b, c, p, r));
            }
        }
    }
    par_rows(&pts, |&(a, b, c, p, r)| {
        Row::new(
            vec![("a", a), ("b", b), ("c", c), ("p", p), ("r", r)],
            sides(|| {
                let rad = Radius::new(r)?;
                let bs = power_mean_chain(PowerChain::Hypergeometric { a, b, c }, rad, p, ctx.cfg)?;
                Ok(bs.chain_above_lower(hyp(a, b, c, &rad, ctx)?))
            }),
        )
    })
    .into()
}

fn power_mean_k(ctx: &Ctx) -> CheckOutput {
    power_mean_kind(ctx, true)
}

fn power_mean_e(ctx: &Ctx) -> CheckOutput {
    power_mean_kind(ctx, false)
}

fn power_mean_kind(ctx: &Ctx, first: bool) -> CheckOutput {
    let g = ctx.grid;
    let pts = product3(&g.a_values(), &g.p_values(), &g.r_values());
    par_rows(&pts, |&(a, p, r)| {
        Row::new(
            vec![("a", a), ("p", p), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let (which, value) = if first {
                    (PowerChain::FirstKind(ap), ell_k(ap, rad, ctx.cfg)?)
                } else {
                    (PowerChain::SecondKind(ap), ell_e(ap, rad, ctx.cfg)?)
                };
                Ok(power_mean_chain(which, rad, p, ctx.cfg)?.chain_above_lower(value))
            }),
        )
    })
    .into()
}

/// `p ↦ F(a, b; c; r^p)^{1/p}` is decreasing, in logarithms.
fn power_mean_monotone(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let mut ps = vec![0.25, 0.5, 1.0];
    ps.extend(g.p_values());
    ps.sort_by(f64::total_cmp);
    ps.dedup();
    let mut pts = Vec::new();
    for (a, b, c) in triples(ctx) {
        for r in g.r_values() {
            let worst = r.powf(ps[0]);
            if usable(a, b, c, worst, ctx) {
                pts.push((a, b, c, r));
            }
        }
    }
    par_rows(&pts, |&(a, b, c, r)| {
        Row::new(
            vec![("a", a), ("b", b), ("c", c), ("r", r)],
            sides(|| {
                let rad = Radius::new(r)?;
                let vals = collect(ps.iter().map(|&p| {
                    let x = Radius::from_ln(p * rad.ln())?;
                    Ok(hyp(a, b, c, &x, ctx)?.ln() / p)
                }))?;
                Ok(onto_decreasing(f64::NEG_INFINITY, &vals, f64::INFINITY))
            }),
        )
    })
    .into()
}

fn thm17_chain(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let ps: Vec<f64> = g.p_values().into_iter().filter(|&p| p >= 2.0).collect();
    let pts = product2(&ps, &g.r_values());
    par_rows(&pts, |&(p, r)| {
        Row::new(
            vec![("p", p), ("r", r)],
            sides(|| {
                let rad = Radius::new(r)?;
                let bs = artanh_log_chain_with(p, rad, ctx.cfg, ctx.mutation)?;
                Ok(bs.chain_below_upper(ell_k(OrderParam::new(1.0 / p)?, rad, ctx.cfg)?))
            }),
        )
    })
    .into()
}

fn ars(ctx: &Ctx) -> Vec<(f64, f64, f64)> {
    let g = ctx.grid;
    product3(&g.a_values(), &g.r_values(), &g.s_values())
}

fn k_addition(ctx: &Ctx) -> CheckOutput {
    let pts = ars(ctx);
    let rows = par_rows(&pts, |&(a, r, s)| {
        Row::new(
            vec![("a", a), ("r", r), ("s", s)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
                let sum = ell_k(ap, rr, ctx.cfg)? + ell_k(ap, sr, ctx.cfg)?;
                Ok(k_addition_chain(ap, rr, sr, ctx.cfg)?.chain_above_lower(sum))
            }),
        )
    });
    let violations: Vec<bool> = par_rows(&pts, |&(a, r, s)| {
        Row::new(
            vec![],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
                let sum = ell_k(ap, rr, ctx.cfg)? + ell_k(ap, sr, ctx.cfg)?;
                Ok(vec![sum, k_addition_middle_variant(ap, rr, sr, ctx.cfg)?])
            }),
        )
    })
    .into_iter()
    .map(|row| row.sides.map(|v| v[1] < v[0]).unwrap_or(true))
    .collect();
    let bad = violations.iter().filter(|v| **v).count();
    CheckOutput {
        rows,
        notes: vec![format!(
            "printed middle argument sqrt(rs)/(1+rs+r's') falls below K(r)+K(s) at {bad} of {} points",
            violations.len()
        )],
    }
}

fn k_addition_geometric(ctx: &Ctx) -> CheckOutput {
    let pts = ars(ctx);
    par_rows(&pts, |&(a, r, s)| {
        Row::new(
            vec![("a", a), ("r", r), ("s", s)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
                let prod = ell_k(ap, rr, ctx.cfg)? * ell_k(ap, sr, ctx.cfg)?;
                let mid = 2.0 * prod / ell_k(ap, cosh_midpoint(rr, sr), ctx.cfg)?;
                let geo = 2.0 * prod / ell_k(ap, geometric_mean_radius(rr, sr)?, ctx.cfg)?;
                Ok(vec![mid, geo])
            }),
        )
    })
    .into()
}

pub(crate) const EQUALITY_TOL: f64 = 1e-10;

/// At `r = s` the middle of the chain equals `K(r) + K(s)`.
fn k_addition_equality(ctx: &Ctx) -> CheckOutput {
    let g = ctx.grid;
    let pts = product2(&g.a_values(), &g.r_values());
    par_rows(&pts, |&(a, r)| {
        Row::new(
            vec![("a", a), ("r", r), ("s", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rr = Radius::new(r)?;
                let bs = k_addition_chain(ap, rr, rr, ctx.cfg)?;
                let sum = 2.0 * ell_k(ap, rr, ctx.cfg)?;
                Ok(within(rel_dev(bs.middles[0], sum), EQUALITY_TOL))
            }),
        )
    })
    .into()
}

/// `x ↦ 1/K_a(1/cosh x)` increasing and concave onto `(0, 2/π)`.
fn sech_reciprocal_shape(ctx: &Ctx) -> CheckOutput {
    let xs = ctx.grid.x_values();
    let a_vals = ctx.grid.a_values();
    let mut rows = par_rows(&a_vals, |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let f = collect(
                    xs.iter()
                        .map(|&x| Ok(1.0 / ell_k(ap, sech_radius(x)?, ctx.cfg)?)),
                )?;
                Ok(onto_increasing(0.0, &f, 2.0 / PI))
            }),
        )
    });
    rows.extend(par_rows(&a_vals, |&a| {
        Row::new(
            vec![("a", a), ("concavity", 1.0)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let f = collect(
                    xs.iter()
                        .map(|&x| Ok(1.0 / ell_k(ap, sech_radius(x)?, ctx.cfg)?)),
                )?;
                Ok(concave(&xs, &f))
            }),
        )
    }));
    rows.into()
}

fn mu_ps(ctx: &Ctx) -> Vec<f64> {
    ctx.grid
        .p_values()
        .into_iter()
        .filter(|&p| p >= 2.0)
        .collect()
}

fn mu_two_sided(ctx: &Ctx) -> CheckOutput {
    let pts = product2(&mu_ps(ctx), &ctx.grid.r_values());
    par_rows(&pts, |&(p, r)| {
        Row::new(
            vec![("p", p), ("r", r)],
            sides(|| {
                let rad = Radius::new(r)?;
                let bs = mu_log_bounds_with(p, rad, ctx.mutation)?;
                Ok(bs.chain_above_lower(mu(OrderParam::new(1.0 / p)?, rad, ctx.cfg)?))
            }),
        )
    })
    .into()
}

/// `u_2(r) < (4/π) l_2(r)`
fn mu_bound_ratio(ctx: &Ctx) -> CheckOutput {
    let rs = ctx.grid.r_values();
    par_rows(&rs, |&r| {
        Row::new(
            vec![("p", 2.0), ("r", r)],
            sides(|| {
                let bs = mu_log_bounds_with(2.0, Radius::new(r)?, ctx.mutation)?;
                Ok(vec![bs.upper, 4.0 / PI * bs.lower])
            }),
        )
    })
    .into()
}

fn mu_complement_bracket(ctx: &Ctx) -> CheckOutput {
    let pts = product2(&mu_ps(ctx), &ctx.grid.r_values());
    let rows = par_rows(&pts, |&(p, r)| {
        Row::new(
            vec![("p", p), ("r", r)],
            sides(|| {
                let rad = Radius::new(r)?;
                let bs = mu_complement_bounds(p, rad, ctx.cfg)?;
                Ok(bs.chain_above_lower(mu(OrderParam::new(1.0 / p)?, rad.complement(), ctx.cfg)?))
            }),
        )
    });
    let printed = par_rows(&pts, |&(p, r)| {
        Row::new(
            vec![],
            sides(|| {
                let rad = Radius::new(r)?;
                let m = mu(OrderParam::new(1.0 / p)?, rad.complement(), ctx.cfg)?;
                Ok(vec![m, mu_complement_upper_single_p(p, rad, ctx.cfg)?])
            }),
        )
    });
    let bad = printed
        .iter()
        .filter(|row| row.sides.as_ref().map(|v| v[1] < v[0]).unwrap_or(true))
        .count();
    CheckOutput {
        rows,
        notes: vec![format!(
            "upper bound with denominator 1 - ((p-1)/p) log r^2 lies below mu(r') at {bad} of {} points",
            printed.len()
        )],
    }
}

fn ak_pairs(ctx: &Ctx) -> Vec<(f64, f64)> {
    product2(&ctx.grid.a_values(), &ctx.grid.k_above_one())
}

/// Evaluate `f(r, s)` along the radius grid, where `s = φ_K(r)`.
fn along_phi(
    ctx: &Ctx,
    a: f64,
    k: f64,
    f: impl Fn(OrderParam, Radius, Radius) -> Result<f64>,
) -> Result<Vec<f64>> {
    let ap = OrderParam::new(a)?;
    collect(ctx.grid.r_values().into_iter().map(|r| {
        let rad = Radius::new(r)?;
        let s = phi_solution(ap, k, rad, ctx.cfg)?.radius();
        f(ap, rad, s)
    }))
}

/// `s′K(s)²/(r′K(r)²)` decreasing onto `(0, 1)`.
fn ratio_first_kind(ctx: &Ctx) -> CheckOutput {
    let pts = ak_pairs(ctx);
    par_rows(&pts, |&(a, k)| {
        Row::new(
            vec![("a", a), ("K", k)],
            sides(|| {
                let v = along_phi(ctx, a, k, |ap, r, s| {
                    let q = ell_k(ap, s, ctx.cfg)? / ell_k(ap, r, ctx.cfg)?;
                    Ok(s.complement_value() / r.complement_value() * q * q)
                })?;
                Ok(onto_decreasing(0.0, &v, 1.0))
            }),
        )
    })
    .into()
}

/// `sK′(s)²/(rK′(r)²)` decreasing onto `(1, ∞)`.
fn ratio_complementary(ctx: &Ctx) -> CheckOutput {
    let pts = ak_pairs(ctx);
    par_rows(&pts, |&(a, k)| {
        Row::new(
            vec![("a", a), ("K", k)],
            sides(|| {
                let v = along_phi(ctx, a, k, |ap, r, s| {
                    let q = ell_kc(ap, s, ctx.cfg)? / ell_kc(ap, r, ctx.cfg)?;
                    Ok((s.ln() - r.ln()).exp() * q * q)
                })?;
                Ok(onto_decreasing(1.0, &v, f64::INFINITY))
            }),
        )
    })
    .into()
}

fn weighted_k(ctx: &Ctx, ap: OrderParam, c: f64) -> Result<Vec<f64>> {
    collect(ctx.grid.r_values().into_iter().map(|r| {
        let rad = Radius::new(r)?;
        Ok((c * rad.ln_complement()).exp() * ell_k(ap, rad, ctx.cfg)?)
    }))
}

/// `r′^c K_a(r)` decreasing onto `(0, π/2)` for `c ≥ 2a(1−a)`, including `c = 1/2`.
fn weighted_k_decreasing(ctx: &Ctx) -> CheckOutput {
    let mut pts = Vec::new();
    for a in ctx.grid.a_values() {
        for c in [2.0 * a * (1.0 - a), 0.5, 1.0] {
            pts.push((a, c));
        }
    }
    par_rows(&pts, |&(a, c)| {
        Row::new(
            vec![("a", a), ("c", c)],
            sides(|| {
                Ok(onto_decreasing(
                    0.0,
                    &weighted_k(ctx, OrderParam::new(a)?, c)?,
                    FRAC_PI_2,
                ))
            }),
        )
    })
    .into()
}

/// Threshold a rise must exceed to count as a detected increase.
const RISE_DETECTION: f64 = 1e-9;

/// Below `c = 2a(1−a)` the weighted integral is not monotone: some
/// consecutive pair on the grid increases.
fn weighted_k_not_monotone(ctx: &Ctx) -> CheckOutput {
    let pts: Vec<(f64, f64)> = ctx
        .grid
        .a_values()
        .into_iter()
        .map(|a| (a, 0.9 * 2.0 * a * (1.0 - a)))
        .collect();
    par_rows(&pts, |&(a, c)| {
        Row::new(
            vec![("a", a), ("c", c)],
            sides(|| {
                let v = weighted_k(ctx, OrderParam::new(a)?, c)?;
                let rise = v
                    .windows(2)
                    .map(|w| w[1] - w[0])
                    .fold(f64::NEG_INFINITY, f64::max);
                Ok(vec![RISE_DETECTION, rise])
            }),
        )
    })
    .into()
}

fn ratio_params(ctx: &Ctx) -> Vec<(f64, f64)> {
    let mut v: Vec<(f64, f64)> = ctx
        .grid
        .a_values()
        .into_iter()
        .map(|a| (a, 1.0 - a))
        .collect();
    v.extend([(0.3, 0.9), (1.0, 2.0), (2.5, 0.5)]);
    v
}

/// `(F(a, b; a+b; x) − 1)/log(1/(1−x))` increasing onto `(ab/(a+b), 1/B(a, b))`.
fn zero_balanced_ratio_shape(ctx: &Ctx) -> CheckOutput {
    let pts = ratio_params(ctx);
    let xs = ctx.grid.r_values();
    par_rows(&pts, |&(a, b)| {
        Row::new(
            vec![("a", a), ("b", b)],
            sides(|| {
                let v = collect(xs.iter().map(|&x| zero_balanced_ratio(a, b, x, ctx.cfg)))?;
                Ok(onto_increasing(a * b / (a + b), &v, 1.0 / beta(a, b)?))
            }),
        )
    })
    .into()
}

/// `K(rs) ≤ √(K(r²)K(s²)) ≤ (2/π)K(r)K(s)`
fn product_k(ctx: &Ctx) -> CheckOutput {
    let pts = ars(ctx);
    par_rows(&pts, |&(a, r, s)| {
        Row::new(
            vec![("a", a), ("r", r), ("s", s)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
                let k = |x: Radius| ell_k(ap, x, ctx.cfg);
                let sq = |x: &Radius| Radius::from_ln(2.0 * x.ln());
                Ok(vec![
                    k(Radius::from_ln(rr.ln() + sr.ln())?)?,
                    (k(sq(&rr)?)? * k(sq(&sr)?)?).sqrt(),
                    2.0 / PI * k(rr)? * k(sr)?,
                ])
            }),
        )
    })
    .into()
}

/// `(2/π)E(r)E(s) ≤ √(E(r²)E(s²)) ≤ E(rs)`
fn product_e(ctx: &Ctx) -> CheckOutput {
    let pts = ars(ctx);
    par_rows(&pts, |&(a, r, s)| {
        Row::new(
            vec![("a", a), ("r", r), ("s", s)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
                let e = |x: Radius| ell_e(ap, x, ctx.cfg);
                let sq = |x: &Radius| Radius::from_ln(2.0 * x.ln());
                Ok(vec![
                    2.0 / PI * e(rr)? * e(sr)?,
                    (e(sq(&rr)?)? * e(sq(&sr)?)?).sqrt(),
                    e(Radius::from_ln(rr.ln() + sr.ln())?)?,
                ])
            }),
        )
    })
    .into()
}
