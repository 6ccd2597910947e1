//! Inequalities for `μ_a⁻¹`, `φ_K^a`, `η_K^a` and `λ_a`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, LN_2, PI};

use super::sides;
use crate::bounds::{
    holder_bound_with, lambda_log_bounds_with, lambda_rate, moebius_bound, mu_difference_rate,
    mu_symmetric_bounds, power_addition_bounds, tanh_sum,
};
use crate::elliptic::{ell_k, ell_kc, OrderParam, Radius};
use crate::error::Result;
use crate::harness::checks::{
    atanh_of, collect, concave, convex, log_add_exp, onto_decreasing, onto_increasing, pairs,
    product2, product3, sign_changes, slopes, within,
};
use crate::harness::registry::CheckDef;
use crate::harness::suites::elliptic_bounds::EQUALITY_TOL;
use crate::harness::{par_map, par_rows, CheckOutput, Ctx, Row};
use crate::modular::{log_eta, log_lambda, mu, mu_inv, phi_solution, ModularSolution};

pub(crate) const THM_3_1: &[CheckDef] = &[
    CheckDef::shape("onto", inverse_onto),
    CheckDef::shape("log_concave", inverse_log_concave),
    CheckDef::shape("inflection", inverse_inflection),
    CheckDef::ineq("log_concave_inequality", inverse_weighted),
];

pub(crate) const COR_3_2: &[CheckDef] = &[
    CheckDef::shape("1", log_ratio_decreasing),
    CheckDef::shape("limits", log_ratio_limits),
    CheckDef::shape("2", power_root_decreasing),
    CheckDef::ineq("2_bounds", power_root_bounds),
];

pub(crate) const LEMMA_3_3: &[CheckDef] = &[CheckDef::ineq("chain", power_addition)];

pub(crate) const INEQ_3_4: &[CheckDef] = &[CheckDef::ineq("moebius", moebius)];

pub(crate) const THM_3_5: &[CheckDef] = &[
    CheckDef::ineq("1", holder_above),
    CheckDef::ineq("2", holder_below),
];

pub(crate) const THM_3_6: &[CheckDef] = &[
    CheckDef::shape("1", log_phi_in_k),
    CheckDef::shape("2", artanh_phi_in_k),
    CheckDef::ineq("3_lower", weighted_k_lower),
    CheckDef::ineq("3_upper", weighted_k_upper),
    CheckDef::ineq("4_lower", midpoint_k_lower),
    CheckDef::ineq("4_upper", midpoint_k_upper),
];

pub(crate) const THM_3_7: &[CheckDef] = &[
    CheckDef::ineq("1", eta_product),
    CheckDef::ineq("2", eta_ratio),
    CheckDef::ineq("3", eta_arithmetic),
    CheckDef::ineq("4", eta_geometric),
];

pub(crate) const THM_3_8: &[CheckDef] = &[
    CheckDef::shape("increasing", eta_increasing_in_k),
    CheckDef::shape("convex", eta_convex_in_k),
    CheckDef::shape("log_concave", eta_log_concave_in_k),
    CheckDef::ineq("inequality", eta_weighted_k),
    CheckDef::identity("equality", eta_weighted_k_equal),
];

pub(crate) const THM_3_9: &[CheckDef] = &[
    CheckDef::shape("f", eta_log_quotient),
    CheckDef::shape("g", eta_quotient),
];

pub(crate) const REMARK_3_10: &[CheckDef] = &[
    CheckDef::ineq("bounds", lambda_bracket),
    CheckDef::shape("1", lambda_log_quotient),
    CheckDef::shape("2", lambda_quotient),
];

pub(crate) const LEMMA_3_11: &[CheckDef] = &[CheckDef::shape("monotone", power_sum_k)];

pub(crate) const THM_3_12: &[CheckDef] = &[
    CheckDef::shape("1", lambda_over_k_minus_inverse),
    CheckDef::shape("2_convex", lambda_plus_one_convex),
    CheckDef::shape("2_concave", lambda_log_concave),
    CheckDef::shape("3", lambda_over_log_k),
    CheckDef::ineq("3_inequality", lambda_power),
];

pub(crate) const COR_3_13: &[CheckDef] = &[
    CheckDef::shape("1", mu_difference_quotient),
    CheckDef::ineq("1_bounds", mu_difference_bounds),
    CheckDef::ineq("2", mu_doubled_bounds),
];

fn phi_at(ctx: &Ctx, ap: OrderParam, k: f64, r: Radius) -> Result<ModularSolution> {
    phi_solution(ap, k, r, ctx.cfg)
}

/// Distortions below and above 1 together with 1 itself, ascending.
fn k_axis(ctx: &Ctx) -> Vec<f64> {
    let mut v = ctx.grid.k_with_reciprocals();
    v.push(1.0);
    v.sort_by(f64::total_cmp);
    v
}

fn inverse_curve(ctx: &Ctx, a: f64) -> Result<Vec<ModularSolution>> {
    let ap = OrderParam::new(a)?;
    let sc = ctx.cfg.solver();
    ctx.grid
        .x_values()
        .into_iter()
        .map(|y| mu_inv(ap, y, ctx.cfg, &sc))
        .collect()
}

/// `μ_a⁻¹` decreasing from `(0, ∞)` onto `(0, 1)`.
fn inverse_onto(ctx: &Ctx) -> CheckOutput {
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let s: Vec<f64> = inverse_curve(ctx, a)?.iter().map(|x| x.s).collect();
                Ok(onto_decreasing(0.0, &s, 1.0))
            }),
        )
    })
    .into()
}

fn inverse_log_concave(ctx: &Ctx) -> CheckOutput {
    let ys = ctx.grid.x_values();
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let ls: Vec<f64> = inverse_curve(ctx, a)?.iter().map(|x| x.log_s).collect();
                Ok(concave(&ys, &ls))
            }),
        )
    })
    .into()
}

/// Second divided differences of `s(y)`. Near `s = 1` they are formed
/// from `−s′²/(1+s)`, which differs from `s` by a constant.
fn second_differences(ys: &[f64], sol: &[ModularSolution]) -> Vec<f64> {
    (0..ys.len().saturating_sub(2))
        .map(|i| {
            let w = &sol[i..i + 3];
            let vals: Vec<f64> = if w.iter().all(|x| x.s < 0.5) {
                w.iter().map(|x| x.s).collect()
            } else {
                w.iter()
                    .map(|x| -x.s_complement.powi(2) / (1.0 + x.s))
                    .collect()
            };
            let d = slopes(&ys[i..i + 3], &vals);
            (d[1] - d[0]) / (ys[i + 2] - ys[i])
        })
        .collect()
}

/// Exactly one sign change of the second difference of `μ_a⁻¹`.
fn inverse_inflection(ctx: &Ctx) -> CheckOutput {
    let ys = ctx.grid.x_values();
    let a_vals = ctx.grid.a_values();
    let found: Vec<Result<(usize, f64)>> = par_map(&a_vals, |&a| {
        let sol = inverse_curve(ctx, a)?;
        let dd = second_differences(&ys, &sol);
        let first = dd
            .windows(2)
            .position(|w| w[0] != 0.0 && w[1] != 0.0 && (w[0] > 0.0) != (w[1] > 0.0));
        Ok((sign_changes(&dd), first.map_or(f64::NAN, |i| ys[i + 1])))
    });
    let mut notes = Vec::new();
    let rows = a_vals
        .iter()
        .zip(found)
        .map(|(&a, f)| {
            if let Ok((_, y0)) = &f {
                notes.push(format!(
                    "a = {a}: second difference changes sign near y = {y0:.4e}"
                ));
            }
            Row::new(vec![("a", a)], f.map(|(n, _)| within(n as f64 - 1.0, 0.5)))
        })
        .collect();
    CheckOutput { rows, notes }
}

/// `μ⁻¹(x)^c μ⁻¹(y)^{1−c} ≤ μ⁻¹(cx + (1−c)y)`
fn inverse_weighted(ctx: &Ctx) -> CheckOutput {
    let ys: Vec<f64> = ctx.grid.x_values().into_iter().step_by(2).collect();
    let mut pts = Vec::new();
    for a in ctx.grid.a_values() {
        for (x, y) in pairs(&ys) {
            for c in [0.25, 0.5, 0.75] {
                pts.push((a, x, y, c));
            }
        }
    }
    par_rows(&pts, |&(a, x, y, c)| {
        Row::new(
            vec![("a", a), ("x", x), ("y", y), ("c", c)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let sc = ctx.cfg.solver();
                let l = |v: f64| -> Result<f64> { Ok(mu_inv(ap, v, ctx.cfg, &sc)?.log_s) };
                Ok(vec![
                    c * l(x)? + (1.0 - c) * l(y)?,
                    l(c * x + (1.0 - c) * y)?,
                ])
            }),
        )
    })
    .into()
}

fn ak_above(ctx: &Ctx) -> Vec<(f64, f64)> {
    product2(&ctx.grid.a_values(), &ctx.grid.k_above_one())
}

fn log_ratio_curve(ctx: &Ctx, a: f64, k: f64) -> Result<Vec<f64>> {
    let ap = OrderParam::new(a)?;
    collect(ctx.grid.r_values().into_iter().map(|r| {
        let rad = Radius::new(r)?;
        Ok(phi_at(ctx, ap, k, rad)?.log_s / rad.ln())
    }))
}

/// `log φ_K(r)/log r` decreasing onto `(0, 1/K)`.
fn log_ratio_decreasing(ctx: &Ctx) -> CheckOutput {
    par_rows(&ak_above(ctx), |&(a, k)| {
        Row::new(
            vec![("a", a), ("K", k)],
            sides(|| Ok(onto_decreasing(0.0, &log_ratio_curve(ctx, a, k)?, 1.0 / k))),
        )
    })
    .into()
}

/// The two outermost samples at each end approach the range endpoints
/// from inside.
fn log_ratio_limits(ctx: &Ctx) -> CheckOutput {
    par_rows(&ak_above(ctx), |&(a, k)| {
        Row::new(
            vec![("a", a), ("K", k)],
            sides(|| {
                let f = log_ratio_curve(ctx, a, k)?;
                let n = f.len();
                let ends: Vec<f64> = if n >= 4 {
                    vec![f[0], f[1], f[n - 2], f[n - 1]]
                } else {
                    f
                };
                Ok(onto_decreasing(0.0, &ends, 1.0 / k))
            }),
        )
    })
    .into()
}

fn cor32_ps(ctx: &Ctx) -> Vec<f64> {
    let mut ps = vec![0.1, 0.25, 0.5, 1.0, 10.0];
    ps.extend(ctx.grid.p_values());
    ps.sort_by(f64::total_cmp);
    ps.dedup();
    ps
}

/// `p ↦ φ_K(r^p)^{1/p}` decreasing onto `(r^{1/K}, 1)`, in logarithms.
fn power_root_decreasing(ctx: &Ctx) -> CheckOutput {
    let ps = cor32_ps(ctx);
    let pts = product3(
        &ctx.grid.a_values(),
        &ctx.grid.k_above_one(),
        &ctx.grid.s_values(),
    );
    par_rows(&pts, |&(a, k, r)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let g =
                    collect(ps.iter().map(|&p| {
                        Ok(phi_at(ctx, ap, k, Radius::from_ln(p * rad.ln())?)?.log_s / p)
                    }))?;
                Ok(onto_decreasing(rad.ln() / k, &g, 0.0))
            }),
        )
    })
    .into()
}

/// `r^{p/K} ≤ φ(r^p) ≤ φ(r)^p` for `p ≥ 1`, and `φ(r^p) ≥ φ(r)^p` for `p ≤ 1`.
fn power_root_bounds(ctx: &Ctx) -> CheckOutput {
    let pts = product3(
        &ctx.grid.a_values(),
        &ctx.grid.k_above_one(),
        &ctx.grid.r_values(),
    );
    let ps = cor32_ps(ctx);
    let mut all = Vec::new();
    for &(a, k, r) in &pts {
        for &p in &ps {
            all.push((a, k, r, p));
        }
    }
    par_rows(&all, |&(a, k, r, p)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r), ("p", p)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let lp = phi_at(ctx, ap, k, Radius::from_ln(p * rad.ln())?)?.log_s;
                let l1 = phi_at(ctx, ap, k, rad)?.log_s;
                if p >= 1.0 {
                    Ok(vec![p * rad.ln() / k, lp, p * l1])
                } else {
                    Ok(vec![p * l1, lp])
                }
            }),
        )
    })
    .into()
}

fn akrs(ctx: &Ctx) -> Vec<(f64, f64, f64, f64)> {
    let g = ctx.grid;
    let mut v = Vec::new();
    for (a, k) in ak_above(ctx) {
        for (r, s) in product2(&g.r_values(), &g.s_values()) {
            v.push((a, k, r, s));
        }
    }
    v
}

fn phi_sum(ctx: &Ctx, ap: OrderParam, k: f64, r: Radius, s: Radius) -> Result<f64> {
    Ok(tanh_sum(phi_at(ctx, ap, k, r)?.s, phi_at(ctx, ap, k, s)?.s))
}

fn power_addition(ctx: &Ctx) -> CheckOutput {
    let mut pts = Vec::new();
    for q in akrs(ctx) {
        for p in ctx.grid.p_values() {
            pts.push((q, p));
        }
    }
    par_rows(&pts, |&((a, k, r, s), p)| {
        Row::new(
            vec![("a", a), ("K", k), ("p", p), ("r", r), ("s", s)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
                let bs = power_addition_bounds(ap, k, p, rr, sr, ctx.cfg)?;
                Ok(bs.chain_above_lower(phi_sum(ctx, ap, k, rr, sr)?))
            }),
        )
    })
    .into()
}

fn moebius(ctx: &Ctx) -> CheckOutput {
    par_rows(&akrs(ctx), |&(a, k, r, s)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r), ("s", s)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
                Ok(vec![
                    moebius_bound(ap, k, rr, sr, ctx.cfg)?,
                    phi_sum(ctx, ap, k, rr, sr)?,
                ])
            }),
        )
    })
    .into()
}

fn holder_points(ctx: &Ctx, ks: Vec<f64>) -> Vec<(f64, f64, f64, f64)> {
    let g = ctx.grid;
    let mut v = Vec::new();
    for a in g.a_values() {
        for &k in &ks {
            for (r, s) in product2(&g.r_values(), &g.s_values()) {
                if r != s {
                    v.push((a, k, r, s));
                }
            }
        }
    }
    v
}

/// `[|φ(r) − φ(s)|, φ(|r − s|), e^{(1−1/K)R(a)/2}|r − s|^{1/K}]`
fn holder_sides(ctx: &Ctx, a: f64, k: f64, r: f64, s: f64) -> Result<[f64; 3]> {
    let ap = OrderParam::new(a)?;
    let d = (r - s).abs();
    let diff =
        (phi_at(ctx, ap, k, Radius::new(r)?)?.s - phi_at(ctx, ap, k, Radius::new(s)?)?.s).abs();
    let mid = phi_at(ctx, ap, k, Radius::new(d)?)?.s;
    Ok([diff, mid, holder_bound_with(ap, k, d, ctx.mutation)?])
}

fn holder_above(ctx: &Ctx) -> CheckOutput {
    let pts = holder_points(ctx, ctx.grid.k_above_one());
    par_rows(&pts, |&(a, k, r, s)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r), ("s", s)],
            holder_sides(ctx, a, k, r, s).map(|v| v.to_vec()),
        )
    })
    .into()
}

fn holder_below(ctx: &Ctx) -> CheckOutput {
    let ks = ctx
        .grid
        .k_above_one()
        .into_iter()
        .map(|k| 1.0 / k)
        .collect();
    let pts = holder_points(ctx, ks);
    par_rows(&pts, |&(a, k, r, s)| {
        Row::new(
            vec![("a", a), ("K", k), ("r", r), ("s", s)],
            holder_sides(ctx, a, k, r, s).map(|v| vec![v[2], v[1], v[0]]),
        )
    })
    .into()
}

fn ar(ctx: &Ctx) -> Vec<(f64, f64)> {
    product2(&ctx.grid.a_values(), &ctx.grid.r_values())
}

fn k_curve(ctx: &Ctx, ap: OrderParam, r: Radius, ks: &[f64]) -> Result<Vec<ModularSolution>> {
    ks.iter().map(|&k| phi_at(ctx, ap, k, r)).collect()
}

/// `K ↦ log φ_K(r)` increasing and concave onto `(−∞, 0)`.
fn log_phi_in_k(ctx: &Ctx) -> CheckOutput {
    let ks = k_axis(ctx);
    let mut rows = Vec::new();
    for concavity in [false, true] {
        rows.extend(par_rows(&ar(ctx), |&(a, r)| {
            Row::new(
                vec![
                    ("a", a),
                    ("r", r),
                    ("concavity", f64::from(u8::from(concavity))),
                ],
                sides(|| {
                    let f: Vec<f64> = k_curve(ctx, OrderParam::new(a)?, Radius::new(r)?, &ks)?
                        .iter()
                        .map(|s| s.log_s)
                        .collect();
                    Ok(if concavity {
                        concave(&ks, &f)
                    } else {
                        onto_increasing(f64::NEG_INFINITY, &f, 0.0)
                    })
                }),
            )
        }));
    }
    rows.into()
}

/// `K ↦ artanh φ_K(r)` increasing and convex onto `(0, ∞)`.
fn artanh_phi_in_k(ctx: &Ctx) -> CheckOutput {
    let ks = k_axis(ctx);
    let mut rows = Vec::new();
    for convexity in [false, true] {
        rows.extend(par_rows(&ar(ctx), |&(a, r)| {
            Row::new(
                vec![
                    ("a", a),
                    ("r", r),
                    ("convexity", f64::from(u8::from(convexity))),
                ],
                sides(|| {
                    let f: Vec<f64> = k_curve(ctx, OrderParam::new(a)?, Radius::new(r)?, &ks)?
                        .iter()
                        .map(atanh_of)
                        .collect();
                    Ok(if convexity {
                        convex(&ks, &f)
                    } else {
                        onto_increasing(0.0, &f, f64::INFINITY)
                    })
                }),
            )
        }));
    }
    rows.into()
}

fn weighted_points(ctx: &Ctx) -> Vec<(f64, f64, f64, f64, f64)> {
    let ks = ctx.grid.k_with_reciprocals();
    let mut v = Vec::new();
    for (a, r) in ar(ctx) {
        for (k, l) in pairs(&ks) {
            for c in [0.25, 0.5, 0.75] {
                v.push((a, r, k, l, c));
            }
        }
    }
    v
}

struct Weighted {
    k: ModularSolution,
    l: ModularSolution,
    m: ModularSolution,
}

fn weighted(ctx: &Ctx, a: f64, r: f64, k: f64, l: f64, c: f64) -> Result<Weighted> {
    let ap = OrderParam::new(a)?;
    let rad = Radius::new(r)?;
    Ok(Weighted {
        k: phi_at(ctx, ap, k, rad)?,
        l: phi_at(ctx, ap, l, rad)?,
        m: phi_at(ctx, ap, c * k + (1.0 - c) * l, rad)?,
    })
}

fn weighted_rows(ctx: &Ctx, f: impl Fn(&Weighted, f64) -> Vec<f64> + Sync + Send) -> CheckOutput {
    par_rows(&weighted_points(ctx), |&(a, r, k, l, c)| {
        Row::new(
            vec![("a", a), ("r", r), ("K", k), ("L", l), ("c", c)],
            weighted(ctx, a, r, k, l, c).map(|w| f(&w, c)),
        )
    })
    .into()
}

/// `φ_K^c φ_L^{1−c} ≤ φ_{cK+(1−c)L}`, in logarithms.
fn weighted_k_lower(ctx: &Ctx) -> CheckOutput {
    weighted_rows(ctx, |w, c| {
        vec![c * w.k.log_s + (1.0 - c) * w.l.log_s, w.m.log_s]
    })
}

/// `φ_{cK+(1−c)L} ≤ tanh(c artanh φ_K + (1−c) artanh φ_L)`, in artanh.
fn weighted_k_upper(ctx: &Ctx) -> CheckOutput {
    weighted_rows(ctx, |w, c| {
        vec![
            atanh_of(&w.m),
            c * atanh_of(&w.k) + (1.0 - c) * atanh_of(&w.l),
        ]
    })
}

fn midpoint_points(ctx: &Ctx) -> Vec<(f64, f64, f64, f64)> {
    let ks = ctx.grid.k_with_reciprocals();
    let mut v = Vec::new();
    for (a, r) in ar(ctx) {
        for (k, l) in pairs(&ks) {
            v.push((a, r, k, l));
        }
    }
    v
}

/// `√(φ_K φ_L) ≤ φ_{(K+L)/2}`, in logarithms.
fn midpoint_k_lower(ctx: &Ctx) -> CheckOutput {
    par_rows(&midpoint_points(ctx), |&(a, r, k, l)| {
        Row::new(
            vec![("a", a), ("r", r), ("K", k), ("L", l)],
            weighted(ctx, a, r, k, l, 0.5).map(|w| vec![0.5 * (w.k.log_s + w.l.log_s), w.m.log_s]),
        )
    })
    .into()
}

/// `φ_{(K+L)/2}(r) ≤ (φ_K + φ_L)/(1 + φ_K φ_L + φ_{1/K}(r′)φ_{1/L}(r′))`
fn midpoint_k_upper(ctx: &Ctx) -> CheckOutput {
    par_rows(&midpoint_points(ctx), |&(a, r, k, l)| {
        Row::new(
            vec![("a", a), ("r", r), ("K", k), ("L", l)],
            sides(|| {
                let w = weighted(ctx, a, r, k, l, 0.5)?;
                let ap = OrderParam::new(a)?;
                let rc = Radius::new(r)?.complement();
                let ck = phi_at(ctx, ap, 1.0 / k, rc)?.s;
                let cl = phi_at(ctx, ap, 1.0 / l, rc)?.s;
                Ok(vec![
                    w.m.s,
                    (w.k.s + w.l.s) / (1.0 + w.k.s * w.l.s + ck * cl),
                ])
            }),
        )
    })
    .into()
}

fn eta_pairs(ctx: &Ctx) -> Vec<(f64, f64, f64, f64)> {
    let xs = ctx.grid.x_values();
    let mut v = Vec::new();
    for (a, k) in ak_above(ctx) {
        for (m, n) in pairs(&xs) {
            v.push((a, k, m, n));
        }
    }
    v
}

fn eta_rows(
    ctx: &Ctx,
    f: impl Fn(&dyn Fn(f64) -> Result<f64>, f64, f64, f64) -> Result<Vec<f64>> + Sync + Send,
) -> CheckOutput {
    par_rows(&eta_pairs(ctx), |&(a, k, m, n)| {
        Row::new(
            vec![("a", a), ("K", k), ("m", m), ("n", n)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let le = |x: f64| log_eta(ap, k, x, ctx.cfg);
                f(&le, k, m, n)
            }),
        )
    })
    .into()
}

/// `η(mn) ≤ √(η(m²)η(n²))`
fn eta_product(ctx: &Ctx) -> CheckOutput {
    eta_rows(ctx, |le, _, m, n| {
        Ok(vec![le(m * n)?, 0.5 * (le(m * m)? + le(n * n)?)])
    })
}

/// `(n/m)^{1/K} < η(n)/η(m) < (n/m)^K`
fn eta_ratio(ctx: &Ctx) -> CheckOutput {
    eta_rows(ctx, |le, k, m, n| {
        let q = (n / m).ln();
        Ok(vec![q / k, le(n)? - le(m)?, k * q])
    })
}

/// `η(m)η(n) < η((m+n)/2)²`
fn eta_arithmetic(ctx: &Ctx) -> CheckOutput {
    eta_rows(ctx, |le, _, m, n| {
        Ok(vec![le(m)? + le(n)?, 2.0 * le(0.5 * (m + n))?])
    })
}

/// `2η(m)η(n)/(η(m) + η(n)) < η(√(mn)) < √(η(m)η(n))`
fn eta_geometric(ctx: &Ctx) -> CheckOutput {
    eta_rows(ctx, |le, _, m, n| {
        let (lm, ln) = (le(m)?, le(n)?);
        Ok(vec![
            LN_2 + lm + ln - log_add_exp(lm, ln),
            le((m * n).sqrt())?,
            0.5 * (lm + ln),
        ])
    })
}

fn ax(ctx: &Ctx) -> Vec<(f64, f64)> {
    product2(&ctx.grid.a_values(), &ctx.grid.x_values())
}

fn eta_k_curve(ctx: &Ctx, a: f64, x: f64, ks: &[f64]) -> Result<Vec<f64>> {
    let ap = OrderParam::new(a)?;
    collect(ks.iter().map(|&k| log_eta(ap, k, x, ctx.cfg)))
}

/// `K ↦ η_K(x)` increasing onto `(0, ∞)`.
fn eta_increasing_in_k(ctx: &Ctx) -> CheckOutput {
    let ks = k_axis(ctx);
    par_rows(&ax(ctx), |&(a, x)| {
        Row::new(
            vec![("a", a), ("x", x)],
            eta_k_curve(ctx, a, x, &ks)
                .map(|l| onto_increasing(f64::NEG_INFINITY, &l, f64::INFINITY)),
        )
    })
    .into()
}

fn eta_convex_in_k(ctx: &Ctx) -> CheckOutput {
    let ks = k_axis(ctx);
    par_rows(&ax(ctx), |&(a, x)| {
        Row::new(
            vec![("a", a), ("x", x)],
            eta_k_curve(ctx, a, x, &ks).map(|l| {
                let e: Vec<f64> = l.iter().map(|v| v.exp()).collect();
                convex(&ks, &e)
            }),
        )
    })
    .into()
}

fn eta_log_concave_in_k(ctx: &Ctx) -> CheckOutput {
    let ks = k_axis(ctx);
    par_rows(&ax(ctx), |&(a, x)| {
        Row::new(
            vec![("a", a), ("x", x)],
            eta_k_curve(ctx, a, x, &ks).map(|l| concave(&ks, &l)),
        )
    })
    .into()
}

/// `c ln η_K + (1−c) ln η_L`, `ln η_{cK+(1−c)L}` and `ln(c η_K + (1−c) η_L)`.
fn eta_weighted_sides(ctx: &Ctx, a: f64, x: f64, k: f64, l: f64, c: f64) -> Result<[f64; 3]> {
    let ap = OrderParam::new(a)?;
    let (lk, ll) = (log_eta(ap, k, x, ctx.cfg)?, log_eta(ap, l, x, ctx.cfg)?);
    let lm = log_eta(ap, c * k + (1.0 - c) * l, x, ctx.cfg)?;
    Ok([
        c * lk + (1.0 - c) * ll,
        lm,
        log_add_exp(c.ln() + lk, (1.0 - c).ln() + ll),
    ])
}

fn eta_weighted_k(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_with_reciprocals();
    let mut pts = Vec::new();
    for (a, x) in ax(ctx) {
        for (k, l) in pairs(&ks) {
            for c in [0.25, 0.5, 0.75] {
                pts.push((a, x, k, l, c));
            }
        }
    }
    par_rows(&pts, |&(a, x, k, l, c)| {
        Row::new(
            vec![("a", a), ("x", x), ("K", k), ("L", l), ("c", c)],
            eta_weighted_sides(ctx, a, x, k, l, c).map(|v| v.to_vec()),
        )
    })
    .into()
}

/// With `K = L` all three sides coincide.
fn eta_weighted_k_equal(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_with_reciprocals();
    let pts = product3(&ctx.grid.a_values(), &ctx.grid.x_values(), &ks);
    par_rows(&pts, |&(a, x, k)| {
        Row::new(
            vec![("a", a), ("x", x), ("K", k), ("L", k), ("c", 0.5)],
            eta_weighted_sides(ctx, a, x, k, k, 0.5).map(|v| {
                let dev = (v[0] - v[1]).abs().max((v[2] - v[1]).abs()) / v[1].abs().max(1.0);
                within(dev, EQUALITY_TOL)
            }),
        )
    })
    .into()
}

/// `(log η_K(x) − log x)/(K − 1)` decreasing from `(1, ∞)` onto
/// `(π K(r)/(sin πa K′(r)), 4K(r)K′(r)/(π sin πa))`.
fn eta_log_quotient(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_above_one();
    par_rows(&ax(ctx), |&(a, x)| {
        Row::new(
            vec![("a", a), ("x", x)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let r = Radius::from_ratio(x)?;
                let (kr, kcr) = (ell_k(ap, r, ctx.cfg)?, ell_kc(ap, r, ctx.cfg)?);
                let sin = ap.sin_pi();
                let l = eta_k_curve(ctx, a, x, &ks)?;
                let f: Vec<f64> = l
                    .iter()
                    .zip(&ks)
                    .map(|(v, k)| (v - x.ln()) / (k - 1.0))
                    .collect();
                Ok(onto_decreasing(
                    PI * kr / (sin * kcr),
                    &f,
                    4.0 * kr * kcr / (PI * sin),
                ))
            }),
        )
    })
    .into()
}

/// `(η_K(x) − x)/(K − 1)` increasing from `(1, ∞)` onto
/// `(4x K(r)K′(r)/(π sin πa), ∞)`, where `x = r²/r′²`.
fn eta_quotient(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_above_one();
    let pts = ax(ctx);
    let out: Vec<Result<(Vec<f64>, bool)>> = par_map(&pts, |&(a, x)| {
        let ap = OrderParam::new(a)?;
        let r = Radius::from_ratio(x)?;
        let (kr, kcr) = (ell_k(ap, r, ctx.cfg)?, ell_kc(ap, r, ctx.cfg)?);
        let sin = ap.sin_pi();
        let l = eta_k_curve(ctx, a, x, &ks)?;
        let g: Vec<f64> = l
            .iter()
            .zip(&ks)
            .map(|(v, k)| (v.exp() - x) / (k - 1.0))
            .collect();
        let printed = 4.0 * x * sin * kr * kcr / PI;
        let ok_printed = g.iter().all(|v| *v >= printed);
        Ok((
            onto_increasing(4.0 * x * kr * kcr / (PI * sin), &g, f64::INFINITY),
            ok_printed,
        ))
    });
    let printed_bad = out.iter().filter(|o| !matches!(o, Ok((_, true)))).count();
    let rows = pts
        .iter()
        .zip(out)
        .map(|(&(a, x), o)| Row::new(vec![("a", a), ("x", x)], o.map(|(v, _)| v)))
        .collect();
    CheckOutput {
        rows,
        notes: vec![format!(
            "printed lower limit 4 r^2 sin(pi a) K K' / (pi r'^2) is violated on {printed_bad} of {} curves",
            pts.len()
        )],
    }
}

fn lambda_curve(ctx: &Ctx, ap: OrderParam, ks: &[f64]) -> Result<Vec<f64>> {
    collect(ks.iter().map(|&k| log_lambda(ap, k, ctx.cfg)))
}

fn lambda_bracket(ctx: &Ctx) -> CheckOutput {
    let pts = ak_above(ctx);
    par_rows(&pts, |&(a, k)| {
        Row::new(
            vec![("a", a), ("K", k)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let bs = lambda_log_bounds_with(ap, k, ctx.cfg, ctx.mutation)?;
                Ok(bs.chain_above_lower(log_lambda(ap, k, ctx.cfg)?))
            }),
        )
    })
    .into()
}

/// `log λ(K)/(K − 1)` decreasing from `(1, ∞)` onto `(π/sin πa, t)`.
fn lambda_log_quotient(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_above_one();
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let l = lambda_curve(ctx, ap, &ks)?;
                let f: Vec<f64> = l.iter().zip(&ks).map(|(v, k)| v / (k - 1.0)).collect();
                Ok(onto_decreasing(
                    PI / ap.sin_pi(),
                    &f,
                    lambda_rate(ap, ctx.cfg)?,
                ))
            }),
        )
    })
    .into()
}

/// `(λ(K) − 1)/(K − 1)` increasing from `(1, ∞)` onto `(t sin²πa, ∞)`.
fn lambda_quotient(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_above_one();
    let a_vals = ctx.grid.a_values();
    let out: Vec<Result<(Vec<f64>, f64, f64)>> = par_map(&a_vals, |&a| {
        let ap = OrderParam::new(a)?;
        let t = lambda_rate(ap, ctx.cfg)?;
        let l = lambda_curve(ctx, ap, &ks)?;
        let g: Vec<f64> = l
            .iter()
            .zip(&ks)
            .map(|(v, k)| v.exp_m1() / (k - 1.0))
            .collect();
        let lo = g.iter().copied().fold(f64::INFINITY, f64::min);
        Ok((
            onto_increasing(t * ap.sin_pi().powi(2), &g, f64::INFINITY),
            lo,
            t,
        ))
    });
    let mut notes = Vec::new();
    let rows = a_vals
        .iter()
        .zip(out)
        .map(|(&a, o)| {
            if let Ok((_, lo, t)) = &o {
                notes.push(format!(
                    "a = {a}: smallest quotient {lo:.6} against the K -> 1 limit t = {t:.6}"
                ));
            }
            Row::new(vec![("a", a)], o.map(|(v, _, _)| v))
        })
        .collect();
    CheckOutput { rows, notes }
}

/// `K_a(r)^c + K_a′(r)^c` on `(0, 1/√2)` between `(π/2)^c` and `2K_a(1/√2)^c`.
fn power_sum_k(ctx: &Ctx) -> CheckOutput {
    let rs = ctx.grid.r_below_center();
    let mut pts = Vec::new();
    for a in ctx.grid.a_values() {
        for c in [-3.0, -2.0, -1.0, -0.5, -0.1] {
            pts.push((a, c));
        }
    }
    let out: Vec<Result<(Vec<f64>, Vec<f64>)>> = par_map(&pts, |&(a, c)| {
        let ap = OrderParam::new(a)?;
        let f = collect(rs.iter().map(|&r| {
            let rad = Radius::new(r)?;
            Ok(ell_k(ap, rad, ctx.cfg)?.powf(c) + ell_kc(ap, rad, ctx.cfg)?.powf(c))
        }))?;
        let kc = ell_k(ap, Radius::new(FRAC_1_SQRT_2)?, ctx.cfg)?;
        Ok((onto_increasing(FRAC_PI_2.powf(c), &f, 2.0 * kc.powf(c)), f))
    });
    let rising = out
        .iter()
        .filter(|o| matches!(o, Ok((_, f)) if f.windows(2).all(|w| w[1] >= w[0])))
        .count();
    let rows = pts
        .iter()
        .zip(out)
        .map(|(&(a, c), o)| Row::new(vec![("a", a), ("c", c)], o.map(|(v, _)| v)))
        .collect();
    CheckOutput {
        rows,
        notes: vec![format!(
            "sampled curves observed increasing on {rising} of {}",
            pts.len()
        )],
    }
}

/// `log λ(K)/(K − 1/K)` increasing onto `(2K(1/√2)²/(π sin πa), π/sin πa)`.
fn lambda_over_k_minus_inverse(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_above_one();
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let l = lambda_curve(ctx, ap, &ks)?;
                let f: Vec<f64> = l.iter().zip(&ks).map(|(v, k)| v / (k - 1.0 / k)).collect();
                let kc = ell_k(ap, Radius::new(FRAC_1_SQRT_2)?, ctx.cfg)?;
                let sin = ap.sin_pi();
                Ok(onto_increasing(2.0 * kc * kc / (PI * sin), &f, PI / sin))
            }),
        )
    })
    .into()
}

fn lambda_plus_one_convex(ctx: &Ctx) -> CheckOutput {
    let ks = k_axis(ctx);
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let l = lambda_curve(ctx, OrderParam::new(a)?, &ks)?;
                let f: Vec<f64> = l.iter().map(|v| log_add_exp(*v, 0.0)).collect();
                Ok(convex(&ks, &f))
            }),
        )
    })
    .into()
}

fn lambda_log_concave(ctx: &Ctx) -> CheckOutput {
    let ks = k_axis(ctx);
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| Ok(concave(&ks, &lambda_curve(ctx, OrderParam::new(a)?, &ks)?))),
        )
    })
    .into()
}

fn lambda_over_log_k(ctx: &Ctx) -> CheckOutput {
    let ks = ctx.grid.k_above_one();
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                Ok(lambda_curve(ctx, OrderParam::new(a)?, &ks)?
                    .iter()
                    .zip(&ks)
                    .map(|(v, k)| v / k.ln())
                    .collect())
            }),
        )
    })
    .into()
}

/// `λ(K^c) < λ(K)^c`
fn lambda_power(ctx: &Ctx) -> CheckOutput {
    let pts = product3(
        &ctx.grid.a_values(),
        &ctx.grid.k_above_one(),
        &[0.25, 0.5, 0.75],
    );
    par_rows(&pts, |&(a, k, c)| {
        Row::new(
            vec![("a", a), ("K", k), ("c", c)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                Ok(vec![
                    log_lambda(ap, k.powf(c), ctx.cfg)?,
                    c * log_lambda(ap, k, ctx.cfg)?,
                ])
            }),
        )
    })
    .into()
}

/// `(μ(r) − μ(r′))/log(r′/r)` increasing from `(0, 1/√2)` onto `(1, t)`.
fn mu_difference_quotient(ctx: &Ctx) -> CheckOutput {
    let rs = ctx.grid.r_below_center();
    par_rows(&ctx.grid.a_values(), |&a| {
        Row::new(
            vec![("a", a)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let f = collect(rs.iter().map(|&r| {
                    let rad = Radius::new(r)?;
                    let d = mu(ap, rad, ctx.cfg)? - mu(ap, rad.complement(), ctx.cfg)?;
                    Ok(d / (rad.ln_complement() - rad.ln()))
                }))?;
                Ok(onto_increasing(1.0, &f, mu_difference_rate(ap, ctx.cfg)?))
            }),
        )
    })
    .into()
}

fn ar_below(ctx: &Ctx) -> Vec<(f64, f64)> {
    product2(&ctx.grid.a_values(), &ctx.grid.r_below_center())
}

fn mu_difference_bounds(ctx: &Ctx) -> CheckOutput {
    par_rows(&ar_below(ctx), |&(a, r)| {
        Row::new(
            vec![("a", a), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let b = mu_symmetric_bounds(ap, rad, ctx.cfg)?;
                let d = mu(ap, rad, ctx.cfg)? - mu(ap, rad.complement(), ctx.cfg)?;
                Ok(b.difference.chain_above_lower(d))
            }),
        )
    })
    .into()
}

fn mu_doubled_bounds(ctx: &Ctx) -> CheckOutput {
    par_rows(&ar_below(ctx), |&(a, r)| {
        Row::new(
            vec![("a", a), ("r", r)],
            sides(|| {
                let ap = OrderParam::new(a)?;
                let rad = Radius::new(r)?;
                let b = mu_symmetric_bounds(ap, rad, ctx.cfg)?;
                Ok(b.doubled.chain_above_lower(2.0 * mu(ap, rad, ctx.cfg)?))
            }),
        )
    })
    .into()
}
