//! Zero-balanced three-parameter integrals and moduli in the `(a, c)` shorthand.

use super::sides;
use crate::bounds::{cosh_midpoint, cosh_sum, geometric_mean_radius};
use crate::elliptic::{ell_k3, Radius, TriParam};
use crate::error::Result;
use crate::harness::checks::{
    atanh_from_ln, atanh_of, collect, concave, onto_decreasing, onto_increasing, product2, rel_dev,
    sech_radius, within,
};
use crate::harness::registry::CheckDef;
use crate::harness::suites::elliptic_bounds::EQUALITY_TOL;
use crate::harness::{par_rows, CheckOutput, Ctx, Row};
use crate::modular::{mu3, phi3_solution, ModularSolution};

pub(crate) const LEMMA_4_1: &[CheckDef] = &[CheckDef::shape("increasing", modulus_artanh)];

pub(crate) const LEMMA_4_2: &[CheckDef] = &[
    CheckDef::shape("1", |c| quotient_shape(c, Quotient::F1)),
    CheckDef::shape("2", |c| quotient_shape(c, Quotient::F2)),
    CheckDef::shape("3", |c| quotient_shape(c, Quotient::F3)),
    CheckDef::shape("4", |c| quotient_shape(c, Quotient::G1)),
    CheckDef::shape("5", |c| quotient_shape(c, Quotient::G2)),
    CheckDef::shape("6", |c| quotient_shape(c, Quotient::G3)),
    CheckDef::shape("7", |c| quotient_shape(c, Quotient::G4)),
    CheckDef::shape("8", |c| quotient_shape(c, Quotient::G5)),
];

pub(crate) const THM_4_3: &[CheckDef] = &[
    CheckDef::ineq("chain", addition_chain),
    CheckDef::identity("equality", addition_equality),
    CheckDef::shape("f_shape", sech_modulus_shape),
];

pub(crate) const LEMMA_4_4: &[CheckDef] = &[
    CheckDef::ineq("chain", geometric_chain),
    CheckDef::identity("equality", geometric_equality),
];

pub(crate) const THM_4_5: &[CheckDef] = &[
    CheckDef::ineq("above", |c| tanh_comparison(c, false)),
    CheckDef::ineq("below", |c| tanh_comparison(c, true)),
];

const C_VALUES: [f64; 3] = [0.6, 0.8, 1.0];

fn ac_pairs(ctx: &Ctx) -> Vec<(f64, f64)> {
    product2(&ctx.grid.a_values(), &C_VALUES)
        .into_iter()
        .filter(|(a, c)| a < c)
        .collect()
}

fn acr(ctx: &Ctx, rs: &[f64]) -> Vec<(f64, f64, f64)> {
    let mut v = Vec::new();
    for (a, c) in ac_pairs(ctx) {
        for &r in rs {
            v.push((a, c, r));
        }
    }
    v
}

/// `μ_{a,c}(r) artanh r` increasing onto `(0, (B(a, c−a)/2)²)`.
fn modulus_artanh(ctx: &Ctx) -> CheckOutput {
    let rs = ctx.grid.r_values();
    par_rows(&ac_pairs(ctx), |&(a, c)| {
        Row::new(
            vec![("a", a), ("c", c)],
            sides(|| {
                let t = TriParam::two_param(a, c)?;
                let f = collect(rs.iter().map(|&r| {
                    let rad = Radius::new(r)?;
                    Ok(mu3(&t, rad, ctx.cfg)? * atanh_from_ln(rad.ln()))
                }))?;
                Ok(onto_increasing(0.0, &f, t.half_beta()?.powi(2)))
            }),
        )
    })
    .into()
}

#[derive(Clone, Copy)]
enum Quotient {
    F1,
    F2,
    F3,
    G1,
    G2,
    G3,
    G4,
    G5,
}

struct Moduli {
    r: Radius,
    k: f64,
    kc: f64,
    s: ModularSolution,
    ks: f64,
    kcs: f64,
    t: ModularSolution,
    kt: f64,
    kct: f64,
}

fn moduli(tri: &TriParam, k: f64, r: f64, ctx: &Ctx) -> Result<Moduli> {
    let r = Radius::new(r)?;
    let s = phi3_solution(tri, k, r, ctx.cfg)?;
    let t = phi3_solution(tri, 1.0 / k, r, ctx.cfg)?;
    let kk = |x: Radius| ell_k3(tri, x, ctx.cfg);
    Ok(Moduli {
        r,
        k: kk(r)?,
        kc: kk(r.complement())?,
        ks: kk(s.radius())?,
        kcs: kk(s.radius().complement())?,
        kt: kk(t.radius())?,
        kct: kk(t.radius().complement())?,
        s,
        t,
    })
}

impl Quotient {
    fn value(self, m: &Moduli) -> f64 {
        let (rv, rc) = (m.r.value(), m.r.complement_value());
        match self {
            Self::F1 => m.ks / m.k,
            Self::F2 => m.s.s_complement * m.ks * m.ks / (rc * m.k * m.k),
            Self::F3 => m.s.s * m.kcs * m.kcs / (rv * m.kc * m.kc),
            Self::G1 => m.kt / m.k,
            Self::G2 => m.t.s_complement * m.kt * m.kt / (rc * m.k * m.k),
            Self::G3 => m.t.s * m.kct * m.kct / (rv * m.kc * m.kc),
            Self::G4 => m.s.s / rv,
            Self::G5 => m.t.s / rv,
        }
    }

    fn chain(self, k: f64, f: &[f64]) -> Vec<f64> {
        match self {
            Self::F1 => onto_increasing(1.0, f, k),
            Self::F2 => onto_decreasing(0.0, f, 1.0),
            Self::F3 | Self::G4 => onto_decreasing(1.0, f, f64::INFINITY),
            Self::G1 => onto_decreasing(1.0 / k, f, 1.0),
            Self::G2 => onto_increasing(1.0, f, f64::INFINITY),
            Self::G3 | Self::G5 => onto_increasing(0.0, f, 1.0),
        }
    }
}

fn quotient_shape(ctx: &Ctx, q: Quotient) -> CheckOutput {
    let rs = ctx.grid.r_values();
    let mut pts = Vec::new();
    for (a, c) in ac_pairs(ctx) {
        for k in ctx.grid.k_above_one() {
            pts.push((a, c, k));
        }
    }
    par_rows(&pts, |&(a, c, k)| {
        Row::new(
            vec![("a", a), ("c", c), ("K", k)],
            sides(|| {
                let tri = TriParam::two_param(a, c)?;
                let f = collect(rs.iter().map(|&r| Ok(q.value(&moduli(&tri, k, r, ctx)?))))?;
                Ok(q.chain(k, &f))
            }),
        )
    })
    .into()
}

fn rs_points(ctx: &Ctx) -> Vec<(f64, f64, f64, f64)> {
    let g = ctx.grid;
    let mut v = Vec::new();
    for (a, c) in ac_pairs(ctx) {
        for (r, s) in product2(&g.r_values(), &g.s_values()) {
            v.push((a, c, r, s));
        }
    }
    v
}

/// `[μ(r ⊕ s), μ(r) + μ(s), 2μ(√(2rs/(1+rs+r′s′))), 2μ(√(rs))]`
fn addition_sides(ctx: &Ctx, a: f64, c: f64, r: f64, s: f64) -> Result<[f64; 4]> {
    let t = TriParam::two_param(a, c)?;
    let (rr, sr) = (Radius::new(r)?, Radius::new(s)?);
    let m = |x: Radius| mu3(&t, x, ctx.cfg);
    Ok([
        m(cosh_sum(rr, sr))?,
        m(rr)? + m(sr)?,
        2.0 * m(cosh_midpoint(rr, sr))?,
        2.0 * m(geometric_mean_radius(rr, sr)?)?,
    ])
}

fn addition_chain(ctx: &Ctx) -> CheckOutput {
    par_rows(&rs_points(ctx), |&(a, c, r, s)| {
        Row::new(
            vec![("a", a), ("c", c), ("r", r), ("s", s)],
            addition_sides(ctx, a, c, r, s).map(|v| v[..3].to_vec()),
        )
    })
    .into()
}

fn addition_equality(ctx: &Ctx) -> CheckOutput {
    par_rows(&acr(ctx, &ctx.grid.r_values()), |&(a, c, r)| {
        Row::new(
            vec![("a", a), ("c", c), ("r", r), ("s", r)],
            addition_sides(ctx, a, c, r, r).map(|v| within(rel_dev(v[1], v[2]), EQUALITY_TOL)),
        )
    })
    .into()
}

/// `x ↦ μ_{a,c}(1/cosh x)` increasing and concave onto `(0, ∞)`.
fn sech_modulus_shape(ctx: &Ctx) -> CheckOutput {
    let xs = ctx.grid.x_values();
    let mut rows = Vec::new();
    for concavity in [false, true] {
        rows.extend(par_rows(&ac_pairs(ctx), |&(a, c)| {
            Row::new(
                vec![
                    ("a", a),
                    ("c", c),
                    ("concavity", f64::from(u8::from(concavity))),
                ],
                sides(|| {
                    let t = TriParam::two_param(a, c)?;
                    let f = collect(xs.iter().map(|&x| mu3(&t, sech_radius(x)?, ctx.cfg)))?;
                    Ok(if concavity {
                        concave(&xs, &f)
                    } else {
                        onto_increasing(0.0, &f, f64::INFINITY)
                    })
                }),
            )
        }));
    }
    rows.into()
}

fn geometric_chain(ctx: &Ctx) -> CheckOutput {
    par_rows(&rs_points(ctx), |&(a, c, r, s)| {
        Row::new(
            vec![("a", a), ("c", c), ("r", r), ("s", s)],
            addition_sides(ctx, a, c, r, s).map(|v| vec![v[1], v[2], v[3]]),
        )
    })
    .into()
}

fn geometric_equality(ctx: &Ctx) -> CheckOutput {
    par_rows(&acr(ctx, &ctx.grid.r_values()), |&(a, c, r)| {
        Row::new(
            vec![("a", a), ("c", c), ("r", r), ("s", r)],
            addition_sides(ctx, a, c, r, r).map(|v| within(rel_dev(v[1], v[3]), EQUALITY_TOL)),
        )
    })
    .into()
}

/// `tanh(K artanh r) < φ_K^{a,c}(r)` for `K > 1`, reversed for `1/K`,
/// compared in artanh.
fn tanh_comparison(ctx: &Ctx, reciprocal: bool) -> CheckOutput {
    let mut pts = Vec::new();
    for (a, c, r) in acr(ctx, &ctx.grid.r_values()) {
        for k in ctx.grid.k_above_one() {
            pts.push((a, c, r, if reciprocal { 1.0 / k } else { k }));
        }
    }
    par_rows(&pts, |&(a, c, r, k)| {
        Row::new(
            vec![("a", a), ("c", c), ("K", k), ("r", r)],
            sides(|| {
                let t = TriParam::two_param(a, c)?;
                let rad = Radius::new(r)?;
                let lhs = k * atanh_from_ln(rad.ln());
                let rhs = atanh_of(&phi3_solution(&t, k, rad, ctx.cfg)?);
                Ok(if reciprocal {
                    vec![rhs, lhs]
                } else {
                    vec![lhs, rhs]
                })
            }),
        )
    })
    .into()
}
