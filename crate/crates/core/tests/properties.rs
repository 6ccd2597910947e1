//! Randomized invariants of the numerical kernels.

use std::f64::consts::{FRAC_PI_2, PI};

use gmodular::bounds::{
    artanh_log_chain, k_addition_chain, moebius_bound, power_addition_bounds, tanh_sum,
};
use gmodular::elliptic::{dk_dr, ell_e, ell_k, ell_kc, OrderParam, Radius};
use gmodular::hypergeometric::{gauss_2f1, zero_balanced_ratio, HypArgs};
use gmodular::modular::{mu, mu_inv, phi, phi_solution};
use gmodular::special::{beta, digamma, pochhammer, ramanujan_r};
use gmodular::EvalConfig;
use proptest::prelude::*;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn order() -> impl Strategy<Value = f64> {
    0.01f64..=0.5
}

fn radius() -> impl Strategy<Value = f64> {
    prop_oneof![
        1e-4f64..0.999,
        (-9.0f64..-0.5).prop_map(|e| 1.0 - 10f64.powf(e))
    ]
}

fn distortion() -> impl Strategy<Value = f64> {
    (-2.3f64..2.3).prop_map(f64::exp)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pochhammer_recurrence(a in -5.0f64..5.0, n in 0u32..50) {
        let lhs = pochhammer(a, n + 1);
        let rhs = pochhammer(a, n) * (a + n as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-300));
    }

    #[test]
    fn beta_symmetry(x in 0.01f64..20.0, y in 0.01f64..20.0) {
        let (b1, b2) = (beta(x, y).unwrap(), beta(y, x).unwrap());
        prop_assert!((b1 - b2).abs() <= 1e-13 * b1);
        let b = beta(x, 1.0).unwrap();
        prop_assert!((b * x - 1.0).abs() <= 1e-13);
    }

    #[test]
    fn digamma_recurrence(x in 0.1f64..50.0) {
        let d = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        prop_assert!((d - 1.0 / x).abs() <= 1e-11);
    }

    #[test]
    fn ramanujan_symmetric(a in 0.01f64..0.99) {
        let (x, y) = (ramanujan_r(a).unwrap(), ramanujan_r(1.0 - a).unwrap());
        prop_assert!((x - y).abs() <= 1e-14 * x.abs());
    }

    #[test]
    fn zero_balanced_ratio_bracketed(a in 0.05f64..3.0, b in 0.05f64..3.0, x in 0.01f64..0.99) {
        let v = zero_balanced_ratio(a, b, x, &cfg()).unwrap();
        prop_assert!(a * b / (a + b) < v && v < 1.0 / beta(a, b).unwrap());
    }

    #[test]
    fn mu_round_trip(a in order(), r in radius()) {
        let ap = OrderParam::new(a).unwrap();
        let c = cfg();
        let y = mu(ap, Radius::new(r).unwrap(), &c).unwrap();
        let s = mu_inv(ap, y, &c, &c.solver()).unwrap();
        prop_assert!((s.s - r).abs() <= 1e-10, "a={a} r={r} s={}", s.s);
    }

    #[test]
    fn mu_functional_identity(a in order(), r in radius()) {
        let ap = OrderParam::new(a).unwrap();
        let rad = Radius::new(r).unwrap();
        let c = cfg();
        let p = mu(ap, rad, &c).unwrap() * mu(ap, rad.complement(), &c).unwrap();
        let want = (PI / (2.0 * ap.sin_pi())).powi(2);
        prop_assert!((p / want - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn complement_identity(a in order(), k in distortion(), r in radius()) {
        let ap = OrderParam::new(a).unwrap();
        let rad = Radius::new(r).unwrap();
        let c = cfg();
        let s = phi(ap, k, rad, &c).unwrap();
        let t = phi(ap, 1.0 / k, rad.complement(), &c).unwrap();
        prop_assert!((s * s + t * t - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn composition(a in order(), ka in distortion(), kb in distortion(), r in 0.01f64..0.99) {
        let ap = OrderParam::new(a).unwrap();
        let c = cfg();
        let inner = phi_solution(ap, kb, Radius::new(r).unwrap(), &c).unwrap();
        let outer = phi_solution(ap, ka, inner.radius(), &c).unwrap();
        let direct = phi_solution(ap, ka * kb, Radius::new(r).unwrap(), &c).unwrap();
        prop_assert!((outer.log_s - direct.log_s).abs() <= 1e-9 * direct.log_s.abs().max(1.0));
    }

    #[test]
    fn phi_power_lower_bound(a in order(), k in 1.0f64..10.0, r in radius()) {
        let ap = OrderParam::new(a).unwrap();
        let rad = Radius::new(r).unwrap();
        let s = phi_solution(ap, k, rad, &cfg()).unwrap();
        prop_assert!(rad.ln() / k <= s.log_s + 1e-12);
    }

    #[test]
    fn complementary_energy_positive_with_slope(a in order(), r in 0.02f64..0.98) {
        // h(r) = E − r′²K has h′(r) = 2a r K
        let ap = OrderParam::new(a).unwrap();
        let c = cfg();
        let h = |x: f64| {
            let rad = Radius::new(x).unwrap();
            ell_e(ap, rad, &c).unwrap() - (1.0 - x * x) * ell_k(ap, rad, &c).unwrap()
        };
        prop_assert!(h(r) > 0.0);
        let d = 1e-5 * r.min(1.0 - r);
        let fd = (h(r + d) - h(r - d)) / (2.0 * d);
        let want = 2.0 * a * r * ell_k(ap, Radius::new(r).unwrap(), &c).unwrap();
        prop_assert!((fd / want - 1.0).abs() <= 1e-5, "fd {fd} want {want}");
    }

    #[test]
    fn product_inequalities(a in order(), r in 0.01f64..0.99, s in 0.01f64..0.99) {
        let ap = OrderParam::new(a).unwrap();
        let c = cfg();
        let rad = |x: f64| Radius::new(x).unwrap();
        let k = |x: f64| ell_k(ap, rad(x), &c).unwrap();
        let e = |x: f64| ell_e(ap, rad(x), &c).unwrap();
        let tol = 1e-12;
        prop_assert!(k(r * s) <= (k(r * r) * k(s * s)).sqrt() * (1.0 + tol));
        prop_assert!((k(r * r) * k(s * s)).sqrt() <= 2.0 / PI * k(r) * k(s) * (1.0 + tol));
        prop_assert!(2.0 / PI * e(r) * e(s) <= (e(r * r) * e(s * s)).sqrt() * (1.0 + tol));
        prop_assert!((e(r * r) * e(s * s)).sqrt() <= e(r * s) * (1.0 + tol));
    }

    #[test]
    fn k_addition_chain_ordered(a in order(), r in radius(), s in radius()) {
        let ap = OrderParam::new(a).unwrap();
        let c = cfg();
        let (rr, sr) = (Radius::new(r).unwrap(), Radius::new(s).unwrap());
        let sum = ell_k(ap, rr, &c).unwrap() + ell_k(ap, sr, &c).unwrap();
        let chain = k_addition_chain(ap, rr, sr, &c).unwrap().chain_above_lower(sum);
        for w in chain.windows(2) {
            prop_assert!(w[0] <= w[1] * (1.0 + 1e-12), "{chain:?}");
        }
    }

    #[test]
    fn addition_bounds_ordered(a in order(), k in 1.0f64..5.0, p in 1.0f64..4.0, r in 0.01f64..0.99, s in 0.01f64..0.99) {
        let ap = OrderParam::new(a).unwrap();
        let c = cfg();
        let (rr, sr) = (Radius::new(r).unwrap(), Radius::new(s).unwrap());
        let mid = tanh_sum(phi(ap, k, rr, &c).unwrap(), phi(ap, k, sr, &c).unwrap());
        let b = power_addition_bounds(ap, k, p, rr, sr, &c).unwrap();
        prop_assert!(b.lower <= mid * (1.0 + 1e-12) && mid <= b.upper * (1.0 + 1e-12));
        prop_assert!(moebius_bound(ap, k, rr, sr, &c).unwrap() <= mid * (1.0 + 1e-12));
    }

    #[test]
    fn thm17_upper_bound_dominates(r in 0.01f64..0.999) {
        let rad = Radius::new(r).unwrap();
        let chain = artanh_log_chain(2.0, rad, &cfg()).unwrap();
        let k = ell_k(OrderParam::new(0.5).unwrap(), rad, &cfg()).unwrap();
        prop_assert!(k < chain.upper && chain.upper <= FRAC_PI_2 * r.atanh() / r);
    }

    #[test]
    fn k_kc_and_slope(a in order(), r in 0.01f64..0.99) {
        let ap = OrderParam::new(a).unwrap();
        let rad = Radius::new(r).unwrap();
        let c = cfg();
        let kc = ell_kc(ap, rad, &c).unwrap();
        let kc2 = ell_k(ap, rad.complement(), &c).unwrap();
        prop_assert!((kc - kc2).abs() <= 1e-14 * kc);
        prop_assert!(dk_dr(ap, rad, &c).unwrap() > 0.0);
    }

    #[test]
    fn series_agrees_with_transformation_at_switch(a in 0.02f64..0.98) {
        let c = cfg();
        let z = c.near_one_switch;
        let eps = 1e-12;
        let below = gauss_2f1(&HypArgs::new(a, 1.0 - a, 1.0, z - eps).unwrap(), &c).unwrap();
        let above = gauss_2f1(&HypArgs::new(a, 1.0 - a, 1.0, z + eps).unwrap(), &c).unwrap();
        prop_assert!((below / above - 1.0).abs() <= 1e-9);
    }
}
