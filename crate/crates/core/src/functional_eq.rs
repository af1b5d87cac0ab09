//! Functional equations for zeta(sigma, a) and Phi(sigma, a, z) on
//! -1 < sigma < 0, and numerical checks of the partial-fraction expansions
//! of the kernels and of the Mellin transform of 1/(x - w).
//!
//! The exponential sums on the right-hand sides converge like N^sigma, so
//! the part beyond `n_max` is replaced by an Abel-summation estimate
//! (see [`crate::sum::abel_tail`]).

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{domain, Error, Result};
use crate::evaluator::{EvalResult, Method};
use crate::kernels::{kernel_g, kernel_gz, ParamPoint};
use crate::quad::tanh_sinh;
use crate::special::{complex_pow, gamma_real, principal_log};
use crate::sum::{abel_tail, ComplexSum};

const I: Complex64 = Complex64::new(0.0, 1.0);
/// Forward differences used by the Abel tail.
const TAIL_TERMS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FESumConfig {
    pub n_max: usize,
    pub use_tail_correction: bool,
}

impl Default for FESumConfig {
    fn default() -> Self {
        Self { n_max: 4096, use_tail_correction: true }
    }
}

impl FESumConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 16 {
            return Err(domain(format!("n_max = {} must be at least 16", self.n_max)));
        }
        Ok(())
    }
}

fn check_sigma(sigma: f64) -> Result<()> {
    if sigma > -1.0 && sigma < 0.0 {
        Ok(())
    } else {
        Err(domain(format!("functional equation needs -1 < sigma < 0, got {sigma}")))
    }
}

fn check_open_a(a: f64) -> Result<()> {
    if a > 0.0 && a < 1.0 {
        Ok(())
    } else {
        Err(domain(format!("functional equation needs 0 < a < 1, got {a}")))
    }
}

/// sum_{n >= 1} w^n f(n): direct up to `n_max`, then the optional tail.
/// Returns the sum and the size of the last tail correction.
fn one_sided<F>(w: Complex64, f: F, cfg: &FESumConfig) -> (Complex64, f64)
where
    F: Fn(usize) -> Complex64,
{
    let mut acc = ComplexSum::new();
    let mut wn = Complex64::new(1.0, 0.0);
    for n in 1..=cfg.n_max {
        wn *= w;
        acc.add(wn * f(n));
    }
    let est = if cfg.use_tail_correction {
        let (tail, last) = abel_tail(w, &f, cfg.n_max + 1, TAIL_TERMS);
        acc.add(tail);
        last
    } else {
        // the leading Abel term is a fair size estimate of what was dropped
        (f(cfg.n_max + 1) / (Complex64::new(1.0, 0.0) - w)).norm()
    };
    (acc.value(), est)
}

/// Right-hand side of the Hurwitz functional equation:
///
///   (-pi i)(2 pi)^{sigma-1} / (Gamma(sigma) sin(pi sigma))
///     * [e^{pi i sigma/2} S_+ - e^{-pi i sigma/2} S_-],
///   S_pm = sum_{n >= 1} e^{pm 2 pi i n a} n^{sigma-1}.
pub fn zeta_fe_rhs(sigma: f64, a: f64, cfg: &FESumConfig) -> Result<EvalResult> {
    check_sigma(sigma)?;
    check_open_a(a)?;
    cfg.validate()?;
    let f = |n: usize| Complex64::new((n as f64).powf(sigma - 1.0), 0.0);
    let w = Complex64::from_polar(1.0, TAU * a);
    let (sp, ep) = one_sided(w, f, cfg);
    let (sm, em) = one_sided(w.conj(), f, cfg);
    let rot = Complex64::from_polar(1.0, PI * sigma / 2.0);
    let bracket = rot * sp - rot.conj() * sm;
    let pref = -PI * I * TAU.powf(sigma - 1.0) / (gamma_real(sigma)? * (PI * sigma).sin());
    let value = pref * bracket;
    let err = pref.norm() * (ep + em) + 4.0 * f64::EPSILON * pref.norm() * (sp.norm() + sm.norm());
    Ok(EvalResult { value, abs_err_estimate: err, method: Method::FunctionalEq })
}

/// Right-hand side of the Lerch functional equation:
///
///   z^{-a} Gamma(1 - sigma) sum_{n in Z} (-log z + 2 pi i n)^{sigma-1} e^{2 pi i n a},
///
/// principal branches throughout, the bilateral sum taken symmetrically.
pub fn phi_fe_rhs(sigma: f64, a: f64, z: Complex64, cfg: &FESumConfig) -> Result<EvalResult> {
    check_sigma(sigma)?;
    check_open_a(a)?;
    cfg.validate()?;
    if ParamPoint::new(a, z)?.is_one() {
        return Err(domain("phi_fe_rhs needs z != 1 (the n = 0 term is singular)"));
    }
    let log_z = principal_log(z)?;
    let base = -log_z;
    let n0 = complex_pow(base, sigma - 1.0)?;
    let pow = |b: Complex64| -> Complex64 {
        // bases here are never zero: n != 0 keeps the imaginary part away from it
        (principal_log(b).expect("nonzero base") * (sigma - 1.0)).exp()
    };
    let w = Complex64::from_polar(1.0, TAU * a);
    let (pos, ep) = one_sided(w, |n| pow(base + I * (TAU * n as f64)), cfg);
    let (neg, en) = one_sided(w.conj(), |n| pow(base - I * (TAU * n as f64)), cfg);
    let mut acc = ComplexSum::new();
    acc.add(n0);
    acc.add(pos);
    acc.add(neg);
    let pref = (-a * log_z).exp() * gamma_real(1.0 - sigma)?;
    let value = pref * acc.value();
    let mag = n0.norm() + pos.norm() + neg.norm();
    let err = pref.norm() * (ep + en + 4.0 * f64::EPSILON * mag);
    Ok(EvalResult { value, abs_err_estimate: err, method: Method::FunctionalEq })
}

/// Truncated partial-fraction expansion of G(a, x) at level N, paired with
/// G(a, x) itself:
///
///   sum_{n=1}^N [x e^{-2 pi i n a} / (2 pi i n (x - 2 pi i n))
///              - x e^{2 pi i n a} / (2 pi i n (x + 2 pi i n))].
///
/// The n-th pair is twice the real part of its first member.
pub fn verify_kernel_expansion_z1(a: f64, x: f64, n_max: usize) -> Result<(f64, f64)> {
    check_open_a(a)?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("x = {x} must be positive")));
    }
    let mut acc = ComplexSum::new();
    for n in 1..=n_max {
        let y = TAU * n as f64;
        let first = x * Complex64::from_polar(1.0, -y * a) / (I * y * (x - I * y));
        let second = x * Complex64::from_polar(1.0, y * a) / (I * y * (x + I * y));
        acc.add(first - second);
    }
    Ok((acc.value().re, kernel_g(a, x)?))
}

/// Truncated expansion of G_z(a, x) over its poles 2 pi i n + log z, |n| <= N:
///
///   sum x z^{-a} e^{-2 pi i n a} / ((2 pi i n + log z)(x - 2 pi i n - log z)),
///
/// paired with G_z(a, x).
pub fn verify_kernel_expansion_zne1(a: f64, z: Complex64, x: f64, n_max: usize) -> Result<(Complex64, Complex64)> {
    if ParamPoint::new(a, z)?.is_one() {
        return Err(Error::WrongKernel("z = 1: use verify_kernel_expansion_z1".into()));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("x = {x} must be positive")));
    }
    let log_z = principal_log(z)?;
    let z_pow = (-a * log_z).exp();
    let n_max = n_max as i64;
    let mut acc = ComplexSum::new();
    for n in -n_max..=n_max {
        let pole = I * (TAU * n as f64) + log_z;
        acc.add(x * z_pow * Complex64::from_polar(1.0, -TAU * n as f64 * a) / (pole * (x - pole)));
    }
    Ok((acc.value(), kernel_gz(a, z, x)?))
}

/// Both sides of the Mellin identity
///
///   int_0^inf x^sigma / (x - w) dx = 2 pi i / (1 - e^{2 pi i sigma}) * w^sigma,
///
/// with w^sigma taken with arg w in (0, 2 pi): the cut of the integrand's
/// continuation in w runs along the positive real axis.
pub fn verify_mellin_identity(sigma: f64, w: Complex64) -> Result<(Complex64, Complex64)> {
    check_sigma(sigma)?;
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(domain(format!("w = {w} is not finite")));
    }
    if w.im == 0.0 && w.re >= 0.0 {
        return Err(Error::Domain(format!("w = {w} lies on [0, inf): the integrand has a non-integrable pole")));
    }
    let r = w.norm();
    // [0, r] directly; [r, inf) through x = r/u onto (0, 1]
    let near = tanh_sinh(|x| Complex64::new(x.powf(sigma), 0.0) / (x - w), 0.0, r, 12, 1e-15);
    let far = tanh_sinh(|u| r.powf(sigma + 1.0) * u.powf(-sigma - 1.0) / (r - w * u), 0.0, 1.0, 12, 1e-15);
    let lhs = near.value + far.value;

    let mut arg = w.im.atan2(w.re);
    if arg <= 0.0 {
        arg += TAU;
    }
    let w_pow = Complex64::from_polar(r.powf(sigma), sigma * arg);
    let rhs = TAU * I / (1.0 - Complex64::from_polar(1.0, TAU * sigma)) * w_pow;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluator::{hurwitz_em, hurwitz_integral_neg, phi_integral_neg, phi_series, QuadConfig};
    use proptest::prelude::*;

    fn fe() -> FESumConfig {
        FESumConfig::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_fe_examples() {
        let r = zeta_fe_rhs(-0.5, 0.5, &fe()).unwrap();
        let want = hurwitz_integral_neg(-0.5, 0.5, &QuadConfig::default()).unwrap().value;
        assert!((r.value - want).norm() < 1e-9, "{} vs {}", r.value, want);
        let r = zeta_fe_rhs(-0.5, 0.25, &fe()).unwrap();
        assert!((r.value.re - hurwitz_em(-0.5, 0.25).unwrap().value.re).abs() < 1e-9);
        assert!((r.value.re - 0.09032225876124624387).abs() < 1e-9);
        assert!(r.method == Method::FunctionalEq);
    }

    #[test]
    fn zeta_fe_domain() {
        assert!(zeta_fe_rhs(-0.5, 0.0, &fe()).is_err());
        assert!(zeta_fe_rhs(-0.5, 1.0, &fe()).is_err());
        assert!(zeta_fe_rhs(0.5, 0.5, &fe()).is_err());
        assert!(zeta_fe_rhs(-0.5, 0.5, &FESumConfig { n_max: 8, use_tail_correction: true }).is_err());
    }

    #[test]
    fn phi_fe_examples() {
        let q = QuadConfig::default();
        let r = phi_fe_rhs(-0.5, 0.5, c(-1.0, 0.0), &fe()).unwrap();
        assert!((r.value - c(0.1945814610680581710, 0.0)).norm() < 1e-9);
        let want = phi_integral_neg(-0.5, 0.5, c(-1.0, 0.0), &q).unwrap().value;
        assert!((r.value - want).norm() < 1e-6);
        let r = phi_fe_rhs(-0.5, 0.5, c(0.5, 0.0), &fe()).unwrap();
        assert!((r.value - phi_series(-0.5, 0.5, c(0.5, 0.0)).unwrap().value).norm() < 1e-9);
        let r = phi_fe_rhs(-0.5, 0.3, c(0.0, 1.0), &fe()).unwrap();
        assert!((r.value - c(-0.05117794831360994785, 0.3669520114056006343)).norm() < 1e-9);
        assert!(phi_fe_rhs(-0.5, 0.3, c(1.0, 0.0), &fe()).is_err());
    }

    #[test]
    fn tail_correction_pays_off() {
        let raw = FESumConfig { n_max: 4096, use_tail_correction: false };
        let want = hurwitz_em(-0.3, 0.4).unwrap().value.re;
        let e_raw = (zeta_fe_rhs(-0.3, 0.4, &raw).unwrap().value.re - want).abs();
        let e_tail = (zeta_fe_rhs(-0.3, 0.4, &fe()).unwrap().value.re - want).abs();
        assert!(e_tail < 1e-3 * e_raw, "raw {e_raw:e} corrected {e_tail:e}");
    }

    #[test]
    fn truncation_error_shrinks_on_doubling() {
        // single ratios depend on the phase of e^{2 pi i N a}; average over a grid
        let mut ratios = Vec::new();
        for &s in &[-0.9, -0.5, -0.1] {
            for &a in &[0.1, 0.3, 0.5, 0.7, 0.9] {
                let want = hurwitz_em(s, a).unwrap().value.re;
                let err = |n| {
                    let cfg = FESumConfig { n_max: n, use_tail_correction: false };
                    (zeta_fe_rhs(s, a, &cfg).unwrap().value.re - want).abs()
                };
                ratios.push(err(1024) / err(2048));
            }
        }
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        assert!(mean >= 1.8, "{ratios:?}");
    }

    #[test]
    fn kernel_expansion_z1_converges() {
        let (s, g) = verify_kernel_expansion_z1(0.5, 1.0, 10_000).unwrap();
        assert!((s - g).abs() <= 5e-4);
        let (s, g) = verify_kernel_expansion_z1(0.25, 0.1, 10_000).unwrap();
        assert!((s - g).abs() <= 5e-4);
    }

    #[test]
    fn kernel_expansion_z1_error_is_second_order_at_symmetric_a() {
        // at a = 1/2 the O(1/N) parts cancel between the paired terms
        let e = |n| {
            let (s, g) = verify_kernel_expansion_z1(0.5, 1.0, n).unwrap();
            (s - g).abs()
        };
        let ratio = e(4096) / e(8192);
        assert!((ratio - 4.0).abs() < 0.2, "ratio {ratio}");
    }

    #[test]
    fn kernel_expansion_zne1_converges() {
        for z in [c(-1.0, 0.0), c(0.0, 1.0)] {
            let (s, g) = verify_kernel_expansion_zne1(0.5, z, 1.0, 10_000).unwrap();
            assert!((s - g).norm() < 1e-3, "z={z}: {s} vs {g}");
        }
        let (s, _) = verify_kernel_expansion_zne1(0.5, c(-1.0, 0.0), 1e-300, 64).unwrap();
        assert!(s.norm() < 1e-290);
    }

    #[test]
    fn mellin_identity() {
        let w2 = c(0.0, TAU);
        for w in [w2, -w2, w2 + c(0.5f64.ln(), 0.0)] {
            let (l, r) = verify_mellin_identity(-0.5, w).unwrap();
            assert!((l - r).norm() <= 1e-9, "w={w}: {l} vs {r}");
        }
        // closed forms after dividing by 2 pi i n with n = 1
        let s = -0.5;
        let unit = |phase: f64| Complex64::from_polar(TAU.powf(s), phase) / (1.0 - Complex64::from_polar(1.0, TAU * s));
        let (_, r) = verify_mellin_identity(s, w2).unwrap();
        assert!((r / (TAU * I) - unit(PI * s / 2.0)).norm() < 1e-14);
        let (_, r) = verify_mellin_identity(s, -w2).unwrap();
        assert!((r / (TAU * I) - unit(3.0 * PI * s / 2.0)).norm() < 1e-14);
        assert!(verify_mellin_identity(-0.5, c(2.0, 0.0)).is_err());
        assert!(verify_mellin_identity(-0.5, c(0.0, 0.0)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn zeta_fe_is_real(s in -0.95f64..-0.05, a in 0.05f64..0.95) {
            let r = zeta_fe_rhs(s, a, &fe()).unwrap();
            prop_assert!(r.value.im.abs() <= 1e-10);
        }

        #[test]
        fn phi_fe_conjugates(s in -0.95f64..-0.05, a in 0.05f64..0.95, th in 0.1f64..3.0, r in 0.3f64..1.0) {
            let z = Complex64::from_polar(r, th);
            let v = phi_fe_rhs(s, a, z, &fe()).unwrap().value;
            let w = phi_fe_rhs(s, a, z.conj(), &fe()).unwrap().value;
            prop_assert!((v.conj() - w).norm() <= 1e-10);
        }
    }
}
