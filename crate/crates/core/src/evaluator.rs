//! Evaluation of Phi(sigma, a, z) and zeta(sigma, a) for real sigma.
//!
//! Paths:
//! - the Dirichlet series (sigma > 1, or any sigma when |z| < 1);
//! - Mellin integrals over the H / G kernels (z = 1) and the G_z kernel
//!   (z != 1), continued to -1 < sigma < 0 by subtracting Taylor terms at
//!   the origin;
//! - closed forms at sigma = 0 and sigma = -1;
//! - Euler-Maclaurin for zeta(sigma, a), kept independent of the integral
//!   code so it can serve as an oracle.
//!
//! All Mellin integrals are split at `QuadConfig::split_point`. Below the
//! split the kernel minus its Taylor terms up to x is integrated with
//! tanh-sinh and the subtracted monomials are integrated exactly; above it
//! only the exponential part is integrated numerically and the algebraic
//! parts (1/x, constants) are integrated in closed form.

use std::fmt;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{domain, Error, Result};
use crate::kernels::{HurwitzKernel, LerchKernel, ParamPoint};
use crate::quad::{exp_sinh, tanh_sinh, QuadResult};
use crate::special::{bernoulli_number, gamma_real};
use crate::sum::{abel_tail, ComplexSum, NeumaierSum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Series,
    /// Mellin integral for sigma > 0.
    IntegralPos,
    /// Continued Mellin integral for -1 < sigma < 0.
    IntegralNeg,
    /// Lerch Mellin integral with z on the unit circle, z != 1 (either sigma range).
    IntegralUnit,
    SpecialValue,
    FunctionalEq,
    EulerMaclaurin,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A value together with a (non-rigorous) absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_err_estimate: f64,
    pub method: Method,
}

impl EvalResult {
    fn new(value: Complex64, abs_err_estimate: f64, method: Method) -> Self {
        Self { value, abs_err_estimate, method }
    }

    fn exact(value: Complex64) -> Self {
        Self::new(value, 0.0, Method::SpecialValue)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadConfig {
    /// Where (0, inf) is split between the two quadrature rules.
    pub split_point: f64,
    /// Upper truncation of the half-line integral; chosen from the kernel
    /// decay rate e^{-ax} when absent.
    pub tail_cutoff: Option<f64>,
    pub max_levels: usize,
    /// Absolute tolerance on each quadrature piece.
    pub tol: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { split_point: 1.0, tail_cutoff: None, max_levels: 10, tol: 1e-13 }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.split_point > 0.0 && self.split_point.is_finite()) {
            return Err(domain(format!("split_point = {} must be positive", self.split_point)));
        }
        if !(self.tol > 0.0) {
            return Err(domain(format!("tol = {} must be positive", self.tol)));
        }
        if let Some(c) = self.tail_cutoff {
            if !(c > self.split_point) {
                return Err(domain(format!("tail_cutoff = {c} must exceed split_point")));
            }
        }
        Ok(())
    }
}

/// Evaluations closer than this to z = 1 are refused by the Lerch integrals.
pub const MIN_DIST_FROM_ONE: f64 = 1e-3;

const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn check_sigma_finite(sigma: f64) -> Result<()> {
    if sigma.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("sigma = {sigma} is not finite")))
    }
}

// ---------------------------------------------------------------------------
// Dirichlet series

const SERIES_MAX_TERMS: usize = 20_000_000;
/// Terms summed directly before the tail correction on |z| = 1.
const UNIT_SERIES_TERMS: usize = 1 << 16;

/// Sum_{n >= 0} z^n (n + a)^{-sigma}.
///
/// For |z| < 1 the sum runs until a geometric bound on the remainder is
/// below rounding. On |z| = 1 (sigma > 1 only) a fixed number of terms is
/// summed and the remainder is corrected: Euler-Maclaurin integral and
/// midpoint terms for z = 1, Abel summation for z != 1.
pub fn phi_series(sigma: f64, a: f64, z: Complex64) -> Result<EvalResult> {
    check_sigma_finite(sigma)?;
    let p = ParamPoint::new(a, z)?;
    if p.on_unit_circle() {
        if sigma <= 1.0 {
            return Err(Error::NonConvergent(format!("|z| = 1 and sigma = {sigma} <= 1; use an integral path")));
        }
        return if p.is_one() { zeta_series_unit(sigma, a) } else { lerch_series_unit(sigma, a, z) };
    }

    let r = z.norm();
    let mut acc = ComplexSum::new();
    let mut zn = C_ONE;
    for n in 0..SERIES_MAX_TERMS {
        let base = n as f64 + a;
        let term = zn * base.powf(-sigma);
        acc.add(term);
        zn *= z;
        // remainder after n: sum_{m > n} |z|^m (m+a)^{-sigma}, ratio of
        // consecutive magnitudes bounded by q for all m > n
        let next = n as f64 + 1.0 + a;
        let q = r * if sigma < 0.0 { (1.0 + 1.0 / next).powf(-sigma) } else { 1.0 };
        if q < 1.0 {
            let tail = zn.norm() * next.powf(-sigma) / (1.0 - q);
            let s = acc.value().norm();
            if tail <= 1e-17 * s.max(1e-300) || tail == 0.0 {
                let err = tail + 4.0 * f64::EPSILON * s;
                return Ok(EvalResult::new(acc.value(), err, Method::Series));
            }
        }
    }
    Err(Error::NonConvergent(format!("series did not converge within {SERIES_MAX_TERMS} terms")))
}

fn zeta_series_unit(sigma: f64, a: f64) -> Result<EvalResult> {
    let n = UNIT_SERIES_TERMS;
    let mut acc = NeumaierSum::new();
    for k in 0..n {
        acc.add((k as f64 + a).powf(-sigma));
    }
    let x = n as f64 + a;
    acc.add(x.powf(1.0 - sigma) / (sigma - 1.0));
    acc.add(0.5 * x.powf(-sigma));
    // next Euler-Maclaurin term B_2/2! sigma x^{-sigma-1}, applied and
    // reported as the error scale
    let b2 = sigma / 12.0 * x.powf(-sigma - 1.0);
    acc.add(b2);
    let err = (sigma * (sigma + 1.0) * (sigma + 2.0) / 720.0 * x.powf(-sigma - 3.0)).abs()
        + 4.0 * f64::EPSILON * acc.value().abs();
    Ok(EvalResult::new(real(acc.value()), err, Method::Series))
}

fn lerch_series_unit(sigma: f64, a: f64, z: Complex64) -> Result<EvalResult> {
    let n = UNIT_SERIES_TERMS;
    // the Abel tail gains a factor of about k / (n |1 - z|) per difference
    let dist = (C_ONE - z).norm();
    if dist * (n as f64) < 64.0 {
        return Err(Error::Conditioning { dist, min: 64.0 / n as f64 });
    }
    let mut acc = ComplexSum::new();
    let mut zn = C_ONE;
    for k in 0..n {
        acc.add(zn * (k as f64 + a).powf(-sigma));
        zn *= z;
    }
    let (tail, last) = abel_tail(z, |k| real((k as f64 + a).powf(-sigma)), n, 8);
    acc.add(tail);
    let v = acc.value();
    Ok(EvalResult::new(v, last + 1e-14 * v.norm(), Method::Series))
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin oracle

const EM_TERMS: usize = 20;
const EM_CORRECTIONS: usize = 8;

/// zeta(sigma, a) by Euler-Maclaurin with 20 summed terms and Bernoulli
/// corrections through B_16. Valid for any real sigma != 1 and a > 0.
pub fn hurwitz_em(sigma: f64, a: f64) -> Result<EvalResult> {
    check_sigma_finite(sigma)?;
    if sigma == 1.0 {
        return Err(Error::Pole { what: "zeta(s, a) at s = 1".into() });
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(domain(format!("a = {a} must be positive")));
    }
    let n = EM_TERMS;
    let mut acc = NeumaierSum::new();
    for k in 0..n {
        acc.add((k as f64 + a).powf(-sigma));
    }
    let x = n as f64 + a;
    acc.add(x.powf(1.0 - sigma) / (sigma - 1.0));
    acc.add(0.5 * x.powf(-sigma));

    // B_{2j}/(2j)! * sigma (sigma+1) ... (sigma+2j-2) * x^{-sigma-2j+1}
    let mut rising = sigma; // product of 2j-1 factors
    let mut fact = 2.0; // (2j)!
    let mut xp = x.powf(-sigma - 1.0);
    let mut last = 0.0;
    for j in 1..=EM_CORRECTIONS + 1 {
        let term = bernoulli_number(2 * j)? / fact * rising * xp;
        if j <= EM_CORRECTIONS {
            acc.add(term);
        } else {
            last = term.abs();
        }
        let k = 2 * j;
        rising *= (sigma + (k - 1) as f64) * (sigma + k as f64);
        fact *= ((k + 1) * (k + 2)) as f64;
        xp /= x * x;
    }
    let v = acc.value();
    Ok(EvalResult::new(real(v), last + 4.0 * f64::EPSILON * v.abs(), Method::EulerMaclaurin))
}

// ---------------------------------------------------------------------------
// Closed forms

/// Phi(0, a, z), Phi(-1, a, z) and the z = 1 values zeta(0, a) = 1/2 - a,
/// zeta(-1, a) = -B_2(a)/2.
pub fn special_value(order: i32, a: f64, z: Complex64) -> Result<Complex64> {
    let p = ParamPoint::new(a, z)?;
    let one_minus_z = C_ONE - z;
    match (order, p.is_one()) {
        (0, true) => Ok(real(0.5 - a)),
        (-1, true) => Ok(real(-a * a / 2.0 + a / 2.0 - 1.0 / 12.0)),
        (0, false) => Ok(one_minus_z.inv()),
        (-1, false) => Ok(a / one_minus_z + z / (one_minus_z * one_minus_z)),
        _ => Err(domain(format!("closed form only at sigma in {{0, -1}}, got {order}"))),
    }
}

// ---------------------------------------------------------------------------
// Mellin integrals

struct Pieces {
    /// Gamma(sigma) times the function value.
    total: Complex64,
    /// Absolute error estimate on `total`.
    err: f64,
}

fn tail_cutoff(cfg: &QuadConfig, a: f64, sigma: f64, bound: f64) -> f64 {
    if let Some(c) = cfg.tail_cutoff {
        return c;
    }
    // smallest X with bound e^{-aX} X^{sigma-1} / a below tol * 1e-3
    let target = (bound / (a * cfg.tol * 1e-3)).ln();
    let mut x = cfg.split_point + target / a;
    for _ in 0..20 {
        x = cfg.split_point.max((target + (sigma - 1.0) * x.max(1.0).ln()) / a);
    }
    x.max(cfg.split_point * 2.0)
}

fn truncation_bound(a: f64, sigma: f64, cutoff: f64, bound: f64) -> f64 {
    let rate = a - (sigma - 1.0).max(0.0) / cutoff;
    if rate <= 0.0 {
        return f64::INFINITY;
    }
    bound * (-a * cutoff).exp() * cutoff.powf(sigma - 1.0) / rate
}

/// Integral of f(x) x^{sigma-1} over [split, cutoff] plus its truncation bound.
fn half_line<F>(f: F, a: f64, sigma: f64, bound: f64, cfg: &QuadConfig) -> (QuadResult, f64)
where
    F: Fn(f64) -> Complex64,
{
    let s = cfg.split_point;
    let cutoff = tail_cutoff(cfg, a, sigma, bound);
    let scale = sigma.max(1.0) / a;
    let q = exp_sinh(|x| f(x) * x.powf(sigma - 1.0), s, scale, cutoff, cfg.max_levels, cfg.tol);
    (q, truncation_bound(a, sigma, cutoff, bound))
}

fn near_origin<F>(f: F, sigma: f64, cfg: &QuadConfig) -> QuadResult
where
    F: Fn(f64) -> Complex64,
{
    tanh_sinh(|x| f(x) * x.powf(sigma - 1.0), 0.0, cfg.split_point, cfg.max_levels, cfg.tol)
}

/// Gamma(sigma) zeta(sigma, a) for sigma in (-1, 0) or (0, 1):
///
///   int_0^s (G - c1 x) x^{sigma-1} + c1 s^{sigma+1}/(sigma+1) + c0 s^sigma/sigma
///   + int_s^inf e^{-ax}/(1-e^{-x}) x^{sigma-1} - s^{sigma-1}/(1-sigma)
fn hurwitz_mellin(sigma: f64, a: f64, cfg: &QuadConfig) -> Result<Pieces> {
    cfg.validate()?;
    let k = HurwitzKernel::new(a)?;
    let s = cfg.split_point;
    let low = near_origin(|x| real(k.g_remainder(x)), sigma, cfg);
    let bound = 1.0 / -(-s).exp_m1();
    let (high, trunc) = half_line(|x| real(k.exp_part(x)), a, sigma, bound, cfg);
    let closed = [
        k.c1() * s.powf(sigma + 1.0) / (sigma + 1.0),
        k.c0() * s.powf(sigma) / sigma,
        -s.powf(sigma - 1.0) / (1.0 - sigma),
    ];
    let mut acc = NeumaierSum::new();
    acc.add(low.value.re);
    acc.add(high.value.re);
    let mut mag = low.value.re.abs() + high.value.re.abs();
    for c in closed {
        acc.add(c);
        mag += c.abs();
    }
    Ok(Pieces { total: real(acc.value()), err: low.err + high.err + trunc + 8.0 * f64::EPSILON * mag })
}

/// Gamma(sigma) Phi(sigma, a, z), z != 1. For sigma < 1 the constant and
/// linear Taylor terms of the exponential part are subtracted near 0:
///
///   int_0^s (G_z - c1 x) x^{sigma-1} + c0 s^sigma/sigma + c1 s^{sigma+1}/(sigma+1)
///   + int_s^inf e^{-ax}/(1 - z e^{-x}) x^{sigma-1}
fn lerch_mellin(sigma: f64, a: f64, z: Complex64, cfg: &QuadConfig) -> Result<Pieces> {
    cfg.validate()?;
    let k = LerchKernel::new(a, z)?;
    let dist = (C_ONE - z).norm();
    if dist < MIN_DIST_FROM_ONE {
        return Err(Error::Conditioning { dist, min: MIN_DIST_FROM_ONE });
    }
    let s = cfg.split_point;
    let bound = 1.0 / (1.0 - z.norm() * (-s).exp());
    let (high, trunc) = half_line(|x| k.exp_part(x), a, sigma, bound, cfg);
    let mut acc = ComplexSum::new();
    acc.add(high.value);
    let mut mag = high.value.norm();
    let low = if sigma < 1.0 {
        let closed = [k.c0() * s.powf(sigma) / sigma, k.c1() * s.powf(sigma + 1.0) / (sigma + 1.0)];
        for c in closed {
            acc.add(c);
            mag += c.norm();
        }
        near_origin(|x| k.gz_remainder(x), sigma, cfg)
    } else {
        near_origin(|x| k.exp_part(x), sigma, cfg)
    };
    acc.add(low.value);
    mag += low.value.norm();
    let mut total = acc.value();
    if z.im == 0.0 {
        total.im = 0.0;
    }
    Ok(Pieces { total, err: low.err + high.err + trunc + 8.0 * f64::EPSILON * mag })
}

fn divide_by_gamma(p: Pieces, sigma: f64, method: Method) -> Result<EvalResult> {
    let g = gamma_real(sigma)?;
    Ok(EvalResult::new(p.total / g, p.err / g.abs(), method))
}

/// zeta(sigma, a) on 0 < sigma < 1 from the Mellin transform of H(a, x).
pub fn hurwitz_integral_pos(sigma: f64, a: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(domain(format!("hurwitz_integral_pos needs 0 < sigma < 1, got {sigma}")));
    }
    divide_by_gamma(hurwitz_mellin(sigma, a, cfg)?, sigma, Method::IntegralPos)
}

/// zeta(sigma, a) on -1 < sigma < 0 from the Mellin transform of G(a, x).
pub fn hurwitz_integral_neg(sigma: f64, a: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(sigma > -1.0 && sigma < 0.0) {
        return Err(domain(format!("hurwitz_integral_neg needs -1 < sigma < 0, got {sigma}")));
    }
    divide_by_gamma(hurwitz_mellin(sigma, a, cfg)?, sigma, Method::IntegralNeg)
}

fn lerch_method(z: Complex64, default: Method) -> Method {
    if (z.norm() - 1.0).abs() <= 8.0 * f64::EPSILON {
        Method::IntegralUnit
    } else {
        default
    }
}

/// Phi(sigma, a, z), z != 1, sigma > 0, from the Mellin transform of
/// e^{(1-a)x}/(e^x - z).
pub fn phi_integral_pos(sigma: f64, a: f64, z: Complex64, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(domain(format!("phi_integral_pos needs sigma > 0, got {sigma}")));
    }
    wrong_path_if_one(a, z)?;
    divide_by_gamma(lerch_mellin(sigma, a, z, cfg)?, sigma, lerch_method(z, Method::IntegralPos))
}

/// Phi(sigma, a, z), z != 1, -1 < sigma < 0, from the Mellin transform of G_z(a, x).
pub fn phi_integral_neg(sigma: f64, a: f64, z: Complex64, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(sigma > -1.0 && sigma < 0.0) {
        return Err(domain(format!("phi_integral_neg needs -1 < sigma < 0, got {sigma}")));
    }
    wrong_path_if_one(a, z)?;
    divide_by_gamma(lerch_mellin(sigma, a, z, cfg)?, sigma, lerch_method(z, Method::IntegralNeg))
}

fn wrong_path_if_one(a: f64, z: Complex64) -> Result<()> {
    if ParamPoint::new(a, z)?.is_one() {
        Err(Error::WrongKernel("z = 1: use the Hurwitz integral paths".into()))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Dispatch

/// |z| at or below this uses the Dirichlet series for every sigma.
pub const SERIES_RADIUS: f64 = 0.9;

/// Evaluates Phi(sigma, a, z) by the most suitable path.
///
/// sigma in {0, -1} gives the closed forms; otherwise z = 1 goes through
/// zeta paths, |z| <= 0.9 or sigma > 1 through the series, and the
/// remaining points through the Lerch integrals.
pub fn evaluate(sigma: f64, a: f64, z: Complex64, cfg: &QuadConfig) -> Result<EvalResult> {
    check_sigma_finite(sigma)?;
    let p = ParamPoint::new(a, z)?;
    if sigma < -1.0 {
        return Err(Error::OutOfRange(sigma));
    }
    if sigma == 0.0 || sigma == -1.0 {
        return Ok(EvalResult::exact(special_value(sigma as i32, a, z)?));
    }
    if p.is_one() {
        return if sigma == 1.0 {
            Err(Error::Pole { what: "zeta(s, a) at s = 1".into() })
        } else if sigma > 1.0 {
            phi_series(sigma, a, z)
        } else if sigma > 0.0 {
            hurwitz_integral_pos(sigma, a, cfg)
        } else {
            hurwitz_integral_neg(sigma, a, cfg)
        };
    }
    if z.norm() <= SERIES_RADIUS || sigma > 1.0 {
        return phi_series(sigma, a, z);
    }
    if sigma > 0.0 {
        phi_integral_pos(sigma, a, z, cfg)
    } else {
        phi_integral_neg(sigma, a, z, cfg)
    }
}

/// Evaluation path requested by a caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Auto,
    Series,
    Integral,
    /// Right-hand side of the functional equation.
    Fe,
    /// Euler-Maclaurin; z = 1 only.
    Em,
}

impl std::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Route::Auto),
            "series" => Ok(Route::Series),
            "integral" => Ok(Route::Integral),
            "fe" => Ok(Route::Fe),
            "em" => Ok(Route::Em),
            _ => Err(Error::Parse(format!("unknown method {s:?}; expected auto, series, integral, fe or em"))),
        }
    }
}

/// Evaluates Phi(sigma, a, z) along a forced path.
pub fn evaluate_with(
    route: Route,
    sigma: f64,
    a: f64,
    z: Complex64,
    cfg: &QuadConfig,
    fe: &crate::functional_eq::FESumConfig,
) -> Result<EvalResult> {
    use crate::functional_eq::{phi_fe_rhs, zeta_fe_rhs};
    let one = ParamPoint::new(a, z)?.is_one();
    match route {
        Route::Auto => evaluate(sigma, a, z, cfg),
        Route::Series => phi_series(sigma, a, z),
        Route::Integral => match (one, sigma > 0.0) {
            (true, true) => hurwitz_integral_pos(sigma, a, cfg),
            (true, false) => hurwitz_integral_neg(sigma, a, cfg),
            (false, true) => phi_integral_pos(sigma, a, z, cfg),
            (false, false) => phi_integral_neg(sigma, a, z, cfg),
        },
        Route::Fe if one => zeta_fe_rhs(sigma, a, fe),
        Route::Fe => phi_fe_rhs(sigma, a, z, fe),
        Route::Em if one => hurwitz_em(sigma, a),
        Route::Em => Err(Error::WrongKernel("Euler-Maclaurin is implemented for z = 1 only".into())),
    }
}

/// Convenience wrapper for the Hurwitz zeta function.
pub fn hurwitz_zeta(sigma: f64, a: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    evaluate(sigma, a, C_ONE, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    fn close(got: Complex64, want: Complex64, tol: f64) {
        assert!((got - want).norm() <= tol, "got {got}, want {want}, |diff| = {:e}", (got - want).norm());
    }

    // Reference values below are mpmath zeta / lerchphi at 25 digits.

    #[test]
    fn series_examples() {
        let r = phi_series(2.0, 1.0, C_ONE).unwrap();
        close(r.value, real(PI * PI / 6.0), 1e-13);
        assert_eq!(r.method, Method::Series);
        let r = phi_series(2.0, 1.0, real(-1.0)).unwrap();
        close(r.value, real(PI * PI / 12.0), 1e-13);
        assert_eq!(r.value.im, 0.0);
        let r = phi_series(-0.5, 0.5, real(0.5)).unwrap();
        close(r.value, real(2.239739873579686269), 1e-14);
        assert!(r.abs_err_estimate < 1e-14);
        let r = phi_series(1.5, 0.4, real(-1.0)).unwrap();
        close(r.value, real(3.521711588761593680), 1e-12);
        let r = phi_series(3.0, 0.7, Complex64::from_polar(1.0, 2.0)).unwrap();
        close(r.value, Complex64::new(2.812905783375300668, 0.1473789130558958819), 1e-12);
        let r = phi_series(1.01, 0.5, C_ONE).unwrap();
        close(r.value, real(101.9770931774822698), 1e-10);
    }

    #[test]
    fn series_refuses_unit_circle_below_one() {
        assert!(matches!(phi_series(0.5, 0.3, real(-1.0)), Err(Error::NonConvergent(_))));
        assert!(matches!(phi_series(1.0, 0.3, C_ONE), Err(Error::NonConvergent(_))));
    }

    #[test]
    fn em_examples() {
        close(hurwitz_em(2.0, 1.0).unwrap().value, real(PI * PI / 6.0), 1e-14);
        close(hurwitz_em(-0.5, 1.0).unwrap().value, real(-0.2078862249773545660), 1e-14);
        close(hurwitz_em(0.0, 0.25).unwrap().value, real(0.25), 1e-14);
        close(hurwitz_em(0.5, 0.01).unwrap().value, real(8.526633570973761427), 1e-12);
        assert!(matches!(hurwitz_em(1.0, 0.5), Err(Error::Pole { .. })));
    }

    #[test]
    fn em_validated_against_series() {
        for &s in &[2.0, 3.0, 4.0] {
            for &a in &[0.1, 0.5, 1.0] {
                let em = hurwitz_em(s, a).unwrap().value.re;
                let se = phi_series(s, a, C_ONE).unwrap().value.re;
                assert!((em - se).abs() < 1e-12 * em.abs(), "s={s} a={a}");
            }
        }
    }

    #[test]
    fn em_pole_residue() {
        for &d in &[0.1, 0.01, 0.001] {
            let v = hurwitz_em(1.0 + d, 0.4).unwrap().value.re * d;
            // (s-1) zeta(s,a) = 1 - psi(a) (s-1) + O((s-1)^2)
            assert!((v - 1.0).abs() < 3.0 * d, "d={d} v={v}");
        }
        let v = hurwitz_em(1.001, 0.4).unwrap().value.re * 0.001;
        assert!((v - 1.0).abs() < 3e-3);
    }

    #[test]
    fn hurwitz_integral_examples() {
        let r = hurwitz_integral_pos(0.5, 1.0, &cfg()).unwrap();
        close(r.value, real(-1.460354508809586813), 1e-12);
        assert_eq!(r.method, Method::IntegralPos);
        let r = hurwitz_integral_pos(0.5, 0.5, &cfg()).unwrap();
        close(r.value, real((2f64.sqrt() - 1.0) * -1.460354508809586813), 1e-12);
        let r = hurwitz_integral_neg(-0.5, 1.0, &cfg()).unwrap();
        close(r.value, real(-0.2078862249773545660), 1e-12);
        assert_eq!(r.value.im, 0.0);
        let r = hurwitz_integral_neg(-0.5, 0.5, &cfg()).unwrap();
        assert!(r.value.re > 0.0);
        close(hurwitz_integral_neg(-0.5, 0.8, &cfg()).unwrap().value, real(-0.07566463879591280622), 1e-12);
        close(hurwitz_integral_neg(-0.5, 0.01, &cfg()).unwrap().value, real(-0.1152205688075748036), 1e-11);
        close(hurwitz_integral_pos(0.5, 0.01, &cfg()).unwrap().value, real(8.526633570973761427), 1e-11);
    }

    #[test]
    fn hurwitz_integral_near_poles_of_gamma() {
        close(hurwitz_integral_neg(-0.999, 0.3, &cfg()).unwrap().value, real(0.02176256792790732991), 1e-11);
        close(hurwitz_integral_neg(-0.001, 0.3, &cfg()).unwrap().value, real(0.1998228614486565681), 1e-11);
        close(hurwitz_integral_pos(0.001, 0.3, &cfg()).unwrap().value, real(0.2001765789553985412), 1e-11);
    }

    #[test]
    fn hurwitz_integral_domain() {
        assert!(hurwitz_integral_pos(1.0, 0.5, &cfg()).is_err());
        assert!(hurwitz_integral_pos(-0.5, 0.5, &cfg()).is_err());
        assert!(hurwitz_integral_neg(0.5, 0.5, &cfg()).is_err());
        assert!(hurwitz_integral_neg(-1.0, 0.5, &cfg()).is_err());
    }

    #[test]
    fn shift_identity_with_em() {
        // zeta(sigma, a) - zeta(sigma, a + 1) = a^{-sigma}
        for &s in &[-0.7, -0.2, 0.3, 0.8] {
            for &a in &[0.1, 0.45, 1.0] {
                let lhs = evaluate(s, a, C_ONE, &cfg()).unwrap().value.re;
                let rhs = hurwitz_em(s, a + 1.0).unwrap().value.re;
                assert!((lhs - rhs - a.powf(-s)).abs() < 1e-10, "s={s} a={a}");
            }
        }
    }

    #[test]
    fn lerch_integral_examples() {
        let r = phi_integral_pos(2.0, 1.0, real(-1.0), &cfg()).unwrap();
        close(r.value, real(PI * PI / 12.0), 1e-12);
        let r = phi_integral_pos(0.5, 0.3, real(0.5), &cfg()).unwrap();
        let s = phi_series(0.5, 0.3, real(0.5)).unwrap();
        close(r.value, s.value, r.abs_err_estimate + s.abs_err_estimate + 1e-12);
        close(r.value, real(2.553337470782728893), 1e-12);
        let i = Complex64::new(0.0, 1.0);
        close(
            phi_integral_pos(0.5, 0.3, i, &cfg()).unwrap().value,
            Complex64::new(1.434027080564067256, 0.5634837545254682887),
            1e-12,
        );

        let r = phi_integral_neg(-0.5, 0.5, real(0.5), &cfg()).unwrap();
        close(r.value, real(2.239739873579686269), 1e-12);
        let r = phi_integral_neg(-0.5, 0.5, real(-1.0), &cfg()).unwrap();
        close(r.value, real(0.1945814610680581710), 1e-12);
        assert_eq!(r.value.im, 0.0);
        assert_eq!(r.method, Method::IntegralUnit);
        close(phi_integral_neg(-0.5, 0.1, real(-1.0), &cfg()).unwrap().value, real(-0.09321636600463975111), 1e-12);
        close(
            phi_integral_neg(-0.5, 0.3, i, &cfg()).unwrap().value,
            Complex64::new(-0.05117794831360994785, 0.3669520114056006343),
            1e-12,
        );
    }

    #[test]
    fn lerch_integral_errors() {
        assert!(matches!(phi_integral_neg(-0.5, 0.5, C_ONE, &cfg()), Err(Error::WrongKernel(_))));
        assert!(matches!(phi_integral_pos(0.5, 0.5, C_ONE, &cfg()), Err(Error::WrongKernel(_))));
        let z = Complex64::from_polar(1.0, 1e-4);
        assert!(matches!(phi_integral_neg(-0.5, 0.5, z, &cfg()), Err(Error::Conditioning { .. })));
    }

    #[test]
    fn conjugate_symmetry() {
        for &(s, a, th) in &[(-0.5, 0.3, 1.0), (0.4, 0.8, 2.5), (-0.9, 0.05, 0.3)] {
            let z = Complex64::from_polar(1.0, th);
            let v = evaluate(s, a, z, &cfg()).unwrap().value;
            let w = evaluate(s, a, z.conj(), &cfg()).unwrap().value;
            assert!((v.conj() - w).norm() <= 1e-12, "s={s} a={a} th={th}");
        }
    }

    #[test]
    fn special_values() {
        assert_eq!(special_value(0, 0.3, C_ONE).unwrap(), real(0.2));
        assert_eq!(special_value(-1, 1.0, C_ONE).unwrap(), real(-1.0 / 12.0));
        assert_eq!(special_value(-1, 0.5, real(-1.0)).unwrap(), real(0.0));
        assert_eq!(special_value(0, 0.5, real(-1.0)).unwrap(), real(0.5));
        assert!(special_value(1, 0.5, real(-1.0)).is_err());
    }

    #[test]
    fn integrals_approach_special_values() {
        // continuity at the closed-form points
        let z = Complex64::new(-0.3, 0.6);
        for &(s, o) in &[(-1e-7, 0), (-1.0 + 1e-7, -1)] {
            let v = phi_integral_neg(s, 0.35, z, &cfg()).unwrap().value;
            close(v, special_value(o, 0.35, z).unwrap(), 1e-5);
            let v = hurwitz_integral_neg(s, 0.35, &cfg()).unwrap().value;
            close(v, special_value(o, 0.35, C_ONE).unwrap(), 1e-5);
        }
    }

    #[test]
    fn dispatch() {
        let r = evaluate(2.0, 1.0, C_ONE, &cfg()).unwrap();
        assert_eq!(r.method, Method::Series);
        close(r.value, real(PI * PI / 6.0), 1e-13);
        let r = evaluate(-0.5, 0.8, C_ONE, &cfg()).unwrap();
        assert_eq!(r.method, Method::IntegralNeg);
        assert!(r.value.re < 0.0);
        let r = evaluate(-0.5, 0.5, Complex64::new(0.0, 1.0), &cfg()).unwrap();
        assert!(r.value.im.abs() > 0.1);
        close(r.value, Complex64::new(0.07005115902666270114, 0.4207208378204538350), 1e-12);
        assert_eq!(evaluate(0.0, 0.3, C_ONE, &cfg()).unwrap().method, Method::SpecialValue);
        assert_eq!(evaluate(-0.5, 0.3, real(0.5), &cfg()).unwrap().method, Method::Series);
        assert_eq!(evaluate(0.5, 0.3, real(0.95), &cfg()).unwrap().method, Method::IntegralPos);
        assert!(matches!(evaluate(1.0, 0.3, C_ONE, &cfg()), Err(Error::Pole { .. })));
        assert!(matches!(evaluate(-1.5, 0.3, C_ONE, &cfg()), Err(Error::OutOfRange(_))));
        assert!(evaluate(0.5, 0.0, C_ONE, &cfg()).is_err());
        assert!(evaluate(0.5, 0.5, real(1.5), &cfg()).is_err());
    }

    #[test]
    fn forced_routes() {
        let fe = crate::functional_eq::FESumConfig::default();
        let z = real(-1.0);
        let a = evaluate_with(Route::Fe, -0.5, 0.5, z, &cfg(), &fe).unwrap();
        let b = evaluate_with(Route::Integral, -0.5, 0.5, z, &cfg(), &fe).unwrap();
        assert_eq!(a.method, Method::FunctionalEq);
        assert!((a.value - b.value).norm() < 1e-9);
        let e = evaluate_with(Route::Em, -0.5, 0.25, C_ONE, &cfg(), &fe).unwrap();
        assert_eq!(e.method, Method::EulerMaclaurin);
        assert!(evaluate_with(Route::Em, -0.5, 0.25, z, &cfg(), &fe).is_err());
        assert!(evaluate_with(Route::Series, -0.5, 0.25, z, &cfg(), &fe).is_err());
        assert_eq!("fe".parse::<Route>().unwrap(), Route::Fe);
        assert!("quad".parse::<Route>().is_err());
    }

    #[test]
    fn config_validation() {
        let mut c = cfg();
        c.split_point = 0.0;
        assert!(evaluate(0.5, 0.3, C_ONE, &c).is_err());
        let mut c = cfg();
        c.tol = -1.0;
        assert!(c.validate().is_err());
        let c: QuadConfig = toml::from_str("split_point = 0.5\ntol = 1e-12").unwrap();
        assert_eq!(c.split_point, 0.5);
        assert_eq!(c.max_levels, 10);
        close(hurwitz_integral_neg(-0.5, 1.0, &c).unwrap().value, real(-0.2078862249773545660), 1e-11);
    }
}
