//! Where sigma -> Phi(sigma, a, z) can vanish on -1 < sigma < 0.
//!
//! [`classify`] decides from (a, z) alone whether Phi is free of zeros on
//! the interval; [`scan_zeros`] looks for sign changes numerically so the
//! two can be compared.

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::evaluator::{evaluate, special_value, QuadConfig};
use crate::kernels::ParamPoint;
use crate::special::{b2_lower, b2_upper};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionTag {
    /// z = 1 and a in [b2-, 1/2] or [b2+, 1].
    CaseI,
    /// Real z in [-1, 1) with (1 - z)(1 - a) <= 1.
    CaseII,
    /// Non-real z.
    CaseIII,
    /// Phi has at least one zero on (-1, 0).
    ZeroExists,
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl RegionTag {
    pub fn zero_free(self) -> bool {
        self != RegionTag::ZeroExists
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionVerdict {
    pub tag: RegionTag,
    /// The inequality that decided the verdict.
    pub detail: String,
}

/// Non-vanishing classification of sigma -> Phi(sigma, a, z) on (-1, 0).
///
/// Boundaries are inclusive and compared exactly.
pub fn classify(a: f64, z: Complex64) -> Result<RegionVerdict> {
    let p = ParamPoint::new(a, z)?;
    let v = |tag, detail: String| Ok(RegionVerdict { tag, detail });
    if !p.is_real() {
        return v(RegionTag::CaseIII, format!("Im z = {} != 0", z.im));
    }
    if p.is_one() {
        let (lo, hi) = (b2_lower(), b2_upper());
        return if (lo..=0.5).contains(&a) {
            v(RegionTag::CaseI, format!("b2- = {lo:.6} <= a = {a} <= 1/2"))
        } else if a >= hi {
            v(RegionTag::CaseI, format!("b2+ = {hi:.6} <= a = {a} <= 1"))
        } else if a < lo {
            v(RegionTag::ZeroExists, format!("a = {a} < b2- = {lo:.6}"))
        } else {
            v(RegionTag::ZeroExists, format!("1/2 < a = {a} < b2+ = {hi:.6}"))
        };
    }
    let x = z.re;
    let prod = (1.0 - x) * (1.0 - a);
    if prod <= 1.0 {
        v(RegionTag::CaseII, format!("(1 - z)(1 - a) = {prod} <= 1"))
    } else {
        v(RegionTag::ZeroExists, format!("(1 - z)(1 - a) = {prod} > 1"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroReport {
    /// Consecutive grid points (or an endpoint and a grid point) with
    /// strictly opposite signs.
    pub brackets: Vec<(f64, f64)>,
    /// Bisection midpoint of each refined bracket.
    pub roots: Vec<f64>,
    /// |Phi| at each root.
    pub residuals: Vec<f64>,
    /// Error estimate of the evaluation at each root.
    pub err_estimates: Vec<f64>,
    pub grid_step: f64,
}

impl ZeroReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

fn real_value(sigma: f64, a: f64, z: f64, cfg: &QuadConfig) -> Result<(f64, f64)> {
    let r = evaluate(sigma, a, Complex64::new(z, 0.0), cfg)?;
    Ok((r.value.re, r.abs_err_estimate))
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

/// The part of Phi whose sign changes are tracked: the value itself for
/// real z, the imaginary part otherwise (a zero needs both parts to vanish).
fn tracked(v: Complex64, z: Complex64) -> f64 {
    if z.im == 0.0 {
        v.re
    } else {
        v.im
    }
}

fn value_at(sigma: f64, a: f64, z: Complex64, cfg: &QuadConfig) -> Result<(Complex64, f64)> {
    if sigma == -1.0 || sigma == 0.0 {
        Ok((special_value(sigma as i32, a, z)?, 0.0))
    } else {
        let r = evaluate(sigma, a, z, cfg)?;
        Ok((r.value, r.abs_err_estimate))
    }
}

/// Sign-change census of sigma -> Phi(sigma, a, z) on (-1, 0) for real z.
///
/// The grid runs from -1 + step/2 to -step/2; the closed forms at sigma = -1
/// and sigma = 0 are prepended and appended. Each strict sign change is
/// bisected until the bracket is no wider than `tol`. A double zero, or two
/// zeros within one grid cell, can go unnoticed.
pub fn scan_zeros(a: f64, z: f64, grid_step: f64, tol: f64, cfg: &QuadConfig) -> Result<ZeroReport> {
    scan_sign_changes(a, Complex64::new(z, 0.0), grid_step, tol, cfg)
}

/// [`scan_zeros`] for any z; for non-real z it tracks Im Phi, so an empty
/// report rules out zeros at grid resolution.
pub fn scan_sign_changes(a: f64, z: Complex64, grid_step: f64, tol: f64, cfg: &QuadConfig) -> Result<ZeroReport> {
    ParamPoint::new(a, z)?;
    if !(grid_step > 0.0 && grid_step <= 0.01) {
        return Err(domain(format!("grid_step = {grid_step} must lie in (0, 0.01]")));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tol = {tol} must be positive")));
    }
    let eps = grid_step / 2.0;
    let n = ((1.0 - 2.0 * eps) / grid_step).round() as usize + 1;
    let mut sigmas = Vec::with_capacity(n + 2);
    sigmas.push(-1.0);
    sigmas.extend((0..n).map(|k| -1.0 + eps + k as f64 * grid_step));
    sigmas.push(0.0);
    let values =
        sigmas.par_iter().map(|&s| value_at(s, a, z, cfg).map(|v| tracked(v.0, z))).collect::<Result<Vec<f64>>>()?;

    let mut brackets = Vec::new();
    for k in 0..sigmas.len() - 1 {
        let (s1, v0, v1) = (sigmas[k + 1], values[k], values[k + 1]);
        if sign(v0) * sign(v1) < 0 {
            brackets.push((sigmas[k], s1));
        } else if sign(v1) == 0 && s1 > -1.0 && s1 < 0.0 {
            brackets.push((s1, s1));
        }
    }

    let refined = brackets.par_iter().map(|&(lo, hi)| bisect(a, z, lo, hi, tol, cfg)).collect::<Result<Vec<_>>>()?;
    let mut report = ZeroReport { brackets, roots: vec![], residuals: vec![], err_estimates: vec![], grid_step };
    for (root, res, err) in refined {
        report.roots.push(root);
        report.residuals.push(res);
        report.err_estimates.push(err);
    }
    Ok(report)
}

fn bisect(a: f64, z: Complex64, mut lo: f64, mut hi: f64, tol: f64, cfg: &QuadConfig) -> Result<(f64, f64, f64)> {
    let at = |s: f64| -> Result<i8> { Ok(sign(tracked(value_at(s, a, z, cfg)?.0, z))) };
    let lo_sign = at(lo)?;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let s = at(mid)?;
        if s == 0 {
            lo = mid;
            hi = mid;
            break;
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let (v, err) = value_at(root, a, z, cfg)?;
    Ok((root, v.norm(), err))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case3Report {
    pub min_abs_im: f64,
    /// Common sign of Im Phi over the grid, 0 when it is not constant.
    pub sign: i8,
    /// Whether that sign equals sign(sin theta).
    pub matches_sin_theta: bool,
}

impl Case3Report {
    pub fn holds(&self) -> bool {
        self.sign != 0 && self.min_abs_im > 0.0 && self.matches_sin_theta
    }
}

/// Im Phi(sigma, a, r e^{i theta}) over a sigma grid in (-1, 0).
///
/// Im G_z / sin theta < 0 pointwise and Gamma(sigma) < 0 on the interval,
/// so Im Phi should carry the sign of sin theta everywhere.
pub fn check_case3(a: f64, r: f64, theta: f64, grid: &[f64], cfg: &QuadConfig) -> Result<Case3Report> {
    let z = Complex64::from_polar(r, theta);
    if !(r > 0.0 && r <= 1.0) {
        return Err(domain(format!("r = {r} must satisfy 0 < r <= 1")));
    }
    if z.im == 0.0 || theta.sin().abs() < 1e-12 {
        return Err(domain(format!("theta = {theta} gives a real z; use scan_zeros")));
    }
    if grid.iter().any(|&s| !(s > -1.0 && s < 0.0)) {
        return Err(domain("sigma grid must lie in (-1, 0)"));
    }
    let ims = grid.par_iter().map(|&s| evaluate(s, a, z, cfg).map(|v| v.value.im)).collect::<Result<Vec<f64>>>()?;
    let min_abs_im = ims.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()));
    let first = ims.first().map_or(0, |&v| sign(v));
    let constant = ims.iter().all(|&v| sign(v) == first);
    let s = if constant { first } else { 0 };
    Ok(Case3Report { min_abs_im, sign: s, matches_sin_theta: s == sign(theta.sin()) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Band {
    /// b2- <= a <= 1/2, where zeta(sigma, a) > 0.
    Lower,
    /// b2+ <= a <= 1, where zeta(sigma, a) < 0.
    Upper,
}

impl Band {
    pub fn range(self) -> (f64, f64) {
        match self {
            Band::Lower => (b2_lower(), 0.5),
            Band::Upper => (b2_upper(), 1.0),
        }
    }

    pub fn expected_sign(self) -> i8 {
        match self {
            Band::Lower => 1,
            Band::Upper => -1,
        }
    }
}

/// True when zeta(sigma, a) has the band's sign at every grid point and
/// exceeds its own error estimate there.
pub fn verify_sign_constancy(band: Band, sigma_grid: &[f64], a_grid: &[f64], cfg: &QuadConfig) -> Result<bool> {
    let (lo, hi) = band.range();
    if let Some(a) = a_grid.iter().find(|&&a| !(lo..=hi).contains(&a)) {
        return Err(domain(format!("a = {a} lies outside the {band:?} band [{lo}, {hi}]")));
    }
    if sigma_grid.iter().any(|&s| !(s > -1.0 && s < 0.0)) {
        return Err(domain("sigma grid must lie in (-1, 0)"));
    }
    let cells: Vec<(f64, f64)> = sigma_grid.iter().flat_map(|&s| a_grid.iter().map(move |&a| (s, a))).collect();
    let ok = cells
        .par_iter()
        .map(|&(s, a)| {
            let (v, err) = real_value(s, a, 1.0, cfg)?;
            Ok(sign(v) == band.expected_sign() && v.abs() > err)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(ok.into_iter().all(|b| b))
}

/// `n` points evenly spread over the open interval (lo, hi), endpoints excluded.
pub fn open_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let h = (hi - lo) / (n as f64 + 1.0);
    (1..=n).map(|k| lo + k as f64 * h).collect()
}
