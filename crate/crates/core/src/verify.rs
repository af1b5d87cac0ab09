//! Named check suites: functional equations, sign results, kernel
//! expansions and the L-function identities. Each check records what was
//! measured and the threshold it was held to.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evaluator::{hurwitz_integral_neg, phi_integral_neg, QuadConfig};
use crate::functional_eq::{
    phi_fe_rhs, verify_kernel_expansion_z1, verify_kernel_expansion_zne1, verify_mellin_identity, zeta_fe_rhs,
    FESumConfig,
};
use crate::identities::{
    catalan_series, dirichlet_l, gauss_sum, hurwitz_from_lerch, verify_six_relations, CharacterTable,
};
use crate::kernels::{case3_kernels, kernel_g, sign_fn_g, sign_fn_gz_prime};
use crate::special::{b2_lower, b2_upper};
use crate::zeros::{check_case3, classify, open_grid, scan_zeros, verify_sign_constancy, Band, RegionTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fe,
    Signs,
    Kernels,
    Identities,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::Fe, Suite::Signs, Suite::Kernels, Suite::Identities];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fe" => Ok(Suite::Fe),
            "signs" => Ok(Suite::Signs),
            "kernels" => Ok(Suite::Kernels),
            "identities" => Ok(Suite::Identities),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}; expected fe, signs, kernels, identities or all"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Fe => "fe",
            Suite::Signs => "signs",
            Suite::Kernels => "kernels",
            Suite::Identities => "identities",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, measured: f64, threshold: f64) -> Self {
        Self { name: name.into(), measured, threshold, passed: measured <= threshold }
    }

    pub fn at_least(name: impl Into<String>, measured: f64, threshold: f64) -> Self {
        Self { name: name.into(), measured, threshold, passed: measured >= threshold }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict}  {}  measured={:e} threshold={:e}", self.name, self.measured, self.threshold)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run(suite: Suite, cfg: &QuadConfig, fe: &FESumConfig) -> Result<Vec<SuiteReport>> {
    let one = |s: Suite| -> Result<SuiteReport> {
        let checks = match s {
            Suite::Fe => fe_suite(cfg, fe)?,
            Suite::Signs => signs_suite(cfg)?,
            Suite::Kernels => kernels_suite()?,
            Suite::Identities => identities_suite(cfg)?,
            Suite::All => unreachable!(),
        };
        Ok(SuiteReport { suite: s, checks })
    };
    match suite {
        Suite::All => Suite::EACH.iter().map(|&s| one(s)).collect(),
        s => Ok(vec![one(s)?]),
    }
}

// ---------------------------------------------------------------------------
// functional equations

pub const FE_SIGMAS: [f64; 5] = [-0.9, -0.7, -0.5, -0.3, -0.1];
pub const FE_AS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// The z values of the functional-equation grid, with display labels.
pub fn fe_points() -> [(&'static str, Complex64); 5] {
    [
        ("1", Complex64::new(1.0, 0.0)),
        ("-1", Complex64::new(-1.0, 0.0)),
        ("i", Complex64::new(0.0, 1.0)),
        ("0.5", Complex64::new(0.5, 0.0)),
        ("e^{2 pi i/3}", Complex64::from_polar(1.0, TAU / 3.0)),
    ]
}

/// Largest |integral path - functional equation| over the sigma x a grid at z.
pub fn fe_grid_residual(z: Complex64, cfg: &QuadConfig, fe: &FESumConfig) -> Result<f64> {
    let cells: Vec<(f64, f64)> = FE_SIGMAS.iter().flat_map(|&s| FE_AS.iter().map(move |&a| (s, a))).collect();
    let res = cells
        .par_iter()
        .map(|&(s, a)| {
            let (lhs, rhs) = if z == Complex64::new(1.0, 0.0) {
                (hurwitz_integral_neg(s, a, cfg)?.value, zeta_fe_rhs(s, a, fe)?.value)
            } else {
                (phi_integral_neg(s, a, z, cfg)?.value, phi_fe_rhs(s, a, z, fe)?.value)
            };
            Ok((lhs - rhs).norm())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(res.into_iter().fold(0.0, f64::max))
}

/// The three w of the Mellin identity check: 2 pi i, -2 pi i, 2 pi i + log(1/2).
pub fn mellin_points() -> [Complex64; 3] {
    let w = Complex64::new(0.0, TAU);
    [w, -w, w + Complex64::new(0.5f64.ln(), 0.0)]
}

fn fe_suite(cfg: &QuadConfig, fe: &FESumConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (label, z) in fe_points() {
        out.push(Check::at_most(format!("FE grid z = {label}"), fe_grid_residual(z, cfg, fe)?, 1e-6));
    }
    for w in mellin_points() {
        let (l, r) = verify_mellin_identity(-0.5, w)?;
        out.push(Check::at_most(format!("Mellin identity w = {w}"), (l - r).norm(), 1e-6));
    }
    let mut conj = 0.0f64;
    for &(s, a, r, th) in &[(-0.5, 0.3, 1.0, 1.0), (-0.2, 0.7, 0.6, 2.5), (-0.8, 0.45, 0.9, 0.4)] {
        let z = Complex64::from_polar(r, th);
        let v = phi_fe_rhs(s, a, z, fe)?.value;
        let w = phi_fe_rhs(s, a, z.conj(), fe)?.value;
        conj = conj.max((v.conj() - w).norm());
    }
    out.push(Check::at_most("FE conjugate-z symmetry", conj, 1e-10));
    Ok(out)
}

// ---------------------------------------------------------------------------
// signs

/// `n` points from lo to hi inclusive.
pub fn closed_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// Outcome of comparing `classify` with `scan_zeros` over an a-sweep at fixed real z.
#[derive(Debug, Clone, PartialEq)]
pub struct Census {
    pub z: f64,
    pub cells: usize,
    /// a values where the classifier and the scan disagree.
    pub disagreements: Vec<f64>,
}

/// a = 0.01, ..., 1.00, skipping a within `exclusion` of the given boundaries.
pub fn census_sweep(boundaries: &[f64], exclusion: f64) -> Vec<f64> {
    (1..=100).map(|k| k as f64 / 100.0).filter(|&a| boundaries.iter().all(|&b| (a - b).abs() >= exclusion)).collect()
}

pub fn census(z: f64, a_values: &[f64], grid_step: f64, cfg: &QuadConfig) -> Result<Census> {
    let bad = a_values
        .par_iter()
        .map(|&a| {
            let verdict = classify(a, Complex64::new(z, 0.0))?;
            let found = !scan_zeros(a, z, grid_step, 1e-10, cfg)?.brackets.is_empty();
            Ok((a, found == (verdict.tag == RegionTag::ZeroExists)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Census {
        z,
        cells: a_values.len(),
        disagreements: bad.into_iter().filter(|&(_, ok)| !ok).map(|(a, _)| a).collect(),
    })
}

/// Deterministic spread of (a, r, theta) for the non-real case: a in (0, 1],
/// r in (0, 1], theta away from 0 and pi. Golden-ratio sequences keep the
/// points well separated.
pub fn case3_points(n: usize) -> Vec<(f64, f64, f64)> {
    let g = 0.618_033_988_749_894_9;
    (1..=n)
        .map(|k| {
            let u = |m: f64| (k as f64 * g * m).fract();
            let a = 0.02 + 0.98 * u(1.0);
            let r = 0.1 + 0.9 * u(2.0);
            let th = 0.05 + (TAU - 0.1) * u(3.0);
            let th = if (th - PI).abs() < 0.05 { th + 0.1 } else { th };
            (a, r, th)
        })
        .collect()
}

fn signs_suite(cfg: &QuadConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let sg = open_grid(-1.0, 0.0, 10);
    for band in [Band::Lower, Band::Upper] {
        let (lo, hi) = band.range();
        let ok = verify_sign_constancy(band, &sg, &closed_grid(lo, hi, 10), cfg)?;
        out.push(Check::at_least(format!("zeta sign constant on {band:?} band"), ok as u8 as f64, 1.0));
    }
    let grid = open_grid(-1.0, 0.0, 9);
    let mut worst = f64::INFINITY;
    let mut all = true;
    for (a, r, th) in case3_points(20) {
        let rep = check_case3(a, r, th, &grid, cfg)?;
        all &= rep.holds();
        worst = worst.min(rep.min_abs_im);
    }
    out.push(Check::at_least(
        "Im Phi sign-constant for 20 non-real z",
        if all { worst } else { 0.0 },
        f64::MIN_POSITIVE,
    ));
    let b = [b2_lower(), 0.5, b2_upper()];
    for (z, bounds) in [(1.0, &b[..]), (-1.0, &b[1..2])] {
        let c = census(z, &census_sweep(bounds, 0.01), 0.005, cfg)?;
        out.push(Check::at_most(
            format!("classifier vs scan, z = {z}, {} cells", c.cells),
            c.disagreements.len() as f64,
            0.0,
        ));
    }
    let edge = scan_zeros(0.5, -1.0, 0.005, 1e-10, cfg)?;
    out.push(Check::at_most("no interior zero at (a, z) = (1/2, -1)", edge.brackets.len() as f64, 0.0));
    Ok(out)
}

// ---------------------------------------------------------------------------
// kernels

enum Sample {
    Z1 { a: f64, x: f64 },
    Zne1 { a: f64, z: Complex64, x: f64 },
}

fn expansion_error(s: &Sample, n: usize) -> Result<f64> {
    Ok(match *s {
        Sample::Z1 { a, x } => {
            let (t, g) = verify_kernel_expansion_z1(a, x, n)?;
            (t - g).abs()
        }
        Sample::Zne1 { a, z, x } => {
            let (t, g) = verify_kernel_expansion_zne1(a, z, x, n)?;
            (t - g).norm()
        }
    })
}

fn kernel_samples() -> Vec<(String, Sample)> {
    vec![
        ("G, a = 0.5, x = 1".into(), Sample::Z1 { a: 0.5, x: 1.0 }),
        ("G, a = 0.25, x = 0.1".into(), Sample::Z1 { a: 0.25, x: 0.1 }),
        ("G_z, z = -1, a = 0.5, x = 1".into(), Sample::Zne1 { a: 0.5, z: Complex64::new(-1.0, 0.0), x: 1.0 }),
        ("G_z, z = i, a = 0.5, x = 1".into(), Sample::Zne1 { a: 0.5, z: Complex64::new(0.0, 1.0), x: 1.0 }),
        ("G_z, z = 0.5, a = 0.3, x = 1".into(), Sample::Zne1 { a: 0.3, z: Complex64::new(0.5, 0.0), x: 1.0 }),
    ]
}

/// Expansion error at N = 2^12 and 2^13 for the five sample points.
pub fn kernel_expansion_errors() -> Result<Vec<(String, f64, f64)>> {
    kernel_samples()
        .into_iter()
        .map(|(name, s)| Ok((name, expansion_error(&s, 1 << 12)?, expansion_error(&s, 1 << 13)?)))
        .collect()
}

fn kernels_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, s) in kernel_samples() {
        out.push(Check::at_most(format!("expansion {name}, N = 10^4"), expansion_error(&s, 10_000)?, 5e-4));
        // at least first-order decay across a factor 16 in N; the error
        // oscillates with N, so compare the worst of two neighbouring N
        let early = expansion_error(&s, 1 << 10)?.max(expansion_error(&s, 1 << 11)?);
        let late = expansion_error(&s, 1 << 14)?.max(expansion_error(&s, 1 << 15)?);
        out.push(Check::at_least(format!("expansion {name}, decay 2^10 -> 2^14"), early / late, 8.0));
    }

    let xs: Vec<f64> = (0..120).map(|i| 1e-3 * (6e4f64).powf(i as f64 / 119.0)).collect();
    let mut lower = true;
    let mut upper = true;
    for a in closed_grid(b2_lower() + 1e-9, 0.5, 15) {
        lower &= xs.iter().all(|&x| kernel_g(a, x).is_ok_and(|v| v < 0.0));
        lower &= xs.iter().all(|&x| sign_fn_g(a, x, 2).is_ok_and(|v| v <= 0.0));
    }
    for a in closed_grid(b2_upper(), 1.0, 15) {
        upper &= xs.iter().all(|&x| kernel_g(a, x).is_ok_and(|v| v > 0.0));
        upper &= xs.iter().all(|&x| sign_fn_g(a, x, 2).is_ok_and(|v| v > 0.0));
    }
    out.push(Check::at_least("G < 0 and g'' <= 0 for b2- < a <= 1/2", lower as u8 as f64, 1.0));
    out.push(Check::at_least("G > 0 and g'' > 0 for b2+ <= a <= 1", upper as u8 as f64, 1.0));

    let mut gz = true;
    for &z in &[-1.0, -0.5, 0.0, 0.5, 0.9] {
        for a in closed_grid(0.01, 1.0, 25).into_iter().filter(|&a| (1.0 - z) * (1.0 - a) <= 1.0) {
            gz &= xs.iter().all(|&x| sign_fn_gz_prime(a, z, x).is_ok_and(|v| v < 0.0));
        }
    }
    out.push(Check::at_least("g_z' < 0 when (1 - z)(1 - a) <= 1", gz as u8 as f64, 1.0));

    let mut im = true;
    for (a, r, th) in case3_points(40) {
        im &= xs.iter().all(|&x| case3_kernels(a, r, th, x).is_ok_and(|k| k.im_g * th.sin().signum() < 0.0));
    }
    out.push(Check::at_least("Im G_z / sin(theta) < 0 for non-real z", im as u8 as f64, 1.0));
    Ok(out)
}

// ---------------------------------------------------------------------------
// identities

fn identities_suite(cfg: &QuadConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (s, q) in [(2.5, 3), (2.5, 4), (3.0, 3), (2.0, 1)] {
        let r = verify_six_relations(s, q, cfg)?;
        out.push(Check::at_most(format!("six relations, sigma = {s}, q = {q}"), r.max_residual(), 1e-9));
    }
    let l = dirichlet_l(2.0, &CharacterTable::chi4(), cfg)?.value;
    out.push(Check::at_most("L(2, chi_4) = Catalan", (l - catalan_series()).norm(), 1e-10));
    for (name, chi) in [("chi_3", CharacterTable::chi3()), ("chi_4", CharacterTable::chi4())] {
        let vals = open_grid(-1.0, 0.0, 19)
            .into_iter()
            .map(|s| dirichlet_l(s, &chi, cfg).map(|v| v.value.re))
            .collect::<Result<Vec<f64>>>()?;
        let same = vals.iter().all(|&v| v > 0.0) || vals.iter().all(|&v| v < 0.0);
        let min = vals.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()));
        out.push(Check::at_least(
            format!("L(sigma, {name}) sign-constant on (-1, 0)"),
            if same { min } else { 0.0 },
            f64::MIN_POSITIVE,
        ));
        let g = gauss_sum(&chi, 1).value.norm();
        let q = chi.modulus() as f64;
        out.push(Check::at_most(format!("|G({name})| = sqrt(q)"), (g - q.sqrt()).abs(), 1e-12));
    }
    let mut round = 0.0f64;
    for q in [2u32, 3, 4, 6] {
        for r in 1..=q {
            let v = hurwitz_from_lerch(2.5, r, q, cfg)?.value;
            let w = crate::evaluator::hurwitz_em(2.5, r as f64 / q as f64)?.value;
            round = round.max((v - w).norm());
        }
    }
    out.push(Check::at_most("zeta from Li round trip, q in {2, 3, 4, 6}", round, 1e-9));
    Ok(out)
}
