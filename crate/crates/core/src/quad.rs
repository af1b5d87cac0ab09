//! Double-exponential quadrature on (lo, hi] and [lo, inf).
//!
//! Both rules halve the step each level and reuse previous nodes, so the
//! difference between consecutive levels serves as the error estimate.
//! Nodes are stored relative to the interval so they are built once.

use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::sum::ComplexSum;

/// Hard cap on refinement levels (step 2^-MAX_LEVELS).
pub const MAX_LEVELS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    /// |I_L - I_{L-1}| at the final level.
    pub err: f64,
    pub levels: usize,
    pub evals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    /// Offset from the anchored endpoint in units of the interval (or scale).
    offset: f64,
    weight: f64,
}

fn level_ts(level: usize, t_max: f64) -> impl Iterator<Item = f64> {
    let h = 0.5f64.powi(level as i32);
    let n = (t_max / h).floor() as i64;
    (-n..=n).filter(move |k| level == 0 || k.rem_euclid(2) == 1).map(move |k| k as f64 * h)
}

/// tanh-sinh nodes anchored at lo: x = lo + (hi - lo) / (1 + exp(-pi sinh t)).
fn tanh_sinh_nodes() -> &'static [Vec<Node>] {
    static NODES: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    NODES.get_or_init(|| {
        (0..=MAX_LEVELS)
            .map(|level| {
                level_ts(level, 6.5)
                    .filter_map(|t| {
                        let u = 2.0 * FRAC_PI_2 * t.sinh();
                        let from_lo = 1.0 / (1.0 + (-u).exp());
                        let from_hi = 1.0 / (1.0 + u.exp());
                        let weight = 2.0 * FRAC_PI_2 * t.cosh() * from_lo * from_hi;
                        (from_lo > 0.0 && weight > 0.0).then_some(Node { offset: from_lo, weight })
                    })
                    .collect()
            })
            .collect()
    })
}

/// exp-sinh nodes: x = lo + scale * exp(pi/2 sinh t).
fn exp_sinh_nodes() -> &'static [Vec<Node>] {
    static NODES: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    NODES.get_or_init(|| {
        (0..=MAX_LEVELS)
            .map(|level| {
                level_ts(level, 4.5)
                    .filter_map(|t| {
                        let e = (FRAC_PI_2 * t.sinh()).exp();
                        let weight = e * FRAC_PI_2 * t.cosh();
                        (e > 0.0 && e.is_finite() && weight > 0.0).then_some(Node { offset: e, weight })
                    })
                    .collect()
            })
            .collect()
    })
}

fn refine<F>(nodes: &[Vec<Node>], max_levels: usize, tol: f64, mut level_sum: F) -> QuadResult
where
    F: FnMut(&[Node]) -> (Complex64, usize),
{
    let max_levels = max_levels.min(MAX_LEVELS);
    let mut total = ComplexSum::new();
    let mut evals = 0;
    let mut prev = Complex64::new(f64::NAN, 0.0);
    let mut est = Complex64::new(0.0, 0.0);
    let mut err = f64::INFINITY;
    for (level, lv) in nodes.iter().enumerate().take(max_levels + 1) {
        let (s, n) = level_sum(lv);
        evals += n;
        total.add(s);
        est = total.value() * 0.5f64.powi(level as i32);
        if level > 0 {
            err = (est - prev).norm();
            if level >= 3 && err <= tol {
                return QuadResult { value: est, err, levels: level, evals };
            }
        }
        prev = est;
    }
    QuadResult { value: est, err, levels: max_levels, evals }
}

/// Integrates f over (lo, hi]; f may have an integrable singularity at lo.
///
/// Abscissae near lo are formed as `lo + (hi - lo) * tiny`, so for lo = 0
/// the integrand sees x values down to the underflow threshold without
/// cancellation.
pub fn tanh_sinh<F>(f: F, lo: f64, hi: f64, max_levels: usize, tol: f64) -> QuadResult
where
    F: Fn(f64) -> Complex64,
{
    let width = hi - lo;
    refine(tanh_sinh_nodes(), max_levels, tol, |nodes| {
        let mut s = ComplexSum::new();
        let mut n = 0;
        for node in nodes {
            let x = lo + width * node.offset;
            if x <= lo || x > hi {
                continue;
            }
            let v = f(x);
            n += 1;
            if v.re.is_finite() && v.im.is_finite() {
                s.add(v * (node.weight * width));
            }
        }
        (s.value(), n)
    })
}

/// Integrates f over [lo, cutoff] with an exp-sinh map of the given scale.
///
/// The caller is responsible for the tail beyond `cutoff`; f must decay
/// fast enough that skipping those nodes is harmless.
pub fn exp_sinh<F>(f: F, lo: f64, scale: f64, cutoff: f64, max_levels: usize, tol: f64) -> QuadResult
where
    F: Fn(f64) -> Complex64,
{
    refine(exp_sinh_nodes(), max_levels, tol, |nodes| {
        let mut s = ComplexSum::new();
        let mut n = 0;
        for node in nodes {
            let x = lo + scale * node.offset;
            if x > cutoff {
                continue;
            }
            let v = f(x);
            n += 1;
            if v.re.is_finite() && v.im.is_finite() {
                s.add(v * (node.weight * scale));
            }
        }
        (s.value(), n)
    })
}
