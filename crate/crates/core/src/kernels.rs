//! Mellin-transform integrands and the sign-analysis auxiliaries.
//!
//! `H(a,x) = e^{(1-a)x}/(e^x - 1) - 1/x` and `G(a,x) = H(a,x) - (1/2 - a)`
//! continue the Hurwitz zeta function; `G_z(a,x) = e^{(1-a)x}/(e^x - z) - 1/(1-z)`
//! does the same for the Lerch case z != 1. Near x = 0 the direct formulas
//! cancel catastrophically, so H and G switch to their Bernoulli series and
//! G_z uses an expm1 rearrangement.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::special::bernoulli_table;

/// Below this x the H/G kernels are summed from their Taylor series.
pub const SERIES_CROSSOVER: f64 = 0.5;
/// Bernoulli terms B_1 .. B_30 are kept in the series.
pub const SERIES_TERMS: usize = 30;

/// Shift parameter and unit-disk point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPoint {
    pub a: f64,
    pub z: Complex64,
}

/// Slack on |z| <= 1 so that points like e^{2 pi i/3} survive rounding.
const UNIT_SLACK: f64 = 8.0 * f64::EPSILON;

impl ParamPoint {
    pub fn new(a: f64, z: Complex64) -> Result<Self> {
        check_a(a)?;
        let m = z.norm();
        if !(m > 0.0) || !z.re.is_finite() || !z.im.is_finite() {
            return Err(domain(format!("z = {z} must satisfy 0 < |z|")));
        }
        if m > 1.0 + UNIT_SLACK {
            return Err(domain(format!("z = {z} must satisfy |z| <= 1")));
        }
        Ok(Self { a, z })
    }

    pub fn real(a: f64, z: f64) -> Result<Self> {
        Self::new(a, Complex64::new(z, 0.0))
    }

    pub fn is_real(&self) -> bool {
        self.z.im == 0.0
    }

    pub fn is_one(&self) -> bool {
        self.z.re == 1.0 && self.z.im == 0.0
    }

    pub fn on_unit_circle(&self) -> bool {
        (self.z.norm() - 1.0).abs() <= UNIT_SLACK
    }
}

pub(crate) fn check_a(a: f64) -> Result<()> {
    if a > 0.0 && a <= 1.0 {
        Ok(())
    } else {
        Err(domain(format!("a = {a} must satisfy 0 < a <= 1")))
    }
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("kernel argument x = {x} must be positive")))
    }
}

/// A kernel value at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelEval {
    pub x: f64,
    pub value: Complex64,
    pub used_series_fallback: bool,
}

/// H, G and the exponential part `e^{-ax}/(1 - e^{-x})` for fixed a.
///
/// `taylor[k]` is B_{k+1}(1-a)/(k+1)!, the coefficient of x^k in H(a,x).
#[derive(Debug, Clone)]
pub struct HurwitzKernel {
    a: f64,
    taylor: [f64; SERIES_TERMS],
}

impl HurwitzKernel {
    pub fn new(a: f64) -> Result<Self> {
        check_a(a)?;
        let table = bernoulli_table();
        let mut taylor = [0.0; SERIES_TERMS];
        let mut fact = 1.0;
        for (k, c) in taylor.iter_mut().enumerate() {
            let n = k + 1;
            fact *= n as f64;
            *c = table.eval(n, 1.0 - a)? / fact;
        }
        Ok(Self { a, taylor })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// H(a, 0+) = 1/2 - a.
    pub fn c0(&self) -> f64 {
        self.taylor[0]
    }

    /// Linear Taylor coefficient B_2(a)/2 of H and G.
    pub fn c1(&self) -> f64 {
        self.taylor[1]
    }

    /// `e^{(1-a)x}/(e^x - 1)` written to stay finite for large x.
    #[inline]
    pub fn exp_part(&self, x: f64) -> f64 {
        (-self.a * x).exp() / -(-x).exp_m1()
    }

    /// Series tail sum_{k >= skip} taylor[k] x^k.
    #[inline]
    fn series_from(&self, skip: usize, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.taylor[skip..].iter().rev() {
            acc = acc * x + c;
        }
        acc * x.powi(skip as i32)
    }

    pub fn h(&self, x: f64) -> KernelEval {
        self.eval_skipping(0, x)
    }

    pub fn g(&self, x: f64) -> KernelEval {
        self.eval_skipping(1, x)
    }

    /// G(a,x) - c1 x, which is O(x^2) at the origin.
    #[inline]
    pub fn g_remainder(&self, x: f64) -> f64 {
        self.eval_skipping(2, x).value.re
    }

    /// H minus its first `skip` Taylor terms.
    #[inline]
    fn eval_skipping(&self, skip: usize, x: f64) -> KernelEval {
        let (v, series) = if x < SERIES_CROSSOVER {
            (self.series_from(skip, x), true)
        } else {
            let mut v = self.exp_part(x) - 1.0 / x;
            for k in 0..skip {
                v -= self.taylor[k] * x.powi(k as i32);
            }
            (v, false)
        };
        KernelEval { x, value: Complex64::new(v, 0.0), used_series_fallback: series }
    }

    /// Direct (non-series) H, exposed for the crossover consistency check.
    pub fn h_direct(&self, x: f64) -> f64 {
        self.exp_part(x) - 1.0 / x
    }

    /// Series H, exposed for the crossover consistency check.
    pub fn h_series(&self, x: f64) -> f64 {
        self.series_from(0, x)
    }
}

/// G_z and the exponential part `e^{(1-a)x}/(e^x - z)` for fixed (a, z), z != 1.
#[derive(Debug, Clone)]
pub struct LerchKernel {
    a: f64,
    z: Complex64,
    one_minus_z: Complex64,
    c0: Complex64,
    c1: Complex64,
}

impl LerchKernel {
    pub fn new(a: f64, z: Complex64) -> Result<Self> {
        let p = ParamPoint::new(a, z)?;
        if p.is_one() {
            return Err(Error::WrongKernel("z = 1 uses the Hurwitz kernel G(a,x)".into()));
        }
        let one_minus_z = Complex64::new(1.0, 0.0) - z;
        let c0 = one_minus_z.inv();
        let c1 = -(one_minus_z * a + z) * c0 * c0;
        Ok(Self { a, z, one_minus_z, c0, c1 })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// Limit of the exponential part at x = 0+, namely 1/(1 - z).
    pub fn c0(&self) -> Complex64 {
        self.c0
    }

    /// Derivative of the exponential part at 0, -(a(1-z) + z)/(1-z)^2.
    pub fn c1(&self) -> Complex64 {
        self.c1
    }

    /// 1 - z e^{-x}, accurate when z is close to 1.
    #[inline]
    fn denom(&self, x: f64) -> Complex64 {
        self.one_minus_z - self.z * (-x).exp_m1()
    }

    /// `e^{(1-a)x}/(e^x - z)`.
    #[inline]
    pub fn exp_part(&self, x: f64) -> Complex64 {
        (-self.a * x).exp() / self.denom(x)
    }

    /// G_z(a,x) = [(1-z) expm1(-ax) + z expm1(-x)] / [(1-z)(1 - z e^{-x})].
    #[inline]
    pub fn gz(&self, x: f64) -> Complex64 {
        let num = self.one_minus_z * (-self.a * x).exp_m1() + self.z * (-x).exp_m1();
        num * self.c0 / self.denom(x)
    }

    /// G_z(a,x) - c1 x.
    #[inline]
    pub fn gz_remainder(&self, x: f64) -> Complex64 {
        self.gz(x) - self.c1 * x
    }
}

pub fn kernel_h(a: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(HurwitzKernel::new(a)?.h(x).value.re)
}

pub fn kernel_g(a: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(HurwitzKernel::new(a)?.g(x).value.re)
}

pub fn kernel_gz(a: f64, z: Complex64, x: f64) -> Result<Complex64> {
    check_x(x)?;
    Ok(LerchKernel::new(a, z)?.gz(x))
}

/// Same as [`kernel_h`], with the evaluation record.
pub fn kernel_h_eval(a: f64, x: f64) -> Result<KernelEval> {
    check_x(x)?;
    Ok(HurwitzKernel::new(a)?.h(x))
}

/// Same as [`kernel_gz`], with the evaluation record.
pub fn kernel_gz_eval(a: f64, z: Complex64, x: f64) -> Result<KernelEval> {
    check_x(x)?;
    Ok(KernelEval { x, value: LerchKernel::new(a, z)?.gz(x), used_series_fallback: false })
}

/// Numerator g(a,x) = x(e^x - 1) G(a,x) and its first two x-derivatives.
///
/// All three vanish at x = 0; expm1 keeps them accurate for small x.
pub fn sign_fn_g(a: f64, x: f64, order: u8) -> Result<f64> {
    check_a(a)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("x = {x} must be non-negative")));
    }
    if order > 2 {
        return Err(domain(format!("derivative order {order} not in 0..=2")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let b = 1.0 - a;
    let c0 = 0.5 - a;
    let ebx = (b * x).exp();
    let em1 = x.exp_m1();
    Ok(match order {
        0 => x * ebx - em1 - c0 * x * em1,
        1 => b * x * ebx + ((b * x).exp_m1() - em1) - c0 * (x * x.exp() + em1),
        _ => b * b * x * ebx + 2.0 * b * ((b * x).exp_m1() - em1) - c0 * x * x.exp(),
    })
}

/// g_z'(a,x) = (1-z)(1-a) e^{(1-a)x} - e^x for real z.
pub fn sign_fn_gz_prime(a: f64, z: f64, x: f64) -> Result<f64> {
    check_a(a)?;
    Ok((1.0 - z) * (1.0 - a) * ((1.0 - a) * x).exp() - x.exp())
}

/// The non-real case auxiliaries at z = r e^{i theta}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case3Kernels {
    pub g_flat: f64,
    pub g_sharp: f64,
    pub g_natural: f64,
    /// Im G_{r,theta}(a, x).
    pub im_g: f64,
}

pub fn case3_kernels(a: f64, r: f64, theta: f64, x: f64) -> Result<Case3Kernels> {
    check_a(a)?;
    check_x(x)?;
    if !(r > 0.0 && r <= 1.0) {
        return Err(domain(format!("r = {r} must satisfy 0 < r <= 1")));
    }
    let t = theta.rem_euclid(TAU);
    if t == 0.0 || t == PI || !theta.is_finite() {
        return Err(domain(format!("theta = {theta} makes z real")));
    }
    let (s, c) = theta.sin_cos();
    let eb = ((1.0 - a) * x).exp();
    let ex = x.exp();
    let at_zero = 1.0 + r * r - 2.0 * r * c;
    let g_flat = eb * at_zero;
    let g_sharp = ex * ex + r * r - 2.0 * ex * r * c;
    let g_natural = eb * eb + r * r - 2.0 * eb * r * c;
    let im_g = eb * r * s / g_sharp - r * s / at_zero;
    Ok(Case3Kernels { g_flat, g_sharp, g_natural, im_g })
}
