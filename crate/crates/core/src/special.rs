//! Bernoulli polynomials, the real gamma function and principal-branch
//! complex powers.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

/// Complex numbers throughout the crate. Logarithms and powers use the
/// principal branch, argument in (-pi, pi].
pub type ComplexValue = Complex64;

pub const MAX_BERNOULLI_DEGREE: usize = 32;

/// Bernoulli numbers and polynomials up to a fixed degree.
///
/// Coefficients are generated once in exact rational arithmetic and rounded
/// to binary64. Evaluation expands about x = 1/2, where B_n(1/2 + t) has the
/// parity of n; this makes B_n(1 - x) = (-1)^n B_n(x) hold to rounding and
/// keeps the terms no larger than the values on [0, 1].
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    max_degree: usize,
    numbers: Vec<f64>,
    /// `coefficients[n][j]` multiplies x^j in B_n(x).
    coefficients: Vec<Vec<f64>>,
    /// `centered[n][j]` multiplies t^(n - 2j) in B_n(1/2 + t).
    centered: Vec<Vec<f64>>,
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// Exact B_0..B_max from B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k.
pub(crate) fn exact_bernoulli_numbers(max: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(max + 1);
    b.push(BigRational::one());
    for m in 1..=max {
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m + 1, k)) * bk;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Exact monomial coefficients of B_n(x), lowest power first.
pub(crate) fn exact_bernoulli_poly(n: usize, numbers: &[BigRational]) -> Vec<BigRational> {
    let mut c = vec![BigRational::zero(); n + 1];
    for (k, bk) in numbers.iter().enumerate().take(n + 1) {
        c[n - k] = BigRational::from_integer(binomial(n, k)) * bk;
    }
    c
}

impl BernoulliTable {
    pub fn new(max_degree: usize) -> Self {
        assert!(max_degree >= 2, "Bernoulli table needs degree >= 2");
        let exact = exact_bernoulli_numbers(max_degree);
        let two = BigRational::from_integer(BigInt::from(2));
        // B_k(1/2) = (2^(1-k) - 1) B_k
        let at_half: Vec<BigRational> = exact
            .iter()
            .enumerate()
            .map(|(k, bk)| {
                let p = if k == 0 { two.clone() } else { BigRational::one() / num_traits::pow(two.clone(), k - 1) };
                (p - BigRational::one()) * bk
            })
            .collect();

        let numbers = exact.iter().map(to_f64).collect();
        let coefficients =
            (0..=max_degree).map(|n| exact_bernoulli_poly(n, &exact).iter().map(to_f64).collect()).collect();
        let centered = (0..=max_degree)
            .map(|n| {
                (0..=n / 2)
                    .map(|j| to_f64(&(BigRational::from_integer(binomial(n, 2 * j)) * &at_half[2 * j])))
                    .collect()
            })
            .collect();
        Self { max_degree, numbers, coefficients, centered }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn number(&self, n: usize) -> Result<f64> {
        self.check(n)?;
        Ok(self.numbers[n])
    }

    /// Monomial coefficients of B_n(x), constant term first.
    pub fn coefficients(&self, n: usize) -> Result<&[f64]> {
        self.check(n)?;
        Ok(&self.coefficients[n])
    }

    pub fn eval(&self, n: usize, x: f64) -> Result<f64> {
        self.check(n)?;
        let t = x - 0.5;
        let t2 = t * t;
        // centered[n][j] pairs with t^(n-2j); highest power is j = 0.
        let c = &self.centered[n];
        let mut acc = 0.0;
        for &cj in c {
            acc = acc * t2 + cj;
        }
        Ok(if n % 2 == 1 { acc * t } else { acc })
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            Err(Error::DegreeOverflow { n, max: self.max_degree })
        } else {
            Ok(())
        }
    }
}

pub fn bernoulli_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::new(MAX_BERNOULLI_DEGREE))
}

pub fn bernoulli_poly(n: usize, x: f64) -> Result<f64> {
    bernoulli_table().eval(n, x)
}

pub fn bernoulli_number(n: usize) -> Result<f64> {
    bernoulli_table().number(n)
}

/// Lower root (3 - sqrt 3)/6 of B_2.
pub fn b2_lower() -> f64 {
    (3.0 - 3f64.sqrt()) / 6.0
}

/// Upper root (3 + sqrt 3)/6 of B_2.
pub fn b2_upper() -> f64 {
    (3.0 + 3f64.sqrt()) / 6.0
}

/// Real gamma function on (-1, 0) and (0, 171].
///
/// On (-1, 0) this is Gamma(sigma + 1)/sigma, which is negative there.
pub fn gamma_real(sigma: f64) -> Result<f64> {
    if !sigma.is_finite() {
        return Err(domain(format!("gamma argument {sigma} is not finite")));
    }
    if sigma == 0.0 || sigma == -1.0 {
        return Err(Error::Pole { what: format!("gamma({sigma})") });
    }
    if sigma < -1.0 {
        return Err(domain(format!("gamma argument {sigma} <= -1 is not supported")));
    }
    if sigma > 171.0 {
        return Err(domain(format!("gamma({sigma}) overflows binary64")));
    }
    if sigma < 0.0 {
        Ok(statrs::function::gamma::gamma(sigma + 1.0) / sigma)
    } else {
        Ok(statrs::function::gamma::gamma(sigma))
    }
}

/// Principal logarithm with imaginary part in (-pi, pi].
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(domain("logarithm of zero"));
    }
    let mut arg = z.im.atan2(z.re);
    if arg == -PI {
        arg = PI;
    }
    Ok(Complex64::new(z.norm().ln(), arg))
}

/// `base^exponent` on the principal branch.
pub fn complex_pow(base: Complex64, exponent: f64) -> Result<Complex64> {
    if base.re == 0.0 && base.im == 0.0 {
        return Err(domain("complex_pow with zero base"));
    }
    if base.im == 0.0 && base.re > 0.0 {
        return Ok(Complex64::new(base.re.powf(exponent), 0.0));
    }
    Ok((principal_log(base)? * exponent).exp())
}
