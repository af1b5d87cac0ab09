//! Neumaier-compensated accumulators.
//!
//! Every series and quadrature sum in the crate goes through these so that
//! results are reproducible bit-for-bit for a fixed summation order.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Componentwise compensated sum of complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl FromIterator<Complex64> for ComplexSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut s = Self::new();
        for z in iter {
            s.add(z);
        }
        s
    }
}

pub fn kahan_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<NeumaierSum>().value()
}

pub fn complex_sum<I: IntoIterator<Item = Complex64>>(iter: I) -> Complex64 {
    iter.into_iter().collect::<ComplexSum>().value()
}

/// Tail sum_{n >= m} w^n f(n) for |w| = 1, w != 1, by repeated Abel summation.
///
/// Uses sum_{k < terms} w^{m+k} Delta^k f(m) / (1 - w)^{k+1}, where Delta is
/// the forward difference on f(m), f(m+1), ... . Returns the tail and the
/// size of the last correction, which bounds the neglected remainder when
/// the differences of f decay.
pub fn abel_tail<F>(w: Complex64, f: F, m: usize, terms: usize) -> (Complex64, f64)
where
    F: Fn(usize) -> Complex64,
{
    let mut diffs: Vec<Complex64> = (0..terms).map(|i| f(m + i)).collect();
    let one_minus_w = Complex64::new(1.0, 0.0) - w;
    let inv = one_minus_w.inv();
    let mut scale = w.powu(m as u32) * inv;
    let mut acc = ComplexSum::new();
    let mut last = 0.0;
    for k in 0..terms {
        let t = scale * diffs[0];
        acc.add(t);
        last = t.norm();
        for i in 0..diffs.len() - 1 - k {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        scale *= w * inv;
    }
    (acc.value(), last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_small_terms() {
        let s = kahan_sum([1.0, 1e100, 1.0, -1e100]);
        assert_eq!(s, 2.0);
    }

    #[test]
    fn abel_tail_matches_long_direct_sum() {
        // sum_{n >= 100} (-1)^n / n^1.5, reference by direct summation to 4e6
        // plus averaging of the last two partial sums
        let w = Complex64::new(-1.0, 0.0);
        let f = |n: usize| Complex64::new((n as f64).powf(-1.5), 0.0);
        let (tail, est) = abel_tail(w, f, 100, 8);
        let mut s = NeumaierSum::new();
        let mut prev = 0.0;
        for n in 100..4_000_000usize {
            prev = s.value();
            s.add(if n % 2 == 0 { 1.0 } else { -1.0 } * (n as f64).powf(-1.5));
        }
        let direct = 0.5 * (prev + s.value());
        assert!((tail.re - direct).abs() < 1e-13, "{} vs {direct}", tail.re);
        assert!(est < 1e-12);
        // a complex root of unity, against mpmath nsum:
        // sum_{n >= 50} e^{2 pi i n / 3} n^-1.2
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let (tail, _) = abel_tail(w, |n| Complex64::new((n as f64).powf(-1.2), 0.0), 50, 10);
        let want = Complex64::new(-0.0000373710446451425225, -0.00534337619799235983);
        assert!((tail - want).norm() < 1e-13, "{tail}");
    }

    #[test]
    fn complex_components_independent() {
        let s = complex_sum([Complex64::new(1e16, 1.0), Complex64::new(1.0, 0.0), Complex64::new(-1e16, 0.0)]);
        assert_eq!(s, Complex64::new(1.0, 1.0));
    }
}
