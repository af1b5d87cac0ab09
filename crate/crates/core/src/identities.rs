//! Dirichlet L-functions, Hurwitz zeta values at rationals and
//! polylogarithms at roots of unity, and the linear relations between them.
//!
//! Characters are explicit value tables. The built-ins cover the moduli
//! 1, 3 and 4; other tables can be loaded from CSV.

use std::f64::consts::TAU;
use std::io::Read;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::evaluator::{evaluate, EvalResult, QuadConfig};
use crate::sum::ComplexSum;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn totient(q: u32) -> u32 {
    (1..=q).filter(|&n| gcd(n, q) == 1).count() as u32
}

fn root_of_unity(k: i64, q: u32) -> Complex64 {
    // reduce first so the angle stays small and exact multiples hit 1 exactly
    let k = k.rem_euclid(q as i64);
    if k == 0 {
        ONE
    } else {
        Complex64::from_polar(1.0, TAU * k as f64 / q as f64)
    }
}

/// A Dirichlet character mod q as its values chi(1), ..., chi(q).
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    modulus: u32,
    values: Vec<Complex64>,
}

/// Slack for "is a root of unity" and multiplicativity checks on loaded tables.
const TABLE_TOL: f64 = 1e-12;

impl CharacterTable {
    /// Validates periodic extension, vanishing off the units, unit modulus
    /// on the units and complete multiplicativity.
    pub fn new(modulus: u32, values: Vec<Complex64>) -> Result<Self> {
        if modulus == 0 {
            return Err(domain("character modulus must be at least 1"));
        }
        if values.len() != modulus as usize {
            return Err(domain(format!("modulus {modulus} needs {modulus} values, got {}", values.len())));
        }
        let t = Self { modulus, values };
        for n in 1..=modulus {
            let v = t.at(n as i64);
            let unit = gcd(n, modulus) == 1;
            if !unit && v != Complex64::new(0.0, 0.0) {
                return Err(domain(format!("chi({n}) must be 0 since gcd({n}, {modulus}) > 1")));
            }
            if unit && (v.norm() - 1.0).abs() > TABLE_TOL {
                return Err(domain(format!("chi({n}) = {v} is not a root of unity")));
            }
        }
        for m in 1..=modulus {
            for n in 1..=modulus {
                let lhs = t.at(m as i64 * n as i64);
                if (lhs - t.at(m as i64) * t.at(n as i64)).norm() > TABLE_TOL {
                    return Err(domain(format!("chi is not multiplicative at ({m}, {n})")));
                }
            }
        }
        Ok(t)
    }

    fn real(modulus: u32, values: &[f64]) -> Self {
        Self::new(modulus, values.iter().map(|&v| Complex64::new(v, 0.0)).collect()).expect("built-in table")
    }

    /// The trivial character mod 1.
    pub fn trivial() -> Self {
        Self::real(1, &[1.0])
    }

    pub fn principal_mod3() -> Self {
        Self::real(3, &[1.0, 1.0, 0.0])
    }

    /// The quadratic character mod 3.
    pub fn chi3() -> Self {
        Self::real(3, &[1.0, -1.0, 0.0])
    }

    pub fn principal_mod4() -> Self {
        Self::real(4, &[1.0, 0.0, 1.0, 0.0])
    }

    /// The quadratic character mod 4.
    pub fn chi4() -> Self {
        Self::real(4, &[1.0, 0.0, -1.0, 0.0])
    }

    /// Every character mod q, for the built-in moduli.
    pub fn all_mod(q: u32) -> Result<Vec<Self>> {
        match q {
            1 => Ok(vec![Self::trivial()]),
            3 => Ok(vec![Self::principal_mod3(), Self::chi3()]),
            4 => Ok(vec![Self::principal_mod4(), Self::chi4()]),
            _ => Err(Error::UnsupportedModulus(q)),
        }
    }

    /// Reads a table from CSV: a `q=<modulus>` line, then rows `n, re, im`.
    /// Rows may come in any order; missing n default to 0.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(reader);
        let mut records = rdr.records();
        let header = records.next().ok_or_else(|| Error::Parse("empty character file".into()))??;
        let q: u32 = header
            .get(0)
            .and_then(|h| h.strip_prefix("q="))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected header q=<modulus>, got {:?}", header.get(0))))?;
        if q == 0 {
            return Err(Error::Parse("modulus must be at least 1".into()));
        }
        let mut values = vec![Complex64::new(0.0, 0.0); q as usize];
        for rec in records {
            let rec = rec?;
            if rec.len() != 3 {
                return Err(Error::Parse(format!("expected n, re, im; got {} fields", rec.len())));
            }
            let num = |i: usize| -> Result<f64> {
                rec[i].parse::<f64>().map_err(|e| Error::Parse(format!("field {:?}: {e}", &rec[i])))
            };
            let n: u32 = rec[0].parse().map_err(|e| Error::Parse(format!("n = {:?}: {e}", &rec[0])))?;
            if n == 0 || n > q {
                return Err(Error::Parse(format!("n = {n} outside 1..={q}")));
            }
            values[n as usize - 1] = Complex64::new(num(1)?, num(2)?);
        }
        Self::new(q, values)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_csv_reader(std::fs::File::open(path)?)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// chi(n) for any integer n.
    pub fn at(&self, n: i64) -> Complex64 {
        let q = self.modulus as i64;
        let k = (n - 1).rem_euclid(q);
        self.values[k as usize]
    }

    pub fn conj(&self) -> Self {
        Self { modulus: self.modulus, values: self.values.iter().map(|v| v.conj()).collect() }
    }

    pub fn is_principal(&self) -> bool {
        (1..=self.modulus).all(|n| gcd(n, self.modulus) != 1 || self.at(n as i64) == ONE)
    }

    /// Not induced by a character of any proper divisor of the modulus.
    pub fn is_primitive(&self) -> bool {
        let q = self.modulus;
        (1..q).filter(|&d| q.is_multiple_of(d)).all(|d| {
            // induced from mod d iff chi(n) = 1 for every unit n = 1 (mod d)
            !(1..=q).filter(|&n| gcd(n, q) == 1 && n % d == 1 % d).all(|n| (self.at(n as i64) - ONE).norm() < TABLE_TOL)
        })
    }
}

/// Value of a Gauss sum; see [`gauss_sum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussSum {
    pub value: Complex64,
}

/// Gauss sum of the conjugate character, sum chi-bar(n) e^{2 pi i r n/q}.
pub fn gauss_sum(chi: &CharacterTable, r: i64) -> GaussSum {
    let q = chi.modulus();
    let value = (1..=q as i64).map(|n| chi.at(n).conj() * root_of_unity(r * n, q)).collect::<ComplexSum>().value();
    GaussSum { value }
}

fn hurwitz_at(sigma: f64, a: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    evaluate(sigma, a, ONE, cfg)
}

/// Li_s(z) = z Phi(s, 1, z).
pub fn polylog(sigma: f64, z: Complex64, cfg: &QuadConfig) -> Result<EvalResult> {
    let r = evaluate(sigma, 1.0, z, cfg)?;
    Ok(EvalResult { value: z * r.value, abs_err_estimate: z.norm() * r.abs_err_estimate, method: r.method })
}

fn combine<I>(terms: I) -> Result<EvalResult>
where
    I: IntoIterator<Item = Result<(Complex64, EvalResult)>>,
{
    let mut acc = ComplexSum::new();
    let mut err = 0.0;
    let mut method = None;
    for t in terms {
        let (w, r) = t?;
        acc.add(w * r.value);
        err += w.norm() * r.abs_err_estimate;
        method.get_or_insert(r.method);
    }
    let method = method.ok_or_else(|| domain("empty combination"))?;
    Ok(EvalResult { value: acc.value(), abs_err_estimate: err, method })
}

/// L(sigma, chi) = q^{-sigma} sum_{r=1}^q chi(r) zeta(sigma, r/q).
///
/// At sigma = 1 every component has a pole, so the call fails even when
/// L itself is finite.
pub fn dirichlet_l(sigma: f64, chi: &CharacterTable, cfg: &QuadConfig) -> Result<EvalResult> {
    let q = chi.modulus();
    let scale = (q as f64).powf(-sigma);
    combine(
        (1..=q)
            .filter(|&r| chi.at(r as i64) != Complex64::new(0.0, 0.0))
            .map(|r| Ok((scale * chi.at(r as i64), hurwitz_at(sigma, r as f64 / q as f64, cfg)?))),
    )
}

/// Li_sigma(e^{2 pi i r/q}) = q^{-sigma} sum_{n=1}^q e^{2 pi i r n/q} zeta(sigma, n/q).
pub fn lerch_from_hurwitz(sigma: f64, r: u32, q: u32, cfg: &QuadConfig) -> Result<EvalResult> {
    check_rq(r, q)?;
    let scale = (q as f64).powf(-sigma);
    combine((1..=q).map(|n| {
        let w = scale * root_of_unity(r as i64 * n as i64, q);
        Ok((w, hurwitz_at(sigma, n as f64 / q as f64, cfg)?))
    }))
}

/// zeta(sigma, r/q) = q^{sigma-1} sum_{k=1}^q e^{-2 pi i k r/q} Li_sigma(e^{2 pi i k/q}).
///
/// The k = q term is zeta(sigma), so sigma > 1 is required.
pub fn hurwitz_from_lerch(sigma: f64, r: u32, q: u32, cfg: &QuadConfig) -> Result<EvalResult> {
    check_rq(r, q)?;
    if !(sigma > 1.0) {
        return Err(domain(format!("hurwitz_from_lerch needs sigma > 1, got {sigma}")));
    }
    let scale = (q as f64).powf(sigma - 1.0);
    combine((1..=q).map(|k| {
        let w = scale * root_of_unity(-(k as i64) * r as i64, q);
        Ok((w, polylog(sigma, root_of_unity(k as i64, q), cfg)?))
    }))
}

fn check_rq(r: u32, q: u32) -> Result<()> {
    if q == 0 || r == 0 || r > q {
        Err(domain(format!("need 1 <= r <= q, got r = {r}, q = {q}")))
    } else {
        Ok(())
    }
}

/// Largest residual of each of the six relations over all admissible
/// r and characters mod q.
#[derive(Debug, Clone, PartialEq)]
pub struct SixRelationsReport {
    pub sigma: f64,
    pub modulus: u32,
    /// In order: L from zeta, zeta from L, zeta from Li, Li from zeta,
    /// L from Li, Li from L.
    pub residuals: [f64; 6],
}

impl SixRelationsReport {
    pub const NAMES: [&'static str; 6] =
        ["L from zeta", "zeta from L", "zeta from Li", "Li from zeta", "L from Li", "Li from L"];

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Checks the six relations at sigma > 1 for q in {1, 3, 4}.
///
/// Each relation is evaluated in the form that holds for every r and every
/// character mod q: "zeta from L" only at r coprime to q, "L from Li" only
/// for primitive characters with the Gauss sum at r = 1, and "Li from L"
/// with the Gauss sum at the same r plus the residues not coprime to q.
pub fn verify_six_relations(sigma: f64, q: u32, cfg: &QuadConfig) -> Result<SixRelationsReport> {
    if q > 8 {
        return Err(Error::UnsupportedModulus(q));
    }
    let chars = CharacterTable::all_mod(q)?;
    if !(sigma > 1.0) {
        return Err(domain(format!("the six relations are checked only for sigma > 1, got {sigma}")));
    }
    let qf = q as f64;
    let phi = totient(q) as f64;

    // direct series: zeta(sigma, r/q), Li_sigma(e^{2 pi i r/q}), L(sigma, chi)
    let zeta: Vec<Complex64> =
        (1..=q).map(|r| hurwitz_at(sigma, r as f64 / qf, cfg).map(|v| v.value)).collect::<Result<_>>()?;
    let li: Vec<Complex64> =
        (1..=q).map(|r| polylog(sigma, root_of_unity(r as i64, q), cfg).map(|v| v.value)).collect::<Result<_>>()?;
    let l_direct: Vec<Complex64> = chars.iter().map(|c| l_series(sigma, c)).collect();

    let mut res = [0.0f64; 6];
    let mut bump = |i: usize, lhs: Complex64, rhs: Complex64| res[i] = res[i].max((lhs - rhs).norm());

    for (c, &l) in chars.iter().zip(&l_direct) {
        let rhs =
            qf.powf(-sigma) * (1..=q).map(|r| c.at(r as i64) * zeta[r as usize - 1]).collect::<ComplexSum>().value();
        bump(0, l, rhs);
    }
    for r in (1..=q).filter(|&r| gcd(r, q) == 1) {
        let rhs = qf.powf(sigma) / phi
            * chars.iter().zip(&l_direct).map(|(c, &l)| c.at(r as i64).conj() * l).collect::<ComplexSum>().value();
        bump(1, zeta[r as usize - 1], rhs);
    }
    for r in 1..=q {
        let rhs = hurwitz_from_lerch(sigma, r, q, cfg)?.value;
        bump(2, zeta[r as usize - 1], rhs);
        let rhs = lerch_from_hurwitz(sigma, r, q, cfg)?.value;
        bump(3, li[r as usize - 1], rhs);
    }
    for (c, &l) in chars.iter().zip(&l_direct).filter(|(c, _)| c.is_primitive()) {
        let g = gauss_sum(c, 1).value;
        let rhs = (1..=q).map(|r| c.at(r as i64).conj() * li[r as usize - 1]).collect::<ComplexSum>().value() / g;
        bump(4, l, rhs);
    }
    for r in 1..=q {
        let mut acc = ComplexSum::new();
        for (c, &l) in chars.iter().zip(&l_direct) {
            acc.add(gauss_sum(c, r as i64).value * l / phi);
        }
        for b in (1..=q).filter(|&b| gcd(b, q) > 1) {
            acc.add(root_of_unity(r as i64 * b as i64, q) * qf.powf(-sigma) * zeta[b as usize - 1]);
        }
        bump(5, li[r as usize - 1], acc.value());
    }
    Ok(SixRelationsReport { sigma, modulus: q, residuals: res })
}

/// sum chi(n) n^{-sigma} summed directly over 2^16 periods, with an
/// Euler-Maclaurin tail per residue class. Independent of the Hurwitz
/// evaluation it is compared to.
fn l_series(sigma: f64, chi: &CharacterTable) -> Complex64 {
    const BLOCKS: i64 = 1 << 16;
    let q = chi.modulus() as i64;
    let mut acc = ComplexSum::new();
    for n in 1..=BLOCKS * q {
        let v = chi.at(n);
        if v != Complex64::new(0.0, 0.0) {
            acc.add(v * (n as f64).powf(-sigma));
        }
    }
    let nf = (BLOCKS * q) as f64;
    let qf = q as f64;
    for r in 1..=q {
        let v = chi.at(r);
        if v == Complex64::new(0.0, 0.0) {
            continue;
        }
        // sum_{m >= BLOCKS} (m q + r)^{-sigma} = q^{-sigma} zeta(sigma, BLOCKS + r/q)
        let x = (nf + r as f64) / qf;
        let tail = x.powf(1.0 - sigma) / (sigma - 1.0) + 0.5 * x.powf(-sigma) + sigma / 12.0 * x.powf(-sigma - 1.0);
        acc.add(v * qf.powf(-sigma) * tail);
    }
    acc.value()
}

/// Catalan's constant from its alternating series 1 - 1/9 + 1/25 - ...;
/// the mean of two consecutive partial sums cancels the leading error.
pub fn catalan_series() -> f64 {
    let n = 200_000;
    let mut s = 0.0;
    let mut prev = 0.0;
    for k in 0..n {
        prev = s;
        let t = 1.0 / ((2 * k + 1) as f64).powi(2);
        s += if k % 2 == 0 { t } else { -t };
    }
    0.5 * (s + prev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluator::hurwitz_em;
    use std::f64::consts::PI;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn catalan() {
        let g = catalan_series();
        assert!((g - 0.915_965_594_177_219).abs() < 1e-14);
        let l = dirichlet_l(2.0, &CharacterTable::chi4(), &cfg()).unwrap();
        assert!((l.value.re - g).abs() < 1e-10);
        assert_eq!(l.value.im, 0.0);
    }

    #[test]
    fn l_values() {
        let z2 = dirichlet_l(2.0, &CharacterTable::trivial(), &cfg()).unwrap().value.re;
        assert!((z2 - PI * PI / 6.0).abs() < 1e-12);
        assert!(dirichlet_l(-0.5, &CharacterTable::chi4(), &cfg()).unwrap().value.re > 0.0);
        assert!(dirichlet_l(1.0, &CharacterTable::chi4(), &cfg()).is_err());
    }

    #[test]
    fn lerch_from_hurwitz_examples() {
        let v = lerch_from_hurwitz(2.0, 1, 2, &cfg()).unwrap().value;
        assert!((v - Complex64::new(-PI * PI / 12.0, 0.0)).norm() < 1e-12);
        let v = lerch_from_hurwitz(2.0, 1, 1, &cfg()).unwrap().value;
        assert!((v.re - PI * PI / 6.0).abs() < 1e-12);
        let i = Complex64::new(0.0, 1.0);
        let v = lerch_from_hurwitz(0.5, 1, 4, &cfg()).unwrap().value;
        let w = crate::evaluator::phi_integral_pos(0.5, 1.0, i, &cfg()).unwrap().value * i;
        assert!((v - w).norm() < 1e-10, "{v} vs {w}");
        assert!(lerch_from_hurwitz(2.0, 0, 4, &cfg()).is_err());
    }

    #[test]
    fn hurwitz_from_lerch_examples() {
        let v = hurwitz_from_lerch(2.0, 1, 2, &cfg()).unwrap().value;
        assert!((v - Complex64::new(PI * PI / 2.0, 0.0)).norm() < 1e-11);
        let v = hurwitz_from_lerch(3.0, 1, 1, &cfg()).unwrap().value;
        assert!((v.re - 1.202_056_903_159_594_3).abs() < 1e-12);
        let v = hurwitz_from_lerch(2.5, 2, 3, &cfg()).unwrap().value;
        assert!((v.re - hurwitz_em(2.5, 2.0 / 3.0).unwrap().value.re).abs() < 1e-9);
        assert!(hurwitz_from_lerch(0.5, 1, 2, &cfg()).is_err());
    }

    #[test]
    fn orthogonality_round_trip() {
        for q in [2u32, 3, 4, 6] {
            for r in 1..=q {
                let s = 2.3;
                let v = hurwitz_from_lerch(s, r, q, &cfg()).unwrap().value;
                let want = hurwitz_em(s, r as f64 / q as f64).unwrap().value;
                assert!((v - want).norm() < 1e-9, "q={q} r={r}");
            }
        }
    }

    #[test]
    fn gauss_sums() {
        let g = gauss_sum(&CharacterTable::chi4(), 1).value;
        assert!((g - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        assert_eq!(gauss_sum(&CharacterTable::trivial(), 1).value, ONE);
        let g3 = gauss_sum(&CharacterTable::chi3(), 1).value;
        assert!((g3.norm() - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn primitivity() {
        assert!(CharacterTable::chi3().is_primitive());
        assert!(CharacterTable::chi4().is_primitive());
        assert!(CharacterTable::trivial().is_primitive());
        assert!(!CharacterTable::principal_mod4().is_primitive());
        assert!(CharacterTable::principal_mod3().is_principal());
    }

    #[test]
    fn six_relations() {
        for (s, q) in [(2.5, 4), (3.0, 3), (2.0, 1), (2.5, 3)] {
            let r = verify_six_relations(s, q, &cfg()).unwrap();
            assert!(r.max_residual() <= 1e-9, "{r:?}");
        }
        assert!(matches!(verify_six_relations(2.5, 5, &cfg()), Err(Error::UnsupportedModulus(5))));
        assert!(verify_six_relations(0.5, 4, &cfg()).is_err());
    }

    #[test]
    fn table_validation() {
        assert!(CharacterTable::new(4, vec![ONE, ONE, ONE, ONE]).is_err());
        assert!(CharacterTable::new(3, vec![ONE, ONE]).is_err());
        let two = Complex64::new(2.0, 0.0);
        assert!(CharacterTable::new(3, vec![ONE, two, Complex64::new(0.0, 0.0)]).is_err());
        // chi(2) = i mod 5 is a genuine character
        let i = Complex64::new(0.0, 1.0);
        let t = CharacterTable::new(5, vec![ONE, i, -i, -ONE, Complex64::new(0.0, 0.0)]).unwrap();
        assert_eq!(t.at(7), i);
        assert_eq!(t.at(-1), -ONE);
    }

    #[test]
    fn csv_loading() {
        let text = "q=4\n1, 1, 0\n3, -1, 0\n";
        let t = CharacterTable::from_csv_reader(text.as_bytes()).unwrap();
        assert_eq!(t, CharacterTable::chi4());
        assert!(CharacterTable::from_csv_reader("q=4\n1, 1\n".as_bytes()).is_err());
        assert!(CharacterTable::from_csv_reader("4\n1, 1, 0\n".as_bytes()).is_err());
        assert!(CharacterTable::from_csv_reader("q=4\n2, 1, 0\n".as_bytes()).is_err());
    }
}
