//! Locating the real zeros of sigma -> Phi(sigma, a, z) on (-1, 0) and
//! checking them against the classifier.
//!
//!     cargo run --release --example scan_zeros

use hurwitz_lerch::verify::{census, census_sweep};
use hurwitz_lerch::zeros::{classify, scan_zeros};
use hurwitz_lerch::QuadConfig;
use num_complex::Complex64;

fn main() -> hurwitz_lerch::Result<()> {
    let cfg = QuadConfig::default();
    for (a, z) in [(0.2, 1.0), (0.6, 1.0), (0.1, -1.0), (0.3, -1.0), (0.05, 0.5), (0.5, 1.0)] {
        let verdict = classify(a, Complex64::new(z, 0.0))?;
        let rep = scan_zeros(a, z, 0.005, 1e-12, &cfg)?;
        print!("a = {a:<4} z = {z:<4} {:<10}", verdict.tag.to_string());
        if rep.roots.is_empty() {
            println!(" no sign change");
        }
        for (root, res) in rep.roots.iter().zip(&rep.residuals) {
            println!(" zero at sigma = {root:.12} (|Phi| = {res:.1e})");
        }
    }

    // every a = 0.01 .. 1.00 away from the boundaries
    for z in [1.0, -1.0] {
        let c = census(z, &census_sweep(&[0.211_324_865_405_187, 0.5, 0.788_675_134_594_813], 0.01), 0.005, &cfg)?;
        println!("census z = {z}: {} cells, {} disagreements", c.cells, c.disagreements.len());
    }
    Ok(())
}
