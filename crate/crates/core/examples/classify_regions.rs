//! Which (a, z) make sigma -> Phi(sigma, a, z) zero-free on (-1, 0).
//!
//!     cargo run --example classify_regions

use hurwitz_lerch::special::{b2_lower, b2_upper};
use hurwitz_lerch::zeros::classify;
use num_complex::Complex64;

fn main() -> hurwitz_lerch::Result<()> {
    println!("z = 1: zero-free iff a in [{:.4}, 0.5] or [{:.4}, 1]", b2_lower(), b2_upper());
    let row: String = (1..=50)
        .map(|k| {
            let v = classify(k as f64 / 50.0, Complex64::new(1.0, 0.0)).unwrap();
            if v.tag.zero_free() {
                '.'
            } else {
                'x'
            }
        })
        .collect();
    println!("  a = 0.02 .. 1.00  {row}");

    println!("\nreal z: zero-free iff (1 - z)(1 - a) <= 1   ('.' zero-free, 'x' zero exists)");
    for z in [-1.0, -0.5, 0.25, 0.5, 0.9] {
        let row: String = (1..=50)
            .map(|k| {
                let v = classify(k as f64 / 50.0, Complex64::new(z, 0.0)).unwrap();
                if v.tag.zero_free() {
                    '.'
                } else {
                    'x'
                }
            })
            .collect();
        println!("  z = {z:>4}          {row}");
    }

    println!("\nindividual verdicts:");
    for (a, z) in [
        (0.5, Complex64::new(1.0, 0.0)),
        (0.6, Complex64::new(1.0, 0.0)),
        (0.3, Complex64::new(-1.0, 0.0)),
        (0.5, Complex64::new(-1.0, 0.0)),
        (0.2, Complex64::new(0.0, 1.0)),
    ] {
        let v = classify(a, z)?;
        println!("  a = {a}, z = {z}: {} ({})", v.tag, v.detail);
    }
    Ok(())
}
