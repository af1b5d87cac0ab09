//! Closed forms at sigma = 0 and sigma = -1, and how the numerical paths
//! approach them.
//!
//!     cargo run --example special_values

use hurwitz_lerch::evaluator::{evaluate, special_value};
use hurwitz_lerch::special::{b2_lower, b2_upper, bernoulli_poly};
use hurwitz_lerch::QuadConfig;
use num_complex::Complex64;

fn main() -> hurwitz_lerch::Result<()> {
    let one = Complex64::new(1.0, 0.0);
    let cfg = QuadConfig::default();

    println!("zeta(0, a) = 1/2 - a and zeta(-1, a) = -B_2(a)/2:");
    for a in [0.1, 0.3, 0.5, 0.8, 1.0] {
        let z0 = special_value(0, a, one)?.re;
        let zm1 = special_value(-1, a, one)?.re;
        println!(
            "  a = {a:<4} zeta(0,a) = {z0:>8.5}  zeta(-1,a) = {zm1:>10.6}  -B2(a)/2 = {:>10.6}",
            -bernoulli_poly(2, a)? / 2.0
        );
    }

    println!("\nB_2 vanishes at b2- = {:.12} and b2+ = {:.12}", b2_lower(), b2_upper());

    println!("\nPhi(0, a, z) = 1/(1-z) and Phi(-1, a, z) = a/(1-z) + z/(1-z)^2:");
    for z in [Complex64::new(-1.0, 0.0), Complex64::new(0.5, 0.0), Complex64::new(0.0, 1.0)] {
        let p0 = special_value(0, 0.5, z)?;
        let pm1 = special_value(-1, 0.5, z)?;
        println!(
            "  z = {:<7} Phi(0) = {:>5.2} {:>+5.2}i   Phi(-1) = {:>5.2} {:>+5.2}i",
            z.to_string(),
            p0.re + 0.0,
            p0.im + 0.0,
            pm1.re + 0.0,
            pm1.im + 0.0
        );
    }

    // the integral representation tends to the closed form as sigma -> -1
    println!("\nzeta(sigma, 0.3) as sigma -> -1 from above:");
    for d in [1e-1, 1e-2, 1e-3, 1e-4] {
        let v = evaluate(-1.0 + d, 0.3, one, &cfg)?;
        println!("  sigma = -1 + {d:e}: {:.10} ({})", v.value.re, v.method);
    }
    println!("  closed form:       {:.10}", special_value(-1, 0.3, one)?.re);
    Ok(())
}
