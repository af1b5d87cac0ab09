//! Sign structure of the Mellin kernels, which is what the zero-free
//! regions rest on.
//!
//!     cargo run --example kernel_signs

use std::f64::consts::PI;

use hurwitz_lerch::kernels::{case3_kernels, kernel_g, kernel_gz, kernel_h_eval, sign_fn_g, sign_fn_gz_prime};
use hurwitz_lerch::special::{b2_lower, b2_upper};
use num_complex::Complex64;

fn sign_row(f: impl Fn(f64) -> f64) -> String {
    (0..40)
        .map(|i| {
            let x = 1e-2 * (4e3f64).powf(i as f64 / 39.0);
            match f(x) {
                v if v > 0.0 => '+',
                v if v < 0.0 => '-',
                _ => '0',
            }
        })
        .collect()
}

fn main() -> hurwitz_lerch::Result<()> {
    println!("sign of G(a, x) for x from 0.01 to 40 (log scale):");
    for a in [0.1, b2_lower(), 0.35, 0.5, 0.6, b2_upper(), 0.9] {
        println!("  a = {a:.4}  {}", sign_row(|x| kernel_g(a, x).unwrap()));
    }

    println!("\nsign of g''(a, x), the second derivative of x(e^x - 1) G(a, x):");
    for a in [0.3, 0.5, 0.6, 0.8] {
        println!("  a = {a:.4}  {}", sign_row(|x| sign_fn_g(a, x, 2).unwrap()));
    }

    println!("\ng_z'(a, x) for real z is negative exactly when (1 - z)(1 - a) <= 1:");
    for (a, z) in [(0.5, -1.0), (0.3, -1.0), (0.1, 0.0), (0.1, 0.5)] {
        println!("  a = {a}, z = {z:>4}  {}", sign_row(|x| sign_fn_gz_prime(a, z, x).unwrap()));
    }

    println!("\nIm G_z(a, x) for z = r e^(i theta) has the sign of -sin(theta):");
    for (r, th) in [(1.0, PI / 2.0), (0.5, 4.0 * PI / 3.0), (0.9, 0.2)] {
        println!("  r = {r}, theta = {th:.3}  {}", sign_row(|x| case3_kernels(0.4, r, th, x).unwrap().im_g));
    }

    let e = kernel_h_eval(0.3, 0.1)?;
    println!("\nH(0.3, 0.1) = {:.15} (series form: {})", e.value.re, e.used_series_fallback);
    println!("G_z(0.5, -1, 1) = {:.15}", kernel_gz(0.5, Complex64::new(-1.0, 0.0), 1.0)?);
    Ok(())
}
