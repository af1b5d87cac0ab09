//! Functional equations on -1 < sigma < 0, and the pieces they are built
//! from: partial-fraction kernel expansions and a Mellin transform.
//!
//!     cargo run --release --example functional_equation

use std::f64::consts::TAU;

use hurwitz_lerch::evaluator::{hurwitz_integral_neg, phi_integral_neg};
use hurwitz_lerch::functional_eq::*;
use hurwitz_lerch::QuadConfig;
use num_complex::Complex64;

fn main() -> hurwitz_lerch::Result<()> {
    let cfg = QuadConfig::default();
    let fe = FESumConfig::default();

    println!("zeta(sigma, a): integral vs functional equation");
    for (s, a) in [(-0.9, 0.1), (-0.5, 0.25), (-0.1, 0.9)] {
        let lhs = hurwitz_integral_neg(s, a, &cfg)?.value.re;
        let rhs = zeta_fe_rhs(s, a, &fe)?;
        println!("  ({s}, {a}): {lhs:.15}  {:.15}  |diff| = {:.1e}", rhs.value.re, (lhs - rhs.value.re).abs());
    }

    println!("\nPhi(sigma, a, z): integral vs functional equation");
    for z in [Complex64::new(-1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::from_polar(1.0, TAU / 3.0)] {
        let lhs = phi_integral_neg(-0.3, 0.4, z, &cfg)?.value;
        let rhs = phi_fe_rhs(-0.3, 0.4, z, &fe)?.value;
        println!("  z = {z:.4}: {lhs:.12}  |diff| = {:.1e}", (lhs - rhs).norm());
    }

    println!("\ncutting the sums off without the tail correction:");
    for n in [256, 1024, 4096] {
        let raw = FESumConfig { n_max: n, use_tail_correction: false };
        let fixed = FESumConfig { n_max: n, use_tail_correction: true };
        let want = hurwitz_integral_neg(-0.5, 0.3, &cfg)?.value.re;
        let e_raw = (zeta_fe_rhs(-0.5, 0.3, &raw)?.value.re - want).abs();
        let e_fix = (zeta_fe_rhs(-0.5, 0.3, &fixed)?.value.re - want).abs();
        println!("  N = {n:>5}: raw {e_raw:.2e}, corrected {e_fix:.2e}");
    }

    println!("\nkernel expansion error as N doubles:");
    for n in [1 << 10, 1 << 11, 1 << 12, 1 << 13] {
        let (s, g) = verify_kernel_expansion_z1(0.5, 1.0, n)?;
        let (t, h) = verify_kernel_expansion_zne1(0.3, Complex64::new(0.5, 0.0), 1.0, n)?;
        println!("  N = {n:>5}: G(1/2, 1) {:.3e}   G_z(0.3, 1) at z = 1/2 {:.3e}", (s - g).abs(), (t - h).norm());
    }

    println!("\nint_0^inf x^sigma/(x - w) dx at sigma = -1/2:");
    for w in [Complex64::new(0.0, TAU), Complex64::new(0.0, -TAU), Complex64::new(0.5f64.ln(), TAU)] {
        let (l, r) = verify_mellin_identity(-0.5, w)?;
        println!("  w = {w:.4}: {l:.12} vs {r:.12}");
    }
    Ok(())
}
