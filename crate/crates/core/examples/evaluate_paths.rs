//! The evaluation paths side by side: Dirichlet series, Mellin integrals,
//! the functional equation and the Euler-Maclaurin oracle.
//!
//!     cargo run --release --example evaluate_paths

use hurwitz_lerch::evaluator::{evaluate_with, Route};
use hurwitz_lerch::functional_eq::FESumConfig;
use hurwitz_lerch::QuadConfig;
use num_complex::Complex64;

fn show(label: &str, route: Route, sigma: f64, a: f64, z: Complex64) {
    let cfg = QuadConfig::default();
    let fe = FESumConfig::default();
    match evaluate_with(route, sigma, a, z, &cfg, &fe) {
        Ok(r) => println!(
            "  {label:<9} {:>+.15} {:>+.15}i  err~{:.1e}  [{}]",
            r.value.re, r.value.im, r.abs_err_estimate, r.method
        ),
        Err(e) => println!("  {label:<9} unavailable: {e}"),
    }
}

fn main() {
    let points = [
        (-0.5, 0.25, Complex64::new(1.0, 0.0)),
        (0.5, 1.0, Complex64::new(1.0, 0.0)),
        (-0.5, 0.5, Complex64::new(-1.0, 0.0)),
        (-0.5, 0.3, Complex64::new(0.0, 1.0)),
        (-0.5, 0.5, Complex64::new(0.5, 0.0)),
        (2.0, 1.0, Complex64::new(-1.0, 0.0)),
    ];
    for (sigma, a, z) in points {
        println!("Phi({sigma}, {a}, {z}):");
        for (label, route) in [
            ("auto", Route::Auto),
            ("series", Route::Series),
            ("integral", Route::Integral),
            ("fe", Route::Fe),
            ("em", Route::Em),
        ] {
            show(label, route, sigma, a, z);
        }
    }

    // pushing quadrature: a smaller split point and tighter tolerance
    let cfg = QuadConfig { split_point: 0.5, tol: 1e-14, ..QuadConfig::default() };
    let r = hurwitz_lerch::evaluate(-0.5, 0.01, Complex64::new(1.0, 0.0), &cfg).unwrap();
    println!("\nzeta(-0.5, 0.01) with split 0.5: {:.15} (err~{:.1e})", r.value.re, r.abs_err_estimate);
}
