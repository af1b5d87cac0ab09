//! Dirichlet L-functions, Hurwitz zeta at rationals and polylogarithms at
//! roots of unity.
//!
//!     cargo run --release --example dirichlet_identities [characters.csv]

use hurwitz_lerch::identities::*;
use hurwitz_lerch::QuadConfig;

fn main() -> hurwitz_lerch::Result<()> {
    let cfg = QuadConfig::default();

    let g = dirichlet_l(2.0, &CharacterTable::chi4(), &cfg)?.value.re;
    println!("L(2, chi_4) = {g:.15}   Catalan series {:.15}", catalan_series());

    println!("\nL(sigma, chi) on (-1, 0):");
    for s in [-0.9, -0.5, -0.1] {
        let l3 = dirichlet_l(s, &CharacterTable::chi3(), &cfg)?.value.re;
        let l4 = dirichlet_l(s, &CharacterTable::chi4(), &cfg)?.value.re;
        println!("  sigma = {s:>4}: chi_3 {l3:.12}  chi_4 {l4:.12}");
    }

    println!("\nGauss sums:");
    for (name, chi) in [("chi_3", CharacterTable::chi3()), ("chi_4", CharacterTable::chi4())] {
        let v = gauss_sum(&chi, 1).value;
        println!("  G({name}) = {v:.12}, |G| = {:.12}", v.norm());
    }

    println!("\nsix relations, largest residual per relation:");
    for (s, q) in [(2.5, 3), (2.5, 4)] {
        let rep = verify_six_relations(s, q, &cfg)?;
        for (name, r) in SixRelationsReport::NAMES.iter().zip(rep.residuals) {
            println!("  sigma = {s}, q = {q}  {name:<13} {r:.1e}");
        }
    }

    if let Some(path) = std::env::args().nth(1) {
        let chi = CharacterTable::from_csv_path(&path)?;
        let l = dirichlet_l(2.0, &chi, &cfg)?;
        println!("\n{path}: q = {}, L(2, chi) = {:.15}", chi.modulus(), l.value);
    }
    Ok(())
}
