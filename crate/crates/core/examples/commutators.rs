//! Suspension between the two sign conventions and the commutator functors
//! A∞ → PL∞ → L∞.
//!
//! ```bash
//! cargo run -p hoalg --example commutators
//! ```

use hoalg::functors::desuspend_family;
use hoalg::{
    commutator, fixtures, nary_embed, residual, suspend_family, CommutatorKind, EquationFlavor, OperationFamily,
    StructureKind,
};

fn vanishes(family: &OperationFamily, kind: StructureKind, up_to: usize) -> hoalg::Result<bool> {
    let flavor = EquationFlavor::new(kind, family.convention());
    for n in 1..=up_to {
        if !residual(family, flavor, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn main() -> hoalg::Result<()> {
    let (_, assoc) = nary_embed(&fixtures::matrix_span())?;
    println!("span{{E11, E12}} is A∞: {}", vanishes(&assoc, StructureKind::Assoc, 3)?);

    let hat = suspend_family(&assoc)?;
    println!("suspended: {} convention, A∞ {}", hat.convention(), vanishes(&hat, StructureKind::Assoc, 3)?);
    assert_eq!(desuspend_family(&hat)?, assoc);

    let gamma = commutator(&hat, CommutatorKind::Gamma)?;
    let beta = commutator(&gamma, CommutatorKind::Beta)?;
    let alpha = commutator(&hat, CommutatorKind::Alpha)?;
    println!("γ̂ is PL∞: {}", vanishes(&gamma, StructureKind::PreLie, 3)?);
    println!("β̂γ̂ is L∞: {}", vanishes(&beta, StructureKind::Lie, 3)?);
    println!("β̂γ̂ = α̂: {}", beta == alpha);

    let square = suspend_family(&commutator(&assoc, CommutatorKind::Gamma)?)? == gamma;
    println!("suspension commutes with γ: {square}");

    let lie = commutator(&assoc, CommutatorKind::Alpha)?.get_or_zero(2);
    let space = lie.space().clone();
    for w in space.words(2) {
        let v = lie.evaluate(&w)?;
        if !v.is_zero() {
            let terms: Vec<String> = v.iter().map(|(z, c)| format!("{c}·{}", space.label(*z))).collect();
            println!("  [{}] = {}", space.render_word(&w), terms.join(" + "));
        }
    }
    Ok(())
}
