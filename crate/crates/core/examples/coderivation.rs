//! Cofree coalgebras, the maps between them, and a family of operations
//! extended to a coderivation whose square vanishes exactly when the
//! structure equations hold.
//!
//! ```bash
//! cargo run -p hoalg --example coderivation
//! ```

use hoalg::coalgebra::{
    check_coassociativity, check_factorization, check_section, comultiply, extend_coderivation, map_word, CoalgebraKind,
    CoalgebraMap,
};
use hoalg::{fixtures, suspend_family, GradedSpace};

fn main() -> hoalg::Result<()> {
    let space = GradedSpace::new([("u", 0), ("v", 1)])?;
    for kind in CoalgebraKind::ALL {
        println!("{kind} coassociative up to weight 4: {}", check_coassociativity(kind, &space, 4));
    }
    println!("γ̂β̂ = α̂: {}   πα̂ = Id: {}", check_factorization(&space, 4), check_section(&space, 4));

    println!("Δ(u∧v) in the symmetric coalgebra:");
    for ((l, r), c) in &comultiply(CoalgebraKind::Wedge, &space, &[0, 1]) {
        println!("  {c} ({}) ⊗ ({})", space.render_word(l), space.render_word(r));
    }
    println!("α̂(u∧v):");
    for (w, c) in &map_word(CoalgebraMap::Alpha, &space, &[0, 1]) {
        println!("  {c} {}", space.render_word(w));
    }

    let hat = suspend_family(&fixtures::dga())?;
    for kind in [CoalgebraKind::Tensor, CoalgebraKind::Perm] {
        let d = extend_coderivation(&hat, kind, 4)?;
        println!("{kind}: coderivation law {}", d.check_coderivation(4));
        for n in 1..=4 {
            println!("  weight-1 part of D² at n={n} vanishes: {}", d.square_cogenerator_component(n).is_zero());
        }
    }
    Ok(())
}
