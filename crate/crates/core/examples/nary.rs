//! n-ary partially associative, pre-Lie and Lie algebras, checked directly
//! and through their embedding as a single operation on a graded space.
//!
//! ```bash
//! cargo run -p hoalg --example nary
//! ```

use std::sync::Arc;

use hoalg::functors::full_antisymmetrization;
use hoalg::{
    check_nary, nary_commutator_lie, nary_commutator_prelie, nary_embed, residual, Convention, EquationFlavor,
    GradedSpace, NaryKind, Operation, Scalar, TensorWord, Vector,
};

fn main() -> hoalg::Result<()> {
    // m(a, b, c) = d and d annihilates everything, so every composite vanishes.
    let space = Arc::new(GradedSpace::ungraded(["a", "b", "c", "d"])?);
    let m = Operation::from_entries(space.clone(), 3, 0, [(TensorWord::from([0, 1, 2]), Vector::basis(3))])?;
    println!("assoc_n holds: {}", check_nary(&m, NaryKind::PartiallyAssociative)?.holds);

    let (embedding, family) = nary_embed(&m)?;
    let lifted = &embedding.space;
    println!("embedded space: {:?}", lifted.basis().iter().map(|b| (b.label.as_str(), b.degree)).collect::<Vec<_>>());
    let flavor = EquationFlavor::new(NaryKind::PartiallyAssociative.structure(), Convention::Unhat);
    for n in 1..=5 {
        println!("  A∞ residual n={n} vanishes: {}", residual(&family, flavor, n)?.is_zero());
    }

    let p = nary_commutator_prelie(&m)?;
    let l = nary_commutator_lie(&p)?;
    for (name, op) in [("𝔭", &p), ("𝔩", &l)] {
        for (w, v) in op.entries() {
            println!("  {name}{} = {}·d", space.render_word(w), v.coefficient(&3));
        }
    }
    println!("𝔭 is pre-Lie: {}", check_nary(&p, NaryKind::PreLie)?.holds);
    println!("𝔩 is Lie: {}", check_nary(&l, NaryKind::Lie)?.holds);

    // (n−1)! 𝔩 is the total antisymmetrization of 𝔭.
    let identity = full_antisymmetrization(&p)? == l.scaled(&Scalar::factorial(2));
    println!("Σ sgn(σ) 𝔭∘σ = 2! 𝔩: {identity}");
    Ok(())
}
