//! Koszul signs, the two right actions of the symmetric group, and unshuffles.
//!
//! ```bash
//! cargo run -p hoalg --example signs
//! ```

use hoalg::{act, koszul_sign, unshuffles, Action, GradedSpace, Permutation};

fn main() -> hoalg::Result<()> {
    let space = GradedSpace::new([("x", 1), ("y", 2), ("z", 1)])?;
    let word = [0, 1, 2];
    println!("word {} with degrees {:?}", space.render_word(&word), space.degrees());

    for sigma in Permutation::all(3) {
        let eps = koszul_sign(&sigma, &space.degrees())?;
        let r1 = act(&sigma, &space, &word, Action::Rho1)?;
        let r2 = act(&sigma, &space, &word, Action::Rho2)?;
        println!(
            "σ = {sigma:?}  sgn {}  ε {eps}  ρ1 {} {}  ρ2 {} {}",
            sigma.sign(),
            r1.sign,
            space.render_word(&r1.word),
            r2.sign,
            space.render_word(&r2.word),
        );
    }

    // ρ_τ ∘ ρ_σ = ρ_{στ}
    let sigma = Permutation::from_one_line(&[2, 3, 1])?;
    let tau = Permutation::from_one_line(&[2, 1, 3])?;
    let first = act(&sigma, &space, &word, Action::Rho1)?;
    let second = act(&tau, &space, &first.word, Action::Rho1)?;
    let direct = act(&sigma.compose(&tau), &space, &word, Action::Rho1)?;
    assert_eq!((first.sign * second.sign, second.word.clone()), (direct.sign, direct.word));
    println!("ρ_τ ρ_σ = ρ_στ holds for σ = {sigma:?}, τ = {tau:?}");

    println!("Sh(2,1,1):");
    for p in unshuffles(&[2, 1, 1])? {
        println!("  {p:?}");
    }
    Ok(())
}
