//! Residuals of the A∞, PL∞ and L∞ equations, with witnesses when they fail.
//!
//! ```bash
//! cargo run -p hoalg --example structure_equations
//! ```

use hoalg::{fixtures, residual, Convention, EquationFlavor, OperationFamily, Scalar, StructureKind, TensorWord, Vector};

fn report(label: &str, family: &OperationFamily, kind: StructureKind, up_to: usize) -> hoalg::Result<()> {
    let flavor = EquationFlavor::new(kind, family.convention());
    for n in 1..=up_to {
        let r = residual(family, flavor, n)?;
        match r.witness() {
            None => println!("{label}: {flavor} n={n} vanishes"),
            Some(w) => {
                let space = family.space();
                println!(
                    "{label}: {flavor} n={n} fails at {} -> {} coeff {}",
                    space.render_word(&w.input),
                    space.label(w.output),
                    w.coefficient
                );
            }
        }
    }
    Ok(())
}

fn main() -> hoalg::Result<()> {
    let dual = fixtures::as_family(&fixtures::dual_numbers());
    report("K[t]/(t²)", &dual, StructureKind::Assoc, 3)?;

    // t·1 = 2t breaks associativity: (t·1)·1 − t·(1·1) = 4t − 2t.
    let mu = fixtures::dual_numbers().with_entry(TensorWord::from([1, 0]), Vector::basis(1).scaled(&Scalar::from(2)))?;
    report("perturbed", &fixtures::as_family(&mu), StructureKind::Assoc, 3)?;

    let pre_lie = fixtures::as_family(&fixtures::non_associative_pre_lie());
    report("pre-Lie", &pre_lie, StructureKind::Assoc, 3)?;
    report("pre-Lie", &pre_lie, StructureKind::PreLie, 3)?;

    let dga = fixtures::dga();
    assert_eq!(dga.convention(), Convention::Unhat);
    report("dga", &dga, StructureKind::Assoc, 4)?;
    Ok(())
}
