//! The circle product on multilinear maps, its bracket, and the graded Lie
//! structure it gives on C(V, V).
//!
//! ```bash
//! cargo run -p hoalg --example circle_product
//! ```

use std::sync::Arc;

use hoalg::equations::check_nary_unchecked;
use hoalg::{
    circle_bracket, circle_product, fixtures, precompose_symmetrized, Action, GradedSpace, NaryKind, Operation, Scalar,
    SymmetrizationMode, Vector,
};

fn main() -> hoalg::Result<()> {
    let mu = fixtures::non_associative_pre_lie();
    let square = circle_product(&mu, &mu)?;
    let r = check_nary_unchecked(&mu, NaryKind::PreLie)?.residual.op;
    println!("μ∘μ equals the pre-Lie residual: {}", square == r);
    println!("μ∘μ = 0: {}", square.is_zero());

    let space = Arc::new(GradedSpace::ungraded(["x", "y"])?);
    // C^m holds (m+1)-ary maps antisymmetric in the first m slots.
    let cochain = |op: Operation| precompose_symmetrized(&op, Action::Rho2, SymmetrizationMode::Partial);
    let f = cochain(Operation::from_fn(space.clone(), 2, 0, |w| Vector::basis(w[0]).scaled(&Scalar::from(w[1] as i64 + 1))));
    let g = cochain(Operation::from_fn(space.clone(), 1, 0, |w| Vector::basis(1 - w[0])));
    let h = cochain(Operation::from_fn(space, 3, 0, |w| Vector::basis((w[0] + 2 * w[1] + w[2]) % 2)));
    println!("h is nonzero: {}", !h.is_zero());

    let fg = circle_bracket(&f, &g)?;
    let gf = circle_bracket(&g, &f)?;
    println!("[f, g] arity {}; [f, g] = −[g, f]: {}", fg.arity(), fg == gf.negated());

    // degrees 1, 0, 2: every Koszul sign in the Jacobi identity is +1
    let mut jacobi = circle_bracket(&fg, &h)?;
    jacobi.add_scaled(&circle_bracket(&circle_bracket(&g, &h)?, &f)?, &Scalar::one())?;
    jacobi.add_scaled(&circle_bracket(&circle_bracket(&h, &f)?, &g)?, &Scalar::one())?;
    println!("graded Jacobi holds: {}", jacobi.is_zero());
    Ok(())
}
