//! Small named algebras used by the examples, the self-test and the
//! command-line fixtures.

use std::sync::Arc;

use crate::combination::Vector;
use crate::operation::{Convention, Operation, OperationFamily};
use crate::scalar::Scalar;
use crate::space::{GradedSpace, TensorWord};

type Row<'a> = ([usize; 2], &'a [(usize, i64)]);

fn binary(labels: [&str; 2], table: &[Row<'_>]) -> Operation {
    let space = Arc::new(GradedSpace::ungraded(labels).expect("distinct labels"));
    let entries = table.iter().map(|(w, v)| {
        (TensorWord::from(*w), v.iter().map(|&(z, c)| (z, Scalar::from(c))).collect::<Vector>())
    });
    Operation::from_entries(space, 2, 0, entries).expect("valid table")
}

/// `𝕂[t]/(t²)` on the basis `1, t`.
pub fn dual_numbers() -> Operation {
    binary(["1", "t"], &[([0, 0], &[(0, 1)]), ([0, 1], &[(1, 1)]), ([1, 0], &[(1, 1)])])
}

/// `span{E₁₁, E₁₂}` on the basis `a = E₁₁, b = E₁₂`: `a·a = a`, `a·b = b`.
pub fn matrix_span() -> Operation {
    binary(["a", "b"], &[([0, 0], &[(0, 1)]), ([0, 1], &[(1, 1)])])
}

/// A pre-Lie algebra that is not associative: `a·a = −a − b`, `a·b = −b`.
pub fn non_associative_pre_lie() -> Operation {
    binary(["a", "b"], &[([0, 0], &[(0, -1), (1, -1)]), ([0, 1], &[(1, -1)])])
}

/// A differential graded algebra in the unhat convention on `1, a` (degree 0)
/// and `b` (degree 1): `μ₁(b) = a`, `1` a two-sided unit, all other products
/// zero.
pub fn dga() -> OperationFamily {
    let space = Arc::new(GradedSpace::new([("1", 0), ("a", 0), ("b", 1)]).expect("distinct labels"));
    let d = Operation::from_entries(space.clone(), 1, -1, [(TensorWord::from([2]), Vector::basis(1))]).expect("valid");
    let unit = (0..3).flat_map(|x| [(TensorWord::from([0, x]), Vector::basis(x)), (TensorWord::from([x, 0]), Vector::basis(x))]);
    let m = Operation::from_entries(space.clone(), 2, 0, unit.collect::<std::collections::BTreeMap<_, _>>()).expect("valid");
    OperationFamily::with_ops(space, Convention::Unhat, 2, [d, m]).expect("valid")
}

/// A binary operation as a one-member unhat family.
pub fn as_family(mu: &Operation) -> OperationFamily {
    OperationFamily::with_ops(mu.space().clone(), Convention::Unhat, mu.arity(), [mu.clone()]).expect("degree-0 binary operation")
}
