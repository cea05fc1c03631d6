//! Exact computer algebra for homotopy algebras.
//!
//! The crate represents finite graded vector spaces and multilinear
//! operations with rational structure constants, and checks the defining
//! equations of A∞, PL∞ (homotopy pre-Lie) and L∞ algebras in both degree
//! conventions, together with their strict n-ary counterparts. It also
//! builds coderivations on the cofree tensor, symmetric and Perm
//! coalgebras, and implements the suspension and commutator functors
//! relating all of these structures.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every identity is decided by exhaustive evaluation on basis words.

pub mod circle;
pub mod coalgebra;
pub mod combination;
pub mod equations;
pub mod error;
pub mod fixtures;
pub mod functors;
pub mod io;
pub mod operation;
pub mod perm;
pub mod scalar;
pub mod selftest;
pub mod space;
pub mod symmetrize;

pub use circle::{check_prelie_n_two_ways, circle_bracket, circle_product};
pub use combination::{LinearCombination, Vector};
pub use equations::{check_nary, residual, residual_unchecked, EquationFlavor, NaryCheck, NaryKind, Residual, StructureKind, Witness};
pub use error::{Error, Result, SymmetryScope};
pub use functors::{
    commutator, desuspend_family, nary_commutator_lie, nary_commutator_prelie, nary_embed, suspend_family, CommutatorKind,
    NaryEmbedding, SuspendedSpace,
};
pub use io::{AlgebraDocument, Report};
pub use operation::{Convention, Operation, OperationFamily};
pub use perm::{act, koszul_sign, unshuffles, Action, Permutation, SignedWord};
pub use scalar::{Scalar, Sign};
pub use space::{BasisElement, GradedSpace, TensorWord};
pub use symmetrize::{check_full_symmetry, check_partial_symmetry, precompose_symmetrized, SymmetrizationMode};
