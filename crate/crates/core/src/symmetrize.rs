//! Symmetrization sums `op ∘ Σ ρ_σ` and symmetry checks.

use crate::error::{Error, Result, SymmetryScope};
use crate::operation::Operation;
use crate::perm::{unshuffles_lenient, Action, Permutation};

/// Which set of permutations a symmetrization sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetrizationMode {
    /// All of `𝕊ₙ`.
    Full,
    /// `𝕊_{n−1}` on the first `n − 1` slots, last slot fixed.
    Partial,
    /// The unshuffles `Sh(n−1, 1)`.
    Shuffle,
}

impl SymmetrizationMode {
    pub fn permutations(self, n: usize) -> Vec<Permutation> {
        match self {
            SymmetrizationMode::Full => Permutation::all(n),
            SymmetrizationMode::Partial => partial_permutations(n),
            SymmetrizationMode::Shuffle => unshuffles_lenient(&[n.saturating_sub(1), n.min(1)]),
        }
    }
}

/// `σ ⊕ id₁` for every `σ ∈ 𝕊_{n−1}`.
pub fn partial_permutations(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::identity(0)];
    }
    Permutation::all(n - 1).iter().map(|s| s.extend_fixed(1)).collect()
}

pub fn precompose_symmetrized(op: &Operation, action: Action, mode: SymmetrizationMode) -> Operation {
    op.precompose_sum(&mode.permutations(op.arity()), action)
}

/// The first adjacent transposition `(i i+1)` within the scope under which
/// `op ∘ ρ_τ ≠ op`. Adjacent transpositions generate the group, so `None`
/// means the operation is invariant under all of it.
pub fn symmetry_violation(op: &Operation, action: Action, scope: SymmetryScope) -> Option<usize> {
    let n = op.arity();
    let last = match scope {
        SymmetryScope::Partial => n.saturating_sub(2),
        SymmetryScope::Full => n.saturating_sub(1),
    };
    (1..=last).find(|&i| op.precompose(&Permutation::adjacent_transposition(n, i), action) != *op)
}

pub fn check_partial_symmetry(op: &Operation, action: Action) -> bool {
    symmetry_violation(op, action, SymmetryScope::Partial).is_none()
}

pub fn check_full_symmetry(op: &Operation, action: Action) -> bool {
    symmetry_violation(op, action, SymmetryScope::Full).is_none()
}

pub fn require_symmetry(op: &Operation, action: Action, scope: SymmetryScope) -> Result<()> {
    match symmetry_violation(op, action, scope) {
        None => Ok(()),
        Some(position) => Err(Error::Symmetry { arity: op.arity(), position, scope }),
    }
}
