//! Suspension between the two degree conventions, the commutator functors
//! and the embedding of n-ary algebras into homotopy algebras.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::combination::Vector;
use crate::error::{Error, Result, SymmetryScope};
use crate::operation::{Convention, Operation, OperationFamily};
use crate::perm::{koszul_sign, Action, Permutation};
use crate::scalar::Sign;
use crate::space::GradedSpace;
use crate::symmetrize::{precompose_symmetrized, require_symmetry, SymmetrizationMode};

/// `sV`: the same basis with every degree raised by one, so that
/// `(sV)^i = V^{i−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuspendedSpace {
    pub base: Arc<GradedSpace>,
    pub shifted: Arc<GradedSpace>,
}

impl SuspendedSpace {
    pub fn new(base: Arc<GradedSpace>) -> Self {
        let shifted = Arc::new(base.shifted(1));
        SuspendedSpace { base, shifted }
    }
}

/// The sign relating `μ̂ₙ(sx₁,…,sxₙ)` and `sμₙ(x₁,…,xₙ)`, in terms of the
/// unsuspended degrees:
/// `(−1)^{|x₁|+|x₃|+⋯+|x_{n−1}|}` for even `n` and
/// `−(−1)^{|x₂|+|x₄|+⋯+|x_{n−1}|}` for odd `n`.
pub fn suspension_sign(base_degrees: &[i64]) -> Sign {
    let n = base_degrees.len();
    if n.is_multiple_of(2) {
        Sign::power(base_degrees.iter().step_by(2).sum())
    } else {
        -Sign::power(base_degrees.iter().skip(1).step_by(2).sum())
    }
}

/// Both sides of the identity relating `sgn(σ)ε(σ; x)` and `ε(σ; sx)` for
/// `σ ∈ 𝕊_{n−1}`, with `n = σ.len() + 1`. Even `n` weighs the odd
/// positions, odd `n` the even ones.
pub fn sign_transfer_sides(sigma: &Permutation, degrees: &[i64]) -> Result<(Sign, Sign)> {
    let eps = koszul_sign(sigma, degrees)?;
    let shifted: Vec<i64> = degrees.iter().map(|d| d + 1).collect();
    let eps_s = koszul_sign(sigma, &shifted)?;
    let skip = if (sigma.len() + 1).is_multiple_of(2) { 0 } else { 1 };
    let weight = |word: &[i64]| Sign::power(word.iter().skip(skip).step_by(2).sum());
    let permuted: Vec<i64> = sigma.images().iter().map(|&j| degrees[j]).collect();
    Ok((weight(&permuted) * sigma.sign() * eps, weight(degrees) * eps_s))
}

/// Transfers an operation on `V` to `sV`. An operation of degree `d`
/// becomes one of degree `d − n + 1`.
pub fn suspend_operation(op: &Operation, suspended: &SuspendedSpace) -> Result<Operation> {
    if **op.space() != *suspended.base {
        return Err(Error::SpaceMismatch);
    }
    let base = suspended.base.clone();
    let degree = op.degree() - op.arity() as i64 + 1;
    Ok(op.transport(suspended.shifted.clone(), degree, |w, v| {
        let degrees: Vec<i64> = w.iter().map(|&x| base.degree(x)).collect();
        v.scaled(&suspension_sign(&degrees).into())
    }))
}

/// Inverse of [`suspend_operation`].
pub fn desuspend_operation(op: &Operation, suspended: &SuspendedSpace) -> Result<Operation> {
    if **op.space() != *suspended.shifted {
        return Err(Error::SpaceMismatch);
    }
    let base = suspended.base.clone();
    let degree = op.degree() + op.arity() as i64 - 1;
    Ok(op.transport(suspended.base.clone(), degree, |w, v| {
        let degrees: Vec<i64> = w.iter().map(|&x| base.degree(x)).collect();
        v.scaled(&suspension_sign(&degrees).into())
    }))
}

/// Unhat family on `V` to hat family on `sV`.
pub fn suspend_family(family: &OperationFamily) -> Result<OperationFamily> {
    family.require_convention(Convention::Unhat)?;
    let s = SuspendedSpace::new(family.space().clone());
    let mut out = OperationFamily::new(s.shifted.clone(), Convention::Hat, family.arity_cap());
    for op in family.ops() {
        out.insert(suspend_operation(op, &s)?)?;
    }
    Ok(out)
}

/// Hat family on `W = sV` to unhat family on `V = s⁻¹W`.
pub fn desuspend_family(family: &OperationFamily) -> Result<OperationFamily> {
    family.require_convention(Convention::Hat)?;
    let base = Arc::new(family.space().shifted(-1));
    let s = SuspendedSpace { base: base.clone(), shifted: family.space().clone() };
    let mut out = OperationFamily::new(base, Convention::Unhat, family.arity_cap());
    for op in family.ops() {
        out.insert(desuspend_operation(op, &s)?)?;
    }
    Ok(out)
}

/// The commutator functors: `α` (A∞ → L∞), `β` (PL∞ → L∞) and
/// `γ` (A∞ → PL∞), with `β ∘ γ = α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommutatorKind {
    Alpha,
    Beta,
    Gamma,
}

impl CommutatorKind {
    pub fn mode(self) -> SymmetrizationMode {
        match self {
            CommutatorKind::Alpha => SymmetrizationMode::Full,
            CommutatorKind::Beta => SymmetrizationMode::Shuffle,
            CommutatorKind::Gamma => SymmetrizationMode::Partial,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CommutatorKind::Alpha => "alpha",
            CommutatorKind::Beta => "beta",
            CommutatorKind::Gamma => "gamma",
        }
    }
}

impl fmt::Display for CommutatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CommutatorKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "alpha" => Ok(CommutatorKind::Alpha),
            "beta" => Ok(CommutatorKind::Beta),
            "gamma" => Ok(CommutatorKind::Gamma),
            other => Err(format!("unknown commutator `{other}` (expected alpha, beta or gamma)")),
        }
    }
}

/// Applies a commutator to every member, with `ρ⁽¹⁾` in the hat and `ρ⁽²⁾`
/// in the unhat convention.
pub fn commutator(family: &OperationFamily, kind: CommutatorKind) -> Result<OperationFamily> {
    let action = family.convention().action();
    family.map_ops(|op| Ok(precompose_symmetrized(op, action, kind.mode())))
}

/// The graded space `V̄` carrying an n-ary algebra on `V` as a homotopy
/// algebra: copies of `V` in degrees `0`, `n−2` and `2n−4`.
#[derive(Debug, Clone, PartialEq)]
pub struct NaryEmbedding {
    pub n: usize,
    pub base: Arc<GradedSpace>,
    pub space: Arc<GradedSpace>,
    /// Basis index of `V̄` to basis index of `V`.
    pub forgetful: Vec<usize>,
}

impl NaryEmbedding {
    pub fn new(base: Arc<GradedSpace>, n: usize) -> Result<Self> {
        base.require_degree_zero()?;
        if n < 2 {
            return Err(Error::Arity { expected: 2, found: n });
        }
        let d = base.dim();
        if n == 2 {
            return Ok(NaryEmbedding { n, base: base.clone(), space: base, forgetful: (0..d).collect() });
        }
        let degrees = [0, n as i64 - 2, 2 * n as i64 - 4];
        let mut basis = Vec::with_capacity(3 * d);
        for deg in degrees {
            for b in base.basis() {
                basis.push((format!("{}@{deg}", b.label), deg));
            }
        }
        let space = Arc::new(GradedSpace::new(basis)?);
        let forgetful = (0..3 * d).map(|i| i % d).collect();
        Ok(NaryEmbedding { n, base, space, forgetful })
    }

    /// The basis index of the copy of `x` in the given degree.
    pub fn lift(&self, x: usize, degree: i64) -> Option<usize> {
        let d = self.base.dim();
        if self.n == 2 {
            return (degree == 0).then_some(x);
        }
        let n = self.n as i64;
        let copy = [0, n - 2, 2 * n - 4].iter().position(|&g| g == degree)?;
        Some(copy * d + x)
    }
}

/// Embeds an n-ary operation on a degree-0 space as the single operation
/// `μₙ` of degree `n−2` on `V̄`:
/// `μₙ(x₁,…,xₙ) = μ(x′₁,…,x′ₙ)` when `|x₁⊗⋯⊗xₙ|` is `0` or `n−2`, else `0`.
pub fn nary_embed(mu: &Operation) -> Result<(NaryEmbedding, OperationFamily)> {
    if mu.degree() != 0 {
        return Err(Error::Grading);
    }
    let n = mu.arity();
    let emb = NaryEmbedding::new(mu.space().clone(), n)?;
    let degree = n as i64 - 2;
    let op = Operation::from_fn(emb.space.clone(), n, degree, |w| {
        let total = emb.space.degree_unchecked(w);
        if total != 0 && total != degree {
            return Vector::zero();
        }
        let base_word: Vec<usize> = w.iter().map(|&x| emb.forgetful[x]).collect();
        let Some(value) = mu.get(&base_word) else { return Vector::zero() };
        value
            .iter()
            .map(|(&z, c)| (emb.lift(z, total + degree).expect("output copy exists"), c.clone()))
            .collect()
    });
    let family = OperationFamily::with_ops(emb.space.clone(), Convention::Unhat, n, [op])?;
    Ok((emb, family))
}

fn require_ungraded(op: &Operation) -> Result<()> {
    op.space().require_degree_zero()?;
    if op.degree() != 0 {
        return Err(Error::Grading);
    }
    Ok(())
}

/// `𝔭(x₁,…,xₙ) = Σ_{σ∈𝕊_{n−1}} sgn(σ) 𝔪(x_{σ(1)},…,x_{σ(n−1)},xₙ)`.
pub fn nary_commutator_prelie(mu: &Operation) -> Result<Operation> {
    require_ungraded(mu)?;
    Ok(precompose_symmetrized(mu, Action::Rho2, SymmetrizationMode::Partial))
}

/// `𝔩(x₁,…,xₙ) = Σ_{σ∈Sh(n−1,1)} sgn(σ) 𝔭(x_{σ(1)},…,x_{σ(n)})`.
pub fn nary_commutator_lie(p: &Operation) -> Result<Operation> {
    require_ungraded(p)?;
    require_symmetry(p, Action::Rho2, SymmetryScope::Partial)?;
    Ok(precompose_symmetrized(p, Action::Rho2, SymmetrizationMode::Shuffle))
}

/// `Σ_{σ∈𝕊ₙ} sgn(σ) op ∘ σ`.
pub fn full_antisymmetrization(op: &Operation) -> Result<Operation> {
    require_ungraded(op)?;
    Ok(precompose_symmetrized(op, Action::Rho2, SymmetrizationMode::Full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::{check_nary, residual_unchecked, EquationFlavor, NaryKind, StructureKind};
    use crate::scalar::Scalar;
    use crate::space::TensorWord;
    use itertools::Itertools;
    use crate::symmetrize::check_partial_symmetry;

    fn graded() -> Arc<GradedSpace> {
        Arc::new(GradedSpace::new([("x", 0), ("y", 1)]).unwrap())
    }

    fn unhat_family(seed: i64, cap: usize) -> OperationFamily {
        let sp = graded();
        let ops = (1..=cap).map(|n| {
            let sp2 = sp.clone();
            Operation::from_fn(sp.clone(), n, n as i64 - 2, move |w| {
                let d = sp2.degree_unchecked(w) + n as i64 - 2;
                let mut h = seed;
                for &x in w {
                    h = (h * 17 + x as i64 + 1) % 7;
                }
                sp2.indices_in_degree(d).into_iter().map(|z| (z, Scalar::from(h - 3))).collect()
            })
        });
        let ops: Vec<Operation> = ops.collect();
        OperationFamily::with_ops(sp, Convention::Unhat, cap, ops).unwrap()
    }

    fn plane() -> Arc<GradedSpace> {
        Arc::new(GradedSpace::ungraded(["a", "b"]).unwrap())
    }

    fn matrix_span() -> Operation {
        Operation::from_entries(
            plane(),
            2,
            0,
            [(TensorWord::from([0, 0]), Vector::basis(0)), (TensorWord::from([0, 1]), Vector::basis(1))],
        )
        .unwrap()
    }

    #[test]
    fn suspension_signs() {
        assert_eq!(suspension_sign(&[0, 0]), Sign::Plus);
        assert_eq!(suspension_sign(&[1, 0]), Sign::Minus);
        assert_eq!(suspension_sign(&[0]), Sign::Minus);
        assert_eq!(suspension_sign(&[5, 1, 0]), Sign::Plus);
        assert_eq!(suspension_sign(&[5, 0, 1]), Sign::Minus);
        assert_eq!(suspension_sign(&[1, 1, 1, 0]), Sign::Plus);
    }

    #[test]
    fn sign_transfer_exhaustive() {
        for n in 2..=6usize {
            for degrees in (0..n - 1).map(|_| 0i64..=2).multi_cartesian_product() {
                for sigma in Permutation::all(n - 1) {
                    let (l, r) = sign_transfer_sides(&sigma, &degrees).unwrap();
                    assert_eq!(l, r, "{n} {degrees:?} {:?}", sigma.one_line());
                }
            }
        }
    }

    #[test]
    fn suspension_of_a_differential_flips_sign() {
        let sp = graded();
        let d = Operation::from_entries(sp.clone(), 1, -1, [(TensorWord::from([1]), Vector::basis(0))]).unwrap();
        let fam = OperationFamily::with_ops(sp, Convention::Unhat, 1, [d]).unwrap();
        let hat = suspend_family(&fam).unwrap();
        assert_eq!(hat.get(1).unwrap().evaluate(&[1]).unwrap(), Vector::single(0, Scalar::from(-1)));
        assert_eq!(hat.space().degrees(), vec![1, 2]);
    }

    #[test]
    fn round_trip_and_errors() {
        for seed in 0..4 {
            let fam = unhat_family(seed, 4);
            let back = desuspend_family(&suspend_family(&fam).unwrap()).unwrap();
            assert_eq!(back, fam);
        }
        let empty = OperationFamily::new(graded(), Convention::Hat, 3);
        assert!(desuspend_family(&empty).unwrap().is_zero());
        assert!(matches!(suspend_family(&empty), Err(Error::Convention { .. })));
    }

    #[test]
    fn suspension_intertwines_residuals() {
        for seed in 0..3 {
            let fam = unhat_family(seed, 3);
            let hat = suspend_family(&fam).unwrap();
            let s = SuspendedSpace::new(fam.space().clone());
            for kind in StructureKind::ALL {
                for n in 1..=4 {
                    let r = residual_unchecked(&fam, EquationFlavor::new(kind, Convention::Unhat), n).unwrap().op;
                    let rh = residual_unchecked(&hat, EquationFlavor::new(kind, Convention::Hat), n).unwrap().op;
                    assert_eq!(rh, suspend_operation(&r, &s).unwrap().negated(), "{kind} {n}");
                }
            }
        }
    }

    #[test]
    fn symmetry_transfers_through_suspension() {
        for seed in 0..3 {
            let raw = unhat_family(seed, 4);
            let sym = commutator(&raw, CommutatorKind::Gamma).unwrap();
            for fam in [&raw, &sym] {
                let hat = suspend_family(fam).unwrap();
                for n in 1..=4 {
                    assert_eq!(
                        check_partial_symmetry(&fam.get_or_zero(n), Action::Rho2),
                        check_partial_symmetry(&hat.get_or_zero(n), Action::Rho1)
                    );
                }
            }
        }
    }

    #[test]
    fn commutators_in_low_arity() {
        let mu = matrix_span();
        let fam = OperationFamily::with_ops(plane(), Convention::Unhat, 2, [mu.clone()]).unwrap();
        assert_eq!(commutator(&fam, CommutatorKind::Gamma).unwrap(), fam);
        let beta = commutator(&fam, CommutatorKind::Beta).unwrap();
        for w in plane().words(2) {
            let expected = mu.evaluate(&w).unwrap().difference(&mu.evaluate(&[w[1], w[0]]).unwrap());
            assert_eq!(beta.get_or_zero(2).evaluate(&w).unwrap(), expected);
        }
        let unary = unhat_family(1, 1);
        for kind in [CommutatorKind::Alpha, CommutatorKind::Beta, CommutatorKind::Gamma] {
            assert_eq!(commutator(&unary, kind).unwrap(), unary);
        }
    }

    #[test]
    fn beta_after_gamma_is_alpha() {
        let hat = suspend_family(&unhat_family(2, 4)).unwrap();
        let bg = commutator(&commutator(&hat, CommutatorKind::Gamma).unwrap(), CommutatorKind::Beta).unwrap();
        assert_eq!(bg, commutator(&hat, CommutatorKind::Alpha).unwrap());
    }

    #[test]
    fn commutator_square_commutes() {
        for seed in 0..3 {
            let fam = unhat_family(seed, 4);
            let lhs = suspend_family(&commutator(&fam, CommutatorKind::Gamma).unwrap()).unwrap();
            let rhs = commutator(&suspend_family(&fam).unwrap(), CommutatorKind::Gamma).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn embedding_shapes() {
        let (emb, fam) = nary_embed(&matrix_span()).unwrap();
        assert_eq!(*emb.space, *plane());
        assert_eq!(fam.get(2).unwrap().entries(), matrix_span().entries());

        let mu3 = Operation::from_fn(plane(), 3, 0, |w| Vector::basis(w[2]));
        let (emb, fam) = nary_embed(&mu3).unwrap();
        assert_eq!(emb.space.degrees(), vec![0, 0, 1, 1, 2, 2]);
        let op = fam.get(3).unwrap();
        assert_eq!(op.degree(), 1);
        // One degree-2 letter and two degree-0 letters: total 2, not 0 or 1.
        assert!(op.evaluate(&[4, 0, 1]).unwrap().is_zero());
        // All degree 0: lands in the degree-1 copy.
        assert_eq!(op.evaluate(&[0, 1, 1]).unwrap(), Vector::basis(3));
        // Total degree 1: lands in the degree-2 copy.
        assert_eq!(op.evaluate(&[2, 0, 0]).unwrap(), Vector::basis(4));
        let (_, zero) = nary_embed(&Operation::zero(plane(), 3, 0)).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn embedding_detects_pre_lie_3() {
        let base = Arc::new(GradedSpace::ungraded(["a", "b", "c", "d"]).unwrap());
        // A nilpotent example: μ(a, a, a) = b only, antisymmetrized.
        let raw = Operation::from_entries(base.clone(), 3, 0, [(TensorWord::from([0, 1, 2]), Vector::basis(3))]).unwrap();
        let mu = nary_commutator_prelie(&raw).unwrap();
        let holds = check_nary(&mu, NaryKind::PreLie).unwrap().holds;
        let (_, fam) = nary_embed(&mu).unwrap();
        let all_zero = (1..=5).all(|k| {
            residual_unchecked(&fam, EquationFlavor::new(StructureKind::PreLie, Convention::Unhat), k).unwrap().is_zero()
        });
        assert_eq!(holds, all_zero);
        assert!(holds);
    }

    #[test]
    fn nary_commutators_in_arity_two() {
        let mu = matrix_span();
        let p = nary_commutator_prelie(&mu).unwrap();
        assert_eq!(p, mu);
        assert!(check_nary(&p, NaryKind::PreLie).unwrap().holds);
        let l = nary_commutator_lie(&p).unwrap();
        assert_eq!(l.evaluate(&[0, 1]).unwrap(), Vector::basis(1));
        assert!(check_nary(&l, NaryKind::Lie).unwrap().holds);
        assert!(nary_commutator_prelie(&Operation::zero(plane(), 3, 0)).unwrap().is_zero());
    }

    #[test]
    fn full_antisymmetrization_is_proportional_to_shuffle_sum() {
        for n in 1..=4usize {
            let raw = Operation::from_fn(plane(), n, 0, |w| {
                let h = w.iter().enumerate().map(|(i, &x)| (i + 1) * (x + 1)).sum::<usize>() as i64;
                [(0, Scalar::from(h % 3 - 1)), (1, Scalar::from(h % 4 - 2))].into_iter().collect()
            });
            let p = nary_commutator_prelie(&raw).unwrap();
            let full = full_antisymmetrization(&p).unwrap();
            let l = nary_commutator_lie(&p).unwrap();
            assert_eq!(full, l.scaled(&Scalar::factorial(n - 1)));
        }
    }
}
