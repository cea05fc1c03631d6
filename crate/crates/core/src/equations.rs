//! Structure equations of A∞, PL∞ and L∞ algebras in both conventions, and
//! of partially associative, pre-Lie and Lie n-algebras.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result, SymmetryScope};
use crate::operation::{Convention, Operation, OperationFamily};
use crate::perm::{Action, Permutation};
use crate::scalar::{Scalar, Sign};
use crate::space::TensorWord;
use crate::symmetrize::{partial_permutations, require_symmetry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Assoc,
    PreLie,
    Lie,
}

impl StructureKind {
    pub const ALL: [StructureKind; 3] = [StructureKind::Assoc, StructureKind::PreLie, StructureKind::Lie];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Assoc => "assoc",
            StructureKind::PreLie => "prelie",
            StructureKind::Lie => "lie",
        }
    }

    /// The symmetry the operations must have, if any.
    pub fn symmetry(self) -> Option<SymmetryScope> {
        match self {
            StructureKind::Assoc => None,
            StructureKind::PreLie => Some(SymmetryScope::Partial),
            StructureKind::Lie => Some(SymmetryScope::Full),
        }
    }

    /// The permutations summed over after composing, for arity `n`.
    fn precomposition(self, n: usize) -> Option<Vec<Permutation>> {
        match self {
            StructureKind::Assoc => None,
            StructureKind::PreLie => Some(partial_permutations(n)),
            StructureKind::Lie => Some(Permutation::all(n)),
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "assoc" => Ok(StructureKind::Assoc),
            "prelie" => Ok(StructureKind::PreLie),
            "lie" => Ok(StructureKind::Lie),
            other => Err(format!("unknown kind `{other}` (expected assoc, prelie or lie)")),
        }
    }
}

/// One of the six homotopy equation systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EquationFlavor {
    pub kind: StructureKind,
    pub convention: Convention,
}

impl EquationFlavor {
    pub fn new(kind: StructureKind, convention: Convention) -> Self {
        EquationFlavor { kind, convention }
    }

    /// The coefficient of `μᵢ ∘ (I_m ⊗ μ_j ⊗ I)` in the `n = i+j−1` equation.
    fn coefficient(self, i: usize, j: usize, m: usize) -> Scalar {
        let base = match self.kind {
            StructureKind::Assoc => Scalar::one(),
            StructureKind::PreLie => Scalar::inverse_factorial(i - 1) * Scalar::inverse_factorial(j - 1),
            StructureKind::Lie => Scalar::inverse_factorial(i - 1) * Scalar::inverse_factorial(j),
        };
        match self.convention {
            Convention::Hat => base,
            Convention::Unhat => base.signed(Sign::power((j * (i - m - 1) + m) as i64)),
        }
    }

    /// Degree of the `n`-th left-hand side.
    pub fn residual_degree(self, n: usize) -> i64 {
        match self.convention {
            Convention::Hat => -2,
            Convention::Unhat => n as i64 - 3,
        }
    }
}

impl fmt::Display for EquationFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.kind, self.convention)
    }
}

/// A nonzero coefficient of a residual on a basis word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub input: TensorWord,
    pub output: usize,
    pub coefficient: Scalar,
}

/// The left-hand side of the `n`-th structure equation, as an operation.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub n: usize,
    pub op: Operation,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.op.is_zero()
    }

    /// The smallest input word with a nonzero value, and its first term.
    pub fn witness(&self) -> Option<Witness> {
        witness_of(&self.op)
    }
}

pub(crate) fn witness_of(op: &Operation) -> Option<Witness> {
    let (w, v) = op.entries().iter().next()?;
    let (z, c) = v.iter().next()?;
    Some(Witness { input: w.clone(), output: *z, coefficient: c.clone() })
}

fn check_family_symmetry(family: &OperationFamily, kind: StructureKind, up_to: usize) -> Result<()> {
    if let Some(scope) = kind.symmetry() {
        let action = family.convention().action();
        for op in family.ops().filter(|op| op.arity() <= up_to) {
            require_symmetry(op, action, scope)?;
        }
    }
    Ok(())
}

/// The `n`-th residual, after checking that every operation it uses has
/// the symmetry the flavor requires.
pub fn residual(family: &OperationFamily, flavor: EquationFlavor, n: usize) -> Result<Residual> {
    family.require_convention(flavor.convention)?;
    check_family_symmetry(family, flavor.kind, n)?;
    residual_unchecked(family, flavor, n)
}

/// The `n`-th residual without symmetry preconditions.
///
/// `Σ_{i+j=n+1} Σ_{m=0}^{i−1} c(i,j,m) μᵢ∘(I_m⊗μ_j⊗I_{i−m−1}) ∘ P`, where
/// `P` is `Σ_{𝕊_{n−1}} ρ_σ⊗I₁` (pre-Lie), `Σ_{𝕊ₙ} ρ_σ` (Lie) or nothing
/// (associative), using `ρ⁽¹⁾` in the hat and `ρ⁽²⁾` in the unhat convention.
pub fn residual_unchecked(family: &OperationFamily, flavor: EquationFlavor, n: usize) -> Result<Residual> {
    family.require_convention(flavor.convention)?;
    if n == 0 {
        return Err(Error::Arity { expected: 1, found: 0 });
    }
    let terms: Vec<(usize, usize, usize)> = (1..=n)
        .flat_map(|i| (0..i).map(move |m| (i, n + 1 - i, m)))
        .filter(|&(i, j, _)| family.get(i).is_some() && family.get(j).is_some())
        .collect();
    let parts: Vec<Operation> = terms
        .par_iter()
        .map(|&(i, j, m)| {
            let outer = family.get(i).expect("filtered");
            let inner = family.get(j).expect("filtered");
            outer.compose_insert(inner, m).map(|c| c.scaled(&flavor.coefficient(i, j, m)))
        })
        .collect::<Result<_>>()?;
    let mut sum = Operation::zero(family.space().clone(), n, flavor.residual_degree(n));
    for part in &parts {
        sum.add_scaled(part, &Scalar::one())?;
    }
    let op = match flavor.kind.precomposition(n) {
        Some(perms) => sum.precompose_sum(&perms, flavor.convention.action()),
        None => sum,
    };
    Ok(Residual { n, op })
}

/// The three strict n-ary structures on a space concentrated in degree 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NaryKind {
    PartiallyAssociative,
    PreLie,
    Lie,
}

impl NaryKind {
    pub fn name(self) -> &'static str {
        match self {
            NaryKind::PartiallyAssociative => "assoc_n",
            NaryKind::PreLie => "prelie_n",
            NaryKind::Lie => "lie_n",
        }
    }

    /// The homotopy structure the n-ary one embeds into.
    pub fn structure(self) -> StructureKind {
        match self {
            NaryKind::PartiallyAssociative => StructureKind::Assoc,
            NaryKind::PreLie => StructureKind::PreLie,
            NaryKind::Lie => StructureKind::Lie,
        }
    }
}

impl fmt::Display for NaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NaryCheck {
    pub holds: bool,
    pub residual: Residual,
}

fn require_ungraded(mu: &Operation) -> Result<()> {
    mu.space().require_degree_zero()?;
    if mu.degree() != 0 {
        return Err(Error::Grading);
    }
    Ok(())
}

/// Checks the defining identity of an n-ary algebra of the given kind,
/// enforcing its symmetry precondition first.
pub fn check_nary(mu: &Operation, kind: NaryKind) -> Result<NaryCheck> {
    require_ungraded(mu)?;
    if let Some(scope) = kind.structure().symmetry() {
        require_symmetry(mu, Action::Rho2, scope)?;
    }
    check_nary_unchecked(mu, kind)
}

/// The n-ary residual
/// `Σ_{i=0}^{n−1} (−1)^{i(n−1)} c · μ∘(Iᵢ⊗μ⊗I_{n−1−i}) ∘ P`
/// with `c = 1`, `1/((n−1)!)²` or `1/((n−1)! n!)` and `P` as for the
/// homotopy equations in the unhat convention.
pub fn check_nary_unchecked(mu: &Operation, kind: NaryKind) -> Result<NaryCheck> {
    require_ungraded(mu)?;
    let n = mu.arity();
    let c = match kind {
        NaryKind::PartiallyAssociative => Scalar::one(),
        NaryKind::PreLie => Scalar::inverse_factorial(n - 1) * Scalar::inverse_factorial(n - 1),
        NaryKind::Lie => Scalar::inverse_factorial(n - 1) * Scalar::inverse_factorial(n),
    };
    let arity = 2 * n - 1;
    let mut sum = Operation::zero(mu.space().clone(), arity, 0);
    for i in 0..n {
        let term = mu.compose_insert(mu, i)?;
        sum.add_scaled(&term, &c.clone().signed(Sign::power((i * (n - 1)) as i64)))?;
    }
    let op = match kind.structure().precomposition(arity) {
        Some(perms) => sum.precompose_sum(&perms, Action::Rho2),
        None => sum,
    };
    let residual = Residual { n: arity, op };
    Ok(NaryCheck { holds: residual.is_zero(), residual })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::combination::Vector;
    use crate::space::GradedSpace;
    use crate::symmetrize::{precompose_symmetrized, SymmetrizationMode};

    fn plane() -> Arc<GradedSpace> {
        Arc::new(GradedSpace::ungraded(["a", "b"]).unwrap())
    }

    /// span{E₁₁, E₁₂} with a = E₁₁, b = E₁₂, via 2×2 matrix products.
    fn matrix_span() -> Operation {
        let basis = [[[1i64, 0], [0, 0]], [[0, 1], [0, 0]]];
        Operation::from_fn(plane(), 2, 0, move |w| {
            let (x, y) = (basis[w[0]], basis[w[1]]);
            let mut p = [[0i64; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    p[r][c] = (0..2).map(|k| x[r][k] * y[k][c]).sum();
                }
            }
            // Coordinates in the basis: p = p₀₀·a + p₀₁·b.
            [(0, Scalar::from(p[0][0])), (1, Scalar::from(p[0][1]))].into_iter().collect()
        })
    }

    fn dual_numbers() -> Operation {
        let space = Arc::new(GradedSpace::ungraded(["1", "t"]).unwrap());
        Operation::from_fn(space, 2, 0, |w| if w[0] + w[1] < 2 { Vector::basis(w[0] + w[1]) } else { Vector::zero() })
    }

    fn family(op: &Operation, convention: Convention) -> OperationFamily {
        OperationFamily::with_ops(op.space().clone(), convention, 4, [op.clone()]).unwrap()
    }

    /// Suspended degree-0 binary product: same structure constants on a space
    /// in degree 1, with the suspension sign of the even-arity rule.
    fn hat_embedding(mu: &Operation) -> OperationFamily {
        let shifted = Arc::new(mu.space().shifted(1));
        let op = Operation::from_entries(shifted.clone(), 2, -1, mu.entries().clone()).unwrap();
        OperationFamily::with_ops(shifted, Convention::Hat, 3, [op]).unwrap()
    }

    #[test]
    fn empty_family_has_zero_residuals() {
        for convention in [Convention::Hat, Convention::Unhat] {
            let fam = OperationFamily::new(Arc::new(GradedSpace::with_degrees(&[0, 1])), convention, 4);
            for kind in StructureKind::ALL {
                for n in 1..=4 {
                    let r = residual(&fam, EquationFlavor::new(kind, convention), n).unwrap();
                    assert!(r.is_zero());
                    assert_eq!(r.op.degree(), EquationFlavor::new(kind, convention).residual_degree(n));
                }
            }
        }
    }

    #[test]
    fn associator_of_dual_numbers_vanishes_in_hat_convention() {
        let mu = dual_numbers();
        let fam = hat_embedding(&mu);
        let r = residual(&fam, EquationFlavor::new(StructureKind::Assoc, Convention::Hat), 3).unwrap();
        assert!(r.is_zero());
        // Direct oracle.
        for w in mu.space().words(3) {
            let xy = mu.evaluate(&w[..2]).unwrap().map_linear(|&z| mu.evaluate(&[z, w[2]]).unwrap());
            let yz = mu.evaluate(&w[1..]).unwrap().map_linear(|&z| mu.evaluate(&[w[0], z]).unwrap());
            assert_eq!(xy, yz);
        }
    }

    #[test]
    fn associator_in_hat_convention_detects_failure() {
        // a·a = b, others zero except b·a = a: (a·a)·a = b·a = a, a·(a·a) = a·b = 0.
        let mu = Operation::from_entries(
            plane(),
            2,
            0,
            [(TensorWord::from([0, 0]), Vector::basis(1)), (TensorWord::from([1, 0]), Vector::basis(0))],
        )
        .unwrap();
        let r = residual(&hat_embedding(&mu), EquationFlavor::new(StructureKind::Assoc, Convention::Hat), 3).unwrap();
        assert!(!r.is_zero());
        assert!(r.witness().is_some());
    }

    #[test]
    fn jacobi_for_matrix_commutator() {
        let mu = matrix_span();
        let br = precompose_symmetrized(&mu, Action::Rho2, SymmetrizationMode::Full);
        let r = residual(&family(&br, Convention::Unhat), EquationFlavor::new(StructureKind::Lie, Convention::Unhat), 3).unwrap();
        assert!(r.is_zero());
        // Oracle: Jacobi on matrices.
        for w in plane().words(3) {
            let b = |x: &Vector, y: &Vector| -> Vector {
                let mut out = Vector::zero();
                for (i, c) in x {
                    for (j, d) in y {
                        out.add_scaled(&br.evaluate(&[*i, *j]).unwrap(), &(c * d));
                    }
                }
                out
            };
            let e = |i: usize| Vector::basis(i);
            let mut total = b(&e(w[0]), &b(&e(w[1]), &e(w[2])));
            total.add_assign(&b(&e(w[1]), &b(&e(w[2]), &e(w[0]))));
            total.add_assign(&b(&e(w[2]), &b(&e(w[0]), &e(w[1]))));
            assert!(total.is_zero());
        }
    }

    #[test]
    fn convention_and_symmetry_errors() {
        let mu = matrix_span();
        let fam = family(&mu, Convention::Unhat);
        assert!(matches!(
            residual(&fam, EquationFlavor::new(StructureKind::Assoc, Convention::Hat), 3),
            Err(Error::Convention { .. })
        ));
        assert!(matches!(
            residual(&fam, EquationFlavor::new(StructureKind::Lie, Convention::Unhat), 3),
            Err(Error::Symmetry { arity: 2, position: 1, scope: SymmetryScope::Full })
        ));
        assert!(residual_unchecked(&fam, EquationFlavor::new(StructureKind::Lie, Convention::Unhat), 3).is_ok());
    }

    #[test]
    fn nary_examples_in_arity_two() {
        let z = Operation::zero(plane(), 2, 0);
        for kind in [NaryKind::PartiallyAssociative, NaryKind::PreLie, NaryKind::Lie] {
            assert!(check_nary(&z, kind).unwrap().holds);
        }
        let mu = matrix_span();
        assert!(check_nary(&mu, NaryKind::PartiallyAssociative).unwrap().holds);
        assert!(check_nary(&mu, NaryKind::PreLie).unwrap().holds);
        let br = precompose_symmetrized(&mu, Action::Rho2, SymmetrizationMode::Full);
        assert!(check_nary(&br, NaryKind::Lie).unwrap().holds);
        assert!(matches!(check_nary(&mu, NaryKind::Lie), Err(Error::Symmetry { .. })));
    }

    #[test]
    fn nary_rejects_graded_spaces() {
        let op = Operation::zero(Arc::new(GradedSpace::with_degrees(&[1])), 2, 0);
        assert!(matches!(check_nary(&op, NaryKind::PartiallyAssociative), Err(Error::Grading)));
    }

    #[test]
    fn binary_pre_lie_condition_is_associator_symmetry() {
        // a·a = −a−b, a·b = −b: pre-Lie but not associative.
        let a = |c0: i64, c1: i64| -> Vector { [(0, Scalar::from(c0)), (1, Scalar::from(c1))].into_iter().collect() };
        let mu = Operation::from_entries(
            plane(),
            2,
            0,
            [(TensorWord::from([0, 0]), a(-1, -1)), (TensorWord::from([0, 1]), a(0, -1))],
        )
        .unwrap();
        assert!(check_nary(&mu, NaryKind::PreLie).unwrap().holds);
        assert!(!check_nary(&mu, NaryKind::PartiallyAssociative).unwrap().holds);
        // (x,y,z) = (y,x,z) checked directly.
        let assoc = |w: &[usize]| {
            let l = mu.evaluate(&w[..2]).unwrap().map_linear(|&u| mu.evaluate(&[u, w[2]]).unwrap());
            let r = mu.evaluate(&w[1..]).unwrap().map_linear(|&u| mu.evaluate(&[w[0], u]).unwrap());
            l.difference(&r)
        };
        for w in plane().words(3) {
            assert_eq!(assoc(&w), assoc(&[w[1], w[0], w[2]]));
        }
    }

    #[test]
    fn antisymmetrized_associative_product_is_lie() {
        for mu in [dual_numbers(), matrix_span()] {
            let br = precompose_symmetrized(&mu, Action::Rho2, SymmetrizationMode::Full);
            let fam = family(&br, Convention::Unhat);
            assert!(residual(&fam, EquationFlavor::new(StructureKind::Lie, Convention::Unhat), 3).unwrap().is_zero());
        }
    }

    #[test]
    fn concentrated_family_matches_nary_pre_lie() {
        // Single μ₂ on a degree-0 space: the unhat pre-Lie residual at
        // arity 3 is the binary pre-Lie residual.
        let mu = Operation::from_fn(plane(), 2, 0, |w| Vector::single((w[0] + w[1]) % 2, Scalar::from(w[0] as i64 + 1)));
        let fam = family(&mu, Convention::Unhat);
        let r = residual(&fam, EquationFlavor::new(StructureKind::PreLie, Convention::Unhat), 3).unwrap();
        assert_eq!(r.op, check_nary(&mu, NaryKind::PreLie).unwrap().residual.op);
    }

    #[test]
    fn residual_is_quadratic_polarization() {
        // R(a+b) − R(a) − R(b) is symmetric bilinear, so
        // R(a+b) + R(a−b) = 2R(a) + 2R(b).
        let space = Arc::new(GradedSpace::with_degrees(&[0, 1]));
        let build = |seed: i64| {
            let mk = |arity: usize| {
                let sp = space.clone();
                Operation::from_fn(space.clone(), arity, arity as i64 - 2, move |w| {
                    let d = sp.degree_unchecked(w) + arity as i64 - 2;
                    let mut h = seed;
                    for &x in w {
                        h = (h * 5 + x as i64 + 3) % 7;
                    }
                    sp.indices_in_degree(d).into_iter().map(|z| (z, Scalar::from(h - 3 + z as i64))).collect()
                })
            };
            OperationFamily::with_ops(space.clone(), Convention::Unhat, 3, [mk(1), mk(2), mk(3)]).unwrap()
        };
        let (a, b) = (build(1), build(4));
        let combine = |s: i64| {
            let mut out = OperationFamily::new(space.clone(), Convention::Unhat, 3);
            for n in 1..=3 {
                let mut op = a.get_or_zero(n);
                op.add_scaled(&b.get_or_zero(n), &Scalar::from(s)).unwrap();
                out.insert(op).unwrap();
            }
            out
        };
        for kind in StructureKind::ALL {
            let flavor = EquationFlavor::new(kind, Convention::Unhat);
            for n in 1..=3 {
                let r = |f: &OperationFamily| residual_unchecked(f, flavor, n).unwrap().op;
                let lhs = r(&combine(1)).sum(&r(&combine(-1))).unwrap();
                let rhs = r(&a).sum(&r(&b)).unwrap().scaled(&Scalar::from(2));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
