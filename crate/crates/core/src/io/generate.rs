use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::document::{AlgebraDocument, DeclaredType, DocConvention};
use crate::combination::Vector;
use crate::equations::{NaryKind, StructureKind};
use crate::error::{Error, Result};
use crate::functors::suspend_family;
use crate::operation::{Convention, Operation, OperationFamily};
use crate::perm::Action;
use crate::scalar::Scalar;
use crate::space::GradedSpace;
use crate::symmetrize::{precompose_symmetrized, SymmetrizationMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratedStructure {
    /// Independent random structure constants.
    Free,
    /// A binary associative algebra from a small catalog, written in a
    /// random basis.
    Associative,
}

impl fmt::Display for GeneratedStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratedStructure::Free => "free",
            GeneratedStructure::Associative => "associative",
        })
    }
}

impl FromStr for GeneratedStructure {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "free" => Ok(GeneratedStructure::Free),
            "associative" => Ok(GeneratedStructure::Associative),
            other => Err(format!("unknown structure `{other}` (expected free or associative)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenerateParams {
    pub seed: u64,
    pub dim: usize,
    pub min_degree: i64,
    pub max_degree: i64,
    pub arities: Vec<usize>,
    /// Fraction of admissible structure constants that are nonzero.
    pub sparsity: f64,
    pub convention: DocConvention,
    pub symmetrize: Option<SymmetrizationMode>,
    pub structure: GeneratedStructure,
}

impl Default for GenerateParams {
    fn default() -> Self {
        GenerateParams {
            seed: 0,
            dim: 2,
            min_degree: 0,
            max_degree: 1,
            arities: vec![1, 2],
            sparsity: 0.5,
            convention: DocConvention::Unhat,
            symmetrize: None,
            structure: GeneratedStructure::Free,
        }
    }
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let mut num = rng.random_range(1..=3i64);
    if rng.random_bool(0.5) {
        num = -num;
    }
    let den = if rng.random_bool(0.2) { 2 } else { 1 };
    Scalar::ratio(num, den).expect("nonzero denominator")
}

fn labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

/// A deterministic random document. Every operation is homogeneous by
/// construction.
pub fn generate_random(params: &GenerateParams) -> Result<AlgebraDocument> {
    if params.dim == 0 {
        return Err(Error::document("dim", "the space needs at least one basis element"));
    }
    if !(0.0..=1.0).contains(&params.sparsity) {
        return Err(Error::document("sparsity", "expected a value in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    match params.structure {
        GeneratedStructure::Free => generate_free(params, &mut rng),
        GeneratedStructure::Associative => generate_associative(params, &mut rng),
    }
}

fn symmetrized(op: Operation, params: &GenerateParams, action: Action) -> Operation {
    match params.symmetrize {
        Some(mode) => precompose_symmetrized(&op, action, mode),
        None => op,
    }
}

fn generate_free(params: &GenerateParams, rng: &mut ChaCha8Rng) -> Result<AlgebraDocument> {
    let (lo, hi) = match params.convention {
        DocConvention::Nary => (0, 0),
        _ if params.min_degree > params.max_degree => {
            return Err(Error::document("degrees", "min degree exceeds max degree"));
        }
        _ => (params.min_degree, params.max_degree),
    };
    let degrees: Vec<i64> = (0..params.dim).map(|_| rng.random_range(lo..=hi)).collect();
    let space = Arc::new(GradedSpace::new(labels(params.dim).into_iter().zip(degrees))?);
    let mut arities = params.arities.clone();
    arities.sort_unstable();
    arities.dedup();
    if arities.contains(&0) {
        return Err(Error::document("arities", "arities must be at least 1"));
    }
    if params.convention == DocConvention::Nary && arities.len() > 1 {
        return Err(Error::document("arities", "an nary document holds exactly one arity"));
    }
    let action = params.convention.family_convention().map_or(Action::Rho2, Convention::action);
    let mut operations = BTreeMap::new();
    for &n in &arities {
        let degree = params.convention.family_convention().map_or(0, |c| c.degree(n));
        let mut entries = BTreeMap::new();
        for w in space.words(n) {
            let targets = space.indices_in_degree(space.degree_unchecked(&w) + degree);
            let mut value = Vector::zero();
            for z in targets {
                if rng.random_bool(params.sparsity) {
                    value.add_term(z, random_coefficient(rng));
                }
            }
            if !value.is_zero() {
                entries.insert(w, value);
            }
        }
        let op = Operation::from_entries(space.clone(), n, degree, entries)?;
        operations.insert(n, symmetrized(op, params, action));
    }
    Ok(AlgebraDocument { space, convention: params.convention, declared_type: None, operations })
}

type Matrix = Vec<Vec<Scalar>>;

fn catalog_product(choice: usize, dim: usize, i: usize, j: usize) -> Option<usize> {
    match choice {
        // 𝕂[t]/(t^dim)
        0 => (i + j < dim).then_some(i + j),
        // 𝕂 × ⋯ × 𝕂
        1 => (i == j).then_some(i),
        // e₀ a left unit, every other product zero
        2 => (i == 0).then_some(j),
        // e₀ a right unit, every other product zero
        3 => (j == 0).then_some(i),
        // upper triangular 2×2 matrices: E₁₁, E₁₂, E₂₂
        _ => match (i, j) {
            (0, 0) => Some(0),
            (0, 1) | (1, 2) => Some(1),
            (2, 2) => Some(2),
            _ => None,
        },
    }
}

fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip().expect("nonzero pivot");
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn random_invertible(rng: &mut ChaCha8Rng, dim: usize) -> (Matrix, Matrix) {
    loop {
        let m: Matrix = (0..dim).map(|_| (0..dim).map(|_| Scalar::from(rng.random_range(-2..=2i64))).collect()).collect();
        if let Some(inv) = inverse(&m) {
            return (m, inv);
        }
    }
}

fn generate_associative(params: &GenerateParams, rng: &mut ChaCha8Rng) -> Result<AlgebraDocument> {
    let dim = params.dim;
    let choices = if dim == 3 { 5 } else { 4 };
    let choice = rng.random_range(0..choices);
    let (p, p_inv) = random_invertible(rng, dim);
    let space = Arc::new(GradedSpace::ungraded(labels(dim))?);
    // f_a = Σ_i P[i][a] e_i, so f_a f_b = Σ P[i][a] P[j][b] e_{ij}, and
    // e_k = Σ_c P⁻¹[c][k] f_c.
    let op = Operation::from_fn(space.clone(), 2, 0, |w| {
        let (a, b) = (w[0], w[1]);
        let mut in_e = Vector::zero();
        for i in 0..dim {
            for j in 0..dim {
                if let Some(k) = catalog_product(choice, dim, i, j) {
                    in_e.add_term(k, &p[i][a] * &p[j][b]);
                }
            }
        }
        in_e.map_linear(|&k| (0..dim).map(|c| (c, p_inv[c][k].clone())).collect())
    });
    let unhat = OperationFamily::with_ops(space, Convention::Unhat, 2, [symmetrized(op, params, Action::Rho2)])?;
    let declared = Some(DeclaredType::Homotopy(StructureKind::Assoc));
    match params.convention {
        DocConvention::Unhat => Ok(AlgebraDocument::from_family(&unhat, declared)),
        DocConvention::Hat => Ok(AlgebraDocument::from_family(&suspend_family(&unhat)?, declared)),
        DocConvention::Nary => AlgebraDocument::from_nary(
            &unhat.get_or_zero(2),
            Some(DeclaredType::Nary(NaryKind::PartiallyAssociative, 2)),
        ),
    }
}
