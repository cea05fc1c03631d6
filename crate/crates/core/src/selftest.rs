//! The invariant suite behind `hoalg selftest`. Each check compares two
//! independent routes to the same object and fails on the first
//! disagreement.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circle::{circle_bracket, circle_product};
use crate::coalgebra::{
    check_coassociativity, check_factorization, check_map_law, check_section, extend_coderivation, CoalgebraKind,
    CoalgebraMap,
};
use crate::combination::Vector;
use crate::equations::{check_nary, residual, EquationFlavor, NaryKind, StructureKind};
use crate::error::Result;
use crate::fixtures;
use crate::functors::{
    commutator, full_antisymmetrization, nary_commutator_lie, nary_embed, sign_transfer_sides, suspend_family,
    suspend_operation, CommutatorKind, SuspendedSpace,
};
use crate::io::{generate_random, CheckOutcome, GenerateParams, Report};
use crate::operation::{Convention, Operation, OperationFamily};
use crate::perm::{koszul_sign, Action, Permutation};
use crate::scalar::{Scalar, Sign};
use crate::space::GradedSpace;
use crate::symmetrize::{precompose_symmetrized, SymmetrizationMode};

fn random_degrees(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Vec<i64> {
    (0..n).map(|_| rng.random_range(0..=max)).collect()
}

/// `ε(σ; x∘τ) = ε(τσ; x) ε(τ; x)` for all `σ, τ ∈ 𝕊ₙ`, `n ≤ 5`, three
/// degree assignments per `n`.
pub fn sign_composition_law(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 1..=5 {
        let perms = Permutation::all(n);
        for _ in 0..3 {
            let x = random_degrees(&mut rng, n, 3);
            for tau in &perms {
                let xt: Vec<i64> = tau.images().iter().map(|&j| x[j]).collect();
                let et = koszul_sign(tau, &x)?;
                for sigma in &perms {
                    if koszul_sign(sigma, &xt)? != koszul_sign(&tau.compose(sigma), &x)? * et {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The sign-transfer identity for `σ ∈ 𝕊_{n−1}`, `n ≤ 6`, ten degree
/// assignments in `{0,1,2}` per `n`.
pub fn sign_transfer(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 2..=6 {
        let perms = Permutation::all(n - 1);
        for _ in 0..10 {
            let x = random_degrees(&mut rng, n - 1, 2);
            for sigma in &perms {
                let (l, r) = sign_transfer_sides(sigma, &x)?;
                if l != r {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Coassociativity, the coalgebra-map law, `γ̂β̂ = α̂` and `πα̂ = Id` on a
/// two-dimensional space with degrees `0, 1`, up to weight `cap`.
pub fn coalgebra_suite(cap: usize) -> bool {
    let space = GradedSpace::with_degrees(&[0, 1]);
    CoalgebraKind::ALL.iter().all(|&k| check_coassociativity(k, &space, cap))
        && CoalgebraMap::ALL.iter().all(|&m| check_map_law(m, &space, cap))
        && check_factorization(&space, cap)
        && check_section(&space, cap)
}

/// A random unhat family, partially symmetric under `ρ⁽²⁾`, with arities
/// at most 3 on a space of dimension at most 2 with degrees in `{0, 1}`.
pub fn random_unhat_family(seed: u64) -> Result<OperationFamily> {
    let params = GenerateParams {
        seed,
        dim: 1 + (seed % 2) as usize,
        min_degree: 0,
        max_degree: 1,
        arities: vec![1, 2, 3],
        sparsity: 0.4,
        symmetrize: Some(SymmetrizationMode::Partial),
        ..Default::default()
    };
    generate_random(&params)?.family(None)
}

/// For one partially symmetric unhat family `F` and `n ≤ cap`:
/// the hat residual of `sF` equals minus the suspended unhat residual, the
/// weight-1 component of `D²` on `P*(sV)` equals the hat residual, and the
/// three vanishing conditions agree. Returns `None` on success.
pub fn theorem_engine(family: &OperationFamily, cap: usize) -> Result<Option<String>> {
    let hat = suspend_family(family)?;
    let s = SuspendedSpace::new(family.space().clone());
    let d = extend_coderivation(&hat, CoalgebraKind::Perm, cap)?;
    let (mut p_zero, mut q_zero, mut d_zero) = (true, true, true);
    for n in 1..=cap {
        let p = residual(family, EquationFlavor::new(StructureKind::PreLie, Convention::Unhat), n)?.op;
        let q = residual(&hat, EquationFlavor::new(StructureKind::PreLie, Convention::Hat), n)?.op;
        if q != suspend_operation(&p, &s)?.negated() {
            return Ok(Some(format!("hat residual is not minus the suspended unhat residual at n={n}")));
        }
        let dd = d.square_cogenerator_component(n);
        if dd != q {
            return Ok(Some(format!("D^2 component differs from the hat residual at n={n}")));
        }
        p_zero &= p.is_zero();
        q_zero &= q.is_zero();
        d_zero &= dd.is_zero();
    }
    if p_zero != q_zero || q_zero != d_zero {
        return Ok(Some("the three vanishing conditions disagree".into()));
    }
    Ok(None)
}

fn all_zero(family: &OperationFamily, kind: StructureKind, up_to: usize) -> Result<bool> {
    let flavor = EquationFlavor::new(kind, family.convention());
    for n in 1..=up_to {
        if !residual(family, flavor, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A∞ input in the unhat convention: `γ̂` of the suspension satisfies the
/// hat pre-Lie equations and `β̂γ̂` the hat Lie equations, up to `up_to`.
/// The unhat commutators do the same.
pub fn commutator_pipeline(family: &OperationFamily, up_to: usize) -> Result<bool> {
    if !all_zero(family, StructureKind::Assoc, up_to)? {
        return Ok(false);
    }
    let hat = suspend_family(family)?;
    let g = commutator(&hat, CommutatorKind::Gamma)?;
    let b = commutator(&g, CommutatorKind::Beta)?;
    let gu = commutator(family, CommutatorKind::Gamma)?;
    let bu = commutator(&gu, CommutatorKind::Beta)?;
    Ok(all_zero(&g, StructureKind::PreLie, up_to)?
        && all_zero(&b, StructureKind::Lie, up_to)?
        && all_zero(&gu, StructureKind::PreLie, up_to)?
        && all_zero(&bu, StructureKind::Lie, up_to)?)
}

/// `s(γ(F)) = γ̂(sF)` on the given family.
pub fn commutator_square(family: &OperationFamily) -> Result<bool> {
    let lhs = suspend_family(&commutator(family, CommutatorKind::Gamma)?)?;
    let rhs = commutator(&suspend_family(family)?, CommutatorKind::Gamma)?;
    Ok(lhs == rhs)
}

/// A random unhat family with arities up to 4 and no symmetry.
pub fn random_raw_family(seed: u64, max_arity: usize) -> Result<OperationFamily> {
    let params = GenerateParams {
        seed,
        dim: 2,
        arities: (1..=max_arity).collect(),
        sparsity: 0.3,
        ..Default::default()
    };
    generate_random(&params)?.family(None)
}

/// `check_nary(μ, kind)` agrees with the vanishing of every residual of
/// the embedded family.
pub fn embedding_agrees(mu: &Operation, kind: NaryKind) -> Result<bool> {
    let direct = check_nary(mu, kind)?.holds;
    let (_, family) = nary_embed(mu)?;
    let embedded = all_zero(&family, kind.structure(), 2 * mu.arity() - 1)?;
    Ok(direct == embedded)
}

fn symmetry_mode(kind: NaryKind) -> Option<SymmetrizationMode> {
    kind.structure().symmetry().map(|scope| match scope {
        crate::error::SymmetryScope::Partial => SymmetrizationMode::Partial,
        crate::error::SymmetryScope::Full => SymmetrizationMode::Full,
    })
}

fn symmetrize_for(op: Operation, kind: NaryKind) -> Operation {
    match symmetry_mode(kind) {
        Some(mode) => precompose_symmetrized(&op, Action::Rho2, mode),
        None => op,
    }
}

/// A satisfying n-ary instance: a binary algebra from the catalog for
/// `n = 2`, or a nilpotent operation whose image is killed by every input
/// slot for `n ≥ 3`.
pub fn satisfying_nary(seed: u64, n: usize, kind: NaryKind) -> Result<Operation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 2 {
        let pool = match kind {
            NaryKind::PartiallyAssociative => vec![fixtures::dual_numbers(), fixtures::matrix_span()],
            NaryKind::PreLie => vec![fixtures::dual_numbers(), fixtures::matrix_span(), fixtures::non_associative_pre_lie()],
            NaryKind::Lie => vec![
                nary_commutator_lie(&fixtures::matrix_span())?,
                nary_commutator_lie(&fixtures::non_associative_pre_lie())?,
                Operation::zero(Arc::new(GradedSpace::ungraded(["a", "b"])?), 2, 0),
            ],
        };
        let base = &pool[rng.random_range(0..pool.len())];
        return Ok(base.scaled(&Scalar::from(rng.random_range(1..=3i64))));
    }
    let space = Arc::new(GradedSpace::ungraded(["a", "b"])?);
    let c = Scalar::from(rng.random_range(1..=3i64));
    let op = Operation::from_fn(space, n, 0, |w| {
        if w.iter().all(|&x| x == 0) {
            Vector::single(1, c.clone())
        } else {
            Vector::zero()
        }
    });
    Ok(symmetrize_for(op, kind))
}

/// Adds a random elementary term to `mu` and restores the symmetry `kind`
/// needs.
pub fn perturbed_nary(mu: &Operation, kind: NaryKind, seed: u64) -> Result<Operation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let space = mu.space().clone();
    let word = space.word_at(mu.arity(), rng.random_range(0..space.word_count(mu.arity())));
    let z = rng.random_range(0..space.dim());
    let delta = Operation::from_entries(space, mu.arity(), 0, [(word, Vector::basis(z))])?;
    mu.sum(&symmetrize_for(delta, kind))
}

/// `Σ_{𝕊ₙ} sgn(σ) 𝔭∘σ = (n−1)! 𝔩` for `𝔭` running over a spanning set of
/// the partially antisymmetric n-ary maps on a two-dimensional space.
pub fn antisymmetrization_identity(max_n: usize) -> Result<bool> {
    let space = Arc::new(GradedSpace::ungraded(["a", "b"])?);
    for n in 1..=max_n {
        for w in space.words(n) {
            for z in 0..space.dim() {
                let e = Operation::from_entries(space.clone(), n, 0, [(w.clone(), Vector::basis(z))])?;
                let p = precompose_symmetrized(&e, Action::Rho2, SymmetrizationMode::Partial);
                let l = nary_commutator_lie(&p)?;
                if full_antisymmetrization(&p)? != l.scaled(&Scalar::factorial(n - 1)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A random element of `C^{arity−1}` on a degree-0 space of dimension
/// `dim`: partially antisymmetric in all but the last slot.
pub fn random_cochain(rng: &mut ChaCha8Rng, dim: usize, arity: usize) -> Result<Operation> {
    let space = Arc::new(GradedSpace::with_degrees(&vec![0; dim]));
    let mut entries = Vec::new();
    for w in space.words(arity) {
        if rng.random_bool(0.4) {
            let z = rng.random_range(0..dim);
            entries.push((w, Vector::single(z, Scalar::from(rng.random_range(-2..=2i64)))));
        }
    }
    let op = Operation::from_entries(space, arity, 0, entries.into_iter().collect::<std::collections::BTreeMap<_, _>>())?;
    Ok(precompose_symmetrized(&op, Action::Rho2, SymmetrizationMode::Partial))
}

/// The pre-Lie n residual equals `μ∘μ` as an operation.
pub fn circle_lemma(mu: &Operation) -> Result<bool> {
    let r = check_nary(mu, NaryKind::PreLie)?.residual.op;
    Ok(r == circle_product(mu, mu)?)
}

/// Graded antisymmetry and the graded Jacobi identity for `[,]∘` on one
/// triple, with `|f| = arity − 1`.
pub fn graded_lie(f: &Operation, g: &Operation, h: &Operation) -> Result<bool> {
    let deg = |op: &Operation| (op.arity() - 1) as i64;
    let sign = |a: &Operation, b: &Operation| Scalar::from(Sign::power(deg(a) * deg(b)));
    let fg = circle_bracket(f, g)?;
    let gf = circle_bracket(g, f)?;
    if fg != gf.scaled(&sign(f, g)).negated() {
        return Ok(false);
    }
    let terms = [
        circle_bracket(&fg, h)?.scaled(&sign(f, h)),
        circle_bracket(&circle_bracket(g, h)?, f)?.scaled(&sign(g, f)),
        circle_bracket(&circle_bracket(h, f)?, g)?.scaled(&sign(h, g)),
    ];
    let mut total = terms[0].clone();
    total.add_scaled(&terms[1], &Scalar::one())?;
    total.add_scaled(&terms[2], &Scalar::one())?;
    Ok(total.is_zero())
}

fn outcome(name: &str, start: Instant, result: Result<bool>) -> CheckOutcome {
    match result {
        Ok(ok) => CheckOutcome::from_bool(name, ok, None),
        Err(e) => CheckOutcome::fail(name, None, None, Some(e.to_string())),
    }
    .timed(start)
}

fn criterion_theorem_engine(seed: u64) -> Result<Option<String>> {
    for k in 0..20 {
        let family = if k % 4 == 0 {
            fixtures::as_family(&[fixtures::dual_numbers(), fixtures::matrix_span(), fixtures::non_associative_pre_lie()][k as usize / 4 % 3])
        } else {
            random_unhat_family(seed * 100 + k)?
        };
        if let Some(why) = theorem_engine(&family, 5)? {
            return Ok(Some(format!("instance {k}: {why}")));
        }
    }
    Ok(None)
}

fn criterion_nary(seed: u64) -> Result<bool> {
    let kinds = [NaryKind::PartiallyAssociative, NaryKind::PreLie, NaryKind::Lie];
    for n in [2, 3] {
        for kind in kinds {
            for k in 0..10 {
                let mu = satisfying_nary(seed * 1000 + k, n, kind)?;
                if !check_nary(&mu, kind)?.holds || !embedding_agrees(&mu, kind)? {
                    return Ok(false);
                }
                let bad = perturbed_nary(&mu, kind, seed * 1000 + k)?;
                if !embedding_agrees(&bad, kind)? {
                    return Ok(false);
                }
            }
        }
    }
    antisymmetrization_identity(4)
}

/// Runs all nine checks. `seed` feeds every random choice.
pub fn run_selftest(seed: u64) -> Report {
    let start = Instant::now();
    let mut report = Report::new("selftest", format!("seed {seed}"));

    let t = Instant::now();
    report.push(outcome("1 sign composition law", t, sign_composition_law(seed)));

    let t = Instant::now();
    report.push(outcome("2 sign transfer", t, sign_transfer(seed)));

    let t = Instant::now();
    report.push(outcome("3 coalgebra suite", t, Ok(coalgebra_suite(5))));

    let t = Instant::now();
    report.push(match criterion_theorem_engine(seed) {
        Ok(None) => CheckOutcome::pass("4 theorem engine", None),
        Ok(Some(why)) => CheckOutcome::fail("4 theorem engine", None, None, Some(why)),
        Err(e) => CheckOutcome::fail("4 theorem engine", None, None, Some(e.to_string())),
    }
    .timed(t));

    let t = Instant::now();
    let commutators = (|| -> Result<bool> {
        let algebras = [fixtures::dual_numbers(), fixtures::matrix_span()];
        for mu in &algebras {
            let (_, family) = nary_embed(mu)?;
            if !commutator_pipeline(&family, 4)? {
                return Ok(false);
            }
        }
        let empty = OperationFamily::new(Arc::new(GradedSpace::with_degrees(&[0, 1])), Convention::Unhat, 2);
        if !commutator_pipeline(&fixtures::dga(), 4)? || !commutator_pipeline(&empty, 4)? {
            return Ok(false);
        }
        for k in 0..5 {
            if !commutator_square(&random_raw_family(seed * 10 + k, 4)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    report.push(outcome("5 commutator theorems", t, commutators));

    let t = Instant::now();
    report.push(outcome("6 n-ary layer", t, criterion_nary(seed)));

    let t = Instant::now();
    let lemma = (|| -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..20 {
            let mu = random_cochain(&mut rng, 1 + k % 2, 2 + k % 2)?;
            if !circle_lemma(&mu)? {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    report.push(outcome("7 circle lemma", t, lemma));

    let t = Instant::now();
    let lie = (|| -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed + 1);
        for _ in 0..10 {
            let [f, g, h] = [0; 3].map(|_| {
                let a = rng.random_range(1..=3);
                random_cochain(&mut rng, 2, a)
            });
            if !graded_lie(&f?, &g?, &h?)? {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    report.push(outcome("8 graded Lie structure", t, lie));

    let t = Instant::now();
    let round_trip = (|| -> Result<bool> {
        for s in 1..=10 {
            let doc = generate_random(&GenerateParams {
                seed: s,
                dim: 3,
                structure: crate::io::GeneratedStructure::Associative,
                ..Default::default()
            })?;
            let derived = crate::io::run_derive(&doc, crate::io::Functor::Commutator(CommutatorKind::Beta), Default::default())?;
            let Some(out) = derived.document else { return Ok(false) };
            let reparsed = crate::io::AlgebraDocument::parse(&out.to_json())?;
            if !crate::io::run_check(&reparsed, None, Default::default())?.passed() {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    report.push(outcome("9 document round trip", t, round_trip));

    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}
