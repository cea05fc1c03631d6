use std::fmt;
use std::str::FromStr;

use super::{
    add_canonical, canonical_words, comultiply, comultiply_twice, CoalgebraKind, CofreeElement, Side, Word,
};
use crate::combination::LinearCombination;
use crate::error::{Error, Result};
use crate::perm::{koszul_sign_unchecked, unshuffles_lenient, Permutation};
use crate::scalar::Scalar;
use crate::space::GradedSpace;
use crate::symmetrize::partial_permutations;

/// The injective coalgebra maps `α̂: ∧*V → T*V`, `β̂: ∧*V → P*V` and
/// `γ̂: P*V → T*V`, with `γ̂β̂ = α̂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoalgebraMap {
    Alpha,
    Beta,
    Gamma,
}

impl CoalgebraMap {
    pub const ALL: [CoalgebraMap; 3] = [CoalgebraMap::Alpha, CoalgebraMap::Beta, CoalgebraMap::Gamma];

    pub fn domain(self) -> CoalgebraKind {
        match self {
            CoalgebraMap::Alpha | CoalgebraMap::Beta => CoalgebraKind::Wedge,
            CoalgebraMap::Gamma => CoalgebraKind::Perm,
        }
    }

    pub fn codomain(self) -> CoalgebraKind {
        match self {
            CoalgebraMap::Alpha | CoalgebraMap::Gamma => CoalgebraKind::Tensor,
            CoalgebraMap::Beta => CoalgebraKind::Perm,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoalgebraMap::Alpha => "alpha",
            CoalgebraMap::Beta => "beta",
            CoalgebraMap::Gamma => "gamma",
        }
    }
}

impl fmt::Display for CoalgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoalgebraMap {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "alpha" => Ok(CoalgebraMap::Alpha),
            "beta" => Ok(CoalgebraMap::Beta),
            "gamma" => Ok(CoalgebraMap::Gamma),
            other => Err(format!("unknown map `{other}` (expected alpha, beta or gamma)")),
        }
    }
}

/// The image of one word of the domain, in canonical codomain words.
///
/// ```text
/// α̂(x₁∧⋯∧xₙ) = Σ_{σ∈𝕊ₙ} ε(σ) x_{σ(1)}⊗⋯⊗x_{σ(n)}
/// β̂(x₁∧⋯∧xₙ) = Σ_{σ∈Sh(n−1,1)} ε(σ) x_{σ(1)}∧⋯∧x_{σ(n−1)} ⊗ x_{σ(n)}
/// γ̂(x₁∧⋯∧x_{n−1}⊗xₙ) = Σ_{σ∈𝕊_{n−1}} ε(σ) x_{σ(1)}⊗⋯⊗x_{σ(n−1)}⊗xₙ
/// ```
pub fn map_word(map: CoalgebraMap, space: &GradedSpace, letters: &[usize]) -> LinearCombination<Word> {
    let n = letters.len();
    let perms: Vec<Permutation> = match map {
        CoalgebraMap::Alpha => Permutation::all(n),
        CoalgebraMap::Beta => unshuffles_lenient(&[n.saturating_sub(1), n.min(1)]),
        CoalgebraMap::Gamma => partial_permutations(n),
    };
    let degrees: Vec<i64> = letters.iter().map(|&x| space.degree(x)).collect();
    let mut out = LinearCombination::zero();
    for sigma in &perms {
        let y: Word = sigma.images().iter().map(|&j| letters[j]).collect();
        let sign = koszul_sign_unchecked(sigma, &degrees);
        add_canonical(&mut out, map.codomain(), space, &y, Scalar::from(sign));
    }
    out
}

pub fn coalgebra_map(map: CoalgebraMap, element: &CofreeElement) -> Result<CofreeElement> {
    if element.kind() != map.domain() {
        return Err(Error::Kind { expected: map.domain().to_string(), found: element.kind().to_string() });
    }
    let image = element.terms().map_linear(|w| map_word(map, element.space(), w));
    Ok(CofreeElement::from_terms(map.codomain(), element.space().clone(), element.weight_cap(), image))
}

/// `π = Σ (1/n!) πₙ: T*V → ∧*V`, a left inverse of `α̂`.
pub fn project_pi(element: &CofreeElement) -> Result<CofreeElement> {
    if element.kind() != CoalgebraKind::Tensor {
        return Err(Error::Kind { expected: CoalgebraKind::Tensor.to_string(), found: element.kind().to_string() });
    }
    let mut out = CofreeElement::zero(CoalgebraKind::Wedge, element.space().clone(), element.weight_cap());
    for (w, c) in element.terms() {
        out.add_letters(w, c * &Scalar::inverse_factorial(w.len()));
    }
    Ok(out)
}

/// `(Δ⊗Id)Δ = (Id⊗Δ)Δ` on every canonical word of weight at most `cap`.
pub fn check_coassociativity(kind: CoalgebraKind, space: &GradedSpace, cap: usize) -> bool {
    (1..=cap).all(|k| {
        canonical_words(kind, space, k)
            .iter()
            .all(|w| comultiply_twice(kind, space, w, Side::Left) == comultiply_twice(kind, space, w, Side::Right))
    })
}

/// `Δ ∘ m = (m⊗m) ∘ Δ` on every canonical domain word of weight at most `cap`.
pub fn check_map_law(map: CoalgebraMap, space: &GradedSpace, cap: usize) -> bool {
    let target = map.codomain();
    (1..=cap).all(|k| {
        canonical_words(map.domain(), space, k).iter().all(|w| {
            let mut lhs = LinearCombination::zero();
            for (u, c) in map_word(map, space, w) {
                lhs.add_scaled(&comultiply(target, space, &u), &c);
            }
            let mut rhs = LinearCombination::zero();
            for ((a, b), c) in comultiply(map.domain(), space, w) {
                let ma = map_word(map, space, &a);
                let mb = map_word(map, space, &b);
                for (x, cx) in &ma {
                    for (y, cy) in &mb {
                        rhs.add_term((x.clone(), y.clone()), &c * &(cx * cy));
                    }
                }
            }
            lhs == rhs
        })
    })
}

/// `γ̂ ∘ β̂ = α̂` on wedge words of weight at most `cap`.
pub fn check_factorization(space: &GradedSpace, cap: usize) -> bool {
    (1..=cap).all(|k| {
        canonical_words(CoalgebraKind::Wedge, space, k).iter().all(|w| {
            let via_perm = map_word(CoalgebraMap::Beta, space, w).map_linear(|u| map_word(CoalgebraMap::Gamma, space, u));
            via_perm == map_word(CoalgebraMap::Alpha, space, w)
        })
    })
}

/// `π ∘ α̂ = Id` on wedge words of weight at most `cap`.
pub fn check_section(space: &GradedSpace, cap: usize) -> bool {
    (1..=cap).all(|k| {
        canonical_words(CoalgebraKind::Wedge, space, k).iter().all(|w| {
            let mut back = LinearCombination::zero();
            for (u, c) in map_word(CoalgebraMap::Alpha, space, w) {
                add_canonical(&mut back, CoalgebraKind::Wedge, space, &u, c * Scalar::inverse_factorial(k));
            }
            back == LinearCombination::basis(w.clone())
        })
    })
}
