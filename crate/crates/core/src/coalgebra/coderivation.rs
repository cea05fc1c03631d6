use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::{add_canonical, canonical_words, canonicalize, comultiply, CoalgebraKind, CofreeElement, Word};
use crate::combination::{LinearCombination, Vector};
use crate::error::{Error, Result, SymmetryScope};
use crate::operation::{Convention, Operation, OperationFamily};
use crate::perm::{koszul_sign_unchecked, Action, Permutation};
use crate::scalar::{Scalar, Sign};
use crate::space::GradedSpace;
use crate::symmetrize::{partial_permutations, require_symmetry};

type Table = BTreeMap<Word, LinearCombination<Word>>;
type Entry = ((usize, usize), Word, LinearCombination<Word>);

/// A linear map on a truncated cofree coalgebra, stored as components
/// `(k, l)` sending canonical words of weight `k` to combinations of
/// canonical words of weight `l ≤ k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coderivation {
    kind: CoalgebraKind,
    space: Arc<GradedSpace>,
    weight_cap: usize,
    degree: i64,
    components: BTreeMap<(usize, usize), Table>,
}

/// `(I_i ⊗ op ⊗ I)(x)` on a tensor word, with the Koszul sign of moving
/// `op` past `x₁, …, xᵢ`.
fn insert_at(space: &GradedSpace, op: &Operation, i: usize, letters: &[usize], coeff: &Scalar, out: &mut LinearCombination<Word>) {
    let a = op.arity();
    let Some(value) = op.get(&letters[i..i + a]) else { return };
    let sign = if op.degree() & 1 == 1 { Sign::power(space.degree_unchecked(&letters[..i])) } else { Sign::Plus };
    let c = coeff.clone().signed(sign);
    for (z, v) in value {
        let mut w = Vec::with_capacity(letters.len() + 1 - a);
        w.extend_from_slice(&letters[..i]);
        w.push(*z);
        w.extend_from_slice(&letters[i + a..]);
        out.add_term(w, v * &c);
    }
}

/// The `(k, l)` component of the coderivation extending `op = μ̂_{k−l+1}`,
/// evaluated on one canonical word of weight `k`.
fn extended_component(kind: CoalgebraKind, space: &GradedSpace, op: &Operation, l: usize, word: &[usize]) -> LinearCombination<Word> {
    let k = word.len();
    let a = op.arity();
    let mut raw = LinearCombination::zero();
    match kind {
        CoalgebraKind::Tensor => {
            for i in 0..l {
                insert_at(space, op, i, word, &Scalar::one(), &mut raw);
            }
        }
        CoalgebraKind::Wedge => {
            // 1/(l!(k−l+1)!) Σ_{σ∈𝕊ₖ} ε(σ) Σ_{i<l} (Iᵢ ⊗ μ̂ ⊗ I)(x_σ)
            let c = Scalar::inverse_factorial(l) * Scalar::inverse_factorial(a);
            let degrees: Vec<i64> = word.iter().map(|&x| space.degree(x)).collect();
            for sigma in Permutation::all(k) {
                let y: Word = sigma.images().iter().map(|&j| word[j]).collect();
                let coeff = c.clone().signed(koszul_sign_unchecked(&sigma, &degrees));
                for i in 0..l {
                    insert_at(space, op, i, &y, &coeff, &mut raw);
                }
            }
        }
        CoalgebraKind::Perm => {
            // 1/((l−1)!(k−l)!) Σ_{σ∈𝕊_{k−1}} ε(σ) [Σ_{i≤l−2} (Iᵢ⊗μ̂⊗I⊗I₁) + (I_{l−1}⊗μ̂)](x_σ, x_k)
            let c = Scalar::inverse_factorial(l - 1) * Scalar::inverse_factorial(k - l);
            let degrees: Vec<i64> = word.iter().map(|&x| space.degree(x)).collect();
            for sigma in partial_permutations(k) {
                let y: Word = sigma.images().iter().map(|&j| word[j]).collect();
                let coeff = c.clone().signed(koszul_sign_unchecked(&sigma, &degrees));
                for i in 0..l {
                    insert_at(space, op, i, &y, &coeff, &mut raw);
                }
            }
        }
    }
    let mut out = LinearCombination::zero();
    for (w, c) in raw {
        add_canonical(&mut out, kind, space, &w, c);
    }
    out
}

/// Extends a hat-convention family to a coderivation of degree −1 on the
/// chosen cofree coalgebra, after checking the symmetry each kind needs
/// (full for wedge, partial for Perm).
pub fn extend_coderivation(family: &OperationFamily, kind: CoalgebraKind, weight_cap: usize) -> Result<Coderivation> {
    family.require_convention(Convention::Hat)?;
    let scope = match kind {
        CoalgebraKind::Tensor => None,
        CoalgebraKind::Wedge => Some(SymmetryScope::Full),
        CoalgebraKind::Perm => Some(SymmetryScope::Partial),
    };
    if let Some(scope) = scope {
        for op in family.ops() {
            require_symmetry(op, Action::Rho1, scope)?;
        }
    }
    extend_coderivation_unchecked(family, kind, weight_cap)
}

pub fn extend_coderivation_unchecked(family: &OperationFamily, kind: CoalgebraKind, weight_cap: usize) -> Result<Coderivation> {
    family.require_convention(Convention::Hat)?;
    let space = family.space().clone();
    let jobs: Vec<(usize, Word)> = (1..=weight_cap)
        .flat_map(|k| canonical_words(kind, &space, k).into_iter().map(move |w| (k, w)))
        .collect();
    let rows: Vec<Vec<Entry>> = jobs
        .par_iter()
        .map(|(k, w)| {
            (1..=*k)
                .filter_map(|l| {
                    let op = family.get(k - l + 1)?;
                    let value = extended_component(kind, &space, op, l, w);
                    (!value.is_zero()).then(|| ((*k, l), w.clone(), value))
                })
                .collect()
        })
        .collect();
    let mut components: BTreeMap<(usize, usize), Table> = BTreeMap::new();
    for (key, w, value) in rows.into_iter().flatten() {
        components.entry(key).or_default().insert(w, value);
    }
    Ok(Coderivation { kind, space, weight_cap, degree: -1, components })
}

impl Coderivation {
    pub fn zero(kind: CoalgebraKind, space: Arc<GradedSpace>, weight_cap: usize, degree: i64) -> Self {
        Coderivation { kind, space, weight_cap, degree, components: BTreeMap::new() }
    }

    pub fn kind(&self) -> CoalgebraKind {
        self.kind
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn weight_cap(&self) -> usize {
        self.weight_cap
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(|t| t.is_empty())
    }

    /// The `(k, l)` component as a table from canonical words of weight `k`.
    pub fn component(&self, k: usize, l: usize) -> Option<&BTreeMap<Word, LinearCombination<Word>>> {
        self.components.get(&(k, l))
    }

    /// The `(k, l)` component on one canonical word.
    pub fn component_value(&self, k: usize, l: usize, word: &[usize]) -> LinearCombination<Word> {
        self.components.get(&(k, l)).and_then(|t| t.get(word)).cloned().unwrap_or_default()
    }

    /// `D(word)` for a canonical word, all components summed.
    pub fn apply_word(&self, word: &[usize]) -> LinearCombination<Word> {
        let k = word.len();
        let mut out = LinearCombination::zero();
        for l in 1..=k {
            if let Some(v) = self.components.get(&(k, l)).and_then(|t| t.get(word)) {
                out.add_assign(v);
            }
        }
        out
    }

    pub fn apply(&self, element: &CofreeElement) -> Result<CofreeElement> {
        if element.kind() != self.kind {
            return Err(Error::Kind { expected: self.kind.to_string(), found: element.kind().to_string() });
        }
        let image = element.terms().map_linear(|w| self.apply_word(w));
        Ok(CofreeElement::from_terms(self.kind, self.space.clone(), element.weight_cap(), image))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Coderivation) -> Result<Coderivation> {
        if self.kind != other.kind {
            return Err(Error::Kind { expected: self.kind.to_string(), found: other.kind.to_string() });
        }
        let cap = self.weight_cap.min(other.weight_cap);
        let jobs: Vec<Word> = (1..=cap).flat_map(|k| canonical_words(self.kind, &self.space, k)).collect();
        let rows: Vec<(Word, LinearCombination<Word>)> = jobs
            .into_par_iter()
            .map(|w| {
                let v = other.apply_word(&w).map_linear(|u| self.apply_word(u));
                (w, v)
            })
            .collect();
        let mut components: BTreeMap<(usize, usize), Table> = BTreeMap::new();
        for (w, v) in rows {
            for (u, c) in v {
                components.entry((w.len(), u.len())).or_default().entry(w.clone()).or_default().add_term(u, c);
            }
        }
        for t in components.values_mut() {
            t.retain(|_, v| !v.is_zero());
        }
        components.retain(|_, t| !t.is_empty());
        Ok(Coderivation {
            kind: self.kind,
            space: self.space.clone(),
            weight_cap: cap,
            degree: self.degree + other.degree,
            components,
        })
    }

    pub fn square(&self) -> Coderivation {
        self.compose(self).expect("same kind")
    }

    /// The first canonical word of weight at most `cap` on which
    /// `Δ D = (D ⊗ Id + Id ⊗ D) Δ` fails, where
    /// `(Id ⊗ D)(a ⊗ b) = (−1)^{|D||a|} a ⊗ D b`.
    pub fn coderivation_defect(&self, cap: usize) -> Option<Word> {
        let cap = cap.min(self.weight_cap);
        (1..=cap).flat_map(|k| canonical_words(self.kind, &self.space, k)).find(|w| {
            let mut lhs = LinearCombination::zero();
            for (u, c) in self.apply_word(w) {
                lhs.add_scaled(&comultiply(self.kind, &self.space, &u), &c);
            }
            let mut rhs = LinearCombination::zero();
            for ((a, b), c) in comultiply(self.kind, &self.space, w) {
                for (da, ca) in self.apply_word(&a) {
                    rhs.add_term((da, b.clone()), &c * &ca);
                }
                let sign = Sign::power(self.degree * self.space.degree_unchecked(&a));
                let cs = c.clone().signed(sign);
                for (db, cb) in self.apply_word(&b) {
                    rhs.add_term((a.clone(), db), &cs * &cb);
                }
            }
            lhs != rhs
        })
    }

    pub fn check_coderivation(&self, cap: usize) -> bool {
        self.coderivation_defect(cap).is_none()
    }

    /// The weight `n → 1` part of `f` read as an arity-`n` operation on
    /// `⊗ⁿV`: a tensor word is first mapped to its canonical form.
    fn corestriction(&self, n: usize, degree: i64, f: impl Fn(&[usize]) -> LinearCombination<Word> + Sync) -> Operation {
        Operation::from_fn(self.space.clone(), n, degree, |w| {
            let Some((c, s)) = canonicalize(self.kind, &self.space, w) else { return Vector::zero() };
            let mut out = Vector::zero();
            for (u, coeff) in f(&c) {
                if u.len() == 1 {
                    out.add_term(u[0], coeff.signed(s));
                }
            }
            out
        })
    }

    /// The `(n, 1)` component as an operation on cogenerators.
    pub fn cogenerator_component(&self, n: usize) -> Operation {
        self.corestriction(n, self.degree, |w| self.component_value(n, 1, w))
    }

    /// The `(n, 1)` component of `D ∘ D` as an operation on cogenerators.
    pub fn square_cogenerator_component(&self, n: usize) -> Operation {
        self.corestriction(n, 2 * self.degree, |w| {
            let mut out = LinearCombination::zero();
            for (u, c) in self.apply_word(w) {
                out.add_scaled(&self.component_value(u.len(), 1, &u), &c);
            }
            out
        })
    }

    /// The `(k, l)` component of `D ∘ D` on one canonical word.
    pub fn square_component(&self, k: usize, l: usize, word: &[usize]) -> LinearCombination<Word> {
        debug_assert_eq!(word.len(), k);
        let mut out = LinearCombination::zero();
        for (u, c) in self.apply_word(word) {
            out.add_scaled(&self.component_value(u.len(), l, &u), &c);
        }
        out
    }

    /// A copy with `coeff · target` added to the `(k, l)` component on `word`.
    pub fn perturbed(&self, word: &[usize], target: &[usize], coeff: Scalar) -> Coderivation {
        let mut out = self.clone();
        let key = (word.len(), target.len());
        let slot = out.components.entry(key).or_default().entry(word.to_vec()).or_default();
        slot.add_term(target.to_vec(), coeff);
        out
    }
}
