//! Homogeneous multilinear operations and arity-indexed families of them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::combination::{LinearCombination, Vector};
use crate::error::{Error, Result};
use crate::perm::{Action, Permutation};
use crate::scalar::{Scalar, Sign};
use crate::space::{GradedSpace, TensorWord};

/// A multilinear map `⊗ᵏV → V` of a declared degree, stored as sparse
/// structure constants. Words absent from the table evaluate to zero.
#[derive(Clone)]
pub struct Operation {
    space: Arc<GradedSpace>,
    arity: usize,
    degree: i64,
    entries: BTreeMap<TensorWord, Vector>,
}

impl Operation {
    pub fn zero(space: Arc<GradedSpace>, arity: usize, degree: i64) -> Self {
        Operation { space, arity, degree, entries: BTreeMap::new() }
    }

    /// The identity `V → V`.
    pub fn identity(space: Arc<GradedSpace>) -> Self {
        let entries = (0..space.dim()).map(|i| (TensorWord(vec![i]), Vector::basis(i))).collect();
        Operation { space, arity: 1, degree: 0, entries }
    }

    /// Builds an operation from explicit structure constants. Entries are
    /// summed when a word repeats.
    pub fn from_entries(
        space: Arc<GradedSpace>,
        arity: usize,
        degree: i64,
        entries: impl IntoIterator<Item = (TensorWord, Vector)>,
    ) -> Result<Self> {
        let mut op = Operation::zero(space, arity, degree);
        for (word, value) in entries {
            if word.len() != arity {
                return Err(Error::Arity { expected: arity, found: word.len() });
            }
            for &i in word.iter().chain(value.keys()) {
                op.space.check_index(i)?;
            }
            op.add_to_entry(word, &value, &Scalar::one());
        }
        Ok(op)
    }

    /// Tabulates `f` on every basis word, in parallel.
    pub fn from_fn<F>(space: Arc<GradedSpace>, arity: usize, degree: i64, f: F) -> Self
    where
        F: Fn(&[usize]) -> Vector + Sync,
    {
        let count = space.word_count(arity);
        let entries: Vec<(TensorWord, Vector)> = (0..count)
            .into_par_iter()
            .filter_map(|r| {
                let w = space.word_at(arity, r);
                let v = f(&w);
                (!v.is_zero()).then_some((w, v))
            })
            .collect();
        Operation { space, arity, degree, entries: entries.into_iter().collect() }
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn entries(&self) -> &BTreeMap<TensorWord, Vector> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The value on a basis word; zero when absent.
    pub fn evaluate(&self, word: &[usize]) -> Result<Vector> {
        if word.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: word.len() });
        }
        for &i in word {
            self.space.check_index(i)?;
        }
        Ok(self.get(word).cloned().unwrap_or_default())
    }

    /// Extends [`evaluate`](Self::evaluate) linearly to a combination of words.
    pub fn evaluate_combination(&self, words: &LinearCombination<TensorWord>) -> Result<Vector> {
        let mut out = Vector::zero();
        for (w, c) in words {
            out.add_scaled(&self.evaluate(w)?, c);
        }
        Ok(out)
    }

    pub(crate) fn get(&self, word: &[usize]) -> Option<&Vector> {
        self.entries.get(word)
    }

    pub(crate) fn add_to_entry(&mut self, word: TensorWord, value: &Vector, coeff: &Scalar) {
        match self.entries.entry(word) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                let v = value.scaled(coeff);
                if !v.is_zero() {
                    slot.insert(v);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                slot.get_mut().add_scaled(value, coeff);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// The first stored entry whose output is not of degree
    /// `|input| + degree`, if any.
    pub fn inhomogeneous_entry(&self) -> Option<(&TensorWord, usize)> {
        self.entries.iter().find_map(|(w, v)| {
            let target = self.space.degree_unchecked(w) + self.degree;
            v.keys().find(|&&z| self.space.degree(z) != target).map(|&z| (w, z))
        })
    }

    pub fn check_homogeneous(&self) -> bool {
        self.inhomogeneous_entry().is_none()
    }

    fn require_same_space(&self, other: &Operation) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// `outer ∘ (I_m ⊗ inner ⊗ I_{i−m−1})`, with the Koszul sign
    /// `(−1)^{|inner|(|x₁|+⋯+|x_m|)}` from passing `inner` over the first `m`
    /// letters.
    pub fn compose_insert(&self, inner: &Operation, position: usize) -> Result<Operation> {
        self.require_same_space(inner)?;
        if position >= self.arity {
            return Err(Error::Position { position, arity: self.arity });
        }
        let arity = self.arity + inner.arity - 1;
        let mut out = Operation::zero(self.space.clone(), arity, self.degree + inner.degree);
        let inner_odd = inner.degree & 1 == 1;
        for (u, outer_value) in &self.entries {
            let y = u[position];
            let prefix_sign = if inner_odd { Sign::power(self.space.degree_unchecked(&u[..position])) } else { Sign::Plus };
            for (v, inner_value) in &inner.entries {
                let c = inner_value.coefficient(&y);
                if c.is_zero() {
                    continue;
                }
                let mut word = Vec::with_capacity(arity);
                word.extend_from_slice(&u[..position]);
                word.extend_from_slice(v);
                word.extend_from_slice(&u[position + 1..]);
                out.add_to_entry(TensorWord(word), outer_value, &c.signed(prefix_sign));
            }
        }
        Ok(out)
    }

    /// `Σ_σ self ∘ ρ_σ` over the given permutations of the input slots.
    pub fn precompose_sum(&self, perms: &[Permutation], action: Action) -> Operation {
        let mut out = Operation::zero(self.space.clone(), self.arity, self.degree);
        let mut acc: BTreeMap<TensorWord, Vector> = BTreeMap::new();
        for (u, value) in &self.entries {
            for sigma in perms {
                debug_assert_eq!(sigma.len(), self.arity);
                // ρ_σ(w) hits u exactly when w = u ∘ σ⁻¹.
                let mut w = vec![0; self.arity];
                for (i, &j) in sigma.images().iter().enumerate() {
                    w[j] = u[i];
                }
                let degrees: Vec<i64> = w.iter().map(|&x| self.space.degree(x)).collect();
                let sign = action.coefficient(sigma, &degrees);
                acc.entry(TensorWord(w)).or_default().add_scaled(value, &Scalar::from(sign));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        out.entries = acc;
        out
    }

    /// `self ∘ ρ_σ` for one permutation.
    pub fn precompose(&self, sigma: &Permutation, action: Action) -> Operation {
        self.precompose_sum(std::slice::from_ref(sigma), action)
    }

    pub fn scaled(&self, c: &Scalar) -> Operation {
        let mut out = Operation::zero(self.space.clone(), self.arity, self.degree);
        if !c.is_zero() {
            out.entries = self.entries.iter().map(|(w, v)| (w.clone(), v.scaled(c))).collect();
        }
        out
    }

    pub fn negated(&self) -> Operation {
        self.scaled(&Scalar::from(-1))
    }

    /// `self + c · other`. Both must have the same space, arity and degree.
    pub fn add_scaled(&mut self, other: &Operation, c: &Scalar) -> Result<()> {
        self.require_same_space(other)?;
        if other.arity != self.arity {
            return Err(Error::Arity { expected: self.arity, found: other.arity });
        }
        if c.is_zero() {
            return Ok(());
        }
        for (w, v) in &other.entries {
            let slot = self.entries.entry(w.clone()).or_default();
            slot.add_scaled(v, c);
        }
        self.entries.retain(|_, v| !v.is_zero());
        Ok(())
    }

    pub fn sum(&self, other: &Operation) -> Result<Operation> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one())?;
        Ok(out)
    }

    pub fn difference(&self, other: &Operation) -> Result<Operation> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from(-1))?;
        Ok(out)
    }

    /// Rebuilds the table on another space of the same dimension, rewriting
    /// every value. Used by suspension.
    pub(crate) fn transport<F>(&self, space: Arc<GradedSpace>, degree: i64, mut f: F) -> Operation
    where
        F: FnMut(&[usize], &Vector) -> Vector,
    {
        let entries = self
            .entries
            .iter()
            .filter_map(|(w, v)| {
                let nv = f(w, v);
                (!nv.is_zero()).then(|| (w.clone(), nv))
            })
            .collect();
        Operation { space, arity: self.arity, degree, entries }
    }

    /// A copy with one structure constant replaced.
    pub fn with_entry(&self, word: TensorWord, value: Vector) -> Result<Operation> {
        if word.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: word.len() });
        }
        let mut out = self.clone();
        if value.is_zero() {
            out.entries.remove(&word);
        } else {
            out.entries.insert(word, value);
        }
        Ok(out)
    }

    /// The first basis word (in table order) on which two operations differ.
    pub fn first_difference(&self, other: &Operation) -> Option<TensorWord> {
        let keys = self.entries.keys().chain(other.entries.keys());
        let mut diffs: Vec<&TensorWord> = keys.filter(|w| self.get(w) != other.get(w)).collect();
        diffs.sort();
        diffs.first().map(|w| (*w).clone())
    }
}

impl PartialEq for Operation {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && self.degree == other.degree
            && self.entries == other.entries
            && (Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space)
    }
}

impl fmt::Debug for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operation(arity {}, degree {}) {{", self.arity, self.degree)?;
        for (w, v) in &self.entries {
            write!(f, " {w:?} ↦ {v:?};")?;
        }
        f.write_str(" }")
    }
}

/// The two degree conventions for homotopy algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// Every operation has degree −1.
    Hat,
    /// The arity-`n` operation has degree `n − 2`.
    Unhat,
}

impl Convention {
    pub fn degree(self, arity: usize) -> i64 {
        match self {
            Convention::Hat => -1,
            Convention::Unhat => arity as i64 - 2,
        }
    }

    pub fn action(self) -> Action {
        match self {
            Convention::Hat => Action::Rho1,
            Convention::Unhat => Action::Rho2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::Hat => "hat",
            Convention::Unhat => "unhat",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hat" => Ok(Convention::Hat),
            "unhat" => Ok(Convention::Unhat),
            other => Err(format!("unknown convention `{other}` (expected hat or unhat)")),
        }
    }
}

/// Operations `μ₁, …, μ_N` on one space in one convention. Missing arities
/// are zero, and arities above the cap are treated as zero everywhere.
#[derive(Clone, PartialEq)]
pub struct OperationFamily {
    space: Arc<GradedSpace>,
    convention: Convention,
    arity_cap: usize,
    ops: BTreeMap<usize, Operation>,
}

impl OperationFamily {
    pub fn new(space: Arc<GradedSpace>, convention: Convention, arity_cap: usize) -> Self {
        OperationFamily { space, convention, arity_cap, ops: BTreeMap::new() }
    }

    /// Builds a family and validates every member.
    pub fn with_ops(
        space: Arc<GradedSpace>,
        convention: Convention,
        arity_cap: usize,
        ops: impl IntoIterator<Item = Operation>,
    ) -> Result<Self> {
        let mut fam = OperationFamily::new(space, convention, arity_cap);
        for op in ops {
            fam.insert(op)?;
        }
        Ok(fam)
    }

    /// Adds or replaces the operation of its arity.
    pub fn insert(&mut self, op: Operation) -> Result<()> {
        if !(Arc::ptr_eq(&self.space, &op.space) || *self.space == *op.space) {
            return Err(Error::SpaceMismatch);
        }
        let n = op.arity();
        if n == 0 {
            return Err(Error::Arity { expected: 1, found: 0 });
        }
        if n > self.arity_cap {
            return Err(Error::ArityCap { arity: n, cap: self.arity_cap });
        }
        let expected = self.convention.degree(n);
        if op.degree() != expected {
            return Err(Error::Degree { arity: n, expected, found: op.degree() });
        }
        let op = Operation { space: self.space.clone(), ..op };
        if op.is_zero() {
            self.ops.remove(&n);
        } else {
            self.ops.insert(n, op);
        }
        Ok(())
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn arity_cap(&self) -> usize {
        self.arity_cap
    }

    /// The nonzero member of arity `n`, if any.
    pub fn get(&self, n: usize) -> Option<&Operation> {
        if n > self.arity_cap {
            None
        } else {
            self.ops.get(&n)
        }
    }

    /// The member of arity `n`, or the zero operation.
    pub fn get_or_zero(&self, n: usize) -> Operation {
        self.get(n)
            .cloned()
            .unwrap_or_else(|| Operation::zero(self.space.clone(), n, self.convention.degree(n)))
    }

    pub fn ops(&self) -> impl Iterator<Item = &Operation> {
        self.ops.values()
    }

    pub fn is_zero(&self) -> bool {
        self.ops.is_empty()
    }

    /// Applies `f` to every member, keeping space, convention and cap.
    pub fn map_ops(&self, mut f: impl FnMut(&Operation) -> Result<Operation>) -> Result<OperationFamily> {
        let mut out = OperationFamily::new(self.space.clone(), self.convention, self.arity_cap);
        for op in self.ops.values() {
            out.insert(f(op)?)?;
        }
        Ok(out)
    }

    pub fn require_convention(&self, expected: Convention) -> Result<()> {
        if self.convention == expected {
            Ok(())
        } else {
            Err(Error::Convention { expected, found: self.convention })
        }
    }
}

impl fmt::Debug for OperationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperationFamily")
            .field("convention", &self.convention)
            .field("arity_cap", &self.arity_cap)
            .field("ops", &self.ops)
            .finish()
    }
}
