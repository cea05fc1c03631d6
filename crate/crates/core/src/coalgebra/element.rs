use std::sync::Arc;

use super::{add_canonical, comultiply, CoalgebraKind, Word};
use crate::combination::LinearCombination;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::GradedSpace;

/// An element of a cofree coalgebra truncated at weight `W`.
///
/// Terms are kept in canonical form. Adding a word above the weight cap
/// truncates it away.
#[derive(Debug, Clone, PartialEq)]
pub struct CofreeElement {
    kind: CoalgebraKind,
    space: Arc<GradedSpace>,
    weight_cap: usize,
    terms: LinearCombination<Word>,
}

impl CofreeElement {
    pub fn zero(kind: CoalgebraKind, space: Arc<GradedSpace>, weight_cap: usize) -> Self {
        CofreeElement { kind, space, weight_cap, terms: LinearCombination::zero() }
    }

    /// The image of `x₁⊗⋯⊗x_k` in the coalgebra.
    pub fn word(kind: CoalgebraKind, space: Arc<GradedSpace>, weight_cap: usize, letters: &[usize]) -> Result<Self> {
        if letters.is_empty() || letters.len() > weight_cap {
            return Err(Error::Weight { weight: letters.len(), cap: weight_cap });
        }
        for &x in letters {
            space.check_index(x)?;
        }
        let mut out = CofreeElement::zero(kind, space, weight_cap);
        out.add_letters(letters, Scalar::one());
        Ok(out)
    }

    pub(crate) fn from_terms(
        kind: CoalgebraKind,
        space: Arc<GradedSpace>,
        weight_cap: usize,
        terms: LinearCombination<Word>,
    ) -> Self {
        let mut out = CofreeElement::zero(kind, space, weight_cap);
        for (w, c) in terms {
            out.add_letters(&w, c);
        }
        out
    }

    /// Adds `coeff · x₁⊗⋯⊗x_k`, canonicalized.
    pub fn add_letters(&mut self, letters: &[usize], coeff: Scalar) {
        if letters.is_empty() || letters.len() > self.weight_cap {
            return;
        }
        add_canonical(&mut self.terms, self.kind, &self.space, letters, coeff);
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

    pub fn terms(&self) -> &LinearCombination<Word> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coefficient(&self, word: &[usize]) -> Scalar {
        self.terms.coefficient(&word.to_vec())
    }

    /// The part of weight `k`.
    pub fn homogeneous_part(&self, k: usize) -> CofreeElement {
        let terms = self.terms.iter().filter(|(w, _)| w.len() == k).map(|(w, c)| (w.clone(), c.clone())).collect();
        CofreeElement { terms, ..self.clone() }
    }

    pub fn comultiply(&self) -> LinearCombination<(Word, Word)> {
        let mut out = LinearCombination::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&comultiply(self.kind, &self.space, w), c);
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> CofreeElement {
        CofreeElement { terms: self.terms.scaled(c), ..self.clone() }
    }

    pub fn sum(&self, other: &CofreeElement) -> Result<CofreeElement> {
        if self.kind != other.kind {
            return Err(Error::Kind { expected: self.kind.to_string(), found: other.kind.to_string() });
        }
        Ok(CofreeElement { terms: self.terms.sum(&other.terms), ..self.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_canonicalized_on_insert() {
        let v = Arc::new(GradedSpace::with_degrees(&[1, 1]));
        let e = CofreeElement::word(CoalgebraKind::Wedge, v.clone(), 3, &[1, 0]).unwrap();
        assert_eq!(e.coefficient(&[0, 1]), Scalar::from(-1));
        let z = CofreeElement::word(CoalgebraKind::Wedge, v.clone(), 3, &[1, 1]).unwrap();
        assert!(z.is_zero());
        assert!(matches!(CofreeElement::word(CoalgebraKind::Tensor, v.clone(), 2, &[0, 0, 0]), Err(Error::Weight { .. })));
        assert!(CofreeElement::word(CoalgebraKind::Tensor, v, 2, &[]).is_err());
    }

    #[test]
    fn truncation_drops_heavy_words() {
        let v = Arc::new(GradedSpace::with_degrees(&[0]));
        let mut e = CofreeElement::zero(CoalgebraKind::Tensor, v, 2);
        e.add_letters(&[0, 0, 0], Scalar::one());
        assert!(e.is_zero());
    }
}
