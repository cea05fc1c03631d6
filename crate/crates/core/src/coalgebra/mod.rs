//! Weight-truncated cofree coalgebras `T*V`, `∧*V` and `P*V`, with
//! `PᵏV = ∧^{k−1}V ⊗ V`, the maps relating them, and coderivations.
//!
//! Words are stored as letter lists in canonical form. A wedge word is
//! sorted; a Perm word is a sorted head followed by its tail letter. All
//! coalgebras are non-counital and start in weight 1.

mod coderivation;
mod element;
mod maps;

use std::fmt;
use std::str::FromStr;

use crate::combination::LinearCombination;
use crate::perm::{koszul_sign_unchecked, unshuffles_lenient, Permutation};
use crate::scalar::{Scalar, Sign};
use crate::space::GradedSpace;

pub use coderivation::{extend_coderivation, extend_coderivation_unchecked, Coderivation};
pub use element::CofreeElement;
pub use maps::{
    check_coassociativity, check_factorization, check_map_law, check_section, coalgebra_map, map_word,
    project_pi, CoalgebraMap,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoalgebraKind {
    Tensor,
    Wedge,
    Perm,
}

impl CoalgebraKind {
    pub const ALL: [CoalgebraKind; 3] = [CoalgebraKind::Tensor, CoalgebraKind::Wedge, CoalgebraKind::Perm];

    pub fn name(self) -> &'static str {
        match self {
            CoalgebraKind::Tensor => "tensor",
            CoalgebraKind::Wedge => "wedge",
            CoalgebraKind::Perm => "perm",
        }
    }
}

impl fmt::Display for CoalgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoalgebraKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tensor" => Ok(CoalgebraKind::Tensor),
            "wedge" => Ok(CoalgebraKind::Wedge),
            "perm" => Ok(CoalgebraKind::Perm),
            other => Err(format!("unknown coalgebra `{other}` (expected tensor, wedge or perm)")),
        }
    }
}

/// Letters of a canonical word.
pub type Word = Vec<usize>;

/// Sorts a wedge of letters. Returns `None` when a repeated odd letter
/// makes the word vanish, else the sorted letters and the Koszul sign of
/// the sorting permutation.
fn sort_wedge(space: &GradedSpace, letters: &[usize]) -> Option<(Word, Sign)> {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by_key(|&i| letters[i]);
    let degrees: Vec<i64> = letters.iter().map(|&x| space.degree(x)).collect();
    let sign = koszul_sign_unchecked(&Permutation::from_images(order.clone()), &degrees);
    let sorted: Word = order.iter().map(|&i| letters[i]).collect();
    if sorted.windows(2).any(|p| p[0] == p[1] && space.degree(p[0]) & 1 == 1) {
        return None;
    }
    Some((sorted, sign))
}

/// The canonical form of `x₁⊗⋯⊗x_k` read in the given coalgebra: the word
/// equals `sign · canonical`, or zero when `None`.
pub fn canonicalize(kind: CoalgebraKind, space: &GradedSpace, letters: &[usize]) -> Option<(Word, Sign)> {
    match kind {
        CoalgebraKind::Tensor => Some((letters.to_vec(), Sign::Plus)),
        CoalgebraKind::Wedge => sort_wedge(space, letters),
        CoalgebraKind::Perm => {
            let (&tail, head) = letters.split_last()?;
            let (mut word, sign) = sort_wedge(space, head)?;
            word.push(tail);
            Some((word, sign))
        }
    }
}

/// A canonical word `x₁∧⋯∧x_k` with nondecreasing letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeWord {
    letters: Word,
}

impl WedgeWord {
    /// The canonical form of `x₁∧⋯∧x_k` and its normalization sign, or
    /// `None` for the zero word.
    pub fn canonicalize(space: &GradedSpace, letters: &[usize]) -> Option<(WedgeWord, Sign)> {
        sort_wedge(space, letters).map(|(letters, s)| (WedgeWord { letters }, s))
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn weight(&self) -> usize {
        self.letters.len()
    }
}

/// A canonical word `(x₁∧⋯∧x_{k−1}) ⊗ x_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermWord {
    head: WedgeWord,
    tail: usize,
}

impl PermWord {
    pub fn canonicalize(space: &GradedSpace, letters: &[usize]) -> Option<(PermWord, Sign)> {
        let (&tail, head) = letters.split_last()?;
        WedgeWord::canonicalize(space, head).map(|(head, s)| (PermWord { head, tail }, s))
    }

    pub fn head(&self) -> &WedgeWord {
        &self.head
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn weight(&self) -> usize {
        self.head.weight() + 1
    }

    pub fn letters(&self) -> Word {
        let mut w = self.head.letters.clone();
        w.push(self.tail);
        w
    }
}

/// Every nonzero canonical word of weight `k`, sorted.
pub fn canonical_words(kind: CoalgebraKind, space: &GradedSpace, k: usize) -> Vec<Word> {
    let mut out: Vec<Word> = space
        .words(k)
        .filter_map(|w| canonicalize(kind, space, &w).map(|(c, _)| c))
        .collect();
    out.sort();
    out.dedup();
    out
}

pub(crate) fn add_canonical(
    out: &mut LinearCombination<Word>,
    kind: CoalgebraKind,
    space: &GradedSpace,
    letters: &[usize],
    coeff: Scalar,
) {
    if let Some((w, s)) = canonicalize(kind, space, letters) {
        out.add_term(w, coeff.signed(s));
    }
}

/// `Δ(word) = Σ_{i=1}^{n−1} …` for a canonical word of weight `n`.
///
/// Tensor: deconcatenation. Wedge: `Σ_{Sh(i,n−i)} ε(σ) x_{σ(1..i)} ⊗ x_{σ(i+1..n)}`.
/// Perm: `Σ_{Sh(i−1,1,n−i−1)} ε(σ) (x_{σ(1..i−1)} ⊗ x_{σ(i)}) ⊗ (x_{σ(i+1..n−1)} ⊗ xₙ)`,
/// the shuffle acting on the head only.
pub fn comultiply(kind: CoalgebraKind, space: &GradedSpace, word: &[usize]) -> LinearCombination<(Word, Word)> {
    let n = word.len();
    let mut out = LinearCombination::zero();
    for i in 1..n {
        match kind {
            CoalgebraKind::Tensor => out.add_term((word[..i].to_vec(), word[i..].to_vec()), Scalar::one()),
            CoalgebraKind::Wedge => {
                let degrees: Vec<i64> = word.iter().map(|&x| space.degree(x)).collect();
                for sigma in unshuffles_lenient(&[i, n - i]) {
                    let y: Word = sigma.images().iter().map(|&j| word[j]).collect();
                    split_into(&mut out, kind, space, &y[..i], &y[i..], koszul_sign_unchecked(&sigma, &degrees));
                }
            }
            CoalgebraKind::Perm => {
                let (&tail, head) = word.split_last().expect("n ≥ 2 here");
                let degrees: Vec<i64> = head.iter().map(|&x| space.degree(x)).collect();
                for sigma in unshuffles_lenient(&[i - 1, 1, n - i - 1]) {
                    let y: Word = sigma.images().iter().map(|&j| head[j]).collect();
                    let mut right = y[i..].to_vec();
                    right.push(tail);
                    split_into(&mut out, kind, space, &y[..i], &right, koszul_sign_unchecked(&sigma, &degrees));
                }
            }
        }
    }
    out
}

fn split_into(
    out: &mut LinearCombination<(Word, Word)>,
    kind: CoalgebraKind,
    space: &GradedSpace,
    left: &[usize],
    right: &[usize],
    sign: Sign,
) {
    let (Some((a, sa)), Some((b, sb))) = (canonicalize(kind, space, left), canonicalize(kind, space, right)) else {
        return;
    };
    out.add_term((a, b), Scalar::from(sign * sa * sb));
}

/// Which side the second comultiplication acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `(Δ⊗Id)Δ` or `(Id⊗Δ)Δ` on a canonical word. Comultiplication has
/// degree zero, so no Koszul sign appears.
pub fn comultiply_twice(
    kind: CoalgebraKind,
    space: &GradedSpace,
    word: &[usize],
    side: Side,
) -> LinearCombination<(Word, Word, Word)> {
    let mut out = LinearCombination::zero();
    for ((a, b), c) in comultiply(kind, space, word) {
        match side {
            Side::Left => {
                for ((a1, a2), c2) in comultiply(kind, space, &a) {
                    out.add_term((a1, a2, b.clone()), &c * &c2);
                }
            }
            Side::Right => {
                for ((b1, b2), c2) in comultiply(kind, space, &b) {
                    out.add_term((a.clone(), b1, b2), &c * &c2);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mixed() -> GradedSpace {
        GradedSpace::new([("x", 0), ("y", 1)]).unwrap()
    }

    #[test]
    fn weight_one_has_zero_coproduct() {
        let v = mixed();
        for kind in CoalgebraKind::ALL {
            assert!(comultiply(kind, &v, &[1]).is_zero());
        }
    }

    #[test]
    fn tensor_coproduct_of_two_letters() {
        let v = mixed();
        let d = comultiply(CoalgebraKind::Tensor, &v, &[0, 1]);
        assert_eq!(d, LinearCombination::basis((vec![0], vec![1])));
    }

    #[test]
    fn wedge_coproduct_of_even_letters() {
        let v = GradedSpace::new([("x", 0), ("y", 0)]).unwrap();
        let d = comultiply(CoalgebraKind::Wedge, &v, &[0, 1]);
        let expected: LinearCombination<(Word, Word)> =
            [((vec![0], vec![1]), Scalar::one()), ((vec![1], vec![0]), Scalar::one())].into_iter().collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn odd_squares_vanish_and_even_squares_survive() {
        let v = mixed();
        assert!(canonicalize(CoalgebraKind::Wedge, &v, &[1, 1]).is_none());
        assert_eq!(canonicalize(CoalgebraKind::Wedge, &v, &[0, 0]), Some((vec![0, 0], Sign::Plus)));
        // The Perm tail is not part of the wedge.
        assert_eq!(canonicalize(CoalgebraKind::Perm, &v, &[1, 1]), Some((vec![1, 1], Sign::Plus)));
    }

    #[test]
    fn canonicalization_sign_is_the_koszul_sign() {
        let v = GradedSpace::new([("x", 1), ("y", 1), ("z", 2)]).unwrap();
        let (w, s) = WedgeWord::canonicalize(&v, &[1, 0]).unwrap();
        assert_eq!((w.letters(), s), (&[0, 1][..], Sign::Minus));
        let (w, s) = WedgeWord::canonicalize(&v, &[2, 1, 0]).unwrap();
        assert_eq!((w.letters(), s), (&[0, 1, 2][..], Sign::Minus));
        let (p, s) = PermWord::canonicalize(&v, &[1, 0, 2]).unwrap();
        assert_eq!((p.head().letters(), p.tail(), s, p.weight()), (&[0, 1][..], 2, Sign::Minus, 3));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let v = GradedSpace::with_degrees(&[0, 1, 2]);
        for kind in CoalgebraKind::ALL {
            for k in 1..=4 {
                for w in v.words(k) {
                    if let Some((c, _)) = canonicalize(kind, &v, &w) {
                        assert_eq!(canonicalize(kind, &v, &c), Some((c.clone(), Sign::Plus)));
                    }
                }
            }
        }
    }

    #[test]
    fn coassociativity_small() {
        let v = mixed();
        for kind in CoalgebraKind::ALL {
            for k in 1..=4 {
                for w in canonical_words(kind, &v, k) {
                    assert_eq!(
                        comultiply_twice(kind, &v, &w, Side::Left),
                        comultiply_twice(kind, &v, &w, Side::Right),
                        "{kind} {w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn perm_right_factor_keeps_tail() {
        let v = GradedSpace::with_degrees(&[0, 0, 0]);
        for ((_, right), _) in comultiply(CoalgebraKind::Perm, &v, &[0, 1, 2]) {
            assert_eq!(*right.last().unwrap(), 2);
        }
    }
}
