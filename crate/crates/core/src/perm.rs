//! Permutations, unshuffles, Koszul signs and the two right actions of `𝕊ₙ`
//! on tensor words.
//!
//! A permutation is written in one-line notation `σ = [σ(1), …, σ(n)]`.
//! The action on words is
//!
//! ```text
//! ρ⁽¹⁾_σ(x₁⊗⋯⊗xₙ) = ε(σ; x) x_{σ(1)}⊗⋯⊗x_{σ(n)}
//! ρ⁽²⁾_σ(x₁⊗⋯⊗xₙ) = sgn(σ) ε(σ; x) x_{σ(1)}⊗⋯⊗x_{σ(n)}
//! ```
//!
//! where `x₁∧⋯∧xₙ = ε(σ; x) x_{σ(1)}∧⋯∧x_{σ(n)}`. Both are right actions:
//! `ρ_τ ∘ ρ_σ = ρ_{στ}` with `(στ)(i) = σ(τ(i))`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::Sign;
use crate::space::{GradedSpace, TensorWord};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From one-line notation with 1-based values.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Permutation(one_line.to_vec()));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: one_line.iter().map(|v| v - 1).collect() })
    }

    pub(crate) fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// The adjacent transposition `(i i+1)` in `𝕊ₙ`, with `1 ≤ i < n`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "adjacent transposition ({i} {}) outside 𝕊{n}", i + 1);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// 0-based images: `images()[i] = σ(i+1) - 1`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `σ ⊕ id_k`: acts as `σ` on the first slots and fixes `k` more.
    pub fn extend_fixed(&self, k: usize) -> Permutation {
        let n = self.len();
        let mut images = self.images.clone();
        images.extend(n..n + k);
        Permutation { images }
    }

    pub fn sign(&self) -> Sign {
        let mut seen = vec![false; self.len()];
        let mut parity = 0i64;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            parity += len - 1;
        }
        Sign::power(parity)
    }

    /// A decomposition into adjacent transpositions: the returned positions
    /// `i` (1-based, meaning `(i i+1)`) sort the arrangement
    /// `(σ(1), …, σ(n))` into `(1, …, n)` when applied as swaps in order.
    /// Each pass moves the largest misplaced value to its final place.
    pub fn adjacent_decomposition(&self) -> Vec<usize> {
        let mut arr = self.images.clone();
        let mut swaps = Vec::new();
        for target in (0..arr.len()).rev() {
            let mut pos = arr.iter().position(|&v| v == target).expect("bijection");
            while pos < target {
                arr.swap(pos, pos + 1);
                swaps.push(pos + 1);
                pos += 1;
            }
        }
        swaps
    }

    /// `𝕊ₙ` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images }).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// `ε(σ; x₁,…,xₙ)` for letters of the given degrees.
///
/// Computed by walking an adjacent-transposition decomposition of `σ` and
/// multiplying `(−1)^{|a||b|}` for each swap of neighbouring letters `a, b`.
pub fn koszul_sign(sigma: &Permutation, degrees: &[i64]) -> Result<Sign> {
    if degrees.len() != sigma.len() {
        return Err(Error::Length { expected: sigma.len(), found: degrees.len() });
    }
    Ok(koszul_sign_unchecked(sigma, degrees))
}

pub(crate) fn koszul_sign_unchecked(sigma: &Permutation, degrees: &[i64]) -> Sign {
    // The arrangement holds letter positions; swapping neighbours with
    // letters of degrees a, b costs (−1)^{ab}.
    let mut arr = sigma.images.clone();
    let mut odd = false;
    for target in (0..arr.len()).rev() {
        let mut pos = arr.iter().position(|&v| v == target).expect("bijection");
        while pos < target {
            if degrees[arr[pos]] & 1 == 1 && degrees[arr[pos + 1]] & 1 == 1 {
                odd = !odd;
            }
            arr.swap(pos, pos + 1);
            pos += 1;
        }
    }
    if odd {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// The permutations of `𝕊ₙ`, `n = Σ blocks`, that increase within each
/// consecutive block. Lexicographic order of one-line notation.
pub fn unshuffles(blocks: &[usize]) -> Result<Vec<Permutation>> {
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::Block(blocks.to_vec()));
    }
    Ok(unshuffles_lenient(blocks))
}

/// Like [`unshuffles`] but empty blocks are allowed and ignored.
pub(crate) fn unshuffles_lenient(blocks: &[usize]) -> Vec<Permutation> {
    let n: usize = blocks.iter().sum();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let remaining: Vec<usize> = (0..n).collect();
    fill_blocks(blocks, &remaining, &mut prefix, &mut out);
    out
}

fn fill_blocks(blocks: &[usize], remaining: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    let Some((&first, rest)) = blocks.split_first() else {
        out.push(Permutation { images: prefix.clone() });
        return;
    };
    for chosen in remaining.iter().copied().combinations(first) {
        let left: Vec<usize> = remaining.iter().copied().filter(|v| !chosen.contains(v)).collect();
        let mark = prefix.len();
        prefix.extend_from_slice(&chosen);
        fill_blocks(rest, &left, prefix, out);
        prefix.truncate(mark);
    }
}

/// Which right action of `𝕊ₙ` on `⊗ⁿV`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    /// Koszul sign only.
    Rho1,
    /// Permutation sign times Koszul sign.
    Rho2,
}

impl Action {
    /// The coefficient of `ρ_σ` on a word whose letters have these degrees.
    pub fn coefficient(self, sigma: &Permutation, degrees: &[i64]) -> Sign {
        let eps = koszul_sign_unchecked(sigma, degrees);
        match self {
            Action::Rho1 => eps,
            Action::Rho2 => eps * sigma.sign(),
        }
    }
}

/// A word with a `±1` coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedWord {
    pub sign: Sign,
    pub word: TensorWord,
}

/// `ρ_σ(word)` under the chosen action.
pub fn act(sigma: &Permutation, space: &GradedSpace, word: &[usize], action: Action) -> Result<SignedWord> {
    if word.len() != sigma.len() {
        return Err(Error::Length { expected: sigma.len(), found: word.len() });
    }
    let degrees = letter_degrees(space, word)?;
    Ok(SignedWord { sign: action.coefficient(sigma, &degrees), word: permute_word(sigma, word) })
}

/// `(x_{σ(1)}, …, x_{σ(n)})` without any sign.
pub fn permute_word(sigma: &Permutation, word: &[usize]) -> TensorWord {
    TensorWord(sigma.images.iter().map(|&j| word[j]).collect())
}

pub(crate) fn letter_degrees(space: &GradedSpace, word: &[usize]) -> Result<Vec<i64>> {
    word.iter()
        .map(|&i| {
            space.check_index(i)?;
            Ok(space.degree(i))
        })
        .collect()
}
