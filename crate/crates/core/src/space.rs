//! Finite-dimensional graded vector spaces and tensor words.

use std::borrow::Borrow;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub label: String,
    pub degree: i64,
}

/// A graded space with a fixed ordered basis of homogeneous elements.
#[derive(Clone)]
pub struct GradedSpace {
    basis: Vec<BasisElement>,
    index: HashMap<String, usize>,
}

impl GradedSpace {
    pub fn new<S: Into<String>>(basis: impl IntoIterator<Item = (S, i64)>) -> Result<Self> {
        let basis: Vec<BasisElement> = basis
            .into_iter()
            .map(|(label, degree)| BasisElement { label: label.into(), degree })
            .collect();
        let mut index = HashMap::with_capacity(basis.len());
        for (i, b) in basis.iter().enumerate() {
            if index.insert(b.label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(b.label.clone()));
            }
        }
        Ok(GradedSpace { basis, index })
    }

    /// Basis `e0, e1, …` with the given degrees.
    pub fn with_degrees(degrees: &[i64]) -> Self {
        GradedSpace::new(degrees.iter().enumerate().map(|(i, &d)| (format!("e{i}"), d)))
            .expect("generated labels are distinct")
    }

    /// A space concentrated in degree zero.
    pub fn ungraded<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        GradedSpace::new(labels.into_iter().map(|l| (l, 0)))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(Error::Index { index: i, dim: self.dim() })
        }
    }

    pub fn is_concentrated_in_degree_zero(&self) -> bool {
        self.basis.iter().all(|b| b.degree == 0)
    }

    pub fn require_degree_zero(&self) -> Result<()> {
        if self.is_concentrated_in_degree_zero() {
            Ok(())
        } else {
            Err(Error::Grading)
        }
    }

    /// Basis indices whose degree equals `d`.
    pub fn indices_in_degree(&self, d: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == d).collect()
    }

    /// Sum of the degrees of the letters.
    pub fn word_degree(&self, word: &[usize]) -> Result<i64> {
        word.iter().try_fold(0i64, |acc, &i| {
            self.check_index(i)?;
            Ok(acc + self.degree(i))
        })
    }

    pub(crate) fn degree_unchecked(&self, word: &[usize]) -> i64 {
        word.iter().map(|&i| self.basis[i].degree).sum()
    }

    /// The same labels with every degree shifted by `by`.
    pub fn shifted(&self, by: i64) -> GradedSpace {
        GradedSpace {
            basis: self
                .basis
                .iter()
                .map(|b| BasisElement { label: b.label.clone(), degree: b.degree + by })
                .collect(),
            index: self.index.clone(),
        }
    }

    /// All `dim^k` words of length `k`, in lexicographic order.
    pub fn words(&self, k: usize) -> Words {
        Words::new(self.dim(), k)
    }

    /// Number of words of length `k`, saturating.
    pub fn word_count(&self, k: usize) -> usize {
        self.dim().saturating_pow(k as u32)
    }

    /// The `r`-th word of length `k` in lexicographic order.
    pub fn word_at(&self, k: usize, mut r: usize) -> TensorWord {
        let dim = self.dim();
        let mut w = vec![0; k];
        for slot in w.iter_mut().rev() {
            *slot = r % dim;
            r /= dim;
        }
        TensorWord(w)
    }

    pub fn render_word(&self, word: &[usize]) -> String {
        let parts: Vec<&str> = word.iter().map(|&i| self.label(i)).collect();
        format!("({})", parts.join(", "))
    }
}

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for GradedSpace {}

impl fmt::Debug for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.basis.iter().map(|b| (&b.label, b.degree))).finish()
    }
}

/// Lexicographic enumeration of all words of a fixed length.
pub struct Words {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl Words {
    fn new(dim: usize, k: usize) -> Self {
        let current = if dim == 0 && k > 0 { None } else { Some(vec![0; k]) };
        Words { dim, current }
    }
}

impl Iterator for Words {
    type Item = TensorWord;

    fn next(&mut self) -> Option<TensorWord> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.dim {
                break;
            }
            cur[pos] = 0;
        }
        Some(TensorWord(out))
    }
}

/// An ordered list of basis indices `x₁⊗⋯⊗x_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TensorWord(pub Vec<usize>);

impl TensorWord {
    pub fn new(letters: Vec<usize>) -> Self {
        TensorWord(letters)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for TensorWord {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl Borrow<[usize]> for TensorWord {
    fn borrow(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for TensorWord {
    fn from(v: Vec<usize>) -> Self {
        TensorWord(v)
    }
}

impl From<&[usize]> for TensorWord {
    fn from(v: &[usize]) -> Self {
        TensorWord(v.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for TensorWord {
    fn from(v: [usize; N]) -> Self {
        TensorWord(v.to_vec())
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
