//! The circle product and bracket on `C(V,V) = ⊕ C^m(V,V)`, where `C^m`
//! holds the `(m+1)`-ary maps on a degree-0 space that are antisymmetric in
//! their first `m` slots.

use crate::equations::{check_nary, NaryKind};
use crate::error::{Error, Result, SymmetryScope};
use crate::operation::Operation;
use crate::perm::{permute_word, unshuffles_lenient, Action};
use crate::scalar::{Scalar, Sign};
use crate::symmetrize::require_symmetry;

fn require_cochain(f: &Operation) -> Result<()> {
    f.space().require_degree_zero()?;
    if f.degree() != 0 {
        return Err(Error::Grading);
    }
    require_symmetry(f, Action::Rho2, SymmetryScope::Partial)
}

/// `f ∘ g` for `f ∈ C^m`, `g ∈ C^n`:
///
/// ```text
/// Σ_{σ∈Sh(n,1,m−1)} sgn(σ) f(g(x_{σ(1)},…,x_{σ(n+1)}), x_{σ(n+2)},…,x_{σ(m+n)}, x_{m+n+1})
///   + (−1)^{mn} Σ_{σ∈Sh(m,n)} sgn(σ) f(x_{σ(1)},…,x_{σ(m)}, g(x_{σ(m+1)},…,x_{σ(m+n)}, x_{m+n+1}))
/// ```
///
/// The first sum is empty when `m = 0`.
pub fn circle_product(f: &Operation, g: &Operation) -> Result<Operation> {
    require_cochain(f)?;
    require_cochain(g)?;
    if f.space() != g.space() && **f.space() != **g.space() {
        return Err(Error::SpaceMismatch);
    }
    Ok(circle_product_unchecked(f, g))
}

pub(crate) fn circle_product_unchecked(f: &Operation, g: &Operation) -> Operation {
    let m = f.arity() - 1;
    let n = g.arity() - 1;
    let total = m + n + 1;
    let first = if m >= 1 { unshuffles_lenient(&[n, 1, m - 1]) } else { Vec::new() };
    let second = unshuffles_lenient(&[m, n]);
    let twist = Sign::power((m * n) as i64);
    Operation::from_fn(f.space().clone(), total, 0, |w| {
        let (head, last) = w.split_at(m + n);
        let mut out = crate::combination::Vector::zero();
        for sigma in &first {
            let y = permute_word(sigma, head);
            let Some(inner) = g.get(&y[..n + 1]) else { continue };
            let s = Scalar::from(sigma.sign());
            for (z, c) in inner {
                let mut word = Vec::with_capacity(m + 1);
                word.push(*z);
                word.extend_from_slice(&y[n + 1..]);
                word.extend_from_slice(last);
                if let Some(v) = f.get(&word) {
                    out.add_scaled(v, &(c * &s));
                }
            }
        }
        for sigma in &second {
            let y = permute_word(sigma, head);
            let mut inner_word = y[m..].to_vec();
            inner_word.extend_from_slice(last);
            let Some(inner) = g.get(&inner_word) else { continue };
            let s = Scalar::from(sigma.sign() * twist);
            for (z, c) in inner {
                let mut word = y[..m].to_vec();
                word.push(*z);
                if let Some(v) = f.get(&word) {
                    out.add_scaled(v, &(c * &s));
                }
            }
        }
        out
    })
}

/// `[f, g]∘ = f∘g − (−1)^{mn} g∘f`.
pub fn circle_bracket(f: &Operation, g: &Operation) -> Result<Operation> {
    let m = f.arity() - 1;
    let n = g.arity() - 1;
    let fg = circle_product(f, g)?;
    let gf = circle_product(g, f)?;
    let mut out = fg;
    out.add_scaled(&gf, &Scalar::from(-Sign::power((m * n) as i64)))?;
    Ok(out)
}

/// Decides whether `μ` is a pre-Lie n-algebra by two independent routes:
/// the defining identity and `μ∘μ = 0`. The routes must agree.
pub fn check_prelie_n_two_ways(mu: &Operation) -> Result<bool> {
    let by_identity = check_nary(mu, NaryKind::PreLie)?.holds;
    let by_circle = circle_product(mu, mu)?.is_zero();
    if by_identity != by_circle {
        return Err(Error::RoutesDisagree {
            n: mu.arity(),
            detail: format!("pre-Lie identity {by_identity}, circle square zero {by_circle}"),
        });
    }
    Ok(by_identity)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::combination::Vector;
    use crate::space::{GradedSpace, TensorWord};
    use crate::symmetrize::{check_partial_symmetry, precompose_symmetrized, SymmetrizationMode};

    fn plane() -> Arc<GradedSpace> {
        Arc::new(GradedSpace::ungraded(["a", "b"]).unwrap())
    }

    fn cochain(arity: usize, seed: i64) -> Operation {
        let raw = Operation::from_fn(plane(), arity, 0, |w| {
            let mut h = seed;
            for &x in w {
                h = (h * 13 + x as i64 + 5) % 9;
            }
            [(0, Scalar::from(h - 4)), (1, Scalar::from((h * 3) % 5 - 2))].into_iter().collect()
        });
        precompose_symmetrized(&raw, Action::Rho2, SymmetrizationMode::Partial)
    }

    fn matrix_span() -> Operation {
        Operation::from_entries(
            plane(),
            2,
            0,
            [(TensorWord::from([0, 0]), Vector::basis(0)), (TensorWord::from([0, 1]), Vector::basis(1))],
        )
        .unwrap()
    }

    #[test]
    fn composing_with_identity_doubles_a_binary_map() {
        let f = cochain(2, 3);
        let id = Operation::identity(plane());
        assert_eq!(circle_product(&f, &id).unwrap(), f.scaled(&Scalar::from(2)));
    }

    #[test]
    fn composing_with_identity_scales_by_arity() {
        for arity in 1..=3 {
            let f = cochain(arity, 7);
            let id = Operation::identity(plane());
            assert_eq!(circle_product(&f, &id).unwrap(), f.scaled(&Scalar::from(arity as i64)));
        }
    }

    #[test]
    fn matrix_product_squares_to_zero() {
        let mu = matrix_span();
        assert!(circle_product(&mu, &mu).unwrap().is_zero());
        assert!(check_prelie_n_two_ways(&mu).unwrap());
    }

    #[test]
    fn generic_binary_map_fails_both_ways() {
        let mu = cochain(2, 1);
        assert!(!check_prelie_n_two_ways(&mu).unwrap());
    }

    #[test]
    fn arities_add() {
        let f = cochain(3, 2);
        let g = cochain(2, 5);
        let fg = circle_product(&f, &g).unwrap();
        assert_eq!(fg.arity(), 4);
        assert!(check_partial_symmetry(&fg, Action::Rho2));
    }

    #[test]
    fn bracket_of_binary_map_with_itself() {
        let f = cochain(2, 4);
        let sq = circle_product(&f, &f).unwrap();
        assert_eq!(circle_bracket(&f, &f).unwrap(), sq.scaled(&Scalar::from(2)));
        let g = cochain(3, 4);
        assert!(circle_bracket(&g, &g).unwrap().is_zero());
    }

    #[test]
    fn rejects_asymmetric_or_graded_input() {
        let raw = Operation::from_fn(plane(), 3, 0, |w| Vector::basis(w[0]));
        assert!(matches!(circle_product(&raw, &raw), Err(Error::Symmetry { .. })));
        let graded = Operation::zero(Arc::new(GradedSpace::with_degrees(&[1])), 2, 0);
        assert!(matches!(circle_product(&graded, &graded), Err(Error::Grading)));
    }

    #[test]
    fn lemma_is_an_equality_of_maps() {
        for arity in 2..=3 {
            for seed in 0..4 {
                let mu = cochain(arity, seed);
                let residual = check_nary(&mu, NaryKind::PreLie).unwrap().residual.op;
                assert_eq!(residual, circle_product(&mu, &mu).unwrap());
            }
        }
    }
}
