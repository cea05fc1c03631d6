mod common;

use std::sync::Arc;

use hoalg::functors::{desuspend_family, sign_transfer_sides};
use hoalg::io::{generate_random, GenerateParams};
use hoalg::perm::koszul_sign;
use hoalg::{
    check_full_symmetry, check_nary, check_partial_symmetry, commutator, nary_embed, precompose_symmetrized, residual,
    suspend_family, Action, CommutatorKind, Convention, EquationFlavor, GradedSpace, NaryKind, Operation,
    OperationFamily, Permutation, StructureKind, SymmetrizationMode,
};
use proptest::prelude::*;

use common::{all_perms, eps, prelie_expansion};

fn perm_and_degrees(max_n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<i64>)> {
    (1..=max_n).prop_flat_map(|n| (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(-2i64..=3, n)))
}

fn random_family(seed: u64, arities: Vec<usize>, symmetrize: Option<SymmetrizationMode>) -> OperationFamily {
    let params =
        GenerateParams { seed, dim: 2, min_degree: -1, max_degree: 1, arities, sparsity: 0.4, symmetrize, ..Default::default() };
    generate_random(&params).unwrap().family(None).unwrap()
}

fn one_based(p: &[usize]) -> Permutation {
    Permutation::from_one_line(&p.iter().map(|i| i + 1).collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn koszul_sign_matches_inversion_count((p, x) in perm_and_degrees(7)) {
        prop_assert_eq!(koszul_sign(&one_based(&p), &x).unwrap().as_i64(), eps(&p, &x));
    }

    #[test]
    fn sign_transfer_sides_agree((p, x) in perm_and_degrees(6)) {
        let (l, r) = sign_transfer_sides(&one_based(&p), &x).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn suspension_round_trip(seed in 0u64..10_000) {
        let family = random_family(seed, vec![1, 2, 3], None);
        let hat = suspend_family(&family).unwrap();
        prop_assert_eq!(hat.convention(), Convention::Hat);
        prop_assert_eq!(desuspend_family(&hat).unwrap(), family);
    }

    #[test]
    fn suspension_transfers_symmetry(seed in 0u64..10_000) {
        let partial = random_family(seed, vec![2, 3], Some(SymmetrizationMode::Partial));
        let full = random_family(seed, vec![2, 3], Some(SymmetrizationMode::Full));
        for op in suspend_family(&partial).unwrap().ops() {
            prop_assert!(check_partial_symmetry(op, Action::Rho1));
        }
        for op in suspend_family(&full).unwrap().ops() {
            prop_assert!(check_full_symmetry(op, Action::Rho1));
        }
    }

    #[test]
    fn commutator_square_commutes(seed in 0u64..10_000, kind in prop_oneof![Just(CommutatorKind::Alpha), Just(CommutatorKind::Gamma)]) {
        let family = random_family(seed, vec![1, 2, 3], None);
        let lhs = suspend_family(&commutator(&family, kind).unwrap()).unwrap();
        let rhs = commutator(&suspend_family(&family).unwrap(), kind).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prelie_residual_matches_expansion(seed in 0u64..10_000) {
        let family = random_family(seed, vec![1, 2, 3], Some(SymmetrizationMode::Partial));
        let hat = suspend_family(&family).unwrap();
        for n in 1..=4 {
            let r = residual(&hat, EquationFlavor::new(StructureKind::PreLie, Convention::Hat), n).unwrap().op;
            prop_assert_eq!(r, prelie_expansion(&hat, n));
        }
    }

    #[test]
    fn embedding_agrees_with_direct_check(seed in 0u64..10_000, n in 2usize..=3) {
        let space = Arc::new(GradedSpace::ungraded(["a", "b"]).unwrap());
        let mu = Operation::from_fn(space, n, 0, |w| {
            let h = w.iter().fold(seed, |acc, &x| acc.wrapping_mul(31).wrapping_add(x as u64 + 1));
            [(0usize, hoalg::Scalar::from(((h >> 3) % 3) as i64 - 1)), (1, hoalg::Scalar::from(((h >> 7) % 2) as i64))]
                .into_iter()
                .collect()
        });
        for kind in [NaryKind::PartiallyAssociative, NaryKind::PreLie] {
            let mu = if kind == NaryKind::PreLie {
                precompose_symmetrized(&mu, Action::Rho2, SymmetrizationMode::Partial)
            } else {
                mu.clone()
            };
            let direct = check_nary(&mu, kind).unwrap().holds;
            let (_, family) = nary_embed(&mu).unwrap();
            let flavor = EquationFlavor::new(kind.structure(), Convention::Unhat);
            let embedded = (1..=2 * n - 1).all(|k| residual(&family, flavor, k).unwrap().is_zero());
            prop_assert_eq!(direct, embedded);
        }
    }
}

#[test]
fn inversion_oracle_is_a_right_action_cocycle() {
    let x = [1, 0, 1, 1];
    for tau in all_perms(4) {
        for sigma in all_perms(4) {
            let xt: Vec<i64> = tau.iter().map(|&j| x[j]).collect();
            let ts: Vec<usize> = sigma.iter().map(|&i| tau[i]).collect();
            assert_eq!(eps(&sigma, &xt), eps(&ts, &x) * eps(&tau, &x));
        }
    }
}
