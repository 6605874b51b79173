mod common;

use common::{param_tuple, word};
use gamma2_core::rep::{build_a2, build_an, build_q_block, represent, sample_tuples};
use gamma2_core::SquareMatrix;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn generator_matrices_are_involutions(t in (2usize..=12).prop_flat_map(param_tuple)) {
        let m = build_an(&t);
        prop_assert!((&m * &m).is_identity());
    }

    #[test]
    fn block_layout(t in (3usize..=9).prop_flat_map(param_tuple)) {
        let n = t.dim();
        let e = t.entries();
        let m = build_an(&t);
        let a2 = build_a2(&e[0], &e[1]).unwrap();
        let q = build_q_block(&e[0], &e[1], &e[2..]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                prop_assert_eq!(m.get(n - 2 + i, n - 2 + j), a2.get(i, j));
            }
            for j in 0..n - 2 {
                prop_assert!(m.get(n - 2 + i, j).is_zero());
            }
        }
        for (i, row) in q.rows().iter().enumerate() {
            for j in 0..n - 2 {
                let expected = if i == j { 1.into() } else { 0.into() };
                prop_assert_eq!(m.get(i, j), &expected);
            }
            prop_assert_eq!(m.get(i, n - 2), &row[0]);
            prop_assert_eq!(m.get(i, n - 1), &row[1]);
            // top row carries a_n, bottom row a_3
            prop_assert_eq!(&row[0], &e[n - 1 - i]);
        }
    }

    #[test]
    fn q_block_is_annihilated(t in (3usize..=9).prop_flat_map(param_tuple)) {
        let e = t.entries();
        let a2 = build_a2(&e[0], &e[1]).unwrap();
        let q = build_q_block(&e[0], &e[1], &e[2..]).unwrap();
        prop_assert!(q.add(&q.mul_right(&a2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn two_by_two_generators_have_det_minus_one(t in param_tuple(2)) {
        prop_assert_eq!(build_an(&t).det(), (-1).into());
    }
}

fn dims() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![2usize, 3, 5, 8])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn representation_is_a_homomorphism(
        dim in dims(),
        seed in 0u64..1000,
        a in word(3, 12),
        b in word(3, 12),
    ) {
        let cfg = sample_tuples(seed, 3, dim, 7).unwrap();
        let lhs = represent(&a.multiply(&b).unwrap(), &cfg).unwrap();
        let rhs = &represent(&a, &cfg).unwrap() * &represent(&b, &cfg).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_inverse_is_matrix_inverse(dim in dims(), seed in 0u64..1000, w in word(3, 12)) {
        let cfg = sample_tuples(seed, 3, dim, 7).unwrap();
        let m = represent(&w, &cfg).unwrap();
        prop_assert!((&represent(&w.invert(), &cfg).unwrap() * &m).is_identity());
        prop_assert!((&m * &represent(&w.invert(), &cfg).unwrap()).is_identity());
    }
}

#[test]
fn sampled_generators_do_not_commute() {
    for seed in 0..50 {
        let cfg = sample_tuples(seed, 2, 2, 9).unwrap();
        let [x1, x2] = cfg.generator_matrices() else { unreachable!() };
        assert_ne!(x1 * x2, x2 * x1, "seed {seed}");
    }
}

#[test]
fn sampled_configs_are_valid_for_every_shape() {
    for (seed, n, dim) in [(1, 1, 2), (2, 4, 3), (3, 6, 12), (4, 2, 7)] {
        let cfg = sample_tuples(seed, n, dim, 9).unwrap();
        assert!(cfg.validate().is_empty());
        assert_eq!((cfg.n_generators(), cfg.dim()), (n, dim));
        for g in cfg.generator_matrices() {
            assert_eq!(g.pow(2), SquareMatrix::identity(dim));
        }
    }
}
