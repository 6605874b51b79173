#![allow(dead_code)]

use gamma2_core::exactmath::{ExactComplex, ExactRational, SquareMatrix};
use gamma2_core::rep::{ParamTuple, RepConfig};
use gamma2_core::words::GroupWord;
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = ExactRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| ExactRational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn real_scalar() -> impl Strategy<Value = ExactComplex> {
    rational().prop_map(ExactComplex::real)
}

pub fn scalar() -> impl Strategy<Value = ExactComplex> {
    prop_oneof![
        2 => real_scalar(),
        1 => (rational(), rational()).prop_map(|(re, im)| ExactComplex::new(re, im)),
    ]
}

pub fn matrix(dim: usize) -> impl Strategy<Value = SquareMatrix> {
    prop::collection::vec(prop::collection::vec(scalar(), dim), dim)
        .prop_map(|rows| SquareMatrix::from_rows(rows).unwrap())
}

pub fn param_tuple(dim: usize) -> impl Strategy<Value = ParamTuple> {
    prop::collection::vec(scalar(), dim).prop_filter_map("tuple invariants", |e| ParamTuple::new(e).ok())
}

/// Two tuples of a 2×2 configuration, possibly sharing coordinates.
pub fn binary_config() -> impl Strategy<Value = RepConfig> {
    (param_tuple(2), param_tuple(2)).prop_filter_map("config", |(a, b)| {
        RepConfig::with_policy(
            vec![a.entries().to_vec(), b.entries().to_vec()],
            gamma2_core::rep::Distinctness::Relaxed,
        )
        .ok()
    })
}

pub fn word(n_generators: usize, max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(1..=n_generators, 0..=max_len)
        .prop_map(move |letters| GroupWord::from_letters(n_generators, &letters).unwrap())
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &SquareMatrix) -> ExactComplex {
    let n = m.dim();
    let rows: Vec<Vec<ExactComplex>> = m.rows().map(<[_]>::to_vec).collect();
    fn go(rows: &[Vec<ExactComplex>], cols: &[usize]) -> ExactComplex {
        let depth = rows.len() - cols.len();
        if cols.len() == 1 {
            return rows[depth][cols[0]].clone();
        }
        let mut acc = ExactComplex::zero();
        for (i, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = &rows[depth][c] * &go(rows, &rest);
            if i % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }
    go(&rows, &(0..n).collect::<Vec<_>>())
}

/// Reduces a letter sequence by cancelling the adjacent equal pair picked by
/// each entry of `choices` (taken modulo the number of available pairs).
pub fn reduce_in_order(mut letters: Vec<usize>, choices: &[usize]) -> Vec<usize> {
    let mut step = 0;
    loop {
        let pairs: Vec<usize> = (0..letters.len().saturating_sub(1))
            .filter(|&i| letters[i] == letters[i + 1])
            .collect();
        if pairs.is_empty() {
            return letters;
        }
        let pick = choices.get(step).copied().unwrap_or(0) % pairs.len();
        let at = pairs[pick];
        letters.drain(at..at + 2);
        step += 1;
    }
}
