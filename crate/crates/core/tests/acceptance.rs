//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails. All checks are exact; the only thresholds
//! are the wall-clock budgets.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gamma2_core::algebra::{
    epsilon0, frak_x_direct, invert_group_matrix, radial_operator, radial_power_trace, Epsilon0,
    InverseRule,
};
use gamma2_core::lucas::{f_coeffs, f_eval, g, g_via_lower_binomial, lucas_number, lucas_triangle, Backend};
use gamma2_core::rep::{build_an, random_param_tuple, relation_scan, represent, sample_tuples, Collision, RepConfig};
use gamma2_core::words::{enumerate_reduced, GroupWord, WordFormN2};
use gamma2_core::SquareMatrix;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const BOUND: i64 = 9;

fn sampled_binary_configs(count: u64) -> Vec<RepConfig> {
    (0..count).map(|seed| sample_tuples(seed, 2, 2, BOUND).expect("sampling")).collect()
}

fn involution_theorem() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2211);
    let mut checked = 0;
    for n in 2..=12 {
        for case in 0..100 {
            let t = random_param_tuple(&mut rng, n, BOUND);
            let m = build_an(&t);
            ensure!((&m * &m).is_identity(), "n={n} case={case} tuple=({t}) does not square to I");
            checked += 1;
        }
    }
    Ok(format!("{checked} tuples, n = 2..=12"))
}

fn anticommutator_lemma() -> Outcome {
    for (seed, cfg) in sampled_binary_configs(100).iter().enumerate() {
        let by_params = Epsilon0::from_parameters(cfg).unwrap();
        let by_det = Epsilon0::from_determinants(cfg).unwrap();
        let by_trace = Epsilon0::from_trace(cfg).unwrap();
        ensure!(
            by_params == by_det && by_det == by_trace,
            "seed {seed}: params {by_params}, det {by_det}, trace {by_trace}"
        );
        let [x1, x2] = cfg.generator_matrices() else { unreachable!() };
        ensure!(
            &(x1 * x2) + &(x2 * x1) == SquareMatrix::scalar(2, &by_det.value),
            "seed {seed}: X1X2 + X2X1 != eps0 I"
        );
    }
    Ok("100 configs, three routes agree".into())
}

fn main_identity() -> Outcome {
    for (seed, cfg) in sampled_binary_configs(20).iter().enumerate() {
        let eps = epsilon0(cfg).unwrap();
        for n in 1..=30 {
            let direct = frak_x_direct(cfg, n).unwrap();
            for backend in [Backend::ClosedForm, Backend::Recurrence] {
                let f = f_eval(n, &eps.value, backend);
                ensure!(
                    direct == SquareMatrix::scalar(2, &f),
                    "seed {seed} n={n} {backend:?}: (X1X2)^n + (X2X1)^n != f_n(eps0) I"
                );
            }
        }
    }
    Ok("20 configs x n = 1..=30, both backends".into())
}

fn named_polynomials() -> Outcome {
    let expected: [(u64, &[i64]); 4] = [
        (1, &[0, 1]),
        (2, &[-2, 0, 1]),
        (3, &[0, -3, 0, 1]),
        (4, &[2, 0, -4, 0, 1]),
    ];
    for (n, coeffs) in expected {
        let want: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let got = f_coeffs(n);
        ensure!(got.coeffs() == want.as_slice(), "f_{n} = {got}, expected {want:?}");
    }
    Ok("z, z^2 - 2, z^3 - 3z, z^4 - 4z^2 + 2".into())
}

fn lucas_triangle_rows() -> Outcome {
    let diagram: [&[u64]; 10] = [
        &[1],
        &[1, 2],
        &[1, 3],
        &[1, 4, 2],
        &[1, 5, 5],
        &[1, 6, 9, 2],
        &[1, 7, 14, 7],
        &[1, 8, 20, 16, 2],
        &[1, 9, 27, 30, 9],
        &[1, 10, 35, 50, 25, 2],
    ];
    let t = lucas_triangle(10);
    for (i, row) in diagram.iter().enumerate() {
        let want: Vec<BigUint> = row.iter().map(|&x| BigUint::from(x)).collect();
        ensure!(t.row(i + 1) == Some(want.as_slice()), "row {} = {:?}", i + 1, t.row(i + 1));
    }
    let gz = |n: u64, k: i64| if k < 0 || n == 0 { BigUint::default() } else { g(n, k as u64) };
    for n in 2..=64u64 {
        for k in 1..=n.div_ceil(2) as i64 {
            ensure!(
                gz(n + 1, k) == gz(n, k) + gz(n - 1, k - 1),
                "g({}, {k}) != g({n}, {k}) + g({}, {})",
                n + 1,
                n - 1,
                k - 1
            );
        }
    }
    let big = lucas_triangle(64);
    for n in 1..=64u64 {
        for k in 0..=n / 2 {
            ensure!(big.get(n as usize, k as usize) == g(n, k), "table/closed form differ at ({n}, {k})");
        }
    }
    Ok("rows 1..=10 verbatim; recurrence for n <= 64".into())
}

fn trace_formulas() -> Outcome {
    for (seed, cfg) in sampled_binary_configs(20).iter().enumerate() {
        let eps = epsilon0(cfg).unwrap();
        let t = radial_operator(cfg).unwrap();
        let mut power = SquareMatrix::identity(2);
        for n in 1..=30u64 {
            power = &power * &t;
            let closed = radial_power_trace(&eps, n);
            let brute = power.trace();
            ensure!(closed == brute, "seed {seed} n={n}: closed {closed} vs brute {brute}");
            ensure!(n % 2 == 0 || brute.is_zero(), "seed {seed} n={n}: odd trace {brute}");
        }
    }
    Ok("20 configs x n = 1..=30".into())
}

fn inversion() -> Outcome {
    let mut configs = vec![
        RepConfig::from_i64(&[&[2, 1], &[-1, 1]]).unwrap(),
        RepConfig::from_i64(&[&[2, 1], &[3, 1]]).unwrap(),
        RepConfig::from_i64(&[&[2, 1], &[3, 2]]).unwrap(),
    ];
    configs.extend(sampled_binary_configs(10));
    let words = enumerate_reduced(2, 12).unwrap();
    for (ci, cfg) in configs.iter().enumerate() {
        for w in &words {
            let (inv, rule) = invert_group_matrix(w, cfg).unwrap();
            let image = represent(w, cfg).unwrap();
            ensure!((&inv * &image).is_identity(), "config {ci} word [{w}]: product is not I");
            let form = w.classify_n2().unwrap();
            let rule_ok = match rule {
                InverseRule::SelfInverse => form.is_self_inverse(),
                InverseRule::AffineRule(_) => {
                    matches!(form, WordFormN2::AltPow12(_) | WordFormN2::AltPow21(_))
                }
            };
            ensure!(rule_ok, "config {ci} word [{w}]: rule {rule:?} vs form {form}");
        }
    }
    Ok(format!("{} words x {} configs", words.len(), configs.len()))
}

fn normal_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x315);
    let mut raw_count = 0;
    for len in 0..=10u32 {
        for bits in 0..(1u32 << len) {
            let letters: Vec<usize> = (0..len).map(|i| 1 + ((bits >> i) & 1) as usize).collect();
            let g = GroupWord::from_letters(2, &letters).unwrap();
            let form = g.classify_n2().unwrap();
            ensure!(form.to_word() == g, "{letters:?} -> [{g}] misclassified as {form}");
            let again = GroupWord::from_letters(2, &g.letters().collect::<Vec<_>>()).unwrap();
            ensure!(again == g, "{letters:?}: reduction not idempotent");
            for _ in 0..8 {
                let order: Vec<usize> = (0..letters.len()).map(|_| rng.gen()).collect();
                let reduced = common::reduce_in_order(letters.clone(), &order);
                ensure!(
                    reduced == g.letters().collect::<Vec<_>>(),
                    "{letters:?}: cancellation order {order:?} gave {reduced:?}"
                );
            }
            raw_count += 1;
        }
    }
    Ok(format!("{raw_count} raw words, 8 cancellation orders each"))
}

fn homomorphism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x235);
    for dim in [2usize, 3, 5, 8] {
        let cfg = sample_tuples(dim as u64, 3, dim, BOUND).unwrap();
        for case in 0..200 {
            let mut word = || {
                let len = rng.gen_range(0..=12);
                let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=3)).collect();
                GroupWord::from_letters(3, &letters).unwrap()
            };
            let (a, b) = (word(), word());
            let lhs = represent(&a.multiply(&b).unwrap(), &cfg).unwrap();
            let rhs = &represent(&a, &cfg).unwrap() * &represent(&b, &cfg).unwrap();
            ensure!(lhs == rhs, "dim {dim} case {case}: [{a}]·[{b}]");
        }
    }
    Ok("200 pairs x n in {2, 3, 5, 8}".into())
}

fn faithfulness_caveat() -> Outcome {
    let clean = RepConfig::from_i64(&[&[2, 1], &[-1, 1]]).unwrap();
    ensure!(epsilon0(&clean).unwrap().value == (-7).into(), "expected eps0 = -7");
    let found = relation_scan(&clean, 12).unwrap();
    ensure!(found.is_empty(), "unexpected collisions: {found:?}");

    let rotation = RepConfig::from_i64(&[&[2, 1], &[3, 1]]).unwrap();
    ensure!(epsilon0(&rotation).unwrap().value == 1.into(), "expected eps0 = 1");
    let found = relation_scan(&rotation, 12).unwrap();
    let target = Collision {
        word: GroupWord::identity(2).unwrap(),
        other: WordFormN2::AltPow12(6).to_word(),
    };
    ensure!(found.contains(&target), "(x1x2)^6 = e not reported");
    Ok(format!("eps0 = -7: 0 collisions; eps0 = 1: {} collisions incl. (x1x2)^6 = e", found.len()))
}

fn closed_form_agreement() -> Outcome {
    for n in 1..=64u64 {
        ensure!(g(n, 0) == BigUint::from(1u32), "g({n}, 0) != 1");
        ensure!(f_coeffs(n).coeff(n as usize) == BigInt::from(1), "f_{n} leading coefficient != 1");
        ensure!(g_via_lower_binomial(n, 0).is_none(), "k = 0 should be undefined in the lower form");
        for k in 1..=n / 2 {
            let lower = g_via_lower_binomial(n, k).unwrap();
            ensure!(
                lower == BigRational::from_integer(BigInt::from(g(n, k))),
                "forms differ at ({n}, {k})"
            );
        }
    }
    Ok("n <= 64".into())
}

fn lucas_numbers() -> Outcome {
    let expected = [1u64, 3, 4, 7, 11, 18, 29, 47, 76, 123];
    let mut oracle = vec![1u64, 3];
    while oracle.len() < 10 {
        oracle.push(oracle[oracle.len() - 1] + oracle[oracle.len() - 2]);
    }
    ensure!(oracle == expected, "oracle {oracle:?}");
    for n in 1..=10u64 {
        let got = lucas_number(n);
        ensure!(got == BigUint::from(expected[n as usize - 1]), "L_{n} = {got}");
    }
    ensure!(
        lucas_triangle(10).row_sums() == expected.map(BigUint::from).to_vec(),
        "triangle row sums differ"
    );
    Ok("1, 3, 4, 7, 11, 18, 29, 47, 76, 123".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "involution theorem", budget: secs(10), run: involution_theorem },
        Criterion { id: 2, name: "anticommutator lemma", budget: secs(2), run: anticommutator_lemma },
        Criterion { id: 3, name: "main identity", budget: secs(10), run: main_identity },
        Criterion { id: 4, name: "named polynomials", budget: None, run: named_polynomials },
        Criterion { id: 5, name: "lucas triangle", budget: None, run: lucas_triangle_rows },
        Criterion { id: 6, name: "trace formulas", budget: secs(5), run: trace_formulas },
        Criterion { id: 7, name: "inversion", budget: secs(30), run: inversion },
        Criterion { id: 8, name: "normal forms", budget: None, run: normal_forms },
        Criterion { id: 9, name: "homomorphism", budget: secs(10), run: homomorphism },
        Criterion { id: 10, name: "faithfulness caveat", budget: secs(60), run: faithfulness_caveat },
        Criterion { id: 11, name: "closed-form agreement", budget: None, run: closed_form_agreement },
        Criterion { id: 12, name: "lucas numbers", budget: None, run: lucas_numbers },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  AC{:<2} {:<22} {elapsed:>10.2?}  {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL  AC{:<2} {:<22} {elapsed:>10.2?}  {why}", c.id, c.name);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
