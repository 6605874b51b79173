//! Seeded property sweeps. Each case derives its own seed from the base seed
//! and its index, so results do not depend on thread scheduling.

use std::path::PathBuf;

use gamma2_core::algebra::{
    epsilon0, frak_x_direct, invert_group_matrix, radial_operator, radial_power_trace, InverseRule,
};
use gamma2_core::lucas::{f_eval, Backend};
use gamma2_core::rep::{build_an, random_param_tuple, relation_scan, represent, sample_tuples, RepConfig};
use gamma2_core::words::{enumerate_reduced, GroupWord, WordFormN2};
use gamma2_core::SquareMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::commands::{load_config, Outcome};
use crate::report::{config_json, matrix_json, scalar_json, CliError, CliReport};

pub const MAX_DIM: usize = 12;
pub const MAX_WORD_LEN: usize = 12;
pub const MAX_CASES: u64 = 1000;
pub const MAX_N: u64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Involution,
    Homomorphism,
    Frakx,
    Trace,
    Inversion,
    Scan,
}

#[derive(Clone, Debug)]
pub struct VerifyArgs {
    pub suite: Suite,
    pub n: u64,
    pub dim: usize,
    pub generators: usize,
    pub seed: u64,
    pub cases: u64,
    pub max_len: usize,
    pub bound: i64,
    pub config: Option<PathBuf>,
    pub strict: bool,
}

/// splitmix64 of the base seed mixed with the case index.
fn case_seed(seed: u64, case: u64) -> u64 {
    let mut z = seed ^ case.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn check_bounds(a: &VerifyArgs) -> Result<(), CliError> {
    if !(2..=MAX_DIM).contains(&a.dim) {
        return Err(CliError::usage(format!("--dim must be in 2..={MAX_DIM}")));
    }
    if !(1..=MAX_WORD_LEN).contains(&a.max_len) {
        return Err(CliError::usage(format!("--max-len must be in 1..={MAX_WORD_LEN}")));
    }
    if !(1..=MAX_CASES).contains(&a.cases) {
        return Err(CliError::usage(format!("--cases must be in 1..={MAX_CASES}")));
    }
    if !(1..=MAX_N).contains(&a.n) {
        return Err(CliError::usage(format!("--n must be in 1..={MAX_N}")));
    }
    if !(1..=64).contains(&a.generators) {
        return Err(CliError::usage("--generators must be in 1..=64"));
    }
    if a.bound < 2 {
        return Err(CliError::usage("--bound must be at least 2"));
    }
    Ok(())
}

fn sample(a: &VerifyArgs, case: u64, n_generators: usize, dim: usize) -> Result<RepConfig, CliError> {
    Ok(sample_tuples(case_seed(a.seed, case), n_generators, dim, a.bound)?)
}

/// Runs `check` for every case index in parallel, keeping failures in case order.
fn sweep<F>(cases: u64, check: F) -> Result<Vec<Value>, CliError>
where
    F: Fn(u64) -> Result<Vec<Value>, CliError> + Sync + Send,
{
    let per_case: Vec<Result<Vec<Value>, CliError>> = (0..cases).into_par_iter().map(check).collect();
    let mut failures = Vec::new();
    for r in per_case {
        failures.extend(r?);
    }
    Ok(failures)
}

fn involution(a: &VerifyArgs) -> Result<(u64, Vec<Value>), CliError> {
    let failures = sweep(a.cases, |case| {
        let mut rng = ChaCha8Rng::seed_from_u64(case_seed(a.seed, case));
        let t = random_param_tuple(&mut rng, a.dim, a.bound);
        let sq = build_an(&t).pow(2);
        Ok(if sq.is_identity() {
            vec![]
        } else {
            vec![json!({
                "case": case,
                "tuple": t.entries().iter().map(scalar_json).collect::<Vec<_>>(),
                "expected": matrix_json(&SquareMatrix::identity(a.dim)),
                "actual": matrix_json(&sq),
            })]
        })
    })?;
    Ok((a.cases, failures))
}

fn random_word(rng: &mut ChaCha8Rng, n_generators: usize, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n_generators)).collect();
    GroupWord::from_letters(n_generators, &letters).expect("indices in range")
}

fn homomorphism(a: &VerifyArgs) -> Result<(u64, Vec<Value>), CliError> {
    let failures = sweep(a.cases, |case| {
        let cfg = sample(a, case, a.generators, a.dim)?;
        let mut rng = ChaCha8Rng::seed_from_u64(case_seed(a.seed, case) ^ 1);
        let u = random_word(&mut rng, a.generators, a.max_len);
        let v = random_word(&mut rng, a.generators, a.max_len);
        let lhs = represent(&u.multiply(&v)?, &cfg)?;
        let rhs = &represent(&u, &cfg)? * &represent(&v, &cfg)?;
        Ok(if lhs == rhs {
            vec![]
        } else {
            vec![json!({
                "case": case,
                "config": config_json(&cfg),
                "words": [u.to_string(), v.to_string()],
                "expected": matrix_json(&rhs),
                "actual": matrix_json(&lhs),
            })]
        })
    })?;
    Ok((a.cases, failures))
}

fn frakx(a: &VerifyArgs) -> Result<(u64, Vec<Value>), CliError> {
    let failures = sweep(a.cases, |case| {
        let cfg = sample(a, case, 2, 2)?;
        let eps = epsilon0(&cfg)?;
        let mut out = Vec::new();
        for k in 1..=a.n {
            let direct = frak_x_direct(&cfg, k)?;
            for backend in [Backend::ClosedForm, Backend::Recurrence] {
                let expected = SquareMatrix::scalar(2, &f_eval(k, &eps.value, backend));
                if direct != expected {
                    out.push(json!({
                        "case": case,
                        "config": config_json(&cfg),
                        "index": k,
                        "backend": format!("{backend:?}"),
                        "expected": matrix_json(&expected),
                        "actual": matrix_json(&direct),
                    }));
                }
            }
        }
        Ok(out)
    })?;
    Ok((a.cases, failures))
}

fn trace(a: &VerifyArgs) -> Result<(u64, Vec<Value>), CliError> {
    let failures = sweep(a.cases, |case| {
        let cfg = sample(a, case, 2, 2)?;
        let eps = epsilon0(&cfg)?;
        let t = radial_operator(&cfg)?;
        let mut power = SquareMatrix::identity(2);
        let mut out = Vec::new();
        for k in 1..=a.n {
            power = &power * &t;
            let closed = radial_power_trace(&eps, k);
            let brute = power.trace();
            if closed != brute {
                out.push(json!({
                    "case": case,
                    "config": config_json(&cfg),
                    "index": k,
                    "expected": scalar_json(&closed),
                    "actual": scalar_json(&brute),
                }));
            }
        }
        Ok(out)
    })?;
    Ok((a.cases, failures))
}

fn inversion(a: &VerifyArgs) -> Result<(u64, Vec<Value>), CliError> {
    let words = enumerate_reduced(2, a.max_len)?;
    let failures = sweep(a.cases, |case| {
        let cfg = sample(a, case, 2, 2)?;
        let mut out = Vec::new();
        for w in &words {
            let (inv, rule) = invert_group_matrix(w, &cfg)?;
            let product = &inv * &represent(w, &cfg)?;
            let form = w.classify_n2()?;
            let rule_ok = match &rule {
                InverseRule::SelfInverse => form.is_self_inverse(),
                InverseRule::AffineRule(_) => {
                    matches!(form, WordFormN2::AltPow12(_) | WordFormN2::AltPow21(_))
                }
            };
            if !product.is_identity() || !rule_ok {
                out.push(json!({
                    "case": case,
                    "config": config_json(&cfg),
                    "word": w.to_string(),
                    "form": form.to_string(),
                    "rule": format!("{rule:?}"),
                    "expected": matrix_json(&SquareMatrix::identity(2)),
                    "actual": matrix_json(&product),
                }));
            }
        }
        Ok(out)
    })?;
    Ok((a.cases * words.len() as u64, failures))
}

fn scan(a: &VerifyArgs) -> Result<(u64, Vec<Value>, Value), CliError> {
    let (cfg, warnings) = match &a.config {
        Some(path) => {
            let loaded = load_config(path, a.strict)?;
            (loaded.cfg, loaded.warnings)
        }
        None => (sample(a, 0, a.generators, a.dim)?, Vec::new()),
    };
    let collisions = relation_scan(&cfg, a.max_len)?;
    let words = gamma2_core::words::count_reduced(cfg.n_generators(), a.max_len) as u64;
    let failures = collisions
        .iter()
        .map(|c| {
            json!({
                "config": config_json(&cfg),
                "max_len": a.max_len,
                "word": c.word.to_string(),
                "other": c.other.to_string(),
                "image": matrix_json(&represent(&c.word, &cfg).expect("same group")),
            })
        })
        .collect();
    let extra = json!({
        "config": config_json(&cfg),
        "words_enumerated": words,
        "warnings": warnings.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok((words, failures, extra))
}

pub fn run(a: &VerifyArgs) -> Result<Outcome, CliError> {
    check_bounds(a)?;
    let suite = format!("{:?}", a.suite).to_lowercase();
    let (cases_run, failures, extra) = match a.suite {
        Suite::Involution => with_null(involution(a)?),
        Suite::Homomorphism => with_null(homomorphism(a)?),
        Suite::Frakx => with_null(frakx(a)?),
        Suite::Trace => with_null(trace(a)?),
        Suite::Inversion => with_null(inversion(a)?),
        Suite::Scan => scan(a)?,
    };
    let mut payload = json!({
        "suite": suite,
        "seed": a.seed,
        "cases": a.cases,
        "dim": a.dim,
        "generators": a.generators,
        "n": a.n,
        "max_len": a.max_len,
        "bound": a.bound,
    });
    if let Value::Object(extra) = extra {
        payload.as_object_mut().unwrap().extend(extra);
    }
    let report = CliReport::new("verify", payload, cases_run, failures);
    let mut text = format!(
        "verify {suite}: {} ({} cases, {} failures)\n",
        if report.failures.is_empty() { "ok" } else { "violation" },
        cases_run,
        report.failures.len()
    );
    for f in &report.failures {
        text.push_str(&format!("  {f}\n"));
    }
    Ok(Outcome { report, text })
}

fn with_null((n, f): (u64, Vec<Value>)) -> (u64, Vec<Value>, Value) {
    (n, f, Value::Null)
}
