//! Involutory matrix representations.
//!
//! A parameter tuple `(a1, ..., an)` with `a1 ∉ {0, 1}` and every other entry
//! nonzero determines an `n × n` matrix
//!
//! ```text
//! [ I_{n-2}   Q          ]
//! [ 0         A2(a1, a2) ]      A2(a, b) = [ a            b  ]
//!                                          [ (1 - a²)/b   -a ]
//! ```
//!
//! whose square is the identity. Here `Q` has one row `[a_i, -a2·a_i/(1-a1)]`
//! per trailing parameter, ordered `a_n` at the top down to `a3` at the bottom.
//! Sending the generator `x_k` to the matrix of the `k`-th tuple gives a
//! homomorphism from the group of reduced words into `GL_n`.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{ExactComplex, ExactRational, SquareMatrix};
use crate::words::{self, GroupWord, MAX_GENERATORS};

/// Upper bound on the number of words a [`relation_scan`] may enumerate.
pub const SCAN_LIMIT: u128 = 1_000_000;

/// Rejected draws allowed before [`sample_tuples`] gives up.
pub const SAMPLING_ATTEMPTS: usize = 10_000;

/// Parameters of one generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamTuple {
    entries: Vec<ExactComplex>,
}

impl ParamTuple {
    pub fn new(entries: Vec<ExactComplex>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "tuple needs at least 2 entries, got {}",
                entries.len()
            )));
        }
        if let Some(v) = tuple_violations(0, &entries).into_iter().next() {
            return Err(Error::InvalidParameter(v.to_string()));
        }
        Ok(Self { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| ExactComplex::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[ExactComplex] {
        &self.entries
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// `A2(a, b) = [[a, b], [(1 - a²)/b, -a]]`.
pub fn build_a2(a: &ExactComplex, b: &ExactComplex) -> Result<SquareMatrix> {
    if a.is_zero() || a.is_one() {
        return Err(Error::InvalidParameter(format!("a = {a} must avoid 0 and 1")));
    }
    if b.is_zero() {
        return Err(Error::InvalidParameter("b must be nonzero".into()));
    }
    let lower = (&ExactComplex::one() - &(a * a)).checked_div(b)?;
    SquareMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![lower, -a]])
}

/// The `(n-2) × 2` upper-right block of the generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBlock {
    rows: Vec<[ExactComplex; 2]>,
}

impl QBlock {
    pub fn rows(&self) -> &[[ExactComplex; 2]] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// `Q · M` for a 2×2 matrix `M`.
    pub fn mul_right(&self, m: &SquareMatrix) -> Result<QBlock> {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch { left: 2, right: m.dim() });
        }
        let rows = self
            .rows
            .iter()
            .map(|[p, q]| {
                [
                    &(p * m.get(0, 0)) + &(q * m.get(1, 0)),
                    &(p * m.get(0, 1)) + &(q * m.get(1, 1)),
                ]
            })
            .collect();
        Ok(QBlock { rows })
    }

    pub fn add(&self, other: &QBlock) -> Result<QBlock> {
        if self.rows.len() != other.rows.len() {
            return Err(Error::DimensionMismatch { left: self.rows.len(), right: other.rows.len() });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|([a, b], [c, d])| [a + c, b + d])
            .collect();
        Ok(QBlock { rows })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(ExactComplex::is_zero)
    }
}

/// Builds `Q` from `a1`, `a2` and the trailing parameters `(a3, ..., an)`.
/// Rows run from `an` (top) to `a3` (bottom); the row for `a_i` is
/// `[a_i, -a2·a_i/(1 - a1)]`.
pub fn build_q_block(a1: &ExactComplex, a2: &ExactComplex, rest: &[ExactComplex]) -> Result<QBlock> {
    if a1.is_one() {
        return Err(Error::InvalidParameter("a1 must differ from 1".into()));
    }
    if a2.is_zero() {
        return Err(Error::InvalidParameter("a2 must be nonzero".into()));
    }
    let factor = (-a2).checked_div(&(&ExactComplex::one() - a1))?;
    let rows = rest.iter().rev().map(|ai| [ai.clone(), ai * &factor]).collect();
    Ok(QBlock { rows })
}

/// The generator matrix for a parameter tuple.
pub fn build_an(w: &ParamTuple) -> SquareMatrix {
    let e = w.entries();
    let n = e.len();
    let a2 = build_a2(&e[0], &e[1]).expect("tuple invariants checked at construction");
    if n == 2 {
        return a2;
    }
    let q = build_q_block(&e[0], &e[1], &e[2..]).expect("tuple invariants checked at construction");
    let m = n - 2;
    let mut out = SquareMatrix::identity(n);
    for (i, [p, r]) in q.rows().iter().enumerate() {
        out.set(i, m, p.clone());
        out.set(i, m + 1, r.clone());
    }
    for i in 0..2 {
        for j in 0..2 {
            out.set(m + i, m + j, a2.get(i, j).clone());
        }
    }
    out
}

/// One reason a set of tuples fails to define a configuration.
/// Tuple and coordinate indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Fewer than two entries in a tuple.
    TooShort { tuple: usize, len: usize },
    /// Tuple length differs from the first tuple's.
    LengthMismatch { tuple: usize, expected: usize, found: usize },
    /// `a1` is 0 or 1.
    LeadingParameter { tuple: usize, value: ExactComplex },
    /// Some `a_l` (l ≥ 2) is zero.
    ZeroParameter { tuple: usize, coord: usize },
    /// Tuples `i` and `j` share their `l`-th coordinate.
    CoordinateCollision { i: usize, j: usize, coord: usize, value: ExactComplex },
    /// No tuples at all, or more than the supported generator count.
    GeneratorCount { count: usize },
}

impl Violation {
    /// Collisions only break strong distinctness; everything else makes the
    /// generator matrices undefined.
    pub fn is_collision(&self) -> bool {
        matches!(self, Violation::CoordinateCollision { .. })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooShort { tuple, len } => {
                write!(f, "tuple {tuple} has {len} entries, needs at least 2")
            }
            Violation::LengthMismatch { tuple, expected, found } => {
                write!(f, "tuple {tuple} has {found} entries, expected {expected}")
            }
            Violation::LeadingParameter { tuple, value } => {
                write!(f, "tuple {tuple}: a1 = {value} must avoid 0 and 1")
            }
            Violation::ZeroParameter { tuple, coord } => {
                write!(f, "tuple {tuple}: a{coord} is zero")
            }
            Violation::CoordinateCollision { i, j, coord, value } => {
                write!(f, "tuples {i} and {j} share coordinate {coord} (value {value})")
            }
            Violation::GeneratorCount { count } => {
                write!(f, "{count} tuples given, need 1..={MAX_GENERATORS}")
            }
        }
    }
}

fn tuple_violations(index: usize, entries: &[ExactComplex]) -> Vec<Violation> {
    let tuple = index + 1;
    let mut out = Vec::new();
    if entries.len() < 2 {
        out.push(Violation::TooShort { tuple, len: entries.len() });
    }
    if let Some(a1) = entries.first() {
        if a1.is_zero() || a1.is_one() {
            out.push(Violation::LeadingParameter { tuple, value: a1.clone() });
        }
    }
    for (l, x) in entries.iter().enumerate().skip(1) {
        if x.is_zero() {
            out.push(Violation::ZeroParameter { tuple, coord: l + 1 });
        }
    }
    out
}

/// Checks raw tuples for every configuration invariant. Never fails; an empty
/// list means the tuples are valid and strongly mutually distinct.
pub fn validate_tuples(tuples: &[Vec<ExactComplex>]) -> Vec<Violation> {
    let mut out = Vec::new();
    if tuples.is_empty() || tuples.len() > MAX_GENERATORS {
        out.push(Violation::GeneratorCount { count: tuples.len() });
    }
    let expected = tuples.first().map_or(0, Vec::len);
    for (i, t) in tuples.iter().enumerate() {
        out.extend(tuple_violations(i, t));
        if t.len() != expected {
            out.push(Violation::LengthMismatch { tuple: i + 1, expected, found: t.len() });
        }
    }
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            for (l, (x, y)) in tuples[i].iter().zip(&tuples[j]).enumerate() {
                if x == y {
                    out.push(Violation::CoordinateCollision {
                        i: i + 1,
                        j: j + 1,
                        coord: l + 1,
                        value: x.clone(),
                    });
                }
            }
        }
    }
    out
}

/// Whether coordinate collisions between tuples reject a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Distinctness {
    /// Tuples must differ in every coordinate.
    #[default]
    Strict,
    /// Only per-tuple invariants are enforced; collisions stay reportable
    /// through [`RepConfig::validate`].
    Relaxed,
}

/// `N` generator matrices of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepConfig {
    dim: usize,
    tuples: Vec<ParamTuple>,
    generators: Vec<SquareMatrix>,
}

impl RepConfig {
    /// Builds a strongly mutually distinct configuration.
    pub fn new(tuples: Vec<Vec<ExactComplex>>) -> Result<Self> {
        Self::with_policy(tuples, Distinctness::Strict)
    }

    pub fn with_policy(tuples: Vec<Vec<ExactComplex>>, policy: Distinctness) -> Result<Self> {
        let violations: Vec<Violation> = validate_tuples(&tuples)
            .into_iter()
            .filter(|v| policy == Distinctness::Strict || !v.is_collision())
            .collect();
        if !violations.is_empty() {
            return Err(Error::InvalidConfig(violations));
        }
        let tuples: Vec<ParamTuple> = tuples.into_iter().map(ParamTuple::new).collect::<Result<_>>()?;
        let dim = tuples[0].dim();
        let generators: Vec<SquareMatrix> = tuples.iter().map(build_an).collect();
        for (k, g) in generators.iter().enumerate() {
            if !(g * g).is_identity() {
                return Err(Error::NotInvolutory { generator: k + 1 });
            }
        }
        Ok(Self { dim, tuples, generators })
    }

    /// Integer-parameter shorthand, relaxed distinctness.
    pub fn from_i64(tuples: &[&[i64]]) -> Result<Self> {
        let raw = tuples
            .iter()
            .map(|t| t.iter().map(|&x| ExactComplex::from(x)).collect())
            .collect();
        Self::with_policy(raw, Distinctness::Relaxed)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_generators(&self) -> usize {
        self.tuples.len()
    }

    pub fn tuples(&self) -> &[ParamTuple] {
        &self.tuples
    }

    /// Matrix of generator `x_k`, `k` 1-based.
    pub fn generator_matrix(&self, k: usize) -> Option<&SquareMatrix> {
        k.checked_sub(1).and_then(|i| self.generators.get(i))
    }

    pub fn generator_matrices(&self) -> &[SquareMatrix] {
        &self.generators
    }

    /// All invariant violations, including coordinate collisions.
    pub fn validate(&self) -> Vec<Violation> {
        let raw: Vec<Vec<ExactComplex>> = self.tuples.iter().map(|t| t.entries().to_vec()).collect();
        validate_tuples(&raw)
    }

    /// Parses the config file format: one tuple per line, comma-separated
    /// scalars, `#` starts a comment.
    pub fn parse(text: &str, policy: Distinctness) -> Result<Self> {
        Self::with_policy(parse_tuples(text)?, policy)
    }

    pub fn to_config_text(&self) -> String {
        self.tuples.iter().map(|t| format!("{t}\n")).collect()
    }
}

/// Parses the config file format into raw tuples without validating them.
pub fn parse_tuples(text: &str) -> Result<Vec<Vec<ExactComplex>>> {
    let mut tuples = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tuple = body
            .split(',')
            .map(|s| {
                s.parse::<ExactComplex>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        tuples.push(tuple);
    }
    Ok(tuples)
}

/// The image of a word under the representation.
pub fn represent(w: &GroupWord, cfg: &RepConfig) -> Result<SquareMatrix> {
    if w.n_generators() != cfg.n_generators() {
        return Err(Error::GeneratorCountMismatch {
            left: w.n_generators(),
            right: cfg.n_generators(),
        });
    }
    let mut acc = SquareMatrix::identity(cfg.dim);
    for j in w.letters() {
        acc = &acc * &cfg.generators[j - 1];
    }
    Ok(acc)
}

/// Two distinct reduced words with the same matrix image. `word` is the
/// shortlex-smallest word of its image class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Collision {
    pub word: GroupWord,
    pub other: GroupWord,
}

/// Enumerates every reduced word up to `max_len`, maps it through the
/// representation, and reports words whose images coincide. An empty result
/// means the representation is injective on that ball.
pub fn relation_scan(cfg: &RepConfig, max_len: usize) -> Result<Vec<Collision>> {
    if max_len == 0 {
        return Err(Error::InvalidParameter("max_len must be at least 1".into()));
    }
    let n = cfg.n_generators();
    let count = words::count_reduced(n, max_len);
    if count > SCAN_LIMIT {
        return Err(Error::ScanTooLarge { count, limit: SCAN_LIMIT });
    }

    // Breadth-first: each level extends the previous one by a single generator,
    // so every image costs one matrix product.
    let identity = GroupWord::identity(n)?;
    let mut all = vec![(identity, SquareMatrix::identity(cfg.dim))];
    let mut frontier = 0..1;
    for _ in 0..max_len {
        let next: Vec<(GroupWord, SquareMatrix)> = all[frontier.clone()]
            .par_iter()
            .flat_map_iter(|(w, m)| {
                let last = w.letters().last();
                (1..=n).filter(move |&j| Some(j) != last).map(move |j| {
                    let step = GroupWord::generator(n, j).expect("index in range");
                    let word = w.multiply(&step).expect("same group");
                    (word, m * &cfg.generators[j - 1])
                })
            })
            .collect();
        let start = all.len();
        all.extend(next);
        frontier = start..all.len();
    }

    all.sort_by(|a, b| a.0.cmp(&b.0));
    let mut first_seen: HashMap<&SquareMatrix, usize> = HashMap::with_capacity(all.len());
    let mut collisions = Vec::new();
    for (idx, (word, image)) in all.iter().enumerate() {
        match first_seen.get(image) {
            Some(&rep) => collisions.push(Collision { word: all[rep].0.clone(), other: word.clone() }),
            None => {
                first_seen.insert(image, idx);
            }
        }
    }
    collisions.sort();
    Ok(collisions)
}

fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> ExactComplex {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    ExactComplex::real(ExactRational::new(num.into(), den.into()))
}

/// Draws one tuple satisfying the per-tuple invariants.
pub fn random_param_tuple<R: Rng>(rng: &mut R, dim: usize, magnitude_bound: i64) -> ParamTuple {
    loop {
        let entries: Vec<ExactComplex> = (0..dim).map(|_| random_rational(rng, magnitude_bound)).collect();
        if let Ok(t) = ParamTuple::new(entries) {
            return t;
        }
    }
}

/// Deterministic random configuration of `n_generators` strongly mutually
/// distinct rational tuples, numerators and denominators bounded by
/// `magnitude_bound` in absolute value.
pub fn sample_tuples(
    seed: u64,
    n_generators: usize,
    dim: usize,
    magnitude_bound: i64,
) -> Result<RepConfig> {
    if !(1..=MAX_GENERATORS).contains(&n_generators) {
        return Err(Error::InvalidGeneratorCount(n_generators));
    }
    if dim < 2 {
        return Err(Error::InvalidParameter(format!("dim must be at least 2, got {dim}")));
    }
    if magnitude_bound < 2 {
        return Err(Error::InvalidParameter(format!(
            "magnitude bound must be at least 2, got {magnitude_bound}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted: Vec<Vec<ExactComplex>> = Vec::with_capacity(n_generators);
    let mut rejected = 0;
    while accepted.len() < n_generators {
        let candidate: Vec<ExactComplex> =
            (0..dim).map(|_| random_rational(&mut rng, magnitude_bound)).collect();
        let fresh = tuple_violations(0, &candidate).is_empty()
            && accepted
                .iter()
                .all(|t| t.iter().zip(&candidate).all(|(x, y)| x != y));
        if fresh {
            accepted.push(candidate);
        } else {
            rejected += 1;
            if rejected >= SAMPLING_ATTEMPTS {
                return Err(Error::SamplingExhausted { attempts: rejected });
            }
        }
    }
    RepConfig::new(accepted)
}
