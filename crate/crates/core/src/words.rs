//! Elements of the free product of `N` copies of the order-2 cyclic group,
//! stored as reduced words over the generators `x1..xN`.
//!
//! Every generator is its own inverse, so a word is reduced exactly when no
//! two adjacent letters coincide. Reduction happens at construction; an
//! unreduced word is never stored.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupWord {
    n_generators: u8,
    // 1-based generator indices, no two neighbours equal.
    letters: Vec<u8>,
}

fn check_generators(n: usize) -> Result<u8> {
    if (1..=MAX_GENERATORS).contains(&n) {
        Ok(n as u8)
    } else {
        Err(Error::InvalidGeneratorCount(n))
    }
}

/// Appends `letter` to an already reduced stack, cancelling `x·x = e`.
fn push_reduced(stack: &mut Vec<u8>, letter: u8) {
    if stack.last() == Some(&letter) {
        stack.pop();
    } else {
        stack.push(letter);
    }
}

impl GroupWord {
    pub fn identity(n_generators: usize) -> Result<Self> {
        Ok(Self { n_generators: check_generators(n_generators)?, letters: Vec::new() })
    }

    /// The single-letter word `x_j` (1-based).
    pub fn generator(n_generators: usize, j: usize) -> Result<Self> {
        Self::from_letters(n_generators, &[j])
    }

    /// Builds a word from raw letters, reducing as it goes.
    pub fn from_letters(n_generators: usize, letters: &[usize]) -> Result<Self> {
        Self::normalize(letters.iter().map(|&j| (j, 1)), n_generators)
    }

    /// Reduces a sequence of `(generator, exponent)` pairs. Exponents are taken
    /// mod 2 (negative exponents included, since `x⁻¹ = x`), then adjacent equal
    /// letters cancel until none remain.
    pub fn normalize<I>(raw: I, n_generators: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let n = check_generators(n_generators)?;
        let mut stack = Vec::new();
        for (j, exp) in raw {
            if j == 0 || j > n_generators {
                return Err(Error::BadGeneratorIndex { index: j, n_generators });
            }
            if exp.rem_euclid(2) == 1 {
                push_reduced(&mut stack, j as u8);
            }
        }
        Ok(Self { n_generators: n, letters: stack })
    }

    /// Parses the word syntax `x1 x2^3 x1^-1` (bare integers allowed, `e` for the identity).
    pub fn parse(s: &str, n_generators: usize) -> Result<Self> {
        Self::normalize(parse_raw(s)?, n_generators)
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators as usize
    }

    /// 1-based generator indices of the reduced word.
    pub fn letters(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.letters.iter().map(|&l| l as usize)
    }

    /// Word length `|g|`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Same as [`GroupWord::is_identity`].
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.n_generators == other.n_generators {
            Ok(())
        } else {
            Err(Error::GeneratorCountMismatch {
                left: self.n_generators(),
                right: other.n_generators(),
            })
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Self { n_generators: self.n_generators, letters })
    }

    /// Reverses the word; each generator is self-inverse.
    pub fn invert(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { n_generators: self.n_generators, letters }
    }

    /// Which of the seven normal forms of the two-generator group this word has.
    pub fn classify_n2(&self) -> Result<WordFormN2> {
        if self.n_generators != 2 {
            return Err(Error::NotBinaryGroup(self.n_generators()));
        }
        let len = self.letters.len();
        let k = len / 2;
        let form = match (self.letters.first(), len.is_multiple_of(2)) {
            (None, _) => WordFormN2::Identity,
            (Some(1), _) if len == 1 => WordFormN2::X1,
            (Some(2), _) if len == 1 => WordFormN2::X2,
            (Some(1), true) => WordFormN2::AltPow12(k),
            (Some(1), false) => WordFormN2::AltPow12X1(k),
            (Some(2), true) => WordFormN2::AltPow21(k),
            (Some(2), false) => WordFormN2::AltPow21X2(k),
            _ => unreachable!("letters are 1 or 2 when N = 2"),
        };
        Ok(form)
    }
}

/// Shortlex: shorter words first, then lexicographic on letters.
impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n_generators
            .cmp(&other.n_generators)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

/// Parses word syntax into unreduced `(generator, exponent)` pairs.
pub fn parse_raw(s: &str) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    for token in s.split_whitespace() {
        let bad = || Error::Parse(format!("bad word token {token:?}"));
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad())?),
            None => (token, 1),
        };
        if base == "e" {
            continue;
        }
        let digits = base.strip_prefix('x').unwrap_or(base);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let j = digits.parse::<usize>().map_err(|_| bad())?;
        out.push((j, exp));
    }
    Ok(out)
}

/// Largest generator index mentioned in a word string, or 0 for the identity.
pub fn max_generator_index(s: &str) -> Result<usize> {
    Ok(parse_raw(s)?.iter().map(|&(j, _)| j).max().unwrap_or(0))
}

/// The seven shapes an element of the two-generator group can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordFormN2 {
    Identity,
    X1,
    X2,
    /// `(x1 x2)^k`
    AltPow12(usize),
    /// `(x1 x2)^k x1`
    AltPow12X1(usize),
    /// `(x2 x1)^k`
    AltPow21(usize),
    /// `(x2 x1)^k x2`
    AltPow21X2(usize),
}

impl WordFormN2 {
    /// Odd-length forms are their own inverses.
    pub fn is_self_inverse(self) -> bool {
        !matches!(self, Self::AltPow12(_) | Self::AltPow21(_))
    }

    /// Rebuilds the reduced word this form denotes.
    pub fn to_word(self) -> GroupWord {
        let (first, len) = match self {
            Self::Identity => (1, 0),
            Self::X1 => (1, 1),
            Self::X2 => (2, 1),
            Self::AltPow12(k) => (1, 2 * k),
            Self::AltPow12X1(k) => (1, 2 * k + 1),
            Self::AltPow21(k) => (2, 2 * k),
            Self::AltPow21X2(k) => (2, 2 * k + 1),
        };
        let letters = (0..len).map(|i| if i % 2 == 0 { first } else { 3 - first }).collect();
        GroupWord { n_generators: 2, letters }
    }
}

impl fmt::Display for WordFormN2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => f.write_str("Identity"),
            Self::X1 => f.write_str("X1"),
            Self::X2 => f.write_str("X2"),
            Self::AltPow12(k) => write!(f, "AltPow12({k})"),
            Self::AltPow12X1(k) => write!(f, "AltPow12X1({k})"),
            Self::AltPow21(k) => write!(f, "AltPow21({k})"),
            Self::AltPow21X2(k) => write!(f, "AltPow21X2({k})"),
        }
    }
}

/// Number of reduced words of length `≤ max_len` over `n` generators.
pub fn count_reduced(n_generators: usize, max_len: usize) -> u128 {
    let n = n_generators as u128;
    let mut total: u128 = 1;
    let mut level: u128 = 1;
    for len in 1..=max_len {
        level = if len == 1 { n } else { level.saturating_mul(n.saturating_sub(1)) };
        if level == 0 {
            break;
        }
        total = total.saturating_add(level);
    }
    total
}

/// All reduced words of length `≤ max_len`, in shortlex order.
pub fn enumerate_reduced(n_generators: usize, max_len: usize) -> Result<Vec<GroupWord>> {
    let n = check_generators(n_generators)?;
    let mut out = vec![GroupWord { n_generators: n, letters: Vec::new() }];
    let mut frontier = 0..1;
    for _ in 0..max_len {
        let start = out.len();
        for idx in frontier.clone() {
            for j in 1..=n {
                if out[idx].letters.last() == Some(&j) {
                    continue;
                }
                let mut letters = out[idx].letters.clone();
                letters.push(j);
                out.push(GroupWord { n_generators: n, letters });
            }
        }
        frontier = start..out.len();
    }
    Ok(out)
}
