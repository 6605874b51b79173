//! The group algebra over the two-generator group and the scalar identities
//! its 2×2 representation satisfies.
//!
//! With `X1 = A2(t1, s1)`, `X2 = A2(t2, s2)` the anticommutator
//! `X1X2 + X2X1` is `ε0·I`, and everything else follows from that one scalar:
//! `(X1X2)^n + (X2X1)^n = f_n(ε0)·I`, `((X1X2)^k)⁻¹ = f_k(ε0)·I - (X1X2)^k`, and
//! for `T = X1 + X2`, `T² = (ε0 + 2)·I`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{ExactComplex, SquareMatrix};
use crate::lucas::{self, Backend};
use crate::rep::{represent, RepConfig};
use crate::words::{GroupWord, WordFormN2};

fn binary_generators(cfg: &RepConfig) -> Result<(&SquareMatrix, &SquareMatrix)> {
    match cfg.generator_matrices() {
        [x1, x2] if cfg.dim() == 2 => Ok((x1, x2)),
        _ => Err(Error::ConfigMismatch { n_generators: cfg.n_generators(), dim: cfg.dim() }),
    }
}

/// The scalar `ε0 = tr(X1X2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Epsilon0 {
    pub value: ExactComplex,
}

impl Epsilon0 {
    pub fn new(value: ExactComplex) -> Self {
        Self { value }
    }

    /// `ε0 = ±2` makes `X1X2` parabolic, so the representation cannot be
    /// trusted to be faithful.
    pub fn is_degenerate(&self) -> bool {
        self.value == ExactComplex::from(2) || self.value == ExactComplex::from(-2)
    }

    /// `2·t1·t2 + s1(1 - t2²)/s2 + s2(1 - t1²)/s1`.
    pub fn from_parameters(cfg: &RepConfig) -> Result<Self> {
        binary_generators(cfg)?;
        let [p, q] = cfg.tuples() else { unreachable!() };
        let (t1, s1) = (&p.entries()[0], &p.entries()[1]);
        let (t2, s2) = (&q.entries()[0], &q.entries()[1]);
        let one = ExactComplex::one();
        let first = &(&ExactComplex::from(2) * t1) * t2;
        let second = (s1 * &(&one - &(t2 * t2))).checked_div(s2)?;
        let third = (s2 * &(&one - &(t1 * t1))).checked_div(s1)?;
        Ok(Self::new(&(&first + &second) + &third))
    }

    /// `det X1 + det X2 - det(X1 + X2)`.
    pub fn from_determinants(cfg: &RepConfig) -> Result<Self> {
        let (x1, x2) = binary_generators(cfg)?;
        Ok(Self::new(&(&x1.det() + &x2.det()) - &(x1 + x2).det()))
    }

    /// `tr(X1X2)`.
    pub fn from_trace(cfg: &RepConfig) -> Result<Self> {
        let (x1, x2) = binary_generators(cfg)?;
        Ok(Self::new((x1 * x2).trace()))
    }
}

impl fmt::Display for Epsilon0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// `ε0` by the determinant formula, cross-checked against the parameter
/// formula and `tr(X1X2)`.
pub fn epsilon0(cfg: &RepConfig) -> Result<Epsilon0> {
    let by_det = Epsilon0::from_determinants(cfg)?;
    let by_params = Epsilon0::from_parameters(cfg)?;
    let by_trace = Epsilon0::from_trace(cfg)?;
    if by_det != by_params || by_det != by_trace {
        return Err(Error::Inconsistent(format!(
            "epsilon0 disagrees: determinants {by_det}, parameters {by_params}, trace {by_trace}"
        )));
    }
    Ok(by_det)
}

/// `(X1X2)^n + (X2X1)^n` by exact matrix powers.
pub fn frak_x_direct(cfg: &RepConfig, n: u64) -> Result<SquareMatrix> {
    let (x1, x2) = binary_generators(cfg)?;
    Ok(&(x1 * x2).pow(n) + &(x2 * x1).pow(n))
}

/// The scalar `c_n` with `(X1X2)^n + (X2X1)^n = c_n·I`, from
/// `c_1 = ε0`, `c_2 = ε0² - 2`, `c_n = ε0·c_{n-1} - c_{n-2}`.
pub fn frak_x_scalar(eps: &Epsilon0, n: u64) -> ExactComplex {
    assert!(n >= 1, "n must be positive");
    let e = &eps.value;
    let mut prev = e.clone();
    let mut cur = &(e * e) - &ExactComplex::from(2);
    match n {
        1 => prev,
        2 => cur,
        _ => {
            for _ in 3..=n {
                let next = &(e * &cur) - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}

/// `((X1X2)^k)⁻¹ = f_k(ε0)·I - (X1X2)^k`.
pub fn invert_even(cfg: &RepConfig, k: u64) -> Result<SquareMatrix> {
    let (x1, x2) = binary_generators(cfg)?;
    let eps = epsilon0(cfg)?;
    let fk = lucas::f_eval(k, &eps.value, Backend::ClosedForm);
    Ok(&SquareMatrix::scalar(2, &fk) - &(x1 * x2).pow(k))
}

/// How a represented group element's inverse was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseRule {
    /// `A⁻¹ = A`.
    SelfInverse,
    /// `A⁻¹ = r·I - A`.
    AffineRule(ExactComplex),
}

/// Inverse of `represent(w)` without numeric inversion: odd-length words and
/// the identity are involutions, and the even alternating words use the
/// affine rule with `r = f_k(ε0)`.
pub fn invert_group_matrix(w: &GroupWord, cfg: &RepConfig) -> Result<(SquareMatrix, InverseRule)> {
    if w.n_generators() != cfg.n_generators() {
        return Err(Error::GeneratorCountMismatch {
            left: w.n_generators(),
            right: cfg.n_generators(),
        });
    }
    binary_generators(cfg)?;
    let image = represent(w, cfg)?;
    match w.classify_n2()? {
        WordFormN2::AltPow12(k) | WordFormN2::AltPow21(k) => {
            let r = lucas::f_eval(k as u64, &epsilon0(cfg)?.value, Backend::ClosedForm);
            let inv = &SquareMatrix::scalar(2, &r) - &image;
            Ok((inv, InverseRule::AffineRule(r)))
        }
        _ => Ok((image, InverseRule::SelfInverse)),
    }
}

/// `T = X1 + X2`.
pub fn radial_operator(cfg: &RepConfig) -> Result<SquareMatrix> {
    let (x1, x2) = binary_generators(cfg)?;
    Ok(x1 + x2)
}

/// `tr(T^n)`: `2(ε0 + 2)^{n/2}` for even `n`, `0` for odd `n`.
pub fn radial_power_trace(eps: &Epsilon0, n: u64) -> ExactComplex {
    if n % 2 == 1 {
        return ExactComplex::zero();
    }
    let base = &eps.value + &ExactComplex::from(2);
    &ExactComplex::from(2) * &base.pow(n / 2)
}

/// A finite formal combination `Σ c_g · g` of group words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    n_generators: usize,
    terms: BTreeMap<GroupWord, ExactComplex>,
}

impl AlgebraElement {
    pub fn zero(n_generators: usize) -> Self {
        Self { n_generators, terms: BTreeMap::new() }
    }

    pub fn basis(word: GroupWord) -> Self {
        Self::term(word, ExactComplex::one())
    }

    pub fn term(word: GroupWord, coeff: ExactComplex) -> Self {
        let mut out = Self::zero(word.n_generators());
        out.add_term(word, &coeff);
        out
    }

    /// Builds an element from `(word, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(n_generators: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupWord, ExactComplex)>,
    {
        let mut out = Self::zero(n_generators);
        for (w, c) in terms {
            if w.n_generators() != n_generators {
                return Err(Error::GeneratorCountMismatch {
                    left: n_generators,
                    right: w.n_generators(),
                });
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, word: GroupWord, coeff: &ExactComplex) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &GroupWord) -> ExactComplex {
        self.terms.get(w).cloned().unwrap_or_else(ExactComplex::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n_generators == other.n_generators {
            Ok(())
        } else {
            Err(Error::GeneratorCountMismatch { left: self.n_generators, right: other.n_generators })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        let mut out = Self::zero(self.n_generators);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        out
    }

    /// Bilinear extension of word multiplication.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n_generators);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.multiply(v)?, &(a * b));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·[{w}]")?;
        }
        Ok(())
    }
}

/// `Σ c_g · represent(g)`; an algebra homomorphism into `M_n`.
pub fn represent_element(p: &AlgebraElement, cfg: &RepConfig) -> Result<SquareMatrix> {
    if p.n_generators() != cfg.n_generators() {
        return Err(Error::GeneratorCountMismatch {
            left: p.n_generators(),
            right: cfg.n_generators(),
        });
    }
    let mut acc = SquareMatrix::zeros(cfg.dim());
    for (w, c) in p.terms() {
        acc = &acc + &represent(w, cfg)?.scale(c);
    }
    Ok(acc)
}
