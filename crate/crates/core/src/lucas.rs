//! The Lucas triangle `g(n, k)` and the polynomial sequence
//!
//! ```text
//! f_n(z) = Σ_{k=0}^{⌊n/2⌋} (-1)^k g(n, k) z^{n-2k},    g(n, k) = n/(n-k) · C(n-k, k)
//! ```
//!
//! which satisfies `f_1 = z`, `f_2 = z² - 2`, `f_{n+1} = z·f_n - f_{n-1}`.
//! For 2×2 matrices `X1`, `X2` with `X1X2 + X2X1 = ε·I` these are exactly the
//! scalars in `(X1X2)^n + (X2X1)^n = f_n(ε)·I`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactmath::{ExactComplex, ExactRational};

/// Binomial coefficient via the running product `Π (n-i)/(i+1)`, exact at every step.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `g(n, k) = n/(n-k) · C(n-k, k)` for `0 ≤ k ≤ ⌊n/2⌋`, zero otherwise.
/// `n` must be at least 1.
pub fn g(n: u64, k: u64) -> BigUint {
    assert!(n >= 1, "g(n, k) is defined for n >= 1");
    if 2 * k > n {
        return BigUint::zero();
    }
    let scaled = BigUint::from(n) * binomial(n - k, k);
    let (q, r) = scaled.div_rem(&BigUint::from(n - k));
    debug_assert!(r.is_zero(), "g({n}, {k}) is integral");
    q
}

/// The other closed form, `(n/k) · C(n-k-1, k-1)`, as a rational. Undefined at
/// `k = 0`; returns `None` there and outside `1 ≤ k ≤ ⌊n/2⌋`.
pub fn g_via_lower_binomial(n: u64, k: u64) -> Option<BigRational> {
    if k == 0 || 2 * k > n {
        return None;
    }
    let c = BigInt::from(binomial(n - k - 1, k - 1));
    Some(BigRational::new(BigInt::from(n) * c, BigInt::from(k)))
}

/// Rows `1..=max_n` of the Lucas triangle, built from the Pascal-like rule
/// `g(n+1, k) = g(n, k) + g(n-1, k-1)` seeded with rows `[1]` and `[1, 2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasCoeffTable {
    rows: Vec<Vec<BigUint>>,
}

impl LucasCoeffTable {
    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    /// Row `n` (1-based): `g(n, 0), ..., g(n, ⌊n/2⌋)`.
    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        n.checked_sub(1).and_then(|i| self.rows.get(i)).map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.row(n).and_then(|r| r.get(k)).cloned().unwrap_or_default()
    }

    /// Row sums; these are the Lucas numbers 1, 3, 4, 7, 11, ...
    pub fn row_sums(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Space-separated rows, left-justified.
    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| join(r, " ") + "\n").collect()
    }

    pub fn to_csv(&self) -> String {
        self.rows.iter().map(|r| join(r, ",") + "\n").collect()
    }

    /// JSON array of arrays. Entries are bare integers, exact at any size.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("[{}]", join(r, ","))).collect();
        format!("[{}]", rows.join(","))
    }
}

fn join(row: &[BigUint], sep: &str) -> String {
    row.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn lucas_triangle(rows: usize) -> LucasCoeffTable {
    assert!(rows >= 1, "the triangle has at least one row");
    let mut out: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    if rows >= 2 {
        out.push(vec![BigUint::one(), BigUint::from(2u32)]);
    }
    while out.len() < rows {
        let n = out.len(); // computing row n + 1 from rows n and n - 1
        let cur = &out[n - 1];
        let prev = &out[n - 2];
        let width = n.div_ceil(2) + 1;
        let next = (0..width)
            .map(|k| {
                let a = cur.get(k).cloned().unwrap_or_default();
                let b = k.checked_sub(1).and_then(|j| prev.get(j)).cloned().unwrap_or_default();
                a + b
            })
            .collect();
        out.push(next);
    }
    LucasCoeffTable { rows: out }
}

/// `Σ_k g(n, k)`.
pub fn lucas_number(n: u64) -> BigUint {
    (0..=n / 2).map(|k| g(n, k)).sum()
}

/// `f_n` as a dense coefficient list, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPoly {
    coeffs: Vec<BigInt>,
}

impl FPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^power`, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn eval(&self, z: &ExactComplex) -> ExactComplex {
        self.coeffs.iter().rev().fold(ExactComplex::zero(), |acc, c| {
            let c = ExactComplex::real(ExactRational::from_integer(c.clone()));
            &(&acc * z) + &c
        })
    }
}

/// Formats like `z^4 - 4z^2 + 2`.
impl fmt::Display for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let mag = c.magnitude();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if power == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("z")?,
                p => write!(f, "z^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `f_n` with coefficient `(-1)^k g(n, k)` at degree `n - 2k`.
pub fn f_coeffs(n: u64) -> FPoly {
    assert!(n >= 1, "f_n is defined for n >= 1");
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let v = BigInt::from(g(n, k));
        coeffs[(n - 2 * k) as usize] = if k % 2 == 0 { v } else { -v };
    }
    FPoly::from_coeffs(coeffs)
}

/// How [`f_eval`] computes `f_n(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    /// Sum of the signed Lucas-triangle terms.
    ClosedForm,
    /// `f_1 = z`, `f_2 = z² - 2`, `f_{n+1} = z·f_n - f_{n-1}`.
    Recurrence,
}

pub fn f_eval(n: u64, z: &ExactComplex, backend: Backend) -> ExactComplex {
    assert!(n >= 1, "f_n is defined for n >= 1");
    match backend {
        Backend::ClosedForm => f_coeffs(n).eval(z),
        Backend::Recurrence => {
            let mut prev = z.clone();
            if n == 1 {
                return prev;
            }
            let mut cur = &(z * z) - &ExactComplex::from(2);
            for _ in 2..n {
                let next = &(z * &cur) - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn poly(xs: &[i64]) -> FPoly {
        FPoly::from_coeffs(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn g_examples() {
        assert_eq!(g(1, 0), BigUint::from(1u32));
        assert_eq!(g(2, 1), BigUint::from(2u32));
        assert_eq!(g(6, 2), BigUint::from(9u32));
        assert_eq!(g(5, 3), BigUint::zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn triangle_rows() {
        let t = lucas_triangle(4);
        assert_eq!(t.rows(), &[u(&[1]), u(&[1, 2]), u(&[1, 3]), u(&[1, 4, 2])]);
        assert_eq!(lucas_triangle(10).row(10).unwrap(), u(&[1, 10, 35, 50, 25, 2]));
        assert_eq!(lucas_triangle(1).rows(), &[u(&[1])]);
        assert_eq!(t.get(4, 1), BigUint::from(4u32));
        assert_eq!(t.get(4, 5), BigUint::zero());
        assert!(t.row(0).is_none());
    }

    #[test]
    fn triangle_formats() {
        let t = lucas_triangle(4);
        assert_eq!(t.to_text(), "1\n1 2\n1 3\n1 4 2\n");
        assert_eq!(t.to_csv(), "1\n1,2\n1,3\n1,4,2\n");
        assert_eq!(lucas_triangle(1).to_json(), "[[1]]");
        assert_eq!(t.to_json(), "[[1],[1,2],[1,3],[1,4,2]]");
    }

    #[test]
    fn named_polynomials() {
        assert_eq!(f_coeffs(1), poly(&[0, 1]));
        assert_eq!(f_coeffs(2), poly(&[-2, 0, 1]));
        assert_eq!(f_coeffs(3), poly(&[0, -3, 0, 1]));
        assert_eq!(f_coeffs(4), poly(&[2, 0, -4, 0, 1]));
        assert_eq!(f_coeffs(4).to_string(), "z^4 - 4z^2 + 2");
        assert_eq!(f_coeffs(1).to_string(), "z");
        assert_eq!(f_coeffs(3).degree(), 3);
    }

    #[test]
    fn evaluation_examples() {
        for backend in [Backend::ClosedForm, Backend::Recurrence] {
            assert_eq!(f_eval(3, &2.into(), backend), 2.into());
            assert_eq!(f_eval(2, &(-7).into(), backend), 47.into());
            assert_eq!(f_eval(3, &(-7).into(), backend), (-322).into());
            let z: ExactComplex = "3/7-2/5i".parse().unwrap();
            assert_eq!(f_eval(1, &z, backend), z);
        }
    }

    #[test]
    fn lucas_numbers() {
        assert_eq!(lucas_number(1), BigUint::from(1u32));
        assert_eq!(lucas_number(4), BigUint::from(7u32));
        assert_eq!(lucas_number(7), BigUint::from(29u32));
        assert_eq!(lucas_triangle(7).row_sums(), u(&[1, 3, 4, 7, 11, 18, 29]));
    }

    #[test]
    fn lower_binomial_form() {
        assert_eq!(g_via_lower_binomial(6, 0), None);
        assert_eq!(g_via_lower_binomial(6, 4), None);
        assert_eq!(g_via_lower_binomial(6, 2), Some(BigRational::from_integer(9.into())));
    }
}
