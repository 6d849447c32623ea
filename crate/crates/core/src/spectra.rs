//! Exact integer characteristic polynomials, integral spectrum extraction,
//! and multiset identity verification. No floating point anywhere.
//!
//! Characteristic polynomials are computed by evaluation–interpolation:
//! `det(tI − A)` is evaluated exactly at `|V|+1` integer points by
//! fraction-free Bareiss elimination over big integers, then interpolated over
//! the rationals and checked to be integral and monic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("interpolation produced a non-integer coefficient at degree {0}")]
    NonIntegral(usize),
    #[error("duplicate interpolation point {0}")]
    DuplicatePoint(i64),
}

/// A polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree with a nonzero leading coefficient (empty = zero).
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Serializes as the list of coefficients in ascending degree, as decimal
/// strings (JSON numbers cannot hold arbitrary precision).
impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Π (x − r)^m` over the given roots.
    pub fn from_roots(roots: &[(i64, usize)]) -> Self {
        let mut p = Self::one();
        for &(r, m) in roots {
            let factor = Self::from_coeffs(vec![BigInt::from(-r), BigInt::one()]);
            for _ in 0..m {
                p = p.mul(&factor);
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact polynomial division; `None` unless the remainder is zero.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return None;
        }
        let qlen = rem.len() - dd;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return None;
            }
            let factor = &top / lead;
            for (j, c) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[k + j] -= &factor * c;
            }
            q[k] = factor;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(q))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Human-readable form in the given variable, descending powers.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if k == 0 {
                mag.to_string()
            } else {
                let var_pow = if k == 1 {
                    var.to_string()
                } else {
                    format!("{}^{}", var, k)
                };
                if mag.is_one() {
                    var_pow
                } else {
                    format!("{}{}", mag, var_pow)
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{}", body)
                } else {
                    body
                });
            } else {
                parts.push(format!(
                    "{}{}",
                    if c.is_negative() { " - " } else { " + " },
                    body
                ));
            }
        }
        parts.concat()
    }

    /// Integer roots with multiplicities, extracted by repeated synthetic
    /// division; the root-free cofactor is returned alongside. Works for
    /// non-monic input (integer roots divide the constant term regardless).
    pub fn integer_roots(&self) -> (BTreeMap<i64, usize>, IntPolynomial) {
        let mut roots: BTreeMap<i64, usize> = BTreeMap::new();
        if self.is_zero() {
            return (roots, Self::zero());
        }
        let mut p = self.clone();
        // Strip x^k.
        while p.coeffs.first().is_some_and(Zero::is_zero) {
            p.coeffs.remove(0);
            *roots.entry(0).or_insert(0) += 1;
        }
        if p.degree() == Some(0) {
            return (roots, p);
        }
        let candidates: Vec<i64> = divisors_of(&p.coeffs[0]);
        let mut signed: Vec<i64> = candidates.iter().map(|&d| -d).collect();
        signed.sort_unstable();
        signed.extend(candidates);
        for r in signed {
            let factor = Self::from_coeffs(vec![BigInt::from(-r), BigInt::one()]);
            while p.degree().unwrap_or(0) >= 1 && p.eval_i64(r).is_zero() {
                p = p.exact_div(&factor).expect("r is a root, division exact");
                *roots.entry(r).or_insert(0) += 1;
            }
        }
        (roots, p)
    }

    /// Factored form over the integers, ascending roots, residual last:
    /// `(x+3)(x+2)^6x^4(x-2)^6(x-3)` style.
    pub fn factored_string(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (roots, residual) = self.integer_roots();
        let mut s = String::new();
        for (&r, &m) in &roots {
            let base = match r.cmp(&0) {
                std::cmp::Ordering::Less => format!("({}+{})", var, -r),
                std::cmp::Ordering::Equal => var.to_string(),
                std::cmp::Ordering::Greater => format!("({}-{})", var, r),
            };
            s.push_str(&base);
            if m > 1 {
                s.push_str(&format!("^{}", m));
            }
        }
        if !residual.is_one() || roots.is_empty() {
            if residual.degree() == Some(0) {
                let c = &residual.coeffs[0];
                if s.is_empty() {
                    s = c.to_string();
                } else if *c == BigInt::from(-1) {
                    s = format!("-{}", s);
                } else if !c.is_one() {
                    s = format!("{}·{}", c, s);
                }
            } else {
                s.push_str(&format!(
                    "({})",
                    residual.to_string_var(var).replace(' ', "")
                ));
            }
        }
        s
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.to_string_var("x"))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

/// Divisors of |n| that fit in i64, ascending, by trial division. Intended for
/// the constant terms arising from graph spectra, which are smooth and small.
fn divisors_of(n: &BigInt) -> Vec<i64> {
    let mut m = n.abs();
    if m.is_zero() {
        return vec![];
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= m && d <= limit {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divisors: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divisors {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk = &pk * &p;
            }
        }
        divisors = next;
    }
    let mut out: Vec<i64> = divisors
        .into_iter()
        .filter_map(|d| i64::try_from(&d).ok())
        .collect();
    out.sort_unstable();
    out
}

/// Multiset of integer eigenvalues plus the integer-root-free residual factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumMultiset {
    pub entries: BTreeMap<i64, usize>,
    pub residual: IntPolynomial,
}

impl SpectrumMultiset {
    pub fn from_entries(entries: &[(i64, usize)]) -> Self {
        SpectrumMultiset {
            entries: entries.iter().copied().collect(),
            residual: IntPolynomial::one(),
        }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, k: i64) -> usize {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    pub fn is_fully_integral(&self) -> bool {
        self.residual.is_one()
    }

    /// Multiset union of the integral parts; residuals multiply.
    pub fn union(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        for (&k, &m) in &other.entries {
            *entries.entry(k).or_insert(0) += m;
        }
        SpectrumMultiset {
            entries,
            residual: self.residual.mul(&other.residual),
        }
    }
}

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, m)| format!("{}:{}", k, m))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))?;
        if !self.residual.is_one() {
            write!(f, " · residual {}", self.residual.to_string_var("x"))?;
        }
        Ok(())
    }
}

/// All integer roots of a monic polynomial, with multiplicities, plus the
/// residual (which has no integer roots).
pub fn integral_spectrum(p: &IntPolynomial) -> Result<SpectrumMultiset, SpectraError> {
    if !p.is_monic() {
        return Err(SpectraError::NotMonic);
    }
    let (entries, residual) = p.integer_roots();
    Ok(SpectrumMultiset { entries, residual })
}

/// Fraction-free Bareiss determinant with row pivoting. Consumes the matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let head = std::mem::take(&mut row[k]);
            if head.is_zero() {
                for j in k + 1..n {
                    let t = &pivot_row[k] * &row[j];
                    row[j] = t / &prev;
                }
            } else {
                for j in k + 1..n {
                    let t = &pivot_row[k] * &row[j] - &head * &pivot_row[j];
                    row[j] = t / &prev;
                }
            }
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Newton interpolation over the rationals through integer points, verified
/// to produce integer coefficients.
pub fn interpolate_integer_poly(xs: &[i64], ys: &[BigInt]) -> Result<IntPolynomial, SpectraError> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    for i in 0..n {
        for j in i + 1..n {
            if xs[i] == xs[j] {
                return Err(SpectraError::DuplicatePoint(xs[i]));
            }
        }
    }
    // Newton divided differences.
    let mut dd: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = BigRational::from_integer(BigInt::from(xs[i] - xs[i - level]));
            let diff = &dd[i] - &dd[i - 1];
            dd[i] = diff / dx;
        }
    }
    // Expand Σ dd[k] · Π_{j<k} (x − x_j).
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); n];
    let mut basis: Vec<BigRational> = vec![BigRational::one()];
    for (k, c) in dd.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            acc[j] += c * b;
        }
        if k + 1 < n {
            // basis *= (x − x_k)
            let shift = BigRational::from_integer(BigInt::from(xs[k]));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] += b;
                next[j] -= b * &shift;
            }
            basis = next;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for (k, c) in acc.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(SpectraError::NonIntegral(k));
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// `det(tI − A)` for one integer `t`, exactly.
pub fn char_value_at(a: &[Vec<i64>], t: i64) -> BigInt {
    let n = a.len();
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(t - a[i][j])
                    } else {
                        BigInt::from(-a[i][j])
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(m)
}

/// Exact characteristic polynomial `det(xI − A)` of the adjacency matrix;
/// monic of degree `|V|`.
pub fn charpoly(g: &Graph) -> IntPolynomial {
    let a = g.adjacency_matrix();
    charpoly_of_matrix(&a)
}

pub fn charpoly_of_matrix(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let half = (n / 2) as i64;
    let xs: Vec<i64> = (0..=n as i64).map(|j| j - half).collect();
    let ys: Vec<BigInt> = xs.iter().map(|&t| char_value_at(a, t)).collect();
    let p = interpolate_integer_poly(&xs, &ys).expect("det(tI−A) has integer coefficients");
    debug_assert!(p.is_monic() && p.degree() == Some(n));
    p
}

/// Certificate for a product identity `Π lhs = Π rhs`.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub equal: bool,
    pub lhs_product: IntPolynomial,
    pub rhs_product: IntPolynomial,
}

/// Verifies `Π lhs_i = Π rhs_i` by exact expansion; the certificate carries
/// both expanded coefficient vectors.
pub fn verify_charpoly_identity(lhs: &[IntPolynomial], rhs: &[IntPolynomial]) -> IdentityCheck {
    let lhs_product = lhs.iter().fold(IntPolynomial::one(), |acc, p| acc.mul(p));
    let rhs_product = rhs.iter().fold(IntPolynomial::one(), |acc, p| acc.mul(p));
    IdentityCheck {
        equal: lhs_product == rhs_product,
        lhs_product,
        rhs_product,
    }
}
