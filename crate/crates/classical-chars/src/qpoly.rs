//! Exact univariate polynomial arithmetic in the indeterminate `q`.
//!
//! `QPoly` is the universal currency of this crate: every character degree,
//! group order, index, and bound is a dense polynomial in `q` with exact
//! rational coefficients. Rational (not integer) coefficients are required
//! because degree formulas legitimately divide by constants such as `2(q+1)`
//! while still evaluating to integers at every prime power.
//!
//! All arithmetic is exact; no floating point appears anywhere in this crate.
//! Division is *exact division*: a nonzero remainder is a hard
//! [`QPolyError::NonExactDivision`] error, because every division performed by
//! the degree formulas is mathematically exact — inexactness always signals a
//! transcription bug, never a value to round.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors produced by polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QPolyError {
    /// Exact division left a nonzero remainder.
    #[error("non-exact polynomial division: {num} by {den}")]
    NonExactDivision { num: String, den: String },
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// A value expected to be an integer was not.
    #[error("expected integral value, got {0}")]
    NonIntegralValue(String),
}

/// A dense univariate polynomial in `q` with exact rational coefficients.
///
/// Invariant: `coeffs` is normalized — the highest-index coefficient is
/// nonzero, and the zero polynomial is the empty vector. Index `i` holds the
/// coefficient of `q^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

/// Convenience constructor for a `BigRational` from machine integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl QPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The constant polynomial with integer value `c`.
    pub fn int(c: i64) -> Self {
        QPoly::constant(BigRational::from(BigInt::from(c)))
    }

    /// The monomial `c · q^exp`.
    pub fn monomial(exp: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); exp + 1];
        coeffs[exp] = c;
        QPoly { coeffs }
    }

    /// The monomial `q^exp`.
    pub fn q_pow(exp: usize) -> Self {
        QPoly::monomial(exp, BigRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QPoly::q_pow(1)
    }

    /// `q^exp + c` for a small integer `c` — the ubiquitous `q^e ± 1` factors.
    pub fn q_pow_plus(exp: usize, c: i64) -> Self {
        &QPoly::q_pow(exp) + &QPoly::int(c)
    }

    /// Build a polynomial from machine-integer coefficients in ascending
    /// degree order.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        let mut p = QPoly {
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Coefficient of `q^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Whether the polynomial is a monomial `c·q^e` (nonzero single term).
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Exact division: returns `c` with `c·den = self`, or
    /// [`QPolyError::NonExactDivision`] if the remainder is nonzero.
    pub fn exact_div(&self, den: &QPoly) -> Result<QPoly, QPolyError> {
        if den.is_zero() {
            return Err(QPolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut rem = self.clone();
        let dd = den.degree().expect("nonzero");
        let dl = den.leading_coefficient().expect("nonzero").clone();
        let nd = rem.degree().expect("nonzero");
        if nd < dd {
            return Err(QPolyError::NonExactDivision {
                num: self.to_string(),
                den: den.to_string(),
            });
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        while !rem.is_zero() && rem.degree().unwrap() >= dd {
            let rd = rem.degree().unwrap();
            let c = rem.leading_coefficient().unwrap() / &dl;
            quot[rd - dd] = c.clone();
            let sub = &QPoly::monomial(rd - dd, c) * den;
            rem = &rem - &sub;
        }
        if !rem.is_zero() {
            return Err(QPolyError::NonExactDivision {
                num: self.to_string(),
                den: den.to_string(),
            });
        }
        let mut q = QPoly { coeffs: quot };
        q.normalize();
        Ok(q)
    }

    /// Evaluate at an arbitrary-precision integer point, exactly.
    pub fn eval(&self, q0: &BigInt) -> BigRational {
        let mut acc = BigRational::zero();
        let q0r = BigRational::from(q0.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc * &q0r + c;
        }
        acc
    }

    /// Evaluate at `q0` and assert the result is an integer.
    pub fn eval_int(&self, q0: &BigInt) -> Result<BigInt, QPolyError> {
        let v = self.eval(q0);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(QPolyError::NonIntegralValue(v.to_string()))
        }
    }

    /// Compare the exact values of two polynomials at `q0`.
    pub fn cmp_at(&self, other: &QPoly, q0: &BigInt) -> Ordering {
        self.eval(q0).cmp(&other.eval(q0))
    }

    /// Substitute `q → q^k` (used for factors living over an extension field).
    pub fn substitute_q_power(&self, k: usize) -> QPoly {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    /// Substitute `q → −q`, then normalize the sign so the leading
    /// coefficient is positive (the unitary-from-linear degree transform).
    pub fn ennola(&self) -> QPoly {
        let mut coeffs: Vec<BigRational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        if matches!(coeffs.last(), Some(c) if c.is_negative()) {
            for c in &mut coeffs {
                *c = -c.clone();
            }
        }
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    /// Product of a sequence of polynomials.
    pub fn product<'a>(it: impl IntoIterator<Item = &'a QPoly>) -> QPoly {
        it.into_iter().fold(QPoly::one(), |acc, p| &acc * p)
    }

    /// Serialize as the JSON-facing coefficient-string vector, ascending
    /// degree, each coefficient as `"p"` or `"p/q"`.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Parse the coefficient-string vector form.
    pub fn from_coeff_strings(strs: &[String]) -> Result<QPoly, String> {
        let mut coeffs = Vec::with_capacity(strs.len());
        for s in strs {
            let c: BigRational = s
                .trim()
                .parse()
                .map_err(|e| format!("bad coefficient {s:?}: {e}"))?;
            coeffs.push(c);
        }
        let mut p = QPoly { coeffs };
        p.normalize();
        Ok(p)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for QPoly {
    /// Human-readable form, descending degree, e.g. `q^2 - 1` or `1/2*q^3 + q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        QPoly::from_coeff_strings(&strs).map_err(serde::de::Error::custom)
    }
}
