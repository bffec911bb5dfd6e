//! Exact integer polynomials in `y`, plus a bivariate companion used by the
//! subset-expansion oracle.
//!
//! Coefficients are `i128` and every arithmetic step is checked. The `try_*`
//! methods report overflow as [`PolyError::Overflow`]; the operator impls
//! (`+`, `-`, `*`) panic on overflow instead of wrapping.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Coeff = i128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
}

/// Dense univariate polynomial over the integers, ascending coefficients.
///
/// Always normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Coeff>", into = "Vec<Coeff>")]
pub struct IntPolynomial {
    coeffs: Vec<Coeff>,
}

impl From<Vec<Coeff>> for IntPolynomial {
    fn from(coeffs: Vec<Coeff>) -> Self {
        Self::from_coeffs(coeffs)
    }
}

impl From<IntPolynomial> for Vec<Coeff> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `y^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    /// Coefficient of `y^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Coeff {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Coeff {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.zip_with(other, Coeff::checked_add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.zip_with(other, Coeff::checked_sub)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Coeff, Coeff) -> Option<Coeff>) -> Result<Self, PolyError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| op(self.coeff(i), other.coeff(i)).ok_or(PolyError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0 as Coeff; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(PolyError::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(PolyError::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn try_scale(&self, c: Coeff) -> Result<Self, PolyError> {
        let coeffs =
            self.coeffs.iter().map(|&a| a.checked_mul(c).ok_or(PolyError::Overflow)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn try_neg(&self) -> Result<Self, PolyError> {
        self.try_scale(-1)
    }

    /// Multiply by `y^k`. Never overflows.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// `p.try_pow(k)` by repeated multiplication.
    pub fn try_pow(&self, k: u32) -> Result<Self, PolyError> {
        (0..k).try_fold(Self::one(), |acc, _| acc.try_mul(self))
    }

    /// True iff every coefficient of `other - self` is non-negative.
    pub fn coeffwise_leq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|i| self.coeff(i) <= other.coeff(i))
    }

    /// Exact quotient `q` with `q * divisor == self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let not_divisible = || PolyError::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() };
        let dlen = divisor.coeffs.len();
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return if self.is_zero() { Ok(Self::zero()) } else { Err(not_divisible()) };
        }
        let mut quot = vec![0 as Coeff; rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dlen - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(not_divisible());
            }
            let q = top / lead;
            quot[i] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let term = q.checked_mul(d).ok_or(PolyError::Overflow)?;
                rem[i + j] = rem[i + j].checked_sub(term).ok_or(PolyError::Overflow)?;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(not_divisible());
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Horner evaluation at an integer point.
    pub fn eval_at(&self, t: Coeff) -> Result<Coeff, PolyError> {
        self.coeffs.iter().rev().try_fold(0 as Coeff, |acc, &c| {
            acc.checked_mul(t).and_then(|v| v.checked_add(c)).ok_or(PolyError::Overflow)
        })
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers, e.g. `y^6+7y^5+22y^4+42y^3+57y^2+63y+64`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            if mag != 1 || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("y")?,
                _ => write!(f, "y^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                self.$try(rhs).expect("polynomial coefficient overflow")
            }
        }
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.try_neg().expect("polynomial coefficient overflow")
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl PartialOrd for IntPolynomial {
    /// The coefficientwise partial order.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.coeffwise_leq(other), other.coeffwise_leq(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

/// Sparse polynomial in `x` and `y`; keys are `(x-exponent, y-exponent)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPolynomial {
    terms: BTreeMap<(u32, u32), Coeff>,
}

impl BivarPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(x_exp: u32, y_exp: u32, c: Coeff) -> Self {
        let mut p = Self::zero();
        p.add_term(x_exp, y_exp, c).expect("single term cannot overflow");
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Coeff)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coeff(&self, x_exp: u32, y_exp: u32) -> Coeff {
        self.terms.get(&(x_exp, y_exp)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, x_exp: u32, y_exp: u32, c: Coeff) -> Result<(), PolyError> {
        let entry = self.terms.entry((x_exp, y_exp)).or_insert(0);
        *entry = entry.checked_add(c).ok_or(PolyError::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&(x_exp, y_exp));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, c)?;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                out.add_term(a1 + a2, b1 + b2, c1.checked_mul(c2).ok_or(PolyError::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Specialize `x = 1`.
    pub fn at_x1(&self) -> Result<IntPolynomial, PolyError> {
        let len = self.terms.keys().map(|&(_, b)| b as usize + 1).max().unwrap_or(0);
        let mut coeffs = vec![0 as Coeff; len];
        for ((_, b), c) in self.terms() {
            let slot = &mut coeffs[b as usize];
            *slot = slot.checked_add(c).ok_or(PolyError::Overflow)?;
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// Evaluate at an integer point.
    pub fn eval_at(&self, x: Coeff, y: Coeff) -> Result<Coeff, PolyError> {
        self.terms().try_fold(0 as Coeff, |acc, ((a, b), c)| {
            let xp = x.checked_pow(a).ok_or(PolyError::Overflow)?;
            let yp = y.checked_pow(b).ok_or(PolyError::Overflow)?;
            c.checked_mul(xp)
                .and_then(|v| v.checked_mul(yp))
                .and_then(|v| v.checked_add(acc))
                .ok_or(PolyError::Overflow)
        })
    }
}

impl fmt::Display for BivarPolynomial {
    /// Terms in descending `(x, y)` exponent order, e.g. `x^2+x+y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&(a, b), &c)) in self.terms.iter().rev().enumerate() {
            if c < 0 {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 || (a == 0 && b == 0) {
                write!(f, "{mag}")?;
            }
            for (var, exp) in [("x", a), ("y", b)] {
                match exp {
                    0 => {}
                    1 => f.write_str(var)?,
                    _ => write!(f, "{var}^{exp}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPolynomial({self})")
    }
}
