//! Coefficient rings for skein computations.
//!
//! Two rings are provided: [`LaurentPoly`], the ring Z[A, A^-1] of integer
//! Laurent polynomials in the variable A, and [`RatFunc`], the field of
//! fractions Q(A) represented as normalized quotients of Laurent polynomials.
//! Both implement the [`Coeff`] trait used by the bracket evaluator and the
//! presentation builder.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors arising from ring arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    /// Exact division was requested but the dividend is not a multiple of the
    /// divisor in Z[A, A^-1].
    #[error("polynomial {0} is not divisible by {1}")]
    NotDivisible(String, String),
    /// Division by the zero polynomial or zero rational function.
    #[error("division by zero")]
    DivisionByZero,
}

/// Common interface for coefficient rings.
///
/// `try_div` is exact division: in `LaurentPoly` it fails unless the quotient
/// exists in the ring, in `RatFunc` it fails only for a zero divisor.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The monomial A^exp.
    fn a_pow(exp: i64) -> Self;
    /// Whether `self` has a multiplicative inverse in the ring.
    fn is_unit(&self) -> bool;
    fn try_div(&self, other: &Self) -> Result<Self, RingError>;
    /// Value of a trivial circle: -A^2 - A^-2.
    fn delta() -> Self {
        Self::a_pow(2).add(&Self::a_pow(-2)).neg()
    }
}

/// Integer Laurent polynomial in A.
///
/// Invariant: `terms` maps exponent to a nonzero coefficient; the zero
/// polynomial has an empty map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The single term `coeff * A^exp`.
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        Self::monomial_big(BigInt::from(coeff), exp)
    }

    pub fn monomial_big(coeff: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// The monomial A^exp.
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    pub fn from_terms(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(exp, coeff) in pairs {
            p = p.add(&Self::monomial(coeff, exp));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// Coefficient of A^exp (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplies by A^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let entry = terms.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales every coefficient by an integer.
    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * &k)).collect(),
        }
    }

    /// Gcd of the coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// Divides every coefficient by `d`; `d` must divide the content.
    fn divide_coeffs(&self, d: &BigInt) -> Self {
        debug_assert!(!d.is_zero());
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / d)).collect(),
        }
    }

    /// Whether `self` is a unit of Z[A, A^-1], i.e. of the form ±A^m.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs() == BigInt::from(1)
    }

    /// Factors `self = unit * normal` with `unit = ±A^m` and `normal` having
    /// minimum exponent 0 and positive leading coefficient.
    ///
    /// Returns `(unit, normal)`; the zero polynomial yields `(1, 0)`.
    pub fn unit_normal_form(&self) -> (Self, Self) {
        let Some(min) = self.min_exp() else {
            return (Self::one(), Self::zero());
        };
        let max = self.max_exp().unwrap();
        let negative = self.coeff(max).is_negative();
        let sign = if negative { -1 } else { 1 };
        let unit = Self::monomial(sign, min);
        let mut normal = self.shift(-min);
        if negative {
            normal = normal.neg();
        }
        (unit, normal)
    }

    /// Exact division in Z[A, A^-1]; fails unless `other` divides `self`.
    pub fn divide_exact(&self, other: &Self) -> Result<Self, RingError> {
        if other.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_divisible = || RingError::NotDivisible(self.to_string(), other.to_string());
        let d_max = other.max_exp().unwrap();
        let d_lead = other.coeff(d_max);
        // Lower bound on quotient exponents: the bottom terms of dividend and
        // divisor multiply, so any valid quotient has min exponent exactly
        // min(self) - min(other).
        let min_allowed = self.min_exp().unwrap() - other.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_max = rem.max_exp().unwrap();
            let q_exp = r_max - d_max;
            if q_exp < min_allowed {
                return Err(not_divisible());
            }
            let r_lead = rem.coeff(r_max);
            let (q, r) = r_lead.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            let term = Self::monomial_big(q, q_exp);
            rem = rem.sub(&term.mul(other));
            quot = quot.add(&term);
        }
        Ok(quot)
    }

    /// Pseudo-remainder of `self` by `other` in Z[A] (both with min exponent
    /// >= 0, `other` nonzero). The result is an associate of the true
    /// remainder up to an integer factor.
    fn pseudo_rem(&self, other: &Self) -> Self {
        let d_max = other.max_exp().unwrap();
        let d_lead = other.coeff(d_max);
        let mut r = self.clone();
        while let Some(r_max) = r.max_exp() {
            if r_max < d_max {
                break;
            }
            let r_lead = r.coeff(r_max);
            let scaled = LaurentPoly {
                terms: r.terms.iter().map(|(e, c)| (*e, c * &d_lead)).collect(),
            };
            let sub = other.shift(r_max - d_max);
            let sub = LaurentPoly {
                terms: sub.terms.iter().map(|(e, c)| (*e, c * &r_lead)).collect(),
            };
            r = scaled.sub(&sub);
        }
        r
    }

    /// Gcd in Z[A, A^-1], normalized to minimum exponent 0 and positive
    /// leading coefficient. Computed by a primitive pseudo-remainder sequence.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.unit_normal_form().1;
        }
        if b.is_zero() {
            return a.unit_normal_form().1;
        }
        let a0 = a.shift(-a.min_exp().unwrap());
        let b0 = b.shift(-b.min_exp().unwrap());
        let content = a0.content().gcd(&b0.content());
        let mut p = a0.divide_coeffs(&a0.content());
        let mut q = b0.divide_coeffs(&b0.content());
        if p.max_exp() < q.max_exp() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = p.pseudo_rem(&q);
            let r = if r.is_zero() {
                r
            } else {
                let r = r.shift(-r.min_exp().unwrap());
                r.divide_coeffs(&r.content())
            };
            p = q;
            q = r;
        }
        let (_, normal) = p.unit_normal_form();
        LaurentPoly {
            terms: normal.terms.iter().map(|(e, c)| (*e, c * &content)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coeff) in self.terms.iter().rev() {
            let negative = coeff.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let one = BigInt::from(1);
            match (*exp, mag == one) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{}*A", mag)?,
                (e, true) => write!(f, "A^{}", e)?,
                (e, false) => write!(f, "{}*A^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        LaurentPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn a_pow(exp: i64) -> Self {
        LaurentPoly::a_pow(exp)
    }
    fn is_unit(&self) -> bool {
        LaurentPoly::is_unit(self)
    }
    fn try_div(&self, other: &Self) -> Result<Self, RingError> {
        self.divide_exact(other)
    }
}

/// Rational function in A, held as a normalized fraction of Laurent
/// polynomials.
///
/// Invariants: `den` is nonzero with minimum exponent 0 and positive leading
/// coefficient; the primitive parts of `num` and `den` are coprime in Z[A];
/// the integer contents of `num` and `den` are coprime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one()).expect("unit denominator")
    }

    /// Builds `num / den`, reducing to normal form. Fails iff `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = LaurentPoly::gcd(&num, &den);
        let num = num.divide_exact(&g).expect("gcd divides numerator");
        let den = den.divide_exact(&g).expect("gcd divides denominator");
        let m = den.min_exp().unwrap();
        let mut num = num.shift(-m);
        let mut den = den.shift(-m);
        if den.coeff(den.max_exp().unwrap()).is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the value lies in Z[A, A^-1] (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn div(&self, other: &Self) -> Result<Self, RingError> {
        if other.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<Self, RingError> {
        Self::one().div(self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn a_pow(exp: i64) -> Self {
        RatFunc::from_poly(LaurentPoly::a_pow(exp))
    }
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
    fn try_div(&self, other: &Self) -> Result<Self, RingError> {
        RatFunc::div(self, other)
    }
}
