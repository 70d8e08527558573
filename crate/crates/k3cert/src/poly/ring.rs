//! Coefficient rings for polynomial arithmetic: F_q, the integers, and the
//! rationals, behind one trait so polynomial code is written once.
//!
//! Ring objects are cheap handles (a shared field pointer, or nothing);
//! elements carry no back-reference, so every operation goes through the
//! ring. `try_div` is exact division: total for fields, a divisibility test
//! over the integers. Characteristic 2 never appears (the field layer
//! rejects it).

use crate::ffield::{Field, FqElem};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt::Debug;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffParseError {
    #[error("bad coefficient literal `{0}`")]
    BadLiteral(String),
    #[error("coefficient {0} has denominator divisible by the characteristic")]
    DenominatorVanishes(String),
}

/// A commutative ring with exact arithmetic and a canonical text form for
/// its elements.
pub trait Ring: Clone {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// a/b when the quotient exists in the ring, else None. b must be
    /// nonzero.
    fn try_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Canonical text form (base 10; `n/d` for rationals in lowest terms;
    /// `[c0,...,ck]` for extension-field elements).
    fn coeff_to_string(&self, a: &Self::Elem) -> String;
    fn coeff_parse(&self, s: &str) -> Result<Self::Elem, CoeffParseError>;

    /// True when the canonical form of a starts with a minus sign, used by
    /// the polynomial printer to fold signs into separators.
    fn is_negative_display(&self, a: &Self::Elem) -> bool;

    /// Absolute-value form for printing after a sign separator.
    fn coeff_to_string_abs(&self, a: &Self::Elem) -> String {
        let s = self.coeff_to_string(a);
        s.strip_prefix('-').map(str::to_owned).unwrap_or(s)
    }
}

/// Rings where every nonzero element is invertible.
pub trait FieldRing: Ring {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

// ---- finite fields ----

/// Ring handle for F_{p^n}.
#[derive(Clone)]
pub struct Fq(pub Arc<Field>);

impl Fq {
    pub fn p(&self) -> u64 {
        self.0.p()
    }
}

impl Ring for Fq {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        self.0.zero()
    }
    fn one(&self) -> FqElem {
        self.0.one()
    }
    fn is_zero(&self, a: &FqElem) -> bool {
        self.0.is_zero(a)
    }
    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.0.add(a, b)
    }
    fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.0.sub(a, b)
    }
    fn neg(&self, a: &FqElem) -> FqElem {
        self.0.neg(a)
    }
    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.0.mul(a, b)
    }
    fn from_i64(&self, n: i64) -> FqElem {
        self.0.from_i64(n)
    }

    fn try_div(&self, a: &FqElem, b: &FqElem) -> Option<FqElem> {
        assert!(!self.is_zero(b), "division by zero");
        Some(self.0.mul(a, &self.0.inv(b)))
    }

    fn coeff_to_string(&self, a: &FqElem) -> String {
        if self.0.degree() == 1 {
            a.0[0].to_string()
        } else {
            let parts: Vec<String> = a.0.iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    fn coeff_parse(&self, s: &str) -> Result<FqElem, CoeffParseError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let mut coeffs = Vec::new();
            for piece in inner.split(',') {
                let v: i64 =
                    piece.trim().parse().map_err(|_| CoeffParseError::BadLiteral(s.into()))?;
                coeffs.push(v.rem_euclid(self.p() as i64) as u64);
            }
            if coeffs.len() > self.0.degree() {
                return Err(CoeffParseError::BadLiteral(s.into()));
            }
            Ok(self.0.from_coeffs(&coeffs))
        } else {
            let v: i64 = s.parse().map_err(|_| CoeffParseError::BadLiteral(s.into()))?;
            Ok(self.0.from_i64(v))
        }
    }

    fn is_negative_display(&self, _a: &FqElem) -> bool {
        false // residues print as 0..p-1
    }
}

impl FieldRing for Fq {
    fn inv(&self, a: &FqElem) -> FqElem {
        self.0.inv(a)
    }
}

// ---- integers ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zz;

impl Ring for Zz {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn try_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        assert!(!b.is_zero(), "division by zero");
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }

    fn coeff_to_string(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn coeff_parse(&self, s: &str) -> Result<BigInt, CoeffParseError> {
        s.trim().parse().map_err(|_| CoeffParseError::BadLiteral(s.into()))
    }

    fn is_negative_display(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
}

// ---- rationals ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qq;

impl Ring for Qq {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn try_div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        assert!(!b.is_zero(), "division by zero");
        Some(a / b)
    }

    fn coeff_to_string(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn coeff_parse(&self, s: &str) -> Result<BigRational, CoeffParseError> {
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| CoeffParseError::BadLiteral(s.into()))?;
                Ok(BigRational::from_integer(n))
            }
            Some((num, den)) => {
                let n: BigInt =
                    num.trim().parse().map_err(|_| CoeffParseError::BadLiteral(s.into()))?;
                let d: BigInt =
                    den.trim().parse().map_err(|_| CoeffParseError::BadLiteral(s.into()))?;
                if d.is_zero() {
                    return Err(CoeffParseError::BadLiteral(s.into()));
                }
                Ok(BigRational::new(n, d))
            }
        }
    }

    fn is_negative_display(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

impl FieldRing for Qq {
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
}
