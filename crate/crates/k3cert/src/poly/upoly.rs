//! Dense univariate polynomials over any `Ring`, plus the gcd and
//! squarefree machinery the geometry needs: multiplicity profiles of binary
//! forms over F_q (with p-th-root extraction when derivatives vanish) and
//! squarefree parts over the rationals.
//!
//! Coefficients are stored ascending with no trailing zeros, so the zero
//! polynomial is the empty vector and degree is length minus one.

use super::mpoly::MPoly;
use super::ring::{FieldRing, Fq, Qq, Ring, Zz};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("zero form has no multiplicity profile")]
    ZeroForm,
    #[error("expected a homogeneous binary form")]
    NotBinaryForm,
    #[error("binary form degree {0} exceeds the supported bound {1}")]
    DegreeTooLarge(u32, u32),
}

pub const MAX_PROFILE_DEGREE: u32 = 18;

#[derive(Clone)]
pub struct UPoly<R: Ring> {
    /// ascending coefficients, no trailing zeros
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for UPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> Eq for UPoly<R> where R::Elem: Eq {}

impl<R: Ring> std::fmt::Debug for UPoly<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UPoly{:?}", self.coeffs)
    }
}

impl<R: Ring> UPoly<R> {
    pub fn zero() -> UPoly<R> {
        UPoly { coeffs: vec![] }
    }

    pub fn from_coeffs(ring: &R, coeffs: Vec<R::Elem>) -> UPoly<R> {
        let mut c = coeffs;
        while c.last().map_or(false, |x| ring.is_zero(x)) {
            c.pop();
        }
        UPoly { coeffs: c }
    }

    pub fn from_i64(ring: &R, coeffs: &[i64]) -> UPoly<R> {
        Self::from_coeffs(ring, coeffs.iter().map(|&c| ring.from_i64(c)).collect())
    }

    pub fn constant(ring: &R, c: R::Elem) -> UPoly<R> {
        Self::from_coeffs(ring, vec![c])
    }

    pub fn one(ring: &R) -> UPoly<R> {
        Self::constant(ring, ring.one())
    }

    pub fn x(ring: &R) -> UPoly<R> {
        UPoly { coeffs: vec![ring.zero(), ring.one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self, ring: &R) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ring.one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, ring: &R, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    /// Leading coefficient; panics on zero.
    pub fn lc(&self) -> &R::Elem {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn add(&self, ring: &R, other: &UPoly<R>) -> UPoly<R> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => ring.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(ring, out)
    }

    pub fn neg(&self, ring: &R) -> UPoly<R> {
        UPoly { coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect() }
    }

    pub fn sub(&self, ring: &R, other: &UPoly<R>) -> UPoly<R> {
        self.add(ring, &other.neg(ring))
    }

    pub fn scale(&self, ring: &R, c: &R::Elem) -> UPoly<R> {
        if ring.is_zero(c) {
            return UPoly::zero();
        }
        Self::from_coeffs(ring, self.coeffs.iter().map(|a| ring.mul(a, c)).collect())
    }

    pub fn mul(&self, ring: &R, other: &UPoly<R>) -> UPoly<R> {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        Self::from_coeffs(ring, out)
    }

    pub fn derivative(&self, ring: &R) -> UPoly<R> {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let out: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| ring.mul(c, &ring.from_i64(i as i64)))
            .collect();
        Self::from_coeffs(ring, out)
    }

    pub fn eval(&self, ring: &R, x: &R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), c);
        }
        acc
    }

    pub fn pow(&self, ring: &R, e: u32) -> UPoly<R> {
        let mut acc = UPoly::one(ring);
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    /// Exact division: Some(q) with self = q * d, else None.
    pub fn divide_exact(&self, ring: &R, d: &UPoly<R>) -> Option<UPoly<R>> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let dd = d.degree().unwrap();
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![ring.zero(); sd - dd + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + dd].clone();
            if ring.is_zero(&top) {
                continue;
            }
            let qc = ring.try_div(&top, d.lc())?;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = ring.sub(&rem[k + i], &ring.mul(&qc, dc));
            }
            quo[k] = qc;
        }
        if rem.iter().any(|c| !ring.is_zero(c)) {
            return None;
        }
        Some(Self::from_coeffs(ring, quo))
    }

    /// View as a one-variable MPoly (for serialization).
    pub fn to_mpoly(&self, ring: &R) -> MPoly<R> {
        MPoly::from_terms(
            ring,
            1,
            self.coeffs.iter().enumerate().map(|(i, c)| (vec![i as u16], c.clone())),
        )
    }

    pub fn from_mpoly(ring: &R, p: &MPoly<R>) -> UPoly<R> {
        assert_eq!(p.nvars(), 1, "expected a univariate polynomial");
        let deg = p.total_degree().map_or(0, |d| d as usize);
        let mut coeffs = vec![ring.zero(); deg + 1];
        for (e, c) in p.terms() {
            coeffs[e[0] as usize] = c.clone();
        }
        Self::from_coeffs(ring, coeffs)
    }
}

impl<R: FieldRing> UPoly<R> {
    pub fn monic(&self, ring: &R) -> UPoly<R> {
        if self.is_zero() {
            return UPoly::zero();
        }
        let inv = ring.inv(self.lc());
        self.scale(ring, &inv)
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divrem(&self, ring: &R, d: &UPoly<R>) -> (UPoly<R>, UPoly<R>) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |sd| sd < dd) {
            return (UPoly::zero(), self.clone());
        }
        let sd = self.degree().unwrap();
        let lcinv = ring.inv(d.lc());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![ring.zero(); sd - dd + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + dd].clone();
            if ring.is_zero(&top) {
                continue;
            }
            let qc = ring.mul(&top, &lcinv);
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = ring.sub(&rem[k + i], &ring.mul(&qc, dc));
            }
            quo[k] = qc;
        }
        (Self::from_coeffs(ring, quo), Self::from_coeffs(ring, rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, ring: &R, other: &UPoly<R>) -> UPoly<R> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(ring, &b);
            a = b;
            b = r;
        }
        a.monic(ring)
    }
}

impl UPoly<Fq> {
    /// Inverse of x -> x^p on coefficients; defined on polynomials whose
    /// exponents are all divisible by p (equivalently, derivative zero).
    fn pth_root(&self, ring: &Fq) -> UPoly<Fq> {
        let p = ring.p() as usize;
        let q = ring.0.order();
        let e = q / p as u128; // x^(q/p) inverts x^p
        let mut out = Vec::with_capacity(self.coeffs.len() / p + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                out.push(ring.0.pow(c, e));
            } else {
                debug_assert!(ring.is_zero(c), "exponent not divisible by p");
            }
        }
        Self::from_coeffs(ring, out)
    }

    /// Squarefree decomposition over F_q: pairs (gᵢ, eᵢ) with gᵢ monic
    /// squarefree, pairwise coprime, and self = lc · ∏ gᵢ^eᵢ.
    pub fn squarefree_decomposition(&self, ring: &Fq) -> Vec<(UPoly<Fq>, usize)> {
        assert!(!self.is_zero());
        let f = self.monic(ring);
        if f.degree() == Some(0) {
            return vec![];
        }
        let mut out = Vec::new();
        Self::sfd_rec(ring, &f, 1, &mut out);
        out
    }

    fn sfd_rec(ring: &Fq, f: &UPoly<Fq>, mult_factor: usize, out: &mut Vec<(UPoly<Fq>, usize)>) {
        let p = ring.p() as usize;
        let fp = f.derivative(ring);
        if fp.is_zero() {
            // every exponent divisible by p: recurse on the p-th root
            let g = f.pth_root(ring);
            Self::sfd_rec(ring, &g, mult_factor * p, out);
            return;
        }
        let mut c = f.gcd(ring, &fp);
        let mut w = f.divide_exact(ring, &c).expect("gcd divides");
        let mut i = 1usize;
        while !w.is_one(ring) {
            let y = w.gcd(ring, &c);
            let z = w.divide_exact(ring, &y).expect("gcd divides");
            if z.degree().map_or(false, |d| d > 0) {
                out.push((z, i * mult_factor));
            }
            c = c.divide_exact(ring, &y).expect("gcd divides");
            w = y;
            i += 1;
        }
        if !c.is_one(ring) {
            // leftover multiplicities divisible by p
            let g = c.pth_root(ring);
            Self::sfd_rec(ring, &g, mult_factor * p, out);
        }
    }
}

/// Multiset of root multiplicities over the algebraic closure of a nonzero
/// binary form b(s, t) over F_q, multiplicities sorted ascending. The roots
/// themselves are never computed: the finite part comes from the squarefree
/// decomposition of b(T, 1) (each squarefree factor of degree g contributes
/// g roots at its multiplicity) and the point (1:0) contributes the t-adic
/// valuation.
pub fn squarefree_profile(ring: &Fq, b: &MPoly<Fq>) -> Result<Vec<usize>, FormError> {
    if b.is_zero() {
        return Err(FormError::ZeroForm);
    }
    if b.nvars() != 2 {
        return Err(FormError::NotBinaryForm);
    }
    let d = b.homogeneous_degree().ok_or(FormError::NotBinaryForm)?;
    if d > MAX_PROFILE_DEGREE {
        return Err(FormError::DegreeTooLarge(d, MAX_PROFILE_DEGREE));
    }
    // dehomogenize at t = 1
    let mut coeffs = vec![ring.zero(); d as usize + 1];
    for (e, c) in b.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    let u = UPoly::from_coeffs(ring, coeffs);
    let mut profile = Vec::new();
    let inf = d as usize - u.degree().unwrap();
    if inf > 0 {
        profile.push(inf);
    }
    if u.degree().unwrap() > 0 {
        for (g, m) in u.squarefree_decomposition(ring) {
            for _ in 0..g.degree().unwrap() {
                profile.push(m);
            }
        }
    }
    profile.sort_unstable();
    debug_assert_eq!(profile.iter().sum::<usize>(), d as usize);
    Ok(profile)
}

/// Squarefree part over Q: f / gcd(f, f'), monic.
pub fn squarefree_part_qq(f: &UPoly<Qq>) -> UPoly<Qq> {
    assert!(!f.is_zero());
    let ring = Qq;
    let g = f.gcd(&ring, &f.derivative(&ring));
    f.divide_exact(&ring, &g).expect("gcd divides").monic(&ring)
}

/// Content (nonnegative gcd of coefficients) of an integer polynomial.
pub fn content_zz(f: &UPoly<Zz>) -> BigInt {
    let mut g = BigInt::zero();
    for c in f.coeffs() {
        g = num::Integer::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Exact integer-to-rational coefficient change.
pub fn zz_to_qq(f: &UPoly<Zz>) -> UPoly<Qq> {
    UPoly::from_coeffs(
        &Qq,
        f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect(),
    )
}

/// Rational polynomial with integer coefficients back to the integers;
/// panics if any coefficient has a denominator.
pub fn qq_to_zz(f: &UPoly<Qq>) -> UPoly<Zz> {
    UPoly::from_coeffs(
        &Zz,
        f.coeffs()
            .iter()
            .map(|c| {
                assert!(c.denom().is_one(), "coefficient {c} is not an integer");
                c.numer().clone()
            })
            .collect(),
    )
}

/// Reduce an integer polynomial mod p.
pub fn zz_reduce_mod(f: &UPoly<Zz>, fq: &Fq) -> UPoly<Fq> {
    let p = BigInt::from(fq.p());
    UPoly::from_coeffs(
        fq,
        f.coeffs()
            .iter()
            .map(|c| {
                let r = num::Integer::mod_floor(c, &p);
                fq.0.from_u64(u64::try_from(r).unwrap())
            })
            .collect(),
    )
}
