//! Sparse multivariate polynomials over any `Ring`.
//!
//! Terms are kept sorted in descending graded reverse lexicographic order
//! with unique exponent vectors and nonzero coefficients; every constructor
//! and operation restores that normal form, so equality is structural. The
//! term order is also the serialization order and the reduction order used
//! by the Groebner engine, so it must never change.

use super::ring::{FieldRing, Fq, Qq, Ring, Zz};
use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{Integer, One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;

/// Graded reverse lexicographic comparison of exponent vectors: higher total
/// degree wins; on ties the rightmost differing variable decides, smaller
/// exponent there winning.
pub fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// True when `e` divides `m` componentwise (monomial divisibility).
pub fn exp_divides(e: &[u16], m: &[u16]) -> bool {
    e.iter().zip(m).all(|(&a, &b)| a <= b)
}

#[derive(Clone)]
pub struct MPoly<R: Ring> {
    nvars: usize,
    /// (exponent vector, coefficient), descending grevlex, coefficients
    /// nonzero, exponent vectors distinct
    terms: Vec<(Vec<u16>, R::Elem)>,
}

// structural equality is well defined because terms are kept normalized;
// derive would demand PartialEq on the ring handle itself
impl<R: Ring> PartialEq for MPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<R: Ring> Eq for MPoly<R> where R::Elem: Eq {}

impl<R: Ring> std::fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MPoly({} vars, {:?})", self.nvars, self.terms)
    }
}

impl<R: Ring> MPoly<R> {
    pub fn zero(nvars: usize) -> MPoly<R> {
        MPoly { nvars, terms: vec![] }
    }

    pub fn constant(ring: &R, c: R::Elem, nvars: usize) -> MPoly<R> {
        if ring.is_zero(&c) {
            MPoly::zero(nvars)
        } else {
            MPoly { nvars, terms: vec![(vec![0; nvars], c)] }
        }
    }

    pub fn one(ring: &R, nvars: usize) -> MPoly<R> {
        MPoly::constant(ring, ring.one(), nvars)
    }

    pub fn var(ring: &R, i: usize, nvars: usize) -> MPoly<R> {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly { nvars, terms: vec![(e, ring.one())] }
    }

    pub fn monomial(ring: &R, exps: &[u16], c: R::Elem) -> MPoly<R> {
        if ring.is_zero(&c) {
            MPoly::zero(exps.len())
        } else {
            MPoly { nvars: exps.len(), terms: vec![(exps.to_vec(), c)] }
        }
    }

    /// Build from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms(
        ring: &R,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u16>, R::Elem)>,
    ) -> MPoly<R> {
        let mut map: HashMap<Vec<u16>, R::Elem> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            match map.entry(e) {
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    let s = ring.add(o.get(), &c);
                    *o.get_mut() = s;
                }
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
            }
        }
        Self::from_map(ring, nvars, map)
    }

    fn from_map(ring: &R, nvars: usize, map: HashMap<Vec<u16>, R::Elem>) -> MPoly<R> {
        let mut terms: Vec<(Vec<u16>, R::Elem)> =
            map.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        terms.sort_by(|x, y| grevlex_cmp(&y.0, &x.0));
        MPoly { nvars, terms }
    }

    /// Terms must already be strictly descending in grevlex with nonzero
    /// coefficients; used by the division loop, which produces them that way.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Vec<u16>, R::Elem)>) -> MPoly<R> {
        debug_assert!(terms
            .windows(2)
            .all(|w| grevlex_cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        MPoly { nvars, terms }
    }

    /// Copy with the leading term removed (zero stays zero).
    pub(crate) fn without_leading(&self) -> MPoly<R> {
        if self.terms.is_empty() {
            return MPoly { nvars: self.nvars, terms: vec![] };
        }
        MPoly { nvars: self.nvars, terms: self.terms[1..].to_vec() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Vec<u16>, R::Elem)] {
        &self.terms
    }

    /// Leading (exponent, coefficient) in grevlex; None for zero.
    pub fn leading(&self) -> Option<(&[u16], &R::Elem)> {
        self.terms.first().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, ring: &R, exps: &[u16]) -> R::Elem {
        // terms are few; linear scan beats building a map
        for (e, c) in &self.terms {
            if e == exps {
                return c.clone();
            }
        }
        ring.zero()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.iter().map(|&x| x as u32).sum()).max()
    }

    /// Some(d) when nonzero and every term has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first: u32 = self.terms.first()?.0.iter().map(|&x| x as u32).sum();
        for (e, _) in &self.terms {
            let d: u32 = e.iter().map(|&x| x as u32).sum();
            if d != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn add(&self, ring: &R, other: &MPoly<R>) -> MPoly<R> {
        assert_eq!(self.nvars, other.nvars);
        // merge two descending-sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match grevlex_cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.add(&self.terms[i].1, &other.terms[j].1);
                    if !ring.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self, ring: &R) -> MPoly<R> {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, ring: &R, other: &MPoly<R>) -> MPoly<R> {
        self.add(ring, &other.neg(ring))
    }

    pub fn scale(&self, ring: &R, c: &R::Elem) -> MPoly<R> {
        if ring.is_zero(c) {
            return MPoly::zero(self.nvars);
        }
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, a)| (e.clone(), ring.mul(a, c)))
            .filter(|(_, a)| !ring.is_zero(a))
            .collect();
        MPoly { nvars: self.nvars, terms }
    }

    /// Multiply by the monomial c * x^exps; order is preserved, no re-sort.
    pub fn mul_monomial(&self, ring: &R, exps: &[u16], c: &R::Elem) -> MPoly<R> {
        assert_eq!(exps.len(), self.nvars);
        if ring.is_zero(c) {
            return MPoly::zero(self.nvars);
        }
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, a)| {
                let sum: Vec<u16> =
                    e.iter().zip(exps).map(|(&x, &y)| x.checked_add(y).expect("exponent overflow")).collect();
                (sum, ring.mul(a, c))
            })
            .filter(|(_, a)| !ring.is_zero(a))
            .collect();
        MPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, ring: &R, other: &MPoly<R>) -> MPoly<R> {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut map: HashMap<Vec<u16>, R::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u16> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| x.checked_add(y).expect("exponent overflow"))
                    .collect();
                let prod = ring.mul(ca, cb);
                match map.entry(e) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = ring.add(o.get(), &prod);
                        *o.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                }
            }
        }
        Self::from_map(ring, self.nvars, map)
    }

    pub fn pow(&self, ring: &R, e: u32) -> MPoly<R> {
        let mut acc = MPoly::one(ring, self.nvars);
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    pub fn partial_derivative(&self, ring: &R, i: usize) -> MPoly<R> {
        assert!(i < self.nvars, "variable index out of range");
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] > 0)
            .map(|(e, c)| {
                let mut d = e.clone();
                d[i] -= 1;
                (d, ring.mul(c, &ring.from_i64(e[i] as i64)))
            })
            .filter(|(_, c)| !ring.is_zero(c))
            .collect();
        // lowering one exponent can reorder grevlex ties and kill terms in
        // positive characteristic; renormalize
        MPoly::from_terms(ring, self.nvars, terms)
    }

    pub fn eval(&self, ring: &R, point: &[R::Elem]) -> R::Elem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = ring.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &ei) in e.iter().enumerate() {
                for _ in 0..ei {
                    t = ring.mul(&t, &point[i]);
                }
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Substitute variable i by `images[i]`, all images in a common variable
    /// set of `out_nvars` variables.
    pub fn subst(&self, ring: &R, images: &[MPoly<R>], out_nvars: usize) -> MPoly<R> {
        assert_eq!(images.len(), self.nvars);
        for im in images {
            assert_eq!(im.nvars, out_nvars);
        }
        // cache powers of each image as needed
        let mut powers: Vec<Vec<MPoly<R>>> =
            images.iter().map(|im| vec![MPoly::one(ring, out_nvars), im.clone()]).collect();
        let mut acc = MPoly::zero(out_nvars);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(ring, c.clone(), out_nvars);
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= ei as usize {
                    let next = cache.last().unwrap().mul(ring, &images[i]);
                    cache.push(next);
                }
                t = t.mul(ring, &cache[ei as usize]);
            }
            acc = acc.add(ring, &t);
        }
        acc
    }

    /// Map coefficients into another ring, dropping terms that die.
    pub fn map_coeffs<S: Ring>(
        &self,
        to: &S,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> MPoly<S> {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !to.is_zero(c))
            .collect();
        MPoly { nvars: self.nvars, terms }
    }

    /// Exact division: Some(q) with self = q * d, else None. Works over any
    /// ring whose `try_div` is exact (fields; the integers when the division
    /// happens to be exact at every cancellation step, which holds whenever
    /// d truly divides self).
    pub fn div_exact(&self, ring: &R, d: &MPoly<R>) -> Option<MPoly<R>> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        assert_eq!(self.nvars, d.nvars);
        let (de, dc) = d.leading().unwrap();
        let de = de.to_vec();
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Vec<u16>, R::Elem)> = Vec::new();
        while let Some((re, rc)) = rem.leading() {
            if !exp_divides(&de, re) {
                return None;
            }
            let qc = ring.try_div(rc, dc)?;
            let qe: Vec<u16> = re.iter().zip(&de).map(|(&a, &b)| a - b).collect();
            rem = rem.sub(ring, &d.mul_monomial(ring, &qe, &qc));
            quo_terms.push((qe, qc));
        }
        // cancellation always removes the current leading term, so the
        // quotient terms were produced in strictly descending order
        Some(MPoly { nvars: self.nvars, terms: quo_terms })
    }
}

impl<R: FieldRing> MPoly<R> {
    /// Restrict a homogeneous ternary form to the line a*u + b*v + c*w = 0,
    /// returning a binary form in (s, t). The pivot is the first nonzero of
    /// (a, b, c); the two remaining coordinates become (s, t) in increasing
    /// index order and the pivot coordinate is solved for exactly.
    pub fn restrict_to_line(&self, ring: &R, line: &[R::Elem; 3]) -> MPoly<R> {
        assert_eq!(self.nvars, 3);
        let pivot = line
            .iter()
            .position(|c| !ring.is_zero(c))
            .expect("line coefficients must not all vanish");
        let s = MPoly::var(ring, 0, 2);
        let t = MPoly::var(ring, 1, 2);
        let others: Vec<usize> = (0..3).filter(|&i| i != pivot).collect();
        // pivot coordinate = -(line[o0]*s + line[o1]*t) / line[pivot]
        let inv = ring.inv(&line[pivot]);
        let num = s
            .scale(ring, &line[others[0]])
            .add(ring, &t.scale(ring, &line[others[1]]))
            .scale(ring, &ring.neg(&inv));
        let mut images = vec![MPoly::zero(2), MPoly::zero(2), MPoly::zero(2)];
        images[pivot] = num;
        images[others[0]] = s;
        images[others[1]] = t;
        self.subst(ring, &images, 2)
    }

    /// Scale so the grevlex leading coefficient is 1.
    pub fn monic(&self, ring: &R) -> MPoly<R> {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(ring, &ring.inv(&c.clone())),
        }
    }
}

impl MPoly<Zz> {
    /// Nonnegative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and normalize the leading coefficient to be
    /// positive. Zero stays zero.
    pub fn primitive_part(&self) -> MPoly<Zz> {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.terms[0].1.sign() == Sign::Minus {
            g = -g;
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c / &g)).collect(),
        }
    }

    /// Reduce coefficients mod p into the given field.
    pub fn reduce_mod(&self, fq: &Fq) -> MPoly<Fq> {
        let p = BigInt::from(fq.p());
        self.map_coeffs(fq, |c| {
            let r = c.mod_floor(&p);
            fq.0.from_u64(u64::try_from(r).expect("residue fits u64"))
        })
    }

    pub fn to_qq(&self) -> MPoly<Qq> {
        self.map_coeffs(&Qq, |c| BigRational::from_integer(c.clone()))
    }
}

impl MPoly<Qq> {
    /// Clear denominators: returns (primitive integer polynomial g, scalar s)
    /// with self = s * g and s a positive rational, g primitive with positive
    /// leading coefficient. Zero returns (0, 1).
    pub fn to_zz_primitive(&self) -> (MPoly<Zz>, BigRational) {
        if self.is_zero() {
            return (MPoly::zero(self.nvars), BigRational::one());
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let scaled = MPoly::<Zz> {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), (c * BigRational::from_integer(den.clone())).to_integer()))
                .collect(),
        };
        let prim = scaled.primitive_part();
        // self = (content with sign) / den * prim
        let mut cont = scaled.content();
        if scaled.terms[0].1.sign() == Sign::Minus {
            cont = -cont;
        }
        (prim, BigRational::new(cont, den))
    }

    /// Reduce mod p; None when some denominator is divisible by p.
    pub fn reduce_mod(&self, fq: &Fq) -> Option<MPoly<Fq>> {
        let p = BigInt::from(fq.p());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            if c.denom().mod_floor(&p).is_zero() {
                return None;
            }
            let num = c.numer().mod_floor(&p);
            let den = c.denom().mod_floor(&p);
            let n = fq.0.from_u64(u64::try_from(num).unwrap());
            let d = fq.0.from_u64(u64::try_from(den).unwrap());
            let r = fq.0.mul(&n, &fq.0.inv(&d));
            if !fq.0.is_zero(&r) {
                terms.push((e.clone(), r));
            }
        }
        Some(MPoly { nvars: self.nvars, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;

    fn f7() -> Fq {
        Fq(make_field(7, 1).unwrap())
    }

    /// deterministic little generator for structured random polys
    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            self.0 >> 33
        }
    }

    fn random_poly(ring: &Fq, rng: &mut Lcg, nvars: usize, maxdeg: u16, nterms: usize) -> MPoly<Fq> {
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let e: Vec<u16> = (0..nvars).map(|_| (rng.next() % (maxdeg as u64 + 1)) as u16).collect();
            let c = ring.from_i64((rng.next() % 7) as i64);
            terms.push((e, c));
        }
        MPoly::from_terms(ring, nvars, terms)
    }

    #[test]
    fn grevlex_order_on_cubic_monomials() {
        // in three variables: x^2y > xz^2 iff ... check against the known
        // grevlex ladder x^3 > x^2 y > x y^2 > y^3 > x^2 z > x y z > y^2 z
        // > x z^2 > y z^2 > z^3
        let ladder: Vec<Vec<u16>> = vec![
            vec![3, 0, 0],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![0, 3, 0],
            vec![2, 0, 1],
            vec![1, 1, 1],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![0, 1, 2],
            vec![0, 0, 3],
        ];
        for i in 0..ladder.len() {
            for j in 0..ladder.len() {
                assert_eq!(grevlex_cmp(&ladder[i], &ladder[j]), j.cmp(&i), "{i} vs {j}");
            }
        }
        // degree dominates
        assert_eq!(grevlex_cmp(&[0, 0, 4], &[3, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn terms_stay_normalized() {
        let r = f7();
        let p = MPoly::from_terms(
            &r,
            2,
            vec![
                (vec![1, 0], r.from_i64(3)),
                (vec![0, 1], r.from_i64(2)),
                (vec![1, 0], r.from_i64(4)), // merges with the first to 0 mod 7
            ],
        );
        assert_eq!(p.nterms(), 1);
        assert_eq!(p.coeff(&r, &[0, 1]), r.from_i64(2));
    }

    #[test]
    fn ring_axioms_on_random_samples() {
        let r = f7();
        let mut rng = Lcg(17);
        for _ in 0..40 {
            let a = random_poly(&r, &mut rng, 3, 3, 4);
            let b = random_poly(&r, &mut rng, 3, 3, 4);
            let c = random_poly(&r, &mut rng, 3, 3, 4);
            assert_eq!(a.add(&r, &b), b.add(&r, &a));
            assert_eq!(a.mul(&r, &b), b.mul(&r, &a));
            assert_eq!(a.mul(&r, &b.add(&r, &c)), a.mul(&r, &b).add(&r, &a.mul(&r, &c)));
            assert_eq!(a.sub(&r, &a), MPoly::zero(3));
            assert_eq!(a.mul(&r, &b).mul(&r, &c), a.mul(&r, &b.mul(&r, &c)));
        }
    }

    #[test]
    fn derivative_basics() {
        let r = Qq;
        let u = MPoly::var(&r, 0, 1);
        let u3 = u.pow(&r, 3);
        let d = u3.partial_derivative(&r, 0);
        assert_eq!(d, u.pow(&r, 2).scale(&r, &r.from_i64(3)));
        let c = MPoly::constant(&r, r.from_i64(5), 1);
        assert!(c.partial_derivative(&r, 0).is_zero());
        // derivative can vanish in characteristic p
        let f = f7();
        let x7 = MPoly::var(&f, 0, 1).pow(&f, 7);
        assert!(x7.partial_derivative(&f, 0).is_zero());
    }

    #[test]
    fn euler_identity_for_homogeneous_forms() {
        let r = f7();
        let mut rng = Lcg(99);
        for _ in 0..25 {
            // random homogeneous cubic in 3 variables
            let mut terms = Vec::new();
            for _ in 0..5 {
                let a = (rng.next() % 4) as u16;
                let b = (rng.next() % (4 - a as u64)) as u16;
                let e = vec![a, b, 3 - a - b];
                terms.push((e, r.from_i64((rng.next() % 7) as i64)));
            }
            let fpoly = MPoly::from_terms(&r, 3, terms);
            if fpoly.is_zero() {
                continue;
            }
            assert_eq!(fpoly.homogeneous_degree(), Some(3));
            let mut euler = MPoly::zero(3);
            for i in 0..3 {
                let xi = MPoly::var(&r, i, 3);
                euler = euler.add(&r, &xi.mul(&r, &fpoly.partial_derivative(&r, i)));
            }
            assert_eq!(euler, fpoly.scale(&r, &r.from_i64(3)));
        }
    }

    #[test]
    fn substitution_composes() {
        let r = Qq;
        // f(x, y) = x^2 + y, substitute x = s + t, y = s*t
        let x = MPoly::var(&r, 0, 2);
        let y = MPoly::var(&r, 1, 2);
        let fpoly = x.pow(&r, 2).add(&r, &y);
        let s = MPoly::var(&r, 0, 2);
        let t = MPoly::var(&r, 1, 2);
        let g = fpoly.subst(&r, &[s.add(&r, &t), s.mul(&r, &t)], 2);
        // (s+t)^2 + st = s^2 + 3st + t^2
        let expect = MPoly::from_terms(
            &r,
            2,
            vec![
                (vec![2, 0], r.one()),
                (vec![1, 1], r.from_i64(3)),
                (vec![0, 2], r.one()),
            ],
        );
        assert_eq!(g, expect);
    }

    #[test]
    fn restriction_examples() {
        let r = Qq;
        let u = MPoly::var(&r, 0, 3);
        let v = MPoly::var(&r, 1, 3);
        let w = MPoly::var(&r, 2, 3);

        // u*v*w on u = 0 gives the zero binary form
        let f1 = u.mul(&r, &v).mul(&r, &w);
        assert!(f1.restrict_to_line(&r, &[r.one(), r.zero(), r.zero()]).is_zero());

        // u^2 + v^2 on w = 0 gives s^2 + t^2
        let f2 = u.pow(&r, 2).add(&r, &v.pow(&r, 2));
        let g2 = f2.restrict_to_line(&r, &[r.zero(), r.zero(), r.one()]);
        let expect = MPoly::from_terms(&r, 2, vec![(vec![2, 0], r.one()), (vec![0, 2], r.one())]);
        assert_eq!(g2, expect);

        // (u+v+w)^2 restricted to u+v+w = 0 vanishes
        let f3 = u.add(&r, &v).add(&r, &w).pow(&r, 2);
        assert!(f3.restrict_to_line(&r, &[r.one(), r.one(), r.one()]).is_zero());
    }

    #[test]
    fn restriction_preserves_degree_or_dies() {
        let r = f7();
        let mut rng = Lcg(5);
        for _ in 0..30 {
            let mut terms = Vec::new();
            for _ in 0..6 {
                let a = (rng.next() % 5) as u16;
                let b = (rng.next() % (5 - a as u64)) as u16;
                terms.push((vec![a, b, 4 - a - b], r.from_i64((rng.next() % 7) as i64)));
            }
            let fpoly = MPoly::from_terms(&r, 3, terms);
            if fpoly.is_zero() {
                continue;
            }
            let line = [
                r.from_i64((rng.next() % 7) as i64),
                r.from_i64((rng.next() % 7) as i64),
                r.from_i64(1 + (rng.next() % 6) as i64),
            ];
            let g = fpoly.restrict_to_line(&r, &line);
            if !g.is_zero() {
                assert_eq!(g.homogeneous_degree(), Some(4));
            }
        }
    }

    #[test]
    fn exact_division_round_trip() {
        let r = Qq;
        let x = MPoly::var(&r, 0, 2);
        let y = MPoly::var(&r, 1, 2);
        let a = x.pow(&r, 2).sub(&r, &y.pow(&r, 2));
        let b = x.sub(&r, &y);
        let q = a.div_exact(&r, &b).unwrap();
        assert_eq!(q, x.add(&r, &y));
        assert!(x.pow(&r, 2).add(&r, &y).div_exact(&r, &b).is_none());

        // over the integers with content in play
        let z = Zz;
        let xz = MPoly::var(&z, 0, 1);
        let two = MPoly::constant(&z, z.from_i64(2), 1);
        let f = xz.pow(&z, 2).scale(&z, &z.from_i64(6)).add(&z, &xz.scale(&z, &z.from_i64(4)));
        let g = xz.scale(&z, &z.from_i64(2));
        let q2 = f.div_exact(&z, &g).unwrap();
        assert_eq!(q2, xz.scale(&z, &z.from_i64(3)).add(&z, &two));
    }

    #[test]
    fn integer_content_and_reduction() {
        let z = Zz;
        let x = MPoly::var(&z, 0, 2);
        let y = MPoly::var(&z, 1, 2);
        let f = x.scale(&z, &z.from_i64(-6)).add(&z, &y.scale(&z, &z.from_i64(-9)));
        assert_eq!(f.content(), BigInt::from(3));
        let prim = f.primitive_part();
        assert_eq!(prim, x.scale(&z, &z.from_i64(2)).add(&z, &y.scale(&z, &z.from_i64(3))));

        let f3 = Fq(make_field(3, 1).unwrap());
        let red = f.reduce_mod(&f3);
        // -6x - 9y is 0 mod 3
        assert!(red.is_zero());
        let g = x.scale(&z, &z.from_i64(-1));
        assert_eq!(g.reduce_mod(&f3).coeff(&f3, &[1, 0]), f3.from_i64(2));
    }

    #[test]
    fn rational_clears_denominators() {
        let q = Qq;
        let x = MPoly::var(&q, 0, 1);
        // (3/4)x + 3/2  =  3/4 * (x + 2)
        let f = x.scale(&q, &q.coeff_parse("3/4").unwrap()).add(
            &q,
            &MPoly::constant(&q, q.coeff_parse("3/2").unwrap(), 1),
        );
        let (prim, scalar) = f.to_zz_primitive();
        let z = Zz;
        let expect = MPoly::var(&z, 0, 1).add(&z, &MPoly::constant(&z, z.from_i64(2), 1));
        assert_eq!(prim, expect);
        assert_eq!(scalar, q.coeff_parse("3/4").unwrap());
        // reconstruct
        assert_eq!(prim.to_qq().scale(&q, &scalar), f);
    }

    #[test]
    fn qq_reduction_detects_bad_denominators() {
        let q = Qq;
        let f7r = f7();
        let x = MPoly::var(&q, 0, 1);
        let good = x.scale(&q, &q.coeff_parse("1/3").unwrap());
        let r = good.reduce_mod(&f7r).unwrap();
        // 1/3 = 5 mod 7
        assert_eq!(r.coeff(&f7r, &[1]), f7r.from_i64(5));
        let bad = x.scale(&q, &q.coeff_parse("1/7").unwrap());
        assert!(bad.reduce_mod(&f7r).is_none());
    }

    #[test]
    fn monic_normalization() {
        let r = f7();
        let x = MPoly::var(&r, 0, 2);
        let y = MPoly::var(&r, 1, 2);
        let f = x.mul(&r, &y).scale(&r, &r.from_i64(3)).add(&r, &y.pow(&r, 2));
        let m = f.monic(&r);
        assert_eq!(m.leading().unwrap().1, &r.one());
        assert_eq!(m.scale(&r, &r.from_i64(3)), f);
    }
}
