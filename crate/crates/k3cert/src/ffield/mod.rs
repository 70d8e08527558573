//! Odd-characteristic finite fields F_{p^n} with deterministic construction.
//!
//! Elements are coefficient vectors of length n over F_p (constant term first),
//! reduced modulo a monic irreducible of degree n. The modulus is pinned: the
//! lexicographically smallest monic irreducible, comparing coefficient tuples
//! from the constant term up, so two runs (or two machines) always agree on
//! the representation of F_{p^n}. Characteristic 2 is rejected everywhere.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::collections::HashMap;

pub mod table;

pub use table::{make_table, FqTable};

/// Largest supported prime (exclusive bound 2^20) and extension degree.
pub const MAX_PRIME: u64 = 1 << 20;
pub const MAX_DEGREE: usize = 24;

/// Default cap on q^k for projective enumeration.
pub const DEFAULT_ENUM_BUDGET: u128 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} out of range (must be an odd prime below 2^20)")]
    PrimeTooLarge(u64),
    #[error("extension degree {0} out of range (1..={MAX_DEGREE})")]
    DegreeOutOfRange(usize),
    #[error("field order exceeds 2^128")]
    OrderTooLarge,
    #[error("Zech table unavailable: field order {0} exceeds 2^22")]
    TableTooLarge(u128),
    #[error("enumeration budget exceeded: need {0} points")]
    BudgetExceeded(u128),
}

/// A finite field F_{p^n}, p an odd prime.
#[derive(Clone, Debug)]
pub struct Field {
    p: u64,
    n: usize,
    /// Monic modulus, length n+1, constant term first. For n = 1 this is t,
    /// a placeholder that never enters arithmetic.
    modulus: Vec<u64>,
    q: u128,
}

/// An element of some `Field`: exactly n residues mod p, constant term first.
/// All operations go through the owning `Field`; elements of different fields
/// must never be mixed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem(pub(crate) Vec<u64>);

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fq{:?}", self.0)
    }
}

pub(crate) fn is_prime_u64(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7] {
        if m % d == 0 {
            return m == d;
        }
    }
    let mut d = 11u64;
    while d * d <= m {
        if m % d == 0 || m % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

impl Field {
    /// Construct F_{p^n} with the pinned modulus. p must be an odd prime below
    /// 2^20, 1 <= n <= 24, and p^n must fit in 128 bits.
    pub fn new(p: u64, n: usize) -> Result<Field, FieldError> {
        if p == 2 {
            return Err(FieldError::EvenCharacteristic);
        }
        if p >= MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(FieldError::DegreeOutOfRange(n));
        }
        let mut q: u128 = 1;
        for _ in 0..n {
            q = q.checked_mul(p as u128).ok_or(FieldError::OrderTooLarge)?;
        }
        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, n)
        };
        Ok(Field { p, n, modulus, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        self.q
    }

    /// The pinned modulus, constant term first, length n+1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem(vec![0; self.n])
    }

    pub fn one(&self) -> FqElem {
        let mut c = vec![0; self.n];
        c[0] = 1;
        FqElem(c)
    }

    /// Embed a residue of F_p (any u64; reduced here).
    pub fn from_u64(&self, a: u64) -> FqElem {
        let mut c = vec![0; self.n];
        c[0] = a % self.p;
        FqElem(c)
    }

    pub fn from_i64(&self, a: i64) -> FqElem {
        let r = a.rem_euclid(self.p as i64) as u64;
        self.from_u64(r)
    }

    /// Element from coefficients (constant first); shorter slices are padded.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FqElem {
        assert!(coeffs.len() <= self.n, "coefficient vector too long");
        let mut c = vec![0; self.n];
        for (i, &a) in coeffs.iter().enumerate() {
            c[i] = a % self.p;
        }
        FqElem(c)
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p;
        FqElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= p { s - p } else { s }
                })
                .collect(),
        )
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p;
        FqElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
                .collect(),
        )
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        let p = self.p;
        FqElem(a.0.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect())
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        if self.n == 1 {
            return FqElem(vec![(a.0[0] as u128 * b.0[0] as u128 % self.p as u128) as u64]);
        }
        // schoolbook product, then reduction by the monic modulus
        let n = self.n;
        let p = self.p as u128;
        let mut prod = vec![0u128; 2 * n - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut prod: Vec<u128>) -> FqElem {
        let n = self.n;
        let p = self.p as u128;
        for k in (n..prod.len()).rev() {
            let c = prod[k] % p;
            if c != 0 {
                // subtract c * t^(k-n) * modulus
                for i in 0..n {
                    let m = self.modulus[i] as u128;
                    if m != 0 {
                        let idx = k - n + i;
                        prod[idx] = (prod[idx] + p * p - c * m % (p * p)) % p;
                    }
                }
            }
            prod[k] = 0;
        }
        FqElem(prod[..n].iter().map(|&c| (c % p) as u64).collect())
    }

    pub fn pow(&self, a: &FqElem, mut e: u128) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!self.is_zero(a), "inverse of zero");
        if self.n == 1 {
            return FqElem(vec![mod_inv(a.0[0], self.p)]);
        }
        self.pow(a, self.q - 2)
    }

    /// Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self, a: &FqElem) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        let r = self.pow(a, (self.q - 1) / 2);
        if r == self.one() {
            1
        } else {
            debug_assert_eq!(r, self.neg(&self.one()));
            -1
        }
    }

    /// The p-power Frobenius a -> a^p (identity on the prime field).
    pub fn frobenius(&self, a: &FqElem) -> FqElem {
        if self.n == 1 {
            a.clone()
        } else {
            self.pow(a, self.p as u128)
        }
    }

    /// True when a lies in the subfield F_{p^d}; requires d | n.
    pub fn in_subfield(&self, a: &FqElem, d: usize) -> bool {
        assert!(d >= 1 && self.n % d == 0);
        let mut x = a.clone();
        for _ in 0..d {
            x = self.frobenius(&x);
        }
        x == *a
    }

    /// All field elements in the canonical order (base-p digit odometer,
    /// constant coefficient fastest).
    pub fn elements(self: &Arc<Self>) -> ElemIter {
        ElemIter { field: Arc::clone(self), next: Some(vec![0; self.n]) }
    }

    /// Points of P^k over this field, normalized so the first nonzero
    /// coordinate (scanning from the left) is 1. Yields (q^(k+1)-1)/(q-1)
    /// points, each exactly once.
    pub fn enumerate_projective(
        self: &Arc<Self>,
        k: usize,
        budget: u128,
    ) -> Result<ProjectiveIter, FieldError> {
        assert!(k >= 1);
        let mut total: u128 = 0;
        let mut power: u128 = 1;
        for _ in 0..=k {
            total = total.checked_add(power).ok_or(FieldError::OrderTooLarge)?;
            power = power.checked_mul(self.q).ok_or(FieldError::OrderTooLarge)?;
        }
        // total = 1 + q + ... + q^k
        if total > budget {
            return Err(FieldError::BudgetExceeded(total));
        }
        Ok(ProjectiveIter {
            field: Arc::clone(self),
            k,
            pivot: 0,
            state: Some(vec![vec![0; self.n]; k]),
        })
    }
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on i128 to dodge sign juggling
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible");
    t.rem_euclid(p as i128) as u64
}

// ---- deterministic modulus ----

/// Lexicographically smallest monic irreducible of degree n over F_p,
/// coefficient tuples (c_0, ..., c_{n-1}) compared constant term first.
fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
    // c_0 = 0 means t divides f, so the whole first block of the scan is
    // composite; start past it
    let mut coeffs = vec![0u64; n];
    coeffs[0] = 1;
    loop {
        if is_irreducible(p, n, &coeffs) {
            let mut m = coeffs.clone();
            m.push(1);
            return m;
        }
        // odometer with c_{n-1} as the fastest digit so that the tuple
        // (c_0, c_1, ...) advances in lexicographic order
        let mut i = n;
        loop {
            assert!(i > 0, "no irreducible of degree {n} over F_{p}");
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

/// Irreducibility of the monic f = t^n + ... over F_p: t^(p^n) == t mod f and
/// gcd(t^(p^(n/l)) - t, f) = 1 for every prime l | n.
fn is_irreducible(p: u64, n: usize, coeffs: &[u64]) -> bool {
    if coeffs[0] == 0 {
        return false; // divisible by t
    }
    let f = ModPoly { p, coeffs: coeffs.to_vec(), n };
    let xq = f.pow_x_p_power(n as u32);
    if !f.is_x(&xq) {
        return false;
    }
    let mut m = n;
    let mut primes = vec![];
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for l in primes {
        let xe = f.pow_x_p_power((n / l) as u32);
        // gcd(xe - x, f) must be 1
        let mut g = xe;
        let idx = 1;
        if g.len() > idx {
            g[idx] = if g[idx] == 0 { p - 1 } else { g[idx] - 1 };
        }
        if !f.coprime(&g) {
            return false;
        }
    }
    true
}

/// Scratch arithmetic in F_p[t]/(f) for the irreducibility test only.
struct ModPoly {
    p: u64,
    coeffs: Vec<u64>, // non-leading coefficients of the monic modulus
    n: usize,
}

impl ModPoly {
    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n;
        let p = self.p as u128;
        let mut prod = vec![0u128; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        for k in (n..prod.len()).rev() {
            let c = prod[k] % p;
            if c != 0 {
                for i in 0..n {
                    let m = self.coeffs[i] as u128;
                    if m != 0 {
                        prod[k - n + i] = (prod[k - n + i] + p * p - c * m % (p * p)) % p;
                    }
                }
            }
        }
        prod[..n].iter().map(|&c| (c % p) as u64).collect()
    }

    /// t^(p^e) mod f by e rounds of p-th powering.
    fn pow_x_p_power(&self, e: u32) -> Vec<u64> {
        let mut x = vec![0u64; self.n];
        if self.n == 1 {
            // degenerate, unused: modulus of degree 1
            return x;
        }
        x[1] = 1;
        let mut acc = x.clone();
        for _ in 0..e {
            acc = self.pow(&acc, self.p);
        }
        acc
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; self.n];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn is_x(&self, a: &[u64]) -> bool {
        a.iter().enumerate().all(|(i, &c)| if i == 1 { c == 1 } else { c == 0 })
    }

    /// gcd(g, f) == 1 where f is the modulus (degree n, monic).
    fn coprime(&self, g: &[u64]) -> bool {
        let p = self.p;
        let mut a: Vec<u64> = {
            let mut f = self.coeffs.clone();
            f.push(1);
            f
        };
        let mut b = g.to_vec();
        trim(&mut b);
        loop {
            if b.is_empty() {
                return a.len() == 1;
            }
            let r = poly_rem(&a, &b, p);
            a = b;
            b = r;
        }
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] as u128 * lead_inv as u128 % p as u128;
        if c != 0 {
            for i in 0..=db {
                let sub = c * b[i] as u128 % p as u128;
                let idx = dr - db + i;
                r[idx] = ((r[idx] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

// ---- enumeration ----

pub struct ElemIter {
    field: Arc<Field>,
    next: Option<Vec<u64>>,
}

impl Iterator for ElemIter {
    type Item = FqElem;

    fn next(&mut self) -> Option<FqElem> {
        let cur = self.next.take()?;
        let mut nxt = cur.clone();
        let p = self.field.p;
        let mut i = 0;
        loop {
            if i == nxt.len() {
                self.next = None;
                break;
            }
            nxt[i] += 1;
            if nxt[i] < p {
                self.next = Some(nxt);
                break;
            }
            nxt[i] = 0;
            i += 1;
        }
        Some(FqElem(cur))
    }
}

/// Iterator over P^k(F_q): for pivot i (left to right), coordinates before i
/// are 0, coordinate i is 1, later coordinates run over the whole field.
pub struct ProjectiveIter {
    field: Arc<Field>,
    k: usize,
    pivot: usize,
    /// digits (coefficient vectors) of the free coordinates after the pivot;
    /// None once exhausted
    state: Option<Vec<Vec<u64>>>,
}

impl ProjectiveIter {
    fn emit(&self) -> Vec<FqElem> {
        let free = self.state.as_ref().unwrap();
        let mut pt = Vec::with_capacity(self.k + 1);
        for _ in 0..self.pivot {
            pt.push(self.field.zero());
        }
        pt.push(self.field.one());
        for digits in free {
            pt.push(FqElem(digits.clone()));
        }
        pt
    }
}

impl Iterator for ProjectiveIter {
    type Item = Vec<FqElem>;

    fn next(&mut self) -> Option<Vec<FqElem>> {
        self.state.as_ref()?;
        let out = self.emit();
        // advance odometer: last free coordinate fastest, within it the
        // element odometer order
        let p = self.field.p;
        let free = self.state.as_mut().unwrap();
        let mut pos = free.len();
        'outer: loop {
            if pos == 0 {
                // exhausted this pivot; move pivot right
                self.pivot += 1;
                if self.pivot > self.k {
                    self.state = None;
                } else {
                    self.state = Some(vec![vec![0; self.field.n]; self.k - self.pivot]);
                }
                break;
            }
            pos -= 1;
            let digits = &mut free[pos];
            let mut i = 0;
            loop {
                if i == digits.len() {
                    // wrapped; carry to previous coordinate
                    continue 'outer;
                }
                digits[i] += 1;
                if digits[i] < p {
                    break 'outer;
                }
                digits[i] = 0;
                i += 1;
            }
        }
        Some(out)
    }
}

// ---- shared field cache ----

static FIELD_CACHE: OnceLock<Mutex<HashMap<(u64, usize), Arc<Field>>>> = OnceLock::new();

/// Shared, cached field constructor. Everything downstream uses this so that
/// table construction (see `table`) happens once per (p, n).
pub fn make_field(p: u64, n: usize) -> Result<Arc<Field>, FieldError> {
    let cache = FIELD_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(f) = guard.get(&(p, n)) {
            return Ok(Arc::clone(f));
        }
    }
    let f = Arc::new(Field::new(p, n)?);
    let mut guard = cache.lock().unwrap();
    Ok(Arc::clone(guard.entry((p, n)).or_insert(f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(2, 3).unwrap_err(), FieldError::EvenCharacteristic);
        assert_eq!(Field::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), FieldError::NotPrime(1));
        assert_eq!(Field::new(5, 0).unwrap_err(), FieldError::DegreeOutOfRange(0));
        assert_eq!(Field::new(5, 25).unwrap_err(), FieldError::DegreeOutOfRange(25));
        assert!(Field::new((1 << 20) + 7, 1).is_err());
    }

    #[test]
    fn pinned_moduli_small_fields() {
        // Oracle: exhaustive scan of monic quadratics/cubics in tuple order,
        // testing irreducibility by root search / factor search.
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]); // t^2 + 1
        let f25 = Field::new(5, 2).unwrap();
        assert_eq!(f25.modulus(), &[1, 1, 1]); // t^2 + t + 1
        let f27 = Field::new(3, 3).unwrap();
        assert_eq!(f27.modulus(), &[1, 0, 2, 1]); // t^3 + 2t^2 + 1

        // independent check: the pinned quadratic over F_3 really is the
        // first irreducible in tuple order
        let mut first = None;
        'search: for c0 in 0..3u64 {
            for c1 in 0..3u64 {
                let has_root = (0..3u64).any(|x| (x * x + c1 * x + c0) % 3 == 0);
                if !has_root {
                    first = Some([c0, c1]);
                    break 'search;
                }
            }
        }
        assert_eq!(first, Some([1, 0]));
    }

    #[test]
    fn modulus_matches_root_free_scan_f25() {
        let mut first = None;
        'search: for c0 in 0..5u64 {
            for c1 in 0..5u64 {
                if !(0..5u64).any(|x| (x * x + c1 * x + c0) % 5 == 0) {
                    first = Some([c0, c1]);
                    break 'search;
                }
            }
        }
        assert_eq!(first, Some([1, 1]));
        assert_eq!(Field::new(5, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn modulus_matches_root_free_scan_f27() {
        // for cubics, no roots means irreducible
        let mut first = None;
        'search: for c0 in 0..3u64 {
            for c1 in 0..3u64 {
                for c2 in 0..3u64 {
                    if !(0..3u64).any(|x| (x * x * x + c2 * x * x + c1 * x + c0) % 3 == 0) {
                        first = Some([c0, c1, c2]);
                        break 'search;
                    }
                }
            }
        }
        assert_eq!(first, Some([1, 0, 2]));
        assert_eq!(Field::new(3, 3).unwrap().modulus(), &[1, 0, 2, 1]);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = make_field(47, 1).unwrap();
        let a = f.from_u64(30);
        let b = f.from_u64(25);
        assert_eq!(f.add(&a, &b), f.from_u64(8));
        assert_eq!(f.mul(&a, &b), f.from_u64(750 % 47));
        assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
        assert_eq!(f.sub(&b, &a), f.from_i64(-5));
    }

    #[test]
    fn extension_arithmetic_f9() {
        let f = make_field(3, 2).unwrap();
        // modulus t^2 + 1: t * t = -1
        let t = f.from_coeffs(&[0, 1]);
        assert_eq!(f.mul(&t, &t), f.from_i64(-1));
        // g = t + 1 has order 8
        let g = f.from_coeffs(&[1, 1]);
        let mut seen = std::collections::HashSet::new();
        let mut x = f.one();
        for _ in 0..8 {
            x = f.mul(&x, &g);
            seen.insert(x.clone());
        }
        assert_eq!(x, f.one());
        assert_eq!(seen.len(), 8);
        // inverses across the whole field
        for e in Arc::clone(&f).elements() {
            if !f.is_zero(&e) {
                assert_eq!(f.mul(&e, &f.inv(&e)), f.one());
            }
        }
    }

    #[test]
    fn quadratic_character_matches_square_enumeration() {
        // Oracle: enumerate squares directly.
        for (p, n) in [(5u64, 1usize), (3, 1), (7, 1), (3, 2), (5, 2)] {
            let f = make_field(p, n).unwrap();
            let mut squares = std::collections::HashSet::new();
            for e in f.elements() {
                squares.insert(f.mul(&e, &e));
            }
            for e in f.elements() {
                let expected = if f.is_zero(&e) {
                    0
                } else if squares.contains(&e) {
                    1
                } else {
                    -1
                };
                assert_eq!(f.quadratic_character(&e), expected);
            }
        }
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.quadratic_character(&f5.from_u64(4)), 1);
        assert_eq!(f5.quadratic_character(&f5.zero()), 0);
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.quadratic_character(&f3.from_u64(2)), -1);
    }

    #[test]
    fn character_is_multiplicative_and_balanced() {
        for (p, n) in [(3u64, 4usize), (7, 2), (13, 1)] {
            let f = make_field(p, n).unwrap();
            let els: Vec<_> = f.elements().collect();
            let mut total: i64 = 0;
            for a in &els {
                total += f.quadratic_character(a) as i64;
            }
            assert_eq!(total, 0, "character must sum to zero over F_{{{p}^{n}}}");
            // spot-check multiplicativity on a deterministic sample
            for (i, a) in els.iter().step_by(7).enumerate() {
                let b = &els[(3 * i + 1) % els.len()];
                let ab = f.mul(a, b);
                assert_eq!(
                    f.quadratic_character(&ab) as i64,
                    f.quadratic_character(a) as i64 * f.quadratic_character(b) as i64
                );
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_field() {
        let f = make_field(3, 4).unwrap();
        let mut fixed = 0;
        for e in f.elements() {
            let fr = f.frobenius(&e);
            // additive and multiplicative on a sample is implied; here check
            // the fixed set
            if fr == e {
                fixed += 1;
            }
        }
        assert_eq!(fixed, 3);
        let f47 = make_field(47, 1).unwrap();
        let a = f47.from_u64(29);
        assert_eq!(f47.frobenius(&a), a);
    }

    #[test]
    fn frobenius_power_tables_f9() {
        let f = make_field(3, 2).unwrap();
        let g = f.from_coeffs(&[1, 1]); // generator, order 8
        let g3 = f.pow(&g, 3);
        assert_eq!(f.frobenius(&g), g3);
        assert_eq!(f.pow(&g3, 3), g); // (g^3)^3 = g^9 = g
        assert_eq!(f.frobenius(&f.zero()), f.zero());
    }

    #[test]
    fn frobenius_is_a_ring_map() {
        let f = make_field(5, 3).unwrap();
        let els: Vec<_> = f.elements().take(40).collect();
        for (i, a) in els.iter().enumerate() {
            let b = &els[(i * 7 + 3) % els.len()];
            assert_eq!(f.frobenius(&f.add(a, b)), f.add(&f.frobenius(a), &f.frobenius(b)));
            assert_eq!(f.frobenius(&f.mul(a, b)), f.mul(&f.frobenius(a), &f.frobenius(b)));
        }
    }

    #[test]
    fn projective_counts() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.enumerate_projective(1, DEFAULT_ENUM_BUDGET).unwrap().count(), 4);
        assert_eq!(f3.enumerate_projective(2, DEFAULT_ENUM_BUDGET).unwrap().count(), 13);
        let f25 = make_field(5, 2).unwrap();
        assert_eq!(f25.enumerate_projective(2, DEFAULT_ENUM_BUDGET).unwrap().count(), 651);
    }

    #[test]
    fn projective_points_unique_and_normalized() {
        let f = make_field(3, 2).unwrap();
        let pts: Vec<_> = f.enumerate_projective(2, DEFAULT_ENUM_BUDGET).unwrap().collect();
        let mut seen = std::collections::HashSet::new();
        for pt in &pts {
            let first_nonzero = pt.iter().position(|c| !f.is_zero(c)).unwrap();
            assert_eq!(pt[first_nonzero], f.one());
            assert!(seen.insert(pt.clone()), "duplicate projective point");
        }
        assert_eq!(pts.len(), 91); // 81 + 9 + 1
    }

    #[test]
    fn budget_is_enforced() {
        let f = make_field(11, 2).unwrap();
        match f.enumerate_projective(2, 100) {
            Err(FieldError::BudgetExceeded(n)) => assert_eq!(n, 121 * 121 + 121 + 1),
            other => panic!("expected budget error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn large_field_orders() {
        // p^n close to the 128-bit cap must still construct
        let f = Field::new(3, 24).unwrap();
        assert_eq!(f.order(), 3u128.pow(24));
        let a = f.from_coeffs(&[1, 2, 0, 1, 1]);
        assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
    }

    #[test]
    fn in_subfield_detects_base_field() {
        let f = make_field(5, 2).unwrap();
        for e in f.elements() {
            let base = e.0[1] == 0;
            assert_eq!(f.in_subfield(&e, 1), base);
        }
    }
}
