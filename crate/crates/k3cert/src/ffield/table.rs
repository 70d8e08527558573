//! Zech-logarithm tables for fast arithmetic in small fields.
//!
//! For q = p^n up to 2^22 every nonzero element is stored as the discrete log
//! of a fixed generator g, as a `u32` in 0..q-1; zero gets the sentinel value
//! q-1. Multiplication is addition mod q-1, addition goes through the Zech
//! table zech[k] = log(1 + g^k), and the quadratic character of g^k is
//! (-1)^k. The generator is pinned: the first element in the canonical
//! odometer order (constant coefficient fastest) of multiplicative order q-1,
//! so table-level data is reproducible across runs.

use super::{Field, FieldError, FqElem, make_field};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest field order served by tables.
pub const MAX_TABLE_ORDER: u128 = 1 << 22;

/// Log-form arithmetic for one field. Elements are `u32` logs; `self.zero()`
/// (= q-1) is the zero sentinel.
pub struct FqTable {
    field: Arc<Field>,
    q: u32,
    qm1: u32,
    half: u32, // log of -1, i.e. (q-1)/2
    /// exp[k] = base-p digit index of g^k, k in 0..q-1
    exp: Vec<u32>,
    /// log[idx] = k with g^k the element of digit index idx; log[0] = sentinel
    log: Vec<u32>,
    /// zech[k] = log(1 + g^k), sentinel where 1 + g^k = 0
    zech: Vec<u32>,
    /// digit index of the pinned generator
    generator_idx: u32,
}

impl FqTable {
    fn build(field: Arc<Field>) -> Result<FqTable, FieldError> {
        if field.order() > MAX_TABLE_ORDER {
            return Err(FieldError::TableTooLarge(field.order()));
        }
        let q = field.order() as u32;
        let qm1 = q - 1;
        let p = field.p() as u32;

        let generator = find_generator(&field);
        let mut exp = vec![0u32; qm1 as usize];
        let mut log = vec![qm1; q as usize];
        let mut x = field.one();
        for k in 0..qm1 {
            let idx = digit_index(&x, p);
            exp[k as usize] = idx;
            log[idx as usize] = k;
            x = field.mul(&x, &generator);
        }
        debug_assert_eq!(x, field.one(), "generator order must be q-1");

        // 1 + g^k changes only the constant digit of the index
        let mut zech = vec![0u32; qm1 as usize];
        for k in 0..qm1 {
            let idx = exp[k as usize];
            let c0 = idx % p;
            let bumped = if c0 + 1 == p { idx - c0 } else { idx + 1 };
            zech[k as usize] = log[bumped as usize];
        }

        let generator_idx = digit_index(&generator, p);
        Ok(FqTable { field, q, qm1, half: qm1 / 2, exp, log, zech, generator_idx })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p() as u32
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// The pinned generator as a field element.
    pub fn generator(&self) -> FqElem {
        elem_from_digit_index(&self.field, self.generator_idx, self.field.p() as u32)
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        self.qm1
    }

    #[inline]
    pub fn one(&self) -> u32 {
        0
    }

    #[inline]
    pub fn is_zero(&self, a: u32) -> bool {
        a == self.qm1
    }

    /// log of -1.
    #[inline]
    pub fn minus_one(&self) -> u32 {
        self.half
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == self.qm1 || b == self.qm1 {
            return self.qm1;
        }
        let s = a + b;
        if s >= self.qm1 { s - self.qm1 } else { s }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == self.qm1 {
            return b;
        }
        if b == self.qm1 {
            return a;
        }
        // g^a + g^b = g^a (1 + g^(b-a))
        let d = if b >= a { b - a } else { b + self.qm1 - a };
        let z = self.zech[d as usize];
        if z == self.qm1 {
            self.qm1
        } else {
            let s = a + z;
            if s >= self.qm1 { s - self.qm1 } else { s }
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.mul(a, self.half)
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != self.qm1, "inverse of zero");
        if a == 0 { 0 } else { self.qm1 - a }
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == self.qm1 {
            return if e == 0 { 0 } else { self.qm1 };
        }
        ((a as u64 * (e % self.qm1 as u64)) % self.qm1 as u64) as u32
    }

    /// Quadratic character: 0 on zero, else parity of the log.
    #[inline]
    pub fn chi(&self, a: u32) -> i8 {
        if a == self.qm1 {
            0
        } else if a & 1 == 0 {
            1
        } else {
            -1
        }
    }

    /// p-power Frobenius in log form.
    #[inline]
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.field.p())
    }

    pub fn from_elem(&self, a: &FqElem) -> u32 {
        self.log[digit_index(a, self.p()) as usize]
    }

    pub fn to_elem(&self, a: u32) -> FqElem {
        if a == self.qm1 {
            self.field.zero()
        } else {
            elem_from_digit_index(&self.field, self.exp[a as usize], self.p())
        }
    }

    pub fn from_u64(&self, a: u64) -> u32 {
        self.from_elem(&self.field.from_u64(a))
    }

    pub fn from_i64(&self, a: i64) -> u32 {
        self.from_elem(&self.field.from_i64(a))
    }

    /// Every element once: zero first, then g^0, g^1, ...
    pub fn all(&self) -> impl Iterator<Item = u32> + '_ {
        std::iter::once(self.qm1).chain(0..self.qm1)
    }
}

/// Base-p digit encoding of a coefficient vector (constant digit least
/// significant); bijective with the field for q < 2^32.
fn digit_index(a: &FqElem, p: u32) -> u32 {
    let mut idx = 0u32;
    for &c in a.0.iter().rev() {
        idx = idx * p + c as u32;
    }
    idx
}

fn elem_from_digit_index(field: &Field, mut idx: u32, p: u32) -> FqElem {
    let mut coeffs = Vec::with_capacity(field.degree());
    for _ in 0..field.degree() {
        coeffs.push((idx % p) as u64);
        idx /= p;
    }
    field.from_coeffs(&coeffs)
}

/// First element in canonical odometer order of multiplicative order q-1.
fn find_generator(field: &Field) -> FqElem {
    let qm1 = field.order() - 1;
    let mut primes = vec![];
    let mut m = qm1;
    let mut d: u128 = 2;
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
    let p = field.p() as u32;
    let q = field.order() as u32;
    for idx in 1..q {
        let g = elem_from_digit_index(field, idx, p);
        if primes.iter().all(|&l| field.pow(&g, qm1 / l) != field.one()) {
            return g;
        }
    }
    unreachable!("cyclic group has a generator")
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<(u64, usize), Arc<FqTable>>>> = OnceLock::new();

/// Shared, cached table constructor; the underlying `Field` comes from
/// `make_field` so moduli stay pinned.
pub fn make_table(p: u64, n: usize) -> Result<Arc<FqTable>, FieldError> {
    let cache = TABLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(t) = guard.get(&(p, n)) {
            return Ok(Arc::clone(t));
        }
    }
    let field = make_field(p, n)?;
    let t = Arc::new(FqTable::build(field)?);
    let mut guard = cache.lock().unwrap();
    Ok(Arc::clone(guard.entry((p, n)).or_insert(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_generator_f9() {
        let t = make_table(3, 2).unwrap();
        let f = t.field();
        // t itself squares to -1 (order 4); the first generator in odometer
        // order is t + 1
        assert_eq!(t.generator(), f.from_coeffs(&[1, 1]));
    }

    #[test]
    fn agrees_with_generic_arithmetic() {
        for (p, n) in [(3u64, 2usize), (5, 2), (3, 3), (47, 1)] {
            let t = make_table(p, n).unwrap();
            let f = Arc::clone(t.field());
            let els: Vec<FqElem> = f.elements().collect();
            for a in &els {
                let la = t.from_elem(a);
                assert_eq!(t.to_elem(la), *a, "round trip");
                assert_eq!(t.chi(la), f.quadratic_character(a));
                assert_eq!(t.to_elem(t.frobenius(la)), f.frobenius(a));
                for b in &els {
                    let lb = t.from_elem(b);
                    assert_eq!(t.to_elem(t.add(la, lb)), f.add(a, b));
                    assert_eq!(t.to_elem(t.mul(la, lb)), f.mul(a, b));
                    assert_eq!(t.to_elem(t.sub(la, lb)), f.sub(a, b));
                }
                if !f.is_zero(a) {
                    assert_eq!(t.to_elem(t.inv(la)), f.inv(a));
                }
            }
        }
    }

    #[test]
    fn character_alternates_with_log() {
        let t = make_table(7, 1).unwrap();
        let mut total = 0i64;
        for a in t.all() {
            total += t.chi(a) as i64;
        }
        assert_eq!(total, 0);
        assert_eq!(t.chi(t.zero()), 0);
        assert_eq!(t.chi(t.one()), 1);
        assert_eq!(t.chi(t.minus_one()), if (7 - 1) / 2 % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn pow_and_minus_one() {
        let t = make_table(47, 1).unwrap();
        let f = t.field();
        assert_eq!(t.to_elem(t.minus_one()), f.from_i64(-1));
        let a = t.from_u64(5);
        assert_eq!(t.to_elem(t.pow(a, 3)), f.from_u64(125 % 47));
        assert_eq!(t.pow(t.zero(), 0), t.one());
        assert_eq!(t.pow(t.zero(), 5), t.zero());
    }

    #[test]
    fn rejects_oversized_fields() {
        // 47^4 = 4879681 > 2^22
        match make_table(47, 4) {
            Err(FieldError::TableTooLarge(n)) => assert_eq!(n, 4879681),
            other => panic!("expected size error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn all_iterates_every_element_once() {
        let t = make_table(5, 2).unwrap();
        let f = Arc::clone(t.field());
        let mut seen = std::collections::HashSet::new();
        for a in t.all() {
            assert!(seen.insert(t.to_elem(a)));
        }
        assert_eq!(seen.len(), 25);
        assert!(seen.contains(&f.zero()));
    }
}
