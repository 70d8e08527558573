//! Square matrices of polynomials: exact determinants, adjugates, and the
//! bordered-determinant identity v' adj(M) v = -det([[0, v'], [v, M]]).
//!
//! Determinants use cofactor expansion through dimension 4 (entries there
//! are small and often sparse, and expansion tolerates zero pivots without
//! fuss) and fraction-free Bareiss elimination above that; Bareiss divisions
//! are exact by construction, so everything stays in the coefficient ring.

use super::mpoly::MPoly;
use super::ring::{FieldRing, Ring};

pub const MAX_DIM: usize = 8;

#[derive(Clone)]
pub struct PolyMatrix<R: Ring> {
    n: usize,
    nvars: usize,
    /// row-major entries, length n*n
    entries: Vec<MPoly<R>>,
}

impl<R: Ring> PolyMatrix<R> {
    pub fn new(n: usize, entries: Vec<MPoly<R>>) -> PolyMatrix<R> {
        assert!(n >= 1 && n <= MAX_DIM, "dimension {n} out of range");
        assert_eq!(entries.len(), n * n, "need {} entries", n * n);
        let nvars = entries[0].nvars();
        assert!(entries.iter().all(|e| e.nvars() == nvars), "mixed variable counts");
        PolyMatrix { n, nvars, entries }
    }

    pub fn identity(ring: &R, n: usize, nvars: usize) -> PolyMatrix<R> {
        let mut entries = vec![MPoly::zero(nvars); n * n];
        for i in 0..n {
            entries[i * n + i] = MPoly::one(ring, nvars);
        }
        PolyMatrix::new(n, entries)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly<R> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MPoly<R>) {
        assert_eq!(v.nvars(), self.nvars);
        self.entries[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, ring: &R, other: &PolyMatrix<R>) -> PolyMatrix<R> {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = MPoly::zero(self.nvars);
                for k in 0..n {
                    acc = acc.add(ring, &self.get(i, k).mul(ring, other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(n, entries)
    }

    pub fn det(&self, ring: &R) -> MPoly<R> {
        if self.n <= 4 {
            self.det_cofactor(ring)
        } else {
            self.det_bareiss(ring)
        }
    }

    fn det_cofactor(&self, ring: &R) -> MPoly<R> {
        det_cofactor_rec(ring, self.n, self.nvars, &|i, j| self.get(i, j))
    }

    /// Fraction-free elimination: each 2x2 cross product is divided by the
    /// previous pivot, an exact division by Sylvester's identity.
    fn det_bareiss(&self, ring: &R) -> MPoly<R> {
        let n = self.n;
        let mut m: Vec<MPoly<R>> = self.entries.clone();
        let mut prev = MPoly::one(ring, self.nvars);
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                    None => return MPoly::zero(self.nvars),
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        negate = !negate;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let cross = m[k * n + k]
                        .mul(ring, &m[i * n + j])
                        .sub(ring, &m[i * n + k].mul(ring, &m[k * n + j]));
                    m[i * n + j] = cross
                        .div_exact(ring, &prev)
                        .expect("Bareiss division is exact");
                }
                m[i * n + k] = MPoly::zero(self.nvars);
            }
            prev = m[k * n + k].clone();
        }
        let d = m[(n - 1) * n + (n - 1)].clone();
        if negate { d.neg(ring) } else { d }
    }

    /// Adjugate: transpose of the cofactor matrix, so that
    /// self * adjugate = det * identity exactly.
    pub fn adjugate(&self, ring: &R) -> PolyMatrix<R> {
        let n = self.n;
        if n == 1 {
            return PolyMatrix::new(1, vec![MPoly::one(ring, self.nvars)]);
        }
        let mut entries = vec![MPoly::zero(self.nvars); n * n];
        for i in 0..n {
            for j in 0..n {
                let minor = det_cofactor_rec(ring, n - 1, self.nvars, &|r, c| {
                    let rr = if r < i { r } else { r + 1 };
                    let cc = if c < j { c } else { c + 1 };
                    self.get(rr, cc)
                });
                let cof = if (i + j) % 2 == 0 { minor } else { minor.neg(ring) };
                entries[j * n + i] = cof; // transposed
            }
        }
        PolyMatrix::new(n, entries)
    }

    /// The (n+1) x (n+1) matrix [[0, v'], [v, self]].
    pub fn bordered(&self, ring: &R, v: &[MPoly<R>]) -> PolyMatrix<R> {
        assert_eq!(v.len(), self.n, "border vector length mismatch");
        let n = self.n + 1;
        let mut entries = vec![MPoly::zero(self.nvars); n * n];
        for (j, vj) in v.iter().enumerate() {
            assert_eq!(vj.nvars(), self.nvars);
            entries[j + 1] = vj.clone();
            entries[(j + 1) * n] = vj.clone();
        }
        for i in 0..self.n {
            for j in 0..self.n {
                entries[(i + 1) * n + (j + 1)] = self.get(i, j).clone();
            }
        }
        let _ = ring;
        PolyMatrix::new(n, entries)
    }
}

fn det_cofactor_rec<'a, R: Ring>(
    ring: &R,
    n: usize,
    nvars: usize,
    get: &dyn Fn(usize, usize) -> &'a MPoly<R>,
) -> MPoly<R>
where
    R: 'a,
{
    match n {
        1 => get(0, 0).clone(),
        2 => get(0, 0)
            .mul(ring, get(1, 1))
            .sub(ring, &get(0, 1).mul(ring, get(1, 0))),
        _ => {
            // expand along the first column, skipping zero entries
            let mut acc = MPoly::zero(nvars);
            for i in 0..n {
                let a = get(i, 0);
                if a.is_zero() {
                    continue;
                }
                let minor = det_cofactor_rec(ring, n - 1, nvars, &|r, c| {
                    let rr = if r < i { r } else { r + 1 };
                    get(rr, c + 1)
                });
                let term = a.mul(ring, &minor);
                acc = if i % 2 == 0 { acc.add(ring, &term) } else { acc.sub(ring, &term) };
            }
            acc
        }
    }
}

/// Identity check v' adj(M) v + det([[0, v'], [v, M]]) = 0, expanded on both
/// sides independently; used as a self-test by the property suite.
pub fn bordered_det_identity_check<R: Ring>(
    ring: &R,
    m: &PolyMatrix<R>,
    v: &[MPoly<R>],
) -> bool {
    assert_eq!(v.len(), m.dim(), "dimension mismatch");
    let adj = m.adjugate(ring);
    let n = m.dim();
    let mut quad = MPoly::zero(m.nvars);
    for i in 0..n {
        for j in 0..n {
            quad = quad.add(ring, &v[i].mul(ring, adj.get(i, j)).mul(ring, &v[j]));
        }
    }
    let b = m.bordered(ring, v).det(ring);
    quad.add(ring, &b).is_zero()
}

/// Determinant of a scalar matrix over a field by Gaussian elimination
/// (row-major entries, length n*n).
pub fn scalar_det<R: FieldRing>(ring: &R, n: usize, entries: &[R::Elem]) -> R::Elem {
    assert_eq!(entries.len(), n * n);
    let mut m = entries.to_vec();
    let mut det = ring.one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !ring.is_zero(&m[r * n + k]));
        let Some(pr) = pivot else {
            return ring.zero();
        };
        if pr != k {
            for j in 0..n {
                m.swap(k * n + j, pr * n + j);
            }
            det = ring.neg(&det);
        }
        let pk = m[k * n + k].clone();
        det = ring.mul(&det, &pk);
        let inv = ring.inv(&pk);
        for i in k + 1..n {
            if ring.is_zero(&m[i * n + k]) {
                continue;
            }
            let factor = ring.mul(&m[i * n + k], &inv);
            for j in k..n {
                let sub = ring.mul(&factor, &m[k * n + j]);
                m[i * n + j] = ring.sub(&m[i * n + j], &sub);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use crate::poly::ring::{Fq, Qq, Zz};

    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            self.0 >> 33
        }
    }

    #[test]
    fn two_by_two_bordered_shape() {
        // [[0, a], [a, m]] has determinant -a^2
        let r = Qq;
        let a = MPoly::var(&r, 0, 2);
        let m = MPoly::var(&r, 1, 2);
        let mat = PolyMatrix::new(2, vec![MPoly::zero(2), a.clone(), a.clone(), m]);
        assert_eq!(mat.det(&r), a.pow(&r, 2).neg(&r));
    }

    #[test]
    fn identity_det_is_one() {
        let r = Qq;
        for n in 1..=6 {
            assert_eq!(PolyMatrix::identity(&r, n, 1).det(&r), MPoly::one(&r, 1));
        }
    }

    #[test]
    fn adjugate_small_cases() {
        let r = Qq;
        // 1x1
        let m1 = PolyMatrix::new(1, vec![MPoly::var(&r, 0, 1)]);
        assert_eq!(m1.adjugate(&r).get(0, 0), &MPoly::one(&r, 1));
        // 2x2 [[a,b],[c,d]] -> [[d,-b],[-c,a]]
        let names: Vec<MPoly<Qq>> = (0..4).map(|i| MPoly::var(&r, i, 4)).collect();
        let m2 = PolyMatrix::new(2, names.clone());
        let adj = m2.adjugate(&r);
        assert_eq!(adj.get(0, 0), &names[3]);
        assert_eq!(adj.get(0, 1), &names[1].neg(&r));
        assert_eq!(adj.get(1, 0), &names[2].neg(&r));
        assert_eq!(adj.get(1, 1), &names[0]);
    }

    #[test]
    fn adjugate_identity_random_3x3_over_f7() {
        let ring = Fq(make_field(7, 1).unwrap());
        let mut rng = Lcg(23);
        for _ in 0..20 {
            let entries: Vec<MPoly<Fq>> = (0..9)
                .map(|_| {
                    // random linear form in 2 variables
                    MPoly::from_terms(
                        &ring,
                        2,
                        vec![
                            (vec![1, 0], ring.from_i64((rng.next() % 7) as i64)),
                            (vec![0, 1], ring.from_i64((rng.next() % 7) as i64)),
                        ],
                    )
                })
                .collect();
            let m = PolyMatrix::new(3, entries);
            let adj = m.adjugate(&ring);
            let prod = m.mul(&ring, &adj);
            let d = m.det(&ring);
            for i in 0..3 {
                for j in 0..3 {
                    let expect = if i == j { d.clone() } else { MPoly::zero(2) };
                    assert_eq!(prod.get(i, j), &expect);
                }
            }
        }
    }

    #[test]
    fn bareiss_matches_cofactor() {
        // compare a 5x5 Bareiss determinant with the 5x5 cofactor expansion
        let ring = Zz;
        let mut rng = Lcg(7);
        for _ in 0..10 {
            let entries: Vec<MPoly<Zz>> = (0..25)
                .map(|_| {
                    MPoly::from_terms(
                        &ring,
                        2,
                        vec![
                            (vec![1, 0], ring.from_i64((rng.next() % 5) as i64 - 2)),
                            (vec![0, 1], ring.from_i64((rng.next() % 5) as i64 - 2)),
                            (vec![0, 0], ring.from_i64((rng.next() % 5) as i64 - 2)),
                        ],
                    )
                })
                .collect();
            let m = PolyMatrix::new(5, entries);
            let fast = m.det_bareiss(&ring);
            let slow = det_cofactor_rec(&ring, 5, 2, &|i, j| m.get(i, j));
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let ring = Zz;
        // permutation-like matrix with a zero leading block
        let mut m = PolyMatrix::identity(&ring, 5, 1);
        // swap first two rows of the identity: determinant -1
        m.set(0, 0, MPoly::zero(1));
        m.set(0, 1, MPoly::one(&ring, 1));
        m.set(1, 1, MPoly::zero(1));
        m.set(1, 0, MPoly::one(&ring, 1));
        assert_eq!(m.det(&ring), MPoly::one(&ring, 1).neg(&ring));
        // singular matrix: two equal rows
        let x = MPoly::var(&ring, 0, 1);
        let row = vec![x.clone(), x.clone(), x.clone(), x.clone(), x.clone()];
        let mut entries = Vec::new();
        entries.extend(row.clone());
        entries.extend(row.clone());
        for _ in 0..15 {
            entries.push(MPoly::one(&ring, 1));
        }
        let sing = PolyMatrix::new(5, entries);
        assert!(sing.det(&ring).is_zero());
    }

    #[test]
    fn bordered_identity_scalar_matrices_1000() {
        // the contract asks for 1000 random instances across F5, F7, and ZZ
        let f5 = Fq(make_field(5, 1).unwrap());
        let f7 = Fq(make_field(7, 1).unwrap());
        let zr = Zz;
        let mut rng = Lcg(2024);
        for trial in 0..1000 {
            let n = 1 + (rng.next() % 5) as usize;
            match trial % 3 {
                0 => run_scalar_bordered(&f5, &mut rng, n, 5),
                1 => run_scalar_bordered(&f7, &mut rng, n, 7),
                _ => run_scalar_bordered(&zr, &mut rng, n, 9),
            }
        }
    }

    fn run_scalar_bordered<R: Ring>(ring: &R, rng: &mut Lcg, n: usize, span: u64) {
        let entries: Vec<MPoly<R>> = (0..n * n)
            .map(|_| {
                MPoly::constant(ring, ring.from_i64((rng.next() % span) as i64 - (span / 2) as i64), 1)
            })
            .collect();
        let v: Vec<MPoly<R>> = (0..n)
            .map(|_| {
                MPoly::constant(ring, ring.from_i64((rng.next() % span) as i64 - (span / 2) as i64), 1)
            })
            .collect();
        let m = PolyMatrix::new(n, entries);
        assert!(bordered_det_identity_check(ring, &m, &v));
    }

    #[test]
    fn bordered_identity_polynomial_entries() {
        // genuinely polynomial instances: linear forms over F5 in 3 vars
        let ring = Fq(make_field(5, 1).unwrap());
        let mut rng = Lcg(31337);
        for _ in 0..25 {
            let n = 2 + (rng.next() % 2) as usize; // 2 or 3
            let lin = |rng: &mut Lcg| {
                MPoly::from_terms(
                    &ring,
                    3,
                    (0..3).map(|i| {
                        let mut e = vec![0u16; 3];
                        e[i] = 1;
                        (e, ring.from_i64((rng.next() % 5) as i64))
                    }),
                )
            };
            let entries: Vec<MPoly<Fq>> = (0..n * n).map(|_| lin(&mut rng)).collect();
            let v: Vec<MPoly<Fq>> = (0..n).map(|_| lin(&mut rng)).collect();
            let m = PolyMatrix::new(n, entries);
            assert!(bordered_det_identity_check(&ring, &m, &v));
        }
        // and one integer 4x4 as in the contract examples
        let z = Zz;
        let mut rng2 = Lcg(555);
        let entries: Vec<MPoly<Zz>> = (0..16)
            .map(|_| MPoly::constant(&z, z.from_i64((rng2.next() % 21) as i64 - 10), 1))
            .collect();
        let v: Vec<MPoly<Zz>> =
            (0..4).map(|_| MPoly::constant(&z, z.from_i64((rng2.next() % 21) as i64 - 10), 1)).collect();
        assert!(bordered_det_identity_check(&z, &PolyMatrix::new(4, entries), &v));
    }

    #[test]
    fn block_triangular_det_multiplies() {
        let r = Qq;
        let x = MPoly::var(&r, 0, 2);
        let y = MPoly::var(&r, 1, 2);
        // [[x, y], [0, y]] -> x*y
        let m = PolyMatrix::new(2, vec![x.clone(), y.clone(), MPoly::zero(2), y.clone()]);
        assert_eq!(m.det(&r), x.mul(&r, &y));
    }

    #[test]
    fn scalar_det_gaussian() {
        let ring = Fq(make_field(13, 1).unwrap());
        // det [[1,2],[3,4]] = -2 = 11 mod 13
        let e: Vec<_> = [1i64, 2, 3, 4].iter().map(|&c| ring.from_i64(c)).collect();
        assert_eq!(scalar_det(&ring, 2, &e), ring.from_i64(-2));
        // singular
        let s: Vec<_> = [1i64, 2, 2, 4].iter().map(|&c| ring.from_i64(c)).collect();
        assert_eq!(scalar_det(&ring, 2, &s), ring.from_i64(0));
        // compare against cofactor path on a 4x4
        let mut rng = Lcg(8);
        for _ in 0..20 {
            let vals: Vec<_> = (0..16).map(|_| ring.from_i64((rng.next() % 13) as i64)).collect();
            let scalar = scalar_det(&ring, 4, &vals);
            let m = PolyMatrix::new(
                4,
                vals.iter().map(|c| MPoly::constant(&ring, c.clone(), 1)).collect(),
            );
            assert_eq!(MPoly::constant(&ring, scalar, 1), m.det(&ring));
        }
    }
}
