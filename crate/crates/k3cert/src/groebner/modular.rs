//! Verified Nullstellensatz certificates for rational triviality.
//!
//! Some trivial ideals over Q drive direct integer Buchberger through
//! intermediate coefficients of thousands of digits while the same
//! computation over a word-size prime field finishes in milliseconds.
//! The hybrid here runs certificate search first. For a prime p, a fast
//! untracked Groebner run decides whether the ideal is trivial mod p;
//! when it is, a certificate 1 = sum h_i f_i of bounded degree is found
//! by linear algebra: the identity, restricted to deg(h_i f_i) <= B, is
//! a linear system over F_p in the unknown cofactor coefficients. Row
//! echelon over F_p locates a solvable bound B and a square nonsingular
//! pivot subsystem, whose integer matrix is then solved exactly by
//! p-adic lifting (one LU mod p, one back-substitution per p-adic
//! digit) and rational reconstruction. The lifted identity is finally
//! checked in exact rational arithmetic. That exact check is what makes
//! a true answer sound; the prime only determines how quickly a
//! certificate is found. A false answer is only ever concluded from a
//! direct integer computation completed under a coefficient growth
//! guard, never from mod-p behaviour, so neither direction depends on
//! luck.
//!
//! Cofactors extracted from a tracked Buchberger derivation were tried
//! first and abandoned: derivation-path certificates compound in degree
//! and support along the reduction DAG and blow past memory even on
//! systems whose minimal certificates are small.

use super::{buchberger, GbConfig, GroebnerError};
use crate::ffield::{is_prime_u64, make_field, mod_inv};
use crate::poly::mpoly::MPoly;
use crate::poly::ring::{Fq, Qq, Zz};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

/// Growth guard for the direct integer run: abort once a working
/// polynomial's coefficients pass this many bits. Small systems never get
/// near it; the pathological ones it exists for were measured in the
/// thousands of digits.
const DIRECT_BIT_CAP: u64 = 512;
/// Certificate search gives up after this many primes.
const MAX_CERT_PRIMES: usize = 6;
/// Certificate search stops early once this many primes found the ideal
/// nontrivial mod p and none produced a certificate.
const EARLY_NONTRIVIAL_STOP: usize = 3;
/// Monomials are packed into u128 keys, sixteen bits per variable, so
/// the certificate path carries at most eight variables. The geometric
/// systems it serves use six or seven.
const MAX_PACK_VARS: usize = 8;
/// Largest certificate system size, as rows times columns of the
/// Macaulay matrix; degree bounds whose matrix would exceed this are
/// not attempted.
const MAX_MATRIX_CELLS: usize = 24_000_000;
/// p-adic digits computed before giving up on a prime; at twenty bits
/// per digit this accommodates solution heights of tens of thousands of
/// bits, which dense pivot systems of rank in the low thousands do
/// reach. Overridable through K3CERT_DIXON_DIGITS for experiments.
const MAX_DIXON_ITERS: usize = 4096;
/// Input coefficients must be narrow enough for the lifting residual
/// arithmetic to stay in machine words: the pivot rank never exceeds
/// the square root of the matrix cell budget (below 2^13), so with
/// 29-bit entries every residual accumulation stays under 2^62.
const MAX_INPUT_COEFF_BITS: u64 = 29;

/// Triviality of a rational ideal presented by primitive integer
/// generators. Certificate search runs first: its mod-p probes cost
/// seconds, settle the trivial case with a verified identity, and
/// recognize the visibly nontrivial case after a few primes. Only then
/// does the direct integer computation run, under the growth guard, to
/// decide the nontrivial case exactly. Both final answers are exact; the
/// modular phase can only spend time, never decide wrongly.
pub(crate) fn contains_one_hybrid_zz(
    gens: &[MPoly<Zz>],
    cfg: &GbConfig,
) -> Result<bool, GroebnerError> {
    let live: Vec<MPoly<Zz>> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.primitive_part()).collect();
    if live.is_empty() {
        return Ok(false);
    }
    let search = match certificate_search(&live, cfg) {
        Ok(found) => return Ok(found),
        Err(e @ GroebnerError::CertificateBudget { .. }) => e,
        Err(e) => return Err(e),
    };
    let cap = cfg.coeff_bit_cap.map_or(DIRECT_BIT_CAP, |c| c.min(DIRECT_BIT_CAP));
    let guarded = GbConfig { coeff_bit_cap: Some(cap), ..*cfg };
    match super::buchberger(&Zz, &live, &guarded) {
        Ok(b) => Ok(b.len() == 1 && b[0].total_degree() == Some(0)),
        // neither route settled it: report the certificate budget, which
        // is the phase that was supposed to carry hard instances
        Err(GroebnerError::CoefficientGrowth { .. }) => Err(search),
        Err(e) => Err(e),
    }
}

/// Search for a verified certificate 1 = sum h_i gens_i over a
/// deterministic descending sequence of word-size primes. Nonzero
/// primitive generators are assumed.
fn certificate_search(gens: &[MPoly<Zz>], cfg: &GbConfig) -> Result<bool, GroebnerError> {
    let out_of_scope = gens.iter().any(|g| {
        g.nvars() > MAX_PACK_VARS
            || g.terms().iter().any(|(_, c)| c.bits() > MAX_INPUT_COEFF_BITS)
    });
    if out_of_scope {
        // too many variables for packed keys, or coefficients too wide
        // for machine-word lifting: leave it to the direct run
        return Err(GroebnerError::CertificateBudget { primes: 0 });
    }
    let trace = std::env::var_os("K3CERT_GB_TRACE").is_some();
    let mut nontrivial = 0usize;
    let mut tried = 0usize;
    let mut p = 1u64 << 20;
    while tried < MAX_CERT_PRIMES {
        p = prev_prime(p);
        tried += 1;
        let fq = Fq(make_field(p, 1).expect("descending 20-bit primes stay in field range"));
        let gens_p: Vec<MPoly<Fq>> = gens.iter().map(|g| g.reduce_mod(&fq)).collect();
        let t0 = std::time::Instant::now();
        let basis = buchberger(&fq, &gens_p, cfg)?;
        let trivial = basis.len() == 1 && basis[0].total_degree() == Some(0);
        if trace {
            eprintln!(
                "cert trace: p {p} {} mod p ({:?})",
                if trivial { "trivial" } else { "nontrivial" },
                t0.elapsed()
            );
        }
        if !trivial {
            nontrivial += 1;
            if nontrivial >= EARLY_NONTRIVIAL_STOP {
                break;
            }
            continue;
        }
        if let Some(h) = certificate_at_prime(gens, p, cfg, trace) {
            let t0 = std::time::Instant::now();
            let ok = certificate_holds(gens, &h);
            if trace {
                eprintln!("cert trace: p {p} exact verification {ok} ({:?})", t0.elapsed());
            }
            if ok {
                return Ok(true);
            }
        }
    }
    Err(GroebnerError::CertificateBudget { primes: tried })
}

/// Largest prime strictly below `n` (callers stay far above 2).
fn prev_prime(mut n: u64) -> u64 {
    loop {
        n -= 1;
        if n % 2 != 0 && is_prime_u64(n) {
            return n;
        }
    }
}

/// Pack an exponent vector into a u128, first variable in the high lane.
/// Lane arithmetic never carries: total degrees sit far below 2^16.
fn pack(e: &[u16]) -> u128 {
    e.iter().fold(0u128, |acc, &x| (acc << 16) | x as u128)
}

/// All exponent tuples of total degree at most `deg`, ascending by total
/// degree, lexicographic within a degree. The constant tuple comes first.
fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Vec<u16>> {
    fn exact(nvars: usize, d: u16, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=d {
            prefix.push(a);
            exact(nvars, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(nvars);
    for d in 0..=deg as u16 {
        exact(nvars, d, &mut prefix, &mut out);
    }
    out
}

/// One cofactor coefficient slot: generator index and monomial shift.
type Slot = (usize, Vec<u16>);

/// Attempt a verified-liftable certificate at one prime: ascend the
/// degree bound until the bounded identity is solvable mod p, then lift
/// the pivot subsystem to Q. None when no admissible bound works, the
/// lift runs out of digits, or reconstruction fails; the caller moves on
/// to the next prime.
fn certificate_at_prime(
    gens: &[MPoly<Zz>],
    p: u64,
    cfg: &GbConfig,
    trace: bool,
) -> Option<Vec<MPoly<Qq>>> {
    let nvars = gens[0].nvars();
    let degs: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap()).collect();
    let bstart = *degs.iter().max().unwrap();
    for b in bstart..=cfg.max_degree {
        let nrows = n_monomials(nvars, b);
        let ncols: usize = degs.iter().map(|&d| n_monomials(nvars, b - d)).sum();
        if nrows.saturating_mul(ncols + 1) > MAX_MATRIX_CELLS {
            if trace {
                eprintln!("cert trace: p {p} degree {b} matrix {nrows}x{ncols} over budget");
            }
            return None;
        }
        let t0 = std::time::Instant::now();
        let solved = wide_echelon(gens, &degs, b, p);
        if trace {
            eprintln!(
                "cert trace: p {p} degree {b} matrix {nrows}x{ncols} {} ({:?})",
                if solved.is_some() { "solvable" } else { "unsolvable" },
                t0.elapsed()
            );
        }
        if let Some((pivot_monos, pivot_slots)) = solved {
            return dixon_certificate(gens, nvars, &pivot_monos, &pivot_slots, p, trace);
        }
    }
    None
}

/// Number of monomials of total degree at most `deg` in `nvars`
/// variables: binomial(deg + nvars, nvars).
fn n_monomials(nvars: usize, deg: u32) -> usize {
    let mut acc: usize = 1;
    for k in 1..=nvars {
        acc = acc * (deg as usize + k) / k;
    }
    acc
}

/// Row echelon over F_p of the bounded-identity system: rows are the
/// monomials of degree at most `b` (equations: the coefficient of each
/// monomial in sum h_i f_i, which must be 1 at the constant and 0
/// elsewhere), columns the cofactor coefficient slots. Returns the pivot
/// row monomials and pivot column slots when the system is consistent;
/// the pivot minor is nonsingular mod p by construction. Entries are
/// held unreduced in u64: each elimination round adds products below
/// 2^40 and the rank never approaches 2^12, so nothing overflows.
fn wide_echelon(
    gens: &[MPoly<Zz>],
    degs: &[u32],
    b: u32,
    p: u64,
) -> Option<(Vec<Vec<u16>>, Vec<Slot>)> {
    let nvars = gens[0].nvars();
    let pbig = BigInt::from(p);
    let row_monos = monomials_up_to(nvars, b);
    debug_assert!(row_monos[0].iter().all(|&e| e == 0));
    let row_of: HashMap<u128, usize> =
        row_monos.iter().enumerate().map(|(k, m)| (pack(m), k)).collect();
    let mut slots: Vec<Slot> = Vec::new();
    for (i, &d) in degs.iter().enumerate() {
        for a in monomials_up_to(nvars, b - d) {
            slots.push((i, a));
        }
    }
    let nrows = row_monos.len();
    let ncols = slots.len();
    // last column is the right-hand side: 1 at the constant row
    let mut m: Vec<Vec<u64>> = vec![vec![0u64; ncols + 1]; nrows];
    for (ci, (i, a)) in slots.iter().enumerate() {
        let ap = pack(a);
        for (e, c) in gens[*i].terms() {
            let r = row_of[&(ap + pack(e))];
            m[r][ci] = c.mod_floor(&pbig).to_u64().unwrap();
        }
    }
    m[0][ncols] = 1;

    let mut perm: Vec<usize> = (0..nrows).collect();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut frontier = 0usize;
    for c in 0..ncols {
        if frontier == nrows {
            break;
        }
        let Some(pr) = (frontier..nrows).find(|&r| m[r][c] % p != 0) else {
            continue;
        };
        m.swap(frontier, pr);
        perm.swap(frontier, pr);
        let prow = &mut m[frontier];
        for x in prow[c..].iter_mut() {
            *x %= p;
        }
        let inv = mod_inv(prow[c], p);
        if inv != 1 {
            for x in prow[c..].iter_mut() {
                *x = *x * inv % p;
            }
        }
        let (top, rest) = m.split_at_mut(frontier + 1);
        let prow = &top[frontier];
        for row in rest.iter_mut() {
            let v = row[c] % p;
            if v == 0 {
                row[c] = 0;
                continue;
            }
            let mneg = p - v;
            for (x, &src) in row[c..].iter_mut().zip(&prow[c..]) {
                *x += mneg * src;
            }
        }
        pivot_rows.push(perm[frontier]);
        pivot_cols.push(c);
        frontier += 1;
    }
    // consistency: every remaining row is zero mod p across the unknown
    // columns by construction, so only the right-hand side can object
    for row in &m[frontier..] {
        if row[ncols] % p != 0 {
            return None;
        }
    }
    let pivot_monos: Vec<Vec<u16>> =
        pivot_rows.iter().map(|&r| row_monos[r].clone()).collect();
    let pivot_slots: Vec<Slot> = pivot_cols.iter().map(|&c| slots[c].clone()).collect();
    Some((pivot_monos, pivot_slots))
}

/// Compact LU factorization of a square matrix over F_p: unit-diagonal
/// multipliers below, normalized rows of U (pivot entries 1) above, row
/// permutation applied up front.
struct LuModP {
    lu: Vec<Vec<u64>>,
    perm: Vec<usize>,
    p: u64,
}

fn lu_mod_p(a: &[Vec<i64>], p: u64) -> Option<LuModP> {
    let n = a.len();
    let pb = p as i64;
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(pb) as u64).collect())
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let pr = (k..n).find(|&r| m[r][k] % p != 0)?;
        m.swap(k, pr);
        perm.swap(k, pr);
        let prow = &mut m[k];
        for x in prow[k..].iter_mut() {
            *x %= p;
        }
        let inv = mod_inv(prow[k], p);
        prow[k] = inv;
        if inv != 1 {
            for x in prow[k + 1..].iter_mut() {
                *x = *x * inv % p;
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let prow = &top[k];
        for row in rest.iter_mut() {
            let v = row[k] % p;
            row[k] = v;
            if v == 0 {
                continue;
            }
            let mneg = p - v;
            for (x, &src) in row[k + 1..].iter_mut().zip(&prow[k + 1..]) {
                *x += mneg * src;
            }
        }
    }
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    Some(LuModP { lu: m, perm, p })
}

impl LuModP {
    /// Solve A x = b mod p using the stored factors. The factorization is
    /// P A = M R with M lower triangular (diagonal inverses stashed in the
    /// diagonal slots, raw multipliers below) and R unit upper triangular.
    /// Both substitutions run row-oriented with delayed reduction: every
    /// addend stays below 2^40 and ranks stay far below 2^12, so the u64
    /// accumulator cannot overflow and each row costs a single reduction.
    fn solve(&self, b: &[u64]) -> Vec<u64> {
        let n = b.len();
        let p = self.p;
        let mut y: Vec<u64> = self.perm.iter().map(|&r| b[r] % p).collect();
        for k in 0..n {
            let row = &self.lu[k];
            let mut acc = y[k];
            for (m, &yj) in row[..k].iter().zip(&y) {
                acc += (p - m) * yj;
            }
            y[k] = acc % p * row[k] % p;
        }
        for k in (0..n).rev() {
            let row = &self.lu[k];
            let mut acc = y[k];
            for (m, yj) in row[k + 1..].iter().zip(&y[k + 1..]) {
                acc += (p - m) * yj;
            }
            y[k] = acc % p;
        }
        y
    }
}

/// Exact rational solution of the pivot subsystem by p-adic lifting,
/// assembled into cofactor polynomials. The square integer matrix is
/// A[k][l] = coefficient of the k-th pivot monomial in x^(a_l) f_(i_l),
/// the right-hand side the indicator of the constant monomial. Each
/// digit costs one mod-p solve and one integer residual update; digits
/// accumulate until every entry passes rational reconstruction.
fn dixon_certificate(
    gens: &[MPoly<Zz>],
    nvars: usize,
    pivot_monos: &[Vec<u16>],
    pivot_slots: &[Slot],
    p: u64,
    trace: bool,
) -> Option<Vec<MPoly<Qq>>> {
    let r = pivot_slots.len();
    let rowpos: HashMap<u128, usize> =
        pivot_monos.iter().enumerate().map(|(k, m)| (pack(m), k)).collect();
    let mut a_int: Vec<Vec<i64>> = vec![vec![0i64; r]; r];
    for (l, (i, a)) in pivot_slots.iter().enumerate() {
        let ap = pack(a);
        for (e, c) in gens[*i].terms() {
            if let Some(&k) = rowpos.get(&(ap + pack(e))) {
                a_int[k][l] = c.to_i64().expect("input coefficient width checked upfront");
            }
        }
    }
    let mut rhs: Vec<i64> = vec![0; r];
    let constant = rowpos.get(&0u128).copied()?;
    rhs[constant] = 1;

    let t0 = std::time::Instant::now();
    let lu = lu_mod_p(&a_int, p)?;
    if trace {
        eprintln!("cert trace: p {p} pivot system {r}x{r} factored ({:?})", t0.elapsed());
    }

    let max_digits = std::env::var("K3CERT_DIXON_DIGITS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(MAX_DIXON_ITERS);
    let mut residual = rhs;
    let mut lifted: Vec<BigInt> = vec![BigInt::zero(); r];
    let mut modulus = BigInt::one();
    let mut scale = BigInt::one();
    for digit in 1..=max_digits {
        let bmod: Vec<u64> =
            residual.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect();
        let x = lu.solve(&bmod);
        let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
        // the residual contracts toward |b| <= r * max|A| at every step,
        // so the update stays far inside i64: the subtracted sum is below
        // r * max|A| * p < 2^38 and the entry itself below 2^19
        for (bk, arow) in residual.iter_mut().zip(&a_int) {
            let mut acc = *bk;
            for (&al, &xl) in arow.iter().zip(&xi) {
                acc -= al * xl;
            }
            debug_assert_eq!(acc % p as i64, 0);
            *bk = acc / p as i64;
        }
        for (lk, &xk) in lifted.iter_mut().zip(&x) {
            *lk += BigInt::from(xk) * &scale;
        }
        scale *= p;
        modulus *= p;
        // attempts fail fast on the first non-reconstructible entry, but
        // thin them out anyway once digits pile up
        let due = digit >= 4 && digit % (if digit <= 64 { 2 } else { 16 }) == 0;
        if due {
            if let Some(rats) = reconstruct_all(&lifted, &modulus) {
                if trace {
                    let h = rats
                        .iter()
                        .map(|v| v.numer().bits().max(v.denom().bits()))
                        .max()
                        .unwrap_or(0);
                    eprintln!(
                        "cert trace: p {p} reconstructed after {digit} digits, height {h} bits"
                    );
                }
                return Some(assemble_cofactors(gens.len(), nvars, pivot_slots, &rats));
            }
        }
    }
    if trace {
        eprintln!("cert trace: p {p} lift exhausted {max_digits} digits");
    }
    None
}

/// Rational reconstruction of every lifted entry, or None as soon as one
/// fails (more digits needed).
fn reconstruct_all(lifted: &[BigInt], modulus: &BigInt) -> Option<Vec<BigRational>> {
    lifted.iter().map(|v| rational_reconstruct(v, modulus)).collect()
}

/// Build the cofactor polynomials from reconstructed slot values.
fn assemble_cofactors(
    ngens: usize,
    nvars: usize,
    slots: &[Slot],
    vals: &[BigRational],
) -> Vec<MPoly<Qq>> {
    let mut terms: Vec<Vec<(Vec<u16>, BigRational)>> = vec![Vec::new(); ngens];
    for ((i, a), v) in slots.iter().zip(vals) {
        if !v.is_zero() {
            terms[*i].push((a.clone(), v.clone()));
        }
    }
    terms.into_iter().map(|t| MPoly::from_terms(&Qq, nvars, t)).collect()
}

/// Exact check of the lifted identity sum h_i gens_i = 1 over Q. The
/// rational identity holds iff the denominator-cleared integer identity
/// sum (D h_i) gens_i = D does, with D the least common denominator;
/// integer arithmetic makes the check an order of magnitude faster than
/// accumulating reduced fractions.
fn certificate_holds(gens: &[MPoly<Zz>], h: &[MPoly<Qq>]) -> bool {
    let nvars = gens[0].nvars();
    let mut d = BigInt::one();
    for hi in h {
        for (_, c) in hi.terms() {
            let den = c.denom();
            d = &d / d.gcd(den) * den;
        }
    }
    let mut acc = MPoly::zero(nvars);
    for (g, hi) in gens.iter().zip(h) {
        let hz = MPoly::from_terms(
            &Zz,
            nvars,
            hi.terms().iter().map(|(e, c)| (e.clone(), c.numer() * (&d / c.denom()))),
        );
        acc = acc.add(&Zz, &hz.mul(&Zz, g));
    }
    acc == MPoly::from_terms(&Zz, nvars, [(vec![0u16; nvars], d)])
}

/// Wang's rational reconstruction: the unique num/den with |num| and den
/// at most sqrt(m/2), den coprime to m, and num = r * den mod m, when one
/// exists.
fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m >> 1u32).sqrt();
    let mut r0 = m.clone();
    let mut r1 = r.mod_floor(m);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    let (num, den) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    if den > bound || !num.gcd(&den).is_one() || !den.gcd(m).is_one() {
        return None;
    }
    Some(BigRational::new(num, den))
}
