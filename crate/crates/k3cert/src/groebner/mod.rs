//! Buchberger Groebner bases over Q and F_p, with ideal-triviality tests
//! and projective emptiness through affine charts.
//!
//! The engine is written once over a small coefficient-strategy trait: over
//! a finite field reduction is the usual monic division, over the rationals
//! the computation runs on primitive integer polynomials with
//! cross-multiplied (pseudo) reduction and content stripping after every
//! step, which keeps coefficients from exploding. Pair management is
//! Gebauer and Moeller's update (divisibility sifting of new pairs, the
//! coprimality criterion on the survivors, and pruning of queued pairs
//! made redundant by the new leading monomial); selection is the sugar
//! strategy with deterministic tie-breaking. Elements entering the basis
//! are fully tail-reduced, which matters a great deal over the integers:
//! top-reduced-only elements drag large parasitic coefficients around.
//! Output is the reduced basis, sorted by leading monomial, so it is
//! unique for a given ideal and term order. Degree and pair budgets turn
//! runaway inputs into errors instead of hangs. Setting K3CERT_GB_TRACE in
//! the environment prints progress lines to stderr.
//!
//! Triviality tests over the rationals take a hybrid route: a direct
//! integer computation under a coefficient growth guard, falling back to
//! modular Nullstellensatz certificates that are verified in exact
//! rational arithmetic (see the `modular` submodule).

pub mod lines;
pub mod modular;

pub use lines::{lines_free_over_closure, lines_free_over_closure_qq, schubert_line_ideals, LineCell, LinesError};

use crate::poly::mpoly::{exp_divides, grevlex_cmp, MPoly};
use crate::poly::ring::{FieldRing, Fq, Qq, Ring, Zz};
use num::bigint::BigInt;
use num::{Integer, One, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("degree budget exceeded: reached degree {reached}, cap {limit}")]
    DegreeCap { limit: u32, reached: u32 },
    #[error("pair budget exceeded: cap {limit}")]
    PairCap { limit: usize },
    #[error("coefficient growth guard tripped: {bits} bits exceeds cap {limit}")]
    CoefficientGrowth { limit: u64, bits: u64 },
    #[error("rational triviality unsettled after {primes} modular certificate attempts")]
    CertificateBudget { primes: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct GbConfig {
    pub max_degree: u32,
    pub max_pairs: usize,
    /// Abort with `CoefficientGrowth` when a basis element's largest
    /// coefficient exceeds this many bits. Meaningful over the integers
    /// only; the rational triviality hybrid sets it for its direct attempt.
    pub coeff_bit_cap: Option<u64>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { max_degree: 40, max_pairs: 200_000, coeff_bit_cap: None }
    }
}

/// Coefficient strategy: how to scale polynomials into canonical form and
/// how to cancel a term against a leading coefficient.
pub trait GbCoeffs: Ring {
    /// Canonical scale for storing basis elements (monic over a field,
    /// primitive with positive leading coefficient over the integers).
    fn gb_normalize(&self, f: MPoly<Self>) -> MPoly<Self>;

    /// Cheap growth control applied after every elimination step: a no-op
    /// over a field, content stripping over the integers. Without the
    /// per-step strip, pseudo-reduction multiplies the working polynomial
    /// by a fresh integer on every step and coefficients compound
    /// exponentially.
    fn gb_strip(&self, f: MPoly<Self>) -> MPoly<Self>;

    /// Multipliers (m_self, m_other) with m_self * c_self = m_other *
    /// c_other; m_self is 1 over a field.
    fn gb_elim(&self, c_self: &Self::Elem, c_other: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// True when the multiplier is the identity (skips rescaling work).
    fn gb_is_one(&self, c: &Self::Elem) -> bool;

    /// Full normal form used for elements about to enter the basis: over
    /// the integers a pseudo-reduction that keeps the already-emitted part
    /// and the remaining part consistently scaled, stripping their joint
    /// content as it goes. A reduction whose coefficients pass `bit_cap`
    /// may stop early and return the oversized partial result; the caller's
    /// growth check turns that into an error.
    fn gb_reduce_for_add(
        &self,
        f: &MPoly<Self>,
        basis: &[MPoly<Self>],
        bit_cap: Option<u64>,
    ) -> MPoly<Self>;

    /// Final inter-reduction of a minimal basis into the unique reduced
    /// one. Over the integers this runs in exact rational arithmetic (the
    /// basis is small by then; per-term pseudo-scaling would not produce a
    /// well-defined reduced basis).
    fn gb_interreduce(&self, basis: Vec<MPoly<Self>>) -> Vec<MPoly<Self>>;

    /// Largest coefficient size in bits, consulted by the growth guard.
    /// None for coefficient types that cannot grow (fields).
    fn gb_max_bits(&self, _f: &MPoly<Self>) -> Option<u64> {
        None
    }

    /// Weak Nullstellensatz decision for this coefficient type. Fields run
    /// Buchberger directly; the rational rings reroute through the
    /// direct-or-certificate hybrid in `modular`.
    fn gb_contains_one(&self, gens: &[MPoly<Self>], cfg: &GbConfig) -> Result<bool, GroebnerError> {
        let basis = buchberger(self, gens, cfg)?;
        Ok(basis.len() == 1 && basis[0].total_degree() == Some(0))
    }
}

impl GbCoeffs for Fq {
    fn gb_normalize(&self, f: MPoly<Fq>) -> MPoly<Fq> {
        f.monic(self)
    }
    fn gb_strip(&self, f: MPoly<Fq>) -> MPoly<Fq> {
        f
    }
    fn gb_elim(&self, c_self: &Self::Elem, c_other: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (self.one(), self.div(c_self, c_other))
    }
    fn gb_is_one(&self, c: &Self::Elem) -> bool {
        *c == self.one()
    }
    fn gb_reduce_for_add(
        &self,
        f: &MPoly<Fq>,
        basis: &[MPoly<Fq>],
        _bit_cap: Option<u64>,
    ) -> MPoly<Fq> {
        normal_form(self, f, basis)
    }
    fn gb_interreduce(&self, basis: Vec<MPoly<Fq>>) -> Vec<MPoly<Fq>> {
        interreduce_field(self, basis)
    }
}

impl GbCoeffs for Zz {
    fn gb_normalize(&self, f: MPoly<Zz>) -> MPoly<Zz> {
        f.primitive_part()
    }
    fn gb_strip(&self, f: MPoly<Zz>) -> MPoly<Zz> {
        strip_if_needed(f)
    }
    fn gb_elim(&self, c_self: &BigInt, c_other: &BigInt) -> (BigInt, BigInt) {
        let g = c_self.gcd(c_other);
        (c_other / &g, c_self / &g)
    }
    fn gb_is_one(&self, c: &BigInt) -> bool {
        c.is_one()
    }
    fn gb_reduce_for_add(
        &self,
        f: &MPoly<Zz>,
        basis: &[MPoly<Zz>],
        bit_cap: Option<u64>,
    ) -> MPoly<Zz> {
        reduce_full_zz(f, basis, bit_cap)
    }
    fn gb_interreduce(&self, basis: Vec<MPoly<Zz>>) -> Vec<MPoly<Zz>> {
        let lifted: Vec<MPoly<Qq>> = basis.iter().map(|g| g.to_qq()).collect();
        interreduce_field(&Qq, lifted).into_iter().map(|g| g.to_zz_primitive().0).collect()
    }
    fn gb_max_bits(&self, f: &MPoly<Zz>) -> Option<u64> {
        f.terms().iter().map(|(_, c)| c.bits()).max()
    }
    fn gb_contains_one(&self, gens: &[MPoly<Zz>], cfg: &GbConfig) -> Result<bool, GroebnerError> {
        modular::contains_one_hybrid_zz(gens, cfg)
    }
}

impl GbCoeffs for Qq {
    fn gb_normalize(&self, f: MPoly<Qq>) -> MPoly<Qq> {
        f.monic(self)
    }
    fn gb_strip(&self, f: MPoly<Qq>) -> MPoly<Qq> {
        f
    }
    fn gb_elim(&self, c_self: &Self::Elem, c_other: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (self.one(), self.div(c_self, c_other))
    }
    fn gb_is_one(&self, c: &Self::Elem) -> bool {
        *c == self.one()
    }
    fn gb_reduce_for_add(
        &self,
        f: &MPoly<Qq>,
        basis: &[MPoly<Qq>],
        _bit_cap: Option<u64>,
    ) -> MPoly<Qq> {
        normal_form(self, f, basis)
    }
    fn gb_interreduce(&self, basis: Vec<MPoly<Qq>>) -> Vec<MPoly<Qq>> {
        interreduce_field(self, basis)
    }
    fn gb_contains_one(&self, gens: &[MPoly<Qq>], cfg: &GbConfig) -> Result<bool, GroebnerError> {
        let zz_gens: Vec<MPoly<Zz>> = gens.iter().map(|g| g.to_zz_primitive().0).collect();
        modular::contains_one_hybrid_zz(&zz_gens, cfg)
    }
}

fn strip_if_needed(f: MPoly<Zz>) -> MPoly<Zz> {
    match f.leading() {
        None => f,
        Some((_, lc)) => {
            let c = f.content();
            if c.is_one() && lc.sign() != num::bigint::Sign::Minus {
                f
            } else {
                f.primitive_part()
            }
        }
    }
}

/// Among basis elements whose leading monomial divides `e`, the one that
/// keeps reductions cheap: fewest terms, then smallest leading monomial,
/// then first. Reducer choice affects intermediate sizes far more than it
/// looks like it should.
fn best_reducer_idx<R: Ring>(basis: &[MPoly<R>], e: &[u16]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, g) in basis.iter().enumerate() {
        let (ge, _) = g.leading().expect("basis elements are nonzero");
        if !exp_divides(ge, e) {
            continue;
        }
        best = Some(match best {
            None => k,
            Some(b) => {
                let bg = &basis[b];
                let bl = bg.leading().unwrap().0;
                match g.nterms().cmp(&bg.nterms()).then_with(|| grevlex_cmp(ge, bl)) {
                    Ordering::Less => k,
                    _ => b,
                }
            }
        });
    }
    best
}

fn best_reducer<'b, R: Ring>(basis: &'b [MPoly<R>], e: &[u16]) -> Option<&'b MPoly<R>> {
    best_reducer_idx(basis, e).map(|k| &basis[k])
}

/// Cancel leading terms against the basis until the leading monomial of
/// the remainder is divisible by no basis leading monomial (or the
/// remainder is zero). Over the integers this is a pseudo-reduction with
/// content stripped after every step. Top reduction decides S-polynomial
/// membership exactly; tails are handled when elements join the basis.
pub fn top_reduce<R: GbCoeffs>(ring: &R, f: &MPoly<R>, basis: &[MPoly<R>]) -> MPoly<R> {
    top_reduce_capped(ring, f, basis, None)
}

/// `top_reduce` with an optional coefficient growth bail-out: once the
/// working polynomial's coefficients pass `bit_cap` the loop stops and
/// returns the oversized partial result for the caller's growth check to
/// reject. Without the per-step bail a single runaway reduction can grind
/// for minutes between checks.
fn top_reduce_capped<R: GbCoeffs>(
    ring: &R,
    f: &MPoly<R>,
    basis: &[MPoly<R>],
    bit_cap: Option<u64>,
) -> MPoly<R> {
    let mut work = f.clone();
    while let Some((we, wc)) = work.leading() {
        let Some(g) = best_reducer(basis, we) else { break };
        let (ge, gc) = g.leading().unwrap();
        let (mf, mg) = ring.gb_elim(wc, gc);
        let delta: Vec<u16> = we.iter().zip(ge).map(|(&a, &b)| a - b).collect();
        let sub = g.mul_monomial(ring, &delta, &mg);
        work = if ring.gb_is_one(&mf) {
            work.sub(ring, &sub)
        } else {
            work.scale(ring, &mf).sub(ring, &sub)
        };
        work = ring.gb_strip(work);
        if let (Some(cap), Some(bits)) = (bit_cap, ring.gb_max_bits(&work)) {
            if bits > cap {
                break;
            }
        }
    }
    work
}

/// True iff f lies in the ideal of a completed basis (any top-reduction
/// chain of a member reaches zero once the basis is a Groebner basis).
pub fn reduces_to_zero<R: GbCoeffs>(ring: &R, f: &MPoly<R>, basis: &[MPoly<R>]) -> bool {
    top_reduce(ring, f, basis).is_zero()
}

/// Full normal form over a field: every term of the result is divisible by
/// no basis leading monomial.
pub fn normal_form<R: FieldRing>(ring: &R, f: &MPoly<R>, basis: &[MPoly<R>]) -> MPoly<R> {
    let nvars = f.nvars();
    let mut tail = f.clone();
    let mut head: Vec<(Vec<u16>, R::Elem)> = Vec::new();
    while let Some((we, wc)) = tail.leading() {
        match best_reducer(basis, we) {
            Some(g) => {
                let (ge, gc) = g.leading().unwrap();
                let m = ring.div(wc, gc);
                let delta: Vec<u16> = we.iter().zip(ge).map(|(&a, &b)| a - b).collect();
                tail = tail.sub(ring, &g.mul_monomial(ring, &delta, &m));
            }
            None => {
                head.push((we.to_vec(), wc.clone()));
                tail = tail.without_leading();
            }
        }
    }
    MPoly::from_sorted_terms(nvars, head)
}

/// Full pseudo normal form over the integers. The emitted part and the
/// remaining part are kept consistently scaled (the result is an integer
/// multiple of the true rational normal form), and their joint content is
/// stripped after every scaling step. With a `bit_cap` the reduction stops
/// as soon as its coefficients outgrow the cap and returns the oversized
/// partial result (head and tail merged), leaving rejection to the
/// caller's growth check.
fn reduce_full_zz(f: &MPoly<Zz>, basis: &[MPoly<Zz>], bit_cap: Option<u64>) -> MPoly<Zz> {
    let ring = &Zz;
    let nvars = f.nvars();
    let mut tail = f.clone();
    let mut head: Vec<(Vec<u16>, BigInt)> = Vec::new();
    while let Some((we, wc)) = tail.leading() {
        if let Some(cap) = bit_cap {
            let bits = head
                .iter()
                .map(|(_, c)| c.bits())
                .chain(tail.terms().iter().map(|(_, c)| c.bits()))
                .max()
                .unwrap_or(0);
            if bits > cap {
                let emitted = MPoly::from_sorted_terms(nvars, head);
                return emitted.add(ring, &tail);
            }
        }
        match best_reducer(basis, we) {
            Some(g) => {
                let (ge, gc) = g.leading().unwrap();
                let (mf, mg) = ring.gb_elim(wc, gc);
                let delta: Vec<u16> = we.iter().zip(ge).map(|(&a, &b)| a - b).collect();
                let sub = g.mul_monomial(ring, &delta, &mg);
                if mf.is_one() {
                    tail = tail.sub(ring, &sub);
                } else {
                    tail = tail.scale(ring, &mf).sub(ring, &sub);
                    for (_, c) in head.iter_mut() {
                        *c *= &mf;
                    }
                    // strip the joint content of head and tail
                    let mut g = BigInt::zero();
                    for (_, c) in head.iter().chain(tail.terms()) {
                        g = g.gcd(c);
                        if g.is_one() {
                            break;
                        }
                    }
                    if !g.is_one() && !g.is_zero() {
                        for (_, c) in head.iter_mut() {
                            *c = &*c / &g;
                        }
                        tail = tail.map_coeffs(ring, |c| c / &g);
                    }
                }
            }
            None => {
                head.push((we.to_vec(), wc.clone()));
                tail = tail.without_leading();
            }
        }
    }
    MPoly::from_sorted_terms(nvars, head)
}

/// Tail-reduce every element of a minimal basis against the others until
/// stable; monic results sorted by leading monomial.
fn interreduce_field<R: FieldRing>(ring: &R, mut basis: Vec<MPoly<R>>) -> Vec<MPoly<R>> {
    loop {
        let mut changed = false;
        for idx in 0..basis.len() {
            let others: Vec<MPoly<R>> = basis
                .iter()
                .enumerate()
                .filter_map(|(k, g)| (k != idx).then(|| g.clone()))
                .collect();
            let red = normal_form(ring, &basis[idx], &others).monic(ring);
            if red != basis[idx] {
                basis[idx] = red;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|x, y| grevlex_cmp(x.leading().unwrap().0, y.leading().unwrap().0));
    basis
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u16>,
    lcm_deg: u32,
    sugar: u32,
}

fn exp_lcm(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn exp_deg(a: &[u16]) -> u32 {
    a.iter().map(|&x| x as u32).sum()
}

/// Gebauer-Moeller update: build the pairs of the new element t against
/// the existing basis, sift them by lcm divisibility (keeping one
/// representative per repeated lcm), drop coprime survivors, and prune
/// queued pairs whose lcm the new leading monomial strictly refines.
fn update_pairs(
    pending: &mut Vec<Pair>,
    basis: &[MPoly<impl Ring>],
    sugars: &[u32],
    t: usize,
    sugar_t: u32,
) {
    let lt = basis[t].leading().unwrap().0;
    let deg_t = exp_deg(lt);
    let mut cands: Vec<Pair> = (0..t)
        .map(|i| {
            let li = basis[i].leading().unwrap().0;
            let lcm = exp_lcm(li, lt);
            let lcm_deg = exp_deg(&lcm);
            let sugar =
                (sugars[i] + lcm_deg - exp_deg(li)).max(sugar_t + lcm_deg - deg_t);
            Pair { i, j: t, lcm, lcm_deg, sugar }
        })
        .collect();
    // sift: process by ascending lcm; a candidate whose lcm is divisible by
    // a kept one's lcm is redundant (equal lcms keep the first)
    cands.sort_by(|a, b| {
        (a.lcm_deg, a.i).cmp(&(b.lcm_deg, b.i)).then_with(|| grevlex_cmp(&a.lcm, &b.lcm))
    });
    let mut kept: Vec<Pair> = Vec::new();
    'cand: for c in cands {
        for k in &kept {
            if exp_divides(&k.lcm, &c.lcm) {
                continue 'cand;
            }
        }
        kept.push(c);
    }
    // coprimality criterion on the survivors
    kept.retain(|c| {
        let li = basis[c.i].leading().unwrap().0;
        c.lcm_deg != exp_deg(li) + deg_t
    });
    // prune old pairs the new leading monomial makes redundant
    pending.retain(|p| {
        if !exp_divides(lt, &p.lcm) {
            return true;
        }
        let li = basis[p.i].leading().unwrap().0;
        let lj = basis[p.j].leading().unwrap().0;
        exp_lcm(li, lt) == p.lcm || exp_lcm(lj, lt) == p.lcm
    });
    pending.extend(kept);
}

/// Remove and return the queued pair minimizing (sugar, lcm degree, lcm,
/// index pair); deterministic for a fixed queue content.
fn select_pair(pending: &mut Vec<Pair>) -> Pair {
    let mut sel = 0usize;
    for k in 1..pending.len() {
        let (a, b) = (&pending[k], &pending[sel]);
        let ord = (a.sugar, a.lcm_deg)
            .cmp(&(b.sugar, b.lcm_deg))
            .then_with(|| grevlex_cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
        if ord == Ordering::Less {
            sel = k;
        }
    }
    pending.swap_remove(sel)
}

/// Completed reduced Groebner basis of the ideal generated by `gens`, in
/// graded reverse lexicographic order. Deterministic for a fixed input
/// sequence. The zero ideal returns an empty basis.
pub fn buchberger<R: GbCoeffs>(
    ring: &R,
    gens: &[MPoly<R>],
    cfg: &GbConfig,
) -> Result<Vec<MPoly<R>>, GroebnerError> {
    let nvars = match gens.first() {
        None => return Ok(vec![]),
        Some(g) => g.nvars(),
    };
    let trace = std::env::var_os("K3CERT_GB_TRACE").is_some();
    let mut basis: Vec<MPoly<R>> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();

    let check_degree = |f: &MPoly<R>| -> Result<(), GroebnerError> {
        if let Some(d) = f.total_degree() {
            if d > cfg.max_degree {
                return Err(GroebnerError::DegreeCap { limit: cfg.max_degree, reached: d });
            }
        }
        Ok(())
    };
    let check_growth = |f: &MPoly<R>| -> Result<(), GroebnerError> {
        if let (Some(limit), Some(bits)) = (cfg.coeff_bit_cap, ring.gb_max_bits(f)) {
            if bits > limit {
                return Err(GroebnerError::CoefficientGrowth { limit, bits });
            }
        }
        Ok(())
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let sugar = g.total_degree().unwrap();
        let red = ring.gb_reduce_for_add(&ring.gb_normalize(g.clone()), &basis, cfg.coeff_bit_cap);
        if red.is_zero() {
            continue;
        }
        let red = ring.gb_normalize(red);
        check_degree(&red)?;
        check_growth(&red)?;
        basis.push(red);
        sugars.push(sugar);
        update_pairs(&mut pending, &basis, &sugars, basis.len() - 1, sugar);
    }

    let mut processed = 0usize;
    while !pending.is_empty() {
        let pk = select_pair(&mut pending);
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(GroebnerError::PairCap { limit: cfg.max_pairs });
        }
        if pk.lcm_deg > cfg.max_degree {
            return Err(GroebnerError::DegreeCap { limit: cfg.max_degree, reached: pk.lcm_deg });
        }
        if trace && processed % 20 == 0 {
            let maxterms = basis.iter().map(|g| g.nterms()).max().unwrap_or(0);
            let maxcoeff = basis
                .iter()
                .flat_map(|g| g.terms())
                .map(|(_, c)| ring.coeff_to_string(c).len())
                .max()
                .unwrap_or(0);
            eprintln!(
                "gb trace: pairs {} basis {} queue {} maxterms {} maxcoeffdigits {} sugar {}",
                processed,
                basis.len(),
                pending.len(),
                maxterms,
                maxcoeff,
                pk.sugar
            );
        }
        // S-polynomial of the selected pair
        let (fi, fj) = (&basis[pk.i], &basis[pk.j]);
        let (ei, ci) = fi.leading().unwrap();
        let (ej, cj) = fj.leading().unwrap();
        let (mi, mj) = ring.gb_elim(ci, cj);
        let di: Vec<u16> = pk.lcm.iter().zip(ei).map(|(&a, &b)| a - b).collect();
        let dj: Vec<u16> = pk.lcm.iter().zip(ej).map(|(&a, &b)| a - b).collect();
        let s = fi.mul_monomial(ring, &di, &mi).sub(ring, &fj.mul_monomial(ring, &dj, &mj));
        let red = top_reduce_capped(ring, &s, &basis, cfg.coeff_bit_cap);
        if red.is_zero() {
            continue;
        }
        let red = ring.gb_normalize(ring.gb_reduce_for_add(&red, &basis, cfg.coeff_bit_cap));
        if red.is_zero() {
            continue;
        }
        // a new constant makes the whole ideal trivial; stop early
        if red.total_degree() == Some(0) {
            return Ok(vec![MPoly::one(ring, nvars)]);
        }
        check_degree(&red)?;
        check_growth(&red)?;
        basis.push(red);
        sugars.push(pk.sugar);
        update_pairs(&mut pending, &basis, &sugars, basis.len() - 1, pk.sugar);
    }

    Ok(autoreduce(ring, basis))
}

/// Minimalize and fully reduce the basis; sort by leading monomial
/// ascending. The result is the unique reduced basis of the ideal.
fn autoreduce<R: GbCoeffs>(ring: &R, mut basis: Vec<MPoly<R>>) -> Vec<MPoly<R>> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let la = basis[a].leading().unwrap().0;
            let lb = basis[b].leading().unwrap().0;
            if exp_divides(lb, la) && (la != lb || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let minimal: Vec<MPoly<R>> =
        basis.drain(..).zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();
    let mut reduced = ring.gb_interreduce(minimal);
    for g in reduced.iter_mut() {
        *g = ring.gb_normalize(std::mem::replace(g, MPoly::zero(0)));
    }
    reduced
}

/// Weak Nullstellensatz test: the affine zero locus over the algebraic
/// closure is empty iff 1 lies in the ideal. Fields answer by a direct
/// Buchberger run; the rational rings go through the direct-or-certificate
/// hybrid, so pathological coefficient growth falls back to verified
/// modular certificates instead of hanging.
pub fn contains_one<R: GbCoeffs>(
    ring: &R,
    gens: &[MPoly<R>],
    cfg: &GbConfig,
) -> Result<bool, GroebnerError> {
    ring.gb_contains_one(gens, cfg)
}

/// Dehomogenize by setting variable `chart` to 1 (the remaining variables
/// keep their relative order).
pub fn dehomogenize<R: Ring>(ring: &R, f: &MPoly<R>, chart: usize) -> MPoly<R> {
    let n = f.nvars();
    assert!(chart < n);
    let mut images = Vec::with_capacity(n);
    for v in 0..n {
        use std::cmp::Ordering::*;
        images.push(match v.cmp(&chart) {
            Less => MPoly::var(ring, v, n - 1),
            Equal => MPoly::one(ring, n - 1),
            Greater => MPoly::var(ring, v - 1, n - 1),
        });
    }
    f.subst(ring, &images, n - 1)
}

/// True iff the projective zero locus of the homogeneous generators in P^k
/// is empty over the algebraic closure: every affine chart x_i = 1 must be
/// empty.
pub fn projective_is_empty<R: GbCoeffs>(
    ring: &R,
    gens: &[MPoly<R>],
    cfg: &GbConfig,
) -> Result<bool, GroebnerError> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok(false); // zero ideal cuts out everything
    };
    let n = first.nvars();
    debug_assert!(gens.iter().all(|g| g.is_zero() || g.homogeneous_degree().is_some()));
    for chart in 0..n {
        let affine: Vec<MPoly<R>> = gens.iter().map(|g| dehomogenize(ring, g, chart)).collect();
        if !contains_one(ring, &affine, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---- rational front door ----

/// Buchberger over Q: runs on primitive integer polynomials internally and
/// returns the monic rational reduced basis.
pub fn buchberger_qq(gens: &[MPoly<Qq>], cfg: &GbConfig) -> Result<Vec<MPoly<Qq>>, GroebnerError> {
    let zz_gens: Vec<MPoly<Zz>> = gens.iter().map(|g| g.to_zz_primitive().0).collect();
    let basis = buchberger(&Zz, &zz_gens, cfg)?;
    Ok(basis.into_iter().map(|g| g.to_qq().monic(&Qq)).collect())
}

pub fn contains_one_qq(gens: &[MPoly<Qq>], cfg: &GbConfig) -> Result<bool, GroebnerError> {
    contains_one(&Qq, gens, cfg)
}

pub fn projective_is_empty_qq(gens: &[MPoly<Qq>], cfg: &GbConfig) -> Result<bool, GroebnerError> {
    let zz_gens: Vec<MPoly<Zz>> = gens.iter().map(|g| g.to_zz_primitive().0).collect();
    projective_is_empty(&Zz, &zz_gens, cfg)
}

/// Primitive-integer view of a rational polynomial (scalars are irrelevant
/// to the generated ideal over Q).
pub fn qq_ideal_to_zz(gens: &[MPoly<Qq>]) -> Vec<MPoly<Zz>> {
    gens.iter().map(|g| g.to_zz_primitive().0).collect()
}
