//! Cyclotomic polynomials over the integers, by the product identity
//! t^n - 1 = prod over d | n of Phi_d(t): each Phi_n is the exact quotient
//! of t^n - 1 by the product of the lower Phi_d. Only n up to 66 is needed
//! (eigenvalue multiplicities on a rank-22 lattice force phi(n) <= 22, and
//! 66 is the largest such n).

use super::ring::{Ring, Zz};
use super::upoly::UPoly;

pub const MAX_CYCLOTOMIC: u32 = 66;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CyclotomicError {
    #[error("cyclotomic index {0} out of range 1..={MAX_CYCLOTOMIC}")]
    OutOfRange(u32),
}

/// Euler's totient, by trial factorization.
pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut phi = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            phi = phi / d * (d - 1);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

/// The n-th cyclotomic polynomial, monic of degree phi(n), over the
/// integers.
pub fn cyclotomic(n: u32) -> Result<UPoly<Zz>, CyclotomicError> {
    if n == 0 || n > MAX_CYCLOTOMIC {
        return Err(CyclotomicError::OutOfRange(n));
    }
    let ring = Zz;
    // build the table up to n; cheap enough to redo per call
    let mut table: Vec<UPoly<Zz>> = Vec::with_capacity(n as usize + 1);
    table.push(UPoly::zero()); // unused slot 0
    for k in 1..=n {
        // t^k - 1
        let mut coeffs = vec![ring.from_i64(0); k as usize + 1];
        coeffs[0] = ring.from_i64(-1);
        coeffs[k as usize] = ring.from_i64(1);
        let mut num = UPoly::from_coeffs(&ring, coeffs);
        for d in 1..k {
            if k % d == 0 {
                num = num
                    .divide_exact(&ring, &table[d as usize])
                    .expect("cyclotomic product identity");
            }
        }
        table.push(num);
    }
    Ok(table.pop().unwrap())
}
