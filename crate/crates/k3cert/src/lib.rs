//! Exact construction and certification of complete-intersection K3 surfaces.
//!
//! The crate builds degree 6 surfaces (a quadric and a cubic in P^4 through a
//! line) and degree 8 surfaces (nets of quadrics in P^5), passes to their
//! branch-sextic double covers in the weighted plane P(1,1,3), counts points
//! over small finite fields, reconstructs Weil polynomials, bounds geometric
//! Picard ranks, and certifies rank 1 over Q by combining two good primes
//! with a line-freeness or tritangent-freeness check. All arithmetic is
//! exact: finite fields, integers, and rationals; floating point appears only
//! inside one defensive root-location check on reconstructed polynomials.

pub mod ffield;
pub mod groebner;
pub mod poly;
