//! Exact polynomial arithmetic: sparse multivariate polynomials over F_q,
//! the integers, and the rationals; dense univariate polynomials with gcd
//! and squarefree structure; polynomial matrices with exact determinants;
//! cyclotomic polynomials; and the canonical text format.

pub mod cyclotomic;
pub mod matrix;
pub mod mpoly;
pub mod ring;
pub mod text;
pub mod upoly;

pub use cyclotomic::{cyclotomic, euler_phi, CyclotomicError};
pub use matrix::{bordered_det_identity_check, scalar_det, PolyMatrix};
pub use mpoly::{grevlex_cmp, MPoly};
pub use ring::{FieldRing, Fq, Qq, Ring, Zz};
pub use text::{
    poly_from_text, poly_to_text, upoly_from_text, upoly_to_text, PolyParseError, VARS_BINARY,
    VARS_P2, VARS_P4, VARS_P5, VARS_T,
};
pub use upoly::{squarefree_part_qq, squarefree_profile, FormError, UPoly};
