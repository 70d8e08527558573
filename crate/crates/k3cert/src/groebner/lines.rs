//! Line schemes on projective hypersurface intersections via Schubert cells
//! of the Grassmannian of lines in P^3 or P^4.
//!
//! A line in P^m is the row space of a 2 x (m+1) matrix of rank 2, and every
//! line has a representative in exactly one cell: fix pivot columns i < j,
//! put the 2 x 2 identity there, and let the remaining 2(m-1) entries range
//! freely (this overcounts nothing and misses nothing because reduced row
//! echelon forms are unique up to which columns hold the pivots). Pulling
//! the defining forms back along (s,t) |-> (s,t) * matrix and collecting
//! (s,t)-coefficients yields, per cell, an ideal in the free entries whose
//! solutions are exactly the lines on the intersection lying in that cell.
//! No solutions in any cell means no lines over the algebraic closure,
//! which is decided with `contains_one`.

use super::{contains_one, GbConfig, GbCoeffs, GroebnerError};
use crate::poly::mpoly::MPoly;
use crate::poly::ring::{Qq, Ring, Zz};
use std::collections::HashMap;

/// One Schubert cell of lines, with the coefficient ideal of the input
/// forms. Parameter variables: for the free columns c_1 < ... < c_{m-1}
/// (all columns except the pivots), variable k is the row-0 entry in column
/// c_{k+1} and variable (m-1)+k is the row-1 entry in the same column.
#[derive(Clone)]
pub struct LineCell<R: Ring> {
    pub pivots: (usize, usize),
    pub nparams: usize,
    pub gens: Vec<MPoly<R>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinesError {
    #[error("budget exceeded in cell with pivots ({},{}): {source}", .pivots.0, .pivots.1)]
    Budget { pivots: (usize, usize), source: GroebnerError },
}

/// The substitution images for one cell: coordinate c of P^m as a
/// polynomial in (params..., s, t), where s and t are the two last
/// variables.
fn cell_images<R: Ring>(ring: &R, m: usize, pivots: (usize, usize)) -> Vec<MPoly<R>> {
    let nparams = 2 * (m - 1);
    let ntot = nparams + 2;
    let s = MPoly::var(ring, nparams, ntot);
    let t = MPoly::var(ring, nparams + 1, ntot);
    let mut images = Vec::with_capacity(m + 1);
    let mut free_pos = 0usize;
    for c in 0..=m {
        if c == pivots.0 {
            images.push(s.clone());
        } else if c == pivots.1 {
            images.push(t.clone());
        } else {
            let a = MPoly::var(ring, free_pos, ntot);
            let b = MPoly::var(ring, (m - 1) + free_pos, ntot);
            images.push(a.mul(ring, &s).add(ring, &b.mul(ring, &t)));
            free_pos += 1;
        }
    }
    images
}

/// Restriction of one form to the cell's parametrized line, split into
/// (s,t)-coefficient polynomials in the cell parameters, highest s-power
/// first.
fn collect_coefficients<R: Ring>(ring: &R, f: &MPoly<R>, m: usize, pivots: (usize, usize)) -> Vec<MPoly<R>> {
    let nparams = 2 * (m - 1);
    let images = cell_images(ring, m, pivots);
    let restricted = f.subst(ring, &images, nparams + 2);
    let mut groups: HashMap<(u16, u16), Vec<(Vec<u16>, R::Elem)>> = HashMap::new();
    for (e, c) in restricted.terms() {
        let st = (e[nparams], e[nparams + 1]);
        let pe = e[..nparams].to_vec();
        groups.entry(st).or_default().push((pe, c.clone()));
    }
    let mut keys: Vec<(u16, u16)> = groups.keys().copied().collect();
    keys.sort_by(|a, b| b.cmp(a));
    keys.into_iter()
        .map(|k| MPoly::from_terms(ring, nparams, groups.remove(&k).unwrap()))
        .collect()
}

/// All C(m+1,2) cell ideals for lines on the common zero locus of the
/// homogeneous forms `f_list` in P^m, m in {3,4}. A line lies on the locus
/// iff some cell ideal has a solution.
pub fn schubert_line_ideals<R: Ring>(ring: &R, f_list: &[MPoly<R>], m: usize) -> Vec<LineCell<R>> {
    assert!(m == 3 || m == 4, "ambient dimension must be 3 or 4");
    for f in f_list {
        assert_eq!(f.nvars(), m + 1, "forms must live in {} variables", m + 1);
        assert!(
            f.is_zero() || f.homogeneous_degree().is_some(),
            "forms must be homogeneous"
        );
    }
    let mut cells = Vec::with_capacity((m + 1) * m / 2);
    for i in 0..m {
        for j in i + 1..=m {
            let mut gens = Vec::new();
            for f in f_list {
                if f.is_zero() {
                    continue;
                }
                gens.extend(collect_coefficients(ring, f, m, (i, j)));
            }
            cells.push(LineCell { pivots: (i, j), nparams: 2 * (m - 1), gens });
        }
    }
    cells
}

/// True iff no line over the algebraic closure lies on the common zero
/// locus: every Schubert cell ideal must contain 1.
pub fn lines_free_over_closure<R: GbCoeffs>(
    ring: &R,
    f_list: &[MPoly<R>],
    m: usize,
    cfg: &GbConfig,
) -> Result<bool, LinesError> {
    for cell in schubert_line_ideals(ring, f_list, m) {
        let empty = contains_one(ring, &cell.gens, cfg)
            .map_err(|source| LinesError::Budget { pivots: cell.pivots, source })?;
        if !empty {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rational front door: scalars do not change any ideal over Q, so each
/// form is replaced by its primitive integer model and the integer engine
/// does the work.
pub fn lines_free_over_closure_qq(
    f_list: &[MPoly<Qq>],
    m: usize,
    cfg: &GbConfig,
) -> Result<bool, LinesError> {
    let zz: Vec<MPoly<Zz>> = f_list.iter().map(|f| f.to_zz_primitive().0).collect();
    lines_free_over_closure(&Zz, &zz, m, cfg)
}
