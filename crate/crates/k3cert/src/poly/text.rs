//! Canonical text form for polynomials and its parser.
//!
//! Terms print in descending graded reverse lexicographic order with
//! explicit `*` and `^`, base-10 coefficients, and signs folded into the
//! separators: `14*u^6 + 36*u^5*v - 3*w^6`. A unit coefficient is omitted
//! before a monomial; exponent 1 prints bare. The printer's output is the
//! one canonical form: parse(print(p)) == p exactly, and printing again
//! yields the same bytes. The parser is more forgiving (whitespace, `+`
//! prefix, repeated numeric factors) since model files are hand-editable.
//!
//! Variable alphabets are fixed per context and passed explicitly: (u,v,w)
//! for the plane, (s,t) for binary forms, x0..x4 / x0..x5 for projective
//! space, t for univariate work.

use super::mpoly::MPoly;
use super::ring::Ring;
use super::upoly::UPoly;

pub const VARS_P2: [&str; 3] = ["u", "v", "w"];
pub const VARS_BINARY: [&str; 2] = ["s", "t"];
pub const VARS_P4: [&str; 5] = ["x0", "x1", "x2", "x3", "x4"];
pub const VARS_P5: [&str; 6] = ["x0", "x1", "x2", "x3", "x4", "x5"];
pub const VARS_T: [&str; 1] = ["t"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("bad exponent in `{0}`")]
    BadExponent(String),
    #[error("bad term `{0}`")]
    BadTerm(String),
    #[error("bad coefficient: {0}")]
    BadCoefficient(#[from] super::ring::CoeffParseError),
}

pub fn poly_to_text<R: Ring>(ring: &R, p: &MPoly<R>, vars: &[&str]) -> String {
    assert_eq!(p.nvars(), vars.len(), "alphabet size mismatch");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (exps, coeff)) in p.terms().iter().enumerate() {
        let neg = ring.is_negative_display(coeff);
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let cs = ring.coeff_to_string_abs(coeff);
        let mut mon = String::new();
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !mon.is_empty() {
                mon.push('*');
            }
            mon.push_str(vars[i]);
            if e >= 2 {
                mon.push('^');
                mon.push_str(&e.to_string());
            }
        }
        if mon.is_empty() {
            out.push_str(&cs);
        } else if cs == "1" {
            out.push_str(&mon);
        } else {
            out.push_str(&cs);
            out.push('*');
            out.push_str(&mon);
        }
    }
    out
}

pub fn poly_from_text<R: Ring>(
    ring: &R,
    s: &str,
    vars: &[&str],
) -> Result<MPoly<R>, PolyParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(PolyParseError::Empty);
    }
    let nvars = vars.len();
    // split into signed chunks at top level (not inside brackets)
    let mut terms: Vec<(Vec<u16>, R::Elem)> = Vec::new();
    let mut chunk = String::new();
    let mut sign = 1i64;
    let mut depth = 0usize;
    let mut pending: Vec<(i64, String)> = Vec::new();
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                chunk.push(ch);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                chunk.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if chunk.trim().is_empty() {
                    // sign prefix on the first term (or after another sign)
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    pending.push((sign, std::mem::take(&mut chunk)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
            }
            _ => chunk.push(ch),
        }
    }
    if chunk.trim().is_empty() {
        return Err(PolyParseError::Empty);
    }
    pending.push((sign, chunk));

    for (sgn, text) in pending {
        let (exps, coeff) = parse_term(ring, text.trim(), vars, nvars)?;
        let signed = if sgn < 0 { ring.neg(&coeff) } else { coeff };
        terms.push((exps, signed));
    }
    Ok(MPoly::from_terms(ring, nvars, terms))
}

fn parse_term<R: Ring>(
    ring: &R,
    term: &str,
    vars: &[&str],
    nvars: usize,
) -> Result<(Vec<u16>, R::Elem), PolyParseError> {
    if term.is_empty() {
        return Err(PolyParseError::BadTerm(term.to_string()));
    }
    let mut exps = vec![0u16; nvars];
    let mut coeff = ring.one();
    // split on '*' at bracket depth 0
    let mut factors: Vec<String> = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for ch in term.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            '*' if depth == 0 => factors.push(std::mem::take(&mut cur)),
            _ => cur.push(ch),
        }
    }
    factors.push(cur);

    for f in &factors {
        let f = f.trim();
        if f.is_empty() {
            return Err(PolyParseError::BadTerm(term.to_string()));
        }
        let starts_numeric = f.starts_with(|c: char| c.is_ascii_digit()) || f.starts_with('[');
        if starts_numeric {
            let c = ring.coeff_parse(f)?;
            coeff = ring.mul(&coeff, &c);
            continue;
        }
        let (name, exp) = match f.split_once('^') {
            None => (f, 1u16),
            Some((n, e)) => {
                let exp: u16 =
                    e.trim().parse().map_err(|_| PolyParseError::BadExponent(f.to_string()))?;
                (n.trim(), exp)
            }
        };
        let idx = vars
            .iter()
            .position(|&v| v == name)
            .ok_or_else(|| PolyParseError::UnknownVariable(name.to_string()))?;
        exps[idx] = exps[idx]
            .checked_add(exp)
            .ok_or_else(|| PolyParseError::BadExponent(f.to_string()))?;
    }
    Ok((exps, coeff))
}

pub fn upoly_to_text<R: Ring>(ring: &R, p: &UPoly<R>) -> String {
    poly_to_text(ring, &p.to_mpoly(ring), &VARS_T)
}

pub fn upoly_from_text<R: Ring>(ring: &R, s: &str) -> Result<UPoly<R>, PolyParseError> {
    Ok(UPoly::from_mpoly(ring, &poly_from_text(ring, s, &VARS_T)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use crate::poly::ring::{Fq, Qq, Zz};

    #[test]
    fn prints_canonical_shapes() {
        let z = Zz;
        let u = MPoly::var(&z, 0, 3);
        let v = MPoly::var(&z, 1, 3);
        let w = MPoly::var(&z, 2, 3);
        let p = u
            .pow(&z, 6)
            .scale(&z, &z.from_i64(14))
            .add(&z, &u.pow(&z, 5).mul(&z, &v).scale(&z, &z.from_i64(36)))
            .add(&z, &w.pow(&z, 6).neg(&z));
        assert_eq!(poly_to_text(&z, &p, &VARS_P2), "14*u^6 + 36*u^5*v - w^6");
        assert_eq!(poly_to_text(&z, &MPoly::zero(3), &VARS_P2), "0");
        let lead_neg = u.scale(&z, &z.from_i64(-3)).add(&z, &v);
        assert_eq!(poly_to_text(&z, &lead_neg, &VARS_P2), "-3*u + v");
        let constant = MPoly::constant(&z, z.from_i64(-7), 3);
        assert_eq!(poly_to_text(&z, &constant, &VARS_P2), "-7");
    }

    #[test]
    fn round_trip_is_identity_zz() {
        let z = Zz;
        let mut state = 88u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..50 {
            let terms: Vec<(Vec<u16>, num::BigInt)> = (0..6)
                .map(|_| {
                    (
                        vec![(next() % 5) as u16, (next() % 5) as u16, (next() % 5) as u16],
                        Zz.from_i64((next() % 41) as i64 - 20),
                    )
                })
                .collect();
            let p = MPoly::from_terms(&z, 3, terms);
            let text = poly_to_text(&z, &p, &VARS_P2);
            let q = poly_from_text(&z, &text, &VARS_P2).unwrap();
            assert_eq!(p, q);
            // printing again yields identical bytes
            assert_eq!(poly_to_text(&z, &q, &VARS_P2), text);
        }
    }

    #[test]
    fn round_trip_rationals() {
        let q = Qq;
        let x = MPoly::var(&q, 0, 2);
        let y = MPoly::var(&q, 1, 2);
        let p = x
            .scale(&q, &q.coeff_parse("-3/4").unwrap())
            .add(&q, &y.pow(&q, 2).scale(&q, &q.coeff_parse("5/6").unwrap()));
        let text = poly_to_text(&q, &p, &VARS_BINARY);
        assert_eq!(text, "5/6*t^2 - 3/4*s");
        assert_eq!(poly_from_text(&q, &text, &VARS_BINARY).unwrap(), p);
    }

    #[test]
    fn round_trip_extension_field() {
        let f9 = Fq(make_field(3, 2).unwrap());
        let x = MPoly::var(&f9, 0, 2);
        let g = f9.0.from_coeffs(&[1, 2]);
        let p = x.pow(&f9, 2).scale(&f9, &g).add(&f9, &MPoly::one(&f9, 2));
        let text = poly_to_text(&f9, &p, &VARS_BINARY);
        assert_eq!(text, "[1,2]*s^2 + [1,0]");
        assert_eq!(poly_from_text(&f9, &text, &VARS_BINARY).unwrap(), p);
    }

    #[test]
    fn parser_accepts_loose_input() {
        let z = Zz;
        let p = poly_from_text(&z, "  2*x0*x1 + x2^2 - 3 ", &VARS_P4).unwrap();
        assert_eq!(p.nterms(), 3);
        let q = poly_from_text(&z, "+x0 - -x1", &VARS_P4).unwrap();
        let expect = MPoly::var(&z, 0, 5).add(&z, &MPoly::var(&z, 1, 5));
        assert_eq!(q, expect);
        // repeated numeric factors multiply
        let r = poly_from_text(&z, "2*3*x0", &VARS_P4).unwrap();
        assert_eq!(r, MPoly::var(&z, 0, 5).scale(&z, &z.from_i64(6)));
        // same variable twice accumulates exponents
        let s = poly_from_text(&z, "x0*x0", &VARS_P4).unwrap();
        assert_eq!(s, MPoly::var(&z, 0, 5).pow(&z, 2));
    }

    #[test]
    fn parser_rejects_garbage() {
        let z = Zz;
        assert!(matches!(poly_from_text(&z, "", &VARS_P2), Err(PolyParseError::Empty)));
        assert!(matches!(
            poly_from_text(&z, "q^2", &VARS_P2),
            Err(PolyParseError::UnknownVariable(_))
        ));
        assert!(matches!(
            poly_from_text(&z, "u^x", &VARS_P2),
            Err(PolyParseError::BadExponent(_))
        ));
        assert!(matches!(
            poly_from_text(&z, "u + ", &VARS_P2),
            Err(PolyParseError::BadTerm(_)) | Err(PolyParseError::Empty)
        ));
    }

    #[test]
    fn univariate_round_trip() {
        let z = Zz;
        let f = UPoly::from_i64(&z, &[-1, 0, 47]);
        let text = upoly_to_text(&z, &f);
        assert_eq!(text, "47*t^2 - 1");
        assert_eq!(upoly_from_text(&z, &text).unwrap(), f);
    }

    #[test]
    fn paper_style_sextic_parses() {
        let z = Zz;
        let text = "13*u^6 + 43*u^5*v + 19*u^4*v^2 + 11*u^3*v^3 + 37*u^2*v^4 + 17*u*v^5 + 12*v^6";
        let p = poly_from_text(&z, text, &VARS_P2).unwrap();
        assert_eq!(p.homogeneous_degree(), Some(6));
        assert_eq!(poly_to_text(&z, &p, &VARS_P2), text);
    }
}
