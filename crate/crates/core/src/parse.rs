//! Text grammar for polynomials, points and field elements.
//!
//! Polynomials are sums of terms `c*x0^i*x1^j*...`, joined by `+` or `-`.
//! Coefficients are integers or fractions `a/b`; a term may omit the
//! coefficient or the variables. Whitespace is ignored.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::Field;

/// Sparse polynomial: exponent vector (one entry per variable) to coefficient.
pub type SparsePoly = BTreeMap<Vec<u32>, BigRational>;

pub const QUADRIC_VARS: [&str; 4] = ["x0", "x1", "y0", "y1"];
pub const CONE_VARS: [&str; 4] = ["X0", "X1", "X2", "X3"];
pub const AFFINE_VARS: [&str; 2] = ["x", "y"];
pub const BINARY_VARS: [&str; 2] = ["s", "t"];

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| perr(format!("bad number '{s}'")))?;
    let d: BigInt = den.parse().map_err(|_| perr(format!("bad number '{s}'")))?;
    if d.is_zero() {
        return Err(perr(format!("zero denominator in '{s}'")));
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_elem<F: Field>(k: &F, s: &str) -> Result<F::Elem> {
    k.from_rational(&parse_rational(s)?)
}

/// Parses a polynomial over the given variable names.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<SparsePoly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr("empty polynomial"));
    }
    // split into signed terms, keeping '/' inside coefficients
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && !(i > 0 && s[..i].ends_with('^')) {
            if !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
            } else if i > 0 {
                return Err(perr(format!("dangling sign in '{text}'")));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(perr(format!("trailing sign in '{text}'")));
    }
    terms.push((neg, cur));

    let mut out = SparsePoly::new();
    for (neg, term) in terms {
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; vars.len()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(perr(format!("empty factor in '{term}'")));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                coeff *= parse_rational(factor)?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| perr(format!("bad exponent in '{factor}'")))?),
                None => (factor, 1),
            };
            let idx = vars
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| perr(format!("unknown variable '{name}' (expected one of {vars:?})")))?;
            exps[idx] += exp;
        }
        if neg {
            coeff = -coeff;
        }
        let e = out.entry(exps).or_insert_with(BigRational::zero);
        *e += coeff;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Total degree of every term, if the polynomial is homogeneous in the
/// variables selected by `group`.
pub fn homogeneous_degree(p: &SparsePoly, group: &[usize]) -> Option<u32> {
    let mut deg = None;
    for exps in p.keys() {
        let d: u32 = group.iter().map(|&i| exps[i]).sum();
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return None,
            _ => {}
        }
    }
    deg
}

/// Parses `(a:b:...)` with rational entries.
pub fn parse_projective(s: &str) -> Result<Vec<BigRational>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| perr(format!("expected '(a:b...)', got '{s}'")))?;
    let parts: Vec<BigRational> = inner.split(':').map(parse_rational).collect::<Result<_>>()?;
    if parts.len() < 2 {
        return Err(perr(format!("projective point needs at least two coordinates: '{s}'")));
    }
    if parts.iter().all(|c| c.is_zero()) {
        return Err(perr(format!("all-zero projective point '{s}'")));
    }
    Ok(parts)
}

/// Parses `(a,b)` with rational entries (affine pair or direction).
pub fn parse_pair(s: &str) -> Result<(BigRational, BigRational)> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| perr(format!("expected '(a,b)', got '{s}'")))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| perr(format!("expected '(a,b)', got '{s}'")))?;
    Ok((parse_rational(a)?, parse_rational(b)?))
}

/// Parses a surface point: `((a:b),(c:d))` on the quadric or `(a:b:c:d)`
/// on the cone.
pub fn parse_surface_coords(s: &str) -> Result<Vec<Vec<BigRational>>> {
    let t = s.trim();
    if t.starts_with("((") {
        let inner = &t[1..t.len().saturating_sub(1)];
        let close = inner.find(')').ok_or_else(|| perr(format!("bad point '{s}'")))?;
        let first = &inner[..=close];
        let rest = inner[close + 1..].trim_start_matches(',');
        if !t.ends_with(')') {
            return Err(perr(format!("bad point '{s}'")));
        }
        Ok(vec![parse_projective(first)?, parse_projective(rest)?])
    } else {
        Ok(vec![parse_projective(t)?])
    }
}
