//! Riemann-Roch spaces of effective affine divisors.
//!
//! Sections of `L(D)` are written `(A + B·y) / Δ` where `Δ(x)` clears the
//! poles allowed by `D`: a Weierstrass point of multiplicity `m` needs
//! `(x − e)^⌈m/2⌉`, a conjugate pair with multiplicities `m₁, m₂` needs
//! `(x − a)^max(m₁, m₂)`. Regularity at the two points at infinity is the
//! degree bound `deg A ≤ deg Δ`, `deg B ≤ deg Δ − g − 1`; the remaining
//! conditions are vanishing of local expansions, with `y` expanded as a
//! power series in `x − a` on each branch.

use crate::error::{Error, Result};
use crate::exactalg::upoly::{self, Poly};
use crate::exactalg::{hensel_sqrt, matrix, Field, Matrix};

use super::{HDivisor, HPoint, HyperellipticCurve};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRSpace<E> {
    pub divisor: HDivisor<E>,
    pub denominator: Poly<E>,
    /// `(A, B)` per basis section `(A + B·y) / Δ`.
    pub basis: Vec<(Poly<E>, Poly<E>)>,
    pub dimension: usize,
}

impl<E: Clone + PartialEq> RRSpace<E> {
    pub fn format_section<F: Field<Elem = E>>(&self, k: &F, i: usize) -> String {
        let (a, b) = &self.basis[i];
        let den = upoly::format(k, &self.denominator, "x");
        if b.iter().all(|c| k.is_zero(c)) {
            return format!("({}) / ({den})", upoly::format(k, a, "x"));
        }
        format!("({} + ({})*y) / ({den})", upoly::format(k, a, "x"), upoly::format(k, b, "x"))
    }
}

/// Points of `D` grouped by x-coordinate with the exponent of `x − a` in `Δ`.
struct Fiber<E> {
    x: E,
    points: Vec<(HPoint<E>, usize)>,
    exponent: usize,
}

fn fibers<F: Field>(k: &F, d: &HDivisor<F::Elem>) -> Vec<Fiber<F::Elem>> {
    let mut out: Vec<Fiber<F::Elem>> = Vec::new();
    for (p, m) in &d.support {
        match out.iter_mut().find(|g| g.x == p.x) {
            Some(g) => g.points.push((p.clone(), *m)),
            None => out.push(Fiber { x: p.x.clone(), points: vec![(p.clone(), *m)], exponent: 0 }),
        }
    }
    for g in &mut out {
        let (p, m) = &g.points[0];
        g.exponent = if p.weierstrass { m.div_ceil(2) } else { g.points.iter().map(|(_, m)| *m).max().unwrap() };
        if !p.weierstrass && g.points.len() == 1 {
            g.points.push((p.conjugate(k), 0));
        }
    }
    out
}

/// `max(0, g − k)` where `2k` is the degree of the smallest
/// involution-invariant divisor containing `D`.
pub fn h1_effective<F: Field>(k: &F, curve: &HyperellipticCurve<F::Elem>, d: &HDivisor<F::Elem>) -> usize {
    let kk: usize = fibers(k, d).iter().map(|g| g.exponent).sum();
    curve.genus.saturating_sub(kk)
}

pub fn h0_effective<F: Field>(k: &F, curve: &HyperellipticCurve<F::Elem>, d: &HDivisor<F::Elem>) -> usize {
    d.degree() + 1 + h1_effective(k, curve, d) - curve.genus
}

/// `x^j` expanded at `a`, for `j ≤ n`.
fn shifted_monomials<F: Field>(k: &F, a: &F::Elem, n: usize) -> Vec<Poly<F::Elem>> {
    (0..=n).map(|j| upoly::taylor_shift(k, &upoly::monomial(k, j), a)).collect()
}

fn coeff<F: Field>(k: &F, p: &[F::Elem], i: usize) -> F::Elem {
    p.get(i).cloned().unwrap_or_else(|| k.zero())
}

/// `h¹(D) = h⁰(K − D)` as `g` minus the rank of the vanishing conditions
/// that `D` imposes on differentials `q(x) dx / y` with `deg q ≤ g − 1`.
pub fn h1_dual_rank<F: Field>(k: &F, curve: &HyperellipticCurve<F::Elem>, d: &HDivisor<F::Elem>) -> usize {
    let g = curve.genus;
    let mut rows = Vec::new();
    for (p, m) in &d.support {
        let t = shifted_monomials(k, &p.x, g - 1);
        // the local order of q at p is ord_a(q), doubled at a ramification point
        let weight = if p.weierstrass { 2 } else { 1 };
        let mut i = 0;
        while weight * i < *m {
            rows.push((0..g).map(|j| coeff(k, &t[j], i)).collect());
            i += 1;
        }
    }
    g - matrix::rank(k, &Matrix::from_rows(g, rows))
}

/// Rows imposing `ord_P(A + B·y) ≥ need` on coefficient vectors
/// `[A_0..A_{na}, B_0..B_{nb}]`.
fn order_conditions<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    p: &HPoint<F::Elem>,
    need: usize,
    na: usize,
    nb: usize,
) -> Result<Vec<Vec<F::Elem>>> {
    let mut rows = Vec::new();
    if need == 0 {
        return Ok(rows);
    }
    let t = shifted_monomials(k, &p.x, na.max(nb));
    if p.weierstrass {
        // ord = min(2 ord A, 2 ord B + 1)
        for i in 0..need.div_ceil(2) {
            let mut r = vec![k.zero(); na + nb];
            for j in 0..na {
                r[j] = coeff(k, &t[j], i);
            }
            rows.push(r);
        }
        for i in 0..need / 2 {
            let mut r = vec![k.zero(); na + nb];
            for j in 0..nb {
                r[na + j] = coeff(k, &t[j], i);
            }
            rows.push(r);
        }
        return Ok(rows);
    }
    let y = hensel_sqrt(k, &curve.f, &p.x, &p.y, need)?.coefficients;
    for i in 0..need {
        let mut r = vec![k.zero(); na + nb];
        for j in 0..na {
            r[j] = coeff(k, &t[j], i);
        }
        for j in 0..nb {
            let mut s = k.zero();
            for l in 0..=i {
                s = k.add(&s, &k.mul(&coeff(k, &t[j], l), &y[i - l]));
            }
            r[na + j] = s;
        }
        rows.push(r);
    }
    Ok(rows)
}

fn split_kernel<F: Field>(k: &F, v: Vec<F::Elem>, na: usize) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let b = v[na..].to_vec();
    let mut a = v;
    a.truncate(na);
    (upoly::trimmed(k, a), upoly::trimmed(k, b))
}

pub fn rr_space<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    d: &HDivisor<F::Elem>,
) -> Result<RRSpace<F::Elem>> {
    if k.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let fib = fibers(k, d);
    let mut delta = vec![k.one()];
    for g in &fib {
        delta = upoly::mul(k, &delta, &upoly::pow(k, &upoly::linear(k, &g.x), g.exponent));
    }
    let deg = delta.len() - 1;
    let na = deg + 1;
    let nb = deg.saturating_sub(curve.genus);
    let mut rows = Vec::new();
    for g in &fib {
        for (p, m) in &g.points {
            let pole = if p.weierstrass { 2 * g.exponent } else { g.exponent };
            rows.extend(order_conditions(k, curve, p, pole - m, na, nb)?);
        }
    }
    let kernel = matrix::kernel(k, &Matrix::from_rows(na + nb, rows));
    let basis: Vec<_> = kernel.into_iter().map(|v| split_kernel(k, v, na)).collect();
    let expected = h0_effective(k, curve, d);
    if basis.len() != expected {
        return Err(Error::PipelineCheck(format!(
            "Riemann-Roch space has dimension {} but the recipe gives {expected}",
            basis.len()
        )));
    }
    Ok(RRSpace { divisor: d.clone(), denominator: delta, dimension: basis.len(), basis })
}

/// `dim {A + B·y : deg A ≤ m, deg B ≤ m − g − 1, div ≥ D}`, the sections
/// of `m` times the hyperelliptic class vanishing on `D`.
pub fn h0_polar<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    m: usize,
    d: &HDivisor<F::Elem>,
) -> Result<usize> {
    let na = m + 1;
    let nb = m.saturating_sub(curve.genus);
    let mut rows = Vec::new();
    for (p, mult) in &d.support {
        rows.extend(order_conditions(k, curve, p, *mult, na, nb)?);
    }
    Ok(matrix::kernel(k, &Matrix::from_rows(na + nb, rows)).len())
}

fn poly_order<F: Field>(k: &F, p: &[F::Elem], a: &F::Elem) -> Option<usize> {
    upoly::taylor_shift(k, p, a).iter().position(|c| !k.is_zero(c))
}

/// `min(ord_P(A + B·y), cap)`.
pub fn local_order<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    section: (&[F::Elem], &[F::Elem]),
    p: &HPoint<F::Elem>,
    cap: usize,
) -> Result<usize> {
    let (a, b) = section;
    if p.weierstrass {
        let oa = poly_order(k, a, &p.x).map_or(usize::MAX, |o| 2 * o);
        let ob = poly_order(k, b, &p.x).map_or(usize::MAX, |o| 2 * o + 1);
        return Ok(oa.min(ob).min(cap));
    }
    if b.iter().all(|c| k.is_zero(c)) {
        return Ok(poly_order(k, a, &p.x).unwrap_or(usize::MAX).min(cap));
    }
    if cap == 0 {
        return Ok(0);
    }
    let y = hensel_sqrt(k, &curve.f, &p.x, &p.y, cap)?.coefficients;
    let ta = upoly::taylor_shift(k, a, &p.x);
    let tb = upoly::taylor_shift(k, b, &p.x);
    for i in 0..cap {
        let mut s = coeff(k, &ta, i);
        for l in 0..=i {
            s = k.add(&s, &k.mul(&coeff(k, &tb, l), &y[i - l]));
        }
        if !k.is_zero(&s) {
            return Ok(i);
        }
    }
    Ok(cap)
}

/// Fixed part of `|D|`: at each support point, the least order of
/// `div(s) + D` over the basis.
pub fn base_locus<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    space: &RRSpace<F::Elem>,
) -> Result<HDivisor<F::Elem>> {
    if space.dimension == 0 {
        return Err(Error::ZeroSpace);
    }
    let mut out = Vec::new();
    for (p, m) in &space.divisor.support {
        let pole = local_order(k, curve, (&space.denominator, &[]), p, usize::MAX / 4)?;
        let mut least = *m;
        for (a, b) in &space.basis {
            let o = local_order(k, curve, (a, b), p, pole + m)?;
            least = least.min((o + m).saturating_sub(pole));
        }
        if least > 0 {
            out.push((p.clone(), least));
        }
    }
    Ok(HDivisor::new(out))
}
