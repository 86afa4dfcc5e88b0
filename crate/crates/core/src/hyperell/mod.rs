//! Divisors on hyperelliptic curves `y² = f(x)` with `deg f = 2g + 2`.
//!
//! Points are affine; both points at infinity are excluded from divisor
//! supports. A Riemann-Roch section is stored as `(A + B·y) / Δ` with
//! `A, B ∈ k[x]`.

mod pipeline;
mod rr;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::exactalg::upoly::{self, Poly};
use crate::exactalg::Field;

pub use pipeline::{
    classify_series, find_generic_point, injective_g2_pipeline, PipelineReport, SeriesClass, SeriesType,
};
pub use rr::{base_locus, h0_effective, h0_polar, h1_dual_rank, h1_effective, local_order, rr_space, RRSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve<E> {
    pub f: Poly<E>,
    pub genus: usize,
}

impl<E: Clone> HyperellipticCurve<E> {
    pub fn new<F: Field<Elem = E>>(k: &F, f: Poly<E>) -> Result<Self> {
        if k.characteristic() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        let f = upoly::trimmed(k, f);
        let deg = upoly::degree(&f).unwrap_or(0);
        if !deg.is_multiple_of(2) || deg < 6 {
            return Err(Error::InvalidCurve(format!("deg f = {deg}; need an even degree 2g+2 with g >= 2")));
        }
        if !upoly::is_squarefree(k, &f) {
            return Err(Error::InvalidCurve("f has a repeated factor".into()));
        }
        Ok(Self { genus: deg / 2 - 1, f })
    }

    /// Parses `f` as a polynomial in `x`, optionally written `f=...`.
    pub fn parse<F: Field<Elem = E>>(k: &F, text: &str) -> Result<Self> {
        let body = text.trim().strip_prefix("f=").unwrap_or(text.trim());
        let sparse = crate::parse::parse_poly(body, &["x"])?;
        let deg = sparse.keys().map(|e| e[0] as usize).max().unwrap_or(0);
        let mut f = vec![k.zero(); deg + 1];
        for (e, c) in &sparse {
            f[e[0] as usize] = k.add(&f[e[0] as usize], &k.from_rational(c)?);
        }
        Self::new(k, f)
    }

    pub fn eval<F: Field<Elem = E>>(&self, k: &F, x: &E) -> E {
        upoly::eval(k, &self.f, x)
    }

    pub fn format<F: Field<Elem = E>>(&self, k: &F) -> String {
        format!("y^2 = {}", upoly::format(k, &self.f, "x"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPoint<E> {
    pub x: E,
    pub y: E,
    pub weierstrass: bool,
}

impl<E: Clone + PartialEq> HPoint<E> {
    pub fn new<F: Field<Elem = E>>(k: &F, curve: &HyperellipticCurve<E>, x: E, y: E) -> Result<Self> {
        if k.mul(&y, &y) != curve.eval(k, &x) {
            return Err(Error::PointNotOnCurve);
        }
        Ok(Self { weierstrass: k.is_zero(&y), x, y })
    }

    /// The point over `x` on the `y+` branch (`plus`) or the `y-` branch.
    pub fn on_branch<F: Field<Elem = E>>(k: &F, curve: &HyperellipticCurve<E>, x: E, plus: bool) -> Result<Self> {
        let [a, b] = branch_values(k, &curve.eval(k, &x)).ok_or(Error::NotASquare)?;
        Self::new(k, curve, x, if plus { a } else { b })
    }

    /// The hyperelliptic involution.
    pub fn conjugate<F: Field<Elem = E>>(&self, k: &F) -> Self {
        Self { x: self.x.clone(), y: k.neg(&self.y), weierstrass: self.weierstrass }
    }

    pub fn format<F: Field<Elem = E>>(&self, k: &F) -> String {
        format!("({},{})", k.format(&self.x), k.format(&self.y))
    }
}

/// The two square roots of `c`, ordered so that the first has the smaller
/// canonical representative (shorter text, then lexicographic).
pub fn branch_values<F: Field>(k: &F, c: &F::Elem) -> Option<[F::Elem; 2]> {
    let r = k.sqrt(c)?;
    let s = k.neg(&r);
    let key = |e: &F::Elem| {
        let t = k.format(e);
        (t.len(), t)
    };
    Some(if key(&r) <= key(&s) { [r, s] } else { [s, r] })
}

/// Roots of `f` over the base field, plus the degrees of the irreducible
/// factors of `f` when the field is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassReport<E> {
    pub points: Vec<HPoint<E>>,
    pub in_extensions: usize,
    pub factor_degrees: Option<Vec<usize>>,
}

pub fn weierstrass_points<F: Field>(k: &F, curve: &HyperellipticCurve<F::Elem>) -> WeierstrassReport<F::Elem> {
    let points: Vec<HPoint<F::Elem>> =
        upoly::roots(k, &curve.f).into_iter().map(|x| HPoint { x, y: k.zero(), weierstrass: true }).collect();
    let factor_degrees = k.order().map(|q| upoly::factor_degrees_finite(k, &curve.f, q));
    WeierstrassReport { in_extensions: 2 * curve.genus + 2 - points.len(), points, factor_degrees }
}

/// An effective divisor with affine support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HDivisor<E> {
    pub support: Vec<(HPoint<E>, usize)>,
}

impl<E: Clone + PartialEq> HDivisor<E> {
    pub fn zero() -> Self {
        Self { support: Vec::new() }
    }

    /// Collects signed multiplicities; a negative total is an error.
    pub fn from_signed(terms: Vec<(HPoint<E>, i64)>) -> Result<Self> {
        let mut acc: Vec<(HPoint<E>, i64)> = Vec::new();
        for (p, m) in terms {
            match acc.iter_mut().find(|(q, _)| *q == p) {
                Some(e) => e.1 += m,
                None => acc.push((p, m)),
            }
        }
        if acc.iter().any(|(_, m)| *m < 0) {
            return Err(Error::NonEffective);
        }
        Ok(Self { support: acc.into_iter().filter(|(_, m)| *m > 0).map(|(p, m)| (p, m as usize)).collect() })
    }

    pub fn new(terms: Vec<(HPoint<E>, usize)>) -> Self {
        Self::from_signed(terms.into_iter().map(|(p, m)| (p, m as i64)).collect()).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.support.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, p: &HPoint<E>) -> usize {
        self.support.iter().find(|(q, _)| q == p).map_or(0, |(_, m)| *m)
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self::new(self.support.iter().chain(&other.support).cloned().collect())
    }

    /// `self − p`, or `NonEffective` if `p` is not in the support.
    pub fn minus_point(&self, p: &HPoint<E>) -> Result<Self> {
        let mut terms: Vec<(HPoint<E>, i64)> = self.support.iter().map(|(q, m)| (q.clone(), *m as i64)).collect();
        terms.push((p.clone(), -1));
        Self::from_signed(terms)
    }

    pub fn conjugate<F: Field<Elem = E>>(&self, k: &F) -> Self {
        Self::new(self.support.iter().map(|(p, m)| (p.conjugate(k), *m)).collect())
    }

    pub fn format<F: Field<Elem = E>>(&self, k: &F) -> String {
        if self.support.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = self.support.iter().map(|(p, m)| format!("{m}*{}", p.format(k))).collect();
        terms.join(" + ")
    }
}

/// Parses `2*(0,0) + 3*(7,y+)`. The second coordinate is a field element
/// or `y+` / `y-` for a branch chosen by [`branch_values`].
pub fn parse_divisor<F: Field>(k: &F, curve: &HyperellipticCurve<F::Elem>, text: &str) -> Result<HDivisor<F::Elem>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "0" {
        return Ok(HDivisor::zero());
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ => (1, rest),
        };
        let open = body.find('(').ok_or_else(|| Error::Parse(format!("expected a point in '{body}'")))?;
        let close = body.find(')').ok_or_else(|| Error::Parse("unclosed point".into()))?;
        let coef = body[..open].trim_end_matches('*');
        let m: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| Error::Parse(format!("bad multiplicity '{coef}'")))?
        };
        let (xs, ys) = body[open + 1..close]
            .split_once(',')
            .ok_or_else(|| Error::Parse("a point needs two coordinates".into()))?;
        let x = crate::parse::parse_elem(k, xs)?;
        let p = match ys {
            "y+" => HPoint::on_branch(k, curve, x, true)?,
            "y-" => HPoint::on_branch(k, curve, x, false)?,
            _ => HPoint::new(k, curve, x, crate::parse::parse_elem(k, ys)?)?,
        };
        terms.push((p, sign * m));
        rest = &body[close + 1..];
    }
    HDivisor::from_signed(terms)
}

/// A uniformly drawn rational point, or `None` after 64 misses.
pub fn random_point<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    rng: &mut dyn RngCore,
) -> Option<HPoint<F::Elem>> {
    for _ in 0..64 {
        let x = k.random(rng);
        if let Some(ys) = branch_values(k, &curve.eval(k, &x)) {
            let y = if rng.next_u32() & 1 == 0 { ys[0].clone() } else { ys[1].clone() };
            return Some(HPoint { weierstrass: k.is_zero(&y), x, y });
        }
    }
    None
}

/// A random effective divisor of degree at most `max_degree`, mixing
/// conjugate pairs, Weierstrass points and generic points.
pub fn random_divisor<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    max_degree: usize,
    rng: &mut dyn RngCore,
) -> HDivisor<F::Elem> {
    let target = (rng.next_u32() as usize) % (max_degree + 1);
    let weier = weierstrass_points(k, curve).points;
    let mut terms: Vec<(HPoint<F::Elem>, usize)> = Vec::new();
    let mut deg = 0;
    while deg < target {
        let m = 1 + (rng.next_u32() as usize) % (target - deg).min(3);
        let p = match rng.next_u32() % 4 {
            0 if !weier.is_empty() => weier[rng.next_u32() as usize % weier.len()].clone(),
            1 if !terms.is_empty() => terms[rng.next_u32() as usize % terms.len()].0.conjugate(k),
            _ => match random_point(k, curve, rng) {
                Some(p) => p,
                None => break,
            },
        };
        terms.push((p, m));
        deg += m;
    }
    HDivisor::new(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    pub(crate) fn sextic(k: &PrimeField) -> HyperellipticCurve<u64> {
        HyperellipticCurve::parse(k, "x^6 - 15*x^5 + 85*x^4 - 225*x^3 + 274*x^2 - 120*x").unwrap()
    }

    #[test]
    fn split_sextic_has_six_rational_weierstrass_points() {
        let k = PrimeField::new(101).unwrap();
        let c = sextic(&k);
        assert_eq!(c.genus, 2);
        let w = weierstrass_points(&k, &c);
        assert_eq!(w.points.len(), 6);
        assert_eq!(w.in_extensions, 0);
        assert_eq!(w.factor_degrees, Some(vec![1; 6]));
    }

    #[test]
    fn irreducible_sextic_has_none() {
        let k = PrimeField::new(7).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
        let f = loop {
            let mut f: Vec<u64> = (0..6).map(|_| k.random(&mut rng)).collect();
            f.push(1);
            if upoly::is_irreducible_finite(&k, &f, 7) {
                break f;
            }
        };
        let c = HyperellipticCurve::new(&k, f).unwrap();
        let w = weierstrass_points(&k, &c);
        assert!(w.points.is_empty());
        assert_eq!(w.factor_degrees, Some(vec![6]));
        assert_eq!(w.in_extensions, 6);
    }

    #[test]
    fn model_checks() {
        let k = PrimeField::new(101).unwrap();
        assert!(matches!(HyperellipticCurve::parse(&k, "x^5 + 1"), Err(Error::InvalidCurve(_))));
        assert!(matches!(HyperellipticCurve::parse(&k, "x^6 - 2*x^3 + 1"), Err(Error::InvalidCurve(_))));
        let k3 = PrimeField::new(3).unwrap();
        assert!(HyperellipticCurve::parse(&k3, "x^6 + x + 1").is_ok());
    }

    #[test]
    fn divisor_parsing() {
        let k = PrimeField::new(101).unwrap();
        let c = sextic(&k);
        let d = parse_divisor(&k, &c, "2*(0,0) + 3*(6,y+) + (6,y-)").unwrap();
        assert_eq!(d.degree(), 6);
        assert_eq!(d.support.len(), 3);
        assert_eq!(parse_divisor(&k, &c, "(0,0) - 2*(0,0)"), Err(Error::NonEffective));
        assert_eq!(parse_divisor(&k, &c, "(6,1)"), Err(Error::PointNotOnCurve));
    }
}
