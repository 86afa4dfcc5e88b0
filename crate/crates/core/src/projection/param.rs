//! Injectivity of a map P¹ → P^r given by binary forms.
//!
//! Two parameters collide iff all minors `φ_i(P)φ_j(Q) − φ_j(P)φ_i(Q)`
//! vanish. Each minor is divisible by `sv − tu`; the quotients vanish on
//! the diagonal exactly at the cusps of the map. Common zeros off the
//! diagonal are double points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::closure::{common_root_branches, distinct_roots_per_branch, split_by_vanishing};
use crate::exactalg::upoly::{self, Poly};
use crate::exactalg::{matrix, resultant, substitute, BiPoly, BinaryForm, Field, Matrix, Var};
use crate::parse::{homogeneous_degree, parse_poly, BINARY_VARS};

/// A rational curve `(s:t) ↦ (φ_0 : … : φ_r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCurve<E> {
    pub forms: Vec<BinaryForm<E>>,
}

impl<E: Clone + Eq + std::fmt::Debug> RationalCurve<E> {
    pub fn new(forms: Vec<BinaryForm<E>>) -> Result<Self> {
        if forms.len() < 2 {
            return Err(Error::InvalidInput("a map to projective space needs at least two forms".into()));
        }
        let n = forms[0].degree;
        if forms.iter().any(|f| f.degree != n) {
            return Err(Error::InvalidInput("all forms must have the same degree".into()));
        }
        Ok(Self { forms })
    }

    /// Parses forms in `s, t`; a bare `0` is allowed.
    pub fn parse<F: Field<Elem = E>>(k: &F, texts: &[&str]) -> Result<Self> {
        let mut sparse = Vec::new();
        let mut degree = None;
        for t in texts {
            let p = parse_poly(t, &BINARY_VARS)?;
            if !p.is_empty() {
                let d = homogeneous_degree(&p, &[0, 1])
                    .ok_or_else(|| Error::Parse(format!("'{t}' is not homogeneous in s, t")))?;
                if degree.is_some_and(|e| e != d) {
                    return Err(Error::Parse("all forms must have the same degree".into()));
                }
                degree = Some(d);
            }
            sparse.push(p);
        }
        let n = degree.ok_or_else(|| Error::Parse("all forms are zero".into()))? as usize;
        let forms = sparse
            .iter()
            .map(|p| {
                let mut c = vec![k.zero(); n + 1];
                for (e, q) in p {
                    c[e[1] as usize] = k.add(&c[e[1] as usize], &k.from_rational(q)?);
                }
                Ok(BinaryForm::new(c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(forms)
    }

    pub fn degree(&self) -> usize {
        self.forms[0].degree
    }

    pub fn point_at<F: Field<Elem = E>>(&self, k: &F, st: &[E; 2]) -> Vec<E> {
        self.forms.iter().map(|f| f.eval(k, &st[0], &st[1])).collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ParametrizedReport {
    pub injective: bool,
    /// Unordered pairs of distinct parameters with the same image.
    pub double_point_count: usize,
    pub double_points: Vec<String>,
    pub cusp_count: usize,
    pub cusp_params: Vec<String>,
    /// The map is not birational onto its image.
    pub infinitely_many: bool,
}

struct Collisions {
    /// Ordered affine pairs `(1:t) ≠ (1:v)`.
    affine_ordered: usize,
    /// Affine partners of `(0:1)`.
    infinity_partners: usize,
    cusps: usize,
    infinitely_many: bool,
    pairs: Vec<String>,
    cusp_params: Vec<String>,
}

fn fmt_param<F: Field>(k: &F, s: &F::Elem, t: &F::Elem) -> String {
    format!("({}:{})", k.format(s), k.format(t))
}

/// `(a(t)b(v) − b(t)a(v)) / (v − t)`.
fn affine_quotient<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> BiPoly<F::Elem> {
    let n = a.len().max(b.len());
    let coef = |p: &[F::Elem], j: usize| p.get(j).cloned().unwrap_or_else(|| k.zero());
    let rows: Vec<Poly<F::Elem>> =
        (0..n).map(|j| upoly::sub(k, &upoly::scale(k, a, &coef(b, j)), &upoly::scale(k, b, &coef(a, j)))).collect();
    let num = BiPoly::from_rows(k, rows);
    div_by_diagonal(k, &num, None)
}

/// Exact division by `v − t`, optionally modulo `m(t)`.
fn div_by_diagonal<F: Field>(k: &F, g: &BiPoly<F::Elem>, m: Option<&[F::Elem]>) -> BiPoly<F::Elem> {
    let Some(n) = g.deg_v() else { return BiPoly::zero() };
    let red = |p: Poly<F::Elem>| match m {
        Some(m) => upoly::rem(k, &p, m),
        None => p,
    };
    let t = vec![k.zero(), k.one()];
    let mut q = vec![Vec::new(); n];
    if n == 0 {
        return BiPoly::zero();
    }
    q[n - 1] = g.rows[n].clone();
    for j in (1..n).rev() {
        q[j - 1] = red(upoly::add(k, &g.rows[j], &upoly::mul(k, &t, &q[j])));
    }
    BiPoly::from_rows(k, q)
}

/// `G(t, t)` modulo `m`.
fn on_diagonal<F: Field>(k: &F, g: &BiPoly<F::Elem>, m: &[F::Elem]) -> Poly<F::Elem> {
    let mut acc = Vec::new();
    for (j, r) in g.rows.iter().enumerate() {
        acc = upoly::add(k, &acc, &upoly::shift(k, r, j));
    }
    upoly::rem(k, &acc, m)
}

/// Splits a gcd branch into its off-diagonal part and counts cusps.
fn off_diagonal<F: Field>(
    k: &F,
    m: &[F::Elem],
    g: &BiPoly<F::Elem>,
    first: bool,
    out: &mut Vec<(Poly<F::Elem>, BiPoly<F::Elem>)>,
    cusps: &mut Vec<Poly<F::Elem>>,
) {
    if g.deg_v().unwrap_or(0) == 0 {
        return;
    }
    let (zero, unit) = split_by_vanishing(k, m, &on_diagonal(k, g, m));
    if unit.len() > 1 {
        out.push((unit.clone(), g.rem_u(k, &unit)));
    }
    if zero.len() > 1 {
        if first {
            cusps.push(zero.clone());
        }
        let q = div_by_diagonal(k, &g.rem_u(k, &zero), Some(&zero));
        off_diagonal(k, &zero, &q, false, out, cusps);
    }
}

fn collisions<F: Field>(k: &F, forms: &[BinaryForm<F::Elem>]) -> Result<Collisions> {
    let n = forms[0].degree;
    let mut c = Collisions {
        affine_ordered: 0,
        infinity_partners: 0,
        cusps: 0,
        infinitely_many: false,
        pairs: Vec::new(),
        cusp_params: Vec::new(),
    };

    // affine × affine
    let aff: Vec<Poly<F::Elem>> = forms.iter().map(|f| f.affine_t(k)).collect();
    let mut qs = Vec::new();
    for i in 0..aff.len() {
        for j in i + 1..aff.len() {
            let q = affine_quotient(k, &aff[i], &aff[j]);
            if !q.is_zero() {
                qs.push(q);
            }
        }
    }
    if qs.is_empty() {
        return Err(Error::Degenerate("the image is a single point".into()));
    }
    let mut content = Vec::new();
    for q in &qs {
        for r in &q.rows {
            content = upoly::gcd(k, &content, r);
        }
    }
    let mut res: Option<Poly<F::Elem>> = None;
    if content.len() <= 1 {
        'search: for a in 0..qs.len() {
            for b in 0..qs.len() {
                for cst in 0..8i64 {
                    if a == b && cst == 0 {
                        continue;
                    }
                    let mut other = qs[b].clone();
                    if cst > 0 {
                        let extra = &qs[(b + 1) % qs.len()];
                        other = other.add(k, &extra.scale(k, &k.from_i64(cst)));
                    }
                    if qs.len() == 1 {
                        other = qs[0].deriv_v(k);
                    }
                    let r = resultant(k, &qs[a], &other, Var::V)?;
                    if !r.is_empty() {
                        res = Some(r);
                        break 'search;
                    }
                }
            }
        }
    }
    let Some(r) = res else {
        c.infinitely_many = true;
        return Ok(c);
    };
    if qs.len() == 1 && qs[0].deg_v().unwrap_or(0) > 0 {
        // a single minor: its zero set is a whole curve of coincidences
        c.infinitely_many = true;
        return Ok(c);
    }
    let h = upoly::squarefree_part(k, &r);
    if h.len() > 1 {
        let mut parts = Vec::new();
        let mut cusp_moduli = Vec::new();
        for br in common_root_branches(k, &h, &qs) {
            off_diagonal(k, &br.modulus, &br.value, true, &mut parts, &mut cusp_moduli);
        }
        for m in cusp_moduli {
            c.cusps += m.len() - 1;
            if m.len() == 2 {
                let t = k.neg(&k.div(&m[0], &m[1]).unwrap());
                c.cusp_params.push(fmt_param(k, &k.one(), &t));
            } else {
                c.cusp_params.push(format!("(1:t), t root of {}", upoly::format(k, &m, "t")));
            }
        }
        for (m, g) in parts {
            for br in distinct_roots_per_branch(k, &m, &g) {
                let deg_m = br.modulus.len() - 1;
                c.affine_ordered += deg_m * br.value.distinct;
                if br.value.distinct == 0 {
                    continue;
                }
                if deg_m == 1 {
                    let t = k.neg(&k.div(&br.modulus[0], &br.modulus[1]).unwrap());
                    let gv = g.eval_u(k, &t);
                    let mut rational = 0;
                    for v in upoly::roots(k, &gv) {
                        let (a, b) = (fmt_param(k, &k.one(), &t), fmt_param(k, &k.one(), &v));
                        if a < b {
                            c.pairs.push(format!("{a}~{b}"));
                        }
                        rational += 1;
                    }
                    if rational == 0 {
                        c.pairs.push(format!("{} ~ a conjugate parameter", fmt_param(k, &k.one(), &t)));
                    }
                } else {
                    c.pairs.push(format!("(1:t)~(1:v), t root of {}", upoly::format(k, &br.modulus, "t")));
                }
            }
        }
    }

    // (0:1) against everything else
    let top: Vec<F::Elem> = forms.iter().map(|f| f.coefficients[n].clone()).collect();
    let mut gcd_inf: Poly<F::Elem> = Vec::new();
    let mut order_inf = usize::MAX;
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let num = upoly::sub(k, &upoly::scale(k, &aff[j], &top[i]), &upoly::scale(k, &aff[i], &top[j]));
            if num.is_empty() {
                continue;
            }
            order_inf = order_inf.min(n - (num.len() - 1));
            gcd_inf = upoly::gcd(k, &gcd_inf, &num);
        }
    }
    if order_inf == usize::MAX {
        return Err(Error::Degenerate("the image is a single point".into()));
    }
    if order_inf >= 2 {
        c.cusps += 1;
        c.cusp_params.push(fmt_param(k, &k.zero(), &k.one()));
    }
    let partners = upoly::squarefree_part(k, &gcd_inf);
    c.infinity_partners = partners.len() - 1;
    for v in upoly::roots(k, &partners) {
        c.pairs.push(format!("{}~{}", fmt_param(k, &k.zero(), &k.one()), fmt_param(k, &k.one(), &v)));
    }
    Ok(c)
}

fn check_coprime<F: Field>(k: &F, forms: &[BinaryForm<F::Elem>]) -> Result<()> {
    let n = forms[0].degree;
    let g = upoly::gcd_many(k, &forms.iter().map(|f| f.affine_t(k)).collect::<Vec<_>>());
    let at_infinity = forms.iter().all(|f| k.is_zero(&f.coefficients[n]));
    if g.len() > 1 || at_infinity {
        return Err(Error::NotCoprime);
    }
    Ok(())
}

/// Decides whether `(s:t) ↦ (φ_0 : … : φ_r)` is injective over the
/// closure, listing double points and cusp parameters.
pub fn parametrized_injectivity<F: Field>(k: &F, curve: &RationalCurve<F::Elem>) -> Result<ParametrizedReport> {
    let n = curve.degree();
    if n < 2 {
        return Err(Error::InvalidInput("the forms must have degree at least 2".into()));
    }
    k.check_separable(2 * n)?;
    check_coprime(k, &curve.forms)?;
    let c = collisions(k, &curve.forms)?;
    let count = c.affine_ordered / 2 + c.infinity_partners;
    Ok(ParametrizedReport {
        injective: !c.infinitely_many && count == 0,
        double_point_count: count,
        double_points: c.pairs,
        cusp_count: c.cusps,
        cusp_params: c.cusp_params,
        infinitely_many: c.infinitely_many,
    })
}

/// Inner projection of a rational space curve from its point at `st`:
/// `(in_a, in_b)` as for [`inner_membership_quadric`](super::inner_membership_quadric).
pub fn inner_membership_parametrized<F: Field>(
    k: &F,
    curve: &RationalCurve<F::Elem>,
    st: &[F::Elem; 2],
) -> Result<(bool, bool)> {
    let n = curve.degree();
    if curve.forms.len() != 4 {
        return Err(Error::InvalidInput("expected a curve in P^3".into()));
    }
    k.check_separable(2 * n)?;
    check_coprime(k, &curve.forms)?;
    let o = curve.point_at(k, st);
    // move the parameter of o to (0:1)
    let (e, f) = if k.is_zero(&st[1]) { (k.zero(), k.one()) } else { (k.one(), k.zero()) };
    let mobius = [[e, st[0].clone()], [f, st[1].clone()]];
    let moved: Vec<BinaryForm<F::Elem>> = curve.forms.iter().map(|p| substitute(k, p, mobius.clone())).collect();
    let annihilator = matrix::kernel(k, &Matrix::from_rows(4, vec![o]));
    let mut projected = Vec::new();
    for w in &annihilator {
        let mut c = vec![k.zero(); n + 1];
        for (wj, p) in w.iter().zip(&moved) {
            for (ci, pi) in c.iter_mut().zip(&p.coefficients) {
                *ci = k.add(ci, &k.mul(wj, pi));
            }
        }
        debug_assert!(k.is_zero(&c[n]));
        c.pop();
        projected.push(BinaryForm::new(c));
    }
    if projected.iter().all(|p| k.is_zero(&p.coefficients[n - 1])) {
        return Err(Error::SingularPoint);
    }
    if n - 1 < 1 {
        return Err(Error::Degenerate("a line has no inner projection".into()));
    }
    let c = collisions(k, &projected)?;
    let in_a = !c.infinitely_many && c.affine_ordered == 0;
    Ok((in_a, in_a && c.infinity_partners == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    fn k() -> PrimeField {
        PrimeField::new(31).unwrap()
    }

    /// Unordered colliding pairs of rational parameters, by enumeration.
    fn brute_pairs(k: &PrimeField, c: &RationalCurve<u64>) -> usize {
        let mut params: Vec<[u64; 2]> = (0..31).map(|t| [1, t]).collect();
        params.push([0, 1]);
        let imgs: Vec<Vec<u64>> =
            params.iter().map(|p| crate::surface::normalize_projective(k, &c.point_at(k, p)).unwrap()).collect();
        let mut n = 0;
        for i in 0..imgs.len() {
            for j in i + 1..imgs.len() {
                n += usize::from(imgs[i] == imgs[j]);
            }
        }
        n
    }

    #[test]
    fn conic_is_an_embedding() {
        let k = k();
        let c = RationalCurve::parse(&k, &["s^2", "s*t", "t^2"]).unwrap();
        let r = parametrized_injectivity(&k, &c).unwrap();
        assert!(r.injective);
        assert_eq!((r.double_point_count, r.cusp_count), (0, 0));
    }

    #[test]
    fn cuspidal_cubic() {
        let k = k();
        let c = RationalCurve::parse(&k, &["s^3", "s^2*t", "t^3"]).unwrap();
        let r = parametrized_injectivity(&k, &c).unwrap();
        assert!(r.injective);
        assert_eq!(r.cusp_count, 1);
        assert_eq!(brute_pairs(&k, &c), 0);
    }

    #[test]
    fn nodal_cubic() {
        let k = k();
        let c = RationalCurve::parse(&k, &["s^3 - s*t^2", "s^2*t - t^3", "s*t^2"]).unwrap();
        let r = parametrized_injectivity(&k, &c).unwrap();
        assert!(!r.injective);
        assert_eq!(r.double_point_count, 1);
        assert_eq!(brute_pairs(&k, &c), 1);
    }

    #[test]
    fn node_with_conjugate_branches() {
        let k = k();
        // node at t = ±sqrt(-1), not rational over F_31
        let c = RationalCurve::parse(&k, &["s^3 + s*t^2", "s^2*t + t^3", "s*t^2"]).unwrap();
        let r = parametrized_injectivity(&k, &c).unwrap();
        assert!(!r.injective);
        assert_eq!(r.double_point_count, 1);
        assert_eq!(brute_pairs(&k, &c), 0);
    }

    #[test]
    fn double_cover_is_flagged() {
        let k = k();
        let c = RationalCurve::parse(&k, &["s^4", "s^2*t^2", "t^4"]).unwrap();
        assert!(parametrized_injectivity(&k, &c).unwrap().infinitely_many);
    }

    #[test]
    fn common_factor_is_rejected() {
        let k = k();
        let c = RationalCurve::parse(&k, &["s^2", "s*t", "0"]).unwrap();
        assert_eq!(parametrized_injectivity(&k, &c), Err(Error::NotCoprime));
    }

    #[test]
    fn twisted_cubic_inner_projections() {
        let k = PrimeField::new(7).unwrap();
        let c = RationalCurve::parse(&k, &["s^3", "s^2*t", "s*t^2", "t^3"]).unwrap();
        for st in [[1, 0], [1, 3], [0, 1]] {
            assert_eq!(inner_membership_parametrized(&k, &c, &st).unwrap(), (true, true));
        }
    }
}
