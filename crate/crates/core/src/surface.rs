//! The two ambient surfaces: the smooth quadric P¹×P¹ and the cone
//! `X0·X2 = X1²` in P³. Points, rulings, form spaces and affine charts.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{upoly, BinaryForm, Field};
use crate::parse::{self, SparsePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    SmoothQuadric,
    Cone,
}

/// Space of forms: bidegree `(a, b)` on the quadric or degree `d` on the cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormSpace {
    Quadric { a: usize, b: usize },
    Cone { d: usize },
}

impl FormSpace {
    pub fn ambient(&self) -> Ambient {
        match self {
            FormSpace::Quadric { .. } => Ambient::SmoothQuadric,
            FormSpace::Cone { .. } => Ambient::Cone,
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            FormSpace::Quadric { a, b } => (a + 1) * (b + 1),
            FormSpace::Cone { d } => (d + 1) * (d + 1),
        }
    }

    /// Exponent vectors of the basis monomials, in coefficient order.
    ///
    /// Quadric: `x0^(a-i) x1^i y0^(b-j) y1^j` at index `i(b+1)+j`.
    /// Cone: `X0^α X1^ε X2^β X3^γ` with `ε ∈ {0,1}`, ordered by `(γ, ε, β)`.
    pub fn monomials(&self) -> Vec<[u32; 4]> {
        match *self {
            FormSpace::Quadric { a, b } => {
                let mut out = Vec::with_capacity(self.dim());
                for i in 0..=a {
                    for j in 0..=b {
                        out.push([(a - i) as u32, i as u32, (b - j) as u32, j as u32]);
                    }
                }
                out
            }
            FormSpace::Cone { d } => {
                let mut out = Vec::with_capacity(self.dim());
                for g in 0..=d {
                    for e in 0..=1usize.min(d - g) {
                        for b in 0..=(d - g - e) {
                            let a = d - g - e - b;
                            out.push([a as u32, e as u32, b as u32, g as u32]);
                        }
                    }
                }
                out
            }
        }
    }

    /// Index of a monomial; cone monomials are reduced by `X1² = X0·X2`.
    pub fn index_of(&self, exps: [u32; 4]) -> Option<usize> {
        match *self {
            FormSpace::Quadric { a, b } => {
                if exps[0] + exps[1] != a as u32 || exps[2] + exps[3] != b as u32 {
                    return None;
                }
                Some(exps[1] as usize * (b + 1) + exps[3] as usize)
            }
            FormSpace::Cone { d } => {
                if exps.iter().sum::<u32>() != d as u32 {
                    return None;
                }
                let q = exps[1] / 2;
                let red = [exps[0] + q, exps[1] % 2, exps[2] + q, exps[3]];
                self.monomials().iter().position(|m| *m == red)
            }
        }
    }

    pub fn variable_names(&self) -> [&'static str; 4] {
        match self {
            FormSpace::Quadric { .. } => parse::QUADRIC_VARS,
            FormSpace::Cone { .. } => parse::CONE_VARS,
        }
    }
}

/// A form as a coefficient vector over `space.monomials()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form<E> {
    pub space: FormSpace,
    pub coeffs: Vec<E>,
}

impl<E: Clone + Eq + std::fmt::Debug> Form<E> {
    pub fn zero<F: Field<Elem = E>>(k: &F, space: FormSpace) -> Self {
        Self { space, coeffs: vec![k.zero(); space.dim()] }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, k: &F) -> bool {
        self.coeffs.iter().all(|c| k.is_zero(c))
    }

    /// Builds a form from a sparse polynomial in the space's variables.
    pub fn from_sparse<F: Field<Elem = E>>(k: &F, space: FormSpace, p: &SparsePoly) -> Result<Self> {
        let mut f = Self::zero(k, space);
        for (exps, c) in p {
            let e = [exps[0], exps[1], exps[2], exps[3]];
            let idx =
                space.index_of(e).ok_or_else(|| Error::Parse(format!("monomial {e:?} does not lie in {space:?}")))?;
            f.coeffs[idx] = k.add(&f.coeffs[idx], &k.from_rational(c)?);
        }
        Ok(f)
    }

    /// Parses a form, inferring its degree from the first term.
    pub fn parse<F: Field<Elem = E>>(k: &F, ambient: Ambient, text: &str) -> Result<Self> {
        let vars = match ambient {
            Ambient::SmoothQuadric => parse::QUADRIC_VARS,
            Ambient::Cone => parse::CONE_VARS,
        };
        let p = parse::parse_poly(text, &vars)?;
        let space = match ambient {
            Ambient::SmoothQuadric => {
                let a = parse::homogeneous_degree(&p, &[0, 1])
                    .ok_or_else(|| Error::Parse("form is not bihomogeneous in (x0,x1)".into()))?;
                let b = parse::homogeneous_degree(&p, &[2, 3])
                    .ok_or_else(|| Error::Parse("form is not bihomogeneous in (y0,y1)".into()))?;
                FormSpace::Quadric { a: a as usize, b: b as usize }
            }
            Ambient::Cone => {
                let d = parse::homogeneous_degree(&p, &[0, 1, 2, 3])
                    .ok_or_else(|| Error::Parse("form is not homogeneous".into()))?;
                FormSpace::Cone { d: d as usize }
            }
        };
        if p.is_empty() {
            return Err(Error::Parse("the zero polynomial is not a curve".into()));
        }
        Self::from_sparse(k, space, &p)
    }

    pub fn eval<F: Field<Elem = E>>(&self, k: &F, coords: &[E; 4]) -> E {
        let mut acc = k.zero();
        for (c, m) in self.coeffs.iter().zip(self.space.monomials()) {
            if k.is_zero(c) {
                continue;
            }
            let mut t = c.clone();
            for (x, e) in coords.iter().zip(m) {
                t = k.mul(&t, &k.pow(x, e as u128));
            }
            acc = k.add(&acc, &t);
        }
        acc
    }

    pub fn eval_at<F: Field<Elem = E>>(&self, k: &F, p: &SurfacePoint<E>) -> E {
        self.eval(k, &p.coords())
    }

    pub fn format<F: Field<Elem = E>>(&self, k: &F) -> String {
        let names = self.space.variable_names();
        let mut terms = Vec::new();
        for (c, m) in self.coeffs.iter().zip(self.space.monomials()) {
            if k.is_zero(c) {
                continue;
            }
            let mut parts = Vec::new();
            if !k.is_one(c) {
                parts.push(k.format(c));
            }
            for (n, e) in names.iter().zip(m) {
                match e {
                    0 => {}
                    1 => parts.push(n.to_string()),
                    _ => parts.push(format!("{n}^{e}")),
                }
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            terms.push(parts.join("*"));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Total degree used for characteristic guards.
    pub fn total_degree(&self) -> usize {
        match self.space {
            FormSpace::Quadric { a, b } => a + b,
            FormSpace::Cone { d } => 2 * d,
        }
    }

    /// Linear combination of forms over the same space.
    pub fn combine<F: Field<Elem = E>>(k: &F, space: FormSpace, terms: &[(E, &Form<E>)]) -> Self {
        let mut out = Self::zero(k, space);
        for (c, f) in terms {
            for (o, x) in out.coeffs.iter_mut().zip(&f.coeffs) {
                *o = k.add(o, &k.mul(c, x));
            }
        }
        out
    }
}

/// Normalizes a projective tuple so that the first nonzero entry is 1.
pub fn normalize_projective<F: Field>(k: &F, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let first = v.iter().find(|c| !k.is_zero(c))?;
    let inv = k.inv(first).unwrap();
    Some(v.iter().map(|c| k.mul(c, &inv)).collect())
}

/// A point of the quadric or of the cone, normalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfacePoint<E> {
    Quadric { x: [E; 2], y: [E; 2] },
    Cone([E; 4]),
}

impl<E: Clone + PartialEq + Eq + std::fmt::Debug> SurfacePoint<E> {
    pub fn quadric<F: Field<Elem = E>>(k: &F, x: [E; 2], y: [E; 2]) -> Result<Self> {
        let nx = normalize_projective(k, &x).ok_or(Error::Degenerate("zero coordinates".into()))?;
        let ny = normalize_projective(k, &y).ok_or(Error::Degenerate("zero coordinates".into()))?;
        Ok(SurfacePoint::Quadric { x: [nx[0].clone(), nx[1].clone()], y: [ny[0].clone(), ny[1].clone()] })
    }

    pub fn cone<F: Field<Elem = E>>(k: &F, c: [E; 4]) -> Result<Self> {
        let n = normalize_projective(k, &c).ok_or(Error::Degenerate("zero coordinates".into()))?;
        if k.mul(&n[0], &n[2]) != k.mul(&n[1], &n[1]) {
            return Err(Error::PointNotOnSurface);
        }
        Ok(SurfacePoint::Cone([n[0].clone(), n[1].clone(), n[2].clone(), n[3].clone()]))
    }

    /// The cone point over the conic point `(s:t)` with ruling coordinate
    /// `(λ:μ)`: `(λs², λst, λt², μ)`.
    pub fn cone_from_ruling<F: Field<Elem = E>>(k: &F, base: &[E; 2], lm: &[E; 2]) -> Result<Self> {
        let (s, t) = (&base[0], &base[1]);
        let (l, m) = (&lm[0], &lm[1]);
        Self::cone(k, [k.mul(l, &k.mul(s, s)), k.mul(l, &k.mul(s, t)), k.mul(l, &k.mul(t, t)), m.clone()])
    }

    pub fn ambient(&self) -> Ambient {
        match self {
            SurfacePoint::Quadric { .. } => Ambient::SmoothQuadric,
            SurfacePoint::Cone(_) => Ambient::Cone,
        }
    }

    pub fn coords(&self) -> [E; 4] {
        match self {
            SurfacePoint::Quadric { x, y } => [x[0].clone(), x[1].clone(), y[0].clone(), y[1].clone()],
            SurfacePoint::Cone(c) => c.clone(),
        }
    }

    pub fn is_vertex<F: Field<Elem = E>>(&self, k: &F) -> bool {
        match self {
            SurfacePoint::Cone(c) => c[..3].iter().all(|x| k.is_zero(x)),
            _ => false,
        }
    }

    pub fn format<F: Field<Elem = E>>(&self, k: &F) -> String {
        match self {
            SurfacePoint::Quadric { x, y } => {
                format!("(({}:{}),({}:{}))", k.format(&x[0]), k.format(&x[1]), k.format(&y[0]), k.format(&y[1]))
            }
            SurfacePoint::Cone(c) => {
                format!("({}:{}:{}:{})", k.format(&c[0]), k.format(&c[1]), k.format(&c[2]), k.format(&c[3]))
            }
        }
    }

    /// Base point `(s:t)` of the cone ruling through a non-vertex point.
    pub fn cone_base<F: Field<Elem = E>>(&self, k: &F) -> Option<[E; 2]> {
        match self {
            SurfacePoint::Cone(c) if !self.is_vertex(k) => {
                if !k.is_zero(&c[0]) {
                    Some([c[0].clone(), c[1].clone()])
                } else {
                    Some([k.zero(), k.one()])
                }
            }
            _ => None,
        }
    }

    /// Ruling coordinate `(λ:μ)` of a non-vertex cone point relative to
    /// the parametrization over its base point.
    pub fn cone_ruling_coord<F: Field<Elem = E>>(&self, k: &F) -> Option<[E; 2]> {
        match self {
            SurfacePoint::Cone(c) if !self.is_vertex(k) => {
                if !k.is_zero(&c[0]) {
                    // base (X0:X1), λ X0² = X0 gives λ = 1/X0, μ = X3
                    Some([k.one(), k.mul(&c[0], &c[3])])
                } else {
                    Some([c[2].clone(), c[3].clone()])
                }
            }
            _ => None,
        }
    }
}

/// Builds a point from parsed rational coordinates.
pub fn point_from_rationals<F: Field>(
    k: &F,
    ambient: Ambient,
    coords: &[Vec<BigRational>],
) -> Result<SurfacePoint<F::Elem>> {
    let conv = |v: &[BigRational]| -> Result<Vec<F::Elem>> { v.iter().map(|c| k.from_rational(c)).collect() };
    match (ambient, coords) {
        (Ambient::SmoothQuadric, [x, y]) if x.len() == 2 && y.len() == 2 => {
            let (x, y) = (conv(x)?, conv(y)?);
            SurfacePoint::quadric(k, [x[0].clone(), x[1].clone()], [y[0].clone(), y[1].clone()])
        }
        (Ambient::Cone, [c]) if c.len() == 4 => {
            let c = conv(c)?;
            SurfacePoint::cone(k, [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
        }
        _ => Err(Error::AmbientMismatch(format!("point coordinates do not match {ambient:?}"))),
    }
}

pub fn parse_point<F: Field>(k: &F, ambient: Ambient, s: &str) -> Result<SurfacePoint<F::Elem>> {
    point_from_rationals(k, ambient, &parse::parse_surface_coords(s)?)
}

/// A ruling line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ruling<E> {
    /// `{x} × P¹`, class (1,0).
    QuadricX([E; 2]),
    /// `P¹ × {y}`, class (0,1).
    QuadricY([E; 2]),
    /// The line joining the vertex and `(s²:st:t²:0)`.
    Cone([E; 2]),
}

impl<E: Clone + PartialEq + Eq + std::fmt::Debug> Ruling<E> {
    pub fn contains<F: Field<Elem = E>>(&self, k: &F, p: &SurfacePoint<E>) -> bool {
        let same = |a: &[E; 2], b: &[E; 2]| k.is_zero(&k.sub(&k.mul(&a[0], &b[1]), &k.mul(&a[1], &b[0])));
        match (self, p) {
            (Ruling::QuadricX(x), SurfacePoint::Quadric { x: px, .. }) => same(x, px),
            (Ruling::QuadricY(y), SurfacePoint::Quadric { y: py, .. }) => same(y, py),
            (Ruling::Cone(base), SurfacePoint::Cone(_)) => {
                p.is_vertex(k) || p.cone_base(k).is_some_and(|b| same(base, &b))
            }
            _ => false,
        }
    }

    /// The ruling of the given class through a point.
    pub fn through<F: Field<Elem = E>>(k: &F, class: RulingClass, p: &SurfacePoint<E>) -> Result<Self> {
        match (class, p) {
            (RulingClass::X, SurfacePoint::Quadric { x, .. }) => Ok(Ruling::QuadricX(x.clone())),
            (RulingClass::Y, SurfacePoint::Quadric { y, .. }) => Ok(Ruling::QuadricY(y.clone())),
            (RulingClass::ConeLine, SurfacePoint::Cone(_)) => {
                p.cone_base(k).map(Ruling::Cone).ok_or(Error::VertexSupport)
            }
            _ => Err(Error::AmbientMismatch("ruling class does not match the point's surface".into())),
        }
    }

    pub fn format<F: Field<Elem = E>>(&self, k: &F) -> String {
        let f = |a: &[E; 2]| format!("({}:{})", k.format(&a[0]), k.format(&a[1]));
        match self {
            Ruling::QuadricX(x) => format!("{{x={}}}", f(x)),
            Ruling::QuadricY(y) => format!("{{y={}}}", f(y)),
            Ruling::Cone(b) => format!("cone_ruling{}", f(b)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RulingClass {
    /// `{x fixed}`, class (1,0).
    X,
    /// `{y fixed}`, class (0,1).
    Y,
    ConeLine,
}

/// Restriction of a form to a ruling, as a binary form.
///
/// `{x}×P¹` gives a form in `(y0:y1)`; `P¹×{y}` a form in `(x0:x1)`; a cone
/// ruling a form in `(λ:μ)` of the parametrization `(λs², λst, λt², μ)`.
pub fn restrict<F: Field>(k: &F, f: &Form<F::Elem>, line: &Ruling<F::Elem>) -> BinaryForm<F::Elem> {
    let mons = f.space.monomials();
    match (line, f.space) {
        (Ruling::QuadricX(x), FormSpace::Quadric { b, .. }) => {
            let mut c = vec![k.zero(); b + 1];
            for (coef, m) in f.coeffs.iter().zip(&mons) {
                let w = k.mul(&k.pow(&x[0], m[0] as u128), &k.pow(&x[1], m[1] as u128));
                let j = m[3] as usize;
                c[j] = k.add(&c[j], &k.mul(coef, &w));
            }
            BinaryForm::new(c)
        }
        (Ruling::QuadricY(y), FormSpace::Quadric { a, .. }) => {
            let mut c = vec![k.zero(); a + 1];
            for (coef, m) in f.coeffs.iter().zip(&mons) {
                let w = k.mul(&k.pow(&y[0], m[2] as u128), &k.pow(&y[1], m[3] as u128));
                let i = m[1] as usize;
                c[i] = k.add(&c[i], &k.mul(coef, &w));
            }
            BinaryForm::new(c)
        }
        (Ruling::Cone(base), FormSpace::Cone { d }) => {
            let mut c = vec![k.zero(); d + 1];
            for (coef, m) in f.coeffs.iter().zip(&mons) {
                // X0^α X1^ε X2^β X3^γ -> λ^(d-γ) μ^γ s^(2α+ε) t^(ε+2β)
                let w = k.mul(&k.pow(&base[0], (2 * m[0] + m[1]) as u128), &k.pow(&base[1], (m[1] + 2 * m[2]) as u128));
                let g = m[3] as usize;
                c[g] = k.add(&c[g], &k.mul(coef, &w));
            }
            BinaryForm::new(c)
        }
        _ => panic!("ruling and form live on different surfaces"),
    }
}

/// The position of a point on a ruling, as a P¹ point of the binary form
/// returned by [`restrict`].
pub fn position_on_ruling<F: Field>(k: &F, line: &Ruling<F::Elem>, p: &SurfacePoint<F::Elem>) -> [F::Elem; 2] {
    match (line, p) {
        (Ruling::QuadricX(_), SurfacePoint::Quadric { y, .. }) => y.clone(),
        (Ruling::QuadricY(_), SurfacePoint::Quadric { x, .. }) => x.clone(),
        (Ruling::Cone(base), SurfacePoint::Cone(c)) => {
            if p.is_vertex(k) {
                return [k.zero(), k.one()];
            }
            // λ s² = X0 or λ t² = X2 for the given base representative
            let lambda = if !k.is_zero(&base[0]) {
                k.div(&c[0], &k.mul(&base[0], &base[0])).unwrap()
            } else {
                k.div(&c[2], &k.mul(&base[1], &base[1])).unwrap()
            };
            [lambda, c[3].clone()]
        }
        _ => panic!("ruling and point live on different surfaces"),
    }
}

/// The point of a ruling at position `st`, inverse to [`position_on_ruling`].
pub fn ruling_point<F: Field>(k: &F, line: &Ruling<F::Elem>, st: &[F::Elem; 2]) -> Result<SurfacePoint<F::Elem>> {
    match line {
        Ruling::QuadricX(x) => SurfacePoint::quadric(k, x.clone(), st.clone()),
        Ruling::QuadricY(y) => SurfacePoint::quadric(k, st.clone(), y.clone()),
        Ruling::Cone(base) => SurfacePoint::cone_from_ruling(k, base, st),
    }
}

/// Coordinates in P³: the Segre image `(x0y0, x0y1, x1y0, x1y1)` on the
/// quadric, the point itself on the cone.
pub fn ambient_coords<F: Field>(k: &F, p: &SurfacePoint<F::Elem>) -> [F::Elem; 4] {
    match p {
        SurfacePoint::Quadric { x, y } => {
            [k.mul(&x[0], &y[0]), k.mul(&x[0], &y[1]), k.mul(&x[1], &y[0]), k.mul(&x[1], &y[1])]
        }
        SurfacePoint::Cone(c) => c.clone(),
    }
}

/// Whether the curve `f = 0` is singular at a non-vertex point on it.
pub fn is_singular_at<F: Field>(k: &F, f: &Form<F::Elem>, p: &SurfacePoint<F::Elem>) -> bool {
    for chart in AffineChart::covering(f.space.ambient()) {
        if let Some((a, b)) = chart.coords_of(k, p) {
            let g = chart.dehomogenize(k, f);
            return [g.clone(), g.deriv_u(k), g.deriv_v(k)].iter().all(|h| k.is_zero(&h.eval(k, &a, &b)));
        }
    }
    true
}

/// An affine chart around a point: the local expansion of each monomial
/// separates as `P(u)·Q(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalChart<E> {
    pub point: SurfacePoint<E>,
    /// Quadric: which x and y coordinate is set to 1. Cone: `[0, _]` for the
    /// chart `X0 = 1`, `[2, _]` for `X2 = 1`.
    pub index: [usize; 2],
}

impl<E: Clone + PartialEq + Eq + std::fmt::Debug> LocalChart<E> {
    /// Canonical chart: the first nonzero coordinate of each factor.
    pub fn canonical<F: Field<Elem = E>>(k: &F, p: &SurfacePoint<E>) -> Result<Self> {
        match p {
            SurfacePoint::Quadric { x, y } => {
                let cx = if k.is_zero(&x[0]) { 1 } else { 0 };
                let cy = if k.is_zero(&y[0]) { 1 } else { 0 };
                Ok(Self { point: p.clone(), index: [cx, cy] })
            }
            SurfacePoint::Cone(c) => {
                if p.is_vertex(k) {
                    return Err(Error::VertexSupport);
                }
                let ci = if k.is_zero(&c[0]) { 2 } else { 0 };
                Ok(Self { point: p.clone(), index: [ci, 0] })
            }
        }
    }

    /// A quadric chart with the given coordinates set to 1.
    pub fn quadric_chart<F: Field<Elem = E>>(k: &F, p: &SurfacePoint<E>, cx: usize, cy: usize) -> Result<Self> {
        match p {
            SurfacePoint::Quadric { x, y } if !k.is_zero(&x[cx]) && !k.is_zero(&y[cy]) => {
                Ok(Self { point: p.clone(), index: [cx, cy] })
            }
            _ => Err(Error::Degenerate("point does not lie in the requested chart".into())),
        }
    }

    /// Local factors `(P, Q)` of a basis monomial, centered at the point.
    pub fn factors<F: Field<Elem = E>>(&self, k: &F, m: &[u32; 4]) -> (Vec<E>, Vec<E>) {
        match &self.point {
            SurfacePoint::Quadric { x, y } => {
                let side = |pt: &[E; 2], c: usize, e0: u32, e1: u32| {
                    // coordinate c is 1, the other one is pt[o]/pt[c] + w
                    let o = 1 - c;
                    let moving = vec![k.div(&pt[o], &pt[c]).unwrap(), k.one()];
                    let e_other = if c == 0 { e1 } else { e0 };
                    upoly::pow(k, &moving, e_other as usize)
                };
                (side(x, self.index[0], m[0], m[1]), side(y, self.index[1], m[2], m[3]))
            }
            SurfacePoint::Cone(c) => {
                if self.index[0] == 0 {
                    // X0 = 1: X1 = c1/c0 + u, X2 = X1², X3 = c3/c0 + v
                    let x1 = vec![k.div(&c[1], &c[0]).unwrap(), k.one()];
                    let x3 = vec![k.div(&c[3], &c[0]).unwrap(), k.one()];
                    (upoly::pow(k, &x1, (m[1] + 2 * m[2]) as usize), upoly::pow(k, &x3, m[3] as usize))
                } else {
                    // X2 = 1: X1 = c1/c2 + u, X0 = X1², X3 = c3/c2 + v
                    let x1 = vec![k.div(&c[1], &c[2]).unwrap(), k.one()];
                    let x3 = vec![k.div(&c[3], &c[2]).unwrap(), k.one()];
                    (upoly::pow(k, &x1, (2 * m[0] + m[1]) as usize), upoly::pow(k, &x3, m[3] as usize))
                }
            }
        }
    }
}

/// An affine chart of the surface with coordinates `(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AffineChart {
    /// `x_cx = 1`, `y_cy = 1`; `u`, `v` are the other two coordinates.
    Quadric { cx: usize, cy: usize },
    /// `X0 = 1`: `(u, v) = (X1, X3)`, `X2 = u²`.
    ConeX0,
    /// `X2 = 1`: `(u, v) = (X1, X3)`, `X0 = u²`.
    ConeX2,
}

impl AffineChart {
    /// Charts covering the surface (minus the vertex on the cone).
    pub fn covering(ambient: Ambient) -> Vec<AffineChart> {
        match ambient {
            Ambient::SmoothQuadric => {
                (0..2).flat_map(|cx| (0..2).map(move |cy| AffineChart::Quadric { cx, cy })).collect()
            }
            Ambient::Cone => vec![AffineChart::ConeX0, AffineChart::ConeX2],
        }
    }

    pub fn name(&self) -> String {
        match self {
            AffineChart::Quadric { cx, cy } => format!("x{cx}=1,y{cy}=1"),
            AffineChart::ConeX0 => "X0=1".into(),
            AffineChart::ConeX2 => "X2=1".into(),
        }
    }

    /// `(u, v)` exponents of a basis monomial.
    pub fn exponents(&self, m: &[u32; 4]) -> (usize, usize) {
        match *self {
            AffineChart::Quadric { cx, cy } => (m[1 - cx] as usize, m[3 - cy] as usize),
            AffineChart::ConeX0 => ((m[1] + 2 * m[2]) as usize, m[3] as usize),
            AffineChart::ConeX2 => ((2 * m[0] + m[1]) as usize, m[3] as usize),
        }
    }

    pub fn dehomogenize<F: Field>(&self, k: &F, f: &Form<F::Elem>) -> crate::exactalg::BiPoly<F::Elem> {
        let mons = f.space.monomials();
        let mut table: Vec<Vec<F::Elem>> = Vec::new();
        for (c, m) in f.coeffs.iter().zip(&mons) {
            if k.is_zero(c) {
                continue;
            }
            let (i, j) = self.exponents(m);
            if table.len() <= i {
                table.resize(i + 1, Vec::new());
            }
            if table[i].len() <= j {
                table[i].resize(j + 1, k.zero());
            }
            table[i][j] = k.add(&table[i][j], c);
        }
        crate::exactalg::BiPoly::from_table(k, &table)
    }

    /// Chart coordinates of a point, if it lies in the chart.
    pub fn coords_of<F: Field>(&self, k: &F, p: &SurfacePoint<F::Elem>) -> Option<(F::Elem, F::Elem)> {
        match (*self, p) {
            (AffineChart::Quadric { cx, cy }, SurfacePoint::Quadric { x, y }) => {
                if k.is_zero(&x[cx]) || k.is_zero(&y[cy]) {
                    return None;
                }
                Some((k.div(&x[1 - cx], &x[cx]).unwrap(), k.div(&y[1 - cy], &y[cy]).unwrap()))
            }
            (AffineChart::ConeX0, SurfacePoint::Cone(c)) if !k.is_zero(&c[0]) => {
                Some((k.div(&c[1], &c[0]).unwrap(), k.div(&c[3], &c[0]).unwrap()))
            }
            (AffineChart::ConeX2, SurfacePoint::Cone(c)) if !k.is_zero(&c[2]) => {
                Some((k.div(&c[1], &c[2]).unwrap(), k.div(&c[3], &c[2]).unwrap()))
            }
            _ => None,
        }
    }

    pub fn point_at<F: Field>(&self, k: &F, u: &F::Elem, v: &F::Elem) -> SurfacePoint<F::Elem> {
        let one = k.one();
        match *self {
            AffineChart::Quadric { cx, cy } => {
                let mut x = [one.clone(), one.clone()];
                let mut y = [one.clone(), one];
                x[1 - cx] = u.clone();
                y[1 - cy] = v.clone();
                SurfacePoint::quadric(k, x, y).expect("chart points are nonzero")
            }
            AffineChart::ConeX0 => SurfacePoint::cone(k, [one, u.clone(), k.mul(u, u), v.clone()]).unwrap(),
            AffineChart::ConeX2 => SurfacePoint::cone(k, [k.mul(u, u), u.clone(), one, v.clone()]).unwrap(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    #[test]
    fn cone_basis_has_square_size() {
        for d in 1..6 {
            let s = FormSpace::Cone { d };
            let m = s.monomials();
            assert_eq!(m.len(), (d + 1) * (d + 1));
            for (i, e) in m.iter().enumerate() {
                assert_eq!(s.index_of(*e), Some(i));
            }
        }
        assert_eq!(FormSpace::Cone { d: 2 }.dim(), 9);
        assert_eq!(FormSpace::Quadric { a: 2, b: 3 }.dim(), 12);
    }

    #[test]
    fn parse_and_evaluate() {
        let k = PrimeField::new(101).unwrap();
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1^2 - x1*y0^2").unwrap();
        assert_eq!(f.space, FormSpace::Quadric { a: 1, b: 2 });
        let p = SurfacePoint::quadric(&k, [1, 1], [1, 1]).unwrap();
        assert_eq!(f.eval_at(&k, &p), 0);
        // X1^2 reduces to X0*X2
        let g = Form::parse(&k, Ambient::Cone, "X1^2 - X0*X2").unwrap();
        assert!(g.is_zero(&k));
    }

    #[test]
    fn cone_points_and_rulings() {
        let k = PrimeField::new(101).unwrap();
        assert_eq!(SurfacePoint::cone(&k, [1, 1, 2, 0]), Err(Error::PointNotOnSurface));
        let p = SurfacePoint::cone(&k, [2, 4, 8, 6]).unwrap();
        assert_eq!(p, SurfacePoint::Cone([1, 2, 4, 3]));
        let base = p.cone_base(&k).unwrap();
        let lm = p.cone_ruling_coord(&k).unwrap();
        assert_eq!(SurfacePoint::cone_from_ruling(&k, &base, &lm).unwrap(), p);
        let line = Ruling::through(&k, RulingClass::ConeLine, &p).unwrap();
        assert!(line.contains(&k, &p));
        assert_eq!(position_on_ruling(&k, &line, &p), lm);
    }

    #[test]
    fn restriction_matches_evaluation() {
        let k = PrimeField::new(101).unwrap();
        let g = Form::parse(&k, Ambient::Cone, "X0^2 + 3*X1*X3 - X3^2 + X0*X2").unwrap();
        let p = SurfacePoint::cone(&k, [1, 5, 25, 7]).unwrap();
        let line = Ruling::through(&k, RulingClass::ConeLine, &p).unwrap();
        let r = restrict(&k, &g, &line);
        let pos = position_on_ruling(&k, &line, &p);
        assert_eq!(r.eval(&k, &pos[0], &pos[1]), g.eval_at(&k, &p));
    }

    #[test]
    fn chart_roundtrip() {
        let k = PrimeField::new(101).unwrap();
        let f = Form::parse(&k, Ambient::Cone, "X0^2 + 3*X1*X3 - X3^2 + 5*X2^2").unwrap();
        for ch in AffineChart::covering(Ambient::Cone) {
            let p = ch.point_at(&k, &4, &9);
            assert_eq!(ch.coords_of(&k, &p), Some((4, 9)));
            let raw = match ch {
                AffineChart::ConeX0 => [1, 4, 16, 9],
                _ => [16, 4, 1, 9],
            };
            assert_eq!(ch.dehomogenize(&k, &f).eval(&k, &4, &9), f.eval(&k, &raw));
        }
        let g = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1^2 - 2*x1*y0^2 + x1*y0*y1").unwrap();
        for ch in AffineChart::covering(Ambient::SmoothQuadric) {
            let p = ch.point_at(&k, &3, &7);
            assert_eq!(ch.coords_of(&k, &p), Some((3, 7)));
            let AffineChart::Quadric { cx, cy } = ch else { unreachable!() };
            let mut raw = [1, 1, 1, 1];
            raw[1 - cx] = 3;
            raw[3 - cy] = 7;
            assert_eq!(ch.dehomogenize(&k, &g).eval(&k, &3, &7), g.eval(&k, &raw));
        }
    }

    #[test]
    fn local_factors_reproduce_values() {
        let k = PrimeField::new(101).unwrap();
        let space = FormSpace::Quadric { a: 2, b: 1 };
        let p = SurfacePoint::quadric(&k, [0, 1], [1, 3]).unwrap();
        let ch = LocalChart::canonical(&k, &p).unwrap();
        for m in space.monomials() {
            let (pu, qv) = ch.factors(&k, &m);
            // value at (u, v) = (2, 5): x = (2, 1), y = (1, 8)
            let direct = k.mul(
                &k.mul(&k.pow(&2, m[0] as u128), &k.pow(&1, m[1] as u128)),
                &k.mul(&k.pow(&1, m[2] as u128), &k.pow(&8, m[3] as u128)),
            );
            assert_eq!(k.mul(&upoly::eval(&k, &pu, &2), &upoly::eval(&k, &qv, &5)), direct);
        }
    }
}
