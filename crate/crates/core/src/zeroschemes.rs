//! Zero-dimensional schemes as lists of linear functionals on forms.
//!
//! Every scheme is a union of generators with disjoint supports. A
//! generator is read off in local coordinates `(u, v)` around its support
//! point: its conditions are vanishing statements about Taylor coefficients
//! `c_{kl}` (the coefficient of `u^k v^l`), each linear in the form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};
use crate::surface::{Ambient, Form, FormSpace, LocalChart, Ruling, RulingClass, SurfacePoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator<E> {
    /// `m·o` on a ruling through `o`.
    RulingDivisor { line: Ruling<E>, point: SurfacePoint<E>, multiplicity: usize },
    /// First-order neighbourhood of a point.
    FatPoint { point: SurfacePoint<E> },
    /// The A₂ₕ singularity scheme `(v², v u^(h+1), u^(2h+1))` with `u` along
    /// the tangent direction.
    Cusp { point: SurfacePoint<E>, tangent: [E; 2], h: usize },
}

impl<E: Clone + Eq + std::fmt::Debug> Generator<E> {
    pub fn degree(&self) -> usize {
        match self {
            Generator::RulingDivisor { multiplicity, .. } => *multiplicity,
            Generator::FatPoint { .. } => 3,
            Generator::Cusp { h, .. } => 3 * h + 2,
        }
    }

    pub fn point(&self) -> &SurfacePoint<E> {
        match self {
            Generator::RulingDivisor { point, .. } | Generator::FatPoint { point } | Generator::Cusp { point, .. } => {
                point
            }
        }
    }

    pub fn describe<F: Field<Elem = E>>(&self, k: &F) -> String {
        match self {
            Generator::RulingDivisor { line, point, multiplicity } => {
                format!("ruling:{}@{}^{}", line.format(k), point.format(k), multiplicity)
            }
            Generator::FatPoint { point } => format!("fat@{}", point.format(k)),
            Generator::Cusp { point, tangent, h } => format!(
                "cusp:h={}@{};tangent=({},{})",
                h,
                point.format(k),
                k.format(&tangent[0]),
                k.format(&tangent[1])
            ),
        }
    }

    /// Taylor-coefficient indices imposed by the generator.
    fn indices(&self) -> Vec<(usize, usize)> {
        match self {
            Generator::RulingDivisor { line, multiplicity, .. } => match line {
                // x fixed: the ruling is u = 0 in the canonical chart
                Ruling::QuadricX(_) | Ruling::Cone(_) => (0..*multiplicity).map(|l| (0, l)).collect(),
                Ruling::QuadricY(_) => (0..*multiplicity).map(|k| (k, 0)).collect(),
            },
            Generator::FatPoint { .. } => vec![(0, 0), (1, 0), (0, 1)],
            Generator::Cusp { h, .. } => {
                let mut v: Vec<(usize, usize)> = (0..=2 * h).map(|i| (i, 0)).collect();
                v.extend((0..=*h).map(|i| (i, 1)));
                v
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroScheme<E> {
    pub ambient: Ambient,
    pub generators: Vec<Generator<E>>,
}

impl<E: Clone + Eq + std::fmt::Debug> ZeroScheme<E> {
    pub fn empty(ambient: Ambient) -> Self {
        Self { ambient, generators: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree()).sum()
    }

    /// Union with disjoint supports.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch("schemes live on different surfaces".into()));
        }
        let mut out = self.clone();
        for g in &other.generators {
            if out.generators.iter().any(|h| h.point() == g.point()) {
                return Err(Error::OverlappingSupport);
            }
            out.generators.push(g.clone());
        }
        Ok(out)
    }

    pub fn union_all(ambient: Ambient, parts: &[Self]) -> Result<Self> {
        parts.iter().try_fold(Self::empty(ambient), |acc, p| acc.union(p))
    }

    pub fn describe<F: Field<Elem = E>>(&self, k: &F) -> Vec<String> {
        self.generators.iter().map(|g| g.describe(k)).collect()
    }
}

fn single<E>(ambient: Ambient, g: Generator<E>) -> ZeroScheme<E> {
    ZeroScheme { ambient, generators: vec![g] }
}

/// `m·o` on `line`.
pub fn ruling_divisor<F: Field>(
    k: &F,
    line: &Ruling<F::Elem>,
    o: &SurfacePoint<F::Elem>,
    m: usize,
) -> Result<ZeroScheme<F::Elem>> {
    if o.is_vertex(k) {
        return Err(Error::VertexSupport);
    }
    if !line.contains(k, o) {
        return Err(Error::PointNotOnLine);
    }
    if m == 0 {
        return Err(Error::InvalidInput("multiplicity must be positive".into()));
    }
    Ok(single(o.ambient(), Generator::RulingDivisor { line: line.clone(), point: o.clone(), multiplicity: m }))
}

/// `m·o` on the ruling of the given class through `o`.
pub fn ruling_divisor_through<F: Field>(
    k: &F,
    class: RulingClass,
    o: &SurfacePoint<F::Elem>,
    m: usize,
) -> Result<ZeroScheme<F::Elem>> {
    let line = Ruling::through(k, class, o)?;
    ruling_divisor(k, &line, o, m)
}

pub fn fat_point<F: Field>(k: &F, p: &SurfacePoint<F::Elem>) -> Result<ZeroScheme<F::Elem>> {
    if p.is_vertex(k) {
        return Err(Error::VertexSupport);
    }
    Ok(single(p.ambient(), Generator::FatPoint { point: p.clone() }))
}

pub fn cusp_scheme<F: Field>(
    k: &F,
    p: &SurfacePoint<F::Elem>,
    tangent: [F::Elem; 2],
    h: usize,
) -> Result<ZeroScheme<F::Elem>> {
    if p.is_vertex(k) {
        return Err(Error::VertexSupport);
    }
    if tangent.iter().all(|t| k.is_zero(t)) {
        return Err(Error::ZeroTangent);
    }
    if h == 0 {
        return Err(Error::InvalidInput("cusp order h must be positive".into()));
    }
    Ok(single(p.ambient(), Generator::Cusp { point: p.clone(), tangent, h }))
}

fn binomial<F: Field>(k: &F, n: usize, r: usize) -> F::Elem {
    let mut c = k.one();
    for i in 0..r {
        c = k.mul(&c, &k.from_i64((n - i) as i64));
        c = k.div(&c, &k.from_i64((i + 1) as i64)).expect("binomial denominators are units for small r");
    }
    c
}

/// Coefficients `c_{kl}`, `k ≤ kmax`, `l ≤ lmax`, of `P(u)·Q(v)` in the
/// sheared coordinates `(U, V)`: `(u, v) = (τ1 U, τ2 U + V)` if `τ1 ≠ 0`,
/// otherwise `(u, v) = (V, τ2 U)`.
pub fn sheared_table<F: Field>(
    k: &F,
    p: &[F::Elem],
    q: &[F::Elem],
    tau: &[F::Elem; 2],
    kmax: usize,
    lmax: usize,
) -> Vec<Vec<F::Elem>> {
    let mut out = vec![vec![k.zero(); lmax + 1]; kmax + 1];
    if k.is_zero(&tau[0]) {
        for (kk, qc) in q.iter().enumerate().take(kmax + 1) {
            let a = k.mul(qc, &k.pow(&tau[1], kk as u128));
            for (l, pc) in p.iter().enumerate().take(lmax + 1) {
                out[kk][l] = k.mul(&a, pc);
            }
        }
        return out;
    }
    // Q(τ2 U + V) as a table qt[i][s]
    let mut qt = vec![vec![k.zero(); lmax + 1]; kmax + 1];
    for (l, qc) in q.iter().enumerate() {
        if k.is_zero(qc) {
            continue;
        }
        for s in 0..=l.min(lmax) {
            let i = l - s;
            if i > kmax {
                continue;
            }
            let c = k.mul(qc, &k.mul(&binomial(k, l, s), &k.pow(&tau[1], i as u128)));
            qt[i][s] = k.add(&qt[i][s], &c);
        }
    }
    for (i, pc) in p.iter().enumerate().take(kmax + 1) {
        if k.is_zero(pc) {
            continue;
        }
        let a = k.mul(pc, &k.pow(&tau[0], i as u128));
        for j in 0..=(kmax - i) {
            for s in 0..=lmax {
                out[i + j][s] = k.add(&out[i + j][s], &k.mul(&a, &qt[j][s]));
            }
        }
    }
    out
}

/// Rows `c_{kl}` for the given indices in an explicit chart.
pub fn chart_rows<F: Field>(
    k: &F,
    chart: &LocalChart<F::Elem>,
    space: FormSpace,
    indices: &[(usize, usize)],
) -> Vec<Vec<F::Elem>> {
    let mons = space.monomials();
    let factors: Vec<_> = mons.iter().map(|m| chart.factors(k, m)).collect();
    indices
        .iter()
        .map(|&(i, j)| {
            factors
                .iter()
                .map(|(p, q)| match (p.get(i), q.get(j)) {
                    (Some(a), Some(b)) => k.mul(a, b),
                    _ => k.zero(),
                })
                .collect()
        })
        .collect()
}

/// Rows `c_{kl}` in sheared coordinates at a point.
fn sheared_rows<F: Field>(
    k: &F,
    chart: &LocalChart<F::Elem>,
    tau: &[F::Elem; 2],
    space: FormSpace,
    indices: &[(usize, usize)],
) -> Vec<Vec<F::Elem>> {
    let kmax = indices.iter().map(|x| x.0).max().unwrap_or(0);
    let lmax = indices.iter().map(|x| x.1).max().unwrap_or(0);
    let tables: Vec<_> = space
        .monomials()
        .iter()
        .map(|m| {
            let (p, q) = chart.factors(k, m);
            sheared_table(k, &p, &q, tau, kmax, lmax)
        })
        .collect();
    indices.iter().map(|&(i, j)| tables.iter().map(|t| t[i][j].clone()).collect()).collect()
}

fn check_space(ambient: Ambient, space: FormSpace) -> Result<()> {
    if space.ambient() != ambient {
        return Err(Error::AmbientMismatch(format!("scheme on {ambient:?}, forms on {:?}", space.ambient())));
    }
    if let FormSpace::Cone { d: 0 } = space {
        return Err(Error::DegreeNegative);
    }
    Ok(())
}

/// Rows imposed by one generator.
pub fn generator_rows<F: Field>(k: &F, g: &Generator<F::Elem>, space: FormSpace) -> Result<Vec<Vec<F::Elem>>> {
    let chart = LocalChart::canonical(k, g.point())?;
    Ok(match g {
        Generator::Cusp { tangent, .. } => sheared_rows(k, &chart, tangent, space, &g.indices()),
        _ => chart_rows(k, &chart, space, &g.indices()),
    })
}

/// The condition matrix: one row per functional, one column per basis
/// monomial of `space`.
pub fn condition_matrix<F: Field>(k: &F, z: &ZeroScheme<F::Elem>, space: FormSpace) -> Result<Matrix<F::Elem>> {
    check_space(z.ambient, space)?;
    let mut m = Matrix::zeros(k, 0, space.dim());
    for g in &z.generators {
        for row in generator_rows(k, g, space)? {
            m.push_row(row);
        }
    }
    Ok(m)
}

/// Values of all functionals of `z` on `f`.
pub fn functional_values<F: Field>(k: &F, z: &ZeroScheme<F::Elem>, f: &Form<F::Elem>) -> Result<Vec<F::Elem>> {
    let m = condition_matrix(k, z, f.space)?;
    Ok(crate::exactalg::matrix::mul_vec(k, &m, &f.coeffs))
}

pub fn satisfies<F: Field>(k: &F, z: &ZeroScheme<F::Elem>, f: &Form<F::Elem>) -> Result<bool> {
    Ok(functional_values(k, z, f)?.iter().all(|x| k.is_zero(x)))
}

/// Taylor coefficient test for an A₂ₕ point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspNormalForm {
    pub h: usize,
    /// All `3h+2` scheme functionals vanish.
    pub in_scheme: bool,
    /// `c_{2h+1,0} ≠ 0`.
    pub next_coefficient_nonzero: bool,
    /// `c_{0,2} ≠ 0`.
    pub transverse_square_nonzero: bool,
    pub passed: bool,
}

pub fn cusp_normal_form<F: Field>(
    k: &F,
    f: &Form<F::Elem>,
    point: &SurfacePoint<F::Elem>,
    tangent: &[F::Elem; 2],
    h: usize,
) -> Result<CuspNormalForm> {
    let chart = LocalChart::canonical(k, point)?;
    let mut idx: Vec<(usize, usize)> = (0..=2 * h + 1).map(|i| (i, 0)).collect();
    idx.extend((0..=h).map(|i| (i, 1)));
    idx.push((0, 2));
    let rows = sheared_rows(k, &chart, tangent, f.space, &idx);
    let vals = crate::exactalg::matrix::mul_vec(k, &Matrix::from_rows(f.space.dim(), rows), &f.coeffs);
    let n0 = 2 * h + 2;
    let in_scheme = vals[..2 * h + 1].iter().chain(&vals[n0..n0 + h + 1]).all(|x| k.is_zero(x));
    let next = !k.is_zero(&vals[2 * h + 1]);
    let sq = !k.is_zero(vals.last().unwrap());
    Ok(CuspNormalForm {
        h,
        in_scheme,
        next_coefficient_nonzero: next,
        transverse_square_nonzero: sq,
        passed: in_scheme && next && sq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vanishing_order;
    use crate::exactalg::{matrix, PrimeField, Rationals};
    use crate::surface::restrict;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn ruling_divisor_matches_vanishing_order() {
        let k = k();
        let o = SurfacePoint::quadric(&k, [1, 0], [0, 1]).unwrap();
        let z = ruling_divisor_through(&k, RulingClass::X, &o, 3).unwrap();
        assert_eq!(z.degree(), 3);
        let space = FormSpace::Quadric { a: 1, b: 3 };
        let m = condition_matrix(&k, &z, space).unwrap();
        assert_eq!(m.rows, 3);
        let line = Ruling::QuadricX([1, 0]);
        for f in matrix::kernel(&k, &m) {
            let form = Form { space, coeffs: f };
            let r = restrict(&k, &form, &line);
            if !r.is_zero(&k) {
                assert!(vanishing_order(&k, &r, (&0, &1)).unwrap() >= 3);
            }
        }
        let wrong = Ruling::QuadricX([0, 1]);
        assert_eq!(ruling_divisor(&k, &wrong, &o, 1), Err(Error::PointNotOnLine));
    }

    #[test]
    fn fat_point_on_bidegree_one_one() {
        let k = Rationals;
        let p = SurfacePoint::quadric(&k, [k.one(), k.from_i64(2)], [k.one(), k.from_i64(-3)]).unwrap();
        let z = fat_point(&k, &p).unwrap();
        let m = condition_matrix(&k, &z, FormSpace::Quadric { a: 1, b: 1 }).unwrap();
        assert_eq!(matrix::kernel(&k, &m).len(), 1);
    }

    #[test]
    fn fat_point_chart_independence() {
        let k = k();
        let p = SurfacePoint::quadric(&k, [1, 7], [1, 9]).unwrap();
        let space = FormSpace::Quadric { a: 2, b: 2 };
        let idx = [(0, 0), (1, 0), (0, 1)];
        let a = chart_rows(&k, &LocalChart::quadric_chart(&k, &p, 0, 0).unwrap(), space, &idx);
        let b = chart_rows(&k, &LocalChart::quadric_chart(&k, &p, 1, 1).unwrap(), space, &idx);
        let ka = matrix::kernel(&k, &Matrix::from_rows(space.dim(), a.clone()));
        let mut both = a;
        both.extend(b);
        assert_eq!(matrix::rank(&k, &Matrix::from_rows(space.dim(), both)), 3);
        assert_eq!(ka.len(), space.dim() - 3);
    }

    #[test]
    fn cusp_scheme_degrees_and_model() {
        let k = k();
        let p = SurfacePoint::quadric(&k, [1, 0], [1, 0]).unwrap();
        let z1 = cusp_scheme(&k, &p, [1, 0], 1).unwrap();
        assert_eq!(z1.degree(), 5);
        let z2 = cusp_scheme(&k, &p, [1, 0], 2).unwrap();
        assert_eq!(z2.degree(), 8);
        // v^2 x0^3 y0^0 ... in the chart x0 = y0 = 1: u = x1, v = y1; model v^2 - u^5 for h = 2
        let f = Form::parse(&k, crate::surface::Ambient::SmoothQuadric, "x0^5*y1^2*y0^0 - x1^5*y0^2").unwrap();
        assert!(satisfies(&k, &z2, &f).unwrap());
        let nf = cusp_normal_form(&k, &f, &p, &[1, 0], 2).unwrap();
        assert!(nf.passed);
        assert_eq!(cusp_scheme(&k, &p, [0, 0], 1), Err(Error::ZeroTangent));
    }

    #[test]
    fn cusp_scheme_invariant_under_tangent_scaling() {
        let k = k();
        let p = SurfacePoint::quadric(&k, [1, 3], [1, 5]).unwrap();
        let space = FormSpace::Quadric { a: 3, b: 3 };
        let a = condition_matrix(&k, &cusp_scheme(&k, &p, [2, 7], 1).unwrap(), space).unwrap();
        let b = condition_matrix(&k, &cusp_scheme(&k, &p, [6, 21], 1).unwrap(), space).unwrap();
        let mut both = a.clone();
        for r in b.data {
            both.push_row(r);
        }
        assert_eq!(matrix::rank(&k, &a), matrix::rank(&k, &both));
        // tangent along the v axis
        let c = condition_matrix(&k, &cusp_scheme(&k, &p, [0, 4], 1).unwrap(), space).unwrap();
        assert_eq!(c.rows, 5);
    }

    #[test]
    fn cone_ruling_divisor_and_vertex() {
        let k = k();
        let v = SurfacePoint::cone(&k, [0, 0, 0, 1]).unwrap();
        assert_eq!(fat_point(&k, &v), Err(Error::VertexSupport));
        let p = SurfacePoint::cone(&k, [1, 2, 4, 0]).unwrap();
        let z = ruling_divisor_through(&k, RulingClass::ConeLine, &p, 2).unwrap();
        let m = condition_matrix(&k, &z, FormSpace::Cone { d: 2 }).unwrap();
        assert_eq!((m.rows, m.cols), (2, 9));
        assert_eq!(condition_matrix(&k, &z, FormSpace::Cone { d: 0 }), Err(Error::DegreeNegative));
    }

    #[test]
    fn empty_scheme_and_overlaps() {
        let k = k();
        let z = ZeroScheme::<u64>::empty(Ambient::SmoothQuadric);
        let m = condition_matrix(&k, &z, FormSpace::Quadric { a: 1, b: 1 }).unwrap();
        assert_eq!((m.rows, m.cols), (0, 4));
        let p = SurfacePoint::quadric(&k, [1, 0], [1, 0]).unwrap();
        let a = fat_point(&k, &p).unwrap();
        assert_eq!(a.union(&a), Err(Error::OverlappingSupport));
    }
}
