//! Seeded constructions of smooth and cuspidal curves with prescribed
//! contact along rulings.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::genus::{fiber_count_genus, GenusEstimate};
use super::smooth::{smoothness_certificate, SmoothnessReport, Verdict};
use super::{random_member_with, system};
use crate::error::{Error, Result};
use crate::exactalg::{distinct_root_count, vanishing_order, Field};
use crate::surface::{position_on_ruling, restrict, Form, FormSpace, Ruling, RulingClass, SurfacePoint};
use crate::zeroschemes::{
    cusp_normal_form, cusp_scheme, ruling_divisor, ruling_divisor_through, CuspNormalForm, ZeroScheme,
};

pub const DEFAULT_RETRIES: usize = 32;
/// Smallest `d1` covered by the existence theorem for cuspidal curves.
pub const PAPER_DEGREE_THRESHOLD: usize = 16;

/// Contact of a curve with a ruling at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangencyCheck {
    pub ruling: String,
    pub point: String,
    pub expected_order: usize,
    pub vanishing_order: usize,
    pub distinct_points: usize,
    pub passed: bool,
}

fn tangency<F: Field>(
    k: &F,
    f: &Form<F::Elem>,
    line: &Ruling<F::Elem>,
    p: &SurfacePoint<F::Elem>,
    expected: usize,
) -> TangencyCheck {
    let r = restrict(k, f, line);
    let pos = position_on_ruling(k, line, p);
    let (order, count) = if r.is_zero(k) {
        (usize::MAX, 0)
    } else {
        let o = vanishing_order(k, &r, (&pos[0], &pos[1])).unwrap_or(0);
        (o, distinct_root_count(k, &r).map(|p| p.count).unwrap_or(0))
    };
    TangencyCheck {
        ruling: line.format(k),
        point: p.format(k),
        expected_order: expected,
        vanishing_order: order,
        distinct_points: count,
        passed: order == expected && count == 1,
    }
}

/// Two points `o ∈ L` and `o′ ∈ L′` on rulings of opposite families;
/// `q = L ∩ L′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentLayout<E> {
    pub o: SurfacePoint<E>,
    pub o2: SurfacePoint<E>,
}

impl<E: Clone + Eq + std::fmt::Debug> TangentLayout<E> {
    /// `o = ((1:0),(0:1))`, `o′ = ((0:1),(1:0))`, so `q = ((1:0),(1:0))`.
    pub fn standard<F: Field<Elem = E>>(k: &F) -> Self {
        let (z, o) = (k.zero(), k.one());
        Self {
            o: SurfacePoint::quadric(k, [o.clone(), z.clone()], [z.clone(), o.clone()]).unwrap(),
            o2: SurfacePoint::quadric(k, [z.clone(), o.clone()], [o, z]).unwrap(),
        }
    }

    pub fn new<F: Field<Elem = E>>(k: &F, o: SurfacePoint<E>, o2: SurfacePoint<E>) -> Result<Self> {
        let l = Self { o, o2 };
        let q = l.q(k)?;
        if l.o == q || l.o2 == q {
            return Err(Error::InvalidInput("o and o' must differ from the intersection of their rulings".into()));
        }
        Ok(l)
    }

    /// The X-ruling through `o`.
    pub fn l(&self) -> Ruling<E> {
        match &self.o {
            SurfacePoint::Quadric { x, .. } => Ruling::QuadricX(x.clone()),
            SurfacePoint::Cone(_) => unreachable!("layouts live on the quadric"),
        }
    }

    /// The Y-ruling through `o′`.
    pub fn l2(&self) -> Ruling<E> {
        match &self.o2 {
            SurfacePoint::Quadric { y, .. } => Ruling::QuadricY(y.clone()),
            SurfacePoint::Cone(_) => unreachable!("layouts live on the quadric"),
        }
    }

    pub fn q<F: Field<Elem = E>>(&self, k: &F) -> Result<SurfacePoint<E>> {
        match (&self.o, &self.o2) {
            (SurfacePoint::Quadric { x, .. }, SurfacePoint::Quadric { y, .. }) => {
                SurfacePoint::quadric(k, x.clone(), y.clone())
            }
            _ => Err(Error::AmbientMismatch("tangent layouts live on the smooth quadric".into())),
        }
    }

    /// `d2·o ⊂ L ∪ d1·o′ ⊂ L′`.
    pub fn scheme<F: Field<Elem = E>>(&self, k: &F, d1: usize, d2: usize) -> Result<ZeroScheme<E>> {
        ruling_divisor(k, &self.l(), &self.o, d2)?.union(&ruling_divisor(k, &self.l2(), &self.o2, d1)?)
    }

    fn checks<F: Field<Elem = E>>(&self, k: &F, f: &Form<E>, d1: usize, d2: usize) -> Vec<TangencyCheck> {
        vec![tangency(k, f, &self.l(), &self.o, d2), tangency(k, f, &self.l2(), &self.o2, d1)]
    }
}

#[derive(Clone, Debug)]
pub struct TangentCurveReport<E> {
    pub d1: usize,
    pub d2: usize,
    pub layout: TangentLayout<E>,
    pub scheme: ZeroScheme<E>,
    pub h0: usize,
    pub h1: usize,
    pub member: Form<E>,
    pub smoothness: SmoothnessReport<E>,
    pub tangency: Vec<TangencyCheck>,
    pub seed: u64,
    /// Members drawn, including the accepted one.
    pub attempts: usize,
}

/// A smooth member of `|I_{Z∪Z′}(d1,d2)|` meeting `L` only at `o` and
/// `L′` only at `o′`.
pub fn construct_smooth_tangent_curve<F: Field>(
    k: &F,
    d1: usize,
    d2: usize,
    layout: &TangentLayout<F::Elem>,
    seed: u64,
    retries: usize,
) -> Result<TangentCurveReport<F::Elem>> {
    if d1 == 0 || d1 > d2 {
        return Err(Error::InvalidInput(format!("need 1 <= d1 <= d2, got ({d1},{d2})")));
    }
    let space = FormSpace::Quadric { a: d1, b: d2 };
    let z = layout.scheme(k, d1, d2)?;
    let sys = system(k, space, &z)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=retries {
        let f = random_member_with(k, &sys, &mut rng)?;
        let tangency = layout.checks(k, &f, d1, d2);
        if !tangency.iter().all(|t| t.passed) {
            continue;
        }
        let smoothness = smoothness_certificate(k, &f, &[])?;
        if smoothness.verdict != Verdict::Smooth {
            continue;
        }
        return Ok(TangentCurveReport {
            d1,
            d2,
            layout: layout.clone(),
            scheme: z,
            h0: sys.h0,
            h1: sys.h1,
            member: f,
            smoothness,
            tangency,
            seed,
            attempts: attempt,
        });
    }
    Err(Error::RetriesExhausted { attempts: retries })
}

#[derive(Clone, Debug)]
pub struct ConeCurveReport<E> {
    pub d: usize,
    pub point: SurfacePoint<E>,
    pub scheme: ZeroScheme<E>,
    pub h0: usize,
    pub h1: usize,
    pub member: Form<E>,
    pub smoothness: SmoothnessReport<E>,
    /// `Y(0:0:0:1) ≠ 0`.
    pub vertex_avoided: bool,
    pub ruling: TangencyCheck,
    /// `(d−1)²`, the genus of a complete intersection of the cone with a
    /// degree-`d` surface missing the vertex.
    pub closed_form_genus: i64,
    /// Independent estimate from the ruling projection.
    pub genus_estimate: GenusEstimate,
    pub seed: u64,
    pub attempts: usize,
}

/// The default cone point `(1:0:0:0)`.
pub fn default_cone_point<F: Field>(k: &F) -> SurfacePoint<F::Elem> {
    SurfacePoint::cone(k, [k.one(), k.zero(), k.zero(), k.zero()]).unwrap()
}

/// A smooth member of `|I_{d·p}(d)|` on the cone that avoids the vertex
/// and meets the ruling through `p` only at `p`.
pub fn construct_cone_curve<F: Field>(
    k: &F,
    d: usize,
    p: &SurfacePoint<F::Elem>,
    seed: u64,
    retries: usize,
) -> Result<ConeCurveReport<F::Elem>> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("cone degree must be at least 2, got {d}")));
    }
    let z = ruling_divisor_through(k, RulingClass::ConeLine, p, d)?;
    let line = Ruling::through(k, RulingClass::ConeLine, p)?;
    let space = FormSpace::Cone { d };
    let sys = system(k, space, &z)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=retries {
        let f = random_member_with(k, &sys, &mut rng)?;
        let vertex_avoided = !k.is_zero(&f.eval(k, &[k.zero(), k.zero(), k.zero(), k.one()]));
        let ruling = tangency(k, &f, &line, p, d);
        if !vertex_avoided || !ruling.passed {
            continue;
        }
        let smoothness = smoothness_certificate(k, &f, &[])?;
        if smoothness.verdict != Verdict::Smooth {
            continue;
        }
        let genus_estimate = fiber_count_genus(k, &f)?;
        return Ok(ConeCurveReport {
            d,
            point: p.clone(),
            scheme: z,
            h0: sys.h0,
            h1: sys.h1,
            member: f,
            smoothness,
            vertex_avoided,
            ruling,
            closed_form_genus: ((d - 1) * (d - 1)) as i64,
            genus_estimate,
            seed,
            attempts: attempt,
        });
    }
    Err(Error::RetriesExhausted { attempts: retries })
}

/// Tangent layout plus two cusp points with their tangent directions,
/// all off `L ∪ L′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspLayout<E> {
    pub rulings: TangentLayout<E>,
    pub cusp_a: SurfacePoint<E>,
    pub tangent_a: [E; 2],
    pub cusp_b: SurfacePoint<E>,
    pub tangent_b: [E; 2],
}

fn nonzero<F: Field>(k: &F, rng: &mut dyn RngCore) -> F::Elem {
    loop {
        let c = k.random(rng);
        if !k.is_zero(&c) {
            return c;
        }
    }
}

/// Draws cusp points `((1:a),(1:b))` with `a, b ≠ 0` on distinct rulings
/// and tangents with both components nonzero.
pub fn cuspidal_layout<F: Field>(k: &F, rng: &mut dyn RngCore) -> CuspLayout<F::Elem> {
    let rulings = TangentLayout::standard(k);
    let draw = |rng: &mut dyn RngCore| (nonzero(k, rng), nonzero(k, rng));
    let (a1, b1) = draw(rng);
    let (a2, b2) = loop {
        let (a, b) = draw(rng);
        if a != a1 && b != b1 {
            break (a, b);
        }
    };
    let pt = |a: F::Elem, b: F::Elem| SurfacePoint::quadric(k, [k.one(), a], [k.one(), b]).unwrap();
    CuspLayout {
        rulings,
        cusp_a: pt(a1, b1),
        tangent_a: [nonzero(k, rng), nonzero(k, rng)],
        cusp_b: pt(a2, b2),
        tangent_b: [nonzero(k, rng), nonzero(k, rng)],
    }
}

impl<E: Clone + Eq + std::fmt::Debug> CuspLayout<E> {
    pub fn scheme<F: Field<Elem = E>>(
        &self,
        k: &F,
        d1: usize,
        d2: usize,
        alpha: usize,
        beta: usize,
    ) -> Result<ZeroScheme<E>> {
        let a = cusp_scheme(k, &self.cusp_a, self.tangent_a.clone(), alpha)?;
        let b = cusp_scheme(k, &self.cusp_b, self.tangent_b.clone(), beta)?;
        self.rulings.scheme(k, d1, d2)?.union(&a)?.union(&b)
    }
}

#[derive(Clone, Debug)]
pub struct CuspidalCurveReport<E> {
    pub d1: usize,
    pub d2: usize,
    pub alpha: usize,
    pub beta: usize,
    pub layout: CuspLayout<E>,
    pub scheme: ZeroScheme<E>,
    pub h0: usize,
    pub h1: usize,
    pub member: Form<E>,
    /// Certificate with both cusp points excised.
    pub smoothness: SmoothnessReport<E>,
    pub tangency: Vec<TangencyCheck>,
    pub cusp_a: CuspNormalForm,
    pub cusp_b: CuspNormalForm,
    /// `d1 d2 − d1 − d2 + 1 − (α + β)`.
    pub target_genus: i64,
    pub genus_estimate: GenusEstimate,
    /// Inputs below the range covered by the existence theorem.
    pub experimental: bool,
    pub notes: Vec<String>,
    pub seed: u64,
    pub attempts: usize,
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A curve of bidegree `(d1,d2)` with an `A_{2α}` and an `A_{2β}` cusp,
/// smooth elsewhere, in the ruling layout of [`TangentLayout::standard`].
pub fn construct_cuspidal_curve<F: Field>(
    k: &F,
    d1: usize,
    d2: usize,
    alpha: usize,
    beta: usize,
    seed: u64,
    retries: usize,
) -> Result<CuspidalCurveReport<F::Elem>> {
    if beta == 0 || alpha < beta {
        return Err(Error::InvalidInput(format!("need alpha >= beta >= 1, got ({alpha},{beta})")));
    }
    if d1 == 0 || d1 > d2 {
        return Err(Error::InvalidInput(format!("need 1 <= d1 <= d2, got ({d1},{d2})")));
    }
    let mut notes = Vec::new();
    let mut experimental = false;
    if d1 < PAPER_DEGREE_THRESHOLD {
        experimental = true;
        notes.push(format!("d1 = {d1} is below the guaranteed range d1 >= {PAPER_DEGREE_THRESHOLD}"));
    }
    if 3 * alpha + 2 > binom2(d1 - 1) {
        experimental = true;
        notes.push(format!("3*max(alpha,beta)+2 = {} exceeds C(d1-1,2) = {}", 3 * alpha + 2, binom2(d1 - 1)));
    }
    let kappa = (alpha + beta) as i64;
    let target_genus = (d1 * d2) as i64 - d1 as i64 - d2 as i64 + 1 - kappa;
    let space = FormSpace::Quadric { a: d1, b: d2 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut layout = cuspidal_layout(k, &mut rng);
    let mut sys = None;
    for attempt in 1..=retries {
        if sys.is_none() {
            let z = layout.scheme(k, d1, d2, alpha, beta)?;
            let s = system(k, space, &z)?;
            if s.h1 != 0 || s.h0 == 0 {
                layout = cuspidal_layout(k, &mut rng);
                continue;
            }
            sys = Some(s);
        }
        let s = sys.as_ref().unwrap();
        let f = random_member_with(k, s, &mut rng)?;
        let tangency = layout.rulings.checks(k, &f, d1, d2);
        let na = cusp_normal_form(k, &f, &layout.cusp_a, &layout.tangent_a, alpha)?;
        let nb = cusp_normal_form(k, &f, &layout.cusp_b, &layout.tangent_b, beta)?;
        if !tangency.iter().all(|t| t.passed) || !na.passed || !nb.passed {
            continue;
        }
        let holes = [layout.cusp_a.clone(), layout.cusp_b.clone()];
        let smoothness = smoothness_certificate(k, &f, &holes)?;
        if smoothness.verdict != Verdict::Smooth {
            continue;
        }
        let genus_estimate = fiber_count_genus(k, &f)?;
        if genus_estimate.geometric_genus != target_genus {
            continue;
        }
        notes.push("irreducibility is assumed, not certified".into());
        let s = sys.unwrap();
        return Ok(CuspidalCurveReport {
            d1,
            d2,
            alpha,
            beta,
            layout,
            scheme: s.scheme,
            h0: s.h0,
            h1: s.h1,
            member: f,
            smoothness,
            tangency,
            cusp_a: na,
            cusp_b: nb,
            target_genus,
            genus_estimate,
            experimental,
            notes,
            seed,
            attempts: attempt,
        });
    }
    Err(Error::RetriesExhausted { attempts: retries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn twisted_cubic_type_curve() {
        let k = k();
        let r = construct_smooth_tangent_curve(&k, 1, 2, &TangentLayout::standard(&k), 0, DEFAULT_RETRIES).unwrap();
        assert_eq!(r.h0, 3);
        assert_eq!(r.smoothness.verdict, Verdict::Smooth);
        assert!(r.tangency.iter().all(|t| t.passed && t.distinct_points == 1));
    }

    #[test]
    fn elliptic_quartic_genus() {
        let k = k();
        let r = construct_smooth_tangent_curve(&k, 2, 2, &TangentLayout::standard(&k), 3, DEFAULT_RETRIES).unwrap();
        assert_eq!(r.h0, 5);
        assert_eq!(fiber_count_genus(&k, &r.member).unwrap().geometric_genus, 1);
    }

    #[test]
    fn bad_layouts_are_rejected() {
        let k = k();
        let l = TangentLayout::standard(&k);
        let q = l.q(&k).unwrap();
        assert!(TangentLayout::new(&k, q, l.o2.clone()).is_err());
        assert!(construct_smooth_tangent_curve(&k, 3, 2, &l, 0, 4).is_err());
    }

    #[test]
    fn cone_curve_degree_three() {
        let k = k();
        let r = construct_cone_curve(&k, 3, &default_cone_point(&k), 0, DEFAULT_RETRIES).unwrap();
        assert!(r.vertex_avoided);
        assert!(r.ruling.passed);
        assert_eq!(r.genus_estimate.geometric_genus, r.closed_form_genus);
    }

    #[test]
    fn cuspidal_inputs_are_validated() {
        let k = k();
        assert!(matches!(construct_cuspidal_curve(&k, 4, 4, 0, 0, 0, 4), Err(Error::InvalidInput(_))));
        assert!(matches!(construct_cuspidal_curve(&k, 4, 4, 1, 2, 0, 4), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn cuspidal_quartic_quartic() {
        let k = k();
        let r = construct_cuspidal_curve(&k, 4, 4, 1, 1, 0, DEFAULT_RETRIES).unwrap();
        assert!(r.experimental);
        assert_eq!(r.h1, 0);
        assert_eq!(r.target_genus, 7);
        assert_eq!(r.genus_estimate.geometric_genus, 7);
        assert!(r.cusp_a.passed && r.cusp_b.passed);
    }
}
