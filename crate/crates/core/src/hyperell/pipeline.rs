//! An injective plane model with one ordinary cusp, built from a
//! Weierstrass point `o` and a general point `p`.
//!
//! `N = 2o + (g+1)p` embeds the curve in P³ onto a smooth quadric as a
//! curve of bidegree `(2, g+1)`: the rulings come from `u₂ = x` and from the
//! pencil `u₁ = |(g+1)p|`. Projecting from `q = (u₁(p), u₂(o))` collapses
//! only the tangent ruling at `o` and the osculating ruling at `p`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::upoly::{self, Poly};
use crate::exactalg::Field;
use crate::linsys::{fiber_count_genus, smoothness_certificate, Verdict};
use crate::projection::{outer_injectivity_quadric, RulingRecord};
use crate::surface::{Form, FormSpace, SurfacePoint};

use super::rr::{base_locus, h0_effective, h0_polar, h1_effective, rr_space};
use super::{random_point, HDivisor, HPoint, HyperellipticCurve};

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport<E> {
    pub genus: usize,
    pub o: String,
    pub p: String,
    pub divisor: String,
    pub h0_divisor: usize,
    pub h0_gp: usize,
    pub h0_g1p: usize,
    /// The non-constant section of `(g+1)p`.
    pub u1: String,
    pub image_form: String,
    pub image_bidegree: (usize, usize),
    pub arithmetic_genus: usize,
    pub image_smoothness: Verdict,
    pub image_geometric_genus: Option<i64>,
    pub center: String,
    pub center_off_image: bool,
    pub injective: bool,
    pub rulings: Vec<RulingRecord>,
    pub singularities: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub image: Form<E>,
    #[serde(skip)]
    pub q: SurfacePoint<E>,
}

/// `F(U, V)` with `U = ψ`, `V = x`: the norm of `UΔ − A − B·y`, stripped of
/// its content in `V`.
fn implicit_image<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    a: &[F::Elem],
    b: &[F::Elem],
    delta: &[F::Elem],
) -> [Poly<F::Elem>; 3] {
    let f2 = upoly::mul(k, delta, delta);
    let f1 = upoly::scale(k, &upoly::mul(k, delta, a), &k.from_i64(-2));
    let f0 = upoly::sub(k, &upoly::mul(k, a, a), &upoly::mul(k, &upoly::mul(k, b, b), &curve.f));
    let content = upoly::gcd_many(k, &[f0.clone(), f1.clone(), f2.clone()]);
    [f0, f1, f2].map(|c| upoly::div_exact(k, &c, &content).unwrap())
}

fn homogenize<F: Field>(k: &F, rows: &[Poly<F::Elem>; 3], b: usize) -> Result<Form<F::Elem>> {
    let space = FormSpace::Quadric { a: 2, b };
    let mut form = Form::zero(k, space);
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in r.iter().enumerate() {
            if j > b {
                return Err(Error::PipelineCheck("image has the wrong bidegree".into()));
            }
            let idx = space.index_of([(2 - i) as u32, i as u32, (b - j) as u32, j as u32]).unwrap();
            form.coeffs[idx] = c.clone();
        }
    }
    if let Some(lead) = form.coeffs.iter().rev().find(|c| !k.is_zero(c)).cloned() {
        let inv = k.inv(&lead).unwrap();
        form.coeffs = form.coeffs.iter().map(|c| k.mul(c, &inv)).collect();
    }
    Ok(form)
}

pub fn injective_g2_pipeline<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    o: &HPoint<F::Elem>,
    p: &HPoint<F::Elem>,
) -> Result<PipelineReport<F::Elem>> {
    if !o.weierstrass {
        return Err(Error::NotWeierstrass);
    }
    if p.weierstrass {
        return Err(Error::WeierstrassP);
    }
    let g = curve.genus;
    if h1_effective(k, curve, &HDivisor::new(vec![(p.clone(), g)])) != 0 {
        return Err(Error::SpecialP);
    }
    let n = HDivisor::new(vec![(o.clone(), 2), (p.clone(), g + 1)]);
    let h0 = h0_effective(k, curve, &n);
    let explicit = rr_space(k, curve, &n)?;
    if h0 != 4 || explicit.dimension != 4 {
        return Err(Error::PipelineCheck(format!("h0(N) = {h0}, expected 4")));
    }
    let h0_gp = h0_effective(k, curve, &HDivisor::new(vec![(p.clone(), g)]));
    let pencil = rr_space(k, curve, &HDivisor::new(vec![(p.clone(), g + 1)]))?;
    if pencil.dimension != 2 {
        return Err(Error::PipelineCheck(format!("h0((g+1)p) = {}, expected 2", pencil.dimension)));
    }
    let delta = &pencil.denominator;
    // a section not proportional to 1 = Δ/Δ
    let constant = |(a, b): &(Poly<F::Elem>, Poly<F::Elem>)| {
        b.is_empty() && a.len() == delta.len() && {
            let c = k.div(a.last().unwrap(), delta.last().unwrap()).unwrap();
            upoly::scale(k, delta, &c) == *a
        }
    };
    let (a, b) = pencil
        .basis
        .iter()
        .find(|s| !constant(s))
        .cloned()
        .ok_or_else(|| Error::PipelineCheck("the pencil (g+1)p is constant".into()))?;

    let rows = implicit_image(k, curve, &a, &b, delta);
    let bidegree = (
        rows.iter().rposition(|r| !r.is_empty()).unwrap_or(0),
        rows.iter().map(|r| r.len().saturating_sub(1)).max().unwrap_or(0),
    );
    if bidegree != (2, g + 1) {
        return Err(Error::PipelineCheck(format!("image bidegree {bidegree:?}, expected (2, {})", g + 1)));
    }
    let image = homogenize(k, &rows, g + 1)?;

    // u1(p) is the pole of ψ, u2(o) = x(o)
    let q = SurfacePoint::quadric(k, [k.zero(), k.one()], [k.one(), o.x.clone()])?;
    if k.is_zero(&image.eval_at(k, &q)) {
        return Err(Error::CoincidentQ);
    }
    let verdict = outer_injectivity_quadric(k, &image, &q)?;
    let mut profiles: Vec<Vec<usize>> = verdict.rulings.iter().map(|r| r.profile.clone()).collect();
    profiles.sort();
    if profiles != vec![vec![2], vec![g + 1]] {
        return Err(Error::PipelineCheck(format!("ruling profiles {profiles:?} at q")));
    }

    let smooth = smoothness_certificate(k, &image, &[])?;
    let genus = fiber_count_genus(k, &image).ok().map(|e| e.geometric_genus);
    let mut notes = vec![
        format!("the image of the curve lies on a smooth quadric with bidegree (2,{})", g + 1),
        "very ampleness of N is inferred from bidegree and genus, not tested independently".into(),
    ];
    if genus != Some(g as i64) || smooth.verdict != Verdict::Smooth {
        notes.push("the image is not certified to be a smooth curve of genus g".into());
    }
    Ok(PipelineReport {
        genus: g,
        o: o.format(k),
        p: p.format(k),
        divisor: n.format(k),
        h0_divisor: h0,
        h0_gp,
        h0_g1p: pencil.dimension,
        u1: format!(
            "({} + ({})*y) / ({})",
            upoly::format(k, &a, "x"),
            upoly::format(k, &b, "x"),
            upoly::format(k, delta, "x")
        ),
        image_form: image.format(k),
        image_bidegree: bidegree,
        arithmetic_genus: g,
        image_smoothness: smooth.verdict,
        image_geometric_genus: genus,
        center: q.format(k),
        center_off_image: true,
        injective: verdict.injective,
        rulings: verdict.rulings,
        singularities: vec![
            format!("ordinary cusp at the image of o {}", o.format(k)),
            format!("unibranch point of multiplicity {} at the image of p {}", g + 1, p.format(k)),
        ],
        notes,
        image,
        q,
    })
}

/// First non-Weierstrass point from a seeded search with `h¹(g·p) = 0`.
pub fn find_generic_point<F: Field>(k: &F, curve: &HyperellipticCurve<F::Elem>, seed: u64) -> Result<HPoint<F::Elem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..256 {
        let Some(p) = random_point(k, curve, &mut rng) else { continue };
        if !p.weierstrass && h1_effective(k, curve, &HDivisor::new(vec![(p.clone(), curve.genus)])) == 0 {
            return Ok(p);
        }
    }
    Err(Error::RetriesExhausted { attempts: 256 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesType {
    #[serde(rename = "type_i")]
    TypeI,
    #[serde(rename = "type_ii")]
    TypeII,
    #[serde(rename = "type_iii")]
    TypeIII,
    NotInjectiveCandidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesClass {
    pub series_type: SeriesType,
    pub h0: usize,
    pub degree: usize,
    pub base_point_free: bool,
    pub notes: Vec<String>,
}

/// Type of the complete series `|D|` by its dimension; for `h⁰ = 4` and
/// degree `g + 3` the image in P³ lies on a quadric cone iff
/// `(g+1)·g¹₂ − D` is effective.
pub fn classify_series<F: Field>(
    k: &F,
    curve: &HyperellipticCurve<F::Elem>,
    d: &HDivisor<F::Elem>,
) -> Result<SeriesClass> {
    let g = curve.genus;
    let h0 = h0_effective(k, curve, d);
    let space = rr_space(k, curve, d)?;
    let base_point_free = base_locus(k, curve, &space)?.support.is_empty();
    let mut notes = Vec::new();
    let series_type = match h0 {
        3 => {
            notes.push("complete net".into());
            SeriesType::TypeI
        }
        4 if d.degree() == g + 3 => {
            if h0_polar(k, curve, g + 1, d)? > 0 {
                notes.push("cone branch: D is twice the hyperelliptic class plus g-1 points".into());
                if g > 2 {
                    notes.push("not very ample for g > 2".into());
                    SeriesType::TypeIII
                } else {
                    notes.push("very ample since g = 2".into());
                    SeriesType::TypeII
                }
            } else {
                notes.push("smooth quadric branch".into());
                SeriesType::TypeII
            }
        }
        4 => {
            notes.push(format!("h0 = 4 in degree {}; the quadric test needs degree g+3", d.degree()));
            SeriesType::TypeII
        }
        _ => {
            notes.push(format!("h0 = {h0} gives no net from a single projection"));
            SeriesType::NotInjectiveCandidate
        }
    };
    if !base_point_free {
        notes.push("the series has base points".into());
    }
    Ok(SeriesClass { series_type, h0, degree: d.degree(), base_point_free, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    fn split(k: &PrimeField, g: usize) -> HyperellipticCurve<u64> {
        let mut f = vec![1u64];
        for i in 0..(2 * g + 2) as u64 {
            f = upoly::mul(k, &f, &upoly::linear(k, &i));
        }
        HyperellipticCurve::new(k, f).unwrap()
    }

    #[test]
    fn genus_two_pipeline() {
        let k = PrimeField::new(101).unwrap();
        let c = split(&k, 2);
        let o = HPoint::new(&k, &c, 0, 0).unwrap();
        let p = find_generic_point(&k, &c, 1).unwrap();
        let r = injective_g2_pipeline(&k, &c, &o, &p).unwrap();
        assert_eq!(r.image_bidegree, (2, 3));
        assert!(r.injective);
        assert_eq!(r.image_geometric_genus, Some(2));
        assert_eq!(r.image_smoothness, Verdict::Smooth);
        assert_eq!(injective_g2_pipeline(&k, &c, &p, &p).unwrap_err(), Error::NotWeierstrass);
        assert_eq!(injective_g2_pipeline(&k, &c, &o, &o).unwrap_err(), Error::WeierstrassP);
    }

    #[test]
    fn classification_branches() {
        let k = PrimeField::new(101).unwrap();
        let c = split(&k, 3);
        let o = HPoint::new(&k, &c, 0, 0).unwrap();
        let p = find_generic_point(&k, &c, 4).unwrap();
        let b = find_generic_point(&k, &c, 9).unwrap();
        let r_gp = HDivisor::new(vec![(o.clone(), 2), (p.clone(), 3)]);
        assert_eq!(classify_series(&k, &c, &r_gp).unwrap().series_type, SeriesType::TypeI);
        let np = HDivisor::new(vec![(o, 2), (p.clone(), 4)]);
        assert_eq!(classify_series(&k, &c, &np).unwrap().series_type, SeriesType::TypeII);
        let cone = HDivisor::new(vec![(p.clone(), 2), (p.conjugate(&k), 2), (b, 2)]);
        assert_eq!(classify_series(&k, &c, &cone).unwrap().series_type, SeriesType::TypeIII);
    }
}
