use crate::error::{Error, Result};
use crate::exactalg::{distinct_root_count, rational_roots, BinaryForm, Field};
use crate::surface::{restrict, ruling_point, Ambient, Form, FormSpace, Ruling, RulingClass, SurfacePoint};

use super::RulingRecord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionVerdict<E> {
    pub injective: bool,
    pub rulings: Vec<RulingRecord>,
    /// Two distinct curve points on one ruling through the center.
    pub failure_witness: Option<[SurfacePoint<E>; 2]>,
    /// Set when the colliding points are not rational over the base field.
    pub witness_note: Option<String>,
}

pub(super) fn record<F: Field>(
    k: &F,
    f: &Form<F::Elem>,
    line: &Ruling<F::Elem>,
) -> Result<(RulingRecord, BinaryForm<F::Elem>)> {
    let r = restrict(k, f, line);
    if r.is_zero(k) {
        return Err(Error::Degenerate(format!("the curve contains the ruling {}", line.format(k))));
    }
    let prof = distinct_root_count(k, &r)?;
    let rec = RulingRecord {
        ruling: line.format(k),
        restriction: r.format(k),
        distinct_points: prof.count,
        profile: prof.profile,
        contact_at_point: None,
    };
    Ok((rec, r))
}

fn verdict<F: Field>(k: &F, f: &Form<F::Elem>, lines: &[Ruling<F::Elem>]) -> Result<ProjectionVerdict<F::Elem>> {
    let mut out = ProjectionVerdict { injective: true, rulings: Vec::new(), failure_witness: None, witness_note: None };
    for line in lines {
        let (rec, r) = record(k, f, line)?;
        if rec.distinct_points > 1 {
            out.injective = false;
            if out.failure_witness.is_none() {
                let roots = rational_roots(k, &r);
                if roots.len() >= 2 {
                    out.failure_witness = Some([ruling_point(k, line, &roots[0])?, ruling_point(k, line, &roots[1])?]);
                    out.witness_note = None;
                } else if out.witness_note.is_none() {
                    out.witness_note = Some(format!(
                        "{} meets the curve in {} points, not all rational over {}",
                        rec.ruling,
                        rec.distinct_points,
                        k.name()
                    ));
                }
            }
        }
        out.rulings.push(rec);
    }
    Ok(out)
}

/// Projection of a curve on the smooth quadric from a surface point `q`
/// off the curve: injective iff both rulings through `q` meet the curve in
/// a single point.
pub fn outer_injectivity_quadric<F: Field>(
    k: &F,
    f: &Form<F::Elem>,
    q: &SurfacePoint<F::Elem>,
) -> Result<ProjectionVerdict<F::Elem>> {
    let FormSpace::Quadric { a, b } = f.space else {
        return Err(Error::AmbientMismatch("expected a form on the smooth quadric".into()));
    };
    if q.ambient() != Ambient::SmoothQuadric {
        return Err(Error::AmbientMismatch("the center must lie on the smooth quadric".into()));
    }
    k.check_separable(a.max(b))?;
    if k.is_zero(&f.eval_at(k, q)) {
        return Err(Error::CenterOnCurve);
    }
    let lines = [Ruling::through(k, RulingClass::X, q)?, Ruling::through(k, RulingClass::Y, q)?];
    verdict(k, f, &lines)
}

/// Projection of a curve on the cone from a non-vertex point `q` off the
/// curve: injective iff the ruling through `q` meets the curve once.
pub fn outer_injectivity_cone<F: Field>(
    k: &F,
    g: &Form<F::Elem>,
    q: &SurfacePoint<F::Elem>,
) -> Result<ProjectionVerdict<F::Elem>> {
    let FormSpace::Cone { d } = g.space else {
        return Err(Error::AmbientMismatch("expected a form on the cone".into()));
    };
    if q.ambient() != Ambient::Cone {
        return Err(Error::AmbientMismatch("the center must lie on the cone".into()));
    }
    if q.is_vertex(k) {
        return Err(Error::CenterIsVertex);
    }
    k.check_separable(d)?;
    if k.is_zero(&g.eval_at(k, q)) {
        return Err(Error::CenterOnCurve);
    }
    verdict(k, g, &[Ruling::through(k, RulingClass::ConeLine, q)?])
}

pub fn outer_injectivity<F: Field>(
    k: &F,
    f: &Form<F::Elem>,
    q: &SurfacePoint<F::Elem>,
) -> Result<ProjectionVerdict<F::Elem>> {
    match f.space.ambient() {
        Ambient::SmoothQuadric => outer_injectivity_quadric(k, f, q),
        Ambient::Cone => outer_injectivity_cone(k, f, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;
    use crate::surface::ambient_coords;

    fn quadric(k: &PrimeField, s: &str) -> Form<u64> {
        Form::parse(k, Ambient::SmoothQuadric, s).unwrap()
    }

    fn collinear(k: &PrimeField, pts: [[u64; 4]; 3]) -> bool {
        let m = crate::exactalg::Matrix::from_rows(4, pts.iter().map(|p| p.to_vec()).collect());
        crate::exactalg::matrix::rank(k, &m) <= 2
    }

    #[test]
    fn twisted_cubic_from_tangent_corner() {
        let k = PrimeField::new(7).unwrap();
        let f = quadric(&k, "x0*y1^2 - x1*y0^2");
        let q = SurfacePoint::quadric(&k, [1, 0], [0, 1]).unwrap();
        let v = outer_injectivity_quadric(&k, &f, &q).unwrap();
        assert!(v.injective);
        assert_eq!(v.rulings.len(), 2);
        let on = SurfacePoint::quadric(&k, [1, 1], [1, 1]).unwrap();
        assert_eq!(outer_injectivity_quadric(&k, &f, &on), Err(Error::CenterOnCurve));
    }

    #[test]
    fn general_center_has_collinear_witness() {
        let k = PrimeField::new(101).unwrap();
        let f = quadric(&k, "x0^2*y0^2 - x1^2*y1^2 + 3*x0*x1*y0*y1 + x0^2*y1^2 - 4*x1^2*y0^2");
        let q = SurfacePoint::quadric(&k, [1, 2], [1, 5]).unwrap();
        let v = outer_injectivity_quadric(&k, &f, &q).unwrap();
        assert!(!v.injective);
        if let Some([a, b]) = &v.failure_witness {
            assert_ne!(a, b);
            assert_eq!(f.eval_at(&k, a), 0);
            assert_eq!(f.eval_at(&k, b), 0);
            assert!(collinear(&k, [ambient_coords(&k, &q), ambient_coords(&k, a), ambient_coords(&k, b)]));
        } else {
            assert!(v.witness_note.is_some());
        }
    }

    #[test]
    fn swapping_factors_preserves_the_verdict() {
        let k = PrimeField::new(101).unwrap();
        let f = quadric(&k, "x0*y1^3 + 2*x1*y0^3 - x1*y0*y1^2");
        let g = quadric(&k, "y0*x1^3 + 2*y1*x0^3 - y1*x0*x1^2");
        for (x, y) in [([1, 3], [1, 4]), ([0, 1], [1, 9]), ([1, 0], [1, 0])] {
            let q = SurfacePoint::quadric(&k, x, y).unwrap();
            let qs = SurfacePoint::quadric(&k, y, x).unwrap();
            match (outer_injectivity_quadric(&k, &f, &q), outer_injectivity_quadric(&k, &g, &qs)) {
                (Ok(a), Ok(b)) => assert_eq!(a.injective, b.injective),
                (a, b) => assert_eq!(a.is_err(), b.is_err()),
            }
        }
    }

    #[test]
    fn cone_errors_and_verdicts() {
        let k = PrimeField::new(101).unwrap();
        let g = Form::parse(&k, Ambient::Cone, "X3^2 - X0^2 - X2^2").unwrap();
        let v = SurfacePoint::cone(&k, [0, 0, 0, 1]).unwrap();
        assert_eq!(outer_injectivity_cone(&k, &g, &v), Err(Error::CenterIsVertex));
        let q = SurfacePoint::cone(&k, [1, 2, 4, 0]).unwrap();
        // X3^2 = 1 + 16 on that ruling: two distinct points
        assert!(!outer_injectivity_cone(&k, &g, &q).unwrap().injective);
        let h = Form::parse(&k, Ambient::Cone, "X3^2 - X0^2").unwrap();
        let q0 = SurfacePoint::cone(&k, [1, 0, 0, 1]).unwrap();
        assert_eq!(outer_injectivity_cone(&k, &h, &q0), Err(Error::CenterOnCurve));
    }
}
