//! Inner projections from a smooth point `o` of the curve.
//!
//! Points of the curve on a ruling through `o` all map to one point, so
//! `π_o` is injective on `X \ {o}` iff every ruling through `o` carries at
//! most one further point. The extension to `o` sends `o` to its tangent
//! direction; when the tangent line is itself a ruling (contact ≥ 2), `o`
//! collides with any further point on that ruling.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{vanishing_order, Field};
use crate::surface::{is_singular_at, position_on_ruling, Ambient, Form, FormSpace, Ruling, RulingClass, SurfacePoint};

use super::outer::record;
use super::RulingRecord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerMembership {
    /// `π_o` is injective on the curve minus `o`.
    pub in_a: bool,
    /// The extended `π_o` is injective on the whole curve.
    pub in_b: bool,
    /// Every ruling through `o` meets the curve only at `o`.
    pub in_b_literal: bool,
    /// Every ruling through `o` has full contact with the curve at `o`.
    pub full_contact: bool,
    pub rulings: Vec<RulingRecord>,
}

fn membership<F: Field>(
    k: &F,
    f: &Form<F::Elem>,
    o: &SurfacePoint<F::Elem>,
    lines: &[Ruling<F::Elem>],
) -> Result<InnerMembership> {
    let mut m = InnerMembership { in_a: true, in_b: true, in_b_literal: true, full_contact: true, rulings: Vec::new() };
    for line in lines {
        let (mut rec, r) = record(k, f, line)?;
        let pos = position_on_ruling(k, line, o);
        let contact = vanishing_order(k, &r, (&pos[0], &pos[1]))?;
        rec.contact_at_point = Some(contact);
        let n = rec.distinct_points;
        m.in_a &= n <= 2;
        m.in_b &= n <= 2 && (contact < 2 || n == 1);
        m.in_b_literal &= n == 1;
        m.full_contact &= contact == r.degree;
        m.rulings.push(rec);
    }
    Ok(m)
}

fn check_point<F: Field>(k: &F, f: &Form<F::Elem>, o: &SurfacePoint<F::Elem>) -> Result<()> {
    if !k.is_zero(&f.eval_at(k, o)) {
        return Err(Error::PointNotOnCurve);
    }
    if is_singular_at(k, f, o) {
        return Err(Error::SingularPoint);
    }
    Ok(())
}

pub fn inner_membership_quadric<F: Field>(
    k: &F,
    f: &Form<F::Elem>,
    o: &SurfacePoint<F::Elem>,
) -> Result<InnerMembership> {
    let FormSpace::Quadric { a, b } = f.space else {
        return Err(Error::AmbientMismatch("expected a form on the smooth quadric".into()));
    };
    if o.ambient() != Ambient::SmoothQuadric {
        return Err(Error::AmbientMismatch("the point must lie on the smooth quadric".into()));
    }
    if (a, b) == (1, 1) {
        return Err(Error::DegenerateBidegree);
    }
    if a == 0 || b == 0 {
        return Err(Error::Degenerate("bidegree with a zero entry is a union of rulings".into()));
    }
    k.check_separable(a.max(b))?;
    check_point(k, f, o)?;
    let lines = [Ruling::through(k, RulingClass::X, o)?, Ruling::through(k, RulingClass::Y, o)?];
    membership(k, f, o, &lines)
}

pub fn inner_membership_cone<F: Field>(k: &F, g: &Form<F::Elem>, o: &SurfacePoint<F::Elem>) -> Result<InnerMembership> {
    let FormSpace::Cone { d } = g.space else {
        return Err(Error::AmbientMismatch("expected a form on the cone".into()));
    };
    if o.ambient() != Ambient::Cone {
        return Err(Error::AmbientMismatch("the point must lie on the cone".into()));
    }
    if o.is_vertex(k) {
        return Err(Error::CenterIsVertex);
    }
    k.check_separable(d)?;
    check_point(k, g, o)?;
    membership(k, g, o, &[Ruling::through(k, RulingClass::ConeLine, o)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    #[test]
    fn twisted_cubic_points_are_all_in_b() {
        let k = PrimeField::new(5).unwrap();
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1^2 - x1*y0^2").unwrap();
        for s in 0..5u64 {
            // (x, y) = ((1:s^2), (1:s)) lies on the curve
            let o = SurfacePoint::quadric(&k, [1, s * s % 5], [1, s]).unwrap();
            let m = inner_membership_quadric(&k, &f, &o).unwrap();
            assert!(m.in_a && m.in_b);
        }
    }

    #[test]
    fn preconditions() {
        let k = PrimeField::new(101).unwrap();
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1 - x1*y0").unwrap();
        let o = SurfacePoint::quadric(&k, [1, 1], [1, 1]).unwrap();
        assert_eq!(inner_membership_quadric(&k, &f, &o), Err(Error::DegenerateBidegree));
        let g = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1^2 - x1*y0^2").unwrap();
        let off = SurfacePoint::quadric(&k, [1, 2], [1, 1]).unwrap();
        assert_eq!(inner_membership_quadric(&k, &g, &off), Err(Error::PointNotOnCurve));
        let c = Form::parse(&k, Ambient::Cone, "X3^2 - X0^2").unwrap();
        let v = SurfacePoint::cone(&k, [0, 0, 0, 1]).unwrap();
        assert_eq!(inner_membership_cone(&k, &c, &v), Err(Error::CenterIsVertex));
    }

    #[test]
    fn singular_points_are_rejected() {
        let k = PrimeField::new(101).unwrap();
        // cusp v^2 = u^3 at u = v = 0 in the chart x0 = y0 = 1
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0^3*y1^2 - x1^3*y0^2").unwrap();
        let o = SurfacePoint::quadric(&k, [1, 0], [1, 0]).unwrap();
        assert_eq!(inner_membership_quadric(&k, &f, &o), Err(Error::SingularPoint));
    }

    #[test]
    fn tangent_ruling_with_a_single_point() {
        let k = PrimeField::new(101).unwrap();
        // the X-ruling through ((1:0),(1:0)) has contact 2 and no other point,
        // the Y-ruling meets the curve transversally in two points
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0^2*y1^2 + x0*x1*y0^2 + x1^2*y0*y1 + 3*x1^2*y1^2").unwrap();
        let o = SurfacePoint::quadric(&k, [1, 0], [1, 0]).unwrap();
        let m = inner_membership_quadric(&k, &f, &o).unwrap();
        assert_eq!(m.rulings[0].contact_at_point, Some(2));
        assert!(m.in_a && m.in_b);
        assert!(!m.in_b_literal && !m.full_contact);
    }

    #[test]
    fn tangent_ruling_with_another_point_is_not_in_b() {
        let k = PrimeField::new(101).unwrap();
        // bidegree (1,3): the X-ruling through ((1:0),(1:0)) is y1^2 (y1 - y0)
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1^3 - x0*y0*y1^2 + x1*y0^3").unwrap();
        let o = SurfacePoint::quadric(&k, [1, 0], [1, 0]).unwrap();
        let m = inner_membership_quadric(&k, &f, &o).unwrap();
        assert!(m.in_a);
        assert!(!m.in_b);
    }

    #[test]
    fn cone_ruling_with_three_points_is_not_in_a() {
        let k = PrimeField::new(101).unwrap();
        // the ruling over (1:0) meets the curve at mu = 0, lambda, lambda/2 and the vertex
        let g = Form::parse(&k, Ambient::Cone, "X0^3*X3 - 3*X0^2*X3^2 + 2*X0*X3^3 + X2^4").unwrap();
        let o = SurfacePoint::cone(&k, [1, 0, 0, 1]).unwrap();
        let m = inner_membership_cone(&k, &g, &o).unwrap();
        assert!(!m.in_a && !m.in_b);
    }
}
