//! Enumeration of the inner sets over small finite fields.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{upoly, ExtensionField, Field, PrimeField};
use crate::surface::{is_singular_at, Form, FormSpace, SurfacePoint};

use super::inner::{inner_membership_cone, inner_membership_quadric};
use super::param::{inner_membership_parametrized, RationalCurve};

pub const EVIDENCE_NOTE: &str =
    "finite-field evidence; the membership criteria are decided over the closure, the set sizes are not";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerSets {
    pub field: String,
    pub field_size: u128,
    pub points_on_curve: usize,
    pub smooth_points: usize,
    /// The cone vertex lies on the curve.
    pub vertex_on_curve: bool,
    pub a_members: Vec<String>,
    pub b_members: Vec<String>,
    pub b_literal_count: usize,
    pub full_contact_count: usize,
    pub b_subset_a: bool,
    pub note: &'static str,
}

fn projective_line<F: Field>(k: &F) -> Result<Vec<[F::Elem; 2]>> {
    let elems = k.elements().ok_or_else(|| Error::InvalidInput("censuses need a small finite field".into()))?;
    let mut out: Vec<[F::Elem; 2]> = elems.into_iter().map(|a| [k.one(), a]).collect();
    out.push([k.zero(), k.one()]);
    Ok(out)
}

fn surface_points<F: Field>(k: &F, space: FormSpace) -> Result<Vec<SurfacePoint<F::Elem>>> {
    let line = projective_line(k)?;
    let mut pts = Vec::new();
    match space {
        FormSpace::Quadric { .. } => {
            for x in &line {
                for y in &line {
                    pts.push(SurfacePoint::quadric(k, x.clone(), y.clone())?);
                }
            }
        }
        FormSpace::Cone { .. } => {
            let elems = k.elements().unwrap();
            for base in &line {
                for mu in &elems {
                    pts.push(SurfacePoint::cone_from_ruling(k, base, &[k.one(), mu.clone()])?);
                }
            }
        }
    }
    Ok(pts)
}

fn census_over<F: Field>(k: &F, form: &Form<F::Elem>) -> Result<InnerSets> {
    let mut out = InnerSets {
        field: k.name(),
        field_size: k.order().unwrap_or(0),
        points_on_curve: 0,
        smooth_points: 0,
        vertex_on_curve: false,
        a_members: Vec::new(),
        b_members: Vec::new(),
        b_literal_count: 0,
        full_contact_count: 0,
        b_subset_a: true,
        note: EVIDENCE_NOTE,
    };
    if let FormSpace::Cone { .. } = form.space {
        out.vertex_on_curve = k.is_zero(&form.eval(k, &[k.zero(), k.zero(), k.zero(), k.one()]));
        out.points_on_curve += usize::from(out.vertex_on_curve);
    }
    for p in surface_points(k, form.space)? {
        if !k.is_zero(&form.eval_at(k, &p)) {
            continue;
        }
        out.points_on_curve += 1;
        if is_singular_at(k, form, &p) {
            continue;
        }
        out.smooth_points += 1;
        let m = match form.space {
            FormSpace::Quadric { .. } => inner_membership_quadric(k, form, &p)?,
            FormSpace::Cone { .. } => inner_membership_cone(k, form, &p)?,
        };
        if m.in_a {
            out.a_members.push(p.format(k));
        }
        if m.in_b {
            out.b_members.push(p.format(k));
            out.b_subset_a &= m.in_a;
        }
        out.b_literal_count += usize::from(m.in_b_literal);
        out.full_contact_count += usize::from(m.full_contact);
    }
    Ok(out)
}

/// The lexicographically first monic irreducible polynomial of degree `j`.
fn first_irreducible(k: &PrimeField, j: usize) -> Vec<u64> {
    let p = k.modulus();
    let q = p as u128;
    let mut digits = vec![0u64; j];
    loop {
        let mut m = digits.clone();
        m.push(1);
        if upoly::is_irreducible_finite(k, &m, q) {
            return m;
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
}

/// One census per extension degree `1..=extension_cap`, over `F_{p^j}`.
pub fn census_inner_sets(k: &PrimeField, form: &Form<u64>, extension_cap: usize) -> Result<Vec<InnerSets>> {
    if form.is_zero(k) {
        return Err(Error::ZeroForm);
    }
    let sep = match form.space {
        FormSpace::Quadric { a, b } => a.max(b),
        FormSpace::Cone { d } => d,
    };
    k.check_separable(sep)?;
    if !(1..=3).contains(&extension_cap) {
        return Err(Error::InvalidInput("the extension cap must be 1, 2 or 3".into()));
    }
    let mut out = vec![census_over(k, form)?];
    for j in 2..=extension_cap {
        let ext = ExtensionField::new(*k, first_irreducible(k, j))?;
        let lifted = Form { space: form.space, coeffs: form.coeffs.iter().map(|c| ext.embed(c)).collect() };
        out.push(census_over(&ext, &lifted)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParametrizedCensus {
    pub field: String,
    pub params_checked: usize,
    /// Parameters whose image is a cusp of the curve.
    pub singular_params: usize,
    pub a_count: usize,
    pub b_count: usize,
    pub note: &'static str,
}

/// Inner membership at every rational parameter of a rational space curve.
pub fn census_parametrized<F: Field>(k: &F, curve: &RationalCurve<F::Elem>) -> Result<ParametrizedCensus> {
    let mut out = ParametrizedCensus {
        field: k.name(),
        params_checked: 0,
        singular_params: 0,
        a_count: 0,
        b_count: 0,
        note: EVIDENCE_NOTE,
    };
    for st in projective_line(k)? {
        out.params_checked += 1;
        match inner_membership_parametrized(k, curve, &st) {
            Ok((a, b)) => {
                out.a_count += usize::from(a);
                out.b_count += usize::from(b);
            }
            Err(Error::SingularPoint) => out.singular_params += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Ambient;

    #[test]
    fn twisted_cubic_over_f5_and_f25() {
        let k = PrimeField::new(5).unwrap();
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1^2 - x1*y0^2").unwrap();
        let sets = census_inner_sets(&k, &f, 2).unwrap();
        assert_eq!(sets[0].points_on_curve, 6);
        assert_eq!(sets[1].points_on_curve, 26);
        for s in &sets {
            assert_eq!(s.b_members.len(), s.smooth_points);
            assert!(s.b_subset_a);
        }
    }

    #[test]
    fn twisted_cubic_on_the_cone() {
        let k = PrimeField::new(7).unwrap();
        let c = RationalCurve::parse(&k, &["s^3", "s^2*t", "s*t^2", "t^3"]).unwrap();
        let r = census_parametrized(&k, &c).unwrap();
        assert_eq!((r.params_checked, r.b_count, r.singular_params), (8, 8, 0));
    }

    #[test]
    fn cap_is_bounded() {
        let k = PrimeField::new(5).unwrap();
        let f = Form::parse(&k, Ambient::SmoothQuadric, "x0*y1^2 - x1*y0^2").unwrap();
        assert!(census_inner_sets(&k, &f, 4).is_err());
    }
}
