#![allow(dead_code, unused_imports)]

use std::collections::HashMap;

use quadcusp::exactalg::matrix::{kernel, mul_vec};
use quadcusp::exactalg::{rational_roots, BinaryForm, Matrix};
pub use quadcusp::exactalg::{upoly, ExtensionField, Field, PrimeField, Rationals};
use quadcusp::hyperell::HyperellipticCurve;
use quadcusp::linsys::system;
pub use quadcusp::linsys::TangentLayout;
use quadcusp::surface::{ambient_coords, normalize_projective, restrict, Form, FormSpace, Ruling, SurfacePoint};

pub fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

/// `h⁰` of the tangent-layout system in bidegree `(d1, d2)`.
pub fn h0_tangent<F: Field>(k: &F, d1: usize, d2: usize) -> usize {
    let z = TangentLayout::standard(k).scheme(k, d1, d2).unwrap();
    system(k, FormSpace::Quadric { a: d1, b: d2 }, &z).unwrap().h0
}

/// `y² = x(x−1)⋯(x−2g−1)`.
pub fn split_curve<F: Field>(k: &F, g: usize) -> HyperellipticCurve<F::Elem> {
    let mut f = vec![k.one()];
    for i in 0..(2 * g + 2) as i64 {
        f = upoly::mul(k, &f, &upoly::linear(k, &k.from_i64(i)));
    }
    HyperellipticCurve::new(k, f).unwrap()
}

pub fn projective_line<F: Field>(k: &F) -> Vec<[F::Elem; 2]> {
    let mut out: Vec<[F::Elem; 2]> = k.elements().unwrap().into_iter().map(|a| [k.one(), a]).collect();
    out.push([k.zero(), k.one()]);
    out
}

/// Every rational point of a curve on the quadric, one X-ruling at a time.
/// `None` if the curve contains a ruling.
pub fn quadric_points<F: Field>(k: &F, f: &Form<F::Elem>) -> Option<Vec<SurfacePoint<F::Elem>>> {
    let mut pts = Vec::new();
    for x in projective_line(k) {
        let r = restrict(k, f, &Ruling::QuadricX(x.clone()));
        if r.is_zero(k) {
            return None;
        }
        for y in small_roots(k, &r) {
            pts.push(SurfacePoint::quadric(k, x.clone(), y).unwrap());
        }
    }
    Some(pts)
}

/// Rational roots of a binary form, by the quadratic formula in degree ≤ 2.
pub fn small_roots<F: Field>(k: &F, r: &BinaryForm<F::Elem>) -> Vec<[F::Elem; 2]> {
    let c = r.affine_t(k);
    let mut out = Vec::new();
    if c.len() - 1 < r.degree {
        out.push([k.zero(), k.one()]);
    }
    match c.len() {
        2 => out.push([k.one(), k.neg(&k.div(&c[0], &c[1]).unwrap())]),
        3 => {
            let two_a = k.add(&c[2], &c[2]);
            let disc = k.sub(&k.mul(&c[1], &c[1]), &k.mul(&k.from_i64(2), &k.mul(&two_a, &c[0])));
            if let Some(s) = k.sqrt(&disc) {
                for t in [k.add(&k.neg(&c[1]), &s), k.sub(&k.neg(&c[1]), &s)] {
                    let root = [k.one(), k.div(&t, &two_a).unwrap()];
                    if !out.contains(&root) {
                        out.push(root);
                    }
                }
            }
        }
        n if n > 3 => return rational_roots(k, r),
        _ => {}
    }
    out
}

/// Two distinct points with the same image under the linear projection of
/// P³ from `q`.
pub fn projection_collision<F: Field>(
    k: &F,
    pts: &[SurfacePoint<F::Elem>],
    q: &SurfacePoint<F::Elem>,
) -> Option<[SurfacePoint<F::Elem>; 2]> {
    let proj = Matrix::from_rows(4, kernel(k, &Matrix::from_rows(4, vec![ambient_coords(k, q).to_vec()])));
    let mut seen: HashMap<Vec<F::Elem>, &SurfacePoint<F::Elem>> = HashMap::new();
    for p in pts {
        let img = normalize_projective(k, &mul_vec(k, &proj, &ambient_coords(k, p)))?;
        if let Some(prev) = seen.get(&img) {
            if *prev != p {
                return Some([(*prev).clone(), p.clone()]);
            }
        } else {
            seen.insert(img, p);
        }
    }
    None
}

/// `F_{p²}` from the first monic irreducible `x² − c`.
pub fn quadratic_extension(k: &PrimeField) -> ExtensionField<PrimeField> {
    let p = k.modulus();
    let c = (2..p).find(|c| k.sqrt(c).is_none()).unwrap();
    ExtensionField::new(*k, vec![k.neg(&c), 0, 1]).unwrap()
}

pub fn lift(ext: &ExtensionField<PrimeField>, f: &Form<u64>) -> Form<Vec<u64>> {
    Form { space: f.space, coeffs: f.coeffs.iter().map(|c| ext.embed(c)).collect() }
}

pub fn lift_point(ext: &ExtensionField<PrimeField>, p: &SurfacePoint<u64>) -> SurfacePoint<Vec<u64>> {
    let SurfacePoint::Quadric { x, y } = p else { panic!("expected a quadric point") };
    SurfacePoint::quadric(ext, (*x).map(|c| ext.embed(&c)), (*y).map(|c| ext.embed(&c))).unwrap()
}
