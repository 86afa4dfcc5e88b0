//! Linear systems of curves through a zero-dimensional scheme.
//!
//! `h⁰` is the kernel dimension of the scheme's condition matrix and `h¹`
//! the number of dependent conditions, so that `h⁰ − h¹ = N − deg Z` with
//! `N` the dimension of the ambient form space.

mod construct;
mod genus;
mod smooth;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{matrix, Field};
use crate::surface::{Form, FormSpace};
use crate::zeroschemes::{condition_matrix, ZeroScheme};

pub use construct::{
    construct_cone_curve, construct_cuspidal_curve, construct_smooth_tangent_curve, cuspidal_layout,
    default_cone_point, ConeCurveReport, CuspLayout, CuspidalCurveReport, TangencyCheck, TangentCurveReport,
    TangentLayout, DEFAULT_RETRIES, PAPER_DEGREE_THRESHOLD,
};
pub use genus::{fiber_count_genus, GenusEstimate};
pub use smooth::{smoothness_certificate, ChartCertificate, SingularWitness, SmoothnessReport, Verdict};

#[derive(Clone, Debug)]
pub struct LinearSystem<E> {
    pub space: FormSpace,
    pub scheme: ZeroScheme<E>,
    pub basis: Vec<Form<E>>,
    pub h0: usize,
    pub h1: usize,
}

/// `|I_Z(space)|` by exact elimination.
pub fn system<F: Field>(k: &F, space: FormSpace, z: &ZeroScheme<F::Elem>) -> Result<LinearSystem<F::Elem>> {
    let m = condition_matrix(k, z, space)?;
    let basis: Vec<Form<F::Elem>> = matrix::kernel(k, &m).into_iter().map(|coeffs| Form { space, coeffs }).collect();
    let h0 = basis.len();
    // rank = deg Z − h1
    let h1 = z.degree() + h0 - space.dim();
    Ok(LinearSystem { space, scheme: z.clone(), basis, h0, h1 })
}

/// `h¹(I_Z(space)) = 0`, from the rank alone.
pub fn h1_vanishing_probe<F: Field>(k: &F, space: FormSpace, z: &ZeroScheme<F::Elem>) -> Result<bool> {
    let m = condition_matrix(k, z, space)?;
    Ok(matrix::rank(k, &m) == z.degree())
}

/// `h¹` from the rank alone.
pub fn h1_of<F: Field>(k: &F, space: FormSpace, z: &ZeroScheme<F::Elem>) -> Result<usize> {
    let m = condition_matrix(k, z, space)?;
    Ok(z.degree() - matrix::rank(k, &m))
}

/// A seeded random combination of the basis.
pub fn random_member<F: Field>(k: &F, s: &LinearSystem<F::Elem>, seed: u64) -> Result<Form<F::Elem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_member_with(k, s, &mut rng)
}

pub fn random_member_with<F: Field>(
    k: &F,
    s: &LinearSystem<F::Elem>,
    rng: &mut dyn rand::RngCore,
) -> Result<Form<F::Elem>> {
    if s.h0 == 0 {
        return Err(Error::EmptySystem);
    }
    let terms: Vec<(F::Elem, &Form<F::Elem>)> = s.basis.iter().map(|b| (k.random(rng), b)).collect();
    Ok(Form::combine(k, s.space, &terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;
    use crate::surface::{Ambient, RulingClass, SurfacePoint};
    use crate::zeroschemes::{cusp_scheme, ruling_divisor_through, satisfies};

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn empty_scheme_gives_full_space() {
        let s = system(&k(), FormSpace::Quadric { a: 1, b: 1 }, &ZeroScheme::empty(Ambient::SmoothQuadric)).unwrap();
        assert_eq!((s.h0, s.h1), (4, 0));
    }

    #[test]
    fn tangent_configuration_two_three() {
        let k = k();
        let o = SurfacePoint::quadric(&k, [1, 0], [0, 1]).unwrap();
        let o2 = SurfacePoint::quadric(&k, [0, 1], [1, 0]).unwrap();
        let z = ruling_divisor_through(&k, RulingClass::X, &o, 3)
            .unwrap()
            .union(&ruling_divisor_through(&k, RulingClass::Y, &o2, 2).unwrap())
            .unwrap();
        let s = system(&k, FormSpace::Quadric { a: 2, b: 3 }, &z).unwrap();
        assert_eq!((s.h0, s.h1), (7, 0));
        let f = random_member(&k, &s, 0).unwrap();
        assert!(satisfies(&k, &z, &f).unwrap());
        assert_eq!(f, random_member(&k, &s, 0).unwrap());
    }

    #[test]
    fn cone_ruling_system() {
        let k = k();
        let p = SurfacePoint::cone(&k, [1, 0, 0, 0]).unwrap();
        let z = ruling_divisor_through(&k, RulingClass::ConeLine, &p, 2).unwrap();
        let s = system(&k, FormSpace::Cone { d: 2 }, &z).unwrap();
        assert_eq!((s.h0, s.h1), (7, 0));
    }

    #[test]
    fn overfull_scheme_has_h1() {
        let k = k();
        let p = SurfacePoint::quadric(&k, [1, 2], [1, 3]).unwrap();
        let z = cusp_scheme(&k, &p, [1, 1], 1).unwrap();
        // 5 conditions on a 4-dimensional space
        assert!(!h1_vanishing_probe(&k, FormSpace::Quadric { a: 1, b: 1 }, &z).unwrap());
        let s = system(&k, FormSpace::Quadric { a: 1, b: 1 }, &z).unwrap();
        assert_eq!(s.h0 as i64 - s.h1 as i64, 4 - 5);
    }

    #[test]
    fn empty_system_has_no_member() {
        let k = k();
        let p = SurfacePoint::quadric(&k, [1, 2], [1, 3]).unwrap();
        let z = ruling_divisor_through(&k, RulingClass::X, &p, 2).unwrap();
        let s = system(&k, FormSpace::Quadric { a: 0, b: 1 }, &z).unwrap();
        assert_eq!(s.h0, 0);
        assert_eq!(random_member(&k, &s, 1), Err(Error::EmptySystem));
    }
}
