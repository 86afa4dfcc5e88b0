//! Geometric genus by counting ramification of a ruling projection.
//!
//! The curve is projected onto the base of a ruling family, a map of degree
//! `n` to P¹. Over each fiber the defect `n − #(distinct points)` is the
//! ramification there, provided every singular point is unibranch and
//! transverse to the fiber (true for the cusps built in this crate). The
//! Riemann-Hurwitz formula then gives `2g − 2 = −2n + Σ defects`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::closure::distinct_roots_per_branch;
use crate::exactalg::upoly;
use crate::exactalg::{distinct_root_count, resultant, Field, Var};
use crate::surface::{restrict, AffineChart, Form, FormSpace, Ruling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusEstimate {
    pub geometric_genus: i64,
    /// Total defect over all fibers.
    pub ramification: usize,
    pub fiber_degree: usize,
    /// The characteristic exceeds every ramification index.
    pub tame: bool,
}

pub fn fiber_count_genus<F: Field>(k: &F, form: &Form<F::Elem>) -> Result<GenusEstimate> {
    if form.is_zero(k) {
        return Err(Error::ZeroForm);
    }
    k.check_separable(form.total_degree())?;
    let (n, chart, infinity) = match form.space {
        FormSpace::Quadric { b, .. } => {
            (b, AffineChart::Quadric { cx: 0, cy: 0 }, Ruling::QuadricX([k.zero(), k.one()]))
        }
        FormSpace::Cone { d } => {
            if k.is_zero(&form.eval(k, &[k.zero(), k.zero(), k.zero(), k.one()])) {
                return Err(Error::Degenerate("the curve passes through the cone vertex".into()));
            }
            (d, AffineChart::ConeX0, Ruling::Cone([k.zero(), k.one()]))
        }
    };
    if n == 0 {
        return Err(Error::Degenerate("the projection has degree zero".into()));
    }
    let p = chart.dehomogenize(k, form);
    if p.deg_v() != Some(n) {
        return Err(Error::Degenerate("the curve contains a ruling".into()));
    }
    let disc = resultant(k, &p, &p.deriv_v(k), Var::V)?;
    if disc.is_empty() {
        return Err(Error::Degenerate("the form has a repeated factor".into()));
    }
    let lead = p.leading_v().unwrap().clone();
    let h = upoly::squarefree_part(k, &upoly::mul(k, &lead, &disc));

    let mut total = 0usize;
    if h.len() > 1 {
        for br in distinct_roots_per_branch(k, &h, &p) {
            let Some(deg) = br.value.degree else {
                return Err(Error::Degenerate("the curve contains a ruling".into()));
            };
            let points = br.value.distinct + usize::from(deg < n);
            total += (br.modulus.len() - 1) * (n - points);
        }
    }
    let at_infinity = restrict(k, form, &infinity);
    let prof =
        distinct_root_count(k, &at_infinity).map_err(|_| Error::Degenerate("the curve contains a ruling".into()))?;
    total += n - prof.count;

    let twice = total as i64 - 2 * n as i64 + 2;
    if twice % 2 != 0 {
        return Err(Error::Degenerate("odd ramification total; the singularities are not unibranch".into()));
    }
    Ok(GenusEstimate { geometric_genus: twice / 2, ramification: total, fiber_degree: n, tame: true })
}
