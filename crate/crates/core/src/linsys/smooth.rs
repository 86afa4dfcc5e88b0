//! Chart-by-chart smoothness certificates.
//!
//! In each affine chart the singular points of `f` lie over the roots of
//! `g = gcd(Res_v(f, f_u), Res_v(f, f_v))`. The fibers over those roots are
//! examined by dynamic evaluation over `K[u]/(sqfree g)`, so roots outside
//! the base field are handled without building extensions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exactalg::closure::{common_root_branches, rem_v};
use crate::exactalg::upoly::{self, Poly};
use crate::exactalg::{resultant, BiPoly, Field, Var};
use crate::surface::{AffineChart, Ambient, Form, SurfacePoint};

const SAMPLE_BUDGET: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Smooth,
    Singular,
    Inconclusive,
}

/// Per-chart data backing the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartCertificate {
    pub chart: String,
    pub deg_v: Option<usize>,
    /// Degree of `gcd(R1, R2)`; `None` when both resultants vanish.
    pub resultant_gcd_degree: Option<usize>,
    /// Degree of the squarefree candidate polynomial in `u`.
    pub candidate_degree: usize,
    pub excised_points: usize,
    pub method: &'static str,
    pub verdict: Verdict,
}

/// A singular point, possibly over an extension: `u` is a root of
/// `u_modulus` and `v` a root of `v_factor` over `K[u]/(u_modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularWitness<E> {
    pub chart: AffineChart,
    pub u_modulus: Poly<E>,
    pub v_factor: BiPoly<E>,
    /// The point itself when it is rational over the base field.
    pub point: Option<SurfacePoint<E>>,
    /// `f`, `f_u`, `f_v` reduce to zero modulo the witness.
    pub verified: bool,
}

impl<E: Clone + Eq + std::fmt::Debug> SingularWitness<E> {
    pub fn describe<F: Field<Elem = E>>(&self, k: &F) -> String {
        if let Some(p) = &self.point {
            return format!("{} in chart {}", p.format(k), self.chart.name());
        }
        let rows: Vec<String> = self
            .v_factor
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .map(|(j, r)| format!("({})*v^{j}", upoly::format(k, r, "u")))
            .collect();
        format!(
            "u root of {}, v root of {} in chart {}",
            upoly::format(k, &self.u_modulus, "u"),
            rows.join("+"),
            self.chart.name()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport<E> {
    pub verdict: Verdict,
    pub charts_checked: Vec<ChartCertificate>,
    pub witness: Option<SingularWitness<E>>,
    /// Cone only: whether the vertex `(0:0:0:1)` lies on the curve.
    pub vertex_on_curve: Option<bool>,
}

struct ChartData<E> {
    chart: AffineChart,
    f: BiPoly<E>,
    fu: BiPoly<E>,
    fv: BiPoly<E>,
}

impl<E: Clone + Eq + std::fmt::Debug> ChartData<E> {
    fn verify<F: Field<Elem = E>>(&self, k: &F, m: &[E], g: &BiPoly<E>) -> bool {
        if g.deg_v().unwrap_or(0) == 0 {
            return false;
        }
        [&self.f, &self.fu, &self.fv].iter().all(|p| rem_v(k, m, p, g).is_zero())
    }

    fn witness<F: Field<Elem = E>>(&self, k: &F, m: Poly<E>, g: BiPoly<E>) -> SingularWitness<E> {
        let verified = self.verify(k, &m, &g);
        let point = if m.len() == 2 {
            let a = k.neg(&k.div(&m[0], &m[1]).unwrap());
            let gv: Poly<E> = g.eval_u(k, &a);
            upoly::roots(k, &gv).first().map(|b| self.chart.point_at(k, &a, b))
        } else {
            None
        };
        SingularWitness { chart: self.chart, u_modulus: m, v_factor: g, point, verified }
    }
}

fn sample_points<F: Field>(k: &F) -> Vec<F::Elem> {
    if let Some(all) = k.elements() {
        if all.len() <= SAMPLE_BUDGET {
            return all;
        }
    }
    if k.order().is_none() {
        return (-20..=20).map(|n| k.from_i64(n)).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    (0..SAMPLE_BUDGET).map(|_| k.random(&mut rng)).collect()
}

/// Singular fiber search at sampled `u = α`, used when both resultants
/// vanish identically.
fn sample_witness<F: Field>(k: &F, c: &ChartData<F::Elem>) -> Option<SingularWitness<F::Elem>> {
    for a in sample_points(k) {
        let polys = [c.f.eval_u(k, &a), c.fu.eval_u(k, &a), c.fv.eval_u(k, &a)];
        let g = upoly::gcd_many(k, &polys);
        if g.len() > 1 {
            let m = upoly::linear(k, &a);
            return Some(c.witness(k, m, BiPoly::from_v(k, &g)));
        }
    }
    None
}

/// Removes every factor `(v − b)` from a univariate polynomial.
fn strip_root<F: Field>(k: &F, mut g: Poly<F::Elem>, b: &F::Elem) -> Poly<F::Elem> {
    let lin = upoly::linear(k, b);
    while g.len() > 1 && k.is_zero(&upoly::eval(k, &g, b)) {
        g = upoly::div_exact(k, &g, &lin).unwrap();
    }
    g
}

fn check_chart<F: Field>(
    k: &F,
    form: &Form<F::Elem>,
    chart: AffineChart,
    excised: &[SurfacePoint<F::Elem>],
) -> Result<(ChartCertificate, Option<SingularWitness<F::Elem>>)> {
    let f = chart.dehomogenize(k, form);
    let c = ChartData { chart, fu: f.deriv_u(k), fv: f.deriv_v(k), f };
    let holes: Vec<(F::Elem, F::Elem)> = excised.iter().filter_map(|p| chart.coords_of(k, p)).collect();
    let mut cert = ChartCertificate {
        chart: chart.name(),
        deg_v: c.f.deg_v(),
        resultant_gcd_degree: None,
        candidate_degree: 0,
        excised_points: holes.len(),
        method: "resultant",
        verdict: Verdict::Smooth,
    };

    // candidate polynomial in u whose roots carry every singular point
    let g = match c.f.deg_v() {
        None | Some(0) if c.f.rows.first().is_none_or(|r| r.len() <= 1) => {
            cert.method = "constant";
            return Ok((cert, None));
        }
        Some(0) => {
            // a union of fibers u = const; a repeated one is singular along its length
            cert.method = "univariate";
            let p = &c.f.rows[0];
            let rep = upoly::squarefree_part(k, &upoly::gcd(k, p, &upoly::derivative(k, p)));
            cert.candidate_degree = upoly::degree(&rep).unwrap_or(0);
            if rep.len() > 1 {
                cert.verdict = Verdict::Singular;
                let v = BiPoly::from_v(k, &[k.zero(), k.one()]);
                return Ok((cert, Some(c.witness(k, rep, v))));
            }
            return Ok((cert, None));
        }
        _ => {
            let r1 = resultant(k, &c.f, &c.fu, Var::V)?;
            let r2 = resultant(k, &c.f, &c.fv, Var::V)?;
            upoly::gcd(k, &r1, &r2)
        }
    };
    if g.is_empty() {
        // a repeated factor of positive v-degree
        cert.method = "sampling";
        let w = sample_witness(k, &c);
        cert.verdict = if w.is_some() { Verdict::Singular } else { Verdict::Inconclusive };
        return Ok((cert, w));
    }
    cert.resultant_gcd_degree = upoly::degree(&g);
    let mut h = upoly::squarefree_part(k, &g);
    cert.candidate_degree = upoly::degree(&h).unwrap_or(0);
    if h.len() <= 1 {
        return Ok((cert, None));
    }

    // excised fibers are examined over the base field
    for (a, b) in &holes {
        if !k.is_zero(&upoly::eval(k, &h, a)) {
            continue;
        }
        h = upoly::div_exact(k, &h, &upoly::linear(k, a)).unwrap();
        let polys = [c.f.eval_u(k, a), c.fu.eval_u(k, a), c.fv.eval_u(k, a)];
        let rest = strip_root(k, upoly::gcd_many(k, &polys), b);
        if rest.len() > 1 {
            cert.verdict = Verdict::Singular;
            return Ok((cert, Some(c.witness(k, upoly::linear(k, a), BiPoly::from_v(k, &rest)))));
        }
    }
    if h.len() <= 1 {
        return Ok((cert, None));
    }
    let branches = common_root_branches(k, &h, &[c.f.clone(), c.fu.clone(), c.fv.clone()]);
    if let Some(br) = branches.into_iter().next() {
        cert.verdict = Verdict::Singular;
        return Ok((cert, Some(c.witness(k, br.modulus, br.value))));
    }
    Ok((cert, None))
}

/// Certifies smoothness of the curve `form = 0` away from the excised
/// points (and away from the cone vertex).
pub fn smoothness_certificate<F: Field>(
    k: &F,
    form: &Form<F::Elem>,
    excised: &[SurfacePoint<F::Elem>],
) -> Result<SmoothnessReport<F::Elem>> {
    if form.is_zero(k) {
        return Err(crate::error::Error::ZeroForm);
    }
    k.check_separable(form.total_degree())?;
    let ambient = form.space.ambient();
    let mut report =
        SmoothnessReport { verdict: Verdict::Smooth, charts_checked: Vec::new(), witness: None, vertex_on_curve: None };
    if ambient == Ambient::Cone {
        let vertex = [k.zero(), k.zero(), k.zero(), k.one()];
        report.vertex_on_curve = Some(k.is_zero(&form.eval(k, &vertex)));
    }
    for chart in AffineChart::covering(ambient) {
        let (cert, w) = check_chart(k, form, chart, excised)?;
        match cert.verdict {
            Verdict::Singular if report.witness.is_none() => {
                report.verdict = Verdict::Singular;
                report.witness = w;
            }
            Verdict::Inconclusive if report.verdict == Verdict::Smooth => report.verdict = Verdict::Inconclusive,
            _ => {}
        }
        report.charts_checked.push(cert);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;
    use crate::surface::FormSpace;
    use rand::Rng;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn quadric(k: &PrimeField, s: &str) -> Form<u64> {
        Form::parse(k, Ambient::SmoothQuadric, s).unwrap()
    }

    /// Rational singular points by exhaustive search in every chart.
    fn brute_singular(k: &PrimeField, f: &Form<u64>) -> Vec<SurfacePoint<u64>> {
        let mut out = Vec::new();
        for chart in AffineChart::covering(f.space.ambient()) {
            let g = chart.dehomogenize(k, f);
            let (gu, gv) = (g.deriv_u(k), g.deriv_v(k));
            for a in 0..k.modulus() {
                for b in 0..k.modulus() {
                    if [&g, &gu, &gv].iter().all(|p| p.eval(k, &a, &b) == 0) {
                        out.push(chart.point_at(k, &a, &b));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn twisted_cubic_is_smooth() {
        let k = k();
        let r = smoothness_certificate(&k, &quadric(&k, "x0*y1^2 - x1*y0^2"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Smooth);
        assert_eq!(r.charts_checked.len(), 4);
    }

    #[test]
    fn square_is_singular_with_verified_witness() {
        let k = k();
        let f = quadric(&k, "x0^2*y1^2 - 2*x0*x1*y0*y1 + x1^2*y0^2");
        let r = smoothness_certificate(&k, &f, &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Singular);
        let w = r.witness.unwrap();
        assert!(w.verified);
        let p = w.point.unwrap();
        assert_eq!(f.eval_at(&k, &p), 0);
    }

    #[test]
    fn node_is_found_and_excision_removes_it() {
        let k = k();
        // two (1,1) curves meeting transversally in two points
        let f = quadric(&k, "x0^2*y0*y1 + 2*x0*x1*y0^2 + x0*x1*y1^2 + 2*x1^2*y0*y1");
        let sing = brute_singular(&k, &f);
        let r = smoothness_certificate(&k, &f, &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Singular);
        let w = r.witness.unwrap();
        assert!(w.verified);
        if let Some(p) = w.point {
            assert!(sing.contains(&p));
        }
        let mut holes = sing.clone();
        holes.sort();
        holes.dedup();
        if holes.len() == 2 {
            assert_eq!(smoothness_certificate(&k, &f, &holes).unwrap().verdict, Verdict::Smooth);
        }
    }

    #[test]
    fn conjugate_node_needs_no_extension() {
        let k = PrimeField::new(7).unwrap();
        // (x0^2 + x1^2)(y0^2 + y1^2): four singular points, all over F_49
        let g = quadric(&k, "x0^2*y0^2 + x0^2*y1^2 + x1^2*y0^2 + x1^2*y1^2");
        assert!(brute_singular(&k, &g).is_empty());
        let r = smoothness_certificate(&k, &g, &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Singular);
        let w = r.witness.unwrap();
        assert!(w.verified);
        assert!(w.point.is_none());
    }

    #[test]
    fn verdict_agrees_with_exhaustive_search() {
        let k = PrimeField::new(13).unwrap();
        let space = FormSpace::Quadric { a: 2, b: 2 };
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let mut f = Form::zero(&k, space);
            for c in f.coeffs.iter_mut() {
                *c = rng.gen_range(0..13);
            }
            if f.is_zero(&k) {
                continue;
            }
            let r = smoothness_certificate(&k, &f, &[]).unwrap();
            if !brute_singular(&k, &f).is_empty() {
                assert_eq!(r.verdict, Verdict::Singular);
            }
            if r.verdict == Verdict::Singular {
                assert!(r.witness.unwrap().verified);
            }
        }
    }

    #[test]
    fn verdict_is_stable_under_swapping_factors() {
        let k = k();
        let f = quadric(&k, "x0^2*y1^3 + 3*x0*x1*y0^3 - x1^2*y0*y1^2 + 7*x0^2*y0^2*y1");
        let g = quadric(&k, "y0^2*x1^3 + 3*y0*y1*x0^3 - y1^2*x0*x1^2 + 7*y0^2*x0^2*x1");
        let a = smoothness_certificate(&k, &f, &[]).unwrap().verdict;
        let b = smoothness_certificate(&k, &g, &[]).unwrap().verdict;
        assert_eq!(a, b);
    }

    #[test]
    fn cone_charts_and_vertex() {
        let k = k();
        let f = Form::parse(&k, Ambient::Cone, "X3^2 - X0^2 - X2^2").unwrap();
        let r = smoothness_certificate(&k, &f, &[]).unwrap();
        assert_eq!(r.charts_checked.len(), 2);
        assert_eq!(r.vertex_on_curve, Some(false));
        assert_eq!(r.verdict, Verdict::Smooth);
        let g = Form::parse(&k, Ambient::Cone, "X0*X3 - X1^2").unwrap();
        assert_eq!(smoothness_certificate(&k, &g, &[]).unwrap().vertex_on_curve, Some(true));
    }

    #[test]
    fn small_characteristic_is_rejected() {
        let k = PrimeField::new(3).unwrap();
        let f = quadric(&k, "x0^2*y1^2 + x1^2*y0^2 + x0*x1*y0*y1");
        assert!(matches!(smoothness_certificate(&k, &f, &[]), Err(crate::error::Error::SmallCharacteristic { .. })));
    }
}
