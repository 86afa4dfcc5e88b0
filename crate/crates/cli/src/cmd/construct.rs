use clap::{ArgGroup, Args};
use quadcusp::exactalg::{Field, FieldSpec};
use quadcusp::linsys::{
    construct_cone_curve, construct_cuspidal_curve, construct_smooth_tangent_curve, default_cone_point,
    fiber_count_genus, TangentLayout,
};
use quadcusp::projection::outer_injectivity_quadric;
use quadcusp::surface::{parse_point, Ambient};
use serde_json::{json, Value};

use super::smoothness_json;
use crate::report::{with_field, CliError, RunReport, EXPERIMENTAL, IRREDUCIBILITY};
use crate::Global;

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("surface").required(true).args(["quadric", "cone"])))]
pub struct ConstructArgs {
    /// Bidegree on the smooth quadric.
    #[arg(long, num_args = 2, value_names = ["D1", "D2"])]
    quadric: Option<Vec<usize>>,
    /// Degree on the cone.
    #[arg(long)]
    cone: Option<usize>,
    /// Orders of the two cusps (A_2alpha and A_2beta).
    #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"], requires = "quadric")]
    cusps: Option<Vec<usize>>,
    /// Base point of the ruling divisor on the cone, `(a:b:c:d)`.
    #[arg(long, requires = "cone")]
    point: Option<String>,
}

pub fn run(a: &ConstructArgs, g: &Global, field: FieldSpec) -> Result<RunReport, CliError> {
    with_field!(field, |k| build(k, a, g))
}

fn build<F: Field>(k: &F, a: &ConstructArgs, g: &Global) -> Result<RunReport, CliError> {
    let inputs =
        json!({ "quadric": a.quadric, "cone": a.cone, "cusps": a.cusps, "point": a.point, "retries": g.retries });
    if let Some(d) = a.cone {
        let p = match &a.point {
            Some(s) => parse_point(k, Ambient::Cone, s)?,
            None => default_cone_point(k),
        };
        let r = construct_cone_curve(k, d, &p, g.seed, g.retries)?;
        let result = json!({
            "system": system_json(k, "cone", json!(d), &r.scheme, r.h0, r.h1),
            "member": r.member.format(k),
            "certificates": {
                "smooth": smoothness_json(k, &r.smoothness),
                "tangency": [r.ruling],
                "vertex": { "avoided": r.vertex_avoided },
            },
            "genus": { "closed_form": r.closed_form_genus, "fiber_count": r.genus_estimate },
            "attempts": r.attempts,
            "retries": g.retries,
        });
        return Ok(RunReport::new(inputs, result));
    }
    let dims = a.quadric.as_deref().unwrap_or_default();
    let (d1, d2) = (dims[0], dims[1]);
    if let Some(c) = &a.cusps {
        let r = construct_cuspidal_curve(k, d1, d2, c[0], c[1], g.seed, g.retries)?;
        let result = json!({
            "system": system_json(k, "smooth_quadric", json!([d1, d2]), &r.scheme, r.h0, r.h1),
            "member": r.member.format(k),
            "certificates": {
                "smooth": smoothness_json(k, &r.smoothness),
                "tangency": r.tangency,
                "cusp_normal_form": [r.cusp_a, r.cusp_b],
            },
            "genus": { "target": r.target_genus, "fiber_count": r.genus_estimate },
            "experimental": r.experimental,
            "notes": r.notes,
            "attempts": r.attempts,
            "retries": g.retries,
        });
        let mut rep = RunReport::new(inputs, result).warn(IRREDUCIBILITY);
        if r.experimental {
            rep = rep.warn(EXPERIMENTAL);
        }
        return Ok(rep);
    }
    let layout = TangentLayout::standard(k);
    let r = construct_smooth_tangent_curve(k, d1, d2, &layout, g.seed, g.retries)?;
    let q = layout.q(k)?;
    let proj = outer_injectivity_quadric(k, &r.member, &q)?;
    let genus = fiber_count_genus(k, &r.member).ok();
    let result = json!({
        "system": system_json(k, "smooth_quadric", json!([d1, d2]), &r.scheme, r.h0, r.h1),
        "member": r.member.format(k),
        "certificates": {
            "smooth": smoothness_json(k, &r.smoothness),
            "tangency": r.tangency,
            "projection": { "center": q.format(k), "injective": proj.injective, "rulings": proj.rulings },
        },
        "genus": { "expected": (d1 as i64 - 1) * (d2 as i64 - 1), "fiber_count": genus },
        "attempts": r.attempts,
        "retries": g.retries,
    });
    Ok(RunReport::new(inputs, result))
}

pub fn system_json<F: Field>(
    k: &F,
    ambient: &str,
    degree: Value,
    scheme: &quadcusp::zeroschemes::ZeroScheme<F::Elem>,
    h0: usize,
    h1: usize,
) -> Value {
    json!({ "ambient": ambient, "degree": degree, "scheme": scheme.describe(k), "h0": h0, "h1": h1 })
}
