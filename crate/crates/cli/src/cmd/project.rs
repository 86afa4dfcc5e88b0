use clap::{ArgGroup, Args};
use quadcusp::exactalg::{Field, FieldSpec};
use quadcusp::parse::parse_projective;
use quadcusp::projection::{
    inner_membership_cone, inner_membership_parametrized, inner_membership_quadric, outer_injectivity,
    parametrized_injectivity, RationalCurve,
};
use quadcusp::surface::{parse_point, Ambient, Form};
use serde_json::json;

use super::ambient_of;
use crate::report::{with_field, CliError, RunReport, IRREDUCIBILITY};
use crate::Global;

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["center", "inner", "param"])))]
pub struct ProjectArgs {
    /// Curve equation in x0,x1,y0,y1 (quadric) or X0..X3 (cone).
    #[arg(long, required_unless_present = "param")]
    curve: Option<String>,
    /// `quadric` or `cone`; inferred from the variables when omitted.
    #[arg(long)]
    ambient: Option<String>,
    /// Outer projection from this surface point.
    #[arg(long)]
    center: Option<String>,
    /// Inner projection from this curve point.
    #[arg(long)]
    inner: Option<String>,
    /// Comma-separated binary forms in s, t defining a rational curve.
    #[arg(long, conflicts_with = "curve")]
    param: Option<String>,
    /// Parameter `(s:t)` for the inner projection of a parametrized space curve.
    #[arg(long, requires = "param")]
    at: Option<String>,
}

pub fn run(a: &ProjectArgs, _g: &Global, field: FieldSpec) -> Result<RunReport, CliError> {
    with_field!(field, |k| build(k, a))
}

fn build<F: Field>(k: &F, a: &ProjectArgs) -> Result<RunReport, CliError> {
    let inputs = json!({ "curve": a.curve, "ambient": a.ambient, "center": a.center, "inner": a.inner, "param": a.param, "at": a.at });
    if let Some(p) = &a.param {
        let forms: Vec<&str> = p.split(',').collect();
        let curve = RationalCurve::parse(k, &forms)?;
        let report = parametrized_injectivity(k, &curve)?;
        let inner = match &a.at {
            Some(st) => {
                let v = parse_projective(st)?;
                if v.len() != 2 {
                    return Err(CliError::Usage(format!("'{st}' is not a point (s:t)")));
                }
                let st = [k.from_rational(&v[0])?, k.from_rational(&v[1])?];
                let (in_a, in_b) = inner_membership_parametrized(k, &curve, &st)?;
                Some(json!({ "in_a": in_a, "in_b": in_b }))
            }
            None => None,
        };
        let result = json!({ "mode": "parametrized", "degree": curve.degree(), "report": report, "inner": inner });
        return Ok(RunReport::new(inputs, result));
    }
    let text = a.curve.as_deref().unwrap_or_default();
    let ambient = ambient_of(a.ambient.as_deref(), text)?;
    let f = Form::parse(k, ambient, text)?;
    let result = if let Some(c) = &a.center {
        let q = parse_point(k, ambient, c)?;
        let v = outer_injectivity(k, &f, &q)?;
        json!({
            "mode": "outer",
            "center": q.format(k),
            "injective": v.injective,
            "rulings": v.rulings,
            "failure_witness": v.failure_witness.map(|w| [w[0].format(k), w[1].format(k)]),
            "witness_note": v.witness_note,
        })
    } else {
        let o = parse_point(k, ambient, a.inner.as_deref().unwrap_or_default())?;
        let m = match ambient {
            Ambient::SmoothQuadric => inner_membership_quadric(k, &f, &o)?,
            Ambient::Cone => inner_membership_cone(k, &f, &o)?,
        };
        json!({ "mode": "inner", "point": o.format(k), "membership": m })
    };
    Ok(RunReport::new(inputs, result).warn(IRREDUCIBILITY))
}
