use clap::Args;
use quadcusp::exactalg::FieldSpec;
use quadcusp::projection::{census_inner_sets, census_parametrized, RationalCurve};
use quadcusp::surface::Form;
use serde_json::json;

use super::ambient_of;
use crate::report::{prime_only, CliError, RunReport, IRREDUCIBILITY};
use crate::Global;

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long, required_unless_present = "param", conflicts_with = "param")]
    curve: Option<String>,
    #[arg(long)]
    ambient: Option<String>,
    /// Comma-separated binary forms in s, t defining a rational space curve.
    #[arg(long)]
    param: Option<String>,
    /// Also count over F_{p^j} for j up to this cap (1 to 3).
    #[arg(long, default_value_t = 1)]
    extension_cap: usize,
    /// One CSV row per field instead of JSON.
    #[arg(long)]
    csv: bool,
}

pub fn run(a: &CensusArgs, _g: &Global, field: FieldSpec) -> Result<RunReport, CliError> {
    let k = prime_only(field, "census")?;
    let inputs = json!({ "curve": a.curve, "ambient": a.ambient, "param": a.param, "extension_cap": a.extension_cap });
    if let Some(p) = &a.param {
        let forms: Vec<&str> = p.split(',').collect();
        let c = census_parametrized(&k, &RationalCurve::parse(&k, &forms)?)?;
        let mut rep = RunReport::new(inputs, json!(c));
        if a.csv {
            rep.csv = Some(format!(
                "field,params_checked,singular_params,a_count,b_count\n{},{},{},{},{}\n",
                c.field, c.params_checked, c.singular_params, c.a_count, c.b_count
            ));
        }
        return Ok(rep);
    }
    let text = a.curve.as_deref().unwrap_or_default();
    let f = Form::parse(&k, ambient_of(a.ambient.as_deref(), text)?, text)?;
    let sets = census_inner_sets(&k, &f, a.extension_cap)?;
    let mut rep = RunReport::new(inputs, json!(sets)).warn(IRREDUCIBILITY);
    if a.csv {
        let mut out = String::from("field,field_size,points_on_curve,smooth_points,vertex_on_curve,a_count,b_count,b_literal_count,full_contact_count,b_subset_a\n");
        for s in &sets {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                s.field,
                s.field_size,
                s.points_on_curve,
                s.smooth_points,
                s.vertex_on_curve,
                s.a_members.len(),
                s.b_members.len(),
                s.b_literal_count,
                s.full_contact_count,
                s.b_subset_a
            ));
        }
        rep.csv = Some(out);
    }
    Ok(rep)
}
