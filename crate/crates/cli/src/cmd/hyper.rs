use clap::Args;
use quadcusp::exactalg::{Field, FieldSpec};
use quadcusp::hyperell::{
    base_locus, classify_series, find_generic_point, h0_effective, h1_dual_rank, h1_effective, injective_g2_pipeline,
    parse_divisor, rr_space, weierstrass_points, HPoint, HyperellipticCurve,
};
use quadcusp::Error;
use serde_json::json;

use crate::report::{with_field, CliError, RunReport};
use crate::Global;

#[derive(Args, Debug)]
pub struct HyperArgs {
    /// Right-hand side of `y^2 = f(x)`, of even degree at least 6.
    #[arg(long)]
    f: String,
    /// Effective divisor such as `2*(0,0) + (6,y+)`.
    #[arg(long, conflicts_with = "pipeline")]
    divisor: Option<String>,
    /// Classify the complete series of the divisor.
    #[arg(long, requires = "divisor")]
    classify: bool,
    /// Run the plane-model pipeline for `2o + (g+1)p`.
    #[arg(long)]
    pipeline: bool,
    /// x-coordinate of the Weierstrass point `o`; the first rational one by default.
    #[arg(long, requires = "pipeline")]
    o: Option<String>,
    /// The point `p` as `(x,y)`; drawn from the seed by default.
    #[arg(long, requires = "pipeline")]
    p: Option<String>,
}

pub fn run(a: &HyperArgs, g: &Global, field: FieldSpec) -> Result<RunReport, CliError> {
    with_field!(field, |k| build(k, a, g))
}

fn point<F: Field>(k: &F, c: &HyperellipticCurve<F::Elem>, s: &str) -> Result<HPoint<F::Elem>, CliError> {
    let d = parse_divisor(k, c, s)?;
    match d.support.as_slice() {
        [(p, 1)] => Ok(p.clone()),
        _ => Err(CliError::Usage(format!("'{s}' is not a single point"))),
    }
}

fn build<F: Field>(k: &F, a: &HyperArgs, g: &Global) -> Result<RunReport, CliError> {
    if k.characteristic() == 2 {
        return Err(Error::EvenCharacteristic.into());
    }
    let inputs =
        json!({ "f": a.f, "divisor": a.divisor, "classify": a.classify, "pipeline": a.pipeline, "o": a.o, "p": a.p });
    let c = HyperellipticCurve::parse(k, &a.f)?;
    let w = weierstrass_points(k, &c);
    let curve = json!({
        "model": c.format(k),
        "genus": c.genus,
        "weierstrass_points": w.points.iter().map(|p| p.format(k)).collect::<Vec<_>>(),
        "weierstrass_in_extensions": w.in_extensions,
        "factor_degrees": w.factor_degrees,
    });
    if let Some(text) = &a.divisor {
        let d = parse_divisor(k, &c, text)?;
        let space = rr_space(k, &c, &d)?;
        let base = if space.dimension > 0 { Some(base_locus(k, &c, &space)?.format(k)) } else { None };
        let class = if a.classify { Some(classify_series(k, &c, &d)?) } else { None };
        let result = json!({
            "curve": curve,
            "divisor": d.format(k),
            "degree": d.degree(),
            "h0": h0_effective(k, &c, &d),
            "h1": h1_effective(k, &c, &d),
            "h1_dual_rank": h1_dual_rank(k, &c, &d),
            "basis": (0..space.dimension).map(|i| space.format_section(k, i)).collect::<Vec<_>>(),
            "base_locus": base,
            "classification": class,
        });
        return Ok(RunReport::new(inputs, result));
    }
    if a.pipeline {
        let o = match &a.o {
            Some(x) => HPoint::new(k, &c, quadcusp::parse::parse_elem(k, x)?, k.zero())?,
            None => w.points.first().cloned().ok_or(CliError::Core(Error::NotWeierstrass))?,
        };
        let p = match &a.p {
            Some(s) => point(k, &c, s)?,
            None => find_generic_point(k, &c, g.seed)?,
        };
        let r = injective_g2_pipeline(k, &c, &o, &p)?;
        return Ok(RunReport::new(inputs, json!({ "curve": curve, "pipeline": r })));
    }
    Ok(RunReport::new(inputs, json!({ "curve": curve })))
}
