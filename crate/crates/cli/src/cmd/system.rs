use clap::{ArgGroup, Args};
use quadcusp::exactalg::{Field, FieldSpec};
use quadcusp::linsys::system;
use quadcusp::surface::{Ambient, FormSpace};
use quadcusp::zeroschemes::ZeroScheme;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::construct::system_json;
use crate::report::{with_field, CliError, RunReport};
use crate::scheme::parse_scheme;
use crate::Global;

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("surface").required(true).args(["quadric", "cone"])))]
pub struct SystemArgs {
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    quadric: Option<Vec<usize>>,
    #[arg(long)]
    cone: Option<usize>,
    /// Repeatable; the union of all schemes is imposed.
    #[arg(long)]
    scheme: Vec<String>,
    /// Include the kernel basis in the report.
    #[arg(long)]
    basis: bool,
}

pub fn run(a: &SystemArgs, g: &Global, field: FieldSpec) -> Result<RunReport, CliError> {
    with_field!(field, |k| build(k, a, g))
}

fn build<F: Field>(k: &F, a: &SystemArgs, g: &Global) -> Result<RunReport, CliError> {
    let (space, ambient, degree) = match (&a.quadric, a.cone) {
        (Some(q), _) => (FormSpace::Quadric { a: q[0], b: q[1] }, Ambient::SmoothQuadric, json!(q)),
        (None, Some(d)) => (FormSpace::Cone { d }, Ambient::Cone, json!(d)),
        (None, None) => unreachable!("clap requires one surface"),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let mut z = ZeroScheme::empty(ambient);
    for s in &a.scheme {
        z = z.union(&parse_scheme(k, ambient, s, &mut rng)?)?;
    }
    let sys = system(k, space, &z)?;
    let name = match ambient {
        Ambient::SmoothQuadric => "smooth_quadric",
        Ambient::Cone => "cone",
    };
    let mut result = json!({
        "system": system_json(k, name, degree, &z, sys.h0, sys.h1),
        "scheme_degree": z.degree(),
        "ambient_dimension": space.dim(),
    });
    if a.basis {
        result["basis"] = json!(sys.basis.iter().map(|f| f.format(k)).collect::<Vec<_>>());
    }
    Ok(RunReport::new(json!({ "quadric": a.quadric, "cone": a.cone, "scheme": a.scheme }), result))
}
