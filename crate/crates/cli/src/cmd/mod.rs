pub mod census;
pub mod construct;
pub mod formulas;
pub mod hyper;
pub mod project;
pub mod system;

use quadcusp::exactalg::Field;
use quadcusp::linsys::SmoothnessReport;
use quadcusp::surface::Ambient;
use serde_json::{json, Value};

pub fn smoothness_json<F: Field>(k: &F, r: &SmoothnessReport<F::Elem>) -> Value {
    json!({
        "verdict": r.verdict,
        "charts": r.charts_checked,
        "witness": r.witness.as_ref().map(|w| w.describe(k)),
        "vertex_on_curve": r.vertex_on_curve,
    })
}

/// The ambient named on the command line, or the one whose variables the
/// polynomial uses.
pub fn ambient_of(flag: Option<&str>, poly: &str) -> Result<Ambient, crate::report::CliError> {
    match flag {
        Some("quadric") => Ok(Ambient::SmoothQuadric),
        Some("cone") => Ok(Ambient::Cone),
        Some(other) => Err(crate::report::CliError::Usage(format!("unknown ambient '{other}'"))),
        None if poly.contains('X') => Ok(Ambient::Cone),
        None => Ok(Ambient::SmoothQuadric),
    }
}
