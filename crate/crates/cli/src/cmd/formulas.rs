use clap::Args;
use quadcusp::formulas::{self, FormulaResult, FormulaValue};
use serde_json::{json, Value};

use crate::report::{CliError, RunReport};

#[derive(Args, Debug)]
pub struct FormulaArgs {
    /// plucker_genus, castelnuovo_pi, vdk_dimension, barkats_condition,
    /// tono_bound, tono_threshold, bb6_genus, max_admissible_kappa,
    /// shustin_kappa_lower, singularity_degree_a2h or plane_genus_vs_castelnuovo.
    name: String,
    #[arg(allow_negative_numbers = true)]
    args: Vec<i64>,
}

fn arity(name: &str, args: &[i64], n: usize) -> Result<(), CliError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{name} takes {n} integer argument(s), got {}", args.len())))
    }
}

fn plain(v: i64, condition: &str) -> FormulaResult {
    FormulaResult { value: FormulaValue::integer(v), valid: true, condition: condition.into(), notes: Vec::new() }
}

pub fn run(a: &FormulaArgs) -> Result<RunReport, CliError> {
    let x = &a.args;
    let name = a.name.as_str();
    let n = match name {
        "plucker_genus" | "vdk_dimension" | "barkats_condition" => 2,
        "bb6_genus" => 3,
        "tono_threshold" => 0,
        _ => 1,
    };
    arity(name, x, n)?;
    let r: Value = match name {
        "plucker_genus" => json!(formulas::plucker_genus(x[0], x[1])?),
        "castelnuovo_pi" => json!(formulas::castelnuovo_pi(x[0])?),
        "vdk_dimension" => json!(formulas::vdk_dimension(x[0], x[1])?),
        "barkats_condition" => json!(formulas::barkats_condition(x[0], x[1])?),
        "tono_bound" => json!(formulas::tono_bound(x[0])?),
        "tono_threshold" => json!(plain(formulas::tono_threshold(), "first g with (g+2)(g+1)/2 - g > (21g+17)/2")),
        "bb6_genus" => json!(formulas::bb6_genus(x[0], x[1], x[2])?),
        "max_admissible_kappa" => {
            let m = formulas::max_admissible_kappa(x[0]);
            json!(FormulaResult {
                value: m.map_or(FormulaValue::Unspecified, FormulaValue::integer),
                valid: m.is_some(),
                condition: "largest 2h with 3h+2 <= C(d1-1,2)".into(),
                notes: Vec::new(),
            })
        }
        "shustin_kappa_lower" => json!(formulas::shustin_kappa_lower(x[0])?),
        "singularity_degree_a2h" => {
            let h = u64::try_from(x[0]).map_err(|_| CliError::Usage("h must be non-negative".into()))?;
            json!(plain(formulas::singularity_degree_a2h(h) as i64, "h >= 0"))
        }
        "plane_genus_vs_castelnuovo" => {
            let rows = formulas::plane_genus_vs_castelnuovo(x[0]);
            json!(rows
                .iter()
                .map(|&(d, pa, pi)| json!({ "d": d, "p_a": pa, "pi": pi, "exceeds": pa > pi }))
                .collect::<Vec<_>>())
        }
        _ => return Err(CliError::Usage(format!("unknown formula '{name}'"))),
    };
    Ok(RunReport::new(json!({ "name": name, "args": x }), r))
}
