use quadcusp::{Error, ErrorKind};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "quadcusp.run/1";

pub const EXPERIMENTAL: &str = "experimental_below_paper_threshold";
pub const IRREDUCIBILITY: &str = "irreducibility_assumed";

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: String,
    pub field: String,
    pub seed: u64,
    pub inputs: Value,
    pub result: Value,
    pub warnings: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub csv: Option<String>,
}

impl RunReport {
    pub fn new(inputs: Value, result: Value) -> Self {
        Self {
            schema: SCHEMA,
            command: String::new(),
            field: String::new(),
            seed: 0,
            inputs,
            result,
            warnings: Vec::new(),
            timing_ms: None,
            csv: None,
        }
    }

    pub fn warn(mut self, w: &'static str) -> Self {
        if !self.warnings.contains(&w) {
            self.warnings.push(w);
        }
        self
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    /// The command needs a different kind of field.
    Field(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Field(_) => 5,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Construction => 3,
                ErrorKind::Geometry => 4,
                ErrorKind::Field => 5,
            },
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            2 => "parse",
            3 => "construction",
            4 => "geometry",
            _ => "field",
        }
    }

    pub fn report(&self, command: &str) -> Value {
        let message = match self {
            CliError::Core(e) => e.to_string(),
            CliError::Usage(m) | CliError::Field(m) => m.clone(),
        };
        json!({
            "schema": SCHEMA,
            "command": command,
            "error": { "kind": self.kind(), "message": message },
            "exit_code": self.exit_code(),
        })
    }
}

/// Runs `$body` with `$k` bound to the field named by a [`FieldSpec`].
///
/// [`FieldSpec`]: quadcusp::exactalg::FieldSpec
macro_rules! with_field {
    ($spec:expr, |$k:ident| $body:expr) => {
        match $spec {
            quadcusp::exactalg::FieldSpec::Prime(p) => {
                let $k = &quadcusp::exactalg::PrimeField::new(p)?;
                $body
            }
            quadcusp::exactalg::FieldSpec::Rationals => {
                let $k = &quadcusp::exactalg::Rationals;
                $body
            }
        }
    };
}
pub(crate) use with_field;

pub fn prime_only(spec: quadcusp::exactalg::FieldSpec, what: &str) -> Result<quadcusp::exactalg::PrimeField, CliError> {
    match spec {
        quadcusp::exactalg::FieldSpec::Prime(p) => Ok(quadcusp::exactalg::PrimeField::new(p)?),
        quadcusp::exactalg::FieldSpec::Rationals => {
            Err(CliError::Field(format!("{what} needs a finite field p:<prime>")))
        }
    }
}
