use eigendisc_core::coeffring::CoeffError;
use eigendisc_core::discriminant::DiscError;
use eigendisc_core::eigen::{EigenError, TensorError};
use eigendisc_core::exactla::InterpError;
use eigendisc_core::mpoly::{MapError, ParseError, VAR_NAMES};
use eigendisc_core::resultant::ResultantError;
use thiserror::Error;

/// Failure classes, each with its own exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("internal tripwire: {0}")]
    Tripwire(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Tripwire(_) => 4,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(format!("parse error: {e}"))
    }
}

impl From<CoeffError> for CliError {
    fn from(e: CoeffError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<TensorError> for CliError {
    fn from(e: TensorError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ResultantError> for CliError {
    fn from(e: ResultantError) -> Self {
        let msg = e.to_string();
        match e {
            ResultantError::FormCount { .. } | ResultantError::Arity(_) | ResultantError::NotHomogeneous { .. } => {
                CliError::Input(msg)
            }
            ResultantError::NonGeneric | ResultantError::PersistentDegeneracy(_) | ResultantError::ZeroFactor => {
                CliError::Degenerate(msg)
            }
            ResultantError::NotDivisible | ResultantError::Linalg(_) | ResultantError::Ring(_) => {
                CliError::Tripwire(msg)
            }
        }
    }
}

impl From<DiscError> for CliError {
    fn from(e: DiscError) -> Self {
        let msg = e.to_string();
        match e {
            DiscError::Shape { .. } | DiscError::DegenerateDegrees => CliError::Input(msg),
            DiscError::WitnessVanishes(_) | DiscError::PersistentDegeneracy(_) => CliError::Degenerate(msg),
            DiscError::NotDivisible => CliError::Tripwire(msg),
            DiscError::Resultant(r) => r.into(),
        }
    }
}

impl From<EigenError> for CliError {
    fn from(e: EigenError) -> Self {
        let msg = e.to_string();
        if e.is_degenerate() {
            return CliError::Degenerate(msg);
        }
        if e.is_tripwire() {
            return CliError::Tripwire(msg);
        }
        match e {
            EigenError::Disc(d) => d.into(),
            EigenError::Resultant(r) => r.into(),
            // the only caller-fixable interpolation failure is a short bound
            EigenError::Interpolation(s) if s.contains("too small") => CliError::Input(msg),
            EigenError::Interpolation(_) => CliError::Tripwire(msg),
            _ => CliError::Input(msg),
        }
    }
}

/// Maps an interpolation failure; `Ok(())` means every point was unusable.
pub fn from_interp(e: InterpError<CliError>) -> Result<(), CliError> {
    match e {
        InterpError::Eval(e) => Err(e),
        InterpError::TooManySkipped { .. } => Ok(()),
        InterpError::InsufficientBound(slot) => {
            Err(CliError::Input(format!("degree bound for {} is too small; raise --bound", VAR_NAMES[slot])))
        }
        InterpError::NotIntegral => Err(CliError::Tripwire(e.to_string())),
    }
}
