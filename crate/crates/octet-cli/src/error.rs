//! CLI error classification.
//!
//! Every failure is folded into one of three exit classes:
//!
//! | code | class     | meaning                                             |
//! |------|-----------|-----------------------------------------------------|
//! | 2    | invalid   | rejected input, flags, or configuration             |
//! | 3    | budget    | a memory or search budget refused the work          |
//! | 4    | invariant | an internal consistency check tripped; this signals |
//! |      |           | a defect, not a usage problem                       |
//!
//! (Exit 0 is success; clap itself exits 2 on malformed command lines,
//! matching the invalid-input class.)

use inversive_geometry::InversiveError;
use local_global_verifier::VerifierError;
use octuple_algebra::OctupleError;
use orbit_enumeration::EnumerationError;
use picard_verification::PicardError;
use quadratic_form::FormError;

/// A classified CLI failure carrying its user-facing message.
#[derive(Debug)]
pub enum CliError {
    /// Rejected input or configuration — exit 2.
    Invalid(String),
    /// A memory or search budget refused the work — exit 3.
    Budget(String),
    /// An internal invariant tripped — exit 4.
    Invariant(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    /// The process exit code for this class.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }

    /// The message printed to stderr.
    pub fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Budget(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<OctupleError> for CliError {
    fn from(e: OctupleError) -> Self {
        // Every octuple-algebra error describes rejected input data.
        CliError::Invalid(e.to_string())
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::MemoryBudget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<FormError> for CliError {
    fn from(e: FormError) -> Self {
        match e {
            FormError::SearchBudget { .. } => CliError::Budget(e.to_string()),
            // These three can only fire if the coefficient arithmetic itself
            // is wrong — seeds accepted by octuple-algebra always satisfy
            // them.
            FormError::NonIntegerCoefficient { .. }
            | FormError::DiscriminantIdentity { .. }
            | FormError::GramDeterminant { .. } => CliError::Invariant(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<InversiveError> for CliError {
    fn from(e: InversiveError) -> Self {
        match e {
            // Proved unreachable for exact tangent input; firing means the
            // completion algebra is broken.
            InversiveError::IrrationalGap { .. } => CliError::Invariant(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<VerifierError> for CliError {
    fn from(e: VerifierError) -> Self {
        match e {
            // An inadmissible value in the orbit contradicts the
            // unconditional congruence obstruction.
            VerifierError::ConverseViolation { .. } => CliError::Invariant(e.to_string()),
            VerifierError::Enumeration(inner) => inner.into(),
            VerifierError::Form(inner) => inner.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<PicardError> for CliError {
    fn from(e: PicardError) -> Self {
        // The identity checker runs on compiled-in data only, so any error
        // is a defect in the transcribed group constants.
        CliError::Invariant(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(format!("i/o failure: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_errors_map_to_exit_3() {
        let e: CliError = EnumerationError::MemoryBudget {
            bound: 10,
            required_mib: 99,
            budget_mib: 1,
        }
        .into();
        assert_eq!(e.exit_code(), 3);

        let e: CliError = FormError::SearchBudget {
            m: 10_000_000,
            budget: 100,
        }
        .into();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn converse_violation_maps_to_exit_4() {
        let e: CliError = VerifierError::ConverseViolation { m: 3 }.into();
        assert_eq!(e.exit_code(), 4);
    }

    #[test]
    fn nested_verifier_errors_keep_their_class() {
        let e: CliError = VerifierError::Enumeration(EnumerationError::MemoryBudget {
            bound: 10,
            required_mib: 99,
            budget_mib: 1,
        })
        .into();
        assert_eq!(e.exit_code(), 3);

        let e: CliError = VerifierError::InvalidBound { bound: 0 }.into();
        assert_eq!(e.exit_code(), 2);
    }
}
