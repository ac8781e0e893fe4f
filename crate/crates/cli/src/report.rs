use serde::{Deserialize, Serialize};

use bubblepat::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Parsed arguments, echoed back in every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Inputs {
    Apply {
        perm: String,
        chain: String,
        k: Option<usize>,
        trace: bool,
    },
    Classify {
        perm: String,
    },
    Basis {
        input: String,
        verify: bool,
        horizon: Option<usize>,
    },
    Enumerate {
        basis: String,
        horizon: usize,
        out: Option<String>,
        cache: Option<String>,
    },
    Verify {
        suite: String,
        horizon: Option<usize>,
    },
    Diagram {
        perm: String,
        highlight: Vec<usize>,
    },
}

impl Inputs {
    pub fn command(&self) -> &'static str {
        match self {
            Inputs::Apply { .. } => "apply",
            Inputs::Classify { .. } => "classify",
            Inputs::Basis { .. } => "basis",
            Inputs::Enumerate { .. } => "enumerate",
            Inputs::Verify { .. } => "verify",
            Inputs::Diagram { .. } => "diagram",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandReport {
    pub command: String,
    pub inputs: Inputs,
    pub result: serde_json::Value,
    pub elapsed_ms: u64,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorPayload {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const VERIFICATION: i32 = 3;
    pub const PRECONDITION: i32 = 4;
    pub const HORIZON: i32 = 5;
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::DuplicateValue { .. }
        | Error::OutOfRange { .. }
        | Error::EmptyTokenStream
        | Error::MalformedToken { .. }
        | Error::EmptyPermutation
        | Error::MalformedChain { .. }
        | Error::PositionOutOfRange { .. } => exit::PARSE,
        Error::CrossCheckMismatch { .. } | Error::InvalidWitness { .. } | Error::NotADownset { .. } => {
            exit::VERIFICATION
        }
        Error::ContainsBadPermutation(_) => exit::PRECONDITION,
        Error::HorizonExceeded { .. } => exit::HORIZON,
        _ => exit::OTHER,
    }
}

pub fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::DuplicateValue { .. } => "DuplicateValue",
        Error::OutOfRange { .. } => "OutOfRange",
        Error::EmptyTokenStream => "EmptyTokenStream",
        Error::MalformedToken { .. } => "MalformedToken",
        Error::EmptyPermutation => "EmptyPermutation",
        Error::MalformedChain { .. } => "MalformedChain",
        Error::WrongCase { .. } => "WrongCase",
        Error::EndsWithMax(_) => "EndsWithMax",
        Error::IsGoodPermutation(_) => "IsGoodPermutation",
        Error::ContainsBadPermutation(_) => "ContainsBadPermutation",
        Error::HorizonExceeded { .. } => "HorizonExceeded",
        Error::NotADownset { .. } => "NotADownset",
        Error::EmptySequence => "EmptySequence",
        Error::CrossCheckMismatch { .. } => "CrossCheckMismatch",
        Error::InvalidWitness { .. } => "InvalidWitness",
        Error::PositionOutOfRange { .. } => "PositionOutOfRange",
        Error::Cache(_) => "Cache",
    }
}

impl ErrorPayload {
    pub fn from_error(err: &Error) -> Self {
        ErrorPayload {
            kind: error_kind(err).to_string(),
            message: err.to_string(),
            exit_code: exit_code(err),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bubblepat::Permutation;

    #[test]
    fn inputs_round_trip_through_json() {
        let inputs = Inputs::Enumerate {
            basis: "231,321".into(),
            horizon: 6,
            out: Some("t.csv".into()),
            cache: None,
        };
        let report = CommandReport {
            command: inputs.command().into(),
            inputs: inputs.clone(),
            result: serde_json::json!({"counts": [1, 2]}),
            elapsed_ms: 3,
            version: VERSION.into(),
        };
        let text = serde_json::to_string(&report).unwrap();
        let back: CommandReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.inputs, inputs);
        assert_eq!(back, report);
    }

    #[test]
    fn exit_codes_follow_error_class() {
        let p: Permutation = "2341".parse().unwrap();
        assert_eq!(exit_code(&Error::EmptyTokenStream), exit::PARSE);
        assert_eq!(exit_code(&Error::ContainsBadPermutation(p.clone())), exit::PRECONDITION);
        assert_eq!(exit_code(&Error::HorizonExceeded { requested: 12, cap: 11 }), exit::HORIZON);
        assert_eq!(exit_code(&Error::IsGoodPermutation(p)), exit::OTHER);
        let mismatch = Error::CrossCheckMismatch {
            pattern: "231".parse().unwrap(),
            horizon: 6,
            constructed: vec![],
            empirical: vec![],
        };
        assert_eq!(exit_code(&mismatch), exit::VERIFICATION);
    }
}
