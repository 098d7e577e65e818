use std::fmt::Display;

/// A failed command: exit code, message for stderr, and optionally a report
/// that still goes to stdout.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    pub stdout: Option<String>,
}

impl CliError {
    fn new(code: u8, e: impl Display) -> Self {
        CliError { code, message: e.to_string(), stdout: None }
    }

    /// Oracle resource limits.
    pub fn resources(e: impl Display) -> Self {
        Self::new(1, e)
    }

    /// Bad flags; clap uses the same code.
    pub fn usage(e: impl Display) -> Self {
        Self::new(2, e)
    }

    /// Unreadable or malformed instance files.
    pub fn schema(e: impl Display) -> Self {
        Self::new(2, e)
    }

    /// Grading or size preconditions.
    pub fn precondition(e: impl Display) -> Self {
        Self::new(3, e)
    }

    pub fn mismatch(report: String) -> Self {
        CliError { code: 4, message: "formula and oracle disagree".into(), stdout: Some(report) }
    }

    pub fn unstable(e: impl Display) -> Self {
        Self::new(5, e)
    }
}
