use fanocalc_core::grassmann::GrassmannError;
use fanocalc_core::groebner::GbError;
use fanocalc_core::lct::LctError;
use fanocalc_core::lines_vsp::LinesError;
use fanocalc_core::mukai::MukaiError;
use fanocalc_core::polycore::PolyError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Budget(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Failed(_) => 4,
        }
    }

    fn classify(budget: bool, msg: String) -> Self {
        if budget {
            CliError::Budget(msg)
        } else {
            CliError::Failed(msg)
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {}", m),
            CliError::Budget(m) => write!(f, "budget exhausted: {}", m),
            CliError::Failed(m) => write!(f, "{}", m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<GbError> for CliError {
    fn from(e: GbError) -> Self {
        CliError::classify(e.is_budget(), e.to_string())
    }
}

impl From<MukaiError> for CliError {
    fn from(e: MukaiError) -> Self {
        CliError::classify(e.is_budget(), e.to_string())
    }
}

impl From<LinesError> for CliError {
    fn from(e: LinesError) -> Self {
        CliError::classify(e.is_budget(), e.to_string())
    }
}

impl From<LctError> for CliError {
    fn from(e: LctError) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<GrassmannError> for CliError {
    fn from(e: GrassmannError) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::Failed(e.to_string())
    }
}
