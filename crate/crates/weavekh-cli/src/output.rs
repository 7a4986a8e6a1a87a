//! Error-to-exit-code mapping and shared output helpers.

use std::fmt;

use weavekh::gaussfit::FitError;
use weavekh::jones::JonesError;
use weavekh::khovanov::KhovanovError;

/// Metadata comment for CSV output: tool version only, never timestamps,
/// so identical invocations stay byte-identical.
pub const META_COMMENT: &str = concat!("# weavekh ", env!("CARGO_PKG_VERSION"));

#[derive(Debug)]
pub enum CliError {
    /// Invalid arguments (exit 2, matching clap's own usage errors).
    Usage(String),
    /// A module signalled a violated computation contract (exit 3).
    Contract(String),
    /// A verification check failed (exit 4).
    VerifyFailed(String),
    /// Filesystem trouble (exit 1).
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Contract(_) => 3,
            CliError::VerifyFailed(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Contract(m) => write!(f, "{m}"),
            CliError::VerifyFailed(m) => write!(f, "verification failed: {m}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<KhovanovError> for CliError {
    fn from(e: KhovanovError) -> Self {
        CliError::Contract(e.to_string())
    }
}

impl From<FitError> for CliError {
    fn from(e: FitError) -> Self {
        CliError::Contract(e.to_string())
    }
}

impl From<JonesError> for CliError {
    fn from(e: JonesError) -> Self {
        CliError::Contract(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Attach `{"meta":{"tool","version"}}` to a JSON object unless suppressed.
pub fn with_meta(mut value: serde_json::Value, no_meta: bool) -> serde_json::Value {
    if !no_meta {
        if let Some(map) = value.as_object_mut() {
            map.insert(
                "meta".to_string(),
                serde_json::json!({
                    "tool": "weavekh",
                    "version": env!("CARGO_PKG_VERSION"),
                }),
            );
        }
    }
    value
}

/// Six significant digits, plain decimal: `2.64088`, `0.0405098`.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (5 - exp).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}
