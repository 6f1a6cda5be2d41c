//! Expression language and command-line front end for `qpows-core`.
//!
//! ```text
//! qpows eval "convert(P[2,1,2], M)"          # 2*M[2,1,2] + 2*M[3,2]
//! qpows eval "coproduct(M[4,1,3])" --json
//! qpows eval "Pn{1,4|2|3}" --order med
//! ```

pub mod error;
pub mod eval;
pub mod format;
pub mod parse;

pub use error::CliError;
pub use eval::{evaluate, Settings, Value};
pub use format::{to_json, to_text};
pub use parse::parse;

/// Default enumeration cap when `QPOWS_MAX_DEGREE` is unset.
pub const DEFAULT_MAX_DEGREE: u32 = 8;

/// Reads `QPOWS_MAX_DEGREE`, falling back to the default on absence or
/// garbage.
pub fn max_degree_from_env() -> u32 {
    std::env::var("QPOWS_MAX_DEGREE")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

/// Parses, evaluates and formats one expression.
pub fn run_eval(input: &str, settings: &Settings, json: bool) -> Result<String, CliError> {
    let value = evaluate(settings, &parse(input)?)?;
    Ok(if json {
        to_json(&value)
    } else {
        to_text(&value)
    })
}
