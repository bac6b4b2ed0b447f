use kvertex_core::ExactError;
use kvertex_locvertex::LocError;
use kvertex_qde::QdeError;
use kvertex_toroidal::ToroidalError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid config: {0}")]
    Config(String),
    #[error("config file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Loc(#[from] LocError),
    #[error(transparent)]
    Toroidal(#[from] ToroidalError),
    #[error(transparent)]
    Qde(#[from] QdeError),
}
