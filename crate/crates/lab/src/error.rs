use transversal_lab_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{path}: schema error: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: not a group: {source}")]
    NotAGroup { path: String, source: Error },
    #[error("{path}: subgroup {name:?}: {source}")]
    NotASubgroup { path: String, name: String, source: Error },
    #[error("selector {selector:?}: {message}")]
    Selector { selector: String, message: String },
    #[error("{0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl LabError {
    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> LabError {
        LabError::Io { path: path.as_ref().display().to_string(), source }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
