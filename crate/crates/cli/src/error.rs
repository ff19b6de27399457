use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("unknown matrix `{0}` (expected one of bianchi, ricci_trace, dlie-k0, dlie-k1, dlie-k2, tr-circ-dlie)")]
    UnknownMatrix(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] holonomy::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache: {0}")]
    Cache(String),
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 for failures of the computation itself.
    pub fn exit_code(&self) -> i32 {
        use holonomy::Error as E;
        match self {
            CliError::UnknownAlgebra(_) | CliError::UnknownMatrix(_) | CliError::Usage(_) => 2,
            CliError::Core(
                E::BadPrime { .. } | E::NotOneGraded { .. } | E::InvalidInput(_) | E::Parse { .. },
            ) => 2,
            CliError::Core(E::UnsupportedType(_) | E::InvalidCartanMatrix(_)) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
