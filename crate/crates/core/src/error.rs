use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("malformed sign sequence: {0}")]
    Structure(&'static str),
    #[error("interval endpoint is a root of the polynomial")]
    EndpointRoot,
    #[error("elements belong to different extension fields")]
    BaseMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the two curves share a common component")]
    CommonComponent,
    #[error("the curves are not in generic position: {0}")]
    GenericPosition(&'static str),
}

impl Error {
    /// Stable machine-readable tag, used by the command-line frontend.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::Precondition(_) => "PreconditionError",
            Error::Structure(_) => "StructureError",
            Error::EndpointRoot => "EndpointRootError",
            Error::BaseMismatch => "BaseMismatchError",
            Error::DivisionByZero => "DivisionByZero",
            Error::CommonComponent => "CommonComponentError",
            Error::GenericPosition(_) => "GenericPositionError",
        }
    }
}
