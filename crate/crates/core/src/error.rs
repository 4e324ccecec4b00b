use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed element: {0}")]
    MalformedElement(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element {0} does not lie in the group")]
    NotInGroup(String),

    #[error("subgroup is not normal in the group")]
    NotNormal,

    #[error("not a subgroup of the group")]
    NotSubgroup,

    #[error("{what} requires {required}, above the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown catalog group `{0}`")]
    UnknownCatalog(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("at prime {ell}: {source}")]
    AtPrime { ell: u64, source: Box<GroupError> },
}

impl GroupError {
    /// True when the failure is a resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        match self {
            GroupError::CapExceeded { .. } => true,
            GroupError::AtPrime { source, .. } => source.is_resource_cap(),
            _ => false,
        }
    }

    pub fn at_prime(ell: u64, source: GroupError) -> Self {
        GroupError::AtPrime {
            ell,
            source: Box::new(source),
        }
    }

    pub(crate) fn cap(what: &'static str, required: impl Into<u128>, cap: impl Into<u128>) -> Self {
        GroupError::CapExceeded {
            what,
            required: required.into(),
            cap: cap.into(),
        }
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
