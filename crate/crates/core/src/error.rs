use thiserror::Error;

/// Errors raised by ring, module and harness operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime below 2^31")]
    NonPrimeCharacteristic(u64),
    #[error("a characteristic is required for polynomial rings and forbidden for the integers")]
    CharacteristicMismatch,
    #[error("modulus must be nonzero and not a unit")]
    UnitOrZeroModulus,
    #[error("element {0} does not belong to the ring of this context")]
    ElementOutsideContext(String),
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("operands live in different ring contexts")]
    ContextMismatch,
    #[error("the ideal lattice of this context is infinite; supply a reduction exponent")]
    InfiniteIdealLattice,
    #[error("element must be nonzero and not a unit")]
    UnitOrZeroElement,
    #[error("operation requires a context without modulus")]
    QuotientContextUnsupported,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("submodules live in different ambient modules")]
    AmbientMismatch,
    #[error("module is infinite")]
    InfiniteModule,
    #[error("module has more than {bound} elements")]
    SizeBoundExceeded { bound: usize },
    #[error("{0} is not a prime element of this context")]
    NotPrimeElement(String),
    #[error("predicate {0} needs a second ideal")]
    MissingSecondIdeal(&'static str),
    #[error("predicate {0} takes a single ideal")]
    UnexpectedSecondIdeal(&'static str),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
