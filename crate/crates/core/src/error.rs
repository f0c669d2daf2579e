use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground size mismatch: expected {expected}, got {found}")]
    GroundMismatch { expected: usize, found: usize },

    #[error("carrier is empty")]
    EmptyCarrier,

    #[error("carrier has {0} elements, maximum supported is 64")]
    CarrierTooLarge(usize),

    #[error("duplicate element identifier {0:?}")]
    DuplicateElement(String),

    #[error("unknown element identifier {0:?}")]
    UnknownElement(String),

    #[error("antisymmetry violated: {a:?} <= {b:?} and {b:?} <= {a:?} with {a:?} != {b:?}")]
    NotAntisymmetric { a: String, b: String },

    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("not a lattice: pair ({a:?}, {b:?}) has no {which}")]
    NotALattice { a: String, b: String, which: &'static str },

    #[error("space is not T0: points {a:?} and {b:?} are topologically indistinguishable")]
    NotT0 { a: String, b: String },

    #[error("{set} is not {kind} in this space")]
    NotOpenOrClosed { set: String, kind: &'static str },

    #[error("resource cap exceeded while {what}: cap {cap}, reached {reached}")]
    CapExceeded { what: &'static str, cap: usize, reached: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown gallery space {0:?}")]
    UnknownGallerySpace(String),

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
