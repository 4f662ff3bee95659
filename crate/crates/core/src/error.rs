use alloc::string::String;

/// Malformed row token line.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RowParseError {
    #[error("unknown row token `{0}`")]
    UnknownToken(String),
    #[error("bundle {0} has no premise position")]
    MissingPremise(u32),
    #[error("bundle {0} has an empty conclusion")]
    EmptyConclusion(u32),
    #[error("bundle {0} has more than one premise position")]
    DuplicatePremise(u32),
    #[error("bundle symbols are not allowed in a 0/1/2 row")]
    BundleInPlainRow,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("element {element} is outside the universe 1..={w}")]
    OutOfRange { element: usize, w: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("element {element} is outside 1..={w}")]
    OutOfRange { element: usize, w: usize },
    #[error("relation {0} < {0} is not strict")]
    Reflexive(usize),
    #[error("order relation is not antisymmetric (cycle through element {0})")]
    Cycle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} is outside 1..={w}")]
    OutOfRange { vertex: usize, w: usize },
    #[error("expected {expected} edges, got {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
}

/// An exhaustive path refused an instance that is too large for it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GuardError {
    #[error("universe of size {w} exceeds the exhaustive-search limit of {limit}")]
    UniverseTooLarge { w: usize, limit: usize },
    #[error("output exceeds the configured cap of {cap} sets")]
    OutputCap { cap: usize },
}

/// Contract violation in a single (a,b)-imposition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImposeError {
    #[error("premise position {0} does not hold a 2")]
    PremiseNotFree(usize),
    #[error("position {position} is outside the row of length {w}")]
    OutOfRange { position: usize, w: usize },
}
