use std::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The series/rank combination does not name a finite diagram.
    InvalidDiagram(String),
    /// A type string could not be parsed.
    ParseType(String),
    /// A node index was outside `1..=rank`.
    NodeOutOfRange { node: usize, rank: usize },
    /// Two group elements belong to different root systems.
    MismatchedSystems,
    /// An operation that needs an involution was handed something else.
    NotAnInvolution,
    /// Breadth-first enumeration would exceed the element cap.
    CapExceeded { cap: usize },
    /// Orbit search would exceed the memory budget.
    MemoryBudgetExceeded { budget_bytes: usize },
    /// A stated precondition failed; the message says which.
    Precondition(String),
    /// The permutation supplied as a diagram automorphism is not one.
    NotAnAutomorphism(String),
    /// Folding produced a Gram matrix that is not of finite type.
    FoldedNotFinite(String),
    /// The requested golden table does not exist.
    NotTabulated(String),
    /// A golden data file failed to parse.
    GoldenFormat(String),
    /// The longest element is not central, so w0-multiplication does not
    /// act on involution classes of the full group.
    NonCentralLongest(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDiagram(s) => write!(f, "invalid diagram type: {s}"),
            Error::ParseType(s) => write!(f, "cannot parse diagram type: {s}"),
            Error::NodeOutOfRange { node, rank } => {
                write!(f, "node {node} out of range 1..={rank}")
            }
            Error::MismatchedSystems => write!(f, "elements belong to different root systems"),
            Error::NotAnInvolution => write!(f, "element is not an involution"),
            Error::CapExceeded { cap } => {
                write!(f, "group order exceeds cap {cap}; use orbit mode")
            }
            Error::MemoryBudgetExceeded { budget_bytes } => {
                write!(f, "orbit search exceeded memory budget of {budget_bytes} bytes")
            }
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::NotAnAutomorphism(s) => write!(f, "not a diagram automorphism: {s}"),
            Error::FoldedNotFinite(s) => write!(f, "folded system is not finite: {s}"),
            Error::NotTabulated(s) => write!(f, "no tabulated results for {s}"),
            Error::GoldenFormat(s) => write!(f, "bad golden table line: {s}"),
            Error::NonCentralLongest(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
