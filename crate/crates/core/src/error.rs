use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is adjacent to itself")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for an image of {n} points")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("images are limited to {max} points, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("a cycle needs at least one point")]
    EmptyCycle,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("map of length {found} does not match a domain of {expected} points")]
    DomainMismatch { expected: usize, found: usize },
    #[error("input is not a simple path or loop: {0}")]
    NotSimple(String),
    #[error("{0}")]
    Precondition(String),
}
