use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("reduced-word closure exceeded the cap of {cap} words")]
    ClosureCap { cap: usize },

    #[error("element cap of {cap} exceeded; supply a smaller bound")]
    ElementCap { cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("element {0} is not fully commutative")]
    NotFullyCommutative(String),

    #[error("Property W fails during the recursive c-basis computation at {0}")]
    PropertyW(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not of type A")]
    NotTypeA,

    #[error("trace table has no value for {0}")]
    TableGap(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
