use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("cartesian product needs at least one factor")]
    EmptyFactorList,

    #[error("factor {0} of the product has no vertices")]
    EmptyFactor(usize),

    #[error("product has {size} vertices, above the limit of {limit}")]
    ProductTooLarge { size: usize, limit: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("cannot parse family spec {input:?} at byte {pos}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },

    #[error("coloring covers {colored} vertices but the graph has {n}")]
    PartialColoring { colored: usize, n: usize },

    #[error("color {color} at vertex {vertex} is outside the palette of size {palette}")]
    ColorOutOfPalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("oracle refuses graphs with more than {limit} vertices (got {n})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
