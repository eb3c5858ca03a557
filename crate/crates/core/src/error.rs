use std::io;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown Coxeter type label `{0}`")]
    UnknownType(String),
    #[error("root closure exceeded {cap} roots: not finite type or cap too low")]
    NotFiniteType { cap: usize },
    #[error("{positive} positive roots do not fit in a 64-bit inversion mask")]
    MaskTooWide { positive: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("generator {generator} out of range for rank {rank}")]
    GeneratorOutOfRange { generator: usize, rank: usize },
    #[error("matrix is not right-angled (entries must lie in {{1, 2, oo}})")]
    NotRightAngled,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("safety cap exceeded: {0}")]
    CapExceeded(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
