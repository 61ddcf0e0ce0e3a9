use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edge {edge} contains vertex {vertex} more than once")]
    DuplicateVertex { edge: usize, vertex: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing \"p hpd <n> <m>\" header")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: vertex index {index} not in 1..={n}")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: vertex index {index} repeated within an edge")]
    DuplicateVertex { line: usize, index: usize },
    #[error("line {line}: edge has no vertices")]
    EmptyEdge { line: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("hypergraph has no vertices")]
    EmptyHypergraph,
    #[error("search exceeded its time budget")]
    TimedOut,
    #[error("vertex {vertex} is not a member of the set")]
    NotAMember { vertex: usize },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("base hypergraph is not uniform")]
    NonUniform,
    #[error("rank {r} is below the minimum {min}")]
    RankTooSmall { r: usize, min: usize },
    #[error("budget k = {k} is below the minimum {min}")]
    BudgetTooSmall { k: usize, min: usize },
    #[error("spine count must be at least 1 and match the x vector (d = {d}, |x| = {len})")]
    SpineCount { d: usize, len: usize },
    #[error("x[{spine}] = {value} outside 1..={max}")]
    SpineWidth { spine: usize, value: usize, max: usize },
    #[error("strong edge {edge}: {reason}")]
    StrongEdge { edge: usize, reason: String },
    #[error("cannot chain spine 1 to spine {spine}: only {available} strong vertices for an edge of size {r}")]
    ChainInfeasible { spine: usize, available: usize, r: usize },
    #[error("construction is disconnected")]
    Disconnected,
    #[error("no connected {r}-uniform hypergraph on {n} vertices with {m} distinct edges: {reason}")]
    Infeasible { n: usize, r: usize, m: usize, reason: String },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("denominator r + k must be positive")]
    NonPositiveDenominator,
    #[error("bound requires r >= 3, got r = {0}")]
    RankBelowThree(String),
}
