use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("order {order} exceeds table cap {cap}")]
    OrderCapExceeded { order: u64, cap: usize },
    #[error("subgroup count exceeded cap {cap}")]
    SubgroupCountCapExceeded { cap: usize },
    #[error("poset has no bottom or top element")]
    NotBounded,
    #[error("poset is not a lattice")]
    NotALattice,
    #[error("order {0} is square-free; twin construction needs a square factor")]
    SquareFreeOrder(u64),
    #[error("cannot resolve spec to invariants: {0}")]
    Unresolvable(String),
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("catalog parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("catalog entry {order}:{index} generators close to order {actual}")]
    OrderMismatch { order: u32, index: u32, actual: usize },
    #[error("catalog reference G({order},{index}) not found")]
    CatalogRefNotFound { order: u32, index: u32 },
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("catalog is only complete through order {complete_to}, requested {requested}")]
    CatalogIncomplete { complete_to: u32, requested: u32 },
    #[error("corrupt cache entry: {0}")]
    CorruptEntry(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
