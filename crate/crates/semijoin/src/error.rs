use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("relation `{name}` has arity {expected}, got a tuple of length {actual}")]
    ArityMismatch {
        name: String,
        expected: usize,
        actual: usize,
    },
    #[error("operands of `{op}` have different arities ({left} vs {right})")]
    OperandArity {
        op: &'static str,
        left: usize,
        right: usize,
    },
    #[error("projection index {index} out of range for arity {arity}")]
    ProjectionIndex { index: usize, arity: usize },
    #[error("duplicate projection index {0}")]
    DuplicateProjectionIndex(usize),
    #[error("variable {var} out of range (left arity {left}, right arity {right})")]
    VariableRange {
        var: String,
        left: usize,
        right: usize,
    },
    #[error("the vocabulary has no order; `<` is not available")]
    OrderUnavailable,
    #[error("predicate `{name}` takes {expected} arguments, got {actual}")]
    PredicateArity {
        name: String,
        expected: usize,
        actual: usize,
    },
    #[error("`{0}` is declared both as a relation and as a vocabulary predicate")]
    NameClash(String),
    #[error("duplicate declaration of `{0}`")]
    DuplicateDeclaration(String),
    #[error("the two databases have different schemas or vocabularies")]
    IncompatibleDatabases,
    #[error("tuple {0} is not in the tuple space")]
    TupleNotInSpace(String),
    #[error("synthesis budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("synthesis does not support extra vocabulary predicates")]
    ExtraPredicates,
    #[error("the schema has no projections of arity {0}")]
    NoAritySlice(usize),
    #[error("{0}")]
    InvalidParameter(String),
}
