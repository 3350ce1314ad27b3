//! A workbench for the semijoin algebra: the relational algebra with the
//! join operator replaced by semijoin.
//!
//! The crate provides:
//!
//! - a model of finite databases over a universe of integer and symbolic
//!   values, with an interpreted vocabulary (equality, optional total order,
//!   optional extensional predicates) — [`value`], [`condition`],
//!   [`database`];
//! - a text format for databases and expressions with a round-tripping
//!   renderer — [`parse`];
//! - an evaluator for semijoin-algebra expressions — [`expr`], [`eval`];
//! - a solver for the two-player comparison game that characterizes the
//!   discerning power of the algebra, for any finite number of rounds and
//!   for the infinite game — [`game`];
//! - synthesis of distinguishing expressions from losing game positions,
//!   with verifiable certificates — [`distinguish`];
//! - independent brute-force oracles: bounded expression enumeration and
//!   direct combinatorial implementations of the benchmark queries —
//!   [`oracle`];
//! - programmatic constructors for the benchmark databases and expressions —
//!   [`corpus`] — and the claim suite that checks them — [`checks`].

pub mod checks;
pub mod condition;
pub mod corpus;
pub mod database;
pub mod distinguish;
pub mod error;
pub mod eval;
pub mod expr;
pub mod game;
pub mod oracle;
pub mod parse;
pub mod value;

pub use condition::{
    atomic_type, enumerate_pair_types, eval_condition, joint_atomic_type, Atom, Condition,
    Predicate, Var, Vocabulary,
};
pub use database::{Database, Schema};
pub use error::Error;
pub use eval::{evaluate, is_empty, Relation};
pub use expr::{Expr, ExprKind};
pub use game::{
    best_duplicator_move, best_spoiler_move, legal_answers, solve_finite, solve_infinite, win0,
    Configuration, GameSpace, GameVerdict, Rank, Side, Winner,
};
pub use value::{Tuple, Value};

pub type Result<T> = std::result::Result<T, Error>;
