//! Bottom-up evaluation of expressions over a database.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::database::Database;
use crate::error::Error;
use crate::expr::{Expr, ExprKind};
use crate::value::Tuple;

/// A finite relation: an arity and a set of tuples of that arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    arity: usize,
    tuples: BTreeSet<Tuple>,
}

impl Relation {
    pub fn new(arity: usize) -> Relation {
        Relation {
            arity,
            tuples: BTreeSet::new(),
        }
    }

    pub fn from_tuples(
        arity: usize,
        tuples: impl IntoIterator<Item = Tuple>,
    ) -> Result<Relation, Error> {
        let mut r = Relation::new(arity);
        for t in tuples {
            r.insert(t)?;
        }
        Ok(r)
    }

    pub fn insert(&mut self, t: Tuple) -> Result<(), Error> {
        if t.len() != self.arity {
            return Err(Error::ArityMismatch {
                name: "<relation>".to_owned(),
                expected: self.arity,
                actual: t.len(),
            });
        }
        self.tuples.insert(t);
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, t: &Tuple) -> bool {
        self.tuples.contains(t)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Tuple> {
        self.tuples.iter()
    }

    pub fn tuples(&self) -> &BTreeSet<Tuple> {
        &self.tuples
    }
}

/// Evaluate an expression on a database. The expression is validated against
/// the database's schema and vocabulary first; evaluation itself is total.
/// Shared nodes are evaluated once (memoized by node identity).
pub fn evaluate(e: &Expr, db: &Database) -> Result<Relation, Error> {
    e.validate(db.schema(), db.vocab())?;
    let mut memo: HashMap<usize, Rc<Relation>> = HashMap::new();
    let out = eval_rec(e, db, &mut memo);
    Ok((*out).clone())
}

/// True iff the expression evaluates to the empty relation.
pub fn is_empty(e: &Expr, db: &Database) -> Result<bool, Error> {
    Ok(evaluate(e, db)?.is_empty())
}

fn eval_rec(e: &Expr, db: &Database, memo: &mut HashMap<usize, Rc<Relation>>) -> Rc<Relation> {
    if let Some(r) = memo.get(&e.node_id()) {
        return Rc::clone(r);
    }
    let vocab = db.vocab();
    let result = match e.kind() {
        ExprKind::Rel(name) => Relation {
            arity: e.arity(),
            tuples: db.relation(name).expect("validated").clone(),
        },
        ExprKind::Union(l, r) => {
            let lv = eval_rec(l, db, memo);
            let rv = eval_rec(r, db, memo);
            Relation {
                arity: e.arity(),
                tuples: lv.tuples.union(&rv.tuples).cloned().collect(),
            }
        }
        ExprKind::Diff(l, r) => {
            let lv = eval_rec(l, db, memo);
            let rv = eval_rec(r, db, memo);
            Relation {
                arity: e.arity(),
                tuples: lv.tuples.difference(&rv.tuples).cloned().collect(),
            }
        }
        ExprKind::Project(positions, c) => {
            let cv = eval_rec(c, db, memo);
            Relation {
                arity: e.arity(),
                tuples: cv.tuples.iter().map(|t| t.project(positions)).collect(),
            }
        }
        ExprKind::Select(cond, c) => {
            let cv = eval_rec(c, db, memo);
            let empty = Tuple::empty();
            Relation {
                arity: e.arity(),
                tuples: cv
                    .tuples
                    .iter()
                    .filter(|t| cond.eval(t, &empty, vocab))
                    .cloned()
                    .collect(),
            }
        }
        ExprKind::Semijoin(cond, l, r) => {
            let lv = eval_rec(l, db, memo);
            let rv = eval_rec(r, db, memo);
            Relation {
                arity: e.arity(),
                tuples: lv
                    .tuples
                    .iter()
                    .filter(|a| rv.tuples.iter().any(|b| cond.eval(a, b, vocab)))
                    .cloned()
                    .collect(),
            }
        }
    };
    let rc = Rc::new(result);
    memo.insert(e.node_id(), Rc::clone(&rc));
    rc
}
