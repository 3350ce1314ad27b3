//! Expression trees (shared as DAGs) for the semijoin algebra.
//!
//! An expression is one of: a relation name, a union or difference of two
//! expressions of equal arity, a projection onto an increasing list of
//! positions, a selection, or a semijoin. Selection conditions speak about
//! the tuple through x-variables; semijoin conditions relate the left tuple
//! (x-variables) to a right-hand witness (y-variables).
//!
//! Intersection is surface sugar: `e1 isect e2` is built as
//! `e1 diff (e1 diff e2)` at construction time, sharing `e1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::rc::Rc;

use crate::condition::{Condition, Vocabulary};
use crate::database::Schema;
use crate::error::Error;

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExprKind {
    /// A schema relation.
    Rel(String),
    Union(Expr, Expr),
    Diff(Expr, Expr),
    /// Projection onto strictly increasing 1-based positions; the list may
    /// be empty (the nullary projection).
    Project(Vec<usize>, Expr),
    Select(Condition, Expr),
    Semijoin(Condition, Expr, Expr),
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExprNode {
    kind: ExprKind,
    arity: usize,
}

/// A reference-counted expression node. Cloning is cheap; equality, ordering
/// and hashing are structural.
#[derive(Clone, Debug)]
pub struct Expr(Rc<ExprNode>);

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        Rc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Expr {}

impl PartialOrd for Expr {
    fn partial_cmp(&self, other: &Expr) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expr {
    fn cmp(&self, other: &Expr) -> Ordering {
        if Rc::ptr_eq(&self.0, &other.0) {
            Ordering::Equal
        } else {
            self.0.cmp(&other.0)
        }
    }
}

impl Hash for Expr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl Expr {
    fn mk(kind: ExprKind, arity: usize) -> Expr {
        Expr(Rc::new(ExprNode { kind, arity }))
    }

    /// A reference to a relation of the given arity.
    pub fn rel(name: impl Into<String>, arity: usize) -> Expr {
        Expr::mk(ExprKind::Rel(name.into()), arity)
    }

    pub fn union(left: Expr, right: Expr) -> Result<Expr, Error> {
        if left.arity() != right.arity() {
            return Err(Error::OperandArity {
                op: "union",
                left: left.arity(),
                right: right.arity(),
            });
        }
        let arity = left.arity();
        Ok(Expr::mk(ExprKind::Union(left, right), arity))
    }

    pub fn diff(left: Expr, right: Expr) -> Result<Expr, Error> {
        if left.arity() != right.arity() {
            return Err(Error::OperandArity {
                op: "diff",
                left: left.arity(),
                right: right.arity(),
            });
        }
        let arity = left.arity();
        Ok(Expr::mk(ExprKind::Diff(left, right), arity))
    }

    /// Intersection, desugared to `left diff (left diff right)`.
    pub fn isect(left: Expr, right: Expr) -> Result<Expr, Error> {
        if left.arity() != right.arity() {
            return Err(Error::OperandArity {
                op: "isect",
                left: left.arity(),
                right: right.arity(),
            });
        }
        let inner = Expr::diff(left.clone(), right)?;
        Expr::diff(left, inner)
    }

    /// Projection onto 1-based positions. The list is canonicalized to
    /// strictly increasing order; duplicates are rejected.
    pub fn project(mut positions: Vec<usize>, child: Expr) -> Result<Expr, Error> {
        positions.sort_unstable();
        for w in positions.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateProjectionIndex(w[0]));
            }
        }
        for &p in &positions {
            if p == 0 || p > child.arity() {
                return Err(Error::ProjectionIndex {
                    index: p,
                    arity: child.arity(),
                });
            }
        }
        let arity = positions.len();
        Ok(Expr::mk(ExprKind::Project(positions, child), arity))
    }

    /// Selection; the condition may use x-variables up to the child arity
    /// and no y-variables.
    pub fn select(cond: Condition, child: Expr) -> Result<Expr, Error> {
        check_vars(&cond, child.arity(), 0)?;
        let arity = child.arity();
        Ok(Expr::mk(ExprKind::Select(cond, child), arity))
    }

    /// Semijoin; the condition may use x-variables up to the left arity and
    /// y-variables up to the right arity.
    pub fn semijoin(cond: Condition, left: Expr, right: Expr) -> Result<Expr, Error> {
        check_vars(&cond, left.arity(), right.arity())?;
        let arity = left.arity();
        Ok(Expr::mk(ExprKind::Semijoin(cond, left, right), arity))
    }

    pub fn arity(&self) -> usize {
        self.0.arity
    }

    pub fn kind(&self) -> &ExprKind {
        &self.0.kind
    }

    /// Identity of the shared node, usable as a memoization key.
    pub fn node_id(&self) -> usize {
        Rc::as_ptr(&self.0) as usize
    }

    /// Check the expression against a schema and vocabulary: relation names
    /// and arities must match, conditions may only use declared predicates,
    /// and `<` requires an ordered vocabulary.
    pub fn validate(&self, schema: &Schema, vocab: &Vocabulary) -> Result<(), Error> {
        let mut seen = std::collections::HashSet::new();
        self.validate_rec(schema, vocab, &mut seen)
    }

    fn validate_rec(
        &self,
        schema: &Schema,
        vocab: &Vocabulary,
        seen: &mut std::collections::HashSet<usize>,
    ) -> Result<(), Error> {
        if !seen.insert(self.node_id()) {
            return Ok(());
        }
        match self.kind() {
            ExprKind::Rel(name) => match schema.arity(name) {
                None => Err(Error::UnknownRelation(name.clone())),
                Some(a) if a != self.arity() => Err(Error::ArityMismatch {
                    name: name.clone(),
                    expected: a,
                    actual: self.arity(),
                }),
                Some(_) => Ok(()),
            },
            ExprKind::Union(l, r) | ExprKind::Diff(l, r) => {
                l.validate_rec(schema, vocab, seen)?;
                r.validate_rec(schema, vocab, seen)
            }
            ExprKind::Project(_, c) => c.validate_rec(schema, vocab, seen),
            ExprKind::Select(cond, c) => {
                cond.validate(c.arity(), 0, vocab)?;
                c.validate_rec(schema, vocab, seen)
            }
            ExprKind::Semijoin(cond, l, r) => {
                cond.validate(l.arity(), r.arity(), vocab)?;
                l.validate_rec(schema, vocab, seen)?;
                r.validate_rec(schema, vocab, seen)
            }
        }
    }
}

/// Variable-range check that does not need a vocabulary: order and
/// predicate atoms are accepted here and checked by [`Expr::validate`].
fn check_vars(cond: &Condition, left_arity: usize, right_arity: usize) -> Result<(), Error> {
    use crate::condition::{Atom, Var};
    fn vars(cond: &Condition, out: &mut Vec<Var>) {
        match cond {
            Condition::True | Condition::False => {}
            Condition::Atom(Atom::Eq(a, b)) | Condition::Atom(Atom::Lt(a, b)) => {
                out.push(*a);
                out.push(*b);
            }
            Condition::Atom(Atom::Pred(_, args)) => out.extend(args.iter().copied()),
            Condition::Not(c) => vars(c, out),
            Condition::And(l, r) | Condition::Or(l, r) => {
                vars(l, out);
                vars(r, out);
            }
        }
    }
    let mut vs = Vec::new();
    vars(cond, &mut vs);
    for v in vs {
        let ok = match v {
            Var::Left(i) => i >= 1 && i <= left_arity,
            Var::Right(j) => j >= 1 && j <= right_arity,
        };
        if !ok {
            return Err(Error::VariableRange {
                var: v.to_string(),
                left: left_arity,
                right: right_arity,
            });
        }
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ExprKind::Rel(name) => write!(f, "{name}"),
            ExprKind::Union(l, r) => write!(f, "({l} union {r})"),
            ExprKind::Diff(l, r) => write!(f, "({l} diff {r})"),
            ExprKind::Project(ps, c) => {
                write!(f, "project[")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "]({c})")
            }
            ExprKind::Select(cond, c) => write!(f, "select[{cond}]({c})"),
            ExprKind::Semijoin(cond, l, r) => write!(f, "({l} semijoin[{cond}] {r})"),
        }
    }
}

// Condition rendering: `|` binds loosest, then `&`, then `!`. Operators
// associate to the left; parentheses are emitted exactly where reparsing
// needs them, so rendering then parsing reproduces the tree.
impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cond(self, 0, f)
    }
}

fn fmt_cond(c: &Condition, prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    use crate::condition::Atom;
    match c {
        Condition::True => write!(f, "true"),
        Condition::False => write!(f, "false"),
        Condition::Atom(Atom::Eq(a, b)) => write!(f, "{a} = {b}"),
        Condition::Atom(Atom::Lt(a, b)) => write!(f, "{a} < {b}"),
        Condition::Atom(Atom::Pred(name, args)) => {
            write!(f, "{name}(")?;
            for (i, v) in args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")
        }
        Condition::Not(inner) => match inner.as_ref() {
            Condition::Atom(Atom::Eq(a, b)) => write!(f, "{a} != {b}"),
            other => {
                write!(f, "!(")?;
                fmt_cond(other, 0, f)?;
                write!(f, ")")
            }
        },
        Condition::And(l, r) => {
            let parens = prec > 2;
            if parens {
                write!(f, "(")?;
            }
            fmt_cond(l, 2, f)?;
            write!(f, " & ")?;
            fmt_cond(r, 3, f)?;
            if parens {
                write!(f, ")")?;
            }
            Ok(())
        }
        Condition::Or(l, r) => {
            let parens = prec > 1;
            if parens {
                write!(f, "(")?;
            }
            fmt_cond(l, 1, f)?;
            write!(f, " | ")?;
            fmt_cond(r, 2, f)?;
            if parens {
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::condition::Var;

    #[test]
    fn arities_follow_the_operator_rules() {
        let r = Expr::rel("R", 2);
        assert_eq!(r.arity(), 2);
        assert_eq!(Expr::project(vec![1], r.clone()).unwrap().arity(), 1);
        assert_eq!(Expr::project(vec![], r.clone()).unwrap().arity(), 0);
        let sj = Expr::semijoin(
            Condition::eq(Var::Left(2), Var::Right(1)),
            r.clone(),
            r.clone(),
        )
        .unwrap();
        assert_eq!(sj.arity(), 2);
        assert!(Expr::union(r.clone(), Expr::rel("S", 1)).is_err());
    }

    #[test]
    fn project_rejects_bad_positions() {
        let r = Expr::rel("R", 2);
        assert!(Expr::project(vec![3], r.clone()).is_err());
        assert!(Expr::project(vec![0], r.clone()).is_err());
        assert!(Expr::project(vec![1, 1], r).is_err());
    }

    #[test]
    fn project_canonicalizes_position_order() {
        let r = Expr::rel("R", 2);
        let a = Expr::project(vec![2, 1], r.clone()).unwrap();
        let b = Expr::project(vec![1, 2], r).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn isect_is_double_difference() {
        let r = Expr::rel("R", 1);
        let s = Expr::rel("S", 1);
        let i = Expr::isect(r.clone(), s.clone()).unwrap();
        let expected = Expr::diff(r.clone(), Expr::diff(r, s).unwrap()).unwrap();
        assert_eq!(i, expected);
    }

    #[test]
    fn select_rejects_y_variables() {
        let r = Expr::rel("R", 2);
        assert!(Expr::select(Condition::eq(Var::Left(1), Var::Right(1)), r).is_err());
    }

    #[test]
    fn semijoin_checks_both_sides() {
        let r = Expr::rel("R", 2);
        let s = Expr::rel("S", 1);
        assert!(Expr::semijoin(
            Condition::eq(Var::Left(2), Var::Right(1)),
            r.clone(),
            s.clone()
        )
        .is_ok());
        assert!(Expr::semijoin(Condition::eq(Var::Left(2), Var::Right(2)), r, s).is_err());
    }

    #[test]
    fn display_forms() {
        let r = Expr::rel("R", 2);
        let sj = Expr::semijoin(
            Condition::eq(Var::Left(2), Var::Right(1)),
            r.clone(),
            r.clone(),
        )
        .unwrap();
        assert_eq!(sj.to_string(), "(R semijoin[x2 = y1] R)");
        assert_eq!(
            Expr::project(vec![1], r).unwrap().to_string(),
            "project[1](R)"
        );
    }

    #[test]
    fn condition_display_precedence() {
        let a = Condition::eq(Var::Left(1), Var::Right(1));
        let b = Condition::neq(Var::Left(2), Var::Right(2));
        let c = Condition::lt(Var::Left(1), Var::Left(2));
        let and_or = Condition::and(a.clone(), Condition::or(b.clone(), c.clone()));
        assert_eq!(and_or.to_string(), "x1 = y1 & (x2 != y2 | x1 < x2)");
        let or_and = Condition::or(Condition::and(a, b), c);
        assert_eq!(or_and.to_string(), "x1 = y1 & x2 != y2 | x1 < x2");
        let nested_not = Condition::not(Condition::lt(Var::Left(1), Var::Left(2)));
        assert_eq!(nested_not.to_string(), "!(x1 < x2)");
    }
}
