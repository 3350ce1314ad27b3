//! Quantifier-free conditions over the interpreted vocabulary, and atomic
//! types of tuples.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::value::{Tuple, Value};

/// The interpreted predicates available in selection and semijoin conditions.
///
/// Equality is always present. A strict total order on values and extra,
/// finitely interpreted predicates are optional.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocabulary {
    ordered: bool,
    preds: BTreeMap<String, Predicate>,
}

/// An extra vocabulary predicate with an explicit finite interpretation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    pub arity: usize,
    pub tuples: BTreeSet<Tuple>,
}

impl Vocabulary {
    /// Equality only.
    pub fn equality_only() -> Vocabulary {
        Vocabulary::default()
    }

    /// Equality plus the total order `<`.
    pub fn with_order() -> Vocabulary {
        Vocabulary {
            ordered: true,
            preds: BTreeMap::new(),
        }
    }

    pub fn ordered(&self) -> bool {
        self.ordered
    }

    pub fn add_predicate(
        &mut self,
        name: impl Into<String>,
        arity: usize,
        tuples: impl IntoIterator<Item = Tuple>,
    ) -> Result<(), Error> {
        let name = name.into();
        if arity == 0 {
            return Err(Error::InvalidParameter(format!(
                "predicate `{name}` must have arity >= 1"
            )));
        }
        if self.preds.contains_key(&name) {
            return Err(Error::DuplicateDeclaration(name));
        }
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.len() != arity {
                return Err(Error::ArityMismatch {
                    name,
                    expected: arity,
                    actual: t.len(),
                });
            }
            set.insert(t);
        }
        self.preds.insert(name, Predicate { arity, tuples: set });
        Ok(())
    }

    pub fn predicate(&self, name: &str) -> Option<&Predicate> {
        self.preds.get(name)
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&String, &Predicate)> {
        self.preds.iter()
    }

    pub fn has_extra_predicates(&self) -> bool {
        !self.preds.is_empty()
    }

    pub fn contains_name(&self, name: &str) -> bool {
        self.preds.contains_key(name)
    }
}

/// A positional variable: `x<i>` names the i-th component of the left tuple,
/// `y<j>` the j-th component of the right tuple. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Left(usize),
    Right(usize),
}

impl Var {
    fn resolve<'t>(&self, left: &'t Tuple, right: &'t Tuple) -> &'t Value {
        match self {
            Var::Left(i) => left.component(*i).expect("validated condition"),
            Var::Right(j) => right.component(*j).expect("validated condition"),
        }
    }

    fn in_range(&self, left_arity: usize, right_arity: usize) -> bool {
        match self {
            Var::Left(i) => *i >= 1 && *i <= left_arity,
            Var::Right(j) => *j >= 1 && *j <= right_arity,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Left(i) => write!(f, "x{i}"),
            Var::Right(j) => write!(f, "y{j}"),
        }
    }
}

/// An atomic formula: a vocabulary predicate applied to variables.
/// Constants never appear in atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Eq(Var, Var),
    Lt(Var, Var),
    Pred(String, Vec<Var>),
}

/// A quantifier-free condition: a boolean combination of atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    True,
    False,
    Atom(Atom),
    Not(Box<Condition>),
    And(Box<Condition>, Box<Condition>),
    Or(Box<Condition>, Box<Condition>),
}

impl Condition {
    pub fn eq(a: Var, b: Var) -> Condition {
        Condition::Atom(Atom::Eq(a, b))
    }

    pub fn lt(a: Var, b: Var) -> Condition {
        Condition::Atom(Atom::Lt(a, b))
    }

    pub fn neq(a: Var, b: Var) -> Condition {
        Condition::not(Condition::eq(a, b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(c: Condition) -> Condition {
        Condition::Not(Box::new(c))
    }

    pub fn and(l: Condition, r: Condition) -> Condition {
        Condition::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Condition, r: Condition) -> Condition {
        Condition::Or(Box::new(l), Box::new(r))
    }

    /// Left-associated conjunction of the given conditions; `true` if empty.
    pub fn conjunction(items: impl IntoIterator<Item = Condition>) -> Condition {
        let mut it = items.into_iter();
        match it.next() {
            None => Condition::True,
            Some(first) => it.fold(first, Condition::and),
        }
    }

    /// Check that every variable fits the given arities, that `<` is only
    /// used when the vocabulary is ordered, and that predicate atoms match
    /// declared predicates.
    pub fn validate(
        &self,
        left_arity: usize,
        right_arity: usize,
        vocab: &Vocabulary,
    ) -> Result<(), Error> {
        let check_var = |v: &Var| {
            if v.in_range(left_arity, right_arity) {
                Ok(())
            } else {
                Err(Error::VariableRange {
                    var: v.to_string(),
                    left: left_arity,
                    right: right_arity,
                })
            }
        };
        match self {
            Condition::True | Condition::False => Ok(()),
            Condition::Atom(Atom::Eq(a, b)) => {
                check_var(a)?;
                check_var(b)
            }
            Condition::Atom(Atom::Lt(a, b)) => {
                if !vocab.ordered() {
                    return Err(Error::OrderUnavailable);
                }
                check_var(a)?;
                check_var(b)
            }
            Condition::Atom(Atom::Pred(name, args)) => {
                let pred = vocab
                    .predicate(name)
                    .ok_or_else(|| Error::UnknownPredicate(name.clone()))?;
                if pred.arity != args.len() {
                    return Err(Error::PredicateArity {
                        name: name.clone(),
                        expected: pred.arity,
                        actual: args.len(),
                    });
                }
                args.iter().try_for_each(check_var)
            }
            Condition::Not(c) => c.validate(left_arity, right_arity, vocab),
            Condition::And(l, r) | Condition::Or(l, r) => {
                l.validate(left_arity, right_arity, vocab)?;
                r.validate(left_arity, right_arity, vocab)
            }
        }
    }

    /// Truth value under the assignment x_i -> left[i], y_j -> right[j].
    /// The condition must have been validated against the tuple arities.
    pub fn eval(&self, left: &Tuple, right: &Tuple, vocab: &Vocabulary) -> bool {
        match self {
            Condition::True => true,
            Condition::False => false,
            Condition::Atom(Atom::Eq(a, b)) => a.resolve(left, right) == b.resolve(left, right),
            Condition::Atom(Atom::Lt(a, b)) => a.resolve(left, right) < b.resolve(left, right),
            Condition::Atom(Atom::Pred(name, args)) => {
                let pred = vocab.predicate(name).expect("validated condition");
                let t: Tuple = args
                    .iter()
                    .map(|v| v.resolve(left, right).clone())
                    .collect();
                pred.tuples.contains(&t)
            }
            Condition::Not(c) => !c.eval(left, right, vocab),
            Condition::And(l, r) => l.eval(left, right, vocab) && r.eval(left, right, vocab),
            Condition::Or(l, r) => l.eval(left, right, vocab) || r.eval(left, right, vocab),
        }
    }
}

/// Truth value of `cond` on the pair of tuples. See [`Condition::eval`].
pub fn eval_condition(cond: &Condition, left: &Tuple, right: &Tuple, vocab: &Vocabulary) -> bool {
    cond.eval(left, right, vocab)
}

/// The literals (atoms or negated atoms) a value assignment satisfies, in
/// canonical atom order: equality on pairs i < j, then order on all ordered
/// pairs i != j, then extra predicates by name and argument positions.
/// Reflexive equalities are dropped.
fn type_literals(values: &[&Value], vars: &[Var], vocab: &Vocabulary) -> Vec<Condition> {
    debug_assert_eq!(values.len(), vars.len());
    let n = values.len();
    let mut lits = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let atom = Condition::eq(vars[i], vars[j]);
            lits.push(if values[i] == values[j] {
                atom
            } else {
                Condition::not(atom)
            });
        }
    }
    if vocab.ordered() {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let atom = Condition::lt(vars[i], vars[j]);
                lits.push(if values[i] < values[j] {
                    atom
                } else {
                    Condition::not(atom)
                });
            }
        }
    }
    if n > 0 {
        for (name, pred) in vocab.predicates() {
            let mut indices = vec![0usize; pred.arity];
            loop {
                let args: Vec<Var> = indices.iter().map(|&i| vars[i]).collect();
                let t: Tuple = indices.iter().map(|&i| values[i].clone()).collect();
                let atom = Condition::Atom(Atom::Pred(name.clone(), args));
                lits.push(if pred.tuples.contains(&t) {
                    atom
                } else {
                    Condition::not(atom)
                });
                // next argument-index tuple in lexicographic order
                let mut pos = pred.arity;
                let mut done = true;
                while pos > 0 {
                    pos -= 1;
                    indices[pos] += 1;
                    if indices[pos] < n {
                        done = false;
                        break;
                    }
                    indices[pos] = 0;
                }
                if done {
                    break;
                }
            }
        }
    }
    lits
}

/// The atomic type of a tuple: the canonical conjunction of all atomic and
/// negated atomic formulas over the vocabulary that hold of it, in variables
/// x_1..x_n. The empty tuple has type `true`.
pub fn atomic_type(t: &Tuple, vocab: &Vocabulary) -> Condition {
    let values: Vec<&Value> = t.values().iter().collect();
    let vars: Vec<Var> = (1..=t.len()).map(Var::Left).collect();
    Condition::conjunction(type_literals(&values, &vars, vocab))
}

/// The atomic type of a pair of tuples, with the first tuple's positions as
/// x-variables and the second's as y-variables.
pub fn joint_atomic_type(t1: &Tuple, t2: &Tuple, vocab: &Vocabulary) -> Condition {
    let values: Vec<&Value> = t1.values().iter().chain(t2.values().iter()).collect();
    let vars: Vec<Var> = (1..=t1.len())
        .map(Var::Left)
        .chain((1..=t2.len()).map(Var::Right))
        .collect();
    Condition::conjunction(type_literals(&values, &vars, vocab))
}

/// All set partitions of {0..n-1} as restricted-growth strings, in
/// lexicographic order. Element i is mapped to its block id.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max + 1 {
            prefix.push(b);
            rec(prefix, max.max(b), n, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut prefix = vec![0usize];
    rec(&mut prefix, 0, n, &mut out);
    out
}

/// All permutations of 0..n in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if items.is_empty() {
            out.push(chosen.clone());
            return;
        }
        for k in 0..items.len() {
            let v = items.remove(k);
            chosen.push(v);
            rec(items, chosen, out);
            chosen.pop();
            items.insert(k, v);
        }
    }
    rec(&mut items, &mut Vec::new(), &mut out);
    out
}

/// All satisfiable atomic types of a pair of tuples with the given arities,
/// as canonical conditions, in a deterministic order. Over equality alone
/// these are the set partitions of the variables; with order they are the
/// weak orders. Extra predicates are not supported.
pub fn enumerate_pair_types(
    left_arity: usize,
    right_arity: usize,
    vocab: &Vocabulary,
) -> Result<Vec<Condition>, Error> {
    if vocab.has_extra_predicates() {
        return Err(Error::ExtraPredicates);
    }
    let n = left_arity + right_arity;
    let mut out = Vec::new();
    for part in partitions(n) {
        let blocks = part.iter().copied().max().map_or(0, |m| m + 1);
        if !vocab.ordered() {
            let rep: Vec<Value> = part.iter().map(|&b| Value::Int(b as i64)).collect();
            out.push(type_of_rep(&rep, left_arity, vocab));
        } else {
            // each ordering of the blocks realizes a distinct weak order
            for perm in permutations(blocks) {
                let mut rank = vec![0usize; blocks];
                for (pos, &b) in perm.iter().enumerate() {
                    rank[b] = pos;
                }
                let rep: Vec<Value> = part.iter().map(|&b| Value::Int(rank[b] as i64)).collect();
                out.push(type_of_rep(&rep, left_arity, vocab));
            }
        }
    }
    Ok(out)
}

fn type_of_rep(rep: &[Value], left_arity: usize, vocab: &Vocabulary) -> Condition {
    let t1 = Tuple::new(rep[..left_arity].to_vec());
    let t2 = Tuple::new(rep[left_arity..].to_vec());
    joint_atomic_type(&t1, &t2, vocab)
}
