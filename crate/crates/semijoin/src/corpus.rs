//! Programmatic constructors for the benchmark databases and expressions,
//! and the named corpus the CLI can list and emit.

use crate::condition::{Condition, Var, Vocabulary};
use crate::database::{Database, Schema};
use crate::error::Error;
use crate::expr::Expr;
use crate::value::{Tuple, Value};

fn tup(vals: &[Value]) -> Tuple {
    Tuple::new(vals.to_vec())
}

fn t1(a: impl Into<Value>) -> Tuple {
    tup(&[a.into()])
}

fn t2(a: impl Into<Value>, b: impl Into<Value>) -> Tuple {
    tup(&[a.into(), b.into()])
}

/// Unary R and S with T = R x S on one side; on the other, larger R and S
/// with a T that hits every row and column but misses part of the product.
/// The left side satisfies "T contains R x S", the right side does not;
/// both satisfy "T inside R x S".
pub fn figure1() -> (Database, Database) {
    let schema = Schema::from_pairs([("R", 1), ("S", 1), ("T", 2)]).unwrap();
    let a = Database::with_contents(
        schema.clone(),
        Vocabulary::equality_only(),
        [
            ("R", vec![t1("a"), t1("b")]),
            ("S", vec![t1(1), t1(2)]),
            ("T", vec![t2("a", 1), t2("a", 2), t2("b", 1), t2("b", 2)]),
        ],
    )
    .unwrap();
    let b = Database::with_contents(
        schema,
        Vocabulary::equality_only(),
        [
            ("R", vec![t1("a"), t1("b"), t1("c")]),
            ("S", vec![t1(1), t1(2), t1(3)]),
            (
                "T",
                vec![
                    t2("a", 1),
                    t2("a", 2),
                    t2("b", 2),
                    t2("b", 3),
                    t2("c", 1),
                    t2("c", 3),
                ],
            ),
        ],
    )
    .unwrap();
    (a, b)
}

/// Binary R, S, T where the left side has T equal to the relational
/// composition of R and S, while the right side's T neither contains nor is
/// contained in it.
pub fn figure2() -> (Database, Database) {
    let schema = Schema::from_pairs([("R", 2), ("S", 2), ("T", 2)]).unwrap();
    let a = Database::with_contents(
        schema.clone(),
        Vocabulary::equality_only(),
        [
            ("R", vec![t2(1, "a"), t2(3, "b")]),
            ("S", vec![t2("a", 2), t2("b", 4)]),
            ("T", vec![t2(1, 2), t2(3, 4)]),
        ],
    )
    .unwrap();
    let b = Database::with_contents(
        schema,
        Vocabulary::equality_only(),
        [
            ("R", vec![t2(1, "a"), t2(3, "b")]),
            ("S", vec![t2("b", 2), t2("a", 4)]),
            ("T", vec![t2(1, 2), t2(3, 4)]),
        ],
    )
    .unwrap();
    (a, b)
}

/// The directed k-cycle {(1,2),(2,3),...,(k,1)} over a single edge
/// relation R. `cycle_db(1)` is the self-loop {(1,1)}.
pub fn cycle_db(k: u32) -> Database {
    assert!(k >= 1, "cycle needs at least one vertex");
    let schema = Schema::from_pairs([("R", 2)]).unwrap();
    let mut db = Database::new(schema, Vocabulary::equality_only()).unwrap();
    for i in 1..=k as i64 {
        let j = if i == k as i64 { 1 } else { i + 1 };
        db.insert("R", t2(i, j)).unwrap();
    }
    db
}

/// n disjoint copies of a database. Copy 0 keeps the original values;
/// integer values of copy i are shifted by i times the value span, symbolic
/// values get a `_i` suffix, so the copies' active domains are disjoint.
pub fn disjoint_copies(db: &Database, n: u32) -> Database {
    assert!(n >= 1);
    let dom = db.active_domain();
    let (min, max) = dom
        .iter()
        .fold((i64::MAX, i64::MIN), |(lo, hi), v| match v {
            Value::Int(i) => (lo.min(*i), hi.max(*i)),
            Value::Sym(_) => (lo, hi),
        });
    let span = if min <= max { max - min + 1 } else { 0 };
    let mut out = Database::new(db.schema().clone(), db.vocab().clone()).unwrap();
    for copy in 0..n as i64 {
        for (name, tuples) in db.relations() {
            for t in tuples {
                let renamed: Tuple = t
                    .values()
                    .iter()
                    .map(|v| match v {
                        Value::Int(i) => Value::Int(i + copy * span),
                        Value::Sym(s) => {
                            if copy == 0 {
                                Value::Sym(s.clone())
                            } else {
                                Value::Sym(format!("{s}_{copy}"))
                            }
                        }
                    })
                    .collect();
                out.insert(name, renamed).unwrap();
            }
        }
    }
    out
}

/// Ordered pair probing whether "T contains R x S" is detectable:
/// R = {1..m}, S = {m+1..2m}, the left T is the full product and the right
/// T misses exactly the middle pair ((m+1)/2, m+(m+1)/2). Requires odd
/// m >= 3.
pub fn ordered_product_dbs(m: u32) -> Result<(Database, Database), Error> {
    check_odd(m)?;
    let m = m as i64;
    let schema = Schema::from_pairs([("R", 1), ("S", 1), ("T", 2)]).unwrap();
    let r: Vec<Tuple> = (1..=m).map(t1).collect();
    let s: Vec<Tuple> = (m + 1..=2 * m).map(t1).collect();
    let full: Vec<Tuple> = (1..=m)
        .flat_map(|i| (m + 1..=2 * m).map(move |j| t2(i, j)))
        .collect();
    let hole = t2((m + 1) / 2, m + (m + 1) / 2);
    let pruned: Vec<Tuple> = full.iter().filter(|t| **t != hole).cloned().collect();
    let a = Database::with_contents(
        schema.clone(),
        Vocabulary::with_order(),
        [("R", r.clone()), ("S", s.clone()), ("T", full)],
    )?;
    let b = Database::with_contents(
        schema,
        Vocabulary::with_order(),
        [("R", r), ("S", s), ("T", pruned)],
    )?;
    Ok((a, b))
}

/// Ordered pair probing composition containment: R = {1..m} x {2m+1},
/// S = {2m+1} x {m+1..2m}, the left T is the full composition of R and S
/// and the right T misses the middle pair. Requires odd m >= 3.
pub fn ordered_composition_dbs(m: u32) -> Result<(Database, Database), Error> {
    check_odd(m)?;
    let m = m as i64;
    let schema = Schema::from_pairs([("R", 2), ("S", 2), ("T", 2)]).unwrap();
    let hub = 2 * m + 1;
    let r: Vec<Tuple> = (1..=m).map(|i| t2(i, hub)).collect();
    let s: Vec<Tuple> = (m + 1..=2 * m).map(|j| t2(hub, j)).collect();
    let full: Vec<Tuple> = (1..=m)
        .flat_map(|i| (m + 1..=2 * m).map(move |j| t2(i, j)))
        .collect();
    let hole = t2((m + 1) / 2, m + (m + 1) / 2);
    let pruned: Vec<Tuple> = full.iter().filter(|t| **t != hole).cloned().collect();
    let a = Database::with_contents(
        schema.clone(),
        Vocabulary::with_order(),
        [("R", r.clone()), ("S", s.clone()), ("T", full)],
    )?;
    let b = Database::with_contents(
        schema,
        Vocabulary::with_order(),
        [("R", r), ("S", s), ("T", pruned)],
    )?;
    Ok((a, b))
}

fn check_odd(m: u32) -> Result<(), Error> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "m must be odd and >= 3, got {m}"
        )));
    }
    Ok(())
}

/// A unary relation S = {1..k}, optionally with the order available.
pub fn unary_db(k: u32, ordered: bool) -> Database {
    let schema = Schema::from_pairs([("S", 1)]).unwrap();
    let vocab = if ordered {
        Vocabulary::with_order()
    } else {
        Vocabulary::equality_only()
    };
    let mut db = Database::new(schema, vocab).unwrap();
    for i in 1..=k as i64 {
        db.insert("S", t1(i)).unwrap();
    }
    db
}

/// Walks of length k over a binary edge relation R:
/// path(1) = R, path(k) = R semijoin[x2 = y1] path(k-1).
pub fn expr_path(k: u32) -> Expr {
    assert!(k >= 1);
    let r = Expr::rel("R", 2);
    let mut e = r.clone();
    for _ in 1..k {
        e = Expr::semijoin(Condition::eq(Var::Left(2), Var::Right(1)), r.clone(), e).unwrap();
    }
    e
}

/// Nonempty exactly when the ordered unary relation S has at least k
/// elements: at_least(1) = S, at_least(k) = S semijoin[x1 < y1]
/// at_least(k-1).
pub fn expr_at_least(k: u32) -> Expr {
    assert!(k >= 1);
    let s = Expr::rel("S", 1);
    let mut e = s.clone();
    for _ in 1..k {
        e = Expr::semijoin(Condition::lt(Var::Left(1), Var::Right(1)), s.clone(), e).unwrap();
    }
    e
}

/// Nonempty exactly when the edge relation contains a simple path with two
/// edges (three distinct vertices).
pub fn expr_simple_path2() -> Expr {
    let r = Expr::rel("R", 2);
    let cond = Condition::conjunction(vec![
        Condition::eq(Var::Left(2), Var::Right(1)),
        Condition::neq(Var::Left(2), Var::Left(1)),
        Condition::neq(Var::Right(2), Var::Left(2)),
        Condition::neq(Var::Left(1), Var::Right(2)),
    ]);
    Expr::semijoin(cond, r.clone(), r).unwrap()
}

/// The violation set of "T inside R x S": T minus the T-tuples whose left
/// part appears in R and right part in S. Empty exactly when T is contained
/// in the product. Works for any arities of R (p) and S (q), with T of
/// arity p + q.
pub fn expr_t_subset_rxs(r_arity: usize, s_arity: usize) -> Expr {
    let t = Expr::rel("T", r_arity + s_arity);
    let r = Expr::rel("R", r_arity);
    let s = Expr::rel("S", s_arity);
    let left_match =
        Condition::conjunction((1..=r_arity).map(|i| Condition::eq(Var::Left(i), Var::Right(i))));
    let right_match = Condition::conjunction(
        (1..=s_arity).map(|i| Condition::eq(Var::Left(r_arity + i), Var::Right(i))),
    );
    let inside = Expr::semijoin(
        right_match,
        Expr::semijoin(left_match, t.clone(), r).unwrap(),
        s,
    )
    .unwrap();
    Expr::diff(t, inside).unwrap()
}

/// Nonempty exactly when the unary relation S has two distinct elements.
pub fn expr_two_distinct() -> Expr {
    let s = Expr::rel("S", 1);
    Expr::semijoin(Condition::neq(Var::Left(1), Var::Right(1)), s.clone(), s).unwrap()
}

/// Nonempty exactly when the edge relation has a cycle of length k, for
/// k <= 2: a self-loop, or a pair of opposite edges between distinct
/// vertices.
pub fn expr_cycle(k: u32) -> Result<Expr, Error> {
    let r = Expr::rel("R", 2);
    match k {
        1 => Expr::select(Condition::eq(Var::Left(1), Var::Left(2)), r),
        2 => {
            let cond = Condition::conjunction(vec![
                Condition::eq(Var::Left(1), Var::Right(2)),
                Condition::eq(Var::Left(2), Var::Right(1)),
                Condition::neq(Var::Left(1), Var::Left(2)),
            ]);
            Expr::semijoin(cond, r.clone(), r)
        }
        other => Err(Error::InvalidParameter(format!(
            "no cycle expression for k = {other}; only k <= 2 is expressible"
        ))),
    }
}

/// A named corpus entry: one or two databases plus the claim the check
/// suite verifies for it.
pub struct CorpusEntry {
    pub name: &'static str,
    pub claim: &'static str,
    /// (file stem, database) pairs, one or two per entry
    pub databases: Vec<(String, Database)>,
}

/// Every named corpus entry.
pub fn entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let (f1a, f1b) = figure1();
    out.push(CorpusEntry {
        name: "figure1",
        claim: "indistinguishable (duplicator wins the infinite game); left satisfies 'T contains R x S', right does not; both satisfy 'T inside R x S'",
        databases: vec![("figure1-a".into(), f1a), ("figure1-b".into(), f1b)],
    });
    let (f2a, f2b) = figure2();
    out.push(CorpusEntry {
        name: "figure2",
        claim: "indistinguishable; left T equals the composition of R and S, right T neither contains nor is contained in it",
        databases: vec![("figure2-a".into(), f2a), ("figure2-b".into(), f2b)],
    });
    for (k, name) in [
        (3u32, "cycle-3"),
        (4, "cycle-4"),
        (5, "cycle-5"),
        (6, "cycle-6"),
        (7, "cycle-7"),
    ] {
        out.push(CorpusEntry {
            name,
            claim: "directed cycle; adjacent sizes >= 4 are indistinguishable, 3 vs 4 is not",
            databases: vec![(name.to_string(), cycle_db(k))],
        });
    }
    out.push(CorpusEntry {
        name: "two-cycle-3",
        claim: "two disjoint triangles; indistinguishable from the 4-cycle",
        databases: vec![("two-cycle-3".into(), disjoint_copies(&cycle_db(3), 2))],
    });
    for (m, prod_name, comp_name) in [
        (5u32, "product-5", "composition-5"),
        (7, "product-7", "composition-7"),
    ] {
        let (a, b) = ordered_product_dbs(m).unwrap();
        out.push(CorpusEntry {
            name: prod_name,
            claim: "ordered product pair; the duplicator survives (m-1)/2 rounds from the empty configuration",
            databases: vec![(format!("product-{m}-a"), a), (format!("product-{m}-b"), b)],
        });
        let (a, b) = ordered_composition_dbs(m).unwrap();
        out.push(CorpusEntry {
            name: comp_name,
            claim: "ordered composition pair; the duplicator survives (m-1)/2 rounds from the empty configuration",
            databases: vec![
                (format!("composition-{m}-a"), a),
                (format!("composition-{m}-b"), b),
            ],
        });
    }
    for (k, name) in [(2u32, "unary-2"), (3, "unary-3"), (5, "unary-5")] {
        out.push(CorpusEntry {
            name,
            claim: "unary set; with equality alone, sizes >= 2 are pairwise indistinguishable",
            databases: vec![(name.to_string(), unary_db(k, false))],
        });
    }
    for (k, name) in [(2u32, "unary-ordered-2"), (3, "unary-ordered-3")] {
        out.push(CorpusEntry {
            name,
            claim: "ordered unary set; cardinality thresholds become expressible",
            databases: vec![(name.to_string(), unary_db(k, true))],
        });
    }
    out
}

/// Look up a corpus entry by name.
pub fn entry(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name == name)
}
