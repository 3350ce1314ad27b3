//! Synthesis of distinguishing expressions from game positions.
//!
//! For a database A and a tuple `a` in its tuple space, `rank_expression`
//! builds an expression E with two properties:
//!
//! 1. `a` is in E(A);
//! 2. for any database B over the same schema and any `b`, `b` is in E(B)
//!    exactly when the duplicator wins the r-round game from (a, b).
//!
//! At rank 0 the expression pins down the tuple's projection memberships
//! and atomic type. At rank r it intersects, for every tuple c of the
//! space, a semijoin probing "there is an answer to the move c that
//! survives r-1 rounds", and subtracts, for every joint type θ a spoiler
//! move on the other side could realize, a semijoin probing "there is a
//! θ-move with no surviving answer". The per-type inner intersection uses
//! complements relative to the arity slice of the tuple space, which is
//! exactly the pool the opponent draws moves from.
//!
//! Sub-expressions are built once per (tuple, rank) and shared in the DAG;
//! evaluation memoizes on node identity, so certificates stay checkable at
//! desk scale even though the rendered text grows quickly with the rank.

use std::collections::{BTreeSet, HashMap};

use crate::condition::{atomic_type, enumerate_pair_types, joint_atomic_type, Condition};
use crate::database::{mask_positions, Database, Schema};
use crate::error::Error;
use crate::eval::evaluate;
use crate::expr::Expr;
use crate::game::{Configuration, GameSpace, Rank, Side};
use crate::value::Tuple;

/// Caps on the synthesis: the rank and the number of joint types per
/// variable-range pair. Exceeding either is an error, never a silent
/// truncation.
#[derive(Clone, Debug)]
pub struct SynthesisBudget {
    pub max_rank: u32,
    pub max_pair_types: usize,
}

impl Default for SynthesisBudget {
    fn default() -> Self {
        SynthesisBudget {
            max_rank: 8,
            max_pair_types: 20_000,
        }
    }
}

/// The rank-0 expression: selection of the tuple's atomic type over the
/// intersection of all relation projections containing it, minus the union
/// of the same-arity projections that do not.
pub fn base_expression(db: &Database, a: &Tuple) -> Result<Expr, Error> {
    Synth::new(db, &SynthesisBudget::default())?.base_for(a)
}

/// The rank-r expression for a tuple of the database's tuple space.
pub fn distinguishing_expression(db: &Database, a: &Tuple, r: u32) -> Result<Expr, Error> {
    distinguishing_expression_with_budget(db, a, r, &SynthesisBudget::default())
}

pub fn distinguishing_expression_with_budget(
    db: &Database,
    a: &Tuple,
    r: u32,
    budget: &SynthesisBudget,
) -> Result<Expr, Error> {
    if r > budget.max_rank {
        return Err(Error::BudgetExceeded(format!(
            "rank {r} exceeds the configured maximum {}",
            budget.max_rank
        )));
    }
    let mut synth = Synth::new(db, budget)?;
    let idx = synth.index_of(a)?;
    synth.expr(idx, r)
}

/// The complement of an expression of arity k relative to the arity-k slice
/// of the tuple space: the union of all arity-k projections of schema
/// relations, minus the expression.
pub fn complement_expr(e: &Expr, schema: &Schema) -> Result<Expr, Error> {
    Expr::diff(slice_expr(schema, e.arity())?, e.clone())
}

/// The union of all arity-k projections of the schema's relations.
fn slice_expr(schema: &Schema, k: usize) -> Result<Expr, Error> {
    let mut terms = Vec::new();
    for (name, arity) in schema.iter() {
        if k > arity {
            continue;
        }
        for mask in 0u32..(1 << arity) {
            if mask.count_ones() as usize == k {
                terms.push(Expr::project(
                    mask_positions(mask, arity),
                    Expr::rel(name.clone(), arity),
                )?);
            }
        }
    }
    let mut it = terms.into_iter();
    let first = it.next().ok_or(Error::NoAritySlice(k))?;
    it.try_fold(first, Expr::union)
}

struct Synth<'a> {
    db: &'a Database,
    budget: &'a SynthesisBudget,
    space: Vec<Tuple>,
    index: HashMap<Tuple, usize>,
    proj: HashMap<(String, u32), BTreeSet<Tuple>>,
    base_memo: HashMap<usize, Expr>,
    expr_memo: HashMap<(usize, u32), Expr>,
    types_memo: HashMap<(usize, usize), Vec<Condition>>,
}

impl<'a> Synth<'a> {
    fn new(db: &'a Database, budget: &'a SynthesisBudget) -> Result<Synth<'a>, Error> {
        if db.vocab().has_extra_predicates() {
            return Err(Error::ExtraPredicates);
        }
        let space: Vec<Tuple> = db.tuple_space().into_iter().collect();
        let index = space
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let mut proj = HashMap::new();
        for (name, arity) in db.schema().iter() {
            let content = db.relation(name)?;
            for mask in 0u32..(1 << arity) {
                let positions = mask_positions(mask, arity);
                proj.insert(
                    (name.clone(), mask),
                    content.iter().map(|t| t.project(&positions)).collect(),
                );
            }
        }
        Ok(Synth {
            db,
            budget,
            space,
            index,
            proj,
            base_memo: HashMap::new(),
            expr_memo: HashMap::new(),
            types_memo: HashMap::new(),
        })
    }

    fn index_of(&self, a: &Tuple) -> Result<usize, Error> {
        self.index
            .get(a)
            .copied()
            .ok_or_else(|| Error::TupleNotInSpace(a.to_string()))
    }

    fn base_for(&mut self, a: &Tuple) -> Result<Expr, Error> {
        let idx = self.index_of(a)?;
        self.base(idx)
    }

    fn base(&mut self, idx: usize) -> Result<Expr, Error> {
        if let Some(e) = self.base_memo.get(&idx) {
            return Ok(e.clone());
        }
        let a = self.space[idx].clone();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (name, arity) in self.db.schema().iter() {
            for mask in 0u32..(1 << arity) {
                if mask.count_ones() as usize != a.len() {
                    continue;
                }
                let term =
                    Expr::project(mask_positions(mask, arity), Expr::rel(name.clone(), arity))?;
                if self.proj[&(name.clone(), mask)].contains(&a) {
                    pos.push(term);
                } else {
                    neg.push(term);
                }
            }
        }
        let mut pos_it = pos.into_iter();
        let first = pos_it
            .next()
            .ok_or_else(|| Error::TupleNotInSpace(a.to_string()))?;
        let kept = pos_it.try_fold(first, Expr::isect)?;
        let selected = Expr::select(atomic_type(&a, self.db.vocab()), kept)?;
        let e = match neg.into_iter().try_fold(None::<Expr>, |acc, t| {
            Ok::<_, Error>(Some(match acc {
                None => t,
                Some(u) => Expr::union(u, t)?,
            }))
        })? {
            None => selected,
            Some(subtract) => Expr::diff(selected, subtract)?,
        };
        self.base_memo.insert(idx, e.clone());
        Ok(e)
    }

    fn pair_types(&mut self, n: usize, j: usize) -> Result<Vec<Condition>, Error> {
        if let Some(ts) = self.types_memo.get(&(n, j)) {
            return Ok(ts.clone());
        }
        let ts = enumerate_pair_types(n, j, self.db.vocab())?;
        if ts.len() > self.budget.max_pair_types {
            return Err(Error::BudgetExceeded(format!(
                "{} joint types for variable ranges ({n}, {j}) exceed the maximum {}",
                ts.len(),
                self.budget.max_pair_types
            )));
        }
        self.types_memo.insert((n, j), ts.clone());
        Ok(ts)
    }

    fn expr(&mut self, idx: usize, r: u32) -> Result<Expr, Error> {
        if r == 0 {
            return self.base(idx);
        }
        if let Some(e) = self.expr_memo.get(&(idx, r)) {
            return Ok(e.clone());
        }
        let a = self.space[idx].clone();
        let e0 = self.base(idx)?;
        let vocab = self.db.vocab().clone();

        // one probe per possible move on this side: an answer with the
        // right joint type must survive r-1 rounds
        let mut part1: Option<Expr> = None;
        for c_idx in 0..self.space.len() {
            let c = self.space[c_idx].clone();
            let theta = joint_atomic_type(&a, &c, &vocab);
            let cont = self.expr(c_idx, r - 1)?;
            let term = Expr::semijoin(theta, e0.clone(), cont)?;
            part1 = Some(match part1 {
                None => term,
                Some(acc) => Expr::isect(acc, term)?,
            });
        }
        let part1 = part1.expect("tuple space is nonempty");

        // one probe per joint type a move on the opposite side could
        // realize: a θ-move all of whose matching continuations fail
        let mut bad: Option<Expr> = None;
        let max_arity = self.db.schema().max_arity();
        for j in 1..=max_arity {
            for theta in self.pair_types(a.len(), j)? {
                let candidates: Vec<usize> = (0..self.space.len())
                    .filter(|&ci| {
                        self.space[ci].len() == j && theta.eval(&a, &self.space[ci], &vocab)
                    })
                    .collect();
                let inner = if candidates.is_empty() {
                    slice_expr(self.db.schema(), j)?
                } else {
                    let mut acc: Option<Expr> = None;
                    for ci in candidates {
                        let compl = complement_expr(&self.expr(ci, r - 1)?, self.db.schema())?;
                        acc = Some(match acc {
                            None => compl,
                            Some(prev) => Expr::isect(prev, compl)?,
                        });
                    }
                    acc.unwrap()
                };
                let term = Expr::semijoin(theta, e0.clone(), inner)?;
                bad = Some(match bad {
                    None => term,
                    Some(acc) => Expr::union(acc, term)?,
                });
            }
        }
        let part2 = match bad {
            None => e0,
            Some(b) => Expr::diff(e0, b)?,
        };

        let e = Expr::isect(part1, part2)?;
        self.expr_memo.insert((idx, r), e.clone());
        Ok(e)
    }
}

/// The outcome of comparing two tuples across two databases: either a
/// verified separating expression or the duplicator's winning region.
#[derive(Clone, Debug)]
pub enum Certificate {
    Separation {
        expr: Expr,
        /// the side the expression was synthesized from; its tuple is the
        /// member
        from: Side,
        /// rounds the spoiler needs from the configuration
        rounds: u32,
        in_left: bool,
        in_right: bool,
    },
    Indistinguishable {
        region: Vec<Configuration>,
    },
}

/// Decide the infinite game from (a, b) and either synthesize and evaluate
/// a separating expression at the spoiler's winning rank, or return the
/// duplicator's winning region.
pub fn certify(
    left_db: &Database,
    right_db: &Database,
    a: &Tuple,
    b: &Tuple,
) -> Result<Certificate, Error> {
    certify_with_budget(left_db, right_db, a, b, &SynthesisBudget::default())
}

pub fn certify_with_budget(
    left_db: &Database,
    right_db: &Database,
    a: &Tuple,
    b: &Tuple,
    budget: &SynthesisBudget,
) -> Result<Certificate, Error> {
    let space = GameSpace::new(left_db, right_db)?;
    let rank = space.rank(a, b)?;
    let rounds = match rank {
        Rank::Infinite => {
            return Ok(Certificate::Indistinguishable {
                region: space.winning_region(),
            })
        }
        Rank::Lost => 0,
        Rank::Finite(k) => k + 1,
    };
    // synthesize from the left tuple; fall back to the right one when the
    // left side cannot anchor an expression (an empty database)
    let (expr, from) = match distinguishing_expression_with_budget(left_db, a, rounds, budget) {
        Ok(e) => (e, Side::Left),
        Err(Error::TupleNotInSpace(_)) => (
            distinguishing_expression_with_budget(right_db, b, rounds, budget)?,
            Side::Right,
        ),
        Err(other) => return Err(other),
    };
    let in_left = evaluate(&expr, left_db)?.contains(a);
    let in_right = evaluate(&expr, right_db)?.contains(b);
    Ok(Certificate::Separation {
        expr,
        from,
        rounds,
        in_left,
        in_right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::game::Winner;
    use crate::parse::{parse_database, parse_expression, parse_tuple, render_expression};

    fn t(s: &str) -> Tuple {
        parse_tuple(s).unwrap()
    }

    #[test]
    fn base_expression_pins_a_singleton() {
        let db = parse_database("rel R/2 { (1,2) }").unwrap();
        let e = base_expression(&db, &t("(1,2)")).unwrap();
        let out = evaluate(&e, &db).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out.contains(&t("(1,2)")));
    }

    #[test]
    fn base_expression_matches_win0_exactly() {
        let (a_db, b_db) = corpus::figure1();
        let space = GameSpace::new(&a_db, &b_db).unwrap();
        for a in a_db.tuple_space() {
            let e = base_expression(&a_db, &a).unwrap();
            assert!(evaluate(&e, &a_db).unwrap().contains(&a), "self-membership");
            let on_b = evaluate(&e, &b_db).unwrap();
            for b in b_db.tuple_space() {
                let member = b.len() == on_b.arity() && on_b.contains(&b);
                assert_eq!(member, space.win0(&a, &b).unwrap(), "a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn base_expression_on_the_empty_tuple_probes_nonempty_relations() {
        let (a_db, b_db) = corpus::figure1();
        let e = base_expression(&a_db, &Tuple::empty()).unwrap();
        assert!(evaluate(&e, &a_db).unwrap().contains(&Tuple::empty()));
        assert!(evaluate(&e, &b_db).unwrap().contains(&Tuple::empty()));
        // empty one relation: membership flips
        let hollow = parse_database("rel R/1 { } rel S/1 { (1) } rel T/2 { (a,1) }").unwrap();
        assert!(evaluate(&e, &hollow).unwrap().is_empty());
    }

    #[test]
    fn base_expression_accepts_all_type_equal_pairs() {
        let (a_db, b_db) = corpus::figure1();
        let e = base_expression(&a_db, &t("(a,1)")).unwrap();
        // all six pair tuples on the other side share type and memberships
        assert_eq!(evaluate(&e, &b_db).unwrap().len(), 6);
    }

    #[test]
    fn base_expression_needs_an_anchor() {
        let empty = parse_database("rel R/1 { }").unwrap();
        assert!(matches!(
            base_expression(&empty, &Tuple::empty()),
            Err(Error::TupleNotInSpace(_))
        ));
    }

    #[test]
    fn base_expression_round_trips_through_the_parser() {
        let (a_db, _) = corpus::figure1();
        let e = base_expression(&a_db, &t("(a,1)")).unwrap();
        let text = render_expression(&e);
        let back = parse_expression(&text, a_db.schema(), a_db.vocab()).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn complement_of_a_whole_relation_is_empty() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let e = complement_expr(&Expr::rel("R", 2), &schema).unwrap();
        let db = corpus::cycle_db(4);
        assert!(evaluate(&e, &db).unwrap().is_empty());
    }

    #[test]
    fn complement_is_relative_to_the_arity_slice() {
        let schema = Schema::from_pairs([("R", 2), ("S", 1)]).unwrap();
        let db = parse_database("rel R/2 { (1,2) } rel S/1 { (3) }").unwrap();
        let e =
            complement_expr(&Expr::project(vec![1], Expr::rel("R", 2)).unwrap(), &schema).unwrap();
        let out = evaluate(&e, &db).unwrap();
        // slice is {1} u {2} u {3}; removing projection {1} leaves {2, 3}
        assert_eq!(out.len(), 2);
        assert!(out.contains(&t("(2)")));
        assert!(out.contains(&t("(3)")));
    }

    #[test]
    fn complement_of_a_nullary_expression() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let probe = Expr::project(vec![], Expr::rel("R", 2)).unwrap();
        let e = complement_expr(&probe, &schema).unwrap();
        let nonempty = corpus::cycle_db(3);
        assert!(evaluate(&e, &nonempty).unwrap().is_empty());
    }

    #[test]
    fn rank_zero_equals_the_base_expression() {
        let db = corpus::cycle_db(3);
        let a = t("(1,2)");
        assert_eq!(
            distinguishing_expression(&db, &a, 0).unwrap(),
            base_expression(&db, &a).unwrap()
        );
    }

    #[test]
    fn separates_the_triangle_from_the_square() {
        let d3 = corpus::cycle_db(3);
        let d4 = corpus::cycle_db(4);
        let cert = certify(&d3, &d4, &Tuple::empty(), &Tuple::empty()).unwrap();
        match cert {
            Certificate::Separation {
                rounds,
                in_left,
                in_right,
                from,
                ..
            } => {
                assert_eq!(rounds, 2);
                assert_eq!(from, Side::Left);
                assert!(in_left);
                assert!(!in_right);
            }
            other => panic!("expected separation, got {other:?}"),
        }
    }

    #[test]
    fn square_and_double_triangle_are_certified_indistinguishable() {
        let d4 = corpus::cycle_db(4);
        let two_d3 = corpus::disjoint_copies(&corpus::cycle_db(3), 2);
        let cert = certify(&d4, &two_d3, &Tuple::empty(), &Tuple::empty()).unwrap();
        assert!(matches!(cert, Certificate::Indistinguishable { .. }));
    }

    #[test]
    fn figure2_pair_is_certified_indistinguishable() {
        let (a, b) = corpus::figure2();
        let cert = certify(&a, &b, &Tuple::empty(), &Tuple::empty()).unwrap();
        match cert {
            Certificate::Indistinguishable { region } => assert!(!region.is_empty()),
            other => panic!("expected indistinguishable, got {other:?}"),
        }
    }

    #[test]
    fn unary_sets_without_order_are_certified_indistinguishable() {
        let a = corpus::unary_db(2, false);
        let b = corpus::unary_db(5, false);
        let cert = certify(&a, &b, &Tuple::empty(), &Tuple::empty()).unwrap();
        assert!(matches!(cert, Certificate::Indistinguishable { .. }));
    }

    #[test]
    fn order_yields_a_verified_separating_expression() {
        let a = corpus::unary_db(2, true);
        let b = corpus::unary_db(3, true);
        let cert = certify(&a, &b, &Tuple::empty(), &Tuple::empty()).unwrap();
        match cert {
            Certificate::Separation {
                in_left, in_right, ..
            } => assert_ne!(in_left, in_right),
            other => panic!("expected separation, got {other:?}"),
        }
    }

    #[test]
    fn empty_database_certificates_come_from_the_other_side() {
        let empty = parse_database("rel S/1 { }").unwrap();
        let two = corpus::unary_db(2, false);
        let cert = certify(&empty, &two, &Tuple::empty(), &Tuple::empty()).unwrap();
        match cert {
            Certificate::Separation {
                from,
                rounds,
                in_left,
                in_right,
                ..
            } => {
                assert_eq!(from, Side::Right);
                assert_eq!(rounds, 0);
                assert!(!in_left);
                assert!(in_right);
            }
            other => panic!("expected separation, got {other:?}"),
        }
    }

    #[test]
    fn game_equivalence_holds_exhaustively_on_small_pairs() {
        // property check of the two synthesis guarantees on a benchmark
        // pair: membership on the other side tracks the game rank exactly
        let d3 = corpus::cycle_db(3);
        let d4 = corpus::cycle_db(4);
        let space = GameSpace::new(&d3, &d4).unwrap();
        for r in 0..=2u32 {
            for a in d3.tuple_space() {
                let e = distinguishing_expression(&d3, &a, r).unwrap();
                let on_a = evaluate(&e, &d3).unwrap();
                let on_b = evaluate(&e, &d4).unwrap();
                assert!(on_a.contains(&a), "self-membership of {a} at {r}");
                for b in d4.tuple_space() {
                    let member = b.len() == on_b.arity() && on_b.contains(&b);
                    let dup_wins = space.rank(&a, &b).unwrap() >= Rank::Finite(r);
                    assert_eq!(member, dup_wins, "a = {a}, b = {b}, r = {r}");
                }
            }
        }
    }

    #[test]
    fn nesting_depth_grows_linearly_with_the_rank() {
        let d3 = corpus::cycle_db(3);
        for r in 0..=3u32 {
            let e = distinguishing_expression(&d3, &Tuple::empty(), r).unwrap();
            assert_eq!(crate::oracle::sj_depth(&e), r + 1);
        }
    }

    #[test]
    fn square_and_double_triangle_never_separate_at_any_rank() {
        let d4 = corpus::cycle_db(4);
        let two_d3 = corpus::disjoint_copies(&corpus::cycle_db(3), 2);
        let space = GameSpace::new(&d4, &two_d3).unwrap();
        for r in 0..=2u32 {
            for a in d4.tuple_space() {
                let e = distinguishing_expression(&d4, &a, r).unwrap();
                let on_b = evaluate(&e, &two_d3).unwrap();
                for b in two_d3.tuple_space() {
                    let member = b.len() == on_b.arity() && on_b.contains(&b);
                    let survives = space.rank(&a, &b).unwrap() >= Rank::Finite(r);
                    assert_eq!(member, survives, "a = {a}, b = {b}, r = {r}");
                }
            }
        }
    }

    #[test]
    fn verdict_and_certificate_agree_on_the_ordered_product_pair() {
        let (a, b) = corpus::ordered_product_dbs(5).unwrap();
        let space = GameSpace::new(&a, &b).unwrap();
        let v = space
            .solve_finite(&Tuple::empty(), &Tuple::empty(), 2)
            .unwrap();
        assert_eq!(v.winner, Winner::Duplicator);
    }

    #[test]
    fn synthesis_rejects_extra_predicates() {
        let db = parse_database("pred P/1 { (1) } rel S/1 { (1) }").unwrap();
        assert!(matches!(
            distinguishing_expression(&db, &t("(1)"), 1),
            Err(Error::ExtraPredicates)
        ));
    }

    #[test]
    fn budget_caps_are_reported() {
        let db = corpus::cycle_db(3);
        let tight = SynthesisBudget {
            max_rank: 1,
            max_pair_types: 20_000,
        };
        assert!(matches!(
            distinguishing_expression_with_budget(&db, &t("(1,2)"), 2, &tight),
            Err(Error::BudgetExceeded(_))
        ));
        let tiny_types = SynthesisBudget {
            max_rank: 8,
            max_pair_types: 1,
        };
        assert!(matches!(
            distinguishing_expression_with_budget(&db, &t("(1,2)"), 1, &tiny_types),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
