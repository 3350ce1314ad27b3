//! Independent ground truth: bounded expression enumeration, a brute-force
//! indistinguishability check, direct combinatorial implementations of the
//! benchmark queries, and seeded random-database generators.
//!
//! Nothing here goes through the game solver or the synthesizer; the direct
//! oracles do not even share code with the expression evaluator.

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::Rng;

use crate::condition::{Condition, Vocabulary};
use crate::database::{mask_positions, Database, Schema};
use crate::error::Error;
use crate::eval::{evaluate, Relation};
use crate::expr::{Expr, ExprKind};
use crate::value::{Tuple, Value};

/// The nesting depth that the round count of the game bounds: the maximum
/// number of semijoin and projection nodes on any root-to-leaf path. Unions,
/// differences and selections do not count.
pub fn sj_depth(e: &Expr) -> u32 {
    fn rec(e: &Expr, memo: &mut HashMap<usize, u32>) -> u32 {
        if let Some(&d) = memo.get(&e.node_id()) {
            return d;
        }
        let d = match e.kind() {
            ExprKind::Rel(_) => 0,
            ExprKind::Union(l, r) | ExprKind::Diff(l, r) => rec(l, memo).max(rec(r, memo)),
            ExprKind::Select(_, c) => rec(c, memo),
            ExprKind::Project(_, c) => 1 + rec(c, memo),
            ExprKind::Semijoin(_, l, r) => 1 + rec(l, memo).max(rec(r, memo)),
        };
        memo.insert(e.node_id(), d);
        d
    }
    rec(e, &mut HashMap::new())
}

/// Bounds for the expression stream.
#[derive(Clone, Debug)]
pub struct EnumerationBounds {
    /// maximum semijoin/projection nesting depth
    pub max_sj_depth: u32,
    /// maximum number of AST nodes (conditions not counted)
    pub max_nodes: usize,
    /// conditions are conjunctions of up to this many distinct literals
    pub max_condition_literals: usize,
    /// admit negated equality (and negated order) literals in the pool
    pub negated_atoms: bool,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds {
            max_sj_depth: 2,
            max_nodes: 5,
            max_condition_literals: 2,
            negated_atoms: true,
        }
    }
}

/// The atom pool over a pair of variable ranges: equality atoms on all
/// variable pairs, order atoms when the vocabulary is ordered, and their
/// negations when admitted.
fn literal_pool(
    left_arity: usize,
    right_arity: usize,
    vocab: &Vocabulary,
    bounds: &EnumerationBounds,
) -> Vec<Condition> {
    use crate::condition::Var;
    let vars: Vec<Var> = (1..=left_arity)
        .map(Var::Left)
        .chain((1..=right_arity).map(Var::Right))
        .collect();
    let mut pool = Vec::new();
    for i in 0..vars.len() {
        for j in (i + 1)..vars.len() {
            pool.push(Condition::eq(vars[i], vars[j]));
            if bounds.negated_atoms {
                pool.push(Condition::neq(vars[i], vars[j]));
            }
        }
    }
    if vocab.ordered() {
        for i in 0..vars.len() {
            for j in 0..vars.len() {
                if i != j {
                    pool.push(Condition::lt(vars[i], vars[j]));
                    if bounds.negated_atoms {
                        pool.push(Condition::not(Condition::lt(vars[i], vars[j])));
                    }
                }
            }
        }
    }
    pool
}

/// Two pool entries that contradict each other outright (an atom and its
/// negation); conjunctions containing both are skipped.
fn complementary(a: &Condition, b: &Condition) -> bool {
    match (a, b) {
        (Condition::Not(inner), other) | (other, Condition::Not(inner)) => inner.as_ref() == other,
        _ => false,
    }
}

/// All conjunctions of 1..=max distinct pool literals, in pool order.
fn condition_pool(
    left_arity: usize,
    right_arity: usize,
    vocab: &Vocabulary,
    bounds: &EnumerationBounds,
) -> Vec<Condition> {
    let pool = literal_pool(left_arity, right_arity, vocab, bounds);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        pool: &[Condition],
        start: usize,
        left: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Condition>,
    ) {
        if !stack.is_empty() {
            out.push(Condition::conjunction(
                stack.iter().map(|&i| pool[i].clone()),
            ));
        }
        if left == 0 {
            return;
        }
        for i in start..pool.len() {
            if stack.iter().any(|&j| complementary(&pool[j], &pool[i])) {
                continue;
            }
            stack.push(i);
            rec(pool, i + 1, left - 1, stack, out);
            stack.pop();
        }
    }
    rec(
        &pool,
        0,
        bounds.max_condition_literals,
        &mut stack,
        &mut out,
    );
    out
}

/// Enumerate every expression over the schema within the bounds:
/// relations; unions and differences of equal arity; all projections;
/// selections and semijoins with conditions from the pool. Structurally
/// deduplicated (union children sorted), deterministic order, grouped by
/// ascending node count.
pub fn enumerate_expressions(
    schema: &Schema,
    vocab: &Vocabulary,
    bounds: &EnumerationBounds,
) -> Vec<Expr> {
    let mut by_size: Vec<Vec<(Expr, u32)>> = vec![Vec::new(); bounds.max_nodes + 1];
    let mut seen: HashSet<Expr> = HashSet::new();
    let mut cond_cache: HashMap<(usize, usize), Vec<Condition>> = HashMap::new();
    let conds = |l: usize, r: usize, cache: &mut HashMap<(usize, usize), Vec<Condition>>| {
        cache
            .entry((l, r))
            .or_insert_with(|| condition_pool(l, r, vocab, bounds))
            .clone()
    };

    if bounds.max_nodes >= 1 {
        let mut rels: Vec<(Expr, u32)> = Vec::new();
        for (name, arity) in schema.iter() {
            let e = Expr::rel(name.clone(), arity);
            if seen.insert(e.clone()) {
                rels.push((e, 0));
            }
        }
        by_size[1] = rels;
    }

    for size in 2..=bounds.max_nodes {
        let mut found: Vec<(Expr, u32)> = Vec::new();
        let push = |e: Expr, d: u32, seen: &mut HashSet<Expr>, found: &mut Vec<(Expr, u32)>| {
            if d <= bounds.max_sj_depth && seen.insert(e.clone()) {
                found.push((e, d));
            }
        };

        // unary operators over children one node smaller
        for (child, d) in by_size[size - 1].clone() {
            let arity = child.arity();
            for mask in 0u32..(1 << arity) {
                let positions = mask_positions(mask, arity);
                let e = Expr::project(positions, child.clone()).unwrap();
                push(e, d + 1, &mut seen, &mut found);
            }
            for cond in conds(arity, 0, &mut cond_cache) {
                let e = Expr::select(cond, child.clone()).unwrap();
                push(e, d, &mut seen, &mut found);
            }
        }

        // binary operators over children whose sizes sum to size - 1
        for s1 in 1..size - 1 {
            let s2 = size - 1 - s1;
            for (l, dl) in by_size[s1].clone() {
                for (r, dr) in by_size[s2].clone() {
                    let d = dl.max(dr);
                    if l.arity() == r.arity() {
                        let (a, b) = if l <= r {
                            (l.clone(), r.clone())
                        } else {
                            (r.clone(), l.clone())
                        };
                        push(Expr::union(a, b).unwrap(), d, &mut seen, &mut found);
                        push(
                            Expr::diff(l.clone(), r.clone()).unwrap(),
                            d,
                            &mut seen,
                            &mut found,
                        );
                    }
                    for cond in conds(l.arity(), r.arity(), &mut cond_cache) {
                        let e = Expr::semijoin(cond, l.clone(), r.clone()).unwrap();
                        push(e, d + 1, &mut seen, &mut found);
                    }
                }
            }
        }
        by_size[size] = found;
    }

    by_size.into_iter().flatten().map(|(e, _)| e).collect()
}

/// True iff the two tuples agree on membership in every enumerated
/// expression. A finite stand-in for quantifying over all expressions.
pub fn indistinguishable_bruteforce(
    left_db: &Database,
    right_db: &Database,
    left: &Tuple,
    right: &Tuple,
    bounds: &EnumerationBounds,
) -> Result<bool, Error> {
    if left_db.schema() != right_db.schema() || left_db.vocab() != right_db.vocab() {
        return Err(Error::IncompatibleDatabases);
    }
    for e in enumerate_expressions(left_db.schema(), left_db.vocab(), bounds) {
        if e.arity() != left.len() && e.arity() != right.len() {
            continue;
        }
        let in_left = evaluate(&e, left_db)?.contains(left);
        let in_right = evaluate(&e, right_db)?.contains(right);
        if in_left != in_right {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------
// direct oracles: nested loops and depth-first search, nothing shared with
// the expression evaluator
// ---------------------------------------------------------------------

/// Does T contain the full product R x S? T must have arity
/// arity(R) + arity(S).
pub fn cartesian_contains(t: &Relation, r: &Relation, s: &Relation) -> bool {
    assert_eq!(t.arity(), r.arity() + s.arity());
    for a in r.iter() {
        for b in s.iter() {
            if !t.contains(&a.concat(b)) {
                return false;
            }
        }
    }
    true
}

/// Is T contained in the product R x S?
pub fn contained_in_product(t: &Relation, r: &Relation, s: &Relation) -> bool {
    assert_eq!(t.arity(), r.arity() + s.arity());
    let p = r.arity();
    for tt in t.iter() {
        let head = Tuple::new(tt.values()[..p].to_vec());
        let tail = Tuple::new(tt.values()[p..].to_vec());
        if !r.contains(&head) || !s.contains(&tail) {
            return false;
        }
    }
    true
}

/// Relational composition of two binary relations: pairs (a, c) such that
/// (a, b) is in R and (b, c) is in S for some b.
pub fn composition(r: &Relation, s: &Relation) -> Relation {
    assert_eq!(r.arity(), 2);
    assert_eq!(s.arity(), 2);
    let mut out = Relation::new(2);
    for a in r.iter() {
        for b in s.iter() {
            if a.values()[1] == b.values()[0] {
                out.insert(Tuple::new(vec![
                    a.values()[0].clone(),
                    b.values()[1].clone(),
                ]))
                .unwrap();
            }
        }
    }
    out
}

/// Is there a walk with k edges (vertices may repeat)?
pub fn has_path(r: &Relation, k: u32) -> bool {
    assert_eq!(r.arity(), 2);
    assert!(k >= 1);
    // vertices that can start a walk of i edges; i = 1 is the edge sources
    let mut starts: BTreeSet<&Value> = r.iter().map(|t| &t.values()[0]).collect();
    for _ in 1..k {
        starts = r
            .iter()
            .filter(|t| starts.contains(&t.values()[1]))
            .map(|t| &t.values()[0])
            .collect();
        if starts.is_empty() {
            return false;
        }
    }
    !starts.is_empty()
}

/// Is there a simple path with k edges (k + 1 distinct vertices)?
pub fn has_simple_path(r: &Relation, k: u32) -> bool {
    assert_eq!(r.arity(), 2);
    assert!(k >= 1);
    let verts: BTreeSet<&Value> = r.iter().flat_map(|t| t.values().iter()).collect();
    fn extend<'v>(r: &'v Relation, path: &mut Vec<&'v Value>, remaining: u32) -> bool {
        if remaining == 0 {
            return true;
        }
        let last = *path.last().unwrap();
        for t in r.iter() {
            let (from, to) = (&t.values()[0], &t.values()[1]);
            if from == last && !path.contains(&to) {
                path.push(to);
                if extend(r, path, remaining - 1) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    for v in verts {
        let mut path = vec![v];
        if extend(r, &mut path, k) {
            return true;
        }
    }
    false
}

/// Is there a cycle with k edges (k distinct vertices, closing edge back to
/// the start)? k = 1 means a self-loop.
pub fn has_cycle(r: &Relation, k: u32) -> bool {
    assert_eq!(r.arity(), 2);
    assert!(k >= 1);
    fn extend<'v>(
        r: &'v Relation,
        start: &'v Value,
        path: &mut Vec<&'v Value>,
        remaining: u32,
    ) -> bool {
        let last = *path.last().unwrap();
        if remaining == 0 {
            return r
                .iter()
                .any(|t| &t.values()[0] == last && &t.values()[1] == start);
        }
        for t in r.iter() {
            let (from, to) = (&t.values()[0], &t.values()[1]);
            if from == last && to != start && !path.contains(&to) {
                path.push(to);
                if extend(r, start, path, remaining - 1) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let verts: BTreeSet<&Value> = r.iter().flat_map(|t| t.values().iter()).collect();
    for v in verts {
        let mut path = vec![v];
        if extend(r, v, &mut path, k - 1) {
            return true;
        }
    }
    false
}

/// Does the unary relation have at least k elements?
pub fn count_at_least(s: &Relation, k: u32) -> bool {
    assert_eq!(s.arity(), 1);
    s.len() >= k as usize
}

// ---------------------------------------------------------------------
// seeded random databases
// ---------------------------------------------------------------------

/// Shape of the random databases: small on purpose, so that exhaustive
/// checks over tuple spaces and enumeration streams stay fast.
#[derive(Clone, Debug)]
pub struct RandomDbProfile {
    pub relations: Vec<(String, usize)>,
    pub ordered: bool,
    /// universe is {1..=max_universe}
    pub max_universe: usize,
    pub max_tuples: usize,
}

impl RandomDbProfile {
    /// A single binary edge relation.
    pub fn graph() -> RandomDbProfile {
        RandomDbProfile {
            relations: vec![("R".into(), 2)],
            ordered: false,
            max_universe: 4,
            max_tuples: 4,
        }
    }

    /// A single unary relation.
    pub fn unary(ordered: bool) -> RandomDbProfile {
        RandomDbProfile {
            relations: vec![("S".into(), 1)],
            ordered,
            max_universe: 6,
            max_tuples: 6,
        }
    }

    /// Unary R and S plus binary T, the product-query shape.
    pub fn product_shape() -> RandomDbProfile {
        RandomDbProfile {
            relations: vec![("R".into(), 1), ("S".into(), 1), ("T".into(), 2)],
            ordered: false,
            max_universe: 3,
            max_tuples: 4,
        }
    }

    /// One or two relations of arity <= 2 chosen by the generator itself.
    pub fn mixed(rng: &mut impl Rng) -> RandomDbProfile {
        let names = ["R", "S"];
        let count = rng.gen_range(1..=2usize);
        let relations = names
            .iter()
            .take(count)
            .map(|n| (n.to_string(), rng.gen_range(1..=2usize)))
            .collect();
        RandomDbProfile {
            relations,
            ordered: false,
            max_universe: 4,
            max_tuples: 4,
        }
    }

    fn schema(&self) -> Schema {
        Schema::from_pairs(self.relations.iter().map(|(n, a)| (n.clone(), *a))).unwrap()
    }

    fn vocab(&self) -> Vocabulary {
        if self.ordered {
            Vocabulary::with_order()
        } else {
            Vocabulary::equality_only()
        }
    }
}

/// One random database matching the profile.
pub fn random_database(rng: &mut impl Rng, profile: &RandomDbProfile) -> Database {
    let universe = rng.gen_range(1..=profile.max_universe) as i64;
    let mut db = Database::new(profile.schema(), profile.vocab()).unwrap();
    for (name, arity) in &profile.relations {
        let count = rng.gen_range(0..=profile.max_tuples);
        for _ in 0..count {
            let t: Tuple = (0..*arity)
                .map(|_| Value::Int(rng.gen_range(1..=universe)))
                .collect();
            db.insert(name, t).unwrap();
        }
    }
    db
}

/// Two random databases over the same schema and vocabulary.
pub fn random_database_pair(rng: &mut impl Rng, profile: &RandomDbProfile) -> (Database, Database) {
    (random_database(rng, profile), random_database(rng, profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::parse::{parse_database, parse_expression};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rel_of(db: &Database, name: &str) -> Relation {
        Relation::from_tuples(
            db.schema().arity(name).unwrap(),
            db.relation(name).unwrap().iter().cloned(),
        )
        .unwrap()
    }

    #[test]
    fn depth_counts_semijoins_and_projections_only() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let vocab = Vocabulary::equality_only();
        let cases = [
            ("R", 0),
            ("project[1]((R semijoin[x2 = y1] R))", 2),
            ("(R union select[x1 = x2](R))", 0),
            ("((R semijoin[x1 = y1] R) diff R)", 1),
        ];
        for (src, want) in cases {
            let e = parse_expression(src, &schema, &vocab).unwrap();
            assert_eq!(sj_depth(&e), want, "{src}");
        }
    }

    #[test]
    fn enumeration_includes_the_small_unary_combinations() {
        let schema = Schema::from_pairs([("S", 1)]).unwrap();
        let vocab = Vocabulary::equality_only();
        let bounds = EnumerationBounds {
            max_sj_depth: 0,
            max_nodes: 3,
            ..Default::default()
        };
        let stream = enumerate_expressions(&schema, &vocab, &bounds);
        let want = ["S", "(S union S)", "(S diff S)"];
        for w in want {
            let e = parse_expression(w, &schema, &vocab).unwrap();
            assert!(stream.contains(&e), "{w} missing");
        }
        // depth 0 excludes semijoins and projections
        assert!(stream.iter().all(|e| sj_depth(e) == 0));
    }

    #[test]
    fn enumeration_includes_projections_and_semijoins_at_depth_one() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let vocab = Vocabulary::equality_only();
        let bounds = EnumerationBounds {
            max_sj_depth: 1,
            max_nodes: 3,
            ..Default::default()
        };
        let stream = enumerate_expressions(&schema, &vocab, &bounds);
        for w in [
            "project[](R)",
            "project[1](R)",
            "project[2](R)",
            "project[1,2](R)",
            "(R semijoin[x1 = y1] R)",
            "(R semijoin[x1 != y2 & x2 = y1] R)",
        ] {
            let e = parse_expression(w, &schema, &vocab).unwrap();
            assert!(stream.contains(&e), "{w} missing");
        }
    }

    #[test]
    fn enumeration_reaches_the_product_containment_pattern() {
        let (a, _) = corpus::figure1();
        let bounds = EnumerationBounds {
            max_sj_depth: 2,
            max_nodes: 7,
            max_condition_literals: 1,
            negated_atoms: false,
        };
        let stream = enumerate_expressions(a.schema(), a.vocab(), &bounds);
        let target = corpus::expr_t_subset_rxs(1, 1);
        assert!(stream.contains(&target));
    }

    #[test]
    fn enumeration_is_deterministic_and_deduplicated() {
        let schema = Schema::from_pairs([("R", 2), ("S", 1)]).unwrap();
        let vocab = Vocabulary::equality_only();
        let bounds = EnumerationBounds {
            max_nodes: 4,
            ..Default::default()
        };
        let s1 = enumerate_expressions(&schema, &vocab, &bounds);
        let s2 = enumerate_expressions(&schema, &vocab, &bounds);
        assert_eq!(s1, s2);
        let set: HashSet<_> = s1.iter().cloned().collect();
        assert_eq!(set.len(), s1.len());
    }

    #[test]
    fn bruteforce_on_identical_databases() {
        let db = parse_database("rel S/1 { (1) (2) }").unwrap();
        let t = Tuple::new(vec![1.into()]);
        assert!(
            indistinguishable_bruteforce(&db, &db, &t, &t, &EnumerationBounds::default()).unwrap()
        );
    }

    #[test]
    fn bruteforce_agrees_with_the_composition_tables() {
        let (a, b) = corpus::figure2();
        let bounds = EnumerationBounds {
            max_nodes: 4,
            ..Default::default()
        };
        assert!(
            indistinguishable_bruteforce(&a, &b, &Tuple::empty(), &Tuple::empty(), &bounds)
                .unwrap()
        );
    }

    #[test]
    fn bruteforce_separates_singleton_from_pair() {
        let one = parse_database("rel S/1 { (1) }").unwrap();
        let two = parse_database("rel S/1 { (1) (2) }").unwrap();
        // the two-distinct-elements expression is inside the default bounds
        assert!(!indistinguishable_bruteforce(
            &one,
            &two,
            &Tuple::empty(),
            &Tuple::empty(),
            &EnumerationBounds::default()
        )
        .unwrap());
    }

    #[test]
    fn composition_oracle_matches_the_documented_tables() {
        let (a, b) = corpus::figure2();
        let comp_a = composition(&rel_of(&a, "R"), &rel_of(&a, "S"));
        assert_eq!(comp_a.tuples(), rel_of(&a, "T").tuples());
        let comp_b = composition(&rel_of(&b, "R"), &rel_of(&b, "S"));
        let t_b = rel_of(&b, "T");
        let fwd = comp_b.iter().all(|t| t_b.contains(t));
        let bwd = t_b.iter().all(|t| comp_b.contains(t));
        assert!(!fwd && !bwd);
    }

    #[test]
    fn cartesian_oracles_on_figure1() {
        let (a, b) = corpus::figure1();
        assert!(cartesian_contains(
            &rel_of(&a, "T"),
            &rel_of(&a, "R"),
            &rel_of(&a, "S")
        ));
        assert!(!cartesian_contains(
            &rel_of(&b, "T"),
            &rel_of(&b, "R"),
            &rel_of(&b, "S")
        ));
        assert!(contained_in_product(
            &rel_of(&a, "T"),
            &rel_of(&a, "R"),
            &rel_of(&a, "S")
        ));
        assert!(contained_in_product(
            &rel_of(&b, "T"),
            &rel_of(&b, "R"),
            &rel_of(&b, "S")
        ));
    }

    #[test]
    fn walk_oracle_on_cycles_and_lines() {
        let d3 = rel_of(&corpus::cycle_db(3), "R");
        for k in 1..=6 {
            assert!(has_path(&d3, k), "cycles have walks of every length");
        }
        let line = rel_of(&parse_database("rel R/2 { (1,2) (2,3) }").unwrap(), "R");
        assert!(has_path(&line, 2));
        assert!(!has_path(&line, 3));
    }

    #[test]
    fn simple_path_oracle_needs_distinct_vertices() {
        let d5 = rel_of(&corpus::cycle_db(5), "R");
        let d4 = rel_of(&corpus::cycle_db(4), "R");
        assert!(has_simple_path(&d5, 4));
        assert!(!has_simple_path(&d4, 4));
        // a two-cycle has walks of length 2 but no simple one
        let swap = rel_of(&parse_database("rel R/2 { (1,2) (2,1) }").unwrap(), "R");
        assert!(has_path(&swap, 2));
        assert!(!has_simple_path(&swap, 2));
    }

    #[test]
    fn cycle_oracle_on_the_benchmark_shapes() {
        let two_d3 = rel_of(&corpus::disjoint_copies(&corpus::cycle_db(3), 2), "R");
        let d4 = rel_of(&corpus::cycle_db(4), "R");
        assert!(has_cycle(&two_d3, 3));
        assert!(!has_cycle(&d4, 3));
        assert!(has_cycle(&d4, 4));
        let loop_db = rel_of(&parse_database("rel R/2 { (1,1) }").unwrap(), "R");
        assert!(has_cycle(&loop_db, 1));
        assert!(!has_cycle(&loop_db, 2));
        let swap = rel_of(&parse_database("rel R/2 { (1,2) (2,1) }").unwrap(), "R");
        assert!(has_cycle(&swap, 2));
    }

    #[test]
    fn random_databases_respect_their_profile() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let profile = RandomDbProfile::graph();
        for _ in 0..20 {
            let db = random_database(&mut rng, &profile);
            assert!(db.relation("R").unwrap().len() <= profile.max_tuples);
            for v in db.active_domain() {
                match v {
                    Value::Int(i) => assert!((1..=4).contains(&i)),
                    Value::Sym(_) => panic!("unexpected symbol"),
                }
            }
        }
    }
}
