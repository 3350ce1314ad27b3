//! Schemas, finite databases, and tuple spaces.

use std::collections::{BTreeMap, BTreeSet};

use crate::condition::Vocabulary;
use crate::error::Error;
use crate::value::{Tuple, Value};

/// A finite set of relation names, each with a positive arity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Schema {
    rels: BTreeMap<String, usize>,
}

impl Schema {
    pub fn new() -> Schema {
        Schema::default()
    }

    pub fn add(&mut self, name: impl Into<String>, arity: usize) -> Result<(), Error> {
        let name = name.into();
        if arity == 0 {
            return Err(Error::InvalidParameter(format!(
                "relation `{name}` must have arity >= 1"
            )));
        }
        if self.rels.contains_key(&name) {
            return Err(Error::DuplicateDeclaration(name));
        }
        self.rels.insert(name, arity);
        Ok(())
    }

    /// Build a schema from (name, arity) pairs.
    pub fn from_pairs<S: Into<String>>(
        pairs: impl IntoIterator<Item = (S, usize)>,
    ) -> Result<Schema, Error> {
        let mut s = Schema::new();
        for (name, arity) in pairs {
            s.add(name, arity)?;
        }
        Ok(s)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.rels.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.rels.contains_key(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, usize)> {
        self.rels.iter().map(|(n, &a)| (n, a))
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.rels.keys()
    }

    pub fn len(&self) -> usize {
        self.rels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rels.is_empty()
    }

    pub fn max_arity(&self) -> usize {
        self.rels.values().copied().max().unwrap_or(0)
    }
}

/// A database: a schema, a vocabulary, and a finite relation for each
/// relation name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Database {
    schema: Schema,
    vocab: Vocabulary,
    contents: BTreeMap<String, BTreeSet<Tuple>>,
}

impl Database {
    /// An empty database over the given schema and vocabulary. Relation
    /// names must be disjoint from vocabulary predicate names.
    pub fn new(schema: Schema, vocab: Vocabulary) -> Result<Database, Error> {
        for name in schema.names() {
            if vocab.contains_name(name) {
                return Err(Error::NameClash(name.clone()));
            }
        }
        let contents = schema
            .names()
            .map(|n| (n.clone(), BTreeSet::new()))
            .collect();
        Ok(Database {
            schema,
            vocab,
            contents,
        })
    }

    /// Build a database and populate relations in one go.
    pub fn with_contents<S: Into<String>>(
        schema: Schema,
        vocab: Vocabulary,
        rels: impl IntoIterator<Item = (S, Vec<Tuple>)>,
    ) -> Result<Database, Error> {
        let mut db = Database::new(schema, vocab)?;
        for (name, tuples) in rels {
            let name = name.into();
            for t in tuples {
                db.insert(&name, t)?;
            }
        }
        Ok(db)
    }

    pub fn insert(&mut self, rel: &str, tuple: Tuple) -> Result<(), Error> {
        let arity = self
            .schema
            .arity(rel)
            .ok_or_else(|| Error::UnknownRelation(rel.to_owned()))?;
        if tuple.len() != arity {
            return Err(Error::ArityMismatch {
                name: rel.to_owned(),
                expected: arity,
                actual: tuple.len(),
            });
        }
        self.contents.get_mut(rel).unwrap().insert(tuple);
        Ok(())
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn relation(&self, name: &str) -> Result<&BTreeSet<Tuple>, Error> {
        self.contents
            .get(name)
            .ok_or_else(|| Error::UnknownRelation(name.to_owned()))
    }

    pub fn relations(&self) -> impl Iterator<Item = (&String, &BTreeSet<Tuple>)> {
        self.contents.iter()
    }

    /// True when every relation is empty.
    pub fn is_fully_empty(&self) -> bool {
        self.contents.values().all(|s| s.is_empty())
    }

    /// All values occurring in some relation.
    pub fn active_domain(&self) -> BTreeSet<Value> {
        let mut out = BTreeSet::new();
        for set in self.contents.values() {
            for t in set {
                out.extend(t.values().iter().cloned());
            }
        }
        out
    }

    /// The tuple space: every projection of every relation tuple, for every
    /// subset of positions. The empty position set contributes the empty
    /// tuple whenever the relation is nonempty.
    pub fn tuple_space(&self) -> BTreeSet<Tuple> {
        let mut out = BTreeSet::new();
        for (name, set) in &self.contents {
            let arity = self.schema.arity(name).unwrap();
            for mask in 0u32..(1 << arity) {
                let positions = mask_positions(mask, arity);
                for t in set {
                    out.insert(t.project(&positions));
                }
            }
        }
        out
    }
}

/// The 1-based positions selected by a bitmask, in increasing order.
pub(crate) fn mask_positions(mask: u32, arity: usize) -> Vec<usize> {
    (1..=arity)
        .filter(|&p| mask & (1 << (p - 1)) != 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tup(vals: &[Value]) -> Tuple {
        Tuple::new(vals.to_vec())
    }

    /// The tables used throughout the tests: R = {a,b}, S = {1,2},
    /// T = R x S.
    fn product_db() -> Database {
        let schema = Schema::from_pairs([("R", 1), ("S", 1), ("T", 2)]).unwrap();
        Database::with_contents(
            schema,
            Vocabulary::equality_only(),
            [
                ("R", vec![tup(&["a".into()]), tup(&["b".into()])]),
                ("S", vec![tup(&[1.into()]), tup(&[2.into()])]),
                (
                    "T",
                    vec![
                        tup(&["a".into(), 1.into()]),
                        tup(&["a".into(), 2.into()]),
                        tup(&["b".into(), 1.into()]),
                        tup(&["b".into(), 2.into()]),
                    ],
                ),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_name_clash_with_vocabulary() {
        let mut vocab = Vocabulary::equality_only();
        vocab.add_predicate("R", 1, Vec::new()).unwrap();
        let schema = Schema::from_pairs([("R", 1)]).unwrap();
        assert!(matches!(
            Database::new(schema, vocab),
            Err(Error::NameClash(_))
        ));
    }

    #[test]
    fn insert_checks_arity() {
        let mut db = product_db();
        assert!(db.insert("R", tup(&[1.into(), 2.into()])).is_err());
        assert!(db.insert("Q", tup(&[1.into()])).is_err());
    }

    #[test]
    fn tuple_space_of_product_db() {
        let space = db_space_strings(&product_db());
        assert_eq!(
            space,
            vec!["()", "(1)", "(2)", "(a)", "(a,1)", "(a,2)", "(b)", "(b,1)", "(b,2)"]
                .into_iter()
                .map(String::from)
                .collect::<Vec<_>>()
        );
    }

    fn db_space_strings(db: &Database) -> Vec<String> {
        db.tuple_space().iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn tuple_space_of_empty_database_is_empty() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let db = Database::new(schema, Vocabulary::equality_only()).unwrap();
        assert!(db.tuple_space().is_empty());
        assert!(db.active_domain().is_empty());
    }

    #[test]
    fn tuple_space_of_three_cycle() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let db = Database::with_contents(
            schema,
            Vocabulary::equality_only(),
            [(
                "R",
                vec![
                    tup(&[1.into(), 2.into()]),
                    tup(&[2.into(), 3.into()]),
                    tup(&[3.into(), 1.into()]),
                ],
            )],
        )
        .unwrap();
        assert_eq!(
            db_space_strings(&db),
            vec!["()", "(1)", "(1,2)", "(2)", "(2,3)", "(3)", "(3,1)"]
        );
    }

    #[test]
    fn tuple_space_size_bound() {
        let db = product_db();
        let bound: usize = db
            .schema()
            .iter()
            .map(|(n, a)| (1usize << a) * db.relation(n).unwrap().len())
            .sum();
        assert!(db.tuple_space().len() <= bound + 1);
    }

    #[test]
    fn active_domain_of_product_db() {
        let dom: Vec<String> = product_db()
            .active_domain()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(dom, vec!["1", "2", "a", "b"]);
    }

    #[test]
    fn tuple_space_closed_under_projection() {
        let db = product_db();
        let space = db.tuple_space();
        for t in &space {
            for mask in 0u32..(1 << t.len()) {
                let positions = mask_positions(mask, t.len());
                // every projection realized from an originating relation
                // tuple is itself in the space, so projecting a space
                // element along a position subset stays inside
                let p = t.project(&positions);
                assert!(space.contains(&p), "{p} missing");
            }
        }
    }
}
