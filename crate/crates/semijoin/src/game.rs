//! The two-player comparison game that characterizes the discerning power
//! of the semijoin algebra.
//!
//! Two databases over the same schema and vocabulary are compared. A
//! configuration holds one tuple per database, drawn from its tuple space
//! (or the empty tuple). The spoiler picks a tuple in either tuple space;
//! the duplicator must answer in the other one with a tuple that has the
//! same projection memberships as the move and forms the same joint atomic
//! type with the previous tuple on its side. The duplicator wins the
//! m-round game by surviving m rounds from a configuration that satisfies
//! the 0-round conditions; the infinite game is decided by a greatest
//! fixpoint over the finite configuration space.

use std::cell::OnceCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::condition::{atomic_type, joint_atomic_type, Condition};
use crate::database::{mask_positions, Database};
use crate::error::Error;
use crate::value::Tuple;

/// Which of the two databases a tuple or move belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A game state: one tuple per database.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    pub left: Tuple,
    pub right: Tuple,
}

impl Configuration {
    pub fn new(left: Tuple, right: Tuple) -> Configuration {
        Configuration { left, right }
    }

    pub fn side(&self, side: Side) -> &Tuple {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.left, self.right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    Spoiler,
    Duplicator,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Winner::Spoiler => write!(f, "spoiler"),
            Winner::Duplicator => write!(f, "duplicator"),
        }
    }
}

/// The duplicator's survival rank: the largest m such that the duplicator
/// wins the m-round game, `Lost` when even the 0-round conditions fail, and
/// `Infinite` when the duplicator can play forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rank {
    Lost,
    Finite(u32),
    Infinite,
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Lost => write!(f, "lost"),
            Rank::Finite(k) => write!(f, "{k}"),
            Rank::Infinite => write!(f, "inf"),
        }
    }
}

/// A spoiler strategy witness: a move and, for every legal reply, the
/// continuation. A node with no replies means the duplicator is stuck.
#[derive(Clone, Debug)]
pub struct SpoilerTree {
    pub side: Side,
    pub mv: Tuple,
    pub replies: Vec<(Tuple, SpoilerTree)>,
}

impl SpoilerTree {
    pub fn depth(&self) -> u32 {
        1 + self
            .replies
            .iter()
            .map(|(_, t)| t.depth())
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .replies
            .iter()
            .map(|(_, t)| t.node_count())
            .sum::<usize>()
    }
}

/// The strategy certificate attached to a verdict.
#[derive(Clone, Debug)]
pub enum Strategy {
    /// The spoiler wins. `None` when the initial configuration itself
    /// violates the 0-round conditions; otherwise an optimal move tree of
    /// depth at most rank + 1.
    Spoiler(Option<SpoilerTree>),
    /// The duplicator wins; the configurations it can hold for the queried
    /// number of rounds (`None` = forever).
    Duplicator {
        rounds: Option<u32>,
        region: Vec<Configuration>,
    },
}

/// Winner, survival rank, and strategy certificate for a queried game.
#[derive(Clone, Debug)]
pub struct GameVerdict {
    pub winner: Winner,
    pub rank: Rank,
    pub strategy: Strategy,
}

/// All per-side precomputation for one pair of databases: the tuple spaces,
/// projection-membership signatures, atomic-type ids and joint-type ids.
/// Signature and type ids are interned in tables shared by both sides, so
/// equal ids mean equal signatures or types across databases.
struct SideData {
    elems: Vec<Tuple>,
    index: HashMap<Tuple, usize>,
    movable: Vec<bool>,
    sig: Vec<u32>,
    type_id: Vec<u32>,
    /// joint type id of (previous, current), indexed previous * n + current
    jtype: Vec<u32>,
    /// movable element indices grouped by signature id
    by_sig: HashMap<u32, Vec<usize>>,
}

struct RankData {
    /// survival rank per configuration, indexed ia * n_b + ib
    ranks: Vec<Rank>,
    /// sweeps until the fixpoint stabilized
    sweeps: u32,
}

/// A solved game arena for a fixed pair of databases. Construction
/// precomputes the tuple spaces and type tables; ranks are computed on
/// first use and cached.
pub struct GameSpace<'d> {
    left_db: &'d Database,
    right_db: &'d Database,
    sides: [SideData; 2],
    ranks: OnceCell<RankData>,
}

impl<'d> GameSpace<'d> {
    /// Build the arena. The databases must have identical schemas and
    /// vocabularies.
    pub fn new(left: &'d Database, right: &'d Database) -> Result<GameSpace<'d>, Error> {
        if left.schema() != right.schema() || left.vocab() != right.vocab() {
            return Err(Error::IncompatibleDatabases);
        }
        let mut interner = Interner::default();
        let l = SideData::build(left, &mut interner);
        let r = SideData::build(right, &mut interner);
        Ok(GameSpace {
            left_db: left,
            right_db: right,
            sides: [l, r],
            ranks: OnceCell::new(),
        })
    }

    pub fn database(&self, side: Side) -> &Database {
        match side {
            Side::Left => self.left_db,
            Side::Right => self.right_db,
        }
    }

    fn side(&self, side: Side) -> &SideData {
        match side {
            Side::Left => &self.sides[0],
            Side::Right => &self.sides[1],
        }
    }

    /// The configuration elements of a side: its tuple space plus the empty
    /// tuple, in canonical order.
    pub fn elements(&self, side: Side) -> &[Tuple] {
        &self.side(side).elems
    }

    /// The tuples the players may pick on a side (the tuple space proper).
    pub fn moves(&self, side: Side) -> Vec<&Tuple> {
        let s = self.side(side);
        s.elems
            .iter()
            .enumerate()
            .filter(|(i, _)| s.movable[*i])
            .map(|(_, t)| t)
            .collect()
    }

    fn elem_index(&self, side: Side, t: &Tuple) -> Result<usize, Error> {
        self.side(side)
            .index
            .get(t)
            .copied()
            .ok_or_else(|| Error::TupleNotInSpace(t.to_string()))
    }

    fn move_index(&self, side: Side, t: &Tuple) -> Result<usize, Error> {
        let i = self.elem_index(side, t)?;
        if !self.side(side).movable[i] {
            return Err(Error::TupleNotInSpace(t.to_string()));
        }
        Ok(i)
    }

    fn config_indices(&self, cfg: &Configuration) -> Result<(usize, usize), Error> {
        Ok((
            self.elem_index(Side::Left, &cfg.left)?,
            self.elem_index(Side::Right, &cfg.right)?,
        ))
    }

    /// The 0-round win conditions: the two tuples agree on every projection
    /// membership and have the same atomic type.
    pub fn win0(&self, left: &Tuple, right: &Tuple) -> Result<bool, Error> {
        let ia = self.elem_index(Side::Left, left)?;
        let ib = self.elem_index(Side::Right, right)?;
        Ok(self.win0_idx(ia, ib))
    }

    fn win0_idx(&self, ia: usize, ib: usize) -> bool {
        let l = &self.sides[0];
        let r = &self.sides[1];
        l.elems[ia].len() == r.elems[ib].len()
            && l.sig[ia] == r.sig[ib]
            && l.type_id[ia] == r.type_id[ib]
    }

    /// All legal answers to a move: tuples of the opposite space whose
    /// projection memberships match the move's and whose joint type with
    /// the previous tuple on their side matches the move's joint type with
    /// the previous tuple on its side. Sorted canonically.
    pub fn legal_answers(
        &self,
        cfg: &Configuration,
        side: Side,
        mv: &Tuple,
    ) -> Result<Vec<Tuple>, Error> {
        let (ia, ib) = self.config_indices(cfg)?;
        let im = self.move_index(side, mv)?;
        let (prev_move_side, prev_answer_side) = match side {
            Side::Left => (ia, ib),
            Side::Right => (ib, ia),
        };
        let opp = self.side(side.opposite());
        Ok(self
            .answer_indices(side, prev_move_side, prev_answer_side, im)
            .into_iter()
            .map(|i| opp.elems[i].clone())
            .collect())
    }

    /// Indices (in the opposite side's element list) of the legal answers.
    fn answer_indices(
        &self,
        move_side: Side,
        prev_move_side: usize,
        prev_answer_side: usize,
        im: usize,
    ) -> Vec<usize> {
        let ms = self.side(move_side);
        let opp = self.side(move_side.opposite());
        let want_sig = ms.sig[im];
        let want_jtype = ms.jtype[prev_move_side * ms.elems.len() + im];
        let move_len = ms.elems[im].len();
        let prev_len = ms.elems[prev_move_side].len();
        let n = opp.elems.len();
        match opp.by_sig.get(&want_sig) {
            None => Vec::new(),
            Some(cands) => cands
                .iter()
                .copied()
                .filter(|&i| {
                    opp.elems[i].len() == move_len
                        && opp.elems[prev_answer_side].len() == prev_len
                        && opp.jtype[prev_answer_side * n + i] == want_jtype
                })
                .collect(),
        }
    }

    fn rank_data(&self) -> &RankData {
        self.ranks.get_or_init(|| self.compute_ranks())
    }

    /// Greatest-fixpoint computation. Start from the configurations that
    /// satisfy the 0-round conditions; each sweep removes the configurations
    /// where some spoiler move has no legal answer leading back into the
    /// surviving set. Removed configurations get the sweep index as their
    /// finite survival rank.
    fn compute_ranks(&self) -> RankData {
        let n_a = self.sides[0].elems.len();
        let n_b = self.sides[1].elems.len();
        let mut ranks = vec![Rank::Lost; n_a * n_b];
        let mut alive = vec![false; n_a * n_b];
        for ia in 0..n_a {
            for ib in 0..n_b {
                if self.win0_idx(ia, ib) {
                    alive[ia * n_b + ib] = true;
                }
            }
        }
        let mut sweeps = 0u32;
        loop {
            let mut removals = Vec::new();
            for ia in 0..n_a {
                for ib in 0..n_b {
                    let c = ia * n_b + ib;
                    if alive[c] && !self.all_moves_answerable(ia, ib, &alive, n_b) {
                        removals.push(c);
                    }
                }
            }
            if removals.is_empty() {
                break;
            }
            sweeps += 1;
            for c in removals {
                alive[c] = false;
                ranks[c] = Rank::Finite(sweeps - 1);
            }
        }
        for (c, &a) in alive.iter().enumerate() {
            if a {
                ranks[c] = Rank::Infinite;
            }
        }
        RankData { ranks, sweeps }
    }

    /// Does every spoiler move from (ia, ib) have a legal answer whose
    /// successor configuration is still alive?
    fn all_moves_answerable(&self, ia: usize, ib: usize, alive: &[bool], n_b: usize) -> bool {
        for (side, prev_m, prev_a) in [(Side::Left, ia, ib), (Side::Right, ib, ia)] {
            let ms = self.side(side);
            for im in 0..ms.elems.len() {
                if !ms.movable[im] {
                    continue;
                }
                let found = self
                    .answer_indices(side, prev_m, prev_a, im)
                    .into_iter()
                    .any(|ians| {
                        let (na, nb) = match side {
                            Side::Left => (im, ians),
                            Side::Right => (ians, im),
                        };
                        alive[na * n_b + nb]
                    });
                if !found {
                    return false;
                }
            }
        }
        true
    }

    /// The survival rank of a configuration.
    pub fn rank(&self, left: &Tuple, right: &Tuple) -> Result<Rank, Error> {
        let ia = self.elem_index(Side::Left, left)?;
        let ib = self.elem_index(Side::Right, right)?;
        Ok(self.rank_idx(ia, ib))
    }

    fn rank_idx(&self, ia: usize, ib: usize) -> Rank {
        let n_b = self.sides[1].elems.len();
        self.rank_data().ranks[ia * n_b + ib]
    }

    /// Number of sweeps until the fixpoint stabilized.
    pub fn sweeps(&self) -> u32 {
        self.rank_data().sweeps
    }

    /// The duplicator's winning region for the infinite game.
    pub fn winning_region(&self) -> Vec<Configuration> {
        self.region_with_rank(Rank::Infinite)
    }

    fn region_with_rank(&self, min: Rank) -> Vec<Configuration> {
        let n_b = self.sides[1].elems.len();
        let mut out = Vec::new();
        for (c, &r) in self.rank_data().ranks.iter().enumerate() {
            if r >= min {
                out.push(Configuration::new(
                    self.sides[0].elems[c / n_b].clone(),
                    self.sides[1].elems[c % n_b].clone(),
                ));
            }
        }
        out
    }

    /// Decide the m-round game from a configuration.
    pub fn solve_finite(&self, left: &Tuple, right: &Tuple, m: u32) -> Result<GameVerdict, Error> {
        let rank = self.rank(left, right)?;
        let winner = if rank >= Rank::Finite(m) {
            Winner::Duplicator
        } else {
            Winner::Spoiler
        };
        let strategy = match winner {
            Winner::Duplicator => Strategy::Duplicator {
                rounds: Some(m),
                region: self.region_with_rank(Rank::Finite(m)),
            },
            Winner::Spoiler => Strategy::Spoiler(self.spoiler_tree_inner(left, right)?),
        };
        Ok(GameVerdict {
            winner,
            rank,
            strategy,
        })
    }

    /// Decide the infinite game from a configuration.
    pub fn solve_infinite(&self, left: &Tuple, right: &Tuple) -> Result<GameVerdict, Error> {
        let rank = self.rank(left, right)?;
        let winner = if rank == Rank::Infinite {
            Winner::Duplicator
        } else {
            Winner::Spoiler
        };
        let strategy = match winner {
            Winner::Duplicator => Strategy::Duplicator {
                rounds: None,
                region: self.winning_region(),
            },
            Winner::Spoiler => Strategy::Spoiler(self.spoiler_tree_inner(left, right)?),
        };
        Ok(GameVerdict {
            winner,
            rank,
            strategy,
        })
    }

    /// A legal answer maximizing the successor's survival rank; ties broken
    /// by canonical tuple order. `None` when no legal answer exists.
    pub fn best_duplicator_move(
        &self,
        cfg: &Configuration,
        side: Side,
        mv: &Tuple,
    ) -> Result<Option<Tuple>, Error> {
        let (ia, ib) = self.config_indices(cfg)?;
        let im = self.move_index(side, mv)?;
        let (prev_m, prev_a) = match side {
            Side::Left => (ia, ib),
            Side::Right => (ib, ia),
        };
        let opp = self.side(side.opposite());
        let mut best: Option<(Rank, usize)> = None;
        for ians in self.answer_indices(side, prev_m, prev_a, im) {
            let (na, nb) = match side {
                Side::Left => (im, ians),
                Side::Right => (ians, im),
            };
            let r = self.rank_idx(na, nb);
            // answers come out in ascending canonical order, so strict
            // improvement keeps the canonically least among maximal ranks
            if best.is_none_or(|(br, _)| r > br) {
                best = Some((r, ians));
            }
        }
        Ok(best.map(|(_, i)| opp.elems[i].clone()))
    }

    /// A spoiler move from which every legal answer decreases the
    /// duplicator's survival rank, i.e. a move on an optimal winning line.
    /// Returns `None` when the duplicator wins the infinite game from the
    /// configuration, or when the configuration already fails the 0-round
    /// conditions (the spoiler has won; no move is needed).
    pub fn best_spoiler_move(&self, cfg: &Configuration) -> Result<Option<(Side, Tuple)>, Error> {
        let (ia, ib) = self.config_indices(cfg)?;
        match self.rank_idx(ia, ib) {
            Rank::Infinite | Rank::Lost => Ok(None),
            Rank::Finite(k) => {
                let (side, im) = self
                    .winning_move(ia, ib, k)
                    .expect("a finite-rank configuration has a rank-decreasing move");
                Ok(Some((side, self.side(side).elems[im].clone())))
            }
        }
    }

    /// Find the canonically first move whose every legal answer leads to a
    /// configuration of rank < k.
    fn winning_move(&self, ia: usize, ib: usize, k: u32) -> Option<(Side, usize)> {
        let n_b = self.sides[1].elems.len();
        for (side, prev_m, prev_a) in [(Side::Left, ia, ib), (Side::Right, ib, ia)] {
            let ms = self.side(side);
            for im in 0..ms.elems.len() {
                if !ms.movable[im] {
                    continue;
                }
                let all_low = self
                    .answer_indices(side, prev_m, prev_a, im)
                    .into_iter()
                    .all(|ians| {
                        let (na, nb) = match side {
                            Side::Left => (im, ians),
                            Side::Right => (ians, im),
                        };
                        self.rank_data().ranks[na * n_b + nb] < Rank::Finite(k)
                    });
                if all_low {
                    return Some((side, im));
                }
            }
        }
        None
    }

    /// The spoiler's witness tree from a configuration the spoiler wins at
    /// a finite rank. `None` when the configuration fails the 0-round
    /// conditions (nothing to play) — and an error-free `None` is also
    /// returned for duplicator-won configurations by `solve_*`.
    pub fn spoiler_tree(&self, cfg: &Configuration) -> Result<Option<SpoilerTree>, Error> {
        self.spoiler_tree_inner(&cfg.left, &cfg.right)
    }

    fn spoiler_tree_inner(
        &self,
        left: &Tuple,
        right: &Tuple,
    ) -> Result<Option<SpoilerTree>, Error> {
        let ia = self.elem_index(Side::Left, left)?;
        let ib = self.elem_index(Side::Right, right)?;
        Ok(self.build_tree(ia, ib))
    }

    fn build_tree(&self, ia: usize, ib: usize) -> Option<SpoilerTree> {
        let k = match self.rank_idx(ia, ib) {
            Rank::Finite(k) => k,
            _ => return None,
        };
        let (side, im) = self.winning_move(ia, ib, k)?;
        let (prev_m, prev_a) = match side {
            Side::Left => (ia, ib),
            Side::Right => (ib, ia),
        };
        let opp = self.side(side.opposite());
        let replies = self
            .answer_indices(side, prev_m, prev_a, im)
            .into_iter()
            .map(|ians| {
                let (na, nb) = match side {
                    Side::Left => (im, ians),
                    Side::Right => (ians, im),
                };
                let sub = self
                    .build_tree(na, nb)
                    .expect("successor of an optimal move has finite rank");
                (opp.elems[ians].clone(), sub)
            })
            .collect();
        Some(SpoilerTree {
            side,
            mv: self.side(side).elems[im].clone(),
            replies,
        })
    }
}

#[derive(Default)]
struct Interner {
    sigs: HashMap<Vec<(usize, u32)>, u32>,
    types: HashMap<(usize, Condition), u32>,
    jtypes: HashMap<(usize, usize, Condition), u32>,
}

impl Interner {
    fn sig_id(&mut self, key: Vec<(usize, u32)>) -> u32 {
        let next = self.sigs.len() as u32;
        *self.sigs.entry(key).or_insert(next)
    }

    fn type_id(&mut self, key: (usize, Condition)) -> u32 {
        let next = self.types.len() as u32;
        *self.types.entry(key).or_insert(next)
    }

    fn jtype_id(&mut self, key: (usize, usize, Condition)) -> u32 {
        let next = self.jtypes.len() as u32;
        *self.jtypes.entry(key).or_insert(next)
    }
}

impl SideData {
    fn build(db: &Database, interner: &mut Interner) -> SideData {
        let vocab = db.vocab();
        // tuple space plus the empty tuple as a configuration element
        let space: BTreeSet<Tuple> = db.tuple_space();
        let mut elems: Vec<Tuple> = space.iter().cloned().collect();
        let movable_set = space;
        if !movable_set.contains(&Tuple::empty()) {
            elems.insert(0, Tuple::empty());
        }
        let index: HashMap<Tuple, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let movable: Vec<bool> = elems.iter().map(|t| movable_set.contains(t)).collect();

        // projection sets per (relation, position mask), relations in
        // schema order so ids are comparable across the two sides
        let rels: Vec<&String> = db.schema().names().collect();
        let mut proj: HashMap<(usize, u32), BTreeSet<Tuple>> = HashMap::new();
        for (ri, name) in rels.iter().enumerate() {
            let arity = db.schema().arity(name).unwrap();
            let content = db.relation(name).unwrap();
            for mask in 0u32..(1 << arity) {
                let positions = mask_positions(mask, arity);
                proj.insert(
                    (ri, mask),
                    content.iter().map(|t| t.project(&positions)).collect(),
                );
            }
        }

        let sig: Vec<u32> = elems
            .iter()
            .map(|t| {
                let mut key = Vec::new();
                for (ri, name) in rels.iter().enumerate() {
                    let arity = db.schema().arity(name).unwrap();
                    for mask in 0u32..(1 << arity) {
                        if mask.count_ones() as usize == t.len() && proj[&(ri, mask)].contains(t) {
                            key.push((ri, mask));
                        }
                    }
                }
                interner.sig_id(key)
            })
            .collect();

        let type_id: Vec<u32> = elems
            .iter()
            .map(|t| interner.type_id((t.len(), atomic_type(t, vocab))))
            .collect();

        let n = elems.len();
        let mut jtype = vec![0u32; n * n];
        for (ip, prev) in elems.iter().enumerate() {
            for (ic, cur) in elems.iter().enumerate() {
                jtype[ip * n + ic] =
                    interner.jtype_id((prev.len(), cur.len(), joint_atomic_type(prev, cur, vocab)));
            }
        }

        let mut by_sig: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, &s) in sig.iter().enumerate() {
            if movable[i] {
                by_sig.entry(s).or_default().push(i);
            }
        }

        SideData {
            elems,
            index,
            movable,
            sig,
            type_id,
            jtype,
            by_sig,
        }
    }
}

/// The 0-round win conditions for a configuration. See [`GameSpace::win0`].
pub fn win0(
    left_db: &Database,
    right_db: &Database,
    left: &Tuple,
    right: &Tuple,
) -> Result<bool, Error> {
    GameSpace::new(left_db, right_db)?.win0(left, right)
}

/// Legal answers to a spoiler move. See [`GameSpace::legal_answers`].
pub fn legal_answers(
    left_db: &Database,
    right_db: &Database,
    cfg: &Configuration,
    side: Side,
    mv: &Tuple,
) -> Result<Vec<Tuple>, Error> {
    GameSpace::new(left_db, right_db)?.legal_answers(cfg, side, mv)
}

/// Decide the m-round game. See [`GameSpace::solve_finite`].
pub fn solve_finite(
    left_db: &Database,
    right_db: &Database,
    left: &Tuple,
    right: &Tuple,
    m: u32,
) -> Result<GameVerdict, Error> {
    GameSpace::new(left_db, right_db)?.solve_finite(left, right, m)
}

/// Decide the infinite game. See [`GameSpace::solve_infinite`].
pub fn solve_infinite(
    left_db: &Database,
    right_db: &Database,
    left: &Tuple,
    right: &Tuple,
) -> Result<GameVerdict, Error> {
    GameSpace::new(left_db, right_db)?.solve_infinite(left, right)
}

/// See [`GameSpace::best_duplicator_move`].
pub fn best_duplicator_move(
    left_db: &Database,
    right_db: &Database,
    cfg: &Configuration,
    side: Side,
    mv: &Tuple,
) -> Result<Option<Tuple>, Error> {
    GameSpace::new(left_db, right_db)?.best_duplicator_move(cfg, side, mv)
}

/// See [`GameSpace::best_spoiler_move`].
pub fn best_spoiler_move(
    left_db: &Database,
    right_db: &Database,
    cfg: &Configuration,
) -> Result<Option<(Side, Tuple)>, Error> {
    GameSpace::new(left_db, right_db)?.best_spoiler_move(cfg)
}
