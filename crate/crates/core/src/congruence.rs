//! Right congruences on finite semigroups.
//!
//! The closure engine ([`rc_closure`]) computes the least right congruence
//! containing a set of generating pairs by union-find saturation: whenever
//! two elements merge, their right translates are enqueued. The brute-force
//! enumeration ([`enumerate_right_congruences`]) filters every partition for
//! right compatibility and serves as the oracle the closure is tested
//! against. [`consequence`] upgrades membership answers to replayable
//! derivation certificates.

use std::collections::{HashMap, VecDeque};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::semigroup::{ElementId, FiniteSemigroup};

/// Enumeration refuses semigroups larger than this unless overridden;
/// Bell(8) = 4140 partitions keeps the oracle fast.
pub const DEFAULT_ENUM_BOUND: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("pair entry {0} is out of range")]
    PairOutOfRange(usize),
    #[error("congruences belong to different semigroups")]
    OwnerMismatch,
    #[error("classes do not partition the semigroup")]
    InvalidPartition,
    #[error("partition is not right compatible: ({a}, {b}) related but ({a}*{s}, {b}*{s}) split")]
    NotRightCompatible { a: usize, b: usize, s: usize },
    #[error("subset is not a right ideal: {member}*{s} escapes")]
    NotARightIdeal { member: usize, s: usize },
    #[error("subset is not a subsemigroup: {x}*{y} escapes")]
    NotASubsemigroup { x: usize, y: usize },
    #[error("order {order} exceeds the enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("step {step}: pair index {pair} out of range")]
    PairIndexOutOfRange { step: usize, pair: usize },
    #[error("step {step}: expected current element {expected}, found {found}")]
    Mismatch { step: usize, expected: usize, found: usize },
    #[error("sequence ends at {found}, expected {expected}")]
    WrongEndpoint { expected: usize, found: usize },
}

/// A set of generating pairs over one semigroup.
///
/// Only the listed orientation is stored; the symmetric closure is applied
/// wherever sequences are searched or replayed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenPairs {
    pub pairs: Vec<(ElementId, ElementId)>,
}

impl GenPairs {
    pub fn new(
        s: &FiniteSemigroup,
        pairs: Vec<(ElementId, ElementId)>,
    ) -> Result<Self, CongruenceError> {
        for &(a, b) in &pairs {
            if !s.contains(a) {
                return Err(CongruenceError::PairOutOfRange(a.0));
            }
            if !s.contains(b) {
                return Err(CongruenceError::PairOutOfRange(b.0));
            }
        }
        Ok(GenPairs { pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A right-compatible partition of a finite semigroup.
///
/// `class_of` is canonical: class ids are assigned by first occurrence
/// scanning elements `0..n`, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RightCongruence {
    order: usize,
    owner_hash: u64,
    class_of: Vec<usize>,
    num_classes: usize,
}

impl RightCongruence {
    /// Builds from an arbitrary class assignment, checking right
    /// compatibility.
    pub fn new(s: &FiniteSemigroup, raw_class_of: &[usize]) -> Result<Self, CongruenceError> {
        if raw_class_of.len() != s.order() {
            return Err(CongruenceError::InvalidPartition);
        }
        let rc = Self::from_raw_unchecked(s, raw_class_of);
        rc.check_right_compatible(s)?;
        Ok(rc)
    }

    /// Builds from explicit classes, checking they partition the semigroup.
    pub fn from_classes(
        s: &FiniteSemigroup,
        classes: &[Vec<usize>],
    ) -> Result<Self, CongruenceError> {
        let mut raw = vec![usize::MAX; s.order()];
        for (id, class) in classes.iter().enumerate() {
            for &e in class {
                if e >= s.order() || raw[e] != usize::MAX {
                    return Err(CongruenceError::InvalidPartition);
                }
                raw[e] = id;
            }
        }
        if raw.iter().any(|&c| c == usize::MAX) {
            return Err(CongruenceError::InvalidPartition);
        }
        Self::new(s, &raw)
    }

    fn from_raw_unchecked(s: &FiniteSemigroup, raw: &[usize]) -> Self {
        let (class_of, num_classes) = canonicalize(raw);
        RightCongruence { order: s.order(), owner_hash: s.table_hash(), class_of, num_classes }
    }

    fn check_right_compatible(&self, s: &FiniteSemigroup) -> Result<(), CongruenceError> {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.class_of[a] == self.class_of[b] {
                    for t in s.elements() {
                        let at = s.mul(ElementId(a), t);
                        let bt = s.mul(ElementId(b), t);
                        if self.class_of[at.0] != self.class_of[bt.0] {
                            return Err(CongruenceError::NotRightCompatible { a, b, s: t.0 });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        let raw: Vec<usize> = (0..s.order()).collect();
        Self::from_raw_unchecked(s, &raw)
    }

    pub fn universal(s: &FiniteSemigroup) -> Self {
        Self::from_raw_unchecked(s, &vec![0; s.order()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn owner_hash(&self) -> u64 {
        self.owner_hash
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn class_of(&self, a: ElementId) -> usize {
        self.class_of[a.0]
    }

    pub fn class_vector(&self) -> &[usize] {
        &self.class_of
    }

    pub fn are_related(&self, a: ElementId, b: ElementId) -> bool {
        self.class_of[a.0] == self.class_of[b.0]
    }

    pub fn is_identity(&self) -> bool {
        self.num_classes == self.order
    }

    pub fn is_universal(&self) -> bool {
        self.num_classes == 1
    }

    /// Classes listed by class id; members ascending.
    pub fn classes(&self) -> Vec<Vec<ElementId>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (e, &c) in self.class_of.iter().enumerate() {
            out[c].push(ElementId(e));
        }
        out
    }

    /// All unordered related pairs `(a, b)` with `a < b`.
    pub fn related_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.class_of[a] == self.class_of[b] {
                    out.push((ElementId(a), ElementId(b)));
                }
            }
        }
        out
    }

    /// Refinement order: `self ⊆ other` as relations.
    pub fn refines(&self, other: &RightCongruence) -> bool {
        debug_assert_eq!(self.order, other.order);
        let mut image = vec![usize::MAX; self.num_classes];
        for e in 0..self.order {
            let c = self.class_of[e];
            if image[c] == usize::MAX {
                image[c] = other.class_of[e];
            } else if image[c] != other.class_of[e] {
                return false;
            }
        }
        true
    }

    /// Partition intersection. Always a right congruence when both inputs
    /// are.
    pub fn meet(&self, other: &RightCongruence) -> Result<RightCongruence, CongruenceError> {
        if self.order != other.order || self.owner_hash != other.owner_hash {
            return Err(CongruenceError::OwnerMismatch);
        }
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut raw = Vec::with_capacity(self.order);
        for e in 0..self.order {
            let key = (self.class_of[e], other.class_of[e]);
            let next = seen.len();
            raw.push(*seen.entry(key).or_insert(next));
        }
        let (class_of, num_classes) = canonicalize(&raw);
        Ok(RightCongruence { order: self.order, owner_hash: self.owner_hash, class_of, num_classes })
    }

    /// Serialises as `{"classes": [[ids], ...]}`.
    pub fn to_classes_json(&self) -> serde_json::Value {
        serde_json::json!({
            "classes": self
                .classes()
                .iter()
                .map(|c| c.iter().map(|e| e.0).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
    }
}

fn canonicalize(raw: &[usize]) -> (Vec<usize>, usize) {
    let mut rename: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::with_capacity(raw.len());
    for &c in raw {
        let next = rename.len();
        out.push(*rename.entry(c).or_insert(next));
    }
    let n = rename.len();
    (out, n)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            self.parent[i] = self.find(self.parent[i]);
        }
        self.parent[i]
    }

    /// Returns true when the two sets were distinct.
    fn union(&mut self, i: usize, j: usize) -> bool {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        // Lower root wins, keeping representatives deterministic.
        let (lo, hi) = (ri.min(rj), ri.max(rj));
        self.parent[hi] = lo;
        true
    }
}

/// Least right congruence containing `pairs`.
///
/// Seeds a union-find with the pairs and saturates: every merge of `a` and
/// `b` enqueues `(a*t, b*t)` for all `t` in the semigroup. Equals the
/// intersection of all right congruences containing the pairs.
pub fn rc_closure(
    s: &FiniteSemigroup,
    pairs: &[(ElementId, ElementId)],
) -> Result<RightCongruence, CongruenceError> {
    let n = s.order();
    for &(a, b) in pairs {
        if a.0 >= n {
            return Err(CongruenceError::PairOutOfRange(a.0));
        }
        if b.0 >= n {
            return Err(CongruenceError::PairOutOfRange(b.0));
        }
    }
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.0, b.0)).collect();
    while let Some((a, b)) = queue.pop_front() {
        if uf.union(a, b) {
            for t in 0..n {
                let at = s.mul(ElementId(a), ElementId(t)).0;
                let bt = s.mul(ElementId(b), ElementId(t)).0;
                if uf.find(at) != uf.find(bt) {
                    queue.push_back((at, bt));
                }
            }
        }
    }
    let raw: Vec<usize> = (0..n).map(|e| uf.find(e)).collect();
    Ok(RightCongruence::from_raw_unchecked(s, &raw))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Direction::Forward => ser.serialize_str("f"),
            Direction::Backward => ser.serialize_str("b"),
        }
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        match String::deserialize(de)?.as_str() {
            "f" => Ok(Direction::Forward),
            "b" => Ok(Direction::Backward),
            other => Err(D::Error::custom(format!("bad direction {other:?}"))),
        }
    }
}

/// One step of a derivation: apply generating pair `pair` (swapped when
/// `dir` is backward), multiplied on the right by `mul` (`None` stands for
/// the formal identity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub pair: usize,
    pub dir: Direction,
    pub mul: Option<ElementId>,
}

/// A replayable derivation certificate connecting two elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XSequence {
    pub steps: Vec<Step>,
}

impl XSequence {
    /// Replays the sequence from `from`, validating every step against the
    /// pair set and the multiplication table; returns the endpoint.
    pub fn replay(
        &self,
        s: &FiniteSemigroup,
        pairs: &[(ElementId, ElementId)],
        from: ElementId,
    ) -> Result<ElementId, ReplayError> {
        let mut current = from;
        for (idx, step) in self.steps.iter().enumerate() {
            let &(x, y) = pairs
                .get(step.pair)
                .ok_or(ReplayError::PairIndexOutOfRange { step: idx, pair: step.pair })?;
            let (x, y) = match step.dir {
                Direction::Forward => (x, y),
                Direction::Backward => (y, x),
            };
            let expected = match step.mul {
                Some(m) => s.mul(x, m),
                None => x,
            };
            if expected != current {
                return Err(ReplayError::Mismatch {
                    step: idx,
                    expected: expected.0,
                    found: current.0,
                });
            }
            current = match step.mul {
                Some(m) => s.mul(y, m),
                None => y,
            };
        }
        Ok(current)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Consequence {
    Proven(XSequence),
    Disproven,
}

/// Decides whether `(a, b)` lies in the right congruence generated by
/// `pairs`, producing a replayable certificate on success.
///
/// Searches the derivation graph on elements whose edges are
/// `x*u -> y*u` for `(x, y)` in the symmetrised pair set and `u` an
/// optional multiplier; breadth-first search yields a shortest sequence.
pub fn consequence(
    s: &FiniteSemigroup,
    pairs: &[(ElementId, ElementId)],
    a: ElementId,
    b: ElementId,
) -> Result<Consequence, CongruenceError> {
    let n = s.order();
    for &(x, y) in pairs {
        if x.0 >= n {
            return Err(CongruenceError::PairOutOfRange(x.0));
        }
        if y.0 >= n {
            return Err(CongruenceError::PairOutOfRange(y.0));
        }
    }
    if a.0 >= n {
        return Err(CongruenceError::PairOutOfRange(a.0));
    }
    if b.0 >= n {
        return Err(CongruenceError::PairOutOfRange(b.0));
    }
    if a == b {
        return Ok(Consequence::Proven(XSequence { steps: Vec::new() }));
    }
    let mut adjacency: Vec<Vec<(usize, Step)>> = vec![Vec::new(); n];
    let mut add = |from: ElementId, to: ElementId, step: Step| {
        adjacency[from.0].push((to.0, step));
    };
    for (i, &(x, y)) in pairs.iter().enumerate() {
        let mut multipliers: Vec<Option<ElementId>> = vec![None];
        multipliers.extend(s.elements().map(Some));
        for m in multipliers {
            let (xm, ym) = match m {
                Some(t) => (s.mul(x, t), s.mul(y, t)),
                None => (x, y),
            };
            add(xm, ym, Step { pair: i, dir: Direction::Forward, mul: m });
            add(ym, xm, Step { pair: i, dir: Direction::Backward, mul: m });
        }
    }
    let mut parent: Vec<Option<(usize, Step)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[a.0] = true;
    queue.push_back(a.0);
    while let Some(v) = queue.pop_front() {
        if v == b.0 {
            let mut steps = Vec::new();
            let mut cur = v;
            while cur != a.0 {
                let (prev, step) = parent[cur].expect("path exists back to the start");
                steps.push(step);
                cur = prev;
            }
            steps.reverse();
            let seq = XSequence { steps };
            debug_assert_eq!(seq.replay(s, pairs, a), Ok(b));
            return Ok(Consequence::Proven(seq));
        }
        for &(w, step) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((v, step));
                queue.push_back(w);
            }
        }
    }
    Ok(Consequence::Disproven)
}

/// The Rees right congruence of a right ideal: the ideal is one class and
/// everything else is a singleton.
pub fn rees_right_congruence(
    s: &FiniteSemigroup,
    ideal: &[ElementId],
) -> Result<RightCongruence, CongruenceError> {
    let mut member = vec![false; s.order()];
    for &m in ideal {
        if m.0 >= s.order() {
            return Err(CongruenceError::PairOutOfRange(m.0));
        }
        member[m.0] = true;
    }
    for &m in ideal {
        for t in s.elements() {
            let mt = s.mul(m, t);
            if !member[mt.0] {
                return Err(CongruenceError::NotARightIdeal { member: m.0, s: t.0 });
            }
        }
    }
    let mut raw = vec![0usize; s.order()];
    let mut next = 1;
    for e in 0..s.order() {
        if !member[e] {
            raw[e] = next;
            next += 1;
        }
    }
    if ideal.is_empty() {
        // No class to collapse; the result is the identity congruence.
        return Ok(RightCongruence::identity(s));
    }
    Ok(RightCongruence::from_raw_unchecked(s, &raw))
}

/// The restriction of a congruence to a multiplicatively closed subset,
/// returned as a partition of the subset together with a flag recording
/// whether it is right compatible as a congruence on the subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPartition {
    /// Subset elements, ascending, indexing the partition positions.
    pub elements: Vec<ElementId>,
    pub class_of: Vec<usize>,
    pub num_classes: usize,
    pub right_compatible: bool,
}

impl SubPartition {
    pub fn position_of(&self, e: ElementId) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }

    pub fn are_related(&self, a: ElementId, b: ElementId) -> bool {
        match (self.position_of(a), self.position_of(b)) {
            (Some(i), Some(j)) => self.class_of[i] == self.class_of[j],
            _ => false,
        }
    }

    /// Related pairs `(a, b)`, `a < b`, in original element ids.
    pub fn related_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if self.class_of[i] == self.class_of[j] {
                    out.push((self.elements[i], self.elements[j]));
                }
            }
        }
        out
    }
}

/// Restricts `rho` to the subsemigroup `subset`: the partition is
/// `rho ∩ (T×T)`, and right compatibility over multipliers from the subset
/// is reported as a flag.
pub fn restrict(
    s: &FiniteSemigroup,
    rho: &RightCongruence,
    subset: &[ElementId],
) -> Result<SubPartition, CongruenceError> {
    let elements: Vec<ElementId> = {
        let mut v = subset.to_vec();
        v.sort();
        v.dedup();
        v
    };
    let mut member = vec![false; s.order()];
    for &e in &elements {
        if e.0 >= s.order() {
            return Err(CongruenceError::PairOutOfRange(e.0));
        }
        member[e.0] = true;
    }
    for &x in &elements {
        for &y in &elements {
            if !member[s.mul(x, y).0] {
                return Err(CongruenceError::NotASubsemigroup { x: x.0, y: y.0 });
            }
        }
    }
    let raw: Vec<usize> = elements.iter().map(|&e| rho.class_of(e)).collect();
    let (class_of, num_classes) = canonicalize(&raw);
    let mut position = vec![usize::MAX; s.order()];
    for (i, &e) in elements.iter().enumerate() {
        position[e.0] = i;
    }
    let mut right_compatible = true;
    'outer: for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if class_of[i] == class_of[j] {
                for &t in &elements {
                    let it = position[s.mul(elements[i], t).0];
                    let jt = position[s.mul(elements[j], t).0];
                    if class_of[it] != class_of[jt] {
                        right_compatible = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(SubPartition { elements, class_of, num_classes, right_compatible })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Meet,
    Join,
}

/// Meet (partition intersection) or join (closure of the union) of two
/// right congruences on the same semigroup.
pub fn combine(
    s: &FiniteSemigroup,
    r1: &RightCongruence,
    r2: &RightCongruence,
    mode: CombineMode,
) -> Result<RightCongruence, CongruenceError> {
    if r1.order() != s.order()
        || r2.order() != s.order()
        || r1.owner_hash() != s.table_hash()
        || r2.owner_hash() != s.table_hash()
    {
        return Err(CongruenceError::OwnerMismatch);
    }
    match mode {
        CombineMode::Meet => r1.meet(r2),
        CombineMode::Join => {
            let mut pairs = class_spanning_pairs(r1);
            pairs.extend(class_spanning_pairs(r2));
            rc_closure(s, &pairs)
        }
    }
}

/// A small generating set for a congruence as a relation: within each class,
/// the least element is paired with every other member.
fn class_spanning_pairs(rho: &RightCongruence) -> Vec<(ElementId, ElementId)> {
    let mut pairs = Vec::new();
    for class in rho.classes() {
        for &other in &class[1..] {
            pairs.push((class[0], other));
        }
    }
    pairs
}

/// The full lattice of right congruences, from brute-force enumeration.
#[derive(Debug, Clone)]
pub struct CongruenceLattice {
    /// Sorted by `(num_classes, class vector)`; contains the identity and
    /// universal congruences.
    pub congruences: Vec<RightCongruence>,
    /// `leq[i][j]` iff congruence `i` refines congruence `j`.
    pub leq: Vec<Vec<bool>>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn index_of(&self, rho: &RightCongruence) -> Option<usize> {
        self.congruences.iter().position(|c| c == rho)
    }

    /// Greatest lower bound by partition intersection; the result is always
    /// in the lattice.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let m = self.congruences[i].meet(&self.congruences[j]).expect("same owner");
        self.index_of(&m).expect("lattice is meet-closed")
    }

    /// Least upper bound: the smallest enumerated congruence above both.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let mut best: Option<usize> = None;
        for k in 0..self.len() {
            if self.leq[i][k] && self.leq[j][k] {
                best = match best {
                    None => Some(k),
                    Some(b) => {
                        if self.leq[k][b] {
                            Some(k)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best.expect("universal congruence is an upper bound")
    }

    /// Cover edges of the refinement order, for Hasse-diagram export.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] {
                    let covered = (0..n).any(|k| {
                        k != i && k != j && self.leq[i][k] && self.leq[k][j]
                    });
                    if !covered {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges
    }
}

/// Enumerates every right congruence of `s` by filtering all partitions
/// (restricted growth strings) for right compatibility.
pub fn enumerate_right_congruences(
    s: &FiniteSemigroup,
) -> Result<CongruenceLattice, CongruenceError> {
    enumerate_right_congruences_bounded(s, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_right_congruences_bounded(
    s: &FiniteSemigroup,
    bound: usize,
) -> Result<CongruenceLattice, CongruenceError> {
    let n = s.order();
    if n > bound {
        return Err(CongruenceError::OrderTooLarge { order: n, bound });
    }
    let mut found = Vec::new();
    let mut assignment = vec![0usize; n];
    enumerate_partitions(s, &mut assignment, 1, &mut found);
    found.sort_by(|a: &RightCongruence, b: &RightCongruence| {
        (a.num_classes(), a.class_vector()).cmp(&(b.num_classes(), b.class_vector()))
    });
    let count = found.len();
    let mut leq = vec![vec![false; count]; count];
    for i in 0..count {
        for (j, row) in leq.iter_mut().enumerate() {
            row[i] = found[j].refines(&found[i]);
        }
    }
    Ok(CongruenceLattice { congruences: found, leq })
}

fn enumerate_partitions(
    s: &FiniteSemigroup,
    assignment: &mut Vec<usize>,
    position: usize,
    found: &mut Vec<RightCongruence>,
) {
    let n = s.order();
    if position == n {
        if let Ok(rc) = RightCongruence::new(s, assignment) {
            found.push(rc);
        }
        return;
    }
    let max_used = assignment[..position].iter().copied().max().unwrap_or(0);
    for c in 0..=max_used + 1 {
        assignment[position] = c;
        enumerate_partitions(s, assignment, position + 1, found);
    }
    assignment[position] = 0;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityMode {
    /// Exhaustive subset search; the result has minimum cardinality.
    Exact,
    /// Irredundant set found by removing pairs in input order.
    Greedy,
}

/// Exact search is used when the congruence has at most this many related
/// pairs; beyond it the greedy reduction takes over.
pub const EXACT_SEARCH_PAIR_LIMIT: usize = 20;

/// A generating pair set for `rho` with no redundant pair; minimum
/// cardinality in exact mode.
pub fn minimal_generating_set(
    s: &FiniteSemigroup,
    rho: &RightCongruence,
) -> Result<(GenPairs, MinimalityMode), CongruenceError> {
    if rho.order() != s.order() || rho.owner_hash() != s.table_hash() {
        return Err(CongruenceError::OwnerMismatch);
    }
    let candidates = rho.related_pairs();
    if candidates.len() <= EXACT_SEARCH_PAIR_LIMIT {
        for size in 0..=candidates.len() {
            let mut chosen = Vec::with_capacity(size);
            if let Some(found) = search_subsets(s, rho, &candidates, 0, size, &mut chosen)? {
                return Ok((GenPairs { pairs: found }, MinimalityMode::Exact));
            }
        }
        unreachable!("the full related-pair set generates the congruence");
    }
    let mut kept = candidates;
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        if &rc_closure(s, &trial)? == rho {
            kept = trial;
        } else {
            i += 1;
        }
    }
    Ok((GenPairs { pairs: kept }, MinimalityMode::Greedy))
}

fn search_subsets(
    s: &FiniteSemigroup,
    target: &RightCongruence,
    candidates: &[(ElementId, ElementId)],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<(ElementId, ElementId)>,
) -> Result<Option<Vec<(ElementId, ElementId)>>, CongruenceError> {
    if remaining == 0 {
        if &rc_closure(s, chosen)? == target {
            return Ok(Some(chosen.clone()));
        }
        return Ok(None);
    }
    if candidates.len() - from < remaining {
        return Ok(None);
    }
    for i in from..candidates.len() {
        chosen.push(candidates[i]);
        if let Some(hit) = search_subsets(s, target, candidates, i + 1, remaining - 1, chosen)? {
            return Ok(Some(hit));
        }
        chosen.pop();
    }
    Ok(None)
}

/// Oracle route to the closure: the meet of all enumerated right
/// congruences containing the pairs.
pub fn closure_via_oracle(
    s: &FiniteSemigroup,
    pairs: &[(ElementId, ElementId)],
    lattice: &CongruenceLattice,
) -> RightCongruence {
    let mut acc = RightCongruence::universal(s);
    for rho in &lattice.congruences {
        if pairs.iter().all(|&(a, b)| rho.are_related(a, b)) {
            acc = acc.meet(rho).expect("same owner");
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn ids(pairs: &[(usize, usize)]) -> Vec<(ElementId, ElementId)> {
        pairs.iter().map(|&(a, b)| (ElementId(a), ElementId(b))).collect()
    }

    #[test]
    fn closure_on_z4_splits_into_even_odd() {
        let s = gallery::cyclic(4);
        let rho = rc_closure(&s, &ids(&[(0, 2)])).unwrap();
        assert_eq!(rho.class_vector(), &[0, 1, 0, 1]);
    }

    #[test]
    fn empty_closure_is_identity() {
        let s = gallery::cyclic(5);
        assert!(rc_closure(&s, &[]).unwrap().is_identity());
    }

    #[test]
    fn closure_agrees_with_partition_oracle_on_gallery() {
        for s in [gallery::cyclic(4), gallery::right_zero(3), gallery::chain_semilattice(3)] {
            let lattice = enumerate_right_congruences(&s).unwrap();
            for pairs in [
                ids(&[]),
                ids(&[(0, 1)]),
                ids(&[(0, 2)]),
                ids(&[(1, 2), (0, 1)]),
            ] {
                let direct = rc_closure(&s, &pairs).unwrap();
                let oracle = closure_via_oracle(&s, &pairs, &lattice);
                assert_eq!(direct, oracle);
            }
        }
    }

    #[test]
    fn reflexive_query_is_proven_with_empty_certificate() {
        let s = gallery::cyclic(3);
        match consequence(&s, &[], ElementId(2), ElementId(2)).unwrap() {
            Consequence::Proven(seq) => assert!(seq.steps.is_empty()),
            Consequence::Disproven => panic!("s = t must be proven"),
        }
    }

    #[test]
    fn z4_certificate_multiplies_the_generator() {
        let s = gallery::cyclic(4);
        let pairs = ids(&[(0, 2)]);
        match consequence(&s, &pairs, ElementId(1), ElementId(3)).unwrap() {
            Consequence::Proven(seq) => {
                assert_eq!(seq.steps.len(), 1);
                assert_eq!(seq.steps[0].mul, Some(ElementId(1)));
                assert_eq!(seq.replay(&s, &pairs, ElementId(1)), Ok(ElementId(3)));
            }
            Consequence::Disproven => panic!("(1,3) follows from (0,2)"),
        }
    }

    #[test]
    fn disproven_matches_closure() {
        let s = gallery::cyclic(4);
        let pairs = ids(&[(0, 2)]);
        assert_eq!(consequence(&s, &pairs, ElementId(0), ElementId(1)).unwrap(), Consequence::Disproven);
    }

    #[test]
    fn tampered_certificate_fails_replay() {
        let s = gallery::cyclic(4);
        let pairs = ids(&[(0, 2)]);
        let seq = XSequence {
            steps: vec![Step { pair: 0, dir: Direction::Forward, mul: Some(ElementId(2)) }],
        };
        assert!(seq.replay(&s, &pairs, ElementId(1)).is_err());
    }

    #[test]
    fn rees_of_whole_semigroup_is_universal() {
        let s = gallery::cyclic(3);
        let all: Vec<ElementId> = s.elements().collect();
        assert!(rees_right_congruence(&s, &all).unwrap().is_universal());
    }

    #[test]
    fn rees_of_singleton_right_zero_is_identity() {
        let s = gallery::null_semigroup(3);
        let rho = rees_right_congruence(&s, &[ElementId(0)]).unwrap();
        assert!(rho.is_identity());
    }

    #[test]
    fn rees_rejects_non_ideals() {
        let s = gallery::cyclic(4);
        assert!(matches!(
            rees_right_congruence(&s, &[ElementId(1)]),
            Err(CongruenceError::NotARightIdeal { .. })
        ));
    }

    #[test]
    fn restriction_of_cosets_to_even_subgroup() {
        let s = gallery::cyclic(6);
        let rho = rc_closure(&s, &ids(&[(0, 3)])).unwrap();
        assert_eq!(rho.num_classes(), 3);
        let t = [ElementId(0), ElementId(2), ElementId(4)];
        let sub = restrict(&s, &rho, &t).unwrap();
        assert_eq!(sub.num_classes, 3);
        assert!(sub.right_compatible);
    }

    #[test]
    fn restriction_extremes() {
        let s = gallery::cyclic(6);
        let t = [ElementId(0), ElementId(2), ElementId(4)];
        let top = restrict(&s, &RightCongruence::universal(&s), &t).unwrap();
        assert_eq!(top.num_classes, 1);
        let bottom = restrict(&s, &RightCongruence::identity(&s), &t).unwrap();
        assert_eq!(bottom.num_classes, 3);
    }

    #[test]
    fn restriction_requires_a_subsemigroup() {
        let s = gallery::cyclic(6);
        let rho = RightCongruence::universal(&s);
        assert!(matches!(
            restrict(&s, &rho, &[ElementId(1)]),
            Err(CongruenceError::NotASubsemigroup { .. })
        ));
    }

    #[test]
    fn join_and_meet_with_extremes() {
        let s = gallery::cyclic(6);
        let rho = rc_closure(&s, &ids(&[(0, 3)])).unwrap();
        let delta = RightCongruence::identity(&s);
        let nabla = RightCongruence::universal(&s);
        assert_eq!(combine(&s, &rho, &delta, CombineMode::Join).unwrap(), rho);
        assert_eq!(combine(&s, &rho, &nabla, CombineMode::Meet).unwrap(), rho);
    }

    #[test]
    fn join_of_subgroup_congruences_is_universal() {
        let s = gallery::cyclic(6);
        let even = rc_closure(&s, &ids(&[(0, 2)])).unwrap();
        let halves = rc_closure(&s, &ids(&[(0, 3)])).unwrap();
        let join = combine(&s, &even, &halves, CombineMode::Join).unwrap();
        assert!(join.is_universal());
    }

    #[test]
    fn owner_mismatch_is_detected() {
        let s = gallery::cyclic(4);
        let t = gallery::right_zero(4);
        let on_s = RightCongruence::universal(&s);
        let on_t = RightCongruence::universal(&t);
        assert!(matches!(
            combine(&s, &on_s, &on_t, CombineMode::Meet),
            Err(CongruenceError::OwnerMismatch)
        ));
    }

    #[test]
    fn enumeration_counts_for_small_semigroups() {
        assert_eq!(enumerate_right_congruences(&gallery::cyclic(2)).unwrap().len(), 2);
        // Every equivalence on a right zero semigroup is right compatible.
        assert_eq!(enumerate_right_congruences(&gallery::right_zero(3)).unwrap().len(), 5);
        assert_eq!(enumerate_right_congruences(&gallery::cyclic(6)).unwrap().len(), 4);
    }

    #[test]
    fn lattice_contains_extremes_and_is_meet_join_closed() {
        let s = gallery::cyclic(4);
        let lattice = enumerate_right_congruences(&s).unwrap();
        assert!(lattice.index_of(&RightCongruence::identity(&s)).is_some());
        assert!(lattice.index_of(&RightCongruence::universal(&s)).is_some());
        for i in 0..lattice.len() {
            for j in 0..lattice.len() {
                let m = lattice.meet(i, j);
                let jn = lattice.join(i, j);
                // Join computed through the order agrees with pair closure.
                let via_closure = combine(
                    &s,
                    &lattice.congruences[i],
                    &lattice.congruences[j],
                    CombineMode::Join,
                )
                .unwrap();
                assert_eq!(lattice.congruences[jn], via_closure);
                assert!(lattice.leq[m][i] && lattice.leq[m][j]);
            }
        }
    }

    #[test]
    fn minimal_generating_set_of_identity_is_empty() {
        let s = gallery::cyclic(4);
        let (gens, mode) = minimal_generating_set(&s, &RightCongruence::identity(&s)).unwrap();
        assert!(gens.is_empty());
        assert_eq!(mode, MinimalityMode::Exact);
    }

    #[test]
    fn universal_on_cyclic_group_needs_one_pair() {
        for n in [3, 5] {
            let s = gallery::cyclic(n);
            let (gens, mode) = minimal_generating_set(&s, &RightCongruence::universal(&s)).unwrap();
            assert_eq!(gens.len(), 1);
            assert_eq!(mode, MinimalityMode::Exact);
            assert!(rc_closure(&s, &gens.pairs).unwrap().is_universal());
        }
    }

    #[test]
    fn greedy_mode_kicks_in_past_the_pair_limit() {
        let s = gallery::right_zero(8);
        let rho = RightCongruence::universal(&s);
        let (gens, mode) = minimal_generating_set(&s, &rho).unwrap();
        assert_eq!(mode, MinimalityMode::Greedy);
        assert_eq!(&rc_closure(&s, &gens.pairs).unwrap(), &rho);
        // Irredundance: dropping any pair strictly shrinks the closure.
        for i in 0..gens.pairs.len() {
            let mut fewer = gens.pairs.clone();
            fewer.remove(i);
            assert_ne!(&rc_closure(&s, &fewer).unwrap(), &rho);
        }
    }

    #[test]
    fn certificate_serialisation_shape() {
        let seq = XSequence {
            steps: vec![
                Step { pair: 0, dir: Direction::Forward, mul: Some(ElementId(3)) },
                Step { pair: 1, dir: Direction::Backward, mul: None },
            ],
        };
        let json = serde_json::to_value(&seq).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"steps": [
                {"pair": 0, "dir": "f", "mul": 3},
                {"pair": 1, "dir": "b", "mul": null}
            ]})
        );
        let back: XSequence = serde_json::from_value(json).unwrap();
        assert_eq!(back, seq);
    }
}
