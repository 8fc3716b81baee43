//! Finite semigroups as validated multiplication tables.
//!
//! A [`FiniteSemigroup`] is an order-`n` table over element indices
//! `0..n`, checked exhaustively for associativity on construction.
//! Identity and zero elements are detected by scanning the table; if the
//! caller supplies them they are cross-checked against the scan.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on table order; the associativity scan is cubic.
pub const MAX_ORDER: usize = 256;

/// Index of an element within its owning semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("order must be at least 1")]
    OrderZero,
    #[error("order {order} exceeds the maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("table is not {order}x{order}")]
    BadShape { order: usize },
    #[error("entry mul[{row}][{col}] = {value} is out of range")]
    IndexOutOfRange { row: usize, col: usize, value: usize },
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("claimed identity {claimed} fails on element {witness}")]
    BadIdentity { claimed: usize, witness: usize },
    #[error("claimed zero {claimed} fails on element {witness}")]
    BadZero { claimed: usize, witness: usize },
    #[error("label list has {got} entries, expected {expected}")]
    BadLabels { got: usize, expected: usize },
    #[error("generator set is empty")]
    EmptyGeneratorSet,
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("subset is not closed under multiplication: {x}*{y} escapes")]
    NotClosed { x: usize, y: usize },
}

/// A finite semigroup given by its multiplication table.
///
/// The table is stored row-major: `mul(x, y)` is row `x`, column `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    identity: Option<ElementId>,
    zero: Option<ElementId>,
}

/// On-disk form: `{"order": n, "mul": [[..],..], "labels": [..]?, "identity": i?, "zero": z?}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub identity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zero: Option<usize>,
}

impl FiniteSemigroup {
    /// Validates a multiplication table and returns the semigroup.
    ///
    /// Associativity is checked by exhaustive scan over all triples; the
    /// witness of the first failure (row-major order) is reported.
    /// Identity and zero are detected by scanning; explicitly claimed ones
    /// must agree with the scan.
    pub fn validate(
        order: usize,
        mul: Vec<Vec<usize>>,
        claimed_identity: Option<usize>,
        claimed_zero: Option<usize>,
    ) -> Result<Self, SemigroupError> {
        Self::validate_labeled(order, mul, None, claimed_identity, claimed_zero)
    }

    pub fn validate_labeled(
        order: usize,
        mul: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        claimed_identity: Option<usize>,
        claimed_zero: Option<usize>,
    ) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::OrderZero);
        }
        if order > MAX_ORDER {
            return Err(SemigroupError::OrderTooLarge { order, max: MAX_ORDER });
        }
        if mul.len() != order || mul.iter().any(|row| row.len() != order) {
            return Err(SemigroupError::BadShape { order });
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, r) in mul.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(SemigroupError::IndexOutOfRange { row, col, value });
                }
                table.push(value);
            }
        }
        let at = |x: usize, y: usize| table[x * order + y];
        for x in 0..order {
            for y in 0..order {
                let xy = at(x, y);
                for z in 0..order {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(SemigroupError::NotAssociative { x, y, z });
                    }
                }
            }
        }
        let identity = (0..order).find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x));
        let zero = (0..order).find(|&z| (0..order).all(|x| at(z, x) == z && at(x, z) == z));
        if let Some(claimed) = claimed_identity {
            if claimed >= order {
                return Err(SemigroupError::ElementOutOfRange(claimed));
            }
            if identity != Some(claimed) {
                let witness = (0..order)
                    .find(|&x| at(claimed, x) != x || at(x, claimed) != x)
                    .unwrap_or(claimed);
                return Err(SemigroupError::BadIdentity { claimed, witness });
            }
        }
        if let Some(claimed) = claimed_zero {
            if claimed >= order {
                return Err(SemigroupError::ElementOutOfRange(claimed));
            }
            if zero != Some(claimed) {
                let witness = (0..order)
                    .find(|&x| at(claimed, x) != claimed || at(x, claimed) != claimed)
                    .unwrap_or(claimed);
                return Err(SemigroupError::BadZero { claimed, witness });
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != order {
                    return Err(SemigroupError::BadLabels { got: l.len(), expected: order });
                }
                l
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteSemigroup {
            order,
            table,
            labels,
            identity: identity.map(ElementId),
            zero: zero.map(ElementId),
        })
    }

    pub fn from_table_file(file: TableFile) -> Result<Self, SemigroupError> {
        Self::validate_labeled(file.order, file.mul, file.labels, file.identity, file.zero)
    }

    pub fn to_table_file(&self) -> TableFile {
        let default_labels = (0..self.order).map(|i| i.to_string()).collect::<Vec<_>>();
        TableFile {
            order: self.order,
            mul: (0..self.order)
                .map(|x| self.table[x * self.order..(x + 1) * self.order].to_vec())
                .collect(),
            labels: if self.labels == default_labels { None } else { Some(self.labels.clone()) },
            identity: self.identity.map(|e| e.0),
            zero: self.zero.map(|z| z.0),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.table[a.0 * self.order + b.0])
    }

    pub fn identity(&self) -> Option<ElementId> {
        self.identity
    }

    pub fn zero(&self) -> Option<ElementId> {
        self.zero
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order).map(ElementId)
    }

    pub fn contains(&self, a: ElementId) -> bool {
        a.0 < self.order
    }

    /// Product of a word of elements, left to right. Panics on empty input.
    pub fn product(&self, word: &[ElementId]) -> ElementId {
        let mut acc = word[0];
        for &w in &word[1..] {
            acc = self.mul(acc, w);
        }
        acc
    }

    /// Fingerprint of the table, used to detect owner mismatches between
    /// a congruence and the semigroup it was computed on.
    pub fn table_hash(&self) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.order.hash(&mut h);
        self.table.hash(&mut h);
        h.finish()
    }

    /// True when the two semigroups have identical tables (labels ignored).
    pub fn same_table(&self, other: &FiniteSemigroup) -> bool {
        self.order == other.order && self.table == other.table
    }

    /// Adjoins a new identity or zero as element `n`, unconditionally.
    ///
    /// The original table is embedded at indices `0..n`.
    pub fn adjoin(&self, kind: Adjoin) -> FiniteSemigroup {
        let n = self.order;
        let mut mul = vec![vec![0usize; n + 1]; n + 1];
        for x in 0..n {
            for y in 0..n {
                mul[x][y] = self.table[x * n + y];
            }
        }
        match kind {
            Adjoin::Identity => {
                for x in 0..=n {
                    mul[n][x] = x;
                    mul[x][n] = x;
                }
            }
            Adjoin::Zero => {
                for x in 0..=n {
                    mul[n][x] = n;
                    mul[x][n] = n;
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.push(match kind {
            Adjoin::Identity => "1".to_string(),
            Adjoin::Zero => "0".to_string(),
        });
        FiniteSemigroup::validate_labeled(n + 1, mul, Some(labels), None, None)
            .expect("adjoining an identity or zero preserves associativity")
    }

    /// Idempotents `{x : xx = x}` or indecomposables `S \ S^2`.
    pub fn special_elements(&self, kind: SpecialElements) -> Vec<ElementId> {
        match kind {
            SpecialElements::Idempotent => {
                self.elements().filter(|&x| self.mul(x, x) == x).collect()
            }
            SpecialElements::Indecomposable => {
                let mut in_square = vec![false; self.order];
                for x in self.elements() {
                    for y in self.elements() {
                        in_square[self.mul(x, y).0] = true;
                    }
                }
                (0..self.order).filter(|&i| !in_square[i]).map(ElementId).collect()
            }
        }
    }

    /// The right ideal generated by `gens`: members are `gens ∪ gens·S`,
    /// closed to fixpoint, together with an exact minimum generating subset.
    pub fn right_ideal(&self, gens: &[ElementId]) -> Result<RightIdeal, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGeneratorSet);
        }
        for &g in gens {
            if !self.contains(g) {
                return Err(SemigroupError::ElementOutOfRange(g.0));
            }
        }
        let mut member = vec![false; self.order];
        let mut stack: Vec<ElementId> = gens.to_vec();
        for &g in gens {
            member[g.0] = true;
        }
        while let Some(m) = stack.pop() {
            for s in self.elements() {
                let ms = self.mul(m, s);
                if !member[ms.0] {
                    member[ms.0] = true;
                    stack.push(ms);
                }
            }
        }
        let members: Vec<ElementId> =
            (0..self.order).filter(|&i| member[i]).map(ElementId).collect();
        let minimal_generators = minimal_right_ideal_generators(self, &members, &members);
        Ok(RightIdeal {
            members,
            generators: {
                let set: BTreeSet<_> = gens.iter().copied().collect();
                set.into_iter().collect()
            },
            minimal_generators,
        })
    }

    /// Smallest multiplicatively closed superset of `gens`.
    pub fn subsemigroup(&self, gens: &[ElementId]) -> Result<Vec<ElementId>, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGeneratorSet);
        }
        for &g in gens {
            if !self.contains(g) {
                return Err(SemigroupError::ElementOutOfRange(g.0));
            }
        }
        let mut member = vec![false; self.order];
        let mut frontier: Vec<ElementId> = Vec::new();
        for &g in gens {
            if !member[g.0] {
                member[g.0] = true;
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            for i in 0..self.order {
                if member[i] {
                    for p in [self.mul(x, ElementId(i)), self.mul(ElementId(i), x)] {
                        if !member[p.0] {
                            member[p.0] = true;
                            frontier.push(p);
                        }
                    }
                }
            }
        }
        // A freshly closed element may multiply with itself.
        loop {
            let mut changed = false;
            for x in 0..self.order {
                if !member[x] {
                    continue;
                }
                for y in 0..self.order {
                    if member[y] {
                        let p = self.table[x * self.order + y];
                        if !member[p] {
                            member[p] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ok((0..self.order).filter(|&i| member[i]).map(ElementId).collect())
    }

    /// The two-sided ideal generated by `gens`: closure under products on
    /// both sides.
    pub fn two_sided_ideal(&self, gens: &[ElementId]) -> Result<Vec<ElementId>, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGeneratorSet);
        }
        let mut member = vec![false; self.order];
        let mut stack: Vec<ElementId> = Vec::new();
        for &g in gens {
            if !self.contains(g) {
                return Err(SemigroupError::ElementOutOfRange(g.0));
            }
            if !member[g.0] {
                member[g.0] = true;
                stack.push(g);
            }
        }
        while let Some(m) = stack.pop() {
            for s in self.elements() {
                for p in [self.mul(m, s), self.mul(s, m)] {
                    if !member[p.0] {
                        member[p.0] = true;
                        stack.push(p);
                    }
                }
            }
        }
        Ok((0..self.order).filter(|&i| member[i]).map(ElementId).collect())
    }

    pub fn is_right_ideal(&self, subset: &[ElementId]) -> bool {
        let member = membership(self.order, subset);
        subset
            .iter()
            .all(|&m| self.elements().all(|s| member[self.mul(m, s).0]))
    }

    pub fn is_left_ideal(&self, subset: &[ElementId]) -> bool {
        let member = membership(self.order, subset);
        subset
            .iter()
            .all(|&m| self.elements().all(|s| member[self.mul(s, m).0]))
    }

    pub fn is_two_sided_ideal(&self, subset: &[ElementId]) -> bool {
        self.is_right_ideal(subset) && self.is_left_ideal(subset)
    }

    pub fn is_subsemigroup(&self, subset: &[ElementId]) -> bool {
        let member = membership(self.order, subset);
        subset
            .iter()
            .all(|&x| subset.iter().all(|&y| member[self.mul(x, y).0]))
    }

    /// Materialises a multiplicatively closed subset as its own semigroup.
    ///
    /// Returns the new table together with the list mapping new indices back
    /// to elements of `self` (ascending order of the original indices).
    pub fn sub_table(
        &self,
        subset: &[ElementId],
    ) -> Result<(FiniteSemigroup, Vec<ElementId>), SemigroupError> {
        if subset.is_empty() {
            return Err(SemigroupError::EmptyGeneratorSet);
        }
        let elements: Vec<ElementId> = {
            let set: BTreeSet<_> = subset.iter().copied().collect();
            set.into_iter().collect()
        };
        let mut position = vec![usize::MAX; self.order];
        for (i, &e) in elements.iter().enumerate() {
            if !self.contains(e) {
                return Err(SemigroupError::ElementOutOfRange(e.0));
            }
            position[e.0] = i;
        }
        let k = elements.len();
        let mut mul = vec![vec![0usize; k]; k];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                let p = self.mul(x, y);
                if position[p.0] == usize::MAX {
                    return Err(SemigroupError::NotClosed { x: x.0, y: y.0 });
                }
                mul[i][j] = position[p.0];
            }
        }
        let labels = elements.iter().map(|&e| self.labels[e.0].clone()).collect();
        let sub = FiniteSemigroup::validate_labeled(k, mul, Some(labels), None, None)?;
        Ok((sub, elements))
    }

    /// Checks whether `map` is a homomorphism into `target`, reporting a
    /// witness pair on failure and surjectivity separately.
    pub fn check_homomorphism(
        &self,
        target: &FiniteSemigroup,
        map: &[ElementId],
    ) -> Result<HomomorphismCheck, SemigroupError> {
        if map.len() != self.order {
            return Err(SemigroupError::BadShape { order: self.order });
        }
        for &m in map {
            if !target.contains(m) {
                return Err(SemigroupError::ElementOutOfRange(m.0));
            }
        }
        let mut witness = None;
        'scan: for x in self.elements() {
            for y in self.elements() {
                if map[self.mul(x, y).0] != target.mul(map[x.0], map[y.0]) {
                    witness = Some((x, y));
                    break 'scan;
                }
            }
        }
        let mut hit = vec![false; target.order()];
        for &m in map {
            hit[m.0] = true;
        }
        Ok(HomomorphismCheck {
            is_homomorphism: witness.is_none(),
            witness,
            surjective: hit.iter().all(|&b| b),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjoin {
    Identity,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialElements {
    Idempotent,
    Indecomposable,
}

/// Result of a homomorphism check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismCheck {
    pub is_homomorphism: bool,
    pub witness: Option<(ElementId, ElementId)>,
    pub surjective: bool,
}

/// A right ideal `gens · S¹` with its exact minimum generating subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightIdeal {
    pub members: Vec<ElementId>,
    pub generators: Vec<ElementId>,
    pub minimal_generators: Vec<ElementId>,
}

fn membership(order: usize, subset: &[ElementId]) -> Vec<bool> {
    let mut member = vec![false; order];
    for &e in subset {
        member[e.0] = true;
    }
    member
}

/// Exact minimum generating subset of a right ideal, restricted to `seed`.
///
/// Elements of `members` are quasi-ordered by right divisibility
/// (`a ≤ b` iff `a ∈ bS¹`); any generating set must meet every maximal
/// divisibility class, and one element per maximal class suffices. The
/// lowest-index seed element of each maximal class is chosen.
///
/// `seed` must itself generate the ideal (it does whenever it is the set the
/// ideal was generated from, and in particular when `seed = members`).
pub fn minimal_right_ideal_generators(
    s: &FiniteSemigroup,
    members: &[ElementId],
    seed: &[ElementId],
) -> Vec<ElementId> {
    let k = members.len();
    let mut pos = vec![usize::MAX; s.order()];
    for (i, &m) in members.iter().enumerate() {
        pos[m.0] = i;
    }
    // reach[i][j]: members[j] ∈ members[i]·S¹
    let mut reach = vec![vec![false; k]; k];
    for (i, &m) in members.iter().enumerate() {
        reach[i][i] = true;
        for t in s.elements() {
            let p = s.mul(m, t);
            debug_assert_ne!(pos[p.0], usize::MAX, "right ideal must be closed");
            reach[i][pos[p.0]] = true;
        }
    }
    // Transitive closure.
    for via in 0..k {
        for i in 0..k {
            if reach[i][via] {
                for j in 0..k {
                    if reach[via][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    // Mutual-reachability classes; a class is maximal if no element outside
    // it reaches into it.
    let mut class = vec![usize::MAX; k];
    let mut next = 0;
    for i in 0..k {
        if class[i] == usize::MAX {
            class[i] = next;
            for j in i + 1..k {
                if reach[i][j] && reach[j][i] {
                    class[j] = next;
                }
            }
            next += 1;
        }
    }
    let seed_member = membership(s.order(), seed);
    let mut gens = Vec::new();
    for c in 0..next {
        let in_class: Vec<usize> = (0..k).filter(|&i| class[i] == c).collect();
        let maximal = (0..k)
            .filter(|&i| class[i] != c)
            .all(|i| !reach[i][in_class[0]]);
        if maximal {
            let rep = in_class
                .iter()
                .map(|&i| members[i])
                .find(|&m| seed_member[m.0])
                .expect("seed generates the ideal, so it meets every maximal class");
            gens.push(rep);
        }
    }
    gens.sort();
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn z2_table_is_valid_with_identity_detected() {
        let s = FiniteSemigroup::validate(2, vec![vec![0, 1], vec![1, 0]], None, None).unwrap();
        assert_eq!(s.identity(), Some(ElementId(0)));
        assert_eq!(s.zero(), None);
    }

    #[test]
    fn non_associative_table_reports_a_genuine_witness() {
        let err =
            FiniteSemigroup::validate(2, vec![vec![0, 0], vec![1, 0]], None, None).unwrap_err();
        match err {
            SemigroupError::NotAssociative { x, y, z } => {
                // Recheck the witness against the raw table.
                let at = |a: usize, b: usize| [[0, 0], [1, 0]][a][b];
                assert_ne!(at(at(x, y), z), at(x, at(y, z)));
            }
            other => panic!("expected NotAssociative, got {other}"),
        }
    }

    #[test]
    fn right_zero_table_is_associative_without_identity() {
        let s = FiniteSemigroup::validate(2, vec![vec![0, 1], vec![0, 1]], None, None).unwrap();
        assert_eq!(s.identity(), None);
        assert_eq!(s.zero(), None);
    }

    #[test]
    fn claimed_identity_is_cross_checked() {
        let err = FiniteSemigroup::validate(2, vec![vec![0, 1], vec![1, 0]], Some(1), None)
            .unwrap_err();
        assert!(matches!(err, SemigroupError::BadIdentity { claimed: 1, .. }));
    }

    #[test]
    fn adjoin_zero_then_identity_grows_by_two() {
        let s = gallery::cyclic(2);
        let t = s.adjoin(Adjoin::Zero);
        assert_eq!(t.order(), 3);
        assert_eq!(t.zero(), Some(ElementId(2)));
        assert_eq!(t.identity(), Some(ElementId(0)));
        let u = t.adjoin(Adjoin::Identity);
        assert_eq!(u.order(), 4);
        assert_eq!(u.identity(), Some(ElementId(3)));
        assert_eq!(u.zero(), Some(ElementId(2)));
    }

    #[test]
    fn adjoin_identity_to_right_zero_gives_monoid() {
        let s = gallery::right_zero(2).adjoin(Adjoin::Identity);
        assert_eq!(s.order(), 3);
        assert_eq!(s.identity(), Some(ElementId(2)));
    }

    #[test]
    fn right_zero_idempotents_are_everything() {
        let s = gallery::right_zero(2);
        assert_eq!(s.special_elements(SpecialElements::Idempotent).len(), 2);
    }

    #[test]
    fn group_has_no_indecomposables() {
        let s = gallery::cyclic(2);
        assert!(s.special_elements(SpecialElements::Indecomposable).is_empty());
    }

    #[test]
    fn null_semigroup_indecomposables_are_the_nonzero_elements() {
        let s = gallery::null_semigroup(3);
        assert_eq!(
            s.special_elements(SpecialElements::Indecomposable),
            vec![ElementId(1), ElementId(2)]
        );
    }

    #[test]
    fn right_ideal_of_group_element_is_everything() {
        let s = gallery::cyclic(6);
        let ideal = s.right_ideal(&[ElementId(1)]).unwrap();
        assert_eq!(ideal.members.len(), 6);
        assert_eq!(ideal.minimal_generators.len(), 1);
    }

    #[test]
    fn right_ideal_generated_by_whole_right_zero_semigroup() {
        let s = gallery::right_zero(2);
        let ideal = s.right_ideal(&[ElementId(0), ElementId(1)]).unwrap();
        assert_eq!(ideal.members.len(), 2);
        // a = b·a for all a, b: one mutual-divisibility class.
        assert_eq!(ideal.minimal_generators, vec![ElementId(0)]);
    }

    #[test]
    fn right_ideal_is_idempotent_under_regeneration() {
        let s = gallery::symmetric_3();
        for g in s.elements() {
            let first = s.right_ideal(&[g]).unwrap();
            let again = s.right_ideal(&first.members).unwrap();
            assert_eq!(first.members, again.members);
        }
    }

    #[test]
    fn subsemigroup_of_z6_generated_by_two() {
        let s = gallery::cyclic(6);
        let sub = s.subsemigroup(&[ElementId(2)]).unwrap();
        assert_eq!(sub, vec![ElementId(0), ElementId(2), ElementId(4)]);
    }

    #[test]
    fn subsemigroup_of_idempotent_is_singleton() {
        let s = gallery::right_zero(3);
        assert_eq!(s.subsemigroup(&[ElementId(1)]).unwrap(), vec![ElementId(1)]);
    }

    #[test]
    fn empty_generators_rejected() {
        let s = gallery::cyclic(2);
        assert!(matches!(s.subsemigroup(&[]), Err(SemigroupError::EmptyGeneratorSet)));
        assert!(matches!(s.right_ideal(&[]), Err(SemigroupError::EmptyGeneratorSet)));
    }

    #[test]
    fn mod_two_reduction_is_a_surjective_homomorphism() {
        let z4 = gallery::cyclic(4);
        let z2 = gallery::cyclic(2);
        let map = [0, 1, 0, 1].map(ElementId);
        let check = z4.check_homomorphism(&z2, &map).unwrap();
        assert!(check.is_homomorphism);
        assert!(check.surjective);
    }

    #[test]
    fn constant_zero_map_is_a_homomorphism() {
        let z2 = gallery::cyclic(2);
        let map = [ElementId(0), ElementId(0)];
        let check = z2.check_homomorphism(&z2, &map).unwrap();
        assert!(check.is_homomorphism);
        assert!(!check.surjective);
    }

    #[test]
    fn bad_map_reports_witness() {
        let z3 = gallery::cyclic(3);
        let z2 = gallery::cyclic(2);
        let map = [ElementId(0), ElementId(1), ElementId(0)];
        let check = z3.check_homomorphism(&z2, &map).unwrap();
        assert!(!check.is_homomorphism);
        // First violation in scan order: map(1*2) = map(0) = 0 but
        // map(1)*map(2) = 1.
        assert_eq!(check.witness, Some((ElementId(1), ElementId(2))));
    }

    #[test]
    fn table_file_round_trip() {
        let s = gallery::brandt(&gallery::cyclic(2), 2).semigroup;
        let json = serde_json::to_string(&s.to_table_file()).unwrap();
        let parsed: TableFile = serde_json::from_str(&json).unwrap();
        let t = FiniteSemigroup::from_table_file(parsed).unwrap();
        assert_eq!(s, t);
    }
}
