//! Green's classes, stabilisers, Schützenberger groups, and the embedding
//! of a Schützenberger group's subgroup lattice into the lattice of right
//! congruences.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::congruence::{combine, CombineMode, CongruenceError, RightCongruence};
use crate::construct::group_inverses;
use crate::semigroup::{ElementId, FiniteSemigroup, SemigroupError};

/// Subgroup enumeration refuses groups larger than this.
pub const SUBGROUP_ENUM_BOUND: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GreenError {
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not an H-class")]
    NotAnHClass,
    #[error("semigroup is not a group")]
    NotAGroup,
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subset is not a subgroup of the Schützenberger group")]
    NotASubgroupOfSchutz,
    #[error("group of order {order} exceeds the subgroup-enumeration bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("semigroup error: {0}")]
    Semigroup(#[from] SemigroupError),
    #[error("congruence error: {0}")]
    Congruence(#[from] CongruenceError),
}

/// The R, L and H partitions of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenPartition {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub num_r: usize,
    pub num_l: usize,
    pub num_h: usize,
}

impl GreenPartition {
    pub fn h_class_of(&self, e: ElementId) -> Vec<ElementId> {
        let c = self.h_class[e.0];
        (0..self.h_class.len()).filter(|&i| self.h_class[i] == c).map(ElementId).collect()
    }

    pub fn h_classes(&self) -> Vec<Vec<ElementId>> {
        let mut out = vec![Vec::new(); self.num_h];
        for (e, &c) in self.h_class.iter().enumerate() {
            out[c].push(ElementId(e));
        }
        out
    }
}

fn canonical_by_key<K: Ord>(keys: Vec<K>) -> (Vec<usize>, usize) {
    let mut seen: Vec<(&K, usize)> = Vec::new();
    let mut out = Vec::with_capacity(keys.len());
    for k in &keys {
        match seen.iter().find(|(key, _)| *key == k) {
            Some(&(_, id)) => out.push(id),
            None => {
                let id = seen.len();
                seen.push((k, id));
                out.push(id);
            }
        }
    }
    let n = seen.len();
    (out, n)
}

/// R by equality of right principal ideals `aS¹ = {a} ∪ aS`, L dually,
/// H as the common refinement.
pub fn green_partitions(s: &FiniteSemigroup) -> GreenPartition {
    let n = s.order();
    let mut right_ideals = Vec::with_capacity(n);
    let mut left_ideals = Vec::with_capacity(n);
    for a in s.elements() {
        let mut r = vec![false; n];
        let mut l = vec![false; n];
        r[a.0] = true;
        l[a.0] = true;
        for t in s.elements() {
            r[s.mul(a, t).0] = true;
            l[s.mul(t, a).0] = true;
        }
        right_ideals.push(r);
        left_ideals.push(l);
    }
    let (r_class, num_r) = canonical_by_key(right_ideals);
    let (l_class, num_l) = canonical_by_key(left_ideals);
    let pairs: Vec<(usize, usize)> = (0..n).map(|e| (r_class[e], l_class[e])).collect();
    let (h_class, num_h) = canonical_by_key(pairs);
    GreenPartition { r_class, l_class, h_class, num_r, num_l, num_h }
}

/// Which side a stabiliser or Schützenberger group is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// The stabiliser `{s ∈ S¹ : Xs = X}` (or its left dual), materialised as
/// a monoid with a formal identity at index 0.
#[derive(Debug, Clone)]
pub struct StabiliserMonoid {
    pub side: Side,
    /// Elements of `S` that stabilise the subset, ascending.
    pub members: Vec<ElementId>,
    /// The materialised monoid: index 0 is the formal identity, index
    /// `i + 1` is `members[i]`.
    pub monoid: FiniteSemigroup,
}

impl StabiliserMonoid {
    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    /// Element of `S` behind a monoid index; `None` for the formal identity.
    pub fn element_of(&self, idx: usize) -> Option<ElementId> {
        if idx == 0 {
            None
        } else {
            Some(self.members[idx - 1])
        }
    }

    /// Applies a stabiliser element to `h` on the stabilised side.
    pub fn act(&self, s: &FiniteSemigroup, idx: usize, h: ElementId) -> ElementId {
        match self.element_of(idx) {
            None => h,
            Some(m) => match self.side {
                Side::Right => s.mul(h, m),
                Side::Left => s.mul(m, h),
            },
        }
    }
}

fn stabilizer(
    s: &FiniteSemigroup,
    subset: &[ElementId],
    side: Side,
) -> Result<StabiliserMonoid, GreenError> {
    if subset.is_empty() {
        return Err(GreenError::EmptySubset);
    }
    let set: BTreeSet<ElementId> = subset.iter().copied().collect();
    for &x in &set {
        if !s.contains(x) {
            return Err(GreenError::Semigroup(SemigroupError::ElementOutOfRange(x.0)));
        }
    }
    let members: Vec<ElementId> = s
        .elements()
        .filter(|&t| {
            let image: BTreeSet<ElementId> = set
                .iter()
                .map(|&x| match side {
                    Side::Right => s.mul(x, t),
                    Side::Left => s.mul(t, x),
                })
                .collect();
            image == set
        })
        .collect();
    let k = members.len();
    let mut mul = vec![vec![0usize; k + 1]; k + 1];
    let mut position = vec![usize::MAX; s.order()];
    for (i, &m) in members.iter().enumerate() {
        position[m.0] = i;
    }
    for x in 0..=k {
        mul[0][x] = x;
        mul[x][0] = x;
    }
    for i in 0..k {
        for j in 0..k {
            let p = s.mul(members[i], members[j]);
            debug_assert_ne!(position[p.0], usize::MAX, "stabiliser is closed");
            mul[i + 1][j + 1] = position[p.0] + 1;
        }
    }
    let mut labels = vec!["1".to_string()];
    labels.extend(members.iter().map(|&m| s.label(m).to_string()));
    let monoid = FiniteSemigroup::validate_labeled(k + 1, mul, Some(labels), None, None)?;
    Ok(StabiliserMonoid { side, members, monoid })
}

/// Right stabiliser of a subset: all of `S` fixing it setwise on the right,
/// plus the formal identity.
pub fn right_stabilizer(
    s: &FiniteSemigroup,
    subset: &[ElementId],
) -> Result<StabiliserMonoid, GreenError> {
    stabilizer(s, subset, Side::Right)
}

pub fn left_stabilizer(
    s: &FiniteSemigroup,
    subset: &[ElementId],
) -> Result<StabiliserMonoid, GreenError> {
    stabilizer(s, subset, Side::Left)
}

/// A Schützenberger group: the stabiliser of an H-class modulo acting
/// identically on it.
#[derive(Debug, Clone)]
pub struct SchutzGroup {
    pub side: Side,
    pub h_class: Vec<ElementId>,
    pub stabiliser: StabiliserMonoid,
    /// Class of each stabiliser-monoid element under the kernel congruence.
    pub sigma_class: Vec<usize>,
    /// The quotient, validated as a group.
    pub group: FiniteSemigroup,
}

impl SchutzGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Projection of a stabiliser-monoid element onto the group.
    pub fn project(&self, stab_idx: usize) -> ElementId {
        ElementId(self.sigma_class[stab_idx])
    }

    /// A stabiliser-monoid representative of a group element.
    pub fn representative(&self, g: ElementId) -> usize {
        self.sigma_class.iter().position(|&c| c == g.0).expect("projection is surjective")
    }

    /// Action of a group element on `h` (right side multiplies on the
    /// right, left side on the left).
    pub fn act(&self, s: &FiniteSemigroup, g: ElementId, h: ElementId) -> ElementId {
        self.stabiliser.act(s, self.representative(g), h)
    }
}

fn schutzenberger(
    s: &FiniteSemigroup,
    h_class: &[ElementId],
    side: Side,
) -> Result<SchutzGroup, GreenError> {
    if h_class.is_empty() {
        return Err(GreenError::EmptySubset);
    }
    let green = green_partitions(s);
    let canonical: BTreeSet<ElementId> = green.h_class_of(h_class[0]).into_iter().collect();
    let given: BTreeSet<ElementId> = h_class.iter().copied().collect();
    if canonical != given {
        return Err(GreenError::NotAnHClass);
    }
    let h: Vec<ElementId> = given.into_iter().collect();
    let stab = stabilizer(s, &h, side)?;
    // Kernel: two stabiliser elements are identified when they move every
    // element of the H-class identically.
    let orbits: Vec<Vec<ElementId>> = (0..stab.order())
        .map(|idx| h.iter().map(|&x| stab.act(s, idx, x)).collect())
        .collect();
    let (sigma_class, num_classes) = canonical_by_key(orbits);
    let mut mul = vec![vec![usize::MAX; num_classes]; num_classes];
    for i in 0..stab.order() {
        for j in 0..stab.order() {
            let p = sigma_class[stab.monoid.mul(ElementId(i), ElementId(j)).0];
            let cell = &mut mul[sigma_class[i]][sigma_class[j]];
            if *cell == usize::MAX {
                *cell = p;
            } else {
                debug_assert_eq!(*cell, p, "kernel must be a congruence");
            }
        }
    }
    let group = FiniteSemigroup::validate(num_classes, mul, None, None)?;
    if group_inverses(&group).is_none() {
        return Err(GreenError::NotAGroup);
    }
    Ok(SchutzGroup { side, h_class: h, stabiliser: stab, sigma_class, group })
}

/// The (right) Schützenberger group of an H-class.
pub fn schutzenberger_group(
    s: &FiniteSemigroup,
    h_class: &[ElementId],
) -> Result<SchutzGroup, GreenError> {
    schutzenberger(s, h_class, Side::Right)
}

/// The dual construction over the left stabiliser, acting on the left.
pub fn schutzenberger_group_left(
    s: &FiniteSemigroup,
    h_class: &[ElementId],
) -> Result<SchutzGroup, GreenError> {
    schutzenberger(s, h_class, Side::Left)
}

/// True when `subset` is a subgroup of the group `g` (non-empty and closed;
/// finiteness supplies inverses).
pub fn is_subgroup(g: &FiniteSemigroup, subset: &[ElementId]) -> bool {
    if subset.is_empty() {
        return false;
    }
    let set: BTreeSet<ElementId> = subset.iter().copied().collect();
    set.iter().all(|&x| set.iter().all(|&y| set.contains(&g.mul(x, y))))
}

/// All subgroups of `g`, each sorted ascending; the list is ordered by
/// (size, elements).
pub fn subgroups_of(g: &FiniteSemigroup) -> Result<Vec<Vec<ElementId>>, GreenError> {
    if group_inverses(g).is_none() {
        return Err(GreenError::NotAGroup);
    }
    if g.order() > SUBGROUP_ENUM_BOUND {
        return Err(GreenError::OrderTooLarge { order: g.order(), bound: SUBGROUP_ENUM_BOUND });
    }
    let identity = g.identity().expect("groups have an identity");
    let mut found: BTreeSet<Vec<ElementId>> = BTreeSet::new();
    found.insert(vec![identity]);
    let mut frontier: Vec<Vec<ElementId>> = vec![vec![identity]];
    while let Some(sub) = frontier.pop() {
        for x in g.elements() {
            if !sub.contains(&x) {
                let mut gens = sub.clone();
                gens.push(x);
                let bigger = g.subsemigroup(&gens).expect("non-empty generators");
                if found.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
    }
    let mut out: Vec<Vec<ElementId>> = found.into_iter().collect();
    out.sort_by_key(|sub| (sub.len(), sub.clone()));
    Ok(out)
}

/// The right congruence whose classes are the right cosets of a subgroup:
/// `a ρ b` iff `a b⁻¹ ∈ H`.
pub fn subgroup_to_congruence(
    g: &FiniteSemigroup,
    subgroup: &[ElementId],
) -> Result<RightCongruence, GreenError> {
    let inverses = group_inverses(g).ok_or(GreenError::NotAGroup)?;
    if !is_subgroup(g, subgroup) {
        return Err(GreenError::NotASubgroup);
    }
    let set: BTreeSet<ElementId> = subgroup.iter().copied().collect();
    let n = g.order();
    let mut raw = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if raw[a] == usize::MAX {
            for b in 0..n {
                let ab_inv = g.mul(ElementId(a), inverses[b]);
                if set.contains(&ab_inv) {
                    raw[b] = next;
                }
            }
            next += 1;
        }
    }
    Ok(RightCongruence::new(g, &raw)?)
}

/// The subgroup `{x y⁻¹ : (x, y) ∈ ρ}` recovered from a right congruence.
pub fn congruence_to_subgroup(
    g: &FiniteSemigroup,
    rho: &RightCongruence,
) -> Result<Vec<ElementId>, GreenError> {
    let inverses = group_inverses(g).ok_or(GreenError::NotAGroup)?;
    let mut set: BTreeSet<ElementId> = BTreeSet::new();
    for a in g.elements() {
        for b in g.elements() {
            if rho.are_related(a, b) {
                set.insert(g.mul(a, inverses[b.0]));
            }
        }
    }
    let out: Vec<ElementId> = set.into_iter().collect();
    debug_assert!(is_subgroup(g, &out));
    Ok(out)
}

/// Whether the full Schützenberger group moves `x` freely: the orbit map
/// `g ↦ g·x` is injective.
fn acts_faithfully(s: &FiniteSemigroup, schutz: &SchutzGroup, x: ElementId) -> bool {
    let mut seen = HashSet::new();
    (0..schutz.order()).all(|g| seen.insert(schutz.act(s, ElementId(g), x)))
}

/// The right congruence attached to a subgroup of the (left-acting)
/// Schützenberger group of an H-class.
///
/// Two elements are related when they are equal; or both factor as `hs`,
/// `h's` with `s ∈ S¹`, `h = g·h'` for some `g` in the subgroup, and the
/// group acts faithfully on the first; or both factor as `hs`, `h's` with
/// `s ∈ S` and the action on the first is not faithful.
pub fn rho_g(
    s: &FiniteSemigroup,
    schutz: &SchutzGroup,
    subgroup: &[ElementId],
) -> Result<RightCongruence, GreenError> {
    if schutz.side != Side::Left {
        return Err(GreenError::NotASubgroupOfSchutz);
    }
    if !subgroup.iter().all(|&g| schutz.group.contains(g)) || !is_subgroup(&schutz.group, subgroup)
    {
        return Err(GreenError::NotASubgroupOfSchutz);
    }
    let h = &schutz.h_class;
    let n = s.order();
    // Factorisations x = h·s ranging over multipliers; `None` is the formal
    // identity.
    let mut multipliers: Vec<Option<ElementId>> = vec![None];
    multipliers.extend(s.elements().map(Some));
    let mut faithful = vec![true; n];
    let mut in_hs1 = vec![false; n];
    for &hh in h {
        for &m in &multipliers {
            let x = match m {
                None => hh,
                Some(t) => s.mul(hh, t),
            };
            if !in_hs1[x.0] {
                in_hs1[x.0] = true;
                faithful[x.0] = acts_faithfully(s, schutz, x);
            }
        }
    }
    let mut related: HashSet<(usize, usize)> = HashSet::new();
    for x in 0..n {
        related.insert((x, x));
    }
    for &m in &multipliers {
        for &hh in h {
            let x = match m {
                None => hh,
                Some(t) => s.mul(hh, t),
            };
            for &hp in h {
                let y = match m {
                    None => hp,
                    Some(t) => s.mul(hp, t),
                };
                let relate = if faithful[x.0] {
                    subgroup.iter().any(|&g| schutz.act(s, g, hp) == hh)
                } else {
                    m.is_some()
                };
                if relate {
                    related.insert((x.0, y.0));
                }
            }
        }
    }
    // The proof defines an equivalence outright; validate that instead of
    // closing the relation.
    let mut raw: Vec<usize> = (0..n).collect();
    for &(a, b) in &related {
        let (ra, rb) = (raw[a].min(raw[b]), raw[a].max(raw[b]));
        if ra != rb {
            for c in raw.iter_mut() {
                if *c == rb {
                    *c = ra;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if raw[a] == raw[b] && !(related.contains(&(a, b)) && related.contains(&(b, a))) {
                panic!("subgroup relation is not transitive at ({a}, {b})");
            }
        }
    }
    Ok(RightCongruence::new(s, &raw)?)
}

/// One line of a lattice-embedding report.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingCheck {
    pub check: char,
    pub pair: (usize, usize),
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub subgroup_count: usize,
    pub checks: Vec<EmbeddingCheck>,
    pub pass: bool,
}

/// Verifies that mapping subgroups of the Schützenberger group to their
/// congruences preserves meets (a), joins (b), and is injective (c).
pub fn verify_lattice_embedding(
    s: &FiniteSemigroup,
    h_class: &[ElementId],
) -> Result<EmbeddingReport, GreenError> {
    let schutz = schutzenberger_group_left(s, h_class)?;
    if schutz.order() > SUBGROUP_ENUM_BOUND {
        return Err(GreenError::OrderTooLarge {
            order: schutz.order(),
            bound: SUBGROUP_ENUM_BOUND,
        });
    }
    let subgroups = subgroups_of(&schutz.group)?;
    let images: Vec<RightCongruence> =
        subgroups.iter().map(|sub| rho_g(s, &schutz, sub)).collect::<Result<_, _>>()?;
    let mut checks = Vec::new();
    for i in 0..subgroups.len() {
        for j in i..subgroups.len() {
            let intersection: Vec<ElementId> =
                subgroups[i].iter().copied().filter(|g| subgroups[j].contains(g)).collect();
            let rho_meet = rho_g(s, &schutz, &intersection)?;
            let meet = images[i].meet(&images[j])?;
            let pass_a = rho_meet == meet;
            checks.push(EmbeddingCheck {
                check: 'a',
                pair: (i, j),
                pass: pass_a,
                witness: (!pass_a).then(|| {
                    format!(
                        "rho(G{i} ∩ G{j}) has {} classes, meet has {}",
                        rho_meet.num_classes(),
                        meet.num_classes()
                    )
                }),
            });
            let mut union_gens = subgroups[i].clone();
            union_gens.extend(&subgroups[j]);
            let generated = schutz.group.subsemigroup(&union_gens)?;
            let rho_join = rho_g(s, &schutz, &generated)?;
            let join = combine(s, &images[i], &images[j], CombineMode::Join)?;
            let pass_b = rho_join == join;
            checks.push(EmbeddingCheck {
                check: 'b',
                pair: (i, j),
                pass: pass_b,
                witness: (!pass_b).then(|| {
                    format!(
                        "rho(<G{i} ∪ G{j}>) has {} classes, join has {}",
                        rho_join.num_classes(),
                        join.num_classes()
                    )
                }),
            });
            if i != j {
                let pass_c = images[i] != images[j];
                checks.push(EmbeddingCheck {
                    check: 'c',
                    pair: (i, j),
                    pass: pass_c,
                    witness: (!pass_c)
                        .then(|| format!("distinct subgroups G{i}, G{j} map to equal congruences")),
                });
            }
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(EmbeddingReport { subgroup_count: subgroups.len(), checks, pass })
}

/// Brute-force group isomorphism test (identity-preserving bijection
/// search); intended for desk-scale groups.
pub fn groups_isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let (Some(ea), Some(eb)) = (a.identity(), b.identity()) else {
        return false;
    };
    let n = a.order();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[ea.0] = eb.0;
    used[eb.0] = true;
    fn extend(
        a: &FiniteSemigroup,
        b: &FiniteSemigroup,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(x) = (0..a.order()).find(|&x| image[x] == usize::MAX) else {
            return true;
        };
        for y in 0..b.order() {
            if used[y] {
                continue;
            }
            image[x] = y;
            used[y] = true;
            let consistent = (0..a.order()).all(|u| {
                (0..a.order()).all(|v| {
                    let (iu, iv) = (image[u], image[v]);
                    if iu == usize::MAX || iv == usize::MAX {
                        return true;
                    }
                    let p = image[a.mul(ElementId(u), ElementId(v)).0];
                    p == usize::MAX || p == b.mul(ElementId(iu), ElementId(iv)).0
                })
            });
            if consistent && extend(a, b, image, used) {
                return true;
            }
            image[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    extend(a, b, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::enumerate_right_congruences;
    use crate::gallery;

    #[test]
    fn groups_have_single_green_classes() {
        let g = green_partitions(&gallery::symmetric_3());
        assert_eq!((g.num_r, g.num_l, g.num_h), (1, 1, 1));
    }

    #[test]
    fn right_zero_green_structure() {
        let g = green_partitions(&gallery::right_zero(2));
        assert_eq!(g.num_r, 1);
        assert_eq!(g.num_l, 2);
        assert_eq!(g.num_h, 2);
    }

    #[test]
    fn brandt_has_five_h_classes() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let g = green_partitions(&b.semigroup);
        assert_eq!(g.num_h, 5);
        let sizes: Vec<usize> = {
            let mut v: Vec<usize> = g.h_classes().iter().map(|c| c.len()).collect();
            v.sort();
            v
        };
        assert_eq!(sizes, vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn stabiliser_of_whole_group_is_everything_plus_formal_identity() {
        let g = gallery::cyclic(3);
        let all: Vec<ElementId> = g.elements().collect();
        let stab = right_stabilizer(&g, &all).unwrap();
        assert_eq!(stab.members.len(), 3);
        assert_eq!(stab.order(), 4);
        assert_eq!(stab.monoid.identity(), Some(ElementId(0)));
    }

    #[test]
    fn stabiliser_of_brandt_h_class() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let h = vec![b.encode(0, ElementId(0), 1), b.encode(0, ElementId(1), 1)];
        let stab = right_stabilizer(&b.semigroup, &h).unwrap();
        assert_eq!(stab.order(), 3);
        assert_eq!(stab.members, vec![b.encode(1, ElementId(0), 1), b.encode(1, ElementId(1), 1)]);
    }

    #[test]
    fn stabiliser_of_zero_is_everything() {
        let s = gallery::null_semigroup(3);
        let stab = right_stabilizer(&s, &[ElementId(0)]).unwrap();
        assert_eq!(stab.members.len(), 3);
    }

    #[test]
    fn schutzenberger_of_singleton_is_trivial() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let schutz = schutzenberger_group(&b.semigroup, &[b.zero]).unwrap();
        assert_eq!(schutz.order(), 1);
    }

    #[test]
    fn schutzenberger_of_group_h_class_matches_the_group() {
        let z3 = gallery::cyclic(3);
        let all: Vec<ElementId> = z3.elements().collect();
        let schutz = schutzenberger_group(&z3, &all).unwrap();
        assert_eq!(schutz.order(), 3);
        assert!(groups_isomorphic(&schutz.group, &z3));
    }

    #[test]
    fn schutzenberger_of_nongroup_brandt_h_class_has_order_two() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let h = vec![b.encode(0, ElementId(0), 1), b.encode(0, ElementId(1), 1)];
        let schutz = schutzenberger_group(&b.semigroup, &h).unwrap();
        assert_eq!(schutz.order(), 2);
        // No idempotent: this is not a group H-class.
        assert!(h.iter().all(|&x| b.semigroup.mul(x, x) != x));
    }

    #[test]
    fn schutzenberger_rejects_non_h_classes() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let bad = vec![b.encode(0, ElementId(0), 1), b.zero];
        assert!(matches!(schutzenberger_group(&b.semigroup, &bad), Err(GreenError::NotAnHClass)));
    }

    #[test]
    fn left_and_right_schutzenberger_groups_are_isomorphic() {
        let b = gallery::brandt(&gallery::klein_four(), 2);
        let h = vec![
            b.encode(0, ElementId(0), 1),
            b.encode(0, ElementId(1), 1),
            b.encode(0, ElementId(2), 1),
            b.encode(0, ElementId(3), 1),
        ];
        let right = schutzenberger_group(&b.semigroup, &h).unwrap();
        let left = schutzenberger_group_left(&b.semigroup, &h).unwrap();
        assert!(groups_isomorphic(&right.group, &left.group));
    }

    #[test]
    fn sigma_kernel_is_two_sided_on_the_stabiliser() {
        let b = gallery::brandt(&gallery::cyclic(4), 2);
        let h = vec![
            b.encode(0, ElementId(0), 1),
            b.encode(0, ElementId(1), 1),
            b.encode(0, ElementId(2), 1),
            b.encode(0, ElementId(3), 1),
        ];
        let schutz = schutzenberger_group(&b.semigroup, &h).unwrap();
        let m = &schutz.stabiliser.monoid;
        for i in 0..m.order() {
            for j in 0..m.order() {
                if schutz.sigma_class[i] == schutz.sigma_class[j] {
                    for t in m.elements() {
                        assert_eq!(
                            schutz.sigma_class[m.mul(ElementId(i), t).0],
                            schutz.sigma_class[m.mul(ElementId(j), t).0]
                        );
                        assert_eq!(
                            schutz.sigma_class[m.mul(t, ElementId(i)).0],
                            schutz.sigma_class[m.mul(t, ElementId(j)).0]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroups_of(&gallery::cyclic(1)).unwrap().len(), 1);
        assert_eq!(subgroups_of(&gallery::cyclic(6)).unwrap().len(), 4);
        assert_eq!(subgroups_of(&gallery::klein_four()).unwrap().len(), 5);
        assert_eq!(subgroups_of(&gallery::symmetric_3()).unwrap().len(), 6);
    }

    #[test]
    fn subgroups_require_a_group() {
        assert!(matches!(subgroups_of(&gallery::right_zero(2)), Err(GreenError::NotAGroup)));
    }

    #[test]
    fn coset_congruence_of_z4() {
        let g = gallery::cyclic(4);
        let rho = subgroup_to_congruence(&g, &[ElementId(0), ElementId(2)]).unwrap();
        assert_eq!(rho.class_vector(), &[0, 1, 0, 1]);
    }

    #[test]
    fn correspondence_extremes() {
        let g = gallery::cyclic(5);
        let trivial = subgroup_to_congruence(&g, &[ElementId(0)]).unwrap();
        assert!(trivial.is_identity());
        let all: Vec<ElementId> = g.elements().collect();
        assert!(subgroup_to_congruence(&g, &all).unwrap().is_universal());
    }

    #[test]
    fn correspondence_round_trips_both_ways() {
        let g = gallery::cyclic(6);
        for sub in subgroups_of(&g).unwrap() {
            let rho = subgroup_to_congruence(&g, &sub).unwrap();
            assert_eq!(congruence_to_subgroup(&g, &rho).unwrap(), sub);
        }
        for rho in enumerate_right_congruences(&g).unwrap().congruences {
            let sub = congruence_to_subgroup(&g, &rho).unwrap();
            assert_eq!(subgroup_to_congruence(&g, &sub).unwrap(), rho);
        }
    }

    #[test]
    fn group_congruence_counts_match_subgroup_counts() {
        for g in [gallery::cyclic(2), gallery::cyclic(6), gallery::klein_four()] {
            let congruences = enumerate_right_congruences(&g).unwrap().len();
            let subgroups = subgroups_of(&g).unwrap().len();
            assert_eq!(congruences, subgroups);
        }
    }

    #[test]
    fn rho_of_full_schutzenberger_group_is_coarser_than_trivial() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let h = vec![b.encode(0, ElementId(0), 1), b.encode(0, ElementId(1), 1)];
        let schutz = schutzenberger_group_left(&b.semigroup, &h).unwrap();
        let identity = schutz.group.identity().unwrap();
        let trivial = rho_g(&b.semigroup, &schutz, &[identity]).unwrap();
        let all: Vec<ElementId> = schutz.group.elements().collect();
        let full = rho_g(&b.semigroup, &schutz, &all).unwrap();
        assert!(trivial.refines(&full));
        assert_ne!(trivial, full);
    }

    #[test]
    fn faithfulness_is_independent_of_the_h_class_representative() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let h = vec![b.encode(0, ElementId(0), 1), b.encode(0, ElementId(1), 1)];
        let schutz = schutzenberger_group_left(&b.semigroup, &h).unwrap();
        let mut multipliers: Vec<Option<ElementId>> = vec![None];
        multipliers.extend(b.semigroup.elements().map(Some));
        for m in multipliers {
            let values: Vec<bool> = h
                .iter()
                .map(|&hh| {
                    let x = match m {
                        None => hh,
                        Some(t) => b.semigroup.mul(hh, t),
                    };
                    acts_faithfully(&b.semigroup, &schutz, x)
                })
                .collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn lattice_embedding_on_brandt_of_z2() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let h = vec![b.encode(0, ElementId(0), 1), b.encode(0, ElementId(1), 1)];
        let report = verify_lattice_embedding(&b.semigroup, &h).unwrap();
        assert_eq!(report.subgroup_count, 2);
        assert!(report.pass, "failed checks: {:?}", report.checks);
    }

    #[test]
    fn lattice_embedding_vacuous_for_trivial_group() {
        let b = gallery::brandt(&gallery::cyclic(1), 2);
        let h = vec![b.encode(0, ElementId(0), 1)];
        let report = verify_lattice_embedding(&b.semigroup, &h).unwrap();
        assert_eq!(report.subgroup_count, 1);
        assert!(report.pass);
    }

    #[test]
    fn group_h_class_schutzenberger_acts_regularly() {
        let b = gallery::brandt(&gallery::cyclic(4), 2);
        let green = green_partitions(&b.semigroup);
        for h in green.h_classes() {
            let has_idempotent = h.iter().any(|&x| b.semigroup.mul(x, x) == x);
            if has_idempotent && h.len() > 1 {
                let schutz = schutzenberger_group(&b.semigroup, &h).unwrap();
                assert_eq!(schutz.order(), h.len());
                // Simply transitive: each pair has exactly one mover.
                for &x in &h {
                    for &y in &h {
                        let movers = (0..schutz.order())
                            .filter(|&g| schutz.act(&b.semigroup, ElementId(g), x) == y)
                            .count();
                        assert_eq!(movers, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn isomorphism_checker_distinguishes_z4_from_klein() {
        assert!(!groups_isomorphic(&gallery::cyclic(4), &gallery::klein_four()));
        assert!(groups_isomorphic(&gallery::cyclic(4), &gallery::cyclic(4)));
    }
}
