//! Semigroup constructions over finite ingredients.
//!
//! Every construction eagerly materialises a table, re-validates it
//! (associativity included, even where guaranteed by theory), and returns
//! the structure maps downstream code needs: projections, decompositions
//! and encodings.

use thiserror::Error;

use crate::congruence::{CongruenceError, RightCongruence};
use crate::semigroup::{Adjoin, ElementId, FiniteSemigroup, SemigroupError};

/// Upper bound on the order of a materialised construction.
pub const MAX_CONSTRUCTION_ORDER: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("construction of order {got} exceeds the cap {max}")]
    TooLarge { got: usize, max: usize },
    #[error("semigroup error: {0}")]
    Semigroup(#[from] SemigroupError),
    #[error("congruence error: {0}")]
    Congruence(#[from] CongruenceError),
    #[error("{which} factor must be a monoid")]
    NotAMonoid { which: &'static str },
    #[error("second factor has no identity")]
    NoIdentityInSecondFactor,
    #[error("first factor has no identity")]
    NoIdentityInFirstFactor,
    #[error("action axiom violated: {0}")]
    ActionAxiomViolation(String),
    #[error("act axiom violated: {0}")]
    ActAxiomViolation(String),
    #[error("semilattice diagram invalid: {0}")]
    DiagramInvalid(String),
    #[error("subset is not a two-sided ideal: element {member} escapes via {s}")]
    NotAnIdeal { member: usize, s: usize },
    #[error("ideal must be non-empty")]
    EmptyIdeal,
    #[error("not a group")]
    NotAGroup,
    #[error("index set must be non-empty")]
    EmptyIndexSet,
}

fn check_size(got: usize) -> Result<(), ConstructError> {
    if got > MAX_CONSTRUCTION_ORDER {
        return Err(ConstructError::TooLarge { got, max: MAX_CONSTRUCTION_ORDER });
    }
    Ok(())
}

/// Two-sided inverse table of a group, or `None` when the semigroup is not
/// a group.
pub fn group_inverses(s: &FiniteSemigroup) -> Option<Vec<ElementId>> {
    let e = s.identity()?;
    let mut inverses = Vec::with_capacity(s.order());
    for x in s.elements() {
        let inv = s.elements().find(|&y| s.mul(x, y) == e && s.mul(y, x) == e)?;
        inverses.push(inv);
    }
    Some(inverses)
}

/// A direct product together with its factor projections.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub semigroup: FiniteSemigroup,
    pub left: FiniteSemigroup,
    pub right: FiniteSemigroup,
    pub proj_left: Vec<ElementId>,
    pub proj_right: Vec<ElementId>,
}

impl DirectProduct {
    pub fn encode(&self, s: ElementId, t: ElementId) -> ElementId {
        ElementId(s.0 * self.right.order() + t.0)
    }

    pub fn decode(&self, p: ElementId) -> (ElementId, ElementId) {
        (self.proj_left[p.0], self.proj_right[p.0])
    }

    /// Slice by a fixed right-factor element `m`: the partition
    /// `{(s, t) : (s, m) ρ (t, m)}` of the left factor.
    ///
    /// Requires the right factor to be a monoid; right compatibility of the
    /// slice is then guaranteed, and asserted here.
    pub fn slice_fixing_right(
        &self,
        rho: &RightCongruence,
        m: ElementId,
    ) -> Result<RightCongruence, ConstructError> {
        if self.right.identity().is_none() {
            return Err(ConstructError::NoIdentityInSecondFactor);
        }
        let raw: Vec<usize> =
            (0..self.left.order()).map(|s| rho.class_of(self.encode(ElementId(s), m))).collect();
        Ok(RightCongruence::new(&self.left, &raw)?)
    }

    /// Slice by a fixed left-factor element `m`: the partition of the right
    /// factor. Requires the left factor to be a monoid.
    pub fn slice_fixing_left(
        &self,
        rho: &RightCongruence,
        m: ElementId,
    ) -> Result<RightCongruence, ConstructError> {
        if self.left.identity().is_none() {
            return Err(ConstructError::NoIdentityInFirstFactor);
        }
        let raw: Vec<usize> =
            (0..self.right.order()).map(|t| rho.class_of(self.encode(m, ElementId(t)))).collect();
        Ok(RightCongruence::new(&self.right, &raw)?)
    }
}

/// Componentwise product on `S × T`, elements ordered left-major.
pub fn direct_product(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
) -> Result<DirectProduct, ConstructError> {
    let (ns, nt) = (s.order(), t.order());
    check_size(ns * nt)?;
    let order = ns * nt;
    let encode = |x: usize, y: usize| x * nt + y;
    let mut mul = vec![vec![0usize; order]; order];
    let mut labels = Vec::with_capacity(order);
    let mut proj_left = Vec::with_capacity(order);
    let mut proj_right = Vec::with_capacity(order);
    for x in 0..ns {
        for y in 0..nt {
            labels.push(format!("({},{})", s.label(ElementId(x)), t.label(ElementId(y))));
            proj_left.push(ElementId(x));
            proj_right.push(ElementId(y));
        }
    }
    for x1 in 0..ns {
        for y1 in 0..nt {
            for x2 in 0..ns {
                for y2 in 0..nt {
                    mul[encode(x1, y1)][encode(x2, y2)] = encode(
                        s.mul(ElementId(x1), ElementId(x2)).0,
                        t.mul(ElementId(y1), ElementId(y2)).0,
                    );
                }
            }
        }
    }
    let semigroup = FiniteSemigroup::validate_labeled(order, mul, Some(labels), None, None)?;
    let dp = DirectProduct {
        semigroup,
        left: s.clone(),
        right: t.clone(),
        proj_left,
        proj_right,
    };
    debug_assert!(dp
        .semigroup
        .check_homomorphism(&dp.left, &dp.proj_left)
        .map(|c| c.is_homomorphism && c.surjective)
        .unwrap_or(false));
    debug_assert!(dp
        .semigroup
        .check_homomorphism(&dp.right, &dp.proj_right)
        .map(|c| c.is_homomorphism && c.surjective)
        .unwrap_or(false));
    Ok(dp)
}

/// A left action of `actor` on `acted`: `table[t][s] = t · s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupAction {
    pub table: Vec<Vec<usize>>,
}

impl SemigroupAction {
    pub fn trivial(actor: &FiniteSemigroup, acted: &FiniteSemigroup) -> Self {
        SemigroupAction { table: vec![(0..acted.order()).collect(); actor.order()] }
    }

    pub fn apply(&self, t: ElementId, s: ElementId) -> ElementId {
        ElementId(self.table[t.0][s.0])
    }

    /// Checks the action axioms; when the actor is a monoid its identity
    /// must act as the identity map.
    pub fn validate(
        &self,
        actor: &FiniteSemigroup,
        acted: &FiniteSemigroup,
    ) -> Result<(), ConstructError> {
        if self.table.len() != actor.order()
            || self.table.iter().any(|row| row.len() != acted.order())
        {
            return Err(ConstructError::ActionAxiomViolation("table shape mismatch".into()));
        }
        for row in &self.table {
            for &v in row {
                if v >= acted.order() {
                    return Err(ConstructError::ActionAxiomViolation(format!(
                        "value {v} out of range"
                    )));
                }
            }
        }
        for t1 in actor.elements() {
            for t2 in actor.elements() {
                for s in acted.elements() {
                    if self.apply(t1, self.apply(t2, s)) != self.apply(actor.mul(t1, t2), s) {
                        return Err(ConstructError::ActionAxiomViolation(format!(
                            "t1·(t2·s) != (t1t2)·s at (t1,t2,s)=({},{},{})",
                            t1.0, t2.0, s.0
                        )));
                    }
                }
            }
        }
        for t in actor.elements() {
            for s1 in acted.elements() {
                for s2 in acted.elements() {
                    let lhs = self.apply(t, acted.mul(s1, s2));
                    let rhs = acted.mul(self.apply(t, s1), self.apply(t, s2));
                    if lhs != rhs {
                        return Err(ConstructError::ActionAxiomViolation(format!(
                            "t·(s1s2) != (t·s1)(t·s2) at (t,s1,s2)=({},{},{})",
                            t.0, s1.0, s2.0
                        )));
                    }
                }
            }
        }
        if let Some(e) = actor.identity() {
            for s in acted.elements() {
                if self.apply(e, s) != s {
                    return Err(ConstructError::ActionAxiomViolation(format!(
                        "identity does not act trivially on {}",
                        s.0
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    pub semigroup: FiniteSemigroup,
    pub left: FiniteSemigroup,
    pub right: FiniteSemigroup,
    pub action: SemigroupAction,
}

impl SemidirectProduct {
    pub fn encode(&self, s: ElementId, t: ElementId) -> ElementId {
        ElementId(s.0 * self.right.order() + t.0)
    }

    pub fn decode(&self, p: ElementId) -> (ElementId, ElementId) {
        (ElementId(p.0 / self.right.order()), ElementId(p.0 % self.right.order()))
    }
}

/// Semidirect product `(s1, t1)(s2, t2) = (s1 (t1·s2), t1 t2)`.
pub fn semidirect_product(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    action: &SemigroupAction,
) -> Result<SemidirectProduct, ConstructError> {
    action.validate(t, s)?;
    let (ns, nt) = (s.order(), t.order());
    check_size(ns * nt)?;
    let order = ns * nt;
    let encode = |x: usize, y: usize| x * nt + y;
    let mut mul = vec![vec![0usize; order]; order];
    let mut labels = Vec::with_capacity(order);
    for x in 0..ns {
        for y in 0..nt {
            labels.push(format!("({},{})", s.label(ElementId(x)), t.label(ElementId(y))));
        }
    }
    for s1 in 0..ns {
        for t1 in 0..nt {
            for s2 in 0..ns {
                for t2 in 0..nt {
                    let moved = action.apply(ElementId(t1), ElementId(s2));
                    mul[encode(s1, t1)][encode(s2, t2)] = encode(
                        s.mul(ElementId(s1), moved).0,
                        t.mul(ElementId(t1), ElementId(t2)).0,
                    );
                }
            }
        }
    }
    let semigroup = FiniteSemigroup::validate_labeled(order, mul, Some(labels), None, None)?;
    Ok(SemidirectProduct { semigroup, left: s.clone(), right: t.clone(), action: action.clone() })
}

/// The function monoid `M^N` with componentwise product, elements indexed
/// lexicographically by their value tuples (`N`-position major).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctionSpace {
    pub base_order: usize,
    pub exponent_order: usize,
}

impl FunctionSpace {
    pub fn count(&self) -> usize {
        self.base_order.pow(self.exponent_order as u32)
    }

    /// Value of function `f` at point `x`.
    pub fn eval(&self, f: usize, x: usize) -> usize {
        let place = self.base_order.pow((self.exponent_order - 1 - x) as u32);
        (f / place) % self.base_order
    }

    pub fn index_of(&self, values: &[usize]) -> usize {
        values.iter().fold(0, |acc, &v| acc * self.base_order + v)
    }

    pub fn constant(&self, m: usize) -> usize {
        self.index_of(&vec![m; self.exponent_order])
    }

    /// Points where `f` differs from the base identity.
    pub fn support(&self, f: usize, base_identity: usize) -> Vec<usize> {
        (0..self.exponent_order).filter(|&x| self.eval(f, x) != base_identity).collect()
    }
}

#[derive(Debug, Clone)]
pub struct WreathProduct {
    pub product: SemidirectProduct,
    pub space: FunctionSpace,
    pub base: FiniteSemigroup,
    pub exponent: FiniteSemigroup,
    pub identity: ElementId,
}

impl WreathProduct {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.product.semigroup
    }

    pub fn encode(&self, f: usize, n: ElementId) -> ElementId {
        self.product.encode(ElementId(f), n)
    }
}

/// Wreath product `M ≀ N` of finite monoids: the semidirect product of
/// `M^N` (componentwise) by `N` acting via `(ⁿf)(x) = f(xn)`.
pub fn wreath_product(
    m: &FiniteSemigroup,
    n: &FiniteSemigroup,
) -> Result<WreathProduct, ConstructError> {
    let m_id = m.identity().ok_or(ConstructError::NotAMonoid { which: "left" })?;
    let n_id = n.identity().ok_or(ConstructError::NotAMonoid { which: "right" })?;
    let space = FunctionSpace { base_order: m.order(), exponent_order: n.order() };
    let fs_count = space.count();
    check_size(fs_count.saturating_mul(n.order()))?;
    let mut fs_mul = vec![vec![0usize; fs_count]; fs_count];
    for f in 0..fs_count {
        for g in 0..fs_count {
            let values: Vec<usize> = (0..n.order())
                .map(|x| m.mul(ElementId(space.eval(f, x)), ElementId(space.eval(g, x))).0)
                .collect();
            fs_mul[f][g] = space.index_of(&values);
        }
    }
    let fs_labels: Vec<String> = (0..fs_count)
        .map(|f| {
            let values: Vec<&str> =
                (0..n.order()).map(|x| m.label(ElementId(space.eval(f, x)))).collect();
            format!("[{}]", values.join(","))
        })
        .collect();
    let function_monoid =
        FiniteSemigroup::validate_labeled(fs_count, fs_mul, Some(fs_labels), None, None)?;
    debug_assert_eq!(function_monoid.identity(), Some(ElementId(space.constant(m_id.0))));
    // N acts on M^N by (ⁿf)(x) = f(xn).
    let mut act_table = vec![vec![0usize; fs_count]; n.order()];
    for nn in 0..n.order() {
        for f in 0..fs_count {
            let values: Vec<usize> = (0..n.order())
                .map(|x| space.eval(f, n.mul(ElementId(x), ElementId(nn)).0))
                .collect();
            act_table[nn][f] = space.index_of(&values);
        }
    }
    let action = SemigroupAction { table: act_table };
    let product = semidirect_product(&function_monoid, n, &action)?;
    let identity = product.encode(ElementId(space.constant(m_id.0)), n_id);
    debug_assert_eq!(product.semigroup.identity(), Some(identity));
    Ok(WreathProduct { product, space, base: m.clone(), exponent: n.clone(), identity })
}

#[derive(Debug, Clone)]
pub struct ZeroDirectUnion {
    pub semigroup: FiniteSemigroup,
    pub left_order: usize,
    pub right_order: usize,
    pub zero: ElementId,
}

impl ZeroDirectUnion {
    pub fn left_element(&self, s: ElementId) -> ElementId {
        s
    }

    pub fn right_element(&self, t: ElementId) -> ElementId {
        ElementId(self.left_order + t.0)
    }
}

/// Disjoint union of `S` and `T` plus a fresh zero; all cross products are
/// zero.
pub fn zero_direct_union(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
) -> Result<ZeroDirectUnion, ConstructError> {
    let (ns, nt) = (s.order(), t.order());
    let order = ns + nt + 1;
    check_size(order)?;
    let zero = order - 1;
    let mut mul = vec![vec![zero; order]; order];
    for x in 0..ns {
        for y in 0..ns {
            mul[x][y] = s.mul(ElementId(x), ElementId(y)).0;
        }
    }
    for x in 0..nt {
        for y in 0..nt {
            mul[ns + x][ns + y] = ns + t.mul(ElementId(x), ElementId(y)).0;
        }
    }
    let mut labels: Vec<String> = s.labels().iter().map(|l| format!("s:{l}")).collect();
    labels.extend(t.labels().iter().map(|l| format!("t:{l}")));
    labels.push("0".into());
    let semigroup = FiniteSemigroup::validate_labeled(order, mul, Some(labels), None, None)?;
    Ok(ZeroDirectUnion {
        semigroup,
        left_order: ns,
        right_order: nt,
        zero: ElementId(zero),
    })
}

/// A semilattice `Y`, one semigroup per point, and linking homomorphisms
/// `φ_{α,β}` for each `α ≥ β`.
#[derive(Debug, Clone)]
pub struct SemilatticeDiagram {
    pub semilattice: FiniteSemigroup,
    pub parts: Vec<FiniteSemigroup>,
    /// `homs[α][β]`, present exactly when `α ≥ β` (i.e. `αβ = β`).
    pub homs: Vec<Vec<Option<Vec<usize>>>>,
}

impl SemilatticeDiagram {
    pub fn validate(&self) -> Result<(), ConstructError> {
        let y = &self.semilattice;
        let k = y.order();
        for a in y.elements() {
            if y.mul(a, a) != a {
                return Err(ConstructError::DiagramInvalid(format!(
                    "index semigroup is not idempotent at {}",
                    a.0
                )));
            }
            for b in y.elements() {
                if y.mul(a, b) != y.mul(b, a) {
                    return Err(ConstructError::DiagramInvalid(format!(
                        "index semigroup is not commutative at ({},{})",
                        a.0, b.0
                    )));
                }
            }
        }
        if self.parts.len() != k || self.homs.len() != k || self.homs.iter().any(|r| r.len() != k)
        {
            return Err(ConstructError::DiagramInvalid("shape mismatch".into()));
        }
        let geq = |a: usize, b: usize| y.mul(ElementId(a), ElementId(b)).0 == b;
        for a in 0..k {
            for b in 0..k {
                match (&self.homs[a][b], geq(a, b)) {
                    (Some(_), false) => {
                        return Err(ConstructError::DiagramInvalid(format!(
                            "hom present for non-comparable pair ({a},{b})"
                        )))
                    }
                    (None, true) => {
                        return Err(ConstructError::DiagramInvalid(format!(
                            "hom missing for pair ({a},{b})"
                        )))
                    }
                    _ => {}
                }
            }
        }
        for a in 0..k {
            let hom = self.homs[a][a].as_ref().expect("reflexive hom present");
            if hom.iter().enumerate().any(|(i, &v)| i != v) {
                return Err(ConstructError::DiagramInvalid(format!(
                    "hom ({a},{a}) is not the identity map"
                )));
            }
        }
        for a in 0..k {
            for b in 0..k {
                if let Some(map) = &self.homs[a][b] {
                    if map.len() != self.parts[a].order() {
                        return Err(ConstructError::DiagramInvalid(format!(
                            "hom ({a},{b}) has wrong length"
                        )));
                    }
                    let map_ids: Vec<ElementId> = map.iter().map(|&v| ElementId(v)).collect();
                    let check = self.parts[a]
                        .check_homomorphism(&self.parts[b], &map_ids)
                        .map_err(ConstructError::Semigroup)?;
                    if !check.is_homomorphism {
                        return Err(ConstructError::DiagramInvalid(format!(
                            "map ({a},{b}) is not a homomorphism, witness {:?}",
                            check.witness
                        )));
                    }
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if geq(a, b) && geq(b, c) {
                        let ab = self.homs[a][b].as_ref().unwrap();
                        let bc = self.homs[b][c].as_ref().unwrap();
                        let ac = self.homs[a][c].as_ref().unwrap();
                        for x in 0..self.parts[a].order() {
                            if bc[ab[x]] != ac[x] {
                                return Err(ConstructError::DiagramInvalid(format!(
                                    "composition fails: ({a},{b});({b},{c}) != ({a},{c}) at {x}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Adjoins an identity to every part and extends each hom by sending new
    /// identity to new identity.
    pub fn with_identities_adjoined(&self) -> SemilatticeDiagram {
        let parts: Vec<FiniteSemigroup> =
            self.parts.iter().map(|p| p.adjoin(Adjoin::Identity)).collect();
        let homs = self
            .homs
            .iter()
            .enumerate()
            .map(|(a, row)| {
                row.iter()
                    .enumerate()
                    .map(|(b, h)| {
                        h.as_ref().map(|map| {
                            let mut extended = map.clone();
                            extended.push(self.parts[b].order());
                            let _ = a;
                            extended
                        })
                    })
                    .collect()
            })
            .collect();
        SemilatticeDiagram { semilattice: self.semilattice.clone(), parts, homs }
    }
}

/// A strong semilattice of semigroups with its decomposition maps.
#[derive(Debug, Clone)]
pub struct StrongSemilattice {
    pub semigroup: FiniteSemigroup,
    pub diagram: SemilatticeDiagram,
    /// Index of the part each global element belongs to.
    pub part_of: Vec<usize>,
    /// Index within its part.
    pub local_index: Vec<usize>,
    /// Global index of the first element of each part.
    pub offsets: Vec<usize>,
}

impl StrongSemilattice {
    pub fn global(&self, part: usize, local: usize) -> ElementId {
        ElementId(self.offsets[part] + local)
    }

    pub fn part_elements(&self, part: usize) -> Vec<ElementId> {
        let start = self.offsets[part];
        (start..start + self.diagram.parts[part].order()).map(ElementId).collect()
    }
}

/// Builds the strong semilattice `ab = (a φ_{α,αβ})(b φ_{β,αβ})`.
pub fn strong_semilattice(
    diagram: &SemilatticeDiagram,
    adjoin_identities: bool,
) -> Result<StrongSemilattice, ConstructError> {
    diagram.validate()?;
    let diagram =
        if adjoin_identities { diagram.with_identities_adjoined() } else { diagram.clone() };
    if adjoin_identities {
        diagram.validate()?;
    }
    let k = diagram.semilattice.order();
    let mut offsets = Vec::with_capacity(k);
    let mut total = 0;
    for part in &diagram.parts {
        offsets.push(total);
        total += part.order();
    }
    check_size(total)?;
    let mut part_of = Vec::with_capacity(total);
    let mut local_index = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    for (alpha, part) in diagram.parts.iter().enumerate() {
        for x in 0..part.order() {
            part_of.push(alpha);
            local_index.push(x);
            labels.push(format!("{}:{}", alpha, part.label(ElementId(x))));
        }
    }
    let mut mul = vec![vec![0usize; total]; total];
    for a in 0..total {
        for b in 0..total {
            let (alpha, beta) = (part_of[a], part_of[b]);
            let gamma = diagram.semilattice.mul(ElementId(alpha), ElementId(beta)).0;
            let fa = diagram.homs[alpha][gamma].as_ref().expect("validated diagram")
                [local_index[a]];
            let fb =
                diagram.homs[beta][gamma].as_ref().expect("validated diagram")[local_index[b]];
            mul[a][b] = offsets[gamma] + diagram.parts[gamma].mul(ElementId(fa), ElementId(fb)).0;
        }
    }
    let semigroup = FiniteSemigroup::validate_labeled(total, mul, Some(labels), None, None)?;
    Ok(StrongSemilattice { semigroup, diagram, part_of, local_index, offsets })
}

/// A right act of `S` on an abstract carrier: `table[a][s] = a · s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightActData {
    pub carrier: usize,
    pub table: Vec<Vec<usize>>,
}

impl RightActData {
    pub fn apply(&self, a: usize, s: ElementId) -> usize {
        self.table[a][s.0]
    }

    pub fn validate(&self, s: &FiniteSemigroup) -> Result<(), ConstructError> {
        if self.carrier == 0 {
            return Err(ConstructError::ActAxiomViolation("carrier is empty".into()));
        }
        if self.table.len() != self.carrier
            || self.table.iter().any(|row| row.len() != s.order())
        {
            return Err(ConstructError::ActAxiomViolation("table shape mismatch".into()));
        }
        for row in &self.table {
            for &v in row {
                if v >= self.carrier {
                    return Err(ConstructError::ActAxiomViolation(format!(
                        "value {v} out of range"
                    )));
                }
            }
        }
        for a in 0..self.carrier {
            for x in s.elements() {
                for y in s.elements() {
                    if self.apply(self.apply(a, x), y) != self.apply(a, s.mul(x, y)) {
                        return Err(ConstructError::ActAxiomViolation(format!(
                            "a(st) != (as)t at (a,s,t)=({a},{},{})",
                            x.0, y.0
                        )));
                    }
                }
            }
        }
        if let Some(e) = s.identity() {
            for a in 0..self.carrier {
                if self.apply(a, e) != a {
                    return Err(ConstructError::ActAxiomViolation(format!(
                        "identity does not fix carrier point {a}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `S` with an act glued on as an ideal: carrier points absorb on the right.
#[derive(Debug, Clone)]
pub struct ActExtension {
    pub semigroup: FiniteSemigroup,
    pub base_order: usize,
    pub carrier: usize,
    pub act: RightActData,
}

impl ActExtension {
    pub fn base_element(&self, s: ElementId) -> ElementId {
        s
    }

    pub fn act_element(&self, a: usize) -> ElementId {
        ElementId(self.base_order + a)
    }

    pub fn act_elements(&self) -> Vec<ElementId> {
        (self.base_order..self.base_order + self.carrier).map(ElementId).collect()
    }

    pub fn base_elements(&self) -> Vec<ElementId> {
        (0..self.base_order).map(ElementId).collect()
    }
}

/// Builds `S ∪ A` with `x∘y` = product in `S`, act value, or `y` when
/// `y` lies in the carrier.
pub fn act_extension(
    s: &FiniteSemigroup,
    act: &RightActData,
) -> Result<ActExtension, ConstructError> {
    act.validate(s)?;
    let n = s.order();
    let order = n + act.carrier;
    check_size(order)?;
    let mut mul = vec![vec![0usize; order]; order];
    for x in 0..order {
        for y in 0..order {
            mul[x][y] = if y >= n {
                y
            } else if x >= n {
                n + act.apply(x - n, ElementId(y))
            } else {
                s.mul(ElementId(x), ElementId(y)).0
            };
        }
    }
    let mut labels: Vec<String> = s.labels().to_vec();
    labels.extend((0..act.carrier).map(|a| format!("a{a}")));
    let semigroup = FiniteSemigroup::validate_labeled(order, mul, Some(labels), None, None)?;
    Ok(ActExtension { semigroup, base_order: n, carrier: act.carrier, act: act.clone() })
}

/// Brandt semigroup `B(G, I)` with its coordinate encoding.
#[derive(Debug, Clone)]
pub struct Brandt {
    pub semigroup: FiniteSemigroup,
    pub group: FiniteSemigroup,
    pub index_size: usize,
    pub zero: ElementId,
}

impl Brandt {
    pub fn encode(&self, i: usize, g: ElementId, j: usize) -> ElementId {
        ElementId((i * self.group.order() + g.0) * self.index_size + j)
    }

    /// Coordinates of a non-zero element.
    pub fn decode(&self, e: ElementId) -> Option<(usize, ElementId, usize)> {
        if e == self.zero {
            return None;
        }
        let j = e.0 % self.index_size;
        let rest = e.0 / self.index_size;
        Some((rest / self.group.order(), ElementId(rest % self.group.order()), j))
    }
}

/// `B(G, I)`: triples `(i, g, j)` plus zero, with `(i,g,j)(k,h,l)` equal to
/// `(i, gh, l)` when `j = k` and zero otherwise.
pub fn brandt(group: &FiniteSemigroup, index_size: usize) -> Result<Brandt, ConstructError> {
    if group_inverses(group).is_none() {
        return Err(ConstructError::NotAGroup);
    }
    if index_size == 0 {
        return Err(ConstructError::EmptyIndexSet);
    }
    let ng = group.order();
    let order = index_size * index_size * ng + 1;
    check_size(order)?;
    let zero = order - 1;
    let encode = |i: usize, g: usize, j: usize| (i * ng + g) * index_size + j;
    let mut mul = vec![vec![zero; order]; order];
    for i in 0..index_size {
        for g in 0..ng {
            for j in 0..index_size {
                for k in 0..index_size {
                    for h in 0..ng {
                        for l in 0..index_size {
                            if j == k {
                                mul[encode(i, g, j)][encode(k, h, l)] =
                                    encode(i, group.mul(ElementId(g), ElementId(h)).0, l);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for i in 0..index_size {
        for g in 0..ng {
            for j in 0..index_size {
                labels.push(format!("({},{},{})", i + 1, group.label(ElementId(g)), j + 1));
            }
        }
    }
    labels.push("0".into());
    let semigroup = FiniteSemigroup::validate_labeled(order, mul, Some(labels), None, None)?;
    Ok(Brandt { semigroup, group: group.clone(), index_size, zero: ElementId(zero) })
}

/// Rees quotient `S/I` with its quotient map.
#[derive(Debug, Clone)]
pub struct ReesQuotient {
    pub semigroup: FiniteSemigroup,
    /// Map from elements of `S` to elements of `S/I`.
    pub map: Vec<ElementId>,
    pub zero: ElementId,
}

/// Collapses a two-sided ideal to a zero; non-ideal elements keep their
/// relative order and the fresh zero sits last.
pub fn rees_quotient(
    s: &FiniteSemigroup,
    ideal: &[ElementId],
) -> Result<ReesQuotient, ConstructError> {
    if ideal.is_empty() {
        return Err(ConstructError::EmptyIdeal);
    }
    let mut member = vec![false; s.order()];
    for &m in ideal {
        if !s.contains(m) {
            return Err(ConstructError::Semigroup(SemigroupError::ElementOutOfRange(m.0)));
        }
        member[m.0] = true;
    }
    for &m in ideal {
        for t in s.elements() {
            if !member[s.mul(m, t).0] {
                return Err(ConstructError::NotAnIdeal { member: m.0, s: t.0 });
            }
            if !member[s.mul(t, m).0] {
                return Err(ConstructError::NotAnIdeal { member: m.0, s: t.0 });
            }
        }
    }
    let ideal_size = member.iter().filter(|&&b| b).count();
    let order = s.order() - ideal_size + 1;
    let zero = order - 1;
    let mut map = Vec::with_capacity(s.order());
    let mut labels = Vec::with_capacity(order);
    let mut next = 0;
    for e in 0..s.order() {
        if member[e] {
            map.push(ElementId(zero));
        } else {
            map.push(ElementId(next));
            labels.push(s.label(ElementId(e)).to_string());
            next += 1;
        }
    }
    labels.push("0".into());
    let mut mul = vec![vec![zero; order]; order];
    let reps: Vec<usize> = (0..s.order()).filter(|&e| !member[e]).collect();
    for (x_new, &x) in reps.iter().enumerate() {
        for (y_new, &y) in reps.iter().enumerate() {
            mul[x_new][y_new] = map[s.mul(ElementId(x), ElementId(y)).0].0;
        }
    }
    let semigroup = FiniteSemigroup::validate_labeled(order, mul, Some(labels), None, None)?;
    let quotient = ReesQuotient { semigroup, map, zero: ElementId(zero) };
    debug_assert!(s
        .check_homomorphism(&quotient.semigroup, &quotient.map)
        .map(|c| c.is_homomorphism && c.surjective)
        .unwrap_or(false));
    Ok(quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::rc_closure;
    use crate::gallery;

    #[test]
    fn z2_times_z3_is_a_group_of_order_six() {
        let dp = direct_product(&gallery::cyclic(2), &gallery::cyclic(3)).unwrap();
        assert_eq!(dp.semigroup.order(), 6);
        assert!(group_inverses(&dp.semigroup).is_some());
    }

    #[test]
    fn product_with_trivial_factor_matches_original() {
        let s = gallery::right_zero(3);
        let dp = direct_product(&s, &gallery::cyclic(1)).unwrap();
        assert!(dp.semigroup.same_table(&s));
    }

    #[test]
    fn slice_of_universal_and_identity_congruences() {
        let dp = direct_product(&gallery::cyclic(2), &gallery::cyclic(2)).unwrap();
        let top = RightCongruence::universal(&dp.semigroup);
        let bottom = RightCongruence::identity(&dp.semigroup);
        assert!(dp.slice_fixing_right(&top, ElementId(0)).unwrap().is_universal());
        assert!(dp.slice_fixing_right(&bottom, ElementId(0)).unwrap().is_identity());
    }

    #[test]
    fn slice_of_generated_congruence_on_z2_square() {
        let dp = direct_product(&gallery::cyclic(2), &gallery::cyclic(2)).unwrap();
        let pair = (dp.encode(ElementId(0), ElementId(0)), dp.encode(ElementId(1), ElementId(0)));
        let rho = rc_closure(&dp.semigroup, &[pair]).unwrap();
        let slice0 = dp.slice_fixing_right(&rho, ElementId(0)).unwrap();
        assert!(slice0.is_universal());
    }

    #[test]
    fn slice_requires_monoid_factor() {
        let dp = direct_product(&gallery::cyclic(2), &gallery::right_zero(2)).unwrap();
        let rho = RightCongruence::universal(&dp.semigroup);
        assert!(matches!(
            dp.slice_fixing_right(&rho, ElementId(0)),
            Err(ConstructError::NoIdentityInSecondFactor)
        ));
    }

    #[test]
    fn trivial_action_gives_the_direct_product() {
        let s = gallery::cyclic(3);
        let t = gallery::cyclic(2);
        let sdp = semidirect_product(&s, &t, &SemigroupAction::trivial(&t, &s)).unwrap();
        let dp = direct_product(&s, &t).unwrap();
        assert!(sdp.semigroup.same_table(&dp.semigroup));
    }

    #[test]
    fn inversion_action_gives_nonabelian_order_six() {
        let s = gallery::cyclic(3);
        let t = gallery::cyclic(2);
        // t acts by inversion: 0 fixes, 1 negates.
        let action = SemigroupAction { table: vec![vec![0, 1, 2], vec![0, 2, 1]] };
        let sdp = semidirect_product(&s, &t, &action).unwrap();
        assert_eq!(sdp.semigroup.order(), 6);
        let a = sdp.encode(ElementId(1), ElementId(0));
        let b = sdp.encode(ElementId(0), ElementId(1));
        assert_ne!(sdp.semigroup.mul(a, b), sdp.semigroup.mul(b, a));
        assert!(group_inverses(&sdp.semigroup).is_some());
    }

    #[test]
    fn broken_action_is_rejected_with_witness() {
        let s = gallery::cyclic(3);
        let t = gallery::cyclic(2);
        // 1 maps everything to 0: not compatible with addition in Z3.
        let action = SemigroupAction { table: vec![vec![0, 1, 2], vec![0, 0, 0]] };
        assert!(matches!(
            semidirect_product(&s, &t, &action),
            Err(ConstructError::ActionAxiomViolation(_))
        ));
    }

    #[test]
    fn wreath_of_z2_by_z2_has_order_eight_with_pointwise_identity() {
        let z2 = gallery::cyclic(2);
        let wr = wreath_product(&z2, &z2).unwrap();
        assert_eq!(wr.semigroup().order(), 8);
        assert_eq!(wr.semigroup().identity(), Some(wr.identity));
        // The action of n=1 swaps the two coordinates: (ⁿf)(x) = f(x+1).
        let f = wr.space.index_of(&[1, 0]);
        let moved = wr.product.action.apply(ElementId(1), ElementId(f));
        assert_eq!(moved.0, wr.space.index_of(&[0, 1]));
    }

    #[test]
    fn wreath_by_trivial_monoid_is_the_base() {
        let m = gallery::chain_semilattice(2);
        let wr = wreath_product(&m, &gallery::cyclic(1)).unwrap();
        assert!(wr.semigroup().same_table(&m));
    }

    #[test]
    fn wreath_requires_monoids() {
        let err = wreath_product(&gallery::right_zero(2), &gallery::cyclic(2)).unwrap_err();
        assert!(matches!(err, ConstructError::NotAMonoid { which: "left" }));
    }

    #[test]
    fn zero_direct_union_counts_and_cross_products() {
        let s = gallery::cyclic(2);
        let t = gallery::right_zero(2);
        let u = zero_direct_union(&s, &t).unwrap();
        assert_eq!(u.semigroup.order(), 5);
        assert_eq!(u.semigroup.zero(), Some(u.zero));
        let a = u.left_element(ElementId(1));
        let b = u.right_element(ElementId(0));
        assert_eq!(u.semigroup.mul(a, b), u.zero);
        assert_eq!(u.semigroup.mul(b, a), u.zero);
        // Internal products survive.
        assert_eq!(u.semigroup.mul(a, a), u.left_element(ElementId(0)));
    }

    fn two_chain_diagram() -> SemilatticeDiagram {
        let y = gallery::chain_semilattice(2);
        let z2 = gallery::cyclic(2);
        // Part 1 sits above part 0; the linking hom is the identity map.
        SemilatticeDiagram {
            semilattice: y,
            parts: vec![z2.clone(), z2],
            homs: vec![
                vec![Some(vec![0, 1]), None],
                vec![Some(vec![0, 1]), Some(vec![0, 1])],
            ],
        }
    }

    #[test]
    fn strong_semilattice_over_a_two_chain_of_groups() {
        let ssl = strong_semilattice(&two_chain_diagram(), false).unwrap();
        assert_eq!(ssl.semigroup.order(), 4);
        // Products of elements from the top part land in the bottom part.
        let top = ssl.global(1, 1);
        let bottom = ssl.global(0, 1);
        assert_eq!(ssl.semigroup.mul(top, bottom), ssl.global(0, 0));
    }

    #[test]
    fn diagram_with_broken_composition_is_rejected() {
        let y = gallery::chain_semilattice(3);
        let z2 = gallery::cyclic(2);
        let id = Some(vec![0, 1]);
        let constant = Some(vec![0, 0]);
        let diagram = SemilatticeDiagram {
            semilattice: y,
            parts: vec![z2.clone(), z2.clone(), z2],
            homs: vec![
                vec![id.clone(), None, None],
                vec![constant.clone(), id.clone(), None],
                vec![id.clone(), id.clone(), id],
            ],
        };
        assert!(matches!(
            strong_semilattice(&diagram, false),
            Err(ConstructError::DiagramInvalid(_))
        ));
    }

    #[test]
    fn adjoining_identities_grows_each_part_by_one() {
        let ssl = strong_semilattice(&two_chain_diagram(), true).unwrap();
        assert_eq!(ssl.semigroup.order(), 6);
    }

    #[test]
    fn act_extension_of_z2_acting_on_itself() {
        let s = gallery::cyclic(2);
        let act = RightActData { carrier: 2, table: vec![vec![0, 1], vec![1, 0]] };
        let ext = act_extension(&s, &act).unwrap();
        assert_eq!(ext.semigroup.order(), 4);
        // Carrier points absorb on the right.
        for x in ext.semigroup.elements() {
            for a in ext.act_elements() {
                assert_eq!(ext.semigroup.mul(x, a), a);
            }
        }
        // The carrier is a right (indeed two-sided) ideal.
        let ideal = ext.semigroup.right_ideal(&ext.act_elements()).unwrap();
        assert_eq!(ideal.members, ext.act_elements());
    }

    #[test]
    fn brandt_of_z2_with_two_indices() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        assert_eq!(b.semigroup.order(), 9);
        let idempotents =
            b.semigroup.special_elements(crate::semigroup::SpecialElements::Idempotent);
        assert_eq!(idempotents.len(), 3);
        let g = ElementId(1);
        let e = ElementId(0);
        // (1,g,2)(2,h,1) = (1,gh,1); indices are 0-based internally.
        assert_eq!(
            b.semigroup.mul(b.encode(0, g, 1), b.encode(1, g, 0)),
            b.encode(0, ElementId(0), 0)
        );
        // (1,g,2)(1,h,1) = 0.
        assert_eq!(b.semigroup.mul(b.encode(0, g, 1), b.encode(0, e, 0)), b.zero);
    }

    #[test]
    fn brandt_requires_a_group() {
        assert!(matches!(
            brandt(&gallery::right_zero(2), 2),
            Err(ConstructError::NotAGroup)
        ));
    }

    #[test]
    fn rees_quotient_by_whole_semigroup_is_trivial() {
        let s = gallery::cyclic(3);
        let all: Vec<ElementId> = s.elements().collect();
        let q = rees_quotient(&s, &all).unwrap();
        assert_eq!(q.semigroup.order(), 1);
    }

    #[test]
    fn rees_quotient_counting_and_zero_relabelling() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let q = rees_quotient(&b.semigroup, &[b.zero]).unwrap();
        assert_eq!(q.semigroup.order(), b.semigroup.order());
        assert!(q.semigroup.same_table(&b.semigroup));
    }

    #[test]
    fn rees_quotient_rejects_non_ideals() {
        let s = gallery::cyclic(4);
        assert!(matches!(
            rees_quotient(&s, &[ElementId(1)]),
            Err(ConstructError::NotAnIdeal { .. })
        ));
    }
}
