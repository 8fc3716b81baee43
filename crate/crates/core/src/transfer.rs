//! Constructive generating-set recipes.
//!
//! Each recipe takes the hypotheses of one structural transfer result as
//! explicit finite objects, emits the candidate generating set the proof
//! prescribes (all choice functions resolved by lowest index), and
//! re-verifies the candidate against the target by closure. Verification
//! failure is an error, never a silent flag: on valid contexts every recipe
//! is guaranteed to succeed, so a failure is either a bug or a genuine
//! counterexample.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::congruence::{
    minimal_generating_set, rc_closure, restrict, CongruenceError, RightCongruence,
};
use crate::construct::{
    group_inverses, ActExtension, Brandt, ConstructError, DirectProduct, SemidirectProduct,
    StrongSemilattice,
};
use crate::green::GreenError;
use crate::semigroup::{
    minimal_right_ideal_generators, ElementId, FiniteSemigroup, SemigroupError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransferKind {
    RestrictionLeftIdeal,
    RestrictionStabiliser,
    RestrictionMonoidComponent,
    FiniteComplementDown,
    FiniteComplementUp,
    Quotient,
    IdealExtension,
    GroupToSubgroupGens,
    GroupToCongruenceGens,
    DpFiniteMonoid,
    SliceRepresentatives,
    DpGroup,
    DpBrandt,
    SdpSubgroup,
    SdpFactor,
    Semilattice,
    ActExtension,
    ActExtensionGenerators,
    InverseSemilattice,
}

impl TransferKind {
    pub const ALL: [TransferKind; 19] = [
        TransferKind::RestrictionLeftIdeal,
        TransferKind::RestrictionStabiliser,
        TransferKind::RestrictionMonoidComponent,
        TransferKind::FiniteComplementDown,
        TransferKind::FiniteComplementUp,
        TransferKind::Quotient,
        TransferKind::IdealExtension,
        TransferKind::GroupToSubgroupGens,
        TransferKind::GroupToCongruenceGens,
        TransferKind::DpFiniteMonoid,
        TransferKind::SliceRepresentatives,
        TransferKind::DpGroup,
        TransferKind::DpBrandt,
        TransferKind::SdpSubgroup,
        TransferKind::SdpFactor,
        TransferKind::Semilattice,
        TransferKind::ActExtension,
        TransferKind::ActExtensionGenerators,
        TransferKind::InverseSemilattice,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TransferKind::RestrictionLeftIdeal => "restriction/left-ideal",
            TransferKind::RestrictionStabiliser => "restriction/stabiliser",
            TransferKind::RestrictionMonoidComponent => "restriction/monoid-component",
            TransferKind::FiniteComplementDown => "finite-complement/down",
            TransferKind::FiniteComplementUp => "finite-complement/up",
            TransferKind::Quotient => "quotient",
            TransferKind::IdealExtension => "ideal-extension",
            TransferKind::GroupToSubgroupGens => "group/to-subgroup-gens",
            TransferKind::GroupToCongruenceGens => "group/to-congruence-gens",
            TransferKind::DpFiniteMonoid => "dp-finite-monoid",
            TransferKind::SliceRepresentatives => "slice-representatives",
            TransferKind::DpGroup => "dp-group",
            TransferKind::DpBrandt => "dp-brandt",
            TransferKind::SdpSubgroup => "sdp-subgroup",
            TransferKind::SdpFactor => "sdp-factor",
            TransferKind::Semilattice => "semilattice",
            TransferKind::ActExtension => "act-extension",
            TransferKind::ActExtensionGenerators => "act-extension-generators",
            TransferKind::InverseSemilattice => "inverse-semilattice",
        }
    }

    pub fn from_name(name: &str) -> Option<TransferKind> {
        TransferKind::ALL.iter().copied().find(|k| k.name() == name)
    }
}

#[derive(Debug, Error)]
pub enum TransferError {
    #[error("{kind}: hypothesis violated: {hypothesis}")]
    ContextMismatch { kind: &'static str, hypothesis: String },
    #[error("{kind}: verification failed: {detail}")]
    VerificationFailed { kind: &'static str, detail: String },
    #[error("semigroup error: {0}")]
    Semigroup(#[from] SemigroupError),
    #[error("congruence error: {0}")]
    Congruence(#[from] CongruenceError),
    #[error("construction error: {0}")]
    Construct(#[from] ConstructError),
    #[error("green-structure error: {0}")]
    Green(#[from] GreenError),
}

/// The candidate set a recipe emits: generating pairs for a congruence, or
/// elements generating a subgroup / an act.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Candidate {
    Pairs(Vec<(usize, usize)>),
    Elements(Vec<usize>),
}

impl Candidate {
    pub fn from_pairs(pairs: &[(ElementId, ElementId)]) -> Self {
        Candidate::Pairs(pairs.iter().map(|&(a, b)| (a.0, b.0)).collect())
    }

    pub fn from_elements(elems: &[ElementId]) -> Self {
        Candidate::Elements(elems.iter().map(|e| e.0).collect())
    }

    pub fn len(&self) -> usize {
        match self {
            Candidate::Pairs(p) => p.len(),
            Candidate::Elements(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One executed recipe: the emitted candidate plus every intermediate set
/// the proof produced, replayable from the context.
#[derive(Debug, Clone, Serialize)]
pub struct TransferRecipe {
    pub kind: &'static str,
    pub candidate: Candidate,
    pub verified: bool,
    pub intermediates: BTreeMap<String, Value>,
}

fn mismatch(kind: TransferKind, hypothesis: impl Into<String>) -> TransferError {
    TransferError::ContextMismatch { kind: kind.name(), hypothesis: hypothesis.into() }
}

fn jpairs(pairs: &[(ElementId, ElementId)]) -> Value {
    json!(pairs.iter().map(|&(a, b)| vec![a.0, b.0]).collect::<Vec<_>>())
}

fn jelems(elems: &[ElementId]) -> Value {
    json!(elems.iter().map(|e| e.0).collect::<Vec<_>>())
}

/// Closure check with a separating pair on failure.
fn verify_pairs_generate(
    kind: TransferKind,
    s: &FiniteSemigroup,
    candidate: &[(ElementId, ElementId)],
    target: &RightCongruence,
) -> Result<(), TransferError> {
    let closure = rc_closure(s, candidate)?;
    if &closure == target {
        return Ok(());
    }
    for a in s.elements() {
        for b in s.elements() {
            if closure.are_related(a, b) != target.are_related(a, b) {
                return Err(TransferError::VerificationFailed {
                    kind: kind.name(),
                    detail: format!(
                        "separating pair ({}, {}): candidate closure {}, target {}",
                        a.0,
                        b.0,
                        closure.are_related(a, b),
                        target.are_related(a, b)
                    ),
                });
            }
        }
    }
    unreachable!("distinct congruences have a separating pair")
}

/// Removes pairs in input order, keeping one only if its removal shrinks
/// the closure; the result still generates the closure of the full set.
fn greedy_reduce_pairs(
    s: &FiniteSemigroup,
    pairs: &[(ElementId, ElementId)],
) -> Result<(Vec<(ElementId, ElementId)>, RightCongruence), TransferError> {
    let target = rc_closure(s, pairs)?;
    let mut kept: Vec<(ElementId, ElementId)> = pairs.to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        if rc_closure(s, &trial)? == target {
            kept = trial;
        } else {
            i += 1;
        }
    }
    Ok((kept, target))
}

/// Maps pairs on `s` into a materialised subsemigroup.
fn localize_pairs(
    kind: TransferKind,
    elements: &[ElementId],
    pairs: &[(ElementId, ElementId)],
) -> Result<Vec<(ElementId, ElementId)>, TransferError> {
    let position = |e: ElementId| {
        elements
            .binary_search(&e)
            .map(ElementId)
            .map_err(|_| mismatch(kind, format!("pair entry {} lies outside the subset", e.0)))
    };
    pairs.iter().map(|&(a, b)| Ok((position(a)?, position(b)?))).collect()
}

/// Finite generating pairs of a congruence on a materialised subsemigroup,
/// mapped back to ambient coordinates.
fn generating_pairs_on_sub(
    sub: &FiniteSemigroup,
    elements: &[ElementId],
    rho_on_sub: &RightCongruence,
) -> Result<Vec<(ElementId, ElementId)>, TransferError> {
    let (gens, _) = minimal_generating_set(sub, rho_on_sub)?;
    Ok(gens.pairs.iter().map(|&(a, b)| (elements[a.0], elements[b.0])).collect())
}

fn check_owner(
    kind: TransferKind,
    s: &FiniteSemigroup,
    rho: &RightCongruence,
) -> Result<(), TransferError> {
    if rho.order() != s.order() || rho.owner_hash() != s.table_hash() {
        return Err(mismatch(kind, "congruence does not live on the given semigroup"));
    }
    Ok(())
}

/// Subsemigroup closure treating the empty set as generating the trivial
/// subgroup of a group.
fn subgroup_closure(
    g: &FiniteSemigroup,
    gens: &[ElementId],
) -> Result<Vec<ElementId>, TransferError> {
    if gens.is_empty() {
        let e = g.identity().expect("group has an identity");
        return Ok(vec![e]);
    }
    Ok(g.subsemigroup(gens)?)
}

/// Greedy irredundant generating set of a subgroup, scanning ascending.
fn subgroup_generators(g: &FiniteSemigroup, subgroup: &[ElementId]) -> Vec<ElementId> {
    let mut gens: Vec<ElementId> = Vec::new();
    let mut generated: Vec<ElementId> =
        vec![g.identity().expect("group has an identity")];
    for &x in subgroup {
        if !generated.contains(&x) {
            gens.push(x);
            generated = g.subsemigroup(&gens).expect("non-empty generators");
        }
    }
    gens
}

/// Lowest-index element of `candidates` related to `a` under `rho`.
fn lowest_related(
    rho: &RightCongruence,
    a: ElementId,
    candidates: impl IntoIterator<Item = ElementId>,
) -> Option<ElementId> {
    candidates.into_iter().find(|&c| rho.are_related(a, c))
}

// ---------------------------------------------------------------------------
// Restriction recipes: the candidate is a subset of the input pairs.
// ---------------------------------------------------------------------------

/// Congruence transfer onto a subsemigroup whose complement is a left
/// ideal: a reduced generating set for the ambient closure already
/// generates the restriction.
pub fn left_ideal_restriction(
    s: &FiniteSemigroup,
    t_subset: &[ElementId],
    pairs_on_t: &[(ElementId, ElementId)],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::RestrictionLeftIdeal;
    let (t_sg, t_elems) = s
        .sub_table(t_subset)
        .map_err(|e| mismatch(kind, format!("subset is not a subsemigroup: {e}")))?;
    let complement: Vec<ElementId> =
        s.elements().filter(|e| t_elems.binary_search(e).is_err()).collect();
    if complement.is_empty() {
        return Err(mismatch(kind, "complement is empty"));
    }
    if !s.is_left_ideal(&complement) {
        return Err(mismatch(kind, "complement is not a left ideal"));
    }
    let local = localize_pairs(kind, &t_elems, pairs_on_t)?;
    let target = rc_closure(&t_sg, &local)?;
    let (candidate, rho_bar) = greedy_reduce_pairs(s, pairs_on_t)?;
    let candidate_local = localize_pairs(kind, &t_elems, &candidate)?;
    verify_pairs_generate(kind, &t_sg, &candidate_local, &target)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("X".into(), jpairs(&candidate));
    intermediates.insert("ambient_closure_classes".into(), rho_bar.to_classes_json());
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

/// Congruence transfer onto the right stabiliser of a subset.
///
/// Pairs are given in stabiliser-monoid coordinates (0 is the formal
/// identity); the ambient closure runs over `S` with its identity adjoined.
pub fn stabilizer_restriction(
    s: &FiniteSemigroup,
    subset: &[ElementId],
    pairs_on_stab: &[(ElementId, ElementId)],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::RestrictionStabiliser;
    if subset.is_empty() {
        return Err(mismatch(kind, "stabilised subset is empty"));
    }
    let stab = crate::green::right_stabilizer(s, subset)?;
    let s_one = s.adjoin(crate::semigroup::Adjoin::Identity);
    // Stabiliser index -> element of S¹ (formal identity -> the adjoined one).
    let lift = |e: ElementId| -> ElementId {
        match stab.element_of(e.0) {
            None => ElementId(s.order()),
            Some(m) => m,
        }
    };
    for &(a, b) in pairs_on_stab {
        if a.0 >= stab.order() || b.0 >= stab.order() {
            return Err(mismatch(kind, "pair entry outside the stabiliser"));
        }
    }
    let target = rc_closure(&stab.monoid, pairs_on_stab)?;
    let ambient: Vec<(ElementId, ElementId)> =
        pairs_on_stab.iter().map(|&(a, b)| (lift(a), lift(b))).collect();
    let ambient_target = rc_closure(&s_one, &ambient)?;
    // Greedy reduction happens over the ambient closure, mirrored onto the
    // stabiliser coordinates.
    let mut kept: Vec<(ElementId, ElementId)> = pairs_on_stab.to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        let trial_ambient: Vec<(ElementId, ElementId)> =
            trial.iter().map(|&(a, b)| (lift(a), lift(b))).collect();
        if rc_closure(&s_one, &trial_ambient)? == ambient_target {
            kept = trial;
        } else {
            i += 1;
        }
    }
    verify_pairs_generate(kind, &stab.monoid, &kept, &target)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("Y".into(), jpairs(&kept));
    intermediates.insert("stabiliser_members".into(), jelems(&stab.members));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&kept),
        verified: true,
        intermediates,
    })
}

/// Congruence transfer onto a monoid component of a semilattice of
/// semigroups.
pub fn monoid_component_restriction(
    ssl: &StrongSemilattice,
    beta: usize,
    pairs_on_part: &[(ElementId, ElementId)],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::RestrictionMonoidComponent;
    if beta >= ssl.diagram.parts.len() {
        return Err(mismatch(kind, "component index out of range"));
    }
    let part = &ssl.diagram.parts[beta];
    let Some(identity) = part.identity() else {
        return Err(mismatch(kind, "component is not a monoid"));
    };
    let elements = ssl.part_elements(beta);
    let local = localize_pairs(kind, &elements, pairs_on_part)?;
    let target = rc_closure(part, &local)?;
    let (candidate, rho_bar) = greedy_reduce_pairs(&ssl.semigroup, pairs_on_part)?;
    let candidate_local = localize_pairs(kind, &elements, &candidate)?;
    verify_pairs_generate(kind, part, &candidate_local, &target)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("X".into(), jpairs(&candidate));
    intermediates.insert("component_identity".into(), json!(ssl.global(beta, identity.0).0));
    intermediates.insert("ambient_closure_classes".into(), rho_bar.to_classes_json());
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

// ---------------------------------------------------------------------------
// Finite complement, quotient, ideal extension.
// ---------------------------------------------------------------------------

/// Transfer down to a subsemigroup of finite complement: the reduced
/// ambient generating set plus all related pairs inside the finite set `U`
/// of products escaping through the complement.
pub fn finite_complement_down(
    s: &FiniteSemigroup,
    t_subset: &[ElementId],
    pairs_on_t: &[(ElementId, ElementId)],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::FiniteComplementDown;
    let (t_sg, t_elems) = s
        .sub_table(t_subset)
        .map_err(|e| mismatch(kind, format!("subset is not a subsemigroup: {e}")))?;
    let complement: Vec<ElementId> =
        s.elements().filter(|e| t_elems.binary_search(e).is_err()).collect();
    let local = localize_pairs(kind, &t_elems, pairs_on_t)?;
    let target = rc_closure(&t_sg, &local)?;
    let (x, _rho_bar) = greedy_reduce_pairs(s, pairs_on_t)?;
    let mut u: BTreeSet<ElementId> = BTreeSet::new();
    for &(p, q) in &x {
        for entry in [p, q] {
            for &c in &complement {
                u.insert(s.mul(entry, c));
            }
        }
    }
    let u: Vec<ElementId> = u.into_iter().collect();
    let mut candidate = x.clone();
    for (i, &a) in t_elems.iter().enumerate() {
        for &b in &t_elems[i + 1..] {
            if u.binary_search(&a).is_ok()
                && u.binary_search(&b).is_ok()
                && target.are_related(
                    ElementId(t_elems.binary_search(&a).unwrap()),
                    ElementId(t_elems.binary_search(&b).unwrap()),
                )
            {
                candidate.push((a, b));
            }
        }
    }
    if candidate.len() > x.len() + u.len() * u.len() {
        return Err(TransferError::VerificationFailed {
            kind: kind.name(),
            detail: "size bound |Y| <= |X| + |U|^2 violated".into(),
        });
    }
    let candidate_local = localize_pairs(kind, &t_elems, &candidate)?;
    verify_pairs_generate(kind, &t_sg, &candidate_local, &target)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("X".into(), jpairs(&x));
    intermediates.insert("U".into(), jelems(&u));
    intermediates.insert("Y".into(), jpairs(&candidate));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

/// Transfer up from a subsemigroup of finite complement: generators of the
/// restriction, one representative pair per complement element related into
/// the subsemigroup, and all related pairs within the complement.
pub fn finite_complement_up(
    s: &FiniteSemigroup,
    t_subset: &[ElementId],
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::FiniteComplementUp;
    check_owner(kind, s, rho)?;
    let (t_sg, t_elems) = s
        .sub_table(t_subset)
        .map_err(|e| mismatch(kind, format!("subset is not a subsemigroup: {e}")))?;
    let restriction = restrict(s, rho, &t_elems)?;
    let raw: Vec<usize> = restriction.class_of.clone();
    let rho_t = RightCongruence::new(&t_sg, &raw)?;
    let x = generating_pairs_on_sub(&t_sg, &t_elems, &rho_t)?;
    let complement: Vec<ElementId> =
        s.elements().filter(|e| t_elems.binary_search(e).is_err()).collect();
    let mut alpha: BTreeMap<usize, usize> = BTreeMap::new();
    let mut candidate = x.clone();
    for &v in &complement {
        if let Some(t) = lowest_related(rho, v, t_elems.iter().copied()) {
            alpha.insert(v.0, t.0);
            candidate.push((v, t));
        }
    }
    for (i, &a) in complement.iter().enumerate() {
        for &b in &complement[i + 1..] {
            if rho.are_related(a, b) {
                candidate.push((a, b));
            }
        }
    }
    verify_pairs_generate(kind, s, &candidate, rho)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("X".into(), jpairs(&x));
    intermediates.insert("V".into(), jelems(&complement));
    intermediates.insert("alpha".into(), json!(alpha));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

/// Pushes a congruence through a surjective homomorphism: generators of the
/// pullback, mapped forward.
pub fn quotient_transfer(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    theta: &[ElementId],
    pairs_on_t: &[(ElementId, ElementId)],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::Quotient;
    let check = s.check_homomorphism(t, theta)?;
    if !check.is_homomorphism {
        return Err(mismatch(kind, format!("map is not a homomorphism: {:?}", check.witness)));
    }
    if !check.surjective {
        return Err(mismatch(kind, "map is not surjective"));
    }
    let target = rc_closure(t, pairs_on_t)?;
    let raw: Vec<usize> = (0..s.order()).map(|x| target.class_of(theta[x])).collect();
    let rho_prime = RightCongruence::new(s, &raw)?;
    let (x, _) = minimal_generating_set(s, &rho_prime)?;
    let y: Vec<(ElementId, ElementId)> =
        x.pairs.iter().map(|&(a, b)| (theta[a.0], theta[b.0])).collect();
    verify_pairs_generate(kind, t, &y, &target)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("pullback_classes".into(), rho_prime.to_classes_json());
    intermediates.insert("X".into(), jpairs(&x.pairs));
    intermediates.insert("Y".into(), jpairs(&y));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&y),
        verified: true,
        intermediates,
    })
}

/// Assembles a generating set on an ideal extension from generators on the
/// ideal and on the Rees quotient.
pub fn ideal_extension(
    s: &FiniteSemigroup,
    ideal: &[ElementId],
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::IdealExtension;
    check_owner(kind, s, rho)?;
    let ideal: Vec<ElementId> = {
        let set: BTreeSet<_> = ideal.iter().copied().collect();
        set.into_iter().collect()
    };
    if ideal.is_empty() || !s.is_two_sided_ideal(&ideal) {
        return Err(mismatch(kind, "subset is not a non-empty two-sided ideal"));
    }
    let (i_sg, i_elems) = s.sub_table(&ideal)?;
    let restriction = restrict(s, rho, &i_elems)?;
    let rho_i = RightCongruence::new(&i_sg, &restriction.class_of)?;
    let x = generating_pairs_on_sub(&i_sg, &i_elems, &rho_i)?;
    let u: Vec<ElementId> =
        s.elements().filter(|e| i_elems.binary_search(e).is_err()).collect();
    let mut alpha: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in &u {
        if let Some(i) = lowest_related(rho, v, i_elems.iter().copied()) {
            alpha.insert(v.0, i.0);
        }
    }
    // The quotient-side set Y' is taken to be all of Y.
    let mut y1: Vec<(ElementId, ElementId)> = Vec::new();
    for (i, &a) in u.iter().enumerate() {
        for &b in &u[i + 1..] {
            if rho.are_related(a, b) {
                y1.push((a, b));
            }
        }
    }
    let y2: Vec<(ElementId, ElementId)> =
        alpha.iter().map(|(&v, &i)| (ElementId(v), ElementId(i))).collect();
    let mut candidate = x.clone();
    candidate.extend(&y1);
    candidate.extend(&y2);
    verify_pairs_generate(kind, s, &candidate, rho)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("X".into(), jpairs(&x));
    intermediates.insert("U".into(), jelems(&u));
    intermediates.insert("alpha".into(), json!(alpha));
    intermediates.insert("Y1".into(), jpairs(&y1));
    intermediates.insert("Y2".into(), jpairs(&y2));
    intermediates.insert("Y_prime".into(), json!("full quotient-side set"));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

// ---------------------------------------------------------------------------
// Group correspondence.
// ---------------------------------------------------------------------------

/// From a right congruence on a group to a generating set of its subgroup
/// `{x y⁻¹}`; verified by subgroup closure.
pub fn group_to_subgroup_gens(
    g: &FiniteSemigroup,
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::GroupToSubgroupGens;
    let Some(inverses) = group_inverses(g) else {
        return Err(mismatch(kind, "not a group"));
    };
    check_owner(kind, g, rho)?;
    let target = crate::green::congruence_to_subgroup(g, rho)?;
    let (u, _) = minimal_generating_set(g, rho)?;
    let x: Vec<ElementId> = {
        let set: BTreeSet<ElementId> =
            u.pairs.iter().map(|&(a, b)| g.mul(a, inverses[b.0])).collect();
        set.into_iter().collect()
    };
    let closure = subgroup_closure(g, &x)?;
    if closure != target {
        return Err(TransferError::VerificationFailed {
            kind: kind.name(),
            detail: format!("subgroup closure has {} elements, target {}", closure.len(), target.len()),
        });
    }
    let mut intermediates = BTreeMap::new();
    intermediates.insert("U".into(), jpairs(&u.pairs));
    intermediates.insert("H".into(), jelems(&target));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_elements(&x),
        verified: true,
        intermediates,
    })
}

/// From a subgroup generating set to pairs generating the coset right
/// congruence.
pub fn group_to_congruence_gens(
    g: &FiniteSemigroup,
    x: &[ElementId],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::GroupToCongruenceGens;
    let Some(inverses) = group_inverses(g) else {
        return Err(mismatch(kind, "not a group"));
    };
    for &e in x {
        if !g.contains(e) {
            return Err(mismatch(kind, format!("element {} out of range", e.0)));
        }
    }
    let h = subgroup_closure(g, x)?;
    let target = crate::green::subgroup_to_congruence(g, &h)?;
    let x_set: BTreeSet<ElementId> = x.iter().copied().collect();
    let mut u: Vec<(ElementId, ElementId)> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            if x_set.contains(&g.mul(a, inverses[b.0])) {
                u.push((a, b));
            }
        }
    }
    verify_pairs_generate(kind, g, &u, &target)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("H".into(), jelems(&h));
    intermediates.insert("X".into(), jelems(&x_set.iter().copied().collect::<Vec<_>>()));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&u),
        verified: true,
        intermediates,
    })
}

// ---------------------------------------------------------------------------
// Direct products.
// ---------------------------------------------------------------------------

/// Generating set on `M × S` (finite monoid times semigroup) from per-slice
/// generators and right-ideal data linking distinct slices.
pub fn dp_finite_monoid(
    dp: &DirectProduct,
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::DpFiniteMonoid;
    check_owner(kind, &dp.semigroup, rho)?;
    if dp.left.identity().is_none() {
        return Err(mismatch(kind, "first factor is not a monoid"));
    }
    let m_order = dp.left.order();
    let s_order = dp.right.order();
    let mut candidate: Vec<(ElementId, ElementId)> = Vec::new();
    let mut intermediates = BTreeMap::new();
    let mut slices_json = BTreeMap::new();
    for m in 0..m_order {
        let slice = dp.slice_fixing_left(rho, ElementId(m))?;
        let (x_m, _) = minimal_generating_set(&dp.right, &slice)?;
        let y_m: Vec<(ElementId, ElementId)> = x_m
            .pairs
            .iter()
            .map(|&(x, y)| (dp.encode(ElementId(m), x), dp.encode(ElementId(m), y)))
            .collect();
        slices_json.insert(format!("m={m}"), jpairs(&x_m.pairs));
        candidate.extend(y_m);
    }
    intermediates.insert("X_m".into(), json!(slices_json));
    let mut q: Vec<(usize, usize)> = Vec::new();
    let mut h_pairs: Vec<(ElementId, ElementId)> = Vec::new();
    let mut ideals_json = BTreeMap::new();
    for m in 0..m_order {
        for n in 0..m_order {
            if m == n {
                continue;
            }
            // I(m,n) = {s : (m,s) related to some (n,t)}.
            let members: Vec<ElementId> = (0..s_order)
                .map(ElementId)
                .filter(|&s| {
                    (0..s_order).any(|t| {
                        rho.are_related(
                            dp.encode(ElementId(m), s),
                            dp.encode(ElementId(n), ElementId(t)),
                        )
                    })
                })
                .collect();
            if members.is_empty() {
                continue;
            }
            q.push((m, n));
            debug_assert!(dp.right.is_right_ideal(&members));
            let p = minimal_right_ideal_generators(&dp.right, &members, &members);
            let mut alpha_json = BTreeMap::new();
            for &gen in &p {
                let alpha = (0..s_order)
                    .map(ElementId)
                    .find(|&t| {
                        rho.are_related(dp.encode(ElementId(m), gen), dp.encode(ElementId(n), t))
                    })
                    .expect("generator lies in the ideal");
                alpha_json.insert(gen.0.to_string(), alpha.0);
                h_pairs.push((dp.encode(ElementId(m), gen), dp.encode(ElementId(n), alpha)));
            }
            ideals_json.insert(
                format!("({m},{n})"),
                json!({"P": jelems(&p), "alpha": alpha_json}),
            );
        }
    }
    candidate.extend(&h_pairs);
    intermediates.insert("Q".into(), json!(q));
    intermediates.insert("ideals".into(), json!(ideals_json));
    intermediates.insert("H".into(), jpairs(&h_pairs));
    verify_pairs_generate(kind, &dp.semigroup, &candidate, rho)?;
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

/// Which factor indexes the slices of a product congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlicedFactor {
    Left,
    Right,
}

/// Finite sets of slice representatives: for every `m` in the sliced
/// factor there is a representative `x` with `m ∈ xM¹` and equal slices.
fn dpf_representatives(
    dp: &DirectProduct,
    rho: &RightCongruence,
    sliced: SlicedFactor,
    kind: TransferKind,
) -> Result<(Vec<ElementId>, Vec<RightCongruence>, Value), TransferError> {
    let factor = match sliced {
        SlicedFactor::Left => &dp.left,
        SlicedFactor::Right => &dp.right,
    };
    let slices: Vec<RightCongruence> = (0..factor.order())
        .map(|m| match sliced {
            SlicedFactor::Left => dp.slice_fixing_left(rho, ElementId(m)),
            SlicedFactor::Right => dp.slice_fixing_right(rho, ElementId(m)),
        })
        .collect::<Result<_, _>>()?;
    let mut reps: Vec<ElementId> = Vec::new();
    for m in 0..factor.order() {
        if !reps.iter().any(|&u| slices[u.0] == slices[m]) {
            reps.push(ElementId(m));
        }
    }
    let mut x: BTreeSet<ElementId> = BTreeSet::new();
    let mut detail = BTreeMap::new();
    for &u in &reps {
        let seed: Vec<ElementId> =
            (0..factor.order()).map(ElementId).filter(|&m| slices[m.0] == slices[u.0]).collect();
        let ideal = factor.right_ideal(&seed)?;
        let gens = minimal_right_ideal_generators(factor, &ideal.members, &seed);
        detail.insert(
            format!("rep={}", u.0),
            json!({"equal_slice_set": jelems(&seed), "ideal_generators": jelems(&gens)}),
        );
        x.extend(gens);
    }
    let x: Vec<ElementId> = x.into_iter().collect();
    // The defining property, checked directly.
    for m in 0..factor.order() {
        let ok = x.iter().any(|&rep| {
            slices[rep.0] == slices[m]
                && (rep.0 == m
                    || factor.elements().any(|t| factor.mul(rep, t) == ElementId(m)))
        });
        if !ok {
            return Err(TransferError::VerificationFailed {
                kind: kind.name(),
                detail: format!("element {m} has no slice representative dividing it"),
            });
        }
    }
    Ok((x, slices, json!(detail)))
}

/// Slice-representative set for a product of two monoids, sliced by the
/// left factor.
pub fn slice_representatives(
    dp: &DirectProduct,
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::SliceRepresentatives;
    check_owner(kind, &dp.semigroup, rho)?;
    if dp.left.identity().is_none() || dp.right.identity().is_none() {
        return Err(mismatch(kind, "both factors must be monoids"));
    }
    let (x, _, detail) = dpf_representatives(dp, rho, SlicedFactor::Left, kind)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("ideals".into(), detail);
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_elements(&x),
        verified: true,
        intermediates,
    })
}

/// Generating set on `G × M` (finite group times monoid) from a reduced
/// generating set of the projected congruence plus per-representative slice
/// generators.
pub fn dp_group(
    dp: &DirectProduct,
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::DpGroup;
    check_owner(kind, &dp.semigroup, rho)?;
    if group_inverses(&dp.left).is_none() {
        return Err(mismatch(kind, "first factor is not a group"));
    }
    if dp.right.identity().is_none() {
        return Err(mismatch(kind, "second factor is not a monoid"));
    }
    let g_order = dp.left.order();
    let m_order = dp.right.order();
    // rho' on M: m related to n when some (g, m) is related to some (h, n).
    let shares_class = |m: usize, n: usize| {
        (0..g_order).any(|g| {
            (0..g_order).any(|h| {
                rho.are_related(
                    dp.encode(ElementId(g), ElementId(m)),
                    dp.encode(ElementId(h), ElementId(n)),
                )
            })
        })
    };
    let mut raw = vec![usize::MAX; m_order];
    let mut next = 0;
    for m in 0..m_order {
        if raw[m] == usize::MAX {
            raw[m] = next;
            for n in m + 1..m_order {
                if shares_class(m, n) {
                    debug_assert!(raw[n] == usize::MAX, "sharing a class is transitive over a group factor");
                    raw[n] = next;
                }
            }
            next += 1;
        }
    }
    let rho_prime = RightCongruence::new(&dp.right, &raw)?;
    let (x, _) = minimal_generating_set(&dp.right, &rho_prime)?;
    let mut symmetrised: Vec<(ElementId, ElementId)> = Vec::new();
    for &(a, b) in &x.pairs {
        symmetrised.push((a, b));
        symmetrised.push((b, a));
    }
    let mut y: Vec<(ElementId, ElementId)> = Vec::new();
    let mut choices = BTreeMap::new();
    for &(xm, ym) in &symmetrised {
        let found = (0..g_order)
            .flat_map(|a| (0..g_order).map(move |b| (a, b)))
            .find(|&(a, b)| {
                rho.are_related(dp.encode(ElementId(a), xm), dp.encode(ElementId(b), ym))
            });
        let (alpha, beta) = found.ok_or_else(|| TransferError::VerificationFailed {
            kind: kind.name(),
            detail: format!("no witnesses above the projected pair ({}, {})", xm.0, ym.0),
        })?;
        choices.insert(format!("({},{})", xm.0, ym.0), json!([alpha, beta]));
        y.push((dp.encode(ElementId(alpha), xm), dp.encode(ElementId(beta), ym)));
    }
    let (reps, slices, detail) = dpf_representatives(dp, rho, SlicedFactor::Right, kind)?;
    let mut candidate = y.clone();
    let mut v_json = BTreeMap::new();
    for &s in &reps {
        let (u_s, _) = minimal_generating_set(&dp.left, &slices[s.0])?;
        let v_s: Vec<(ElementId, ElementId)> =
            u_s.pairs.iter().map(|&(u, v)| (dp.encode(u, s), dp.encode(v, s))).collect();
        v_json.insert(format!("s={}", s.0), jpairs(&u_s.pairs));
        candidate.extend(v_s);
    }
    verify_pairs_generate(kind, &dp.semigroup, &candidate, rho)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("projected_classes".into(), rho_prime.to_classes_json());
    intermediates.insert("X".into(), jpairs(&x.pairs));
    intermediates.insert("alpha_beta".into(), json!(choices));
    intermediates.insert("Y".into(), jpairs(&y));
    intermediates.insert("slice_representatives".into(), jelems(&reps));
    intermediates.insert("slice_ideals".into(), detail);
    intermediates.insert("U_s".into(), json!(v_json));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

/// Generating set on `B(G, I) × M` assembled from the corner subgroups, the
/// zero slice, and right-ideal data linking rows and the zero.
pub fn dp_brandt(
    brandt: &Brandt,
    dp: &DirectProduct,
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::DpBrandt;
    check_owner(kind, &dp.semigroup, rho)?;
    if !dp.left.same_table(&brandt.semigroup) {
        return Err(mismatch(kind, "product's first factor is not the given Brandt semigroup"));
    }
    let Some(m_identity) = dp.right.identity() else {
        return Err(mismatch(kind, "second factor is not a monoid"));
    };
    let _ = m_identity;
    let k = brandt.index_size;
    let g = &brandt.group;
    let e_g = g.identity().expect("brandt group has an identity");
    let m_order = dp.right.order();
    let mut candidate: Vec<(ElementId, ElementId)> = Vec::new();
    let mut intermediates = BTreeMap::new();
    // Corner restrictions: each {i} x G x {i} x M, plus the zero slice.
    let mut corner_json = BTreeMap::new();
    for corner in 0..=k {
        let subset: Vec<ElementId> = if corner < k {
            (0..g.order())
                .flat_map(|gg| {
                    (0..m_order)
                        .map(move |m| (gg, m))
                })
                .map(|(gg, m)| dp.encode(brandt.encode(corner, ElementId(gg), corner), ElementId(m)))
                .collect()
        } else {
            (0..m_order).map(|m| dp.encode(brandt.zero, ElementId(m))).collect()
        };
        let (sub_sg, sub_elems) = dp.semigroup.sub_table(&subset)?;
        let restriction = restrict(&dp.semigroup, rho, &sub_elems)?;
        let rho_i = RightCongruence::new(&sub_sg, &restriction.class_of)?;
        let x_i = generating_pairs_on_sub(&sub_sg, &sub_elems, &rho_i)?;
        corner_json.insert(
            if corner < k { format!("i={corner}") } else { "zero".into() },
            jpairs(&x_i),
        );
        candidate.extend(x_i);
    }
    intermediates.insert("X_i".into(), json!(corner_json));
    let i0 = 0usize;
    let probe = |i: usize, m: usize| dp.encode(brandt.encode(i, e_g, i0), ElementId(m));
    // Cross-row pairs.
    let mut h_pairs: Vec<(ElementId, ElementId)> = Vec::new();
    let mut p_json = BTreeMap::new();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let members: Vec<ElementId> = (0..m_order)
                .map(ElementId)
                .filter(|&m| {
                    (0..g.order()).any(|gg| {
                        (0..m_order).any(|n| {
                            rho.are_related(
                                probe(i, m.0),
                                dp.encode(
                                    brandt.encode(j, ElementId(gg), i0),
                                    ElementId(n),
                                ),
                            )
                        })
                    })
                })
                .collect();
            if members.is_empty() {
                continue;
            }
            debug_assert!(dp.right.is_right_ideal(&members));
            let a_ij = minimal_right_ideal_generators(&dp.right, &members, &members);
            let mut alpha_json = BTreeMap::new();
            for &a in &a_ij {
                let found = (0..g.order())
                    .flat_map(|gg| (0..m_order).map(move |n| (gg, n)))
                    .find(|&(gg, n)| {
                        rho.are_related(
                            probe(i, a.0),
                            dp.encode(brandt.encode(j, ElementId(gg), i0), ElementId(n)),
                        )
                    })
                    .expect("generator lies in the ideal");
                alpha_json.insert(a.0.to_string(), json!([found.0, found.1]));
                h_pairs.push((
                    probe(i, a.0),
                    dp.encode(brandt.encode(j, ElementId(found.0), i0), ElementId(found.1)),
                ));
            }
            p_json.insert(format!("({i},{j})"), json!({"A": jelems(&a_ij), "alpha_beta": alpha_json}));
        }
    }
    candidate.extend(&h_pairs);
    intermediates.insert("H".into(), jpairs(&h_pairs));
    intermediates.insert("cross_rows".into(), json!(p_json));
    // Rows related to the zero slice.
    let mut k_pairs: Vec<(ElementId, ElementId)> = Vec::new();
    let mut r_json = BTreeMap::new();
    for i in 0..k {
        let members: Vec<ElementId> = (0..m_order)
            .map(ElementId)
            .filter(|&m| {
                (0..m_order)
                    .any(|n| rho.are_related(probe(i, m.0), dp.encode(brandt.zero, ElementId(n))))
            })
            .collect();
        if members.is_empty() {
            continue;
        }
        debug_assert!(dp.right.is_right_ideal(&members));
        let a_i = minimal_right_ideal_generators(&dp.right, &members, &members);
        let mut alpha_json = BTreeMap::new();
        for &a in &a_i {
            let alpha = (0..m_order)
                .map(ElementId)
                .find(|&n| rho.are_related(probe(i, a.0), dp.encode(brandt.zero, n)))
                .expect("generator lies in the ideal");
            alpha_json.insert(a.0.to_string(), alpha.0);
            k_pairs.push((probe(i, a.0), dp.encode(brandt.zero, alpha)));
        }
        r_json.insert(format!("i={i}"), json!({"A": jelems(&a_i), "alpha": alpha_json}));
    }
    candidate.extend(&k_pairs);
    intermediates.insert("K".into(), jpairs(&k_pairs));
    intermediates.insert("rows_to_zero".into(), json!(r_json));
    verify_pairs_generate(kind, &dp.semigroup, &candidate, rho)?;
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

// ---------------------------------------------------------------------------
// Semidirect products.
// ---------------------------------------------------------------------------

/// Generating set of a subgroup of a semidirect product of groups, from
/// generators of its first-factor kernel and of its projection.
pub fn sdp_subgroup(
    sdp: &SemidirectProduct,
    subgroup: &[ElementId],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::SdpSubgroup;
    let u = &sdp.semigroup;
    if group_inverses(u).is_none() {
        return Err(mismatch(kind, "semidirect product is not a group"));
    }
    let sub: Vec<ElementId> = {
        let set: BTreeSet<_> = subgroup.iter().copied().collect();
        set.into_iter().collect()
    };
    if sub.is_empty() || !crate::green::is_subgroup(u, &sub) {
        return Err(mismatch(kind, "subset is not a subgroup"));
    }
    let h_identity = sdp.right.identity().ok_or_else(|| mismatch(kind, "second factor lacks an identity"))?;
    let g_s: Vec<ElementId> = sdp
        .left
        .elements()
        .filter(|&g| sub.binary_search(&sdp.encode(g, h_identity)).is_ok())
        .collect();
    let x = subgroup_generators(&sdp.left, &g_s);
    let h_s: Vec<ElementId> = {
        let set: BTreeSet<ElementId> = sub.iter().map(|&p| sdp.decode(p).1).collect();
        set.into_iter().collect()
    };
    let y = subgroup_generators(&sdp.right, &h_s);
    let mut z: Vec<ElementId> = x.iter().map(|&g| sdp.encode(g, h_identity)).collect();
    let mut g_y_json = BTreeMap::new();
    for &yy in &y {
        let g_y = sdp
            .left
            .elements()
            .find(|&g| sub.binary_search(&sdp.encode(g, yy)).is_ok())
            .expect("projection value has a witness in the subgroup");
        g_y_json.insert(yy.0.to_string(), g_y.0);
        z.push(sdp.encode(g_y, yy));
    }
    debug_assert!(z.iter().all(|p| sub.binary_search(p).is_ok()));
    let mut closure = subgroup_closure(u, &z)?;
    closure.sort();
    if closure != sub {
        return Err(TransferError::VerificationFailed {
            kind: kind.name(),
            detail: format!("closure of Z has {} elements, subgroup has {}", closure.len(), sub.len()),
        });
    }
    let mut intermediates = BTreeMap::new();
    intermediates.insert("G_S".into(), jelems(&g_s));
    intermediates.insert("X".into(), jelems(&x));
    intermediates.insert("H_S".into(), jelems(&h_s));
    intermediates.insert("Y".into(), jelems(&y));
    intermediates.insert("g_y".into(), json!(g_y_json));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_elements(&z),
        verified: true,
        intermediates,
    })
}

/// Projects a generating set from a semidirect product down to its first
/// factor.
pub fn sdp_factor(
    sdp: &SemidirectProduct,
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::SdpFactor;
    check_owner(kind, &sdp.left, rho)?;
    let u = &sdp.semigroup;
    // rho' relates (s1, t) and (s2, t) when s1 rho s2.
    let raw: Vec<usize> = (0..u.order())
        .map(|p| {
            let (s, t) = sdp.decode(ElementId(p));
            rho.class_of(s) * sdp.right.order() + t.0
        })
        .collect();
    let rho_prime = RightCongruence::new(u, &raw)?;
    let (x, _) = minimal_generating_set(u, &rho_prime)?;
    let mut y: Vec<(ElementId, ElementId)> = Vec::new();
    for &(a, b) in &x.pairs {
        let (sa, ta) = sdp.decode(a);
        let (sb, tb) = sdp.decode(b);
        debug_assert_eq!(ta, tb, "lifted congruence only relates equal second coordinates");
        let _ = tb;
        if !y.contains(&(sa, sb)) {
            y.push((sa, sb));
        }
    }
    verify_pairs_generate(kind, &sdp.left, &y, rho)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("lifted_classes".into(), rho_prime.to_classes_json());
    intermediates.insert("X".into(), jpairs(&x.pairs));
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&y),
        verified: true,
        intermediates,
    })
}

// ---------------------------------------------------------------------------
// Semilattices of semigroups and act extensions.
// ---------------------------------------------------------------------------

/// Generating set on a semilattice of semigroups from per-part generators
/// plus bridging pairs chosen along right-ideal generators.
pub fn semilattice_transfer(
    ssl: &StrongSemilattice,
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::Semilattice;
    check_owner(kind, &ssl.semigroup, rho)?;
    let parts = ssl.diagram.parts.len();
    let mut candidate: Vec<(ElementId, ElementId)> = Vec::new();
    let mut intermediates = BTreeMap::new();
    let mut part_json = BTreeMap::new();
    for alpha in 0..parts {
        let elements = ssl.part_elements(alpha);
        let (part_sg, part_elems) = ssl.semigroup.sub_table(&elements)?;
        let restriction = restrict(&ssl.semigroup, rho, &part_elems)?;
        let rho_alpha = RightCongruence::new(&part_sg, &restriction.class_of)?;
        let x_alpha = generating_pairs_on_sub(&part_sg, &part_elems, &rho_alpha)?;
        part_json.insert(format!("alpha={alpha}"), jpairs(&x_alpha));
        candidate.extend(x_alpha);
    }
    intermediates.insert("X_alpha".into(), json!(part_json));
    let mut h: Vec<(ElementId, ElementId)> = Vec::new();
    let mut bridge_json = BTreeMap::new();
    for alpha in 0..parts {
        for beta in 0..parts {
            if alpha == beta {
                continue;
            }
            let alpha_elems = ssl.part_elements(alpha);
            let beta_elems = ssl.part_elements(beta);
            let seed: Vec<ElementId> = alpha_elems
                .iter()
                .copied()
                .filter(|&a| beta_elems.iter().any(|&b| rho.are_related(a, b)))
                .collect();
            if seed.is_empty() {
                continue;
            }
            // The right ideal of the part generated by the seed, computed
            // inside the part.
            let (part_sg, part_elems) = ssl.semigroup.sub_table(&alpha_elems)?;
            let seed_local: Vec<ElementId> = seed
                .iter()
                .map(|&a| ElementId(part_elems.binary_search(&a).expect("seed within part")))
                .collect();
            let ideal = part_sg.right_ideal(&seed_local)?;
            let gens_local =
                minimal_right_ideal_generators(&part_sg, &ideal.members, &seed_local);
            let gens: Vec<ElementId> = gens_local.iter().map(|&l| part_elems[l.0]).collect();
            let mut lambda_json = BTreeMap::new();
            for &ugen in &gens {
                let lambda = lowest_related(rho, ugen, beta_elems.iter().copied())
                    .expect("seed elements are related into the other part");
                lambda_json.insert(ugen.0.to_string(), lambda.0);
                h.push((ugen, lambda));
            }
            bridge_json.insert(
                format!("({alpha},{beta})"),
                json!({"U_prime": jelems(&gens), "lambda": lambda_json}),
            );
        }
    }
    candidate.extend(&h);
    intermediates.insert("H".into(), jpairs(&h));
    intermediates.insert("bridges".into(), json!(bridge_json));
    verify_pairs_generate(kind, &ssl.semigroup, &candidate, rho)?;
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

/// Generating set on an act extension `S ∪ A` from generators on `S`,
/// per-generator act-slice generators, and ideal data bridging the carrier
/// to `S` and between carrier generators.
///
/// The ideal and slice data range over multipliers from `S¹`, not just `S`:
/// a generator `x` with `x ∉ x·S` is reachable only through the formal
/// identity, and with multipliers restricted to `S` such an `x` would sit
/// in no candidate pair at all even when the target relates it.
pub fn act_extension_transfer(
    ext: &ActExtension,
    act_gens: &[usize],
    rho: &RightCongruence,
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::ActExtension;
    let u = &ext.semigroup;
    check_owner(kind, u, rho)?;
    let x_set: BTreeSet<usize> = act_gens.iter().copied().collect();
    if x_set.iter().any(|&x| x >= ext.carrier) {
        return Err(mismatch(kind, "act generator out of range"));
    }
    // X must generate the act: A = X·S¹ = X ∪ X·S.
    let mut reached: Vec<bool> = vec![false; ext.carrier];
    for &x in &x_set {
        reached[x] = true;
        for s in 0..ext.base_order {
            reached[ext.act.apply(x, ElementId(s))] = true;
        }
    }
    if !reached.iter().all(|&b| b) {
        return Err(mismatch(kind, "the given set does not generate the act"));
    }
    let base = &(0..ext.base_order).map(ElementId).collect::<Vec<_>>();
    let (s_sg, s_elems) = u.sub_table(base)?;
    // Multipliers from S¹; None is the formal identity, x·None = x.
    let act_value = |x: usize, s: Option<ElementId>| -> ElementId {
        match s {
            None => ext.act_element(x),
            Some(t) => ext.act_element(ext.act.apply(x, t)),
        }
    };
    let mut multipliers: Vec<Option<ElementId>> = vec![None];
    multipliers.extend((0..ext.base_order).map(|i| Some(ElementId(i))));
    // Generators of a right ideal of S¹: the formal identity alone when it
    // belongs, otherwise the exact generators inside S.
    let ideal_generators = |members: &[Option<ElementId>]| -> Vec<Option<ElementId>> {
        if members.contains(&None) {
            vec![None]
        } else {
            let inner: Vec<ElementId> = members.iter().map(|m| m.expect("no formal identity")).collect();
            minimal_right_ideal_generators(&s_sg, &inner, &inner)
                .into_iter()
                .map(Some)
                .collect()
        }
    };
    let fmt_mul = |m: &Option<ElementId>| match m {
        None => "1".to_string(),
        Some(t) => t.0.to_string(),
    };
    let mut candidate: Vec<(ElementId, ElementId)> = Vec::new();
    let mut intermediates = BTreeMap::new();
    // H: carrier points related into S, reached through right-ideal
    // generators of I_x ⊆ S¹.
    let mut h: Vec<(ElementId, ElementId)> = Vec::new();
    let mut h_json = BTreeMap::new();
    for &x in &x_set {
        let members: Vec<Option<ElementId>> = multipliers
            .iter()
            .copied()
            .filter(|&s| {
                let xs = act_value(x, s);
                (0..ext.base_order).any(|t| rho.are_related(xs, ElementId(t)))
            })
            .collect();
        if members.is_empty() {
            continue;
        }
        let p_x = ideal_generators(&members);
        let mut alpha_json = BTreeMap::new();
        for &p in &p_x {
            let xp = act_value(x, p);
            let alpha = (0..ext.base_order)
                .map(ElementId)
                .find(|&t| rho.are_related(xp, t))
                .expect("generator lies in the ideal");
            alpha_json.insert(fmt_mul(&p), alpha.0);
            h.push((xp, alpha));
        }
        h_json.insert(format!("x={x}"), json!({"P": p_x.iter().map(&fmt_mul).collect::<Vec<_>>(), "alpha": alpha_json}));
    }
    candidate.extend(&h);
    intermediates.insert("H".into(), jpairs(&h));
    intermediates.insert("carrier_to_base".into(), json!(h_json));
    // K: bridges between distinct carrier generators, over S¹ on both
    // sides.
    let mut k: Vec<(ElementId, ElementId)> = Vec::new();
    let mut k_json = BTreeMap::new();
    for &x in &x_set {
        for &y in &x_set {
            if x == y {
                continue;
            }
            let members: Vec<Option<ElementId>> = multipliers
                .iter()
                .copied()
                .filter(|&s| {
                    let xs = act_value(x, s);
                    multipliers.iter().any(|&t| rho.are_related(xs, act_value(y, t)))
                })
                .collect();
            if members.is_empty() {
                continue;
            }
            let p_xy = ideal_generators(&members);
            let mut alpha_json = BTreeMap::new();
            for &p in &p_xy {
                let xp = act_value(x, p);
                let alpha = multipliers
                    .iter()
                    .copied()
                    .find(|&t| rho.are_related(xp, act_value(y, t)))
                    .expect("generator lies in the ideal");
                alpha_json.insert(fmt_mul(&p), fmt_mul(&alpha));
                k.push((xp, act_value(y, alpha)));
            }
            k_json.insert(
                format!("({x},{y})"),
                json!({"P": p_xy.iter().map(&fmt_mul).collect::<Vec<_>>(), "alpha": alpha_json}),
            );
        }
    }
    candidate.extend(&k);
    intermediates.insert("K".into(), jpairs(&k));
    intermediates.insert("carrier_bridges".into(), json!(k_json));
    // Y: generators of the restriction to S.
    let restriction = restrict(u, rho, &s_elems)?;
    let rho_s = RightCongruence::new(&s_sg, &restriction.class_of)?;
    let y = generating_pairs_on_sub(&s_sg, &s_elems, &rho_s)?;
    candidate.extend(&y);
    intermediates.insert("Y".into(), jpairs(&y));
    // Z_x: act-slice generators per carrier generator, over S¹ so the bare
    // generator participates.
    let s_one = s_sg.adjoin(crate::semigroup::Adjoin::Identity);
    let s_one_mul = |i: usize| -> Option<ElementId> {
        if i == ext.base_order {
            None
        } else {
            Some(ElementId(i))
        }
    };
    let mut z_json = BTreeMap::new();
    for &x in &x_set {
        let raw: Vec<usize> =
            (0..s_one.order()).map(|i| rho.class_of(act_value(x, s_one_mul(i)))).collect();
        let rho_x = RightCongruence::new(&s_one, &raw)?;
        let (y_x, _) = minimal_generating_set(&s_one, &rho_x)?;
        let z_x: Vec<(ElementId, ElementId)> = y_x
            .pairs
            .iter()
            .map(|&(p, q)| (act_value(x, s_one_mul(p.0)), act_value(x, s_one_mul(q.0))))
            .collect();
        z_json.insert(format!("x={x}"), jpairs(&y_x.pairs));
        candidate.extend(z_x);
    }
    intermediates.insert("Y_x".into(), json!(z_json));
    verify_pairs_generate(kind, u, &candidate, rho)?;
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&candidate),
        verified: true,
        intermediates,
    })
}

/// Recovers an act generating set from a reduced generating set of the
/// congruence collapsing the carrier; verified by act closure.
pub fn act_extension_generators(ext: &ActExtension) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::ActExtensionGenerators;
    if ext.carrier < 2 {
        return Err(mismatch(kind, "carrier needs at least two points"));
    }
    let u = &ext.semigroup;
    let carrier = ext.act_elements();
    let mut all_pairs: Vec<(ElementId, ElementId)> = Vec::new();
    for (i, &a) in carrier.iter().enumerate() {
        for &b in &carrier[i + 1..] {
            all_pairs.push((a, b));
        }
    }
    let (y, rho) = greedy_reduce_pairs(u, &all_pairs)?;
    let x: Vec<usize> = {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        for &(a, b) in &y {
            set.insert(a.0 - ext.base_order);
            set.insert(b.0 - ext.base_order);
        }
        set.into_iter().collect()
    };
    let mut reached = vec![false; ext.carrier];
    for &g in &x {
        reached[g] = true;
        for s in 0..ext.base_order {
            reached[ext.act.apply(g, ElementId(s))] = true;
        }
    }
    if let Some(missing) = reached.iter().position(|&b| !b) {
        return Err(TransferError::VerificationFailed {
            kind: kind.name(),
            detail: format!("carrier point {missing} is not generated"),
        });
    }
    let mut intermediates = BTreeMap::new();
    intermediates.insert("Y".into(), jpairs(&y));
    intermediates.insert("collapse_classes".into(), rho.to_classes_json());
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::Elements(x),
        verified: true,
        intermediates,
    })
}

/// Congruence transfer onto the idempotent semilattice of an inverse
/// subsemigroup: related pairs inside the subsemigroup generated by the
/// entries of a reduced ambient generating set.
pub fn inverse_semilattice_transfer(
    s: &FiniteSemigroup,
    t_subset: &[ElementId],
    pairs_on_y: &[(ElementId, ElementId)],
) -> Result<TransferRecipe, TransferError> {
    let kind = TransferKind::InverseSemilattice;
    let (t_sg, t_elems) = s
        .sub_table(t_subset)
        .map_err(|e| mismatch(kind, format!("subset is not a subsemigroup: {e}")))?;
    // Inverse: every element has a unique inverse, and idempotents commute.
    for x in t_sg.elements() {
        let inverses: Vec<ElementId> = t_sg
            .elements()
            .filter(|&y| t_sg.mul(t_sg.mul(x, y), x) == x && t_sg.mul(t_sg.mul(y, x), y) == y)
            .collect();
        if inverses.len() != 1 {
            return Err(mismatch(
                kind,
                format!("element {} has {} inverses", t_elems[x.0].0, inverses.len()),
            ));
        }
    }
    let idempotents_local: Vec<ElementId> =
        t_sg.elements().filter(|&x| t_sg.mul(x, x) == x).collect();
    for &e in &idempotents_local {
        for &f in &idempotents_local {
            if t_sg.mul(e, f) != t_sg.mul(f, e) {
                return Err(mismatch(kind, "idempotents do not commute"));
            }
        }
    }
    let y_elems: Vec<ElementId> = idempotents_local.iter().map(|&l| t_elems[l.0]).collect();
    let (y_sg, y_global) = s.sub_table(&y_elems)?;
    let local = localize_pairs(kind, &y_global, pairs_on_y)?;
    let target = rc_closure(&y_sg, &local)?;
    // Reduce over the ambient closure on S.
    let (x, rho_bar) = greedy_reduce_pairs(s, pairs_on_y)?;
    let p: Vec<ElementId> = {
        let mut set: BTreeSet<ElementId> = BTreeSet::new();
        for &(a, b) in &x {
            set.insert(a);
            set.insert(b);
        }
        set.into_iter().collect()
    };
    let u: Vec<ElementId> = if p.is_empty() { Vec::new() } else { s.subsemigroup(&p)? };
    let mut z: Vec<(ElementId, ElementId)> = Vec::new();
    for (i, &a) in u.iter().enumerate() {
        for &b in &u[i + 1..] {
            let (la, lb) = (
                y_global.binary_search(&a).expect("generated set stays in the semilattice"),
                y_global.binary_search(&b).expect("generated set stays in the semilattice"),
            );
            if target.are_related(ElementId(la), ElementId(lb)) {
                z.push((a, b));
            }
        }
    }
    // The reduced set is contained in Z up to orientation.
    debug_assert!(x.iter().all(|&(a, b)| {
        a == b || z.contains(&(a.min(b), a.max(b)))
    }));
    let z_local = localize_pairs(kind, &y_global, &z)?;
    verify_pairs_generate(kind, &y_sg, &z_local, &target)?;
    let mut intermediates = BTreeMap::new();
    intermediates.insert("X".into(), jpairs(&x));
    intermediates.insert("P".into(), jelems(&p));
    intermediates.insert("U".into(), jelems(&u));
    intermediates.insert("semilattice".into(), jelems(&y_elems));
    intermediates.insert("ambient_closure_classes".into(), rho_bar.to_classes_json());
    Ok(TransferRecipe {
        kind: kind.name(),
        candidate: Candidate::from_pairs(&z),
        verified: true,
        intermediates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::RightCongruence;
    use crate::construct::{
        act_extension, direct_product, semidirect_product, strong_semilattice, zero_direct_union,
        RightActData, SemigroupAction, SemilatticeDiagram,
    };
    use crate::gallery;

    fn ids(pairs: &[(usize, usize)]) -> Vec<(ElementId, ElementId)> {
        pairs.iter().map(|&(a, b)| (ElementId(a), ElementId(b))).collect()
    }

    #[test]
    fn left_ideal_restriction_on_zero_direct_union() {
        let zdu = zero_direct_union(&gallery::cyclic(4), &gallery::right_zero(2)).unwrap();
        // T = the left part; its complement is the two-sided ideal T' ∪ {0}.
        let t: Vec<ElementId> = (0..4).map(ElementId).collect();
        let pairs = ids(&[(0, 2)]);
        let recipe = left_ideal_restriction(&zdu.semigroup, &t, &pairs).unwrap();
        assert!(recipe.verified);
        assert_eq!(recipe.candidate, Candidate::from_pairs(&pairs));
    }

    #[test]
    fn left_ideal_restriction_rejects_bad_complement() {
        let s = gallery::cyclic(6);
        let t = [ElementId(0), ElementId(2), ElementId(4)];
        // The complement of a subgroup is not a left ideal in a group.
        assert!(matches!(
            left_ideal_restriction(&s, &t, &[]),
            Err(TransferError::ContextMismatch { .. })
        ));
    }

    #[test]
    fn stabilizer_restriction_on_brandt_h_class() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let h = vec![b.encode(0, ElementId(0), 1), b.encode(0, ElementId(1), 1)];
        // Stabiliser monoid has order 3: formal identity + two corner
        // elements; relate the two corner elements.
        let recipe = stabilizer_restriction(&b.semigroup, &h, &ids(&[(1, 2)])).unwrap();
        assert!(recipe.verified);
        assert_eq!(recipe.candidate.len(), 1);
    }

    fn two_chain_of_z2() -> StrongSemilattice {
        let z2 = gallery::cyclic(2);
        let diagram = SemilatticeDiagram {
            semilattice: gallery::chain_semilattice(2),
            parts: vec![z2.clone(), z2],
            homs: vec![
                vec![Some(vec![0, 1]), None],
                vec![Some(vec![0, 1]), Some(vec![0, 1])],
            ],
        };
        strong_semilattice(&diagram, false).unwrap()
    }

    #[test]
    fn monoid_component_restriction_on_a_two_chain() {
        let ssl = two_chain_of_z2();
        let top = ssl.part_elements(1);
        let pairs = vec![(top[0], top[1])];
        let recipe = monoid_component_restriction(&ssl, 1, &pairs).unwrap();
        assert!(recipe.verified);
        assert_eq!(recipe.candidate, Candidate::from_pairs(&pairs));
    }

    #[test]
    fn finite_complement_down_with_identity_congruence() {
        let s = gallery::brandt(&gallery::cyclic(2), 2).semigroup;
        // T = corner subgroup {(1,g,1)} ∪ {0}; complement finite.
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let t = vec![b.encode(0, ElementId(0), 0), b.encode(0, ElementId(1), 0), b.zero];
        let recipe = finite_complement_down(&s, &t, &[]).unwrap();
        assert!(recipe.verified);
        assert!(recipe.candidate.is_empty());
    }

    #[test]
    fn finite_complement_up_reconstructs_a_congruence() {
        let s = gallery::cyclic(6);
        let t = [ElementId(0), ElementId(2), ElementId(4)];
        let rho = rc_closure(&s, &ids(&[(0, 3)])).unwrap();
        let recipe = finite_complement_up(&s, &t, &rho).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn quotient_transfer_mod_two() {
        let z4 = gallery::cyclic(4);
        let z2 = gallery::cyclic(2);
        let theta = [0, 1, 0, 1].map(ElementId);
        let recipe = quotient_transfer(&z4, &z2, &theta, &[]).unwrap();
        assert!(recipe.verified);
        // The pullback of the identity congruence is generated by one pair,
        // which collapses to a reflexive image pair.
        assert_eq!(recipe.candidate, Candidate::Pairs(vec![(0, 0)]));
    }

    #[test]
    fn ideal_extension_on_brandt_zero() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let rho = rc_closure(
            &b.semigroup,
            &[(b.encode(0, ElementId(0), 0), b.encode(0, ElementId(1), 0))],
        )
        .unwrap();
        let recipe = ideal_extension(&b.semigroup, &[b.zero], &rho).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn group_to_subgroup_gens_on_z6() {
        let g = gallery::cyclic(6);
        let rho = crate::green::subgroup_to_congruence(&g, &[ElementId(0), ElementId(3)]).unwrap();
        let recipe = group_to_subgroup_gens(&g, &rho).unwrap();
        assert!(recipe.verified);
        let Candidate::Elements(x) = &recipe.candidate else { panic!("element candidate") };
        assert!(!x.is_empty());
    }

    #[test]
    fn group_to_congruence_gens_on_z6() {
        let g = gallery::cyclic(6);
        let recipe = group_to_congruence_gens(&g, &[ElementId(3)]).unwrap();
        assert!(recipe.verified);
        let Candidate::Pairs(u) = &recipe.candidate else { panic!("pair candidate") };
        // One ordered pair (x, y) per x with y = x + 3.
        assert_eq!(u.len(), 6);
    }

    #[test]
    fn dp_finite_monoid_universal_target() {
        let dp = direct_product(&gallery::cyclic(2), &gallery::right_zero(2)).unwrap();
        let rho = RightCongruence::universal(&dp.semigroup);
        let recipe = dp_finite_monoid(&dp, &rho).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn slice_representatives_cover_the_monoid() {
        let dp = direct_product(&gallery::cyclic(4), &gallery::cyclic(2)).unwrap();
        let rho = rc_closure(&dp.semigroup, &[(dp.encode(ElementId(0), ElementId(0)), dp.encode(ElementId(2), ElementId(0)))]).unwrap();
        let recipe = slice_representatives(&dp, &rho).unwrap();
        assert!(recipe.verified);
        let Candidate::Elements(x) = &recipe.candidate else { panic!() };
        assert!(!x.is_empty());
    }

    #[test]
    fn dp_group_on_z3_times_two_chain() {
        let dp = direct_product(&gallery::cyclic(3), &gallery::chain_semilattice(2)).unwrap();
        let rho = rc_closure(
            &dp.semigroup,
            &[(dp.encode(ElementId(0), ElementId(0)), dp.encode(ElementId(1), ElementId(0)))],
        )
        .unwrap();
        let recipe = dp_group(&dp, &rho).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn dp_brandt_with_two_chain_monoid() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let m = gallery::chain_semilattice(2);
        let dp = direct_product(&b.semigroup, &m).unwrap();
        let rho = rc_closure(
            &dp.semigroup,
            &[(
                dp.encode(b.encode(0, ElementId(0), 0), ElementId(1)),
                dp.encode(b.encode(0, ElementId(1), 0), ElementId(1)),
            )],
        )
        .unwrap();
        let recipe = dp_brandt(&b, &dp, &rho).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn sdp_subgroup_recovers_a_diagonal_subgroup() {
        let s = gallery::cyclic(3);
        let t = gallery::cyclic(2);
        let action = SemigroupAction { table: vec![vec![0, 1, 2], vec![0, 2, 1]] };
        let sdp = semidirect_product(&s, &t, &action).unwrap();
        // The full group is a subgroup of itself.
        let all: Vec<ElementId> = sdp.semigroup.elements().collect();
        let recipe = sdp_subgroup(&sdp, &all).unwrap();
        assert!(recipe.verified);
        // And so is a cyclic subgroup generated by a reflection.
        let refl = sdp.encode(ElementId(0), ElementId(1));
        let sub = sdp.semigroup.subsemigroup(&[refl]).unwrap();
        let recipe = sdp_subgroup(&sdp, &sub).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn sdp_factor_projects_generators() {
        let s = gallery::cyclic(4);
        let t = gallery::right_zero(2);
        let sdp = semidirect_product(&s, &t, &SemigroupAction::trivial(&t, &s)).unwrap();
        let rho = rc_closure(&s, &ids(&[(0, 2)])).unwrap();
        let recipe = sdp_factor(&sdp, &rho).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn semilattice_transfer_with_cross_part_identification() {
        let ssl = two_chain_of_z2();
        let top = ssl.part_elements(1);
        let bottom = ssl.part_elements(0);
        let rho = rc_closure(&ssl.semigroup, &[(top[0], bottom[0])]).unwrap();
        let recipe = semilattice_transfer(&ssl, &rho).unwrap();
        assert!(recipe.verified);
    }

    fn small_act_extension() -> ActExtension {
        let s = gallery::cyclic(2);
        // Carrier {0, 1} with a acting by swap: the regular act of Z2.
        let act = RightActData { carrier: 2, table: vec![vec![0, 1], vec![1, 0]] };
        act_extension(&s, &act).unwrap()
    }

    #[test]
    fn act_extension_transfer_on_regular_act() {
        let ext = small_act_extension();
        let a0 = ext.act_element(0);
        let rho = rc_closure(&ext.semigroup, &[(a0, ElementId(0))]).unwrap();
        let recipe = act_extension_transfer(&ext, &[0], &rho).unwrap();
        assert!(recipe.verified);
    }

    #[test]
    fn act_extension_generators_on_regular_act() {
        let ext = small_act_extension();
        let recipe = act_extension_generators(&ext).unwrap();
        assert!(recipe.verified);
        let Candidate::Elements(x) = &recipe.candidate else { panic!() };
        assert!(!x.is_empty());
    }

    #[test]
    fn inverse_semilattice_transfer_on_brandt() {
        let b = gallery::brandt(&gallery::cyclic(2), 2);
        let all: Vec<ElementId> = b.semigroup.elements().collect();
        // Idempotent semilattice: the two corner identities and zero.
        let e1 = b.encode(0, ElementId(0), 0);
        let recipe =
            inverse_semilattice_transfer(&b.semigroup, &all, &[(e1, b.zero)]).unwrap();
        assert!(recipe.verified);
        let Candidate::Pairs(z) = &recipe.candidate else { panic!() };
        assert!(!z.is_empty());
    }

    #[test]
    fn inverse_semilattice_rejects_non_inverse_subsemigroups() {
        let s = gallery::right_zero(2);
        let all: Vec<ElementId> = s.elements().collect();
        assert!(matches!(
            inverse_semilattice_transfer(&s, &all, &[]),
            Err(TransferError::ContextMismatch { .. })
        ));
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in TransferKind::ALL {
            assert_eq!(TransferKind::from_name(kind.name()), Some(kind));
        }
        assert_eq!(TransferKind::from_name("nope"), None);
    }
}
