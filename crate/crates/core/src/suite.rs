//! The built-in verification suite.
//!
//! Each check pins one acceptance criterion: brute-force oracles against
//! the closure engine, counting identities, structure-transfer soundness
//! over randomized contexts, and the bounded normal-form witnesses. The
//! CLI's `verify-paper` subcommand and the acceptance test target both run
//! this registry.

use std::time::Instant;

use rand::prelude::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::congruence::{
    closure_via_oracle, consequence, enumerate_right_congruences, minimal_generating_set,
    rc_closure, Consequence, MinimalityMode, RightCongruence,
};
use crate::construct::{
    act_extension, brandt, direct_product, semidirect_product, strong_semilattice,
    wreath_product, zero_direct_union, RightActData, SemigroupAction, SemilatticeDiagram,
    StrongSemilattice,
};
use crate::fp::{
    bounded_rc_closure, classify_alternating, witness_incomparable_ideals,
    witness_indecomposables, BoundedVerdict, Classification, Family, NormalFormSemigroup,
    ProductKind, Word,
};
use crate::gallery;
use crate::green::{
    green_partitions, schutzenberger_group, subgroup_to_congruence, subgroups_of,
    verify_lattice_embedding,
};
use crate::semigroup::{Adjoin, ElementId, FiniteSemigroup};
use crate::transfer::{self, TransferKind, TransferRecipe};

const MASTER_SEED: u64 = 0x5347_5742;

/// Outcome of one suite check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub millis: u128,
    pub budget_millis: u128,
}

impl CheckReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] {} — {} ({} ms, budget {} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.details,
            self.millis,
            self.budget_millis
        )
    }
}

type CheckFn = fn() -> Result<String, String>;

/// Registration order fixes report order.
const CHECKS: [(&str, u128, CheckFn); 10] = [
    ("closure-oracle-equivalence", 60_000, check_closure_oracle),
    ("group-congruence-correspondence", 5_000, check_group_correspondence),
    ("right-zero-bell-counts", 5_000, check_bell_counts),
    ("schutzenberger-groups", 5_000, check_schutzenberger),
    ("subgroup-lattice-embedding", 30_000, check_lattice_embedding),
    ("transfer-soundness", 180_000, check_transfer_soundness),
    ("right-zero-product-minimal-generators", 5_000, check_right_zero_product_minimality),
    ("normal-form-witnesses", 60_000, check_normal_form_witnesses),
    ("certificate-audit", 10_000, check_certificate_audit),
    ("construction-conformance", 10_000, check_construction_conformance),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _, _)| *name).collect()
}

pub fn run_check(name: &str) -> Option<CheckReport> {
    let (_, budget, f) = CHECKS.iter().find(|(n, _, _)| *n == name)?;
    let start = Instant::now();
    let outcome = f();
    let millis = start.elapsed().as_millis();
    Some(match outcome {
        Ok(details) => CheckReport { name: check_static_name(name), passed: true, details, millis, budget_millis: *budget },
        Err(details) => CheckReport { name: check_static_name(name), passed: false, details, millis, budget_millis: *budget },
    })
}

fn check_static_name(name: &str) -> &'static str {
    CHECKS.iter().find(|(n, _, _)| *n == name).map(|(n, _, _)| *n).expect("registered")
}

/// Runs every check whose name contains `filter` (all when absent).
pub fn run_all(filter: Option<&str>) -> Vec<CheckReport> {
    CHECKS
        .iter()
        .filter(|(name, _, _)| filter.map_or(true, |f| name.contains(f)))
        .map(|(name, _, _)| run_check(name).expect("registered"))
        .collect()
}

// ---------------------------------------------------------------------------
// Shared corpus and sampling helpers.
// ---------------------------------------------------------------------------

/// Small semigroups used for randomized checks.
pub fn corpus() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("Z1", gallery::cyclic(1)),
        ("Z2", gallery::cyclic(2)),
        ("Z3", gallery::cyclic(3)),
        ("Z4", gallery::cyclic(4)),
        ("Z6", gallery::cyclic(6)),
        ("RZ2", gallery::right_zero(2)),
        ("RZ3", gallery::right_zero(3)),
        ("LZ2", gallery::left_zero(2)),
        ("N3", gallery::null_semigroup(3)),
        ("C2", gallery::chain_semilattice(2)),
        ("C3", gallery::chain_semilattice(3)),
        ("V4", gallery::klein_four()),
        ("S3", gallery::symmetric_3()),
        ("B(Z2,2)", gallery::brandt(&gallery::cyclic(2), 2).semigroup),
    ]
}

fn monoid_pool() -> Vec<FiniteSemigroup> {
    vec![
        gallery::cyclic(1),
        gallery::cyclic(2),
        gallery::cyclic(3),
        gallery::cyclic(4),
        gallery::chain_semilattice(2),
        gallery::chain_semilattice(3),
        gallery::right_zero(2).adjoin(Adjoin::Identity),
    ]
}

fn group_pool() -> Vec<FiniteSemigroup> {
    vec![
        gallery::cyclic(1),
        gallery::cyclic(2),
        gallery::cyclic(3),
        gallery::cyclic(4),
        gallery::cyclic(6),
        gallery::klein_four(),
        gallery::symmetric_3(),
    ]
}

fn semigroup_pool() -> Vec<FiniteSemigroup> {
    let mut pool = monoid_pool();
    pool.extend([
        gallery::right_zero(2),
        gallery::right_zero(3),
        gallery::left_zero(2),
        gallery::null_semigroup(3),
    ]);
    pool
}

fn rng_for(kind: usize, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(MASTER_SEED ^ ((kind as u64) << 32) ^ index as u64)
}

fn random_pairs(
    rng: &mut ChaCha8Rng,
    elements: &[ElementId],
    max_pairs: usize,
) -> Vec<(ElementId, ElementId)> {
    let count = rng.random_range(0..=max_pairs);
    (0..count)
        .map(|_| {
            let a = *elements.choose(rng).expect("non-empty");
            let b = *elements.choose(rng).expect("non-empty");
            (a, b)
        })
        .collect()
}

fn random_congruence(rng: &mut ChaCha8Rng, s: &FiniteSemigroup) -> RightCongruence {
    let elements: Vec<ElementId> = s.elements().collect();
    let pairs = random_pairs(rng, &elements, 3);
    rc_closure(s, &pairs).expect("pairs are in range")
}

/// All associative tables of the given order, by backtracking with partial
/// associativity pruning.
pub fn enumerate_associative_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    const UNSET: usize = usize::MAX;
    let mut table = vec![vec![UNSET; n]; n];
    let mut out = Vec::new();
    fn partial_ok(table: &[Vec<usize>], n: usize) -> bool {
        const UNSET: usize = usize::MAX;
        for x in 0..n {
            for y in 0..n {
                let xy = table[x][y];
                if xy == UNSET {
                    continue;
                }
                for z in 0..n {
                    let yz = table[y][z];
                    if yz == UNSET {
                        continue;
                    }
                    let left = table[xy][z];
                    let right = table[x][yz];
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn fill(table: &mut Vec<Vec<usize>>, cell: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if cell == n * n {
            out.push(table.clone());
            return;
        }
        let (r, c) = (cell / n, cell % n);
        for v in 0..n {
            table[r][c] = v;
            if partial_ok(table, n) {
                fill(table, cell + 1, n, out);
            }
        }
        table[r][c] = usize::MAX;
    }
    fill(&mut table, 0, n, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Criterion 1: closure equals the partition-filter oracle.
// ---------------------------------------------------------------------------

fn check_closure_oracle() -> Result<String, String> {
    let mut universes: Vec<FiniteSemigroup> = Vec::new();
    let expected_counts = [(1usize, 1usize), (2, 8), (3, 113)];
    for (order, expected) in expected_counts {
        let tables = enumerate_associative_tables(order);
        if tables.len() != expected {
            return Err(format!(
                "order-{order} enumeration found {} associative tables, expected {expected}",
                tables.len()
            ));
        }
        for t in tables {
            let s = FiniteSemigroup::validate(order, t, None, None)
                .map_err(|e| format!("enumerated table failed validation: {e}"))?;
            universes.push(s);
        }
    }
    let order4 = enumerate_associative_tables(4);
    if order4.len() != 3492 {
        return Err(format!("order-4 enumeration found {} tables, expected 3492", order4.len()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 0xC1);
    for _ in 0..30 {
        let t = order4.choose(&mut rng).expect("non-empty").clone();
        universes.push(
            FiniteSemigroup::validate(4, t, None, None)
                .map_err(|e| format!("sampled table failed validation: {e}"))?,
        );
    }
    let mut queries = 0usize;
    for (idx, s) in universes.iter().enumerate() {
        let lattice = enumerate_right_congruences(s)
            .map_err(|e| format!("enumeration failed: {e}"))?;
        let elements: Vec<ElementId> = s.elements().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 0xC1C1 ^ idx as u64);
        for _ in 0..20 {
            let pairs = random_pairs(&mut rng, &elements, 3);
            let direct = rc_closure(s, &pairs).map_err(|e| e.to_string())?;
            let oracle = closure_via_oracle(s, &pairs, &lattice);
            if direct != oracle {
                return Err(format!(
                    "closure mismatch on universe {idx} with pairs {pairs:?}"
                ));
            }
            queries += 1;
        }
    }
    Ok(format!(
        "{} universes (1+8+113 exhaustive, 30 random order-4), {queries} pair sets agree with the oracle",
        universes.len()
    ))
}

// ---------------------------------------------------------------------------
// Criterion 2: group congruences match subgroups.
// ---------------------------------------------------------------------------

fn check_group_correspondence() -> Result<String, String> {
    let cases = [
        ("Z2", gallery::cyclic(2), 2usize),
        ("Z6", gallery::cyclic(6), 4),
        ("V4", gallery::klein_four(), 5),
        ("S3", gallery::symmetric_3(), 6),
    ];
    let mut lines = Vec::new();
    for (name, g, expected) in cases {
        let congruences = enumerate_right_congruences(&g).map_err(|e| e.to_string())?;
        let subgroups = subgroups_of(&g).map_err(|e| e.to_string())?;
        if congruences.len() != expected || subgroups.len() != expected {
            return Err(format!(
                "{name}: {} congruences, {} subgroups, expected {expected}",
                congruences.len(),
                subgroups.len()
            ));
        }
        for sub in &subgroups {
            let rho = subgroup_to_congruence(&g, sub).map_err(|e| e.to_string())?;
            let back = crate::green::congruence_to_subgroup(&g, &rho).map_err(|e| e.to_string())?;
            if &back != sub {
                return Err(format!("{name}: subgroup round-trip failed for {sub:?}"));
            }
        }
        for rho in &congruences.congruences {
            let sub = crate::green::congruence_to_subgroup(&g, rho).map_err(|e| e.to_string())?;
            let back = subgroup_to_congruence(&g, &sub).map_err(|e| e.to_string())?;
            if &back != rho {
                return Err(format!("{name}: congruence round-trip failed"));
            }
        }
        lines.push(format!("{name}={expected}"));
    }
    Ok(format!("counts {} with both round-trips verified", lines.join(", ")))
}

// ---------------------------------------------------------------------------
// Criterion 3: right-zero semigroups have Bell-number many congruences.
// ---------------------------------------------------------------------------

fn check_bell_counts() -> Result<String, String> {
    let expected = [(2usize, 2usize), (3, 5), (4, 15)];
    for (n, bell) in expected {
        let got = enumerate_right_congruences(&gallery::right_zero(n))
            .map_err(|e| e.to_string())?
            .len();
        if got != bell {
            return Err(format!("RZ{n} has {got} right congruences, expected Bell({n}) = {bell}"));
        }
    }
    Ok("RZ2=2, RZ3=5, RZ4=15".into())
}

// ---------------------------------------------------------------------------
// Criterion 4: Schützenberger groups.
// ---------------------------------------------------------------------------

fn check_schutzenberger() -> Result<String, String> {
    let mut group_classes = 0usize;
    for (name, s) in corpus() {
        let green = green_partitions(&s);
        for h in green.h_classes() {
            let is_group_class = h.iter().any(|&x| s.mul(x, x) == x);
            if !is_group_class {
                continue;
            }
            let schutz = schutzenberger_group(&s, &h).map_err(|e| format!("{name}: {e}"))?;
            if schutz.order() != h.len() {
                return Err(format!(
                    "{name}: group H-class of size {} has Schützenberger group of order {}",
                    h.len(),
                    schutz.order()
                ));
            }
            for &x in &h {
                for &y in &h {
                    let movers = (0..schutz.order())
                        .filter(|&g| schutz.act(&s, ElementId(g), x) == y)
                        .count();
                    if movers != 1 {
                        return Err(format!("{name}: action is not regular ({movers} movers)"));
                    }
                }
            }
            group_classes += 1;
        }
    }
    let b = gallery::brandt(&gallery::cyclic(2), 2);
    let h = vec![b.encode(0, ElementId(0), 1), b.encode(0, ElementId(1), 1)];
    let schutz = schutzenberger_group(&b.semigroup, &h).map_err(|e| e.to_string())?;
    if schutz.order() != 2 {
        return Err(format!(
            "non-group H-class of B(Z2,2) has Schützenberger order {}, expected 2",
            schutz.order()
        ));
    }
    Ok(format!(
        "{group_classes} group H-classes across the corpus act regularly; non-group class order 2"
    ))
}

// ---------------------------------------------------------------------------
// Criterion 5: subgroup-lattice embedding.
// ---------------------------------------------------------------------------

fn check_lattice_embedding() -> Result<String, String> {
    let cases = [
        ("B(Z2,2)", gallery::brandt(&gallery::cyclic(2), 2)),
        ("B(Z4,2)", gallery::brandt(&gallery::cyclic(4), 2)),
        ("B(V4,2)", gallery::brandt(&gallery::klein_four(), 2)),
    ];
    let mut lines = Vec::new();
    for (name, b) in cases {
        let green = green_partitions(&b.semigroup);
        let mut checks = 0usize;
        let mut subgroup_counts = Vec::new();
        for h in green.h_classes() {
            let report =
                verify_lattice_embedding(&b.semigroup, &h).map_err(|e| format!("{name}: {e}"))?;
            if !report.pass {
                let failing: Vec<String> = report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| format!("{}{:?}", c.check, c.pair))
                    .collect();
                return Err(format!("{name}: embedding failed at {}", failing.join(", ")));
            }
            checks += report.checks.len();
            subgroup_counts.push(report.subgroup_count);
        }
        subgroup_counts.sort();
        subgroup_counts.dedup();
        lines.push(format!("{name}: {checks} checks, subgroup lattices {subgroup_counts:?}"));
    }
    Ok(lines.join("; "))
}

// ---------------------------------------------------------------------------
// Criterion 6: transfer soundness over randomized contexts.
// ---------------------------------------------------------------------------

const CONTEXTS_PER_KIND: usize = 50;

fn two_part_diagram(
    rng: &mut ChaCha8Rng,
    parts_pool: &[FiniteSemigroup],
) -> SemilatticeDiagram {
    // Constant-to-idempotent maps always compose; identity maps are used
    // when both parts share a table.
    let y = gallery::chain_semilattice(2);
    let top = parts_pool.choose(rng).expect("non-empty pool").clone();
    let bottom = parts_pool.choose(rng).expect("non-empty pool").clone();
    let same = top.same_table(&bottom) && rng.random_bool(0.5);
    let lowest_idempotent = |s: &FiniteSemigroup| {
        s.identity()
            .or_else(|| s.elements().find(|&x| s.mul(x, x) == x))
            .expect("finite semigroups contain an idempotent")
    };
    let hom: Vec<usize> = if same {
        (0..top.order()).collect()
    } else {
        vec![lowest_idempotent(&bottom).0; top.order()]
    };
    SemilatticeDiagram {
        semilattice: y,
        parts: vec![bottom.clone(), top],
        homs: vec![
            vec![Some((0..bottom.order()).collect()), None],
            vec![Some(hom), None],
        ],
    }
}

fn fix_reflexive_homs(mut d: SemilatticeDiagram) -> SemilatticeDiagram {
    for (alpha, part) in d.parts.iter().enumerate() {
        d.homs[alpha][alpha] = Some((0..part.order()).collect());
    }
    d
}

fn random_strong_semilattice(rng: &mut ChaCha8Rng, parts_pool: &[FiniteSemigroup]) -> StrongSemilattice {
    let d = fix_reflexive_homs(two_part_diagram(rng, parts_pool));
    strong_semilattice(&d, false).expect("catalogue diagrams are valid")
}

/// A right act assembled from one or two cyclic quotients of S¹, with its
/// generating set.
///
/// For a monoid the quotient is taken over S itself so the identity fixes
/// every carrier point; otherwise the identity is adjoined first.
fn random_act(rng: &mut ChaCha8Rng, s: &FiniteSemigroup) -> (RightActData, Vec<usize>) {
    let (universe, one) = match s.identity() {
        Some(e) => (s.clone(), e),
        None => (s.adjoin(Adjoin::Identity), ElementId(s.order())),
    };
    let pieces = rng.random_range(1..=2);
    let mut carrier = 0usize;
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut gens = Vec::new();
    for _ in 0..pieces {
        let rho = random_congruence(rng, &universe);
        let classes = rho.classes();
        let offset = carrier;
        // The class of the identity generates the cyclic piece.
        gens.push(offset + rho.class_of(one));
        for class in &classes {
            let representative = class[0];
            let row: Vec<usize> = s
                .elements()
                .map(|t| offset + rho.class_of(universe.mul(representative, t)))
                .collect();
            table.push(row);
        }
        carrier += classes.len();
    }
    (RightActData { carrier, table }, gens)
}

fn transfer_context_run(kind: TransferKind, index: usize) -> Result<TransferRecipe, String> {
    let mut rng = rng_for(kind as usize, index);
    let semigroups = semigroup_pool();
    let monoids = monoid_pool();
    let groups = group_pool();
    let outcome = match kind {
        TransferKind::RestrictionLeftIdeal => {
            let s = semigroups[index % semigroups.len()].clone();
            if index % 2 == 0 {
                let t = semigroups[(index / 2) % semigroups.len()].clone();
                let u = zero_direct_union(&s, &t).map_err(|e| e.to_string())?;
                let part: Vec<ElementId> = (0..s.order()).map(ElementId).collect();
                let pairs = random_pairs(&mut rng, &part, 3);
                transfer::left_ideal_restriction(&u.semigroup, &part, &pairs)
            } else {
                let (act, _) = random_act(&mut rng, &s);
                let ext = act_extension(&s, &act).map_err(|e| e.to_string())?;
                let base = ext.base_elements();
                let pairs = random_pairs(&mut rng, &base, 3);
                transfer::left_ideal_restriction(&ext.semigroup, &base, &pairs)
            }
        }
        TransferKind::RestrictionStabiliser => {
            let s = semigroups[index % semigroups.len()].clone();
            let elements: Vec<ElementId> = s.elements().collect();
            let size = rng.random_range(1..=s.order());
            let mut subset: Vec<ElementId> = elements.clone();
            while subset.len() > size {
                let drop = rng.random_range(0..subset.len());
                subset.remove(drop);
            }
            let stab = crate::green::right_stabilizer(&s, &subset).map_err(|e| e.to_string())?;
            let stab_elements: Vec<ElementId> = stab.monoid.elements().collect();
            let pairs = random_pairs(&mut rng, &stab_elements, 3);
            transfer::stabilizer_restriction(&s, &subset, &pairs)
        }
        TransferKind::RestrictionMonoidComponent => {
            let ssl = random_strong_semilattice(&mut rng, &monoids);
            let beta = rng.random_range(0..ssl.diagram.parts.len());
            let part = ssl.part_elements(beta);
            let pairs = random_pairs(&mut rng, &part, 3);
            transfer::monoid_component_restriction(&ssl, beta, &pairs)
        }
        TransferKind::FiniteComplementDown | TransferKind::FiniteComplementUp => {
            let s = semigroups[index % semigroups.len()].clone();
            let elements: Vec<ElementId> = s.elements().collect();
            let seed = *elements.choose(&mut rng).expect("non-empty");
            let t = s.subsemigroup(&[seed]).map_err(|e| e.to_string())?;
            if kind == TransferKind::FiniteComplementDown {
                let pairs = random_pairs(&mut rng, &t, 3);
                transfer::finite_complement_down(&s, &t, &pairs)
            } else {
                let rho = random_congruence(&mut rng, &s);
                transfer::finite_complement_up(&s, &t, &rho)
            }
        }
        TransferKind::Quotient => {
            let s = semigroups[index % semigroups.len()].clone();
            match index % 3 {
                0 => {
                    // Collapse onto the trivial semigroup.
                    let t = gallery::cyclic(1);
                    let theta = vec![ElementId(0); s.order()];
                    transfer::quotient_transfer(&s, &t, &theta, &[])
                }
                1 => {
                    let other = semigroups[(index / 3) % semigroups.len()].clone();
                    let dp = direct_product(&s, &other).map_err(|e| e.to_string())?;
                    let t_elements: Vec<ElementId> = s.elements().collect();
                    let pairs = random_pairs(&mut rng, &t_elements, 3);
                    transfer::quotient_transfer(&dp.semigroup, &s, &dp.proj_left, &pairs)
                }
                _ => {
                    let z4 = gallery::cyclic(4);
                    let z2 = gallery::cyclic(2);
                    let theta: Vec<ElementId> = [0, 1, 0, 1].map(ElementId).to_vec();
                    let t_elements: Vec<ElementId> = z2.elements().collect();
                    let pairs = random_pairs(&mut rng, &t_elements, 2);
                    transfer::quotient_transfer(&z4, &z2, &theta, &pairs)
                }
            }
        }
        TransferKind::IdealExtension => {
            let s = semigroups[index % semigroups.len()].clone();
            let elements: Vec<ElementId> = s.elements().collect();
            let seed = *elements.choose(&mut rng).expect("non-empty");
            let ideal = s.two_sided_ideal(&[seed]).map_err(|e| e.to_string())?;
            let rho = random_congruence(&mut rng, &s);
            transfer::ideal_extension(&s, &ideal, &rho)
        }
        TransferKind::GroupToSubgroupGens => {
            let g = groups[index % groups.len()].clone();
            let rho = random_congruence(&mut rng, &g);
            transfer::group_to_subgroup_gens(&g, &rho)
        }
        TransferKind::GroupToCongruenceGens => {
            let g = groups[index % groups.len()].clone();
            let elements: Vec<ElementId> = g.elements().collect();
            let size = rng.random_range(0..=2.min(g.order()));
            let x: Vec<ElementId> =
                (0..size).map(|_| *elements.choose(&mut rng).expect("non-empty")).collect();
            transfer::group_to_congruence_gens(&g, &x)
        }
        TransferKind::DpFiniteMonoid => {
            let m = monoids[index % monoids.len()].clone();
            let s = semigroups[(index / monoids.len()) % semigroups.len()].clone();
            let dp = direct_product(&m, &s).map_err(|e| e.to_string())?;
            let rho = random_congruence(&mut rng, &dp.semigroup);
            transfer::dp_finite_monoid(&dp, &rho)
        }
        TransferKind::SliceRepresentatives => {
            let m = monoids[index % monoids.len()].clone();
            let n = monoids[(index / monoids.len()) % monoids.len()].clone();
            let dp = direct_product(&m, &n).map_err(|e| e.to_string())?;
            let rho = random_congruence(&mut rng, &dp.semigroup);
            transfer::slice_representatives(&dp, &rho)
        }
        TransferKind::DpGroup => {
            let g = groups[index % groups.len()].clone();
            let m = monoids[(index / groups.len()) % monoids.len()].clone();
            let dp = direct_product(&g, &m).map_err(|e| e.to_string())?;
            let rho = random_congruence(&mut rng, &dp.semigroup);
            transfer::dp_group(&dp, &rho)
        }
        TransferKind::DpBrandt => {
            let g = [gallery::cyclic(1), gallery::cyclic(2), gallery::cyclic(3)]
                [index % 3]
                .clone();
            let k = 1 + index % 2;
            let b = brandt(&g, k).map_err(|e| e.to_string())?;
            let m = [gallery::cyclic(1), gallery::cyclic(2), gallery::chain_semilattice(2)]
                [(index / 3) % 3]
                .clone();
            let dp = direct_product(&b.semigroup, &m).map_err(|e| e.to_string())?;
            let rho = random_congruence(&mut rng, &dp.semigroup);
            transfer::dp_brandt(&b, &dp, &rho)
        }
        TransferKind::SdpSubgroup => {
            let sdp = match index % 4 {
                0 => {
                    let action = SemigroupAction { table: vec![vec![0, 1, 2], vec![0, 2, 1]] };
                    semidirect_product(&gallery::cyclic(3), &gallery::cyclic(2), &action)
                }
                1 => {
                    let action =
                        SemigroupAction { table: vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]] };
                    semidirect_product(&gallery::cyclic(4), &gallery::cyclic(2), &action)
                }
                2 => {
                    let g = gallery::klein_four();
                    let swap = SemigroupAction {
                        table: vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]],
                    };
                    semidirect_product(&g, &gallery::cyclic(2), &swap)
                }
                _ => {
                    let g = groups[index % groups.len()].clone();
                    let h = gallery::cyclic(2);
                    semidirect_product(&g, &h, &SemigroupAction::trivial(&h, &g))
                }
            }
            .map_err(|e| e.to_string())?;
            let subs = subgroups_of(&sdp.semigroup).map_err(|e| e.to_string())?;
            let sub = subs.choose(&mut rng).expect("non-empty").clone();
            transfer::sdp_subgroup(&sdp, &sub)
        }
        TransferKind::SdpFactor => {
            let s = semigroups[index % semigroups.len()].clone();
            let t = semigroups[(index / semigroups.len()) % semigroups.len()].clone();
            let sdp = semidirect_product(&s, &t, &SemigroupAction::trivial(&t, &s))
                .map_err(|e| e.to_string())?;
            let rho = random_congruence(&mut rng, &s);
            transfer::sdp_factor(&sdp, &rho)
        }
        TransferKind::Semilattice => {
            let ssl = random_strong_semilattice(&mut rng, &semigroups);
            let rho = random_congruence(&mut rng, &ssl.semigroup);
            transfer::semilattice_transfer(&ssl, &rho)
        }
        TransferKind::ActExtension => {
            let s = semigroups[index % semigroups.len()].clone();
            let (act, gens) = random_act(&mut rng, &s);
            let ext = act_extension(&s, &act).map_err(|e| e.to_string())?;
            let rho = random_congruence(&mut rng, &ext.semigroup);
            transfer::act_extension_transfer(&ext, &gens, &rho)
        }
        TransferKind::ActExtensionGenerators => {
            let s = semigroups[index % semigroups.len()].clone();
            // Retry until the carrier has at least two points.
            let ext = loop {
                let (act, _) = random_act(&mut rng, &s);
                if act.carrier >= 2 {
                    break act_extension(&s, &act).map_err(|e| e.to_string())?;
                }
            };
            transfer::act_extension_generators(&ext)
        }
        TransferKind::InverseSemilattice => {
            let (s, t): (FiniteSemigroup, Vec<ElementId>) = match index % 4 {
                0 => {
                    let b = gallery::brandt(&gallery::cyclic(2), 2);
                    let all = b.semigroup.elements().collect();
                    (b.semigroup, all)
                }
                1 => {
                    let g = groups[index % groups.len()].clone();
                    let all = g.elements().collect();
                    (g, all)
                }
                2 => {
                    let c = gallery::chain_semilattice(3);
                    let all = c.elements().collect();
                    (c, all)
                }
                _ => {
                    let b = gallery::brandt(&gallery::cyclic(3), 2);
                    let all = b.semigroup.elements().collect();
                    (b.semigroup, all)
                }
            };
            // Pairs over the idempotents of T.
            let idempotents: Vec<ElementId> = t
                .iter()
                .copied()
                .filter(|&x| s.mul(x, x) == x)
                .collect();
            let pairs = random_pairs(&mut rng, &idempotents, 3);
            transfer::inverse_semilattice_transfer(&s, &t, &pairs)
        }
    };
    outcome.map_err(|e| format!("{} context {index}: {e}", kind.name()))
}

fn check_transfer_soundness() -> Result<String, String> {
    let mut total = 0usize;
    for kind in TransferKind::ALL {
        for index in 0..CONTEXTS_PER_KIND {
            let recipe = transfer_context_run(kind, index)?;
            if !recipe.verified {
                return Err(format!("{} context {index}: unverified recipe", kind.name()));
            }
            total += 1;
        }
    }
    Ok(format!("{} kinds x {CONTEXTS_PER_KIND} randomized contexts = {total} verified recipes", TransferKind::ALL.len()))
}

// ---------------------------------------------------------------------------
// Criterion 7: minimal generating sets on products with a right zero.
// ---------------------------------------------------------------------------

fn check_right_zero_product_minimality() -> Result<String, String> {
    let rz2 = gallery::right_zero(2);
    let mut lines = Vec::new();
    for n in [2usize, 3, 4] {
        let s = gallery::cyclic(n);
        let dp = direct_product(&s, &rz2).map_err(|e| e.to_string())?;
        let x: Vec<(ElementId, ElementId)> = (0..n)
            .map(|i| {
                (dp.encode(ElementId(i), ElementId(0)), dp.encode(ElementId(i), ElementId(1)))
            })
            .collect();
        let rho = rc_closure(&dp.semigroup, &x).map_err(|e| e.to_string())?;
        if rho.num_classes() != n {
            return Err(format!("Z{n}xRZ2: closure has {} classes, expected {n}", rho.num_classes()));
        }
        let (gens, mode) = minimal_generating_set(&dp.semigroup, &rho).map_err(|e| e.to_string())?;
        if gens.len() != n || mode != MinimalityMode::Exact {
            return Err(format!(
                "Z{n}xRZ2: minimal generating set has {} pairs in mode {mode:?}, expected {n} exact",
                gens.len()
            ));
        }
        for omit in 0..n {
            let rest: Vec<(ElementId, ElementId)> = x
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != omit)
                .map(|(_, &p)| p)
                .collect();
            match consequence(&dp.semigroup, &rest, x[omit].0, x[omit].1)
                .map_err(|e| e.to_string())?
            {
                Consequence::Disproven => {}
                Consequence::Proven(_) => {
                    return Err(format!(
                        "Z{n}xRZ2: omitted pair {omit} still follows from the rest"
                    ));
                }
            }
        }
        lines.push(format!("Z{n}: {n} pairs, all {n} omissions disproven"));
    }
    Ok(lines.join("; "))
}

// ---------------------------------------------------------------------------
// Criterion 8: normal-form witnesses.
// ---------------------------------------------------------------------------

fn check_normal_form_witnesses() -> Result<String, String> {
    let fc = NormalFormSemigroup::new(Family::FreeCommutative(2)).map_err(|e| e.to_string())?;
    let report = witness_indecomposables(&fc, 6).map_err(|e| e.to_string())?;
    let expected: Vec<Word> =
        (0..6u32).map(|i| Word::Vector(vec![1, i])).collect();
    if report.elements != expected || report.count != 6 {
        return Err(format!("indecomposables: got {} elements", report.count));
    }
    let pair = NormalFormSemigroup::new(Family::IdempotentPair).map_err(|e| e.to_string())?;
    let mut covered = 0usize;
    for w in pair.ball(12).map_err(|e| e.to_string())? {
        let class = classify_alternating(&pair, &w).map_err(|e| e.to_string())?;
        let len = pair.len(&w);
        match class {
            Classification::PowerOf { .. } if len >= 2 => covered += 1,
            Classification::Atom(_) if len == 1 => {}
            other => return Err(format!("unexpected classification {other} at length {len}")),
        }
    }
    let sfp = NormalFormSemigroup::new(Family::FreeProduct(
        Box::new(gallery::cyclic(2)),
        Box::new(gallery::right_zero(2)),
    ))
    .map_err(|e| e.to_string())?;
    let sfp_report =
        witness_incomparable_ideals(&sfp, ProductKind::Sfp, 3, 16).map_err(|e| e.to_string())?;
    if !sfp_report.pass || sfp_report.refuted.len() != 6 {
        return Err("sfp incomparability failed".into());
    }
    let mfp = NormalFormSemigroup::new(Family::MonoidFreeProduct(
        Box::new(gallery::chain_semilattice(2)),
        Box::new(gallery::chain_semilattice(3)),
    ))
    .map_err(|e| e.to_string())?;
    let mfp_report =
        witness_incomparable_ideals(&mfp, ProductKind::Mfp, 3, 22).map_err(|e| e.to_string())?;
    if !mfp_report.pass || mfp_report.refuted.len() != 6 {
        return Err("mfp incomparability failed".into());
    }
    // Bounded derivation: from (u1^2, u1 a) the pair (u1^3, u1) is proven
    // inside ball(8) and its certificate replays.
    let flip = NormalFormSemigroup::new(Family::FlipIdem).map_err(|e| e.to_string())?;
    let pairs = vec![(Word::Letters("abab".into()), Word::Letters("aba".into()))];
    let pc = bounded_rc_closure(&flip, &pairs, 8).map_err(|e| e.to_string())?;
    match pc.query(&flip, &Word::Letters("ababab".into()), &Word::Letters("ab".into())) {
        BoundedVerdict::Proven(seq) => {
            let end = seq
                .replay(&flip, &pairs, &Word::Letters("ababab".into()))
                .map_err(|e| e.to_string())?;
            if end != Word::Letters("ab".into()) {
                return Err("derivation replay reached the wrong endpoint".into());
            }
        }
        BoundedVerdict::Unknown => return Err("derivation not found inside ball(8)".into()),
    }
    Ok(format!(
        "indecomposables ab^0..ab^5; {covered} classified power words in ball(12); 6+6 incomparabilities; bounded derivation replayed"
    ))
}

// ---------------------------------------------------------------------------
// Criterion 9: certificate audit.
// ---------------------------------------------------------------------------

fn check_certificate_audit() -> Result<String, String> {
    let mut proven = 0usize;
    let mut disproven = 0usize;
    for (idx, (name, s)) in corpus().into_iter().enumerate() {
        let elements: Vec<ElementId> = s.elements().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 0xC9 ^ (idx as u64) << 8);
        for _ in 0..10 {
            let pairs = random_pairs(&mut rng, &elements, 3);
            let closure = rc_closure(&s, &pairs).map_err(|e| e.to_string())?;
            for _ in 0..10 {
                let a = *elements.choose(&mut rng).expect("non-empty");
                let b = *elements.choose(&mut rng).expect("non-empty");
                match consequence(&s, &pairs, a, b).map_err(|e| e.to_string())? {
                    Consequence::Proven(seq) => {
                        let end = seq.replay(&s, &pairs, a).map_err(|e| {
                            format!("{name}: certificate replay failed: {e}")
                        })?;
                        if end != b {
                            return Err(format!("{name}: replay ended at {end} instead of {b}"));
                        }
                        if !closure.are_related(a, b) {
                            return Err(format!("{name}: proven pair not in the closure"));
                        }
                        proven += 1;
                    }
                    Consequence::Disproven => {
                        if closure.are_related(a, b) {
                            return Err(format!("{name}: disproven pair lies in the closure"));
                        }
                        disproven += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{proven} certificates replayed, {disproven} refusals cross-checked"))
}

// ---------------------------------------------------------------------------
// Criterion 10: construction conformance.
// ---------------------------------------------------------------------------

fn check_construction_conformance() -> Result<String, String> {
    // Brandt sizes and the multiplication rule, recomputed from coordinates.
    for (g, k) in [
        (gallery::cyclic(2), 2usize),
        (gallery::cyclic(3), 2),
        (gallery::klein_four(), 2),
        (gallery::cyclic(2), 3),
    ] {
        let b = brandt(&g, k).map_err(|e| e.to_string())?;
        let expected_order = k * k * g.order() + 1;
        if b.semigroup.order() != expected_order {
            return Err(format!(
                "Brandt order {} expected {expected_order}",
                b.semigroup.order()
            ));
        }
        for x in b.semigroup.elements() {
            for y in b.semigroup.elements() {
                let expected = match (b.decode(x), b.decode(y)) {
                    (Some((i, gg, j)), Some((kk, h, l))) if j == kk => {
                        b.encode(i, g.mul(gg, h), l)
                    }
                    _ => b.zero,
                };
                if b.semigroup.mul(x, y) != expected {
                    return Err(format!("Brandt rule mismatch at ({}, {})", x.0, y.0));
                }
            }
        }
    }
    // Wreath product size and identity.
    for (m, n) in [
        (gallery::cyclic(2), gallery::cyclic(2)),
        (gallery::chain_semilattice(2), gallery::cyclic(2)),
        (gallery::cyclic(3), gallery::cyclic(2)),
    ] {
        let wr = wreath_product(&m, &n).map_err(|e| e.to_string())?;
        let expected = m.order().pow(n.order() as u32) * n.order();
        if wr.semigroup().order() != expected {
            return Err(format!(
                "wreath order {} expected {expected}",
                wr.semigroup().order()
            ));
        }
        let c1 = wr.space.constant(m.identity().expect("monoid").0);
        let expected_identity = wr.encode(c1, n.identity().expect("monoid"));
        if wr.semigroup().identity() != Some(expected_identity) {
            return Err("wreath identity is not (c_1, 1)".into());
        }
    }
    // Trivial-action semidirect products coincide with direct products.
    for (s, t) in [
        (gallery::cyclic(3), gallery::right_zero(2)),
        (gallery::null_semigroup(3), gallery::cyclic(2)),
    ] {
        let sdp = semidirect_product(&s, &t, &SemigroupAction::trivial(&t, &s))
            .map_err(|e| e.to_string())?;
        let dp = direct_product(&s, &t).map_err(|e| e.to_string())?;
        if !sdp.semigroup.same_table(&dp.semigroup) {
            return Err("trivial-action semidirect product differs from the direct product".into());
        }
    }
    // Act extensions install the carrier as a two-sided ideal; the act is
    // the regular act of Z3 on itself.
    let s = gallery::cyclic(3);
    let act = RightActData { carrier: 3, table: vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]] };
    let ext = act_extension(&s, &act).map_err(|e| e.to_string())?;
    let carrier = ext.act_elements();
    if !ext.semigroup.is_two_sided_ideal(&carrier) {
        return Err("act carrier is not a two-sided ideal".into());
    }
    let ideal = ext.semigroup.right_ideal(&carrier).map_err(|e| e.to_string())?;
    if ideal.members != carrier {
        return Err("act carrier is not closed as a right ideal".into());
    }
    Ok("Brandt sizes and rule, wreath sizes and identities, trivial semidirect products, act ideals".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn associative_table_counts_match_known_values() {
        assert_eq!(enumerate_associative_tables(1).len(), 1);
        assert_eq!(enumerate_associative_tables(2).len(), 8);
        assert_eq!(enumerate_associative_tables(3).len(), 113);
    }

    #[test]
    fn random_acts_validate() {
        for (i, s) in semigroup_pool().into_iter().enumerate() {
            let mut rng = rng_for(999, i);
            let (act, gens) = random_act(&mut rng, &s);
            act.validate(&s).expect("cyclic quotient acts satisfy the axioms");
            assert!(!gens.is_empty());
        }
    }

    #[test]
    fn check_registry_is_complete_and_filterable() {
        assert_eq!(check_names().len(), 10);
        assert!(run_check("right-zero-bell-counts").unwrap().passed);
        assert!(run_all(Some("no-such-check")).is_empty());
    }

    #[test]
    fn one_randomized_context_per_kind_verifies() {
        for kind in TransferKind::ALL {
            let recipe = transfer_context_run(kind, 0).unwrap();
            assert!(recipe.verified, "{} failed", kind.name());
        }
    }
}
