//! JSON context bundles for the `transfer` subcommand.
//!
//! A bundle names every object a recipe kind needs: semigroup tables,
//! element subsets, congruences (as classes or generating pairs), maps,
//! actions, acts, semilattice diagrams, and scalar parameters. Congruences
//! over product or extension constructions use the construction's element
//! encoding (left-major for products; base then carrier for act
//! extensions).

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;

use sgwb_core::congruence::{rc_closure, RightCongruence};
use sgwb_core::construct::{
    act_extension, brandt, direct_product, semidirect_product, strong_semilattice, RightActData,
    SemigroupAction,
};
use sgwb_core::semigroup::{ElementId, FiniteSemigroup, TableFile};
use sgwb_core::transfer::{self, TransferError, TransferKind, TransferRecipe};

use crate::builder::{build_diagram, ActFile, ActionFile, DiagramFile};
use crate::CliError;

#[derive(Debug, Deserialize, Default)]
pub struct ContextBundle {
    #[serde(default)]
    pub semigroups: BTreeMap<String, TableFile>,
    #[serde(default)]
    pub subsets: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub congruences: BTreeMap<String, ClassesFile>,
    #[serde(default)]
    pub pairs: BTreeMap<String, Vec<(usize, usize)>>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub actions: BTreeMap<String, ActionFile>,
    #[serde(default)]
    pub acts: BTreeMap<String, ActFile>,
    #[serde(default)]
    pub diagrams: BTreeMap<String, DiagramFile>,
    #[serde(default)]
    pub elements: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

#[derive(Debug, Deserialize)]
pub struct ClassesFile {
    pub classes: Vec<Vec<usize>>,
}

fn missing(section: &str, name: &str) -> CliError {
    CliError::Input(format!("bundle is missing {section}[{name:?}]"))
}

impl ContextBundle {
    fn semigroup(&self, name: &str) -> Result<FiniteSemigroup, CliError> {
        let table = self.semigroups.get(name).ok_or_else(|| missing("semigroups", name))?;
        FiniteSemigroup::from_table_file(table.clone())
            .map_err(|e| CliError::Input(format!("semigroups[{name:?}] invalid: {e}")))
    }

    fn subset(&self, name: &str) -> Result<Vec<ElementId>, CliError> {
        Ok(self
            .subsets
            .get(name)
            .ok_or_else(|| missing("subsets", name))?
            .iter()
            .map(|&i| ElementId(i))
            .collect())
    }

    fn element_list(&self, name: &str) -> Result<Vec<ElementId>, CliError> {
        Ok(self
            .elements
            .get(name)
            .ok_or_else(|| missing("elements", name))?
            .iter()
            .map(|&i| ElementId(i))
            .collect())
    }

    fn pair_list(&self, name: &str) -> Result<Vec<(ElementId, ElementId)>, CliError> {
        Ok(self
            .pairs
            .get(name)
            .ok_or_else(|| missing("pairs", name))?
            .iter()
            .map(|&(a, b)| (ElementId(a), ElementId(b)))
            .collect())
    }

    /// A congruence on `s`: explicit classes when given, otherwise the
    /// closure of the generating pairs.
    fn congruence_on(&self, name: &str, s: &FiniteSemigroup) -> Result<RightCongruence, CliError> {
        if let Some(classes) = self.congruences.get(name) {
            return RightCongruence::from_classes(s, &classes.classes)
                .map_err(|e| CliError::Input(format!("congruences[{name:?}] invalid: {e}")));
        }
        if let Some(pairs) = self.pairs.get(name) {
            let pairs: Vec<(ElementId, ElementId)> =
                pairs.iter().map(|&(a, b)| (ElementId(a), ElementId(b))).collect();
            return rc_closure(s, &pairs)
                .map_err(|e| CliError::Input(format!("pairs[{name:?}] invalid: {e}")));
        }
        Err(missing("congruences (or pairs)", name))
    }

    fn param_usize(&self, name: &str) -> Result<usize, CliError> {
        self.params
            .get(name)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| missing("params", name))
    }

    fn action(&self, name: &str, actor: &FiniteSemigroup, acted: &FiniteSemigroup) -> SemigroupAction {
        match self.actions.get(name) {
            Some(file) => SemigroupAction { table: file.table.clone() },
            None => SemigroupAction::trivial(actor, acted),
        }
    }
}

fn transfer_error(e: TransferError) -> CliError {
    match e {
        TransferError::VerificationFailed { .. } => CliError::Verification(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

/// Dispatches a named kind over a bundle.
pub fn run_transfer(kind_name: &str, bundle: &ContextBundle) -> Result<TransferRecipe, CliError> {
    let kind = TransferKind::from_name(kind_name)
        .ok_or_else(|| CliError::Input(format!("unknown transfer kind {kind_name:?}")))?;
    let result = match kind {
        TransferKind::RestrictionLeftIdeal => {
            let s = bundle.semigroup("S")?;
            let t = bundle.subset("T")?;
            let pairs = bundle.pair_list("rho")?;
            transfer::left_ideal_restriction(&s, &t, &pairs)
        }
        TransferKind::RestrictionStabiliser => {
            let s = bundle.semigroup("S")?;
            let x = bundle.subset("X")?;
            let pairs = bundle.pair_list("rho")?;
            transfer::stabilizer_restriction(&s, &x, &pairs)
        }
        TransferKind::RestrictionMonoidComponent => {
            let file = bundle.diagrams.get("D").ok_or_else(|| missing("diagrams", "D"))?;
            let (diagram, adjoin) = build_diagram(file.clone())?;
            let ssl = strong_semilattice(&diagram, adjoin)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let beta = bundle.param_usize("beta")?;
            let pairs = bundle.pair_list("rho")?;
            transfer::monoid_component_restriction(&ssl, beta, &pairs)
        }
        TransferKind::FiniteComplementDown => {
            let s = bundle.semigroup("S")?;
            let t = bundle.subset("T")?;
            let pairs = bundle.pair_list("rho")?;
            transfer::finite_complement_down(&s, &t, &pairs)
        }
        TransferKind::FiniteComplementUp => {
            let s = bundle.semigroup("S")?;
            let t = bundle.subset("T")?;
            let rho = bundle.congruence_on("rho", &s)?;
            transfer::finite_complement_up(&s, &t, &rho)
        }
        TransferKind::Quotient => {
            let s = bundle.semigroup("S")?;
            let t = bundle.semigroup("T")?;
            let theta: Vec<ElementId> = bundle
                .maps
                .get("theta")
                .ok_or_else(|| missing("maps", "theta"))?
                .iter()
                .map(|&i| ElementId(i))
                .collect();
            let pairs = bundle.pair_list("rho")?;
            transfer::quotient_transfer(&s, &t, &theta, &pairs)
        }
        TransferKind::IdealExtension => {
            let s = bundle.semigroup("S")?;
            let ideal = bundle.subset("I")?;
            let rho = bundle.congruence_on("rho", &s)?;
            transfer::ideal_extension(&s, &ideal, &rho)
        }
        TransferKind::GroupToSubgroupGens => {
            let g = bundle.semigroup("G")?;
            let rho = bundle.congruence_on("rho", &g)?;
            transfer::group_to_subgroup_gens(&g, &rho)
        }
        TransferKind::GroupToCongruenceGens => {
            let g = bundle.semigroup("G")?;
            let x = bundle.element_list("X")?;
            transfer::group_to_congruence_gens(&g, &x)
        }
        TransferKind::DpFiniteMonoid => {
            let m = bundle.semigroup("M")?;
            let s = bundle.semigroup("S")?;
            let dp = direct_product(&m, &s).map_err(|e| CliError::Input(e.to_string()))?;
            let rho = bundle.congruence_on("rho", &dp.semigroup)?;
            transfer::dp_finite_monoid(&dp, &rho)
        }
        TransferKind::SliceRepresentatives => {
            let m = bundle.semigroup("M")?;
            let n = bundle.semigroup("N")?;
            let dp = direct_product(&m, &n).map_err(|e| CliError::Input(e.to_string()))?;
            let rho = bundle.congruence_on("rho", &dp.semigroup)?;
            transfer::slice_representatives(&dp, &rho)
        }
        TransferKind::DpGroup => {
            let g = bundle.semigroup("G")?;
            let m = bundle.semigroup("M")?;
            let dp = direct_product(&g, &m).map_err(|e| CliError::Input(e.to_string()))?;
            let rho = bundle.congruence_on("rho", &dp.semigroup)?;
            transfer::dp_group(&dp, &rho)
        }
        TransferKind::DpBrandt => {
            let g = bundle.semigroup("G")?;
            let k = bundle.param_usize("index_size")?;
            let b = brandt(&g, k).map_err(|e| CliError::Input(e.to_string()))?;
            let m = bundle.semigroup("M")?;
            let dp = direct_product(&b.semigroup, &m).map_err(|e| CliError::Input(e.to_string()))?;
            let rho = bundle.congruence_on("rho", &dp.semigroup)?;
            transfer::dp_brandt(&b, &dp, &rho)
        }
        TransferKind::SdpSubgroup => {
            let g = bundle.semigroup("G")?;
            let h = bundle.semigroup("H")?;
            let action = bundle.action("act", &h, &g);
            let sdp = semidirect_product(&g, &h, &action)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let sub = bundle.element_list("S")?;
            transfer::sdp_subgroup(&sdp, &sub)
        }
        TransferKind::SdpFactor => {
            let s = bundle.semigroup("S")?;
            let t = bundle.semigroup("T")?;
            let action = bundle.action("act", &t, &s);
            let sdp = semidirect_product(&s, &t, &action)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let rho = bundle.congruence_on("rho", &s)?;
            transfer::sdp_factor(&sdp, &rho)
        }
        TransferKind::Semilattice => {
            let file = bundle.diagrams.get("D").ok_or_else(|| missing("diagrams", "D"))?;
            let (diagram, adjoin) = build_diagram(file.clone())?;
            let ssl = strong_semilattice(&diagram, adjoin)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let rho = bundle.congruence_on("rho", &ssl.semigroup)?;
            transfer::semilattice_transfer(&ssl, &rho)
        }
        TransferKind::ActExtension => {
            let s = bundle.semigroup("S")?;
            let act_file = bundle.acts.get("A").ok_or_else(|| missing("acts", "A"))?;
            let act = RightActData { carrier: act_file.carrier, table: act_file.table.clone() };
            let ext = act_extension(&s, &act).map_err(|e| CliError::Input(e.to_string()))?;
            let gens: Vec<usize> =
                bundle.elements.get("X").ok_or_else(|| missing("elements", "X"))?.clone();
            let rho = bundle.congruence_on("rho", &ext.semigroup)?;
            transfer::act_extension_transfer(&ext, &gens, &rho)
        }
        TransferKind::ActExtensionGenerators => {
            let s = bundle.semigroup("S")?;
            let act_file = bundle.acts.get("A").ok_or_else(|| missing("acts", "A"))?;
            let act = RightActData { carrier: act_file.carrier, table: act_file.table.clone() };
            let ext = act_extension(&s, &act).map_err(|e| CliError::Input(e.to_string()))?;
            transfer::act_extension_generators(&ext)
        }
        TransferKind::InverseSemilattice => {
            let s = bundle.semigroup("S")?;
            let t = bundle.subset("T")?;
            let pairs = bundle.pair_list("rho")?;
            transfer::inverse_semilattice_transfer(&s, &t, &pairs)
        }
    };
    result.map_err(transfer_error)
}
