//! Builds semigroups from expressions and their referenced files.

use std::path::Path;

use serde::Deserialize;

use sgwb_core::construct::{self, RightActData, SemigroupAction, SemilatticeDiagram};
use sgwb_core::gallery;
use sgwb_core::semigroup::{ElementId, FiniteSemigroup, TableFile};

use crate::expr::{parse_expression, Expr};
use crate::CliError;

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T, CliError> {
    if !Path::new(path).exists() {
        return Err(CliError::Input(format!("file not found: {path}")));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("cannot parse {path}: {e}")))
}

pub fn load_table_file(path: &str) -> Result<FiniteSemigroup, CliError> {
    let file: TableFile = read_json(path)?;
    FiniteSemigroup::from_table_file(file)
        .map_err(|e| CliError::Verification(format!("table {path} is invalid: {e}")))
}

#[derive(Debug, Clone, Deserialize)]
pub struct ActionFile {
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ActFile {
    pub carrier: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct HomEntry {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct DiagramFile {
    pub semilattice: TableFile,
    pub parts: Vec<TableFile>,
    pub homs: Vec<HomEntry>,
    #[serde(default)]
    pub adjoin_identities: bool,
}

pub fn build_diagram(file: DiagramFile) -> Result<(SemilatticeDiagram, bool), CliError> {
    let semilattice = FiniteSemigroup::from_table_file(file.semilattice)
        .map_err(|e| CliError::Input(format!("semilattice table invalid: {e}")))?;
    let parts: Vec<FiniteSemigroup> = file
        .parts
        .into_iter()
        .map(|t| {
            FiniteSemigroup::from_table_file(t)
                .map_err(|e| CliError::Input(format!("part table invalid: {e}")))
        })
        .collect::<Result<_, _>>()?;
    let k = semilattice.order();
    let mut homs: Vec<Vec<Option<Vec<usize>>>> = vec![vec![None; k]; k];
    for entry in file.homs {
        if entry.from >= k || entry.to >= k {
            return Err(CliError::Input(format!(
                "hom ({}, {}) out of range",
                entry.from, entry.to
            )));
        }
        homs[entry.from][entry.to] = Some(entry.map);
    }
    // Reflexive identity maps may be omitted from the file.
    for (alpha, part) in parts.iter().enumerate() {
        if homs[alpha][alpha].is_none() {
            homs[alpha][alpha] = Some((0..part.order()).collect());
        }
    }
    Ok((SemilatticeDiagram { semilattice, parts, homs }, file.adjoin_identities))
}

pub fn eval_expr(expr: &Expr) -> Result<FiniteSemigroup, CliError> {
    let plain = |semigroup: FiniteSemigroup| semigroup;
    let construct_err = |e: construct::ConstructError| CliError::Input(e.to_string());
    Ok(match expr {
        Expr::Cyclic(n) => {
            if *n == 0 {
                return Err(CliError::Input("Z0 is empty".into()));
            }
            plain(gallery::cyclic(*n))
        }
        Expr::RightZero(n) => {
            if *n == 0 {
                return Err(CliError::Input("RZ0 is empty".into()));
            }
            plain(gallery::right_zero(*n))
        }
        Expr::LeftZero(n) => {
            if *n == 0 {
                return Err(CliError::Input("LZ0 is empty".into()));
            }
            plain(gallery::left_zero(*n))
        }
        Expr::Table { order, path } => {
            let s = load_table_file(path)?;
            if s.order() != *order {
                return Err(CliError::Input(format!(
                    "table {path} has order {}, expression says {order}",
                    s.order()
                )));
            }
            plain(s)
        }
        Expr::DirectProduct(a, b) => {
            let (a, b) = (eval_expr(a)?, eval_expr(b)?);
            plain(construct::direct_product(&a, &b).map_err(construct_err)?.semigroup)
        }
        Expr::Semidirect(a, b, act_path) => {
            let (a, b) = (eval_expr(a)?, eval_expr(b)?);
            let action_file: ActionFile = read_json(act_path)?;
            let action = SemigroupAction { table: action_file.table };
            plain(construct::semidirect_product(&a, &b, &action).map_err(construct_err)?.semigroup)
        }
        Expr::Wreath(a, b) => {
            let (a, b) = (eval_expr(a)?, eval_expr(b)?);
            plain(construct::wreath_product(&a, &b).map_err(construct_err)?.product.semigroup)
        }
        Expr::Brandt(a, k) => {
            let a = eval_expr(a)?;
            plain(construct::brandt(&a, *k).map_err(construct_err)?.semigroup)
        }
        Expr::ZeroDirectUnion(a, b) => {
            let (a, b) = (eval_expr(a)?, eval_expr(b)?);
            plain(construct::zero_direct_union(&a, &b).map_err(construct_err)?.semigroup)
        }
        Expr::StrongSemilattice(path) => {
            let (diagram, adjoin) = build_diagram(read_json(path)?)?;
            let ssl = construct::strong_semilattice(&diagram, adjoin).map_err(construct_err)?;
            ssl.semigroup
        }
        Expr::ActExtension(a, act_path) => {
            let a = eval_expr(a)?;
            let act_file: ActFile = read_json(act_path)?;
            let act = RightActData { carrier: act_file.carrier, table: act_file.table };
            plain(construct::act_extension(&a, &act).map_err(construct_err)?.semigroup)
        }
        Expr::Rees(a, ideal_gens) => {
            let a = eval_expr(a)?;
            let gens: Vec<ElementId> = ideal_gens.iter().map(|&i| ElementId(i)).collect();
            let ideal = a
                .two_sided_ideal(&gens)
                .map_err(|e| CliError::Input(e.to_string()))?;
            plain(construct::rees_quotient(&a, &ideal).map_err(construct_err)?.semigroup)
        }
    })
}

/// Interprets an argument as a file path when one exists, otherwise as a
/// construction expression.
pub fn load_semigroup(arg: &str) -> Result<FiniteSemigroup, CliError> {
    if Path::new(arg).exists() {
        return load_table_file(arg);
    }
    let expr = parse_expression(arg).map_err(|e| CliError::Input(e.to_string()))?;
    eval_expr(&expr)
}

/// Loads pairs from a file or inline JSON: either `[[a,b],...]` or
/// `{"pairs": [[a,b],...]}`.
pub fn load_pairs(arg: &str) -> Result<Vec<(ElementId, ElementId)>, CliError> {
    let text = if Path::new(arg).exists() {
        std::fs::read_to_string(arg)
            .map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum PairsJson {
        Bare(Vec<(usize, usize)>),
        Tagged { pairs: Vec<(usize, usize)> },
    }
    let parsed: PairsJson =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("bad pair list: {e}")))?;
    let pairs = match parsed {
        PairsJson::Bare(p) | PairsJson::Tagged { pairs: p } => p,
    };
    Ok(pairs.into_iter().map(|(a, b)| (ElementId(a), ElementId(b))).collect())
}
