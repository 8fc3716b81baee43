//! `sgwb`: build finite semigroups from files or expressions, compute
//! right-congruence closures, lattices and Green's structures, run
//! generating-set transfer recipes, explore normal-form families, and run
//! the built-in verification suite.

mod builder;
mod bundle;
mod expr;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sgwb_core::congruence::{enumerate_right_congruences_bounded, rc_closure, DEFAULT_ENUM_BOUND};
use sgwb_core::fp::{
    bounded_rc_closure, classify_alternating, witness_incomparable_ideals,
    witness_indecomposables, BoundedVerdict, Family, NormalFormSemigroup, ProductKind,
};
use sgwb_core::green::{green_partitions, schutzenberger_group};
use sgwb_core::semigroup::ElementId;
use sgwb_core::suite;

use builder::{load_pairs, load_semigroup, load_table_file};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, violated preconditions: exit code 2.
    Input(String),
    /// A verification that ran and failed: exit code 1.
    Verification(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Verification(m) => write!(f, "verification failure: {m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Parser)]
#[command(name = "sgwb", about = "semigroup workbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a table file and echo its canonical form.
    Validate { table: String },
    /// Build a semigroup from a construction expression.
    Construct { expr: String },
    /// Close a pair set into a right congruence.
    Closure { semigroup: String, pairs: String },
    /// Enumerate the full right-congruence lattice (order-bounded).
    Lattice {
        semigroup: String,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// R, L and H classes.
    Green { semigroup: String },
    /// Schützenberger group of the H-class of an element.
    Schutz { semigroup: String, element: usize },
    /// Run a generating-set transfer recipe over a JSON context bundle.
    Transfer { kind: String, context: String },
    /// Operations on normal-form families.
    Fp {
        family: String,
        op: String,
        args: Vec<String>,
        #[arg(long, default_value_t = 6)]
        bound: usize,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Run the built-in theorem-verification suite.
    VerifyPaper {
        #[arg(long)]
        filter: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Input(message)) => {
            eprintln!("input error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Verification(message)) => {
            eprintln!("verification failure: {message}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn emit_json(cli: &Cli, value: &serde_json::Value) -> Result<(), CliError> {
    emit(cli, &serde_json::to_string_pretty(value).expect("serializable"))
}

fn enum_bound() -> usize {
    std::env::var("SGWB_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_BOUND)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Validate { table } => {
            let s = load_table_file(table)?;
            emit_json(cli, &serde_json::to_value(s.to_table_file()).expect("serializable"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { expr: text } => {
            let expr =
                expr::parse_expression(text).map_err(|e| CliError::Input(e.to_string()))?;
            let built = builder::eval_expr(&expr)?;
            emit_json(cli, &serde_json::to_value(built.to_table_file()).expect("serializable"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Closure { semigroup, pairs } => {
            let s = load_semigroup(semigroup)?;
            let pairs = load_pairs(pairs)?;
            let rho = rc_closure(&s, &pairs).map_err(|e| CliError::Input(e.to_string()))?;
            emit_json(cli, &rho.to_classes_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { semigroup, dot } => {
            let s = load_semigroup(semigroup)?;
            let lattice = enumerate_right_congruences_bounded(&s, enum_bound())
                .map_err(|e| CliError::Input(e.to_string()))?;
            let format = if *dot { Format::Dot } else { cli.format };
            match format {
                Format::Dot => {
                    let mut dot_text = String::from("digraph lattice {\n  rankdir=BT;\n");
                    for (i, rho) in lattice.congruences.iter().enumerate() {
                        dot_text.push_str(&format!(
                            "  n{i} [label=\"#{i}: {} classes\"];\n",
                            rho.num_classes()
                        ));
                    }
                    for (a, b) in lattice.hasse_edges() {
                        dot_text.push_str(&format!("  n{a} -> n{b};\n"));
                    }
                    dot_text.push('}');
                    emit(cli, &dot_text)?;
                }
                _ => {
                    let body = json!({
                        "count": lattice.len(),
                        "congruences": lattice
                            .congruences
                            .iter()
                            .map(|r| r.to_classes_json())
                            .collect::<Vec<_>>(),
                    });
                    emit_json(cli, &body)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Green { semigroup } => {
            let s = load_semigroup(semigroup)?;
            let green = green_partitions(&s);
            let classes_of = |assignment: &[usize], count: usize| {
                let mut out = vec![Vec::new(); count];
                for (e, &c) in assignment.iter().enumerate() {
                    out[c].push(e);
                }
                out
            };
            let body = json!({
                "r_classes": classes_of(&green.r_class, green.num_r),
                "l_classes": classes_of(&green.l_class, green.num_l),
                "h_classes": classes_of(&green.h_class, green.num_h),
            });
            emit_json(cli, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Schutz { semigroup, element } => {
            let s = load_semigroup(semigroup)?;
            if *element >= s.order() {
                return Err(CliError::Input(format!("element {element} out of range")));
            }
            let h = green_partitions(&s).h_class_of(ElementId(*element));
            let schutz = schutzenberger_group(&s, &h)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let body = json!({
                "h_class": h.iter().map(|e| e.0).collect::<Vec<_>>(),
                "stabiliser_members": schutz.stabiliser.members.iter().map(|e| e.0).collect::<Vec<_>>(),
                "group": serde_json::to_value(schutz.group.to_table_file()).expect("serializable"),
                "projection": schutz.sigma_class,
                "order": schutz.order(),
            });
            emit_json(cli, &body)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Transfer { kind, context } => {
            let bundle: bundle::ContextBundle = builder::read_json(context)?;
            let recipe = bundle::run_transfer(kind, &bundle)?;
            emit_json(cli, &serde_json::to_value(&recipe).expect("serializable"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fp { family, op, args, bound, m } => {
            run_fp(cli, family, op, args, *bound, *m)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { filter } => {
            let reports = suite::run_all(filter.as_deref());
            if reports.is_empty() {
                eprintln!("warning: filter matched no checks");
            }
            match cli.format {
                Format::Json => {
                    let body = json!(reports
                        .iter()
                        .map(|r| json!({
                            "name": r.name,
                            "passed": r.passed,
                            "details": r.details,
                            "millis": r.millis,
                        }))
                        .collect::<Vec<_>>());
                    emit_json(cli, &body)?;
                }
                _ => {
                    let lines: Vec<String> = reports.iter().map(|r| r.line()).collect();
                    emit(cli, &lines.join("\n"))?;
                }
            }
            if reports.iter().all(|r| r.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// `fp <family> <op>`: families are `FreeCommutative(k)`, `FreeMonogenic`,
/// `FreeMonogenicWithIdentity`, `IdempotentPair`, `FlipIdem`,
/// `SFP(expr,expr)`, `MFP(expr,expr)`.
fn parse_family(text: &str) -> Result<NormalFormSemigroup, CliError> {
    let text = text.trim();
    let family = if let Some(rest) = text.strip_prefix("FreeCommutative(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| CliError::Input("expected FreeCommutative(k)".into()))?;
        let k: usize =
            inner.trim().parse().map_err(|_| CliError::Input("bad rank".into()))?;
        Family::FreeCommutative(k)
    } else if text == "FreeMonogenic" {
        Family::FreeMonogenic
    } else if text == "FreeMonogenicWithIdentity" {
        Family::FreeMonogenicWithIdentity
    } else if text == "IdempotentPair" {
        Family::IdempotentPair
    } else if text == "FlipIdem" {
        Family::FlipIdem
    } else if let Some(rest) = text.strip_prefix("SFP(").or_else(|| text.strip_prefix("MFP(")) {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| CliError::Input("expected two factor expressions".into()))?;
        let (a, b) = split_top_level(inner)
            .ok_or_else(|| CliError::Input("expected two factor expressions".into()))?;
        let left = load_semigroup(a.trim())?;
        let right = load_semigroup(b.trim())?;
        if text.starts_with("SFP") {
            Family::FreeProduct(Box::new(left), Box::new(right))
        } else {
            Family::MonoidFreeProduct(Box::new(left), Box::new(right))
        }
    } else {
        return Err(CliError::Input(format!("unknown family {text:?}")));
    };
    NormalFormSemigroup::new(family).map_err(|e| CliError::Input(e.to_string()))
}

/// Splits `a,b` at the top-level comma (factor expressions may nest).
fn split_top_level(text: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some((&text[..i], &text[i + 1..])),
            _ => {}
        }
    }
    None
}

fn run_fp(
    cli: &Cli,
    family_text: &str,
    op: &str,
    args: &[String],
    bound: usize,
    m: usize,
) -> Result<(), CliError> {
    let f = parse_family(family_text)?;
    let input_err = |e: sgwb_core::fp::FpError| CliError::Input(e.to_string());
    match op {
        "ball" => {
            let words = f.ball(bound).map_err(input_err)?;
            let shown: Vec<String> = words.iter().map(|w| f.format_word(w)).collect();
            emit_json(cli, &json!({"bound": bound, "count": shown.len(), "words": shown}))
        }
        "mul" => {
            let [a, b] = args else {
                return Err(CliError::Input("mul takes two words".into()));
            };
            let (a, b) = (f.parse_word(a).map_err(input_err)?, f.parse_word(b).map_err(input_err)?);
            let product = f.mul(&a, &b);
            emit_json(cli, &json!({"product": f.format_word(&product)}))
        }
        "classify" => {
            let [w] = args else {
                return Err(CliError::Input("classify takes one word".into()));
            };
            let word = f.parse_word(w).map_err(input_err)?;
            let class = classify_alternating(&f, &word).map_err(input_err)?;
            emit_json(cli, &json!({"word": f.format_word(&word), "class": class.to_string()}))
        }
        "indecomposables" => {
            let report = witness_indecomposables(&f, bound).map_err(input_err)?;
            let shown: Vec<String> = report.elements.iter().map(|w| f.format_word(w)).collect();
            emit_json(cli, &json!({"count": report.count, "elements": shown}))
        }
        "incomparable" => {
            let kind = match args.first().map(String::as_str) {
                Some("sfp") => ProductKind::Sfp,
                Some("mfp") => ProductKind::Mfp,
                _ => return Err(CliError::Input("incomparable takes sfp|mfp".into())),
            };
            let report = witness_incomparable_ideals(&f, kind, m, bound).map_err(input_err)?;
            let generators: Vec<String> =
                report.generators.iter().map(|w| f.format_word(w)).collect();
            let body = json!({
                "generators": generators,
                "refuted": report.refuted,
                "pass": report.pass,
            });
            emit_json(cli, &body)?;
            if !report.pass {
                return Err(CliError::Verification("a cross-divisibility was found".into()));
            }
            Ok(())
        }
        "closure" => {
            let [pairs_arg, rest @ ..] = args else {
                return Err(CliError::Input("closure takes a pair list and optional queries".into()));
            };
            let raw: Vec<(String, String)> = serde_json::from_str(pairs_arg)
                .map_err(|e| CliError::Input(format!("bad pair list: {e}")))?;
            let pairs: Vec<_> = raw
                .iter()
                .map(|(a, b)| {
                    Ok((f.parse_word(a).map_err(input_err)?, f.parse_word(b).map_err(input_err)?))
                })
                .collect::<Result<_, CliError>>()?;
            let pc = bounded_rc_closure(&f, &pairs, bound).map_err(input_err)?;
            let mut queries = Vec::new();
            for q in rest {
                let (a, b) = split_top_level(q)
                    .ok_or_else(|| CliError::Input("query must be \"w1,w2\"".into()))?;
                let (a, b) = (
                    f.parse_word(a.trim()).map_err(input_err)?,
                    f.parse_word(b.trim()).map_err(input_err)?,
                );
                let verdict = match pc.query(&f, &a, &b) {
                    BoundedVerdict::Proven(seq) => json!({
                        "status": "proven",
                        "steps": seq.steps.len(),
                        "certificate": serde_json::to_value(&seq).expect("serializable"),
                    }),
                    BoundedVerdict::Unknown => json!({"status": "unknown"}),
                };
                queries.push(json!({
                    "pair": [f.format_word(&a), f.format_word(&b)],
                    "verdict": verdict,
                }));
            }
            let body = json!({
                "bound": bound,
                "ball_size": pc.words.len(),
                "num_classes": pc.num_classes,
                "queries": queries,
            });
            emit_json(cli, &body)
        }
        other => Err(CliError::Input(format!("unknown fp operation {other:?}"))),
    }
}
