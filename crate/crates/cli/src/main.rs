//! areps: exact Real representation theory of C2-graded finite groups.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use areps_core::chartable::{self, CharacterTable};
use areps_core::error::Error;
use areps_core::grading::{self, Builtin, GradedGroup};
use areps_core::group::{ClassData, DEFAULT_MAX_ORDER};
use areps_core::real::{self, DysonType};
use areps_core::{alternating, formats, report, verify};

#[derive(Parser)]
#[command(
    name = "areps",
    about = "Exact Real (antilinear) representation theory of C2-graded finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Built-in graded group: I..X, IX-pauli, An (e.g. A5), or all-builtins
    /// (verify only)
    #[arg(long, global = true, value_name = "NAME")]
    graded: Option<String>,

    /// Multiplication-table file ("order N" followed by N rows)
    #[arg(long, global = true, value_name = "FILE")]
    group: Option<PathBuf>,

    /// Grading file: "parity <signs>" or "subgroup <generators>"
    #[arg(long, global = true, value_name = "FILE")]
    grading: Option<PathBuf>,

    /// Permutation-group file ("degree N" followed by cycle-notation
    /// generators)
    #[arg(long, global = true, value_name = "FILE")]
    perm: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on constructed group orders; AREPS_MAX_ORDER is honoured too
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes of the even subgroup
    Classes,
    /// Real (graded) conjugacy classes
    RealClasses,
    /// Complex character table of the even subgroup
    Chartable,
    /// Characters of the simple Real modules
    Achartable,
    /// Frobenius-Schur indicators and Dyson types, row by row
    Indicators,
    /// Orbit blocks with their fields and multiplicity counts
    Blocks,
    /// Cycle-type combinatorics of alternating groups
    Alternating {
        /// Degree n of A_n
        #[arg(long)]
        n: Option<u64>,
        /// List even cycle types with their Real-class counts (default)
        #[arg(long, conflicts_with_all = ["complex_type", "self_inverse"])]
        real_classes: bool,
        /// Does A_n have complex-type characters?
        #[arg(long, conflicts_with = "self_inverse")]
        complex_type: bool,
        /// Self-inverse verdict for one cycle type, e.g. "5,3,1"
        #[arg(long, value_name = "TYPE")]
        self_inverse: Option<String>,
    },
    /// Run the full theorem battery; exits 2 on any failure
    Verify,
    /// Search the small-group catalogue for a block of the given type
    SearchType {
        /// Target type I..X
        target: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("areps: {e}");
            ExitCode::from(1)
        }
    }
}

fn max_order(cli: &Cli) -> usize {
    cli.max_order
        .or_else(|| {
            std::env::var("AREPS_MAX_ORDER")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_MAX_ORDER)
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_builtin_name(name: &str, cap: usize) -> Result<GradedGroup, Error> {
    if let Some(b) = Builtin::parse(name) {
        return grading::builtin(b);
    }
    if let Some(digits) = name
        .strip_prefix('A')
        .or_else(|| name.strip_prefix('a'))
        .filter(|d| d.chars().all(|c| c.is_ascii_digit()) && !d.is_empty())
    {
        let n: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in {name:?}")))?;
        return grading::alternating_in_symmetric(n, cap);
    }
    Err(Error::Parse(format!(
        "unknown builtin {name:?}; expected I..X, IX-pauli, or An"
    )))
}

fn load_graded(cli: &Cli) -> Result<GradedGroup, Error> {
    let cap = max_order(cli);
    let sources =
        usize::from(cli.graded.is_some()) + usize::from(cli.group.is_some()) + usize::from(cli.perm.is_some());
    if sources != 1 {
        return Err(Error::Parse(
            "exactly one of --graded, --group, --perm is required".into(),
        ));
    }
    if let Some(name) = &cli.graded {
        return parse_builtin_name(name, cap);
    }
    let grading_path = cli.grading.as_ref().ok_or_else(|| {
        Error::Parse("--grading is required with --group or --perm".into())
    })?;
    let spec = formats::parse_grading(&read(grading_path)?)?;
    let ghat = if let Some(path) = &cli.group {
        formats::parse_multiplication_table(&read(path)?)?
    } else {
        formats::parse_permutation_group(&read(cli.perm.as_ref().expect("source checked"))?, cap)?
    };
    let name = cli
        .group
        .as_ref()
        .or(cli.perm.as_ref())
        .map(|p| p.display().to_string())
        .expect("source checked");
    match spec {
        formats::GradingSpec::Parity(signs) => GradedGroup::from_parity(ghat, signs, name),
        formats::GradingSpec::Subgroup(tokens) => {
            let gens = tokens
                .iter()
                .map(|t| formats::resolve_generator(&ghat, t))
                .collect::<Result<Vec<_>, _>>()?;
            GradedGroup::from_subgroup(ghat, &gens, name)
        }
    }
}

fn tables(gg: &GradedGroup) -> Result<(CharacterTable, CharacterTable), Error> {
    Ok((
        chartable::character_table(gg.even_group())?,
        chartable::character_table(gg.ghat())?,
    ))
}

fn emit(cli: &Cli, text: String, json: serde_json::Value) {
    use std::io::Write;
    let payload = match cli.format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("reports serialise");
            s.push('\n');
            s
        }
    };
    // a closed pipe (areps ... | head) is not an error
    let _ = std::io::stdout().write_all(payload.as_bytes());
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Classes => {
            let gg = load_graded(cli)?;
            let classes = ClassData::new(gg.even_group());
            emit(
                cli,
                report::classes_text(gg.even_group(), &classes),
                report::classes_json(gg.even_group(), &classes),
            );
        }
        Command::RealClasses => {
            let gg = load_graded(cli)?;
            emit(cli, report::real_classes_text(&gg), report::real_classes_json(&gg));
        }
        Command::Chartable => {
            let gg = load_graded(cli)?;
            let tbl = chartable::character_table(gg.even_group())?;
            emit(
                cli,
                report::chartable_text(gg.even_group(), &tbl),
                report::chartable_json(gg.even_group(), &tbl),
            );
        }
        Command::Achartable => {
            let gg = load_graded(cli)?;
            let tbl = chartable::character_table(gg.even_group())?;
            let at = real::a_character_table(&gg, &tbl)?;
            emit(
                cli,
                report::achartable_text(&gg, &tbl, &at)?,
                report::achartable_json(&gg, &tbl, &at)?,
            );
        }
        Command::Indicators => {
            let gg = load_graded(cli)?;
            let tbl = chartable::character_table(gg.even_group())?;
            emit(
                cli,
                report::indicators_text(&gg, &tbl)?,
                report::indicators_json(&gg, &tbl)?,
            );
        }
        Command::Blocks => {
            let gg = load_graded(cli)?;
            let (tbl, tbl_hat) = tables(&gg)?;
            emit(
                cli,
                report::blocks_text(&gg, &tbl, &tbl_hat)?,
                report::blocks_json(&gg, &tbl, &tbl_hat)?,
            );
        }
        Command::Alternating {
            n,
            real_classes: _,
            complex_type,
            self_inverse,
        } => {
            if let Some(type_text) = self_inverse {
                let t = alternating::CycleType::parse(type_text)?;
                emit(
                    cli,
                    report::alternating_self_inverse_text(&t)?,
                    report::alternating_self_inverse_json(&t)?,
                );
            } else {
                let n = n.ok_or_else(|| Error::Parse("--n is required".into()))?;
                if *complex_type {
                    emit(
                        cli,
                        report::alternating_complex_type_text(n),
                        report::alternating_complex_type_json(n),
                    );
                } else {
                    emit(
                        cli,
                        report::alternating_real_classes_text(n)?,
                        report::alternating_real_classes_json(n)?,
                    );
                }
            }
        }
        Command::Verify => {
            let mut failed = false;
            let mut texts = String::new();
            let mut docs = Vec::new();
            let targets: Vec<GradedGroup> = if cli.graded.as_deref() == Some("all-builtins") {
                Builtin::all()
                    .into_iter()
                    .map(grading::builtin)
                    .collect::<Result<_, _>>()?
            } else {
                vec![load_graded(cli)?]
            };
            for gg in &targets {
                let checks = verify::run_all(gg);
                failed |= checks.iter().any(|c| c.is_failure());
                texts.push_str(&report::verify_text(gg.name(), &checks));
                docs.push(report::verify_json(gg.name(), &checks));
            }
            let json = if docs.len() == 1 {
                docs.pop().expect("one document")
            } else {
                serde_json::json!({ "schema": report::SCHEMA, "groups": docs })
            };
            emit(cli, texts, json);
            if failed {
                return Ok(ExitCode::from(2));
            }
        }
        Command::SearchType { target } => {
            let t = DysonType::parse(target)
                .ok_or_else(|| Error::Parse(format!("unknown type {target:?}")))?;
            let cap = if cli.max_order.is_some() {
                max_order(cli)
            } else {
                64
            };
            let witness = grading::search_type(t, cap)?;
            emit(cli, report::search_text(&witness), report::search_json(&witness));
        }
    }
    Ok(ExitCode::SUCCESS)
}
