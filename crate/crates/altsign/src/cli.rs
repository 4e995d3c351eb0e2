//! Command-line frontend. Batch and non-interactive: results go to
//! standard output, diagnostics to standard error.
//!
//! Exit codes: 0 success (or a true predicate), 1 validation failure or a
//! false predicate, 2 infeasible construction (projection not majorized,
//! or mismatched projections), 3 parse or format error, 4 usage error
//! (including enumeration beyond the configured limit).

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::ashm::{self, Ashm};
use crate::asm::{Asm, PartialSumMatrix};
use crate::bijection;
use crate::error::{Error, Result};
use crate::gale_ryser;
use crate::matrix::IntMatrix;
use crate::monotonize::SwitchRecord;
use crate::polytope::{self, PolytopeMatrix, RationalMatrix};
use crate::synthesis;
use crate::triangle::{MonotoneTriangle, RowIncreasingTriangle};
use crate::vectors;
use crate::enumeration;

#[derive(Parser)]
#[command(name = "altsign", version, about = "Exact tools for alternating sign matrices, their projections, polytope, and hypermatrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a file; exits 0 when the object is valid.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        file: PathBuf,
    },
    /// Print the weighted projection of a square integer matrix.
    Project { file: PathBuf },
    /// Build an alternating sign matrix with the given weighted projection.
    Construct {
        /// Target projection as comma-separated integers, e.g. 4,3,1,4,7,5,4.
        #[arg(long, value_name = "CSV")]
        projection: String,
        /// Also print the pipeline trace: the margin matrix, the
        /// row-increasing triangle, every switch, and the monotone triangle.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Convert between asm, psm, and monotone representations.
    Convert {
        #[arg(long, value_enum)]
        from: ObjectKind,
        #[arg(long, value_enum)]
        to: ObjectKind,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print whether the first vector is majorized by the second.
    Majorize { x: String, y: String },
    /// Stream every object of one kind at the given order, one block per
    /// object separated by blank lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        kind: EnumKind,
        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
        /// Raise or lower the exhaustive-order cap.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Operations on the alternating-sign-matrix polytope.
    Polytope {
        #[command(subcommand)]
        command: PolytopeCommand,
    },
    /// Operations on alternating sign hypermatrices.
    Ashm {
        #[command(subcommand)]
        command: AshmCommand,
    },
}

#[derive(Subcommand)]
enum PolytopeCommand {
    /// Express B as A plus T-block terms, one term per line.
    Decompose {
        /// Emit opposite-depth T-block pairs (requires equal projections).
        #[arg(long)]
        paired: bool,
        file_a: PathBuf,
        file_b: PathBuf,
    },
}

#[derive(Subcommand)]
enum AshmCommand {
    /// Print the weighted plane sum of a hypermatrix.
    Ashl {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the grid notation of a hypermatrix.
    Grid { file: PathBuf },
    /// Exhaustive order-3 search: per-line occurrence maxima of a value.
    Search3 {
        #[arg(long)]
        value: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Asm,
    Triangle,
    Monotone,
    Polytope,
    Ashm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectKind {
    Asm,
    Psm,
    Monotone,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Asm,
    Monotone,
    Rit,
    Vectors,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                ExitCode::SUCCESS
            } else {
                let _ = e.print();
                ExitCode::from(4)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) => 3,
        Error::NotMajorized { .. } | Error::Infeasible { .. } | Error::ProjectionMismatch => 2,
        Error::LimitExceeded { .. } => 4,
        _ => 1,
    }
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Verify { kind, file } => verify(kind, &file),
        Command::Project { file } => {
            let m = load_int_matrix(&file)?;
            println!("{}", vectors::to_csv(&m.weighted_projection()));
            Ok(0)
        }
        Command::Construct {
            projection,
            trace,
            format,
        } => construct(&projection, trace, format),
        Command::Convert {
            from,
            to,
            file,
            format,
        } => convert(from, to, &file, format),
        Command::Majorize { x, y } => {
            let x = vectors::parse_csv(&x)?;
            let y = vectors::parse_csv(&y)?;
            let result = gale_ryser::majorized_by(&x, &y)?;
            println!("{result}");
            Ok(if result { 0 } else { 1 })
        }
        Command::Enumerate {
            order,
            kind,
            count_only,
            limit,
        } => enumerate(order, kind, count_only, limit),
        Command::Polytope {
            command: PolytopeCommand::Decompose {
                paired,
                file_a,
                file_b,
            },
        } => {
            let a = PolytopeMatrix::new(load_rational_matrix(&file_a)?)?;
            let b = PolytopeMatrix::new(load_rational_matrix(&file_b)?)?;
            let terms = if paired {
                polytope::decompose_paired(&a, &b)?
            } else {
                polytope::decompose_tblocks(&a, &b)?
            };
            print!("{}", polytope::format_terms(&terms));
            Ok(0)
        }
        Command::Ashm { command } => run_ashm(command),
    }
}

fn verify(kind: VerifyKind, file: &Path) -> Result<u8> {
    match kind {
        VerifyKind::Asm => {
            let a = Asm::new(load_int_matrix(file)?)?;
            println!("valid alternating sign matrix of order {}", a.order());
        }
        VerifyKind::Triangle => {
            let t = RowIncreasingTriangle::parse_text(&read_input(file)?)?;
            println!("valid row-increasing triangle of order {}", t.order());
        }
        VerifyKind::Monotone => {
            let t = MonotoneTriangle::parse_text(&read_input(file)?)?;
            println!("valid monotone triangle of order {}", t.order());
        }
        VerifyKind::Polytope => {
            let p = PolytopeMatrix::new(load_rational_matrix(file)?)?;
            println!("valid polytope member of order {}", p.order());
        }
        VerifyKind::Ashm => {
            let a = load_ashm(file)?;
            println!("valid alternating sign hypermatrix of order {}", a.order());
        }
    }
    Ok(0)
}

fn construct(projection: &str, trace: bool, format: OutputFormat) -> Result<u8> {
    let v = vectors::parse_csv(projection)?;
    if trace {
        let (asm, pipeline) = synthesis::asm_with_projection_traced(&v)?;
        print!("{}", pipeline.matrix01.to_text());
        println!();
        print!("{}", pipeline.initial.to_text());
        for step in &pipeline.switches {
            print!("{}", switch_line(step));
            print!("{}", step.result.to_text());
        }
        println!();
        print_matrix(asm.matrix(), format);
    } else {
        let asm = synthesis::asm_with_projection(&v)?;
        print_matrix(asm.matrix(), format);
    }
    Ok(0)
}

fn switch_line(step: &SwitchRecord) -> String {
    format!(
        "-- switch height={} rows={},{} f={}\n",
        step.height,
        step.top_row + 1,
        step.bottom_row + 1,
        step.potential_after
    )
}

fn convert(from: ObjectKind, to: ObjectKind, file: &Path, format: OutputFormat) -> Result<u8> {
    enum Loaded {
        Asm(Asm),
        Psm(PartialSumMatrix),
        Monotone(MonotoneTriangle),
    }
    let source = match from {
        ObjectKind::Asm => Loaded::Asm(Asm::new(load_int_matrix(file)?)?),
        ObjectKind::Psm => Loaded::Psm(PartialSumMatrix::new(load_int_matrix(file)?)?),
        ObjectKind::Monotone => Loaded::Monotone(MonotoneTriangle::parse_text(&read_input(file)?)?),
    };
    let asm = match &source {
        Loaded::Asm(a) => a.clone(),
        Loaded::Psm(p) => bijection::asm_from_partial_sum(p)?,
        Loaded::Monotone(t) => bijection::asm_from_monotone(t),
    };
    match to {
        ObjectKind::Asm => print_matrix(asm.matrix(), format),
        ObjectKind::Psm => print_matrix(bijection::partial_sum(&asm).matrix(), format),
        ObjectKind::Monotone => {
            if format == OutputFormat::Json {
                return Err(Error::parse(
                    "json output is defined for matrices only; triangles use the text format",
                ));
            }
            print!("{}", bijection::monotone_from_asm(&asm).to_text());
        }
    }
    Ok(0)
}

fn enumerate(order: usize, kind: EnumKind, count_only: bool, limit: Option<usize>) -> Result<u8> {
    let blocks: Vec<String> = match kind {
        EnumKind::Asm => {
            let limit = limit.unwrap_or(enumeration::DEFAULT_EXHAUSTIVE_LIMIT);
            enumeration::enumerate_asms_with_limit(order, limit)?
                .iter()
                .map(|a| a.matrix().to_text())
                .collect()
        }
        EnumKind::Monotone => {
            let limit = limit.unwrap_or(enumeration::DEFAULT_EXHAUSTIVE_LIMIT);
            enumeration::enumerate_monotone_with_limit(order, limit)?
                .iter()
                .map(|t| t.to_text())
                .collect()
        }
        EnumKind::Rit => {
            let limit = limit.unwrap_or(enumeration::DEFAULT_PRODUCT_LIMIT);
            enumeration::enumerate_row_increasing_with_limit(order, limit)?
                .iter()
                .map(|t| t.to_text())
                .collect()
        }
        EnumKind::Vectors => {
            let limit = limit.unwrap_or(enumeration::DEFAULT_PRODUCT_LIMIT);
            enumeration::enumerate_majorized_vectors_with_limit(order, limit)?
                .iter()
                .map(|v| format!("{}\n", vectors::to_csv(v)))
                .collect()
        }
    };
    if count_only {
        println!("{}", blocks.len());
    } else {
        for (idx, block) in blocks.iter().enumerate() {
            if idx > 0 {
                println!();
            }
            print!("{block}");
        }
    }
    Ok(0)
}

fn run_ashm(command: AshmCommand) -> Result<u8> {
    match command {
        AshmCommand::Ashl { file, format } => {
            let a = load_ashm(&file)?;
            print_matrix(a.ashl().matrix(), format);
            Ok(0)
        }
        AshmCommand::Grid { file } => {
            let a = load_ashm(&file)?;
            print!("{}", a.grid_notation());
            Ok(0)
        }
        AshmCommand::Search3 { value } => {
            if !(1..=3).contains(&value) {
                return Err(Error::LimitExceeded { order: value, limit: 3 });
            }
            let ashls: Vec<_> = ashm::enumerate_ashms_order3()
                .iter()
                .map(|a| a.ashl())
                .collect();
            let profile = ashm::occurrence_profile(value, &ashls);
            println!(
                "value {} over {} hypermatrices of order 3",
                value,
                ashls.len()
            );
            for i in 0..3 {
                println!(
                    "line {}: row {} col {} max {}",
                    i + 1,
                    profile.row_max[i],
                    profile.col_max[i],
                    profile.line_max(i)
                );
            }
            Ok(0)
        }
    }
}

fn print_matrix(m: &IntMatrix, format: OutputFormat) {
    match format {
        OutputFormat::Text => print!("{}", m.to_text()),
        OutputFormat::Json => print!("{}", RationalMatrix::from_int(m).to_json()),
    }
}

fn read_input(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn looks_like_json(input: &str) -> bool {
    input.trim_start().starts_with('{')
}

/// Reads a square integer matrix from the text format or, when the file
/// starts with `{`, from the rational JSON document (denominators must
/// all be 1).
fn load_int_matrix(path: &Path) -> Result<IntMatrix> {
    let input = read_input(path)?;
    if looks_like_json(&input) {
        RationalMatrix::parse_json(&input)?
            .to_int()
            .ok_or_else(|| Error::parse("matrix has fractional entries"))
    } else {
        IntMatrix::parse_text(&input)
    }
}

fn load_rational_matrix(path: &Path) -> Result<RationalMatrix> {
    let input = read_input(path)?;
    if looks_like_json(&input) {
        RationalMatrix::parse_json(&input)
    } else {
        Ok(RationalMatrix::from_int(&IntMatrix::parse_text(&input)?))
    }
}

fn load_ashm(path: &Path) -> Result<Ashm> {
    let input = read_input(path)?;
    if looks_like_json(&input) {
        Ashm::parse_json(&input)
    } else {
        Ashm::parse_grid(&input)
    }
}
