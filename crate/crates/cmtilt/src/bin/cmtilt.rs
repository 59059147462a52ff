//! Batch CLI: analyze graded algebras from quiver-with-relations documents,
//! build truncated preprojective algebras from Coxeter words, and run the
//! bundled example corpus against golden reports.
//!
//! Exit codes: 0 definitive, 1 error, 2 inconclusive.

use clap::{Parser, Subcommand, ValueEnum};
use cmtilt::input::{FieldSpec, InputDocument};
use cmtilt::report::{analyze_algebra, analyze_ppalg};
use cmtilt::scalar::Field;
use cmtilt::{Error, Result};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cmtilt", version, about = "Graded Cohen-Macaulay tilting toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze a graded algebra given by a quiver with relations
    AlgebraAnalyze {
        input: PathBuf,
        /// Resolution/search cap (default: document value or 40)
        #[arg(long)]
        cap: Option<usize>,
        /// Seed for randomized decompositions (default: document value or 0)
        #[arg(long)]
        seed: Option<u64>,
        /// Field override, e.g. Q or F2 (default: document field; the
        /// CMTILT_FIELD environment variable also overrides the document)
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Build Π(Q)_w from a Coxeter word and run the tilting pipeline
    Ppalg {
        input: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Run every corpus entry and compare against its golden report
    Corpus {
        /// Directory of *.json inputs with *.golden.txt expectations
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
        /// Cap override: entries are run with this cap and only their exit
        /// status is reported (golden comparison is skipped)
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        field: Option<String>,
    },
}

fn field_override(flag: &Option<String>) -> Result<Option<Field>> {
    let spec = match flag {
        Some(s) => Some(s.clone()),
        None => std::env::var("CMTILT_FIELD").ok(),
    };
    match spec {
        Some(s) => Ok(Some(FieldSpec::Name(s).to_field()?)),
        None => Ok(None),
    }
}

struct Rendered {
    text: String,
    exit: i32,
}

fn run_document(
    doc: &InputDocument,
    cap: Option<usize>,
    seed: Option<u64>,
    field: Option<Field>,
    emit: Emit,
) -> Result<Rendered> {
    let field = doc.field(field)?;
    let cap = cap.or(doc.cap).unwrap_or(40);
    let seed = seed.or(doc.seed).unwrap_or(0);
    if doc.coxeter_word.is_some() {
        let q = doc.build_quiver()?;
        let letters = doc.word()?;
        let report = analyze_ppalg(field, &q, &letters, cap, seed)?;
        Ok(Rendered {
            text: match emit {
                Emit::Text => report.render_text(),
                Emit::Json => report.render_json(),
            },
            exit: report.exit_code(),
        })
    } else {
        let a = doc.build_algebra(field, cap.max(64))?;
        let report = analyze_algebra(&a, field, cap, seed);
        Ok(Rendered {
            text: match emit {
                Emit::Text => report.render_text(),
                Emit::Json => report.render_json(),
            },
            exit: report.exit_code(),
        })
    }
}

fn run_corpus(dir: &PathBuf, cap: Option<usize>, field: Option<Field>) -> Result<i32> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map_or(false, |x| x == "json"))
        .collect();
    entries.sort();
    if entries.is_empty() {
        return Err(Error::BadInput(format!("no corpus entries in {}", dir.display())));
    }
    let mut failures = 0usize;
    for path in &entries {
        let name = path.file_stem().unwrap().to_string_lossy().to_string();
        let doc = InputDocument::from_path(path)?;
        let outcome = run_document(&doc, cap, None, field, Emit::Text);
        match (outcome, cap) {
            (Ok(r), Some(_)) => {
                println!("{name}: exit {}", r.exit);
            }
            (Ok(r), None) => {
                let golden = path.with_extension("golden.txt");
                let expected = std::fs::read_to_string(&golden)?;
                if expected == r.text && r.exit == 0 {
                    println!("PASS {name}");
                } else {
                    failures += 1;
                    println!("FAIL {name}");
                    for diff in first_diff(&expected, &r.text) {
                        println!("  {diff}");
                    }
                    if r.exit != 0 {
                        println!("  exit code {} (expected 0)", r.exit);
                    }
                }
            }
            (Err(e), _) => {
                failures += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
    println!("{} entries, {} failures", entries.len(), failures);
    Ok(if failures > 0 { 1 } else { 0 })
}

fn first_diff(expected: &str, got: &str) -> Vec<String> {
    for (n, (e, g)) in expected.lines().zip(got.lines()).enumerate() {
        if e != g {
            return vec![
                format!("line {}: expected `{e}`", n + 1),
                format!("line {}:      got `{g}`", n + 1),
            ];
        }
    }
    if expected.lines().count() != got.lines().count() {
        return vec![format!(
            "line counts differ: expected {}, got {}",
            expected.lines().count(),
            got.lines().count()
        )];
    }
    Vec::new()
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::AlgebraAnalyze { input, cap, seed, field, emit }
        | Cmd::Ppalg { input, cap, seed, field, emit } => {
            let doc = InputDocument::from_path(input)?;
            match &cli.cmd {
                Cmd::AlgebraAnalyze { .. } if doc.coxeter_word.is_some() => {
                    return Err(Error::BadInput(
                        "algebra-analyze expects a `relations` document; use ppalg for Coxeter words"
                            .into(),
                    ))
                }
                Cmd::Ppalg { .. } if doc.coxeter_word.is_none() => {
                    return Err(Error::BadInput(
                        "ppalg expects a `coxeter_word` document".into(),
                    ))
                }
                _ => {}
            }
            let rendered = run_document(&doc, *cap, *seed, field_override(field)?, *emit)?;
            print!("{}", rendered.text);
            Ok(rendered.exit)
        }
        Cmd::Corpus { dir, cap, field } => run_corpus(dir, *cap, field_override(field)?),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
