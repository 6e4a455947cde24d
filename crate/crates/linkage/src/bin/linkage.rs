use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use linkage::error::Error;
use linkage::oracle;
use linkage::runner::{self, sort_json};
use linkage::session;
use linkage::theorems::Status;

#[derive(Parser)]
#[command(name = "linkage", about = "Graded module linkage calculator")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a single session file and print its JSON report.
    Run { session: PathBuf },
    /// Run every .lk file in a directory and summarize.
    Corpus {
        dir: PathBuf,
        /// Restrict verification to one theorem id.
        #[arg(long)]
        only: Option<String>,
        /// Also write the summary JSON to a file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cross-check engine dimensions against the brute-force oracle.
    OracleCheck {
        dir: PathBuf,
        /// Degree bound (default 8; LINKAGE_DEGREE_CAP overrides).
        #[arg(long)]
        degree: Option<i64>,
    },
}

// exit codes: 1 usage, 2 computation error, 3 verification failure
const EXIT_USAGE: u8 = 1;
const EXIT_COMPUTE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind::*;
            let _ = e.print();
            return if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    let code = match cli.cmd {
        Cmd::Run { session } => cmd_run(&session),
        Cmd::Corpus { dir, only, json } => cmd_corpus(&dir, only.as_deref(), json.as_deref()),
        Cmd::OracleCheck { dir, degree } => cmd_oracle_check(&dir, degree),
    };
    ExitCode::from(code)
}

fn fail(code: u8, msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    code
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn run_file(path: &Path, only: Option<&str>) -> Result<runner::RunOutput, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    let session = session::parse_session(&text)?;
    runner::run_session(&session, &stem(path), only)
}

fn cmd_run(path: &Path) -> u8 {
    if !path.exists() {
        return fail(EXIT_USAGE, format!("no such file: {}", path.display()));
    }
    match run_file(path, None) {
        Ok(out) => {
            println!("{}", serde_json::to_string_pretty(&out.to_json()).unwrap());
            let failures = out.failures();
            eprintln!(
                "{}: {} report(s), {} record(s), {} failure(s)",
                stem(path),
                out.reports.len(),
                out.verifications.len() + out.claims.len(),
                failures
            );
            if failures > 0 {
                EXIT_VERIFY
            } else {
                0
            }
        }
        Err(e) => fail(EXIT_COMPUTE, e),
    }
}

fn session_files(dir: &Path) -> Result<Vec<PathBuf>, Error> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| Error::Usage(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "lk"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Error::Usage(format!(
            "no .lk files in {}",
            dir.display()
        )));
    }
    Ok(files)
}

fn cmd_corpus(dir: &Path, only: Option<&str>, json_out: Option<&Path>) -> u8 {
    let files = match session_files(dir) {
        Ok(f) => f,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    // parallel over files; output assembled in file-name order
    let results: Vec<(String, Result<runner::RunOutput, Error>)> = files
        .par_iter()
        .map(|p| (stem(p), run_file(p, only)))
        .collect();
    let mut file_docs = serde_json::Map::new();
    let mut per_theorem: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new();
    let mut failures = 0usize;
    for (name, res) in &results {
        match res {
            Ok(out) => {
                for r in out.verifications.iter().chain(&out.claims) {
                    let e = per_theorem.entry(r.theorem.clone()).or_default();
                    match r.status {
                        Status::Pass => e.0 += 1,
                        Status::Fail => e.1 += 1,
                        Status::Inapplicable => e.2 += 1,
                    }
                }
                failures += out.failures();
                file_docs.insert(name.clone(), out.to_json());
            }
            Err(e) => return fail(EXIT_COMPUTE, format!("{name}: {e}")),
        }
    }
    let theorems: BTreeMap<String, Value> = per_theorem
        .iter()
        .map(|(t, (p, f, i))| {
            (
                t.clone(),
                json!({"fail": f, "inapplicable": i, "pass": p}),
            )
        })
        .collect();
    let doc = sort_json(json!({
        "files": Value::Object(file_docs),
        "per_theorem": theorems,
        "summary": {"failures": failures, "sessions": files.len()},
    }));
    let rendered = serde_json::to_string_pretty(&doc).unwrap();
    println!("{rendered}");
    if let Some(path) = json_out {
        if let Err(e) = std::fs::write(path, rendered + "\n") {
            return fail(EXIT_USAGE, format!("{}: {e}", path.display()));
        }
    }
    for (t, (p, f, i)) in &per_theorem {
        eprintln!("{t:24} pass {p:3}  fail {f:3}  inapplicable {i:3}");
    }
    if failures > 0 {
        EXIT_VERIFY
    } else {
        0
    }
}

fn cmd_oracle_check(dir: &Path, degree: Option<i64>) -> u8 {
    let d_max = degree
        .or_else(|| {
            std::env::var("LINKAGE_DEGREE_CAP")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(oracle::D_ORACLE);
    let files = match session_files(dir) {
        Ok(f) => f,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let results: Vec<Result<(String, Vec<String>, usize), Error>> = files
        .par_iter()
        .map(|path| {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
            let objects = runner::build_objects(&session::parse_session(&text)?)?;
            let mut mismatches = Vec::new();
            for (name, m) in &objects.modules {
                let label = format!("{}:{}", stem(path), name);
                mismatches.extend(oracle::check_module(&label, m, d_max)?);
            }
            Ok((stem(path), mismatches, objects.modules.len()))
        })
        .collect();
    let mut all = Vec::new();
    let mut modules = 0usize;
    for res in results {
        match res {
            Ok((name, mm, count)) => {
                modules += count;
                eprintln!("{name}: {count} module(s), {} mismatch(es)", mm.len());
                all.extend(mm);
            }
            Err(e) => return fail(EXIT_COMPUTE, e),
        }
    }
    let doc = sort_json(json!({
        "degree": d_max,
        "mismatches": all,
        "modules": modules,
        "sessions": files.len(),
    }));
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    if all.is_empty() {
        0
    } else {
        EXIT_VERIFY
    }
}
