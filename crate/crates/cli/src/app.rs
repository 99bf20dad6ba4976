//! Command-line surface. Exit codes: 0 pass, 1 property failure, 2 input or
//! axiom error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use xlattice::corpus::{parse_corpus, InstanceSpec};
use xlattice::report::classify;
use xlattice::ring::{cross_validate_prod, cross_validate_zn};
use xlattice::suite::lemma_suite;
use xlattice::xclass::{self, make_m_closed};
use xlattice::{ElementSet, Error, MClosedSet};

use crate::load::{describe, load_str, LoadError, Loaded};
use crate::render::{dot, text_report};
use crate::search::{search, Property};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "xlattice", version, about = "Classify elements of finite multiplicative lattices")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a lattice file describes a multiplicative lattice.
    Validate { target: String },
    /// Classify every element (prime, primary, maximal, r/n/J and X-elements).
    Classify {
        /// Lattice file or instance (zn:<n>, prod:<m>,<n>, chain:<len>, K).
        target: String,
        /// Set name from the file, downset:<label>, zdiv, nil, jrad or {a, b, ...}.
        #[arg(long = "x", value_name = "SET")]
        x: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the lemma checks for the file's sets, the --x sets and r/n/J.
    Verify {
        target: String,
        #[arg(long = "x", value_name = "SET")]
        x: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare ring-side and lattice-side r/n/J classifications.
    CrossValidate {
        /// zn:<n> or prod:<m>,<n>
        target: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan a corpus for instances with a property.
    Search {
        /// zn:<a>..<b>, standard, or a single instance.
        #[arg(long, default_value = "zn:2..200")]
        corpus: String,
        #[arg(long, value_enum)]
        find: Property,
        /// Matches to print; 0 prints all.
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// Hasse diagram in DOT, X-elements of each set filled.
    Dot {
        target: String,
        #[arg(long = "x", value_name = "SET")]
        x: Vec<String>,
    },
}

enum Failure {
    /// Unreadable or malformed input: exit 2.
    Input(String),
    /// Well-formed input that is not a multiplicative lattice: exit 2, or 1
    /// under `validate`.
    Invalid(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn resolve(target: &str) -> Result<Loaded, Failure> {
    let path = Path::new(target);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{target}: {e}")))?;
        return load_str(&text).map_err(|e| match e {
            LoadError::Parse(p) => Failure::Input(format!("{target}: {p}")),
            LoadError::Invalid { message, .. } => Failure::Invalid(format!("{target}: {message}")),
        });
    }
    let instance: InstanceSpec = target.parse().map_err(|_| {
        Failure::Input(format!(
            "{target}: no such file, and not an instance (zn:<n>, prod:<m>,<n>, chain:<len>, K)"
        ))
    })?;
    let lattice = instance.build().map_err(|e| Failure::Input(format!("{target}: {e}")))?;
    Ok(Loaded { name: instance.to_string(), lattice, sets: Vec::new() })
}

fn resolve_x(arg: &str, loaded: &Loaded) -> Result<(String, MClosedSet), Failure> {
    let m = &loaded.lattice;
    let fail = |msg: String| Failure::Input(format!("--x {arg}: {msg}"));
    let lib = |e: Error| fail(describe(&e, m.labels()));
    if let Some((_, x)) = loaded.sets.iter().find(|(n, _)| n == arg) {
        return Ok((arg.to_string(), x.clone()));
    }
    let x = match arg {
        "zdiv" => xclass::r_set(m).map_err(lib)?,
        "nil" => xclass::n_set(m).map_err(lib)?,
        "jrad" => xclass::j_set(m).map_err(lib)?,
        _ => {
            if let Some(label) = arg.strip_prefix("downset:") {
                let j = m.index_of(label).ok_or_else(|| fail(format!("unknown element `{label}`")))?;
                MClosedSet::down_set(m, j)
            } else if let Some(inner) = arg.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
                let mut set = ElementSet::empty(m.size());
                for label in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let e = m.index_of(label).ok_or_else(|| fail(format!("unknown element `{label}`")))?;
                    set.insert(e);
                }
                make_m_closed(m, set).map_err(lib)?
            } else {
                return Err(fail("expected a set name, downset:<label>, zdiv, nil, jrad or {a, b, ...}".into()));
            }
        }
    };
    Ok((arg.to_string(), x))
}

/// The --x sets if any were given, otherwise the file's sets.
fn requested_sets(xs: &[String], loaded: &Loaded) -> Result<Vec<(String, MClosedSet)>, Failure> {
    if xs.is_empty() {
        return Ok(loaded.sets.clone());
    }
    xs.iter().map(|x| resolve_x(x, loaded)).collect()
}

fn lib_failure(loaded: &Loaded) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::Input(format!("{}: {}", loaded.name, describe(&e, loaded.lattice.labels())))
}

fn json(out: &mut dyn Write, value: &impl serde::Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Validate { target } => {
            let loaded = match resolve(&target) {
                Ok(l) => l,
                Err(Failure::Invalid(msg)) => {
                    writeln!(out, "invalid: {msg}")?;
                    return Ok(EXIT_FAIL);
                }
                Err(e) => return Err(e),
            };
            writeln!(
                out,
                "ok: {} ({} elements, {} sets)",
                loaded.name,
                loaded.lattice.size(),
                loaded.sets.len()
            )?;
            Ok(EXIT_PASS)
        }
        Command::Classify { target, x, format } => {
            let loaded = resolve(&target)?;
            let sets = requested_sets(&x, &loaded)?;
            let report = classify(&loaded.name, &loaded.lattice, &sets).map_err(lib_failure(&loaded))?;
            match format {
                Format::Text => write!(out, "{}", text_report(&report))?,
                Format::Json => json(out, &report)?,
            }
            Ok(EXIT_PASS)
        }
        Command::Verify { target, x, format } => {
            let loaded = resolve(&target)?;
            let mut sets = loaded.sets.clone();
            for arg in &x {
                let (name, set) = resolve_x(arg, &loaded)?;
                if !sets.iter().any(|(n, _)| *n == name) {
                    sets.push((name, set));
                }
            }
            let report = lemma_suite(&loaded.lattice, &sets).map_err(lib_failure(&loaded))?;
            match format {
                Format::Json => json(out, &report)?,
                Format::Text => {
                    for c in &report.checks {
                        let status = if c.passed { "ok  " } else { "FAIL" };
                        match &c.detail {
                            Some(d) => writeln!(out, "{status} {} [{}]: {d}", c.id, c.scope)?,
                            None => writeln!(out, "{status} {} [{}]", c.id, c.scope)?,
                        }
                    }
                    for f in &report.join_failures {
                        writeln!(out, "join {}: {} ∨ {} = {} is not an X-element", f.set, f.first, f.second, f.join)?;
                    }
                    let failed = report.failures().count();
                    writeln!(out, "{}: {} checks, {failed} failed", loaded.name, report.checks.len())?;
                }
            }
            Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::CrossValidate { target, format } => {
            let instance: InstanceSpec = target
                .parse()
                .map_err(|e: xlattice::corpus::ParseInstanceError| Failure::Input(e.to_string()))?;
            let result = match instance {
                InstanceSpec::Zn(n) => cross_validate_zn(n),
                InstanceSpec::Prod(m, n) => cross_validate_prod(m, n),
                _ => return Err(Failure::Input(format!("{target}: expected zn:<n> or prod:<m>,<n>"))),
            };
            let report = match result {
                Ok(r) => r,
                Err(e @ Error::CrossValidationMismatch { .. }) => {
                    writeln!(out, "mismatch: {e}")?;
                    return Ok(EXIT_FAIL);
                }
                Err(e) => return Err(Failure::Input(format!("{target}: {e}"))),
            };
            match format {
                Format::Json => json(out, &report)?,
                Format::Text => {
                    let yn = |b: bool| if b { "yes" } else { "no" };
                    for row in &report.rows {
                        writeln!(
                            out,
                            "{}  r: {}  n: {}  J: {}",
                            row.ideal,
                            yn(row.ring_r),
                            yn(row.ring_n),
                            yn(row.ring_j)
                        )?;
                    }
                    writeln!(out, "{}: ring and lattice agree on {} proper ideals", report.ring, report.rows.len())?;
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Search { corpus, find, limit } => {
            let corpus = parse_corpus(&corpus).map_err(|e| Failure::Input(e.to_string()))?;
            let hits = search(&corpus, find).map_err(|e| Failure::Input(e.to_string()))?;
            let shown = if limit == 0 { hits.len() } else { hits.len().min(limit) };
            for hit in &hits[..shown] {
                let tag = if hit.counterexample { "counterexample " } else { "" };
                writeln!(out, "{tag}{}  {}", hit.instance, hit.detail)?;
            }
            writeln!(
                out,
                "{} matches in {} instances{}",
                hits.len(),
                corpus.len(),
                if shown < hits.len() { format!(" (showing {shown})") } else { String::new() }
            )?;
            Ok(if hits.iter().any(|h| h.counterexample) { EXIT_FAIL } else { EXIT_PASS })
        }
        Command::Dot { target, x } => {
            let loaded = resolve(&target)?;
            let sets = requested_sets(&x, &loaded)?;
            write!(out, "{}", dot(&loaded.name, &loaded.lattice, &sets))?;
            Ok(EXIT_PASS)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_PASS
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Input(msg) | Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

/// Lattice files shipped with the crate.
pub fn shipped_examples() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("lattices");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map(|rd| rd.filter_map(|e| e.ok().map(|e| e.path())).collect())
        .unwrap_or_default();
    files.retain(|p| p.extension().is_some_and(|e| e == "lat"));
    files.sort();
    files
}
