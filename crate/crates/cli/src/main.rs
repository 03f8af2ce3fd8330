//! Command line front end: analyze lattice files, inspect subgroup
//! lattices of finite abelian groups, generate corpora, and export Hasse
//! diagrams.
//!
//! Exit codes are a stable contract: 0 for success or agreement, 1 when an
//! equivalence violation is found, 2 for invalid input.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use pclat::generators::{self, GenError};
use pclat::groups::{self, AbelianGroupSpec, DEFAULT_MAX_ORDER};
use pclat::harness::{build_standard_corpus, run_theorem1_corpus, CorpusConfig};
use pclat::io::{hasse_dot, lattice_to_json, read_lattice, write_dot, write_lattice};
use pclat::lattice::CoverList;
use pclat::patterns::{theorem1_report, verify_embedding, PatternEmbedding, PatternName};
use pclat::report::{render_group_report, render_lattice_report};
use pclat::FiniteLattice;
use std::path::{Path, PathBuf};

const EXIT_OK: i32 = 0;
const EXIT_VIOLATION: i32 = 1;
const EXIT_INVALID: i32 = 2;

#[derive(Parser)]
#[command(
    name = "pclat",
    version,
    about = "Pseudocomplements in finite lattices: analysis, forbidden 0-sublattices, subgroup lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a lattice file: modularity, distributivity,
    /// pseudocomplements, forbidden 0-sublattices, ternary witnesses
    Check {
        /// Lattice file (JSON with size, covers, optional labels)
        path: PathBuf,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Spell out embeddings and witnesses element by element
        #[arg(long)]
        witness: bool,
    },
    /// Check the five equivalent conditions on a finite abelian group
    Group {
        /// Cyclic factor orders, comma separated (e.g. 2,4 for Z2 x Z4)
        factors: String,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Spell out embeddings and witnesses element by element
        #[arg(long)]
        witness: bool,
        /// Group order bound
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u64,
        /// Also write the subgroup lattice's Hasse diagram to this file
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate a lattice and emit it in the JSON file format
    Gen {
        /// One of: m3, m23, n5, chain(k), boolean(k), diamond(k),
        /// divisor(n), random(size,seed), modular(size,seed)
        spec: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the three-condition equivalence over a corpus of lattices
    Corpus {
        /// Include every lattice of up to this many elements (max 8)
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        /// Include divisor lattices of 1..=N
        #[arg(long, default_value_t = 60)]
        divisors: u64,
        /// Number of seeded random lattices (and random modular lattices)
        #[arg(long, default_value_t = 100)]
        random: usize,
        /// Size of each random lattice
        #[arg(long, default_value_t = 30)]
        size: usize,
        /// Seed of the first random lattice; lattice i uses seed + i
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Include subgroup lattices of all abelian groups up to this order
        #[arg(long, default_value_t = 36)]
        max_order: u64,
        /// Emit the summary as JSON
        #[arg(long)]
        json: bool,
    },
    /// Export a lattice file as a DOT Hasse diagram
    Export {
        /// Lattice file (JSON)
        path: PathBuf,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    // Restore the default SIGPIPE disposition so that a downstream reader
    // closing early (pclat ... | head) kills the process quietly instead of
    // panicking on a failed write to stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_INVALID
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Check {
            path,
            json,
            witness,
        } => cmd_check(&path, json, witness),
        Command::Group {
            factors,
            json,
            witness,
            max_order,
            dot,
        } => cmd_group(&factors, json, witness, max_order, dot.as_deref()),
        Command::Gen { spec, out } => cmd_gen(&spec, out.as_deref()),
        Command::Corpus {
            max_size,
            divisors,
            random,
            size,
            seed,
            max_order,
            json,
        } => cmd_corpus(max_size, divisors, random, size, seed, max_order, json),
        Command::Export { path, out } => cmd_export(&path, out.as_deref()),
    }
}

/// Re-verifies the witness payloads carried by a report against the
/// lattice they were computed from. A failure here is an internal
/// inconsistency, reported as an equivalence violation.
fn reverify(
    l: &FiniteLattice,
    m3: &Option<Vec<usize>>,
    m23: &Option<Vec<usize>>,
    ternary: Option<(usize, usize, usize)>,
) -> Result<(), String> {
    if let Some(m) = m3 {
        verify_embedding(
            l,
            &PatternEmbedding {
                pattern: PatternName::M3,
                mapping: m.clone(),
            },
            true,
        )?;
    }
    if let Some(m) = m23 {
        verify_embedding(
            l,
            &PatternEmbedding {
                pattern: PatternName::M23,
                mapping: m.clone(),
            },
            true,
        )?;
    }
    if let Some((a, b, c)) = ternary {
        let bottom = l.bottom();
        if a == bottom || b == bottom || c == bottom {
            return Err(format!("witness ({a}, {b}, {c}) touches the bottom"));
        }
        if l.meet(c, a) != bottom || l.meet(c, b) != bottom {
            return Err(format!("witness ({a}, {b}, {c}) is not disjoint from c"));
        }
        let j = l.join(a, b);
        if l.join(c, a) != j || l.join(c, b) != j {
            return Err(format!("witness ({a}, {b}, {c}) joins differ"));
        }
    }
    Ok(())
}

fn cmd_check(path: &Path, json: bool, witness: bool) -> Result<i32> {
    let l = read_lattice(path)?;
    let report = theorem1_report(&l, path.display().to_string());
    if let Err(e) = reverify(&l, &report.m3_embedding, &report.m23_embedding, report.ternary_witness) {
        eprintln!("internal inconsistency: {e}");
        return Ok(EXIT_VIOLATION);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", render_lattice_report(&report, &l, witness));
    }
    if report.modular && !report.conditions_agree {
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn parse_factors(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<u64>()
                .with_context(|| format!("invalid factor {part:?}"))
        })
        .collect()
}

fn cmd_group(
    factors: &str,
    json: bool,
    witness: bool,
    max_order: u64,
    dot: Option<&Path>,
) -> Result<i32> {
    let spec = AbelianGroupSpec::new(parse_factors(factors)?)?;
    let report = groups::theorem3_report(&spec, max_order)?;
    let (l, _) = groups::subgroup_lattice(&spec, max_order)?;
    if let Err(e) = reverify(&l, &report.m3_embedding, &report.m23_embedding, report.subgroup_witness) {
        eprintln!("internal inconsistency: {e}");
        return Ok(EXIT_VIOLATION);
    }
    if let Some(dot_path) = dot {
        write_dot(dot_path, &l)?;
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", render_group_report(&report, &l, witness));
    }
    if !report.conditions_agree {
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn parse_gen_spec(spec: &str) -> Result<FiniteLattice> {
    match generators::fixture(spec) {
        Ok(l) => return Ok(l),
        Err(GenError::UnknownFixture(_)) => {}
        Err(e) => return Err(e.into()),
    }
    let (name, args) = spec
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .ok_or_else(|| anyhow!("unknown generator {spec:?}"))?;
    let nums: Vec<u64> = args
        .split(',')
        .map(|a| a.trim().parse::<u64>().with_context(|| format!("bad argument {a:?}")))
        .collect::<Result<_>>()?;
    match (name, nums.as_slice()) {
        ("diamond", [k]) => Ok(generators::diamond(*k as usize)?),
        ("divisor", [n]) => Ok(generators::divisor_lattice(*n)?),
        ("random", [size, seed]) => Ok(generators::random_lattice(*size as usize, *seed)?),
        ("modular", [size, seed]) => {
            Ok(generators::random_modular_lattice(*size as usize, *seed)?)
        }
        ("diamond" | "divisor", _) => bail!("{name} takes one argument, got {}", nums.len()),
        ("random" | "modular", _) => {
            bail!("{name} takes two arguments (size, seed), got {}", nums.len())
        }
        _ => bail!("unknown generator {spec:?}"),
    }
}

fn cmd_gen(spec: &str, out: Option<&Path>) -> Result<i32> {
    let l = parse_gen_spec(spec)?;
    match out {
        Some(path) => write_lattice(path, &l)?,
        None => print!("{}", lattice_to_json(&l)),
    }
    Ok(EXIT_OK)
}

fn cmd_corpus(
    max_size: usize,
    divisors: u64,
    random: usize,
    size: usize,
    seed: u64,
    max_order: u64,
    json: bool,
) -> Result<i32> {
    let mut config = CorpusConfig {
        divisor_limit: divisors,
        max_group_order: max_order,
        random_modular_count: random,
        ..CorpusConfig::default()
    };
    config.spec.max_exhaustive_size = max_size;
    config.spec.random_count = random;
    config.spec.random_size = size;
    config.spec.random_seed = seed;
    let entries = build_standard_corpus(&config)?;
    let summary = run_theorem1_corpus(&entries);
    if json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
    } else {
        print!("{}", pclat::harness::render_summary(&summary));
    }
    // dump any violating lattice so the run can be replayed
    for (i, v) in summary.violations.iter().enumerate() {
        let name = format!("violation-{i}-{}.json", sanitize(&v.subject));
        let covers = CoverList {
            size: v.covers.size,
            covers: v.covers.covers.clone(),
        };
        let l = FiniteLattice::from_covers(&covers)
            .expect("violation covers came from a valid lattice");
        write_lattice(Path::new(&name), &l)?;
        eprintln!("violating lattice written to {name}");
    }
    if summary.clean() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VIOLATION)
    }
}

fn sanitize(subject: &str) -> String {
    subject
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { '-' })
        .collect()
}

fn cmd_export(path: &Path, out: Option<&Path>) -> Result<i32> {
    let l = read_lattice(path)?;
    match out {
        Some(dot_path) => write_dot(dot_path, &l)?,
        None => print!("{}", hasse_dot(&l)),
    }
    Ok(EXIT_OK)
}
