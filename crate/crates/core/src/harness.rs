//! Corpus assembly and batch equivalence checking.
//!
//! The standard corpus mixes every small lattice up to isomorphism, the
//! named fixtures, divisor lattices, seeded random lattices (general and
//! modular), and the subgroup lattices of all abelian groups up to an
//! order bound. [`run_theorem1_corpus`] evaluates the three equivalent
//! conditions on every member in parallel and aggregates in input order,
//! so summaries are identical across thread counts.
//!
//! The equivalence only claims anything for modular lattices, so a
//! violation is recorded exactly when a modular member's conditions
//! disagree. Witnesses found on modular members are classified; a closure
//! that is neither `M3` nor `M23` would refute the dichotomy and is
//! reported as a failure rather than assumed impossible.

use crate::generators::{
    self, enumerate_lattices, random_lattice, random_modular_lattice, CorpusSpec, GenError,
};
use crate::groups::{abelian_groups_up_to, subgroup_lattice, GroupError};
use crate::lattice::{CoverList, FiniteLattice};
use crate::patterns::{classify_witness, theorem1_report, PatternName, TernaryWitness};
use crate::report::LatticeReport;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One corpus member. The subject string names its origin, e.g.
/// `exhaustive/5/#3`, `divisor/12`, `group/Z2 x Z4`.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub subject: String,
    pub lattice: FiniteLattice,
}

/// Knobs for [`build_standard_corpus`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub spec: CorpusSpec,
    /// Divisor lattices of every `n` up to this bound.
    pub divisor_limit: u64,
    /// Subgroup lattices of every abelian group of order up to this bound.
    pub max_group_order: u64,
    /// Seeded random modular lattices, sized like the general random ones.
    pub random_modular_count: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            spec: CorpusSpec::default(),
            divisor_limit: 60,
            max_group_order: 36,
            random_modular_count: 100,
        }
    }
}

/// Builds the standard corpus in a fixed, deterministic order:
/// exhaustive classes by size, fixtures, divisor lattices, random
/// lattices, random modular lattices, subgroup lattices.
pub fn build_standard_corpus(config: &CorpusConfig) -> Result<Vec<CorpusEntry>, CorpusError> {
    config.spec.validate()?;
    let mut entries = Vec::new();
    let mut within_size = vec![0usize; config.spec.max_exhaustive_size + 1];
    for l in enumerate_lattices(config.spec.max_exhaustive_size)? {
        let size = l.size();
        entries.push(CorpusEntry {
            subject: format!("exhaustive/{size}/#{}", within_size[size]),
            lattice: l,
        });
        within_size[size] += 1;
    }
    for name in ["m3", "m23", "n5", "chain(5)", "boolean(3)"] {
        entries.push(CorpusEntry {
            subject: format!("fixture/{name}"),
            lattice: generators::fixture(name)?,
        });
    }
    entries.push(CorpusEntry {
        subject: "fixture/diamond(4)".to_string(),
        lattice: generators::diamond(4)?,
    });
    for n in 1..=config.divisor_limit {
        entries.push(CorpusEntry {
            subject: format!("divisor/{n}"),
            lattice: generators::divisor_lattice(n)?,
        });
    }
    for i in 0..config.spec.random_count {
        let seed = config.spec.random_seed + i as u64;
        entries.push(CorpusEntry {
            subject: format!("random/{seed}"),
            lattice: random_lattice(config.spec.random_size, seed)?,
        });
    }
    for i in 0..config.random_modular_count {
        let seed = config.spec.random_seed + i as u64;
        entries.push(CorpusEntry {
            subject: format!("random-modular/{seed}"),
            lattice: random_modular_lattice(config.spec.random_size, seed)?,
        });
    }
    for g in abelian_groups_up_to(config.max_group_order) {
        let (l, _) = subgroup_lattice(&g, config.max_group_order.max(1))?;
        entries.push(CorpusEntry {
            subject: format!("group/{}", g.name()),
            lattice: l,
        });
    }
    Ok(entries)
}

/// A modular corpus member whose three conditions disagreed. Carries the
/// lattice as covers so it can be dumped to a file and replayed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub subject: String,
    pub covers: CoverList,
    pub report: LatticeReport,
}

/// A witness on a modular member whose generated sublattice matched
/// neither forbidden shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationFailure {
    pub subject: String,
    pub witness: (usize, usize, usize),
    pub closure_size: usize,
}

/// Aggregates of one corpus run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub total: usize,
    pub modular: usize,
    pub distributive: usize,
    pub pseudocomplemented: usize,
    pub witnesses_found: usize,
    /// Shape tallies for witnesses on modular members.
    pub m3_closures: usize,
    pub m23_closures: usize,
    pub violations: Vec<ViolationRecord>,
    pub classification_failures: Vec<ClassificationFailure>,
}

impl CorpusSummary {
    /// True when the run is clean: no modular member disagreed and every
    /// witness on a modular member classified.
    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.classification_failures.is_empty()
    }
}

struct EntryOutcome {
    report: LatticeReport,
    covers: Option<CoverList>,
    closure: Option<Result<PatternName, usize>>,
}

fn evaluate_entry(entry: &CorpusEntry) -> EntryOutcome {
    let report = theorem1_report(&entry.lattice, &entry.subject);
    let mut closure = None;
    if report.modular {
        if let Some((a, b, c)) = report.ternary_witness {
            let w = TernaryWitness { a, b, c };
            closure = Some(match classify_witness(&entry.lattice, &w) {
                Ok(cls) => Ok(cls.shape),
                Err(_) => Err(entry.lattice.generated_sublattice(&[a, b, c]).len()),
            });
        }
    }
    let covers = if report.modular && !report.conditions_agree {
        Some(entry.lattice.cover_list())
    } else {
        None
    };
    EntryOutcome {
        report,
        covers,
        closure,
    }
}

/// Runs the three-condition report on every entry, in parallel, and folds
/// the outcomes in input order.
pub fn run_theorem1_corpus(entries: &[CorpusEntry]) -> CorpusSummary {
    let outcomes: Vec<EntryOutcome> = entries.par_iter().map(evaluate_entry).collect();
    let mut summary = CorpusSummary {
        total: entries.len(),
        modular: 0,
        distributive: 0,
        pseudocomplemented: 0,
        witnesses_found: 0,
        m3_closures: 0,
        m23_closures: 0,
        violations: Vec::new(),
        classification_failures: Vec::new(),
    };
    for (entry, o) in entries.iter().zip(outcomes) {
        let r = &o.report;
        summary.modular += r.modular as usize;
        summary.distributive += r.distributive as usize;
        summary.pseudocomplemented += r.pseudocomplemented as usize;
        summary.witnesses_found += r.has_ternary_witness as usize;
        match o.closure {
            Some(Ok(PatternName::M3)) => summary.m3_closures += 1,
            Some(Ok(PatternName::M23)) => summary.m23_closures += 1,
            Some(Ok(PatternName::N5)) | None => {}
            Some(Err(closure_size)) => summary.classification_failures.push(ClassificationFailure {
                subject: entry.subject.clone(),
                witness: r.ternary_witness.expect("closure implies witness"),
                closure_size,
            }),
        }
        if let Some(covers) = o.covers {
            summary.violations.push(ViolationRecord {
                subject: entry.subject.clone(),
                covers,
                report: o.report,
            });
        }
    }
    summary
}

/// One-screen text rendering for the CLI.
pub fn render_summary(s: &CorpusSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!("lattices checked: {}\n", s.total));
    out.push_str(&format!("  modular: {}\n", s.modular));
    out.push_str(&format!("  distributive: {}\n", s.distributive));
    out.push_str(&format!("  pseudocomplemented: {}\n", s.pseudocomplemented));
    out.push_str(&format!("  with ternary witness: {}\n", s.witnesses_found));
    out.push_str(&format!(
        "witness closures on modular lattices: {} M3, {} M23, {} unclassified\n",
        s.m3_closures,
        s.m23_closures,
        s.classification_failures.len()
    ));
    out.push_str(&format!(
        "equivalence violations on modular lattices: {}\n",
        s.violations.len()
    ));
    for v in &s.violations {
        out.push_str(&format!("  VIOLATION {}\n", v.subject));
    }
    for f in &s.classification_failures {
        out.push_str(&format!(
            "  UNCLASSIFIED WITNESS {} at {:?} (closure size {})\n",
            f.subject, f.witness, f.closure_size
        ));
    }
    out
}
