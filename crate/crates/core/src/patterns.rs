//! Forbidden 0-sublattices, ternary witnesses, and the three-way
//! equivalence they decide.
//!
//! For an inductive (in particular, any finite) modular lattice the
//! following are equivalent: the lattice is pseudocomplemented; no
//! 0-sublattice is isomorphic to `M3` or `M23`; and no ternary witness
//! exists, where a ternary witness is a triple `(a, b, c)` of nonzero
//! elements with `c ∧ a = c ∧ b = 0` and `c ∨ a = c ∨ b = a ∨ b`.
//! [`theorem1_report`] evaluates all three conditions on one lattice by
//! separate procedures and records whether they agree.
//!
//! A witness in a modular lattice generates, together with the bottom,
//! either a copy of `M3` (when `a ∧ b = 0`) or a copy of `M23` (when
//! `a ∧ b != 0`); [`classify_witness`] computes that dichotomy and treats
//! any third outcome as evidence that the ambient lattice is not modular,
//! rather than assuming it away.

use crate::analysis::{is_distributive, is_modular, is_pseudocomplemented};
use crate::generators;
use crate::lattice::{is_isomorphic, FiniteLattice};
use crate::report::LatticeReport;
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::time::Instant;
use thiserror::Error;

/// The named small lattices used as search patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternName {
    M3,
    M23,
    N5,
}

impl PatternName {
    /// The pattern as a lattice.
    pub fn lattice(self) -> &'static FiniteLattice {
        match self {
            PatternName::M3 => generators::m3(),
            PatternName::M23 => generators::m23(),
            PatternName::N5 => generators::n5(),
        }
    }

    /// Element order for the backtracking search, chosen so that forced
    /// values (meets and joins of already placed elements) come as early
    /// as possible.
    fn search_order(self) -> &'static [usize] {
        match self {
            // bottom, two atoms, top (forced), third atom
            PatternName::M3 => &[0, 1, 2, 4, 3],
            // bottom, two coatoms, their meet (forced), top (forced),
            // third coatom, second atom
            PatternName::M23 => &[0, 3, 4, 1, 6, 5, 2],
            // bottom, the two-element chain, the side element, top (forced)
            PatternName::N5 => &[0, 1, 3, 2, 4],
        }
    }
}

impl std::fmt::Display for PatternName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PatternName::M3 => write!(f, "M3"),
            PatternName::M23 => write!(f, "M23"),
            PatternName::N5 => write!(f, "N5"),
        }
    }
}

/// A sublattice embedding: `mapping[p]` is the image of pattern element `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternEmbedding {
    pub pattern: PatternName,
    pub mapping: Vec<usize>,
}

/// A triple of nonzero elements with `c ∧ a = c ∧ b = 0` and
/// `c ∨ a = c ∨ b = a ∨ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Shape of the sublattice generated by a witness and the bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessClassification {
    /// Either [`PatternName::M3`] or [`PatternName::M23`].
    pub shape: PatternName,
    /// The generated sublattice, as ascending ambient indices.
    pub elements: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternsError {
    #[error("witness ({a}, {b}, {c}) violates its defining conditions: {reason}")]
    InvalidWitness {
        a: usize,
        b: usize,
        c: usize,
        reason: &'static str,
    },
    #[error(
        "witness generates a {size}-element sublattice that is neither M3 nor M23; \
         the ambient lattice cannot be modular"
    )]
    ClassificationFailed { size: usize },
}

/// Searches for a sublattice of `l` isomorphic to `pattern`.
///
/// With `anchor_bottom` the image of the pattern's bottom is pinned to the
/// bottom of `l`, which makes the image a 0-sublattice; without it the
/// pattern may land anywhere. Candidates are tried in ascending element
/// order, so the result is deterministic. Embeddings are fully verified
/// before being returned.
pub fn find_zero_sublattice_embedding(
    l: &FiniteLattice,
    pattern: PatternName,
    anchor_bottom: bool,
) -> Option<PatternEmbedding> {
    let p = pattern.lattice();
    if p.size() > l.size() {
        return None;
    }
    let order = pattern.search_order();
    debug_assert_eq!(order.len(), p.size());
    let mut mapping = vec![usize::MAX; p.size()];
    let mut used = FixedBitSet::with_capacity(l.size());
    let anchor = anchor_bottom.then(|| (p.bottom(), l.bottom()));
    let found = embed(l, p, order, anchor, 0, &mut mapping, &mut used);
    if !found {
        return None;
    }
    let emb = PatternEmbedding {
        pattern,
        mapping,
    };
    debug_assert_eq!(verify_embedding(l, &emb, anchor_bottom), Ok(()));
    Some(emb)
}

/// Backtracking step: place pattern element `order[k]`.
fn embed(
    l: &FiniteLattice,
    p: &FiniteLattice,
    order: &[usize],
    anchor: Option<(usize, usize)>,
    k: usize,
    mapping: &mut [usize],
    used: &mut FixedBitSet,
) -> bool {
    if k == order.len() {
        return verify_mapped(l, p, mapping);
    }
    let pe = order[k];

    // a single forced candidate, when available
    let mut forced = None;
    if let Some((ap, at)) = anchor {
        if pe == ap {
            forced = Some(at);
        }
    }
    if forced.is_none() {
        'outer: for &q in &order[..k] {
            for &r in &order[..k] {
                if p.meet(q, r) == pe && q != pe && r != pe {
                    forced = Some(l.meet(mapping[q], mapping[r]));
                    break 'outer;
                }
                if p.join(q, r) == pe && q != pe && r != pe {
                    forced = Some(l.join(mapping[q], mapping[r]));
                    break 'outer;
                }
            }
        }
    }

    let try_candidate = |cand: usize, mapping: &mut [usize], used: &mut FixedBitSet| -> bool {
        if used.contains(cand) {
            return false;
        }
        for &q in &order[..k] {
            let img = mapping[q];
            if p.leq(pe, q) != l.leq(cand, img) || p.leq(q, pe) != l.leq(img, cand) {
                return false;
            }
            let pm = p.meet(pe, q);
            if mapping[pm] != usize::MAX && l.meet(cand, img) != mapping[pm] {
                return false;
            }
            let pj = p.join(pe, q);
            if mapping[pj] != usize::MAX && l.join(cand, img) != mapping[pj] {
                return false;
            }
        }
        mapping[pe] = cand;
        used.insert(cand);
        if embed(l, p, order, anchor, k + 1, mapping, used) {
            return true;
        }
        used.remove(cand);
        mapping[pe] = usize::MAX;
        false
    };

    match forced {
        Some(cand) => try_candidate(cand, mapping, used),
        None => (0..l.size()).any(|cand| try_candidate(cand, mapping, used)),
    }
}

/// Full check of a completed assignment: both operations preserved on
/// every pair. The incremental checks only cover pairs whose meet or join
/// was already placed, so the leaf check closes the gap.
fn verify_mapped(l: &FiniteLattice, p: &FiniteLattice, mapping: &[usize]) -> bool {
    for x in p.elements() {
        for y in p.elements() {
            if l.meet(mapping[x], mapping[y]) != mapping[p.meet(x, y)] {
                return false;
            }
            if l.join(mapping[x], mapping[y]) != mapping[p.join(x, y)] {
                return false;
            }
        }
    }
    true
}

/// Re-verifies an embedding against first principles: the mapping must be
/// injective, preserve meet and join on every pair of pattern elements,
/// and (when `require_anchor` is set) send the pattern's bottom to the
/// ambient bottom.
pub fn verify_embedding(
    l: &FiniteLattice,
    emb: &PatternEmbedding,
    require_anchor: bool,
) -> Result<(), String> {
    let p = emb.pattern.lattice();
    let m = &emb.mapping;
    if m.len() != p.size() {
        return Err(format!("mapping has {} entries, pattern has {}", m.len(), p.size()));
    }
    if let Some(&bad) = m.iter().find(|&&i| i >= l.size()) {
        return Err(format!("image {bad} out of range"));
    }
    for (x, &mx) in m.iter().enumerate() {
        for (y, &my) in m.iter().enumerate() {
            if x != y && mx == my {
                return Err(format!("not injective: {x} and {y} both map to {mx}"));
            }
            if l.meet(mx, my) != m[p.meet(x, y)] {
                return Err(format!("meet not preserved on ({x}, {y})"));
            }
            if l.join(mx, my) != m[p.join(x, y)] {
                return Err(format!("join not preserved on ({x}, {y})"));
            }
        }
    }
    if require_anchor && m[p.bottom()] != l.bottom() {
        return Err(format!(
            "pattern bottom maps to {}, not the ambient bottom {}",
            m[p.bottom()],
            l.bottom()
        ));
    }
    Ok(())
}

/// Finds the lexicographically least ternary witness `(a, b, c)`, if any.
///
/// The witness conditions are symmetric in `a` and `b`, so the least triple
/// always has `a < b` and the scan ranges over ordered pairs; `c` runs over
/// the intersection of the two disjointness rows.
pub fn find_ternary_witness(l: &FiniteLattice) -> Option<TernaryWitness> {
    let n = l.size();
    let bottom = l.bottom();
    let mut disjoint: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); n];
    for a in 0..n {
        for b in 0..n {
            if l.meet(a, b) == bottom {
                disjoint[a].insert(b);
            }
        }
    }
    for a in 0..n {
        if a == bottom {
            continue;
        }
        for b in a + 1..n {
            if b == bottom {
                continue;
            }
            let j = l.join(a, b);
            for c in disjoint[a].intersection(&disjoint[b]) {
                if c != bottom && l.join(c, a) == j && l.join(c, b) == j {
                    return Some(TernaryWitness { a, b, c });
                }
            }
        }
    }
    None
}

/// Classifies a witness by the sublattice it generates together with the
/// bottom: `M3` exactly when `a ∧ b = 0`, `M23` when `a ∧ b != 0`, in any
/// modular lattice. The witness is validated first; a generated sublattice
/// that matches neither shape yields [`PatternsError::ClassificationFailed`],
/// which certifies that the ambient lattice is not modular.
pub fn classify_witness(
    l: &FiniteLattice,
    w: &TernaryWitness,
) -> Result<WitnessClassification, PatternsError> {
    let TernaryWitness { a, b, c } = *w;
    let bottom = l.bottom();
    let invalid = |reason| PatternsError::InvalidWitness { a, b, c, reason };
    assert!(a < l.size() && b < l.size() && c < l.size(), "witness out of range");
    if a == bottom || b == bottom || c == bottom {
        return Err(invalid("a component is the bottom element"));
    }
    if l.meet(c, a) != bottom {
        return Err(invalid("c ∧ a is not 0"));
    }
    if l.meet(c, b) != bottom {
        return Err(invalid("c ∧ b is not 0"));
    }
    let j = l.join(a, b);
    if l.join(c, a) != j || l.join(c, b) != j {
        return Err(invalid("the three pairwise joins differ"));
    }

    // the bottom joins the closure on its own, via c ∧ a
    let elements: Vec<usize> = l.generated_sublattice(&[a, b, c]).into_iter().collect();
    let (sub, _) = l
        .restrict_to_sublattice(&elements)
        .expect("generated sublattices are closed");
    for shape in [PatternName::M3, PatternName::M23] {
        if is_isomorphic(&sub, shape.lattice()).is_some() {
            return Ok(WitnessClassification { shape, elements });
        }
    }
    Err(PatternsError::ClassificationFailed {
        size: elements.len(),
    })
}

/// Evaluates the three equivalent conditions on one lattice by independent
/// procedures, along with the modular hypothesis and distributivity, and
/// reports whether the conditions agree.
pub fn theorem1_report(l: &FiniteLattice, subject: impl Into<String>) -> LatticeReport {
    let start = Instant::now();
    let modularity = is_modular(l);
    let distributivity = is_distributive(l);
    let pc = is_pseudocomplemented(l);
    let m3 = find_zero_sublattice_embedding(l, PatternName::M3, true);
    let m23 = find_zero_sublattice_embedding(l, PatternName::M23, true);
    let witness = find_ternary_witness(l);

    let cond_a = pc.pseudocomplemented;
    let cond_b = m3.is_none() && m23.is_none();
    let cond_c = witness.is_none();
    LatticeReport {
        subject: subject.into(),
        size: l.size(),
        modular: modularity.modular,
        modularity_violation: modularity.violation,
        distributive: distributivity.distributive,
        distributivity_violation: distributivity.violation,
        pseudocomplemented: cond_a,
        pseudocomplement_failure: pc.failure,
        has_forbidden_zero_sublattice: !cond_b,
        m3_embedding: m3.map(|e| e.mapping),
        m23_embedding: m23.map(|e| e.mapping),
        has_ternary_witness: !cond_c,
        ternary_witness: witness.map(|w| (w.a, w.b, w.c)),
        conditions_agree: cond_a == cond_b && cond_b == cond_c,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}
