//! Serializable analysis reports and their plain-text rendering.
//!
//! Reports are the machine interface: every verdict a report states is
//! accompanied by the witness payload that proves it (a violating triple,
//! an embedding, a failing element), so a consumer can re-verify claims
//! without rerunning the analysis. All index payloads refer to elements of
//! the analyzed lattice; the text renderers translate them through element
//! labels when labels exist.

use crate::analysis::Triple;
use crate::lattice::FiniteLattice;
use serde::{Deserialize, Serialize};

/// Joint verdict of the three pseudocomplementedness characterizations on
/// one lattice, plus the modularity hypothesis they depend on.
///
/// The three conditions are: (a) every element has a pseudocomplement,
/// (b) no 0-sublattice is isomorphic to `M3` or `M23`, (c) no ternary
/// witness exists. They are equivalent for modular lattices;
/// `conditions_agree` records whether they in fact coincided, and `modular`
/// records whether the equivalence was guaranteed to begin with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    /// What was analyzed, e.g. a file name or generator expression.
    pub subject: String,
    pub size: usize,
    pub modular: bool,
    pub modularity_violation: Option<Triple>,
    pub distributive: bool,
    pub distributivity_violation: Option<Triple>,
    /// Condition (a).
    pub pseudocomplemented: bool,
    /// Least element without a pseudocomplement and its two least maximal
    /// disjoint elements.
    pub pseudocomplement_failure: Option<Triple>,
    /// Negation of condition (b).
    pub has_forbidden_zero_sublattice: bool,
    pub m3_embedding: Option<Vec<usize>>,
    pub m23_embedding: Option<Vec<usize>>,
    /// Negation of condition (c).
    pub has_ternary_witness: bool,
    pub ternary_witness: Option<Triple>,
    /// Whether (a), (b), (c) gave one answer.
    pub conditions_agree: bool,
    pub elapsed_ms: u64,
}

impl LatticeReport {
    /// The three condition booleans in order: pseudocomplemented, no
    /// forbidden 0-sublattice, no ternary witness.
    pub fn conditions(&self) -> [bool; 3] {
        [
            self.pseudocomplemented,
            !self.has_forbidden_zero_sublattice,
            !self.has_ternary_witness,
        ]
    }
}

/// Verdict of the five equivalent conditions on a finite abelian group and
/// its subgroup lattice: (i) the lattice is distributive, (ii) the group is
/// cyclic, (iii) the lattice is pseudocomplemented, (iv) no 0-sublattice is
/// isomorphic to `M3` or `M23`, (v) no triple of nontrivial subgroups
/// `(U, V, W)` has `U ∩ W = V ∩ W = 1` and `UW = VW = UV`.
///
/// Cyclicity is decided arithmetically from the factor decomposition, and
/// the subgroup triple search works on element sets, so (ii) and (v) are
/// independent of the lattice machinery that decides (i), (iii), (iv).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    /// Cyclic factor orders defining the group.
    pub factors: Vec<u64>,
    pub order: u64,
    pub subgroup_count: usize,
    /// Condition (i).
    pub distributive: bool,
    pub distributivity_violation: Option<Triple>,
    /// Condition (ii).
    pub cyclic: bool,
    /// Condition (iii).
    pub pseudocomplemented: bool,
    pub pseudocomplement_failure: Option<Triple>,
    /// Negation of condition (iv).
    pub has_forbidden_zero_sublattice: bool,
    pub m3_embedding: Option<Vec<usize>>,
    pub m23_embedding: Option<Vec<usize>>,
    /// Negation of condition (v); indices refer to the canonical subgroup
    /// enumeration, which is also the subgroup lattice's element order.
    pub has_subgroup_witness: bool,
    pub subgroup_witness: Option<Triple>,
    /// Whether all five conditions gave one answer.
    pub conditions_agree: bool,
    pub elapsed_ms: u64,
}

impl GroupReport {
    /// The five condition booleans in order (i)..(v).
    pub fn conditions(&self) -> [bool; 5] {
        [
            self.distributive,
            self.cyclic,
            self.pseudocomplemented,
            !self.has_forbidden_zero_sublattice,
            !self.has_subgroup_witness,
        ]
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn show(l: &FiniteLattice, i: usize) -> String {
    l.display_element(i)
}

fn show_triple(l: &FiniteLattice, t: Triple) -> String {
    format!("({}, {}, {})", show(l, t.0), show(l, t.1), show(l, t.2))
}

fn show_mapping(l: &FiniteLattice, pattern: &str, mapping: &[usize]) -> String {
    let images: Vec<String> = mapping.iter().map(|&i| show(l, i)).collect();
    format!("  {} embedding: [{}]\n", pattern, images.join(", "))
}

/// Renders a lattice report for terminal output. With `verbose`, embeddings
/// and the pseudocomplement failure are spelled out element by element.
pub fn render_lattice_report(r: &LatticeReport, l: &FiniteLattice, verbose: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("subject: {} ({} elements)\n", r.subject, r.size));
    match r.modularity_violation {
        Some(t) => out.push_str(&format!(
            "modular: no (law fails at {})\n",
            show_triple(l, t)
        )),
        None => out.push_str("modular: yes\n"),
    }
    match r.distributivity_violation {
        Some(t) => out.push_str(&format!(
            "distributive: no (law fails at {})\n",
            show_triple(l, t)
        )),
        None => out.push_str("distributive: yes\n"),
    }
    match r.pseudocomplement_failure {
        Some((a, m1, m2)) => out.push_str(&format!(
            "pseudocomplemented: no (element {} has maximal disjoint elements {} and {})\n",
            show(l, a),
            show(l, m1),
            show(l, m2)
        )),
        None => out.push_str("pseudocomplemented: yes\n"),
    }
    let forbidden = match (&r.m3_embedding, &r.m23_embedding) {
        (Some(_), Some(_)) => "found M3 and M23",
        (Some(_), None) => "found M3",
        (None, Some(_)) => "found M23",
        (None, None) => "none",
    };
    out.push_str(&format!("forbidden 0-sublattice (M3 / M23): {forbidden}\n"));
    match r.ternary_witness {
        Some(t) => out.push_str(&format!("ternary witness: {}\n", show_triple(l, t))),
        None => out.push_str("ternary witness: none\n"),
    }
    out.push_str(&format!(
        "conditions agree: {}{}\n",
        yes_no(r.conditions_agree),
        if r.modular {
            ""
        } else {
            " (lattice is not modular; agreement is not guaranteed)"
        }
    ));
    if verbose {
        if let Some(m) = &r.m3_embedding {
            out.push_str(&show_mapping(l, "M3", m));
        }
        if let Some(m) = &r.m23_embedding {
            out.push_str(&show_mapping(l, "M23", m));
        }
    }
    out.push_str(&format!("elapsed: {} ms\n", r.elapsed_ms));
    out
}

/// Renders a group report. `l` must be the group's subgroup lattice, whose
/// labels describe the subgroups.
pub fn render_group_report(r: &GroupReport, l: &FiniteLattice, verbose: bool) -> String {
    let factors: Vec<String> = r.factors.iter().map(|f| format!("Z{f}")).collect();
    let mut out = String::new();
    out.push_str(&format!(
        "group: {} (order {}, {} subgroups)\n",
        factors.join(" x "),
        r.order,
        r.subgroup_count
    ));
    out.push_str(&format!("(i)   subgroup lattice distributive: {}\n", yes_no(r.distributive)));
    out.push_str(&format!(
        "(ii)  cyclic (= locally cyclic, finite case): {}\n",
        yes_no(r.cyclic)
    ));
    out.push_str(&format!("(iii) pseudocomplemented: {}\n", yes_no(r.pseudocomplemented)));
    out.push_str(&format!(
        "(iv)  no forbidden 0-sublattice: {}\n",
        yes_no(!r.has_forbidden_zero_sublattice)
    ));
    out.push_str(&format!(
        "(v)   no subgroup witness triple: {}\n",
        yes_no(!r.has_subgroup_witness)
    ));
    out.push_str(&format!("conditions agree: {}\n", yes_no(r.conditions_agree)));
    if verbose {
        if let Some(t) = r.distributivity_violation {
            out.push_str(&format!("  distributivity fails at {}\n", show_triple(l, t)));
        }
        if let Some((a, m1, m2)) = r.pseudocomplement_failure {
            out.push_str(&format!(
                "  {} has maximal disjoint elements {} and {}\n",
                show(l, a),
                show(l, m1),
                show(l, m2)
            ));
        }
        if let Some(m) = &r.m3_embedding {
            out.push_str(&show_mapping(l, "M3", m));
        }
        if let Some(m) = &r.m23_embedding {
            out.push_str(&show_mapping(l, "M23", m));
        }
        if let Some((u, v, w)) = r.subgroup_witness {
            out.push_str(&format!(
                "  witness subgroups: U = {}, V = {}, W = {}\n",
                show(l, u),
                show(l, v),
                show(l, w)
            ));
        }
    }
    out.push_str(&format!("elapsed: {} ms\n", r.elapsed_ms));
    out
}
