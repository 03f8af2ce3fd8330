//! Finite abelian groups and their subgroup lattices.
//!
//! A group is specified by its cyclic factor orders: `[2, 4]` denotes
//! `Z2 x Z4`. Elements are mixed-radix codes with the first factor most
//! significant, addition is componentwise, and subgroups are enumerated by
//! closing the cyclic subgroups under pairwise sums. The subgroup lattice
//! orders subgroups by inclusion: meet is intersection and join is the
//! sum-set, which for abelian groups is already a subgroup.
//!
//! For a finite abelian group the following are equivalent: the subgroup
//! lattice is distributive; the group is cyclic; the lattice is
//! pseudocomplemented; no 0-sublattice of it is isomorphic to `M3` or
//! `M23`; and no triple of nontrivial subgroups `(U, V, W)` satisfies
//! `U ∩ W = V ∩ W = 1` and `UW = VW = UV`. [`theorem3_report`] evaluates
//! all five by separate routes: cyclicity falls out of the factor
//! arithmetic and the triple search works on raw element sets, so neither
//! consults the lattice code it is checked against.

use crate::analysis::{is_distributive, is_pseudocomplemented};
use crate::lattice::FiniteLattice;
use crate::patterns::{find_zero_sublattice_embedding, PatternName};
use crate::report::GroupReport;
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::time::Instant;
use thiserror::Error;

/// Default cap on group order for subgroup enumeration.
pub const DEFAULT_MAX_ORDER: u64 = 512;

/// Absolute order ceiling, regardless of the per-call bound. Element codes
/// are 16-bit and the addition table is quadratic in the order, so this is
/// where dense tables stop making sense.
pub const HARD_MAX_ORDER: u64 = 4096;

/// Cap on the number of subgroups a lattice may be built from. Elementary
/// abelian 2-groups blow past this quickly: `(Z2)^7` already has 29212
/// subgroups, and the dense order tables stop being practical.
pub const MAX_SUBGROUPS: usize = 5000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic factor orders must be at least 2, got {value}")]
    InvalidFactor { value: u64 },
    #[error("group order {order} exceeds the configured bound {max}")]
    OrderTooLarge { order: u64, max: u64 },
    #[error("group has more than {max} subgroups; its lattice is out of supported range")]
    TooManySubgroups { max: usize },
}

/// A finite abelian group given as a direct sum of cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupSpec {
    factors: Vec<u64>,
    order: u64,
}

impl AbelianGroupSpec {
    /// Validates factor orders (each at least 2). An empty list is the
    /// trivial group.
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupError> {
        let mut order: u64 = 1;
        for &f in &factors {
            if f < 2 {
                return Err(GroupError::InvalidFactor { value: f });
            }
            order = order.saturating_mul(f);
        }
        Ok(AbelianGroupSpec { factors, order })
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Cyclicity by arithmetic alone: the group is cyclic iff the factor
    /// orders have lcm equal to the group order (an element of that order
    /// exists exactly then).
    pub fn is_cyclic(&self) -> bool {
        let l = self.factors.iter().fold(1u64, |acc, &f| lcm(acc, f));
        l == self.order
    }

    /// Display name, e.g. `Z2 x Z4`; the trivial group is `Z1`.
    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "Z1".to_string();
        }
        self.factors
            .iter()
            .map(|f| format!("Z{f}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }

    /// Decodes an element code into factor digits.
    pub fn decode(&self, code: u16) -> Vec<u64> {
        let mut digits = vec![0u64; self.factors.len()];
        let mut rest = code as u64;
        for (i, &f) in self.factors.iter().enumerate().rev() {
            digits[i] = rest % f;
            rest /= f;
        }
        digits
    }

    /// Human-readable element: a bare digit for one factor, a tuple
    /// otherwise.
    pub fn element_label(&self, code: u16) -> String {
        let digits = self.decode(code);
        match digits.len() {
            0 => "0".to_string(),
            1 => digits[0].to_string(),
            _ => format!(
                "({})",
                digits
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Partitions of `n` with parts in descending order, largest part first.
fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn rec(rest: u64, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = rest.min(cap);
        while part >= 1 {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All abelian groups of order exactly `n`, one per isomorphism class, in
/// elementary divisor form: for each prime power `p^e` dividing `n`, a
/// partition of `e` picks the cyclic `p`-factors. Primes ascend and
/// exponents descend within a prime, so the listing is deterministic.
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianGroupSpec> {
    assert!(n >= 1, "group order must be positive");
    let mut prime_exps: Vec<(u64, u64)> = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            prime_exps.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        prime_exps.push((rest, 1));
    }
    let choices: Vec<(u64, Vec<Vec<u64>>)> = prime_exps
        .into_iter()
        .map(|(p, e)| (p, partitions(e)))
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut factors = Vec::new();
        for (i, (p, parts)) in choices.iter().enumerate() {
            for &exp in &parts[pick[i]] {
                factors.push(p.pow(exp as u32));
            }
        }
        out.push(AbelianGroupSpec::new(factors).expect("prime powers are at least 2"));
        // odometer over the per-prime partition choices
        let mut i = 0;
        loop {
            if i == choices.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < choices[i].1.len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// All abelian groups of order at most `max_order`, ascending by order.
pub fn abelian_groups_up_to(max_order: u64) -> Vec<AbelianGroupSpec> {
    (1..=max_order).flat_map(abelian_groups_of_order).collect()
}

/// A subgroup as its sorted list of element codes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<u16>,
}

impl Subgroup {
    pub fn elements(&self) -> &[u16] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, code: u16) -> bool {
        self.elements.binary_search(&code).is_ok()
    }

    /// Renders the subgroup as its element set.
    pub fn label(&self, spec: &AbelianGroupSpec) -> String {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|&e| spec.element_label(e))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Precomputed addition table; the workhorse for element-set arithmetic.
struct Cayley {
    order: usize,
    add: Vec<u16>,
}

impl Cayley {
    fn new(spec: &AbelianGroupSpec) -> Cayley {
        let order = spec.order as usize;
        let factors = spec.factors();
        let mut add = vec![0u16; order * order];
        // componentwise addition via decode/encode, hoisted per row
        let decode = |code: usize| -> Vec<u64> { spec.decode(code as u16) };
        for a in 0..order {
            let da = decode(a);
            for b in 0..order {
                let db = decode(b);
                let mut code = 0u64;
                for (i, &f) in factors.iter().enumerate() {
                    code = code * f + (da[i] + db[i]) % f;
                }
                add[a * order + b] = code as u16;
            }
        }
        Cayley { order, add }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    /// The cyclic subgroup generated by one element.
    fn cyclic(&self, g: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order);
        set.insert(0);
        let mut x = g;
        while !set.contains(x) {
            set.insert(x);
            x = self.add(x, g);
        }
        set
    }

    /// The sum-set `{a + b}`, a subgroup whenever both inputs are.
    fn sumset(&self, s: &FixedBitSet, t: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order);
        for a in s.ones() {
            for b in t.ones() {
                out.insert(self.add(a, b));
            }
        }
        out
    }
}

/// Enumeration result kept in set form for the lattice and witness
/// machinery; the public API exposes it as sorted [`Subgroup`]s.
struct Enumeration {
    cayley: Cayley,
    sets: Vec<FixedBitSet>,
}

fn enumerate_sets(spec: &AbelianGroupSpec, max_order: u64) -> Result<Enumeration, GroupError> {
    let cap = max_order.min(HARD_MAX_ORDER);
    if spec.order() > cap {
        return Err(GroupError::OrderTooLarge {
            order: spec.order(),
            max: cap,
        });
    }
    let cayley = Cayley::new(spec);
    let mut cyclics: Vec<FixedBitSet> = Vec::new();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    for g in 0..cayley.order {
        let c = cayley.cyclic(g);
        if seen.insert(c.clone()) {
            cyclics.push(c);
        }
    }
    // close under joins with cyclic subgroups; every subgroup is a sum of
    // cyclic ones, so this reaches them all
    let mut queue: Vec<FixedBitSet> = cyclics.clone();
    let mut qi = 0;
    while qi < queue.len() {
        let s = queue[qi].clone();
        qi += 1;
        for c in &cyclics {
            if c.is_subset(&s) {
                continue;
            }
            let t = cayley.sumset(&s, c);
            if seen.insert(t.clone()) {
                if seen.len() > MAX_SUBGROUPS {
                    return Err(GroupError::TooManySubgroups { max: MAX_SUBGROUPS });
                }
                queue.push(t);
            }
        }
    }
    // canonical order: by size, then by element list
    let mut keyed: Vec<(Vec<u16>, FixedBitSet)> = queue
        .into_iter()
        .map(|s| (s.ones().map(|e| e as u16).collect(), s))
        .collect();
    keyed.sort_unstable_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(Enumeration {
        cayley,
        sets: keyed.into_iter().map(|(_, s)| s).collect(),
    })
}

/// All subgroups in canonical order: ascending size, then ascending
/// element list. The trivial subgroup is always index 0 and the full group
/// is always last.
pub fn enumerate_subgroups(
    spec: &AbelianGroupSpec,
    max_order: u64,
) -> Result<Vec<Subgroup>, GroupError> {
    let e = enumerate_sets(spec, max_order)?;
    Ok(e.sets
        .iter()
        .map(|s| Subgroup {
            elements: s.ones().map(|x| x as u16).collect(),
        })
        .collect())
}

/// The subgroup lattice: subgroups in canonical enumeration order, ordered
/// by inclusion, labeled by their element sets. Also returns the
/// subgroups themselves, index-aligned with the lattice.
pub fn subgroup_lattice(
    spec: &AbelianGroupSpec,
    max_order: u64,
) -> Result<(FiniteLattice, Vec<Subgroup>), GroupError> {
    let e = enumerate_sets(spec, max_order)?;
    let subgroups: Vec<Subgroup> = e
        .sets
        .iter()
        .map(|s| Subgroup {
            elements: s.ones().map(|x| x as u16).collect(),
        })
        .collect();
    let labels: Vec<String> = subgroups.iter().map(|s| s.label(spec)).collect();
    let lattice = FiniteLattice::from_leq(
        e.sets.len(),
        |a, b| e.sets[a].is_subset(&e.sets[b]),
        Some(labels),
    )
    .expect("inclusion on a subgroup family is a bounded lattice order");
    Ok((lattice, subgroups))
}

/// Searches for nontrivial subgroups `(U, V, W)` with
/// `U ∩ W = V ∩ W = 1` and `UW = VW = UV`, entirely on element sets.
///
/// Returns indices into the canonical enumeration. The conditions are
/// symmetric in `U` and `V`, so the scan keeps `u < v` and the result is
/// the least such triple in lexicographic order.
pub fn find_subgroup_triple_witness(
    spec: &AbelianGroupSpec,
    max_order: u64,
) -> Result<Option<(usize, usize, usize)>, GroupError> {
    let e = enumerate_sets(spec, max_order)?;
    Ok(witness_in_sets(&e))
}

fn witness_in_sets(e: &Enumeration) -> Option<(usize, usize, usize)> {
    let n = e.sets.len();
    let trivial_meet = |a: &FixedBitSet, b: &FixedBitSet| {
        // the identity lies in every subgroup, so a trivial intersection
        // has exactly one element
        a.intersection_count(b) == 1
    };
    for u in 1..n {
        for v in u + 1..n {
            let uv = e.cayley.sumset(&e.sets[u], &e.sets[v]);
            for w in 1..n {
                if w == u || w == v {
                    continue;
                }
                if !trivial_meet(&e.sets[w], &e.sets[u])
                    || !trivial_meet(&e.sets[w], &e.sets[v])
                {
                    continue;
                }
                if e.cayley.sumset(&e.sets[w], &e.sets[u]) == uv
                    && e.cayley.sumset(&e.sets[w], &e.sets[v]) == uv
                {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}

/// Evaluates the five equivalent conditions for a finite abelian group.
///
/// The subgroup lattice is built once; distributivity, pseudocomplements,
/// and the forbidden-pattern search run on it, while cyclicity and the
/// subgroup-triple search take their independent routes.
pub fn theorem3_report(
    spec: &AbelianGroupSpec,
    max_order: u64,
) -> Result<GroupReport, GroupError> {
    let start = Instant::now();
    let e = enumerate_sets(spec, max_order)?;
    let lattice = FiniteLattice::from_leq(e.sets.len(), |a, b| e.sets[a].is_subset(&e.sets[b]), None)
        .expect("inclusion order");

    let distributivity = is_distributive(&lattice);
    let cyclic = spec.is_cyclic();
    let pc = is_pseudocomplemented(&lattice);
    let m3 = find_zero_sublattice_embedding(&lattice, PatternName::M3, true);
    let m23 = find_zero_sublattice_embedding(&lattice, PatternName::M23, true);
    let witness = witness_in_sets(&e);

    let conds = [
        distributivity.distributive,
        cyclic,
        pc.pseudocomplemented,
        m3.is_none() && m23.is_none(),
        witness.is_none(),
    ];
    Ok(GroupReport {
        factors: spec.factors().to_vec(),
        order: spec.order(),
        subgroup_count: e.sets.len(),
        distributive: conds[0],
        distributivity_violation: distributivity.violation,
        cyclic,
        pseudocomplemented: conds[2],
        pseudocomplement_failure: pc.failure,
        has_forbidden_zero_sublattice: !conds[3],
        m3_embedding: m3.map(|e| e.mapping),
        m23_embedding: m23.map(|e| e.mapping),
        has_subgroup_witness: !conds[4],
        subgroup_witness: witness,
        conditions_agree: conds.iter().all(|&c| c == conds[0]),
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
