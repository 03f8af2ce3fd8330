//! Lattice corpora: named fixtures, divisor lattices, exhaustive
//! enumeration of small lattices, and seeded random generation.
//!
//! Everything here is deterministic. The random generators take an explicit
//! seed and drive a fixed-algorithm stream cipher RNG, so a `(size, seed)`
//! pair denotes the same lattice on every platform and in every run.

use crate::lattice::{CoverList, FiniteLattice};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("{what} must be between {min} and {max}, got {value}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },
    #[error("unknown fixture {0:?} (expected m3, m23, n5, chain(k), or boolean(k))")]
    UnknownFixture(String),
}

/// Cover lists for the three named five-to-seven element lattices. These
/// arrays are the single defining source for the fixtures; pattern searches
/// and generators both read them from here.
///
/// `M3`, the diamond: three atoms between bottom and top. The smallest
/// modular non-distributive lattice.
pub const M3_COVERS: &[(usize, usize)] = &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];

/// `M23`: bottom 0, atoms 1 and 2, coatoms 3, 4, 5, top 6, where atom 1
/// lies under all three coatoms and atom 2 only under coatom 5. Modular,
/// and the minimal modular lattice beyond `M3` that fails
/// pseudocomplementedness: atom 2 has the two maximal disjoint elements
/// 3 and 4.
pub const M23_COVERS: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 5),
    (3, 6),
    (4, 6),
    (5, 6),
];

/// `N5`, the pentagon: 0 < 1 < 3 < top and 0 < 2 < top. The canonical
/// non-modular lattice; a lattice is modular iff it has no sublattice
/// isomorphic to it.
pub const N5_COVERS: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)];

fn build_static(size: usize, covers: &[(usize, usize)]) -> FiniteLattice {
    FiniteLattice::from_covers(&CoverList {
        size,
        covers: covers.to_vec(),
    })
    .expect("fixture covers are valid")
}

/// The diamond `M3`.
pub fn m3() -> &'static FiniteLattice {
    static L: OnceLock<FiniteLattice> = OnceLock::new();
    L.get_or_init(|| build_static(5, M3_COVERS))
}

/// The seven-element lattice `M23`.
pub fn m23() -> &'static FiniteLattice {
    static L: OnceLock<FiniteLattice> = OnceLock::new();
    L.get_or_init(|| build_static(7, M23_COVERS))
}

/// The pentagon `N5`.
pub fn n5() -> &'static FiniteLattice {
    static L: OnceLock<FiniteLattice> = OnceLock::new();
    L.get_or_init(|| build_static(5, N5_COVERS))
}

/// The `k`-element chain.
pub fn chain(k: usize) -> Result<FiniteLattice, GenError> {
    if !(1..=4096).contains(&k) {
        return Err(GenError::OutOfRange {
            what: "chain length",
            value: k as u64,
            min: 1,
            max: 4096,
        });
    }
    let covers = (0..k - 1).map(|i| (i, i + 1)).collect();
    Ok(FiniteLattice::from_covers(&CoverList { size: k, covers }).expect("chain"))
}

/// The boolean lattice of subsets of a `k`-element set; element `m` is the
/// subset with bit mask `m`.
pub fn boolean(k: u32) -> Result<FiniteLattice, GenError> {
    if k > 12 {
        return Err(GenError::OutOfRange {
            what: "boolean exponent",
            value: k as u64,
            min: 0,
            max: 12,
        });
    }
    let size = 1usize << k;
    let mut covers = Vec::with_capacity(size * k as usize / 2);
    for m in 0..size {
        for i in 0..k {
            if m >> i & 1 == 0 {
                covers.push((m, m | 1 << i));
            }
        }
    }
    Ok(FiniteLattice::from_covers(&CoverList { size, covers }).expect("boolean"))
}

/// A diamond with `k` atoms (`k >= 1`): bottom, the atoms, top.
pub fn diamond(k: usize) -> Result<FiniteLattice, GenError> {
    if !(1..=4096).contains(&k) {
        return Err(GenError::OutOfRange {
            what: "diamond atom count",
            value: k as u64,
            min: 1,
            max: 4096,
        });
    }
    let top = k + 1;
    let mut covers = Vec::with_capacity(2 * k);
    for a in 1..=k {
        covers.push((0, a));
        covers.push((a, top));
    }
    Ok(FiniteLattice::from_covers(&CoverList {
        size: k + 2,
        covers,
    })
    .expect("diamond"))
}

/// Looks up a fixture by name: `m3`, `m23`, `n5`, `chain(k)`, or
/// `boolean(k)`.
pub fn fixture(name: &str) -> Result<FiniteLattice, GenError> {
    let name = name.trim();
    match name {
        "m3" => return Ok(m3().clone()),
        "m23" => return Ok(m23().clone()),
        "n5" => return Ok(n5().clone()),
        _ => {}
    }
    if let Some(arg) = name
        .strip_prefix("chain(")
        .and_then(|r| r.strip_suffix(')'))
    {
        if let Ok(k) = arg.trim().parse::<usize>() {
            return chain(k);
        }
    }
    if let Some(arg) = name
        .strip_prefix("boolean(")
        .and_then(|r| r.strip_suffix(')'))
    {
        if let Ok(k) = arg.trim().parse::<u32>() {
            return boolean(k);
        }
    }
    Err(GenError::UnknownFixture(name.to_string()))
}

/// The lattice of divisors of `n` ordered by divisibility, with divisor
/// labels. Meet is gcd, join is lcm. Distributive for every `n`.
pub fn divisor_lattice(n: u64) -> Result<FiniteLattice, GenError> {
    if !(1..=1_000_000).contains(&n) {
        return Err(GenError::OutOfRange {
            what: "divisor lattice argument",
            value: n,
            min: 1,
            max: 1_000_000,
        });
    }
    let mut divisors = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divisors.push(d);
            if d != n / d {
                divisors.push(n / d);
            }
        }
        d += 1;
    }
    divisors.sort_unstable();
    let labels = divisors.iter().map(|d| d.to_string()).collect();
    Ok(
        FiniteLattice::from_leq(divisors.len(), |a, b| divisors[b] % divisors[a] == 0, Some(labels))
            .expect("divisibility is a lattice order"),
    )
}

/// All lattices with at most `max_size` elements, one representative per
/// isomorphism class, grouped by size and canonically ordered.
///
/// Enumerates naturally labeled posets (down-sets chosen level by level),
/// filters for bounded lattices, and deduplicates by a canonical form: the
/// minimum of the packed order matrix over all invariant-compatible
/// relabelings. `max_size` is capped at 8 to keep the search space sane.
pub fn enumerate_lattices(max_size: usize) -> Result<Vec<FiniteLattice>, GenError> {
    if !(1..=8).contains(&max_size) {
        return Err(GenError::OutOfRange {
            what: "max enumeration size",
            value: max_size as u64,
            min: 1,
            max: 8,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_size {
        let mut canon_keys: Vec<u64> = Vec::new();
        let mut seen: HashSet<u64> = HashSet::new();
        let mut down = [0u16; 8];
        collect_lattices(n, 1, &mut down, &mut seen, &mut canon_keys);
        canon_keys.sort_unstable();
        for key in canon_keys {
            out.push(lattice_from_key(n, key));
        }
    }
    Ok(out)
}

/// Depth-first enumeration of naturally labeled posets on `0..n`: element
/// `i` picks any downward-closed subset of `0..i` as its strict down-set.
/// Element 0 always has the empty down-set, so recursion starts at 1.
fn collect_lattices(
    n: usize,
    i: usize,
    down: &mut [u16; 8],
    seen: &mut HashSet<u64>,
    keys: &mut Vec<u64>,
) {
    if i == n {
        if is_bounded_lattice_masks(n, down) {
            let key = canonical_key(n, down);
            if seen.insert(key) {
                keys.push(key);
            }
        }
        return;
    }
    'mask: for mask in 0u16..(1 << i) {
        let mut rest = mask;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if down[x] & !mask != 0 {
                continue 'mask;
            }
        }
        down[i] = mask;
        collect_lattices(n, i + 1, down, seen, keys);
    }
    down[i] = 0;
}

/// Bounded-lattice test on strict down-set masks: unique minimal element,
/// unique maximal element, and a greatest lower bound and least upper bound
/// for every pair.
fn is_bounded_lattice_masks(n: usize, down: &[u16; 8]) -> bool {
    let mut up = [0u16; 8];
    for y in 0..n {
        let mut rest = down[y];
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            up[x] |= 1 << y;
        }
    }
    if (0..n).filter(|&x| down[x] == 0).count() != 1 {
        return false;
    }
    if (0..n).filter(|&x| up[x] == 0).count() != 1 {
        return false;
    }
    let mut lower = [0u16; 8];
    let mut upper = [0u16; 8];
    for x in 0..n {
        lower[x] = down[x] | 1 << x;
        upper[x] = up[x] | 1 << x;
    }
    for x in 0..n {
        for y in x + 1..n {
            let clb = lower[x] & lower[y];
            if !has_greatest(clb, &lower) {
                return false;
            }
            let cub = upper[x] & upper[y];
            if !has_greatest(cub, &upper) {
                return false;
            }
        }
    }
    true
}

/// Whether the set `mask` has a member whose closed bound-set equals
/// `mask`: a greatest element with respect to the direction of `bounds`.
fn has_greatest(mask: u16, bounds: &[u16; 8]) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let g = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if bounds[g] == mask {
            return true;
        }
    }
    false
}

/// Canonical form of a poset on at most 8 elements: the order matrix packed
/// into a `u64` (bit `new_x * n + new_y` set iff `x <= y`), minimized over
/// all relabelings that respect the (|down|, |up|) invariant partition.
fn canonical_key(n: usize, down: &[u16; 8]) -> u64 {
    let mut up = [0u16; 8];
    for y in 0..n {
        let mut rest = down[y];
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            up[x] |= 1 << y;
        }
    }
    let inv: Vec<(u32, u32)> = (0..n)
        .map(|x| (down[x].count_ones(), up[x].count_ones()))
        .collect();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut sorted_invs: Vec<(u32, u32)> = inv.clone();
    sorted_invs.sort_unstable();
    sorted_invs.dedup();
    for target in &sorted_invs {
        cells.push((0..n).filter(|&x| inv[x] == *target).collect());
    }

    let mut best = u64::MAX;
    let mut perm = [0usize; 8];
    permute_cells(&cells, 0, 0, &mut perm, &mut |perm| {
        let mut key = 0u64;
        for x in 0..n {
            for y in 0..n {
                let le = x == y || down[y] >> x & 1 == 1;
                if le {
                    key |= 1 << (perm[x] * n + perm[y]);
                }
            }
        }
        if key < best {
            best = key;
        }
    });
    best
}

/// Visits every assignment of new positions to elements where each
/// invariant cell maps onto its own contiguous block of positions.
fn permute_cells(
    cells: &[Vec<usize>],
    ci: usize,
    offset: usize,
    perm: &mut [usize; 8],
    visit: &mut impl FnMut(&[usize; 8]),
) {
    if ci == cells.len() {
        visit(perm);
        return;
    }
    let cell = &cells[ci];
    let mut taken = vec![false; cell.len()];
    assign_cell(cells, ci, offset, cell, &mut taken, 0, perm, visit);
}

#[allow(clippy::too_many_arguments)]
fn assign_cell(
    cells: &[Vec<usize>],
    ci: usize,
    offset: usize,
    cell: &[usize],
    taken: &mut [bool],
    k: usize,
    perm: &mut [usize; 8],
    visit: &mut impl FnMut(&[usize; 8]),
) {
    if k == cell.len() {
        permute_cells(cells, ci + 1, offset + cell.len(), perm, visit);
        return;
    }
    for (j, &elem) in cell.iter().enumerate() {
        if !taken[j] {
            taken[j] = true;
            perm[elem] = offset + k;
            assign_cell(cells, ci, offset, cell, taken, k + 1, perm, visit);
            taken[j] = false;
        }
    }
}

/// Rebuilds a lattice from a packed canonical order matrix.
fn lattice_from_key(n: usize, key: u64) -> FiniteLattice {
    FiniteLattice::from_leq(n, |x, y| key >> (x * n + y) & 1 == 1, None)
        .expect("canonical keys come from validated lattices")
}

/// A random lattice of exactly `size` elements for the given seed.
///
/// Grows a connected Hasse diagram upward (each new element covers a small
/// random set of earlier ones, the final element covers all maximal ones)
/// and rejects candidates that fail the lattice property. Every retry
/// reseeds the RNG from `(seed, attempt)` and lowers the probability of
/// multi-cover elements; from attempt 8 on the diagram is a tree plus top,
/// which is always a lattice, so the loop terminates.
pub fn random_lattice(size: usize, seed: u64) -> Result<FiniteLattice, GenError> {
    if !(2..=2000).contains(&size) {
        return Err(GenError::OutOfRange {
            what: "random lattice size",
            value: size as u64,
            min: 2,
            max: 2000,
        });
    }
    for attempt in 0u64.. {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let covers = grow_random_diagram(size, &mut rng, attempt);
        if let Ok(l) = FiniteLattice::from_covers(&CoverList { size, covers }) {
            return Ok(l);
        }
    }
    unreachable!("tree-shaped attempts always succeed")
}

fn grow_random_diagram(size: usize, rng: &mut ChaCha8Rng, attempt: u64) -> Vec<(usize, usize)> {
    let p2 = if attempt >= 8 {
        0.0
    } else {
        0.22 / (1.0 + attempt as f64)
    };
    let p3 = p2 * 0.3;
    let mut covers = Vec::with_capacity(size + size / 4);
    let mut has_upper = vec![false; size];
    for i in 1..size {
        if i == size - 1 {
            for x in 0..i {
                if !has_upper[x] {
                    covers.push((x, i));
                }
            }
        } else {
            let roll: f64 = rng.random();
            let k = if roll < p3 {
                3.min(i)
            } else if roll < p2 {
                2.min(i)
            } else {
                1
            };
            let mut picks = rand::seq::index::sample(rng, i, k).into_vec();
            picks.sort_unstable();
            for x in picks {
                has_upper[x] = true;
                covers.push((x, i));
            }
        }
    }
    covers
}

/// A random modular lattice of exactly `size` elements for the given seed.
///
/// Composes modularity-preserving constructions: chains, diamonds, `M23`,
/// linear (vertical) sums, and direct products. Linear sums and products of
/// modular lattices are modular, so the result is modular by construction;
/// diamond and `M23` blocks keep the corpus rich in non-distributive
/// structure and in pseudocomplement failures.
pub fn random_modular_lattice(size: usize, seed: u64) -> Result<FiniteLattice, GenError> {
    if !(1..=512).contains(&size) {
        return Err(GenError::OutOfRange {
            what: "random modular lattice size",
            value: size as u64,
            min: 1,
            max: 512,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(gen_modular(size, &mut rng))
}

fn gen_modular(size: usize, rng: &mut ChaCha8Rng) -> FiniteLattice {
    if size <= 3 {
        return chain(size).expect("small chain");
    }
    let roll: f64 = rng.random();
    if roll < 0.35 {
        // a primitive block of this exact size
        let mut options: Vec<u8> = vec![0];
        if size >= 5 {
            options.push(1);
        }
        if size == 7 {
            options.push(2);
        }
        match options[rng.random_range(0..options.len())] {
            0 => chain(size).expect("chain"),
            1 => diamond(size - 2).expect("diamond"),
            _ => m23().clone(),
        }
    } else if roll < 0.70 {
        let s1 = rng.random_range(1..size);
        let lower = gen_modular(s1, rng);
        let upper = gen_modular(size - s1, rng);
        linear_sum(&lower, &upper)
    } else {
        let divisors: Vec<usize> = (2..=size / 2).filter(|d| size % d == 0).collect();
        if divisors.is_empty() {
            let s1 = rng.random_range(1..size);
            let lower = gen_modular(s1, rng);
            let upper = gen_modular(size - s1, rng);
            linear_sum(&lower, &upper)
        } else {
            let d = divisors[rng.random_range(0..divisors.len())];
            let a = gen_modular(d, rng);
            let b = gen_modular(size / d, rng);
            direct_product(&a, &b)
        }
    }
}

/// The linear sum: every element of `lower` below every element of
/// `upper`, sizes adding.
pub fn linear_sum(lower: &FiniteLattice, upper: &FiniteLattice) -> FiniteLattice {
    let off = lower.size();
    let mut covers = lower.cover_list().covers;
    covers.push((lower.top(), off + upper.bottom()));
    for (a, b) in upper.cover_list().covers {
        covers.push((off + a, off + b));
    }
    FiniteLattice::from_covers(&CoverList {
        size: off + upper.size(),
        covers,
    })
    .expect("linear sum of lattices")
}

/// The direct product, with pairs ordered componentwise. Element `(x, y)`
/// gets index `x * b.size() + y`.
pub fn direct_product(a: &FiniteLattice, b: &FiniteLattice) -> FiniteLattice {
    let sb = b.size();
    let mut covers = Vec::new();
    for x in a.elements() {
        for y in b.elements() {
            for xc in a.upper_covers(x) {
                covers.push((x * sb + y, xc * sb + y));
            }
            for yc in b.upper_covers(y) {
                covers.push((x * sb + y, x * sb + yc));
            }
        }
    }
    FiniteLattice::from_covers(&CoverList {
        size: a.size() * sb,
        covers,
    })
    .expect("direct product of lattices")
}

/// Parameters for the standard analysis corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// Every lattice up to this size is included, one per isomorphism
    /// class. At most 8.
    pub max_exhaustive_size: usize,
    /// Number of random lattices to append.
    pub random_count: usize,
    /// Size of each random lattice.
    pub random_size: usize,
    /// Seed for the first random lattice; lattice `i` uses `seed + i`.
    pub random_seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_exhaustive_size: 7,
            random_count: 100,
            random_size: 30,
            random_seed: 1,
        }
    }
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<(), GenError> {
        if !(1..=8).contains(&self.max_exhaustive_size) {
            return Err(GenError::OutOfRange {
                what: "max enumeration size",
                value: self.max_exhaustive_size as u64,
                min: 1,
                max: 8,
            });
        }
        if !(2..=2000).contains(&self.random_size) {
            return Err(GenError::OutOfRange {
                what: "random lattice size",
                value: self.random_size as u64,
                min: 2,
                max: 2000,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{is_distributive, is_modular};
    use crate::lattice::is_isomorphic;

    #[test]
    fn fixture_shapes() {
        assert_eq!(m3().size(), 5);
        assert_eq!(m3().atoms().len(), 3);
        assert_eq!(m23().size(), 7);
        assert_eq!(m23().atoms(), vec![1, 2]);
        assert_eq!(m23().coatoms(), vec![3, 4, 5]);
        assert_eq!(n5().size(), 5);
        assert_eq!(n5().atoms().len(), 2);
    }

    #[test]
    fn fixture_lookup() {
        assert_eq!(fixture("m23").unwrap(), *m23());
        assert_eq!(fixture("chain(4)").unwrap().size(), 4);
        assert_eq!(fixture("boolean(3)").unwrap().size(), 8);
        assert!(matches!(
            fixture("m17"),
            Err(GenError::UnknownFixture(_))
        ));
        assert!(matches!(
            fixture("boolean(13)"),
            Err(GenError::OutOfRange { .. })
        ));
    }

    #[test]
    fn divisor_lattice_of_one_is_trivial() {
        let l = divisor_lattice(1).unwrap();
        assert_eq!(l.size(), 1);
        assert_eq!(l.label(0), Some("1"));
    }

    #[test]
    fn divisor_lattice_of_12() {
        let l = divisor_lattice(12).unwrap();
        assert_eq!(l.size(), 6);
        let labels: Vec<&str> = l.elements().map(|i| l.label(i).unwrap()).collect();
        assert_eq!(labels, vec!["1", "2", "3", "4", "6", "12"]);
        // meet is gcd, join is lcm: 4 and 6 sit at indices 3 and 4
        assert_eq!(l.label(l.meet(3, 4)), Some("2"));
        assert_eq!(l.label(l.join(3, 4)), Some("12"));
    }

    #[test]
    fn divisor_lattices_are_distributive() {
        for n in [2, 12, 30, 360, 1024, 30030] {
            assert!(is_distributive(&divisor_lattice(n).unwrap()).distributive, "{n}");
        }
    }

    #[test]
    fn squarefree_divisor_lattice_is_boolean() {
        let l = divisor_lattice(30).unwrap();
        let b = boolean(3).unwrap();
        assert!(is_isomorphic(&l, &b).is_some());
    }

    #[test]
    fn divisor_lattice_guards() {
        assert!(matches!(divisor_lattice(0), Err(GenError::OutOfRange { .. })));
        assert!(matches!(
            divisor_lattice(1_000_001),
            Err(GenError::OutOfRange { .. })
        ));
    }

    #[test]
    fn enumeration_counts_small() {
        // classes per size: 1, 1, 1, 2, 5
        let all = enumerate_lattices(5).unwrap();
        let counts: Vec<usize> = (1..=5)
            .map(|n| all.iter().filter(|l| l.size() == n).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5]);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_lattices(5).unwrap();
        let b = enumerate_lattices(5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_members_are_pairwise_non_isomorphic() {
        let all = enumerate_lattices(6).unwrap();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(is_isomorphic(a, b).is_none(), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn enumeration_contains_the_named_five_element_lattices() {
        let size5: Vec<FiniteLattice> = enumerate_lattices(5)
            .unwrap()
            .into_iter()
            .filter(|l| l.size() == 5)
            .collect();
        assert!(size5.iter().any(|l| is_isomorphic(l, m3()).is_some()));
        assert!(size5.iter().any(|l| is_isomorphic(l, n5()).is_some()));
    }

    #[test]
    fn enumeration_outputs_are_valid_lattices() {
        for l in enumerate_lattices(6).unwrap() {
            l.verify_lattice_axioms().unwrap();
        }
    }

    #[test]
    fn random_lattice_is_deterministic() {
        let a = random_lattice(25, 42).unwrap();
        let b = random_lattice(25, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.size(), 25);
    }

    #[test]
    fn random_lattice_minimum_size() {
        let l = random_lattice(2, 7).unwrap();
        assert_eq!(l.cover_list().covers, vec![(0, 1)]);
    }

    #[test]
    fn random_lattice_guards() {
        assert!(matches!(random_lattice(1, 0), Err(GenError::OutOfRange { .. })));
        assert!(matches!(
            random_lattice(2001, 0),
            Err(GenError::OutOfRange { .. })
        ));
    }

    #[test]
    fn random_lattices_pass_full_validation() {
        for seed in 0..300 {
            let size = 2 + (seed as usize * 7) % 49;
            random_lattice(size, seed)
                .unwrap()
                .verify_lattice_axioms()
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        }
    }

    #[test]
    fn random_modular_lattices_are_modular() {
        for seed in 0..200 {
            let size = 1 + (seed as usize * 11) % 40;
            let l = random_modular_lattice(size, seed).unwrap();
            assert_eq!(l.size(), size, "seed {seed}");
            assert!(is_modular(&l).modular, "seed {seed} size {size}");
            l.verify_lattice_axioms().unwrap();
        }
    }

    #[test]
    fn random_modular_is_deterministic() {
        assert_eq!(
            random_modular_lattice(33, 5).unwrap(),
            random_modular_lattice(33, 5).unwrap()
        );
    }

    #[test]
    fn linear_sum_and_product_shapes() {
        let c2 = chain(2).unwrap();
        let sum = linear_sum(&c2, &c2);
        assert_eq!(sum.size(), 4);
        assert!(is_isomorphic(&sum, &chain(4).unwrap()).is_some());
        let prod = direct_product(&c2, &c2);
        assert!(is_isomorphic(&prod, &boolean(2).unwrap()).is_some());
        let b3 = direct_product(&direct_product(&c2, &c2), &c2);
        assert!(is_isomorphic(&b3, &boolean(3).unwrap()).is_some());
    }

    #[test]
    fn corpus_spec_validation() {
        assert!(CorpusSpec::default().validate().is_ok());
        let bad = CorpusSpec {
            max_exhaustive_size: 9,
            ..CorpusSpec::default()
        };
        assert!(bad.validate().is_err());
    }
}
