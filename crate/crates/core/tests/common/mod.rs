//! Independent oracle for counting small lattices up to isomorphism.
//!
//! Deliberately shares no machinery with `generators::enumerate_lattices`:
//! candidate orders come from upper-triangular relation bitmasks instead of
//! a down-set DFS, the lattice test is `FiniteLattice::from_leq` failing or
//! succeeding instead of a mask scan, and deduplication is pairwise
//! isomorphism search instead of a canonical form.

use pclat::lattice::{is_isomorphic, FiniteLattice, LatticeError};

/// Bit position of the ordered pair `i < j` in an upper-triangular mask.
fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j && j < n);
    // row i starts after all earlier rows
    let before: usize = (0..i).map(|r| n - 1 - r).sum();
    (before + (j - i - 1)) as u32
}

/// Number of lattices with exactly `n` elements, one per isomorphism
/// class, counted from scratch. Exponential in `n * n`; keep `n <= 7`.
pub fn oracle_lattice_count(n: usize) -> usize {
    assert!((1..=7).contains(&n));
    if n == 1 {
        return 1;
    }
    let npairs = n * (n - 1) / 2;
    let mut reps: Vec<FiniteLattice> = Vec::new();
    'mask: for mask in 0u32..(1 << npairs) {
        // strict order as row masks: rows[i] holds the j > i with i < j
        let mut rows = [0u8; 7];
        for i in 0..n {
            for j in i + 1..n {
                if mask >> pair_bit(n, i, j) & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        // transitivity: whatever j dominates, i dominates too
        for i in 0..n {
            for j in i + 1..n {
                if rows[i] >> j & 1 == 1 && rows[j] & !rows[i] != 0 {
                    continue 'mask;
                }
            }
        }
        // a bottom must precede everything numerically, so it can only be
        // element 0; dually the top can only be n - 1
        if rows[0].count_ones() as usize != n - 1 {
            continue;
        }
        if (1..n - 1).any(|i| rows[i] >> (n - 1) & 1 == 0) {
            continue;
        }
        let lattice =
            match FiniteLattice::from_leq(n, |a, b| a == b || (a < b && rows[a] >> b & 1 == 1), None)
            {
                Ok(l) => l,
                Err(LatticeError::NotALattice { .. }) => continue,
                Err(e) => panic!("oracle candidate must be a bounded poset: {e}"),
            };
        if reps.iter().all(|r| is_isomorphic(r, &lattice).is_none()) {
            reps.push(lattice);
        }
    }
    reps.len()
}
