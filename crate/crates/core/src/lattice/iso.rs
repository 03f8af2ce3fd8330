//! Lattice isomorphism by invariant-pruned backtracking.
//!
//! A bijection preserving order in both directions preserves meets and
//! joins, so isomorphism of finite lattices reduces to order isomorphism.
//! The search maps elements of the first lattice in index order; candidates
//! are filtered by a per-element invariant vector and checked against every
//! previously mapped element, which makes the final assignment a verified
//! order isomorphism with no separate validation pass.

use super::FiniteLattice;

type Invariant = (u32, u32, u32, u32, u32, u32);

/// Searches for an isomorphism from `a` onto `b`.
///
/// Returns the image vector (`mapping[i]` is the element of `b` that `i`
/// maps to), or `None` when the lattices are not isomorphic. The search
/// tries candidates lowest-index-first, so the result is deterministic: the
/// lexicographically least image vector.
pub fn is_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let inv_a = invariants(a);
    let inv_b = invariants(b);
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    let mut mapping: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if assign(a, b, &inv_a, &inv_b, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

fn assign(
    a: &FiniteLattice,
    b: &FiniteLattice,
    inv_a: &[Invariant],
    inv_b: &[Invariant],
    mapping: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let k = mapping.len();
    if k == a.size() {
        return true;
    }
    for cand in 0..b.size() {
        if used[cand] || inv_b[cand] != inv_a[k] {
            continue;
        }
        let consistent = (0..k).all(|j| {
            a.leq(j, k) == b.leq(mapping[j], cand) && a.leq(k, j) == b.leq(cand, mapping[j])
        });
        if !consistent {
            continue;
        }
        mapping.push(cand);
        used[cand] = true;
        if assign(a, b, inv_a, inv_b, mapping, used) {
            return true;
        }
        used[cand] = false;
        mapping.pop();
    }
    false
}

/// Per-element isomorphism invariants: down-set size, up-set size, cover
/// counts in both directions, height (longest chain from bottom), and depth
/// (longest chain to top).
fn invariants(l: &FiniteLattice) -> Vec<Invariant> {
    let n = l.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&x| l.down_row(x).count_ones(..));
    let mut height = vec![0u32; n];
    for &x in &order {
        height[x] = l
            .lower_covers(x)
            .map(|z| height[z] + 1)
            .max()
            .unwrap_or(0);
    }
    let mut depth = vec![0u32; n];
    for &x in order.iter().rev() {
        depth[x] = l
            .upper_covers(x)
            .map(|z| depth[z] + 1)
            .max()
            .unwrap_or(0);
    }
    (0..n)
        .map(|x| {
            (
                l.down_row(x).count_ones(..) as u32,
                l.up_row(x).count_ones(..) as u32,
                l.lower_covers(x).count() as u32,
                l.upper_covers(x).count() as u32,
                height[x],
                depth[x],
            )
        })
        .collect()
}
