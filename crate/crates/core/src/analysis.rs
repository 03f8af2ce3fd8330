//! Structural analysis: modularity, distributivity, and pseudocomplements.
//!
//! The modularity and distributivity checks quantify their defining laws
//! over all element triples and report the first counterexample in
//! lexicographic order, so verdicts are reproducible and can be re-verified
//! externally.
//!
//! Pseudocomplements are computed by two deliberately different routes.
//! [`pseudocomplement`] looks for a greatest element of the disjoint set
//! `{x : a ∧ x = 0}` directly; [`maximal_disjoint`] computes the antichain
//! of maximal disjoint elements. The two agree exactly when the lattice is
//! pseudocomplemented (the antichain is then a single point), which gives an
//! internal cross-check that tests exploit.

use crate::lattice::FiniteLattice;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A triple `(a, b, c)` violating one of the lattice laws.
pub type Triple = (usize, usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("lattice is not modular: law fails on triple ({}, {}, {})", .0.0, .0.1, .0.2)]
    NotModular(Triple),
}

/// Outcome of the modular-law check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularityVerdict {
    pub modular: bool,
    /// Lexicographically first `(a, b, c)` with `a <= c` but
    /// `a ∨ (b ∧ c) != (a ∨ b) ∧ c`.
    pub violation: Option<Triple>,
}

/// Outcome of the distributive-law check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributivityVerdict {
    pub distributive: bool,
    /// Lexicographically first `(a, b, c)` with
    /// `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    pub violation: Option<Triple>,
}

/// Outcome of the pseudocomplementedness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudocomplementVerdict {
    pub pseudocomplemented: bool,
    /// `map[a]` is the pseudocomplement of `a`; present iff every element
    /// has one.
    pub map: Option<Vec<usize>>,
    /// For the least element with no pseudocomplement: that element and its
    /// two least maximal disjoint elements, which are necessarily
    /// incomparable.
    pub failure: Option<Triple>,
}

/// Checks the modular law `a <= c  =>  a ∨ (b ∧ c) = (a ∨ b) ∧ c` over all
/// triples.
pub fn is_modular(l: &FiniteLattice) -> ModularityVerdict {
    for a in l.elements() {
        for b in l.elements() {
            for c in l.elements() {
                if l.leq(a, c) && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c) {
                    return ModularityVerdict {
                        modular: false,
                        violation: Some((a, b, c)),
                    };
                }
            }
        }
    }
    ModularityVerdict {
        modular: true,
        violation: None,
    }
}

/// Checks the distributive law `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` over all
/// triples. (Its dual follows and is not checked separately.)
pub fn is_distributive(l: &FiniteLattice) -> DistributivityVerdict {
    for a in l.elements() {
        for b in l.elements() {
            for c in l.elements() {
                if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)) {
                    return DistributivityVerdict {
                        distributive: false,
                        violation: Some((a, b, c)),
                    };
                }
            }
        }
    }
    DistributivityVerdict {
        distributive: true,
        violation: None,
    }
}

/// The maximal elements of `{x : a ∧ x = 0}`, in ascending order.
///
/// The set always contains bottom, so the result is nonempty; it is a
/// singleton for every `a` exactly when the lattice is pseudocomplemented.
pub fn maximal_disjoint(l: &FiniteLattice, a: usize) -> Vec<usize> {
    let bottom = l.bottom();
    let disjoint: Vec<usize> = l.elements().filter(|&x| l.meet(a, x) == bottom).collect();
    disjoint
        .iter()
        .copied()
        .filter(|&x| disjoint.iter().all(|&y| y == x || !l.leq(x, y)))
        .collect()
}

/// The pseudocomplement of `a`: the greatest `x` with `a ∧ x = 0`, if the
/// disjoint set has a greatest element.
///
/// Found directly: the candidate is the disjoint element with the largest
/// down-set (a greatest element, if any, strictly dominates every other
/// element's down-set), confirmed by checking it bounds the whole set.
pub fn pseudocomplement(l: &FiniteLattice, a: usize) -> Option<usize> {
    let bottom = l.bottom();
    let mut candidate = None;
    let mut best_weight = 0;
    for x in l.elements() {
        if l.meet(a, x) == bottom {
            let w = l.down_row(x).count_ones(..);
            if candidate.is_none() || w > best_weight {
                candidate = Some(x);
                best_weight = w;
            }
        }
    }
    let g = candidate.expect("bottom is always disjoint");
    l.elements()
        .all(|x| l.meet(a, x) != bottom || l.leq(x, g))
        .then_some(g)
}

/// Decides whether every element has a pseudocomplement.
///
/// On failure the verdict reports the least element without one, paired
/// with its two least maximal disjoint elements.
pub fn is_pseudocomplemented(l: &FiniteLattice) -> PseudocomplementVerdict {
    let mut map = Vec::with_capacity(l.size());
    for a in l.elements() {
        match pseudocomplement(l, a) {
            Some(pc) => map.push(pc),
            None => {
                let maximal = maximal_disjoint(l, a);
                return PseudocomplementVerdict {
                    pseudocomplemented: false,
                    map: None,
                    failure: Some((a, maximal[0], maximal[1])),
                };
            }
        }
    }
    PseudocomplementVerdict {
        pseudocomplemented: true,
        map: Some(map),
        failure: None,
    }
}

/// Verdict of [`check_join_meet_property`]: in a modular lattice, whenever
/// `b` is maximal among elements disjoint from `a`, the join `a ∨ b` meets
/// every nonzero element nontrivially.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinMeetVerdict {
    pub holds: bool,
    /// `(a, b, x)` with `b` maximal disjoint from `a`, `x != 0`, and
    /// `(a ∨ b) ∧ x = 0`.
    pub counterexample: Option<Triple>,
}

/// Empirically verifies that for every `a` and every maximal `b` with
/// `a ∧ b = 0`, the join `a ∨ b` has nonzero meet with every nonzero
/// element. This is a theorem for modular lattices, so the check demands
/// modularity and exists to corroborate it on concrete inputs.
pub fn check_join_meet_property(l: &FiniteLattice) -> Result<JoinMeetVerdict, AnalysisError> {
    let verdict = is_modular(l);
    if let Some(t) = verdict.violation {
        return Err(AnalysisError::NotModular(t));
    }
    let bottom = l.bottom();
    for a in l.elements() {
        for b in maximal_disjoint(l, a) {
            let j = l.join(a, b);
            for x in l.elements() {
                if x != bottom && l.meet(j, x) == bottom {
                    return Ok(JoinMeetVerdict {
                        holds: false,
                        counterexample: Some((a, b, x)),
                    });
                }
            }
        }
    }
    Ok(JoinMeetVerdict {
        holds: true,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::tests::{build, M23_COVERS, M3_COVERS, N5_COVERS};
    use crate::lattice::CoverList;

    fn chain(k: usize) -> FiniteLattice {
        let covers = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        FiniteLattice::from_covers(&CoverList { size: k, covers }).unwrap()
    }

    #[test]
    fn pentagon_is_not_modular() {
        let n5 = build(5, N5_COVERS);
        let v = is_modular(&n5);
        assert!(!v.modular);
        let (a, b, c) = v.violation.unwrap();
        // re-verify the reported violation against the law
        assert!(n5.leq(a, c));
        assert_ne!(
            n5.join(a, n5.meet(b, c)),
            n5.meet(n5.join(a, b), c),
            "({a}, {b}, {c})"
        );
    }

    #[test]
    fn diamond_is_modular_but_not_distributive() {
        let m3 = build(5, M3_COVERS);
        assert!(is_modular(&m3).modular);
        let v = is_distributive(&m3);
        assert!(!v.distributive);
        let (a, b, c) = v.violation.unwrap();
        assert_ne!(
            m3.meet(a, m3.join(b, c)),
            m3.join(m3.meet(a, b), m3.meet(a, c))
        );
    }

    #[test]
    fn m23_is_modular() {
        assert!(is_modular(&build(7, M23_COVERS)).modular);
    }

    #[test]
    fn chains_are_distributive() {
        for k in 1..6 {
            let c = chain(k);
            assert!(is_modular(&c).modular);
            assert!(is_distributive(&c).distributive);
        }
    }

    #[test]
    fn verdicts_are_deterministic() {
        let n5 = build(5, N5_COVERS);
        assert_eq!(is_modular(&n5), is_modular(&n5));
        let m3 = build(5, M3_COVERS);
        assert_eq!(is_distributive(&m3), is_distributive(&m3));
    }

    #[test]
    fn maximal_disjoint_of_bottom_is_top() {
        for l in [build(5, M3_COVERS), build(7, M23_COVERS), chain(4)] {
            assert_eq!(maximal_disjoint(&l, l.bottom()), vec![l.top()]);
        }
    }

    #[test]
    fn maximal_disjoint_of_diamond_atom_is_the_other_two() {
        let m3 = build(5, M3_COVERS);
        assert_eq!(maximal_disjoint(&m3, 1), vec![2, 3]);
    }

    #[test]
    fn maximal_disjoint_matches_brute_force() {
        for l in [build(5, M3_COVERS), build(7, M23_COVERS), build(5, N5_COVERS)] {
            for a in l.elements() {
                // independent route: filter the full disjoint set by maximality
                let disjoint: Vec<usize> = l
                    .elements()
                    .filter(|&x| l.meet(a, x) == l.bottom())
                    .collect();
                let expect: Vec<usize> = disjoint
                    .iter()
                    .copied()
                    .filter(|&x| !disjoint.iter().any(|&y| x != y && l.leq(x, y)))
                    .collect();
                assert_eq!(maximal_disjoint(&l, a), expect);
            }
        }
    }

    #[test]
    fn pseudocomplements_in_chains() {
        let c = chain(4);
        assert_eq!(pseudocomplement(&c, 0), Some(3), "bottom maps to top");
        for mid in 1..4 {
            assert_eq!(pseudocomplement(&c, mid), Some(0), "nonzero maps to bottom");
        }
    }

    #[test]
    fn diamond_atom_has_no_pseudocomplement() {
        let m3 = build(5, M3_COVERS);
        assert_eq!(pseudocomplement(&m3, 1), None);
        let v = is_pseudocomplemented(&m3);
        assert!(!v.pseudocomplemented);
        assert_eq!(v.failure, Some((1, 2, 3)), "least failure, least maximals");
    }

    #[test]
    fn m23_atom_failure_is_reported() {
        // atom 1 still has a pseudocomplement (the other atom); atom 2 is
        // the least element without one, blocked by the two coatoms above 1
        let v = is_pseudocomplemented(&build(7, M23_COVERS));
        assert!(!v.pseudocomplemented);
        assert_eq!(pseudocomplement(&build(7, M23_COVERS), 1), Some(2));
        assert_eq!(v.failure, Some((2, 3, 4)));
    }

    #[test]
    fn pentagon_is_pseudocomplemented() {
        // pseudocomplementedness does not require modularity
        let v = is_pseudocomplemented(&build(5, N5_COVERS));
        assert!(v.pseudocomplemented);
        assert_eq!(v.map, Some(vec![4, 2, 3, 2, 0]));
    }

    #[test]
    fn pseudocomplement_map_properties() {
        // a ∧ a* = 0, the map is antitone, and a <= a**
        for l in [build(5, N5_COVERS), chain(5)] {
            let map = is_pseudocomplemented(&l).map.unwrap();
            for a in l.elements() {
                assert_eq!(l.meet(a, map[a]), l.bottom());
                assert!(l.leq(a, map[map[a]]));
                for b in l.elements() {
                    if l.leq(a, b) {
                        assert!(l.leq(map[b], map[a]));
                    }
                }
            }
        }
    }

    #[test]
    fn two_routes_agree_on_pseudocomplementedness() {
        for l in [
            build(5, M3_COVERS),
            build(7, M23_COVERS),
            build(5, N5_COVERS),
            chain(6),
        ] {
            let direct = is_pseudocomplemented(&l).pseudocomplemented;
            let antichain = l
                .elements()
                .all(|a| maximal_disjoint(&l, a).len() == 1);
            assert_eq!(direct, antichain);
        }
    }

    #[test]
    fn join_meet_property_holds_on_modular_fixtures() {
        for l in [build(5, M3_COVERS), build(7, M23_COVERS), chain(5)] {
            let v = check_join_meet_property(&l).unwrap();
            assert!(v.holds);
            assert_eq!(v.counterexample, None);
        }
    }

    #[test]
    fn join_meet_property_requires_modularity() {
        let err = check_join_meet_property(&build(5, N5_COVERS)).unwrap_err();
        assert!(matches!(err, AnalysisError::NotModular(_)));
    }
}
