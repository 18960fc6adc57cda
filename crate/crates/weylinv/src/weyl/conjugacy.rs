//! Conjugacy of involutions, decided by two independent routes: exhaustive
//! scan of the subgroup, and breadth-first orbit search on negated-root sets.
//!
//! An involution of a finite reflection group is determined by its set of
//! negated roots, and conjugation transports that set: the negated roots of
//! `x·w·x⁻¹` are the x-images of the negated roots of `w`.  The orbit of the
//! set under the subgroup generators is therefore a faithful picture of the
//! conjugacy class, stored here as `u128` bitmasks over the positive roots
//! (every type in scope has at most 120).

use rustc_hash::FxHashMap;

use super::{GroupElement, SubgroupSpec};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// Resource limits for enumeration and orbit search.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Largest subgroup that exhaustive enumeration may materialize.
    pub cap: usize,
    /// Approximate memory allowance for orbit search, in bytes.
    pub memory_bytes: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { cap: 3_000_000, memory_bytes: 8 << 30 }
    }
}

/// How conjugacy questions are decided.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Enumerate the subgroup and scan for a conjugator.
    Exhaustive,
    /// Breadth-first orbit of the negated-root set under the generators.
    NegOrbit,
    /// Exhaustive when the subgroup order bound fits the cap, else orbit.
    Auto,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "orbit" => Ok(Mode::NegOrbit),
            "auto" => Ok(Mode::Auto),
            other => Err(Error::ParseType(format!("unknown mode `{other}`"))),
        }
    }

    /// Resolve `Auto` against the subgroup order bound.
    pub fn resolve(self, sys: &RootSystem, spec: &SubgroupSpec, budgets: &Budgets) -> Mode {
        match self {
            Mode::Auto => {
                if subgroup_order_bound(sys, spec) <= budgets.cap as u128 {
                    Mode::Exhaustive
                } else {
                    Mode::NegOrbit
                }
            }
            m => m,
        }
    }
}

/// Order of the subgroup, exact for the tabulated cases and conservatively
/// the full group order otherwise.
pub fn subgroup_order_bound(sys: &RootSystem, spec: &SubgroupSpec) -> u128 {
    use crate::rootsys::DiagramType as T;
    let full = sys.diagram().group_order();
    let bc = |n: usize| T::C(n).group_order();
    match spec {
        SubgroupSpec::Full => full,
        _ => {
            let Ok(sigma) = spec.node_automorphism(sys) else {
                return full;
            };
            if sigma.is_identity() {
                return full;
            }
            match sys.diagram() {
                T::A(n) => bc(n.div_ceil(2)),
                T::D(n) => bc(n - 1),
                T::E(6) => 1_152,
                T::G2(_) => 2,
                _ => full,
            }
        }
    }
}

/// Evidence for a positive conjugacy answer.
#[derive(Clone, Debug)]
pub enum Witness {
    /// An element `x` with `x·w·x⁻¹ = w'`, with a word in the subgroup
    /// generators (indices into `subgroup_generators`).
    Conjugator { element: GroupElement, word: Vec<usize> },
    /// Generator indices tracing the orbit path from the negated-root set of
    /// `w` to that of `w'`.
    OrbitPath { word: Vec<usize> },
}

#[derive(Debug)]
pub struct ConjugacyOutcome {
    pub conjugate: bool,
    pub witness: Option<Witness>,
}

/// Bitmask over positive-root indices of the roots negated by `w`.
pub fn negated_mask(sys: &RootSystem, w: &GroupElement) -> u128 {
    let n_pos = sys.n_positive();
    assert!(n_pos <= 128, "negated-root masks need at most 128 positive roots");
    let mut mask = 0u128;
    for i in 0..n_pos {
        if w.apply(i) == sys.neg_index(i) {
            mask |= 1 << i;
        }
    }
    mask
}

pub(crate) fn apply_perm_to_mask(mask: u128, gen: &GroupElement, sys: &RootSystem) -> u128 {
    let mut out = 0u128;
    let mut m = mask;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        m &= m - 1;
        let q = gen.apply(p);
        out |= 1 << sys.positive_index(q);
    }
    out
}

/// Search tree of an orbit: each visited mask maps to its predecessor and
/// the generator index that produced it.
pub type OrbitTree = FxHashMap<u128, (u128, usize)>;

/// Breadth-first orbit of a negated-root mask under generator action.
/// Returns the orbit, or stops early when `target` is reached if one is
/// supplied (the orbit is then partial).
pub fn orbit_of_mask(
    sys: &RootSystem,
    start: u128,
    gens: &[GroupElement],
    budgets: &Budgets,
    target: Option<u128>,
) -> Result<(OrbitTree, bool)> {
    // Each visited mask maps to (predecessor, generator index); the start
    // maps to itself.
    let mut parent: FxHashMap<u128, (u128, usize)> = FxHashMap::default();
    parent.insert(start, (start, usize::MAX));
    if target == Some(start) {
        return Ok((parent, true));
    }
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &m in &frontier {
            for (gi, g) in gens.iter().enumerate() {
                let im = apply_perm_to_mask(m, g, sys);
                if !parent.contains_key(&im) {
                    // ~48 bytes per entry: key, value and table overhead.
                    if 48 * (parent.len() + 1) > budgets.memory_bytes {
                        return Err(Error::MemoryBudgetExceeded {
                            budget_bytes: budgets.memory_bytes,
                        });
                    }
                    parent.insert(im, (m, gi));
                    if target == Some(im) {
                        return Ok((parent, true));
                    }
                    next.push(im);
                }
            }
        }
        frontier = next;
    }
    Ok((parent, target.is_none()))
}

fn orbit_path(parent: &OrbitTree, mut at: u128) -> Vec<usize> {
    let mut word = Vec::new();
    loop {
        let &(prev, gi) = &parent[&at];
        if gi == usize::MAX {
            break;
        }
        word.push(gi);
        at = prev;
    }
    word.reverse();
    word
}

impl RootSystem {
    /// Decide whether the involutions `w` and `w'` are conjugate inside the
    /// subgroup, by the requested route, with a witness when they are.
    pub fn conjugate_in(
        &self,
        w: &GroupElement,
        w_prime: &GroupElement,
        spec: &SubgroupSpec,
        mode: Mode,
        budgets: &Budgets,
    ) -> Result<ConjugacyOutcome> {
        if !w.is_involution() || !w_prime.is_involution() {
            return Err(Error::NotAnInvolution);
        }
        if !self.in_subgroup(w, spec)? || !self.in_subgroup(w_prime, spec)? {
            return Err(Error::Precondition(
                "conjugacy asked for elements outside the subgroup".to_string(),
            ));
        }
        let gens = self.subgroup_generators(spec)?;
        match mode.resolve(self, spec, budgets) {
            Mode::Exhaustive => {
                let elements = self.enumerate_with_words(&gens, budgets.cap)?;
                for (x, word) in elements {
                    if x.compose(w)?.compose(&x.inverse())? == *w_prime {
                        return Ok(ConjugacyOutcome {
                            conjugate: true,
                            witness: Some(Witness::Conjugator { element: x, word }),
                        });
                    }
                }
                Ok(ConjugacyOutcome { conjugate: false, witness: None })
            }
            Mode::NegOrbit => {
                let start = negated_mask(self, w);
                let goal = negated_mask(self, w_prime);
                let (parent, found) = orbit_of_mask(self, start, &gens, budgets, Some(goal))?;
                if found {
                    Ok(ConjugacyOutcome {
                        conjugate: true,
                        witness: Some(Witness::OrbitPath { word: orbit_path(&parent, goal) }),
                    })
                } else {
                    Ok(ConjugacyOutcome { conjugate: false, witness: None })
                }
            }
            Mode::Auto => unreachable!("resolved above"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::NodeSet;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn s(r: &RootSystem, i: usize) -> GroupElement {
        GroupElement::simple_reflection(r, i - 1)
    }

    #[test]
    fn a2_simple_reflections_conjugate() {
        let a2 = sys("A2");
        for mode in [Mode::Exhaustive, Mode::NegOrbit] {
            let out = a2
                .conjugate_in(&s(&a2, 1), &s(&a2, 2), &SubgroupSpec::Full, mode, &Budgets::default())
                .unwrap();
            assert!(out.conjugate);
            assert!(out.witness.is_some());
        }
    }

    #[test]
    fn c2_short_and_long_reflections_are_not_conjugate() {
        let c2 = sys("C2");
        for mode in [Mode::Exhaustive, Mode::NegOrbit] {
            let out = c2
                .conjugate_in(&s(&c2, 1), &s(&c2, 2), &SubgroupSpec::Full, mode, &Budgets::default())
                .unwrap();
            assert!(!out.conjugate);
        }
    }

    #[test]
    fn d4_spin_involutions_not_conjugate() {
        let d4 = sys("D4");
        let c_minus = d4.longest_parabolic("{1,3}".parse::<NodeSet>().unwrap()).unwrap();
        let c_plus = d4.longest_parabolic("{1,4}".parse::<NodeSet>().unwrap()).unwrap();
        for mode in [Mode::Exhaustive, Mode::NegOrbit] {
            let out = d4
                .conjugate_in(&c_minus, &c_plus, &SubgroupSpec::Full, mode, &Budgets::default())
                .unwrap();
            assert!(!out.conjugate, "the two D4 spin classes stay separate");
        }
    }

    #[test]
    fn exhaustive_witness_actually_conjugates() {
        let h3 = sys("H3");
        let w = s(&h3, 1);
        let w2 = s(&h3, 3);
        let out = h3
            .conjugate_in(&w, &w2, &SubgroupSpec::Full, Mode::Exhaustive, &Budgets::default())
            .unwrap();
        match out.witness {
            Some(Witness::Conjugator { element, word }) => {
                assert_eq!(element.compose(&w).unwrap().compose(&element.inverse()).unwrap(), w2);
                // The word is over the subgroup generators, here the simple
                // reflections.
                let gens = h3.subgroup_generators(&SubgroupSpec::Full).unwrap();
                let mut acc = GroupElement::identity(&h3);
                for gi in word {
                    acc = acc.compose(&gens[gi]).unwrap();
                }
                assert_eq!(acc, element);
            }
            other => panic!("expected a conjugator witness, got {other:?}"),
        }
    }

    #[test]
    fn orbit_witness_path_is_replayable() {
        let f4 = sys("F4");
        let a = f4.longest_parabolic("{1,3}".parse::<NodeSet>().unwrap()).unwrap();
        let b = f4.longest_parabolic("{1,4}".parse::<NodeSet>().unwrap()).unwrap();
        let out = f4
            .conjugate_in(&a, &b, &SubgroupSpec::Full, Mode::NegOrbit, &Budgets::default())
            .unwrap();
        assert!(out.conjugate);
        match out.witness {
            Some(Witness::OrbitPath { word }) => {
                let gens = f4.subgroup_generators(&SubgroupSpec::Full).unwrap();
                let mut mask = negated_mask(&f4, &a);
                for gi in word {
                    mask = apply_perm_to_mask(mask, &gens[gi], &f4);
                }
                assert_eq!(mask, negated_mask(&f4, &b));
            }
            other => panic!("expected an orbit path, got {other:?}"),
        }
    }

    #[test]
    fn conjugation_transport_of_negated_sets() {
        let d5 = sys("D5");
        let w = d5.longest_parabolic("{1,3,5}".parse::<NodeSet>().unwrap()).unwrap();
        let x = d5.word_eval(&[2, 3, 1, 4, 2, 5]).unwrap();
        let conj = w.conjugate_by(&x).unwrap();
        let transported = apply_perm_to_mask(negated_mask(&d5, &w), &x, &d5);
        assert_eq!(negated_mask(&d5, &conj), transported);
    }

    #[test]
    fn dihedral_reflection_classes() {
        // n even: mirrors of equal parity are conjugate; n odd: all are.
        let g8 = sys("G2:8");
        let out = g8
            .conjugate_in(&s(&g8, 1), &s(&g8, 2), &SubgroupSpec::Full, Mode::Exhaustive, &Budgets::default())
            .unwrap();
        assert!(!out.conjugate);
        let g7 = sys("G2:7");
        let out = g7
            .conjugate_in(&s(&g7, 1), &s(&g7, 2), &SubgroupSpec::Full, Mode::Exhaustive, &Budgets::default())
            .unwrap();
        assert!(out.conjugate);
    }

    #[test]
    fn memory_budget_failure_is_loud() {
        let e6 = sys("E6");
        let w = s(&e6, 1);
        let w2 = s(&e6, 6);
        let tiny = Budgets { cap: 3_000_000, memory_bytes: 64 };
        let err = e6
            .conjugate_in(&w, &w2, &SubgroupSpec::Full, Mode::NegOrbit, &tiny)
            .unwrap_err();
        assert!(matches!(err, Error::MemoryBudgetExceeded { .. }));
    }
}
