//! The two conjugacy routes — exhaustive scan and negated-root orbit search
//! — must give the same answer everywhere both run.

use rustc_hash::FxHashMap;
use weylinv::involutions::classify;
use weylinv::rootsys::RootSystem;
use weylinv::weyl::{Budgets, GroupElement, Mode, SubgroupSpec};

fn sys(name: &str) -> RootSystem {
    RootSystem::build(name.parse().unwrap()).unwrap()
}

/// Full cross product over the involutions of W(F4) and W(H3): the
/// exhaustive-route partition (conjugating every involution by every group
/// element) equals the orbit-route partition, so the two modes agree on
/// every pair.
#[test]
fn exhaustive_and_orbit_partitions_agree_on_f4_and_h3() {
    for name in ["F4", "H3"] {
        let r = sys(name);
        let elements = r.enumerate(10_000).unwrap();
        let involutions: Vec<&GroupElement> =
            elements.iter().filter(|w| w.is_involution()).collect();

        // Exhaustive route: explicit conjugation sweep.
        let mut class_of: FxHashMap<GroupElement, usize> = FxHashMap::default();
        let mut n_classes = 0;
        for w in &involutions {
            if class_of.contains_key(*w) {
                continue;
            }
            let id = n_classes;
            n_classes += 1;
            for x in &elements {
                class_of.insert(w.conjugate_by(x).unwrap(), id);
            }
        }

        // Orbit route, via the classification machinery.
        let cl = classify(&r, &SubgroupSpec::Full, Mode::NegOrbit, &Budgets::default()).unwrap();
        for a in &involutions {
            for b in &involutions {
                let same_exhaustive = class_of[*a] == class_of[*b];
                let same_orbit =
                    cl.class_of_element(&r, a).unwrap() == cl.class_of_element(&r, b).unwrap();
                assert_eq!(same_exhaustive, same_orbit, "{name}: pair disagreement");
            }
        }
        println!("{name}: modes agree on all {}² involution pairs", involutions.len());
    }
}

/// The public two-mode oracle agrees on every pair of class representatives.
#[test]
fn conjugate_in_modes_agree_on_representative_pairs() {
    for name in ["F4", "H3", "C4", "D4"] {
        let r = sys(name);
        let cl = classify(&r, &SubgroupSpec::Full, Mode::Exhaustive, &Budgets::default()).unwrap();
        for a in &cl.classes {
            for b in &cl.classes {
                let exhaustive = r
                    .conjugate_in(
                        &a.representative,
                        &b.representative,
                        &SubgroupSpec::Full,
                        Mode::Exhaustive,
                        &Budgets::default(),
                    )
                    .unwrap()
                    .conjugate;
                let orbit = r
                    .conjugate_in(
                        &a.representative,
                        &b.representative,
                        &SubgroupSpec::Full,
                        Mode::NegOrbit,
                        &Budgets::default(),
                    )
                    .unwrap()
                    .conjugate;
                assert_eq!(exhaustive, orbit, "{name}");
            }
        }
    }
}

/// Enumeration is self-consistent: a second run reproduces the same count,
/// and the count matches the group-order formula.
#[test]
fn enumeration_fixpoint_recheck() {
    for name in ["A4", "C3", "D4", "F4", "H3", "G2:9"] {
        let r = sys(name);
        let first = r.enumerate(60_000).unwrap().len();
        let second = r.enumerate(60_000).unwrap().len();
        assert_eq!(first, second);
        assert_eq!(first as u128, r.diagram().group_order());
    }
}
