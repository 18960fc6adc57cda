//! The symbolic dihedral model must agree with the vector-realized
//! crystallographic systems that share its Coxeter graph: `G2:3` with A2 and
//! `G2:4` with C2 (and B2).

use weylinv::involutions::{classify, w0_pairing, Classification};
use weylinv::rootsys::RootSystem;
use weylinv::weyl::{Budgets, Mode, SubgroupSpec};

fn sys(name: &str) -> RootSystem {
    RootSystem::build(name.parse().unwrap()).unwrap()
}

/// Class structure fingerprint that is independent of node numbering and of
/// the realization: sorted (dim⁻, class size) pairs plus the multiset of
/// (dim⁻ source, dim⁻ target) pairing edges.
fn fingerprint(sys: &RootSystem, cl: &Classification) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let pairing = w0_pairing(sys, cl).unwrap();
    let mut shape: Vec<(usize, usize)> =
        cl.classes.iter().map(|c| (c.dim_minus, c.class_size.unwrap())).collect();
    shape.sort_unstable();
    let mut edges: Vec<(usize, usize)> = pairing
        .iter()
        .enumerate()
        .map(|(i, &j)| {
            let (a, b) = (cl.classes[i].dim_minus, cl.classes[j].dim_minus);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    (shape, edges)
}

#[test]
fn g2_4_matches_b2_and_c2() {
    let dihedral = sys("G2:4");
    let d = classify(&dihedral, &SubgroupSpec::Full, Mode::Exhaustive, &Budgets::default())
        .unwrap();
    for name in ["B2", "C2"] {
        let vector = sys(name);
        let v = classify(&vector, &SubgroupSpec::Full, Mode::Exhaustive, &Budgets::default())
            .unwrap();
        assert_eq!(d.classes.len(), v.classes.len(), "{name}");
        assert_eq!(fingerprint(&dihedral, &d), fingerprint(&vector, &v), "{name}");
    }
    // Enumerations agree on the group order and involution count.
    assert_eq!(dihedral.enumerate(100).unwrap().len(), sys("C2").enumerate(100).unwrap().len());
}

#[test]
fn g2_3_matches_a2() {
    let dihedral = sys("G2:3");
    let a2 = sys("A2");
    // Both have non-central longest elements: classify in the centralizer.
    let d = classify(&dihedral, &SubgroupSpec::CentralizerW0, Mode::Exhaustive, &Budgets::default())
        .unwrap();
    let v = classify(&a2, &SubgroupSpec::CentralizerW0, Mode::Exhaustive, &Budgets::default())
        .unwrap();
    assert_eq!(fingerprint(&dihedral, &d), fingerprint(&a2, &v));

    // Full-group involution counts also agree: 1 + 3 reflections.
    let count = |r: &RootSystem| {
        r.enumerate(100).unwrap().iter().filter(|w| w.is_involution()).count()
    };
    assert_eq!(count(&dihedral), count(&a2));
}
