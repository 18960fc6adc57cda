//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the checked volume.  Everything is decided exactly; no tolerances.

use weylinv::algebra::ExactVector;
use weylinv::folding::fold;
use weylinv::golden::{expected_table, verify, Provenance};
use weylinv::involutions::{
    classify, dim_minus_linear, dim_minus_orbits, eigen_subsystems, w0_pairing, EigenDimFormula,
    PatternKey,
};
use weylinv::rootsys::{DiagramType, NodeSet, RootSystem, SubsystemType};
use weylinv::weyl::{Budgets, GroupElement, Mode, SubgroupSpec};

fn sys(name: &str) -> RootSystem {
    RootSystem::build(name.parse().unwrap()).unwrap()
}

fn budgets() -> Budgets {
    Budgets::default()
}

/// Criterion 1: the longest element acts as −id exactly on the listed types.
#[test]
fn criterion_1_central_longest_element_sweep() {
    let mut central: Vec<String> = vec!["A1".into(), "D4".into(), "D6".into(), "D8".into()];
    central.extend((2..=7).map(|n| format!("BC{n}")));
    central.extend(["E7", "E8", "F4", "H3", "H4"].map(String::from));
    central.extend((2..=24).step_by(2).map(|n| format!("G2:{n}")));
    let mut noncentral: Vec<String> = (2..=8).map(|n| format!("A{n}")).collect();
    noncentral.extend(["D5", "D7", "E6"].map(String::from));
    noncentral.extend((3..=23).step_by(2).map(|n| format!("G2:{n}")));

    for name in &central {
        let r = sys(name);
        let w0 = r.longest_element();
        assert!(r.is_minus_one(&w0), "{name}: w0 should act as -id");
        assert!(r.diagram().w0_is_central(), "{name}: type list disagrees");
    }
    for name in &noncentral {
        let r = sys(name);
        let w0 = r.longest_element();
        assert!(!r.is_minus_one(&w0), "{name}: w0 should not act as -id");
        assert!(!r.diagram().w0_is_central(), "{name}: type list disagrees");
    }
    println!(
        "criterion 1: PASS — -1 exactly on {} types, never on {} types",
        central.len(),
        noncentral.len()
    );
}

/// Criterion 2: in every group of order ≤ 3·10⁶, every involution is
/// conjugate to a standard `c_I` (checked against the orbit classification,
/// streaming over the whole group).
#[test]
fn criterion_2_every_involution_is_conjugate_to_a_standard_one() {
    let mut names: Vec<String> = (1..=8).map(|n| format!("A{n}")).collect();
    names.extend((2..=7).map(|n| format!("BC{n}")));
    names.extend((4..=7).map(|n| format!("D{n}")));
    names.extend(["E6", "E7", "F4", "H3", "H4"].map(String::from));
    names.extend((2..=24).map(|n| format!("G2:{n}")));

    let mut total_involutions = 0usize;
    let mut total_elements = 0usize;
    for name in &names {
        let r = sys(name);
        assert!(r.diagram().group_order() <= 3_000_000, "{name} exceeds the sweep bound");
        let cl = classify(&r, &SubgroupSpec::Full, Mode::NegOrbit, &budgets()).unwrap();
        for c in &cl.classes {
            assert_eq!(
                c.canonical_subset().len(),
                c.dim_minus,
                "{name}: class without a standard representative"
            );
        }
        let gens: Vec<GroupElement> =
            (0..r.rank()).map(|i| GroupElement::simple_reflection(&r, i)).collect();
        let mut involutions = 0usize;
        let count = r
            .visit_from(&gens, 3_000_000, |w| {
                if w.is_involution() {
                    involutions += 1;
                    assert!(
                        cl.class_of_element(&r, w).is_some(),
                        "{name}: involution of length {} not in any class",
                        w.length()
                    );
                }
            })
            .unwrap();
        assert_eq!(count as u128, r.diagram().group_order(), "{name}: enumeration count");
        total_involutions += involutions;
        total_elements += count;
    }
    println!(
        "criterion 2: PASS — {total_involutions} involutions over {total_elements} group \
         elements in {} types, all conjugate to standard representatives",
        names.len()
    );
}

/// Criterion 3: the orbit-counting formulas match the linear-algebra
/// eigenspace dimensions, with integer equality.
#[test]
fn criterion_3_orbit_counting_formulas() {
    let mut checked = (0usize, 0usize, 0usize);

    // Variant (1) over every subset of every listed type.
    let mut names: Vec<String> = (1..=8).map(|n| format!("A{n}")).collect();
    names.extend((2..=6).map(|n| format!("BC{n}")));
    names.extend((4..=7).map(|n| format!("D{n}")));
    names.extend(["E6", "E7", "F4", "H3", "H4"].map(String::from));
    for name in &names {
        let r = sys(name);
        let w0 = r.longest_element();
        let neg_w0 = r.neg_w0_node_permutation(&w0).unwrap();
        for nodes in NodeSet::all_subsets(r.rank()) {
            let w = r.longest_parabolic(nodes).unwrap();
            let by_orbits =
                dim_minus_orbits(&r, nodes, EigenDimFormula::MinusWI, None).unwrap();
            assert_eq!(by_orbits, r.dim_minus(&w).unwrap(), "{name} variant 1, I={nodes}");
            checked.0 += 1;

            // Variant (2) where −w0 fixes I.
            if nodes.is_invariant_under(&neg_w0) {
                let by_orbits =
                    dim_minus_orbits(&r, nodes, EigenDimFormula::W0TimesWI, None).unwrap();
                let product = w0.compose(&w).unwrap();
                assert!(product.is_involution());
                assert_eq!(
                    by_orbits,
                    r.dim_minus(&product).unwrap(),
                    "{name} variant 2, I={nodes}"
                );
                checked.1 += 1;
            }
        }
    }

    // Variant (3) over every order-2 diagram automorphism.
    for name in ["A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"] {
        let r = sys(name);
        for sigma in r.diagram_automorphisms() {
            if sigma.order() != 2 {
                continue;
            }
            for nodes in NodeSet::all_subsets(r.rank()) {
                let Ok(by_orbits) =
                    dim_minus_orbits(&r, nodes, EigenDimFormula::SigmaMinusWI, Some(&sigma))
                else {
                    continue; // precondition fails: not invariant or not commuting
                };
                let by_linear = dim_minus_linear(&r, nodes, &sigma).unwrap();
                assert_eq!(by_orbits, by_linear, "{name} variant 3, I={nodes}, σ={sigma}");
                checked.2 += 1;
            }
        }
    }
    assert!(checked.0 > 1000 && checked.1 > 400 && checked.2 > 60);
    println!(
        "criterion 3: PASS — formulas checked on {} / {} / {} (variant 1/2/3) cases",
        checked.0, checked.1, checked.2
    );
}

/// Criterion 4: the eigenspace-dimension table for the classical families at
/// n ≤ 6.
#[test]
fn criterion_4_dimension_table_rows() {
    let mut rows = 0usize;
    for n in 1..=6usize {
        // Row 1: A_{2n}, dim⁻ 2k+l and n−l.
        let a_even = sys(&format!("A{}", 2 * n));
        let w0 = a_even.longest_element();
        for key in PatternKey::family(DiagramType::A(2 * n)).unwrap() {
            let PatternKey::AEven { k, l, .. } = key else { unreachable!() };
            let w = a_even.longest_parabolic(key.nodes().unwrap()).unwrap();
            assert_eq!(a_even.dim_minus(&w).unwrap(), 2 * k + l, "A{} c_{{{k},{l}}}", 2 * n);
            let prod = w0.compose(&w).unwrap();
            assert_eq!(a_even.dim_minus(&prod).unwrap(), n - l, "A{} w0·c_{{{k},{l}}}", 2 * n);
            rows += 1;
        }
        // Row 2: A_{2n−1} (n ≥ 2), same dimensions.
        if n >= 2 {
            let a_odd = sys(&format!("A{}", 2 * n - 1));
            let w0 = a_odd.longest_element();
            for key in PatternKey::family(DiagramType::A(2 * n - 1)).unwrap() {
                let PatternKey::AOdd { k, l, .. } = key else { unreachable!() };
                let w = a_odd.longest_parabolic(key.nodes().unwrap()).unwrap();
                assert_eq!(a_odd.dim_minus(&w).unwrap(), 2 * k + l);
                let prod = w0.compose(&w).unwrap();
                assert_eq!(a_odd.dim_minus(&prod).unwrap(), n - l);
                rows += 1;
            }
        }
        // Row 3: BC_n, k+l and n−k−l.
        if n >= 2 {
            let bc = sys(&format!("BC{n}"));
            let w0 = bc.longest_element();
            for key in PatternKey::family(DiagramType::C(n)).unwrap() {
                let PatternKey::BC { k, l, .. } = key else { unreachable!() };
                let w = bc.longest_parabolic(key.nodes().unwrap()).unwrap();
                assert_eq!(bc.dim_minus(&w).unwrap(), k + l);
                let prod = w0.compose(&w).unwrap();
                assert_eq!(bc.dim_minus(&prod).unwrap(), n - k - l);
                rows += 1;
            }
        }
        // Rows 4-5: odd D_{n+1}, split by the parity of l.
        if n >= 4 && (n + 1) % 2 == 1 {
            let d = sys(&format!("D{}", n + 1));
            let w0 = d.longest_element();
            for key in PatternKey::family(DiagramType::D(n + 1)).unwrap() {
                let PatternKey::D { k, l, .. } = key else { continue };
                let w = d.longest_parabolic(key.nodes().unwrap()).unwrap();
                let prod = w0.compose(&w).unwrap();
                if l % 2 == 0 {
                    assert_eq!(d.dim_minus(&w).unwrap(), k + l);
                    assert_eq!(d.dim_minus(&prod).unwrap(), n - k - l);
                } else {
                    assert_eq!(d.dim_minus(&w).unwrap(), k + l + 1);
                    assert_eq!(d.dim_minus(&prod).unwrap(), n - k - l + 1);
                }
                rows += 1;
            }
        }
    }
    assert!(rows > 100);
    println!("criterion 4: PASS — {rows} table entries reproduced exactly");
}

/// Criterion 5: the result boxes verify for the exceptional types and the
/// classical families at desk scale.
#[test]
fn criterion_5_result_boxes() {
    let mut names: Vec<String> = vec!["F4".into(), "H3".into(), "H4".into(), "E6".into()];
    names.push("E7".into());
    names.extend((1..=4).map(|n| format!("A{}", 2 * n)));
    names.extend((2..=4).map(|n| format!("A{}", 2 * n - 1)));
    names.extend((2..=6).map(|n| format!("BC{n}")));
    names.extend((4..=8).map(|n| format!("D{n}")));
    let mut lines = 0usize;
    for name in &names {
        let r = sys(name);
        let mode = if *name == "E7" { Mode::NegOrbit } else { Mode::Auto };
        let report = verify(&r, mode, &budgets(), None).unwrap();
        assert!(report.pass(), "{name} failed:\n{report}");
        lines += report.lines.len();
        // When w0 = -1, pairing swaps the two eigenspaces, so the paired
        // dimensions are complementary.
        if r.diagram().w0_is_central() {
            for (i, &j) in report.pairing.iter().enumerate() {
                assert_eq!(
                    report.classification.classes[i].dim_minus
                        + report.classification.classes[j].dim_minus,
                    r.rank(),
                    "{name}: pairing must complement dimensions"
                );
            }
        }
    }
    // The even-D verification above includes the spin rule at both parities:
    // D4 and D8 fix the spin classes, D6 swaps them.
    for (name, self_paired) in [("D4", true), ("D6", false), ("D8", true)] {
        let r = sys(name);
        let m = r.rank() / 2;
        let cl = classify(&r, &SubgroupSpec::Full, Mode::Auto, &budgets()).unwrap();
        let pairing = w0_pairing(&r, &cl).unwrap();
        let minus = cl.class_of_subset(PatternKey::SpinMinus { m }.nodes().unwrap()).unwrap();
        let plus = cl.class_of_subset(PatternKey::SpinPlus { m }.nodes().unwrap()).unwrap();
        assert_ne!(minus, plus, "{name}: spin classes are distinct");
        assert_eq!(pairing[minus] == minus, self_paired, "{name} spin rule");
        assert_eq!(pairing[plus] == plus, self_paired, "{name} spin rule");
    }
    println!(
        "criterion 5: PASS — verified {} result tables ({lines} lines) plus the spin mod-4 rule",
        names.len()
    );
}

/// Criterion 6: E8 in orbit mode, including the recomputed line (4) and the
/// invariant separation of the two 4-dimensional classes.
#[test]
fn criterion_6_e8_orbit_verification() {
    let e8 = sys("E8");
    let report = verify(&e8, Mode::NegOrbit, &budgets(), None).unwrap();
    assert!(report.pass(), "{report}");
    assert_eq!(report.lines.len(), 6);
    assert!(matches!(report.lines[3].provenance, Provenance::Computed(_)));

    // Line (4)'s right-hand class carries the recomputed rank-8 subsets.
    let table = expected_table(DiagramType::E(8)).unwrap();
    let right = table.lines[3].right.as_ref().unwrap();
    assert_eq!(
        right,
        &vec!["{2,3,4,5,7}".parse().unwrap(), "{2,3,4,5,8}".parse::<NodeSet>().unwrap()]
    );

    // The (dim⁻, neg_type) invariant separates lines (5) and (6): 4·A1 vs D4.
    let cl = &report.classification;
    let dim4: Vec<usize> =
        (0..cl.classes.len()).filter(|&i| cl.classes[i].dim_minus == 4).collect();
    assert_eq!(dim4.len(), 2);
    let types: Vec<&SubsystemType> = dim4.iter().map(|&i| &cl.classes[i].neg_type).collect();
    let display: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    assert!(display.contains(&"4·A1".to_string()), "{display:?}");
    assert!(display.contains(&"D4".to_string()), "{display:?}");
    assert_ne!(types[0], types[1]);
    println!("criterion 6: PASS — all 6 E8 lines verified; dim-4 classes separate as {display:?}");
}

/// Criterion 7: folded types, the longest-word compatibility, and the
/// parabolic identification, all by exact element equality.
#[test]
fn criterion_7_folding() {
    let expected = [
        ("A4", DiagramType::C(2)),
        ("A6", DiagramType::B(3)),
        ("A5", DiagramType::B(3)),
        ("A7", DiagramType::B(4)),
        ("D5", DiagramType::C(4)),
        ("E6", DiagramType::F4),
    ];
    let mut longest_checked = 0usize;
    let mut parabolic_checked = 0usize;
    for (name, folded_type) in expected {
        let r = sys(name);
        let sigma = r.default_fold_automorphism().unwrap();
        let f = fold(&r, &sigma).unwrap();
        assert!(
            f.folded.diagram().same_coxeter_graph(folded_type),
            "fold({name}) gave {}",
            f.folded.diagram()
        );
        assert_eq!(f.folded.diagram(), folded_type);

        let image: Vec<GroupElement> = r.enumerate_from(&f.gen_images, 3_000_000).unwrap();
        for nodes in NodeSet::all_subsets(r.rank()) {
            if !nodes.is_invariant_under(&sigma) {
                continue;
            }
            let folded_nodes = f.folded_subdiagram(nodes).unwrap();
            // Longest-word compatibility whenever σ agrees with −w_I on I.
            if f.sigma_agrees_with_neg_wi(nodes).unwrap() {
                let (_, word) = f.folded.longest_parabolic_word(folded_nodes).unwrap();
                assert_eq!(
                    f.iota(&word).unwrap(),
                    r.longest_parabolic(nodes).unwrap(),
                    "{name}: ι(w_(I^σ)) ≠ w_I for I={nodes}"
                );
                longest_checked += 1;
            }
            // Parabolic identification ι(W_{I^σ}) = W_I ∩ ι(W^σ).
            let sub_gens: Vec<GroupElement> =
                folded_nodes.iter().map(|i| f.gen_images[i - 1].clone()).collect();
            let lhs: std::collections::HashSet<GroupElement> =
                r.enumerate_from(&sub_gens, 3_000_000).unwrap().into_iter().collect();
            let rhs: std::collections::HashSet<GroupElement> =
                image.iter().filter(|w| r.in_parabolic(w, nodes)).cloned().collect();
            assert_eq!(lhs, rhs, "{name}: parabolic identification fails for I={nodes}");
            parabolic_checked += 1;
        }
    }
    println!(
        "criterion 7: PASS — 6 folded types; longest-word identity on {longest_checked} \
         admissible subsets; parabolic identification on {parabolic_checked} subsets"
    );
}

/// Criterion 8: the dihedral pairing swaps the reflection classes exactly
/// when n ≡ 2 (mod 4), the report flags the printed-box discrepancy, and odd
/// gonality leaves only {id, w0}.
#[test]
fn criterion_8_dihedral_resolution() {
    for n in [2usize, 4, 6, 8, 10, 12] {
        let r = sys(&format!("G2:{n}"));
        let cl = classify(&r, &SubgroupSpec::Full, Mode::Exhaustive, &budgets()).unwrap();
        let pairing = w0_pairing(&r, &cl).unwrap();
        let c1 = cl.class_of_subset("{1}".parse().unwrap()).unwrap();
        let c2 = cl.class_of_subset("{2}".parse().unwrap()).unwrap();
        let swapped = pairing[c1] == c2 && pairing[c2] == c1 && c1 != c2;
        assert_eq!(swapped, n % 4 == 2, "G2:{n} swap rule");

        let report = verify(&r, Mode::Exhaustive, &budgets(), None).unwrap();
        assert!(report.pass(), "G2:{n}:\n{report}");
        assert!(
            report.notes.iter().any(|s| s.contains("transposed")),
            "G2:{n}: report must flag the printed-box discrepancy"
        );
    }
    for n in [3usize, 5, 7, 9, 11, 23] {
        let r = sys(&format!("G2:{n}"));
        let sub = r.enumerate_subgroup(&SubgroupSpec::CentralizerW0, 100).unwrap();
        assert_eq!(sub.len(), 2, "G2:{n}: centralizer is {{id, w0}}");
        let report = verify(&r, Mode::Exhaustive, &budgets(), None).unwrap();
        assert!(report.pass() && report.lines.len() == 1, "G2:{n}:\n{report}");
    }
    println!(
        "criterion 8: PASS — swap iff n ≡ 2 (mod 4) for even n ≤ 12, with the discrepancy \
         flagged; odd gonality reduces to a single pairing line"
    );
}

/// Criterion 9: the cross-cutting property suites, exhaustive on every group
/// of order ≤ 51840.
#[test]
fn criterion_9_property_suites() {
    let names = [
        "A2", "A3", "A4", "A5", "A6", "A7", "BC2", "BC3", "BC4", "BC5", "BC6", "D4", "D5", "D6",
        "E6", "F4", "H3", "H4", "G2:6", "G2:7", "G2:12",
    ];
    let mut involutions_seen = 0usize;
    for name in names {
        let r = sys(name);
        assert!(r.diagram().group_order() <= 51_840, "{name} outside the suite bound");
        let all = r.enumerate(60_000).unwrap();

        // Involution determinacy: the negated-root set is injective on
        // involutions; and dim via rank equals dim via trace (asserted
        // inside dim_minus) for every involution.
        let mut seen: std::collections::HashMap<Vec<usize>, GroupElement> =
            std::collections::HashMap::new();
        for w in &all {
            if w.is_involution() {
                involutions_seen += 1;
                let _ = r.dim_minus(w).unwrap();
                let key = r.negated_roots(w);
                if let Some(prev) = seen.insert(key, w.clone()) {
                    panic!("{name}: two involutions share a negated-root set: {prev:?}");
                }
            }
        }

        // Conjugation transport of negated sets on scattered pairs.
        for (i, x) in all.iter().step_by(97).enumerate() {
            let w = &all[(i * 131) % all.len()];
            if !w.is_involution() {
                continue;
            }
            let conj = w.conjugate_by(x).unwrap();
            let mut transported: Vec<usize> =
                r.negated_roots(w).iter().map(|&p| x.apply(p)).collect();
            transported.sort_unstable();
            assert_eq!(r.negated_roots(&conj), transported, "{name}: transport");
        }

        // Pairing involutivity and classification coverage.
        let spec = if r.diagram().w0_is_central() {
            SubgroupSpec::Full
        } else {
            SubgroupSpec::CentralizerW0
        };
        let cl = classify(&r, &spec, Mode::Exhaustive, &budgets()).unwrap();
        assert!(cl.coverage_checked, "{name}: exhaustive classification must check coverage");
        let pairing = w0_pairing(&r, &cl).unwrap();
        for (i, &j) in pairing.iter().enumerate() {
            assert_eq!(pairing[j], i, "{name}: pairing is an involution on classes");
        }

        // Eigenspace subsystems agree with the span-membership route for
        // the class representatives.
        if !r.is_dihedral() {
            for c in &cl.classes {
                let negated = r.negated_roots(&c.representative);
                let vecs: Vec<ExactVector> =
                    negated.iter().map(|&i| r.root(i).clone()).collect();
                assert_eq!(r.subsystem_in_subspace(&vecs), negated, "{name}");
                let (plus, neg) = eigen_subsystems(&r, &c.representative).unwrap();
                assert_eq!((plus, neg), (c.plus_type.clone(), c.neg_type.clone()));
            }
        }
    }
    assert!(involutions_seen > 4_000);
    println!(
        "criterion 9: PASS — determinacy, transport, rank/trace agreement, pairing \
         involutivity and coverage over {involutions_seen} involutions in {} groups",
        names.len()
    );
}
