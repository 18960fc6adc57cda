//! Involutions: standard subsets, the orbit-counting eigenspace-dimension
//! formulas, reduction to standard form, conjugacy classification in the
//! full group and in subgroups, eigenspace subsystem invariants, and the
//! action of multiplication by the longest element on classes.

mod pattern;

pub use pattern::PatternKey;

use std::collections::BTreeMap;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::rootsys::{
    DiagramType, LengthLabel, NodePerm, NodeSet, Realization, RootSystem, SubsystemType,
};
use crate::weyl::{negated_mask, orbit_of_mask, Budgets, GroupElement, Mode, SubgroupSpec};

/// Is `w_I` a standard involution, i.e. does it act as −1 on span(I)?
pub fn is_standard_subset(sys: &RootSystem, nodes: NodeSet) -> Result<bool> {
    let w = sys.longest_parabolic(nodes)?;
    Ok(sys.dim_minus(&w)? == nodes.len())
}

/// All subsets `I` with `dim⁻(w_I) = |I|`.
pub fn standard_subsets(sys: &RootSystem) -> Result<Vec<NodeSet>> {
    let mut out = Vec::new();
    for nodes in NodeSet::all_subsets(sys.rank()) {
        if is_standard_subset(sys, nodes)? {
            out.push(nodes);
        }
    }
    out.sort();
    Ok(out)
}

/// Which orbit-counting formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenDimFormula {
    /// `dim⁻(w_I)` = orbits of `−w_I` on I.
    MinusWI,
    /// `dim⁻(w₀·w_I)` = non-trivial orbits of `w₀w_I` on I plus orbits of
    /// `−w₀` on the complement; requires `−w₀(I) = I`.
    W0TimesWI,
    /// `dim⁻(σ·(−w_I))` for a supplied diagram automorphism σ; requires
    /// `σ(I) = I` and that σ and `−w_I` commute on I.
    SigmaMinusWI,
}

/// Node map induced on `I` by `−w_I` (0-based pairs `(i, image)`).
fn neg_wi_node_map(sys: &RootSystem, nodes: NodeSet) -> Result<FxHashMap<usize, usize>> {
    let w = sys.longest_parabolic(nodes)?;
    let mut map = FxHashMap::default();
    for n in nodes.iter() {
        let img_root = sys.neg_index(w.apply(sys.simple_root_index(n - 1)));
        let img_node = (0..sys.rank())
            .find(|&j| sys.simple_root_index(j) == img_root)
            .ok_or_else(|| {
                Error::Precondition(format!("-w_I does not permute the simple roots of I={nodes}"))
            })?;
        if !nodes.contains(img_node + 1) {
            return Err(Error::Precondition(format!("-w_I maps node {n} outside I={nodes}")));
        }
        map.insert(n - 1, img_node);
    }
    Ok(map)
}

fn count_orbits(domain: &[usize], map: &dyn Fn(usize) -> usize, nontrivial_only: bool) -> usize {
    let mut seen: FxHashSet<usize> = FxHashSet::default();
    let mut count = 0;
    for &start in domain {
        if seen.contains(&start) {
            continue;
        }
        let mut size = 0;
        let mut x = start;
        while seen.insert(x) {
            size += 1;
            x = map(x);
        }
        if !nontrivial_only || size > 1 {
            count += 1;
        }
    }
    count
}

/// Evaluate an orbit-counting eigenspace-dimension formula.  Preconditions
/// are rejected with an explanatory error, never silently computed over.
pub fn dim_minus_orbits(
    sys: &RootSystem,
    nodes: NodeSet,
    formula: EigenDimFormula,
    sigma: Option<&NodePerm>,
) -> Result<usize> {
    let neg_wi = neg_wi_node_map(sys, nodes)?;
    let members: Vec<usize> = nodes.iter().map(|n| n - 1).collect();
    match formula {
        EigenDimFormula::MinusWI => Ok(count_orbits(&members, &|i| neg_wi[&i], false)),
        EigenDimFormula::W0TimesWI | EigenDimFormula::SigmaMinusWI => {
            let auto = match formula {
                EigenDimFormula::W0TimesWI => {
                    sys.neg_w0_node_permutation(&sys.longest_element())?
                }
                _ => sigma
                    .ok_or_else(|| {
                        Error::Precondition("the σ-formula needs an automorphism".to_string())
                    })?
                    .clone(),
            };
            if !nodes.is_invariant_under(&auto) {
                return Err(Error::Precondition(format!(
                    "I={nodes} is not invariant under the automorphism"
                )));
            }
            if formula == EigenDimFormula::SigmaMinusWI {
                // σ and −w_I must commute on I.
                for &i in &members {
                    if auto.apply(neg_wi[&i]) != neg_wi[&auto.apply(i)] {
                        return Err(Error::Precondition(format!(
                            "σ and -w_I do not commute on I={nodes}"
                        )));
                    }
                }
            }
            let composite = |i: usize| auto.apply(neg_wi[&i]);
            let inside = count_orbits(&members, &composite, true);
            let complement: Vec<usize> =
                (0..sys.rank()).filter(|&i| !nodes.contains(i + 1)).collect();
            let outside = count_orbits(&complement, &|i| auto.apply(i), false);
            Ok(inside + outside)
        }
    }
}

/// Independent linear-algebra value of `dim⁻(σ·(−w_I))`, for cross-checking
/// the orbit formulas: build the matrix `S·(−M_I)` and use `(n − tr)/2`.
pub fn dim_minus_linear(sys: &RootSystem, nodes: NodeSet, sigma: &NodePerm) -> Result<usize> {
    use crate::algebra::{ExactMatrix, Scalar};
    let n = sys.rank();
    let w = sys.longest_parabolic(nodes)?;
    let m = sys.matrix_of(&w)?;
    let kind = sys.scalar_kind();
    let mut s = ExactMatrix::zeros(n, n, kind);
    for i in 0..n {
        *s.at_mut(sigma.apply(i), i) = Scalar::one(kind);
    }
    let x = s.matmul(&m.neg());
    let x2 = x.matmul(&x);
    if x2 != ExactMatrix::identity(n, kind) {
        return Err(Error::NotAnInvolution);
    }
    let tr = x.trace();
    for d in 0..=n {
        let candidate = Scalar::from_int(n as i64 - 2 * d as i64);
        if tr == candidate {
            return Ok(d);
        }
    }
    Err(Error::Precondition("trace of an involution must be an integer of matching parity".into()))
}

/// A standard subset `I ⊆ H` with `c_I` conjugate to `w_H`, obtained by the
/// componentwise reductions: alternating nodes for A, all-but-first for odd
/// D, the branch star for E6, one node for odd dihedral components.
pub fn reduce_to_standard(sys: &RootSystem, h: NodeSet) -> Result<NodeSet> {
    let mut out = NodeSet::empty();
    for comp in sys.subdiagram_components(h) {
        let (t, order) = sys.identify_subdiagram_component(comp)?;
        let keep: Vec<usize> = if t.w0_is_central() {
            order
        } else {
            match t {
                DiagramType::A(_) => order.iter().copied().step_by(2).collect(),
                DiagramType::D(_) => order[1..].to_vec(),
                DiagramType::E(6) => order[1..=4].to_vec(),
                DiagramType::G2(_) => vec![order[0]],
                _ => unreachable!("every other type has central longest element"),
            }
        };
        for node in keep {
            out.insert(node);
        }
    }
    assert!(
        is_standard_subset(sys, out)?,
        "componentwise reduction must land on a standard subset"
    );
    Ok(out)
}

/// Classify the full sub-root systems lying in the ±1-eigenspaces of an
/// involution.  The roots in the −1-eigenspace are exactly the negated
/// roots, and the roots in the +1-eigenspace exactly the fixed ones.
pub fn eigen_subsystems(
    sys: &RootSystem,
    w: &GroupElement,
) -> Result<(SubsystemType, SubsystemType)> {
    if !w.is_involution() {
        return Err(Error::NotAnInvolution);
    }
    match &sys.realization {
        Realization::Vector(_) => {
            let negated: Vec<usize> = sys.negated_roots(w);
            let fixed: Vec<usize> =
                (0..sys.n_roots()).filter(|&i| w.apply(i) == i).collect();
            let neg_type = sys.classify_subsystem(&negated)?;
            let plus_type = sys.classify_subsystem(&fixed)?;
            Ok((plus_type, neg_type))
        }
        Realization::Dihedral(d) => {
            use crate::weyl::DihedralShape;
            let whole = SubsystemType(vec![(DiagramType::G2(d.gonality), LengthLabel::Unmarked)]);
            let a1 = SubsystemType(vec![(DiagramType::A(1), LengthLabel::Unmarked)]);
            let empty = SubsystemType::default();
            Ok(match w.dihedral_shape().expect("dihedral element") {
                DihedralShape::Rotation(0) => (whole, empty),
                DihedralShape::Rotation(_) => (empty, whole),
                DihedralShape::Reflection(c) => {
                    // A reflection fixes the root pair on its mirror line
                    // exactly when 2i ≡ c (mod 2n) is solvable, i.e. c even.
                    let fixes_a_root = c % 2 == 0;
                    (if fixes_a_root { a1.clone() } else { empty }, a1)
                }
            })
        }
    }
}

/// One conjugacy class of involutions.
#[derive(Clone, Debug)]
pub struct InvolutionClass {
    /// `w_I` for the canonical (smallest) representative subset.
    pub representative: GroupElement,
    /// Every scanned subset `I` whose `w_I` lies in this class, sorted.
    pub rep_subsets: Vec<NodeSet>,
    pub dim_minus: usize,
    pub dim_plus: usize,
    /// Components of the sub-root system inside the −1-eigenspace.
    pub neg_type: SubsystemType,
    /// Components of the sub-root system inside the +1-eigenspace.
    pub plus_type: SubsystemType,
    pub class_size: Option<usize>,
}

impl InvolutionClass {
    pub fn canonical_subset(&self) -> NodeSet {
        self.rep_subsets[0]
    }
}

enum ClassLocator {
    /// Negated-root masks of every class member, aligned with `classes`.
    Masks(Vec<FxHashSet<u128>>),
    /// Dihedral classes are located by closed form.
    Dihedral,
}

/// Result of [`classify`]: the involution classes of a subgroup.
pub struct Classification {
    pub diagram: DiagramType,
    pub spec: SubgroupSpec,
    /// The decision mode actually used (never `Auto`).
    pub mode: Mode,
    pub classes: Vec<InvolutionClass>,
    /// Whether every involution of the enumerated subgroup was verified to
    /// lie in one of the classes.
    pub coverage_checked: bool,
    locator: ClassLocator,
}

impl Classification {
    /// Index of the class containing the involution `w`, if any.
    pub fn class_of_element(&self, sys: &RootSystem, w: &GroupElement) -> Option<usize> {
        match &self.locator {
            ClassLocator::Masks(masks) => {
                let m = negated_mask(sys, w);
                masks.iter().position(|s| s.contains(&m))
            }
            ClassLocator::Dihedral => (0..self.classes.len()).find(|&i| {
                dihedral_conjugate(sys, &self.spec, &self.classes[i].representative, w)
            }),
        }
    }

    /// Index of the class containing `w_I`, looked up among the scanned
    /// representative subsets.
    pub fn class_of_subset(&self, nodes: NodeSet) -> Option<usize> {
        self.classes.iter().position(|c| c.rep_subsets.contains(&nodes))
    }
}

/// Closed-form conjugacy for dihedral involutions inside a subgroup.
fn dihedral_conjugate(
    sys: &RootSystem,
    spec: &SubgroupSpec,
    w: &GroupElement,
    w2: &GroupElement,
) -> bool {
    if w == w2 {
        return true;
    }
    let n = sys.n_positive();
    let full_conjugate = |a: &GroupElement, b: &GroupElement| -> bool {
        use crate::weyl::DihedralShape as S;
        let (sa, sb) = (a.dihedral_shape().unwrap(), b.dihedral_shape().unwrap());
        match (sa, sb) {
            // Rotations form singleton involution classes (id and −1).
            (S::Rotation(_), S::Rotation(_)) => a == b,
            (S::Reflection(_), S::Reflection(_)) => {
                // All reflections are conjugate for odd gonality; for even
                // gonality the mirror-index parity is the invariant.
                n % 2 == 1 || sa.mirror(n).unwrap() % 2 == sb.mirror(n).unwrap() % 2
            }
            _ => false,
        }
    };
    match spec {
        SubgroupSpec::Full => full_conjugate(w, w2),
        SubgroupSpec::CentralizerW0 => {
            if n.is_multiple_of(2) {
                full_conjugate(w, w2)
            } else {
                w == w2
            }
        }
        SubgroupSpec::SigmaFixed(p) => {
            if p.is_identity() {
                full_conjugate(w, w2)
            } else {
                w == w2
            }
        }
    }
}

/// Partition the involutions of the subgroup into conjugacy classes.
///
/// Candidates are the parabolic longest elements `w_I` over the subsets `I`
/// invariant under the subgroup's node automorphism (every such `w_I` lies
/// in the subgroup, and `w_I` lies in the subgroup only for invariant `I`).
/// Classes are first separated by the `(dim⁻, neg_type)` invariant and then
/// merged inside each bucket by the requested conjugacy oracle; in
/// exhaustive mode the merge is cross-checked against the orbit route and
/// the partition is verified to cover every involution of the subgroup.
pub fn classify(
    sys: &RootSystem,
    spec: &SubgroupSpec,
    mode: Mode,
    budgets: &Budgets,
) -> Result<Classification> {
    let sigma = spec.node_automorphism(sys)?;
    let mut candidates: Vec<(NodeSet, GroupElement)> = Vec::new();
    for nodes in NodeSet::all_subsets(sys.rank()) {
        if nodes.is_invariant_under(&sigma) {
            candidates.push((nodes, sys.longest_parabolic(nodes)?));
        }
    }
    candidates.sort_by_key(|(nodes, _)| *nodes);

    if sys.is_dihedral() {
        return classify_dihedral(sys, spec, mode, budgets, candidates);
    }

    let mode = mode.resolve(sys, spec, budgets);
    let gens = sys.subgroup_generators(spec)?;
    let elements: Option<Vec<GroupElement>> = match mode {
        Mode::Exhaustive => Some(sys.enumerate_from(&gens, budgets.cap)?),
        _ => None,
    };

    struct Candidate {
        nodes: NodeSet,
        w: GroupElement,
        mask: u128,
        dim_minus: usize,
        plus_type: SubsystemType,
        neg_type: SubsystemType,
    }
    let mut cands: Vec<Candidate> = Vec::new();
    for (nodes, w) in candidates {
        let (plus_type, neg_type) = eigen_subsystems(sys, &w)?;
        let dim_minus = sys.dim_minus(&w)?;
        let mask = negated_mask(sys, &w);
        cands.push(Candidate { nodes, w, mask, dim_minus, plus_type, neg_type });
    }

    // Bucket by the cheap invariant; the oracle only runs within buckets.
    let mut buckets: BTreeMap<(usize, SubsystemType), Vec<usize>> = BTreeMap::new();
    for (i, c) in cands.iter().enumerate() {
        buckets.entry((c.dim_minus, c.neg_type.clone())).or_default().push(i);
    }

    struct ProtoClass {
        members: Vec<usize>,
        orbit: FxHashSet<u128>,
    }
    let mut protos: Vec<ProtoClass> = Vec::new();
    for bucket in buckets.values() {
        let mut bucket_classes: Vec<usize> = Vec::new();
        for &ci in bucket {
            let mask = cands[ci].mask;
            match bucket_classes.iter().find(|&&pi| protos[pi].orbit.contains(&mask)) {
                Some(&pi) => protos[pi].members.push(ci),
                None => {
                    let seed = &cands[ci];
                    let orbit = match (&elements, mode) {
                        (Some(els), Mode::Exhaustive) => {
                            // Literal conjugation sweep x·w·x⁻¹ over the
                            // subgroup, then cross-checked against the
                            // independent orbit search.
                            let mut set: FxHashSet<u128> = FxHashSet::default();
                            for x in els {
                                let conj = seed.w.conjugate_by(x)?;
                                set.insert(negated_mask(sys, &conj));
                            }
                            let (bfs, _) =
                                orbit_of_mask(sys, seed.mask, &gens, budgets, None)?;
                            let bfs_set: FxHashSet<u128> = bfs.keys().copied().collect();
                            assert_eq!(
                                set, bfs_set,
                                "exhaustive and orbit routes disagree on a class"
                            );
                            set
                        }
                        _ => {
                            let (bfs, _) =
                                orbit_of_mask(sys, seed.mask, &gens, budgets, None)?;
                            bfs.keys().copied().collect()
                        }
                    };
                    let pi = protos.len();
                    protos.push(ProtoClass { members: vec![ci], orbit });
                    bucket_classes.push(pi);
                }
            }
        }
    }

    // Coverage: in exhaustive mode, every involution of the subgroup must
    // fall into one of the class orbits.
    let mut coverage_checked = false;
    if let Some(els) = &elements {
        let mut union: FxHashSet<u128> = FxHashSet::default();
        for p in &protos {
            for &m in &p.orbit {
                union.insert(m);
            }
        }
        for x in els {
            if x.is_involution() && !union.contains(&negated_mask(sys, x)) {
                return Err(Error::Precondition(format!(
                    "involution of length {} not conjugate to any candidate w_I",
                    x.length()
                )));
            }
        }
        coverage_checked = true;
    }

    // Canonical representative: the smallest subset by (cardinality, lex);
    // a class always sorts a standard subset first when it has one, since
    // dim⁻(w_I) = |I| exactly for standard I and dim⁻(w_I) < |I| otherwise.
    let subset_key = |ns: &NodeSet| (ns.len(), ns.to_vec());
    let mut order: Vec<usize> = (0..protos.len()).collect();
    order.sort_by_key(|&pi| {
        let p = &protos[pi];
        let canonical =
            p.members.iter().map(|&ci| cands[ci].nodes).min_by_key(subset_key).unwrap();
        (cands[p.members[0]].dim_minus, subset_key(&canonical))
    });

    let mut classes = Vec::new();
    let mut masks = Vec::new();
    for &pi in &order {
        let p = &protos[pi];
        let first = &cands[p.members[0]];
        let mut rep_subsets: Vec<NodeSet> = p.members.iter().map(|&ci| cands[ci].nodes).collect();
        rep_subsets.sort_by_key(subset_key);
        let representative = sys.longest_parabolic(rep_subsets[0])?;
        let class = InvolutionClass {
            representative,
            rep_subsets,
            dim_minus: first.dim_minus,
            dim_plus: sys.rank() - first.dim_minus,
            neg_type: first.neg_type.clone(),
            plus_type: first.plus_type.clone(),
            class_size: Some(p.orbit.len()),
        };
        assert_eq!(class.neg_type.rank_sum(), class.dim_minus);
        classes.push(class);
        masks.push(p.orbit.clone());
    }

    Ok(Classification {
        diagram: sys.diagram(),
        spec: spec.clone(),
        mode,
        classes,
        coverage_checked,
        locator: ClassLocator::Masks(masks),
    })
}

fn classify_dihedral(
    sys: &RootSystem,
    spec: &SubgroupSpec,
    mode: Mode,
    budgets: &Budgets,
    candidates: Vec<(NodeSet, GroupElement)>,
) -> Result<Classification> {
    let n = sys.n_positive();
    let mode = mode.resolve(sys, spec, budgets);
    let mut classes: Vec<InvolutionClass> = Vec::new();
    for (nodes, w) in candidates {
        let dim_minus = sys.dim_minus(&w)?;
        match classes
            .iter_mut()
            .find(|c| dihedral_conjugate(sys, spec, &c.representative, &w))
        {
            Some(c) => {
                c.rep_subsets.push(nodes);
                c.rep_subsets.sort();
            }
            None => {
                let (plus_type, neg_type) = eigen_subsystems(sys, &w)?;
                let class_size = Some(match dim_minus {
                    0 => 1,
                    2 => 1,
                    _ => match spec {
                        SubgroupSpec::Full => {
                            if n.is_multiple_of(2) {
                                n / 2
                            } else {
                                n
                            }
                        }
                        SubgroupSpec::CentralizerW0 if n.is_multiple_of(2) => n / 2,
                        _ => 1,
                    },
                });
                classes.push(InvolutionClass {
                    representative: w,
                    rep_subsets: vec![nodes],
                    dim_minus,
                    dim_plus: 2 - dim_minus,
                    neg_type,
                    plus_type,
                    class_size,
                });
            }
        }
    }
    for c in &mut classes {
        c.rep_subsets.sort_by_key(|ns| (ns.len(), ns.to_vec()));
        c.representative = sys.longest_parabolic(c.rep_subsets[0])?;
    }
    classes.sort_by_key(|c| {
        (c.dim_minus, c.canonical_subset().len(), c.canonical_subset().to_vec())
    });

    // Coverage against the enumerated subgroup when it fits the cap.
    let mut coverage_checked = false;
    if mode == Mode::Exhaustive {
        let subgroup = sys.enumerate_subgroup(spec, budgets.cap)?;
        for x in &subgroup {
            if x.is_involution()
                && !classes.iter().any(|c| dihedral_conjugate(sys, spec, &c.representative, x))
            {
                return Err(Error::Precondition(
                    "dihedral involution not conjugate to any candidate".to_string(),
                ));
            }
        }
        coverage_checked = true;
    }

    Ok(Classification {
        diagram: sys.diagram(),
        spec: spec.clone(),
        mode,
        classes,
        coverage_checked,
        locator: ClassLocator::Dihedral,
    })
}

/// The permutation that multiplication by the longest element induces on
/// involution classes: `pairing[i] = j` when `w₀·(rep of class i)` lies in
/// class `j`.  The map is an involution on classes.
pub fn w0_pairing(sys: &RootSystem, classification: &Classification) -> Result<Vec<usize>> {
    let w0 = sys.longest_element();
    let mut pairing = Vec::with_capacity(classification.classes.len());
    for class in &classification.classes {
        let image = w0.compose(&class.representative)?;
        if !image.is_involution() {
            return Err(Error::NonCentralLongest(format!(
                "w0·w is not an involution for a class of {}; the longest element is not \
                 central and the subgroup does not centralize it",
                sys.diagram()
            )));
        }
        let j = classification.class_of_element(sys, &image).ok_or_else(|| {
            Error::Precondition(
                "image class not found: classification is incomplete".to_string(),
            )
        })?;
        pairing.push(j);
    }
    for (i, &j) in pairing.iter().enumerate() {
        if pairing[j] != i {
            return Err(Error::Precondition(format!(
                "pairing is not an involution on classes: {i} -> {j} -> {}",
                pairing[j]
            )));
        }
    }
    Ok(pairing)
}
