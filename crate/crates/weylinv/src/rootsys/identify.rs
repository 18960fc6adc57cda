//! Recognition of diagram types from bond data, and classification of
//! sub-root systems by choice of a simple system.

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashSet;

use super::{bond_order, DiagramType, NodeSet, RootSystem};
use crate::algebra::{Echelon, ExactVector, Scalar};
use crate::error::{Error, Result};

/// Length of a subsystem's roots relative to the ambient length classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LengthLabel {
    Unmarked,
    Short,
    Long,
}

impl fmt::Display for LengthLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthLabel::Unmarked => Ok(()),
            LengthLabel::Short => write!(f, "(short)"),
            LengthLabel::Long => write!(f, "(long)"),
        }
    }
}

/// Multiset of irreducible components with relative-length labels, kept
/// sorted so it can serve as a bucketing invariant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SubsystemType(pub Vec<(DiagramType, LengthLabel)>);

impl SubsystemType {
    pub fn rank_sum(&self) -> usize {
        self.0.iter().map(|(t, _)| t.rank()).sum()
    }

    pub fn contains_type(&self, t: DiagramType) -> bool {
        self.0.iter().any(|(u, _)| u.same_coxeter_graph(t))
    }

    /// Multiset of component types disregarding labels and B/C realization.
    pub fn graph_multiset(&self) -> Vec<DiagramType> {
        let mut v: Vec<DiagramType> = self
            .0
            .iter()
            .map(|(t, _)| match t {
                DiagramType::B(n) => DiagramType::C(*n),
                t => *t,
            })
            .collect();
        v.sort();
        v
    }
}

impl fmt::Display for SubsystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", grouped_display(&self.0))
    }
}

/// Identify one connected component from bond orders and squared lengths.
///
/// `ids` are caller-side labels; `bond(x, y)` is the Coxeter bond order and
/// `len2(x)` the squared length.  Returns the recognized type along with the
/// ids arranged in Bourbaki order for that type.
pub fn identify_component(
    ids: &[usize],
    bond: &dyn Fn(usize, usize) -> usize,
    len2: &dyn Fn(usize) -> Scalar,
) -> Result<(DiagramType, Vec<usize>)> {
    let n = ids.len();
    let fail = |msg: &str| Error::InvalidDiagram(format!("{msg} (component {ids:?})"));
    if n == 0 {
        return Err(fail("empty component"));
    }
    if n == 1 {
        return Ok((DiagramType::A(1), ids.to_vec()));
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && bond(ids[i], ids[j]) >= 3).collect())
        .collect();
    let edge_count: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edge_count != n - 1 {
        return Err(fail("diagram is not a tree"));
    }
    if adj.iter().any(|a| a.len() > 3) {
        return Err(fail("node of degree > 3"));
    }
    let branches: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 3).collect();

    if branches.is_empty() {
        // A chain; walk it from an endpoint.
        let ends: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 1).collect();
        let walk = |start: usize| -> Vec<usize> {
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while path.len() < n {
                let next = *adj[cur].iter().find(|&&x| x != prev).unwrap();
                prev = cur;
                cur = next;
                path.push(cur);
            }
            path
        };
        let mut chain = walk(ends[0]);
        let orient = |chain: &[usize]| -> Vec<usize> { chain.iter().map(|&i| ids[i]).collect() };
        let bonds_of = |chain: &[usize]| -> Vec<usize> {
            (0..n - 1).map(|i| bond(ids[chain[i]], ids[chain[i + 1]])).collect()
        };
        let uniform_lengths = |chain: &[usize], lo: usize, hi: usize| -> bool {
            (lo..hi).all(|i| len2(ids[chain[i]]) == len2(ids[chain[lo]]))
        };

        let bonds = bonds_of(&chain);
        let specials: Vec<usize> = (0..n - 1).filter(|&i| bonds[i] != 3).collect();
        match specials.len() {
            0 => {
                if !uniform_lengths(&chain, 0, n) {
                    return Err(fail("simply-laced chain with mixed lengths"));
                }
                let fwd = orient(&chain);
                let mut rev = fwd.clone();
                rev.reverse();
                Ok((DiagramType::A(n), fwd.min(rev)))
            }
            1 => {
                let p = specials[0];
                let m = bonds[p];
                match m {
                    4 if n == 2 => {
                        // Canonical rank-2 BC is the C realization: short first.
                        if len2(ids[chain[0]]) > len2(ids[chain[1]]) {
                            chain.reverse();
                        }
                        Ok((DiagramType::C(2), orient(&chain)))
                    }
                    4 if n == 4 && p == 1 => {
                        // Double bond in the middle: F4, long pair first.
                        if len2(ids[chain[0]]) < len2(ids[chain[3]]) {
                            chain.reverse();
                        }
                        let long = len2(ids[chain[0]]);
                        let short = len2(ids[chain[3]]);
                        let two = Scalar::from_int(2);
                        if len2(ids[chain[1]]) != long
                            || len2(ids[chain[2]]) != short
                            || long != short.mul(&two)
                        {
                            return Err(fail("F4-shaped chain with wrong lengths"));
                        }
                        Ok((DiagramType::F4, orient(&chain)))
                    }
                    4 => {
                        if p == 0 {
                            chain.reverse();
                        } else if p != n - 2 {
                            return Err(fail("interior double bond"));
                        }
                        if !uniform_lengths(&chain, 0, n - 1) {
                            return Err(fail("BC chain with mixed lengths before the double bond"));
                        }
                        let last = len2(ids[chain[n - 1]]);
                        let rest = len2(ids[chain[0]]);
                        let t = if last < rest {
                            DiagramType::B(n)
                        } else if last > rest {
                            DiagramType::C(n)
                        } else {
                            return Err(fail("double bond between equal lengths"));
                        };
                        Ok((t, orient(&chain)))
                    }
                    5 => {
                        if p == n - 2 {
                            chain.reverse();
                        } else if p != 0 {
                            return Err(fail("interior 5-bond"));
                        }
                        if !uniform_lengths(&chain, 0, n) {
                            return Err(fail("H chain with mixed lengths"));
                        }
                        match n {
                            2 => Ok((DiagramType::G2(5), orient(&chain))),
                            3 | 4 => Ok((DiagramType::H(n), orient(&chain))),
                            _ => Err(fail("5-bond chain longer than H4")),
                        }
                    }
                    m if n == 2 => Ok((DiagramType::G2(m), orient(&chain))),
                    _ => Err(fail("bond order above 4 in a chain of rank > 2")),
                }
            }
            _ => Err(fail("more than one non-simple bond")),
        }
    } else if branches.len() == 1 {
        let b = branches[0];
        for i in 0..n {
            for &j in &adj[i] {
                if bond(ids[i], ids[j]) != 3 {
                    return Err(fail("branched diagram with a non-simple bond"));
                }
            }
        }
        if (0..n).any(|i| len2(ids[i]) != len2(ids[0])) {
            return Err(fail("branched diagram with mixed lengths"));
        }
        // The three arms hanging off the branch node, nearest node first.
        let mut arms: Vec<Vec<usize>> = Vec::new();
        for &start in &adj[b] {
            let mut arm = vec![start];
            let mut prev = b;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                prev = cur;
                cur = next;
                arm.push(cur);
            }
            arms.push(arm);
        }
        arms.sort_by_key(|a| (a.len(), a.iter().map(|&i| ids[i]).collect::<Vec<_>>()));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let to_ids = |xs: &[usize]| xs.iter().map(|&i| ids[i]).collect::<Vec<usize>>();
        match lens.as_slice() {
            [1, 1, _] => {
                // D_n: long arm reversed, branch node, then the two tips.
                let (tips, tail) = if lens[2] == 1 {
                    // D4: pick the smallest tip as the tail end.
                    let mut ts: Vec<usize> = arms.iter().map(|a| ids[a[0]]).collect();
                    ts.sort_unstable();
                    (vec![ts[1], ts[2]], vec![ts[0]])
                } else {
                    let mut tail = to_ids(&arms[2]);
                    tail.reverse();
                    let mut ts = vec![ids[arms[0][0]], ids[arms[1][0]]];
                    ts.sort_unstable();
                    (ts, tail)
                };
                let mut order = tail;
                order.push(ids[b]);
                order.extend(tips);
                Ok((DiagramType::D(n), order))
            }
            [1, 2, k] if (2..=4).contains(k) => {
                // E6, E7 or E8 in Bourbaki order.
                let mut order = Vec::with_capacity(n);
                let second = to_ids(&arms[1]);
                order.push(second[1]);
                order.push(ids[arms[0][0]]);
                order.push(second[0]);
                order.push(ids[b]);
                order.extend(to_ids(&arms[2]));
                Ok((DiagramType::E(n), order))
            }
            _ => Err(fail("branched diagram outside the D/E series")),
        }
    } else {
        Err(fail("more than one branch node"))
    }
}

/// A connected component of an analyzed vector set: its type and its simple
/// roots, in Bourbaki order for that type.
pub struct VectorComponent {
    pub diagram: DiagramType,
    pub simples: Vec<ExactVector>,
}

/// Choose a simple system for a set of vectors closed under negation and
/// identify its irreducible components.
///
/// Positivity is decided against the all-ones functional, with exact
/// lexicographic tie-breaking; the simple roots are the indecomposable
/// positives.
pub fn identify_vector_system(
    vectors: &[ExactVector],
    inner: &dyn Fn(&ExactVector, &ExactVector) -> Scalar,
) -> Result<Vec<VectorComponent>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let dim = vectors[0].len();
    let kind = vectors[0].0[0].kind();
    let all: FxHashSet<ExactVector> = vectors.iter().cloned().collect();
    for v in &all {
        if !all.contains(&v.neg()) {
            return Err(Error::Precondition("set not symmetric under negation".to_string()));
        }
    }
    let ones = ExactVector(vec![Scalar::one(kind); dim]);
    let is_positive = |v: &ExactVector| -> bool {
        match inner(v, &ones).signum() {
            1 => true,
            -1 => false,
            _ => {
                // Exact lexicographic perturbation.
                let lead = v.0.iter().map(Scalar::signum).find(|&s| s != 0);
                lead == Some(1)
            }
        }
    };
    let positives: Vec<ExactVector> = all.iter().filter(|v| is_positive(v)).cloned().collect();
    let pos_set: FxHashSet<ExactVector> = positives.iter().cloned().collect();
    // Extreme-ray test: a positive root is simple unless reflecting it in
    // some other positive root with ⟨α,β⟩ > 0 lands on a positive root again,
    // in which case α = s_β(α) + cβ decomposes inside the positive cone.
    // This characterization is field-agnostic, so it also covers H3 and H4,
    // where a non-simple root need not be a sum of two roots.
    let decomposable = |a: &ExactVector| -> bool {
        positives.iter().any(|b| {
            if b == a {
                return false;
            }
            let c = inner(a, b);
            if !c.is_positive() {
                return false;
            }
            let refl = a.sub(&b.scale(&c.mul(&Scalar::from_int(2)).div(&inner(b, b))));
            pos_set.contains(&refl)
        })
    };
    let mut simples: Vec<ExactVector> =
        positives.iter().filter(|a| !decomposable(a)).cloned().collect();
    simples.sort();

    let mut ech = Echelon::new(dim, kind);
    for s in &simples {
        if !ech.insert(s) {
            return Err(Error::Precondition(
                "chosen simple system is linearly dependent; set is not a sub-root system"
                    .to_string(),
            ));
        }
    }
    for (i, a) in simples.iter().enumerate() {
        for b in simples.iter().skip(i + 1) {
            if inner(a, b).is_positive() {
                return Err(Error::Precondition(
                    "simple system has an acute angle; set is not a sub-root system".to_string(),
                ));
            }
        }
    }

    // Split into connected components.
    let k = simples.len();
    let mut comp_of = vec![usize::MAX; k];
    let mut n_comps = 0;
    for start in 0..k {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp_of[start] = n_comps;
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if comp_of[j] == usize::MAX && !inner(&simples[i], &simples[j]).is_zero() {
                    comp_of[j] = n_comps;
                    stack.push(j);
                }
            }
        }
        n_comps += 1;
    }

    let mut out = Vec::new();
    let mut expected_positive = 0usize;
    for c in 0..n_comps {
        let members: Vec<usize> = (0..k).filter(|&i| comp_of[i] == c).collect();
        let bond = |x: usize, y: usize| -> usize {
            bond_order(
                &inner(&simples[x], &simples[y]),
                &inner(&simples[x], &simples[x]),
                &inner(&simples[y], &simples[y]),
            )
            .unwrap_or(0)
        };
        let len2 = |x: usize| inner(&simples[x], &simples[x]);
        let (diagram, order) = identify_component(&members, &bond, &len2)?;
        expected_positive += diagram.positive_root_count();
        out.push(VectorComponent {
            diagram,
            simples: order.into_iter().map(|i| simples[i].clone()).collect(),
        });
    }
    if expected_positive != positives.len() {
        return Err(Error::Precondition(format!(
            "set has {} positive vectors but the identified type predicts {}",
            positives.len(),
            expected_positive
        )));
    }
    out.sort_by_key(|c| (c.diagram, c.simples.clone()));
    Ok(out)
}

impl RootSystem {
    /// Classify the sub-root system formed by the given root indices into
    /// irreducible components with relative-length labels.
    pub fn classify_subsystem(&self, indices: &[usize]) -> Result<SubsystemType> {
        let v = self.try_vector()?;
        let vectors: Vec<ExactVector> = indices.iter().map(|&i| v.roots[i].clone()).collect();
        let comps = identify_vector_system(&vectors, &|a, b| self.inner(a, b))?;
        let classes = self.length_classes();
        let mut parts: Vec<(DiagramType, LengthLabel)> = Vec::new();
        for comp in comps {
            let label = if classes.len() < 2 {
                LengthLabel::Unmarked
            } else {
                // The component's roots: regenerate from its simples to read
                // off which ambient length classes occur.
                let mut lens: Vec<Scalar> =
                    comp.simples.iter().map(|s| self.inner(s, s)).collect();
                lens.sort();
                lens.dedup();
                if lens.len() > 1 {
                    LengthLabel::Unmarked
                } else if lens[0] == classes[0] {
                    LengthLabel::Short
                } else {
                    LengthLabel::Long
                }
            };
            parts.push((comp.diagram, label));
        }
        parts.sort();
        Ok(SubsystemType(parts))
    }

    /// Identify a connected subdiagram (a set of simple nodes) and return its
    /// type together with the nodes in Bourbaki order.
    pub fn identify_subdiagram_component(&self, comp: NodeSet) -> Result<(DiagramType, Vec<usize>)> {
        let ids: Vec<usize> = comp.iter().collect();
        let bond = |x: usize, y: usize| self.bond(x, y);
        let len2 = |x: usize| match &self.realization {
            super::Realization::Vector(_) => self.root_len2(self.simple_root_index(x - 1)),
            super::Realization::Dihedral(_) => Scalar::one(crate::algebra::ScalarKind::Rational),
        };
        identify_component(&ids, &bond, &len2)
    }

    /// Component types of an arbitrary subdiagram, as a sorted multiset.
    pub fn subdiagram_type(&self, nodes: NodeSet) -> Result<Vec<DiagramType>> {
        let mut out = Vec::new();
        for comp in self.subdiagram_components(nodes) {
            out.push(self.identify_subdiagram_component(comp)?.0);
        }
        out.sort();
        Ok(out)
    }
}

/// Group a list of labelled parts for display, e.g. `4·A1`.
pub fn grouped_display(parts: &[(DiagramType, LengthLabel)]) -> String {
    if parts.is_empty() {
        return "-".to_string();
    }
    let mut counts: BTreeMap<(DiagramType, LengthLabel), usize> = BTreeMap::new();
    for p in parts {
        *counts.entry(*p).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|((t, l), c)| if c == 1 { format!("{t}{l}") } else { format!("{c}·{t}{l}") })
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn single_pair_is_a1() {
        let r = sys("A3");
        let i = r.simple_root_index(0);
        let t = r.classify_subsystem(&[i, r.neg_index(i)]).unwrap();
        assert_eq!(t, SubsystemType(vec![(DiagramType::A(1), LengthLabel::Unmarked)]));
    }

    #[test]
    fn whole_system_classifies_as_itself() {
        let mut names: Vec<String> = (1..=8).map(|n| format!("A{n}")).collect();
        names.extend((2..=7).map(|n| format!("B{n}")));
        names.extend((2..=7).map(|n| format!("C{n}")));
        names.extend((4..=8).map(|n| format!("D{n}")));
        names.extend(["E6", "E7", "E8", "F4", "H3", "H4"].map(String::from));
        for name in &names {
            let r = sys(name);
            let all: Vec<usize> = (0..r.n_roots()).collect();
            let t = r.classify_subsystem(&all).unwrap();
            assert_eq!(t.0.len(), 1, "{name} should be irreducible");
            let found = t.0[0].0;
            if *name == "B2" {
                // Rank-2 BC is reported in the canonical C orientation.
                assert_eq!(found, DiagramType::C(2));
            } else {
                assert_eq!(found, r.diagram(), "{name} must recognize its own realization");
            }
        }
    }

    #[test]
    fn c2_short_pairs_are_two_short_a1() {
        let r = sys("C2");
        let short: Vec<usize> = (0..r.n_roots())
            .filter(|&i| r.root_len2(i) == Scalar::from_int(2))
            .collect();
        assert_eq!(short.len(), 4);
        let t = r.classify_subsystem(&short).unwrap();
        assert_eq!(
            t,
            SubsystemType(vec![
                (DiagramType::A(1), LengthLabel::Short),
                (DiagramType::A(1), LengthLabel::Short)
            ])
        );
    }

    #[test]
    fn subdiagram_identification() {
        let e8 = sys("E8");
        let d4: NodeSet = "{2,3,4,5}".parse().unwrap();
        let (t, order) = e8.identify_subdiagram_component(d4).unwrap();
        assert_eq!(t, DiagramType::D(4));
        assert_eq!(order[1], 4, "node 4 is the D4 branch node");

        let e7sub: NodeSet = "{1,2,3,4,5,6,7}".parse().unwrap();
        assert_eq!(e8.identify_subdiagram_component(e7sub).unwrap().0, DiagramType::E(7));

        let f4 = sys("F4");
        let c3: NodeSet = "{2,3,4}".parse().unwrap();
        assert_eq!(f4.identify_subdiagram_component(c3).unwrap().0, DiagramType::C(3));
        let b3: NodeSet = "{1,2,3}".parse().unwrap();
        assert_eq!(f4.identify_subdiagram_component(b3).unwrap().0, DiagramType::B(3));

        let h4 = sys("H4");
        let h3: NodeSet = "{1,2,3}".parse().unwrap();
        assert_eq!(h4.identify_subdiagram_component(h3).unwrap().0, DiagramType::H(3));
        let i25: NodeSet = "{1,2}".parse().unwrap();
        assert_eq!(h4.identify_subdiagram_component(i25).unwrap().0, DiagramType::G2(5));
    }

    #[test]
    fn negation_symmetry_is_required() {
        let r = sys("A2");
        let err = r.classify_subsystem(&[r.simple_root_index(0)]).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
