//! Root systems for the finite Coxeter types, with exact coordinates.
//!
//! A [`RootSystem`] stores every root in simple-root coordinates together
//! with the Gram matrix of the simple roots, so reflections, inner products
//! and span queries are all exact.  Crystallographic types use rational
//! scalars; H3 and H4 use the golden field.  Dihedral types `G2(n)` (also
//! written `I2(n)`) do not store vectors at all: their `2n` roots are kept
//! as angle indices `0..2n`, with root `k` sitting at angle `kπ/n` and
//! `-root(k) = root(k+n)`, and the whole group calculus stays symbolic.

mod automorphism;
mod identify;

pub use automorphism::NodePerm;
pub use identify::{identify_component, identify_vector_system, LengthLabel, SubsystemType};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;

use crate::algebra::{Echelon, ExactMatrix, ExactVector, Scalar, ScalarKind};
use crate::error::{Error, Result};

/// A finite irreducible diagram type, with Bourbaki node numbering.
///
/// `B(n)` and `C(n)` are distinct tags with the same Coxeter graph: `B(n)`
/// has its short simple root at node `n`, `C(n)` its long one.  `G2(n)`
/// is the dihedral type of gonality `n`; the crystallographic `G2` is
/// `G2(6)` and `I2(n)` is accepted as a synonym.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2(usize),
    H(usize),
}

impl DiagramType {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            DiagramType::A(n) => n >= 1,
            DiagramType::B(n) | DiagramType::C(n) => n >= 2,
            DiagramType::D(n) => n >= 4,
            DiagramType::E(n) => (6..=8).contains(&n),
            DiagramType::F4 => true,
            DiagramType::G2(n) => n >= 2,
            DiagramType::H(n) => (3..=4).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidDiagram(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            DiagramType::A(n)
            | DiagramType::B(n)
            | DiagramType::C(n)
            | DiagramType::D(n)
            | DiagramType::E(n)
            | DiagramType::H(n) => n,
            DiagramType::F4 => 4,
            DiagramType::G2(_) => 2,
        }
    }

    pub fn is_dihedral(self) -> bool {
        matches!(self, DiagramType::G2(_))
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        match self {
            DiagramType::A(n) => n * (n + 1) / 2,
            DiagramType::B(n) | DiagramType::C(n) => n * n,
            DiagramType::D(n) => n * (n - 1),
            DiagramType::E(6) => 36,
            DiagramType::E(7) => 63,
            DiagramType::E(8) => 120,
            DiagramType::E(_) => unreachable!(),
            DiagramType::F4 => 24,
            DiagramType::G2(n) => n,
            DiagramType::H(3) => 15,
            DiagramType::H(4) => 60,
            DiagramType::H(_) => unreachable!(),
        }
    }

    /// Order of the Weyl group.
    pub fn group_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            DiagramType::A(n) => fact(n + 1),
            DiagramType::B(n) | DiagramType::C(n) => (1u128 << n) * fact(n),
            DiagramType::D(n) => (1u128 << (n - 1)) * fact(n),
            DiagramType::E(6) => 51_840,
            DiagramType::E(7) => 2_903_040,
            DiagramType::E(8) => 696_729_600,
            DiagramType::E(_) => unreachable!(),
            DiagramType::F4 => 1_152,
            DiagramType::G2(n) => 2 * n as u128,
            DiagramType::H(3) => 120,
            DiagramType::H(4) => 14_400,
            DiagramType::H(_) => unreachable!(),
        }
    }

    /// Whether the longest element is central, i.e. acts as -id.
    pub fn w0_is_central(self) -> bool {
        match self {
            DiagramType::A(n) => n == 1,
            DiagramType::B(_) | DiagramType::C(_) => true,
            DiagramType::D(n) => n % 2 == 0,
            DiagramType::E(n) => n == 7 || n == 8,
            DiagramType::F4 => true,
            DiagramType::G2(n) => n % 2 == 0,
            DiagramType::H(_) => true,
        }
    }

    /// The same diagram with the B/C realization swapped; identity otherwise.
    pub fn dual_realization(self) -> DiagramType {
        match self {
            DiagramType::B(n) => DiagramType::C(n),
            DiagramType::C(n) => DiagramType::B(n),
            t => t,
        }
    }

    /// B and C realize the same Coxeter graph.
    pub fn same_coxeter_graph(self, other: DiagramType) -> bool {
        self == other || self.dual_realization() == other
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::A(n) => write!(f, "A{n}"),
            DiagramType::B(n) => write!(f, "B{n}"),
            DiagramType::C(n) => write!(f, "C{n}"),
            DiagramType::D(n) => write!(f, "D{n}"),
            DiagramType::E(n) => write!(f, "E{n}"),
            DiagramType::F4 => write!(f, "F4"),
            DiagramType::G2(n) => write!(f, "G2:{n}"),
            DiagramType::H(n) => write!(f, "H{n}"),
        }
    }
}

impl FromStr for DiagramType {
    type Err = Error;

    /// Accepts `A5`, `B5`, `C5`, `BC5` (C realization), `D6`, `E7`, `F4`,
    /// `H3`, `G2` (gonality 6), `G2:8`, `G2(8)`, `I2:8`, `I2(8)`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseType(s.to_string());
        let t = if let Some(rest) = s.strip_prefix("G2").or_else(|| s.strip_prefix("I2")) {
            if rest.is_empty() {
                DiagramType::G2(6)
            } else {
                let digits = rest
                    .strip_prefix(':')
                    .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
                    .ok_or_else(err)?;
                DiagramType::G2(digits.parse().map_err(|_| err())?)
            }
        } else if let Some(rest) = s.strip_prefix("BC") {
            DiagramType::C(rest.parse().map_err(|_| err())?)
        } else {
            let (head, rest) = s.split_at(1);
            let n: usize = rest.parse().map_err(|_| err())?;
            match head {
                "A" => DiagramType::A(n),
                "B" => DiagramType::B(n),
                "C" => DiagramType::C(n),
                "D" => DiagramType::D(n),
                "E" => DiagramType::E(n),
                "F" if n == 4 => DiagramType::F4,
                "H" => DiagramType::H(n),
                _ => return Err(err()),
            }
        };
        t.validate()
    }
}

/// A set of simple-root nodes, 1-based, kept as a bitmask.
///
/// Ordering is lexicographic on the sorted index list, which keeps reports
/// and golden-file diffs stable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NodeSet {
    mask: u16,
}

impl NodeSet {
    pub fn empty() -> Self {
        NodeSet { mask: 0 }
    }

    pub fn from_nodes(nodes: &[usize], rank: usize) -> Result<Self> {
        let mut mask = 0u16;
        for &n in nodes {
            if n == 0 || n > rank {
                return Err(Error::NodeOutOfRange { node: n, rank });
            }
            mask |= 1 << (n - 1);
        }
        Ok(NodeSet { mask })
    }

    pub fn full(rank: usize) -> Self {
        NodeSet { mask: (1u16 << rank) - 1 }
    }

    pub fn contains(self, node: usize) -> bool {
        node >= 1 && self.mask & (1 << (node - 1)) != 0
    }

    pub fn insert(&mut self, node: usize) {
        self.mask |= 1 << (node - 1);
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn is_subset_of(self, other: NodeSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet { mask: self.mask | other.mask }
    }

    /// 1-based node indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |i| self.mask & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `{1..=rank}` in a fixed order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0u16..1 << rank).map(|mask| NodeSet { mask })
    }

    /// Image under a node permutation.
    pub fn map(self, perm: &NodePerm) -> NodeSet {
        let mut out = NodeSet::empty();
        for n in self.iter() {
            out.insert(perm.apply(n - 1) + 1);
        }
        out
    }

    pub fn is_invariant_under(self, perm: &NodePerm) -> bool {
        self.map(perm) == self
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.to_vec().cmp(&other.to_vec())
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, n) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for NodeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::GoldenFormat(format!("bad node set `{s}`"));
        let inner = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(err)?;
        let mut mask = 0u16;
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                let n: usize = part.trim().parse().map_err(|_| err())?;
                if n == 0 || n > 16 {
                    return Err(err());
                }
                mask |= 1 << (n - 1);
            }
        }
        Ok(NodeSet { mask })
    }
}

/// Vector-realized data: every root in simple-root coordinates.
pub struct VectorSystem {
    pub(crate) kind: ScalarKind,
    /// Gram matrix of the simple roots.
    pub(crate) gram: ExactMatrix,
    /// Positive roots first (sorted by height, then coordinates), then the
    /// negatives in the same order, so `-roots[i] = roots[i ± n_positive]`.
    pub(crate) roots: Vec<ExactVector>,
    pub(crate) n_positive: usize,
    /// Index of the simple root `α_i` within `roots`.
    pub(crate) simple_index: Vec<usize>,
    pub(crate) lookup: FxHashMap<ExactVector, u32>,
    /// Root permutation of each simple reflection.
    pub(crate) simple_perms: Vec<Vec<u8>>,
    /// Coxeter bond orders between simple nodes (2 = no edge).
    pub(crate) bonds: Vec<Vec<usize>>,
}

/// Symbolic dihedral data.
pub struct DihedralSystem {
    pub(crate) gonality: usize,
}

pub enum Realization {
    Vector(VectorSystem),
    Dihedral(DihedralSystem),
}

/// A finite root system together with its construction data.
pub struct RootSystem {
    diagram: DiagramType,
    pub(crate) realization: Realization,
    /// Longest element and a reduced word for it, computed on first use.
    pub(crate) w0_cache: std::sync::OnceLock<(crate::weyl::GroupElement, Vec<usize>)>,
    /// Root permutations of diagram automorphisms, keyed by node permutation.
    pub(crate) sigma_cache: std::sync::Mutex<FxHashMap<NodePerm, std::sync::Arc<[u8]>>>,
}

/// Gram matrix of the simple roots in the crate's normalization: long roots
/// of crystallographic types have squared length 2 (C is the dual realization
/// with long roots of squared length 4), H-type roots are unit length.
fn gram_matrix(t: DiagramType) -> ExactMatrix {
    let n = t.rank();
    let half = || Scalar::ratio(-1, 2);
    let phi_half = || Scalar::golden_ratio(0, 1, -1, 2);
    let mut chain_edges: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut diag: Vec<Scalar> = vec![Scalar::from_int(2); n];
    match t {
        DiagramType::A(_) => {
            for i in 0..n - 1 {
                chain_edges.push((i, i + 1, Scalar::from_int(-1)));
            }
        }
        DiagramType::B(_) => {
            diag[n - 1] = Scalar::from_int(1);
            for i in 0..n - 1 {
                chain_edges.push((i, i + 1, Scalar::from_int(-1)));
            }
        }
        DiagramType::C(_) => {
            diag[n - 1] = Scalar::from_int(4);
            for i in 0..n - 2 {
                chain_edges.push((i, i + 1, Scalar::from_int(-1)));
            }
            chain_edges.push((n - 2, n - 1, Scalar::from_int(-2)));
        }
        DiagramType::D(_) => {
            for i in 0..n - 3 {
                chain_edges.push((i, i + 1, Scalar::from_int(-1)));
            }
            chain_edges.push((n - 3, n - 2, Scalar::from_int(-1)));
            chain_edges.push((n - 3, n - 1, Scalar::from_int(-1)));
        }
        DiagramType::E(_) => {
            // Chain 1-3-4-...-n with node 2 attached to node 4.
            chain_edges.push((0, 2, Scalar::from_int(-1)));
            for i in 2..n - 1 {
                chain_edges.push((i, i + 1, Scalar::from_int(-1)));
            }
            chain_edges.push((1, 3, Scalar::from_int(-1)));
        }
        DiagramType::F4 => {
            diag[2] = Scalar::from_int(1);
            diag[3] = Scalar::from_int(1);
            chain_edges.push((0, 1, Scalar::from_int(-1)));
            chain_edges.push((1, 2, Scalar::from_int(-1)));
            chain_edges.push((2, 3, half()));
        }
        DiagramType::H(_) => {
            diag = vec![Scalar::one(ScalarKind::Golden); n];
            chain_edges.push((0, 1, phi_half()));
            for i in 1..n - 1 {
                chain_edges.push((i, i + 1, Scalar::golden_ratio(-1, 2, 0, 1)));
            }
        }
        DiagramType::G2(_) => unreachable!("dihedral systems have no Gram matrix"),
    }
    let kind = if matches!(t, DiagramType::H(_)) { ScalarKind::Golden } else { ScalarKind::Rational };
    let mut g = ExactMatrix::zeros(n, n, kind);
    for (i, d) in diag.into_iter().enumerate() {
        *g.at_mut(i, i) = d;
    }
    for (i, j, v) in chain_edges {
        *g.at_mut(i, j) = v.clone();
        *g.at_mut(j, i) = v;
    }
    g
}

impl RootSystem {
    /// Construct the root system by closing the simple roots under the
    /// simple reflections.  Root ordering is deterministic: positive roots
    /// sorted by height then coordinates, then their negatives.
    pub fn build(t: DiagramType) -> Result<RootSystem> {
        let t = t.validate()?;
        if let DiagramType::G2(n) = t {
            return Ok(RootSystem {
                diagram: t,
                realization: Realization::Dihedral(DihedralSystem { gonality: n }),
                w0_cache: std::sync::OnceLock::new(),
                sigma_cache: std::sync::Mutex::new(FxHashMap::default()),
            });
        }
        let n = t.rank();
        let gram = gram_matrix(t);
        let kind = gram.at(0, 0).kind();

        let inner_with_simple = |v: &ExactVector, i: usize| -> Scalar {
            let mut acc = Scalar::zero(kind);
            for j in 0..n {
                if !v.0[j].is_zero() {
                    acc = acc.add(&v.0[j].mul(gram.at(j, i)));
                }
            }
            acc
        };
        let reflect_simple = |v: &ExactVector, i: usize| -> ExactVector {
            let c = inner_with_simple(v, i).mul(&Scalar::from_int(2)).div(gram.at(i, i));
            let mut w = v.clone();
            w.0[i] = w.0[i].sub(&c);
            w
        };

        let mut set: BTreeSet<ExactVector> = BTreeSet::new();
        let mut queue: Vec<ExactVector> = Vec::new();
        for i in 0..n {
            let e = ExactVector::unit(n, i, kind);
            set.insert(e.clone());
            queue.push(e);
        }
        while let Some(v) = queue.pop() {
            for i in 0..n {
                let w = reflect_simple(&v, i);
                if set.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        // Fixpoint re-check: one more full pass must add nothing.
        for v in &set {
            for i in 0..n {
                assert!(set.contains(&reflect_simple(v, i)), "closure not a fixpoint");
            }
        }

        let mut positives: Vec<ExactVector> = Vec::new();
        for v in &set {
            let signs: Vec<i32> = v.0.iter().map(Scalar::signum).collect();
            let pos = signs.iter().all(|&s| s >= 0) && signs.iter().any(|&s| s > 0);
            let neg = signs.iter().all(|&s| s <= 0) && signs.iter().any(|&s| s < 0);
            assert!(pos || neg, "root with mixed coordinate signs");
            assert!(set.contains(&v.neg()), "set not closed under negation");
            if pos {
                positives.push(v.clone());
            }
        }
        assert_eq!(positives.len(), t.positive_root_count(), "unexpected root count for {t}");
        positives.sort_by(|u, v| u.coord_sum().cmp(&v.coord_sum()).then_with(|| u.cmp(v)));

        let n_positive = positives.len();
        let mut roots = positives;
        for i in 0..n_positive {
            let neg = roots[i].neg();
            roots.push(neg);
        }
        assert!(roots.len() <= u8::MAX as usize + 1, "too many roots for u8 indices");

        let mut lookup = FxHashMap::default();
        for (i, r) in roots.iter().enumerate() {
            lookup.insert(r.clone(), i as u32);
        }
        let simple_index: Vec<usize> =
            (0..n).map(|i| lookup[&ExactVector::unit(n, i, kind)] as usize).collect();

        let mut simple_perms = Vec::with_capacity(n);
        for i in 0..n {
            let perm: Vec<u8> = roots
                .iter()
                .map(|r| lookup[&reflect_simple(r, i)] as u8)
                .collect();
            simple_perms.push(perm);
        }

        let mut bonds = vec![vec![2usize; n]; n];
        for (i, row) in bonds.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = if i == j {
                    1
                } else {
                    bond_order(gram.at(i, j), gram.at(i, i), gram.at(j, j))
                        .expect("simple roots of a valid type")
                };
            }
        }

        Ok(RootSystem {
            diagram: t,
            realization: Realization::Vector(VectorSystem {
                kind,
                gram,
                roots,
                n_positive,
                simple_index,
                lookup,
                simple_perms,
                bonds,
            }),
            w0_cache: std::sync::OnceLock::new(),
            sigma_cache: std::sync::Mutex::new(FxHashMap::default()),
        })
    }

    pub fn diagram(&self) -> DiagramType {
        self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn is_dihedral(&self) -> bool {
        matches!(self.realization, Realization::Dihedral(_))
    }

    pub(crate) fn vector(&self) -> &VectorSystem {
        match &self.realization {
            Realization::Vector(v) => v,
            Realization::Dihedral(_) => {
                panic!("dihedral systems store roots symbolically; no vector data")
            }
        }
    }

    pub(crate) fn try_vector(&self) -> Result<&VectorSystem> {
        match &self.realization {
            Realization::Vector(v) => Ok(v),
            Realization::Dihedral(_) => Err(Error::Precondition(
                "operation needs a vector-realized root system".to_string(),
            )),
        }
    }

    pub fn scalar_kind(&self) -> ScalarKind {
        match &self.realization {
            Realization::Vector(v) => v.kind,
            Realization::Dihedral(_) => ScalarKind::Rational,
        }
    }

    pub fn n_roots(&self) -> usize {
        match &self.realization {
            Realization::Vector(v) => v.roots.len(),
            Realization::Dihedral(d) => 2 * d.gonality,
        }
    }

    pub fn n_positive(&self) -> usize {
        self.n_roots() / 2
    }

    pub fn is_positive_root(&self, idx: usize) -> bool {
        idx < self.n_positive()
    }

    /// Index of `-α` for root index `idx`.
    pub fn neg_index(&self, idx: usize) -> usize {
        match &self.realization {
            Realization::Vector(_) => {
                let p = self.n_positive();
                if idx < p {
                    idx + p
                } else {
                    idx - p
                }
            }
            Realization::Dihedral(d) => (idx + d.gonality) % (2 * d.gonality),
        }
    }

    /// The positive representative of `±α`.
    pub fn positive_index(&self, idx: usize) -> usize {
        if self.is_positive_root(idx) {
            idx
        } else {
            self.neg_index(idx)
        }
    }

    pub fn root(&self, idx: usize) -> &ExactVector {
        &self.vector().roots[idx]
    }

    pub fn root_index(&self, v: &ExactVector) -> Option<usize> {
        self.vector().lookup.get(v).map(|&i| i as usize)
    }

    pub fn simple_root_index(&self, node0: usize) -> usize {
        match &self.realization {
            Realization::Vector(v) => v.simple_index[node0],
            // Dihedral simple roots sit at angle indices 0 and n-1.
            Realization::Dihedral(d) => {
                if node0 == 0 {
                    0
                } else {
                    d.gonality - 1
                }
            }
        }
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.vector().gram
    }

    /// Exact inner product of two coordinate vectors.
    pub fn inner(&self, u: &ExactVector, v: &ExactVector) -> Scalar {
        let g = self.gram();
        let gu = g.apply(u);
        let kind = self.scalar_kind();
        let mut acc = Scalar::zero(kind);
        for i in 0..v.len() {
            acc = acc.add(&gu.0[i].mul(&v.0[i]));
        }
        acc
    }

    /// Reflection of `v` in the hyperplane orthogonal to the root `idx`:
    /// `v − (2⟨v,α⟩/⟨α,α⟩)·α`.
    pub fn reflect(&self, v: &ExactVector, root_idx: usize) -> ExactVector {
        let alpha = self.root(root_idx).clone();
        self.reflect_in(v, &alpha)
    }

    /// Reflection through an arbitrary nonzero mirror vector.
    pub fn reflect_in(&self, v: &ExactVector, mirror: &ExactVector) -> ExactVector {
        let num = self.inner(v, mirror).mul(&Scalar::from_int(2));
        let den = self.inner(mirror, mirror);
        v.sub(&mirror.scale(&num.div(&den)))
    }

    /// Coxeter bond order between simple nodes (1-based); 2 means no edge.
    pub fn bond(&self, node_i: usize, node_j: usize) -> usize {
        match &self.realization {
            Realization::Vector(v) => v.bonds[node_i - 1][node_j - 1],
            Realization::Dihedral(d) => {
                if node_i == node_j {
                    1
                } else {
                    d.gonality
                }
            }
        }
    }

    pub fn nodes_adjacent(&self, node_i: usize, node_j: usize) -> bool {
        node_i != node_j && self.bond(node_i, node_j) >= 3
    }

    pub fn root_len2(&self, idx: usize) -> Scalar {
        let r = self.root(idx).clone();
        self.inner(&r, &r)
    }

    /// Squared lengths occurring among the roots, sorted ascending.
    pub fn length_classes(&self) -> Vec<Scalar> {
        let v = self.vector();
        let mut ls: Vec<Scalar> = Vec::new();
        for i in 0..v.n_positive {
            let l = self.root_len2(i);
            if !ls.contains(&l) {
                ls.push(l);
            }
        }
        ls.sort();
        ls
    }

    /// Exactly the roots lying in the span of the given vectors.
    pub fn subsystem_in_subspace(&self, spanning: &[ExactVector]) -> Vec<usize> {
        let v = self.vector();
        let ech = Echelon::from_vectors(self.rank(), v.kind, spanning.iter());
        (0..v.roots.len()).filter(|&i| ech.contains(&v.roots[i])).collect()
    }

    /// Connected components of the subdiagram spanned by `nodes`.
    pub fn subdiagram_components(&self, nodes: NodeSet) -> Vec<NodeSet> {
        let mut remaining: Vec<usize> = nodes.iter().collect();
        let mut comps = Vec::new();
        while let Some(seed) = remaining.first().copied() {
            let mut comp = vec![seed];
            let mut frontier = vec![seed];
            remaining.retain(|&x| x != seed);
            while let Some(x) = frontier.pop() {
                let adj: Vec<usize> =
                    remaining.iter().copied().filter(|&y| self.nodes_adjacent(x, y)).collect();
                for y in adj {
                    remaining.retain(|&z| z != y);
                    comp.push(y);
                    frontier.push(y);
                }
            }
            comp.sort_unstable();
            comps.push(NodeSet::from_nodes(&comp, self.rank()).unwrap());
        }
        comps
    }

    /// Sum of the positive roots, the regular vector steering greedy descent.
    pub fn rho(&self) -> ExactVector {
        let v = self.vector();
        let mut acc = ExactVector::zeros(self.rank(), v.kind);
        for i in 0..v.n_positive {
            acc = acc.add(&v.roots[i]);
        }
        acc
    }
}

/// Bond order from `⟨a,b⟩² / (⟨a,a⟩⟨b,b⟩)`: the value `cos²(π/m)` determines
/// `m ∈ {2,3,4,6,5}` for the ratios 0, 1/4, 1/2, 3/4 and (1+φ)/4.
pub fn bond_order(inner: &Scalar, len2_a: &Scalar, len2_b: &Scalar) -> Option<usize> {
    let ratio = inner.mul(inner).div(&len2_a.mul(len2_b));
    if ratio.is_zero() {
        Some(2)
    } else if ratio == Scalar::ratio(1, 4) {
        Some(3)
    } else if ratio == Scalar::ratio(1, 2) {
        Some(4)
    } else if ratio == Scalar::ratio(3, 4) {
        Some(6)
    } else if ratio == Scalar::golden_ratio(1, 4, 1, 4) {
        Some(5)
    } else {
        None
    }
}
