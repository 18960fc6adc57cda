//! Weyl-group element calculus.
//!
//! Elements of vector-realized systems are permutations of the root list,
//! which keeps E7-scale enumeration compact and makes equality, hashing and
//! composition cheap; matrices are derived on demand.  Dihedral elements are
//! stored in closed form as rotations and reflections of the angle indices.

mod conjugacy;
mod subgroup;

pub use conjugacy::{
    negated_mask, orbit_of_mask, Budgets, ConjugacyOutcome, Mode, Witness,
};
pub use subgroup::SubgroupSpec;

use rustc_hash::FxHashSet;

use crate::algebra::{ExactMatrix, ExactVector, Scalar};
use crate::error::{Error, Result};
use crate::rootsys::{DiagramType, NodePerm, NodeSet, Realization, RootSystem};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum ElementData {
    /// Root permutation; entry `i` is the image of root `i`.
    Perm(Box<[u8]>),
    /// Dihedral rotation: root `k ↦ k + 2t (mod 2n)`.
    Rot(usize),
    /// Dihedral reflection: root `k ↦ c − k (mod 2n)` with `c ≡ n (mod 2)`.
    Refl(usize),
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum DihedralShape {
    Rotation(usize),
    Reflection(usize),
}

impl DihedralShape {
    /// Mirror index of a reflection, in `0..n`.
    pub(crate) fn mirror(self, gonality: usize) -> Option<usize> {
        match self {
            DihedralShape::Reflection(c) => {
                Some((((c + gonality) % (2 * gonality)) / 2) % gonality)
            }
            DihedralShape::Rotation(_) => None,
        }
    }
}

/// An element of a Weyl group, tagged with the diagram it acts on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    diagram: DiagramType,
    n_roots: usize,
    data: ElementData,
    is_involution: bool,
    length: usize,
}

impl GroupElement {
    fn new(sys: &RootSystem, data: ElementData) -> Self {
        let (is_involution, length) = element_stats(&data, sys.n_roots());
        GroupElement { diagram: sys.diagram(), n_roots: sys.n_roots(), data, is_involution, length }
    }

    pub(crate) fn from_perm(sys: &RootSystem, perm: Box<[u8]>) -> Self {
        GroupElement::new(sys, ElementData::Perm(perm))
    }

    pub fn identity(sys: &RootSystem) -> Self {
        match &sys.realization {
            Realization::Vector(v) => {
                let perm: Box<[u8]> = (0..v.roots.len() as u16).map(|i| i as u8).collect();
                GroupElement::new(sys, ElementData::Perm(perm))
            }
            Realization::Dihedral(_) => GroupElement::new(sys, ElementData::Rot(0)),
        }
    }

    /// The generating reflection of the given node (0-based).
    pub fn simple_reflection(sys: &RootSystem, node0: usize) -> Self {
        match &sys.realization {
            Realization::Vector(v) => {
                GroupElement::new(sys, ElementData::Perm(v.simple_perms[node0].clone().into()))
            }
            Realization::Dihedral(d) => {
                let n = d.gonality;
                let c = if node0 == 0 { n } else { (3 * n - 2) % (2 * n) };
                GroupElement::new(sys, ElementData::Refl(c))
            }
        }
    }

    pub fn diagram(&self) -> DiagramType {
        self.diagram
    }

    /// Image of a root index.
    pub fn apply(&self, root: usize) -> usize {
        apply_data(&self.data, self.n_roots, root)
    }

    pub fn is_involution(&self) -> bool {
        self.is_involution
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Number of positive roots sent negative.
    pub fn length(&self) -> usize {
        self.length
    }

    pub(crate) fn perm(&self) -> Option<&[u8]> {
        match &self.data {
            ElementData::Perm(p) => Some(p),
            _ => None,
        }
    }

    /// Closed-form view of a dihedral element: `Rotation(t)` or
    /// `Reflection(c)` with mirror index `((c+n) mod 2n)/2 mod n`.
    pub(crate) fn dihedral_shape(&self) -> Option<DihedralShape> {
        match &self.data {
            ElementData::Rot(t) => Some(DihedralShape::Rotation(*t)),
            ElementData::Refl(c) => Some(DihedralShape::Reflection(*c)),
            ElementData::Perm(_) => None,
        }
    }

    fn check_compatible(&self, other: &GroupElement) -> Result<()> {
        if self.diagram == other.diagram && self.n_roots == other.n_roots {
            Ok(())
        } else {
            Err(Error::MismatchedSystems)
        }
    }

    /// Composition acting as maps: `(u·v)(α) = u(v(α))`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_compatible(other)?;
        let n = self.n_roots;
        let half = n / 2;
        let data = match (&self.data, &other.data) {
            (ElementData::Perm(p), ElementData::Perm(q)) => {
                ElementData::Perm(q.iter().map(|&x| p[x as usize]).collect())
            }
            (ElementData::Rot(a), ElementData::Rot(b)) => ElementData::Rot((a + b) % half),
            (ElementData::Rot(a), ElementData::Refl(c)) => ElementData::Refl((c + 2 * a) % n),
            (ElementData::Refl(c), ElementData::Rot(a)) => {
                ElementData::Refl((c + n - (2 * a) % n) % n)
            }
            (ElementData::Refl(c), ElementData::Refl(d)) => {
                ElementData::Rot((((c + n - d) % n) / 2) % half)
            }
            _ => return Err(Error::MismatchedSystems),
        };
        Ok(self.rebuild(data))
    }

    pub fn inverse(&self) -> GroupElement {
        let half = self.n_roots / 2;
        let data = match &self.data {
            ElementData::Perm(p) => {
                let mut inv = vec![0u8; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    inv[x as usize] = i as u8;
                }
                ElementData::Perm(inv.into())
            }
            ElementData::Rot(t) => ElementData::Rot((half - t) % half),
            ElementData::Refl(c) => ElementData::Refl(*c),
        };
        self.rebuild(data)
    }

    fn rebuild(&self, data: ElementData) -> GroupElement {
        let (is_involution, length) = element_stats(&data, self.n_roots);
        GroupElement { diagram: self.diagram, n_roots: self.n_roots, data, is_involution, length }
    }

    /// Conjugate `x·self·x⁻¹`.
    pub fn conjugate_by(&self, x: &GroupElement) -> Result<GroupElement> {
        x.compose(self)?.compose(&x.inverse())
    }
}

fn apply_data(data: &ElementData, n_roots: usize, i: usize) -> usize {
    match data {
        ElementData::Perm(p) => p[i] as usize,
        ElementData::Rot(t) => (i + 2 * t) % n_roots,
        ElementData::Refl(c) => (c + n_roots - i) % n_roots,
    }
}

/// Involution flag and length.  Permutations are scanned; the dihedral
/// closed forms avoid touching the root list, so huge gonalities stay O(1).
fn element_stats(data: &ElementData, n_roots: usize) -> (bool, usize) {
    let n = n_roots / 2;
    match data {
        ElementData::Perm(p) => {
            let mut length = 0;
            let mut is_involution = true;
            for (i, &j) in p.iter().enumerate() {
                if i < n && j as usize >= n {
                    length += 1;
                }
                if p[j as usize] as usize != i {
                    is_involution = false;
                }
            }
            (is_involution, length)
        }
        ElementData::Rot(t) => {
            (*t == 0 || 2 * t == n, (2 * t).min(2 * n - 2 * t))
        }
        ElementData::Refl(c) => (true, if *c >= n { c - n + 1 } else { n - 1 - c }),
    }
}

impl RootSystem {
    /// Evaluate a word in simple reflections (1-based node indices).  The
    /// rightmost letter is applied first, so `word_eval([a,b]) = s_a·s_b`.
    pub fn word_eval(&self, word: &[usize]) -> Result<GroupElement> {
        let rank = self.rank();
        let mut acc = GroupElement::identity(self);
        for &i in word {
            if i == 0 || i > rank {
                return Err(Error::NodeOutOfRange { node: i, rank });
            }
            acc = acc.compose(&GroupElement::simple_reflection(self, i - 1))?;
        }
        Ok(acc)
    }

    /// Matrix of `w` in the simple-root basis: column `i` holds the
    /// coordinates of `w(αᵢ)`.
    pub fn matrix_of(&self, w: &GroupElement) -> Result<ExactMatrix> {
        self.try_vector()?;
        let n = self.rank();
        let cols: Vec<ExactVector> = (0..n)
            .map(|i| self.root(w.apply(self.simple_root_index(i))).clone())
            .collect();
        Ok(ExactMatrix::from_columns(cols))
    }

    /// The longest element: the unique element sending every positive root
    /// negative, found by greedy descent from ρ and cached afterwards.
    pub fn longest_element(&self) -> GroupElement {
        self.longest_element_word().0
    }

    pub fn longest_element_word(&self) -> (GroupElement, Vec<usize>) {
        self.w0_cache
            .get_or_init(|| {
                let full = NodeSet::full(self.rank());
                self.longest_parabolic_word(full).expect("full node set is valid")
            })
            .clone()
    }

    /// Longest element of the parabolic subgroup generated by the nodes of
    /// `I`; fixes the orthogonal complement of span(I) pointwise.
    pub fn longest_parabolic(&self, nodes: NodeSet) -> Result<GroupElement> {
        Ok(self.longest_parabolic_word(nodes)?.0)
    }

    /// As [`RootSystem::longest_parabolic`], also returning a reduced word
    /// (in the convention of [`RootSystem::word_eval`]).
    pub fn longest_parabolic_word(&self, nodes: NodeSet) -> Result<(GroupElement, Vec<usize>)> {
        let rank = self.rank();
        for n in nodes.iter() {
            if n > rank {
                return Err(Error::NodeOutOfRange { node: n, rank });
            }
        }
        if let Realization::Dihedral(_) = self.realization {
            return Ok(self.dihedral_longest_parabolic(nodes));
        }
        let active: Vec<usize> = nodes.iter().map(|n| n - 1).collect();
        let mut x = self.rho();
        let mut word_applied: Vec<usize> = Vec::new();
        'descent: loop {
            for &i in &active {
                let e = self.root(self.simple_root_index(i)).clone();
                if self.inner(&x, &e).is_positive() {
                    x = self.reflect(&x, self.simple_root_index(i));
                    word_applied.push(i + 1);
                    continue 'descent;
                }
            }
            break;
        }
        // The first letter applied acts first, so the word reads reversed.
        let word: Vec<usize> = word_applied.into_iter().rev().collect();
        let w = self.word_eval(&word).expect("descent produced valid indices");
        debug_assert!(w.is_involution());
        if nodes == NodeSet::full(rank) {
            assert_eq!(x, self.rho().neg(), "longest-element descent must land on -ρ");
        }
        Ok((w, word))
    }

    fn dihedral_longest_parabolic(&self, nodes: NodeSet) -> (GroupElement, Vec<usize>) {
        let n = self.n_positive();
        match (nodes.contains(1), nodes.contains(2)) {
            (false, false) => (GroupElement::identity(self), vec![]),
            (true, false) => (GroupElement::simple_reflection(self, 0), vec![1]),
            (false, true) => (GroupElement::simple_reflection(self, 1), vec![2]),
            (true, true) => {
                let word: Vec<usize> =
                    (0..n).map(|k| if k % 2 == 0 { 1 } else { 2 }).collect();
                let w = self.word_eval(&word).expect("dihedral word");
                debug_assert_eq!(w.length(), n);
                (w, word)
            }
        }
    }

    /// Roots sent to their negatives by `w`.
    pub fn negated_roots(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.n_roots()).filter(|&i| w.apply(i) == self.neg_index(i)).collect()
    }

    /// Dimension of the −1-eigenspace of an involution, computed as the rank
    /// of the coordinate matrix of its negated roots and cross-checked
    /// against `(dim V − tr w)/2`.
    pub fn dim_minus(&self, w: &GroupElement) -> Result<usize> {
        if !w.is_involution() {
            return Err(Error::NotAnInvolution);
        }
        match &self.realization {
            Realization::Vector(_) => {
                let negated = self.negated_roots(w);
                let rows: Vec<ExactVector> =
                    negated.iter().map(|&i| self.root(i).clone()).collect();
                let rank = ExactMatrix::from_rows(rows).rank();
                let tr = self.matrix_of(w)?.trace();
                let n = Scalar::from_int(self.rank() as i64);
                assert_eq!(
                    n.sub(&tr),
                    Scalar::from_int(2 * rank as i64),
                    "negated-root rank disagrees with the trace formula"
                );
                Ok(rank)
            }
            Realization::Dihedral(d) => {
                // id ↦ 0, reflections ↦ 1, the π-rotation ↦ 2; closed form
                // so gonality can be large.
                Ok(match w.dihedral_shape().expect("dihedral element") {
                    DihedralShape::Rotation(0) => 0,
                    DihedralShape::Rotation(t) if 2 * t == d.gonality => 2,
                    DihedralShape::Rotation(_) => unreachable!("checked involution"),
                    DihedralShape::Reflection(_) => 1,
                })
            }
        }
    }

    pub fn dim_plus(&self, w: &GroupElement) -> Result<usize> {
        Ok(self.rank() - self.dim_minus(w)?)
    }

    /// Does `w` act as −id?
    pub fn is_minus_one(&self, w: &GroupElement) -> bool {
        (0..self.rank()).all(|i| {
            let s = self.simple_root_index(i);
            w.apply(s) == self.neg_index(s)
        })
    }

    /// The diagram automorphism `i ↦ j` with `−w₀(αᵢ) = αⱼ`.
    pub fn neg_w0_node_permutation(&self, w0: &GroupElement) -> Result<NodePerm> {
        let rank = self.rank();
        let mut images = Vec::with_capacity(rank);
        for i in 0..rank {
            let img = self.neg_index(w0.apply(self.simple_root_index(i)));
            match (0..rank).find(|&j| self.simple_root_index(j) == img) {
                Some(j) => images.push(j as u8),
                None => {
                    return Err(Error::Precondition(format!(
                        "-w0(α{}) is not a simple root; w0 is corrupted",
                        i + 1
                    )))
                }
            }
        }
        Ok(NodePerm::from_images(images))
    }

    /// Conjugate `w` by a diagram automorphism (an isometry that may lie
    /// outside the group itself).
    pub fn conjugate_by_automorphism(
        &self,
        sigma: &NodePerm,
        w: &GroupElement,
    ) -> Result<GroupElement> {
        match &self.realization {
            Realization::Vector(_) => {
                let s = self.node_perm_to_root_perm(sigma)?;
                let mut inv = vec![0u8; s.len()];
                for (i, &x) in s.iter().enumerate() {
                    inv[x as usize] = i as u8;
                }
                let perm: Box<[u8]> =
                    (0..s.len()).map(|i| s[w.apply(inv[i] as usize)]).collect();
                Ok(GroupElement::from_perm(self, perm))
            }
            Realization::Dihedral(d) => {
                if sigma.is_identity() {
                    return Ok(w.clone());
                }
                // The node swap acts on angle indices as k ↦ n−1−k.
                let n = d.gonality;
                let data = match &w.data {
                    ElementData::Rot(t) => ElementData::Rot((n - t) % n),
                    ElementData::Refl(c) => ElementData::Refl((4 * n - 2 - c) % (2 * n)),
                    ElementData::Perm(_) => unreachable!(),
                };
                Ok(w.rebuild(data))
            }
        }
    }

    /// Breadth-first closure of {id} under right multiplication by the given
    /// generators; errors out if more than `cap` elements appear.
    pub fn enumerate_from(
        &self,
        gens: &[GroupElement],
        cap: usize,
    ) -> Result<Vec<GroupElement>> {
        let mut out = Vec::new();
        self.visit_from(gens, cap, |w| out.push(w.clone()))?;
        Ok(out)
    }

    /// The whole group, breadth-first by word length.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<GroupElement>> {
        let gens: Vec<GroupElement> =
            (0..self.rank()).map(|i| GroupElement::simple_reflection(self, i)).collect();
        self.enumerate_from(&gens, cap)
    }

    /// Streaming breadth-first enumeration: `visit` is called exactly once
    /// per element, in deterministic order; returns the element count.
    pub fn visit_from(
        &self,
        gens: &[GroupElement],
        cap: usize,
        mut visit: impl FnMut(&GroupElement),
    ) -> Result<usize> {
        if cap == 0 {
            return Err(Error::CapExceeded { cap });
        }
        match &self.realization {
            Realization::Vector(_) => {
                let gen_perms: Vec<&[u8]> = gens
                    .iter()
                    .map(|g| g.perm().ok_or(Error::MismatchedSystems))
                    .collect::<Result<_>>()?;
                let mut count = 0usize;
                bfs_perms(self, &gen_perms, cap, |perm| {
                    count += 1;
                    visit(&GroupElement::from_perm(self, perm.into()));
                })?;
                Ok(count)
            }
            Realization::Dihedral(_) => {
                // Breadth-first over the closed-form elements.
                let mut seen: FxHashSet<GroupElement> = FxHashSet::default();
                let mut frontier = vec![GroupElement::identity(self)];
                let mut order: Vec<GroupElement> = Vec::new();
                while !frontier.is_empty() {
                    let mut next = Vec::new();
                    for w in frontier {
                        if seen.insert(w.clone()) {
                            if seen.len() > cap {
                                return Err(Error::CapExceeded { cap });
                            }
                            order.push(w.clone());
                            for g in gens {
                                next.push(w.compose(g)?);
                            }
                        }
                    }
                    frontier = next;
                }
                for w in &order {
                    visit(w);
                }
                Ok(order.len())
            }
        }
    }

    /// Elements together with words in the given generators (indices into
    /// `gens`), breadth-first, shortest word first.
    pub fn enumerate_with_words(
        &self,
        gens: &[GroupElement],
        cap: usize,
    ) -> Result<Vec<(GroupElement, Vec<usize>)>> {
        let mut out: Vec<(GroupElement, Vec<usize>)> = vec![(GroupElement::identity(self), vec![])];
        let mut seen: FxHashSet<GroupElement> = out.iter().map(|(w, _)| w.clone()).collect();
        let mut at = 0;
        while at < out.len() {
            let (w, word) = out[at].clone();
            at += 1;
            for (gi, g) in gens.iter().enumerate() {
                let next = w.compose(g)?;
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let mut nw = word.clone();
                    nw.push(gi);
                    out.push((next, nw));
                }
            }
        }
        Ok(out)
    }
}

/// Raw breadth-first search over root permutations.  Elements are keyed by
/// the images of the simple roots, which determine a linear map completely,
/// so the visited set stays small even for E7.
fn bfs_perms(
    sys: &RootSystem,
    gens: &[&[u8]],
    cap: usize,
    mut visit: impl FnMut(&[u8]),
) -> Result<()> {
    let n_roots = sys.n_roots();
    let rank = sys.rank();
    let simple_idx: Vec<usize> = (0..rank).map(|i| sys.simple_root_index(i)).collect();
    let key_of = |perm: &[u8]| -> [u8; 8] {
        let mut key = [0xFFu8; 8];
        for (k, &s) in simple_idx.iter().enumerate() {
            key[k] = perm[s];
        }
        key
    };

    let identity: Box<[u8]> = (0..n_roots).map(|i| i as u8).collect();
    let mut visited: FxHashSet<[u8; 8]> = FxHashSet::default();
    visited.insert(key_of(&identity));
    visit(&identity);
    let mut frontier: Vec<Box<[u8]>> = vec![identity];
    let mut scratch = vec![0u8; n_roots];
    while !frontier.is_empty() {
        let mut next: Vec<Box<[u8]>> = Vec::new();
        for w in &frontier {
            for g in gens {
                for i in 0..n_roots {
                    scratch[i] = w[g[i] as usize];
                }
                let key = key_of(&scratch);
                if visited.insert(key) {
                    if visited.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    visit(&scratch);
                    next.push(scratch.clone().into());
                }
            }
        }
        frontier = next;
    }
    Ok(())
}
