//! Folding a root system along a diagram automorphism.
//!
//! An order-2 diagram automorphism σ gives a folded root system in the
//! σ-fixed subspace, with one simple root per σ-orbit of nodes: the sum of
//! the orbit (up to positive scale).  The folded Weyl group embeds into the
//! ambient one by sending the reflection of an orbit's folded root to the
//! longest element of the parabolic subgroup on that orbit, and the image of
//! the embedding is exactly the subgroup fixed under conjugation by σ.

use crate::algebra::{ExactVector, Scalar};
use crate::error::{Error, Result};
use crate::rootsys::{
    bond_order, identify_component, identify_vector_system, DiagramType, NodePerm, NodeSet,
    RootSystem,
};
use crate::weyl::GroupElement;

pub struct Folding<'a> {
    pub ambient: &'a RootSystem,
    pub sigma: NodePerm,
    /// σ-orbits of ambient nodes (0-based), in the Bourbaki order of the
    /// folded diagram: folded node `i` is `orbits[i]`.
    pub orbits: Vec<Vec<usize>>,
    /// The folded system, built canonically for the identified type.
    pub folded: RootSystem,
    /// Folded simple roots as ambient coordinate vectors (orbit sums).
    pub folded_simples: Vec<ExactVector>,
    /// Images of the folded simple reflections: the longest elements of the
    /// orbit parabolics.
    pub gen_images: Vec<GroupElement>,
    /// Ratio between the ambient Gram of the folded simples and the
    /// canonical Gram of the identified type.
    pub gram_scale: Scalar,
}

/// Fold along σ.  σ must be a diagram automorphism of order at most 2; the
/// orbits need not be orthogonal.
pub fn fold<'a>(sys: &'a RootSystem, sigma: &NodePerm) -> Result<Folding<'a>> {
    if !sys.is_diagram_automorphism(sigma) {
        return Err(Error::NotAnAutomorphism(format!("{sigma}")));
    }
    if sigma.order() > 2 {
        return Err(Error::NotAnAutomorphism(format!(
            "{sigma} has order {}, only involutive foldings are supported",
            sigma.order()
        )));
    }
    sys.try_vector()?;
    let rank = sys.rank();
    let kind = sys.scalar_kind();

    let orbits = sigma.orbits();
    let sums: Vec<ExactVector> = orbits
        .iter()
        .map(|orbit| {
            let mut v = ExactVector::zeros(rank, kind);
            for &i in orbit {
                v = v.add(&ExactVector::unit(rank, i, kind));
            }
            v
        })
        .collect();

    // Identify the folded diagram from the orbit sums.
    let ids: Vec<usize> = (0..orbits.len()).collect();
    let bond = |x: usize, y: usize| {
        bond_order(
            &sys.inner(&sums[x], &sums[y]),
            &sys.inner(&sums[x], &sums[x]),
            &sys.inner(&sums[y], &sums[y]),
        )
        .unwrap_or(0)
    };
    let len2 = |x: usize| sys.inner(&sums[x], &sums[x]);
    let (folded_type, order) = identify_component(&ids, &bond, &len2)
        .map_err(|e| Error::FoldedNotFinite(e.to_string()))?;

    let orbits: Vec<Vec<usize>> = order.iter().map(|&i| orbits[i].clone()).collect();
    let folded_simples: Vec<ExactVector> = order.iter().map(|&i| sums[i].clone()).collect();
    let folded = RootSystem::build(folded_type)?;

    // The ambient Gram of the folded simples must be a positive rational
    // multiple of the canonical Gram of the identified type.
    let scale = sys
        .inner(&folded_simples[0], &folded_simples[0])
        .div(folded.gram().at(0, 0));
    if !scale.is_positive() {
        return Err(Error::FoldedNotFinite("folded Gram is not positive".to_string()));
    }
    for i in 0..orbits.len() {
        for j in 0..orbits.len() {
            let ours = sys.inner(&folded_simples[i], &folded_simples[j]);
            let canonical = folded.gram().at(i, j).mul(&scale);
            if ours != canonical {
                return Err(Error::FoldedNotFinite(format!(
                    "folded Gram mismatch at ({i},{j}): {ours} vs {canonical}"
                )));
            }
        }
    }

    // Independent confirmation: close the folded simples under their own
    // reflections and classify the resulting vector system.
    let mut closure: Vec<ExactVector> = Vec::new();
    {
        use std::collections::BTreeSet;
        let mut set: BTreeSet<ExactVector> = BTreeSet::new();
        let mut queue: Vec<ExactVector> = Vec::new();
        for a in &folded_simples {
            if set.insert(a.clone()) {
                queue.push(a.clone());
            }
            if set.insert(a.neg()) {
                queue.push(a.neg());
            }
        }
        while let Some(v) = queue.pop() {
            for a in &folded_simples {
                let w = sys.reflect_in(&v, a);
                if set.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        closure.extend(set);
    }
    if closure.len() != folded.n_roots() {
        return Err(Error::FoldedNotFinite(format!(
            "closure of folded simples has {} vectors, expected {} for {}",
            closure.len(),
            folded.n_roots(),
            folded_type
        )));
    }
    let comps = identify_vector_system(&closure, &|a, b| sys.inner(a, b))
        .map_err(|e| Error::FoldedNotFinite(e.to_string()))?;
    if comps.len() != 1 || comps[0].diagram != folded_type {
        return Err(Error::FoldedNotFinite(format!(
            "closure classifies as {:?}, expected {}",
            comps.iter().map(|c| c.diagram).collect::<Vec<_>>(),
            folded_type
        )));
    }

    let gen_images: Vec<GroupElement> = orbits
        .iter()
        .map(|orbit| {
            let nodes: Vec<usize> = orbit.iter().map(|&i| i + 1).collect();
            sys.longest_parabolic(NodeSet::from_nodes(&nodes, rank)?)
        })
        .collect::<Result<_>>()?;

    // The generator images must satisfy the folded Coxeter relations.
    for i in 0..gen_images.len() {
        for j in 0..gen_images.len() {
            let m = folded.bond(i + 1, j + 1);
            let prod = gen_images[i].compose(&gen_images[j])?;
            let mut p = prod.clone();
            for _ in 1..m {
                p = p.compose(&prod)?;
            }
            assert!(p.is_identity(), "generator images break the ({i},{j}) relation");
        }
    }

    Ok(Folding { ambient: sys, sigma: sigma.clone(), orbits, folded, folded_simples, gen_images, gram_scale: scale })
}

impl<'a> Folding<'a> {
    /// The embedding on words: a word in folded simple reflections
    /// (1-based folded nodes) maps to the product of the orbit-parabolic
    /// longest elements.
    pub fn iota(&self, folded_word: &[usize]) -> Result<GroupElement> {
        let mut acc = GroupElement::identity(self.ambient);
        for &i in folded_word {
            if i == 0 || i > self.gen_images.len() {
                return Err(Error::NodeOutOfRange { node: i, rank: self.gen_images.len() });
            }
            acc = acc.compose(&self.gen_images[i - 1])?;
        }
        Ok(acc)
    }

    /// Image of a folded group element, via a word reconstructed for it.
    pub fn iota_element(&self, w: &GroupElement) -> Result<GroupElement> {
        let word = self.folded.word_of(w)?;
        self.iota(&word)
    }

    /// The folded subdiagram π(I): one node per orbit meeting I.
    pub fn folded_subdiagram(&self, nodes: NodeSet) -> Result<NodeSet> {
        if !nodes.is_invariant_under(&self.sigma) {
            return Err(Error::Precondition(format!("{nodes} is not σ-invariant")));
        }
        let mut out = NodeSet::empty();
        for (fi, orbit) in self.orbits.iter().enumerate() {
            if orbit.iter().any(|&i| nodes.contains(i + 1)) {
                out.insert(fi + 1);
            }
        }
        Ok(out)
    }

    /// Preimage π⁻¹(J): the union of the orbits named by folded nodes.
    pub fn unfold_subdiagram(&self, folded_nodes: NodeSet) -> NodeSet {
        let mut out = NodeSet::empty();
        for fi in folded_nodes.iter() {
            for &i in &self.orbits[fi - 1] {
                out.insert(i + 1);
            }
        }
        out
    }

    /// Does σ restrict to `−w_I` on I?  This is the hypothesis under which
    /// `ι(w_{I^σ}) = w_I`.
    pub fn sigma_agrees_with_neg_wi(&self, nodes: NodeSet) -> Result<bool> {
        if !nodes.is_invariant_under(&self.sigma) {
            return Ok(false);
        }
        let w = self.ambient.longest_parabolic(nodes)?;
        for n in nodes.iter() {
            let img =
                self.ambient.neg_index(w.apply(self.ambient.simple_root_index(n - 1)));
            let expected = self.ambient.simple_root_index(self.sigma.apply(n - 1));
            if img != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl RootSystem {
    /// Reconstruct a reduced word for `w` by stripping descents; the result
    /// satisfies `word_eval(word) == w`.
    pub fn word_of(&self, w: &GroupElement) -> Result<Vec<usize>> {
        let mut v = w.clone();
        let mut suffix: Vec<usize> = Vec::new();
        while !v.is_identity() {
            let descent = (0..self.rank()).find(|&i| {
                !self.is_positive_root(v.apply(self.simple_root_index(i)))
            });
            let Some(i) = descent else {
                return Err(Error::Precondition(
                    "element has no descent yet is not the identity".to_string(),
                ));
            };
            v = v.compose(&GroupElement::simple_reflection(self, i))?;
            suffix.push(i + 1);
        }
        suffix.reverse();
        Ok(suffix)
    }

    /// Is `w` in the standard parabolic subgroup on `I`?  Holds exactly when
    /// every inversion of `w` has support inside I.
    pub fn in_parabolic(&self, w: &GroupElement, nodes: NodeSet) -> bool {
        match &self.realization {
            crate::rootsys::Realization::Vector(_) => {
                (0..self.n_positive()).all(|p| {
                    if self.is_positive_root(w.apply(p)) {
                        return true;
                    }
                    let root = self.root(p);
                    (0..self.rank())
                        .all(|i| root.0[i].is_zero() || nodes.contains(i + 1))
                })
            }
            crate::rootsys::Realization::Dihedral(_) => {
                // Parabolics are {id}, {id,s1}, {id,s2} or the whole group.
                if w.is_identity() {
                    return true;
                }
                match (nodes.contains(1), nodes.contains(2)) {
                    (true, true) => true,
                    (false, false) => false,
                    (only1, _) => {
                        let i = if only1 { 0 } else { 1 };
                        *w == GroupElement::simple_reflection(self, i)
                    }
                }
            }
        }
    }

    /// The automorphism the `fold` command uses when none is given: `−w₀`
    /// when it acts nontrivially on the diagram, else the D-type fork swap.
    pub fn default_fold_automorphism(&self) -> Result<NodePerm> {
        let neg_w0 = self.neg_w0_node_permutation(&self.longest_element())?;
        if !neg_w0.is_identity() {
            return Ok(neg_w0);
        }
        if let DiagramType::D(n) = self.diagram() {
            return Ok(NodePerm::from_swaps(n, &[(n - 1, n)]));
        }
        Err(Error::Precondition(format!(
            "{} has no canonical folding automorphism; -w0 acts trivially",
            self.diagram()
        )))
    }
}
