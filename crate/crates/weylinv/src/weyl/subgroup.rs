//! Subgroups cut out by a predicate: the full group, the centralizer of the
//! longest element, and the fixed subgroup of a diagram automorphism.

use super::GroupElement;
use crate::error::{Error, Result};
use crate::rootsys::{NodePerm, NodeSet, RootSystem};

/// Which subgroup conjugacy and classification run in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubgroupSpec {
    Full,
    /// Elements commuting with the longest element.
    CentralizerW0,
    /// Elements fixed under conjugation by a diagram automorphism.
    SigmaFixed(NodePerm),
}

impl SubgroupSpec {
    pub fn label(&self) -> String {
        match self {
            SubgroupSpec::Full => "full".to_string(),
            SubgroupSpec::CentralizerW0 => "wo".to_string(),
            SubgroupSpec::SigmaFixed(p) => format!("sigma{p}"),
        }
    }

    /// The node automorphism whose invariant subsets index the candidate
    /// involutions `w_I` of this subgroup.
    pub fn node_automorphism(&self, sys: &RootSystem) -> Result<NodePerm> {
        match self {
            SubgroupSpec::Full => Ok(NodePerm::identity(sys.rank())),
            SubgroupSpec::CentralizerW0 => sys.neg_w0_node_permutation(&sys.longest_element()),
            SubgroupSpec::SigmaFixed(p) => {
                if p.rank() != sys.rank() {
                    return Err(Error::NotAnAutomorphism(format!("{p}")));
                }
                if !sys.is_diagram_automorphism(p) {
                    return Err(Error::NotAnAutomorphism(format!("{p}")));
                }
                Ok(p.clone())
            }
        }
    }
}

impl RootSystem {
    /// Is `w` a member of the subgroup?
    pub fn in_subgroup(&self, w: &GroupElement, spec: &SubgroupSpec) -> Result<bool> {
        match spec {
            SubgroupSpec::Full => Ok(true),
            SubgroupSpec::CentralizerW0 => {
                let w0 = self.longest_element();
                Ok(w.compose(&w0)? == w0.compose(w)?)
            }
            SubgroupSpec::SigmaFixed(sigma) => {
                Ok(self.conjugate_by_automorphism(sigma, w)? == *w)
            }
        }
    }

    /// Generators of the subgroup: the simple reflections when the relevant
    /// automorphism is trivial, otherwise one longest parabolic element per
    /// node orbit.
    pub fn subgroup_generators(&self, spec: &SubgroupSpec) -> Result<Vec<GroupElement>> {
        let sigma = spec.node_automorphism(self)?;
        if sigma.is_identity() {
            return Ok((0..self.rank())
                .map(|i| GroupElement::simple_reflection(self, i))
                .collect());
        }
        sigma
            .orbits()
            .into_iter()
            .map(|orbit| {
                let nodes: Vec<usize> = orbit.iter().map(|&i| i + 1).collect();
                self.longest_parabolic(NodeSet::from_nodes(&nodes, self.rank())?)
            })
            .collect()
    }

    /// Enumerate the subgroup from its generators.
    pub fn enumerate_subgroup(
        &self,
        spec: &SubgroupSpec,
        cap: usize,
    ) -> Result<Vec<GroupElement>> {
        let gens = self.subgroup_generators(spec)?;
        self.enumerate_from(&gens, cap)
    }
}
