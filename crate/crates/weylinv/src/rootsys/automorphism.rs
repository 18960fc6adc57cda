//! Diagram automorphisms as node permutations.

use super::{Realization, RootSystem};
use crate::error::{Error, Result};

/// A permutation of the simple nodes, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NodePerm(Vec<u8>);

impl NodePerm {
    pub fn identity(rank: usize) -> Self {
        NodePerm((0..rank as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        NodePerm(images)
    }

    /// Build from 1-based (from, to) swaps applied to the identity.
    pub fn from_swaps(rank: usize, swaps: &[(usize, usize)]) -> Self {
        let mut v: Vec<u8> = (0..rank as u8).collect();
        for &(a, b) in swaps {
            v.swap(a - 1, b - 1);
        }
        NodePerm(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, node0: usize) -> usize {
        self.0[node0] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, other: &NodePerm) -> NodePerm {
        NodePerm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Orbits on nodes, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            loop {
                seen[x] = true;
                orbit.push(x);
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

impl std::fmt::Display for NodePerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, &x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}→{}", i + 1, x as usize + 1)?;
        }
        write!(f, "]")
    }
}

impl RootSystem {
    /// Does the node permutation preserve bond labels and root lengths?
    pub fn is_diagram_automorphism(&self, p: &NodePerm) -> bool {
        let n = self.rank();
        if p.rank() != n {
            return false;
        }
        if let Realization::Dihedral(_) = self.realization {
            // Abstract dihedral roots share one length, so both node
            // permutations are automorphisms.
            return true;
        }
        let len = |i: usize| self.root_len2(self.simple_root_index(i));
        (0..n).all(|i| {
            len(i) == len(p.apply(i))
                && (0..i).all(|j| {
                    self.bond(i + 1, j + 1) == self.bond(p.apply(i) + 1, p.apply(j) + 1)
                })
        })
    }

    /// All graph automorphisms preserving bond labels and root lengths.
    pub fn diagram_automorphisms(&self) -> Vec<NodePerm> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut perm: Vec<u8> = (0..n as u8).collect();
        permute(&mut perm, 0, &mut |p| {
            let candidate = NodePerm(p.to_vec());
            if self.is_diagram_automorphism(&candidate) {
                out.push(candidate);
            }
        });
        out.sort_by_key(|p| p.0.clone());
        out
    }

    /// Extend a diagram automorphism linearly to a permutation of the
    /// roots; cached per automorphism.
    pub fn node_perm_to_root_perm(&self, sigma: &NodePerm) -> Result<std::sync::Arc<[u8]>> {
        if let Some(hit) = self.sigma_cache.lock().unwrap().get(sigma) {
            return Ok(hit.clone());
        }
        let v = self.try_vector()?;
        if !self.is_diagram_automorphism(sigma) {
            return Err(Error::NotAnAutomorphism(format!("{sigma}")));
        }
        let n = self.rank();
        let mut out = Vec::with_capacity(v.roots.len());
        for r in &v.roots {
            let mut image = crate::algebra::ExactVector::zeros(n, v.kind);
            for i in 0..n {
                image.0[sigma.apply(i)] = r.0[i].clone();
            }
            let idx = self
                .root_index(&image)
                .ok_or_else(|| Error::NotAnAutomorphism(format!("{sigma}")))?;
            out.push(idx as u8);
        }
        let arc: std::sync::Arc<[u8]> = out.into();
        self.sigma_cache.lock().unwrap().insert(sigma.clone(), arc.clone());
        Ok(arc)
    }
}

fn permute(v: &mut [u8], k: usize, f: &mut impl FnMut(&[u8])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}
