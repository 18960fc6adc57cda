//! The parameterized involution families of the classical types.
//!
//! `c_{k,l}` marks `k` alternating nodes from each relevant end of the
//! diagram plus one terminal or central block; the two spin involutions of
//! `D_{2m}` mark alternating nodes ending in one of the fork tips.  Indices
//! satisfy `l ∈ {0..n}` and `k ∈ {0..⌊(n−l)/2⌋}`.

use crate::error::{Error, Result};
use crate::rootsys::{DiagramType, NodeSet};

/// A classical-family involution label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKey {
    /// `c_{k,l}` in A_{2n} (ambient rank 2n).
    AEven { n: usize, k: usize, l: usize },
    /// `c_{k,l}` in A_{2n−1} (ambient rank 2n−1, n ≥ 2).
    AOdd { n: usize, k: usize, l: usize },
    /// `c_{k,l}` in BC_n.
    BC { n: usize, k: usize, l: usize },
    /// `c_{k,l}` in D_{n+1} (ambient rank n+1).
    D { n: usize, k: usize, l: usize },
    /// `c₋` in D_{2m}: alternating odd nodes ending in fork tip 2m−1.
    SpinMinus { m: usize },
    /// `c₊` in D_{2m}: alternating odd nodes, then fork tip 2m.
    SpinPlus { m: usize },
}

impl PatternKey {
    /// The ambient diagram the pattern lives in (C realization for BC).
    pub fn ambient(self) -> DiagramType {
        match self {
            PatternKey::AEven { n, .. } => DiagramType::A(2 * n),
            PatternKey::AOdd { n, .. } => DiagramType::A(2 * n - 1),
            PatternKey::BC { n, .. } => DiagramType::C(n),
            PatternKey::D { n, .. } => DiagramType::D(n + 1),
            PatternKey::SpinMinus { m } | PatternKey::SpinPlus { m } => DiagramType::D(2 * m),
        }
    }

    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            PatternKey::AEven { n, k, l } | PatternKey::BC { n, k, l } | PatternKey::D { n, k, l } => {
                n >= 1 && l <= n && 2 * k + l <= n
            }
            PatternKey::AOdd { n, k, l } => n >= 2 && l <= n && 2 * k + l <= n,
            PatternKey::SpinMinus { m } | PatternKey::SpinPlus { m } => m >= 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Precondition(format!("pattern key out of range: {self:?}")))
        }
    }

    /// The marked node set in the ambient diagram.
    pub fn nodes(self) -> Result<NodeSet> {
        self.validate()?;
        let rank = self.ambient().rank();
        let mut nodes: Vec<usize> = Vec::new();
        match self {
            PatternKey::AEven { n, k, l } => {
                for j in 0..k {
                    nodes.push(2 * j + 1);
                    nodes.push(2 * n - 2 * j);
                }
                nodes.extend(n - l + 1..=n + l);
            }
            PatternKey::AOdd { n, k, l } => {
                for j in 0..k {
                    nodes.push(2 * j + 1);
                    nodes.push(2 * n - 1 - 2 * j);
                }
                if l >= 1 {
                    nodes.extend(n - l + 1..=n + l - 1);
                }
            }
            PatternKey::BC { n, k, l } => {
                for j in 0..k {
                    nodes.push(2 * j + 1);
                }
                nodes.extend(n - l + 1..=n);
            }
            PatternKey::D { n, k, l } => {
                for j in 0..k {
                    nodes.push(2 * j + 1);
                }
                if l >= 1 {
                    nodes.extend(n + 1 - l..=n + 1);
                }
            }
            PatternKey::SpinMinus { m } => {
                for j in 0..m {
                    nodes.push(2 * j + 1);
                }
            }
            PatternKey::SpinPlus { m } => {
                for j in 0..m - 1 {
                    nodes.push(2 * j + 1);
                }
                nodes.push(2 * m);
            }
        }
        NodeSet::from_nodes(&nodes, rank)
    }

    /// Index pair of the class reached by multiplication with the longest
    /// element: `(k, l) ↦ (k, n−2k−l)`.
    pub fn dagger(self) -> Result<PatternKey> {
        self.validate()?;
        let out = match self {
            PatternKey::AEven { n, k, l } => PatternKey::AEven { n, k, l: n - 2 * k - l },
            PatternKey::AOdd { n, k, l } => PatternKey::AOdd { n, k, l: n - 2 * k - l },
            PatternKey::BC { n, k, l } => PatternKey::BC { n, k, l: n - 2 * k - l },
            PatternKey::D { n, k, l } => PatternKey::D { n, k, l: n - 2 * k - l },
            spin => spin,
        };
        out.validate()
    }

    /// All valid `(k, l)` keys for one family parameter `n`.
    pub fn family(ambient: DiagramType) -> Result<Vec<PatternKey>> {
        let keys = |n: usize, mk: &dyn Fn(usize, usize) -> PatternKey| -> Vec<PatternKey> {
            let mut out = Vec::new();
            for l in 0..=n {
                for k in 0..=(n - l) / 2 {
                    out.push(mk(k, l));
                }
            }
            out
        };
        match ambient {
            DiagramType::A(r) if r % 2 == 0 && r >= 2 => {
                let n = r / 2;
                Ok(keys(n, &|k, l| PatternKey::AEven { n, k, l }))
            }
            DiagramType::A(r) if r % 2 == 1 && r >= 3 => {
                let n = r.div_ceil(2);
                Ok(keys(n, &|k, l| PatternKey::AOdd { n, k, l }))
            }
            DiagramType::B(n) | DiagramType::C(n) => Ok(keys(n, &|k, l| PatternKey::BC { n, k, l })),
            DiagramType::D(r) => {
                let n = r - 1;
                let mut out = keys(n, &|k, l| PatternKey::D { n, k, l });
                if r % 2 == 0 {
                    out.push(PatternKey::SpinMinus { m: r / 2 });
                    out.push(PatternKey::SpinPlus { m: r / 2 });
                }
                Ok(out)
            }
            t => Err(Error::NotTabulated(format!("{t} has no classical pattern family"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(s: &str) -> NodeSet {
        s.parse().unwrap()
    }

    #[test]
    fn bc5_examples() {
        assert_eq!(PatternKey::BC { n: 5, k: 1, l: 0 }.nodes().unwrap(), ns("{1}"));
        assert_eq!(PatternKey::BC { n: 5, k: 0, l: 1 }.nodes().unwrap(), ns("{5}"));
        assert_eq!(PatternKey::BC { n: 5, k: 0, l: 4 }.nodes().unwrap(), ns("{2,3,4,5}"));
        assert_eq!(PatternKey::BC { n: 5, k: 1, l: 3 }.nodes().unwrap(), ns("{1,3,4,5}"));
    }

    #[test]
    fn a4_central_block() {
        // A4 = A_{2n} with n = 2: c_{0,1} marks the central two nodes.
        assert_eq!(PatternKey::AEven { n: 2, k: 0, l: 1 }.nodes().unwrap(), ns("{2,3}"));
        assert_eq!(PatternKey::AEven { n: 2, k: 1, l: 0 }.nodes().unwrap(), ns("{1,4}"));
        assert_eq!(PatternKey::AEven { n: 2, k: 0, l: 2 }.nodes().unwrap(), ns("{1,2,3,4}"));
    }

    #[test]
    fn a5_patterns() {
        assert_eq!(PatternKey::AOdd { n: 3, k: 1, l: 1 }.nodes().unwrap(), ns("{1,3,5}"));
        assert_eq!(PatternKey::AOdd { n: 3, k: 1, l: 0 }.nodes().unwrap(), ns("{1,5}"));
        assert_eq!(PatternKey::AOdd { n: 3, k: 0, l: 3 }.nodes().unwrap(), ns("{1,2,3,4,5}"));
    }

    #[test]
    fn d4_spins() {
        assert_eq!(PatternKey::SpinMinus { m: 2 }.nodes().unwrap(), ns("{1,3}"));
        assert_eq!(PatternKey::SpinPlus { m: 2 }.nodes().unwrap(), ns("{1,4}"));
    }

    #[test]
    fn d_family_blocks() {
        assert_eq!(PatternKey::D { n: 4, k: 0, l: 1 }.nodes().unwrap(), ns("{4,5}"));
        assert_eq!(PatternKey::D { n: 4, k: 1, l: 2 }.nodes().unwrap(), ns("{1,3,4,5}"));
        assert_eq!(PatternKey::D { n: 4, k: 0, l: 0 }.nodes().unwrap(), NodeSet::empty());
    }

    #[test]
    fn dagger_is_an_involution_on_valid_keys() {
        for key in PatternKey::family(DiagramType::C(5)).unwrap() {
            let image = key.dagger().unwrap();
            assert_eq!(image.dagger().unwrap(), key);
        }
        // Worked examples: n=5, (0,1) ↦ (0,4); fixed point n=2, (1,0).
        assert_eq!(
            PatternKey::BC { n: 5, k: 0, l: 1 }.dagger().unwrap(),
            PatternKey::BC { n: 5, k: 0, l: 4 }
        );
        assert_eq!(
            PatternKey::BC { n: 2, k: 1, l: 0 }.dagger().unwrap(),
            PatternKey::BC { n: 2, k: 1, l: 0 }
        );
    }

    #[test]
    fn invalid_keys_rejected() {
        assert!(PatternKey::BC { n: 3, k: 2, l: 0 }.validate().is_err());
        assert!(PatternKey::BC { n: 3, k: 0, l: 4 }.validate().is_err());
        assert!(PatternKey::AOdd { n: 1, k: 0, l: 0 }.validate().is_err());
    }

    #[test]
    fn family_counts() {
        // A4 (n=2): (0,0),(1,0),(0,1),(0,2).
        assert_eq!(PatternKey::family(DiagramType::A(4)).unwrap().len(), 4);
        // C5: l=0..5 with k ranges 3+3+2+2+1+1.
        assert_eq!(PatternKey::family(DiagramType::C(5)).unwrap().len(), 12);
        // D4 adds the two spins.
        assert_eq!(PatternKey::family(DiagramType::D(4)).unwrap().len(), 6 + 2);
    }
}
