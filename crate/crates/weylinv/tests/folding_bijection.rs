//! The folding embedding induces a bijection of involution conjugacy
//! classes between the folded group and the σ-fixed subgroup, and the
//! bijection commutes with multiplication by the respective longest
//! elements.

use weylinv::folding::fold;
use weylinv::involutions::{classify, w0_pairing};
use weylinv::rootsys::RootSystem;
use weylinv::weyl::{Budgets, Mode, SubgroupSpec};

fn sys(name: &str) -> RootSystem {
    RootSystem::build(name.parse().unwrap()).unwrap()
}

#[test]
fn iota_matches_classifications_and_pairings() {
    for ambient in ["A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "E6"] {
        let r = sys(ambient);
        let sigma = r.default_fold_automorphism().unwrap();
        let f = fold(&r, &sigma).unwrap();

        let folded_cl =
            classify(&f.folded, &SubgroupSpec::Full, Mode::Exhaustive, &Budgets::default())
                .unwrap();
        let folded_pairing = w0_pairing(&f.folded, &folded_cl).unwrap();

        let spec = SubgroupSpec::SigmaFixed(sigma);
        let ambient_cl = classify(&r, &spec, Mode::Exhaustive, &Budgets::default()).unwrap();
        let ambient_pairing = w0_pairing(&r, &ambient_cl).unwrap();

        assert_eq!(
            folded_cl.classes.len(),
            ambient_cl.classes.len(),
            "{ambient}: class counts differ under folding"
        );

        // Map each folded class through ι and locate its ambient class.
        let image: Vec<usize> = folded_cl
            .classes
            .iter()
            .map(|c| {
                let img = f.iota_element(&c.representative).unwrap();
                assert!(img.is_involution());
                ambient_cl
                    .class_of_element(&r, &img)
                    .unwrap_or_else(|| panic!("{ambient}: ι image lost a class"))
            })
            .collect();

        // Bijection: the map is injective onto all ambient classes.
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ambient_cl.classes.len(), "{ambient}: ι not a class bijection");

        // Multiplication by −1 in the folded group corresponds to
        // multiplication by w0 in the subgroup.
        for (i, &img) in image.iter().enumerate() {
            assert_eq!(
                image[folded_pairing[i]], ambient_pairing[img],
                "{ambient}: pairings do not commute with ι on class {i}"
            );
        }

        // Eigenspace dimensions correspond: dim⁻ of a folded involution is
        // computed in the folded rank, its image's in the ambient rank, and
        // the rank difference is absorbed by the fixed complement.
        for (i, &img) in image.iter().enumerate() {
            let folded_dim = folded_cl.classes[i].dim_minus;
            let ambient_dim = ambient_cl.classes[img].dim_minus;
            assert!(
                ambient_dim >= folded_dim,
                "{ambient}: ι cannot shrink the −1-eigenspace"
            );
        }
    }
}
