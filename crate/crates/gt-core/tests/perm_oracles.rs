//! Brute-force oracle checks for the permutation-group machinery over the
//! corpus of small groups.

mod common;

use common::{brute_force_classes, brute_force_elements, brute_force_subgroups, corpus, WordSampler};
use gt_core::gset::{natural_gset, optimal_perm_rep, right_cosets};
use gt_core::perm::Permutation;

#[test]
fn orders_match_brute_force_closure() {
    for (name, g) in corpus() {
        let expected = brute_force_elements(&g).len() as u128;
        assert_eq!(g.order(), expected, "{name}");
    }
}

#[test]
fn random_generator_words_are_members() {
    let mut sampler = WordSampler::new(7);
    for (name, g) in corpus() {
        for _ in 0..100 {
            let x = sampler.random_word_element(&g, 8);
            assert!(g.contains(&x).unwrap(), "{name}: word evaluation escaped the group");
        }
    }
}

#[test]
fn orbit_sizes_along_chain_multiply_to_order() {
    for (name, g) in corpus() {
        let gs = natural_gset(&g);
        for x in 1..=g.degree() {
            let orbit = gs.orbit(&x).len() as u128;
            let stab = gs.stabilizer(&x).order();
            assert_eq!(orbit * stab, g.order(), "{name} at point {x}");
        }
    }
}

#[test]
fn conjugacy_classes_match_brute_force() {
    for (name, g) in corpus() {
        if g.order() > 200 {
            continue;
        }
        let oracle = brute_force_classes(&g);
        let cc = g.conjugacy_classes(10_000).unwrap();
        assert_eq!(cc.count(), oracle.len(), "{name}: class count");
        let mut oracle_sizes: Vec<usize> = oracle.iter().map(|c| c.len()).collect();
        oracle_sizes.sort_unstable();
        let mut sizes: Vec<usize> = cc.sizes().iter().map(|&s| s as usize).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, oracle_sizes, "{name}: class sizes");
        // representatives pairwise non-conjugate: each lands in a distinct
        // oracle class
        let mut hit = std::collections::BTreeSet::new();
        for class in &cc.classes {
            let pos = oracle
                .iter()
                .position(|o| o.contains(class.rep.images()))
                .unwrap();
            assert!(hit.insert(pos), "{name}: representatives share a class");
        }
        // sizes sum to the order
        let total: u64 = cc.sizes().iter().sum();
        assert_eq!(total as u128, g.order(), "{name}");
    }
}

#[test]
fn subgroup_classes_account_for_every_subgroup() {
    for (name, g) in corpus() {
        if g.order() > 120 {
            continue;
        }
        let oracle = brute_force_subgroups(&g);
        let classes = g.subgroup_classes(2000).unwrap();
        let total: u64 = classes.iter().map(|c| c.class_size).sum();
        assert_eq!(total as usize, oracle.len(), "{name}: total subgroup count");
        // each representative is closed under multiplication and actually a
        // subgroup from the oracle's list
        for class in &classes {
            let elems: std::collections::BTreeSet<Vec<u32>> = brute_force_elements(&class.rep)
                .iter()
                .map(|p| p.images().to_vec())
                .collect();
            assert!(oracle.contains(&elems), "{name}: stray subgroup representative");
        }
    }
}

#[test]
fn optimal_perm_rep_is_minimal_against_the_subgroup_oracle() {
    for (name, g) in corpus() {
        if g.order() > 200 || g.order() == 1 {
            continue;
        }
        let hom = optimal_perm_rep(&g, 2000).unwrap();
        assert!(hom.is_faithful(), "{name}");
        // no subgroup class of smaller index has trivial core
        let classes = g.subgroup_classes(2000).unwrap();
        for class in &classes {
            let index = (g.order() / class.order as u128) as u32;
            if index >= hom.degree {
                continue;
            }
            let core = g.core(&class.rep, 10_000).unwrap();
            assert!(
                core.order() > 1,
                "{name}: subgroup of index {index} beats degree {}",
                hom.degree
            );
        }
    }
}

#[test]
fn coset_actions_have_expected_kernels() {
    for (name, g) in corpus() {
        if g.order() > 200 {
            continue;
        }
        for class in g.subgroup_classes(2000).unwrap() {
            let gs = right_cosets(&g, &class.rep, 10_000).unwrap();
            let hom = gs.action_homomorphism(10_000).unwrap();
            let kernel = g.core(&class.rep, 10_000).unwrap();
            assert_eq!(
                hom.kernel_order(),
                kernel.order(),
                "{name}: kernel is the core of the point stabilizer"
            );
            assert_eq!(
                hom.image_group().order() * hom.kernel_order(),
                g.order(),
                "{name}"
            );
        }
    }
}

#[test]
fn describe_is_stable_on_the_catalog() {
    let expectations = [
        ("trivial", "trivial"),
        ("C2", "C 2"),
        ("C6", "C 6"),
        ("V4", "E 2^2"),
        ("S3", "S 3"),
        ("D8", "D 8"),
        ("D10", "D 10"),
        ("Q8", "Q8"),
        ("A4", "A 4"),
        ("C2xC2xC2", "E 2^3"),
        ("S4", "S 4"),
        ("A5", "A 5"),
        ("SL25", "group of order 120 with abelian invariants []"),
    ];
    let groups: std::collections::BTreeMap<&str, _> = corpus().into_iter().collect();
    for (name, expected) in expectations {
        assert_eq!(groups[name].describe(10_000).unwrap(), expected, "{name}");
    }
}

#[test]
fn preimage_words_round_trip_exhaustively() {
    for (name, g) in corpus() {
        if g.order() > 200 {
            continue;
        }
        for x in g.elements(1000).unwrap() {
            let w = g.preimage_word(x).unwrap();
            let back: Permutation = w.evaluate_perms(g.degree(), g.generators()).unwrap();
            assert_eq!(&back, x, "{name}");
        }
    }
}

#[test]
fn matrix_group_regular_embedding_is_an_isomorphism() {
    use gt_core::matgrp::{reflection_2d, rotation_2d, MatGroup};
    let g = MatGroup::new(vec![reflection_2d(), rotation_2d(5)]).unwrap();
    let elements = g.dimino_elements(100).unwrap();
    let ambient = 20u32;
    let key = |m: &gt_core::matgrp::CycMatrix| -> Vec<String> {
        m.entries().iter().map(|e| e.embed(ambient).format()).collect()
    };
    let mut sorted: Vec<_> = elements.clone();
    sorted.sort_by_key(|m| key(m));
    let index_of = |m: &gt_core::matgrp::CycMatrix| -> usize {
        sorted.iter().position(|x| key(x) == key(m)).unwrap()
    };
    // the right regular embedding of an arbitrary element
    let embed = |m: &gt_core::matgrp::CycMatrix| -> Vec<usize> {
        sorted.iter().map(|x| index_of(&x.mul(m))).collect()
    };
    let mut sampler = WordSampler::new(99);
    for _ in 0..100 {
        let a = &elements[sampler.next() as usize % elements.len()];
        let b = &elements[sampler.next() as usize % elements.len()];
        let pa = embed(a);
        let pb = embed(b);
        let pab = embed(&a.mul(b));
        let composed: Vec<usize> = pa.iter().map(|&x| pb[x]).collect();
        assert_eq!(pab, composed, "products must map to products");
    }
}

#[test]
fn optimal_perm_rep_accepts_pc_groups() {
    let d10 = gt_core::pcgrp::dihedral_pc(10).unwrap();
    let hom = gt_core::gset::optimal_perm_rep_pc(&d10, 2000).unwrap();
    assert_eq!(hom.degree, 5);
    assert!(hom.is_faithful());
}
