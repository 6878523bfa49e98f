//! Randomized cross-checks on types and ranks not covered by the acceptance
//! suite.

use affine_schubert_core::oracle::{oracle_longest_rep, oracle_maxmin};
use affine_schubert_core::{AffineWeylGroup, CartanType, Facet, Side};
use proptest::prelude::*;

fn groups() -> Vec<AffineWeylGroup> {
    [
        (CartanType::A, 3),
        (CartanType::B, 3),
        (CartanType::C, 3),
        (CartanType::D, 4),
    ]
    .into_iter()
    .map(|(t, m)| AffineWeylGroup::build(t, m).unwrap())
    .collect()
}

fn facet(g: &AffineWeylGroup, mask: u32) -> Facet {
    let nodes: Vec<usize> = (0..=g.rank()).filter(|i| mask >> i & 1 == 1).collect();
    // Drop one node if the mask selects all of them.
    let nodes = if nodes.len() == g.rank() + 1 {
        nodes[1..].to_vec()
    } else {
        nodes
    };
    g.facet(nodes).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn maxmin_agrees_with_exhaustive_search(
        k in 0usize..4,
        word in prop::collection::vec(0usize..5, 0..9),
        lmask in 0u32..32,
        rmask in 0u32..32,
    ) {
        let g = &groups()[k];
        let word: Vec<usize> = word.into_iter().map(|i| i % g.node_count()).collect();
        let w = g.from_word(&word).unwrap();
        let (left, right) = (facet(g, lmask), facet(g, rmask));
        let rep = g.maxmin_rep(&w, &left, &right);
        let (orep, oval) = oracle_maxmin(g, &w, &left, &right);
        prop_assert_eq!(&rep, &orep);
        prop_assert_eq!(g.length(&rep), oval);
        prop_assert_eq!(g.waldspurger_length(&w, &left, &right).unwrap(), oval);
    }

    #[test]
    fn resolutions_are_length_additive(
        k in 0usize..4,
        word in prop::collection::vec(0usize..5, 0..10),
        mask in 0u32..32,
    ) {
        let g = &groups()[k];
        let word: Vec<usize> = word.into_iter().map(|i| i % g.node_count()).collect();
        let f = facet(g, mask);
        let w = g.min_right_rep(&g.from_word(&word).unwrap(), &f);
        let steps = g.resolutive_sequence(&w, &f).unwrap();
        let product = steps.iter().fold(g.identity(), |acc, s| g.multiply(&acc, &s.factor));
        prop_assert_eq!(&product, &w);
        prop_assert_eq!(steps.iter().map(|s| g.length(&s.factor)).sum::<usize>(), g.length(&w));
        prop_assert_eq!(g.bott_samelson_dim(&steps).unwrap(), g.length(&w));
        for s in &steps {
            prop_assert_eq!(&oracle_longest_rep(g, &s.parahoric, &s.intersection).0, &s.factor);
        }
    }

    #[test]
    fn minimal_representatives_have_no_descents_in_the_facet(
        k in 0usize..4,
        word in prop::collection::vec(0usize..5, 0..12),
        mask in 0u32..32,
    ) {
        let g = &groups()[k];
        let word: Vec<usize> = word.into_iter().map(|i| i % g.node_count()).collect();
        let f = facet(g, mask);
        let w = g.from_word(&word).unwrap();
        let (min, rest) = g.right_decompose(&w, &f);
        prop_assert!(g.is_min_rep(&min, &f, Side::Right));
        prop_assert_eq!(g.multiply(&min, &rest), w.clone());
        prop_assert_eq!(g.length(&min) + g.length(&rest), g.length(&w));
    }
}
