//! Randomized properties over the combinatorial kernel.

use proptest::prelude::*;

use csh::csf::{chromatic_symmetric_function, csf_to_schur, evaluate_at_k_colors, schur_to_monomial};
use csh::graph::Graph;
use csh::partition::Partition;
use csh::tabloid::enumerate_tabloids;

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..6, 0..6)
        .prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        })
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2u32..=5).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn partition_display_round_trips(p in arb_partition()) {
        let text = p.to_string();
        let back: Partition = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn exponent_form_round_trips(p in arb_partition()) {
        let back: Partition = p.exponent_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn tabloid_action_permutes_the_basis(p in arb_partition(), seed in any::<u64>()) {
        prop_assume!(p.n() <= 6);
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut sigma: Vec<u32> = (1..=p.n()).collect();
        sigma.shuffle(&mut rng);
        let basis = enumerate_tabloids(&p);
        let mut images: Vec<u64> = basis.iter().map(|t| t.apply(&sigma).key()).collect();
        images.sort_unstable();
        let mut keys: Vec<u64> = basis.iter().map(|t| t.key()).collect();
        keys.sort_unstable();
        prop_assert_eq!(images, keys);
    }

    #[test]
    fn csf_basis_change_round_trips(g in arb_graph()) {
        let monomial = chromatic_symmetric_function(&g, 8).unwrap();
        let schur = csf_to_schur(&monomial).unwrap();
        prop_assert_eq!(schur_to_monomial(&schur).unwrap(), monomial);
    }

    #[test]
    fn csf_at_k_colors_is_chromatic_polynomial_nonneg(g in arb_graph(), k in 0u64..5) {
        let monomial = chromatic_symmetric_function(&g, 8).unwrap();
        let value = evaluate_at_k_colors(&monomial, k).unwrap();
        prop_assert!(value >= num_bigint::BigInt::from(0));
    }
}
