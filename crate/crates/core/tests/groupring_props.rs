mod common;

use common::gr;
use cycres::groupring::{
    graded_product, laurent_embed, match_factorizations, phi_value, separating_hom, GroupRingElement, MatchOutcome,
};
use cycres::GaussianRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_element(g: &cycres::groupring::FgAbelianGroup, rng: &mut ChaCha8Rng, terms: usize) -> GroupRingElement {
    GroupRingElement::from_terms(
        g,
        (0..terms).map(|_| (gr::element(g, rng), GaussianRational::from_int(rng.gen_range(-4..=4)))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn match_iff_equal_expansion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gr::group();
        let left = gr::product(&g, &mut rng, 4);
        let right = if rng.gen_bool(0.5) {
            gr::rewrite(&g, &left, &mut rng)
        } else {
            gr::perturb(&g, &left, &mut rng)
        };
        let equal = left.expand(&g) == right.expand(&g);
        match match_factorizations(&g, &left, &right).unwrap() {
            MatchOutcome::Matched(m) => {
                prop_assert!(equal);
                prop_assert_eq!(m.rebuild_left(&g, &left, &right).expand(&g), left.expand(&g));
                // η: (−1)^{|F|} s^{Σ_F g_i}, and ∏(1 − s^{g_i}) = η ∏(1 − s^{h_π(i)})
                let diffs: Vec<_> = left.factors.iter().map(|(u, v)| g.sub(v, u)).collect();
                let flips = m.flipped.iter().filter(|&&f| f).count();
                prop_assert_eq!(m.eta_coeff, if flips % 2 == 0 { 1 } else { -1 });
                let sum = g.sum(diffs.iter().zip(&m.flipped).filter(|(_, &f)| f).map(|(d, _)| d));
                prop_assert_eq!(&m.eta_elt, &sum);
                let one_minus = |d: &cycres::groupring::GroupElement| GroupRingElement::binomial(&g, &g.identity(), d);
                let lhs = diffs.iter().fold(GroupRingElement::one(&g), |acc, d| acc.mul(&one_minus(d)));
                let rhs = right
                    .factors
                    .iter()
                    .map(|(x, y)| g.sub(y, x))
                    .fold(GroupRingElement::monomial(&g, GaussianRational::from_int(m.eta_coeff as i64), m.eta_elt.clone()), |acc, h| acc.mul(&one_minus(&h)));
                prop_assert_eq!(lhs, rhs);
            }
            MatchOutcome::Mismatch(_) => prop_assert!(!equal),
        }
    }

    #[test]
    fn separating_hom_is_nonzero(seed in any::<u64>(), k in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gr::group();
        let mut elems = Vec::new();
        while elems.len() < k {
            let a = gr::element(&g, &mut rng);
            if g.infinite_order(&a) {
                elems.push(a);
            }
        }
        let phi = separating_hom(&g, &elems).unwrap();
        for a in &elems {
            prop_assert_ne!(phi_value(&phi, a), 0);
        }
    }

    #[test]
    fn laurent_embedding_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gr::group();
        let x = random_element(&g, &mut rng, 4);
        let y = random_element(&g, &mut rng, 4);
        let phi = vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
        let lhs = laurent_embed(&x.mul(&y), &phi).unwrap();
        let rhs = graded_product(&g, &laurent_embed(&x, &phi).unwrap(), &laurent_embed(&y, &phi).unwrap());
        let mut lhs = lhs;
        lhs.retain(|_, v| !v.is_zero());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn binomial_is_not_a_zero_divisor(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gr::group();
        let tau = loop {
            let t = random_element(&g, &mut rng, 3);
            if !t.is_zero() {
                break t;
            }
        };
        let gen = loop {
            let a = gr::element(&g, &mut rng);
            if g.infinite_order(&a) {
                break a;
            }
        };
        let alpha = GaussianRational::from_int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let factor = GroupRingElement::one(&g).sub(&GroupRingElement::monomial(&g, alpha, gen));
        prop_assert!(!factor.mul(&tau).is_zero());
    }
}

#[test]
fn oracle_sampler_hits_both_outcomes() {
    let g = gr::group();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut matched, mut mismatched) = (0, 0);
    for _ in 0..200 {
        let left = gr::product(&g, &mut rng, 4);
        let right = if rng.gen_bool(0.5) {
            gr::rewrite(&g, &left, &mut rng)
        } else {
            gr::perturb(&g, &left, &mut rng)
        };
        let equal = left.expand(&g) == right.expand(&g);
        match match_factorizations(&g, &left, &right).unwrap() {
            MatchOutcome::Matched(_) => {
                assert!(equal);
                matched += 1;
            }
            MatchOutcome::Mismatch(_) => {
                assert!(!equal);
                mismatched += 1;
            }
        }
    }
    assert!(matched >= 50 && mismatched >= 50, "{matched} matched, {mismatched} mismatched");
}
