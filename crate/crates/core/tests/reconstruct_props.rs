mod common;

use common::{monic_int_poly, q};
use cycres::poly::has_root_of_unity;
use cycres::reconstruct::{
    invert_closed, invert_groebner, invert_newton, linear_coefficients, reconstruct, sample_monic, Method, NewtonOptions,
    NewtonOutcome, ReconstructOptions, Shape,
};
use cycres::resultant::{abs_sequence, sequence};
use cycres::{Error, Poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn admissible(f: &Poly) -> bool {
    !has_root_of_unity(f, 64)
}

fn reciprocal_sextic(a: [i64; 3]) -> Poly {
    Poly::from_ints(&[1, a[0], a[1], a[2], a[1], a[0], 1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_round_trip(f in (1usize..=3).prop_flat_map(|d| monic_int_poly(d, 9))) {
        prop_assume!(admissible(&f));
        let d = f.degree().unwrap();
        let values = sequence(&f, d + 1).unwrap();
        prop_assert_eq!(invert_closed(&values, d, Shape::Monic).unwrap(), f);
    }

    #[test]
    fn groebner_round_trip_low_degree(f in (1usize..=2).prop_flat_map(|d| monic_int_poly(d, 9))) {
        prop_assume!(admissible(&f));
        let d = f.degree().unwrap();
        let values = sequence(&f, d + 1).unwrap();
        prop_assert_eq!(invert_groebner(&values, d, true, 1_000_000).unwrap(), vec![f]);
    }

    #[test]
    fn linear_closed_form_general(a0 in (-20i64..=20).prop_filter("nonzero", |a| *a != 0), a1 in -20i64..=20) {
        let f = Poly::from_ints(&[a1, a0]);
        prop_assume!(admissible(&f));
        let s = sequence(&f, 2).unwrap();
        let (b0, b1) = linear_coefficients(&s.values[0], &s.values[1]).unwrap();
        prop_assert_eq!((b0, b1), (q(a0), q(a1)));
    }

    #[test]
    fn abs_input_recovers_the_constant_sign_solution(f in (1usize..=2).prop_flat_map(|d| monic_int_poly(d, 6))) {
        prop_assume!(admissible(&f));
        let d = f.degree().unwrap();
        let values = abs_sequence(&f, d + 2).unwrap();
        let r = reconstruct(&values, d, Shape::Monic, Method::Auto, &ReconstructOptions::default()).unwrap();
        let mut all: Vec<Poly> = r.polynomials.clone();
        all.extend(r.alternatives.iter().map(|(_, g)| g.clone()));
        prop_assert!(all.contains(&f), "{f} not among {all:?}");
        for g in &all {
            prop_assert_eq!(&abs_sequence(g, d + 2).unwrap(), &values);
        }
    }
}

#[test]
fn groebner_round_trip_cubic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let (f, _) = sample_monic(&mut rng, 3);
        let values = sequence(&f, 4).unwrap();
        assert_eq!(invert_groebner(&values, 3, true, 1_000_000).unwrap(), vec![f]);
    }
}

#[test]
fn methods_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let opts = ReconstructOptions::default();
    for d in 1..=3 {
        for _ in 0..10 {
            let (f, _) = sample_monic(&mut rng, d);
            let values = sequence(&f, d + 1).unwrap();
            let closed = reconstruct(&values, d, Shape::Monic, Method::Closed, &opts).unwrap();
            let groebner = reconstruct(&values, d, Shape::Monic, Method::Groebner, &opts).unwrap();
            assert_eq!(closed.polynomials, groebner.polynomials, "{f}");
        }
    }
    // Newton converges to the same exact polynomial on small quadratics.
    let nopts = NewtonOptions {
        restarts: 32,
        ..NewtonOptions::default()
    };
    for (a1, a0) in [(-5, 6), (3, -7), (-1, -1), (4, 2)] {
        let f = Poly::from_ints(&[a0, a1, 1]);
        let values = sequence(&f, 3).unwrap();
        match invert_newton(&values, 2, &nopts).unwrap() {
            NewtonOutcome::Verified { polynomial } => assert_eq!(polynomial, f),
            other => panic!("{f}: {other:?}"),
        }
    }
}

#[test]
fn reciprocal_sextic_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut recovered = 0;
    let mut degenerate = 0;
    while recovered < 25 {
        let f = reciprocal_sextic([rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9)]);
        if !admissible(&f) {
            continue;
        }
        let values = sequence(&f, 4).unwrap();
        match invert_closed(&values, 6, Shape::MonicReciprocal) {
            Ok(g) => {
                assert_eq!(g, f);
                recovered += 1;
            }
            Err(Error::DegenerateDenominator(name)) if name == "Q" => degenerate += 1,
            Err(e) => panic!("{f}: {e}"),
        }
    }
    assert!(degenerate < 25);
}

#[test]
fn reciprocal_sextic_rejects_vanishing_q() {
    let values = cycres::resultant::ResultantSequence::from_ints(&[16, 1, 9, 1]);
    assert!(matches!(
        invert_closed(&values, 6, Shape::MonicReciprocal),
        Err(Error::DegenerateDenominator(name)) if name == "Q"
    ));
}
