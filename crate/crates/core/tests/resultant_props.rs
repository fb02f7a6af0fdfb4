mod common;

use common::{from_roots, oracle_r, qr, rational_poly, rel_close, root_strategy};
use cycres::number::{rat, rational_to_f64, Rational};
use cycres::poly::{has_root_of_unity, parse};
use cycres::resultant::{
    abs_sequence, cyclic_resultant, cyclic_resultant_companion, cyclic_resultant_roots, sequence, sign_data,
};
use cycres::{GaussianRational, Poly};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn no_unity(f: &Poly) -> bool {
    !has_root_of_unity(f, 64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn matches_product_oracle(lead in (1i64..=5, 1i64..=3), roots in proptest::collection::vec(root_strategy(), 1..=4)) {
        let lead = rat(lead.0, lead.1);
        let f = from_roots(&lead, &roots);
        for m in 1..=8 {
            prop_assert_eq!(cyclic_resultant(&f, m).unwrap(), qr(&oracle_r(&lead, &roots, m)), "m = {}", m);
        }
    }

    #[test]
    fn methods_agree(f in (1usize..=6).prop_flat_map(|d| rational_poly(d, 9))) {
        prop_assume!(no_unity(&f));
        for m in 1..=12 {
            let direct = cyclic_resultant(&f, m).unwrap();
            prop_assert_eq!(&cyclic_resultant_companion(&f, m).unwrap(), &direct, "m = {}", m);
            let numeric = cyclic_resultant_roots(&f, m).unwrap();
            let exact = direct.to_complex();
            prop_assert!((numeric - exact).norm() <= 1e-6 * exact.norm().max(1.0), "m = {}: {} vs {}", m, numeric, exact);
        }
    }

    #[test]
    fn multiplicative(f in rational_poly(2, 6), g in rational_poly(3, 6)) {
        let fg = f.clone() * g.clone();
        for m in 1..=10 {
            prop_assert_eq!(
                cyclic_resultant(&fg, m).unwrap(),
                &cyclic_resultant(&f, m).unwrap() * &cyclic_resultant(&g, m).unwrap()
            );
        }
    }

    #[test]
    fn x_shift_law(h in rational_poly(3, 6), l in 0usize..=3) {
        let f = h.shift(l);
        for m in 1..=10 {
            let want = cyclic_resultant(&h, m).unwrap();
            let want = if l % 2 == 1 { -want } else { want };
            prop_assert_eq!(cyclic_resultant(&f, m).unwrap(), want);
        }
    }

    #[test]
    fn sign_law_positive_leading(f in (1usize..=6).prop_flat_map(|d| rational_poly(d, 9))) {
        let f = if f.leading().unwrap().re.is_negative() { -f } else { f };
        prop_assume!(no_unity(&f));
        let sd = sign_data(&f).unwrap();
        let delta = sd.delta;
        for m in 1..=12 {
            let r = cyclic_resultant(&f, m).unwrap().re;
            let expected = sd.epsilon as i64 * (delta as i64).pow(m as u32);
            prop_assert_eq!(r.signum(), Rational::from_integer(expected.into()), "m = {}", m);
        }
    }

    #[test]
    fn sign_law_any_leading(f in (1usize..=6).prop_flat_map(|d| rational_poly(d, 9))) {
        prop_assume!(no_unity(&f));
        let sd = sign_data(&f).unwrap();
        let abs = abs_sequence(&f, 12).unwrap();
        for m in 1..=12 {
            let r = cyclic_resultant(&f, m).unwrap().re;
            prop_assert_eq!(r.signum(), Rational::from_integer(sd.sign_of(m).into()));
            prop_assert_eq!(&r.abs(), &abs.values[m - 1].re);
        }
    }

    #[test]
    fn conjugate_pair_keeps_sign(f in rational_poly(3, 6), a in -5i64..=5, b in 1i64..=5) {
        prop_assume!(no_unity(&f));
        // (x − (a + bi))(x − (a − bi)) = x² − 2a x + a² + b²
        let pair = Poly::from_ints(&[a * a + b * b, -2 * a, 1]);
        prop_assume!(no_unity(&pair));
        let g = f.clone() * pair;
        for m in 1..=10 {
            let s1 = cyclic_resultant(&f, m).unwrap().re.signum();
            let s2 = cyclic_resultant(&g, m).unwrap().re.signum();
            prop_assert_eq!(s1, s2, "m = {}", m);
        }
    }
}

#[test]
fn mersenne_numbers() {
    let s = sequence(&parse("x-2").unwrap(), 30).unwrap();
    for (i, v) in s.values.iter().enumerate() {
        assert_eq!(*v, GaussianRational::from_int((1i64 << (i + 1)) - 1));
    }
    assert!(rel_close(rational_to_f64(&s.values[29].re), 2f64.powi(30) - 1.0, 1e-15));
}

#[test]
fn zero_values_are_returned() {
    let s = sequence(&parse("x^2+1").unwrap(), 4).unwrap();
    assert!(s.values[3].is_zero());
    assert_eq!(s.first_zero(), Some(4));
}
