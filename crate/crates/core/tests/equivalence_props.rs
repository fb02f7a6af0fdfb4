mod common;

use common::{from_roots, root_strategy};
use cycres::equivalence::{count_generic, count_real_generic, equivalent_family, real_equivalent_family};
use cycres::number::{rat, Rational};
use cycres::poly::has_root_of_unity;
use cycres::resultant::{abs_sequence, sequence};
use cycres::Poly;
use num_traits::One;
use proptest::prelude::*;

/// Distinct roots, none a product-inverse of another.
fn generic_roots(max: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(root_strategy(), 1..=max).prop_filter("generic roots", |rs| {
        rs.iter().enumerate().all(|(i, a)| {
            rs.iter().skip(i + 1).all(|b| a != b && (a * b) != Rational::one())
                && (a * a) != Rational::one()
        })
    })
}

/// Real root `r` times distinct conjugate pairs `(x − a)² + b²`.
fn mostly_complex() -> impl Strategy<Value = Poly> {
    (
        root_strategy(),
        proptest::collection::vec((-4i64..=4, 1i64..=4), 1..=2),
    )
        .prop_filter("distinct pairs", |(_, pairs)| pairs.len() < 2 || pairs[0] != pairs[1])
        .prop_map(|(r, pairs)| {
            let mut f = from_roots(&Rational::one(), &[r]);
            for (a, b) in pairs {
                f = f * Poly::from_ints(&[a * a + b * b, -2 * a, 1]);
            }
            f
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn family_members_share_sequences(lead in 1i64..=4, roots in generic_roots(4)) {
        let g = from_roots(&rat(lead, 1), &roots);
        let fam = equivalent_family(&g, 0, 10).unwrap();
        let base = sequence(&g, 10).unwrap();
        for f in fam.polys() {
            prop_assert_eq!(&sequence(&f, 10).unwrap().values, &base.values, "{}", f);
        }
        prop_assert_eq!(fam.members.len() as u64, count_generic(roots.len() as u32).unwrap());
        prop_assert!(fam.float_only.is_empty());
    }

    #[test]
    fn family_is_symmetric(roots in generic_roots(3)) {
        let g = from_roots(&Rational::one(), &roots);
        for f in equivalent_family(&g, 0, 8).unwrap().polys() {
            let back = equivalent_family(&f, 0, 8).unwrap().polys();
            prop_assert!(back.contains(&g), "{} not in family of {}", g, f);
        }
    }

    #[test]
    fn monic_filter(roots in generic_roots(4).prop_filter("integer roots", |rs| rs.iter().all(|r| r.is_integer()))) {
        let g = from_roots(&Rational::one(), &roots);
        let fam = equivalent_family(&g, 0, 8).unwrap();
        let monic: Vec<Poly> = fam.polys().into_iter().filter(Poly::is_monic).collect();
        prop_assert_eq!(monic, vec![g]);
    }

    #[test]
    fn real_family_count(g in mostly_complex()) {
        prop_assume!(!has_root_of_unity(&g, 64));
        let fam = real_equivalent_family(&g, 10).unwrap();
        let d = g.degree().unwrap() as u32;
        let base = abs_sequence(&g, 10).unwrap();
        for f in fam.polys() {
            prop_assert!(f.is_real());
            prop_assert_eq!(&abs_sequence(&f, 10).unwrap().values, &base.values);
        }
        prop_assert_eq!(fam.members.len() as u64, count_real_generic(d).unwrap(), "{}", g);
    }
}
