use proptest::prelude::*;
use symcone::conegeom::{
    facet_matrix, generator_matrix, in_fundamental_cone, membership, membership_fast, ConeSpec,
};
use symcone::coxeter::{enumerate_group, GroupElement, Kind};
use symcone::genfunc::{build_closed_form, build_general, expand_graded, TruncatedSeries};
use symcone::oracle::oracle_series;

fn spec_a(max_n: usize) -> impl Strategy<Value = ConeSpec> {
    (2..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(-3i64..=3, n - 1))
        .prop_map(|mut a| {
            let last = 1 - a.iter().sum::<i64>();
            a.push(last);
            a.sort_unstable();
            let n = a.len();
            ConeSpec::new(Kind::A, n, a).unwrap()
        })
}

fn spec_b(max_n: usize) -> impl Strategy<Value = ConeSpec> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(0i64..=4, n - 1)))
        .prop_filter_map("last weight zero", |(n, mut a)| {
            a.sort_unstable();
            ConeSpec::new(Kind::B, n, a).ok()
        })
}

fn spec_d(max_n: usize) -> impl Strategy<Value = ConeSpec> {
    (3..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(1i64..=4, n - 2),
                -4i64..=4,
            )
        })
        .prop_filter_map("invalid or non-salient", |(n, mut tail, first)| {
            tail.sort_unstable();
            let mut a = vec![first];
            a.extend(tail);
            let spec = ConeSpec::new(Kind::D, n, a).ok()?;
            symcone::conegeom::check_saliency(&spec).ok()?;
            Some(spec)
        })
}

fn any_spec(max_n: usize) -> impl Strategy<Value = ConeSpec> {
    prop_oneof![spec_a(max_n), spec_b(max_n), spec_d(max_n)]
}

fn element(kind: Kind, m: usize) -> impl Strategy<Value = GroupElement> {
    let all: Vec<GroupElement> = enumerate_group(kind, m).unwrap().collect();
    proptest::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_a_homomorphism(
        (g, h, v) in prop_oneof![Just(Kind::A), Just(Kind::B), Just(Kind::D)]
            .prop_flat_map(|k| (Just(k), 2usize..=4))
            .prop_flat_map(|(k, m)| {
                let dim = if k == Kind::A { m } else { m + 1 };
                (element(k, m), element(k, m), proptest::collection::vec(-9i64..=9, dim))
            })
    ) {
        let gh = g.compose(&h).unwrap();
        prop_assert_eq!(gh.apply(&v).unwrap(), g.apply(&h.apply(&v).unwrap()).unwrap());
    }

    #[test]
    fn fast_membership_matches_brute_force(
        (spec, x) in any_spec(5).prop_flat_map(|s| {
            let n = s.dim();
            (Just(s), proptest::collection::vec(-6i64..=6, n))
        })
    ) {
        prop_assert_eq!(membership_fast(&spec, &x).unwrap(), membership(&spec, &x).unwrap());
    }

    #[test]
    fn fundamental_cone_lies_in_cone(
        (spec, coeffs) in any_spec(5).prop_flat_map(|s| {
            let n = s.dim();
            (Just(s), proptest::collection::vec(0i64..=3, n))
        })
    ) {
        // Nonnegative combinations of the generators satisfy A y >= 0.
        let gens = generator_matrix(&spec);
        let mut y = vec![0; spec.dim()];
        for (c, b) in coeffs.iter().zip(gens.columns()) {
            for (yi, bi) in y.iter_mut().zip(b) {
                *yi += c * bi;
            }
        }
        prop_assert!(in_fundamental_cone(&spec, &y));
        prop_assert!(membership(&spec, &y).unwrap());
    }

    #[test]
    fn generator_determinant(spec in any_spec(6)) {
        let det = generator_matrix(&spec).determinant().abs();
        let expected = match spec.kind() {
            Kind::A | Kind::B => 1,
            Kind::D => 1i128 << (spec.dim() - 2),
        };
        prop_assert_eq!(det, expected);
        prop_assert_eq!(facet_matrix(&spec).len(), spec.dim());
    }

    #[test]
    fn series_json_round_trip(coeffs in proptest::collection::vec(any::<i64>(), 1..12)) {
        let s = TruncatedSeries::from_i64s(&coeffs);
        let back: TruncatedSeries = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructions_agree_with_each_other_and_the_oracle(spec in any_spec(4)) {
        let n = 8;
        let w = spec.default_grading();
        let general = expand_graded(&build_general(&spec).unwrap(), &w, n).unwrap();
        let closed = expand_graded(&build_closed_form(&spec).unwrap(), &w, n).unwrap();
        let oracle = oracle_series(&spec, &w, n).unwrap();
        prop_assert_eq!(&general, &closed);
        prop_assert_eq!(&general, &oracle);
        prop_assert!(general.coefficients().iter().all(|c| c.sign() != num_bigint::Sign::Minus));
    }
}

proptest! {
    #[test]
    fn comaj_is_complementary_to_maj(g in (1usize..=5).prop_flat_map(|m| element(Kind::B, m))) {
        let m = g.rank() as u64;
        prop_assert_eq!(g.comaj().unwrap(), m * g.des().unwrap() - g.maj().unwrap());
    }
}
