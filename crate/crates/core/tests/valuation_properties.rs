use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rrclosure::valuation::grid::{default_groups, default_rho_values, integral_grid};
use rrclosure::valuation::sampling::{check_colon, check_multiply, check_power, probes, SamplingConfig};
use rrclosure::valuation::{
    rr_by_chain, rr_closed_form, rr_hat, v_closure, DEFAULT_CHAIN_LENGTH,
};
use rrclosure::{CutIdeal, CutKind, Rational, ValueGroup};

const CODES: [&str; 6] = ["Z", "Q", "ZZ", "ZQ", "QZ", "ZQZ"];

fn raw_cut() -> impl Strategy<Value = CutIdeal> {
    (0..CODES.len(), any::<bool>(), prop::collection::vec((-12i64..=12, 1i64..=4), 3))
        .prop_flat_map(|(g, ge, entries)| {
            let group = ValueGroup::from_code(CODES[g]).unwrap();
            let k = group.rank();
            (Just(group), Just(ge), Just(entries), 1..=k)
        })
        .prop_map(|(group, ge, entries, m)| {
            let rho = entries[..m].iter().map(|&(n, d)| Rational::new(n, d)).collect();
            let kind = if ge { CutKind::Ge } else { CutKind::Gt };
            CutIdeal::raw(&group, kind, rho).unwrap()
        })
}

fn cut() -> impl Strategy<Value = CutIdeal> {
    raw_cut().prop_map(|c| c.canonicalize())
}

/// Two canonical cuts over the same group.
fn cut_pair() -> impl Strategy<Value = (CutIdeal, CutIdeal)> {
    (cut(), raw_cut()).prop_map(|(a, b)| {
        let m = b.m().min(a.group().rank());
        let b = CutIdeal::new(a.group(), b.kind(), b.rho()[..m].to_vec()).unwrap();
        (a, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonicalize_is_idempotent(c in raw_cut()) {
        let once = c.canonicalize();
        prop_assert_eq!(once.canonicalize(), once.clone());
        prop_assert!(once.is_canonical());
    }

    #[test]
    fn product_and_colon_match_membership((a, b) in cut_pair(), seed in any::<u64>()) {
        let cfg = SamplingConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = probes(&[&a, &b, &a.multiply(&b).unwrap(), &a.colon(&b).unwrap()], &mut rng, &cfg, 100);
        prop_assert_eq!(check_multiply(&a, &b, &pts, &cfg).unwrap(), None);
        prop_assert_eq!(check_colon(&a, &b, &pts, &cfg).unwrap(), None);
        prop_assert_eq!(check_power(&a, 3, &pts, &cfg).unwrap(), None);
    }

    #[test]
    fn lattice_laws((a, b) in cut_pair()) {
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(&ab, &b.multiply(&a).unwrap());
        // (AB : B) contains A, and B (A : B) is inside A.
        prop_assert!(a.is_subset(&ab.colon(&b).unwrap()).unwrap());
        prop_assert!(b.multiply(&a.colon(&b).unwrap()).unwrap().is_subset(&a).unwrap());
        let j = a.join(&b).unwrap();
        prop_assert!(a.is_subset(&j).unwrap() && b.is_subset(&j).unwrap());
    }

    #[test]
    fn trace_is_ring_or_prime(c in cut()) {
        let t = c.trace();
        prop_assert!(t.is_ring() || t.is_prime().is_some(), "{} -> {}", c, t);
        for n in 2..=4 {
            prop_assert_eq!(c.power(n).unwrap().trace(), t.clone());
        }
    }

    #[test]
    fn idempotent_proper_ideals_are_prime(c in cut()) {
        let i = c.meet_ring();
        if i.is_idempotent() && !i.is_ring() {
            prop_assert!(i.is_prime().is_some(), "{}", i);
        }
    }

    #[test]
    fn closure_formulas_agree(c in cut()) {
        let i = c.meet_ring();
        let closed = rr_closed_form(&i).unwrap();
        prop_assert_eq!(&closed, &rr_by_chain(&i, DEFAULT_CHAIN_LENGTH).unwrap());
        prop_assert_eq!(&closed, &rr_hat(&i).meet_ring());
        prop_assert_eq!(&rr_closed_form(&closed).unwrap(), &closed);
        prop_assert!(i.is_subset(&closed).unwrap());
    }

    #[test]
    fn hat_commutes_with_shifts(c in cut(), shift in prop::collection::vec(-5i64..=5, 3)) {
        let g = c.group();
        let a = g.element_from_ints(&shift[..g.rank()]).unwrap();
        prop_assert_eq!(rr_hat(&c.shift(&a).unwrap()), rr_hat(&c).shift(&a).unwrap());
        prop_assert_eq!(v_closure(&c.shift(&a).unwrap()), v_closure(&c).shift(&a).unwrap());
    }

    #[test]
    fn hat_is_extensive_and_idempotent(c in cut()) {
        let h = rr_hat(&c);
        prop_assert!(c.is_subset(&h).unwrap());
        prop_assert_eq!(rr_hat(&h), h);
    }

    #[test]
    fn hat_is_v_without_idempotent_nonmaximal_primes(c in cut()) {
        if !c.group().has_nonmax_idempotent_prime() {
            prop_assert_eq!(rr_hat(&c), v_closure(&c));
        }
    }
}

#[test]
fn monotonicity_fails_exactly_with_idempotent_nonmaximal_primes() {
    for code in CODES {
        let group = ValueGroup::from_code(code).unwrap();
        let grid = integral_grid(&group, &default_rho_values());
        let closures: Vec<CutIdeal> = grid.iter().map(|i| rr_closed_form(i).unwrap()).collect();
        let monotone = closures.windows(2).all(|w| w[0].is_subset(&w[1]).unwrap());
        assert_eq!(monotone, !group.has_nonmax_idempotent_prime(), "{group}");
    }
}

#[test]
fn strongly_discrete_groups_have_only_closed_ideals() {
    for group in default_groups().into_iter().filter(ValueGroup::is_strongly_discrete) {
        for i in integral_grid(&group, &default_rho_values()) {
            assert_eq!(rr_closed_form(&i).unwrap(), i, "{group} {i}");
        }
    }
}
