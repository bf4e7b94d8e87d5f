use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use polygap::combinatorics::{
    alpha_margin, alpha_margin_factored, beta_margin, beta_margin_factored, binom,
    outside_vertices_identity_residual, phi, phi_edges_surplus_form,
};
use polygap::constructions::catalogue;
use polygap::iso::{are_isomorphic, canonical_form, IsoLimits};
use polygap::lattice::enumerate_lattice;
use polygap::{CombinatorialPolytope, Family};

fn member() -> impl Strategy<Value = Family> {
    (2usize..=5).prop_flat_map(|d| {
        let all = catalogue(d, 2 * d + 1);
        let n = all.len();
        (0..n).prop_map(move |i| all[i].clone())
    })
}

fn member_with_perm() -> impl Strategy<Value = (Family, Vec<usize>)> {
    member().prop_flat_map(|f| {
        let n = f.nverts();
        (Just(f), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn surplus_form_is_phi(d in 2i64..80, k in 1i64..80) {
        prop_assume!(k <= d);
        prop_assert_eq!(phi_edges_surplus_form(d, k).unwrap(), phi(1, d + k, d).unwrap());
    }

    #[test]
    fn identity_residual_vanishes((d, k, n) in (1i64..120).prop_flat_map(|d| (Just(d), 1..=d))
        .prop_flat_map(|(d, k)| (Just(d), Just(k), 1..=k)))
    {
        prop_assert!(outside_vertices_identity_residual(d, k, n).unwrap().is_zero());
    }

    #[test]
    fn phi_steps_by_a_binomial(d in 2i64..40, m in 0i64..40, k in 1i64..40) {
        prop_assume!(m < d && k < d);
        let step = phi(m, d + k + 1, d).unwrap() - phi(m, d + k, d).unwrap();
        prop_assert_eq!(step, binom(d - k, m));
    }

    #[test]
    fn margins_match_their_factored_forms(d in 3i64..200, m in 3i64..200) {
        prop_assume!(m <= d);
        prop_assert_eq!(BigRational::from_integer(alpha_margin(d, m).unwrap()), alpha_margin_factored(d, m).unwrap());
        prop_assert_eq!(BigRational::from_integer(beta_margin(d, m).unwrap()), beta_margin_factored(d, m).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabelling_preserves_everything((fam, perm) in member_with_perm()) {
        let p = fam.build().unwrap();
        let q = p.relabel(&perm).unwrap();
        prop_assert!(are_isomorphic(&p, &q).unwrap());
        prop_assert_eq!(
            enumerate_lattice(&p).unwrap().f_vector(),
            enumerate_lattice(&q).unwrap().f_vector()
        );
        let limits = IsoLimits::default();
        prop_assert_eq!(canonical_form(&p, limits).unwrap(), canonical_form(&q, limits).unwrap());
    }

    #[test]
    fn json_round_trip((fam, perm) in member_with_perm()) {
        let p = fam.build().unwrap().relabel(&perm).unwrap();
        let text = p.to_json();
        let back = CombinatorialPolytope::from_json(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn closed_form_edges_match_the_lattice(fam in member()) {
        let e = enumerate_lattice(&fam.build().unwrap()).unwrap().f_vector()[1];
        prop_assert_eq!(fam.edge_count(), BigInt::from(e));
    }
}
