//! Property-based invariants: subspace duality laws, contraction algebra,
//! parse/print round-trips, and binomial-representation arithmetic.

use apolar::exact::{rat, Rational, Subspace};
use apolar::macaulay::{macaulay_bound, macaulay_rep};
use apolar::parse::parse_polynomial;
use apolar::poly::{DualElement, Monomial, Polynomial};
use proptest::collection::vec;
use proptest::prelude::*;

fn rationals(entries: Vec<i64>) -> Vec<Rational> {
    entries.into_iter().map(rat).collect()
}

/// Two random subspaces of a common ambient space `Q^n`, `n <= 6`.
fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
    (1usize..=6).prop_flat_map(|n| {
        let span = || vec(vec(-3i64..=3, n), 0..=n);
        (span(), span()).prop_map(move |(a, b)| {
            let build = |vs: Vec<Vec<i64>>| {
                Subspace::from_spanning(n, vs.into_iter().map(rationals).collect())
                    .expect("vectors have the ambient length")
            };
            (build(a), build(b))
        })
    })
}

fn build_polynomial(num_vars: usize, terms: Vec<(Vec<u32>, i64)>) -> Polynomial {
    Polynomial::from_terms(
        num_vars,
        terms
            .into_iter()
            .map(|(e, c)| (Monomial::from_exponents(e), rat(c)))
            .collect(),
    )
}

/// A sparse polynomial in `n <= 4` variables with per-variable exponents
/// at most 3 and small integer coefficients (possibly zero, possibly
/// cancelling).
fn polynomial() -> impl Strategy<Value = Polynomial> {
    (1usize..=4).prop_flat_map(|n| {
        vec((vec(0u32..=3, n), -5i64..=5), 0..=4)
            .prop_map(move |terms| build_polynomial(n, terms))
    })
}

fn build_dual_element(num_vars: usize, components: Vec<Vec<(Vec<u32>, i64)>>) -> DualElement {
    DualElement::new(
        num_vars,
        components
            .into_iter()
            .map(|terms| build_polynomial(num_vars, terms))
            .collect(),
    )
}

/// A dual element together with two contraction operators in the same
/// variables.
fn contraction_case() -> impl Strategy<Value = (DualElement, Monomial, Monomial)> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(n, slots)| {
        let component = vec((vec(0u32..=3, n), -3i64..=3), 0..=3);
        (vec(component, slots..=slots), vec(0u32..=2, n), vec(0u32..=2, n)).prop_map(
            move |(components, e1, e2)| {
                (
                    build_dual_element(n, components),
                    Monomial::from_exponents(e1),
                    Monomial::from_exponents(e2),
                )
            },
        )
    })
}

/// Two dual elements of a common shape and one contraction operator.
fn additivity_case() -> impl Strategy<Value = (DualElement, DualElement, Monomial)> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(n, slots)| {
        let tuple = || vec(vec((vec(0u32..=3, n), -3i64..=3), 0..=3), slots..=slots);
        (tuple(), tuple(), vec(0u32..=2, n)).prop_map(move |(a, b, e)| {
            (
                build_dual_element(n, a),
                build_dual_element(n, b),
                Monomial::from_exponents(e),
            )
        })
    })
}

proptest! {
    // Integration tests have no src/ root for regression files; skip
    // persistence rather than warn about it.
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    /// Complement dimensions add up, double complement is the identity,
    /// and complementation exchanges sums with intersections.
    #[test]
    fn prop_subspace_duality_laws((k, l) in subspace_pair()) {
        let n = k.ambient_dim();
        prop_assert_eq!(k.dim() + k.perp().dim(), n);
        prop_assert_eq!(k.perp().perp(), k.clone());
        prop_assert_eq!(k.sum(&l).perp(), k.perp().intersect(&l.perp()));
    }

    /// The modular law on dimensions and the containment relations of
    /// sum and intersection.
    #[test]
    fn prop_sum_and_intersection_are_lattice_operations((k, l) in subspace_pair()) {
        let s = k.sum(&l);
        let i = k.intersect(&l);
        prop_assert_eq!(s.dim() + i.dim(), k.dim() + l.dim());
        prop_assert!(s.contains(&k) && s.contains(&l));
        prop_assert!(k.contains(&i) && l.contains(&i));
    }

    /// `Display` is a fixed point of parse-then-print.
    #[test]
    fn prop_polynomial_display_round_trips(p in polynomial()) {
        let text = p.to_string();
        let reparsed = parse_polynomial(&text, Some(p.num_vars())).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    /// Contraction operators compose multiplicatively and commute.
    #[test]
    fn prop_contraction_composes_and_commutes((w, m1, m2) in contraction_case()) {
        let sequential = w.contract(&m1).contract(&m2);
        let swapped = w.contract(&m2).contract(&m1);
        let combined = w.contract(&m1.mul(&m2));
        prop_assert_eq!(&sequential, &swapped);
        prop_assert_eq!(&sequential, &combined);
    }

    /// Contraction is additive in the dual element.
    #[test]
    fn prop_contraction_is_additive((v, w, m) in additivity_case()) {
        prop_assert_eq!(v.add(&w).contract(&m), v.contract(&m).add(&w.contract(&m)));
    }

    /// The binomial representation reproduces its value, and the growth
    /// bound is monotone in the value.
    #[test]
    fn prop_macaulay_representation_round_trips(a in 1u64..=100_000, s in 1usize..=12) {
        let rep = macaulay_rep(a, s).unwrap();
        prop_assert_eq!(rep.value(), a);
        prop_assert!(macaulay_bound(a + 1, s).unwrap() >= macaulay_bound(a, s).unwrap());
    }
}
