use super::*;
use crate::ring::{parse_poly, FieldSpec, Fp, MonomialOrder, Polynomial, Rational, RingRef, RingSpec};

fn q(n: usize) -> RingRef {
    RingSpec::affine(n, FieldSpec::Rationals)
}

fn ideal(r: &RingRef, gens: &[&str]) -> Ideal<Rational> {
    Ideal::from_strs(r, gens).unwrap()
}

fn basis_strings(gb: &GroebnerBasis<Rational>) -> Vec<String> {
    gb.basis().iter().map(|g| g.to_string()).collect()
}

fn un() -> Budget {
    Budget::unlimited()
}

#[test]
fn lex_basis_of_two_linear_forms() {
    let r = q(2);
    let gb = ideal(&r, &["x1", "x1 + x2"]).groebner_in(&MonomialOrder::lex(2), &un()).unwrap();
    assert_eq!(basis_strings(&gb), vec!["x2", "x1"]);
}

#[test]
fn lex_basis_by_hand() {
    let r = q(2);
    let gb = ideal(&r, &["x1*x2 - 1", "x2^2 - 1"]).groebner_in(&MonomialOrder::lex(2), &un()).unwrap();
    assert_eq!(basis_strings(&gb), vec!["x2^2 - 1", "x1 - x2"]);
    assert!(satisfies_buchberger_criterion(&gb).unwrap());
    assert!(is_reduced(&gb));
}

#[test]
fn inhomogeneous_lex_stays_small() {
    // Sugar-first selection wanders through leads like x2^3*x3^42 on this input.
    let r = q(3);
    let i = ideal(
        &r,
        &[
            "-2*x1^2*x2^2*x3^2 + 4*x1^2*x2^2 + 6*x2^2*x3^2",
            "3*x1*x2^2*x3 - x1*x2*x3^2 + 5*x1^2*x3",
            "3*x1^2*x2^2*x3^2 - 3*x1^2*x2*x3^2",
        ],
    );
    let budget = Budget { max_steps: Some(2000), ..Budget::default() };
    let gb = i.groebner_in(&MonomialOrder::lex(3), &budget).unwrap();
    assert_eq!(gb.len(), 8);
    assert!(basis_strings(&gb).contains(&"x2^3*x3^4 - x2^2*x3^4".to_string()));
    assert!(satisfies_buchberger_criterion(&gb).unwrap());
}

#[test]
fn cofactors_reexpand() {
    let r = q(3);
    let i = ideal(&r, &["x1^2 - x2*x3", "x2^2 - x1*x3", "x3^2 - x1*x2"]);
    let opts = GbOptions { track_cofactors: true, ..GbOptions::default() };
    let gb = groebner_basis_with(&i, r.order(), &un(), &opts).unwrap();
    let cof = gb.cofactors().unwrap();
    for (b, row) in gb.basis().iter().zip(cof) {
        let mut acc = Polynomial::zero(gb.ring());
        for (c, g) in row.iter().zip(gb.generators()) {
            acc = &acc + &(c * g);
        }
        assert_eq!(&acc, b);
    }
    let f = parse_poly::<Rational>("x1^3*x2 + 7*x2*x3^2 - x1 + 4", &r).unwrap().to_ring(gb.ring()).unwrap();
    let (rem, qs) = normal_form(&f, &gb, true).unwrap();
    let mut acc = rem.clone();
    for (qk, g) in qs.unwrap().iter().zip(gb.basis()) {
        acc = &acc + &(qk * g);
    }
    assert_eq!(acc, f);
}

#[test]
fn membership_basics() {
    let r = q(3);
    let i = ideal(&r, &["x1*x2 - x3^2", "x2*x3 - x1^2"]);
    assert!(ideal_membership(&i.generators()[0], &i, &un()).unwrap());
    assert!(!ideal_membership(&Polynomial::one(&r), &i, &un()).unwrap());
}

#[test]
fn saturation_removes_embedded_component() {
    let r = q(2);
    let i = ideal(&r, &["x1^2", "x1*x2"]);
    let m = Ideal::variables(&r, &[0, 1]);
    for route in [SaturationRoute::Auto, SaturationRoute::Rabinowitsch] {
        let (sat, s) = saturate_via(&i, &m, &un(), route).unwrap();
        assert!(ideals_equal(&sat, &ideal(&r, &["x1"]), &un()).unwrap());
        assert_eq!(s, 1);
    }
}

#[test]
fn saturating_by_itself_gives_unit() {
    let r = q(3);
    let i = ideal(&r, &["x1*x2 - x3^2", "x2*x3 - x1^2"]);
    let (sat, _) = saturate(&i, &i, &un()).unwrap();
    assert!(sat.groebner(&un()).unwrap().is_unit());
}

#[test]
fn intersections() {
    let r = q(3);
    let a = intersect(&ideal(&r, &["x1"]), &ideal(&r, &["x2"]), &un()).unwrap();
    assert!(ideals_equal(&a, &ideal(&r, &["x1*x2"]), &un()).unwrap());
    let b = intersect(&ideal(&r, &["x1", "x2"]), &ideal(&r, &["x1", "x3"]), &un()).unwrap();
    assert!(ideals_equal(&b, &ideal(&r, &["x1", "x2*x3"]), &un()).unwrap());
    let i = ideal(&r, &["x1^2 + x2*x3"]);
    let c = intersect(&i, &Ideal::unit(&r), &un()).unwrap();
    assert!(ideals_equal(&c, &i, &un()).unwrap());
}

#[test]
fn elimination_of_cusp_parameter() {
    let r = RingSpec::builder(FieldSpec::Rationals).block("x", 1).block("y", 2).build().unwrap();
    let i = ideal(&r, &["y1 - x1^2", "y2 - x1^3"]);
    let e = eliminate(&i, &[0], &un()).unwrap();
    assert_eq!(e.len(), 1);
    let g = e.generators()[0].monic();
    assert!(g == parse_poly("y1^3 - y2^2", &r).unwrap().monic());
    let same = eliminate(&i, &[], &un()).unwrap();
    assert!(ideals_equal(&same, &i, &un()).unwrap());
}

#[test]
fn quotients() {
    let r = q(2);
    for route in [QuotientRoute::Auto, QuotientRoute::Intersection] {
        let x1 = parse_poly("x1", &r).unwrap();
        let qt = quotient_by_element_via(&ideal(&r, &["x1^2"]), &x1, &un(), route).unwrap();
        assert!(ideals_equal(&qt, &ideal(&r, &["x1"]), &un()).unwrap());
    }
    let i = ideal(&r, &["x1^2 - x2^3", "x1*x2"]);
    let qt = ideal_quotient(&i, &Ideal::unit(&r), &un()).unwrap();
    assert!(ideals_equal(&qt, &i, &un()).unwrap());
}

#[test]
fn krull_dimension_examples() {
    let r = q(3);
    assert_eq!(krull_dimension(&ideal(&r, &["x1*x2"]), &un()).unwrap(), Dimension { dim: 2, codim: 1 });
    assert_eq!(krull_dimension(&Ideal::<Rational>::zero(&r), &un()).unwrap(), Dimension { dim: 3, codim: 0 });
    assert_eq!(krull_dimension(&Ideal::<Rational>::unit(&r), &un()).unwrap().dim, -1);
}

#[test]
fn hilbert_series_examples() {
    let r = q(2);
    let h = hilbert_series(&ideal(&r, &["x1^2"]), r.weights(), &un()).unwrap();
    assert_eq!(h.to_string(), "(1+t)/(1-t)");
    let r3 = q(3);
    let h = hilbert_series(&Ideal::<Rational>::zero(&r3), r3.weights(), &un()).unwrap();
    assert_eq!(h.to_string(), "1/(1-t)^3");
    assert!(hilbert_series(&ideal(&r, &["x1^2 + x2"]), r.weights(), &un()).is_err());
}

#[test]
fn lift_of_product() {
    let r = q(2);
    let g = vec![parse_poly::<Rational>("x1 + x2", &r).unwrap(), parse_poly("x1*x2 - 3", &r).unwrap()];
    let f = &g[0] * &g[1];
    let lift = lift_into_power(&f, &g, 2, &un()).unwrap();
    let nonzero: Vec<_> = lift.iter().filter(|t| !t.coeff.is_zero()).collect();
    assert_eq!(nonzero.len(), 1);
    assert_eq!(nonzero[0].exponents, vec![1, 1]);
    assert!(nonzero[0].coeff.is_one());
    let zero = lift_into_power(&Polynomial::zero(&r), &g, 2, &un()).unwrap();
    assert!(zero.iter().all(|t| t.coeff.is_zero()));
}

#[test]
fn budget_is_reported() {
    let r = q(4);
    let i = ideal(
        &r,
        &[
            "x1 + x2 + x3 + x4",
            "x1*x2 + x2*x3 + x3*x4 + x4*x1",
            "x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2",
            "x1*x2*x3*x4 - 1",
        ],
    );
    let b = Budget { max_steps: Some(3), ..Budget::unlimited() };
    assert!(i.groebner(&un()).unwrap().len() > 4);
    let err = i.groebner(&b).unwrap_err();
    assert!(err.is_budget());
}

#[test]
fn prime_field_basis_is_reduced() {
    let r = RingSpec::affine(3, FieldSpec::Prime(32003));
    let i: Ideal<Fp> = Ideal::from_strs(&r, &["x1*x2 - x3^2", "x2*x3 - x1^2", "x1*x3 - x2^2"]).unwrap();
    let gb = i.groebner(&un()).unwrap();
    assert!(satisfies_buchberger_criterion(&gb).unwrap());
    assert!(is_reduced(&gb));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_poly(r: &RingRef) -> impl Strategy<Value = Polynomial<Rational>> {
        let r = r.clone();
        let n = r.nvars();
        prop::collection::vec((-5i64..=5, prop::collection::vec(0u16..3, n)), 1..4).prop_map(move |ts| {
            let terms = ts
                .into_iter()
                .map(|(c, e)| {
                    let mut m = crate::ring::Monomial::ONE;
                    for (v, &k) in e.iter().enumerate() {
                        m = m.mul(&crate::ring::Monomial::variable(v).pow(k as u32));
                    }
                    crate::ring::Term { coeff: Rational::from_i64(&FieldSpec::Rationals, c), mono: m }
                })
                .collect();
            Polynomial::from_terms(&r, terms)
        })
    }

    fn homogeneous_poly(r: &RingRef, d: u32) -> impl Strategy<Value = Polynomial<Rational>> {
        small_poly(r).prop_map(move |p| {
            let h = p.homogeneous_part(d);
            if h.is_zero() {
                Polynomial::var(p.ring(), 0).pow(d)
            } else {
                h
            }
        })
    }

    use crate::ring::Field;

    proptest! {
        #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

        #[test]
        fn buchberger_criterion_holds(gens in prop::collection::vec(small_poly(&q(3)), 1..4)) {
            let r = gens[0].ring().clone();
            let i = Ideal::new(&r, gens).unwrap();
            for order in [MonomialOrder::degrevlex(3), MonomialOrder::lex(3)] {
                let gb = i.groebner_in(&order, &un()).unwrap();
                prop_assert!(satisfies_buchberger_criterion(&gb).unwrap());
                prop_assert!(is_reduced(&gb));
                prop_assert!(generators_in(&i, &gb).unwrap());
            }
        }

        #[test]
        fn membership_is_order_independent(
            gens in prop::collection::vec(small_poly(&q(3)), 1..3),
            f in small_poly(&q(3)),
            h in small_poly(&q(3)),
        ) {
            let r = gens[0].ring().clone();
            let i = Ideal::new(&r, gens.clone()).unwrap();
            let member = &(&h * &gens[0]) + &f.to_ring(&r).unwrap();
            for cand in [member, f.to_ring(&r).unwrap(), &h * &gens[0]] {
                let a = normal_form(&cand, &i.groebner_in(&MonomialOrder::degrevlex(3), &un()).unwrap(), false).unwrap().0.is_zero();
                let b = normal_form(&cand, &i.groebner_in(&MonomialOrder::lex(3), &un()).unwrap(), false).unwrap().0.is_zero();
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn saturation_is_idempotent_and_consistent(
            a in homogeneous_poly(&q(3), 2),
            b in homogeneous_poly(&q(3), 3),
            c in homogeneous_poly(&q(3), 2),
        ) {
            let r = a.ring().clone();
            let i = Ideal::new(&r, vec![&a * &c, &b * &Polynomial::var(&r, 0)]).unwrap();
            let j = Ideal::variables(&r, &[0, 1]);
            let (sat, s) = saturate(&i, &j, &un()).unwrap();
            prop_assert!(is_subideal(&i, &sat, &un()).unwrap());
            let (sat2, _) = saturate(&sat, &j, &un()).unwrap();
            prop_assert!(ideals_equal(&sat, &sat2, &un()).unwrap());
            let quot = ideal_quotient(&i, &j.power(s), &un()).unwrap();
            prop_assert!(ideals_equal(&sat, &quot, &un()).unwrap());
            let (slow, _) = saturate_via(&i, &j, &un(), SaturationRoute::Rabinowitsch).unwrap();
            prop_assert!(ideals_equal(&sat, &slow, &un()).unwrap());
            let (iter, _) = iterated_quotient(&i, &j, &un()).unwrap();
            prop_assert!(ideals_equal(&sat, &iter, &un()).unwrap());
        }

        #[test]
        fn maximal_ideal_saturation_routes_agree(
            a in homogeneous_poly(&q(3), 2),
            b in homogeneous_poly(&q(3), 2),
        ) {
            let r = a.ring().clone();
            // (a·b) ∩ m^3 style ideal with an embedded component at the origin
            let m3 = Ideal::variables(&r, &[0, 1, 2]).power(3);
            let i = intersect(&Ideal::new(&r, vec![&a * &b]).unwrap(), &m3, &un()).unwrap();
            let (fast, s) = saturate_by_maximal_ideal(&i, &un()).unwrap();
            let (slow, s2) = saturate(&i, &Ideal::variables(&r, &[0, 1, 2]), &un()).unwrap();
            prop_assert!(ideals_equal(&fast, &slow, &un()).unwrap());
            prop_assert_eq!(s, s2);
        }

        #[test]
        fn quotient_routes_agree(a in homogeneous_poly(&q(3), 2), b in homogeneous_poly(&q(3), 3)) {
            let r = a.ring().clone();
            let i = Ideal::new(&r, vec![&a * &Polynomial::var(&r, 2), b]).unwrap();
            let x3 = Polynomial::var(&r, 2);
            let fast = quotient_by_element_via(&i, &x3, &un(), QuotientRoute::Auto).unwrap();
            let slow = quotient_by_element_via(&i, &x3, &un(), QuotientRoute::Intersection).unwrap();
            prop_assert!(ideals_equal(&fast, &slow, &un()).unwrap());
        }

        #[test]
        fn graded_quotient_matches_intersection(
            a in homogeneous_poly(&q(3), 2),
            b in homogeneous_poly(&q(3), 2),
            g in homogeneous_poly(&q(3), 1),
        ) {
            let r = a.ring().clone();
            let i = Ideal::new(&r, vec![&a * &g, b]).unwrap();
            let fast = quotient_by_element_via(&i, &g, &un(), QuotientRoute::Auto).unwrap();
            let slow = quotient_by_element_via(&i, &g, &un(), QuotientRoute::Intersection).unwrap();
            prop_assert!(ideals_equal(&fast, &slow, &un()).unwrap());
        }

        #[test]
        fn hilbert_series_matches_count(gens in prop::collection::vec(homogeneous_poly(&q(3), 2), 1..4)) {
            let r = gens[0].ring().clone();
            let i = Ideal::new(&r, gens).unwrap();
            let h = hilbert_series(&i, r.weights(), &un()).unwrap();
            let leads = i.groebner(&un()).unwrap().lead_monomials();
            for d in 0..=12u32 {
                let direct = dimension::standard_monomial_count(3, r.weights(), &leads, d) as i128;
                prop_assert_eq!(h.coefficient(d as usize), direct);
            }
        }

        #[test]
        fn monomial_dimension_matches_brute_force(
            monos in prop::collection::vec(prop::collection::vec(0u16..3, 4), 1..5)
        ) {
            let monos: Vec<crate::ring::Monomial> = monos.iter().map(|e| {
                let mut m = crate::ring::Monomial::ONE;
                for (v, &k) in e.iter().enumerate() {
                    m = m.mul(&crate::ring::Monomial::variable(v).pow(k as u32));
                }
                m
            }).collect();
            // a set S of variables is independent when no monomial is supported inside S
            let mut best = -1i32;
            if monos.iter().all(|m| !m.is_one()) {
                for s in 0u32..16 {
                    if monos.iter().all(|m| m.support_mask() & !s != 0) {
                        best = best.max(s.count_ones() as i32);
                    }
                }
            }
            prop_assert_eq!(dimension::monomial_dimension(4, &monos), best);
        }

        #[test]
        fn graded_counts_match_dimension_difference(gens in prop::collection::vec(homogeneous_poly(&q(3), 2), 1..4)) {
            let r = gens[0].ring().clone();
            let i = Ideal::new(&r, gens).unwrap();
            let g = minimal_generator_degrees(&i, 3).unwrap();
            prop_assert_eq!(g.count(2), graded_dimension(&i, 2).unwrap());
            prop_assert_eq!(g.count(3), 0);
        }
    }
}
