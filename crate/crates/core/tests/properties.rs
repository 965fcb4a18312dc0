use num_traits::{One, Zero};
use proptest::prelude::*;

use shifted_symfun::interpolation::{solve_p, RhoVector};
use shifted_symfun::operators::{eigenvalue, DifferenceOperators};
use shifted_symfun::partitions::{enumerate_upto, Partition};
use shifted_symfun::scalars::{Field, Param, RatFunc, Rational, UniPoly};
use shifted_symfun::sympoly::{e_basis_expand, factorial_monomial, vandermonde, MSymPoly};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn partition(n: usize, dmax: u32) -> impl Strategy<Value = Partition> {
    let all = enumerate_upto(n, dmax);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn sym_poly(n: usize, dmax: u32) -> impl Strategy<Value = MSymPoly<Rational>> {
    let basis = enumerate_upto(n, dmax);
    proptest::collection::vec(proptest::option::weighted(0.5, rational()), basis.len()).prop_map(move |cs| {
        MSymPoly::from_terms(
            n,
            basis.iter().cloned().zip(cs).filter_map(|(mu, c)| c.map(|c| (mu, c))),
        )
    })
}

fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), n)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        proptest::collection::vec(-5i64..=5, 1..4),
        proptest::collection::vec(-5i64..=5, 1..3),
    )
        .prop_filter_map("nonzero denominator", |(a, b)| {
            let den = UniPoly::from_ints(&b);
            (!den.is_zero()).then(|| RatFunc::new(Param::R, UniPoly::from_ints(&a), den))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sparse_round_trip(f in sym_poly(3, 4)) {
        prop_assert_eq!(f.to_sparse().collect_symmetric().unwrap(), f);
    }

    #[test]
    fn evaluation_is_multiplicative(f in sym_poly(2, 3), g in sym_poly(2, 3), x in point(2)) {
        prop_assert_eq!(f.multiply(&g).evaluate(&x), f.evaluate(&x) * &g.evaluate(&x));
    }

    #[test]
    fn evaluation_agrees_with_sparse(f in sym_poly(3, 3), x in point(3)) {
        prop_assert_eq!(f.to_sparse().evaluate(&x), f.evaluate(&x));
    }

    #[test]
    fn e_basis_round_trip(f in sym_poly(3, 4)) {
        prop_assert_eq!(e_basis_expand(&f).to_msym(), f);
    }

    #[test]
    fn vandermonde_division_inverts_multiplication(f in sym_poly(3, 3)) {
        let s = f.to_sparse();
        let product = s.mul(&vandermonde::<Rational>(3));
        prop_assert!(product.is_skew_symmetric());
        prop_assert_eq!(product.divide_by_vandermonde().unwrap(), s);
    }

    #[test]
    fn factorial_monomial_top_component(lambda in partition(3, 5)) {
        let f = factorial_monomial::<Rational>(&lambda).collect_symmetric().unwrap();
        prop_assert_eq!(f.top_component().unwrap(), MSymPoly::monomial(lambda));
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition(4, 6)) {
        let back = lambda.conjugate().conjugate();
        prop_assert_eq!(Partition::padded(back.parts(), lambda.n()).unwrap(), lambda);
    }

    #[test]
    fn dominance_reverses_under_conjugation(lambda in partition(3, 5), mu in partition(3, 5)) {
        prop_assume!(lambda.size() == mu.size());
        let m = lambda.size() as usize;
        let conj = |p: &Partition| Partition::padded(p.conjugate().parts(), m).unwrap();
        prop_assert_eq!(mu.dominance_leq(&lambda), conj(&lambda).dominance_leq(&conj(&mu)));
    }

    #[test]
    fn difference_operator_does_not_raise_degree(f in sym_poly(2, 3), r in rational()) {
        prop_assume!(!f.is_zero() && r >= Rational::zero());
        let ops = DifferenceOperators::new(2, r);
        let bound = f.degree().unwrap();
        for part in ops.apply_d(&f).unwrap() {
            prop_assert!(part.degree().is_none_or(|d| d <= bound));
        }
    }

    #[test]
    fn eigen_equation_at_random_positive_r(lambda in partition(2, 4), r in rational()) {
        prop_assume!(r > Rational::zero());
        let p = solve_p(&lambda, &RhoVector::r_delta(r.clone(), 2)).unwrap();
        let ev = eigenvalue(&lambda, &r);
        let image = DifferenceOperators::new(2, r).apply_d(&p).unwrap();
        for (k, part) in image.iter().enumerate() {
            prop_assert_eq!(part, &p.scale(&ev.coeff(k)));
        }
    }

    #[test]
    fn interpolation_vanishes_at_random_rho(lambda in partition(2, 3), rho in point(2)) {
        // two free rationals with denominators <= 6 differ by a non-integer or are rejected
        let rho = RhoVector::generic(rho);
        prop_assume!(shifted_symfun::interpolation::is_dominant(&rho));
        let p = solve_p(&lambda, &rho).unwrap();
        for mu in enumerate_upto(2, lambda.size()) {
            if mu != lambda {
                prop_assert!(p.evaluate(&rho.point(&mu)).is_zero());
            }
        }
        prop_assert!(p.coeff(&lambda).is_one());
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!((a.clone() + &b) - b.clone(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!((a.clone() * &b) / b.clone(), a.clone());
        }
        prop_assert_eq!(a.invert_param(Param::Alpha).invert_param(Param::R), a);
    }
}

#[test]
fn field_constants() {
    assert!(RatFunc::from_int(0).is_zero());
    assert!(Rational::from_int(1).is_one());
}
