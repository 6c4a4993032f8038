use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use gue_core::algebra::{LaurentSeries, MultiSeries, Poly, PowerSeries, Ring};
use gue_core::{PolyN, SymbolPoly};

fn int() -> impl Strategy<Value = BigInt> {
    (-1_000_000i64..1_000_000).prop_map(BigInt::from)
}

fn poly_n() -> impl Strategy<Value = PolyN> {
    prop::collection::vec(int(), 0..6).prop_map(Poly::new)
}

fn sym_poly() -> impl Strategy<Value = SymbolPoly> {
    prop::collection::vec((0..3u8, -2i64..3, -20i64..20), 0..5).prop_map(|terms| {
        terms.into_iter().fold(SymbolPoly::constant(BigInt::from(1)), |acc, (kind, i, c)| {
            let s = if kind == 0 { SymbolPoly::v(i) } else { SymbolPoly::w(i) };
            let t = s.mul_ref(&SymbolPoly::constant(BigInt::from(c)));
            acc.add_ref(&t)
        })
    })
}

fn ratio() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn axioms<R: Ring + std::fmt::Debug>(a: &R, b: &R, c: &R) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add_ref(b), b.add_ref(a));
    prop_assert_eq!(a.mul_ref(b), b.mul_ref(a));
    prop_assert_eq!(a.add_ref(b).add_ref(c), a.add_ref(&b.add_ref(c)));
    prop_assert_eq!(a.mul_ref(b).mul_ref(c), a.mul_ref(&b.mul_ref(c)));
    prop_assert_eq!(a.mul_ref(&b.add_ref(c)), a.mul_ref(b).add_ref(&a.mul_ref(c)));
    prop_assert!(a.sub_ref(a).is_zero());
    Ok(())
}

proptest! {
    #[test]
    fn integer_ring_axioms(a in int(), b in int(), c in int()) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn polynomial_ring_axioms(a in poly_n(), b in poly_n(), c in poly_n()) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn symbol_ring_axioms(a in sym_poly(), b in sym_poly(), c in sym_poly()) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn site_shift_is_a_homomorphism(p in poly_n(), q in poly_n(), k in -5i64..6) {
        prop_assert_eq!(p.mul_ref(&q).shift(k), p.shift(k).mul_ref(&q.shift(k)));
        prop_assert_eq!(p.add_ref(&q).shift(k), p.shift(k).add_ref(&q.shift(k)));
        prop_assert_eq!(p.shift(k).shift(-k), p);
    }

    #[test]
    fn symbol_shift_is_a_homomorphism(p in sym_poly(), q in sym_poly(), k in -3i64..4) {
        prop_assert_eq!(p.mul_ref(&q).shift(k), p.shift(k).mul_ref(&q.shift(k)));
    }

    #[test]
    fn sqrt1p_squares_back(tail in prop::collection::vec(ratio(), 1..8)) {
        let order = tail.len();
        let mut c = vec![BigRational::from_integer(0.into())];
        c.extend(tail);
        let f = PowerSeries::new(c, order);
        let g = f.sqrt1p().unwrap();
        let one = PowerSeries::constant(BigRational::from_integer(1.into()), order);
        prop_assert_eq!(g.mul(&g), one.add(&f));
    }

    #[test]
    fn series_division_round_trips(a in prop::collection::vec(ratio(), 1..8), b in prop::collection::vec(ratio(), 1..8)) {
        let order = 7;
        let mut b = b;
        if b[0] == BigRational::from_integer(0.into()) {
            b[0] = BigRational::from_integer(1.into());
        }
        let (a, b) = (PowerSeries::new(a, order), PowerSeries::new(b, order));
        prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
    }

    #[test]
    fn square_difference_division_inverts_multiplication(
        coeffs in prop::collection::vec(-30i64..30, 1..20),
    ) {
        // T with exponents <= -2 in both variables; S = (λ1 - λ2)^2 T.
        let mut t = MultiSeries::<BigInt>::new(vec![(-12, -2), (-12, -2)]);
        for (n, c) in coeffs.iter().enumerate() {
            let a = 2 + (n as i64 % 4);
            let b = 2 + (n as i64 / 4);
            t.add_term(vec![-a, -b], &BigInt::from(*c));
        }
        let s = t.mul_square_diff();
        let back = s.divide_by_square_diff().unwrap();
        for (e, c) in t.terms() {
            if let Ok(v) = back.coeff(e) {
                prop_assert_eq!(&v, c);
            }
        }
        prop_assert_eq!(back.coeff(&[-2, -2]).unwrap(), t.coeff(&[-2, -2]).unwrap());
    }

    #[test]
    fn laurent_product_matches_polynomial_product(p in poly_n(), q in poly_n()) {
        let lift = |x: &PolyN| LaurentSeries::exact(0, x.coeffs().to_vec());
        let prod = lift(&p).mul_ref(&lift(&q));
        let want = p.mul_ref(&q);
        for d in 0..=(want.coeffs().len() as i64) {
            prop_assert_eq!(prod.coeff(d).unwrap(), want.coeff(d as usize));
        }
    }
}
