//! Property tests over randomized structured inputs: the ring axioms and
//! inversion exactness of cycle classes, the binomial identities, the
//! p-th-power class equivalence, and valuation additivity.

use proptest::prelude::*;
use steencalc::arith::{
    binom_mod_p, binom_neg_mod_p, same_class, FqField, PrimeModulus,
};
use steencalc::arith::poly::Poly;
use steencalc::chow::{presets, CycleClass, RawTerm};
use steencalc::milnor::{support, valuation, RationalFunction};

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

fn raw_poly(max_exp: u32) -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    prop::collection::vec(
        (-9i64..9, 0u32..=max_exp, 0u32..=max_exp),
        0..6,
    )
}

fn to_class(ring: &std::sync::Arc<steencalc::chow::RingSpec>, terms: &[(i64, u32, u32)]) -> CycleClass {
    let raw: Vec<RawTerm> = terms
        .iter()
        .map(|&(c, e1, e2)| RawTerm {
            coeff: c,
            factors: vec![("h1".into(), e1), ("h2".into(), e2)],
        })
        .collect();
    CycleClass::normalize(ring, &raw).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cycle_ring_laws(p in prime(), a in raw_poly(3), b in raw_poly(3), c in raw_poly(3)) {
        let ring = presets::projective_product(&[2, 3], PrimeModulus::new(p).unwrap());
        let a = to_class(&ring, &a);
        let b = to_class(&ring, &b);
        let c = to_class(&ring, &c);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn unit_series_inverts_exactly(p in prime(), u in raw_poly(3)) {
        let ring = presets::projective_product(&[2, 3], PrimeModulus::new(p).unwrap());
        let u = to_class(&ring, &u);
        let u = u.sub(&u.graded_component(0)).unwrap();
        let a = CycleClass::one(&ring).add(&u).unwrap();
        let inv = a.invert_unit_series().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), CycleClass::one(&ring));
    }

    #[test]
    fn negative_binomial_identity(p in prop::sample::select(vec![2u64, 3, 5, 7]),
                                  n in 1u64..60, k in 0u64..60) {
        let p = PrimeModulus::new(p).unwrap();
        let lhs = binom_neg_mod_p(n, k, p);
        let rhs = {
            let b = binom_mod_p(n + k - 1, k, p);
            if k % 2 == 0 { b } else { b.neg() }
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pth_power_classes_are_equivalence(q in prop::sample::select(vec![5u64, 7, 11, 13]),
                                         p in prime(),
                                         u in 1u64..13, v in 1u64..13, w in 1u64..13) {
        prop_assume!(q % p != 0);
        let field = FqField::new(q).unwrap();
        let p = PrimeModulus::new(p).unwrap();
        let u = field.from_int((u % (q - 1) + 1) as i64);
        let v = field.from_int((v % (q - 1) + 1) as i64);
        let w = field.from_int((w % (q - 1) + 1) as i64);
        // reflexive, symmetric
        prop_assert!(same_class(&field, &u, &u, p).unwrap());
        prop_assert_eq!(
            same_class(&field, &u, &v, p).unwrap(),
            same_class(&field, &v, &u, p).unwrap()
        );
        // transitive on this triple
        if same_class(&field, &u, &v, p).unwrap() && same_class(&field, &v, &w, p).unwrap() {
            prop_assert!(same_class(&field, &u, &w, p).unwrap());
        }
        // multiplying by a p-th power fixes the class
        let shifted = field.mul(&u, &field.pow(&w, p.get()));
        prop_assert!(same_class(&field, &shifted, &u, p).unwrap());
    }

    #[test]
    fn valuations_are_additive(q in prop::sample::select(vec![5u64, 7, 13]),
                               num1 in prop::collection::vec(-6i64..6, 1..4),
                               num2 in prop::collection::vec(-6i64..6, 1..4)) {
        let field = FqField::new(q).unwrap();
        let mk = |cs: &[i64]| {
            Poly::from_coeffs(&field, cs.iter().map(|&c| field.from_int(c)).collect())
        };
        let n1 = mk(&num1);
        let n2 = mk(&num2);
        prop_assume!(!n1.is_zero() && !n2.is_zero());
        let f = RationalFunction::from_poly(&field, n1);
        let g = RationalFunction::from_poly(&field, n2);
        let product = f.mul(&g, &field).unwrap();
        let mut places = support(&field, &product).unwrap();
        for extra in support(&field, &f).unwrap().into_iter().chain(support(&field, &g).unwrap()) {
            if !places.contains(&extra) {
                places.push(extra);
            }
        }
        for x in &places {
            let lhs = valuation(&field, &product, x).unwrap();
            let rhs = valuation(&field, &f, x).unwrap() + valuation(&field, &g, x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
