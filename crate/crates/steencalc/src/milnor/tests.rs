use super::*;
use crate::arith::{FqField, PrimeModulus};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fq(q: u64) -> FqField {
    FqField::new(q).unwrap()
}

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn poly(field: &FqField, cs: &[i64]) -> Poly {
    Poly::from_coeffs(field, cs.iter().map(|&c| field.from_int(c)).collect())
}

fn rf(field: &FqField, num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(field, poly(field, num), poly(field, den)).unwrap()
}

fn place_zero(field: &FqField) -> Place {
    Place::finite(field, Poly::x(field)).unwrap()
}

#[test]
fn canonical_form() {
    let f7 = fq(7);
    // (2t^2 - 2) / (2t - 2) = t + 1
    let f = rf(&f7, &[-2, 0, 2], &[-2, 2]);
    assert_eq!(*f.numerator(), poly(&f7, &[1, 1]));
    assert_eq!(*f.denominator(), Poly::one(&f7));
}

#[test]
fn valuations() {
    let f7 = fq(7);
    let t = rf(&f7, &[0, 1], &[1]);
    assert_eq!(valuation(&f7, &t, &place_zero(&f7)).unwrap(), 1);
    assert_eq!(valuation(&f7, &t, &Place::Infinity).unwrap(), -1);
    // v_{t-1}((t-1)^2 / t) = 2
    let g = rf(&f7, &[1, -2, 1], &[0, 1]);
    let at_one = Place::finite(&f7, poly(&f7, &[-1, 1])).unwrap();
    assert_eq!(valuation(&f7, &g, &at_one).unwrap(), 2);
    assert_eq!(valuation(&f7, &g, &place_zero(&f7)).unwrap(), -1);
    // the zero function is rejected
    assert!(valuation(&f7, &RationalFunction::zero(&f7), &Place::Infinity).is_err());
}

#[test]
fn places_validate_irreducibility() {
    let f7 = fq(7);
    // t^2 - 1 = (t-1)(t+1) is not a place
    assert!(Place::finite(&f7, poly(&f7, &[-1, 0, 1])).is_err());
    assert!(Place::finite(&f7, poly(&f7, &[3, 1])).is_ok());
}

#[test]
fn divisor_of_t() {
    let f7 = fq(7);
    let p3 = pm(3);
    let t = rf(&f7, &[0, 1], &[1]);
    let d = divisor_map(&f7, &t, p3).unwrap();
    assert_eq!(d.entries.len(), 2);
    match &d.entries[&place_zero(&f7)] {
        ResidueDatum::Multiplicity(m) => assert_eq!(m.residue(), 1),
        _ => panic!("degree-1 sources give multiplicities"),
    }
    match &d.entries[&Place::Infinity] {
        ResidueDatum::Multiplicity(m) => assert_eq!(m.residue(), 2), // -1 mod 3
        _ => panic!(),
    }
    // constants have empty divisor
    let c = RationalFunction::constant(&f7, f7.from_int(5));
    assert!(divisor_map(&f7, &c, p3).unwrap().entries.is_empty());
    // p-th powers vanish mod p
    let cube = t.pow(3, &f7).unwrap();
    assert!(divisor_map(&f7, &cube, p3).unwrap().entries.is_empty());
}

#[test]
fn degree_formula() {
    // sum of deg(x) * v_x(f) = 0 including infinity
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for q in [5u64, 7, 13] {
        let field = fq(q);
        for _ in 0..40 {
            let mut num = poly(
                &field,
                &(0..rng.gen_range(1..5)).map(|_| rng.gen_range(-6..6)).collect::<Vec<_>>(),
            );
            if num.is_zero() {
                num = Poly::one(&field);
            }
            let mut den = poly(
                &field,
                &(0..rng.gen_range(1..5)).map(|_| rng.gen_range(-6..6)).collect::<Vec<_>>(),
            );
            if den.is_zero() {
                den = Poly::one(&field);
            }
            let f = RationalFunction::new(&field, num, den).unwrap();
            if f.is_zero() {
                continue;
            }
            let mut total = 0i64;
            for place in support(&field, &f).unwrap() {
                total += place.degree() as i64 * valuation(&field, &f, &place).unwrap();
            }
            assert_eq!(total, 0, "q={q} f={}", f.display(&field));
        }
    }
}

#[test]
fn steinberg_relation_exact() {
    // the tame symbol of {f, 1-f} is trivial at every place
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [5u64, 7] {
        let field = fq(q);
        let p = pm(if q == 5 { 2 } else { 3 });
        for _ in 0..100 {
            let f = rf(
                &field,
                &(0..rng.gen_range(1..4)).map(|_| rng.gen_range(-5..5)).collect::<Vec<_>>(),
                &[1],
            );
            if f.is_zero() {
                continue;
            }
            let one_minus = RationalFunction::one(&field).sub(&f, &field).unwrap();
            if one_minus.is_zero() {
                continue;
            }
            let mut places = support(&field, &f).unwrap();
            for x in support(&field, &one_minus).unwrap() {
                if !places.contains(&x) {
                    places.push(x);
                }
            }
            for x in places {
                let t = tame_symbol(&field, &f, &one_minus, &x).unwrap();
                assert!(t.is_trivial(p).unwrap(), "q={q} at {}", x.display(&field));
            }
        }
    }
}

#[test]
fn tame_symbol_examples() {
    let f7 = fq(7);
    let p3 = pm(3);
    let zero = place_zero(&f7);
    // constants against t: the class of the constant
    let c = RationalFunction::constant(&f7, f7.from_int(3));
    let t = rf(&f7, &[0, 1], &[1]);
    let tame = tame_symbol(&f7, &c, &t, &zero).unwrap();
    let expected = Poly::constant(&f7, f7.from_int(3));
    assert!(tame.residue_field().same_class(&tame.representative(), &expected, p3).unwrap());
    // both units: trivial
    let u = rf(&f7, &[1, 1], &[1]);
    let v = rf(&f7, &[2, 1], &[1]);
    assert!(tame_symbol(&f7, &u, &v, &zero).unwrap().is_trivial(p3).unwrap());
}

#[test]
fn weil_reciprocity_mod_p() {
    // product over all places of Norm(tame class) is a p-th power in F_q^x
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (q, p) in [(7u64, 3u64), (13, 3), (5, 2)] {
        let field = fq(q);
        let p = pm(p);
        for _ in 0..30 {
            let rand_poly = |rng: &mut ChaCha8Rng| -> Poly {
                loop {
                    let cand = poly(
                        &field,
                        &(0..rng.gen_range(1..4)).map(|_| rng.gen_range(-6..6)).collect::<Vec<_>>(),
                    );
                    if !cand.is_zero() {
                        return cand;
                    }
                }
            };
            let f = RationalFunction::new(&field, rand_poly(&mut rng), rand_poly(&mut rng)).unwrap();
            let g = RationalFunction::new(&field, rand_poly(&mut rng), rand_poly(&mut rng)).unwrap();
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let mut places = support(&field, &f).unwrap();
            for x in support(&field, &g).unwrap() {
                if !places.contains(&x) {
                    places.push(x);
                }
            }
            if !places.contains(&Place::Infinity) {
                places.push(Place::Infinity);
            }
            let mut product = field.one();
            for x in &places {
                let tame = tame_symbol(&field, &f, &g, x).unwrap();
                let norm = tame.residue_field().norm(tame.representative()).unwrap();
                product = field.mul(&product, &norm);
            }
            // is the product a p-th power?
            let m = field.order() - 1;
            let ok = if m % p.get() == 0 {
                field.pow(&product, m / p.get()) == field.one()
            } else {
                true
            };
            assert!(ok, "q={q} p={p}");
        }
    }
}

#[test]
fn tame_bilinearity_residue_wise() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let field = fq(7);
    let p = pm(3);
    for _ in 0..50 {
        let mk = |rng: &mut ChaCha8Rng| loop {
            let f = rf(
                &field,
                &(0..rng.gen_range(1..4)).map(|_| rng.gen_range(-6..6)).collect::<Vec<_>>(),
                &[1],
            );
            if !f.is_zero() {
                return f;
            }
        };
        let f1 = mk(&mut rng);
        let f2 = mk(&mut rng);
        let g = mk(&mut rng);
        let f12 = f1.mul(&f2, &field).unwrap();
        let mut places = support(&field, &f12).unwrap();
        for x in support(&field, &g).unwrap().into_iter().chain([Place::Infinity]) {
            if !places.contains(&x) {
                places.push(x);
            }
        }
        for x in &places {
            let lhs = tame_symbol(&field, &f12, &g, x).unwrap();
            let rhs = tame_symbol(&field, &f1, &g, x)
                .unwrap()
                .mul(&tame_symbol(&field, &f2, &g, x).unwrap())
                .unwrap();
            assert!(lhs.same_class(&rhs, p).unwrap(), "at {}", x.display(&field));
        }
    }
}

#[test]
fn alpha_prepends() {
    let f7 = fq(7);
    let p3 = pm(3);
    let t = rf(&f7, &[0, 1], &[1]);
    let chain = SymbolChain::single(p3, vec![t.clone()]).unwrap();
    let a = RationalFunction::constant(&f7, f7.from_int(3));
    let bigger = alpha_apply(p3, &a, &chain).unwrap();
    assert_eq!(bigger.degree(), 2);
    assert_eq!(bigger.terms()[0].1[0], a);
    assert_eq!(bigger.terms()[0].1[1], t);
    // prepending twice overflows
    assert!(alpha_apply(p3, &a, &bigger).is_err());
    // zero entry rejected
    assert!(alpha_apply(p3, &RationalFunction::zero(&f7), &chain).is_err());
}

#[test]
fn anticommute_worked_example() {
    // a = 3 in F_7, f = t, p = 3: at t = 0 both classes are 3; at infinity
    // both are 3^{-1}
    let f7 = fq(7);
    let p3 = pm(3);
    let a = RationalFunction::constant(&f7, f7.from_int(3));
    let t = rf(&f7, &[0, 1], &[1]);
    let checks = anticommute_places(&f7, &a, &t, p3).unwrap();
    assert!(checks.iter().all(|c| c.applicable && c.holds));
    assert!(anticommute_check(&f7, &a, &t, p3).unwrap());
    // a = 1: both sides trivial everywhere
    let one = RationalFunction::one(&f7);
    assert!(anticommute_check(&f7, &one, &t, p3).unwrap());
}

#[test]
fn anticommute_randomized_with_nonconstant_a() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (q, p) in [(7u64, 3u64), (13, 3), (5, 2), (7, 2)] {
        let field = fq(q);
        let p = pm(p);
        for _ in 0..60 {
            let mk = |rng: &mut ChaCha8Rng| loop {
                let num = poly(
                    &field,
                    &(0..rng.gen_range(1..4)).map(|_| rng.gen_range(-6..6)).collect::<Vec<_>>(),
                );
                let den = poly(
                    &field,
                    &(0..rng.gen_range(1..3)).map(|_| rng.gen_range(-6..6)).collect::<Vec<_>>(),
                );
                if num.is_zero() || den.is_zero() {
                    continue;
                }
                return RationalFunction::new(&field, num, den).unwrap();
            };
            let a = mk(&mut rng);
            let f = mk(&mut rng);
            assert!(anticommute_check(&field, &a, &f, p).unwrap());
        }
    }
}

#[test]
fn pth_power_prepend_kills_residues() {
    // with a = c^p every boundary class of {a, f} is trivial
    let f7 = fq(7);
    let p3 = pm(3);
    let c = rf(&f7, &[1, 1], &[1]);
    let a = c.pow(3, &f7).unwrap();
    let t = rf(&f7, &[0, 1], &[1]);
    let chain = alpha_apply(p3, &a, &SymbolChain::single(p3, vec![t]).unwrap()).unwrap();
    let boundary = chain_boundary_classes(&f7, &chain, p3).unwrap();
    for (place, datum) in &boundary.entries {
        match datum {
            ResidueDatum::UnitClass(class) => {
                // at places where a itself has a pole/zero the tame class can
                // pick up the p-th power, still trivial mod p
                assert!(class.is_trivial(p3).unwrap(), "at {}", place.display(&f7));
            }
            ResidueDatum::Multiplicity(_) => panic!("degree-2 chain"),
        }
    }
}

#[test]
fn equal_characteristic_is_rejected() {
    let f7 = fq(7);
    let p7 = pm(7);
    let t = rf(&f7, &[0, 1], &[1]);
    assert!(divisor_map(&f7, &t, p7).is_err());
    assert!(anticommute_check(&f7, &t, &t, p7).is_err());
}
