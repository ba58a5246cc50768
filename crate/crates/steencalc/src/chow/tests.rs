use super::presets;
use super::*;
use crate::arith::PrimeModulus;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn raw(terms: &[(i64, &[(&str, u32)])]) -> RawPoly {
    terms
        .iter()
        .map(|(c, fs)| RawTerm {
            coeff: *c,
            factors: fs.iter().map(|(n, e)| (n.to_string(), *e)).collect(),
        })
        .collect()
}

#[test]
fn nilpotency_truncates() {
    let ring = presets::projective_space(2, pm(2));
    let h3 = CycleClass::normalize(&ring, &raw(&[(1, &[("h", 3)])])).unwrap();
    assert!(h3.is_zero());
}

#[test]
fn binomial_expansion_mod_2() {
    // (1+h)^3 in P^2, p = 2 -> 1 + h + h^2
    let ring = presets::projective_space(2, pm(2));
    let one_plus_h = CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 1)])])).unwrap();
    let cube = one_plus_h.pow(3).unwrap();
    let expected =
        CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 1)]), (1, &[("h", 2)])]))
            .unwrap();
    assert_eq!(cube, expected);
}

#[test]
fn product_ring_truncation() {
    let ring = presets::projective_product(&[1, 1], pm(3));
    let c = CycleClass::normalize(&ring, &raw(&[(1, &[("h1", 2), ("h2", 1)])])).unwrap();
    assert!(c.is_zero());
}

#[test]
fn unknown_generator_is_structured() {
    let ring = presets::projective_space(2, pm(2));
    let err = CycleClass::normalize(&ring, &raw(&[(1, &[("z", 1)])])).unwrap_err();
    assert!(matches!(err, Error::UnknownGenerator { .. }));
}

#[test]
fn normalize_is_idempotent_and_additive() {
    let ring = presets::projective_product(&[2, 2], pm(3));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let t1 = RawTerm {
            coeff: rng.gen_range(-9..9),
            factors: vec![("h1".into(), rng.gen_range(0..4)), ("h2".into(), rng.gen_range(0..4))],
        };
        let t2 = RawTerm {
            coeff: rng.gen_range(-9..9),
            factors: vec![("h1".into(), rng.gen_range(0..4))],
        };
        let joint = CycleClass::normalize(&ring, &vec![t1.clone(), t2.clone()]).unwrap();
        let split = CycleClass::normalize(&ring, &vec![t1])
            .unwrap()
            .add(&CycleClass::normalize(&ring, &vec![t2]).unwrap())
            .unwrap();
        assert_eq!(joint, split);
        // idempotence: re-normalizing the table reproduces it
        let table: RawPoly = joint
            .terms()
            .map(|(m, c)| RawTerm {
                coeff: c.residue() as i64,
                factors: m
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (ring.generators()[i].name.clone(), e))
                    .collect(),
            })
            .collect();
        assert_eq!(CycleClass::normalize(&ring, &table).unwrap(), joint);
    }
}

/// Independent multiplication oracle: exhaustive convolution over dense
/// coefficient arrays indexed by raw exponents, reduced only at the end by
/// nilpotency and total-codimension truncation. Valid on rule-free rings.
fn convolution_oracle(a: &CycleClass, b: &CycleClass) -> CycleClass {
    let ring = a.ring().clone();
    let p = ring.modulus().get();
    let n = ring.generators().len();
    let mut dense: std::collections::HashMap<Vec<u32>, u64> = Default::default();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(&x, &y)| x + y).collect();
            *dense.entry(m).or_insert(0) += ca.residue() * cb.residue();
        }
    }
    let mut raw: RawPoly = Vec::new();
    for (m, c) in dense {
        let mut keep = ring.total_codim(&m) <= ring.dimension();
        for (i, g) in ring.generators().iter().enumerate() {
            if let Some(nil) = g.nilpotency {
                if m[i] >= nil {
                    keep = false;
                }
            }
        }
        if keep && c % p != 0 {
            raw.push(RawTerm {
                coeff: (c % p) as i64,
                factors: (0..n).map(|i| (ring.generators()[i].name.clone(), m[i])).collect(),
            });
        }
    }
    CycleClass::normalize(&ring, &raw).unwrap()
}

#[test]
fn mul_matches_convolution_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for &p in &[2u64, 3, 5] {
        for dims in [vec![3u32], vec![2, 2], vec![1, 2, 3]] {
            let ring = presets::projective_product(&dims, pm(p));
            for _ in 0..40 {
                let a = random_class(&ring, &mut rng);
                let b = random_class(&ring, &mut rng);
                assert_eq!(a.mul(&b).unwrap(), convolution_oracle(&a, &b));
            }
        }
    }
}

fn random_class(ring: &std::sync::Arc<RingSpec>, rng: &mut ChaCha8Rng) -> CycleClass {
    let mut raw = Vec::new();
    for _ in 0..rng.gen_range(0..6) {
        let factors = ring
            .generators()
            .iter()
            .map(|g| (g.name.clone(), rng.gen_range(0..=g.nilpotency.unwrap_or(3))))
            .collect();
        raw.push(RawTerm { coeff: rng.gen_range(-10..10), factors });
    }
    CycleClass::normalize(ring, &raw).unwrap()
}

#[test]
fn ring_laws_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let ring = presets::projective_product(&[2, 3], pm(5));
    for _ in 0..60 {
        let a = random_class(&ring, &mut rng);
        let b = random_class(&ring, &mut rng);
        let c = random_class(&ring, &mut rng);
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let one = CycleClass::one(&ring);
        assert_eq!(a.mul(&one).unwrap(), a);
    }
}

#[test]
fn graded_components() {
    let ring = presets::projective_space(2, pm(2));
    let c = CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 1)]), (1, &[("h", 2)])]))
        .unwrap();
    let h = CycleClass::generator(&ring, "h").unwrap();
    assert_eq!(c.graded_component(1), h);
    assert!(c.graded_component(-1).is_zero());
    assert!(c.graded_component(5).is_zero());
    // components sum back
    let resum = c
        .graded_component(0)
        .add(&c.graded_component(1))
        .unwrap()
        .add(&c.graded_component(2))
        .unwrap();
    assert_eq!(resum, c);
}

#[test]
fn series_inversion() {
    // (1+h)^{-1} over P^2 mod 2 = 1 + h + h^2
    let ring = presets::projective_space(2, pm(2));
    let a = CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 1)])])).unwrap();
    let inv = a.invert_unit_series().unwrap();
    let expected =
        CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 1)]), (1, &[("h", 2)])]))
            .unwrap();
    assert_eq!(inv, expected);
    assert_eq!(a.mul(&inv).unwrap(), CycleClass::one(&ring));
    assert_eq!(CycleClass::one(&ring).invert_unit_series().unwrap(), CycleClass::one(&ring));
    // (1+h)^{-3} over P^2 mod 2 = 1 + h
    let cube_inv = inv.pow(3).unwrap();
    let expected = CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 1)])])).unwrap();
    assert_eq!(cube_inv, expected);

    let h = CycleClass::generator(&ring, "h").unwrap();
    assert!(h.invert_unit_series().is_err());
}

#[test]
fn inversion_randomized_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for &p in &[2u64, 3, 5] {
        for dims in [vec![4u32], vec![2, 2]] {
            let ring = presets::projective_product(&dims, pm(p));
            for _ in 0..200 {
                let mut u = random_class(&ring, &mut rng).sub(&CycleClass::one(&ring)).unwrap();
                u = u.sub(&u.graded_component(0)).unwrap(); // kill constant term
                let a = CycleClass::one(&ring).add(&u).unwrap();
                let inv = a.invert_unit_series().unwrap();
                assert_eq!(a.mul(&inv).unwrap(), CycleClass::one(&ring));
            }
        }
    }
}

#[test]
fn degree_pairing() {
    for n in 0..=4u32 {
        let ring = presets::projective_space(n, pm(3));
        let h = if n == 0 {
            CycleClass::one(&ring)
        } else {
            CycleClass::generator(&ring, "h").unwrap()
        };
        for i in 0..=n {
            let pair = h.pow(i).unwrap().mul(&h.pow(n - i).unwrap()).unwrap();
            assert_eq!(pair.degree().unwrap().residue(), 1, "h^{i} * h^{}", n - i);
        }
    }
    // degree over P^0 of 1 is 1
    let ring = presets::projective_space(0, pm(5));
    assert_eq!(CycleClass::one(&ring).degree().unwrap().residue(), 1);
}

#[test]
fn degree_examples_from_negative_binomials() {
    // deg over P^2, p=2 of (1+h)^{-3} = 0
    let ring = presets::projective_space(2, pm(2));
    let a = CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 1)])])).unwrap();
    let inv3 = a.invert_unit_series().unwrap().pow(3).unwrap();
    assert_eq!(inv3.degree().unwrap().residue(), 0);
    // deg over P^2, p=3 of (1+h^2)^{-3}: coefficient of h^2 is C(-3,1) = 0 mod 3
    let ring = presets::projective_space(2, pm(3));
    let b = CycleClass::normalize(&ring, &raw(&[(1, &[]), (1, &[("h", 2)])])).unwrap();
    let inv3 = b.invert_unit_series().unwrap().pow(3).unwrap();
    assert_eq!(inv3.degree().unwrap().residue(), 0);
    // degree is unsupported away from projective products
    let base = presets::projective_space(1, pm(2));
    let h = CycleClass::generator(&base, "h").unwrap();
    let pb = presets::projective_bundle(&base, &[h], "g").unwrap();
    assert!(CycleClass::one(&pb).degree().is_err());
}

#[test]
fn projective_bundle_relation() {
    // P(E) for E = O + O(1) over P^1: g^2 = -(h g); dimension 2
    let base = presets::projective_space(1, pm(5));
    let h = CycleClass::generator(&base, "h").unwrap();
    let ring = presets::projective_bundle(&base, &[h, CycleClass::zero(&base)], "g").unwrap();
    assert_eq!(ring.dimension(), 2);
    let g = CycleClass::generator(&ring, "g").unwrap();
    let h = CycleClass::generator(&ring, "h").unwrap();
    let g2 = g.pow(2).unwrap();
    let expected = h.mul(&g).unwrap().scale(-1);
    assert_eq!(g2, expected);
    // g^3 = -(h g^2) = h^2 g = 0 in codim 3 > 2
    assert!(g.pow(3).unwrap().is_zero());
}

#[test]
fn preset_names() {
    assert!(presets::by_name("P4", pm(2)).is_ok());
    assert!(presets::by_name("P1xP2", pm(3)).is_ok());
    assert!(presets::by_name("P1xP1xP2", pm(3)).is_ok());
    assert!(presets::by_name("Q4", pm(2)).is_err());
    assert!(presets::by_name("Px", pm(2)).is_err());
}

#[test]
fn ring_mismatch_is_structured() {
    let r1 = presets::projective_space(2, pm(2));
    let r2 = presets::projective_space(3, pm(2));
    let a = CycleClass::one(&r1);
    let b = CycleClass::one(&r2);
    assert!(matches!(a.add(&b), Err(Error::RingMismatch(_))));
    assert!(matches!(a.mul(&b), Err(Error::RingMismatch(_))));
    // structurally equal rings interoperate even as separate allocations
    let r3 = presets::projective_space(2, pm(2));
    let c = CycleClass::one(&r3);
    assert_eq!(a.add(&c).unwrap(), a.scale(2));
}

#[test]
fn coefficient_table_keys() {
    let ring = presets::projective_product(&[2, 2], pm(3));
    let c = CycleClass::normalize(
        &ring,
        &raw(&[(2, &[("h1", 1), ("h2", 2)]), (1, &[("h1", 1)]), (1, &[])]),
    )
    .unwrap();
    let table = c.coefficient_table();
    let keys: Vec<&String> = table.keys().collect();
    assert_eq!(keys, vec!["1", "h1", "h1*h2^2"]);
    assert_eq!(table["h1*h2^2"], 2);
}

#[test]
fn non_terminating_rules_error_instead_of_hanging() {
    // g -> g loops forever; the step cap reports it as a domain error
    let ring = RingSpec::new(
        pm(2),
        2,
        vec![Generator { name: "g".into(), codim: 1, nilpotency: None }],
        vec![RewriteRule { lhs: vec![1], rhs: vec![(vec![1], 1)] }],
        RingKind::General,
        "loop",
    )
    .unwrap();
    let err = CycleClass::generator(&ring, "g");
    assert!(matches!(err, Err(Error::Domain(_))));
}
