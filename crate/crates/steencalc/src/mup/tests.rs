use super::*;
use crate::arith::{FqField, PrimeModulus};

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn fq(q: u64) -> FqField {
    FqField::new(q).unwrap()
}

fn kummer_f7_3() -> GradedAlgebra {
    let f = fq(7);
    let a = f.from_int(3);
    GradedAlgebra::kummer(f, pm(3), &a).unwrap()
}

#[test]
fn component_products() {
    // F_7[t]/(t^3 - 3): R_1 R_2 = R_0 since t * t^2 = 3
    let a = kummer_f7_3();
    let prod = a.component_product(1, 2);
    assert_eq!(prod.grade(), 0);
    assert_eq!(prod.dim(), 1);
    assert!(a.subspace_eq(&prod, &a.full_component(0)));

    // F_5[t]/(t^3) cone: R_1 R_2 = 0 because t^3 = 0
    let cone = GradedAlgebra::truncated_cone(fq(5), pm(3), 3).unwrap();
    assert_eq!(cone.component_product(1, 2).dim(), 0);

    // trivial grading: positive components are zero
    let trivial = GradedAlgebra::truncated_cone(fq(5), pm(3), 1).unwrap();
    assert_eq!(trivial.component_product(1, 2).dim(), 0);
}

#[test]
fn fixed_ideal_values() {
    let a = kummer_f7_3();
    assert!(a.subspace_eq(&a.fixed_ideal(), &a.full_component(0)));
    let cone = GradedAlgebra::truncated_cone(fq(5), pm(3), 3).unwrap();
    assert_eq!(cone.fixed_ideal().dim(), 0);
    let trivial = GradedAlgebra::truncated_cone(fq(5), pm(3), 1).unwrap();
    assert_eq!(trivial.fixed_ideal().dim(), 0);
}

#[test]
fn fixed_point_quotients() {
    // torsor: zero algebra
    assert!(kummer_f7_3().fixed_point_quotient().is_zero());
    // trivial action: R_0 itself
    let trivial = GradedAlgebra::truncated_cone(fq(5), pm(3), 1).unwrap();
    assert_eq!(trivial.fixed_point_quotient().dim(), 1);
    // cone: the quotient is the base field (image of the zero section)
    let cone = GradedAlgebra::truncated_cone(fq(5), pm(3), 3).unwrap();
    assert_eq!(cone.fixed_point_quotient().dim(), 1);
    // a cone fat enough to have dim R_0 > 1 still collapses to the base
    let cone6 = GradedAlgebra::truncated_cone(fq(5), pm(3), 6).unwrap();
    assert_eq!(cone6.grade_dims()[0], 2);
    assert_eq!(cone6.fixed_point_quotient().dim(), 1);
}

#[test]
fn torsor_conditions_all_or_nothing() {
    let report = torsor_check(&kummer_f7_3());
    assert!(report.is_torsor());
    assert!(!report.is_mixed());
    assert_eq!(report.coaction_matrix_bijective, Some(true));

    let cone = GradedAlgebra::truncated_cone(fq(5), pm(3), 3).unwrap();
    let report = torsor_check(&cone);
    assert!(!report.is_torsor());
    assert!(!report.is_mixed());
    assert!(report.conditions().iter().all(|&b| !b));

    // the group algebra is the trivial torsor
    let trivial_torsor = GradedAlgebra::group_algebra(fq(5), pm(3)).unwrap();
    let report = torsor_check(&trivial_torsor);
    assert!(report.is_torsor());
}

#[test]
fn kummer_parameter_classes() {
    // parameter of F_7[t]/(t^3 - 3) is the nontrivial class of 3
    let a = kummer_f7_3();
    let class = kummer_parameter(&a).unwrap();
    assert_eq!(class.representative(), &fq(7).from_int(3));
    assert!(!class.is_trivial().unwrap());

    // trivial torsor gives the trivial class
    let t = GradedAlgebra::group_algebra(fq(7), pm(3)).unwrap();
    assert!(kummer_parameter(&t).unwrap().is_trivial().unwrap());

    // F_5[t]/(t^3 - 2): cubing is a bijection on F_5, class trivial
    let f5 = fq(5);
    let a2 = GradedAlgebra::kummer(f5.clone(), pm(3), &f5.from_int(2)).unwrap();
    assert!(kummer_parameter(&a2).unwrap().is_trivial().unwrap());

    // non-torsors are refused
    let cone = GradedAlgebra::truncated_cone(fq(5), pm(3), 3).unwrap();
    assert!(kummer_parameter(&cone).is_err());
}

#[test]
fn twist_regrades() {
    let a = kummer_f7_3();
    // k = 1 is the identity on gradings
    let t1 = twist(&a, 1).unwrap();
    assert_eq!(t1.grade_dims(), a.grade_dims());
    assert_eq!(kummer_parameter(&t1).unwrap().representative(), &fq(7).from_int(3));

    // twist by 2: R'_1 = R_2, parameter becomes (t^2)^3 = 9 = 2 = 3^2
    let t2 = twist(&a, 2).unwrap();
    let param = kummer_parameter(&t2).unwrap();
    assert_eq!(param.representative(), &fq(7).from_int(2));

    // double twist k then k' returns the original grading
    let back = twist(&t2, 2).unwrap(); // 2 * 2 = 4 = 1 mod 3
    let orig_param = kummer_parameter(&a).unwrap();
    let back_param = kummer_parameter(&back).unwrap();
    assert!(orig_param.equals(&back_param).unwrap());
    assert_eq!(back.grade_dims(), a.grade_dims());

    // k = 0 mod p is rejected
    assert!(twist(&a, 3).is_err());
}

#[test]
fn twist_preserves_fixed_ideal() {
    for q in [5u64, 7, 13] {
        let f = fq(q);
        for p in [2u64, 3, 5] {
            if q % p == 0 {
                continue;
            }
            let cone = GradedAlgebra::truncated_cone(f.clone(), pm(p), 4).unwrap();
            for k in 1..p {
                let t = twist(&cone, k).unwrap();
                assert_eq!(t.fixed_ideal().dim(), cone.fixed_ideal().dim());
                assert_eq!(t.fixed_ideal().basis(), cone.fixed_ideal().basis());
            }
        }
    }
}

#[test]
fn twist_law_on_parameters() {
    for q in [5u64, 7, 11, 13] {
        let f = fq(q);
        for p in [2u64, 3, 5] {
            if q % p == 0 {
                continue;
            }
            for a_int in 1..q.min(8) {
                let a_el = f.from_int(a_int as i64);
                let alg = GradedAlgebra::kummer(f.clone(), pm(p), &a_el).unwrap();
                let base = kummer_parameter(&alg).unwrap();
                for k in 1..p {
                    let twisted = twist(&alg, k).unwrap();
                    let lhs = kummer_parameter(&twisted).unwrap();
                    assert!(
                        lhs.equals(&base.pow(k)).unwrap(),
                        "q={q} p={p} a={a_int} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn deformation_identity() {
    // base case: both sides equal I at k = 1 on anything
    let a = kummer_f7_3();
    let report = deformation_report(&a, 4);
    assert!(report.holds());
    assert_eq!(report.quotient_dim, 0);

    // trivial action: J = 0, identity vacuous
    let trivial = GradedAlgebra::truncated_cone(fq(5), pm(3), 1).unwrap();
    assert!(deformation_check(&trivial, 4));

    // the worked example: F_q[x,y]/(x^2, y^2, xy), deg x = 1, deg y = 2
    let f = fq(5);
    let names = vec!["e".into(), "x".into(), "y".into()];
    let z = || vec![f.zero(), f.zero(), f.zero()];
    let e = |i: usize| {
        let mut v = z();
        v[i] = f.one();
        v
    };
    let mut table = vec![vec![z(); 3]; 3];
    table[0][0] = e(0);
    table[0][1] = e(1);
    table[1][0] = e(1);
    table[0][2] = e(2);
    table[2][0] = e(2);
    // x^2 = y^2 = xy = 0 already zero
    let alg =
        GradedAlgebra::from_table(pm(3), f.clone(), vec![1, 1, 1], names, e(0), table).unwrap();
    assert!(deformation_check(&alg, 3));

    // cones of every depth satisfy the identity
    for m in 2..=6 {
        let cone = GradedAlgebra::truncated_cone(fq(7), pm(2), m).unwrap();
        assert!(deformation_check(&cone, 4), "cone m={m}");
    }
}

#[test]
fn augmentation_ideal_is_ideal() {
    for alg in [
        kummer_f7_3(),
        GradedAlgebra::truncated_cone(fq(5), pm(3), 5).unwrap(),
        GradedAlgebra::group_algebra(fq(11), pm(2)).unwrap(),
    ] {
        let j = alg.augmentation_ideal();
        assert!(alg.is_graded_ideal(&j));
    }
}

#[test]
fn direct_products_compose() {
    let f = fq(7);
    let a = GradedAlgebra::kummer(f.clone(), pm(3), &f.from_int(3)).unwrap();
    let b = GradedAlgebra::group_algebra(f.clone(), pm(3)).unwrap();
    let prod = GradedAlgebra::direct_product(&a, &b).unwrap();
    assert_eq!(prod.total_dim(), 6);
    // product of torsors is a torsor (disjoint union downstairs)
    let report = torsor_check(&prod);
    assert!(report.is_torsor());
    assert!(!report.is_mixed());
    // R_0 is F_7 x F_7, not a field: the coaction condition is skipped
    assert_eq!(report.coaction_matrix_bijective, None);

    // torsor x non-torsor: all conditions false, never mixed
    let cone = GradedAlgebra::truncated_cone(f.clone(), pm(3), 3).unwrap();
    let bad = GradedAlgebra::direct_product(&a, &cone).unwrap();
    let report = torsor_check(&bad);
    assert!(!report.is_torsor());
    assert!(!report.is_mixed());
}

#[test]
fn fiber_decompositions() {
    let f7 = fq(7);
    // inert point of degree 3
    let d = fiber_decomposition(7, pm(3), &f7.from_int(3)).unwrap();
    assert_eq!(d, vec![(3, 1)]);
    // split completely: three rational points
    let d = fiber_decomposition(7, pm(3), &f7.one()).unwrap();
    assert_eq!(d, vec![(1, 3)]);
    // mixed: degrees 1 + 2
    let f5 = fq(5);
    let d = fiber_decomposition(5, pm(3), &f5.from_int(2)).unwrap();
    assert_eq!(d, vec![(1, 1), (2, 1)]);
    // zero parameter rejected
    assert!(fiber_decomposition(5, pm(3), &f5.zero()).is_err());
}

#[test]
fn invalid_tables_are_rejected() {
    let f = fq(5);
    // a non-associative table: e*e = e, x*x = e, e*x = 0 breaks the unit law
    let z = || vec![f.zero(), f.zero()];
    let e0 = vec![f.one(), f.zero()];
    let mut table = vec![vec![z(); 2]; 2];
    table[0][0] = e0.clone();
    table[1][1] = e0.clone();
    // e*x = 0 violates the unit law
    let err = GradedAlgebra::from_table(
        pm(3),
        f.clone(),
        vec![1, 1, 0],
        vec!["e".into(), "x".into()],
        e0.clone(),
        table,
    );
    assert!(err.is_err());
    // characteristic p base fields are rejected
    let f3 = fq(3);
    let a = f3.one();
    assert!(GradedAlgebra::kummer(f3, pm(3), &a).is_err());
}

#[test]
fn extension_field_algebras() {
    // the machinery works over F_4 and F_9 as well
    let f4 = fq(4);
    let gen = f4.generator();
    let alg = GradedAlgebra::kummer(f4, pm(3), &gen).unwrap();
    let report = torsor_check(&alg);
    assert!(report.is_torsor());
    // F_4^x is cyclic of order 3, so the only cube is 1 and x is a non-cube
    assert!(!kummer_parameter(&alg).unwrap().is_trivial().unwrap());

    // x + 1 has order 8 in F_9^x ((x+1)^2 = 2x, (x+1)^4 = -1), so it is
    // not a square
    let f9 = fq(9);
    let gen9 = f9.add(&f9.generator(), &f9.one());
    assert_eq!(f9.pow(&gen9, 4), f9.from_int(-1));
    let alg9 = GradedAlgebra::kummer(f9.clone(), pm(2), &gen9).unwrap();
    assert!(torsor_check(&alg9).is_torsor());
    assert!(!kummer_parameter(&alg9).unwrap().is_trivial().unwrap());
    assert!(deformation_check(&alg9, 4));
}
