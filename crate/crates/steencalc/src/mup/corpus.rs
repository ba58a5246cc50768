//! A fixed corpus of graded algebras used by the equivalence, deformation,
//! and twist suites: Kummer algebras, truncated cones, group algebras,
//! direct products, and twists of all of these, over several primes and
//! fields (including two proper prime-power fields).

use super::{twist, GradedAlgebra};
use crate::arith::{FqField, PrimeModulus};

pub struct CorpusMember {
    pub label: String,
    pub algebra: GradedAlgebra,
    /// The known classification, when construction determines it.
    pub expect_torsor: Option<bool>,
}

/// At least sixty members; deterministic construction order.
pub fn algebra_corpus() -> Vec<CorpusMember> {
    let mut out: Vec<CorpusMember> = Vec::new();
    let qs = [5u64, 7, 11, 13];
    let ps = [2u64, 3, 5];

    let mut push = |label: String, algebra: GradedAlgebra, expect: Option<bool>| {
        out.push(CorpusMember { label, algebra, expect_torsor: expect });
    };

    for &q in &qs {
        let field = FqField::new(q).expect("prime field");
        for &p in &ps {
            if q % p == 0 {
                continue;
            }
            let p = PrimeModulus::new(p).expect("prime");
            // Kummer algebras for three parameters
            for a_int in [1i64, 2, 3] {
                let a = field.from_int(a_int);
                let alg = GradedAlgebra::kummer(field.clone(), p, &a).expect("kummer");
                push(format!("kummer(q={q}, p={p}, a={a_int})"), alg, Some(true));
            }
            // the group algebra (trivial torsor)
            let group = GradedAlgebra::group_algebra(field.clone(), p).expect("group");
            push(format!("group(q={q}, p={p})"), group, Some(true));
            // truncated cones: trivial action (m = 1) and genuine cones
            for m in [1usize, 3, 4] {
                let cone = GradedAlgebra::truncated_cone(field.clone(), p, m).expect("cone");
                push(format!("cone(q={q}, p={p}, m={m})"), cone, Some(false));
            }
        }
    }

    // extension fields
    let f4 = FqField::new(4).expect("F_4");
    let p3 = PrimeModulus::new(3).unwrap();
    let gen4 = f4.generator();
    push(
        "kummer(q=4, p=3, a=x)".into(),
        GradedAlgebra::kummer(f4.clone(), p3, &gen4).expect("kummer over F_4"),
        Some(true),
    );
    push(
        "cone(q=4, p=3, m=4)".into(),
        GradedAlgebra::truncated_cone(f4, p3, 4).expect("cone over F_4"),
        Some(false),
    );
    let f9 = FqField::new(9).expect("F_9");
    let p2 = PrimeModulus::new(2).unwrap();
    let gen9 = f9.add(&f9.generator(), &f9.one());
    push(
        "kummer(q=9, p=2, a=x+1)".into(),
        GradedAlgebra::kummer(f9.clone(), p2, &gen9).expect("kummer over F_9"),
        Some(true),
    );
    push(
        "cone(q=9, p=2, m=3)".into(),
        GradedAlgebra::truncated_cone(f9, p2, 3).expect("cone over F_9"),
        Some(false),
    );

    // direct products: torsor x torsor, torsor x cone, cone x cone
    let f7 = FqField::new(7).unwrap();
    let k73 = GradedAlgebra::kummer(f7.clone(), p3, &f7.from_int(3)).unwrap();
    let g73 = GradedAlgebra::group_algebra(f7.clone(), p3).unwrap();
    let c73 = GradedAlgebra::truncated_cone(f7.clone(), p3, 3).unwrap();
    push(
        "product(kummer, group; q=7, p=3)".into(),
        GradedAlgebra::direct_product(&k73, &g73).unwrap(),
        Some(true),
    );
    push(
        "product(kummer, cone; q=7, p=3)".into(),
        GradedAlgebra::direct_product(&k73, &c73).unwrap(),
        Some(false),
    );
    push(
        "product(cone, cone; q=7, p=3)".into(),
        GradedAlgebra::direct_product(&c73, &c73).unwrap(),
        Some(false),
    );
    let f5 = FqField::new(5).unwrap();
    let k52 = GradedAlgebra::kummer(f5.clone(), p2, &f5.from_int(2)).unwrap();
    let c52 = GradedAlgebra::truncated_cone(f5.clone(), p2, 4).unwrap();
    push(
        "product(kummer, kummer; q=5, p=2)".into(),
        GradedAlgebra::direct_product(&k52, &k52).unwrap(),
        Some(true),
    );
    push(
        "product(kummer, cone; q=5, p=2)".into(),
        GradedAlgebra::direct_product(&k52, &c52).unwrap(),
        Some(false),
    );

    // twists of everything twistable (k = 2 when p > 2)
    let twisted: Vec<CorpusMember> = out
        .iter()
        .filter(|m| m.algebra.prime().get() > 2)
        .map(|m| CorpusMember {
            label: format!("twist({}, k=2)", m.label),
            algebra: twist(&m.algebra, 2).expect("twist"),
            expect_torsor: m.expect_torsor,
        })
        .collect();
    out.extend(twisted);
    out
}
