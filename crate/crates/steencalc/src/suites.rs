//! Named property suites behind `steenrod verify`. Each suite runs a fixed
//! case list (randomized cases draw from a seeded generator), records
//! failures with their inputs, and reports deterministically: the same seed
//! produces byte-identical output apart from the wall-time field.
//!
//! Suite names, and the acceptance criterion each one carries:
//! `pthpower` (1), `prx-divisibility` (2), `bclass`/`omega`/`mu` (3),
//! `cone-pipeline` (4), `pullback`/`pushforward` (5),
//! `torsor-equivalence` (6), `deformation` (7), `fibers` (8),
//! `anticommute` (9), `twist` (10), `lucas` (11). `cartan` re-asserts the
//! multiplicativity the operation is built on.

use crate::arith::{binom_mod_p, binom_neg_mod_p, FqField, PrimeModulus};
use crate::chow::{presets, CycleClass, RawTerm, RingSpec};
use crate::classes::{
    b_class, b_class_neg, mu_class, omega_class, segre_total,
    tensor_h_filtration, whitney_sum, BundleClass, FilteredGBundle,
};
use crate::error::{Error, Result};
use crate::milnor::{
    anticommute_check, support, tame_symbol, Place, RationalFunction,
};
use crate::mup::corpus::algebra_corpus;
use crate::mup::{deformation_report, fiber_decomposition, kummer_parameter, torsor_check, twist};
use crate::steenrod::subcone::{cone_pipeline, SupportedCycle};
use crate::steenrod::{pushforward_projection, MorphismSpec, VarietySpec};
use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::sync::Arc;
use std::time::Instant;

pub const SUITE_NAMES: &[&str] = &[
    "pthpower",
    "cartan",
    "pullback",
    "pushforward",
    "prx-divisibility",
    "bclass",
    "omega",
    "mu",
    "torsor-equivalence",
    "deformation",
    "fibers",
    "anticommute",
    "lucas",
    "cone-pipeline",
    "twist",
];

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub wall_ms: u128,
    pub seed: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Ctx {
    rng: ChaCha8Rng,
    cases: u64,
    failures: Vec<Failure>,
}

impl Ctx {
    fn new(seed: u64) -> Self {
        Ctx { rng: ChaCha8Rng::seed_from_u64(seed), cases: 0, failures: Vec::new() }
    }

    fn case(&mut self, ok: bool, label: impl Fn() -> String, detail: impl Fn() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure { case: label(), detail: detail() });
        }
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut ctx = Ctx::new(seed);
    match name {
        "pthpower" => pthpower_suite(&mut ctx)?,
        "cartan" => cartan_suite(&mut ctx)?,
        "pullback" => pullback_suite(&mut ctx)?,
        "pushforward" => pushforward_suite(&mut ctx)?,
        "prx-divisibility" => prx_divisibility_suite(&mut ctx)?,
        "bclass" => bclass_suite(&mut ctx)?,
        "omega" => omega_suite(&mut ctx)?,
        "mu" => mu_suite(&mut ctx)?,
        "torsor-equivalence" => torsor_equivalence_suite(&mut ctx)?,
        "deformation" => deformation_suite(&mut ctx)?,
        "fibers" => fibers_suite(&mut ctx)?,
        "anticommute" => anticommute_suite(&mut ctx)?,
        "lucas" => lucas_suite(&mut ctx)?,
        "cone-pipeline" => cone_pipeline_suite(&mut ctx)?,
        "twist" => twist_suite(&mut ctx)?,
        _ => {
            return Err(Error::Input(format!(
                "unknown suite `{name}`; available: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        cases: ctx.cases,
        failures: ctx.failures,
        wall_ms: start.elapsed().as_millis(),
        seed,
    })
}

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).expect("suite primes are prime")
}

const SUITE_PRIMES: [u64; 3] = [2, 3, 5];

fn operation_presets() -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (1..=6u32).map(|n| vec![n]).collect();
    for n1 in 1..=4u32 {
        for n2 in n1..=4u32 {
            out.push(vec![n1, n2]);
        }
    }
    out
}

fn preset_label(dims: &[u32]) -> String {
    dims.iter().map(|n| format!("P{n}")).collect::<Vec<_>>().join("x")
}

/// A random class, homogeneous of the returned codimension.
fn random_homogeneous(
    ring: &Arc<RingSpec>,
    rng: &mut ChaCha8Rng,
    codim: u32,
) -> CycleClass {
    let monos = ring.monomials_of_codim(codim);
    let p = ring.modulus().get() as i64;
    let raw: Vec<RawTerm> = monos
        .iter()
        .map(|m| RawTerm {
            coeff: rng.gen_range(0..p),
            factors: m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (ring.generators()[i].name.clone(), e))
                .collect(),
        })
        .collect();
    CycleClass::normalize(ring, &raw).expect("generated over own generators")
}

// ---- criterion 1 ----

fn pthpower_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        for dims in operation_presets() {
            let x = VarietySpec::projective_product(&dims, pm(p));
            let ring = x.ring().clone();
            let label = preset_label(&dims);
            let mut classes: Vec<CycleClass> = Vec::new();
            for k in 0..=ring.dimension() {
                for m in ring.monomials_of_codim(k) {
                    let raw = RawTerm {
                        coeff: 1,
                        factors: m
                            .iter()
                            .enumerate()
                            .filter(|(_, &e)| e > 0)
                            .map(|(i, &e)| (ring.generators()[i].name.clone(), e))
                            .collect(),
                    };
                    classes.push(CycleClass::normalize(&ring, &vec![raw])?);
                }
            }
            for _ in 0..200 {
                let codim = ctx.rng.gen_range(0..=ring.dimension());
                classes.push(random_homogeneous(&ring, &mut ctx.rng, codim));
            }
            for (i, delta) in classes.iter().enumerate() {
                if delta.is_zero() {
                    continue;
                }
                let k = delta
                    .homogeneous_codim()
                    .expect("generated homogeneous") as i64;
                let s0 = x.coh_k(delta, 0)?;
                ctx.case(
                    s0 == *delta,
                    || format!("pthpower p={p} {label} case {i} S^0"),
                    || format!("S^0({delta}) = {s0}"),
                );
                let sk = x.coh_k(delta, k)?;
                let pth = delta.pow(p as u32)?;
                ctx.case(
                    sk == pth,
                    || format!("pthpower p={p} {label} case {i} S^k"),
                    || format!("S^{k}({delta}) = {sk}, expected {pth}"),
                );
                for r in [-2i64, -1, k + 1, k + 2, k + 3] {
                    let sr = x.coh_k(delta, r)?;
                    ctx.case(
                        sr.is_zero(),
                        || format!("pthpower p={p} {label} case {i} S^{r}"),
                        || format!("S^{r}({delta}) = {sr}, expected 0"),
                    );
                }
            }
            // additivity: S^j(a+b) = S^j(a) + S^j(b) and (a+b)^p = a^p + b^p
            for i in 0..40 {
                let codim = ctx.rng.gen_range(1..=ring.dimension());
                let a = random_homogeneous(&ring, &mut ctx.rng, codim);
                let b = random_homogeneous(&ring, &mut ctx.rng, codim);
                let sum = a.add(&b)?;
                let freshman = sum.pow(p as u32)?
                    == a.pow(p as u32)?.add(&b.pow(p as u32)?)?;
                ctx.case(
                    freshman,
                    || format!("pthpower p={p} {label} additivity-power {i}"),
                    || format!("(a+b)^p != a^p + b^p for a={a}, b={b}"),
                );
                for j in 0..=codim as i64 {
                    let lhs = x.coh_k(&sum, j)?;
                    let rhs = x.coh_k(&a, j)?.add(&x.coh_k(&b, j)?)?;
                    ctx.case(
                        lhs == rhs,
                        || format!("pthpower p={p} {label} additivity {i} j={j}"),
                        || format!("S^{j} not additive on a={a}, b={b}"),
                    );
                }
            }
        }
    }
    Ok(())
}

// ---- regression: multiplicativity ----

fn cartan_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        for dims in operation_presets() {
            let x = VarietySpec::projective_product(&dims, pm(p));
            let ring = x.ring().clone();
            let label = preset_label(&dims);
            for i in 0..500 {
                let ka = ctx.rng.gen_range(0..=ring.dimension());
                let kb = ctx.rng.gen_range(0..=ring.dimension());
                let a = random_homogeneous(&ring, &mut ctx.rng, ka);
                let b = random_homogeneous(&ring, &mut ctx.rng, kb);
                let lhs = x.coh_total(&a.mul(&b)?)?;
                let rhs = x.coh_total(&a)?.mul(&x.coh_total(&b)?)?;
                ctx.case(
                    lhs == rhs,
                    || format!("cartan p={p} {label} case {i}"),
                    || format!("S(ab) != S(a)S(b) for a={a}, b={b}"),
                );
            }
        }
    }
    Ok(())
}

// ---- criterion 5 ----

fn pullback_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        for n in 1..=6u32 {
            let big = VarietySpec::projective_space(n, pm(p));
            let h = CycleClass::generator(big.ring(), "h")?;
            for m in 0..n {
                let small = VarietySpec::projective_space(m, pm(p));
                let f = MorphismSpec::linear_projective_embedding(small.clone(), big.clone())?;
                let mut classes: Vec<CycleClass> = (0..=n).map(|j| h.pow(j).unwrap()).collect();
                for _ in 0..20 {
                    let codim = ctx.rng.gen_range(0..=n);
                    classes.push(random_homogeneous(big.ring(), &mut ctx.rng, codim));
                }
                for (i, class) in classes.iter().enumerate() {
                    let lhs = f.pullback(&big.coh_total(class)?)?;
                    let rhs = small.coh_total(&f.pullback(class)?)?;
                    ctx.case(
                        lhs == rhs,
                        || format!("pullback p={p} P{m} in P{n} case {i}"),
                        || format!("f* S != S f* on {class}"),
                    );
                }
            }
        }
    }
    Ok(())
}

fn pushforward_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        let pm1 = p as u32 - 1;
        for r in 1..=2 * pm1 {
            for xdim in [0u32, 1] {
                let x = VarietySpec::projective_product(&[xdim], pm(p));
                let rx = VarietySpec::projective_product(&[r, xdim], pm(p));
                let ring = rx.ring().clone();
                for k in 0..=ring.dimension() {
                    for (i, mono) in ring.monomials_of_codim(k).iter().enumerate() {
                        let raw = RawTerm {
                            coeff: 1,
                            factors: mono
                                .iter()
                                .enumerate()
                                .filter(|(_, &e)| e > 0)
                                .map(|(gi, &e)| (ring.generators()[gi].name.clone(), e))
                                .collect(),
                        };
                        let class = CycleClass::normalize(&ring, &vec![raw])?;
                        let lhs =
                            pushforward_projection(&rx, &x, &rx.hom_total(&class)?)?;
                        let rhs =
                            x.hom_total(&pushforward_projection(&rx, &x, &class)?)?;
                        ctx.case(
                            lhs == rhs,
                            || format!("pushforward p={p} P{r}xP{xdim} codim {k} case {i}"),
                            || format!("q_* S != S q_* on {class}"),
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

// ---- criterion 2 ----

fn prx_divisibility_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        let pm1 = (p - 1) as u32;
        for k in 1..=5u32 {
            let r = k * pm1;
            let ring = presets::projective_space(r, pm(p));
            let h = CycleClass::generator(&ring, "h")?;
            let base = CycleClass::one(&ring).add(&h.pow(pm1)?)?;
            let series = base.invert_unit_series()?.pow(r + 1)?;
            let mut top = vec![0u32; 1];
            top[0] = r;
            let series_coeff = series.coefficient(&top);
            let binom_route = binom_neg_mod_p((r + 1) as u64, k as u64, pm(p));
            ctx.case(
                series_coeff == binom_route,
                || format!("prx-divisibility p={p} k={k} route-agreement"),
                || {
                    format!(
                        "series gives {}, negative binomial gives {}",
                        series_coeff.residue(),
                        binom_route.residue()
                    )
                },
            );
            ctx.case(
                series_coeff.is_zero(),
                || format!("prx-divisibility p={p} k={k} vanishing"),
                || format!("coefficient of h^{r} is {}", series_coeff.residue()),
            );
        }
        // away from multiples of p-1 the coefficient vanishes by support
        for r in 1..=10u32 {
            if r % pm1 == 0 {
                continue;
            }
            let ring = presets::projective_space(r, pm(p));
            let h = CycleClass::generator(&ring, "h")?;
            let base = CycleClass::one(&ring).add(&h.pow((p - 1) as u32)?)?;
            let series = base.invert_unit_series()?.pow(r + 1)?;
            let coeff = series.coefficient(&vec![r]);
            ctx.case(
                coeff.is_zero(),
                || format!("prx-divisibility p={p} r={r} off-support"),
                || format!("coefficient of h^{r} is {}", coeff.residue()),
            );
        }
    }
    Ok(())
}

// ---- criterion 3 ----

fn random_split_bundle(
    ring: &Arc<RingSpec>,
    rng: &mut ChaCha8Rng,
    max_rank: usize,
) -> (BundleClass, Vec<CycleClass>) {
    let h1 = CycleClass::generator(ring, "h1").expect("product ring");
    let h2 = CycleClass::generator(ring, "h2").expect("product ring");
    let rank = rng.gen_range(0..=max_rank);
    let mut lines = Vec::with_capacity(rank);
    let mut bundle = BundleClass::trivial(ring, 0);
    for _ in 0..rank {
        let a = rng.gen_range(-2..3);
        let b = rng.gen_range(-2..3);
        let c1 = h1.scale(a).add(&h2.scale(b)).expect("same ring");
        lines.push(c1.clone());
        bundle = whitney_sum(&bundle, &BundleClass::line(&c1).expect("codim 1")).expect("sum");
    }
    (bundle, lines)
}

fn bclass_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        let ring = presets::projective_product(&[4, 4], pm(p));
        let h1 = CycleClass::generator(&ring, "h1")?;
        // b on a line bundle
        let line = BundleClass::line(&h1)?;
        let expected = CycleClass::one(&ring).add(&h1.pow((p - 1) as u32)?)?;
        let got = b_class(&line)?;
        ctx.case(
            got == expected,
            || format!("bclass p={p} line"),
            || format!("b(O(h1)) = {got}"),
        );
        let h2 = CycleClass::generator(&ring, "h2")?;
        for i in 0..200 {
            // b on a random line class
            let c1 = h1
                .scale(ctx.rng.gen_range(-2..3))
                .add(&h2.scale(ctx.rng.gen_range(-2..3)))?;
            let random_line = BundleClass::line(&c1)?;
            let lb = b_class(&random_line)?;
            let lb_expected = CycleClass::one(&ring).add(&c1.pow((p - 1) as u32)?)?;
            ctx.case(
                lb == lb_expected,
                || format!("bclass p={p} random line case {i}"),
                || format!("b(O({c1})) = {lb}, expected {lb_expected}"),
            );
            let (v, lines_v) = random_split_bundle(&ring, &mut ctx.rng, 3);
            let (w, _) = random_split_bundle(&ring, &mut ctx.rng, 3);
            // multiplicativity
            let sum = whitney_sum(&v, &w)?;
            let lhs = b_class(&sum)?;
            let rhs = b_class(&v)?.mul(&b_class(&w)?)?;
            ctx.case(
                lhs == rhs,
                || format!("bclass p={p} multiplicativity case {i}"),
                || format!("b(V+W) = {lhs} but b(V)b(W) = {rhs}"),
            );
            // c * s = 1
            let cs = segre_total(&v).mul(v.total_chern())?;
            ctx.case(
                cs == CycleClass::one(&ring),
                || format!("bclass p={p} segre case {i}"),
                || format!("c(V) s(V) = {cs}"),
            );
            // b against the literal product over the split lines
            if i < 50 {
                let mut literal = CycleClass::one(&ring);
                for c1 in &lines_v {
                    literal = literal.mul(&CycleClass::one(&ring).add(&c1.pow((p - 1) as u32)?)?)?;
                }
                let direct = b_class(&v)?;
                ctx.case(
                    direct == literal,
                    || format!("bclass p={p} literal case {i}"),
                    || format!("b(V) = {direct}, literal product = {literal}"),
                );
                // b(-V) inverts exactly
                let neg = b_class_neg(&v)?;
                let product = neg.mul(&direct)?;
                ctx.case(
                    product == CycleClass::one(&ring),
                    || format!("bclass p={p} inverse case {i}"),
                    || format!("b(V) b(-V) = {product}"),
                );
            }
            // at p = 2 the b-class is the total Chern class
            if p == 2 {
                let bc = b_class(&v)?;
                ctx.case(
                    bc == *v.total_chern(),
                    || format!("bclass p=2 chern case {i}"),
                    || format!("b(V) = {bc} differs from c(V)"),
                );
            }
        }
    }
    Ok(())
}

fn omega_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        let pm1 = (p - 1) as u32;
        let ring = presets::projective_product(&[4, 4], pm(p));
        let trivial = BundleClass::trivial(&ring, 4);
        let ot = omega_class(&trivial)?;
        ctx.case(
            ot == CycleClass::one(&ring),
            || format!("omega p={p} trivial"),
            || format!("omega(trivial) = {ot}"),
        );
        for i in 0..200 {
            let (v, _) = random_split_bundle(&ring, &mut ctx.rng, 5);
            let b = b_class(&v)?;
            let w = omega_class(&v)?;
            let mut ok = true;
            for k in 0..=(ring.dimension() / pm1) {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                if w.graded_component((k * pm1) as i64)
                    != b.graded_component((k * pm1) as i64).scale(sign)
                {
                    ok = false;
                }
            }
            ctx.case(
                ok,
                || format!("omega p={p} sign rule case {i}"),
                || format!("omega components disagree with signed b on c(V) = {}", v.total_chern()),
            );
        }
    }
    Ok(())
}

fn mu_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        let ring = presets::projective_product(&[4, 4], pm(p));
        for i in 0..200 {
            let (v, lines) = random_split_bundle(&ring, &mut ctx.rng, 4);
            let filtration = tensor_h_filtration(&ring, &lines)?;
            let mu = mu_class(&filtration);
            let sign = if v.rank() % 2 == 0 { 1 } else { -1 };
            let expected = omega_class(&v)?.scale(sign);
            ctx.case(
                mu == expected,
                || format!("mu p={p} tensor case {i}"),
                || format!("mu(V (x) H) = {mu}, expected (-1)^rank omega(V) = {expected}"),
            );
        }
        // single weighted line with zero Chern class: mu is the weight
        for w in 1..p as u32 {
            let f = FilteredGBundle::new(&ring, vec![(CycleClass::zero(&ring), w)])?;
            let mu = mu_class(&f);
            ctx.case(
                mu == CycleClass::constant(&ring, w as i64),
                || format!("mu p={p} constant weight {w}"),
                || format!("mu = {mu}"),
            );
        }
    }
    Ok(())
}

// ---- criterion 6 ----

fn torsor_equivalence_suite(ctx: &mut Ctx) -> Result<()> {
    for member in algebra_corpus() {
        let report = torsor_check(&member.algebra);
        ctx.case(
            !report.is_mixed(),
            || format!("torsor-equivalence mixed {}", member.label),
            || format!("conditions disagree: {:?}", report.conditions()),
        );
        if let Some(expected) = member.expect_torsor {
            ctx.case(
                report.is_torsor() == expected,
                || format!("torsor-equivalence classify {}", member.label),
                || {
                    format!(
                        "expected torsor={expected}, conditions {:?}",
                        report.conditions()
                    )
                },
            );
        }
    }
    Ok(())
}

// ---- criterion 7 ----

fn deformation_suite(ctx: &mut Ctx) -> Result<()> {
    for member in algebra_corpus() {
        let report = deformation_report(&member.algebra, 4);
        ctx.case(
            report.holds(),
            || format!("deformation {}", member.label),
            || {
                format!(
                    "slice identity {:?}, negative degrees {:?}",
                    report.slice_identity, report.negative_degree_vanishes
                )
            },
        );
    }
    Ok(())
}

// ---- criterion 8 ----

fn fibers_suite(ctx: &mut Ctx) -> Result<()> {
    let qs = [5u64, 7, 11, 13];
    for &p in &SUITE_PRIMES {
        let mut done = 0;
        while done < 50 {
            let q = qs[ctx.rng.gen_range(0..qs.len())];
            if q % p == 0 {
                continue;
            }
            let field = FqField::new(q)?;
            let a_int = ctx.rng.gen_range(1..q) as i64;
            let a = field.from_int(a_int);
            if field.is_zero(&a) {
                continue;
            }
            let decomposition = fiber_decomposition(q, pm(p), &a)?;
            let total: u64 = decomposition.iter().map(|&(d, c)| (d * c) as u64).sum();
            ctx.case(
                total == p,
                || format!("fibers p={p} q={q} a={a_int}"),
                || format!("degrees {decomposition:?} sum to {total}"),
            );
            done += 1;
        }
    }
    Ok(())
}

// ---- criterion 9 ----

fn random_rational(field: &FqField, rng: &mut ChaCha8Rng, max_deg: usize) -> RationalFunction {
    use crate::arith::poly::Poly;
    loop {
        let num = Poly::from_coeffs(
            field,
            (0..rng.gen_range(1..=max_deg + 1))
                .map(|_| field.from_int(rng.gen_range(-6..6)))
                .collect(),
        );
        let den = Poly::from_coeffs(
            field,
            (0..rng.gen_range(1..=max_deg))
                .map(|_| field.from_int(rng.gen_range(-6..6)))
                .collect(),
        );
        if num.is_zero() || den.is_zero() {
            continue;
        }
        return RationalFunction::new(field, num, den).expect("nonzero denominator");
    }
}

fn anticommute_suite(ctx: &mut Ctx) -> Result<()> {
    for (q, p) in [(7u64, 3u64), (13, 3), (5, 2), (7, 2)] {
        let field = FqField::new(q)?;
        let p = pm(p);
        for i in 0..100 {
            let a = random_rational(&field, &mut ctx.rng, 3);
            let f = random_rational(&field, &mut ctx.rng, 3);
            let ok = anticommute_check(&field, &a, &f, p)?;
            ctx.case(
                ok,
                || format!("anticommute q={q} p={p} case {i}"),
                || format!("a = {}, f = {}", a.display(&field), f.display(&field)),
            );
        }
        // p-th powers trivialize every applicable residue
        for i in 0..20 {
            let c = random_rational(&field, &mut ctx.rng, 2);
            let a = c.pow(p.get() as u32, &field)?;
            let f = random_rational(&field, &mut ctx.rng, 3);
            let places = crate::milnor::anticommute_places(&field, &a, &f, p)?;
            let all_trivial = places.iter().filter(|c| c.applicable).all(|check| {
                tame_symbol(&field, &a, &f, &check.place)
                    .and_then(|t| t.is_trivial(p))
                    .unwrap_or(false)
            });
            ctx.case(
                all_trivial && places.iter().all(|c| c.holds),
                || format!("anticommute q={q} p={p} pth-power case {i}"),
                || format!("a = {}, f = {}", a.display(&field), f.display(&field)),
            );
        }
        // Steinberg: {f, 1-f} has trivial residues everywhere
        for i in 0..100 {
            let f = random_rational(&field, &mut ctx.rng, 3);
            let g = RationalFunction::one(&field).sub(&f, &field)?;
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let mut places = support(&field, &f)?;
            for x in support(&field, &g)?.into_iter().chain([Place::Infinity]) {
                if !places.contains(&x) {
                    places.push(x);
                }
            }
            let ok = places.iter().all(|x| {
                tame_symbol(&field, &f, &g, x).and_then(|t| t.is_trivial(p)).unwrap_or(false)
            });
            ctx.case(
                ok,
                || format!("anticommute q={q} p={p} steinberg case {i}"),
                || format!("f = {}", f.display(&field)),
            );
        }
        // Weil reciprocity mod p over the same corpus
        for i in 0..50 {
            let f = random_rational(&field, &mut ctx.rng, 3);
            let g = random_rational(&field, &mut ctx.rng, 3);
            let mut places = support(&field, &f)?;
            for x in support(&field, &g)?.into_iter().chain([Place::Infinity]) {
                if !places.contains(&x) {
                    places.push(x);
                }
            }
            let mut product = field.one();
            for x in &places {
                let t = tame_symbol(&field, &f, &g, x)?;
                let norm = t.residue_field().norm(t.representative())?;
                product = field.mul(&product, &norm);
            }
            let m = field.order() - 1;
            let ok = if m % p.get() == 0 {
                field.pow(&product, m / p.get()) == field.one()
            } else {
                true
            };
            ctx.case(
                ok,
                || format!("anticommute q={q} p={p} reciprocity case {i}"),
                || format!("f = {}, g = {}", f.display(&field), g.display(&field)),
            );
        }
    }
    Ok(())
}

// ---- criterion 11 ----

fn lucas_suite(ctx: &mut Ctx) -> Result<()> {
    let primes: Vec<PrimeModulus> = [2u64, 3, 5, 7].iter().map(|&p| pm(p)).collect();
    for n in 0..2000u64 {
        // exact multiplicative row: C(n, k) = C(n, k-1) (n-k+1) / k, with
        // the symmetric half checked through C(n, n-k)
        let mut exact = BigUint::from(1u32);
        for k in 0..=n / 2 {
            if k > 0 {
                exact = exact * (n - k + 1) / k;
            }
            for p in &primes {
                let expected = (&exact % p.get()).to_u64_digits().first().copied().unwrap_or(0);
                let got_low = binom_mod_p(n, k, *p);
                let got_high = binom_mod_p(n, n - k, *p);
                let ok = got_low.residue() == expected && got_high.residue() == expected;
                ctx.cases += 1;
                if !ok {
                    ctx.failures.push(Failure {
                        case: format!("lucas n={n} k={k} p={p}"),
                        detail: format!(
                            "exact {expected}, digitwise {} / {}",
                            got_low.residue(),
                            got_high.residue()
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

// ---- criterion 4 ----

fn cone_pipeline_suite(ctx: &mut Ctx) -> Result<()> {
    for &p in &SUITE_PRIMES {
        for n in 1..=5u32 {
            let x = VarietySpec::projective_space(n, pm(p));
            let whole = cone_pipeline(&x, SupportedCycle::WholeVariety)?;
            ctx.case(
                whole.l_support_ok && whole.agree(),
                || format!("cone-pipeline p={p} P{n} whole"),
                || {
                    format!(
                        "l-support {}, classes {}, seeds {}",
                        whole.l_support_ok, whole.via_classes, whole.via_seeds
                    )
                },
            );
            for m in 0..n {
                let run = cone_pipeline(&x, SupportedCycle::LinearSubspace { m })?;
                ctx.case(
                    run.l_support_ok && run.agree(),
                    || format!("cone-pipeline p={p} P{m} in P{n}"),
                    || {
                        format!(
                            "l-support {}, classes {}, seeds {}",
                            run.l_support_ok, run.via_classes, run.via_seeds
                        )
                    },
                );
            }
        }
        for dims in [vec![1u32, 1], vec![1, 2], vec![2, 2]] {
            let x = VarietySpec::projective_product(&dims, pm(p));
            let run = cone_pipeline(&x, SupportedCycle::WholeVariety)?;
            ctx.case(
                run.l_support_ok && run.agree(),
                || format!("cone-pipeline p={p} {} whole", preset_label(&dims)),
                || {
                    format!(
                        "l-support {}, classes {}, seeds {}",
                        run.l_support_ok, run.via_classes, run.via_seeds
                    )
                },
            );
        }
    }
    Ok(())
}

// ---- criterion 10 ----

fn twist_suite(ctx: &mut Ctx) -> Result<()> {
    for member in algebra_corpus() {
        let algebra = &member.algebra;
        let p = algebra.prime().get();
        // fixed ideal is twist-invariant on every member
        for k in 1..p {
            let twisted = twist(algebra, k)?;
            ctx.case(
                twisted.fixed_ideal().basis() == algebra.fixed_ideal().basis(),
                || format!("twist fixed-ideal {} k={k}", member.label),
                || "fixed ideal moved under the twist".to_string(),
            );
        }
        // parameter law on torsors over a field
        if member.expect_torsor == Some(true) && algebra.grade_dims()[0] == 1 {
            let base = kummer_parameter(algebra)?;
            for k in 1..p {
                let twisted = twist(algebra, k)?;
                let lhs = kummer_parameter(&twisted)?;
                let ok = lhs.equals(&base.pow(k))?;
                ctx.case(
                    ok,
                    || format!("twist parameter {} k={k}", member.label),
                    || {
                        format!(
                            "parameter of the twist is {:?}, expected the k-th power of {:?}",
                            lhs.representative(),
                            base.representative()
                        )
                    },
                );
            }
        }
    }
    Ok(())
}
