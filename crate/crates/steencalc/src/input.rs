//! JSON input files: variety descriptions (ring presentation, tangent
//! class, seeds) and graded-algebra descriptions (basis per component,
//! sparse products, unit).

use crate::arith::{FqElement, FqField, PrimeModulus};
use crate::chow::{Generator, RewriteRule, RingKind, RingSpec};
use crate::chow::CycleClass;
use crate::error::{Error, Result};
use crate::expr;
use crate::mup::GradedAlgebra;
use crate::steenrod::{wu_seed, VarietySpec};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A variety file:
///
/// ```json
/// {
///   "prime": 2,
///   "dimension": 2,
///   "generators": [{"name": "h", "codim": 1, "nilpotency": 3, "divisor": true}],
///   "tangent_chern": "(1+h)^3"
/// }
/// ```
///
/// Optional fields: `relations` (monomial rewrite rules `{"lhs": "g^2",
/// "rhs": "-(h*g)"}`) and `steenrod_seeds` (expressions per generator).
/// Generators without an explicit seed must declare `"divisor": true`,
/// which asserts the geometric contract under which the divisor seed
/// g + g^p is correct.
#[derive(Debug, Clone, Deserialize)]
pub struct VarietyFile {
    pub prime: u64,
    pub dimension: u32,
    pub generators: Vec<GeneratorFile>,
    #[serde(default)]
    pub relations: Vec<RelationFile>,
    pub tangent_chern: String,
    #[serde(default)]
    pub steenrod_seeds: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GeneratorFile {
    pub name: String,
    pub codim: u32,
    #[serde(default)]
    pub nilpotency: Option<u32>,
    #[serde(default)]
    pub divisor: bool,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RelationFile {
    pub lhs: String,
    pub rhs: String,
}

impl VarietyFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("variety file does not parse: {e}")))
    }

    pub fn build(&self) -> Result<VarietySpec> {
        let p = PrimeModulus::new(self.prime)?;
        let generators: Vec<Generator> = self
            .generators
            .iter()
            .map(|g| Generator { name: g.name.clone(), codim: g.codim, nilpotency: g.nilpotency })
            .collect();

        // a first rule-free ring to parse the relation strings against
        let parse_ring = RingSpec::new(
            p,
            self.dimension,
            generators.clone(),
            vec![],
            RingKind::General,
            "parse",
        )?;
        let mut rules = Vec::with_capacity(self.relations.len());
        for rel in &self.relations {
            let lhs = monomial_exponents(&parse_ring, &rel.lhs)?;
            let rhs_class = expr::parse_cycle(&parse_ring, &rel.rhs)?;
            let rhs: Vec<(Vec<u32>, i64)> = rhs_class
                .terms()
                .map(|(m, c)| (m.clone(), c.residue() as i64))
                .collect();
            rules.push(RewriteRule { lhs, rhs });
        }

        let kind = if rules.is_empty()
            && generators.iter().all(|g| g.codim == 1 && g.nilpotency.is_some())
            && generators.iter().map(|g| g.nilpotency.unwrap() - 1).sum::<u32>() == self.dimension
        {
            RingKind::ProjectiveProduct(
                generators.iter().map(|g| g.nilpotency.unwrap() - 1).collect(),
            )
        } else {
            RingKind::General
        };
        let ring = RingSpec::new(p, self.dimension, generators, rules, kind, "variety-file")?;

        let tangent = expr::parse_cycle(&ring, &self.tangent_chern)?;
        let mut seeds = BTreeMap::new();
        for g in &self.generators {
            if let Some(text) = self.steenrod_seeds.get(&g.name) {
                seeds.insert(g.name.clone(), expr::parse_cycle(&ring, text)?);
            } else if g.divisor {
                seeds.insert(g.name.clone(), wu_seed(&ring, &g.name)?);
            } else {
                return Err(Error::Input(format!(
                    "generator `{}` needs either a seed expression or \"divisor\": true",
                    g.name
                )));
            }
        }
        VarietySpec::new(ring, tangent, seeds)
    }
}

/// A single monomial with coefficient 1, as exponents, read literally
/// against a truncation-free shadow of the ring.
fn monomial_exponents(ring: &Arc<RingSpec>, text: &str) -> Result<Vec<u32>> {
    let shadow = RingSpec::new(
        ring.modulus(),
        u32::MAX / 2,
        ring.generators()
            .iter()
            .map(|g| Generator { name: g.name.clone(), codim: g.codim, nilpotency: None })
            .collect(),
        vec![],
        RingKind::General,
        "lhs-shadow",
    )?;
    let class = expr::parse_cycle(&shadow, text)?;
    let terms: Vec<(&Vec<u32>, crate::arith::FpElement)> = class.terms().collect();
    match terms.as_slice() {
        [(mono, c)] if c.residue() == 1 => Ok((*mono).clone()),
        _ => Err(Error::Input(format!(
            "relation left side `{text}` must be a single monomial with coefficient 1"
        ))),
    }
}

/// Resolves `--variety`: a preset name (`P3`, `P1xP2`) or a JSON file path.
pub fn load_variety(arg: &str, prime_for_preset: Option<u64>) -> Result<VarietySpec> {
    if let Some(dims) = crate::chow::presets::parse_product_name(arg) {
        let p = prime_for_preset.ok_or_else(|| {
            Error::Input("a preset variety needs --prime".into())
        })?;
        return Ok(VarietySpec::projective_product(&dims, PrimeModulus::new(p)?));
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Input(format!("cannot read `{arg}`: {e}")))?;
    VarietyFile::parse(&text)?.build()
}

/// An algebra file:
///
/// ```json
/// {
///   "p": 3, "q": 7,
///   "components": {"0": ["e"], "1": ["t"], "2": ["t2"]},
///   "products": [["t","t","t2"], ["t","t2","3*e"], ["t2","t2","3*t"]],
///   "unit": "e"
/// }
/// ```
///
/// Component keys are residues mod p; products list basis pairs with an
/// F_q-linear combination of basis names (unlisted non-unit pairs are
/// zero; unit products follow from the unit law).
#[derive(Debug, Clone, Deserialize)]
pub struct AlgebraFile {
    pub p: u64,
    pub q: u64,
    pub components: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub products: Vec<(String, String, String)>,
    pub unit: String,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("algebra file does not parse: {e}")))
    }

    pub fn build(&self) -> Result<GradedAlgebra> {
        let p = PrimeModulus::new(self.p)?;
        let field = FqField::new(self.q)?;
        let pg = self.p as usize;
        let mut names: Vec<String> = Vec::new();
        let mut grade_dims = vec![0usize; pg];
        for key in self.components.keys() {
            let grade: usize = key
                .parse()
                .map_err(|_| Error::Input(format!("component key `{key}` is not a residue")))?;
            if grade >= pg {
                return Err(Error::Input(format!("component key `{key}` exceeds p - 1")));
            }
        }
        // fixed order: grades ascending, then file order within a grade
        for g in 0..pg {
            if let Some(basis) = self.components.get(&g.to_string()) {
                grade_dims[g] = basis.len();
                names.extend(basis.iter().cloned());
            }
        }
        let total = names.len();
        let index_of = |name: &str| -> Result<usize> {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Input(format!("unknown basis element `{name}`")))
        };
        let unit_idx = index_of(&self.unit)?;
        let mut unit = vec![field.zero(); total];
        unit[unit_idx] = field.one();

        let mut table: Vec<Vec<Option<Vec<FqElement>>>> = vec![vec![None; total]; total];
        for (a, b, rhs) in &self.products {
            let ia = index_of(a)?;
            let ib = index_of(b)?;
            let v = parse_linear_combination(&field, &names, rhs)?;
            for (x, y) in [(ia, ib), (ib, ia)] {
                if let Some(prev) = &table[x][y] {
                    if *prev != v {
                        return Err(Error::Input(format!(
                            "conflicting products for {a}*{b}"
                        )));
                    }
                }
                table[x][y] = Some(v.clone());
            }
        }
        // the unit row/column follows from the unit law
        for i in 0..total {
            let mut e = vec![field.zero(); total];
            e[i] = field.one();
            if let Some(prev) = &table[unit_idx][i] {
                if *prev != e {
                    return Err(Error::Input(format!(
                        "product of the unit with `{}` contradicts the unit law",
                        names[i]
                    )));
                }
            }
            table[unit_idx][i] = Some(e.clone());
            table[i][unit_idx] = Some(e);
        }
        let table: Vec<Vec<Vec<FqElement>>> = table
            .into_iter()
            .map(|row| {
                row.into_iter().map(|v| v.unwrap_or_else(|| vec![field.zero(); total])).collect()
            })
            .collect();
        GradedAlgebra::from_table(p, field, grade_dims, names, unit, table)
    }
}

/// `3*e + t` as a coordinate vector over the basis names.
fn parse_linear_combination(
    field: &FqField,
    names: &[String],
    text: &str,
) -> Result<Vec<FqElement>> {
    struct Lin<'a> {
        field: &'a FqField,
        names: &'a [String],
    }
    #[derive(Clone)]
    struct Val {
        scalar: FqElement,
        vector: Vec<FqElement>,
        is_vector: bool,
    }
    impl expr::ExprAlgebra for Lin<'_> {
        type Value = Val;

        fn integer(&self, n: i64) -> Result<Val> {
            Ok(Val {
                scalar: self.field.from_int(n),
                vector: vec![self.field.zero(); self.names.len()],
                is_vector: false,
            })
        }

        fn symbol(&self, name: &str, pos: usize) -> Result<Val> {
            let idx = self.names.iter().position(|n| n == name).ok_or_else(|| Error::Parse {
                pos,
                msg: format!("unknown basis element `{name}`"),
            })?;
            let mut vector = vec![self.field.zero(); self.names.len()];
            vector[idx] = self.field.one();
            Ok(Val { scalar: self.field.zero(), vector, is_vector: true })
        }

        fn add(&self, a: Val, b: Val) -> Result<Val> {
            if a.is_vector != b.is_vector {
                return Err(Error::Input(
                    "cannot add a bare scalar to a basis combination; write c*<name>".into(),
                ));
            }
            Ok(Val {
                scalar: self.field.add(&a.scalar, &b.scalar),
                vector: a
                    .vector
                    .iter()
                    .zip(&b.vector)
                    .map(|(x, y)| self.field.add(x, y))
                    .collect(),
                is_vector: a.is_vector,
            })
        }

        fn sub(&self, a: Val, b: Val) -> Result<Val> {
            let neg = Val {
                scalar: self.field.neg(&b.scalar),
                vector: b.vector.iter().map(|x| self.field.neg(x)).collect(),
                is_vector: b.is_vector,
            };
            self.add(a, neg)
        }

        fn mul(&self, a: Val, b: Val) -> Result<Val> {
            let (scalar_side, vector_side) = match (a.is_vector, b.is_vector) {
                (false, false) => {
                    return Ok(Val {
                        scalar: self.field.mul(&a.scalar, &b.scalar),
                        vector: a.vector,
                        is_vector: false,
                    })
                }
                (false, true) => (a, b),
                (true, false) => (b, a),
                (true, true) => {
                    return Err(Error::Input(
                        "products of basis elements belong in the products table".into(),
                    ))
                }
            };
            Ok(Val {
                scalar: self.field.zero(),
                vector: vector_side
                    .vector
                    .iter()
                    .map(|x| self.field.mul(x, &scalar_side.scalar))
                    .collect(),
                is_vector: true,
            })
        }

        fn pow(&self, a: Val, exp: u32) -> Result<Val> {
            if a.is_vector {
                return Err(Error::Input("cannot exponentiate basis elements here".into()));
            }
            Ok(Val {
                scalar: self.field.pow(&a.scalar, exp as u64),
                vector: a.vector,
                is_vector: false,
            })
        }
    }

    let lin = Lin { field, names };
    let v = expr::parse_with(&lin, text)?;
    if v.is_vector {
        Ok(v.vector)
    } else if field.is_zero(&v.scalar) {
        Ok(vec![field.zero(); names.len()])
    } else {
        Err(Error::Input(format!(
            "`{text}` is a bare scalar; write it as a multiple of a basis name"
        )))
    }
}

pub fn load_algebra(path: &str) -> Result<GradedAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read `{path}`: {e}")))?;
    AlgebraFile::parse(&text)?.build()
}

/// Serialized form of a cycle class: the monomial-keyed coefficient table.
pub fn class_to_json(class: &CycleClass) -> serde_json::Value {
    let table = class.coefficient_table();
    serde_json::Value::Object(
        table
            .into_iter()
            .map(|(k, v)| (k, serde_json::Value::Number(v.into())))
            .collect(),
    )
}
